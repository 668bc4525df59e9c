use btquot::exactnum::BigInteger;
use btquot::simplicial::{build_complex, euler_characteristic, parse_dump, to_dump, ComplexSpec};
use proptest::prelude::*;

/// Random complex on `n` vertices generated by some maximal faces, closed
/// under taking faces.
fn complex_spec() -> impl Strategy<Value = (usize, Vec<Vec<u64>>)> {
    (2usize..7)
        .prop_flat_map(|n| {
            let face = prop::collection::btree_set(0..n as u64, 1..=3usize.min(n));
            (Just(n), prop::collection::vec(face, 1..5))
        })
        .prop_map(|(n, faces)| {
            let mut all = std::collections::BTreeSet::new();
            for f in faces {
                let f: Vec<u64> = f.into_iter().collect();
                for mask in 1u32..(1 << f.len()) {
                    let sub: Vec<u64> = (0..f.len())
                        .filter(|i| mask >> i & 1 == 1)
                        .map(|i| f[i])
                        .collect();
                    if sub.len() > 1 {
                        all.insert(sub);
                    }
                }
            }
            (n, all.into_iter().collect())
        })
}

fn spec_of(n: usize, simplices: &[Vec<u64>], extra_apex: bool) -> ComplexSpec {
    let mut spec = ComplexSpec::default();
    for v in 0..n as u64 {
        spec.vertex(v, None);
    }
    let apex = n as u64;
    if extra_apex {
        spec.vertex(apex, Some("apex"));
    }
    let mut next_id = std::collections::BTreeMap::<usize, u64>::new();
    let mut add = |spec: &mut ComplexSpec, s: &[u64]| {
        let id = next_id.entry(s.len()).or_default();
        spec.simplex(*id, s);
        *id += 1;
    };
    for s in simplices {
        add(&mut spec, s);
    }
    if extra_apex {
        for v in 0..n as u64 {
            add(&mut spec, &[v, apex]);
        }
        for s in simplices {
            let mut c = s.clone();
            c.push(apex);
            add(&mut spec, &c);
        }
    }
    spec
}

proptest! {
    #[test]
    fn cones_have_euler_characteristic_one((n, simplices) in complex_spec()) {
        let cone = build_complex(&spec_of(n, &simplices, true)).unwrap();
        prop_assert_eq!(euler_characteristic(&cone), BigInteger::from(1));
    }

    #[test]
    fn dumps_round_trip((n, simplices) in complex_spec()) {
        let x = build_complex(&spec_of(n, &simplices, false)).unwrap();
        let text = to_dump(&x);
        let y = parse_dump(&text).unwrap();
        prop_assert_eq!(to_dump(&y), text);
        prop_assert_eq!(x.counts(), y.counts());
    }
}
