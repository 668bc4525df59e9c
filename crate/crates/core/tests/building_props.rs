use btquot::building::{Building, BuildingError, LaurentScalar};
use proptest::prelude::*;

type Entry = (i64, Vec<u32>);

/// `det` over `F_p[pi]` by permutation expansion.
fn det(p: u64, m: &[Vec<Vec<u64>>]) -> Vec<u64> {
    let n = m.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = vec![0u64];
    permute(&mut perm, 0, &mut |perm: &[usize]| {
        let inversions = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| perm[i] > perm[j])
            .count();
        let mut term = vec![if inversions % 2 == 0 { 1 } else { p - 1 }];
        for (i, &j) in perm.iter().enumerate() {
            term = mul(p, &term, &m[i][j]);
        }
        total = add(p, &total, &term);
    });
    total
}

fn permute(perm: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == perm.len() {
        f(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute(perm, k + 1, f);
        perm.swap(k, i);
    }
}

fn add(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    (0..a.len().max(b.len()))
        .map(|i| (a.get(i).unwrap_or(&0) + b.get(i).unwrap_or(&0)) % p)
        .collect()
}

fn mul(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out = vec![0; a.len() + b.len()];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    out
}

fn matrix(n: usize, p: u32) -> impl Strategy<Value = Vec<Vec<Entry>>> {
    let entry = (-1i64..=1, prop::collection::vec(0..p, 0..3));
    prop::collection::vec(prop::collection::vec(entry, n), n)
}

fn case() -> impl Strategy<Value = (usize, u32, Vec<Vec<Entry>>)> {
    (2usize..=3, prop::sample::select(vec![2u32, 3]))
        .prop_flat_map(|(n, p)| (Just(n), Just(p), matrix(n, p)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(160))]

    #[test]
    fn apply_gl_shifts_type_by_det_valuation((n, p, g) in case()) {
        let b = Building::new(n, p, 12).unwrap();
        // pi * g is integral; ord det g = ord det(pi g) - n
        let integral: Vec<Vec<Vec<u64>>> = g
            .iter()
            .map(|row| {
                row.iter()
                    .map(|(s, c)| {
                        let mut v = vec![0u64; (s + 1) as usize];
                        v.extend(c.iter().map(|&x| x as u64));
                        v
                    })
                    .collect()
            })
            .collect();
        let d = det(p as u64, &integral);
        let Some(ord) = d.iter().position(|&c| c != 0) else {
            let gl: Vec<Vec<LaurentScalar>> = g
                .iter()
                .map(|row| row.iter().map(|(s, c)| LaurentScalar::new(*s, c.clone())).collect())
                .collect();
            prop_assert_eq!(b.apply_gl(&gl, &b.standard_vertex()), Err(BuildingError::SingularBasis));
            return Ok(());
        };
        let shift = (ord as i64 - n as i64).rem_euclid(n as i64) as usize;
        let gl: Vec<Vec<LaurentScalar>> = g
            .iter()
            .map(|row| row.iter().map(|(s, c)| LaurentScalar::new(*s, c.clone())).collect())
            .collect();
        let v = b.standard_vertex();
        let w = match b.apply_gl(&gl, &v) {
            Ok(w) => w,
            Err(BuildingError::PrecisionExceeded(_)) => return Ok(()),
            Err(e) => return Err(TestCaseError::fail(e.to_string())),
        };
        prop_assert_eq!(w.vertex_type(), shift);
        let around_w = b.neighbors(&w).unwrap();
        for u in b.neighbors(&v).unwrap() {
            let gu = match b.apply_gl(&gl, &u) {
                Ok(x) => x,
                Err(BuildingError::PrecisionExceeded(_)) => continue,
                Err(e) => return Err(TestCaseError::fail(e.to_string())),
            };
            prop_assert_eq!(gu.vertex_type(), (u.vertex_type() + shift) % n);
            prop_assert!(around_w.contains(&gu));
        }
    }
}

#[test]
fn canonical_forms_of_ball_vertices_are_fixed_points() {
    for (n, p) in [(2usize, 2u32), (2, 3), (3, 2), (3, 3)] {
        let b = Building::for_radius(n, p, 2).unwrap();
        let ball = b.ball(&b.standard_vertex(), 2).unwrap();
        for (v, &dist) in ball.vertices().iter().zip(ball.distances()) {
            assert_eq!(&b.canonical_form(&v.basis()).unwrap(), v);
            assert!(v.exponents().iter().all(|&d| d <= dist));
            // not contained in pi O^n: some basis entry is a unit
            assert!(v.basis().iter().flatten().any(|x| x.ord() == Some(0)));
        }
    }
}

#[test]
fn ball_simplices_have_distinct_types() {
    for (n, p, r) in [(3usize, 2u32, 2usize), (3, 3, 1), (4, 2, 1)] {
        let b = Building::for_radius(n, p, r).unwrap();
        let ball = b.ball(&b.standard_vertex(), r).unwrap();
        let x = ball.complex();
        for dim in 1..n {
            for id in x.simplex_ids(dim) {
                let vs = x
                    .simplex_vertices(btquot::simplicial::SimplexRef { dim, id })
                    .unwrap();
                let types: std::collections::BTreeSet<usize> = vs
                    .iter()
                    .map(|v| ball.vertices()[v.0 as usize].vertex_type())
                    .collect();
                assert_eq!(types.len(), dim + 1);
            }
        }
    }
}

#[test]
fn ball_guard_rejects_huge_requests() {
    let b = Building::for_radius(3, 3, 6).unwrap();
    assert!(matches!(
        b.ball(&b.standard_vertex(), 6),
        Err(BuildingError::TooLarge { .. })
    ));
    assert!(matches!(
        Building::new(13, 2, 4),
        Err(BuildingError::FieldTooLarge { .. })
    ));
}
