//! Random finite complexes with admissible group actions.
//!
//! A small permutation group `G` acts on a vertex set made of a few coset
//! spaces `G / <h>`; simplices are `G`-orbits of vertex sets with at most one
//! vertex per coset space, closed under faces. Some simplex orbits are
//! doubled into two parallel layers, which `G` may swap through the sign
//! character of its permutation representation.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use rand::seq::SliceRandom;
use rand::Rng;

use super::action::{Action, GeneratorSpec};
use super::complex::{build_complex, Complex, ComplexSpec, SimplexId};

/// A finite group given by permutation generators, with every element
/// listed. Element 0 is the identity.
#[derive(Debug, Clone)]
pub struct PermGroup {
    pub name: String,
    generators: Vec<usize>,
    elements: Vec<Vec<usize>>,
    lookup: HashMap<Vec<usize>, usize>,
}

impl PermGroup {
    pub fn generated_by(name: &str, points: usize, gens: &[Vec<usize>]) -> Self {
        let identity: Vec<usize> = (0..points).collect();
        let mut elements = vec![identity.clone()];
        let mut lookup = HashMap::from([(identity, 0)]);
        let mut queue = VecDeque::from([0]);
        while let Some(i) = queue.pop_front() {
            for g in gens {
                let next: Vec<usize> = elements[i].iter().map(|&x| g[x]).collect();
                if !lookup.contains_key(&next) {
                    lookup.insert(next.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(next);
                }
            }
        }
        let generators = gens.iter().map(|g| lookup[g]).collect();
        Self {
            name: name.to_owned(),
            generators,
            elements,
            lookup,
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Index of `a * b` (apply `b` first).
    pub fn mul(&self, a: usize, b: usize) -> usize {
        let prod: Vec<usize> = self.elements[b]
            .iter()
            .map(|&x| self.elements[a][x])
            .collect();
        self.lookup[&prod]
    }

    /// Whether element `g` is an odd permutation.
    pub fn is_odd(&self, g: usize) -> bool {
        let perm = &self.elements[g];
        let mut seen = vec![false; perm.len()];
        let mut transpositions = 0;
        for start in 0..perm.len() {
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = perm[x];
                len += 1;
            }
            if len > 0 {
                transpositions += len - 1;
            }
        }
        transpositions % 2 == 1
    }

    fn cyclic_subgroup(&self, h: usize) -> Vec<usize> {
        let mut out = vec![0];
        let mut x = h;
        while x != 0 {
            out.push(x);
            x = self.mul(h, x);
        }
        out
    }
}

fn cycle(points: usize, cyc: &[usize]) -> Vec<usize> {
    let mut p: Vec<usize> = (0..points).collect();
    for (i, &a) in cyc.iter().enumerate() {
        p[a] = cyc[(i + 1) % cyc.len()];
    }
    p
}

fn product(points: usize, cycles: &[&[usize]]) -> Vec<usize> {
    let mut p: Vec<usize> = (0..points).collect();
    for c in cycles {
        let q = cycle(points, c);
        p = p.iter().map(|&x| q[x]).collect();
    }
    p
}

/// A catalogue of groups of order at most `max_order`.
pub fn small_groups(max_order: usize) -> Vec<PermGroup> {
    let mut groups = Vec::new();
    for m in 1..=max_order {
        let pts: Vec<usize> = (0..m).collect();
        groups.push(PermGroup::generated_by(
            &format!("C{m}"),
            m,
            &[cycle(m, &pts)],
        ));
    }
    for k in 3..=max_order / 2 {
        let pts: Vec<usize> = (0..k).collect();
        let reflection: Vec<usize> = (0..k).map(|i| (k - i) % k).collect();
        groups.push(PermGroup::generated_by(
            &format!("D{k}"),
            k,
            &[cycle(k, &pts), reflection],
        ));
    }
    let extra: Vec<(&str, usize, Vec<Vec<usize>>)> = vec![
        (
            "C2xC2",
            4,
            vec![
                product(4, &[&[0, 1], &[2, 3]]),
                product(4, &[&[0, 2], &[1, 3]]),
            ],
        ),
        ("C2xC4", 6, vec![cycle(6, &[0, 1]), cycle(6, &[2, 3, 4, 5])]),
        (
            "C2xC6",
            8,
            vec![cycle(8, &[0, 1]), cycle(8, &[2, 3, 4, 5, 6, 7])],
        ),
        ("C3xC3", 6, vec![cycle(6, &[0, 1, 2]), cycle(6, &[3, 4, 5])]),
        (
            "C2xC2xC2",
            6,
            vec![cycle(6, &[0, 1]), cycle(6, &[2, 3]), cycle(6, &[4, 5])],
        ),
        (
            "A4",
            4,
            vec![cycle(4, &[0, 1, 2]), product(4, &[&[0, 1], &[2, 3]])],
        ),
    ];
    for (name, pts, gens) in extra {
        let g = PermGroup::generated_by(name, pts, &gens);
        if g.order() <= max_order {
            groups.push(g);
        }
    }
    groups
}

/// A generated complex together with the action of its group.
#[derive(Debug, Clone)]
pub struct RandomCase {
    pub group: String,
    pub complex: Complex,
    pub action: Action,
}

struct Orbit {
    offset: u64,
    /// Coset index of every group element.
    coset_of: Vec<usize>,
    representatives: Vec<usize>,
}

/// Draws a complex with an admissible action of a group of order at most
/// `max_order`, with at most `max_simplices` simplices in total.
pub fn random_admissible_case<R: Rng>(
    rng: &mut R,
    max_order: usize,
    max_simplices: usize,
) -> RandomCase {
    let groups = small_groups(max_order);
    loop {
        let group = groups.choose(rng).expect("nonempty catalogue");
        if let Some(case) = try_case(rng, group, max_simplices) {
            return case;
        }
    }
}

fn try_case<R: Rng>(rng: &mut R, group: &PermGroup, max_simplices: usize) -> Option<RandomCase> {
    let n_orbits = rng.gen_range(1..=4usize);
    let mut orbits = Vec::new();
    let mut offset = 0u64;
    for _ in 0..n_orbits {
        let h = rng.gen_range(0..group.order());
        let sub = group.cyclic_subgroup(h);
        let mut coset_of = vec![usize::MAX; group.order()];
        let mut representatives = Vec::new();
        for x in 0..group.order() {
            if coset_of[x] != usize::MAX {
                continue;
            }
            for &y in &sub {
                coset_of[group.mul(x, y)] = representatives.len();
            }
            representatives.push(x);
        }
        let size = representatives.len() as u64;
        orbits.push(Orbit {
            offset,
            coset_of,
            representatives,
        });
        offset += size;
    }
    let n_vertices = offset as usize;
    if n_vertices > max_simplices {
        return None;
    }
    let act_vertex = |g: usize, v: u64| -> u64 {
        let o = orbits
            .iter()
            .rposition(|o| o.offset <= v)
            .expect("vertex belongs to an orbit");
        let orbit = &orbits[o];
        let x = orbit.representatives[(v - orbit.offset) as usize];
        orbit.offset + orbit.coset_of[group.mul(g, x)] as u64
    };
    let act_set = |g: usize, s: &[u64]| -> Vec<u64> {
        let mut out: Vec<u64> = s.iter().map(|&v| act_vertex(g, v)).collect();
        out.sort_unstable();
        out
    };

    let mut sets: BTreeSet<Vec<u64>> = BTreeSet::new();
    for _ in 0..rng.gen_range(0..=3) {
        let mut chosen: Vec<usize> = (0..orbits.len()).collect();
        chosen.shuffle(rng);
        chosen.truncate(rng.gen_range(1..=orbits.len()));
        if chosen.len() < 2 {
            continue;
        }
        let seed: Vec<u64> = chosen
            .iter()
            .map(|&o| orbits[o].offset + rng.gen_range(0..orbits[o].representatives.len()) as u64)
            .collect();
        for g in 0..group.order() {
            let image = act_set(g, &seed);
            for mask in 1u32..(1 << image.len()) {
                if mask.count_ones() >= 2 {
                    let face: Vec<u64> = image
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask & (1 << i) != 0)
                        .map(|(_, &v)| v)
                        .collect();
                    sets.insert(face);
                }
            }
        }
    }

    // Layer count and twist per orbit of vertex sets.
    let mut layering: BTreeMap<Vec<u64>, (usize, bool)> = BTreeMap::new();
    for s in &sets {
        if layering.contains_key(s) {
            continue;
        }
        let layers = if rng.gen_bool(0.3) { 2 } else { 1 };
        let twisted = rng.gen_bool(0.5);
        for g in 0..group.order() {
            layering.insert(act_set(g, s), (layers, twisted));
        }
    }

    let total = n_vertices + layering.values().map(|&(l, _)| l).sum::<usize>();
    if total > max_simplices {
        return None;
    }

    // Simplex ids: position within its dimension, in (vertex set, layer) order.
    let mut ids: HashMap<(Vec<u64>, usize), u64> = HashMap::new();
    let mut next_id: BTreeMap<usize, u64> = BTreeMap::new();
    let mut spec = ComplexSpec::default();
    for v in 0..n_vertices as u64 {
        spec.vertex(v, None);
    }
    for (s, &(layers, _)) in &layering {
        for l in 0..layers {
            let counter = next_id.entry(s.len() - 1).or_insert(0);
            ids.insert((s.clone(), l), *counter);
            spec.simplex(*counter, s);
            *counter += 1;
        }
    }
    let complex = build_complex(&spec).expect("face-closed by construction");

    let generators: Vec<GeneratorSpec> = group
        .generators
        .iter()
        .map(|&g| {
            let pairs: Vec<(u64, u64)> = (0..n_vertices as u64)
                .map(|v| (v, act_vertex(g, v)))
                .collect();
            let mut gen = GeneratorSpec::from_vertex_map(&pairs);
            for (s, &(layers, twisted)) in &layering {
                let image = act_set(g, s);
                for l in 0..layers {
                    let target = if layers == 2 && twisted && group.is_odd(g) {
                        1 - l
                    } else {
                        l
                    };
                    gen.simplices.entry(s.len() - 1).or_default().insert(
                        SimplexId(ids[&(s.clone(), l)]),
                        SimplexId(ids[&(image.clone(), target)]),
                    );
                }
            }
            gen
        })
        .collect();
    let action = Action::new(&complex, &generators).expect("consistent by construction");
    Some(RandomCase {
        group: group.name.clone(),
        complex,
        action,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::{
        euler_characteristic, quotient, quotient_euler_check, validate_action,
    };
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn catalogue_orders() {
        let groups = small_groups(12);
        assert!(groups.iter().all(|g| g.order() <= 12));
        let a4 = groups.iter().find(|g| g.name == "A4").unwrap();
        assert_eq!(a4.order(), 12);
        assert!(groups.iter().any(|g| g.name == "D6" && g.order() == 12));
    }

    #[test]
    fn random_cases_are_admissible_and_satisfy_the_orbit_formula() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let case = random_admissible_case(&mut rng, 12, 40);
            let total: usize = case.complex.counts().iter().sum();
            assert!(total <= 40);
            assert!(case.action.group_order() <= 12);
            let r = validate_action(&case.complex, &case.action).unwrap();
            assert!(r.star_ok && r.admissible, "{:?}", r.offenders);
            let rep = quotient_euler_check(&case.complex, &case.action).unwrap();
            assert!(rep.equal);
            let q = quotient(&case.complex, &case.action).unwrap();
            assert_eq!(
                BigRational::from(euler_characteristic(&q.quotient)),
                rep.rhs
            );
        }
    }

    use crate::exactnum::BigRational;
}
