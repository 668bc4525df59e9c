use num_traits::{One, Zero};

use super::action::{validate_action, Action, OffenseKind};
use super::complex::{euler_characteristic, Complex, Record, SimplexId, SimplexRef, VertexSpec};
use super::SimplicialError;
use crate::exactnum::{BigInteger, BigRational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitInfo {
    /// Smallest-id simplex of the orbit in the source complex.
    pub representative: SimplexRef,
    pub size: usize,
    pub stabilizer_order: usize,
}

/// `G \ X` together with per-orbit bookkeeping. Quotient simplex `k` of
/// dimension `d` has id `k` and corresponds to `orbits[d][k]`.
#[derive(Debug, Clone)]
pub struct QuotientResult {
    pub quotient: Complex,
    pub orbits: Vec<Vec<OrbitInfo>>,
    pub group_order: usize,
}

impl QuotientResult {
    pub fn orbit_counts(&self) -> Vec<usize> {
        self.orbits.iter().map(Vec::len).collect()
    }
}

pub fn quotient(x: &Complex, a: &Action) -> Result<QuotientResult, SimplicialError> {
    let report = validate_action(x, a)?;
    if !report.star_ok {
        return Err(SimplicialError::StarViolation);
    }
    if report
        .offenders
        .iter()
        .any(|o| o.kind == OffenseKind::VerticesShareOrbit)
    {
        return Err(SimplicialError::NotAdmissible);
    }

    let mut orbits = Vec::with_capacity(x.layers.len());
    let mut orbit_of = Vec::with_capacity(x.layers.len());
    for (d, layer) in x.layers.iter().enumerate() {
        let (ids, count) = a.orbit_ids(d);
        let mut infos: Vec<Option<OrbitInfo>> = vec![None; count];
        for (i, rec) in layer.iter().enumerate() {
            if infos[ids[i]].is_some() {
                continue;
            }
            let stabilizer_order = (0..a.group_order())
                .filter(|&g| a.apply(g, d, i) == i)
                .count();
            let size = ids.iter().filter(|&&o| o == ids[i]).count();
            // layers are sorted by id, so the first member seen is the smallest
            infos[ids[i]] = Some(OrbitInfo {
                representative: SimplexRef { dim: d, id: rec.id },
                size,
                stabilizer_order,
            });
        }
        orbits.push(infos.into_iter().map(Option::unwrap).collect::<Vec<_>>());
        orbit_of.push(ids);
    }

    let vertices: Vec<VertexSpec> = orbits[0]
        .iter()
        .enumerate()
        .map(|(k, info)| VertexSpec {
            id: super::VertexId(k as u64),
            label: x
                .vertex_label(super::VertexId(info.representative.id.0))
                .map(str::to_owned),
        })
        .collect();
    let layers: Vec<Vec<Record>> = orbits
        .iter()
        .enumerate()
        .map(|(d, infos)| {
            infos
                .iter()
                .enumerate()
                .map(|(k, info)| {
                    let rec = x
                        .record(info.representative)
                        .expect("representative exists");
                    let mut verts: Vec<usize> = rec.verts.iter().map(|&v| orbit_of[0][v]).collect();
                    verts.sort_unstable();
                    debug_assert!(d > 0 || verts == vec![k]);
                    Record {
                        id: SimplexId(k as u64),
                        verts,
                    }
                })
                .collect()
        })
        .collect();
    let quotient = Complex::from_layers(vertices, layers);
    Ok(QuotientResult {
        quotient,
        orbits,
        group_order: a.group_order(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientEulerReport {
    /// Euler characteristic of the quotient, by counting its simplices.
    pub lhs: BigRational,
    /// `chi(X)/#G + sum_i (-1)^i sum_{orbits} (1 - 1/#stabilizer)`.
    pub rhs: BigRational,
    pub equal: bool,
}

/// Checks the orbit-counting formula for the Euler characteristic of a
/// quotient by a finite group.
pub fn quotient_euler_check(
    x: &Complex,
    a: &Action,
) -> Result<QuotientEulerReport, SimplicialError> {
    let q = quotient(x, a)?;
    let lhs = BigRational::from(euler_characteristic(&q.quotient));
    let order = BigInteger::from(a.group_order());
    let mut rhs = BigRational::new(euler_characteristic(x), order);
    for (d, infos) in q.orbits.iter().enumerate() {
        let mut term = BigRational::zero();
        for info in infos {
            term += BigRational::one()
                - BigRational::new(BigInteger::one(), BigInteger::from(info.stabilizer_order));
        }
        if d % 2 == 0 {
            rhs += term;
        } else {
            rhs -= term;
        }
    }
    let equal = lhs == rhs;
    Ok(QuotientEulerReport { lhs, rhs, equal })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::action::tests::{flip, hexagon, path, rotate_by_two};
    use crate::simplicial::{build_complex, ComplexSpec, GeneratorSpec};

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn hexagon_quotient_has_parallel_edges() {
        let x = hexagon();
        let a = Action::new(&x, &[rotate_by_two()]).unwrap();
        let q = quotient(&x, &a).unwrap();
        assert_eq!(q.quotient.counts(), vec![2, 2]);
        let e0 = q
            .quotient
            .simplex_vertices(SimplexRef {
                dim: 1,
                id: SimplexId(0),
            })
            .unwrap();
        let e1 = q
            .quotient
            .simplex_vertices(SimplexRef {
                dim: 1,
                id: SimplexId(1),
            })
            .unwrap();
        assert_eq!(e0, e1);
        assert_eq!(euler_characteristic(&q.quotient), 0.into());
        let rep = quotient_euler_check(&x, &a).unwrap();
        assert_eq!(rep.lhs, r(0, 1));
        assert_eq!(rep.rhs, r(0, 1));
        assert!(rep.equal);
    }

    #[test]
    fn path_flip_quotient() {
        let x = path();
        let a = Action::new(&x, &[flip()]).unwrap();
        let q = quotient(&x, &a).unwrap();
        assert_eq!(q.quotient.counts(), vec![2, 1]);
        assert_eq!(euler_characteristic(&q.quotient), 1.into());
        let stabs: Vec<usize> = q.orbits[0].iter().map(|o| o.stabilizer_order).collect();
        assert_eq!(stabs, vec![1, 2]);
        let rep = quotient_euler_check(&x, &a).unwrap();
        assert_eq!(rep.rhs, r(1, 1));
        assert!(rep.equal);
    }

    #[test]
    fn trivial_group_gives_back_the_complex() {
        let x = hexagon();
        let q = quotient(&x, &Action::trivial(&x)).unwrap();
        assert_eq!(q.quotient.counts(), x.counts());
        assert_eq!(q.quotient.to_spec().simplices, x.to_spec().simplices);
        let rep = quotient_euler_check(&x, &Action::trivial(&x)).unwrap();
        assert_eq!(rep.lhs, BigRational::from(euler_characteristic(&x)));
        assert!(rep.equal);
    }

    #[test]
    fn quotient_rejects_bad_actions() {
        let mut s = ComplexSpec::default();
        s.vertex(0, None).vertex(1, None).simplex(0, &[0, 1]);
        let x = build_complex(&s).unwrap();
        let a = Action::new(&x, &[GeneratorSpec::from_vertex_map(&[(0, 1), (1, 0)])]).unwrap();
        assert!(matches!(
            quotient(&x, &a),
            Err(SimplicialError::StarViolation)
        ));

        let x = hexagon();
        let pairs: Vec<(u64, u64)> = (0..6).map(|v| (v, (v + 1) % 6)).collect();
        let a = Action::new(&x, &[GeneratorSpec::from_vertex_map(&pairs)]).unwrap();
        assert!(matches!(
            quotient(&x, &a),
            Err(SimplicialError::NotAdmissible)
        ));
    }

    #[test]
    fn orbit_stabilizer() {
        let x = hexagon();
        let a = Action::new(&x, &[rotate_by_two()]).unwrap();
        let q = quotient(&x, &a).unwrap();
        for (d, infos) in q.orbits.iter().enumerate() {
            assert_eq!(infos.iter().map(|o| o.size).sum::<usize>(), x.count(d));
            for o in infos {
                assert_eq!(o.size * o.stabilizer_order, a.group_order());
            }
        }
    }
}
