use std::collections::{BTreeSet, HashMap};

use super::{Building, BuildingError, LatticeClass, BALL_VERTEX_GUARD};
use crate::exactnum::BigInteger;
use crate::qcombinatorics::vertex_degree;
use crate::simplicial::{build_complex, to_dump, Complex, ComplexSpec};

/// The full subcomplex of the building on the vertices within edge distance
/// `radius` of `center`.
///
/// Vertex `k` of `complex` is `vertices[k]`; vertices are ordered by
/// distance from the center, then by canonical form. Simplices of each
/// dimension are numbered in lexicographic order of their vertex ids.
#[derive(Debug, Clone)]
pub struct Ball {
    center: LatticeClass,
    radius: usize,
    vertices: Vec<LatticeClass>,
    distances: Vec<usize>,
    complex: Complex,
}

impl Ball {
    pub fn center(&self) -> &LatticeClass {
        &self.center
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn vertices(&self) -> &[LatticeClass] {
        &self.vertices
    }

    pub fn distances(&self) -> &[usize] {
        &self.distances
    }

    pub fn complex(&self) -> &Complex {
        &self.complex
    }

    pub fn to_dump(&self) -> String {
        to_dump(&self.complex)
    }
}

fn estimate(b: &Building, r: usize) -> u64 {
    let deg = vertex_degree(b.n as u32, 1)
        .expect("n >= 2")
        .eval_int(&BigInteger::from(b.p()));
    let deg: u64 = deg.try_into().unwrap_or(u64::MAX);
    let mut total: u64 = 1;
    let mut shell: u64 = 1;
    for k in 0..r {
        shell = shell.saturating_mul(if k == 0 { deg } else { deg.saturating_sub(1) });
        total = total.saturating_add(shell);
    }
    total
}

pub(super) fn build(b: &Building, center: &LatticeClass, r: usize) -> Result<Ball, BuildingError> {
    b.check_vertex(center)?;
    let est = estimate(b, r);
    if est > BALL_VERTEX_GUARD {
        return Err(BuildingError::TooLarge { estimate: est });
    }

    let mut dist: HashMap<LatticeClass, usize> = HashMap::new();
    dist.insert(center.clone(), 0);
    let mut frontier = vec![center.clone()];
    for d in 1..=r {
        let mut next = Vec::new();
        for v in &frontier {
            for w in b.neighbors(v)? {
                if !dist.contains_key(&w) {
                    dist.insert(w.clone(), d);
                    next.push(w);
                }
            }
        }
        frontier = next;
    }

    let mut order: Vec<(usize, LatticeClass)> = dist.into_iter().map(|(v, d)| (d, v)).collect();
    order.sort();
    let distances: Vec<usize> = order.iter().map(|(d, _)| *d).collect();
    let vertices: Vec<LatticeClass> = order.into_iter().map(|(_, v)| v).collect();
    let index: HashMap<&LatticeClass, usize> =
        vertices.iter().enumerate().map(|(k, v)| (v, k)).collect();

    let mut layers: Vec<BTreeSet<Vec<usize>>> = vec![BTreeSet::new(); b.n];
    if r > 0 {
        for v in &vertices {
            for i in 1..b.n {
                for s in b.simplices_at(v, i)? {
                    let ids: Option<Vec<usize>> = s.iter().map(|w| index.get(w).copied()).collect();
                    if let Some(mut ids) = ids {
                        ids.sort_unstable();
                        layers[i].insert(ids);
                    }
                }
            }
        }
    }

    let mut spec = ComplexSpec::default();
    for (k, v) in vertices.iter().enumerate() {
        spec.vertex(k as u64, Some(&v.label()));
    }
    for layer in &layers[1..] {
        for (id, s) in layer.iter().enumerate() {
            let vs: Vec<u64> = s.iter().map(|&k| k as u64).collect();
            spec.simplex(id as u64, &vs);
        }
    }
    let complex = build_complex(&spec).expect("flags of the building are closed under faces");
    Ok(Ball {
        center: center.clone(),
        radius: r,
        vertices,
        distances,
        complex,
    })
}
