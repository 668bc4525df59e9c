use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;

use super::SimplicialError;
use crate::exactnum::BigInteger;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId(pub u64);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimplexId(pub u64);

/// Identifies a simplex: ids are unique within a dimension. A vertex is the
/// 0-simplex whose id equals its vertex id.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimplexRef {
    pub dim: usize,
    pub id: SimplexId,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexSpec {
    pub id: VertexId,
    pub label: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplexSpec {
    pub id: SimplexId,
    pub vertices: Vec<VertexId>,
}

/// Raw input for [`build_complex`]. Simplices of dimension >= 1 only; the
/// dimension of each is its vertex count minus one.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ComplexSpec {
    pub vertices: Vec<VertexSpec>,
    pub simplices: Vec<SimplexSpec>,
}

impl ComplexSpec {
    pub fn vertex(&mut self, id: u64, label: Option<&str>) -> &mut Self {
        self.vertices.push(VertexSpec {
            id: VertexId(id),
            label: label.map(str::to_owned),
        });
        self
    }

    pub fn simplex(&mut self, id: u64, vertices: &[u64]) -> &mut Self {
        self.simplices.push(SimplexSpec {
            id: SimplexId(id),
            vertices: vertices.iter().copied().map(VertexId).collect(),
        });
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Record {
    pub id: SimplexId,
    /// Sorted vertex indices into `Complex::vertices`.
    pub verts: Vec<usize>,
}

/// A validated finite simplicial complex.
///
/// `layers[d]` holds the `d`-simplices sorted by id; `layers[0]` mirrors the
/// vertex list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Complex {
    pub(crate) vertices: Vec<VertexSpec>,
    pub(crate) layers: Vec<Vec<Record>>,
    pub(crate) index: Vec<HashMap<SimplexId, usize>>,
}

pub fn build_complex(spec: &ComplexSpec) -> Result<Complex, SimplicialError> {
    let mut vertices = spec.vertices.clone();
    vertices.sort_by_key(|v| v.id);
    for w in vertices.windows(2) {
        if w[0].id == w[1].id {
            return Err(SimplicialError::DuplicateId {
                dim: 0,
                id: w[0].id.0,
            });
        }
    }
    let vindex: HashMap<VertexId, usize> = vertices
        .iter()
        .enumerate()
        .map(|(i, v)| (v.id, i))
        .collect();

    let mut by_dim: BTreeMap<usize, Vec<Record>> = BTreeMap::new();
    by_dim.insert(
        0,
        vertices
            .iter()
            .enumerate()
            .map(|(i, v)| Record {
                id: SimplexId(v.id.0),
                verts: vec![i],
            })
            .collect(),
    );
    for s in &spec.simplices {
        if s.vertices.is_empty() {
            return Err(SimplicialError::EmptySimplex { id: s.id.0 });
        }
        let mut verts = Vec::with_capacity(s.vertices.len());
        for v in &s.vertices {
            let &i = vindex.get(v).ok_or(SimplicialError::UnknownVertex {
                id: s.id.0,
                vertex: v.0,
            })?;
            verts.push(i);
        }
        verts.sort_unstable();
        if let Some(w) = verts.windows(2).find(|w| w[0] == w[1]) {
            return Err(SimplicialError::DuplicateVertexInSimplex {
                id: s.id.0,
                vertex: vertices[w[0]].id.0,
            });
        }
        let dim = verts.len() - 1;
        if dim == 0 {
            // A 0-simplex spec just restates a vertex.
            if s.id.0 != s.vertices[0].0 {
                return Err(SimplicialError::DuplicateId { dim: 0, id: s.id.0 });
            }
            continue;
        }
        by_dim
            .entry(dim)
            .or_default()
            .push(Record { id: s.id, verts });
    }

    let top = *by_dim.keys().next_back().unwrap();
    let mut layers = vec![Vec::new(); top + 1];
    for (d, mut recs) in by_dim {
        recs.sort_by_key(|r| r.id);
        if let Some(w) = recs.windows(2).find(|w| w[0].id == w[1].id) {
            return Err(SimplicialError::DuplicateId {
                dim: d,
                id: w[0].id.0,
            });
        }
        layers[d] = recs;
    }
    if vertices.is_empty() {
        layers = vec![Vec::new()];
    }

    let complex = Complex::from_layers(vertices, layers);
    complex.check_closure()?;
    Ok(complex)
}

impl Complex {
    pub(crate) fn from_layers(vertices: Vec<VertexSpec>, layers: Vec<Vec<Record>>) -> Self {
        let index = layers
            .iter()
            .map(|l| l.iter().enumerate().map(|(i, r)| (r.id, i)).collect())
            .collect();
        Self {
            vertices,
            layers,
            index,
        }
    }

    fn check_closure(&self) -> Result<(), SimplicialError> {
        let present: Vec<std::collections::HashSet<&[usize]>> = self
            .layers
            .iter()
            .map(|l| l.iter().map(|r| r.verts.as_slice()).collect())
            .collect();
        for (d, layer) in self.layers.iter().enumerate().skip(1) {
            for rec in layer {
                // Codimension-one faces suffice: by induction every face is
                // then present.
                for skip in 0..=d {
                    let face: Vec<usize> = rec
                        .verts
                        .iter()
                        .enumerate()
                        .filter(|&(k, _)| k != skip)
                        .map(|(_, &v)| v)
                        .collect();
                    if !present[d - 1].contains(face.as_slice()) {
                        return Err(SimplicialError::ClosureViolation {
                            dim: d,
                            id: rec.id.0,
                            face: face.iter().map(|&v| self.vertices[v].id.0).collect(),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// Highest dimension with at least one simplex; `None` when empty.
    pub fn dimension(&self) -> Option<usize> {
        self.layers.iter().rposition(|l| !l.is_empty())
    }

    pub fn count(&self, dim: usize) -> usize {
        self.layers.get(dim).map_or(0, Vec::len)
    }

    /// Simplex counts for dimensions `0..=dimension()`.
    pub fn counts(&self) -> Vec<usize> {
        match self.dimension() {
            Some(d) => (0..=d).map(|i| self.count(i)).collect(),
            None => Vec::new(),
        }
    }

    pub fn vertices(&self) -> &[VertexSpec] {
        &self.vertices
    }

    pub fn vertex_label(&self, id: VertexId) -> Option<&str> {
        let &i = self.index[0].get(&SimplexId(id.0))?;
        self.vertices[i].label.as_deref()
    }

    /// Ids of the `dim`-simplices in ascending order.
    pub fn simplex_ids(&self, dim: usize) -> impl Iterator<Item = SimplexId> + '_ {
        self.layers.get(dim).into_iter().flatten().map(|r| r.id)
    }

    /// Sorted vertex ids of a simplex.
    pub fn simplex_vertices(&self, s: SimplexRef) -> Result<Vec<VertexId>, SimplicialError> {
        let rec = self.record(s)?;
        Ok(rec.verts.iter().map(|&v| self.vertices[v].id).collect())
    }

    pub(crate) fn record(&self, s: SimplexRef) -> Result<&Record, SimplicialError> {
        self.index
            .get(s.dim)
            .and_then(|m| m.get(&s.id))
            .map(|&i| &self.layers[s.dim][i])
            .ok_or(SimplicialError::UnknownSimplex {
                dim: s.dim,
                id: s.id.0,
            })
    }

    /// The complex as a spec, in (dimension, id) order.
    pub fn to_spec(&self) -> ComplexSpec {
        ComplexSpec {
            vertices: self.vertices.clone(),
            simplices: self
                .layers
                .iter()
                .skip(1)
                .flatten()
                .map(|r| SimplexSpec {
                    id: r.id,
                    vertices: r.verts.iter().map(|&v| self.vertices[v].id).collect(),
                })
                .collect(),
        }
    }
}

/// Alternating sum of simplex counts.
pub fn euler_characteristic(x: &Complex) -> BigInteger {
    x.layers
        .iter()
        .enumerate()
        .fold(BigInteger::zero(), |acc, (d, l)| {
            if d % 2 == 0 {
                acc + l.len()
            } else {
                acc - l.len()
            }
        })
}

/// Number of `m`-simplices whose vertex set contains that of `s`.
pub fn generalized_degree(
    x: &Complex,
    s: SimplexRef,
    m: usize,
) -> Result<BigInteger, SimplicialError> {
    let base = &x.record(s)?.verts;
    let count = x
        .layers
        .get(m)
        .into_iter()
        .flatten()
        .filter(|r| base.iter().all(|v| r.verts.binary_search(v).is_ok()))
        .count();
    Ok(count.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn segment() -> Complex {
        let mut s = ComplexSpec::default();
        s.vertex(0, Some("a"))
            .vertex(1, Some("b"))
            .simplex(0, &[0, 1]);
        build_complex(&s).unwrap()
    }

    fn triangle_boundary() -> Complex {
        let mut s = ComplexSpec::default();
        s.vertex(0, None).vertex(1, None).vertex(2, None);
        s.simplex(0, &[0, 1])
            .simplex(1, &[1, 2])
            .simplex(2, &[0, 2]);
        build_complex(&s).unwrap()
    }

    fn parallel_triangles(layers: u64) -> Complex {
        let mut s = ComplexSpec::default();
        s.vertex(0, None).vertex(1, None).vertex(2, None);
        s.simplex(0, &[0, 1])
            .simplex(1, &[1, 2])
            .simplex(2, &[0, 2]);
        for k in 0..layers {
            s.simplex(k, &[0, 1, 2]);
        }
        build_complex(&s).unwrap()
    }

    #[test]
    fn build_examples() {
        assert_eq!(segment().counts(), vec![2, 1]);
        let two = parallel_triangles(2);
        assert_eq!(two.counts(), vec![3, 3, 2]);

        let mut s = ComplexSpec::default();
        s.vertex(0, None)
            .vertex(1, None)
            .vertex(2, None)
            .simplex(0, &[0, 1, 2]);
        assert!(matches!(
            build_complex(&s),
            Err(SimplicialError::ClosureViolation { dim: 2, .. })
        ));
    }

    #[test]
    fn build_errors() {
        let mut s = ComplexSpec::default();
        s.vertex(0, None).vertex(1, None).simplex(0, &[0, 0]);
        assert!(matches!(
            build_complex(&s),
            Err(SimplicialError::DuplicateVertexInSimplex { id: 0, vertex: 0 })
        ));

        let mut s = ComplexSpec::default();
        s.vertex(0, None).simplex(0, &[0, 9]);
        assert!(matches!(
            build_complex(&s),
            Err(SimplicialError::UnknownVertex { .. })
        ));

        let mut s = ComplexSpec::default();
        s.vertex(0, None)
            .vertex(1, None)
            .simplex(4, &[0, 1])
            .simplex(4, &[0, 1]);
        assert!(matches!(
            build_complex(&s),
            Err(SimplicialError::DuplicateId { dim: 1, id: 4 })
        ));
    }

    #[test]
    fn euler_characteristic_examples() {
        assert_eq!(euler_characteristic(&segment()), 1.into());
        let mut s = ComplexSpec::default();
        for v in 0..6 {
            s.vertex(v, None);
        }
        for e in 0..6 {
            s.simplex(e, &[e, (e + 1) % 6]);
        }
        assert_eq!(euler_characteristic(&build_complex(&s).unwrap()), 0.into());
        assert_eq!(euler_characteristic(&parallel_triangles(3)), 3.into());
    }

    #[test]
    fn generalized_degree_examples() {
        let v0 = SimplexRef {
            dim: 0,
            id: SimplexId(0),
        };
        assert_eq!(generalized_degree(&segment(), v0, 1).unwrap(), 1.into());
        assert_eq!(
            generalized_degree(&triangle_boundary(), v0, 1).unwrap(),
            2.into()
        );
        let e = SimplexRef {
            dim: 1,
            id: SimplexId(0),
        };
        assert_eq!(
            generalized_degree(&parallel_triangles(3), e, 2).unwrap(),
            3.into()
        );
        let missing = SimplexRef {
            dim: 1,
            id: SimplexId(7),
        };
        assert!(matches!(
            generalized_degree(&segment(), missing, 1),
            Err(SimplicialError::UnknownSimplex { .. })
        ));
    }

    #[test]
    fn empty_complex() {
        let c = build_complex(&ComplexSpec::default()).unwrap();
        assert_eq!(c.dimension(), None);
        assert_eq!(euler_characteristic(&c), 0.into());
    }
}
