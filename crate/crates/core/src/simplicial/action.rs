use std::collections::{BTreeMap, HashMap, VecDeque};

use super::complex::{Complex, SimplexId, SimplexRef, VertexId};
use super::SimplicialError;

/// Largest group the closure of an action's generators may produce.
pub const GROUP_ORDER_LIMIT: usize = 10_000;

/// One generator of a group action, given on vertex ids and simplex ids.
///
/// Ids missing from a map are fixed. A dimension missing from `simplices` is
/// inferred from the vertex map, which only works where no two simplices of
/// that dimension share a vertex set.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GeneratorSpec {
    pub vertices: BTreeMap<VertexId, VertexId>,
    pub simplices: BTreeMap<usize, BTreeMap<SimplexId, SimplexId>>,
}

impl GeneratorSpec {
    pub fn from_vertex_map(pairs: &[(u64, u64)]) -> Self {
        Self {
            vertices: pairs
                .iter()
                .map(|&(a, b)| (VertexId(a), VertexId(b)))
                .collect(),
            simplices: BTreeMap::new(),
        }
    }

    pub fn with_simplex_map(mut self, dim: usize, pairs: &[(u64, u64)]) -> Self {
        self.simplices.insert(
            dim,
            pairs
                .iter()
                .map(|&(a, b)| (SimplexId(a), SimplexId(b)))
                .collect(),
        );
        self
    }
}

/// Permutation of the simplices of every dimension, as index maps.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub(crate) struct Element {
    pub perms: Vec<Vec<usize>>,
}

impl Element {
    fn identity(x: &Complex) -> Self {
        Self {
            perms: x.layers.iter().map(|l| (0..l.len()).collect()).collect(),
        }
    }

    /// `self` after `other`.
    fn compose(&self, other: &Element) -> Element {
        Element {
            perms: self
                .perms
                .iter()
                .zip(&other.perms)
                .map(|(a, b)| b.iter().map(|&i| a[i]).collect())
                .collect(),
        }
    }
}

/// A finite group acting on a complex, with all elements materialized.
#[derive(Debug, Clone)]
pub struct Action {
    pub(crate) elements: Vec<Element>,
    pub(crate) shape: Vec<usize>,
}

impl Action {
    /// Checks every generator against the action axiom on `x` and closes the
    /// generator set under composition.
    pub fn new(x: &Complex, generators: &[GeneratorSpec]) -> Result<Self, SimplicialError> {
        let gens = generators
            .iter()
            .map(|g| resolve_generator(x, g))
            .collect::<Result<Vec<_>, _>>()?;
        let identity = Element::identity(x);
        let mut seen: HashMap<Element, usize> = HashMap::new();
        seen.insert(identity.clone(), 0);
        let mut elements = vec![identity];
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in &gens {
                let next = g.compose(&elements[i]);
                if !seen.contains_key(&next) {
                    if elements.len() >= GROUP_ORDER_LIMIT {
                        return Err(SimplicialError::GroupTooLarge {
                            limit: GROUP_ORDER_LIMIT,
                        });
                    }
                    seen.insert(next.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(next);
                }
            }
        }
        Ok(Self {
            elements,
            shape: x.layers.iter().map(Vec::len).collect(),
        })
    }

    /// The trivial group.
    pub fn trivial(x: &Complex) -> Self {
        Self {
            elements: vec![Element::identity(x)],
            shape: x.layers.iter().map(Vec::len).collect(),
        }
    }

    pub fn group_order(&self) -> usize {
        self.elements.len()
    }

    pub(crate) fn check_shape(&self, x: &Complex) -> Result<(), SimplicialError> {
        let shape: Vec<usize> = x.layers.iter().map(Vec::len).collect();
        if shape == self.shape {
            Ok(())
        } else {
            Err(SimplicialError::InconsistentAction(
                "action was built for a different complex".into(),
            ))
        }
    }

    /// Image of simplex index `idx` in dimension `dim` under element `g`.
    pub(crate) fn apply(&self, g: usize, dim: usize, idx: usize) -> usize {
        self.elements[g].perms[dim][idx]
    }

    /// Orbit index of every vertex, numbered by first appearance.
    pub(crate) fn orbit_ids(&self, dim: usize) -> (Vec<usize>, usize) {
        let n = self.shape.get(dim).copied().unwrap_or(0);
        let mut ids = vec![usize::MAX; n];
        let mut next = 0;
        for s in 0..n {
            if ids[s] != usize::MAX {
                continue;
            }
            for g in 0..self.elements.len() {
                ids[self.apply(g, dim, s)] = next;
            }
            next += 1;
        }
        (ids, next)
    }
}

fn resolve_generator(x: &Complex, spec: &GeneratorSpec) -> Result<Element, SimplicialError> {
    let inconsistent = |msg: String| SimplicialError::InconsistentAction(msg);
    let vertex_index = &x.index[0];
    let mut perms = Vec::with_capacity(x.layers.len());

    let mut vperm: Vec<usize> = (0..x.vertices.len()).collect();
    for (from, to) in &spec.vertices {
        let a = vertex_index
            .get(&SimplexId(from.0))
            .ok_or_else(|| inconsistent(format!("unknown vertex {}", from.0)))?;
        let b = vertex_index
            .get(&SimplexId(to.0))
            .ok_or_else(|| inconsistent(format!("unknown vertex {}", to.0)))?;
        vperm[*a] = *b;
    }
    check_bijection(&vperm).map_err(|_| inconsistent("vertex map is not a bijection".into()))?;
    perms.push(vperm.clone());

    for (d, layer) in x.layers.iter().enumerate().skip(1) {
        let image_set = |verts: &[usize]| {
            let mut v: Vec<usize> = verts.iter().map(|&i| vperm[i]).collect();
            v.sort_unstable();
            v
        };
        let perm: Vec<usize> = if let Some(map) = spec.simplices.get(&d) {
            let mut perm: Vec<usize> = (0..layer.len()).collect();
            for (from, to) in map {
                let a = x.index[d]
                    .get(from)
                    .ok_or_else(|| inconsistent(format!("unknown {d}-simplex {}", from.0)))?;
                let b = x.index[d]
                    .get(to)
                    .ok_or_else(|| inconsistent(format!("unknown {d}-simplex {}", to.0)))?;
                perm[*a] = *b;
            }
            for (i, rec) in layer.iter().enumerate() {
                if image_set(&rec.verts) != layer[perm[i]].verts {
                    return Err(inconsistent(format!(
                        "{d}-simplex {} is not sent to a simplex on the image vertices",
                        rec.id.0
                    )));
                }
            }
            perm
        } else {
            let mut by_set: HashMap<&[usize], Vec<usize>> = HashMap::new();
            for (i, rec) in layer.iter().enumerate() {
                by_set.entry(rec.verts.as_slice()).or_default().push(i);
            }
            layer
                .iter()
                .map(|rec| match by_set.get(image_set(&rec.verts).as_slice()) {
                    Some(v) if v.len() == 1 => Ok(v[0]),
                    Some(_) => Err(inconsistent(format!(
                        "parallel {d}-simplices need an explicit simplex map"
                    ))),
                    None => Err(inconsistent(format!(
                        "image of {d}-simplex {} is not a simplex",
                        rec.id.0
                    ))),
                })
                .collect::<Result<_, _>>()?
        };
        check_bijection(&perm)
            .map_err(|_| inconsistent(format!("{d}-simplex map is not a bijection")))?;
        perms.push(perm);
    }
    Ok(Element { perms })
}

fn check_bijection(perm: &[usize]) -> Result<(), ()> {
    let mut hit = vec![false; perm.len()];
    for &i in perm {
        if std::mem::replace(&mut hit[i], true) {
            return Err(());
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OffenseKind {
    /// Some element fixes the simplex but moves one of its vertices.
    FixedButMovesVertices,
    /// Two vertices of the simplex lie in one orbit.
    VerticesShareOrbit,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Offender {
    pub kind: OffenseKind,
    pub simplex: SimplexRef,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionReport {
    /// Every element fixing a simplex fixes its vertices pointwise.
    pub star_ok: bool,
    /// `star_ok`, and no simplex has two vertices in the same orbit.
    pub admissible: bool,
    pub offenders: Vec<Offender>,
}

pub fn validate_action(x: &Complex, a: &Action) -> Result<ActionReport, SimplicialError> {
    a.check_shape(x)?;
    let mut offenders = Vec::new();
    for (d, layer) in x.layers.iter().enumerate().skip(1) {
        for (i, rec) in layer.iter().enumerate() {
            let moves = (0..a.group_order())
                .any(|g| a.apply(g, d, i) == i && rec.verts.iter().any(|&v| a.apply(g, 0, v) != v));
            if moves {
                offenders.push(Offender {
                    kind: OffenseKind::FixedButMovesVertices,
                    simplex: SimplexRef { dim: d, id: rec.id },
                });
            }
        }
    }
    let star_ok = offenders.is_empty();

    let (orbit, _) = a.orbit_ids(0);
    for (d, layer) in x.layers.iter().enumerate().skip(1) {
        for rec in layer {
            let mut o: Vec<usize> = rec.verts.iter().map(|&v| orbit[v]).collect();
            o.sort_unstable();
            if o.windows(2).any(|w| w[0] == w[1]) {
                offenders.push(Offender {
                    kind: OffenseKind::VerticesShareOrbit,
                    simplex: SimplexRef { dim: d, id: rec.id },
                });
            }
        }
    }
    let admissible = offenders.is_empty();
    Ok(ActionReport {
        star_ok,
        admissible,
        offenders,
    })
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::simplicial::{build_complex, ComplexSpec};

    pub(crate) fn hexagon() -> Complex {
        let mut s = ComplexSpec::default();
        for v in 0..6 {
            s.vertex(v, None);
        }
        for e in 0..6 {
            s.simplex(e, &[e, (e + 1) % 6]);
        }
        build_complex(&s).unwrap()
    }

    pub(crate) fn rotate_by_two() -> GeneratorSpec {
        let pairs: Vec<(u64, u64)> = (0..6).map(|v| (v, (v + 2) % 6)).collect();
        GeneratorSpec::from_vertex_map(&pairs)
    }

    pub(crate) fn path() -> Complex {
        let mut s = ComplexSpec::default();
        s.vertex(0, Some("a"))
            .vertex(1, Some("b"))
            .vertex(2, Some("c"));
        s.simplex(0, &[0, 1]).simplex(1, &[1, 2]);
        build_complex(&s).unwrap()
    }

    pub(crate) fn flip() -> GeneratorSpec {
        GeneratorSpec::from_vertex_map(&[(0, 2), (2, 0)])
    }

    #[test]
    fn segment_swap_violates_star() {
        let mut s = ComplexSpec::default();
        s.vertex(0, None).vertex(1, None).simplex(0, &[0, 1]);
        let x = build_complex(&s).unwrap();
        let a = Action::new(&x, &[GeneratorSpec::from_vertex_map(&[(0, 1), (1, 0)])]).unwrap();
        assert_eq!(a.group_order(), 2);
        let r = validate_action(&x, &a).unwrap();
        assert!(!r.star_ok);
        assert!(!r.admissible);
        assert_eq!(r.offenders[0].kind, OffenseKind::FixedButMovesVertices);
    }

    #[test]
    fn hexagon_rotation_is_admissible() {
        let x = hexagon();
        let a = Action::new(&x, &[rotate_by_two()]).unwrap();
        assert_eq!(a.group_order(), 3);
        let r = validate_action(&x, &a).unwrap();
        assert!(r.star_ok && r.admissible);
    }

    #[test]
    fn path_flip_is_admissible() {
        let x = path();
        let a = Action::new(&x, &[flip()]).unwrap();
        assert_eq!(a.group_order(), 2);
        let r = validate_action(&x, &a).unwrap();
        assert!(r.star_ok && r.admissible);
    }

    #[test]
    fn rotation_by_one_is_not_admissible() {
        let x = hexagon();
        let pairs: Vec<(u64, u64)> = (0..6).map(|v| (v, (v + 1) % 6)).collect();
        let a = Action::new(&x, &[GeneratorSpec::from_vertex_map(&pairs)]).unwrap();
        let r = validate_action(&x, &a).unwrap();
        assert!(r.star_ok);
        assert!(!r.admissible);
    }

    #[test]
    fn inconsistent_generators_are_rejected() {
        let x = path();
        // not a simplicial map: edge {0,1} would go to {0,2}
        let bad = GeneratorSpec::from_vertex_map(&[(1, 2), (2, 1)]);
        assert!(matches!(
            Action::new(&x, &[bad]),
            Err(SimplicialError::InconsistentAction(_))
        ));
        let not_bijective = GeneratorSpec::from_vertex_map(&[(0, 1)]);
        assert!(Action::new(&x, &[not_bijective]).is_err());
        // explicit map contradicting the vertex map
        let wrong = flip().with_simplex_map(1, &[]);
        assert!(Action::new(&x, &[wrong]).is_err());
    }

    #[test]
    fn action_must_match_complex() {
        let a = Action::trivial(&path());
        assert!(matches!(
            validate_action(&hexagon(), &a),
            Err(SimplicialError::InconsistentAction(_))
        ));
    }
}
