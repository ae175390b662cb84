use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

/// Eigenvalue forced by a set of vertices that share their outside neighbourhood.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ForcedEigenvalue {
    pub value: f64,
    pub min_multiplicity: usize,
}

/// For `s` whose members all have the same neighbours outside `s`:
/// an independent `s` forces `0` and a clique forces `−d√2`, each with
/// multiplicity at least `|s| − 1`. Any other shape forces nothing.
pub fn lemma21_predict(g: &SimpleGraph, s: &[usize]) -> Result<Option<ForcedEigenvalue>> {
    let set: BTreeSet<usize> = s.iter().copied().collect();
    if set.len() < 2 {
        return Err(Error::ParameterRange(format!("need at least two distinct vertices, got {}", set.len())));
    }
    if let Some(&bad) = set.iter().find(|&&v| v >= g.vertex_count()) {
        return Err(Error::ParameterRange(format!("vertex {bad} out of range")));
    }
    let outside = |v: usize| -> Vec<usize> { g.neighbors(v).into_iter().filter(|w| !set.contains(w)).collect() };
    let verts: Vec<usize> = set.iter().copied().collect();
    let reference = outside(verts[0]);
    for &v in &verts[1..] {
        if outside(v) != reference {
            return Err(Error::NeighbourhoodCondition(format!(
                "{} and {} have different neighbours outside the set",
                g.label(verts[0]),
                g.label(v)
            )));
        }
    }
    let t = verts.len();
    if g.is_independent(&verts) {
        return Ok(Some(ForcedEigenvalue { value: 0.0, min_multiplicity: t - 1 }));
    }
    if g.is_clique(&verts) {
        let d = g.degree(verts[0]) as f64;
        return Ok(Some(ForcedEigenvalue { value: -d * 2f64.sqrt(), min_multiplicity: t - 1 }));
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{power_graph, SimpleGraph};
    use crate::group::{make_group, Family, GroupElement, GroupSpec};

    #[test]
    fn clique_in_k2() {
        let r = lemma21_predict(&SimpleGraph::complete(2), &[0, 1]).unwrap().unwrap();
        assert_eq!(r.min_multiplicity, 1);
        assert!((r.value + 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn dihedral_reflections_independent() {
        for n in 3..8u32 {
            let g = make_group(GroupSpec { family: Family::Dihedral, n }).unwrap();
            let p = power_graph(&g);
            let refl: Vec<usize> = (0..n).map(|i| g.index_of(GroupElement::reflection(i))).collect();
            let r = lemma21_predict(&p, &refl).unwrap().unwrap();
            assert_eq!(r, ForcedEigenvalue { value: 0.0, min_multiplicity: n as usize - 1 });
        }
    }

    #[test]
    fn quaternion_reflection_pair() {
        let n = 3;
        let g = make_group(GroupSpec { family: Family::GeneralizedQuaternion, n }).unwrap();
        let p = power_graph(&g);
        let pair = [g.index_of(GroupElement::reflection(1)), g.index_of(GroupElement::reflection(1 + n))];
        let r = lemma21_predict(&p, &pair).unwrap().unwrap();
        assert_eq!(r.min_multiplicity, 1);
        assert!((r.value + 3.0 * 2f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn condition_violation_is_an_error() {
        let path = SimpleGraph::from_edges(3, &[(0, 1), (1, 2)]);
        assert!(matches!(lemma21_predict(&path, &[0, 1]), Err(Error::NeighbourhoodCondition(_))));
        assert!(lemma21_predict(&path, &[0]).is_err());
        assert!(lemma21_predict(&path, &[0, 9]).is_err());
    }

    #[test]
    fn neither_clique_nor_independent() {
        // 0-1 adjacent, 2 isolated inside the set, nothing outside
        let g = SimpleGraph::from_edges(3, &[(0, 1)]);
        assert_eq!(lemma21_predict(&g, &[0, 1, 2]).unwrap(), None);
    }
}
