use std::collections::HashSet;

use super::{super_graph, GraphKind, Relation, SimpleGraph};
use crate::error::Result;
use crate::group::{FiniteGroup, GroupElement, VertexPartition};

fn labelled(g: &FiniteGroup, graph: SimpleGraph) -> SimpleGraph {
    graph.with_labels(g.names()).expect("one name per element")
}

/// x ~ y iff one of them lies in the cyclic subgroup generated by the other.
pub fn power_graph(g: &FiniteGroup) -> SimpleGraph {
    let mut graph = SimpleGraph::empty(g.order());
    for (y, &ey) in g.elements().iter().enumerate() {
        for x in g.cyclic_subgroup(ey) {
            graph.add_edge(x, y);
        }
    }
    labelled(g, graph)
}

/// x ~ y iff some cyclic subgroup ⟨z⟩ contains both.
pub fn enhanced_power_graph(g: &FiniteGroup) -> SimpleGraph {
    let mut graph = SimpleGraph::empty(g.order());
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    for &z in g.elements() {
        let sub = g.cyclic_subgroup(z);
        if !seen.insert(sub.clone()) {
            continue;
        }
        for (k, &x) in sub.iter().enumerate() {
            for &y in &sub[k + 1..] {
                graph.add_edge(x, y);
            }
        }
    }
    labelled(g, graph)
}

pub fn commuting_graph(g: &FiniteGroup) -> SimpleGraph {
    let els: &[GroupElement] = g.elements();
    let mut graph = SimpleGraph::empty(els.len());
    for i in 0..els.len() {
        for j in i + 1..els.len() {
            if g.commute(els[i], els[j]) {
                graph.add_edge(i, j);
            }
        }
    }
    labelled(g, graph)
}

pub fn relation_partition(g: &FiniteGroup, relation: Relation) -> VertexPartition {
    match relation {
        Relation::Equality => g.equality_partition(),
        Relation::Order => g.order_partition(),
        Relation::Conjugacy => g.conjugacy_partition(),
    }
}

pub fn base_graph(g: &FiniteGroup, kind: GraphKind) -> SimpleGraph {
    match kind {
        GraphKind::Power => power_graph(g),
        GraphKind::Enhanced => enhanced_power_graph(g),
        GraphKind::Commuting => commuting_graph(g),
    }
}

/// The `relation` super `kind` graph of `g`.
pub fn build_graph(g: &FiniteGroup, kind: GraphKind, relation: Relation) -> Result<SimpleGraph> {
    let base = base_graph(g, kind);
    if relation == Relation::Equality {
        return Ok(base);
    }
    super_graph(&base, &relation_partition(g, relation))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generalized_join, is_isomorphic, JoinSkeleton, Part};
    use crate::group::{make_group, Family, GroupSpec};

    fn grp(family: Family, n: u32) -> FiniteGroup {
        make_group(GroupSpec { family, n }).unwrap()
    }

    #[test]
    fn power_graph_of_prime_cyclic_is_complete() {
        for p in [2, 3, 5, 7, 11] {
            assert_eq!(power_graph(&grp(Family::Cyclic, p)), SimpleGraph::complete(p as usize).with_labels(grp(Family::Cyclic, p).names()).unwrap());
        }
    }

    #[test]
    fn dihedral_reflections_only_see_identity_in_power_graph() {
        for n in 3..9 {
            let g = grp(Family::Dihedral, n);
            let p = power_graph(&g);
            for i in 0..n {
                let r = g.index_of(GroupElement::reflection(i));
                assert_eq!(p.neighbors(r), vec![0]);
            }
        }
    }

    #[test]
    fn quaternion_reflection_degree_three() {
        let g = grp(Family::GeneralizedQuaternion, 2);
        let p = power_graph(&g);
        for i in 0..4 {
            assert_eq!(p.degree(g.index_of(GroupElement::reflection(i))), 3);
        }
    }

    #[test]
    fn enhanced_and_commuting_complete_on_cyclic() {
        let g = grp(Family::Cyclic, 12);
        assert_eq!(enhanced_power_graph(&g).edge_count(), 66);
        assert_eq!(commuting_graph(&g).edge_count(), 66);
        // 12 is not a prime power, so the power graph is strictly smaller
        assert!(power_graph(&g).edge_count() < 66);
    }

    #[test]
    fn sd_neighbourhoods_small() {
        for n in 2..4u32 {
            let g = grp(Family::Semidihedral, n);
            let pe = enhanced_power_graph(&g);
            for i in 0..2 * n {
                let x = g.index_of(GroupElement::reflection(2 * i));
                assert_eq!(pe.neighbors(x), vec![0]);
            }
            let z = g.index_of(GroupElement::rotation(2 * n));
            let mut expected: Vec<usize> = (0..4 * n as usize).filter(|&v| v != z).collect();
            expected.extend((0..2 * n).map(|j| g.index_of(GroupElement::reflection(2 * j + 1))));
            assert_eq!(pe.neighbors(z), expected);
        }
    }

    #[test]
    fn commuting_dihedral_odd_join_structure() {
        for n in [3u32, 5, 7] {
            let g = grp(Family::Dihedral, n);
            let delta = commuting_graph(&g);
            let join = generalized_join(&JoinSkeleton::new(
                SimpleGraph::from_edges(3, &[(0, 1), (0, 2)]),
                vec![Part::Complete(1), Part::Complete(n as usize - 1), Part::Empty(n as usize)],
            ).unwrap());
            assert!(is_isomorphic(&delta, &join).unwrap());
        }
    }

    #[test]
    fn spanning_chain() {
        for (f, n) in [(Family::Dihedral, 6), (Family::GeneralizedQuaternion, 3), (Family::Semidihedral, 2)] {
            let g = grp(f, n);
            let p = power_graph(&g);
            let pe = enhanced_power_graph(&g);
            let d = commuting_graph(&g);
            assert!(p.is_spanning_subgraph_of(&pe));
            assert!(pe.is_spanning_subgraph_of(&d));
        }
    }

    #[test]
    fn order_super_commuting_semidihedral_is_complete() {
        let g = grp(Family::Semidihedral, 2);
        let s = build_graph(&g, GraphKind::Commuting, Relation::Order).unwrap();
        assert_eq!(s.edge_count(), 16 * 15 / 2);
    }

    #[test]
    fn labels_follow_elements() {
        let g = grp(Family::Dihedral, 3);
        let p = power_graph(&g);
        assert_eq!(p.labels().unwrap(), &["e", "a", "a^2", "b", "ab", "a^2b"]);
    }
}
