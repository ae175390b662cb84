use serde::{Deserialize, Serialize};

use super::SimpleGraph;
use crate::error::{Error, Result};
use crate::group::VertexPartition;

fn check_partition(base: &SimpleGraph, p: &VertexPartition) -> Result<()> {
    if p.len() != base.vertex_count() {
        return Err(Error::PartitionMismatch(format!(
            "partition covers {} indices, graph has {} vertices",
            p.len(),
            base.vertex_count()
        )));
    }
    Ok(())
}

/// Join `x ~ y` when they share a class or some representatives are adjacent.
pub fn super_graph(base: &SimpleGraph, p: &VertexPartition) -> Result<SimpleGraph> {
    check_partition(base, p)?;
    let compressed = compressed_graph(base, p)?;
    let class_of = p.class_index();
    let n = base.vertex_count();
    let mut g = SimpleGraph::empty(n);
    for i in 0..n {
        for j in i + 1..n {
            let (ci, cj) = (class_of[i], class_of[j]);
            if ci == cj || compressed.adjacent(ci, cj) {
                g.add_edge(i, j);
            }
        }
    }
    Ok(match base.labels() {
        Some(l) => g.with_labels(l.to_vec())?,
        None => g,
    })
}

/// One vertex per class; classes adjacent iff some cross pair is.
pub fn compressed_graph(base: &SimpleGraph, p: &VertexPartition) -> Result<SimpleGraph> {
    check_partition(base, p)?;
    let class_of = p.class_index();
    let mut g = SimpleGraph::empty(p.num_classes());
    for (i, j) in base.edges() {
        g.add_edge(class_of[i], class_of[j]);
    }
    Ok(g)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Part {
    Complete(usize),
    Empty(usize),
}

impl Part {
    pub fn size(self) -> usize {
        match self {
            Part::Complete(m) | Part::Empty(m) => m,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JoinSkeleton {
    skeleton: SimpleGraph,
    parts: Vec<Part>,
}

impl JoinSkeleton {
    pub fn new(skeleton: SimpleGraph, parts: Vec<Part>) -> Result<Self> {
        if parts.is_empty() || parts.len() != skeleton.vertex_count() {
            return Err(Error::PartitionMismatch(format!(
                "{} parts for a skeleton on {} vertices",
                parts.len(),
                skeleton.vertex_count()
            )));
        }
        if parts.iter().any(|p| p.size() == 0) {
            return Err(Error::ParameterRange("join parts must be non-empty".into()));
        }
        Ok(JoinSkeleton { skeleton, parts })
    }

    pub fn skeleton(&self) -> &SimpleGraph {
        &self.skeleton
    }

    pub fn parts(&self) -> &[Part] {
        &self.parts
    }
}

/// Γ[Γ₁, …, Γ_k] with blocks laid out in skeleton order.
pub fn generalized_join(j: &JoinSkeleton) -> SimpleGraph {
    let mut offsets = Vec::with_capacity(j.parts.len() + 1);
    offsets.push(0);
    for p in &j.parts {
        offsets.push(offsets.last().unwrap() + p.size());
    }
    let total = *offsets.last().unwrap();
    let mut g = SimpleGraph::empty(total);
    let block = |k: usize| offsets[k]..offsets[k + 1];
    for (k, p) in j.parts.iter().enumerate() {
        if let Part::Complete(_) = p {
            for a in block(k) {
                for b in a + 1..offsets[k + 1] {
                    g.add_edge(a, b);
                }
            }
        }
    }
    for (k, l) in j.skeleton.edges() {
        for a in block(k) {
            for b in block(l) {
                g.add_edge(a, b);
            }
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star(k: usize) -> SimpleGraph {
        SimpleGraph::from_edges(k, &(1..k).map(|i| (0, i)).collect::<Vec<_>>())
    }

    #[test]
    fn small_join_counts() {
        let j = JoinSkeleton::new(star(3), vec![Part::Complete(1), Part::Complete(2), Part::Empty(3)]).unwrap();
        let g = generalized_join(&j);
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 6);
    }

    #[test]
    fn join_of_singletons_is_skeleton() {
        let j = JoinSkeleton::new(star(5), vec![Part::Complete(1); 5]).unwrap();
        assert_eq!(generalized_join(&j), star(5));
    }

    #[test]
    fn join_rejects_bad_parts() {
        assert!(JoinSkeleton::new(star(3), vec![Part::Empty(1)]).is_err());
        assert!(JoinSkeleton::new(star(2), vec![Part::Empty(1), Part::Empty(0)]).is_err());
    }

    #[test]
    fn super_with_singletons_is_identity() {
        let g = SimpleGraph::from_edges(4, &[(0, 1), (2, 3)]);
        assert_eq!(super_graph(&g, &VertexPartition::singletons(4)).unwrap(), g);
        assert_eq!(compressed_graph(&g, &VertexPartition::singletons(4)).unwrap(), g);
    }

    #[test]
    fn super_of_empty_with_one_class_is_complete() {
        let g = SimpleGraph::empty(5);
        assert_eq!(super_graph(&g, &VertexPartition::whole(5)).unwrap(), SimpleGraph::complete(5));
    }

    #[test]
    fn partition_size_mismatch() {
        let g = SimpleGraph::empty(3);
        assert!(matches!(super_graph(&g, &VertexPartition::whole(4)), Err(Error::PartitionMismatch(_))));
        assert!(compressed_graph(&g, &VertexPartition::whole(2)).is_err());
    }

    #[test]
    fn compressed_of_path() {
        let g = SimpleGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        let p = VertexPartition::new(vec![vec![0, 1], vec![2, 3]], 4).unwrap();
        assert_eq!(compressed_graph(&g, &p).unwrap(), SimpleGraph::complete(2));
    }
}
