//! Simple undirected graphs and the constructions used on groups.

mod construct;
mod edgelist;
mod iso;
mod ops;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use construct::{base_graph, build_graph, commuting_graph, enhanced_power_graph, power_graph, relation_partition};
pub use edgelist::{parse_edgelist, to_edgelist};
pub use iso::{is_isomorphic, ISO_LIMIT};
pub use ops::{compressed_graph, generalized_join, super_graph, JoinSkeleton, Part};

/// Undirected loop-free graph stored as a dense adjacency matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<bool>,
    labels: Option<Vec<String>>,
}

impl SimpleGraph {
    pub fn empty(n: usize) -> Self {
        SimpleGraph { n, adj: vec![false; n * n], labels: None }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for i in 0..n {
            for j in i + 1..n {
                g.add_edge(i, j);
            }
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Self::empty(n);
        for &(i, j) in edges {
            g.add_edge(i, j);
        }
        g
    }

    /// Ignores loops; indices must be in range.
    pub fn add_edge(&mut self, i: usize, j: usize) {
        assert!(i < self.n && j < self.n, "edge ({i}, {j}) out of range for {} vertices", self.n);
        if i != j {
            self.adj[i * self.n + j] = true;
            self.adj[j * self.n + i] = true;
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::PartitionMismatch(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => i.to_string(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adj[i * self.n + j]
    }

    pub fn neighbors(&self, i: usize) -> Vec<usize> {
        (0..self.n).filter(|&j| self.adjacent(i, j)).collect()
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i * self.n..(i + 1) * self.n].iter().filter(|&&b| b).count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|i| self.degree(i)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().filter(|&&b| b).count() / 2
    }

    /// Edges `(i, j)` with `i < j`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.adjacent(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// True if every edge of `self` is an edge of `other` (same vertex set).
    pub fn is_spanning_subgraph_of(&self, other: &SimpleGraph) -> bool {
        self.n == other.n && self.adj.iter().zip(&other.adj).all(|(&a, &b)| !a || b)
    }

    pub fn is_clique(&self, set: &[usize]) -> bool {
        set.iter().enumerate().all(|(k, &i)| set[k + 1..].iter().all(|&j| self.adjacent(i, j)))
    }

    pub fn is_independent(&self, set: &[usize]) -> bool {
        set.iter().enumerate().all(|(k, &i)| set[k + 1..].iter().all(|&j| !self.adjacent(i, j)))
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for (w, s) in seen.iter_mut().enumerate() {
                if !*s && self.adjacent(v, w) {
                    *s = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    pub fn induced(&self, vertices: &[usize]) -> SimpleGraph {
        let mut g = SimpleGraph::empty(vertices.len());
        for (a, &i) in vertices.iter().enumerate() {
            for (b, &j) in vertices.iter().enumerate().skip(a + 1) {
                if self.adjacent(i, j) {
                    g.add_edge(a, b);
                }
            }
        }
        if let Some(l) = &self.labels {
            g.labels = Some(vertices.iter().map(|&i| l[i].clone()).collect());
        }
        g
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphKind {
    Power,
    Enhanced,
    Commuting,
}

impl GraphKind {
    pub const ALL: [GraphKind; 3] = [GraphKind::Power, GraphKind::Enhanced, GraphKind::Commuting];

    pub fn code(self) -> &'static str {
        match self {
            GraphKind::Power => "power",
            GraphKind::Enhanced => "enhanced",
            GraphKind::Commuting => "commuting",
        }
    }
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for GraphKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "power" => Ok(GraphKind::Power),
            "enhanced" => Ok(GraphKind::Enhanced),
            "commuting" => Ok(GraphKind::Commuting),
            other => Err(Error::ParameterRange(format!(
                "unknown graph kind {other:?} (expected power, enhanced or commuting)"
            ))),
        }
    }
}

/// Equivalence relation used to form the super graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    Equality,
    Order,
    Conjugacy,
}

impl Relation {
    pub const ALL: [Relation; 3] = [Relation::Equality, Relation::Order, Relation::Conjugacy];

    pub fn code(self) -> &'static str {
        match self {
            Relation::Equality => "equality",
            Relation::Order => "order",
            Relation::Conjugacy => "conjugacy",
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for Relation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "equality" => Ok(Relation::Equality),
            "order" => Ok(Relation::Order),
            "conjugacy" => Ok(Relation::Conjugacy),
            other => Err(Error::ParameterRange(format!(
                "unknown relation {other:?} (expected equality, order or conjugacy)"
            ))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_counts() {
        let k4 = SimpleGraph::complete(4);
        assert_eq!(k4.edge_count(), 6);
        assert_eq!(k4.degrees(), vec![3; 4]);
        assert!(k4.is_connected());
        assert!(!SimpleGraph::empty(2).is_connected());
        assert!(SimpleGraph::empty(0).is_connected());
    }

    #[test]
    fn loops_are_dropped() {
        let mut g = SimpleGraph::empty(3);
        g.add_edge(1, 1);
        g.add_edge(0, 2);
        assert_eq!(g.edges(), vec![(0, 2)]);
        assert!(!g.adjacent(1, 1));
    }

    #[test]
    fn label_count_checked() {
        assert!(SimpleGraph::empty(2).with_labels(vec!["x".into()]).is_err());
    }

    #[test]
    fn spanning_subgraph() {
        let p3 = SimpleGraph::from_edges(3, &[(0, 1), (1, 2)]);
        assert!(p3.is_spanning_subgraph_of(&SimpleGraph::complete(3)));
        assert!(!SimpleGraph::complete(3).is_spanning_subgraph_of(&p3));
    }

    #[test]
    fn codes_round_trip() {
        for k in GraphKind::ALL {
            assert_eq!(k.code().parse::<GraphKind>().unwrap(), k);
        }
        for r in Relation::ALL {
            assert_eq!(r.code().parse::<Relation>().unwrap(), r);
        }
        assert!("ring".parse::<GraphKind>().is_err());
    }
}
