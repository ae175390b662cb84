//! Isomorphism test for small graphs: colour refinement on both graphs at
//! once, then individualise-and-refine backtracking.

use std::collections::BTreeMap;

use super::SimpleGraph;
use crate::error::{Error, Result};

pub const ISO_LIMIT: usize = 64;

type Coloring = Vec<usize>;

struct Pair<'a> {
    g1: &'a SimpleGraph,
    g2: &'a SimpleGraph,
    nbrs1: Vec<Vec<usize>>,
    nbrs2: Vec<Vec<usize>>,
}

pub fn is_isomorphic(g1: &SimpleGraph, g2: &SimpleGraph) -> Result<bool> {
    for g in [g1, g2] {
        if g.vertex_count() > ISO_LIMIT {
            return Err(Error::SizeLimit(g.vertex_count(), ISO_LIMIT));
        }
    }
    if g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count() {
        return Ok(false);
    }
    let mut d1 = g1.degrees();
    let mut d2 = g2.degrees();
    d1.sort_unstable();
    d2.sort_unstable();
    if d1 != d2 {
        return Ok(false);
    }
    let pair = Pair {
        g1,
        g2,
        nbrs1: (0..g1.vertex_count()).map(|i| g1.neighbors(i)).collect(),
        nbrs2: (0..g2.vertex_count()).map(|i| g2.neighbors(i)).collect(),
    };
    let n = g1.vertex_count();
    Ok(pair.search(vec![0; n], vec![0; n]))
}

impl Pair<'_> {
    /// Refine both colorings jointly so that colour ids mean the same thing
    /// on each side. Returns `None` as soon as the colour histograms differ.
    fn refine(&self, mut c1: Coloring, mut c2: Coloring) -> Option<(Coloring, Coloring)> {
        let mut classes = usize::MAX;
        loop {
            let sig = |c: &Coloring, nbrs: &[Vec<usize>], v: usize| {
                let mut s: Vec<usize> = nbrs[v].iter().map(|&w| c[w]).collect();
                s.sort_unstable();
                (c[v], s)
            };
            let s1: Vec<_> = (0..c1.len()).map(|v| sig(&c1, &self.nbrs1, v)).collect();
            let s2: Vec<_> = (0..c2.len()).map(|v| sig(&c2, &self.nbrs2, v)).collect();
            let mut hist: BTreeMap<&(usize, Vec<usize>), (usize, usize)> = BTreeMap::new();
            for s in &s1 {
                hist.entry(s).or_default().0 += 1;
            }
            for s in &s2 {
                hist.entry(s).or_default().1 += 1;
            }
            if hist.values().any(|(a, b)| a != b) {
                return None;
            }
            let ids: BTreeMap<&(usize, Vec<usize>), usize> =
                hist.keys().enumerate().map(|(i, k)| (*k, i)).collect();
            let next = ids.len();
            c1 = s1.iter().map(|s| ids[s]).collect();
            c2 = s2.iter().map(|s| ids[s]).collect();
            if next == classes {
                return Some((c1, c2));
            }
            classes = next;
        }
    }

    fn search(&self, c1: Coloring, c2: Coloring) -> bool {
        let Some((c1, c2)) = self.refine(c1, c2) else {
            return false;
        };
        let n = c1.len();
        let mut sizes: BTreeMap<usize, usize> = BTreeMap::new();
        for &c in &c1 {
            *sizes.entry(c).or_default() += 1;
        }
        let target = sizes.iter().filter(|(_, &s)| s > 1).min_by_key(|(&c, &s)| (s, c)).map(|(&c, _)| c);
        let Some(target) = target else {
            // discrete: the colouring is a bijection, check it
            let mut map = vec![0; n];
            for v in 0..n {
                map[v] = c2.iter().position(|&c| c == c1[v]).unwrap();
            }
            return self.g1.edges().iter().all(|&(i, j)| self.g2.adjacent(map[i], map[j]));
        };
        let fresh = n + 1;
        let v = c1.iter().position(|&c| c == target).unwrap();
        let mut d1 = c1.clone();
        d1[v] = fresh;
        for w in (0..n).filter(|&w| c2[w] == target) {
            let mut d2 = c2.clone();
            d2[w] = fresh;
            if self.search(d1.clone(), d2) {
                return true;
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> SimpleGraph {
        SimpleGraph::from_edges(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>())
    }

    #[test]
    fn triangle_is_k3() {
        assert!(is_isomorphic(&SimpleGraph::complete(3), &cycle(3)).unwrap());
    }

    #[test]
    fn k4_vs_star() {
        let star = SimpleGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        assert!(!is_isomorphic(&SimpleGraph::complete(4), &star).unwrap());
    }

    #[test]
    fn regular_non_isomorphic() {
        // C6 against two disjoint triangles: same degree sequence, refinement alone cannot split
        let two_triangles = SimpleGraph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]);
        assert!(!is_isomorphic(&cycle(6), &two_triangles).unwrap());
        assert!(is_isomorphic(&cycle(6), &cycle(6)).unwrap());
    }

    #[test]
    fn petersen_relabelled() {
        let outer: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        let spokes: Vec<(usize, usize)> = (0..5).map(|i| (i, i + 5)).collect();
        let inner: Vec<(usize, usize)> = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5)).collect();
        let edges: Vec<_> = outer.iter().chain(&spokes).chain(&inner).copied().collect();
        let g = SimpleGraph::from_edges(10, &edges);
        let perm = [3, 7, 1, 9, 0, 5, 2, 8, 4, 6];
        let h = SimpleGraph::from_edges(10, &edges.iter().map(|&(a, b)| (perm[a], perm[b])).collect::<Vec<_>>());
        assert!(is_isomorphic(&g, &h).unwrap());
    }

    #[test]
    fn size_cap() {
        let g = SimpleGraph::empty(65);
        assert_eq!(is_isomorphic(&g, &g), Err(Error::SizeLimit(65, 64)));
    }
}
