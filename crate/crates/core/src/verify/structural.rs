//! Combinatorial checks that need no spectra: containments between the
//! base graphs, the super graph as a generalised join, conjugacy classes and
//! the closed structural forms of the graphs the spectral formulas rely on.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::closed_form::{euler_phi, proper_divisors};
use crate::error::Result;
use crate::graph::{
    base_graph, build_graph, compressed_graph, generalized_join, is_isomorphic, relation_partition, super_graph,
    GraphKind, JoinSkeleton, Part, Relation, SimpleGraph,
};
use crate::group::{make_group, Family, FiniteGroup, GroupSpec, VertexPartition};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct StructuralCheck {
    pub name: String,
    pub group: String,
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct StructuralReport {
    pub checks: Vec<StructuralCheck>,
    pub passed: usize,
    pub failed: usize,
}

impl StructuralReport {
    pub fn failures(&self) -> impl Iterator<Item = &StructuralCheck> {
        self.checks.iter().filter(|c| !c.ok)
    }
}

struct Recorder {
    group: String,
    checks: Vec<StructuralCheck>,
}

impl Recorder {
    fn check(&mut self, name: impl Into<String>, ok: bool, detail: impl FnOnce() -> String) {
        let detail = if ok { None } else { Some(detail()) };
        self.checks.push(StructuralCheck { name: name.into(), group: self.group.clone(), ok, detail });
    }
}

/// Runs every check for each family and `n` in `n_min..=n_max` (clamped to
/// the family minimum).
pub fn structural_suite(families: &[Family], n_min: u32, n_max: u32) -> Result<StructuralReport> {
    let mut checks = Vec::new();
    for &family in families {
        for n in n_min.max(family.min_n())..=n_max {
            let Ok(spec) = GroupSpec::new(family, n) else { continue };
            let g = make_group(spec)?;
            let mut rec = Recorder { group: spec.to_string(), checks: Vec::new() };
            group_checks(&g, &mut rec)?;
            checks.extend(rec.checks);
        }
    }
    let passed = checks.iter().filter(|c| c.ok).count();
    let failed = checks.len() - passed;
    Ok(StructuralReport { checks, passed, failed })
}

fn group_checks(g: &FiniteGroup, rec: &mut Recorder) -> Result<()> {
    let spec = g.spec();
    for relation in Relation::ALL {
        let p = build_graph(g, GraphKind::Power, relation)?;
        let e = build_graph(g, GraphKind::Enhanced, relation)?;
        let c = build_graph(g, GraphKind::Commuting, relation)?;
        rec.check(format!("spanning chain ({relation})"), p.is_spanning_subgraph_of(&e) && e.is_spanning_subgraph_of(&c), || {
            "power ⊄ enhanced ⊄ commuting".into()
        });
    }
    for kind in GraphKind::ALL {
        let base = base_graph(g, kind);
        let singles = super_graph(&base, &VertexPartition::singletons(g.order()))?;
        rec.check(format!("singleton super {kind}"), singles.edges() == base.edges(), || "differs from base".into());
        for relation in Relation::ALL {
            let part = relation_partition(g, relation);
            let sup = build_graph(g, kind, relation)?;
            let tag = format!("{kind}/{relation}");
            let direct = super_by_definition(&base, &part);
            rec.check(format!("super by definition {tag}"), direct.edges() == sup.edges(), || {
                "edge sets differ".into()
            });
            let parts = part.classes().iter().map(|c| Part::Complete(c.len())).collect();
            let join = generalized_join(&JoinSkeleton::new(compressed_graph(&base, &part)?, parts)?);
            let iso = is_isomorphic(&sup, &join)?;
            rec.check(format!("super ≅ join {tag}"), iso, || "not isomorphic".into());
            rec.check(format!("connected {tag}"), sup.is_connected(), || "disconnected".into());
            let cliques = part.classes().iter().all(|c| sup.is_clique(c));
            rec.check(format!("class cliques {tag}"), cliques, || "a class is not a clique".into());
            let flat = part.classes().iter().all(|c| c.iter().all(|&v| sup.degree(v) == sup.degree(c[0])));
            rec.check(format!("equal class degrees {tag}"), flat, || "degrees vary in a class".into());
            if let Some(expected) = closed_structure(spec.family, kind, relation, spec.n) {
                let ok = is_isomorphic(&sup, &expected)?;
                rec.check(format!("structure {tag}"), ok, || {
                    format!("{} vertices/{} edges, expected {}/{}", sup.vertex_count(), sup.edge_count(), expected.vertex_count(), expected.edge_count())
                });
            }
        }
    }
    let got = g.conjugacy_partition().as_set();
    let want = expected_conjugacy(g).as_set();
    rec.check("conjugacy classes", got == want, || format!("got {} classes, expected {}", got.len(), want.len()));
    if spec.family == Family::Semidihedral {
        enhanced_neighbourhoods(g, rec);
    }
    Ok(())
}

/// `x ~ y` iff they share a class or some members of their classes are adjacent.
fn super_by_definition(base: &SimpleGraph, p: &VertexPartition) -> SimpleGraph {
    let idx = p.class_index();
    let classes = p.classes();
    let n = base.vertex_count();
    let mut g = SimpleGraph::empty(n);
    for x in 0..n {
        for y in x + 1..n {
            let linked = idx[x] == idx[y]
                || classes[idx[x]].iter().any(|&u| classes[idx[y]].iter().any(|&v| base.adjacent(u, v)));
            if linked {
                g.add_edge(x, y);
            }
        }
    }
    g
}

/// Conjugacy classes written out by hand for each family.
fn expected_conjugacy(g: &FiniteGroup) -> VertexPartition {
    let spec = g.spec();
    let n = spec.n as i64;
    let m = g.rotation_order() as i64;
    // key: (is reflection, representative)
    let key = |idx: usize| -> (bool, i64) {
        let x = g.element(idx);
        let i = x.rot as i64;
        if !x.refl {
            let partner = match spec.family {
                Family::Cyclic => i,
                Family::Semidihedral if i % 2 == 1 => (2 * n - i).rem_euclid(m),
                _ => (-i).rem_euclid(m),
            };
            return (false, i.min(partner));
        }
        let modulus = match spec.family {
            Family::Dihedral if n % 2 == 1 => 1,
            Family::Semidihedral if n % 2 == 1 => 4,
            _ => 2,
        };
        (true, i % modulus)
    };
    VertexPartition::from_key(g.order(), key)
}

/// Closed neighbourhoods in the enhanced power graph of SD_{8n}.
fn enhanced_neighbourhoods(g: &FiniteGroup, rec: &mut Recorder) {
    let graph = base_graph(g, GraphKind::Enhanced);
    let n = g.spec().n as i64;
    let at = |rot: i64, refl: bool| g.index_of(g.elem(rot, refl));
    let closed = |v: usize| -> BTreeSet<usize> {
        let mut s: BTreeSet<usize> = graph.neighbors(v).into_iter().collect();
        s.insert(v);
        s
    };
    let rotations: BTreeSet<usize> = (0..4 * n).map(|i| at(i, false)).collect();
    let everything: BTreeSet<usize> = (0..g.order()).collect();
    rec.check("N[e] is the whole group", closed(at(0, false)) == everything, String::new);

    let mut centre = rotations.clone();
    centre.extend((0..2 * n).map(|i| at(2 * i + 1, true)));
    rec.check("N[a^2n] is <a> and the odd reflections", closed(at(2 * n, false)) == centre, String::new);

    let bad: Vec<i64> = (1..4 * n).filter(|&i| i != 2 * n && closed(at(i, false)) != rotations).collect();
    rec.check("N[a^i] is <a>", bad.is_empty(), || format!("fails for i in {bad:?}"));

    let bad: Vec<i64> = (0..2 * n)
        .filter(|&i| {
            let want: BTreeSet<usize> =
                [at(0, false), at(2 * n, false), at(2 * i + 1, true), at(2 * n + 2 * i + 1, true)].into();
            closed(at(2 * i + 1, true)) != want
        })
        .collect();
    rec.check("N[a^(2i+1)b] is its cyclic subgroup", bad.is_empty(), || format!("fails for i in {bad:?}"));

    let bad: Vec<i64> = (1..=2 * n)
        .filter(|&i| closed(at(2 * i, true)) != [at(0, false), at(2 * i, true)].into())
        .collect();
    rec.check("N[a^(2i)b] is {e, a^(2i)b}", bad.is_empty(), || format!("fails for i in {bad:?}"));
}

/// Skeleton-plus-parts description of a generalised join.
#[derive(Default)]
struct Blocks {
    parts: Vec<Part>,
    edges: Vec<(usize, usize)>,
}

impl Blocks {
    fn add(&mut self, p: Part) -> usize {
        self.parts.push(p);
        self.parts.len() - 1
    }

    fn link(&mut self, a: usize, b: usize) {
        self.edges.push((a, b));
    }

    /// `center` joined to every leaf, leaves mutually non-adjacent.
    fn star(center: Part, leaves: impl IntoIterator<Item = Part>) -> Blocks {
        let mut b = Blocks::default();
        let c = b.add(center);
        for p in leaves {
            let l = b.add(p);
            b.link(c, l);
        }
        b
    }

    /// Adds the non-identity rotations of a cyclic group of order `m`:
    /// generators as one clique joined to one clique per proper divisor,
    /// divisor cliques joined when one order divides the other. Element
    /// counts for the divisor `d` may be overridden. Returns all indices.
    fn cyclic_power(&mut self, m: u64, size_of: impl Fn(u64) -> usize) -> Vec<usize> {
        let gens = self.add(Part::Complete(euler_phi(m) as usize));
        let divisors = proper_divisors(m);
        let ids: Vec<usize> = divisors.iter().map(|&d| self.add(Part::Complete(size_of(d)))).collect();
        for (a, &da) in divisors.iter().enumerate() {
            self.link(gens, ids[a]);
            for (b, &db) in divisors.iter().enumerate().skip(a + 1) {
                if db % da == 0 {
                    self.link(ids[a], ids[b]);
                }
            }
        }
        std::iter::once(gens).chain(ids).collect()
    }

    fn graph(self) -> SimpleGraph {
        let mut skeleton = SimpleGraph::empty(self.parts.len());
        for (a, b) in self.edges {
            skeleton.add_edge(a, b);
        }
        generalized_join(&JoinSkeleton::new(skeleton, self.parts).expect("parts match skeleton"))
    }
}

use Part::{Complete as K, Empty as E};

fn repeat(p: Part, k: usize) -> impl Iterator<Item = Part> {
    std::iter::repeat_n(p, k)
}

/// `K1 ∨ [(rotation power graph) ∪ extra...]` for the dihedral power graphs.
fn dihedral_power(n: usize, extra: &[Part]) -> SimpleGraph {
    let mut b = Blocks::default();
    let e = b.add(K(1));
    for r in b.cyclic_power(n as u64, |d| euler_phi(d) as usize) {
        b.link(e, r);
    }
    for &p in extra {
        let x = b.add(p);
        b.link(e, x);
    }
    b.graph()
}

/// The closed form of the super graph where one is known, as a join.
fn closed_structure(family: Family, kind: GraphKind, relation: Relation, n: u32) -> Option<SimpleGraph> {
    use GraphKind::*;
    use Relation::*;
    let n = n as usize;
    let odd = n % 2 == 1;
    let blocks = match (family, kind, relation) {
        (Family::Dihedral, Commuting, Equality) if odd => Blocks::star(K(1), [K(n - 1), E(n)]),
        (Family::Dihedral, Commuting, Equality) => {
            Blocks::star(K(2), [K(n - 2)].into_iter().chain(repeat(K(2), n / 2)))
        }
        (Family::Dihedral, Commuting | Enhanced, Order | Conjugacy) if odd => Blocks::star(K(1), [K(n - 1), K(n)]),
        (Family::Dihedral, Commuting, Order) => Blocks::star(K(2 * n), []),
        (Family::Dihedral, Commuting, Conjugacy) if n % 4 == 2 => Blocks::star(K(2), [K(n - 2), K(n)]),
        (Family::Dihedral, Commuting, Conjugacy) => Blocks::star(K(2), [K(n - 2), K(n / 2), K(n / 2)]),
        (Family::Dihedral, Enhanced, Equality) => Blocks::star(K(1), [K(n - 1)].into_iter().chain(repeat(K(1), n))),
        (Family::Dihedral, Enhanced, Conjugacy) => Blocks::star(K(1), [K(n - 1), K(n / 2), K(n / 2)]),
        (Family::Dihedral, Power, Equality) => return Some(dihedral_power(n, &[E(n)])),
        (Family::Dihedral, Power, Order | Conjugacy) if odd => return Some(dihedral_power(n, &[K(n)])),
        (Family::Dihedral, Power, Conjugacy) => return Some(dihedral_power(n, &[K(n / 2), K(n / 2)])),
        (Family::Dihedral, Power, Order) => {
            // the involutions a^(n/2) and all reflections fuse into one class
            let mut b = Blocks::default();
            let hub = b.add(K(1 + euler_phi(n as u64) as usize));
            let divisors = proper_divisors(n as u64);
            let ids: Vec<usize> = divisors
                .iter()
                .map(|&d| b.add(K(if d == 2 { n + 1 } else { euler_phi(d) as usize })))
                .collect();
            for (a, &da) in divisors.iter().enumerate() {
                b.link(hub, ids[a]);
                for (c, &dc) in divisors.iter().enumerate().skip(a + 1) {
                    if dc % da == 0 {
                        b.link(ids[a], ids[c]);
                    }
                }
            }
            b
        }
        (Family::GeneralizedQuaternion, Commuting | Enhanced, Equality) => {
            Blocks::star(K(2), [K(2 * n - 2)].into_iter().chain(repeat(K(2), n)))
        }
        (Family::GeneralizedQuaternion, Commuting, Order) if !odd => Blocks::star(K(4 * n), []),
        (Family::GeneralizedQuaternion, Commuting, Order | Conjugacy) | (Family::GeneralizedQuaternion, Enhanced, Conjugacy)
            if odd =>
        {
            Blocks::star(K(2), [K(2 * n - 2), K(2 * n)])
        }
        (Family::GeneralizedQuaternion, Commuting | Enhanced, Conjugacy) => Blocks::star(K(2), [K(2 * n - 2), K(n), K(n)]),
        (Family::Semidihedral, Commuting, Equality) if odd => {
            Blocks::star(K(4), [K(4 * n - 4)].into_iter().chain(repeat(K(4), n)))
        }
        (Family::Semidihedral, Commuting, Equality) => {
            Blocks::star(K(2), [K(4 * n - 2)].into_iter().chain(repeat(K(2), 2 * n)))
        }
        (Family::Semidihedral, Commuting, Order) => Blocks::star(K(8 * n), []),
        (Family::Semidihedral, Commuting, Conjugacy) if odd => Blocks::star(K(4), [K(4 * n - 4), K(4 * n)]),
        (Family::Semidihedral, Commuting, Conjugacy) => Blocks::star(K(2), [K(4 * n - 2), K(2 * n), K(2 * n)]),
        (Family::Semidihedral, Enhanced, Equality | Conjugacy) => {
            let mut b = Blocks::default();
            let e = b.add(K(1));
            let centre = b.add(K(1));
            b.link(e, centre);
            let mut near = vec![b.add(K(4 * n - 2))];
            let mut far = Vec::new();
            if relation == Equality {
                near.extend((0..n).map(|_| b.add(K(2))));
                far.push(b.add(E(2 * n)));
            } else {
                near.push(b.add(K(2 * n)));
                far.extend(if odd { vec![b.add(K(n)), b.add(K(n))] } else { vec![b.add(K(2 * n))] });
            }
            for &x in &near {
                b.link(e, x);
                b.link(centre, x);
            }
            for &x in &far {
                b.link(e, x);
            }
            b
        }
        (Family::Cyclic, Commuting, _) => Blocks::star(K(n), []),
        (Family::Cyclic, Power, Equality) if n > 1 => {
            let mut b = Blocks::default();
            let e = b.add(K(1));
            for r in b.cyclic_power(n as u64, |d| euler_phi(d) as usize) {
                b.link(e, r);
            }
            b
        }
        _ => return None,
    };
    Some(blocks.graph())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suite_is_clean() {
        let r = structural_suite(&Family::ALL, 1, 4).unwrap();
        let bad: Vec<_> = r.failures().collect();
        assert!(bad.is_empty(), "{bad:#?}");
        assert!(r.passed > 100);
    }

    #[test]
    fn wrong_structure_is_detected() {
        let g = make_group(GroupSpec::new(Family::Dihedral, 5).unwrap()).unwrap();
        let sup = build_graph(&g, GraphKind::Commuting, Relation::Equality).unwrap();
        let wrong = Blocks::star(K(1), [K(4), K(5)]).graph();
        assert!(!is_isomorphic(&sup, &wrong).unwrap());
    }
}
