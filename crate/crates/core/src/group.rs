//! Finite groups given by two-generator presentations.
//!
//! Every element is stored in the normal form `a^i b^e` with `0 <= i < m`
//! (`m` the order of `a`) and `e ∈ {0, 1}`. All four families share the
//! same rewriting shape:
//!
//! ```text
//! b a^j b^-1 = a^(r*j mod m)        b^2 = a^c
//! ```
//!
//! with `(m, r, c)` = `(n, -1, 0)` for D₂ₙ, `(2n, -1, n)` for Q₄ₙ and
//! `(4n, 2n-1, 0)` for SD₈ₙ. The cyclic group ℤₙ never uses `b`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest group the crate will construct.
pub const MAX_GROUP_ORDER: usize = 4096;

/// Largest group for which the exhaustive axiom audit materialises a table.
pub const AUDIT_LIMIT: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "D")]
    Dihedral,
    #[serde(rename = "Q")]
    GeneralizedQuaternion,
    #[serde(rename = "SD")]
    Semidihedral,
    #[serde(rename = "Z")]
    Cyclic,
}

impl Family {
    pub const ALL: [Family; 4] = [
        Family::Dihedral,
        Family::GeneralizedQuaternion,
        Family::Semidihedral,
        Family::Cyclic,
    ];

    /// Short code used on the command line and in reports.
    pub fn code(self) -> &'static str {
        match self {
            Family::Dihedral => "D",
            Family::GeneralizedQuaternion => "Q",
            Family::Semidihedral => "SD",
            Family::Cyclic => "Z",
        }
    }

    pub fn min_n(self) -> u32 {
        match self {
            Family::Dihedral => 3,
            Family::GeneralizedQuaternion | Family::Semidihedral => 2,
            Family::Cyclic => 1,
        }
    }

    /// Order of the group with parameter `n`.
    pub fn group_order(self, n: u32) -> usize {
        let n = n as usize;
        match self {
            Family::Dihedral => 2 * n,
            Family::GeneralizedQuaternion => 4 * n,
            Family::Semidihedral => 8 * n,
            Family::Cyclic => n,
        }
    }

    /// Order of the rotation generator `a`.
    pub fn rotation_order(self, n: u32) -> u32 {
        match self {
            Family::Dihedral | Family::Cyclic => n,
            Family::GeneralizedQuaternion => 2 * n,
            Family::Semidihedral => 4 * n,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "D" => Ok(Family::Dihedral),
            "Q" => Ok(Family::GeneralizedQuaternion),
            "SD" => Ok(Family::Semidihedral),
            "Z" => Ok(Family::Cyclic),
            other => Err(Error::ParameterRange(format!(
                "unknown family code {other:?} (expected D, Q, SD or Z)"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupSpec {
    pub family: Family,
    pub n: u32,
}

impl GroupSpec {
    pub fn new(family: Family, n: u32) -> Result<Self> {
        if n < family.min_n() {
            return Err(Error::ParameterRange(format!(
                "{} requires n >= {}, got {n}",
                family,
                family.min_n()
            )));
        }
        let order = family.group_order(n);
        if order > MAX_GROUP_ORDER {
            return Err(Error::ParameterRange(format!(
                "group order {order} exceeds {MAX_GROUP_ORDER}"
            )));
        }
        Ok(GroupSpec { family, n })
    }

    pub fn order(&self) -> usize {
        self.family.group_order(self.n)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::Dihedral => write!(f, "D{}", 2 * self.n),
            Family::GeneralizedQuaternion => write!(f, "Q{}", 4 * self.n),
            Family::Semidihedral => write!(f, "SD{}", 8 * self.n),
            Family::Cyclic => write!(f, "Z{}", self.n),
        }
    }
}

/// `a^rot b^refl` in reduced form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupElement {
    pub rot: u32,
    pub refl: bool,
}

impl GroupElement {
    pub const IDENTITY: GroupElement = GroupElement { rot: 0, refl: false };

    pub fn rotation(rot: u32) -> Self {
        GroupElement { rot, refl: false }
    }

    pub fn reflection(rot: u32) -> Self {
        GroupElement { rot, refl: true }
    }

    pub fn name(&self) -> String {
        let a = match self.rot {
            0 => String::new(),
            1 => "a".to_string(),
            k => format!("a^{k}"),
        };
        match (self.refl, a.is_empty()) {
            (false, true) => "e".to_string(),
            (false, false) => a,
            (true, _) => format!("{a}b"),
        }
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// A partition of `{0, .., len-1}` into non-empty disjoint classes.
///
/// Classes are kept sorted internally and ordered by their smallest member.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexPartition {
    classes: Vec<Vec<usize>>,
    len: usize,
}

impl VertexPartition {
    pub fn new(classes: Vec<Vec<usize>>, len: usize) -> Result<Self> {
        let mut seen = vec![false; len];
        let mut classes: Vec<Vec<usize>> = classes
            .into_iter()
            .map(|mut c| {
                c.sort_unstable();
                c
            })
            .collect();
        for class in &classes {
            if class.is_empty() {
                return Err(Error::PartitionMismatch("empty class".into()));
            }
            for &v in class {
                if v >= len {
                    return Err(Error::PartitionMismatch(format!(
                        "index {v} out of range for {len} vertices"
                    )));
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::PartitionMismatch(format!("index {v} appears twice")));
                }
            }
        }
        if let Some(missing) = seen.iter().position(|s| !s) {
            return Err(Error::PartitionMismatch(format!("index {missing} is not covered")));
        }
        classes.sort_by_key(|c| c[0]);
        Ok(VertexPartition { classes, len })
    }

    pub fn singletons(len: usize) -> Self {
        VertexPartition { classes: (0..len).map(|i| vec![i]).collect(), len }
    }

    pub fn whole(len: usize) -> Self {
        if len == 0 {
            return VertexPartition { classes: Vec::new(), len };
        }
        VertexPartition { classes: vec![(0..len).collect()], len }
    }

    /// Partition whose classes are the fibres of `key`.
    pub fn from_key<K: Ord>(len: usize, key: impl Fn(usize) -> K) -> Self {
        let mut map: std::collections::BTreeMap<K, Vec<usize>> = Default::default();
        for i in 0..len {
            map.entry(key(i)).or_default().push(i);
        }
        let mut classes: Vec<Vec<usize>> = map.into_values().collect();
        classes.sort_by_key(|c| c[0]);
        VertexPartition { classes, len }
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    /// `class_of[v]` = index of the class containing `v`.
    pub fn class_index(&self) -> Vec<usize> {
        let mut out = vec![0; self.len];
        for (ci, class) in self.classes.iter().enumerate() {
            for &v in class {
                out[v] = ci;
            }
        }
        out
    }

    /// True if every class of `self` lies inside a class of `coarser`.
    pub fn refines(&self, coarser: &VertexPartition) -> bool {
        if self.len != coarser.len {
            return false;
        }
        let idx = coarser.class_index();
        self.classes.iter().all(|c| c.iter().all(|&v| idx[v] == idx[c[0]]))
    }

    /// Classes as a set of sets, convenient for order-insensitive comparison.
    pub fn as_set(&self) -> BTreeSet<BTreeSet<usize>> {
        self.classes.iter().map(|c| c.iter().copied().collect()).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    spec: GroupSpec,
    elements: Vec<GroupElement>,
    /// order of `a`
    m: u32,
    /// `b a^j b^-1 = a^(twist*j)`
    twist: u32,
    /// `b^2 = a^square`
    square: u32,
}

/// Build the group from its presentation.
pub fn make_group(spec: GroupSpec) -> Result<FiniteGroup> {
    let spec = GroupSpec::new(spec.family, spec.n)?;
    let n = spec.n;
    let m = spec.family.rotation_order(n);
    let (twist, square) = match spec.family {
        Family::Dihedral => (m - 1, 0),
        Family::GeneralizedQuaternion => (m - 1, n),
        Family::Semidihedral => (2 * n - 1, 0),
        Family::Cyclic => (1, 0),
    };
    let mut elements: Vec<GroupElement> = (0..m).map(GroupElement::rotation).collect();
    if spec.family != Family::Cyclic {
        elements.extend((0..m).map(GroupElement::reflection));
    }
    debug_assert_eq!(elements.len(), spec.order());
    Ok(FiniteGroup { spec, elements, m, twist, square })
}

impl FiniteGroup {
    pub fn spec(&self) -> GroupSpec {
        self.spec
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn identity_index(&self) -> usize {
        0
    }

    pub fn rotation_order(&self) -> u32 {
        self.m
    }

    pub fn element(&self, idx: usize) -> GroupElement {
        self.elements[idx]
    }

    pub fn index_of(&self, x: GroupElement) -> usize {
        debug_assert!(x.rot < self.m);
        debug_assert!(!(x.refl && self.spec.family == Family::Cyclic));
        x.rot as usize + if x.refl { self.m as usize } else { 0 }
    }

    /// Reduce an arbitrary exponent into normal form.
    pub fn elem(&self, rot: i64, refl: bool) -> GroupElement {
        GroupElement { rot: rot.rem_euclid(self.m as i64) as u32, refl }
    }

    pub fn names(&self) -> Vec<String> {
        self.elements.iter().map(GroupElement::name).collect()
    }

    pub fn multiply(&self, x: GroupElement, y: GroupElement) -> GroupElement {
        let m = self.m as u64;
        let y_rot = if x.refl {
            (y.rot as u64 * self.twist as u64) % m
        } else {
            y.rot as u64
        };
        let mut rot = (x.rot as u64 + y_rot) % m;
        let refl = x.refl ^ y.refl;
        if x.refl && y.refl {
            rot = (rot + self.square as u64) % m;
        }
        GroupElement { rot: rot as u32, refl }
    }

    pub fn mul_idx(&self, i: usize, j: usize) -> usize {
        self.index_of(self.multiply(self.elements[i], self.elements[j]))
    }

    pub fn inverse(&self, x: GroupElement) -> GroupElement {
        if !x.refl {
            return self.elem(-(x.rot as i64), false);
        }
        // (a^i b)^-1 = b^-1 a^-i; search is cheap and keeps this presentation-agnostic
        // without a second set of rewrite rules.
        let mut y = GroupElement::reflection(0);
        for r in 0..self.m {
            y.rot = r;
            if self.multiply(x, y) == GroupElement::IDENTITY {
                return y;
            }
        }
        unreachable!("every element of a group has an inverse")
    }

    pub fn power(&self, x: GroupElement, k: u64) -> GroupElement {
        let mut acc = GroupElement::IDENTITY;
        let mut base = x;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.multiply(acc, base);
            }
            base = self.multiply(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn element_order(&self, x: GroupElement) -> u32 {
        let mut k = 1;
        let mut y = x;
        while y != GroupElement::IDENTITY {
            y = self.multiply(y, x);
            k += 1;
        }
        k
    }

    pub fn orders(&self) -> Vec<u32> {
        self.elements.iter().map(|&x| self.element_order(x)).collect()
    }

    /// Indices of `<x> = {e, x, x^2, ...}`, sorted.
    pub fn cyclic_subgroup(&self, x: GroupElement) -> Vec<usize> {
        let mut out = vec![self.identity_index()];
        let mut y = x;
        while y != GroupElement::IDENTITY {
            out.push(self.index_of(y));
            y = self.multiply(y, x);
        }
        out.sort_unstable();
        out
    }

    pub fn commute(&self, x: GroupElement, y: GroupElement) -> bool {
        self.multiply(x, y) == self.multiply(y, x)
    }

    /// Conjugacy classes by brute force over all conjugators.
    pub fn conjugacy_partition(&self) -> VertexPartition {
        let n = self.order();
        let inverses: Vec<GroupElement> = self.elements.iter().map(|&g| self.inverse(g)).collect();
        let mut assigned = vec![usize::MAX; n];
        let mut classes = Vec::new();
        for i in 0..n {
            if assigned[i] != usize::MAX {
                continue;
            }
            let x = self.elements[i];
            let mut class = BTreeSet::new();
            for (g, g_inv) in self.elements.iter().zip(&inverses) {
                let c = self.multiply(self.multiply(*g, x), *g_inv);
                class.insert(self.index_of(c));
            }
            let ci = classes.len();
            for &v in &class {
                assigned[v] = ci;
            }
            classes.push(class.into_iter().collect::<Vec<_>>());
        }
        VertexPartition::new(classes, n).expect("conjugacy classes partition the group")
    }

    pub fn order_partition(&self) -> VertexPartition {
        let orders = self.orders();
        VertexPartition::from_key(self.order(), |i| orders[i])
    }

    pub fn equality_partition(&self) -> VertexPartition {
        VertexPartition::singletons(self.order())
    }

    pub fn center(&self) -> Vec<usize> {
        (0..self.order())
            .filter(|&i| {
                let x = self.elements[i];
                self.elements.iter().all(|&y| self.commute(x, y))
            })
            .collect()
    }

    /// Exhaustive check of closure, associativity, identity and inverses.
    /// Only available for groups with at most [`AUDIT_LIMIT`] elements.
    pub fn audit_axioms(&self) -> Result<()> {
        let n = self.order();
        if n > AUDIT_LIMIT {
            return Err(Error::ParameterRange(format!(
                "axiom audit is limited to {AUDIT_LIMIT} elements, group has {n}"
            )));
        }
        let table: Vec<Vec<usize>> =
            (0..n).map(|i| (0..n).map(|j| self.mul_idx(i, j)).collect()).collect();
        let e = self.identity_index();
        for i in 0..n {
            if table[e][i] != i || table[i][e] != i {
                return Err(Error::ParameterRange(format!("identity fails at {}", self.elements[i])));
            }
            if !(0..n).any(|j| table[i][j] == e && table[j][i] == e) {
                return Err(Error::ParameterRange(format!("{} has no inverse", self.elements[i])));
            }
            for j in 0..n {
                for k in 0..n {
                    if table[table[i][j]][k] != table[i][table[j][k]] {
                        return Err(Error::ParameterRange(format!(
                            "associativity fails at ({}, {}, {})",
                            self.elements[i], self.elements[j], self.elements[k]
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}
