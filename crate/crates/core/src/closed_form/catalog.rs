//! The formula catalog. One entry per stated result and case split; the
//! values are evaluated at `n` by the entry's builder.

use super::numtheory::{euler_phi, proper_divisors};
use super::poly::Poly;
use super::{ClaimKind, Ctx, ResidualClaim, SpectralClaim};
use crate::graph::GraphKind::{self, Commuting, Enhanced, Power};
use crate::graph::Relation::{self, Conjugacy, Equality, Order};
use crate::group::Family::{self, Dihedral as D, GeneralizedQuaternion as Q, Semidihedral as SD};
use crate::spectral::DenseMatrix;

const S: f64 = std::f64::consts::SQRT_2;

type Built = (Vec<SpectralClaim>, ResidualClaim);

pub(crate) struct Entry {
    pub id: &'static str,
    pub family: Family,
    pub kind: GraphKind,
    pub relation: Relation,
    pub applies: fn(u32) -> bool,
    pub applicability: &'static str,
    pub primary: bool,
    pub suspect: Option<&'static str>,
    pub note: Option<&'static str>,
    pub has_quotient: bool,
    pub build: fn(&Ctx) -> Built,
}

impl Entry {
    const fn new(
        id: &'static str,
        cell: (Family, GraphKind, Relation),
        applies: fn(u32) -> bool,
        applicability: &'static str,
        build: fn(&Ctx) -> Built,
    ) -> Self {
        Entry {
            id,
            family: cell.0,
            kind: cell.1,
            relation: cell.2,
            applies,
            applicability,
            primary: true,
            suspect: None,
            note: None,
            has_quotient: false,
            build,
        }
    }

    const fn alt(mut self) -> Self {
        self.primary = false;
        self
    }

    const fn suspect(mut self, note: &'static str) -> Self {
        self.suspect = Some(note);
        self
    }

    const fn note(mut self, note: &'static str) -> Self {
        self.note = Some(note);
        self
    }

    const fn quotient(mut self) -> Self {
        self.has_quotient = true;
        self
    }
}

fn all(_: u32) -> bool {
    true
}
fn odd(n: u32) -> bool {
    n % 2 == 1
}
fn even(n: u32) -> bool {
    n.is_multiple_of(2)
}
fn two_mod_four(n: u32) -> bool {
    n % 4 == 2
}
fn zero_mod_four(n: u32) -> bool {
    n.is_multiple_of(4)
}

fn ex(value: f64, m: f64) -> SpectralClaim {
    SpectralClaim { value, multiplicity: m.max(0.0) as usize, kind: ClaimKind::Exact }
}

fn at_least(value: f64, m: f64) -> SpectralClaim {
    SpectralClaim { value, multiplicity: m.max(0.0) as usize, kind: ClaimKind::AtLeast }
}

fn l(r: f64) -> Poly {
    Poly::linear(r)
}

fn h(a: f64, b: f64) -> f64 {
    a.hypot(b)
}

fn poly(p: Poly) -> ResidualClaim {
    ResidualClaim::PolynomialCoeffs(p.coeffs())
}

fn quot(rows: Vec<Vec<f64>>) -> ResidualClaim {
    ResidualClaim::QuotientSpec(DenseMatrix::from_rows(&rows).expect("square by construction"))
}

// ---- commuting graph -------------------------------------------------------

fn d_commuting_eq_odd(c: &Ctx) -> Built {
    let n = c.nf();
    let p = Poly(vec![
        1.0,
        S * (3.0 * n - n * n - 2.0),
        15.0 * n * n - 9.0 * n.powi(3) - 10.0 * n + 2.0,
        S * (4.0 * n.powi(5) - 16.0 * n.powi(4) + 22.0 * n.powi(3) - 14.0 * n * n + 4.0 * n),
    ]);
    (vec![ex(-(n - 1.0) * S, n - 2.0), ex(0.0, n - 1.0)], poly(p))
}

fn d_commuting_eq_even_with(c: &Ctx, last: Poly) -> Built {
    let n = c.nf();
    let h2 = c.n as usize / 2;
    let a = l((2.0 * n - 1.0) * S);
    let b = l((n - 1.0) * (n - 3.0) * S);
    let c3 = l(3.0 * S);
    let k1 = 2.0 * (n - 2.0) * (5.0 * n * n - 6.0 * n + 2.0);
    let p = a * b * c3.pow(h2) - c3.pow(h2).scale(k1) - last;
    (vec![ex(-(2.0 * n - 1.0) * S, 1.0), ex(-(n - 1.0) * S, n - 3.0), ex(-3.0 * S, n / 2.0)], poly(p))
}

fn d_commuting_eq_even(c: &Ctx) -> Built {
    let n = c.nf();
    let k2 = 2.0 * n * (7.0 * n * n - 4.0 * n + 10.0);
    d_commuting_eq_even_with(c, l((n - 1.0) * (n - 2.0) * S).scale(k2))
}

fn d_commuting_eq_even_as_proved(c: &Ctx) -> Built {
    let n = c.nf();
    let k2 = 4.0 * n * (2.0 * n * n - 2.0 * n + 5.0);
    let last = l((n - 3.0) * (n - 1.0) * S) * l(3.0 * S).pow(c.n as usize / 2 - 1);
    d_commuting_eq_even_with(c, last.scale(k2))
}

fn q_commuting_eq(c: &Ctx) -> Built {
    let n = c.nf();
    let k = c.n as usize;
    let a = l((4.0 * n - 1.0) * S);
    let b = l((2.0 * n - 1.0) * (2.0 * n - 3.0) * S);
    let c3 = l(3.0 * S);
    let k1 = 8.0 * (n - 1.0) * (10.0 * n * n - 6.0 * n + 1.0);
    let k2 = 8.0 * n * (8.0 * n * n - 4.0 * n + 5.0);
    let p = a * b.clone() * c3.pow(k) - c3.pow(k).scale(k1) - (b * c3.pow(k - 1)).scale(k2);
    (vec![ex(-(4.0 * n - 1.0) * S, 1.0), ex(-(2.0 * n - 1.0) * S, 2.0 * n - 3.0), ex(-3.0 * S, n)], poly(p))
}

fn sd_commuting_eq_odd(c: &Ctx) -> Built {
    let n = c.nf();
    let a = l(3.0 * (8.0 * n - 1.0) * S);
    let b = l((4.0 * n - 5.0) * (4.0 * n - 1.0) * S);
    let c21 = l(21.0 * S);
    let k1 = 32.0 * (n - 1.0) * (40.0 * n * n - 12.0 * n + 1.0);
    let k2 = 32.0 * n * (32.0 * n * n - 8.0 * n + 25.0);
    let p = a * b.clone() * c21.clone() - c21.scale(k1) - b.scale(k2);
    let claims = vec![
        ex(-(8.0 * n - 1.0) * S, 3.0),
        ex(-(4.0 * n - 1.0) * S, 4.0 * n - 5.0),
        ex(-7.0 * S, 3.0 * n),
        ex(21.0 * S, n - 1.0),
    ];
    (claims, poly(p))
}

fn sd_commuting_eq_even_with(c: &Ctx, k2: f64) -> Built {
    let n = c.nf();
    let a = l((8.0 * n - 1.0) * S);
    let b = l((4.0 * n - 1.0) * (4.0 * n - 3.0) * S);
    let c3 = l(3.0 * S);
    let k1 = 8.0 * (2.0 * n - 1.0) * (40.0 * n * n - 12.0 * n + 1.0);
    let p = a * b.clone() * c3.clone() - c3.scale(k1) - b.scale(k2);
    let claims = vec![
        ex(-(8.0 * n - 1.0) * S, 1.0),
        ex(-(4.0 * n - 1.0) * S, 4.0 * n - 3.0),
        ex(-3.0 * S, 2.0 * n),
        ex(3.0 * S, 2.0 * n - 1.0),
    ];
    (claims, poly(p))
}

fn sd_commuting_eq_even(c: &Ctx) -> Built {
    let n = c.nf();
    sd_commuting_eq_even_with(c, 16.0 * n * (32.0 * n * n - 12.0 * n + 1.0))
}

fn sd_commuting_eq_even_via_q(c: &Ctx) -> Built {
    let n = c.nf();
    sd_commuting_eq_even_with(c, 16.0 * n * (32.0 * n * n - 8.0 * n + 5.0))
}

fn d_commuting_order_odd(c: &Ctx) -> Built {
    let n = c.nf();
    let b = l((n - 1.0) * (n - 2.0) * S);
    let r = l(n * (n - 1.0) * S);
    let k1 = (n - 1.0) * (5.0 * n * n - 6.0 * n + 2.0);
    let k2 = n * (5.0 * n * n - 4.0 * n + 1.0);
    let p = Poly::x() * b.clone() * r.clone() - r.scale(k1) - b.scale(k2);
    (vec![ex(-(n - 1.0) * S, n - 2.0), ex(-n * S, n - 1.0)], poly(p))
}

fn complete(k: f64) -> Built {
    (vec![ex(-(k - 1.0) * S, k - 1.0), ex((k - 1.0).powi(2) * S, 1.0)], ResidualClaim::None)
}

fn d_commuting_order_even(c: &Ctx) -> Built {
    complete(2.0 * c.nf())
}

fn q_commuting_order_odd(c: &Ctx) -> Built {
    let n = c.nf();
    let a = l((4.0 * n - 1.0) * S);
    let b = l((2.0 * n - 1.0) * (2.0 * n - 3.0) * S);
    let r = l((2.0 * n - 1.0) * (2.0 * n + 1.0) * S);
    let k1 = 8.0 * (n - 1.0) * (10.0 * n * n - 6.0 * n + 1.0);
    let k2 = 8.0 * n * (10.0 * n * n - 2.0 * n + 1.0);
    let p = a * b.clone() * r.clone() - r.scale(k1) - b.scale(k2);
    let claims = vec![
        ex(-(4.0 * n - 1.0) * S, 1.0),
        ex(-(2.0 * n - 1.0) * S, 2.0 * n - 3.0),
        ex(-(2.0 * n + 1.0) * S, 2.0 * n - 1.0),
    ];
    (claims, poly(p))
}

fn q_commuting_order_even(c: &Ctx) -> Built {
    complete(4.0 * c.nf())
}

fn sd_commuting_order(c: &Ctx) -> Built {
    complete(8.0 * c.nf())
}

fn sd_commuting_conj_odd(c: &Ctx) -> Built {
    let n = c.nf();
    let a = l(3.0 * (8.0 * n - 1.0) * S);
    let b = l((4.0 * n - 1.0) * (4.0 * n - 5.0) * S);
    let r = l((4.0 * n - 1.0) * (4.0 * n + 3.0) * S);
    let k1 = 32.0 * (n - 1.0) * (40.0 * n * n - 12.0 * n + 1.0);
    let k2 = 32.0 * n * (40.0 * n * n + 4.0 * n + 5.0);
    let p = a * b.clone() * r.clone() - r.scale(k1) - b.scale(k2);
    let claims = vec![
        ex(-(8.0 * n - 1.0) * S, 3.0),
        ex(-(4.0 * n - 1.0) * S, 4.0 * n - 5.0),
        ex(-(4.0 * n + 3.0) * S, 4.0 * n - 1.0),
    ];
    (claims, poly(p))
}

fn sd_commuting_conj_even(c: &Ctx) -> Built {
    let n = c.nf();
    let a = l((8.0 * n - 1.0) * S);
    let b = l((4.0 * n - 1.0) * (4.0 * n - 3.0) * S);
    let r = l((2.0 * n - 1.0) * (2.0 * n + 1.0) * S);
    let k1 = 8.0 * (2.0 * n - 1.0) * (40.0 * n * n - 12.0 * n + 1.0);
    let k2 = 16.0 * n * (34.0 * n * n - 6.0 * n + 1.0);
    let p = a * b.clone() * r.pow(2) - r.pow(2).scale(k1) - (b * r).scale(k2);
    let claims = vec![
        ex(-(2.0 * n + 1.0) * S, 4.0 * n - 2.0),
        ex(-(4.0 * n - 1.0) * S, 4.0 * n - 3.0),
        ex(-(8.0 * n - 1.0) * S, 1.0),
    ];
    (claims, poly(p))
}

fn q_commuting_conj_even(c: &Ctx) -> Built {
    let n = c.nf();
    let a = l((4.0 * n - 1.0) * S);
    let r = l((n - 1.0) * (n + 1.0) * S);
    let b = l((2.0 * n - 1.0) * (2.0 * n - 3.0) * S);
    let k1 = 8.0 * (n - 1.0) * (10.0 * n * n - 6.0 * n + 1.0);
    let k2 = 4.0 * n * (17.0 * n * n - 6.0 * n + 2.0);
    let p = a * r.pow(2) * b.clone() - r.pow(2).scale(k1) - (b * r).scale(k2);
    let claims = vec![
        ex(-(4.0 * n - 1.0) * S, 1.0),
        ex(-(2.0 * n - 1.0) * S, 2.0 * n - 3.0),
        ex(-(n + 1.0) * S, 2.0 * n - 2.0),
    ];
    (claims, poly(p))
}

fn d_commuting_conj_2mod4(c: &Ctx) -> Built {
    let n = c.nf();
    let a = l((2.0 * n - 1.0) * S);
    let r = l((n - 1.0) * (n + 1.0) * S);
    let b = l((n - 1.0) * (n - 3.0) * S);
    let k1 = 2.0 * (n - 2.0) * (5.0 * n * n - 6.0 * n + 2.0);
    let k2 = 2.0 * n * (5.0 * n * n - 2.0 * n + 2.0);
    let p = a * r.clone() * b.clone() - r.scale(k1) - b.scale(k2);
    let claims =
        vec![ex(-(n + 1.0) * S, n - 1.0), ex(-(n - 1.0) * S, n - 3.0), ex(-(2.0 * n - 1.0) * S, 1.0)];
    (claims, poly(p))
}

fn d_commuting_conj_0mod4(c: &Ctx) -> Built {
    let n = c.nf();
    let m = n / 2.0;
    let a = l((2.0 * n - 1.0) * S);
    let b = l((n - 1.0) * (n - 3.0) * S);
    let r = l((m - 1.0) * (m + 1.0) * S);
    let k1 = 2.0 * (n - 2.0) * (5.0 * n * n - 6.0 * n + 2.0);
    let k2 = 2.0 * n * ((2.0 * n - 1.0).powi(2) + (m + 1.0).powi(2));
    let p = a * b.clone() * r.pow(2) - r.pow(2).scale(k1) - (b * r).scale(k2);
    let claims = vec![ex(-(m + 1.0) * S, n - 2.0), ex(-(n - 1.0) * S, n - 3.0), ex(-(2.0 * n - 1.0) * S, 1.0)];
    (claims, poly(p))
}

// ---- enhanced power graph --------------------------------------------------

fn d_enhanced_eq(c: &Ctx) -> Built {
    let n = c.nf();
    let b = l((n - 1.0) * (n - 2.0) * S);
    let k1 = (n - 1.0) * (5.0 * n * n - 6.0 * n + 2.0);
    let k2 = 2.0 * n * (2.0 * n * n - 2.0 * n + 1.0);
    let p = Poly::x().pow(2) * b.clone() - Poly::x().scale(k1) - b.scale(k2);
    (vec![ex(-(n - 1.0) * S, n - 2.0), ex(0.0, n - 1.0)], poly(p))
}

/// Rows of the quotient shared by the two enhanced-power results for SD.
fn sd_head(n: f64) -> (f64, f64, f64) {
    (8.0 * n - 1.0, 6.0 * n - 1.0, 4.0 * n - 1.0)
}

fn sd_enhanced_eq(c: &Ctx) -> Built {
    let n = c.nf();
    let k = c.n as usize;
    let (al, be, ga) = sd_head(n);
    let dim = k + 4;
    let mut rows = vec![vec![0.0; dim]; dim];
    rows[0][1] = h(al, be);
    rows[0][2] = (4.0 * n - 2.0) * h(al, ga);
    rows[1][0] = h(al, be);
    rows[1][2] = (4.0 * n - 2.0) * h(be, ga);
    rows[2][0] = h(al, ga);
    rows[2][1] = h(be, ga);
    rows[2][2] = (4.0 * n - 3.0) * (4.0 * n - 1.0) * S;
    #[allow(clippy::needless_range_loop)]
    for i in 3..3 + k {
        rows[0][i] = 2.0 * h(al, 3.0);
        rows[1][i] = 2.0 * h(be, 3.0);
        rows[i][0] = h(al, 3.0);
        rows[i][1] = h(be, 3.0);
        rows[i][i] = 3.0 * S;
    }
    rows[0][dim - 1] = 2.0 * n * h(al, 1.0);
    rows[dim - 1][0] = h(al, 1.0);
    let claims = vec![ex(-(4.0 * n - 1.0) * S, 4.0 * n - 3.0), ex(0.0, 2.0 * n - 1.0), ex(-3.0 * S, n)];
    (claims, quot(rows))
}

fn d_enhanced_conj_even(c: &Ctx) -> Built {
    let n = c.nf();
    let b = l((n - 1.0) * (n - 2.0) * S);
    let r = l(n * (n - 2.0) * S / 4.0);
    let k1 = (n - 1.0) * (5.0 * n * n - 6.0 * n + 2.0);
    let k2 = n / 4.0 * (17.0 * n * n - 16.0 * n + 4.0);
    let p = Poly::x() * b.clone() * r.clone() - r.scale(k1) - b.scale(k2);
    let claims =
        vec![ex(-(n / 2.0) * S, n - 2.0), ex(-(n - 1.0) * S, n - 2.0), ex(n * (n - 2.0) / 4.0, 1.0)];
    (claims, poly(p))
}

fn q_enhanced_conj_even(c: &Ctx) -> Built {
    let n = c.nf();
    let a = l((4.0 * n - 1.0) * S);
    let r = l((n - 1.0) * (n + 1.0) * S);
    let b = l((2.0 * n - 1.0) * (2.0 * n - 3.0) * S);
    let k1 = 8.0 * (n - 1.0) * (10.0 * n * n - 6.0 * n + 1.0);
    let k2 = 4.0 * n * (17.0 * n * n - 6.0 * n + 2.0);
    let p = a * r.clone() * b.clone() - r.scale(k1) - b.scale(k2);
    let claims = vec![
        ex(-(4.0 * n - 1.0) * S, 1.0),
        ex(-(2.0 * n - 1.0) * S, 2.0 * n - 3.0),
        ex(-(n + 1.0) * S, 2.0 * n - 2.0),
        ex((n * n - 1.0) * S, 1.0),
    ];
    (claims, poly(p))
}

/// Quotient of the conjugacy super enhanced power graph of SD; `psi` blocks
/// of the given sizes hang off the identity only.
fn sd_enhanced_conj_quotient(n: f64, psi: f64, tail: &[f64]) -> ResidualClaim {
    let (al, be, ga) = sd_head(n);
    let de = 2.0 * n + 1.0;
    let dim = 4 + tail.len();
    let mut rows = vec![vec![0.0; dim]; dim];
    rows[0][1] = h(al, be);
    rows[0][2] = (4.0 * n - 2.0) * h(al, ga);
    rows[0][3] = 2.0 * n * h(al, de);
    rows[1][0] = h(al, be);
    rows[1][2] = (4.0 * n - 2.0) * h(be, ga);
    rows[1][3] = 2.0 * n * h(be, de);
    rows[2][0] = h(al, ga);
    rows[2][1] = h(be, ga);
    rows[2][2] = (4.0 * n - 1.0) * (4.0 * n - 3.0) * S;
    rows[3][0] = h(al, de);
    rows[3][1] = h(be, de);
    rows[3][3] = (2.0 * n - 1.0) * (2.0 * n + 1.0) * S;
    for (k, &size) in tail.iter().enumerate() {
        let i = 4 + k;
        rows[0][i] = size * h(al, psi);
        rows[i][0] = h(al, psi);
        rows[i][i] = psi * (psi - 1.0) * S;
    }
    quot(rows)
}

fn sd_enhanced_conj_odd(c: &Ctx) -> Built {
    let n = c.nf();
    let claims =
        vec![ex(-(2.0 * n + 1.0) * S, 2.0 * n - 1.0), ex(-(4.0 * n - 1.0) * S, 4.0 * n - 3.0), ex(-n * S, 2.0 * n - 2.0)];
    (claims, sd_enhanced_conj_quotient(n, n, &[n, n]))
}

fn sd_enhanced_conj_odd_alt(c: &Ctx) -> Built {
    let n = c.nf();
    let claims = vec![
        ex(-(4.0 * n - 1.0) * S, 4.0 * n - 3.0),
        ex(-(2.0 * n + 1.0) * S, 2.0 * n - 1.0),
        ex(-2.0 * n * S, 2.0 * n - 1.0),
    ];
    (claims, sd_enhanced_conj_quotient(n, n, &[n, n]))
}

fn sd_enhanced_conj_even(c: &Ctx) -> Built {
    let n = c.nf();
    let claims = vec![
        ex(-(4.0 * n - 1.0) * S, 4.0 * n - 3.0),
        ex(-(2.0 * n + 1.0) * S, 2.0 * n - 1.0),
        ex(-2.0 * n * S, 2.0 * n - 1.0),
    ];
    (claims, sd_enhanced_conj_quotient(n, 2.0 * n, &[2.0 * n]))
}

// ---- power graph -----------------------------------------------------------

/// Proper divisors of `n` with their class sizes and measured degrees.
struct Divisors {
    d: Vec<u64>,
    phi: Vec<f64>,
    dbar: Vec<f64>,
}

fn divisors(c: &Ctx, skip_two: bool) -> Divisors {
    let d: Vec<u64> = proper_divisors(c.n as u64).into_iter().filter(|&d| !(skip_two && d == 2)).collect();
    let phi = d.iter().map(|&x| euler_phi(x) as f64).collect();
    let dbar = d.iter().map(|&x| c.rotation_degree(x)).collect();
    Divisors { d, phi, dbar }
}

/// `a_ij`; the divisibility gate is applied in both directions.
fn gate(di: u64, dj: u64, bi: f64, bj: f64) -> f64 {
    if di.is_multiple_of(dj) || dj.is_multiple_of(di) {
        h(bi, bj)
    } else {
        0.0
    }
}

/// Blocks `(size, degree, diagonal)` joined to the identity and nothing else.
struct Tail {
    size: f64,
    degree: f64,
    diag: f64,
}

/// Quotient for the dihedral power graphs with the identity, the generators
/// of the rotation subgroup, one block per proper divisor, then `tail`.
fn dihedral_power_quotient(c: &Ctx, dv: &Divisors, tail: &[Tail]) -> ResidualClaim {
    let n = c.nf();
    let (al, be) = (2.0 * n - 1.0, n - 1.0);
    let phin = euler_phi(c.n as u64) as f64;
    let t = dv.d.len();
    let dim = t + 2 + tail.len();
    let mut rows = vec![vec![0.0; dim]; dim];
    rows[0][1] = phin * h(al, be);
    rows[1][0] = h(al, be);
    rows[1][1] = be * (phin - 1.0) * S;
    for i in 0..t {
        let r = 2 + i;
        rows[0][r] = dv.phi[i] * h(al, dv.dbar[i]);
        rows[1][r] = dv.phi[i] * h(be, dv.dbar[i]);
        rows[r][0] = h(al, dv.dbar[i]);
        rows[r][1] = phin * h(be, dv.dbar[i]);
        for j in 0..t {
            rows[r][2 + j] = if i == j {
                (dv.phi[i] - 1.0) * dv.dbar[i] * S
            } else {
                dv.phi[j] * gate(dv.d[i], dv.d[j], dv.dbar[i], dv.dbar[j])
            };
        }
    }
    for (k, b) in tail.iter().enumerate() {
        let r = t + 2 + k;
        rows[0][r] = b.size * h(al, b.degree);
        rows[r][0] = h(al, b.degree);
        rows[r][r] = b.diag;
    }
    quot(rows)
}

fn divisor_claims(c: &Ctx, dv: &Divisors) -> Vec<SpectralClaim> {
    let n = c.nf();
    let phin = euler_phi(c.n as u64) as f64;
    let mut claims = vec![ex(-(n - 1.0) * S, phin - 1.0)];
    claims.extend(dv.dbar.iter().zip(&dv.phi).map(|(&b, &p)| ex(-b * S, p - 1.0)));
    claims
}

fn d_power_eq(c: &Ctx) -> Built {
    let n = c.nf();
    let dv = divisors(c, false);
    let mut claims = divisor_claims(c, &dv);
    claims.push(ex(0.0, n - 1.0));
    (claims, dihedral_power_quotient(c, &dv, &[Tail { size: n, degree: 1.0, diag: 0.0 }]))
}

fn reflection_clique(c: &Ctx) -> Tail {
    let n = c.nf();
    Tail { size: n, degree: n, diag: (n - 1.0) * n * S }
}

fn d_power_order_odd(c: &Ctx) -> Built {
    let n = c.nf();
    let dv = divisors(c, false);
    let mut claims = divisor_claims(c, &dv);
    claims.push(ex(0.0, n - 1.0));
    (claims, dihedral_power_quotient(c, &dv, &[reflection_clique(c)]))
}

fn d_power_order_odd_alt(c: &Ctx) -> Built {
    let n = c.nf();
    let dv = divisors(c, false);
    let mut claims = divisor_claims(c, &dv);
    claims.push(ex(-n * S, n - 1.0));
    (claims, dihedral_power_quotient(c, &dv, &[reflection_clique(c)]))
}

fn d_power_order_even(c: &Ctx) -> Built {
    let n = c.nf();
    let al = 2.0 * n - 1.0;
    let phin = euler_phi(c.n as u64) as f64;
    let dv = divisors(c, true);
    let d0 = c.rotation_degree(2);
    let t = dv.d.len();
    let dim = t + 2;
    let last = dim - 1;
    let a0 = |i: usize| if dv.d[i].is_multiple_of(2) { h(dv.dbar[i], d0) } else { 0.0 };
    let mut rows = vec![vec![0.0; dim]; dim];
    rows[0][0] = phin * al * S;
    rows[0][last] = (n + 1.0) * h(al, d0);
    rows[last][0] = (phin + 1.0) * h(al, d0);
    rows[last][last] = n * d0 * S;
    for i in 0..t {
        let r = 1 + i;
        rows[0][r] = dv.phi[i] * h(al, dv.dbar[i]);
        rows[r][0] = (phin + 1.0) * h(al, dv.dbar[i]);
        for j in 0..t {
            rows[r][1 + j] = if i == j {
                (dv.phi[i] - 1.0) * dv.dbar[i] * S
            } else {
                dv.phi[j] * gate(dv.d[i], dv.d[j], dv.dbar[i], dv.dbar[j])
            };
        }
        rows[r][last] = (n + 1.0) * a0(i);
        rows[last][r] = dv.phi[i] * a0(i);
    }
    let mut claims = vec![ex(-al * S, phin)];
    claims.extend(dv.dbar.iter().zip(&dv.phi).map(|(&b, &p)| ex(-b * S, p - 1.0)));
    claims.push(ex(-d0 * S, n));
    (claims, quot(rows))
}

fn d_power_conj_even(c: &Ctx) -> Built {
    let n = c.nf();
    let m = n / 2.0;
    let dv = divisors(c, false);
    let mut claims = divisor_claims(c, &dv);
    claims.push(ex(-m * S, n - 2.0));
    let half = || Tail { size: m, degree: m, diag: m * (m - 1.0) * S };
    (claims, dihedral_power_quotient(c, &dv, &[half(), half()]))
}

fn q_power_eq(c: &Ctx) -> Built {
    (vec![at_least(-3.0 * S, c.nf())], ResidualClaim::None)
}

fn sd_power_eq(c: &Ctx) -> Built {
    let n = c.nf();
    (vec![at_least(0.0, n), at_least(-3.0 * S, 2.0 * n - 1.0)], ResidualClaim::None)
}

fn sd_power_eq_as_proved(c: &Ctx) -> Built {
    let n = c.nf();
    (vec![at_least(0.0, 2.0 * n - 1.0), at_least(-3.0 * S, 2.0 * n - 1.0)], ResidualClaim::None)
}

fn order_divisible_by_four(c: &Ctx, hi: u64) -> f64 {
    c.count_rotations(1..=hi, |_, o| o % 4 == 0) as f64
}

fn q_power_order_even(c: &Ctx) -> Built {
    let n = c.nf();
    let cs = order_divisible_by_four(c, 2 * c.n as u64 - 1);
    (vec![at_least(-(2.0 * n + 3.0 + cs) * S, 2.0 * n + 1.0)], ResidualClaim::None)
}

fn q_power_order_even_alt(c: &Ctx) -> Built {
    let n = c.nf();
    let cs = order_divisible_by_four(c, 2 * c.n as u64 - 1) - 2.0;
    (vec![at_least(-(2.0 * n + 3.0 + cs) * S, 2.0 * n + 1.0)], ResidualClaim::None)
}

fn odd_n_reflection_clique(c: &Ctx) -> Built {
    let n = c.nf();
    (vec![at_least(-(2.0 * n + 1.0) * S, 2.0 * n - 1.0)], ResidualClaim::None)
}

fn sd_power_order_with(c: &Ctx, cs: f64) -> Built {
    let n = c.nf();
    let k = c.n as u64;
    let a = c.count_rotations(1..=4 * k - 1, |i, o| i != 2 * k && o % 2 == 0 && o % 4 != 0) as f64;
    let claims = vec![
        at_least(-(4.0 * n + 3.0 + a + cs) * S, 2.0 * n),
        at_least(-(4.0 * n + 3.0 + cs) * S, 2.0 * n + 1.0),
    ];
    (claims, ResidualClaim::None)
}

fn sd_power_order(c: &Ctx) -> Built {
    let cs = order_divisible_by_four(c, 2 * c.n as u64 - 1);
    sd_power_order_with(c, cs)
}

fn sd_power_order_alt(c: &Ctx) -> Built {
    let k = c.n as u64;
    let cs = c.count_rotations(1..=4 * k - 1, |i, o| o % 4 == 0 && i != k && i != 3 * k) as f64;
    sd_power_order_with(c, cs)
}

fn q_power_conj_even(c: &Ctx) -> Built {
    let n = c.nf();
    (vec![at_least(-(n + 1.0) * S, 2.0 * n - 2.0)], ResidualClaim::None)
}

fn sd_power_conj_odd(c: &Ctx) -> Built {
    let n = c.nf();
    (vec![at_least(-(2.0 * n + 1.0) * S, 2.0 * n - 1.0), at_least(-n * S, 2.0 * n - 2.0)], ResidualClaim::None)
}

fn sd_power_conj_even(c: &Ctx) -> Built {
    let n = c.nf();
    (vec![at_least(-2.0 * n * S, 2.0 * n - 1.0), at_least(-(2.0 * n + 1.0) * S, 2.0 * n - 1.0)], ResidualClaim::None)
}

// ---- the table -------------------------------------------------------------

const ORDER_VIA_COMMUTING: &str = "enhanced order graph coincides with the commuting order graph";

static ENTRIES: &[Entry] = &[
    // commuting, equality
    Entry::new("Cor4.1.i", (D, Commuting, Equality), odd, "n odd, n >= 3", d_commuting_eq_odd)
        .suspect("constant term carries a corrected sign (+22n^3)"),
    Entry::new("Cor4.1.ii", (D, Commuting, Equality), even, "n even, n >= 4", d_commuting_eq_even)
        .suspect("stated last term 2n(7n^2-4n+10)[x-(n-1)(n-2)sqrt2] disagrees with the derivation"),
    Entry::new("Cor4.1.ii.proof", (D, Commuting, Equality), even, "n even, n >= 4", d_commuting_eq_even_as_proved).alt(),
    Entry::new("Cor4.2", (Q, Commuting, Equality), all, "n >= 2", q_commuting_eq),
    Entry::new("Cor4.3.i", (SD, Commuting, Equality), odd, "n odd", sd_commuting_eq_odd),
    Entry::new("Cor4.3.ii", (SD, Commuting, Equality), even, "n even", sd_commuting_eq_even)
        .suspect("last coefficient 16n(32n^2-12n+1) differs from the Q_{4m} result it is derived from"),
    Entry::new("Cor4.3.ii.alt", (SD, Commuting, Equality), even, "n even", sd_commuting_eq_even_via_q).alt(),
    // commuting, order
    Entry::new("Cor4.4.i", (D, Commuting, Order), odd, "n odd, n >= 3", d_commuting_order_odd),
    Entry::new("Cor4.4.ii", (D, Commuting, Order), even, "n even, n >= 4", d_commuting_order_even),
    Entry::new("Cor4.5.i", (Q, Commuting, Order), odd, "n odd", q_commuting_order_odd),
    Entry::new("Cor4.5.ii", (Q, Commuting, Order), even, "n even", q_commuting_order_even),
    Entry::new("Cor4.6", (SD, Commuting, Order), all, "n >= 2", sd_commuting_order),
    // commuting, conjugacy
    Entry::new("Cor4.9.i", (D, Commuting, Conjugacy), odd, "n odd, n >= 3", d_commuting_order_odd),
    Entry::new("Cor4.9.ii", (D, Commuting, Conjugacy), two_mod_four, "n = 2 (mod 4)", d_commuting_conj_2mod4),
    Entry::new("Cor4.9.iii", (D, Commuting, Conjugacy), zero_mod_four, "n = 0 (mod 4)", d_commuting_conj_0mod4),
    Entry::new("Cor4.8.i", (Q, Commuting, Conjugacy), odd, "n odd", q_commuting_order_odd),
    Entry::new("Cor4.8.ii", (Q, Commuting, Conjugacy), even, "n even", q_commuting_conj_even),
    Entry::new("Cor4.7.i", (SD, Commuting, Conjugacy), odd, "n odd", sd_commuting_conj_odd),
    Entry::new("Cor4.7.ii", (SD, Commuting, Conjugacy), even, "n even", sd_commuting_conj_even),
    // enhanced, equality
    Entry::new("Cor5.1", (D, Enhanced, Equality), all, "n >= 3", d_enhanced_eq),
    Entry::new("Cor5.2", (Q, Enhanced, Equality), all, "n >= 2", q_commuting_eq),
    Entry::new("Thm5.4", (SD, Enhanced, Equality), all, "n >= 2", sd_enhanced_eq).quotient(),
    // enhanced, order
    Entry::new("Cor4.4.i", (D, Enhanced, Order), odd, "n odd, n >= 3", d_commuting_order_odd).note(ORDER_VIA_COMMUTING),
    Entry::new("Cor4.4.ii", (D, Enhanced, Order), even, "n even, n >= 4", d_commuting_order_even).note(ORDER_VIA_COMMUTING),
    Entry::new("Cor4.5.i", (Q, Enhanced, Order), odd, "n odd", q_commuting_order_odd).note(ORDER_VIA_COMMUTING),
    Entry::new("Cor4.5.ii", (Q, Enhanced, Order), even, "n even", q_commuting_order_even).note(ORDER_VIA_COMMUTING),
    Entry::new("Cor4.6", (SD, Enhanced, Order), all, "n >= 2", sd_commuting_order).note(ORDER_VIA_COMMUTING),
    // enhanced, conjugacy
    Entry::new("Cor5.5.i", (D, Enhanced, Conjugacy), odd, "n odd, n >= 3", d_commuting_order_odd),
    Entry::new("Cor5.5.ii", (D, Enhanced, Conjugacy), even, "n even, n >= 4", d_enhanced_conj_even)
        .suspect("listed value n(n-2)/4 has no sqrt2 factor"),
    Entry::new("Cor5.6.i", (Q, Enhanced, Conjugacy), odd, "n odd", q_commuting_order_odd),
    Entry::new("Cor5.6.ii", (Q, Enhanced, Conjugacy), even, "n even", q_enhanced_conj_even),
    Entry::new("Thm5.8.i", (SD, Enhanced, Conjugacy), odd, "n odd", sd_enhanced_conj_odd).quotient(),
    Entry::new("Thm5.8.i.alt", (SD, Enhanced, Conjugacy), odd, "n odd", sd_enhanced_conj_odd_alt)
        .alt()
        .quotient()
        .suspect("multiplicities 4n-3, 2n-1, 2n-1 and value -2n sqrt2 as written in the proof"),
    Entry::new("Thm5.8.ii", (SD, Enhanced, Conjugacy), even, "n even", sd_enhanced_conj_even).quotient(),
    // power, equality
    Entry::new("Thm6.2", (D, Power, Equality), all, "n >= 3", d_power_eq)
        .quotient()
        .note("a_ij gate read symmetrically; phi(d_1) in the first row read as phi(d_t)"),
    Entry::new("Thm6.3", (Q, Power, Equality), all, "n >= 2", q_power_eq)
        .note("'multiplicity at n' read as 'at least n'"),
    Entry::new("Thm6.4", (SD, Power, Equality), all, "n >= 2", sd_power_eq)
        .suspect("-3 sqrt2 comes from the n pairs of odd reflections, so its multiplicity is n, not 2n-1"),
    Entry::new("Thm6.4.proof", (SD, Power, Equality), all, "n >= 2", sd_power_eq_as_proved)
        .alt()
        .suspect("-3 sqrt2 comes from the n pairs of odd reflections, so its multiplicity is n, not 2n-1"),
    // power, order
    Entry::new("Thm6.5.i", (D, Power, Order), odd, "n odd, n >= 3", d_power_order_odd)
        .quotient()
        .suspect("reflections form a clique, so the listed eigenvalue 0 should be -n sqrt2"),
    Entry::new("Thm6.5.i.alt", (D, Power, Order), odd, "n odd, n >= 3", d_power_order_odd_alt).alt().quotient(),
    Entry::new("Thm6.5.ii", (D, Power, Order), even, "n even, n >= 4", d_power_order_even).quotient(),
    Entry::new("Thm6.6.i", (Q, Power, Order), even, "n even", q_power_order_even)
        .suspect("C contains a^{n/2} and a^{3n/2}, which also lie in the clique"),
    Entry::new("Thm6.6.i.alt", (Q, Power, Order), even, "n even", q_power_order_even_alt).alt(),
    Entry::new("Thm6.6.ii", (Q, Power, Order), odd, "n odd", odd_n_reflection_clique),
    Entry::new("Thm6.7", (SD, Power, Order), all, "n >= 2", sd_power_order)
        .suspect("C as stated contains a^n and omits rotations a^i with i > 2n"),
    Entry::new("Thm6.7.alt", (SD, Power, Order), all, "n >= 2", sd_power_order_alt).alt(),
    // power, conjugacy
    Entry::new("Thm6.8.i", (D, Power, Conjugacy), odd, "n odd, n >= 3", d_power_order_odd)
        .quotient()
        .suspect("reflections form a clique, so the listed eigenvalue 0 should be -n sqrt2"),
    Entry::new("Thm6.8.i.alt", (D, Power, Conjugacy), odd, "n odd, n >= 3", d_power_order_odd_alt).alt().quotient(),
    Entry::new("Thm6.8.ii", (D, Power, Conjugacy), even, "n even, n >= 4", d_power_conj_even).quotient(),
    Entry::new("Thm6.9.i", (Q, Power, Conjugacy), even, "n even", q_power_conj_even),
    Entry::new("Thm6.9.ii", (Q, Power, Conjugacy), odd, "n odd", odd_n_reflection_clique),
    Entry::new("Thm6.10.i", (SD, Power, Conjugacy), odd, "n odd", sd_power_conj_odd),
    Entry::new("Thm6.10.ii", (SD, Power, Conjugacy), even, "n even", sd_power_conj_even),
];

pub(crate) fn entries() -> &'static [Entry] {
    ENTRIES
}
