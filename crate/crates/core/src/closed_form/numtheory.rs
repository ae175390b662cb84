use crate::graph::SimpleGraph;

/// Euler's totient by trial factorisation.
pub fn euler_phi(n: u64) -> u64 {
    assert!(n >= 1, "phi is defined for n >= 1");
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Divisors of `n` other than 1 and `n`, ascending.
pub fn proper_divisors(n: u64) -> Vec<u64> {
    (2..n).filter(|d| n.is_multiple_of(*d)).collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct DivisorStructure {
    pub divisors: Vec<u64>,
    pub phi: Vec<u64>,
    /// `d_i ~ d_j` iff one divides the other
    pub skeleton: SimpleGraph,
}

pub fn divisor_structure(n: u64) -> DivisorStructure {
    let divisors = proper_divisors(n);
    let phi = divisors.iter().map(|&d| euler_phi(d)).collect();
    let t = divisors.len();
    let mut skeleton = SimpleGraph::empty(t);
    for i in 0..t {
        for j in i + 1..t {
            if divisors[j].is_multiple_of(divisors[i]) {
                skeleton.add_edge(i, j);
            }
        }
    }
    DivisorStructure { divisors, phi, skeleton }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_values() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(6), 2);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(euler_phi(97), 96);
        assert_eq!(euler_phi(64), 32);
    }

    #[test]
    fn phi_sums_over_divisors() {
        for n in 1..200u64 {
            let s: u64 = (1..=n).filter(|d| n % d == 0).map(euler_phi).sum();
            assert_eq!(s, n);
        }
    }

    #[test]
    fn structure_of_six_and_twelve() {
        let s6 = divisor_structure(6);
        assert_eq!(s6.divisors, vec![2, 3]);
        assert_eq!(s6.phi, vec![1, 2]);
        assert_eq!(s6.skeleton.edge_count(), 0);

        let s12 = divisor_structure(12);
        assert_eq!(s12.divisors, vec![2, 3, 4, 6]);
        assert_eq!(s12.skeleton.edges(), vec![(0, 2), (0, 3), (1, 3)]);
    }

    #[test]
    fn primes_have_no_proper_divisors() {
        for p in [2, 3, 5, 7, 13] {
            let s = divisor_structure(p);
            assert!(s.divisors.is_empty());
            assert_eq!(s.skeleton.vertex_count(), 0);
        }
    }
}
