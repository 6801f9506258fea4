//! Exact zero test for finite sums of rational multiples of roots of unity.
//!
//! A sum sum_i c_i zeta_L^{k_i} is rewritten in the tensor basis of
//! Q(zeta_L) = tensor product over prime powers q || L of Q(zeta_q). Each
//! factor carries the single sparse relation Phi_q(zeta_q) = 0, so reduction
//! never densifies: a term expands into at most p-1 terms per axis. The sum
//! vanishes iff every accumulated tensor coordinate vanishes.
//!
//! This avoids building Phi_L for large composite L, which matters when
//! testing stability of points whose orders carry a large power of z.

use super::tables::factorize;
use num_rational::BigRational;
use num_traits::Zero;
use std::collections::HashMap;

struct Axis {
    q: u64,      // p^e
    qp: u64,     // p^(e-1)
    phi: u64,    // q - qp
    beta: u64,   // (L/q)^{-1} mod q, CRT exponent splitter
    stride: u64, // mixed-radix packing stride
}

fn mod_inverse(a: u64, m: u64) -> u64 {
    // extended gcd; gcd(a, m) = 1 by construction
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    debug_assert_eq!(old_r, 1);
    (old_s.rem_euclid(m as i128)) as u64
}

/// Exact test of sum_i c_i * e^(2 pi i k_i / order) == 0.
pub fn torsion_sum_is_zero<I>(order: u64, terms: I) -> bool
where
    I: IntoIterator<Item = (u64, BigRational)>,
{
    assert!(order >= 1);
    let mut axes = Vec::new();
    {
        let mut stride = 1u64;
        for (p, e) in factorize(order) {
            let q = p.pow(e);
            let qp = q / p;
            let phi = q - qp;
            let beta = mod_inverse((order / q) % q, q);
            axes.push(Axis { q, qp, phi, beta, stride });
            stride *= phi;
        }
    }

    let mut acc: HashMap<u64, BigRational> = HashMap::new();
    // Worklist of partially reduced terms: (axis index, packed prefix, pending exponents, coeff).
    let mut stack: Vec<(usize, u64, Vec<u64>, BigRational)> = Vec::new();
    for (k, c) in terms {
        if c.is_zero() {
            continue;
        }
        let comps: Vec<u64> = axes.iter().map(|ax| ((k % order) % ax.q * ax.beta) % ax.q).collect();
        stack.push((0, 0, comps, c));
        while let Some((i, packed, comps, c)) = stack.pop() {
            if i == axes.len() {
                let entry = acc.entry(packed).or_insert_with(BigRational::zero);
                *entry += c;
                continue;
            }
            let ax = &axes[i];
            let j = comps[i];
            if j < ax.phi {
                stack.push((i + 1, packed + j * ax.stride, comps, c));
            } else {
                // zeta^j = -sum_{l=0}^{p-2} zeta^{(j - phi) + l*qp}
                let base = j - ax.phi;
                let p = ax.q / ax.qp;
                for l in 0..(p - 1) {
                    let mut nc = comps.clone();
                    nc[i] = base + l * ax.qp;
                    debug_assert!(nc[i] < ax.phi);
                    stack.push((i + 1, packed + nc[i] * ax.stride, nc, -c.clone()));
                }
            }
        }
    }
    acc.values().all(Zero::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn rat(n: i64) -> BigRational {
        BigRational::from(BigInt::from(n))
    }

    #[test]
    fn cube_roots_sum_to_zero() {
        assert!(torsion_sum_is_zero(3, vec![(0, rat(1)), (1, rat(1)), (2, rat(1))]));
    }

    #[test]
    fn all_nth_roots_sum_to_zero() {
        for n in 2..=30u64 {
            let terms: Vec<_> = (0..n).map(|k| (k, rat(1))).collect();
            assert!(torsion_sum_is_zero(n, terms), "n = {n}");
        }
    }

    #[test]
    fn nonzero_sums() {
        assert!(!torsion_sum_is_zero(1, vec![(0, rat(2))]));
        assert!(!torsion_sum_is_zero(5, vec![(0, rat(1)), (1, rat(1))]));
        assert!(!torsion_sum_is_zero(12, vec![(1, rat(1))]));
    }

    #[test]
    fn sixth_root_identities() {
        // zeta_6 = 1 + zeta_3^2  (since zeta_6 - zeta_3^2 = zeta_6 - zeta_6^4 and
        // 1 + zeta_6^2 = zeta_6): check zeta_6^2 - zeta_6 + 1 = 0 via Phi_6.
        assert!(torsion_sum_is_zero(6, vec![(2, rat(1)), (1, rat(-1)), (0, rat(1))]));
        // zeta_12 alone is not rational
        assert!(!torsion_sum_is_zero(12, vec![(1, rat(1)), (0, rat(-1))]));
    }

    #[test]
    fn cancellation_across_prime_powers() {
        // zeta_15^5 = zeta_3, so zeta_15^5 - zeta_3-lift must vanish: exponent 5 vs 5.
        assert!(torsion_sum_is_zero(15, vec![(5, rat(1)), (5, rat(-1))]));
        // zeta_15^3 = zeta_5: 3 and 3.
        assert!(torsion_sum_is_zero(15, vec![(3, rat(4)), (3, rat(-4))]));
    }
}
