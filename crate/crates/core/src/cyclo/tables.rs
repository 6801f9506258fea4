//! Integer number theory helpers and the cyclotomic polynomial cache.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// Prime factorization by trial division, as (prime, exponent) pairs.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Euler totient.
pub fn euler_phi(n: u64) -> u64 {
    let mut phi = n;
    for (p, _) in factorize(n) {
        phi = phi / p * (p - 1);
    }
    phi
}

/// All divisors of n, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut divs = vec![1u64];
    for (p, e) in factorize(n) {
        let base = divs.clone();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            divs.extend(base.iter().map(|d| d * pk));
        }
    }
    divs.sort_unstable();
    divs
}

/// Product of the distinct prime divisors of n.
pub fn radical(n: u64) -> u64 {
    factorize(n).iter().map(|&(p, _)| p).product::<u64>().max(1)
}

fn trim(v: &mut Vec<BigInt>) {
    while v.last().map(Zero::is_zero).unwrap_or(false) {
        v.pop();
    }
}

/// Exact division of integer polynomials (ascending coefficients).
/// Panics if the division is not exact; callers only divide X^n - 1 by
/// known cyclotomic factors.
fn zpoly_exact_div(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem: Vec<BigInt> = num.to_vec();
    trim(&mut rem);
    let mut d = den.to_vec();
    trim(&mut d);
    assert!(!d.is_empty(), "division by zero polynomial");
    let dn = d.len() - 1;
    let lead = d[dn].clone();
    assert!(rem.len() > dn || rem.is_empty());
    let mut quot = vec![BigInt::zero(); rem.len().saturating_sub(dn)];
    while rem.len() > dn {
        let k = rem.len() - 1 - dn;
        let c = &rem[rem.len() - 1] / &lead;
        quot[k] = c.clone();
        for (i, dc) in d.iter().enumerate() {
            let idx = k + i;
            let sub = &c * dc;
            rem[idx] -= sub;
        }
        trim(&mut rem);
    }
    assert!(rem.is_empty(), "inexact cyclotomic division");
    quot
}

fn x_n_minus_1(n: u64) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); n as usize + 1];
    v[0] = -BigInt::one();
    v[n as usize] = BigInt::one();
    v
}

/// Squarefree-case cyclotomic polynomial by recursive division.
fn cyclotomic_squarefree(n: u64, cache: &mut HashMap<u64, Arc<Vec<BigInt>>>) -> Arc<Vec<BigInt>> {
    if let Some(hit) = cache.get(&n) {
        return hit.clone();
    }
    let result = if n == 1 {
        vec![-BigInt::one(), BigInt::one()]
    } else {
        let mut acc = x_n_minus_1(n);
        for d in divisors(n) {
            if d < n {
                let phi_d = cyclotomic_squarefree(d, cache);
                acc = zpoly_exact_div(&acc, &phi_d);
            }
        }
        acc
    };
    let arc = Arc::new(result);
    cache.insert(n, arc.clone());
    arc
}

/// Inflate p(x) to p(x^s).
fn inflate(p: &[BigInt], s: u64) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); (p.len() - 1) * s as usize + 1];
    for (i, c) in p.iter().enumerate() {
        out[i * s as usize] = c.clone();
    }
    out
}

static PHI_CACHE: OnceLock<Mutex<HashMap<u64, Arc<Vec<BigInt>>>>> = OnceLock::new();

/// Coefficients of the M-th cyclotomic polynomial, ascending, monic,
/// degree phi(M). Uses Phi_M(x) = Phi_rad(M)(x^(M/rad(M))).
pub fn cyclotomic_poly(m: u64) -> Arc<Vec<BigInt>> {
    assert!(m >= 1, "conductor must be positive");
    let cache = PHI_CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().unwrap();
    if let Some(hit) = guard.get(&m) {
        return hit.clone();
    }
    let r = radical(m);
    let base = cyclotomic_squarefree(r, &mut guard);
    let result = if r == m {
        base
    } else {
        let arc = Arc::new(inflate(&base, m / r));
        guard.insert(m, arc.clone());
        arc
    };
    guard.insert(m, result.clone());
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn phi_as_i64(m: u64) -> Vec<i64> {
        cyclotomic_poly(m).iter().map(|c| c.to_i64().unwrap()).collect()
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(phi_as_i64(1), vec![-1, 1]);
        assert_eq!(phi_as_i64(2), vec![1, 1]);
        assert_eq!(phi_as_i64(3), vec![1, 1, 1]);
        assert_eq!(phi_as_i64(4), vec![1, 0, 1]);
        assert_eq!(phi_as_i64(6), vec![1, -1, 1]);
        assert_eq!(phi_as_i64(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn degree_is_phi() {
        for m in 1..=60 {
            assert_eq!(cyclotomic_poly(m).len() as u64, euler_phi(m) + 1, "m={m}");
        }
    }

    #[test]
    fn divisor_lists() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(7), vec![1, 7]);
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(30), 8);
    }
}
