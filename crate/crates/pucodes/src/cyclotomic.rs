//! Cyclotomic polynomials and exact reduction of integer coefficient
//! vectors modulo `Phi_N`.
//!
//! Values of the cyclotomic scalar kind live in `Z[x]/Phi_N(x)`, the ring of
//! integers of the N-th cyclotomic field. `Phi_N` is computed exactly by
//! dividing `x^N - 1` by the product of `Phi_d` over proper divisors `d` of
//! `N`; every division in that chain is exact over the integers because the
//! divisors are monic.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

// Exact-kind payloads are i64 by policy: coefficient growth through the
// generator stages is small, but wrapping must never pass silently.
pub(crate) fn add64(a: i64, b: i64) -> i64 {
    a.checked_add(b)
        .expect("integer overflow in exact scalar arithmetic")
}

pub(crate) fn sub64(a: i64, b: i64) -> i64 {
    a.checked_sub(b)
        .expect("integer overflow in exact scalar arithmetic")
}

pub(crate) fn mul64(a: i64, b: i64) -> i64 {
    a.checked_mul(b)
        .expect("integer overflow in exact scalar arithmetic")
}

/// The N-th cyclotomic polynomial, coefficients in ascending degree order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicBasis {
    order: u32,
    phi: Vec<i64>,
}

impl CyclotomicBasis {
    /// The order N.
    pub fn order(&self) -> u32 {
        self.order
    }

    /// Coefficients of `Phi_N`, ascending degree; the leading coefficient
    /// (last entry) is 1.
    pub fn phi(&self) -> &[i64] {
        &self.phi
    }

    /// Degree of `Phi_N`, i.e. Euler's totient of N.
    pub fn degree(&self) -> usize {
        self.phi.len() - 1
    }
}

/// Compute `Phi_N` exactly (cached across calls).
pub fn cyclotomic_basis(order: u32) -> CyclotomicBasis {
    assert!(order >= 1, "cyclotomic order must be >= 1");
    CyclotomicBasis {
        order,
        phi: phi_coeffs(order).as_ref().clone(),
    }
}

fn cache() -> &'static Mutex<HashMap<u32, Arc<Vec<i64>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

pub(crate) fn phi_coeffs(order: u32) -> Arc<Vec<i64>> {
    if let Some(hit) = cache().lock().unwrap().get(&order) {
        return Arc::clone(hit);
    }
    let computed = Arc::new(compute_phi(order));
    cache()
        .lock()
        .unwrap()
        .entry(order)
        .or_insert(computed)
        .clone()
}

fn compute_phi(order: u32) -> Vec<i64> {
    // x^N - 1
    let mut num = vec![0i64; order as usize + 1];
    num[0] = -1;
    num[order as usize] = 1;
    for d in 1..order {
        if order.is_multiple_of(d) {
            let divisor = phi_coeffs(d);
            num = divide_exact(&num, &divisor);
        }
    }
    num
}

/// Exact division of integer polynomials; `divisor` must be monic and the
/// division must leave no remainder.
fn divide_exact(dividend: &[i64], divisor: &[i64]) -> Vec<i64> {
    debug_assert_eq!(*divisor.last().unwrap(), 1, "divisor must be monic");
    let mut rem: Vec<i64> = dividend.to_vec();
    let deg_b = divisor.len() - 1;
    let deg_a = dividend.len() - 1;
    assert!(deg_a >= deg_b);
    let mut quot = vec![0i64; deg_a - deg_b + 1];
    for i in (deg_b..=deg_a).rev() {
        let c = rem[i];
        if c != 0 {
            quot[i - deg_b] = c;
            for (j, &b) in divisor.iter().enumerate() {
                rem[i - deg_b + j] = sub64(rem[i - deg_b + j], mul64(c, b));
            }
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0), "division was not exact");
    quot
}

/// Reduce a raw coefficient vector (arbitrary length, exponents of zeta_N)
/// to the canonical representative: length N, degree below deg(Phi_N),
/// entries above deg(Phi_N) - 1 all zero.
pub(crate) fn reduce(order: u32, raw: &[i64]) -> Vec<i64> {
    let n = order as usize;
    // Fold exponents mod N first (zeta^N = 1); sound because Phi_N | x^N - 1.
    let mut folded = vec![0i64; n];
    for (e, &c) in raw.iter().enumerate() {
        if c != 0 {
            let idx = e % n;
            folded[idx] = add64(folded[idx], c);
        }
    }
    let phi = phi_coeffs(order);
    let deg = phi.len() - 1;
    for i in (deg..n).rev() {
        let c = folded[i];
        if c != 0 {
            folded[i] = 0;
            for (j, &b) in phi.iter().enumerate().take(deg) {
                folded[i - deg + j] = sub64(folded[i - deg + j], mul64(c, b));
            }
        }
    }
    folded
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_small_cyclotomics() {
        assert_eq!(cyclotomic_basis(1).phi(), &[-1, 1]); // x - 1
        assert_eq!(cyclotomic_basis(2).phi(), &[1, 1]); // x + 1
        assert_eq!(cyclotomic_basis(3).phi(), &[1, 1, 1]); // x^2 + x + 1
        assert_eq!(cyclotomic_basis(4).phi(), &[1, 0, 1]); // x^2 + 1
        assert_eq!(cyclotomic_basis(5).phi(), &[1, 1, 1, 1, 1]);
        assert_eq!(cyclotomic_basis(6).phi(), &[1, -1, 1]); // x^2 - x + 1
        assert_eq!(cyclotomic_basis(12).phi(), &[1, 0, -1, 0, 1]);
    }

    #[test]
    fn phi_divides_xn_minus_one() {
        // Independent check: multiply Phi_d over all divisors d of N and
        // compare against x^N - 1.
        for n in 1..=16u32 {
            let mut prod = vec![1i64];
            for d in 1..=n {
                if n % d == 0 {
                    let phi = cyclotomic_basis(d);
                    prod = poly_mul(&prod, phi.phi());
                }
            }
            let mut expect = vec![0i64; n as usize + 1];
            expect[0] = -1;
            expect[n as usize] = 1;
            assert_eq!(prod, expect, "product of Phi_d != x^{n} - 1");
        }
    }

    fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
        let mut out = vec![0i64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        out
    }

    #[test]
    fn reduction_is_idempotent() {
        let raw = vec![3, -2, 5, 7, 1, 0, 4, -9];
        for order in [3u32, 4, 5, 6, 12] {
            let once = reduce(order, &raw);
            let twice = reduce(order, &once);
            assert_eq!(once, twice);
            assert_eq!(once.len(), order as usize);
            let deg = cyclotomic_basis(order).degree();
            assert!(once[deg..].iter().all(|&c| c == 0));
        }
    }

    #[test]
    fn root_sum_vanishes() {
        // 1 + zeta + ... + zeta^(N-1) = 0 for N > 1.
        for order in [2u32, 3, 4, 5, 6, 7, 12] {
            let raw = vec![1i64; order as usize];
            assert!(reduce(order, &raw).iter().all(|&c| c == 0));
        }
    }
}
