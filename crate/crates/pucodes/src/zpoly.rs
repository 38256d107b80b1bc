//! Laurent polynomials in `Z^{-1}` with [`Scalar`] coefficients.
//!
//! A [`ZPoly`] represents `sum_k c(k) * Z^{-k}` where the shift `k` may be
//! negative (anticausal terms, produced by the tilde operator) or
//! nonnegative (causal terms, i.e. ordinary delayed samples). The layout is
//! a dense coefficient array with a shift offset; boundary zeros are trimmed
//! after every operation so equality is structural.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{Scalar, ScalarKind};

/// Laurent polynomial in `Z^{-1}` over one scalar kind.
#[derive(Debug, Clone, PartialEq)]
pub struct ZPoly {
    kind: ScalarKind,
    /// Shift of the first stored coefficient: `coeffs[i]` multiplies
    /// `Z^{-(min_shift + i)}`.
    min_shift: i64,
    coeffs: Vec<Scalar>,
}

impl ZPoly {
    pub fn zero(kind: ScalarKind) -> Self {
        ZPoly {
            kind,
            min_shift: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn one(kind: ScalarKind) -> Self {
        ZPoly::constant(Scalar::one(kind))
    }

    /// Degree-zero polynomial holding `value`.
    pub fn constant(value: Scalar) -> Self {
        ZPoly::monomial(value, 0)
    }

    /// `value * Z^{-shift}`.
    pub fn monomial(value: Scalar, shift: i64) -> Self {
        let kind = value.kind();
        let mut p = ZPoly {
            kind,
            min_shift: shift,
            coeffs: vec![value],
        };
        p.normalize();
        p
    }

    /// Causal polynomial from a coefficient list: `coeffs[n]` multiplies
    /// `Z^{-n}`. All coefficients must share `kind`.
    pub fn from_causal(kind: ScalarKind, coeffs: Vec<Scalar>) -> Result<Self> {
        for c in &coeffs {
            if c.kind() != kind {
                return Err(Error::KindMismatch {
                    left: kind,
                    right: c.kind(),
                });
            }
        }
        let mut p = ZPoly {
            kind,
            min_shift: 0,
            coeffs,
        };
        p.normalize();
        Ok(p)
    }

    fn normalize(&mut self) {
        let leading = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if leading == self.coeffs.len() {
            self.coeffs.clear();
            self.min_shift = 0;
            return;
        }
        let trailing = self
            .coeffs
            .iter()
            .rev()
            .take_while(|c| c.is_zero())
            .count();
        self.coeffs.drain(self.coeffs.len() - trailing..);
        self.coeffs.drain(..leading);
        self.min_shift += leading as i64;
    }

    pub fn kind(&self) -> ScalarKind {
        self.kind
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Smallest shift with a nonzero coefficient; `None` for the zero
    /// polynomial.
    pub fn min_shift(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.min_shift)
    }

    /// Largest shift with a nonzero coefficient.
    pub fn max_shift(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.min_shift + self.coeffs.len() as i64 - 1)
    }

    /// Coefficient of `Z^{-k}` (zero when absent).
    pub fn coeff(&self, k: i64) -> Scalar {
        let idx = k - self.min_shift;
        if idx >= 0 && (idx as usize) < self.coeffs.len() {
            self.coeffs[idx as usize].clone()
        } else {
            Scalar::zero(self.kind)
        }
    }

    /// Iterate `(shift, coefficient)` pairs, skipping zero coefficients.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Scalar)> {
        let base = self.min_shift;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (base + i as i64, c))
    }

    /// Number of nonzero coefficients.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    fn kind_check(&self, rhs: &ZPoly) -> Result<()> {
        if self.kind == rhs.kind {
            Ok(())
        } else {
            Err(Error::KindMismatch {
                left: self.kind,
                right: rhs.kind,
            })
        }
    }

    pub fn add(&self, rhs: &ZPoly) -> Result<ZPoly> {
        self.kind_check(rhs)?;
        if self.is_zero() {
            return Ok(rhs.clone());
        }
        if rhs.is_zero() {
            return Ok(self.clone());
        }
        let lo = self.min_shift.min(rhs.min_shift);
        let hi = self.max_shift().unwrap().max(rhs.max_shift().unwrap());
        let mut coeffs = Vec::with_capacity((hi - lo + 1) as usize);
        for k in lo..=hi {
            coeffs.push(self.coeff(k).add(&rhs.coeff(k))?);
        }
        let mut out = ZPoly {
            kind: self.kind,
            min_shift: lo,
            coeffs,
        };
        out.normalize();
        Ok(out)
    }

    pub fn sub(&self, rhs: &ZPoly) -> Result<ZPoly> {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> ZPoly {
        ZPoly {
            kind: self.kind,
            min_shift: self.min_shift,
            coeffs: self.coeffs.iter().map(Scalar::neg).collect(),
        }
    }

    /// Coefficient convolution: the Z-domain form of discrete convolution.
    pub fn mul(&self, rhs: &ZPoly) -> Result<ZPoly> {
        self.kind_check(rhs)?;
        if self.is_zero() || rhs.is_zero() {
            return Ok(ZPoly::zero(self.kind));
        }
        let mut coeffs = vec![Scalar::zero(self.kind); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] = coeffs[i + j].add(&a.mul(b)?)?;
                }
            }
        }
        let mut out = ZPoly {
            kind: self.kind,
            min_shift: self.min_shift + rhs.min_shift,
            coeffs,
        };
        out.normalize();
        Ok(out)
    }

    pub fn scale(&self, factor: &Scalar) -> Result<ZPoly> {
        self.mul(&ZPoly::constant(factor.clone()))
    }

    /// Multiply by `Z^{-d}` (negative `d` advances).
    pub fn delayed(&self, d: i64) -> ZPoly {
        if self.is_zero() {
            return self.clone();
        }
        ZPoly {
            kind: self.kind,
            min_shift: self.min_shift + d,
            coeffs: self.coeffs.clone(),
        }
    }

    /// Scalar-level tilde: conjugate every coefficient and negate every
    /// shift, i.e. `x(Z^{-1}) -> x^*(Z)`.
    pub fn tilde(&self) -> ZPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs: Vec<Scalar> = self.coeffs.iter().map(Scalar::conj).collect();
        coeffs.reverse();
        ZPoly {
            kind: self.kind,
            min_shift: -(self.max_shift().unwrap()),
            coeffs,
        }
    }

    /// `Some(c)` when the polynomial is the constant `c` (including zero).
    pub fn as_constant(&self) -> Option<Scalar> {
        if self.is_zero() {
            Some(Scalar::zero(self.kind))
        } else if self.min_shift == 0 && self.coeffs.len() == 1 {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Inverse Z-transform of a causal polynomial: the coefficient list for
    /// shifts `0..=max_shift`. Errors on anticausal input.
    pub fn to_causal_sequence(&self) -> Result<Vec<Scalar>> {
        if let Some(min) = self.min_shift() {
            if min < 0 {
                return Err(Error::AnticausalInput { min_exponent: min });
            }
        }
        let len = self.max_shift().map_or(0, |m| m as usize + 1);
        Ok((0..len as i64).map(|k| self.coeff(k)).collect())
    }
}

impl fmt::Display for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "({c})")?,
                _ => write!(f, "({c})*Z^{}", -k)?,
            }
        }
        Ok(())
    }
}

/// Per-port delays (in samples) for one recursion stage.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DelayVector(Vec<u64>);

impl DelayVector {
    pub fn new(delays: Vec<u64>) -> Self {
        DelayVector(delays)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn delays(&self) -> &[u64] {
        &self.0
    }

    pub fn max(&self) -> u64 {
        self.0.iter().copied().max().unwrap_or(0)
    }
}

/// Regular delays `[0, d, 2d, ..., (M-1)d]`.
pub fn regular_delays(m: usize, d: u64) -> DelayVector {
    DelayVector((0..m as u64).map(|port| port * d).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gp(coeffs: &[(i64, i64, i64)]) -> ZPoly {
        // (shift, a, b) gauss terms
        let mut p = ZPoly::zero(ScalarKind::Gauss);
        for &(k, a, b) in coeffs {
            p = p.add(&ZPoly::monomial(Scalar::gauss(a, b), k)).unwrap();
        }
        p
    }

    #[test]
    fn mul_basic() {
        // (1 + Z^-1)(1 - Z^-1) = 1 - Z^-2
        let a = gp(&[(0, 1, 0), (1, 1, 0)]);
        let b = gp(&[(0, 1, 0), (1, -1, 0)]);
        assert_eq!(a.mul(&b).unwrap(), gp(&[(0, 1, 0), (2, -1, 0)]));
    }

    #[test]
    fn mul_laurent_cancellation() {
        // (1 + Z)(1 - Z^-1) = Z - Z^-1: the constant terms cancel
        let a = gp(&[(0, 1, 0), (-1, 1, 0)]);
        let b = gp(&[(0, 1, 0), (1, -1, 0)]);
        assert_eq!(a.mul(&b).unwrap(), gp(&[(-1, 1, 0), (1, -1, 0)]));
    }

    #[test]
    fn mul_identity() {
        let a = gp(&[(-2, 3, 1), (0, 0, -2), (5, 1, 0)]);
        assert_eq!(a.mul(&ZPoly::one(ScalarKind::Gauss)).unwrap(), a);
    }

    #[test]
    fn tilde_is_involutive_and_flips_shifts() {
        let p = gp(&[(1, 0, 1), (3, 2, -1)]);
        let t = p.tilde();
        assert_eq!(t.coeff(-1), Scalar::gauss(0, -1));
        assert_eq!(t.coeff(-3), Scalar::gauss(2, 1));
        assert_eq!(t.tilde(), p);
    }

    #[test]
    fn normalization_trims_zeros() {
        let p = ZPoly::from_causal(
            ScalarKind::Gauss,
            vec![
                Scalar::gauss(0, 0),
                Scalar::gauss(1, 0),
                Scalar::gauss(0, 0),
            ],
        )
        .unwrap();
        assert_eq!(p.min_shift(), Some(1));
        assert_eq!(p.max_shift(), Some(1));
        assert_eq!(p, ZPoly::monomial(Scalar::gauss(1, 0), 1));
    }

    #[test]
    fn causal_sequence_rejects_anticausal() {
        let p = gp(&[(-1, 1, 0)]);
        assert!(matches!(
            p.to_causal_sequence(),
            Err(Error::AnticausalInput { min_exponent: -1 })
        ));
        let q = gp(&[(0, 1, 0), (2, -1, 0)]);
        assert_eq!(
            q.to_causal_sequence().unwrap(),
            vec![Scalar::gauss(1, 0), Scalar::gauss(0, 0), Scalar::gauss(-1, 0)]
        );
    }

    #[test]
    fn regular_delay_vectors() {
        assert_eq!(regular_delays(3, 1).delays(), &[0, 1, 2]);
        assert_eq!(regular_delays(3, 3).delays(), &[0, 3, 6]);
        assert_eq!(regular_delays(2, 0).delays(), &[0, 0]);
    }
}
