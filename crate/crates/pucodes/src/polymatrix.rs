//! Square matrices of Laurent polynomials: the Z-domain home of unitary
//! matrices, delay matrices and generating matrices.
//!
//! The tilde (paraconjugate) operator transposes, conjugates every
//! coefficient and maps `Z^{-1} -> Z`. A matrix `A` is paraunitary when
//! `A * tilde(A) = C * I` for a positive real constant `C`; `C = 1` is the
//! strict-sense unitary case, `C > 1` the wide-sense case that integer
//! constellations produce.

use crate::error::{Error, Result};
use crate::scalar::{Scalar, ScalarKind};
use crate::zpoly::{DelayVector, ZPoly};

/// `M x M` grid of [`ZPoly`] entries, all of one scalar kind.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyMatrix {
    size: usize,
    kind: ScalarKind,
    entries: Vec<ZPoly>, // row-major
}

/// Outcome of a paraunitarity check.
#[derive(Debug, Clone, PartialEq)]
pub struct ParaunitaryCheck {
    /// True when `A * tilde(A) = C * I` with `C` a positive real constant.
    pub is_paraunitary: bool,
    /// The constant `C`, present when the check passed.
    pub constant: Option<Scalar>,
}

impl PolyMatrix {
    pub fn identity(size: usize, kind: ScalarKind) -> Self {
        let mut entries = vec![ZPoly::zero(kind); size * size];
        for r in 0..size {
            entries[r * size + r] = ZPoly::one(kind);
        }
        PolyMatrix { size, kind, entries }
    }

    /// Constant matrix from a scalar grid; rows must be square and share a
    /// kind.
    pub fn from_scalars(rows: &[Vec<Scalar>]) -> Result<Self> {
        let size = rows.len();
        let kind = rows
            .first()
            .and_then(|r| r.first())
            .map(Scalar::kind)
            .unwrap_or(ScalarKind::Gauss);
        let mut entries = Vec::with_capacity(size * size);
        for row in rows {
            if row.len() != size {
                return Err(Error::SizeMismatch {
                    left: size,
                    right: row.len(),
                });
            }
            for s in row {
                if s.kind() != kind {
                    return Err(Error::KindMismatch {
                        left: kind,
                        right: s.kind(),
                    });
                }
                entries.push(ZPoly::constant(s.clone()));
            }
        }
        Ok(PolyMatrix { size, kind, entries })
    }

    /// Matrix from row-major polynomial entries.
    pub fn from_entries(size: usize, kind: ScalarKind, entries: Vec<ZPoly>) -> Result<Self> {
        if entries.len() != size * size {
            return Err(Error::SizeMismatch {
                left: size * size,
                right: entries.len(),
            });
        }
        for e in &entries {
            if e.kind() != kind {
                return Err(Error::KindMismatch {
                    left: kind,
                    right: e.kind(),
                });
            }
        }
        Ok(PolyMatrix { size, kind, entries })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn kind(&self) -> ScalarKind {
        self.kind
    }

    pub fn entry(&self, row: usize, col: usize) -> &ZPoly {
        &self.entries[row * self.size + col]
    }

    fn compat_check(&self, rhs: &PolyMatrix) -> Result<()> {
        if self.size != rhs.size {
            return Err(Error::SizeMismatch {
                left: self.size,
                right: rhs.size,
            });
        }
        if self.kind != rhs.kind {
            return Err(Error::KindMismatch {
                left: self.kind,
                right: rhs.kind,
            });
        }
        Ok(())
    }

    pub fn mul(&self, rhs: &PolyMatrix) -> Result<PolyMatrix> {
        self.compat_check(rhs)?;
        let m = self.size;
        let mut entries = Vec::with_capacity(m * m);
        for r in 0..m {
            for c in 0..m {
                let mut acc = ZPoly::zero(self.kind);
                for j in 0..m {
                    acc = acc.add(&self.entry(r, j).mul(rhs.entry(j, c))?)?;
                }
                entries.push(acc);
            }
        }
        Ok(PolyMatrix {
            size: m,
            kind: self.kind,
            entries,
        })
    }

    pub fn add(&self, rhs: &PolyMatrix) -> Result<PolyMatrix> {
        self.compat_check(rhs)?;
        let entries = self
            .entries
            .iter()
            .zip(rhs.entries.iter())
            .map(|(a, b)| a.add(b))
            .collect::<Result<Vec<_>>>()?;
        Ok(PolyMatrix {
            size: self.size,
            kind: self.kind,
            entries,
        })
    }

    /// Entrywise multiplication by a polynomial (e.g. a delay `Z^{-n}`).
    pub fn scale_poly(&self, factor: &ZPoly) -> Result<PolyMatrix> {
        let entries = self
            .entries
            .iter()
            .map(|e| e.mul(factor))
            .collect::<Result<Vec<_>>>()?;
        Ok(PolyMatrix {
            size: self.size,
            kind: self.kind,
            entries,
        })
    }

    pub fn transpose(&self) -> PolyMatrix {
        let m = self.size;
        let mut entries = Vec::with_capacity(m * m);
        for r in 0..m {
            for c in 0..m {
                entries.push(self.entry(c, r).clone());
            }
        }
        PolyMatrix {
            size: m,
            kind: self.kind,
            entries,
        }
    }

    /// The paraconjugate `tilde(A)(Z^{-1}) = A^H(Z)`: transpose, conjugate
    /// coefficients, negate exponents.
    pub fn tilde(&self) -> PolyMatrix {
        let m = self.size;
        let mut entries = Vec::with_capacity(m * m);
        for r in 0..m {
            for c in 0..m {
                entries.push(self.entry(c, r).tilde());
            }
        }
        PolyMatrix {
            size: m,
            kind: self.kind,
            entries,
        }
    }

    /// True when every entry is a degree-zero polynomial.
    pub fn is_constant(&self) -> bool {
        self.entries
            .iter()
            .all(|e| e.as_constant().is_some())
    }

    /// Constant matrices as a plain scalar grid.
    pub fn to_scalar_grid(&self) -> Option<Vec<Vec<Scalar>>> {
        let mut rows = Vec::with_capacity(self.size);
        for r in 0..self.size {
            let mut row = Vec::with_capacity(self.size);
            for c in 0..self.size {
                row.push(self.entry(r, c).as_constant()?);
            }
            rows.push(row);
        }
        Some(rows)
    }

    /// Matrix times column vector of polynomials.
    pub fn mul_poly_vec(&self, v: &[ZPoly]) -> Result<Vec<ZPoly>> {
        if v.len() != self.size {
            return Err(Error::SizeMismatch {
                left: self.size,
                right: v.len(),
            });
        }
        let mut out = Vec::with_capacity(self.size);
        for r in 0..self.size {
            let mut acc = ZPoly::zero(self.kind);
            for (c, x) in v.iter().enumerate() {
                acc = acc.add(&self.entry(r, c).mul(x)?)?;
            }
            out.push(acc);
        }
        Ok(out)
    }

    /// Row vector of polynomials times matrix.
    pub fn row_vec_mul(v: &[ZPoly], m: &PolyMatrix) -> Result<Vec<ZPoly>> {
        if v.len() != m.size {
            return Err(Error::SizeMismatch {
                left: m.size,
                right: v.len(),
            });
        }
        let mut out = Vec::with_capacity(m.size);
        for c in 0..m.size {
            let mut acc = ZPoly::zero(m.kind);
            for (r, x) in v.iter().enumerate() {
                acc = acc.add(&x.mul(m.entry(r, c))?)?;
            }
            out.push(acc);
        }
        Ok(out)
    }

    /// Largest `Z^{-k}` exponent appearing anywhere in the matrix.
    pub fn max_shift(&self) -> Option<i64> {
        self.entries.iter().filter_map(ZPoly::max_shift).max()
    }

    /// Smallest exponent appearing anywhere in the matrix.
    pub fn min_shift(&self) -> Option<i64> {
        self.entries.iter().filter_map(ZPoly::min_shift).min()
    }

    /// Check `A * tilde(A) = C * I`. Exact kinds use exact zero tests (the
    /// tolerance is ignored); floats compare magnitudes against `tol`.
    ///
    /// Returns `is_paraunitary = false` when an off-diagonal entry is
    /// nonzero or the diagonal constant is not positive real; returns
    /// [`Error::NonConstantDiagonal`] when diagonal entries are
    /// non-constant polynomials or unequal.
    pub fn paraunitary_check(&self, tol: f64) -> Result<ParaunitaryCheck> {
        let product = self.mul(&self.tilde())?;
        let m = self.size;
        for r in 0..m {
            for c in 0..m {
                if r != c {
                    for (_, coeff) in product.entry(r, c).terms() {
                        if !coeff.vanishes(tol) {
                            return Ok(ParaunitaryCheck {
                                is_paraunitary: false,
                                constant: None,
                            });
                        }
                    }
                }
            }
        }
        let mut constant: Option<Scalar> = None;
        for r in 0..m {
            let diag = product.entry(r, r);
            for (k, coeff) in diag.terms() {
                if k != 0 && !coeff.vanishes(tol) {
                    return Err(Error::NonConstantDiagonal);
                }
            }
            let c = diag.coeff(0);
            match &constant {
                None => constant = Some(c),
                Some(first) => {
                    if !first.sub(&c)?.vanishes(tol) {
                        return Err(Error::NonConstantDiagonal);
                    }
                }
            }
        }
        let c = constant.expect("size >= 1");
        // C must be a positive real constant.
        let real = c.sub(&c.conj())?.vanishes(tol);
        let positive = c.embed().0 > 0.0;
        if real && positive {
            Ok(ParaunitaryCheck {
                is_paraunitary: true,
                constant: Some(c),
            })
        } else {
            Ok(ParaunitaryCheck {
                is_paraunitary: false,
                constant: None,
            })
        }
    }
}

/// Diagonal delay matrix `diag(Z^{-D_0}, ..., Z^{-D_{M-1}})`.
pub fn delay_matrix(delays: &DelayVector, kind: ScalarKind) -> PolyMatrix {
    let m = delays.len();
    let mut entries = vec![ZPoly::zero(kind); m * m];
    for (port, &d) in delays.delays().iter().enumerate() {
        entries[port * m + port] = ZPoly::monomial(Scalar::one(kind), d as i64);
    }
    PolyMatrix {
        size: m,
        kind,
        entries,
    }
}
