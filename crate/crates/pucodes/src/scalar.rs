//! Scalar arithmetic over the supported constellation element rings.
//!
//! Four kinds of scalar share one interface: complex floats, Gaussian
//! integers `a + b*i`, Eisenstein integers `a + b*w` with `w = e^{2*pi*i/3}`,
//! and cyclotomic integers of order N (integer combinations of powers of
//! `zeta_N = e^{2*pi*i/N}`, stored reduced modulo `Phi_N`). The three exact
//! kinds support exact zero tests, which is what makes complementarity and
//! orthogonality verification exact rather than tolerance-based.
//!
//! Kinds never mix implicitly: binary operations on different kinds return
//! [`Error::KindMismatch`]. Conversions (Gaussian to order-4 cyclotomic,
//! Eisenstein to order-3, embeddings into floats) are explicit via
//! [`Scalar::convert`].

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cyclotomic::{add64, mul64, reduce, sub64};
use crate::error::{Error, Result};

/// Discriminates the ring a [`Scalar`] belongs to. The cyclotomic order is
/// part of the kind: values of different orders do not mix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ScalarKind {
    Complex,
    Gauss,
    Eisenstein,
    Cyclotomic(u32),
}

impl ScalarKind {
    /// True for the kinds with exact (integer-based) arithmetic.
    pub fn is_exact(&self) -> bool {
        !matches!(self, ScalarKind::Complex)
    }
}

impl fmt::Display for ScalarKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarKind::Complex => write!(f, "complex"),
            ScalarKind::Gauss => write!(f, "gauss"),
            ScalarKind::Eisenstein => write!(f, "eisenstein"),
            ScalarKind::Cyclotomic(n) => write!(f, "cyclo:{n}"),
        }
    }
}

/// A value in one of the supported rings. Immutable once constructed; all
/// operations are pure functions.
#[derive(Debug, Clone, PartialEq)]
pub enum Scalar {
    /// `re + im*i` in floating point.
    Complex { re: f64, im: f64 },
    /// Gaussian integer `a + b*i`.
    Gauss { a: i64, b: i64 },
    /// Eisenstein integer `a + b*w`, `w = e^{2*pi*i/3}`, `w^2 = -1 - w`.
    Eisenstein { a: i64, b: i64 },
    /// Cyclotomic integer of the given order, coefficients of powers of
    /// `zeta_N` in reduced form (length N, zero above `deg Phi_N - 1`).
    Cyclotomic { order: u32, coeffs: Vec<i64> },
}

impl Scalar {
    pub fn complex(re: f64, im: f64) -> Self {
        Scalar::Complex { re, im }
    }

    pub fn gauss(a: i64, b: i64) -> Self {
        Scalar::Gauss { a, b }
    }

    pub fn eisenstein(a: i64, b: i64) -> Self {
        Scalar::Eisenstein { a, b }
    }

    /// Cyclotomic value from a raw coefficient vector (any length, exponents
    /// of `zeta_N`); reduced on construction.
    pub fn cyclotomic(order: u32, raw: &[i64]) -> Self {
        assert!(order >= 1, "cyclotomic order must be >= 1");
        Scalar::Cyclotomic {
            order,
            coeffs: reduce(order, raw),
        }
    }

    /// The root of unity `zeta_order^exp`.
    pub fn cyclotomic_root(order: u32, exp: u32) -> Self {
        let mut raw = vec![0i64; (exp % order) as usize + 1];
        *raw.last_mut().unwrap() = 1;
        Scalar::cyclotomic(order, &raw)
    }

    /// The plain integer `n` embedded in the requested kind.
    pub fn integer(kind: ScalarKind, n: i64) -> Self {
        match kind {
            ScalarKind::Complex => Scalar::complex(n as f64, 0.0),
            ScalarKind::Gauss => Scalar::gauss(n, 0),
            ScalarKind::Eisenstein => Scalar::eisenstein(n, 0),
            ScalarKind::Cyclotomic(order) => Scalar::cyclotomic(order, &[n]),
        }
    }

    pub fn zero(kind: ScalarKind) -> Self {
        Scalar::integer(kind, 0)
    }

    pub fn one(kind: ScalarKind) -> Self {
        Scalar::integer(kind, 1)
    }

    pub fn kind(&self) -> ScalarKind {
        match self {
            Scalar::Complex { .. } => ScalarKind::Complex,
            Scalar::Gauss { .. } => ScalarKind::Gauss,
            Scalar::Eisenstein { .. } => ScalarKind::Eisenstein,
            Scalar::Cyclotomic { order, .. } => ScalarKind::Cyclotomic(*order),
        }
    }

    fn kind_check(&self, rhs: &Scalar) -> Result<()> {
        if self.kind() == rhs.kind() {
            Ok(())
        } else {
            Err(Error::KindMismatch {
                left: self.kind(),
                right: rhs.kind(),
            })
        }
    }

    /// Exact ring sum. Errors on mixed kinds.
    pub fn add(&self, rhs: &Scalar) -> Result<Scalar> {
        self.kind_check(rhs)?;
        Ok(match (self, rhs) {
            (Scalar::Complex { re, im }, Scalar::Complex { re: re2, im: im2 }) => {
                Scalar::complex(re + re2, im + im2)
            }
            (Scalar::Gauss { a, b }, Scalar::Gauss { a: a2, b: b2 }) => {
                Scalar::gauss(add64(*a, *a2), add64(*b, *b2))
            }
            (Scalar::Eisenstein { a, b }, Scalar::Eisenstein { a: a2, b: b2 }) => {
                Scalar::eisenstein(add64(*a, *a2), add64(*b, *b2))
            }
            (
                Scalar::Cyclotomic { order, coeffs },
                Scalar::Cyclotomic { coeffs: coeffs2, .. },
            ) => {
                let sum: Vec<i64> = coeffs
                    .iter()
                    .zip(coeffs2.iter())
                    .map(|(&x, &y)| add64(x, y))
                    .collect();
                // Sum of reduced forms stays reduced.
                Scalar::Cyclotomic {
                    order: *order,
                    coeffs: sum,
                }
            }
            _ => unreachable!("kind_check passed"),
        })
    }

    pub fn sub(&self, rhs: &Scalar) -> Result<Scalar> {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Complex { re, im } => Scalar::complex(-re, -im),
            Scalar::Gauss { a, b } => Scalar::gauss(-a, -b),
            Scalar::Eisenstein { a, b } => Scalar::eisenstein(-a, -b),
            Scalar::Cyclotomic { order, coeffs } => Scalar::Cyclotomic {
                order: *order,
                coeffs: coeffs.iter().map(|&c| -c).collect(),
            },
        }
    }

    /// Exact ring product. The Eisenstein case rewrites `w^2 = -1 - w`; the
    /// cyclotomic case convolves and reduces modulo `Phi_N`.
    pub fn mul(&self, rhs: &Scalar) -> Result<Scalar> {
        self.kind_check(rhs)?;
        Ok(match (self, rhs) {
            (Scalar::Complex { re, im }, Scalar::Complex { re: re2, im: im2 }) => {
                Scalar::complex(re * re2 - im * im2, re * im2 + im * re2)
            }
            (Scalar::Gauss { a, b }, Scalar::Gauss { a: a2, b: b2 }) => Scalar::gauss(
                sub64(mul64(*a, *a2), mul64(*b, *b2)),
                add64(mul64(*a, *b2), mul64(*b, *a2)),
            ),
            (Scalar::Eisenstein { a, b }, Scalar::Eisenstein { a: a2, b: b2 }) => {
                // (a + b w)(a2 + b2 w) = a a2 + (a b2 + b a2) w + b b2 w^2
                //                      = (a a2 - b b2) + (a b2 + b a2 - b b2) w
                let bb = mul64(*b, *b2);
                Scalar::eisenstein(
                    sub64(mul64(*a, *a2), bb),
                    sub64(add64(mul64(*a, *b2), mul64(*b, *a2)), bb),
                )
            }
            (
                Scalar::Cyclotomic { order, coeffs },
                Scalar::Cyclotomic { coeffs: coeffs2, .. },
            ) => {
                let mut conv = vec![0i64; coeffs.len() + coeffs2.len() - 1];
                for (i, &x) in coeffs.iter().enumerate() {
                    if x == 0 {
                        continue;
                    }
                    for (j, &y) in coeffs2.iter().enumerate() {
                        if y != 0 {
                            conv[i + j] = add64(conv[i + j], mul64(x, y));
                        }
                    }
                }
                Scalar::Cyclotomic {
                    order: *order,
                    coeffs: reduce(*order, &conv),
                }
            }
            _ => unreachable!("kind_check passed"),
        })
    }

    /// Complex conjugate. Eisenstein: `conj(a + b w) = (a - b) - b w`;
    /// cyclotomic: `zeta^j -> zeta^{N-j}` then reduce.
    pub fn conj(&self) -> Scalar {
        match self {
            Scalar::Complex { re, im } => Scalar::complex(*re, -im),
            Scalar::Gauss { a, b } => Scalar::gauss(*a, -b),
            Scalar::Eisenstein { a, b } => Scalar::eisenstein(sub64(*a, *b), -b),
            Scalar::Cyclotomic { order, coeffs } => {
                let n = *order as usize;
                let mut raw = vec![0i64; n];
                for (j, &c) in coeffs.iter().enumerate() {
                    if c != 0 {
                        raw[(n - j) % n] = add64(raw[(n - j) % n], c);
                    }
                }
                Scalar::Cyclotomic {
                    order: *order,
                    coeffs: reduce(*order, &raw),
                }
            }
        }
    }

    /// Squared magnitude `a * conj(a)`, exact in the value's own kind.
    pub fn msq(&self) -> Scalar {
        self.mul(&self.conj()).expect("same kind")
    }

    /// Exact zero test for exact kinds; literal `0.0` test for floats.
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Complex { re, im } => *re == 0.0 && *im == 0.0,
            Scalar::Gauss { a, b } | Scalar::Eisenstein { a, b } => *a == 0 && *b == 0,
            Scalar::Cyclotomic { coeffs, .. } => coeffs.iter().all(|&c| c == 0),
        }
    }

    /// Numeric embedding into the complex plane, `w = -1/2 + sqrt(3)/2 i`
    /// and `zeta_N = e^{2*pi*i/N}`.
    pub fn embed(&self) -> (f64, f64) {
        match self {
            Scalar::Complex { re, im } => (*re, *im),
            Scalar::Gauss { a, b } => (*a as f64, *b as f64),
            Scalar::Eisenstein { a, b } => {
                let (af, bf) = (*a as f64, *b as f64);
                (af - bf / 2.0, bf * 3f64.sqrt() / 2.0)
            }
            Scalar::Cyclotomic { order, coeffs } => {
                let n = *order as f64;
                let mut re = 0.0;
                let mut im = 0.0;
                for (j, &c) in coeffs.iter().enumerate() {
                    if c != 0 {
                        let theta = 2.0 * std::f64::consts::PI * j as f64 / n;
                        re += c as f64 * theta.cos();
                        im += c as f64 * theta.sin();
                    }
                }
                (re, im)
            }
        }
    }

    /// `|a|` via the complex embedding; used for violation reporting and
    /// float tolerances.
    pub fn magnitude(&self) -> f64 {
        let (re, im) = self.embed();
        re.hypot(im)
    }

    /// Magnitude-at-most-tol test: exact zero for exact kinds (tolerance
    /// is ignored), `|a| <= tol` for floats.
    pub fn vanishes(&self, tol: f64) -> bool {
        if self.kind().is_exact() {
            self.is_zero()
        } else {
            self.magnitude() <= tol
        }
    }

    /// Rational-integer view: `Some(n)` when the value is the plain integer
    /// `n` in its ring (floats: exact integral real).
    pub fn as_integer(&self) -> Option<i64> {
        match self {
            Scalar::Complex { re, im } => {
                if *im == 0.0 && re.fract() == 0.0 {
                    Some(*re as i64)
                } else {
                    None
                }
            }
            Scalar::Gauss { a, b } | Scalar::Eisenstein { a, b } => (*b == 0).then_some(*a),
            Scalar::Cyclotomic { coeffs, .. } => {
                coeffs[1..].iter().all(|&c| c == 0).then_some(coeffs[0])
            }
        }
    }

    /// Explicit conversion between kinds. Supported: identity; any kind to
    /// complex floats (numeric embedding); Gaussian to/from order-4
    /// cyclotomic; Eisenstein to/from order-3 cyclotomic; order-N to
    /// order-M cyclotomic when N divides M; plain integers to any kind.
    pub fn convert(&self, target: ScalarKind) -> Result<Scalar> {
        if self.kind() == target {
            return Ok(self.clone());
        }
        if target == ScalarKind::Complex {
            let (re, im) = self.embed();
            return Ok(Scalar::complex(re, im));
        }
        if let Some(n) = self.as_integer() {
            if self.kind().is_exact() {
                return Ok(Scalar::integer(target, n));
            }
        }
        match (self, target) {
            (Scalar::Gauss { a, b }, ScalarKind::Cyclotomic(4)) => {
                Ok(Scalar::cyclotomic(4, &[*a, *b]))
            }
            (Scalar::Eisenstein { a, b }, ScalarKind::Cyclotomic(3)) => {
                Ok(Scalar::cyclotomic(3, &[*a, *b]))
            }
            (Scalar::Cyclotomic { order: 4, coeffs }, ScalarKind::Gauss) => {
                Ok(Scalar::gauss(coeffs[0], coeffs[1]))
            }
            (Scalar::Cyclotomic { order: 3, coeffs }, ScalarKind::Eisenstein) => {
                Ok(Scalar::eisenstein(coeffs[0], coeffs[1]))
            }
            (Scalar::Cyclotomic { order, coeffs }, ScalarKind::Cyclotomic(m))
                if m % order == 0 =>
            {
                let stride = (m / order) as usize;
                let mut raw = vec![0i64; m as usize];
                for (j, &c) in coeffs.iter().enumerate() {
                    raw[j * stride] = c;
                }
                Ok(Scalar::cyclotomic(m, &raw))
            }
            _ => Err(Error::KindMismatch {
                left: self.kind(),
                right: target,
            }),
        }
    }
}

impl fmt::Display for Scalar {
    /// Human-readable literal, also used as the CSV cell grammar:
    /// `a+bi` (Gaussian), `a+bw` (Eisenstein), `wN^e` / `wN[c0 c1 ...]`
    /// (cyclotomic), `re+imj` (complex float).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Complex { re, im } => {
                if *im >= 0.0 || im.is_nan() {
                    write!(f, "{re:?}+{im:?}j")
                } else {
                    write!(f, "{re:?}-{:?}j", -im)
                }
            }
            Scalar::Gauss { a, b } => write_int_pair(f, *a, *b, "i"),
            Scalar::Eisenstein { a, b } => write_int_pair(f, *a, *b, "w"),
            Scalar::Cyclotomic { order, coeffs } => {
                if let Some(n) = self.as_integer() {
                    return write!(f, "{n}");
                }
                // roots of unity print as powers even when the reduced
                // form is a longer combination (e.g. zeta_3^2 = -1-zeta_3)
                let mut power = Scalar::one(self.kind());
                let root = Scalar::cyclotomic_root(*order, 1);
                for e in 0..*order {
                    if *self == power {
                        return write!(f, "w{order}^{e}");
                    }
                    if self.neg() == power {
                        return write!(f, "-w{order}^{e}");
                    }
                    power = power.mul(&root).expect("same kind");
                }
                write!(f, "w{order}[")?;
                for (i, c) in coeffs.iter().enumerate() {
                    if i > 0 {
                        write!(f, " ")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, "]")
            }
        }
    }
}

fn write_int_pair(f: &mut fmt::Formatter<'_>, a: i64, b: i64, unit: &str) -> fmt::Result {
    match (a, b) {
        (_, 0) => write!(f, "{a}"),
        (0, 1) => write!(f, "{unit}"),
        (0, -1) => write!(f, "-{unit}"),
        (0, _) => write!(f, "{b}{unit}"),
        (_, 1) => write!(f, "{a}+{unit}"),
        (_, -1) => write!(f, "{a}-{unit}"),
        (_, _) if b > 0 => write!(f, "{a}+{b}{unit}"),
        (_, _) => write!(f, "{a}-{}{unit}", -b),
    }
}

/// Wire form of a scalar: `{"kind":"gauss","a":2,"b":2}` and friends.
/// Integer payloads round-trip bit-exactly.
#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum ScalarRepr {
    Complex { re: f64, im: f64 },
    Gauss { a: i64, b: i64 },
    Eisenstein { a: i64, b: i64 },
    Cyclo { n: u32, c: Vec<i64> },
}

impl Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let repr = match self {
            Scalar::Complex { re, im } => ScalarRepr::Complex { re: *re, im: *im },
            Scalar::Gauss { a, b } => ScalarRepr::Gauss { a: *a, b: *b },
            Scalar::Eisenstein { a, b } => ScalarRepr::Eisenstein { a: *a, b: *b },
            Scalar::Cyclotomic { order, coeffs } => ScalarRepr::Cyclo {
                n: *order,
                c: coeffs.clone(),
            },
        };
        repr.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        Ok(match ScalarRepr::deserialize(deserializer)? {
            ScalarRepr::Complex { re, im } => Scalar::complex(re, im),
            ScalarRepr::Gauss { a, b } => Scalar::gauss(a, b),
            ScalarRepr::Eisenstein { a, b } => Scalar::eisenstein(a, b),
            ScalarRepr::Cyclo { n, c } => {
                if n < 1 {
                    return Err(D::Error::custom("cyclotomic order must be >= 1"));
                }
                if c.len() > n as usize {
                    return Err(D::Error::custom(format!(
                        "cyclotomic coefficient vector longer than order {n}"
                    )));
                }
                Scalar::cyclotomic(n, &c)
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w() -> Scalar {
        Scalar::eisenstein(0, 1)
    }

    #[test]
    fn gauss_add_componentwise() {
        let sum = Scalar::gauss(2, 2).add(&Scalar::gauss(-1, -1)).unwrap();
        assert_eq!(sum, Scalar::gauss(1, 1));
    }

    #[test]
    fn cyclo_root_relation() {
        // 1 + zeta + zeta^2 = 0 for order 3
        let one = Scalar::cyclotomic_root(3, 0);
        let z = Scalar::cyclotomic_root(3, 1);
        let z2 = Scalar::cyclotomic_root(3, 2);
        let sum = one.add(&z).unwrap().add(&z2).unwrap();
        assert!(sum.is_zero());
    }

    #[test]
    fn complex_add() {
        let sum = Scalar::complex(0.5, 0.0).add(&Scalar::complex(0.5, 0.0)).unwrap();
        assert_eq!(sum, Scalar::complex(1.0, 0.0));
    }

    #[test]
    fn gauss_mul() {
        // (2+2i)(-1-i) = -4i, expanded by hand
        let prod = Scalar::gauss(2, 2).mul(&Scalar::gauss(-1, -1)).unwrap();
        assert_eq!(prod, Scalar::gauss(0, -4));
    }

    #[test]
    fn eisenstein_w_squared() {
        // w^2 = -1 - w
        assert_eq!(w().mul(&w()).unwrap(), Scalar::eisenstein(-1, -1));
    }

    #[test]
    fn cyclo4_i_squared() {
        let i = Scalar::cyclotomic_root(4, 1);
        assert_eq!(i.mul(&i).unwrap(), Scalar::cyclotomic(4, &[-1]));
    }

    #[test]
    fn conjugation() {
        assert_eq!(Scalar::gauss(-1, 3).conj(), Scalar::gauss(-1, -3));
        assert_eq!(w().conj(), Scalar::eisenstein(-1, -1)); // conj(w) = w^2
        let z = Scalar::cyclotomic_root(3, 1);
        assert_eq!(z.conj(), Scalar::cyclotomic(3, &[-1, -1])); // zeta^2 reduced
    }

    #[test]
    fn magnitude_squared() {
        assert_eq!(Scalar::gauss(-1, 3).msq(), Scalar::gauss(10, 0));
        assert_eq!(Scalar::eisenstein(-2, 1).msq(), Scalar::eisenstein(7, 0));
        assert_eq!(Scalar::complex(0.0, 1.0).msq(), Scalar::complex(1.0, 0.0));
    }

    #[test]
    fn embeddings() {
        assert_eq!(Scalar::gauss(1, 1).embed(), (1.0, 1.0));
        let (re, im) = w().embed();
        assert!((re + 0.5).abs() < 1e-15);
        assert!((im - 0.8660254037844386).abs() < 1e-12);
        let (re, im) = Scalar::cyclotomic_root(4, 1).embed();
        assert!(re.abs() < 1e-15 && (im - 1.0).abs() < 1e-15);
    }

    #[test]
    fn kind_mismatch_is_an_error() {
        let err = Scalar::gauss(1, 0).add(&Scalar::eisenstein(1, 0)).unwrap_err();
        assert!(matches!(err, Error::KindMismatch { .. }));
    }

    #[test]
    fn explicit_conversions() {
        let g = Scalar::gauss(2, -3);
        let c = g.convert(ScalarKind::Cyclotomic(4)).unwrap();
        assert_eq!(c, Scalar::cyclotomic(4, &[2, -3]));
        assert_eq!(c.convert(ScalarKind::Gauss).unwrap(), g);

        let e = Scalar::eisenstein(-1, 2);
        let c3 = e.convert(ScalarKind::Cyclotomic(3)).unwrap();
        assert_eq!(c3.convert(ScalarKind::Eisenstein).unwrap(), e);

        // zeta_3 inside order 6: zeta_6^2
        let z3 = Scalar::cyclotomic_root(3, 1);
        let lifted = z3.convert(ScalarKind::Cyclotomic(6)).unwrap();
        assert_eq!(lifted, Scalar::cyclotomic_root(6, 2));

        // plain integers cross kinds
        assert_eq!(
            Scalar::gauss(5, 0).convert(ScalarKind::Eisenstein).unwrap(),
            Scalar::eisenstein(5, 0)
        );
        // but a genuine Gaussian value has no Eisenstein form
        assert!(Scalar::gauss(0, 1).convert(ScalarKind::Eisenstein).is_err());
    }

    #[test]
    fn conversion_commutes_with_embedding() {
        let e = Scalar::eisenstein(3, -2);
        let via = e.convert(ScalarKind::Cyclotomic(3)).unwrap().embed();
        let direct = e.embed();
        assert!((via.0 - direct.0).abs() < 1e-12);
        assert!((via.1 - direct.1).abs() < 1e-12);
    }

    #[test]
    fn display_literals() {
        assert_eq!(Scalar::gauss(2, 2).to_string(), "2+2i");
        assert_eq!(Scalar::gauss(-1, -1).to_string(), "-1-i");
        assert_eq!(Scalar::gauss(0, -4).to_string(), "-4i");
        assert_eq!(Scalar::eisenstein(-2, 1).to_string(), "-2+w");
        assert_eq!(Scalar::cyclotomic_root(5, 3).to_string(), "w5^3");
        // zeta_3^2 reduces to -1 - zeta_3 but still prints as a power
        assert_eq!(Scalar::cyclotomic_root(3, 2).to_string(), "w3^2");
        assert_eq!(Scalar::cyclotomic_root(3, 2).neg().to_string(), "-w3^2");
        assert_eq!(Scalar::cyclotomic(5, &[1, 1]).to_string(), "w5[1 1 0 0 0]");
        assert_eq!(Scalar::complex(1.0, -0.5).to_string(), "1.0-0.5j");
    }

    #[test]
    fn json_wire_format() {
        let cases = [
            (Scalar::gauss(2, 2), r#"{"kind":"gauss","a":2,"b":2}"#),
            (
                Scalar::eisenstein(-2, 1),
                r#"{"kind":"eisenstein","a":-2,"b":1}"#,
            ),
            (
                Scalar::cyclotomic(3, &[0, 1]),
                r#"{"kind":"cyclo","n":3,"c":[0,1,0]}"#,
            ),
            (
                Scalar::complex(1.0, 0.0),
                r#"{"kind":"complex","re":1.0,"im":0.0}"#,
            ),
        ];
        for (value, json) in cases {
            assert_eq!(serde_json::to_string(&value).unwrap(), json);
            let back: Scalar = serde_json::from_str(json).unwrap();
            assert_eq!(back, value);
        }
    }
}
