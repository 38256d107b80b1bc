//! Aperiodic correlation profiles and the verification checks built on
//! them: complementarity of one set, and mutual orthogonality of a family
//! of sets (the complete-complementary-code condition).
//!
//! The shift convention is pinned once: the profile value at shift `k` is
//! the coefficient of `Z^{-k}` of `x^*(Z) * y(Z^{-1})`, i.e.
//! `sum_n conj(x(n)) * y(n+k)` with the sum taken in ascending `n`.
//! [`cross_correlation`] computes it through polynomial algebra;
//! [`brute_force_profile`] computes the same values by the direct double
//! loop and serves as the independent oracle.

use crate::error::{Error, Result};
use crate::generator::SequenceSet;
use crate::scalar::{Scalar, ScalarKind};
use crate::zpoly::ZPoly;

/// Map from shift `k` to the correlation value at `k`, dense over the full
/// support `[-(len_x - 1), len_y - 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct CorrelationProfile {
    kind: ScalarKind,
    min_shift: i64,
    values: Vec<Scalar>,
}

impl CorrelationProfile {
    pub fn kind(&self) -> ScalarKind {
        self.kind
    }

    pub fn min_shift(&self) -> i64 {
        self.min_shift
    }

    pub fn max_shift(&self) -> i64 {
        self.min_shift + self.values.len() as i64 - 1
    }

    /// Value at shift `k`; zero outside the stored support.
    pub fn value(&self, k: i64) -> Scalar {
        let idx = k - self.min_shift;
        if idx >= 0 && (idx as usize) < self.values.len() {
            self.values[idx as usize].clone()
        } else {
            Scalar::zero(self.kind)
        }
    }

    /// Iterate `(shift, value)` pairs over the stored support.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &Scalar)> {
        let base = self.min_shift;
        self.values
            .iter()
            .enumerate()
            .map(move |(i, v)| (base + i as i64, v))
    }

    /// Pointwise sum of two profiles.
    pub fn add(&self, rhs: &CorrelationProfile) -> Result<CorrelationProfile> {
        if self.kind != rhs.kind {
            return Err(Error::KindMismatch {
                left: self.kind,
                right: rhs.kind,
            });
        }
        let lo = self.min_shift.min(rhs.min_shift);
        let hi = self.max_shift().max(rhs.max_shift());
        let values = (lo..=hi)
            .map(|k| self.value(k).add(&rhs.value(k)))
            .collect::<Result<Vec<_>>>()?;
        Ok(CorrelationProfile {
            kind: self.kind,
            min_shift: lo,
            values,
        })
    }
}

fn sequence_kind(x: &[Scalar]) -> Result<ScalarKind> {
    let first = x.first().ok_or(Error::ShapeMismatch {
        detail: "empty sequence".into(),
    })?;
    Ok(first.kind())
}

/// Full aperiodic cross-correlation of `x` against `y`, computed as the
/// polynomial product `x^*(Z) * y(Z^{-1})`.
pub fn cross_correlation(x: &[Scalar], y: &[Scalar]) -> Result<CorrelationProfile> {
    let kind = sequence_kind(x)?;
    let ykind = sequence_kind(y)?;
    if kind != ykind {
        return Err(Error::KindMismatch {
            left: kind,
            right: ykind,
        });
    }
    let xp = ZPoly::from_causal(kind, x.to_vec())?;
    let yp = ZPoly::from_causal(kind, y.to_vec())?;
    let product = xp.tilde().mul(&yp)?;
    let min_shift = -(x.len() as i64 - 1);
    let values = (0..(x.len() + y.len() - 1) as i64)
        .map(|i| product.coeff(min_shift + i))
        .collect();
    Ok(CorrelationProfile {
        kind,
        min_shift,
        values,
    })
}

/// Aperiodic autocorrelation: [`cross_correlation`] of `x` with itself.
pub fn auto_correlation(x: &[Scalar]) -> Result<CorrelationProfile> {
    cross_correlation(x, x)
}

/// Independent oracle: the same profile by the direct double loop
/// `sum_n conj(x(n)) * y(n+k)`, ascending `n`, no polynomial algebra.
pub fn brute_force_profile(x: &[Scalar], y: &[Scalar]) -> Result<CorrelationProfile> {
    let kind = sequence_kind(x)?;
    let ykind = sequence_kind(y)?;
    if kind != ykind {
        return Err(Error::KindMismatch {
            left: kind,
            right: ykind,
        });
    }
    let min_shift = -(x.len() as i64 - 1);
    let max_shift = y.len() as i64 - 1;
    let mut values = Vec::with_capacity((max_shift - min_shift + 1) as usize);
    for k in min_shift..=max_shift {
        let mut acc = Scalar::zero(kind);
        for (n, xn) in x.iter().enumerate() {
            let j = n as i64 + k;
            if j >= 0 && (j as usize) < y.len() {
                acc = acc.add(&xn.conj().mul(&y[j as usize])?)?;
            }
        }
        values.push(acc);
    }
    Ok(CorrelationProfile {
        kind,
        min_shift,
        values,
    })
}

/// Outcome of a complementarity or CCC check. Failures are reported, not
/// raised: the worst violation (by embedded magnitude) is kept for
/// diagnosing near-miss float cases.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub passed: bool,
    /// The shift-0 constant for a complementarity check; for a CCC check,
    /// the common per-set constant when all sets share one.
    pub constant: Option<Scalar>,
    /// Magnitude of the largest violation encountered (0.0 when clean).
    pub worst_violation: f64,
    /// Shift at which the worst violation occurred.
    pub worst_shift: i64,
    /// For CCC checks: the pair `(p, q)` of the worst violation, with
    /// `p == q` denoting set `p`'s own complementarity sum.
    pub worst_pair: Option<(usize, usize)>,
}

struct ViolationTracker {
    tol: f64,
    passed: bool,
    worst: f64,
    worst_shift: i64,
    worst_pair: Option<(usize, usize)>,
}

impl ViolationTracker {
    fn new(tol: f64) -> Self {
        ViolationTracker {
            tol,
            passed: true,
            worst: 0.0,
            worst_shift: 0,
            worst_pair: None,
        }
    }

    fn observe(&mut self, value: &Scalar, shift: i64, pair: Option<(usize, usize)>) {
        if value.vanishes(self.tol) {
            return;
        }
        self.passed = false;
        let mag = value.magnitude();
        if mag > self.worst {
            self.worst = mag;
            self.worst_shift = shift;
            self.worst_pair = pair;
        }
    }
}

/// Sum of the autocorrelations across a set. Complementary sets have this
/// equal to `C` at shift 0 and zero everywhere else.
pub fn aacf_sum(set: &SequenceSet) -> Result<CorrelationProfile> {
    let mut sum: Option<CorrelationProfile> = None;
    for seq in set.sequences() {
        let r = auto_correlation(seq)?;
        sum = Some(match sum {
            None => r,
            Some(acc) => acc.add(&r)?,
        });
    }
    Ok(sum.expect("sets are nonempty"))
}

/// Check the complementarity condition: the AACF sum vanishes at every
/// nonzero shift (exactly for exact kinds, within `tol` for floats). The
/// report carries `C`, the sum at shift 0.
pub fn complementarity_check(set: &SequenceSet, tol: f64) -> Result<VerificationReport> {
    let sum = aacf_sum(set)?;
    let mut tracker = ViolationTracker::new(tol);
    for (k, v) in sum.iter() {
        if k != 0 {
            tracker.observe(v, k, None);
        }
    }
    Ok(VerificationReport {
        passed: tracker.passed,
        constant: Some(sum.value(0)),
        worst_violation: tracker.worst,
        worst_shift: tracker.worst_shift,
        worst_pair: None,
    })
}

/// Summed cross-correlation profile between two sets (sequence-by-sequence,
/// then summed): the quantity the CCC orthogonality condition requires to
/// vanish at all shifts.
pub fn accf_sum(a: &SequenceSet, b: &SequenceSet) -> Result<CorrelationProfile> {
    if a.size() != b.size() || a.len() != b.len() {
        return Err(Error::ShapeMismatch {
            detail: format!(
                "sets {}x{} vs {}x{}",
                a.size(),
                a.len(),
                b.size(),
                b.len()
            ),
        });
    }
    let mut sum: Option<CorrelationProfile> = None;
    for (x, y) in a.sequences().iter().zip(b.sequences()) {
        let r = cross_correlation(x, y)?;
        sum = Some(match sum {
            None => r,
            Some(acc) => acc.add(&r)?,
        });
    }
    Ok(sum.expect("sets are nonempty"))
}

/// Check the complete-complementary-code condition over a family of sets:
/// every set passes [`complementarity_check`], and for every pair `p != q`
/// the summed cross-correlation vanishes at every shift, shift 0 included.
pub fn ccc_check(sets: &[SequenceSet], tol: f64) -> Result<VerificationReport> {
    let first = sets.first().ok_or(Error::ShapeMismatch {
        detail: "no sets given".into(),
    })?;
    for s in sets {
        if s.size() != first.size() || s.len() != first.len() {
            return Err(Error::ShapeMismatch {
                detail: "sets differ in size or length".into(),
            });
        }
        if s.kind() != first.kind() {
            return Err(Error::KindMismatch {
                left: first.kind(),
                right: s.kind(),
            });
        }
    }
    let mut tracker = ViolationTracker::new(tol);
    let mut constant: Option<Scalar> = None;
    let mut shared_constant = true;
    for (p, set) in sets.iter().enumerate() {
        let report = complementarity_check(set, tol)?;
        if !report.passed {
            tracker.passed = false;
            if report.worst_violation > tracker.worst {
                tracker.worst = report.worst_violation;
                tracker.worst_shift = report.worst_shift;
                tracker.worst_pair = Some((p, p));
            }
        }
        let c = report.constant.expect("complementarity reports carry C");
        match &constant {
            None => constant = Some(c),
            Some(existing) => {
                if !existing.sub(&c)?.vanishes(tol) {
                    shared_constant = false;
                }
            }
        }
    }
    for p in 0..sets.len() {
        for q in (p + 1)..sets.len() {
            let sum = accf_sum(&sets[p], &sets[q])?;
            for (k, v) in sum.iter() {
                tracker.observe(v, k, Some((p, q)));
            }
        }
    }
    Ok(VerificationReport {
        passed: tracker.passed,
        constant: if shared_constant { constant } else { None },
        worst_violation: tracker.worst,
        worst_shift: tracker.worst_shift,
        worst_pair: tracker.worst_pair,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(v: i64) -> Scalar {
        Scalar::gauss(v, 0)
    }

    #[test]
    fn cross_golay_rows() {
        // x = [1,1], y = [1,-1]: x*(Z) y(Z^-1) = (1+Z)(1-Z^-1) = Z - Z^-1,
        // so value(-1) = +1, value(0) = 0, value(+1) = -1.
        let p = cross_correlation(&[g(1), g(1)], &[g(1), g(-1)]).unwrap();
        assert_eq!(p.value(-1), g(1));
        assert_eq!(p.value(0), g(0));
        assert_eq!(p.value(1), g(-1));
    }

    #[test]
    fn cross_all_ones() {
        let p = cross_correlation(&[g(1), g(1)], &[g(1), g(1)]).unwrap();
        assert_eq!(p.value(-1), g(1));
        assert_eq!(p.value(0), g(2));
        assert_eq!(p.value(1), g(1));
    }

    #[test]
    fn unit_impulse() {
        let p = cross_correlation(&[g(1)], &[g(1)]).unwrap();
        assert_eq!(p.value(0), g(1));
        assert_eq!(p.min_shift(), 0);
        assert_eq!(p.max_shift(), 0);
        assert_eq!(p.value(5), g(0)); // outside support
    }

    #[test]
    fn auto_golay_b() {
        let p = auto_correlation(&[g(1), g(-1)]).unwrap();
        assert_eq!(p.value(-1), g(-1));
        assert_eq!(p.value(0), g(2));
        assert_eq!(p.value(1), g(-1));
    }

    #[test]
    fn auto_chirp_conjugate_symmetry() {
        let w = |e: u32| Scalar::cyclotomic_root(3, e);
        let x = [w(0), w(1), w(2)];
        let p = auto_correlation(&x).unwrap();
        assert_eq!(p.value(0), Scalar::integer(x[0].kind(), 3));
        for k in -2..=2i64 {
            assert_eq!(p.value(-k), p.value(k).conj(), "symmetry at k={k}");
        }
    }

    #[test]
    fn auto_length_one() {
        let w = Scalar::cyclotomic_root(3, 1);
        let p = auto_correlation(std::slice::from_ref(&w)).unwrap();
        assert_eq!(p.value(0), Scalar::one(w.kind()));
    }

    #[test]
    fn brute_force_agrees_with_polynomial_route() {
        let x = [g(1), g(1)];
        let y = [g(1), g(-1)];
        assert_eq!(
            brute_force_profile(&x, &y).unwrap(),
            cross_correlation(&x, &y).unwrap()
        );
        // Gaussian case by hand: x = y = [1, i]
        let xi = [Scalar::gauss(1, 0), Scalar::gauss(0, 1)];
        let p = brute_force_profile(&xi, &xi).unwrap();
        assert_eq!(p.value(-1), Scalar::gauss(0, -1));
        assert_eq!(p.value(0), Scalar::gauss(2, 0));
        assert_eq!(p.value(1), Scalar::gauss(0, 1));
        assert_eq!(p, cross_correlation(&xi, &xi).unwrap());
    }

    #[test]
    fn unequal_lengths() {
        let x = [g(1), g(2), g(3)];
        let y = [g(1), g(-1)];
        let brute = brute_force_profile(&x, &y).unwrap();
        let poly = cross_correlation(&x, &y).unwrap();
        assert_eq!(brute, poly);
        assert_eq!(brute.min_shift(), -2);
        assert_eq!(brute.max_shift(), 1);
    }

    #[test]
    fn golay_pair_is_complementary() {
        let set = SequenceSet::new(vec![vec![g(1), g(1)], vec![g(1), g(-1)]]).unwrap();
        let report = complementarity_check(&set, 1e-9).unwrap();
        assert!(report.passed);
        assert_eq!(report.constant.unwrap(), g(4));
        assert_eq!(report.worst_violation, 0.0);
    }

    #[test]
    fn identical_pair_fails_with_violation_two() {
        let set = SequenceSet::new(vec![vec![g(1), g(1)], vec![g(1), g(1)]]).unwrap();
        let report = complementarity_check(&set, 1e-9).unwrap();
        assert!(!report.passed);
        assert_eq!(report.worst_violation, 2.0);
        assert_eq!(report.worst_shift.abs(), 1);
        assert_eq!(report.constant.unwrap(), g(4));
    }

    #[test]
    fn golay_row_sets_are_a_ccc() {
        let set0 = SequenceSet::new(vec![vec![g(1), g(1)], vec![g(1), g(-1)]]).unwrap();
        let set1 = SequenceSet::new(vec![vec![g(1), g(-1)], vec![g(1), g(1)]]).unwrap();
        let report = ccc_check(&[set0, set1], 1e-9).unwrap();
        assert!(report.passed);
        assert_eq!(report.constant.unwrap(), g(4));
    }

    #[test]
    fn duplicated_set_fails_ccc_at_shift_zero() {
        let set = SequenceSet::new(vec![vec![g(1), g(1)], vec![g(1), g(-1)]]).unwrap();
        let report = ccc_check(&[set.clone(), set], 1e-9).unwrap();
        assert!(!report.passed);
        assert_eq!(report.worst_shift, 0);
        assert_eq!(report.worst_pair, Some((0, 1)));
        assert_eq!(report.worst_violation, 4.0); // the self-pair sum is C
    }

    #[test]
    fn ccc_shape_validation() {
        let a = SequenceSet::new(vec![vec![g(1), g(1)], vec![g(1), g(-1)]]).unwrap();
        let b = SequenceSet::new(vec![vec![g(1)], vec![g(1)]]).unwrap();
        assert!(matches!(
            ccc_check(&[a, b], 1e-9),
            Err(Error::ShapeMismatch { .. })
        ));
    }

    #[test]
    fn float_tolerance_path() {
        let c = |re: f64| Scalar::complex(re, 0.0);
        // Golay pair with a tiny perturbation below tolerance
        let set = SequenceSet::new(vec![
            vec![c(1.0), c(1.0 + 1e-12)],
            vec![c(1.0), c(-1.0)],
        ])
        .unwrap();
        assert!(complementarity_check(&set, 1e-9).unwrap().passed);
        // and above tolerance
        let set = SequenceSet::new(vec![
            vec![c(1.0), c(1.01)],
            vec![c(1.0), c(-1.0)],
        ])
        .unwrap();
        let report = complementarity_check(&set, 1e-9).unwrap();
        assert!(!report.passed);
        assert!((report.worst_violation - 0.01).abs() < 1e-9);
    }
}
