//! Generating matrices for complementary sequence sets, built two ways:
//! the paraunitary product of alternating unitary and delay stages, and
//! the closed-form radix-M evaluation for standard delay plans.
//!
//! Stage indexing follows the rewritten product convention throughout:
//! a spec with `K` delay stages holds unitaries `U[0]..U[K]` and delay
//! vectors `D[0]..D[K-1]`, and the generating matrix is
//!
//! ```text
//! M(Z^-1) = U[0] * (D[0] * U[1]) * (D[1] * U[2]) * ... * (D[K-1] * U[K])
//! ```
//!
//! A standard plan assigns stage `k` the regular delays with step
//! `M^{pi[k]}` for a permutation `pi` of `{0..K-1}`; those plans have
//! sequence length exactly `M^K` with no coefficient gaps, and admit the
//! radix-M evaluation: coefficient `n` of entry `(r, s)` is the product of
//! `K+1` matrix elements indexed by consecutive permuted digits of `n`.
//!
//! The `r`-th set is read along row `r` of the generating matrix (so its
//! `s`-th sequence is entry `(r, s)`, matching the radix-M indexing);
//! column extraction is available explicitly, and the transpose of a
//! generating matrix is again a generating matrix.

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::polymatrix::{delay_matrix, PolyMatrix};
use crate::scalar::{Scalar, ScalarKind};
use crate::zpoly::{regular_delays, DelayVector, ZPoly};
use crate::DEFAULT_TOL;

/// Radix-M digit expansion of `n`, least significant digit first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DigitExpansion {
    n: u64,
    base: usize,
    digits: Vec<usize>,
}

impl DigitExpansion {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn base(&self) -> usize {
        self.base
    }

    /// Digits `d_0..d_{K-1}`, least significant first.
    pub fn digits(&self) -> &[usize] {
        &self.digits
    }

    pub fn digit(&self, k: usize) -> usize {
        self.digits[k]
    }
}

/// Radix-M digits of `n` with exactly `k` digits. Errors when
/// `n >= M^k`.
pub fn digits(n: u64, m: usize, k: usize) -> Result<DigitExpansion> {
    let limit = pow_u64(m, k);
    if n >= limit {
        return Err(Error::OutOfRange {
            what: "n",
            value: n as i64,
            limit: limit as i64,
        });
    }
    let mut rest = n;
    let mut digits = Vec::with_capacity(k);
    for _ in 0..k {
        digits.push((rest % m as u64) as usize);
        rest /= m as u64;
    }
    Ok(DigitExpansion { n, base: m, digits })
}

fn pow_u64(m: usize, k: usize) -> u64 {
    (m as u64)
        .checked_pow(k as u32)
        .expect("M^K overflows u64")
}

/// Delay vectors of a standard plan: stage `k` gets regular delays with
/// step `M^{pi[k]}`.
pub fn standard_delays(m: usize, k: usize, pi: &[usize]) -> Result<Vec<DelayVector>> {
    validate_permutation(pi, k)?;
    Ok(pi
        .iter()
        .map(|&p| regular_delays(m, pow_u64(m, p)))
        .collect())
}

fn validate_permutation(pi: &[usize], k: usize) -> Result<()> {
    if pi.len() != k {
        return Err(Error::InvalidPermutation {
            detail: format!("expected {k} entries, got {}", pi.len()),
        });
    }
    let mut seen = vec![false; k];
    for &p in pi {
        if p >= k || seen[p] {
            return Err(Error::InvalidPermutation {
                detail: format!("{pi:?} is not a permutation of 0..{k}"),
            });
        }
        seen[p] = true;
    }
    Ok(())
}

/// How the delay stages of a generator are specified.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DelayPlan {
    /// Stage `k` uses regular delays with step `M^{pi[k]}`.
    Standard { pi: Vec<usize> },
    /// Arbitrary nonnegative per-port delays, one vector per stage.
    Explicit(Vec<DelayVector>),
}

/// A fully validated generator: `K+1` constant paraunitary matrices plus a
/// delay plan. Immutable once built.
#[derive(Debug, Clone)]
pub struct GeneratorSpec {
    m: usize,
    kind: ScalarKind,
    unitaries: Vec<PolyMatrix>,
    plan: DelayPlan,
    stage_constants: Vec<Scalar>,
}

impl GeneratorSpec {
    /// Validate and build. `unitaries` holds `U[0]..U[K]`; the plan must
    /// describe `K` stages. Every matrix must be constant, share size and
    /// kind, and pass the paraunitarity check with a positive constant
    /// (float kinds are checked at [`crate::DEFAULT_TOL`]).
    pub fn new(unitaries: Vec<PolyMatrix>, plan: DelayPlan) -> Result<Self> {
        if unitaries.is_empty() {
            return Err(Error::SizeMismatch { left: 1, right: 0 });
        }
        let m = unitaries[0].size();
        let kind = unitaries[0].kind();
        let k = unitaries.len() - 1;
        let mut stage_constants = Vec::with_capacity(unitaries.len());
        for (stage, u) in unitaries.iter().enumerate() {
            if u.size() != m {
                return Err(Error::SizeMismatch {
                    left: m,
                    right: u.size(),
                });
            }
            if u.kind() != kind {
                return Err(Error::KindMismatch {
                    left: kind,
                    right: u.kind(),
                });
            }
            if !u.is_constant() {
                return Err(Error::NotConstantMatrix { stage });
            }
            let check = u.paraunitary_check(DEFAULT_TOL)?;
            if !check.is_paraunitary {
                return Err(Error::NotParaunitary { stage });
            }
            stage_constants.push(check.constant.expect("passing check carries a constant"));
        }
        match &plan {
            DelayPlan::Standard { pi } => validate_permutation(pi, k)?,
            DelayPlan::Explicit(stages) => {
                if stages.len() != k {
                    return Err(Error::SizeMismatch {
                        left: k,
                        right: stages.len(),
                    });
                }
                for d in stages {
                    if d.len() != m {
                        return Err(Error::SizeMismatch {
                            left: m,
                            right: d.len(),
                        });
                    }
                }
            }
        }
        Ok(GeneratorSpec {
            m,
            kind,
            unitaries,
            plan,
            stage_constants,
        })
    }

    /// Set size M.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Stage count K (number of delay stages).
    pub fn stage_count(&self) -> usize {
        self.unitaries.len() - 1
    }

    pub fn kind(&self) -> ScalarKind {
        self.kind
    }

    pub fn unitary(&self, k: usize) -> &PolyMatrix {
        &self.unitaries[k]
    }

    pub fn plan(&self) -> &DelayPlan {
        &self.plan
    }

    pub fn is_standard(&self) -> bool {
        matches!(self.plan, DelayPlan::Standard { .. })
    }

    /// Materialized delay vectors, one per stage.
    pub fn delay_vectors(&self) -> Vec<DelayVector> {
        match &self.plan {
            DelayPlan::Standard { pi } => {
                standard_delays(self.m, self.stage_count(), pi).expect("validated plan")
            }
            DelayPlan::Explicit(stages) => stages.clone(),
        }
    }

    /// The overall constant `C`, the product of the stage constants.
    pub fn constant(&self) -> Scalar {
        let mut c = Scalar::one(self.kind);
        for s in &self.stage_constants {
            c = c.mul(s).expect("same kind");
        }
        c
    }

    /// Per-stage paraunitarity constants `C_k`.
    pub fn stage_constants(&self) -> &[Scalar] {
        &self.stage_constants
    }

    /// Sequence length `L = 1 +` total delay budget. Standard plans give
    /// `L = M^K`.
    pub fn length(&self) -> usize {
        1 + self
            .delay_vectors()
            .iter()
            .map(|d| d.max() as usize)
            .sum::<usize>()
    }

    /// Digest of the canonical serialization, for provenance tagging of
    /// generated sets.
    pub fn digest(&self) -> String {
        let mut hasher = Sha256::new();
        hasher.update(format!(
            "pucodes-generator-v1;m={};k={};kind={};",
            self.m,
            self.stage_count(),
            self.kind
        ));
        for u in &self.unitaries {
            hasher.update("u:");
            for r in 0..self.m {
                for c in 0..self.m {
                    hasher.update(format!("{},", u.entry(r, c)));
                }
            }
            hasher.update(";");
        }
        match &self.plan {
            DelayPlan::Standard { pi } => hasher.update(format!("standard:{pi:?}")),
            DelayPlan::Explicit(stages) => {
                hasher.update("explicit:");
                for d in stages {
                    hasher.update(format!("{:?};", d.delays()));
                }
            }
        }
        let out = hasher.finalize();
        out.iter().map(|b| format!("{b:02x}")).collect()
    }
}

/// One complementary set: M sequences of common length and kind, with
/// optional provenance (set index and generator digest).
#[derive(Debug, Clone, PartialEq)]
pub struct SequenceSet {
    kind: ScalarKind,
    sequences: Vec<Vec<Scalar>>,
    set_index: Option<usize>,
    generator_digest: Option<String>,
}

impl SequenceSet {
    /// Wrap raw sequences; they must be nonempty, rectangular and share one
    /// kind.
    pub fn new(sequences: Vec<Vec<Scalar>>) -> Result<Self> {
        let first = sequences.first().ok_or(Error::ShapeMismatch {
            detail: "empty set".into(),
        })?;
        let len = first.len();
        if len == 0 {
            return Err(Error::ShapeMismatch {
                detail: "zero-length sequences".into(),
            });
        }
        let kind = first[0].kind();
        for seq in &sequences {
            if seq.len() != len {
                return Err(Error::ShapeMismatch {
                    detail: format!("ragged lengths {} vs {len}", seq.len()),
                });
            }
            for s in seq {
                if s.kind() != kind {
                    return Err(Error::KindMismatch {
                        left: kind,
                        right: s.kind(),
                    });
                }
            }
        }
        Ok(SequenceSet {
            kind,
            sequences,
            set_index: None,
            generator_digest: None,
        })
    }

    pub fn with_provenance(mut self, set_index: usize, digest: String) -> Self {
        self.set_index = Some(set_index);
        self.generator_digest = Some(digest);
        self
    }

    pub fn with_set_index(mut self, set_index: usize) -> Self {
        self.set_index = Some(set_index);
        self
    }

    /// Number of sequences M.
    pub fn size(&self) -> usize {
        self.sequences.len()
    }

    /// Common sequence length L.
    pub fn len(&self) -> usize {
        self.sequences[0].len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequences.is_empty()
    }

    pub fn kind(&self) -> ScalarKind {
        self.kind
    }

    pub fn sequence(&self, i: usize) -> &[Scalar] {
        &self.sequences[i]
    }

    pub fn sequences(&self) -> &[Vec<Scalar>] {
        &self.sequences
    }

    pub fn set_index(&self) -> Option<usize> {
        self.set_index
    }

    pub fn generator_digest(&self) -> Option<&str> {
        self.generator_digest.as_deref()
    }
}

/// Which axis of the generating matrix a set is read along.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    Row,
    Column,
}

/// The full paraunitary product `U[0] * prod_k (D[k] * U[k+1])`.
///
/// The result is paraunitary with constant `prod_k C_k`; with standard
/// delays and all-nonzero unitary entries, every entry has degree exactly
/// `M^K - 1` and `M^K` nonzero coefficients.
pub fn build_generating_matrix(spec: &GeneratorSpec) -> PolyMatrix {
    let mut acc = spec.unitary(0).clone();
    for (k, delays) in spec.delay_vectors().iter().enumerate() {
        let d = delay_matrix(delays, spec.kind());
        acc = acc
            .mul(&d)
            .and_then(|p| p.mul(spec.unitary(k + 1)))
            .expect("validated spec");
    }
    acc
}

/// Stage-by-stage recursion: start from row `r` of `U[0]` and alternate
/// delay and unitary transforms. Equals row `r` of
/// [`build_generating_matrix`], padded to the full length budget.
pub fn recursive_generate(spec: &GeneratorSpec, r: usize) -> Result<SequenceSet> {
    if r >= spec.m() {
        return Err(Error::OutOfRange {
            what: "set index r",
            value: r as i64,
            limit: spec.m() as i64,
        });
    }
    let mut row: Vec<ZPoly> = (0..spec.m())
        .map(|s| spec.unitary(0).entry(r, s).clone())
        .collect();
    for (k, delays) in spec.delay_vectors().iter().enumerate() {
        for (port, poly) in row.iter_mut().enumerate() {
            *poly = poly.delayed(delays.delays()[port] as i64);
        }
        row = PolyMatrix::row_vec_mul(&row, spec.unitary(k + 1)).expect("validated spec");
    }
    let length = spec.length();
    let sequences = row
        .iter()
        .map(|p| pad_causal(p, length))
        .collect::<Result<Vec<_>>>()?;
    Ok(SequenceSet::new(sequences)?.with_provenance(r, spec.digest()))
}

fn pad_causal(p: &ZPoly, length: usize) -> Result<Vec<Scalar>> {
    let mut seq = p.to_causal_sequence()?;
    if seq.len() > length {
        return Err(Error::ShapeMismatch {
            detail: format!("sequence length {} exceeds budget {length}", seq.len()),
        });
    }
    seq.resize(length, Scalar::zero(p.kind()));
    Ok(seq)
}

/// Inverse Z-transform of one row or column of a causal generating matrix,
/// padded to the matrix-wide length `1 + max exponent`.
pub fn extract_set(matrix: &PolyMatrix, r: usize, axis: Axis) -> Result<SequenceSet> {
    if r >= matrix.size() {
        return Err(Error::OutOfRange {
            what: "set index r",
            value: r as i64,
            limit: matrix.size() as i64,
        });
    }
    if let Some(min) = matrix.min_shift() {
        if min < 0 {
            return Err(Error::AnticausalInput { min_exponent: min });
        }
    }
    let length = matrix.max_shift().map_or(1, |s| s as usize + 1);
    let sequences = (0..matrix.size())
        .map(|i| {
            let entry = match axis {
                Axis::Row => matrix.entry(r, i),
                Axis::Column => matrix.entry(i, r),
            };
            pad_causal(entry, length)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SequenceSet::new(sequences)?.with_set_index(r))
}

/// Apply a polynomial matrix (a unitary transform, a delay stage, or any
/// product of the two) to a set, sequence-vector style: the output's `i`-th
/// sequence is `sum_j T_{i,j} * x_j`. Unitary `T` preserves complementarity
/// (scaling the constant by `C_T`); pure delays preserve it unchanged.
pub fn transform_set(transform: &PolyMatrix, set: &SequenceSet) -> Result<SequenceSet> {
    if transform.size() != set.size() {
        return Err(Error::SizeMismatch {
            left: transform.size(),
            right: set.size(),
        });
    }
    let polys: Vec<ZPoly> = set
        .sequences()
        .iter()
        .map(|s| ZPoly::from_causal(set.kind(), s.clone()))
        .collect::<Result<Vec<_>>>()?;
    let out = transform.mul_poly_vec(&polys)?;
    let extra = transform.max_shift().unwrap_or(0).max(0) as usize;
    let length = set.len() + extra;
    let sequences = out
        .iter()
        .map(|p| pad_causal(p, length))
        .collect::<Result<Vec<_>>>()?;
    SequenceSet::new(sequences)
}

fn standard_pi(spec: &GeneratorSpec) -> Result<&[usize]> {
    match spec.plan() {
        DelayPlan::Standard { pi } => Ok(pi),
        DelayPlan::Explicit(_) => Err(Error::NotStandard),
    }
}

fn check_index(what: &'static str, value: usize, limit: usize) -> Result<()> {
    if value >= limit {
        return Err(Error::OutOfRange {
            what,
            value: value as i64,
            limit: limit as i64,
        });
    }
    Ok(())
}

/// Radix-M evaluation of sample `n` of sequence `s` in set `r`: the product
/// of `K+1` matrix elements indexed by consecutive permuted digits of `n`.
/// Costs O(K) scalar multiplications; no matrix algebra.
pub fn rmg_element(spec: &GeneratorSpec, r: usize, s: usize, n: u64) -> Result<Scalar> {
    let pi = standard_pi(spec)?;
    check_index("set index r", r, spec.m())?;
    check_index("sequence index s", s, spec.m())?;
    let k = spec.stage_count();
    let expansion = digits(n, spec.m(), k)?;
    if k == 0 {
        return Ok(spec.unitary(0).entry(r, s).coeff(0));
    }
    let d = |stage: usize| expansion.digit(pi[stage]);
    let mut acc = spec.unitary(0).entry(r, d(0)).coeff(0);
    for stage in 1..k {
        acc = acc.mul(&spec.unitary(stage).entry(d(stage - 1), d(stage)).coeff(0))?;
    }
    acc.mul(&spec.unitary(k).entry(d(k - 1), s).coeff(0))
}

/// Time-domain generating matrix at sample `n` via the digit-selected
/// matrix product `U[0] * prod_k diag(v_{d_{pi[k]}(n)}) * U[k+1]`. Entry
/// `(r, s)` equals [`rmg_element`] at `(r, s, n)`.
pub fn rmg_matrix(spec: &GeneratorSpec, n: u64) -> Result<PolyMatrix> {
    let pi = standard_pi(spec)?;
    let k = spec.stage_count();
    let expansion = digits(n, spec.m(), k)?;
    let mut acc = spec.unitary(0).clone();
    for (stage, &p) in pi.iter().enumerate() {
        let selector = position_diag(spec.m(), spec.kind(), expansion.digit(p));
        acc = acc
            .mul(&selector)
            .and_then(|product| product.mul(spec.unitary(stage + 1)))
            .expect("validated spec");
    }
    Ok(acc)
}

/// `diag(v_q)`: the matrix with a single 1 at `(q, q)`.
fn position_diag(m: usize, kind: ScalarKind, q: usize) -> PolyMatrix {
    let mut entries = vec![ZPoly::zero(kind); m * m];
    entries[q * m + q] = ZPoly::one(kind);
    PolyMatrix::from_entries(m, kind, entries).expect("square grid")
}
