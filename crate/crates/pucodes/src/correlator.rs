//! The causal MIMO matched filter for a generator's sets, realized two
//! ways: as an explicit polynomial matrix (for algebraic checks) and as a
//! streaming stage cascade whose per-sample cost is `(K+1) * M^2`
//! multiplications, independent of the sequence length `L`.
//!
//! The filter is `Z^{-(L-1)} * tilde(M(Z^{-1}))`: the paraconjugate of the
//! generating matrix made causal by the `L-1` delay. Because the generating
//! matrix is a stage product, its paraconjugate factors into the reversed
//! chain of Hermitian-transposed unitaries with complemented per-port
//! delays, so the filter streams one input sample to `M` output samples
//! through short per-stage delay lines. Feeding a signal into port `r`
//! (other ports zero) produces at output `m` the cross-correlation of the
//! signal with sequence `m` of set `r`, delayed by `L-1`.
//!
//! Normalization by `1/C` is off by default (exact kinds cannot divide);
//! [`MatchedFilterSpec::normalize`] performs it in the float domain.

use crate::error::{Error, Result};
use crate::generator::GeneratorSpec;
use crate::polymatrix::{delay_matrix, PolyMatrix};
use crate::scalar::{Scalar, ScalarKind};
use crate::zpoly::DelayVector;

/// The stage cascade of a matched filter: constant unitary factors
/// (Hermitian-transposed, in reverse stage order) alternating with causal
/// complemented delay vectors.
#[derive(Debug, Clone)]
pub struct MatchedFilterSpec {
    m: usize,
    kind: ScalarKind,
    /// `L - 1`: the causality delay of the whole filter.
    total_delay: u64,
    /// The generator constant `C`.
    constant: Scalar,
    /// `tilde(U[K]), tilde(U[K-1]), ..., tilde(U[0])` as scalar grids
    /// (row-major).
    hermitian_grids: Vec<Vec<Scalar>>,
    /// Complemented delays, stage `k` of the generator contributing
    /// `maxD[k] - D[k]` in reverse order.
    stage_delays: Vec<DelayVector>,
}

/// Build the matched filter of a generator: reversed Hermitian-transposed
/// unitaries with complemented (hence causal) per-port delays.
pub fn build_matched_filter(spec: &GeneratorSpec) -> MatchedFilterSpec {
    let m = spec.m();
    let kind = spec.kind();
    let k = spec.stage_count();
    let mut hermitian_grids = Vec::with_capacity(k + 1);
    for stage in (0..=k).rev() {
        let grid = spec
            .unitary(stage)
            .tilde()
            .to_scalar_grid()
            .expect("generator unitaries are constant");
        hermitian_grids.push(grid.into_iter().flatten().collect());
    }
    let mut stage_delays = Vec::with_capacity(k);
    let mut total_delay = 0u64;
    for d in spec.delay_vectors().iter().rev() {
        let max = d.max();
        total_delay += max;
        stage_delays.push(DelayVector::new(
            d.delays().iter().map(|&x| max - x).collect(),
        ));
    }
    MatchedFilterSpec {
        m,
        kind,
        total_delay,
        constant: spec.constant(),
        hermitian_grids,
        stage_delays,
    }
}

impl MatchedFilterSpec {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn kind(&self) -> ScalarKind {
        self.kind
    }

    /// Number of delay stages K.
    pub fn stage_count(&self) -> usize {
        self.stage_delays.len()
    }

    /// The causality delay `L - 1`.
    pub fn total_delay(&self) -> u64 {
        self.total_delay
    }

    /// The generator constant `C` (outputs are unnormalized by this).
    pub fn constant(&self) -> &Scalar {
        &self.constant
    }

    /// Complemented per-port delays, in processing order.
    pub fn stage_delays(&self) -> &[DelayVector] {
        &self.stage_delays
    }

    /// The stage unitary factors as matrices, in processing order.
    pub fn hermitian_factors(&self) -> Vec<PolyMatrix> {
        self.hermitian_grids
            .iter()
            .map(|grid| {
                let rows: Vec<Vec<Scalar>> = grid
                    .chunks(self.m)
                    .map(|chunk| chunk.to_vec())
                    .collect();
                PolyMatrix::from_scalars(&rows).expect("square grid")
            })
            .collect()
    }

    /// Multiply the cascade out into one polynomial matrix. Equals
    /// `Z^{-(L-1)} * tilde(generating matrix)` exactly.
    pub fn expand(&self) -> PolyMatrix {
        let factors = self.hermitian_factors();
        let mut acc = factors[0].clone();
        for (i, delays) in self.stage_delays.iter().enumerate() {
            let d = delay_matrix(delays, self.kind);
            acc = acc
                .mul(&d)
                .and_then(|p| p.mul(&factors[i + 1]))
                .expect("uniform kind and size");
        }
        acc
    }

    /// Embed outputs into the float domain and divide by `C`.
    pub fn normalize(&self, outputs: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
        let c = self.constant.embed().0;
        outputs
            .iter()
            .map(|seq| {
                seq.iter()
                    .map(|v| {
                        let (re, im) = v.embed();
                        Scalar::complex(re / c, im / c)
                    })
                    .collect()
            })
            .collect()
    }
}

/// One per-port FIFO delay line; length 0 passes samples through.
#[derive(Debug, Clone)]
struct DelayLine {
    buf: Vec<Scalar>,
    pos: usize,
}

impl DelayLine {
    fn new(len: u64, kind: ScalarKind) -> Self {
        DelayLine {
            buf: vec![Scalar::zero(kind); len as usize],
            pos: 0,
        }
    }

    fn step(&mut self, input: Scalar) -> Scalar {
        if self.buf.is_empty() {
            return input;
        }
        let out = std::mem::replace(&mut self.buf[self.pos], input);
        self.pos = (self.pos + 1) % self.buf.len();
        out
    }
}

/// Mutable streaming state for one pass through a matched filter. Owned by
/// a single stream; create one per concurrent input.
#[derive(Debug, Clone)]
pub struct StreamState {
    spec: MatchedFilterSpec,
    lines: Vec<Vec<DelayLine>>,
    samples_in: u64,
}

impl StreamState {
    pub fn new(spec: &MatchedFilterSpec) -> Self {
        let lines = spec
            .stage_delays
            .iter()
            .map(|d| {
                d.delays()
                    .iter()
                    .map(|&len| DelayLine::new(len, spec.kind))
                    .collect()
            })
            .collect();
        StreamState {
            spec: spec.clone(),
            lines,
            samples_in: 0,
        }
    }

    /// Number of samples pushed so far.
    pub fn samples_in(&self) -> u64 {
        self.samples_in
    }

    /// Push one input sample vector (all M ports), receive the M output
    /// samples for this time step.
    pub fn push(&mut self, input: &[Scalar]) -> Result<Vec<Scalar>> {
        if input.len() != self.spec.m {
            return Err(Error::SizeMismatch {
                left: self.spec.m,
                right: input.len(),
            });
        }
        for v in input {
            if v.kind() != self.spec.kind {
                return Err(Error::KindMismatch {
                    left: self.spec.kind,
                    right: v.kind(),
                });
            }
        }
        self.samples_in += 1;
        // The grids and delays are stored in matrix (display) order; a
        // sample enters the product at the rightmost factor, so the chain
        // is traversed back to front.
        let k = self.spec.stage_count();
        let mut v = mat_vec(&self.spec.hermitian_grids[k], self.spec.m, input);
        for stage in (0..k).rev() {
            for (port, line) in self.lines[stage].iter_mut().enumerate() {
                v[port] = line.step(v[port].clone());
            }
            v = mat_vec(&self.spec.hermitian_grids[stage], self.spec.m, &v);
        }
        Ok(v)
    }

    /// Push one sample into a single port (other ports zero).
    pub fn push_port(&mut self, port: usize, sample: Scalar) -> Result<Vec<Scalar>> {
        if port >= self.spec.m {
            return Err(Error::OutOfRange {
                what: "port",
                value: port as i64,
                limit: self.spec.m as i64,
            });
        }
        let mut input = vec![Scalar::zero(self.spec.kind); self.spec.m];
        input[port] = sample;
        self.push(&input)
    }

    /// Emit the `L - 1` tail samples by pushing zero inputs.
    pub fn flush(&mut self) -> Result<Vec<Vec<Scalar>>> {
        let zeros = vec![Scalar::zero(self.spec.kind); self.spec.m];
        (0..self.spec.total_delay)
            .map(|_| self.push(&zeros))
            .collect()
    }
}

fn mat_vec(grid: &[Scalar], m: usize, v: &[Scalar]) -> Vec<Scalar> {
    let mut out = Vec::with_capacity(m);
    for r in 0..m {
        let mut acc = Scalar::zero(v[0].kind());
        for (c, x) in v.iter().enumerate() {
            if !x.is_zero() {
                let term = grid[r * m + c].mul(x).expect("uniform kind");
                acc = acc.add(&term).expect("uniform kind");
            }
        }
        out.push(acc);
    }
    out
}

/// Feed `samples` into port `r` of the filter (other ports zero) and return
/// the `M` output sequences, flush tail included: each output has length
/// `samples.len() + L - 1`, and output `m` at time `t` is the
/// cross-correlation of sequence `m` of set `r` with the input at shift
/// `t - (L-1)`.
pub fn correlate_stream(
    filter: &MatchedFilterSpec,
    r: usize,
    samples: &[Scalar],
) -> Result<Vec<Vec<Scalar>>> {
    if r >= filter.m {
        return Err(Error::OutOfRange {
            what: "port",
            value: r as i64,
            limit: filter.m as i64,
        });
    }
    let mut state = StreamState::new(filter);
    let steps = samples.len() + filter.total_delay as usize;
    let mut outputs = vec![Vec::with_capacity(steps); filter.m];
    for sample in samples {
        let out = state.push_port(r, sample.clone())?;
        for (m, v) in out.into_iter().enumerate() {
            outputs[m].push(v);
        }
    }
    for out in state.flush()? {
        for (m, v) in out.into_iter().enumerate() {
            outputs[m].push(v);
        }
    }
    Ok(outputs)
}

/// Per-sample multiply counts of the stage cascade versus the direct
/// tapped-delay-line correlator producing the same M outputs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OpCountReport {
    pub m: usize,
    /// Delay stage count K.
    pub stages: usize,
    /// Sequence length L.
    pub length: usize,
    /// Cascade multiplications per input sample: `(K+1) * M^2`.
    pub cascade_per_sample: u64,
    /// Direct-correlator multiplications per input sample: `M * L`.
    pub direct_per_sample: u64,
}

impl OpCountReport {
    /// Per-sample speedup of the cascade over the direct form.
    pub fn speedup(&self) -> f64 {
        self.direct_per_sample as f64 / self.cascade_per_sample as f64
    }

    /// Direct multiplications per single output sample: `L`.
    pub fn direct_per_output(&self) -> u64 {
        self.length as u64
    }
}

/// Operation counts for a built filter.
pub fn op_count(filter: &MatchedFilterSpec) -> OpCountReport {
    let m = filter.m as u64;
    let k = filter.stage_count() as u64;
    let length = filter.total_delay + 1;
    OpCountReport {
        m: filter.m,
        stages: filter.stage_count(),
        length: length as usize,
        cascade_per_sample: (k + 1) * m * m,
        direct_per_sample: m * length,
    }
}
