//! Shared helpers for the property and acceptance suites: deterministic
//! RNG, random paraunitary generator specs over every scalar kind, and the
//! worked polyphase/Golay examples.

#![allow(dead_code)]

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use pucodes::catalog::{dft_matrix, equivalence_transform, hadamard_sylvester, eisenstein3_matrix, qam3_matrix, UnitaryCatalogEntry};
use pucodes::generator::{DelayPlan, GeneratorSpec};
use pucodes::polymatrix::PolyMatrix;
use pucodes::zpoly::DelayVector;
use pucodes::{Scalar, ScalarKind};

/// Deterministic seed, overridable for exploration via PUCODES_TEST_SEED.
pub fn rng() -> ChaCha8Rng {
    let seed = std::env::var("PUCODES_TEST_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(0x5eed_cafe);
    ChaCha8Rng::seed_from_u64(seed)
}

/// The worked M=3, K=2 all-DFT polyphase generator (identity permutation).
pub fn polyphase_spec() -> GeneratorSpec {
    let f = dft_matrix(3).into_matrix();
    GeneratorSpec::new(
        vec![f.clone(), f.clone(), f],
        DelayPlan::Standard { pi: vec![0, 1] },
    )
    .unwrap()
}

/// The length-2 Golay generator over Gaussian integers.
pub fn golay_spec() -> GeneratorSpec {
    let f2 = PolyMatrix::from_scalars(&[
        vec![Scalar::gauss(1, 0), Scalar::gauss(1, 0)],
        vec![Scalar::gauss(1, 0), Scalar::gauss(-1, 0)],
    ])
    .unwrap();
    GeneratorSpec::new(vec![f2.clone(), f2], DelayPlan::Standard { pi: vec![0] }).unwrap()
}

fn random_perm(rng: &mut ChaCha8Rng, m: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..m).collect();
    p.shuffle(rng);
    p
}

/// Unit phases representable in the kind: fourth roots for Gaussian, sixth
/// roots for Eisenstein, zeta_N powers for cyclotomic, arbitrary angles for
/// floats.
fn random_phase(rng: &mut ChaCha8Rng, kind: ScalarKind) -> Scalar {
    match kind {
        ScalarKind::Gauss => {
            let units = [
                Scalar::gauss(1, 0),
                Scalar::gauss(-1, 0),
                Scalar::gauss(0, 1),
                Scalar::gauss(0, -1),
            ];
            units[rng.gen_range(0..4)].clone()
        }
        ScalarKind::Eisenstein => {
            let units = [
                Scalar::eisenstein(1, 0),
                Scalar::eisenstein(-1, 0),
                Scalar::eisenstein(0, 1),
                Scalar::eisenstein(0, -1),
                Scalar::eisenstein(-1, -1),
                Scalar::eisenstein(1, 1),
            ];
            units[rng.gen_range(0..6)].clone()
        }
        ScalarKind::Cyclotomic(n) => Scalar::cyclotomic_root(n, rng.gen_range(0..n)),
        ScalarKind::Complex => {
            let theta: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
            Scalar::complex(theta.cos(), theta.sin())
        }
    }
}

/// Signed-permutation matrix: a permutation with random unit phases.
/// Strict-sense unitary (C = 1) in every kind.
pub fn random_signed_perm(rng: &mut ChaCha8Rng, m: usize, kind: ScalarKind) -> PolyMatrix {
    let perm = random_perm(rng, m);
    let mut rows = vec![vec![Scalar::zero(kind); m]; m];
    for (r, &c) in perm.iter().enumerate() {
        rows[r][c] = random_phase(rng, kind);
    }
    PolyMatrix::from_scalars(&rows).unwrap()
}

fn float_dft(m: usize) -> PolyMatrix {
    let rows: Vec<Vec<Scalar>> = (0..m)
        .map(|p| {
            (0..m)
                .map(|q| {
                    let theta = std::f64::consts::TAU * (p * q % m) as f64 / m as f64;
                    Scalar::complex(theta.cos(), theta.sin())
                })
                .collect()
        })
        .collect();
    PolyMatrix::from_scalars(&rows).unwrap()
}

fn random_equivalence(rng: &mut ChaCha8Rng, entry: &UnitaryCatalogEntry) -> PolyMatrix {
    let m = entry.size();
    let kind = entry.kind();
    let rp = random_perm(rng, m);
    let cp = random_perm(rng, m);
    let rph: Vec<Scalar> = (0..m).map(|_| random_phase(rng, kind)).collect();
    let cph: Vec<Scalar> = (0..m).map(|_| random_phase(rng, kind)).collect();
    equivalence_transform(entry, &rp, &cp, &rph, &cph)
        .unwrap()
        .into_matrix()
}

/// A random constant paraunitary matrix of the given kind and size.
pub fn random_unitary(rng: &mut ChaCha8Rng, m: usize, kind: ScalarKind) -> PolyMatrix {
    match kind {
        ScalarKind::Cyclotomic(_) => {
            if rng.gen_bool(0.25) {
                random_signed_perm(rng, m, kind)
            } else {
                random_equivalence(rng, &dft_matrix(m))
            }
        }
        ScalarKind::Gauss => {
            if m.is_power_of_two() && rng.gen_bool(0.5) {
                random_equivalence(rng, &hadamard_sylvester(m.trailing_zeros()))
            } else if m == 3 && rng.gen_bool(0.5) {
                random_equivalence(rng, &qam3_matrix())
            } else {
                random_signed_perm(rng, m, kind)
            }
        }
        ScalarKind::Eisenstein => {
            if m == 3 && rng.gen_bool(0.6) {
                random_equivalence(rng, &eisenstein3_matrix())
            } else {
                random_signed_perm(rng, m, kind)
            }
        }
        ScalarKind::Complex => {
            let base = UnitaryCatalogEntry::validated("float-dft", float_dft(m)).unwrap();
            if rng.gen_bool(0.3) {
                random_signed_perm(rng, m, kind)
            } else {
                random_equivalence(rng, &base)
            }
        }
    }
}

/// A scalar kind that can host an interesting unitary of size `m`: the
/// order-m cyclotomic ring always works; the others are mixed in where
/// their matrices exist.
pub fn random_kind(rng: &mut ChaCha8Rng, m: usize) -> ScalarKind {
    let mut kinds = vec![ScalarKind::Cyclotomic(m as u32), ScalarKind::Complex];
    kinds.push(ScalarKind::Gauss);
    if m == 3 {
        kinds.push(ScalarKind::Eisenstein);
    }
    kinds[rng.gen_range(0..kinds.len())]
}

/// Random generator with a standard delay plan.
pub fn random_standard_spec(
    rng: &mut ChaCha8Rng,
    m: usize,
    k: usize,
    kind: ScalarKind,
) -> GeneratorSpec {
    let unitaries: Vec<PolyMatrix> = (0..=k).map(|_| random_unitary(rng, m, kind)).collect();
    let pi = random_perm(rng, k);
    GeneratorSpec::new(unitaries, DelayPlan::Standard { pi }).unwrap()
}

/// Random generator with explicit (possibly overlapping) delays.
pub fn random_explicit_spec(
    rng: &mut ChaCha8Rng,
    m: usize,
    k: usize,
    kind: ScalarKind,
) -> GeneratorSpec {
    let unitaries: Vec<PolyMatrix> = (0..=k).map(|_| random_unitary(rng, m, kind)).collect();
    let stages = (0..k)
        .map(|_| DelayVector::new((0..m).map(|_| rng.gen_range(0..=4)).collect()))
        .collect();
    GeneratorSpec::new(unitaries, DelayPlan::Explicit(stages)).unwrap()
}

/// Random (m, k) with `m` in 2..=5, `k` in 1..=5 and `m^k` capped.
pub fn random_shape(rng: &mut ChaCha8Rng, cap: u64) -> (usize, usize) {
    loop {
        let m = rng.gen_range(2..=5usize);
        let k = rng.gen_range(1..=5usize);
        if (m as u64).pow(k as u32) <= cap {
            return (m, k);
        }
    }
}
