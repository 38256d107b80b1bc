//! Catalog of unitary matrices over the supported scalar kinds.
//!
//! Every entry is validated (paraunitarity plus a positive constant) on
//! construction, and the constant is derived from the check rather than
//! asserted. The DFT matrix is stored exactly as order-M cyclotomic
//! integers; a floating DFT is obtained by converting the entries.

use crate::error::{Error, Result};
use crate::polymatrix::PolyMatrix;
use crate::scalar::{Scalar, ScalarKind};
use crate::DEFAULT_TOL;

/// A named, validated unitary matrix.
#[derive(Debug, Clone)]
pub struct UnitaryCatalogEntry {
    name: String,
    matrix: PolyMatrix,
    constant: Scalar,
}

impl UnitaryCatalogEntry {
    /// Validate `matrix` and wrap it as a catalog entry. The constant is
    /// taken from the paraunitarity check.
    pub fn validated(name: impl Into<String>, matrix: PolyMatrix) -> Result<Self> {
        let check = matrix.paraunitary_check(DEFAULT_TOL)?;
        if !check.is_paraunitary {
            return Err(Error::NotParaunitary { stage: 0 });
        }
        Ok(UnitaryCatalogEntry {
            name: name.into(),
            matrix,
            constant: check.constant.expect("passing check carries a constant"),
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn size(&self) -> usize {
        self.matrix.size()
    }

    pub fn kind(&self) -> ScalarKind {
        self.matrix.kind()
    }

    pub fn matrix(&self) -> &PolyMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> PolyMatrix {
        self.matrix
    }

    /// The paraunitarity constant `C`.
    pub fn constant(&self) -> &Scalar {
        &self.constant
    }
}

/// The `M x M` DFT matrix `F_{p,q} = zeta_M^{p*q}`, exact in order-M
/// cyclotomic integers. `C = M`.
pub fn dft_matrix(m: usize) -> UnitaryCatalogEntry {
    assert!(m >= 1, "DFT size must be >= 1");
    let order = m as u32;
    let rows: Vec<Vec<Scalar>> = (0..m)
        .map(|p| {
            (0..m)
                .map(|q| Scalar::cyclotomic_root(order, ((p * q) % m) as u32))
                .collect()
        })
        .collect();
    let matrix = PolyMatrix::from_scalars(&rows).expect("square grid");
    UnitaryCatalogEntry::validated(format!("dft{m}"), matrix)
        .expect("DFT matrix is paraunitary")
}

/// Sylvester-Hadamard matrix of size `2^m` (Gaussian-integer entries,
/// all +-1). `C = 2^m`.
pub fn hadamard_sylvester(m: u32) -> UnitaryCatalogEntry {
    let mut rows: Vec<Vec<i64>> = vec![vec![1]];
    for _ in 0..m {
        // Kronecker step with H2 = [[1,1],[1,-1]]
        let size = rows.len();
        let mut next = vec![vec![0i64; 2 * size]; 2 * size];
        for (r, row) in rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                next[r][c] = v;
                next[r][c + size] = v;
                next[r + size][c] = v;
                next[r + size][c + size] = -v;
            }
        }
        rows = next;
    }
    let grid: Vec<Vec<Scalar>> = rows
        .into_iter()
        .map(|row| row.into_iter().map(|v| Scalar::gauss(v, 0)).collect())
        .collect();
    let matrix = PolyMatrix::from_scalars(&grid).expect("square grid");
    UnitaryCatalogEntry::validated(format!("hadamard{}", 1usize << m), matrix)
        .expect("Sylvester construction is paraunitary")
}

/// The 3x3 Gaussian-integer unitary matrix used for rectangular QAM
/// constellations. The constant derives to 16.
pub fn qam3_matrix() -> UnitaryCatalogEntry {
    let g = Scalar::gauss;
    let rows = vec![
        vec![g(2, 2), g(2, 0), g(2, 0)],
        vec![g(2, 0), g(-1, 3), g(-1, -1)],
        vec![g(2, 0), g(-1, -1), g(-1, 3)],
    ];
    let matrix = PolyMatrix::from_scalars(&rows).expect("square grid");
    UnitaryCatalogEntry::validated("qam3-paper", matrix).expect("QAM matrix is paraunitary")
}

/// The 3x3 Eisenstein-integer unitary matrix for hexagonal constellations.
/// The constant derives to 12.
pub fn eisenstein3_matrix() -> UnitaryCatalogEntry {
    let e = Scalar::eisenstein;
    let rows = vec![
        vec![e(2, 0), e(2, 0), e(2, 0)],
        vec![e(2, 0), e(-2, 1), e(0, -1)],
        vec![e(2, 0), e(0, -1), e(-2, 1)],
    ];
    let matrix = PolyMatrix::from_scalars(&rows).expect("square grid");
    UnitaryCatalogEntry::validated("eisenstein3-paper", matrix)
        .expect("Eisenstein matrix is paraunitary")
}

/// Equivalence transform of a unitary matrix: permute rows and columns and
/// multiply whole rows/columns by unit-magnitude phases. Preserves the
/// constant `C`.
///
/// Phases must satisfy `|phase|^2 = 1` exactly for exact kinds (i.e. be
/// roots of unity representable in the kind).
pub fn equivalence_transform(
    entry: &UnitaryCatalogEntry,
    row_perm: &[usize],
    col_perm: &[usize],
    row_phases: &[Scalar],
    col_phases: &[Scalar],
) -> Result<UnitaryCatalogEntry> {
    let m = entry.size();
    let kind = entry.kind();
    validate_perm(row_perm, m)?;
    validate_perm(col_perm, m)?;
    for (idx, phase) in row_phases.iter().chain(col_phases.iter()).enumerate() {
        if phase.kind() != kind {
            return Err(Error::KindMismatch {
                left: kind,
                right: phase.kind(),
            });
        }
        let unit = phase.msq().sub(&Scalar::one(kind))?;
        if !unit.vanishes(DEFAULT_TOL) {
            return Err(Error::NonUnitPhase { index: idx });
        }
    }
    if row_phases.len() != m || col_phases.len() != m {
        return Err(Error::SizeMismatch {
            left: m,
            right: row_phases.len().min(col_phases.len()),
        });
    }
    let grid = entry
        .matrix()
        .to_scalar_grid()
        .expect("catalog entries are constant matrices");
    let mut rows = Vec::with_capacity(m);
    for i in 0..m {
        let mut row = Vec::with_capacity(m);
        for j in 0..m {
            let v = grid[row_perm[i]][col_perm[j]]
                .mul(&row_phases[i])?
                .mul(&col_phases[j])?;
            row.push(v);
        }
        rows.push(row);
    }
    let matrix = PolyMatrix::from_scalars(&rows)?;
    UnitaryCatalogEntry::validated(format!("{}~equiv", entry.name()), matrix)
}

fn validate_perm(perm: &[usize], m: usize) -> Result<()> {
    if perm.len() != m {
        return Err(Error::SizeMismatch {
            left: m,
            right: perm.len(),
        });
    }
    let mut seen = vec![false; m];
    for &p in perm {
        if p >= m || seen[p] {
            return Err(Error::InvalidPermutation {
                detail: format!("{perm:?} is not a permutation of 0..{m}"),
            });
        }
        seen[p] = true;
    }
    Ok(())
}

/// Look up a catalog entry by name. `size` is required for the size-generic
/// families ("dft", "hadamard").
pub fn lookup(name: &str, size: Option<usize>) -> Result<UnitaryCatalogEntry> {
    match name {
        "dft" => {
            let m = size.ok_or_else(|| Error::UnknownCatalogEntry {
                name: "dft (size required)".into(),
            })?;
            Ok(dft_matrix(m))
        }
        "hadamard" => {
            let m = size.ok_or_else(|| Error::UnknownCatalogEntry {
                name: "hadamard (size required)".into(),
            })?;
            if !m.is_power_of_two() {
                return Err(Error::UnknownCatalogEntry {
                    name: format!("hadamard of size {m} (must be a power of 2)"),
                });
            }
            Ok(hadamard_sylvester(m.trailing_zeros()))
        }
        "qam3-paper" => Ok(qam3_matrix()),
        "eisenstein3-paper" => Ok(eisenstein3_matrix()),
        _ => Err(Error::UnknownCatalogEntry { name: name.into() }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dft3_rows() {
        let f = dft_matrix(3);
        let w = |e: u32| Scalar::cyclotomic_root(3, e);
        let grid = f.matrix().to_scalar_grid().unwrap();
        assert_eq!(grid[0], vec![w(0), w(0), w(0)]);
        assert_eq!(grid[1], vec![w(0), w(1), w(2)]);
        assert_eq!(grid[2], vec![w(0), w(2), w(1)]);
        assert_eq!(f.constant(), &Scalar::integer(f.kind(), 3));
    }

    #[test]
    fn dft2_and_dft1() {
        let f2 = dft_matrix(2);
        let grid = f2.matrix().to_scalar_grid().unwrap();
        assert_eq!(grid[1][1], Scalar::cyclotomic(2, &[-1])); // zeta_2 = -1
        assert_eq!(f2.constant(), &Scalar::integer(f2.kind(), 2));
        let f1 = dft_matrix(1);
        assert_eq!(f1.size(), 1);
        assert_eq!(f1.constant(), &Scalar::integer(f1.kind(), 1));
    }

    #[test]
    fn hadamard_sizes_and_constants() {
        let h1 = hadamard_sylvester(0);
        assert_eq!(h1.size(), 1);
        let h2 = hadamard_sylvester(1);
        let grid = h2.matrix().to_scalar_grid().unwrap();
        assert_eq!(grid[1], vec![Scalar::gauss(1, 0), Scalar::gauss(-1, 0)]);
        let h4 = hadamard_sylvester(2);
        assert_eq!(h4.size(), 4);
        assert_eq!(h4.constant(), &Scalar::gauss(4, 0));
        // all entries +-1
        for row in h4.matrix().to_scalar_grid().unwrap() {
            for v in row {
                assert!(v == Scalar::gauss(1, 0) || v == Scalar::gauss(-1, 0));
            }
        }
    }

    #[test]
    fn qam_matrix_validates_to_sixteen() {
        let q = qam3_matrix();
        assert_eq!(q.constant(), &Scalar::gauss(16, 0));
        // row-norm oracle for row 0: |2+2i|^2 + |2|^2 + |2|^2 = 8 + 4 + 4
        let grid = q.matrix().to_scalar_grid().unwrap();
        let mut norm = Scalar::gauss(0, 0);
        for v in &grid[0] {
            norm = norm.add(&v.msq()).unwrap();
        }
        assert_eq!(norm, Scalar::gauss(16, 0));
    }

    #[test]
    fn eisenstein_matrix_validates_to_twelve() {
        let e = eisenstein3_matrix();
        assert_eq!(e.constant(), &Scalar::eisenstein(12, 0));
        let grid = e.matrix().to_scalar_grid().unwrap();
        // symmetric off-diagonal entries are both -w
        assert_eq!(grid[1][2], Scalar::eisenstein(0, -1));
        assert_eq!(grid[2][1], Scalar::eisenstein(0, -1));
        // row-norm oracle for row 1: 4 + 7 + 1
        let mut norm = Scalar::eisenstein(0, 0);
        for v in &grid[1] {
            norm = norm.add(&v.msq()).unwrap();
        }
        assert_eq!(norm, Scalar::eisenstein(12, 0));
    }

    #[test]
    fn equivalence_preserves_constant() {
        let f = dft_matrix(3);
        let one = Scalar::one(f.kind());
        let w = Scalar::cyclotomic_root(3, 1);
        // swap rows 0 and 1, phase column 2 by w
        let t = equivalence_transform(
            &f,
            &[1, 0, 2],
            &[0, 1, 2],
            &[one.clone(), one.clone(), one.clone()],
            &[one.clone(), one.clone(), w],
        )
        .unwrap();
        assert_eq!(t.constant(), f.constant());
        // identity transform leaves the matrix unchanged
        let id = equivalence_transform(
            &f,
            &[0, 1, 2],
            &[0, 1, 2],
            &[one.clone(), one.clone(), one.clone()],
            &[one.clone(), one.clone(), one],
        )
        .unwrap();
        assert_eq!(id.matrix(), f.matrix());
    }

    #[test]
    fn non_unit_phase_rejected() {
        let f = dft_matrix(2);
        let one = Scalar::one(f.kind());
        let two = Scalar::integer(f.kind(), 2);
        let err = equivalence_transform(&f, &[0, 1], &[0, 1], &[two, one.clone()], &[one.clone(), one])
            .unwrap_err();
        assert!(matches!(err, Error::NonUnitPhase { index: 0 }));
    }

    #[test]
    fn dft_rows_have_full_zero_shift_energy() {
        // each DFT row is a unit-magnitude chirp: R(0) = M exactly
        for m in [2usize, 3, 5, 8] {
            let f = dft_matrix(m);
            let grid = f.matrix().to_scalar_grid().unwrap();
            for row in grid {
                let r0 = crate::correlation::auto_correlation(&row).unwrap().value(0);
                assert_eq!(r0, Scalar::integer(f.kind(), m as i64));
            }
        }
    }

    #[test]
    fn lookup_by_name() {
        assert_eq!(lookup("dft", Some(4)).unwrap().size(), 4);
        assert_eq!(lookup("hadamard", Some(8)).unwrap().size(), 8);
        assert_eq!(lookup("qam3-paper", None).unwrap().size(), 3);
        assert_eq!(lookup("eisenstein3-paper", None).unwrap().size(), 3);
        assert!(lookup("dft", None).is_err());
        assert!(lookup("hadamard", Some(3)).is_err());
        assert!(lookup("nonsense", None).is_err());
    }
}
