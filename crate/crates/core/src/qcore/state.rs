use std::fmt;
use std::path::{Path, PathBuf};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::eigen::{hermitian_eigen, HERMITIAN_TOL};
use super::matrix::{CMatrix, ZERO};
use crate::{Error, Result};

pub const TRACE_TOL: f64 = 1e-10;
pub const PSD_TOL: f64 = 1e-9;
/// Custom files whose smallest eigenvalue lies in `[-PSD_REPAIR_TOL, -PSD_TOL)`
/// are clipped back onto the PSD cone instead of being rejected.
pub const PSD_REPAIR_TOL: f64 = 1e-7;

/// Hermitian, unit-trace, positive semidefinite matrix on one to three qubits.
#[derive(Clone, PartialEq)]
pub struct DensityMatrix {
    mat: CMatrix,
}

impl DensityMatrix {
    /// Validates every density-matrix invariant.
    pub fn new(mat: CMatrix) -> Result<Self> {
        Self::check_shape(&mat)?;
        let min = Self::check_hermitian_unit_trace(&mat)?;
        if min < -PSD_TOL {
            return Err(Error::InvariantViolation(format!(
                "minimum eigenvalue {min:.3e} is below -{PSD_TOL:e}"
            )));
        }
        Ok(Self { mat })
    }

    /// Trusted constructor for matrices built from valid ingredients.
    pub(crate) fn from_trusted(mat: CMatrix) -> Self {
        debug_assert!(Self::new(mat.clone()).is_ok(), "{mat:?}");
        Self { mat }
    }

    /// `|ψ⟩⟨ψ|` for the normalized input vector.
    pub fn from_pure(amplitudes: &[Complex64]) -> Result<Self> {
        let norm = amplitudes.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::InvariantViolation("state vector has zero norm".into()));
        }
        let normalized: Vec<Complex64> = amplitudes.iter().map(|z| z / norm).collect();
        Self::new(CMatrix::outer(&normalized))
    }

    pub fn maximally_mixed(dim: usize) -> Self {
        Self::from_trusted(CMatrix::identity(dim).scale(1.0 / dim as f64))
    }

    /// Computational basis projector `|index⟩⟨index|`.
    pub fn basis(dim: usize, index: usize) -> Self {
        let mut m = CMatrix::zeros(dim, dim);
        m[(index, index)] = Complex64::new(1.0, 0.0);
        Self::from_trusted(m)
    }

    pub fn dim(&self) -> usize {
        self.mat.rows()
    }

    pub fn num_qubits(&self) -> usize {
        self.dim().trailing_zeros() as usize
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.mat
    }

    pub fn into_matrix(self) -> CMatrix {
        self.mat
    }

    /// Convex combination `weight·self + (1 - weight)·other`.
    pub fn mix(&self, other: &Self, weight: f64) -> Result<Self> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                actual: other.dim(),
            });
        }
        if !(0.0..=1.0).contains(&weight) {
            return Err(Error::InvalidConfig(format!(
                "mixing weight {weight} outside [0, 1]"
            )));
        }
        Ok(Self::from_trusted(
            &self.mat.scale(weight) + &other.mat.scale(1.0 - weight),
        ))
    }

    /// Conjugation `U ρ U†` by a unitary of matching size.
    pub fn conjugate(&self, unitary: &CMatrix) -> Result<Self> {
        if unitary.rows() != self.dim() || !unitary.is_square() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                actual: unitary.rows(),
            });
        }
        Self::new(&(unitary * &self.mat) * &unitary.adjoint())
    }

    fn check_shape(mat: &CMatrix) -> Result<()> {
        if !mat.is_square() {
            return Err(Error::NonSquare {
                rows: mat.rows(),
                cols: mat.cols(),
            });
        }
        if !matches!(mat.rows(), 2 | 4 | 8) {
            return Err(Error::InvariantViolation(format!(
                "dimension {} is not one of 2, 4, 8",
                mat.rows()
            )));
        }
        Ok(())
    }

    /// Returns the minimum eigenvalue once Hermiticity and trace are confirmed.
    fn check_hermitian_unit_trace(mat: &CMatrix) -> Result<f64> {
        let dev = mat.hermiticity_deviation().unwrap_or(f64::INFINITY);
        if dev > HERMITIAN_TOL {
            return Err(Error::InvariantViolation(format!(
                "not Hermitian: max |M - M†| = {dev:.3e}"
            )));
        }
        let tr = mat.trace();
        if (tr - Complex64::new(1.0, 0.0)).norm() > TRACE_TOL {
            return Err(Error::InvariantViolation(format!(
                "trace {:.12} + {:.3e}i is not 1",
                tr.re, tr.im
            )));
        }
        let eig = hermitian_eigen(mat)?;
        Ok(eig.values[0])
    }
}

impl fmt::Debug for DensityMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DensityMatrix({:?})", self.mat)
    }
}

/// Named three-qubit state families.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum StateFamily {
    /// `(|100⟩ + |010⟩ + |001⟩)/√3`.
    W,
    /// `p|ψ⟩⟨ψ| + (1-p)I/8` with `|ψ⟩ = cosθ|000⟩ + sinθ|11⟩(cosθ₃|0⟩ + sinθ₃|1⟩)`.
    GhzClass { p: f64, theta: f64, theta3: f64 },
    /// `|000⟩`.
    Ground,
    /// Density matrix read from a JSON file (see [`DensityMatrixFile`]).
    Custom { file: PathBuf },
}

/// Builds the density matrix of a state family.
pub fn make_state(family: &StateFamily) -> Result<DensityMatrix> {
    match family {
        StateFamily::W => {
            let amp = Complex64::new(1.0 / 3f64.sqrt(), 0.0);
            let mut v = vec![ZERO; 8];
            v[0b100] = amp;
            v[0b010] = amp;
            v[0b001] = amp;
            Ok(DensityMatrix::from_trusted(CMatrix::outer(&v)))
        }
        &StateFamily::GhzClass { p, theta, theta3 } => {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::InvalidConfig(format!("p = {p} outside [0, 1]")));
            }
            if !theta.is_finite() || !theta3.is_finite() {
                return Err(Error::InvalidConfig("angles must be finite".into()));
            }
            let mut v = vec![ZERO; 8];
            v[0b000] = Complex64::new(theta.cos(), 0.0);
            v[0b110] = Complex64::new(theta.sin() * theta3.cos(), 0.0);
            v[0b111] = Complex64::new(theta.sin() * theta3.sin(), 0.0);
            let pure = DensityMatrix::from_trusted(CMatrix::outer(&v));
            pure.mix(&DensityMatrix::maximally_mixed(8), p)
        }
        StateFamily::Ground => Ok(DensityMatrix::basis(8, 0)),
        StateFamily::Custom { file } => load_density_matrix(file),
    }
}

/// On-disk density matrix: `{"dim": n, "re": [[..]], "im": [[..]]}`, row-major.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DensityMatrixFile {
    pub dim: usize,
    pub re: Vec<Vec<f64>>,
    pub im: Vec<Vec<f64>>,
}

impl DensityMatrixFile {
    pub fn from_matrix(rho: &DensityMatrix) -> Self {
        let n = rho.dim();
        let m = rho.matrix();
        Self {
            dim: n,
            re: (0..n).map(|r| (0..n).map(|c| m[(r, c)].re).collect()).collect(),
            im: (0..n).map(|r| (0..n).map(|c| m[(r, c)].im).collect()).collect(),
        }
    }

    fn to_cmatrix(&self) -> std::result::Result<CMatrix, String> {
        let n = self.dim;
        if !matches!(n, 2 | 4 | 8) {
            return Err(format!("dim must be 2, 4 or 8, got {n}"));
        }
        for (name, rows) in [("re", &self.re), ("im", &self.im)] {
            if rows.len() != n {
                return Err(format!("'{name}' has {} rows, expected {n}", rows.len()));
            }
            if let Some((i, row)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
                return Err(format!(
                    "'{name}' row {i} has {} entries, expected {n}",
                    row.len()
                ));
            }
        }
        CMatrix::new(
            n,
            n,
            (0..n * n)
                .map(|idx| Complex64::new(self.re[idx / n][idx % n], self.im[idx / n][idx % n]))
                .collect(),
        )
        .map_err(|e| e.to_string())
    }
}

/// Parses a density-matrix document; `origin` is only used in diagnostics.
pub fn parse_density_matrix(text: &str, origin: &Path) -> Result<DensityMatrix> {
    let parse_err = |reason: String| Error::FileParse {
        path: origin.to_path_buf(),
        reason,
    };
    let file: DensityMatrixFile =
        serde_json::from_str(text).map_err(|e| parse_err(e.to_string()))?;
    let mat = file.to_cmatrix().map_err(parse_err)?;
    DensityMatrix::check_shape(&mat)?;
    let min = DensityMatrix::check_hermitian_unit_trace(&mat)?;
    if min >= -PSD_TOL {
        return Ok(DensityMatrix { mat });
    }
    if min < -PSD_REPAIR_TOL {
        return Err(Error::InvariantViolation(format!(
            "{}: minimum eigenvalue {min:.3e} is below -{PSD_REPAIR_TOL:e}",
            origin.display()
        )));
    }
    log::warn!(
        "{}: minimum eigenvalue {min:.3e}; clipping negative eigenvalues and renormalizing",
        origin.display()
    );
    Ok(DensityMatrix::from_trusted(project_psd(&mat)?))
}

pub fn load_density_matrix(path: &Path) -> Result<DensityMatrix> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::FileParse {
        path: path.to_path_buf(),
        reason: e.to_string(),
    })?;
    parse_density_matrix(&text, path)
}

fn project_psd(mat: &CMatrix) -> Result<CMatrix> {
    let eig = hermitian_eigen(mat)?;
    let clipped = eig.reassemble(|v| v.max(0.0));
    let tr = clipped.trace().re;
    let n = mat.rows();
    // Rebuild exactly Hermitian after renormalizing.
    let scaled = clipped.scale(1.0 / tr);
    Ok(CMatrix::from_fn(n, n, |r, c| {
        0.5 * (scaled[(r, c)] + scaled[(c, r)].conj())
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::eigen::hermitian_eigenvalues;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

    #[test]
    fn ghz_p0_is_maximally_mixed() {
        let rho = make_state(&StateFamily::GhzClass {
            p: 0.0,
            theta: 0.3,
            theta3: 2.0,
        })
        .unwrap();
        assert!(rho.matrix().max_abs_diff(DensityMatrix::maximally_mixed(8).matrix()) < 1e-15);
    }

    #[test]
    fn ghz_p1_is_ghz_projector() {
        let rho = make_state(&StateFamily::GhzClass {
            p: 1.0,
            theta: FRAC_PI_4,
            theta3: FRAC_PI_2,
        })
        .unwrap();
        let m = rho.matrix();
        for (r, c) in [(0, 0), (0, 7), (7, 0), (7, 7)] {
            assert!((m[(r, c)].re - 0.5).abs() < 1e-15);
        }
        let off: f64 = (0..8)
            .flat_map(|r| (0..8).map(move |c| (r, c)))
            .filter(|&(r, c)| !matches!((r, c), (0, 0) | (0, 7) | (7, 0) | (7, 7)))
            .map(|(r, c)| m[(r, c)].norm())
            .sum();
        assert!(off < 1e-15);
    }

    #[test]
    fn w_is_rank_one() {
        let rho = make_state(&StateFamily::W).unwrap();
        let vals = hermitian_eigenvalues(rho.matrix()).unwrap();
        assert!((rho.matrix().trace().re - 1.0).abs() < 1e-15);
        assert!((vals[7] - 1.0).abs() < 1e-12);
        assert!(vals[..7].iter().all(|v| v.abs() < 1e-12));
    }

    #[test]
    fn invariants_are_enforced() {
        let not_unit = CMatrix::identity(2);
        assert!(matches!(
            DensityMatrix::new(not_unit),
            Err(Error::InvariantViolation(_))
        ));
        let negative = CMatrix::diagonal(&[1.5, -0.5]);
        assert!(DensityMatrix::new(negative).is_err());
        assert!(DensityMatrix::new(CMatrix::identity(3).scale(1.0 / 3.0)).is_err());
        assert!(matches!(
            make_state(&StateFamily::GhzClass {
                p: 1.5,
                theta: 0.0,
                theta3: 0.0
            }),
            Err(Error::InvalidConfig(_))
        ));
    }

    #[test]
    fn custom_file_round_trip() {
        let rho = make_state(&StateFamily::W).unwrap();
        let text = serde_json::to_string(&DensityMatrixFile::from_matrix(&rho)).unwrap();
        let back = parse_density_matrix(&text, Path::new("w.json")).unwrap();
        assert!(back.matrix().max_abs_diff(rho.matrix()) < 1e-15);
    }

    #[test]
    fn custom_file_malformed() {
        let origin = Path::new("bad.json");
        for text in [
            "not json",
            r#"{"dim": 2, "re": [[1, 0]], "im": [[0, 0], [0, 0]]}"#,
            r#"{"dim": 3, "re": [[1,0,0],[0,0,0],[0,0,0]], "im": [[0,0,0],[0,0,0],[0,0,0]]}"#,
            r#"{"dim": 2, "re": [[1, 0], [0, 0]], "im": [[0, 0], [0, 0]], "extra": 1}"#,
        ] {
            assert!(
                matches!(parse_density_matrix(text, origin), Err(Error::FileParse { .. })),
                "{text}"
            );
        }
    }

    #[test]
    fn custom_file_small_psd_violation_is_repaired() {
        let text = r#"{"dim": 2, "re": [[1.00000005, 0], [0, -0.00000005]], "im": [[0, 0], [0, 0]]}"#;
        let rho = parse_density_matrix(text, Path::new("rounded.json")).unwrap();
        let vals = hermitian_eigenvalues(rho.matrix()).unwrap();
        assert!(vals[0] >= 0.0);
        assert!((rho.matrix().trace().re - 1.0).abs() < 1e-14);

        let text = r#"{"dim": 2, "re": [[1.001, 0], [0, -0.001]], "im": [[0, 0], [0, 0]]}"#;
        assert!(matches!(
            parse_density_matrix(text, Path::new("bad.json")),
            Err(Error::InvariantViolation(_))
        ));
    }
}
