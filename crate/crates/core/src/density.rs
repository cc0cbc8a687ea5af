//! Density matrices of the constructed states, their reductions, purity and
//! von Neumann entropy.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{ExactComplex, ExactScalar};
use crate::linalg::{eig_hermitian, outer, ExactMatrix, ExactVector, Subsystem};
use crate::states::{state, Label};

/// Eigenvalues below this are treated as negative rather than round-off.
pub const PSD_TOLERANCE: f64 = 1e-10;

/// Tensor structure of the space a density matrix acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Dims {
    Single(usize),
    Bipartite(usize, usize),
}

impl Dims {
    pub fn total(self) -> usize {
        match self {
            Dims::Single(d) => d,
            Dims::Bipartite(a, b) => a * b,
        }
    }

    /// Two-qubit or two-qutrit spaces for dimensions 4 and 9, otherwise a
    /// single system.
    pub fn infer(n: usize) -> Self {
        match n {
            4 => Dims::Bipartite(2, 2),
            9 => Dims::Bipartite(3, 3),
            d => Dims::Single(d),
        }
    }
}

/// A Hermitian, unit-trace operator.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    matrix: ExactMatrix,
    dims: Dims,
}

impl DensityMatrix {
    /// Checks Hermiticity and unit trace exactly, and positivity on the
    /// float path.
    pub fn new(matrix: ExactMatrix, dims: Dims) -> Result<Self> {
        if !matrix.is_square() || matrix.rows() != dims.total() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix for a space of dimension {}",
                matrix.rows(),
                matrix.cols(),
                dims.total()
            )));
        }
        if !matrix.is_hermitian() {
            return Err(Error::NotHermitian(matrix.to_float().hermitian_deviation()));
        }
        if matrix.trace() != ExactComplex::one() {
            return Err(Error::NotNormalized);
        }
        let rho = Self { matrix, dims };
        if let Some(&w) = rho.eigenvalues()?.last() {
            if w < -PSD_TOLERANCE {
                return Err(Error::NegativeEigenvalue(w));
            }
        }
        Ok(rho)
    }

    pub fn matrix(&self) -> &ExactMatrix {
        &self.matrix
    }

    pub fn dims(&self) -> Dims {
        self.dims
    }

    /// Float eigenvalues, descending.
    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        Ok(eig_hermitian(&self.matrix.to_float())?.values)
    }
}

/// `|s⟩⟨s|` for a normalized state.
pub fn density_of(s: &ExactVector) -> Result<DensityMatrix> {
    density_with_dims(s, Dims::infer(s.dim()))
}

pub fn density_with_dims(s: &ExactVector, dims: Dims) -> Result<DensityMatrix> {
    if !s.is_normalized() {
        return Err(Error::NotNormalized);
    }
    DensityMatrix::new(outer(s, s), dims)
}

/// Partial trace keeping subsystem `keep`.
pub fn reduce(rho: &DensityMatrix, keep: Subsystem) -> Result<DensityMatrix> {
    let Dims::Bipartite(da, db) = rho.dims else {
        return Err(Error::DimensionMismatch("cannot reduce a single-system state".into()));
    };
    let reduced = rho.matrix.partial_trace(keep, (da, db))?;
    let d = match keep {
        Subsystem::A => da,
        Subsystem::B => db,
    };
    DensityMatrix::new(reduced, Dims::Single(d))
}

/// `Tr ρ²`, exactly.
pub fn purity(rho: &DensityMatrix) -> ExactScalar {
    rho.matrix.matmul(&rho.matrix).expect("square").trace().re
}

/// `−Σ wᵢ log₂ wᵢ` over the float spectrum, with `0·log 0 = 0`.
pub fn entropy(rho: &DensityMatrix) -> Result<f64> {
    let mut s = 0.0;
    for w in rho.eigenvalues()? {
        if w < -PSD_TOLERANCE {
            return Err(Error::NegativeEigenvalue(w));
        }
        if w > 0.0 {
            s -= w * w.log2();
        }
    }
    Ok(s)
}

/// Reduced-state summary of one labeled state.
#[derive(Debug, Clone)]
pub struct ReducedSummary {
    pub label: Label,
    pub reduced_a: DensityMatrix,
    pub reduced_b: DensityMatrix,
    pub purity: ExactScalar,
    pub entropy: f64,
}

pub fn reduced_summary(label: Label) -> Result<ReducedSummary> {
    let rho = density_of(&state(label).vector)?;
    let reduced_a = reduce(&rho, Subsystem::A)?;
    let reduced_b = reduce(&rho, Subsystem::B)?;
    Ok(ReducedSummary {
        label,
        purity: purity(&reduced_a),
        entropy: entropy(&reduced_a)?,
        reduced_a,
        reduced_b,
    })
}
