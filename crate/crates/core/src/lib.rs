//! Exact-arithmetic toolkit for two-qubit and two-qutrit entangled states,
//! their correlation operators and Bell-type bounds.
//!
//! Scalars live in ℚ(√2, √3) ([`ExactScalar`]), so every identity between
//! operators, states and coefficients is checked by equality rather than
//! within a tolerance. Floats appear only in the eigensolver, entropies and
//! the measurement sampler.

pub mod correlations;
pub mod density;
pub mod errata;
pub mod error;
pub mod exactnum;
pub mod generators;
pub mod linalg;
pub mod reference;
pub mod sampler;
pub mod states;
pub mod verify;

pub use correlations::{
    chsh_operator, classify_bounds, expectation, generator_decomposition, operator_for, qutrit_operator,
    solve_projector_coefficients, BoundClass, BoundReport, CorrelationOperator, DetectorSetting,
    ProjectorDecomposition,
};
pub use density::{density_of, entropy, purity, reduce, DensityMatrix, Dims};
pub use error::{Error, Result};
pub use exactnum::{ExactComplex, ExactScalar, Radical, Rational};
pub use generators::{hs_project, CoefficientGrid, Group};
pub use linalg::{ExactMatrix, ExactVector, FloatMatrix, FloatVector, Matrix, Mode, StateVector, Subsystem};
pub use sampler::{estimate, plan_from_operator, MeasurementPlan, SampleResult};
pub use states::{state, states, Label, LabeledState, SwapSymmetry};
