//! Generalized m-Hadamard spectra of Boolean functions, m-Forrelation and the
//! quantum circuits that sample them, simulated on a dense state vector.
//!
//! Vectors in `F_2^n` are `usize` values; `x1` is the most significant of the
//! `n` low bits. Qubit 0 is likewise the most significant bit of a basis index.

pub mod boolfun;
pub mod circuits;
pub mod error;
pub mod forrelation;
pub mod gf2;
pub mod qsim;
pub mod spectra;

pub use boolfun::{AffineTransform, BitMatrix, BooleanFunction, PointSet};
pub use circuits::{DJPlan, SamplerPrep, ShiftInterpretation, ShiftSolutionSet};
pub use error::{Error, Result};
pub use forrelation::{forrelation_k, m_forrelation3, ForrelationValue, SamplingCurves, SamplingReport};
pub use qsim::{Gate1Q, GateName, MeasurementDistribution, Op, StateVector};
pub use spectra::{m_hadamard, PhaseOrder, Spectrum, SpectrumKind};
