use thiserror::Error;

/// Errors raised by the library. Each variant maps to a stable category
/// string (see [`Error::category`]) that the command-line front end reports.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("truth table has {got} bits, expected {expected}")]
    SizeMismatch { expected: usize, got: usize },

    #[error("arity {0} outside the supported range 1..={max}", max = crate::boolfun::MAX_ARITY)]
    UnsupportedArity(usize),

    #[error("arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },

    #[error("variable x{var} out of range for n = {n}")]
    VariableOutOfRange { var: usize, n: usize },

    #[error("malformed {what}: {token:?}")]
    Parse { what: &'static str, token: String },

    #[error("phase order must be at least 1, got {0}")]
    InvalidPhaseOrder(u32),

    #[error("length {0} is not a power of two")]
    NotPowerOfTwo(usize),

    #[error("function is not bent: |W({index})| = {magnitude}")]
    NotBent { index: usize, magnitude: f64 },

    #[error("spectrum does not invert to a Boolean function: value {value} at index {index}")]
    ReconstructionNotBoolean { index: usize, value: String },

    #[error("spectrum kind {0} cannot be used here")]
    WrongSpectrumKind(&'static str),

    #[error("qubit {qubit} out of range for a {q}-qubit register")]
    QubitOutOfRange { qubit: usize, q: usize },

    #[error("qubit {0} listed more than once")]
    DuplicateQubit(usize),

    #[error("register size mismatch: expected {expected} qubits, got {got}")]
    RegisterMismatch { expected: usize, got: usize },

    #[error("register of {0} qubits exceeds the simulator limit")]
    RegisterTooLarge(usize),

    #[error("branch subprogram touches its control qubit {0}")]
    BranchTouchesControl(usize),

    #[error("register is not in the all-zero state (probability {0})")]
    NotZeroState(f64),

    #[error("dicke weight {k} exceeds register size {n}")]
    InvalidDickeWeight { k: usize, n: usize },

    #[error("shift system is inconsistent: no shift satisfies the observed samples")]
    InconsistentSystem,

    #[error("{0}")]
    Invalid(String),
}

impl Error {
    pub fn category(&self) -> &'static str {
        match self {
            Error::SizeMismatch { .. } => "size",
            Error::UnsupportedArity(_) => "arity",
            Error::ArityMismatch { .. } => "arity_mismatch",
            Error::VariableOutOfRange { .. } => "variable_out_of_range",
            Error::Parse { .. } => "parse",
            Error::InvalidPhaseOrder(_) => "phase_order",
            Error::NotPowerOfTwo(_) => "not_power_of_two",
            Error::NotBent { .. } => "not_bent",
            Error::ReconstructionNotBoolean { .. } => "reconstruction_not_boolean",
            Error::WrongSpectrumKind(_) => "spectrum_kind",
            Error::QubitOutOfRange { .. } => "qubit_out_of_range",
            Error::DuplicateQubit(_) => "duplicate_qubit",
            Error::RegisterMismatch { .. } => "register_mismatch",
            Error::RegisterTooLarge(_) => "register_too_large",
            Error::BranchTouchesControl(_) => "branch_touches_control",
            Error::NotZeroState(_) => "not_zero_state",
            Error::InvalidDickeWeight { .. } => "dicke_weight",
            Error::InconsistentSystem => "inconsistent_system",
            Error::Invalid(_) => "invalid",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
