use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoreError {
    #[error("malformed rational: {0:?}")]
    MalformedRational(String),

    #[error("shape mismatch: {what} expected {expected:?}, found {found:?}")]
    ShapeMismatch { what: String, expected: (usize, usize), found: (usize, usize) },

    #[error("missing field: {0}")]
    MissingField(String),

    #[error("invalid json: {0}")]
    InvalidJson(String),

    #[error("invalid dimension vector: {0}")]
    InvalidDims(String),

    #[error("not a gauge transformation")]
    NotGauge,

    #[error("not a representation: relation {0} fails")]
    NotARepresentation(&'static str),

    #[error("criterion only valid in chamber Δ")]
    OutsideChamber,

    #[error("quotient undefined: F is not injective")]
    QuotientUndefined,

    #[error("requires a Δ-stable representation")]
    RequiresStability,

    #[error("Vandermonde hypothesis violated: {0}")]
    VandermondeHypothesis(String),

    #[error("A' and B' do not commute")]
    NonCommuting,

    #[error("oracle budget exceeded: {0}")]
    OracleBudget(String),

    #[error("not a complex: {0}")]
    NotAComplex(String),

    #[error("not a chain map: {0}")]
    NotAChainMap(String),

    #[error("unsupported: {0}")]
    Unsupported(String),
}

impl CoreError {
    /// Stable machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            CoreError::MalformedRational(_) => "malformed_rational",
            CoreError::ShapeMismatch { .. } => "shape_mismatch",
            CoreError::MissingField(_) => "missing_field",
            CoreError::InvalidJson(_) => "invalid_json",
            CoreError::InvalidDims(_) => "invalid_dims",
            CoreError::NotGauge => "not_gauge",
            CoreError::NotARepresentation(_) => "not_a_representation",
            CoreError::OutsideChamber => "outside_chamber",
            CoreError::QuotientUndefined => "quotient_undefined",
            CoreError::RequiresStability => "requires_stability",
            CoreError::VandermondeHypothesis(_) => "vandermonde_hypothesis",
            CoreError::NonCommuting => "non_commuting",
            CoreError::OracleBudget(_) => "oracle_budget",
            CoreError::NotAComplex(_) => "not_a_complex",
            CoreError::NotAChainMap(_) => "not_a_chain_map",
            CoreError::Unsupported(_) => "unsupported",
        }
    }
}

pub type Result<T, E = CoreError> = std::result::Result<T, E>;
