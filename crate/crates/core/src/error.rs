use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{what} must be a nonnegative integer, got {value}")]
    NegativeCount { what: &'static str, value: String },

    #[error("{what} must be integral, got {value}")]
    NotIntegral { what: &'static str, value: String },

    #[error("{what} must be positive, got {value}")]
    NotPositive { what: &'static str, value: String },

    #[error("inconsistent branch data: {0}")]
    InconsistentBranchData(String),

    #[error("resolution needs at least one intersection (got {0})")]
    NoIntersection(String),

    #[error("euler characteristic {0} is odd or exceeds 2, not that of a closed surface")]
    NotASurface(String),

    #[error("{what} mismatch: {left} vs {right}")]
    SurfaceMismatch {
        what: &'static str,
        left: String,
        right: String,
    },

    #[error("chi_h vanishes; B-M-Y ratio undefined")]
    ZeroChiH,

    #[error("undefined for zero")]
    UndefinedForZero,

    #[error("not a knot: gcd({p}, {q}) != 1")]
    NotAKnot { p: u64, q: u64 },

    #[error("torus knot parameters must be at least 2, got ({p}, {q})")]
    TorusParameters { p: u64, q: u64 },

    #[error("twist parameter must be at least 1, got {0}")]
    TwistParameter(u64),

    #[error("knot surgery needs {0}")]
    SurgeryUnavailable(&'static str),

    #[error("parameter n = {0} out of range (constructions need n >= 2)")]
    ParameterOutOfRange(String),

    #[error("no marked surface named `{0}`")]
    UnknownSurface(String),

    #[error("division of {num} by {den} is not exact")]
    InexactDivision { num: String, den: String },

    #[error("symbolic sign of {0} could not be decided")]
    UndecidedSign(String),

    #[error("{0} is symbolic; a numeric value is required")]
    NeedsNumeric(String),

    #[error("almost-complex record has non-integral chi_h = {0}")]
    NonIntegralChiH(String),
}
