use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: [{left}] vs [{right}]")]
    RingMismatch { left: String, right: String },
    #[error("{what} index {index} out of range (valid: {valid})")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        valid: String,
    },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("arrangement is not central")]
    NonCentral,
    #[error("arrangement is not free")]
    NotFree,
    #[error("invalid arrangement: {0}")]
    InvalidArrangement(String),
    #[error("hyperplanes {first} and {second} are proportional")]
    DuplicateHyperplane { first: usize, second: usize },
    #[error("hyperplane {0} has zero linear part")]
    ZeroForm(usize),
    #[error("variable name `{0}` already in use")]
    VariableClash(String),
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
    #[error("element is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("derivation {derivation} is not logarithmic along hyperplane {hyperplane}")]
    NotLogarithmic {
        derivation: usize,
        hyperplane: usize,
    },
    #[error("flat is not in the intersection lattice: {0}")]
    FlatNotInLattice(String),
    #[error("prime {q} has bad reduction: {reason}; choose a larger prime")]
    BadReduction { q: u64, reason: String },
    #[error("size guard exceeded: {0}")]
    SizeGuard(String),
    #[error("Groebner budget exceeded: {0}")]
    Budget(String),
    #[error("hypotheses not met: {0}")]
    Hypotheses(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

impl Error {
    /// True for failures caused by malformed input rather than by the mathematics.
    pub fn is_parse(&self) -> bool {
        matches!(
            self,
            Error::Parse(_)
                | Error::DuplicateHyperplane { .. }
                | Error::ZeroForm(_)
                | Error::InvalidArrangement(_)
        )
    }
}
