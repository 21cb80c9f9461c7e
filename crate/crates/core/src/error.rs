use thiserror::Error;

/// Every failure mode of the core engines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operation is undefined on the zero scheme")]
    ZeroScheme,
    #[error("scale factor must be non-zero")]
    ZeroScale,
    #[error("dilation must be non-zero")]
    ZeroDilation,
    #[error("step h must be non-zero")]
    ZeroStep,
    #[error("input must be non-zero")]
    ZeroInput,
    #[error("skew factor may be zero only when the skew-symmetrizer vanishes")]
    ZeroSkewFactor,
    #[error("nodes must be pairwise distinct")]
    DuplicateNodes,
    #[error("expected {expected} nodes for order {order}, got {got}")]
    WrongNodeCount {
        expected: usize,
        got: usize,
        order: usize,
    },
    #[error("symmetric pairs must be positive and distinct")]
    InvalidPairs,
    #[error("linear system is underdetermined ({unknowns} unknowns, rank {rank})")]
    UnderdeterminedSystem { unknowns: usize, rank: usize },
    #[error("linear system is inconsistent")]
    InconsistentSystem,
    #[error("a zero node is incompatible with odd order {0}")]
    ZeroNodeParityError(usize),
    #[error("q must differ from 0, 1 and -1 (got {0})")]
    InvalidQ(String),
    #[error("invalid order: {0}")]
    InvalidOrder(String),
    #[error("index {i} out of range for n = {n}")]
    IndexOutOfRange { n: usize, i: usize },
    #[error("scheme is not normalized (normalizer {0})")]
    NotNormalized(String),
    #[error("scheme is not symmetric for order {0}")]
    NotSymmetric(usize),
    #[error("set members have different orders")]
    MixedOrders,
    #[error("set is empty")]
    EmptySet,
    #[error("chain is missing order {0}")]
    MissingOrder(usize),
    #[error("chain lists order {0} more than once")]
    DuplicateOrder(usize),
    #[error("chain entry for order {declared} has detected order {detected}")]
    DeclaredOrderMismatch { declared: usize, detected: usize },
    #[error("invalid chain: {0}")]
    InvalidChain(String),
    #[error("{0} has a prime factor above the trial-division bound")]
    FactorizationBoundExceeded(String),
    #[error("parse error: {0}")]
    Parse(String),
    /// An identity that must hold by construction failed to verify.
    #[error("internal identity check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
