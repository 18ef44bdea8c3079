use thiserror::Error;

/// Errors raised by the cube-group machinery.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("invalid label `{0}`: labels must be nonempty and contain no whitespace or any of `()#:=,`")]
    InvalidLabel(String),
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("trajectories need two distinct seed labels, got `{0}` twice")]
    DistinctLabelsRequired(String),
    #[error("trajectory seeded at ({0}, {1}) is not 4-periodic")]
    NotFourPeriodic(String, String),
    #[error("decorated graph is not admissible: {0}")]
    NotAdmissible(String),
    #[error("involution for `{label}` is invalid: {reason}")]
    BadInvolution { label: String, reason: String },
    #[error("label sets differ ({left} vs {right} labels)")]
    LabelSetMismatch { left: usize, right: usize },
    #[error("rank {rank} exceeds the cap of {cap}")]
    RankCapExceeded { rank: usize, cap: usize },
    #[error("rank {0} is too small, at least 2 generators are required")]
    RankTooSmall(usize),
    #[error("closure has {found} elements, expected {expected}")]
    ClosureSizeMismatch { expected: usize, found: usize },
    #[error("Cayley graph is not a hypercube: {0}")]
    HypercubeCheckFailed(String),
    #[error("subset {{{subset}}} does not generate a standard subgroup: {reason}")]
    NotStandard { subset: String, reason: String },
    #[error("not a cube group: {0}")]
    NotACubeGroup(String),
    #[error("generator `{0}` is not an involution")]
    NotInvolution(String),
    #[error("4-cycle readings disagree for j_{label}: {detail}")]
    IllDefinedInvolution { label: String, detail: String },
    #[error("ordering {ordering} is not a product decomposition: bits {first} and {second} give the same element")]
    NotADecomposition {
        ordering: String,
        first: String,
        second: String,
    },
    #[error("orbit of {{{0}}} is transitive, cannot refine the orbit tree")]
    TransitiveOrbit(String),
    #[error("ordering must list every label exactly once: {0}")]
    BadOrdering(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("line {line}: `{label}` appears in its own involution")]
    SelfCycle { line: usize, label: String },
    #[error("line {line}: cycles are not disjoint (`{label}` repeated)")]
    NonDisjointCycles { line: usize, label: String },
}

/// Coarse classification used for process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Category {
    /// Bad input: malformed files, unknown labels, violated preconditions.
    Input,
    /// A well-formed question whose answer is "no".
    Domain,
    /// Something that a correct implementation of the theory never produces.
    Internal,
}

impl Error {
    pub fn category(&self) -> Category {
        use Error::*;
        match self {
            ClosureSizeMismatch { .. }
            | HypercubeCheckFailed(_)
            | IllDefinedInvolution { .. }
            | TransitiveOrbit(_) => Category::Internal,
            NotFourPeriodic(..)
            | NotAdmissible(_)
            | NotStandard { .. }
            | NotACubeGroup(_)
            | NotADecomposition { .. }
            | NotInvolution(_) => Category::Domain,
            _ => Category::Input,
        }
    }

    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        use Error::*;
        match self {
            UnknownLabel(_) => "UnknownLabel",
            InvalidLabel(_) => "InvalidLabel",
            DuplicateLabel(_) => "DuplicateLabel",
            DistinctLabelsRequired(_) => "DistinctLabelsRequired",
            NotFourPeriodic(..) => "NotFourPeriodic",
            NotAdmissible(_) => "NotAdmissible",
            BadInvolution { .. } => "BadInvolution",
            LabelSetMismatch { .. } => "LabelSetMismatch",
            RankCapExceeded { .. } => "RankCapExceeded",
            RankTooSmall(_) => "RankTooSmall",
            ClosureSizeMismatch { .. } => "ClosureSizeMismatch",
            HypercubeCheckFailed(_) => "HypercubeCheckFailed",
            NotStandard { .. } => "NotStandard",
            NotACubeGroup(_) => "NotACubeGroup",
            NotInvolution(_) => "NotInvolution",
            IllDefinedInvolution { .. } => "IllDefinedInvolution",
            NotADecomposition { .. } => "NotADecomposition",
            TransitiveOrbit(_) => "TransitiveOrbit",
            BadOrdering(_) => "BadOrdering",
            InvalidGraph(_) => "InvalidGraph",
            Parse { .. } => "ParseError",
            SelfCycle { .. } => "SelfCycle",
            NonDisjointCycles { .. } => "NonDisjointCycles",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
