use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("invalid scalar: {0}")]
    InvalidScalar(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("duplicate {kind} `{name}`")]
    Duplicate { kind: &'static str, name: String },
    #[error("paths do not compose: {0}")]
    Composition(String),
    #[error("relation {index}: terms are not parallel ({detail})")]
    NonParallelRelation { index: usize, detail: String },
    #[error("relation {index}: term `{term}` has length {len} < 2")]
    ShortRelationTerm { index: usize, term: String, len: usize },
    #[error("relation {index} is zero")]
    ZeroRelation { index: usize },
    #[error("no nilpotency degree N <= {cap} found: ideal not verifiably admissible")]
    NotAdmissible { cap: usize },
    #[error("path enumeration exceeded {0} paths")]
    TooManyPaths(usize),
    #[error("unsupported configuration: {0}")]
    Unsupported(String),
    #[error("path is zero in the algebra: {0}")]
    ZeroPath(String),
    #[error("point is not in V_p: {0}")]
    NotInVariety(String),
    #[error("enumeration over an infinite field")]
    InfiniteField,
    #[error("{what} exceeds cap ({value} > {cap})")]
    CapExceeded { what: &'static str, value: usize, cap: usize },
    #[error("relation violated: {0}")]
    RelationViolated(String),
    #[error("not uniserial: {0}")]
    NotUniserial(String),
    #[error("module is projective")]
    Projective,
    #[error("module is decomposable")]
    Decomposable,
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("construction hypotheses unmet: {0}")]
    Hypotheses(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("{0}")]
    Parse(String),
}
