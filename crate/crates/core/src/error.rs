use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("generators have mismatched degrees ({0} vs {1})")]
    DegreeMismatch(usize, usize),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("element is not a member of the group")]
    NotMember,
    #[error("not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("group of order {order} exceeds the enumeration limit {limit}")]
    TooLarge { order: u64, limit: u64 },
    #[error("{0} does not divide the group order")]
    NotDivisor(u64),
    #[error("invalid group spec `{0}`: {1}")]
    Spec(String, String),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("unsupported parameters: {0}")]
    Unsupported(String),
    #[error("invalid prime set: {0}")]
    PrimeSet(String),
    #[error("class functions belong to different groups")]
    GroupMismatch,
    #[error("character table computation failed: {0}")]
    Table(String),
    #[error("p-subgroup poset cap exceeded: |G|_p = {sylow} > {cap}")]
    PosetCap { sylow: u64, cap: u64 },
    #[error("decomposition data rejected: {0}")]
    Decomposition(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("config error: {0}")]
    Config(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
