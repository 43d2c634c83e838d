use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("associativity fails on generators ({i}, {j}, {k}): (e{i}e{j})e{k} = {left:?} but e{i}(e{j}e{k}) = {right:?}")]
    AssociativityViolation {
        i: usize,
        j: usize,
        k: usize,
        left: Vec<u32>,
        right: Vec<u32>,
    },
    #[error("shape error: {0}")]
    Shape(String),
    #[error("coefficient {value} at tensor entry ({i}, {j}) position {t} is outside [0, {modulus})")]
    Range {
        i: usize,
        j: usize,
        t: usize,
        value: u32,
        modulus: u32,
    },
    #[error("product e{i}e{j} is not compatible with the additive orders of e{i} and e{j}")]
    IllDefinedProduct { i: usize, j: usize },
    #[error("order {order} exceeds the cap {cap}")]
    OrderCapExceeded { order: usize, cap: usize },
    #[error("size {size} exceeds the cap {cap}")]
    SizeCapExceeded { size: usize, cap: usize },
    #[error("element or set does not belong to this ring")]
    ElementRingMismatch,
    #[error("vertex {0} is not a vertex of the graph")]
    XNotSubsetOfVertices(usize),
    #[error("subgroup is not contained in the ambient set")]
    NNotSubgroupOfK,
    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),
    #[error("duplicate catalog name {0:?}")]
    DuplicateName(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid selector {0:?}")]
    Selector(String),
    #[error("{0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
