use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("grading group needs cyclic orders >= 1")]
    InvalidGroup,
    #[error("degree {0} is not an element of the grading group")]
    InvalidDegree(String),
    #[error("ring modulus must be 0 (for Z) or >= 2, got {0}")]
    InvalidRing(i64),
    #[error("factor order {order} does not divide ring modulus {modulus}")]
    FactorOrder { order: i64, modulus: i64 },
    #[error("factor order must be 0 (for Z) or >= 2, got {0}")]
    InvalidFactorOrder(i64),
    #[error("coordinate arity mismatch: expected {expected}, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("operands belong to different modules")]
    ModuleMismatch,
    #[error("module is infinite")]
    InfiniteModule,
    #[error("enumeration bound exceeded: |M| = {size} > {bound}")]
    BoundExceeded { size: u128, bound: u64 },
    #[error("submodule must be proper")]
    NotProper,
    #[error("graded radical undetermined: {0}")]
    RadicalUnknown(String),
    #[error("radical strategies disagree: {0}")]
    StrategyMismatch(String),
    #[error("variety {kind} is not defined on a {space} space")]
    SpaceMismatch { kind: &'static str, space: &'static str },
    #[error("ring spectrum is infinite; only pointwise evaluation is available")]
    RingNotMaterializable,
    #[error("unsupported morphism: {0}")]
    UnsupportedMorphism(String),
    #[error("unknown check id {0}")]
    UnknownCheck(String),
    #[error("point is not in the space")]
    NotAPoint,
}

pub type Result<T> = core::result::Result<T, Error>;
