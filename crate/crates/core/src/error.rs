use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LdpError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("weight {weight} at byte {offset} is below 2")]
    WeightTooSmall { offset: usize, weight: u64 },
    #[error("star at byte {offset} has {count} branches, expected 3")]
    BadBranchCount { offset: usize, count: usize },
    #[error("graph is not a chain or a three-branch star")]
    BadShape,
    #[error("intersection matrix is not negative definite")]
    NotNegativeDefinite,
    #[error("family {family}: parameter {param} = {value} out of range")]
    ParamOutOfRange { family: u8, param: char, value: i64 },
    #[error("unknown family {0}")]
    UnknownFamily(u8),
    #[error("incidence vector has length {got}, graph has {expected} vertices")]
    IndexMismatch { expected: usize, got: usize },
    #[error("no closed-form display matches this configuration")]
    UnsupportedConfiguration,
    #[error("incidence vector is zero")]
    ZeroIncidence,
    #[error("every component is Du Val")]
    AllDuVal,
    #[error("class cannot be decomposed uniquely over the declared support")]
    AmbiguousSupport,
    #[error("class is not integral")]
    NonIntegralClass,
    #[error("divisor is orthogonal to the ray")]
    RayOrthogonal,
    #[error("unknown curve {0}")]
    UnknownCurve(String),
    #[error("unknown preset {0}")]
    UnknownPreset(String),
    #[error("classes live on different lattices")]
    BasisMismatch,
    #[error("characteristic {0} is not supported")]
    BadCharacteristic(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("parameter does not give a singular member")]
    NotSingularMember,
    #[error("member has {0} singular points")]
    MultipleSingularPoints(String),
    #[error("singular point is not a double point")]
    DegenerateSingularity,
    #[error("input is zero")]
    ZeroInput,
}

pub type Result<T> = std::result::Result<T, LdpError>;
