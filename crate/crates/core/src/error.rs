use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("conductor must be a positive integer")]
    InvalidConductor,
    #[error("{len} coefficients given for conductor {conductor}")]
    TooManyCoefficients { conductor: u32, len: usize },
    #[error("cannot embed Q(zeta_{from}) into Q(zeta_{to})")]
    InvalidEmbedding { from: u32, to: u32 },
    #[error("division by zero in Q(zeta_{0})")]
    DivisionByZero(u32),
    #[error("{0} is not a root of unity")]
    NotRootOfUnity(String),
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("group closure exceeded {0} elements")]
    ClosureBound(usize),
    #[error("unknown representation `{rep}` for {group}")]
    UnknownRepresentation { group: String, rep: String },
    #[error("generator `{generator}` is not an H1 generator of {group}")]
    UnknownGenerator { group: String, generator: String },
    #[error("characters belong to different groups ({0} vs {1})")]
    GroupMismatch(String, String),
    #[error("missing generator word for element {0}")]
    MissingWord(usize),
    #[error("data integrity: {0}")]
    DataIntegrity(String),
    #[error("defect sum for {0} is not rational")]
    IrrationalDefect(String),
    #[error("vanishing defect denominator at a non-identity element")]
    SingularDefect,
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("fundamental cycle iteration did not terminate within {0} steps")]
    NonTermination(usize),
    #[error("cycle has no components")]
    EmptyCycle,
    #[error("speciality mask has {got} entries, expected {expected}")]
    MaskLength { got: usize, expected: usize },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
