use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic {0} is not prime")]
    NonPrimeCharacteristic(u32),
    #[error("modulus {0} is reducible over the prime field")]
    ReducibleModulus(String),
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("unsupported field size {p}^{m}")]
    UnsupportedSize { p: u32, m: u32 },
    #[error("operands belong to different fields")]
    SpecMismatch,
    #[error("division by zero")]
    DivisionByZero,

    #[error("invalid group order: {0}")]
    InvalidOrder(String),
    #[error("group of order {0} is too large to tabulate")]
    GroupTooLarge(usize),
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("relator {0} does not evaluate to the identity")]
    RelatorNotSatisfied(String),
    #[error("word {word} does not evaluate to element {element}")]
    WordMismatch { element: usize, word: String },
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),

    #[error("operands belong to different group algebras")]
    ContextMismatch,
    #[error("elements {0:?} do not form a subgroup")]
    NotASubgroup(Vec<usize>),

    #[error("derivation has not been validated")]
    NotValidated,
    #[error("map does not extend to a derivation; nonzero residuals on {0:?}")]
    NotADerivation(Vec<String>),
    #[error("group is not abelian")]
    NotAbelian,
    #[error("unsupported group: {0}")]
    UnsupportedGroup(String),
    #[error("bad parameters: {0}")]
    BadParameters(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("enumeration of {messages} messages exceeds the bound {bound}")]
    TooLarge { messages: u128, bound: u128 },
    #[error("bad permutation: {0}")]
    BadPermutation(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}
