use alloc::string::String;
use core::fmt;

/// Errors raised by the algebra engine, the models and the oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    InhomogeneousPolynomial,
    UnknownGenerator(String),
    IndexOutOfRange { op: &'static str, index: u32, n: u32 },
    MissingActionTable { op: &'static str, index: u32, generator: String },
    UnsupportedConfig(String),
    EvenIndex(u32),
    Truncated(String),
    DepthExceeded { depth: usize, bound: usize },
    UnsupportedShape(String),
    NotInImageOfJ(u32),
    SizeLimitExceeded { size: usize, limit: usize },
    NotAComplex { degree: usize },
    NotChainMap { degree: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InhomogeneousPolynomial => write!(f, "inhomogeneous polynomial"),
            Error::UnknownGenerator(g) => write!(f, "unknown generator `{g}`"),
            Error::IndexOutOfRange { op, index, n } => {
                write!(f, "{op} index {index} out of range for n = {n}")
            }
            Error::MissingActionTable { op, index, generator } => {
                write!(f, "no rule for {op}{index} on `{generator}`")
            }
            Error::UnsupportedConfig(s) => write!(f, "unsupported configuration: {s}"),
            Error::EvenIndex(i) => write!(f, "primitive operator index {i} must be odd"),
            Error::Truncated(s) => write!(f, "model truncation reached: {s}"),
            Error::DepthExceeded { depth, bound } => {
                write!(f, "Q-word depth {depth} exceeds bound {bound}")
            }
            Error::UnsupportedShape(s) => write!(f, "unsupported shape: {s}"),
            Error::NotInImageOfJ(d) => write!(f, "degree {d} has no image-of-J record"),
            Error::SizeLimitExceeded { size, limit } => {
                write!(f, "complex has {size} generators, limit is {limit}")
            }
            Error::NotAComplex { degree } => write!(f, "d∘d ≠ 0 in degree {degree}"),
            Error::NotChainMap { degree } => {
                write!(f, "map does not commute with d in degree {degree}")
            }
        }
    }
}

impl core::error::Error for Error {}
