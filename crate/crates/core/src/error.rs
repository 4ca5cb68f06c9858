use alloc::string::String;
use core::fmt;

/// Everything that can go wrong while building or checking a structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    InvalidField(u64),
    FieldMismatch,
    Shape { op: &'static str, left: (usize, usize), right: (usize, usize) },
    NotSquare { rows: usize, cols: usize },
    IndexOutOfRange { what: &'static str, index: usize, bound: usize },
    Parse { line: usize, message: String },
    NoAntipode,
    NoTwistedAntipode,
    Singular(&'static str),
    NotAnIdeal,
    NotCommutative,
    BudgetExceeded { needed: u128, budget: u128 },
    NoRootOfUnity { order: u64 },
    InvalidLattice(String),
    OutOfScope(String),
    Invalid(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidField(p) => write!(f, "{p} is not an admissible prime (need p < 2^61)"),
            Error::FieldMismatch => write!(f, "field mismatch"),
            Error::Shape { op, left, right } => {
                write!(f, "{op}: incompatible shapes {}x{} and {}x{}", left.0, left.1, right.0, right.1)
            }
            Error::NotSquare { rows, cols } => write!(f, "matrix is {rows}x{cols}, not square"),
            Error::IndexOutOfRange { what, index, bound } => {
                write!(f, "{what} index {index} out of range (bound {bound})")
            }
            Error::Parse { line, message } => write!(f, "line {line}: {message}"),
            Error::NoAntipode => write!(f, "no antipode"),
            Error::NoTwistedAntipode => write!(f, "no twisted antipode"),
            Error::Singular(what) => write!(f, "{what} is not invertible"),
            Error::NotAnIdeal => write!(f, "subspace is not a two-sided ideal"),
            Error::NotCommutative => write!(f, "algebra is not commutative"),
            Error::BudgetExceeded { needed, budget } => {
                write!(f, "brute force needs {needed} candidates, budget is {budget}")
            }
            Error::NoRootOfUnity { order } => write!(f, "no primitive root of unity of order {order}"),
            Error::InvalidLattice(m) => write!(f, "invalid lattice: {m}"),
            Error::OutOfScope(m) => write!(f, "out of scope: {m}"),
            Error::Invalid(m) => write!(f, "{m}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
