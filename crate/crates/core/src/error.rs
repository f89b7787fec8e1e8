use thiserror::Error;

use crate::algebra::AlgebraId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoeffError {
    #[error("elementary symmetric degree {s} exceeds variable count {n}")]
    ElemSymDegree { s: u32, n: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("unknown algebra `{0}`")]
    UnknownAlgebra(String),
    #[error("{algebra} monomials take {expected} exponents, got {got}")]
    Arity {
        algebra: AlgebraId,
        expected: usize,
        got: usize,
    },
    #[error("letter index {letter} is not in the alphabet of {algebra}")]
    UnknownLetter { algebra: AlgebraId, letter: u8 },
    #[error("algebra mismatch: {left} vs {right}")]
    Mismatch { left: AlgebraId, right: AlgebraId },
    #[error("rule {lhs} is not an out-of-order pair")]
    InOrderPair { lhs: String },
    #[error("replacement `{word}` of rule {lhs} does not decrease (length, inversions)")]
    NotTerminating { lhs: String, word: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TensorError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("tensor arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },
    #[error("tuple of length {got} in a tensor of arity {expected}")]
    TupleLength { expected: usize, got: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClosedFormError {
    #[error("{algebra} has no closed form for {left}^a {right}^b")]
    Unsupported {
        algebra: AlgebraId,
        left: char,
        right: char,
    },
    #[error("{left}{right} is already normally ordered in {algebra}")]
    InOrderPair {
        algebra: AlgebraId,
        left: char,
        right: char,
    },
    #[error("expected exponent tuples of length {expected} for {algebra}, got {got}")]
    Shape {
        algebra: AlgebraId,
        expected: usize,
        got: usize,
    },
    #[error("exponent sequence must have at least one factor")]
    Empty,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Tensor(#[from] TensorError),
    #[error("arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },
    #[error("arity must be positive")]
    ZeroArity,
    #[error("permutation sum needs {required} terms, cap is {cap}")]
    TooMuchWork { required: u128, cap: u128 },
    #[error("tensor is not invariant under slot permutations")]
    NotInvariant,
    #[error("a product needs at least one factor to fix the algebra and arity")]
    NoFactors,
    #[error("invalid work cap {value:?}: expected a positive integer")]
    InvalidCap { value: String },
    #[error(transparent)]
    ClosedForm(#[from] ClosedFormError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReprError {
    #[error("operator {op} cannot act on the {space} space")]
    Incompatible { op: String, space: &'static str },
    #[error("coefficient {coeff} is not a rational constant on the bivariate space")]
    NonConstantScalar { coeff: String },
    #[error("difference quotient is not exactly divisible")]
    NotDivisible,
    #[error("corollary vectors have different lengths")]
    LengthMismatch,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
