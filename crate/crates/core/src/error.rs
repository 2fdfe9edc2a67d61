use thiserror::Error;

/// Errors produced by the arithmetic, matrix and code-analysis routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("exponent r must be at least 1")]
    InvalidExponent,
    #[error("modulus {p}^{r} exceeds 2^31")]
    ModulusTooLarge { p: u64, r: u32 },
    #[error("operands live in different rings (Z_{left} vs Z_{right})")]
    RingMismatch { left: u64, right: u64 },
    #[error("the ring Z_{0} is not a field")]
    NotAField(u64),
    #[error("{value} is not a unit in Z_{modulus}")]
    NotAUnit { value: u64, modulus: u64 },
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("constant term of the denominator is not a unit")]
    ConstantTermNotUnit,
    #[error("division by a polynomial whose leading coefficient is not a unit")]
    NonUnitLeadingCoefficient,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("determinant size {0} exceeds the supported maximum of 8")]
    DeterminantTooLarge(usize),
    #[error("minor size {size} exceeds min(rows, cols) = {max}")]
    SizeTooLarge { size: usize, max: usize },
    #[error("matrix is not left zero-prime")]
    NotLeftZeroPrime,
    #[error("projection onto Z_p has rank {rank} < {rows} over Z_p(d)")]
    RankDeficient { rank: usize, rows: usize },
    #[error("search space of {size} exceeds the limit {limit}")]
    SearchTooLarge { size: u128, limit: u128 },
    #[error("encoder projection is not full row rank (rank {rank} < {rows})")]
    NotFullRowRank { rank: usize, rows: usize },
    #[error("code is catastrophic")]
    Catastrophic,
    #[error("code is not catastrophic")]
    NotCatastrophic,
    #[error("unsupported shape: {0}")]
    UnsupportedShape(String),
    #[error("gcd of the projected row has a zero constant term")]
    NonUnitConstantGcd,
    #[error("prime mismatch: source p = {source_p}, target p = {target_p}")]
    PrimeMismatch { source_p: u64, target_p: u64 },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
