use core::fmt;

use alloc::string::String;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    Parse(&'static str),
    InvalidGrayMatrix(&'static str),
    /// `gcd(n, 3) != 1`; the repeated-root case is not handled.
    LengthDivisibleByThree(usize),
    NonUnitConstantTerm,
    /// Multiplier `a` with `gcd(a, n) != 1`.
    NotCoprime { a: i64, n: usize },
    FactorsNotCoprime,
    NotIdempotent(String),
    LengthMismatch { left: usize, right: usize },
    /// Enumeration would exceed the configured budget.
    BudgetExceeded { required: u128, budget: u128 },
    /// A MacWilliams transform produced a non-integral count.
    InexactDivision { weight: usize },
    DistributionSum,
    NotPrime(u64),
    NotPlusMinusOneMod12(u64),
    FastPathIneligible(&'static str),
    InvalidVariant(&'static str),
    InvalidTriple(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parse(what) => write!(f, "parse error: {what}"),
            Error::InvalidGrayMatrix(why) => write!(f, "invalid Gray matrix: {why}"),
            Error::LengthDivisibleByThree(n) => {
                write!(f, "length {n} is divisible by 3; X^n - 1 has repeated factors")
            }
            Error::NonUnitConstantTerm => f.write_str("constant term is not a unit of Z9"),
            Error::NotCoprime { a, n } => write!(f, "multiplier {a} is not coprime to {n}"),
            Error::FactorsNotCoprime => f.write_str("factors are not pairwise coprime mod 3"),
            Error::NotIdempotent(p) => write!(f, "polynomial is not idempotent: {p}"),
            Error::LengthMismatch { left, right } => {
                write!(f, "code lengths differ: {left} vs {right}")
            }
            Error::BudgetExceeded { required, budget } => write!(
                f,
                "enumeration needs {required} steps, budget is {budget}; raise the budget explicitly"
            ),
            Error::InexactDivision { weight } => {
                write!(f, "MacWilliams transform is not integral at weight {weight}")
            }
            Error::DistributionSum => f.write_str("distribution does not sum to the stated cardinality"),
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::NotPlusMinusOneMod12(p) => write!(f, "{p} is not congruent to +-1 mod 12"),
            Error::FastPathIneligible(why) => {
                write!(f, "fast path not applicable ({why}); use the pair sweep")
            }
            Error::InvalidVariant(why) => write!(f, "invalid extension variant: {why}"),
            Error::InvalidTriple(why) => write!(f, "invalid divisor triple: {why}"),
        }
    }
}

impl core::error::Error for Error {}
