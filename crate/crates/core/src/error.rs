use core::fmt;

/// Failure modes shared by every stage of the solver.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Error {
    /// The operation needs a nonzero polynomial.
    ZeroPoly,
    /// The operation needs a polynomial of positive degree.
    ConstantPoly,
    /// Both polynomials are constant in the elimination variable, or the
    /// degree ordering required by the subresultant sequence does not hold.
    BadVar,
    /// Root isolation was given a polynomial with a repeated factor.
    NotSquarefree,
    /// The two input polynomials share a nonconstant factor, so the solution
    /// set is infinite.
    NotCoprime,
}

impl Error {
    /// Stable upper-case code used in reports and CLI messages.
    pub fn code(self) -> &'static str {
        match self {
            Error::ZeroPoly => "ZERO_POLY",
            Error::ConstantPoly => "CONSTANT_POLY",
            Error::BadVar => "BAD_VAR",
            Error::NotSquarefree => "NOT_SQUAREFREE",
            Error::NotCoprime => "NOT_COPRIME",
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let msg = match self {
            Error::ZeroPoly => "polynomial is identically zero",
            Error::ConstantPoly => "polynomial is constant",
            Error::BadVar => "polynomials are not of positive degree in the elimination variable",
            Error::NotSquarefree => "polynomial is not square-free",
            Error::NotCoprime => "polynomials share a nonconstant factor (infinitely many solutions)",
        };
        write!(f, "{}: {}", self.code(), msg)
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
