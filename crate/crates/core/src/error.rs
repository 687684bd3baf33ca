use core::fmt;

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An antenna count was zero.
    ZeroAntennas,
    /// The direct-link exponent of user 1 must be exactly one.
    DirectExponentNotOne(Rational),
    /// An SNR/INR exponent was negative.
    NegativeExponent(Rational),
    /// The half-space system is unbounded inside the nonnegative orthant.
    Unbounded,
    /// The operation needs a nonempty region.
    EmptyRegion,
    /// Half-spaces of different dimension were mixed.
    DimensionMismatch { expected: usize, found: usize },
    /// A named curve's parameters are outside its domain.
    InvalidCurveParams(&'static str),
    UnknownCurve,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroAntennas => f.write_str("antenna counts must be at least 1"),
            Error::DirectExponentNotOne(a) => write!(f, "a11 must equal 1, got {a}"),
            Error::NegativeExponent(a) => write!(f, "exponents must be nonnegative, got {a}"),
            Error::Unbounded => f.write_str("half-space system is unbounded"),
            Error::EmptyRegion => f.write_str("region is empty"),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "expected {expected} coefficients, found {found}")
            }
            Error::InvalidCurveParams(why) => write!(f, "invalid curve parameters: {why}"),
            Error::UnknownCurve => f.write_str("unknown curve name"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T, E = Error> = core::result::Result<T, E>;
