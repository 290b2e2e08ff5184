//! Exact rational scalars for monomial matrix weights.

use std::fmt;
use std::ops::{Mul, Neg};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// An exact rational number, always kept in lowest terms with a positive
/// denominator.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Scalar(BigRational);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseScalarError(pub String);

impl fmt::Display for ParseScalarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid scalar: {}", self.0)
    }
}

impl std::error::Error for ParseScalarError {}

impl Scalar {
    pub fn zero() -> Self {
        Scalar(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar(BigRational::one())
    }

    pub fn from_integer(v: i64) -> Self {
        Scalar(BigRational::from_integer(BigInt::from(v)))
    }

    /// `numer / denom`. Panics if `denom` is zero.
    pub fn ratio(numer: i64, denom: i64) -> Self {
        Scalar(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        Scalar(r)
    }
}

impl From<i64> for Scalar {
    fn from(v: i64) -> Self {
        Scalar::from_integer(v)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;

    fn mul(self, rhs: &Scalar) -> Scalar {
        Scalar(&self.0 * &rhs.0)
    }
}

impl Mul for Scalar {
    type Output = Scalar;

    fn mul(self, rhs: Scalar) -> Scalar {
        Scalar(self.0 * rhs.0)
    }
}

impl Neg for Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        Scalar(-self.0)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

fn parse_integer(s: &str, whole: &str) -> Result<BigInt, ParseScalarError> {
    let digits = s.strip_prefix(['+', '-']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ParseScalarError(whole.to_string()));
    }
    BigInt::from_str(s.strip_prefix('+').unwrap_or(s))
        .map_err(|_| ParseScalarError(whole.to_string()))
}

/// Accepts integers (`-3`), decimals (`2.5`, `-.25`, `4.`) and fractions
/// (`7/2`, `-1/3`).
impl FromStr for Scalar {
    type Err = ParseScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ParseScalarError(s.to_string());
        if let Some((num, den)) = s.split_once('/') {
            let num = parse_integer(num, s)?;
            let den = parse_integer(den, s)?;
            if den.is_zero() {
                return Err(bad());
            }
            return Ok(Scalar(BigRational::new(num, den)));
        }
        if let Some((int_part, frac_part)) = s.split_once('.') {
            let (negative, int_digits) = match int_part.as_bytes().first() {
                Some(b'-') => (true, &int_part[1..]),
                Some(b'+') => (false, &int_part[1..]),
                _ => (false, int_part),
            };
            if int_digits.is_empty() && frac_part.is_empty() {
                return Err(bad());
            }
            let all_digits = |t: &str| t.bytes().all(|b| b.is_ascii_digit());
            if !all_digits(int_digits) || !all_digits(frac_part) {
                return Err(bad());
            }
            let mantissa = format!("{int_digits}{frac_part}");
            let mut value = BigInt::from_str(if mantissa.is_empty() { "0" } else { &mantissa })
                .map_err(|_| bad())?;
            if negative {
                value = -value;
            }
            let scale = num_traits::pow(BigInt::from(10), frac_part.len());
            return Ok(Scalar(BigRational::new(value, scale)));
        }
        Ok(Scalar(BigRational::from_integer(parse_integer(s, s)?)))
    }
}
