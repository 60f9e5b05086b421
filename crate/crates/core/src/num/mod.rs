//! Coefficient arithmetic.
//!
//! Everything in the crate is written against three small traits:
//!
//! * [`Ring`]: exact ring operations plus embedding of the rationals.
//! * [`Field`]: adds division and a leading value used for pivoting.
//! * [`Real`]: adds the elementary transcendental functions.
//!
//! Implementations cover exact rationals, multivariate polynomials over the
//! rationals ([`Poly`]), truncated power series in one parameter ([`Jet`]),
//! forward-mode dual numbers ([`Dual`]), truncated multivariate Taylor
//! expansions ([`MultiJet`]) and plain `f64`.

mod dual;
mod jet;
mod multijet;
mod poly;
mod scalar;
pub(crate) mod series;

pub use dual::Dual;
pub use jet::{Jet, DEFAULT_JET_ORDER, MAX_JET_ORDER};
pub use multijet::MultiJet;
pub use poly::{Monomial, Poly};
pub use scalar::Scalar;
pub use series::{cosh_minus_one_over, one_minus_cos_over, sin_over, sinh_over, tan_over, tanh_over};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Exact rational numbers.
pub type Rational = num_rational::BigRational;

/// Shorthand for the rational `n/d`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Lossy conversion used for diagnostics and float comparisons.
pub fn rational_to_f64(q: &Rational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

/// Parses `-3`, `2/7` or `0.125` exactly.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if s.contains('/') {
        return s.parse().ok();
    }
    let (sign, body) = match s.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, s.strip_prefix('+').unwrap_or(s)),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    if int.is_empty() && frac.is_empty() || !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits: BigInt = format!("{int}{frac}0").parse().ok()?;
    let denom = BigInt::from(10).pow(frac.len() as u32 + 1);
    Some(Rational::new(digits * sign, denom))
}

/// Exact conversion of a finite double to a rational.
pub fn rational_from_f64(x: f64) -> Option<Rational> {
    Rational::from_float(x)
}

pub trait Ring:
    Clone
    + Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_rational(q: &Rational) -> Self;
    fn is_zero(&self) -> bool;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(BigInt::from(n)))
    }

    fn scale_i64(&self, n: i64) -> Self {
        self.clone() * Self::from_i64(n)
    }

    fn square(&self) -> Self {
        self.clone() * self.clone()
    }

    fn powi(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = acc * self.clone();
        }
        acc
    }
}

pub trait Field: Ring + Div<Output = Self> {
    /// Leading (constant, real) part as a double. Used for pivot selection
    /// and for domain guards; never for exact comparisons.
    fn lead(&self) -> f64;

    fn magnitude(&self) -> f64 {
        self.lead().abs()
    }

    fn recip(&self) -> Self {
        Self::one() / self.clone()
    }
}

pub trait Real: Field {
    fn sin(&self) -> Self;
    fn cos(&self) -> Self;
    fn sinh(&self) -> Self;
    fn cosh(&self) -> Self;

    fn tan(&self) -> Self {
        self.sin() / self.cos()
    }

    fn tanh(&self) -> Self {
        self.sinh() / self.cosh()
    }
}

impl Ring for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_rational(q: &Rational) -> Self {
        rational_to_f64(q)
    }
    fn from_i64(n: i64) -> Self {
        n as f64
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
}

impl Field for f64 {
    fn lead(&self) -> f64 {
        *self
    }
}

impl Real for f64 {
    fn sin(&self) -> Self {
        f64::sin(*self)
    }
    fn cos(&self) -> Self {
        f64::cos(*self)
    }
    fn sinh(&self) -> Self {
        f64::sinh(*self)
    }
    fn cosh(&self) -> Self {
        f64::cosh(*self)
    }
    fn tan(&self) -> Self {
        f64::tan(*self)
    }
    fn tanh(&self) -> Self {
        f64::tanh(*self)
    }
}

impl Ring for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
}

impl Field for Rational {
    fn lead(&self) -> f64 {
        rational_to_f64(self)
    }
    fn magnitude(&self) -> f64 {
        rational_to_f64(&self.abs())
    }
}

/// Transcendental functions of a rational are exact only at zero. The exact
/// series routines only ever evaluate them on the constant term of a jet in
/// the deformation parameter, which is zero there; any other argument panics.
impl Real for Rational {
    fn sin(&self) -> Self {
        exact_at_zero(self, "sin", Zero::zero())
    }
    fn cos(&self) -> Self {
        exact_at_zero(self, "cos", One::one())
    }
    fn sinh(&self) -> Self {
        exact_at_zero(self, "sinh", Zero::zero())
    }
    fn cosh(&self) -> Self {
        exact_at_zero(self, "cosh", One::one())
    }
}

fn exact_at_zero(q: &Rational, name: &str, value: Rational) -> Rational {
    assert!(
        Zero::is_zero(q),
        "{name}({q}) has no exact rational value; exact evaluation requires a zero argument"
    );
    value
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_literals() {
        assert_eq!(parse_rational("0.125"), Some(rat(1, 8)));
        assert_eq!(parse_rational("-2/6"), Some(rat(-1, 3)));
        assert_eq!(parse_rational("-.5"), Some(rat(-1, 2)));
        assert_eq!(parse_rational("3"), Some(rat(3, 1)));
        assert_eq!(parse_rational("1e3"), None);
        assert_eq!(parse_rational("."), None);
    }
}
