use super::{rational_to_f64, Jet, Poly, Rational, Ring};
use crate::error::{Error, Result};
use std::fmt;

/// Dynamically tagged coefficient, for callers that mix exact and numeric
/// values at runtime. Rationals promote into every other mode; a polynomial
/// meets a jet only if it involves nothing but the jet's variable, and meets
/// a float only if it is constant. Any other mix is rejected.
#[derive(Clone, Debug, PartialEq)]
pub enum Scalar {
    ExactRational(Rational),
    Polynomial(Poly),
    Jet { var: String, jet: Jet<Rational> },
    Float64(f64),
}

impl Scalar {
    pub fn mode(&self) -> &'static str {
        match self {
            Scalar::ExactRational(_) => "rational",
            Scalar::Polynomial(_) => "polynomial",
            Scalar::Jet { .. } => "jet",
            Scalar::Float64(_) => "float64",
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::ExactRational(q) => Ring::is_zero(q),
            Scalar::Polynomial(p) => p.is_zero(),
            Scalar::Jet { jet, .. } => jet.is_zero(),
            Scalar::Float64(x) => *x == 0.0,
        }
    }

    fn incompatible(a: &Scalar, b: &Scalar) -> Error {
        Error::IncompatibleScalars {
            left: a.describe(),
            right: b.describe(),
        }
    }

    fn describe(&self) -> String {
        match self {
            Scalar::Jet { var, .. } => format!("jet in {var}"),
            other => other.mode().to_string(),
        }
    }

    /// Bring both operands into a common mode.
    fn unify(a: &Scalar, b: &Scalar) -> Result<(Scalar, Scalar)> {
        use Scalar::*;
        let pair = match (a, b) {
            (ExactRational(_), ExactRational(_))
            | (Polynomial(_), Polynomial(_))
            | (Float64(_), Float64(_)) => (a.clone(), b.clone()),
            (Jet { var: v1, .. }, Jet { var: v2, .. }) => {
                if v1 != v2 {
                    return Err(Self::incompatible(a, b));
                }
                (a.clone(), b.clone())
            }
            (ExactRational(q), _) => (b.lift(q), b.clone()),
            (_, ExactRational(q)) => (a.clone(), a.lift(q)),
            (Polynomial(p), Jet { var, jet }) => {
                let converted = poly_to_jet(p, var, jet).ok_or_else(|| Self::incompatible(a, b))?;
                (converted, b.clone())
            }
            (Jet { var, jet }, Polynomial(p)) => {
                let converted = poly_to_jet(p, var, jet).ok_or_else(|| Self::incompatible(a, b))?;
                (a.clone(), converted)
            }
            (Polynomial(p), Float64(_)) => match p.as_constant() {
                Some(q) => (Float64(rational_to_f64(&q)), b.clone()),
                None => return Err(Self::incompatible(a, b)),
            },
            (Float64(_), Polynomial(p)) => match p.as_constant() {
                Some(q) => (a.clone(), Float64(rational_to_f64(&q))),
                None => return Err(Self::incompatible(a, b)),
            },
            _ => return Err(Self::incompatible(a, b)),
        };
        Ok(pair)
    }

    /// The rational `q` expressed in this value's mode.
    fn lift(&self, q: &Rational) -> Scalar {
        match self {
            Scalar::ExactRational(_) => Scalar::ExactRational(q.clone()),
            Scalar::Polynomial(_) => Scalar::Polynomial(Poly::constant(q.clone())),
            Scalar::Jet { var, .. } => Scalar::Jet {
                var: var.clone(),
                jet: Jet::constant(q.clone()),
            },
            Scalar::Float64(_) => Scalar::Float64(rational_to_f64(q)),
        }
    }

    fn combine(
        &self,
        other: &Scalar,
        rat: impl Fn(Rational, Rational) -> Rational,
        poly: impl Fn(Poly, Poly) -> Poly,
        jet: impl Fn(Jet<Rational>, Jet<Rational>) -> Jet<Rational>,
        float: impl Fn(f64, f64) -> f64,
    ) -> Result<Scalar> {
        use Scalar::*;
        Ok(match Self::unify(self, other)? {
            (ExactRational(a), ExactRational(b)) => ExactRational(rat(a, b)),
            (Polynomial(a), Polynomial(b)) => Polynomial(poly(a, b)),
            (Jet { var, jet: a }, Jet { jet: b, .. }) => Jet { var, jet: jet(a, b) },
            (Float64(a), Float64(b)) => Float64(float(a, b)),
            _ => unreachable!("unify returns matching modes"),
        })
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar> {
        self.combine(other, |a, b| a + b, |a, b| a + b, |a, b| a + b, |a, b| a + b)
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.combine(other, |a, b| a - b, |a, b| a - b, |a, b| a - b, |a, b| a - b)
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar> {
        self.combine(other, |a, b| a * b, |a, b| a * b, |a, b| a * b, |a, b| a * b)
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::ExactRational(q) => Scalar::ExactRational(-q.clone()),
            Scalar::Polynomial(p) => Scalar::Polynomial(-p.clone()),
            Scalar::Jet { var, jet } => Scalar::Jet {
                var: var.clone(),
                jet: -jet.clone(),
            },
            Scalar::Float64(x) => Scalar::Float64(-x),
        }
    }

    /// Float value of a rational, constant polynomial, or float.
    pub fn to_f64(&self) -> Option<f64> {
        match self {
            Scalar::ExactRational(q) => Some(rational_to_f64(q)),
            Scalar::Polynomial(p) => p.as_constant().map(|q| rational_to_f64(&q)),
            Scalar::Jet { .. } => None,
            Scalar::Float64(x) => Some(*x),
        }
    }
}

fn poly_to_jet(p: &Poly, var: &str, like: &Jet<Rational>) -> Option<Scalar> {
    let order = like.order().unwrap_or(0);
    let jet = p.to_jet(var, order).ok()?;
    Some(Scalar::Jet {
        var: var.to_string(),
        jet,
    })
}

impl From<Rational> for Scalar {
    fn from(q: Rational) -> Self {
        Scalar::ExactRational(q)
    }
}

impl From<Poly> for Scalar {
    fn from(p: Poly) -> Self {
        Scalar::Polynomial(p)
    }
}

impl From<f64> for Scalar {
    fn from(x: f64) -> Self {
        Scalar::Float64(x)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::ExactRational(q) => write!(f, "{q}"),
            Scalar::Polynomial(p) => write!(f, "{p}"),
            Scalar::Jet { var, jet } => write!(f, "{}", jet.to_string().replace('ε', var)),
            Scalar::Float64(x) => write!(f, "{x}"),
        }
    }
}
