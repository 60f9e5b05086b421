//! Functions on the group manifold in the chart `(x0, x1, x2, th0, th1, th2)`.

use crate::error::{Error, Result};
use crate::geometry::{one_minus_w3_over, weierstrass};
use crate::num::{Dual, Rational, Real};
use std::fmt;
use std::str::FromStr;

/// A smooth function of the six group coordinates.
#[derive(Clone, Debug, PartialEq)]
pub enum CoordinateFunction {
    X(usize),
    Theta(usize),
    W3,
    /// Ambient `w_a`, `a = 0, 1, 2`.
    W(usize),
    /// `C = cos ηx0 cosh ηx1 cosh ηx2`.
    Casimir,
    /// `C′ = 2(1 − C)/η²`.
    CasimirPrime,
    Constant(Rational),
    Sum(Box<CoordinateFunction>, Box<CoordinateFunction>),
    Product(Box<CoordinateFunction>, Box<CoordinateFunction>),
}

impl CoordinateFunction {
    /// `x0 x1 x2 th0 th1 th2 w3 w0 w1 w2`.
    pub fn basic() -> Vec<CoordinateFunction> {
        use CoordinateFunction::*;
        let mut v: Vec<_> = (0..3).map(X).collect();
        v.extend((0..3).map(Theta));
        v.push(W3);
        v.extend((0..3).map(W));
        v
    }

    /// The six chart coordinates, in chart order.
    pub fn chart() -> Vec<CoordinateFunction> {
        Self::basic().into_iter().take(6).collect()
    }

    pub fn sum(self, other: CoordinateFunction) -> Self {
        CoordinateFunction::Sum(Box::new(self), Box::new(other))
    }

    pub fn product(self, other: CoordinateFunction) -> Self {
        CoordinateFunction::Product(Box::new(self), Box::new(other))
    }

    pub fn eval<S: Real>(&self, coords: &[S; 6], eta: &S) -> S {
        use CoordinateFunction::*;
        let x = || [coords[0].clone(), coords[1].clone(), coords[2].clone()];
        match self {
            X(a) => coords[*a].clone(),
            Theta(a) => coords[3 + *a].clone(),
            W3 | Casimir => weierstrass(&x(), eta).0[0].clone(),
            W(a) => weierstrass(&x(), eta).0[*a + 1].clone(),
            CasimirPrime => one_minus_w3_over(&x(), eta).scale_i64(2),
            Constant(q) => S::from_rational(q),
            Sum(f, g) => f.eval(coords, eta) + g.eval(coords, eta),
            Product(f, g) => f.eval(coords, eta) * g.eval(coords, eta),
        }
    }

    /// Partial derivatives in chart order, by forward-mode differentiation.
    pub fn gradient<S: Real>(&self, coords: &[S; 6], eta: &S) -> [S; 6] {
        use CoordinateFunction::*;
        match self {
            X(a) => unit(*a),
            Theta(a) => unit(3 + *a),
            Constant(_) => unit(6),
            _ => {
                let e = Dual::constant(eta.clone());
                std::array::from_fn(|k| {
                    let c: [Dual<S>; 6] = std::array::from_fn(|i| {
                        if i == k {
                            Dual::seed(coords[i].clone())
                        } else {
                            Dual::constant(coords[i].clone())
                        }
                    });
                    self.eval(&c, &e).du
                })
            }
        }
    }
}

/// Unit covector; an index past the end gives zero.
fn unit<S: Real>(k: usize) -> [S; 6] {
    std::array::from_fn(|i| if i == k { S::one() } else { S::zero() })
}

impl fmt::Display for CoordinateFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use CoordinateFunction::*;
        match self {
            X(a) => write!(f, "x{a}"),
            Theta(a) => write!(f, "th{a}"),
            W3 => write!(f, "w3"),
            W(a) => write!(f, "w{a}"),
            Casimir => write!(f, "C"),
            CasimirPrime => write!(f, "Cp"),
            Constant(q) => write!(f, "{q}"),
            Sum(a, b) => write!(f, "({a} + {b})"),
            Product(a, b) => write!(f, "{a}*{b}"),
        }
    }
}

impl FromStr for CoordinateFunction {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        use CoordinateFunction::*;
        let digit = |p: &str| -> Option<usize> { s.strip_prefix(p)?.parse().ok() };
        let f = match s {
            "w3" => W3,
            "C" => Casimir,
            "Cp" | "C'" => CasimirPrime,
            _ => match (digit("x"), digit("th").or(digit("theta")), digit("w")) {
                (Some(a), _, _) if a < 3 => X(a),
                (_, Some(a), _) if a < 3 => Theta(a),
                (_, _, Some(a)) if a < 3 => W(a),
                _ => return Err(Error::UnknownLabel(s.to_string())),
            },
        };
        Ok(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use CoordinateFunction::*;

    #[test]
    fn labels_round_trip() {
        for f in CoordinateFunction::basic().into_iter().chain([Casimir, CasimirPrime]) {
            assert_eq!(f.to_string().parse::<CoordinateFunction>().unwrap(), f);
        }
        assert_eq!("theta2".parse::<CoordinateFunction>().unwrap(), Theta(2));
        assert!("x3".parse::<CoordinateFunction>().is_err());
        assert!("y".parse::<CoordinateFunction>().is_err());
    }

    #[test]
    fn gradient_of_w2() {
        let c = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6];
        let eta = 0.7_f64;
        let g = W(2).gradient(&c, &eta);
        assert!((g[2] - (eta * 0.3).cosh()).abs() < 1e-15);
        assert!(g.iter().enumerate().all(|(k, v)| k == 2 || *v == 0.0));
    }

    #[test]
    fn casimir_prime_flat_value() {
        let c = [1.0, 2.0, 3.0, 0.0, 0.0, 0.0];
        assert_eq!(CasimirPrime.eval(&c, &0.0), -12.0);
    }
}
