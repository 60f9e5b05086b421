use super::{Field, Rational, Real, Ring};
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Forward-mode dual number `re + du·ε` with ε² = 0, generic over the
/// coefficient type so it can be stacked on jets or other duals.
#[derive(Clone, Debug, PartialEq)]
pub struct Dual<T> {
    pub re: T,
    pub du: T,
}

impl<T: Ring> Dual<T> {
    pub fn new(re: T, du: T) -> Self {
        Dual { re, du }
    }

    pub fn constant(re: T) -> Self {
        Dual { re, du: T::zero() }
    }

    /// `re + ε`: seeds the direction being differentiated.
    pub fn seed(re: T) -> Self {
        Dual { re, du: T::one() }
    }
}

impl<T: Ring> Add for Dual<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Dual::new(self.re + rhs.re, self.du + rhs.du)
    }
}

impl<T: Ring> Sub for Dual<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Dual::new(self.re - rhs.re, self.du - rhs.du)
    }
}

impl<T: Ring> Neg for Dual<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Dual::new(-self.re, -self.du)
    }
}

impl<T: Ring> Mul for Dual<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let du = self.re.clone() * rhs.du + self.du * rhs.re.clone();
        Dual::new(self.re * rhs.re, du)
    }
}

impl<T: Field> Div for Dual<T> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        let re = self.re / rhs.re.clone();
        let du = (self.du - re.clone() * rhs.du) / rhs.re;
        Dual::new(re, du)
    }
}

impl<T: Ring> Ring for Dual<T> {
    fn zero() -> Self {
        Dual::constant(T::zero())
    }
    fn one() -> Self {
        Dual::constant(T::one())
    }
    fn from_rational(q: &Rational) -> Self {
        Dual::constant(T::from_rational(q))
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.du.is_zero()
    }
}

impl<T: Field> Field for Dual<T> {
    fn lead(&self) -> f64 {
        self.re.lead()
    }
}

impl<T: Real> Real for Dual<T> {
    fn sin(&self) -> Self {
        Dual::new(self.re.sin(), self.du.clone() * self.re.cos())
    }
    fn cos(&self) -> Self {
        Dual::new(self.re.cos(), -(self.du.clone() * self.re.sin()))
    }
    fn sinh(&self) -> Self {
        Dual::new(self.re.sinh(), self.du.clone() * self.re.cosh())
    }
    fn cosh(&self) -> Self {
        Dual::new(self.re.cosh(), self.du.clone() * self.re.sinh())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derivative_of_product_and_quotient() {
        let x = Dual::seed(1.5f64);
        let f = x.clone() * x.clone() / (x.clone() + Dual::constant(1.0));
        // d/dx x²/(x+1) = (x² + 2x)/(x+1)²
        let expected = (1.5 * 1.5 + 3.0) / (2.5 * 2.5);
        assert!((f.du - expected).abs() < 1e-15);
    }

    #[test]
    fn nested_duals_give_second_derivatives() {
        let x = Dual::new(Dual::seed(0.3f64), Dual::constant(1.0));
        let s = x.sin();
        assert!((s.du.du + 0.3f64.sin()).abs() < 1e-15);
    }
}
