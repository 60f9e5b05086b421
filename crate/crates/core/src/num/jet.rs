use super::series::{nilpotent_sin_cos, nilpotent_sinh_cosh};
use super::{Field, Rational, Real, Ring};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Default truncation order: one past the η² terms of the reference series.
pub const DEFAULT_JET_ORDER: usize = 4;

/// Largest supported truncation order. The scaled quotient series in
/// [`super::series`] are exact up to this order.
pub const MAX_JET_ORDER: usize = 10;

/// Truncated power series `c₀ + c₁ε + … + c_N ε^N` in a single parameter.
///
/// `order == None` marks an exact constant (no truncation); combining it with
/// a truncated jet adopts the jet's order, and combining two truncated jets
/// keeps the smaller order.
#[derive(Clone, Debug)]
pub struct Jet<T> {
    coeffs: Vec<T>,
    order: Option<usize>,
}

/// Equality in the coarser of the two truncations: coefficients agree up to
/// the smaller order, with missing terms read as zero. Exact constants
/// compare against every stored term.
impl<T: Ring + PartialEq> PartialEq for Jet<T> {
    fn eq(&self, other: &Self) -> bool {
        let stored = self.coeffs.len().max(other.coeffs.len());
        let n = match (self.order, other.order) {
            (Some(a), Some(b)) => a.min(b) + 1,
            (Some(a), None) | (None, Some(a)) => a + 1,
            (None, None) => stored,
        };
        (0..n.min(stored)).all(|k| self.coeff(k) == other.coeff(k))
    }
}

impl<T: Ring> Jet<T> {
    pub fn constant(c: T) -> Self {
        Jet {
            coeffs: vec![c],
            order: None,
        }
    }

    /// The expansion variable itself, truncated at `order`.
    pub fn variable(order: usize) -> Self {
        Self::from_coeffs(vec![T::zero(), T::one()], order)
    }

    pub fn from_coeffs(mut coeffs: Vec<T>, order: usize) -> Self {
        coeffs.truncate(order + 1);
        if coeffs.is_empty() {
            coeffs.push(T::zero());
        }
        Jet {
            coeffs,
            order: Some(order),
        }
    }

    pub fn order(&self) -> Option<usize> {
        self.order
    }

    /// Coefficient of ε^k (zero past the stored terms).
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    /// Coefficients ε⁰..ε^k.
    pub fn coeffs_through(&self, k: usize) -> Vec<T> {
        (0..=k).map(|i| self.coeff(i)).collect()
    }

    pub fn constant_term(&self) -> T {
        self.coeff(0)
    }

    /// Divide by ε^k when the first k coefficients vanish.
    pub fn shift_down(&self, k: usize) -> Option<Self> {
        if (0..k).any(|i| !self.coeff(i).is_zero()) {
            return None;
        }
        let order = self.order?.checked_sub(k)?;
        let coeffs = self.coeffs.iter().skip(k).cloned().collect::<Vec<_>>();
        Some(Self::from_coeffs(coeffs, order))
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Jet<U> {
        Jet {
            coeffs: self.coeffs.iter().map(f).collect(),
            order: self.order,
        }
    }

    fn combined_order(&self, other: &Self) -> Option<usize> {
        match (self.order, other.order) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        }
    }

    fn normalized(mut coeffs: Vec<T>, order: Option<usize>) -> Self {
        match order {
            Some(n) => Self::from_coeffs(coeffs, n),
            None => {
                coeffs.truncate(1);
                Jet { coeffs, order }
            }
        }
    }

    fn nilpotent_part(&self) -> Self {
        let mut h = self.clone();
        h.coeffs[0] = T::zero();
        h
    }
}

impl<T: Ring> Add for Jet<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let order = self.combined_order(&rhs);
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        Self::normalized(coeffs, order)
    }
}

impl<T: Ring> Sub for Jet<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<T: Ring> Neg for Jet<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Jet {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
            order: self.order,
        }
    }
}

impl<T: Ring> Mul for Jet<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let order = self.combined_order(&rhs);
        let full = self.coeffs.len() + rhs.coeffs.len() - 1;
        let len = order.map_or(full, |n| full.min(n + 1));
        let mut coeffs = vec![T::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if i + j < len {
                    coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
                }
            }
        }
        Self::normalized(coeffs, order)
    }
}

impl<T: Field> Div for Jet<T> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        let order = self.combined_order(&rhs);
        let len = order.map_or(1, |n| n + 1);
        let b0 = rhs.coeff(0);
        let mut q: Vec<T> = Vec::with_capacity(len);
        for k in 0..len {
            let mut acc = self.coeff(k);
            for (j, qj) in q.iter().enumerate() {
                acc = acc - qj.clone() * rhs.coeff(k - j);
            }
            q.push(acc / b0.clone());
        }
        Self::normalized(q, order)
    }
}

impl<T: Ring> Ring for Jet<T> {
    fn zero() -> Self {
        Self::constant(T::zero())
    }
    fn one() -> Self {
        Self::constant(T::one())
    }
    fn from_rational(q: &Rational) -> Self {
        Self::constant(T::from_rational(q))
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Ring::is_zero)
    }
}

impl<T: Field> Field for Jet<T> {
    fn lead(&self) -> f64 {
        self.coeffs[0].lead()
    }
}

impl<T: Real> Real for Jet<T> {
    fn sin(&self) -> Self {
        let c = self.constant_term();
        let (s, co) = nilpotent_sin_cos(&self.nilpotent_part(), self.order.unwrap_or(0));
        Self::constant(c.sin()) * co + Self::constant(c.cos()) * s
    }
    fn cos(&self) -> Self {
        let c = self.constant_term();
        let (s, co) = nilpotent_sin_cos(&self.nilpotent_part(), self.order.unwrap_or(0));
        Self::constant(c.cos()) * co - Self::constant(c.sin()) * s
    }
    fn sinh(&self) -> Self {
        let c = self.constant_term();
        let (s, co) = nilpotent_sinh_cosh(&self.nilpotent_part(), self.order.unwrap_or(0));
        Self::constant(c.sinh()) * co + Self::constant(c.cosh()) * s
    }
    fn cosh(&self) -> Self {
        let c = self.constant_term();
        let (s, co) = nilpotent_sinh_cosh(&self.nilpotent_part(), self.order.unwrap_or(0));
        Self::constant(c.cosh()) * co + Self::constant(c.sinh()) * s
    }
}

impl<T: Ring + fmt::Display> fmt::Display for Jet<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})·ε")?,
                _ => write!(f, "({c})·ε^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        if let Some(n) = self.order {
            write!(f, " + O(ε^{})", n + 1)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::rat;

    fn eps(order: usize) -> Jet<Rational> {
        Jet::variable(order)
    }

    #[test]
    fn exact_sine_series() {
        let s = eps(5).sin();
        assert_eq!(
            s.coeffs_through(5),
            vec![rat(0, 1), rat(1, 1), rat(0, 1), rat(-1, 6), rat(0, 1), rat(1, 120)]
        );
    }

    #[test]
    fn division_inverts_multiplication() {
        let a = Jet::from_coeffs(vec![rat(2, 1), rat(3, 1), rat(-1, 2)], 4);
        let b = Jet::from_coeffs(vec![rat(1, 1), rat(1, 3), rat(5, 1), rat(7, 2)], 4);
        let q = a.clone() / b.clone();
        assert_eq!(q * b, a);
    }

    #[test]
    fn tan_from_sin_over_cos() {
        let t = eps(5).tan();
        assert_eq!(t.coeff(3), rat(1, 3));
        assert_eq!(t.coeff(5), rat(2, 15));
    }

    #[test]
    fn truncation_uses_the_smaller_order() {
        let a = Jet::<Rational>::variable(2);
        let b = Jet::<Rational>::variable(5);
        assert_eq!((a + b).order(), Some(2));
        let cube = Jet::<Rational>::variable(2).powi(3);
        assert!(cube.is_zero());
    }

    #[test]
    fn float_jet_of_shifted_argument() {
        let x = Jet::from_coeffs(vec![0.4, 1.0], 3);
        let c = x.cos();
        assert!((c.coeff(0) - 0.4f64.cos()).abs() < 1e-15);
        assert!((c.coeff(1) + 0.4f64.sin()).abs() < 1e-15);
        assert!((c.coeff(2) + 0.4f64.cos() / 2.0).abs() < 1e-15);
    }

    #[test]
    fn shift_down_divides_by_powers() {
        let j = Jet::from_coeffs(vec![rat(0, 1), rat(0, 1), rat(3, 1), rat(1, 1)], 4);
        let s = j.shift_down(2).unwrap();
        assert_eq!(s.coeffs_through(2), vec![rat(3, 1), rat(1, 1), rat(0, 1)]);
        assert_eq!(s.order(), Some(2));
        assert!(j.shift_down(3).is_none());
    }
}
