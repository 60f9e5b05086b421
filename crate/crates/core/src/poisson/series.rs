//! Exact expansions: brackets as power series in `eta`, and the linear part
//! of the bivector at the identity.

use super::{poisson_tensor, CoordinateFunction};
use crate::algebra::LieAlgebra;
use crate::error::{Error, Result};
use crate::num::{Dual, Jet, Poly, Rational, Ring, MAX_JET_ORDER};

/// Coefficients of `η^0 … η^order` of `{f, g}` at `(x, θ = 0)`, exactly.
///
/// The expansion runs at `θ = 0` because exact transcendental values exist
/// only at zero argument; x-x brackets do not depend on `θ`.
pub fn eta_series(
    f: &CoordinateFunction,
    g: &CoordinateFunction,
    x: &[Rational; 3],
    xi: &Rational,
    order: usize,
) -> Result<Vec<Rational>> {
    if order > MAX_JET_ORDER {
        return Err(Error::OrderTooHigh {
            requested: order,
            limit: MAX_JET_ORDER,
        });
    }
    let eta: Jet<Rational> = Jet::variable(order);
    let zero = Rational::zero();
    let coords: [Jet<Rational>; 6] = std::array::from_fn(|k| Jet::constant(if k < 3 { x[k].clone() } else { zero.clone() }));
    let value = super::sklyanin(f, g, &coords, &eta, &Jet::constant(xi.clone()))?;
    Ok(value.coeffs_through(order))
}

/// Linear part of the chart brackets at the identity: `{u_k, u_l} ≈ Σ_m c^m_{kl} u_m`.
#[derive(Clone, Debug, PartialEq)]
pub struct Linearization<T> {
    /// Chart labels `x0 x1 x2 th0 th1 th2`.
    pub labels: Vec<String>,
    /// `c^m_{kl}` at `(k*6 + l)*6 + m`.
    pub c: Vec<T>,
}

impl<T: Clone> Linearization<T> {
    pub fn get(&self, k: usize, l: usize, m: usize) -> T {
        self.c[(k * 6 + l) * 6 + m].clone()
    }

    /// Reorders to `th0 th1 th2 x0 x1 x2`, the dual-coordinate order.
    pub fn in_dual_order(&self) -> Linearization<T> {
        let perm = |i: usize| (i + 3) % 6;
        let mut c = self.c.clone();
        for k in 0..6 {
            for l in 0..6 {
                for m in 0..6 {
                    c[(k * 6 + l) * 6 + m] = self.get(perm(k), perm(l), perm(m));
                }
            }
        }
        Linearization {
            labels: (0..6).map(|i| self.labels[perm(i)].clone()).collect(),
            c,
        }
    }
}

fn chart_labels() -> Vec<String> {
    CoordinateFunction::chart().iter().map(|f| f.to_string()).collect()
}

fn linearize<S: crate::num::Real>(eta: &S, xi: &S) -> Result<Linearization<S>> {
    let mut c = vec![S::zero(); 216];
    for m in 0..6 {
        let coords: [Dual<S>; 6] = std::array::from_fn(|i| if i == m { Dual::seed(S::zero()) } else { Dual::constant(S::zero()) });
        let pi = poisson_tensor(&coords, &Dual::constant(eta.clone()), &Dual::constant(xi.clone()))?;
        for k in 0..6 {
            for l in 0..6 {
                c[(k * 6 + l) * 6 + m] = pi[(k, l)].du.clone();
            }
        }
    }
    Ok(Linearization {
        labels: chart_labels(),
        c,
    })
}

/// Float linearization.
pub fn linearize_at_identity(eta: f64, xi: f64) -> Result<Linearization<f64>> {
    linearize(&eta, &xi)
}

/// Exact linearization at rational parameters, as a Lie algebra on
/// `th0 th1 th2 x0 x1 x2`.
pub fn linearize_at_identity_exact(eta: &Rational, xi: &Rational) -> Result<LieAlgebra> {
    let lin = linearize(eta, xi)?.in_dual_order();
    LieAlgebra::from_structure(lin.labels.clone(), lin.c.into_iter().map(Poly::constant).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::rat;
    use CoordinateFunction::*;

    #[test]
    fn reference_expansion_of_x1_x2() {
        let x = [rat(1, 2), rat(-1, 3), rat(2, 5)];
        let xi = rat(3, 2);
        let s = eta_series(&X(1), &X(2), &x, &xi, 2).unwrap();
        let [x0, x1, _] = x.clone();
        assert_eq!(s[0], xi.clone() * x0.clone());
        assert_eq!(s[1], xi.clone() * x0.clone() * x1.clone());
        let two_thirds = rat(2, 3) * x0.clone() * x0.clone() * x0.clone();
        let half = rat(1, 2) * x1.clone() * x1 * x0;
        assert_eq!(s[2], -(xi * (two_thirds - half)));
    }

    #[test]
    fn order_is_bounded() {
        let x = [rat(0, 1), rat(0, 1), rat(0, 1)];
        assert!(matches!(
            eta_series(&X(0), &X(1), &x, &rat(1, 1), MAX_JET_ORDER + 1),
            Err(Error::OrderTooHigh { .. })
        ));
    }

    #[test]
    fn linear_part_in_x_sector() {
        let lin = linearize_at_identity(0.3, 2.0).unwrap();
        // {x0,x1} ≈ −ξ x2, {x0,x2} ≈ ξ x1, {x1,x2} ≈ ξ x0
        assert!((lin.get(0, 1, 2) + 2.0).abs() < 1e-12);
        assert!((lin.get(0, 2, 1) - 2.0).abs() < 1e-12);
        assert!((lin.get(1, 2, 0) - 2.0).abs() < 1e-12);
    }
}
