//! The Sklyanin Poisson-Lie structure on SO(2,2).
//!
//! Invariant vector fields are obtained pointwise: with `Φ` the map from the
//! six chart coordinates to the 4×4 group element, the left field of `X`
//! solves `DΦ·a = T·rep(X)` and the right field solves `DΦ·a = rep(X)·T`.
//! `DΦ` comes from forward-mode dual numbers, so the only error in float
//! mode is the conditioning of the 16×6 least-squares problem.

mod closed;
mod functions;
mod series;

pub use closed::{casimir_value, closed_form_ambient, closed_form_xx, upsilon, POLE_GUARD};
pub use functions::CoordinateFunction;
pub use series::{eta_series, linearize_at_identity, linearize_at_identity_exact, Linearization};

use crate::catalog::Catalog;
use crate::error::{Error, Result};
use crate::geometry::{group_element, rep, Generator};
use crate::linalg::Mat;
use crate::num::{rat, Dual, MultiJet, Poly, Real, Ring};
use std::sync::OnceLock;

/// Largest accepted condition number of `DΦ`.
pub const MAX_CONDITION: f64 = 1e8;
/// Largest accepted residual of the frame equations.
pub const MAX_RESIDUAL: f64 = 1e-10;

/// Left and right invariant fields at a point.
///
/// Row `i` of `left` holds the components of `X_i^L` along
/// `∂/∂(x0, x1, x2, th0, th1, th2)`, for `X_i` in `(J0, J1, J2, P0, P1, P2)`.
#[derive(Clone, Debug)]
pub struct Frame<S> {
    pub left: Mat<S>,
    pub right: Mat<S>,
    /// Estimated condition number of `DΦ`.
    pub condition: f64,
    /// Largest residual entry over both systems, relative to the largest
    /// entry of `T·rep(X)`.
    pub residual: f64,
}

/// `∂T/∂c_k` flattened row-major into column `k` of a 16×6 matrix.
fn chart_jacobian<S: Real>(coords: &[S; 6], eta: &S) -> Mat<S> {
    let e = Dual::constant(eta.clone());
    let mut d = Mat::zeros(16, 6);
    for k in 0..6 {
        let c: [Dual<S>; 6] = std::array::from_fn(|i| {
            if i == k {
                Dual::seed(coords[i].clone())
            } else {
                Dual::constant(coords[i].clone())
            }
        });
        let t = group_element(&c, &e);
        for (p, v) in t.matrix().entries().iter().enumerate() {
            d[(p, k)] = v.du.clone();
        }
    }
    d
}

fn condition_estimate(normal: &Mat<f64>) -> f64 {
    match normal.inverse() {
        Some(inv) => (normal.norm1() * inv.norm1()).sqrt(),
        None => f64::INFINITY,
    }
}

pub fn frame_at<S: Real>(coords: &[S; 6], eta: &S) -> Result<Frame<S>> {
    let d = chart_jacobian(coords, eta);
    let condition = condition_estimate(&d.transpose().mul(&d).map(|v| v.lead()));
    if condition.is_nan() || condition > MAX_CONDITION {
        return Err(Error::ChartDegenerate {
            condition,
            detail: format!("condition number of the chart Jacobian exceeds {MAX_CONDITION:e}"),
        });
    }
    let t = group_element(coords, eta);
    let mut left_rhs = Mat::zeros(16, 6);
    let mut right_rhs = Mat::zeros(16, 6);
    for g in Generator::ALL {
        let x = rep(g, eta);
        let l = t.matrix().mul(&x);
        let r = x.mul(t.matrix());
        for p in 0..16 {
            left_rhs[(p, g.index())] = l.entries()[p].clone();
            right_rhs[(p, g.index())] = r.entries()[p].clone();
        }
    }
    let solve = |rhs: &Mat<S>| {
        d.least_squares(rhs).ok_or_else(|| Error::ChartDegenerate {
            condition,
            detail: "normal equations are singular".into(),
        })
    };
    let (a_left, a_right) = (solve(&left_rhs)?, solve(&right_rhs)?);
    let scale = left_rhs.map(|v| v.lead()).max_abs().max(1.0);
    let residual = d
        .mul(&a_left)
        .sub(&left_rhs)
        .map(|v| v.lead())
        .max_abs()
        .max(d.mul(&a_right).sub(&right_rhs).map(|v| v.lead()).max_abs())
        / scale;
    if residual.is_nan() || residual > MAX_RESIDUAL {
        return Err(Error::ChartDegenerate {
            condition,
            detail: format!("frame residual {residual:e} exceeds {MAX_RESIDUAL:e}"),
        });
    }
    Ok(Frame {
        left: a_left.transpose(),
        right: a_right.transpose(),
        condition,
        residual,
    })
}

fn r_polynomials() -> &'static Mat<Poly> {
    static R: OnceLock<Mat<Poly>> = OnceLock::new();
    R.get_or_init(|| {
        let fx = Catalog::builtin().r_matrix("r_ads").expect("builtin r-matrix");
        Mat::from_fn(6, 6, |a, b| fx.r.get(&[a, b]).clone())
    })
}

/// Components `R^{ab}` of `r_ξ` in the basis `(J0, J1, J2, P0, P1, P2)`.
pub fn r_components<S: Ring>(eta: &S, xi: &S) -> Mat<S> {
    r_polynomials().map(|p| {
        p.eval(|v| match v {
            "eta" => Some(eta.clone()),
            "xi" => Some(xi.clone()),
            _ => None,
        })
        .expect("r-matrix depends on eta and xi only")
    })
}

/// Poisson bivector `Π^{kl} = Σ R^{ab}(L_a^k L_b^l − R_a^k R_b^l)` in chart
/// components, so `{f, g} = ∂_k f Π^{kl} ∂_l g`.
pub fn poisson_tensor<S: Real>(coords: &[S; 6], eta: &S, xi: &S) -> Result<Mat<S>> {
    let frame = frame_at(coords, eta)?;
    let r = r_components(eta, xi);
    let l = frame.left.transpose().mul(&r).mul(&frame.left);
    let rr = frame.right.transpose().mul(&r).mul(&frame.right);
    let pi = l.sub(&rr);
    // Rounding breaks the antisymmetry of the products; restore it exactly.
    let half = S::from_rational(&rat(1, 2));
    Ok(pi.sub(&pi.transpose()).scale(&half))
}

fn contract<S: Ring>(df: &[S; 6], pi: &Mat<S>, dg: &[S; 6]) -> S {
    let mut acc = S::zero();
    for k in 0..6 {
        if df[k].is_zero() {
            continue;
        }
        for l in 0..6 {
            acc = acc + df[k].clone() * pi[(k, l)].clone() * dg[l].clone();
        }
    }
    acc
}

/// `{f, g}` at a point, antisymmetrized so that `{f, g} = −{g, f}` holds
/// bit for bit.
pub fn sklyanin<S: Real>(
    f: &CoordinateFunction,
    g: &CoordinateFunction,
    coords: &[S; 6],
    eta: &S,
    xi: &S,
) -> Result<S> {
    let pi = poisson_tensor(coords, eta, xi)?;
    let (df, dg) = (f.gradient(coords, eta), g.gradient(coords, eta));
    let half = S::from_rational(&rat(1, 2));
    Ok((contract(&df, &pi, &dg) - contract(&dg, &pi, &df)) * half)
}

/// All chart brackets `{u_k, u_l}` at a point: the bivector itself.
pub fn chart_brackets(coords: &[f64; 6], eta: f64, xi: f64) -> Result<Mat<f64>> {
    poisson_tensor(coords, &eta, &xi)
}

/// `{{f,g},h} + {{g,h},f} + {{h,f},g}`.
///
/// Inner brackets are expanded to first order around the point with
/// multivariate jets, which yields their gradients exactly.
pub fn jacobiator(
    fns: [&CoordinateFunction; 3],
    coords: &[f64; 6],
    eta: f64,
    xi: f64,
) -> Result<f64> {
    let seeded: [MultiJet; 6] = MultiJet::seed_point(coords, 1)
        .try_into()
        .expect("six coordinates");
    let (je, jx) = (MultiJet::constant(eta), MultiJet::constant(xi));
    let pi_jet = poisson_tensor(&seeded, &je, &jx)?;
    let pi = pi_jet.map(|v| v.value());
    let grad = |f: &CoordinateFunction| f.gradient(coords, &eta);
    let grad_jet = |f: &CoordinateFunction| f.gradient(&seeded, &je);
    let mut total = 0.0;
    for (a, b, c) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
        let inner = contract(&grad_jet(fns[a]), &pi_jet, &grad_jet(fns[b]));
        let d_inner: [f64; 6] = std::array::from_fn(|k| {
            let mut e = [0u8; 6];
            e[k] = 1;
            inner.coefficient(&e)
        });
        total += contract(&d_inner, &pi, &grad(fns[c]));
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use CoordinateFunction::*;

    const P: [f64; 6] = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6];

    #[test]
    fn frame_at_identity_is_shared() {
        let f = frame_at(&[0.0; 6], &0.5).unwrap();
        assert!(f.left.sub(&f.right).max_abs() < 1e-14);
        // J_a ↦ ∂/∂th_a and P_a ↦ ∂/∂x_a
        for a in 0..3 {
            assert!((f.left[(a, 3 + a)] - 1.0).abs() < 1e-14);
            assert!((f.left[(3 + a, a)] - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn frames_differ_away_from_identity() {
        let f = frame_at(&P, &0.5).unwrap();
        assert!(f.left.sub(&f.right).max_abs() > 1e-3);
        assert!(f.residual <= MAX_RESIDUAL);
    }

    #[test]
    fn xx_brackets_match_closed_form() {
        for &(eta, xi) in &[(0.5, 1.0), (-0.8, -2.0), (0.05, 2.0)] {
            let cf = closed_form_xx(&[P[0], P[1], P[2]], &eta, &xi).unwrap();
            let got = [(0, 1), (0, 2), (1, 2)].map(|(i, j)| sklyanin(&X(i), &X(j), &P, &eta, &xi).unwrap());
            for k in 0..3 {
                assert!((got[k] - cf[k]).abs() < 1e-12, "eta={eta} k={k}: {} vs {}", got[k], cf[k]);
            }
        }
    }

    #[test]
    fn casimir_commutes() {
        for u in CoordinateFunction::basic() {
            assert!(sklyanin(&Casimir, &u, &P, &0.7, &1.0).unwrap().abs() < 1e-12);
        }
    }

    #[test]
    fn antisymmetric_and_linear_in_xi() {
        let a = sklyanin(&Theta(0), &X(2), &P, &0.4, &1.0).unwrap();
        let b = sklyanin(&X(2), &Theta(0), &P, &0.4, &1.0).unwrap();
        let c = sklyanin(&Theta(0), &X(2), &P, &0.4, &2.0).unwrap();
        assert_eq!(a, -b);
        assert_eq!(c, 2.0 * a);
        assert_eq!(sklyanin(&W(1), &W(1), &P, &0.4, &1.0).unwrap(), 0.0);
    }

    #[test]
    fn jacobi_identity_holds() {
        let j = jacobiator([&Theta(1), &X(0), &W(2)], &P, 0.6, 1.5).unwrap();
        assert!(j.abs() < 1e-10, "{j}");
    }

    #[test]
    fn degenerate_chart_is_rejected() {
        let c = [0.1, 0.1, 0.1, 0.0, 20.0, 0.0];
        assert!(matches!(frame_at(&c, &1.0), Err(Error::ChartDegenerate { .. })));
        // cos(eta x0) = 0 is a pole of the factored closed form only.
        let c = [std::f64::consts::FRAC_PI_2, 0.3, -0.2, 0.1, 0.2, 0.3];
        assert!(frame_at(&c, &1.0).is_ok());
    }
}
