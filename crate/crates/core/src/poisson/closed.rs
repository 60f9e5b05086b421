//! Closed-form brackets and Casimir functions.

use crate::error::{Error, Result};
use crate::geometry::{one_minus_w3_over, weierstrass, AmbientPoint};
use crate::num::{tan_over, tanh_over, Real};

/// Smallest accepted `|cos ηx0|` for the `tan ηx0` closed form. The
/// singularity is removable (`Υ` carries a factor `cos ηx0`), but the
/// factored expression evaluates to `0·∞` there.
pub const POLE_GUARD: f64 = 1e-6;

/// Largest accepted pseudosphere residual for ambient brackets.
pub const CONSTRAINT_GUARD: f64 = 1e-8;

/// `Υ = cos ηx0 (cos ηx0 cosh ηx1 + sinh ηx1)`.
pub fn upsilon<S: Real>(x: &[S; 3], eta: &S) -> S {
    let c0 = (eta.clone() * x[0].clone()).cos();
    let e1 = eta.clone() * x[1].clone();
    c0.clone() * (c0 * e1.cosh() + e1.sinh())
}

/// `({x0,x1}, {x0,x2}, {x1,x2})`.
pub fn closed_form_xx<S: Real>(x: &[S; 3], eta: &S, xi: &S) -> Result<[S; 3]> {
    let c0 = (eta.clone() * x[0].clone()).cos();
    if c0.magnitude() < POLE_GUARD {
        return Err(Error::Domain(format!(
            "tan pole guard: |cos(eta*x0)| = {:e} < {POLE_GUARD:e}",
            c0.magnitude()
        )));
    }
    let u = upsilon(x, eta) * xi.clone();
    Ok([
        -(tanh_over(eta, &x[2]) * u.clone()),
        tanh_over(eta, &x[1]) * u.clone(),
        tan_over(eta, &x[0]) * u,
    ])
}

/// `({w0,w1}, {w0,w2}, {w1,w2})`; `w3` commutes with everything.
pub fn closed_form_ambient<S: Real>(w: &AmbientPoint<S>, eta: &S, xi: &S) -> Result<[S; 3]> {
    let residual = w.constraint_residual(eta).magnitude();
    if residual > CONSTRAINT_GUARD {
        return Err(Error::Domain(format!(
            "pseudosphere guard: constraint residual {residual:e} > {CONSTRAINT_GUARD:e}"
        )));
    }
    let k = xi.clone() * (w.w3().clone() + eta.clone() * w.w(1).clone());
    Ok([
        -(w.w(2).clone() * k.clone()),
        w.w(1).clone() * k.clone(),
        w.w(0).clone() * k,
    ])
}

/// `(C, C′)` with `C = w3` and `C′ = 2(1 − C)/η²`, regular at η = 0.
pub fn casimir_value<S: Real>(x: &[S; 3], eta: &S) -> (S, S) {
    let c = weierstrass(x, eta).0[0].clone();
    (c, one_minus_w3_over(x, eta).scale_i64(2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{rat, Jet, Rational};

    #[test]
    fn origin_values() {
        assert_eq!(closed_form_xx(&[0.0; 3], &0.5, &1.0).unwrap(), [0.0; 3]);
        let o = AmbientPoint([1.0, 0.0, 0.0, 0.0]);
        assert_eq!(closed_form_ambient(&o, &0.5, &1.0).unwrap(), [0.0; 3]);
        assert_eq!(casimir_value(&[0.0; 3], &0.5), (1.0, 0.0));
    }

    #[test]
    fn flat_limit_of_xx() {
        let x = [0.3, -0.4, 0.5];
        let v = closed_form_xx(&x, &0.0, &2.0).unwrap();
        assert_eq!(v, [-2.0 * 0.5, 2.0 * -0.4, 2.0 * 0.3]);
    }

    #[test]
    fn pole_is_rejected() {
        let x = [std::f64::consts::FRAC_PI_2, 0.0, 0.0];
        assert!(matches!(closed_form_xx(&x, &1.0, &1.0), Err(Error::Domain(_))));
    }

    #[test]
    fn off_shell_ambient_is_rejected() {
        let w = AmbientPoint([1.0, 0.1, 0.0, 0.0]);
        assert!(matches!(closed_form_ambient(&w, &0.5, &1.0), Err(Error::Domain(_))));
    }

    #[test]
    fn casimir_prime_jet_limit() {
        let eta: Jet<Rational> = Jet::variable(4);
        let x = [1, 2, 3].map(|n| Jet::constant(rat(n, 1)));
        let (c, cp) = casimir_value(&x, &eta);
        assert_eq!(c.coeff(0), rat(1, 1));
        assert_eq!(cp.coeff(0), rat(-12, 1));
        assert_eq!(cp.coeff(1), rat(0, 1));
    }
}
