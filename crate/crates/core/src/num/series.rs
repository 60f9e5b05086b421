//! Power-series helpers.
//!
//! Two families live here: series of nilpotent arguments (used by the jet
//! types to evaluate transcendental functions exactly to their truncation
//! order) and the `f(ηt)/η` style quotients that appear in the AdS group
//! closed forms, which need a series branch so that η = 0 is not a 0/0.

use super::{rat, Field, Real, Ring};

/// Number of series terms used by the scaled quotients. Covers every jet
/// order up to [`super::MAX_JET_ORDER`] exactly and gives full double
/// precision whenever |ηt| < 1/2.
const QUOTIENT_TERMS: usize = 12;

/// |ηt| below which the scaled quotients switch to their series.
const QUOTIENT_SWITCH: f64 = 0.5;

/// `(Σ_{k odd} (-1)^((k-1)/2) h^k/k!, Σ_{k even} (-1)^(k/2) h^k/k!)` truncated
/// at `h^max_power`. Exact for any `h` with `h^(max_power+1) = 0`.
pub(crate) fn nilpotent_sin_cos<T: Field>(h: &T, max_power: usize) -> (T, T) {
    let (odd, even) = nilpotent_parts(h, max_power, true);
    (odd, even)
}

/// Hyperbolic counterpart of [`nilpotent_sin_cos`].
pub(crate) fn nilpotent_sinh_cosh<T: Field>(h: &T, max_power: usize) -> (T, T) {
    nilpotent_parts(h, max_power, false)
}

fn nilpotent_parts<T: Field>(h: &T, max_power: usize, alternate: bool) -> (T, T) {
    let mut odd = T::zero();
    let mut even = T::one();
    let mut term = T::one();
    for k in 1..=max_power {
        term = term * h.clone() / T::from_i64(k as i64);
        let negate = alternate && (k / 2) % 2 == 1;
        let signed = if negate { -term.clone() } else { term.clone() };
        if k % 2 == 1 {
            odd = odd + signed;
        } else {
            even = even + signed;
        }
    }
    (odd, even)
}

fn use_series<S: Field>(eta: &S, t: &S) -> bool {
    eta.lead() == 0.0 || (eta.lead() * t.lead()).abs() < QUOTIENT_SWITCH
}

/// Σ_k s_k η^(2k) t^(2k+1)/(2k+1)! with s_k = (-1)^k (circular) or 1.
fn odd_quotient_series<S: Ring>(eta: &S, t: &S, alternate: bool) -> S {
    let eta2 = eta.square();
    let t2 = t.square();
    let mut term = t.clone();
    let mut acc = t.clone();
    for k in 1..QUOTIENT_TERMS {
        let denom = ((2 * k) * (2 * k + 1)) as i64;
        term = term * eta2.clone() * t2.clone() * S::from_rational(&rat(1, denom));
        acc = if alternate && k % 2 == 1 {
            acc - term.clone()
        } else {
            acc + term.clone()
        };
    }
    acc
}

/// `sin(ηt)/η`, continuous through η = 0 where it equals `t`.
pub fn sin_over<S: Real>(eta: &S, t: &S) -> S {
    if use_series(eta, t) {
        odd_quotient_series(eta, t, true)
    } else {
        (eta.clone() * t.clone()).sin() / eta.clone()
    }
}

/// `sinh(ηt)/η`, continuous through η = 0 where it equals `t`.
pub fn sinh_over<S: Real>(eta: &S, t: &S) -> S {
    if use_series(eta, t) {
        odd_quotient_series(eta, t, false)
    } else {
        (eta.clone() * t.clone()).sinh() / eta.clone()
    }
}

/// `tan(ηt)/η`.
pub fn tan_over<S: Real>(eta: &S, t: &S) -> S {
    sin_over(eta, t) / (eta.clone() * t.clone()).cos()
}

/// `tanh(ηt)/η`.
pub fn tanh_over<S: Real>(eta: &S, t: &S) -> S {
    sinh_over(eta, t) / (eta.clone() * t.clone()).cosh()
}

/// `(1 - cos ηt)/η² = 2 (sin(ηt/2)/η)²`.
pub fn one_minus_cos_over<S: Real>(eta: &S, t: &S) -> S {
    let half = t.clone() * S::from_rational(&rat(1, 2));
    sin_over(eta, &half).square().scale_i64(2)
}

/// `(cosh ηt - 1)/η² = 2 (sinh(ηt/2)/η)²`.
pub fn cosh_minus_one_over<S: Real>(eta: &S, t: &S) -> S {
    let half = t.clone() * S::from_rational(&rat(1, 2));
    sinh_over(eta, &half).square().scale_i64(2)
}
