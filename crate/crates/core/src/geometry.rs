//! The 4×4 vector model of SO(2,2).
//!
//! Rows and columns are ordered like the ambient coordinates
//! `(w3, w0, w1, w2)`. Every function is generic over the coefficient type,
//! so the same code produces exact polynomial identities in `eta`, truncated
//! jets in `eta`, forward-mode derivatives, and plain floats.

use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::num::{cosh_minus_one_over, one_minus_cos_over, sin_over, sinh_over, Dual, Real, Ring};
use std::fmt;
use std::str::FromStr;

/// Generators in the fixed basis order `(J0, J1, J2, P0, P1, P2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    J0,
    J1,
    J2,
    P0,
    P1,
    P2,
}

impl Generator {
    pub const ALL: [Generator; 6] = [
        Generator::J0,
        Generator::J1,
        Generator::J2,
        Generator::P0,
        Generator::P1,
        Generator::P2,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn label(self) -> &'static str {
        ["J0", "J1", "J2", "P0", "P1", "P2"][self.index()]
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Generator {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Generator::ALL
            .into_iter()
            .find(|g| g.label() == s)
            .ok_or_else(|| Error::UnknownGenerator(s.to_string()))
    }
}

/// `I_η = diag(1, η², −η², −η²)`.
pub fn metric_form<S: Ring>(eta: &S) -> Mat<S> {
    let e2 = eta.square();
    let d = [S::one(), e2.clone(), -e2.clone(), -e2];
    Mat::from_fn(4, 4, |i, j| if i == j { d[i].clone() } else { S::zero() })
}

/// Matrix of a generator.
pub fn rep<S: Ring>(g: Generator, eta: &S) -> Mat<S> {
    let mut m = Mat::zeros(4, 4);
    let e2 = eta.square();
    match g {
        Generator::P0 => {
            m[(0, 1)] = -e2;
            m[(1, 0)] = S::one();
        }
        Generator::P1 => {
            m[(0, 2)] = e2;
            m[(2, 0)] = S::one();
        }
        Generator::P2 => {
            m[(0, 3)] = e2;
            m[(3, 0)] = S::one();
        }
        Generator::J0 => {
            m[(2, 3)] = -S::one();
            m[(3, 2)] = S::one();
        }
        Generator::J1 => {
            m[(1, 3)] = -S::one();
            m[(3, 1)] = -S::one();
        }
        Generator::J2 => {
            m[(1, 2)] = S::one();
            m[(2, 1)] = S::one();
        }
    }
    m
}

/// Matrix of a general algebra element `Σ v^i X_i`.
pub fn rep_vector<S: Ring>(v: &[S], eta: &S) -> Mat<S> {
    Generator::ALL
        .iter()
        .zip(v)
        .fold(Mat::zeros(4, 4), |acc, (g, c)| acc.add(&rep(*g, eta).scale(c)))
}

/// Closed-form `exp(t X)`.
pub fn exp_subgroup<S: Real>(g: Generator, t: &S, eta: &S) -> Mat<S> {
    let mut m = Mat::identity(4);
    let et = eta.clone() * t.clone();
    match g {
        Generator::P0 => {
            let (c, s) = (et.cos(), sin_over(eta, t));
            m[(0, 0)] = c.clone();
            m[(1, 1)] = c;
            m[(0, 1)] = -(eta.square() * s.clone());
            m[(1, 0)] = s;
        }
        Generator::P1 | Generator::P2 => {
            let k = if g == Generator::P1 { 2 } else { 3 };
            let (c, s) = (et.cosh(), sinh_over(eta, t));
            m[(0, 0)] = c.clone();
            m[(k, k)] = c;
            m[(0, k)] = eta.square() * s.clone();
            m[(k, 0)] = s;
        }
        Generator::J0 => {
            let (c, s) = (t.cos(), t.sin());
            m[(2, 2)] = c.clone();
            m[(3, 3)] = c;
            m[(2, 3)] = -s.clone();
            m[(3, 2)] = s;
        }
        Generator::J1 => {
            let (c, s) = (t.cosh(), t.sinh());
            m[(1, 1)] = c.clone();
            m[(3, 3)] = c;
            m[(1, 3)] = -s.clone();
            m[(3, 1)] = -s;
        }
        Generator::J2 => {
            let (c, s) = (t.cosh(), t.sinh());
            m[(1, 1)] = c.clone();
            m[(2, 2)] = c;
            m[(1, 2)] = s.clone();
            m[(2, 1)] = s;
        }
    }
    m
}

/// Truncated exponential series `Σ_{k≤terms} (tX)^k/k!`, the oracle for the
/// closed forms.
pub fn exp_series(x: &Mat<f64>, t: f64, terms: usize) -> Mat<f64> {
    let tx = x.scale(&t);
    let mut acc = Mat::identity(4);
    let mut term = Mat::identity(4);
    for k in 1..=terms {
        term = term.mul(&tx).scale(&(1.0 / k as f64));
        acc = acc.add(&term);
    }
    acc
}

/// Group coordinates `(x0, x1, x2, th0, th1, th2)` and the matrix they define.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupPoint<S> {
    coords: [S; 6],
    matrix: Mat<S>,
}

impl<S: Real> GroupPoint<S> {
    pub fn coords(&self) -> &[S; 6] {
        &self.coords
    }

    pub fn x(&self) -> [S; 3] {
        [self.coords[0].clone(), self.coords[1].clone(), self.coords[2].clone()]
    }

    pub fn theta(&self) -> [S; 3] {
        [self.coords[3].clone(), self.coords[4].clone(), self.coords[5].clone()]
    }

    pub fn matrix(&self) -> &Mat<S> {
        &self.matrix
    }
}

/// `T = e^{x0 P0} e^{x1 P1} e^{x2 P2} e^{th2 J2} e^{th1 J1} e^{th0 J0}`.
pub fn group_element<S: Real>(coords: &[S; 6], eta: &S) -> GroupPoint<S> {
    let factors = [
        (Generator::P0, 0),
        (Generator::P1, 1),
        (Generator::P2, 2),
        (Generator::J2, 5),
        (Generator::J1, 4),
        (Generator::J0, 3),
    ];
    let matrix = factors
        .iter()
        .fold(Mat::identity(4), |acc, &(g, k)| acc.mul(&exp_subgroup(g, &coords[k], eta)));
    GroupPoint {
        coords: coords.clone(),
        matrix,
    }
}

/// Ambient coordinates `(w3, w0, w1, w2)`.
#[derive(Clone, Debug, PartialEq)]
pub struct AmbientPoint<S>(pub [S; 4]);

impl<S: Ring> AmbientPoint<S> {
    pub fn w3(&self) -> &S {
        &self.0[0]
    }

    /// `w_a` for `a = 0, 1, 2`.
    pub fn w(&self, a: usize) -> &S {
        &self.0[a + 1]
    }

    /// `w3² + η²(w0² − w1² − w2²) − 1`.
    pub fn constraint_residual(&self, eta: &S) -> S {
        let [w3, w0, w1, w2] = &self.0;
        w3.square() + eta.square() * (w0.square() - w1.square() - w2.square()) - S::one()
    }
}

/// Geodesic parallel coordinates to ambient ones: the orbit of `(1,0,0,0)`
/// under the three translation factors.
pub fn weierstrass<S: Real>(x: &[S; 3], eta: &S) -> AmbientPoint<S> {
    let [x0, x1, x2] = x;
    let ch1 = (eta.clone() * x1.clone()).cosh();
    let ch2 = (eta.clone() * x2.clone()).cosh();
    AmbientPoint([
        (eta.clone() * x0.clone()).cos() * ch1.clone() * ch2.clone(),
        sin_over(eta, x0) * ch1 * ch2.clone(),
        sinh_over(eta, x1) * ch2,
        sinh_over(eta, x2),
    ])
}

/// `(1 − w3)/η² = (1 − cos ηx0 cosh ηx1 cosh ηx2)/η²`, regular at η = 0.
pub fn one_minus_w3_over<S: Real>(x: &[S; 3], eta: &S) -> S {
    let a = one_minus_cos_over(eta, &x[0]);
    let b = cosh_minus_one_over(eta, &x[1]);
    let c = cosh_minus_one_over(eta, &x[2]);
    let e2 = eta.square();
    a.clone() - (b.clone() + c.clone()) - e2.clone() * b.clone() * c.clone()
        + e2.clone() * a.clone() * (b.clone() + c.clone())
        + e2.square() * a * b * c
}

/// The metric `diag(cosh²ηx1 cosh²ηx2, −cosh²ηx2, −1)`.
pub fn metric_at<S: Real>(x: &[S; 3], eta: &S) -> Mat<S> {
    let ch1 = (eta.clone() * x[1].clone()).cosh().square();
    let ch2 = (eta.clone() * x[2].clone()).cosh().square();
    let d = [ch1 * ch2.clone(), -ch2, -S::one()];
    Mat::from_fn(3, 3, |i, j| if i == j { d[i].clone() } else { S::zero() })
}

/// Pullback of `(dw3² + η²(dw0² − dw1² − dw2²))/η²` along [`weierstrass`].
///
/// Since `w3 = 1 − η² u` with `u = (1 − w3)/η²`, the first term is
/// `η² du²`, which keeps the computation free of division by η.
pub fn pullback_metric<S: Real>(x: &[S; 3], eta: &S) -> Mat<S> {
    let mut grads: Vec<[S; 4]> = Vec::with_capacity(3);
    for k in 0..3 {
        let xd: [Dual<S>; 3] = std::array::from_fn(|i| {
            if i == k {
                Dual::seed(x[i].clone())
            } else {
                Dual::constant(x[i].clone())
            }
        });
        let ed = Dual::constant(eta.clone());
        let w = weierstrass(&xd, &ed);
        let u = one_minus_w3_over(&xd, &ed);
        grads.push([u.du, w.0[1].du.clone(), w.0[2].du.clone(), w.0[3].du.clone()]);
    }
    let e2 = eta.square();
    Mat::from_fn(3, 3, |i, j| {
        let (a, b) = (&grads[i], &grads[j]);
        e2.clone() * a[0].clone() * b[0].clone() + a[1].clone() * b[1].clone()
            - a[2].clone() * b[2].clone()
            - a[3].clone() * b[3].clone()
    })
}

/// `Gᵀ I_η G − I_η`.
pub fn orthogonality_defect<S: Ring>(g: &Mat<S>, eta: &S) -> Mat<S> {
    let i = metric_form(eta);
    g.transpose().mul(&i).mul(g).sub(&i)
}

/// `Yᵀ I_η + I_η Y`.
pub fn skewness_defect<S: Ring>(y: &Mat<S>, eta: &S) -> Mat<S> {
    let i = metric_form(eta);
    y.transpose().mul(&i).add(&i.mul(y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{rat, Jet, Poly, Rational};

    fn close(a: &Mat<f64>, b: &Mat<f64>, tol: f64) -> bool {
        a.sub(b).max_abs() <= tol
    }

    #[test]
    fn p0_matrix_rows() {
        let m = rep(Generator::P0, &0.5_f64);
        assert_eq!(m.row(0), &[0.0, -0.25, 0.0, 0.0]);
        assert_eq!(m.row(1), &[1.0, 0.0, 0.0, 0.0]);
        assert!(m.row(2).iter().chain(m.row(3)).all(|v| *v == 0.0));
    }

    #[test]
    fn generators_preserve_the_form_exactly() {
        let eta = Poly::var("eta");
        for g in Generator::ALL {
            assert!(skewness_defect(&rep(g, &eta), &eta).is_zero(), "{g}");
        }
    }

    #[test]
    fn p0_p1_commutator() {
        let eta = Poly::var("eta");
        let c = rep(Generator::P0, &eta).commutator(&rep(Generator::P1, &eta));
        assert_eq!(c, rep(Generator::J2, &eta).scale(&eta.square()));
    }

    #[test]
    fn closed_forms_match_series() {
        for &eta in &[0.7, -0.3, 1e-7] {
            for g in Generator::ALL {
                for &t in &[0.35, -0.8, 1.3] {
                    let closed = exp_subgroup(g, &t, &eta);
                    let series = exp_series(&rep(g, &eta), t, 40);
                    assert!(close(&closed, &series, 1e-12), "{g} t={t} eta={eta}");
                }
            }
        }
    }

    #[test]
    fn translation_entries() {
        let (eta, x): (f64, f64) = (0.6, 0.9);
        let m = exp_subgroup(Generator::P0, &x, &eta);
        assert!((m[(0, 1)] + eta * (eta * x).sin()).abs() < 1e-15);
        assert!((m[(1, 0)] - (eta * x).sin() / eta).abs() < 1e-15);
        let m = exp_subgroup(Generator::P1, &x, &eta);
        assert!((m[(0, 2)] - eta * (eta * x).sinh()).abs() < 1e-15);
        assert!((m[(2, 0)] - (eta * x).sinh() / eta).abs() < 1e-15);
    }

    #[test]
    fn zero_parameter_gives_identity() {
        for g in Generator::ALL {
            assert_eq!(exp_subgroup(g, &0.0, &0.8), Mat::identity(4));
        }
        assert_eq!(*group_element(&[0.0; 6], &0.8).matrix(), Mat::identity(4));
    }

    #[test]
    fn single_factor_point() {
        let mut c = [0.0; 6];
        c[0] = 0.4;
        assert_eq!(*group_element(&c, &0.7).matrix(), exp_subgroup(Generator::P0, &0.4, &0.7));
    }

    #[test]
    fn group_constraint_and_orbit() {
        let c = [0.1, -0.2, 0.3, 0.4, -0.5, 0.6];
        let eta = 0.7;
        let t = group_element(&c, &eta);
        assert!(orthogonality_defect(t.matrix(), &eta).max_abs() < 1e-12);
        let w = weierstrass(&t.x(), &eta);
        for k in 0..4 {
            assert!((t.matrix()[(k, 0)] - w.0[k]).abs() < 1e-14);
        }
        assert!(w.constraint_residual(&eta).abs() < 1e-14);
    }

    #[test]
    fn metric_matches_pullback() {
        let x = [0.3, -0.6, 0.5];
        for &eta in &[0.5, -0.9, 0.0] {
            assert!(close(&metric_at(&x, &eta), &pullback_metric(&x, &eta), 1e-12));
        }
    }

    #[test]
    fn flat_limit_jets() {
        let eta: Jet<Rational> = Jet::variable(4);
        let x = [rat(1, 3), rat(-2, 5), rat(3, 7)].map(Jet::constant);
        let w = weierstrass(&x, &eta);
        assert_eq!(w.w3().coeff(0), rat(1, 1));
        assert_eq!(w.w3().coeff(1), rat(0, 1));
        for a in 0..3 {
            assert_eq!(w.w(a).coeff(0), x[a].coeff(0));
            assert_eq!(w.w(a).coeff(1), rat(0, 1));
        }
        let g = pullback_metric(&x, &eta);
        let flat = [1, -1, -1];
        for i in 0..3 {
            for j in 0..3 {
                let want = if i == j { rat(flat[i], 1) } else { rat(0, 1) };
                assert_eq!(g[(i, j)].coeff(0), want);
            }
        }
        assert_eq!(g, metric_at(&x, &eta));
    }

    #[test]
    fn parse_generators() {
        assert_eq!("P2".parse::<Generator>().unwrap(), Generator::P2);
        assert!(matches!("Q".parse::<Generator>(), Err(Error::UnknownGenerator(_))));
    }
}
