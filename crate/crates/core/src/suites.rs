//! Verification suites: the catalog cross-checks plus seeded property checks
//! of the group geometry and the Poisson-Lie structure.
//!
//! Random points are drawn from `|eta| <= 1` (nonzero), `xi` in
//! `{±1, ±2}`, `|x_a|, |th_a| <= 0.8`, rejecting points whose chart
//! Jacobian is ill conditioned. Every check draws from its own ChaCha stream
//! keyed by the check id, so results do not depend on which suites run.

use crate::algebra::LieAlgebra;
use crate::bialgebra::LieBialgebra;
use crate::catalog::{verify::algebra_difference, verify_all, Catalog, CheckRecord};
use crate::error::{Error, Result};
use crate::geometry::{
    exp_series, exp_subgroup, group_element, metric_at, orthogonality_defect, pullback_metric, rep, skewness_defect,
    weierstrass, Generator,
};
use crate::linalg::Mat;
use crate::num::{rat, Jet, Poly, Rational, Ring};
use crate::poisson::{
    casimir_value, closed_form_ambient, closed_form_xx, eta_series, frame_at, jacobiator, linearize_at_identity,
    linearize_at_identity_exact, poisson_tensor, sklyanin, CoordinateFunction,
};
use crate::report::Report;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt;
use std::str::FromStr;

pub const DEFAULT_SEED: u64 = 2014;
pub const DEFAULT_SAMPLES: usize = 1000;

/// Points used by the exact series check when samples allow.
const SERIES_POINTS: usize = 20;
/// Hamiltonian flows integrated by the symplectic-leaf check.
const FLOWS: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    Algebra,
    Double,
    Geometry,
    Poisson,
}

impl Suite {
    pub const NAMES: [&'static str; 5] = ["all", "algebra", "double", "geometry", "poisson"];

    pub fn as_str(self) -> &'static str {
        Self::NAMES[self as usize]
    }

    fn includes(self, other: Suite) -> bool {
        self == Suite::All || self == other
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let all = [Suite::All, Suite::Algebra, Suite::Double, Suite::Geometry, Suite::Poisson];
        all.into_iter()
            .find(|x| x.as_str() == s)
            .ok_or_else(|| Error::UnknownLabel(format!("suite `{s}` (expected one of {})", Self::NAMES.join(", "))))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Random points per sampled check.
    pub samples: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: DEFAULT_SEED,
            samples: DEFAULT_SAMPLES,
        }
    }
}

impl SuiteConfig {
    /// Triples for the Poisson Jacobi check: a fifth of the point samples.
    pub fn jacobi_samples(&self) -> usize {
        self.samples.div_ceil(5)
    }

    pub fn series_points(&self) -> usize {
        self.samples.min(SERIES_POINTS)
    }

    pub fn flows(&self) -> usize {
        self.samples.min(FLOWS)
    }
}

pub fn run(cat: &Catalog, suite: Suite, cfg: &SuiteConfig) -> Report {
    let mut records = Vec::new();
    if suite.includes(Suite::Algebra) || suite.includes(Suite::Double) {
        records.extend(
            verify_all(cat)
                .into_iter()
                .filter(|r| suite == Suite::All || r.suite == suite.as_str()),
        );
    }
    if suite.includes(Suite::Geometry) {
        records.extend(geometry_checks(cat, cfg));
    }
    if suite.includes(Suite::Poisson) {
        records.extend(poisson_checks(cat, cfg));
    }
    let mut warnings = Vec::new();
    if cfg.samples == 0 && (suite.includes(Suite::Geometry) || suite.includes(Suite::Poisson)) {
        warnings.push("--samples 0: sampled checks pass vacuously".to_string());
    }
    Report {
        suite: suite.to_string(),
        catalog_sha256: cat.checksum().to_string(),
        seed: cfg.seed,
        samples: cfg.samples,
        records,
        warnings,
    }
}

/// A random in-domain point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SamplePoint {
    pub coords: [f64; 6],
    pub eta: f64,
    pub xi: f64,
}

impl SamplePoint {
    pub fn x(&self) -> [f64; 3] {
        [self.coords[0], self.coords[1], self.coords[2]]
    }
}

pub struct Sampler {
    rng: ChaCha8Rng,
}

/// FNV-1a, used to give each check its own stream.
fn stream_of(id: &str) -> u64 {
    id.bytes()
        .fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

impl Sampler {
    pub fn new(seed: u64, id: &str) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream_of(id));
        Sampler { rng }
    }

    pub fn eta(&mut self) -> f64 {
        loop {
            let e: f64 = self.rng.gen_range(-1.0..=1.0);
            if e != 0.0 {
                return e;
            }
        }
    }

    pub fn xi(&mut self) -> f64 {
        [1.0, -1.0, 2.0, -2.0][self.rng.gen_range(0..4)]
    }

    pub fn coord(&mut self) -> f64 {
        self.rng.gen_range(-0.8..=0.8)
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    /// Regular point: chart guards pass and `|eta x0| <= 1.2`.
    pub fn point(&mut self) -> SamplePoint {
        loop {
            let p = SamplePoint {
                coords: std::array::from_fn(|_| self.coord()),
                eta: self.eta(),
                xi: self.xi(),
            };
            if (p.eta * p.coords[0]).abs() <= 1.2 && frame_at(&p.coords, &p.eta).is_ok() {
                return p;
            }
        }
    }

    /// `n/d` with `|n/d| <= 0.8`.
    pub fn rational(&mut self) -> Rational {
        let d = self.rng.gen_range(1..=10i64);
        let bound = (4 * d) / 5;
        rat(self.rng.gen_range(-bound..=bound), d)
    }
}

/// `|a − b| / max(1, |b|)`.
pub fn relative(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1.0)
}

/// Runs a sampled check: `f` returns a residual per sample.
fn sampled(
    id: &str,
    suite: &str,
    anchor: &str,
    cfg: &SuiteConfig,
    n: usize,
    tol: f64,
    mut f: impl FnMut(&mut Sampler) -> Result<f64>,
) -> CheckRecord {
    let mut s = Sampler::new(cfg.seed, id);
    let mut worst = 0.0f64;
    let mut outcome = Ok(None);
    for i in 0..n {
        match f(&mut s) {
            Ok(r) if r <= tol => worst = worst.max(r),
            Ok(r) => {
                worst = worst.max(r);
                outcome = Ok(Some(format!("sample {i}: residual {r:.3e} exceeds {tol:.0e}")));
                break;
            }
            Err(e) => {
                outcome = Err(e);
                break;
            }
        }
    }
    if n == 0 {
        outcome = Ok(None);
    }
    let mut rec = CheckRecord::new(id, suite, anchor, outcome);
    if rec.passed() {
        rec.detail = if n == 0 {
            "vacuous: no samples".to_string()
        } else {
            format!("{n} samples within {tol:.0e}")
        };
    }
    rec.residual = Some(worst);
    rec
}

fn exact(id: &str, suite: &str, anchor: &str, outcome: Result<Option<String>>) -> CheckRecord {
    CheckRecord::new(id, suite, anchor, outcome)
}

// ---------------------------------------------------------------- geometry

const REP: &str = "4x4 vector representation of so(2,2)";
const SUBGROUPS: &str = "one-parameter subgroups of SO(2,2)";
const GROUP: &str = "group element T as a product of six exponentials";
const AMBIENT: &str = "geodesic parallel coordinates on the pseudosphere";
const METRIC: &str = "AdS metric in geodesic parallel coordinates";

pub fn geometry_checks(cat: &Catalog, cfg: &SuiteConfig) -> Vec<CheckRecord> {
    let g = "geometry";
    let n = cfg.samples;
    let mut out = vec![
        exact("rep/homomorphism", g, REP, rep_homomorphism(cat)),
        exact("rep/preserves-form", g, REP, {
            let eta = Poly::var("eta");
            Ok(Generator::ALL
                .into_iter()
                .find(|x| !skewness_defect(&rep(*x, &eta), &eta).is_zero())
                .map(|x| format!("{x} does not preserve I_eta")))
        }),
    ];
    out.push(sampled("exp/series-oracle", g, SUBGROUPS, cfg, n, 1e-12, |s| {
        let (eta, t) = (s.eta(), 2.0 * s.coord());
        let x = Generator::ALL[s.index(6)];
        Ok(exp_subgroup(x, &t, &eta).sub(&exp_series(&rep(x, &eta), t, 40)).max_abs())
    }));
    out.push(sampled("exp/one-parameter", g, SUBGROUPS, cfg, n, 1e-12, |s| {
        let (eta, a, b) = (s.eta(), s.coord(), s.coord());
        let x = Generator::ALL[s.index(6)];
        let lhs = exp_subgroup(x, &a, &eta).mul(&exp_subgroup(x, &b, &eta));
        let det = exp_subgroup(x, &a, &eta).det();
        Ok(lhs.sub(&exp_subgroup(x, &(a + b), &eta)).max_abs().max((det - 1.0).abs()))
    }));
    out.push(sampled("group/orthogonality", g, GROUP, cfg, n, 1e-12, |s| {
        let p = s.point();
        let t = group_element(&p.coords, &p.eta);
        Ok(orthogonality_defect(t.matrix(), &p.eta).max_abs().max((t.matrix().det() - 1.0).abs()))
    }));
    out.push(sampled("ambient/pseudosphere", g, AMBIENT, cfg, n, 1e-12, |s| {
        let p = s.point();
        Ok(weierstrass(&p.x(), &p.eta).constraint_residual(&p.eta).abs())
    }));
    out.push(sampled("ambient/orbit-of-origin", g, AMBIENT, cfg, n, 1e-12, |s| {
        let p = s.point();
        let t = group_element(&p.coords, &p.eta);
        let w = weierstrass(&p.x(), &p.eta);
        Ok((0..4).map(|k| (t.matrix()[(k, 0)] - w.0[k]).abs()).fold(0.0, f64::max))
    }));
    out.push(sampled("ambient/lorentz-fixes-origin", g, AMBIENT, cfg, n, 1e-12, |s| {
        let (eta, th) = (s.eta(), s.coord());
        let m = exp_subgroup(Generator::ALL[s.index(3)], &th, &eta);
        Ok((0..4).map(|k| (m[(k, 0)] - if k == 0 { 1.0 } else { 0.0 }).abs()).fold(0.0, f64::max))
    }));
    out.push(sampled("metric/pullback", g, METRIC, cfg, n, 1e-10, |s| {
        let p = s.point();
        Ok(metric_at(&p.x(), &p.eta).sub(&pullback_metric(&p.x(), &p.eta)).max_abs())
    }));
    out.push(exact("limit/flat-coordinates", g, AMBIENT, flat_limit(cfg)));
    out.push(sampled("limit/minkowski-metric", g, METRIC, cfg, n, 1e-9, |s| {
        let p = s.point();
        let flat = Mat::from_fn(3, 3, |i, j| if i != j { 0.0 } else if i == 0 { 1.0 } else { -1.0 });
        Ok(pullback_metric(&p.x(), &0.0).sub(&flat).max_abs())
    }));
    out
}

fn rep_homomorphism(cat: &Catalog) -> Result<Option<String>> {
    let so22 = cat.algebra("so22_table")?;
    let eta = Poly::var("eta");
    let mats: Vec<Mat<Poly>> = Generator::ALL.iter().map(|x| rep(*x, &eta)).collect();
    for i in 0..6 {
        for j in i + 1..6 {
            let expected = so22
                .basis_bracket(i, j)
                .iter()
                .zip(&mats)
                .fold(Mat::zeros(4, 4), |acc, (c, m)| acc.add(&m.scale(c)));
            if mats[i].commutator(&mats[j]) != expected {
                return Ok(Some(format!(
                    "rep([{}, {}]) differs from the commutator of the matrices",
                    Generator::ALL[i],
                    Generator::ALL[j]
                )));
            }
        }
    }
    Ok(None)
}

/// Order-0 jets in eta of the ambient coordinates and the metric are the
/// flat ones, at random rational points.
fn flat_limit(cfg: &SuiteConfig) -> Result<Option<String>> {
    let mut s = Sampler::new(cfg.seed, "limit/flat-coordinates");
    let eta: Jet<Rational> = Jet::variable(2);
    for _ in 0..cfg.series_points() {
        let x: [Jet<Rational>; 3] = std::array::from_fn(|_| Jet::constant(s.rational()));
        let w = weierstrass(&x, &eta);
        if w.w3().coeff(0) != rat(1, 1) || (0..3).any(|a| w.w(a).coeff(0) != x[a].coeff(0)) {
            return Ok(Some(format!("ambient point at eta = 0 is not (1, x) for x = {x:?}")));
        }
        let m = pullback_metric(&x, &eta);
        let flat = [1, -1, -1];
        for i in 0..3 {
            for j in 0..3 {
                let want = if i == j { rat(flat[i], 1) } else { Rational::zero() };
                if m[(i, j)].coeff(0) != want {
                    return Ok(Some(format!("metric component ({i},{j}) at eta = 0 is not Minkowski")));
                }
            }
        }
    }
    Ok(None)
}

// ----------------------------------------------------------------- poisson

const SKLYANIN: &str = "Sklyanin bracket from left and right invariant fields";
const XX: &str = "closed-form brackets of the spacetime coordinates";
const QUADRATIC: &str = "homogeneous quadratic brackets of ambient coordinates";
const CASIMIR: &str = "Casimir function C = w3 and C' = 2(1-C)/eta^2";
const SERIES: &str = "power series of the spacetime brackets in eta";
const LINEAR: &str = "first-order brackets among spacetime and Lorentz coordinates";

pub fn poisson_checks(cat: &Catalog, cfg: &SuiteConfig) -> Vec<CheckRecord> {
    use CoordinateFunction::*;
    let p = "poisson";
    let n = cfg.samples;
    let basic = CoordinateFunction::basic();
    let pairs = [(0, 1), (0, 2), (1, 2)];
    let mut out = Vec::new();
    out.push(sampled("frame/residual", p, SKLYANIN, cfg, n, 1e-10, |s| {
        let q = s.point();
        Ok(frame_at(&q.coords, &q.eta)?.residual)
    }));
    out.push(sampled("frame/identity", p, SKLYANIN, cfg, n.min(1), 1e-14, |s| {
        let f = frame_at(&[0.0; 6], &s.eta())?;
        Ok(f.left.sub(&f.right).max_abs())
    }));
    out.push(sampled("sklyanin/closed-form-xx", p, XX, cfg, n, 1e-9, |s| {
        let q = s.point();
        let cf = closed_form_xx(&q.x(), &q.eta, &q.xi)?;
        let mut worst = 0.0f64;
        for (k, &(i, j)) in pairs.iter().enumerate() {
            worst = worst.max(relative(sklyanin(&X(i), &X(j), &q.coords, &q.eta, &q.xi)?, cf[k]));
        }
        Ok(worst)
    }));
    out.push(sampled("sklyanin/closed-form-ambient", p, QUADRATIC, cfg, n, 1e-9, |s| {
        let q = s.point();
        let cf = closed_form_ambient(&weierstrass(&q.x(), &q.eta), &q.eta, &q.xi)?;
        let mut worst = 0.0f64;
        for (k, &(i, j)) in pairs.iter().enumerate() {
            worst = worst.max(relative(sklyanin(&W(i), &W(j), &q.coords, &q.eta, &q.xi)?, cf[k]));
        }
        for a in 0..3 {
            worst = worst.max(sklyanin(&W3, &W(a), &q.coords, &q.eta, &q.xi)?.abs());
        }
        Ok(worst)
    }));
    out.push(sampled("sklyanin/theta-independence", p, XX, cfg, n, 1e-10, |s| {
        let q = s.point();
        let mut other = q;
        for k in 3..6 {
            other.coords[k] = s.coord();
        }
        if frame_at(&other.coords, &q.eta).is_err() {
            return Ok(0.0);
        }
        let mut worst = 0.0f64;
        for &(i, j) in &pairs {
            let a = sklyanin(&X(i), &X(j), &q.coords, &q.eta, &q.xi)?;
            let b = sklyanin(&X(i), &X(j), &other.coords, &q.eta, &q.xi)?;
            worst = worst.max((a - b).abs());
        }
        Ok(worst)
    }));
    out.push(sampled("sklyanin/linear-in-xi", p, SKLYANIN, cfg, n, 0.0, |s| {
        let q = s.point();
        let (f, g) = (&basic[s.index(10)], &basic[s.index(10)]);
        let one = sklyanin(f, g, &q.coords, &q.eta, &1.0)?;
        let two = sklyanin(f, g, &q.coords, &q.eta, &2.0)?;
        Ok((two - 2.0 * one).abs())
    }));
    out.push(sampled("sklyanin/antisymmetry", p, SKLYANIN, cfg, n, 0.0, |s| {
        let q = s.point();
        let (f, g) = (&basic[s.index(10)], &basic[s.index(10)]);
        let ab = sklyanin(f, g, &q.coords, &q.eta, &q.xi)?;
        let ba = sklyanin(g, f, &q.coords, &q.eta, &q.xi)?;
        Ok((ab + ba).abs().max(sklyanin(f, f, &q.coords, &q.eta, &q.xi)?.abs()))
    }));
    out.push(sampled("casimir/commutes", p, CASIMIR, cfg, n, 1e-9, |s| {
        let q = s.point();
        let pi = poisson_tensor(&q.coords, &q.eta, &q.xi)?;
        let dc = Casimir.gradient(&q.coords, &q.eta);
        let mut worst = 0.0f64;
        for u in &basic {
            let du = u.gradient(&q.coords, &q.eta);
            let mut v = 0.0;
            for k in 0..6 {
                for l in 0..6 {
                    v += dc[k] * pi[(k, l)] * du[l];
                }
            }
            worst = worst.max(v.abs());
        }
        Ok(worst)
    }));
    out.push(sampled("casimir/equals-w3", p, CASIMIR, cfg, n, 1e-12, |s| {
        let q = s.point();
        let [x0, x1, x2] = q.x();
        let c = (q.eta * x0).cos() * (q.eta * x1).cosh() * (q.eta * x2).cosh();
        let t = group_element(&q.coords, &q.eta);
        Ok((c - t.matrix()[(0, 0)]).abs().max((casimir_value(&q.x(), &q.eta).0 - c).abs()))
    }));
    out.push(exact("casimir/flat-limit", p, CASIMIR, casimir_flat_limit(cfg)));
    out.push(sampled("casimir/hamiltonian-flow", p, CASIMIR, cfg, cfg.flows(), 1e-6, |s| {
        let q = s.point();
        casimir_drift(&basic[s.index(10)], q)
    }));
    out.push(exact("series/reference-expansion", p, SERIES, series_check(cfg)));
    out.push(exact("linearize/exact", p, LINEAR, linearization_exact(cat)));
    let table = dual_of(cat, "r_ads");
    out.push(sampled("linearize/float", p, LINEAR, cfg, n.min(50), 1e-9, |s| {
        let (eta, xi) = (s.eta(), s.xi());
        let lin = linearize_at_identity(eta, xi)?.in_dual_order();
        let t = table.as_ref().map_err(Clone::clone)?;
        let mut worst = 0.0f64;
        for (idx, c) in t.structure().iter().enumerate() {
            let want = c.eval_f64(&[("eta", eta), ("xi", xi)]).map_err(Error::UnboundParameter)?;
            worst = worst.max((lin.c[idx] - want).abs());
        }
        Ok(worst)
    }));
    out.push(sampled("jacobi/cyclic-sum", p, SKLYANIN, cfg, cfg.jacobi_samples(), 1e-8, |s| {
        let q = s.point();
        let f = [s.index(10), s.index(10), s.index(10)].map(|i| &basic[i]);
        jacobiator(f, &q.coords, q.eta, q.xi).map(f64::abs)
    }));
    out.push(sampled("limit/minkowski-brackets", p, XX, cfg, n, 1e-9, |s| {
        let q = s.point();
        let [x0, x1, x2] = q.x();
        let flat = [-q.xi * x2, q.xi * x1, q.xi * x0];
        let mut worst = 0.0f64;
        for (k, &(i, j)) in pairs.iter().enumerate() {
            worst = worst.max((sklyanin(&X(i), &X(j), &q.coords, &0.0, &q.xi)? - flat[k]).abs());
        }
        Ok(worst)
    }));
    out.push(sampled("limit/continuity", p, SERIES, cfg, n.min(50), 1e-5, |s| {
        let q = s.point();
        let x: [Rational; 3] = std::array::from_fn(|_| s.rational());
        let xf = x.clone().map(|v| crate::num::rational_to_f64(&v));
        let xi = rat(q.xi as i64, 1);
        let coords = [xf[0], xf[1], xf[2], 0.0, 0.0, 0.0];
        let mut worst = 0.0f64;
        for &(i, j) in &pairs {
            let jet = eta_series(&X(i), &X(j), &x, &xi, 0)?;
            let v = sklyanin(&X(i), &X(j), &coords, &1e-6, &q.xi)?;
            worst = worst.max((v - crate::num::rational_to_f64(&jet[0])).abs());
        }
        Ok(worst)
    }));
    out
}

fn casimir_flat_limit(cfg: &SuiteConfig) -> Result<Option<String>> {
    let mut s = Sampler::new(cfg.seed, "casimir/flat-limit");
    let eta: Jet<Rational> = Jet::variable(2);
    let mut points: Vec<[Rational; 3]> = vec![[rat(1, 1), rat(2, 1), rat(3, 1)]];
    points.extend((0..cfg.series_points()).map(|_| std::array::from_fn(|_| s.rational())));
    for x in points {
        let xj = x.clone().map(Jet::constant);
        let (c, cp) = casimir_value(&xj, &eta);
        let [x0, x1, x2] = x;
        let want = x0.clone() * x0 - x1.clone() * x1 - x2.clone() * x2;
        if c.coeff(0) != rat(1, 1) || cp.coeff(0) != want {
            return Ok(Some(format!("eta -> 0 of C' is {}, expected {want}", cp.coeff(0))));
        }
    }
    Ok(None)
}

/// Integrates `dz/dt = Π(z)·∇H` with RK4 and returns `|C(z(T)) − C(z(0))|`.
pub fn casimir_drift(h: &CoordinateFunction, q: SamplePoint) -> Result<f64> {
    let (steps, dt) = (50, 0.004);
    let field = |z: &[f64; 6]| -> Result<[f64; 6]> {
        let pi = poisson_tensor(z, &q.eta, &q.xi)?;
        let dh = h.gradient(z, &q.eta);
        Ok(std::array::from_fn(|k| (0..6).map(|l| pi[(k, l)] * dh[l]).sum()))
    };
    let shift = |z: &[f64; 6], v: &[f64; 6], t: f64| -> [f64; 6] { std::array::from_fn(|k| z[k] + t * v[k]) };
    let mut z = q.coords;
    let c0 = CoordinateFunction::Casimir.eval(&z, &q.eta);
    for _ in 0..steps {
        let k1 = field(&z)?;
        let k2 = field(&shift(&z, &k1, dt / 2.0))?;
        let k3 = field(&shift(&z, &k2, dt / 2.0))?;
        let k4 = field(&shift(&z, &k3, dt))?;
        z = std::array::from_fn(|k| z[k] + dt / 6.0 * (k1[k] + 2.0 * k2[k] + 2.0 * k3[k] + k4[k]));
    }
    Ok((CoordinateFunction::Casimir.eval(&z, &q.eta) - c0).abs())
}

/// Reference expansions of `({x0,x1}, {x0,x2}, {x1,x2})` through `eta^2`.
pub fn reference_expansion(x: &[Rational; 3], xi: &Rational) -> [[Rational; 3]; 3] {
    let [x0, x1, x2] = x.clone();
    let sq = |v: &Rational| v.clone() * v.clone();
    let cube = |v: &Rational| v.clone() * v.clone() * v.clone();
    [
        [
            -(xi.clone() * x2.clone()),
            -(xi.clone() * x1.clone() * x2.clone()),
            xi.clone() * (sq(&x0) * x2.clone() - rat(1, 2) * sq(&x1) * x2.clone() + rat(1, 3) * cube(&x2)),
        ],
        [
            xi.clone() * x1.clone(),
            xi.clone() * sq(&x1),
            -(xi.clone() * (sq(&x0) * x1.clone() - rat(1, 6) * cube(&x1))),
        ],
        [
            xi.clone() * x0.clone(),
            xi.clone() * x0.clone() * x1.clone(),
            -(xi.clone() * (rat(2, 3) * cube(&x0) - rat(1, 2) * sq(&x1) * x0.clone())),
        ],
    ]
}

fn series_check(cfg: &SuiteConfig) -> Result<Option<String>> {
    use CoordinateFunction::X;
    let mut s = Sampler::new(cfg.seed, "series/reference-expansion");
    let names = ["{x0,x1}", "{x0,x2}", "{x1,x2}"];
    for _ in 0..cfg.series_points() {
        let x: [Rational; 3] = std::array::from_fn(|_| s.rational());
        let xi = rat(s.xi() as i64, 1);
        let want = reference_expansion(&x, &xi);
        for (k, (i, j)) in [(0, 1), (0, 2), (1, 2)].into_iter().enumerate() {
            let got = eta_series(&X(i), &X(j), &x, &xi, 2)?;
            if let Some(order) = (0..3).find(|&o| got[o] != want[k][o]) {
                return Ok(Some(format!(
                    "{} at x = ({}, {}, {}), xi = {xi}: eta^{order} coefficient {} differs from {}",
                    names[k], x[0], x[1], x[2], got[order], want[k][order]
                )));
            }
        }
    }
    Ok(None)
}

/// Dual algebra of the coboundary of a catalog r-matrix, on `th, x`.
pub fn dual_of(cat: &Catalog, r_id: &str) -> Result<LieAlgebra> {
    let fx = cat.r_matrix(r_id)?;
    let labels = ["th0", "th1", "th2", "x0", "x1", "x2"].map(String::from).to_vec();
    LieBialgebra::coboundary(&fx.algebra, &fx.r)?.dual_algebra(labels)
}

fn specialize(a: &LieAlgebra, eta: &Rational, xi: &Rational) -> LieAlgebra {
    a.substitute("eta", &Poly::constant(eta.clone()))
        .substitute("xi", &Poly::constant(xi.clone()))
}

/// Exact linearization equals the dual of the AdS cocommutator, and at
/// `eta = 0` the dual of the Poincaré one.
fn linearization_exact(cat: &Catalog) -> Result<Option<String>> {
    let ads = dual_of(cat, "r_ads")?;
    let poincare = dual_of(cat, "r_poincare")?;
    let cases = [
        (rat(1, 3), rat(2, 1)),
        (rat(-3, 4), rat(-1, 1)),
        (rat(1, 1), rat(1, 1)),
        (rat(0, 1), rat(2, 1)),
    ];
    for (eta, xi) in cases {
        let got = linearize_at_identity_exact(&eta, &xi)?;
        let source = if eta.is_zero() { &poincare } else { &ads };
        if let Some(d) = algebra_difference(&specialize(source, &eta, &xi), &got) {
            return Ok(Some(format!("eta = {eta}, xi = {xi}: {d}")));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> SuiteConfig {
        SuiteConfig { seed: 1, samples: 12 }
    }

    #[test]
    fn suites_pass_on_a_few_samples() {
        let cat = Catalog::builtin();
        for suite in [Suite::Geometry, Suite::Poisson] {
            let r = run(&cat, suite, &small());
            let bad: Vec<_> = r.failures().collect();
            assert!(bad.is_empty(), "{bad:#?}");
        }
    }

    #[test]
    fn zero_samples_is_vacuous_with_warning() {
        let r = run(&Catalog::builtin(), Suite::Poisson, &SuiteConfig { seed: 1, samples: 0 });
        assert!(r.passed());
        assert_eq!(r.warnings.len(), 1);
    }

    #[test]
    fn streams_do_not_depend_on_order() {
        let a: Vec<f64> = (0..3).map(|_| Sampler::new(5, "a").eta()).collect();
        let mut s = Sampler::new(5, "a");
        assert_eq!(a[0], s.eta());
        assert_ne!(Sampler::new(5, "a").eta(), Sampler::new(5, "b").eta());
    }

    #[test]
    fn suite_names() {
        for n in Suite::NAMES {
            assert_eq!(n.parse::<Suite>().unwrap().as_str(), n);
        }
        assert!("foo".parse::<Suite>().is_err());
    }
}
