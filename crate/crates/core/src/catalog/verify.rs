//! Cross-checks between catalog fixtures.
//!
//! Every check compares a computed object against a transcribed one, or
//! certifies a structural identity, exactly in the formal parameters.
//! Checks that derive a table (coboundaries, dual brackets) always start
//! from the r-matrix fixtures rather than from another expected table, so a
//! corrupted table is reported by its own check only.

use super::{all_zero, Catalog, DualTable, Kind};
use crate::algebra::LieAlgebra;
use crate::bialgebra::LieBialgebra;
use crate::error::Result;
use crate::linalg::Mat;
use crate::num::{rat, Poly, Ring};
use crate::tensor::{ad_invariant, schouten, TensorElement};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub id: String,
    pub suite: String,
    pub anchor: String,
    pub status: Status,
    /// Largest numeric residual, for float checks.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<f64>,
    pub detail: String,
}

impl CheckRecord {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn new(id: impl Into<String>, suite: &str, anchor: &str, outcome: Result<Option<String>>) -> Self {
        let (status, detail) = match outcome {
            Ok(None) => (Status::Pass, "ok".to_string()),
            Ok(Some(why)) => (Status::Fail, why),
            Err(e) => (Status::Fail, format!("error: {e}")),
        };
        CheckRecord {
            id: id.into(),
            suite: suite.to_string(),
            anchor: anchor.to_string(),
            status,
            residual: None,
            detail,
        }
    }
}

type Outcome = Result<Option<String>>;

/// Runs every catalog cross-check.
pub fn verify_all(cat: &Catalog) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    for e in cat.entries() {
        let anchor = e.anchor.as_str();
        let id = e.id.as_str();
        let mut push = |check: &str, suite: &str, outcome: Outcome| {
            out.push(CheckRecord::new(format!("{check}/{id}"), suite, anchor, outcome));
        };
        match e.kind {
            Kind::Algebra => {
                push("jacobi", "algebra", cat.algebra(id).map(|a| jacobi(&a)));
            }
            Kind::Double => {
                push("jacobi", "double", cat.algebra(id).map(|a| jacobi(&a)));
                push("double-table", "double", check_double_table(cat, id));
                push("double-jacobi", "double", cat.double(id).map(|d| jacobi(d.algebra())));
                push(
                    "double-pairing",
                    "double",
                    cat.double(id).map(|d| {
                        let f = d.check_pairing_invariance();
                        f.first().map(|x| {
                            format!(
                                "{} failures, first at ({},{},{}): {}",
                                f.len(),
                                x.z,
                                x.x,
                                x.w,
                                x.residual
                            )
                        })
                    }),
                );
                push(
                    "double-symmetric-r",
                    "double",
                    cat.double(id).map(|d| {
                        (!d.symmetric_part_is_half_casimir())
                            .then(|| "symmetric part of r differs from half the pairing tensor".to_string())
                    }),
                );
            }
            Kind::Bialgebra => {
                push("cocycle", "double", cat.bialgebra(id).map(|b| cocycle(&b)));
                if e.field("source").is_some() {
                    push("coboundary", "double", check_coboundary_bialgebra(cat, id));
                }
            }
            Kind::BasisChange => {
                if e.field("to").is_some() {
                    push("basis-change", "algebra", check_basis_change(cat, id));
                }
                if e.field("inverse_of").is_some() {
                    push("basis-inverse", "algebra", check_basis_inverse(cat, id));
                }
            }
            Kind::RMatrix => {
                let fx = cat.r_matrix(id);
                if let Ok(f) = &fx {
                    if f.r.is_antisymmetric() {
                        push("schouten", "algebra", check_schouten(&f.algebra, &f.r));
                        push(
                            "coboundary-cocycle",
                            "double",
                            LieBialgebra::coboundary(&f.algebra, &f.r).map(|b| cocycle(&b)),
                        );
                    }
                }
                if e.field("via").is_some() {
                    push("r-canonical", "double", check_canonical_r(cat, id));
                    push("r-symmetric", "double", check_symmetric_part(cat, id));
                }
                if e.field("skew_of").is_some() {
                    push("r-skew", "double", check_skew_part(cat, id));
                }
            }
            Kind::ExpectedTable => match e.field("table") {
                Some("cocommutator") => push("coboundary", "double", check_cocommutator(cat, id)),
                Some("dual-brackets") => {
                    push("dual", "double", check_dual(cat, id));
                    push("dual-jacobi", "double", computed_dual(cat, id).map(|d| jacobi(&d)));
                }
                Some("casimirs") => push("casimir", "algebra", check_casimirs(cat, id)),
                Some("pairing") => {
                    push("pairing", "double", check_pairing(cat, id));
                    push("pairing-invariance", "double", check_pairing_invariance(cat, id));
                }
                _ => {}
            },
        }
        if e.field("limit").is_some() {
            push("limit", "algebra", check_limit(cat, id));
        }
    }
    out
}

fn jacobi(a: &LieAlgebra) -> Option<String> {
    let r = a.check_jacobi();
    (!r.is_ok()).then(|| r.to_string())
}

fn cocycle(b: &LieBialgebra) -> Option<String> {
    let r = b.check_cocycle();
    (!r.is_ok()).then(|| r.to_string())
}

/// First bracket where two algebras on the same basis disagree.
pub fn algebra_difference(expected: &LieAlgebra, got: &LieAlgebra) -> Option<String> {
    if expected.labels() != got.labels() {
        return Some(format!("bases differ: {:?} vs {:?}", expected.labels(), got.labels()));
    }
    let n = expected.dim();
    let labels = expected.labels();
    for i in 0..n {
        for j in i + 1..n {
            let (a, b) = (expected.basis_bracket(i, j), got.basis_bracket(i, j));
            if a != b {
                return Some(format!(
                    "[{}, {}]: expected {}, computed {}",
                    labels[i],
                    labels[j],
                    crate::algebra::format_combination(labels, &a),
                    crate::algebra::format_combination(labels, &b)
                ));
            }
        }
    }
    None
}

fn bialgebra_difference(expected: &LieBialgebra, got: &LieBialgebra) -> Option<String> {
    if let Some(d) = algebra_difference(expected.algebra(), got.algebra()) {
        return Some(d);
    }
    let labels = expected.algebra().labels();
    for n in 0..expected.dim() {
        if expected.delta(n) != got.delta(n) {
            return Some(format!(
                "delta({}): expected {}, computed {}",
                labels[n],
                expected.delta(n).format(labels),
                got.delta(n).format(labels)
            ));
        }
    }
    None
}

fn tensor_difference(labels: &[String], expected: &TensorElement, got: &TensorElement) -> Option<String> {
    (expected != got).then(|| format!("expected {}, computed {}", expected.format(labels), got.format(labels)))
}

fn check_double_table(cat: &Catalog, id: &str) -> Outcome {
    let built = cat.double(id)?;
    Ok(algebra_difference(&cat.algebra(id)?, built.algebra()))
}

fn check_coboundary_bialgebra(cat: &Catalog, id: &str) -> Outcome {
    let e = cat.get(id)?;
    let fx = cat.r_matrix(e.field("source").unwrap_or_default())?;
    let got = LieBialgebra::coboundary(&fx.algebra, &fx.r)?;
    Ok(bialgebra_difference(&cat.bialgebra(id)?, &got))
}

fn check_basis_change(cat: &Catalog, id: &str) -> Outcome {
    let e = cat.get(id)?;
    let m = cat.basis_change(id)?;
    let from = cat.algebra(e.field("from").unwrap_or_default())?;
    let to = cat.algebra(e.field("to").unwrap_or_default())?;
    let changed = from.change_basis(&m)?;
    if let Some(d) = algebra_difference(&to, &changed) {
        return Ok(Some(d));
    }
    let back = changed.change_basis(&m.inverted(from.labels().to_vec())?)?;
    Ok(algebra_difference(&from, &back).map(|d| format!("round trip: {d}")))
}

fn check_basis_inverse(cat: &Catalog, id: &str) -> Outcome {
    let e = cat.get(id)?;
    let stored = cat.basis_change(id)?;
    let forward = cat.basis_change(e.field("inverse_of").unwrap_or_default())?;
    let product = forward.matrix().mul(stored.matrix());
    Ok((product != Mat::identity(product.rows()))
        .then(|| "stored inverse times the forward change is not the identity".to_string()))
}

fn check_schouten(alg: &LieAlgebra, r: &TensorElement) -> Outcome {
    let s = schouten(r, alg)?;
    let rep = ad_invariant(&s, alg)?;
    Ok((!rep.is_ok()).then(|| format!("[[r,r]] {rep}")))
}

/// Canonical r of the source double, written in the fixture's basis.
fn transformed_canonical(cat: &Catalog, id: &str) -> Result<(LieAlgebra, TensorElement, TensorElement)> {
    let e = cat.get(id)?;
    let d = cat.double(e.field("source").unwrap_or_default())?;
    let m = cat.basis_change(e.field("via").unwrap_or_default())?;
    let canon = d.canonical_r();
    let alg = cat.r_matrix(id)?.algebra;
    Ok((alg, canon.r.change_basis(&m)?, canon.symmetric.change_basis(&m)?))
}

fn check_canonical_r(cat: &Catalog, id: &str) -> Outcome {
    let (alg, r, _) = transformed_canonical(cat, id)?;
    Ok(tensor_difference(alg.labels(), &cat.r_matrix(id)?.r, &r))
}

/// The symmetric part of the canonical r is the Casimir `C2` of the algebra.
fn check_symmetric_part(cat: &Catalog, id: &str) -> Outcome {
    let (alg, _, sym) = transformed_canonical(cat, id)?;
    let e = cat.get(id)?;
    let casimirs = cat.casimirs(e.field("algebra").unwrap_or_default())?;
    let Some((_, c2)) = casimirs.iter().find(|(n, _)| n == "C2") else {
        return Ok(Some("no C2 in the Casimir table".into()));
    };
    Ok(tensor_difference(alg.labels(), c2, &sym))
}

fn check_skew_part(cat: &Catalog, id: &str) -> Outcome {
    let e = cat.get(id)?;
    let fx = cat.r_matrix(id)?;
    let full = cat.r_matrix(e.field("skew_of").unwrap_or_default())?;
    let expected = full.r.antisymmetric_part().scale(&Poly::var("xi"));
    Ok(tensor_difference(fx.algebra.labels(), &fx.r, &expected))
}

/// Coboundary of the r-matrix named by the entry's `source` field.
fn coboundary_of_source(cat: &Catalog, id: &str) -> Result<LieBialgebra> {
    let e = cat.get(id)?;
    let fx = cat.r_matrix(e.field("source").unwrap_or_default())?;
    LieBialgebra::coboundary(&fx.algebra, &fx.r)
}

fn check_cocommutator(cat: &Catalog, id: &str) -> Outcome {
    let got = coboundary_of_source(cat, id)?;
    Ok(bialgebra_difference(&cat.cocommutator_table(id)?, &got))
}

fn computed_dual(cat: &Catalog, id: &str) -> Result<LieAlgebra> {
    let table = cat.dual_table(id)?;
    coboundary_of_source(cat, id)?.dual_algebra(table.coordinates)
}

fn dual_difference(table: &DualTable, dual: &LieAlgebra) -> Result<Option<String>> {
    let coords = &table.coordinates;
    for (p, a) in table.subset.iter().enumerate() {
        for b in &table.subset[p + 1..] {
            let got = dual.basis_bracket(dual.index_of(a)?, dual.index_of(b)?);
            let expected = table
                .brackets
                .iter()
                .find_map(|(l, r, v)| {
                    if l == a && r == b {
                        Some(v.clone())
                    } else if l == b && r == a {
                        Some(v.iter().map(|c| -c.clone()).collect())
                    } else {
                        None
                    }
                })
                .unwrap_or_else(|| vec![Poly::zero(); coords.len()]);
            if got != expected {
                return Ok(Some(format!(
                    "[{a}, {b}]: expected {}, computed {}",
                    crate::algebra::format_combination(coords, &expected),
                    crate::algebra::format_combination(coords, &got)
                )));
            }
        }
    }
    Ok(None)
}

fn check_dual(cat: &Catalog, id: &str) -> Outcome {
    let table = cat.dual_table(id)?;
    let dual = computed_dual(cat, id)?;
    dual_difference(&table, &dual)
}

fn check_casimirs(cat: &Catalog, id: &str) -> Outcome {
    let (alg, cs) = cat.casimir_table(id)?;
    for (name, c) in &cs {
        if c.symmetry() != crate::tensor::Symmetry::Symmetric {
            return Ok(Some(format!("{name} is not symmetric")));
        }
        let rep = ad_invariant(c, &alg)?;
        if !rep.is_ok() {
            return Ok(Some(format!("{name} {rep}")));
        }
    }
    Ok(None)
}

fn check_pairing(cat: &Catalog, id: &str) -> Outcome {
    let e = cat.get(id)?;
    let (alg, expected) = cat.pairing_table(id)?;
    let d = cat.double(e.field("source").unwrap_or_default())?;
    let m = cat.basis_change(e.field("via").unwrap_or_default())?;
    let got = d.pairing_in_basis(&m);
    let labels = alg.labels();
    for i in 0..labels.len() {
        for j in i..labels.len() {
            if expected[(i, j)] != got[(i, j)] {
                return Ok(Some(format!(
                    "<{}, {}>: expected {}, computed {}",
                    labels[i],
                    labels[j],
                    expected[(i, j)],
                    got[(i, j)]
                )));
            }
        }
    }
    Ok(None)
}

/// `⟨[Z,X],W⟩ + ⟨X,[Z,W]⟩ = 0` for the transcribed Gram matrix.
fn check_pairing_invariance(cat: &Catalog, id: &str) -> Outcome {
    let (alg, k) = cat.pairing_table(id)?;
    let n = alg.dim();
    for z in 0..n {
        let ad = alg.ad_matrix(z);
        // adᵀK + K ad = 0
        let s = ad.transpose().mul(&k).add(&k.mul(&ad));
        if !s.is_zero() {
            return Ok(Some(format!("pairing is not invariant under {}", alg.labels()[z])));
        }
    }
    Ok(None)
}

/// Objects compared by the η → 0 limit checks.
#[derive(Debug, PartialEq)]
enum Limit {
    Algebra(LieAlgebra),
    Matrix(Mat<Poly>),
    Tensor(TensorElement),
    Bialgebra(LieBialgebra),
    Casimirs(Vec<(String, TensorElement)>),
}

fn limit_object(cat: &Catalog, id: &str) -> Result<Limit> {
    let e = cat.get(id)?;
    Ok(match e.kind {
        Kind::Algebra | Kind::Double => Limit::Algebra(cat.algebra(id)?),
        Kind::BasisChange => Limit::Matrix(cat.basis_change(id)?.matrix().clone()),
        Kind::RMatrix => Limit::Tensor(cat.r_matrix(id)?.r),
        Kind::Bialgebra => Limit::Bialgebra(cat.bialgebra(id)?),
        Kind::ExpectedTable => match e.field("table") {
            Some("cocommutator") => Limit::Bialgebra(coboundary_of_source(cat, id)?),
            Some("dual-brackets") => Limit::Algebra(computed_dual(cat, id)?),
            Some("casimirs") => Limit::Casimirs(cat.casimir_table(id)?.1),
            _ => Limit::Matrix(cat.pairing_table(id)?.1),
        },
    })
}

/// The entry at `eta = 0` equals the entry named by its `limit` field.
fn check_limit(cat: &Catalog, id: &str) -> Outcome {
    let target = cat.get(id)?.field("limit").unwrap_or_default().to_string();
    let flat = cat.specialize("eta", &Poly::zero());
    let got = limit_object(&flat, id)?;
    let expected = limit_object(cat, &target)?;
    Ok((got != expected).then(|| format!("eta -> 0 of `{id}` differs from `{target}`")))
}

/// Number of nonzero first-order brackets in a computed dual table.
pub fn nonzero_dual_brackets(dual: &LieAlgebra) -> usize {
    let n = dual.dim();
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| !all_zero(&dual.basis_bracket(i, j)))
        .count()
}

/// `½` as a polynomial, shared by callers that rebuild tensors.
pub fn half() -> Poly {
    Poly::constant(rat(1, 2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::BUILTIN_CATALOG;

    #[test]
    fn pristine_catalog_passes() {
        let recs = verify_all(&Catalog::builtin());
        let failed: Vec<_> = recs.iter().filter(|r| !r.passed()).collect();
        assert!(failed.is_empty(), "{failed:#?}");
        assert!(recs.len() > 30);
    }

    #[test]
    fn one_sign_flip_fails_exactly_one_check() {
        let text = BUILTIN_CATALOG.replace("eta^2*J2/\\J1)", "-eta^2*J2/\\J1)");
        assert_ne!(text, BUILTIN_CATALOG);
        let recs = verify_all(&Catalog::parse(&text).unwrap());
        let failed: Vec<&str> = recs.iter().filter(|r| !r.passed()).map(|r| r.id.as_str()).collect();
        assert_eq!(failed, vec!["coboundary/cocomm_ads"]);
    }

    #[test]
    fn flat_limit_passes_everywhere() {
        let flat = Catalog::builtin().specialize("eta", &Poly::zero());
        let recs = verify_all(&flat);
        assert!(recs.iter().all(CheckRecord::passed));
        assert_eq!(flat.algebra("ads_double").unwrap(), flat.algebra("poincare_double").unwrap());
    }
}
