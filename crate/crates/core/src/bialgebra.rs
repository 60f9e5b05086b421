//! Lie bialgebras, coboundary cocommutators and their dual brackets.

use crate::algebra::{JacobiReport, LieAlgebra};
use crate::error::{Error, Result};
use crate::num::{rat, Poly, Ring};
use crate::tensor::TensorElement;
use std::fmt;

/// A Lie algebra together with a cocommutator `δ(e_n) ∈ g∧g`.
///
/// `delta[n]` stores the full antisymmetric components `D^{lm}_n` of
/// `δ(e_n) = Σ D^{lm}_n e_l⊗e_m`, so `δ(e_n) = Σ_{l<m} D^{lm}_n e_l∧e_m`.
#[derive(Clone, Debug, PartialEq)]
pub struct LieBialgebra {
    algebra: LieAlgebra,
    delta: Vec<TensorElement>,
}

/// A nonzero component of `δ([e_a,e_b]) − ad_a δ(e_b) + ad_b δ(e_a)`.
#[derive(Clone, Debug, PartialEq)]
pub struct CocycleViolation {
    pub a: usize,
    pub b: usize,
    pub l: usize,
    pub m: usize,
    pub residual: Poly,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct CocycleReport {
    /// Jacobi identity of the dual bracket.
    pub cojacobi: JacobiReport,
    pub cocycle: Vec<CocycleViolation>,
}

impl CocycleReport {
    pub fn is_ok(&self) -> bool {
        self.cojacobi.is_ok() && self.cocycle.is_empty()
    }
}

impl fmt::Display for CocycleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return write!(f, "co-Jacobi and cocycle conditions hold");
        }
        if !self.cojacobi.is_ok() {
            write!(f, "co-Jacobi fails at {} tuples", self.cojacobi.violations.len())?;
        }
        if let Some(v) = self.cocycle.first() {
            if !self.cojacobi.is_ok() {
                write!(f, "; ")?;
            }
            write!(
                f,
                "cocycle fails at {} components, first (a,b)=({},{}) slot ({},{}): {}",
                self.cocycle.len(),
                v.a,
                v.b,
                v.l,
                v.m,
                v.residual
            )?;
        }
        Ok(())
    }
}

impl LieBialgebra {
    pub fn new(algebra: LieAlgebra, delta: Vec<TensorElement>) -> Result<Self> {
        let n = algebra.dim();
        if delta.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: delta.len(),
            });
        }
        for d in &delta {
            if d.dim() != n || d.degree() != 2 {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: d.dim(),
                });
            }
            if !d.is_antisymmetric() {
                return Err(Error::NotAntisymmetric);
            }
        }
        Ok(LieBialgebra { algebra, delta })
    }

    /// The zero cocommutator.
    pub fn trivial(algebra: LieAlgebra) -> Self {
        let n = algebra.dim();
        LieBialgebra {
            algebra,
            delta: vec![TensorElement::zeros(n, 2); n],
        }
    }

    /// `δ(X) = (ad_X⊗1 + 1⊗ad_X) r` for an antisymmetric `r`.
    pub fn coboundary(algebra: &LieAlgebra, r: &TensorElement) -> Result<Self> {
        if r.degree() != 2 || r.dim() != algebra.dim() {
            return Err(Error::DimensionMismatch {
                expected: algebra.dim(),
                found: r.dim(),
            });
        }
        if !r.is_antisymmetric() {
            return Err(Error::NotAntisymmetric);
        }
        let delta = (0..algebra.dim())
            .map(|n| r.ad_action(algebra, n))
            .collect::<Result<Vec<_>>>()?;
        Ok(LieBialgebra {
            algebra: algebra.clone(),
            delta,
        })
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// `δ(e_n)`.
    pub fn delta(&self, n: usize) -> &TensorElement {
        &self.delta[n]
    }

    pub fn deltas(&self) -> &[TensorElement] {
        &self.delta
    }

    /// Coefficient of `e_l∧e_m` in `δ(e_n)`, i.e. `½(D^{lm}_n − D^{ml}_n)`.
    ///
    /// These are the structure constants of the dual bracket:
    /// `[ê^l, ê^m] = Σ_n F^{lm}_n ê^n`.
    pub fn wedge_coefficient(&self, n: usize, l: usize, m: usize) -> Poly {
        let d = &self.delta[n];
        (d.get(&[l, m]).clone() - d.get(&[m, l]).clone()).scale(&rat(1, 2))
    }

    /// The Lie algebra on `g*` defined by the cocommutator.
    pub fn dual_algebra(&self, dual_labels: Vec<String>) -> Result<LieAlgebra> {
        let n = self.dim();
        if dual_labels.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: dual_labels.len(),
            });
        }
        let mut structure = vec![Poly::zero(); n * n * n];
        for l in 0..n {
            for m in 0..n {
                for k in 0..n {
                    structure[(l * n + m) * n + k] = self.wedge_coefficient(k, l, m);
                }
            }
        }
        LieAlgebra::from_structure(dual_labels, structure)
    }

    pub fn check_cocycle(&self) -> CocycleReport {
        let n = self.dim();
        let placeholder: Vec<String> = (0..n).map(|i| format!("e{i}")).collect();
        let cojacobi = self
            .dual_algebra(placeholder)
            .map(|d| d.check_jacobi())
            .unwrap_or_default();
        let mut cocycle = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                let mut lhs = TensorElement::zeros(n, 2);
                for k in 0..n {
                    let c = self.algebra.c(a, b, k);
                    if !c.is_zero() {
                        lhs = lhs.add(&self.delta[k].scale(c)).expect("same shape");
                    }
                }
                let rhs = self.delta[b]
                    .ad_action(&self.algebra, a)
                    .and_then(|t| t.sub(&self.delta[a].ad_action(&self.algebra, b)?))
                    .expect("same shape");
                let diff = lhs.sub(&rhs).expect("same shape");
                for (idx, c) in diff.nonzero() {
                    cocycle.push(CocycleViolation {
                        a,
                        b,
                        l: idx[0],
                        m: idx[1],
                        residual: c.clone(),
                    });
                }
            }
        }
        CocycleReport { cojacobi, cocycle }
    }

    /// Dual brackets, reported on `subset` (all coordinates when empty).
    pub fn dual_brackets(&self, dual_labels: Vec<String>, subset: &[&str]) -> Result<DualBrackets> {
        let dual = self.dual_algebra(dual_labels)?;
        let subset = if subset.is_empty() {
            (0..dual.dim()).collect()
        } else {
            subset.iter().map(|s| dual.index_of(s)).collect::<Result<Vec<_>>>()?
        };
        Ok(DualBrackets { dual, subset })
    }

    pub fn substitute(&self, var: &str, value: &Poly) -> LieBialgebra {
        LieBialgebra {
            algebra: self.algebra.substitute(var, value),
            delta: self.delta.iter().map(|d| d.substitute(var, value)).collect(),
        }
    }

    /// One line per generator: `delta(X) = …`.
    pub fn format_table(&self) -> String {
        let labels = self.algebra.labels();
        self.delta
            .iter()
            .zip(labels)
            .map(|(d, l)| format!("delta({l}) = {}", d.format(labels)))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// The first-order brackets among dual coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct DualBrackets {
    dual: LieAlgebra,
    subset: Vec<usize>,
}

impl DualBrackets {
    pub fn algebra(&self) -> &LieAlgebra {
        &self.dual
    }

    pub fn labels(&self) -> &[String] {
        self.dual.labels()
    }

    /// Indices of the reported coordinates, in reporting order.
    pub fn subset(&self) -> &[usize] {
        &self.subset
    }

    pub fn bracket(&self, a: &str, b: &str) -> Result<Vec<Poly>> {
        let (i, j) = (self.dual.index_of(a)?, self.dual.index_of(b)?);
        Ok(self.dual.basis_bracket(i, j))
    }

    /// Pairs of reported coordinates in order, with their brackets.
    pub fn pairs(&self) -> Vec<(usize, usize, Vec<Poly>)> {
        let mut out = Vec::new();
        for (p, &i) in self.subset.iter().enumerate() {
            for &j in &self.subset[p + 1..] {
                out.push((i, j, self.dual.basis_bracket(i, j)));
            }
        }
        out
    }

    pub fn format_table(&self) -> String {
        let labels = self.dual.labels();
        self.pairs()
            .into_iter()
            .map(|(i, j, v)| {
                format!(
                    "[{}, {}] = {}",
                    labels[i],
                    labels[j],
                    crate::algebra::format_combination(labels, &v)
                )
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sl2() -> LieAlgebra {
        let e = |k: usize, c: i64| {
            let mut v = vec![Poly::zero(); 3];
            v[k] = Poly::integer(c);
            v
        };
        LieAlgebra::from_brackets(
            vec!["Y0".into(), "Y1".into(), "Y2".into()],
            &[(0, 1, e(1, 2)), (0, 2, e(2, -2)), (1, 2, e(0, 1))],
        )
        .unwrap()
    }

    fn wedge(i: usize, j: usize) -> TensorElement {
        TensorElement::wedge(&TensorElement::basis(3, i), &TensorElement::basis(3, j)).unwrap()
    }

    #[test]
    fn trivial_bialgebra_is_a_cocycle() {
        assert!(LieBialgebra::trivial(sl2()).check_cocycle().is_ok());
    }

    #[test]
    fn standard_deformation_from_r_matrix() {
        let half_eta = Poly::var("eta").scale(&rat(1, 2));
        let r = wedge(1, 2).scale(&half_eta);
        let b = LieBialgebra::coboundary(&sl2(), &r).unwrap();
        assert!(b.delta(0).is_zero());
        assert_eq!(*b.delta(1), wedge(1, 0).scale(&half_eta));
        assert_eq!(*b.delta(2), wedge(2, 0).scale(&half_eta));
        assert!(b.check_cocycle().is_ok());
    }

    #[test]
    fn ad_hoc_cocommutator_fails() {
        let mut delta = vec![TensorElement::zeros(3, 2); 3];
        delta[1] = wedge(1, 2);
        let b = LieBialgebra::new(sl2(), delta).unwrap();
        let report = b.check_cocycle();
        assert!(!report.is_ok());
        assert!(!report.cocycle.is_empty());
    }

    #[test]
    fn dual_brackets_of_standard_deformation() {
        let half_eta = Poly::var("eta").scale(&rat(1, 2));
        let r = wedge(1, 2).scale(&half_eta);
        let b = LieBialgebra::coboundary(&sl2(), &r).unwrap();
        let d = b
            .dual_brackets(vec!["y0".into(), "y1".into(), "y2".into()], &[])
            .unwrap();
        // [y0, y1] = -(eta/2) y1
        assert_eq!(d.bracket("y0", "y1").unwrap()[1], -half_eta.clone());
        assert!(d.bracket("y1", "y2").unwrap().iter().all(Poly::is_zero));
        assert!(d.algebra().check_jacobi().is_ok());
        assert!(matches!(
            b.dual_brackets(vec!["y0".into(), "y1".into(), "y2".into()], &["q"]),
            Err(Error::UnknownLabel(_))
        ));
    }
}
