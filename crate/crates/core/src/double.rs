//! The Drinfel'd double of a Lie bialgebra and its canonical r-matrix.

use crate::algebra::{BasisChange, LieAlgebra};
use crate::bialgebra::{CocycleReport, LieBialgebra};
use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::num::{rat, Poly, Ring};
use crate::tensor::TensorElement;

/// `D(g) = g ⊕ g*` on the basis `(Y_0…Y_{n-1}, y^0…y^{n-1})`.
#[derive(Clone, Debug, PartialEq)]
pub struct DrinfeldDouble {
    algebra: LieAlgebra,
    pairing: Mat<Poly>,
    source: LieBialgebra,
}

/// Canonical r-matrix `r = Σ y^i⊗Y_i` with its skew part and symmetric part.
#[derive(Clone, Debug, PartialEq)]
pub struct CanonicalR {
    pub r: TensorElement,
    /// `r′ = ½ Σ y^i∧Y_i`.
    pub skew: TensorElement,
    pub symmetric: TensorElement,
}

/// A basis triple `(Z, X, W)` where `⟨[Z,X],W⟩ + ⟨X,[Z,W]⟩ ≠ 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct PairingFailure {
    pub z: usize,
    pub x: usize,
    pub w: usize,
    pub residual: Poly,
}

/// Dual generator names: `Y1 → y1`, `J0 → j0`.
pub fn dual_label(label: &str) -> String {
    let mut chars = label.chars();
    match chars.next() {
        Some(c) => c.to_lowercase().chain(chars).collect(),
        None => String::new(),
    }
}

impl DrinfeldDouble {
    /// Builds the double; the bialgebra must satisfy the cocycle conditions.
    pub fn build(source: &LieBialgebra) -> Result<Self> {
        let report: CocycleReport = source.check_cocycle();
        if !report.is_ok() {
            return Err(Error::CocycleFailure(report.to_string()));
        }
        let g = source.algebra();
        let n = g.dim();
        let mut labels: Vec<String> = g.labels().to_vec();
        labels.extend(g.labels().iter().map(|l| dual_label(l)));
        let dd = 2 * n;
        let mut structure = vec![Poly::zero(); dd * dd * dd];
        let at = |i: usize, j: usize, k: usize| (i * dd + j) * dd + k;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    // [Y_i, Y_j] = c^k_ij Y_k
                    structure[at(i, j, k)] = g.c(i, j, k).clone();
                    // [y^i, y^j] = F^{ij}_k y^k
                    structure[at(n + i, n + j, n + k)] = source.wedge_coefficient(k, i, j);
                    // [y^i, Y_j] = c^i_jk y^k − F^{ik}_j Y_k
                    let to_dual = g.c(j, k, i).clone();
                    let to_base = -source.wedge_coefficient(j, i, k);
                    structure[at(n + i, j, n + k)] = to_dual.clone();
                    structure[at(j, n + i, n + k)] = -to_dual;
                    structure[at(n + i, j, k)] = to_base.clone();
                    structure[at(j, n + i, k)] = -to_base;
                }
            }
        }
        let algebra = LieAlgebra::from_structure(labels, structure)?;
        let pairing = Mat::from_fn(dd, dd, |a, b| {
            if a.abs_diff(b) == n {
                Poly::integer(1)
            } else {
                Poly::zero()
            }
        });
        Ok(DrinfeldDouble {
            algebra,
            pairing,
            source: source.clone(),
        })
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn source(&self) -> &LieBialgebra {
        &self.source
    }

    /// Half dimension `n`.
    pub fn rank(&self) -> usize {
        self.source.dim()
    }

    pub fn pairing(&self) -> &Mat<Poly> {
        &self.pairing
    }

    /// Gram matrix `⟨e′_a, e′_b⟩` in a new basis.
    pub fn pairing_in_basis(&self, m: &BasisChange) -> Mat<Poly> {
        m.matrix().mul(&self.pairing).mul(&m.matrix().transpose())
    }

    pub fn check_pairing_invariance(&self) -> Vec<PairingFailure> {
        let d = self.algebra.dim();
        let mut out = Vec::new();
        for z in 0..d {
            for x in 0..d {
                for w in x..d {
                    let mut acc = Poly::zero();
                    for k in 0..d {
                        let c1 = self.algebra.c(z, x, k);
                        if !c1.is_zero() && !self.pairing[(k, w)].is_zero() {
                            acc = acc + c1 * &self.pairing[(k, w)];
                        }
                        let c2 = self.algebra.c(z, w, k);
                        if !c2.is_zero() && !self.pairing[(x, k)].is_zero() {
                            acc = acc + c2 * &self.pairing[(x, k)];
                        }
                    }
                    if !acc.is_zero() {
                        out.push(PairingFailure { z, x, w, residual: acc });
                    }
                }
            }
        }
        out
    }

    /// `Ω = Σ (K⁻¹)^{ab} e_a⊗e_b` for the pairing matrix `K`.
    pub fn pairing_dual_tensor(&self) -> TensorElement {
        // K is the swap of the two halves, which is its own inverse.
        let d = self.algebra.dim();
        let coeffs = (0..d * d).map(|p| self.pairing[(p / d, p % d)].clone()).collect();
        TensorElement::from_components(d, 2, coeffs).expect("square pairing")
    }

    pub fn canonical_r(&self) -> CanonicalR {
        let n = self.rank();
        let d = 2 * n;
        let mut r = TensorElement::zeros(d, 2);
        for i in 0..n {
            r.set(&[n + i, i], Poly::integer(1));
        }
        CanonicalR {
            skew: r.antisymmetric_part(),
            symmetric: r.symmetric_part(),
            r,
        }
    }

    /// Whether the symmetric part of `r` equals `½Ω`.
    pub fn symmetric_part_is_half_casimir(&self) -> bool {
        let half = Poly::constant(rat(1, 2));
        self.canonical_r().symmetric == self.pairing_dual_tensor().scale(&half)
    }

    pub fn substitute(&self, var: &str, value: &Poly) -> DrinfeldDouble {
        DrinfeldDouble {
            algebra: self.algebra.substitute(var, value),
            pairing: self.pairing.map(|p| p.substitute(var, value)),
            source: self.source.substitute(var, value),
        }
    }
}

/// Free-function spelling of [`DrinfeldDouble::build`].
pub fn build_double(source: &LieBialgebra) -> Result<DrinfeldDouble> {
    DrinfeldDouble::build(source)
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

    #[test]
    fn trivial_double_is_semidirect() {
        let d = build_double(&LieBialgebra::trivial(sl2())).unwrap();
        assert_eq!(d.algebra().labels()[3], "y0");
        assert!(d.algebra().check_jacobi().is_ok());
        assert!(d.check_pairing_invariance().is_empty());
        // [y0, Y1] = y2
        let v = d.algebra().basis_bracket(3, 1);
        assert_eq!(v[5], Poly::integer(1));
        assert!(v.iter().enumerate().all(|(k, c)| k == 5 || c.is_zero()));
        // y-sector abelian
        for i in 3..6 {
            for j in 3..6 {
                assert!(d.algebra().basis_bracket(i, j).iter().all(Poly::is_zero));
            }
        }
        assert!(d.symmetric_part_is_half_casimir());
    }

    #[test]
    fn cocycle_failure_is_rejected() {
        let mut delta = vec![TensorElement::zeros(3, 2); 3];
        delta[1] = TensorElement::wedge(&TensorElement::basis(3, 1), &TensorElement::basis(3, 2)).unwrap();
        let b = LieBialgebra::new(sl2(), delta).unwrap();
        assert!(matches!(build_double(&b), Err(Error::CocycleFailure(_))));
    }

    #[test]
    fn dual_labels() {
        assert_eq!(dual_label("Y1"), "y1");
        assert_eq!(dual_label("J0"), "j0");
    }
}
