//! Dense tensors over a Lie algebra basis: r-matrices, cocommutator values,
//! Casimir elements and the Schouten bracket.

use crate::algebra::{format_terms, BasisChange, LieAlgebra};
use crate::error::{Error, Result};
use crate::num::{rat, Poly, Ring};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Symmetry {
    None,
    Symmetric,
    Antisymmetric,
}

/// Element of `g^{⊗d}` stored by full multi-index, `e_{i1}⊗…⊗e_{id}`.
#[derive(Clone, Debug, PartialEq)]
pub struct TensorElement {
    dim: usize,
    degree: usize,
    coeffs: Vec<Poly>,
}

impl TensorElement {
    pub fn zeros(dim: usize, degree: usize) -> Self {
        TensorElement {
            dim,
            degree,
            coeffs: vec![Poly::zero(); dim.pow(degree as u32)],
        }
    }

    pub fn vector(coeffs: Vec<Poly>) -> Self {
        TensorElement {
            dim: coeffs.len(),
            degree: 1,
            coeffs,
        }
    }

    /// Unit vector `e_i`.
    pub fn basis(dim: usize, i: usize) -> Self {
        let mut t = TensorElement::zeros(dim, 1);
        t.coeffs[i] = Poly::integer(1);
        t
    }

    pub fn from_components(dim: usize, degree: usize, coeffs: Vec<Poly>) -> Result<Self> {
        let expected = dim.pow(degree as u32);
        if coeffs.len() != expected {
            return Err(Error::DimensionMismatch {
                expected,
                found: coeffs.len(),
            });
        }
        Ok(TensorElement { dim, degree, coeffs })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn components(&self) -> &[Poly] {
        &self.coeffs
    }

    fn flat(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.degree);
        idx.iter().fold(0, |acc, &i| acc * self.dim + i)
    }

    fn unflat(&self, mut pos: usize) -> Vec<usize> {
        let mut idx = vec![0; self.degree];
        for slot in idx.iter_mut().rev() {
            *slot = pos % self.dim;
            pos /= self.dim;
        }
        idx
    }

    pub fn get(&self, idx: &[usize]) -> &Poly {
        &self.coeffs[self.flat(idx)]
    }

    pub fn set(&mut self, idx: &[usize], value: Poly) {
        let p = self.flat(idx);
        self.coeffs[p] = value;
    }

    /// Iterates over nonzero components with their multi-indices.
    pub fn nonzero(&self) -> impl Iterator<Item = (Vec<usize>, &Poly)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(p, c)| (self.unflat(p), c))
    }

    fn check_same_shape(&self, other: &TensorElement) -> Result<()> {
        if self.dim != other.dim || self.degree != other.degree {
            return Err(Error::DimensionMismatch {
                expected: self.coeffs.len(),
                found: other.coeffs.len(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &TensorElement) -> Result<TensorElement> {
        self.check_same_shape(other)?;
        Ok(self.zip(other, |a, b| a.clone() + b.clone()))
    }

    pub fn sub(&self, other: &TensorElement) -> Result<TensorElement> {
        self.check_same_shape(other)?;
        Ok(self.zip(other, |a, b| a.clone() - b.clone()))
    }

    fn zip(&self, other: &TensorElement, f: impl Fn(&Poly, &Poly) -> Poly) -> TensorElement {
        TensorElement {
            dim: self.dim,
            degree: self.degree,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn scale(&self, s: &Poly) -> TensorElement {
        self.map(|c| c * s)
    }

    pub fn neg(&self) -> TensorElement {
        self.map(|c| -c.clone())
    }

    pub fn map(&self, f: impl Fn(&Poly) -> Poly) -> TensorElement {
        TensorElement {
            dim: self.dim,
            degree: self.degree,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn substitute(&self, var: &str, value: &Poly) -> TensorElement {
        self.map(|c| c.substitute(var, value))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Poly::is_zero)
    }

    /// `self ⊗ other`.
    pub fn tensor(&self, other: &TensorElement) -> Result<TensorElement> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() * other.coeffs.len());
        for a in &self.coeffs {
            for b in &other.coeffs {
                coeffs.push(if a.is_zero() || b.is_zero() { Poly::zero() } else { a * b });
            }
        }
        Ok(TensorElement {
            dim: self.dim,
            degree: self.degree + other.degree,
            coeffs,
        })
    }

    /// `a∧b = a⊗b − b⊗a`.
    pub fn wedge(a: &TensorElement, b: &TensorElement) -> Result<TensorElement> {
        a.tensor(b)?.sub(&b.tensor(a)?)
    }

    /// `a·b = ½(a⊗b + b⊗a)`.
    pub fn sym_product(a: &TensorElement, b: &TensorElement) -> Result<TensorElement> {
        Ok(a.tensor(b)?.add(&b.tensor(a)?)?.scale(&Poly::constant(rat(1, 2))))
    }

    /// Reorders slots: component `idx` of the result is component
    /// `idx[perm[0]], idx[perm[1]], …` of `self`.
    pub fn permute(&self, perm: &[usize]) -> TensorElement {
        assert_eq!(perm.len(), self.degree);
        let mut out = TensorElement::zeros(self.dim, self.degree);
        for p in 0..self.coeffs.len() {
            let idx = out.unflat(p);
            let src: Vec<usize> = perm.iter().map(|&s| idx[s]).collect();
            out.coeffs[p] = self.get(&src).clone();
        }
        out
    }

    /// Slot swap of a 2-tensor.
    pub fn transpose(&self) -> TensorElement {
        self.permute(&[1, 0])
    }

    pub fn symmetric_part(&self) -> TensorElement {
        self.add(&self.transpose())
            .expect("same shape")
            .scale(&Poly::constant(rat(1, 2)))
    }

    pub fn antisymmetric_part(&self) -> TensorElement {
        self.sub(&self.transpose())
            .expect("same shape")
            .scale(&Poly::constant(rat(1, 2)))
    }

    /// Symmetry under every transposition of adjacent slots.
    pub fn symmetry(&self) -> Symmetry {
        if self.degree < 2 {
            return Symmetry::None;
        }
        let swaps: Vec<TensorElement> = (0..self.degree - 1)
            .map(|s| {
                let mut perm: Vec<usize> = (0..self.degree).collect();
                perm.swap(s, s + 1);
                self.permute(&perm)
            })
            .collect();
        if swaps.iter().all(|t| t == self) {
            Symmetry::Symmetric
        } else if swaps.iter().all(|t| *t == self.neg()) {
            Symmetry::Antisymmetric
        } else {
            Symmetry::None
        }
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.symmetry() == Symmetry::Antisymmetric || (self.degree >= 2 && self.is_zero())
    }

    /// Diagonal adjoint action of `e_z`, acting as a derivation on every slot.
    pub fn ad_action(&self, alg: &LieAlgebra, z: usize) -> Result<TensorElement> {
        if alg.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: alg.dim(),
                found: self.dim,
            });
        }
        let mut out = TensorElement::zeros(self.dim, self.degree);
        for (idx, c) in self.nonzero() {
            for slot in 0..self.degree {
                for k in 0..self.dim {
                    let s = alg.c(z, idx[slot], k);
                    if s.is_zero() {
                        continue;
                    }
                    let mut target = idx.clone();
                    target[slot] = k;
                    let p = out.flat(&target);
                    out.coeffs[p] = out.coeffs[p].clone() + s * c;
                }
            }
        }
        Ok(out)
    }

    /// Components in the basis of `m`, slot by slot.
    pub fn change_basis(&self, m: &BasisChange) -> Result<TensorElement> {
        if m.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: m.dim(),
            });
        }
        let inv = m.inverse();
        let mut cur = self.clone();
        for slot in 0..self.degree {
            let mut next = TensorElement::zeros(self.dim, self.degree);
            for (idx, c) in cur.nonzero() {
                for k in 0..self.dim {
                    let s = &inv[(idx[slot], k)];
                    if s.is_zero() {
                        continue;
                    }
                    let mut target = idx.clone();
                    target[slot] = k;
                    let p = next.flat(&target);
                    next.coeffs[p] = next.coeffs[p].clone() + c * s;
                }
            }
            cur = next;
        }
        Ok(cur)
    }

    /// Human-readable and parseable form. Antisymmetric 2-tensors use `/\`,
    /// symmetric ones use `.` for `½(a⊗b + b⊗a)`, everything else `(x)`.
    pub fn format(&self, labels: &[String]) -> String {
        if self.degree == 1 {
            let terms: Vec<(String, &str)> = self
                .coeffs
                .iter()
                .zip(labels)
                .filter(|(c, _)| !c.is_zero())
                .map(|(c, l)| (c.to_string(), l.as_str()))
                .collect();
            return format_terms(&terms);
        }
        let mut names = Vec::new();
        let mut coefs = Vec::new();
        let symmetry = if self.degree == 2 { self.symmetry() } else { Symmetry::None };
        for (idx, c) in self.nonzero() {
            let (i, j) = if self.degree == 2 { (idx[0], idx[1]) } else { (0, 0) };
            let (coef, name) = match symmetry {
                Symmetry::Antisymmetric if i < j => (c.clone(), format!("{}/\\{}", labels[i], labels[j])),
                Symmetry::Symmetric if i == j => (c.clone(), format!("{}.{}", labels[i], labels[j])),
                Symmetry::Symmetric if i < j => (c.scale(&rat(2, 1)), format!("{}.{}", labels[i], labels[j])),
                Symmetry::Antisymmetric | Symmetry::Symmetric => continue,
                Symmetry::None => (
                    c.clone(),
                    idx.iter().map(|&k| labels[k].as_str()).collect::<Vec<_>>().join("(x)"),
                ),
            };
            coefs.push(coef.to_string());
            names.push(name);
        }
        let terms: Vec<(String, &str)> = coefs.into_iter().zip(names.iter().map(String::as_str)).collect();
        format_terms(&terms)
    }
}

/// Algebraic Schouten bracket `[[r,r]] = [r12,r13] + [r12,r23] + [r13,r23]`.
pub fn schouten(r: &TensorElement, alg: &LieAlgebra) -> Result<TensorElement> {
    if r.degree() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: r.degree(),
        });
    }
    if r.dim() != alg.dim() {
        return Err(Error::DimensionMismatch {
            expected: alg.dim(),
            found: r.dim(),
        });
    }
    if !r.is_antisymmetric() {
        return Err(Error::NotAntisymmetric);
    }
    let n = alg.dim();
    let mut out = TensorElement::zeros(n, 3);
    let nz: Vec<(Vec<usize>, Poly)> = r.nonzero().map(|(i, c)| (i, c.clone())).collect();
    let mut add = |idx: [usize; 3], v: Poly| {
        let p = out.flat(&idx);
        out.coeffs[p] = out.coeffs[p].clone() + v;
    };
    for (a, rij) in &nz {
        for (b, rkl) in &nz {
            let (i, j, k, l) = (a[0], a[1], b[0], b[1]);
            let prod = rij * rkl;
            for m in 0..n {
                // [r12, r13]: [e_i, e_k] ⊗ e_j ⊗ e_l
                let c = alg.c(i, k, m);
                if !c.is_zero() {
                    add([m, j, l], c * &prod);
                }
                // [r12, r23]: e_i ⊗ [e_j, e_k] ⊗ e_l
                let c = alg.c(j, k, m);
                if !c.is_zero() {
                    add([i, m, l], c * &prod);
                }
                // [r13, r23]: e_i ⊗ e_k ⊗ [e_j, e_l]
                let c = alg.c(j, l, m);
                if !c.is_zero() {
                    add([i, k, m], c * &prod);
                }
            }
        }
    }
    Ok(out)
}

/// A nonzero component of `ad_{e_z} T`.
#[derive(Clone, Debug, PartialEq)]
pub struct InvarianceFailure {
    pub generator: usize,
    pub index: Vec<usize>,
    pub residual: Poly,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct InvarianceReport {
    pub failures: Vec<InvarianceFailure>,
}

impl InvarianceReport {
    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for InvarianceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.failures.first() {
            None => write!(f, "ad-invariant"),
            Some(first) => write!(
                f,
                "not ad-invariant: {} nonzero components, first under generator {} at {:?}: {}",
                self.failures.len(),
                first.generator,
                first.index,
                first.residual
            ),
        }
    }
}

/// Checks that the diagonal adjoint action of every basis generator kills `t`.
pub fn ad_invariant(t: &TensorElement, alg: &LieAlgebra) -> Result<InvarianceReport> {
    let mut failures = Vec::new();
    for z in 0..alg.dim() {
        let moved = t.ad_action(alg, z)?;
        for (index, c) in moved.nonzero() {
            failures.push(InvarianceFailure {
                generator: z,
                index,
                residual: c.clone(),
            });
        }
    }
    Ok(InvarianceReport { failures })
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

    fn e(i: usize) -> TensorElement {
        TensorElement::basis(3, i)
    }

    #[test]
    fn wedge_is_antisymmetric() {
        let w = TensorElement::wedge(&e(0), &e(2)).unwrap();
        assert_eq!(w.symmetry(), Symmetry::Antisymmetric);
        assert_eq!(*w.get(&[0, 2]), Poly::integer(1));
        assert_eq!(*w.get(&[2, 0]), Poly::integer(-1));
        assert!(w.get(&[1, 1]).is_zero());
    }

    #[test]
    fn schouten_of_zero_is_zero() {
        let r = TensorElement::zeros(3, 2);
        assert!(schouten(&r, &sl2()).unwrap().is_zero());
    }

    #[test]
    fn schouten_rejects_non_antisymmetric() {
        let r = e(0).tensor(&e(1)).unwrap();
        assert_eq!(schouten(&r, &sl2()).unwrap_err(), Error::NotAntisymmetric);
    }

    #[test]
    fn killing_form_dual_is_invariant() {
        // Casimir of sl2 in this basis: ½Y0⊗Y0 + Y1⊗Y2 + Y2⊗Y1
        let half = Poly::constant(rat(1, 2));
        let c = e(0)
            .tensor(&e(0))
            .unwrap()
            .scale(&half)
            .add(&TensorElement::sym_product(&e(1), &e(2)).unwrap().scale(&Poly::integer(2)))
            .unwrap();
        assert!(ad_invariant(&c, &sl2()).unwrap().is_ok());
        let generic = e(0).tensor(&e(1)).unwrap();
        assert!(!ad_invariant(&generic, &sl2()).unwrap().is_ok());
    }

    #[test]
    fn standard_r_matrix_schouten_is_invariant_and_alternating() {
        let eta = Poly::var("eta");
        let r = TensorElement::wedge(&e(1), &e(2))
            .unwrap()
            .scale(&eta.scale(&rat(1, 2)));
        let s = schouten(&r, &sl2()).unwrap();
        assert!(!s.is_zero());
        assert_eq!(s.symmetry(), Symmetry::Antisymmetric);
        assert!(ad_invariant(&s, &sl2()).unwrap().is_ok());
    }

    #[test]
    fn formatting() {
        let labels: Vec<String> = vec!["A".into(), "B".into(), "C".into()];
        let w = TensorElement::wedge(&e(0), &e(2)).unwrap().scale(&Poly::var("xi"));
        assert_eq!(w.format(&labels), "xi*A/\\C");
        let s = TensorElement::sym_product(&e(0), &e(1)).unwrap();
        assert_eq!(s.format(&labels), "A.B");
        let t = e(0).tensor(&e(1)).unwrap().scale(&Poly::integer(-1));
        assert_eq!(t.format(&labels), "-A(x)B");
    }
}
