//! Lie algebras given by structure constants, and changes of basis.
//!
//! Structure constants are exact polynomials in the formal parameters, so
//! every identity checked here holds for all parameter values at once.

use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::num::{Poly, Rational, Ring, Scalar};
use std::fmt;

/// A finite-dimensional Lie algebra `[e_i, e_j] = c^k_ij e_k`.
#[derive(Clone, Debug, PartialEq)]
pub struct LieAlgebra {
    labels: Vec<String>,
    /// `c^k_ij` stored at `(i·n + j)·n + k`.
    structure: Vec<Poly>,
}

/// Index quadruple at which the Jacobi identity fails, with the residual
/// coefficient of `e_l` in `[[e_i,e_j],e_k] + cyclic`.
#[derive(Clone, Debug, PartialEq)]
pub struct JacobiViolation {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub l: usize,
    pub residual: Poly,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct JacobiReport {
    pub violations: Vec<JacobiViolation>,
}

impl JacobiReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for JacobiReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return write!(f, "Jacobi identity holds");
        }
        writeln!(f, "Jacobi identity fails at {} index tuples:", self.violations.len())?;
        for v in &self.violations {
            writeln!(f, "  (i,j,k) = ({},{},{}), component {}: {}", v.i, v.j, v.k, v.l, v.residual)?;
        }
        Ok(())
    }
}

impl LieAlgebra {
    /// Builds the algebra from brackets `[e_i, e_j] = Σ_k v_k e_k`; the
    /// opposite order is filled in by antisymmetry. Listing both orders is
    /// allowed only if they agree.
    pub fn from_brackets(labels: Vec<String>, brackets: &[(usize, usize, Vec<Poly>)]) -> Result<Self> {
        let n = labels.len();
        let mut alg = LieAlgebra::abelian(labels);
        let mut seen = vec![false; n * n];
        for (i, j, v) in brackets {
            let (i, j) = (*i, *j);
            if i >= n || j >= n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: i.max(j) + 1,
                });
            }
            if v.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: v.len(),
                });
            }
            if i == j {
                if v.iter().any(|c| !c.is_zero()) {
                    return Err(Error::NotAntisymmetricStructure { i, j });
                }
                continue;
            }
            for (k, c) in v.iter().enumerate() {
                if seen[i * n + j] && alg.structure[alg.idx(i, j, k)] != *c {
                    return Err(Error::NotAntisymmetricStructure { i, j });
                }
                let (a, b) = (alg.idx(i, j, k), alg.idx(j, i, k));
                alg.structure[a] = c.clone();
                alg.structure[b] = -c.clone();
            }
            seen[i * n + j] = true;
            seen[j * n + i] = true;
        }
        Ok(alg)
    }

    /// Builds the algebra from a full `c^k_ij` tensor indexed `[i][j][k]`.
    pub fn from_structure(labels: Vec<String>, structure: Vec<Poly>) -> Result<Self> {
        let n = labels.len();
        if structure.len() != n * n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n * n,
                found: structure.len(),
            });
        }
        let alg = LieAlgebra { labels, structure };
        for i in 0..n {
            for j in i..n {
                for k in 0..n {
                    let sum = alg.c(i, j, k).clone() + alg.c(j, i, k).clone();
                    if !sum.is_zero() {
                        return Err(Error::NotAntisymmetricStructure { i, j });
                    }
                }
            }
        }
        Ok(alg)
    }

    pub fn abelian(labels: Vec<String>) -> Self {
        let n = labels.len();
        LieAlgebra {
            labels,
            structure: vec![Poly::zero(); n * n * n],
        }
    }

    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        let n = self.dim();
        (i * n + j) * n + k
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// `c^k_ij`.
    pub fn c(&self, i: usize, j: usize, k: usize) -> &Poly {
        &self.structure[self.idx(i, j, k)]
    }

    pub fn structure(&self) -> &[Poly] {
        &self.structure
    }

    /// `[e_i, e_j]` in basis coordinates.
    pub fn basis_bracket(&self, i: usize, j: usize) -> Vec<Poly> {
        (0..self.dim()).map(|k| self.c(i, j, k).clone()).collect()
    }

    /// `[X, Y] = Σ c^k_ij X^i Y^j e_k`.
    pub fn bracket(&self, x: &[Poly], y: &[Poly]) -> Result<Vec<Poly>> {
        let n = self.dim();
        for v in [x, y] {
            if v.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: v.len(),
                });
            }
        }
        let mut out = vec![Poly::zero(); n];
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero() {
                    continue;
                }
                let xy = &x[i] * &y[j];
                for (k, slot) in out.iter_mut().enumerate() {
                    let c = self.c(i, j, k);
                    if !c.is_zero() {
                        *slot = slot.clone() + c * &xy;
                    }
                }
            }
        }
        Ok(out)
    }

    /// The bracket on dynamically tagged coordinates. Structure constants
    /// enter as polynomials, so a float-mode bracket needs an algebra whose
    /// parameters have already been substituted.
    pub fn bracket_scalar(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>> {
        let n = self.dim();
        for v in [x, y] {
            if v.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: v.len(),
                });
            }
        }
        let mut out: Vec<Scalar> = vec![Scalar::ExactRational(Rational::from_integer(0.into())); n];
        for i in 0..n {
            for j in 0..n {
                let xy = x[i].checked_mul(&y[j])?;
                for (k, slot) in out.iter_mut().enumerate() {
                    let c = self.c(i, j, k);
                    if c.is_zero() {
                        continue;
                    }
                    let term = Scalar::Polynomial(c.clone()).checked_mul(&xy)?;
                    *slot = slot.checked_add(&term)?;
                }
            }
        }
        Ok(out)
    }

    /// Matrix of `ad_{e_i}` acting on coordinate columns: entry `(k, j)` is `c^k_ij`.
    pub fn ad_matrix(&self, i: usize) -> Mat<Poly> {
        let n = self.dim();
        Mat::from_fn(n, n, |k, j| self.c(i, j, k).clone())
    }

    /// Every `(i<j<k, l)` with a nonzero Jacobiator component.
    pub fn check_jacobi(&self) -> JacobiReport {
        let n = self.dim();
        let mut violations = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    for l in 0..n {
                        let mut sum = Poly::zero();
                        for m in 0..n {
                            for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                                let inner = self.c(a, b, m);
                                let outer = self.c(m, c, l);
                                if !inner.is_zero() && !outer.is_zero() {
                                    sum = sum + inner * outer;
                                }
                            }
                        }
                        if !sum.is_zero() {
                            violations.push(JacobiViolation {
                                i,
                                j,
                                k,
                                l,
                                residual: sum,
                            });
                        }
                    }
                }
            }
        }
        JacobiReport { violations }
    }

    /// Structure constants in the basis `e'_a = Σ_i M_ai e_i`.
    pub fn change_basis(&self, m: &BasisChange) -> Result<LieAlgebra> {
        let n = self.dim();
        if m.dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: m.dim(),
            });
        }
        let fwd = m.matrix();
        let inv = m.inverse();
        let mut structure = vec![Poly::zero(); n * n * n];
        for a in 0..n {
            for b in 0..n {
                let ya = fwd.row(a);
                let yb = fwd.row(b);
                let old = self.bracket(ya, yb)?;
                for c in 0..n {
                    let mut acc = Poly::zero();
                    for (k, ok) in old.iter().enumerate() {
                        if !ok.is_zero() && !inv[(k, c)].is_zero() {
                            acc = acc + ok * &inv[(k, c)];
                        }
                    }
                    structure[(a * n + b) * n + c] = acc;
                }
            }
        }
        LieAlgebra::from_structure(m.new_labels().to_vec(), structure)
    }

    pub fn substitute(&self, var: &str, value: &Poly) -> LieAlgebra {
        self.map_coefficients(|c| c.substitute(var, value))
    }

    pub fn map_coefficients(&self, f: impl Fn(&Poly) -> Poly) -> LieAlgebra {
        LieAlgebra {
            labels: self.labels.clone(),
            structure: self.structure.iter().map(f).collect(),
        }
    }

    pub fn with_labels(&self, labels: Vec<String>) -> Result<LieAlgebra> {
        if labels.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: labels.len(),
            });
        }
        Ok(LieAlgebra {
            labels,
            structure: self.structure.clone(),
        })
    }

    /// Nonzero brackets `[e_i, e_j]` with `i < j`.
    pub fn nonzero_brackets(&self) -> Vec<(usize, usize, Vec<Poly>)> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let v = self.basis_bracket(i, j);
                if v.iter().any(|c| !c.is_zero()) {
                    out.push((i, j, v));
                }
            }
        }
        out
    }

    /// One line per pair `i < j`, zero brackets included.
    pub fn format_table(&self) -> String {
        let n = self.dim();
        let mut lines = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                lines.push(format!(
                    "[{}, {}] = {}",
                    self.labels[i],
                    self.labels[j],
                    format_combination(&self.labels, &self.basis_bracket(i, j))
                ));
            }
        }
        lines.join("\n")
    }
}

/// `Σ v_k label_k` in the catalog's expression syntax.
pub fn format_combination(labels: &[String], coeffs: &[Poly]) -> String {
    let terms: Vec<(String, &str)> = coeffs
        .iter()
        .zip(labels)
        .filter(|(c, _)| !c.is_zero())
        .map(|(c, l)| (c.to_string(), l.as_str()))
        .collect();
    format_terms(&terms)
}

/// Joins `(coefficient, symbol)` pairs with signs folded into the operators.
pub(crate) fn format_terms(terms: &[(String, &str)]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (coef, sym)) in terms.iter().enumerate() {
        let compound = coef.contains(" + ") || coef.contains(" - ");
        let (negative, body) = if !compound && coef.starts_with('-') {
            (true, coef[1..].to_string())
        } else {
            (false, coef.clone())
        };
        let piece = if compound {
            format!("({body})*{sym}")
        } else if body == "1" {
            sym.to_string()
        } else {
            format!("{body}*{sym}")
        };
        match (idx, negative) {
            (0, true) => out.push_str(&format!("-{piece}")),
            (0, false) => out.push_str(&piece),
            (_, true) => out.push_str(&format!(" - {piece}")),
            (_, false) => out.push_str(&format!(" + {piece}")),
        }
    }
    out
}

/// Invertible change of basis `e'_a = Σ_i M_ai e_i`.
///
/// The inverse is computed on construction through the adjugate and must
/// itself be polynomial, which requires a nonzero constant determinant.
#[derive(Clone, Debug, PartialEq)]
pub struct BasisChange {
    new_labels: Vec<String>,
    matrix: Mat<Poly>,
    inverse: Mat<Poly>,
}

impl BasisChange {
    pub fn new(new_labels: Vec<String>, matrix: Mat<Poly>) -> Result<Self> {
        let n = new_labels.len();
        if matrix.rows() != n || matrix.cols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: matrix.rows(),
            });
        }
        let det = matrix.det();
        if det.is_zero() {
            return Err(Error::SingularBasisChange);
        }
        let Some(d) = det.as_constant() else {
            return Err(Error::NonPolynomialInverse(det.to_string()));
        };
        let scale = Poly::constant(num_traits::Inv::inv(d));
        let inverse = matrix.adjugate().scale(&scale);
        Ok(BasisChange {
            new_labels,
            matrix,
            inverse,
        })
    }

    pub fn identity(labels: Vec<String>) -> Self {
        let n = labels.len();
        BasisChange {
            new_labels: labels,
            matrix: Mat::identity(n),
            inverse: Mat::identity(n),
        }
    }

    pub fn dim(&self) -> usize {
        self.new_labels.len()
    }

    pub fn new_labels(&self) -> &[String] {
        &self.new_labels
    }

    /// Row `a` holds the old-basis coordinates of `e'_a`.
    pub fn matrix(&self) -> &Mat<Poly> {
        &self.matrix
    }

    /// Row `i` holds the new-basis coordinates of the old `e_i`.
    pub fn inverse(&self) -> &Mat<Poly> {
        &self.inverse
    }

    /// The reverse change, labelled with the original basis names.
    pub fn inverted(&self, old_labels: Vec<String>) -> Result<BasisChange> {
        if old_labels.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: old_labels.len(),
            });
        }
        Ok(BasisChange {
            new_labels: old_labels,
            matrix: self.inverse.clone(),
            inverse: self.matrix.clone(),
        })
    }

    /// Old-basis coordinates to new-basis coordinates.
    pub fn transform_vector(&self, v: &[Poly]) -> Vec<Poly> {
        let n = self.dim();
        (0..n)
            .map(|c| {
                v.iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .fold(Poly::zero(), |acc, (i, x)| acc + x * &self.inverse[(i, c)])
            })
            .collect()
    }

    pub fn substitute(&self, var: &str, value: &Poly) -> Result<BasisChange> {
        BasisChange::new(
            self.new_labels.clone(),
            self.matrix.map(|p| p.substitute(var, value)),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::rat;

    fn labels(s: &str) -> Vec<String> {
        s.split_whitespace().map(String::from).collect()
    }

    fn vec_of(n: usize, entries: &[(usize, i64)]) -> Vec<Poly> {
        let mut v = vec![Poly::zero(); n];
        for &(k, c) in entries {
            v[k] = Poly::integer(c);
        }
        v
    }

    fn sl2() -> LieAlgebra {
        LieAlgebra::from_brackets(
            labels("Y0 Y1 Y2"),
            &[
                (0, 1, vec_of(3, &[(1, 2)])),
                (0, 2, vec_of(3, &[(2, -2)])),
                (1, 2, vec_of(3, &[(0, 1)])),
            ],
        )
        .unwrap()
    }

    #[test]
    fn sl2_brackets() {
        let a = sl2();
        let y0 = vec_of(3, &[(0, 1)]);
        let y1 = vec_of(3, &[(1, 1)]);
        assert_eq!(a.bracket(&y0, &y1).unwrap(), vec_of(3, &[(1, 2)]));
        assert_eq!(a.bracket(&y1, &y0).unwrap(), vec_of(3, &[(1, -2)]));
        assert!(a.check_jacobi().is_ok());
    }

    #[test]
    fn bracket_rejects_wrong_dimension() {
        let a = sl2();
        let err = a.bracket(&vec_of(2, &[]), &vec_of(3, &[])).unwrap_err();
        assert_eq!(err, Error::DimensionMismatch { expected: 3, found: 2 });
    }

    #[test]
    fn bracket_scalar_modes() {
        let a = sl2();
        let x: Vec<Scalar> = [1.0, 0.5, 0.0].iter().map(|&v| Scalar::from(v)).collect();
        let y: Vec<Scalar> = [0.0, 1.0, 2.0].iter().map(|&v| Scalar::from(v)).collect();
        let z = a.bracket_scalar(&x, &y).unwrap();
        // [Y0 + Y1/2, Y1 + 2Y2] = 2Y1 - 4Y2 + Y0
        let got: Vec<f64> = z.iter().map(|s| s.to_f64().unwrap()).collect();
        assert_eq!(got, vec![1.0, 2.0, -4.0]);
        let sym = a.map_coefficients(|c| c.clone() * Poly::var("eta"));
        assert!(matches!(
            sym.bracket_scalar(&x, &y),
            Err(Error::IncompatibleScalars { .. })
        ));
    }

    #[test]
    fn inconsistent_duplicate_brackets_are_rejected() {
        let res = LieAlgebra::from_brackets(
            labels("A B"),
            &[(0, 1, vec_of(2, &[(0, 1)])), (1, 0, vec_of(2, &[(0, 1)]))],
        );
        assert!(res.is_err());
    }

    #[test]
    fn broken_jacobi_is_located() {
        // [A,B] = C and [B,C] = A close; [A,C] = A spoils the Jacobi identity.
        let a = LieAlgebra::from_brackets(
            labels("A B C"),
            &[
                (0, 1, vec_of(3, &[(2, 1)])),
                (1, 2, vec_of(3, &[(0, 1)])),
                (0, 2, vec_of(3, &[(0, 1)])),
            ],
        )
        .unwrap();
        let report = a.check_jacobi();
        assert!(!report.is_ok());
        assert!(report.violations.iter().all(|v| (v.i, v.j, v.k) == (0, 1, 2)));
    }

    #[test]
    fn identity_change_is_neutral() {
        let a = sl2();
        let id = BasisChange::identity(a.labels().to_vec());
        assert_eq!(a.change_basis(&id).unwrap(), a);
    }

    #[test]
    fn singular_change_is_rejected() {
        let m = Mat::from_rows(vec![
            vec![Poly::integer(1), Poly::integer(1)],
            vec![Poly::integer(2), Poly::integer(2)],
        ]);
        assert_eq!(BasisChange::new(labels("A B"), m).unwrap_err(), Error::SingularBasisChange);
        let eta = Poly::var("eta");
        let m = Mat::from_rows(vec![
            vec![eta.clone(), Poly::zero()],
            vec![Poly::zero(), Poly::integer(1)],
        ]);
        assert!(matches!(
            BasisChange::new(labels("A B"), m),
            Err(Error::NonPolynomialInverse(_))
        ));
    }

    #[test]
    fn change_and_back() {
        let a = sl2();
        let m = Mat::from_rows(vec![
            vec![Poly::zero(), Poly::constant(rat(-1, 2)), Poly::constant(rat(1, 2))],
            vec![Poly::constant(rat(1, 2)), Poly::zero(), Poly::zero()],
            vec![Poly::zero(), Poly::constant(rat(1, 2)), Poly::constant(rat(1, 2))],
        ]);
        let bc = BasisChange::new(labels("J0 J1 J2"), m).unwrap();
        let so21 = a.change_basis(&bc).unwrap();
        // [J0, J1] = J2
        assert_eq!(so21.basis_bracket(0, 1), vec_of(3, &[(2, 1)]));
        let back = so21.change_basis(&bc.inverted(a.labels().to_vec()).unwrap()).unwrap();
        assert_eq!(back, a);
    }

    #[test]
    fn table_formatting() {
        let a = sl2();
        assert_eq!(a.format_table(), "[Y0, Y1] = 2*Y1\n[Y0, Y2] = -2*Y2\n[Y1, Y2] = Y0");
    }
}
