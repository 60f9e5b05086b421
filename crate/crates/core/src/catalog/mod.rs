//! The fixture catalog: every concrete algebra, basis change, r-matrix and
//! expected table, transcribed into `fixtures/catalog.txt`.
//!
//! Entries are plain data. Typed accessors turn them into [`LieAlgebra`],
//! [`LieBialgebra`], [`BasisChange`] and [`TensorElement`] values, and
//! [`verify::verify_all`] runs the cross-checks between them.

pub mod parse;
pub mod render;
pub mod verify;

pub use parse::{CatalogEntry, Kind, Statement, Value};
pub use render::{table_view, TableView};
pub use verify::{verify_all, CheckRecord, Status};

use crate::algebra::{BasisChange, LieAlgebra};
use crate::bialgebra::LieBialgebra;
use crate::double::DrinfeldDouble;
use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::num::{Poly, Ring};
use crate::tensor::TensorElement;
use sha2::{Digest, Sha256};
use std::path::Path;

/// The shipped fixture text.
pub const BUILTIN_CATALOG: &str = include_str!("../../fixtures/catalog.txt");

#[derive(Clone, Debug, PartialEq)]
pub struct Catalog {
    entries: Vec<CatalogEntry>,
    checksum: String,
}

/// An r-matrix fixture together with the algebra it lives in.
#[derive(Clone, Debug, PartialEq)]
pub struct RMatrixFixture {
    pub algebra: LieAlgebra,
    pub r: TensorElement,
}

/// Expected first-order dual brackets.
#[derive(Clone, Debug, PartialEq)]
pub struct DualTable {
    pub coordinates: Vec<String>,
    pub subset: Vec<String>,
    /// `(left, right, bracket)` in coordinate components.
    pub brackets: Vec<(String, String, Vec<Poly>)>,
}

impl Catalog {
    /// The catalog compiled into the crate.
    pub fn builtin() -> Catalog {
        Catalog::parse(BUILTIN_CATALOG).expect("shipped fixture catalog is valid")
    }

    /// Parses and structurally validates a catalog.
    pub fn parse(text: &str) -> Result<Catalog> {
        let entries = parse::parse_catalog(text)?;
        let digest = Sha256::digest(text.as_bytes());
        let checksum = digest.iter().map(|b| format!("{b:02x}")).collect();
        let cat = Catalog { entries, checksum };
        cat.validate()?;
        Ok(cat)
    }

    pub fn load(path: &Path) -> Result<Catalog> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
            line: 0,
            message: format!("cannot read {}: {e}", path.display()),
        })?;
        Catalog::parse(&text)
    }

    /// Every entry must build into its typed form.
    fn validate(&self) -> Result<()> {
        for e in &self.entries {
            let res = match e.kind {
                Kind::Algebra | Kind::Double => self.algebra(&e.id).map(drop),
                Kind::Bialgebra => self.bialgebra(&e.id).map(drop),
                Kind::RMatrix => self.r_matrix(&e.id).map(drop),
                Kind::BasisChange => self.basis_change(&e.id).map(drop),
                Kind::ExpectedTable => match e.field("table") {
                    Some("cocommutator") => self.cocommutator_table(&e.id).map(drop),
                    Some("dual-brackets") => self.dual_table(&e.id).map(drop),
                    Some("casimirs") => self.casimir_table(&e.id).map(drop),
                    Some("pairing") => self.pairing_table(&e.id).map(drop),
                    other => Err(Error::Parse {
                        line: 0,
                        message: format!("entry `{}` has unknown table type {other:?}", e.id),
                    }),
                },
            };
            res.map_err(|err| match err {
                Error::Parse { .. } => err,
                other => Error::Parse {
                    line: 0,
                    message: format!("entry `{}`: {other}", e.id),
                },
            })?;
        }
        Ok(())
    }

    /// SHA-256 of the source text, hex encoded.
    pub fn checksum(&self) -> &str {
        &self.checksum
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn ids(&self) -> Vec<&str> {
        self.entries.iter().map(|e| e.id.as_str()).collect()
    }

    pub fn get(&self, id: &str) -> Result<&CatalogEntry> {
        self.entries
            .iter()
            .find(|e| e.id == id)
            .ok_or_else(|| Error::UnknownCatalogId {
                id: id.to_string(),
                known: self.ids().join(", "),
            })
    }

    /// Canonical text of all entries; parses back to an equal catalog.
    pub fn to_text(&self) -> String {
        self.entries
            .iter()
            .map(CatalogEntry::to_text)
            .collect::<Vec<_>>()
            .join("\n")
    }

    /// The catalog with `var` replaced by `value` in every coefficient.
    pub fn specialize(&self, var: &str, value: &Poly) -> Catalog {
        Catalog {
            entries: self.entries.iter().map(|e| e.substitute(var, value)).collect(),
            checksum: self.checksum.clone(),
        }
    }

    fn entry_of(&self, id: &str, kinds: &[Kind]) -> Result<&CatalogEntry> {
        let e = self.get(id)?;
        if !kinds.contains(&e.kind) {
            return Err(Error::WrongEntryKind {
                id: id.to_string(),
                expected: kinds.iter().map(|k| k.as_str()).collect::<Vec<_>>().join(" or "),
                found: e.kind.to_string(),
            });
        }
        Ok(e)
    }

    fn required<'a>(e: &'a CatalogEntry, key: &str) -> Result<&'a str> {
        e.field(key).ok_or_else(|| Error::Parse {
            line: 0,
            message: format!("entry `{}` lacks the `{key}` field", e.id),
        })
    }

    /// Structure constants of an `algebra` entry, or the expected table of a
    /// `double` entry.
    pub fn algebra(&self, id: &str) -> Result<LieAlgebra> {
        let e = self.entry_of(id, &[Kind::Algebra, Kind::Double])?;
        let labels = words(Self::required(e, "basis")?);
        let mut brackets = Vec::new();
        for s in &e.statements {
            let Statement::Bracket { left, right, value } = s else {
                return Err(unexpected(e, s));
            };
            let i = index(&labels, left)?;
            let j = index(&labels, right)?;
            brackets.push((i, j, vector_of(value, &labels)?));
        }
        LieAlgebra::from_brackets(labels, &brackets)
    }

    pub fn bialgebra(&self, id: &str) -> Result<LieBialgebra> {
        let e = self.entry_of(id, &[Kind::Bialgebra])?;
        let alg = self.algebra(Self::required(e, "algebra")?)?;
        let delta = deltas(e, &alg)?;
        LieBialgebra::new(alg, delta)
    }

    /// The double built from the entry's source bialgebra.
    pub fn double(&self, id: &str) -> Result<DrinfeldDouble> {
        let e = self.entry_of(id, &[Kind::Double])?;
        let built = DrinfeldDouble::build(&self.bialgebra(Self::required(e, "source")?)?)?;
        // The fixture fixes the basis names.
        let labels = words(Self::required(e, "basis")?);
        if built.algebra().labels() != labels.as_slice() {
            return Err(Error::Parse {
                line: 0,
                message: format!("entry `{id}` basis does not match the built double"),
            });
        }
        Ok(built)
    }

    pub fn basis_change(&self, id: &str) -> Result<BasisChange> {
        let e = self.entry_of(id, &[Kind::BasisChange])?;
        let old = self.algebra(Self::required(e, "from")?)?;
        let new_labels = words(Self::required(e, "basis")?);
        let n = old.dim();
        if new_labels.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: new_labels.len(),
            });
        }
        let mut rows: Vec<Option<Vec<Poly>>> = vec![None; n];
        for s in &e.statements {
            let Statement::Define { name, value } = s else {
                return Err(unexpected(e, s));
            };
            let a = index(&new_labels, name)?;
            rows[a] = Some(vector_of(value, old.labels())?);
        }
        let rows = rows
            .into_iter()
            .zip(&new_labels)
            .map(|(r, l)| r.ok_or_else(|| Error::UnknownLabel(l.clone())))
            .collect::<Result<Vec<_>>>()?;
        BasisChange::new(new_labels, Mat::from_rows(rows))
    }

    pub fn r_matrix(&self, id: &str) -> Result<RMatrixFixture> {
        let e = self.entry_of(id, &[Kind::RMatrix])?;
        let algebra = self.algebra(Self::required(e, "algebra")?)?;
        let value = single_define(e, "r")?;
        let r = tensor_of(value, algebra.labels(), 2)?;
        Ok(RMatrixFixture { algebra, r })
    }

    /// Expected cocommutator table; returns the bialgebra it describes.
    pub fn cocommutator_table(&self, id: &str) -> Result<LieBialgebra> {
        let e = self.table_entry(id, "cocommutator")?;
        let alg = self.algebra(Self::required(e, "algebra")?)?;
        let delta = deltas(e, &alg)?;
        LieBialgebra::new(alg, delta)
    }

    pub fn dual_table(&self, id: &str) -> Result<DualTable> {
        let e = self.table_entry(id, "dual-brackets")?;
        let coordinates = words(Self::required(e, "coordinates")?);
        let subset = words(Self::required(e, "subset")?);
        for s in &subset {
            index(&coordinates, s)?;
        }
        let mut brackets = Vec::new();
        for s in &e.statements {
            let Statement::Bracket { left, right, value } = s else {
                return Err(unexpected(e, s));
            };
            index(&subset, left)?;
            index(&subset, right)?;
            brackets.push((left.clone(), right.clone(), vector_of(value, &coordinates)?));
        }
        Ok(DualTable {
            coordinates,
            subset,
            brackets,
        })
    }

    /// Named symmetric 2-tensors of a Casimir table.
    pub fn casimir_table(&self, id: &str) -> Result<(LieAlgebra, Vec<(String, TensorElement)>)> {
        let e = self.table_entry(id, "casimirs")?;
        let alg = self.algebra(Self::required(e, "algebra")?)?;
        let mut out = Vec::new();
        for s in &e.statements {
            let Statement::Define { name, value } = s else {
                return Err(unexpected(e, s));
            };
            out.push((name.clone(), tensor_of(value, alg.labels(), 2)?));
        }
        Ok((alg, out))
    }

    /// Casimirs of a catalog algebra (`p21_table` or `so22_table`).
    pub fn casimirs(&self, algebra_id: &str) -> Result<Vec<(String, TensorElement)>> {
        self.get(algebra_id)?;
        for e in &self.entries {
            if e.field("table") == Some("casimirs") && e.field("algebra") == Some(algebra_id) {
                return Ok(self.casimir_table(&e.id)?.1);
            }
        }
        Err(Error::UnknownCatalogId {
            id: format!("casimirs of {algebra_id}"),
            known: self
                .entries
                .iter()
                .filter(|e| e.field("table") == Some("casimirs"))
                .filter_map(|e| e.field("algebra"))
                .collect::<Vec<_>>()
                .join(", "),
        })
    }

    /// Expected Gram matrix in the basis of the entry's algebra.
    pub fn pairing_table(&self, id: &str) -> Result<(LieAlgebra, Mat<Poly>)> {
        let e = self.table_entry(id, "pairing")?;
        let alg = self.algebra(Self::required(e, "algebra")?)?;
        let n = alg.dim();
        let mut m = Mat::zeros(n, n);
        for s in &e.statements {
            let Statement::Pairing { left, right, value } = s else {
                return Err(unexpected(e, s));
            };
            let (i, j) = (alg.index_of(left)?, alg.index_of(right)?);
            let c = value.as_scalar().ok_or_else(|| Error::Parse {
                line: 0,
                message: format!("pairing value in `{id}` is not a scalar"),
            })?;
            m[(i, j)] = c.clone();
            m[(j, i)] = c;
        }
        Ok((alg, m))
    }

    fn table_entry(&self, id: &str, table: &str) -> Result<&CatalogEntry> {
        let e = self.entry_of(id, &[Kind::ExpectedTable])?;
        match e.field("table") {
            Some(t) if t == table => Ok(e),
            other => Err(Error::WrongEntryKind {
                id: id.to_string(),
                expected: format!("{table} table"),
                found: format!("{} table", other.unwrap_or("untyped")),
            }),
        }
    }
}

fn words(s: &str) -> Vec<String> {
    s.split_whitespace().map(String::from).collect()
}

fn index(labels: &[String], l: &str) -> Result<usize> {
    labels
        .iter()
        .position(|x| x == l)
        .ok_or_else(|| Error::UnknownLabel(l.to_string()))
}

fn unexpected(e: &CatalogEntry, s: &Statement) -> Error {
    Error::Parse {
        line: 0,
        message: format!("entry `{}` ({}) cannot contain `{}`", e.id, e.kind, s.to_text()),
    }
}

fn single_define<'a>(e: &'a CatalogEntry, name: &str) -> Result<&'a Value> {
    let mut found = None;
    for s in &e.statements {
        match s {
            Statement::Define { name: n, value } if n == name && found.is_none() => found = Some(value),
            other => return Err(unexpected(e, other)),
        }
    }
    found.ok_or_else(|| Error::Parse {
        line: 0,
        message: format!("entry `{}` lacks `{name} = ...`", e.id),
    })
}

fn deltas(e: &CatalogEntry, alg: &LieAlgebra) -> Result<Vec<TensorElement>> {
    let n = alg.dim();
    let mut delta = vec![TensorElement::zeros(n, 2); n];
    for s in &e.statements {
        let Statement::Delta { generator, value } = s else {
            return Err(unexpected(e, s));
        };
        delta[alg.index_of(generator)?] = tensor_of(value, alg.labels(), 2)?;
    }
    Ok(delta)
}

/// Coordinates of a degree-1 value.
pub fn vector_of(v: &Value, labels: &[String]) -> Result<Vec<Poly>> {
    tensor_of(v, labels, 1).map(|t| t.components().to_vec())
}

/// Dense tensor of the given degree from a sparse value.
pub fn tensor_of(v: &Value, labels: &[String], degree: usize) -> Result<TensorElement> {
    if let Some(d) = v.degree() {
        if d != degree {
            return Err(Error::DimensionMismatch {
                expected: degree,
                found: d,
            });
        }
    }
    let mut t = TensorElement::zeros(labels.len(), degree);
    for (key, c) in v.terms() {
        let idx = key.iter().map(|l| index(labels, l)).collect::<Result<Vec<_>>>()?;
        let old = t.get(&idx).clone();
        t.set(&idx, old + c.clone());
    }
    Ok(t)
}

/// A catalog entry reconstructed as plain fixture text.
pub fn entry_text(cat: &Catalog, id: &str) -> Result<String> {
    cat.get(id).map(CatalogEntry::to_text)
}

impl Default for Catalog {
    fn default() -> Self {
        Catalog::builtin()
    }
}

/// Zero test used by the table comparisons.
pub(crate) fn all_zero(v: &[Poly]) -> bool {
    v.iter().all(Ring::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::rat;

    #[test]
    fn builtin_loads_with_required_ids() {
        let cat = Catalog::builtin();
        for id in [
            "sl2",
            "sl2_eta_bialgebra",
            "poincare_double",
            "ads_double",
            "basis_csbasisp",
            "basis_csbasis3",
            "p21_table",
            "so22_table",
            "r_poincare",
            "r_ads",
            "r_ads_nonskew",
            "cocomm_poincare",
            "cocomm_ads",
            "nc_minkowski",
            "nc_firstorder_ads",
            "nc_mixed_firstorder",
            "casimirs_p21",
            "casimirs_so22",
            "pairing_jppair",
        ] {
            assert!(cat.get(id).is_ok(), "{id}");
        }
        assert_eq!(cat.checksum().len(), 64);
    }

    #[test]
    fn unknown_id_lists_known_ids() {
        let cat = Catalog::builtin();
        match cat.get("nope") {
            Err(Error::UnknownCatalogId { known, .. }) => assert!(known.contains("sl2")),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn sl2_fixture() {
        let a = Catalog::builtin().algebra("sl2").unwrap();
        assert_eq!(a.basis_bracket(0, 1), vec![Poly::zero(), Poly::integer(2), Poly::zero()]);
        assert_eq!(a.basis_bracket(1, 2), vec![Poly::integer(1), Poly::zero(), Poly::zero()]);
    }

    #[test]
    fn csbasisp_rows() {
        let m = Catalog::builtin().basis_change("basis_csbasisp").unwrap();
        let half = Poly::constant(rat(1, 2));
        assert_eq!(m.matrix().row(0)[1], -half.clone());
        assert_eq!(m.matrix().row(0)[2], half);
        assert_eq!(m.matrix().row(4)[3], Poly::integer(2));
    }

    #[test]
    fn entries_round_trip() {
        let cat = Catalog::builtin();
        for e in cat.entries() {
            let back = parse::parse_catalog(&e.to_text()).unwrap();
            assert_eq!(back, vec![e.clone()], "{}", e.id);
        }
        let again = Catalog::parse(&cat.to_text()).unwrap();
        assert_eq!(again.entries(), cat.entries());
    }

    #[test]
    fn wrong_kind_is_reported() {
        let cat = Catalog::builtin();
        assert!(matches!(cat.bialgebra("sl2"), Err(Error::WrongEntryKind { .. })));
        assert!(matches!(cat.casimirs("sl2"), Err(Error::UnknownCatalogId { .. })));
    }

    #[test]
    fn malformed_catalog_is_a_load_error() {
        let broken = BUILTIN_CATALOG.replace("[Y1, Y2] = Y0", "[Y1, Y2] = Q7");
        assert!(matches!(Catalog::parse(&broken), Err(Error::Parse { .. })));
    }
}
