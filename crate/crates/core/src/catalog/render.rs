//! Human-readable views of catalog entries next to the tables computed from
//! their sources.

use super::{verify_all, Catalog, CheckRecord, Kind};
use crate::algebra::format_combination;
use crate::bialgebra::LieBialgebra;
use crate::error::Result;
use crate::num::{Poly, Ring};
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TableView {
    pub id: String,
    pub kind: String,
    pub anchor: String,
    /// Statement lines as transcribed.
    pub fixture: Vec<String>,
    /// The same object rebuilt from the entry's sources, when it has any.
    pub computed: Option<Vec<String>>,
    /// Catalog checks about this entry.
    pub checks: Vec<CheckRecord>,
}

impl TableView {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckRecord::passed)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}  ({}; {})\n", self.id, self.kind, self.anchor);
        out.push_str("fixture:\n");
        for l in &self.fixture {
            out.push_str(&format!("  {l}\n"));
        }
        if let Some(c) = &self.computed {
            out.push_str("computed:\n");
            for l in c {
                out.push_str(&format!("  {l}\n"));
            }
        }
        for r in &self.checks {
            let s = if r.passed() { "pass" } else { "FAIL" };
            out.push_str(&format!("{s}  {}\n", r.id));
        }
        out
    }
}

fn lines(s: String) -> Vec<String> {
    s.lines().map(str::to_string).collect()
}

fn computed(cat: &Catalog, id: &str) -> Result<Option<Vec<String>>> {
    let e = cat.get(id)?;
    let field = |k: &str| e.field(k).unwrap_or_default();
    Ok(match e.kind {
        Kind::Double => Some(lines(cat.double(id)?.algebra().format_table())),
        Kind::Algebra => {
            let change = cat
                .entries()
                .iter()
                .find(|c| c.kind == Kind::BasisChange && c.field("to") == Some(id));
            match change {
                Some(c) => {
                    let m = cat.basis_change(&c.id)?;
                    let from = cat.algebra(c.field("from").unwrap_or_default())?;
                    Some(lines(from.change_basis(&m)?.format_table()))
                }
                None => None,
            }
        }
        Kind::Bialgebra if e.field("source").is_some() => {
            let fx = cat.r_matrix(field("source"))?;
            Some(lines(LieBialgebra::coboundary(&fx.algebra, &fx.r)?.format_table()))
        }
        Kind::RMatrix if e.field("via").is_some() => {
            let d = cat.double(field("source"))?;
            let m = cat.basis_change(field("via"))?;
            let labels = cat.r_matrix(id)?.algebra.labels().to_vec();
            Some(vec![format!("r = {}", d.canonical_r().r.change_basis(&m)?.format(&labels))])
        }
        Kind::RMatrix if e.field("skew_of").is_some() => {
            let full = cat.r_matrix(field("skew_of"))?;
            let r = full.r.antisymmetric_part().scale(&Poly::var("xi"));
            Some(vec![format!("r = {}", r.format(full.algebra.labels()))])
        }
        Kind::BasisChange if e.field("inverse_of").is_some() => {
            let forward = cat.basis_change(field("inverse_of"))?;
            let old = cat.basis_change(id)?.new_labels().to_vec();
            let inv = forward.inverted(old)?;
            let basis = forward.new_labels().to_vec();
            Some(
                inv.new_labels()
                    .iter()
                    .enumerate()
                    .map(|(a, l)| format!("{l} = {}", format_combination(&basis, inv.matrix().row(a))))
                    .collect(),
            )
        }
        Kind::ExpectedTable => match e.field("table") {
            Some("cocommutator") => {
                let fx = cat.r_matrix(field("source"))?;
                Some(lines(LieBialgebra::coboundary(&fx.algebra, &fx.r)?.format_table()))
            }
            Some("dual-brackets") => {
                let fx = cat.r_matrix(field("source"))?;
                let t = cat.dual_table(id)?;
                let subset: Vec<&str> = t.subset.iter().map(String::as_str).collect();
                let d = LieBialgebra::coboundary(&fx.algebra, &fx.r)?.dual_brackets(t.coordinates.clone(), &subset)?;
                Some(lines(d.format_table()))
            }
            Some("pairing") => {
                let (alg, _) = cat.pairing_table(id)?;
                let d = cat.double(field("source"))?;
                let k = d.pairing_in_basis(&cat.basis_change(field("via"))?);
                let l = alg.labels();
                let mut out = Vec::new();
                for i in 0..l.len() {
                    for j in i..l.len() {
                        if !k[(i, j)].is_zero() {
                            out.push(format!("<{}, {}> = {}", l[i], l[j], k[(i, j)]));
                        }
                    }
                }
                Some(out)
            }
            _ => None,
        },
        _ => None,
    })
}

/// Fixture, computed counterpart and catalog checks of one entry.
pub fn table_view(cat: &Catalog, id: &str) -> Result<TableView> {
    let e = cat.get(id)?;
    let suffix = format!("/{id}");
    Ok(TableView {
        id: id.to_string(),
        kind: e.kind.to_string(),
        anchor: e.anchor.clone(),
        fixture: e.statements.iter().map(|s| s.to_text()).collect(),
        computed: computed(cat, id)?,
        checks: verify_all(cat).into_iter().filter(|r| r.id.ends_with(&suffix)).collect(),
    })
}
