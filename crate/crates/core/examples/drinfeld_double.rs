//! The Drinfel'd double of a Lie bialgebra, its invariant pairing and its
//! canonical r-matrix.
//!
//! cargo run --example drinfeld_double

use lie_double::catalog::Catalog;
use lie_double::double::build_double;
use lie_double::tensor::{ad_invariant, schouten};

fn main() -> lie_double::Result<()> {
    let cat = Catalog::builtin();
    for id in ["sl2_trivial", "sl2_eta_bialgebra"] {
        let source = cat.bialgebra(id)?;
        println!("== double of {id}\ncocommutator:\n{}", source.format_table());
        let d = build_double(&source)?;
        println!("brackets:\n{}", d.algebra().format_table());
        println!("jacobi: {}", d.algebra().check_jacobi());
        println!("pairing invariance failures: {}", d.check_pairing_invariance().len());

        let can = d.canonical_r();
        let labels = d.algebra().labels();
        println!("r = {}", can.r.format(labels));
        println!("symmetric part is half the pairing Casimir: {}", d.symmetric_part_is_half_casimir());
        let s = schouten(&can.skew, d.algebra())?;
        println!("[[r', r']] ad-invariant: {}\n", ad_invariant(&s, d.algebra())?.is_ok());
    }
    Ok(())
}
