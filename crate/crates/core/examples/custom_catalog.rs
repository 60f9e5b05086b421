//! Catalog files: parsing, rendering an entry, and what verification reports
//! when a transcribed table is wrong.
//!
//! cargo run --example custom_catalog

use lie_double::catalog::{table_view, verify_all, Catalog, BUILTIN_CATALOG};

fn main() -> lie_double::Result<()> {
    let cat = Catalog::parse(BUILTIN_CATALOG)?;
    println!("{} entries, sha256 {}", cat.ids().len(), cat.checksum());
    print!("{}", table_view(&cat, "nc_minkowski")?.to_text());

    // Flip one sign in the expected cocommutator.
    let edited = BUILTIN_CATALOG.replacen("+ eta^2*J2/\\J1)", "- eta^2*J2/\\J1)", 1);
    let bad = Catalog::parse(&edited)?;
    for r in verify_all(&bad).into_iter().filter(|r| !r.passed()) {
        println!("FAIL {}: {}", r.id, r.detail);
    }

    match Catalog::parse("@entry broken\nkind: nonsense\n") {
        Ok(_) => println!("unexpectedly parsed"),
        Err(e) => println!("load error: {e}"),
    }
    Ok(())
}
