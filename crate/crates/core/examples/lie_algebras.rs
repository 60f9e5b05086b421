//! Building Lie algebras with polynomial structure constants, checking
//! Jacobi, and changing basis.
//!
//! cargo run --example lie_algebras

use lie_double::algebra::LieAlgebra;
use lie_double::catalog::Catalog;
use lie_double::num::{rat, Poly, Ring};

fn main() -> lie_double::Result<()> {
    // sl(2,R): [Y0,Y1] = 2 Y1, [Y0,Y2] = -2 Y2, [Y1,Y2] = Y0
    let c = |v: i64| Poly::constant(rat(v, 1));
    let labels = ["Y0", "Y1", "Y2"].map(String::from).to_vec();
    let sl2 = LieAlgebra::from_brackets(
        labels,
        &[
            (0, 1, vec![c(0), c(2), c(0)]),
            (0, 2, vec![c(0), c(0), c(-2)]),
            (1, 2, vec![c(1), c(0), c(0)]),
        ],
    )?;
    println!("{}", sl2.format_table());
    println!("jacobi: {}", sl2.check_jacobi());

    // A one-parameter family stays a Lie algebra for every eta.
    let eta = Poly::var("eta");
    let deformed = LieAlgebra::from_brackets(
        ["A", "B", "C"].map(String::from).to_vec(),
        &[(0, 1, vec![c(0), c(0), eta.clone() * eta]), (0, 2, vec![c(0), c(-1), c(0)])],
    )?;
    println!("{}", deformed.format_table());
    println!("jacobi: {}", deformed.check_jacobi());

    // The deformed double rewritten in the AdS basis.
    let cat = Catalog::builtin();
    let double = cat.double("ads_double")?;
    let so22 = double.algebra().change_basis(&cat.basis_change("basis_csbasis3")?)?;
    println!("so(2,2) from the double:\n{}", so22.format_table());
    println!("equals catalog table: {}", so22 == cat.algebra("so22_table")?);
    println!("eta = 0 gives Poincare: {}", so22.substitute("eta", &Poly::zero()) == cat.algebra("p21_table")?);
    Ok(())
}
