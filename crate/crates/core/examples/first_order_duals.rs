//! Dual Lie brackets of a bialgebra, compared with the linear part of the
//! Sklyanin bracket at the identity.
//!
//! cargo run --example first_order_duals

use lie_double::bialgebra::LieBialgebra;
use lie_double::catalog::Catalog;
use lie_double::num::{rat, Poly};
use lie_double::poisson::linearize_at_identity_exact;

fn main() -> lie_double::Result<()> {
    let cat = Catalog::builtin();
    let fx = cat.r_matrix("r_ads")?;
    let b = LieBialgebra::coboundary(&fx.algebra, &fx.r)?;
    let coords = ["th0", "th1", "th2", "x0", "x1", "x2"].map(String::from).to_vec();
    let spacetime = b.dual_brackets(coords.clone(), &["x0", "x1", "x2"])?;
    println!("spacetime coordinates:\n{}", spacetime.format_table());

    // The bivector linearized at the identity, exactly, at eta = 1/2, xi = 3.
    let (eta, xi) = (rat(1, 2), rat(3, 1));
    let lin = linearize_at_identity_exact(&eta, &xi)?;
    let dual = b
        .dual_algebra(coords)?
        .substitute("eta", &Poly::constant(eta))
        .substitute("xi", &Poly::constant(xi));
    println!("linearization equals the dual algebra: {}", lin == dual);
    println!("{}", lin.format_table());
    Ok(())
}
