//! Coboundary Lie bialgebras: the cocommutator `δ(X) = ad_X r` and the
//! cocycle and co-Jacobi conditions.
//!
//! cargo run --example coboundary

use lie_double::bialgebra::LieBialgebra;
use lie_double::catalog::Catalog;

fn main() -> lie_double::Result<()> {
    let cat = Catalog::builtin();
    for (r_id, expected) in [("r_poincare", "cocomm_poincare"), ("r_ads", "cocomm_ads")] {
        let fx = cat.r_matrix(r_id)?;
        println!("== {r_id}\nr = {}", fx.r.format(fx.algebra.labels()));
        let b = LieBialgebra::coboundary(&fx.algebra, &fx.r)?;
        println!("{}", b.format_table());
        println!("cocycle: {}", b.check_cocycle());
        println!("matches {expected}: {}\n", b.deltas() == cat.cocommutator_table(expected)?.deltas());
    }
    Ok(())
}
