//! The Sklyanin bracket on SO(2,2) at a point, against the closed forms, and
//! the Casimir function.
//!
//! cargo run --example sklyanin_bracket

use lie_double::geometry::weierstrass;
use lie_double::poisson::{
    casimir_value, chart_brackets, closed_form_ambient, closed_form_xx, frame_at, jacobiator, sklyanin,
    CoordinateFunction::{self, *},
};

fn main() -> lie_double::Result<()> {
    let (eta, xi) = (0.7, 1.0);
    let p = [0.2, -0.3, 0.4, 0.1, 0.6, -0.2];
    let frame = frame_at(&p, &eta)?;
    println!("chart condition {:.2}, frame residual {:.1e}", frame.condition, frame.residual);

    let x = [p[0], p[1], p[2]];
    let cf = closed_form_xx(&x, &eta, &xi)?;
    for (k, (i, j)) in [(0, 1), (0, 2), (1, 2)].into_iter().enumerate() {
        let v = sklyanin(&X(i), &X(j), &p, &eta, &xi)?;
        println!("{{x{i}, x{j}}} = {v:+.15e}   closed form {:+.15e}", cf[k]);
    }

    let w = weierstrass(&x, &eta);
    let cw = closed_form_ambient(&w, &eta, &xi)?;
    for (k, (i, j)) in [(0, 1), (0, 2), (1, 2)].into_iter().enumerate() {
        let v = sklyanin(&W(i), &W(j), &p, &eta, &xi)?;
        println!("{{w{i}, w{j}}} = {v:+.15e}   closed form {:+.15e}", cw[k]);
    }

    let (c, cp) = casimir_value(&x, &eta);
    println!("C = {c}, C' = {cp}");
    for u in CoordinateFunction::basic() {
        println!("{{C, {u}}} = {:+.1e}", sklyanin(&Casimir, &u, &p, &eta, &xi)?);
    }

    println!("bivector in (x0, x1, x2, th0, th1, th2):\n{:.6}", chart_brackets(&p, eta, xi)?);
    println!("jacobiator(th0, x1, w2) = {:.1e}", jacobiator([&Theta(0), &X(1), &W(2)], &p, eta, xi)?);
    Ok(())
}
