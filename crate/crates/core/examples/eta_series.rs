//! Exact power series in eta of Poisson brackets at rational points.
//!
//! cargo run --example eta_series

use lie_double::num::rat;
use lie_double::poisson::{eta_series, CoordinateFunction::*};
use lie_double::suites::reference_expansion;

fn main() -> lie_double::Result<()> {
    let x = [rat(1, 2), rat(1, 4), rat(-1, 1)];
    let xi = rat(2, 1);
    let reference = reference_expansion(&x, &xi);
    for (k, (i, j)) in [(0, 1), (0, 2), (1, 2)].into_iter().enumerate() {
        let s = eta_series(&X(i), &X(j), &x, &xi, 4)?;
        println!("{{x{i}, x{j}}}:");
        for (n, c) in s.iter().enumerate() {
            let note = match reference[k].get(n) {
                Some(p) if p == c => " (reference)",
                Some(_) => " (differs from reference)",
                None => "",
            };
            println!("  eta^{n}: {c}{note}");
        }
    }
    // Brackets involving Lorentz coordinates have no closed form.
    println!("{{th0, x1}}: {:?}", eta_series(&Theta(0), &X(1), &x, &xi, 2)?.iter().map(|c| c.to_string()).collect::<Vec<_>>());
    Ok(())
}
