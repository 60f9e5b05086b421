//! The 4×4 representation of so(2,2), group elements in the chart
//! `(x0, x1, x2, th0, th1, th2)`, and the AdS metric.
//!
//! cargo run --example group_geometry

use lie_double::geometry::{
    group_element, metric_at, orthogonality_defect, pullback_metric, rep, weierstrass, Generator,
};
use lie_double::num::Jet;

fn main() {
    let eta = 0.5_f64;
    for g in Generator::ALL {
        println!("{g} =\n{:.3}", rep(g, &eta));
    }

    let coords = [0.3, -0.2, 0.1, 0.4, -0.5, 0.2];
    let t = group_element(&coords, &eta);
    println!("|T^t I T - I| = {:.2e}", orthogonality_defect(t.matrix(), &eta).max_abs());

    let x = t.x();
    let w = weierstrass(&x, &eta);
    println!("ambient point {:?}, constraint residual {:.2e}", w.0, w.constraint_residual(&eta));
    println!("metric\n{:.6}", metric_at(&x, &eta));
    println!("pullback - metric = {:.2e}", pullback_metric(&x, &eta).sub(&metric_at(&x, &eta)).max_abs());

    // Jets in eta: the order-0 coefficient is the flat limit.
    let e: Jet<f64> = Jet::variable(2);
    let xj = x.map(Jet::constant);
    let wj = weierstrass(&xj, &e);
    println!("w0 as a series in eta: {}", wj.w(0));
    println!("metric at eta = 0:\n{}", metric_at(&x, &0.0));
}
