//! Running verification suites and writing JSON-lines reports.
//!
//! cargo run --release --example verify_suites

use lie_double::catalog::Catalog;
use lie_double::suites::{run, Suite, SuiteConfig};

fn main() {
    let cat = Catalog::builtin();
    for suite in [Suite::Algebra, Suite::Double, Suite::Geometry] {
        let report = run(&cat, suite, &SuiteConfig { seed: 7, samples: 50 });
        let (total, passed, _) = report.counts();
        println!("{suite}: {passed}/{total}");
    }
    let report = run(&cat, Suite::Poisson, &SuiteConfig { seed: 7, samples: 20 });
    print!("{}", report.to_json_lines());
}
