//! Which estimators keep co-monotone data monotone: a GM fit, an NW
//! counterexample built for a bimodal kernel, and a PC witness.
//!
//! cargo run --example monotonicity

use kernreg::prelude::*;
use kernreg::properties::{monotonicity_suite, FuzzConfig};
use kernreg::Result;

pub fn run() -> Result<()> {
    let data = fixture::paper_dataset();
    let k = Kernel::rectangular().scale(2.0)?;
    let grid = default_grid(&data, &k, 2001)?;
    for m in Method::ALL {
        let curve = eval_grid(&data, &EstimatorSpec::new(m, k.clone()), &grid)?;
        let r = check_monotone(&curve, 1e-9);
        println!("{m} rectangular h=2: nondecreasing={} worst drop={:.3e}", r.is_nondecreasing, r.worst_violation);
    }

    let bimodal = Kernel::gaussian_mixture(-3.0, 3.0, 0.5)?;
    if let Some(w) = find_nw_violation(&bimodal)? {
        println!(
            "\nNW with {}: data x={:?} y={:?}, f({:.3})={:.4} > f({:.3})={:.4}",
            bimodal.name(),
            w.dataset.xs(),
            w.dataset.ys(),
            w.x,
            w.value_x,
            w.z,
            w.value_z
        );
    }

    let gk = Kernel::gaussian().scale(1.0)?;
    let x0 = data.first_x() - 1.0;
    let pc = find_pc_violation(&data, &gk, x0)?;
    println!(
        "PC gaussian h=1: drops by {:.4} between {:.3} and {:.3} (re-verified: {})",
        pc.drop,
        pc.left,
        pc.right,
        pc.reverify(&data, &gk, x0)?
    );

    let cfg = FuzzConfig { cases: 50, grid_points: 501, ..FuzzConfig::default() };
    let suite = monotonicity_suite(Method::Gm, &[Kernel::gaussian(), Kernel::bump()], &cfg)?;
    println!("\n{}: {} fits, {} failures", suite.name, suite.cases, suite.failures);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run()
}
