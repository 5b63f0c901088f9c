//! Fits the three estimators to the bundled 20-point dataset and prints a
//! coarse table of the curves.
//!
//! cargo run --example fit_curves

use kernreg::prelude::*;
use kernreg::Result;

pub fn run() -> Result<()> {
    let data = fixture::paper_dataset();
    let k = Kernel::gaussian().scale(1.5)?;
    let grid: Vec<f64> = (0..=12).map(|i| -12.0 + 2.0 * i as f64).collect();

    let curves: Vec<(Method, CurveSample)> = Method::ALL
        .iter()
        .map(|&m| Ok((m, eval_grid(&data, &EstimatorSpec::new(m, k.clone()), &grid)?)))
        .collect::<Result<_>>()?;

    print!("{:>6}", "x");
    for (m, _) in &curves {
        print!("{:>10}", m.to_string());
    }
    println!();
    for (i, x) in grid.iter().enumerate() {
        print!("{x:>6.1}");
        for (_, c) in &curves {
            match c.values[i] {
                Some(v) => print!("{v:>10.4}"),
                None => print!("{:>10}", "-"),
            }
        }
        println!();
    }

    // PC needs an x0 left of the data; the default is x1 - h.
    let spec = EstimatorSpec::new(Method::Pc, k).with_pc_x0(PcOrigin::At(-10.0));
    println!("\nPC at 0 with x0=-10: {:.4}", spec.eval(&data, 0.0)?.unwrap());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run()
}
