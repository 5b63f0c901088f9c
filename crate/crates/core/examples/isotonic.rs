//! Pool-adjacent-violators and the two ways of combining it with a
//! smoother: isotonize then smooth (IS), smooth then isotonize (SI).
//!
//! cargo run --example isotonic

use kernreg::prelude::*;
use kernreg::Result;

pub fn run() -> Result<()> {
    let fit = pava_unit(&[1.0, 3.0, 2.0, 2.0, 5.0, 4.0])?;
    println!("pava: {:?}", fit.ys_iso);
    for b in &fit.blocks {
        println!("  block [{}, {}) = {}", b.start, b.end, b.value);
    }
    let weighted = pava(&[3.0, 1.0], &[1.0, 3.0])?;
    println!("weighted pava: {:?}", weighted.ys_iso);

    let data = synth_regression(TrueCurve::Logistic, 40, 1.0, 7)?;
    let k = Kernel::gaussian().scale(0.8)?;
    let grid = default_grid(&data, &k, 9)?;
    for m in [Method::Nw, Method::Gm] {
        let spec = EstimatorSpec::new(m, k.clone());
        let is = is_pipeline(&data, &spec, &grid)?;
        let si = si_pipeline(&data, &spec, &grid)?;
        println!("\n{m}: x, IS, SI");
        for ((x, a), b) in grid.iter().zip(&is.values).zip(&si.values) {
            println!("{x:>8.3} {:>8.4} {:>8.4}", a.unwrap_or(f64::NAN), b.unwrap_or(f64::NAN));
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run()
}
