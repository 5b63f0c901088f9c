//! Leave-one-out bandwidth selection on the bundled dataset, with and
//! without a +10 shift of the responses.
//!
//! cargo run --example cross_validation

use kernreg::model_selection::minimize_cw_default;
use kernreg::prelude::*;
use kernreg::Result;

pub fn run() -> Result<()> {
    let data = fixture::paper_dataset();
    let shifted = data.shifted(10.0);
    let (lo, hi) = default_bandwidth_range(&data)?;
    println!("bandwidth search range [{lo:.4}, {hi:.4}]\n");
    println!("{:<12} {:<6} {:>10} {:>10} {:>10} {:>10}", "kernel", "method", "h*", "CW*", "h*(+10)", "CW*(+10)");
    for k in [Kernel::gaussian(), Kernel::rectangular()] {
        for m in Method::ALL {
            let a = minimize_cw_default(&data, m, &k)?;
            let b = minimize_cw_default(&shifted, m, &k)?;
            println!(
                "{:<12} {:<6} {:>10.4} {:>10.3} {:>10.4} {:>10.3}",
                k.name(),
                m.to_string(),
                a.h_star,
                a.cw_star,
                b.h_star,
                b.cw_star
            );
        }
    }

    // The profile itself, for plotting.
    let p = minimize_cw_default(&data, Method::Gm, &Kernel::gaussian())?;
    let mut csv = Vec::new();
    p.write_csv(&mut csv)?;
    println!("\nGM/gaussian profile: {} rows, first {}", p.hs.len(), String::from_utf8_lossy(&csv).lines().nth(1).unwrap_or(""));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run()
}
