//! Smoothed distribution and quantile functions, a Q-Q curve, and a
//! cumulative intensity estimate with its derivative.
//!
//! cargo run --example applications

use kernreg::prelude::*;
use kernreg::Result;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Exp, Normal};

pub fn run() -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let normal = Normal::new(0.0, 1.0).unwrap();
    let a = OrderedSample::new((0..200).map(|_| normal.sample(&mut rng)).collect())?;
    let b = OrderedSample::new((0..200).map(|_| 1.0 + 2.0 * normal.sample(&mut rng)).collect())?;

    let k = Kernel::gaussian().scale(0.3)?;
    let ecdf = ecdf_dataset(&a);
    let gm = EstimatorSpec::new(Method::Gm, k.clone());
    for x in [-1.0, 0.0, 1.0] {
        println!("smoothed cdf at {x:>4}: {:.4}", gm.eval(&ecdf, x)?.unwrap());
    }

    let q = quantile_dataset(&a);
    let kq = EstimatorSpec::new(Method::Gm, Kernel::gaussian().scale(0.05)?);
    println!("smoothed median: {:.4}", kq.eval(&q, 0.5)?.unwrap());

    // Q-Q of N(1, 4) against N(0, 1) should be close to y = 1 + 2x.
    let qq = qq_dataset(&a, &b)?;
    for x in [-1.0, 0.0, 1.0] {
        println!("qq at {x:>4}: {:.3}", gm.eval(&qq, x)?.unwrap());
    }

    // Poisson process of rate 2 on [0, 50].
    let exp = Exp::new(2.0).unwrap();
    let mut t = 0.0;
    let mut events = Vec::new();
    while t < 50.0 {
        t += exp.sample(&mut rng);
        events.push(t);
    }
    events.pop();
    let counts = counting_dataset(&OrderedSample::new(events)?);
    let kc = Kernel::gaussian().scale(2.0)?;
    for x in [10.0, 25.0, 40.0] {
        println!(
            "cumulative intensity at {x}: {:.2}, intensity {:.3}",
            gm_eval(&counts, &kc, x, 1e-10)?,
            gm_derivative(&counts, &kc, x)
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run()
}
