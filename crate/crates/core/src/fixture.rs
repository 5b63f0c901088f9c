//! The 20-point co-monotone example dataset used throughout the docs,
//! tests and examples.

use std::path::Path;

use crate::estimators::Dataset;
use crate::io::parse_dataset_csv;
use crate::Result;

pub const PAPER_FIXTURE: &str = "fixture:paper";

pub const PAPER_X: [f64; 20] = [
    -8.8, -8.0, -6.8, -6.3, -4.3, -3.9, -3.9, -3.7, -2.8, -2.0, -1.8, -1.0, -1.0, 1.9, 2.3, 2.9,
    5.2, 6.5, 9.3, 10.0,
];

pub const PAPER_Y: [f64; 20] = [
    -7.1, -6.1, -5.8, -5.3, -4.9, -1.2, -0.6, -0.4, 0.8, 2.0, 2.1, 2.3, 2.4, 4.4, 5.9, 6.0, 6.9,
    7.4, 8.1, 9.3,
];

pub fn paper_dataset() -> Dataset {
    Dataset::new(PAPER_X.to_vec(), PAPER_Y.to_vec()).expect("fixture is valid")
}

/// `fixture:paper` or a path to an `x,y` CSV file.
pub fn load_dataset(input: &str) -> Result<Dataset> {
    if input == PAPER_FIXTURE {
        return Ok(paper_dataset());
    }
    let (data, diag) = parse_dataset_csv(Path::new(input))?;
    log_diagnostics(input, &diag);
    Ok(data)
}

fn log_diagnostics(input: &str, diag: &crate::io::Diagnostics) {
    eprintln!(
        "{input}: n={} duplicate_x={} comonotone={} resorted={}",
        diag.n, diag.duplicate_x, diag.comonotone, diag.resorted
    );
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_integrity() {
        let d = paper_dataset();
        assert_eq!(d.len(), 20);
        assert_eq!(d.xs()[0], -8.8);
        assert_eq!(d.xs()[19], 10.0);
        assert_eq!(d.ys()[0], -7.1);
        assert_eq!(d.ys()[19], 9.3);
        assert!(d.comonotone());
        assert_eq!(d.duplicate_x_count(), 2);
        assert_eq!(d.xs(), &PAPER_X);
    }
}
