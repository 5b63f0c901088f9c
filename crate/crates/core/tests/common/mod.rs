//! Reference implementations used as oracles. None of them share code
//! with the library beyond `Kernel::pdf`.
#![allow(dead_code)]

use kernreg::prelude::*;

/// Nodes and weights of the 10-point Gauss-Legendre rule on [-1, 1].
const GL10: [(f64, f64); 5] = [
    (0.148_874_338_981_631_2, 0.295_524_224_714_752_9),
    (0.433_395_394_129_247_2, 0.269_266_719_309_996_4),
    (0.679_409_568_299_024_4, 0.219_086_362_515_982),
    (0.865_063_366_688_984_5, 0.149_451_349_150_580_6),
    (0.973_906_528_517_171_7, 0.066_671_344_308_688_1),
];

/// Composite 10-point Gauss-Legendre over `panels` equal panels.
pub fn gauss_legendre(f: impl Fn(f64) -> f64, a: f64, b: f64, panels: usize) -> f64 {
    let w = (b - a) / panels as f64;
    let mut total = 0.0;
    for p in 0..panels {
        let mid = a + (p as f64 + 0.5) * w;
        let half = 0.5 * w;
        for &(node, weight) in &GL10 {
            total += weight * (f(mid - half * node) + f(mid + half * node));
        }
    }
    total * 0.5 * w
}

/// Integral of `f` over `[a, b]` split at `breaks`, so that kinks and jumps
/// of `f` never fall inside a panel.
pub fn piecewise_gl(f: impl Fn(f64) -> f64, a: f64, b: f64, breaks: &[f64], panels: usize) -> f64 {
    let mut cuts: Vec<f64> = breaks.iter().copied().filter(|&t| t > a && t < b).collect();
    cuts.push(a);
    cuts.push(b);
    cuts.sort_by(f64::total_cmp);
    cuts.windows(2).map(|w| gauss_legendre(&f, w[0], w[1], panels)).sum()
}

/// Integral of the scaled kernel `K(x - u)` over `u ∈ [lo, hi]`, with
/// infinite limits truncated where the kernel mass is negligible.
pub fn kernel_mass(k: &ScaledKernel, x: f64, lo: f64, hi: f64) -> f64 {
    let s = k.support();
    let reach = 60.0 * k.h;
    let (lo_k, hi_k) = (
        if s.hi.is_finite() { x - s.hi } else { x - reach },
        if s.lo.is_finite() { x - s.lo } else { x + reach },
    );
    let (a, b) = (lo.max(lo_k), hi.min(hi_k));
    if a >= b {
        return 0.0;
    }
    piecewise_gl(|u| k.pdf(x - u), a, b, &[x], 200)
}

/// Gasser-Muller in its definitional form
/// `Σ yᵢ ∫_{s_{i-1}}^{s_i} K(x - u) du` with `s_0 = -∞`, `s_n = +∞`.
pub fn gm_definitional(d: &Dataset, k: &ScaledKernel, x: f64) -> f64 {
    let (xs, ys) = (d.xs(), d.ys());
    let n = xs.len();
    let mut total = 0.0;
    for i in 0..n {
        let lo = if i == 0 { f64::NEG_INFINITY } else { 0.5 * (xs[i - 1] + xs[i]) };
        let hi = if i + 1 == n { f64::INFINITY } else { 0.5 * (xs[i] + xs[i + 1]) };
        if lo < hi {
            total += ys[i] * kernel_mass(k, x, lo, hi);
        }
    }
    total
}

/// Isotonic least squares by enumerating every partition into consecutive
/// blocks. Exponential; meant for n ≤ 8.
pub fn brute_isotonic(ys: &[f64]) -> Vec<f64> {
    let n = ys.len();
    let mut best: Option<(f64, Vec<f64>)> = None;
    for mask in 0u32..(1 << (n - 1)) {
        let mut fit = Vec::with_capacity(n);
        let mut start = 0;
        for i in 0..n {
            let cut = i + 1 == n || mask & (1 << i) != 0;
            if cut {
                let mean = ys[start..=i].iter().sum::<f64>() / (i + 1 - start) as f64;
                fit.extend(std::iter::repeat_n(mean, i + 1 - start));
                start = i + 1;
            }
        }
        if fit.windows(2).any(|w| w[0] > w[1] + 1e-12) {
            continue;
        }
        let sse: f64 = fit.iter().zip(ys).map(|(f, y)| (f - y).powi(2)).sum();
        if best.as_ref().is_none_or(|(b, _)| sse < *b - 1e-12) {
            best = Some((sse, fit));
        }
    }
    best.expect("the all-pooled partition is always feasible").1
}

/// Euclidean projection onto the monotone cone by Dykstra's alternating
/// projections over the pairwise constraints `z_i ≤ z_{i+1}`.
pub fn dykstra_isotonic(ys: &[f64], max_sweeps: usize) -> Vec<f64> {
    let n = ys.len();
    let mut z = ys.to_vec();
    let mut corr = vec![[0.0f64; 2]; n.saturating_sub(1)];
    for _ in 0..max_sweeps {
        let mut moved: f64 = 0.0;
        for i in 0..n.saturating_sub(1) {
            let a = z[i] + corr[i][0];
            let b = z[i + 1] + corr[i][1];
            let (pa, pb) = if a > b { ((a + b) / 2.0, (a + b) / 2.0) } else { (a, b) };
            corr[i] = [a - pa, b - pb];
            moved = moved.max((pa - z[i]).abs()).max((pb - z[i + 1]).abs());
            z[i] = pa;
            z[i + 1] = pb;
        }
        if moved < 1e-15 {
            break;
        }
    }
    z
}

pub fn builtin_kernels() -> Vec<Kernel> {
    vec![
        Kernel::gaussian(),
        Kernel::rectangular(),
        Kernel::bump(),
        Kernel::exp_power(1.0).unwrap(),
    ]
}
