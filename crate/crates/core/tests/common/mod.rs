//! Test-only oracles, written independently of the library's code paths.

#![allow(dead_code)]

/// Round robin for workloads where everything arrives at 0, written as a
/// cyclic scan over process slots rather than a queue.
/// Returns (completion per process, number of dispatches), all in ticks.
pub fn cyclic_rr(bursts: &[u64], quantum: u64) -> (Vec<u64>, usize) {
    let mut left = bursts.to_vec();
    let mut done = vec![0u64; bursts.len()];
    let mut clock = 0u64;
    let mut dispatches = 0;
    let mut unfinished = bursts.len();
    let mut slot = 0;
    while unfinished > 0 {
        if left[slot] > 0 {
            let run = if left[slot] < quantum { left[slot] } else { quantum };
            clock += run;
            left[slot] -= run;
            dispatches += 1;
            if left[slot] == 0 {
                done[slot] = clock;
                unfinished -= 1;
            }
        }
        slot = (slot + 1) % bursts.len();
    }
    (done, dispatches)
}

/// Centroid of `f` over `[lo, hi]` by the composite midpoint rule.
pub fn centroid_by_quadrature(f: impl Fn(f64) -> f64, lo: f64, hi: f64, cells: usize) -> f64 {
    let h = (hi - lo) / cells as f64;
    let (mut area, mut moment) = (0.0, 0.0);
    for k in 0..cells {
        let u = lo + (k as f64 + 0.5) * h;
        let mu = f(u);
        area += mu * h;
        moment += u * mu * h;
    }
    moment / area
}

/// Piecewise-linear trapezoid evaluated straight from its breakpoints.
pub fn trapezoid(p: [f64; 4], x: f64) -> f64 {
    let [a, b, c, d] = p;
    if x >= b && x <= c {
        1.0
    } else if x > a && x < b {
        (x - a) / (b - a)
    } else if x > c && x < d {
        (d - x) / (d - c)
    } else {
        0.0
    }
}
