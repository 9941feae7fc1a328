//! Shared fixtures for the kernel benchmarks.

use hyperproj::{CyclicWord, Geodesic, Isometry};

/// A bundle of random disjoint and crossing geodesic pairs, reproducible
/// across runs.
pub fn geodesic_pairs(count: usize, seed: u64) -> Vec<(Geodesic, Geodesic)> {
    // Small linear congruential stream; the benches only need variety, not
    // statistical quality.
    let mut state = seed | 1;
    let mut next = move || {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        (state >> 11) as f64 / (1u64 << 53) as f64
    };
    (0..count)
        .map(|_| {
            let a = next() * 8.0 - 4.0;
            let b = a + 0.3 + next() * 4.0;
            let c = next() * 8.0 - 4.0;
            let d = c + 0.3 + next() * 4.0;
            (Geodesic::between(a, b), Geodesic::between(c, d))
        })
        .collect()
}

pub fn figure_eight() -> CyclicWord {
    CyclicWord::parse("xY").expect("fixed word")
}

pub fn sample_isometry() -> Isometry {
    Isometry::new(5.0, 2.0, 2.0, 1.0).expect("unimodular")
}
