use rand::{RngExt, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;
use rayon::prelude::*;
use serde::Serialize;

use super::{DistanceMatrix, HalfInteger, HyperbolicityError, ScanMode, DEFAULT_EXACT_CAP};
use crate::cayley::BallTable;
use crate::group::Element;

/// Largest four-point defect found on a ball, with its witness.
#[derive(Clone, Debug, Serialize)]
pub struct DefectReport {
    pub defect: HalfInteger,
    pub witness: [Element; 4],
    /// The three pairing sums of the witness, largest first.
    pub sums: [u64; 3],
    pub mode: ScanMode,
    pub scanned: u64,
    /// Sampled scans only bound the defect from below.
    pub lower_bound: bool,
}

/// Sorted pairing sums of the quadruple `(i, j, k, l)`.
#[inline]
fn pairing_sums(d: &DistanceMatrix, i: usize, j: usize, k: usize, l: usize) -> [u32; 3] {
    let mut s = [d.get(i, j) + d.get(k, l), d.get(i, k) + d.get(j, l), d.get(i, l) + d.get(j, k)];
    s.sort_unstable_by(|a, b| b.cmp(a));
    s
}

/// Four-point defect `max (S₁ - S₂) / 2` over vertex quadruples of the ball,
/// where `S₁ ≥ S₂ ≥ S₃` are the three pairing sums.
pub fn four_point_defect(ball: &BallTable, mode: ScanMode) -> Result<DefectReport, HyperbolicityError> {
    four_point_defect_with_cap(ball, mode, DEFAULT_EXACT_CAP)
}

pub fn four_point_defect_with_cap(
    ball: &BallTable,
    mode: ScanMode,
    exact_cap: usize,
) -> Result<DefectReport, HyperbolicityError> {
    let n = ball.len();
    if n == 0 {
        return Err(HyperbolicityError::EmptyBall);
    }
    if mode == ScanMode::Exact && n > exact_cap {
        return Err(HyperbolicityError::CapExceeded { vertices: n, cap: exact_cap });
    }
    let d = DistanceMatrix::from_ball(ball);

    let (best, tuple, scanned) = match mode {
        ScanMode::Exact => {
            let best = (0..n)
                .into_par_iter()
                .map(|i| {
                    let mut best = (0u32, [i, i, i, i]);
                    for j in i + 1..n {
                        for k in j + 1..n {
                            for l in k + 1..n {
                                let s = pairing_sums(&d, i, j, k, l);
                                let gap = s[0] - s[1];
                                if gap > best.0 {
                                    best = (gap, [i, j, k, l]);
                                }
                            }
                        }
                    }
                    best
                })
                .reduce(
                    || (0u32, [0, 0, 0, 0]),
                    |a, b| if b.0 > a.0 || (b.0 == a.0 && b.1 < a.1) { b } else { a },
                );
            let total = if n >= 4 {
                let n = n as u64;
                n * (n - 1) * (n - 2) * (n - 3) / 24
            } else {
                0
            };
            (best.0, best.1, total)
        }
        ScanMode::Sampled { seed, count } => {
            let mut rng = Xoshiro256PlusPlus::seed_from_u64(seed);
            let mut best = (0u32, [0usize; 4]);
            for _ in 0..count {
                let mut t = [0usize; 4];
                for slot in &mut t {
                    *slot = rng.random_range(0..n);
                }
                t.sort_unstable();
                let s = pairing_sums(&d, t[0], t[1], t[2], t[3]);
                let gap = s[0] - s[1];
                if gap > best.0 || (gap == best.0 && t < best.1) {
                    best = (gap, t);
                }
            }
            (best.0, best.1, count)
        }
    };

    let s = pairing_sums(&d, tuple[0], tuple[1], tuple[2], tuple[3]);
    Ok(DefectReport {
        defect: HalfInteger::from_twice(i64::from(best)),
        witness: tuple.map(|i| ball.element(i).clone()),
        sums: s.map(u64::from),
        mode,
        scanned,
        lower_bound: matches!(mode, ScanMode::Sampled { .. }),
    })
}
