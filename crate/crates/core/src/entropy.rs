//! Entropy of marked groups from growth data.
//!
//! The primary estimator is the log-ratio of consecutive sphere sizes. It
//! falls back to the ball ratio once spheres vanish, which only happens in
//! finite groups. Free products get a rigorous bracket from truncated
//! factor series instead of a point value.

use std::io::{self, Write};

use dashu::base::BitTest;
use dashu::integer::UBig;
use serde::Serialize;
use thiserror::Error;

use crate::cayley::{growth_sequence, CayleyError, GrowthSequence};
use crate::group::{MarkedGroup, Model};

pub const DEFAULT_WINDOW: usize = 4;
pub const DEFAULT_SERIES_RADIUS: u32 = 30;
pub const DEFAULT_TOLERANCE: f64 = 1e-9;
/// Widest bracket `fprod_entropy` accepts before reporting `SeriesTooShort`.
pub const MAX_BRACKET_WIDTH: f64 = 1e-2;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum EntropyError {
    #[error("insufficient data: {0}")]
    InsufficientData(String),
    #[error("unsupported model: {0}")]
    Unsupported(String),
    #[error("series too short: bracket [{lower}, {upper}] did not stabilize")]
    SeriesTooShort { lower: f64, upper: f64 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Cayley(#[from] CayleyError),
}

/// `ln n` for a positive integer, exact to `f64` rounding at any size.
pub fn ln_ubig(n: &UBig) -> f64 {
    let shift = n.bit_len().saturating_sub(64);
    (n >> shift).to_f64().value().ln() + shift as f64 * std::f64::consts::LN_2
}

/// `ln(a / b)` for positive integers. When the sizes are comparable the
/// quotient is formed before taking the logarithm, so exact ratios such as 3
/// come out correctly rounded.
pub fn ln_ratio(a: &UBig, b: &UBig) -> f64 {
    let (na, nb) = (a.bit_len(), b.bit_len());
    if na.abs_diff(nb) > 900 {
        return ln_ubig(a) - ln_ubig(b);
    }
    let shift = na.min(nb).saturating_sub(64);
    ((a >> shift).to_f64().value() / (b >> shift).to_f64().value()).ln()
}

/// Entropy estimates from one growth sequence. Per-radius lists start at `R = 1`,
/// so `diff[i]` is the value at radius `i + 1`.
#[derive(Clone, Debug, Serialize)]
pub struct EntropyEstimate {
    pub method: &'static str,
    pub window: usize,
    pub counts: Vec<String>,
    /// `ln |B(R)| / R`.
    pub cumulative: Vec<f64>,
    /// `ln |S(R)| - ln |S(R-1)|`, or the ball ratio once a sphere is empty.
    pub diff: Vec<f64>,
    /// `ln |B(R)| - ln |B(R-1)|`.
    pub ball_diff: Vec<f64>,
    /// Mean of the last `window` entries of `diff`.
    pub slope: f64,
    /// Minimum of the last `window` entries of `cumulative`.
    pub liminf: f64,
}

impl EntropyEstimate {
    /// Largest radius covered.
    pub fn radius(&self) -> usize {
        self.diff.len()
    }

    pub fn diff_at(&self, r: usize) -> f64 {
        self.diff[r - 1]
    }

    pub fn cumulative_at(&self, r: usize) -> f64 {
        self.cumulative[r - 1]
    }

    /// CSV export `R,count,cumulative,diff`.
    pub fn write_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "R,count,cumulative,diff")?;
        for r in 1..=self.radius() {
            writeln!(out, "{r},{},{},{}", self.counts[r], self.cumulative_at(r), self.diff_at(r))?;
        }
        Ok(())
    }
}

pub fn entropy_estimate(growth: &GrowthSequence, window: usize) -> Result<EntropyEstimate, EntropyError> {
    let counts = &growth.counts;
    if window == 0 || counts.len() < window + 1 {
        return Err(EntropyError::InsufficientData(format!(
            "{} counts for window {window}; need at least window + 1 and window >= 1",
            counts.len()
        )));
    }
    if let Some(r) = counts.iter().position(|c| *c == UBig::ZERO) {
        return Err(EntropyError::InsufficientData(format!("count at radius {r} is zero")));
    }
    let spheres = growth.spheres();
    let mut cumulative = Vec::with_capacity(counts.len() - 1);
    let mut diff = Vec::with_capacity(counts.len() - 1);
    let mut ball_diff = Vec::with_capacity(counts.len() - 1);
    for r in 1..counts.len() {
        cumulative.push(ln_ubig(&counts[r]) / r as f64);
        let bd = ln_ratio(&counts[r], &counts[r - 1]);
        ball_diff.push(bd);
        if spheres[r] == UBig::ZERO || spheres[r - 1] == UBig::ZERO {
            diff.push(bd);
        } else {
            diff.push(ln_ratio(&spheres[r], &spheres[r - 1]));
        }
    }
    let tail = diff.len() - window;
    let slope = diff[tail..].iter().sum::<f64>() / window as f64;
    let liminf = cumulative[tail..].iter().copied().fold(f64::INFINITY, f64::min);
    Ok(EntropyEstimate {
        method: "sphere_log_ratio",
        window,
        counts: counts.iter().map(|c| c.to_string()).collect(),
        cumulative,
        diff,
        ball_diff,
        slope,
        liminf,
    })
}

/// Growth to `radius` followed by [`entropy_estimate`].
pub fn estimate_for_group(
    group: &MarkedGroup,
    radius: u32,
    window: usize,
    mem_cap: usize,
) -> Result<EntropyEstimate, EntropyError> {
    entropy_estimate(&growth_sequence(group, radius, mem_cap)?, window)
}

/// Exact entropy where a formula is known: `ln(2k - 1)` for free groups,
/// 0 for abelian and finite groups, and the larger factor entropy for
/// direct products.
pub fn exact_entropy(group: &MarkedGroup) -> Result<f64, EntropyError> {
    match group.model() {
        Model::Free { rank } => Ok(((2 * rank - 1) as f64).ln()),
        Model::ZPow { .. } | Model::ZGens { .. } | Model::Cyclic { .. } => Ok(0.0),
        Model::Prod(l, r) => Ok(exact_entropy(l)?.max(exact_entropy(r)?)),
        Model::FProd(..) => Err(EntropyError::Unsupported("free products use fprod_entropy".into())),
    }
}

/// Rigorous enclosure of a free-product entropy.
#[derive(Clone, Debug, Serialize)]
pub struct EntropyBracket {
    pub lower: f64,
    pub upper: f64,
    pub series_radius: u32,
    pub tolerance: f64,
}

impl EntropyBracket {
    pub fn contains(&self, value: f64) -> bool {
        self.lower <= value && value <= self.upper
    }

    pub fn width(&self) -> f64 {
        self.upper - self.lower
    }
}

/// Truncated sphere series of one factor, evaluated in floating point.
struct FactorSeries {
    spheres: Vec<f64>,
}

impl FactorSeries {
    fn eval(&self, z: f64, terms: usize) -> f64 {
        self.spheres[..terms].iter().rev().fold(0.0, |acc, &s| acc * z + s)
    }

    /// Lower bound on `1 / P(z)` from `P ≤ P_{<N}(z) / (1 - |S(N)| z^N)`,
    /// which holds because sphere sizes are submultiplicative.
    fn inv_lower(&self, z: f64) -> f64 {
        let n = self.spheres.len() - 1;
        let slack = 1.0 - self.spheres[n] * z.powi(n as i32);
        if slack <= 0.0 {
            return 0.0;
        }
        slack / self.eval(z, n)
    }

    /// Upper bound on `1 / P(z)` from the truncation `P ≥ P_{≤N}(z)`.
    fn inv_upper(&self, z: f64) -> f64 {
        1.0 / self.eval(z, self.spheres.len())
    }
}

/// Smallest root in `(0, 1]` of a decreasing function with `f(0+) > 0 ≥ f(1)`,
/// as a bisection interval.
fn bisect(f: impl Fn(f64) -> f64, tol: f64) -> (f64, f64) {
    let (mut lo, mut hi) = (0.0, 1.0);
    if f(hi) > 0.0 {
        return (hi, hi);
    }
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if f(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (lo, hi)
}

/// Entropy bracket for a free product `A * B`.
///
/// The sphere series satisfy `1/P = 1/P_A + 1/P_B - 1`, and the entropy is
/// `-ln z*` for the smallest positive root `z*` of the right side. Replacing
/// each factor series by its truncation and by a submultiplicative majorant
/// brackets `z*` from both sides.
pub fn fprod_entropy(
    group: &MarkedGroup,
    series_radius: u32,
    tol: f64,
    mem_cap: usize,
) -> Result<EntropyBracket, EntropyError> {
    let Model::FProd(a, b) = group.model() else {
        return Err(EntropyError::Unsupported(format!("{} is not a free product", group.spec())));
    };
    if !(tol > 0.0) {
        return Err(EntropyError::InvalidArgument(format!("tolerance {tol} must be positive")));
    }
    if series_radius < 1 {
        return Err(EntropyError::InsufficientData("series radius must be at least 1".into()));
    }
    let factor = |g: &MarkedGroup| -> Result<FactorSeries, EntropyError> {
        let seq = growth_sequence(g, series_radius, mem_cap)?;
        Ok(FactorSeries { spheres: seq.spheres().iter().map(|s| s.to_f64().value()).collect() })
    };
    let (fa, fb) = (factor(a)?, factor(b)?);

    // Truncation overestimates 1/P, so its root lies above z*.
    let (_, z_hi) = bisect(|z| fa.inv_upper(z) + fb.inv_upper(z) - 1.0, tol);
    // The majorant underestimates 1/P, so its root lies below z*.
    let (z_lo, _) = bisect(|z| fa.inv_lower(z) + fb.inv_lower(z) - 1.0, tol);

    let lower = -z_hi.ln();
    let upper = if z_lo > 0.0 { -z_lo.ln() } else { f64::INFINITY };
    if upper - lower > MAX_BRACKET_WIDTH {
        return Err(EntropyError::SeriesTooShort { lower, upper });
    }
    Ok(EntropyBracket { lower: lower.max(0.0), upper, series_radius, tolerance: tol })
}

/// Entropy of the metric `scale · d`, which is the entropy of `d` divided by `scale`.
pub fn scaled_entropy(value: f64, scale: f64) -> Result<f64, EntropyError> {
    if !(scale > 0.0) {
        return Err(EntropyError::InvalidArgument(format!("scale {scale} must be positive")));
    }
    Ok(value / scale)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::{enumerate_ball, GrowthSource, DEFAULT_MEM_CAP};

    fn g(text: &str) -> MarkedGroup {
        MarkedGroup::from_text(text).unwrap()
    }

    fn est(text: &str, r: u32) -> EntropyEstimate {
        estimate_for_group(&g(text), r, DEFAULT_WINDOW, DEFAULT_MEM_CAP).unwrap()
    }

    #[test]
    fn log_helpers_survive_huge_counts() {
        let three = UBig::from(3u8);
        let big = three.pow(2000);
        assert!((ln_ubig(&big) - 2000.0 * 3f64.ln()).abs() < 1e-9);
        assert!((ln_ratio(&(&big * &three), &big) - 3f64.ln()).abs() < 1e-15);
        assert!((ln_ratio(&big, &UBig::from(7u8)) - (2000.0 * 3f64.ln() - 7f64.ln())).abs() < 1e-9);
        assert!((ln_ratio(&UBig::from(7u8), &big) + (2000.0 * 3f64.ln() - 7f64.ln())).abs() < 1e-9);
    }

    #[test]
    fn free_group_diff_is_exact() {
        for k in 2..=4u32 {
            let e = est(&format!("free({k})"), 14);
            let target = ((2 * k - 1) as f64).ln();
            for r in 2..=14 {
                assert!((e.diff_at(r) - target).abs() < 1e-12, "k={k} r={r}");
            }
            assert!((e.slope - target).abs() < 1e-12);
        }
    }

    #[test]
    fn finite_and_polynomial_growth() {
        let c = est("cyclic(5)", 6);
        for r in 2..=6 {
            assert_eq!(c.diff_at(r), 0.0);
        }
        assert_eq!(c.slope, 0.0);

        // |B(R)| = 2R² + 2R + 1 for Z².
        let z2 = est("zpow(2)", 14);
        for r in 1..=14usize {
            assert_eq!(z2.counts[r], (2 * r * r + 2 * r + 1).to_string());
        }
        let s = z2.slope;
        assert!(s < 0.3, "{s}");
        let window: Vec<f64> = (10..=14).map(|r| z2.diff_at(r)).collect();
        assert!(window.windows(2).all(|w| w[1] < w[0]), "{window:?}");
    }

    #[test]
    fn monotone_data_contract() {
        for text in ["free(2)", "zpow(3)", "z(1,2,3)", "prod(free(2),cyclic(5))", "cyclic(4)"] {
            let e = est(text, 8);
            for r in 1..=8 {
                assert!(e.ball_diff[r - 1] >= 0.0);
                if r > 1 {
                    assert!(e.cumulative_at(r) * r as f64 >= e.cumulative_at(r - 1) * (r - 1) as f64 - 1e-12);
                }
            }
        }
    }

    #[test]
    fn fekete_direction_of_cumulative() {
        for k in 2..=4u32 {
            let e = est(&format!("free({k})"), 14);
            let h = exact_entropy(&g(&format!("free({k})"))).unwrap();
            assert!(e.liminf >= h);
            assert!((e.slope - h).abs() < 0.05);
        }
        let e = est("prod(free(2),cyclic(5))", 14);
        assert!((e.slope - 3f64.ln()).abs() < 0.1);
    }

    #[test]
    fn insufficient_data() {
        let seq = GrowthSequence::from_counts(vec![UBig::ONE, UBig::from(5u8)], GrowthSource::ClosedForm);
        assert!(matches!(entropy_estimate(&seq, 4), Err(EntropyError::InsufficientData(_))));
        assert!(matches!(entropy_estimate(&seq, 0), Err(EntropyError::InsufficientData(_))));
        assert!(entropy_estimate(&seq, 1).is_ok());
    }

    #[test]
    fn exact_values() {
        assert!((exact_entropy(&g("free(3)")).unwrap() - 5f64.ln()).abs() < 1e-15);
        assert_eq!(exact_entropy(&g("z(1,2,3)")).unwrap(), 0.0);
        assert!((exact_entropy(&g("prod(free(2),cyclic(7))")).unwrap() - 3f64.ln()).abs() < 1e-15);
        assert!(matches!(exact_entropy(&g("fprod(z(1),z(1))")), Err(EntropyError::Unsupported(_))));
    }

    #[test]
    fn free_product_brackets() {
        let f2 = fprod_entropy(&g("fprod(z(1),z(1))"), 30, 1e-12, DEFAULT_MEM_CAP).unwrap();
        assert!(f2.contains(exact_entropy(&g("free(2)")).unwrap()), "{f2:?}");
        assert!(f2.width() < 1e-6);

        let dihedral = fprod_entropy(&g("fprod(cyclic(2),cyclic(2))"), 30, 1e-9, DEFAULT_MEM_CAP).unwrap();
        assert!(dihedral.contains(0.0), "{dihedral:?}");

        for text in ["fprod(z(1),z(2,3))", "fprod(z(1),z(3,4))"] {
            let b = fprod_entropy(&g(text), 30, 1e-9, DEFAULT_MEM_CAP).unwrap();
            assert!(b.upper < 11f64.ln(), "{text} {b:?}");
        }
    }

    #[test]
    fn free_product_bracket_agrees_with_bfs() {
        // An independent view of Z * Z/3: the BFS sphere ratio at radius 12.
        let group = g("fprod(z(1),cyclic(3))");
        let b = fprod_entropy(&group, 30, 1e-12, DEFAULT_MEM_CAP).unwrap();
        let ball = enumerate_ball(&group, 12, DEFAULT_MEM_CAP).unwrap();
        let s = ball.sphere_sizes();
        let ratio = (s[12] as f64 / s[11] as f64).ln();
        assert!((ratio - 0.5 * (b.lower + b.upper)).abs() < 1e-2, "{ratio} {b:?}");
        // Clearing denominators in 1/P = (1-z)/(1+z) + 1/(1+2z) - 1 leaves 1 - z - 4z².
        let z = (17f64.sqrt() - 1.0) / 8.0;
        assert!(b.contains(-z.ln()), "{b:?}");
    }

    #[test]
    fn short_series_is_reported() {
        let r = fprod_entropy(&g("fprod(z(1),z(1))"), 2, 1e-9, DEFAULT_MEM_CAP);
        assert!(matches!(r, Err(EntropyError::SeriesTooShort { .. })), "{r:?}");
    }

    #[test]
    fn scaling() {
        assert_eq!(scaled_entropy(3f64.ln(), 2.0).unwrap(), 3f64.ln() / 2.0);
        assert_eq!(scaled_entropy(1.25, 1.0).unwrap(), 1.25);
        for i in 1..=20u32 {
            assert!(scaled_entropy(((2 * i - 1) as f64).ln(), i as f64).unwrap() <= 1.0);
        }
        assert!(scaled_entropy(1.0, 0.0).is_err());
    }
}
