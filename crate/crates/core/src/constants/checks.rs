use serde::Serialize;

use super::formulas::bg_log_bound;
use super::{ConstantsError, ConstantsInput};
use crate::cayley::GrowthSequence;
use crate::entropy::ln_ratio;

/// Outcome of checking the Bishop–Gromov inequality on every admissible radius pair.
#[derive(Clone, Debug, Serialize)]
pub struct BgReport {
    pub passed: bool,
    pub r_min: u32,
    pub r_max: u32,
    pub pairs: u64,
    pub failures: u64,
    /// `ln bound - ln ratio` at the tightest pair.
    pub worst_margin: f64,
    pub worst_pair: (u32, u32),
    /// Up to ten failing `(r, R)` pairs in scan order.
    pub failing_pairs: Vec<(u32, u32)>,
}

/// Checks `|B(R)| / |B(r)| < bg_bound(R, r, H)` for all integers
/// `10(D + δ) ≤ r < R ≤` the growth radius, comparing logarithms.
pub fn bg_check(growth: &GrowthSequence, input: &ConstantsInput) -> Result<BgReport, ConstantsError> {
    let r_min = (10.0 * (input.diam + input.delta)).ceil().max(1.0) as u32;
    let r_max = growth.radius() as u32;
    if r_max <= r_min {
        return Err(ConstantsError::InsufficientRange(format!(
            "growth reaches radius {r_max}; need more than {r_min}"
        )));
    }
    let counts = &growth.counts;
    let mut report = BgReport {
        passed: true,
        r_min,
        r_max,
        pairs: 0,
        failures: 0,
        worst_margin: f64::INFINITY,
        worst_pair: (r_min, r_min + 1),
        failing_pairs: Vec::new(),
    };
    for r in r_min..r_max {
        for big_r in r + 1..=r_max {
            let ratio = ln_ratio(&counts[big_r as usize], &counts[r as usize]);
            let margin = bg_log_bound(f64::from(big_r), f64::from(r), input.entropy)? - ratio;
            report.pairs += 1;
            if margin < report.worst_margin {
                report.worst_margin = margin;
                report.worst_pair = (r, big_r);
            }
            if margin <= 0.0 {
                report.failures += 1;
                report.passed = false;
                if report.failing_pairs.len() < 10 {
                    report.failing_pairs.push((r, big_r));
                }
            }
        }
    }
    Ok(report)
}

/// Outcome of the word-metric sandwich on the tree oracle.
#[derive(Clone, Debug, Serialize)]
pub struct SandwichReport {
    pub passed: bool,
    pub k: u32,
    pub diam: f64,
    pub checked: usize,
    /// Lengths `|γ|` where an inequality failed.
    pub failures: Vec<u64>,
    /// Lengths where the upper inequality is an equality.
    pub tight_upper: usize,
}

/// Word length for `Σ' = Σ_{(k+2)D}(e)` on a tree of unit edges: `⌈|γ|/((k+2)D)⌉`.
pub fn tree_sigma_prime_length(length: u64, k: u32, diam: f64) -> u64 {
    (length as f64 / ((f64::from(k) + 2.0) * diam)).ceil() as u64
}

/// Verifies `kD(d' - 1) ≤ |γ| ≤ (k+2)D d'` for each sampled length.
pub fn sandwich_check(k: u32, diam: f64, lengths: &[u64]) -> Result<SandwichReport, ConstantsError> {
    if k < 1 || !(diam > 0.0) {
        return Err(ConstantsError::DomainError(format!("need k >= 1 and D > 0, got k={k}, D={diam}")));
    }
    let (kd, k2d) = (f64::from(k) * diam, (f64::from(k) + 2.0) * diam);
    let mut failures = Vec::new();
    let mut tight_upper = 0;
    for &n in lengths {
        let d = tree_sigma_prime_length(n, k, diam) as f64;
        let x = n as f64;
        if !(kd * (d - 1.0) <= x && x <= k2d * d) {
            failures.push(n);
        }
        if x == k2d * d {
            tight_upper += 1;
        }
    }
    Ok(SandwichReport { passed: failures.is_empty(), k, diam, checked: lengths.len(), failures, tight_upper })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::{closed_form_growth, enumerate_ball, DEFAULT_MEM_CAP};
    use crate::group::{Element, MarkedGroup};
    use std::collections::{HashMap, VecDeque};

    #[test]
    fn free_group_passes_at_its_entropy() {
        let growth = closed_form_growth(&MarkedGroup::from_text("free(2)").unwrap(), 60).unwrap();
        let input = ConstantsInput::new(0.01, 3f64.ln(), 1.0).unwrap();
        let rep = bg_check(&growth, &input).unwrap();
        assert!(rep.passed);
        assert_eq!(rep.r_min, 11);
        assert_eq!(rep.pairs, (49 * 50 / 2) as u64);
    }

    #[test]
    fn understated_entropy_fails() {
        let growth = closed_form_growth(&MarkedGroup::from_text("free(2)").unwrap(), 300).unwrap();
        let input = ConstantsInput::new(0.01, 0.1, 1.0).unwrap();
        let rep = bg_check(&growth, &input).unwrap();
        assert!(!rep.passed);
        assert!(rep.failures > 0 && !rep.failing_pairs.is_empty());
        assert!(rep.worst_margin < 0.0);
    }

    #[test]
    fn finite_group_passes_trivially() {
        let growth = closed_form_growth(&MarkedGroup::from_text("cyclic(5)").unwrap(), 30).unwrap();
        let rep = bg_check(&growth, &ConstantsInput::new(0.0, 0.01, 1.0).unwrap()).unwrap();
        assert!(rep.passed);
    }

    #[test]
    fn range_is_required() {
        let growth = closed_form_growth(&MarkedGroup::from_text("free(2)").unwrap(), 10).unwrap();
        let r = bg_check(&growth, &ConstantsInput::new(0.01, 1.0, 1.0).unwrap());
        assert!(matches!(r, Err(ConstantsError::InsufficientRange(_))));
    }

    #[test]
    fn sandwich_examples() {
        assert_eq!(tree_sigma_prime_length(30, 8, 1.0), 3);
        let rep = sandwich_check(8, 1.0, &[30]).unwrap();
        assert!(rep.passed && rep.tight_upper == 1);
        assert!(sandwich_check(8, 1.0, &[1]).unwrap().passed);
        let all: Vec<u64> = (1..=200).collect();
        assert!(sandwich_check(8, 1.0, &all).unwrap().passed);
        assert!(sandwich_check(0, 1.0, &all).is_err());
    }

    /// BFS in free(2) with `Σ' = B(k+2) \ {e}` reproduces the ceiling formula.
    #[test]
    fn ceiling_oracle_matches_bfs() {
        let f2 = MarkedGroup::from_text("free(2)").unwrap();
        for k in 1..=2u32 {
            let m = k + 2;
            let target = 9;
            let sigma: Vec<Element> = enumerate_ball(&f2, m, DEFAULT_MEM_CAP).unwrap().elements().skip(1).cloned().collect();
            let region = enumerate_ball(&f2, target, DEFAULT_MEM_CAP).unwrap();
            let mut dist: HashMap<Element, u64> = HashMap::from([(f2.identity(), 0)]);
            let mut queue = VecDeque::from([f2.identity()]);
            while let Some(g) = queue.pop_front() {
                let d = dist[&g];
                for s in &sigma {
                    let h = f2.multiply(&g, s);
                    if region.contains(&h) && !dist.contains_key(&h) {
                        dist.insert(h.clone(), d + 1);
                        queue.push_back(h);
                    }
                }
            }
            for g in region.elements() {
                let len = f2.word_length(g);
                assert_eq!(dist[g], tree_sigma_prime_length(len, k, 1.0), "k={k} {g}");
            }
        }
    }
}
