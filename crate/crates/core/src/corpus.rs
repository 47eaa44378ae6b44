//! The worked-example suite: one claim per acceptance criterion, each
//! evaluated with the library's own operations and reported as PASS/FAIL.

use std::time::Instant;

use dashu::integer::UBig;
use rand::{RngExt, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;
use serde::Serialize;

use crate::cayley::{closed_form_growth, enumerate_ball, marked_fingerprint, DEFAULT_MEM_CAP};
use crate::constants::{
    absorption_constant, bg_check, constants_report, decrire_bound, displacement_floor, matching_radius, n2_via,
    numerator_identity, presentation_count_bound, qi_c_coefficient, qi_chain, sandwich_check, BigValue,
    ConstantsInput, NuFunction, Provenance, DEFAULT_PRECISION,
};
use crate::displacement::{asymptotic_displacement, cyclically_reduced_length, minimal_displacement};
use crate::entropy::{entropy_estimate, estimate_for_group, fprod_entropy, scaled_entropy, DEFAULT_SERIES_RADIUS, DEFAULT_TOLERANCE};
use crate::group::{Element, MarkedGroup};
use crate::hyperbolicity::{four_point_defect, four_point_defect_with_cap, ScanMode};
use crate::presentations::{count_presentations, free_ball_count, free_ball_enumerate, verify_ball_bound};

pub const FREE_ENTROPY_TOL: f64 = 1e-12;
pub const Z_ENTROPY_MAX_AT_12: f64 = 0.2;
pub const Z_FOUR_POINT_MAX: f64 = 3.0;
pub const QI_REL_TOL: f64 = 1e-12;
pub const TORSION_ENTROPY_TOL: f64 = 0.01;
pub const TORSION_FOUR_POINT_MAX: f64 = 2.0;
/// `B(4)` of `prod(free(2), cyclic(5))` has 373 vertices.
pub const TORSION_EXACT_CAP: usize = 400;
/// Twice the exact four-point defect of `zpow(2)` on `B(R)`, `R = 2, 4, 6`.
pub const Z2_TWICE_DEFECTS: [(u32, i64); 3] = [(2, 4), (4, 8), (6, 12)];
/// `H → 0` is evaluated at this entropy.
pub const H_NEAR_ZERO: f64 = 1e-300;

#[derive(Clone, Debug)]
pub struct CorpusConfig {
    pub mem_cap: usize,
    pub precision: usize,
    pub seed: u64,
}

impl Default for CorpusConfig {
    fn default() -> Self {
        CorpusConfig { mem_cap: DEFAULT_MEM_CAP, precision: DEFAULT_PRECISION, seed: 0 }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ClaimResult {
    pub id: u32,
    pub claim: &'static str,
    pub passed: bool,
    pub detail: String,
    #[serde(skip)]
    pub seconds: f64,
}

impl ClaimResult {
    pub fn line(&self) -> String {
        format!(
            "[{}] {:>2} {} ({:.2}s): {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.claim,
            self.seconds,
            self.detail
        )
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CorpusReport {
    pub passed: bool,
    pub claims: Vec<ClaimResult>,
}

type Outcome = Result<(bool, String), String>;

pub const CLAIMS: [(u32, &str); 14] = [
    (1, "free-group growth"),
    (2, "free-group entropy"),
    (3, "(Z,S_n) four-point defect"),
    (4, "(Z,S_n) entropy"),
    (5, "Z^2 defect trend"),
    (6, "Bishop-Gromov check"),
    (7, "quasi-isometry constant chain"),
    (8, "sandwich lemma on trees"),
    (9, "presentation census"),
    (10, "displacement oracle equivalence"),
    (11, "torsion-product entropy and defect"),
    (12, "free-product fingerprints and entropy"),
    (13, "scaled metrics"),
    (14, "constants suite"),
];

pub fn run_claim(id: u32, cfg: &CorpusConfig) -> Option<ClaimResult> {
    let &(_, claim) = CLAIMS.iter().find(|c| c.0 == id)?;
    let start = Instant::now();
    let outcome = match id {
        1 => free_growth(cfg),
        2 => free_entropy(cfg),
        3 => z_four_point(cfg),
        4 => z_entropy(cfg),
        5 => z2_trend(cfg),
        6 => bishop_gromov(),
        7 => qi_grid(),
        8 => sandwich(),
        9 => census(cfg),
        10 => displacement_oracle(cfg),
        11 => torsion_product(cfg),
        12 => free_products(cfg),
        13 => scaled(),
        _ => constants_suite(cfg),
    };
    let (passed, detail) = outcome.unwrap_or_else(|e| (false, format!("error: {e}")));
    Some(ClaimResult { id, claim, passed, detail, seconds: start.elapsed().as_secs_f64() })
}

pub fn run_corpus(cfg: &CorpusConfig) -> CorpusReport {
    let claims: Vec<ClaimResult> = CLAIMS.iter().filter_map(|&(id, _)| run_claim(id, cfg)).collect();
    CorpusReport { passed: claims.iter().all(|c| c.passed), claims }
}

fn group(text: &str) -> Result<MarkedGroup, String> {
    MarkedGroup::from_text(text).map_err(|e| e.to_string())
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn free_sphere(k: u32, r: u32) -> UBig {
    if r == 0 {
        UBig::ONE
    } else {
        UBig::from(2 * k) * UBig::from(2 * k - 1).pow(r as usize - 1)
    }
}

fn free_growth(cfg: &CorpusConfig) -> Outcome {
    for k in 1..=3 {
        let g = group(&format!("free({k})"))?;
        let ball = enumerate_ball(&g, 10, cfg.mem_cap).map_err(err)?;
        let sizes = ball.sphere_sizes();
        if let Some(r) = (0..=10).find(|&r| UBig::from(sizes[r as usize]) != free_sphere(k, r)) {
            return Ok((false, format!("free({k}) enumerated sphere {r} is {}", sizes[r as usize])));
        }
        let spheres = closed_form_growth(&g, 300).map_err(err)?.spheres();
        if let Some(r) = (0..=300).find(|&r| spheres[r as usize] != free_sphere(k, r)) {
            return Ok((false, format!("free({k}) closed-form sphere {r} differs")));
        }
    }
    Ok((true, "k<=3: enumeration R<=10 and closed form R<=300 equal 2k(2k-1)^(R-1)".into()))
}

fn free_entropy(cfg: &CorpusConfig) -> Outcome {
    let mut worst = 0f64;
    for i in 2..=4u32 {
        let est = estimate_for_group(&group(&format!("free({i})"))?, 14, 4, cfg.mem_cap).map_err(err)?;
        let target = f64::from(2 * i - 1).ln();
        for r in 2..=14 {
            worst = worst.max((est.diff_at(r) - target).abs());
        }
    }
    Ok((worst <= FREE_ENTROPY_TOL, format!("max |diff - ln(2i-1)| = {worst:.3e} (tol {FREE_ENTROPY_TOL:e})")))
}

fn z_spec(n: u32) -> String {
    let gens: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    format!("z({})", gens.join(","))
}

fn z_four_point(cfg: &CorpusConfig) -> Outcome {
    let mut defects = Vec::new();
    for n in 1..=5 {
        let ball = enumerate_ball(&group(&z_spec(n))?, 8, cfg.mem_cap).map_err(err)?;
        defects.push(four_point_defect(&ball, ScanMode::Exact).map_err(err)?.defect.to_f64());
    }
    let ok = defects.iter().all(|&d| d <= Z_FOUR_POINT_MAX) && defects[0] == 0.0;
    Ok((ok, format!("defects n=1..5 on B(0,8): {defects:?}")))
}

fn z_entropy(cfg: &CorpusConfig) -> Outcome {
    let mut details = Vec::new();
    let mut ok = true;
    for n in 1..=5 {
        let est = estimate_for_group(&group(&z_spec(n))?, 12, 4, cfg.mem_cap).map_err(err)?;
        let at12 = est.diff_at(12);
        let nonincreasing = est.diff.windows(2).all(|w| w[1] <= w[0]);
        let ball_decreasing = est.ball_diff.windows(2).all(|w| w[1] < w[0]);
        ok &= at12 <= Z_ENTROPY_MAX_AT_12 && nonincreasing && ball_decreasing;
        details.push(format!("n={n}: diff(12)={at12:.4} ball_diff(12)={:.4}", est.ball_diff[11]));
    }
    Ok((ok, details.join("; ")))
}

fn z2_trend(cfg: &CorpusConfig) -> Outcome {
    let g = group("zpow(2)")?;
    let mut twice = Vec::new();
    for (r, _) in Z2_TWICE_DEFECTS {
        let ball = enumerate_ball(&g, r, cfg.mem_cap).map_err(err)?;
        twice.push(four_point_defect(&ball, ScanMode::Exact).map_err(err)?.defect.twice());
    }
    let expected: Vec<i64> = Z2_TWICE_DEFECTS.iter().map(|p| p.1).collect();
    let ok = twice == expected && twice.windows(2).all(|w| w[1] > w[0]);
    Ok((ok, format!("twice defects at R=2,4,6: {twice:?} (regression {expected:?})")))
}

fn bishop_gromov() -> Outcome {
    let growth = closed_form_growth(&group("free(2)")?, 300).map_err(err)?;
    let pass = bg_check(&growth, &ConstantsInput::new(0.01, 3f64.ln(), 1.0).map_err(err)?).map_err(err)?;
    let negative = bg_check(&growth, &ConstantsInput::new(0.01, 0.5, 1.0).map_err(err)?).map_err(err)?;
    let control = bg_check(&growth, &ConstantsInput::new(0.01, 0.1, 1.0).map_err(err)?).map_err(err)?;
    let ok = pass.passed && !negative.passed;
    Ok((
        ok,
        format!(
            "H=ln3: {} over {} pairs (worst margin {:.3}); H=0.5 negative control: {} (worst margin {:.3}, expected FAIL); H=0.1 control: {} with {} failing pairs",
            verdict(pass.passed),
            pass.pairs,
            pass.worst_margin,
            verdict(negative.passed),
            negative.worst_margin,
            verdict(control.passed),
            control.failures
        ),
    ))
}

fn verdict(passed: bool) -> &'static str {
    if passed {
        "PASS"
    } else {
        "FAIL"
    }
}

fn qi_grid() -> Outcome {
    let mut worst = f64::NEG_INFINITY;
    for i in 1..=100 {
        for j in 1..=100 {
            let (delta, diam) = (0.1 * f64::from(i), 0.1 * f64::from(j));
            let (v, target) = qi_chain(delta, diam).map_err(err)?;
            worst = worst.max((v - target) / target);
        }
    }
    let coeff_ok = (0..=900).all(|i| qi_c_coefficient(1.0 + 0.01 * f64::from(i)) < 1.0);
    let ok = worst <= QI_REL_TOL && coeff_ok;
    Ok((ok, format!("max (value - 16(δ/D+2))/target = {worst:.4} on 100x100 grid; (4λ+3)/(6λ+2) < 1 on [1,10]: {coeff_ok}")))
}

fn sandwich() -> Outcome {
    let lengths: Vec<u64> = (1..=200).collect();
    let rep = sandwich_check(8, 1.0, &lengths).map_err(err)?;
    Ok((rep.passed, format!("k=8, D=1, |γ| in 1..200: {} failures, {} tight", rep.failures.len(), rep.tight_upper)))
}

fn census(cfg: &CorpusConfig) -> Outcome {
    for k in 1..=3 {
        for p in 0..=6 {
            let n = free_ball_enumerate(k, p, 1 << 20).map_err(err)?.len();
            if UBig::from(n) != free_ball_count(k, p).map_err(err)? {
                return Ok((false, format!("enumeration differs at k={k}, p={p}")));
            }
        }
    }
    for k in 1..=8 {
        for p in 3..=10 {
            if !verify_ball_bound(k, p).map_err(err)? || !count_presentations(k, p, cfg.precision).map_err(err)?.within_cap {
                return Ok((false, format!("bound fails at k={k}, p={p}")));
            }
        }
    }
    let q1 = presentation_count_bound(1, 3, cfg.precision).map_err(err)?;
    let q2 = presentation_count_bound(2, 3, cfg.precision).map_err(err)?;
    let expect2 = BigValue::Exact(UBig::from(257u32) + (UBig::ONE << 64));
    let ok = q1 == BigValue::from_u64(257) && q2 == expect2;
    Ok((ok, format!("enumeration = formula (k<=3, p<=6); bounds hold on k in 1..8, p in 3..10; q(1,3)={q1}, q(2,3)={q2}")))
}

/// Reduced random word in free(2) from up to `max_len` uniform letters.
pub fn random_free_word(group: &MarkedGroup, rng: &mut Xoshiro256PlusPlus, max_len: usize) -> Element {
    let len = rng.random_range(1..=max_len);
    let word: Vec<usize> = (0..len).map(|_| rng.random_range(0..group.num_generators())).collect();
    group.evaluate(&word)
}

fn displacement_oracle(cfg: &CorpusConfig) -> Outcome {
    let f2 = group("free(2)")?;
    let mut rng = Xoshiro256PlusPlus::seed_from_u64(cfg.seed);
    let (mut checked_s, mut mismatches) = (0, Vec::new());
    for _ in 0..100 {
        let w = random_free_word(&f2, &mut rng, 12);
        let crl = cyclically_reduced_length(&f2, &w).map_err(err)?;
        let asym = asymptotic_displacement(&f2, &w, 10).map_err(err)?;
        if !asym.stabilized || asym.ell_diff != crl as i64 {
            mismatches.push(format!("{w}: ell_diff {} vs {crl}", asym.ell_diff));
        }
        let tail = (f2.word_length(&w) - crl) / 2;
        if tail <= 6 {
            checked_s += 1;
            let s = minimal_displacement(&f2, &w, 6, cfg.mem_cap).map_err(err)?;
            if s.s_min != crl {
                mismatches.push(format!("{w}: s_min {} vs {crl}", s.s_min));
            }
        }
    }
    Ok((
        mismatches.is_empty(),
        format!("100 words (seed {}), {checked_s} with tail <= 6; mismatches: {mismatches:?}", cfg.seed),
    ))
}

fn torsion_product(cfg: &CorpusConfig) -> Outcome {
    let g = group("prod(free(2),cyclic(5))")?;
    let est = entropy_estimate(&closed_form_growth(&g, 14).map_err(err)?, 4).map_err(err)?;
    let gap = (est.diff_at(14) - 3f64.ln()).abs();
    let ball = enumerate_ball(&g, 4, cfg.mem_cap).map_err(err)?;
    let defect = four_point_defect_with_cap(&ball, ScanMode::Exact, TORSION_EXACT_CAP).map_err(err)?.defect.to_f64();
    let ok = gap <= TORSION_ENTROPY_TOL && defect <= TORSION_FOUR_POINT_MAX;
    Ok((ok, format!("|diff(14) - ln3| = {gap:.2e}; defect on B(4) ({} vertices) = {defect}", ball.len())))
}

fn free_products(cfg: &CorpusConfig) -> Outcome {
    let specs = ["fprod(z(1),z(2,3))", "fprod(z(1),z(3,4))", "fprod(z(1),z(1))"];
    let mut prints = Vec::new();
    let mut brackets = Vec::new();
    for s in specs {
        let g = group(s)?;
        prints.push(marked_fingerprint(&g, 4, cfg.mem_cap).map_err(err)?);
        brackets.push(fprod_entropy(&g, DEFAULT_SERIES_RADIUS, DEFAULT_TOLERANCE, cfg.mem_cap).map_err(err)?);
    }
    let distinct = prints[0] != prints[1] && prints[0] != prints[2];
    let below = brackets.iter().all(|b| b.upper < 11f64.ln());
    let ranges: Vec<String> = brackets.iter().map(|b| format!("[{:.4}, {:.4}]", b.lower, b.upper)).collect();
    Ok((distinct && below, format!("fingerprints distinct: {distinct}; brackets {ranges:?} vs ln 11 = {:.4}", 11f64.ln())))
}

fn scaled() -> Outcome {
    let mut worst = f64::NEG_INFINITY;
    for i in 1..=20 {
        worst = worst.max(scaled_entropy(f64::from(2 * i - 1).ln(), f64::from(i)).map_err(err)?);
    }
    Ok((worst <= 1.0, format!("max ln(2i-1)/i over i=1..20 = {worst:.6}")))
}

fn constants_suite(cfg: &CorpusConfig) -> Outcome {
    let p = cfg.precision;
    let mut identity_ok = true;
    let mut ordering_ok = true;
    for &(d, h) in &[(0.0, H_NEAR_ZERO), (0.01, 3f64.ln()), (0.5, 0.25), (2.0, 1.0), (7.25, 0.125)] {
        for diam in [0.5, 1.0, 3.0] {
            let input = ConstantsInput::new(d, h, diam).map_err(err)?;
            identity_ok &= numerator_identity(&input);
            for nu in [NuFunction::ceil(), NuFunction::one()] {
                let floor = displacement_floor(&input, &nu, p);
                let bound = decrire_bound(matching_radius(&input), d, h, &nu, p).map_err(err)?;
                ordering_ok &= floor <= bound;
            }
        }
    }
    let absorption = absorption_constant();
    let input = ConstantsInput::new(0.5, 0.3, 2.0).map_err(err)?;
    let mut captured = Vec::new();
    n2_via(&input, |dd, hh| {
        captured.push((dd, hh));
        Ok(BigValue::from_u64(1))
    })
    .map_err(err)?;
    let wiring = captured == [(16.0 * (0.5 / 2.0 + 2.0), 10.0 * 0.3 * 2.0)];
    let report = constants_report(&ConstantsInput::new(0.0, H_NEAR_ZERO, 1.0).map_err(err)?, &NuFunction::ceil(), p)
        .map_err(err)?;
    let labels = [
        report.nu_values.provenance,
        report.n.provenance,
        report.n0.provenance,
        report.n1.provenance,
        report.n2.provenance,
        report.displacement_floor.provenance,
        report.decrire_bound_at_matching_radius.provenance,
    ]
    .iter()
    .all(|&l| l == Provenance::Consistency);
    let ok = identity_ok && ordering_ok && absorption <= 243.0 && wiring && labels;
    Ok((
        ok,
        format!(
            "numerator identity: {identity_ok}; floor <= decrire at R=(5/2)(D+4δ): {ordering_ok}; 3·2^(25/4) = {absorption:.4} <= 243; N2 args {captured:?}; ν-dependent outputs labelled CONSISTENCY: {labels}"
        ),
    ))
}
