//! Asymptotic and minimal displacement of group elements acting on their
//! Cayley graph, isometry classification, and the displacement floor check.

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::cayley::{enumerate_ball, CayleyError};
use crate::constants::{displacement_floor, ConstantsError, ConstantsInput, NuFunction, Provenance, NU_PROVENANCE};
use crate::group::{Element, MarkedGroup, Model, Side, Syllable};

/// Trailing run of equal differences needed to call `a_k - a_{k-1}` stable.
pub const STABILIZATION_WINDOW: usize = 3;

#[derive(Debug, Error)]
pub enum DisplacementError {
    #[error("wrong model: {0}")]
    WrongModel(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Cayley(#[from] CayleyError),
    #[error(transparent)]
    Constants(#[from] ConstantsError),
}

/// Word lengths of `γ, γ², …, γ^K` with the two estimators of `ℓ(γ)`.
#[derive(Clone, Debug, Serialize)]
pub struct AsymptoticDisplacement {
    pub element: Element,
    #[serde(rename = "K")]
    pub k: u32,
    /// `a_k = |γ^k|` for `k = 1..=K`.
    pub powers: Vec<u64>,
    /// `min_k a_k / k`, an upper bound on `ℓ`.
    pub ell_ratio: f64,
    /// The `k` attaining `ell_ratio`, smallest first.
    pub ell_ratio_at: u32,
    /// `a_K - a_{K-1}`.
    pub ell_diff: i64,
    pub stabilized: bool,
    pub subadditive: bool,
}

/// `min_{x ∈ B(e,R)} |x⁻¹γx|` with its first witness in ball order.
#[derive(Clone, Debug, Serialize)]
pub struct MinimalDisplacement {
    pub element: Element,
    #[serde(rename = "R")]
    pub radius: u32,
    pub s_min: u64,
    pub witness: Element,
    pub scanned: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct DisplacementReport {
    pub asymptotic: AsymptoticDisplacement,
    pub minimal: MinimalDisplacement,
}

pub fn asymptotic_displacement(
    group: &MarkedGroup,
    gamma: &Element,
    k: u32,
) -> Result<AsymptoticDisplacement, DisplacementError> {
    if k < 4 {
        return Err(DisplacementError::InvalidArgument(format!("K must be at least 4, got {k}")));
    }
    let mut powers = Vec::with_capacity(k as usize);
    let mut acc = group.identity();
    for _ in 0..k {
        acc = group.multiply(&acc, gamma);
        powers.push(group.word_length(&acc));
    }
    let (mut ell_ratio, mut ell_ratio_at) = (f64::INFINITY, 1);
    for (i, &a) in powers.iter().enumerate() {
        let r = a as f64 / (i + 1) as f64;
        if r < ell_ratio {
            ell_ratio = r;
            ell_ratio_at = i as u32 + 1;
        }
    }
    let diffs: Vec<i64> = powers.windows(2).map(|w| w[1] as i64 - w[0] as i64).collect();
    let tail = &diffs[diffs.len() - STABILIZATION_WINDOW..];
    let stabilized = tail.iter().all(|&d| d == tail[0]);
    let at = |i: usize| powers[i - 1];
    let n = k as usize;
    let subadditive = (1..n).all(|i| (1..=n - i).all(|j| at(i + j) <= at(i) + at(j)));
    Ok(AsymptoticDisplacement {
        element: gamma.clone(),
        k,
        ell_diff: *diffs.last().expect("K >= 4"),
        powers,
        ell_ratio,
        ell_ratio_at,
        stabilized,
        subadditive,
    })
}

pub fn minimal_displacement(
    group: &MarkedGroup,
    gamma: &Element,
    radius: u32,
    mem_cap: usize,
) -> Result<MinimalDisplacement, DisplacementError> {
    let ball = enumerate_ball(group, radius, mem_cap)?;
    let elements: Vec<&Element> = ball.elements().collect();
    let (s_min, index) = elements
        .par_iter()
        .enumerate()
        .map(|(i, x)| (group.word_length(&group.multiply(&group.multiply(&group.inverse(x), gamma), x)), i))
        .min()
        .expect("ball contains the identity");
    Ok(MinimalDisplacement {
        element: gamma.clone(),
        radius,
        s_min,
        witness: elements[index].clone(),
        scanned: elements.len(),
    })
}

pub fn displacement_report(
    group: &MarkedGroup,
    gamma: &Element,
    k: u32,
    radius: u32,
    mem_cap: usize,
) -> Result<DisplacementReport, DisplacementError> {
    Ok(DisplacementReport {
        asymptotic: asymptotic_displacement(group, gamma, k)?,
        minimal: minimal_displacement(group, gamma, radius, mem_cap)?,
    })
}

/// Length of the cyclic reduction of `γ` on free models and free products of them.
pub fn cyclically_reduced_length(group: &MarkedGroup, gamma: &Element) -> Result<u64, DisplacementError> {
    match (group.model(), gamma) {
        (Model::Free { .. }, Element::Word(w)) => {
            let (mut i, mut j) = (0, w.len());
            while j - i >= 2 && w[i] == -w[j - 1] {
                i += 1;
                j -= 1;
            }
            Ok((j - i) as u64)
        }
        (Model::FProd(l, r), Element::Syllables(s)) => {
            let factor = |side: Side| if side == Side::Left { l } else { r };
            for f in [l, r] {
                if !free_like(f) {
                    return Err(wrong_model(group));
                }
            }
            let mut s: Vec<Syllable> = s.clone();
            loop {
                match s.len() {
                    0 => return Ok(0),
                    1 => return cyclically_reduced_length(factor(s[0].side), &s[0].element),
                    n if s[0].side == s[n - 1].side => {
                        let first = s.remove(0);
                        let f = factor(first.side);
                        let last = s.pop().expect("two syllables");
                        let merged = f.multiply(&last.element, &first.element);
                        if !f.is_identity(&merged) {
                            s.push(Syllable { side: first.side, element: merged });
                        }
                    }
                    _ => {
                        return Ok(s.iter().map(|syl| factor(syl.side).word_length(&syl.element)).sum());
                    }
                }
            }
        }
        _ => Err(wrong_model(group)),
    }
}

fn free_like(group: &MarkedGroup) -> bool {
    match group.model() {
        Model::Free { .. } => true,
        Model::FProd(l, r) => free_like(l) && free_like(r),
        _ => false,
    }
}

fn wrong_model(group: &MarkedGroup) -> DisplacementError {
    DisplacementError::WrongModel(format!("{} is not a free group or a free product of free groups", group.spec()))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum IsometryClass {
    Elliptic { order: u64 },
    Hyperbolic { ell_diff: u64 },
    Unknown { reason: String },
}

/// Elliptic if `γ^m = e` for some `m ≤ K`; hyperbolic if the difference
/// estimator has stabilized at a positive value; otherwise unknown.
pub fn classify_isometry(group: &MarkedGroup, gamma: &Element, k: u32) -> IsometryClass {
    let mut acc = group.identity();
    for m in 1..=u64::from(k) {
        acc = group.multiply(&acc, gamma);
        if group.is_identity(&acc) {
            return IsometryClass::Elliptic { order: m };
        }
    }
    match asymptotic_displacement(group, gamma, k) {
        Ok(rep) if rep.stabilized && rep.ell_diff > 0 => IsometryClass::Hyperbolic { ell_diff: rep.ell_diff as u64 },
        Ok(rep) if rep.stabilized => IsometryClass::Unknown {
            reason: format!("difference estimator stabilized at {} with no torsion up to {k}", rep.ell_diff),
        },
        Ok(rep) => IsometryClass::Unknown {
            reason: format!("difference estimator not stabilized by K={k} (last diff {})", rep.ell_diff),
        },
        Err(e) => IsometryClass::Unknown { reason: e.to_string() },
    }
}

/// Does the model satisfy the floor theorem's hypotheses: hyperbolic,
/// torsion-free, not virtually cyclic?
pub fn floor_hypotheses(group: &MarkedGroup) -> Result<(), DisplacementError> {
    fn hyperbolic_torsion_free(g: &MarkedGroup) -> bool {
        match g.model() {
            Model::Free { .. } | Model::ZGens { .. } => true,
            Model::ZPow { rank } => *rank == 1,
            Model::FProd(l, r) => hyperbolic_torsion_free(l) && hyperbolic_torsion_free(r),
            Model::Cyclic { .. } | Model::Prod(..) => false,
        }
    }
    let ok = match group.model() {
        Model::Free { rank } => *rank >= 2,
        Model::FProd(l, r) => hyperbolic_torsion_free(l) && hyperbolic_torsion_free(r),
        _ => false,
    };
    if ok {
        Ok(())
    } else {
        Err(DisplacementError::WrongModel(format!(
            "{} is not a torsion-free, non-virtually-cyclic hyperbolic model",
            group.spec()
        )))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FloorConsistencyReport {
    pub passed: bool,
    pub floor: f64,
    /// Smallest `ℓ` estimate over the nontrivial sample.
    pub min_observed: f64,
    pub min_witness: Element,
    pub sampled: usize,
    /// Samples whose difference estimator did not stabilize; their ratio estimate is used.
    pub unstabilized: usize,
    pub input: ConstantsInput,
    pub nu: NuFunction,
    pub nu_provenance: &'static str,
    pub provenance: Provenance,
}

/// Compares the smallest observed `ℓ` estimate over `sample` against
/// [`displacement_floor`]. PASS iff `floor < min_observed`.
pub fn displacement_floor_consistency(
    group: &MarkedGroup,
    sample: &[Element],
    input: &ConstantsInput,
    nu: &NuFunction,
    k: u32,
    precision: usize,
) -> Result<FloorConsistencyReport, DisplacementError> {
    floor_hypotheses(group)?;
    let estimates: Vec<(f64, bool, &Element)> = sample
        .par_iter()
        .filter(|g| !group.is_identity(g))
        .map(|g| {
            asymptotic_displacement(group, g, k).map(|r| {
                let est = if r.stabilized { r.ell_diff as f64 } else { r.ell_ratio };
                (est, r.stabilized, g)
            })
        })
        .collect::<Result<_, _>>()?;
    let Some(&(min_observed, _, witness)) = estimates.iter().min_by(|a, b| a.0.total_cmp(&b.0)) else {
        return Err(DisplacementError::InvalidArgument("sample has no nontrivial element".into()));
    };
    let floor = displacement_floor(input, nu, precision);
    Ok(FloorConsistencyReport {
        passed: floor < min_observed,
        floor,
        min_observed,
        min_witness: witness.clone(),
        sampled: estimates.len(),
        unstabilized: estimates.iter().filter(|e| !e.1).count(),
        input: *input,
        nu: nu.clone(),
        nu_provenance: NU_PROVENANCE,
        provenance: Provenance::Consistency,
    })
}

/// The nontrivial elements of `B(e, R)` in ball order.
pub fn ball_sample(group: &MarkedGroup, radius: u32, mem_cap: usize) -> Result<Vec<Element>, DisplacementError> {
    let ball = enumerate_ball(group, radius, mem_cap)?;
    Ok(ball.elements().skip(1).cloned().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::DEFAULT_MEM_CAP;
    use crate::constants::DEFAULT_PRECISION;

    fn g(text: &str) -> MarkedGroup {
        MarkedGroup::from_text(text).unwrap()
    }

    fn w(letters: &[i32]) -> Element {
        Element::Word(letters.to_vec())
    }

    #[test]
    fn free_asymptotic_examples() {
        let f2 = g("free(2)");
        let ab = asymptotic_displacement(&f2, &w(&[1, 2]), 10).unwrap();
        assert_eq!(ab.powers, (1..=10).map(|k| 2 * k).collect::<Vec<u64>>());
        assert!(ab.stabilized && ab.ell_diff == 2 && ab.ell_ratio == 2.0);

        let conj = asymptotic_displacement(&f2, &w(&[1, 2, -1]), 10).unwrap();
        assert_eq!(conj.powers, (1..=10).map(|k| k + 2).collect::<Vec<u64>>());
        assert!(conj.stabilized && conj.ell_diff == 1);
        assert!((conj.ell_ratio - 1.2).abs() < 1e-15 && conj.ell_ratio_at == 10);
        assert!(conj.subadditive);
        assert!(asymptotic_displacement(&f2, &w(&[1]), 3).is_err());
    }

    #[test]
    fn torsion_powers() {
        let c5 = g("cyclic(5)");
        let rep = asymptotic_displacement(&c5, &Element::Residue(1), 10).unwrap();
        assert_eq!(rep.powers, [1, 1, 1, 1, 0, 1, 1, 1, 1, 0]);
        assert_eq!(rep.ell_ratio, 0.0);
        assert_eq!(classify_isometry(&c5, &Element::Residue(1), 10), IsometryClass::Elliptic { order: 5 });
    }

    #[test]
    fn minimal_examples() {
        let f2 = g("free(2)");
        let conj = minimal_displacement(&f2, &w(&[1, 2, -1]), 2, DEFAULT_MEM_CAP).unwrap();
        assert_eq!((conj.s_min, conj.witness), (1, w(&[1])));
        let ab = minimal_displacement(&f2, &w(&[1, 2]), 3, DEFAULT_MEM_CAP).unwrap();
        assert_eq!((ab.s_min, ab.witness), (2, w(&[])));
        for spec in ["zpow(2)", "cyclic(4)", "fprod(cyclic(2),cyclic(3))"] {
            let grp = g(spec);
            let e = grp.identity();
            assert_eq!(minimal_displacement(&grp, &e, 2, DEFAULT_MEM_CAP).unwrap().s_min, 0);
        }
    }

    #[test]
    fn cyclic_reduction_examples() {
        let f2 = g("free(2)");
        assert_eq!(cyclically_reduced_length(&f2, &w(&[1, 2, -1])).unwrap(), 1);
        assert_eq!(cyclically_reduced_length(&f2, &w(&[1, 2, 1, 2])).unwrap(), 4);
        assert_eq!(cyclically_reduced_length(&f2, &w(&[-1, 2, 1])).unwrap(), 1);
        assert_eq!(cyclically_reduced_length(&f2, &w(&[])).unwrap(), 0);
        assert!(matches!(
            cyclically_reduced_length(&g("zpow(2)"), &Element::Vector(vec![1, 0])),
            Err(DisplacementError::WrongModel(_))
        ));
        assert!(cyclically_reduced_length(&g("fprod(cyclic(2),cyclic(2))"), &g("fprod(cyclic(2),cyclic(2))").identity()).is_err());
    }

    /// On fprod(free(1),free(1)) ≅ free(2) both oracles agree.
    #[test]
    fn free_product_reduction_matches_free_group() {
        let fp = g("fprod(free(1),free(1))");
        let f2 = g("free(2)");
        let ball = enumerate_ball(&fp, 6, DEFAULT_MEM_CAP).unwrap();
        for x in ball.elements() {
            let letters: Vec<i32> = fp
                .geodesic_word(x)
                .iter()
                .map(|&i| match i {
                    0 => 1,
                    1 => -1,
                    2 => 2,
                    _ => -2,
                })
                .collect();
            // A geodesic word in the free product is already freely reduced.
            let as_f2 = w(&letters);
            assert_eq!(
                cyclically_reduced_length(&fp, x).unwrap(),
                cyclically_reduced_length(&f2, &as_f2).unwrap(),
                "{x}"
            );
        }
    }

    #[test]
    fn classification_examples() {
        assert_eq!(classify_isometry(&g("cyclic(6)"), &Element::Residue(2), 10), IsometryClass::Elliptic { order: 3 });
        assert_eq!(classify_isometry(&g("free(2)"), &w(&[1]), 10), IsometryClass::Hyperbolic { ell_diff: 1 });
        let d = g("fprod(cyclic(2),cyclic(2))");
        let st = d.parse_word("L:1 R:1").unwrap();
        let rep = asymptotic_displacement(&d, &st, 10).unwrap();
        assert_eq!(rep.powers, (1..=10).map(|k| 2 * k).collect::<Vec<u64>>());
        assert_eq!(classify_isometry(&d, &st, 10), IsometryClass::Hyperbolic { ell_diff: 2 });
        let f2 = g("free(2)");
        assert_eq!(classify_isometry(&f2, &f2.identity(), 10), IsometryClass::Elliptic { order: 1 });
    }

    #[test]
    fn floor_consistency_examples() {
        let f2 = g("free(2)");
        let sample = ball_sample(&f2, 3, DEFAULT_MEM_CAP).unwrap();
        let input = ConstantsInput::new(0.01, 3f64.ln(), 1.0).unwrap();
        let rep = displacement_floor_consistency(&f2, &sample, &input, &NuFunction::ceil(), 10, DEFAULT_PRECISION).unwrap();
        assert!(rep.passed);
        assert_eq!(rep.min_observed, 1.0);
        assert_eq!(rep.unstabilized, 0);
        assert_eq!(rep.provenance, Provenance::Consistency);

        let rep = displacement_floor_consistency(&f2, &sample, &input, &NuFunction::one(), 10, DEFAULT_PRECISION).unwrap();
        assert!(!rep.passed);
        assert!((rep.floor - 2.0 * 5.01 / 3.0).abs() < 1e-12);

        let z2 = g("zpow(2)");
        let r = displacement_floor_consistency(&z2, &[Element::Vector(vec![1, 0])], &input, &NuFunction::ceil(), 10, DEFAULT_PRECISION);
        assert!(matches!(r, Err(DisplacementError::WrongModel(_))));
        for spec in ["free(1)", "z(1,2)", "prod(free(2),cyclic(2))", "fprod(cyclic(2),cyclic(2))"] {
            assert!(floor_hypotheses(&g(spec)).is_err(), "{spec}");
        }
        assert!(floor_hypotheses(&g("fprod(z(1,2),free(1))")).is_ok());
    }
}
