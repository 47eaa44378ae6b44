//! Closed-form constants and inequalities, evaluated exactly or at a
//! configurable binary precision.
//!
//! ν has no formula; it is always supplied as a [`NuFunction`] and every
//! output depending on it is labelled [`Provenance::Consistency`].

mod bigvalue;
mod checks;
mod counting;
mod formulas;
mod nu;

use serde::Serialize;
use thiserror::Error;

pub use bigvalue::{exp2, float, float_int, render_float, BigValue, Float, DEFAULT_PRECISION, EXACT_BIT_CAP};
pub use checks::{bg_check, sandwich_check, tree_sigma_prime_length, BgReport, SandwichReport};
pub use counting::{
    n0, n0_n1_n2, n1, n2, n2_arguments, n2_via, n_generators_bound, nu_inputs, presentation_count_bound,
    sum_of_powers, NuInputs,
};
pub use formulas::{
    absorption_constant, bg_bound, bg_log_bound, decrire_bound, displacement_floor, matching_radius,
    numerator_identity, qi_c1_c2, qi_c_coefficient, qi_chain, qi_delta, qi_delta_from_c1_c2, qi_delta_loose,
    qi_space_constants, relator_length_bound, stability_bound,
};
pub use nu::{NuFunction, NuKind, NU_PROVENANCE};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ConstantsError {
    #[error("domain error: {0}")]
    DomainError(String),
    #[error("insufficient range: {0}")]
    InsufficientRange(String),
    #[error("precision cap: {0}")]
    PrecisionCap(String),
    #[error("bad nu spec: {0}")]
    NuSpec(String),
}

/// Whether a value is fixed by the paper's formulas alone or depends on ν.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    PaperExact,
    Consistency,
}

impl Provenance {
    pub fn label(self) -> &'static str {
        match self {
            Provenance::PaperExact => "PAPER-EXACT",
            Provenance::Consistency => "CONSISTENCY",
        }
    }
}

/// `(δ, H, D)` with `δ ≥ 0`, `H > 0`, `D > 0`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ConstantsInput {
    pub delta: f64,
    pub entropy: f64,
    pub diam: f64,
}

impl ConstantsInput {
    pub fn new(delta: f64, entropy: f64, diam: f64) -> Result<Self, ConstantsError> {
        let finite = delta.is_finite() && entropy.is_finite() && diam.is_finite();
        if !(finite && delta >= 0.0 && entropy > 0.0 && diam > 0.0) {
            return Err(ConstantsError::DomainError(format!(
                "need finite δ >= 0, H > 0, D > 0; got δ={delta}, H={entropy}, D={diam}"
            )));
        }
        Ok(ConstantsInput { delta, entropy, diam })
    }
}

/// A named output with its provenance.
#[derive(Clone, Debug, Serialize)]
pub struct Labelled<T> {
    pub value: T,
    pub provenance: Provenance,
}

impl<T> Labelled<T> {
    pub fn paper(value: T) -> Self {
        Labelled { value, provenance: Provenance::PaperExact }
    }

    pub fn consistency(value: T) -> Self {
        Labelled { value, provenance: Provenance::Consistency }
    }
}

/// Every constant at one input, for reporting.
#[derive(Clone, Debug, Serialize)]
pub struct ConstantsReport {
    pub input: ConstantsInput,
    pub nu: NuFunction,
    pub nu_provenance: &'static str,
    pub precision: usize,
    pub nu_values: Labelled<NuInputs>,
    pub n: Labelled<BigValue>,
    pub n0: Labelled<BigValue>,
    pub n1: Labelled<BigValue>,
    pub n2: Labelled<BigValue>,
    pub n2_arguments: Labelled<(f64, f64)>,
    pub displacement_floor: Labelled<f64>,
    pub matching_radius: Labelled<f64>,
    pub decrire_bound_at_matching_radius: Labelled<f64>,
    pub numerator_identity: Labelled<bool>,
    pub absorption_constant: Labelled<f64>,
    pub relator_length_bound: Labelled<f64>,
    pub qi_delta: Labelled<f64>,
    pub qi_delta_target: Labelled<f64>,
    pub qi_space_constants: Labelled<(f64, f64, f64)>,
}

pub fn constants_report(
    input: &ConstantsInput,
    nu: &NuFunction,
    precision: usize,
) -> Result<ConstantsReport, ConstantsError> {
    let (n0v, n1v, n2v) = n0_n1_n2(input, nu, precision)?;
    let radius = matching_radius(input);
    let (qi, target) = qi_chain(input.delta, input.diam)?;
    Ok(ConstantsReport {
        input: *input,
        nu: nu.clone(),
        nu_provenance: NU_PROVENANCE,
        precision,
        nu_values: Labelled::consistency(nu_inputs(input, nu, precision)),
        n: Labelled::consistency(n_generators_bound(input, nu, precision)?),
        n0: Labelled::consistency(n0v),
        n1: Labelled::consistency(n1v),
        n2: Labelled::consistency(n2v),
        n2_arguments: Labelled::paper(n2_arguments(input)),
        displacement_floor: Labelled::consistency(displacement_floor(input, nu, precision)),
        matching_radius: Labelled::paper(radius),
        decrire_bound_at_matching_radius: Labelled::consistency(decrire_bound(
            radius,
            input.delta,
            input.entropy,
            nu,
            precision,
        )?),
        numerator_identity: Labelled::paper(numerator_identity(input)),
        absorption_constant: Labelled::paper(absorption_constant()),
        relator_length_bound: Labelled::paper(relator_length_bound(input.delta)?),
        qi_delta: Labelled::paper(qi),
        qi_delta_target: Labelled::paper(target),
        qi_space_constants: Labelled::paper(qi_space_constants(input.diam)?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn input_validation() {
        assert!(ConstantsInput::new(0.0, 1.0, 1.0).is_ok());
        assert!(ConstantsInput::new(-0.1, 1.0, 1.0).is_err());
        assert!(ConstantsInput::new(0.0, 0.0, 1.0).is_err());
        assert!(ConstantsInput::new(0.0, 1.0, f64::NAN).is_err());
    }

    #[test]
    fn report_labels_nu_dependence() {
        let input = ConstantsInput::new(0.0, 1e-300, 1.0).unwrap();
        let rep = constants_report(&input, &NuFunction::one(), DEFAULT_PRECISION).unwrap();
        assert_eq!(rep.n.value, BigValue::from_u64(13));
        for p in [rep.n.provenance, rep.n0.provenance, rep.n1.provenance, rep.n2.provenance, rep.displacement_floor.provenance] {
            assert_eq!(p, Provenance::Consistency);
        }
        assert!(rep.numerator_identity.value);
        let json = serde_json::to_value(&rep).unwrap();
        assert_eq!(json["nu_provenance"], "non-paper placeholder");
        assert_eq!(json["n"]["provenance"], "consistency");
        assert_eq!(json["n"]["value"], "13");
    }
}
