use dashu::integer::UBig;
use serde::Serialize;

use super::bigvalue::{exp2, float, float_int, BigValue, Float, EXACT_BIT_CAP};
use super::nu::NuFunction;
use super::{ConstantsError, ConstantsInput};

/// `3⁵ e^{coef · H · x}`.
pub(crate) fn bgt_argument(coef: f64, h: f64, x: f64, precision: usize) -> Float {
    let exponent = float(coef, precision) * float(h, precision) * float(x, precision);
    exponent.exp() * float(243.0, precision)
}

/// The two ν evaluations feeding `N`.
#[derive(Clone, Debug, Serialize)]
pub struct NuInputs {
    /// `ν(3⁵ e^{72H(D+δ)})`.
    pub nu_coset: BigValue,
    /// `ν(3⁵ e^{73H(D+4δ)})`.
    pub nu_displacement: BigValue,
}

pub fn nu_inputs(input: &ConstantsInput, nu: &NuFunction, precision: usize) -> NuInputs {
    let ConstantsInput { delta, entropy, diam } = *input;
    NuInputs {
        nu_coset: nu.eval(&bgt_argument(72.0, entropy, diam + delta, precision), precision),
        nu_displacement: nu.eval(&bgt_argument(73.0, entropy, diam + 4.0 * delta, precision), precision),
    }
}

/// `N(δ,H,D) = ν(3⁵e^{72H(D+δ)}) · (1 + 20(D+δ)/(5D+δ) · (ν(3⁵e^{73H(D+4δ)}) + 2))`,
/// rounded up to an integer.
pub fn n_generators_bound(input: &ConstantsInput, nu: &NuFunction, precision: usize) -> Result<BigValue, ConstantsError> {
    let ConstantsInput { delta, diam, .. } = *input;
    let nus = nu_inputs(input, nu, precision);
    let p = |x: f64| float(x, precision);
    let ratio = p(20.0) * (p(diam) + p(delta)) / (p(5.0) * p(diam) + p(delta));
    let n1 = nus.nu_coset.to_float(precision)?;
    let n2 = nus.nu_displacement.to_float(precision)?;
    let value = n1 * (p(1.0) + ratio * (n2 + p(2.0)));
    Ok(BigValue::ceil_of(&value, precision))
}

/// `Σ_{i=0}^{n} 2^{(2i)^e}`.
///
/// Exact when `e` is integral and the top term fits [`EXACT_BIT_CAP`];
/// otherwise the log2 is the top exponent plus `log2(1 + Σ 2^{t_i - t_n})`,
/// summed downward until the terms drop below the working precision.
pub fn sum_of_powers(n: &BigValue, e: f64, precision: usize) -> Result<BigValue, ConstantsError> {
    sum_of_powers_mode(n, e, precision, false)
}

pub(crate) fn sum_of_powers_mode(
    n: &BigValue,
    e: f64,
    precision: usize,
    force_log2: bool,
) -> Result<BigValue, ConstantsError> {
    if !(e.is_finite() && e > 0.0) {
        return Err(ConstantsError::DomainError(format!("exponent {e} must be positive")));
    }
    if let (Some(count), false) = (n.as_u64(), force_log2) {
        if e.fract() == 0.0 && e <= 64.0 {
            let top = (2 * u128::from(count)).checked_pow(e as u32);
            if top.is_some_and(|t| t <= u128::from(EXACT_BIT_CAP)) {
                let mut acc = UBig::ZERO;
                for i in 0..=count {
                    acc.set_bit((2 * i).pow(e as u32) as usize);
                }
                return Ok(BigValue::Exact(acc));
            }
        }
    }

    let p = |x: f64| float(x, precision);
    let ef = p(e);
    let exponent_of = |i: &Float| -> Result<Float, ConstantsError> {
        if *i == p(0.0) {
            return Ok(p(0.0));
        }
        let l = (p(2.0) * i).log2() * &ef;
        exp2(&l, precision)
    };
    let top = match n {
        BigValue::Exact(count) => exponent_of(&float_int(count, precision))?,
        BigValue::Log2(l) => exp2(&((p(1.0) + l) * &ef), precision)?,
    };
    let mut tail = p(0.0);
    if let Some(count) = n.as_u64() {
        let cutoff = -((precision + 64) as f64 + top.log2().to_f64().value().max(0.0));
        let mut i = count;
        while i > 0 {
            i -= 1;
            let d = exponent_of(&p(i as f64))? - &top;
            if d.to_f64().value() < cutoff {
                break;
            }
            tail += exp2(&d, precision)?;
        }
    }
    let log2 = top + tail.ln_1p() / p(2.0).ln();
    Ok(BigValue::Log2(log2))
}

/// The argument pair `(δ', H')` at which `N₂(δ,H,D)` evaluates `N₁`.
pub fn n2_arguments(input: &ConstantsInput) -> (f64, f64) {
    let ConstantsInput { delta, entropy, diam } = *input;
    (16.0 * (delta / diam + 2.0), 10.0 * entropy * diam)
}

/// `N₀(δ,H,D) = Σ_{i=0}^{N(δ,H,D)} 2^{(2i)^{4δ+6}}`.
pub fn n0(input: &ConstantsInput, nu: &NuFunction, precision: usize) -> Result<BigValue, ConstantsError> {
    let n = n_generators_bound(input, nu, precision)?;
    sum_of_powers(&n, 4.0 * input.delta + 6.0, precision)
}

/// `N₁(δ,H) = N₀(δ,H,1)`.
pub fn n1(delta: f64, entropy: f64, nu: &NuFunction, precision: usize) -> Result<BigValue, ConstantsError> {
    n0(&ConstantsInput::new(delta, entropy, 1.0)?, nu, precision)
}

/// `N₂(δ,H,D) = N₁(16(δ/D + 2), 10HD)` with `N₁` injected, so the
/// substitution can be observed.
pub fn n2_via<F>(input: &ConstantsInput, mut n1_impl: F) -> Result<BigValue, ConstantsError>
where
    F: FnMut(f64, f64) -> Result<BigValue, ConstantsError>,
{
    let (d, h) = n2_arguments(input);
    n1_impl(d, h)
}

pub fn n2(input: &ConstantsInput, nu: &NuFunction, precision: usize) -> Result<BigValue, ConstantsError> {
    n2_via(input, |d, h| n1(d, h, nu, precision))
}

/// `(N₀, N₁, N₂)` at one input.
pub fn n0_n1_n2(
    input: &ConstantsInput,
    nu: &NuFunction,
    precision: usize,
) -> Result<(BigValue, BigValue, BigValue), ConstantsError> {
    Ok((n0(input, nu, precision)?, n1(input.delta, input.entropy, nu, precision)?, n2(input, nu, precision)?))
}

/// `q = Σ_{k=0}^{N} 2^{(2k)^p}`, the presentation census bound.
pub fn presentation_count_bound(n: u64, p: u32, precision: usize) -> Result<BigValue, ConstantsError> {
    if n < 1 || p < 3 {
        return Err(ConstantsError::DomainError(format!("need N >= 1 and p >= 3, got N={n}, p={p}")));
    }
    sum_of_powers(&BigValue::from_u64(n), f64::from(p), precision)
}
