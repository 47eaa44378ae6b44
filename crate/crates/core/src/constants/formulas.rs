use dashu::rational::RBig;

use super::bigvalue::BigValue;
use super::counting::bgt_argument;
use super::nu::NuFunction;
use super::{ConstantsError, ConstantsInput};

fn domain(msg: String) -> ConstantsError {
    ConstantsError::DomainError(msg)
}

/// Bishop–Gromov bound `3 (R/r)^{25/4} e^{6H(R - 4r/5)}`.
pub fn bg_bound(big_r: f64, r: f64, h: f64) -> Result<f64, ConstantsError> {
    Ok(bg_log_bound(big_r, r, h)?.exp())
}

/// Natural log of [`bg_bound`], usable where the bound itself overflows.
pub fn bg_log_bound(big_r: f64, r: f64, h: f64) -> Result<f64, ConstantsError> {
    if !(big_r > r && r > 0.0) {
        return Err(domain(format!("need R > r > 0, got R={big_r}, r={r}")));
    }
    Ok(3f64.ln() + 6.25 * (big_r / r).ln() + 6.0 * h * (big_r - 0.8 * r))
}

/// The absorbed constant `3 · 2^{25/4}`, bounded by `3⁵`.
pub fn absorption_constant() -> f64 {
    3.0 * 2f64.powf(6.25)
}

fn nu_plus_two(nu_value: &BigValue) -> f64 {
    nu_value.to_f64() + 2.0
}

/// Displacement floor `2(5D + δ) / (ν(3⁵ e^{73H(D+4δ)}) + 2)`.
pub fn displacement_floor(input: &ConstantsInput, nu: &NuFunction, precision: usize) -> f64 {
    let ConstantsInput { delta, entropy, diam } = *input;
    let v = nu.eval(&bgt_argument(73.0, entropy, diam + 4.0 * delta, precision), precision);
    2.0 * (5.0 * diam + delta) / nu_plus_two(&v)
}

/// `2(2R - 19δ) / (ν(3⁵ e^{29HR}) + 2)`.
pub fn decrire_bound(
    big_r: f64,
    delta: f64,
    h: f64,
    nu: &NuFunction,
    precision: usize,
) -> Result<f64, ConstantsError> {
    if 2.0 * big_r <= 19.0 * delta {
        return Err(domain(format!("need 2R > 19δ, got R={big_r}, δ={delta}")));
    }
    let v = nu.eval(&bgt_argument(29.0, h, big_r, precision), precision);
    Ok(2.0 * (2.0 * big_r - 19.0 * delta) / nu_plus_two(&v))
}

/// The radius `(5/2)(D + 4δ)` at which the two displacement formulas meet.
pub fn matching_radius(input: &ConstantsInput) -> f64 {
    2.5 * (input.diam + 4.0 * input.delta)
}

/// `2(2R - 19δ) = 2(5D + δ)` at `R = (5/2)(D + 4δ)`, in exact rationals
/// built from the binary values of the inputs.
pub fn numerator_identity(input: &ConstantsInput) -> bool {
    let q = |x: f64| RBig::try_from(x).expect("finite input");
    let (d, delta) = (q(input.diam), q(input.delta));
    let big_r = RBig::from(5) / RBig::from(2) * (d.clone() + RBig::from(4) * delta.clone());
    let lhs = RBig::from(2) * (RBig::from(2) * big_r - RBig::from(19) * delta.clone());
    let rhs = RBig::from(2) * (RBig::from(5) * d + delta);
    lhs == rhs
}

/// Hyperbolicity transfer `δ'' = (4/a)((6λ² + 14λ + 5)δ + ((4λ+3)/(6λ+2))C + b)`.
pub fn qi_delta(a: f64, b: f64, lambda: f64, c: f64, delta: f64) -> Result<f64, ConstantsError> {
    check_qi(a, b, lambda, c, delta)?;
    let poly = 6.0 * lambda * lambda + 14.0 * lambda + 5.0;
    Ok(4.0 / a * (poly * delta + (4.0 * lambda + 3.0) / (6.0 * lambda + 2.0) * c + b))
}

/// The same constant in its unsimplified form `(4/a)(C₁ + C₂ + b + δ)`.
pub fn qi_delta_from_c1_c2(a: f64, b: f64, lambda: f64, c: f64, delta: f64) -> Result<f64, ConstantsError> {
    check_qi(a, b, lambda, c, delta)?;
    let (c1, c2) = qi_c1_c2(lambda, c, delta)?;
    Ok(4.0 / a * (c1 + c2 + b + delta))
}

/// The looser form `(4/a)((6λ² + 14λ + 5)δ + C + b)`.
pub fn qi_delta_loose(a: f64, b: f64, lambda: f64, c: f64, delta: f64) -> Result<f64, ConstantsError> {
    check_qi(a, b, lambda, c, delta)?;
    Ok(4.0 / a * ((6.0 * lambda * lambda + 14.0 * lambda + 5.0) * delta + c + b))
}

fn check_qi(a: f64, b: f64, lambda: f64, c: f64, delta: f64) -> Result<(), ConstantsError> {
    if !(a > 0.0 && lambda >= 1.0 && b >= 0.0 && c >= 0.0 && delta >= 0.0) {
        return Err(domain(format!(
            "need a > 0, λ >= 1, b, C, δ >= 0; got a={a}, b={b}, λ={lambda}, C={c}, δ={delta}"
        )));
    }
    Ok(())
}

/// `(4λ+3)/(6λ+2)`, below 1 for `λ ≥ 1`.
pub fn qi_c_coefficient(lambda: f64) -> f64 {
    (4.0 * lambda + 3.0) / (6.0 * lambda + 2.0)
}

/// Quasi-geodesic constants `C₁ = (6λ+2)δ + C/(6λ+2)` and `C₂ = (1+λ)C₁ + C/2`.
pub fn qi_c1_c2(lambda: f64, c: f64, delta: f64) -> Result<(f64, f64), ConstantsError> {
    if !(lambda >= 1.0 && c >= 0.0 && delta >= 0.0) {
        return Err(domain(format!("need λ >= 1, C, δ >= 0; got λ={lambda}, C={c}, δ={delta}")));
    }
    let c1 = (6.0 * lambda + 2.0) * delta + c / (6.0 * lambda + 2.0);
    Ok((c1, (1.0 + lambda) * c1 + c / 2.0))
}

/// `δ(1 + log₂⁺(L/δ))`.
pub fn stability_bound(length: f64, delta: f64) -> Result<f64, ConstantsError> {
    if !(length >= 0.0 && delta > 0.0) {
        return Err(domain(format!("need L >= 0, δ > 0; got L={length}, δ={delta}")));
    }
    Ok(delta * (1.0 + (length / delta).log2().max(0.0)))
}

/// Relator length bound `4δ + 6`.
pub fn relator_length_bound(delta: f64) -> Result<f64, ConstantsError> {
    if !(delta >= 0.0) {
        return Err(domain(format!("need δ >= 0, got {delta}")));
    }
    Ok(4.0 * delta + 6.0)
}

/// Quasi-isometry constants `(5/4, (25/2)D, D)`.
pub fn qi_space_constants(diam: f64) -> Result<(f64, f64, f64), ConstantsError> {
    if !(diam > 0.0) {
        return Err(domain(format!("need D > 0, got {diam}")));
    }
    Ok((1.25, 12.5 * diam, diam))
}

/// The chain instance `qi_delta(8D, 26D, 5/4, 65D/2, δ)` and its target `16(δ/D + 2)`.
pub fn qi_chain(delta: f64, diam: f64) -> Result<(f64, f64), ConstantsError> {
    let v = qi_delta(8.0 * diam, 26.0 * diam, 1.25, 32.5 * diam, delta)?;
    Ok((v, 16.0 * (delta / diam + 2.0)))
}
