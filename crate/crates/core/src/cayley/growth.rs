use std::io::{self, Write};

use dashu::integer::UBig;

use super::{enumerate_ball, CayleyError};
use crate::group::{MarkedGroup, Model};

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GrowthSource {
    Enumerated,
    ClosedForm,
}

/// Exact ball counts `counts[r] = |B(e, r)|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthSequence {
    pub counts: Vec<UBig>,
    pub source: GrowthSource,
}

impl GrowthSequence {
    pub fn from_counts(counts: Vec<UBig>, source: GrowthSource) -> Self {
        GrowthSequence { counts, source }
    }

    pub fn radius(&self) -> usize {
        self.counts.len().saturating_sub(1)
    }

    /// Sphere sizes `|S(r)| = counts[r] - counts[r-1]`.
    pub fn spheres(&self) -> Vec<UBig> {
        let mut out = Vec::with_capacity(self.counts.len());
        for (r, c) in self.counts.iter().enumerate() {
            if r == 0 {
                out.push(c.clone());
            } else {
                out.push(c - &self.counts[r - 1]);
            }
        }
        out
    }

    /// CSV export `radius,count` with exact decimal counts.
    pub fn write_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "radius,count")?;
        for (r, c) in self.counts.iter().enumerate() {
            writeln!(out, "{r},{c}")?;
        }
        Ok(())
    }
}

fn binomial(n: u64, k: u64) -> UBig {
    if k > n {
        return UBig::ZERO;
    }
    let k = k.min(n - k);
    let mut acc = UBig::ONE;
    for i in 0..k {
        acc = acc * UBig::from(n - i) / UBig::from(i + 1);
    }
    acc
}

fn spheres_to_balls(spheres: &[UBig]) -> Vec<UBig> {
    let mut acc = UBig::ZERO;
    spheres
        .iter()
        .map(|s| {
            acc += s;
            acc.clone()
        })
        .collect()
}

/// Closed-form sphere sizes for `r = 0..=radius`, when the model has one.
fn closed_form_spheres(group: &MarkedGroup, radius: u32) -> Result<Vec<UBig>, CayleyError> {
    let n = radius as usize + 1;
    match group.model() {
        Model::Free { rank } => {
            let two_k = UBig::from(2 * u64::from(*rank));
            let ratio = &two_k - UBig::ONE;
            let mut out = Vec::with_capacity(n);
            out.push(UBig::ONE);
            let mut s = two_k;
            for _ in 1..n {
                out.push(s.clone());
                s *= &ratio;
            }
            Ok(out)
        }
        Model::ZPow { rank } => {
            let d = u64::from(*rank);
            let ball = |r: u64| -> UBig {
                (0..=d.min(r))
                    .map(|i| (UBig::ONE << i as usize) * binomial(d, i) * binomial(r, i))
                    .sum()
            };
            let mut out = Vec::with_capacity(n);
            let mut prev = UBig::ZERO;
            for r in 0..n as u64 {
                let b = ball(r);
                out.push(&b - &prev);
                prev = b;
            }
            Ok(out)
        }
        Model::Cyclic { modulus } => Ok((0..n)
            .map(|r| match r {
                0 => UBig::ONE,
                1 => UBig::from(modulus - 1),
                _ => UBig::ZERO,
            })
            .collect()),
        Model::Prod(l, r) => {
            let a = closed_form_spheres(l, radius)?;
            let b = closed_form_spheres(r, radius)?;
            Ok((0..n).map(|t| (0..=t).map(|j| &a[j] * &b[t - j]).sum()).collect())
        }
        Model::ZGens { .. } | Model::FProd(..) => Err(CayleyError::Unsupported(format!(
            "no closed-form growth for {}",
            group.spec()
        ))),
    }
}

/// Ball counts from closed forms: free groups use the reduced-word count,
/// `Z^n` the lattice-ball formula, full cyclic groups are diameter one, and
/// direct products convolve factor spheres.
pub fn closed_form_growth(group: &MarkedGroup, radius: u32) -> Result<GrowthSequence, CayleyError> {
    let spheres = closed_form_spheres(group, radius)?;
    Ok(GrowthSequence::from_counts(spheres_to_balls(&spheres), GrowthSource::ClosedForm))
}

pub fn has_closed_form(group: &MarkedGroup) -> bool {
    match group.model() {
        Model::Free { .. } | Model::ZPow { .. } | Model::Cyclic { .. } => true,
        Model::Prod(l, r) => has_closed_form(l) && has_closed_form(r),
        Model::ZGens { .. } | Model::FProd(..) => false,
    }
}

/// Growth counts, preferring the closed form and enumerating otherwise.
pub fn growth_sequence(group: &MarkedGroup, radius: u32, mem_cap: usize) -> Result<GrowthSequence, CayleyError> {
    if has_closed_form(group) {
        return closed_form_growth(group, radius);
    }
    let ball = enumerate_ball(group, radius, mem_cap)?;
    Ok(GrowthSequence::from_counts(
        ball.ball_sizes().into_iter().map(UBig::from).collect(),
        GrowthSource::Enumerated,
    ))
}
