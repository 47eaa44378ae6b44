//! Reduced words in a free group and the census of finite presentations
//! with relators in a ball.

use std::fmt;

use dashu::integer::UBig;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::constants::{float_int, BigValue, EXACT_BIT_CAP};
use crate::group::render_word;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PresentationsError {
    #[error("{count} words exceed the cap of {cap}")]
    CapExceeded { count: String, cap: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

/// A freely reduced word; letter `i > 0` is generator `i`, `-i` its inverse.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ReducedWord(pub Vec<i32>);

impl ReducedWord {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_reduced(&self) -> bool {
        self.0.windows(2).all(|w| w[0] != -w[1])
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_word(&self.0))
    }
}

impl Serialize for ReducedWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Position of a letter in the alphabet `a1, …, ak, a1⁻¹, …, ak⁻¹`.
fn letter_rank(letter: i32, k: u32) -> u32 {
    if letter > 0 {
        letter as u32 - 1
    } else {
        k + letter.unsigned_abs() - 1
    }
}

/// Shortlex order over the generator alphabet `a1 < … < ak < a1⁻¹ < … < ak⁻¹`.
pub fn shortlex_cmp(a: &ReducedWord, b: &ReducedWord, k: u32) -> std::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| {
        let ra = a.0.iter().map(|&l| letter_rank(l, k));
        ra.cmp(b.0.iter().map(|&l| letter_rank(l, k)))
    })
}

fn check_rank(k: u32) -> Result<(), PresentationsError> {
    if k == 0 {
        return Err(PresentationsError::InvalidArgument("k must be at least 1".into()));
    }
    Ok(())
}

/// `1 + Σ_{j=1}^{p} 2k(2k-1)^{j-1}`, the number of reduced words of length at most `p`.
pub fn free_ball_count(k: u32, p: u32) -> Result<UBig, PresentationsError> {
    check_rank(k)?;
    let (two_k, ratio) = (UBig::from(2 * k), UBig::from(2 * k - 1));
    let mut total = UBig::ONE;
    let mut sphere = two_k;
    for _ in 0..p {
        total += &sphere;
        sphere *= &ratio;
    }
    Ok(total)
}

/// All reduced words of length at most `p` over `k` generators, in shortlex order.
pub fn free_ball_enumerate(k: u32, p: u32, cap: usize) -> Result<Vec<ReducedWord>, PresentationsError> {
    let count = free_ball_count(k, p)?;
    if count > UBig::from(cap) {
        return Err(PresentationsError::CapExceeded { count: count.to_string(), cap });
    }
    let k = k as i32;
    let alphabet: Vec<i32> = (1..=k).chain((1..=k).map(|i| -i)).collect();
    let mut words = vec![ReducedWord(Vec::new())];
    let mut level_start = 0;
    for _ in 0..p {
        let level_end = words.len();
        for i in level_start..level_end {
            for &letter in &alphabet {
                if words[i].0.last() == Some(&-letter) {
                    continue;
                }
                let mut next = words[i].0.clone();
                next.push(letter);
                words.push(ReducedWord(next));
            }
        }
        level_start = level_end;
    }
    Ok(words)
}

/// Checks `1 + Σ_{j=1}^{p} 2k(2k-1)^{j-1} ≤ (2k)^p` exactly.
pub fn verify_ball_bound(k: u32, p: u32) -> Result<bool, PresentationsError> {
    if p < 3 {
        return Err(PresentationsError::InvalidArgument(format!("p must be at least 3, got {p}")));
    }
    Ok(free_ball_count(k, p)? <= UBig::from(2 * k).pow(p as usize))
}

/// Number of relator sets drawn from the ball, against the cap `2^{(2k)^p}`.
#[derive(Clone, Debug, Serialize)]
pub struct PresentationCount {
    pub k: u32,
    pub p: u32,
    /// `|B(p)|`.
    pub ball: BigValue,
    /// `2^{|B(p)|}`.
    pub count: BigValue,
    /// `2^{(2k)^p}`.
    pub cap: BigValue,
    pub within_cap: bool,
}

fn power_of_two(exponent: &UBig, precision: usize) -> BigValue {
    if *exponent <= UBig::from(EXACT_BIT_CAP) {
        let mut v = UBig::ZERO;
        v.set_bit(usize::try_from(exponent).expect("below the exact cap"));
        BigValue::Exact(v)
    } else {
        BigValue::Log2(float_int(exponent, precision))
    }
}

pub fn count_presentations(k: u32, p: u32, precision: usize) -> Result<PresentationCount, PresentationsError> {
    let ball = free_ball_count(k, p)?;
    let cap_exponent = UBig::from(2 * k).pow(p as usize);
    Ok(PresentationCount {
        k,
        p,
        count: power_of_two(&ball, precision),
        cap: power_of_two(&cap_exponent, precision),
        within_cap: ball <= cap_exponent,
        ball: BigValue::Exact(ball),
    })
}
