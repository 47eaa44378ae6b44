use std::fmt;

use dashu::base::BitTest;
use dashu::float::round::mode::HalfEven;
use dashu::float::FBig;
use dashu::integer::UBig;
use serde::{Serialize, Serializer};

use super::ConstantsError;

/// Binary arbitrary-precision float used throughout the constants module.
pub type Float = FBig<HalfEven, 2>;

pub const DEFAULT_PRECISION: usize = 256;
/// Largest exact integer (in bits) the module will materialize.
pub const EXACT_BIT_CAP: u64 = 1 << 29;
/// Exact values above this many bits render through their log2.
pub const DECIMAL_BIT_LIMIT: usize = 1 << 16;
/// Largest log2 that is still converted back into a plain float value.
const FLOAT_LOG2_LIMIT: f64 = 1e15;

pub fn float(x: f64, precision: usize) -> Float {
    Float::try_from(x).expect("finite input").with_precision(precision).value()
}

pub fn float_int(n: &UBig, precision: usize) -> Float {
    Float::from(n.clone()).with_precision(precision).value()
}

/// `2^x` at the given precision.
pub fn exp2(x: &Float, precision: usize) -> Result<Float, ConstantsError> {
    if x.to_f64().value().abs() > FLOAT_LOG2_LIMIT {
        return Err(ConstantsError::PrecisionCap(format!("2^{} is outside the float range", render_float(x, 12))));
    }
    Ok((x * float(2.0, precision).ln()).exp())
}

/// Decimal rendering with `digits` significant digits, switching to
/// scientific notation outside `1e-6 ..= 1e40`.
pub fn render_float(x: &Float, digits: usize) -> String {
    let d = x.to_decimal().value().with_precision(digits).value();
    let repr = d.repr();
    let sig = repr.significand().to_string();
    let (sign, sig) = match sig.strip_prefix('-') {
        Some(rest) => ("-", rest.to_string()),
        None => ("", sig),
    };
    let lead = repr.exponent() + sig.len() as isize - 1;
    if sig == "0" || (-6..=40).contains(&lead) {
        return d.to_string();
    }
    let rest = sig[1..].trim_end_matches('0');
    if rest.is_empty() {
        format!("{sign}{}e{lead}", &sig[..1])
    } else {
        format!("{sign}{}.{rest}e{lead}", &sig[..1])
    }
}

/// An exact big integer, or a value known only through a high-precision log2.
#[derive(Clone, Debug, PartialEq)]
pub enum BigValue {
    Exact(UBig),
    Log2(Float),
}

impl BigValue {
    pub fn from_u64(n: u64) -> Self {
        BigValue::Exact(UBig::from(n))
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, BigValue::Exact(_))
    }

    pub fn as_exact(&self) -> Option<&UBig> {
        match self {
            BigValue::Exact(n) => Some(n),
            BigValue::Log2(_) => None,
        }
    }

    pub fn as_u64(&self) -> Option<u64> {
        self.as_exact().and_then(|n| u64::try_from(n.clone()).ok())
    }

    /// log2 of the value; zero maps to an error.
    pub fn log2(&self, precision: usize) -> Result<Float, ConstantsError> {
        match self {
            BigValue::Exact(n) if *n == UBig::ZERO => Err(ConstantsError::DomainError("log2 of zero".into())),
            BigValue::Exact(n) => Ok(float_int(n, precision).log2()),
            BigValue::Log2(l) => Ok(l.clone()),
        }
    }

    pub fn log2_f64(&self) -> f64 {
        self.log2(DEFAULT_PRECISION).map_or(f64::NEG_INFINITY, |l| l.to_f64().value())
    }

    /// The value as a float, when it fits the float exponent range.
    pub fn to_float(&self, precision: usize) -> Result<Float, ConstantsError> {
        match self {
            BigValue::Exact(n) => Ok(float_int(n, precision)),
            BigValue::Log2(l) => exp2(l, precision),
        }
    }

    /// Nearest `f64`, saturating to infinity.
    pub fn to_f64(&self) -> f64 {
        match self {
            BigValue::Exact(n) => n.to_f64().value(),
            BigValue::Log2(l) => {
                let l = l.to_f64().value();
                if l > 1024.0 {
                    f64::INFINITY
                } else {
                    l.exp2()
                }
            }
        }
    }

    /// `⌈x⌉` for a positive float: exact while the float still resolves units.
    pub fn ceil_of(x: &Float, precision: usize) -> BigValue {
        let l = x.log2();
        if l.to_f64().value() < (precision - 8) as f64 {
            let n = x.ceil().to_int().value();
            BigValue::Exact(UBig::try_from(n).unwrap_or(UBig::ZERO))
        } else {
            BigValue::Log2(l)
        }
    }

    /// `log2:` rendering with 40 significant digits.
    pub fn log2_string(&self) -> String {
        match self.log2(DEFAULT_PRECISION) {
            Ok(l) => format!("log2:{}", render_float(&l, 40)),
            Err(_) => "0".into(),
        }
    }
}

impl fmt::Display for BigValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BigValue::Exact(n) if n.bit_len() <= DECIMAL_BIT_LIMIT => write!(f, "{n}"),
            _ => f.write_str(&self.log2_string()),
        }
    }
}

impl Serialize for BigValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
