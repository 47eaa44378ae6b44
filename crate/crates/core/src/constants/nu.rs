use std::fmt;
use std::io::Read;
use std::path::Path;

use serde::{Serialize, Serializer};

use super::bigvalue::{float, BigValue, Float};
use super::ConstantsError;

/// Every ν is configuration; none comes from the paper.
pub const NU_PROVENANCE: &str = "non-paper placeholder";

#[derive(Clone, Debug, PartialEq)]
pub enum NuKind {
    /// `ν(K) = ⌈K⌉`.
    Ceil,
    /// `ν(K) = max(1, ⌈c K^e⌉)`.
    Poly { c: f64, e: f64 },
    /// Step function: the value of the last breakpoint `K_i ≤ K`, else 1.
    Table(Vec<(f64, u64)>),
}

/// Pluggable covering function, always integer valued, nondecreasing and at least 1.
#[derive(Clone, Debug, PartialEq)]
pub struct NuFunction {
    kind: NuKind,
}

impl Default for NuFunction {
    fn default() -> Self {
        NuFunction::ceil()
    }
}

impl NuFunction {
    pub fn ceil() -> Self {
        NuFunction { kind: NuKind::Ceil }
    }

    pub fn poly(c: f64, e: f64) -> Result<Self, ConstantsError> {
        if !(c.is_finite() && e.is_finite() && c >= 0.0 && e >= 0.0) {
            return Err(ConstantsError::NuSpec(format!("poly:{c},{e} must have finite c, e >= 0")));
        }
        Ok(NuFunction { kind: NuKind::Poly { c, e } })
    }

    /// The constant function 1.
    pub fn one() -> Self {
        NuFunction { kind: NuKind::Poly { c: 1.0, e: 0.0 } }
    }

    pub fn table(breakpoints: Vec<(f64, u64)>) -> Result<Self, ConstantsError> {
        if breakpoints.is_empty() {
            return Err(ConstantsError::NuSpec("table is empty".into()));
        }
        for w in breakpoints.windows(2) {
            if !(w[0].0 < w[1].0) || w[0].1 > w[1].1 {
                return Err(ConstantsError::NuSpec(format!(
                    "table must have increasing K and nondecreasing nu; got {:?} then {:?}",
                    w[0], w[1]
                )));
            }
        }
        if breakpoints.iter().any(|(k, v)| !k.is_finite() || *v == 0) {
            return Err(ConstantsError::NuSpec("table entries need finite K and nu >= 1".into()));
        }
        Ok(NuFunction { kind: NuKind::Table(breakpoints) })
    }

    /// Reads a `K,nu` CSV with a header row.
    pub fn table_from_csv<R: Read>(reader: R) -> Result<Self, ConstantsError> {
        let mut rdr = csv::Reader::from_reader(reader);
        let mut rows = Vec::new();
        for rec in rdr.deserialize::<(f64, u64)>() {
            rows.push(rec.map_err(|e| ConstantsError::NuSpec(format!("bad table row: {e}")))?);
        }
        NuFunction::table(rows)
    }

    /// Parses `ceil`, `poly:c,e` or `table:FILE`.
    pub fn parse(spec: &str) -> Result<Self, ConstantsError> {
        let spec = spec.trim();
        if spec == "ceil" {
            return Ok(NuFunction::ceil());
        }
        if let Some(rest) = spec.strip_prefix("poly:") {
            let parts: Vec<&str> = rest.split(',').collect();
            let [c, e] = parts.as_slice() else {
                return Err(ConstantsError::NuSpec(format!("expected poly:c,e, got {spec}")));
            };
            let parse = |s: &str| s.trim().parse::<f64>().map_err(|e| ConstantsError::NuSpec(format!("{s}: {e}")));
            return NuFunction::poly(parse(c)?, parse(e)?);
        }
        if let Some(path) = spec.strip_prefix("table:") {
            let file = std::fs::File::open(Path::new(path))
                .map_err(|e| ConstantsError::NuSpec(format!("cannot open {path}: {e}")))?;
            return NuFunction::table_from_csv(file);
        }
        Err(ConstantsError::NuSpec(format!("unknown nu spec {spec:?}; use ceil, poly:c,e or table:FILE")))
    }

    pub fn kind(&self) -> &NuKind {
        &self.kind
    }

    pub fn eval(&self, k: &Float, precision: usize) -> BigValue {
        match &self.kind {
            NuKind::Ceil => at_least_one(BigValue::ceil_of(k, precision)),
            NuKind::Poly { c, e } => {
                if *c == 0.0 {
                    return BigValue::from_u64(1);
                }
                if *k <= float(0.0, precision) {
                    return BigValue::from_u64(1);
                }
                let v = if *e == 0.0 {
                    float(*c, precision)
                } else {
                    (float(c.ln(), precision) + float(*e, precision) * k.ln()).exp()
                };
                at_least_one(BigValue::ceil_of(&v, precision))
            }
            NuKind::Table(rows) => {
                let k = k.to_f64().value();
                let v = rows.iter().take_while(|(b, _)| *b <= k).last().map_or(1, |(_, v)| *v);
                BigValue::from_u64(v)
            }
        }
    }

    pub fn eval_f64(&self, k: f64, precision: usize) -> BigValue {
        self.eval(&float(k, precision), precision)
    }
}

fn at_least_one(v: BigValue) -> BigValue {
    match v {
        BigValue::Exact(n) if n == dashu::integer::UBig::ZERO => BigValue::from_u64(1),
        other => other,
    }
}

impl fmt::Display for NuFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            NuKind::Ceil => f.write_str("ceil"),
            NuKind::Poly { c, e } => write!(f, "poly:{c},{e}"),
            NuKind::Table(rows) => write!(f, "table:{} breakpoints", rows.len()),
        }
    }
}

impl Serialize for NuFunction {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: usize = 256;

    #[test]
    fn ceil_and_poly() {
        let nu = NuFunction::ceil();
        assert_eq!(nu.eval_f64(243.0, P), BigValue::from_u64(243));
        assert_eq!(nu.eval_f64(243.5, P), BigValue::from_u64(244));
        assert_eq!(nu.eval_f64(0.25, P), BigValue::from_u64(1));
        let sq = NuFunction::poly(2.0, 2.0).unwrap();
        assert_eq!(sq.eval_f64(3.0, P), BigValue::from_u64(18));
        assert_eq!(NuFunction::one().eval_f64(1e9, P), BigValue::from_u64(1));
        assert!(NuFunction::poly(-1.0, 1.0).is_err());
    }

    #[test]
    fn table_is_a_step_function() {
        let csv = "K,nu\n1,2\n10,5\n100,9\n";
        let nu = NuFunction::table_from_csv(csv.as_bytes()).unwrap();
        let at = |k: f64| nu.eval_f64(k, P).as_u64().unwrap();
        assert_eq!([at(0.5), at(1.0), at(9.9), at(10.0), at(1e6)], [1, 2, 2, 5, 9]);
        assert!(NuFunction::table(vec![(1.0, 5), (2.0, 3)]).is_err());
        assert!(NuFunction::table(vec![(1.0, 0)]).is_err());
    }

    #[test]
    fn parse_specs() {
        assert_eq!(NuFunction::parse("ceil").unwrap(), NuFunction::ceil());
        assert_eq!(NuFunction::parse("poly:1,0").unwrap(), NuFunction::one());
        assert_eq!(NuFunction::parse("poly:1.5,2").unwrap().to_string(), "poly:1.5,2");
        assert!(NuFunction::parse("poly:1").is_err());
        assert!(NuFunction::parse("table:/nonexistent.csv").is_err());
        assert!(NuFunction::parse("bgt").is_err());
    }

    #[test]
    fn monotone_on_a_grid() {
        for nu in [NuFunction::ceil(), NuFunction::poly(0.5, 1.5).unwrap(), NuFunction::one()] {
            let mut last = 0.0;
            for i in 0..200 {
                let v = nu.eval_f64(0.37 * i as f64, P).to_f64();
                assert!(v >= 1.0 && v >= last && v.fract() == 0.0);
                last = v;
            }
        }
    }
}
