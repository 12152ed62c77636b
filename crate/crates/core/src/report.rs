//! Shared report serialization: exact rationals as "p/q" strings, plus small
//! CSV helpers (LF line endings, "." decimal point, no quoting needed for
//! the emitted field set).

use std::fmt;
use std::str::FromStr;

use num::BigRational;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Exact rational that serializes as its "p/q" string (plain "p" for
/// integers), e.g. `35/6`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Exact(pub BigRational);

impl From<BigRational> for Exact {
    fn from(value: BigRational) -> Self {
        Self(value)
    }
}

impl fmt::Display for Exact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Serialize for Exact {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for Exact {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        BigRational::from_str(&s)
            .map(Exact)
            .map_err(|e| D::Error::custom(format!("invalid rational {s:?}: {e}")))
    }
}

/// Result of a linear solve: exact up to the rational-arithmetic size limit,
/// floating point beyond it. Serializes as a string ("35/6") or a number.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SolveValue {
    Exact(Exact),
    Approx(f64),
}

impl SolveValue {
    pub fn to_f64(&self) -> f64 {
        match self {
            SolveValue::Exact(e) => crate::scalar::to_f64(&e.0),
            SolveValue::Approx(v) => *v,
        }
    }
}

/// Joins one CSV record, quoting fields that contain commas or quotes
/// (the edge labels `|x,y>` need this).
pub fn csv_line<I: IntoIterator<Item = String>>(fields: I) -> String {
    let mut line = fields
        .into_iter()
        .map(|f| {
            if f.contains(',') || f.contains('"') {
                format!("\"{}\"", f.replace('"', "\"\""))
            } else {
                f
            }
        })
        .collect::<Vec<_>>()
        .join(",");
    line.push('\n');
    line
}

/// Shortest-roundtrip float formatting (what `{}` gives for `f64`), kept in
/// one place so CSV and text output stay consistent.
pub fn fmt_f64(v: f64) -> String {
    format!("{v}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_round_trips_through_json() {
        let e = Exact(BigRational::new(35.into(), 6.into()));
        let json = serde_json::to_string(&e).unwrap();
        assert_eq!(json, "\"35/6\"");
        let back: Exact = serde_json::from_str(&json).unwrap();
        assert_eq!(back, e);
        // integers print without the denominator
        let i = Exact(BigRational::from_integer(160.into()));
        assert_eq!(serde_json::to_string(&i).unwrap(), "\"160\"");
        let back: Exact = serde_json::from_str("\"160\"").unwrap();
        assert_eq!(back, i);
    }

    #[test]
    fn solve_value_untagged_round_trip() {
        let a = SolveValue::Exact(Exact(BigRational::new(1.into(), 3.into())));
        let b = SolveValue::Approx(2.5);
        let ja = serde_json::to_string(&a).unwrap();
        let jb = serde_json::to_string(&b).unwrap();
        assert_eq!(serde_json::from_str::<SolveValue>(&ja).unwrap(), a);
        assert_eq!(serde_json::from_str::<SolveValue>(&jb).unwrap(), b);
    }

    #[test]
    fn csv_line_is_lf_terminated_and_quotes_commas() {
        let line = csv_line(["a".to_string(), "1.5".to_string()]);
        assert_eq!(line, "a,1.5\n");
        let quoted = csv_line(["|1,6>".to_string(), "+".to_string()]);
        assert_eq!(quoted, "\"|1,6>\",+\n");
    }
}
