//! JSON form of Brauer classes, plus a lenient text form for the
//! command line.
//!
//! Formal shape: {"invariants": [{"place": "2", "num": 1, "den": 4}, …]}
//! with places as decimal strings or "inf", entries sorted by place.
//! num/den are JSON numbers when they fit in 64 bits and decimal strings
//! otherwise. The lenient form is `{2:1/4, 3:3/4, inf:1/2}`.

use super::{BrauerClassQ, Place};
use crate::error::{Error, Result};
use crate::rational::{parse_rational, Rational};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

fn bigint_json(x: &BigInt) -> Value {
    match x.to_u64() {
        Some(n) => Value::from(n),
        None => Value::String(x.to_string()),
    }
}

fn bigint_from_json(v: &Value, what: &str) -> Result<BigInt> {
    match v {
        Value::Number(n) => {
            if let Some(u) = n.as_u64() {
                Ok(BigInt::from(u))
            } else if let Some(i) = n.as_i64() {
                Ok(BigInt::from(i))
            } else {
                Err(Error::Parse(format!("non-integer {what}: {n}")))
            }
        }
        Value::String(s) => s.parse().map_err(|_| Error::Parse(format!("bad {what}: '{s}'"))),
        other => Err(Error::Parse(format!("bad {what}: {other}"))),
    }
}

impl BrauerClassQ {
    pub fn to_json_value(&self) -> Value {
        let entries: Vec<Value> = self
            .invariants
            .iter()
            .map(|(place, inv)| {
                json!({
                    "place": place.to_string(),
                    "num": bigint_json(inv.numer()),
                    "den": bigint_json(inv.denom()),
                })
            })
            .collect();
        json!({ "invariants": entries })
    }

    pub fn from_json_value(v: &Value) -> Result<BrauerClassQ> {
        let entries = v
            .get("invariants")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("expected an object with an 'invariants' array".into()))?;
        let mut pairs = Vec::with_capacity(entries.len());
        for e in entries {
            let place = e
                .get("place")
                .and_then(Value::as_str)
                .ok_or_else(|| Error::Parse("invariant entry without a 'place' string".into()))?;
            let place = Place::parse(place)?;
            let num = bigint_from_json(
                e.get("num").ok_or_else(|| Error::Parse("missing 'num'".into()))?,
                "num",
            )?;
            let den = bigint_from_json(
                e.get("den").ok_or_else(|| Error::Parse("missing 'den'".into()))?,
                "den",
            )?;
            if den == BigInt::from(0) {
                return Err(Error::Parse("zero denominator in invariant".into()));
            }
            pairs.push((place, Rational::new(num, den)));
        }
        BrauerClassQ::from_invariants(pairs)
    }

    /// Parse `{2:1/4, 3:3/4, inf:1/2}`.
    pub fn parse_lenient(s: &str) -> Result<BrauerClassQ> {
        let t = s.trim();
        let inner = t
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(|| Error::Parse(format!("expected {{place:inv, …}}, got '{s}'")))?;
        let mut pairs = Vec::new();
        for part in inner.split(',') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let (place, inv) = part
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("expected place:inv, got '{part}'")))?;
            pairs.push((Place::parse(place)?, parse_rational(inv.trim())?));
        }
        BrauerClassQ::from_invariants(pairs)
    }

    /// Accept either the formal JSON shape or the lenient text form.
    pub fn parse_spec(s: &str) -> Result<BrauerClassQ> {
        if let Ok(v) = serde_json::from_str::<Value>(s) {
            if v.get("invariants").is_some() {
                return BrauerClassQ::from_json_value(&v);
            }
        }
        BrauerClassQ::parse_lenient(s)
    }
}
