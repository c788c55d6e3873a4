//! Self-contained curve certificates and their independent verification.
//!
//! A certificate stores the ambient variables, canonical generator
//! strings, the claimed invariants, and the full sampling context
//! (seed, retries, input echo). Verification reparses the generators and
//! re-runs the whole Gröbner pipeline from scratch, comparing verdicts
//! field by field; nothing from the original run is trusted.

use super::builders::BuildConfig;
use super::{BundleTwist, ConstructionPlan};
use crate::brauer::BrauerClassQ;
use crate::error::{Error, Result};
use crate::groebner::{is_smooth_curve_with_budget, CurveReport, Ideal, DEFAULT_PAIR_BUDGET};
use crate::poly::{Poly, Ring};
use serde_json::{json, Map, Value};

/// Invariants a builder claims for its curve; verification recomputes
/// every one of them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantsReport {
    pub dimension: i64,
    pub degree: u64,
    pub genus: i64,
    pub smooth: bool,
}

/// Verbatim echo of builder inputs and configuration.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct InputsEcho {
    pub a: Option<String>,
    pub b: Option<String>,
    pub mode: Option<String>,
    pub height: u32,
    pub max_retries: u32,
    pub pair_budget: u64,
    pub branch_degree: Option<i64>,
    pub branch_dimension: Option<i64>,
    pub cover_genus: Option<i64>,
}

impl InputsEcho {
    pub(crate) fn from_config(cfg: &BuildConfig) -> InputsEcho {
        InputsEcho {
            height: cfg.height,
            max_retries: cfg.max_retries,
            pair_budget: cfg.pair_budget as u64,
            ..InputsEcho::default()
        }
    }
}

/// A certified genus-one (or conic-cover) model with its audit trail.
#[derive(Clone, Debug, PartialEq)]
pub struct CurveCertificate {
    pub construction: String,
    pub ambient_vars: Vec<String>,
    pub generators: Vec<String>,
    pub report: InvariantsReport,
    pub irreducibility_certified: bool,
    pub seed: u64,
    pub retries: u32,
    pub inputs: InputsEcho,
    pub plan: Option<ConstructionPlan>,
}

impl CurveCertificate {
    #[allow(clippy::too_many_arguments)]
    pub(crate) fn assemble(
        construction: &str,
        ring: &Ring,
        generators: Vec<Poly>,
        report: &CurveReport,
        seed: u64,
        retries: u32,
        inputs: InputsEcho,
        plan: Option<ConstructionPlan>,
    ) -> CurveCertificate {
        let report = InvariantsReport {
            dimension: report.dimension,
            degree: report.degree.expect("certified curve must have a degree"),
            genus: report.genus.expect("certified curve must have a genus"),
            smooth: report.smooth.expect("certified curve must have a smoothness verdict"),
        };
        CurveCertificate {
            construction: construction.to_string(),
            ambient_vars: ring.var_names().to_vec(),
            generators: generators.iter().map(Poly::canonical_string).collect(),
            report,
            irreducibility_certified: false,
            seed,
            retries,
            inputs,
            plan,
        }
    }

    pub fn ambient_ring(&self) -> Result<Ring> {
        if self.ambient_vars.is_empty() {
            return Err(Error::MalformedCertificate("no ambient variables".into()));
        }
        let mut sorted = self.ambient_vars.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != self.ambient_vars.len() {
            return Err(Error::MalformedCertificate("duplicate ambient variables".into()));
        }
        Ok(Ring::new(self.ambient_vars.clone()))
    }

    /// Reparse the stored generator strings.
    pub fn generator_polys(&self) -> Result<Vec<Poly>> {
        let ring = self.ambient_ring()?;
        self.generators
            .iter()
            .map(|s| {
                Poly::parse(&ring, s)
                    .map_err(|e| Error::MalformedCertificate(format!("generator '{s}': {e}")))
            })
            .collect()
    }

    pub fn to_json_value(&self) -> Value {
        let mut inputs = Map::new();
        let e = &self.inputs;
        if let Some(a) = &e.a {
            inputs.insert("a".into(), Value::from(a.clone()));
        }
        if let Some(b) = &e.b {
            inputs.insert("b".into(), Value::from(b.clone()));
        }
        if let Some(mode) = &e.mode {
            inputs.insert("mode".into(), Value::from(mode.clone()));
        }
        inputs.insert("height".into(), Value::from(e.height));
        inputs.insert("max_retries".into(), Value::from(e.max_retries));
        inputs.insert("pair_budget".into(), Value::from(e.pair_budget));
        if let Some(d) = e.branch_degree {
            inputs.insert("branch_degree".into(), Value::from(d));
        }
        if let Some(d) = e.branch_dimension {
            inputs.insert("branch_dimension".into(), Value::from(d));
        }
        if let Some(g) = e.cover_genus {
            inputs.insert("cover_genus".into(), Value::from(g));
        }

        let mut root = json!({
            "construction": self.construction,
            "ambient": { "vars": self.ambient_vars },
            "generators": self.generators,
            "report": {
                "dimension": self.report.dimension,
                "degree": self.report.degree,
                "genus": self.report.genus,
                "smooth": self.report.smooth,
            },
            "irreducibility_certified": self.irreducibility_certified,
            "seed": self.seed,
            "retries": self.retries,
            "inputs": Value::Object(inputs),
        });
        if let Some(plan) = &self.plan {
            root["plan"] = plan_to_json(plan);
        }
        root
    }

    /// Pretty JSON with sorted keys; byte-identical for identical
    /// certificates.
    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json_value())
            .expect("certificate serialization cannot fail");
        s.push('\n');
        s
    }

    pub fn from_json_str(s: &str) -> Result<CurveCertificate> {
        let v: Value = serde_json::from_str(s)
            .map_err(|e| Error::MalformedCertificate(format!("bad JSON: {e}")))?;
        CurveCertificate::from_json_value(&v)
    }

    pub fn from_json_value(v: &Value) -> Result<CurveCertificate> {
        let construction = get_str(v, "construction")?.to_string();
        let ambient_vars: Vec<String> = v
            .get("ambient")
            .and_then(|a| a.get("vars"))
            .and_then(Value::as_array)
            .ok_or_else(|| malformed("ambient.vars"))?
            .iter()
            .map(|s| s.as_str().map(str::to_string).ok_or_else(|| malformed("ambient.vars")))
            .collect::<Result<_>>()?;
        let generators: Vec<String> = v
            .get("generators")
            .and_then(Value::as_array)
            .ok_or_else(|| malformed("generators"))?
            .iter()
            .map(|s| s.as_str().map(str::to_string).ok_or_else(|| malformed("generators")))
            .collect::<Result<_>>()?;
        let r = v.get("report").ok_or_else(|| malformed("report"))?;
        let report = InvariantsReport {
            dimension: get_i64(r, "dimension")?,
            degree: get_u64(r, "degree")?,
            genus: get_i64(r, "genus")?,
            smooth: get_bool(r, "smooth")?,
        };
        let irreducibility_certified = get_bool(v, "irreducibility_certified")?;
        let seed = get_u64(v, "seed")?;
        let retries = get_u64(v, "retries")? as u32;
        let inputs = v.get("inputs").map(inputs_from_json).transpose()?.unwrap_or_default();
        let plan = v.get("plan").map(plan_from_json).transpose()?;
        Ok(CurveCertificate {
            construction,
            ambient_vars,
            generators,
            report,
            irreducibility_certified,
            seed,
            retries,
            inputs,
            plan,
        })
    }
}

fn malformed(what: &str) -> Error {
    Error::MalformedCertificate(format!("missing or ill-typed field '{what}'"))
}

fn get_str<'v>(v: &'v Value, key: &str) -> Result<&'v str> {
    v.get(key).and_then(Value::as_str).ok_or_else(|| malformed(key))
}

fn get_bool(v: &Value, key: &str) -> Result<bool> {
    v.get(key).and_then(Value::as_bool).ok_or_else(|| malformed(key))
}

fn get_u64(v: &Value, key: &str) -> Result<u64> {
    v.get(key).and_then(Value::as_u64).ok_or_else(|| malformed(key))
}

fn get_i64(v: &Value, key: &str) -> Result<i64> {
    v.get(key).and_then(Value::as_i64).ok_or_else(|| malformed(key))
}

fn opt_u64(v: &Value, key: &str) -> Result<Option<u64>> {
    match v.get(key) {
        None | Some(Value::Null) => Ok(None),
        Some(x) => x.as_u64().map(Some).ok_or_else(|| malformed(key)),
    }
}

fn opt_i64(v: &Value, key: &str) -> Result<Option<i64>> {
    match v.get(key) {
        None | Some(Value::Null) => Ok(None),
        Some(x) => x.as_i64().map(Some).ok_or_else(|| malformed(key)),
    }
}

fn opt_str(v: &Value, key: &str) -> Result<Option<String>> {
    match v.get(key) {
        None | Some(Value::Null) => Ok(None),
        Some(x) => x.as_str().map(|s| Some(s.to_string())).ok_or_else(|| malformed(key)),
    }
}

fn inputs_from_json(v: &Value) -> Result<InputsEcho> {
    Ok(InputsEcho {
        a: opt_str(v, "a")?,
        b: opt_str(v, "b")?,
        mode: opt_str(v, "mode")?,
        height: get_u64(v, "height")? as u32,
        max_retries: get_u64(v, "max_retries")? as u32,
        pair_budget: get_u64(v, "pair_budget")?,
        branch_degree: opt_i64(v, "branch_degree")?,
        branch_dimension: opt_i64(v, "branch_dimension")?,
        cover_genus: opt_i64(v, "cover_genus")?,
    })
}

impl ConstructionPlan {
    pub fn to_json_value(&self) -> Value {
        plan_to_json(self)
    }

    pub fn from_json_value(v: &Value) -> Result<ConstructionPlan> {
        plan_from_json(v)
    }
}

fn plan_to_json(p: &ConstructionPlan) -> Value {
    let mut m = Map::new();
    m.insert("alpha".into(), p.alpha.to_json_value());
    m.insert("index_case".into(), Value::from(p.index_case));
    if let Some(y) = &p.y_class {
        m.insert("y_class".into(), y.to_json_value());
    }
    m.insert("x_dim".into(), Value::from(p.x_dim));
    if let Some(d) = p.y_dim {
        m.insert("y_dim".into(), Value::from(d));
    }
    if let Some(b) = &p.bundle {
        m.insert("bundle".into(), json!({ "m": b.m, "n": b.n, "omega_twist": b.omega_twist }));
    }
    m.insert("obstruction".into(), p.obstruction.to_json_value());
    m.insert("obstruction_vanishes".into(), Value::from(p.obstruction_vanishes));
    if let Some(r) = p.bundle_rank {
        m.insert("bundle_rank".into(), Value::from(r));
    }
    if let Some(s) = p.expected_sections {
        m.insert("expected_sections".into(), Value::from(s));
    }
    Value::Object(m)
}

fn class_field(v: &Value, key: &str) -> Result<BrauerClassQ> {
    let raw = v.get(key).ok_or_else(|| malformed(key))?;
    BrauerClassQ::from_json_value(raw)
        .map_err(|e| Error::MalformedCertificate(format!("field '{key}': {e}")))
}

fn plan_from_json(v: &Value) -> Result<ConstructionPlan> {
    let bundle = match v.get("bundle") {
        None | Some(Value::Null) => None,
        Some(b) => Some(BundleTwist {
            m: get_i64(b, "m")?,
            n: get_i64(b, "n")?,
            omega_twist: get_bool(b, "omega_twist")?,
        }),
    };
    let y_class = match v.get("y_class") {
        None | Some(Value::Null) => None,
        Some(_) => Some(class_field(v, "y_class")?),
    };
    Ok(ConstructionPlan {
        alpha: class_field(v, "alpha")?,
        index_case: get_u64(v, "index_case")? as u8,
        y_class,
        x_dim: get_i64(v, "x_dim")?,
        y_dim: opt_i64(v, "y_dim")?,
        bundle,
        obstruction: class_field(v, "obstruction")?,
        obstruction_vanishes: get_bool(v, "obstruction_vanishes")?,
        bundle_rank: opt_u64(v, "bundle_rank")?,
        expected_sections: opt_u64(v, "expected_sections")?,
    })
}

/// Field-by-field outcome of re-certification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub matches: bool,
    pub diffs: Vec<String>,
}

/// Re-run the full certification pipeline on the stored generators and
/// compare against the claimed report.
pub fn verify_certificate(c: &CurveCertificate) -> Result<VerifyReport> {
    verify_certificate_with_budget(c, DEFAULT_PAIR_BUDGET)
}

pub fn verify_certificate_with_budget(
    c: &CurveCertificate,
    pair_budget: usize,
) -> Result<VerifyReport> {
    let ring = c.ambient_ring()?;
    let gens = c.generator_polys()?;
    let ideal = Ideal::new(&ring, gens).map_err(|e| Error::MalformedCertificate(e.to_string()))?;
    let fresh = is_smooth_curve_with_budget(&ideal, pair_budget)?;

    let mut diffs = Vec::new();
    if fresh.dimension != c.report.dimension {
        diffs.push(format!(
            "dimension: certificate says {}, recheck found {}",
            c.report.dimension, fresh.dimension
        ));
    }
    match fresh.degree {
        Some(d) if d == c.report.degree => {}
        Some(d) => {
            diffs.push(format!("degree: certificate says {}, recheck found {d}", c.report.degree))
        }
        None => {
            diffs.push(format!("degree: certificate says {}, recheck found none", c.report.degree))
        }
    }
    match fresh.genus {
        Some(g) if g == c.report.genus => {}
        Some(g) => {
            diffs.push(format!("genus: certificate says {}, recheck found {g}", c.report.genus))
        }
        None => {
            diffs.push(format!("genus: certificate says {}, recheck found none", c.report.genus))
        }
    }
    match fresh.smooth {
        Some(s) if s == c.report.smooth => {}
        Some(s) => {
            diffs.push(format!("smooth: certificate says {}, recheck found {s}", c.report.smooth))
        }
        None => diffs.push(format!(
            "smooth: certificate says {}, recheck reached no verdict",
            c.report.smooth
        )),
    }
    Ok(VerifyReport { matches: diffs.is_empty(), diffs })
}
