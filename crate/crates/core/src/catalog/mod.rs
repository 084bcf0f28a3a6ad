//! A registry of the verifiable identities satisfied by dihedral
//! hypergeometric functions, with a sampling-based residual engine.
//!
//! Each [`IdentityDescriptor`] names one identity, states its parameter
//! domain, and carries two evaluators built on the library modules: a
//! deterministic sampler for admissible parameter points and an evaluator
//! producing both sides. Exact identities run in rational arithmetic and
//! must agree exactly; numeric ones pass when the relative residual stays
//! below the descriptor tolerance, with the scale max(|lhs|, |rhs|, 1) so
//! common zeros do not produce spurious failures.

mod entries;
pub mod report;

use crate::scalar::Cx;
use crate::Error;

pub use report::{reports_to_csv, summaries_to_json, write_reports};

/// Exactness class of a catalog entry.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Exactness {
    /// Both sides are computed in exact rational arithmetic and compared
    /// for equality.
    Exact,
    /// Floating evaluation with the given relative tolerance.
    Numeric(f64),
}

/// One admissible parameter point for an identity. Unused fields stay at
/// their defaults; exact identities carry rational mirrors of a and the
/// evaluation point.
#[derive(Debug, Clone, Default)]
pub struct SamplePoint {
    pub k: u32,
    pub l: u32,
    /// covering numerator / theta-transform degree
    pub n: u32,
    /// covering denominator
    pub m: u32,
    /// integer degeneracy degree (a = −mi)
    pub mi: u32,
    pub a: f64,
    pub b: f64,
    pub z: f64,
    pub ra: Option<crate::scalar::Rat>,
    pub rb: Option<crate::scalar::Rat>,
    pub rz: Option<crate::scalar::Rat>,
}

impl SamplePoint {
    pub fn describe(&self) -> String {
        let mut s = format!("k={};l={}", self.k, self.l);
        if self.n != 0 || self.m != 0 {
            s.push_str(&format!(";n={};m={}", self.n, self.m));
        }
        if self.mi != 0 {
            s.push_str(&format!(";mi={}", self.mi));
        }
        if let Some(ra) = &self.ra {
            s.push_str(&format!(";a={ra}"));
        } else if self.a != 0.0 {
            s.push_str(&format!(";a={}", self.a));
        }
        if let Some(rb) = &self.rb {
            s.push_str(&format!(";b={rb}"));
        } else if self.b != 0.0 {
            s.push_str(&format!(";b={}", self.b));
        }
        if let Some(rz) = &self.rz {
            s.push_str(&format!(";x={rz}"));
        }
        s
    }
}

/// Evaluated left- and right-hand sides of one identity at one point.
#[derive(Debug, Clone, Copy)]
pub struct Pair {
    pub lhs: Cx,
    pub rhs: Cx,
    /// Set when both sides were computed exactly: whether they are equal.
    pub exact_equal: Option<bool>,
}

impl Pair {
    pub fn numeric(lhs: Cx, rhs: Cx) -> Self {
        Pair {
            lhs,
            rhs,
            exact_equal: None,
        }
    }
}

/// Deterministic split-mix generator so sweeps are reproducible from a
/// seed alone.
#[derive(Debug, Clone)]
pub struct SweepRng(u64);

impl SweepRng {
    pub fn new(seed: u64) -> Self {
        SweepRng(seed.wrapping_add(0x9e37_79b9_7f4a_7c15))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Uniform in [0, 1).
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }

    /// Uniform in [lo, hi).
    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next_f64()
    }

    /// Uniform integer in [0, n).
    pub fn below(&mut self, n: u32) -> u32 {
        (self.next_u64() % n as u64) as u32
    }
}

/// Sweep configuration: seed, sample budget per entry, and an optional
/// tolerance override.
#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub seed: u64,
    pub samples: usize,
    pub tol_override: Option<f64>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            seed: 7,
            samples: 24,
            tol_override: None,
        }
    }
}

/// Catalog entry: identity metadata plus its sampler and evaluator.
pub struct IdentityDescriptor {
    pub id: &'static str,
    /// One-line mathematical statement.
    pub statement: &'static str,
    /// Human-readable parameter domain.
    pub domain: &'static str,
    pub exactness: Exactness,
    pub sampler: fn(&mut SweepRng, &SweepConfig) -> Vec<SamplePoint>,
    pub eval: fn(&SamplePoint) -> Result<Pair, Error>,
}

/// Residual record for one sample of one identity.
#[derive(Debug, Clone, serde::Serialize)]
pub struct ResidualReport {
    pub id: String,
    pub params: String,
    pub z: f64,
    pub lhs_re: f64,
    pub lhs_im: f64,
    pub rhs_re: f64,
    pub rhs_im: f64,
    pub abs_residual: f64,
    pub rel_residual: f64,
    pub pass: bool,
}

/// Aggregate of a sweep over one identity.
#[derive(Debug, Clone, serde::Serialize)]
pub struct SweepSummary {
    pub id: String,
    pub exact: bool,
    pub tolerance: f64,
    pub samples: usize,
    pub failures: usize,
    pub max_rel_residual: f64,
    pub worst_params: String,
}

/// The full, deterministically ordered identity catalog.
pub fn list_identities() -> &'static [IdentityDescriptor] {
    entries::all()
}

/// Identity ids that the catalog must cover, one per display identity in
/// scope; a unit test cross-references this manifest against the list.
pub fn required_coverage() -> &'static [&'static str] {
    entries::REQUIRED_COVERAGE
}

/// Look an identity up by id.
pub fn lookup(id: &str) -> Result<&'static IdentityDescriptor, Error> {
    list_identities()
        .iter()
        .find(|d| d.id == id)
        .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

fn residual(pair: &Pair) -> (f64, f64) {
    let abs = (pair.lhs - pair.rhs).norm();
    let scale = pair.lhs.norm().max(pair.rhs.norm()).max(1.0);
    (abs, abs / scale)
}

/// Evaluate one identity at one point and classify the residual.
pub fn eval_identity(id: &str, point: &SamplePoint) -> Result<ResidualReport, Error> {
    let desc = lookup(id)?;
    let pair = (desc.eval)(point).map_err(|e| match e {
        Error::Domain(msg) => Error::Domain(format!("{id}: {msg}")),
        other => other,
    })?;
    let (abs, rel) = residual(&pair);
    let tol = match desc.exactness {
        Exactness::Exact => 0.0,
        Exactness::Numeric(t) => t,
    };
    let pass = match pair.exact_equal {
        Some(eq) => eq,
        None => rel <= tol,
    };
    Ok(ResidualReport {
        id: id.to_string(),
        params: point.describe(),
        z: point.z,
        lhs_re: pair.lhs.re,
        lhs_im: pair.lhs.im,
        rhs_re: pair.rhs.re,
        rhs_im: pair.rhs.im,
        abs_residual: abs,
        rel_residual: rel,
        pass,
    })
}

/// Sweep one identity over its sampled domain. Deterministic for a fixed
/// seed: the sampler's generator is derived from the seed and the id.
pub fn sweep(id: &str, config: &SweepConfig) -> Result<(Vec<ResidualReport>, SweepSummary), Error> {
    let desc = lookup(id)?;
    let mut rng = SweepRng::new(config.seed ^ fnv1a(id.as_bytes()));
    let points = (desc.sampler)(&mut rng, config);
    let mut reports = Vec::with_capacity(points.len());
    let mut failures = 0usize;
    let mut max_rel = 0.0f64;
    let mut worst = String::new();
    let tol = match (desc.exactness, config.tol_override) {
        (Exactness::Exact, _) => 0.0,
        (Exactness::Numeric(_), Some(t)) => t,
        (Exactness::Numeric(t), None) => t,
    };
    for point in &points {
        let pair = (desc.eval)(point)?;
        let (abs, rel) = residual(&pair);
        let pass = match pair.exact_equal {
            Some(eq) => eq,
            None => rel <= tol,
        };
        if !pass {
            failures += 1;
        }
        if rel >= max_rel {
            max_rel = rel;
            worst = point.describe();
        }
        reports.push(ResidualReport {
            id: id.to_string(),
            params: point.describe(),
            z: point.z,
            lhs_re: pair.lhs.re,
            lhs_im: pair.lhs.im,
            rhs_re: pair.rhs.re,
            rhs_im: pair.rhs.im,
            abs_residual: abs,
            rel_residual: rel,
            pass,
        });
    }
    let summary = SweepSummary {
        id: id.to_string(),
        exact: matches!(desc.exactness, Exactness::Exact),
        tolerance: tol,
        samples: reports.len(),
        failures,
        max_rel_residual: max_rel,
        worst_params: worst,
    };
    Ok((reports, summary))
}

/// Sweep the whole catalog in its stable order.
pub fn sweep_all(config: &SweepConfig) -> Result<(Vec<ResidualReport>, Vec<SweepSummary>), Error> {
    let mut reports = Vec::new();
    let mut summaries = Vec::new();
    for desc in list_identities() {
        let (mut r, s) = sweep(desc.id, config)?;
        reports.append(&mut r);
        summaries.push(s);
    }
    Ok((reports, summaries))
}

fn fnv1a(bytes: &[u8]) -> u64 {
    let mut h = 0xcbf2_9ce4_8422_2325u64;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_is_well_formed() {
        let all = list_identities();
        assert!(all.len() >= 30, "catalog has {} entries", all.len());
        let mut ids: Vec<&str> = all.iter().map(|d| d.id).collect();
        let total = ids.len();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), total, "duplicate identity ids");
        assert!(lookup("clausen").is_ok());
        assert!(lookup("no-such-identity").is_err());
    }

    #[test]
    fn sweeps_are_deterministic() {
        let config = SweepConfig {
            seed: 42,
            samples: 6,
            tol_override: None,
        };
        let (r1, s1) = sweep("basic-d2", &config).unwrap();
        let (r2, s2) = sweep("basic-d2", &config).unwrap();
        assert_eq!(r1.len(), r2.len());
        for (a, b) in r1.iter().zip(r2.iter()) {
            assert_eq!(a.params, b.params);
            assert_eq!(a.lhs_re, b.lhs_re);
            assert_eq!(a.rel_residual, b.rel_residual);
        }
        assert_eq!(s1.max_rel_residual, s2.max_rel_residual);
    }

    #[test]
    fn every_required_identity_is_registered() {
        for id in entries::REQUIRED_COVERAGE {
            assert!(lookup(id).is_ok(), "missing required identity {id}");
        }
    }

    #[test]
    fn checked_in_manifest_matches_catalog() {
        let path =
            std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../docs/identities.json");
        let text = std::fs::read_to_string(&path)
            .unwrap_or_else(|e| panic!("manifest at {}: {e}", path.display()));
        let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
        let manifest: std::collections::BTreeSet<&str> = doc["identities"]
            .as_array()
            .unwrap()
            .iter()
            .map(|e| e["id"].as_str().unwrap())
            .collect();
        let registered: std::collections::BTreeSet<&str> =
            list_identities().iter().map(|d| d.id).collect();
        assert_eq!(
            manifest, registered,
            "docs/identities.json drifted from the catalog"
        );
    }
}
