//! Browser bindings for the interactive demo page.
//!
//! Three operations are exposed: sampling a dihedral solution curve over
//! its series-argument interval, constructing a pull-back covering (with
//! its rational map sampled for plotting), and classifying degenerate
//! parameter triples. All returns are plain numbers or JSON strings so
//! the page needs no framework — see `www/index.html`.

use wasm_bindgen::prelude::*;

use dihedral_hpg::dihedral::{
    classify_integer_a, hpg_at0, hpg_at1, hpg_at_inf, At1Kind, DegeneracyVerdict, DihedralParams,
    InfKind, Parity,
};
use dihedral_hpg::scalar::{Cx, Rat};
use dihedral_hpg::transforms::klein_covering;

fn real(x: f64) -> Cx {
    Cx::new(x, 0.0)
}

/// Values of a dihedral solution on an even grid of its series argument
/// in (0, 1). Returns interleaved pairs [w0, v0, w1, v1, …]; points where
/// the evaluation fails (degenerate front factors and the like) carry NaN.
#[wasm_bindgen]
pub fn solution_curve(k: u32, l: u32, a: f64, solution: &str, points: usize) -> Vec<f64> {
    let p = DihedralParams::real(k, l, a);
    let n = points.clamp(2, 4000);
    let mut out = Vec::with_capacity(2 * n);
    for i in 0..n {
        let w = (i as f64 + 0.5) / n as f64;
        let value = match solution {
            "at0-even" => hpg_at0(&p, real(w), Parity::Even),
            "at0-odd" => hpg_at0(&p, real(w), Parity::Odd),
            "at1" => hpg_at1(&p, real(1.0 - w), At1Kind::Principal),
            "at1-sec" => hpg_at1(&p, real(1.0 - w), At1Kind::Secondary),
            "inf-1" => hpg_at_inf(&p, real(1.0 / w), InfKind::First),
            "inf-2" => hpg_at_inf(&p, real(1.0 / w), InfKind::Second),
            _ => Err(dihedral_hpg::Error::Domain(format!(
                "unknown solution kind {solution:?}"
            ))),
        };
        out.push(w);
        out.push(value.map(|v| v.value.re).unwrap_or(f64::NAN));
    }
    out
}

fn rat_pair(r: &Rat) -> serde_json::Value {
    serde_json::json!([r.numer().to_string(), r.denom().to_string()])
}

fn poly_json(p: &dihedral_hpg::poly::RatPoly) -> serde_json::Value {
    serde_json::Value::Array(p.coeffs().iter().map(rat_pair).collect())
}

/// The covering for exponent differences (k+1/2, l+1/2, n/m) as JSON:
/// exact coefficient lists for Θ₁, Θ₂, Ψ, the product constant, and the
/// covering degree.
#[wasm_bindgen]
pub fn klein_covering_json(k: u32, l: u32, n: u32, m: u32) -> Result<String, JsValue> {
    covering_json_impl(k, l, n, m).map_err(|e| JsValue::from_str(&e))
}

fn covering_json_impl(k: u32, l: u32, n: u32, m: u32) -> Result<String, String> {
    let cov = klein_covering(k, l, n, m).map_err(|e| e.to_string())?;
    let doc = serde_json::json!({
        "k": cov.k,
        "l": cov.l,
        "n": cov.n,
        "m": cov.m,
        "theta1": poly_json(&cov.theta1),
        "theta2": poly_json(&cov.theta2),
        "psi": poly_json(&cov.psi),
        "c": rat_pair(&cov.c_const),
        "degree": cov.degree,
    });
    Ok(doc.to_string())
}

/// The rational map Φ(x) = x^{2k+1} Θ₂²/Θ₁² of a covering sampled on
/// (0, 1), interleaved [x0, Φ(x0), …].
#[wasm_bindgen]
pub fn phi_curve(k: u32, l: u32, n: u32, m: u32, points: usize) -> Result<Vec<f64>, JsValue> {
    phi_curve_impl(k, l, n, m, points).map_err(|e| JsValue::from_str(&e))
}

fn phi_curve_impl(k: u32, l: u32, n: u32, m: u32, points: usize) -> Result<Vec<f64>, String> {
    let cov = klein_covering(k, l, n, m).map_err(|e| e.to_string())?;
    let np = points.clamp(2, 4000);
    let mut out = Vec::with_capacity(2 * np);
    for i in 0..np {
        let x = (i as f64 + 0.5) / np as f64;
        out.push(x);
        out.push(cov.phi(real(x)).re);
    }
    Ok(out)
}

/// Degeneracy verdicts for a = −m over the (k, ℓ) grid, as JSON rows of
/// "log" / "cyclic" strings.
#[wasm_bindgen]
pub fn classify_grid_json(m: u32, k_max: u32, l_max: u32) -> String {
    let rows: Vec<Vec<&str>> = (0..=k_max.min(12))
        .map(|k| {
            (0..=l_max.min(12))
                .map(|l| match classify_integer_a(k, l, m) {
                    DegeneracyVerdict::Logarithmic => "log",
                    DegeneracyVerdict::CyclicOrder2 => "cyclic",
                    DegeneracyVerdict::NonDegenerate => "none",
                })
                .collect()
        })
        .collect();
    serde_json::json!({ "m": m, "rows": rows }).to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn curves_have_expected_shape() {
        let c = solution_curve(0, 0, 2.0, "at0-even", 10);
        assert_eq!(c.len(), 20);
        // monotone grid, finite values for a generic parameter
        assert!(c[0] < c[2]);
        assert!(c.iter().skip(1).step_by(2).all(|v| v.is_finite()));
        let bad = solution_curve(0, 0, 2.0, "bogus", 4);
        assert!(bad[1].is_nan());
    }

    #[test]
    fn covering_json_parses() {
        let s = covering_json_impl(1, 0, 1, 2).unwrap();
        let doc: serde_json::Value = serde_json::from_str(&s).unwrap();
        assert_eq!(doc["degree"], 3);
        assert_eq!(doc["theta2"], serde_json::json!([["1", "4"]]));
        assert!(covering_json_impl(1, 1, 2, 2).is_err());
    }

    #[test]
    fn phi_passes_through_the_corners() {
        let c = phi_curve_impl(1, 0, 1, 2, 100).unwrap();
        // Φ(0) = 0 and Φ stays in (0, 1) on the interval for a covering
        assert!(c[1].abs() < 0.05);
        assert!(c.iter().skip(1).step_by(2).all(|v| (0.0..=1.0).contains(v)));
    }

    #[test]
    fn classify_grid_matches_library() {
        let s = classify_grid_json(3, 2, 2);
        let doc: serde_json::Value = serde_json::from_str(&s).unwrap();
        assert_eq!(doc["rows"][0][2], "log"); // k=0, l=2, m=3
        assert_eq!(doc["rows"][1][1], "cyclic"); // k=1, l=1, m=3
    }
}
