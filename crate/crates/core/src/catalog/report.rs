//! CSV and JSON serialization of sweep results.

use std::io::Write;
use std::path::Path;

use super::{ResidualReport, SweepSummary};
use crate::Error;

/// CSV with the fixed column set
/// `id,params,z,lhs_re,lhs_im,rhs_re,rhs_im,rel_residual,pass`.
/// Params strings use `;` separators, so no quoting is required.
pub fn reports_to_csv(reports: &[ResidualReport]) -> String {
    let mut out = String::from("id,params,z,lhs_re,lhs_im,rhs_re,rhs_im,rel_residual,pass\n");
    for r in reports {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{}\n",
            r.id, r.params, r.z, r.lhs_re, r.lhs_im, r.rhs_re, r.rhs_im, r.rel_residual, r.pass
        ));
    }
    out
}

/// JSON summary document: seed, totals, and the per-identity aggregates.
pub fn summaries_to_json(seed: u64, summaries: &[SweepSummary]) -> String {
    let failures: usize = summaries.iter().map(|s| s.failures).sum();
    let samples: usize = summaries.iter().map(|s| s.samples).sum();
    let doc = serde_json::json!({
        "seed": seed,
        "identities": summaries.len(),
        "samples": samples,
        "failures": failures,
        "entries": summaries,
    });
    serde_json::to_string_pretty(&doc).expect("summary serialization")
}

/// Write `report.csv` and `summary.json` into a directory, creating it if
/// needed. Returns the two paths.
pub fn write_reports(
    dir: &Path,
    seed: u64,
    reports: &[ResidualReport],
    summaries: &[SweepSummary],
) -> Result<(std::path::PathBuf, std::path::PathBuf), Error> {
    std::fs::create_dir_all(dir)
        .map_err(|e| Error::Domain(format!("cannot create {}: {e}", dir.display())))?;
    let csv_path = dir.join("report.csv");
    let json_path = dir.join("summary.json");
    let mut csv = std::fs::File::create(&csv_path)
        .map_err(|e| Error::Domain(format!("cannot create {}: {e}", csv_path.display())))?;
    csv.write_all(reports_to_csv(reports).as_bytes())
        .map_err(|e| Error::Domain(format!("write failed: {e}")))?;
    let mut json = std::fs::File::create(&json_path)
        .map_err(|e| Error::Domain(format!("cannot create {}: {e}", json_path.display())))?;
    json.write_all(summaries_to_json(seed, summaries).as_bytes())
        .map_err(|e| Error::Domain(format!("write failed: {e}")))?;
    Ok((csv_path, json_path))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_and_json_round_trip() {
        let reports = vec![ResidualReport {
            id: "clausen".into(),
            params: "k=0;l=0;a=0.5".into(),
            z: 0.25,
            lhs_re: 1.25,
            lhs_im: 0.0,
            rhs_re: 1.25,
            rhs_im: 0.0,
            abs_residual: 0.0,
            rel_residual: 0.0,
            pass: true,
        }];
        let csv = reports_to_csv(&reports);
        assert!(csv.starts_with("id,params,z"));
        assert_eq!(csv.lines().count(), 2);
        let field_count = csv.lines().nth(1).unwrap().split(',').count();
        assert_eq!(field_count, 9);
        let summaries = vec![SweepSummary {
            id: "clausen".into(),
            exact: false,
            tolerance: 1e-9,
            samples: 1,
            failures: 0,
            max_rel_residual: 0.0,
            worst_params: "k=0;l=0;a=0.5".into(),
        }];
        let json = summaries_to_json(7, &summaries);
        let parsed: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed["seed"], 7);
        assert_eq!(parsed["failures"], 0);
        assert_eq!(parsed["entries"][0]["id"], "clausen");
    }
}
