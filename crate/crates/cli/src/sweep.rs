//! `normality` sweeps: one row per family size, as JSON lines and CSV.

use std::path::Path;
use std::thread;

use graphstirling::family::FamilyKind;
use graphstirling::normality::{kahn_check, normality_report, ratio_string};
use graphstirling::{Caps, FamilySpec, KahnCheck, NormalityReport};
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::{Failure, NormalityArgs, Run, DISAGREE, INPUT};

pub const CSV_HEADER: [&str; 9] = ["n", "f", "chi", "g", "mean", "variance", "kolmogorov", "real_rooted", "ratio"];

struct Row {
    n: usize,
    report: NormalityReport,
    kahn: KahnCheck,
}

/// `x` with 10 significant digits, in plain notation where that stays short.
pub fn sig10(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let mag = x.abs().log10().floor() as i32;
    if (-5..15).contains(&mag) {
        format!("{:.*}", (9 - mag).max(0) as usize, x)
    } else {
        format!("{x:.9e}")
    }
}

impl Row {
    fn csv_record(&self) -> [String; 9] {
        let s = &self.report.stats;
        [
            self.n.to_string(),
            self.kahn.f.to_string(),
            self.kahn.chi.to_string(),
            ratio_string(&self.kahn.g),
            sig10(s.mean.to_f64().unwrap_or(f64::NAN)),
            sig10(s.variance.to_f64().unwrap_or(f64::NAN)),
            self.report.kolmogorov.map_or_else(|| "degenerate".to_string(), sig10),
            self.report.roots.verdict.as_str().to_string(),
            self.kahn.ratio.as_ref().map(ratio_string).unwrap_or_default(),
        ]
    }

    fn to_json(&self, family: &str) -> Value {
        json!({
            "family": family,
            "n": self.n,
            "report": self.report.to_json(),
            "kahn": self.kahn.to_json(),
        })
    }
}

fn row(spec: FamilySpec, caps: &Caps) -> Result<Row, Failure> {
    let seq = spec.stirling()?;
    let report = normality_report(seq.values(), caps).map_err(|e| Failure::new(DISAGREE, e.to_string()))?;
    let kahn = kahn_check(&spec.representative_word(), caps);
    Ok(Row { n: spec.n, report, kahn })
}

fn write_csv(path: &Path, rows: &[Row]) -> Run {
    let fail = |e: &dyn std::fmt::Display| Failure::new(INPUT, format!("{}: {e}", path.display()));
    let mut out = csv::Writer::from_path(path).map_err(|e| fail(&e))?;
    out.write_record(CSV_HEADER).map_err(|e| fail(&e))?;
    for r in rows {
        out.write_record(r.csv_record()).map_err(|e| fail(&e))?;
    }
    out.flush().map_err(|e| fail(&e))
}

pub fn cmd_normality(a: NormalityArgs, caps: &Caps) -> Run {
    let kind: FamilyKind = a.family.parse().map_err(|e: graphstirling::family::FamilyError| Failure::new(INPUT, e.to_string()))?;
    if a.family_opts.components.is_some() && kind != FamilyKind::Forest {
        return Err(Failure::new(INPUT, "--components only applies to forests"));
    }
    let mut specs = Vec::new();
    for &n in &a.sweep {
        let mut spec = FamilySpec::new(kind, n).with_seed(a.family_opts.seed);
        if let Some(c) = a.family_opts.components {
            spec = spec.with_components(c.resolve(n));
        }
        specs.push(spec.validated().map_err(|e| Failure::new(INPUT, format!("n = {n}: {e}")))?);
    }
    let mut rows = thread::scope(|scope| {
        let handles: Vec<_> = specs.iter().map(|&spec| scope.spawn(move || row(spec, caps))).collect();
        handles.into_iter().map(|h| h.join().expect("sweep worker panicked")).collect::<Result<Vec<_>, _>>()
    })?;
    rows.sort_by_key(|r| r.n);
    for r in &rows {
        if r.report.is_degenerate() {
            eprintln!("note: n = {} is degenerate (point mass)", r.n);
        }
        println!("{}", r.to_json(kind.as_str()));
    }
    if let Some(path) = &a.csv {
        write_csv(path, &rows)?;
    }
    if rows.iter().any(|r| r.report.roots.verdict == graphstirling::RootVerdict::Skipped) {
        eprintln!("note: real-rootedness skipped above the degree cap ({})", caps.sturm_degree);
    }
    Ok(())
}
