use qubit_plt::{AgreementStats, CriteriaReport, RealMatrix4, SweepRow};
use serde_json::{json, Value};

fn rows(m: &RealMatrix4<f64>) -> Vec<Vec<f64>> {
    (0..4).map(|i| (0..4).map(|j| m[(i, j)]).collect()).collect()
}

fn print_matrix(name: &str, m: &RealMatrix4<f64>) {
    println!("{name} =");
    for row in rows(m) {
        let cells: Vec<String> = row.iter().map(|x| format!("{x:>14.10}")).collect();
        println!("  [{}]", cells.join(" "));
    }
}

fn list(xs: &[f64]) -> String {
    let cells: Vec<String> = xs.iter().map(|x| format!("{x:.12e}")).collect();
    format!("[{}]", cells.join(", "))
}

pub fn analysis_text(label: Option<&str>, r: &CriteriaReport<f64>) {
    if let Some(label) = label {
        println!("state: {label}");
    }
    print_matrix("A", r.plt.coefficients.matrix());
    print_matrix("B", r.plt.square.matrix());
    let sp = &r.plt.spectrum;
    println!("lambda = {}", list(&sp.lambda));
    println!("mu     = {}", list(&sp.mu));
    println!("T      = {:.12e}", sp.t);
    println!("T/mu0  = {:.12e}", sp.t_normalized());
    println!();
    println!("{:<12} {:<13} statistic", "criterion", "verdict");
    println!("{:<12} {:<13} T = {:.6e}", "PLT", r.plt.verdict.class, sp.t);
    println!("{:<12} {:<13} min eig = {:.6e}", "PPT", r.ppt.verdict.class, r.ppt.min_eigenvalue);
    println!("{:<12} {:<13} trace norm = {:.12}", "realignment", r.ccn.verdict.class, r.ccn.norm);
    println!("{:<12} {:<13} C = {:.6e}", "concurrence", r.concurrence.verdict.class, r.concurrence.value);
}

pub fn analysis_json(label: Option<&str>, r: &CriteriaReport<f64>) -> Value {
    let sp = &r.plt.spectrum;
    json!({
        "label": label,
        "A": rows(r.plt.coefficients.matrix()),
        "B": rows(r.plt.square.matrix()),
        "lambda": sp.lambda,
        "mu": sp.mu,
        "T": sp.t,
        "T_normalized": sp.t_normalized(),
        "plt": { "verdict": r.plt.verdict.class.token(), "T": sp.t },
        "ppt": { "verdict": r.ppt.verdict.class.token(), "min_eig": r.ppt.min_eigenvalue },
        "ccn": { "verdict": r.ccn.verdict.class.token(), "norm": r.ccn.norm },
        "concurrence": { "verdict": r.concurrence.verdict.class.token(), "value": r.concurrence.value },
    })
}

pub const CSV_HEADER: [&str; 8] = [
    "param",
    "T",
    "T_normalized",
    "plt_verdict",
    "ppt_min_eig",
    "ppt_verdict",
    "ccn_norm",
    "concurrence",
];

/// 17 significant digits, enough to recover every f64 exactly.
fn num(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn csv_record(row: &SweepRow<f64>) -> [String; 8] {
    [
        num(row.param),
        num(row.t),
        num(row.t_normalized),
        row.plt_verdict.token().to_string(),
        num(row.ppt_min_eig),
        row.ppt_verdict.token().to_string(),
        num(row.ccn_norm),
        num(row.concurrence),
    ]
}

pub fn stats_text(s: &AgreementStats<f64>) {
    let lines: [(&str, String); 14] = [
        ("ensemble", s.ensemble.to_string()),
        ("seed", s.seed.0.to_string()),
        ("total", s.total.to_string()),
        ("agree", s.agree.to_string()),
        ("disagree", s.disagree.to_string()),
        ("boundary_excluded", s.boundary_excluded.to_string()),
        ("positivity_violations", s.positivity_violations.to_string()),
        ("numerical_failures", s.numerical_failures.to_string()),
        ("plt_entangled", s.plt_entangled.to_string()),
        ("ppt_entangled", s.ppt_entangled.to_string()),
        ("concurrence_mismatches", s.concurrence_mismatches.to_string()),
        ("ccn_unsound", s.ccn_unsound.to_string()),
        ("min_re_ratio", format!("{:.3e}", s.min_re_ratio)),
        ("max_abs_imag_ratio", format!("{:.3e}", s.max_abs_imag_ratio)),
    ];
    for (k, v) in lines {
        println!("{k:<24} {v}");
    }
    println!("{:<24} {:.3e}", "min_t_ratio", s.min_t_ratio);
    for d in s.disagreements.iter().take(20) {
        println!(
            "  disagreement #{} seed {}: plt {} ppt {}{}",
            d.index,
            d.seed.0,
            d.plt.map_or("-", |c| c.token()),
            d.ppt.map_or("-", |c| c.token()),
            d.error.as_deref().map(|e| format!(" ({e})")).unwrap_or_default()
        );
    }
}

fn finite_or_null(x: f64) -> Value {
    if x.is_finite() {
        json!(x)
    } else {
        Value::Null
    }
}

pub fn stats_json(s: &AgreementStats<f64>) -> Value {
    let disagreements: Vec<Value> = s
        .disagreements
        .iter()
        .map(|d| {
            json!({
                "index": d.index,
                "seed": d.seed.0,
                "plt": d.plt.map(|c| c.token()),
                "ppt": d.ppt.map(|c| c.token()),
                "error": d.error,
            })
        })
        .collect();
    json!({
        "ensemble": s.ensemble.name(),
        "seed": s.seed.0,
        "total": s.total,
        "agree": s.agree,
        "disagree": s.disagree,
        "boundary_excluded": s.boundary_excluded,
        "positivity_violations": s.positivity_violations,
        "numerical_failures": s.numerical_failures,
        "plt_entangled": s.plt_entangled,
        "ppt_entangled": s.ppt_entangled,
        "concurrence_mismatches": s.concurrence_mismatches,
        "ccn_unsound": s.ccn_unsound,
        "min_re_ratio": finite_or_null(s.min_re_ratio),
        "max_abs_imag_ratio": finite_or_null(s.max_abs_imag_ratio),
        "min_t_ratio": finite_or_null(s.min_t_ratio),
        "claims_hold": s.claims_hold(),
        "disagreements": disagreements,
    })
}
