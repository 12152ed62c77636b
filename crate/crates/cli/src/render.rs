//! Text and CSV renderings of the artifacts.
//!
//! CSV uses "." decimals, "," separators, LF line endings and ASCII "+"/"-"
//! sign entries. Text tables are fixed-layout and deterministic.

use szwalk_core::report::{csv_line, fmt_f64};
use szwalk_core::{
    ExceptionalReport, GridReductionReport, HittingReport, MixingReport, SampleReport,
    SeparationReport, SignTable,
};

use crate::WalkArtifact;

fn sign_char(s: i8) -> char {
    if s > 0 {
        '+'
    } else {
        '-'
    }
}

/// Fixed-width sign table: one row per directed edge, one column per
/// operator stage.
pub fn sign_table_text(table: &SignTable) -> String {
    let label_w = table
        .edge_labels
        .iter()
        .map(String::len)
        .max()
        .unwrap_or(4)
        .max("Edge".len());
    let col_ws: Vec<usize> = table.stage_labels.iter().map(|s| s.len()).collect();

    let mut out = String::new();
    out.push_str(&format!("{:label_w$}", "Edge"));
    for (label, w) in table.stage_labels.iter().zip(&col_ws) {
        out.push_str(&format!("  {label:>w$}"));
    }
    out.push('\n');
    for (row_label, row) in table.edge_labels.iter().zip(&table.entries) {
        out.push_str(&format!("{row_label:label_w$}"));
        for (&s, w) in row.iter().zip(&col_ws) {
            out.push_str(&format!("  {:>w$}", sign_char(s)));
        }
        out.push('\n');
    }
    out
}

pub fn sign_table_csv(table: &SignTable) -> String {
    let mut out = csv_line(
        std::iter::once("edge".to_string()).chain(table.stage_labels.iter().cloned()),
    );
    for (label, row) in table.edge_labels.iter().zip(&table.entries) {
        out.push_str(&csv_line(
            std::iter::once(label.clone()).chain(row.iter().map(|&s| sign_char(s).to_string())),
        ));
    }
    out
}

/// JSON form of the sign table with "+"/"-" entries.
#[derive(Debug, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct SignTableJson {
    pub edges: Vec<String>,
    pub stages: Vec<String>,
    pub signs: Vec<Vec<String>>,
}

impl From<&SignTable> for SignTableJson {
    fn from(t: &SignTable) -> Self {
        Self {
            edges: t.edge_labels.clone(),
            stages: t.stage_labels.clone(),
            signs: t
                .entries
                .iter()
                .map(|row| row.iter().map(|&s| sign_char(s).to_string()).collect())
                .collect(),
        }
    }
}

fn exceptional_lines(r: &ExceptionalReport) -> String {
    format!(
        "n: {}\nmarked (1-based): {:?}\nsteps: {}\nmax |amplitude| deviation: {}\nmax self-loop amplitude: {}\nmax distribution deviation: {}\nexceptional: {}\n",
        r.n,
        r.marked,
        r.steps,
        fmt_f64(r.max_magnitude_deviation),
        fmt_f64(r.max_selfloop),
        fmt_f64(r.max_distribution_deviation),
        if r.verdict { "yes" } else { "no" }
    )
}

pub fn walk_text(a: &WalkArtifact) -> String {
    let mut out = exceptional_lines(&a.exceptional);
    if !a.trajectory.is_empty() {
        out.push_str(&format!("recorded stages: {}\n", a.trajectory.len()));
    }
    out
}

/// Amplitude matrix: one row per edge, one column per recorded stage.
pub fn walk_csv(a: &WalkArtifact) -> String {
    let mut out = csv_line(
        std::iter::once("edge".to_string()).chain(a.trajectory.iter().map(|t| t.stage.clone())),
    );
    for (i, edge) in a.edges.iter().enumerate() {
        out.push_str(&csv_line(std::iter::once(edge.clone()).chain(
            a.trajectory.iter().map(|t| fmt_f64(t.amplitudes[i])),
        )));
    }
    out
}

pub fn hitting_text(r: &HittingReport) -> String {
    format!(
        "exact hitting time: {} (= {})\nmonte carlo: {} ± {} ({} trials, seed {})\n",
        match &r.exact_value {
            szwalk_core::SolveValue::Exact(e) => e.to_string(),
            szwalk_core::SolveValue::Approx(v) => fmt_f64(*v),
        },
        fmt_f64(r.exact_value_float),
        fmt_f64(r.mc_estimate),
        fmt_f64(r.mc_stderr),
        r.trials,
        r.seed
    )
}

pub fn hitting_csv(r: &HittingReport) -> String {
    let mut out = csv_line(
        ["exact_value", "exact_value_float", "mc_estimate", "mc_stderr", "trials", "seed"]
            .map(String::from),
    );
    out.push_str(&csv_line([
        match &r.exact_value {
            szwalk_core::SolveValue::Exact(e) => e.to_string(),
            szwalk_core::SolveValue::Approx(v) => fmt_f64(*v),
        },
        fmt_f64(r.exact_value_float),
        fmt_f64(r.mc_estimate),
        fmt_f64(r.mc_stderr),
        r.trials.to_string(),
        r.seed.to_string(),
    ]));
    out
}

pub fn mixing_text(r: &MixingReport) -> String {
    format!(
        "cesaro mixing time to epsilon {}: {} steps (final tv distance {})\n",
        fmt_f64(r.epsilon),
        r.time_steps,
        fmt_f64(r.final_tv_distance)
    )
}

pub fn mixing_csv(r: &MixingReport) -> String {
    let mut out = csv_line(["epsilon", "time_steps", "final_tv_distance"].map(String::from));
    out.push_str(&csv_line([
        fmt_f64(r.epsilon),
        r.time_steps.to_string(),
        fmt_f64(r.final_tv_distance),
    ]));
    out
}

pub fn separation_text(rs: &[SeparationReport]) -> String {
    let mut out = String::from(
        "n k quantum_samples classical_ht ratio quantum_total_with_mixing classical_total_with_mixing\n",
    );
    for r in rs {
        out.push_str(&format!(
            "{} {} {} {} ({}) {} {} {}\n",
            r.n,
            r.k,
            fmt_f64(r.quantum_samples),
            r.classical_ht,
            fmt_f64(r.classical_ht_float),
            fmt_f64(r.ratio),
            fmt_f64(r.quantum_total_with_mixing),
            fmt_f64(r.classical_total_with_mixing),
        ));
    }
    out.push_str("(totals and quantum_samples are leading-order model values with unit constants)\n");
    out
}

pub fn separation_csv(rs: &[SeparationReport]) -> String {
    let mut out = csv_line(
        [
            "n",
            "k",
            "quantum_samples",
            "classical_ht",
            "classical_ht_float",
            "ratio",
            "quantum_total_with_mixing",
            "classical_total_with_mixing",
        ]
        .map(String::from),
    );
    for r in rs {
        out.push_str(&csv_line([
            r.n.to_string(),
            r.k.to_string(),
            fmt_f64(r.quantum_samples),
            r.classical_ht.to_string(),
            fmt_f64(r.classical_ht_float),
            fmt_f64(r.ratio),
            fmt_f64(r.quantum_total_with_mixing),
            fmt_f64(r.classical_total_with_mixing),
        ]));
    }
    out
}

pub fn grid_text(r: &GridReductionReport) -> String {
    format!(
        "side: {}\nsteps: {}\nmax symmetry deviation: {}\nmax self-loop amplitude: {}\nmax distribution deviation: {}\nmax class deviation: {}\nexpected samples for the diagonal: {}\nreduces to the marked cycle: {}\n",
        r.side,
        r.steps,
        fmt_f64(r.max_symmetry_deviation),
        fmt_f64(r.max_selfloop),
        fmt_f64(r.max_distribution_deviation),
        fmt_f64(r.max_class_deviation),
        fmt_f64(r.expected_samples),
        if r.verdict { "yes" } else { "no" }
    )
}

pub fn grid_csv(r: &GridReductionReport) -> String {
    let mut out = csv_line(
        [
            "side",
            "steps",
            "max_symmetry_deviation",
            "max_selfloop",
            "max_distribution_deviation",
            "max_class_deviation",
            "expected_samples",
            "verdict",
        ]
        .map(String::from),
    );
    out.push_str(&csv_line([
        r.side.to_string(),
        r.steps.to_string(),
        fmt_f64(r.max_symmetry_deviation),
        fmt_f64(r.max_selfloop),
        fmt_f64(r.max_distribution_deviation),
        fmt_f64(r.max_class_deviation),
        fmt_f64(r.expected_samples),
        r.verdict.to_string(),
    ]));
    out
}

pub fn sample_text(r: &SampleReport) -> String {
    format!(
        "guesses to find one of {} marked out of {}: {} ± {} ({} trials, seed {})\n",
        r.k,
        r.n,
        fmt_f64(r.mean),
        fmt_f64(r.stderr),
        r.trials,
        r.seed
    )
}

pub fn sample_csv(r: &SampleReport) -> String {
    let mut out = csv_line(["n", "k", "trials", "seed", "mean", "stderr"].map(String::from));
    out.push_str(&csv_line([
        r.n.to_string(),
        r.k.to_string(),
        r.trials.to_string(),
        r.seed.to_string(),
        fmt_f64(r.mean),
        fmt_f64(r.stderr),
    ]));
    out
}
