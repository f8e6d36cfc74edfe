//! Machine-readable report types and their JSON/CSV/text renderings.

use std::collections::BTreeMap;

use serde::Serialize;

/// Exact width, or "unreached" when the product BFS was cut off.
#[derive(Clone, Debug, Serialize)]
#[serde(untagged)]
pub enum WidthValue {
    Exact(u32),
    Unreached(&'static str),
}

impl WidthValue {
    pub fn exact(&self) -> Option<u32> {
        match self {
            WidthValue::Exact(w) => Some(*w),
            WidthValue::Unreached(_) => None,
        }
    }
}

impl std::fmt::Display for WidthValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            WidthValue::Exact(w) => write!(f, "{w}"),
            WidthValue::Unreached(s) => write!(f, "{s}"),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Bounds {
    pub involution: Option<u32>,
    pub coset: Option<u32>,
    pub covering2x: Option<u32>,
}

/// One full analysis of a (group, generating set) configuration. Field
/// order is the stable JSON schema; every value except `timings_ms` is
/// deterministic for a fixed configuration.
#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub group: String,
    pub order: usize,
    pub genset: String,
    pub palindrome_count: usize,
    pub width: WidthValue,
    pub layers: Vec<u64>,
    pub n_subgroup_order: usize,
    pub bounds: Bounds,
    pub verdicts: BTreeMap<String, String>,
    pub timings_ms: BTreeMap<String, u64>,
}

fn join_layers(layers: &[u64]) -> String {
    layers
        .iter()
        .map(|n| n.to_string())
        .collect::<Vec<_>>()
        .join("|")
}

fn opt_str<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(|x| x.to_string()).unwrap_or_default()
}

/// Fixed CSV column order shared by `width` and `survey`.
pub const CSV_HEADER: [&str; 13] = [
    "group",
    "order",
    "genset",
    "palindrome_count",
    "width",
    "layers",
    "n_subgroup_order",
    "bound_involution",
    "bound_coset",
    "bound_covering2x",
    "n_over_4",
    "status",
    "error",
];

/// One survey row: a report, or an isolated per-row failure.
#[derive(Clone, Debug, Serialize)]
pub struct SurveyRow {
    pub group: String,
    pub genset_mode: String,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n_over_4: Option<u32>,
    #[serde(flatten)]
    pub report: Option<AnalysisReport>,
}

pub fn csv_record(row: &SurveyRow) -> Vec<String> {
    match &row.report {
        Some(r) => vec![
            r.group.clone(),
            r.order.to_string(),
            r.genset.clone(),
            r.palindrome_count.to_string(),
            r.width.to_string(),
            join_layers(&r.layers),
            r.n_subgroup_order.to_string(),
            opt_str(&r.bounds.involution),
            opt_str(&r.bounds.coset),
            opt_str(&r.bounds.covering2x),
            opt_str(&row.n_over_4),
            row.status.clone(),
            opt_str(&row.error),
        ],
        None => vec![
            row.group.clone(),
            String::new(),
            row.genset_mode.clone(),
            String::new(),
            String::new(),
            String::new(),
            String::new(),
            String::new(),
            String::new(),
            String::new(),
            opt_str(&row.n_over_4),
            row.status.clone(),
            opt_str(&row.error),
        ],
    }
}

pub fn render_text(report: &AnalysisReport, witness_line: Option<&str>) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "group:            {} (order {})\n",
        report.group, report.order
    ));
    out.push_str(&format!("generating set:   {}\n", report.genset));
    out.push_str(&format!("palindromes:      {}\n", report.palindrome_count));
    out.push_str(&format!("width:            {}\n", report.width));
    out.push_str(&format!(
        "layers:           {}\n",
        join_layers(&report.layers)
    ));
    out.push_str(&format!("n-subgroup order: {}\n", report.n_subgroup_order));
    let b = &report.bounds;
    let mut bounds = Vec::new();
    if let Some(v) = b.involution {
        bounds.push(format!("involution >= {v}"));
    }
    if let Some(v) = b.coset {
        bounds.push(format!("coset <= {v}"));
    }
    if let Some(v) = b.covering2x {
        bounds.push(format!("2x-covering <= {v}"));
    }
    out.push_str(&format!(
        "bounds:           {}\n",
        if bounds.is_empty() {
            "none".to_string()
        } else {
            bounds.join(", ")
        }
    ));
    if let Some(line) = witness_line {
        out.push_str(&format!("witness:          {line}\n"));
    }
    for (name, verdict) in &report.verdicts {
        out.push_str(&format!("verdict {name}: {verdict}\n"));
    }
    let timings = report
        .timings_ms
        .iter()
        .map(|(k, v)| format!("{k} {v}ms"))
        .collect::<Vec<_>>()
        .join(", ");
    out.push_str(&format!("timings:          {timings}\n"));
    out
}
