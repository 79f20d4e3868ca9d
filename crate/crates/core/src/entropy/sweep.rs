use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::{check_normalized, entropies, partitions, Bipartition, PartitionMode, EIG_CUTOFF, INTEGER_TOLERANCE};
use crate::error::Result;
use crate::polytope::Polytope;
use crate::scalar::Real;
use crate::state::StateVector;

pub const DEFAULT_BUDGET: usize = 200_000;

fn default_budget() -> usize {
    DEFAULT_BUDGET
}

/// One block size and the union of cut families to examine at it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanRow {
    pub m: usize,
    pub modes: Vec<PartitionMode>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepPlan {
    pub rows: Vec<PlanRow>,
    /// Cap on the number of cuts any single mode may produce.
    #[serde(default = "default_budget")]
    pub budget: usize,
}

impl SweepPlan {
    pub fn new(rows: Vec<PlanRow>) -> Self {
        Self {
            rows,
            budget: DEFAULT_BUDGET,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    pub eig_cutoff: f64,
    pub integer_tolerance: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            eig_cutoff: EIG_CUTOFF,
            integer_tolerance: INTEGER_TOLERANCE,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportRow {
    pub m: usize,
    /// Distinct entropies in bits, ascending. Values within the integer
    /// tolerance of an integer are snapped to it.
    pub values: Vec<f64>,
    /// First cut (1-based labels) attaining each value.
    pub witnesses: BTreeMap<String, Vec<usize>>,
    pub examined: usize,
    pub mode: String,
    pub seed: Option<u64>,
    /// Cuts whose entropy was not within tolerance of an integer.
    pub non_integer: usize,
}

impl ReportRow {
    pub fn integer_values(&self) -> Vec<i64> {
        self.values.iter().map(|v| v.round() as i64).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EntropyReport {
    pub state_id: String,
    pub rows: Vec<ReportRow>,
    pub tolerances: Tolerances,
    /// Per-mode partition cap the sweep ran under.
    pub budget: usize,
    /// Run-specific data (timestamps and the like) kept apart from the
    /// deterministic payload.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<serde_json::Value>,
}

pub fn value_key(v: f64) -> String {
    if v.fract() == 0.0 {
        format!("{}", v as i64)
    } else {
        format!("{v:.12}")
    }
}

impl EntropyReport {
    pub fn row(&self, m: usize) -> Option<&ReportRow> {
        self.rows.iter().find(|r| r.m == m)
    }

    /// The report without its metadata, as pretty JSON.
    pub fn deterministic_json(&self) -> String {
        let mut copy = self.clone();
        copy.metadata = None;
        serde_json::to_string_pretty(&copy).expect("report serializes")
    }

    /// Block sizes as columns (largest first), value sets as cells.
    pub fn to_csv(&self) -> String {
        let mut rows: Vec<&ReportRow> = self.rows.iter().collect();
        rows.sort_by(|a, b| b.m.cmp(&a.m));
        let mut out = String::from("|A|");
        for r in &rows {
            write!(out, ",{}", r.m).unwrap();
        }
        write!(out, "\nS_A({})", self.state_id).unwrap();
        for r in &rows {
            let cell: Vec<String> = r.values.iter().map(|&v| value_key(v)).collect();
            write!(out, ",\"{}\"", cell.join(",")).unwrap();
        }
        out.push('\n');
        out
    }
}

/// Runs every plan row over `sv` and collects the distinct entropy values.
/// Results are assembled in cut order, so parallel and serial runs agree.
pub fn entropy_sweep<F: Real>(
    sv: &StateVector<F>,
    state_id: &str,
    plan: &SweepPlan,
    polytope: Option<&Polytope>,
) -> Result<EntropyReport> {
    check_normalized(sv)?;
    let tolerances = Tolerances::default();
    let mut rows = Vec::with_capacity(plan.rows.len());
    for row in &plan.rows {
        let mut cuts: Vec<Bipartition> = Vec::new();
        let mut seen = std::collections::BTreeSet::new();
        for mode in &row.modes {
            for cut in partitions(sv.n(), row.m, mode, polytope, plan.budget)? {
                if seen.insert(cut.clone()) {
                    cuts.push(cut);
                }
            }
        }
        let values = entropies(sv, &cuts)?;
        rows.push(summarize(row, &cuts, &values, &tolerances));
    }
    Ok(EntropyReport {
        state_id: state_id.to_string(),
        rows,
        tolerances,
        budget: plan.budget,
        metadata: None,
    })
}

fn summarize<F: Real>(row: &PlanRow, cuts: &[Bipartition], values: &[F], tol: &Tolerances) -> ReportRow {
    let mut distinct: Vec<f64> = Vec::new();
    let mut witnesses = BTreeMap::new();
    let mut non_integer = 0;
    for (cut, v) in cuts.iter().zip(values) {
        let v = v.to_f64().unwrap();
        let snapped = if (v - v.round()).abs() <= tol.integer_tolerance {
            v.round() + 0.0
        } else {
            non_integer += 1;
            v
        };
        if !distinct.iter().any(|&x| (x - snapped).abs() <= tol.integer_tolerance) {
            distinct.push(snapped);
            witnesses.insert(value_key(snapped), cut.labels());
        }
    }
    distinct.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mode = row
        .modes
        .iter()
        .map(|m| match m {
            PartitionMode::Exhaustive => "exhaustive".to_string(),
            PartitionMode::Sample { count, .. } => format!("sample({count})"),
            PartitionMode::Structured { solid } => format!("structured({solid})"),
        })
        .collect::<Vec<_>>()
        .join("+");
    let seed = row.modes.iter().find_map(|m| match m {
        PartitionMode::Sample { seed, .. } => Some(*seed),
        _ => None,
    });
    ReportRow {
        m: row.m,
        values: distinct,
        witnesses,
        examined: cuts.len(),
        mode,
        seed,
        non_integer,
    }
}
