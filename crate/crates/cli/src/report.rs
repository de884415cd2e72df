//! JSON report of the canonical line-bramble order for a spec.

use linetw_core::bramble::min_canonical_hitting_set;
use linetw_core::formulas::{bramble_lower_bound, h_size_kn, hitting_set_upper_bound};
use linetw_core::MultipartiteSpec;
use serde::{Deserialize, Serialize};

use crate::CliError;

/// Vertices in `v` and `witness_parts` are 1-indexed. The formula fields
/// bound `min_order` in closed form; `null` where no bound applies.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BrambleReport {
    pub n: usize,
    pub k: usize,
    pub parts: Vec<usize>,
    pub v: usize,
    pub min_order: usize,
    pub witness_parts: Vec<Vec<usize>>,
    pub formula_lower: Option<u64>,
    pub formula_upper: Option<u64>,
}

/// Runs the exhaustive search for `v` (0-indexed; defaults to the first
/// vertex of a largest class).
pub fn bramble_report(spec: &MultipartiteSpec, v: Option<usize>, budget: usize) -> Result<BrambleReport, CliError> {
    let v = v.unwrap_or_else(|| spec.default_vertex());
    let min = min_canonical_hitting_set(spec, v, budget)?;
    let (formula_lower, formula_upper) = if spec.is_complete() {
        let h = h_size_kn(spec.n() as u64)?.value;
        (Some(h), Some(h))
    } else if spec.k() < 2 {
        (Some(0), Some(0))
    } else if spec.is_star() {
        (bramble_lower_bound(spec).ok(), None)
    } else {
        (bramble_lower_bound(spec).ok(), hitting_set_upper_bound(spec).ok())
    };
    Ok(BrambleReport {
        n: spec.n(),
        k: spec.k(),
        parts: spec.parts().to_vec(),
        v: v + 1,
        min_order: min.size,
        witness_parts: min
            .parts()
            .into_iter()
            .map(|part| part.into_iter().map(|x| x + 1).collect())
            .collect(),
        formula_lower,
        formula_upper,
    })
}
