//! The consistency sweep behind `linetw verify`: closed form, construction
//! width, oracle treewidth and pathwidth, and bramble order for one spec.

use std::fmt::Write;

use linetw_core::bramble::{min_canonical_hitting_set, HITTING_SET_BUDGET};
use linetw_core::constructions::{construct, OrderingFlavour};
use linetw_core::decomp::validate_path;
use linetw_core::formulas::{bounds_line_multipartite, tw_line_kn, tw_line_regular};
use linetw_core::oracle::{exact_pathwidth_within, exact_treewidth_within, ORACLE_BUDGET};
use linetw_core::{complete_multipartite, line_graph, Error, MultipartiteSpec};
use serde::Serialize;

use crate::spec::format_spec;
use crate::CliError;

#[derive(Debug, Clone, Copy)]
pub struct Budgets {
    pub oracle: usize,
    pub hitting_set: usize,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            oracle: ORACLE_BUDGET,
            hitting_set: HITTING_SET_BUDGET,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub ok: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Sweep {
    pub spec: Vec<usize>,
    pub line_graph_vertices: usize,
    /// Exact closed form, for complete and regular specs.
    pub formula: Option<u64>,
    pub formula_case: Option<String>,
    pub bound_lower: Option<u64>,
    pub bound_upper: Option<u64>,
    pub flavour: String,
    pub construction_width: usize,
    pub construction_valid: bool,
    pub oracle_tw: Option<usize>,
    pub oracle_pw: Option<usize>,
    /// Canonical line-bramble order.
    pub bramble_order: Option<usize>,
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
}

impl Sweep {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    pub fn render(&self) -> String {
        let show = |x: Option<usize>| x.map_or_else(|| "skipped".to_string(), |v| v.to_string());
        let mut out = String::new();
        writeln!(
            out,
            "spec {}",
            self.spec.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
        )
        .unwrap();
        writeln!(out, "line graph vertices {}", self.line_graph_vertices).unwrap();
        match (self.formula, &self.formula_case) {
            (Some(f), Some(case)) => writeln!(out, "formula {f} ({case})").unwrap(),
            _ => writeln!(out, "formula none").unwrap(),
        }
        if let (Some(lo), Some(hi)) = (self.bound_lower, self.bound_upper) {
            writeln!(out, "bounds {lo}..{hi}").unwrap();
        }
        writeln!(
            out,
            "construction {} ({}, {})",
            self.construction_width,
            self.flavour,
            if self.construction_valid { "valid" } else { "INVALID" }
        )
        .unwrap();
        writeln!(out, "oracle tw {}", show(self.oracle_tw)).unwrap();
        writeln!(out, "oracle pw {}", show(self.oracle_pw)).unwrap();
        writeln!(
            out,
            "bramble order - 1 {}",
            show(self.bramble_order.map(|h| h.saturating_sub(1)))
        )
        .unwrap();
        for note in &self.notes {
            writeln!(out, "note: {note}").unwrap();
        }
        for c in &self.checks {
            writeln!(out, "{} {}", if c.ok { "ok  " } else { "FAIL" }, c.name).unwrap();
        }
        writeln!(out, "result {}", if self.passed() { "ok" } else { "mismatch" }).unwrap();
        out
    }
}

fn within_budget<T>(result: Result<T, Error>, what: &str, notes: &mut Vec<String>) -> Result<Option<T>, CliError> {
    match result {
        Ok(x) => Ok(Some(x)),
        Err(Error::BudgetExceeded { size, budget }) => {
            notes.push(format!("{what} skipped: {size} vertices exceed budget {budget}"));
            Ok(None)
        }
        Err(e) => Err(e.into()),
    }
}

/// Natural flavour: blue for regular specs, red otherwise.
pub fn default_flavour(spec: &MultipartiteSpec) -> OrderingFlavour {
    if spec.is_regular() {
        OrderingFlavour::Blue
    } else {
        OrderingFlavour::Red
    }
}

pub fn sweep(spec: &MultipartiteSpec, flavour: Option<OrderingFlavour>, budgets: Budgets) -> Result<Sweep, CliError> {
    if spec.k() < 2 && !spec.is_complete() {
        return Err(CliError::Usage(format!(
            "spec {} has one colour class; its line graph is empty",
            format_spec(spec)
        )));
    }
    let flavour = flavour.unwrap_or_else(|| default_flavour(spec));
    let g = complete_multipartite(spec);
    let (lg, _) = line_graph(&g);
    let mut notes = Vec::new();

    let exact = if spec.is_complete() {
        tw_line_kn(spec.n() as u64).ok()
    } else if let Some(c) = spec.common_part_size() {
        tw_line_regular(c as u64, spec.k() as u64).ok()
    } else {
        None
    };
    let bounds = if spec.k() >= 2 {
        bounds_line_multipartite(spec).ok()
    } else {
        None
    };

    let con = construct(spec, flavour)?;
    let construction_valid = validate_path(&lg, &con.decomposition)?.is_valid();
    let construction_width = con.decomposition.width()?.value;
    let oracle_tw = within_budget(
        exact_treewidth_within(&lg, budgets.oracle),
        "treewidth oracle",
        &mut notes,
    )?
    .map(|r| r.value);
    let oracle_pw = within_budget(
        exact_pathwidth_within(&lg, budgets.oracle),
        "pathwidth oracle",
        &mut notes,
    )?
    .map(|r| r.value);
    let bramble_order = if spec.n() >= 3 {
        within_budget(
            min_canonical_hitting_set(spec, spec.default_vertex(), budgets.hitting_set),
            "hitting-set search",
            &mut notes,
        )?
        .map(|m| m.size)
    } else {
        notes.push("bramble order skipped: fewer than three vertices".to_string());
        None
    };

    let mut checks = Vec::new();
    let mut check = |name: String, ok: bool| checks.push(Check { name, ok });
    check("construction validates".into(), construction_valid);
    if let Some(f) = exact {
        let f = f.value as usize;
        check(
            format!("construction width = formula ({construction_width} vs {f})"),
            construction_width == f,
        );
        if let Some(tw) = oracle_tw {
            check(format!("oracle tw = formula ({tw} vs {f})"), tw == f);
        }
        if let Some(pw) = oracle_pw {
            check(format!("oracle pw = formula ({pw} vs {f})"), pw == f);
        }
        if let Some(h) = bramble_order {
            check(format!("bramble order - 1 = formula ({} vs {f})", h - 1), h - 1 == f);
        }
    } else {
        if let Some(tw) = oracle_tw {
            check(
                format!("oracle tw <= construction width ({tw} vs {construction_width})"),
                tw <= construction_width,
            );
            if let Some(h) = bramble_order {
                check(
                    format!("bramble order - 1 <= oracle tw ({} vs {tw})", h - 1),
                    h - 1 <= tw,
                );
            }
        }
        if let Some(pw) = oracle_pw {
            check(
                format!("oracle pw <= construction width ({pw} vs {construction_width})"),
                pw <= construction_width,
            );
        }
    }
    if let Some(b) = bounds {
        if let Some(tw) = oracle_tw {
            check(
                format!("bound lower <= oracle tw ({} vs {tw})", b.lower),
                b.lower as usize <= tw,
            );
        }
        if let Some(pw) = oracle_pw {
            check(
                format!("oracle pw <= bound upper ({pw} vs {})", b.upper),
                pw as u64 <= b.upper,
            );
        }
        if let (Some(tw), Some(pw)) = (oracle_tw, oracle_pw) {
            check(format!("oracle tw <= oracle pw ({tw} vs {pw})"), tw <= pw);
        }
    }

    Ok(Sweep {
        spec: spec.parts().to_vec(),
        line_graph_vertices: lg.vertex_count(),
        formula: exact.map(|f| f.value),
        formula_case: exact.map(|f| f.case.to_string()),
        bound_lower: bounds.map(|b| b.lower),
        bound_upper: bounds.map(|b| b.upper),
        flavour: match flavour {
            OrderingFlavour::Red => "red",
            OrderingFlavour::Blue => "blue",
        }
        .to_string(),
        construction_width,
        construction_valid,
        oracle_tw,
        oracle_pw,
        bramble_order,
        checks,
        notes,
    })
}

/// Sweeps every regular spec `K_{c,...,c}` (`k` classes) in the ranges.
pub fn regular_table(
    cs: std::ops::RangeInclusive<usize>,
    ks: std::ops::RangeInclusive<usize>,
    budgets: Budgets,
) -> Result<Vec<Sweep>, CliError> {
    let mut rows = Vec::new();
    for c in cs {
        for k in ks.clone() {
            rows.push(sweep(&MultipartiteSpec::regular(c, k)?, None, budgets)?);
        }
    }
    Ok(rows)
}

/// One aligned row per sweep: `c k n formula oracle bramble-1 width status`.
pub fn render_table(rows: &[Sweep]) -> String {
    let show = |x: Option<usize>| x.map_or_else(|| "-".to_string(), |v| v.to_string());
    let mut out = format!(
        "{:>3} {:>3} {:>4} {:>8} {:>7} {:>10} {:>6}  status\n",
        "c", "k", "n", "formula", "oracle", "bramble-1", "width"
    );
    for r in rows {
        writeln!(
            out,
            "{:>3} {:>3} {:>4} {:>8} {:>7} {:>10} {:>6}  {}",
            r.spec[0],
            r.spec.len(),
            r.spec.iter().sum::<usize>(),
            r.formula.map_or_else(|| "-".to_string(), |f| f.to_string()),
            show(r.oracle_tw),
            show(r.bramble_order.map(|h| h - 1)),
            r.construction_width,
            if r.passed() { "ok" } else { "MISMATCH" }
        )
        .unwrap();
    }
    out
}
