//! Closed-form widths and hitting-set sizes for line graphs of complete and
//! complete multipartite graphs.
//!
//! Expressions with quarter coefficients are evaluated as `4·value` in
//! signed integers; the integral ones are divided exactly, the bounds are
//! rounded toward the safe side.

use core::fmt;

use crate::graph::MultipartiteSpec;
use crate::{Error, Result};

/// Which parity case of a formula produced the value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Case {
    NOdd,
    NEven,
    COdd,
    CEven,
    KOddCOdd,
    KEvenCOdd,
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Case::NOdd => "n odd",
            Case::NEven => "n even",
            Case::COdd => "ck odd",
            Case::CEven => "c even",
            Case::KOddCOdd => "k odd c odd",
            Case::KEvenCOdd => "k even c odd",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FormulaValue {
    pub value: u64,
    pub case: Case,
}

fn exact_quarter(quarters: i128) -> u64 {
    assert!(
        quarters >= 0 && quarters % 4 == 0,
        "closed form is a non-negative integer on its domain"
    );
    (quarters / 4) as u64
}

/// Treewidth (= pathwidth) of `L(K_n)`.
pub fn tw_line_kn(n: u64) -> Result<FormulaValue> {
    if n < 2 {
        return Err(Error::Domain("n must be at least 2"));
    }
    Ok(if n % 2 == 1 {
        let h = (n - 1) / 2;
        FormulaValue {
            value: h * h + n - 2,
            case: Case::NOdd,
        }
    } else {
        FormulaValue {
            value: (n - 2) / 2 * (n / 2) + n - 2,
            case: Case::NEven,
        }
    })
}

/// Minimum hitting set of the canonical line-bramble of `K_n`.
pub fn h_size_kn(n: u64) -> Result<FormulaValue> {
    if n < 3 {
        return Err(Error::Domain("n must be at least 3"));
    }
    let tw = tw_line_kn(n)?;
    Ok(FormulaValue {
        value: tw.value + 1,
        case: tw.case,
    })
}

/// `4·(c²k²/4 − c²k/4 + ck/2 − c/2)`.
fn regular_base(c: i128, k: i128) -> i128 {
    c * c * k * k - c * c * k + 2 * c * k - 2 * c
}

/// Treewidth (= pathwidth) of the line graph of the regular complete
/// `k`-partite graph with classes of size `c`.
pub fn tw_line_regular(c: u64, k: u64) -> Result<FormulaValue> {
    if c < 1 || k < 2 {
        return Err(Error::Domain("need c >= 1 and k >= 2"));
    }
    let (ci, ki) = (c as i128, k as i128);
    let (offset, case) = if c.is_multiple_of(2) {
        (-4, Case::CEven)
    } else if k % 2 == 1 {
        (ki - 5, Case::KOddCOdd)
    } else {
        (ki - 6, Case::KEvenCOdd)
    };
    Ok(FormulaValue {
        value: exact_quarter(regular_base(ci, ki) + offset),
        case,
    })
}

/// Size of the minimum hitting set of the canonical line-bramble of the
/// regular complete `k`-partite graph with classes of size `c`.
pub fn h_size_regular(c: u64, k: u64) -> Result<FormulaValue> {
    if c < 1 || k < 2 {
        return Err(Error::Domain("need c >= 1 and k >= 2"));
    }
    let (ci, ki) = (c as i128, k as i128);
    let (offset, case) = if c.is_multiple_of(2) {
        (0, Case::CEven)
    } else if k % 2 == 1 {
        (ki - 1, Case::COdd)
    } else {
        (ki - 2, Case::KEvenCOdd)
    };
    Ok(FormulaValue {
        value: exact_quarter(regular_base(ci, ki) + offset),
        case,
    })
}

/// Two-sided bound on the treewidth of a multipartite line graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    /// Floor of the lower expression, clamped at zero.
    pub lower: u64,
    /// Ceiling of the upper expression.
    pub upper: u64,
    /// Floor of the lower expression before clamping.
    pub raw_lower: i64,
    /// Both expressions times four, exactly.
    pub lower_quarters: i128,
    pub upper_quarters: i128,
}

fn floor_div4(x: i128) -> i128 {
    x.div_euclid(4)
}

fn ceil_div4(x: i128) -> i128 {
    -(-x).div_euclid(4)
}

fn spec_terms(spec: &MultipartiteSpec) -> Result<(i128, i128, i128)> {
    if spec.k() < 2 {
        return Err(Error::Domain("need at least two colour classes"));
    }
    Ok((spec.n() as i128, spec.k() as i128, spec.cross_pairs() as i128))
}

/// Lower and upper bounds on `tw(L(K_{n_1..n_k}))`; the upper also bounds
/// pathwidth.
pub fn bounds_line_multipartite(spec: &MultipartiteSpec) -> Result<Bounds> {
    let (n, k, sigma) = spec_terms(spec)?;
    let lower_quarters = 2 * sigma - 4 * n * (k - 1) + 3 * k * (k - 1) - 4;
    let upper_quarters = 2 * n * (k + 5) + k * (k - 1) - 16 + 2 * sigma;
    let raw_lower = floor_div4(lower_quarters);
    Ok(Bounds {
        lower: raw_lower.max(0) as u64,
        upper: ceil_div4(upper_quarters).max(0) as u64,
        raw_lower: raw_lower as i64,
        lower_quarters,
        upper_quarters,
    })
}

/// Lower bound on the bramble number `tw + 1`, via the hitting-set count of
/// the edges joining the two large components. Ceiled (the order is an
/// integer) and clamped at zero.
pub fn bramble_lower_bound(spec: &MultipartiteSpec) -> Result<u64> {
    let (n, k, sigma) = spec_terms(spec)?;
    let quarters = 2 * sigma + 3 * k * k - 4 * k * n - 3 * k + 4 * n;
    Ok(ceil_div4(quarters).max(0) as u64)
}

/// Upper bound on the minimum hitting set size, adding the edges at the
/// singleton component. Floored.
pub fn hitting_set_upper_bound(spec: &MultipartiteSpec) -> Result<u64> {
    let (n, k, sigma) = spec_terms(spec)?;
    let quarters = 2 * sigma + 2 * n * (k + 1) + k * (k - 1) - 4;
    Ok(floor_div4(quarters).max(0) as u64)
}
