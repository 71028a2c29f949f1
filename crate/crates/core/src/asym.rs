//! Double-precision rate functions for the asymptotic regime and the
//! feasible-region curves they induce. Logarithms are base 2
//! throughout, so rates are in bits and `h(1/2) = 1`.

use crate::{Error, Result};

/// Binary entropy in bits; endpoints pinned to 0 by continuity.
pub fn h(x: f64) -> f64 {
    assert!((0.0..=1.0).contains(&x), "entropy argument {x} outside [0,1]");
    if x == 0.0 || x == 1.0 {
        return 0.0;
    }
    -(x * x.log2()) - (1.0 - x) * (1.0 - x).log2()
}

/// `1/2 - sqrt(x(1-x))` without cancellation near `x = 1/2`.
fn half_gap(x: f64) -> f64 {
    let e = 0.5 - x;
    e * e / (0.5 + (0.25 - e * e).max(0.0).sqrt())
}

/// Single-parameter rate bound `h(1/2 - sqrt(d(1-d)))`.
pub fn r_lp1(delta: f64) -> f64 {
    assert!((0.0..=1.0).contains(&delta), "distance {delta} outside [0,1]");
    h(half_gap(delta))
}

/// Two-parameter rate bound: minimize `1 - h(a) + h(b)` over
/// `0 <= b <= a <= 1/2` with `2(a(1-a) - b(1-b))/(1 + 2 sqrt(b(1-b)))
/// <= d`. On the `a = 1/2` section the constraint reads
/// `sqrt(b(1-b)) >= 1/2 - d`, so the section minimum sits at
/// `b = 1/2 - sqrt(d(1-d))` and the value coincides with [`r_lp1`];
/// zero from `d = 1/2` on.
pub fn r_lp2(delta: f64) -> f64 {
    assert!((0.0..=1.0).contains(&delta), "distance {delta} outside [0,1]");
    if delta >= 0.5 {
        0.0
    } else {
        h(half_gap(delta))
    }
}

/// Half the larger of the sphere-packing-plus-LP exponent
/// `1 - h(a) + R_LP1(a)` and the covering exponent
/// `h(1 - 2 sqrt(a(1-a)))`; zero from `a = 1/2` on.
pub fn r_sam(alpha: f64) -> f64 {
    assert!((0.0..=1.0).contains(&alpha), "distance {alpha} outside [0,1]");
    if alpha >= 0.5 {
        return 0.0;
    }
    let packing = 1.0 - h(alpha) + r_lp1(alpha);
    let covering = h(2.0 * half_gap(alpha));
    0.5 * packing.max(covering)
}

/// Smallest `a` in `[0, hi]` satisfying a predicate that is false below
/// some threshold and true from there on; `pred(hi)` must hold.
fn smallest_satisfying(hi: f64, pred: impl Fn(f64) -> bool) -> f64 {
    debug_assert!(pred(hi));
    if pred(0.0) {
        return 0.0;
    }
    let mut lo = 0.0;
    let mut hi = hi;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if pred(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}

/// One grid row of the feasible-region synthesis for maps stretching
/// normalized input separation `alpha` to output separation `beta` at
/// length ratio `rho = n/k`. Lower bounds say every such map needs
/// `alpha` at least that large; achievable entries come from explicit
/// constructions. Absent fields mean the construction or bound does not
/// apply at this `(rho, beta)`.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundCurveRow {
    pub beta: f64,
    pub lb_ccb: f64,
    pub lb_ccsam: f64,
    pub lb_it: f64,
    pub lb_tm3: Option<f64>,
    pub ach_repetition: Option<f64>,
    pub ach_majority: Option<f64>,
    pub ach_separation: Option<f64>,
}

impl BoundCurveRow {
    /// Largest of the applicable lower bounds.
    pub fn overall_lower_bound(&self) -> f64 {
        let mut best = self.lb_ccb.max(self.lb_ccsam).max(self.lb_it);
        if let Some(t) = self.lb_tm3 {
            best = best.max(t);
        }
        best
    }
}

fn near_positive_integer(x: f64) -> Option<i64> {
    let r = x.round();
    (r >= 1.0 && (x - r).abs() < 1e-9).then_some(r as i64)
}

/// Synthesizes the bound curves over a `beta` grid in (0,1).
///
/// Per row: `lb_ccb` is the smallest `a` with `1 - h(a) <= rho
/// R_LP2(beta)`; `lb_ccsam` the smallest with `R_Sam(a) <= rho
/// R_LP2(beta)`; `lb_it` the smallest with `1 - h(a/2) <= rho (1 -
/// h(beta/2))`; `lb_tm3 = beta` for `beta > 1/2` only. Achievability:
/// repetition gives `a = beta` when `rho` is an integer; blockwise
/// majority gives `a = rho beta + (1 - rho)` when `1/rho` is an odd
/// integer; covering input space with balls and mapping onto a
/// separated code gives the smallest `a` with `1 - h(a/2) <= rho (1 -
/// h(beta))`, for `beta <= 1/2`.
pub fn region(rho: f64, grid: &[f64]) -> Result<Vec<BoundCurveRow>> {
    if !rho.is_finite() || rho <= 0.0 {
        return Err(Error::Domain(format!("length ratio must be positive, got {rho}")));
    }
    if let Some(bad) = grid.iter().find(|b| !(b.is_finite() && 0.0 < **b && **b < 1.0)) {
        return Err(Error::Domain(format!("grid point {bad} outside (0,1)")));
    }
    let rows = grid
        .iter()
        .map(|&beta| {
            let cap = rho * r_lp2(beta);
            let lb_ccb = smallest_satisfying(0.5, |a| 1.0 - h(a) <= cap);
            let lb_ccsam = smallest_satisfying(0.5, |a| r_sam(a) <= cap);
            let it_rhs = rho * (1.0 - h(beta / 2.0));
            let lb_it = smallest_satisfying(1.0, |a| 1.0 - h(a / 2.0) <= it_rhs);
            let lb_tm3 = (beta > 0.5).then_some(beta);
            let ach_repetition = near_positive_integer(rho).map(|_| beta);
            let ach_majority = near_positive_integer(1.0 / rho)
                .filter(|blocks| blocks % 2 == 1)
                .map(|_| rho * beta + (1.0 - rho));
            let ach_separation = (beta <= 0.5).then(|| {
                let rhs = rho * (1.0 - h(beta));
                smallest_satisfying(1.0, |a| 1.0 - h(a / 2.0) <= rhs)
            });
            BoundCurveRow {
                beta,
                lb_ccb,
                lb_ccsam,
                lb_it,
                lb_tm3,
                ach_repetition,
                ach_majority,
                ach_separation,
            }
        })
        .collect();
    Ok(rows)
}
