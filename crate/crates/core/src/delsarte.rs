//! Exact linear-programming bounds on independent sets of distance graphs
//! over bit vectors.
//!
//! Working over spectra `c[j]` with point values
//! `f(x) = 2^{-n} sum_j c[j] K_j(x)`, the program is: maximize `f̂(0)`
//! subject to `f̂ >= 0`, `f(0) = 1`, `f = 0` on edge distances, and
//! `f >= 0` everywhere else. Its optimum upper-bounds the independence
//! number: averaging f over translates of an independent set kills the
//! edge distances and leaves `|S| <= f̂(0)`.
//!
//! Dual certificates are spectra `ĝ >= 0` whose point values g are `<= 0`
//! on every non-edge distance `>= 1`; any such g proves
//! `θ <= 2^n g(0) / ĝ(0)` on its own, independent of solver state.

use num_traits::{One, Zero};

use crate::exact::{
    all_nonnegative, binomial, pow2, rat, rat_int, spectrum_of_values, KrawtchoukTable, Rat,
    SpectrumPoly,
};
use crate::simplex::{Constraint, Direction, ExactLp, LpOutcome, Sense, VarBound};
use crate::{Error, Result};

/// Verified optimum of the distance-graph program together with both
/// certificates. `primal` holds f̂, `dual` holds ĝ.
#[derive(Debug, Clone)]
pub struct DistanceTheta {
    pub n: u32,
    pub edge_distances: Vec<u32>,
    pub value: Rat,
    pub primal: SpectrumPoly,
    pub dual: SpectrumPoly,
}

/// [`DistanceTheta`] specialized to edges at distances `1..=d`.
#[derive(Debug, Clone)]
pub struct ThetaResult {
    pub n: u32,
    pub d: u32,
    pub value: Rat,
    pub primal: SpectrumPoly,
    pub dual: SpectrumPoly,
}

/// Solves the program for an arbitrary set of edge distances.
///
/// Two small solves instead of one big one. The primal works in point
/// values: variables `t_x = f(x)` on non-edge distances (so `f >= 0` and
/// `f = 0` on edges are free), and each spectrum coordinate contributes a
/// row `f̂(j) = 1 + sum_x t_x K_x(j) >= 0` — slack form, no artificials.
/// The dual certificate comes from a second solve over spectra ĝ >= 0
/// pinned to `ĝ(0) = 2^n`, minimizing `2^n g(0)` subject to `g <= 0` on
/// non-edges. Strong duality between the two is checked exactly, and both
/// certificates are re-verified from a fresh Krawtchouk table.
pub fn theta_s_distance(n: u32, edge_distances: &[u32]) -> Result<DistanceTheta> {
    if n == 0 || n > 120 {
        return Err(Error::Domain(format!("n={n} out of range for the distance program")));
    }
    let mut edges = edge_distances.to_vec();
    edges.sort_unstable();
    edges.dedup();
    if edges.iter().any(|&x| x == 0 || x > n) {
        return Err(Error::Domain(format!("edge distances {edges:?} must lie in 1..={n}")));
    }
    let table = KrawtchoukTable::new(n as usize);
    let width = n as usize + 1;
    let nonedges: Vec<usize> =
        (1..width).filter(|&x| edges.binary_search(&(x as u32)).is_err()).collect();

    let objective: Vec<Rat> =
        nonedges.iter().map(|&x| rat_int(binomial(n as u64, x as u64))).collect();
    let constraints: Vec<Constraint> = (0..width)
        .map(|j| Constraint {
            coeffs: nonedges.iter().map(|&x| rat_int(table.value(x, j).clone())).collect(),
            sense: Sense::Ge,
            rhs: -Rat::one(),
        })
        .collect();
    let lp = ExactLp {
        direction: Direction::Maximize,
        objective,
        constraints,
        bounds: vec![VarBound::NonNegative; nonedges.len()],
    };
    let LpOutcome::Optimal(sol) = lp.solve()? else {
        return Err(Error::Internal("point-value program must have an optimum".into()));
    };
    let mut f = vec![Rat::zero(); width];
    f[0] = Rat::one();
    for (i, &x) in nonedges.iter().enumerate() {
        f[x] = sol.primal[i].clone();
    }
    let primal = spectrum_of_values(&table, &f);
    let value = Rat::one() + sol.objective;

    let dual_objective: Vec<Rat> =
        (0..width).map(|j| rat_int(binomial(n as u64, j as u64))).collect();
    let mut dual_constraints = vec![Constraint {
        coeffs: (0..width).map(|j| if j == 0 { Rat::one() } else { Rat::zero() }).collect(),
        sense: Sense::Eq,
        rhs: pow2(n as usize),
    }];
    for &x in &nonedges {
        dual_constraints.push(Constraint {
            coeffs: (0..width).map(|j| rat_int(table.value(j, x).clone())).collect(),
            sense: Sense::Le,
            rhs: Rat::zero(),
        });
    }
    let dual_lp = ExactLp {
        direction: Direction::Minimize,
        objective: dual_objective,
        constraints: dual_constraints,
        bounds: vec![VarBound::NonNegative; width],
    };
    let LpOutcome::Optimal(dsol) = dual_lp.solve()? else {
        return Err(Error::Internal("spectrum program must have an optimum".into()));
    };
    let dual = SpectrumPoly::new(n as usize, dsol.primal);
    if dsol.objective != &value * pow2(n as usize) {
        return Err(Error::Internal(format!(
            "strong duality gap: primal {value}, dual {}",
            dsol.objective / pow2(n as usize)
        )));
    }

    verify_theta_certificates(n, &edges, &primal, &dual, &value)?;
    Ok(DistanceTheta { n, edge_distances: edges, value, primal, dual })
}

/// Program value for edges at distances `1..=d`.
pub fn theta_s_hamming(n: u32, d: u32) -> Result<ThetaResult> {
    if d > n {
        return Err(Error::Domain(format!("d={d} exceeds n={n}")));
    }
    let edges: Vec<u32> = (1..=d).collect();
    let t = theta_s_distance(n, &edges)?;
    Ok(ThetaResult { n, d, value: t.value, primal: t.primal, dual: t.dual })
}

/// Checks a primal/dual certificate pair against raw Krawtchouk tables.
///
/// Primal: `f̂ >= 0`, `f(0) = 1`, `f = 0` on edges, `f >= 0` everywhere,
/// and `value = f̂(0)`. Dual: `ĝ >= 0`, `ĝ(0) > 0`, `g <= 0` on non-edge
/// distances `>= 1`, and `value = 2^n g(0) / ĝ(0)`.
pub fn verify_theta_certificates(
    n: u32,
    edge_distances: &[u32],
    primal: &SpectrumPoly,
    dual: &SpectrumPoly,
    value: &Rat,
) -> Result<()> {
    let fail = |msg: String| Err(Error::Internal(format!("certificate check failed: {msg}")));
    if primal.n() != n as usize || dual.n() != n as usize {
        return fail(format!("certificate length mismatch for n={n}"));
    }
    let is_edge = |x: u32| edge_distances.contains(&x);
    let table = KrawtchoukTable::new(n as usize);

    if !all_nonnegative(primal.coeffs()) {
        return fail("primal spectrum has a negative entry".into());
    }
    let f = primal.values(&table);
    if !f[0].is_one() {
        return fail(format!("f(0) = {}, want 1", f[0]));
    }
    for x in 1..=n {
        let fx = &f[x as usize];
        if is_edge(x) && !fx.is_zero() {
            return fail(format!("f({x}) = {fx} on an edge distance"));
        }
        if fx < &Rat::zero() {
            return fail(format!("f({x}) = {fx} < 0"));
        }
    }
    if primal.coeff(0) != value {
        return fail(format!("primal value {} != {value}", primal.coeff(0)));
    }

    if !all_nonnegative(dual.coeffs()) {
        return fail("dual spectrum has a negative entry".into());
    }
    if dual.coeff(0).is_zero() {
        return fail("dual spectrum vanishes at 0".into());
    }
    let g = dual.values(&table);
    for x in 1..=n {
        if !is_edge(x) && g[x as usize] > Rat::zero() {
            return fail(format!("g({x}) = {} > 0 off the edge set", g[x as usize]));
        }
    }
    let dual_value = pow2(n as usize) * &g[0] / dual.coeff(0);
    if &dual_value != value {
        return fail(format!("dual value {dual_value} != {value}"));
    }
    Ok(())
}

/// Degree-1 dual certificate `g(x) = 2(d+1-x)`, spectrum
/// `ĝ = (2^n(2d+2-n), 2^n, 0, ...)`, proving
/// `θ <= 2(d+1)/(2d+2-n)` whenever `2d+2 > n`.
pub fn plotkin_dual(n: u32, d: u32) -> Result<(SpectrumPoly, Rat)> {
    if n == 0 || d > n {
        return Err(Error::Domain(format!("bad parameters n={n} d={d}")));
    }
    if 2 * d + 2 <= n {
        return Err(Error::Domain(format!(
            "2d+2 = {} does not exceed n = {n}: bound vacuous",
            2 * d + 2
        )));
    }
    let mut coeffs = vec![Rat::zero(); n as usize + 1];
    coeffs[0] = pow2(n as usize) * rat_int(2 * d as i64 + 2 - n as i64);
    coeffs[1] = pow2(n as usize);
    let spectrum = SpectrumPoly::new(n as usize, coeffs);
    let bound = rat(2 * (d + 1), 2 * d + 2 - n);
    #[cfg(debug_assertions)]
    {
        let table = KrawtchoukTable::new(n as usize);
        let g = spectrum.values(&table);
        for (x, gx) in g.iter().enumerate() {
            debug_assert_eq!(*gx, rat_int(2 * (d as i64 + 1 - x as i64)));
        }
        debug_assert!(g[d as usize + 1..].iter().all(|gx| gx <= &Rat::zero()));
        debug_assert_eq!(pow2(n as usize) * &g[0] / spectrum.coeff(0), bound);
    }
    Ok((spectrum, bound))
}

/// Feasibility report for the degree-(d+1) primal certificate.
#[derive(Debug, Clone)]
pub struct LevenshteinPrimal {
    pub n: u32,
    pub d: u32,
    /// Whether the spectrum is nonnegative, hence a genuine certificate.
    pub feasible: bool,
    pub spectrum: SpectrumPoly,
    pub bound: Rat,
}

/// Primal spectrum `f̂(w) = 1 + r K_{d+1}(w) / C(n,d+1)` with
/// `r = n/(2d+2-n)`, whose point values are `f(0) = 1`,
/// `f(d+1) = r/C(n,d+1)`, zero elsewhere. When the spectrum is
/// nonnegative it proves `θ >= 1 + r = (2d+2)/(2d+2-n)`; the optimum then
/// meets the degree-1 dual bound exactly. Requires d odd.
pub fn levenshtein_primal(n: u32, d: u32) -> Result<LevenshteinPrimal> {
    if n == 0 || d >= n {
        return Err(Error::Domain(format!("need 0 <= d < n, got n={n} d={d}")));
    }
    if d % 2 == 0 {
        return Err(Error::Domain(format!("d={d} is even; bound d >= via d+1 instead")));
    }
    if 2 * d + 2 <= n {
        return Err(Error::Domain(format!("2d+2 = {} does not exceed n = {n}", 2 * d + 2)));
    }
    let r = rat(n, 2 * d + 2 - n);
    let table = KrawtchoukTable::new(n as usize);
    let scale = &r / rat_int(binomial(n as u64, d as u64 + 1));
    let coeffs: Vec<Rat> = (0..=n as usize)
        .map(|w| Rat::one() + &scale * rat_int(table.value(d as usize + 1, w).clone()))
        .collect();
    let feasible = all_nonnegative(&coeffs);
    let spectrum = SpectrumPoly::new(n as usize, coeffs);
    #[cfg(debug_assertions)]
    {
        let values = spectrum.values(&table);
        for (x, fx) in values.iter().enumerate() {
            let want = if x == 0 {
                Rat::one()
            } else if x == d as usize + 1 {
                scale.clone()
            } else {
                Rat::zero()
            };
            debug_assert_eq!(*fx, want, "point value at {x}");
        }
    }
    Ok(LevenshteinPrimal { n, d, feasible, spectrum, bound: Rat::one() + r })
}

/// One row of [`levenshtein_sweep`].
#[derive(Debug, Clone)]
pub struct LevenshteinSweepRow {
    pub n: u32,
    pub d: u32,
    pub feasible: bool,
    pub bound: Rat,
}

/// Feasibility of the degree-(d+1) primal certificate at
/// `d = largest odd integer <= 3n/4`, for each n in `n_lo..=n_hi`.
pub fn levenshtein_sweep(n_lo: u32, n_hi: u32) -> Result<Vec<LevenshteinSweepRow>> {
    if n_lo < 2 || n_hi < n_lo {
        return Err(Error::Domain(format!("bad sweep range {n_lo}..={n_hi}")));
    }
    let mut rows = Vec::new();
    for n in n_lo..=n_hi {
        let mut d = 3 * n / 4;
        if d % 2 == 0 {
            d -= 1;
        }
        let lp = levenshtein_primal(n, d)?;
        rows.push(LevenshteinSweepRow { n, d, feasible: lp.feasible, bound: lp.bound });
    }
    Ok(rows)
}
