//! Bivariate linear-programming bounds on independent sets of the two
//! Hamming-graph products, and an explicit matrix certificate that
//! composes a primal optimizer for one factor with a dual optimizer for
//! the other.
//!
//! Both programs mirror the univariate module: working over bivariate
//! spectra with `f(x,y) = 2^{-k-n} sum f̂(i,j) K_i(x) K_j(y)`, maximize
//! `f̂(0,0)` subject to `f̂ >= 0`, `f(0,0) = 1`, `f = 0` on the adjacent
//! difference-weight pairs D and `f >= 0` on the rest. A dual spectrum
//! `ĝ >= 0` with `g <= 0` off D proves `θ <= 2^{k+n} g(0,0)/ĝ(0,0)`.

use num_traits::{One, Zero};

use crate::exact::{binomial, pow2, rat_int, KrawtchoukTable, Rat, SpectrumPoly};
use crate::graphs::{HammingGraphSpec, ProductGraphSpec, ProductKind};
use crate::simplex::{Constraint, Direction, ExactLp, LpOutcome, Sense, VarBound};
use crate::{Error, Result};

/// Spectrum of a function on difference-weight pairs `[0,k] x [0,n]`;
/// entry `(i,j)` is `f̂(i,j)`.
#[derive(Debug, Clone)]
pub struct BiSpectrumPoly {
    k: usize,
    n: usize,
    coeffs: Vec<Vec<Rat>>,
}

impl BiSpectrumPoly {
    pub fn new(k: usize, n: usize, coeffs: Vec<Vec<Rat>>) -> Self {
        assert_eq!(coeffs.len(), k + 1);
        assert!(coeffs.iter().all(|row| row.len() == n + 1));
        BiSpectrumPoly { k, n, coeffs }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeff(&self, i: usize, j: usize) -> &Rat {
        &self.coeffs[i][j]
    }

    pub fn coeffs(&self) -> &[Vec<Rat>] {
        &self.coeffs
    }

    /// Point value `f(x,y) = 2^{-k-n} sum_{i,j} f̂(i,j) K_i(x) K_j(y)`.
    pub fn evaluate(
        &self,
        left: &KrawtchoukTable,
        right: &KrawtchoukTable,
        x: usize,
        y: usize,
    ) -> Rat {
        let mut acc = Rat::zero();
        for i in 0..=self.k {
            let mut inner = Rat::zero();
            for j in 0..=self.n {
                inner += &self.coeffs[i][j] * rat_int(right.value(j, y).clone());
            }
            acc += inner * rat_int(left.value(i, x).clone());
        }
        acc / pow2(self.k + self.n)
    }

    /// Full grid of point values.
    pub fn values(&self, left: &KrawtchoukTable, right: &KrawtchoukTable) -> Vec<Vec<Rat>> {
        (0..=self.k)
            .map(|x| (0..=self.n).map(|y| self.evaluate(left, right, x, y)).collect())
            .collect()
    }
}

/// Inverse transform: `f̂(i,j) = sum_{x,y} f(x,y) K_x(i) K_y(j)`.
pub fn bi_spectrum_of_values(
    left: &KrawtchoukTable,
    right: &KrawtchoukTable,
    values: &[Vec<Rat>],
) -> BiSpectrumPoly {
    let k = left.n();
    let n = right.n();
    assert_eq!(values.len(), k + 1);
    let coeffs = (0..=k)
        .map(|i| {
            (0..=n)
                .map(|j| {
                    let mut acc = Rat::zero();
                    for (x, row) in values.iter().enumerate() {
                        assert_eq!(row.len(), n + 1);
                        let mut inner = Rat::zero();
                        for (y, v) in row.iter().enumerate() {
                            inner += v * rat_int(right.value(y, j).clone());
                        }
                        acc += inner * rat_int(left.value(x, i).clone());
                    }
                    acc
                })
                .collect()
        })
        .collect();
    BiSpectrumPoly::new(k, n, coeffs)
}

/// The partition of difference-weight pairs driving both programs: D
/// holds the adjacent pairs (where a primal must vanish), its complement
/// the non-adjacent ones (where a primal is nonnegative and a dual
/// nonpositive); `(0,0)` belongs to neither.
///
/// For the homomorphic kind the underlying product is
/// `H̄(k,a) ⋉ H̄(n,b)`; for the strong kind it is `H̄(k,a) ⊠ H(n,b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DomainSets {
    pub k: u32,
    pub a: u32,
    pub n: u32,
    pub b: u32,
    pub kind: ProductKind,
}

impl DomainSets {
    pub fn new(k: u32, a: u32, n: u32, b: u32, kind: ProductKind) -> Result<Self> {
        if k == 0 || n == 0 || a > k || b > n {
            return Err(Error::Domain(format!("bad domain parameters k={k} a={a} n={n} b={b}")));
        }
        Ok(DomainSets { k, a, n, b, kind })
    }

    /// The product graph whose independence number the programs bound.
    pub fn product_spec(&self) -> Result<ProductGraphSpec> {
        let left = HammingGraphSpec::new_complement(self.k, self.a)?;
        let right = match self.kind {
            ProductKind::Homomorphic => HammingGraphSpec::new_complement(self.n, self.b)?,
            ProductKind::Strong => HammingGraphSpec::new(self.n, self.b)?,
        };
        ProductGraphSpec::new(left, right, self.kind)
    }

    pub fn in_d(&self, x: u32, y: u32) -> bool {
        if x == 0 && y == 0 {
            return false;
        }
        match self.kind {
            ProductKind::Homomorphic => (x == 0 && y != 0) || (x > self.a && y <= self.b),
            ProductKind::Strong => (x == 0 || x > self.a) && y <= self.b,
        }
    }

    pub fn in_d_complement(&self, x: u32, y: u32) -> bool {
        x + y != 0 && !self.in_d(x, y)
    }

    /// D members in row-major order.
    pub fn d_members(&self) -> Vec<(u32, u32)> {
        self.grid(|x, y| self.in_d(x, y))
    }

    /// Complement members in row-major order.
    pub fn complement_members(&self) -> Vec<(u32, u32)> {
        self.grid(|x, y| self.in_d_complement(x, y))
    }

    fn grid(&self, pred: impl Fn(u32, u32) -> bool) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        for x in 0..=self.k {
            for y in 0..=self.n {
                if pred(x, y) {
                    out.push((x, y));
                }
            }
        }
        out
    }
}

/// Verified optimum of the bivariate program with both certificates.
#[derive(Debug, Clone)]
pub struct ProductTheta {
    pub domains: DomainSets,
    pub value: Rat,
    pub primal: BiSpectrumPoly,
    pub dual: BiSpectrumPoly,
}

/// Solves the bivariate program the same way as the univariate module:
/// a point-value primal over `t_{x,y} = f(x,y)` on the non-adjacent
/// pairs (spectrum-nonnegativity rows, no artificials), then a
/// spectrum-side solve for the dual certificate pinned to
/// `ĝ(0,0) = 2^{k+n}`, with exact strong duality asserted between them.
pub fn theta_s_product(k: u32, a: u32, n: u32, b: u32, kind: ProductKind) -> Result<ProductTheta> {
    let domains = DomainSets::new(k, a, n, b, kind)?;
    if (k + 1) * (n + 1) > 500 {
        return Err(Error::Domain(format!("grid {k}x{n} too large for the bivariate program")));
    }
    let left = KrawtchoukTable::new(k as usize);
    let right = KrawtchoukTable::new(n as usize);
    let support = domains.complement_members();

    let objective: Vec<Rat> = support
        .iter()
        .map(|&(x, y)| rat_int(binomial(k as u64, x as u64) * binomial(n as u64, y as u64)))
        .collect();
    let mut constraints = Vec::with_capacity((k as usize + 1) * (n as usize + 1));
    for i in 0..=k as usize {
        for j in 0..=n as usize {
            constraints.push(Constraint {
                coeffs: support
                    .iter()
                    .map(|&(x, y)| {
                        rat_int(left.value(x as usize, i) * right.value(y as usize, j))
                    })
                    .collect(),
                sense: Sense::Ge,
                rhs: -Rat::one(),
            });
        }
    }
    let lp = ExactLp {
        direction: Direction::Maximize,
        objective,
        constraints,
        bounds: vec![VarBound::NonNegative; support.len()],
    };
    let LpOutcome::Optimal(sol) = lp.solve()? else {
        return Err(Error::Internal("bivariate point-value program must have an optimum".into()));
    };
    let mut f = vec![vec![Rat::zero(); n as usize + 1]; k as usize + 1];
    f[0][0] = Rat::one();
    for (t, &(x, y)) in support.iter().enumerate() {
        f[x as usize][y as usize] = sol.primal[t].clone();
    }
    let primal = bi_spectrum_of_values(&left, &right, &f);
    let value = Rat::one() + sol.objective;

    let grid: Vec<(usize, usize)> = (0..=k as usize)
        .flat_map(|i| (0..=n as usize).map(move |j| (i, j)))
        .collect();
    let dual_objective: Vec<Rat> = grid
        .iter()
        .map(|&(i, j)| rat_int(binomial(k as u64, i as u64) * binomial(n as u64, j as u64)))
        .collect();
    let mut dual_constraints = vec![Constraint {
        coeffs: grid
            .iter()
            .map(|&(i, j)| if i == 0 && j == 0 { Rat::one() } else { Rat::zero() })
            .collect(),
        sense: Sense::Eq,
        rhs: pow2((k + n) as usize),
    }];
    for &(x, y) in &support {
        dual_constraints.push(Constraint {
            coeffs: grid
                .iter()
                .map(|&(i, j)| rat_int(left.value(i, x as usize) * right.value(j, y as usize)))
                .collect(),
            sense: Sense::Le,
            rhs: Rat::zero(),
        });
    }
    let dual_lp = ExactLp {
        direction: Direction::Minimize,
        objective: dual_objective,
        constraints: dual_constraints,
        bounds: vec![VarBound::NonNegative; grid.len()],
    };
    let LpOutcome::Optimal(dsol) = dual_lp.solve()? else {
        return Err(Error::Internal("bivariate spectrum program must have an optimum".into()));
    };
    let mut ghat = vec![vec![Rat::zero(); n as usize + 1]; k as usize + 1];
    for (t, &(i, j)) in grid.iter().enumerate() {
        ghat[i][j] = dsol.primal[t].clone();
    }
    let dual = BiSpectrumPoly::new(k as usize, n as usize, ghat);
    if dsol.objective != &value * pow2((k + n) as usize) {
        return Err(Error::Internal(format!(
            "strong duality gap in the bivariate program: primal {value}, dual {}",
            dsol.objective / pow2((k + n) as usize)
        )));
    }

    verify_product_certificates(&domains, &primal, &dual, &value)?;
    Ok(ProductTheta { domains, value, primal, dual })
}

/// Checks a bivariate certificate pair against raw Krawtchouk tables.
pub fn verify_product_certificates(
    domains: &DomainSets,
    primal: &BiSpectrumPoly,
    dual: &BiSpectrumPoly,
    value: &Rat,
) -> Result<()> {
    let fail = |msg: String| Err(Error::Internal(format!("certificate check failed: {msg}")));
    let (k, n) = (domains.k as usize, domains.n as usize);
    if primal.k() != k || primal.n() != n || dual.k() != k || dual.n() != n {
        return fail("certificate grid mismatch".into());
    }
    let left = KrawtchoukTable::new(k);
    let right = KrawtchoukTable::new(n);

    for row in primal.coeffs() {
        if row.iter().any(|c| c < &Rat::zero()) {
            return fail("primal spectrum has a negative entry".into());
        }
    }
    let f = primal.values(&left, &right);
    if !f[0][0].is_one() {
        return fail(format!("f(0,0) = {}, want 1", f[0][0]));
    }
    for x in 0..=k as u32 {
        for y in 0..=n as u32 {
            let fxy = &f[x as usize][y as usize];
            if domains.in_d(x, y) && !fxy.is_zero() {
                return fail(format!("f({x},{y}) = {fxy} on an adjacent pair"));
            }
            if domains.in_d_complement(x, y) && fxy < &Rat::zero() {
                return fail(format!("f({x},{y}) = {fxy} < 0"));
            }
        }
    }
    if primal.coeff(0, 0) != value {
        return fail(format!("primal value {} != {value}", primal.coeff(0, 0)));
    }

    for row in dual.coeffs() {
        if row.iter().any(|c| c < &Rat::zero()) {
            return fail("dual spectrum has a negative entry".into());
        }
    }
    if dual.coeff(0, 0).is_zero() {
        return fail("dual spectrum vanishes at (0,0)".into());
    }
    let g = dual.values(&left, &right);
    for &(x, y) in &domains.complement_members() {
        if g[x as usize][y as usize] > Rat::zero() {
            return fail(format!(
                "g({x},{y}) = {} > 0 on a non-adjacent pair",
                g[x as usize][y as usize]
            ));
        }
    }
    let dual_value = pow2(k + n) * &g[0][0] / dual.coeff(0, 0);
    if &dual_value != value {
        return fail(format!("dual value {dual_value} != {value}"));
    }
    Ok(())
}

/// Upper bound from separable certificates: `g(x,y) = f1(x) g1(y)` with
/// f1 primal-feasible for the program on edge distances `1..=a` (length
/// k) and g1 dual-feasible for the one on `1..=b` (length n). The
/// product is dual-feasible for the bivariate program, so
/// `θ <= 2^{k+n} f1(0) g1(0) / (f̂1(0) ĝ1(0))`; with optimal factors
/// this is `2^k θ_S(H(n,b)) / θ_S(H(k,a))`.
pub fn product_dual_from_factors(
    domains: &DomainSets,
    f1: &SpectrumPoly,
    g1: &SpectrumPoly,
) -> Result<Rat> {
    let (k, n) = (domains.k, domains.n);
    if f1.n() != k as usize || g1.n() != n as usize {
        return Err(Error::Domain(format!(
            "factor lengths {} and {} do not match the {k}x{n} grid",
            f1.n(),
            g1.n()
        )));
    }
    let infeasible = |msg: String| Err(Error::Domain(format!("infeasible factor: {msg}")));
    let left = KrawtchoukTable::new(k as usize);
    let right = KrawtchoukTable::new(n as usize);

    if f1.coeffs().iter().any(|c| c < &Rat::zero()) {
        return infeasible("f̂1 has a negative entry".into());
    }
    let f1_values = f1.values(&left);
    if !f1_values[0].is_one() {
        return infeasible(format!("f1(0) = {}, want 1", f1_values[0]));
    }
    for x in 1..=k {
        let v = &f1_values[x as usize];
        if x <= domains.a && !v.is_zero() {
            return infeasible(format!("f1({x}) = {v} on an edge distance"));
        }
        if v < &Rat::zero() {
            return infeasible(format!("f1({x}) = {v} < 0"));
        }
    }
    if g1.coeffs().iter().any(|c| c < &Rat::zero()) {
        return infeasible("ĝ1 has a negative entry".into());
    }
    if g1.coeff(0).is_zero() {
        return infeasible("ĝ1(0) = 0".into());
    }
    let g1_values = g1.values(&right);
    for y in domains.b + 1..=n {
        let v = &g1_values[y as usize];
        if v > &Rat::zero() {
            return infeasible(format!("g1({y}) = {v} > 0 off the edge set"));
        }
    }

    // The product certificate itself: nonnegative spectrum by
    // construction, nonpositive on every non-adjacent pair.
    for &(x, y) in &domains.complement_members() {
        let g = &f1_values[x as usize] * &g1_values[y as usize];
        if g > Rat::zero() {
            return Err(Error::Internal(format!(
                "product certificate positive at non-adjacent pair ({x},{y})"
            )));
        }
    }

    Ok(pow2((k + n) as usize) * &f1_values[0] * &g1_values[0] / (f1.coeff(0) * g1.coeff(0)))
}

/// Exact positive-semidefiniteness test by elimination: processes the
/// diagonal in order, requiring each pivot nonnegative and each zero
/// pivot to head an all-zero row. Returns the pivot diagonal.
pub fn ldl_psd_check(matrix: &[Vec<Rat>]) -> Result<Vec<Rat>> {
    let size = matrix.len();
    let mut a: Vec<Vec<Rat>> = matrix.to_vec();
    for (r, row) in a.iter().enumerate() {
        if row.len() != size {
            return Err(Error::Domain("matrix not square".into()));
        }
        for c in 0..size {
            if matrix[r][c] != matrix[c][r] {
                return Err(Error::Domain(format!("matrix not symmetric at ({r},{c})")));
            }
        }
    }
    let mut pivots = Vec::with_capacity(size);
    for step in 0..size {
        let d = a[step][step].clone();
        if d < Rat::zero() {
            return Err(Error::Internal(format!("negative pivot {d} at step {step}")));
        }
        if d.is_zero() {
            if (step + 1..size).any(|c| !a[step][c].is_zero()) {
                return Err(Error::Internal(format!(
                    "zero pivot with nonzero row at step {step}"
                )));
            }
            pivots.push(Rat::zero());
            continue;
        }
        for r in step + 1..size {
            if a[r][step].is_zero() {
                continue;
            }
            let factor = &a[r][step] / &d;
            for c in step..size {
                let delta = &factor * &a[step][c];
                a[r][c] -= delta;
            }
        }
        pivots.push(d);
    }
    Ok(pivots)
}

/// Certificate for the strong product of two Hamming graphs, composed
/// from factor optimizers: a primal optimizer M for the complement of
/// `g` tensored with a shifted dual optimizer C for `h`, dominated by
/// `c1 I` and entrywise at least 1 on the diagonal and every
/// non-adjacent pair, proving `α(g ⊠ h) <= c1 = |V(g)| θ(h) / θ(ḡ)`.
#[derive(Debug, Clone)]
pub struct CertifiedMatrixBound {
    pub left: HammingGraphSpec,
    pub right: HammingGraphSpec,
    pub theta_left_complement: Rat,
    pub theta_right: Rat,
    pub c1: Rat,
    pub c2: Rat,
    pub bound: Rat,
    /// Composed matrix, indexed by `(g,h) -> g * 2^{h.n} + h`.
    pub c_hat: Vec<Vec<Rat>>,
    /// Pivot diagonal certifying `c1 I - Ĉ` positive semidefinite.
    pub psd_pivots: Vec<Rat>,
}

pub fn compose_lemma1_certificate(
    g: &HammingGraphSpec,
    h: &HammingGraphSpec,
) -> Result<CertifiedMatrixBound> {
    if g.n + h.n > 12 {
        return Err(Error::Domain(format!(
            "product on 2^{} vertices too large for the explicit matrix",
            g.n + h.n
        )));
    }
    let theta_gbar =
        crate::delsarte::theta_s_distance(g.n, &g.complement().edge_distances())?;
    let theta_h = crate::delsarte::theta_s_distance(h.n, &h.edge_distances())?;
    let table_g = KrawtchoukTable::new(g.n as usize);
    let table_h = KrawtchoukTable::new(h.n as usize);
    let vg = rat_int(g.vertex_count());

    // m(z) = f(|z|)/|V(g)| from the primal for ḡ: positive semidefinite
    // with eigenvalues f̂(j)/|V(g)|, diagonal 1/|V(g)|, zero on pairs
    // adjacent in ḡ, every row summing to θ(ḡ)/|V(g)|.
    let m_vals: Vec<Rat> =
        theta_gbar.primal.values(&table_g).into_iter().map(|v| v / &vg).collect();

    // c(y) = 1 + θ(h) [y=0] - 2^{h.n} g(y)/ĝ(0) from the dual for h:
    // at least 1 on the diagonal and non-adjacent pairs, with largest
    // eigenvalue exactly θ(h) (spectrum θ(h) - ĝ(j) + 2^{h.n} [j=0]).
    let g_vals = theta_h.dual.values(&table_h);
    let scale = pow2(h.n as usize) / theta_h.dual.coeff(0);
    let c_vals: Vec<Rat> = (0..=h.n as usize)
        .map(|y| {
            let mut c = Rat::one() - &scale * &g_vals[y];
            if y == 0 {
                c += &theta_h.value;
            }
            c
        })
        .collect();
    debug_assert!(c_vals[0].is_one());

    let c1 = &vg * &theta_h.value / &theta_gbar.value;
    let c2 = &vg * &vg / &theta_gbar.value;

    let product = ProductGraphSpec::new(*g, *h, ProductKind::Strong)?;
    let size = product.vertex_count() as usize;
    let lambda = &theta_h.value;
    let mut c_hat = vec![vec![Rat::zero(); size]; size];
    for u in 0..size {
        let (gu, hu) = product.decode(u as u64);
        for v in 0..size {
            let (gv, hv) = product.decode(v as u64);
            let m = &m_vals[(gu ^ gv).count_ones() as usize];
            let mut c = c_vals[(hu ^ hv).count_ones() as usize].clone();
            if hu == hv {
                c -= lambda;
            }
            c -= Rat::one();
            let mut entry = &c2 * m * c + Rat::one();
            if u == v {
                entry += &c1;
            }
            c_hat[u][v] = entry;
        }
    }

    // Row sums of M and its diagonal, exactly as claimed.
    let row_sum: Rat = m_vals
        .iter()
        .enumerate()
        .map(|(x, m)| m * rat_int(binomial(g.n as u64, x as u64)))
        .sum();
    if row_sum != &theta_gbar.value / &vg || m_vals[0] != Rat::one() / &vg {
        return Err(Error::Internal("factor matrix identities violated".into()));
    }

    // Entrywise: at least 1 on the diagonal and every non-adjacent pair.
    for u in 0..size {
        for v in 0..size {
            if u == v || !product.adjacent(u as u64, v as u64) {
                if c_hat[u][v] < Rat::one() {
                    return Err(Error::Internal(format!(
                        "composed matrix entry ({u},{v}) = {} below 1",
                        c_hat[u][v]
                    )));
                }
            }
        }
    }

    // c1 I - Ĉ must be positive semidefinite.
    let mut slack = vec![vec![Rat::zero(); size]; size];
    for u in 0..size {
        for v in 0..size {
            slack[u][v] = -&c_hat[u][v];
            if u == v {
                slack[u][v] += &c1;
            }
        }
    }
    let psd_pivots = ldl_psd_check(&slack)?;

    Ok(CertifiedMatrixBound {
        left: *g,
        right: *h,
        theta_left_complement: theta_gbar.value,
        theta_right: theta_h.value,
        bound: c1.clone(),
        c1,
        c2,
        c_hat,
        psd_pivots,
    })
}
