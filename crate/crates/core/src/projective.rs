//! Point/hyperplane configurations over the binary projective space of
//! `m`-bit vectors, and the hyperplane-counting conditions under which
//! such a configuration yields a linear distance-expanding map or an
//! independent set of size `2^m` in one of the Hamming-graph products.
//!
//! Points and dual vectors are nonzero `m`-bit integers, little-endian
//! (bit `i` = coordinate `i`); the hyperplane `w` contains the point
//! `p` exactly when `w & p` has even parity. Scalar multiples coincide
//! over F2, so enumerating the `2^m - 1` nonzero dual vectors covers
//! every hyperplane exactly once.

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

const MAX_DIMENSION: u32 = 22;

/// Two lists of (possibly repeated) nonzero points; the first indexes
/// input coordinates of a prospective map, the second output
/// coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProjectiveConfig {
    pub m: u32,
    #[serde(rename = "u")]
    pub u_points: Vec<u64>,
    #[serde(rename = "v")]
    pub v_points: Vec<u64>,
}

impl ProjectiveConfig {
    pub fn new(m: u32, u_points: Vec<u64>, v_points: Vec<u64>) -> Result<Self> {
        let cfg = ProjectiveConfig { m, u_points, v_points };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.m == 0 || self.m > MAX_DIMENSION {
            return Err(Error::Domain(format!(
                "dimension {} outside 1..={MAX_DIMENSION}",
                self.m
            )));
        }
        if self.u_points.is_empty() || self.v_points.is_empty() {
            return Err(Error::Domain("need at least one point on each side".into()));
        }
        for &p in self.u_points.iter().chain(&self.v_points) {
            if p == 0 {
                return Err(Error::Domain("zero vector is not a projective point".into()));
            }
            if p >> self.m != 0 {
                return Err(Error::Domain(format!("point {p:#x} exceeds {} bits", self.m)));
            }
        }
        Ok(())
    }

    /// Input side size (prospective `k`).
    pub fn k(&self) -> u32 {
        self.u_points.len() as u32
    }

    /// Output side size (prospective `n`).
    pub fn n(&self) -> u32 {
        self.v_points.len() as u32
    }

    /// JSON form `{"m":..,"u":[..],"v":[..]}` with integer points.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("config serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let cfg: ProjectiveConfig =
            serde_json::from_str(s).map_err(|e| Error::Parse(format!("config json: {e}")))?;
        cfg.validate()?;
        Ok(cfg)
    }
}

/// Containment counts of one hyperplane.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HyperplaneStats {
    pub hyperplane: u64,
    pub z_u: u64,
    pub z_v: u64,
}

fn contains(w: u64, p: u64) -> bool {
    (w & p).count_ones() % 2 == 0
}

fn stats_for(cfg: &ProjectiveConfig, w: u64) -> HyperplaneStats {
    HyperplaneStats {
        hyperplane: w,
        z_u: cfg.u_points.iter().filter(|&&p| contains(w, p)).count() as u64,
        z_v: cfg.v_points.iter().filter(|&&p| contains(w, p)).count() as u64,
    }
}

/// Containment counts for all `2^m - 1` hyperplanes, ascending by dual
/// vector.
pub fn hyperplane_stats(cfg: &ProjectiveConfig) -> Result<Vec<HyperplaneStats>> {
    cfg.validate()?;
    Ok((1..1u64 << cfg.m).map(|w| stats_for(cfg, w)).collect())
}

/// Which product-side conclusion the hyperplane condition is checked
/// for. All three share the implication `Z_v >= n - b  =>  Z_u >= k - a`
/// per hyperplane; they differ in the spanning precondition and an
/// upper clause:
///
/// * `Boxtimes`: all points together span; additionally `Z_u < k` is
///   required whenever `Z_v >= n - b`. Yields an independent set of the
///   strong product of the complemented input graph with the output
///   graph.
/// * `Ltimes`: the input points alone span (hence `k >= m`). Yields an
///   independent set of the homomorphic product of the two
///   complemented graphs.
/// * `Map`: as `Ltimes` with `k = m`; the configuration then exports a
///   generator matrix whose linear map expands distance `a` to `b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AbVariant {
    Boxtimes,
    Ltimes,
    Map,
}

/// Outcome of a condition check; on failure the smallest offending dual
/// vector is reported (absent only for the `Map` variant's `k != m`
/// shape failure).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AbCheck {
    pub holds: bool,
    pub witness: Option<HyperplaneStats>,
}

pub fn check_ab_condition(
    cfg: &ProjectiveConfig,
    a: u32,
    b: u32,
    variant: AbVariant,
) -> Result<AbCheck> {
    cfg.validate()?;
    let (k, n) = (cfg.k() as u64, cfg.n() as u64);
    if u64::from(a) > k || u64::from(b) > n {
        return Err(Error::Domain(format!("thresholds {a},{b} exceed sides {k},{n}")));
    }
    if variant == AbVariant::Map && u64::from(cfg.m) != k {
        return Ok(AbCheck { holds: false, witness: None });
    }
    for w in 1..1u64 << cfg.m {
        let s = stats_for(cfg, w);
        let spanning_violated = match variant {
            AbVariant::Boxtimes => s.z_u == k && s.z_v == n,
            AbVariant::Ltimes | AbVariant::Map => s.z_u == k,
        };
        if spanning_violated {
            return Ok(AbCheck { holds: false, witness: Some(s) });
        }
        if s.z_v >= n - u64::from(b) {
            let ok = s.z_u >= k - u64::from(a)
                && (variant != AbVariant::Boxtimes || s.z_u < k);
            if !ok {
                return Ok(AbCheck { holds: false, witness: Some(s) });
            }
        }
    }
    Ok(AbCheck { holds: true, witness: None })
}

/// Searches for a hyperplane with `Z_v >= n - b` and either `Z_u <
/// k - a` or `Z_u = k` (the latter disjunct taken literally), smallest
/// dual vector first. Requires the combined point set to span; a
/// hyperplane containing every point is a domain error.
pub fn find_bad_hyperplane(
    cfg: &ProjectiveConfig,
    a: u32,
    b: u32,
) -> Result<Option<HyperplaneStats>> {
    cfg.validate()?;
    let (k, n) = (cfg.k() as u64, cfg.n() as u64);
    if u64::from(a) > k || u64::from(b) > n {
        return Err(Error::Domain(format!("thresholds {a},{b} exceed sides {k},{n}")));
    }
    for w in 1..1u64 << cfg.m {
        let s = stats_for(cfg, w);
        if s.z_u == k && s.z_v == n {
            return Err(Error::Domain(format!(
                "all points lie in the hyperplane {:#x}",
                s.hyperplane
            )));
        }
    }
    for w in 1..1u64 << cfg.m {
        let s = stats_for(cfg, w);
        if s.z_v >= n - u64::from(b) && (s.z_u < k - u64::from(a) || s.z_u == k) {
            return Ok(Some(s));
        }
    }
    Ok(None)
}

/// The seven-point planar configuration: input points a basis of the
/// 3-bit space, output points the same basis plus the all-ones point,
/// which is the one point on none of the three lines through basis
/// pairs.
pub fn fano_config() -> ProjectiveConfig {
    ProjectiveConfig { m: 3, u_points: vec![1, 2, 4], v_points: vec![1, 2, 4, 7] }
}

/// Generator rows of the linear map encoded by a configuration with
/// `k = m` and independent input points: row `i` is the image of the
/// `i`-th unit vector, with bit `j` equal to `<t_i, v_j>` for the dual
/// basis `t_i` of the input points.
pub fn generator_matrix(cfg: &ProjectiveConfig) -> Result<Vec<u64>> {
    cfg.validate()?;
    let m = cfg.m;
    let k = cfg.k();
    let n = cfg.n();
    if k != m {
        return Err(Error::Domain(format!("generator needs k = m, got k={k} m={m}")));
    }
    if n > 63 {
        return Err(Error::Domain(format!("output side {n} exceeds 63 coordinates")));
    }
    // Gauss-Jordan on [A | I] where row j of A is the j-th input point;
    // columns m.. hold the inverse afterwards.
    let mut rows: Vec<u64> =
        cfg.u_points.iter().enumerate().map(|(j, &u)| u | (1 << (m as usize + j))).collect();
    for col in 0..m as usize {
        let pivot = (col..rows.len()).find(|&r| (rows[r] >> col) & 1 == 1).ok_or_else(|| {
            Error::Domain("input points are linearly dependent".into())
        })?;
        rows.swap(col, pivot);
        for r in 0..rows.len() {
            if r != col && (rows[r] >> col) & 1 == 1 {
                rows[r] ^= rows[col];
            }
        }
    }
    // Dual basis vector t_i = column i of the inverse.
    let t: Vec<u64> = (0..m as usize)
        .map(|i| {
            (0..m as usize)
                .map(|r| ((rows[r] >> (m as usize + i)) & 1) << r)
                .sum()
        })
        .collect();
    Ok(t.iter()
        .map(|&ti| {
            cfg.v_points
                .iter()
                .enumerate()
                .map(|(j, &v)| u64::from(!contains(ti, v)) << j)
                .sum()
        })
        .collect())
}

/// Inverse of the generator export: unit input points, output point `j`
/// read off column `j` of the rows. A zero column has no projective
/// counterpart and is rejected.
pub fn config_from_generator(k: u32, n: u32, rows: &[u64]) -> Result<ProjectiveConfig> {
    if k == 0 || k > MAX_DIMENSION {
        return Err(Error::Domain(format!("input length {k} outside 1..={MAX_DIMENSION}")));
    }
    if n == 0 || n > 63 {
        return Err(Error::Domain(format!("output length {n} outside 1..=63")));
    }
    if rows.len() != k as usize {
        return Err(Error::Domain(format!("need {k} rows, got {}", rows.len())));
    }
    if let Some(bad) = rows.iter().find(|&&r| r >> n != 0) {
        return Err(Error::Domain(format!("row {bad:#x} exceeds {n} bits")));
    }
    let v_points: Vec<u64> = (0..n as usize)
        .map(|j| rows.iter().enumerate().map(|(i, &r)| ((r >> j) & 1) << i).sum())
        .collect();
    if let Some(j) = v_points.iter().position(|&v| v == 0) {
        return Err(Error::Domain(format!("generator column {j} is zero")));
    }
    ProjectiveConfig::new(k, (0..k).map(|i| 1u64 << i).collect(), v_points)
}

/// The `2^m` vertices `(t U, t V)` of the row span, as coordinate pairs
/// for the product graph on `k + n` bits. Distinct when the stacked
/// points have full rank `m`.
pub fn subspace_vertices(cfg: &ProjectiveConfig) -> Result<Vec<(u64, u64)>> {
    cfg.validate()?;
    if cfg.k() > 63 || cfg.n() > 63 {
        return Err(Error::Domain("side exceeds 63 coordinates".into()));
    }
    Ok((0..1u64 << cfg.m)
        .map(|t| {
            let x = cfg
                .u_points
                .iter()
                .enumerate()
                .map(|(i, &u)| u64::from(!contains(t, u)) << i)
                .sum();
            let y = cfg
                .v_points
                .iter()
                .enumerate()
                .map(|(j, &v)| u64::from(!contains(t, v)) << j)
                .sum();
            (x, y)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{HammingGraphSpec, ProductGraphSpec, ProductKind};
    use crate::maps::{linear_map, verify_map};

    #[test]
    fn containment_and_stats_small_plane() {
        // m = 2: inputs the two unit points, output their sum.
        let cfg = ProjectiveConfig::new(2, vec![1, 2], vec![3]).unwrap();
        let stats = hyperplane_stats(&cfg).unwrap();
        assert_eq!(stats.len(), 3);
        // w = 1 contains the second unit point only; w = 3 contains
        // neither unit point but does contain their sum.
        assert_eq!(stats[0], HyperplaneStats { hyperplane: 1, z_u: 1, z_v: 0 });
        assert_eq!(stats[1], HyperplaneStats { hyperplane: 2, z_u: 1, z_v: 0 });
        assert_eq!(stats[2], HyperplaneStats { hyperplane: 3, z_u: 0, z_v: 1 });
        assert!(stats.iter().all(|s| (s.z_v == 1) == (s.hyperplane == 3)));
    }

    #[test]
    fn repeated_point_everywhere() {
        let cfg = ProjectiveConfig::new(3, vec![1, 1], vec![1, 1, 1]).unwrap();
        for s in hyperplane_stats(&cfg).unwrap() {
            if s.hyperplane & 1 == 0 {
                assert_eq!((s.z_u, s.z_v), (2, 3));
            } else {
                assert_eq!((s.z_u, s.z_v), (0, 0));
            }
        }
    }

    #[test]
    fn containment_count_identity() {
        // Each nonzero point lies in exactly 2^(m-1) - 1 hyperplanes.
        let configs = [
            fano_config(),
            ProjectiveConfig::new(2, vec![1, 2], vec![3]).unwrap(),
            ProjectiveConfig::new(4, vec![1, 6, 11], vec![3, 5, 9, 15, 15]).unwrap(),
        ];
        for cfg in configs {
            let total: u64 =
                hyperplane_stats(&cfg).unwrap().iter().map(|s| s.z_u + s.z_v).sum();
            let points = (cfg.k() + cfg.n()) as u64;
            assert_eq!(total, ((1 << (cfg.m - 1)) - 1) * points);
        }
    }

    #[test]
    fn fano_geometry() {
        let cfg = fano_config();
        // The all-ones output point avoids the three lines spanned by
        // basis pairs (duals 4, 2, 1).
        for w in [1u64, 2, 4] {
            assert!(!contains(w, 7));
        }
        // The line through the three pairwise sums misses every chosen
        // point.
        let s = stats_for(&cfg, 7);
        assert_eq!((s.z_u, s.z_v), (0, 0));
    }

    #[test]
    fn fano_condition_checks() {
        let cfg = fano_config();
        for variant in [AbVariant::Map, AbVariant::Ltimes, AbVariant::Boxtimes] {
            let res = check_ab_condition(&cfg, 2, 3, variant).unwrap();
            assert!(res.holds, "{variant:?} fails");
            assert_eq!(res.witness, None);
        }
        // Tightening the input radius breaks it: the smallest failing
        // hyperplane holds two output points but only one input point.
        let res = check_ab_condition(&cfg, 1, 3, AbVariant::Map).unwrap();
        assert!(!res.holds);
        assert_eq!(
            res.witness,
            Some(HyperplaneStats { hyperplane: 3, z_u: 1, z_v: 2 })
        );
        // Same witness from the bad-hyperplane search.
        assert_eq!(find_bad_hyperplane(&cfg, 1, 3).unwrap(), res.witness);
        assert_eq!(find_bad_hyperplane(&cfg, 2, 3).unwrap(), None);
    }

    #[test]
    fn spanning_preconditions() {
        // All points inside the hyperplane with dual 2; thresholds that
        // keep the per-hyperplane implication vacuous isolate the
        // spanning clause.
        let cfg = ProjectiveConfig::new(2, vec![1, 1], vec![1]).unwrap();
        let res = check_ab_condition(&cfg, 2, 0, AbVariant::Ltimes).unwrap();
        assert!(!res.holds);
        assert_eq!(res.witness.unwrap().hyperplane, 2);
        assert!(matches!(find_bad_hyperplane(&cfg, 1, 1), Err(Error::Domain(_))));

        // Input points degenerate but outputs span: ltimes fails on the
        // input side while the combined search still runs.
        let cfg = ProjectiveConfig::new(2, vec![1, 1], vec![2, 3]).unwrap();
        let res = check_ab_condition(&cfg, 0, 0, AbVariant::Ltimes).unwrap();
        assert!(!res.holds);
        assert_eq!(res.witness.unwrap().hyperplane, 2);
        assert!(find_bad_hyperplane(&cfg, 0, 1).unwrap().is_some());

        // Map variant needs k = m.
        let cfg = ProjectiveConfig::new(3, vec![1, 2], vec![3]).unwrap();
        let res = check_ab_condition(&cfg, 1, 1, AbVariant::Map).unwrap();
        assert!(!res.holds);
        assert_eq!(res.witness, None);
    }

    #[test]
    fn config_validation() {
        assert!(ProjectiveConfig::new(3, vec![1, 0, 2], vec![1]).is_err());
        assert!(ProjectiveConfig::new(3, vec![1], vec![8]).is_err());
        assert!(ProjectiveConfig::new(0, vec![1], vec![1]).is_err());
        assert!(ProjectiveConfig::new(23, vec![1], vec![1]).is_err());
        assert!(ProjectiveConfig::new(3, vec![], vec![1]).is_err());
        let cfg = fano_config();
        let round = ProjectiveConfig::from_json(&cfg.to_json()).unwrap();
        assert_eq!(cfg, round);
        assert!(ProjectiveConfig::from_json(r#"{"m":2,"u":[0],"v":[1]}"#).is_err());
    }

    #[test]
    fn fano_generator_and_roundtrip() {
        let cfg = fano_config();
        let rows = generator_matrix(&cfg).unwrap();
        assert_eq!(rows, vec![0b1001, 0b1010, 0b1100]);
        let map = linear_map(3, 4, &rows).unwrap();
        assert!(verify_map(&map, 2, 3));
        assert!(!verify_map(&map, 1, 3));
        assert_eq!(config_from_generator(3, 4, &rows).unwrap(), cfg);

        // A basis in non-unit position inverts correctly: permuted and
        // summed input points still export a verifying generator.
        let cfg = ProjectiveConfig::new(3, vec![3, 2, 4], vec![1, 2, 4, 7]).unwrap();
        let rows = generator_matrix(&cfg).unwrap();
        let map = linear_map(3, 4, &rows).unwrap();
        let check = check_ab_condition(&cfg, 2, 3, AbVariant::Map).unwrap();
        assert_eq!(check.holds, verify_map(&map, 2, 3));

        assert!(generator_matrix(&ProjectiveConfig::new(3, vec![1, 2, 3], vec![1]).unwrap())
            .is_err());
        assert!(config_from_generator(2, 3, &[0b101, 0b001]).is_err());
    }

    #[test]
    fn map_condition_matches_pairwise_verification() {
        // Full equivalence sweep: the hyperplane condition holds exactly
        // when the exported linear map expands the same thresholds.
        let configs = [
            fano_config(),
            ProjectiveConfig::new(2, vec![1, 2], vec![1, 2, 3]).unwrap(),
            ProjectiveConfig::new(3, vec![3, 2, 4], vec![1, 2, 4, 7]).unwrap(),
            ProjectiveConfig::new(2, vec![1, 2], vec![1, 1, 2, 2]).unwrap(),
        ];
        for cfg in configs {
            let rows = generator_matrix(&cfg).unwrap();
            let map = linear_map(cfg.k(), cfg.n(), &rows).unwrap();
            for a in 0..=cfg.k() {
                for b in 0..=cfg.n() {
                    let cond = check_ab_condition(&cfg, a, b, AbVariant::Map).unwrap();
                    assert_eq!(
                        cond.holds,
                        verify_map(&map, a, b),
                        "mismatch at a={a} b={b} for {}",
                        cfg.to_json()
                    );
                }
            }
        }
    }

    #[test]
    fn subspace_is_independent_in_products() {
        let cfg = fano_config();
        let verts = subspace_vertices(&cfg).unwrap();
        assert_eq!(verts.len(), 8);

        let left = HammingGraphSpec::new_complement(3, 2).unwrap();
        let hom = ProductGraphSpec::new(
            left,
            HammingGraphSpec::new_complement(4, 3).unwrap(),
            ProductKind::Homomorphic,
        )
        .unwrap();
        let strong = ProductGraphSpec::new(
            left,
            HammingGraphSpec::new(4, 3).unwrap(),
            ProductKind::Strong,
        )
        .unwrap();
        let mut codes: Vec<u64> = verts.iter().map(|&(x, y)| hom.encode(x, y)).collect();
        codes.sort_unstable();
        codes.dedup();
        assert_eq!(codes.len(), 8, "rank-deficient configuration");
        for (i, &u) in codes.iter().enumerate() {
            for &v in &codes[i + 1..] {
                assert!(!hom.adjacent(u, v), "adjacent pair {u:#x},{v:#x}");
                assert!(!strong.adjacent(u, v), "adjacent pair {u:#x},{v:#x}");
            }
        }
    }
}
