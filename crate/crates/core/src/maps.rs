//! Tables for maps between Hamming spaces, standard constructions
//! (repetition, majority, separation, linear), and exact checking of the
//! distance-expansion property: inputs farther than `a` apart must land
//! farther than `b` apart.
//!
//! Bit convention everywhere: vectors are little-endian integers, bit `j`
//! of the integer is coordinate `j`.

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Exhaustive table of a map from `k`-bit to `n`-bit vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapTable {
    k: u32,
    n: u32,
    images: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct MapTableJson {
    k: u32,
    n: u32,
    images: Vec<String>,
}

impl MapTable {
    pub fn new(k: u32, n: u32, images: Vec<u64>) -> Result<Self> {
        if k > 24 || n > 63 {
            return Err(Error::Domain(format!("map dimensions {k} -> {n} too large")));
        }
        if images.len() != 1usize << k {
            return Err(Error::Domain(format!(
                "need {} images, got {}",
                1usize << k,
                images.len()
            )));
        }
        if let Some(bad) = images.iter().find(|&&y| y >> n != 0) {
            return Err(Error::Domain(format!("image {bad:#x} exceeds {n} bits")));
        }
        Ok(MapTable { k, n, images })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn inputs(&self) -> u64 {
        1u64 << self.k
    }

    pub fn image(&self, x: u64) -> u64 {
        self.images[x as usize]
    }

    pub fn images(&self) -> &[u64] {
        &self.images
    }

    /// JSON form `{"k":..,"n":..,"images":["0","5",..]}` with lowercase hex
    /// image strings.
    pub fn to_json(&self) -> String {
        let shim = MapTableJson {
            k: self.k,
            n: self.n,
            images: self.images.iter().map(|y| format!("{y:x}")).collect(),
        };
        serde_json::to_string(&shim).expect("map table serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let shim: MapTableJson =
            serde_json::from_str(s).map_err(|e| Error::Parse(format!("map table json: {e}")))?;
        let images = shim
            .images
            .iter()
            .map(|h| {
                u64::from_str_radix(h, 16)
                    .map_err(|_| Error::Parse(format!("bad hex image {h:?}")))
            })
            .collect::<Result<Vec<u64>>>()?;
        MapTable::new(shim.k, shim.n, images)
    }
}

/// The identity on `k`-bit vectors.
pub fn identity_map(k: u32) -> Result<MapTable> {
    if k > 24 {
        return Err(Error::Domain(format!("k = {k} too large")));
    }
    MapTable::new(k, k, (0..1u64 << k).collect())
}

/// Concatenates `rho` copies of the input: block `r` of the output holds the
/// input verbatim.
pub fn repetition_map(k: u32, rho: u32) -> Result<MapTable> {
    if rho == 0 {
        return Err(Error::Domain("repetition factor must be positive".into()));
    }
    let n = k.checked_mul(rho).filter(|&n| n <= 63).ok_or_else(|| {
        Error::Domain(format!("repetition output width {k}*{rho} too large"))
    })?;
    let images = (0..1u64 << k)
        .map(|x| (0..rho).fold(0u64, |acc, r| acc | (x << (r * k))))
        .collect();
    MapTable::new(k, n, images)
}

/// Majority vote on consecutive triples of input bits; requires `3 | k`.
pub fn majority_map(k: u32) -> Result<MapTable> {
    if k == 0 || k % 3 != 0 {
        return Err(Error::Domain(format!("majority needs 3 | k, got k = {k}")));
    }
    let n = k / 3;
    let images = (0..1u64 << k)
        .map(|x| {
            let mut y = 0u64;
            for j in 0..n {
                let block = (x >> (3 * j)) & 7;
                if block.count_ones() >= 2 {
                    y |= 1 << j;
                }
            }
            y
        })
        .collect();
    MapTable::new(k, n, images)
}

/// Covers the domain with cells of diameter at most `2 * a_radius` and sends
/// cell `i` to `codebook[i]`.
///
/// Codebook entries must be pairwise farther than `b` apart. Cover centers
/// are chosen greedily (the point whose radius-`a_radius` ball covers the
/// most uncovered points, smallest index on ties) unless given explicitly;
/// each point is assigned to its nearest center, earliest center on ties.
/// Fails if more cells than codebook entries are needed or if some cell ends
/// up wider than `2 * a_radius`.
pub fn separation_map(
    k: u32,
    n: u32,
    a_radius: u32,
    b: u32,
    codebook: &[u64],
    cover: Option<&[u64]>,
) -> Result<MapTable> {
    if k > 16 || n > 63 {
        return Err(Error::Domain(format!("separation dimensions {k} -> {n} too large")));
    }
    if codebook.is_empty() {
        return Err(Error::Construction("empty codebook".into()));
    }
    for &c in codebook {
        if n < 63 && c >> n != 0 {
            return Err(Error::Domain(format!("codebook entry {c:#x} exceeds {n} bits")));
        }
    }
    for i in 0..codebook.len() {
        for j in i + 1..codebook.len() {
            let dist = (codebook[i] ^ codebook[j]).count_ones();
            if dist <= b {
                return Err(Error::Construction(format!(
                    "codebook entries {:#x} and {:#x} at distance {dist} <= {b}",
                    codebook[i], codebook[j]
                )));
            }
        }
    }

    let size = 1u64 << k;
    let centers: Vec<u64> = match cover {
        Some(c) => {
            if c.iter().any(|&v| v >= size) {
                return Err(Error::Domain("cover center out of range".into()));
            }
            c.to_vec()
        }
        None => {
            let mut covered = vec![false; size as usize];
            let mut remaining = size;
            let mut centers = Vec::new();
            while remaining > 0 {
                let mut best = (0u64, 0u64);
                for cand in 0..size {
                    let mut gain = 0u64;
                    for x in 0..size {
                        if !covered[x as usize] && (cand ^ x).count_ones() <= a_radius {
                            gain += 1;
                        }
                    }
                    if gain > best.1 {
                        best = (cand, gain);
                    }
                }
                centers.push(best.0);
                for x in 0..size {
                    if (best.0 ^ x).count_ones() <= a_radius {
                        covered[x as usize] = true;
                    }
                }
                remaining = covered.iter().filter(|c| !**c).count() as u64;
            }
            centers
        }
    };
    if centers.is_empty() {
        return Err(Error::Construction("empty cover".into()));
    }
    if centers.len() > codebook.len() {
        return Err(Error::Construction(format!(
            "cover needs {} cells but codebook has {}",
            centers.len(),
            codebook.len()
        )));
    }

    let mut cell = vec![0usize; size as usize];
    for x in 0..size {
        let mut pick = 0usize;
        for (i, &c) in centers.iter().enumerate() {
            if (c ^ x).count_ones() < (centers[pick] ^ x).count_ones() {
                pick = i;
            }
        }
        cell[x as usize] = pick;
    }
    for x in 0..size {
        for y in x + 1..size {
            if cell[x as usize] == cell[y as usize] && (x ^ y).count_ones() > 2 * a_radius {
                return Err(Error::Construction(format!(
                    "cell around {:#x} has diameter over {}",
                    centers[cell[x as usize]],
                    2 * a_radius
                )));
            }
        }
    }

    let images = (0..size).map(|x| codebook[cell[x as usize]]).collect();
    MapTable::new(k, n, images)
}

/// Linear map given by generator rows: `f(x) = xor of rows[i] over set bits
/// i of x`.
pub fn linear_map(k: u32, n: u32, rows: &[u64]) -> Result<MapTable> {
    if rows.len() != k as usize {
        return Err(Error::Domain(format!("need {k} generator rows, got {}", rows.len())));
    }
    if n <= 63 {
        if let Some(bad) = rows.iter().find(|&&r| r >> n != 0) {
            return Err(Error::Domain(format!("generator row {bad:#x} exceeds {n} bits")));
        }
    }
    let images = (0..1u64 << k)
        .map(|x| {
            let mut y = 0u64;
            for (i, &row) in rows.iter().enumerate() {
                if (x >> i) & 1 == 1 {
                    y ^= row;
                }
            }
            y
        })
        .collect();
    MapTable::new(k, n, images)
}

/// True when every input pair farther than `a` apart maps to images farther
/// than `b` apart.
pub fn verify_map(f: &MapTable, a: u32, b: u32) -> bool {
    let size = f.inputs();
    for x in 0..size {
        for y in x + 1..size {
            if (x ^ y).count_ones() > a && (f.image(x) ^ f.image(y)).count_ones() <= b {
                return false;
            }
        }
    }
    true
}

/// Number of unordered pairs violating the `(a, b)` expansion property,
/// optionally restricted to pairs inside `subset`.
pub fn count_violating_pairs(f: &MapTable, a: u32, b: u32, subset: Option<&[u64]>) -> u64 {
    let points: Vec<u64> = match subset {
        Some(s) => s.to_vec(),
        None => (0..f.inputs()).collect(),
    };
    let mut count = 0;
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            let (x, y) = (points[i], points[j]);
            if (x ^ y).count_ones() > a && (f.image(x) ^ f.image(y)).count_ones() <= b {
                count += 1;
            }
        }
    }
    count
}

/// `profile[a]` = least image distance over input pairs farther than `a`
/// apart; `None` where no such pair exists. Nondecreasing in `a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceProfile {
    pub min_image_dist: Vec<Option<u32>>,
}

pub fn distance_profile(f: &MapTable) -> DistanceProfile {
    let k = f.k() as usize;
    let size = f.inputs();
    // per input distance, least image distance seen
    let mut by_dist: Vec<Option<u32>> = vec![None; k + 1];
    for x in 0..size {
        for y in x + 1..size {
            let dx = (x ^ y).count_ones() as usize;
            let dy = (f.image(x) ^ f.image(y)).count_ones();
            if by_dist[dx].is_none_or(|m| dy < m) {
                by_dist[dx] = Some(dy);
            }
        }
    }
    let mut min_image_dist = vec![None; k + 1];
    let mut running: Option<u32> = None;
    for a in (0..=k).rev() {
        min_image_dist[a] = running;
        if a > 0 {
            if let Some(m) = by_dist[a] {
                running = Some(running.map_or(m, |r| r.min(m)));
            }
        }
    }
    DistanceProfile { min_image_dist }
}

/// Weight route for linear maps: `f` expands `(a, b)` iff every nonzero
/// input of weight over `a` has image weight over `b`.
pub fn verify_linear_by_weights(k: u32, n: u32, rows: &[u64], a: u32, b: u32) -> Result<bool> {
    let f = linear_map(k, n, rows)?;
    for x in 1..f.inputs() {
        if x.count_ones() > a && f.image(x).count_ones() <= b {
            return Ok(false);
        }
    }
    Ok(true)
}
