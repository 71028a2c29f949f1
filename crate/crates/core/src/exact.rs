//! Exact scalar layer: big rationals, binomial coefficients, Krawtchouk
//! tables, and the degree-indexed spectrum transform pair used by every
//! bound in the crate.
//!
//! Conventions, fixed once here and relied on everywhere:
//! - `K(n, j, x) = sum_k (-1)^k C(x,k) C(n-x,j-k)`, so `K(n,1,x) = n - 2x`.
//! - A [`SpectrumPoly`] stores coefficients `c[j]` and represents the point
//!   function `f(x) = 2^{-n} sum_j c[j] K(n,j,x)`.
//! - The inverse transform is `c[j] = sum_x f(x) K(n,x,j)` (degree and point
//!   swap roles), with no extra scaling.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator.
pub type Rat = num_rational::BigRational;

/// Rational from an integer.
pub fn rat_int<T: Into<BigInt>>(v: T) -> Rat {
    Rat::from_integer(v.into())
}

/// Rational `p/q`. Panics on `q = 0`.
pub fn rat<P: Into<BigInt>, Q: Into<BigInt>>(p: P, q: Q) -> Rat {
    Rat::new(p.into(), q.into())
}

/// `2^n` as a rational.
pub fn pow2(n: usize) -> Rat {
    rat_int(BigInt::one() << n)
}

/// Parses `p/q` or a bare integer `p`.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let make = |p: &str, q: &str| -> Result<Rat> {
        let p: BigInt = p
            .parse()
            .map_err(|_| Error::Parse(format!("bad numerator in {s:?}")))?;
        let q: BigInt = q
            .parse()
            .map_err(|_| Error::Parse(format!("bad denominator in {s:?}")))?;
        if q.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        Ok(Rat::new(p, q))
    };
    match s.split_once('/') {
        Some((p, q)) => make(p, q),
        None => make(s, "1"),
    }
}

/// Serializes as `p/q` in lowest terms, `q > 0`, integers included (`8/1`).
pub fn format_rat(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Binomial coefficient `C(n, k)`; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Krawtchouk value `K_j^{(n)}(x)` by the defining sum.
///
/// Requires `j <= n` and `x <= n`.
pub fn krawtchouk(n: u64, j: u64, x: u64) -> BigInt {
    assert!(j <= n && x <= n, "krawtchouk index out of range");
    let mut acc = BigInt::zero();
    for k in 0..=j.min(x) {
        let term = binomial(x, k) * binomial(n - x, j - k);
        if k % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// Full table of `K_j^{(n)}(x)` for `0 <= j, x <= n`, built by the
/// three-term recurrence in the degree.
#[derive(Debug, Clone)]
pub struct KrawtchoukTable {
    n: usize,
    // values[j][x]
    values: Vec<Vec<BigInt>>,
}

impl KrawtchoukTable {
    pub fn new(n: usize) -> Self {
        let mut values = Vec::with_capacity(n + 1);
        values.push(vec![BigInt::one(); n + 1]);
        if n >= 1 {
            let row1: Vec<BigInt> = (0..=n).map(|x| BigInt::from(n as i64 - 2 * x as i64)).collect();
            values.push(row1);
        }
        // (j+1) K_{j+1}(x) = (n-2x) K_j(x) - (n-j+1) K_{j-1}(x)
        for j in 1..n {
            let mut row = Vec::with_capacity(n + 1);
            for x in 0..=n {
                let lead = BigInt::from(n as i64 - 2 * x as i64) * &values[j][x]
                    - BigInt::from((n - j + 1) as u64) * &values[j - 1][x];
                let (q, r) = num_integer::Integer::div_rem(&lead, &BigInt::from((j + 1) as u64));
                debug_assert!(r.is_zero(), "recurrence must divide exactly");
                row.push(q);
            }
            values.push(row);
        }
        KrawtchoukTable { n, values }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `K_j^{(n)}(x)`.
    pub fn value(&self, j: usize, x: usize) -> &BigInt {
        &self.values[j][x]
    }
}

/// Coefficient vector `c[0..=n]` of an expansion in Krawtchouk polynomials;
/// represents `f(x) = 2^{-n} sum_j c[j] K_j(x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumPoly {
    n: usize,
    coeffs: Vec<Rat>,
}

impl SpectrumPoly {
    /// Wraps a coefficient vector of length `n + 1`.
    pub fn new(n: usize, coeffs: Vec<Rat>) -> Self {
        assert_eq!(coeffs.len(), n + 1, "need one coefficient per degree");
        SpectrumPoly { n, coeffs }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeff(&self, j: usize) -> &Rat {
        &self.coeffs[j]
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Point value `f(x) = 2^{-n} sum_j c[j] K_j(x)`.
    pub fn evaluate(&self, table: &KrawtchoukTable, x: usize) -> Rat {
        assert_eq!(table.n(), self.n, "table size mismatch");
        let mut acc = Rat::zero();
        for j in 0..=self.n {
            acc += &self.coeffs[j] * rat_int(table.value(j, x).clone());
        }
        acc / pow2(self.n)
    }

    /// All point values `f(0..=n)`.
    pub fn values(&self, table: &KrawtchoukTable) -> Vec<Rat> {
        (0..=self.n).map(|x| self.evaluate(table, x)).collect()
    }
}

/// Inverse transform: coefficients of the expansion whose point values are
/// `values`, namely `c[j] = sum_x values[x] K_x(j)`.
pub fn spectrum_of_values(table: &KrawtchoukTable, values: &[Rat]) -> SpectrumPoly {
    let n = table.n();
    assert_eq!(values.len(), n + 1, "need one value per distance");
    let coeffs = (0..=n)
        .map(|j| {
            let mut acc = Rat::zero();
            for x in 0..=n {
                acc += &values[x] * rat_int(table.value(x, j).clone());
            }
            acc
        })
        .collect();
    SpectrumPoly::new(n, coeffs)
}

/// True when every coefficient is nonnegative.
pub fn all_nonnegative(v: &[Rat]) -> bool {
    v.iter().all(|c| !c.is_negative())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn binomial_edges() {
        assert_eq!(binomial(0, 0), int(1));
        assert_eq!(binomial(5, 0), int(1));
        assert_eq!(binomial(5, 5), int(1));
        assert_eq!(binomial(5, 6), int(0));
        assert_eq!(binomial(10, 3), int(120));
        assert_eq!(binomial(52, 26).to_string(), "495918532948104");
    }

    #[test]
    fn krawtchouk_pinned_values() {
        // K_1(x) = n - 2x at n=4, x=1.
        assert_eq!(krawtchouk(4, 1, 1), int(2));
        // Degree 0 is constant 1.
        assert_eq!(krawtchouk(7, 0, 3), int(1));
        // Hand sum: C(1,0)C(1,2) - C(1,1)C(1,1) + C(1,2)C(1,0) = -1.
        assert_eq!(krawtchouk(2, 2, 1), int(-1));
    }

    #[test]
    fn degree_one_is_n_minus_2x() {
        for n in 1..=12u64 {
            for x in 0..=n {
                assert_eq!(krawtchouk(n, 1, x), int(n as i64 - 2 * x as i64));
            }
        }
    }

    #[test]
    fn value_at_one_closed_form() {
        // K_m(1) = (n - 2m)/n * C(n, m)
        for n in 1..=12u64 {
            for m in 0..=n {
                let expect = rat(n as i64 - 2 * m as i64, n as i64) * rat_int(binomial(n, m));
                assert!(expect.is_integer());
                assert_eq!(krawtchouk(n, m, 1), expect.to_integer());
            }
        }
    }

    #[test]
    fn table_matches_defining_sum() {
        for n in 0..=12usize {
            let table = KrawtchoukTable::new(n);
            for j in 0..=n {
                for x in 0..=n {
                    assert_eq!(
                        *table.value(j, x),
                        krawtchouk(n as u64, j as u64, x as u64),
                        "n={n} j={j} x={x}"
                    );
                }
            }
        }
    }

    /// Independent route: K_j(x) is the z^j coefficient of (1-z)^x (1+z)^(n-x).
    fn genfunc_row(n: usize, x: usize) -> Vec<BigInt> {
        let mut poly = vec![BigInt::one()];
        for _ in 0..x {
            // multiply by (1 - z)
            let mut next = vec![BigInt::zero(); poly.len() + 1];
            for (i, c) in poly.iter().enumerate() {
                next[i] += c;
                next[i + 1] -= c;
            }
            poly = next;
        }
        for _ in 0..(n - x) {
            // multiply by (1 + z)
            let mut next = vec![BigInt::zero(); poly.len() + 1];
            for (i, c) in poly.iter().enumerate() {
                next[i] += c;
                next[i + 1] += c;
            }
            poly = next;
        }
        poly
    }

    #[test]
    fn generating_function_route_agrees() {
        for n in 0..=10usize {
            for x in 0..=n {
                let row = genfunc_row(n, x);
                for j in 0..=n {
                    assert_eq!(row[j], krawtchouk(n as u64, j as u64, x as u64));
                }
            }
        }
    }

    #[test]
    fn orthogonality() {
        // sum_w K_l(w) K_w(x) = 2^n [x = l]
        for n in 0..=10usize {
            let t = KrawtchoukTable::new(n);
            for l in 0..=n {
                for x in 0..=n {
                    let mut acc = BigInt::zero();
                    for w in 0..=n {
                        acc += t.value(l, w) * t.value(w, x);
                    }
                    let expect = if x == l { BigInt::one() << n } else { BigInt::zero() };
                    assert_eq!(acc, expect, "n={n} l={l} x={x}");
                }
            }
        }
    }

    #[test]
    fn degree_reflection() {
        // K_{n-j}(x) = (-1)^x K_j(x); used with j = n-d-1 to fold top degrees.
        for n in 0..=10usize {
            let t = KrawtchoukTable::new(n);
            for j in 0..=n {
                for x in 0..=n {
                    let lhs = t.value(n - j, x).clone();
                    let rhs = if x % 2 == 0 {
                        t.value(j, x).clone()
                    } else {
                        -t.value(j, x).clone()
                    };
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn spectrum_hand_sum() {
        // n=2, coefficients (1,1,1): values (1, 0, 0).
        let t = KrawtchoukTable::new(2);
        let p = SpectrumPoly::new(2, vec![rat_int(1), rat_int(1), rat_int(1)]);
        assert_eq!(p.evaluate(&t, 0), rat_int(1));
        assert_eq!(p.evaluate(&t, 1), rat_int(0));
        assert_eq!(p.evaluate(&t, 2), rat_int(0));
    }

    #[test]
    fn delta_at_zero_has_flat_spectrum() {
        for n in 1..=8usize {
            let t = KrawtchoukTable::new(n);
            let mut values = vec![Rat::zero(); n + 1];
            values[0] = Rat::one();
            let p = spectrum_of_values(&t, &values);
            for j in 0..=n {
                assert_eq!(*p.coeff(j), Rat::one());
            }
            assert_eq!(p.values(&t), values);
        }
    }

    #[test]
    fn delta_rows_roundtrip() {
        // coefficients c[j] = K_l(j) represent the delta at l.
        for n in 0..=8usize {
            let t = KrawtchoukTable::new(n);
            for l in 0..=n {
                let coeffs: Vec<Rat> =
                    (0..=n).map(|j| rat_int(t.value(l, j).clone())).collect();
                let p = SpectrumPoly::new(n, coeffs);
                for x in 0..=n {
                    let expect = if x == l { Rat::one() } else { Rat::zero() };
                    assert_eq!(p.evaluate(&t, x), expect);
                }
            }
        }
    }

    #[test]
    fn transform_roundtrip() {
        for n in 0..=8usize {
            let t = KrawtchoukTable::new(n);
            // Deterministic, sign-varied values.
            let values: Vec<Rat> = (0..=n)
                .map(|x| rat((x * x) as i64 - 3 * x as i64 + 1, 1 + (x as i64 % 3)))
                .collect();
            let p = spectrum_of_values(&t, &values);
            assert_eq!(p.values(&t), values);
        }
    }

    #[test]
    fn rat_parse_format() {
        assert_eq!(format_rat(&rat(2, 1)), "2/1");
        assert_eq!(format_rat(&rat(-6, 8)), "-3/4");
        assert_eq!(parse_rat("7").unwrap(), rat_int(7));
        assert_eq!(parse_rat("14/5").unwrap(), rat(14, 5));
        assert_eq!(parse_rat("-3/9").unwrap(), rat(-1, 3));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
        assert!(parse_rat("1/2/3").is_err());
    }
}
