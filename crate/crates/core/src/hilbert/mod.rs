//! Hilbert-Samuel functions, Hilbert coefficients and series numerators.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideals::{artinian_length, IdealHandle, LengthValue, RingPresentation};

pub const DEFAULT_WINDOW: usize = 3;
/// Largest table index tried before giving up on stabilization.
pub const DEFAULT_INDEX_CAP: usize = 24;

/// `C(n, k)`, zero whenever `k < 0` or `n < k`.
pub fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i128 / (i + 1) as i128;
    }
    acc as i64
}

/// `Σ (-1)^i e_i C(n+d-i, d-i)`.
pub fn hilbert_polynomial(e: &[i64], d: usize, n: i64) -> i64 {
    let d = d as i64;
    e.iter()
        .enumerate()
        .map(|(i, &ei)| {
            let i = i as i64;
            let s = if i % 2 == 0 { 1 } else { -1 };
            s * ei * binom(n + d - i, d - i)
        })
        .sum()
}

/// `ℓ(A/I^(n+1))` for `n = 0..=n_max`.
pub fn hilbert_samuel_values(i: &IdealHandle, n_max: usize) -> Result<Vec<LengthValue>> {
    (0..=n_max).map(|n| artinian_length(&i.power(n + 1)?)).collect()
}

fn solve_exact(mut a: Vec<Vec<BigRational>>, mut b: Vec<BigRational>) -> Option<Vec<BigRational>> {
    let n = b.len();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        b.swap(col, piv);
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = &a[r][col] / &a[col][col];
                for c in col..n {
                    let t = &f * &a[col][c];
                    a[r][c] -= t;
                }
                let t = &f * &b[col];
                b[r] -= t;
            }
        }
    }
    Some((0..n).map(|i| &b[i] / &a[i][i]).collect())
}

/// Fits `e_0..e_d` on the `d+1` values ending `window` entries before the end
/// of the table, checks the last `window` values, and returns the coefficients
/// with the postulation index.
pub fn hilbert_coefficients(values: &[u64], d: usize, window: usize) -> Result<(Vec<i64>, usize)> {
    let n_max = values.len() as i64 - 1;
    let first = n_max - window as i64 - d as i64;
    if first < 0 {
        return Err(Error::InsufficientWindow {
            index: values.len(),
        });
    }
    let di = d as i64;
    let rows: Vec<i64> = (first..=first + di).collect();
    let a = rows
        .iter()
        .map(|&n| {
            (0..=di)
                .map(|i| {
                    let s = if i % 2 == 0 { 1 } else { -1 };
                    BigRational::from_integer(BigInt::from(s * binom(n + di - i, di - i)))
                })
                .collect()
        })
        .collect();
    let b = rows
        .iter()
        .map(|&n| BigRational::from_integer(BigInt::from(values[n as usize])))
        .collect();
    let sol = solve_exact(a, b).ok_or(Error::NonIntegralFit)?;
    let e = sol
        .iter()
        .map(|x| {
            if x.is_integer() {
                x.to_integer().to_i64().ok_or(Error::NonIntegralFit)
            } else {
                Err(Error::NonIntegralFit)
            }
        })
        .collect::<Result<Vec<i64>>>()?;
    for n in first + di + 1..=n_max {
        if hilbert_polynomial(&e, d, n) != values[n as usize] as i64 {
            return Err(Error::InsufficientWindow { index: n as usize });
        }
    }
    let mut n0 = first as usize;
    while n0 > 0 && hilbert_polynomial(&e, d, n0 as i64 - 1) == values[n0 - 1] as i64 {
        n0 -= 1;
    }
    Ok((e, n0))
}

/// Coefficients of `(1-z)^(d+1) Σ L(t) z^t` up to the table length; each is exact.
pub fn numerator_prefix(values: &[u64], d: usize) -> Vec<i64> {
    let mut h: Vec<i64> = values.iter().map(|&v| v as i64).collect();
    for _ in 0..=d {
        for k in (1..h.len()).rev() {
            h[k] -= h[k - 1];
        }
    }
    h
}

/// Numerator `h(z)` with `HS(z) = h(z)/(1-z)^d`, accepted once `d + window`
/// zero coefficients follow the last nonzero one.
pub fn numerator_from_values(values: &[u64], d: usize, window: usize) -> Result<Vec<i64>> {
    let mut h = numerator_prefix(values, d);
    let last = h.iter().rposition(|&x| x != 0).unwrap_or(0);
    if h.len() - 1 - last < d + window {
        return Err(Error::InsufficientWindow { index: h.len() });
    }
    h.truncate(last + 1);
    Ok(h)
}

/// Series numerator of `I`, extending the value table until it stabilizes.
pub fn hilbert_series_numerator(i: &IdealHandle, d: usize, window: usize, cap: usize) -> Result<Vec<i64>> {
    let mut values = Vec::new();
    for n in 0..=cap {
        values.push(artinian_length(&i.power(n + 1)?)?.value);
        if let Ok(h) = numerator_from_values(&values, d, window) {
            return Ok(h);
        }
    }
    Err(Error::NoStabilization { cap })
}

/// `e_i = h^(i)(1)/i!` for `i = 0..=d`.
pub fn coefficients_from_numerator(h: &[i64], d: usize) -> Result<Vec<i64>> {
    if h.is_empty() || h.iter().sum::<i64>() == 0 {
        return Err(Error::BadNumerator);
    }
    Ok((0..=d as i64)
        .map(|i| {
            h.iter()
                .enumerate()
                .map(|(k, &hk)| hk * binom(k as i64, i))
                .sum()
        })
        .collect())
}

/// Degree of growth of `ℓ(A/𝔪^(n+1))`: the least `k` whose `k`-th difference
/// is constant on the last `window + 1` entries, stable under extending the table.
pub fn krull_dimension(ring: &RingPresentation) -> Result<usize> {
    if let Some(&d) = ring.dimension_cell().get() {
        return Ok(d);
    }
    let m = ring.maximal_ideal();
    let window = DEFAULT_WINDOW;
    let mut values: Vec<i64> = Vec::new();
    let mut last: Option<usize> = None;
    let mut n = 6;
    while n <= 16 {
        while values.len() <= n {
            values.push(artinian_length(&m.power(values.len() + 1)?)?.value as i64);
        }
        let k = growth_degree(&values, window);
        if let (Some(k), Some(prev)) = (k, last) {
            if k == prev {
                let _ = ring.dimension_cell().set(k);
                return Ok(k);
            }
        }
        last = k;
        n += 2;
    }
    Err(Error::NoStabilization { cap: 16 })
}

fn growth_degree(values: &[i64], window: usize) -> Option<usize> {
    let mut diff = values.to_vec();
    for k in 0..values.len() {
        if diff.len() < window + 1 {
            return None;
        }
        let tail = &diff[diff.len() - window - 1..];
        if tail.iter().all(|&x| x == tail[0]) {
            return Some(k);
        }
        diff = diff.windows(2).map(|w| w[1] - w[0]).collect();
    }
    None
}

/// Everything the Hilbert-Samuel function of `I` determines.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertData {
    pub dimension: usize,
    /// `ℓ(A/I^(n+1))`, `n = 0..=certified_up_to`
    pub values: Vec<u64>,
    /// `ℓ(I^t/I^(t+1))`
    pub hilbert_function: Vec<u64>,
    pub coefficients: Vec<i64>,
    /// coefficients recomputed from the numerator
    pub numerator_coefficients: Vec<i64>,
    pub postulation: usize,
    pub numerator: Vec<i64>,
    pub certified_up_to: usize,
}

impl HilbertData {
    pub fn two_path_agreement(&self) -> bool {
        self.coefficients == self.numerator_coefficients
    }

    /// `e_i` with `e_i = 0` beyond the dimension.
    pub fn e(&self, i: usize) -> i64 {
        self.coefficients.get(i).copied().unwrap_or(0)
    }
}

/// Extends the value table from `n_min` until both the coefficient fit and the
/// numerator are stable.
pub fn hilbert_data(i: &IdealHandle, n_min: usize) -> Result<HilbertData> {
    let dimension = krull_dimension(i.ring())?;
    let window = DEFAULT_WINDOW;
    let mut values = Vec::new();
    let mut n = n_min.max(dimension + window);
    loop {
        while values.len() <= n {
            values.push(artinian_length(&i.power(values.len() + 1)?)?.value);
        }
        let fit = hilbert_coefficients(&values, dimension, window);
        let num = numerator_from_values(&values, dimension, window);
        match (fit, num) {
            (Ok((coefficients, postulation)), Ok(numerator)) => {
                let numerator_coefficients = coefficients_from_numerator(&numerator, dimension)?;
                let hilbert_function = values
                    .iter()
                    .enumerate()
                    .map(|(t, &v)| if t == 0 { v } else { v - values[t - 1] })
                    .collect();
                return Ok(HilbertData {
                    dimension,
                    values,
                    hilbert_function,
                    coefficients,
                    numerator_coefficients,
                    postulation,
                    numerator,
                    certified_up_to: n,
                });
            }
            (Err(e), _) | (_, Err(e)) => {
                if !matches!(e, Error::InsufficientWindow { .. }) {
                    return Err(e);
                }
                if n >= DEFAULT_INDEX_CAP {
                    return Err(Error::NoStabilization { cap: DEFAULT_INDEX_CAP });
                }
                n += 1;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Field;

    #[test]
    fn binomial_convention() {
        assert_eq!(binom(5, 2), 10);
        assert_eq!(binom(2, 3), 0);
        assert_eq!(binom(3, -1), 0);
        assert_eq!(binom(0, 0), 1);
        assert_eq!(binom(-1, 0), 0);
    }

    #[test]
    fn values_in_the_plane() {
        let r = RingPresentation::regular(Field::Rational, &["x", "y"]);
        let m = r.maximal_ideal();
        let v: Vec<u64> = hilbert_samuel_values(&m, 3).unwrap().iter().map(|l| l.value).collect();
        assert_eq!(v, vec![1, 3, 6, 10]);
        let v: Vec<u64> = hilbert_samuel_values(&m.power(2).unwrap(), 2)
            .unwrap()
            .iter()
            .map(|l| l.value)
            .collect();
        // C(2n+3, 2)
        let closed: Vec<u64> = (0..3).map(|n| binom(2 * n + 3, 2) as u64).collect();
        assert_eq!(v, closed);
    }

    #[test]
    fn fits() {
        let reg: Vec<u64> = (0..8).map(|n| binom(n + 2, 2) as u64).collect();
        assert_eq!(hilbert_coefficients(&reg, 2, 3).unwrap(), (vec![1, 0, 0], 0));
        // 2n^2 + 5n + 3
        let sq: Vec<u64> = (0..8).map(|n| (2 * n * n + 5 * n + 3) as u64).collect();
        assert_eq!(hilbert_coefficients(&sq, 2, 3).unwrap(), (vec![4, 1, 0], 0));
        assert!(matches!(hilbert_coefficients(&sq[..4], 2, 3), Err(Error::InsufficientWindow { .. })));
        // a table that only postulates at its very end
        let mut late = reg.clone();
        late[7] += 1;
        assert!(matches!(hilbert_coefficients(&late, 2, 3), Err(Error::InsufficientWindow { index: 7 })));
    }

    #[test]
    fn numerators() {
        let sq: Vec<u64> = (0..10).map(|n| (2 * n * n + 5 * n + 3) as u64).collect();
        assert_eq!(numerator_from_values(&sq, 2, 3).unwrap(), vec![3, 1]);
        assert_eq!(coefficients_from_numerator(&[1], 2).unwrap(), vec![1, 0, 0]);
        assert_eq!(coefficients_from_numerator(&[1, 3, 0, 3, -1], 2).unwrap(), vec![6, 8, 3]);
        assert_eq!(coefficients_from_numerator(&[3, 1], 2).unwrap(), vec![4, 1, 0]);
        assert!(matches!(coefficients_from_numerator(&[1, -1], 1), Err(Error::BadNumerator)));
    }

    #[test]
    fn plane_data() {
        let r = RingPresentation::regular(Field::Rational, &["x", "y"]);
        assert_eq!(krull_dimension(&r).unwrap(), 2);
        let h = hilbert_data(&r.maximal_ideal(), 0).unwrap();
        assert_eq!(h.coefficients, vec![1, 0, 0]);
        assert_eq!(h.numerator, vec![1]);
        assert_eq!(h.postulation, 0);
        assert!(h.two_path_agreement());
        let h = hilbert_data(&r.maximal_ideal().power(2).unwrap(), 0).unwrap();
        assert_eq!(h.coefficients, vec![4, 1, 0]);
        assert_eq!(h.numerator, vec![3, 1]);
    }

    #[test]
    fn artinian_ring_has_dimension_zero() {
        let r = RingPresentation::parse(Field::Rational, &["x"], &["x^3"]).unwrap();
        assert_eq!(krull_dimension(&r).unwrap(), 0);
        let h = hilbert_data(&r.maximal_ideal(), 0).unwrap();
        assert_eq!(h.coefficients, vec![3]);
        assert_eq!(h.numerator, vec![1, 1, 1]);
    }
}
