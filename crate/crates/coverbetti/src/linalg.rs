//! Exact sparse rank computation.
//!
//! Rank over the rationals runs as fraction-free integer elimination:
//! rows are combined by cross-multiplying with the pivot's leading
//! coefficient and renormalized by their content, so every intermediate
//! row stays an integer row. An i128 pass handles everything that fits;
//! on checked-arithmetic overflow the same loop reruns with big integers.
//! Rank over GF(p) uses the identical loop shape on u64 residues.

use num_bigint::BigInt;
use num_integer::Integer;

/// Sparse row: (column, coefficient) sorted by column, no zero coefficients.
pub(crate) type Row<T> = Vec<(u32, T)>;

trait Entry: Clone {
    fn from_i64(v: i64) -> Self;
    /// px*x - fy*y, None on overflow.
    fn cross(px: &Self, x: &Self, fy: &Self, y: &Self) -> Option<Self>;
    fn is_zero(&self) -> bool;
    fn is_unit(&self) -> bool;
    fn gcd(&self, other: &Self) -> Self;
    fn div_exact(&self, g: &Self) -> Self;
}

impl Entry for i128 {
    fn from_i64(v: i64) -> Self {
        v as i128
    }
    fn cross(px: &Self, x: &Self, fy: &Self, y: &Self) -> Option<Self> {
        px.checked_mul(*x)?.checked_sub(fy.checked_mul(*y)?)
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, g: &Self) -> Self {
        self / g
    }
}

impl Entry for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn cross(px: &Self, x: &Self, fy: &Self, y: &Self) -> Option<Self> {
        Some(px * x - fy * y)
    }
    fn is_zero(&self) -> bool {
        *self == BigInt::ZERO
    }
    fn is_unit(&self) -> bool {
        self.magnitude() == &num_bigint::BigUint::from(1u32)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, g: &Self) -> Self {
        self / g
    }
}

/// Divide a row by the gcd of its entries.
fn normalize<T: Entry>(row: &mut Row<T>) {
    let mut g: Option<T> = None;
    for (_, v) in row.iter() {
        g = Some(match g {
            None => v.clone(),
            Some(acc) => acc.gcd(v),
        });
    }
    if let Some(g) = g {
        for (_, v) in row.iter_mut() {
            *v = v.div_exact(&g);
        }
    }
}

/// piv_lead * row - row_lead * piv; the shared leading column cancels.
fn combine<T: Entry>(row: &Row<T>, piv: &Row<T>) -> Option<Row<T>> {
    let lead = row[0].0;
    debug_assert_eq!(lead, piv[0].0);
    let a = row[0].1.clone();
    let b = piv[0].1.clone();
    let mut out: Row<T> = Vec::with_capacity(row.len() + piv.len());
    let zero = T::from_i64(0);
    let (mut i, mut j) = (1usize, 1usize);
    while i < row.len() || j < piv.len() {
        let ci = row.get(i).map(|e| e.0);
        let cj = piv.get(j).map(|e| e.0);
        let (col, x, y) = match (ci, cj) {
            (Some(ci), Some(cj)) if ci == cj => {
                let r = (ci, row[i].1.clone(), piv[j].1.clone());
                i += 1;
                j += 1;
                r
            }
            (Some(ci), cj) if cj.is_none_or(|cj| ci < cj) => {
                let r = (ci, row[i].1.clone(), zero.clone());
                i += 1;
                r
            }
            _ => {
                let r = (cj.unwrap(), zero.clone(), piv[j].1.clone());
                j += 1;
                r
            }
        };
        let v = T::cross(&b, &x, &a, &y)?;
        if !v.is_zero() {
            out.push((col, v));
        }
    }
    normalize(&mut out);
    Some(out)
}

/// Elimination over an integral domain. Rows are bucketed by leading
/// column; the pivot in each bucket is the row with a unit lead where one
/// exists, then fewest nonzeros, oldest first, which keeps the run
/// deterministic, the fill-in low, and the coefficients from growing.
fn eliminate<T: Entry>(ncols: usize, rows: Vec<Row<T>>) -> Option<usize> {
    let mut buckets: Vec<Vec<(usize, Row<T>)>> = vec![Vec::new(); ncols];
    for (id, mut row) in rows.into_iter().enumerate() {
        normalize(&mut row);
        if let Some(&(c, _)) = row.first() {
            buckets[c as usize].push((id, row));
        }
    }
    let mut rank = 0;
    for col in 0..ncols {
        let mut cand = std::mem::take(&mut buckets[col]);
        if cand.is_empty() {
            continue;
        }
        let piv_at = cand
            .iter()
            .enumerate()
            .min_by_key(|(_, (id, row))| (!row[0].1.is_unit(), row.len(), *id))
            .map(|(k, _)| k)
            .unwrap();
        let (_, piv) = cand.swap_remove(piv_at);
        rank += 1;
        for (id, row) in cand {
            let new = combine(&row, &piv)?;
            if let Some(&(c, _)) = new.first() {
                buckets[c as usize].push((id, new));
            }
        }
    }
    Some(rank)
}

/// Exact rank over the rationals of an integer matrix given by sparse rows.
pub(crate) fn rank_rational(ncols: usize, rows: &[Row<i64>]) -> usize {
    let as_i128: Vec<Row<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&(c, v)| (c, v as i128)).collect())
        .collect();
    if let Some(rank) = eliminate(ncols, as_i128) {
        return rank;
    }
    let as_big: Vec<Row<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&(c, v)| (c, BigInt::from(v))).collect())
        .collect();
    eliminate(ncols, as_big).expect("big integer elimination cannot overflow")
}

/// Rank over GF(p), p an odd or even prime below 2^31.
pub(crate) fn rank_mod_p(ncols: usize, rows: &[Row<i64>], p: u64) -> usize {
    debug_assert!((2..1 << 31).contains(&p));
    let reduced: Vec<Row<u64>> = rows
        .iter()
        .map(|r| {
            r.iter()
                .filter_map(|&(c, v)| {
                    let m = v.rem_euclid(p as i64) as u64;
                    (m != 0).then_some((c, m))
                })
                .collect()
        })
        .collect();
    let mut buckets: Vec<Vec<(usize, Row<u64>)>> = vec![Vec::new(); ncols];
    for (id, row) in reduced.into_iter().enumerate() {
        if let Some(&(c, _)) = row.first() {
            buckets[c as usize].push((id, row));
        }
    }
    let mut rank = 0;
    for col in 0..ncols {
        let mut cand = std::mem::take(&mut buckets[col]);
        if cand.is_empty() {
            continue;
        }
        let piv_at = cand
            .iter()
            .enumerate()
            .min_by_key(|(_, (id, row))| (row.len(), *id))
            .map(|(k, _)| k)
            .unwrap();
        let (_, piv) = cand.swap_remove(piv_at);
        rank += 1;
        for (id, row) in cand {
            let a = row[0].1;
            let b = piv[0].1;
            // b*row - a*piv mod p, merged over the sorted columns
            let mut out: Row<u64> = Vec::with_capacity(row.len() + piv.len());
            let (mut i, mut j) = (1usize, 1usize);
            while i < row.len() || j < piv.len() {
                let ci = row.get(i).map(|e| e.0);
                let cj = piv.get(j).map(|e| e.0);
                let (col2, x, y) = match (ci, cj) {
                    (Some(ci), Some(cj)) if ci == cj => {
                        let r = (ci, row[i].1, piv[j].1);
                        i += 1;
                        j += 1;
                        r
                    }
                    (Some(ci), cj) if cj.is_none_or(|cj| ci < cj) => {
                        let r = (ci, row[i].1, 0);
                        i += 1;
                        r
                    }
                    _ => {
                        let r = (cj.unwrap(), 0, piv[j].1);
                        j += 1;
                        r
                    }
                };
                let v = (b * x % p + p - a * y % p) % p;
                if v != 0 {
                    out.push((col2, v));
                }
            }
            if let Some(&(c, _)) = out.first() {
                buckets[c as usize].push((id, out));
            }
        }
    }
    rank
}

/// Deterministic trial-division primality for moduli below 2^31.
pub(crate) fn is_prime_u64(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut d = 3u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}
