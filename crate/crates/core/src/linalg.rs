//! Sparse exact linear algebra: vectors keyed by an ordered index, row
//! echelon bases and left kernels.

use std::collections::BTreeMap;

use crate::scalar::{Field, Scalar};

/// Sorted by key, no stored zeros.
pub type SparseVec<K> = Vec<(K, Scalar)>;

/// `x + c * y`.
pub fn axpy<K: Ord + Clone>(x: &[(K, Scalar)], c: &Scalar, y: &[(K, Scalar)]) -> SparseVec<K> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j >= y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i >= x.len() || (j < y.len() && y[j].0 < x[i].0);
        if take_x {
            out.push(x[i].clone());
            i += 1;
        } else if take_y {
            let v = c * &y[j].1;
            if !v.is_zero() {
                out.push((y[j].0.clone(), v));
            }
            j += 1;
        } else {
            let v = &x[i].1 + &(c * &y[j].1);
            if !v.is_zero() {
                out.push((x[i].0.clone(), v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn scale<K: Clone>(x: &[(K, Scalar)], c: &Scalar) -> SparseVec<K> {
    if c.is_zero() {
        return Vec::new();
    }
    x.iter().map(|(k, v)| (k.clone(), c * v)).collect()
}

/// Builds a sparse vector from unsorted entries, summing duplicates.
pub fn collect<K: Ord + Clone>(entries: impl IntoIterator<Item = (K, Scalar)>) -> SparseVec<K> {
    let mut map: BTreeMap<K, Scalar> = BTreeMap::new();
    for (k, v) in entries {
        match map.get_mut(&k) {
            Some(acc) => *acc = &*acc + &v,
            None => {
                map.insert(k, v);
            }
        }
    }
    map.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

/// A row echelon basis of a subspace. Rows are monic at their leading key.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Echelon<K: Ord> {
    rows: BTreeMap<K, SparseVec<K>>,
}

impl<K: Ord + Clone> Default for Echelon<K> {
    fn default() -> Self {
        Self::new()
    }
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn new() -> Self {
        Echelon { rows: BTreeMap::new() }
    }

    /// Wraps rows that are already monic at their distinct leading keys.
    pub fn from_rows(rows: impl IntoIterator<Item = (K, SparseVec<K>)>) -> Self {
        Echelon { rows: rows.into_iter().collect() }
    }

    pub fn into_rows(self) -> Vec<(K, SparseVec<K>)> {
        self.rows.into_iter().collect()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, k: &K) -> bool {
        self.rows.contains_key(k)
    }

    pub fn pivots(&self) -> impl Iterator<Item = &K> {
        self.rows.keys()
    }

    /// Eliminates leading terms until the leading key is not a pivot.
    pub fn reduce_leading(&self, v: SparseVec<K>) -> SparseVec<K> {
        let mut v = v;
        while let Some((k, c)) = v.first() {
            match self.rows.get(k) {
                Some(row) => {
                    let c = -c;
                    v = axpy(&v, &c, row);
                }
                None => break,
            }
        }
        v
    }

    /// Eliminates every pivot key from `v`.
    pub fn reduce_full(&self, v: SparseVec<K>) -> SparseVec<K> {
        let mut v = v;
        let mut start = 0;
        loop {
            let hit = v[start..]
                .iter()
                .position(|(k, _)| self.rows.contains_key(k))
                .map(|p| p + start);
            let Some(pos) = hit else { break };
            let (k, c) = v[pos].clone();
            let c = -&c;
            v = axpy(&v, &c, &self.rows[&k]);
            // entries before `pos` are untouched since rows lead with their pivot
            start = pos;
        }
        v
    }

    /// Adds `v` to the span. Returns whether it was independent.
    pub fn insert(&mut self, v: SparseVec<K>) -> bool {
        let v = self.reduce_leading(v);
        match v.first() {
            None => false,
            Some((k, c)) => {
                let k = k.clone();
                let inv = c.inv();
                self.rows.insert(k, scale(&v, &inv));
                true
            }
        }
    }

    pub fn contains(&self, v: SparseVec<K>) -> bool {
        self.reduce_leading(v).is_empty()
    }

    /// Back-substitutes so that every row vanishes at all other pivots.
    pub fn into_reduced(self) -> Vec<(K, SparseVec<K>)> {
        let keys: Vec<K> = self.rows.keys().rev().cloned().collect();
        let mut done = Echelon::new();
        for k in keys {
            let row = self.rows[&k].clone();
            let head = row[0].clone();
            let reduced = done.reduce_full(row[1..].to_vec());
            let mut full = vec![head];
            full.extend(reduced);
            done.rows.insert(k, full);
        }
        done.rows.into_iter().collect()
    }

    pub fn rows(&self) -> impl Iterator<Item = (&K, &SparseVec<K>)> {
        self.rows.iter()
    }
}

/// Basis of `{ c : sum_i c_i rows[i] = 0 }`, each vector indexed by row number.
pub fn left_kernel<K: Ord + Clone>(field: Field, rows: &[SparseVec<K>]) -> Vec<SparseVec<usize>> {
    let mut pivots: BTreeMap<K, (SparseVec<K>, SparseVec<usize>)> = BTreeMap::new();
    let mut kernel = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        let mut v = row.clone();
        let mut combo: SparseVec<usize> = vec![(i, field.one())];
        while let Some((k, c)) = v.first() {
            match pivots.get(k) {
                Some((prow, pcombo)) => {
                    let c = -c;
                    combo = axpy(&combo, &c, pcombo);
                    v = axpy(&v, &c, prow);
                }
                None => break,
            }
        }
        match v.first() {
            None => kernel.push(combo),
            Some((k, c)) => {
                let inv = c.inv();
                let k = k.clone();
                pivots.insert(k, (scale(&v, &inv), scale(&combo, &inv)));
            }
        }
    }
    kernel
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(entries: &[(u32, i64)]) -> SparseVec<u32> {
        collect(entries.iter().map(|&(k, c)| (k, Field::Rational.from_i64(c))))
    }

    #[test]
    fn axpy_cancels() {
        let x = v(&[(0, 1), (2, 3)]);
        let y = v(&[(0, 1), (1, 1)]);
        let z = axpy(&x, &Field::Rational.from_i64(-1), &y);
        assert_eq!(z, v(&[(1, -1), (2, 3)]));
    }

    #[test]
    fn echelon_rank_and_reduction() {
        let mut e = Echelon::new();
        assert!(e.insert(v(&[(0, 2), (1, 2)])));
        assert!(e.insert(v(&[(1, 1), (2, 1)])));
        assert!(!e.insert(v(&[(0, 1), (2, -1)])));
        assert_eq!(e.rank(), 2);
        let red = e.into_reduced();
        assert_eq!(red[0].1, v(&[(0, 1), (2, -1)]));
        assert_eq!(red[1].1, v(&[(1, 1), (2, 1)]));
    }

    #[test]
    fn kernel_of_dependent_rows() {
        let rows = vec![v(&[(0, 1), (1, 1)]), v(&[(1, 1)]), v(&[(0, 2), (1, 3)])];
        let ker = left_kernel(Field::Rational, &rows);
        assert_eq!(ker.len(), 1);
        // 2*r0 + 1*r1 - r2 = 0
        let combo = &ker[0];
        let mut acc: SparseVec<u32> = Vec::new();
        for (i, c) in combo {
            acc = axpy(&acc, c, &rows[*i]);
        }
        assert!(acc.is_empty());
    }
}
