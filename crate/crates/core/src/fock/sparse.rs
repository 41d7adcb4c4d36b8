use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Sub};

use num_traits::Zero;

use crate::{Error, Result, C64};

/// Square complex matrix in coordinate form.
///
/// Entries are kept sorted by `(row, col)`, unique, and nonzero.
#[derive(Debug, Clone, PartialEq)]
pub struct SparseOperator {
    dim: usize,
    entries: Vec<(usize, usize, C64)>,
}

impl SparseOperator {
    /// Sums duplicate coordinates and drops exact zeros.
    ///
    /// Panics if an index is outside `dim`.
    pub fn from_triplets<I>(dim: usize, triplets: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, C64)>,
    {
        let mut acc: BTreeMap<(usize, usize), C64> = BTreeMap::new();
        for (r, c, v) in triplets {
            assert!(
                r < dim && c < dim,
                "entry ({r}, {c}) outside dimension {dim}"
            );
            *acc.entry((r, c)).or_insert_with(C64::zero) += v;
        }
        let entries = acc
            .into_iter()
            .filter(|(_, v)| !v.is_zero())
            .map(|((r, c), v)| (r, c, v))
            .collect();
        SparseOperator { dim, entries }
    }

    pub fn zero(dim: usize) -> Self {
        SparseOperator {
            dim,
            entries: Vec::new(),
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::diagonal((0..dim).map(|_| C64::new(1.0, 0.0)))
    }

    pub fn diagonal<I: IntoIterator<Item = C64>>(values: I) -> Self {
        let values: Vec<C64> = values.into_iter().collect();
        let dim = values.len();
        Self::from_triplets(dim, values.into_iter().enumerate().map(|(i, v)| (i, i, v)))
    }

    pub fn dimension(&self) -> usize {
        self.dim
    }

    pub fn triplets(&self) -> &[(usize, usize, C64)] {
        &self.entries
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, row: usize, col: usize) -> C64 {
        self.entries
            .binary_search_by(|&(r, c, _)| (r, c).cmp(&(row, col)))
            .map(|k| self.entries[k].2)
            .unwrap_or_else(|_| C64::zero())
    }

    pub fn diagonal_entries(&self) -> Vec<C64> {
        let mut d = vec![C64::zero(); self.dim];
        for &(r, c, v) in &self.entries {
            if r == c {
                d[r] = v;
            }
        }
        d
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let mut entries: Vec<_> = self
            .entries
            .iter()
            .map(|&(r, c, v)| (c, r, v.conj()))
            .collect();
        entries.sort_by_key(|&(r, c, _)| (r, c));
        SparseOperator {
            dim: self.dim,
            entries,
        }
    }

    pub fn scale(&self, k: C64) -> Self {
        Self::from_triplets(
            self.dim,
            self.entries.iter().map(|&(r, c, v)| (r, c, v * k)),
        )
    }

    pub fn matmul(&self, rhs: &SparseOperator) -> Self {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch in product");
        // Row starts of rhs for quick lookup of row k.
        let mut starts = vec![0usize; rhs.dim + 1];
        for &(r, _, _) in &rhs.entries {
            starts[r + 1] += 1;
        }
        for i in 0..rhs.dim {
            starts[i + 1] += starts[i];
        }
        let mut out = Vec::new();
        for &(i, k, a) in &self.entries {
            for &(_, j, b) in &rhs.entries[starts[k]..starts[k + 1]] {
                out.push((i, j, a * b));
            }
        }
        Self::from_triplets(self.dim, out)
    }

    /// `[self, rhs] = self·rhs − rhs·self`.
    pub fn commutator(&self, rhs: &SparseOperator) -> Self {
        &self.matmul(rhs) - &rhs.matmul(self)
    }

    pub fn anticommutator(&self, rhs: &SparseOperator) -> Self {
        &self.matmul(rhs) + &rhs.matmul(self)
    }

    pub fn apply(&self, state: &[C64]) -> Result<Vec<C64>> {
        if state.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: state.len(),
            });
        }
        let mut out = vec![C64::zero(); self.dim];
        for &(r, c, v) in &self.entries {
            out[r] += v * state[c];
        }
        Ok(out)
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.entries
            .iter()
            .fold(0.0, |m, &(_, _, v)| m.max(v.norm()))
    }

    /// Largest entry modulus among columns selected by `keep`.
    pub fn max_abs_in_columns(&self, keep: impl Fn(usize) -> bool) -> f64 {
        self.entries
            .iter()
            .filter(|&&(_, c, _)| keep(c))
            .fold(0.0, |m, &(_, _, v)| m.max(v.norm()))
    }

    /// `max |A − A†|`.
    pub fn hermiticity_defect(&self) -> f64 {
        (self - &self.adjoint()).max_abs()
    }

    /// Restriction to the leading `dim` basis states.
    pub fn truncate(&self, dim: usize) -> Self {
        let entries = self
            .entries
            .iter()
            .copied()
            .filter(|&(r, c, _)| r < dim && c < dim)
            .collect();
        SparseOperator {
            dim: dim.min(self.dim),
            entries,
        }
    }

    pub fn to_dense(&self) -> Vec<Vec<C64>> {
        let mut m = vec![vec![C64::zero(); self.dim]; self.dim];
        for &(r, c, v) in &self.entries {
            m[r][c] = v;
        }
        m
    }
}

impl Add for &SparseOperator {
    type Output = SparseOperator;

    fn add(self, rhs: &SparseOperator) -> SparseOperator {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch in sum");
        SparseOperator::from_triplets(self.dim, self.entries.iter().chain(&rhs.entries).copied())
    }
}

impl Sub for &SparseOperator {
    type Output = SparseOperator;

    fn sub(self, rhs: &SparseOperator) -> SparseOperator {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch in difference");
        let neg = rhs.entries.iter().map(|&(r, c, v)| (r, c, -v));
        SparseOperator::from_triplets(self.dim, self.entries.iter().copied().chain(neg))
    }
}

impl Mul for &SparseOperator {
    type Output = SparseOperator;

    fn mul(self, rhs: &SparseOperator) -> SparseOperator {
        self.matmul(rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn dense_mul(a: &[Vec<C64>], b: &[Vec<C64>]) -> Vec<Vec<C64>> {
        let n = a.len();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum())
                    .collect()
            })
            .collect()
    }

    #[test]
    fn duplicates_merge_and_zeros_drop() {
        let op = SparseOperator::from_triplets(
            3,
            [
                (0, 1, c(1.0, 0.0)),
                (0, 1, c(2.0, 1.0)),
                (2, 2, c(1.0, 0.0)),
                (2, 2, c(-1.0, 0.0)),
            ],
        );
        assert_eq!(op.triplets(), &[(0, 1, c(3.0, 1.0))]);
        assert_eq!(op.get(0, 1), c(3.0, 1.0));
        assert_eq!(op.get(2, 2), c(0.0, 0.0));
    }

    #[test]
    #[should_panic]
    fn out_of_range_entry_panics() {
        SparseOperator::from_triplets(2, [(2, 0, c(1.0, 0.0))]);
    }

    #[test]
    fn product_matches_dense() {
        let a = SparseOperator::from_triplets(
            3,
            [
                (0, 0, c(1.0, 2.0)),
                (0, 2, c(-1.0, 0.0)),
                (1, 0, c(0.5, 0.0)),
                (2, 1, c(0.0, 3.0)),
            ],
        );
        let b = SparseOperator::from_triplets(
            3,
            [
                (0, 1, c(2.0, 0.0)),
                (1, 1, c(1.0, -1.0)),
                (2, 0, c(0.0, 1.0)),
                (2, 2, c(4.0, 0.0)),
            ],
        );
        assert_eq!(
            (&a * &b).to_dense(),
            dense_mul(&a.to_dense(), &b.to_dense())
        );
    }

    #[test]
    fn adjoint_and_hermiticity() {
        let a = SparseOperator::from_triplets(2, [(0, 1, c(1.0, 2.0)), (1, 1, c(3.0, 0.0))]);
        let h = &a + &a.adjoint();
        assert_eq!(h.hermiticity_defect(), 0.0);
        assert_eq!(a.adjoint().get(1, 0), c(1.0, -2.0));
        assert!(a.hermiticity_defect() > 0.0);
    }

    #[test]
    fn apply_checks_dimension() {
        let id = SparseOperator::identity(2);
        assert_eq!(
            id.apply(&[c(1.0, 0.0)]),
            Err(Error::DimensionMismatch {
                expected: 2,
                found: 1
            })
        );
        assert_eq!(
            id.apply(&[c(1.0, 0.0), c(0.0, 1.0)]).unwrap(),
            vec![c(1.0, 0.0), c(0.0, 1.0)]
        );
    }
}
