use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::{Error, Result};

/// Occupation numbers `(n₁, n₂, n₃, n₄)`.
pub type Occupation = [u32; 4];

/// Largest Fock space [`FockSpace::new`] will build.
pub const DEFAULT_MAX_DIMENSION: usize = 1_000_000;

/// A bosonic mode label `r ∈ {1, 2, 3, 4}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mode(u8);

impl Mode {
    pub const ALL: [Mode; 4] = [Mode(1), Mode(2), Mode(3), Mode(4)];

    pub fn new(r: usize) -> Result<Self> {
        match r {
            1..=4 => Ok(Mode(r as u8)),
            _ => Err(Error::BadMode(r)),
        }
    }

    /// The 1-based label.
    pub fn label(self) -> usize {
        self.0 as usize
    }

    /// The 0-based slot in an [`Occupation`].
    pub fn slot(self) -> usize {
        self.0 as usize - 1
    }
}

/// Occupation-number basis with a total-quanta cutoff.
///
/// States are ordered by total quanta, then lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FockSpace {
    cutoff: usize,
    basis: Vec<Occupation>,
    index: BTreeMap<Occupation, usize>,
}

/// `C(cutoff + 4, 4)`, or `None` on overflow.
fn dimension_for(cutoff: usize) -> Option<usize> {
    let n = cutoff as u128;
    let d = (n + 1)
        .checked_mul(n + 2)?
        .checked_mul(n + 3)?
        .checked_mul(n + 4)?
        / 24;
    usize::try_from(d).ok()
}

impl FockSpace {
    pub fn new(cutoff: usize) -> Result<Self> {
        Self::with_max_dimension(cutoff, DEFAULT_MAX_DIMENSION)
    }

    pub fn with_max_dimension(cutoff: usize, max_dimension: usize) -> Result<Self> {
        let too_large = Error::CutoffTooLarge {
            cutoff,
            max_dimension,
        };
        let dim = dimension_for(cutoff).ok_or(too_large)?;
        if dim > max_dimension || cutoff > u32::MAX as usize {
            return Err(too_large);
        }
        let mut basis = Vec::with_capacity(dim);
        for total in 0..=cutoff as u32 {
            for n1 in 0..=total {
                for n2 in 0..=total - n1 {
                    for n3 in 0..=total - n1 - n2 {
                        basis.push([n1, n2, n3, total - n1 - n2 - n3]);
                    }
                }
            }
        }
        debug_assert_eq!(basis.len(), dim);
        let index = basis.iter().enumerate().map(|(i, occ)| (*occ, i)).collect();
        Ok(FockSpace {
            cutoff,
            basis,
            index,
        })
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Occupation] {
        &self.basis
    }

    pub fn state(&self, i: usize) -> Occupation {
        self.basis[i]
    }

    pub fn index_of(&self, occ: &Occupation) -> Option<usize> {
        self.index.get(occ).copied()
    }

    pub fn vacuum(&self) -> usize {
        0
    }

    pub fn total_quanta_of(&self, i: usize) -> usize {
        self.basis[i].iter().map(|&n| n as usize).sum()
    }

    /// States whose total quanta is strictly below the cutoff, where one
    /// application of a creator stays inside the space.
    pub fn is_safe(&self, i: usize) -> bool {
        self.total_quanta_of(i) < self.cutoff
    }
}
