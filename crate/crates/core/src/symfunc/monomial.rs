//! Sparse monomials `x_1^{a_1} x_2^{a_2} ...` with finitely many nonzero
//! exponents.

use crate::partitions::Partition;
use smallvec::SmallVec;
use std::fmt;

/// A monomial, stored as the exponent vector of `x_1, x_2, ...` with trailing
/// zeros trimmed. The empty vector is the unit monomial.
///
/// The derived ordering is lexicographic on exponent vectors (missing entries
/// read as zero), which is exactly the monomial order used by the
/// fundamental-theorem elimination in `e_expand`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial {
    exps: SmallVec<[u16; 8]>,
}

impl Monomial {
    pub fn unit() -> Self {
        Monomial { exps: SmallVec::new() }
    }

    /// The single variable `x_i` (1-based index).
    pub fn var(i: usize) -> Self {
        assert!(i >= 1, "variable indices are 1-based");
        let mut exps = SmallVec::new();
        exps.resize(i, 0);
        exps[i - 1] = 1;
        Monomial { exps }
    }

    /// From an exponent vector indexed by variable position (0-based slot
    /// `i` holds the exponent of `x_{i+1}`).
    pub fn from_exponents(exps: impl Into<SmallVec<[u16; 8]>>) -> Self {
        let mut exps = exps.into();
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Monomial { exps }
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    /// Exponent of `x_i` (1-based).
    pub fn exponent(&self, i: usize) -> u16 {
        self.exps.get(i - 1).copied().unwrap_or(0)
    }

    /// Largest variable index with nonzero exponent; 0 for the unit.
    pub fn max_var(&self) -> usize {
        self.exps.len()
    }

    pub fn is_unit(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| u32::from(e)).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (long, short) = if self.exps.len() >= other.exps.len() {
            (&self.exps, &other.exps)
        } else {
            (&other.exps, &self.exps)
        };
        let mut exps = long.clone();
        for (i, &e) in short.iter().enumerate() {
            exps[i] = exps[i].checked_add(e).expect("exponent overflow");
        }
        Monomial { exps }
    }

    pub fn pow(&self, n: u16) -> Monomial {
        let exps = self
            .exps
            .iter()
            .map(|&e| e.checked_mul(n).expect("exponent overflow"))
            .collect();
        Monomial { exps }
    }

    /// True when the exponent vector is weakly decreasing, i.e. the monomial
    /// is the lexicographic leader of its symmetric orbit.
    pub fn is_weakly_decreasing(&self) -> bool {
        self.exps.windows(2).all(|w| w[0] >= w[1])
    }

    /// The partition obtained by sorting the exponents in decreasing order.
    pub fn sorted_type(&self) -> Partition {
        Partition::from_composition(self.exps.iter().map(|&e| u32::from(e)).collect())
    }

    /// Exponents rearranged by a permutation of the first `n` variables:
    /// slot `i` of the result holds the exponent of `x_{perm[i]+1}`.
    pub fn permuted(&self, perm: &[usize]) -> Monomial {
        let mut exps: SmallVec<[u16; 8]> = SmallVec::new();
        exps.resize(perm.len(), 0);
        for (i, &p) in perm.iter().enumerate() {
            exps[i] = self.exps.get(p).copied().unwrap_or(0);
        }
        Monomial::from_exponents(exps)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}
