//! Brute-force ground truth: partition predicates, window classes and
//! exhaustive enumerators.
//!
//! Nothing in this module depends on the recurrence engine. Every count it
//! produces comes from generating partitions and filtering them, so it can
//! be used as an independent oracle for the analytic side.

mod count;
mod general;
mod oracle;
mod window;

pub use count::{count_table, for_each_partition, CountTable, Side};
pub use general::{general_a_count, general_b_count, Extra, GeneralParams};
pub use oracle::{s_oracle, s_oracle_all, s_oracle_dfs_all};
pub use window::{WindowClass, WINDOW_CLASSES};

use crate::error::PartitionError;

/// A partition stored as weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Sorts `parts` into weakly decreasing order. Zero parts are rejected.
    pub fn new(mut parts: Vec<u32>) -> Result<Self, PartitionError> {
        if parts.contains(&0) {
            return Err(PartitionError::NonPositivePart);
        }
        parts.sort_unstable_by(|x, y| y.cmp(x));
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The partitioned number.
    pub fn total(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// `f_j`, the number of parts equal to `j`.
    pub fn multiplicity(&self, j: u32) -> usize {
        self.parts.iter().filter(|&&p| p == j).count()
    }

    pub fn is_valid_a(&self) -> bool {
        is_valid_a_parts(&self.parts)
    }

    pub fn is_valid_b(&self) -> bool {
        is_valid_b_parts(&self.parts)
    }

    /// `(mu, nu)` for the product side: parts `1, 2 (mod 6)` and parts
    /// `4, 5 (mod 6)`.
    pub fn profile_a(&self) -> (u32, u32) {
        profile_a_parts(&self.parts)
    }

    /// `(mu, nu)` for the difference-condition side. Multiples of 6 count
    /// towards both.
    pub fn profile_b(&self) -> (u32, u32) {
        profile_b_parts(&self.parts)
    }
}

/// Multiplicity table `f[j]` for `j` in `0..=max_part`.
fn multiplicities(parts: &[u32]) -> Vec<u8> {
    let max = parts.first().copied().unwrap_or(0) as usize;
    let mut f = vec![0u8; max + 1];
    for &p in parts {
        f[p as usize] = f[p as usize].saturating_add(1);
    }
    f
}

/// Distinct parts, each congruent to 1, 2, 4 or 5 mod 6. `parts` must be
/// weakly decreasing.
pub(crate) fn is_valid_a_parts(parts: &[u32]) -> bool {
    parts.iter().all(|p| matches!(p % 6, 1 | 2 | 4 | 5)) && parts.windows(2).all(|w| w[0] != w[1])
}

/// Repetition, gap and multiplicity conditions of the difference side.
/// `parts` must be weakly decreasing.
pub(crate) fn is_valid_b_parts(parts: &[u32]) -> bool {
    // only multiples of 6 repeat
    if parts.windows(2).any(|w| w[0] == w[1] && w[0] % 6 != 0) {
        return false;
    }
    // b_i - b_{i+2} >= 6, strictly when 6 | b_i
    for w in parts.windows(3) {
        let gap = w[0] - w[2];
        if gap < 6 || (gap == 6 && w[0] % 6 == 0) {
            return false;
        }
    }
    let f = multiplicities(parts);
    let at = |i: usize| f.get(i).copied().map_or(0, u32::from);
    // beyond the largest part every multiplicity vanishes
    let last_window = f.len() / 6 + 1;
    for j in 0..=last_window {
        let base = 6 * j;
        if at(base + 3) != 0 || at(base + 2) + at(base + 4) > 1 || at(base + 5) + at(base + 7) > 1 {
            return false;
        }
        if j >= 1 && at(base - 1) + at(base) + at(base + 6) + at(base + 7) > 3 {
            return false;
        }
    }
    true
}

pub(crate) fn profile_a_parts(parts: &[u32]) -> (u32, u32) {
    parts.iter().fold((0, 0), |(mu, nu), p| match p % 6 {
        1 | 2 => (mu + 1, nu),
        4 | 5 => (mu, nu + 1),
        _ => (mu, nu),
    })
}

pub(crate) fn profile_b_parts(parts: &[u32]) -> (u32, u32) {
    parts.iter().fold((0, 0), |(mu, nu), p| match p % 6 {
        0 => (mu + 1, nu + 1),
        1 | 2 => (mu + 1, nu),
        4 | 5 => (mu, nu + 1),
        _ => (mu, nu),
    })
}
