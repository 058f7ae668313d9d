//! The two-parameter families `A_{lambda,k,a}` and `B_{lambda,k,a}` of
//! the Schur-type theorems, plus the extra multiplicity restrictions
//! that define the `B^0_{4,3,3}` and `B^0_{5,3,3}` variants.

use super::count::for_each_partition;
use crate::error::PartitionError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GeneralParams {
    pub lambda: u32,
    pub k: u32,
    pub a: u32,
}

impl GeneralParams {
    pub fn new(lambda: u32, k: u32, a: u32) -> Result<Self, PartitionError> {
        if lambda == 0 || k == 0 || a == 0 {
            return Err(PartitionError::Parameter(format!(
                "lambda, k and a must be positive (got {lambda}, {k}, {a})"
            )));
        }
        Ok(GeneralParams { lambda, k, a })
    }

    /// `lambda/2 <= a <= k` and `k >= lambda`, the range in which the
    /// general theorem is known to hold.
    pub fn check_theorem_range(&self) -> Result<(), PartitionError> {
        let GeneralParams { lambda, k, a } = *self;
        if lambda > 2 * a || a > k || k < lambda {
            return Err(PartitionError::Parameter(format!(
                "(lambda, k, a) = ({lambda}, {k}, {a}) violates lambda/2 <= a <= k, k >= lambda"
            )));
        }
        Ok(())
    }

    /// `(2k - lambda + 1)(lambda + 1)`, the modulus of the forbidden residues.
    fn modulus(&self) -> Result<u32, PartitionError> {
        let width = 2 * i64::from(self.k) - i64::from(self.lambda) + 1;
        if width <= 0 {
            return Err(PartitionError::Parameter(format!(
                "2k - lambda + 1 must be positive (lambda={}, k={})",
                self.lambda, self.k
            )));
        }
        Ok(width as u32 * (self.lambda + 1))
    }
}

/// Additional multiplicity restrictions layered on top of `B_{lambda,k,a}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Extra {
    None,
    /// Requires `lambda = 4`.
    B0_433,
    /// Requires `lambda = 5`.
    B0_533,
}

impl Extra {
    fn required_lambda(self) -> Option<u32> {
        match self {
            Extra::None => None,
            Extra::B0_433 => Some(4),
            Extra::B0_533 => Some(5),
        }
    }
}

/// Product-side predicate, dispatched on the parity of `lambda`.
fn is_general_a(gp: &GeneralParams, modulus: u32, parts: &[u32]) -> bool {
    let lambda = gp.lambda;
    let (repeat_mod, forbidden) = if lambda.is_multiple_of(2) {
        let r = (i64::from(gp.a) - i64::from(lambda / 2)) * i64::from(lambda + 1);
        (lambda + 1, r)
    } else {
        let half = lambda.div_ceil(2);
        if parts.iter().any(|p| p % (2 * lambda + 2) == lambda + 1) {
            return false;
        }
        let r = (2 * i64::from(gp.a) - i64::from(lambda)) * i64::from(half);
        (half, r)
    };
    let m = i64::from(modulus);
    let excluded = [0, forbidden.rem_euclid(m), (-forbidden).rem_euclid(m)];
    if parts
        .iter()
        .any(|&p| excluded.contains(&(i64::from(p) % m)))
    {
        return false;
    }
    !parts
        .windows(2)
        .any(|w| w[0] == w[1] && w[0] % repeat_mod != 0)
}

/// Difference-side predicate of `B_{lambda,k,a}` (without extras).
fn is_general_b(gp: &GeneralParams, parts: &[u32]) -> bool {
    let GeneralParams { lambda, k, a } = *gp;
    let m = lambda + 1;
    if parts.windows(2).any(|w| w[0] == w[1] && w[0] % m != 0) {
        return false;
    }
    let span = k as usize - 1;
    for i in 0..parts.len().saturating_sub(span) {
        let gap = parts[i] - parts[i + span];
        if gap < m || (gap == m && parts[i].is_multiple_of(m)) {
            return false;
        }
    }
    let f = |j: u32| parts.iter().filter(|&&p| p == j).count() as i64;
    for j in 1..=lambda.div_ceil(2) {
        let s: i64 = (j..=lambda - j + 1).map(f).sum();
        if s > i64::from(a) - i64::from(j) {
            return false;
        }
    }
    let low: i64 = (1..=lambda + 1).map(f).sum();
    low < i64::from(a)
}

fn passes_extra(extra: Extra, parts: &[u32]) -> bool {
    let max = parts.first().copied().unwrap_or(0) as usize;
    let mut f = vec![0u32; max + 8];
    for &p in parts {
        f[p as usize] += 1;
    }
    let at = |i: usize| f.get(i).copied().unwrap_or(0);
    match extra {
        Extra::None => true,
        Extra::B0_533 => (0..=max / 6 + 1).all(|j| {
            let b = 6 * j;
            at(b + 3) == 0
                && at(b + 2) + at(b + 4) <= 1
                && at(b + 5) + at(b + 7) <= 1
                && (j == 0 || at(b - 1) + at(b) + at(b + 6) + at(b + 7) <= 3)
        }),
        Extra::B0_433 => (0..=max / 5 + 1).all(|j| {
            let b = 5 * j;
            at(b + 2) + at(b + 3) <= 1
                && at(b + 4) + at(b + 6) <= 1
                && (j == 0 || at(b - 1) + at(b) + at(b + 5) + at(b + 6) <= 3)
        }),
    }
}

/// `A_{lambda,k,a}(n)` by enumerating every partition of `n`.
pub fn general_a_count(gp: &GeneralParams, n: u32) -> Result<u64, PartitionError> {
    let modulus = gp.modulus()?;
    let mut count = 0;
    for_each_partition(n, n, |parts| {
        if is_general_a(gp, modulus, parts) {
            count += 1;
        }
    });
    Ok(count)
}

/// `B_{lambda,k,a}(n)`, optionally with the `B^0` restrictions, by
/// enumerating every partition of `n`.
pub fn general_b_count(gp: &GeneralParams, n: u32, extra: Extra) -> Result<u64, PartitionError> {
    if let Some(l) = extra.required_lambda() {
        if gp.lambda != l {
            return Err(PartitionError::Parameter(format!(
                "{extra:?} requires lambda = {l}, got {}",
                gp.lambda
            )));
        }
    }
    let mut count = 0;
    for_each_partition(n, n, |parts| {
        if is_general_b(gp, parts) && passes_extra(extra, parts) {
            count += 1;
        }
    });
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gp(l: u32, k: u32, a: u32) -> GeneralParams {
        GeneralParams::new(l, k, a).unwrap()
    }

    fn collect_a(g: &GeneralParams, n: u32) -> Vec<Vec<u32>> {
        let m = g.modulus().unwrap();
        let mut out = Vec::new();
        for_each_partition(n, n, |p| {
            if is_general_a(g, m, p) {
                out.push(p.to_vec());
            }
        });
        out
    }

    fn collect_b(g: &GeneralParams, n: u32, extra: Extra) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        for_each_partition(n, n, |p| {
            if is_general_b(g, p) && passes_extra(extra, p) {
                out.push(p.to_vec());
            }
        });
        out
    }

    #[test]
    fn witnesses_for_533_at_seven() {
        let g = gp(5, 3, 3);
        assert_eq!(collect_a(&g, 7), vec![vec![7], vec![5, 2], vec![4, 2, 1]]);
        assert_eq!(
            collect_b(&g, 7, Extra::B0_533),
            vec![vec![7], vec![6, 1], vec![5, 2]]
        );
        assert_eq!(general_a_count(&g, 7).unwrap(), 3);
        assert_eq!(general_b_count(&g, 7, Extra::B0_533).unwrap(), 3);
    }

    #[test]
    fn empty_partition_counts_once() {
        for g in [gp(5, 3, 3), gp(2, 2, 2), gp(3, 3, 2)] {
            assert_eq!(general_a_count(&g, 0).unwrap(), 1);
            assert_eq!(general_b_count(&g, 0, Extra::None).unwrap(), 1);
        }
    }

    #[test]
    fn odd_lambda_three_is_distinct_odd_parts() {
        let g = gp(3, 2, 2);
        assert_eq!(collect_a(&g, 4), vec![vec![3, 1]]);
        assert_eq!(general_a_count(&g, 4).unwrap(), 1);
    }

    #[test]
    fn schur_case_small_values() {
        // partitions into parts +-1 mod 6: 1,1,1,2,2,2,3,4,... (OEIS A003105)
        let g = gp(2, 2, 2);
        let want = [1, 1, 1, 1, 1, 2, 2, 3, 3, 3, 4];
        for (n, &w) in want.iter().enumerate() {
            assert_eq!(general_a_count(&g, n as u32).unwrap(), w, "A n={n}");
            assert_eq!(
                general_b_count(&g, n as u32, Extra::None).unwrap(),
                w,
                "B n={n}"
            );
        }
    }

    #[test]
    fn extra_requires_matching_lambda() {
        assert!(general_b_count(&gp(5, 3, 3), 5, Extra::B0_433).is_err());
        assert!(general_b_count(&gp(4, 3, 3), 5, Extra::B0_533).is_err());
        assert!(general_b_count(&gp(4, 3, 3), 5, Extra::B0_433).is_ok());
    }

    #[test]
    fn parameter_validation() {
        assert!(GeneralParams::new(0, 1, 1).is_err());
        assert!(gp(2, 3, 2).check_theorem_range().is_ok());
        assert!(gp(5, 3, 3).check_theorem_range().is_err());
        assert!(gp(4, 4, 1).check_theorem_range().is_err());
        assert!(general_a_count(&gp(7, 1, 4), 3).is_err());
    }
}
