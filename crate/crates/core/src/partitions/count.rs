use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde_json::Value;

use super::{is_valid_a_parts, is_valid_b_parts, profile_a_parts, profile_b_parts};
use crate::error::PartitionError;
use crate::poly::TriPoly;

/// Which side of the refined identity to enumerate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    /// Distinct parts congruent to 1, 2, 4, 5 mod 6.
    A,
    /// Partitions satisfying the repetition, gap and multiplicity conditions.
    B,
}

/// Calls `visit` on every partition of `n` with parts at most `max_part`,
/// parts in weakly decreasing order.
pub fn for_each_partition<F: FnMut(&[u32])>(n: u32, max_part: u32, mut visit: F) {
    fn go<F: FnMut(&[u32])>(rest: u32, max: u32, buf: &mut Vec<u32>, visit: &mut F) {
        if rest == 0 {
            visit(buf);
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            buf.push(p);
            go(rest - p, p, buf, visit);
            buf.pop();
        }
    }
    let mut buf = Vec::with_capacity(n as usize);
    go(n, max_part, &mut buf, &mut visit);
}

/// Exact counts keyed by `(mu, nu, N)`. Absent keys count zero; stored
/// counts are always positive.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CountTable {
    // keyed (N, mu, nu) so iteration is the serialization order
    entries: BTreeMap<(u32, u32, u32), BigUint>,
}

impl CountTable {
    pub fn new() -> Self {
        CountTable::default()
    }

    pub fn get(&self, mu: u32, nu: u32, n: u32) -> BigUint {
        self.entries.get(&(n, mu, nu)).cloned().unwrap_or_default()
    }

    pub fn add(&mut self, mu: u32, nu: u32, n: u32, count: impl Into<BigUint>) {
        let count = count.into();
        if count.is_zero() {
            return;
        }
        *self.entries.entry((n, mu, nu)).or_default() += count;
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `(mu, nu, N, count)` sorted by `(N, mu, nu)`.
    pub fn iter(&self) -> impl Iterator<Item = (u32, u32, u32, &BigUint)> {
        self.entries.iter().map(|(&(n, mu, nu), c)| (mu, nu, n, c))
    }

    /// Sum over `mu` and `nu` at fixed `N`.
    pub fn total(&self, n: u32) -> BigUint {
        self.entries
            .range((n, 0, 0)..=(n, u32::MAX, u32::MAX))
            .map(|(_, c)| c)
            .sum()
    }

    pub fn merge(&mut self, other: CountTable) {
        for ((n, mu, nu), c) in other.entries {
            self.add(mu, nu, n, c);
        }
    }

    /// Reads a generating polynomial as a count table. Fails when a
    /// coefficient is negative or an exponent is negative.
    pub fn from_poly(p: &TriPoly) -> Result<CountTable, PartitionError> {
        let mut t = CountTable::new();
        for (e, c) in p.iter() {
            if c.is_negative() || e.q < 0 {
                return Err(PartitionError::Parameter(format!(
                    "not a counting series: term {c}*a^{}*b^{}*q^{}",
                    e.a, e.b, e.q
                )));
            }
            t.add(e.a, e.b, e.q as u32, c.magnitude().clone());
        }
        Ok(t)
    }

    pub fn to_poly(&self) -> TriPoly {
        TriPoly::from_terms(
            self.iter()
                .map(|(mu, nu, n, c)| (BigInt::from(c.clone()), mu, nu, i64::from(n))),
        )
    }

    /// Keys on which the two tables disagree, as `(mu, nu, N, self, other)`
    /// in serialization order.
    pub fn diff(&self, other: &CountTable) -> Vec<(u32, u32, u32, BigUint, BigUint)> {
        let keys: std::collections::BTreeSet<_> =
            self.entries.keys().chain(other.entries.keys()).collect();
        keys.into_iter()
            .filter_map(|&(n, mu, nu)| {
                let (l, r) = (self.get(mu, nu, n), other.get(mu, nu, n));
                (l != r).then_some((mu, nu, n, l, r))
            })
            .collect()
    }

    /// Number of distinct keys present in either table.
    pub fn union_len(&self, other: &CountTable) -> usize {
        self.entries
            .keys()
            .chain(other.entries.keys())
            .collect::<std::collections::BTreeSet<_>>()
            .len()
    }

    /// CSV with header `mu,nu,N,count`, rows sorted by `(N, mu, nu)`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("mu,nu,N,count\n");
        for (mu, nu, n, c) in self.iter() {
            let _ = writeln!(out, "{mu},{nu},{n},{c}");
        }
        out
    }

    /// JSON array of `[mu, nu, N, count-as-decimal-string]`.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.iter()
                .map(|(mu, nu, n, c)| serde_json::json!([mu, nu, n, c.to_string()]))
                .collect(),
        )
    }
}

/// Exhaustive `(mu, nu, N)` counts for every `N <= n_max`: all partitions
/// of each `N` are generated and filtered by the side's predicate.
pub fn count_table(side: Side, n_max: u32) -> CountTable {
    (0..=n_max)
        .into_par_iter()
        .map(|n| {
            let mut counts: BTreeMap<(u32, u32), u64> = BTreeMap::new();
            for_each_partition(n, n, |parts| {
                let hit = match side {
                    Side::A => is_valid_a_parts(parts).then(|| profile_a_parts(parts)),
                    Side::B => is_valid_b_parts(parts).then(|| profile_b_parts(parts)),
                };
                if let Some(key) = hit {
                    *counts.entry(key).or_default() += 1;
                }
            });
            let mut t = CountTable::new();
            for ((mu, nu), c) in counts {
                t.add(mu, nu, n, c);
            }
            t
        })
        .reduce(CountTable::new, |mut a, b| {
            a.merge(b);
            a
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts_match_p_of_n() {
        // p(0..=12)
        let expected = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77];
        for (n, &want) in expected.iter().enumerate() {
            let mut seen = 0;
            for_each_partition(n as u32, n as u32, |_| seen += 1);
            assert_eq!(seen, want, "p({n})");
        }
    }

    #[test]
    fn small_tables() {
        let a = count_table(Side::A, 6);
        assert_eq!(a.get(0, 1, 5), BigUint::from(1u32));
        assert_eq!(a.get(1, 1, 5), BigUint::from(1u32));
        assert_eq!(a.get(1, 1, 6), BigUint::from(2u32));
        let b = count_table(Side::B, 6);
        assert_eq!(b.get(1, 1, 6), BigUint::from(2u32));
        assert_eq!(a, b);
        assert!(b.get(3, 3, 6).is_zero());
    }

    #[test]
    fn empty_partition_is_counted_once() {
        for side in [Side::A, Side::B] {
            let t = count_table(side, 0);
            assert_eq!(t.len(), 1);
            assert_eq!(t.get(0, 0, 0), BigUint::from(1u32));
        }
    }

    #[test]
    fn serializations() {
        let b = count_table(Side::B, 6);
        let csv = b.to_csv();
        assert!(csv.starts_with("mu,nu,N,count\n0,0,0,1\n1,0,1,1\n"));
        assert!(csv.lines().any(|l| l == "1,1,6,2"));
        let json = b.to_json();
        assert_eq!(json[0], serde_json::json!([0, 0, 0, "1"]));
    }

    #[test]
    fn poly_conversion() {
        let t = count_table(Side::A, 10);
        assert_eq!(CountTable::from_poly(&t.to_poly()).unwrap(), t);
        assert!(CountTable::from_poly(&TriPoly::term(-1, 0, 0, 1)).is_err());
        assert!(CountTable::from_poly(&TriPoly::term(1, 0, 0, -1)).is_err());
    }

    #[test]
    fn diff_reports_disagreements() {
        let mut x = CountTable::new();
        x.add(1, 1, 6, 2u32);
        let mut y = CountTable::new();
        y.add(1, 1, 6, 1u32);
        y.add(0, 1, 4, 1u32);
        let d = x.diff(&y);
        assert_eq!(d.len(), 2);
        assert_eq!((d[0].0, d[0].1, d[0].2), (0, 1, 4));
        assert_eq!(x.union_len(&y), 2);
        assert_eq!(y.total(6), BigUint::from(1u32));
    }
}
