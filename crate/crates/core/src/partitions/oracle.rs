//! Brute-force generating polynomials of the window-restricted partitions.
//!
//! `S_n(j)` counts partitions satisfying the difference-side conditions with
//! all parts at most `6n+6` whose top window `[6n+1, 6n+6]` has class at most
//! `j`. Two independent enumerations are provided: one walks every tuple of
//! window classes, the other grows partitions part by part.

use std::collections::HashMap;

use rayon::prelude::*;

use super::window::{WindowClass, WINDOW_CLASSES};
use super::{is_valid_b_parts, profile_b_parts};
use crate::error::PartitionError;
use crate::poly::TriPoly;

type Tally = HashMap<(u32, u32, u32), u64>;

/// Per-class tallies to cumulative polynomials: entry `j` sums classes `0..=j`.
fn accumulate(per_class: Vec<Tally>) -> Vec<TriPoly> {
    let mut out = Vec::with_capacity(16);
    let mut running = TriPoly::zero();
    for tally in per_class {
        running += TriPoly::from_terms(
            tally
                .into_iter()
                .map(|((mu, nu, n), c)| (c, mu, nu, i64::from(n))),
        );
        out.push(running.clone());
    }
    out
}

fn base_case(n: i64) -> Option<Vec<TriPoly>> {
    match n {
        -1 => Some(vec![TriPoly::one(); 16]),
        n if n < -1 => Some(vec![TriPoly::zero(); 16]),
        _ => None,
    }
}

/// `S_n(j)` for all sixteen `j`, by enumerating every class tuple
/// `(c_0, ..., c_n)` and keeping the flattened partitions that pass the
/// difference-side predicate.
pub fn s_oracle_all(n: i64) -> Vec<TriPoly> {
    if let Some(base) = base_case(n) {
        return base;
    }
    let top = n as u32;
    let per_class: Vec<Tally> = (0..16u8)
        .into_par_iter()
        .map(|top_class| {
            let mut tally = Tally::new();
            // digits[i] is the class of window top-1-i
            let mut digits = vec![0usize; top as usize];
            let mut parts = Vec::with_capacity(2 * (top as usize + 1));
            loop {
                parts.clear();
                parts.extend(
                    WINDOW_CLASSES[top_class as usize]
                        .iter()
                        .map(|p| p + 6 * top),
                );
                for (i, &d) in digits.iter().enumerate() {
                    let window = top - 1 - i as u32;
                    parts.extend(WINDOW_CLASSES[d].iter().map(|p| p + 6 * window));
                }
                if is_valid_b_parts(&parts) {
                    let (mu, nu) = profile_b_parts(&parts);
                    *tally.entry((mu, nu, parts.iter().sum())).or_default() += 1;
                }
                // odometer step
                let mut k = 0;
                while k < digits.len() && digits[k] == 15 {
                    digits[k] = 0;
                    k += 1;
                }
                if k == digits.len() {
                    break;
                }
                digits[k] += 1;
            }
            tally
        })
        .collect();
    accumulate(per_class)
}

/// `S_n(j)` via class-tuple enumeration. `j` above 15 is clamped.
pub fn s_oracle(n: i64, j: u8) -> TriPoly {
    s_oracle_all(n).swap_remove(usize::from(j.min(15)))
}

/// Second enumeration path: depth-first growth of weakly decreasing parts
/// bounded by `6n+6`, then classification of the top window.
///
/// A prefix that violates the difference-side conditions can never be
/// completed to a valid partition (each condition only looks at consecutive
/// parts or at multiplicities), so invalid branches are cut.
pub fn s_oracle_dfs_all(n: i64) -> Result<Vec<TriPoly>, PartitionError> {
    if let Some(base) = base_case(n) {
        return Ok(base);
    }
    let top = n as u32;

    fn go(buf: &mut Vec<u32>, top: u32, per_class: &mut [Tally], err: &mut Option<PartitionError>) {
        if err.is_some() {
            return;
        }
        let window: Vec<u32> = buf.iter().copied().take_while(|&p| p > 6 * top).collect();
        match WindowClass::classify(top, &window) {
            Ok(c) => {
                let (mu, nu) = profile_b_parts(buf);
                *per_class[c.index() as usize]
                    .entry((mu, nu, buf.iter().sum()))
                    .or_default() += 1;
            }
            Err(e) => {
                *err = Some(e);
                return;
            }
        }
        let next_max = *buf.last().unwrap_or(&(6 * top + 6));
        for p in (1..=next_max).rev() {
            buf.push(p);
            if is_valid_b_parts(buf) {
                go(buf, top, per_class, err);
            }
            buf.pop();
        }
    }

    let mut per_class = vec![Tally::new(); 16];
    let mut err = None;
    let mut buf = Vec::new();
    go(&mut buf, top, &mut per_class, &mut err);
    match err {
        Some(e) => Err(e),
        None => Ok(accumulate(per_class)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn base_cases() {
        for j in 0..16 {
            assert_eq!(s_oracle(-1, j), TriPoly::one());
            assert!(s_oracle(-2, j).is_zero());
        }
    }

    #[test]
    fn first_window_is_the_four_factor_product() {
        let f = |ea, eb, eq| TriPoly::one() + TriPoly::term(1, ea, eb, eq);
        let product = f(1, 0, 1) * f(1, 0, 2) * f(0, 1, 4) * f(0, 1, 5);
        let s = s_oracle_all(0);
        assert_eq!(s[15], product);
        assert_eq!(s[15].coeff(1, 1, 6), BigInt::from(2));
        assert_eq!(s[0], TriPoly::one());
    }

    #[test]
    fn two_paths_agree() {
        for n in 0..=2 {
            assert_eq!(s_oracle_all(n), s_oracle_dfs_all(n).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn monotone_in_top_class() {
        let s = s_oracle_all(2);
        for j in 1..16 {
            let diff = &s[j] - &s[j - 1];
            assert!(diff.is_zero() || diff.is_counting_series(), "j = {j}");
        }
    }
}
