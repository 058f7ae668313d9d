//! The analytic side: `S_n(j)` from the sixteen recurrences, the vanishing
//! combinations `J(n)` and `K(n)`, and residuals of the fourth-order
//! recurrences and the product form.

mod identities;
mod printed;

use std::sync::Arc;

pub use identities::{
    head_factor, j_poly, k_poly, lemma2_residual, lemma3_residual, lemma4_residual, link_residual,
    p_poly, p_poly_from, product_truncated, tail_factor,
};
pub use printed::{Correction, Mutation, PrintedTerm, QExp, RecTerm, Transcription, Var};

use crate::poly::TriPoly;

/// Reference-transparent cache of `S_n(j)`.
///
/// Levels are filled bottom-up: all sixteen values at level `n` are computed
/// together once every lower level exists, `j` ascending. Values are never
/// overwritten.
#[derive(Clone, Debug)]
pub struct SeriesMemo {
    rules: Arc<Transcription>,
    levels: Vec<Vec<Arc<TriPoly>>>,
    one: Arc<TriPoly>,
    zero: Arc<TriPoly>,
}

impl Default for SeriesMemo {
    fn default() -> Self {
        SeriesMemo::new()
    }
}

impl SeriesMemo {
    /// Memo over the identities as published.
    pub fn new() -> Self {
        SeriesMemo::with_transcription(Transcription::printed())
    }

    pub fn with_transcription(rules: Transcription) -> Self {
        SeriesMemo {
            rules: Arc::new(rules),
            levels: Vec::new(),
            one: Arc::new(TriPoly::one()),
            zero: Arc::new(TriPoly::zero()),
        }
    }

    pub fn transcription(&self) -> &Transcription {
        &self.rules
    }

    /// Number of fully computed levels (`n = 0 .. computed_levels()`).
    pub fn computed_levels(&self) -> usize {
        self.levels.len()
    }

    /// `S_n(j)`. `S_{-1}(j) = 1` and `S_n(j) = 0` for `n < -1`.
    pub fn get(&mut self, n: i64, j: u8) -> Arc<TriPoly> {
        assert!(j < 16, "window class {j} out of range");
        if n == -1 {
            return Arc::clone(&self.one);
        }
        if n < -1 {
            return Arc::clone(&self.zero);
        }
        while self.levels.len() <= n as usize {
            self.fill_next_level();
        }
        Arc::clone(&self.levels[n as usize][usize::from(j)])
    }

    /// Read-only lookup for already computed entries and base cases.
    fn peek(&self, n: i64, j: u8) -> &TriPoly {
        match n {
            -1 => &self.one,
            n if n < -1 => &self.zero,
            n => &self.levels[n as usize][usize::from(j)],
        }
    }

    fn fill_next_level(&mut self) {
        let n = self.levels.len() as i64;
        let mut level: Vec<Arc<TriPoly>> = Vec::with_capacity(16);
        for (j, terms) in self.rules.steps.iter().enumerate() {
            let mut value = match level.last() {
                Some(prev) if j > 0 => TriPoly::clone(prev),
                _ => TriPoly::zero(),
            };
            for t in terms {
                // lag >= 1, so the source level is already complete
                let source = self.peek(n - t.lag, t.source);
                value += source.mul_term(t.coeff, t.a, t.b, t.q.at(n));
            }
            level.push(Arc::new(value));
        }
        self.levels.push(level);
    }
}

/// `S_n(j)` via the recurrences, memoized in `memo`.
pub fn s_rec(n: i64, j: u8, memo: &mut SeriesMemo) -> Arc<TriPoly> {
    memo.get(n, j)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn base_cases() {
        let mut m = SeriesMemo::new();
        assert_eq!(*m.get(-1, 9), TriPoly::one());
        assert!(m.get(-2, 15).is_zero());
        assert!(m.get(-5, 0).is_zero());
        assert_eq!(m.computed_levels(), 0);
    }

    #[test]
    fn first_level_values() {
        let mut m = SeriesMemo::new();
        assert_eq!(*m.get(0, 0), TriPoly::one());
        assert_eq!(
            *m.get(0, 1),
            TriPoly::from_terms([(1, 0, 0, 0), (1, 1, 0, 1)])
        );
        let s15 = m.get(0, 15);
        assert_eq!(s15.len(), 15);
        assert_eq!(s15.coeff(1, 1, 6), BigInt::from(2));
        assert_eq!(s15.coeff(2, 2, 12), BigInt::from(1));
    }

    #[test]
    fn values_are_stable_across_fills() {
        let mut m = SeriesMemo::new();
        let early = m.get(1, 7);
        m.get(3, 15);
        assert_eq!(early, m.get(1, 7));
    }

    #[test]
    fn outputs_are_counting_series() {
        let mut m = SeriesMemo::new();
        for n in 0..4 {
            for j in 0..16 {
                assert!(m.get(n, j).is_counting_series(), "S_{n}({j})");
            }
        }
    }
}
