use super::printed::{Correction, Transcription};
use super::SeriesMemo;
use crate::poly::TriPoly;

fn poly(terms: &[(i64, u32, u32, i64)]) -> TriPoly {
    TriPoly::from_terms(terms.iter().copied())
}

/// `factor * series`, short-circuiting on a vanishing series so that
/// factors with negative `q` exponents never meet a base-case zero.
fn times(factor: &TriPoly, series: &TriPoly) -> TriPoly {
    if series.is_zero() {
        TriPoly::zero()
    } else {
        factor * series
    }
}

fn product(factors: &[TriPoly]) -> TriPoly {
    factors.iter().fold(TriPoly::one(), |acc, f| &acc * f)
}

/// `1 + a q^{6n-5} + a q^{6n-4} + b q^{6n-2} + b q^{6n-1}`.
pub fn head_factor(n: i64) -> TriPoly {
    poly(&[
        (1, 0, 0, 0),
        (1, 1, 0, 6 * n - 5),
        (1, 1, 0, 6 * n - 4),
        (1, 0, 1, 6 * n - 2),
        (1, 0, 1, 6 * n - 1),
    ])
}

/// `1 + a q^{6n+1} + a q^{6n+2} + b q^{6n+4} + b q^{6n+5}`.
pub fn tail_factor(n: i64) -> TriPoly {
    poly(&[
        (1, 0, 0, 0),
        (1, 1, 0, 6 * n + 1),
        (1, 1, 0, 6 * n + 2),
        (1, 0, 1, 6 * n + 4),
        (1, 0, 1, 6 * n + 5),
    ])
}

/// Correction polynomial `p_i(n, a, b, q)` read from `rules`, one monomial
/// per transcribed term.
pub fn p_poly_from(rules: &Transcription, which: Correction, n: i64) -> TriPoly {
    TriPoly::from_terms(
        rules
            .correction(which)
            .iter()
            .map(|t| (t.coeff, t.a, t.b, t.q.at(n))),
    )
}

/// Correction polynomial `p_i(n, a, b, q)` as published.
pub fn p_poly(which: Correction, n: i64) -> TriPoly {
    p_poly_from(&Transcription::printed(), which, n)
}

/// `J(n)`; identically zero for `n >= 0`.
pub fn j_poly(n: i64, memo: &mut SeriesMemo) -> TriPoly {
    let s9 = memo.get(n, 9);
    let s15_1 = memo.get(n - 1, 15);
    let s9_1 = memo.get(n - 1, 9);
    let s9_2 = memo.get(n - 2, 9);
    let s9_3 = memo.get(n - 3, 9);

    let one_minus = TriPoly::one_minus_q(6 * n);
    let shifted = poly(&[
        (1, 0, 0, 0),
        (1, 1, 0, 6 * n + 1),
        (1, 1, 0, 6 * n + 2),
        (1, 2, 0, 6 * n + 3),
        (1, 0, 1, 6 * n + 4),
        (1, 0, 1, 6 * n + 5),
        (1, 1, 1, 6 * n + 5),
        (1, 1, 1, 6 * n + 6),
        (1, 1, 1, 6 * n + 7),
        (1, 0, 2, 6 * n + 9),
    ])
    .mul_term(1, 0, 0, 6 * n);
    let second = poly(&[
        (1, 2, 0, 0),
        (1, 1, 1, 2),
        (1, 1, 1, 3),
        (1, 1, 1, 4),
        (1, 2, 1, 4),
        (1, 2, 1, 5),
        (1, 0, 2, 6),
        (1, 1, 2, 7),
        (1, 1, 2, 8),
    ])
    .mul_term(1, 1, 1, 18 * n - 3);

    let mut out = TriPoly::clone(&s9);
    out -= times(&(&one_minus * &tail_factor(n)), &s15_1);
    out -= times(&shifted, &s9_1);
    out += times(&(&one_minus * &second), &s9_2);
    let third = product(&[
        TriPoly::term(1, 3, 3, 24 * n - 12),
        one_minus,
        TriPoly::one_minus_q(6 * n - 6),
    ]);
    out += times(&third, &s9_3);
    out
}

/// `K(n)`; identically zero for `n >= 0`.
pub fn k_poly(n: i64, memo: &mut SeriesMemo) -> TriPoly {
    let s9 = memo.get(n, 9);
    let s15 = memo.get(n, 15);
    let s15_1 = memo.get(n - 1, 15);
    let s9_1 = memo.get(n - 1, 9);
    let s9_2 = memo.get(n - 2, 9);

    let one_minus = TriPoly::one_minus_q(6 * n);
    let window = poly(&[
        (1, 0, 0, 0),
        (1, 1, 0, 1),
        (1, 1, 0, 2),
        (1, 0, 1, 4),
        (1, 0, 1, 5),
        (1, 1, 1, 6),
    ]);

    let mut out = &*s9 - &*s15;
    out += times(&one_minus.mul_term(1, 1, 1, 6 * n + 6), &s15_1);
    out += times(&window.mul_term(1, 1, 1, 12 * n + 6), &s9_1);
    out -= times(&one_minus.mul_term(1, 3, 3, 18 * n + 6), &s9_2);
    out
}

/// `a^2 b q^{12n+19} J(n) - K(n+1) + a q^{6n+13}(1 + a q^{6n+2} + b q^{6n+4}
/// + b q^{6n+5}) K(n)`, which vanishes identically.
pub fn link_residual(n: i64, memo: &mut SeriesMemo) -> TriPoly {
    let j = j_poly(n, memo);
    let k_next = k_poly(n + 1, memo);
    let k = k_poly(n, memo);
    let factor = poly(&[
        (1, 0, 0, 0),
        (1, 1, 0, 6 * n + 2),
        (1, 0, 1, 6 * n + 4),
        (1, 0, 1, 6 * n + 5),
    ])
    .mul_term(1, 1, 0, 6 * n + 13);
    j.mul_term(1, 2, 1, 12 * n + 19) - k_next + times(&factor, &k)
}

/// Left minus right side of the fourth-order recurrence for `S_n(9)`.
pub fn lemma2_residual(n: i64, memo: &mut SeriesMemo) -> TriPoly {
    let rules = memo.transcription().clone();
    let s = |m: &mut SeriesMemo, k: i64| m.get(n - k, 9);
    let (s0, s1, s2, s3, s4) = (s(memo, 0), s(memo, 1), s(memo, 2), s(memo, 3), s(memo, 4));

    let om = |k: i64| TriPoly::one_minus_q(k);
    let lhs = times(&head_factor(n), &s0);
    let mut rhs = times(&p_poly_from(&rules, Correction::P1, n), &s1);
    rhs += times(&(om(6 * n) * p_poly_from(&rules, Correction::P2, n)), &s2);
    rhs += times(
        &product(&[
            p_poly_from(&rules, Correction::P3, n),
            om(6 * n),
            om(6 * n - 6),
        ]),
        &s3,
    );
    let fourth = product(&[
        TriPoly::term(1, 4, 4, 30 * n - 36),
        om(6 * n),
        om(6 * n - 6),
        om(6 * n - 12),
        tail_factor(n),
    ]);
    rhs += times(&fourth, &s4);
    lhs - rhs
}

/// Left minus right side of the fourth-order recurrence for `S_n(15)`, whose
/// coefficients are `p_i(n-1)` with `a -> a q^6`, `b -> b q^6`.
pub fn lemma3_residual(n: i64, memo: &mut SeriesMemo) -> TriPoly {
    let rules = memo.transcription().clone();
    let s = |m: &mut SeriesMemo, k: i64| m.get(n - k, 15);
    let (s0, s1, s2, s3, s4) = (s(memo, 0), s(memo, 1), s(memo, 2), s(memo, 3), s(memo, 4));

    let om = |k: i64| TriPoly::one_minus_q(k);
    let p = |which| p_poly_from(&rules, which, n - 1).shift(6, 6);
    let lhs = times(&head_factor(n), &s0);
    let mut rhs = times(&p(Correction::P1), &s1);
    rhs += times(&(om(6 * n - 6) * p(Correction::P2)), &s2);
    rhs += times(
        &product(&[om(6 * n - 6), om(6 * n - 12), p(Correction::P3)]),
        &s3,
    );
    let fourth = product(&[
        TriPoly::term(1, 4, 4, 30 * n - 18),
        tail_factor(n),
        om(6 * n - 6),
        om(6 * n - 12),
        om(6 * n - 18),
    ]);
    rhs += times(&fourth, &s4);
    lhs - rhs
}

/// `(1+aq)(1+aq^2)(1+bq^4)(1+bq^5)`.
fn first_window() -> TriPoly {
    product(&[
        poly(&[(1, 0, 0, 0), (1, 1, 0, 1)]),
        poly(&[(1, 0, 0, 0), (1, 1, 0, 2)]),
        poly(&[(1, 0, 0, 0), (1, 0, 1, 4)]),
        poly(&[(1, 0, 0, 0), (1, 0, 1, 5)]),
    ])
}

/// `S_n(15) - (1+aq)(1+aq^2)(1+bq^4)(1+bq^5) S_{n-1}(9)|_{a -> aq^6, b -> bq^6}`.
pub fn lemma4_residual(n: i64, memo: &mut SeriesMemo) -> TriPoly {
    let s15 = memo.get(n, 15);
    let s9 = memo.get(n - 1, 9);
    &*s15 - times(&first_window(), &s9.shift(6, 6))
}

/// `prod_{m >= 0} (1+aq^{6m+1})(1+aq^{6m+2})(1+bq^{6m+4})(1+bq^{6m+5})`
/// truncated at `q^q_max`. Factors whose first nontrivial term already
/// exceeds `q_max` are skipped.
pub fn product_truncated(q_max: i64) -> TriPoly {
    let mut out = TriPoly::one();
    let mut base = 0;
    while 6 * base < q_max {
        for (ea, eb, r) in [(1, 0, 1), (1, 0, 2), (0, 1, 4), (0, 1, 5)] {
            let e = 6 * base + r;
            if e <= q_max {
                let factor = TriPoly::one() + TriPoly::term(1, ea, eb, e);
                out = out.mul_truncated(&factor, q_max);
            }
        }
        base += 1;
    }
    out.truncate(q_max)
}
