//! Exact sparse polynomials in `a`, `b`, `q` with a signed `q` exponent.
//!
//! Every generating function handled by the crate is a [`TriPoly`]: a finite
//! map from an exponent triple to a non-zero arbitrary precision integer.
//! The exponent of `a` counts parts of one residue family, the exponent of
//! `b` counts the other, and the exponent of `q` is the partitioned number.
//! The `q` exponent is signed because some correction polynomials carry
//! negative powers of `q` for small indices.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::Value;

use crate::error::PolyError;

/// Exponent triple of a monomial `a^a b^b q^q`.
///
/// Field order matters: the derived ordering is the canonical term order,
/// ascending by `q`, then `a`, then `b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Exponents {
    pub q: i64,
    pub a: u32,
    pub b: u32,
}

impl Exponents {
    pub fn new(a: u32, b: u32, q: i64) -> Self {
        Exponents { q, a, b }
    }

    fn mul(self, other: Exponents) -> Exponents {
        Exponents {
            q: self.q + other.q,
            a: self.a + other.a,
            b: self.b + other.b,
        }
    }
}

/// A single stored term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monomial {
    pub coeff: BigInt,
    pub exps: Exponents,
}

/// Sparse polynomial in `a`, `b` (non-negative exponents) and `q` (signed
/// exponent) with exact integer coefficients.
///
/// No stored coefficient is ever zero, so structural equality is
/// mathematical equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct TriPoly {
    terms: BTreeMap<Exponents, BigInt>,
}

impl TriPoly {
    pub fn zero() -> Self {
        TriPoly::default()
    }

    pub fn one() -> Self {
        TriPoly::term(1, 0, 0, 0)
    }

    /// Single term `c * a^ea * b^eb * q^eq`; the zero polynomial when `c = 0`.
    pub fn term(c: impl Into<BigInt>, ea: u32, eb: u32, eq: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Exponents::new(ea, eb, eq), c);
        }
        TriPoly { terms }
    }

    /// Checked constructor taking signed exponents for `a` and `b`.
    pub fn monomial(c: impl Into<BigInt>, ea: i64, eb: i64, eq: i64) -> Result<Self, PolyError> {
        let ea = u32::try_from(ea).map_err(|_| PolyError::NegativeExponent {
            var: 'a',
            value: ea,
        })?;
        let eb = u32::try_from(eb).map_err(|_| PolyError::NegativeExponent {
            var: 'b',
            value: eb,
        })?;
        Ok(TriPoly::term(c, ea, eb, eq))
    }

    /// Builds a polynomial from `(coeff, e_a, e_b, e_q)` tuples, merging
    /// coinciding exponent triples.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (C, u32, u32, i64)>,
        C: Into<BigInt>,
    {
        let mut p = TriPoly::zero();
        for (c, a, b, q) in terms {
            p.add_term(Exponents::new(a, b, q), c.into());
        }
        p
    }

    /// `1 - q^k`, the factor that appears throughout the recurrences.
    pub fn one_minus_q(k: i64) -> Self {
        TriPoly::one() - TriPoly::term(1, 0, 0, k)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = Monomial> + '_ {
        self.terms.iter().map(|(e, c)| Monomial {
            coeff: c.clone(),
            exps: *e,
        })
    }

    /// Coefficient of `a^mu b^nu q^n`; zero when absent.
    pub fn coeff(&self, mu: i64, nu: i64, n: i64) -> BigInt {
        match (u32::try_from(mu), u32::try_from(nu)) {
            (Ok(a), Ok(b)) => self
                .terms
                .get(&Exponents::new(a, b, n))
                .cloned()
                .unwrap_or_else(BigInt::zero),
            _ => BigInt::zero(),
        }
    }

    pub fn min_q(&self) -> Option<i64> {
        self.terms.keys().map(|e| e.q).min()
    }

    pub fn max_q(&self) -> Option<i64> {
        self.terms.keys().map(|e| e.q).max()
    }

    /// True when every coefficient is positive and every `q` exponent is
    /// non-negative, i.e. the polynomial can be a generating function.
    pub fn is_counting_series(&self) -> bool {
        self.terms.iter().all(|(e, c)| e.q >= 0 && c.is_positive())
    }

    fn add_term(&mut self, e: Exponents, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Multiplies by a single term without building an intermediate.
    pub fn mul_term(&self, c: impl Into<BigInt>, ea: u32, eb: u32, eq: i64) -> TriPoly {
        let c = c.into();
        if c.is_zero() || self.is_zero() {
            return TriPoly::zero();
        }
        let shift = Exponents::new(ea, eb, eq);
        let terms = self
            .terms
            .iter()
            .map(|(e, v)| (e.mul(shift), v * &c))
            .collect();
        TriPoly { terms }
    }

    /// Substitutes `a -> a q^s` and `b -> b q^t`.
    pub fn shift(&self, s: i64, t: i64) -> TriPoly {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let q = e.q + s * i64::from(e.a) + t * i64::from(e.b);
                (Exponents::new(e.a, e.b, q), c.clone())
            })
            .collect();
        TriPoly { terms }
    }

    /// Drops every term whose `q` exponent exceeds `q_max`.
    pub fn truncate(&self, q_max: i64) -> TriPoly {
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| e.q <= q_max)
            .map(|(e, c)| (*e, c.clone()))
            .collect();
        TriPoly { terms }
    }

    /// Product truncated at `q_max`, skipping pairs that cannot survive.
    pub fn mul_truncated(&self, other: &TriPoly, q_max: i64) -> TriPoly {
        let mut out = TriPoly::zero();
        let Some(other_min) = other.min_q() else {
            return out;
        };
        for (e1, c1) in &self.terms {
            if e1.q + other_min > q_max {
                break;
            }
            for (e2, c2) in &other.terms {
                let e = e1.mul(*e2);
                if e.q > q_max {
                    break;
                }
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    /// Canonical text: `c*a^i*b^j*q^k` terms joined by `" + "`, ascending
    /// `(k, i, j)`. The zero polynomial renders as `0`.
    pub fn to_text(&self) -> String {
        self.to_string()
    }

    /// JSON array of `[coeff-as-decimal-string, i, j, k]` in canonical order.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(e, c)| {
                    Value::Array(vec![
                        Value::String(c.to_string()),
                        Value::from(e.a),
                        Value::from(e.b),
                        Value::from(e.q),
                    ])
                })
                .collect(),
        )
    }

    pub fn from_json(v: &Value) -> Result<TriPoly, PolyError> {
        let bad = |msg: &str| PolyError::Json(msg.to_string());
        let arr = v
            .as_array()
            .ok_or_else(|| bad("expected an array of terms"))?;
        let mut p = TriPoly::zero();
        for t in arr {
            let t = t
                .as_array()
                .filter(|t| t.len() == 4)
                .ok_or_else(|| bad("term must be a 4-element array"))?;
            let c: BigInt = t[0]
                .as_str()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| bad("coefficient must be a decimal string"))?;
            let a = t[1]
                .as_i64()
                .ok_or_else(|| bad("a exponent must be an integer"))?;
            let b = t[2]
                .as_i64()
                .ok_or_else(|| bad("b exponent must be an integer"))?;
            let q = t[3]
                .as_i64()
                .ok_or_else(|| bad("q exponent must be an integer"))?;
            p += TriPoly::monomial(c, a, b, q)?;
        }
        Ok(p)
    }
}

impl fmt::Display for TriPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{}*a^{}*b^{}*q^{}", c, e.a, e.b, e.q)?;
        }
        Ok(())
    }
}

impl AddAssign<&TriPoly> for TriPoly {
    fn add_assign(&mut self, rhs: &TriPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl AddAssign<TriPoly> for TriPoly {
    fn add_assign(&mut self, rhs: TriPoly) {
        if self.terms.len() < rhs.terms.len() {
            let lhs = std::mem::replace(self, rhs);
            *self += &lhs;
            return;
        }
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
    }
}

impl SubAssign<&TriPoly> for TriPoly {
    fn sub_assign(&mut self, rhs: &TriPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl SubAssign<TriPoly> for TriPoly {
    fn sub_assign(&mut self, rhs: TriPoly) {
        for (e, c) in rhs.terms {
            self.add_term(e, -c);
        }
    }
}

impl Neg for TriPoly {
    type Output = TriPoly;
    fn neg(mut self) -> TriPoly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &TriPoly {
    type Output = TriPoly;
    fn neg(self) -> TriPoly {
        -self.clone()
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $assign:ident) => {
        impl $tr<TriPoly> for TriPoly {
            type Output = TriPoly;
            fn $method(mut self, rhs: TriPoly) -> TriPoly {
                self.$assign(rhs);
                self
            }
        }
        impl $tr<&TriPoly> for TriPoly {
            type Output = TriPoly;
            fn $method(mut self, rhs: &TriPoly) -> TriPoly {
                self.$assign(rhs);
                self
            }
        }
        impl $tr<TriPoly> for &TriPoly {
            type Output = TriPoly;
            fn $method(self, rhs: TriPoly) -> TriPoly {
                let mut out = self.clone();
                out.$assign(rhs);
                out
            }
        }
        impl $tr<&TriPoly> for &TriPoly {
            type Output = TriPoly;
            fn $method(self, rhs: &TriPoly) -> TriPoly {
                let mut out = self.clone();
                out.$assign(rhs);
                out
            }
        }
    };
}

forward_binop!(Add, add, add_assign);
forward_binop!(Sub, sub, sub_assign);

impl Mul<&TriPoly> for &TriPoly {
    type Output = TriPoly;
    fn mul(self, rhs: &TriPoly) -> TriPoly {
        if self.is_zero() || rhs.is_zero() {
            return TriPoly::zero();
        }
        let (small, large) = if self.len() <= rhs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = TriPoly::zero();
        for (e1, c1) in &small.terms {
            if c1.is_one() {
                for (e2, c2) in &large.terms {
                    out.add_term(e1.mul(*e2), c2.clone());
                }
            } else {
                for (e2, c2) in &large.terms {
                    out.add_term(e1.mul(*e2), c1 * c2);
                }
            }
        }
        out
    }
}

impl Mul<TriPoly> for TriPoly {
    type Output = TriPoly;
    fn mul(self, rhs: TriPoly) -> TriPoly {
        &self * &rhs
    }
}

impl Mul<&TriPoly> for TriPoly {
    type Output = TriPoly;
    fn mul(self, rhs: &TriPoly) -> TriPoly {
        &self * rhs
    }
}

impl Mul<TriPoly> for &TriPoly {
    type Output = TriPoly;
    fn mul(self, rhs: TriPoly) -> TriPoly {
        self * &rhs
    }
}

impl std::iter::Sum for TriPoly {
    fn sum<I: Iterator<Item = TriPoly>>(iter: I) -> TriPoly {
        iter.fold(TriPoly::zero(), |acc, p| acc + p)
    }
}

impl std::iter::Product for TriPoly {
    fn product<I: Iterator<Item = TriPoly>>(iter: I) -> TriPoly {
        iter.fold(TriPoly::one(), |acc, p| acc * p)
    }
}
