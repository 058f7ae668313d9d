//! The recurrences for `S_n(j)` and the correction polynomials `p1`, `p2`,
//! `p3`, stored as data.
//!
//! Keeping the printed identities as tables (rather than hard-wiring them
//! into code) lets the verification harness perturb a single coefficient or
//! exponent and confirm that some check notices.

/// A `q` exponent of the form `per_n * n + offset`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QExp {
    pub per_n: i64,
    pub offset: i64,
}

impl QExp {
    pub const fn new(per_n: i64, offset: i64) -> Self {
        QExp { per_n, offset }
    }

    pub fn at(self, n: i64) -> i64 {
        self.per_n * n + self.offset
    }
}

/// One summand `coeff * a^a * b^b * q^{q(n)} * S_{n-lag}(source)` on the
/// right-hand side of the recurrence for `S_n(j)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RecTerm {
    pub coeff: i64,
    pub a: u32,
    pub b: u32,
    pub q: QExp,
    pub lag: i64,
    pub source: u8,
}

/// One monomial `coeff * a^a * b^b * q^{q(n)}` of a correction polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrintedTerm {
    pub coeff: i64,
    pub a: u32,
    pub b: u32,
    pub q: QExp,
}

const fn rt(coeff: i64, a: u32, b: u32, per_n: i64, offset: i64, lag: i64, source: u8) -> RecTerm {
    RecTerm {
        coeff,
        a,
        b,
        q: QExp::new(per_n, offset),
        lag,
        source,
    }
}

const fn pt(coeff: i64, a: u32, b: u32, per_n: i64, offset: i64) -> PrintedTerm {
    PrintedTerm {
        coeff,
        a,
        b,
        q: QExp::new(per_n, offset),
    }
}

/// Right-hand sides of the sixteen recurrences. For `j >= 1` the value is
/// `S_n(j-1)` plus the listed terms; for `j = 0` it is the listed terms alone.
const STEPS: [&[RecTerm]; 16] = [
    &[rt(1, 0, 0, 0, 0, 1, 15)],
    &[
        rt(1, 1, 0, 6, 1, 1, 11),
        rt(-1, 1, 0, 6, 1, 1, 9),
        rt(1, 1, 0, 6, 1, 1, 5),
        rt(-1, 3, 3, 24, -12, 3, 9),
    ],
    &[
        rt(1, 1, 0, 6, 2, 1, 12),
        rt(-1, 1, 0, 6, 2, 1, 9),
        rt(1, 1, 0, 6, 2, 1, 8),
    ],
    &[rt(1, 2, 0, 12, 3, 1, 3)],
    &[rt(1, 0, 1, 6, 4, 1, 13)],
    &[rt(1, 1, 1, 12, 5, 1, 5)],
    &[rt(1, 0, 1, 6, 5, 1, 14)],
    &[rt(1, 1, 1, 12, 6, 1, 5)],
    &[rt(1, 1, 1, 12, 7, 1, 8)],
    &[rt(1, 0, 2, 12, 9, 1, 9)],
    &[rt(1, 1, 1, 6, 6, 1, 14)],
    &[rt(1, 2, 1, 12, 7, 1, 5)],
    &[rt(1, 2, 1, 12, 8, 1, 8)],
    &[rt(1, 1, 2, 12, 10, 1, 9)],
    &[rt(1, 1, 2, 12, 11, 1, 9)],
    &[rt(1, 2, 2, 12, 12, 1, 9)],
];

// Terms are kept in the order they are usually written out, duplicates of
// an exponent pattern included, so that each printed coefficient can be
// perturbed on its own.
const P1: &[PrintedTerm] = &[
    pt(1, 0, 0, 0, 0),
    pt(1, 1, 0, 6, -5),
    pt(1, 1, 0, 6, -4),
    pt(1, 0, 1, 6, -2),
    pt(1, 0, 1, 6, -1),
    pt(1, 1, 1, 6, 0),
    pt(2, 1, 1, 12, -1),
    pt(3, 1, 1, 12, 0),
    pt(1, 1, 0, 6, 2),
    pt(2, 2, 0, 12, -3),
    pt(1, 2, 0, 12, -2),
    pt(2, 1, 1, 12, 1),
    pt(1, 2, 1, 12, 2),
    pt(1, 0, 1, 6, 4),
    pt(1, 0, 2, 12, 2),
    pt(2, 0, 2, 12, 3),
    pt(1, 1, 2, 12, 4),
    pt(1, 0, 1, 6, 5),
    pt(1, 0, 2, 12, 4),
    pt(1, 1, 2, 12, 5),
    pt(1, 2, 0, 12, 3),
    pt(2, 2, 1, 18, 1),
    pt(2, 2, 1, 18, 2),
    pt(1, 1, 1, 12, 5),
    pt(1, 2, 1, 18, 0),
    pt(1, 1, 2, 18, 3),
    pt(1, 2, 0, 12, -4),
    pt(2, 1, 2, 18, 4),
    pt(1, 1, 1, 12, 6),
    pt(2, 1, 2, 18, 5),
    pt(1, 1, 1, 12, 7),
    pt(1, 2, 1, 18, 3),
    pt(1, 1, 2, 18, 6),
    pt(1, 0, 2, 12, 9),
    pt(1, 3, 0, 18, -2),
    pt(1, 3, 0, 18, -1),
    pt(1, 0, 3, 18, 7),
    pt(1, 0, 3, 18, 8),
    pt(1, 2, 1, 12, 1),
    pt(1, 1, 0, 6, 1),
];

const P2: &[PrintedTerm] = &[
    pt(1, 2, 1, 12, -5),
    pt(1, 2, 1, 12, -4),
    pt(1, 1, 2, 12, -2),
    pt(1, 1, 2, 12, -1),
    pt(1, 2, 2, 12, 0),
    pt(1, 3, 1, 18, -4),
    pt(1, 3, 1, 18, -3),
    pt(1, 3, 1, 18, -2),
    pt(3, 2, 2, 18, 0),
    pt(1, 2, 2, 18, -1),
    pt(1, 1, 3, 18, 2),
    pt(1, 1, 3, 18, 3),
    pt(1, 2, 2, 18, 1),
    pt(1, 1, 3, 18, 4),
    pt(1, 3, 1, 18, -10),
    pt(1, 2, 2, 18, -7),
    pt(3, 2, 2, 18, -6),
    pt(1, 3, 2, 18, -5),
    pt(1, 4, 1, 24, -9),
    pt(1, 4, 1, 24, -8),
    pt(1, 4, 1, 24, -7),
    pt(3, 3, 2, 24, -5),
    pt(1, 3, 2, 24, -6),
    pt(3, 2, 3, 24, -2),
    pt(3, 3, 2, 24, -4),
    pt(3, 2, 3, 24, -1),
    pt(1, 3, 1, 18, -9),
    pt(1, 3, 1, 18, -8),
    pt(1, 2, 2, 18, -5),
    pt(1, 3, 2, 18, -4),
    pt(1, 2, 3, 24, 0),
    pt(1, 1, 3, 18, -4),
    pt(1, 1, 4, 24, 0),
    pt(1, 3, 2, 24, -3),
    pt(1, 1, 4, 24, 2),
    pt(1, 1, 3, 18, -2),
    pt(1, 1, 4, 24, 1),
    pt(1, 1, 4, 24, 3),
    pt(1, 4, 1, 24, -6),
    pt(1, 1, 3, 18, -3),
    pt(1, 2, 3, 18, -2),
    pt(1, 2, 3, 18, -1),
    pt(1, 2, 3, 24, -3),
];

const P3: &[PrintedTerm] = &[
    pt(-1, 3, 3, 24, -12),
    pt(-1, 3, 3, 18, -12),
    pt(-1, 4, 3, 24, -11),
    pt(-1, 4, 3, 24, -10),
    pt(-1, 3, 4, 24, -8),
    pt(-1, 3, 4, 24, -7),
    pt(2, 4, 3, 30, -17),
    pt(2, 4, 3, 30, -16),
    pt(2, 3, 4, 30, -14),
    pt(2, 3, 4, 30, -13),
    pt(1, 4, 2, 24, -21),
    pt(1, 5, 2, 30, -20),
    pt(1, 3, 3, 24, -19),
    pt(1, 5, 2, 30, -19),
    pt(1, 4, 3, 30, -18),
    pt(1, 3, 4, 30, -15),
    pt(1, 3, 3, 24, -18),
    pt(1, 3, 3, 24, -17),
    pt(1, 4, 3, 30, -15),
    pt(1, 3, 4, 30, -12),
    pt(1, 2, 5, 30, -11),
    pt(1, 2, 5, 30, -10),
    pt(1, 2, 4, 24, -15),
];

/// Which of the three correction polynomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Correction {
    P1,
    P2,
    P3,
}

impl Correction {
    pub const ALL: [Correction; 3] = [Correction::P1, Correction::P2, Correction::P3];

    fn slot(self) -> usize {
        self as usize
    }
}

/// Exponent slot of a recurrence term.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    A,
    B,
    Q,
}

/// A single-site perturbation of the transcribed data.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mutation {
    /// Negate the coefficient of term `index` of a correction polynomial.
    FlipCoefficient { poly: Correction, index: usize },
    /// Raise one exponent of term `index` in the recurrence for `S_n(j)` by one.
    BumpExponent { j: u8, index: usize, var: Var },
}

/// The full set of transcribed identities driving the recurrence engine.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transcription {
    pub steps: [Vec<RecTerm>; 16],
    pub corrections: [Vec<PrintedTerm>; 3],
}

impl Default for Transcription {
    fn default() -> Self {
        Transcription::printed()
    }
}

impl Transcription {
    /// The identities exactly as published.
    pub fn printed() -> Self {
        Transcription {
            steps: STEPS.map(|s| s.to_vec()),
            corrections: [P1.to_vec(), P2.to_vec(), P3.to_vec()],
        }
    }

    pub fn correction(&self, which: Correction) -> &[PrintedTerm] {
        &self.corrections[which.slot()]
    }

    /// Every single-site mutation the harness knows how to apply.
    pub fn mutation_sites(&self) -> Vec<Mutation> {
        let mut out = Vec::new();
        for poly in Correction::ALL {
            out.extend(
                (0..self.correction(poly).len())
                    .map(|index| Mutation::FlipCoefficient { poly, index }),
            );
        }
        for (j, terms) in self.steps.iter().enumerate() {
            for index in 0..terms.len() {
                for var in [Var::A, Var::B, Var::Q] {
                    out.push(Mutation::BumpExponent {
                        j: j as u8,
                        index,
                        var,
                    });
                }
            }
        }
        out
    }

    pub fn mutated(&self, m: Mutation) -> Transcription {
        let mut t = self.clone();
        match m {
            Mutation::FlipCoefficient { poly, index } => {
                let term = &mut t.corrections[poly.slot()][index];
                term.coeff = -term.coeff;
            }
            Mutation::BumpExponent { j, index, var } => {
                let term = &mut t.steps[usize::from(j)][index];
                match var {
                    Var::A => term.a += 1,
                    Var::B => term.b += 1,
                    Var::Q => term.q.offset += 1,
                }
            }
        }
        t
    }
}
