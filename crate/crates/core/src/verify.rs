//! Verification suites and their reports.
//!
//! Every check produces a [`Report`]. A failing identity is data, not an
//! error: the report carries the number of surviving residual terms (or
//! mismatching table entries) and a short term-level diff.

use std::cmp::Ordering;
use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::ConfigError;
use crate::partitions::{
    count_table, general_a_count, general_b_count, s_oracle_all, CountTable, Extra, GeneralParams,
    Side,
};
use crate::poly::TriPoly;
use crate::recurrence::{
    j_poly, k_poly, lemma2_residual, lemma3_residual, lemma4_residual, link_residual,
    product_truncated, SeriesMemo, Transcription,
};

/// Longest diff kept on a failing report.
pub const MAX_DIFF_TERMS: usize = 20;

/// What a report is about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IdentityId {
    /// Recurrence value `S_n(j)` against the brute-force oracle.
    Recurrence(u8),
    J,
    K,
    Link,
    Lemma2,
    Lemma3,
    Lemma4,
    /// `S_n(15)` against the truncated infinite product up to `q^{6n+6}`.
    Product,
    Theorem3,
    Theorem1(GeneralParams),
    Theorem2,
    Conj433,
    Thm2Consistency,
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdentityId::Recurrence(j) => write!(f, "rec_j{j}"),
            IdentityId::J => f.write_str("J"),
            IdentityId::K => f.write_str("K"),
            IdentityId::Link => f.write_str("link"),
            IdentityId::Lemma2 => f.write_str("lemma2"),
            IdentityId::Lemma3 => f.write_str("lemma3"),
            IdentityId::Lemma4 => f.write_str("lemma4"),
            IdentityId::Product => f.write_str("product"),
            IdentityId::Theorem3 => f.write_str("theorem3"),
            IdentityId::Theorem1(g) => write!(f, "theorem1[{},{},{}]", g.lambda, g.k, g.a),
            IdentityId::Theorem2 => f.write_str("theorem2"),
            IdentityId::Conj433 => f.write_str("conj433"),
            IdentityId::Thm2Consistency => f.write_str("thm2_consistency"),
        }
    }
}

/// Outcome of a single check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub identity: IdentityId,
    /// `n` for recurrence-side checks, the bound for table comparisons.
    pub parameter: i64,
    pub pass: bool,
    /// Residual terms left over, or mismatching entries; zero iff `pass`.
    pub residual_terms: u64,
    /// Number of individual values compared (polynomial terms or table cells).
    pub checked: u64,
    pub elapsed: Duration,
    /// First few offending terms or entries in canonical order.
    pub diff: Vec<String>,
}

#[derive(Serialize)]
struct ReportLine<'a> {
    identity: &'a str,
    n: i64,
    pass: bool,
    residual_terms: u64,
    ms: u64,
}

impl Report {
    fn new(
        identity: IdentityId,
        parameter: i64,
        residual_terms: u64,
        checked: u64,
        diff: Vec<String>,
        elapsed: Duration,
    ) -> Self {
        Report {
            identity,
            parameter,
            pass: residual_terms == 0,
            residual_terms,
            checked,
            elapsed,
            diff,
        }
    }

    /// Report for an identity whose residual should be the zero polynomial.
    pub fn from_residual(
        identity: IdentityId,
        n: i64,
        residual: &TriPoly,
        checked: u64,
        elapsed: Duration,
    ) -> Self {
        let diff = residual
            .iter()
            .take(MAX_DIFF_TERMS)
            .map(|(e, c)| format!("{c}*a^{}*b^{}*q^{}", e.a, e.b, e.q))
            .collect();
        Report::new(identity, n, residual.len() as u64, checked, diff, elapsed)
    }

    /// `{"identity": ..., "n": ..., "pass": ..., "residual_terms": ..., "ms": ...}`
    pub fn to_json_line(&self) -> String {
        let identity = self.identity.to_string();
        let line = ReportLine {
            identity: &identity,
            n: self.parameter,
            pass: self.pass,
            residual_terms: self.residual_terms,
            ms: self.elapsed.as_millis() as u64,
        };
        serde_json::to_string(&line).expect("report serialization cannot fail")
    }

    fn sort_key(&self) -> (IdentityId, i64) {
        (self.identity, self.parameter)
    }
}

/// One `A = B` family check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GeneralCase {
    pub params: GeneralParams,
    pub extra: Extra,
    pub n_max: u32,
}

impl GeneralCase {
    fn identity(&self) -> IdentityId {
        match self.extra {
            Extra::None => IdentityId::Theorem1(self.params),
            Extra::B0_433 => IdentityId::Conj433,
            Extra::B0_533 => IdentityId::Theorem2,
        }
    }

    fn validate(&self) -> Result<(), ConfigError> {
        let GeneralParams { lambda, k, a } = self.params;
        let expected = match self.extra {
            Extra::None => {
                return self
                    .params
                    .check_theorem_range()
                    .map_err(|e| ConfigError::GeneralParams {
                        lambda,
                        k,
                        a,
                        reason: e.to_string(),
                    })
            }
            Extra::B0_433 => (4, 3, 3),
            Extra::B0_533 => (5, 3, 3),
        };
        if (lambda, k, a) != expected {
            return Err(ConfigError::GeneralParams {
                lambda,
                k,
                a,
                reason: format!(
                    "{:?} is defined for (lambda, k, a) = {expected:?}",
                    self.extra
                ),
            });
        }
        Ok(())
    }
}

/// Bounds and options for a verification run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    /// `J(n)`, `K(n)` and the product check run for `n <= n_max_lemmas`;
    /// the linking identity for `n < n_max_lemmas`, so that `K(n+1)` stays
    /// in range.
    pub n_max_lemmas: u32,
    /// Bound for the three fourth-order checks.
    pub n_max_fourth_order: u32,
    pub n_max_oracle: u32,
    pub q_max_theorem: u32,
    pub general_cases: Vec<GeneralCase>,
    /// Bound for comparing the window description against `B^0_{5,3,3}`.
    pub n_max_consistency: u32,
    /// Worker threads; 0 means one per available core.
    pub parallelism: usize,
    /// The identities being verified; replaced by mutated copies in
    /// sensitivity tests.
    pub rules: Transcription,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        let case = |l, k, a, extra| GeneralCase {
            params: GeneralParams { lambda: l, k, a },
            extra,
            n_max: 40,
        };
        SuiteConfig {
            n_max_lemmas: 6,
            n_max_fourth_order: 4,
            n_max_oracle: 4,
            q_max_theorem: 50,
            general_cases: vec![
                case(2, 2, 2, Extra::None),
                case(2, 3, 2, Extra::None),
                case(2, 3, 3, Extra::None),
                case(3, 3, 2, Extra::None),
                case(3, 3, 3, Extra::None),
                case(4, 3, 3, Extra::B0_433),
                case(5, 3, 3, Extra::B0_533),
            ],
            n_max_consistency: 40,
            parallelism: 0,
            rules: Transcription::printed(),
        }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        for case in &self.general_cases {
            case.validate()?;
        }
        if self.n_max_oracle > 6 {
            return Err(ConfigError::Bound(format!(
                "oracle bound {} enumerates 16^{} class tuples; 6 is the supported maximum",
                self.n_max_oracle,
                self.n_max_oracle + 1
            )));
        }
        Ok(())
    }
}

/// A named group of checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    All,
    Lemma1,
    Lemma2,
    Lemma3,
    Lemma4,
    Link,
    Oracle,
    Product,
    Theorem3,
    General,
}

type Task = Box<dyn FnOnce() -> Vec<Report> + Send>;

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

fn residual_task(
    rules: &Transcription,
    identity: IdentityId,
    range: std::ops::RangeInclusive<i64>,
    residual: fn(i64, &mut SeriesMemo) -> TriPoly,
) -> Task {
    let rules = rules.clone();
    Box::new(move || {
        let mut memo = SeriesMemo::with_transcription(rules);
        range
            .map(|n| {
                let (r, t) = timed(|| residual(n, &mut memo));
                Report::from_residual(identity, n, &r, 1, t)
            })
            .collect()
    })
}

/// `S_n(15)` agrees with the infinite product on every `q`-degree at most
/// `6n+6`, where the bound on the parts is no restriction.
pub fn product_check(n: i64, memo: &mut SeriesMemo) -> Report {
    let (residual, t) = timed(|| {
        let q_max = 6 * n + 6;
        memo.get(n, 15).truncate(q_max) - product_truncated(q_max)
    });
    Report::from_residual(IdentityId::Product, n, &residual, 1, t)
}

/// Recurrence values `S_n(0..=15)` against class-tuple enumeration.
pub fn oracle_check(n: i64, rules: &Transcription) -> Vec<Report> {
    let (oracle, oracle_time) = timed(|| s_oracle_all(n));
    let mut memo = SeriesMemo::with_transcription(rules.clone());
    (0..16u8)
        .map(|j| {
            let (r, t) = timed(|| &*memo.get(n, j) - &oracle[usize::from(j)]);
            let checked = oracle[usize::from(j)].len() as u64;
            Report::from_residual(
                IdentityId::Recurrence(j),
                n,
                &r,
                checked,
                t + oracle_time / 16,
            )
        })
        .collect()
}

fn table_diff_lines(label: &str, left: &CountTable, right: &CountTable, out: &mut Vec<String>) {
    for (mu, nu, n, l, r) in left.diff(right) {
        if out.len() >= MAX_DIFF_TERMS {
            return;
        }
        out.push(format!("{label} (mu={mu}, nu={nu}, N={n}): {l} vs {r}"));
    }
}

/// `count_table(A, q_max) = count_table(B, q_max) =` coefficients of the
/// truncated product, compared cell by cell.
pub fn theorem3_check(q_max: u32) -> Report {
    let start = Instant::now();
    let a = count_table(Side::A, q_max);
    let b = count_table(Side::B, q_max);
    let product = CountTable::from_poly(&product_truncated(i64::from(q_max)));
    let mut diff = Vec::new();
    let (residual, checked) = match product {
        Ok(p) => {
            let mut bad: std::collections::BTreeSet<(u32, u32, u32)> =
                std::collections::BTreeSet::new();
            for (x, y) in [(&a, &b), (&a, &p), (&b, &p)] {
                bad.extend(x.diff(y).into_iter().map(|(mu, nu, n, _, _)| (n, mu, nu)));
            }
            table_diff_lines("A vs B", &a, &b, &mut diff);
            table_diff_lines("A vs product", &a, &p, &mut diff);
            table_diff_lines("B vs product", &b, &p, &mut diff);
            let mut all = a.clone();
            all.merge(b.clone());
            all.merge(p);
            (bad.len() as u64, all.len() as u64)
        }
        Err(e) => {
            diff.push(e.to_string());
            (1, 0)
        }
    };
    Report::new(
        IdentityId::Theorem3,
        i64::from(q_max),
        residual,
        checked,
        diff,
        start.elapsed(),
    )
}

/// `A(n)` and `B(n)` of one family for every `n <= n_max`.
pub fn general_rows(
    params: &GeneralParams,
    extra: Extra,
    n_max: u32,
) -> Result<Vec<(u32, u64, u64)>, ConfigError> {
    (0..=n_max)
        .into_par_iter()
        .map(|n| {
            Ok((
                n,
                general_a_count(params, n)?,
                general_b_count(params, n, extra)?,
            ))
        })
        .collect()
}

fn general_check(case: &GeneralCase) -> Result<Report, ConfigError> {
    case.validate()?;
    let start = Instant::now();
    let rows = general_rows(&case.params, case.extra, case.n_max)?;
    let diff: Vec<String> = rows
        .iter()
        .filter(|(_, a, b)| a != b)
        .map(|(n, a, b)| format!("n={n}: A={a} B={b}"))
        .collect();
    let residual = diff.len() as u64;
    Ok(Report::new(
        case.identity(),
        i64::from(case.n_max),
        residual,
        rows.len() as u64,
        diff.into_iter().take(MAX_DIFF_TERMS).collect(),
        start.elapsed(),
    ))
}

/// Pointwise `A_{lambda,k,a}(n) = B_{lambda,k,a}(n)` for `n <= n_max`.
pub fn theorem1_check(params: GeneralParams, n_max: u32) -> Result<Report, ConfigError> {
    general_check(&GeneralCase {
        params,
        extra: Extra::None,
        n_max,
    })
}

/// `A_{4,3,3}(n) = B^0_{4,3,3}(n)` for `n <= n_max`.
pub fn conj433_check(n_max: u32) -> Report {
    general_check(&GeneralCase {
        params: GeneralParams {
            lambda: 4,
            k: 3,
            a: 3,
        },
        extra: Extra::B0_433,
        n_max,
    })
    .expect("fixed parameters are valid")
}

/// `A_{5,3,3}(n) = B^0_{5,3,3}(n)` for `n <= n_max`.
pub fn theorem2_check(n_max: u32) -> Report {
    general_check(&GeneralCase {
        params: GeneralParams {
            lambda: 5,
            k: 3,
            a: 3,
        },
        extra: Extra::B0_533,
        n_max,
    })
    .expect("fixed parameters are valid")
}

/// `sum_{mu,nu} B(mu, nu, N) = B^0_{5,3,3}(N)` for `N <= n_max`: the window
/// description and the `B^0` description count the same partitions.
pub fn thm2_consistency(n_max: u32) -> Report {
    let start = Instant::now();
    let table = count_table(Side::B, n_max);
    let gp = GeneralParams {
        lambda: 5,
        k: 3,
        a: 3,
    };
    let diff: Vec<String> = (0..=n_max)
        .into_par_iter()
        .filter_map(|n| {
            let window_side = table.total(n);
            let general = general_b_count(&gp, n, Extra::B0_533).expect("lambda matches");
            (window_side != general.into())
                .then(|| format!("N={n}: window={window_side} general={general}"))
        })
        .collect();
    Report::new(
        IdentityId::Thm2Consistency,
        i64::from(n_max),
        diff.len() as u64,
        u64::from(n_max) + 1,
        diff.into_iter().take(MAX_DIFF_TERMS).collect(),
        start.elapsed(),
    )
}

fn tasks(cfg: &SuiteConfig, suite: Suite) -> Vec<Task> {
    let want = |s: Suite| suite == Suite::All || suite == s;
    let rules = &cfg.rules;
    let lemmas = 0..=i64::from(cfg.n_max_lemmas);
    let fourth = 0..=i64::from(cfg.n_max_fourth_order);
    let mut out: Vec<Task> = Vec::new();

    if want(Suite::Oracle) {
        for n in 0..=i64::from(cfg.n_max_oracle) {
            let rules = rules.clone();
            out.push(Box::new(move || oracle_check(n, &rules)));
        }
    }
    if want(Suite::Lemma1) {
        out.push(residual_task(rules, IdentityId::J, lemmas.clone(), j_poly));
        out.push(residual_task(rules, IdentityId::K, lemmas.clone(), k_poly));
    }
    if want(Suite::Link) {
        let link_range = 0..=i64::from(cfg.n_max_lemmas) - 1;
        out.push(residual_task(
            rules,
            IdentityId::Link,
            link_range,
            link_residual,
        ));
    }
    if want(Suite::Lemma2) {
        out.push(residual_task(
            rules,
            IdentityId::Lemma2,
            fourth.clone(),
            lemma2_residual,
        ));
    }
    if want(Suite::Lemma3) {
        out.push(residual_task(
            rules,
            IdentityId::Lemma3,
            fourth.clone(),
            lemma3_residual,
        ));
    }
    if want(Suite::Lemma4) {
        out.push(residual_task(
            rules,
            IdentityId::Lemma4,
            fourth,
            lemma4_residual,
        ));
    }
    if want(Suite::Product) {
        let rules = rules.clone();
        out.push(Box::new(move || {
            let mut memo = SeriesMemo::with_transcription(rules);
            lemmas.map(|n| product_check(n, &mut memo)).collect()
        }));
    }
    if want(Suite::Theorem3) {
        let q = cfg.q_max_theorem;
        out.push(Box::new(move || vec![theorem3_check(q)]));
    }
    if want(Suite::General) {
        for case in cfg.general_cases.clone() {
            out.push(Box::new(move || {
                vec![general_check(&case).expect("validated before scheduling")]
            }));
        }
        let n = cfg.n_max_consistency;
        out.push(Box::new(move || vec![thm2_consistency(n)]));
    }
    out
}

/// Runs one suite. Reports come back sorted by `(identity, parameter)`
/// whatever the thread count.
pub fn run_suite(cfg: &SuiteConfig, suite: Suite) -> Result<Vec<Report>, ConfigError> {
    cfg.validate()?;
    let jobs = tasks(cfg, suite);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.parallelism)
        .build()
        .map_err(|e| ConfigError::Bound(format!("cannot start worker pool: {e}")))?;
    let mut reports: Vec<Report> =
        pool.install(|| jobs.into_par_iter().flat_map_iter(|job| job()).collect());
    reports.sort_by(|x, y| x.sort_key().cmp(&y.sort_key()).then(Ordering::Equal));
    Ok(reports)
}

/// Every suite.
pub fn run_all(cfg: &SuiteConfig) -> Result<Vec<Report>, ConfigError> {
    run_suite(cfg, Suite::All)
}

pub fn all_pass(reports: &[Report]) -> bool {
    reports.iter().all(|r| r.pass)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> SuiteConfig {
        SuiteConfig {
            n_max_lemmas: 2,
            n_max_fourth_order: 2,
            n_max_oracle: 1,
            q_max_theorem: 12,
            general_cases: vec![GeneralCase {
                params: GeneralParams {
                    lambda: 2,
                    k: 2,
                    a: 2,
                },
                extra: Extra::None,
                n_max: 12,
            }],
            n_max_consistency: 12,
            parallelism: 2,
            rules: Transcription::printed(),
        }
    }

    #[test]
    fn json_line_shape() {
        let r = Report::from_residual(
            IdentityId::Recurrence(3),
            2,
            &TriPoly::zero(),
            5,
            Duration::from_millis(7),
        );
        assert_eq!(
            r.to_json_line(),
            r#"{"identity":"rec_j3","n":2,"pass":true,"residual_terms":0,"ms":7}"#
        );
        let bad = Report::from_residual(
            IdentityId::Lemma3,
            0,
            &TriPoly::term(2, 1, 1, 0),
            1,
            Duration::ZERO,
        );
        assert!(!bad.pass);
        assert_eq!(bad.residual_terms, 1);
        assert_eq!(bad.diff, vec!["2*a^1*b^1*q^0".to_string()]);
    }

    #[test]
    fn oracle_bound_zero_gives_sixteen_checks() {
        let cfg = SuiteConfig {
            n_max_oracle: 0,
            ..small()
        };
        let reports = run_suite(&cfg, Suite::Oracle).unwrap();
        assert_eq!(reports.len(), 16);
        assert!(all_pass(&reports));
    }

    #[test]
    fn small_theorem3_tables() {
        let r = theorem3_check(6);
        assert!(r.pass);
        let r0 = theorem3_check(0);
        assert!(r0.pass);
        assert_eq!(r0.checked, 1);
    }

    #[test]
    fn output_is_independent_of_thread_count() {
        let strip = |v: Vec<Report>| {
            v.into_iter()
                .map(|r| (r.identity, r.parameter, r.pass, r.residual_terms))
                .collect::<Vec<_>>()
        };
        let one = run_all(&SuiteConfig {
            parallelism: 1,
            ..small()
        })
        .unwrap();
        let four = run_all(&SuiteConfig {
            parallelism: 4,
            ..small()
        })
        .unwrap();
        assert_eq!(strip(one), strip(four));
    }

    #[test]
    fn config_errors() {
        let mut cfg = small();
        cfg.general_cases[0].params = GeneralParams {
            lambda: 5,
            k: 3,
            a: 3,
        };
        assert!(matches!(
            run_all(&cfg),
            Err(ConfigError::GeneralParams { .. })
        ));
        cfg.general_cases[0].extra = Extra::B0_433;
        assert!(run_all(&cfg).is_err());
        cfg.general_cases[0].extra = Extra::B0_533;
        assert!(run_all(&cfg).is_ok());
        assert!(run_all(&SuiteConfig {
            n_max_oracle: 7,
            ..small()
        })
        .is_err());
    }

    #[test]
    fn reports_are_sorted() {
        let reports = run_all(&small()).unwrap();
        assert!(reports
            .windows(2)
            .all(|w| w[0].sort_key() <= w[1].sort_key()));
        assert!(reports.iter().all(|r| r.pass == (r.residual_terms == 0)));
    }
}
