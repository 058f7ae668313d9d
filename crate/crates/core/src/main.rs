use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use partition_identity::partitions::{count_table, s_oracle, Extra, GeneralParams, Side};
use partition_identity::recurrence::{product_truncated, s_rec, SeriesMemo};
use partition_identity::verify::{all_pass, general_rows, run_suite, Suite, SuiteConfig};
use partition_identity::TriPoly;

/// Exact checks of a refined partition identity and its supporting q-series identities.
#[derive(Parser, Debug)]
#[command(name = "partition-identity", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run verification suites; one JSON report per line on stdout.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        /// Upper bound on n for the recurrence-side suites.
        #[arg(long)]
        n_max: Option<u32>,
        /// Largest q-degree compared in the coefficient-table suite.
        #[arg(long)]
        q_max: Option<u32>,
    },
    /// Brute-force (mu, nu, N) counts for one side of the identity.
    Counts {
        #[arg(long, value_enum)]
        side: SideArg,
        #[arg(long)]
        n_max: u32,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
    },
    /// S_n(j) from the enumerator or from the recurrences.
    Series {
        #[arg(long, allow_negative_numbers = true, value_parser = clap::value_parser!(i64).range(-1..))]
        n: i64,
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..=15))]
        j: u8,
        #[arg(long, value_enum, default_value_t = Source::Recurrence)]
        source: Source,
        #[arg(long, value_enum, default_value_t = PolyFormat::Text)]
        format: PolyFormat,
    },
    /// Compare A_{lambda,k,a}(n) with B_{lambda,k,a}(n) for n <= n_max; CSV `n,A,B` on stdout.
    General {
        #[arg(long)]
        lambda: u32,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        a: u32,
        #[arg(long, value_enum, default_value_t = ExtraArg::None)]
        extra: ExtraArg,
        #[arg(long)]
        n_max: u32,
    },
    /// The four-factor infinite product, truncated at q^q_max.
    Product {
        #[arg(long)]
        q_max: u32,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SuiteArg {
    All,
    Lemma1,
    Lemma2,
    Lemma3,
    Lemma4,
    Link,
    Oracle,
    Theorem3,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SideArg {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "B", alias = "b")]
    B,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Source {
    Oracle,
    Recurrence,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PolyFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ExtraArg {
    None,
    #[value(name = "b0-433")]
    B0_433,
    #[value(name = "b0-533")]
    B0_533,
}

const EXIT_FAIL: u8 = 1;
const EXIT_CONFIG: u8 = 2;
const ORACLE_N_MAX: i64 = 6;

fn config_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_CONFIG)
}

fn emit(text: &str) -> ExitCode {
    let mut out = io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_FAIL)
        }
    }
}

fn verify(suite: SuiteArg, n_max: Option<u32>, q_max: Option<u32>) -> ExitCode {
    let mut cfg = SuiteConfig::default();
    let suite = match suite {
        SuiteArg::All => Suite::All,
        SuiteArg::Lemma1 => Suite::Lemma1,
        SuiteArg::Lemma2 => Suite::Lemma2,
        SuiteArg::Lemma3 => Suite::Lemma3,
        SuiteArg::Lemma4 => Suite::Lemma4,
        SuiteArg::Link => Suite::Link,
        SuiteArg::Oracle => Suite::Oracle,
        SuiteArg::Theorem3 => Suite::Theorem3,
    };
    if let Some(n) = n_max {
        match suite {
            Suite::Lemma1 | Suite::Link => cfg.n_max_lemmas = n,
            Suite::Lemma2 | Suite::Lemma3 | Suite::Lemma4 => cfg.n_max_fourth_order = n,
            Suite::Oracle => cfg.n_max_oracle = n,
            Suite::Theorem3 => {
                return config_error("--n-max does not apply to theorem3; use --q-max")
            }
            _ => {
                cfg.n_max_lemmas = n;
                cfg.n_max_fourth_order = n;
                cfg.n_max_oracle = n;
            }
        }
    }
    if let Some(q) = q_max {
        cfg.q_max_theorem = q;
    }
    let reports = match run_suite(&cfg, suite) {
        Ok(r) => r,
        Err(e) => return config_error(e),
    };
    let mut text = String::new();
    for r in &reports {
        text.push_str(&r.to_json_line());
        text.push('\n');
        if !r.pass {
            eprintln!(
                "FAIL {} at {}: {} residual terms",
                r.identity, r.parameter, r.residual_terms
            );
            for line in &r.diff {
                eprintln!("    {line}");
            }
        }
    }
    let failed = reports.iter().filter(|r| !r.pass).count();
    let code = emit(&text);
    eprintln!("{} checks, {} failed", reports.len(), failed);
    if code != ExitCode::SUCCESS || !all_pass(&reports) {
        return ExitCode::from(EXIT_FAIL);
    }
    ExitCode::SUCCESS
}

fn series_text(p: &TriPoly, format: PolyFormat) -> String {
    match format {
        PolyFormat::Text => format!("{}\n", p.to_text()),
        PolyFormat::Json => format!("{}\n", p.to_json()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify {
            suite,
            n_max,
            q_max,
        } => verify(suite, n_max, q_max),
        Command::Counts {
            side,
            n_max,
            format,
        } => {
            let side = match side {
                SideArg::A => Side::A,
                SideArg::B => Side::B,
            };
            let table = count_table(side, n_max);
            emit(&match format {
                TableFormat::Csv => table.to_csv(),
                TableFormat::Json => format!("{}\n", table.to_json()),
            })
        }
        Command::Series {
            n,
            j,
            source,
            format,
        } => {
            let p = match source {
                Source::Oracle if n > ORACLE_N_MAX => {
                    return config_error(format!("the enumerator supports n <= {ORACLE_N_MAX}"))
                }
                Source::Oracle => s_oracle(n, j),
                Source::Recurrence => TriPoly::clone(&s_rec(n, j, &mut SeriesMemo::new())),
            };
            emit(&series_text(&p, format))
        }
        Command::General {
            lambda,
            k,
            a,
            extra,
            n_max,
        } => {
            let extra = match extra {
                ExtraArg::None => Extra::None,
                ExtraArg::B0_433 => Extra::B0_433,
                ExtraArg::B0_533 => Extra::B0_533,
            };
            let params = match GeneralParams::new(lambda, k, a) {
                Ok(p) => p,
                Err(e) => return config_error(e),
            };
            if extra == Extra::None {
                if let Err(e) = params.check_theorem_range() {
                    eprintln!("warning: {e}; the comparison may legitimately differ");
                }
            }
            let rows = match general_rows(&params, extra, n_max) {
                Ok(r) => r,
                Err(e) => return config_error(e),
            };
            let mut text = String::from("n,A,B\n");
            for (n, a_count, b_count) in &rows {
                text.push_str(&format!("{n},{a_count},{b_count}\n"));
                if a_count != b_count {
                    eprintln!("mismatch at n={n}: A={a_count} B={b_count}");
                }
            }
            let code = emit(&text);
            if code != ExitCode::SUCCESS || rows.iter().any(|(_, x, y)| x != y) {
                return ExitCode::from(EXIT_FAIL);
            }
            ExitCode::SUCCESS
        }
        Command::Product { q_max } => emit(&format!(
            "{}\n",
            product_truncated(i64::from(q_max)).to_text()
        )),
    }
}
