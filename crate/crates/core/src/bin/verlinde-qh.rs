use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::json;

use verlinde_qh::cache::Cache;
use verlinde_qh::duality::{self, SdReport};
use verlinde_qh::json::{csv_row, FusionElementJson, QClassJson, SdReportJson, CSV_HEADER};
use verlinde_qh::quantum::{self, product_of_basis};
use verlinde_qh::selftest::{self, Level};
use verlinde_qh::{shift, Error, FusionRing, GwQuery, Shape, SuRep, Subset};

const CACHE_ENV: &str = "VERLINDE_QH_CACHE";

#[derive(Parser)]
#[command(
    name = "verlinde-qh",
    version,
    about = "Quantum Schubert calculus and Verlinde numbers"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Worker threads for tuple evaluation (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Coefficient cache file; falls back to $VERLINDE_QH_CACHE.
    #[arg(long, global = true)]
    cache: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Factorization,
    Gw,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum LevelArg {
    Quick,
    Full,
}

#[derive(Subcommand)]
enum Command {
    /// M(r, k, g) by factorization, by Gromov–Witten numbers, or both.
    Verlinde {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        g: usize,
        #[arg(long, value_enum, default_value_t = Method::Factorization)]
        method: Method,
        #[arg(long)]
        per_tuple: bool,
    },
    /// Fusion product of level-k weights, e.g. --weights "1,0;1,0".
    Fusion {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        weights: String,
    },
    /// Quantum product of Schubert classes, e.g. --classes "1,3;2,4".
    Qprod {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        classes: String,
    },
    /// Twisted Gromov–Witten number ⟨ω_I …⟩_{d,D} with D ≤ 0.
    Gw {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        subsets: String,
        #[arg(long, allow_hyphen_values = true)]
        d: i64,
        #[arg(long = "D", allow_hyphen_values = true, default_value_t = 0)]
        twist: i64,
    },
    /// One application of the shift operation to (I, d).
    Shift {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        subset: String,
        #[arg(long, allow_hyphen_values = true)]
        d: i64,
    },
    /// Both routes to M(r, k, g) and their agreement.
    SdCheck {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        g: usize,
        #[arg(long)]
        per_tuple: bool,
    },
    /// Runs the invariant suites.
    Selftest {
        #[arg(long, value_enum, default_value_t = LevelArg::Quick)]
        level: LevelArg,
    },
}

enum Failure {
    Usage(String),
    Disagreement(String),
    Selftest,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::RouteDisagreement { .. } => Failure::Disagreement(e.to_string()),
            e => Failure::Usage(e.to_string()),
        }
    }
}

fn parse_list(text: &str) -> Result<Vec<Vec<usize>>, Failure> {
    text.split(';')
        .map(|item| {
            item.split(',')
                .map(|x| {
                    x.trim()
                        .parse::<usize>()
                        .map_err(|_| Failure::Usage(format!("cannot parse {x:?} in {text:?}")))
                })
                .collect()
        })
        .collect()
}

fn subsets(shape: Shape, text: &str) -> Result<Vec<Subset>, Failure> {
    parse_list(text)?
        .into_iter()
        .map(|v| {
            let s = Subset::new(v);
            shape.check(&s)?;
            Ok(s)
        })
        .collect()
}

fn emit(format: Format, value: &impl Serialize, rows: Vec<Vec<String>>) {
    match format {
        Format::Json => println!("{}", serde_json::to_string(value).unwrap()),
        Format::Table | Format::Csv => print_table(format, &rows),
    }
}

/// First row is the header.
fn print_table(format: Format, rows: &[Vec<String>]) {
    if format == Format::Csv {
        for row in rows {
            println!("{}", row.join(","));
        }
        return;
    }
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    for row in rows {
        let cells: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(c, s)| format!("{s:<w$}", w = widths[c]))
            .collect();
        println!("{}", cells.join("  ").trim_end());
    }
}

fn fmt_subset(s: &Subset) -> String {
    s.to_string()
}

fn open_cache(flag: Option<PathBuf>) -> Option<Cache> {
    let path = flag.or_else(|| std::env::var_os(CACHE_ENV).map(PathBuf::from))?;
    let (cache, warning) = Cache::open(path);
    if let Some(w) = warning {
        eprintln!("warning: {w}");
    }
    Some(cache)
}

fn save_cache(cache: Option<&Cache>) {
    if let Some(c) = cache {
        if let Err(e) = c.save() {
            eprintln!("warning: could not write cache: {e}");
        }
    }
}

fn report_rows(report: &SdReport) -> Vec<Vec<String>> {
    let mut rows = vec![
        vec![
            "r".into(),
            "k".into(),
            "g".into(),
            "M_factorization".into(),
            "M_gw".into(),
            "agree".into(),
        ],
        vec![
            report.r.to_string(),
            report.k.to_string(),
            report.g.to_string(),
            report.m_factorization.to_string(),
            report.m_gw.to_string(),
            report.agree.to_string(),
        ],
    ];
    if let Some(per) = &report.per_tuple {
        rows.push(vec![]);
        rows.push(vec!["tuple".into(), "value".into()]);
        for t in per {
            let names: Vec<String> = t.tuple.iter().map(fmt_subset).collect();
            rows.push(vec![names.join(" "), t.value.to_string()]);
        }
    }
    rows
}

fn run(cli: Cli) -> Result<(), Failure> {
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            return Err(Failure::Usage("--jobs must be positive".into()));
        }
        // only fails if a global pool already exists, which it cannot here
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
    let format = cli.format;
    match cli.command {
        Command::Verlinde {
            r,
            k,
            g,
            method,
            per_tuple,
        } => {
            Shape::new(r, k)?;
            if g == 0 {
                return Err(Failure::Usage("g must be positive".into()));
            }
            if method == Method::Both {
                return sd_check(format, r, k, g, per_tuple, cli.cache);
            }
            let start = Instant::now();
            let (m, name) = match method {
                Method::Factorization => (duality::m_via_factorization(r, k, g)?, "factorization"),
                _ => {
                    let cache = open_cache(cli.cache);
                    let rows = duality::gw_breakdown(r, k, g, cache.as_ref())?;
                    save_cache(cache.as_ref());
                    let m: BigInt = rows.iter().map(|t| &t.value).sum();
                    (m, "gw")
                }
            };
            let seconds = start.elapsed().as_secs_f64();
            match format {
                Format::Json => emit(
                    format,
                    &json!({"r": r, "k": k, "g": g, "M": m.to_string(), "method": name}),
                    vec![],
                ),
                Format::Csv => {
                    println!("{CSV_HEADER}");
                    println!("{}", csv_row(r, k, g, &m, None, seconds));
                }
                Format::Table => print_table(
                    format,
                    &[
                        vec![
                            "r".into(),
                            "k".into(),
                            "g".into(),
                            "M".into(),
                            "method".into(),
                        ],
                        vec![
                            r.to_string(),
                            k.to_string(),
                            g.to_string(),
                            m.to_string(),
                            name.into(),
                        ],
                    ],
                ),
            }
            Ok(())
        }
        Command::SdCheck { r, k, g, per_tuple } => {
            Shape::new(r, k)?;
            if g == 0 {
                return Err(Failure::Usage("g must be positive".into()));
            }
            sd_check(format, r, k, g, per_tuple, cli.cache)
        }
        Command::Fusion { r, k, weights } => {
            let ring = FusionRing::new(r, k)?;
            let reps = parse_list(&weights)?
                .into_iter()
                .map(|w| {
                    let rep = SuRep::new(w)?;
                    ring.check_rep(&rep)?;
                    Ok(rep)
                })
                .collect::<Result<Vec<_>, Error>>()?;
            let product = ring.product_of(&reps)?;
            let mut rows = vec![vec!["rep".into(), "coeff".into()]];
            rows.extend(
                product
                    .terms()
                    .map(|(rep, c)| vec![rep.to_string(), c.to_string()]),
            );
            emit(format, &FusionElementJson::from(&product), rows);
            Ok(())
        }
        Command::Qprod { r, n, classes } => {
            let shape = Shape::from_rn(r, n)?;
            let factors = subsets(shape, &classes)?;
            let product = product_of_basis(shape, &factors, None)?;
            let mut rows = vec![vec!["subset".into(), "q".into(), "coeff".into()]];
            rows.extend(
                product
                    .terms()
                    .map(|(s, q, c)| vec![fmt_subset(s), q.to_string(), c.to_string()]),
            );
            emit(format, &QClassJson::from(&product), rows);
            Ok(())
        }
        Command::Gw {
            r,
            n,
            subsets: text,
            d,
            twist,
        } => {
            let shape = Shape::from_rn(r, n)?;
            if twist > 0 {
                return Err(Failure::Usage(
                    "D > 0 is not supported: twisted invariants are only evaluated for D <= 0"
                        .into(),
                ));
            }
            let ins = subsets(shape, &text)?;
            let query = GwQuery::new(shape, ins, d, twist)?;
            let value = quantum::gw_twisted(&query)?;
            let names: Vec<String> = query.insertions.iter().map(fmt_subset).collect();
            emit(
                format,
                &json!({
                    "shape": [r, n],
                    "subsets": query.insertions.iter().map(|s| s.as_slice().to_vec()).collect::<Vec<_>>(),
                    "d": d,
                    "D": twist,
                    "expected_dimension": query.expected_dimension(),
                    "value": value.to_string(),
                }),
                vec![
                    vec!["subsets".into(), "d".into(), "D".into(), "value".into()],
                    vec![
                        names.join(" "),
                        d.to_string(),
                        twist.to_string(),
                        value.to_string(),
                    ],
                ],
            );
            Ok(())
        }
        Command::Shift { n, subset, d } => {
            let mut list = parse_list(&subset)?;
            if list.len() != 1 {
                return Err(Failure::Usage("--subset takes a single subset".into()));
            }
            let elements = list.pop().unwrap();
            let shape = Shape::from_rn(elements.len(), n)?;
            let s = Subset::new(elements);
            shape.check(&s)?;
            let (j, e) = shift(shape, &s, d)?;
            emit(
                format,
                &json!({"J": j.as_slice(), "d": e}),
                vec![
                    vec!["J".into(), "d".into()],
                    vec![fmt_subset(&j), e.to_string()],
                ],
            );
            Ok(())
        }
        Command::Selftest { level } => {
            let level = match level {
                LevelArg::Quick => Level::Quick,
                LevelArg::Full => Level::Full,
            };
            // a corrupt cache is reported but never fatal
            let _cache = open_cache(cli.cache);
            let results = selftest::run(level);
            let mut rows = vec![vec![
                "suite".into(),
                "result".into(),
                "seconds".into(),
                "detail".into(),
            ]];
            for r in &results {
                rows.push(vec![
                    r.name.into(),
                    if r.passed { "pass" } else { "FAIL" }.into(),
                    format!("{:.3}", r.seconds),
                    r.detail.clone(),
                ]);
            }
            let json_rows: Vec<_> = results
                .iter()
                .map(|r| json!({"suite": r.name, "pass": r.passed, "detail": r.detail}))
                .collect();
            emit(format, &json!({ "suites": json_rows }), rows);
            if results.iter().all(|r| r.passed) {
                Ok(())
            } else {
                Err(Failure::Selftest)
            }
        }
    }
}

fn sd_check(
    format: Format,
    r: usize,
    k: usize,
    g: usize,
    per_tuple: bool,
    cache: Option<PathBuf>,
) -> Result<(), Failure> {
    let cache = open_cache(cache);
    let start = Instant::now();
    let report = duality::sd_check(r, k, g, per_tuple, cache.as_ref())?;
    let seconds = start.elapsed().as_secs_f64();
    save_cache(cache.as_ref());
    match format {
        // timing is left out of JSON so that output is reproducible
        Format::Json => emit(format, &SdReportJson::new(&report, None), vec![]),
        Format::Csv => {
            println!("{CSV_HEADER}");
            println!(
                "{}",
                csv_row(
                    r,
                    k,
                    g,
                    &report.m_factorization,
                    Some(report.agree),
                    seconds
                )
            );
        }
        Format::Table => print_table(format, &report_rows(&report)),
    }
    if report.agree {
        Ok(())
    } else {
        Err(Failure::Disagreement(format!(
            "routes disagree for (r, k, g) = ({r}, {k}, {g}): {} vs {}",
            report.m_factorization, report.m_gw
        )))
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Disagreement(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Selftest) => ExitCode::from(3),
    }
}
