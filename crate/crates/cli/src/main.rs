use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use knotpair::alpha::AlphaOptions;
use knotpair::db::Database;
use knotpair::families::{pretzel_grams, PretzelParams, TorusData, TorusParams};
use knotpair::quandle::{
    cocycle_invariant, Bilinear, Cocycle2, Enumeration, FiniteAlexanderQuandle,
};
use knotpair::report::{analyze, AnalysisOptions, KnotSummary};
use knotpair::seifert::Normalization;
use knotpair::verify::{
    analyze_all, crossing_number, run_suite, Suite, SuiteReport, VerifyOptions,
};

mod cache;
mod import;

use cache::Cache;

#[derive(Parser)]
#[command(
    name = "knotpair",
    version,
    about = "Blanchfield and cup-product pairings of knots over Z[t, t^-1]"
)]
struct Cli {
    /// Knot database (JSON); the bundled table when absent.
    #[arg(long, env = "KNOTPAIR_DB", global = true)]
    db: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Window cap for residue division.
    #[arg(long, global = true)]
    window: Option<i64>,
    /// Match table values up to `t^k` and norms only, not up to sign.
    #[arg(long, global = true)]
    strict_sign: bool,
    /// Cache directory; defaults to $XDG_CACHE_HOME/knotpair
    #[arg(long, env = "KNOTPAIR_CACHE", global = true)]
    cache_dir: Option<PathBuf>,
    /// Compute everything afresh and write nothing
    #[arg(long, global = true)]
    no_cache: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct KnotArg {
    /// Knot name, e.g. 6_2 or 11n_73.
    name: Option<String>,
    /// Same as the positional name
    #[arg(long = "knot", conflicts_with = "name")]
    knot: Option<String>,
}

impl KnotArg {
    fn get(&self) -> Result<&str> {
        self.name
            .as_deref()
            .or(self.knot.as_deref())
            .ok_or_else(|| anyhow!("no knot given"))
    }
}

#[derive(Subcommand)]
enum Command {
    /// List the knots in the database.
    List,
    /// Δ, both Seifert-side Grams, the weight Gram, α and the verdict.
    Invariants(KnotArg),
    /// α with its orbit and classification.
    Alpha(KnotArg),
    /// α for every knot under 8 crossings against the expected values.
    Table1,
    /// α and verdicts for the knots of 8 or more crossings.
    Table2,
    /// Run verification suites; exits nonzero on failure.
    Verify {
        /// Suites to run (table1, table2, cor33, delta, symmetry, pretzel,
        /// torus, local, appendix, units, all).
        #[arg(default_value = "all")]
        suites: Vec<String>,
        /// Seed for random trials and pretzel samples
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// Random trials per local tangle identity
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        /// Number of random pretzel triples.
        #[arg(long, default_value_t = 20)]
        samples: usize,
        /// Print every check, not only failures.
        #[arg(long, short)]
        verbose: bool,
    },
    /// Closed-form Grams of the pretzel knot P(p, q, r), p, q, r odd.
    #[command(allow_negative_numbers = true)]
    Pretzel { p: i64, q: i64, r: i64 },
    /// Alexander polynomial, weight coefficient and Gram of T(m, n).
    Torus { m: i64, n: i64 },
    /// Quandle cocycle invariant over the Alexander quandle (Z_n, t).
    Cocycle {
        #[command(flatten)]
        knot: KnotArg,
        /// `n,t`, e.g. `3,2`.
        #[arg(long)]
        quandle: String,
        /// `product` or `product:k` for ψ(x, y) = kxy.
        #[arg(long, default_value = "product")]
        psi: String,
        /// Enumerate colorings by brute force instead of linear solving.
        #[arg(long)]
        brute: bool,
    },
    /// Convert a KnotInfo CSV export into a database file.
    Import {
        csv: PathBuf,
        #[arg(long, short)]
        output: Option<PathBuf>,
        /// Keep records that fail validation.
        #[arg(long)]
        keep_invalid: bool,
    },
}

struct Ctx {
    db: Database,
    db_text: String,
    format: Format,
    analysis: AnalysisOptions,
    cache: Cache,
}

impl Ctx {
    fn new(cli: &Cli) -> Result<Self> {
        let db = match &cli.db {
            Some(p) => Database::load(p).with_context(|| format!("loading {}", p.display()))?,
            None => Database::bundled(),
        };
        let db_text = db.to_json();
        let analysis = AnalysisOptions {
            alpha: AlphaOptions {
                strict_sign: cli.strict_sign,
                ..AlphaOptions::default()
            },
            normalization: Normalization::Symmetric,
            window: cli.window,
        };
        let cache = match (&cli.cache_dir, cli.no_cache) {
            (_, true) => Cache::disabled(),
            (Some(d), false) => Cache::at(d.clone()),
            (None, false) => Cache::default_dir().map_or_else(Cache::disabled, Cache::at),
        };
        Ok(Ctx {
            db,
            db_text,
            format: cli.format,
            analysis,
            cache,
        })
    }

    fn cache_key(&self, command: &str, arg: &str) -> String {
        let fmt = match self.format {
            Format::Text => "text",
            Format::Json => "json",
        };
        let opts = serde_json::to_string(&self.analysis).expect("serializable");
        Cache::key(&[command, arg, fmt, &opts, &self.db_text])
    }

    fn summary(&self, name: &str) -> Result<KnotSummary> {
        let k = self.db.knot(name)?;
        Ok(analyze(&k, &self.analysis)?.summary())
    }
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn invariants(ctx: &Ctx, name: &str) -> Result<String> {
    let s = ctx.summary(name)?;
    Ok(match ctx.format {
        Format::Text => s.to_string(),
        Format::Json => json(&s),
    })
}

fn alpha(ctx: &Ctx, name: &str) -> Result<String> {
    let s = ctx.summary(name)?;
    Ok(match ctx.format {
        Format::Text => {
            let mut out = format!("knot: {}\ndelta: {}\n", s.name, s.delta);
            write!(out, "{}", s.alpha)?;
            let v = &s.verdict;
            writeln!(
                out,
                "verdict: {}",
                if v.recoverable {
                    "recoverable"
                } else {
                    "not recoverable"
                }
            )?;
            out
        }
        Format::Json => json(&serde_json::json!({
            "name": s.name,
            "delta": s.delta,
            "alpha": s.alpha,
            "verdict": s.verdict,
        })),
    })
}

#[derive(Serialize)]
struct TableRow {
    name: String,
    alpha: String,
    expected: Option<String>,
    result: String,
    verdict: String,
}

fn table(ctx: &Ctx, select: impl Fn(u32) -> bool) -> Result<String> {
    let records = ctx
        .db
        .records()
        .filter(|r| crossing_number(&r.name).is_some_and(&select))
        .cloned()
        .collect();
    let db = Database::from_records(records)?;
    let analyses = analyze_all(&db, &ctx.analysis);
    let mut rows = Vec::new();
    for (name, r) in &analyses.entries {
        let row = match r {
            Ok((_, a)) => {
                let s = a.summary();
                let result = s
                    .alpha
                    .expected_match
                    .clone()
                    .unwrap_or_else(|| "n/a".into());
                TableRow {
                    name: name.clone(),
                    alpha: s.alpha.value,
                    expected: s.alpha.expected,
                    result,
                    verdict: if s.verdict.recoverable {
                        "recoverable"
                    } else {
                        "not recoverable"
                    }
                    .into(),
                }
            }
            Err(e) => TableRow {
                name: name.clone(),
                alpha: "error".into(),
                expected: None,
                result: e.clone(),
                verdict: String::new(),
            },
        };
        rows.push(row);
    }
    let out = match ctx.format {
        Format::Json => json(&rows),
        Format::Text => {
            let w = |f: &dyn Fn(&TableRow) -> usize, h: &str| {
                rows.iter().map(f).max().unwrap_or(0).max(h.len())
            };
            let w0 = w(&|r| r.name.len(), "knot");
            let w1 = w(&|r| r.alpha.len(), "alpha");
            let w2 = w(&|r| r.expected.as_deref().unwrap_or("-").len(), "expected");
            let w3 = w(&|r| r.result.len(), "result");
            let mut out = format!(
                "{:w0$}  {:w1$}  {:w2$}  {:w3$}  verdict\n",
                "knot", "alpha", "expected", "result"
            );
            for r in &rows {
                writeln!(
                    out,
                    "{:w0$}  {:w1$}  {:w2$}  {:w3$}  {}",
                    r.name,
                    r.alpha,
                    r.expected.as_deref().unwrap_or("-"),
                    r.result,
                    r.verdict
                )?;
            }
            let matched = rows
                .iter()
                .filter(|r| r.result.starts_with("match"))
                .count();
            writeln!(out, "{matched}/{} rows match", rows.len())?;
            out
        }
    };
    Ok(out)
}

fn render_suites(reports: &[SuiteReport], format: Format, verbose: bool) -> String {
    match format {
        Format::Json => json(&reports),
        Format::Text => {
            let mut out = String::new();
            for r in reports {
                out.push_str(&r.summary_line());
                out.push('\n');
                for c in &r.checks {
                    let tag = match (c.passed, c.required) {
                        (true, _) => "ok",
                        (false, true) => "FAILED",
                        (false, false) => "info",
                    };
                    if verbose || !c.passed {
                        out.push_str(&format!("    [{tag}] {}: {}\n", c.label, c.detail));
                    }
                }
            }
            let failed = reports.iter().filter(|r| !r.passed()).count();
            out.push_str(&format!(
                "{} of {} suites passed\n",
                reports.len() - failed,
                reports.len()
            ));
            out
        }
    }
}

fn verify(
    ctx: &Ctx,
    suites: &[String],
    options: VerifyOptions,
    verbose: bool,
) -> Result<(String, bool)> {
    let mut selected = Vec::new();
    for s in suites {
        if s == "all" {
            selected.extend(Suite::ALL);
        } else {
            selected.push(s.parse::<Suite>().map_err(|e| anyhow!(e))?);
        }
    }
    selected.dedup();
    let analyses = selected
        .iter()
        .any(|s| s.needs_analyses())
        .then(|| analyze_all(&ctx.db, &options.analysis));
    let reports: Vec<SuiteReport> = selected
        .iter()
        .map(|&s| run_suite(s, &ctx.db, analyses.as_ref(), &options))
        .collect();
    let ok = reports.iter().all(SuiteReport::passed);
    Ok((render_suites(&reports, ctx.format, verbose), ok))
}

fn pretzel(ctx: &Ctx, p: i64, q: i64, r: i64) -> Result<String> {
    let d = pretzel_grams(PretzelParams::new(p, q, r)?)?;
    let computed = d.computed_cbl(Normalization::Symmetric)?;
    let ratio = d.ratio()?;
    let alpha = d.alpha()?;
    let gram_equal = computed.entries_equal(&d.cbl);
    let ratio_holds = d.ratio_holds()?;
    Ok(match ctx.format {
        Format::Json => json(&serde_json::json!({
            "params": [p, q, r],
            "seifert": d.params.seifert_rows(),
            "kernel_seifert": d.params.kernel_seifert_rows(),
            "delta": d.seifert.modulus().delta().to_string(),
            "cbl_closed": d.cbl.report(),
            "cbl_computed": computed.report(),
            "q_closed": d.q.report(),
            "gram_equal": gram_equal,
            "ratio": ratio.display_rep().to_string(),
            "ratio_holds": ratio_holds,
            "alpha": alpha.display_rep().to_string(),
        })),
        Format::Text => {
            let mut out = format!("pretzel: P({p},{q},{r})\n");
            writeln!(out, "seifert:\n{}", d.seifert.v())?;
            writeln!(out, "kernel seifert:\n{}", d.kernel_seifert.v())?;
            writeln!(out, "delta: {}", d.seifert.modulus().delta())?;
            write!(out, "cbl closed form:\n{}", d.cbl)?;
            write!(out, "cbl computed on (v, -w):\n{computed}")?;
            writeln!(out, "cbl equal: {gram_equal}")?;
            write!(out, "weight closed form:\n{}", d.q)?;
            writeln!(
                out,
                "ratio: {} ({})",
                ratio.display_rep(),
                if ratio_holds { "holds" } else { "fails" }
            )?;
            writeln!(out, "alpha: {}", alpha.display_rep())?;
            out
        }
    })
}

fn torus(ctx: &Ctx, m: i64, n: i64) -> Result<String> {
    let t = TorusData::new(TorusParams::new(m, n)?)?;
    let c = t.q_coefficient()?;
    let unit = t.calibration_unit(4)?;
    let basis = t.coloring_generators()?;
    let gram = knotpair::diagram::weight_gram(t.diagram(), &basis)?;
    let p = t.params;
    Ok(match ctx.format {
        Format::Json => json(&serde_json::json!({
            "params": p,
            "delta": t.modulus.delta().to_string(),
            "coefficient": c.display_rep().to_string(),
            "calibration_unit": unit.map(|u| u.to_string()),
            "diagram": t.diagram().to_string(),
            "weight": gram.report(),
        })),
        Format::Text => {
            let mut out = format!("torus: T({m},{n}), a = {}, b = {}\n", p.a, p.b);
            writeln!(out, "delta: {}", t.modulus.delta())?;
            writeln!(out, "diagram: {}", t.diagram())?;
            writeln!(out, "coefficient: {}", c.display_rep())?;
            match unit {
                Some(u) => writeln!(out, "weight(y1, y2) = ({u}) * coefficient * conj(y1) * y2")?,
                None => writeln!(out, "weight: no calibration unit found")?,
            }
            write!(out, "weight gram:\n{gram}")?;
            out
        }
    })
}

fn parse_quandle(s: &str) -> Result<FiniteAlexanderQuandle> {
    let (n, t) = s
        .split_once(',')
        .ok_or_else(|| anyhow!("expected `n,t`, got `{s}`"))?;
    Ok(FiniteAlexanderQuandle::new(
        n.trim().parse()?,
        t.trim().parse()?,
    )?)
}

fn parse_psi(s: &str, n: u64) -> Result<Bilinear> {
    match s.split_once(':') {
        None if s == "product" => Ok(Bilinear::product(n, 1)),
        Some(("product", k)) => Ok(Bilinear::product(n, k.trim().parse()?)),
        _ => bail!("unknown psi `{s}` (expected product or product:k)"),
    }
}

#[derive(Serialize)]
struct CocycleOut {
    knot: String,
    quandle: (u64, u64),
    diagrams: Vec<Vec<(u64, usize)>>,
}

fn cocycle(ctx: &Ctx, name: &str, quandle: &str, psi: &str, brute: bool) -> Result<String> {
    let q = parse_quandle(quandle)?;
    let psi = parse_psi(psi, q.order())?;
    let phi = Cocycle2::from_psi(q, &psi)?;
    let k = ctx.db.knot(name)?;
    let how = if brute {
        Enumeration::BruteForce
    } else {
        Enumeration::Linear
    };
    let diagrams = k
        .diagrams()
        .into_iter()
        .map(|d| cocycle_invariant(d, &phi, how).map(|m| m.into_iter().collect()))
        .collect::<Result<Vec<Vec<(u64, usize)>>, _>>()?;
    let out = CocycleOut {
        knot: k.name().to_string(),
        quandle: (q.order(), q.t()),
        diagrams,
    };
    Ok(match ctx.format {
        Format::Json => json(&out),
        Format::Text => {
            let mut s = format!(
                "knot: {}\nquandle: Z_{}, t = {}\n",
                out.knot, out.quandle.0, out.quandle.1
            );
            for (i, m) in out.diagrams.iter().enumerate() {
                let total: usize = m.iter().map(|x| x.1).sum();
                let terms: Vec<String> = m.iter().map(|(v, c)| format!("{c}*u^{v}")).collect();
                writeln!(
                    s,
                    "diagram {i}: {total} colorings, invariant {}",
                    terms.join(" + ")
                )?;
            }
            let same = out.diagrams.windows(2).all(|w| w[0] == w[1]);
            writeln!(s, "diagrams agree: {same}")?;
            s
        }
    })
}

fn import(path: &PathBuf, output: Option<&PathBuf>, keep_invalid: bool) -> Result<String> {
    let file = std::fs::File::open(path).with_context(|| format!("opening {}", path.display()))?;
    let mut records = import::import_csv(file)?;
    let mut report = String::new();
    records.retain(|r| match knotpair::db::validate(r) {
        Ok(_) => true,
        Err(e) => {
            report.push_str(&format!("{}: {e}\n", r.name));
            keep_invalid
        }
    });
    let db = Database::from_records(records)?;
    let text = db.to_json() + "\n";
    match output {
        Some(p) => {
            std::fs::write(p, &text).with_context(|| format!("writing {}", p.display()))?;
            eprint!("{report}");
            Ok(format!("wrote {} records to {}\n", db.len(), p.display()))
        }
        None => {
            eprint!("{report}");
            Ok(text)
        }
    }
}

fn list(ctx: &Ctx) -> Result<String> {
    let rows: Vec<_> = ctx
        .db
        .records()
        .map(|r| {
            serde_json::json!({
                "name": r.name,
                "alt_pd": r.alt_pd.is_some(),
                "expected_alpha": r.expected_alpha,
                "optional": r.optional,
            })
        })
        .collect();
    Ok(match ctx.format {
        Format::Json => json(&rows),
        Format::Text => ctx
            .db
            .records()
            .map(|r| {
                format!(
                    "{}{}{}\n",
                    r.name,
                    if r.alt_pd.is_some() {
                        "  (2 diagrams)"
                    } else {
                        ""
                    },
                    if r.optional { "  optional" } else { "" }
                )
            })
            .collect(),
    })
}

fn run(cli: Cli) -> Result<bool> {
    if let Command::Import {
        csv,
        output,
        keep_invalid,
    } = &cli.command
    {
        print!("{}", import(csv, output.as_ref(), *keep_invalid)?);
        return Ok(true);
    }
    let ctx = Ctx::new(&cli)?;
    let (out, ok) = match &cli.command {
        Command::List => (list(&ctx)?, true),
        Command::Invariants(k) => {
            let name = k.get()?;
            let key = ctx.cache_key("invariants", name);
            (
                ctx.cache.get_or_insert(&key, || invariants(&ctx, name))?,
                true,
            )
        }
        Command::Alpha(k) => {
            let name = k.get()?;
            let key = ctx.cache_key("alpha", name);
            (ctx.cache.get_or_insert(&key, || alpha(&ctx, name))?, true)
        }
        Command::Table1 => (
            ctx.cache
                .get_or_insert(&ctx.cache_key("table1", ""), || table(&ctx, |c| c < 8))?,
            true,
        ),
        Command::Table2 => (
            ctx.cache
                .get_or_insert(&ctx.cache_key("table2", ""), || table(&ctx, |c| c >= 8))?,
            true,
        ),
        Command::Verify {
            suites,
            seed,
            trials,
            samples,
            verbose,
        } => {
            let options = VerifyOptions {
                seed: *seed,
                trials: *trials,
                pretzel_samples: *samples,
                analysis: ctx.analysis,
            };
            verify(&ctx, suites, options, *verbose)?
        }
        Command::Pretzel { p, q, r } => (pretzel(&ctx, *p, *q, *r)?, true),
        Command::Torus { m, n } => (torus(&ctx, *m, *n)?, true),
        Command::Cocycle {
            knot,
            quandle,
            psi,
            brute,
        } => (cocycle(&ctx, knot.get()?, quandle, psi, *brute)?, true),
        Command::Import { .. } => unreachable!(),
    };
    print!("{out}");
    Ok(ok)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
