use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::Value;

use gaussmap::curvespec::CurveSpec;
use gaussmap::gaussmaps::{self, GaussMapReport, GaussOptions};
use gaussmap::verify::{self, CheckResult, Instance, Suite, SuiteOptions, Verdict};
use gaussmap::{cring, Error, Result};

#[derive(Parser, Debug)]
#[command(name = "gaussmap", version, about = "Exact ranks of weighted Gaussian maps on P^n and complete intersection curves")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Hilbert function of S/I next to the series prediction.
    Hilbert(HilbertArgs),
    /// Rank report for gamma_{a,b}.
    Gauss(GaussArgs),
    /// Tangent dimension from the cokernel of mu_h.
    Tangent(TangentArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
struct Source {
    /// Curve spec JSON file.
    #[arg(long, conflicts_with = "pn")]
    spec: Option<PathBuf>,
    /// Use projective space P^N itself.
    #[arg(long, value_name = "N")]
    pn: Option<usize>,
    /// Seed for specs with random forms (overrides the file).
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Args, Debug)]
struct HilbertArgs {
    #[command(flatten)]
    source: Source,
    #[arg(long, default_value_t = 0)]
    from: i64,
    #[arg(long, default_value_t = 8)]
    to: i64,
    /// Emit CSV instead of an aligned table.
    #[arg(long)]
    csv: bool,
}

#[derive(Args, Debug)]
struct GaussArgs {
    #[command(flatten)]
    source: Source,
    #[arg(short, default_value_t = 1)]
    e: i64,
    #[arg(short)]
    a: i64,
    #[arg(short)]
    b: i64,
    #[arg(long)]
    json: bool,
    /// Include the sparse matrix entries in the report.
    #[arg(long)]
    dump_matrix: bool,
    /// Accept complete intersections of dimension >= 2; the codomain is then
    /// only the presented quotient.
    #[arg(long)]
    allow_lower_bound: bool,
}

#[derive(Args, Debug)]
struct TangentArgs {
    #[arg(long)]
    spec: PathBuf,
    #[arg(long)]
    h: i64,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// all, lemma1, proposition, theorem25, kernel-bound, tangent or theorem34.
    #[arg(default_value = "all")]
    suite: String,
    /// Extra curves; replaces the built-in presets when given.
    #[arg(long)]
    spec: Vec<PathBuf>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    json: bool,
    #[arg(long)]
    g: Option<i64>,
    #[arg(long)]
    h: Option<i64>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(short, long)]
    e: Option<i64>,
    /// Largest a + b in the projective space grid.
    #[arg(long, default_value_t = 6)]
    max_t: i64,
    /// Number of consecutive twists checked from t0.
    #[arg(long, default_value_t = 3)]
    window: i64,
}

fn load_spec(path: &Path, seed: Option<u64>) -> Result<CurveSpec> {
    let mut spec = CurveSpec::from_file(path)?;
    if let (Some(seed), gaussmap::curvespec::FormsKind::Random) = (seed, &spec.kind) {
        let mut v: Value = spec.to_json();
        v["forms"] = Value::from("random");
        v["seed"] = Value::from(seed);
        spec = CurveSpec::from_value(&v)?;
    }
    Ok(spec)
}

enum Target {
    Space(usize),
    Curve(cring::CompleteIntersection),
}

fn resolve(source: &Source) -> Result<Target> {
    match (&source.spec, source.pn) {
        (Some(path), _) => {
            let spec = load_spec(path, source.seed)?;
            let ci = spec.build()?;
            Ok(Target::Curve(ci))
        }
        (None, Some(n)) => Ok(Target::Space(n)),
        (None, None) => Err(Error::InvalidInput("give --spec FILE or --pn N".into())),
    }
}

fn print_json<T: serde::Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}

fn cmd_hilbert(args: &HilbertArgs) -> Result<bool> {
    let ci = match resolve(&args.source)? {
        Target::Space(n) => cring::CompleteIntersection::projective_space(n),
        Target::Curve(ci) => ci,
    };
    let rows: Vec<(i64, usize, usize)> = (args.from..=args.to)
        .map(|m| Ok((m, ci.hilbert_function(m)?, ci.series_coefficient(m))))
        .collect::<Result<_>>()?;
    if args.csv {
        println!("m,hilbert,series,match");
        for (m, hf, s) in &rows {
            println!("{m},{hf},{s},{}", hf == s);
        }
    } else {
        println!("{:>4}  {:>10}  {:>10}  match", "m", "hilbert", "series");
        for (m, hf, s) in &rows {
            println!("{m:>4}  {hf:>10}  {s:>10}  {}", if hf == s { "yes" } else { "NO" });
        }
    }
    Ok(true)
}

fn print_report(r: &GaussMapReport) {
    println!("gamma_{{{},{}}} with e = {}, codomain twist t = {}", r.a, r.b, r.e, r.t);
    println!("  domain       {}", r.domain_dim);
    println!("  codomain     {}", r.codomain_dim);
    println!("  rank         {}", r.rank);
    println!("  kernel       {}  (eta bound {})", r.kernel_dim, r.kernel_lower_bound_eta);
    println!("  cokernel     {}", r.coker_dim);
    println!("  surjective   {}", r.surjective);
    let bf = &r.bound_lower_bf06;
    println!(
        "  rank bound   {} {} {}",
        if bf.strict { ">" } else { ">=" },
        bf.value,
        if bf.holds { "holds" } else { "VIOLATED" }
    );
    if !r.h1_conormal_vanishes {
        println!("  note         conormal H^1 is nonzero at this twist");
    }
    if r.lower_bound_only {
        println!("  note         presented codomain {} is only a lower bound", r.presented_codomain_dim);
    }
    if let Some(t) = r.tangent_dim {
        println!("  tangent      {t}");
    }
}

fn cmd_gauss(args: &GaussArgs) -> Result<bool> {
    let opts = GaussOptions {
        allow_lower_bound: args.allow_lower_bound,
        dump_matrix: args.dump_matrix,
    };
    let report = match resolve(&args.source)? {
        Target::Space(n) => gaussmaps::gauss_pn_with(n, args.e, args.a, args.b, opts)?,
        Target::Curve(ci) => gaussmaps::gauss_ci_with(&ci, args.e, args.a, args.b, opts)?,
    };
    if args.json {
        print_json(&report);
    } else {
        print_report(&report);
        if let Some(entries) = &report.matrix {
            println!("matrix {} x {}", report.matrix_rows, report.matrix_cols);
            for m in entries {
                println!("  {} {} {}", m.row, m.col, m.value);
            }
        }
    }
    Ok(true)
}

fn cmd_tangent(args: &TangentArgs) -> Result<bool> {
    let spec = load_spec(&args.spec, args.seed)?;
    let ci = spec.build()?;
    let result = verify::check_tangent_ci(&Instance::new(spec.label.clone(), ci), args.h)?;
    if args.json {
        print_json(&result);
    } else {
        let w = &result.witnesses;
        println!("{}  h = {}", spec.label, args.h);
        for key in ["genus", "xi", "zeta", "r", "rank", "coker_dim", "normal_bundle_count", "rank_upper"] {
            let name = match key {
                "coker_dim" => "tangent",
                "normal_bundle_count" => "h0(N_C) - (n+1)^2 + 1",
                "rank" => "rank mu_h",
                "rank_upper" => "rank upper bound",
                other => other,
            };
            println!("  {name:<24} {}", w[key]);
        }
        println!("  verdict                  {}", result.verdict.label());
    }
    Ok(!result.verdict.is_fail())
}

fn cmd_verify(args: &VerifyArgs) -> Result<bool> {
    let suite = Suite::parse(&args.suite)?;
    let instances = args
        .spec
        .iter()
        .map(|p| {
            let spec = load_spec(p, args.seed)?;
            Ok(Instance::new(spec.label.clone(), spec.build()?))
        })
        .collect::<Result<Vec<_>>>()?;
    let opts = SuiteOptions {
        n: args.n,
        e: args.e,
        max_t: args.max_t,
        window: args.window,
        g: args.g,
        h: args.h,
        instances,
    };
    let results: Vec<CheckResult> = verify::run_suite(suite, &opts)?;
    if args.json {
        print_json(&results);
    } else {
        print!("{}", verify::render_table(&results));
        let count = |v: Verdict| results.iter().filter(|r| r.verdict == v).count();
        println!(
            "\n{} checks: {} pass, {} windowed pass, {} info, {} fail",
            results.len(),
            count(Verdict::Pass),
            count(Verdict::WindowedPass),
            count(Verdict::Info),
            count(Verdict::Fail)
        );
    }
    Ok(!verify::any_failed(&results))
}

fn configure_threads() {
    if let Some(n) = std::env::var("GAUSSMAP_THREADS").ok().and_then(|v| v.trim().parse::<usize>().ok()) {
        if n > 0 {
            // Only fails if a pool already exists, which cannot happen this early.
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
    }
}

fn main() -> ExitCode {
    configure_threads();
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Hilbert(a) => cmd_hilbert(a),
        Command::Gauss(a) => cmd_gauss(a),
        Command::Tangent(a) => cmd_tangent(a),
        Command::Verify(a) => cmd_verify(a),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
