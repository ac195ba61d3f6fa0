//! Batch front end: define an SFT in a TOML file, compute its entropy data,
//! build the roof, run the verification suite, and emit the suspension-flow
//! report. All numeric output is written with full precision; identical
//! inputs produce byte-identical files.

mod checks;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use shiftroof_core::report::{
    aj_csv, components_csv, fmt_full, language_csv, manifest_json, partition_csv, q_csv,
    report_json, root_csv,
};
use shiftroof_core::roof::{build_roof, BuildOptions};
use shiftroof_core::sft::{entropy_spectral, higher_block_recode, irreducible_components};
use shiftroof_core::sftfile::SftFile;
use shiftroof_core::subadditive::{lemma_inequality, SubadditiveSeq};
use shiftroof_core::suspension::mme_report;
use shiftroof_core::{Error as CoreError, RoofSpec, Sft};

const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_EMPTY: u8 = 3;
const EXIT_ZERO_ENTROPY: u8 = 4;

#[derive(Parser)]
#[command(
    name = "shiftroof",
    version,
    about = "Roof functions over full shifts: entropy data, pressure verification, suspension reports"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct RunArgs {
    /// SFT definition file (TOML with alphabet_size and matrix or forbidden_words)
    #[arg(long)]
    input: PathBuf,
    /// Roof constant override; must exceed max(2, log of the ambient alphabet size)
    #[arg(long)]
    c: Option<f64>,
    /// Metric base, strictly between 0 and 1
    #[arg(long, default_value_t = 0.5)]
    alpha: f64,
    /// Largest word length for partition sums and pressure estimates
    #[arg(long = "n-max", default_value_t = 60)]
    n_max: usize,
    /// Largest depth for the recursion quantity Q(r)
    #[arg(long = "r-max", default_value_t = 200)]
    r_max: usize,
    /// Truncation depth for roof integrals
    #[arg(long = "m-max", default_value_t = 200)]
    m_max: usize,
    /// Root-finding tolerance: the residual stays below tol * h(Y)
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    /// Enable brute-force cross-checks (capped at a million words)
    #[arg(long)]
    oracle: bool,
    /// Output directory for CSV/JSON artifacts
    #[arg(long, default_value = "out")]
    out: PathBuf,
}

#[derive(Subcommand)]
enum Command {
    /// Language table, spectral data, and irreducible components
    Entropy(RunArgs),
    /// Build the roof and run the full verification suite
    Verify(RunArgs),
    /// Suspension-flow report: components, lifted entropies, multiplicity
    Report(RunArgs),
    /// Echo both sides of the sub-additivity inequality for (n, k)
    Lemma {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Comma-separated sequence values b_1, b_2, ...
        #[arg(long, value_delimiter = ',')]
        values: Vec<f64>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Entropy(args) => cmd_entropy(&args),
        Command::Verify(args) => cmd_verify(&args),
        Command::Report(args) => cmd_report(&args),
        Command::Lemma { n, k, values } => cmd_lemma(n, k, values),
    };
    match code {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Failure {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Failure {
        let code = match &e {
            CoreError::EmptyShift => EXIT_EMPTY,
            CoreError::ZeroEntropy => EXIT_ZERO_ENTROPY,
            CoreError::EmptyAlphabet
            | CoreError::SymbolOutOfRange { .. }
            | CoreError::EmptyForbiddenWord
            | CoreError::MalformedMatrix
            | CoreError::InvalidDefinition(_)
            | CoreError::InvalidAlpha(_)
            | CoreError::RoofConstantTooSmall { .. } => EXIT_PARSE,
            _ => EXIT_CHECK_FAILED,
        };
        Failure::new(code, e.to_string())
    }
}

fn load_sft(path: &Path) -> Result<Sft, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::new(EXIT_PARSE, format!("cannot read {}: {e}", path.display())))?;
    let file: SftFile = toml::from_str(&text).map_err(|e| {
        // toml errors carry line/column spans
        Failure::new(EXIT_PARSE, format!("{}: {e}", path.display()))
    })?;
    Ok(file.into_sft()?)
}

/// Write into the output directory through a temporary file and a rename,
/// so failures never leave partial artifacts behind.
fn write_atomic(dir: &Path, name: &str, contents: &str) -> Result<(), Failure> {
    fs::create_dir_all(dir)
        .map_err(|e| Failure::new(1, format!("cannot create {}: {e}", dir.display())))?;
    let tmp = dir.join(format!("{name}.tmp"));
    let path = dir.join(name);
    fs::write(&tmp, contents)
        .map_err(|e| Failure::new(1, format!("cannot write {}: {e}", tmp.display())))?;
    fs::rename(&tmp, &path)
        .map_err(|e| Failure::new(1, format!("cannot rename {}: {e}", path.display())))?;
    Ok(())
}

fn build_spec(args: &RunArgs) -> Result<RoofSpec, Failure> {
    if !(args.tol > 0.0) {
        return Err(Failure::new(
            EXIT_PARSE,
            format!("--tol must be positive, got {}", args.tol),
        ));
    }
    if args.n_max == 0 || args.r_max == 0 || args.m_max == 0 {
        return Err(Failure::new(
            EXIT_PARSE,
            "--n-max, --r-max and --m-max must be positive",
        ));
    }
    let sft = load_sft(&args.input)?;
    let mut opts = BuildOptions::for_limits(args.n_max, args.r_max, args.m_max);
    opts.c = args.c;
    opts.alpha = args.alpha;
    Ok(build_roof(&sft, opts)?)
}

fn cmd_entropy(args: &RunArgs) -> Result<u8, Failure> {
    let sft = load_sft(&args.input)?;
    let recoded = higher_block_recode(&sft)?;
    let target = recoded.target;
    let spectral = entropy_spectral(&target)?;
    let lang = sft.language_table(args.n_max.max(1), shiftroof_core::sft::DEFAULT_EXACT_LIMIT)?;
    let comps = irreducible_components(&target)?;
    let (c1, c2) = lang.perron_constants(spectral.lambda, lang.len());

    write_atomic(
        &args.out,
        "language.csv",
        &language_csv(&lang, spectral.lambda),
    )?;
    write_atomic(&args.out, "components.csv", &components_csv(&comps))?;
    let summary = serde_json::json!({
        "alphabet_size": sft.alphabet().size(),
        "step": sft.step(),
        "recoded_alphabet": target.size(),
        "lambda": spectral.lambda,
        "entropy": spectral.lambda.ln(),
        "entropy_estimate": lang.entropy_estimate(),
        "spectral_residual": spectral.residual,
        "left_vector": spectral.left,
        "right_vector": spectral.right,
        "c1": c1,
        "c2": c2,
        "components": comps.len(),
    });
    write_atomic(
        &args.out,
        "spectral.json",
        &format!("{}\n", serde_json::to_string_pretty(&summary).unwrap()),
    )?;

    println!(
        "entropy: h = {} (lambda = {}), {} component(s), estimate inf (1/n) log|L_n| = {}",
        fmt_full(spectral.lambda.ln()),
        fmt_full(spectral.lambda),
        comps.len(),
        fmt_full(lang.entropy_estimate())
    );
    for (i, c) in comps.iter().enumerate() {
        println!(
            "  component {i}: symbols {:?}, entropy {:.6}",
            c.symbols, c.entropy
        );
    }
    println!(
        "wrote language.csv, components.csv, spectral.json to {}",
        args.out.display()
    );
    Ok(0)
}

fn cmd_verify(args: &RunArgs) -> Result<u8, Failure> {
    let spec = build_spec(args)?;
    let cfg = checks::VerifyConfig {
        n_max: args.n_max,
        r_max: args.r_max,
        tol: args.tol,
        oracle: args.oracle,
    };
    let out = checks::run_verify(&spec, &cfg)?;

    write_atomic(&args.out, "aj_table.csv", &aj_csv(&spec)?)?;
    write_atomic(&args.out, "q_table.csv", &q_csv(&out.q))?;
    let mut partition = partition_csv(&out.partition);
    let high = partition_csv(&out.partition_high);
    partition.push_str(high.split_once('\n').map(|x| x.1).unwrap_or(""));
    write_atomic(&args.out, "partition.csv", &partition)?;
    write_atomic(&args.out, "root_trace.csv", &root_csv(&out.root))?;
    write_atomic(&args.out, "roof_manifest.json", &manifest_json(&spec))?;

    let mut all_pass = true;
    for check in &out.checks {
        let status = if check.pass { "PASS" } else { "FAIL" };
        println!("[verify] {}: {status} - {}", check.name, check.detail);
        all_pass &= check.pass;
    }
    println!(
        "wrote aj_table.csv, q_table.csv, partition.csv, root_trace.csv, roof_manifest.json to {}",
        args.out.display()
    );
    Ok(if all_pass { 0 } else { EXIT_CHECK_FAILED })
}

fn cmd_report(args: &RunArgs) -> Result<u8, Failure> {
    let spec = build_spec(args)?;
    let (model, measures) = mme_report(&spec, args.n_max, args.tol, args.m_max)?;
    write_atomic(&args.out, "report.json", &report_json(&model, &measures))?;

    println!(
        "suspension report: h(Y) = {}, c = {}, multiplicity = {}",
        fmt_full(model.h_y),
        fmt_full(model.c),
        model.multiplicity
    );
    let enclosure = model.flow_entropy.apriori.as_ref().unwrap();
    println!(
        "flow entropy root at n = {}: {} (residual {:.3e}), enclosure [{:.12}, {:.12}]",
        args.n_max,
        fmt_full(model.flow_entropy.root),
        model.flow_entropy.residual,
        enclosure.lo,
        enclosure.hi
    );
    for comp in &model.components {
        println!(
            "  component {:?}: entropy {}, max = {}",
            comp.symbols,
            fmt_full(comp.entropy),
            comp.max_entropy
        );
    }
    for row in &measures.rows {
        println!(
            "  lift of Parry measure on {:?}: roof integral {} (+{:.3e}), lifted entropy {}",
            row.symbols,
            fmt_full(row.roof_integral),
            row.roof_integral_remainder,
            fmt_full(row.lifted_entropy)
        );
    }
    println!("wrote report.json to {}", args.out.display());
    Ok(0)
}

fn cmd_lemma(n: usize, k: usize, values: Vec<f64>) -> Result<u8, Failure> {
    let seq = SubadditiveSeq::new(values)?;
    let check = lemma_inequality(&seq, n, k)?;
    println!(
        "n,k,lhs,rhs,holds\n{n},{k},{},{},{}",
        fmt_full(check.lhs),
        fmt_full(check.rhs),
        check.holds
    );
    Ok(if check.holds { 0 } else { EXIT_CHECK_FAILED })
}
