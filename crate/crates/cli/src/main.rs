use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use grafcl::checks::{self, CheckConfig, CheckReport, Suite};
use grafcl::table::{self, TableDocument};
use grafcl::{expr, ProductKind, Signature};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "grafcl",
    version,
    about = "Exact Graf-Clifford algebra of forms"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an expression, e.g. `grafcl eval --sig 2,0 'e12 <> e12'`.
    Eval {
        #[arg(long, value_parser = parse_sig)]
        sig: Signature,
        #[arg(long, value_enum, default_value_t = EvalFormat::Text)]
        format: EvalFormat,
        expr: String,
    },
    /// Emit the full multiplication table of a product over the blade basis.
    Table {
        #[arg(long, value_parser = parse_sig, required_unless_present = "validate")]
        sig: Option<Signature>,
        #[arg(long, value_parser = parse_product, default_value = "graf")]
        product: ProductKind,
        #[arg(long, value_enum, default_value_t = TableFormat::Json)]
        format: TableFormat,
        /// Re-check a previously emitted JSON table against the kernel.
        #[arg(long, value_name = "FILE", conflicts_with = "sig")]
        validate: Option<PathBuf>,
    },
    /// Run identity suites for one signature, or every signature with --sweep.
    Check {
        #[arg(long, value_parser = parse_sig, required_unless_present = "sweep")]
        sig: Option<Signature>,
        #[arg(long, conflicts_with = "sig")]
        sweep: bool,
        #[command(flatten)]
        opts: CheckOpts,
    },
    /// Run identity suites for every signature with 1 <= p+q <= max-n.
    Sweep {
        #[command(flatten)]
        opts: CheckOpts,
    },
}

#[derive(Args)]
struct CheckOpts {
    #[arg(long, value_parser = parse_suite, default_value = "all")]
    suite: Suite,
    #[arg(long, default_value_t = 6)]
    max_n: u32,
    #[arg(long, value_enum, default_value_t = EvalFormat::Text)]
    format: EvalFormat,
    /// Random forms per randomized check.
    #[arg(long, default_value_t = CheckConfig::default().random_forms)]
    samples: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum EvalFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Json,
    Csv,
    Text,
}

fn parse_sig(s: &str) -> Result<Signature, String> {
    let (p, q) = s
        .split_once(',')
        .ok_or_else(|| format!("expected P,Q, got {s:?}"))?;
    let p = p.trim().parse().map_err(|e| format!("bad p: {e}"))?;
    let q = q.trim().parse().map_err(|e| format!("bad q: {e}"))?;
    Signature::new(p, q).map_err(|e| e.to_string())
}

fn parse_product(s: &str) -> Result<ProductKind, String> {
    s.parse().map_err(|e: grafcl::Error| e.to_string())
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: grafcl::Error| e.to_string())
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("grafcl: {msg}");
    ExitCode::from(EXIT_USAGE)
}

fn eval(sig: Signature, format: EvalFormat, src: &str) -> ExitCode {
    let form = match expr::eval_str(src, sig) {
        Ok(f) => f,
        Err(e) => return usage(e),
    };
    match format {
        EvalFormat::Text => println!("{form}"),
        EvalFormat::Json => {
            let terms: Vec<_> = form
                .terms()
                .map(|(b, c)| {
                    serde_json::json!({
                        "blade": b.render(sig.dim()),
                        "coeff": grafcl::rational::render(c),
                    })
                })
                .collect();
            let doc = serde_json::json!({
                "signature": {"p": sig.p(), "q": sig.q()},
                "expr": src,
                "result": terms,
            });
            println!("{}", serde_json::to_string_pretty(&doc).expect("json"));
        }
    }
    ExitCode::SUCCESS
}

fn emit(sig: Signature, kind: ProductKind, format: TableFormat) -> ExitCode {
    let doc = match table::emit_table(sig, kind) {
        Ok(d) => d,
        Err(e) => return usage(e),
    };
    let out = match format {
        TableFormat::Json => doc.to_json(),
        TableFormat::Csv => doc.to_csv(),
        TableFormat::Text => match doc.to_text() {
            Ok(t) => t,
            Err(e) => return usage(e),
        },
    };
    print!("{out}");
    if !out.ends_with('\n') {
        println!();
    }
    ExitCode::SUCCESS
}

fn validate(path: &PathBuf) -> ExitCode {
    let src = match fs::read_to_string(path) {
        Ok(s) => s,
        Err(e) => return usage(format!("{}: {e}", path.display())),
    };
    let bad = match TableDocument::from_json(&src).and_then(|d| table::validate(&d)) {
        Ok(b) => b,
        Err(e) => return usage(e),
    };
    if bad.is_empty() {
        println!("table valid");
        ExitCode::SUCCESS
    } else {
        for b in &bad {
            println!("mismatch: {b}");
        }
        ExitCode::from(EXIT_FAIL)
    }
}

fn report(r: &CheckReport, format: EvalFormat) -> ExitCode {
    match format {
        EvalFormat::Text => print!("{}", r.summary()),
        EvalFormat::Json => println!("{}", r.to_json()),
    }
    if r.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAIL)
    }
}

fn config(opts: &CheckOpts) -> CheckConfig {
    CheckConfig {
        random_forms: opts.samples,
        ..CheckConfig::default()
    }
}

fn sweep(opts: &CheckOpts) -> ExitCode {
    match checks::sweep(opts.max_n, opts.suite, &config(opts)) {
        Ok(r) => report(&r, opts.format),
        Err(e) => usage(e),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match cli.command {
        Command::Eval { sig, format, expr } => eval(sig, format, &expr),
        Command::Table {
            validate: Some(path),
            ..
        } => validate(&path),
        Command::Table {
            sig: Some(sig),
            product,
            format,
            ..
        } => emit(sig, product, format),
        Command::Table { .. } => usage("table needs --sig or --validate"),
        Command::Check {
            sig: Some(sig),
            opts,
            ..
        } => report(
            &checks::check_signature(sig, opts.suite, &config(&opts)),
            opts.format,
        ),
        Command::Check { opts, .. } => sweep(&opts),
        Command::Sweep { opts } => sweep(&opts),
    }
}
