use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hsymb::coproduct::coproduct;
use hsymb::forms::w_element;
use hsymb::inv::inv;
use hsymb::parse::parse_in;
use hsymb::render::*;
use hsymb::tensor::symbol;
use hsymb::variation::{omega_hat_definition, v_hat, FormMatrix, Variation};
use hsymb::verify::{self, Bounds, Suite};
use hsymb::{Element, Error, Sort};

#[derive(Parser)]
#[command(name = "hsymb", version, about = "Exact symbolic multiple polylogarithms")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: OutFormat,
    /// Algebra to work in: H (no inverted symbols) or Hbar.
    #[arg(long, global = true, value_enum, default_value = "H")]
    sort: SortArg,
}

#[derive(Subcommand)]
enum Command {
    /// Coproduct of an expression.
    Coproduct { expr: String },
    /// Rewrite inverted symbols in terms of ordinary ones.
    Inv { expr: String },
    /// The symbol: maximal iterated coproduct in the weight-1 variables.
    Symbol { expr: String },
    /// The holomorphic 1-form w of an expression.
    Form { expr: String },
    /// Variation matrix and its companions for a weight vector.
    Varmatrix {
        #[arg(long, value_delimiter = ',', required = true)]
        weights: Vec<u32>,
        #[arg(long, value_enum, default_value = "V")]
        what: What,
    },
    /// Run verification suites.
    Verify {
        /// Suite name or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 4)]
        max_weight: u32,
        #[arg(long, default_value_t = 3)]
        max_depth: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Text,
    Latex,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum SortArg {
    #[value(name = "H")]
    H,
    #[value(name = "Hbar")]
    Hbar,
}

#[derive(Clone, Copy, ValueEnum)]
#[value(rename_all = "verbatim")]
enum What {
    V,
    Omega,
    #[value(name = "omega")]
    SmallOmega,
    #[value(name = "omegahat")]
    OmegaHat,
    Vhat,
    #[value(name = "wV")]
    WV,
    #[value(name = "blocks")]
    Blocks,
}

enum Failure {
    Verification,
    Usage(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e)
    }
}

fn emit(format: OutFormat, text: impl FnOnce() -> String, latex: impl FnOnce() -> String, json: impl FnOnce() -> Value) {
    match format {
        OutFormat::Text => println!("{}", text()),
        OutFormat::Latex => println!("{}", latex()),
        OutFormat::Json => println!("{}", json()),
    }
}

fn emit_element(format: OutFormat, e: &Element) {
    emit(format, || element_text(e), || element_latex(e), || element_json(e));
}

fn emit_forms(format: OutFormat, m: &FormMatrix) {
    emit(format, || matrix_text(m, form_text), || matrix_latex(m, form_latex), || matrix_json(m, form_json));
}

fn varmatrix(format: OutFormat, sort: Sort, weights: &[u32], what: What) -> Result<(), Failure> {
    let var = Variation::build(weights, sort)?;
    match what {
        What::V | What::Vhat => {
            let m = if let What::V = what { var.v.clone() } else { v_hat(&var, &var.omega()?.0) };
            emit(
                format,
                || matrix_text(&m, terms_text),
                || matrix_latex(&m, terms_latex),
                || matrix_json(&m, |t| json!({ "type": "element", "sort": sort.to_string(), "terms": terms_json(t) })),
            );
        }
        What::Omega => {
            let (big, _) = var.omega()?;
            emit(format, || matrix_text(&big, poly_text), || matrix_latex(&big, poly_latex), || matrix_json(&big, poly_json));
        }
        What::SmallOmega => emit_forms(format, &var.omega()?.1),
        What::OmegaHat => {
            let (big, small) = var.omega()?;
            emit_forms(format, &omega_hat_definition(&big, &small));
        }
        What::WV => {
            let total = (1..=var.weight()).fold(var.w_entrywise(0), |acc, n| acc.plus(&var.w_entrywise(n)));
            emit_forms(format, &total);
        }
        What::Blocks => {
            let b = var.weight_blocks();
            let line = b.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
            emit(format, || line.clone(), || line.clone(), || json!({ "type": "blocks", "blocks": b }));
        }
    }
    Ok(())
}

fn run_verify(format: OutFormat, suite: &str, bounds: &Bounds) -> Result<(), Failure> {
    let suites: Vec<Suite> = if suite == "all" { Suite::ALL.to_vec() } else { vec![suite.parse()?] };
    let mut reports = Vec::new();
    for s in suites {
        let r = verify::run(s, bounds);
        eprintln!("{} ({:.2?})", r.summary(), r.elapsed);
        reports.push(r);
    }
    let passed = reports.iter().all(|r| r.passed());
    match format {
        OutFormat::Json => {
            let all: Vec<Value> = reports.iter().map(|r| r.to_json()).collect();
            println!("{}", json!({ "passed": passed, "reports": all }));
        }
        _ => reports.iter().for_each(|r| print!("{}", r)),
    }
    if passed {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let sort = match cli.sort {
        SortArg::H => Sort::H,
        SortArg::Hbar => Sort::Hbar,
    };
    let f = cli.format;
    match &cli.command {
        Command::Coproduct { expr } => {
            let t = coproduct(&parse_in(expr, sort)?);
            emit(f, || tensor_text(&t), || tensor_latex(&t), || tensor_json(&t));
        }
        Command::Inv { expr } => emit_element(f, &inv(&parse_in(expr, Sort::Hbar)?)),
        Command::Symbol { expr } => {
            let s = symbol(&parse_in(expr, sort)?);
            emit(f, || symbol_text(&s), || symbol_latex(&s), || symbol_json(&s));
        }
        Command::Form { expr } => {
            let w = w_element(&parse_in(expr, sort)?);
            emit(f, || form_text(&w), || form_latex(&w), || form_json(&w));
        }
        Command::Varmatrix { weights, what } => varmatrix(f, sort, weights, *what)?,
        Command::Verify { suite, max_weight, max_depth, seed } => {
            let bounds = Bounds { max_weight: *max_weight, max_depth: *max_depth, seed: *seed };
            run_verify(f, suite, &bounds)?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let outcome = run(&cli);
    eprintln!("wall time {:.2?}", start.elapsed());
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(e)) => {
            eprintln!("error: {}", e);
            if e == Error::InvertedInH {
                eprintln!("hint: pass --sort Hbar");
            }
            ExitCode::from(2)
        }
    }
}
