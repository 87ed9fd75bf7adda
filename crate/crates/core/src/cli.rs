//! Command-line front-end.
//!
//! Exit codes: 0 affirmative verdict, 1 negative verdict, 2 input/usage
//! error, 3 undecided (companion search budget exceeded).

use std::fmt::Write as _;
use std::io::Read;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::Value;

use quasicartan::companion::{
    find_positive_companion, CompanionError, CompanionResult, SearchOptions, DEFAULT_SEARCH_CAP,
};
use quasicartan::io::{matrix_to_text, parse_matrix_auto};
use quasicartan::matrix::IntMatrix;
use quasicartan::oracle;
use quasicartan::positivity::{all_principal_minors_positive, is_positive, PositivityVerdict};
use quasicartan::report::{classify, ClassificationReport};
use quasicartan::symmetrize::{check_symmetrizable, find_symmetrizer, integer_normalize};

const EXIT_YES: i32 = 0;
const EXIT_NO: i32 = 1;
const EXIT_ERROR: i32 = 2;
const EXIT_UNDECIDED: i32 = 3;

#[derive(Parser)]
#[command(
    name = "quasicartan",
    about = "Exact classification of integer matrices: symmetrizers, positivity, quasi-Cartan companions",
    version
)]
struct Args {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Disable the pair/triple product pruning rules in the companion search.
    #[arg(long, global = true)]
    no_prune: bool,

    /// Disable the small-dimension, dense and per-component shortcuts.
    #[arg(long, global = true)]
    no_fastpath: bool,

    /// Companion search budget (sign assignments). Overrides QUASICARTAN_CAP.
    #[arg(long, global = true, value_name = "N")]
    cap: Option<u64>,

    /// Use the brute-force oracle implementations (small matrices only).
    #[arg(long, global = true)]
    oracle: bool,

    /// Rescale reported symmetrizers to minimal positive integers.
    #[arg(long, global = true)]
    integer_symmetrizer: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a positive diagonal D exists with D*A symmetric.
    Symmetrizable { file: String },
    /// Construct a symmetrizer for a symmetrizable matrix.
    Symmetrizer { file: String },
    /// Decide positivity of a symmetrizable matrix by leading principal minors.
    Positive { file: String },
    /// Search for a positive quasi-Cartan companion of a skew-symmetrizable matrix.
    Companion { file: String },
    /// Run every classification on one matrix.
    Classify { file: String },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

pub fn run() -> i32 {
    let args = Args::parse();
    let options = match search_options(&args) {
        Ok(options) => options,
        Err(message) => return fail(EXIT_ERROR, &message),
    };
    let file = match &args.command {
        Command::Symmetrizable { file }
        | Command::Symmetrizer { file }
        | Command::Positive { file }
        | Command::Companion { file }
        | Command::Classify { file } => file.clone(),
    };
    let matrix = match read_matrix(&file) {
        Ok(m) => m,
        Err(message) => return fail(EXIT_ERROR, &message),
    };

    match args.command {
        Command::Symmetrizable { .. } => cmd_symmetrizable(&matrix, &args),
        Command::Symmetrizer { .. } => cmd_symmetrizer(&matrix, &args),
        Command::Positive { .. } => cmd_positive(&matrix, &args),
        Command::Companion { .. } => cmd_companion(&matrix, &args, &options),
        Command::Classify { .. } => cmd_classify(&matrix, &args, &options),
    }
}

fn fail(code: i32, message: &str) -> i32 {
    eprintln!("error: {message}");
    code
}

fn search_options(args: &Args) -> Result<SearchOptions, String> {
    let cap = match args.cap {
        Some(cap) => cap,
        None => match std::env::var("QUASICARTAN_CAP") {
            Ok(raw) => raw
                .parse::<u64>()
                .map_err(|_| format!("invalid QUASICARTAN_CAP value '{raw}'"))?,
            Err(_) => DEFAULT_SEARCH_CAP,
        },
    };
    Ok(SearchOptions {
        prune: !args.no_prune,
        fast_paths: !args.no_fastpath,
        cap,
    })
}

fn read_matrix(file: &str) -> Result<IntMatrix, String> {
    let content = if file == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| format!("cannot read stdin: {e}"))?;
        buf
    } else {
        std::fs::read_to_string(file).map_err(|e| format!("cannot read {file}: {e}"))?
    };
    parse_matrix_auto(&content).map_err(|e| format!("{file}: {e}"))
}

fn emit(value: &Value) {
    println!("{value}");
}

fn cmd_symmetrizable(matrix: &IntMatrix, args: &Args) -> i32 {
    if args.oracle {
        let verdict = match oracle::cycle_symmetrizable(matrix) {
            Ok(v) => v,
            Err(e) => return fail(EXIT_ERROR, &e.to_string()),
        };
        match args.format {
            Format::Json => emit(&serde_json::json!({"oracle": true, "symmetrizable": verdict})),
            Format::Text => println!("symmetrizable: {}", if verdict { "yes" } else { "no" }),
        }
        return if verdict { EXIT_YES } else { EXIT_NO };
    }

    let mut outcome = check_symmetrizable(matrix);
    if args.integer_symmetrizer {
        if let quasicartan::symmetrize::SymmetrizeVerdict::Symmetrizable(d) = &outcome.verdict {
            let normalized = integer_normalize(d, &matrix.connected_components());
            outcome.verdict = quasicartan::symmetrize::SymmetrizeVerdict::Symmetrizable(normalized);
        }
    }
    let yes = outcome.is_yes();
    match args.format {
        Format::Json => emit(&outcome.to_json_value("symmetrizable")),
        Format::Text => {
            println!("symmetrizable: {}", if yes { "yes" } else { "no" });
            if let Some(d) = outcome.witness() {
                println!("symmetrizer: {d}");
            }
            if let Some(reason) = outcome.failure() {
                println!("reason: {reason}");
            }
        }
    }
    if yes {
        EXIT_YES
    } else {
        EXIT_NO
    }
}

fn cmd_symmetrizer(matrix: &IntMatrix, args: &Args) -> i32 {
    if args.oracle {
        return fail(EXIT_ERROR, "--oracle is not supported for 'symmetrizer'");
    }
    if !check_symmetrizable(matrix).is_yes() {
        match args.format {
            Format::Json => emit(&serde_json::json!({"symmetrizable": false})),
            Format::Text => println!("not symmetrizable"),
        }
        return EXIT_NO;
    }
    let mut d = find_symmetrizer(matrix);
    if args.integer_symmetrizer {
        d = integer_normalize(&d, &matrix.connected_components());
    }
    match args.format {
        Format::Json => emit(&d.to_json_value()),
        Format::Text => println!("{d}"),
    }
    EXIT_YES
}

fn cmd_positive(matrix: &IntMatrix, args: &Args) -> i32 {
    // The leading-minor criterion presumes symmetrizability, so refuse to
    // answer for inputs without a symmetrizer.
    if let Some(reason) = check_symmetrizable(matrix).failure() {
        return fail(EXIT_ERROR, &format!("input is not symmetrizable: {reason}"));
    }
    if args.oracle {
        let verdict = if matrix.n() > oracle::ORACLE_MAX_DIM {
            return fail(
                EXIT_ERROR,
                &format!(
                    "matrix dimension {} exceeds the oracle limit {}",
                    matrix.n(),
                    oracle::ORACLE_MAX_DIM
                ),
            );
        } else {
            all_principal_minors_positive(matrix)
        };
        match args.format {
            Format::Json => emit(&serde_json::json!({"oracle": true, "positive": verdict})),
            Format::Text => println!("positive: {}", if verdict { "yes" } else { "no" }),
        }
        return if verdict { EXIT_YES } else { EXIT_NO };
    }

    let verdict = is_positive(matrix).expect("symmetrizable implies symmetric by signs");
    match args.format {
        Format::Json => emit(&verdict.to_json_value()),
        Format::Text => print_positivity_text(&verdict),
    }
    if verdict.positive {
        EXIT_YES
    } else {
        EXIT_NO
    }
}

fn print_positivity_text(verdict: &PositivityVerdict) {
    println!("positive: {}", if verdict.positive { "yes" } else { "no" });
    if let Some(k) = verdict.first_failure {
        let minor = &verdict.minors_checked.minors[k - 1];
        println!("first failure: leading minor {k} = {minor}");
    }
    let minors: Vec<String> = verdict
        .minors_checked
        .minors
        .iter()
        .map(|m| m.to_string())
        .collect();
    println!("leading minors: {}", minors.join(", "));
}

fn cmd_companion(matrix: &IntMatrix, args: &Args, options: &SearchOptions) -> i32 {
    let result = if args.oracle {
        match oracle::exhaustive_companion(matrix) {
            Ok(result) => result,
            Err(e) => return fail(EXIT_ERROR, &e.to_string()),
        }
    } else {
        match find_positive_companion(matrix, options) {
            Ok(result) => result,
            Err(e @ CompanionError::CapExceeded { .. }) => {
                return fail(EXIT_UNDECIDED, &e.to_string())
            }
            Err(e) => return fail(EXIT_ERROR, &e.to_string()),
        }
    };
    match args.format {
        Format::Json => emit(&result.to_json_value()),
        Format::Text => print_companion_text(&result),
    }
    if result.found() {
        EXIT_YES
    } else {
        EXIT_NO
    }
}

fn print_companion_text(result: &CompanionResult) {
    match &result.companion {
        Some(c) => {
            println!("companion: found");
            println!("fast path: {}", result.fast_path.as_str());
            println!("assignments tried: {}", result.assignments_tried);
            print!("{}", matrix_to_text(c));
        }
        None => {
            println!("companion: none exists");
            println!("fast path: {}", result.fast_path.as_str());
            println!("assignments tried: {}", result.assignments_tried);
        }
    }
}

fn cmd_classify(matrix: &IntMatrix, args: &Args, options: &SearchOptions) -> i32 {
    if args.oracle {
        return fail(EXIT_ERROR, "--oracle is not supported for 'classify'");
    }
    let report = classify(matrix, options, args.integer_symmetrizer);
    match args.format {
        Format::Json => emit(&report.to_json_value()),
        Format::Text => print!("{}", classify_text(&report)),
    }
    if report.companion_undecided {
        EXIT_UNDECIDED
    } else {
        EXIT_YES
    }
}

fn classify_text(report: &ClassificationReport) -> String {
    let yn = |b: bool| if b { "yes" } else { "no" };
    let mut out = String::new();
    let _ = writeln!(out, "n: {}", report.input_dims);
    let _ = writeln!(out, "symmetric by signs: {}", yn(report.symmetric_by_signs));
    let _ = writeln!(
        out,
        "skew-symmetric by signs: {}",
        yn(report.skew_symmetric_by_signs)
    );
    let _ = writeln!(out, "symmetrizable: {}", yn(report.symmetrizable()));
    if let Some(d) = &report.symmetrizer {
        let _ = writeln!(out, "symmetrizer: {d}");
    }
    let _ = writeln!(out, "skew-symmetrizable: {}", yn(report.skew_symmetrizable()));
    if let Some(d) = &report.skew_symmetrizer {
        let _ = writeln!(out, "skew-symmetrizer: {d}");
    }
    if let Some(v) = &report.positive {
        let _ = writeln!(out, "positive: {}", yn(v.positive));
        if let Some(k) = v.first_failure {
            let _ = writeln!(
                out,
                "first failure: leading minor {k} = {}",
                v.minors_checked.minors[k - 1]
            );
        }
    }
    let _ = writeln!(out, "connected: {}", yn(report.connected));
    let blocks: Vec<String> = report
        .components
        .blocks()
        .iter()
        .map(|b| {
            let ids: Vec<String> = b.iter().map(|i| (i + 1).to_string()).collect();
            format!("{{{}}}", ids.join(","))
        })
        .collect();
    let _ = writeln!(out, "components: {}", blocks.join(" "));
    if report.companion_undecided {
        let _ = writeln!(out, "companion: undecided (search budget exceeded)");
    } else if let Some(result) = &report.companion {
        match &result.companion {
            Some(c) => {
                let _ = writeln!(
                    out,
                    "companion: found (fast path: {}, assignments tried: {})",
                    result.fast_path.as_str(),
                    result.assignments_tried
                );
                out.push_str(&matrix_to_text(c));
            }
            None => {
                let _ = writeln!(
                    out,
                    "companion: none exists (assignments tried: {})",
                    result.assignments_tried
                );
            }
        }
    }
    out
}
