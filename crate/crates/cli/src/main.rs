//! `braidcount`: exact braid, syllable and counting computations from the
//! command line.

mod output;
mod verify;

use std::process::ExitCode;

use braidcount::braid::{eval, normal_form, theta, BraidWord, NormalForm};
use braidcount::classes::{class_count, class_count_floor, lower_bound_report, Variant};
use braidcount::counting::{tuple_rows, with_workers, word_rows, CountRow, Threshold};
use braidcount::exact::ClosedForm;
use braidcount::invariants::{
    entropy_bounds, lambda_tr_bounds_braid, lambda_tr_bounds_word, BoundInterval,
};
use braidcount::words::{FreeWord, Sign, SyllableKind};
use braidcount::{Error, Precision};
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::Serialize;

use output::{emit, OutputFormat};
use verify::{Limits, Suite};

#[derive(Parser)]
#[command(
    name = "braidcount",
    version,
    about = "Exact syllable invariants and counting in the braid group on three strands"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Json, global = true)]
    format: OutputFormat,

    /// Worker threads for the counting kernels. Results do not depend on it.
    #[arg(long, global = true)]
    workers: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Canonical coset form and the form s_j^k b1 D^ell of a braid.
    Normalize { braid: String },
    /// Syllable decomposition of a reduced word in a1, a2.
    Syllables { word: String },
    /// The word a_j^{q(k)/2} b1 attached to a braid.
    Theta { braid: String },
    /// Extremal length bounds, and entropy bounds when they apply.
    Bounds {
        #[arg(long, conflicts_with = "braid", required_unless_present = "braid")]
        word: Option<String>,
        #[arg(long)]
        braid: Option<String>,
    },
    /// Exact counts against their analytic bounds.
    Count {
        #[command(subcommand)]
        kind: CountKind,
    },
    /// Family lower-bound report at level Y.
    Report {
        #[arg(value_enum)]
        variant: ReportVariant,
        /// A closed-form expression such as `600*log(8)` or `600*pi*log(8)`.
        #[arg(long = "Y", allow_hyphen_values = true)]
        y: String,
    },
    /// Run the check batteries and print a pass/fail table.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long, default_value_t = 2000)]
        max_x: u64,
        #[arg(long, default_value_t = 10)]
        max_len: u64,
        #[arg(long, default_value_t = 3)]
        pairs: u32,
        #[arg(long, default_value_t = 4)]
        conj_len: u64,
    },
}

#[derive(Subcommand)]
enum CountKind {
    /// Degree tuples with product of 3d_k at most X.
    Tuples {
        #[arg(long = "X")]
        x: BigUint,
    },
    /// Reduced words whose lower syllable length is at most log X.
    Words {
        #[arg(long = "X")]
        x: BigUint,
    },
    /// Conjugacy classes in the alternating family with 2j terms.
    Classes {
        #[arg(long)]
        pairs: u32,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportVariant {
    Lambda,
    Entropy,
}

/// Exit 2 for input the tool rejects, 1 for a computation that failed.
enum Failure {
    Input(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Undecidable(_) => Failure::Runtime(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

#[derive(Serialize)]
struct NormalizeRow {
    input: String,
    coset: String,
    tag: &'static str,
    form: String,
    j: Option<u8>,
    k: Option<i64>,
    b1: Option<String>,
    ell: u8,
}

#[derive(Serialize)]
struct SyllableRow {
    index: usize,
    kind: &'static str,
    sign: &'static str,
    degree: u64,
    start: String,
    text: String,
}

#[derive(Serialize)]
struct ThetaRow {
    input: String,
    form: String,
    theta: Option<String>,
    reason: Option<String>,
}

#[derive(Serialize)]
struct BoundsRow {
    quantity: &'static str,
    input: String,
    exact_zero: Option<bool>,
    lower_form: Option<String>,
    upper_form: Option<String>,
    lower_log_arg: Option<String>,
    upper_log_arg: Option<String>,
    lower_value: Option<String>,
    upper_value: Option<String>,
    omitted_reason: Option<String>,
}

impl BoundsRow {
    fn of(quantity: &'static str, input: &str, iv: &BoundInterval, prec: Precision) -> BoundsRow {
        let s = iv.summary(prec);
        let (lower_form, upper_form) = if iv.exact_zero {
            ("0".to_string(), "0".to_string())
        } else {
            (iv.lower().to_string(), iv.upper().to_string())
        };
        BoundsRow {
            quantity,
            input: input.to_string(),
            exact_zero: Some(s.exact_zero),
            lower_form: Some(lower_form),
            upper_form: Some(upper_form),
            lower_log_arg: Some(s.lower_log_arg),
            upper_log_arg: Some(s.upper_log_arg),
            lower_value: Some(s.lower_value),
            upper_value: Some(s.upper_value),
            omitted_reason: None,
        }
    }

    fn omitted(quantity: &'static str, input: &str, reason: String) -> BoundsRow {
        BoundsRow {
            quantity,
            input: input.to_string(),
            exact_zero: None,
            lower_form: None,
            upper_form: None,
            lower_log_arg: None,
            upper_log_arg: None,
            lower_value: None,
            upper_value: None,
            omitted_reason: Some(reason),
        }
    }
}

fn parse_braid(text: &str) -> Result<BraidWord, Failure> {
    text.parse().map_err(Failure::from)
}

fn parse_word(text: &str) -> Result<FreeWord, Failure> {
    text.parse().map_err(Failure::from)
}

fn normalize(text: &str) -> Result<NormalizeRow, Failure> {
    let x = eval(&parse_braid(text)?);
    let f = normal_form(&x);
    let (tag, j, k, b1) = match &f {
        NormalForm::PowerOfDelta { .. } => ("power_of_delta", None, None, None),
        NormalForm::General { j, k, b1, .. } => {
            ("general", Some(j.index()), Some(*k), Some(b1.to_string()))
        }
    };
    Ok(NormalizeRow {
        input: text.to_string(),
        coset: x.to_string(),
        tag,
        form: f.to_string(),
        j,
        k,
        b1,
        ell: f.ell(),
    })
}

fn syllables(text: &str) -> Result<Vec<SyllableRow>, Failure> {
    let w = parse_word(text)?;
    Ok(w.syllables()
        .syllables
        .iter()
        .enumerate()
        .map(|(i, s)| SyllableRow {
            index: i + 1,
            kind: match s.kind {
                SyllableKind::First => "first",
                SyllableKind::Second => "second",
            },
            sign: match s.sign {
                Sign::Plus => "+",
                Sign::Minus => "-",
            },
            degree: s.degree,
            start: s.start.to_string(),
            text: FreeWord::from_terms(s.expand()).to_string(),
        })
        .collect())
}

fn theta_row(text: &str) -> Result<ThetaRow, Failure> {
    let f = normal_form(&eval(&parse_braid(text)?));
    let (theta, reason) = match theta(&f) {
        Ok(w) => (Some(w.to_string()), None),
        Err(e) => (None, Some(e.to_string())),
    };
    Ok(ThetaRow {
        input: text.to_string(),
        form: f.to_string(),
        theta,
        reason,
    })
}

fn bounds(
    word: Option<&str>,
    braid: Option<&str>,
    prec: Precision,
) -> Result<Vec<BoundsRow>, Failure> {
    let (input, lambda, entropy_word) = match (word, braid) {
        (Some(text), _) => {
            let w = parse_word(text)?;
            (text, lambda_tr_bounds_word(&w), Ok(w))
        }
        (None, Some(text)) => {
            let b = parse_braid(text)?;
            let t = theta(&normal_form(&eval(&b))).map_err(|e| e.to_string());
            (text, lambda_tr_bounds_braid(&b), t)
        }
        (None, None) => {
            return Err(Failure::Input(
                "one of --word or --braid is required".into(),
            ))
        }
    };
    let mut rows = vec![BoundsRow::of("lambda_tr", input, &lambda, prec)];
    let entropy = entropy_word.and_then(|w| entropy_bounds(&w).map_err(|e| e.to_string()));
    rows.push(match entropy {
        Ok(iv) => BoundsRow::of("entropy", input, &iv, prec),
        Err(reason) => BoundsRow::omitted("entropy", input, reason),
    });
    Ok(rows)
}

fn count(kind: &CountKind, prec: Precision) -> Result<Vec<CountRow>, Failure> {
    Ok(match kind {
        CountKind::Tuples { x } => tuple_rows(&Threshold::new(x.clone()), prec)?,
        CountKind::Words { x } => word_rows(&Threshold::new(x.clone()), prec)?,
        CountKind::Classes { pairs } => {
            if *pairs == 0 {
                return Err(Failure::Input("--pairs must be at least 1".into()));
            }
            let exact = class_count(*pairs)?;
            let floor = class_count_floor(*pairs);
            vec![CountRow {
                function: "class_count".into(),
                j: Some(*pairs),
                x: None,
                exact: exact.to_string(),
                bound: floor.to_string(),
                satisfied: exact >= floor,
            }]
        }
    })
}

fn run(cli: Cli) -> Result<bool, Failure> {
    let prec = Precision::from_env()?;
    let format = cli.format;
    let out = |r: Result<(), String>| r.map_err(Failure::Runtime);
    match &cli.command {
        Command::Normalize { braid } => out(emit(&[normalize(braid)?], format))?,
        Command::Syllables { word } => out(emit(&syllables(word)?, format))?,
        Command::Theta { braid } => out(emit(&[theta_row(braid)?], format))?,
        Command::Bounds { word, braid } => out(emit(
            &bounds(word.as_deref(), braid.as_deref(), prec)?,
            format,
        ))?,
        Command::Count { kind } => out(emit(&count(kind, prec)?, format))?,
        Command::Report { variant, y } => {
            let y = ClosedForm::parse(y)?;
            let variant = match variant {
                ReportVariant::Lambda => Variant::Lambda,
                ReportVariant::Entropy => Variant::Entropy,
            };
            out(emit(&[lower_bound_report(&y, variant, prec)?], format))?
        }
        Command::Verify {
            suite,
            max_x,
            max_len,
            pairs,
            conj_len,
        } => {
            let limits = Limits {
                max_x: *max_x,
                max_len: *max_len,
                pairs: *pairs,
                conj_len: *conj_len,
            };
            let rows = verify::run(*suite, &limits);
            out(emit(&rows, format))?;
            return Ok(rows.iter().all(|r| r.passed));
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.workers {
        Some(0) => Err(Failure::Input("--workers must be at least 1".into())),
        Some(n) => with_workers(n, || run(cli)).unwrap_or_else(|e| Err(e.into())),
        None => run(cli),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
