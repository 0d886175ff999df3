//! Command-line surface over the freelang library.
//!
//! Exit codes: 0 success (all verdicts match / below bound), 1 usage or
//! input error, 2 a measured complexity exceeded a non-conjectural bound
//! (or a check failed) — that means a bug, so it fails loudly.

use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use freelang::bounds::{expected_bound, LangClass, OpKind};
use freelang::checks::{CheckConfig, CheckStatus};
use freelang::enumeration::{FreenessKind, SearchSpec};
use freelang::report::{ComplexityReport, Expected};
use freelang::witness::WitnessFamily;
use freelang::{checks, enumeration, freeness, textfmt, witness};
use freelang::{BoolOp, Dfa, Error, FreeClass, Result};

#[derive(Parser)]
#[command(name = "freelang", version, about = "Free regular languages: classification, operations, complexity bounds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the language of a DFA file (freeness flags and complexity)
    Classify {
        /// Automaton in the text DFA format
        file: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Apply an operation to DFA files and compare against the bound table
    Op {
        /// union | intersection | difference | symmetric-difference |
        /// product | star | reverse
        operation: String,
        left: PathBuf,
        /// Required for binary operations
        right: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Write the resulting automaton into this directory
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a witness family and verify its expected complexities
    Witness {
        /// Family name; see `witness --help` for the list
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(WitnessFamily::NAMES))]
        family: String,
        #[arg(short)]
        m: Option<usize>,
        #[arg(short)]
        n: Option<usize>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Write the operand automata and the report into this directory
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Render a bound table (1 = boolean operations, 2 = product/star/reversal)
    Table {
        /// 1 or 2
        id: u8,
        #[arg(short, default_value_t = 5)]
        m: usize,
        #[arg(short, default_value_t = 6)]
        n: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Exhaustive worst-case search over a free class
    Enumerate {
        /// prefix | suffix | bifix | factor | subword
        #[arg(long)]
        class: String,
        #[arg(long, default_value_t = 2)]
        alphabet_size: usize,
        #[arg(short)]
        m: usize,
        #[arg(short)]
        n: usize,
        /// union | intersection | difference | symmetric-difference
        #[arg(long, default_value = "union")]
        op: String,
        #[arg(long)]
        workers: Option<usize>,
        /// Allow searches beyond the supported grid, capped at this many pairs
        #[arg(long)]
        force_cap: Option<u64>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Write the attaining pair and the result into this directory
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the whole verification suite
    Check {
        /// Seed for the randomized property suites (default: FREELANG_SEED)
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        workers: Option<usize>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

fn main() {
    // die quietly when the output pipe closes (e.g. `freelang table | head`)
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help/version requests are successes, everything else is usage
            if e.use_stderr() {
                eprint!("{e}");
                std::process::exit(1);
            }
            print!("{e}");
            std::process::exit(0);
        }
    };
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(1);
        }
    }
}

fn load_dfa(path: &Path) -> Result<Dfa> {
    let text = fs::read_to_string(path)?;
    textfmt::parse_dfa(&text)
}

fn write_file(dir: &Path, name: &str, contents: &str) -> Result<()> {
    fs::create_dir_all(dir)?;
    fs::write(dir.join(name), contents)?;
    Ok(())
}

fn parse_bool_op(name: &str) -> Result<BoolOp> {
    match name {
        "union" => Ok(BoolOp::Union),
        "intersection" => Ok(BoolOp::Intersection),
        "difference" => Ok(BoolOp::Difference),
        "symmetric-difference" | "symmetric_difference" => Ok(BoolOp::SymmetricDifference),
        _ => Err(Error::InvalidAutomaton(format!("unknown boolean operation {name:?}"))),
    }
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Classify { file, format } => cmd_classify(&file, format),
        Command::Op {
            operation,
            left,
            right,
            format,
            out,
        } => cmd_op(&operation, &left, right.as_deref(), format, out.as_deref()),
        Command::Witness {
            family,
            m,
            n,
            format,
            out,
        } => cmd_witness(&family, m, n, format, out.as_deref()),
        Command::Table { id, m, n, format } => cmd_table(id, m, n, format),
        Command::Enumerate {
            class,
            alphabet_size,
            m,
            n,
            op,
            workers,
            force_cap,
            format,
            out,
        } => cmd_enumerate(&class, alphabet_size, m, n, &op, workers, force_cap, format, out.as_deref()),
        Command::Check { seed, workers, format } => cmd_check(seed, workers, format),
    }
}

#[derive(serde::Serialize)]
struct Classification {
    #[serde(flatten)]
    class: FreeClass,
    kappa: usize,
}

fn cmd_classify(file: &Path, format: Format) -> Result<i32> {
    let d = load_dfa(file)?;
    let out = Classification {
        class: freeness::classify(&d),
        kappa: d.quotient_complexity(),
    };
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&out).expect("serializable")),
        Format::Text => {
            println!("prefix_free:  {}", out.class.prefix_free);
            println!("suffix_free:  {}", out.class.suffix_free);
            println!("bifix_free:   {}", out.class.bifix_free);
            println!("factor_free:  {}", out.class.factor_free);
            println!("subword_free: {}", out.class.subword_free);
            println!("finite:       {}", out.class.finite);
            println!("kappa:        {}", out.kappa);
        }
    }
    Ok(0)
}

/// The most specific bound-table row that applies to the operands.
fn comparison_classes(
    left: &FreeClass,
    right: Option<&FreeClass>,
    alphabet_len: usize,
    op: OpKind,
) -> Vec<LangClass> {
    let both = |f: fn(&FreeClass) -> bool| f(left) && right.is_none_or(f);
    let mut order = Vec::new();
    if alphabet_len == 1 && both(|c| c.subword_free) {
        order.push(LangClass::UnaryFree);
    }
    if both(|c| c.subword_free) {
        order.push(LangClass::SubwordFree);
    }
    if both(|c| c.factor_free) {
        if alphabet_len <= 2 && matches!(op, OpKind::Union | OpKind::SymmetricDifference) {
            order.push(LangClass::BinaryFactorFree);
        }
        order.push(LangClass::FactorFree);
    }
    if both(|c| c.bifix_free) {
        if alphabet_len <= 2 && matches!(op, OpKind::Union | OpKind::SymmetricDifference) {
            order.push(LangClass::BinaryBifixFree);
        }
        order.push(LangClass::BifixFree);
    }
    if both(|c| c.prefix_free) {
        order.push(LangClass::PrefixFree);
    }
    if both(|c| c.suffix_free) {
        order.push(LangClass::SuffixFree);
    }
    order.push(LangClass::Regular);
    order
}

fn cmd_op(
    operation: &str,
    left_path: &Path,
    right_path: Option<&Path>,
    format: Format,
    out: Option<&Path>,
) -> Result<i32> {
    let op = match operation {
        "star" => OpKind::Star,
        "reverse" | "reversal" => OpKind::Reversal,
        "product" | "concat" | "concatenation" => OpKind::Product,
        other => OpKind::from_bool_op(parse_bool_op(other)?),
    };
    let left = load_dfa(left_path)?;
    let right = match (op.arity(), right_path) {
        (2, Some(p)) => Some(load_dfa(p)?),
        (1, None) => None,
        (expected, _) => {
            return Err(Error::ArityMismatch {
                operation: operation.to_string(),
                expected,
                got: 1 + right_path.is_some() as usize,
            })
        }
    };

    let start = Instant::now();
    let result = match (op, &right) {
        (OpKind::Star, _) => left.star(),
        (OpKind::Reversal, _) => left.reverse(),
        (OpKind::Product, Some(r)) => left.product(r)?,
        (bool_op, Some(r)) => left.boolean_combine(r, bool_op.as_bool_op().expect("boolean"))?,
        _ => unreachable!("arity checked above"),
    };
    let measured = result.quotient_complexity() as u64;
    let timing_ms = start.elapsed().as_secs_f64() * 1e3;

    let m = left.quotient_complexity();
    let n = right.as_ref().map_or(m, |r| r.quotient_complexity());
    let left_class = freeness::classify(&left);
    let right_class = right.as_ref().map(freeness::classify);
    // unary operations index the bound by the (single) operand complexity n
    let (bm, bn) = if op.arity() == 1 { (m, m) } else { (m, n) };
    let mut expected = None;
    for class in comparison_classes(&left_class, right_class.as_ref(), left.alphabet().len(), op) {
        if let Ok(b) = expected_bound(class, op, bm, bn) {
            expected = Some(Expected::from_bound(class, op, b));
            break;
        }
    }
    let expected = expected.ok_or_else(|| Error::UnknownBound {
        class: "any".into(),
        operation: op.name().into(),
    })?;

    let mut operands = vec![left_path.display().to_string()];
    let mut kappas = vec![m as u64];
    if let Some(p) = right_path {
        operands.push(p.display().to_string());
        kappas.push(n as u64);
    }
    let report = ComplexityReport::new(
        operands,
        op.name().to_string(),
        kappas,
        measured,
        expected,
        timing_ms,
    );

    if let Some(dir) = out {
        write_file(dir, &format!("{}.dfa", op.name()), &textfmt::print_dfa(&result))?;
    }
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&report).expect("serializable")),
        Format::Text => println!("{}", report.render_text()),
    }
    Ok(if report.is_alert() { 2 } else { 0 })
}

#[derive(serde::Serialize)]
struct WitnessOutput {
    family: String,
    left: Dfa,
    #[serde(skip_serializing_if = "Option::is_none")]
    right: Option<Dfa>,
    declared: FreeClass,
    reports: Vec<ComplexityReport>,
}

fn cmd_witness(
    family_name: &str,
    m: Option<usize>,
    n: Option<usize>,
    format: Format,
    out: Option<&Path>,
) -> Result<i32> {
    let family = WitnessFamily::from_name(family_name, m, n)?;
    let pair = witness::make_witness(family)?;
    let reports = witness::verify_witness(family)?;
    let output = WitnessOutput {
        family: family.to_string(),
        left: pair.left.clone(),
        right: pair.right.clone(),
        declared: pair.declared,
        reports,
    };
    if let Some(dir) = out {
        write_file(dir, "left.dfa", &textfmt::print_dfa(&pair.left))?;
        if let Some(r) = &pair.right {
            write_file(dir, "right.dfa", &textfmt::print_dfa(r))?;
        }
        write_file(
            dir,
            "report.json",
            &serde_json::to_string_pretty(&output).expect("serializable"),
        )?;
    }
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&output).expect("serializable")),
        Format::Text => {
            println!("{}", output.family);
            println!("left operand:\n{}", textfmt::print_dfa(&pair.left));
            if let Some(r) = &pair.right {
                println!("right operand:\n{}", textfmt::print_dfa(r));
            }
            for r in &output.reports {
                println!("{}", r.render_text());
            }
        }
    }
    Ok(if output.reports.iter().any(ComplexityReport::is_alert) {
        2
    } else {
        0
    })
}

#[derive(serde::Serialize)]
struct TableCell {
    class: String,
    operation: OpKind,
    formula: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    value: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    measured: Option<u64>,
    conjectural: bool,
}

fn table_rows(id: u8, m: usize, n: usize) -> Result<Vec<TableCell>> {
    if m < 2 || n < 2 {
        return Err(Error::InvalidAutomaton(
            "table rendering needs m, n ≥ 2".into(),
        ));
    }
    let ops: &[OpKind] = match id {
        1 => &[
            OpKind::Union,
            OpKind::SymmetricDifference,
            OpKind::Intersection,
            OpKind::Difference,
        ],
        2 => &[OpKind::Product, OpKind::Star, OpKind::Reversal],
        _ => {
            return Err(Error::InvalidAutomaton(format!(
                "table id must be 1 or 2, got {id}"
            )))
        }
    };
    // measured values come from the witness families this crate implements
    let measure = |class: LangClass, op: OpKind| -> Result<Option<u64>> {
        let family = match (class, op) {
            (LangClass::UnaryFree, OpKind::Product) => Some(WitnessFamily::UnaryProduct { m, n }),
            (LangClass::UnaryFree, _) => None, // measured directly below
            (LangClass::BifixFree | LangClass::FactorFree, o) if o.arity() == 2 && o != OpKind::Product => {
                Some(WitnessFamily::TernaryFactorBool { m, n })
            }
            (LangClass::BifixFree | LangClass::FactorFree, OpKind::Product) => {
                Some(WitnessFamily::UnaryProduct { m, n })
            }
            (LangClass::BifixFree | LangClass::FactorFree, OpKind::Star) => {
                Some(WitnessFamily::BinaryStar { n })
            }
            (LangClass::BifixFree | LangClass::FactorFree, OpKind::Reversal) => {
                Some(WitnessFamily::FactorReversal { n })
            }
            (LangClass::SubwordFree, o) if o.arity() == 2 && o != OpKind::Product => {
                Some(WitnessFamily::SubwordBool { m, n })
            }
            (LangClass::SubwordFree, OpKind::Product) => Some(WitnessFamily::UnaryProduct { m, n }),
            (LangClass::SubwordFree, OpKind::Star) => Some(WitnessFamily::BinaryStar { n }),
            (LangClass::SubwordFree, OpKind::Reversal) => Some(WitnessFamily::SubwordReversal { n }),
            _ => None,
        };
        let Some(family) = family else {
            // unary boolean/star/reversal rows measure the unique witnesses
            if class == LangClass::UnaryFree {
                let left = witness_unary(m);
                let right = witness_unary(n);
                let measured = match op {
                    OpKind::Star => left_star_unary(n),
                    OpKind::Reversal => witness_unary(n).reverse().quotient_complexity(),
                    o => left
                        .boolean_combine(&right, o.as_bool_op().expect("boolean"))?
                        .quotient_complexity(),
                };
                return Ok(Some(measured as u64));
            }
            return Ok(None);
        };
        match witness::verify_witness(family) {
            Ok(reports) => Ok(reports
                .iter()
                .find(|r| r.operation == op.name())
                .map(|r| r.measured_kappa)),
            Err(Error::BadWitnessParams { .. }) | Err(Error::SearchInfeasible { .. }) => Ok(None),
            Err(e) => Err(e),
        }
    };

    let classes: &[(LangClass, &str)] = &[
        (LangClass::UnaryFree, "free unary"),
        (LangClass::PrefixFree, "prefix-free"),
        (LangClass::SuffixFree, "suffix-free"),
        (LangClass::BifixFree, "bifix-/factor-free"),
        (LangClass::SubwordFree, "subword-free"),
        (LangClass::Regular, "regular"),
    ];
    let mut cells = Vec::new();
    for &(class, label) in classes {
        for &op in ops {
            let bound = expected_bound(class, op, m, n).ok();
            let measured = if matches!(
                class,
                LangClass::UnaryFree | LangClass::BifixFree | LangClass::SubwordFree
            ) {
                measure(class, op)?
            } else {
                None
            };
            cells.push(TableCell {
                class: label.to_string(),
                operation: op,
                formula: bound.as_ref().map(|b| b.formula),
                value: bound.as_ref().map(|b| b.value),
                measured,
                conjectural: bound.as_ref().is_some_and(|b| b.conjectural),
            });
        }
    }
    Ok(cells)
}

fn witness_unary(kappa: usize) -> Dfa {
    let w = freelang::Word::from_symbols(vec![0; kappa - 2]);
    Dfa::from_words(freelang::Alphabet::unary(), [&w]).expect("unary witness")
}

fn left_star_unary(n: usize) -> usize {
    witness_unary(n).star().quotient_complexity()
}

fn cmd_table(id: u8, m: usize, n: usize, format: Format) -> Result<i32> {
    let cells = table_rows(id, m, n)?;
    let mut alert = false;
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&cells).expect("serializable")),
        Format::Text => {
            println!("bounds at m = {m}, n = {n} (measured values from witnesses where available)");
            let mut current = String::new();
            for cell in &cells {
                if cell.class != current {
                    current = cell.class.clone();
                    println!("{current}:");
                }
                let formula = cell.formula.unwrap_or("—");
                let value = cell
                    .value
                    .map_or("—".to_string(), |v| v.to_string());
                let measured = match cell.measured {
                    Some(v) => {
                        if let Some(value) = cell.value {
                            if v > value && !cell.conjectural {
                                alert = true;
                            }
                        }
                        format!("{v}")
                    }
                    None => "—".to_string(),
                };
                let conj = if cell.conjectural { " (conjecture)" } else { "" };
                println!(
                    "  {:<22} {formula:<18} = {value:<6} measured {measured}{conj}",
                    cell.operation.name()
                );
            }
        }
    }
    if format == Format::Json {
        alert = cells.iter().any(|c| {
            !c.conjectural
                && matches!((c.measured, c.value), (Some(mv), Some(bv)) if mv > bv)
        });
    }
    Ok(if alert { 2 } else { 0 })
}

#[allow(clippy::too_many_arguments)]
fn cmd_enumerate(
    class: &str,
    alphabet_size: usize,
    m: usize,
    n: usize,
    op: &str,
    workers: Option<usize>,
    force_cap: Option<u64>,
    format: Format,
    out: Option<&Path>,
) -> Result<i32> {
    let kind = FreenessKind::from_name(class).ok_or_else(|| {
        Error::InvalidAutomaton(format!("unknown class {class:?}; expected one of prefix, suffix, bifix, factor, subword"))
    })?;
    let spec = SearchSpec {
        class: kind,
        alphabet_size,
        m,
        n,
        op: parse_bool_op(op)?,
        cap: force_cap,
        workers,
    };
    eprintln!(
        "enumerating {kind} languages over {alphabet_size} letters at κ = {m} and κ = {n}...",
    );
    let start = Instant::now();
    let result = enumeration::max_complexity_search(spec)?;
    eprintln!(
        "searched {} candidate pairs ({} x {}) in {:.2}s{}",
        result.candidates_examined,
        result.left_count,
        result.right_count,
        start.elapsed().as_secs_f64(),
        if result.exhaustive { "" } else { " [capped]" }
    );
    if let Some(dir) = out {
        write_file(dir, "left.dfa", &textfmt::print_dfa(&result.witness_left))?;
        write_file(dir, "right.dfa", &textfmt::print_dfa(&result.witness_right))?;
        write_file(
            dir,
            "search.json",
            &serde_json::to_string_pretty(&result).expect("serializable"),
        )?;
    }
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&result).expect("serializable")),
        Format::Text => {
            println!(
                "max κ({} of {kind} pairs at m={m}, n={n}, {alphabet_size} letters) = {}{}",
                result.spec.op.name(),
                result.max_kappa,
                if result.exhaustive { " (exhaustive)" } else { " (lower bound, capped)" }
            );
            println!("attained by:\n{}", textfmt::print_dfa(&result.witness_left));
            println!("{}", textfmt::print_dfa(&result.witness_right));
        }
    }
    Ok(0)
}

fn cmd_check(seed: Option<u64>, workers: Option<usize>, format: Format) -> Result<i32> {
    let mut cfg = CheckConfig::default();
    if let Some(seed) = seed {
        cfg.seed = seed;
    }
    cfg.workers = workers;
    let outcomes = checks::run_all(cfg);
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&outcomes).expect("serializable")),
        Format::Text => {
            for o in &outcomes {
                println!("{}", o.render_line());
            }
        }
    }
    Ok(if outcomes.iter().all(|o| o.status != CheckStatus::Fail) {
        0
    } else {
        2
    })
}
