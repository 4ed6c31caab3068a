//! Command-line front end.
//!
//! Every command builds one JSON value and renders it either as JSON or as a
//! plain-text table derived from the same value, so both modes carry the
//! same data. Output is assembled in full before anything is printed.
//!
//! Exit codes: 0 success; 1 a negative verdict (`equiv`, `witness`,
//! `isometry` on an inequivalent pair); 2 usage or validation errors;
//! 3 enumeration budget exceeded; 4 an isometry check that failed.

use std::fmt::Write as _;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};

use crate::code::{
    apply_isometry, check_isometry, count_by_dimension, enumerate_codes, CodeContext,
    EnumerationBudget, SkewConstacyclicCode,
};
use crate::equivalence::{sweep, EquivalenceContext};
use crate::error::Error;
use crate::field::{parse_designator, Automorphism, Elem, FiniteField};
use crate::skew::SkewPolynomial;

#[derive(Debug, Parser)]
#[command(
    name = "skewcode",
    version,
    about = "Skew constacyclic codes and (n, sigma)-equivalence of shift constants"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct FieldArgs {
    /// Field designator p^r, e.g. 2^3.
    #[arg(long)]
    pub field: String,
    /// Field modulus as a packed base-p integer (default: smallest irreducible).
    #[arg(long)]
    pub modulus: Option<u64>,
    /// Frobenius exponent s of sigma(a) = a^(p^s) (default: 1, or 0 over a prime field).
    #[arg(long)]
    pub s: Option<u32>,
    /// Emit JSON instead of a table.
    #[arg(long)]
    pub json: bool,
    /// Render field elements as powers of the primitive element in tables.
    #[arg(long)]
    pub pretty: bool,
}

#[derive(Debug, Clone, Args)]
pub struct BudgetArg {
    /// Cap on enumerated codewords and on divisor candidates per degree.
    #[arg(long)]
    pub budget: Option<u64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count the (n, sigma)-equivalence classes and list representatives.
    Classes {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        n: u64,
    },
    /// Decide whether lambda and mu are (n, sigma)-equivalent.
    Equiv {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        lambda: u64,
        #[arg(long)]
        mu: u64,
    },
    /// Find the smallest alpha with lambda N_n(alpha) = mu.
    Witness {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        lambda: u64,
        #[arg(long)]
        mu: u64,
    },
    /// List every skew (sigma, lambda)-constacyclic code of length n.
    Codes {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        lambda: u64,
        #[command(flatten)]
        budget: BudgetArg,
    },
    /// Describe the code generated by g, including its minimum distance.
    Mindist {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        lambda: u64,
        /// Generator coefficients, lowest degree first, e.g. 1,0,1.
        #[arg(long)]
        g: String,
        #[command(flatten)]
        budget: BudgetArg,
    },
    /// Map the code generated by g over x^n - mu to x^n - lambda.
    Isometry {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        lambda: u64,
        #[arg(long)]
        mu: u64,
        #[arg(long)]
        g: String,
        #[command(flatten)]
        budget: BudgetArg,
    },
    /// Tabulate class counts over a range of lengths.
    Sweep {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, default_value_t = 1)]
        from: u64,
        #[arg(long, default_value_t = 1_000_000)]
        to: u64,
        /// Include the per-length table when the range has at most this many entries.
        #[arg(long, default_value_t = 1000)]
        rows: usize,
    },
    /// Show the field, its primitive element and the automorphism.
    FieldInfo {
        #[command(flatten)]
        field: FieldArgs,
    },
}

/// What a run prints and how it exits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn error(err: &Error) -> Self {
        let code = match err {
            Error::EnumerationBudgetExceeded { .. } => 3,
            _ => 2,
        };
        Outcome {
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
            code,
        }
    }
}

/// Validated parameters shared by every command.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub aut: Arc<Automorphism>,
    pub json: bool,
    pub pretty: bool,
    pub budget: EnumerationBudget,
}

impl RunConfig {
    pub fn from_args(args: &FieldArgs, budget: Option<u64>) -> Result<Self, Error> {
        let (p, r) = parse_designator(&args.field)?;
        let field = match args.modulus {
            Some(m) => FiniteField::with_packed_modulus(p, r, m)?,
            None => FiniteField::new(p, r, None)?,
        };
        let s = args.s.unwrap_or(if r > 1 { 1 } else { 0 });
        let aut = Automorphism::frobenius(Arc::new(field), s)?;
        let budget = match budget {
            Some(b) => EnumerationBudget {
                codewords: b,
                divisor_candidates: b,
            },
            None => EnumerationBudget::default(),
        };
        Ok(RunConfig {
            aut: Arc::new(aut),
            json: args.json,
            pretty: args.pretty,
            budget,
        })
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        self.aut.field()
    }

    fn elem(&self, encoding: u64) -> Result<Elem, Error> {
        self.field().elem(encoding)
    }

    fn nonzero(&self, encoding: u64) -> Result<Elem, Error> {
        let e = self.elem(encoding)?;
        if e.is_zero() {
            return Err(Error::ZeroConstant);
        }
        Ok(e)
    }

    fn render(&self, value: &Value) -> String {
        if self.json {
            let mut s = serde_json::to_string_pretty(value).expect("values serialize");
            s.push('\n');
            s
        } else {
            render_table(value, self.pretty.then(|| self.field().as_ref()))
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            return if e.use_stderr() {
                Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code,
                }
            } else {
                Outcome {
                    stdout: text,
                    stderr: String::new(),
                    code,
                }
            };
        }
    };
    match execute(&cli.command) {
        Ok(outcome) => outcome,
        Err(e) => Outcome::error(&e),
    }
}

fn ok(stdout: String, code: i32) -> Result<Outcome, Error> {
    Ok(Outcome {
        stdout,
        stderr: String::new(),
        code,
    })
}

pub fn execute(command: &Command) -> Result<Outcome, Error> {
    match command {
        Command::Classes { field, n } => {
            let cfg = RunConfig::from_args(field, None)?;
            let value = cmd_classes(&cfg, *n)?;
            ok(cfg.render(&value), 0)
        }
        Command::Equiv {
            field,
            n,
            lambda,
            mu,
        }
        | Command::Witness {
            field,
            n,
            lambda,
            mu,
        } => {
            let cfg = RunConfig::from_args(field, None)?;
            let (lambda, mu) = (cfg.nonzero(*lambda)?, cfg.nonzero(*mu)?);
            let value = cmd_equiv(&cfg, *n, lambda, mu)?;
            let equivalent = value["equivalent"] == Value::Bool(true);
            let value = if matches!(command, Command::Witness { .. }) {
                json!({
                    "lambda": value["lambda"],
                    "mu": value["mu"],
                    "witness": value["witness"],
                })
            } else {
                value
            };
            ok(cfg.render(&value), if equivalent { 0 } else { 1 })
        }
        Command::Codes {
            field,
            n,
            lambda,
            budget,
        } => {
            let cfg = RunConfig::from_args(field, budget.budget)?;
            let lambda = cfg.nonzero(*lambda)?;
            let value = cmd_codes(&cfg, *n, lambda)?;
            ok(cfg.render(&value), 0)
        }
        Command::Mindist {
            field,
            n,
            lambda,
            g,
            budget,
        } => {
            let cfg = RunConfig::from_args(field, budget.budget)?;
            let lambda = cfg.nonzero(*lambda)?;
            let g = SkewPolynomial::parse_csv(&cfg.aut, g)?;
            let value = cmd_mindist(&cfg, *n, lambda, &g)?;
            ok(cfg.render(&value), 0)
        }
        Command::Isometry {
            field,
            n,
            lambda,
            mu,
            g,
            budget,
        } => {
            let cfg = RunConfig::from_args(field, budget.budget)?;
            let (lambda, mu) = (cfg.nonzero(*lambda)?, cfg.nonzero(*mu)?);
            let g = SkewPolynomial::parse_csv(&cfg.aut, g)?;
            match cmd_isometry(&cfg, *n, lambda, mu, &g)? {
                Some(value) => {
                    let code = if value["verdict"] == Value::Bool(true) { 0 } else { 4 };
                    ok(cfg.render(&value), code)
                }
                None => Ok(Outcome {
                    stdout: String::new(),
                    stderr: format!(
                        "lambda = {} and mu = {} are not ({n}, sigma)-equivalent; no isometry exists\n",
                        lambda, mu
                    ),
                    code: 1,
                }),
            }
        }
        Command::Sweep {
            field,
            from,
            to,
            rows,
        } => {
            let cfg = RunConfig::from_args(field, None)?;
            if *from == 0 || from > to {
                return Err(Error::InvalidLength);
            }
            let value = cmd_sweep(&cfg, *from, *to, *rows);
            ok(cfg.render(&value), 0)
        }
        Command::FieldInfo { field } => {
            let cfg = RunConfig::from_args(field, None)?;
            ok(cfg.render(&cmd_field_info(&cfg)), 0)
        }
    }
}

fn encodings(elems: &[Elem]) -> Vec<u32> {
    elems.iter().map(|e| e.encoding()).collect()
}

pub fn cmd_classes(cfg: &RunConfig, n: u64) -> Result<Value, Error> {
    let ctx = EquivalenceContext::new(&cfg.aut, n)?;
    let report = ctx.to_json(&[])?;
    let mut value = serde_json::to_value(report).expect("serializable");
    if let Value::Object(map) = &mut value {
        map.remove("queries");
    }
    Ok(value)
}

pub fn cmd_equiv(cfg: &RunConfig, n: u64, lambda: Elem, mu: Elem) -> Result<Value, Error> {
    let ctx = EquivalenceContext::new(&cfg.aut, n)?;
    let report = ctx.to_json(&[(lambda, mu)])?;
    let query = &report.queries[0];
    Ok(json!({
        "field": report.field,
        "s": report.s,
        "n": report.n,
        "class_count": report.class_count,
        "lambda": query.lambda,
        "mu": query.mu,
        "equivalent": query.equivalent,
        "verdict": if query.equivalent { "equivalent" } else { "not equivalent" },
        "witness": query.witness,
    }))
}

pub fn cmd_codes(cfg: &RunConfig, n: usize, lambda: Elem) -> Result<Value, Error> {
    let ctx = CodeContext::new(&cfg.aut, n, lambda)?;
    let codes = enumerate_codes(&ctx, &cfg.budget)?;
    let by_dim: Map<String, Value> = count_by_dimension(&codes)
        .into_iter()
        .map(|(k, c)| (k.to_string(), json!(c)))
        .collect();
    let entries = codes
        .iter()
        .map(|c| {
            let d = c.descriptor(&cfg.budget)?;
            Ok(json!({
                "g": d.g,
                "k": d.k,
                "d_min": d.d_min,
                "weight_distribution": d.weight_distribution,
            }))
        })
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(json!({
        "field": cfg.field().designator(),
        "s": cfg.aut.exponent(),
        "n": n,
        "lambda": lambda.encoding(),
        "count": codes.len(),
        "by_dimension": by_dim,
        "codes": entries,
    }))
}

pub fn cmd_mindist(
    cfg: &RunConfig,
    n: usize,
    lambda: Elem,
    g: &SkewPolynomial,
) -> Result<Value, Error> {
    let ctx = CodeContext::new(&cfg.aut, n, lambda)?;
    let code = SkewConstacyclicCode::new(&ctx, g)?;
    let mut value = serde_json::to_value(code.descriptor(&cfg.budget)?).expect("serializable");
    if let Value::Object(map) = &mut value {
        map.insert("generator_matrix".into(), json!(code.matrix_encodings()));
    }
    Ok(value)
}

/// `None` when lambda and mu are inequivalent.
pub fn cmd_isometry(
    cfg: &RunConfig,
    n: usize,
    lambda: Elem,
    mu: Elem,
    g: &SkewPolynomial,
) -> Result<Option<Value>, Error> {
    let source_ctx = CodeContext::new(&cfg.aut, n, mu)?;
    let source = SkewConstacyclicCode::new(&source_ctx, g)?;
    let eq = EquivalenceContext::new(&cfg.aut, n as u64)?;
    let Some(alpha) = eq.find_witness(lambda, mu)? else {
        return Ok(None);
    };
    let image = apply_isometry(&source, lambda, alpha)?;
    let check = check_isometry(&source, &image, alpha, &cfg.budget)?;
    let src = source.descriptor(&cfg.budget)?;
    let img = image.descriptor(&cfg.budget)?;
    Ok(Some(json!({
        "field": cfg.field().designator(),
        "s": cfg.aut.exponent(),
        "n": n,
        "lambda": lambda.encoding(),
        "mu": mu.encoding(),
        "alpha": alpha.encoding(),
        "source_g": src.g,
        "image_g": img.g,
        "k": img.k,
        "d_min_source": src.d_min,
        "d_min_image": img.d_min,
        "weight_distribution_source": src.weight_distribution,
        "weight_distribution_image": img.weight_distribution,
        "same_dimension": check.same_dimension,
        "same_min_distance": check.same_min_distance,
        "same_weight_distribution": check.same_weight_distribution,
        "generator_divides": check.generator_divides,
        "codeword_map_consistent": check.codeword_map_consistent,
        "verdict": check.all_hold(),
    })))
}

pub fn cmd_sweep(cfg: &RunConfig, from: u64, to: u64, rows: usize) -> Value {
    serde_json::to_value(sweep(&cfg.aut, from, to, rows)).expect("serializable")
}

pub fn cmd_field_info(cfg: &RunConfig) -> Value {
    let field = cfg.field();
    json!({
        "field": field.designator(),
        "p": field.p(),
        "r": field.r(),
        "q": field.q(),
        "modulus": field.modulus_packed(),
        "modulus_coeffs": field.modulus(),
        "xi": field.xi().encoding(),
        "s": cfg.aut.exponent(),
        "automorphism_order": cfg.aut.order(),
        "fixed_subfield": encodings(&cfg.aut.fixed_subfield()),
    })
}

/// Keys whose numeric values are field elements.
const ELEMENT_KEYS: &[&str] = &[
    "representatives",
    "lambda",
    "mu",
    "witness",
    "alpha",
    "g",
    "source_g",
    "image_g",
    "xi",
    "fixed_subfield",
    "generator_matrix",
];

fn render_scalar(key: &str, value: &Value, field: Option<&FiniteField>) -> String {
    match (field, value) {
        (Some(f), Value::Number(num)) if ELEMENT_KEYS.contains(&key) => num
            .as_u64()
            .and_then(|e| f.elem(e).ok())
            .map(|e| f.pretty(e))
            .unwrap_or_else(|| num.to_string()),
        (Some(_), Value::Array(items)) if ELEMENT_KEYS.contains(&key) => {
            let parts: Vec<String> = items.iter().map(|v| render_scalar(key, v, field)).collect();
            format!("[{}]", parts.join(","))
        }
        (_, Value::String(s)) => s.clone(),
        _ => value.to_string(),
    }
}

/// Renders a JSON object as `key: value` lines; nested objects become
/// indented blocks and arrays of objects become `#`-headed tables.
pub fn render_table(value: &Value, pretty: Option<&FiniteField>) -> String {
    let mut out = String::new();
    let Value::Object(map) = value else {
        return format!("{}\n", render_scalar("", value, pretty));
    };
    for (key, v) in map {
        match v {
            Value::Object(inner) => {
                let _ = writeln!(out, "{key}:");
                for (k2, v2) in inner {
                    let _ = writeln!(out, "  {k2}: {}", render_scalar(k2, v2, pretty));
                }
            }
            Value::Array(items) if !items.is_empty() && items.iter().all(Value::is_object) => {
                let _ = writeln!(out, "{key}:");
                let columns: Vec<&String> = match &items[0] {
                    Value::Object(first) => first.keys().collect(),
                    _ => unreachable!(),
                };
                let cells: Vec<Vec<String>> = items
                    .iter()
                    .map(|item| {
                        columns
                            .iter()
                            .map(|c| render_scalar(c, &item[c.as_str()], pretty))
                            .collect()
                    })
                    .collect();
                let widths: Vec<usize> = columns
                    .iter()
                    .enumerate()
                    .map(|(i, c)| {
                        cells
                            .iter()
                            .map(|row| row[i].chars().count())
                            .chain([c.len()])
                            .max()
                            .unwrap_or(0)
                    })
                    .collect();
                let line = |parts: Vec<&str>| {
                    parts
                        .iter()
                        .zip(&widths)
                        .map(|(p, w)| format!("{p:<w$}"))
                        .collect::<Vec<_>>()
                        .join("  ")
                        .trim_end()
                        .to_string()
                };
                let _ = writeln!(
                    out,
                    "  # {}",
                    line(columns.iter().map(|c| c.as_str()).collect())
                );
                for row in &cells {
                    let _ = writeln!(out, "    {}", line(row.iter().map(String::as_str).collect()));
                }
            }
            _ => {
                let _ = writeln!(out, "{key}: {}", render_scalar(key, v, pretty));
            }
        }
    }
    out
}

fn parse_cell(text: &str) -> Value {
    serde_json::from_str(text).unwrap_or_else(|_| Value::String(text.to_string()))
}

/// Inverse of [`render_table`] for non-pretty output.
pub fn parse_table(text: &str) -> Value {
    let mut root = Map::new();
    let lines: Vec<&str> = text.lines().collect();
    let mut i = 0;
    while i < lines.len() {
        let line = lines[i];
        i += 1;
        if line.trim().is_empty() {
            continue;
        }
        if let Some(key) = line.strip_suffix(':') {
            let mut block = Vec::new();
            while i < lines.len() && lines[i].starts_with("  ") {
                block.push(lines[i]);
                i += 1;
            }
            let value = match block.first().map(|l| l.trim_start()) {
                Some(header) if header.starts_with("# ") => {
                    let columns: Vec<&str> = header[2..].split_whitespace().collect();
                    let rows = block[1..]
                        .iter()
                        .map(|row| {
                            let obj: Map<String, Value> = columns
                                .iter()
                                .zip(row.split_whitespace())
                                .map(|(c, cell)| (c.to_string(), parse_cell(cell)))
                                .collect();
                            Value::Object(obj)
                        })
                        .collect();
                    Value::Array(rows)
                }
                _ => Value::Object(
                    block
                        .iter()
                        .filter_map(|l| l.trim_start().split_once(": "))
                        .map(|(k, v)| (k.to_string(), parse_cell(v)))
                        .collect(),
                ),
            };
            root.insert(key.to_string(), value);
        } else if let Some((key, v)) = line.split_once(": ") {
            root.insert(key.to_string(), parse_cell(v));
        }
    }
    Value::Object(root)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &str) -> Outcome {
        run(std::iter::once("skewcode").chain(args.split_whitespace()))
    }

    #[test]
    fn table_round_trip() {
        let value = json!({
            "a": 1,
            "b": [1, 2],
            "c": {"1": 3},
            "d": [{"g": [1, 1], "k": 2, "d_min": null}],
            "e": [],
            "f": "2^2",
        });
        assert_eq!(parse_table(&render_table(&value, None)), value);
    }

    #[test]
    fn usage_errors_exit_2() {
        let out = run_args("classes --field 2^2");
        assert_eq!(out.code, 2);
        assert!(out.stdout.is_empty());
        let out = run_args("classes --field 4^1 --n 2");
        assert_eq!(out.code, 2);
        assert!(out.stdout.is_empty());
        let out = run_args("equiv --field 2^2 --s 1 --n 2 --lambda 0 --mu 1");
        assert_eq!(out.code, 2);
        assert!(out.stdout.is_empty());
    }

    #[test]
    fn pretty_tables() {
        let out = run_args("classes --field 2^2 --s 1 --n 2 --pretty");
        assert!(out.stdout.contains("representatives: [1,ξ,ξ^2]"), "{}", out.stdout);
    }
}
