//! The `dyck-garnir` command line.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::dyck::{
    ce_qpoly, ci_qpoly, count_ce, count_ci, for_each_tiling, is_cover_expansive,
    is_cover_inclusive, render, CiCondition, CountMode, QPoly, Side, Tiling, DEFAULT_CAP,
};
use crate::error::Error;
use crate::fweight::weight;
use crate::garnir::{classical_garnir, modified_garnir, relation_json};
use crate::json::to_value;
use crate::paren::{hook_formula_f, paren_sequence};
use crate::partition::{Node, Partition, SkewShape};
use crate::permmod::{
    matrix_n, matrix_n_q, matrix_p, matrix_p_q, verify_basis_theorems, Matrix, MatrixEntry,
};
use crate::verify::verify_all;

#[derive(Debug, Parser)]
#[command(
    name = "dyck-garnir",
    version,
    about = "Dyck tilings, permutation modules and Garnir elements"
)]
pub struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count or list Dyck tilings of a skew shape.
    Tilings {
        #[command(subcommand)]
        action: TilingAction,
    },
    /// Change-of-basis matrices of the permutation module.
    Matrix(MatrixArgs),
    /// The weight F of a partition.
    Fp {
        #[arg(long)]
        lambda: Partition,
        /// Also evaluate the hook formula and compare.
        #[arg(long)]
        hook: bool,
    },
    /// The parenthesis sequence of a partition.
    Paren {
        #[arg(long)]
        lambda: Partition,
        /// Show the numbered pairs.
        #[arg(long)]
        pairs: bool,
    },
    /// Checks in the permutation module.
    Module {
        #[command(subcommand)]
        action: ModuleAction,
    },
    /// The modified (or classical) Garnir element of a node.
    Garnir(GarnirArgs),
    /// Property suites.
    Verify {
        #[command(subcommand)]
        action: VerifyAction,
    },
}

#[derive(Debug, Subcommand)]
pub enum TilingAction {
    Count(TilingArgs),
    List(TilingArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Filter {
    Ci,
    Ce,
}

#[derive(Debug, Args)]
pub struct TilingArgs {
    #[arg(long)]
    pub outer: Partition,
    #[arg(long)]
    pub inner: Partition,
    #[arg(long, value_enum)]
    pub filter: Option<Filter>,
    /// Weight each tiling by q to the number of tiles.
    #[arg(long)]
    pub q: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Which {
    N,
    P,
    Product,
}

#[derive(Debug, Args)]
pub struct MatrixArgs {
    #[arg(long = "f")]
    pub f: usize,
    #[arg(long = "g")]
    pub g: usize,
    #[arg(long, value_enum, ignore_case = true)]
    pub which: Which,
    /// Polynomial entries.
    #[arg(long)]
    pub q: bool,
    /// Print CSV.
    #[arg(long, conflicts_with = "json")]
    pub csv: bool,
}

#[derive(Debug, Subcommand)]
pub enum ModuleAction {
    Verify {
        #[arg(long = "f")]
        f: usize,
        #[arg(long = "g")]
        g: usize,
    },
}

#[derive(Debug, Args)]
pub struct GarnirArgs {
    #[arg(long)]
    pub pi: Partition,
    /// Garnir node as `a,b`.
    #[arg(long, value_parser = parse_node)]
    pub node: Node,
    #[arg(long)]
    pub e: usize,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub kappa: i64,
    /// Emit the unmodified element, expanded in the σ-words.
    #[arg(long)]
    pub classical: bool,
}

#[derive(Debug, Subcommand)]
pub enum VerifyAction {
    All {
        #[arg(long)]
        max_box: usize,
    },
}

fn parse_node(s: &str) -> Result<Node, String> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| format!("expected a,b but got {s:?}"))?;
    let a: i64 = a.trim().parse().map_err(|_| format!("bad row in {s:?}"))?;
    let b: i64 = b
        .trim()
        .parse()
        .map_err(|_| format!("bad column in {s:?}"))?;
    if a < 1 || b < 1 {
        return Err(format!("node coordinates start at 1, got {s:?}"));
    }
    Ok(Node::new(a, b))
}

/// What a run produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Outcome {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn check(passed: bool, stdout: String) -> Outcome {
        Outcome {
            code: if passed { 0 } else { 1 },
            stdout,
            stderr: String::new(),
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
            return if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome::ok(text)
            };
        }
    };
    match dispatch(&cli) {
        Ok(out) => out,
        Err(e) => Outcome {
            code: if matches!(e, Error::Internal(_)) {
                1
            } else {
                2
            },
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn to_line<T: serde::Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string(v).expect("json");
    s.push('\n');
    s
}

fn dispatch(cli: &Cli) -> crate::Result<Outcome> {
    let json = cli.json;
    match &cli.command {
        Command::Tilings { action } => match action {
            TilingAction::Count(a) => tilings_count(a, json),
            TilingAction::List(a) => tilings_list(a, json),
        },
        Command::Matrix(a) => matrix(a, json),
        Command::Fp { lambda, hook } => fp(lambda, *hook, json),
        Command::Paren { lambda, pairs } => paren(lambda, *pairs, json),
        Command::Module {
            action: ModuleAction::Verify { f, g },
        } => {
            let r = verify_basis_theorems(*f, *g)?;
            let text = if json {
                to_line(&r)
            } else {
                let mut s = String::new();
                for (name, c) in [
                    ("s in t", &r.s_in_t),
                    ("t in s", &r.t_in_s),
                    ("sum of t", &r.sum_of_t),
                ] {
                    let status = if c.passed { "PASS" } else { "FAIL" };
                    let _ = write!(s, "{status} {name}: {} partitions", c.cases);
                    if let Some(why) = &c.failure {
                        let _ = write!(s, "  {why}");
                    }
                    s.push('\n');
                }
                let cs: Vec<String> = r
                    .sum_coefficients
                    .iter()
                    .map(|(l, c)| format!("{l}:{c}"))
                    .collect();
                let _ = writeln!(s, "sum coefficients: {}", cs.join(" "));
                s
            };
            Ok(Outcome::check(r.passed(), text))
        }
        Command::Garnir(a) => garnir(a, json),
        Command::Verify {
            action: VerifyAction::All { max_box },
        } => {
            let r = verify_all(*max_box)?;
            let text = if json { to_line(&r) } else { r.to_string() };
            Ok(Outcome::check(r.passed(), text))
        }
    }
}

fn filter_name(filter: Option<Filter>) -> &'static str {
    match filter {
        None => "all",
        Some(Filter::Ci) => "ci",
        Some(Filter::Ce) => "ce",
    }
}

fn keeps(filter: Option<Filter>, t: &Tiling) -> bool {
    match filter {
        None => true,
        Some(Filter::Ci) => is_cover_inclusive(t, CiCondition::CoverInclusive),
        Some(Filter::Ce) => is_cover_expansive(t, Side::Both),
    }
}

fn filtered_tilings(a: &TilingArgs) -> crate::Result<Vec<Tiling>> {
    let shape = SkewShape::new(a.outer.clone(), a.inner.clone())?;
    let mut out = Vec::new();
    for_each_tiling(&shape, DEFAULT_CAP, |t| {
        if keeps(a.filter, &t) {
            out.push(t);
        }
    })?;
    Ok(out)
}

fn tilings_count(a: &TilingArgs, json: bool) -> crate::Result<Outcome> {
    SkewShape::new(a.outer.clone(), a.inner.clone())?;
    let (l, m) = (&a.outer, &a.inner);
    let base = json!({ "outer": l, "inner": m, "filter": filter_name(a.filter) });
    if a.q {
        let poly = match a.filter {
            Some(Filter::Ci) => ci_qpoly(l, m)?,
            Some(Filter::Ce) => ce_qpoly(l, m),
            None => filtered_tilings(a)?
                .iter()
                .fold(QPoly::zero(), |acc, t| acc + QPoly::monomial(1, t.len())),
        };
        return Ok(Outcome::ok(if json {
            let mut v = base;
            v["qpoly"] = poly.to_json();
            to_line(&v)
        } else {
            format!("{poly}\n")
        }));
    }
    let count = match a.filter {
        Some(Filter::Ci) => count_ci(l, m, CountMode::Recurrence)?,
        Some(Filter::Ce) => BigUint::from(count_ce(l, m, CountMode::Recurrence)?),
        None => BigUint::from(filtered_tilings(a)?.len()),
    };
    Ok(Outcome::ok(if json {
        let mut v = base;
        v["count"] = to_value(&count.into());
        to_line(&v)
    } else {
        format!("{count}\n")
    }))
}

fn tilings_list(a: &TilingArgs, json: bool) -> crate::Result<Outcome> {
    let tilings = filtered_tilings(a)?;
    if json {
        let list: Vec<Value> = tilings
            .iter()
            .map(|t| serde_json::to_value(t.to_json()).expect("json"))
            .collect();
        return Ok(Outcome::ok(to_line(&Value::Array(list))));
    }
    let mut s = String::new();
    for (n, t) in tilings.iter().enumerate() {
        let _ = writeln!(s, "# tiling {} ({} tiles)", n + 1, t.len());
        s.push_str(&render(t));
        s.push('\n');
    }
    let _ = writeln!(s, "{} tilings", tilings.len());
    Ok(Outcome::ok(s))
}

fn show<T: MatrixEntry>(m: &Matrix<T>, a: &MatrixArgs, json: bool) -> crate::Result<String> {
    if a.csv {
        return m.to_csv();
    }
    if json {
        let mut v = m.to_json();
        v["which"] = json!(format!("{:?}", a.which).to_lowercase());
        v["f"] = json!(a.f);
        v["g"] = json!(a.g);
        return Ok(to_line(&v));
    }
    Ok(m.to_string())
}

fn matrix(a: &MatrixArgs, json: bool) -> crate::Result<Outcome> {
    let (f, g) = (a.f, a.g);
    if a.q {
        let m = match a.which {
            Which::N => matrix_n_q(f, g)?,
            Which::P => matrix_p_q(f, g)?,
            Which::Product => matrix_n_q(f, g)?.multiply(&matrix_p_q(f, g)?)?,
        };
        let passed = a.which != Which::Product || m.is_identity();
        return Ok(Outcome::check(passed, show(&m, a, json)?));
    }
    let m = match a.which {
        Which::N => matrix_n(f, g)?,
        Which::P => matrix_p(f, g)?,
        Which::Product => matrix_n(f, g)?.multiply(&matrix_p(f, g)?)?,
    };
    let passed = a.which != Which::Product || m.is_identity();
    Ok(Outcome::check(passed, show(&m, a, json)?))
}

fn fp(lambda: &Partition, hook: bool, json: bool) -> crate::Result<Outcome> {
    let value = weight(lambda);
    let hook_value = if hook {
        Some(hook_formula_f(lambda)?)
    } else {
        None
    };
    let passed = hook_value.as_ref().is_none_or(|h| *h == value);
    let text = if json {
        let mut v = json!({ "lambda": lambda, "f": to_value(&value.clone().into()) });
        if let Some(h) = &hook_value {
            v["hook"] = to_value(&h.clone().into());
        }
        to_line(&v)
    } else {
        match &hook_value {
            Some(h) => format!("{value}\nhook formula: {h}\n"),
            None => format!("{value}\n"),
        }
    };
    Ok(Outcome::check(passed, text))
}

fn paren(lambda: &Partition, pairs: bool, json: bool) -> crate::Result<Outcome> {
    let seq = paren_sequence(lambda);
    if json {
        return Ok(Outcome::ok(to_line(&json!({
            "lambda": lambda,
            "window": seq.window_string(),
            "offset": seq.offset,
            "padded": seq.to_string(),
            "pad_open": seq.pad_open,
            "pad_close": seq.pad_close,
            "pairs": seq.pairs,
        }))));
    }
    let mut s = format!(
        "window {} from position {}\n",
        seq.window_string(),
        seq.offset
    );
    let _ = writeln!(
        s,
        "balanced {}  (+{} open, +{} close)",
        seq, seq.pad_open, seq.pad_close
    );
    if pairs {
        s.push_str(&seq.numbered(0));
    }
    Ok(Outcome::ok(s))
}

fn garnir(a: &GarnirArgs, json: bool) -> crate::Result<Outcome> {
    let node = a.node;
    if a.classical {
        let terms = classical_garnir(&a.pi, node, a.e, a.kappa)?;
        if json {
            return Ok(Outcome::ok(to_line(&json!({
                "pi": a.pi,
                "node": [node.a, node.b],
                "e": a.e,
                "kappa": a.kappa,
                "classical": true,
                "terms": terms.iter().map(|t| json!({
                    "coeff": to_value(&t.coeff.clone().into()),
                    "sigma": t.sigma,
                    "psi_word": t.psi_word.indices,
                })).collect::<Vec<_>>(),
            }))));
        }
        let mut s = String::new();
        for t in &terms {
            let sigma: Vec<String> = t.sigma.iter().map(|i| format!("σ{i}")).collect();
            let product = if sigma.is_empty() {
                "1".to_string()
            } else {
                sigma.join(" ")
            };
            let _ = writeln!(s, "{} · {product}", t.coeff);
        }
        return Ok(Outcome::ok(s));
    }
    if json {
        let rel = relation_json(&a.pi, node, a.e, a.kappa)?;
        return Ok(Outcome::ok(to_line(&rel)));
    }
    let mut s = String::new();
    for t in modified_garnir(&a.pi, node, a.e, a.kappa)? {
        let _ = writeln!(s, "{} · λ = {}", t.coeff, t.lambda);
        s.push_str(&t.tableau.to_string());
        let _ = writeln!(s, "{}\n", t.psi_word);
    }
    Ok(Outcome::ok(s))
}
