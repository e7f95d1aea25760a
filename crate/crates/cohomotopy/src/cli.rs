//! Argument parsing and command dispatch.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use cohomotopy_core::abelian::{smith_normal_form, FinAbGroup};
use cohomotopy_core::classify::{cohomotopy_report, fiber_group, is_twisted_2class};
use cohomotopy_core::extension::{
    abelian_groups_of_order, brute_force_extension_oracle, classify_extension, Z2Functional,
};
use cohomotopy_core::manifold::{catalog, ManifoldData};
use cohomotopy_core::{Error, Int, IntMatrix};

use crate::document::{DocError, GroupDoc, ManifoldDocument};
use crate::report::{render_text, ReportDocument};

pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_INVALID: i32 = 3;
pub const EXIT_NOT_ISOTROPIC: i32 = 4;
pub const EXIT_UNKNOWN_CATALOG: i32 = 5;

#[derive(Parser, Debug)]
#[command(name = "cohomotopy", version, about = "Cohomotopy sets of closed oriented 4-manifolds")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Full report: parity, type, pi^1, pi^2 fibers, pi^3, pi^4.
    Report {
        /// `catalog:NAME`, a JSON file, or `-` for standard input.
        input: String,
        /// Free coordinates of enumerated classes lie in [-bound, bound].
        #[arg(long, env = "COHOMOTOPY_DEFAULT_BOUND", default_value_t = 5)]
        bound: u32,
        /// Search radius for twisted 2-classes.
        #[arg(long, default_value_t = 5)]
        radius: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Report duality violations as warnings instead of failing.
        #[arg(long)]
        permissive: bool,
    },
    /// The fiber of pi^2 over one class.
    Fiber {
        input: String,
        /// H_2 coordinates, torsion first, comma separated.
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        permissive: bool,
    },
    /// Smith Normal Form U M V = D of an integer matrix.
    Snf {
        /// JSON rows or whitespace-separated rows; `-` for standard input.
        input: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Compare the extension classifier against brute force on all 2-groups.
    ExtCheck {
        #[arg(long, default_value_t = 64, value_parser = clap::value_parser!(u32).range(1..=256))]
        max_order: u32,
    },
    /// Built-in examples.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand, Debug)]
pub enum CatalogAction {
    List,
    /// Print the manifold document for NAME.
    Show { name: String },
}

/// Failure with an exit code and a message for standard error.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<DocError> for Failure {
    fn from(e: DocError) -> Self {
        let code = match e {
            DocError::Parse(_) => EXIT_PARSE,
            DocError::Invalid(_) => EXIT_INVALID,
        };
        Failure::new(code, e.to_string())
    }
}

fn catalog_failure(e: Error) -> Failure {
    match e {
        Error::UnknownCatalogName(n) => Failure::new(
            EXIT_UNKNOWN_CATALOG,
            format!("unknown catalog name: {n} (see `cohomotopy catalog list`)"),
        ),
        Error::InvalidParameter(m) => Failure::new(EXIT_UNKNOWN_CATALOG, format!("no catalog entry: {m}")),
        e => Failure::new(EXIT_INTERNAL, e.to_string()),
    }
}

pub struct Io<'a> {
    pub stdin: &'a mut dyn Read,
    pub stdout: &'a mut dyn Write,
    pub stderr: &'a mut dyn Write,
}

fn read_source(path: &str, stdin: &mut dyn Read) -> Result<String, Failure> {
    let mut text = String::new();
    if path == "-" {
        stdin
            .read_to_string(&mut text)
            .map_err(|e| Failure::new(EXIT_PARSE, format!("reading standard input: {e}")))?;
    } else {
        text = std::fs::read_to_string(path)
            .map_err(|e| Failure::new(EXIT_PARSE, format!("reading {path}: {e}")))?;
    }
    Ok(text)
}

fn load(input: &str, permissive: bool, io: &mut Io) -> Result<ManifoldData, Failure> {
    if let Some(name) = input.strip_prefix("catalog:") {
        return catalog::lookup(name).map_err(catalog_failure);
    }
    let text = read_source(input, io.stdin)?;
    let loaded = ManifoldDocument::from_json(&text)?.to_manifold(permissive)?;
    for w in &loaded.warnings {
        let _ = writeln!(io.stderr, "warning: {w}");
    }
    Ok(loaded.data)
}

/// Integer matrix from JSON rows (`[[1, 2], [3, 4]]`) or whitespace text,
/// one row per line.
pub fn parse_matrix(text: &str) -> Result<IntMatrix, String> {
    let rows: Vec<Vec<Int>> = if text.trim_start().starts_with('[') {
        let v: Vec<Vec<serde_json::Number>> = serde_json::from_str(text).map_err(|e| e.to_string())?;
        v.iter()
            .map(|r| {
                r.iter()
                    .map(|n| Int::from_str(&n.to_string()).map_err(|_| format!("not an integer: {n}")))
                    .collect()
            })
            .collect::<Result<_, _>>()?
    } else {
        text.lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| {
                l.split(|c: char| c.is_whitespace() || c == ',')
                    .filter(|t| !t.is_empty())
                    .map(|t| Int::from_str(t).map_err(|_| format!("not an integer: {t}")))
                    .collect()
            })
            .collect::<Result<_, _>>()?
    };
    let cols = rows.first().map_or(0, Vec::len);
    if rows.iter().any(|r| r.len() != cols) {
        return Err("rows have different lengths".into());
    }
    Ok(IntMatrix::from_fn(rows.len(), cols, |i, j| rows[i][j].clone()))
}

fn parse_alpha(s: &str, h2: &FinAbGroup) -> Result<Vec<Int>, Failure> {
    let coords = s
        .split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| Int::from_str(t.trim()))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| Failure::new(EXIT_PARSE, format!("--alpha: not a list of integers: {s}")))?;
    if coords.len() != h2.num_generators() {
        return Err(Failure::new(
            EXIT_PARSE,
            format!(
                "--alpha has {} coordinates, H_2 = {h2} has {} generators (torsion first)",
                coords.len(),
                h2.num_generators()
            ),
        ));
    }
    Ok(coords)
}

fn out(io: &mut Io, text: &str) -> Result<(), Failure> {
    io.stdout
        .write_all(text.as_bytes())
        .map_err(|e| Failure::new(EXIT_INTERNAL, format!("writing output: {e}")))
}

fn json_line(value: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn cmd_report(
    input: &str,
    bound: u32,
    radius: u32,
    format: Format,
    permissive: bool,
    io: &mut Io,
) -> Result<(), Failure> {
    let x = load(input, permissive, io)?;
    let r = cohomotopy_report(&x, bound, radius);
    let text = match format {
        Format::Json => {
            let mut s = ReportDocument::new(&x, &r).to_json();
            s.push('\n');
            s
        }
        Format::Text => render_text(&x, &r),
    };
    out(io, &text)
}

fn cmd_fiber(input: &str, alpha: &str, format: Format, permissive: bool, io: &mut Io) -> Result<(), Failure> {
    let x = load(input, permissive, io)?;
    let coords = parse_alpha(alpha, &x.h2)?;
    let a = x
        .h2
        .element(coords)
        .map_err(|e| Failure::new(EXIT_PARSE, e.to_string()))?;
    let fiber = fiber_group(&x, &a).map_err(|e| match e {
        Error::NotIsotropic(s) => Failure::new(
            EXIT_NOT_ISOTROPIC,
            format!("alpha has self-intersection {s}; fibers exist only over classes with self-intersection 0"),
        ),
        e => Failure::new(EXIT_INTERNAL, e.to_string()),
    })?;
    let twisted = is_twisted_2class(&x, &a).map_err(|e| Failure::new(EXIT_INTERNAL, e.to_string()))?;
    let text = match format {
        Format::Json => json_line(&serde_json::json!({
            "fiber": GroupDoc::from_group(&fiber),
            "twisted": twisted,
        })),
        Format::Text => format!(
            "fiber: {fiber}\ntwisted: {}\n",
            if twisted { "yes" } else { "no" }
        ),
    };
    out(io, &text)
}

fn cmd_snf(input: &str, format: Format, io: &mut Io) -> Result<(), Failure> {
    let text = read_source(input, io.stdin)?;
    let m = parse_matrix(&text).map_err(|e| Failure::new(EXIT_PARSE, format!("matrix: {e}")))?;
    let s = smith_normal_form(&m);
    if s.u.mul(&m).mul(&s.v) != s.d {
        return Err(Failure::new(EXIT_INTERNAL, "U M V does not equal D"));
    }
    let rows = |m: &IntMatrix| -> Vec<Vec<serde_json::Number>> {
        m.to_rows()
            .iter()
            .map(|r| r.iter().map(crate::document::int_to_number).collect())
            .collect()
    };
    let text = match format {
        Format::Json => json_line(&serde_json::json!({
            "U": rows(&s.u),
            "D": rows(&s.d),
            "V": rows(&s.v),
        })),
        Format::Text => format!("U =\n{}\nD =\n{}\nV =\n{}\n", s.u, s.d, s.v),
    };
    out(io, &text)
}

/// All abelian 2-groups of order at most `max_order`, by order.
fn two_groups(max_order: u32) -> Vec<FinAbGroup> {
    let mut groups = Vec::new();
    let mut n = 2u32;
    while n <= max_order {
        groups.extend(abelian_groups_of_order(&Int::from(n as i64)));
        n *= 2;
    }
    groups
}

fn cmd_ext_check(max_order: u32, io: &mut Io) -> Result<(), Failure> {
    let mut cases = 0usize;
    let groups = two_groups(max_order);
    for b in &groups {
        let n = b.even_factor_indices().len();
        for mask in 0..1u32 << n {
            let bits = (0..n).map(|k| mask >> k & 1 == 1).collect();
            let phi = Z2Functional::new(b.clone(), bits).expect("one bit per factor");
            let fast = classify_extension(b, &phi).map_err(|e| Failure::new(EXIT_INTERNAL, e.to_string()))?;
            let slow = brute_force_extension_oracle(b, &phi)
                .map_err(|e| Failure::new(EXIT_INTERNAL, e.to_string()))?;
            cases += 1;
            if fast != slow {
                return Err(Failure::new(
                    EXIT_INTERNAL,
                    format!(
                        "disagreement: B = {b}, bits {:?}: classifier {fast}, brute force {slow}",
                        phi.bits()
                    ),
                ));
            }
        }
    }
    out(
        io,
        &format!(
            "{} groups, {cases} cases up to order {max_order}: all agree\n",
            groups.len()
        ),
    )
}

fn cmd_catalog(action: &CatalogAction, io: &mut Io) -> Result<(), Failure> {
    match action {
        CatalogAction::List => {
            let width = catalog::ROSTER.iter().map(|e| e.name.len()).max().unwrap_or(0);
            let mut text = String::new();
            for e in catalog::ROSTER {
                text.push_str(&format!("{:<width$}  {}\n", e.name, e.description));
            }
            text.push_str(&format!("{:<width$}  connected sum of any entries, e.g. cp2#e_2_1\n", "a#b"));
            out(io, &text)
        }
        CatalogAction::Show { name } => {
            let x = catalog::lookup(name).map_err(catalog_failure)?;
            let mut s = ManifoldDocument::from_manifold(&x).to_json();
            s.push('\n');
            out(io, &s)
        }
    }
}

pub fn dispatch(cli: &Cli, io: &mut Io) -> Result<(), Failure> {
    match &cli.command {
        Command::Report {
            input,
            bound,
            radius,
            format,
            permissive,
        } => cmd_report(input, *bound, *radius, *format, *permissive, io),
        Command::Fiber {
            input,
            alpha,
            format,
            permissive,
        } => cmd_fiber(input, alpha, *format, *permissive, io),
        Command::Snf { input, format } => cmd_snf(input, *format, io),
        Command::ExtCheck { max_order } => cmd_ext_check(*max_order, io),
        Command::Catalog { action } => cmd_catalog(action, io),
    }
}

/// Parses `args` and runs; returns the process exit code.
pub fn run<I, T>(args: I, io: &mut Io) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { 0 };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = io.stderr.write_all(rendered.as_bytes());
            } else {
                let _ = io.stdout.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    match dispatch(&cli, io) {
        Ok(()) => 0,
        Err(f) => {
            let _ = writeln!(io.stderr, "error: {}", f.message);
            f.code
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str], stdin: &str) -> (i32, String, String) {
        let mut input = stdin.as_bytes();
        let (mut o, mut e) = (Vec::new(), Vec::new());
        let code = run(
            std::iter::once("cohomotopy").chain(args.iter().copied()),
            &mut Io {
                stdin: &mut input,
                stdout: &mut o,
                stderr: &mut e,
            },
        );
        (code, String::from_utf8(o).unwrap(), String::from_utf8(e).unwrap())
    }

    #[test]
    fn matrix_formats() {
        let a = parse_matrix("[[2, 4], [6, 8]]").unwrap();
        let b = parse_matrix("2 4\n6 8\n").unwrap();
        assert_eq!(a, b);
        assert!(parse_matrix("1 2\n3").is_err());
        assert!(parse_matrix("1 x").is_err());
    }

    #[test]
    fn fiber_negative_alpha() {
        let (code, out, _) = run_str(&["fiber", "catalog:s2xt2", "--alpha", "0,-3"], "");
        assert_eq!(code, 0);
        assert!(out.contains("ℤ₂ ⊕ ℤ₆ ⊕ ℤ₆"), "{out}");
    }

    #[test]
    fn alpha_length_checked() {
        let (code, _, err) = run_str(&["fiber", "catalog:t4", "--alpha", "1,0"], "");
        assert_eq!(code, EXIT_PARSE, "{err}");
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run_str(&["frobnicate"], "").0, EXIT_PARSE);
        assert_eq!(run_str(&["ext-check", "--max-order", "512"], "").0, EXIT_PARSE);
    }
}
