//! `pqgf` — recurrence families, their parity-split closed-form
//! generating functions, and the verification suites behind them.
//!
//! Exit codes: 0 on success, 1 when a verification scope reports a
//! mismatch, 2 on usage errors. Structured output goes to stdout,
//! diagnostics to stderr.

use std::fmt::Write as _;
use std::io::{ErrorKind, Write as _};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;

use pqgf::fps::RationalGF;
use pqgf::genfun::{
    family_gf_at, render_table_text, run_scope, table_entries, CatalogEntry, Params, VerifyScope,
};
use pqgf::mpoly::{MPoly, VarId};
use pqgf::report::VerifyReport;
use pqgf::sequences::{seq_terms, FamilyId, ParitySelector, Seeds, SequenceSpec};

#[derive(Parser)]
#[command(name = "pqgf", version, about = "Two-parameter integer sequences and their generating functions, exactly")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the first terms of a recurrence family
    Seq(SeqArgs),
    /// Print a parity class's closed-form generating function
    Gf(GfArgs),
    /// Expand a closed form into its leading coefficients
    Expand(ExpandArgs),
    /// Run a verification suite and report every check
    Verify(VerifyArgs),
    /// Render one of the catalogued tables
    Tables(TablesArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Parity {
    Even,
    Odd,
}

impl From<Parity> for ParitySelector {
    fn from(p: Parity) -> ParitySelector {
        match p {
            Parity::Even => ParitySelector::Even,
            Parity::Odd => ParitySelector::Odd,
        }
    }
}

impl Parity {
    fn name(self) -> &'static str {
        match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Scope {
    All,
    Theorems,
    Families,
    Products,
    Tables,
}

impl From<Scope> for VerifyScope {
    fn from(s: Scope) -> VerifyScope {
        match s {
            Scope::All => VerifyScope::All,
            Scope::Theorems => VerifyScope::Theorems,
            Scope::Families => VerifyScope::Families,
            Scope::Products => VerifyScope::Products,
            Scope::Tables => VerifyScope::Tables,
        }
    }
}

fn scope_name(s: Scope) -> &'static str {
    match s {
        Scope::All => "all",
        Scope::Theorems => "theorems",
        Scope::Families => "families",
        Scope::Products => "products",
        Scope::Tables => "tables",
    }
}

/// A `--p`/`--q` argument: an integer literal or one of the symbols
/// `p`, `q`, `k`.
#[derive(Clone, Copy)]
enum PolyArg {
    Int(i64),
    Sym(VarId),
}

fn parse_poly_arg(s: &str) -> Result<PolyArg, String> {
    match s {
        "p" => Ok(PolyArg::Sym(VarId::P)),
        "q" => Ok(PolyArg::Sym(VarId::Q)),
        "k" => Ok(PolyArg::Sym(VarId::K)),
        _ => s
            .parse::<i64>()
            .map(PolyArg::Int)
            .map_err(|_| format!("expected an integer or one of the symbols p, q, k, got `{s}`")),
    }
}

impl PolyArg {
    /// Turn the token into a polynomial, substituting `--k` for the
    /// symbol `k` when given.
    fn resolve(self, k: Option<i64>) -> MPoly {
        match self {
            PolyArg::Int(v) => MPoly::constant(v),
            PolyArg::Sym(VarId::K) => match k {
                Some(v) => MPoly::constant(v),
                None => MPoly::var(VarId::K),
            },
            PolyArg::Sym(v) => MPoly::var(v),
        }
    }
}

fn parse_family(s: &str) -> Result<FamilyId, String> {
    FamilyId::ALL
        .into_iter()
        .find(|f| f.cli_name() == s)
        .ok_or_else(|| {
            let names: Vec<&str> = FamilyId::ALL.iter().map(|f| f.cli_name()).collect();
            format!("unknown family `{s}` (expected one of: {})", names.join(", "))
        })
}

#[derive(Args)]
struct ParamArgs {
    /// First recurrence parameter (integer or p, q, k)
    #[arg(long, default_value = "p", value_parser = parse_poly_arg)]
    p: PolyArg,
    /// Second recurrence parameter (integer or p, q, k)
    #[arg(long, default_value = "q", value_parser = parse_poly_arg)]
    q: PolyArg,
    /// Numeric value substituted for the symbol k
    #[arg(long)]
    k: Option<i64>,
}

impl ParamArgs {
    fn params(&self) -> Params {
        Params {
            p: self.p.resolve(self.k),
            q: self.q.resolve(self.k),
        }
    }
}

#[derive(Args)]
struct SeqArgs {
    /// Recurrence family
    #[arg(long, value_parser = parse_family)]
    family: FamilyId,
    #[command(flatten)]
    params: ParamArgs,
    /// Number of terms to print
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    count: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct GfArgs {
    /// Recurrence family
    #[arg(long, value_parser = parse_family)]
    family: FamilyId,
    /// Which parity class of the family to close over
    #[arg(long, value_enum)]
    parity: Parity,
    #[command(flatten)]
    params: ParamArgs,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct ExpandArgs {
    #[command(flatten)]
    gf: GfArgs,
    /// Highest z-power of the expansion
    #[arg(long)]
    order: usize,
}

#[derive(Args)]
struct VerifyArgs {
    /// Which checks to run
    #[arg(long, value_enum, default_value_t = Scope::All)]
    scope: Scope,
    /// Truncation order overriding every check's default
    #[arg(long)]
    order: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct TablesArgs {
    /// Table number (2 through 7)
    #[arg(long)]
    id: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

fn main() -> ExitCode {
    let (payload, code) = match run(Cli::parse()) {
        Ok(done) => done,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let mut out = std::io::stdout().lock();
    match out.write_all(payload.as_bytes()).and_then(|()| out.flush()) {
        Ok(()) => code,
        // the downstream consumer closed the pipe early; nothing to report
        Err(e) if e.kind() == ErrorKind::BrokenPipe => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

/// Render the requested output; `Err` is a usage problem (exit 2).
fn run(cli: Cli) -> Result<(String, ExitCode), String> {
    match cli.command {
        Command::Seq(a) => run_seq(a).map(|s| (s, ExitCode::SUCCESS)),
        Command::Gf(a) => run_gf(a).map(|s| (s, ExitCode::SUCCESS)),
        Command::Expand(a) => run_expand(a).map(|s| (s, ExitCode::SUCCESS)),
        Command::Verify(a) => Ok(run_verify(a)),
        Command::Tables(a) => run_tables(a).map(|s| (s, ExitCode::SUCCESS)),
    }
}

/// Sequence spec for any family; generalized families run with fully
/// symbolic seeds.
fn build_spec(family: FamilyId, params: &Params) -> Result<SequenceSpec, String> {
    let spec = if family.is_generalized() {
        SequenceSpec::generalized(family, params.p.clone(), params.q.clone(), Seeds::symbolic())
    } else {
        SequenceSpec::special(family, params.p.clone(), params.q.clone())
    };
    spec.map_err(|e| e.to_string())
}

fn poly_json_list(polys: &[MPoly]) -> Value {
    Value::Array(polys.iter().map(MPoly::to_json).collect())
}

fn run_seq(a: SeqArgs) -> Result<String, String> {
    let params = a.params.params();
    let spec = build_spec(a.family, &params)?;
    let terms = seq_terms(&spec, a.count as usize);
    let mut out = String::new();
    match a.format {
        Format::Text => {
            for t in &terms {
                writeln!(out, "{t}").unwrap();
            }
        }
        Format::Json => {
            let doc = serde_json::json!({
                "family": a.family.cli_name(),
                "p": params.p.to_string(),
                "q": params.q.to_string(),
                "terms": poly_json_list(&terms),
            });
            writeln!(out, "{doc}").unwrap();
        }
        Format::Csv => {
            writeln!(out, "n,term").unwrap();
            for (n, t) in terms.iter().enumerate() {
                writeln!(out, "{n},{t}").unwrap();
            }
        }
    }
    Ok(out)
}

fn resolve_gf(a: &GfArgs) -> Result<(Params, RationalGF), String> {
    let params = a.params.params();
    let gf = family_gf_at(a.family, a.parity.into(), &params).map_err(|e| e.to_string())?;
    Ok((params, gf))
}

fn run_gf(a: GfArgs) -> Result<String, String> {
    let (params, gf) = resolve_gf(&a)?;
    let mut out = String::new();
    match a.format {
        Format::Text => writeln!(out, "{gf}").unwrap(),
        Format::Json => {
            let doc = serde_json::json!({
                "family": a.family.cli_name(),
                "parity": a.parity.name(),
                "p": params.p.to_string(),
                "q": params.q.to_string(),
                "numer": poly_json_list(gf.numer()),
                "denom": poly_json_list(gf.denom()),
                "text": gf.to_string(),
            });
            writeln!(out, "{doc}").unwrap();
        }
        Format::Csv => {
            writeln!(out, "z_power,numer,denom").unwrap();
            let rows = gf.numer().len().max(gf.denom().len());
            for n in 0..rows {
                let cell =
                    |side: &[MPoly]| side.get(n).map(MPoly::to_string).unwrap_or_default();
                writeln!(out, "{n},{},{}", cell(gf.numer()), cell(gf.denom())).unwrap();
            }
        }
    }
    Ok(out)
}

fn run_expand(a: ExpandArgs) -> Result<String, String> {
    let (params, gf) = resolve_gf(&a.gf)?;
    let coeffs = gf.expand(a.order);
    let mut out = String::new();
    match a.gf.format {
        Format::Text => {
            for c in coeffs.coeffs() {
                writeln!(out, "{c}").unwrap();
            }
        }
        Format::Json => {
            let doc = serde_json::json!({
                "family": a.gf.family.cli_name(),
                "parity": a.gf.parity.name(),
                "p": params.p.to_string(),
                "q": params.q.to_string(),
                "order": a.order,
                "coeffs": poly_json_list(coeffs.coeffs()),
            });
            writeln!(out, "{doc}").unwrap();
        }
        Format::Csv => {
            writeln!(out, "n,coeff").unwrap();
            for (n, c) in coeffs.coeffs().iter().enumerate() {
                writeln!(out, "{n},{c}").unwrap();
            }
        }
    }
    Ok(out)
}

fn run_verify(a: VerifyArgs) -> (String, ExitCode) {
    let reports = run_scope(a.scope.into(), a.order);
    let failed: Vec<&VerifyReport> = reports.iter().filter(|r| !r.passed()).collect();
    let mut out = String::new();
    match a.format {
        Format::Text => {
            for r in &reports {
                writeln!(out, "{}", r.text_line()).unwrap();
            }
            writeln!(out, "{} checks, {} mismatches", reports.len(), failed.len()).unwrap();
        }
        Format::Json => {
            let doc = serde_json::json!({
                "scope": scope_name(a.scope),
                "all_passed": failed.is_empty(),
                "checks": Value::Array(reports.iter().map(VerifyReport::to_json).collect()),
            });
            writeln!(out, "{doc}").unwrap();
        }
        Format::Csv => {
            writeln!(out, "id,order,status,first_mismatch_n").unwrap();
            for r in &reports {
                let n = r
                    .first_mismatch
                    .as_ref()
                    .map(|m| m.n.to_string())
                    .unwrap_or_default();
                let status = if r.passed() { "equal" } else { "mismatch" };
                writeln!(out, "{},{},{},{}", r.id, r.order, status, n).unwrap();
            }
        }
    }
    if let Some(first) = failed.first() {
        eprintln!("verification failed: first failing check {}", first.id);
        return (out, ExitCode::from(1));
    }
    (out, ExitCode::SUCCESS)
}

fn run_tables(a: TablesArgs) -> Result<String, String> {
    let entries = table_entries(a.id).map_err(|e| e.to_string())?;
    let mut out = String::new();
    match a.format {
        Format::Text => out = render_table_text(a.id).map_err(|e| e.to_string())?,
        Format::Json => {
            let doc = Value::Array(entries.iter().map(CatalogEntry::to_json).collect());
            writeln!(out, "{doc}").unwrap();
        }
        Format::Csv => {
            writeln!(out, "id,label,gf").unwrap();
            for e in &entries {
                writeln!(out, "{},{},{}", e.id, e.label, e.gf).unwrap();
            }
        }
    }
    Ok(out)
}
