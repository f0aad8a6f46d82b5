//! `kaci`: command-line front end.
//!
//! Exit codes: 0 on success, 1 when a computation fails (for example the
//! input is not an almost complete intersection), 2 on usage or parse
//! errors.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Write as _;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use serde_json::{json, Value};

use kaci::aci::{
    check_lift, classify, generate_family_one, generate_family_two, lg_lift, Case, DEFAULT_RETRY_BUDGET,
};
use kaci::edge::build_catalog;
use kaci::groebner::buchberger;
use kaci::hilbert::hilbert_series;
use kaci::parse::{format_poly, parse_ideal_file, FieldSpec};
use kaci::resolution::{betti_numbers, minimal_free_resolution};
use kaci::verify::{ledger_json, Suite};
use kaci::{Error, Field, Fp, Ideal, MonomialOrder, Rat};

/// Characteristics accepted by `--char`; 0 means the rationals.
const PRIMES: [u64; 7] = [2, 3, 5, 7, 101, 32003, 65521];
const DEFAULT_CHAR: u64 = 32003;
const BUDGET_VAR: &str = "TOOL_RETRY_BUDGET";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Command {
    /// Reduced Gröbner basis.
    Gb,
    /// Minimal free resolution of S/I.
    Res,
    /// Graded Betti numbers of S/I.
    Betti,
    /// Hilbert series and multiplicity of S/I.
    Hilbert,
    /// Structure of a quadratic almost complete intersection.
    Classify,
    /// Random member of one of the two Koszul families.
    GenFamily,
    /// Quadratic Gröbner lift of a classified ideal, with its check.
    Lift,
    /// Betti tables and h-polynomials of all edge ideals with g edges.
    EnumEdges,
    /// Run the full reproduction suite.
    VerifyPaper,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Ascii,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Style {
    /// Empty cells as `·`.
    Dot,
    /// Empty cells as `--`.
    Dash,
}

#[derive(Debug, Parser)]
#[command(name = "kaci", version, about = "Gröbner bases, resolutions and Koszul almost complete intersections")]
struct Cli {
    #[arg(value_enum)]
    command: Command,
    /// Ideal file: `ring Fp[x,y]; ideal (x^2, x*y);`.
    #[arg(long)]
    input: Option<std::path::PathBuf>,
    /// grevlex, lex, or block:v1,v2[:lex].
    #[arg(long, default_value = "grevlex")]
    order: String,
    /// Height (gen-family) or number of edges (enum-edges).
    #[arg(long)]
    g: Option<usize>,
    #[arg(long, value_parser = parse_case)]
    case: Option<Case>,
    /// Number of variables for gen-family; defaults to g + 2.
    #[arg(long)]
    vars: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Coefficient characteristic: 0 for the rationals or one of the listed primes.
    #[arg(long = "char")]
    characteristic: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Ascii)]
    format: Format,
    /// Same as --format json.
    #[arg(long)]
    json: bool,
    #[arg(long, value_enum, default_value_t = Style::Dot)]
    style: Style,
}

fn parse_case(s: &str) -> Result<Case, String> {
    s.parse::<Case>().map_err(|e| e.to_string())
}

enum Failure {
    Usage(String),
    Compute(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Syntax { .. }
            | Error::UnknownVariable(_)
            | Error::TooManyVariables(_)
            | Error::InvalidRing(_)
            | Error::NotHomogeneous(_)
            | Error::EmptyIdeal
            | Error::InvalidArgument(_) => Failure::Usage(e.to_string()),
            _ => Failure::Compute(e.to_string()),
        }
    }
}

type Outcome = Result<String, Failure>;

impl Cli {
    fn json(&self) -> bool {
        self.json || self.format == Format::Json
    }

    fn zero(&self) -> &'static str {
        match self.style {
            Style::Dot => "·",
            Style::Dash => "--",
        }
    }

    fn budget(&self) -> Result<usize, Failure> {
        match std::env::var(BUDGET_VAR) {
            Ok(v) => v
                .trim()
                .parse::<usize>()
                .ok()
                .filter(|&b| b > 0)
                .ok_or_else(|| Failure::Usage(format!("{BUDGET_VAR} must be a positive integer, got `{v}`"))),
            Err(_) => Ok(DEFAULT_RETRY_BUDGET),
        }
    }

    fn require_g(&self) -> Result<usize, Failure> {
        self.g.ok_or_else(|| Failure::Usage(format!("{} needs --g", self.name())))
    }

    fn name(&self) -> String {
        self.command.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default()
    }

    fn source(&self) -> Result<Option<String>, Failure> {
        let needs_input = matches!(
            self.command,
            Command::Gb | Command::Res | Command::Betti | Command::Hilbert | Command::Classify | Command::Lift
        );
        match (&self.input, needs_input) {
            (None, true) => Err(Failure::Usage(format!("{} needs --input", self.name()))),
            (Some(_), false) => Err(Failure::Usage(format!("{} takes no --input", self.name()))),
            (None, false) => Ok(None),
            (Some(p), true) => std::fs::read_to_string(p)
                .map(Some)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", p.display()))),
        }
    }

    /// The characteristic from `--char` and the input header, which must agree.
    fn characteristic(&self, src: Option<&str>) -> Result<u64, Failure> {
        let header = match src {
            Some(s) => match kaci::parse::parse_header(s)?.0 {
                FieldSpec::Prime(p) => p,
                FieldSpec::Rational => Some(0),
            },
            None => None,
        };
        let p = match (self.characteristic, header) {
            (Some(a), Some(b)) if a != b => {
                return Err(Failure::Usage(format!("--char {a} contradicts the input field (characteristic {b})")))
            }
            (a, b) => a.or(b).unwrap_or(DEFAULT_CHAR),
        };
        if p != 0 && !PRIMES.contains(&p) {
            let list: Vec<String> = PRIMES.iter().map(u64::to_string).collect();
            return Err(Failure::Usage(format!("unsupported characteristic {p}; use 0 or one of {}", list.join(", "))));
        }
        Ok(p)
    }
}

fn field_label(p: u64) -> String {
    match p {
        0 => "QQ".into(),
        DEFAULT_CHAR => "Fp".into(),
        p => format!("F{p}"),
    }
}

macro_rules! with_field {
    ($p:expr, $body:ident) => {
        match $p {
            0 => $body::<Rat>,
            2 => $body::<Fp<2>>,
            3 => $body::<Fp<3>>,
            5 => $body::<Fp<5>>,
            7 => $body::<Fp<7>>,
            101 => $body::<Fp<101>>,
            65521 => $body::<Fp<65521>>,
            // 32003; anything outside PRIMES is rejected before dispatch
            _ => $body::<Fp<32003>>,
        }
    };
}

fn run(cli: &Cli) -> Outcome {
    let src = cli.source()?;
    let p = cli.characteristic(src.as_deref())?;
    if cli.command == Command::VerifyPaper && p != DEFAULT_CHAR {
        return Err(Failure::Usage("verify-paper runs over F_32003 only".into()));
    }
    let go = |f: fn(&Cli, Option<&str>, u64) -> Outcome| f(cli, src.as_deref(), p);
    go(with_field!(p, run_in))
}

fn run_in<F: Field>(cli: &Cli, src: Option<&str>, p: u64) -> Outcome {
    match cli.command {
        Command::Gb => gb::<F>(cli, &read_ideal(cli, src)?),
        Command::Res => res::<F>(cli, &read_ideal(cli, src)?),
        Command::Betti => betti::<F>(cli, &read_ideal(cli, src)?),
        Command::Hilbert => hilbert::<F>(cli, &read_ideal(cli, src)?),
        Command::Classify => classify_cmd::<F>(cli, &read_ideal(cli, src)?),
        Command::Lift => lift::<F>(cli, &read_ideal(cli, src)?),
        Command::GenFamily => gen_family::<F>(cli, p),
        Command::EnumEdges => enum_edges::<F>(cli),
        Command::VerifyPaper => verify_paper(cli),
    }
}

fn read_ideal<F: Field>(cli: &Cli, src: Option<&str>) -> Result<Ideal<F>, Failure> {
    let src = src.unwrap_or_default();
    let (_, ring) = kaci::parse::parse_header(src)?;
    let order = MonomialOrder::parse(&cli.order, ring.names()).map_err(Failure::Usage)?;
    Ok(parse_ideal_file::<F>(src, order)?.ideal()?)
}

fn polys<F: Field>(ps: &[kaci::Polynomial<F>], ideal: &Ideal<F>) -> Vec<String> {
    ps.iter().map(|p| format_poly(p, ideal.ring())).collect()
}

fn gb<F: Field>(cli: &Cli, ideal: &Ideal<F>) -> Outcome {
    let gb = buchberger(ideal, ideal.order());
    let elems = polys(gb.elements(), ideal);
    if cli.json() {
        let lead: Vec<String> = gb
            .leading_monomials()
            .iter()
            .map(|m| format_poly(&kaci::Polynomial::term(F::one(), *m, ideal.order()), ideal.ring()))
            .collect();
        return Ok(json!({ "ring": ideal.ring().names(), "order": cli.order, "gb": elems, "leading": lead }).to_string());
    }
    Ok(elems.join("\n"))
}

fn twists(degrees: &[u32]) -> String {
    if degrees.is_empty() {
        return "0".into();
    }
    let mut count: BTreeMap<u32, usize> = BTreeMap::new();
    for &d in degrees {
        *count.entry(d).or_insert(0) += 1;
    }
    count
        .iter()
        .map(|(&d, &n)| {
            let s = if d == 0 { "S".to_string() } else { format!("S(-{d})") };
            if n == 1 { s } else { format!("{s}^{n}") }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn res<F: Field>(cli: &Cli, ideal: &Ideal<F>) -> Outcome {
    let c = minimal_free_resolution(ideal);
    let matrices: Vec<Vec<Vec<String>>> = (1..=c.length())
        .map(|i| {
            let d = c.differential(i);
            (0..d.rows()).map(|r| (0..d.cols()).map(|k| format_poly(d.get(r, k), ideal.ring())).collect()).collect()
        })
        .collect();
    if cli.json() {
        let degrees: Vec<&[u32]> = c.modules().iter().map(|m| m.degrees()).collect();
        let betti = c.betti_table()?;
        return Ok(json!({ "degrees": degrees, "differentials": matrices, "betti": betti.to_json() }).to_string());
    }
    let mut out = String::new();
    for (i, m) in c.modules().iter().enumerate() {
        let _ = writeln!(out, "F{i}: {}", twists(m.degrees()));
    }
    for (i, m) in matrices.iter().enumerate() {
        let _ = writeln!(out, "d{}:", i + 1);
        for row in m {
            let _ = writeln!(out, "  [{}]", row.join(", "));
        }
    }
    Ok(out.trim_end().to_string())
}

fn betti<F: Field>(cli: &Cli, ideal: &Ideal<F>) -> Outcome {
    let b = betti_numbers(ideal);
    if cli.json() {
        return Ok(b.to_json().to_string());
    }
    Ok(b.to_ascii(cli.zero()).trim_end().to_string())
}

fn hilbert<F: Field>(cli: &Cli, ideal: &Ideal<F>) -> Outcome {
    let h = hilbert_series(ideal)?;
    if cli.json() {
        return Ok(json!({
            "series": h.to_string(),
            "numerator": h.numerator.coeffs(),
            "nvars": h.nvars,
            "dim": h.dim,
            "h": h.h.coeffs(),
            "multiplicity": h.multiplicity(),
        })
        .to_string());
    }
    Ok(format!("H(t) = {h}\ndim = {}\nmultiplicity = {}", h.dim, h.multiplicity()))
}

fn classify_cmd<F: Field>(cli: &Cli, ideal: &Ideal<F>) -> Outcome {
    let c = classify(ideal)?;
    if cli.json() {
        return Ok(c.to_json().to_string());
    }
    Ok(pretty(&c.to_json()))
}

fn lift<F: Field>(cli: &Cli, ideal: &Ideal<F>) -> Outcome {
    let c = classify(ideal)?;
    if !c.is_koszul() {
        return Err(Failure::Compute(format!("no lift: classified as {}", c.tag())));
    }
    let cert = lg_lift(&c)?;
    let report = check_lift(&cert);
    let v = json!({ "certificate": cert.to_json(), "report": report.to_json() });
    let text = if cli.json() { v.to_string() } else { pretty(&v) };
    if !report.passed() {
        emit(&text);
        return Err(Failure::Compute("lift check failed".into()));
    }
    Ok(text)
}

fn gen_family<F: Field>(cli: &Cli, p: u64) -> Outcome {
    let g = cli.require_g()?;
    let case = cli.case.ok_or_else(|| Failure::Usage("gen-family needs --case one|two".into()))?;
    let n = cli.vars.unwrap_or(g + 2);
    let budget = cli.budget()?;
    let ideal = match case {
        Case::One => generate_family_one::<F>(g, n, cli.seed, budget)?,
        Case::Two => generate_family_two::<F>(g, n, cli.seed, budget)?,
    };
    let text = kaci::parse::format_ideal_file(&field_label(p), &ideal);
    if cli.json() {
        return Ok(json!({
            "g": g,
            "case": format!("{case:?}").to_lowercase(),
            "seed": cli.seed,
            "ring": ideal.ring().names(),
            "gens": polys(ideal.gens(), &ideal),
            "ideal": text,
        })
        .to_string());
    }
    Ok(text.trim_end().to_string())
}

fn enum_edges<F: Field>(cli: &Cli) -> Outcome {
    let g = cli.require_g()?;
    let cat = build_catalog::<F>(g)?;
    if cli.json() {
        return Ok(cat.to_json_lines().trim_end().to_string());
    }
    let mut out = String::new();
    for e in &cat.entries {
        let edges: Vec<String> = e.graph.edges().iter().map(|(a, b)| format!("{}-{}", a + 1, b + 1)).collect();
        let totals: Vec<String> = e.betti.totals().iter().map(usize::to_string).collect();
        let _ = writeln!(
            out,
            "{:<24} h = {:<24} betti = {:<20}{}",
            edges.join(" "),
            e.h_polynomial().to_string(),
            totals.join(" "),
            if e.aci { " aci" } else { "" }
        );
    }
    let _ = write!(out, "{} graphs, {} distinct h-polynomials", cat.entries.len(), cat.h_polynomials().len());
    Ok(out)
}

fn verify_paper(cli: &Cli) -> Outcome {
    let suite = Suite::new(cli.budget()?);
    let reports = suite.run_all(|_| {});
    let pass = reports.iter().all(|r| r.pass());
    let text = if cli.json() {
        ledger_json(&reports).to_string()
    } else {
        let mut out = String::new();
        for r in &reports {
            let _ = writeln!(out, "{}", r.summary());
            for row in &r.rows {
                let _ = writeln!(out, "  {row}");
            }
        }
        out.trim_end().to_string()
    };
    if pass {
        Ok(text)
    } else {
        emit(&text);
        Err(Failure::Compute("verification failed".into()))
    }
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).unwrap_or_default()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            emit(&out);
            ExitCode::SUCCESS
        }
        Err(Failure::Compute(msg)) => {
            eprintln!("kaci {}: {msg}", cli.name());
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("kaci {}: {msg}", cli.name());
            ExitCode::from(2)
        }
    }
}
