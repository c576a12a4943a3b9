//! Command-line front end. [`run`] takes the full argument vector and
//! returns the exit code together with everything the process would print,
//! so the binary is a thin shell and the commands are testable in-process.
//!
//! Exit codes: 0 when every check holds, 1 when the mathematics says no
//! (a residue of -1, a refused certificate, a failing reproduction), 2 on
//! usage errors and unmet preconditions.
//!
//! ```
//! let out = reciprocity::cli::run(["reciprocity", "residue", "--field", "r", "y^2 - 1", "y"]);
//! assert_eq!(out.code, 1);
//! assert!(out.stdout.contains("-1"));
//! ```

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::arith::{is_prime, Field, PrimeField, Rational, Rationals};
use crate::error::{Error, Result};
use crate::places::rational::RationalPlace;
use crate::places::real::{real_places, valuation_real, RealModelPlace};
use crate::places::{support, ConstantField, FunctionFieldPlace};
use crate::poly::{parse_polynomial, UniPoly, Var};
use crate::series::{
    hensel_lift_auto, normalization_certificate, qth_power_in_germ, residue_certificate, verify_certificate,
    GermAnalysis, Orientation, PowerVerdict, QuotientModel, SeriesRing, TruncatedSeries, DEFAULT_PRECISION,
};
use crate::symbols::{
    hilbert_symbol_q, qth_power_residue, ramifies, ramifies_real, reciprocity_check_q, reciprocity_check_real,
    scan_places, scan_real_places, weil_reciprocity_check, BaseField, Constraint, DerivedIdentity, PlaceEntry,
    ReciprocityReport, SymbolAlgebra, SymbolBase,
};

mod examples;

pub use examples::{run_example, ExampleRun, ExampleSettings, EXAMPLE_IDS};

/// Default prime for the series commands: `13 = 1 (mod 4)`, so `sqrt(-1)`
/// exists.
pub const DEFAULT_SERIES_PRIME: u64 = 13;

#[derive(Parser, Debug)]
#[command(name = "reciprocity", version, about = "Tame symbols, residue symbols and reciprocity checks")]
pub struct CommandConfig {
    /// Base field: `q`, `r` or `fp:<p>`. The default depends on the command.
    #[arg(long, global = true)]
    pub field: Option<BaseField>,
    /// The prime degree of the symbols.
    #[arg(long, global = true, default_value_t = 2)]
    pub q: u32,
    /// Series precision `N`.
    #[arg(long = "order", global = true, default_value_t = DEFAULT_PRECISION)]
    pub order: u32,
    /// Seed for the randomized parts (example families).
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Print the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Series ring: `local`, `yadic` or `xadic`.
    #[arg(long, global = true)]
    pub ring: Option<SeriesRing>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Whether `f` is a q-th power modulo `g`: in `k[y]`, or in a series
    /// ring when `--ring` is given.
    Residue {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// The tame (or Hilbert) symbol of `(alpha, beta)` at one place:
    /// `prime:<poly>`, `inf`, `p:<n>` or `real`.
    Symbol {
        #[arg(allow_hyphen_values = true)]
        alpha: String,
        #[arg(allow_hyphen_values = true)]
        beta: String,
        #[arg(long)]
        at: PlaceLiteral,
    },
    /// Every place where `(alpha, beta)_q` ramifies.
    Ramify {
        #[arg(allow_hyphen_values = true)]
        alpha: String,
        #[arg(allow_hyphen_values = true)]
        beta: String,
    },
    /// A reciprocity law checked place by place.
    Reciprocity {
        #[command(subcommand)]
        law: Law,
    },
    /// Hensel factorization of `g` in `k[x][[y]]` or `k[y][[x]]`.
    Hensel {
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Explicit `s, t` with `f - s^q = g t` (or `g - s^q = f t`).
    Certify {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
        /// Which operand is claimed to be the q-th power.
        #[arg(long, value_enum, default_value_t = ResidueOf::F)]
        residue_of: ResidueOf,
    },
    /// Reproduce the worked examples.
    Examples {
        #[command(subcommand)]
        action: ExamplesAction,
    },
}

#[derive(Subcommand, Debug)]
pub enum Law {
    /// Hilbert symbols of two rationals over every place of `Q`.
    Qr {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Parity of real ramification over `R(y)`.
    Real {
        #[arg(allow_hyphen_values = true)]
        alpha: String,
        #[arg(allow_hyphen_values = true)]
        beta: String,
    },
    /// Norms of tame symbols over `F_p(y)`.
    Weil {
        #[arg(allow_hyphen_values = true)]
        alpha: String,
        #[arg(allow_hyphen_values = true)]
        beta: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum ExamplesAction {
    /// `ex0` .. `ex10`, or `all`.
    Run { selector: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ResidueOf {
    F,
    G,
}

/// A place named on the command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PlaceLiteral {
    /// `prime:<poly>`, a monic prime of `k[y]`.
    Prime(String),
    /// `inf`.
    Infinite,
    /// `p:<n>`, a rational prime.
    RationalPrime(u64),
    /// `real`, the real place of `Q`.
    Real,
}

impl FromStr for PlaceLiteral {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "inf" => Ok(Self::Infinite),
            "real" => Ok(Self::Real),
            _ => {
                if let Some(poly) = s.strip_prefix("prime:") {
                    Ok(Self::Prime(poly.to_string()))
                } else if let Some(n) = s.strip_prefix("p:") {
                    n.parse().map(Self::RationalPrime).map_err(|_| Error::Usage(format!("bad prime `{n}`")))
                } else {
                    Err(Error::Usage(format!("bad place `{s}`; expected prime:<poly>, inf, p:<n> or real")))
                }
            }
        }
    }
}

/// What every command prints, as text or JSON.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    pub places: Vec<PlaceEntry>,
    pub constraint: Constraint,
    pub satisfied: bool,
    pub derived_identities: Vec<DerivedIdentity>,
}

impl Report {
    fn new(command: impl Into<String>, inputs: &[(&str, String)]) -> Self {
        Self {
            command: command.into(),
            inputs: inputs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
            places: Vec::new(),
            constraint: Constraint { statement: String::new(), value: String::new() },
            satisfied: true,
            derived_identities: Vec::new(),
        }
    }

    fn with_reciprocity(mut self, r: ReciprocityReport) -> Self {
        self.inputs.insert("algebra".into(), r.algebra);
        self.places = r.places;
        self.constraint = r.constraint;
        self.satisfied = r.satisfied;
        self.derived_identities = r.derived_identities;
        self
    }

    fn constrain(&mut self, statement: impl Into<String>, value: impl Into<String>, satisfied: bool) {
        self.constraint = Constraint { statement: statement.into(), value: value.into() };
        self.satisfied = satisfied;
    }

    fn derive(&mut self, statement: impl Into<String>, holds: bool) {
        self.derived_identities.push(DerivedIdentity { statement: statement.into(), holds });
    }

    /// The constraint holds and so does every derived identity.
    pub fn all_hold(&self) -> bool {
        self.satisfied && self.derived_identities.iter().all(|d| d.holds)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{}", self.command).unwrap();
        for (k, v) in &self.inputs {
            writeln!(out, "  {k} = {v}").unwrap();
        }
        if !self.places.is_empty() {
            let width = self.places.iter().map(|p| p.place.len()).max().unwrap_or(0);
            writeln!(out, "places:").unwrap();
            for p in &self.places {
                let mark = if p.trivial { "trivial" } else { "RAMIFIED" };
                writeln!(out, "  {:width$}  {mark:8}  {}", p.place, p.symbol_value).unwrap();
            }
        }
        writeln!(out, "constraint: {} -> {}", self.constraint.statement, self.constraint.value).unwrap();
        writeln!(out, "satisfied: {}", if self.satisfied { "yes" } else { "no" }).unwrap();
        if !self.derived_identities.is_empty() {
            writeln!(out, "derived:").unwrap();
            for d in &self.derived_identities {
                writeln!(out, "  [{}] {}", if d.holds { "ok" } else { "FAIL" }, d.statement).unwrap();
            }
        }
        out
    }
}

/// Exit code and captured output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parse `argv` (program name first) and execute it.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match CommandConfig::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    match execute(&config) {
        Ok(report) => {
            let stdout = if config.json {
                serde_json::to_string_pretty(&report).expect("report serializes") + "\n"
            } else {
                report.to_text()
            };
            Outcome { code: if report.all_hold() { 0 } else { 1 }, stdout, stderr: String::new() }
        }
        Err(e) => Outcome { code: 2, stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

/// Dispatch a parsed command to the math modules.
pub fn execute(config: &CommandConfig) -> Result<Report> {
    if !is_prime(config.q as u64) {
        return Err(Error::Usage(format!("--q {} is not prime", config.q)));
    }
    if let Some(BaseField::Prime(p)) = config.field {
        if p == config.q as u64 {
            return Err(Error::Usage(format!("--q {} is not invertible in F_{p}", config.q)));
        }
    }
    match &config.command {
        Command::Residue { f, g } => residue(config, f, g),
        Command::Symbol { alpha, beta, at } => symbol(config, alpha, beta, at),
        Command::Ramify { alpha, beta } => ramify(config, alpha, beta),
        Command::Reciprocity { law } => reciprocity(config, law),
        Command::Hensel { g } => hensel(config, g),
        Command::Certify { f, g, residue_of } => certify(config, f, g, *residue_of),
        Command::Examples { action: ExamplesAction::Run { selector } } => run_examples(config, selector),
    }
}

fn base_field(config: &CommandConfig, default: BaseField) -> BaseField {
    config.field.unwrap_or(default)
}

fn series_field(config: &CommandConfig) -> Result<PrimeField> {
    match base_field(config, BaseField::Prime(DEFAULT_SERIES_PRIME)) {
        BaseField::Prime(p) => PrimeField::try_new(p),
        other => Err(Error::Usage(format!("series commands run over F_p, not {other}"))),
    }
}

fn parse_uni<F: Field>(text: &str, field: &F) -> Result<UniPoly<F>> {
    parse_polynomial(text, field)?.to_univariate(Var::Y)
}

fn parse_rational(text: &str) -> Result<Rational> {
    let p = parse_polynomial(text, &Rationals)?;
    if p.uses(Var::X) || p.uses(Var::Y) {
        return Err(Error::Usage(format!("`{text}` is not a rational number")));
    }
    Ok(p.coeff(0, 0))
}

fn sign(v: i8) -> &'static str {
    if v >= 0 {
        "1"
    } else {
        "-1"
    }
}

fn germ_places(a: &GermAnalysis) -> Vec<PlaceEntry> {
    match &a.model {
        QuotientModel::Branches(branches) => branches
            .iter()
            .enumerate()
            .map(|(i, b)| PlaceEntry {
                place: format!("branch {i} at {:?} ({:?})", b.point, b.branch.kind),
                symbol_value: format!("pullback {}", b.pullback),
                trivial: b.root.is_some(),
            })
            .collect(),
        QuotientModel::Polynomial { var, residue, root } => vec![PlaceEntry {
            place: format!("k[{}]", var.name()),
            symbol_value: residue.display_var(var.name()),
            trivial: root.is_some(),
        }],
    }
}

fn residue(config: &CommandConfig, f: &str, g: &str) -> Result<Report> {
    let q = config.q;
    if let Some(ring) = config.ring {
        let k = series_field(config)?;
        let (fp, gp) = (parse_polynomial(f, &k)?, parse_polynomial(g, &k)?);
        let analysis = qth_power_in_germ(&fp, &gp, ring, q, config.order)?;
        let mut report = Report::new(
            "residue",
            &[("f", fp.to_string()), ("g", gp.to_string()), ("q", q.to_string()), ("ring", ring.to_string()), ("field", format!("fp:{}", k.modulus())), ("order", config.order.to_string())],
        );
        report.places = germ_places(&analysis);
        let value = match &analysis.witness {
            Some(w) => format!("{} ({w})", analysis.verdict),
            None => analysis.verdict.to_string(),
        };
        report.constrain(format!("(f/g)_{q} in {ring}"), value, analysis.verdict.is_power());
        return Ok(report);
    }
    let field = base_field(config, BaseField::Rationals);
    let (fq, gq) = (parse_polynomial(f, &Rationals)?, parse_polynomial(g, &Rationals)?);
    let v = qth_power_residue(&fq, &gq, q, field)?;
    let mut report = Report::new("residue", &[("f", fq.to_string()), ("g", gq.to_string()), ("q", q.to_string()), ("field", field.to_string())]);
    report.constrain(format!("(f/g)_{q} over {field}"), sign(v), v == 1);
    Ok(report)
}

/// The datum of `(alpha, beta)_q` at `prime:` or `inf` over `k(y)`.
fn function_field_datum<F: ConstantField + SymbolBase>(
    field: F,
    alpha: &str,
    beta: &str,
    q: u32,
    at: &PlaceLiteral,
) -> Result<(String, PlaceEntry)> {
    let alg = SymbolAlgebra::new(parse_uni(alpha, &field)?, parse_uni(beta, &field)?, q)?;
    let place = match at {
        PlaceLiteral::Infinite => FunctionFieldPlace::Infinite,
        PlaceLiteral::Prime(text) => {
            let pi = parse_uni(text, &field)?.monic();
            let finite: Vec<_> =
                support(&[&pi])?.into_iter().filter(|p| matches!(p, FunctionFieldPlace::Finite(_))).collect();
            if finite != [FunctionFieldPlace::Finite(pi.clone())] {
                return Err(Error::Usage(format!("{pi} is not a prime of k[y]")));
            }
            FunctionFieldPlace::Finite(pi)
        }
        _ => unreachable!("rational places handled by the caller"),
    };
    Ok((alg.to_string(), ramifies(&alg, &place)?.entry()))
}

fn real_datum(alpha: &str, beta: &str, at: &PlaceLiteral) -> Result<(String, PlaceEntry)> {
    let alg = SymbolAlgebra::new(parse_uni(alpha, &Rationals)?, parse_uni(beta, &Rationals)?, 2)?;
    let place = match at {
        PlaceLiteral::Infinite => RealModelPlace::Infinite,
        PlaceLiteral::Prime(text) => {
            let pi = parse_uni(text, &Rationals)?.monic();
            match pi.degree() {
                Some(1) => real_places(&[&alg.alpha, &alg.beta, &pi])
                    .into_iter()
                    .find(|p| matches!(p, RealModelPlace::Root(_)) && valuation_real(&pi, p).is_ok_and(|v| v > 0))
                    .expect("a linear polynomial has a real root"),
                Some(2) if real_places(&[&pi]).len() == 1 => {
                    let entry = PlaceEntry { place: format!("prime:{pi}"), symbol_value: "residue field C".into(), trivial: true };
                    return Ok((alg.to_string(), entry));
                }
                _ => return Err(Error::Usage(format!("{pi} is not a prime of R[y]"))),
            }
        }
        _ => unreachable!("rational places handled by the caller"),
    };
    Ok((alg.to_string(), ramifies_real(&alg, &place)?.entry()))
}

fn symbol(config: &CommandConfig, alpha: &str, beta: &str, at: &PlaceLiteral) -> Result<Report> {
    let field = base_field(config, BaseField::Rationals);
    let q = config.q;
    let (algebra, entry) = match (field, at) {
        (BaseField::Rationals, PlaceLiteral::RationalPrime(_) | PlaceLiteral::Real) => {
            if q != 2 {
                return Err(Error::Usage("Hilbert symbols over Q are quadratic; use --q 2".into()));
            }
            let (a, b) = (parse_rational(alpha)?, parse_rational(beta)?);
            let place = match at {
                PlaceLiteral::RationalPrime(p) if is_prime(*p) => RationalPlace::prime(*p),
                PlaceLiteral::RationalPrime(p) => return Err(Error::Usage(format!("{p} is not prime"))),
                _ => RationalPlace::Real,
            };
            let v = hilbert_symbol_q(&a, &b, &place)?;
            let entry = PlaceEntry { place: place.to_string(), symbol_value: sign(v).into(), trivial: v == 1 };
            (format!("({}, {})_2 over Q", Rationals.render(&a), Rationals.render(&b)), entry)
        }
        (_, PlaceLiteral::RationalPrime(_) | PlaceLiteral::Real) => {
            return Err(Error::Usage("places p:<n> and real belong to --field q".into()));
        }
        (BaseField::Rationals, _) => function_field_datum(Rationals, alpha, beta, q, at)?,
        (BaseField::Prime(p), _) => function_field_datum(PrimeField::try_new(p)?, alpha, beta, q, at)?,
        (BaseField::Real, _) => real_datum(alpha, beta, at)?,
    };
    let mut report = Report::new("symbol", &[("alpha", alpha.into()), ("beta", beta.into()), ("field", field.to_string()), ("q", q.to_string())]);
    report.inputs.insert("algebra".into(), algebra);
    report.constrain(format!("symbol at {}", entry.place), entry.symbol_value.clone(), entry.trivial);
    report.places.push(entry);
    Ok(report)
}

fn ramify(config: &CommandConfig, alpha: &str, beta: &str) -> Result<Report> {
    let field = base_field(config, BaseField::Rationals);
    let q = config.q;
    let mut report = Report::new("ramify", &[("alpha", alpha.into()), ("beta", beta.into()), ("field", field.to_string()), ("q", q.to_string())]);
    match field {
        BaseField::Rationals => {
            let alg = SymbolAlgebra::new(parse_uni(alpha, &Rationals)?, parse_uni(beta, &Rationals)?, q)?;
            report.inputs.insert("algebra".into(), alg.to_string());
            report.places = scan_places(&alg)?.iter().map(|d| d.entry()).collect();
        }
        BaseField::Prime(p) => {
            let k = PrimeField::try_new(p)?;
            let alg = SymbolAlgebra::new(parse_uni(alpha, &k)?, parse_uni(beta, &k)?, q)?;
            report.inputs.insert("algebra".into(), alg.to_string());
            report.places = scan_places(&alg)?.iter().map(|d| d.entry()).collect();
            let weil = weil_reciprocity_check(&alg.alpha, &alg.beta)?;
            report.derive(format!("{} (= {})", weil.constraint.statement, weil.constraint.value), weil.satisfied);
        }
        BaseField::Real => {
            let alg = SymbolAlgebra::new(parse_uni(alpha, &Rationals)?, parse_uni(beta, &Rationals)?, q)?;
            report.inputs.insert("algebra".into(), format!("{alg} over R(y)"));
            report.places = scan_real_places(&alg)?.iter().map(|d| d.entry()).collect();
            let ramified = report.places.iter().filter(|p| !p.trivial).count();
            report.derive(format!("number of ramified real places is even (= {ramified})"), ramified % 2 == 0);
        }
    }
    let ramified = report.places.iter().filter(|p| !p.trivial).count();
    report.constrain("ramified places", ramified.to_string(), true);
    Ok(report)
}

fn reciprocity(config: &CommandConfig, law: &Law) -> Result<Report> {
    Ok(match law {
        Law::Qr { a, b } => Report::new("reciprocity qr", &[("a", a.clone()), ("b", b.clone())])
            .with_reciprocity(reciprocity_check_q(&parse_rational(a)?, &parse_rational(b)?)?),
        Law::Real { alpha, beta } => Report::new("reciprocity real", &[("alpha", alpha.clone()), ("beta", beta.clone())])
            .with_reciprocity(reciprocity_check_real(&parse_uni(alpha, &Rationals)?, &parse_uni(beta, &Rationals)?)?),
        Law::Weil { alpha, beta } => {
            let k = series_field(config)?;
            Report::new("reciprocity weil", &[("alpha", alpha.clone()), ("beta", beta.clone()), ("field", format!("fp:{}", k.modulus()))])
                .with_reciprocity(weil_reciprocity_check(&parse_uni(alpha, &k)?, &parse_uni(beta, &k)?)?)
        }
    })
}

fn hensel(config: &CommandConfig, g: &str) -> Result<Report> {
    let k = series_field(config)?;
    let ring = config.ring.unwrap_or(SeriesRing::YAdic);
    let n = config.order;
    let gp = parse_polynomial(g, &k)?;
    let lift = hensel_lift_auto(&gp, ring, n)?;
    let mut report = Report::new(
        "hensel",
        &[("g", gp.to_string()), ("ring", ring.to_string()), ("field", format!("fp:{}", k.modulus())), ("order", n.to_string())],
    );
    report.places = lift
        .factors
        .iter()
        .enumerate()
        .map(|(i, f)| PlaceEntry { place: format!("g_{}", i + 1), symbol_value: f.to_string(), trivial: true })
        .collect();
    let exact = lift.product() == TruncatedSeries::from_polynomial(&gp, ring, n);
    report.constrain(format!("g = {} * g_1 ... g_{}", k.render(&lift.unit), lift.factors.len()), if exact { "exact to precision" } else { "mismatch" }, exact);
    Ok(report)
}

fn certify(config: &CommandConfig, f: &str, g: &str, residue_of: ResidueOf) -> Result<Report> {
    let k = series_field(config)?;
    let ring = config.ring.unwrap_or(SeriesRing::Local);
    let (n, q) = (config.order, config.q);
    let (fp, gp) = (parse_polynomial(f, &k)?, parse_polynomial(g, &k)?);
    let orientation = match residue_of {
        ResidueOf::F => Orientation::ResidueOfF,
        ResidueOf::G => Orientation::ResidueOfG,
    };
    let (a, b) = match orientation {
        Orientation::ResidueOfF => (&fp, &gp),
        Orientation::ResidueOfG => (&gp, &fp),
    };
    let analysis = qth_power_in_germ(a, b, ring, q, n)?;
    let mut report = Report::new(
        "certify",
        &[
            ("f", fp.to_string()),
            ("g", gp.to_string()),
            ("q", q.to_string()),
            ("ring", ring.to_string()),
            ("field", format!("fp:{}", k.modulus())),
            ("order", n.to_string()),
            ("orientation", orientation.to_string()),
        ],
    );
    report.places = germ_places(&analysis);
    match analysis.verdict {
        PowerVerdict::PowerInLocalRing => {
            let cert = residue_certificate(&fp, &gp, ring, q, n, orientation)?;
            let ok = verify_certificate(&cert);
            report.constrain(orientation.to_string(), analysis.verdict.to_string(), ok);
            report.derive(cert.to_string(), ok);
        }
        verdict => {
            let witness = analysis.witness.clone().unwrap_or_default();
            report.constrain(orientation.to_string(), format!("{verdict}; certificate refused: {witness}"), false);
            if verdict == PowerVerdict::PowerOnlyInNormalization && ring == SeriesRing::Local {
                if let Ok(laurent) = normalization_certificate(&fp, &gp, q, n, orientation) {
                    report.derive(format!("in the normalization: {laurent}"), verify_certificate(&laurent));
                }
            }
        }
    }
    Ok(report)
}

fn run_examples(config: &CommandConfig, selector: &str) -> Result<Report> {
    let ids: Vec<&str> = if selector == "all" { EXAMPLE_IDS.to_vec() } else { vec![selector] };
    let settings = ExampleSettings { precision: config.order, seed: config.seed };
    let mut report = Report::new(
        format!("examples run {selector}"),
        &[("selector", selector.into()), ("order", config.order.to_string()), ("seed", config.seed.to_string())],
    );
    let mut passed = 0;
    for id in &ids {
        let run = run_example(id, settings)?;
        passed += usize::from(run.passed());
        report.derive(format!("{id}: {} -> {}", run.summary, if run.passed() { "reproduced" } else { "NOT reproduced" }), run.passed());
        for c in &run.checks {
            report.derive(format!("{id}:   {}", c.statement), c.holds);
        }
        report.places.extend(run.places.into_iter().map(|p| PlaceEntry { place: format!("{id}: {}", p.place), ..p }));
    }
    report.constrain("reproductions matching the stated verdicts", format!("{passed}/{}", ids.len()), passed == ids.len());
    Ok(report)
}
