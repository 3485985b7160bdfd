//! Command logic behind the `biskit` binary. Every command returns its
//! output and exit code instead of printing, so it can be driven from tests.

use std::path::{Path, PathBuf};
use std::time::Instant;

use biskit::booleanization::{booleanization_iso, booleanize};
use biskit::corpus;
use biskit::iso::{semigroup_iso, DEFAULT_SIZE_CAP};
use biskit::rook::decompose;
use biskit::typemon::{
    ideal_triple, mu_type_invariance, refinement_check, type_monoid, type_via_matrices, valuation_failure,
};
use biskit::verify::{groupoid_laws, verify_semigroup, LawResult, Outcome};
use biskit::{check_boolean, BooleanFailure, BooleanSemigroup, Error, Groupoid, InvSemigroup};
use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

pub const SIZE_CAP_VAR: &str = "BISKIT_SIZE_CAP";

#[derive(Parser, Debug)]
#[command(name = "biskit", version, about = "Finite inverse and Boolean inverse semigroups")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Include wall-clock timings in reports.
    #[arg(long, global = true)]
    pub timings: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum IsoMode {
    Booleanization,
    Direct,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Validate a table and report its structure.
    Analyze { path: PathBuf },
    /// Build the Booleanization and the map from the input into it.
    Booleanize {
        path: PathBuf,
        /// Write the table here and the map to `<out>.beta`.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Split a Boolean inverse monoid into rook matrix factors.
    Decompose { path: PathBuf },
    /// Type monoid of a Boolean inverse monoid.
    Type { path: PathBuf },
    /// Decide whether two tables are isomorphic.
    Iso {
        a: PathBuf,
        b: PathBuf,
        #[arg(long, value_enum, default_value_t = IsoMode::Booleanization)]
        mode: IsoMode,
    },
    /// Run the invariant suite.
    Verify {
        paths: Vec<PathBuf>,
        /// Run over every bundled example.
        #[arg(long)]
        corpus: bool,
    },
}

/// What a command produced.
#[derive(Debug, Default, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output {
            stdout,
            ..Output::default()
        }
    }

    fn fail(code: i32, stderr: String) -> Self {
        Output {
            stderr,
            code,
            ..Output::default()
        }
    }
}

enum Failure {
    Usage(String),
    Invalid(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Invalid(e)
    }
}

impl Failure {
    fn into_output(self) -> Output {
        match self {
            Failure::Usage(msg) => Output::fail(2, format!("error: {msg}\n")),
            Failure::Invalid(e) => Output::fail(1, format!("error: {}: {e}\n", e.name())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignatureEntry {
    pub n: usize,
    pub group: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TauEntry {
    pub idempotent: usize,
    pub vector: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timing {
    pub stage: String,
    pub micros: u128,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub valid: bool,
    pub size: usize,
    pub zero: Option<usize>,
    pub identity: Option<usize>,
    pub idempotent_count: usize,
    pub atom_count: Option<usize>,
    pub boolean: bool,
    pub boolean_failure: Option<String>,
    pub boolean_witness: Option<Vec<usize>>,
    pub fundamental: bool,
    pub fundamental_witness: Option<usize>,
    pub zero_simplifying: Option<bool>,
    pub simple: Option<bool>,
    pub signature: Option<Vec<SignatureEntry>>,
    pub type_rank: Option<usize>,
    pub tau: Option<Vec<TauEntry>>,
    pub timings: Option<Vec<Timing>>,
}

fn failure_witness(f: &BooleanFailure) -> Vec<usize> {
    match *f {
        BooleanFailure::NoZero => Vec::new(),
        BooleanFailure::MissingJoin(a, b) => vec![a, b],
        BooleanFailure::NotLeftDistributive { c, a, b } | BooleanFailure::NotRightDistributive { c, a, b } => {
            vec![c, a, b]
        }
        BooleanFailure::NoComplement { e, f } => vec![e, f],
    }
}

struct Clock {
    on: bool,
    last: Instant,
    stages: Vec<Timing>,
}

impl Clock {
    fn new(on: bool) -> Self {
        Clock {
            on,
            last: Instant::now(),
            stages: Vec::new(),
        }
    }

    fn lap(&mut self, stage: &str) {
        let now = Instant::now();
        self.stages.push(Timing {
            stage: stage.to_string(),
            micros: (now - self.last).as_micros(),
        });
        self.last = now;
    }

    fn finish(self) -> Option<Vec<Timing>> {
        self.on.then_some(self.stages)
    }
}

pub fn analyze(s: &InvSemigroup, timings: bool) -> Result<Report, Error> {
    let mut clock = Clock::new(timings);
    let check = check_boolean(s);
    clock.lap("check_boolean");
    let fundamental = s.is_fundamental();
    clock.lap("fundamental");
    let mut report = Report {
        valid: true,
        size: s.size(),
        zero: s.zero(),
        identity: s.identity(),
        idempotent_count: s.idempotents().len(),
        atom_count: s.atoms().ok().map(|a| a.len()),
        boolean: check.boolean,
        boolean_failure: check.failure.as_ref().map(|f| f.to_string()),
        boolean_witness: check.failure.as_ref().map(failure_witness),
        fundamental: fundamental.fundamental,
        fundamental_witness: fundamental.witness,
        zero_simplifying: None,
        simple: None,
        signature: None,
        type_rank: None,
        tau: None,
        timings: None,
    };
    if check.boolean {
        let bs = BooleanSemigroup::new(s.clone())?;
        clock.lap("tabulate");
        let zs = bs.is_zero_simplifying().holds;
        report.zero_simplifying = Some(zs);
        report.simple = Some(zs && fundamental.fundamental);
        clock.lap("ideals");
        let d = decompose(&bs)?;
        report.signature = Some(
            d.signature_names()
                .into_iter()
                .map(|(n, group)| SignatureEntry { n, group })
                .collect(),
        );
        clock.lap("decompose");
        let tm = type_monoid(&bs)?;
        report.type_rank = Some(tm.rank);
        report.tau = Some(tau_entries(&tm));
        clock.lap("type_monoid");
    }
    report.timings = clock.finish();
    Ok(report)
}

fn tau_entries(tm: &biskit::typemon::TypeMonoid) -> Vec<TauEntry> {
    tm.idempotents
        .iter()
        .zip(&tm.tau)
        .map(|(&idempotent, v)| TauEntry {
            idempotent,
            vector: v.clone(),
        })
        .collect()
}

fn opt<T: ToString>(x: &Option<T>) -> String {
    x.as_ref().map_or_else(|| "-".to_string(), T::to_string)
}

fn signature_text(sig: &[SignatureEntry]) -> String {
    let parts: Vec<String> = sig.iter().map(|e| format!("({}, {})", e.n, e.group)).collect();
    format!("{{{}}}", parts.join(", "))
}

fn report_text(r: &Report) -> String {
    let mut t = String::new();
    t += &format!("size              {}\n", r.size);
    t += &format!("zero              {}\n", opt(&r.zero));
    t += &format!("identity          {}\n", opt(&r.identity));
    t += &format!("idempotents       {}\n", r.idempotent_count);
    t += &format!("atoms             {}\n", opt(&r.atom_count));
    t += &format!("boolean           {}\n", r.boolean);
    if let (Some(f), Some(w)) = (&r.boolean_failure, &r.boolean_witness) {
        t += &format!("  failure         {f}\n  witness         {w:?}\n");
    }
    t += &format!("fundamental       {}\n", r.fundamental);
    if let Some(w) = r.fundamental_witness {
        t += &format!("  witness         {w}\n");
    }
    t += &format!("0-simplifying     {}\n", opt(&r.zero_simplifying));
    t += &format!("simple            {}\n", opt(&r.simple));
    if let Some(sig) = &r.signature {
        t += &format!("signature         {}\n", signature_text(sig));
    }
    if let (Some(rank), Some(tau)) = (r.type_rank, &r.tau) {
        t += &format!("type rank         {rank}\n");
        for e in tau {
            t += &format!("  tau({})  {:?}\n", e.idempotent, e.vector);
        }
    }
    if let Some(ts) = &r.timings {
        for s in ts {
            t += &format!("time {:<14} {} us\n", s.stage, s.micros);
        }
    }
    t
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

fn load(path: &Path) -> Result<InvSemigroup, Failure> {
    Ok(InvSemigroup::parse(&read(path)?)?)
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize") + "\n"
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BooleanizeReport {
    pub size: usize,
    pub zero_adjoined: bool,
    /// `beta[a]` is the id of `a` in the Booleanization.
    pub beta: Vec<usize>,
    pub table: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecomposeReport {
    pub size: usize,
    pub signature: Vec<SignatureEntry>,
    /// `iso[a]` is the id of `a` in the product of factors.
    pub iso: Vec<usize>,
    pub verified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeReport {
    pub rank: usize,
    pub components: Vec<Vec<usize>>,
    pub tau: Vec<TauEntry>,
    pub valuation: bool,
    pub refinement: bool,
    pub conical: bool,
    pub ideal_lattices_isomorphic: bool,
    pub zero_simplifying: bool,
    pub mu_invariant: bool,
    pub matrix_oracle: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoReport {
    pub mode: String,
    pub isomorphic: bool,
    pub certificate: Option<Vec<usize>>,
    pub groupoid_map: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawLine {
    pub law: String,
    pub status: String,
    pub checked: Option<usize>,
    pub witness: Option<Vec<usize>>,
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub input: String,
    /// Set when the input was rejected before any law ran.
    pub error: Option<String>,
    pub laws: Vec<LawLine>,
}

impl From<&LawResult> for LawLine {
    fn from(r: &LawResult) -> Self {
        let (status, checked, witness, detail) = match &r.outcome {
            Outcome::Pass { checked } => ("pass", Some(*checked), None, None),
            Outcome::Fail { witness, detail } => ("fail", None, Some(witness.clone()), Some(detail.clone())),
            Outcome::Skipped(why) => ("skip", None, None, Some(why.clone())),
        };
        LawLine {
            law: r.name.to_string(),
            status: status.to_string(),
            checked,
            witness,
            detail,
        }
    }
}

fn size_cap() -> Result<usize, Failure> {
    match std::env::var(SIZE_CAP_VAR) {
        Err(_) => Ok(DEFAULT_SIZE_CAP),
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("{SIZE_CAP_VAR} must be a non-negative integer, got {v:?}"))),
    }
}

pub fn run(cli: &Cli) -> Output {
    let result = match &cli.command {
        Command::Analyze { path } => cmd_analyze(path, cli.format, cli.timings),
        Command::Booleanize { path, out } => cmd_booleanize(path, out.as_deref(), cli.format),
        Command::Decompose { path } => cmd_decompose(path, cli.format),
        Command::Type { path } => cmd_type(path, cli.format),
        Command::Iso { a, b, mode } => cmd_iso(a, b, *mode, cli.format),
        Command::Verify { paths, corpus } => return cmd_verify(paths, *corpus, cli.format),
    };
    result.unwrap_or_else(Failure::into_output)
}

fn cmd_analyze(path: &Path, format: Format, timings: bool) -> Result<Output, Failure> {
    let report = analyze(&load(path)?, timings)?;
    Ok(Output::ok(match format {
        Format::Text => report_text(&report),
        Format::Json => json(&report),
    }))
}

fn cmd_booleanize(path: &Path, out: Option<&Path>, format: Format) -> Result<Output, Failure> {
    let s = load(path)?;
    let b = booleanize(&s)?;
    let bs = b.semigroup();
    let mut beta_block = String::from("beta:\n");
    for (a, &x) in b.beta.iter().enumerate() {
        beta_block += &format!("{a} {x}\n");
    }
    let commented: String = beta_block.lines().map(|l| format!("# {l}\n")).collect();
    let table_text = format!("{}{commented}", bs.to_ist());
    let report = BooleanizeReport {
        size: bs.size(),
        zero_adjoined: b.zero_adjoined,
        beta: b.beta.clone(),
        table: bs.elements().map(|a| bs.elements().map(|c| bs.mul(a, c)).collect()).collect(),
    };
    if let Some(out) = out {
        let mut beta_path = out.as_os_str().to_owned();
        beta_path.push(".beta");
        std::fs::write(out, &table_text)
            .and_then(|_| std::fs::write(&beta_path, &beta_block))
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", out.display())))?;
    }
    Ok(Output::ok(match (format, out) {
        (Format::Json, _) => json(&report),
        (Format::Text, None) => table_text,
        (Format::Text, Some(out)) => format!(
            "wrote {} ({} elements) and {}.beta\n",
            out.display(),
            bs.size(),
            out.display()
        ),
    }))
}

fn cmd_decompose(path: &Path, format: Format) -> Result<Output, Failure> {
    let bs = BooleanSemigroup::new(load(path)?)?;
    let d = decompose(&bs)?;
    let report = DecomposeReport {
        size: bs.size(),
        signature: d
            .signature_names()
            .into_iter()
            .map(|(n, group)| SignatureEntry { n, group })
            .collect(),
        iso: d.iso.clone(),
        verified: d.verified,
    };
    Ok(Output::ok(match format {
        Format::Json => json(&report),
        Format::Text => format!(
            "signature {}\nsize      {}\nverified  {}\niso       {:?}\n",
            signature_text(&report.signature),
            report.size,
            report.verified,
            report.iso
        ),
    }))
}

fn cmd_type(path: &Path, format: Format) -> Result<Output, Failure> {
    let bs = BooleanSemigroup::new(load(path)?)?;
    let tm = type_monoid(&bs)?;
    let refinement = refinement_check(&tm);
    let triple = ideal_triple(&bs, &tm);
    let oracle = match type_via_matrices(&bs, &tm, 2) {
        Ok(o) => Some(o.holds()),
        Err(Error::TooLarge { .. }) => None,
        Err(e) => return Err(e.into()),
    };
    let report = TypeReport {
        rank: tm.rank,
        components: tm.components.clone(),
        tau: tau_entries(&tm),
        valuation: valuation_failure(&bs, &tm).is_none(),
        refinement: refinement.refinement,
        conical: refinement.conical,
        ideal_lattices_isomorphic: triple.order_isomorphic,
        zero_simplifying: triple.zero_simplifying,
        mu_invariant: mu_type_invariance(&bs)?,
        matrix_oracle: oracle,
    };
    Ok(Output::ok(match format {
        Format::Json => json(&report),
        Format::Text => {
            let mut t = format!("rank {}\n", report.rank);
            for e in &report.tau {
                t += &format!("tau({}) = {:?}\n", e.idempotent, e.vector);
            }
            t += &format!(
                "valuation {}\nrefinement {}\nconical {}\nideal lattices isomorphic {}\n0-simplifying {}\nmu invariant {}\nmatrix oracle (N=2) {}\n",
                report.valuation,
                report.refinement,
                report.conical,
                report.ideal_lattices_isomorphic,
                report.zero_simplifying,
                report.mu_invariant,
                opt(&report.matrix_oracle)
            );
            t
        }
    }))
}

fn cmd_iso(a: &Path, b: &Path, mode: IsoMode, format: Format) -> Result<Output, Failure> {
    let (s, t) = (load(a)?, load(b)?);
    let report = match mode {
        IsoMode::Direct => {
            let map = semigroup_iso(&s, &t, size_cap()?)?;
            IsoReport {
                mode: "direct".into(),
                isomorphic: map.is_some(),
                certificate: map,
                groupoid_map: None,
            }
        }
        IsoMode::Booleanization => {
            let r = booleanization_iso(&s, &t)?;
            IsoReport {
                mode: "booleanization".into(),
                isomorphic: r.isomorphic,
                certificate: r.certificate,
                groupoid_map: r.groupoid_map,
            }
        }
    };
    Ok(Output::ok(match format {
        Format::Json => json(&report),
        Format::Text => {
            let mut t = format!("{}\n", report.isomorphic);
            if let Some(g) = &report.groupoid_map {
                t += &format!("groupoid map {g:?}\n");
            }
            if let Some(c) = &report.certificate {
                t += &format!("certificate  {c:?}\n");
            }
            t
        }
    }))
}

fn verify_one(name: String, text: &str, groupoid: bool) -> VerifyReport {
    let results = if groupoid {
        Groupoid::parse(text).map(|g| groupoid_laws(&g))
    } else {
        InvSemigroup::parse(text).map(|s| verify_semigroup(&s))
    };
    match results {
        Ok(laws) => VerifyReport {
            input: name,
            error: None,
            laws: laws.iter().map(LawLine::from).collect(),
        },
        Err(e) => VerifyReport {
            input: name,
            error: Some(format!("{}: {e}", e.name())),
            laws: Vec::new(),
        },
    }
}

fn cmd_verify(paths: &[PathBuf], use_corpus: bool, format: Format) -> Output {
    if paths.is_empty() && !use_corpus {
        return Failure::Usage("give input paths or --corpus".into()).into_output();
    }
    let mut reports = Vec::new();
    if use_corpus {
        for e in corpus::ENTRIES {
            reports.push(verify_one(e.file_name(), e.text, e.kind == corpus::Kind::Groupoid));
        }
    }
    for p in paths {
        let text = match read(p) {
            Ok(t) => t,
            Err(f) => return f.into_output(),
        };
        let groupoid = p.extension().is_some_and(|x| x == "grp");
        reports.push(verify_one(p.display().to_string(), &text, groupoid));
    }

    let mut first_failure = None;
    let (mut pass, mut fail, mut skip) = (0, 0, 0);
    let mut text = String::new();
    for r in &reports {
        text += &format!("== {}\n", r.input);
        if let Some(e) = &r.error {
            text += &format!("FAIL  input: {e}\n");
            fail += 1;
            first_failure.get_or_insert_with(|| format!("{}: {e}", r.input));
        }
        for l in &r.laws {
            match l.status.as_str() {
                "pass" => {
                    pass += 1;
                    text += &format!("pass  {} ({} cases)\n", l.law, l.checked.unwrap_or(0));
                }
                "skip" => {
                    skip += 1;
                    text += &format!("skip  {} ({})\n", l.law, l.detail.as_deref().unwrap_or(""));
                }
                _ => {
                    fail += 1;
                    let w = l.witness.clone().unwrap_or_default();
                    let d = l.detail.as_deref().unwrap_or("");
                    text += &format!("FAIL  {} at {w:?}: {d}\n", l.law);
                    first_failure.get_or_insert_with(|| format!("{}: {} at {w:?}: {d}", r.input, l.law));
                }
            }
        }
    }
    text += &format!("{pass} passed, {fail} failed, {skip} skipped\n");
    let stdout = match format {
        Format::Text => text,
        Format::Json => json(&reports),
    };
    match first_failure {
        None => Output::ok(stdout),
        Some(f) => Output {
            stdout,
            stderr: format!("error: first failure in {f}\n"),
            code: 1,
        },
    }
}
