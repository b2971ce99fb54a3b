//! Command-line front end for `cy4quot`.
//!
//! Every command builds a [`Report`] which is then rendered as json, csv,
//! markdown or a LaTeX tabular body. Exit codes: 0 success, 1 usage error,
//! 2 domain error, 3 verification failure.

pub mod render;
pub mod verify;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cy4quot::appendix::{AppendixRow, APPENDIX};
use cy4quot::mirror::{self, MirrorMode};
use cy4quot::quotient::{self, CrossCheck};
use cy4quot::riemann_roch::{self as rr, FamilyFixture};
use cy4quot::singularity::{self, LocalSpectrum};
use cy4quot::{CalabiYau4Diamond, FixedLocusHodge, InvariantCohomology, Rational};
use render::{compact_cells, diamond_json, rat_json, rat_text, OutputFormat, Report, Table, COMPACT_HEADERS};
use serde_json::{json, Value};

#[derive(Debug, Parser)]
#[command(
    name = "cy4quot",
    version,
    about = "Hodge numbers, singularities and Riemann-Roch data of Calabi-Yau 4-fold quotients"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value = "json")]
    pub format: OutputFormat,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Hodge numbers of Y_S for all 65 admissible (N, N').
    Appendix,
    /// Hodge diamond of one construction.
    Diamond(DiamondArgs),
    /// Run every cross-check and report known tensions.
    Verify,
    /// Age, local-form validation and Reid-Tai class of a spectrum.
    Singularity(SingularityArgs),
    /// Deformation and Kahler dimensions for (N, N').
    Deform(NnArgs),
    /// Hodge-level mirror checks.
    #[command(subcommand)]
    Mirror(MirrorCommand),
    /// Euler characteristics and h^0 formulas.
    #[command(subcommand)]
    Chi(ChiCommand),
    /// The three worked K3 families with transcribed and recomputed values.
    Fixtures {
        #[arg(value_enum)]
        family: Option<Family>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DiamondKind {
    Ys,
    Zs,
    K3type,
    General,
    Kummer,
    Epw,
}

#[derive(Debug, Args)]
pub struct DiamondArgs {
    #[arg(value_enum)]
    pub kind: DiamondKind,
    #[arg(long)]
    pub n: Option<i64>,
    #[arg(long)]
    pub nprime: Option<i64>,
    /// Invariant cohomology t11,t21,t31,t22.
    #[arg(long, value_delimiter = ',')]
    pub t: Option<Vec<u32>>,
    /// Fixed-locus sums b,c,d,e.
    #[arg(long, value_delimiter = ',')]
    pub f: Option<Vec<u32>>,
    #[arg(long)]
    pub t11: Option<u32>,
    #[arg(long)]
    pub c: Option<u32>,
    #[arg(long)]
    pub d: Option<u32>,
}

#[derive(Debug, Args)]
pub struct SingularityArgs {
    #[arg(long)]
    pub p: u32,
    /// Eigenvalue exponents, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    pub exp: Vec<u32>,
    /// Half the ambient dimension; enables local-form validation with --symplectic.
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, action = clap::ArgAction::Set)]
    pub symplectic: Option<bool>,
}

#[derive(Debug, Args)]
pub struct NnArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub n: i64,
    #[arg(long, allow_hyphen_values = true)]
    pub nprime: i64,
}

#[derive(Debug, Subcommand)]
pub enum MirrorCommand {
    /// Scan all pairs of Y_S diamonds for mirrors.
    ScanYs,
    /// Compare the Ohashi-Wandel quotient with Y_S(10, 2).
    Ow,
    /// Z_S(N, N') against Z_S(N', N) on every admissible pair.
    ZsIdentity,
    /// Compare two diamonds given as h11,h21,h31,h22.
    Check {
        #[arg(long, value_delimiter = ',')]
        a: Vec<u32>,
        #[arg(long, value_delimiter = ',')]
        b: Vec<u32>,
        /// Ignore h21.
        #[arg(long)]
        relaxed: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum ChiCommand {
    /// chi(D)/2 + sigma^2/16 - chi(O_V)/2 + chi(O_X).
    Lift {
        #[arg(long, allow_hyphen_values = true)]
        chid: Rational,
        #[arg(long, allow_hyphen_values = true)]
        sq: i64,
        #[arg(long, allow_hyphen_values = true)]
        cov: i64,
        #[arg(long, allow_hyphen_values = true)]
        cox: i64,
    },
    /// D^4/24 + D^2 c2/24 + chi(O).
    C1Zero {
        #[arg(long, allow_hyphen_values = true)]
        d4: i64,
        #[arg(long, allow_hyphen_values = true)]
        d2c2: i64,
        #[arg(long, allow_hyphen_values = true)]
        chio: i64,
    },
    /// (q + 4)(q + 6)/8.
    K3type {
        #[arg(long, allow_hyphen_values = true)]
        q: i64,
    },
    /// D^2/2 + 2 on a K3 surface.
    K3Surface {
        #[arg(long, allow_hyphen_values = true)]
        d2: i64,
    },
    /// chi1 * chi2 on a product.
    Box {
        #[arg(long, allow_hyphen_values = true)]
        chi1: i64,
        #[arg(long, allow_hyphen_values = true)]
        chi2: i64,
    },
    /// h^0 on S^[2] for BBF square hh.
    Hilb2 {
        #[arg(long, allow_hyphen_values = true)]
        hh: i64,
    },
    /// h^0 on Z_S.
    Z {
        #[arg(long, allow_hyphen_values = true)]
        h0: i64,
        #[arg(long, allow_hyphen_values = true)]
        hsigma: i64,
    },
    /// h^0 on Y_S.
    Y {
        #[arg(long, allow_hyphen_values = true)]
        h0: i64,
        #[arg(long, allow_hyphen_values = true)]
        hsigma: i64,
        #[arg(long, allow_hyphen_values = true)]
        hsigmaz: i64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Deg2,
    U2,
    U,
}

impl Family {
    fn name(self) -> &'static str {
        match self {
            Self::Deg2 => "deg2",
            Self::U2 => "U2",
            Self::U => "U",
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Domain(#[from] cy4quot::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            Self::Usage(_) => 1,
            Self::Domain(_) => 2,
        }
    }
}

/// Rendered output and the exit code it should produce.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: u8,
}

/// Parses arguments and runs the command. Help and version requests exit 0,
/// other parse failures exit 1.
pub fn main_with_args<I, T>(args: I) -> (Outcome, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => match run(&cli) {
            Ok(outcome) => (outcome, String::new()),
            Err(e) => (Outcome { stdout: String::new(), code: e.exit_code() }, format!("error: {e}\n")),
        },
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                (Outcome { stdout: text, code }, String::new())
            } else {
                (Outcome { stdout: String::new(), code }, text)
            }
        }
    }
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let ok = |report: Report| Outcome { stdout: report.render(cli.format), code: 0 };
    match &cli.command {
        Command::Appendix => Ok(ok(appendix_report(&APPENDIX))),
        Command::Diamond(args) => diamond(args).map(ok),
        Command::Verify => {
            let report = verify::verify();
            let code = if report.passed() { 0 } else { 3 };
            Ok(Outcome { stdout: report.report().render(cli.format), code })
        }
        Command::Singularity(args) => singularity_report(args).map(ok),
        Command::Deform(args) => deform(args.n, args.nprime).map(ok),
        Command::Mirror(cmd) => mirror_report(cmd).map(ok),
        Command::Chi(cmd) => chi(cmd).map(ok),
        Command::Fixtures { family } => Ok(ok(fixtures(*family))),
    }
}

pub const APPENDIX_HEADERS: [&str; 6] = ["N", "Nprime", "h11", "h21", "h31", "h22"];

pub fn appendix_report(rows: &[AppendixRow]) -> Report {
    let mut table =
        Table::new(APPENDIX_HEADERS).with_tex_headers(["N", "N'", "h^{1,1}", "h^{2,1}", "h^{3,1}", "h^{2,2}"]);
    for r in rows {
        table.push([r.n, r.nprime, r.h11, r.h21, r.h31, r.h22]);
    }
    let json = serde_json::to_value(rows).expect("rows serialize");
    Report::new(json, vec![table])
}

/// Reads back the csv produced by `appendix --format csv`.
pub fn parse_appendix_csv(text: &str) -> Result<Vec<AppendixRow>, csv::Error> {
    csv::Reader::from_reader(text.as_bytes()).deserialize().collect()
}

fn require<T: Copy>(value: Option<T>, flag: &str) -> Result<T, CliError> {
    value.ok_or_else(|| CliError::Usage(format!("missing --{flag}")))
}

fn quad(values: &Option<Vec<u32>>, flag: &str) -> Result<[u32; 4], CliError> {
    let v = values.as_ref().ok_or_else(|| CliError::Usage(format!("missing --{flag}")))?;
    four(v, flag)
}

fn four(v: &[u32], flag: &str) -> Result<[u32; 4], CliError> {
    <[u32; 4]>::try_from(v).map_err(|_| CliError::Usage(format!("--{flag} takes four comma-separated values")))
}

fn single_diamond(kind: &str, d: CalabiYau4Diamond, extra: Value) -> Report {
    let mut table = Table::new(COMPACT_HEADERS).titled(kind);
    table.push(compact_cells(&d));
    let mut json = json!({ "kind": kind, "compact": d.compact(), "diamond": diamond_json(&d) });
    if let (Value::Object(map), Value::Object(more)) = (&mut json, extra) {
        map.extend(more);
    }
    Report::new(json, vec![table]).with_preamble(d.diamond().to_string())
}

fn cross_check_json(c: &CrossCheck) -> Value {
    json!({
        "name": c.name,
        "printed": diamond_json(&c.printed),
        "recomputed": diamond_json(&c.recomputed),
        "match": c.matches,
    })
}

fn diamond(args: &DiamondArgs) -> Result<Report, CliError> {
    let nn = || -> Result<(i64, i64), CliError> { Ok((require(args.n, "n")?, require(args.nprime, "nprime")?)) };
    Ok(match args.kind {
        DiamondKind::Ys => {
            let (n, np) = nn()?;
            single_diamond("ys", quotient::ys_diamond(n, np)?, json!({ "N": n, "Nprime": np }))
        }
        DiamondKind::Zs => {
            let (n, np) = nn()?;
            single_diamond("zs", quotient::zs_diamond(n, np)?, json!({ "N": n, "Nprime": np }))
        }
        DiamondKind::K3type => {
            let (t11, c, d) = (require(args.t11, "t11")?, require(args.c, "c")?, require(args.d, "d")?);
            let (b, e) = quotient::beauville_be(t11, c, d)?;
            let extra = json!({ "t11": t11, "c": c, "d": d, "b": b, "e": e });
            single_diamond("k3type", quotient::cy_k3type(t11, c, d)?, extra)
        }
        DiamondKind::General => {
            let [t11, t21, t31, t22] = quad(&args.t, "t")?;
            let [b, c, d, e] = quad(&args.f, "f")?;
            let diamond =
                quotient::cy_general(InvariantCohomology::new(t11, t21, t31, t22), FixedLocusHodge::new(b, c, d, e));
            single_diamond("general", diamond, json!({}))
        }
        DiamondKind::Epw => single_diamond("epw", quotient::epw_diamond(), json!({})),
        DiamondKind::Kummer => {
            let checks = quotient::kummer_diamonds();
            let headers = ["name", "printed", "recomputed", "match"];
            let mut table = Table::new(headers).titled("kummer");
            for c in &checks {
                table.push([
                    c.name.to_string(),
                    c.printed.to_string(),
                    c.recomputed.to_string(),
                    c.matches.to_string(),
                ]);
            }
            let json = json!({ "kind": "kummer", "diamonds": checks.iter().map(cross_check_json).collect::<Vec<_>>() });
            Report::new(json, vec![table])
        }
    })
}

fn singularity_report(args: &SingularityArgs) -> Result<Report, CliError> {
    let s = LocalSpectrum::new(args.p, args.exp.clone())?;
    let age = singularity::age(&s);
    let class = singularity::classify(&s)?;
    let mut json = json!({
        "p": s.p(),
        "exponents": s.exponents(),
        "age": rat_json(&age),
        "class": class.to_string(),
    });
    let mut table = Table::new(["property", "value"]).titled("singularity");
    table.push(["age".to_string(), rat_text(&age)]);
    table.push(["class".to_string(), class.to_string()]);
    match (args.n, args.symplectic) {
        (Some(n), Some(symplectic)) => {
            let v = singularity::validate_spectrum(&s, n, symplectic)?;
            let violations: Vec<String> = v.violations.iter().map(ToString::to_string).collect();
            table.push(["local form".to_string(), if v.is_valid() { "valid".into() } else { violations.join("; ") }]);
            json["validation"] =
                json!({ "n": n, "symplectic": symplectic, "valid": v.is_valid(), "violations": violations });
        }
        (None, None) => {}
        _ => return Err(CliError::Usage("--n and --symplectic go together".into())),
    }
    Ok(Report::new(json, vec![table]))
}

fn deform(n: i64, nprime: i64) -> Result<Report, CliError> {
    let def = mirror::deform_dims(n, nprime)?;
    let kah = mirror::kahler_dims(n, nprime)?;
    let rel = mirror::deform_relations(n, nprime)?;
    let mut d = Table::new(["variety", "complex deformations"]).titled("complex deformations");
    for (label, v) in def.rows() {
        d.push([label.to_string(), v.to_string()]);
    }
    let mut k = Table::new(["variety", "Kahler deformations"]).titled("Kahler deformations");
    for (label, v) in kah.rows() {
        k.push([label.to_string(), v.to_string()]);
    }
    let mut r = Table::new(["relation", "holds", "equality", "condition"]).titled("relations");
    for x in &rel {
        r.push([x.statement.to_string(), x.holds.to_string(), x.equality.to_string(), x.condition.to_string()]);
    }
    let map =
        |rows: &[(&str, u32)]| rows.iter().map(|(l, v)| (l.to_string(), json!(v))).collect::<serde_json::Map<_, _>>();
    let json = json!({
        "N": n,
        "Nprime": nprime,
        "deform": map(&def.rows()),
        "kahler": map(&kah.rows()),
        "relations": rel,
    });
    Ok(Report::new(json, vec![d, k, r]))
}

fn mirror_report(cmd: &MirrorCommand) -> Result<Report, CliError> {
    Ok(match cmd {
        MirrorCommand::ScanYs => {
            let pairs = mirror::mirror_scan_ys();
            let mut t = Table::new(["N", "Nprime", "mirror N", "mirror Nprime"]).titled("Y_S mirror pairs");
            for (a, b) in &pairs {
                t.push([a.0, a.1, b.0, b.1]);
            }
            let json = json!(pairs.iter().map(|(a, b)| json!([[a.0, a.1], [b.0, b.1]])).collect::<Vec<_>>());
            Report::new(json, vec![t])
        }
        MirrorCommand::Ow => {
            let r = mirror::ow_counterexample();
            let mut t = Table::new(["quantity", "value"]).titled("Ohashi-Wandel");
            t.push(["h11 (OW quotient)".to_string(), r.ow_h11.to_string()]);
            t.push(["h31 (Y_S(10,2))".to_string(), r.ys_h31.to_string()]);
            t.push(["mirror possible".to_string(), r.mirror_possible.to_string()]);
            Report::new(serde_json::to_value(r).expect("report serializes"), vec![t])
        }
        MirrorCommand::ZsIdentity => {
            let checks = mirror::zs_mirror_identity();
            let mut t = Table::new(["N", "Nprime", "mirror"]).titled("Z_S mirror identity");
            for c in &checks {
                t.push([c.pair.0.to_string(), c.pair.1.to_string(), c.mirror.to_string()]);
            }
            Report::new(serde_json::to_value(&checks).expect("checks serialize"), vec![t])
        }
        MirrorCommand::Check { a, b, relaxed } => {
            let to_d = |[h11, h21, h31, h22]: [u32; 4]| CalabiYau4Diamond::new(h11, h21, h31, h22);
            let mode = if *relaxed { MirrorMode::Relaxed } else { MirrorMode::Strict };
            let verdict = mirror::is_mirror_with(&to_d(four(a, "a")?), &to_d(four(b, "b")?), mode);
            let mut t = Table::new(["mirror"]);
            t.push([verdict]);
            Report::new(json!({ "mirror": verdict, "relaxed": relaxed }), vec![t])
        }
    })
}

fn value_report(name: &str, value: Rational) -> Report {
    let mut t = Table::new(["quantity", "value"]);
    t.push([name.to_string(), rat_text(&value)]);
    Report::new(json!({ "quantity": name, "value": rat_json(&value) }), vec![t])
}

fn chi(cmd: &ChiCommand) -> Result<Report, CliError> {
    let int = Rational::from_integer;
    Ok(match *cmd {
        ChiCommand::Lift { chid, sq, cov, cox } => value_report("chi_lift", rr::chi_lift(chid, sq, cov, cox)),
        ChiCommand::C1Zero { d4, d2c2, chio } => value_report("chi_c1_zero", rr::chi_c1_zero(d4, d2c2, chio)),
        ChiCommand::K3type { q } => value_report("chi_k3type", rr::chi_k3type(q)),
        ChiCommand::K3Surface { d2 } => value_report("chi_k3_surface", int(rr::chi_k3_surface(d2)?)),
        ChiCommand::Box { chi1, chi2 } => value_report("chi_box", int(rr::chi_box(chi1, chi2))),
        ChiCommand::Hilb2 { hh } => value_report("h0_hilb2", int(rr::h0_hilb2(hh)?)),
        ChiCommand::Z { h0, hsigma } => value_report("h0_Z", rr::h0_z(h0, hsigma)),
        ChiCommand::Y { h0, hsigma, hsigmaz } => value_report("h0_Y", rr::h0_y(h0, hsigma, hsigmaz)),
    })
}

fn fixture_json(f: &FamilyFixture) -> Value {
    json!({
        "name": f.name,
        "gram": f.lattice.gram(),
        "H": f.h.0,
        "fixed_classes": f.fixed_classes.iter().map(|c| c.0.clone()).collect::<Vec<_>>(),
        "values": f.values.iter().map(|v| json!({
            "key": v.key,
            "expected": rat_json(&v.expected),
            "recomputed": rat_json(&v.recomputed),
            "match": v.matches,
            "hard": v.hard,
        })).collect::<Vec<_>>(),
    })
}

fn fixtures(family: Option<Family>) -> Report {
    let selected: Vec<FamilyFixture> =
        rr::family_fixtures().into_iter().filter(|f| family.is_none_or(|want| want.name() == f.name)).collect();
    let mut t = Table::new(["family", "key", "expected", "recomputed", "match", "hard"]);
    for f in &selected {
        for v in &f.values {
            t.push([
                f.name.to_string(),
                v.key.to_string(),
                rat_text(&v.expected),
                rat_text(&v.recomputed),
                v.matches.to_string(),
                v.hard.to_string(),
            ]);
        }
    }
    Report::new(json!(selected.iter().map(fixture_json).collect::<Vec<_>>()), vec![t])
}
