//! Argument parsing and command dispatch.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Read;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use ph_helix::polycore::{parse_rat, Rat};
use ph_helix::quintic::{generate_general_quintic, generate_monotone_quintic, GenParams};

use crate::error::{exit, CliError};
use crate::format::decimal;
use crate::paper::{fixture, run_fixture, CheckResult, Expected, PaperExample};
use crate::report::{analyze, classify, ReportDocument};
use crate::spec::CurveSpec;

#[derive(Debug, Parser)]
#[command(name = "ph-helix", version, about = "Exact 2-PH and helix classification of polynomial space curves")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Monotone,
    General,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// PH / 2-PH tests, the Lancret verdict, and quintic classification.
    Classify {
        /// Curve specification file; standard input when absent or `-`.
        input: Option<String>,
    },
    /// Classification plus curvature, torsion and the Frenet frame.
    Analyze { input: Option<String> },
    /// Points of the curve at equally spaced parameters, as CSV.
    Sample {
        input: Option<String>,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        from: String,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        to: String,
        #[arg(long, default_value_t = 11)]
        n: usize,
        /// Significant digits.
        #[arg(long, default_value_t = 12)]
        precision: usize,
    },
    /// Reproduces a built-in worked example and checks every stored value.
    Paper {
        #[arg(long, value_enum)]
        example: PaperExample,
    },
    /// Emits random quintic helices of one family and re-classifies each.
    Generate {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        count: usize,
        /// Bound on numerators and denominators of random rationals.
        #[arg(long, default_value_t = 9)]
        height: i64,
    },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { stdout, stderr: String::new(), code: exit::SUCCESS }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { exit::USAGE } else { exit::SUCCESS };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { stdout: String::new(), stderr: text, code }
            } else {
                Outcome { stdout: text, stderr: String::new(), code }
            };
        }
    };
    match execute(&cli, stdin) {
        Ok(o) => o,
        Err(e) => Outcome { stdout: String::new(), stderr: format!("error: {e}\n"), code: e.exit_code() },
    }
}

fn read_input(path: &Option<String>, stdin: &mut dyn Read) -> Result<CurveSpec, CliError> {
    let text = match path.as_deref() {
        None | Some("-") => {
            let mut s = String::new();
            stdin.read_to_string(&mut s).map_err(|e| CliError::Usage(format!("reading standard input: {e}")))?;
            s
        }
        Some(p) => std::fs::read_to_string(p).map_err(|e| CliError::Usage(format!("reading {p}: {e}")))?,
    };
    CurveSpec::from_json(&text)
}

pub fn execute(cli: &Cli, stdin: &mut dyn Read) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Classify { input } => {
            let spec = read_input(input, stdin)?;
            report_outcome(classify("classify", &spec, &spec.parse()?)?, cli.format)
        }
        Command::Analyze { input } => {
            let spec = read_input(input, stdin)?;
            report_outcome(analyze(&spec, &spec.parse()?)?, cli.format)
        }
        Command::Sample { input, from, to, n, precision } => {
            let spec = read_input(input, stdin)?;
            let table = sample(&spec, from, to, *n, *precision)?;
            Ok(Outcome::ok(match cli.format {
                Format::Text => table.to_csv(),
                Format::Json => to_json(&table),
            }))
        }
        Command::Paper { example } => paper(*example, cli.format),
        Command::Generate { family, seed, count, height } => {
            generate(*family, *seed, *count, *height).map(|g| Outcome::ok(g.render(cli.format)))
        }
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("documents always serialize");
    s.push('\n');
    s
}

fn report_outcome(doc: ReportDocument, format: Format) -> Result<Outcome, CliError> {
    let stdout = match format {
        Format::Text => doc.render_text(),
        Format::Json => {
            let mut s = doc.to_json();
            s.push('\n');
            s
        }
    };
    let code = if doc.is_degenerate() { exit::DEGENERATE } else { exit::SUCCESS };
    Ok(Outcome { stdout, stderr: String::new(), code })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SamplePoint {
    pub t: String,
    pub x: String,
    pub y: String,
    pub z: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SampleTable {
    pub from: String,
    pub to: String,
    pub n: usize,
    pub precision: usize,
    pub points: Vec<SamplePoint>,
}

impl SampleTable {
    pub fn to_csv(&self) -> String {
        let mut s = format!("# from={} to={} n={} precision={}\nt,x,y,z\n", self.from, self.to, self.n, self.precision);
        for p in &self.points {
            let _ = writeln!(s, "{},{},{},{}", p.t, p.x, p.y, p.z);
        }
        s
    }
}

/// Exact parameters `from + k·(to − from)/(n − 1)`, evaluated exactly and rounded once.
pub fn sample(spec: &CurveSpec, from: &str, to: &str, n: usize, precision: usize) -> Result<SampleTable, CliError> {
    let parse = |s: &str| parse_rat(s).ok_or_else(|| CliError::Usage(format!("malformed rational {s:?}")));
    let (a, b) = (parse(from)?, parse(to)?);
    if n < 2 {
        return Err(CliError::Usage(format!("--n must be at least 2, found {n}")));
    }
    if a >= b {
        return Err(CliError::Usage(format!("empty range: from = {a} is not below to = {b}")));
    }
    if precision == 0 {
        return Err(CliError::Usage("--precision must be positive".into()));
    }
    let curve = spec.parse()?.curve()?;
    let step = (&b - &a) / Rat::from_integer((n - 1).into());
    let points = (0..n)
        .map(|k| {
            let t = &a + &step * Rat::from_integer(k.into());
            let [x, y, z] = curve.eval(&t).map(|v| decimal(&v, precision));
            SamplePoint { t: decimal(&t, precision), x, y, z }
        })
        .collect();
    Ok(SampleTable { from: a.to_string(), to: b.to_string(), n, precision, points })
}

#[derive(Serialize)]
struct PaperDocument<'a> {
    example: PaperExample,
    input: &'a CurveSpec,
    checks: &'a [CheckResult],
    pass: bool,
}

fn expected_string(e: &Expected) -> String {
    match e {
        Expected::Values(v) => format!("[{}]", v.join(", ")),
        Expected::Label(l) => l.clone(),
    }
}

fn paper(example: PaperExample, format: Format) -> Result<Outcome, CliError> {
    let f = fixture(example);
    let results = run_fixture(&f)?;
    let pass = results.iter().all(|r| r.pass);
    let stdout = match format {
        Format::Json => to_json(&PaperDocument { example, input: &f.input, checks: &results, pass }),
        Format::Text => {
            let mut s = String::new();
            for r in &results {
                let tag = if r.pass { "PASS" } else { "FAIL" };
                let name = serde_json::to_value(r.quantity).expect("plain enum");
                let name = name.as_str().unwrap_or_default();
                let _ = write!(s, "{tag} {name}: {}", expected_string(&r.expected));
                if !r.pass {
                    let got = r.computed.as_ref().map_or("nothing".to_string(), expected_string);
                    let _ = write!(s, " (computed {got})");
                }
                s.push('\n');
            }
            let passed = results.iter().filter(|r| r.pass).count();
            let _ = writeln!(s, "{passed}/{} checks passed", results.len());
            s
        }
    };
    let code = if pass { exit::SUCCESS } else { exit::INCONSISTENT };
    Ok(Outcome { stdout, stderr: String::new(), code })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratedEntry {
    pub seed: u64,
    pub resampled: u32,
    pub class: String,
    pub lancret: String,
    pub spec: CurveSpec,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratedBatch {
    pub family: Family,
    pub seed: u64,
    pub count: usize,
    pub entries: Vec<GeneratedEntry>,
    pub summary: BTreeMap<String, usize>,
}

impl GeneratedBatch {
    fn render(&self, format: Format) -> String {
        match format {
            Format::Json => to_json(self),
            Format::Text => {
                let mut s = String::new();
                for e in &self.entries {
                    let _ = writeln!(
                        s,
                        "seed={} class={} lancret={} resampled={} {}",
                        e.seed,
                        e.class,
                        e.lancret,
                        e.resampled,
                        e.spec.to_json()
                    );
                }
                let counts: Vec<String> = self.summary.iter().map(|(k, v)| format!("{k}={v}")).collect();
                let _ = writeln!(s, "summary: {}", counts.join(" "));
                s
            }
        }
    }
}

/// Curve `i` is drawn from seed `seed + i`, so any entry can be regenerated alone.
pub fn generate(family: Family, seed: u64, count: usize, height: i64) -> Result<GeneratedBatch, CliError> {
    if count == 0 {
        return Err(CliError::Usage("--count must be at least 1".into()));
    }
    if height < 1 {
        return Err(CliError::Usage("--height must be at least 1".into()));
    }
    let params = GenParams { height };
    let mut entries = Vec::with_capacity(count);
    let mut summary = BTreeMap::new();
    for i in 0..count {
        let s = seed.wrapping_add(i as u64);
        let (spec, resampled) = match family {
            Family::Monotone => {
                let g = generate_monotone_quintic(s, params);
                (CurveSpec::from_hopf(&g.curve), g.resampled)
            }
            Family::General => {
                let g = generate_general_quintic(s, params);
                (CurveSpec::from_quaternion(&g.curve), g.resampled)
            }
        };
        let doc = classify("generate", &spec, &spec.parse()?)?;
        let class = doc.quintic.as_ref().map_or_else(|| "Unclassified".to_string(), |q| q.class.clone());
        *summary.entry(class.clone()).or_insert(0) += 1;
        entries.push(GeneratedEntry { seed: s, resampled, class, lancret: doc.lancret.verdict, spec });
    }
    Ok(GeneratedBatch { family, seed, count, entries, summary })
}
