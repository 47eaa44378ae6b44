//! Command-line frontend. Every subcommand writes one JSON document (or CSV
//! table) to stdout or `--out FILE`.

use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::cayley::{enumerate_ball, growth_sequence, has_closed_form, marked_fingerprint};
use crate::constants::{
    bg_check, constants_report, qi_c1_c2, qi_chain, qi_delta, qi_delta_from_c1_c2, qi_delta_loose, ConstantsInput,
    NuFunction, DEFAULT_PRECISION,
};
use crate::corpus::{run_claim, run_corpus, CorpusConfig, CorpusReport, CLAIMS};
use crate::displacement::{
    ball_sample, classify_isometry, cyclically_reduced_length, displacement_floor_consistency, displacement_report,
};
use crate::entropy::{
    entropy_estimate, exact_entropy, fprod_entropy, DEFAULT_SERIES_RADIUS, DEFAULT_TOLERANCE, DEFAULT_WINDOW,
};
use crate::group::{Element, MarkedGroup, Model};
use crate::hyperbolicity::{
    four_point_defect_with_cap, projection_defect_with_cap, slim_insize, thin_triangle_insize, triangle_scan_with_cap,
    ScanMode, DEFAULT_EXACT_CAP,
};
use crate::presentations::{count_presentations, free_ball_enumerate};

pub const SCHEMA_VERSION: u32 = 1;

pub const EXIT_CORPUS_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_COMPUTATION: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "hypgroup", version, about = "Growth, entropy, hyperbolicity and constants of marked groups")]
pub struct Cli {
    /// Seed for every sampled scan and random draw.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Memory cap for ball enumeration, in bytes or with a K/M/G suffix.
    #[arg(long, global = true, default_value = "4G", value_parser = parse_bytes)]
    pub mem_cap: usize,
    /// Binary precision for big-float evaluation.
    #[arg(long, global = true, default_value_t = DEFAULT_PRECISION)]
    pub precision: usize,
    /// ν specification: `ceil`, `poly:c,e` or `table:FILE.csv`.
    #[arg(long, global = true, default_value = "ceil")]
    pub nu: String,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    pub output: OutputFormat,
    /// Worker threads for scans; results do not depend on it.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Write the report to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Ball sizes |B(e,R)| for R = 0..=radius.
    Growth {
        #[arg(long)]
        group: String,
        #[arg(long)]
        radius: u32,
        /// Force breadth-first enumeration even when a closed form exists.
        #[arg(long)]
        enumerate: bool,
    },
    /// Entropy estimators, plus the exact value or a free-product bracket when available.
    Entropy {
        #[arg(long)]
        group: String,
        #[arg(long)]
        radius: u32,
        #[arg(long, default_value_t = DEFAULT_WINDOW)]
        window: usize,
        #[arg(long, default_value_t = DEFAULT_SERIES_RADIUS)]
        series_radius: u32,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tolerance: f64,
    },
    /// Four-point defect of B(e,radius).
    Delta4 {
        #[arg(long)]
        group: String,
        #[arg(long)]
        radius: u32,
        /// Sample this many quadruples instead of the exact scan.
        #[arg(long)]
        samples: Option<u64>,
        #[arg(long, default_value_t = DEFAULT_EXACT_CAP)]
        exact_cap: usize,
    },
    /// Thin and slim triangle insizes, and optionally the projection defect.
    Thin {
        #[arg(long)]
        group: String,
        #[arg(long)]
        radius: u32,
        /// Three words separated by `;` (e.g. `a1;a2;a1-a2`); scans the ball if absent.
        #[arg(long)]
        triple: Option<String>,
        #[arg(long)]
        samples: Option<u64>,
        #[arg(long, default_value_t = DEFAULT_EXACT_CAP)]
        exact_cap: usize,
        #[arg(long)]
        projection: bool,
    },
    /// Asymptotic and minimal displacement of an element, with its isometry class.
    Displacement {
        #[arg(long)]
        group: String,
        /// The element as a word over the generator labels.
        #[arg(long)]
        element: String,
        #[arg(long, default_value_t = 10)]
        powers: u32,
        /// Conjugator ball radius for the minimal displacement.
        #[arg(long, default_value_t = 4)]
        radius: u32,
        /// Run the displacement-floor consistency check on B(e,radius) with these constants.
        #[arg(long)]
        floor: bool,
        #[arg(long, requires = "floor")]
        delta: Option<f64>,
        #[arg(long, requires = "floor")]
        entropy: Option<f64>,
        #[arg(long, requires = "floor")]
        diam: Option<f64>,
    },
    /// Volume-ratio inequality on the growth sequence.
    BgCheck {
        #[arg(long)]
        group: String,
        #[arg(long)]
        radius: u32,
        #[arg(long)]
        delta: f64,
        #[arg(long)]
        entropy: f64,
        #[arg(long)]
        diam: f64,
    },
    /// Full constants report at (δ, H, D).
    Constants {
        #[arg(long)]
        delta: f64,
        #[arg(long)]
        entropy: f64,
        #[arg(long)]
        diam: f64,
    },
    /// Census of relator sets in the ball of radius p of the free group of rank k.
    Presentations {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        p: u32,
        /// Also list the reduced words of the ball, up to this many.
        #[arg(long)]
        list: Option<usize>,
    },
    /// Marked-ball fingerprint; with `--compare`, whether two markings differ.
    Fingerprint {
        #[arg(long)]
        group: String,
        #[arg(long)]
        radius: u32,
        #[arg(long)]
        compare: Option<String>,
    },
    /// Quasi-isometry hyperbolicity transfer.
    Qi {
        #[arg(long)]
        delta: f64,
        /// Evaluate the chain instance with space constants from this diameter.
        #[arg(long)]
        diam: Option<f64>,
        #[arg(long)]
        a: Option<f64>,
        #[arg(long)]
        b: Option<f64>,
        #[arg(long)]
        lambda: Option<f64>,
        #[arg(long)]
        c: Option<f64>,
    },
    /// The worked-example suite, PASS/FAIL per claim.
    Corpus {
        /// Run only these claim ids.
        #[arg(long, value_delimiter = ',')]
        only: Vec<u32>,
    },
}

fn parse_bytes(text: &str) -> Result<usize, String> {
    let t = text.trim();
    let (digits, scale) = match t.chars().last().map(|c| c.to_ascii_uppercase()) {
        Some('K') => (&t[..t.len() - 1], 1usize << 10),
        Some('M') => (&t[..t.len() - 1], 1 << 20),
        Some('G') => (&t[..t.len() - 1], 1 << 30),
        _ => (t, 1),
    };
    let n: usize = digits.parse().map_err(|_| format!("not a byte count: {text}"))?;
    n.checked_mul(scale).ok_or_else(|| format!("byte count overflows: {text}"))
}

/// A report ready for output.
pub struct Report {
    pub json: Value,
    /// Header and rows for `--output csv`; `None` flattens the JSON.
    pub csv: Option<(Vec<String>, Vec<Vec<String>>)>,
    pub exit: i32,
}

impl Report {
    fn new(command: &str, body: impl Serialize) -> Result<Self, Failure> {
        let mut map = Map::new();
        map.insert("schema".into(), json!(SCHEMA_VERSION));
        map.insert("command".into(), json!(command));
        match serde_json::to_value(body).map_err(err)? {
            Value::Object(fields) => map.extend(fields),
            other => {
                map.insert("result".into(), other);
            }
        }
        Ok(Report { json: Value::Object(map), csv: None, exit: 0 })
    }

    fn with_csv(mut self, header: &[&str], rows: Vec<Vec<String>>) -> Self {
        self.csv = Some((header.iter().map(|s| s.to_string()).collect(), rows));
        self
    }
}

fn flatten(prefix: &str, value: &Value, rows: &mut Vec<Vec<String>>) {
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&key, v, rows);
            }
        }
        Value::Array(items) => {
            for (i, v) in items.iter().enumerate() {
                flatten(&format!("{prefix}.{i}"), v, rows);
            }
        }
        Value::String(s) => rows.push(vec![prefix.to_string(), s.clone()]),
        other => rows.push(vec![prefix.to_string(), other.to_string()]),
    }
}

pub fn render(report: &Report, format: OutputFormat) -> Result<Vec<u8>, String> {
    match format {
        OutputFormat::Json => {
            let mut bytes = serde_json::to_vec_pretty(&report.json).map_err(|e| e.to_string())?;
            bytes.push(b'\n');
            Ok(bytes)
        }
        OutputFormat::Csv => {
            let (header, rows) = match &report.csv {
                Some((h, r)) => (h.clone(), r.clone()),
                None => {
                    let mut rows = Vec::new();
                    flatten("", &report.json, &mut rows);
                    (vec!["field".to_string(), "value".to_string()], rows)
                }
            };
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(&header).map_err(|e| e.to_string())?;
            for row in rows {
                w.write_record(&row).map_err(|e| e.to_string())?;
            }
            w.into_inner().map_err(|e| e.to_string())
        }
    }
}

/// Why a command produced no report.
#[derive(Debug)]
pub enum Failure {
    /// Malformed input: group spec, word, ν spec or argument combination.
    Usage(String),
    /// The computation itself failed, e.g. a memory cap.
    Computation(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Computation(_) => EXIT_COMPUTATION,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Usage(m) | Failure::Computation(m) => f.write_str(m),
        }
    }
}

fn group(text: &str) -> Result<MarkedGroup, Failure> {
    MarkedGroup::from_text(text).map_err(usage)
}

fn err<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Computation(e.to_string())
}

fn usage<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Usage(e.to_string())
}

fn scan_mode(seed: u64, samples: Option<u64>) -> ScanMode {
    match samples {
        Some(count) => ScanMode::Sampled { seed, count },
        None => ScanMode::Exact,
    }
}

fn nu_function(spec: &str) -> Result<NuFunction, Failure> {
    match spec.strip_prefix("table:") {
        Some(path) => NuFunction::table_from_csv(File::open(path).map_err(|e| usage(format!("{path}: {e}")))?).map_err(usage),
        None => NuFunction::parse(spec).map_err(usage),
    }
}

/// Runs one parsed command and builds its report.
pub fn execute(cli: &Cli) -> Result<Report, Failure> {
    let cap = cli.mem_cap;
    match &cli.command {
        Command::Growth { group: spec, radius, enumerate } => {
            let g = group(spec)?;
            let growth = if *enumerate {
                let ball = enumerate_ball(&g, *radius, cap).map_err(err)?;
                let counts = ball.ball_sizes().into_iter().map(dashu::integer::UBig::from).collect();
                crate::cayley::GrowthSequence::from_counts(counts, crate::cayley::GrowthSource::Enumerated)
            } else {
                growth_sequence(&g, *radius, cap).map_err(err)?
            };
            let balls: Vec<String> = growth.counts.iter().map(|c| c.to_string()).collect();
            let spheres: Vec<String> = growth.spheres().iter().map(|c| c.to_string()).collect();
            let rows = (0..balls.len()).map(|r| vec![r.to_string(), balls[r].clone(), spheres[r].clone()]).collect();
            Ok(Report::new(
                "growth",
                json!({
                    "group": g.spec().to_string(),
                    "radius": radius,
                    "source": format!("{:?}", growth.source).to_lowercase(),
                    "closed_form_available": has_closed_form(&g),
                    "ball": balls,
                    "sphere": spheres,
                }),
            )?
            .with_csv(&["R", "ball", "sphere"], rows))
        }
        Command::Entropy { group: spec, radius, window, series_radius, tolerance } => {
            let g = group(spec)?;
            let est = entropy_estimate(&growth_sequence(&g, *radius, cap).map_err(err)?, *window).map_err(err)?;
            let exact = exact_entropy(&g).ok();
            let bracket = match g.model() {
                Model::FProd(..) => Some(fprod_entropy(&g, *series_radius, *tolerance, cap).map_err(err)?),
                _ => None,
            };
            let rows = (1..=est.radius())
                .map(|r| {
                    vec![
                        r.to_string(),
                        est.counts[r].clone(),
                        est.cumulative_at(r).to_string(),
                        est.diff_at(r).to_string(),
                        est.ball_diff[r - 1].to_string(),
                    ]
                })
                .collect();
            Ok(Report::new(
                "entropy",
                json!({ "group": g.spec().to_string(), "radius": radius, "estimate": est, "exact": exact, "bracket": bracket }),
            )?
            .with_csv(&["R", "ball", "cumulative", "diff", "ball_diff"], rows))
        }
        Command::Delta4 { group: spec, radius, samples, exact_cap } => {
            let g = group(spec)?;
            let ball = enumerate_ball(&g, *radius, cap).map_err(err)?;
            let rep = four_point_defect_with_cap(&ball, scan_mode(cli.seed, *samples), *exact_cap).map_err(err)?;
            Report::new(
                "delta4",
                json!({ "group": g.spec().to_string(), "radius": radius, "ball_size": ball.len(), "report": rep }),
            )
        }
        Command::Thin { group: spec, radius, triple, samples, exact_cap, projection } => {
            let g = group(spec)?;
            let ball = enumerate_ball(&g, *radius, cap).map_err(err)?;
            let mode = scan_mode(cli.seed, *samples);
            let mut body = json!({ "group": g.spec().to_string(), "radius": radius, "ball_size": ball.len() });
            match triple {
                Some(text) => {
                    let words: Vec<&str> = text.split(';').collect();
                    let [x, y, z] = words.as_slice() else {
                        return Err(usage(format!("--triple needs three words separated by ';', got {text:?}")));
                    };
                    let t: [Element; 3] = [
                        g.parse_word(x).map_err(usage)?,
                        g.parse_word(y).map_err(usage)?,
                        g.parse_word(z).map_err(usage)?,
                    ];
                    body["thin"] = json!(thin_triangle_insize(&ball, &t).map_err(err)?);
                    body["slim"] = json!(slim_insize(&ball, &t).map_err(err)?);
                }
                None => body["scan"] = json!(triangle_scan_with_cap(&ball, mode, *exact_cap).map_err(err)?),
            }
            if *projection {
                body["projection"] = json!(projection_defect_with_cap(&ball, mode, *exact_cap).map_err(err)?);
            }
            Report::new("thin", body)
        }
        Command::Displacement { group: spec, element, powers, radius, floor, delta, entropy, diam } => {
            let g = group(spec)?;
            let gamma = g.parse_word(element).map_err(usage)?;
            let mut body = json!({
                "group": g.spec().to_string(),
                "report": displacement_report(&g, &gamma, *powers, *radius, cap).map_err(err)?,
                "class": classify_isometry(&g, &gamma, *powers),
                "cyclically_reduced_length": cyclically_reduced_length(&g, &gamma).ok(),
            });
            if *floor {
                let (Some(d), Some(h), Some(diam)) = (delta, entropy, diam) else {
                    return Err(usage("--floor needs --delta, --entropy and --diam"));
                };
                let input = ConstantsInput::new(*d, *h, *diam).map_err(usage)?;
                let sample = ball_sample(&g, *radius, cap).map_err(err)?;
                let nu = nu_function(&cli.nu)?;
                body["floor"] = json!(displacement_floor_consistency(&g, &sample, &input, &nu, *powers, cli.precision)
                    .map_err(err)?);
            }
            Report::new("displacement", body)
        }
        Command::BgCheck { group: spec, radius, delta, entropy, diam } => {
            let g = group(spec)?;
            let growth = growth_sequence(&g, *radius, cap).map_err(err)?;
            let input = ConstantsInput::new(*delta, *entropy, *diam).map_err(usage)?;
            let rep = bg_check(&growth, &input).map_err(err)?;
            Report::new("bg-check", json!({ "group": g.spec().to_string(), "radius": radius, "report": rep }))
        }
        Command::Constants { delta, entropy, diam } => {
            let input = ConstantsInput::new(*delta, *entropy, *diam).map_err(usage)?;
            let rep = constants_report(&input, &nu_function(&cli.nu)?, cli.precision).map_err(err)?;
            let json = serde_json::to_value(&rep).map_err(err)?;
            let mut rows = Vec::new();
            if let Value::Object(map) = &json {
                for (name, v) in map {
                    if let (Some(value), Some(prov)) = (v.get("value"), v.get("provenance")) {
                        let value = value.as_str().map(str::to_string).unwrap_or_else(|| value.to_string());
                        rows.push(vec![name.clone(), value, prov.as_str().unwrap_or_default().to_string()]);
                    }
                }
            }
            Ok(Report::new("constants", json)?.with_csv(&["name", "value", "provenance"], rows))
        }
        Command::Presentations { k, p, list } => {
            let count = count_presentations(*k, *p, cli.precision).map_err(err)?;
            let mut body = json!({ "census": count });
            if let Some(limit) = list {
                body["words"] = json!(free_ball_enumerate(*k, *p, *limit).map_err(err)?);
            }
            Report::new("presentations", body)
        }
        Command::Fingerprint { group: spec, radius, compare } => {
            let g = group(spec)?;
            let fp = marked_fingerprint(&g, *radius, cap).map_err(err)?;
            let mut body = json!({ "group": g.spec().to_string(), "fingerprint": fp });
            if let Some(other) = compare {
                let h = group(other)?;
                let fq = marked_fingerprint(&h, *radius, cap).map_err(err)?;
                body["compare"] = json!({
                    "group": h.spec().to_string(),
                    "fingerprint": fq,
                    "distinguished": fp != fq,
                });
            }
            Report::new("fingerprint", body)
        }
        Command::Qi { delta, diam, a, b, lambda, c } => {
            let mut body = json!({ "delta": delta });
            if let Some(d) = diam {
                let (value, target) = qi_chain(*delta, *d).map_err(err)?;
                body["chain"] = json!({ "diam": d, "value": value, "target": target });
            }
            if let (Some(a), Some(b), Some(l), Some(c)) = (a, b, lambda, c) {
                let (c1, c2) = qi_c1_c2(*l, *c, *delta).map_err(err)?;
                body["transfer"] = json!({
                    "a": a, "b": b, "lambda": l, "c": c, "c1": c1, "c2": c2,
                    "delta_simplified": qi_delta(*a, *b, *l, *c, *delta).map_err(err)?,
                    "delta_from_c1_c2": qi_delta_from_c1_c2(*a, *b, *l, *c, *delta).map_err(err)?,
                    "delta_loose": qi_delta_loose(*a, *b, *l, *c, *delta).map_err(err)?,
                });
            } else if a.is_some() || b.is_some() || lambda.is_some() || c.is_some() {
                return Err(usage("--a, --b, --lambda and --c must be given together"));
            }
            if body.get("chain").is_none() && body.get("transfer").is_none() {
                return Err(usage("qi needs --diam or all of --a, --b, --lambda, --c"));
            }
            Report::new("qi", body)
        }
        Command::Corpus { only } => {
            let cfg = CorpusConfig { mem_cap: cap, precision: cli.precision, seed: cli.seed };
            let report = if only.is_empty() {
                run_corpus(&cfg)
            } else {
                let claims = only
                    .iter()
                    .map(|&id| run_claim(id, &cfg).ok_or_else(|| usage(format!("unknown claim {id}; ids are 1..={}", CLAIMS.len()))))
                    .collect::<Result<Vec<_>, _>>()?;
                CorpusReport { passed: claims.iter().all(|c| c.passed), claims }
            };
            for claim in &report.claims {
                eprintln!("{}", claim.line());
            }
            let rows = report
                .claims
                .iter()
                .map(|c| vec![c.id.to_string(), c.claim.to_string(), if c.passed { "PASS" } else { "FAIL" }.into(), c.detail.clone()])
                .collect();
            let exit = if report.passed { 0 } else { EXIT_CORPUS_FAIL };
            let mut out = Report::new("corpus", &report)?.with_csv(&["id", "claim", "result", "detail"], rows);
            out.exit = exit;
            Ok(out)
        }
    }
}

/// Parses `args`, runs the command and writes its report. Returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { 0 };
        }
    };
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("warning: --threads ignored: {e}");
        }
    }
    let report = match execute(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return e.exit_code();
        }
    };
    let bytes = match render(&report, cli.output) {
        Ok(b) => b,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_COMPUTATION;
        }
    };
    let written = match &cli.out {
        Some(path) => File::create(path).and_then(|mut f| f.write_all(&bytes)),
        None => io::stdout().lock().write_all(&bytes),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return EXIT_COMPUTATION;
    }
    report.exit
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::DEFAULT_MEM_CAP;

    fn parse(args: &[&str]) -> Cli {
        Cli::try_parse_from(std::iter::once("hypgroup").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn byte_sizes() {
        assert_eq!(parse_bytes("4G").unwrap(), DEFAULT_MEM_CAP);
        assert_eq!(parse_bytes("512k").unwrap(), 512 << 10);
        assert_eq!(parse_bytes("100").unwrap(), 100);
        assert!(parse_bytes("lots").is_err());
    }

    #[test]
    fn defaults() {
        let cli = parse(&["constants", "--delta", "0", "--entropy", "1", "--diam", "1"]);
        assert_eq!((cli.seed, cli.mem_cap, cli.precision, cli.nu.as_str()), (0, DEFAULT_MEM_CAP, 256, "ceil"));
        assert_eq!(cli.output, OutputFormat::Json);
    }

    #[test]
    fn growth_report_and_csv() {
        let cli = parse(&["growth", "--group", "free(2)", "--radius", "3"]);
        let rep = execute(&cli).unwrap();
        assert_eq!(rep.json["schema"], 1);
        assert_eq!(rep.json["ball"], json!(["1", "5", "17", "53"]));
        let csv = String::from_utf8(render(&rep, OutputFormat::Csv).unwrap()).unwrap();
        assert_eq!(csv, "R,ball,sphere\n0,1,1\n1,5,4\n2,17,12\n3,53,36\n");
    }

    #[test]
    fn json_flattening() {
        let mut rows = Vec::new();
        flatten("", &json!({"a": {"b": [1, "x"]}, "c": true}), &mut rows);
        assert_eq!(rows, vec![vec!["a.b.0", "1"], vec!["a.b.1", "x"], vec!["c", "true"]]);
    }

    #[test]
    fn computation_errors_are_reported() {
        let code = |args: &[&str]| execute(&parse(args)).err().map(|e| e.exit_code());
        assert_eq!(code(&["delta4", "--group", "free(0)", "--radius", "2"]), Some(EXIT_USAGE));
        assert_eq!(code(&["qi", "--delta", "1"]), Some(EXIT_USAGE));
        assert_eq!(code(&["corpus", "--only", "99"]), Some(EXIT_USAGE));
        assert_eq!(code(&["growth", "--group", "free(3)", "--radius", "9", "--enumerate", "--mem-cap", "1M"]), Some(EXIT_COMPUTATION));
    }
}
