use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use wiener_core::cuts::{CrossingCheck, CutPartition, ScaledCutFamily};
use wiener_core::generators::{self, HexSystem};
use wiener_core::{
    all_pairs_with, condition_iii_implied, io as formats, is_partial_cube_with, theta_classes,
    verify_family, wiener_brute, DistanceOptions, Error, Graph, Recognition,
};

/// Wiener index of graphs by the cut method.
#[derive(Debug, Parser)]
#[command(name = "wiener", version)]
struct Cli {
    /// Worker threads for the all-pairs distance table.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    /// Emit a single-line JSON report before the final value line.
    #[arg(long, global = true)]
    json: bool,
    /// Leave wall-clock timings out of the output.
    #[arg(long, global = true)]
    no_timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write a generated graph in edge-list format.
    Gen {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        param: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// The two factor graphs for `--family product`.
        #[arg(long, num_args = 2)]
        inputs: Vec<PathBuf>,
        /// Cell file (`q r` per line) for `--family benzenoid`.
        #[arg(long)]
        cells: Option<PathBuf>,
    },
    /// Compute the Wiener index.
    Wiener {
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
    },
    /// List the Θ-classes.
    Theta { graph: PathBuf },
    /// Decide whether the graph is a partial cube.
    Check {
        graph: PathBuf,
        /// Write the embedding certificate as JSON to this file.
        #[arg(long)]
        certificate: Option<PathBuf>,
    },
    /// Validate a cut partition or scaled cut family and evaluate it.
    Verify {
        graph: PathBuf,
        partition: PathBuf,
        #[arg(long, default_value_t = 1)]
        scale: usize,
        /// Also check condition (iii) and run the exhaustive redundancy check.
        #[arg(long)]
        check_iii: bool,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Family {
    Hypercube,
    Path,
    Cycle,
    Tree,
    Ladder,
    Circumcoronene,
    Product,
    Benzenoid,
    /// Scale-2 cut family of the odd cycle, in partition-file format.
    OddCycleCuts,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Method {
    Auto,
    Brute,
    Cut,
}

/// Failure of a command; every variant maps to exit code 2.
#[derive(Debug)]
enum CliError {
    Core(Error),
    Input(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Core(e) => e.fmt(f),
            CliError::Input(msg) => f.write_str(msg),
        }
    }
}

type CliResult<T> = Result<T, CliError>;

struct Output {
    lines: Vec<String>,
    code: u8,
}

impl Output {
    fn new() -> Self {
        Output {
            lines: Vec::new(),
            code: 0,
        }
    }

    fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }
}

fn read_input(path: &Path) -> CliResult<String> {
    let mut text = String::new();
    if path == Path::new("-") {
        io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| CliError::Input(format!("stdin: {e}")))?;
    } else {
        text = fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    }
    Ok(text)
}

fn load_graph(path: &Path) -> CliResult<Graph> {
    let text = read_input(path)?;
    formats::parse_edge_list(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn ms(start: Instant) -> f64 {
    (start.elapsed().as_secs_f64() * 1e6).round() / 1e3
}

#[derive(Serialize)]
struct Timing {
    distances_ms: Option<f64>,
    cut_phase_ms: Option<f64>,
    total_ms: f64,
}

#[derive(Serialize)]
struct RunReport {
    method: Method,
    value: u64,
    vertices: usize,
    edges: usize,
    classes: Option<usize>,
    fallback: Option<String>,
    timing: Option<Timing>,
}

fn cmd_gen(
    family: Family,
    param: Option<usize>,
    seed: u64,
    inputs: &[PathBuf],
    cells: Option<&Path>,
) -> CliResult<Output> {
    let need =
        |name: &str| param.ok_or_else(|| CliError::Input(format!("--family {name} needs --param")));
    let graph = match family {
        Family::Hypercube => generators::hypercube(need("hypercube")?)?,
        Family::Path => generators::path(need("path")?)?,
        Family::Cycle => generators::cycle(need("cycle")?)?,
        Family::Tree => generators::random_tree(need("tree")?, seed)?,
        Family::Ladder => generators::ladder(need("ladder")?)?,
        Family::Circumcoronene => generators::circumcoronene(need("circumcoronene")?)?,
        Family::Product => {
            let [a, b] = inputs else {
                return Err(CliError::Input(
                    "--family product needs --inputs A B".into(),
                ));
            };
            generators::cartesian_product(&load_graph(a)?, &load_graph(b)?)?
        }
        Family::Benzenoid => {
            let path =
                cells.ok_or_else(|| CliError::Input("--family benzenoid needs --cells".into()))?;
            let cells = formats::parse_cells(&read_input(path)?)
                .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
            generators::benzenoid(&HexSystem::new(cells)?)?
        }
        Family::OddCycleCuts => {
            let fam = wiener_core::odd_cycle_cut_family(need("odd-cycle-cuts")?)?;
            let sets: Vec<Vec<usize>> = fam.cuts().iter().map(|c| c.edge_ids().to_vec()).collect();
            let mut out = Output::new();
            out.lines
                .extend(formats::write_partition(&sets).lines().map(str::to_owned));
            return Ok(out);
        }
    };
    let mut out = Output::new();
    out.lines
        .extend(formats::write_edge_list(&graph).lines().map(str::to_owned));
    Ok(out)
}

fn cmd_wiener(cli: &Cli, path: &Path, method: Method) -> CliResult<Output> {
    let g = load_graph(path)?;
    let start = Instant::now();
    let mut report = RunReport {
        method,
        value: 0,
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        classes: None,
        fallback: None,
        timing: None,
    };
    let mut distances_ms = None;
    let mut cut_phase_ms = None;

    if method != Method::Brute {
        let opts = DistanceOptions {
            threads: cli.threads,
            ..Default::default()
        };
        let d = all_pairs_with(&g, &opts)?;
        distances_ms = Some(ms(start));
        let phase = Instant::now();
        match is_partial_cube_with(&g, &d)? {
            Recognition::PartialCube { certificate, .. } => {
                let mut total: u64 = 0;
                for class in 0..certificate.k() {
                    let (n1, n2) = certificate.side_sizes(class);
                    total = (n1 as u64)
                        .checked_mul(n2 as u64)
                        .and_then(|p| total.checked_add(p))
                        .ok_or(Error::ArithmeticOverflow)?;
                }
                cut_phase_ms = Some(ms(phase));
                report.method = Method::Cut;
                report.value = total;
                report.classes = Some(certificate.k());
            }
            Recognition::NotPartialCube(reason) => {
                if method == Method::Cut {
                    return Err(Error::NotPartialCube(reason).into());
                }
                report.fallback = Some(format!("not a partial cube: {reason}"));
            }
        }
    }
    if report.classes.is_none() {
        report.method = Method::Brute;
        report.value = wiener_brute(&g)?.get();
    }
    if !cli.no_timing {
        report.timing = Some(Timing {
            distances_ms,
            cut_phase_ms,
            total_ms: ms(start),
        });
    }

    let mut out = Output::new();
    if cli.json {
        out.line(serde_json::to_string(&report).expect("report serializes"));
    } else {
        let name = match report.method {
            Method::Cut => "cut",
            _ => "brute",
        };
        out.line(format!("method: {name}"));
        if let Some(f) = &report.fallback {
            out.line(format!("fallback: {f}"));
        }
        out.line(format!("vertices: {}", report.vertices));
        out.line(format!("edges: {}", report.edges));
        if let Some(k) = report.classes {
            out.line(format!("classes: {k}"));
        }
        if let Some(t) = &report.timing {
            if let Some(v) = t.distances_ms {
                out.line(format!("distances_ms: {v}"));
            }
            if let Some(v) = t.cut_phase_ms {
                out.line(format!("cut_phase_ms: {v}"));
            }
            out.line(format!("total_ms: {}", t.total_ms));
        }
    }
    out.line(report.value.to_string());
    Ok(out)
}

fn distances(cli: &Cli, g: &Graph) -> CliResult<wiener_core::DistanceOracle> {
    let opts = DistanceOptions {
        threads: cli.threads,
        ..Default::default()
    };
    Ok(all_pairs_with(g, &opts)?)
}

fn cmd_theta(cli: &Cli, path: &Path) -> CliResult<Output> {
    let g = load_graph(path)?;
    let d = distances(cli, &g)?;
    let p = theta_classes(&g, &d)?;
    let mut out = Output::new();
    out.lines.extend(p.report().lines().map(str::to_owned));
    Ok(out)
}

fn cmd_check(cli: &Cli, path: &Path, certificate_path: Option<&Path>) -> CliResult<Output> {
    let g = load_graph(path)?;
    let d = distances(cli, &g)?;
    let mut out = Output::new();
    match is_partial_cube_with(&g, &d)? {
        Recognition::PartialCube {
            certificate,
            partition,
        } => {
            out.line("partial cube: yes");
            out.line(format!("classes: {}", partition.k()));
            out.line(format!("label length: {}", certificate.k()));
            if let Some(target) = certificate_path {
                let json = certificate.to_json(&partition) + "\n";
                fs::write(target, json)
                    .map_err(|e| CliError::Input(format!("{}: {e}", target.display())))?;
            }
        }
        Recognition::NotPartialCube(reason) => {
            out.line("partial cube: no");
            out.line(format!("reason: {reason}"));
            out.code = 1;
        }
    }
    Ok(out)
}

fn cmd_verify(
    cli: &Cli,
    graph_path: &Path,
    partition_path: &Path,
    scale: usize,
    check_iii: bool,
) -> CliResult<Output> {
    let g = load_graph(graph_path)?;
    let sets = formats::parse_partition(&read_input(partition_path)?)
        .map_err(|e| CliError::Input(format!("{}: {e}", partition_path.display())))?;
    let cuts = sets
        .iter()
        .enumerate()
        .map(|(i, s)| {
            wiener_core::split_by_cut(&g, s)
                .map_err(|e| CliError::Input(format!("{}: cut {i}: {e}", partition_path.display())))
        })
        .collect::<CliResult<Vec<_>>>()?;
    let family = ScaledCutFamily::new(&g, cuts, scale)?;
    let d = distances(cli, &g)?;
    let report = verify_family(&g, &d, &family, check_iii);

    let mut out = Output::new();
    out.line(format!("cuts: {}", family.cuts().len()));
    out.line(format!("scale: {scale}"));
    if let Some(c) = report.first_counterexample() {
        out.line("verdict: invalid");
        out.line(format!("counterexample: {c}"));
        out.code = 1;
        return Ok(out);
    }
    if check_iii {
        let passed = report
            .cuts
            .iter()
            .all(|c| c.crossing == Some(CrossingCheck::Passed));
        out.line(format!(
            "condition (iii): {}",
            if passed { "passed" } else { "failed" }
        ));
        if scale == 1 {
            let partition = CutPartition::new(&g, family.cuts().to_vec())?;
            let redundancy = condition_iii_implied(&g, &d, &partition)?;
            out.line(format!(
                "redundancy check: {} cross pairs, {} violations",
                redundancy.pairs_checked,
                redundancy.violations.len()
            ));
        }
    }
    let sum = family.cuts().iter().try_fold(0u64, |acc, c| {
        c.product()
            .and_then(|p| acc.checked_add(p).ok_or(Error::ArithmeticOverflow))
    })?;
    let scale_u = scale as u64;
    if sum % scale_u != 0 {
        out.line(format!(
            "verdict: invalid (sum {sum} not divisible by scale {scale})"
        ));
        out.code = 1;
        return Ok(out);
    }
    out.line("verdict: valid");
    out.line((sum / scale_u).to_string());
    Ok(out)
}

fn run(cli: &Cli) -> CliResult<Output> {
    match &cli.command {
        Command::Gen {
            family,
            param,
            seed,
            inputs,
            cells,
        } => cmd_gen(*family, *param, *seed, inputs, cells.as_deref()),
        Command::Wiener { graph, method } => cmd_wiener(cli, graph, *method),
        Command::Theta { graph } => cmd_theta(cli, graph),
        Command::Check { graph, certificate } => cmd_check(cli, graph, certificate.as_deref()),
        Command::Verify {
            graph,
            partition,
            scale,
            check_iii,
        } => cmd_verify(cli, graph, partition, *scale, *check_iii),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let mut stdout = io::stdout().lock();
            for line in &out.lines {
                if writeln!(stdout, "{line}").is_err() {
                    return ExitCode::from(2);
                }
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
