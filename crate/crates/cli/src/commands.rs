use std::fmt;
use std::io::Write;
use std::path::Path;
use std::process::ExitCode;

use cdgraph::families::{
    check_cycle_certificate, cycle_certificate_for, find_certificate_for_cycle, psl2_graph,
    sn_degrees, Psl2Case,
};
use cdgraph::graph::{chromatic_number, clique_number, independence_number, is_perfect};
use cdgraph::io;
use cdgraph::verify::{self, Annotations, CheckSelection, Instance, Outcome};
use cdgraph::{DegreeSet, Int, PrimeGraph, PrimeSet, Psl2CycleCertificate, Psl2Spec};
use rayon::prelude::*;

use crate::{Command, Family, EXIT_CHECK_FAILED};

#[derive(Debug)]
pub enum CliError {
    Core(cdgraph::Error),
    Usage(String),
    Output(std::io::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Output(e) => write!(f, "writing output: {e}"),
        }
    }
}

impl From<cdgraph::Error> for CliError {
    fn from(e: cdgraph::Error) -> Self {
        CliError::Core(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Output(e)
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn status(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_CHECK_FAILED)
    }
}

pub fn run(command: Command, out: &mut impl Write) -> Result<ExitCode> {
    match command {
        Command::Build {
            degrees,
            out: json,
            dot,
        } => {
            let loaded = io::load_degree_set(&degrees)?;
            emit_graph(
                out,
                &loaded.set.character_graph(),
                json.as_deref(),
                dot.as_deref(),
            )?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Psl2 { q, out: json, dot } => {
            let spec = Psl2Spec::new(q)?;
            if spec.case() == Psl2Case::OutsideHypotheses {
                eprintln!("note: q = {q} is outside the component description; PSL2(5) has the same degrees as PSL2(4)");
            }
            emit_graph(out, &psl2_graph(&spec), json.as_deref(), dot.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Sn {
            n,
            degrees_out,
            out: json,
            dot,
        } => {
            let degrees: DegreeSet = sn_degrees(n)?;
            if let Some(path) = &degrees_out {
                io::save_degree_set(path, &degrees, &Annotations::default())?;
            }
            if json.is_none() && dot.is_none() {
                if degrees_out.is_none() {
                    write!(
                        out,
                        "{}",
                        io::degree_set_to_json(&degrees, &Annotations::default())
                    )?;
                }
            } else {
                emit_graph(
                    out,
                    &degrees.character_graph(),
                    json.as_deref(),
                    dot.as_deref(),
                )?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Product { a, b, out: json } => product(out, &a, &b, json.as_deref()),
        Command::Stats { file } => stats(out, &file),
        Command::Check {
            file,
            theorem_a,
            corollary_b,
            palfy,
            moreto_tiep,
        } => {
            let mut sel = CheckSelection {
                theorem_a,
                corollary_b,
                palfy,
                moreto_tiep,
            };
            if !(theorem_a || corollary_b || palfy || moreto_tiep) {
                sel = CheckSelection::ALL;
            }
            check(out, &file, sel)
        }
        Command::CertifyCycle { file, pi, u, alpha } => certify_cycle(out, &file, pi, u.zip(alpha)),
        Command::Sweep {
            family,
            q_min,
            q_max,
            n_min,
            n_max,
            dir,
            palfy,
            jobs,
        } => {
            let instances = match family {
                Family::Psl2 => {
                    let q_max = q_max
                        .ok_or_else(|| CliError::Usage("--family psl2 needs --q-max".into()))?;
                    verify::psl2_instances(q_min, q_max)?
                }
                Family::Sn => {
                    let n_max =
                        n_max.ok_or_else(|| CliError::Usage("--family sn needs --n-max".into()))?;
                    verify::sn_instances(n_min, n_max)?
                }
                Family::Ingested => {
                    let dir =
                        dir.ok_or_else(|| CliError::Usage("--family ingested needs --dir".into()))?;
                    ingest(&dir)?
                }
            };
            let mut sel = CheckSelection::SWEEP;
            sel.palfy = palfy;
            sweep(out, &instances, sel, jobs)
        }
    }
}

fn emit_graph(
    out: &mut impl Write,
    g: &PrimeGraph,
    json: Option<&Path>,
    dot: Option<&Path>,
) -> Result<()> {
    if let Some(path) = json {
        io::save_graph(path, g)?;
    }
    if let Some(path) = dot {
        let text = io::export_dot(g, is_perfect(g).certificate.as_ref())?;
        std::fs::write(path, text).map_err(|source| cdgraph::Error::Io {
            path: path.to_path_buf(),
            source,
        })?;
    }
    if json.is_none() && dot.is_none() {
        write!(out, "{}", io::graph_to_json(g))?;
    }
    Ok(())
}

fn list(items: impl IntoIterator<Item = Int>) -> String {
    let items: Vec<String> = items.into_iter().map(|v| v.to_string()).collect();
    format!("[{}]", items.join(","))
}

fn product(out: &mut impl Write, a: &Path, b: &Path, json: Option<&Path>) -> Result<ExitCode> {
    let a = io::load_degree_set(a)?.set;
    let b = io::load_degree_set(b)?.set;
    let degrees = a.product(&b)?;
    let direct = degrees.character_graph();
    let formula = cdgraph::degrees::join_formula_graph(&a, &b);
    let shared = a.rho().intersection(&b.rho());
    writeln!(out, "product={}", degrees.name())?;
    writeln!(out, "degrees={}", list(degrees.degrees().iter().copied()))?;
    writeln!(out, "shared_primes={}", list(shared.iter()))?;
    if a.is_trivial() || b.is_trivial() {
        writeln!(
            out,
            "note=a factor has degree set {{1}}; the join formula assumes non-abelian factors"
        )?;
    }
    writeln!(out, "graph={}", io::graph_to_json(&formula).trim_end())?;
    let equal = direct == formula;
    writeln!(out, "join_formula_matches_product_degrees={equal}")?;
    if let Some(path) = json {
        io::save_graph(path, &formula)?;
    }
    Ok(status(equal))
}

fn stats(out: &mut impl Write, file: &Path) -> Result<ExitCode> {
    let input = io::load_input(file)?;
    let g = input.graph();
    let coloring = chromatic_number(&g)?;
    let colors: Vec<String> = coloring
        .assignment
        .iter()
        .map(|(v, c)| format!("{v}:{c}"))
        .collect();
    let verdict = is_perfect(&g);
    writeln!(out, "instance={}", input.name())?;
    writeln!(out, "vertices={}", list(g.vertices().iter().copied()))?;
    let edges: Vec<String> = g
        .edges()
        .iter()
        .map(|(a, b)| format!("[{a},{b}]"))
        .collect();
    writeln!(out, "edges=[{}]", edges.join(","))?;
    writeln!(out, "omega={}", clique_number(&g)?)?;
    writeln!(
        out,
        "chi={} coloring={{{}}}",
        coloring.chi,
        colors.join(",")
    )?;
    writeln!(out, "alpha={}", independence_number(&g)?)?;
    writeln!(
        out,
        "chi_complement={}",
        chromatic_number(&g.complement())?.chi
    )?;
    writeln!(out, "perfect={}", verdict.perfect)?;
    if let Some(cert) = verdict.certificate {
        let kind = format!("{:?}", cert.kind).to_lowercase();
        writeln!(
            out,
            "certificate={kind}:{}",
            list(cert.cycle.iter().copied())
        )?;
    }
    Ok(ExitCode::SUCCESS)
}

fn check(out: &mut impl Write, file: &Path, sel: CheckSelection) -> Result<ExitCode> {
    let input = io::load_input(file)?;
    let instance = Instance {
        name: input.name().to_string(),
        graph: input.graph(),
        annotations: input.annotations(),
        note: None,
    };
    let report = verify::verify_instance(&instance, sel)?;
    for entry in &report.checks {
        write!(out, "{}={}", entry.id, entry.outcome)?;
        if let Some(note) = &entry.note {
            write!(out, " note=\"{note}\"")?;
        }
        writeln!(out)?;
        if entry.outcome == Outcome::Fail {
            for cert in &entry.certificates {
                writeln!(
                    out,
                    "  certificate={}",
                    serde_json::to_string(cert).expect("certificates serialize")
                )?;
            }
        }
    }
    writeln!(out, "{}", report.summary_line())?;
    Ok(status(report.passed()))
}

fn describe(out: &mut impl Write, cert: &Psl2CycleCertificate, valid: bool) -> Result<()> {
    let power = cdgraph::arith::checked_pow(cert.u(), cert.alpha());
    writeln!(
        out,
        "pi={} u={} alpha={} variant={:?} ordering={} valid={valid}",
        list(cert.pi().iter()),
        cert.u(),
        cert.alpha(),
        cert.variant(),
        list(cert.ordering().iter().copied()),
    )?;
    if let Some(p) = power {
        writeln!(out, "u^alpha-1={} u^alpha+1={}", p - 1, p.saturating_add(1))?;
    }
    Ok(())
}

fn certify_cycle(
    out: &mut impl Write,
    file: &Path,
    pi: Vec<Int>,
    given: Option<(Int, u32)>,
) -> Result<ExitCode> {
    let g = io::load_input(file)?.graph();
    let pi = PrimeSet::new(pi)?;
    if pi.len() <= 1 || pi.len() % 2 == 0 {
        return Err(CliError::Usage(format!(
            "--pi needs an odd number of primes, at least 3; got {}",
            pi.len()
        )));
    }
    let cert = match given {
        Some((u, alpha)) => cycle_certificate_for(&g, &pi, u, alpha)?,
        None => find_certificate_for_cycle(&g, &pi, None)?,
    };
    match cert {
        None => {
            if cdgraph::families::is_complement_cycle(&g, &pi.to_vec()) {
                writeln!(
                    out,
                    "pi={} complement_cycle=true certificate=none",
                    list(pi.iter())
                )?;
            } else {
                writeln!(out, "pi={} complement_cycle=false", list(pi.iter()))?;
            }
            Ok(status(false))
        }
        Some(cert) => {
            let valid = check_cycle_certificate(&cert);
            describe(out, &cert, valid)?;
            Ok(status(valid))
        }
    }
}

fn ingest(dir: &Path) -> Result<Vec<Instance<Int>>> {
    let mut instances = Vec::new();
    for path in io::degree_set_files(dir)? {
        let loaded = io::load_degree_set(&path)?;
        instances.push(Instance::from_degrees(&loaded.set, loaded.annotations));
    }
    Ok(instances)
}

fn worker_count(jobs: Option<usize>) -> Result<Option<usize>> {
    if let Some(j) = jobs {
        return Ok(Some(j));
    }
    match std::env::var("CDGRAPH_JOBS") {
        Ok(v) => v
            .parse()
            .map(Some)
            .map_err(|_| CliError::Usage(format!("CDGRAPH_JOBS={v} is not a thread count"))),
        Err(_) => Ok(None),
    }
}

fn sweep(
    out: &mut impl Write,
    instances: &[Instance<Int>],
    sel: CheckSelection,
    jobs: Option<usize>,
) -> Result<ExitCode> {
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(n) = worker_count(jobs)? {
        pool = pool.num_threads(n);
    }
    let pool = pool
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start worker pool: {e}")))?;
    let reports = pool.install(|| {
        instances
            .par_iter()
            .map(|inst| verify::verify_instance(inst, sel))
            .collect::<cdgraph::Result<Vec<_>>>()
    })?;

    let mut failures = 0;
    let mut expected = 0;
    for (inst, report) in instances.iter().zip(&reports) {
        writeln!(out, "{}", report.summary_line())?;
        if report.passed() {
            continue;
        }
        if report.defects(inst.annotations.solvable).is_empty() {
            expected += 1;
        } else {
            failures += 1;
        }
        for entry in report.checks.iter().filter(|c| c.outcome == Outcome::Fail) {
            for cert in &entry.certificates {
                writeln!(
                    out,
                    "  {} certificate={}",
                    entry.id,
                    serde_json::to_string(cert).expect("certificates serialize")
                )?;
            }
        }
    }
    writeln!(
        out,
        "instances={}, failures={failures}, expected_failures={expected}",
        instances.len()
    )?;
    Ok(status(failures == 0))
}
