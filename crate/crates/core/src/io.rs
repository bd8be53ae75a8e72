//! JSON files for degree sets and graphs, and DOT export.
//!
//! Degree-set file:
//!
//! ```json
//! {"name": "S5", "degrees": [1, 4, 5, 6], "annotations": {"solvable": false, "group_realizable": true, "source": "hook lengths"}}
//! ```
//!
//! `name` defaults to the file stem and `annotations` may be omitted. Graph file:
//!
//! ```json
//! {"vertices": [2, 3, 5, 11], "edges": [[2, 3], [2, 5]]}
//! ```
//!
//! Saved files list vertices ascending and each edge as `[smaller, larger]`,
//! edges in lexicographic order.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::value::RawValue;

use crate::error::{Error, Result};
use crate::verify::Annotations;
use crate::{DegreeSet, HoleCertificate, Int, PrimeGraph};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDegreeSetFile {
    #[serde(default)]
    name: Option<String>,
    degrees: Vec<Box<RawValue>>,
    #[serde(default)]
    annotations: Option<Annotations>,
}

#[derive(Serialize)]
struct DegreeSetFileOut<'a> {
    name: &'a str,
    degrees: &'a [Int],
    #[serde(skip_serializing_if = "Annotations::is_empty")]
    annotations: &'a Annotations,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    pub vertices: Vec<Int>,
    pub edges: Vec<[Int; 2]>,
}

/// A degree set read from disk with its annotations and any normalization warnings.
#[derive(Clone, Debug)]
pub struct LoadedDegreeSet {
    pub set: DegreeSet,
    pub annotations: Annotations,
    pub warnings: Vec<String>,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn parse_error(path: &Path, e: serde_json::Error) -> Error {
    let text = e.to_string();
    let message = match text.rfind(" at line ") {
        Some(i) => text[..i].to_string(),
        None => text,
    };
    Error::Parse {
        path: path.to_path_buf(),
        line: e.line(),
        column: e.column(),
        message,
    }
}

fn parse_degree(raw: &RawValue) -> Result<Int> {
    let text = raw.get().trim();
    if let Ok(v) = text.parse::<Int>() {
        if v == 0 {
            return Err(Error::Validation("degree 0 is not positive".into()));
        }
        return Ok(v);
    }
    if text.starts_with('-') {
        return Err(Error::Validation(format!("degree {text} is not positive")));
    }
    Err(Error::Validation(format!(
        "degree {text} is not a positive integer below 2^128"
    )))
}

/// Parses degree-set JSON. `fallback_name` is used when the file has no `name`.
pub fn parse_degree_set(text: &str, path: &Path, fallback_name: &str) -> Result<LoadedDegreeSet> {
    let raw: RawDegreeSetFile = serde_json::from_str(text).map_err(|e| parse_error(path, e))?;
    let degrees = raw
        .degrees
        .iter()
        .map(|r| parse_degree(r))
        .collect::<Result<Vec<Int>>>()?;
    let mut warnings = Vec::new();
    let mut seen = BTreeSet::new();
    let dups: BTreeSet<Int> = degrees
        .iter()
        .copied()
        .filter(|d| !seen.insert(*d))
        .collect();
    if !dups.is_empty() {
        let list: Vec<String> = dups.iter().map(|d| d.to_string()).collect();
        warnings.push(format!("duplicate degrees collapsed: {}", list.join(", ")));
    }
    let name = raw.name.unwrap_or_else(|| fallback_name.to_string());
    let set = DegreeSet::new(name, degrees)?;
    for w in &warnings {
        log::warn!("{}: {w}", path.display());
    }
    Ok(LoadedDegreeSet {
        set,
        annotations: raw.annotations.unwrap_or_default(),
        warnings,
    })
}

fn stem(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "degrees".to_string())
}

pub fn load_degree_set(path: &Path) -> Result<LoadedDegreeSet> {
    parse_degree_set(&read(path)?, path, &stem(path))
}

pub fn degree_set_to_json(set: &DegreeSet, annotations: &Annotations) -> String {
    let out = DegreeSetFileOut {
        name: set.name(),
        degrees: set.degrees(),
        annotations,
    };
    serde_json::to_string(&out).expect("degree sets always serialize") + "\n"
}

pub fn save_degree_set(path: &Path, set: &DegreeSet, annotations: &Annotations) -> Result<()> {
    write(path, &degree_set_to_json(set, annotations))
}

pub fn graph_to_json(g: &PrimeGraph) -> String {
    let file = GraphFile {
        vertices: g.vertices().to_vec(),
        edges: g.edges().into_iter().map(|(a, b)| [a, b]).collect(),
    };
    serde_json::to_string(&file).expect("graphs always serialize") + "\n"
}

pub fn parse_graph(text: &str, path: &Path) -> Result<PrimeGraph> {
    let file: GraphFile = serde_json::from_str(text).map_err(|e| parse_error(path, e))?;
    PrimeGraph::new(file.vertices, file.edges.into_iter().map(|[a, b]| (a, b)))
}

pub fn load_graph(path: &Path) -> Result<PrimeGraph> {
    parse_graph(&read(path)?, path)
}

pub fn save_graph(path: &Path, g: &PrimeGraph) -> Result<()> {
    write(path, &graph_to_json(g))
}

/// Either kind of input file.
#[derive(Clone, Debug)]
pub enum InputFile {
    Degrees(LoadedDegreeSet),
    Graph { name: String, graph: PrimeGraph },
}

impl InputFile {
    pub fn name(&self) -> &str {
        match self {
            InputFile::Degrees(d) => d.set.name(),
            InputFile::Graph { name, .. } => name,
        }
    }

    /// The graph itself, or the character graph of the degree set.
    pub fn graph(&self) -> PrimeGraph {
        match self {
            InputFile::Degrees(d) => d.set.character_graph(),
            InputFile::Graph { graph, .. } => graph.clone(),
        }
    }

    pub fn annotations(&self) -> Annotations {
        match self {
            InputFile::Degrees(d) => d.annotations.clone(),
            InputFile::Graph { .. } => Annotations::default(),
        }
    }
}

/// Loads a degree-set file, a graph file, or DOT text written by [`export_dot`].
pub fn load_input(path: &Path) -> Result<InputFile> {
    let text = read(path)?;
    if text.trim_start().starts_with("graph") {
        return Ok(InputFile::Graph {
            name: stem(path),
            graph: parse_dot(&text, path)?,
        });
    }
    let keys: BTreeMap<String, Box<RawValue>> =
        serde_json::from_str(&text).map_err(|e| parse_error(path, e))?;
    if keys.contains_key("degrees") {
        Ok(InputFile::Degrees(parse_degree_set(
            &text,
            path,
            &stem(path),
        )?))
    } else {
        Ok(InputFile::Graph {
            name: stem(path),
            graph: parse_graph(&text, path)?,
        })
    }
}

/// Degree-set files (`*.json`, `*.degrees`) directly inside `dir`, sorted by file name.
pub fn degree_set_files(dir: &Path) -> Result<Vec<PathBuf>> {
    let entries = fs::read_dir(dir).map_err(|source| Error::Io {
        path: dir.to_path_buf(),
        source,
    })?;
    let mut out = Vec::new();
    for entry in entries {
        let entry = entry.map_err(|source| Error::Io {
            path: dir.to_path_buf(),
            source,
        })?;
        let path = entry.path();
        let ext = path.extension().and_then(|e| e.to_str());
        if path.is_file() && matches!(ext, Some("json") | Some("degrees")) {
            out.push(path);
        }
    }
    out.sort();
    Ok(out)
}

const HIGHLIGHT: &str = "color=red, penwidth=2";

/// Undirected DOT text for `g`, vertices and edges in ascending order.
///
/// With a certificate, its vertices and every edge of `g` among them carry
/// `color=red, penwidth=2`. The certificate must validate against `g`.
pub fn export_dot(g: &PrimeGraph, highlight: Option<&HoleCertificate>) -> Result<String> {
    let marked: BTreeSet<Int> = match highlight {
        Some(cert) if !cert.validates(g) => {
            return Err(Error::Domain(format!(
                "certificate {:?} {:?} does not validate against the graph",
                cert.kind, cert.cycle
            )))
        }
        Some(cert) => cert.cycle.iter().copied().collect(),
        None => BTreeSet::new(),
    };
    let mut out = String::from("graph delta {\n");
    for &v in g.vertices() {
        if marked.contains(&v) {
            writeln!(out, "  {v} [{HIGHLIGHT}];").unwrap();
        } else {
            writeln!(out, "  {v};").unwrap();
        }
    }
    for (a, b) in g.edges() {
        if marked.contains(&a) && marked.contains(&b) {
            writeln!(out, "  {a} -- {b} [{HIGHLIGHT}];").unwrap();
        } else {
            writeln!(out, "  {a} -- {b};").unwrap();
        }
    }
    out.push_str("}\n");
    Ok(out)
}

/// Reads back the DOT subset produced by [`export_dot`]: one `v;` or
/// `a -- b;` statement per line, attributes ignored. Not a general DOT parser.
pub fn parse_dot(text: &str, path: &Path) -> Result<PrimeGraph> {
    let bad = |line: usize, message: String| Error::Parse {
        path: path.to_path_buf(),
        line,
        column: 1,
        message,
    };
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
    match lines.next() {
        Some((_, l)) if l.starts_with("graph") && l.ends_with('{') => {}
        _ => return Err(bad(1, "expected `graph NAME {`".into())),
    }
    let label = |line: usize, tok: &str| {
        tok.trim()
            .parse::<Int>()
            .map_err(|_| bad(line, format!("`{}` is not a prime label", tok.trim())))
    };
    let mut vertices = BTreeSet::new();
    let mut edges = Vec::new();
    let mut closed = false;
    for (no, line) in lines {
        if line.is_empty() {
            continue;
        }
        if closed {
            return Err(bad(no, "text after closing brace".into()));
        }
        if line == "}" {
            closed = true;
            continue;
        }
        let stmt = line
            .strip_suffix(';')
            .ok_or_else(|| bad(no, "statement does not end with `;`".into()))?;
        let stmt = match stmt.find('[') {
            Some(i) => &stmt[..i],
            None => stmt,
        };
        match stmt.split_once("--") {
            Some((a, b)) => {
                let (a, b) = (label(no, a)?, label(no, b)?);
                vertices.extend([a, b]);
                edges.push((a, b));
            }
            None => {
                vertices.insert(label(no, stmt)?);
            }
        }
    }
    if !closed {
        return Err(bad(text.lines().count(), "missing closing brace".into()));
    }
    PrimeGraph::new(vertices, edges)
}
