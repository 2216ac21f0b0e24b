//! Turning command-line inputs into graphs.
//!
//! An input is a file (edge list or graph6 lines), a generator expression
//! such as `sun(8)` or `random-outerplanar(12,5,42)`, or a graph6 literal.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use zforce::fixtures::expected_z_comment;
use zforce::{generate, parse_graph6, GeneratorSpec, Graph};

/// A graph together with where it came from.
#[derive(Debug, Clone)]
pub struct Loaded {
    pub source: String,
    pub graph: Graph,
    pub expected_z: Option<usize>,
}

fn looks_like_edge_list(text: &str) -> bool {
    text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#')).is_some_and(|l| l.starts_with("n "))
}

/// Parses `family(a,b,...)`.
pub fn parse_generator(expr: &str) -> Option<Result<GeneratorSpec>> {
    let (name, rest) = expr.trim().split_once('(')?;
    let args = rest.strip_suffix(')')?;
    let nums: Result<Vec<u64>> = args
        .split(',')
        .map(|a| a.trim().parse::<u64>().with_context(|| format!("bad argument {a:?} in {expr:?}")))
        .collect();
    let spec = nums.and_then(|nums| {
        Ok(match (name.trim(), nums.as_slice()) {
            ("cycle", &[n]) => GeneratorSpec::Cycle { n: n as usize },
            ("sun", &[k]) => GeneratorSpec::Sun { k: k as usize },
            ("wheel", &[n]) => GeneratorSpec::Wheel { n: n as usize },
            ("random-outerplanar", &[n, chords, seed]) => {
                GeneratorSpec::RandomOuterplanar { n: n as usize, chords: chords as usize, seed }
            }
            _ => bail!("unknown generator expression {expr:?}"),
        })
    });
    Some(spec)
}

/// Loads a single graph. Files holding several graph6 lines yield the first.
pub fn load(input: &str) -> Result<Loaded> {
    let path = Path::new(input);
    if path.is_file() {
        let text = fs::read_to_string(path).with_context(|| format!("reading {input}"))?;
        let expected_z = expected_z_comment(&text);
        let graph = if looks_like_edge_list(&text) {
            Graph::from_edge_list(&text).with_context(|| format!("parsing edge list {input}"))?
        } else {
            let line = text
                .lines()
                .map(str::trim)
                .find(|l| !l.is_empty() && !l.starts_with('#'))
                .with_context(|| format!("{input} holds no graph"))?;
            let g6 = line.split_whitespace().next().unwrap_or(line);
            parse_graph6(g6).with_context(|| format!("parsing graph6 in {input}"))?
        };
        return Ok(Loaded { source: input.to_string(), graph, expected_z });
    }
    if let Some(spec) = parse_generator(input) {
        let (graph, _) = generate(&spec?)?;
        return Ok(Loaded { source: input.to_string(), graph, expected_z: None });
    }
    let graph = parse_graph6(input).with_context(|| format!("{input:?} is neither a file, a generator nor graph6"))?;
    Ok(Loaded { source: input.to_string(), graph, expected_z: None })
}

/// One entry of a batch corpus: a parsed graph or the reason it failed.
pub type CorpusEntry = (String, Result<Loaded, String>);

/// Reads a corpus: a file of graph6 lines (`<graph6> [expected Z] [name]`),
/// or a directory whose `*.edges` files are single graphs and whose other
/// files are graph6 line files. Directory entries are visited sorted by name.
pub fn load_corpus(path: &Path) -> Result<Vec<CorpusEntry>> {
    if path.is_dir() {
        let mut files: Vec<PathBuf> = fs::read_dir(path)
            .with_context(|| format!("listing {}", path.display()))?
            .map(|e| e.map(|e| e.path()))
            .collect::<Result<_, _>>()?;
        files.retain(|p| p.is_file());
        files.sort();
        let mut out = Vec::new();
        for file in files {
            if file.extension().is_some_and(|e| e == "edges") {
                let name = file.display().to_string();
                out.push((name.clone(), load(&name).map_err(|e| format!("{e:#}"))));
            } else {
                out.extend(graph6_lines(&file)?);
            }
        }
        return Ok(out);
    }
    graph6_lines(path)
}

fn graph6_lines(path: &Path) -> Result<Vec<CorpusEntry>> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .map(|(i, line)| {
            let source = format!("{}:{}", path.display(), i + 1);
            (source.clone(), parse_corpus_line(&source, line))
        })
        .collect())
}

fn parse_corpus_line(source: &str, line: &str) -> Result<Loaded, String> {
    let mut parts = line.split_whitespace();
    let g6 = parts.next().unwrap_or_default();
    let graph = parse_graph6(g6).map_err(|e| format!("{e}"))?;
    let expected_z = match parts.next() {
        Some(z) => Some(z.parse::<usize>().map_err(|e| format!("bad expected Z {z:?}: {e}"))?),
        None => None,
    };
    let name: Vec<&str> = parts.collect();
    let source = if name.is_empty() { source.to_string() } else { format!("{source} {}", name.join(" ")) };
    Ok(Loaded { source, graph, expected_z })
}
