//! `zforce`: zero forcing on 2-connected outerplanar graphs.

mod dot;
mod input;
mod report;

use std::collections::BTreeMap;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use zforce::bounds::{construct_strategy_zfs, RowStatus};
use zforce::fixtures::{expected_z_comment, FIXTURES};
use zforce::forcing::{zero_forcing_number_with_limit, DEFAULT_Z_LIMIT};
use zforce::{encode_graph6, generate, GeneratorSpec, Graph, Structure};

use dot::{to_dot, DotStyle};
use report::{status_text, Flags, Report};

#[derive(Parser)]
#[command(name = "zforce", version, about = "Zero forcing on 2-connected outerplanar graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyse one graph: a file, a generator such as `sun(8)`, or graph6.
    Analyze {
        input: String,
        /// Compute the exact zero forcing number (and path cover number).
        #[arg(long)]
        exact: bool,
        /// Run the leaf-seeding strategy.
        #[arg(long)]
        strategy: bool,
        #[arg(long)]
        json: bool,
        /// Largest n handed to the exact solver.
        #[arg(long, default_value_t = DEFAULT_Z_LIMIT)]
        max_n: usize,
    },
    /// Audit every graph of a corpus (graph6 lines or a directory).
    Batch {
        corpus: PathBuf,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = DEFAULT_Z_LIMIT)]
        max_n: usize,
        /// Skip the exact solvers.
        #[arg(long)]
        no_exact: bool,
    },
    /// Print generated graphs as graph6, one per line.
    Gen {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = 0)]
        chords: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of random graphs; graph i uses seed + i.
        #[arg(long, default_value_t = 1)]
        count: usize,
    },
    /// Write a Graphviz rendering to stdout.
    ExportDot {
        input: String,
        /// Fill a minimum zero forcing set and label the forcing order.
        #[arg(long)]
        color_zfs: bool,
        /// Colour foliage, trunk and boundary vertices.
        #[arg(long)]
        color_decomposition: bool,
        #[arg(long, default_value_t = DEFAULT_Z_LIMIT)]
        max_n: usize,
    },
    /// Check the solvers against graphs with known zero forcing numbers.
    Selftest {
        /// Directory of `.edges` files carrying `# z = <k>` comments.
        #[arg(long)]
        fixtures: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Cycle,
    Sun,
    Wheel,
    RandomOuterplanar,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Analyze { input, exact, strategy, json, max_n } => {
            let loaded = input::load(&input)?;
            // Neither flag means everything.
            let (exact, strategy) = if exact || strategy { (exact, strategy) } else { (true, true) };
            let r = Report::build(&loaded.source, &loaded.graph, loaded.expected_z, Flags { exact, strategy, max_n });
            if json {
                println!("{}", serde_json::to_string_pretty(&r)?);
            } else {
                print!("{}", r.to_text());
            }
            Ok(r.exit_code())
        }
        Command::Batch { corpus, json, max_n, no_exact } => batch(&corpus, json, max_n, !no_exact),
        Command::Gen { family, n, k, chords, seed, count } => {
            let need =
                |v: Option<usize>, flag: &str| v.with_context(|| format!("--{flag} is required for this family"));
            let specs: Vec<GeneratorSpec> = match family {
                Family::Cycle => vec![GeneratorSpec::Cycle { n: need(n, "n")? }],
                Family::Sun => vec![GeneratorSpec::Sun { k: need(k.or(n), "k")? }],
                Family::Wheel => vec![GeneratorSpec::Wheel { n: need(n, "n")? }],
                Family::RandomOuterplanar => {
                    let n = need(n, "n")?;
                    (0..count)
                        .map(|i| GeneratorSpec::RandomOuterplanar { n, chords, seed: seed.wrapping_add(i as u64) })
                        .collect()
                }
            };
            if count != 1 && !matches!(family, Family::RandomOuterplanar) {
                bail!("--count only applies to random-outerplanar");
            }
            let mut out = std::io::stdout().lock();
            for spec in specs {
                let (g, _) = generate(&spec)?;
                writeln!(out, "{}", encode_graph6(&g)?)?;
            }
            Ok(0)
        }
        Command::ExportDot { input, color_zfs, color_decomposition, max_n } => {
            let loaded = input::load(&input)?;
            print!("{}", export_dot(&loaded.graph, color_zfs, color_decomposition, max_n)?);
            Ok(0)
        }
        Command::Selftest { fixtures } => selftest(fixtures),
    }
}

fn export_dot(g: &Graph, color_zfs: bool, color_decomposition: bool, max_n: usize) -> Result<String> {
    let structure = Structure::analyze(g).ok();
    if color_decomposition && structure.is_none() {
        bail!("cannot colour the decomposition: the graph is not 2-connected outerplanar");
    }
    // The exact minimum when affordable, the strategy set otherwise.
    let cert = if !color_zfs {
        None
    } else {
        match zero_forcing_number_with_limit(g, max_n) {
            Ok((_, cert)) => Some(cert),
            Err(e) => match &structure {
                Some(s) => Some(construct_strategy_zfs(g, s)?.certificate),
                None => return Err(e.into()),
            },
        }
    };
    let pairs = cert.as_ref().map(|c| c.chronicle.pairs()).unwrap_or_default();
    let style = DotStyle {
        zfs: cert.as_ref().map(|c| (c.initial.members(), pairs.as_slice())),
        structure: structure.as_ref().filter(|_| color_decomposition),
    };
    Ok(to_dot(g, &style))
}

#[derive(Serialize)]
struct BatchSummary {
    graphs: usize,
    passed: usize,
    failed: usize,
    /// Not 2-connected outerplanar; these do not affect the exit status.
    declined: usize,
    parse_errors: Vec<String>,
    expected_mismatches: Vec<String>,
    /// Row id to count per status.
    rows: BTreeMap<String, BTreeMap<&'static str, usize>>,
}

#[derive(Serialize)]
struct BatchOutput {
    reports: Vec<Report>,
    summary: BatchSummary,
}

fn batch(corpus: &std::path::Path, json: bool, max_n: usize, exact: bool) -> Result<u8> {
    let entries = input::load_corpus(corpus)?;
    let flags = Flags { exact, strategy: true, max_n };
    let results: Vec<Result<Report, String>> = entries
        .par_iter()
        .map(|(source, loaded)| match loaded {
            Ok(l) => Ok(Report::build(&l.source, &l.graph, l.expected_z, flags)),
            Err(e) => Err(format!("{source}: {e}")),
        })
        .collect();

    let mut summary = BatchSummary {
        graphs: 0,
        passed: 0,
        failed: 0,
        declined: 0,
        parse_errors: Vec::new(),
        expected_mismatches: Vec::new(),
        rows: BTreeMap::new(),
    };
    let mut reports = Vec::new();
    for r in results {
        let r = match r {
            Ok(r) => r,
            Err(e) => {
                summary.parse_errors.push(e);
                continue;
            }
        };
        summary.graphs += 1;
        if r.expected_z.as_ref().is_some_and(|e| e.matches == Some(false)) {
            summary.expected_mismatches.push(r.source.clone());
        }
        if !r.passed {
            summary.failed += 1;
        } else if !r.outerplanar.ok {
            summary.declined += 1;
        } else {
            summary.passed += 1;
        }
        for row in &r.audit {
            *summary.rows.entry(row.id.clone()).or_default().entry(status_text(row.status)).or_default() += 1;
        }
        if !json {
            let verdict = match r.exit_code() {
                0 => "pass".to_string(),
                1 => format!("declined ({})", r.outerplanar.reason.as_deref().unwrap_or_default()),
                _ => {
                    let failing: Vec<&str> =
                        r.audit.iter().filter(|x| x.status == RowStatus::Fail).map(|x| x.id.as_str()).collect();
                    let mut why = failing.join(",");
                    if r.expected_z.as_ref().is_some_and(|e| e.matches == Some(false)) {
                        if !why.is_empty() {
                            why.push(',');
                        }
                        why.push_str("expected-z");
                    }
                    format!("FAIL ({why})")
                }
            };
            let z = r.zero_forcing.as_ref().and_then(|z| z.value).map_or("-".to_string(), |z| z.to_string());
            println!("{:<40} n={:<3} Z={:<3} {verdict}", r.source, r.n, z);
        }
        reports.push(r);
    }

    let code = if summary.failed > 0 {
        2
    } else if !summary.parse_errors.is_empty() {
        1
    } else {
        0
    };
    if json {
        println!("{}", serde_json::to_string_pretty(&BatchOutput { reports, summary })?);
    } else {
        println!(
            "\n{} graphs: {} passed, {} failed, {} declined, {} parse errors",
            summary.graphs,
            summary.passed,
            summary.failed,
            summary.declined,
            summary.parse_errors.len()
        );
        for (id, counts) in &summary.rows {
            let parts: Vec<String> = counts.iter().map(|(s, c)| format!("{s} {c}")).collect();
            println!("  {id:<14} {}", parts.join(", "));
        }
        for e in &summary.parse_errors {
            eprintln!("parse error: {e}");
        }
    }
    Ok(code)
}

fn selftest(dir: Option<PathBuf>) -> Result<u8> {
    let mut cases: Vec<(String, Graph, usize)> = Vec::new();
    match dir {
        None => cases.extend(FIXTURES.iter().map(|f| (f.name.to_string(), f.graph(), f.expected_z))),
        Some(dir) => {
            let mut files: Vec<PathBuf> = std::fs::read_dir(&dir)
                .with_context(|| format!("listing {}", dir.display()))?
                .map(|e| e.map(|e| e.path()))
                .collect::<Result<_, _>>()?;
            files.retain(|p| p.extension().is_some_and(|e| e == "edges"));
            files.sort();
            for f in files {
                let text = std::fs::read_to_string(&f)?;
                let z = expected_z_comment(&text).with_context(|| format!("{} has no `# z =` line", f.display()))?;
                let g = Graph::from_edge_list(&text).with_context(|| format!("parsing {}", f.display()))?;
                cases.push((f.display().to_string(), g, z));
            }
        }
    }
    let mut failures = 0;
    for (name, g, expected) in &cases {
        let got = zero_forcing_number_with_limit(g, g.vertex_count().max(DEFAULT_Z_LIMIT));
        let ok = matches!(&got, Ok((z, _)) if z == expected);
        failures += usize::from(!ok);
        let got = got.map_or_else(|e| e.to_string(), |(z, _)| z.to_string());
        println!("{:<5} {name:<40} Z = {got} (expected {expected})", if ok { "ok" } else { "FAIL" });
    }
    for k in 3..=8 {
        let (g, _) = generate(&GeneratorSpec::Sun { k })?;
        let r = Report::build(&format!("sun({k})"), &g, Some(k), Flags { exact: true, strategy: true, max_n: 16 });
        let b = r.bounds.as_ref().context("sun graphs are outerplanar")?;
        let ok = r.passed && b.lower == k && b.effective_upper == k;
        failures += usize::from(!ok);
        let name = format!("sun({k})");
        println!("{:<5} {name:<40} n_l = {}, upper = {}", if ok { "ok" } else { "FAIL" }, b.lower, b.effective_upper);
    }
    Ok(if failures == 0 { 0 } else { 2 })
}
