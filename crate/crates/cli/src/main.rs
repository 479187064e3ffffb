use std::fs;
use std::io::{self, IsTerminal, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use polycert::classify::{classify_quasi, classify_ramified};
use polycert::cohomology::{reduced_cohomology, relative_cohomology};
use polycert::construct::{barycentric_subdivision, staircase_product, suspension};
use polycert::generate::generate;
use polycert::io::{
    parse_facets, render_cohomology, render_quasi, render_ramified, serialize_facets,
    serialize_facets_json, AnalysisReport, CertificateSection, CohomologySection, QuasiSection,
    RamifiedSection, SCHEMA_VERSION,
};
use polycert::obstruction::{curve_product_obstruction, Verdict};
use polycert::SimplicialComplex;
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "polycert",
    version,
    about = "Analyze finite simplicial complexes and certify non-embeddability in products of curves"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full report: summary, cohomology, quasi and ramified classification.
    Analyze {
        /// Facet-list file.
        #[arg(required_unless_present = "batch", conflicts_with = "batch")]
        file: Option<PathBuf>,
        /// Analyze every regular file in a directory, in name order.
        #[arg(long)]
        batch: Option<PathBuf>,
        /// Also run the obstruction for this many curves.
        #[arg(long)]
        curves: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Per-face quasi-manifold and ramified classification.
    Classify {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Reduced cohomology, or relative cohomology of a pair.
    Cohomology {
        file: PathBuf,
        /// Subcomplex file; its vertices are matched by label.
        #[arg(long)]
        relative: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Non-embeddability test for a product of curves.
    Obstruct {
        file: PathBuf,
        #[arg(long)]
        curves: usize,
        /// Exit with status 1 unless the verdict is NotEmbeddable.
        #[arg(long)]
        expect_certificate: bool,
        #[arg(long)]
        json: bool,
    },
    /// Write the suspension of a complex.
    Suspend {
        file: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Write the barycentric subdivision of a complex.
    Subdivide {
        file: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Write the staircase triangulation of a product.
    Product {
        first: PathBuf,
        second: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Write a named complex, e.g. `sphere_boundary:3`, `torus7`, `wedge_spheres:2,2`.
    Generate {
        name: String,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args)]
struct Output {
    /// Destination; `-` writes to stdout, a `.json` suffix selects the JSON form.
    #[arg(short = 'o', long = "output")]
    path: PathBuf,
}

struct Style {
    color: bool,
}

impl Style {
    fn detect() -> Self {
        let suppressed = std::env::var_os("NO_COLOR").is_some_and(|v| !v.is_empty());
        Self {
            color: !suppressed && io::stdout().is_terminal(),
        }
    }

    fn paint(&self, text: &str) -> String {
        if !self.color {
            return text.to_string();
        }
        text.lines()
            .map(|line| {
                let code = if line.starts_with("verdict: NotEmbeddable") {
                    Some("32")
                } else if line.starts_with("verdict: ") || line.contains("[FAIL]") {
                    Some("33")
                } else {
                    None
                };
                match code {
                    Some(c) => format!("\x1b[{c}m{line}\x1b[0m\n"),
                    None => format!("{line}\n"),
                }
            })
            .collect()
    }
}

#[derive(Serialize)]
struct ClassifyOutput {
    schema_version: u32,
    quasi: QuasiSection,
    ramified: RamifiedSection,
}

#[derive(Serialize)]
struct CohomologyOutput {
    schema_version: u32,
    cohomology: CohomologySection,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command, &Style::detect()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

struct Loaded {
    name: Option<String>,
    complex: SimplicialComplex,
}

fn load(path: &Path) -> Result<Loaded> {
    let text =
        fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let doc = parse_facets(&text).with_context(|| format!("cannot parse {}", path.display()))?;
    for w in &doc.warnings {
        eprintln!("warning: {}: {w}", path.display());
    }
    Ok(Loaded {
        name: doc.name,
        complex: doc.complex,
    })
}

fn display_name(loaded: &Loaded, path: &Path) -> String {
    loaded
        .name
        .clone()
        .unwrap_or_else(|| path.display().to_string())
}

fn print(text: &str) -> Result<()> {
    let mut out = io::stdout().lock();
    out.write_all(text.as_bytes())?;
    out.flush()?;
    Ok(())
}

fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

fn write_complex(k: &SimplicialComplex, name: Option<&str>, out: &Output) -> Result<()> {
    let is_json = out.path.extension().is_some_and(|e| e == "json");
    let text = if is_json {
        serialize_facets_json(k, name)
    } else {
        serialize_facets(k, name)
    };
    if out.path.as_os_str() == "-" {
        print(&text)
    } else {
        fs::write(&out.path, text).with_context(|| format!("cannot write {}", out.path.display()))
    }
}

fn run(command: Command, style: &Style) -> Result<ExitCode> {
    match command {
        Command::Analyze {
            file,
            batch,
            curves,
            json,
        } => match (file, batch) {
            (Some(file), None) => {
                let loaded = load(&file)?;
                let name = display_name(&loaded, &file);
                let report = AnalysisReport::build(&loaded.complex, Some(&name), curves)?;
                if json {
                    print(&report.to_json())?;
                } else {
                    print(&style.paint(&report.render_text()))?;
                }
                Ok(ExitCode::SUCCESS)
            }
            (None, Some(dir)) => analyze_batch(&dir, curves, json, style),
            _ => bail!("give either a file or --batch <dir>"),
        },
        Command::Classify { file, json } => {
            let loaded = load(&file)?;
            let k = &loaded.complex;
            let quasi = QuasiSection::of(k, &classify_quasi(k)?);
            let ramified = RamifiedSection::of(k, &classify_ramified(k)?);
            if json {
                print(&to_json(&ClassifyOutput {
                    schema_version: SCHEMA_VERSION,
                    quasi,
                    ramified,
                })?)?;
            } else {
                let mut text = render_quasi(&quasi);
                text.push_str(&render_ramified(&ramified));
                print(&style.paint(&text))?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Cohomology {
            file,
            relative,
            json,
        } => {
            let loaded = load(&file)?;
            let profile = match relative {
                Some(sub) => {
                    let l = load(&sub)?;
                    relative_cohomology(&loaded.complex, &l.complex)
                        .with_context(|| format!("{} is not a subcomplex", sub.display()))?
                }
                None => reduced_cohomology(&loaded.complex)?,
            };
            let section = CohomologySection::of(&profile);
            if json {
                print(&to_json(&CohomologyOutput {
                    schema_version: SCHEMA_VERSION,
                    cohomology: section,
                })?)?;
            } else {
                print(&render_cohomology(&section))?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Obstruct {
            file,
            curves,
            expect_certificate,
            json,
        } => {
            let loaded = load(&file)?;
            let cert = curve_product_obstruction(&loaded.complex, curves);
            if json {
                let name = display_name(&loaded, &file);
                let mut report = AnalysisReport::build(&loaded.complex, Some(&name), None)?;
                report.obstruction = Some(CertificateSection::of(&cert));
                print(&report.to_json())?;
            } else {
                print(&style.paint(&CertificateSection::of(&cert).render_text()))?;
            }
            if expect_certificate && cert.verdict == Verdict::Inconclusive {
                eprintln!("no certificate: the obstruction is inconclusive");
                return Ok(ExitCode::from(1));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Suspend { file, out } => {
            let loaded = load(&file)?;
            let name = loaded.name.as_ref().map(|n| format!("suspension of {n}"));
            write_complex(&suspension(&loaded.complex), name.as_deref(), &out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Subdivide { file, out } => {
            let loaded = load(&file)?;
            let name = loaded.name.as_ref().map(|n| format!("subdivision of {n}"));
            let sd = barycentric_subdivision(&loaded.complex)?;
            write_complex(&sd.complex, name.as_deref(), &out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Product { first, second, out } => {
            let a = load(&first)?;
            let b = load(&second)?;
            let name = match (&a.name, &b.name) {
                (Some(x), Some(y)) => Some(format!("{x} x {y}")),
                _ => None,
            };
            let p = staircase_product(&a.complex, &b.complex)?;
            write_complex(&p, name.as_deref(), &out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Generate { name, out } => {
            let k = generate(&name)?;
            write_complex(&k, Some(&name), &out)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn analyze_batch(dir: &Path, curves: Option<usize>, json: bool, style: &Style) -> Result<ExitCode> {
    let mut paths: Vec<PathBuf> = fs::read_dir(dir)
        .with_context(|| format!("cannot read directory {}", dir.display()))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file())
        .collect();
    paths.sort();
    let mut reports = Vec::new();
    let mut failures = 0;
    for path in &paths {
        let result = load(path).and_then(|loaded| {
            let name = display_name(&loaded, path);
            Ok(AnalysisReport::build(&loaded.complex, Some(&name), curves)?)
        });
        match result {
            Ok(report) => reports.push(report),
            Err(e) => {
                eprintln!("error: {e:#}");
                failures += 1;
            }
        }
    }
    if json {
        print(&to_json(&reports)?)?;
    } else {
        let text: String = reports
            .iter()
            .map(|r| r.render_text())
            .collect::<Vec<_>>()
            .join("\n");
        print(&style.paint(&text))?;
    }
    Ok(if failures > 0 {
        ExitCode::from(2)
    } else {
        ExitCode::SUCCESS
    })
}
