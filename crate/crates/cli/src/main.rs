//! Command-line frontend: check and orient facet files, enumerate
//! relations, search for positive Plücker tree certificates, verify
//! certificate files, generate shipped datasets, and run numeric vanishing
//! tests.

use std::path::{Path, PathBuf};
use std::time::Duration;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand};

use pluckertree::certificate::{adopt_orientation, verify, CertificateFile, MetaSpec};
use pluckertree::complex::{orient, Complex, OrientedComplex, PseudomanifoldClass};
use pluckertree::content_hash;
use pluckertree::generators;
use pluckertree::gpgraph::{BuildOptions, GpGraph};
use pluckertree::plucker::{enumerate_relations, EnumerationOptions};
use pluckertree::search::{search_certificate, SearchLimits, SolveOutcome};
use pluckertree::solids::SolidTable;

const TOOL: &str = concat!("pluckertree ", env!("CARGO_PKG_VERSION"));

#[derive(Parser)]
#[command(name = "pluckertree", version, about = "Positive Plücker tree certificates for non-realizability")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a facet file: purity, pseudomanifold class, orientability,
    /// f-vector. Exit code 0 iff the complex is an orientable
    /// pseudomanifold.
    Check { facet_file: PathBuf },
    /// Print an orientation of the complex as a signed facet list.
    Orient { facet_file: PathBuf },
    /// Count admissible signed relations and print a sample.
    Relations {
        facet_file: PathBuf,
        /// Forbidden-facet file; solids they determine count as unknown.
        #[arg(long)]
        forbidden: Option<PathBuf>,
        /// How many relations to print.
        #[arg(long, default_value_t = 5)]
        sample: usize,
    },
    /// Search for a minimum positive Plücker tree certificate.
    Search {
        facet_file: PathBuf,
        /// Forbidden-facet file; the certificate must avoid them.
        #[arg(long)]
        forbidden: Option<PathBuf>,
        /// Largest tree size to consider.
        #[arg(long, default_value_t = 8)]
        max_size: usize,
        /// Time budget in seconds.
        #[arg(long, default_value_t = 600)]
        time_limit: u64,
        /// Random seed for the verification sampling.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Exhaust all smaller sizes before accepting (default); pass
        /// --prove-optimal=false to return the first certificate found.
        #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
        prove_optimal: bool,
        /// Write the verified certificate to this file.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Verify a certificate file against a facet file, printing one
    /// verdict per check.
    Verify {
        facet_file: PathBuf,
        certificate_file: PathBuf,
        /// Override the certificate's forbidden-facet list.
        #[arg(long)]
        forbidden: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Write the shipped datasets (and forbidden lists) as facet files.
    Generate {
        /// Target directory; defaults to $PLUCKERTREE_DATA_DIR or ./data.
        #[arg(long)]
        dir: Option<PathBuf>,
        /// Also generate the Novik-Zheng 4-sphere for this n.
        #[arg(long)]
        novik_zheng: Option<i32>,
    },
    /// Evaluate a certificate's final polynomial on random rational
    /// configurations; every value must be exactly zero.
    Eval {
        facet_file: PathBuf,
        certificate_file: PathBuf,
        #[arg(long, default_value_t = 10)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load_oriented(path: &Path) -> Result<OrientedComplex> {
    let text = read(path)?;
    OrientedComplex::from_text(&text).map_err(|e| anyhow!("{}: {e}", path.display()))
}

fn load_forbidden(cx: &OrientedComplex, path: &Path) -> Result<Vec<Vec<pluckertree::Vertex>>> {
    let text = read(path)?;
    generators::parse_forbidden(cx, &text).map_err(|e| anyhow!("{}: {e}", path.display()))
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            std::process::exit(2);
        }
    }
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Check { facet_file } => cmd_check(&facet_file),
        Command::Orient { facet_file } => {
            let cx = load_oriented(&facet_file)?;
            print!("{cx}");
            Ok(0)
        }
        Command::Relations {
            facet_file,
            forbidden,
            sample,
        } => cmd_relations(&facet_file, forbidden.as_deref(), sample),
        Command::Search {
            facet_file,
            forbidden,
            max_size,
            time_limit,
            seed,
            prove_optimal,
            output,
        } => cmd_search(
            &facet_file,
            forbidden.as_deref(),
            SearchLimits {
                max_nodes: max_size,
                time_limit: Duration::from_secs(time_limit),
                prove_optimal,
                seed,
                strict_first: true,
            },
            output.as_deref(),
        ),
        Command::Verify {
            facet_file,
            certificate_file,
            forbidden,
            seed,
        } => cmd_verify(&facet_file, &certificate_file, forbidden.as_deref(), seed),
        Command::Generate { dir, novik_zheng } => cmd_generate(dir, novik_zheng),
        Command::Eval {
            facet_file,
            certificate_file,
            trials,
            seed,
        } => cmd_eval(&facet_file, &certificate_file, trials, seed),
    }
}

fn cmd_check(path: &Path) -> Result<i32> {
    let text = read(path)?;
    let (cx, printed) = match Complex::from_text(&text) {
        Ok(v) => v,
        Err(e) => {
            println!("invalid: {e}");
            return Ok(1);
        }
    };
    let class = match cx.pseudomanifold_check() {
        Ok(c) => c,
        Err(e) => {
            println!("not a pseudomanifold: {e}");
            return Ok(1);
        }
    };
    let class_desc = match &class {
        PseudomanifoldClass::Closed => "closed".to_owned(),
        PseudomanifoldClass::WithBoundary(comps) => {
            format!("with boundary ({} component(s))", comps.len())
        }
    };
    let fvec = cx
        .f_vector()
        .iter()
        .map(|n| n.to_string())
        .collect::<Vec<_>>()
        .join(", ");
    match orient(&cx) {
        Ok(o) => {
            let printed_ok = printed
                .as_ref()
                .map(|signs| pluckertree::complex::check_cycle(&cx, signs));
            println!(
                "{} orientable pseudomanifold, {} vertices, {} facets, f = ({fvec})",
                class_desc,
                cx.n(),
                cx.facets().len()
            );
            if o.disconnected {
                println!("note: dual graph disconnected; components oriented separately");
            }
            match printed_ok {
                Some(true) => println!("printed signs form a valid orientation"),
                Some(false) => {
                    println!("printed signs do NOT form an orientation");
                    return Ok(1);
                }
                None => {}
            }
            Ok(0)
        }
        Err(e) => {
            println!(
                "{} pseudomanifold, {} vertices, {} facets, f = ({fvec}); not orientable: {e}",
                class_desc,
                cx.n(),
                cx.facets().len()
            );
            Ok(1)
        }
    }
}

fn cmd_relations(path: &Path, forbidden: Option<&Path>, sample: usize) -> Result<i32> {
    let cx = load_oriented(path)?;
    let forb = match forbidden {
        Some(p) => load_forbidden(&cx, p)?,
        None => vec![],
    };
    let st = SolidTable::new(&cx, &forb)?;
    let rels = enumerate_relations(&st, &EnumerationOptions::default());
    println!("{} admissible signed relations", rels.len());
    for r in rels.iter().take(sample) {
        println!("  {}", r.render(&st));
    }
    Ok(0)
}

fn cmd_search(
    path: &Path,
    forbidden: Option<&Path>,
    limits: SearchLimits,
    output: Option<&Path>,
) -> Result<i32> {
    let text = read(path)?;
    let cx = OrientedComplex::from_text(&text).map_err(|e| anyhow!("{}: {e}", path.display()))?;
    let forb = match forbidden {
        Some(p) => load_forbidden(&cx, p)?,
        None => vec![],
    };
    let forb_tokens: Option<Vec<Vec<String>>> = if forb.is_empty() {
        None
    } else {
        Some(
            forb.iter()
                .map(|f| {
                    f.iter()
                        .map(|&v| cx.vertices().label(v).to_owned())
                        .collect()
                })
                .collect(),
        )
    };
    let st = SolidTable::new(&cx, &forb)?;
    let graph = GpGraph::build(&st, &BuildOptions::default());
    eprintln!(
        "graph: {} nodes over {} solids",
        graph.nodes().len(),
        st.len()
    );
    let seed = limits.seed;
    let report = search_certificate(&graph, &limits);
    match (&report.outcome, &report.certificate) {
        (SolveOutcome::Optimal(sel) | SolveOutcome::Feasible(sel), Some(cert)) => {
            let status = report.outcome.status_name();
            println!(
                "certificate found: {} relations, status {status}{}",
                sel.nodes.len(),
                if report.proven_minimal {
                    " (proven minimal)"
                } else {
                    ""
                }
            );
            for r in &cert.tree.nodes {
                println!("  {}", r.render(&st));
            }
            let name = path
                .file_name()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| "complex".to_owned());
            let file = CertificateFile::from_certificate(
                &st,
                cert,
                &name,
                &content_hash(&text),
                forb_tokens,
                MetaSpec {
                    tool: TOOL.to_owned(),
                    seed,
                    solver: status.to_owned(),
                },
            );
            // Verification gate before anything is written.
            let verdict = verify(&text, &file, seed);
            if !verdict.passed() {
                let failed = verdict
                    .first_failure()
                    .map(|c| c.name)
                    .unwrap_or("unknown");
                bail!("internal error: found certificate fails verification at `{failed}`");
            }
            println!("verification: all checks pass");
            if let Some(out) = output {
                std::fs::write(out, file.to_json())
                    .with_context(|| format!("writing {}", out.display()))?;
                println!("wrote {}", out.display());
            }
            Ok(0)
        }
        (outcome, _) => {
            println!(
                "no certificate: {} (sizes tried: 1..={}, rejected candidates: {})",
                outcome.status_name(),
                limits.max_nodes,
                report.rejected_nonpositive
            );
            Ok(1)
        }
    }
}

fn cmd_verify(
    facet_path: &Path,
    cert_path: &Path,
    forbidden: Option<&Path>,
    seed: u64,
) -> Result<i32> {
    let text = read(facet_path)?;
    let mut file = CertificateFile::from_json(&read(cert_path)?)
        .map_err(|e| anyhow!("{}: {e}", cert_path.display()))?;
    if let Some(p) = forbidden {
        let (cx, _) = Complex::from_text(&text)?;
        let ftext = read(p)?;
        let toks: Vec<Vec<String>> = ftext
            .lines()
            .filter_map(|l| {
                let l = l.split('#').next().unwrap_or("");
                let toks: Vec<&str> = l.split_whitespace().collect();
                let toks = if toks.first().is_some_and(|t| *t == "+" || *t == "-") {
                    &toks[1..]
                } else {
                    &toks[..]
                };
                if toks.is_empty() {
                    None
                } else {
                    Some(toks.iter().map(|s| s.to_string()).collect())
                }
            })
            .collect();
        let _ = cx;
        file.forbidden = Some(toks);
    }
    let report = verify(&text, &file, seed);
    for check in &report.checks {
        println!(
            "[{}] {}: {}",
            if check.passed { "pass" } else { "FAIL" },
            check.name,
            check.detail
        );
    }
    if report.passed() {
        // Render the certificate the way the final polynomials are
        // printed: signed bracket monomials over normal forms.
        if let Ok((cx, _)) = Complex::from_text(&text) {
            if let Ok(oc) = adopt_orientation(&cx, &file) {
                let forb = file
                    .forbidden
                    .as_ref()
                    .map(|lists| {
                        lists
                            .iter()
                            .filter_map(|toks| {
                                toks.iter()
                                    .map(|t| oc.vertices().lookup(t))
                                    .collect::<Result<Vec<_>, _>>()
                                    .ok()
                                    .map(|mut f| {
                                        f.sort_unstable();
                                        f
                                    })
                            })
                            .collect::<Vec<_>>()
                    })
                    .unwrap_or_default();
                if let Ok(st) = SolidTable::new(&oc, &forb) {
                    if let Ok(stored) = file.stored_final(&st) {
                        println!("final polynomial:");
                        println!("  {}", stored.render(&st));
                    }
                }
            }
        }
        println!("certificate valid: the complex admits no convex realization");
        Ok(0)
    } else {
        let failed = report.first_failure().map(|c| c.name).unwrap_or("unknown");
        println!("certificate INVALID (first failing check: {failed})");
        Ok(1)
    }
}

fn cmd_generate(dir: Option<PathBuf>, novik_zheng: Option<i32>) -> Result<i32> {
    let dir = dir
        .or_else(|| std::env::var_os("PLUCKERTREE_DATA_DIR").map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("data"));
    std::fs::create_dir_all(&dir).with_context(|| format!("creating {}", dir.display()))?;
    for ds in generators::catalog() {
        let path = dir.join(format!("{}.fct", ds.name));
        std::fs::write(&path, &ds.text)?;
        println!("wrote {}", path.display());
    }
    for name in ["jockusch-d3-6", "novik-zheng-d4-7"] {
        let path = dir.join(format!("forbidden-{name}.fct"));
        std::fs::write(&path, generators::forbidden_list(name)?)?;
        println!("wrote {}", path.display());
    }
    if let Some(n) = novik_zheng {
        let nz = generators::novik_zheng_d4(n).map_err(|e| anyhow!(e))?;
        let sphere = dir.join(format!("novik-zheng-d4-{n}.fct"));
        std::fs::write(&sphere, &nz.sphere)?;
        println!("wrote {} ({} facets)", sphere.display(), nz.facet_count);
        let ball = dir.join(format!("forbidden-novik-zheng-d4-{n}.fct"));
        std::fs::write(&ball, &nz.forbidden)?;
        println!("wrote {}", ball.display());
    }
    Ok(0)
}

fn cmd_eval(facet_path: &Path, cert_path: &Path, trials: usize, seed: u64) -> Result<i32> {
    let text = read(facet_path)?;
    let file = CertificateFile::from_json(&read(cert_path)?)
        .map_err(|e| anyhow!("{}: {e}", cert_path.display()))?;
    let (cx, _) = Complex::from_text(&text)?;
    let oc = adopt_orientation(&cx, &file).map_err(|e| anyhow!(e))?;
    let forb = file
        .forbidden
        .as_ref()
        .map(|lists| {
            lists
                .iter()
                .map(|toks| {
                    let mut f = toks
                        .iter()
                        .map(|t| oc.vertices().lookup(t))
                        .collect::<Result<Vec<_>, _>>()?;
                    f.sort_unstable();
                    Ok(f)
                })
                .collect::<Result<Vec<_>, pluckertree::complex::ComplexError>>()
        })
        .transpose()?
        .unwrap_or_default();
    let st = SolidTable::new(&oc, &forb)?;
    let poly = file.stored_final(&st)?;
    match pluckertree::plucker::vanishing_trials(&st, &poly, trials, seed)? {
        None => {
            println!("exactly zero on {trials} random rational configurations");
            Ok(0)
        }
        Some((t, v)) => {
            println!("trial {t}: value {v} (expected 0)");
            Ok(1)
        }
    }
}
