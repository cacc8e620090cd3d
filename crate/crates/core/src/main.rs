use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use cover_classify::classify::{classify_full, ClassificationReport, Settings};
use cover_classify::constructions::{
    complete, complete_bipartite, cycle, path, pendant_all, pendant_g01_isolated, random_bipartite,
    random_graph,
};
use cover_classify::cover::{
    enumerate_basic_covers, enumerate_bounded_covers, indecomposable_2covers, Budget, Cover,
};
use cover_classify::graph::{parse_graph, serialize_graph, Graph, GraphFormat, MAX_VERTICES};
use cover_classify::suite::{run_suite, SuiteConfig, SuiteReport};
use cover_classify::Error;

#[derive(Debug, Parser)]
#[command(
    name = "cover-classify",
    version,
    about = "Classify graphs through their basic k-covers"
)]
struct Cli {
    /// Graph format for input and output.
    #[arg(long, global = true, default_value = "edge-list", value_parser = parse_format)]
    format: GraphFormat,

    /// Largest level for the bounded norm checks.
    #[arg(long, global = true, default_value_t = 3)]
    k_max: u32,

    /// Node limit for exhaustive cover searches.
    #[arg(long, global = true, default_value_t = Budget::default().0)]
    budget: u64,

    /// Also print a human-readable summary on stderr.
    #[arg(long, global = true)]
    pretty: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Full classification report as JSON.
    Classify {
        /// Graph file; stdin when absent or `-`.
        input: Option<PathBuf>,
    },
    /// Enumerate k-covers as JSON.
    Covers {
        input: Option<PathBuf>,
        #[arg(long)]
        k: u32,
        /// Only basic covers (otherwise every k-cover with prices in 0..=k).
        #[arg(long)]
        basic_only: bool,
        /// Only indecomposable basic 2-covers; requires --k 2.
        #[arg(long)]
        indecomposable: bool,
    },
    /// Generators of a symbolic power of the cover ideal.
    Ideal {
        input: Option<PathBuf>,
        #[arg(long)]
        power: u32,
        /// Render monomials as `x1^2*x3` strings as well.
        #[arg(long)]
        monomial_strings: bool,
    },
    /// Build a graph from a family or a pendant construction.
    Construct(ConstructArgs),
    /// Run the property suite.
    Suite {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        samples: usize,
    },
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("mode").required(true).args(["family", "plus", "prime"])))]
struct ConstructArgs {
    /// Input graph for --plus / --prime.
    input: Option<PathBuf>,
    /// cycle, path, complete, complete-bipartite, random, random-bipartite
    #[arg(long)]
    family: Option<String>,
    /// Attach a pendant to every vertex.
    #[arg(long)]
    plus: bool,
    /// Attach pendants at the vertices isolated in the derived 0-1 graph.
    #[arg(long)]
    prime: bool,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    a: Option<usize>,
    #[arg(long)]
    b: Option<usize>,
    /// Edge probability for random families.
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

fn parse_format(s: &str) -> Result<GraphFormat, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

enum Failure {
    Input(String),
    Consistency(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Consistency(_) => Failure::Consistency(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Consistency(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let settings = Settings {
        k_max: cli.k_max,
        budget: Budget(cli.budget),
        ..Settings::default()
    };
    match &cli.command {
        Command::Classify { input } => {
            let g = read_graph(input, cli.format)?;
            let report = classify_full(&g, &settings)?;
            emit(&report)?;
            if cli.pretty {
                pretty_report(&report);
            }
            if !report.consistent {
                return Err(Failure::Consistency(
                    "classification conditions disagree".into(),
                ));
            }
            Ok(())
        }
        Command::Covers {
            input,
            k,
            basic_only,
            indecomposable,
        } => {
            if *indecomposable && *k != 2 {
                return Err(Failure::Input("--indecomposable requires --k 2".into()));
            }
            if *k == 0 {
                return Err(Failure::Input("--k must be at least 1".into()));
            }
            let g = read_graph(input, cli.format)?;
            let set = if *indecomposable {
                indecomposable_2covers(&g, settings.budget)?
            } else if *basic_only {
                enumerate_basic_covers(&g, *k, settings.budget)?
            } else {
                enumerate_bounded_covers(&g, *k, settings.budget)?
            };
            emit(&set)?;
            if cli.pretty {
                eprintln!("{} covers at level {k}", set.len());
                for c in &set {
                    eprintln!("  {:?}", c.prices);
                }
            }
            Ok(())
        }
        Command::Ideal {
            input,
            power,
            monomial_strings,
        } => {
            if *power == 0 {
                return Err(Failure::Input("--power must be at least 1".into()));
            }
            let g = read_graph(input, cli.format)?;
            if !g.has_edges() {
                return Err(Failure::Input(
                    "the cover ideal needs a graph with an edge".into(),
                ));
            }
            let set = enumerate_basic_covers(&g, *power, settings.budget)?;
            let degrees = set.norms();
            let generators: Vec<&Vec<u32>> = set.iter().map(|c| &c.prices).collect();
            let mut out = json!({
                "power": power,
                "degrees": degrees,
                "generators": generators,
                "single_degree": degrees.first() == degrees.last(),
            });
            if *power == 1 {
                out["edge_generators"] = json!(g.edges());
            }
            if *monomial_strings {
                out["monomials"] = json!(set.iter().map(monomial).collect::<Vec<_>>());
                if *power == 1 {
                    let edge_monomials: Vec<String> = g
                        .edges()
                        .iter()
                        .map(|(u, v)| format!("x{u}*x{v}"))
                        .collect();
                    out["edge_monomials"] = json!(edge_monomials);
                }
            }
            emit(&out)?;
            if cli.pretty {
                eprintln!("{} generators, degrees {:?}", set.len(), degrees);
            }
            Ok(())
        }
        Command::Construct(args) => {
            let g = construct(args, cli.format)?;
            print!("{}", serialize_graph(&g, cli.format));
            Ok(())
        }
        Command::Suite {
            max_n,
            seed,
            samples,
        } => {
            let report = run_suite(&SuiteConfig {
                max_n: *max_n,
                seed: *seed,
                samples: *samples,
                settings,
            })?;
            emit(&report)?;
            if cli.pretty {
                pretty_suite(&report);
            }
            for failed in report.properties.iter().filter(|p| !p.passed) {
                eprintln!(
                    "FAIL {}\n{}",
                    failed.name,
                    failed.counterexample.as_deref().unwrap_or("")
                );
            }
            if report.passed() {
                Ok(())
            } else {
                Err(Failure::Consistency("property suite failed".into()))
            }
        }
    }
}

fn read_graph(input: &Option<PathBuf>, format: GraphFormat) -> Result<Graph, Failure> {
    let text = match input {
        Some(path) if path.as_os_str() != "-" => fs::read_to_string(path)
            .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?,
        _ => {
            let mut buf = String::new();
            io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Failure::Input(format!("stdin: {e}")))?;
            buf
        }
    };
    Ok(parse_graph(&text, format)?)
}

fn emit<T: Serialize>(value: &T) -> Result<(), Failure> {
    let mut stdout = io::stdout().lock();
    serde_json::to_writer(&mut stdout, value)
        .map_err(|e| Failure::Input(format!("writing output: {e}")))?;
    writeln!(stdout).map_err(|e| Failure::Input(format!("writing output: {e}")))
}

fn monomial(c: &Cover) -> String {
    let factors: Vec<String> = c
        .prices
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| match e {
            1 => format!("x{}", i + 1),
            _ => format!("x{}^{e}", i + 1),
        })
        .collect();
    if factors.is_empty() {
        "1".into()
    } else {
        factors.join("*")
    }
}

fn construct(args: &ConstructArgs, format: GraphFormat) -> Result<Graph, Failure> {
    if args.plus || args.prime {
        let g = read_graph(&args.input, format)?;
        return Ok(if args.plus {
            pendant_all(&g)?.0
        } else {
            pendant_g01_isolated(&g)?
        });
    }
    let family = args.family.as_deref().unwrap_or_default();
    let need = |value: Option<usize>, flag: &str| {
        let v = value.ok_or_else(|| Failure::Input(format!("family {family} needs --{flag}")))?;
        if v > MAX_VERTICES {
            return Err(Failure::Input(format!(
                "--{flag} {v} exceeds {MAX_VERTICES}"
            )));
        }
        Ok(v)
    };
    if !(0.0..=1.0).contains(&args.p) {
        return Err(Failure::Input(format!(
            "--p {} is not a probability",
            args.p
        )));
    }
    let two_sides = |a: usize, b: usize| {
        if a + b > MAX_VERTICES {
            Err(Failure::Input(format!(
                "{a} + {b} vertices exceeds {MAX_VERTICES}"
            )))
        } else {
            Ok((a, b))
        }
    };
    Ok(match family {
        "cycle" => {
            let n = need(args.n, "n")?;
            if n < 3 {
                return Err(Failure::Input("a cycle needs --n 3 or more".into()));
            }
            cycle(n)
        }
        "path" => path(need(args.n, "n")?),
        "complete" => complete(need(args.n, "n")?),
        "complete-bipartite" => {
            let (a, b) = two_sides(need(args.a, "a")?, need(args.b, "b")?)?;
            complete_bipartite(a, b)
        }
        "random" => random_graph(need(args.n, "n")?, args.p, args.seed),
        "random-bipartite" => {
            let (a, b) = two_sides(need(args.a, "a")?, need(args.b, "b")?)?;
            random_bipartite(a, b, args.p, args.seed)
        }
        other => return Err(Failure::Input(format!("unknown family {other:?}"))),
    })
}

fn pretty_report(r: &ClassificationReport) {
    eprintln!("sc       {}", r.sc);
    eprintln!("wsc      {}", r.wsc);
    eprintln!("msc      {}", r.msc);
    eprintln!("unmixed  {}", r.unmixed);
    eprintln!("domain   {}", r.domain);
    for (id, c) in &r.msc_conditions {
        eprintln!("  ({id}) {:<5} {:?}", c.holds, c.evaluation);
    }
    eprintln!("consistent {}", r.consistent);
}

fn pretty_suite(r: &SuiteReport) {
    eprintln!("{} graphs", r.graphs);
    for p in &r.properties {
        let mark = if p.passed { "pass" } else { "FAIL" };
        eprintln!("  {mark}  {:<50} {}", p.name, p.checked);
    }
}
