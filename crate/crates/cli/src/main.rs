use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use kauffman_core::alexander::{alexander_skein, alexander_state_sum, AlexanderReport, SkeinBranch};
use kauffman_core::corpus::{self, CORPUS};
use kauffman_core::floer::{chain_table, hfb_planar, render_matrix};
use kauffman_core::states::{half, states_tsv};
use kauffman_core::verify::{run_verification, VerifyConfig};
use kauffman_core::{compute_faces, enumerate_states, parse_diagram, CornerWeights, Diagram, EdgeLabel, Error, RenderStyle};
use serde_json::json;

const EXIT_IO: u8 = 1;
const EXIT_VALIDATION: u8 = 2;
const EXIT_DEGENERATE: u8 = 3;
const EXIT_DISAGREE: u8 = 4;
const EXIT_PROPERTY: u8 = 5;

#[derive(Parser)]
#[command(name = "kauffman", version, about = "Kauffman states and Alexander polynomials of singular knot diagrams")]
struct Cli {
    /// Emit JSON
    #[arg(long, global = true)]
    json: bool,
    /// Emit tab-separated tables
    #[arg(long, global = true)]
    tsv: bool,
    /// Override the marked edge
    #[arg(long = "q", global = true, value_name = "EDGE")]
    q: Option<EdgeLabel>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a diagram and summarize it
    Parse { input: String },
    /// List generalized Kauffman states with their gradings
    States { input: String },
    /// Alexander polynomial
    Alexander {
        input: String,
        #[arg(long, value_enum, default_value_t = MethodArg::StateSum)]
        method: MethodArg,
    },
    /// Euler characteristics of both Floer theories
    Euler { input: String },
    /// Bigraded ranks (planar) or chain-level generator counts
    Homology { input: String },
    /// Run the property suite over the corpus and random braid closures
    Verify {
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 8)]
        max_crossings: usize,
        /// Use a deliberately wrong weight table (negative control)
        #[arg(long, hide = true)]
        corrupt_weights: bool,
    },
    /// List the built-in diagrams
    Corpus,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    StateSum,
    Skein,
    Both,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::DegenerateMarking => EXIT_DEGENERATE,
            _ => EXIT_VALIDATION,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type CmdResult = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = std::env::var("KAUFFMAN_THREADS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
        .filter(|&n| n > 0)
    {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn load(cli: &Cli, input: &str) -> Result<Diagram, Failure> {
    let d = if let Some(name) = input.strip_prefix("corpus:") {
        corpus::lookup(name)
            .ok_or_else(|| Failure {
                code: EXIT_VALIDATION,
                message: format!("unknown corpus entry `{name}`"),
            })?
            .diagram()?
    } else {
        let text = std::fs::read_to_string(input).map_err(|e| Failure {
            code: EXIT_IO,
            message: format!("{input}: {e}"),
        })?;
        let d = parse_diagram(&text).map_err(|e| Failure {
            message: format!("{input}: {e}"),
            ..Failure::from(e)
        })?;
        if d.name().is_empty() {
            let stem = std::path::Path::new(input)
                .file_stem()
                .map_or_else(|| input.to_string(), |s| s.to_string_lossy().into_owned());
            d.with_name(stem)
        } else {
            d
        }
    };
    match cli.q {
        Some(e) => Ok(d.with_marked_edge(e)?),
        None => Ok(d),
    }
}

fn print_json(v: &serde_json::Value) {
    println!("{}", serde_json::to_string(v).expect("json"));
}

fn run(cli: &Cli) -> CmdResult {
    match &cli.command {
        Command::Parse { input } => cmd_parse(cli, &load(cli, input)?),
        Command::States { input } => cmd_states(cli, &load(cli, input)?),
        Command::Alexander { input, method } => cmd_alexander(cli, &load(cli, input)?, *method),
        Command::Euler { input } => cmd_euler(cli, &load(cli, input)?),
        Command::Homology { input } => cmd_homology(cli, &load(cli, input)?),
        Command::Verify {
            seed,
            count,
            max_crossings,
            corrupt_weights,
        } => {
            let cfg = VerifyConfig {
                seed: *seed,
                count: *count,
                max_crossings: *max_crossings,
                weights: if *corrupt_weights {
                    CornerWeights::corrupted()
                } else {
                    CornerWeights::standard()
                },
            };
            let report = run_verification(&cfg);
            if cli.json {
                print_json(&report.to_json());
            } else {
                print!("{}", report.render());
            }
            Ok(if report.passed() { 0 } else { EXIT_PROPERTY })
        }
        Command::Corpus => {
            if cli.json {
                print_json(&json!(CORPUS
                    .iter()
                    .map(|e| json!({"name": e.name, "source": e.source, "delta": e.delta}))
                    .collect::<Vec<_>>()));
            } else {
                for e in CORPUS {
                    let d = e.diagram()?;
                    println!(
                        "{:<14} {:>2} vertices {:>2} singular  {}",
                        e.name,
                        d.num_vertices(),
                        d.singular_count(),
                        e.source.trim().replace('\n', " / ")
                    );
                }
            }
            Ok(0)
        }
    }
}

fn cmd_parse(cli: &Cli, d: &Diagram) -> CmdResult {
    let f = compute_faces(d)?;
    if cli.json {
        print_json(&json!({
            "diagram": d.to_json(),
            "faces": f.len(),
            "singular": d.singular_count(),
            "planar": d.is_planar_singular(),
        }));
    } else {
        println!("name: {}", d.name());
        println!("vertices: {}", d.num_vertices());
        println!("edges: {}", d.num_edges());
        println!("faces: {}", f.len());
        println!("singular: {}", d.singular_count());
        println!("marked edge: {}", d.marked_edge());
        println!("planar: {}", d.is_planar_singular());
    }
    Ok(0)
}

fn cmd_states(cli: &Cli, d: &Diagram) -> CmdResult {
    let f = compute_faces(d)?;
    let states = enumerate_states(d, &f);
    if cli.json {
        print_json(&json!({
            "count": states.len(),
            "states": states.iter().map(|s| json!({
                "corners": s.corners.iter().map(|c| c.symbol()).collect::<Vec<_>>(),
                "twoS": s.twice_s,
                "M": s.maslov,
                "N": s.n_grading(),
            })).collect::<Vec<_>>(),
            "table": kauffman_core::BigradedTable::from_states(&states).to_json(),
        }));
    } else {
        print!("{}", states_tsv(d, &states));
        if !cli.tsv {
            println!("# {} states", states.len());
        }
    }
    Ok(0)
}

fn cmd_alexander(cli: &Cli, d: &Diagram, method: MethodArg) -> CmdResult {
    if cli.json {
        let r = AlexanderReport::compute(d)?;
        print_json(&r.to_json());
        return Ok(if r.methods_agree { 0 } else { EXIT_DISAGREE });
    }
    let style = RenderStyle::T;
    match method {
        MethodArg::StateSum => {
            let delta = alexander_state_sum(d)?;
            println!("{}", delta.render(style));
            if !delta.is_symmetric() {
                println!("# not symmetric under T -> T^-1");
            }
            Ok(0)
        }
        MethodArg::Skein => {
            println!("{}", alexander_skein(d, SkeinBranch::Plus)?.render(style));
            Ok(0)
        }
        MethodArg::Both => {
            let sum = alexander_state_sum(d)?;
            let plus = alexander_skein(d, SkeinBranch::Plus)?;
            let minus = alexander_skein(d, SkeinBranch::Minus)?;
            println!("{}", sum.render(style));
            if sum == plus && sum == minus {
                println!("# state sum and skein recursion (both branches) agree");
                Ok(0)
            } else {
                println!("# DISAGREE");
                println!("state-sum: {}", sum.render(style));
                println!("skein+:    {}", plus.render(style));
                println!("skein-:    {}", minus.render(style));
                Ok(EXIT_DISAGREE)
            }
        }
    }
}

fn cmd_euler(cli: &Cli, d: &Diagram) -> CmdResult {
    let r = AlexanderReport::compute(d)?;
    if cli.json {
        print_json(&r.to_json());
        return Ok(0);
    }
    println!("chi(HF-) = {}", r.delta);
    match (&r.chi_hfa, r.ell) {
        (Some(chi), Some(ell)) => {
            println!("ell = {ell}");
            println!("chi(HFa) = {chi}");
        }
        _ => println!("# chi(HFa) omitted: diagram has no singular vertex"),
    }
    Ok(0)
}

fn cmd_homology(cli: &Cli, d: &Diagram) -> CmdResult {
    if d.is_planar_singular() {
        let h = hfb_planar(d)?;
        if cli.json {
            print_json(&h.to_json());
        } else if cli.tsv {
            print!("{}", render_matrix(&h.ranks));
        } else {
            println!("HF- ranks (rows d, columns s), supported on d = 2s");
            print!("{}", render_matrix(&h.ranks));
            println!("total rank {}", h.ranks.total());
        }
    } else {
        let c = chain_table(d)?;
        if cli.json {
            print_json(&c.to_json());
        } else if cli.tsv {
            print!("{}", render_matrix(&c.table));
        } else {
            println!("# chain-level generator counts only: the diagram is not planar,");
            println!("# so these bound the homology ranks from above");
            print!("{}", render_matrix(&c.table));
            let lo = c.table.entries().map(|((_, k), _)| k).min().unwrap_or(0);
            println!("total generators {} (lowest s = {})", c.table.total(), half(lo));
        }
    }
    Ok(0)
}
