use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};

use polybound::io::{parse_hrep, parse_incidences, write_hrep, write_incidences, write_vrep};
use polybound::pipeline::{
    bounded_complex, format_csv, format_table, lift, prepare, run_pipeline, run_suite, Algorithm, Family, RunOptions,
    Suite,
};
use polybound::polyhedron::{
    enumerate_vertices, enumerate_vertices_bruteforce, projective_closure, DEFAULT_BRUTE_FORCE_BUDGET,
};
use polybound::simple::f_vector_simple;
use polybound::{moebius, Error};

#[derive(Parser)]
#[command(name = "polybound", version, about = "Bounded subcomplexes of unbounded polyhedra")]
struct Cli {
    /// Cap on brute-force subsets and generated rows.
    #[arg(long, global = true)]
    budget: Option<u128>,
    /// Write output files here instead of printing to stdout.
    #[arg(short = 'o', long = "out-dir", global = true)]
    out_dir: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate an instance: dwarfed-cube D | thrackle D | random-metric D SEED |
    /// tropical-cyclic S T | tropical-permutohedron T.
    Gen { family: String, params: Vec<u64> },
    /// Projective closure of an H-representation.
    Close { hrep: PathBuf },
    /// Vertices and rays of an H-representation.
    Vertices {
        hrep: PathBuf,
        /// Solve every d-subset of rows instead of running double description.
        #[arg(long)]
        brute_force: bool,
    },
    /// Vertex-facet incidences of the projective closure, with far face.
    Incidences {
        hrep: PathBuf,
        /// Emit the incidences of the polyhedron itself, without far face.
        #[arg(long)]
        no_far: bool,
    },
    /// Hasse diagram of the bounded subcomplex from an incidence file.
    Bounded {
        incidences: PathBuf,
        #[arg(long, value_enum, default_value = "selective")]
        alg: Alg,
        #[arg(long)]
        max_dim: Option<usize>,
        /// Also run selective generation and the Möbius method and compare.
        #[arg(long)]
        verify: bool,
    },
    /// Face numbers of a simple polyhedron given as an H-representation.
    Fvector {
        hrep: PathBuf,
        #[arg(long, required = true)]
        simple: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run one instance end to end and print its table row.
    Run {
        family: String,
        params: Vec<u64>,
        #[arg(long, value_enum, default_value = "selective")]
        alg: Alg,
        #[arg(long)]
        max_dim: Option<usize>,
        #[arg(long)]
        verify: bool,
    },
    /// Reproduce a benchmark table.
    Bench {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        max_size: Option<usize>,
        #[arg(long, default_value_t = 20)]
        seeds: u64,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        #[arg(long, value_enum, default_value = "selective")]
        alg: Alg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Alg {
    Selective,
    Moebius,
    Filter,
}

impl From<Alg> for Algorithm {
    fn from(a: Alg) -> Self {
        match a {
            Alg::Selective => Algorithm::Selective,
            Alg::Moebius => Algorithm::Moebius,
            Alg::Filter => Algorithm::Filter,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Table,
}

fn read(path: &Path) -> anyhow::Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

/// Prints `text` or writes it to `name` inside the output directory.
fn emit(out_dir: Option<&Path>, name: &str, text: &str) -> anyhow::Result<()> {
    match out_dir {
        Some(dir) => {
            std::fs::create_dir_all(dir)?;
            let path = dir.join(name);
            std::fs::write(&path, text).with_context(|| format!("writing {}", path.display()))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<()> {
    let out = cli.out_dir.as_deref();
    match cli.command {
        Command::Gen { family, params } => {
            let f = Family::from_args(&family, &params)?;
            let h = match cli.budget {
                Some(b) => f.hrep(b)?,
                None => f.hrep(polybound::pipeline::DEFAULT_ROW_BUDGET)?,
            };
            emit(out, "hrep.txt", &write_hrep(&h))
        }
        Command::Close { hrep } => {
            let c = projective_closure(&parse_hrep(&read(&hrep)?)?)?;
            emit(out, "closure.txt", &write_hrep(&c.closure))
        }
        Command::Vertices { hrep, brute_force } => {
            let h = parse_hrep(&read(&hrep)?)?;
            let v = if brute_force {
                enumerate_vertices_bruteforce(&h, cli.budget.unwrap_or(DEFAULT_BRUTE_FORCE_BUDGET))?
            } else {
                enumerate_vertices(&h)?
            };
            emit(out, "vrep.txt", &write_vrep(&v))
        }
        Command::Incidences { hrep, no_far } => {
            let p = prepare(parse_hrep(&read(&hrep)?)?)?;
            let inc = if no_far { p.incidences.restrict_to_polyhedron()?.0 } else { p.incidences };
            emit(out, "inc.txt", &write_incidences(&inc))
        }
        Command::Bounded { incidences, alg, max_dim, verify } => {
            let inc = parse_incidences(&read(&incidences)?)?;
            let alg = Algorithm::from(alg);
            let hd = match (alg, inc.far_face()) {
                (Algorithm::Moebius, None) => moebius::moebius_generation(&inc, max_dim),
                _ => bounded_complex(&inc, alg, max_dim)?,
            };
            if verify {
                let Some(_) = inc.far_face() else {
                    bail!("--verify needs an incidence file with a farface line");
                };
                let a = bounded_complex(&inc, Algorithm::Selective, max_dim)?;
                let (p, map) = inc.restrict_to_polyhedron()?;
                let b = lift(&moebius::moebius_generation(&p, max_dim), &map, inc.n());
                if a.canonical() != b.canonical() || a.canonical() != hd.canonical() {
                    return Err(Error::Invariant("selective and moebius disagree".into()).into());
                }
                eprintln!("verified: selective and moebius agree on {} faces", a.len());
            }
            emit(out, "hasse.json", &hd.to_json(inc.far_face()))
        }
        Command::Fvector { hrep, simple: _, seed } => {
            let p = prepare(parse_hrep(&read(&hrep)?)?)?;
            let r = f_vector_simple(&p.incidences, &p.vertices, p.hrep.dim(), seed)?;
            println!("bounded: {}", r.f_bounded);
            println!("all:     {}", r.f_all);
            if let Some(dir) = out {
                emit(Some(dir), "fvector.json", &r.to_json())?;
            }
            Ok(())
        }
        Command::Run { family, params, alg, max_dim, verify } => {
            let f = Family::from_args(&family, &params)?;
            let opts = RunOptions { algorithm: alg.into(), max_dim, verify, row_budget: cli.budget };
            let r = run_pipeline(&f, &opts, out)?.row;
            println!(
                "{}: d={} m̄={} n̄={} α={} φ′={} ({} ms)",
                r.label, r.d, r.m_bar, r.n_bar, r.alpha, r.phi_prime, r.millis
            );
            Ok(())
        }
        Command::Bench { suite, max_size, seeds, format, alg } => {
            let suite: Suite = suite.parse()?;
            let opts = RunOptions { algorithm: alg.into(), row_budget: cli.budget, ..Default::default() };
            let rows = run_suite(suite, max_size, seeds, &opts);
            let text = match format {
                Format::Csv => format_csv(&rows),
                Format::Table => format_table(&rows),
            };
            emit(out, "bench.txt", &text)
        }
    }
}

fn exit_code(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<Error>().map(Error::root) {
        Some(Error::Budget(_) | Error::BruteForceBudget { .. }) => 3,
        Some(Error::Invariant(_)) => 4,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
