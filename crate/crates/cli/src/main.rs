use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use dynnikov_cli::commands::{self, Direction, PlaneArg};
use dynnikov_cli::{render, CliError, Outcome, Status};
use dynnikov_core::{BigInt, Family};

const AFTER_HELP: &str = "\
Words are printed in application order: the first letter acts first, so the
mapping class they name is the product read right to left. Inverse twists are
written tc- and td-.

Exit codes: 0 success, 1 I/O error, 2 usage error, 3 input is not an
essential curve (or not a primitive vector), 4 verification failure,
5 resource limit.";

#[derive(Parser)]
#[command(name = "dynnikov", version, about = "Dehn twist conjugacy on the 3-punctured disk", after_help = AFTER_HELP)]
struct Cli {
    /// Print the machine-readable record instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Conjugacy class, length, untwisting word, torus lift and ECF of a curve.
    #[command(allow_negative_numbers = true)]
    Classify {
        #[arg(value_parser = parse_int)]
        a: BigInt,
        #[arg(value_parser = parse_int)]
        b: BigInt,
    },
    /// Step-by-step untwisting of a curve into {c, d, e}.
    #[command(allow_negative_numbers = true)]
    Untwist {
        #[arg(value_parser = parse_int)]
        a: BigInt,
        #[arg(value_parser = parse_int)]
        b: BigInt,
    },
    /// Even continued fraction of m/n.
    #[command(allow_negative_numbers = true)]
    Ecf {
        #[arg(value_parser = parse_int)]
        m: BigInt,
        #[arg(value_parser = parse_int)]
        n: BigInt,
    },
    /// Convert between torus (p, q) and Dynnikov (a, b) coordinates.
    #[command(allow_negative_numbers = true)]
    Transform {
        direction: DirectionArg,
        #[arg(value_parser = parse_int)]
        x: BigInt,
        #[arg(value_parser = parse_int)]
        y: BigInt,
    },
    /// Lattice points of the track O_n as CSV, clockwise.
    Track {
        family: FamilyArg,
        n: u64,
        /// Keep points with both coordinates in [-window, window].
        window: u64,
        /// Also write the track as an SVG polyline.
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Emit the torus lifts (p, q) instead.
        #[arg(long)]
        lift: bool,
    },
    /// Exact Cayley-graph distance to {c, d, e}, next to the closed form.
    #[command(allow_negative_numbers = true)]
    Distance {
        #[arg(value_parser = parse_int)]
        a: BigInt,
        #[arg(value_parser = parse_int)]
        b: BigInt,
    },
    /// The ball of radius DEPTH around the reference vertices, as DOT.
    Graph { plane: PlaneValue, depth: u32 },
    /// Cross-check every closed form against brute-force search.
    Verify {
        #[arg(long, default_value_t = 30)]
        bound: u64,
        #[arg(long, default_value_t = 12)]
        depth: u32,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum DirectionArg {
    Pq2ab,
    Ab2pq,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    C,
    D,
}

#[derive(Clone, Copy, ValueEnum)]
enum PlaneValue {
    Dynnikov,
    Torus,
}

fn parse_int(s: &str) -> Result<BigInt, String> {
    s.parse().map_err(|_| format!("`{s}` is not an integer"))
}

fn run(command: Command) -> Result<Outcome, CliError> {
    match command {
        Command::Classify { a, b } => commands::classify(a, b),
        Command::Untwist { a, b } => commands::untwist_cmd(a, b),
        Command::Ecf { m, n } => commands::ecf(m, n),
        Command::Transform { direction, x, y } => {
            let direction = match direction {
                DirectionArg::Pq2ab => Direction::Pq2ab,
                DirectionArg::Ab2pq => Direction::Ab2pq,
            };
            commands::transform(direction, x, y)
        }
        Command::Track { family, n, window, svg, lift } => {
            let family = match family {
                FamilyArg::C => Family::C,
                FamilyArg::D => Family::D,
            };
            let out = commands::track(family, n, window, lift)?;
            if let Some(path) = svg {
                let figure = render::svg(out.record.points.as_deref().unwrap_or_default(), window);
                std::fs::write(&path, figure).map_err(|e| CliError {
                    status: Status::Io,
                    message: format!("cannot write {}: {e}", path.display()),
                })?;
            }
            Ok(out)
        }
        Command::Distance { a, b } => commands::distance(a, b),
        Command::Graph { plane, depth } => {
            let plane = match plane {
                PlaneValue::Dynnikov => PlaneArg::Dynnikov,
                PlaneValue::Torus => PlaneArg::Torus,
            };
            commands::graph(plane, depth)
        }
        Command::Verify { bound, depth, inject_fault } => commands::verify_cmd(bound, depth, inject_fault),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let written = if cli.json {
                writeln!(stdout, "{}", out.record.to_json())
            } else {
                write!(stdout, "{}", out.text)
            };
            match written.and_then(|()| stdout.flush()) {
                Ok(()) => ExitCode::from(out.status.code()),
                Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => ExitCode::from(out.status.code()),
                Err(e) => {
                    eprintln!("error: cannot write output: {e}");
                    ExitCode::from(Status::Io.code())
                }
            }
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.status.code())
        }
    }
}
