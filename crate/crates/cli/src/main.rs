use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;

use weightpoly::caps::{self, Caps};
use weightpoly::dynkin::{extended_diagram, index_set};
use weightpoly::faces::{cross_section_lattice, f_polynomial};
use weightpoly::verify::{parse_suites, verify, Status};
use weightpoly::weights::weight_system;
use weightpoly::{export, CartanType, Error, ErrorClass, Family, NodeSet, RootSystem, Weight};

/// Faces, face orbits and f-polynomials of weight polytopes.
#[derive(Parser, Debug)]
#[command(name = "weightpoly", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Cross-section lattice: one node per face orbit plus the bottom element.
    Lattice(Job),
    /// Face counts by dimension.
    Fvector(Job),
    /// The standard parabolic face cut out by a set of simple indices.
    Faces {
        #[command(flatten)]
        job: Job,
        /// Comma-separated simple indices (1-based); empty for the whole polytope.
        #[arg(long, default_value = "")]
        subset: String,
    },
    /// All weights of the representation with highest weight λ.
    Weights(Job),
    /// The Dynkin diagram extended by the node -λ.
    Diagram(Job),
    /// Run invariant and oracle suites; exits 3 if any check fails.
    Verify {
        #[command(flatten)]
        job: Job,
        /// Comma-separated suites, or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Args, Debug)]
struct Job {
    /// Family letter (A–G), or a full name such as `B3`.
    #[arg(long = "type", short = 't')]
    kind: String,
    #[arg(long, short = 'r')]
    rank: Option<usize>,
    /// Highest weight in fundamental-weight coordinates, e.g. `1,0,2`.
    #[arg(long, short = 'l', allow_hyphen_values = true)]
    lambda: String,
    #[arg(long, short = 'f', value_enum, default_value = "text")]
    format: Format,
    #[arg(long, env = caps::ENV_ORBIT)]
    orbit_cap: Option<usize>,
    #[arg(long, env = caps::ENV_WEIGHTS)]
    weight_cap: Option<usize>,
    #[arg(long, env = caps::ENV_GROUP)]
    group_cap: Option<usize>,
    #[arg(long, env = caps::ENV_HULL_VERTICES)]
    hull_cap: Option<usize>,
    #[arg(long, env = caps::ENV_HULL_DIM)]
    hull_dim_cap: Option<usize>,
}

struct Resolved {
    rs: RootSystem,
    lambda: Weight,
    format: Format,
    caps: Caps,
}

fn usage(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}

impl Job {
    fn resolve(&self) -> Result<Resolved, Error> {
        let kind: CartanType = match self.rank {
            Some(rank) => {
                let letter = self.kind.trim();
                let family = letter
                    .chars()
                    .next()
                    .filter(|_| letter.chars().count() == 1)
                    .and_then(Family::from_letter)
                    .ok_or(Error::InvalidType {
                        family: letter.chars().next().unwrap_or('?'),
                        rank,
                        reason: "unknown family letter",
                    })?;
                CartanType::new(family, rank)?
            }
            None => self.kind.parse()?,
        };
        let coords = self
            .lambda
            .split(',')
            .map(|s| {
                let v: i64 = s.trim().parse().map_err(|_| usage(format!("bad λ entry `{s}`")))?;
                if v < 0 {
                    return Err(usage(format!("λ entries must be nonnegative, got {v}")));
                }
                Ok(v)
            })
            .collect::<Result<Vec<_>, _>>()?;
        let lambda = Weight::new(coords);
        let rs = RootSystem::new(kind);
        rs.check_dominant(&lambda)?;
        let d = Caps::default();
        let caps = Caps {
            orbit: self.orbit_cap.unwrap_or(d.orbit),
            weights: self.weight_cap.unwrap_or(d.weights),
            group: self.group_cap.unwrap_or(d.group),
            hull_vertices: self.hull_cap.unwrap_or(d.hull_vertices),
            hull_dim: self.hull_dim_cap.unwrap_or(d.hull_dim),
        };
        Ok(Resolved {
            rs,
            lambda,
            format: self.format,
            caps,
        })
    }
}

fn json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn no_dot(cmd: &str) -> Error {
    usage(format!("`{cmd}` has no DOT output"))
}

/// Runs one command; returns the text to print and the exit code.
fn run(cmd: Command) -> Result<(String, u8), Error> {
    match cmd {
        Command::Lattice(job) => {
            let r = job.resolve()?;
            let csl = cross_section_lattice(&r.rs, &r.lambda)?;
            let f = f_polynomial(&r.rs, &r.lambda)?;
            let out = match r.format {
                Format::Json => json(&export::lattice_json(&r.rs, &r.lambda, &csl, &f)),
                Format::Dot => export::lattice_dot(&csl),
                Format::Text => {
                    let mut s = String::new();
                    let _ = writeln!(s, "{} λ = {}: {} elements", r.rs.kind(), r.lambda, csl.len());
                    let _ = writeln!(s, "0 ⊥");
                    for (k, face) in csl.face_lattice().faces().iter().enumerate() {
                        let _ = writeln!(
                            s,
                            "{} S={} dim={} orbit={} vertices={} least={}",
                            k + 1,
                            face.nodes(),
                            face.dim(),
                            csl.orbit_sizes()[k],
                            face.vertex_count(),
                            face.least()
                        );
                    }
                    let covers: Vec<String> = csl.covers().iter().map(|(a, b)| format!("{a}<{b}")).collect();
                    let _ = writeln!(s, "covers: {}", covers.join(" "));
                    let _ = writeln!(s, "{}", export::f_polynomial_text(&f));
                    s
                }
            };
            Ok((out, 0))
        }
        Command::Fvector(job) => {
            let r = job.resolve()?;
            let f = f_polynomial(&r.rs, &r.lambda)?;
            let out = match r.format {
                Format::Json => json(&export::f_polynomial_json(&r.rs, &r.lambda, &f)),
                Format::Dot => return Err(no_dot("fvector")),
                Format::Text => format!("{}\n{f:?}\n", export::f_polynomial_text(&f)),
            };
            Ok((out, 0))
        }
        Command::Faces { job, subset } => {
            let r = job.resolve()?;
            let labels = subset
                .split(',')
                .filter(|s| !s.trim().is_empty())
                .map(|s| s.trim().parse::<usize>().map_err(|_| usage(format!("bad index `{s}`"))))
                .collect::<Result<Vec<_>, _>>()?;
            let subset: NodeSet = index_set(&r.rs, &labels)?;
            let ws = weight_system(&r.rs, &r.lambda, r.caps.weights)?;
            let report = export::face_report(&r.rs, &r.lambda, &ws, subset)?;
            let out = match r.format {
                Format::Json => json(&export::face_report_json(&r.rs, &r.lambda, &report)),
                Format::Dot => return Err(no_dot("faces")),
                Format::Text => export::face_report_text(&report),
            };
            Ok((out, 0))
        }
        Command::Weights(job) => {
            let r = job.resolve()?;
            let ws = weight_system(&r.rs, &r.lambda, r.caps.weights)?;
            let out = match r.format {
                Format::Json => json(&export::weights_json(&r.rs, &r.lambda, &ws)),
                Format::Dot => return Err(no_dot("weights")),
                Format::Text => export::weights_text(&ws),
            };
            Ok((out, 0))
        }
        Command::Diagram(job) => {
            let r = job.resolve()?;
            let diag = extended_diagram(&r.rs, &r.lambda)?;
            let out = match r.format {
                Format::Json => json(&export::diagram_json(&r.rs, &r.lambda, &diag)),
                Format::Dot | Format::Text => diag.to_dot(),
            };
            Ok((out, 0))
        }
        Command::Verify { job, suite } => {
            let r = job.resolve()?;
            let suites = parse_suites(&suite)?;
            let report = verify(&r.rs, &r.lambda, &suites, &r.caps)?;
            let out = match r.format {
                Format::Json => json(&serde_json::to_value(&report).expect("report serializes")),
                Format::Dot => return Err(no_dot("verify")),
                Format::Text => {
                    let mut s = String::new();
                    for sr in &report.suites {
                        let status = match sr.status {
                            Status::Pass => "PASS",
                            Status::Fail => "FAIL",
                            Status::Skipped => "SKIP",
                        };
                        let _ = write!(s, "{status} {} ({} checks)", sr.suite, sr.checks);
                        if let Some(note) = &sr.note {
                            let _ = write!(s, ": {note}");
                        }
                        s.push('\n');
                        for f in &sr.failures {
                            let _ = writeln!(s, "  {f}");
                        }
                    }
                    s
                }
            };
            Ok((out, report.exit_code() as u8))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli.command) {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e.class() {
                ErrorClass::Usage => 1,
                ErrorClass::Resource => 2,
                ErrorClass::Violation => 3,
            })
        }
    }
}
