use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use super::checks::{check_roundtrip, check_theorem2, check_theorem3, check_theorem4, CheckConfig};
use super::format::{parse_input, serialize_complex, serialize_poset, serialize_presentation, serialize_quiver, InputDocument};
use crate::algebra::{h1_cohomology_dim, h1_integral, hh1_dimension, FieldSpec};
use crate::combinatorics::{barycentric, hasse_quiver, pos_of_complex, sim_of_poset, Quiver};
use crate::error::Error;
use crate::groups::{invariant_suite_with_budget, GroupShape, Presentation, DEFAULT_HOM_BUDGET, S4_MAX_GENERATORS};
use crate::pi1::{edge_path_presentation, quiver_pi1_presentation, van_kampen_assemble};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_CHECK_FAILED: i32 = 2;

/// Environment variable overriding the hom-count budget.
pub const HOM_BUDGET_VAR: &str = "FGTOOL_HOM_BUDGET";

#[derive(Debug, Parser)]
#[command(name = "fgtool", version, about = "Fundamental groups of complexes, posets and quivers")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Commands on simplicial complex files.
    Complex {
        #[command(subcommand)]
        op: ComplexOp,
    },
    /// Commands on poset files.
    Poset {
        #[command(subcommand)]
        op: PosetOp,
    },
    /// Commands on quiver files.
    Quiver {
        #[command(subcommand)]
        op: QuiverOp,
    },
    /// Assembles Π₁ of Q from two pieces Q1, Q2.
    Vankampen {
        q: PathBuf,
        q1: PathBuf,
        q2: PathBuf,
        #[arg(long)]
        basepoint: Option<String>,
    },
    /// Randomized checks of the comparison theorems.
    Check {
        which: CheckKind,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 25)]
        count: usize,
        #[arg(long = "max-size", default_value_t = 8)]
        max_size: usize,
    },
}

#[derive(Debug, Args)]
pub struct ComplexFile {
    pub file: PathBuf,
    /// Add every face of the listed simplexes instead of requiring them.
    #[arg(long = "close-down")]
    pub close_down: bool,
}

#[derive(Debug, Subcommand)]
pub enum ComplexOp {
    Pi1 {
        #[command(flatten)]
        input: ComplexFile,
        #[arg(long)]
        basepoint: Option<String>,
    },
    Pos {
        #[command(flatten)]
        input: ComplexFile,
    },
    Barycentric {
        #[command(flatten)]
        input: ComplexFile,
    },
    H1 {
        #[command(flatten)]
        input: ComplexFile,
    },
    H1dim {
        #[command(flatten)]
        input: ComplexFile,
        #[arg(long = "char")]
        characteristic: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum PosetOp {
    Sim { file: PathBuf },
    Hasse { file: PathBuf },
    Pi1 {
        file: PathBuf,
        #[arg(long)]
        basepoint: Option<String>,
    },
    Hh1 {
        file: PathBuf,
        #[arg(long = "char")]
        characteristic: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum QuiverOp {
    Pi1 {
        file: PathBuf,
        #[arg(long)]
        basepoint: Option<String>,
    },
    Complete { file: PathBuf },
    Order { file: PathBuf },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckKind {
    Theorem2,
    Theorem3,
    Theorem4,
    Roundtrip,
}

/// Text written by a command and its exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Outcome {
        Outcome { stdout, stderr: String::new(), code: EXIT_OK }
    }

    fn input_error(msg: String) -> Outcome {
        Outcome { stdout: String::new(), stderr: format!("error: {msg}\n"), code: EXIT_INPUT }
    }
}

/// Failure with the file it came from, if any.
struct Failure {
    file: Option<PathBuf>,
    error: Error,
}

impl From<Error> for Failure {
    fn from(error: Error) -> Failure {
        Failure { file: None, error }
    }
}

impl Failure {
    fn render(&self) -> String {
        match (&self.file, self.error.line()) {
            (Some(f), Some(_)) => format!("{}:{}", f.display(), self.error),
            (Some(f), None) => format!("{}: {}", f.display(), self.error),
            (None, _) => self.error.to_string(),
        }
    }
}

type Res<T> = std::result::Result<T, Failure>;

fn load(path: &Path) -> Res<InputDocument> {
    let attach = |error| Failure { file: Some(path.to_path_buf()), error };
    let text = fs::read_to_string(path).map_err(|e| Failure {
        file: Some(path.to_path_buf()),
        error: Error::Io(e.to_string()),
    })?;
    parse_input(&text).map_err(attach)
}

fn with_file<T>(path: &Path, r: crate::Result<T>) -> Res<T> {
    r.map_err(|error| Failure { file: Some(path.to_path_buf()), error })
}

fn load_quiver(path: &Path) -> Res<Quiver> {
    let doc = load(path)?;
    with_file(path, doc.to_quiver())
}

/// Hom-count budget: `FGTOOL_HOM_BUDGET` if set to an integer, else the
/// library default.
pub fn hom_budget_from_env() -> std::result::Result<u128, String> {
    match std::env::var(HOM_BUDGET_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| format!("{HOM_BUDGET_VAR} must be a non-negative integer, got `{v}`")),
        Err(_) => Ok(DEFAULT_HOM_BUDGET),
    }
}

/// Parses `argv` (program name first) and runs the command.
pub fn run_command<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { stdout: String::new(), stderr: text, code: EXIT_INPUT }
            } else {
                Outcome::ok(text)
            };
        }
    };
    let budget = match hom_budget_from_env() {
        Ok(b) => b,
        Err(msg) => return Outcome::input_error(msg),
    };
    run(&cli.command, budget)
}

/// Runs an already parsed command with an explicit hom-count budget.
pub fn run(command: &Command, budget: u128) -> Outcome {
    match dispatch(command, budget) {
        Ok(o) => o,
        Err(f) => Outcome::input_error(f.render()),
    }
}

fn group_report(p: &Presentation, budget: u128) -> Res<String> {
    let simple = p.simplify();
    let report = invariant_suite_with_budget(p, budget)?;
    let mut out = serialize_presentation(p, Some(&report));
    out.push_str(&format!("group: {}\n", GroupShape::of(&simple)));
    if !report.hom_counts.contains_key("S4") {
        let why = if simple.num_generators() > S4_MAX_GENERATORS {
            format!("more than {S4_MAX_GENERATORS} generators")
        } else {
            "over the hom-count budget".to_string()
        };
        out.push_str(&format!("notice: S4 skipped ({why})\n"));
    }
    Ok(out)
}

fn default_basepoint<'a>(given: &'a Option<String>, first: &'a str) -> &'a str {
    given.as_deref().unwrap_or(first)
}

fn dispatch(command: &Command, budget: u128) -> Res<Outcome> {
    let out = match command {
        Command::Complex { op } => complex(op, budget)?,
        Command::Poset { op } => poset(op, budget)?,
        Command::Quiver { op } => quiver(op, budget)?,
        Command::Vankampen { q, q1, q2, basepoint } => {
            let (whole, a, b) = (load_quiver(q)?, load_quiver(q1)?, load_quiver(q2)?);
            let vk = van_kampen_assemble(&whole, &a, &b, basepoint.as_deref())?;
            let mut out = format!("basepoint: {}\n", vk.basepoint());
            for w in vk.amalgamation_relators() {
                out.push_str(&format!("amalgamation: {w}\n"));
            }
            out + &group_report(vk.presentation(), budget)?
        }
        Command::Check { which, seed, count, max_size } => {
            let cfg = CheckConfig { seed: *seed, count: *count, max_size: *max_size, hom_budget: budget };
            let report = match which {
                CheckKind::Theorem2 => check_theorem2(cfg)?,
                CheckKind::Theorem3 => check_theorem3(cfg)?,
                CheckKind::Theorem4 => check_theorem4(cfg)?,
                CheckKind::Roundtrip => check_roundtrip(cfg)?,
            };
            let code = if report.ok() { EXIT_OK } else { EXIT_CHECK_FAILED };
            return Ok(Outcome { stdout: format!("{report}\n"), stderr: String::new(), code });
        }
    };
    Ok(Outcome::ok(out))
}

fn complex(op: &ComplexOp, budget: u128) -> Res<String> {
    let input = match op {
        ComplexOp::Pi1 { input, .. }
        | ComplexOp::Pos { input }
        | ComplexOp::Barycentric { input }
        | ComplexOp::H1 { input }
        | ComplexOp::H1dim { input, .. } => input,
    };
    let doc = load(&input.file)?;
    let c = with_file(&input.file, doc.to_complex(input.close_down))?;
    Ok(match op {
        ComplexOp::Pi1 { basepoint, .. } => {
            let first = c.vertices().first().expect("non-empty").clone();
            group_report(&edge_path_presentation(&c, default_basepoint(basepoint, &first))?, budget)?
        }
        ComplexOp::Pos { .. } => serialize_poset(&pos_of_complex(&c)),
        ComplexOp::Barycentric { .. } => serialize_complex(&barycentric(&c)),
        ComplexOp::H1 { .. } => {
            let (rank, torsion) = h1_integral(&c)?;
            let t: Vec<String> = torsion.iter().map(u64::to_string).collect();
            format!("h1: rank {rank}\ntorsion:{}{}\n", if t.is_empty() { "" } else { " " }, t.join(" "))
        }
        ComplexOp::H1dim { characteristic, .. } => {
            let k = FieldSpec::new(*characteristic)?;
            if !c.is_connected() {
                return Err(Error::Disconnected.into());
            }
            format!("h1dim: {} (char {characteristic})\n", h1_cohomology_dim(&c, k))
        }
    })
}

fn poset(op: &PosetOp, budget: u128) -> Res<String> {
    let file = match op {
        PosetOp::Sim { file } | PosetOp::Hasse { file } | PosetOp::Pi1 { file, .. } | PosetOp::Hh1 { file, .. } => file,
    };
    let doc = load(file)?;
    let p = with_file(file, doc.to_poset())?;
    Ok(match op {
        PosetOp::Sim { .. } => serialize_complex(&sim_of_poset(&p)),
        PosetOp::Hasse { .. } => serialize_quiver(hasse_quiver(&p).quiver()),
        PosetOp::Pi1 { basepoint, .. } => {
            let q = hasse_quiver(&p);
            group_report(&quiver_pi1_presentation(q.quiver(), default_basepoint(basepoint, &p.elements()[0]))?, budget)?
        }
        PosetOp::Hh1 { characteristic, .. } => {
            let k = FieldSpec::new(*characteristic)?;
            format!("hh1: {} (char {characteristic})\n", hh1_dimension(&p, k)?)
        }
    })
}

fn quiver(op: &QuiverOp, budget: u128) -> Res<String> {
    let file = match op {
        QuiverOp::Pi1 { file, .. } | QuiverOp::Complete { file } | QuiverOp::Order { file } => file,
    };
    let q = load_quiver(file)?;
    Ok(match op {
        QuiverOp::Pi1 { basepoint, .. } => {
            let first = q.vertices().first().expect("non-empty").clone();
            group_report(&quiver_pi1_presentation(&q, default_basepoint(basepoint, &first))?, budget)?
        }
        QuiverOp::Complete { .. } => serialize_quiver(&q.complete()?),
        QuiverOp::Order { .. } => serialize_quiver(q.order()?.quiver()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn write(dir: &Path, name: &str, text: &str) -> String {
        let p = dir.join(name);
        fs::write(&p, text).unwrap();
        p.to_string_lossy().into_owned()
    }

    fn tmpdir(tag: &str) -> PathBuf {
        let d = std::env::temp_dir().join(format!("fgtool-cmd-{tag}-{}", std::process::id()));
        fs::create_dir_all(&d).unwrap();
        d
    }

    #[test]
    fn hexagon_quiver_pi1() {
        let d = tmpdir("hex");
        let f = write(
            &d,
            "hexagon.qv",
            "vertex a\nvertex b\nvertex c\nvertex ab\nvertex bc\nvertex ac\n\
             arrow a|ab a ab\narrow b|ab b ab\narrow a|ac a ac\narrow c|ac c ac\narrow b|bc b bc\narrow c|bc c bc\n",
        );
        let o = run_command(["fgtool", "quiver", "pi1", &f]);
        assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
        assert!(o.stdout.contains("invariants: rank 1\n"));
        assert!(o.stdout.contains("group: free of rank 1\n"));
        assert_eq!(o.stdout.lines().filter(|l| l.starts_with("rel:")).count(), 0);
    }

    #[test]
    fn input_errors_exit_one() {
        let d = tmpdir("err");
        let f = write(&d, "loop.qv", "vertex a\narrow f a a\n");
        let o = run_command(["fgtool", "quiver", "pi1", &f]);
        assert_eq!(o.code, EXIT_INPUT);
        assert!(o.stderr.contains("loop.qv:line 2"), "{}", o.stderr);
        let o = run_command(["fgtool", "quiver", "frobnicate"]);
        assert_eq!(o.code, EXIT_INPUT);
        let o = run_command(["fgtool", "poset", "hh1", "/nonexistent/file", "--char", "2"]);
        assert_eq!(o.code, EXIT_INPUT);
    }

    #[test]
    fn non_prime_characteristic() {
        let d = tmpdir("char");
        let f = write(&d, "edge.sc", "simplex a\nsimplex b\nsimplex a b\n");
        let o = run_command(["fgtool", "complex", "h1dim", &f, "--char", "4"]);
        assert_eq!(o.code, EXIT_INPUT);
        let o = run_command(["fgtool", "complex", "h1dim", &f, "--char", "3"]);
        assert_eq!(o.stdout, "h1dim: 0 (char 3)\n");
    }
}
