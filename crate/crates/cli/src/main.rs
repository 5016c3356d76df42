use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

mod groups;
mod quivers;
mod symmetric;

#[derive(Parser)]
#[command(name = "repkit", version, about = "Exact character tables, S_n characters, root systems and quiver representations")]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Print irrational values as decimals.
    #[arg(long, global = true)]
    numeric: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Character tables: builtin names (S3, A4, S4, A5, Q8), S<n>, D_<n>, Z_<n> or a table file.
    #[command(subcommand)]
    Chartab(groups::ChartabCmd),
    /// Permutation groups.
    #[command(subcommand)]
    Group(groups::GroupCmd),
    /// Symmetric group characters.
    #[command(subcommand)]
    Sn(symmetric::SnCmd),
    /// Schur polynomials and GL_N dimensions.
    #[command(subcommand)]
    Schur(symmetric::SchurCmd),
    /// Dynkin diagrams, roots and quiver representations.
    #[command(subcommand)]
    Quiver(quivers::QuiverCmd),
    /// Characters of GL2(F_q).
    #[command(subcommand)]
    Gl2(groups::Gl2Cmd),
    /// Tables of semidirect products.
    #[command(subcommand)]
    Semidirect(groups::SemidirectCmd),
    /// Parse, reserialize and reparse a JSON artifact.
    Roundtrip {
        file: String,
    },
    /// Run the acceptance checks.
    Selftest(SelftestArgs),
}

#[derive(Args)]
struct SelftestArgs {
    #[arg(long, default_value_t = repkit::selftest::DEFAULT_SEED)]
    seed: u64,
    /// Run a single criterion.
    #[arg(long)]
    only: Option<usize>,
}

pub struct Output {
    pub json: bool,
    pub numeric: bool,
}

impl Output {
    pub fn value(&self, text: String, json: serde_json::Value) -> String {
        if self.json {
            let mut s = serde_json::to_string_pretty(&json).expect("serializable");
            s.push('\n');
            s
        } else {
            text
        }
    }
}

/// Output text, or the message of a domain error (exit 1).
pub type CmdResult = Result<String, String>;

pub fn fail<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

pub fn read_file(path: &str) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))
}

fn roundtrip(out: &Output, file: &str) -> Result<(String, bool), String> {
    let text = read_file(file)?;
    let (artifact, same) = repkit::io::roundtrip(&text).map_err(|e| format!("{file}: {e}"))?;
    let json = serde_json::json!({"kind": artifact.kind(), "roundtrip": same});
    Ok((out.value(format!("{same} ({})\n", artifact.kind()), json), same))
}

fn selftest(out: &Output, args: &SelftestArgs) -> Result<(String, bool), String> {
    let reports = match args.only {
        Some(id) => vec![repkit::selftest::run_criterion(id, args.seed).ok_or_else(|| format!("no criterion {id}"))?],
        None => repkit::selftest::run_all(args.seed),
    };
    let ok = reports.iter().all(|r| r.ok());
    let mut text: String = reports.iter().map(|r| format!("{r}\n")).collect();
    text.push_str(&format!(
        "{} of {} criteria pass\n",
        reports.iter().filter(|r| r.ok()).count(),
        reports.len()
    ));
    let json = serde_json::Value::Array(
        reports
            .iter()
            .map(|r| {
                serde_json::json!({
                    "id": r.id,
                    "title": r.title,
                    "passed": r.passed,
                    "within_limit": r.within_limit(),
                    "seconds": r.elapsed.as_secs_f64(),
                    "limit_seconds": r.limit.as_secs(),
                    "detail": r.detail,
                })
            })
            .collect(),
    );
    Ok((out.value(text, json), ok))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    let out = Output { json: cli.json, numeric: cli.numeric };
    let result = match &cli.command {
        Command::Chartab(c) => groups::chartab(&out, c),
        Command::Group(c) => groups::group(&out, c).map(|s| (s, true)),
        Command::Sn(c) => symmetric::sn(&out, c).map(|s| (s, true)),
        Command::Schur(c) => symmetric::schur(&out, c).map(|s| (s, true)),
        Command::Quiver(c) => quivers::quiver(&out, c).map(|s| (s, true)),
        Command::Gl2(c) => groups::gl2(&out, c),
        Command::Semidirect(c) => groups::semidirect(&out, c).map(|s| (s, true)),
        Command::Roundtrip { file } => roundtrip(&out, file),
        Command::Selftest(a) => selftest(&out, a),
    };
    match result {
        Ok((text, ok)) => {
            print!("{text}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
