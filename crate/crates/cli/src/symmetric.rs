use clap::Subcommand;
use serde_json::json;

use repkit::symgrp::{frobenius_character, gl_dim, kostka, partitions_of, schur_eval, sn_table, u_character};
use repkit::{CycleType, Partition, Rational};

use crate::{fail, CmdResult, Output};

#[derive(Subcommand)]
pub enum SnCmd {
    /// The character table of S_n, n ≤ 8.
    Table {
        #[arg(long)]
        n: usize,
    },
    /// χ_λ at the class with the given cycle type.
    Char {
        /// Partition as a comma list, e.g. 3,1.
        #[arg(long)]
        lambda: Partition,
        /// Cycle type as a partition of the same n, e.g. 2,1,1.
        #[arg(long)]
        class: Partition,
    },
    /// Degree of V_λ by the hook length formula.
    Dim {
        #[arg(long)]
        lambda: Partition,
    },
    /// Kostka number K_{μλ}, the multiplicity of V_μ in U_λ; with --all, one row per λ.
    Kostka {
        #[arg(long)]
        lambda: Partition,
        #[arg(long, required_unless_present = "all")]
        mu: Option<Partition>,
        #[arg(long)]
        all: bool,
    },
    /// The permutation character U_λ at a class.
    U {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        class: Partition,
    },
}

#[derive(Subcommand)]
pub enum SchurCmd {
    /// S_λ(x_1, …, x_N) at rational points.
    Eval {
        #[arg(long)]
        lambda: Partition,
        /// Comma-separated rationals, e.g. 1,2,1/3.
        #[arg(long)]
        points: String,
    },
    /// Dimension of the GL_N representation with highest weight λ; negative
    /// entries are allowed.
    Dim {
        /// Nonincreasing integers, e.g. 2,0,-1.
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long)]
        n: usize,
    },
}

fn same_size(lambda: &Partition, class: &Partition) -> Result<CycleType, String> {
    if lambda.size() != class.size() {
        return Err(format!("λ = {lambda} and the cycle type {class} are partitions of different n"));
    }
    Ok(CycleType::from_partition(class))
}

pub fn sn(out: &Output, cmd: &SnCmd) -> CmdResult {
    Ok(match cmd {
        SnCmd::Table { n } => {
            let t = sn_table(*n).map_err(fail)?;
            out.value(t.render(out.numeric), serde_json::to_value(&t).map_err(fail)?)
        }
        SnCmd::Char { lambda, class } => {
            let v = frobenius_character(lambda, &same_size(lambda, class)?).map_err(fail)?;
            out.value(format!("{v}\n"), json!(v.to_string()))
        }
        SnCmd::U { lambda, class } => {
            let v = u_character(lambda, &same_size(lambda, class)?).map_err(fail)?;
            out.value(format!("{v}\n"), json!(v.to_string()))
        }
        SnCmd::Dim { lambda } => {
            let d = lambda.hook_dim();
            out.value(format!("{d}\n"), json!(d.to_string()))
        }
        SnCmd::Kostka { lambda, mu: Some(mu), all: false } => {
            let k = kostka(mu, lambda).map_err(fail)?;
            out.value(format!("{k}\n"), json!(k.to_string()))
        }
        SnCmd::Kostka { lambda, .. } => {
            let parts = partitions_of(lambda.size());
            let mut text = String::new();
            let mut rows = Vec::new();
            for l in &parts {
                let row =
                    parts.iter().map(|m| kostka(m, l).map(|k| k.to_string())).collect::<Result<Vec<_>, _>>().map_err(fail)?;
                text.push_str(&format!("{l}: {}\n", row.join(" ")));
                rows.push(json!({"lambda": l.to_string(), "row": row}));
            }
            let header: Vec<String> = parts.iter().map(ToString::to_string).collect();
            out.value(format!("columns: {}\n{text}", header.join(" ")), json!({"columns": header, "rows": rows}))
        }
    })
}

pub fn schur(out: &Output, cmd: &SchurCmd) -> CmdResult {
    Ok(match cmd {
        SchurCmd::Eval { lambda, points } => {
            let xs = points
                .split(',')
                .map(|p| p.trim().parse::<Rational>().map_err(|e| format!("point `{p}`: {e}")))
                .collect::<Result<Vec<_>, _>>()?;
            let v = schur_eval(lambda, &xs).map_err(fail)?;
            out.value(format!("{v}\n"), json!(v.to_string()))
        }
        SchurCmd::Dim { lambda, n } => {
            let lam = lambda
                .split(',')
                .map(|p| p.trim().parse::<i64>().map_err(|e| format!("entry `{p}`: {e}")))
                .collect::<Result<Vec<_>, _>>()?;
            let d = gl_dim(&lam, *n).map_err(fail)?;
            out.value(format!("{d}\n"), json!(d.to_string()))
        }
    })
}
