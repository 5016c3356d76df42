use clap::Subcommand;
use serde_json::json;

use repkit::io::{parse_graph, parse_quiver, parse_rep};
use repkit::quiverrep::{decompose, enumerate_indecomposables};
use repkit::rootsys::{classify, coxeter, enumerate_roots, Classification};
use repkit::{CartanMatrix, DynkinType, Graph, Quiver};

use crate::{fail, read_file, CmdResult, Output};

#[derive(Subcommand)]
pub enum QuiverCmd {
    /// Dynkin, affine or indefinite, from the quadratic form.
    Classify {
        #[arg(long = "type", conflicts_with = "graph", required_unless_present = "graph")]
        ty: Option<DynkinType>,
        /// Graph file with `vertices` and `edges`.
        #[arg(long)]
        graph: Option<String>,
    },
    /// Positive roots, listed or counted.
    Roots {
        #[arg(long = "type")]
        ty: DynkinType,
        #[arg(long)]
        count: bool,
    },
    /// The Coxeter element `s_{l_1} ⋯ s_{l_r}` and its order.
    Coxeter {
        #[arg(long = "type")]
        ty: DynkinType,
        /// Comma-separated 1-based vertex order; defaults to 1,2,…,r.
        #[arg(long)]
        labeling: Option<String>,
    },
    /// One indecomposable per positive root.
    Indecomposables {
        #[arg(long = "type", conflicts_with = "quiver", required_unless_present = "quiver")]
        ty: Option<DynkinType>,
        /// Quiver file with `vertices` and `arrows`.
        #[arg(long)]
        quiver: Option<String>,
    },
    /// Multiplicities of the indecomposable summands of a representation file.
    Decompose { file: String },
}

fn vec_text(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

pub fn quiver(out: &Output, cmd: &QuiverCmd) -> CmdResult {
    Ok(match cmd {
        QuiverCmd::Classify { ty, graph } => {
            let g = match (ty, graph) {
                (Some(t), _) => Graph::dynkin(*t),
                (None, Some(path)) => parse_graph(&read_file(path)?).map_err(|e| format!("{path}: {e}"))?,
                (None, None) => return Err("pass --type or --graph".into()),
            };
            let c = classify(&g).map_err(fail)?;
            let kind = match &c {
                Classification::Dynkin(_) => "dynkin",
                Classification::Affine(_) => "affine",
                Classification::Indefinite => "indefinite",
            };
            out.value(format!("{c}\n"), json!({"kind": kind, "name": c.to_string()}))
        }
        QuiverCmd::Roots { ty, count } => {
            let roots = enumerate_roots(&CartanMatrix::from_graph(&Graph::dynkin(*ty))).map_err(fail)?;
            let (p, total) = (roots.positive.len(), roots.total());
            if *count {
                out.value(format!("positive: {p}, total: {total}\n"), json!({"positive": p, "total": total}))
            } else {
                let text: String = roots.positive.iter().map(|r| format!("{}\n", vec_text(r))).collect();
                out.value(text, json!(roots.positive))
            }
        }
        QuiverCmd::Coxeter { ty, labeling } => {
            let labels: Vec<usize> = match labeling {
                Some(s) => s
                    .split(',')
                    .map(|x| x.trim().parse::<usize>().ok().filter(|&i| i >= 1).map(|i| i - 1))
                    .collect::<Option<_>>()
                    .ok_or_else(|| format!("bad labeling `{s}`"))?,
                None => (0..ty.rank).collect(),
            };
            let c = coxeter(&CartanMatrix::from_graph(&Graph::dynkin(*ty)), &labels).map_err(fail)?;
            let text = format!("{ty}: order {}, det(c - 1) = {}\n{}", c.order, c.det_minus_identity, c.matrix);
            let json = json!({
                "type": ty.to_string(),
                "labeling": c.labeling.iter().map(|i| i + 1).collect::<Vec<_>>(),
                "order": c.order,
                "det_minus_identity": c.det_minus_identity.to_string(),
                "matrix": c.matrix,
            });
            out.value(text, json)
        }
        QuiverCmd::Indecomposables { ty, quiver } => {
            let q = match (ty, quiver) {
                (Some(t), _) => Quiver::dynkin(*t),
                (None, Some(path)) => parse_quiver(&read_file(path)?).map_err(|e| format!("{path}: {e}"))?,
                (None, None) => return Err("pass --type or --quiver".into()),
            };
            let reps = enumerate_indecomposables(&q).map_err(fail)?;
            let mut text = format!("{} indecomposables\n", reps.len());
            for (root, _) in &reps {
                text.push_str(&vec_text(root));
                text.push('\n');
            }
            let json = json!(reps.iter().map(|(root, v)| json!({"root": root, "rep": v})).collect::<Vec<_>>());
            out.value(text, json)
        }
        QuiverCmd::Decompose { file } => {
            let v = parse_rep(&read_file(file)?).map_err(|e| format!("{file}: {e}"))?;
            let parts = decompose(&v).map_err(fail)?;
            let terms: Vec<String> = parts
                .iter()
                .map(|(root, m)| if *m == 1 { vec_text(root) } else { format!("{m}{}", vec_text(root)) })
                .collect();
            let text = if terms.is_empty() { "0\n".to_string() } else { format!("{}\n", terms.join(" + ")) };
            out.value(text, json!(parts.iter().map(|(r, m)| json!({"root": r, "multiplicity": m})).collect::<Vec<_>>()))
        }
    })
}
