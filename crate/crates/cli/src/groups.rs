use std::sync::Arc;

use clap::Subcommand;
use serde_json::{json, Value};

use repkit::chartab::{
    abelian_dual_table, builtin_table, builtin_table_on, dihedral_semidirect, heisenberg_semidirect, induce, restrict,
    CharacterTable, ClassFunction, BUILTIN_TABLES,
};
use repkit::gl2fq::{gl2_table, gl2_verify};
use repkit::permgroup::{named_group, GroupSpec, PermGroup, Permutation, SubgroupView};
use repkit::symgrp::{sn_table, sn_table_on};
use repkit::{Cyclotomic, Rational};

use crate::{fail, read_file, CmdResult, Output};

#[derive(Subcommand)]
pub enum ChartabCmd {
    /// Print a table with its class sizes.
    Show { table: String },
    /// Orthogonality, sum of squares, divisibility and completeness checks.
    Verify { table: String },
    /// Decompose the tensor product of two rows.
    Tensor { table: String, a: String, b: String },
    /// Decompose a class function given by its values on the classes.
    Decompose {
        table: String,
        /// Comma-separated rational values, one per class.
        #[arg(long, conflicts_with = "values_file")]
        values: Option<String>,
        /// JSON array of cyclotomic values.
        #[arg(long)]
        values_file: Option<String>,
    },
    /// Induce a row of a subgroup table to the whole group.
    Induce(SubgroupArgs),
    /// Restrict a row of the group table to a subgroup.
    Restrict(SubgroupArgs),
    /// Frobenius-Schur indicators of every row.
    Fs { table: String },
}

#[derive(clap::Args)]
pub struct SubgroupArgs {
    /// Group name (S4, A5, Q8, Z_6, D_4, ...) or group file.
    #[arg(long)]
    group: String,
    /// Subgroup generator in 1-based cycle notation, e.g. "(12)(34)" or "(1 2 3)"; repeatable.
    #[arg(long = "gen", required = true)]
    gens: Vec<String>,
    /// Builtin table to use on the subgroup or the group; defaults to the dual table of an abelian group.
    #[arg(long)]
    sub_table: Option<String>,
    /// Row name or index.
    #[arg(long)]
    row: String,
}

#[derive(Subcommand)]
pub enum GroupCmd {
    /// Conjugacy classes with sizes and element orders.
    Classes { group: String },
}

#[derive(Subcommand)]
pub enum Gl2Cmd {
    Classes {
        #[arg(long)]
        q: u64,
    },
    Table {
        #[arg(long)]
        q: u64,
    },
    Verify {
        #[arg(long)]
        q: u64,
    },
}

#[derive(Subcommand)]
pub enum SemidirectCmd {
    /// The table of `Z_2 ⋉ Z_n` or the Heisenberg group `(Z_p × Z_p) ⋊ Z_p`.
    Table {
        #[arg(long, conflicts_with = "heisenberg", required_unless_present = "heisenberg")]
        dihedral: Option<usize>,
        #[arg(long)]
        heisenberg: Option<usize>,
    },
}

/// A table by builtin name, `S<n>`, `D_<n>`, `Z_<n>` or file path.
pub fn resolve_table(spec: &str) -> Result<CharacterTable, String> {
    if std::path::Path::new(spec).is_file() {
        return repkit::io::parse_table(&read_file(spec)?).map_err(|e| format!("{spec}: {e}"));
    }
    if BUILTIN_TABLES.contains(&spec) {
        return builtin_table(spec).map_err(fail);
    }
    if let Some(n) = spec.strip_prefix('S').and_then(|r| r.trim_start_matches('_').parse().ok()) {
        return sn_table(n).map_err(fail);
    }
    if let Some(n) = spec.strip_prefix('D').and_then(|r| r.trim_start_matches('_').parse().ok()) {
        return Ok(dihedral_semidirect(n).map_err(fail)?.table);
    }
    let g = named_group(spec).map_err(|_| format!("unknown table `{spec}`"))?;
    abelian_dual_table(&g).map_err(fail)
}

fn resolve_group(spec: &str) -> Result<PermGroup, String> {
    if std::path::Path::new(spec).is_file() {
        let gs: GroupSpec = serde_json::from_str(&read_file(spec)?).map_err(|e| format!("{spec}: {e}"))?;
        return PermGroup::from_spec(&gs).map_err(fail);
    }
    named_group(spec).map_err(fail)
}

/// A table laid out on the classes of `g`.
fn table_on(name: Option<&str>, g: &PermGroup, group_name: &str) -> Result<CharacterTable, String> {
    let name = name.or_else(|| BUILTIN_TABLES.iter().copied().find(|&b| b == group_name));
    match name {
        Some(n) if n.starts_with('S') && !BUILTIN_TABLES.contains(&n) => sn_table_on(g).map_err(fail),
        Some(n) => builtin_table_on(n, g).map_err(fail),
        None if g.is_abelian() => abelian_dual_table(g).map_err(fail),
        None if group_name.starts_with('S') => sn_table_on(g).map_err(fail),
        None => Err(format!("no table for {group_name}; pass --sub-table")),
    }
}

/// 1-based cycle notation: `(12)(34)`, `(1 2 3)` or `()`.
fn parse_perm(s: &str, degree: usize) -> Result<Permutation, String> {
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    for chunk in s.split(')') {
        let body = chunk.trim().trim_start_matches('(').trim();
        if body.is_empty() {
            continue;
        }
        let points: Vec<&str> = if body.contains([' ', ',']) {
            body.split([' ', ',']).filter(|p| !p.is_empty()).collect()
        } else {
            body.split("").filter(|p| !p.is_empty()).collect()
        };
        let cycle = points
            .iter()
            .map(|p| p.parse::<usize>().ok().filter(|&x| x >= 1).map(|x| x - 1))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| format!("bad cycle `({body})`"))?;
        cycles.push(cycle);
    }
    let refs: Vec<&[usize]> = cycles.iter().map(Vec::as_slice).collect();
    Permutation::from_cycles(degree, &refs).map_err(fail)
}

fn row_index(t: &CharacterTable, row: &str) -> Result<usize, String> {
    t.row_index(row)
        .or_else(|| row.parse().ok().filter(|&i| i < t.num_rows()))
        .ok_or_else(|| format!("no row `{row}`; rows are {}", t.row_names().join(", ")))
}

fn sum_text(t: &CharacterTable, mult: &[Cyclotomic]) -> String {
    let terms: Vec<String> = mult
        .iter()
        .enumerate()
        .filter(|(_, m)| !m.is_zero())
        .map(|(i, m)| {
            let name = &t.rows()[i].name;
            if *m == Cyclotomic::one() {
                name.clone()
            } else if *m == -Cyclotomic::one() {
                format!("-{name}")
            } else {
                format!("{m}{name}")
            }
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn values_text(f: &ClassFunction) -> String {
    f.values().iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

fn decomposition(out: &Output, t: &CharacterTable, f: &ClassFunction) -> CmdResult {
    let d = t.decompose(f).map_err(fail)?;
    let mut text = format!("{}\n", sum_text(t, &d.multiplicities));
    if !d.is_character() {
        text.push_str(match (d.reconstructs, d.integers().is_some()) {
            (true, true) => "virtual character\n",
            (true, false) => "not a virtual character\n",
            (false, _) => "not a combination of the rows\n",
        });
    }
    let json = json!({
        "multiplicities": t.row_names().iter().zip(&d.multiplicities).map(|(n, m)| json!([n, m])).collect::<Vec<_>>(),
        "character": d.is_character(),
        "reconstructs": d.reconstructs,
    });
    Ok(out.value(text, json))
}

const LONG_LABEL: usize = 16;

/// Relabels the classes `1a, 2a, 3a, 3b, …` (by element order) when some
/// permutation label is too wide to print; returns the table and a legend.
fn compact_labels(t: &CharacterTable) -> (CharacterTable, String) {
    let layout = t.layout();
    if layout.classes.iter().all(|c| c.label.chars().count() <= LONG_LABEL) {
        return (t.clone(), String::new());
    }
    let mut seen: std::collections::HashMap<u64, usize> = std::collections::HashMap::new();
    let mut relabeled = (**layout).clone();
    let mut legend = String::new();
    for c in &mut relabeled.classes {
        let k = seen.entry(c.element_order).or_default();
        let mut suffix = String::new();
        let mut i = *k;
        loop {
            suffix.insert(0, (b'a' + (i % 26) as u8) as char);
            if i < 26 {
                break;
            }
            i = i / 26 - 1;
        }
        *k += 1;
        let short = format!("{}{suffix}", c.element_order);
        legend.push_str(&format!("{short} = {}\n", c.label));
        c.label = short;
    }
    let table = CharacterTable::new(Arc::new(relabeled), t.rows().to_vec()).expect("same rows on the same classes");
    (table, legend)
}

fn show(out: &Output, t: &CharacterTable) -> CmdResult {
    let (short, legend) = compact_labels(t);
    let text = if legend.is_empty() { short.render(out.numeric) } else { format!("{}\n{legend}", short.render(out.numeric)) };
    Ok(out.value(text, serde_json::to_value(t).map_err(fail)?))
}

fn subgroup(args: &SubgroupArgs) -> Result<(SubgroupView, CharacterTable, CharacterTable), String> {
    let g = Arc::new(resolve_group(&args.group)?);
    let gens = args.gens.iter().map(|s| parse_perm(s, g.degree())).collect::<Result<Vec<_>, _>>()?;
    let view = SubgroupView::new(g.clone(), gens).map_err(fail)?;
    let tg = table_on(None, &g, &args.group)?;
    let th = table_on(args.sub_table.as_deref(), view.subgroup(), "")?;
    Ok((view, tg, th))
}

pub fn chartab(out: &Output, cmd: &ChartabCmd) -> Result<(String, bool), String> {
    let text = match cmd {
        ChartabCmd::Show { table } => show(out, &resolve_table(table)?)?,
        ChartabCmd::Verify { table } => {
            let report = resolve_table(table)?.verify();
            let ok = report.all_passed();
            return Ok((out.value(report.to_string(), serde_json::to_value(&report).map_err(fail)?), ok));
        }
        ChartabCmd::Tensor { table, a, b } => {
            let t = resolve_table(table)?;
            let (i, j) = (row_index(&t, a)?, row_index(&t, b)?);
            let m = t.tensor_multiplicities(i, j).map_err(fail)?;
            let mult: Vec<Cyclotomic> = m.iter().map(|&k| Cyclotomic::from_integer(k)).collect();
            let text = format!("{} x {} = {}\n", t.rows()[i].name, t.rows()[j].name, sum_text(&t, &mult));
            let json = json!(t.row_names().iter().zip(&m).map(|(n, k)| json!([n, k])).collect::<Vec<_>>());
            out.value(text, json)
        }
        ChartabCmd::Decompose { table, values, values_file } => {
            let t = resolve_table(table)?;
            let vals: Vec<Cyclotomic> = match (values, values_file) {
                (Some(v), _) => v
                    .split(',')
                    .map(|x| x.trim().parse::<Rational>().map(|r| Cyclotomic::from_rational(&r)).map_err(fail))
                    .collect::<Result<_, _>>()?,
                (None, Some(path)) => serde_json::from_str(&read_file(path)?).map_err(|e| format!("{path}: {e}"))?,
                (None, None) => return Err("pass --values or --values-file".into()),
            };
            let f = ClassFunction::new(t.layout().clone(), vals).map_err(fail)?;
            decomposition(out, &t, &f)?
        }
        ChartabCmd::Induce(args) => {
            let (view, tg, th) = subgroup(args)?;
            let f = induce(&view, &th.row(row_index(&th, &args.row)?)).map_err(fail)?;
            let d = tg.decompose(&f).map_err(fail)?;
            let text = format!("values: {}\n{}\n", values_text(&f), sum_text(&tg, &d.multiplicities));
            let json = json!({"values": f.values(), "decomposition": tg.row_names().iter().zip(&d.multiplicities).map(|(n, m)| json!([n, m])).collect::<Vec<_>>()});
            out.value(text, json)
        }
        ChartabCmd::Restrict(args) => {
            let (view, tg, th) = subgroup(args)?;
            let f = restrict(&view, &tg.row(row_index(&tg, &args.row)?)).map_err(fail)?;
            let d = th.decompose(&f).map_err(fail)?;
            let text = format!("values: {}\n{}\n", values_text(&f), sum_text(&th, &d.multiplicities));
            let json = json!({"values": f.values(), "decomposition": th.row_names().iter().zip(&d.multiplicities).map(|(n, m)| json!([n, m])).collect::<Vec<_>>()});
            out.value(text, json)
        }
        ChartabCmd::Fs { table } => {
            let t = resolve_table(table)?;
            let mut text = String::new();
            let mut rows = Vec::new();
            for i in 0..t.num_rows() {
                let fs = t.row(i).frobenius_schur().map_err(fail)?;
                text.push_str(&format!("{}: {fs}\n", t.rows()[i].name));
                rows.push(json!([t.rows()[i].name, fs]));
            }
            out.value(text, Value::Array(rows))
        }
    };
    Ok((text, true))
}

pub fn group(out: &Output, cmd: &GroupCmd) -> CmdResult {
    let GroupCmd::Classes { group } = cmd;
    let g = resolve_group(group)?;
    let mut grid = vec![vec!["class".to_string(), "size".into(), "order".into()]];
    let mut rows = Vec::new();
    for c in g.classes() {
        grid.push(vec![c.representative.cycle_string(), c.size.to_string(), c.element_order.to_string()]);
        rows.push(json!({"rep": c.representative.images(), "label": c.representative.cycle_string(), "size": c.size, "order": c.element_order}));
    }
    let text = format!("{} of order {}, {} classes\n{}", g.name(), g.order(), g.num_classes(), grid_text(&grid));
    Ok(out.value(text, json!({"group": g.name(), "order": g.order(), "classes": rows})))
}

fn grid_text(grid: &[Vec<String>]) -> String {
    let widths: Vec<usize> =
        (0..grid[0].len()).map(|j| grid.iter().map(|r| r[j].chars().count()).max().unwrap_or(0)).collect();
    grid.iter()
        .map(|r| {
            let cells: Vec<String> = r
                .iter()
                .zip(&widths)
                .enumerate()
                .map(|(j, (s, w))| if j == 0 { format!("{s:<w$}") } else { format!("{s:>w$}") })
                .collect();
            format!("{}\n", cells.join("  ").trim_end())
        })
        .collect()
}

pub fn gl2(out: &Output, cmd: &Gl2Cmd) -> Result<(String, bool), String> {
    match cmd {
        Gl2Cmd::Classes { q } => {
            let t = gl2_table(*q).map_err(fail)?;
            let mut grid = vec![vec!["class".to_string(), "size".into(), "order".into(), "representative".into()]];
            for (c, info) in t.classes().iter().zip(&t.layout().classes) {
                let m = c.representative;
                grid.push(vec![
                    c.label(),
                    c.size.to_string(),
                    info.element_order.to_string(),
                    format!("[[{}, {}], [{}, {}]]", m[0], m[1], m[2], m[3]),
                ]);
            }
            let text = format!(
                "GL2(F_{q}): order {}, {} classes, eps = {}\n{}",
                t.layout().group_order,
                t.classes().len(),
                t.field().eps(),
                grid_text(&grid)
            );
            Ok((out.value(text, serde_json::to_value(t.classes()).map_err(fail)?), true))
        }
        Gl2Cmd::Table { q } => Ok((show(out, t_table(*q)?.table())?, true)),
        Gl2Cmd::Verify { q } => {
            let report = gl2_verify(*q).map_err(fail)?;
            let ok = report.all_passed();
            Ok((out.value(report.to_string(), serde_json::to_value(&report).map_err(fail)?), ok))
        }
    }
}

fn t_table(q: u64) -> Result<repkit::Gl2Table, String> {
    gl2_table(q).map_err(fail)
}

pub fn semidirect(out: &Output, cmd: &SemidirectCmd) -> CmdResult {
    let SemidirectCmd::Table { dihedral, heisenberg } = cmd;
    let product = match (dihedral, heisenberg) {
        (Some(n), _) => dihedral_semidirect(*n),
        (None, Some(p)) => heisenberg_semidirect(*p),
        (None, None) => return Err("pass --dihedral or --heisenberg".into()),
    }
    .map_err(fail)?;
    show(out, &product.table)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_notation() {
        assert_eq!(parse_perm("(12)(34)", 4).unwrap(), Permutation::from_cycles(4, &[&[0, 1], &[2, 3]]).unwrap());
        assert_eq!(parse_perm("(1 2 3)", 5).unwrap(), Permutation::from_cycles(5, &[&[0, 1, 2]]).unwrap());
        assert_eq!(parse_perm("()", 3).unwrap(), Permutation::identity(3));
        assert!(parse_perm("(0 1)", 3).is_err());
    }
}
