use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::exact::Cyclotomic;
use crate::permgroup::{PermGroup, Permutation};

use super::classfn::{conjugates, inner_with_conjugates, same_group};
use super::{ChartabError, ClassFunction, ClassInfo, ClassLayout};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CharacterRow {
    pub name: String,
    pub degree: u64,
    pub values: Vec<Cyclotomic>,
}

/// Irreducible characters of a group as rows over its classes.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    layout: Arc<ClassLayout>,
    rows: Vec<CharacterRow>,
}

impl PartialEq for CharacterTable {
    fn eq(&self, other: &Self) -> bool {
        same_group(&self.layout, &other.layout) && self.rows == other.rows
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// The offending rows or classes when the check fails.
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    fn push(&mut self, name: &str, failures: Vec<String>) {
        self.checks.push(Check { name: name.into(), passed: failures.is_empty(), failures });
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{}: {}", c.name, if c.passed { "ok" } else { "FAILED" })?;
            for fail in c.failures.iter().take(10) {
                writeln!(f, "  {fail}")?;
            }
        }
        Ok(())
    }
}

/// Multiplicities `(f, χ_i)` of a class function against a table.
#[derive(Debug, Clone, PartialEq)]
pub struct Decomposition {
    pub multiplicities: Vec<Cyclotomic>,
    /// `Σ m_i χ_i` equals the input.
    pub reconstructs: bool,
}

impl Decomposition {
    /// The multiplicities as integers, if they all are.
    pub fn integers(&self) -> Option<Vec<i64>> {
        self.multiplicities
            .iter()
            .map(|m| m.to_rational().and_then(|r| r.to_i64()))
            .collect()
    }

    /// True for an honest character: nonnegative integer multiplicities.
    pub fn is_character(&self) -> bool {
        self.reconstructs && self.integers().is_some_and(|v| v.iter().all(|&m| m >= 0))
    }

    /// Nonzero terms as `(row, multiplicity)`.
    pub fn terms(&self) -> Vec<(usize, Cyclotomic)> {
        self.multiplicities
            .iter()
            .enumerate()
            .filter(|(_, m)| !m.is_zero())
            .map(|(i, m)| (i, m.clone()))
            .collect()
    }
}

impl CharacterTable {
    pub fn new(layout: Arc<ClassLayout>, rows: Vec<CharacterRow>) -> Result<Self, ChartabError> {
        let id = layout.identity_class();
        for r in &rows {
            if r.values.len() != layout.len() {
                return Err(ChartabError::LengthMismatch { expected: layout.len(), found: r.values.len() });
            }
            if layout.is_empty() || r.values[id] != Cyclotomic::from_integer(r.degree) {
                return Err(ChartabError::BadTable(format!(
                    "row {} has degree {} but value {} at the identity",
                    r.name,
                    r.degree,
                    r.values.get(id).map(ToString::to_string).unwrap_or_default()
                )));
            }
        }
        Ok(CharacterTable { layout, rows })
    }

    /// Builds rows from class functions; degrees are read off the identity.
    pub fn from_functions(
        layout: Arc<ClassLayout>,
        rows: Vec<(String, ClassFunction)>,
    ) -> Result<Self, ChartabError> {
        let rows = rows
            .into_iter()
            .map(|(name, f)| {
                let degree = f
                    .degree()
                    .to_integer()
                    .and_then(|d| u64::try_from(d).ok())
                    .ok_or_else(|| ChartabError::BadTable(format!("row {name} has non-integral degree")))?;
                Ok(CharacterRow { name, degree, values: f.into_values() })
            })
            .collect::<Result<Vec<_>, ChartabError>>()?;
        CharacterTable::new(layout, rows)
    }

    pub fn layout(&self) -> &Arc<ClassLayout> {
        &self.layout
    }

    pub fn rows(&self) -> &[CharacterRow] {
        &self.rows
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn row(&self, i: usize) -> ClassFunction {
        ClassFunction::new(self.layout.clone(), self.rows[i].values.clone()).expect("row length checked")
    }

    pub fn row_index(&self, name: &str) -> Option<usize> {
        self.rows.iter().position(|r| r.name == name)
    }

    pub fn degrees(&self) -> Vec<u64> {
        self.rows.iter().map(|r| r.degree).collect()
    }

    pub fn row_names(&self) -> Vec<String> {
        self.rows.iter().map(|r| r.name.clone()).collect()
    }

    /// Orthogonality relations, the sum of squares, degree divisibility and
    /// completeness.
    pub fn verify(&self) -> VerificationReport {
        let layout = &*self.layout;
        let mut report = VerificationReport { checks: vec![] };
        let conj: Vec<Vec<Cyclotomic>> = self.rows.iter().map(|r| conjugates(&r.values)).collect();

        let mut rows_bad = Vec::new();
        for i in 0..self.rows.len() {
            for j in i..self.rows.len() {
                let ip = inner_with_conjugates(layout, &self.rows[i].values, &conj[j]);
                let expect = if i == j { Cyclotomic::one() } else { Cyclotomic::zero() };
                if ip != expect {
                    rows_bad.push(format!("({}, {}) = {ip}", self.rows[i].name, self.rows[j].name));
                }
            }
        }
        report.push("row orthonormality", rows_bad);

        let mut cols_bad = Vec::new();
        for g in 0..layout.len() {
            for h in g..layout.len() {
                let sum: Cyclotomic = self
                    .rows
                    .iter()
                    .zip(&conj)
                    .map(|(r, c)| &r.values[g] * &c[h])
                    .sum();
                let expect = if g == h {
                    Cyclotomic::from_integer(layout.centralizer_order(g))
                } else {
                    Cyclotomic::zero()
                };
                if sum != expect {
                    cols_bad.push(format!(
                        "columns {} and {}: sum {sum}, expected {expect}",
                        layout.classes[g].label, layout.classes[h].label
                    ));
                }
            }
        }
        report.push("column orthogonality", cols_bad);

        let squares: u64 = self.rows.iter().map(|r| r.degree * r.degree).sum();
        report.push(
            "sum of squares",
            if squares == layout.group_order {
                vec![]
            } else {
                vec![format!("sum of squared degrees {squares} != {}", layout.group_order)]
            },
        );

        let indivisible = self
            .rows
            .iter()
            .filter(|r| r.degree == 0 || layout.group_order % r.degree != 0)
            .map(|r| format!("{} has degree {} not dividing {}", r.name, r.degree, layout.group_order))
            .collect();
        report.push("degree divides order", indivisible);

        report.push(
            "row count",
            if self.rows.len() == layout.len() {
                vec![]
            } else {
                vec![format!("{} rows for {} classes", self.rows.len(), layout.len())]
            },
        );

        let id = layout.identity_class();
        let bad_degrees = self
            .rows
            .iter()
            .filter(|r| r.values[id] != Cyclotomic::from_integer(r.degree))
            .map(|r| r.name.clone())
            .collect();
        report.push("identity column", bad_degrees);
        report
    }

    pub fn decompose(&self, f: &ClassFunction) -> Result<Decomposition, ChartabError> {
        if !same_group(&self.layout, f.layout()) {
            return Err(ChartabError::GroupMismatch(self.layout.name.clone(), f.layout().name.clone()));
        }
        let conj_f = conjugates(f.values());
        // (f, χ) = conj((χ, f)) and (χ, f) uses conj(f)
        let multiplicities: Vec<Cyclotomic> = self
            .rows
            .iter()
            .map(|r| inner_with_conjugates(&self.layout, &r.values, &conj_f).conjugate())
            .collect();
        let rebuilt = self.assemble(&multiplicities);
        Ok(Decomposition { reconstructs: rebuilt.values() == f.values(), multiplicities })
    }

    /// `Σ m_i χ_i`.
    pub fn assemble(&self, multiplicities: &[Cyclotomic]) -> ClassFunction {
        let mut values = vec![Cyclotomic::zero(); self.layout.len()];
        for (r, m) in self.rows.iter().zip(multiplicities) {
            if m.is_zero() {
                continue;
            }
            for (v, x) in values.iter_mut().zip(&r.values) {
                *v = &*v + &(x * m);
            }
        }
        ClassFunction::new(self.layout.clone(), values).expect("lengths agree")
    }

    /// `N_ij^k = (χ_i χ_j, χ_k)` for every `k`.
    pub fn tensor_multiplicities(&self, i: usize, j: usize) -> Result<Vec<u64>, ChartabError> {
        let product = self.row(i).mul(&self.row(j))?;
        let d = self.decompose(&product)?;
        d.integers()
            .filter(|v| d.reconstructs && v.iter().all(|&m| m >= 0))
            .map(|v| v.into_iter().map(|m| m as u64).collect())
            .ok_or_else(|| ChartabError::BadTable(format!("{} ⊗ {} is not a character", self.rows[i].name, self.rows[j].name)))
    }

    /// Index of the row of the dual character of each row.
    pub fn dual_permutation(&self) -> Option<Vec<usize>> {
        self.rows
            .iter()
            .map(|r| {
                let d = conjugates(&r.values);
                self.rows.iter().position(|s| s.values == d)
            })
            .collect()
    }

    /// Re-expresses the table over the classes of `group`, matching each
    /// class by the representative stored in this table.
    pub fn transport(&self, group: &PermGroup) -> Result<CharacterTable, ChartabError> {
        let target = group.layout();
        let mut source_of = vec![None; target.len()];
        for (i, c) in self.layout.classes.iter().enumerate() {
            let rep = c.rep.as_ref().ok_or(ChartabError::MissingRepresentatives)?;
            if rep.len() > group.degree() {
                return Err(ChartabError::Transport(format!("representative {rep:?} has too many points")));
            }
            let p = Permutation::new(rep.clone())?.extend(group.degree());
            let gc = group
                .class_index_of(&p)
                .ok_or_else(|| ChartabError::Transport(format!("{p} is not in {}", group.name())))?;
            if source_of[gc].is_some() || target.classes[gc].size != c.size {
                return Err(ChartabError::Transport(format!("class {} does not match", c.label)));
            }
            source_of[gc] = Some(i);
        }
        let source_of: Vec<usize> = source_of
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| ChartabError::Transport("some classes have no counterpart".into()))?;
        let rows = self
            .rows
            .iter()
            .map(|r| CharacterRow {
                name: r.name.clone(),
                degree: r.degree,
                values: source_of.iter().map(|&s| r.values[s].clone()).collect(),
            })
            .collect();
        CharacterTable::new(target, rows)
    }

    /// A copy with one entry replaced, for exercising the verifier.
    pub fn with_entry(&self, row: usize, class: usize, value: Cyclotomic) -> CharacterTable {
        let mut t = self.clone();
        t.rows[row].values[class] = value;
        t
    }

    /// Text rendering: a header of class labels, a row of class sizes, then
    /// one line per character.
    pub fn render(&self, numeric: bool) -> String {
        let fmt_value = |c: &Cyclotomic| -> String {
            if numeric && !c.is_rational() {
                let (re, im) = c.to_complex();
                if im.abs() < 1e-12 {
                    format!("{re:.6}")
                } else {
                    format!("{re:.6}{im:+.6}i")
                }
            } else {
                c.to_string()
            }
        };
        let mut grid: Vec<Vec<String>> = Vec::new();
        let mut header = vec![self.layout.name.clone()];
        header.extend(self.layout.classes.iter().map(|c| c.label.clone()));
        grid.push(header);
        let mut sizes = vec!["#".to_string()];
        sizes.extend(self.layout.classes.iter().map(|c| c.size.to_string()));
        grid.push(sizes);
        for r in &self.rows {
            let mut line = vec![r.name.clone()];
            line.extend(r.values.iter().map(fmt_value));
            grid.push(line);
        }
        render_grid(&grid)
    }
}

pub(crate) fn render_grid(grid: &[Vec<String>]) -> String {
    let cols = grid.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|j| grid.iter().filter_map(|r| r.get(j)).map(|s| s.chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in grid {
        let cells: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(j, s)| {
                let pad = widths[j] - s.chars().count();
                if j == 0 {
                    format!("{s}{}", " ".repeat(pad))
                } else {
                    format!("{}{s}", " ".repeat(pad))
                }
            })
            .collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

/// On-disk table format.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableFile {
    pub group: String,
    pub classes: Vec<ClassInfo>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub power2: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inverse: Option<Vec<usize>>,
    pub rows: Vec<CharacterRow>,
}

impl From<&CharacterTable> for TableFile {
    fn from(t: &CharacterTable) -> Self {
        TableFile {
            group: t.layout.name.clone(),
            classes: t.layout.classes.clone(),
            power2: t.layout.power2.clone(),
            inverse: t.layout.inverse.clone(),
            rows: t.rows.clone(),
        }
    }
}

impl TryFrom<TableFile> for CharacterTable {
    type Error = ChartabError;
    fn try_from(f: TableFile) -> Result<Self, ChartabError> {
        let group_order = f.classes.iter().map(|c| c.size).sum();
        let layout = ClassLayout {
            name: f.group,
            group_order,
            classes: f.classes,
            power2: f.power2,
            inverse: f.inverse,
        };
        layout.check().map_err(ChartabError::BadTable)?;
        CharacterTable::new(Arc::new(layout), f.rows)
    }
}

impl Serialize for CharacterTable {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        TableFile::from(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CharacterTable {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let file = TableFile::deserialize(deserializer)?;
        CharacterTable::try_from(file).map_err(serde::de::Error::custom)
    }
}

impl CharacterTable {
    /// True if the tables agree after some permutation of rows and a
    /// permutation of classes preserving class sizes and element orders.
    pub fn is_equivalent(&self, other: &CharacterTable) -> bool {
        let (a, b) = (&*self.layout, &*other.layout);
        if a.group_order != b.group_order || a.len() != b.len() || self.rows.len() != other.rows.len() {
            return false;
        }
        let mut assignment = vec![usize::MAX; a.len()];
        let mut used = vec![false; b.len()];
        self.match_columns(other, 0, &mut assignment, &mut used)
    }

    fn match_columns(&self, other: &CharacterTable, col: usize, assignment: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let (a, b) = (&*self.layout, &*other.layout);
        if col == a.len() {
            let mut mine: Vec<Vec<Cyclotomic>> = self.rows.iter().map(|r| r.values.clone()).collect();
            let theirs: Vec<Vec<Cyclotomic>> = other
                .rows
                .iter()
                .map(|r| assignment.iter().map(|&j| r.values[j].clone()).collect())
                .collect();
            return theirs.iter().all(|t| match mine.iter().position(|m| m == t) {
                Some(p) => {
                    mine.swap_remove(p);
                    true
                }
                None => false,
            });
        }
        for j in 0..b.len() {
            let compatible = !used[j]
                && a.classes[col].size == b.classes[j].size
                && a.classes[col].element_order == b.classes[j].element_order;
            if !compatible {
                continue;
            }
            // the column multiset must agree before descending further
            let mut left: Vec<&Cyclotomic> = self.rows.iter().map(|r| &r.values[col]).collect();
            let right: Vec<&Cyclotomic> = other.rows.iter().map(|r| &r.values[j]).collect();
            let same_multiset = right.iter().all(|x| match left.iter().position(|y| y == x) {
                Some(p) => {
                    left.swap_remove(p);
                    true
                }
                None => false,
            });
            if !same_multiset {
                continue;
            }
            used[j] = true;
            assignment[col] = j;
            if self.match_columns(other, col + 1, assignment, used) {
                return true;
            }
            used[j] = false;
        }
        false
    }
}
