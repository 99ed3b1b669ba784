//! Table emitters: plain text, CSV, LaTeX array and JSON.

use std::collections::BTreeMap;
use std::fmt::Write;

use clap::ValueEnum;
use hopfpow_core::{Error, Result, TpdTable};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Csv,
    Latex,
    Json,
}

/// Tables with exponent above this print only columns `1..⌈e/2⌉` by default.
pub const HALF_TABLE_ABOVE: usize = 16;

pub fn default_half(exponent: usize) -> bool {
    exponent > HALF_TABLE_ABOVE
}

/// How a table is laid out and titled.
#[derive(Clone, Debug)]
pub struct Layout {
    /// Algebra name in LaTeX, for the array header.
    pub title: String,
    /// Group name in LaTeX, for the `tpn` row header.
    pub group_title: Option<String>,
    pub half: bool,
}

struct Grid {
    cols: Vec<usize>,
    rows: Vec<(usize, Vec<Option<usize>>)>,
}

fn grid(t: &TpdTable, half: bool) -> Grid {
    let size = t.size();
    let ncols = if half {
        t.exponent.div_ceil(2).min(size)
    } else {
        size
    };
    let cols: Vec<usize> = (1..=ncols).collect();
    let rows = (1..=size)
        .map(|i| {
            let cells = cols
                .iter()
                .map(|&j| (half || j >= i).then(|| t.get(i, j)))
                .collect();
            (i, cells)
        })
        .collect();
    Grid { cols, rows }
}

fn tpn_cells(t: &TpdTable, ncols: usize) -> Option<&[usize]> {
    t.group_tpn.as_deref().map(|v| &v[..ncols.min(v.len())])
}

pub fn to_plain(t: &TpdTable, half: bool) -> String {
    let g = grid(t, half);
    let tpn = tpn_cells(t, g.cols.len());
    let mut width = g
        .cols
        .iter()
        .map(|c| c.to_string().len())
        .max()
        .unwrap_or(1);
    for (_, cells) in &g.rows {
        width = width.max(
            cells
                .iter()
                .flatten()
                .map(|c| c.to_string().len())
                .max()
                .unwrap_or(1),
        );
    }
    if let Some(v) = tpn {
        width = width.max(v.iter().map(|c| c.to_string().len()).max().unwrap_or(1));
    }
    let head = if tpn.is_some() { 4 } else { 3 }.max(g.rows.len().to_string().len());
    let mut out = String::new();
    write!(out, "{:<head$}", "i\\j").unwrap();
    for j in &g.cols {
        write!(out, " {j:>width$}").unwrap();
    }
    out.push('\n');
    for (i, cells) in &g.rows {
        write!(out, "{i:<head$}").unwrap();
        for c in cells {
            match c {
                Some(v) => write!(out, " {v:>width$}").unwrap(),
                None => write!(out, " {:>width$}", "").unwrap(),
            }
        }
        out.truncate(out.trim_end().len());
        out.push('\n');
    }
    if let Some(v) = tpn {
        write!(out, "{:<head$}", "tpn").unwrap();
        for x in v {
            write!(out, " {x:>width$}").unwrap();
        }
        out.push('\n');
    }
    out
}

pub fn to_csv(t: &TpdTable, half: bool) -> String {
    let g = grid(t, half);
    let mut out = String::from("i\\j");
    for j in &g.cols {
        write!(out, ",{j}").unwrap();
    }
    out.push('\n');
    for (i, cells) in &g.rows {
        write!(out, "{i}").unwrap();
        for c in cells {
            out.push(',');
            if let Some(v) = c {
                write!(out, "{v}").unwrap();
            }
        }
        out.push('\n');
    }
    if let Some(v) = tpn_cells(t, g.cols.len()) {
        out.push_str("tpn");
        for x in v {
            write!(out, ",{x}").unwrap();
        }
        out.push('\n');
    }
    out
}

/// LaTeX array layout; half tables bold the diagonal.
pub fn to_latex(t: &TpdTable, layout: &Layout) -> String {
    let g = grid(t, layout.half);
    let mut out = String::new();
    writeln!(out, "\\begin{{array}}{{|c|{}|}}", "c".repeat(g.cols.len())).unwrap();
    out.push_str("\\hline\n");
    write!(out, "\\tpd_{{i,j}}({})", layout.title).unwrap();
    for (k, j) in g.cols.iter().enumerate() {
        if k == 0 {
            write!(out, "&j={j}").unwrap();
        } else {
            write!(out, "&{j}").unwrap();
        }
    }
    out.push_str("\\\\\n\\hline\n");
    for (i, cells) in &g.rows {
        write!(out, "{i}").unwrap();
        for (c, j) in cells.iter().zip(&g.cols) {
            match c {
                Some(v) if layout.half && j == i => write!(out, "&\\mathbf{{{v}}}").unwrap(),
                Some(v) => write!(out, "&{v}").unwrap(),
                None => out.push_str("& "),
            }
        }
        out.push_str("\\\\\n");
    }
    out.push_str("\\hline\n");
    if let (Some(v), Some(name)) = (tpn_cells(t, g.cols.len()), &layout.group_title) {
        out.push_str("\\noalign{\\bigskip}\\hline\n");
        write!(out, "\\tpn_i({name})").unwrap();
        for x in v {
            write!(out, "&{x}").unwrap();
        }
        out.push_str("\\\\\n\\hline\n");
    }
    out.push_str("\\end{array}\n");
    out
}

/// JSON form of a table; `entries` holds `[i, j, tpd_{i,j}]` for `i ≤ j < e`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableJson {
    pub algebra: String,
    pub provenance: String,
    pub dim: usize,
    pub e: usize,
    pub entries: Vec<[usize; 3]>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub tpn: Option<Vec<usize>>,
}

impl TableJson {
    pub fn from_table(algebra: &str, t: &TpdTable) -> Self {
        let size = t.size();
        let entries = (1..=size)
            .flat_map(|i| (i..=size).map(move |j| [i, j, t.get(i, j)]))
            .collect();
        TableJson {
            algebra: algebra.to_string(),
            provenance: t.provenance.clone(),
            dim: t.dim,
            e: t.exponent,
            entries,
            tpn: t.group_tpn.clone(),
        }
    }

    pub fn to_table(&self) -> Result<TpdTable> {
        let cells: BTreeMap<(usize, usize), usize> =
            self.entries.iter().map(|&[i, j, v]| ((i, j), v)).collect();
        let size = self.e.saturating_sub(1);
        if cells.len() != size * (size + 1) / 2 {
            return Err(Error::Shape(format!(
                "{} entries for exponent {}",
                cells.len(),
                self.e
            )));
        }
        let mut missing = None;
        let t = TpdTable::from_fn(self.provenance.clone(), self.dim, self.e, |i, j| {
            cells.get(&(i, j)).copied().unwrap_or_else(|| {
                missing.get_or_insert((i, j));
                0
            })
        });
        if let Some((i, j)) = missing {
            return Err(Error::Shape(format!("entry ({i},{j}) missing")));
        }
        Ok(match &self.tpn {
            Some(v) => t.with_tpn(v.clone()),
            None => t,
        })
    }
}

pub fn to_json(algebra: &str, t: &TpdTable) -> String {
    let mut s =
        serde_json::to_string(&TableJson::from_table(algebra, t)).expect("plain data serializes");
    s.push('\n');
    s
}

pub fn table_from_json(text: &str) -> Result<TpdTable> {
    let j: TableJson = serde_json::from_str(text).map_err(|e| Error::Parse {
        pos: e.column(),
        msg: e.to_string(),
    })?;
    j.to_table()
}

pub fn emit_table(t: &TpdTable, algebra: &str, format: Format, layout: &Layout) -> String {
    match format {
        Format::Plain => to_plain(t, layout.half),
        Format::Csv => to_csv(t, layout.half),
        Format::Latex => to_latex(t, layout),
        Format::Json => to_json(algebra, t),
    }
}

/// Reads a CSV table back into `(i, j) -> value` for the filled cells, plus the `tpn` row.
pub fn parse_csv_cells(
    text: &str,
) -> Result<(BTreeMap<(usize, usize), usize>, Option<Vec<usize>>)> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or_else(|| Error::Parse {
        pos: 0,
        msg: "empty CSV".into(),
    })?;
    let cols: Vec<usize> = header
        .split(',')
        .skip(1)
        .map(|c| {
            c.trim().parse().map_err(|_| Error::Parse {
                pos: 0,
                msg: format!("bad column `{c}`"),
            })
        })
        .collect::<Result<_>>()?;
    let mut cells = BTreeMap::new();
    let mut tpn = None;
    for (ln, line) in lines.enumerate() {
        let mut parts = line.split(',');
        let head = parts.next().unwrap_or("").trim();
        let values: Vec<&str> = parts.map(str::trim).collect();
        let bad = |what: &str| Error::Parse {
            pos: ln + 1,
            msg: format!("bad {what} in line {}", ln + 2),
        };
        if head == "tpn" {
            tpn = Some(
                values
                    .iter()
                    .map(|v| v.parse().map_err(|_| bad("tpn value")))
                    .collect::<Result<_>>()?,
            );
            continue;
        }
        let i: usize = head.parse().map_err(|_| bad("row index"))?;
        for (v, &j) in values.iter().zip(&cols) {
            if !v.is_empty() {
                cells.insert((i, j), v.parse().map_err(|_| bad("cell"))?);
            }
        }
    }
    Ok((cells, tpn))
}
