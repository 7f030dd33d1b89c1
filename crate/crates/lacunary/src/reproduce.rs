//! Recomputes each table and diffs it cell by cell against the embedded
//! expected values.

use std::fmt::Write as _;

use lacunary_core::schinzel::{compute_bounds, Table1Row};
use lacunary_core::stats::{bias_rows, table2_report, trinomial_table};
use lacunary_core::{ClassBSpec, IntPoly, Result};
use num_bigint::BigUint;

use crate::expected;
use crate::par;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum TableId {
    Table1,
    Table2,
    Table3,
    Table4,
    BoundsExample,
}

impl TableId {
    pub const ALL: [TableId; 5] =
        [Self::Table1, Self::Table2, Self::Table3, Self::Table4, Self::BoundsExample];

    pub fn name(self) -> &'static str {
        match self {
            Self::Table1 => "table1",
            Self::Table2 => "table2",
            Self::Table3 => "table3",
            Self::Table4 => "table4",
            Self::BoundsExample => "bounds_example",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellDiff {
    pub row: String,
    pub col: String,
    pub expected: String,
    pub got: String,
}

/// A recomputed table with its differences from the expected values.
/// `warnings` lists known discrepancies that do not count as failures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reproduction {
    pub table: TableId,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub diffs: Vec<CellDiff>,
    pub warnings: Vec<String>,
}

impl Reproduction {
    fn new(table: TableId, header: &[&str]) -> Self {
        Self {
            table,
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
            diffs: Vec::new(),
            warnings: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.diffs.is_empty()
    }

    fn check(&mut self, row: &str, col: &str, expected: impl ToString, got: impl ToString) {
        let (e, g) = (expected.to_string(), got.to_string());
        if e != g {
            self.diffs.push(CellDiff { row: row.into(), col: col.into(), expected: e, got: g });
        }
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.header).expect("in-memory write");
        for r in &self.rows {
            w.write_record(r).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
    }

    /// `row,col,expected,got` for every mismatch.
    pub fn diff_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["row", "col", "expected", "got"]).expect("in-memory write");
        for d in &self.diffs {
            w.write_record([&d.row, &d.col, &d.expected, &d.got]).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
    }

    /// One line per diff and warning, prefixed with the table name.
    pub fn report(&self) -> String {
        let mut s = String::new();
        let name = self.table.name();
        for w in &self.warnings {
            let _ = writeln!(s, "{name}: warning: {w}");
        }
        for d in &self.diffs {
            let _ = writeln!(
                s,
                "{name}: row {} col {}: expected {}, got {}",
                d.row, d.col, d.expected, d.got
            );
        }
        let _ = writeln!(
            s,
            "{name}: {} ({} diffs)",
            if self.passed() { "ok" } else { "MISMATCH" },
            self.diffs.len()
        );
        s
    }
}

/// Recomputes `table`. For Table 1, `rows` selects experiment numbers.
pub fn reproduce(table: TableId, rows: Option<&[usize]>) -> Result<Reproduction> {
    match table {
        TableId::Table1 => table1(rows),
        TableId::Table2 => table2(),
        TableId::Table3 => table3(),
        TableId::Table4 => table4(),
        TableId::BoundsExample => bounds_example(),
    }
}

pub fn phi_text(row: &Table1Row) -> String {
    row.phi_set.iter().map(u64::to_string).collect::<Vec<_>>().join(" ")
}

pub fn table1(rows: Option<&[usize]>) -> Result<Reproduction> {
    let mut out = Reproduction::new(
        TableId::Table1,
        &["exp", "n", "m1", "quad_irred", "N4", "phi_set", "conjB"],
    );
    for e in expected::table1() {
        if rows.is_some_and(|r| !r.contains(&e.exp)) {
            continue;
        }
        let got = par::conjecture_b_row(e.n, e.m1)?;
        let quad = if got.quad_irreducible { "+" } else { "-" };
        let conj = if got.conj_b { "yes" } else { "no" };
        let label = e.exp.to_string();
        out.check(&label, "quad_irred", &e.quad_irreducible, quad);
        out.check(&label, "N4", e.n4, got.n4);
        out.check(&label, "phi_set", &e.phi, phi_text(&got));
        out.check(&label, "conjB", &e.conj_b, conj);
        out.rows.push(vec![
            label,
            e.n.to_string(),
            e.m1.to_string(),
            quad.into(),
            got.n4.to_string(),
            phi_text(&got),
            conj.into(),
        ]);
    }
    Ok(out)
}

/// Cyclotomic indices split off the sections `S_1` and `S_5`.
pub const TABLE2_REMOVED: [(&str, &[u64]); 2] = [("1", &[4, 12]), ("5", &[3, 4, 12])];

pub fn table2() -> Result<Reproduction> {
    let t = table2_report(43)?;
    let exp = expected::table2();
    let mut header = vec!["row".to_string()];
    header.extend(t.primes.iter().map(u64::to_string));
    let mut out = Reproduction {
        header,
        ..Reproduction::new(TableId::Table2, &[])
    };
    for (label, p) in exp.header.iter().zip(&t.primes) {
        if *label != p.to_string() {
            out.warnings.push(format!("column headed {label} is computed at p = {p}"));
        }
    }
    if exp.header.len() != t.primes.len() {
        out.check("header", "primes", exp.header.len(), t.primes.len());
    }
    for (row, (label, want)) in t.rows.iter().zip(&exp.rows) {
        out.check(label, "label", label, &row.label);
        for ((p, w), g) in t.primes.iter().zip(want).zip(&row.values) {
            out.check(label, &p.to_string(), w, g);
        }
        let mut cells = vec![row.label.clone()];
        cells.extend(row.values.iter().map(usize::to_string));
        out.rows.push(cells);
    }
    for (label, want) in TABLE2_REMOVED {
        let row = t.rows.iter().find(|r| r.label == label).expect("section row");
        out.check(label, "cyclotomic", format!("{want:?}"), format!("{:?}", row.removed));
    }
    Ok(out)
}

pub fn table3() -> Result<Reproduction> {
    let exp = expected::table3();
    let xs: Vec<u64> = exp.rows.iter().map(|r| r.0.parse().expect("embedded x")).collect();
    let f = ClassBSpec::trinomial(2)?.to_poly();
    let full = par::prime_sweep(&f, xs.iter().copied().max().unwrap_or(2))?;
    let mut out = Reproduction::new(TableId::Table3, &["x", "np0", "np2", "pi"]);
    for (row, (label, want)) in bias_rows(&full, &xs).iter().zip(&exp.rows) {
        let got = [row.count(0), row.count(2), row.pi_x];
        for ((col, w), g) in ["np0", "np2", "pi"].iter().zip(want).zip(got) {
            out.check(label, col, w, g);
        }
        out.rows.push(
            std::iter::once(row.x.to_string()).chain(got.iter().map(u64::to_string)).collect(),
        );
    }
    Ok(out)
}

pub fn table4() -> Result<Reproduction> {
    let exp = expected::table4();
    let t = trinomial_table(101, 2..=15)?;
    let mut header = vec!["p"];
    let names: Vec<String> = (2..=15).map(|n| format!("n{n}")).collect();
    header.extend(names.iter().map(String::as_str));
    let mut out = Reproduction::new(TableId::Table4, &header);
    if t.len() != exp.rows.len() {
        out.check("rows", "count", exp.rows.len(), t.len());
    }
    for ((p, got), (label, want)) in t.iter().zip(&exp.rows) {
        out.check(label, "p", label, p);
        for ((col, w), g) in names.iter().zip(want).zip(got) {
            out.check(label, col, w, g);
        }
        out.rows.push(std::iter::once(p.to_string()).chain(got.iter().map(usize::to_string)).collect());
    }
    Ok(out)
}

/// `x` rounded to one significant digit, as `<d>e<exp>`.
pub fn one_digit(x: &BigUint) -> String {
    let s = x.to_string();
    let lead: u32 = s[..1].parse().expect("digit");
    let next: u32 = s.get(1..2).map_or(0, |d| d.parse().expect("digit"));
    let (d, e) = if next >= 5 { (lead + 1, s.len() - 1) } else { (lead, s.len() - 1) };
    if d == 10 {
        format!("1e{}", e + 1)
    } else {
        format!("{d}e{e}")
    }
}

pub fn bounds_example() -> Result<Reproduction> {
    let c = IntPoly::one();
    let d: IntPoly = "-1+x+x^5+x^14".parse()?;
    let b = compute_bounds(&c, &d)?;
    let mut out = Reproduction::new(
        TableId::BoundsExample,
        &["quantity", "value", "expected", "tolerance"],
    );
    for e in expected::bounds_example() {
        let got = match e.quantity.as_str() {
            "n1" => b.n1.to_string(),
            "n4" => b.n4.to_string(),
            "n3" => one_digit(&b.n3),
            "n2_log10" => format!("{:.4}", b.n2_log10),
            other => format!("unknown quantity {other}"),
        };
        if e.quantity == "n2_log10" {
            let want: f64 = e.expected.parse().expect("embedded value");
            let tol: f64 = e.tolerance.parse().expect("embedded tolerance");
            if (b.n2_log10 - want).abs() > tol {
                out.check(&e.quantity, "value", &e.expected, &got);
            }
        } else {
            out.check(&e.quantity, "value", &e.expected, &got);
        }
        out.rows.push(vec![e.quantity.clone(), got, e.expected.clone(), e.tolerance.clone()]);
    }
    out.rows.push(vec![
        "n3_exact".into(),
        b.n3.to_string(),
        String::new(),
        String::new(),
    ]);
    out.rows.push(vec![
        "n3_family".into(),
        b.n3_family.to_string(),
        String::new(),
        String::new(),
    ]);
    Ok(out)
}
