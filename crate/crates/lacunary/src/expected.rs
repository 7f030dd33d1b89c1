//! Expected values for the reproduced tables, embedded from `data/`.

use std::collections::BTreeSet;

use serde::Deserialize;

pub const TABLE1_CSV: &str = include_str!("../data/table1.csv");
pub const TABLE2_CSV: &str = include_str!("../data/table2.csv");
pub const TABLE3_CSV: &str = include_str!("../data/table3.csv");
pub const TABLE4_CSV: &str = include_str!("../data/table4.csv");
pub const BOUNDS_CSV: &str = include_str!("../data/bounds_example.csv");

fn reader(text: &str) -> csv::Reader<&[u8]> {
    csv::ReaderBuilder::new().comment(Some(b'#')).from_reader(text.as_bytes())
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
pub struct Table1Expected {
    pub exp: usize,
    pub n: usize,
    pub m1: usize,
    /// `+` or `-`.
    pub quad_irreducible: String,
    pub n4: u64,
    /// Space-separated cyclotomic indices.
    pub phi: String,
    pub conj_b: String,
}

impl Table1Expected {
    pub fn phi_set(&self) -> BTreeSet<u64> {
        self.phi.split_whitespace().map(|k| k.parse().expect("embedded index")).collect()
    }
}

pub fn table1() -> Vec<Table1Expected> {
    reader(TABLE1_CSV).deserialize().map(|r| r.expect("embedded table1")).collect()
}

/// A grid with a label column and a header row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grid {
    pub header: Vec<String>,
    pub rows: Vec<(String, Vec<u64>)>,
}

fn grid(text: &str) -> Grid {
    let mut rd = reader(text);
    let header = rd.headers().expect("embedded header").iter().skip(1).map(String::from).collect();
    let rows = rd
        .records()
        .map(|r| {
            let r = r.expect("embedded row");
            let vals = r.iter().skip(1).map(|v| v.parse().expect("embedded cell")).collect();
            (r[0].to_string(), vals)
        })
        .collect();
    Grid { header, rows }
}

pub fn table2() -> Grid {
    grid(TABLE2_CSV)
}

pub fn table3() -> Grid {
    grid(TABLE3_CSV)
}

pub fn table4() -> Grid {
    grid(TABLE4_CSV)
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
pub struct BoundExpected {
    pub quantity: String,
    pub expected: String,
    pub tolerance: String,
}

pub fn bounds_example() -> Vec<BoundExpected> {
    reader(BOUNDS_CSV).deserialize().map(|r| r.expect("embedded bounds")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        assert_eq!(table1().len(), 27);
        let t2 = table2();
        assert_eq!(t2.header.len(), 14);
        assert_eq!(t2.rows.len(), 10);
        let t4 = table4();
        assert_eq!(t4.rows.len(), 26);
        assert!(t4.rows.iter().all(|r| r.1.len() == 14));
        assert_eq!(table3().rows[2], ("10001".to_string(), vec![619, 609, 1229]));
        assert_eq!(bounds_example().len(), 4);
        assert_eq!(table1()[25].phi_set().into_iter().collect::<Vec<_>>(), [6, 30]);
    }
}
