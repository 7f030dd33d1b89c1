//! JSON shapes of the command outputs.

use std::collections::BTreeMap;

use lacunary_core::stats::PrimeSweepReport;
use lacunary_core::FactorSplit;
use serde::Serialize;

#[derive(Debug, Serialize)]
pub struct SweepJson {
    pub poly: String,
    pub x: u64,
    pub mean_num: u64,
    pub mean_den: u64,
    pub hist: BTreeMap<String, u64>,
    pub excluded: Vec<u64>,
}

impl From<&PrimeSweepReport> for SweepJson {
    fn from(r: &PrimeSweepReport) -> Self {
        let mean = r.mean();
        Self {
            poly: r.poly_id.clone(),
            x: r.x_max,
            mean_num: *mean.numer(),
            mean_den: *mean.denom(),
            hist: r.count_by_value().into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
            excluded: r.excluded.clone(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct CycloJson {
    pub k: u64,
    pub mult: u32,
}

#[derive(Debug, Serialize)]
pub struct FactorJson {
    #[serde(rename = "A")]
    pub a: Vec<CycloJson>,
    #[serde(rename = "B")]
    pub b: String,
    #[serde(rename = "C")]
    pub c: String,
    #[serde(rename = "conjB")]
    pub conj_b: bool,
}

impl From<&FactorSplit> for FactorJson {
    fn from(s: &FactorSplit) -> Self {
        Self {
            a: s.cyclotomic.iter().map(|&(k, mult)| CycloJson { k, mult }).collect(),
            b: s.b.to_string(),
            c: s.c.to_string(),
            conj_b: s.conjecture_b_holds,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct BoundsJson {
    pub c: String,
    pub d: String,
    #[serde(rename = "N1")]
    pub n1: u64,
    #[serde(rename = "N2_log10")]
    pub n2_log10: Option<f64>,
    #[serde(rename = "N3")]
    pub n3: String,
    #[serde(rename = "N3_family")]
    pub n3_family: String,
    #[serde(rename = "N4")]
    pub n4: u64,
    #[serde(rename = "T")]
    pub big_t: usize,
    pub t: usize,
    pub norm_sum: u64,
    pub capellian: &'static str,
}

#[derive(Debug, Serialize)]
pub struct Table1Json {
    pub exp: Option<usize>,
    pub n: usize,
    pub m1: usize,
    pub quad_irred: bool,
    #[serde(rename = "N4")]
    pub n4: u64,
    pub phi_set: Vec<u64>,
    #[serde(rename = "conjB")]
    pub conj_b: bool,
    pub members: usize,
}

#[derive(Debug, Serialize)]
pub struct CheckpointJson {
    pub x: u64,
    pub pi_x: u64,
    pub hist: BTreeMap<String, u64>,
}

#[derive(Debug, Serialize)]
pub struct ResidueJson {
    pub modulus: u64,
    pub baseline: Option<String>,
    pub hist: BTreeMap<String, u64>,
}

#[derive(Debug, Serialize)]
pub struct DensityJson {
    #[serde(flatten)]
    pub sweep: SweepJson,
    pub p0: [u64; 2],
    pub pmax: [u64; 2],
    pub pmax_witnesses: Vec<u64>,
    pub euler_characteristics: [usize; 2],
    pub checkpoints: Vec<CheckpointJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residues: Option<ResidueJson>,
}

#[derive(Debug, Serialize)]
pub struct NewformJson {
    pub p: u64,
    pub formula: String,
    pub np_actual: usize,
    pub consistent: bool,
}

#[derive(Debug, Serialize)]
pub struct BetaJson {
    pub target: String,
    pub beta: f64,
    pub terms: usize,
    pub digits: String,
    pub exponents: Vec<usize>,
    pub finite: bool,
    pub precision_bits: Vec<u32>,
}

#[derive(Debug, Serialize)]
pub struct ArcJson {
    #[serde(rename = "N")]
    pub n_max: usize,
    pub class_size: String,
    pub irreducible: u64,
    pub total: u64,
    pub proportion_num: u64,
    pub proportion_den: u64,
    pub exhaustive: bool,
    pub measure: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

#[derive(Debug, Serialize)]
pub struct DiffJson {
    pub row: String,
    pub col: String,
    pub expected: String,
    pub got: String,
}

#[derive(Debug, Serialize)]
pub struct ReproductionJson {
    pub table: &'static str,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub diffs: Vec<DiffJson>,
    pub warnings: Vec<String>,
}

impl From<&crate::reproduce::Reproduction> for ReproductionJson {
    fn from(r: &crate::reproduce::Reproduction) -> Self {
        Self {
            table: r.table.name(),
            header: r.header.clone(),
            rows: r.rows.clone(),
            diffs: r
                .diffs
                .iter()
                .map(|d| DiffJson {
                    row: d.row.clone(),
                    col: d.col.clone(),
                    expected: d.expected.clone(),
                    got: d.got.clone(),
                })
                .collect(),
            warnings: r.warnings.clone(),
        }
    }
}
