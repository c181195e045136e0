use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;
use serde::Serialize;

use super::{find_w0, AsymptoticConstants};
use crate::coeffs::{c_recursive, CoeffKey, QRecursion};
use crate::{Error, Result};

/// One entry of the main-term comparison: exact `C_{hkl}(N)` against the
/// conjectured main term.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TableRow {
    pub h: u32,
    pub k: u32,
    pub l: u32,
    #[serde(rename = "N")]
    pub n: u32,
    pub exact: f64,
    pub main_term: f64,
    /// `|1 - exact/main_term|`
    pub relative_gap: f64,
}

fn exact_real(h: u32, k: u32, n: u32) -> Result<f64> {
    let key = CoeffKey::new(h, k, 1, n)?;
    Ok(c_recursive(&key)?.embed(h as i64)?.re)
}

/// `C_{011}(N)` and `C_{121}(N)` with their main terms, for each `N`.
pub fn table1(ns: &[u32]) -> Result<Vec<TableRow>> {
    let c = find_w0()?;
    let mut rows = Vec::with_capacity(2 * ns.len());
    for &n in ns {
        if n < 2 {
            return Err(Error::OutOfRange(format!("table rows need N >= 2, got {n}")));
        }
        for (h, k, main) in [(0, 1, c.main_term_011(n)), (1, 2, c.main_term_121(n))] {
            let exact = exact_real(h, k, n)?;
            rows.push(TableRow {
                h,
                k,
                l: 1,
                n,
                exact,
                main_term: main,
                relative_gap: (1.0 - exact / main).abs(),
            });
        }
    }
    Ok(rows)
}

/// Keys of the averaged comparison table.
pub const TABLE2_KEYS: [(u32, u32, u32); 8] = [
    (0, 1, 1),
    (1, 2, 1),
    (1, 3, 1),
    (1, 4, 1),
    (0, 1, 2),
    (1, 2, 2),
    (1, 3, 2),
    (1, 4, 2),
];

/// `C_{hkl}(infinity)`: closed forms for `(0,1,1)` and `(1,2,1)`, tabulated
/// decimals otherwise.
fn c_infinity(h: u32, k: u32, l: u32) -> Complex64 {
    let r3 = 3f64.sqrt();
    let c = |re: f64, im: f64| Complex64::new(re, im);
    match (h, k, l) {
        (0, 1, 1) => c(-6.0 / 25.0 - 12.0 * r3 / (125.0 * PI), 0.0),
        (1, 2, 1) => c((r3 - 3.0) / 25.0 + 12.0 * (r3 + 3.0) / (125.0 * PI), 0.0),
        (1, 3, 1) => c(0.02417, -0.02881),
        (1, 4, 1) => c(0.007252, -0.01751),
        (0, 1, 2) => c(0.1898, 0.0),
        (1, 2, 2) => c(0.01531, 0.0),
        (1, 3, 2) => c(-0.0009364, -0.002573),
        (1, 4, 2) => c(-0.0007183, -0.0002975),
        _ => unreachable!("not a table key"),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Table2Row {
    pub h: u32,
    pub k: u32,
    pub l: u32,
    /// mean of `C_{hkl}(N)` over `1 <= N <= 100`
    #[serde(serialize_with = "ser_complex")]
    pub c_star: Complex64,
    #[serde(serialize_with = "ser_complex")]
    pub c_inf: Complex64,
    /// `|1 - c_star/c_inf|`
    pub gap: f64,
}

fn ser_complex<S: serde::Serializer>(z: &Complex64, s: S) -> std::result::Result<S::Ok, S::Error> {
    [z.re, z.im].serialize(s)
}

const TABLE2_RANGE: u32 = 100;

/// Averages of `C_{hkl}(N)` over `1 <= N <= 100` against `C_{hkl}(infinity)`.
/// Uses one `Q`-recursion per `(h, k)`.
pub fn table2() -> Result<Vec<Table2Row>> {
    let mut sums = std::collections::HashMap::new();
    for (h, k) in [(0, 1), (1, 2), (1, 3), (1, 4)] {
        let mut rec = QRecursion::new(h, k, (TABLE2_RANGE / k) as usize);
        let mut acc = [Complex64::new(0.0, 0.0); 2];
        for n in 1..=TABLE2_RANGE {
            rec.step();
            for l in 1..=2u32 {
                if l <= n / k {
                    acc[l as usize - 1] += rec.coefficient(l)?.embed(h as i64)?;
                }
            }
        }
        sums.insert((h, k), acc);
    }
    Ok(TABLE2_KEYS
        .iter()
        .map(|&(h, k, l)| {
            let c_star = sums[&(h, k)][l as usize - 1] / TABLE2_RANGE as f64;
            let c_inf = c_infinity(h, k, l);
            Table2Row {
                h,
                k,
                l,
                c_star,
                c_inf,
                gap: (Complex64::new(1.0, 0.0) - c_star / c_inf).norm(),
            }
        })
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Figure {
    /// `C_{011}(N) N^2 e^{-NU}`
    Fig1,
    /// `C_{121}(N) N^2 e^{-NU/2}`
    Fig2,
}

impl std::str::FromStr for Figure {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fig1" | "1" => Ok(Figure::Fig1),
            "fig2" | "2" => Ok(Figure::Fig2),
            _ => Err(Error::Parse(format!("unknown figure {s:?}"))),
        }
    }
}

impl fmt::Display for Figure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Figure::Fig1 => "fig1",
            Figure::Fig2 => "fig2",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FigureRow {
    #[serde(rename = "N")]
    pub n: u32,
    /// scaled exact coefficient
    pub exact: f64,
    /// the sinusoid `alpha sin(beta + N V)` (or its `k = 2` analogue)
    pub main_term: f64,
}

/// Scaled exact values and the limiting sinusoid over `range`.
pub fn figure_series(which: Figure, range: std::ops::RangeInclusive<u32>) -> Result<Vec<FigureRow>> {
    let c: AsymptoticConstants = find_w0()?;
    let (h, k) = match which {
        Figure::Fig1 => (0, 1),
        Figure::Fig2 => (1, 2),
    };
    if *range.start() < k {
        return Err(Error::OutOfRange(format!("{which} needs N >= {k}")));
    }
    // one deep run fills the diagonal cache for every smaller N
    if let Some(&top) = range.clone().last().as_ref() {
        exact_real(h, k, top)?;
    }
    range
        .map(|n| {
            let nf = n as f64;
            let (u, sinusoid) = match which {
                Figure::Fig1 => (c.u, c.sinusoid_011(n)),
                Figure::Fig2 => (0.5 * c.u, c.sinusoid_121(n)),
            };
            Ok(FigureRow {
                n,
                exact: exact_real(h, k, n)? * nf * nf * (-nf * u).exp(),
                main_term: sinusoid,
            })
        })
        .collect()
}

/// CSV with header `N,exact,main_term,ratio`.
pub fn figure_csv(rows: &[FigureRow]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Parse(e.to_string());
    w.write_record(["N", "exact", "main_term", "ratio"]).map_err(io)?;
    for r in rows {
        w.write_record([
            r.n.to_string(),
            format!("{:.15e}", r.exact),
            format!("{:.15e}", r.main_term),
            format!("{:.15e}", r.exact / r.main_term),
        ])
        .map_err(io)?;
    }
    String::from_utf8(w.into_inner().map_err(|e| Error::Parse(e.to_string()))?)
        .map_err(|e| Error::Parse(e.to_string()))
}

/// CSV with header `h,k,l,N,exact,main_term,ratio`.
pub fn table_csv(rows: &[TableRow]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Parse(e.to_string());
    w.write_record(["h", "k", "l", "N", "exact", "main_term", "ratio"]).map_err(io)?;
    for r in rows {
        w.write_record([
            r.h.to_string(),
            r.k.to_string(),
            r.l.to_string(),
            r.n.to_string(),
            format!("{:.15e}", r.exact),
            format!("{:.15e}", r.main_term),
            format!("{:.15e}", r.exact / r.main_term),
        ])
        .map_err(io)?;
    }
    String::from_utf8(w.into_inner().map_err(|e| Error::Parse(e.to_string()))?)
        .map_err(|e| Error::Parse(e.to_string()))
}
