use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{c_andrews, c_direct_row, c_log_series, c_recursive, e_diagonal, CoeffKey, QRecursion};
use crate::arith::sequences::sign_pow;
use crate::arith::{self, int, Rational};
use crate::cyclotomic::{CycloElement, GroupRingElement};
use crate::{Error, Result};

/// Which algorithm fills a [`DecompositionTable`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Direct,
    Recursive,
    Sz,
    Andrews,
    LogSeries,
}

impl Algorithm {
    pub const ALL: [Algorithm; 5] = [
        Algorithm::Direct,
        Algorithm::Recursive,
        Algorithm::Sz,
        Algorithm::Andrews,
        Algorithm::LogSeries,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Direct => "direct",
            Algorithm::Recursive => "recursive",
            Algorithm::Sz => "sz",
            Algorithm::Andrews => "andrews",
            Algorithm::LogSeries => "log-series",
        }
    }

    /// Coefficients `C_{hkl}(N)` for `l = 1..=floor(N/k)`.
    pub fn row(self, h: u32, k: u32, n: u32) -> Result<Vec<CycloElement>> {
        let s = n / k;
        match self {
            Algorithm::Direct => c_direct_row(h, k, n),
            Algorithm::Sz => {
                CoeffKey::new(h, k, 1, n)?;
                let mut rec = QRecursion::new(h, k, s.saturating_sub(1) as usize);
                for _ in 0..n {
                    rec.step();
                }
                (1..=s).map(|l| rec.coefficient(l)).collect()
            }
            _ => (1..=s)
                .map(|l| {
                    let key = CoeffKey::new(h, k, l, n)?;
                    match self {
                        Algorithm::Recursive => c_recursive(&key),
                        Algorithm::Andrews => c_andrews(&key),
                        _ => c_log_series(&key),
                    }
                })
                .collect(),
        }
    }
}

impl std::str::FromStr for Algorithm {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown algorithm {s:?}")))
    }
}

/// One coefficient in serialized form.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TableEntry {
    pub h: u32,
    pub k: u32,
    pub l: u32,
    pub value: CycloElement,
}

/// Every coefficient `C_{hkl}(N)` of the decomposition for one `N`.
#[derive(Clone, Debug, PartialEq)]
pub struct DecompositionTable {
    n: u32,
    entries: BTreeMap<(u32, u32, u32), CycloElement>,
}

#[derive(Serialize, Deserialize)]
struct TableJson {
    #[serde(rename = "N")]
    n: u32,
    entries: Vec<TableEntry>,
}

impl DecompositionTable {
    /// An empty table for `N`.
    pub fn new(n: u32) -> Self {
        DecompositionTable { n, entries: BTreeMap::new() }
    }

    /// Adds or replaces one coefficient.
    pub fn insert(&mut self, key: &CoeffKey, value: CycloElement) -> Result<()> {
        key.validate()?;
        if key.n != self.n {
            return Err(Error::OutOfRange(format!("key for N = {} in table for N = {}", key.n, self.n)));
        }
        if value.conductor() != key.k {
            return Err(Error::ConductorMismatch(value.conductor(), key.k));
        }
        self.entries.insert((key.h, key.k, key.l), value);
        Ok(())
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, h: u32, k: u32, l: u32) -> Option<&CycloElement> {
        self.entries.get(&(h, k, l))
    }

    /// Entries sorted by `(h, k, l)`.
    pub fn entries(&self) -> impl Iterator<Item = (CoeffKey, &CycloElement)> {
        let n = self.n;
        self.entries.iter().map(move |(&(h, k, l), v)| (CoeffKey { h, k, l, n }, v))
    }

    /// Merges two partial tables for the same `N`.
    pub fn merge(mut self, other: DecompositionTable) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::OutOfRange(format!("cannot merge N = {} with N = {}", self.n, other.n)));
        }
        self.entries.extend(other.entries);
        Ok(self)
    }

    /// Whether the keys are exactly the legal `(h, k, l)` for `N`.
    pub fn is_complete(&self) -> bool {
        let keys: Vec<_> = CoeffKey::all_for(self.n).into_iter().map(|c| (c.h, c.k, c.l)).collect();
        keys.len() == self.entries.len() && keys.iter().all(|k| self.entries.contains_key(k))
    }

    pub fn to_json(&self) -> String {
        let doc = TableJson {
            n: self.n,
            entries: self
                .entries
                .iter()
                .map(|(&(h, k, l), v)| TableEntry { h, k, l, value: v.clone() })
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("table serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let doc: TableJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        let mut entries = BTreeMap::new();
        for e in doc.entries {
            CoeffKey::new(e.h, e.k, e.l, doc.n)?;
            if e.value.conductor() != e.k {
                return Err(Error::ConductorMismatch(e.value.conductor(), e.k));
            }
            entries.insert((e.h, e.k, e.l), e.value);
        }
        Ok(DecompositionTable { n: doc.n, entries })
    }

    /// CSV with columns `h,k,l,exact,re,im`; the embedding under
    /// `zeta_k = e^{2 pi i/k}` is printed to 15 significant digits.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["h", "k", "l", "exact", "re", "im"]).expect("in-memory write");
        for (&(h, k, l), v) in &self.entries {
            let z = v.to_complex();
            w.write_record([
                h.to_string(),
                k.to_string(),
                l.to_string(),
                v.to_string(),
                format!("{:.14e}", z.re),
                format!("{:.14e}", z.im),
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
    }
}

/// The full decomposition for `N`, computed by one algorithm.
pub fn decompose(n: u32, algo: Algorithm) -> Result<DecompositionTable> {
    if n == 0 {
        return Err(Error::OutOfRange("N must be positive".into()));
    }
    let mut entries = BTreeMap::new();
    for (h, k) in CoeffKey::roots_for(n) {
        for (i, v) in algo.row(h, k, n)?.into_iter().enumerate() {
            entries.insert((h, k, i as u32 + 1), v);
        }
    }
    Ok(DecompositionTable { n, entries })
}

/// `p_N(n)` rebuilt from the coefficients as
/// `sum C_{hkl}(N) binom(l-1+n, l-1) (-1)^l rho^{-(l+n)}`, summed exactly in
/// each `Q(zeta_k)`. Errors if a partial sum is not rational or the total is
/// not an integer.
pub fn p_from_decomposition(table: &DecompositionTable, n: u64) -> Result<Rational> {
    let mut per_k: BTreeMap<u32, GroupRingElement> = BTreeMap::new();
    for (&(h, k, l), c) in &table.entries {
        let factor = sign_pow(l as u64) * int(arith::binomial(l as u64 - 1 + n, l as u64 - 1));
        let shift = -(h as i64) * ((l as u64 + n) % k as u64) as i64;
        let acc = per_k.entry(k).or_insert_with(|| GroupRingElement::zero(k));
        for (j, cj) in c.coeffs().iter().enumerate() {
            if !cj.is_zero() {
                acc.add_term(j as i64 + shift, &(cj * &factor));
            }
        }
    }
    let mut total = Rational::zero();
    for g in per_k.values() {
        total += g.reduce().to_rational_or_err()?;
    }
    if !total.is_integer() {
        return Err(Error::NotIntegral(arith::format_rational(&total)));
    }
    Ok(total)
}

/// `sum_{h mod k, (h,k)=1} C_{hkl}(N)` from the `E`-recursion and Ramanujan
/// sums `c_k(r + l)`.
pub fn c_sum_over_h(k: u32, l: u32, n: u32) -> Result<Rational> {
    CoeffKey::new(u32::from(k > 1), k, l, n)?;
    if l > n / k {
        return Ok(Rational::zero());
    }
    let scalar = sign_pow(n as u64) * int(arith::factorial(l as u64 - 1)) / int(arith::factorial(n as u64));
    let total: Rational = e_diagonal(k, l, n)
        .iter()
        .enumerate()
        .map(|(r, e)| e * int(arith::ramanujan_sum(k as u64, r as i64 + l as i64)))
        .sum();
    Ok(total * scalar)
}

/// The same sum taken directly over `h` in `Q(zeta_k)`.
pub fn c_sum_over_h_direct(k: u32, l: u32, n: u32) -> Result<Rational> {
    let mut acc = CycloElement::zero(k);
    for (h, kk) in CoeffKey::roots_for(n) {
        if kk != k {
            continue;
        }
        let key = CoeffKey::new(h, k, l, n)?;
        acc.add_assign(&super::c_direct(&key)?);
    }
    acc.to_rational_or_err()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::coeffs::p_oracle;
    use num_bigint::BigInt;

    #[test]
    fn n1_and_n2() {
        let t = decompose(1, Algorithm::Direct).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t.get(0, 1, 1).unwrap().to_rational(), Some(int(-1)));
        let t = decompose(2, Algorithm::Direct).unwrap();
        assert_eq!(t.get(0, 1, 1).unwrap().to_rational(), Some(rat(-1, 4)));
        assert_eq!(t.get(0, 1, 2).unwrap().to_rational(), Some(rat(1, 2)));
        assert_eq!(t.get(1, 2, 1).unwrap().to_rational(), Some(rat(1, 4)));
        assert!(t.is_complete());
    }

    #[test]
    fn reconstruction() {
        for n in 1..=7 {
            let t = decompose(n, Algorithm::Direct).unwrap();
            for m in 0..=50u64 {
                let p = p_from_decomposition(&t, m).unwrap();
                assert_eq!(p, int(BigInt::from(p_oracle(n, m))), "N={n} n={m}");
            }
        }
    }

    #[test]
    fn algorithms_give_same_table() {
        let base = decompose(8, Algorithm::Direct).unwrap();
        for a in Algorithm::ALL {
            assert_eq!(decompose(8, a).unwrap(), base, "{a:?}");
        }
    }

    #[test]
    fn json_roundtrip() {
        let t = decompose(4, Algorithm::Direct).unwrap();
        let back = DecompositionTable::from_json(&t.to_json()).unwrap();
        assert_eq!(back, t);
        assert!(t.to_csv().starts_with("h,k,l,exact,re,im\n0,1,1,"));
    }

    #[test]
    fn ramanujan_aggregate() {
        assert_eq!(c_sum_over_h(2, 1, 2).unwrap(), rat(1, 4));
        for n in 1..=9 {
            for k in 1..=n {
                for l in 1..=n / k {
                    assert_eq!(c_sum_over_h(k, l, n).unwrap(), c_sum_over_h_direct(k, l, n).unwrap());
                }
            }
        }
    }
}
