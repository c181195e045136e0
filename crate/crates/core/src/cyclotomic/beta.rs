use std::collections::HashMap;
use std::sync::RwLock;


use super::element::{CycloElement, GroupRingElement};
use crate::arith::{self, int, Rational};
use crate::{Error, Result};

type BetaCache = HashMap<(usize, u32, u32), CycloElement>;

static CACHE: RwLock<Option<BetaCache>> = RwLock::new(None);

/// Which closed form to use for the Apostol-Bernoulli coefficient.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BetaVariant {
    /// `k^{m-1} sum_i xi^i B_m(i/k)`; the default.
    Multiplication,
    /// Stirling numbers of the second kind in powers of `1/(xi - 1)`.
    Stirling,
    /// Stirling numbers of `m - 1` with alternating powers of `xi`.
    Glaisher2,
    /// Stirling numbers of `m - 2` in powers of `1/(1 - xi)`.
    Glaisher4,
}

/// The coefficient `beta_m(xi)` in `z/(xi e^z - 1) = sum_m beta_m(xi) z^m/m!`
/// for `xi = zeta_k^j`, as an element of `Q(zeta_k)`. For `xi = 1` this is
/// the Bernoulli number `B_m` with `B_1 = -1/2`.
pub fn apostol_beta(m: usize, j: i64, k: u32) -> CycloElement {
    let j = j.rem_euclid(k as i64) as u32;
    if let Some(v) = CACHE.read().unwrap().as_ref().and_then(|c| c.get(&(m, j, k))) {
        return v.clone();
    }
    let v = beta_multiplication(m, j, k);
    CACHE
        .write()
        .unwrap()
        .get_or_insert_with(HashMap::new)
        .insert((m, j, k), v.clone());
    v
}

fn beta_multiplication(m: usize, j: u32, k: u32) -> CycloElement {
    if j == 0 {
        return CycloElement::from_rational(k, arith::bernoulli_number(m));
    }
    let bm = arith::bernoulli_poly(m);
    let kpow = if m == 0 {
        Rational::new(1.into(), k.into())
    } else {
        int(num_bigint::BigInt::from(k).pow(m as u32 - 1))
    };
    let mut g = GroupRingElement::zero(k);
    for i in 0..k {
        let v = bm.eval(&Rational::new(i.into(), k.into()));
        g.add_term(i as i64 * j as i64, &(v * &kpow));
    }
    g.reduce()
}

/// Evaluates `beta_m(zeta_k^j)` with the chosen closed form. Every variant
/// other than [`BetaVariant::Multiplication`] requires `xi != 1`.
pub fn apostol_beta_variant(variant: BetaVariant, m: usize, j: i64, k: u32) -> Result<CycloElement> {
    match variant {
        BetaVariant::Multiplication => Ok(apostol_beta(m, j, k)),
        BetaVariant::Stirling => apostol_beta_stirling(m, j, k),
        BetaVariant::Glaisher2 => apostol_beta_glaisher2(m, j, k),
        BetaVariant::Glaisher4 => apostol_beta_glaisher4(m, j, k),
    }
}

fn nontrivial_root(j: i64, k: u32) -> Result<CycloElement> {
    if j.rem_euclid(k as i64) == 0 {
        return Err(Error::OutOfRange(format!("xi = zeta_{k}^{j} equals 1")));
    }
    Ok(CycloElement::zeta_pow(k, j))
}

fn from_big(k: u32, n: num_bigint::BigUint) -> CycloElement {
    CycloElement::from_rational(k, int(num_bigint::BigInt::from(n)))
}

/// `(-1)^{m-1} m sum_{i=1}^m S(m,i) (i-1)! / (xi - 1)^i`.
pub fn apostol_beta_stirling(m: usize, j: i64, k: u32) -> Result<CycloElement> {
    let xi = nontrivial_root(j, k)?;
    if m == 0 {
        return Ok(CycloElement::zero(k));
    }
    let inv = (&xi - &CycloElement::one(k)).invert()?;
    let mut acc = CycloElement::zero(k);
    let mut p = CycloElement::one(k);
    for i in 1..=m {
        p = &p * &inv;
        let c = from_big(k, arith::stirling2(m, i)).scale(&int(arith::factorial(i as u64 - 1)));
        acc.add_assign(&(&c * &p));
    }
    Ok(acc.scale(&(arith::sequences::sign_pow(m as u64 - 1) * int(m as i64))))
}

/// `m sum_{i=1}^m S(m-1,i-1) (-xi)^{i-1} (i-1)! / (xi - 1)^i`.
pub fn apostol_beta_glaisher2(m: usize, j: i64, k: u32) -> Result<CycloElement> {
    let xi = nontrivial_root(j, k)?;
    if m == 0 {
        return Ok(CycloElement::zero(k));
    }
    let inv = (&xi - &CycloElement::one(k)).invert()?;
    let step = &(-&xi) * &inv;
    let mut acc = CycloElement::zero(k);
    let mut p = inv.clone();
    for i in 1..=m {
        let c = from_big(k, arith::stirling2(m - 1, i - 1)).scale(&int(arith::factorial(i as u64 - 1)));
        acc.add_assign(&(&c * &p));
        p = &p * &step;
    }
    Ok(acc.scale(&int(m as i64)))
}

/// `-m sum_{i=0}^{m-2} S(m-2,i) xi^i i! (i + xi) / (1 - xi)^{i+2}`, for `m >= 2`.
pub fn apostol_beta_glaisher4(m: usize, j: i64, k: u32) -> Result<CycloElement> {
    let xi = nontrivial_root(j, k)?;
    let one = CycloElement::one(k);
    match m {
        0 => return Ok(CycloElement::zero(k)),
        1 => return (&xi - &one).invert(),
        _ => {}
    }
    let inv = (&one - &xi).invert()?;
    let step = &xi * &inv;
    let mut acc = CycloElement::zero(k);
    let mut p = &inv * &inv;
    for i in 0..=m - 2 {
        let c = from_big(k, arith::stirling2(m - 2, i)).scale(&int(arith::factorial(i as u64)));
        let shift = &CycloElement::from_rational(k, int(i as i64)) + &xi;
        acc.add_assign(&(&(&c * &p) * &shift));
        p = &p * &step;
    }
    Ok(acc.scale(&-int(m as i64)))
}
