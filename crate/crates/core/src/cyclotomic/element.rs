use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{self, serde_rational, QPolynomial, Rational};
use crate::{Error, Result};

struct Context {
    phi: usize,
    /// Coefficients of the monic `Phi_k`, lowest degree first.
    modulus: Vec<i64>,
}

static CONTEXTS: RwLock<Option<HashMap<u32, Arc<Context>>>> = RwLock::new(None);

fn context(k: u32) -> Arc<Context> {
    if let Some(c) = CONTEXTS.read().unwrap().as_ref().and_then(|m| m.get(&k)) {
        return c.clone();
    }
    let poly = cyclotomic_polynomial(k);
    let modulus = poly
        .coeffs()
        .iter()
        .map(|c| c.to_integer().to_i64().expect("cyclotomic coefficient fits in i64"))
        .collect::<Vec<_>>();
    let ctx = Arc::new(Context {
        phi: modulus.len() - 1,
        modulus,
    });
    CONTEXTS
        .write()
        .unwrap()
        .get_or_insert_with(HashMap::new)
        .entry(k)
        .or_insert(ctx)
        .clone()
}

/// The `k`-th cyclotomic polynomial, computed as `(x^k - 1) / prod_{d | k, d < k} Phi_d`.
pub fn cyclotomic_polynomial(k: u32) -> QPolynomial {
    assert!(k >= 1, "conductor must be positive");
    let mut num = QPolynomial::monomial(Rational::one(), k as usize);
    num = &num - &QPolynomial::one();
    for d in (1..k).filter(|d| k % d == 0) {
        let (q, r) = num.div_rem(&cyclotomic_polynomial(d)).expect("nonzero divisor");
        debug_assert!(r.is_zero());
        num = q;
    }
    num
}

/// Reduces a coefficient vector modulo `Phi_k` in place and truncates it to
/// `phi(k)` entries.
fn reduce_in_place(ctx: &Context, p: &mut Vec<Rational>) {
    let phi = ctx.phi;
    for i in (phi..p.len()).rev() {
        if p[i].is_zero() {
            continue;
        }
        let c = std::mem::take(&mut p[i]);
        for (j, &m) in ctx.modulus[..phi].iter().enumerate() {
            match m {
                0 => {}
                1 => p[i - phi + j] -= &c,
                -1 => p[i - phi + j] += &c,
                _ => p[i - phi + j] -= &c * Rational::from_integer(m.into()),
            }
        }
    }
    p.resize(phi, Rational::zero());
}

fn reduce_in_place_int(ctx: &Context, p: &mut Vec<BigInt>) {
    let phi = ctx.phi;
    for i in (phi..p.len()).rev() {
        if p[i].is_zero() {
            continue;
        }
        let c = std::mem::take(&mut p[i]);
        for (j, &m) in ctx.modulus[..phi].iter().enumerate() {
            match m {
                0 => {}
                1 => p[i - phi + j] -= &c,
                -1 => p[i - phi + j] += &c,
                _ => p[i - phi + j] -= &c * m,
            }
        }
    }
    p.resize(phi, BigInt::zero());
}

/// Numerators over the lcm `d` of the denominators.
fn integer_parts(c: &[Rational]) -> (Vec<BigInt>, BigInt) {
    let d = c.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let nums = c.iter().map(|x| x.numer() * (&d / x.denom())).collect();
    (nums, d)
}

/// Element of `Q(zeta_k)` in the power basis `1, zeta_k, ..., zeta_k^{phi(k)-1}`,
/// where `zeta_k = e^{2 pi i / k}`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawElement", into = "RawElement")]
pub struct CycloElement {
    k: u32,
    coeffs: Vec<Rational>,
}

#[derive(Serialize, Deserialize)]
struct RawElement {
    k: u32,
    #[serde(with = "serde_rational::vec")]
    coeffs: Vec<Rational>,
}

impl TryFrom<RawElement> for CycloElement {
    type Error = Error;
    fn try_from(raw: RawElement) -> Result<Self> {
        if raw.k == 0 {
            return Err(Error::OutOfRange("conductor 0".into()));
        }
        let phi = context(raw.k).phi;
        if raw.coeffs.len() != phi {
            return Err(Error::Parse(format!(
                "expected {phi} coefficients for k = {}, got {}",
                raw.k,
                raw.coeffs.len()
            )));
        }
        Ok(CycloElement { k: raw.k, coeffs: raw.coeffs })
    }
}

impl From<CycloElement> for RawElement {
    fn from(e: CycloElement) -> Self {
        RawElement { k: e.k, coeffs: e.coeffs }
    }
}

impl CycloElement {
    /// Builds an element from arbitrary-length coefficients of powers of
    /// `zeta_k`, reducing modulo `Phi_k`.
    pub fn from_poly_coeffs(k: u32, mut coeffs: Vec<Rational>) -> Self {
        let ctx = context(k);
        reduce_in_place(&ctx, &mut coeffs);
        CycloElement { k, coeffs }
    }

    pub fn zero(k: u32) -> Self {
        let phi = context(k).phi;
        CycloElement { k, coeffs: vec![Rational::zero(); phi] }
    }

    pub fn one(k: u32) -> Self {
        Self::from_rational(k, Rational::one())
    }

    pub fn from_rational(k: u32, r: Rational) -> Self {
        let mut e = Self::zero(k);
        e.coeffs[0] = r;
        e
    }

    /// `zeta_k^e` for any integer exponent.
    /// `1/(1 - zeta_k^e) = -(1/K) sum_{j<K} j zeta_k^{ej}` with `K` the order
    /// of `zeta_k^e`.
    pub fn inv_one_minus_zeta_pow(k: u32, e: i64) -> Result<Self> {
        let e = e.rem_euclid(k as i64) as u64;
        if e == 0 {
            return Err(Error::DivisionByZero);
        }
        let order = k as u64 / e.gcd(&(k as u64));
        let w = -Rational::new(BigInt::one(), BigInt::from(order));
        let mut c = vec![Rational::zero(); k as usize];
        for j in 1..order {
            c[((e * j) % k as u64) as usize] += &w * Rational::from_integer(j.into());
        }
        Ok(Self::from_poly_coeffs(k, c))
    }

    pub fn zeta_pow(k: u32, e: i64) -> Self {
        let e = e.rem_euclid(k as i64) as usize;
        let mut c = vec![Rational::zero(); e + 1];
        c[e] = Rational::one();
        Self::from_poly_coeffs(k, c)
    }

    pub fn conductor(&self) -> u32 {
        self.k
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The rational value, when every coefficient past the constant vanishes.
    pub fn to_rational(&self) -> Option<Rational> {
        self.coeffs[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| self.coeffs[0].clone())
    }

    pub fn to_rational_or_err(&self) -> Result<Rational> {
        self.to_rational().ok_or_else(|| Error::NotRational(self.to_string()))
    }

    fn check(&self, o: &Self) -> Result<()> {
        if self.k == o.k {
            Ok(())
        } else {
            Err(Error::ConductorMismatch(self.k, o.k))
        }
    }

    pub fn try_add(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        Ok(CycloElement {
            k: self.k,
            coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn try_sub(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        Ok(CycloElement {
            k: self.k,
            coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let n = self.coeffs.len();
        if n == 1 {
            return Ok(CycloElement {
                k: self.k,
                coeffs: vec![&self.coeffs[0] * &o.coeffs[0]],
            });
        }
        // integer product over a common denominator, one normalisation at the end
        let (a, da) = integer_parts(&self.coeffs);
        let (b, db) = integer_parts(&o.coeffs);
        let mut out = vec![BigInt::zero(); 2 * n - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    out[i + j] += x * y;
                }
            }
        }
        let ctx = context(self.k);
        reduce_in_place_int(&ctx, &mut out);
        let d = da * db;
        Ok(CycloElement {
            k: self.k,
            coeffs: out.into_iter().map(|c| Rational::new(c, d.clone())).collect(),
        })
    }

    pub fn add_assign(&mut self, o: &Self) {
        assert_eq!(self.k, o.k, "conductor mismatch");
        for (a, b) in self.coeffs.iter_mut().zip(&o.coeffs) {
            *a += b;
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        CycloElement {
            k: self.k,
            coeffs: self.coeffs.iter().map(|a| a * r).collect(),
        }
    }

    pub fn pow(&self, e: u64) -> Self {
        let mut out = Self::one(self.k);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                out = &out * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        out
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against `Phi_k`.
    pub fn invert(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.coeffs.len() == 1 {
            return Ok(Self::from_rational(self.k, self.coeffs[0].recip()));
        }
        let a = QPolynomial::new(self.coeffs.clone());
        let (g, s, _) = a.ext_gcd(&cyclotomic_polynomial(self.k));
        debug_assert!(g.is_one_constant());
        Ok(Self::from_poly_coeffs(self.k, s.into_coeffs()))
    }

    pub fn try_div(&self, o: &Self) -> Result<Self> {
        self.try_mul(&o.invert()?)
    }

    /// Applies the automorphism `zeta_k -> zeta_k^h`, `gcd(h, k) = 1`.
    pub fn galois(&self, h: i64) -> Result<Self> {
        let k = self.k as i64;
        if h.gcd(&k) != 1 {
            return Err(Error::NonPrimitive { h, k: self.k });
        }
        let mut g = GroupRingElement::zero(self.k);
        for (j, c) in self.coeffs.iter().enumerate() {
            let idx = (j as i64 * h).rem_euclid(k) as usize;
            g.coeffs[idx] += c;
        }
        Ok(g.reduce())
    }

    /// Field trace to `Q`: the sum over all conjugates, computed from
    /// `Tr(zeta_k^j) = c_k(j)` (Ramanujan sums).
    pub fn trace(&self) -> Rational {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| c * Rational::from_integer(arith::ramanujan_sum(self.k as u64, j as i64).into()))
            .sum()
    }

    /// Complex value under `zeta_k -> e^{2 pi i h / k}`; `h` must be coprime to `k`.
    pub fn embed(&self, h: i64) -> Result<Complex64> {
        let k = self.k as i64;
        if h.gcd(&k) != 1 {
            return Err(Error::NonPrimitive { h, k: self.k });
        }
        Ok(self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| {
                let angle = 2.0 * std::f64::consts::PI * ((j as i64 * h).rem_euclid(k) as f64) / k as f64;
                Complex64::from_polar(c.to_f64().unwrap_or(f64::NAN), angle)
            })
            .sum())
    }

    /// Value under the natural embedding `zeta_k = e^{2 pi i / k}`.
    pub fn to_complex(&self) -> Complex64 {
        self.embed(1).expect("1 is coprime to every k")
    }
}

trait IsOneConstant {
    fn is_one_constant(&self) -> bool;
}

impl IsOneConstant for QPolynomial {
    fn is_one_constant(&self) -> bool {
        self.degree() == Some(0) && self.coeff(0).is_one()
    }
}

impl fmt::Display for CycloElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = QPolynomial::new(self.coeffs.clone());
        f.write_str(&p.display_with(&format!("ζ{}", self.k)))
    }
}

impl fmt::Debug for CycloElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloElement[k={}]({})", self.k, self)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $try:ident) => {
        impl $tr for &CycloElement {
            type Output = CycloElement;
            fn $m(self, o: &CycloElement) -> CycloElement {
                self.$try(o).expect("conductor mismatch")
            }
        }
        impl $tr for CycloElement {
            type Output = CycloElement;
            fn $m(self, o: CycloElement) -> CycloElement {
                self.$try(&o).expect("conductor mismatch")
            }
        }
    };
}
binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl Neg for &CycloElement {
    type Output = CycloElement;
    fn neg(self) -> CycloElement {
        CycloElement {
            k: self.k,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl arith::series::Coefficient for CycloElement {
    fn zero_like(&self) -> Self {
        CycloElement::zero(self.k)
    }
    fn is_zero(&self) -> bool {
        CycloElement::is_zero(self)
    }
    fn add_assign_ref(&mut self, other: &Self) {
        self.add_assign(other);
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, r: &Rational) -> Self {
        CycloElement::scale(self, r)
    }
}

/// Element of the group ring `Q[x]/(x^k - 1)`, before reduction to `Q(zeta_k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupRingElement {
    k: u32,
    coeffs: Vec<Rational>,
}

impl GroupRingElement {
    pub fn zero(k: u32) -> Self {
        GroupRingElement {
            k,
            coeffs: vec![Rational::zero(); k as usize],
        }
    }

    /// Wraps coefficients, folding exponents modulo `k`.
    pub fn new(k: u32, coeffs: Vec<Rational>) -> Self {
        let mut g = Self::zero(k);
        for (i, c) in coeffs.into_iter().enumerate() {
            g.coeffs[i % k as usize] += c;
        }
        g
    }

    pub fn conductor(&self) -> u32 {
        self.k
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Adds `c * x^e`.
    pub fn add_term(&mut self, e: i64, c: &Rational) {
        let idx = e.rem_euclid(self.k as i64) as usize;
        self.coeffs[idx] += c;
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self> {
        if self.k != o.k {
            return Err(Error::ConductorMismatch(self.k, o.k));
        }
        let k = self.k as usize;
        let mut out = Self::zero(self.k);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[(i + j) % k] += a * b;
                }
            }
        }
        Ok(out)
    }

    pub fn try_add(&self, o: &Self) -> Result<Self> {
        if self.k != o.k {
            return Err(Error::ConductorMismatch(self.k, o.k));
        }
        Ok(GroupRingElement {
            k: self.k,
            coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    /// The ring homomorphism `x -> zeta_k`.
    pub fn reduce(&self) -> CycloElement {
        CycloElement::from_poly_coeffs(self.k, self.coeffs.clone())
    }
}
