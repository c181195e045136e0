//! Truncated power series over any exact coefficient ring.
//!
//! A series is a plain slice `a[0..len]` of coefficients of `z^0, z^1, ...`.

use num_traits::{One, Zero};

use super::poly::QPolynomial;
use super::rational::Rational;

/// The operations the series routines need from a coefficient ring that is
/// also a `Q`-algebra.
pub trait Coefficient: Clone {
    fn zero_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add_assign_ref(&mut self, other: &Self);
    fn mul_ref(&self, other: &Self) -> Self;
    fn scale(&self, r: &Rational) -> Self;
}

impl Coefficient for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, r: &Rational) -> Self {
        self * r
    }
}

impl Coefficient for QPolynomial {
    fn zero_like(&self) -> Self {
        QPolynomial::zero()
    }
    fn is_zero(&self) -> bool {
        QPolynomial::is_zero(self)
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self = &*self + other;
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, r: &Rational) -> Self {
        QPolynomial::scale(self, r)
    }
}

/// Product truncated to `len` terms.
pub fn mul_trunc<T: Coefficient>(a: &[T], b: &[T], len: usize) -> Vec<T> {
    let zero = a.first().or(b.first()).expect("empty series").zero_like();
    let mut out = vec![zero; len];
    for (i, x) in a.iter().enumerate().take(len) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(len - i) {
            if y.is_zero() {
                continue;
            }
            out[i + j].add_assign_ref(&x.mul_ref(y));
        }
    }
    out
}

/// `a^e` truncated to `len` terms; `one` is the unit of the ring.
pub fn pow_trunc<T: Coefficient>(a: &[T], e: u64, len: usize, one: &T) -> Vec<T> {
    let mut out = vec![one.zero_like(); len];
    if len > 0 {
        out[0] = one.clone();
    }
    let mut base: Vec<T> = a.iter().take(len).cloned().collect();
    base.resize(len, one.zero_like());
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            out = mul_trunc(&out, &base, len);
        }
        e >>= 1;
        if e > 0 {
            base = mul_trunc(&base, &base, len);
        }
    }
    out
}

/// `exp(f)` truncated to `len` terms for a series with `f[0] = 0`, using
/// `g' = f' g`, i.e. `m g_m = sum_{j=1}^{m} j f_j g_{m-j}`.
pub fn exp_trunc<T: Coefficient>(f: &[T], len: usize, one: &T) -> Vec<T> {
    debug_assert!(f.first().map_or(true, Coefficient::is_zero));
    let mut g: Vec<T> = Vec::with_capacity(len);
    if len == 0 {
        return g;
    }
    g.push(one.clone());
    for m in 1..len {
        let mut acc = one.zero_like();
        for j in 1..=m.min(f.len().saturating_sub(1)) {
            if f[j].is_zero() || g[m - j].is_zero() {
                continue;
            }
            let t = f[j].mul_ref(&g[m - j]).scale(&Rational::from_integer(j.into()));
            acc.add_assign_ref(&t);
        }
        g.push(acc.scale(&Rational::from_integer(m.into()).recip()));
    }
    g
}

/// Coefficients `1/j!` of `e^{cz}` scaled: `c^j / j!`.
pub fn exp_linear(c: &Rational, len: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(len);
    let mut term = Rational::one();
    for j in 0..len {
        out.push(term.clone());
        term = term * c / Rational::from_integer((j + 1).into());
    }
    out
}
