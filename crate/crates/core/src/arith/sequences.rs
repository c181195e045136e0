//! Memoized combinatorial sequences.
//!
//! Every table grows on demand behind an `RwLock`: lookups that hit the cache
//! only take the read lock, extensions take the write lock. Cached entries are
//! never modified once written.

use std::sync::RwLock;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use super::poly::QPolynomial;
use super::rational::Rational;
use super::series;

static FACTORIALS: RwLock<Vec<BigInt>> = RwLock::new(Vec::new());
static BERNOULLI: RwLock<Vec<Rational>> = RwLock::new(Vec::new());
static STIRLING1: RwLock<Vec<Vec<BigUint>>> = RwLock::new(Vec::new());
static STIRLING2: RwLock<Vec<Vec<BigUint>>> = RwLock::new(Vec::new());

fn cached<T: Clone>(
    lock: &RwLock<Vec<T>>,
    n: usize,
    extend: impl FnOnce(&mut Vec<T>, usize),
) -> T {
    if let Some(v) = lock.read().unwrap().get(n) {
        return v.clone();
    }
    let mut table = lock.write().unwrap();
    if table.len() <= n {
        extend(&mut table, n);
    }
    table[n].clone()
}

pub fn factorial(n: u64) -> BigInt {
    cached(&FACTORIALS, n as usize, |t, n| {
        if t.is_empty() {
            t.push(BigInt::one());
        }
        while t.len() <= n {
            let next = t.last().unwrap() * BigInt::from(t.len());
            t.push(next);
        }
    })
}

/// `binom(n, k)` for `n >= 0`; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `binom(n, k)` for any integer `n`, using `binom(-a, k) = (-1)^k binom(a+k-1, k)`.
pub fn binomial_signed(n: i64, k: u64) -> BigInt {
    if n >= 0 {
        binomial(n as u64, k)
    } else {
        let b = binomial((-n) as u64 + k - 1, k);
        if k % 2 == 1 {
            -b
        } else {
            b
        }
    }
}

/// Bernoulli number `B_n` with `B_1 = -1/2`.
pub fn bernoulli_number(n: usize) -> Rational {
    cached(&BERNOULLI, n, |t, n| {
        while t.len() <= n {
            let m = t.len();
            if m == 0 {
                t.push(Rational::one());
                continue;
            }
            if m > 1 && m % 2 == 1 {
                t.push(Rational::zero());
                continue;
            }
            // sum_{j=0}^{m} binom(m+1, j) B_j = 0
            let mut acc = Rational::zero();
            let mut binom = BigInt::one();
            for (j, b) in t.iter().enumerate() {
                if !b.is_zero() {
                    acc += b * Rational::from_integer(binom.clone());
                }
                binom = binom * (m + 1 - j) / (j + 1);
            }
            t.push(-acc / Rational::from_integer(BigInt::from(m + 1)));
        }
    })
}

/// Bernoulli polynomial `B_n(t) = sum_j binom(n, j) B_j t^{n-j}`.
pub fn bernoulli_poly(n: usize) -> QPolynomial {
    QPolynomial::new(
        (0..=n)
            .map(|i| bernoulli_number(n - i) * Rational::from_integer(binomial(n as u64, i as u64)))
            .collect(),
    )
}

/// Bernoulli polynomial of order `a`: `n!` times the coefficient of `z^n` in
/// `(z/(e^z - 1))^a e^{tz}`.
pub fn higher_bernoulli(n: usize, a: i64, t: &Rational) -> Rational {
    let len = n + 1;
    let base: Vec<Rational> = if a >= 0 {
        (0..len)
            .map(|j| bernoulli_number(j) / Rational::from_integer(factorial(j as u64)))
            .collect()
    } else {
        // (e^z - 1)/z
        (0..len)
            .map(|j| Rational::one() / Rational::from_integer(factorial(j as u64 + 1)))
            .collect()
    };
    let powered = series::pow_trunc(&base, a.unsigned_abs(), len, &Rational::one());
    let mut tpow = Rational::one();
    let mut exp_t = Vec::with_capacity(len);
    for j in 0..len {
        exp_t.push(&tpow / Rational::from_integer(factorial(j as u64)));
        tpow *= t;
    }
    let prod = series::mul_trunc(&powered, &exp_t, len);
    &prod[n] * Rational::from_integer(factorial(n as u64))
}

fn stirling_table(lock: &RwLock<Vec<Vec<BigUint>>>, n: usize, first_kind: bool) -> Vec<BigUint> {
    cached(lock, n, |t, n| {
        if t.is_empty() {
            t.push(vec![BigUint::one()]);
        }
        while t.len() <= n {
            let r = t.len();
            let prev = &t[r - 1];
            let row: Vec<BigUint> = (0..=r)
                .map(|m| {
                    let stay = prev.get(m).cloned().unwrap_or_default();
                    let factor = if first_kind { r - 1 } else { m };
                    let left = if m > 0 { prev[m - 1].clone() } else { BigUint::zero() };
                    stay * factor + left
                })
                .collect();
            t.push(row);
        }
    })
}

/// Stirling subset number: partitions of an `n`-set into `m` blocks.
pub fn stirling2(n: usize, m: usize) -> BigUint {
    if m > n {
        return BigUint::zero();
    }
    stirling_table(&STIRLING2, n, false).swap_remove(m)
}

/// Unsigned Stirling cycle number: permutations of `n` elements with `m` cycles.
pub fn stirling1(n: usize, m: usize) -> BigUint {
    if m > n {
        return BigUint::zero();
    }
    stirling_table(&STIRLING1, n, true).swap_remove(m)
}

/// `s_m(N) = 1^m + ... + N^m` by direct summation.
pub fn power_sum(m: u32, n: u64) -> Rational {
    Rational::from_integer((1..=n).map(|j| BigInt::from(j).pow(m)).sum())
}

/// Closed form of `s_m(x)` as a polynomial in `x` (no constant term).
pub fn power_sum_poly(m: usize) -> QPolynomial {
    let mut coeffs = vec![Rational::zero(); m + 2];
    let scale = Rational::from_integer(BigInt::from(m + 1)).recip();
    for j in 0..=m {
        let mut c = bernoulli_number(m - j)
            * Rational::from_integer(binomial(m as u64 + 1, j as u64 + 1))
            * &scale;
        if (m - j) % 2 == 1 {
            c = -c;
        }
        coeffs[j + 1] = c;
    }
    QPolynomial::new(coeffs)
}

/// `s_{m,r}(N)`: sum of `j^m` over `1 <= j <= N` with `j = r (mod k)`.
pub fn restricted_power_sum(m: u32, r: u64, k: u64, n: u64) -> Rational {
    assert!(k >= 1 && r < k, "residue {r} out of range for modulus {k}");
    let start = if r == 0 { k } else { r };
    Rational::from_integer(
        (start..=n)
            .step_by(k as usize)
            .map(|j| BigInt::from(j).pow(m))
            .sum(),
    )
}

fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn mobius(n: u64) -> i64 {
    assert!(n >= 1);
    let f = factorize(n);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len() % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn totient(n: u64) -> u64 {
    assert!(n >= 1);
    factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

/// Ramanujan sum `c_k(m) = sum_{d | gcd(m, k)} d mu(k/d)`.
pub fn ramanujan_sum(k: u64, m: i64) -> i64 {
    let g = (m.unsigned_abs()).gcd(&k);
    let g = if m == 0 { k } else { g };
    (1..=g)
        .filter(|d| g % d == 0)
        .map(|d| d as i64 * mobius(k / d))
        .sum()
}

pub(crate) fn sign_pow(e: u64) -> Rational {
    if e % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}
