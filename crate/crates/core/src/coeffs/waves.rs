use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{c_direct_row, CoeffKey};
use crate::arith::series::{exp_trunc, mul_trunc};
use crate::arith::sequences::sign_pow;
use crate::arith::{self, int, Rational};
use crate::cyclotomic::{apostol_beta, CycloElement, GroupRingElement};
use crate::{Error, Result};

fn check(k: u32, n: u32) -> Result<()> {
    if k == 0 || k > n {
        return Err(Error::OutOfRange(format!("wave needs 1 <= k <= N, got k = {k}, N = {n}")));
    }
    Ok(())
}

fn inv_factorial(n: u64) -> Rational {
    Rational::new(BigInt::one(), arith::factorial(n))
}

/// Sylvester's `k`-th wave `W_k(N, n)`, from the exponential of the
/// Apostol-Bernoulli power sums at `rho = zeta_k`, traced over all primitive
/// `k`-th roots of unity.
pub fn wave(k: u32, n_parts: u32, n: i64) -> Result<Rational> {
    check(k, n_parts)?;
    let big_n = n_parts as u64;
    let s = n_parts / k;
    let len = s as usize;
    let mut f = vec![CycloElement::zero(k); len];
    for (m, c) in f.iter_mut().enumerate().skip(1) {
        let denom = int(BigInt::from(m) * arith::factorial(m as u64));
        let mut acc = CycloElement::zero(k);
        for r in 0..k {
            let srm = arith::restricted_power_sum(m as u32, r as u64, k as u64, big_n);
            if !srm.is_zero() {
                acc = &acc - &apostol_beta(m, r as i64, k).scale(&(srm / &denom));
            }
        }
        if m == 1 {
            let lin = int(n) + int(big_n * (big_n + 1) / 2);
            acc = &acc - &CycloElement::from_rational(k, lin);
        }
        *c = acc;
    }
    let e = exp_trunc(&f, len, &CycloElement::one(k));
    let mut inv = CycloElement::one(k);
    for w in 1..=(n_parts - k * s) {
        inv = &inv * &CycloElement::inv_one_minus_zeta_pow(k, w as i64)?;
    }
    let scalar = sign_pow(s as u64 - 1)
        / int(BigInt::from(k).pow(2 * s) * arith::factorial(s as u64));
    let value = &(&CycloElement::zeta_pow(k, -n) * &inv) * &e[len - 1];
    Ok(value.trace() * scalar)
}

/// `W_k(N, n) = -sum_h sum_l binom(-n-1, l-1) rho^{-l-n} C_{hkl}(N)`.
pub fn wave_via_coefficients(k: u32, n_parts: u32, n: i64) -> Result<Rational> {
    check(k, n_parts)?;
    let mut acc = GroupRingElement::zero(k);
    for (h, kk) in CoeffKey::roots_for(n_parts) {
        if kk != k {
            continue;
        }
        for (i, c) in c_direct_row(h, k, n_parts)?.iter().enumerate() {
            let l = i as i64 + 1;
            let b = -int(arith::binomial_signed(-n - 1, l as u64 - 1));
            let shift = -(h as i64) * (l + n);
            for (j, cj) in c.coeffs().iter().enumerate() {
                if !cj.is_zero() {
                    acc.add_term(j as i64 + shift, &(cj * &b));
                }
            }
        }
    }
    acc.reduce().to_rational_or_err()
}

/// `W_1(N, n) = (-1)^{N-1}/N! [z^{N-1}] exp(-(n + N(N+1)/4) z - sum_{m>=2} B_m s_m(N) z^m/(m m!))`.
pub fn wave1_sylvester(n_parts: u32, n: i64) -> Rational {
    let len = n_parts as usize;
    let big_n = n_parts as u64;
    let mut f = vec![Rational::zero(); len];
    for (m, c) in f.iter_mut().enumerate().skip(1) {
        *c = if m == 1 {
            -(int(n) + Rational::new(BigInt::from(big_n * (big_n + 1)), BigInt::from(4)))
        } else {
            -(arith::bernoulli_number(m) * arith::power_sum(m as u32, big_n))
                / int(BigInt::from(m) * arith::factorial(m as u64))
        };
    }
    let e = exp_trunc(&f, len, &int(1));
    sign_pow(big_n - 1) * inv_factorial(big_n) * &e[len - 1]
}

/// `W_1(N, n) = 1/N! [z^{N-1}] e^{(n + N(N+1)/4) z} prod_w sum_j B_j(1/2) (wz)^j/j!`.
pub fn wave1_glaisher_half(n_parts: u32, n: i64) -> Rational {
    let len = n_parts as usize;
    let big_n = n_parts as u64;
    let t = int(n) + Rational::new(BigInt::from(big_n * (big_n + 1)), BigInt::from(4));
    let half = Rational::new(1.into(), 2.into());
    let bhalf: Vec<Rational> = (0..len).map(|j| arith::bernoulli_poly(j).eval(&half)).collect();
    let mut tp = Rational::one();
    let mut acc: Vec<Rational> = (0..len)
        .map(|j| {
            let v = &tp * inv_factorial(j as u64);
            tp *= &t;
            v
        })
        .collect();
    for w in 1..=big_n {
        let f: Vec<Rational> = (0..len)
            .map(|j| &bhalf[j] * int(BigInt::from(w).pow(j as u32)) * inv_factorial(j as u64))
            .collect();
        acc = mul_trunc(&acc, &f, len);
    }
    inv_factorial(big_n) * &acc[len - 1]
}

/// `C_{01l}(N) = sum_{j=1}^l binom(l-1, j-1) (-1)^{l+j+1} W_1(N, -j)`.
pub fn c01_from_waves(l: u32, n_parts: u32) -> Result<Rational> {
    let mut acc = Rational::zero();
    for j in 1..=l as u64 {
        acc += int(arith::binomial(l as u64 - 1, j - 1)) * sign_pow(l as u64 + j + 1) * wave(1, n_parts, -(j as i64))?;
    }
    Ok(acc)
}

/// `C_{12l}(N) = -sum_{j=1}^l binom(l-1, j-1) W_2(N, -j)`.
pub fn c12_from_waves(l: u32, n_parts: u32) -> Result<Rational> {
    let mut acc = Rational::zero();
    for j in 1..=l as u64 {
        acc += int(arith::binomial(l as u64 - 1, j - 1)) * wave(2, n_parts, -(j as i64))?;
    }
    Ok(-acc)
}
