use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::series::exp_trunc;
use crate::arith::sequences::sign_pow;
use crate::arith::{self, int, QPolynomial, Rational};

fn stirling1_int(n: usize, m: usize) -> Rational {
    int(BigInt::from(arith::stirling1(n, m)))
}

fn four_pow(r: u32) -> Rational {
    int(BigInt::from(4).pow(r))
}

/// `P_{01r}(x)`, the polynomial with `P_{01r}(N) = (-1)^N N! (-4)^r r! C_{01(N-r)}(N)`.
pub fn sz_polynomial(r: u32) -> QPolynomial {
    let len = r as usize + 1;
    let x = QPolynomial::x();
    let mut f = vec![QPolynomial::zero(); len];
    for (i, c) in f.iter_mut().enumerate().skip(1) {
        let weight = sign_pow(i as u64 - 1) * arith::bernoulli_number(i)
            / int(BigInt::from(i) * arith::factorial(i as u64));
        *c = (&arith::power_sum_poly(i) - &x).scale(&weight);
    }
    let e = exp_trunc(&f, len, &QPolynomial::one());
    let mut acc = QPolynomial::zero();
    for (m, em) in e.iter().enumerate() {
        let c = sign_pow(m as u64) * stirling1_int(r as usize, m) * int(arith::factorial(m as u64));
        if !c.is_zero() {
            acc = &acc + &em.scale(&c);
        }
    }
    acc.scale(&four_pow(r))
}

/// `b_i = (B_i/i)(1 - (-1)^i B_i)`.
fn b_term(i: usize) -> Rational {
    let b = arith::bernoulli_number(i);
    let alt = if i % 2 == 0 { b.clone() } else { -b.clone() };
    b / int(i as u64) * (Rational::one() - alt)
}

/// Coefficient of `x` in `P_{01r}(x)`: `4^r sum_i [r, i] b_i`.
pub fn sz_coeff_x(r: u32) -> Rational {
    let r = r as usize;
    let s: Rational = (1..=r).map(|i| stirling1_int(r, i) * b_term(i)).sum();
    s * four_pow(r as u32)
}

/// Coefficient of `x^2` in `P_{01r}(x)`.
pub fn sz_coeff_x2(r: u32) -> Rational {
    let r = r as usize;
    let b: Vec<Rational> = (0..=r).map(|i| if i == 0 { Rational::zero() } else { b_term(i) }).collect();
    let mut s = stirling1_int(r, 1) / int(4) - stirling1_int(r, 2) / int(24);
    for i in 1..=r / 2 {
        s += stirling1_int(r, 2 * i) * int(arith::binomial(2 * i as u64, i as u64)) * &b[i] * &b[i]
            / int(2);
    }
    for i in 1..=r {
        for j in i + 1..=r - i {
            s += stirling1_int(r, i + j) * int(arith::binomial((i + j) as u64, i as u64)) * &b[i] * &b[j];
        }
    }
    s * four_pow(r as u32)
}

/// The coefficients of `x^{2r}`, `x^{2r-1}`, `x^{2r-2}` in `P_{01r}(x)` from
/// their closed forms.
pub fn sz_top_coefficients(r: u32) -> [Rational; 3] {
    let r = int(r);
    let r2 = &r * &r;
    [
        Rational::one(),
        -(int(2) * &r2 + int(7) * &r) / int(9),
        (int(4) * &r2 * &r2 + int(12) * &r2 * &r + int(287) * &r2 - int(303) * &r) / int(162),
    ]
}

/// `M_{01r}(x) = prod_{j=0}^{r-1} (x(x-1) + 4j)`.
pub fn m_polynomial(r: u32) -> QPolynomial {
    let mut acc = QPolynomial::one();
    for j in 0..r as i64 {
        acc = &acc * &QPolynomial::from_ints(&[4 * j, -1, 1]);
    }
    acc
}

/// `M_{01r}''(1/2) = 2 (1 - sum_{a=1}^{r-1} 1/(16a - 1)) prod_{j=1}^{r-1} (4j - 1/4)`.
pub fn m_second_derivative_half(r: u32) -> Rational {
    let mut sum = Rational::one();
    let mut prod = Rational::one();
    for a in 1..r as i64 {
        sum -= Rational::new(1.into(), (16 * a - 1).into());
        prod *= Rational::new((16 * a - 1).into(), 4.into());
    }
    int(2) * sum * prod
}

/// `binom(j, j) + binom(j+1, j) + ... + binom(r-1, j) == binom(r, j+1)`.
pub fn hockey_stick_check(j: u64, r: u64) -> bool {
    let lhs: BigInt = (j..r).map(|t| arith::binomial(t, j)).sum();
    lhs == arith::binomial(r, j + 1)
}
