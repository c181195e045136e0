use num_traits::Zero;

use super::{sz_prefactor, CoeffKey};
use crate::arith::{self, int, Rational};
use crate::cyclotomic::CycloElement;
use crate::Result;

/// `G_rho(r, i)` for `rho = zeta_k^h`: `-binom(r, i+1)/r` when `k | r`,
/// otherwise `rho^r binom(r, i) / (1 - rho^r)`.
pub fn g_value(h: u32, k: u32, r: u32, i: u32) -> CycloElement {
    if r % k == 0 {
        let v = -int(arith::binomial(r as u64, i as u64 + 1)) / int(r);
        CycloElement::from_rational(k, v)
    } else {
        let rr = CycloElement::zeta_pow(k, h as i64 * r as i64);
        let inv = CycloElement::inv_one_minus_zeta_pow(k, h as i64 * r as i64).expect("rho^r != 1");
        (&rr * &inv).scale(&int(arith::binomial(r as u64, i as u64)))
    }
}

/// Rational `G_rho(r, i)` for `rho = +-1`.
pub(crate) fn g_rational(k: u32, r: u32, i: u32) -> Rational {
    debug_assert!(k <= 2);
    if r % k == 0 {
        -int(arith::binomial(r as u64, i as u64 + 1)) / int(r)
    } else {
        // rho^r = -1 here
        int(arith::binomial(r as u64, i as u64)) / int(-2)
    }
}

/// The recursion `Q(N, a) = Q(N-1, a) + sum_{b=1}^a Q(N, a-b) G(N, b)`,
/// advanced one `N` at a time for all `a <= a_max`.
pub struct QRecursion {
    h: u32,
    k: u32,
    n: u32,
    q: Vec<CycloElement>,
}

impl QRecursion {
    pub fn new(h: u32, k: u32, a_max: usize) -> Self {
        QRecursion {
            h,
            k,
            n: 0,
            q: vec![CycloElement::zero(k); a_max + 1],
        }
    }

    pub fn level(&self) -> u32 {
        self.n
    }

    pub fn step(&mut self) {
        let n = self.n + 1;
        let a_max = self.q.len() - 1;
        let k = self.k;
        // rho^n / (1 - rho^n) when k does not divide n; G(n, b) is this unit
        // times binom(n, b), so the sum over b is rational until one product
        let unit = (n % k != 0).then(|| {
            let e = self.h as i64 * n as i64;
            let rr = CycloElement::zeta_pow(k, e);
            let inv = CycloElement::inv_one_minus_zeta_pow(k, e).expect("rho^n != 1");
            &rr * &inv
        });
        let weights: Vec<Rational> = (0..=a_max as u64)
            .map(|b| match (&unit, b) {
                (_, 0) => Rational::zero(),
                (Some(_), _) => int(arith::binomial(n as u64, b)),
                (None, _) => -int(arith::binomial(n as u64, b + 1)) / int(n),
            })
            .collect();
        let mut next: Vec<CycloElement> = Vec::with_capacity(a_max + 1);
        next.push(CycloElement::one(k));
        for a in 1..=a_max {
            let mut conv = CycloElement::zero(k);
            for b in 1..=a {
                if !weights[b].is_zero() && !next[a - b].is_zero() {
                    conv.add_assign(&next[a - b].scale(&weights[b]));
                }
            }
            let mut acc = self.q[a].clone();
            match &unit {
                Some(u) if !conv.is_zero() => acc.add_assign(&(&conv * u)),
                _ => acc.add_assign(&conv),
            }
            next.push(acc);
        }
        self.q = next;
        self.n = n;
    }

    /// `Q(N, a)` at the current level.
    pub fn q(&self, a: usize) -> &CycloElement {
        &self.q[a]
    }

    /// `C_{hkl}(N)` at the current level `N`, when `floor(N/k) - l <= a_max`.
    pub fn coefficient(&self, l: u32) -> Result<CycloElement> {
        let key = CoeffKey::new(self.h, self.k, l, self.n)?;
        if key.is_beyond_pole() {
            return Ok(CycloElement::zero(self.k));
        }
        let a = (key.s() - l) as usize;
        Ok(&sz_prefactor(&key) * &self.q[a])
    }
}

/// `C_{hkl}(N)` from the `Q`-recursion.
pub fn c_sz(key: &CoeffKey) -> Result<CycloElement> {
    key.validate()?;
    if key.is_beyond_pole() {
        return Ok(CycloElement::zero(key.k));
    }
    let mut rec = QRecursion::new(key.h, key.k, (key.s() - key.l) as usize);
    for _ in 0..key.n {
        rec.step();
    }
    rec.coefficient(key.l)
}
