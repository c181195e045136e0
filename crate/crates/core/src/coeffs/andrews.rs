use num_traits::{One, Zero};

use super::qrec::{g_rational, g_value};
use super::{sz_prefactor, CoeffKey};
use crate::arith::series::Coefficient;
use crate::arith::Rational;
use crate::cyclotomic::CycloElement;
use crate::{Error, Result};

/// Default cap on the number of tuples `c_andrews` will visit.
pub const DEFAULT_ANDREWS_BUDGET: u64 = 10_000_000;

/// Largest `i` with `G_rho(r, i) != 0`.
fn i_max(k: u32, r: u32) -> u32 {
    if r % k == 0 {
        r - 1
    } else {
        r
    }
}

/// Number of tuples `((r_1, i_1), ..., (r_m, i_m))` with
/// `1 <= r_1 <= ... <= r_m <= N`, `i_j >= 1`, `sum i_j = a` and every
/// `G_rho(r_j, i_j)` nonzero. The empty tuple counts once when `a = 0`.
pub fn andrews_tuple_count(k: u32, n: u32, a: u32) -> u128 {
    let a = a as usize;
    let n = n as usize;
    // cnt[r][rem]: tuples with all r_j >= r
    let mut cnt = vec![vec![0u128; a + 1]; n + 2];
    for row in cnt.iter_mut() {
        row[0] = 1;
    }
    for r in (1..=n).rev() {
        let imax = i_max(k, r as u32) as usize;
        for rem in 1..=a {
            let mut c = cnt[r + 1][rem];
            for i in 1..=rem.min(imax) {
                c = c.saturating_add(cnt[r][rem - i]);
            }
            cnt[r][rem] = c;
        }
    }
    cnt[1][a]
}

struct Enumerator<'a, T> {
    n: u32,
    g: &'a [Vec<T>],
    one: T,
}

impl<T: Coefficient> Enumerator<'_, T> {
    /// Sum over tuples with `r_1 >= min_r` and `sum i_j = rem`.
    fn sum(&self, min_r: u32, rem: u32) -> T {
        if rem == 0 {
            return self.one.clone();
        }
        let mut acc = self.one.zero_like();
        for r in min_r..=self.n {
            let row = &self.g[r as usize];
            for i in 1..=rem.min(row.len() as u32 - 1) {
                let gi = &row[i as usize];
                if gi.is_zero() {
                    continue;
                }
                let tail = self.sum(r, rem - i);
                if !tail.is_zero() {
                    acc.add_assign_ref(&gi.mul_ref(&tail));
                }
            }
        }
        acc
    }
}

/// `C_{hkl}(N)` by explicit enumeration of the tuple sum, with the default
/// budget.
pub fn c_andrews(key: &CoeffKey) -> Result<CycloElement> {
    c_andrews_with_budget(key, DEFAULT_ANDREWS_BUDGET)
}

/// `C_{hkl}(N)` by explicit enumeration, refusing when more than `budget`
/// tuples would be visited. Tuples with equal `r_j` but different orderings
/// of the `i_j` are distinct, as in the expansion of the `Q`-recursion.
pub fn c_andrews_with_budget(key: &CoeffKey, budget: u64) -> Result<CycloElement> {
    key.validate()?;
    if key.is_beyond_pole() {
        return Ok(CycloElement::zero(key.k));
    }
    let (h, k, n) = (key.h, key.k, key.n);
    let a = key.s() - key.l;
    let count = andrews_tuple_count(k, n, a);
    if count > budget as u128 {
        return Err(Error::BudgetExceeded {
            needed: count.to_string(),
            budget,
        });
    }
    let q = if k <= 2 {
        let g: Vec<Vec<Rational>> = (0..=n)
            .map(|r| {
                (0..=a.min(r))
                    .map(|i| if r == 0 || i == 0 { Rational::zero() } else { g_rational(k, r, i) })
                    .collect()
            })
            .collect();
        let e = Enumerator { n, g: &g, one: Rational::one() };
        CycloElement::from_rational(k, e.sum(1, a))
    } else {
        let g: Vec<Vec<CycloElement>> = (0..=n)
            .map(|r| {
                (0..=a.min(r))
                    .map(|i| if r == 0 || i == 0 { CycloElement::zero(k) } else { g_value(h, k, r, i) })
                    .collect()
            })
            .collect();
        let e = Enumerator { n, g: &g, one: CycloElement::one(k) };
        e.sum(1, a)
    };
    Ok(&sz_prefactor(key) * &q)
}
