use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::CoeffKey;
use crate::arith::sequences::sign_pow;
use crate::arith::{self, int, Rational};
use crate::cyclotomic::{CycloElement, GroupRingElement};
use crate::Result;

/// The values `E_{kl}(N, m; r)` for one level `N` and all `m <= m_max`.
#[derive(Clone, Debug, PartialEq)]
pub struct ETable {
    pub k: u32,
    pub l: u32,
    pub n: u32,
    values: Vec<Vec<Rational>>,
}

impl ETable {
    pub fn m_max(&self) -> usize {
        self.values.len() - 1
    }

    /// `E_{kl}(N, m; r)`; zero for `m < l`.
    pub fn get(&self, m: usize, r: u32) -> &Rational {
        &self.values[m][r as usize]
    }

    /// `D(N, m) = sum_r zeta_k^r E(N, m; r)` before reduction.
    pub fn group_ring(&self, m: usize) -> GroupRingElement {
        GroupRingElement::new(self.k, self.values[m].clone())
    }
}

/// Runs the recursion for `E_{kl}` level by level.
///
/// Internally the level-`N` values are stored as integers
/// `I(m; r) = E(N, m; r) (m-1)! / scale_N`; the Bernoulli weights
/// `k^a B_a(j/k)` are cleared of denominators once, and the common content
/// is divided out after every step.
pub struct ERecursion {
    k: u32,
    l: u32,
    m_max: usize,
    level: u32,
    ints: Vec<Vec<BigInt>>,
    scale: Rational,
    weights: Vec<Vec<BigInt>>,
    weight_denom: BigInt,
    binom: Vec<Vec<BigInt>>,
}

impl ERecursion {
    pub fn new(k: u32, l: u32, m_max: usize) -> Self {
        assert!(k >= 1 && l >= 1);
        let a_max = m_max.saturating_sub(l as usize);
        let lambda = (0..=a_max).fold(BigInt::one(), |acc, i| acc.lcm(arith::bernoulli_number(i).denom()));
        let weights = (0..=a_max)
            .map(|a| {
                let bp = arith::bernoulli_poly(a);
                let ka = int(BigInt::from(k).pow(a as u32));
                (0..k)
                    .map(|j| {
                        let v = bp.eval(&Rational::new(j.into(), k.into())) * &ka * int(lambda.clone());
                        debug_assert!(v.is_integer());
                        v.to_integer()
                    })
                    .collect()
            })
            .collect();
        let mut binom: Vec<Vec<BigInt>> = Vec::with_capacity(m_max);
        for n in 0..m_max {
            let mut row = vec![BigInt::one(); n + 1];
            for i in 1..n {
                row[i] = &binom[n - 1][i - 1] + &binom[n - 1][i];
            }
            binom.push(row);
        }
        let ints = (0..=m_max)
            .map(|m| {
                let mut row = vec![BigInt::zero(); k as usize];
                if m >= 1 {
                    row[0] = BigInt::from(arith::stirling2(m, l as usize));
                }
                row
            })
            .collect();
        ERecursion {
            k,
            l,
            m_max,
            level: 0,
            ints,
            scale: Rational::one(),
            weights,
            weight_denom: lambda * BigInt::from(k),
            binom,
        }
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn m_max(&self) -> usize {
        self.m_max
    }

    /// Advances from level `N - 1` to level `N`.
    pub fn step(&mut self) {
        let n = self.level + 1;
        let k = self.k as usize;
        let l = self.l as usize;
        let nmod = n as usize % k;
        let a_max = self.m_max.saturating_sub(l);
        // weights n^a W[a][j], gathered by the shift t = n j mod k
        let mut npow = BigInt::one();
        let shifted: Vec<Vec<(usize, BigInt)>> = (0..=a_max)
            .map(|a| {
                if a > 0 {
                    npow *= n;
                }
                let mut by_t = vec![BigInt::zero(); k];
                for (j, w) in self.weights[a].iter().enumerate() {
                    by_t[(nmod * j) % k] += w * &npow;
                }
                by_t.into_iter().enumerate().filter(|(_, w)| !w.is_zero()).collect()
            })
            .collect();
        let mut next = vec![vec![BigInt::zero(); k]; self.m_max + 1];
        for m in l..=self.m_max {
            for r in 0..k {
                let mut acc = BigInt::zero();
                for a in 0..=m - l {
                    let prev = &self.ints[m - a];
                    let mut inner = BigInt::zero();
                    for (t, w) in &shifted[a] {
                        let p = &prev[(r + k - t) % k];
                        if !p.is_zero() {
                            inner += p * w;
                        }
                    }
                    if !inner.is_zero() {
                        acc += inner * &self.binom[m - 1][a];
                    }
                }
                next[m][r] = acc;
            }
        }
        let mut content = BigInt::zero();
        for v in next.iter().flatten() {
            if !v.is_zero() {
                content = content.gcd(v);
                if content.is_one() {
                    break;
                }
            }
        }
        if content.is_zero() {
            content = BigInt::one();
        }
        if !content.is_one() {
            for v in next.iter_mut().flatten() {
                *v /= &content;
            }
        }
        self.ints = next;
        self.scale = &self.scale * Rational::new(content.abs(), self.weight_denom.clone());
        self.level = n;
    }

    /// `E_{kl}(N, m; r)` at the current level.
    pub fn value(&self, m: usize, r: u32) -> Rational {
        if m == 0 {
            return Rational::zero();
        }
        int(self.ints[m][r as usize].clone()) * &self.scale / int(arith::factorial(m as u64 - 1))
    }

    pub fn table(&self) -> ETable {
        ETable {
            k: self.k,
            l: self.l,
            n: self.level,
            values: (0..=self.m_max)
                .map(|m| (0..self.k).map(|r| self.value(m, r)).collect())
                .collect(),
        }
    }
}

/// The table of `E_{kl}(N, m; r)` for `m <= N`.
pub fn e_recursion(k: u32, l: u32, n: u32) -> ETable {
    let mut rec = ERecursion::new(k, l, n as usize);
    for _ in 0..n {
        rec.step();
    }
    rec.table()
}

type Diagonals = HashMap<(u32, u32), Arc<Vec<Vec<Rational>>>>;

static DIAGONALS: RwLock<Option<Diagonals>> = RwLock::new(None);

/// `E_{kl}(N, N; r)` for `r = 0..k`, memoized per `(k, l)`. A miss reruns
/// the recursion to at least `1.5` times the previous depth, which yields
/// every diagonal entry up to that depth.
pub fn e_diagonal(k: u32, l: u32, n: u32) -> Vec<Rational> {
    let known = DIAGONALS
        .read()
        .unwrap()
        .as_ref()
        .and_then(|c| c.get(&(k, l)).cloned());
    if let Some(d) = &known {
        if (n as usize) < d.len() {
            return d[n as usize].clone();
        }
    }
    let prev = known.map_or(0, |d| d.len().saturating_sub(1));
    let depth = (n as usize).max(prev + prev / 2);
    let mut rec = ERecursion::new(k, l, depth);
    let mut diag = vec![vec![Rational::zero(); k as usize]];
    for _ in 0..depth {
        rec.step();
        let lev = rec.level() as usize;
        diag.push((0..k).map(|r| rec.value(lev, r)).collect());
    }
    let out = diag[n as usize].clone();
    let mut guard = DIAGONALS.write().unwrap();
    let cache = guard.get_or_insert_with(HashMap::new);
    let keep = cache.get(&(k, l)).map_or(true, |d| d.len() < diag.len());
    if keep {
        cache.insert((k, l), Arc::new(diag));
    }
    out
}

/// `C_{hkl}(N) = (-1)^N (l-1)!/N! sum_r rho^{r+l} E_{kl}(N, N; r)`.
pub fn c_recursive(key: &CoeffKey) -> Result<CycloElement> {
    key.validate()?;
    if key.is_beyond_pole() {
        return Ok(CycloElement::zero(key.k));
    }
    let (h, k, l, n) = (key.h, key.k, key.l, key.n);
    let scalar = sign_pow(n as u64) * int(arith::factorial(l as u64 - 1))
        / int(arith::factorial(n as u64));
    let mut g = GroupRingElement::zero(k);
    for (r, e) in e_diagonal(k, l, n).iter().enumerate() {
        if !e.is_zero() {
            g.add_term(h as i64 * (r as i64 + l as i64), &(e * &scalar));
        }
    }
    Ok(g.reduce())
}
