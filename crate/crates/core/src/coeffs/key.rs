use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Index `(h, k, l, N)` of a coefficient `C_{hkl}(N)`.
///
/// Valid keys have `0 <= h < k <= N`, `gcd(h, k) = 1` and `l >= 1`. Orders
/// `l > floor(N/k)` are allowed and give zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CoeffKey {
    pub h: u32,
    pub k: u32,
    pub l: u32,
    #[serde(rename = "N")]
    pub n: u32,
}

impl CoeffKey {
    pub fn new(h: u32, k: u32, l: u32, n: u32) -> Result<Self> {
        let key = CoeffKey { h, k, l, n };
        key.validate()?;
        Ok(key)
    }

    pub fn validate(&self) -> Result<()> {
        if self.k == 0 || self.k > self.n {
            return Err(Error::InvalidKey(format!("need 1 <= k <= N, got {self}")));
        }
        if self.h >= self.k {
            return Err(Error::InvalidKey(format!("need 0 <= h < k, got {self}")));
        }
        if self.h.gcd(&self.k) != 1 {
            return Err(Error::InvalidKey(format!("need gcd(h, k) = 1, got {self}")));
        }
        if self.l == 0 {
            return Err(Error::InvalidKey(format!("need l >= 1, got {self}")));
        }
        Ok(())
    }

    /// Order of the pole at `e^{2 pi i h/k}`, `floor(N/k)`.
    pub fn s(&self) -> u32 {
        self.n / self.k
    }

    /// Whether `l` exceeds the pole order, so the coefficient vanishes.
    pub fn is_beyond_pole(&self) -> bool {
        self.l > self.s()
    }

    /// All keys `(h, k, l)` with `1 <= l <= floor(N/k)` for one `N`, sorted.
    pub fn all_for(n: u32) -> Vec<CoeffKey> {
        let mut keys = Vec::new();
        for k in 1..=n {
            for h in (0..k).filter(|h| h.gcd(&k) == 1) {
                for l in 1..=n / k {
                    keys.push(CoeffKey { h, k, l, n });
                }
            }
        }
        keys
    }

    /// The roots `h/k` of denominators `k <= N`.
    pub fn roots_for(n: u32) -> Vec<(u32, u32)> {
        (1..=n)
            .flat_map(|k| (0..k).filter(move |h| h.gcd(&k) == 1).map(move |h| (h, k)))
            .collect()
    }
}

impl fmt::Display for CoeffKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(h={}, k={}, l={}, N={})", self.h, self.k, self.l, self.n)
    }
}
