//! Floating point layer: the dilogarithm zero `w_0`, the constants derived
//! from it, and the conjectured main terms for `C_{011}(N)` and `C_{121}(N)`.

mod dilog;
mod tables;

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::{Error, Result};

pub use dilog::dilog;
pub use tables::{
    figure_csv, figure_series, table1, table2, table_csv, Figure, FigureRow, Table2Row, TableRow,
    TABLE2_KEYS,
};

const NEWTON_MAX_ITER: usize = 100;
const NEWTON_TOL: f64 = 1e-12;

/// `w_0`, `z_0` and the real-form constants of the main terms.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct AsymptoticConstants {
    #[serde(serialize_with = "ser_complex")]
    pub w0: Complex64,
    #[serde(serialize_with = "ser_complex")]
    pub z0: Complex64,
    #[serde(rename = "U")]
    pub u: f64,
    #[serde(rename = "V")]
    pub v: f64,
    pub alpha: f64,
    pub beta: f64,
    /// odd `N`
    pub alpha1: f64,
    pub beta1: f64,
    /// even `N`
    pub alpha2: f64,
    pub beta2: f64,
}

fn ser_complex<S: serde::Serializer>(z: &Complex64, s: S) -> std::result::Result<S::Ok, S::Error> {
    [z.re, z.im].serialize(s)
}

fn i() -> Complex64 {
    Complex64::new(0.0, 1.0)
}

/// `F(w) = Li_2(w) + 2 pi i log w`.
pub fn w0_residual(w: Complex64) -> Complex64 {
    dilog(w) + 2.0 * PI * i() * w.ln()
}

/// Newton iteration for `F(w) = 0` from `seed`.
pub fn newton_w0(seed: Complex64) -> Result<Complex64> {
    let one = Complex64::new(1.0, 0.0);
    let mut w = seed;
    for _ in 0..NEWTON_MAX_ITER {
        let f = w0_residual(w);
        if f.norm() <= NEWTON_TOL {
            return Ok(w);
        }
        let df = (2.0 * PI * i() - (one - w).ln()) / w;
        w -= f / df;
        if !w.re.is_finite() || !w.im.is_finite() {
            break;
        }
    }
    if w0_residual(w).norm() <= NEWTON_TOL {
        Ok(w)
    } else {
        Err(Error::NoConvergence(NEWTON_MAX_ITER))
    }
}

/// `alpha = |c|`, `beta = arg c + pi/2`, so that
/// `Re[c e^{i t}] = alpha sin(beta + t)`.
fn real_form(c: Complex64) -> (f64, f64) {
    (c.norm(), c.arg() + PI / 2.0)
}

/// The amplitude `-z_0 sqrt(2 e^{pi i z_0}(e^{pi i z_0} + (-1)^N))` of the
/// `C_{121}` main term, principal square root.
fn amplitude_121(z0: Complex64, odd: bool) -> Complex64 {
    let e = (PI * i() * z0).exp();
    let sign = if odd { -1.0 } else { 1.0 };
    -z0 * (2.0 * e * (e + sign)).sqrt()
}

fn amplitude_011(z0: Complex64) -> Complex64 {
    -2.0 * z0 * (PI * i() * z0).exp()
}

impl AsymptoticConstants {
    fn from_w0(w0: Complex64) -> Self {
        let one = Complex64::new(1.0, 0.0);
        let z0 = (one - w0).ln() / (-2.0 * PI * i()) + 1.0;
        let (alpha, beta) = real_form(amplitude_011(z0));
        let (alpha1, beta1) = real_form(amplitude_121(z0, true));
        let (alpha2, beta2) = real_form(amplitude_121(z0, false));
        AsymptoticConstants {
            w0,
            z0,
            u: -w0.norm().ln(),
            v: -w0.arg(),
            alpha,
            beta,
            alpha1,
            beta1,
            alpha2,
            beta2,
        }
    }

    /// Oscillation period `-2 pi / V`.
    pub fn period(&self) -> f64 {
        -2.0 * PI / self.v
    }

    /// `Re[(-2 z_0 e^{pi i z_0}) w_0^{-N} / N^2]`.
    pub fn main_term_011(&self, n: u32) -> f64 {
        let n = n as f64;
        (amplitude_011(self.z0) * (-n * self.w0.ln()).exp()).re / (n * n)
    }

    /// `Re[-z_0 sqrt(2 e^{pi i z_0}(e^{pi i z_0} + (-1)^N)) w_0^{-N/2} / N^2]`.
    pub fn main_term_121(&self, n: u32) -> f64 {
        let c = amplitude_121(self.z0, n % 2 == 1);
        let n = n as f64;
        (c * (-0.5 * n * self.w0.ln()).exp()).re / (n * n)
    }

    /// `alpha sin(beta + N V) e^{N U} / N^2`.
    pub fn real_main_term_011(&self, n: u32) -> f64 {
        let nf = n as f64;
        (nf * self.u).exp() / (nf * nf) * self.sinusoid_011(n)
    }

    /// `alpha' sin(beta' + N V/2) e^{N U/2} / N^2` (odd `N`), with the
    /// doubly primed pair for even `N`.
    pub fn real_main_term_121(&self, n: u32) -> f64 {
        let nf = n as f64;
        (0.5 * nf * self.u).exp() / (nf * nf) * self.sinusoid_121(n)
    }

    pub fn sinusoid_011(&self, n: u32) -> f64 {
        self.alpha * (self.beta + n as f64 * self.v).sin()
    }

    pub fn sinusoid_121(&self, n: u32) -> f64 {
        let (a, b) = if n % 2 == 1 {
            (self.alpha1, self.beta1)
        } else {
            (self.alpha2, self.beta2)
        };
        a * (b + 0.5 * n as f64 * self.v).sin()
    }
}

/// Locates `w_0` by Newton's method from `0.9 + 0.2i` and derives the rest.
pub fn find_w0() -> Result<AsymptoticConstants> {
    newton_w0(Complex64::new(0.9, 0.2)).map(AsymptoticConstants::from_w0)
}

/// [`AsymptoticConstants::main_term_011`] with freshly computed constants.
pub fn main_term_011(n: u32) -> Result<f64> {
    Ok(find_w0()?.main_term_011(n))
}

/// [`AsymptoticConstants::main_term_121`] with freshly computed constants.
pub fn main_term_121(n: u32) -> Result<f64> {
    Ok(find_w0()?.main_term_121(n))
}
