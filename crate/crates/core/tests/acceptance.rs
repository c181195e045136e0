//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Zero};

use rademacher::arith::{self, int, rat, QPolynomial, Rational};
use rademacher::asymptotics::{find_w0, table1, table2};
use rademacher::coeffs::{
    c_andrews_with_budget, c_direct, c_sum_over_h, c_sum_over_h_direct, decompose, m_polynomial,
    p_from_decomposition, p_oracle_row, sz_coeff_x, sz_coeff_x2, sz_polynomial,
    sz_top_coefficients, wave, wave1_glaisher_half, wave1_sylvester, Algorithm,
};
use rademacher::cyclotomic::{
    apostol_beta, apostol_beta_variant, hurwitz_beta_numeric, BetaVariant, CycloElement,
};
use rademacher::CoeffKey;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e(err: rademacher::Error) -> String {
    err.to_string()
}

fn key(h: u32, k: u32, l: u32, n: u32) -> CoeffKey {
    CoeffKey::new(h, k, l, n).unwrap()
}

fn rational(c: &CycloElement) -> Result<Rational, String> {
    c.to_rational().ok_or_else(|| format!("{c} is not rational"))
}

fn within(t: Instant, limit: Duration) -> Result<(), String> {
    ensure(t.elapsed() <= limit, || format!("took {:.1?}, limit {limit:?}", t.elapsed()))
}

fn sign(n: u32) -> Rational {
    int(if n.is_multiple_of(2) { 1 } else { -1 })
}

fn c1() -> Outcome {
    let t = Instant::now();
    let table = decompose(2, Algorithm::Direct).map_err(e)?;
    let want = [((0, 1, 1), rat(-1, 4)), ((0, 1, 2), rat(1, 2)), ((1, 2, 1), rat(1, 4))];
    ensure(table.len() == 3, || format!("{} entries", table.len()))?;
    for ((h, k, l), v) in want {
        let got = table.get(h, k, l).ok_or("missing entry")?;
        ensure(rational(got)? == v, || format!("C_{h}{k}{l}(2) = {got}"))?;
    }
    within(t, Duration::from_secs(1))?;
    Ok(format!("C011=-1/4 C012=1/2 C121=1/4 in {:.1?}", t.elapsed()))
}

fn c2() -> Outcome {
    for n in 2..=30u32 {
        let top = rational(&c_direct(&key(0, 1, n, n)).map_err(e)?)?;
        let want = sign(n) / int(arith::factorial(n as u64));
        ensure(top == want, || format!("C_01N({n}) = {top}"))?;
        let next = rational(&c_direct(&key(0, 1, n - 1, n)).map_err(e)?)?;
        let want = -sign(n)
            / int(BigInt::from(4) * arith::factorial(n as u64 - 2));
        ensure(next == want, || format!("C_01(N-1)({n}) = {next}"))?;
    }
    Ok("2 <= N <= 30".into())
}

fn c3() -> Outcome {
    let t = Instant::now();
    for n in 1..=20u32 {
        let table = decompose(n, Algorithm::Direct).map_err(e)?;
        let oracle = p_oracle_row(n, 100);
        for (m, want) in oracle.iter().enumerate() {
            let got = p_from_decomposition(&table, m as u64).map_err(e)?;
            ensure(got == int(BigInt::from(want.clone())), || format!("p_{n}({m}) = {got}, oracle {want}"))?;
        }
    }
    within(t, Duration::from_secs(60))?;
    Ok(format!("N <= 20, n <= 100 in {:.1?}", t.elapsed()))
}

const ANDREWS_BUDGET: u64 = 20_000_000;

fn c4() -> Outcome {
    let t = Instant::now();
    let mut keys = 0usize;
    for n in (1..=40u32).rev() {
        for (h, k) in CoeffKey::roots_for(n) {
            let direct = Algorithm::Direct.row(h, k, n).map_err(e)?;
            let rec = Algorithm::Recursive.row(h, k, n).map_err(e)?;
            let sz = Algorithm::Sz.row(h, k, n).map_err(e)?;
            ensure(direct == rec, || format!("direct vs recursive at h={h} k={k} N={n}"))?;
            ensure(direct == sz, || format!("direct vs Q-recursion at h={h} k={k} N={n}"))?;
            if n <= 12 {
                for (i, d) in direct.iter().enumerate() {
                    let a = c_andrews_with_budget(&key(h, k, i as u32 + 1, n), ANDREWS_BUDGET).map_err(e)?;
                    ensure(&a == d, || format!("andrews at h={h} k={k} l={} N={n}", i + 1))?;
                }
            }
            keys += direct.len();
        }
    }
    within(t, Duration::from_secs(300))?;
    Ok(format!("{keys} keys, four routes to N = 12, three to N = 40, in {:.1?}", t.elapsed()))
}

fn c5() -> Outcome {
    for n_parts in 1..=15u32 {
        let oracle = p_oracle_row(n_parts, 60);
        for n in 1..=60i64 {
            let mut total = Rational::zero();
            for k in 1..=n_parts {
                total += wave(k, n_parts, n).map_err(e)?;
            }
            let want = int(BigInt::from(oracle[n as usize].clone()));
            ensure(total == want, || format!("sum of waves N={n_parts} n={n}: {total} vs {want}"))?;
            let w1 = wave(1, n_parts, n).map_err(e)?;
            ensure(wave1_sylvester(n_parts, n) == w1, || format!("W_1 logarithmic form N={n_parts} n={n}"))?;
            ensure(wave1_glaisher_half(n_parts, n) == w1, || format!("W_1 B(1/2) form N={n_parts} n={n}"))?;
        }
    }
    Ok("N <= 15, 1 <= n <= 60; both W_1 forms agree".into())
}

fn c6() -> Outcome {
    let variants = [BetaVariant::Multiplication, BetaVariant::Stirling, BetaVariant::Glaisher2, BetaVariant::Glaisher4];
    for k in 2..=8u32 {
        for j in 1..k as i64 {
            for m in 0..=10usize {
                let base = apostol_beta(m, j, k);
                for v in variants {
                    let got = apostol_beta_variant(v, m, j, k).map_err(e)?;
                    ensure(got == base, || format!("{v:?} m={m} j={j} k={k}"))?;
                }
            }
        }
    }
    for m in 0..=20usize {
        let got = rational(&apostol_beta(m, 1, 2))?;
        let want = (int(BigInt::one() << m) - int(1)) * arith::bernoulli_number(m);
        ensure(got == want, || format!("beta_{m}(-1) = {got}"))?;
    }
    let mut worst = 0f64;
    for b in 2..=6u32 {
        for a in 1..b {
            for m in 2..=6u32 {
                let exact = apostol_beta(m as usize, a as i64, b).to_complex();
                let num = hurwitz_beta_numeric(m, a, b).map_err(e)?;
                let r = (exact - num).norm() / exact.norm().max(f64::MIN_POSITIVE);
                if exact.norm() == 0.0 {
                    ensure(num.norm() < 1e-12, || format!("m={m} a={a} b={b}: {num}"))?;
                } else {
                    worst = worst.max(r);
                }
            }
        }
    }
    ensure(worst <= 1e-8, || format!("Hurwitz relative error {worst:e}"))?;
    Ok(format!("four forms agree; beta_m(-1) for m <= 20; Hurwitz max rel err {worst:.1e}"))
}

fn c7() -> Outcome {
    for k in 1..=20u32 {
        for h in 1..=k {
            if num_integer::gcd(h, k) != 1 {
                continue;
            }
            let one = CycloElement::one(k);
            let mut p = one.clone();
            for w in 1..k {
                p = &p * &(&one - &CycloElement::zeta_pow(k, (h * w) as i64));
            }
            ensure(p == CycloElement::from_rational(k, int(k)), || format!("k={k} h={h}: {p}"))?;
        }
    }
    Ok("k <= 20, every primitive root".into())
}

fn c8() -> Outcome {
    ensure(sz_polynomial(0) == QPolynomial::one(), || "P_010".into())?;
    ensure(sz_polynomial(1) == QPolynomial::from_ints(&[0, -1, 1]), || "P_011".into())?;
    let p2 = QPolynomial::new(vec![int(0), rat(-26, 9), rat(13, 3), rat(-22, 9), int(1)]);
    ensure(sz_polynomial(2) == p2, || format!("P_012 = {}", sz_polynomial(2).display_with("x")))?;
    let zero = Rational::zero();
    for r in 0..=12u32 {
        let p = sz_polynomial(r);
        if r <= 10 {
            ensure(p.is_monic() && p.degree() == Some(2 * r as usize), || format!("monic/degree r={r}"))?;
            if r >= 1 {
                ensure(p.eval(&zero).is_zero() && p.eval(&int(1)).is_zero(), || format!("roots r={r}"))?;
            }
        }
        if (1..=8).contains(&r) {
            let d = 2 * r as usize;
            let top = [p.coeff(d), p.coeff(d - 1), p.coeff(d - 2)];
            ensure(top == sz_top_coefficients(r), || format!("top coefficients r={r}"))?;
        }
        if r >= 1 {
            ensure(p.coeff(1) == sz_coeff_x(r), || format!("x coefficient r={r}"))?;
            ensure(p.coeff(2) == sz_coeff_x2(r), || format!("x^2 coefficient r={r}"))?;
        }
    }
    for r in 1..=40u32 {
        ensure(sz_coeff_x(r) < zero, || format!("x coefficient sign r={r}"))?;
        ensure(sz_coeff_x2(r) > zero, || format!("x^2 coefficient sign r={r}"))?;
    }
    ensure(m_polynomial(2).degree() == Some(4), || "M_012".into())?;
    Ok("printed r <= 2, shape r <= 10, top r <= 8, low r <= 12, signs r <= 40".into())
}

fn c9() -> Outcome {
    let c = find_w0().map_err(e)?;
    let dw = (c.w0 - Complex64::new(0.916198, 0.182459)).norm();
    ensure(dw < 1e-5, || format!("w0 = {} off by {dw:e}", c.w0))?;
    let mut worst = 0f64;
    for (name, got, want) in [
        ("U", c.u, 0.0680762),
        ("V", c.v, -0.196576),
        ("alpha", c.alpha, 5.39532),
        ("beta", c.beta, 1.92792),
        ("alpha'", c.alpha1, 4.51129),
        ("beta'", c.beta1, -1.30059),
        ("alpha''", c.alpha2, 3.11832),
        ("beta''", c.beta2, -1.02847),
    ] {
        ensure((got - want).abs() < 1e-4, || format!("{name} = {got}, printed {want}"))?;
        worst = worst.max((got - want).abs());
    }
    ensure((c.period() - 31.9631).abs() < 1e-3, || format!("period {}", c.period()))?;
    Ok(format!("w0 = {:.6}{:+.6}i, constants max dev {worst:.1e}, period {:.4}", c.w0.re, c.w0.im, c.period()))
}

fn c10() -> Outcome {
    let t = Instant::now();
    let rows = table1(&[200]).map_err(e)?;
    let (r011, r121) = (&rows[0], &rows[1]);
    ensure((r011.exact - 32.1168).abs() <= 5e-5, || format!("C011(200) = {}", r011.exact))?;
    ensure((r121.exact - 0.0253518).abs() <= 5e-8, || format!("C121(200) = {}", r121.exact))?;
    let rel = |a: f64, b: f64| ((a - b) / b).abs();
    ensure(rel(r011.main_term, 33.8689) <= 2e-3, || format!("A011(200) = {}", r011.main_term))?;
    ensure(rel(r121.main_term, -0.0680541) <= 2e-3, || format!("A121(200) = {}", r121.main_term))?;
    within(t, Duration::from_secs(600))?;
    Ok(format!(
        "C011 = {:.6} A011 = {:.4} C121 = {:.7} A121 = {:.7} in {:.1?}",
        r011.exact, r011.main_term, r121.exact, r121.main_term, t.elapsed()
    ))
}

/// Half a unit in the last printed digit.
fn printed(s: &str) -> (f64, f64) {
    let v: f64 = s.parse().unwrap();
    let decimals = s.split('.').nth(1).map_or(0, str::len) as i32;
    (v, 0.5 * 10f64.powi(-decimals))
}

fn c11() -> Outcome {
    let want: [(&str, &str, &str); 8] = [
        ("-0.2812", "0", "0.04005"),
        ("0.09511", "0", "0.01309"),
        ("0.02429", "-0.02899", "0.005911"),
        ("0.007312", "-0.01775", "0.01332"),
        ("0.1921", "0", "0.01219"),
        ("0.01510", "0", "0.01392"),
        ("-0.0009181", "-0.002514", "0.02233"),
        ("-0.0006919", "-0.0002846", "0.03771"),
    ];
    let rows = table2().map_err(e)?;
    let mut worst_gap = 0f64;
    for (row, (re, im, gap)) in rows.iter().zip(want) {
        let (re, tre) = printed(re);
        let (im, tim) = printed(im);
        let tim = if im == 0.0 { 1e-12 } else { tim };
        let tag = format!("({},{},{})", row.h, row.k, row.l);
        ensure((row.c_star.re - re).abs() <= tre && (row.c_star.im - im).abs() <= tim, || {
            format!("C{tag}(star) = {}", row.c_star)
        })?;
        let g: f64 = gap.parse().unwrap();
        ensure((row.gap - g).abs() <= 2e-3, || format!("gap{tag} = {}", row.gap))?;
        worst_gap = worst_gap.max((row.gap - g).abs());
    }
    Ok(format!("eight rows, max gap deviation {worst_gap:.1e}"))
}

fn c12() -> Outcome {
    for k in 1..=10u32 {
        for n in k..=20u32 {
            for l in 1..=n / k {
                let fast = c_sum_over_h(k, l, n).map_err(e)?;
                let slow = c_sum_over_h_direct(k, l, n).map_err(e)?;
                ensure(fast == slow, || format!("k={k} l={l} N={n}: {fast} vs {slow}"))?;
            }
        }
    }
    Ok("k <= 10, N <= 20".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("N=2 decomposition", c1),
        ("top coefficient identities", c2),
        ("oracle reconstruction", c3),
        ("route agreement", c4),
        ("Sylvester waves", c5),
        ("Apostol-Bernoulli consistency", c6),
        ("root-of-unity product", c7),
        ("P_01r polynomials", c8),
        ("asymptotic constants", c9),
        ("main-term table at N=200", c10),
        ("averaged coefficients table", c11),
        ("Ramanujan-sum aggregate", c12),
    ];
    let only: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let id = i + 1;
        if !only.is_empty() && !only.contains(&id) {
            continue;
        }
        let t = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panic: {msg}"))
        });
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {id:>2} {name} [{secs:.1}s]: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL {id:>2} {name} [{secs:.1}s]: {detail}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
