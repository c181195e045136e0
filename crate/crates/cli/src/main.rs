//! Command line front end for the `rademacher` crate.

mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use output::{exact_string, fmt_float, value_json, Format, Out};
use rademacher::asymptotics::{self, Figure};
use rademacher::coeffs::{
    self, c_andrews_with_budget, decompose, p_from_decomposition, p_oracle_row, Algorithm,
    DecompositionTable, DEFAULT_ANDREWS_BUDGET,
};
use rademacher::{CoeffKey, CycloElement, Error};

#[derive(Parser)]
#[command(name = "rademacher", version, about = "Partial fraction coefficients of prod 1/(1-q^j)")]
struct Cli {
    /// output format
    #[arg(long, value_enum, default_value_t = Format::Pretty, global = true)]
    format: Format,
    /// significant digits for embedded floats (pretty and csv)
    #[arg(long, default_value_t = 15, value_parser = clap::value_parser!(u32).range(1..=17), global = true)]
    precision: u32,
    /// maximum tuple count for the Andrews enumeration
    #[arg(long, default_value_t = DEFAULT_ANDREWS_BUDGET, value_parser = clap::value_parser!(u64).range(1..), global = true)]
    andrews_budget: u64,
    /// directory for cached decomposition tables
    #[arg(long, env = "RADEMACHER_CACHE_DIR", global = true)]
    cache_dir: Option<PathBuf>,
    /// no progress on stderr
    #[arg(long, short, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgoArg {
    Direct,
    Recursive,
    Sz,
    Andrews,
    LogSeries,
    All,
}

impl AlgoArg {
    fn algorithms(self) -> Vec<Algorithm> {
        match self {
            AlgoArg::Direct => vec![Algorithm::Direct],
            AlgoArg::Recursive => vec![Algorithm::Recursive],
            AlgoArg::Sz => vec![Algorithm::Sz],
            AlgoArg::Andrews => vec![Algorithm::Andrews],
            AlgoArg::LogSeries => vec![Algorithm::LogSeries],
            AlgoArg::All => Algorithm::ALL.to_vec(),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// one coefficient C_{hkl}(N)
    Coeff {
        h: u32,
        k: u32,
        l: u32,
        #[arg(value_name = "N")]
        n: u32,
        #[arg(long, value_enum, default_value_t = AlgoArg::Direct)]
        algo: AlgoArg,
    },
    /// every coefficient for one N
    Decompose {
        #[arg(value_name = "N")]
        n: u32,
        #[arg(long, value_enum, default_value_t = AlgoArg::Direct)]
        algo: AlgoArg,
    },
    /// rebuild p_N(n) from the decomposition and from the waves, against counting
    Verify {
        #[arg(value_name = "N")]
        n: u32,
        n_max: u64,
    },
    /// Sylvester wave W_k(N, n)
    Wave {
        k: u32,
        #[arg(value_name = "N")]
        n_parts: u32,
        #[arg(allow_hyphen_values = true)]
        n: i64,
    },
    /// the polynomial P_{01r} and its comparison with M_{01r}
    Poly { r: u32 },
    /// dilogarithm constants and main terms
    Asym {
        /// N values for main terms
        #[arg(value_name = "N")]
        ns: Vec<u32>,
    },
    /// comparison tables: 1 (main terms), 2 (averages)
    Table {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=2))]
        which: u8,
        /// N values for table 1
        #[arg(long = "n", value_name = "N", num_args = 1.., default_values_t = [200u32])]
        ns: Vec<u32>,
    },
    /// scaled exact values against the limiting sinusoid
    Figure {
        which: Figure,
        #[arg(long, default_value_t = 100)]
        from: u32,
        #[arg(long, default_value_t = 300)]
        to: u32,
    },
}

struct Ctx {
    format: Format,
    precision: u32,
    andrews_budget: u64,
    cache_dir: Option<PathBuf>,
    quiet: bool,
}

impl Ctx {
    fn progress(&self, msg: impl AsRef<str>) {
        if !self.quiet {
            eprintln!("{}", msg.as_ref());
        }
    }

    fn row(&self, algo: Algorithm, h: u32, k: u32, n: u32) -> rademacher::Result<Vec<CycloElement>> {
        if algo == Algorithm::Andrews {
            (1..=n / k)
                .map(|l| c_andrews_with_budget(&CoeffKey::new(h, k, l, n)?, self.andrews_budget))
                .collect()
        } else {
            algo.row(h, k, n)
        }
    }

    fn coefficient(&self, algo: Algorithm, key: &CoeffKey) -> rademacher::Result<CycloElement> {
        match algo {
            Algorithm::Direct => coeffs::c_direct(key),
            Algorithm::Recursive => coeffs::c_recursive(key),
            Algorithm::Sz => coeffs::c_sz(key),
            Algorithm::Andrews => c_andrews_with_budget(key, self.andrews_budget),
            Algorithm::LogSeries => coeffs::c_log_series(key),
        }
    }

    fn decompose(&self, n: u32, algo: Algorithm) -> rademacher::Result<DecompositionTable> {
        let path = self.cache_dir.as_ref().map(|d| d.join(format!("decompose-{n}.json")));
        if let Some(p) = &path {
            if let Ok(text) = std::fs::read_to_string(p) {
                let table = DecompositionTable::from_json(&text)?;
                if table.n() == n && table.is_complete() {
                    self.progress(format!("cached table {}", p.display()));
                    return Ok(table);
                }
            }
        }
        let table = if algo == Algorithm::Andrews {
            let mut t = DecompositionTable::new(n);
            for (h, k) in CoeffKey::roots_for(n) {
                for (i, v) in self.row(algo, h, k, n)?.into_iter().enumerate() {
                    t.insert(&CoeffKey::new(h, k, i as u32 + 1, n)?, v)?;
                }
            }
            t
        } else {
            decompose(n, algo)?
        };
        if let Some(p) = &path {
            if let Some(dir) = p.parent() {
                let _ = std::fs::create_dir_all(dir);
            }
            if std::fs::write(p, table.to_json()).is_ok() {
                self.progress(format!("wrote {}", p.display()));
            }
        }
        Ok(table)
    }
}

fn run(cli: Cli) -> Result<bool, Error> {
    let ctx = Ctx {
        format: cli.format,
        precision: cli.precision,
        andrews_budget: cli.andrews_budget,
        cache_dir: cli.cache_dir,
        quiet: cli.quiet,
    };
    let mut out = Out::new(ctx.format);
    let ok = match cli.command {
        Command::Coeff { h, k, l, n, algo } => cmd_coeff(&ctx, &mut out, h, k, l, n, algo)?,
        Command::Decompose { n, algo } => cmd_decompose(&ctx, &mut out, n, algo)?,
        Command::Verify { n, n_max } => cmd_verify(&ctx, &mut out, n, n_max)?,
        Command::Wave { k, n_parts, n } => {
            let w = coeffs::wave(k, n_parts, n)?;
            out.record(
                json!({"k": k, "N": n_parts, "n": n, "value": exact_string(&w)}),
                &[("k", k.to_string()), ("N", n_parts.to_string()), ("n", n.to_string()), ("value", exact_string(&w))],
                format!("W_{k}({n_parts}, {n}) = {}", exact_string(&w)),
            );
            true
        }
        Command::Poly { r } => cmd_poly(&mut out, r),
        Command::Asym { ns } => cmd_asym(&ctx, &mut out, &ns)?,
        Command::Table { which, ns } => cmd_table(&ctx, &mut out, which, &ns)?,
        Command::Figure { which, from, to } => {
            ctx.progress(format!("computing {which} for {from} <= N <= {to}"));
            for r in asymptotics::figure_series(which, from..=to)? {
                let p = ctx.precision;
                out.record(
                    json!({"N": r.n, "exact": r.exact, "main_term": r.main_term}),
                    &[
                        ("N", r.n.to_string()),
                        ("exact", fmt_float(r.exact, p)),
                        ("main_term", fmt_float(r.main_term, p)),
                        ("ratio", fmt_float(r.exact / r.main_term, p)),
                    ],
                    format!("N = {:>4}  exact {:>12}  sinusoid {:>12}", r.n, fmt_float(r.exact, 6), fmt_float(r.main_term, 6)),
                );
            }
            true
        }
    };
    out.finish();
    Ok(ok)
}

fn cmd_coeff(ctx: &Ctx, out: &mut Out, h: u32, k: u32, l: u32, n: u32, algo: AlgoArg) -> Result<bool, Error> {
    let key = CoeffKey::new(h, k, l, n)?;
    let mut values: Vec<(Algorithm, CycloElement)> = Vec::new();
    for a in algo.algorithms() {
        match ctx.coefficient(a, &key) {
            Ok(v) => values.push((a, v)),
            Err(e @ Error::BudgetExceeded { .. }) if matches!(algo, AlgoArg::All) => {
                ctx.progress(format!("{}: refused, {e}", a.name()));
            }
            Err(e) => return Err(e),
        }
    }
    let agree = values.windows(2).all(|w| w[0].1 == w[1].1);
    let p = ctx.precision;
    let results: Vec<Value> = values
        .iter()
        .map(|(a, v)| {
            let mut j = value_json(v);
            j["algo"] = json!(a.name());
            j
        })
        .collect();
    let mut doc = json!({"h": h, "k": k, "l": l, "N": n, "results": results});
    if values.len() > 1 {
        doc["agree"] = json!(agree);
    }
    let mut text = String::new();
    let mut rows = Vec::new();
    for (a, v) in &values {
        let z = v.to_complex();
        text += &format!("C_{{{h},{k},{l}}}({n}) [{}] = {}  ~ {}\n", a.name(), exact_string_cyclo(v), output::fmt_complex(z, p));
        rows.push(vec![
            ("algo", a.name().to_string()),
            ("h", h.to_string()),
            ("k", k.to_string()),
            ("l", l.to_string()),
            ("N", n.to_string()),
            ("exact", exact_string_cyclo(v)),
            ("re", fmt_float(z.re, p)),
            ("im", fmt_float(z.im, p)),
        ]);
    }
    if values.len() > 1 {
        text += if agree { "all routes agree" } else { "MISMATCH between routes" };
    }
    out.document(doc, rows, text.trim_end().to_string());
    Ok(agree)
}

fn exact_string_cyclo(v: &CycloElement) -> String {
    match v.to_rational() {
        Some(r) => exact_string(&r),
        None => v.to_string(),
    }
}

fn cmd_decompose(ctx: &Ctx, out: &mut Out, n: u32, algo: AlgoArg) -> Result<bool, Error> {
    let algos = algo.algorithms();
    let mut tables = Vec::new();
    for a in &algos {
        ctx.progress(format!("decomposing N = {n} with {}", a.name()));
        tables.push(ctx.decompose(n, *a)?);
    }
    let agree = tables.windows(2).all(|w| w[0].entries().eq(w[1].entries()));
    let table = &tables[0];
    match ctx.format {
        Format::Json => {
            let mut doc: Value = serde_json::from_str(&table.to_json()).expect("valid json");
            if tables.len() > 1 {
                doc["agree"] = json!(agree);
            }
            out.raw(serde_json::to_string_pretty(&doc).expect("json"));
        }
        Format::Csv => out.raw(table.to_csv().trim_end().to_string()),
        Format::Pretty => {
            let mut text = format!("N = {n}: {} coefficients\n", table.len());
            for (key, v) in table.entries() {
                text += &format!(
                    "  C_{{{},{},{}}} = {}  ~ {}\n",
                    key.h,
                    key.k,
                    key.l,
                    exact_string_cyclo(v),
                    output::fmt_complex(v.to_complex(), ctx.precision)
                );
            }
            if tables.len() > 1 {
                text += if agree { "all routes agree" } else { "MISMATCH between routes" };
            }
            out.raw(text.trim_end().to_string());
        }
    }
    Ok(agree)
}

fn cmd_verify(ctx: &Ctx, out: &mut Out, n: u32, n_max: u64) -> Result<bool, Error> {
    ctx.progress(format!("decomposing N = {n}"));
    let table = ctx.decompose(n, Algorithm::Direct)?;
    let oracle = p_oracle_row(n, n_max);
    let mut bad_rec = Vec::new();
    let mut bad_wave = Vec::new();
    for (m, want) in oracle.iter().enumerate() {
        let want = rademacher::arith::int(num_bigint::BigInt::from(want.clone()));
        if p_from_decomposition(&table, m as u64)? != want {
            bad_rec.push(m);
        }
        let mut total = rademacher::Rational::from_integer(0.into());
        for k in 1..=n {
            total += coeffs::wave(k, n, m as i64)?;
        }
        if total != want {
            bad_wave.push(m);
        }
    }
    let ok = bad_rec.is_empty() && bad_wave.is_empty();
    let verdict = |bad: &[usize]| if bad.is_empty() { "OK".to_string() } else { format!("FAILED at n = {bad:?}") };
    let text = format!("p_N reconstruction {}, Sylvester {}", verdict(&bad_rec), verdict(&bad_wave));
    out.document(
        json!({"N": n, "n_max": n_max, "reconstruction_failures": bad_rec, "sylvester_failures": bad_wave, "ok": ok}),
        vec![vec![
            ("N", n.to_string()),
            ("n_max", n_max.to_string()),
            ("reconstruction_failures", bad_rec.len().to_string()),
            ("sylvester_failures", bad_wave.len().to_string()),
            ("ok", ok.to_string()),
        ]],
        text,
    );
    Ok(ok)
}

fn cmd_poly(out: &mut Out, r: u32) -> bool {
    let p = coeffs::sz_polynomial(r);
    let m = coeffs::m_polynomial(r);
    let coeffs_str: Vec<String> = p.coeffs().iter().map(exact_string).collect();
    let diff = &p - &m;
    let cx = coeffs::sz_coeff_x(r);
    let cx2 = coeffs::sz_coeff_x2(r);
    let zero = rademacher::Rational::from_integer(0.into());
    let alternating = p
        .coeffs()
        .iter()
        .enumerate()
        .skip(1)
        .all(|(i, c)| if i % 2 == 0 { c > &zero } else { c < &zero });
    let text = format!(
        "P_01{r}(N) = {}\nx coefficient {} ({}), x^2 coefficient {} ({})\nalternating signs: {alternating}\nM_01{r}(N) = {}\nP - M = {}",
        p.display_with("N"),
        exact_string(&cx),
        if cx < zero { "negative" } else { "nonnegative" },
        exact_string(&cx2),
        if cx2 > zero { "positive" } else { "nonpositive" },
        m.display_with("N"),
        diff.display_with("N"),
    );
    let rows = p
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| vec![("degree", i.to_string()), ("coefficient", exact_string(c)), ("m_coefficient", exact_string(&m.coeff(i)))])
        .collect();
    out.document(
        json!({
            "r": r,
            "coefficients": coeffs_str,
            "m_coefficients": m.coeffs().iter().map(exact_string).collect::<Vec<_>>(),
            "x_coefficient": exact_string(&cx),
            "x2_coefficient": exact_string(&cx2),
            "alternating": alternating,
        }),
        rows,
        text,
    );
    true
}

fn cmd_asym(ctx: &Ctx, out: &mut Out, ns: &[u32]) -> Result<bool, Error> {
    let c = asymptotics::find_w0()?;
    let p = ctx.precision;
    let mut doc = serde_json::to_value(c).expect("json");
    doc["period"] = json!(c.period());
    let terms: Vec<Value> = ns
        .iter()
        .map(|&n| json!({"N": n, "main_term_011": c.main_term_011(n), "main_term_121": c.main_term_121(n)}))
        .collect();
    doc["main_terms"] = json!(terms);
    let mut text = format!(
        "w0 = {}\nz0 = {}\nU = {}  V = {}  period = {}\nalpha = {}  beta = {}\nalpha' = {}  beta' = {}  (odd N)\nalpha'' = {}  beta'' = {}  (even N)",
        output::fmt_complex(c.w0, p),
        output::fmt_complex(c.z0, p),
        fmt_float(c.u, p),
        fmt_float(c.v, p),
        fmt_float(c.period(), p),
        fmt_float(c.alpha, p),
        fmt_float(c.beta, p),
        fmt_float(c.alpha1, p),
        fmt_float(c.beta1, p),
        fmt_float(c.alpha2, p),
        fmt_float(c.beta2, p),
    );
    for &n in ns {
        text += &format!("\nN = {n}: A011 = {}  A121 = {}", fmt_float(c.main_term_011(n), p), fmt_float(c.main_term_121(n), p));
    }
    let mut rows = vec![
        vec![("name", "w0_re".to_string()), ("value", fmt_float(c.w0.re, p))],
        vec![("name", "w0_im".to_string()), ("value", fmt_float(c.w0.im, p))],
        vec![("name", "z0_re".to_string()), ("value", fmt_float(c.z0.re, p))],
        vec![("name", "z0_im".to_string()), ("value", fmt_float(c.z0.im, p))],
    ];
    for (name, v) in [
        ("U", c.u),
        ("V", c.v),
        ("alpha", c.alpha),
        ("beta", c.beta),
        ("alpha1", c.alpha1),
        ("beta1", c.beta1),
        ("alpha2", c.alpha2),
        ("beta2", c.beta2),
        ("period", c.period()),
    ] {
        rows.push(vec![("name", name.to_string()), ("value", fmt_float(v, p))]);
    }
    for &n in ns {
        rows.push(vec![("name", format!("A011({n})")), ("value", fmt_float(c.main_term_011(n), p))]);
        rows.push(vec![("name", format!("A121({n})")), ("value", fmt_float(c.main_term_121(n), p))]);
    }
    out.document(doc, rows, text);
    Ok(true)
}

fn cmd_table(ctx: &Ctx, out: &mut Out, which: u8, ns: &[u32]) -> Result<bool, Error> {
    let p = ctx.precision;
    if which == 1 {
        ctx.progress(format!("exact C_011 and C_121 for N = {ns:?}"));
        let rows = asymptotics::table1(ns)?;
        for r in rows {
            out.record(
                serde_json::to_value(&r).expect("json"),
                &[
                    ("h", r.h.to_string()),
                    ("k", r.k.to_string()),
                    ("l", r.l.to_string()),
                    ("N", r.n.to_string()),
                    ("exact", fmt_float(r.exact, p)),
                    ("main_term", fmt_float(r.main_term, p)),
                    ("ratio", fmt_float(r.exact / r.main_term, p)),
                ],
                format!(
                    "N = {:>4}  C_{}{}{} = {:>14}  A = {:>14}  gap {}",
                    r.n,
                    r.h,
                    r.k,
                    r.l,
                    fmt_float(r.exact, 6),
                    fmt_float(r.main_term, 6),
                    fmt_float(r.relative_gap, 3)
                ),
            );
        }
    } else {
        ctx.progress("averaging C_hkl(N) over 1 <= N <= 100");
        for r in asymptotics::table2()? {
            out.record(
                serde_json::to_value(&r).expect("json"),
                &[
                    ("h", r.h.to_string()),
                    ("k", r.k.to_string()),
                    ("l", r.l.to_string()),
                    ("c_star_re", fmt_float(r.c_star.re, p)),
                    ("c_star_im", fmt_float(r.c_star.im, p)),
                    ("c_inf_re", fmt_float(r.c_inf.re, p)),
                    ("c_inf_im", fmt_float(r.c_inf.im, p)),
                    ("gap", fmt_float(r.gap, p)),
                ],
                format!(
                    "{} {} {}  C* = {:>24}  Cinf = {:>24}  gap {}",
                    r.h,
                    r.k,
                    r.l,
                    output::fmt_complex(r.c_star, 4),
                    output::fmt_complex(r.c_inf, 4),
                    fmt_float(r.gap, 4)
                ),
            );
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e @ Error::BudgetExceeded { .. }) => {
            eprintln!("refused: {e} (raise --andrews-budget)");
            ExitCode::from(3)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
