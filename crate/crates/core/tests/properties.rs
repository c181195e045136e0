//! Randomised invariants.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Zero};
use proptest::prelude::*;

use rademacher::arith::{self, int, rat, Rational};
use rademacher::coeffs::*;
use rademacher::cyclotomic::*;
use rademacher::CoeffKey;

fn sign(n: u64) -> Rational {
    int(if n.is_multiple_of(2) { 1 } else { -1 })
}

fn s1(n: usize, m: usize) -> Rational {
    int(BigInt::from(arith::stirling1(n, m)))
}

fn s2(n: usize, m: usize) -> Rational {
    int(BigInt::from(arith::stirling2(n, m)))
}

fn element(k: u32) -> impl Strategy<Value = CycloElement> {
    prop::collection::vec((-20i64..=20, 1i64..=6), k as usize)
        .prop_map(move |v| CycloElement::from_poly_coeffs(k, v.into_iter().map(|(a, b)| rat(a, b)).collect()))
}

fn conductor_and_elements(n: usize) -> impl Strategy<Value = (u32, Vec<CycloElement>)> {
    (1u32..=12).prop_flat_map(move |k| (Just(k), prop::collection::vec(element(k), n)))
}

/// Coprime `(h, k)` with `k <= n`.
fn root(n: u32) -> impl Strategy<Value = (u32, u32)> {
    (1..=n).prop_flat_map(|k| (0..k, Just(k))).prop_filter("coprime", |(h, k)| h.gcd(k) == 1)
}

fn close(a: Complex64, b: Complex64) -> bool {
    (a - b).norm() <= 1e-9 * (1.0 + b.norm())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn bernoulli_poly_at_one(n in 0usize..=30) {
        prop_assert_eq!(arith::bernoulli_poly(n).eval(&int(1)), sign(n as u64) * arith::bernoulli_number(n));
    }

    #[test]
    fn negative_order_bernoulli(n in 0usize..=20, r in 1usize..=10) {
        let lhs = arith::higher_bernoulli(n, -(r as i64), &Rational::zero())
            * int(arith::binomial((r + n) as u64, r as u64));
        prop_assert_eq!(lhs, s2(r + n, r));
    }

    #[test]
    fn positive_order_bernoulli(r in 1usize..=12, n in 0usize..12) {
        prop_assume!(n < r);
        let lhs = arith::higher_bernoulli(n, r as i64, &Rational::zero());
        let rhs = sign(n as u64) * rat(r as i64, (r - n) as i64) * s1(r, r - n)
            / int(arith::binomial(r as u64, (r - n) as u64));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn subset_numbers_expand_powers(n in 0usize..=12, x in -30i64..=30) {
        let mut total = Rational::zero();
        for m in 0..=n {
            let falling: Rational = (0..m as i64).map(|j| int(x - j)).product();
            total += s2(n, m) * falling;
        }
        prop_assert_eq!(total, int(BigInt::from(x).pow(n as u32)));
    }

    #[test]
    fn power_sum_poly_matches_summation(m in 0usize..=15, n in 0u64..=50) {
        let direct: BigInt = (1..=n).map(|j| BigInt::from(j).pow(m as u32)).sum();
        prop_assert_eq!(arith::power_sum_poly(m).eval(&int(n)), int(direct.clone()));
        prop_assert_eq!(arith::power_sum(m as u32, n), int(direct));
    }

    #[test]
    fn ring_axioms((_k, v) in conductor_and_elements(3)) {
        let (a, b, c) = (&v[0], &v[1], &v[2]);
        prop_assert_eq!(a * b, b * a);
        prop_assert_eq!(&(a * b) * c, a * &(b * c));
        prop_assert_eq!(a * &(b + c), &(a * b) + &(a * c));
        prop_assert_eq!(&(a + b) - b, a.clone());
    }

    #[test]
    fn embedding_is_a_homomorphism((k, v) in conductor_and_elements(2), h in 1i64..=40) {
        prop_assume!(h.gcd(&(k as i64)) == 1);
        let (a, b) = (&v[0], &v[1]);
        let ea = a.embed(h).unwrap();
        let eb = b.embed(h).unwrap();
        prop_assert!(close((a * b).embed(h).unwrap(), ea * eb));
        prop_assert!(close((a + b).embed(h).unwrap(), ea + eb));
    }

    #[test]
    fn inverse_is_inverse(a in (1u32..=12).prop_flat_map(element)) {
        prop_assume!(!a.is_zero());
        prop_assert!((&a * &a.invert().unwrap()).is_one());
    }

    #[test]
    fn json_roundtrip(a in (1u32..=12).prop_flat_map(element)) {
        let s = serde_json::to_string(&a).unwrap();
        let back: CycloElement = serde_json::from_str(&s).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn product_of_one_minus_roots(k in 1u32..=20, h in 1i64..=20) {
        prop_assume!(h.gcd(&(k as i64)) == 1);
        let one = CycloElement::one(k);
        let rho = CycloElement::zeta_pow(k, h);
        let mut p = one.clone();
        for w in 1..k {
            p = &p * &(&one - &rho.pow(w as u64));
        }
        prop_assert_eq!(p.to_rational(), Some(int(k)));
    }

    #[test]
    fn pole_product_identity((h, k) in root(8), n in 1u32..=20) {
        prop_assume!(k <= n);
        let one = CycloElement::one(k);
        let rho = CycloElement::zeta_pow(k, h as i64);
        let s = n / k;
        let mut lhs = one.clone();
        for w in (1..=n).filter(|w| w % k != 0) {
            lhs = &lhs * &(&rho.pow(w as u64) - &one);
        }
        let lhs = lhs.invert().unwrap();
        let mut den = CycloElement::from_rational(k, int(BigInt::from(k).pow(s)));
        for w in 1..=n - k * s {
            den = &den * &(&one - &rho.pow(w as u64));
        }
        let rhs = den.invert().unwrap().scale(&sign((n + s) as u64));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn beta_routes_agree(m in 0usize..=10, (j, k) in root(8)) {
        prop_assume!(j != 0);
        let a = apostol_beta(m, j as i64, k);
        prop_assert_eq!(&apostol_beta_glaisher2(m, j as i64, k).unwrap(), &a);
        prop_assert_eq!(&apostol_beta_glaisher4(m, j as i64, k).unwrap(), &a);
        prop_assert_eq!(&apostol_beta_stirling(m, j as i64, k).unwrap(), &a);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn routes_agree((h, k) in root(10), n in 1u32..=10, l in 1u32..=10) {
        prop_assume!(k <= n && l <= n / k);
        let key = CoeffKey::new(h, k, l, n).unwrap();
        let d = c_direct(&key).unwrap();
        prop_assert_eq!(&c_recursive(&key).unwrap(), &d);
        prop_assert_eq!(&c_sz(&key).unwrap(), &d);
        prop_assert_eq!(&c_residue(&key).unwrap(), &d);
        prop_assert_eq!(&c_log_series(&key).unwrap(), &d);
        prop_assert_eq!(&c_andrews(&key).unwrap(), &d);
    }

    #[test]
    fn beyond_the_pole_vanishes((h, k) in root(10), n in 1u32..=10, extra in 1u32..=3) {
        prop_assume!(k <= n);
        let key = CoeffKey::new(h, k, n / k + extra, n).unwrap();
        prop_assert!(c_residue(&key).unwrap().is_zero());
        prop_assert!(c_direct(&key).unwrap().is_zero());
    }

    #[test]
    fn low_conductor_is_rational((h, k) in root(2), n in 1u32..=14, l in 1u32..=14) {
        prop_assume!(k <= n && l <= n / k);
        let key = CoeffKey::new(h, k, l, n).unwrap();
        prop_assert!(c_recursive(&key).unwrap().to_rational().is_some());
    }

    #[test]
    fn summed_over_h_matches(k in 1u32..=6, n in 1u32..=10, l in 1u32..=10) {
        prop_assume!(k <= n && l <= n / k);
        prop_assert_eq!(c_sum_over_h(k, l, n).unwrap(), c_sum_over_h_direct(k, l, n).unwrap());
    }

    #[test]
    fn reconstruction(n_parts in 1u32..=12, n in 0u64..=100) {
        let t = decompose(n_parts, Algorithm::Recursive).unwrap();
        prop_assert_eq!(p_from_decomposition(&t, n).unwrap(), int(BigInt::from(p_oracle(n_parts, n))));
    }

    #[test]
    fn waves_sum_to_counts(n_parts in 1u32..=15, n in 1i64..=60) {
        let total: Rational = (1..=n_parts).map(|k| wave(k, n_parts, n).unwrap()).sum();
        prop_assert_eq!(total, int(BigInt::from(p_oracle(n_parts, n as u64))));
    }

    #[test]
    fn waves_are_quasi_polynomial(n_parts in 1u32..=8, k in 1u32..=8, start in -10i64..=10) {
        prop_assume!(k <= n_parts);
        let s = (n_parts / k) as usize;
        let mut vals: Vec<Rational> = (0..=s as i64).map(|i| wave(k, n_parts, start + i * k as i64).unwrap()).collect();
        for _ in 0..s {
            vals = vals.windows(2).map(|w| &w[1] - &w[0]).collect();
        }
        prop_assert!(vals[0].is_zero());
    }

    #[test]
    fn sz_scaling(r in 0u32..=6, extra in 1u32..=10) {
        let n = r + extra;
        let key = CoeffKey::new(0, 1, n - r, n).unwrap();
        let c = c_direct(&key).unwrap().to_rational().unwrap();
        let want = sign(n as u64)
            * int(arith::factorial(n as u64))
            * int(BigInt::from(-4).pow(r))
            * int(arith::factorial(r as u64))
            * c;
        prop_assert_eq!(sz_polynomial(r).eval(&int(n)), want);
    }

    #[test]
    fn sz_shape(r in 1u32..=10) {
        let p = sz_polynomial(r);
        prop_assert_eq!(p.degree(), Some(2 * r as usize));
        prop_assert!(p.coeff(2 * r as usize).is_one());
        prop_assert!(p.eval(&Rational::zero()).is_zero());
        prop_assert!(p.eval(&int(1)).is_zero());
    }

    #[test]
    fn sz_low_signs(r in 1u32..=40) {
        prop_assert!(sz_coeff_x(r) < Rational::zero());
        prop_assert!(sz_coeff_x2(r) > Rational::zero());
    }

    #[test]
    fn reflected_m_is_positive(r in 1u32..=12) {
        for (i, c) in m_polynomial(r).coeffs().iter().enumerate() {
            let c = if i % 2 == 1 { -c } else { c.clone() };
            prop_assert!(c >= Rational::zero());
        }
    }
}

