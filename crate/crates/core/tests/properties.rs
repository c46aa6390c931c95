use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::Signed;
use proptest::prelude::*;

use unimass::exact::{beta_odd_ratio, pretty, zeta_even_ratio};
use unimass::localinv::{hilbert_symbol, Place, Sign};
use unimass::massformula::{mass_odd_unimodular, mass_via_parahoric};
use unimass::numeric::{beta_numeric, eval, zeta_numeric, PrecisionContext};
use unimass::oracle::{count_automorphisms, enumerate_automorphisms, is_automorphism, mat_mul, GramMatrix};
use unimass::{Rational, Signature, SymbolicValue};

/// Identity with `c` added at (row `i`, column `j`).
fn elementary(d: usize, i: usize, j: usize, c: i64) -> Vec<Vec<i64>> {
    let mut m: Vec<Vec<i64>> = (0..d).map(|r| (0..d).map(|k| i64::from(r == k)).collect()).collect();
    m[i][j] += c;
    m
}

fn base_lattice(which: u8) -> GramMatrix {
    match which {
        0 => GramMatrix::identity(3),
        1 => GramMatrix::identity(4),
        // A2 ⊕ Z
        _ => GramMatrix::new(vec![vec![2, -1, 0], vec![-1, 2, 0], vec![0, 0, 1]]).unwrap(),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn change_of_basis_keeps_count(which in 0u8..3, ops in prop::collection::vec((0usize..4, 0usize..4, prop_oneof![Just(-1i64), Just(1i64)]), 1..4)) {
        let g = base_lattice(which);
        let d = g.dim();
        let mut u: Vec<Vec<i64>> = (0..d).map(|r| (0..d).map(|k| i64::from(r == k)).collect()).collect();
        for (i, j, c) in ops {
            let (i, j) = (i % d, j % d);
            if i != j {
                u = mat_mul(&u, &elementary(d, i, j, c));
            }
        }
        let h = g.transform(&u).unwrap();
        prop_assume!(h.max_diagonal() <= 5);
        prop_assert_eq!(h.determinant(), g.determinant());
        prop_assert_eq!(count_automorphisms(&h).unwrap(), count_automorphisms(&g).unwrap());
    }

    #[test]
    fn eval_refines_with_digits(n in 1u32..8, s in 0u32..4, lo in 10u32..30, extra in 1u32..30) {
        let d = 2 * n + 1 + (s % 2);
        let sig = Signature::new(d - s.min(d / 2), s.min(d / 2)).unwrap();
        let m = mass_odd_unimodular(sig).mass;
        let a: f64 = eval(&m, &PrecisionContext::with_digits(lo).unwrap()).unwrap().parse().unwrap();
        let b: f64 = eval(&m, &PrecisionContext::with_digits(lo + extra).unwrap()).unwrap().parse().unwrap();
        prop_assert!(((a - b) / b).abs() < 1e-9);
    }

    #[test]
    fn pretty_masses_round_trip(d in 3u32..30, s in 0u32..15) {
        let s = s.min(d / 2);
        let m = mass_odd_unimodular(Signature::new(d - s, s).unwrap()).mass;
        prop_assert_eq!(pretty::parse(&m.to_string()).unwrap(), m);
    }

    #[test]
    fn hilbert_square_classes(a in -500i64..500, b in -500i64..500, t in 1i64..20, p in prop::sample::select(vec![2u64, 3, 5, 7, 11, 13])) {
        prop_assume!(a != 0 && b != 0);
        let (qa, qb) = (Rational::from_integer(a.into()), Rational::from_integer(b.into()));
        let scaled = &qa * Rational::from_integer((t * t).into());
        let v = Place::Prime(p);
        prop_assert_eq!(hilbert_symbol(&qa, &qb, v).unwrap(), hilbert_symbol(&scaled, &qb, v).unwrap());
        // (a, 1 - a) = 1 whenever 1 - a ≠ 0
        if a != 1 {
            let one_minus = Rational::from_integer((1 - a).into());
            prop_assert_eq!(hilbert_symbol(&qa, &one_minus, v).unwrap(), Sign::Plus);
        }
    }
}

/// Decimal strings agreeing to all but the last digit.
fn close(a: &str, b: &str) -> bool {
    let (x, y): (f64, f64) = (a.parse().unwrap(), b.parse().unwrap());
    a == b || ((x - y) / y).abs() < 1e-27
}

#[test]
fn closed_forms_up_to_30() {
    let ctx = PrecisionContext::with_digits(30).unwrap();
    for k in 1..=15u32 {
        let exact = eval(&SymbolicValue::pi_power(zeta_even_ratio(k), 2 * i64::from(k)), &ctx).unwrap();
        let numeric = zeta_numeric(2 * k, &ctx).unwrap();
        assert!(close(&exact, &numeric), "zeta({}) {exact} {numeric}", 2 * k);
    }
    for k in 0..=14u32 {
        let exact = eval(&SymbolicValue::pi_power(beta_odd_ratio(k), 2 * i64::from(k) + 1), &ctx).unwrap();
        let numeric = beta_numeric(2 * k + 1, &ctx).unwrap();
        assert!(close(&exact, &numeric), "beta({}) {exact} {numeric}", 2 * k + 1);
    }
}

#[test]
fn automorphisms_form_a_group() {
    let g = GramMatrix::new(vec![vec![2, -1, 0], vec![-1, 2, 0], vec![0, 0, 1]]).unwrap();
    let all = enumerate_automorphisms(&g, 10_000).unwrap().expect("small group");
    assert_eq!(BigInt::from(all.len()), count_automorphisms(&g).unwrap().total);
    let set: HashSet<_> = all.iter().cloned().collect();
    assert_eq!(set.len(), all.len());
    for a in &all {
        assert!(is_automorphism(&g, a));
        for b in &all {
            assert!(set.contains(&mat_mul(a, b)));
        }
    }
}

#[test]
fn routes_agree_past_table_range() {
    for d in 22..=30u32 {
        for s in [0, 1, 2, 3] {
            let sig = Signature::new(d - s, s).unwrap();
            assert_eq!(mass_odd_unimodular(sig).mass, mass_via_parahoric(sig));
        }
    }
}

#[test]
fn mirror_signatures_share_masses() {
    for d in 3..=15u32 {
        for s in 0..=d / 2 {
            let a = mass_odd_unimodular(Signature::new(d - s, s).unwrap()).mass;
            let b = mass_odd_unimodular(Signature::new(s, d - s).unwrap().normalized()).mass;
            assert_eq!(a, b);
            assert!(a.coeff().is_positive());
        }
    }
}
