use num_bigint::BigInt;
use proptest::prelude::*;
use semiinf::charformula::{local_weyl_character, global_weyl_character, DominantWeight};
use semiinf::charring::{q_multinomial, CharPoly};
use semiinf::columns::{column_less, is_completable, is_completable_closed_form, kac, snake, Column, Side};
use semiinf::fusion::fusion_generating_function;

fn charpoly(n: usize) -> impl Strategy<Value = CharPoly> {
    prop::collection::vec((0u32..4, prop::collection::vec(-2i64..=2, n), -5i64..=5), 0..6)
        .prop_map(move |terms| CharPoly::from_terms(n, terms).unwrap())
}

fn column(max: u32) -> impl Strategy<Value = Column> {
    prop::collection::btree_set(1..=max, 1..=max as usize)
        .prop_map(|s| Column::new(s.into_iter().collect()).unwrap())
}

fn dense_set(n: u32) -> impl Strategy<Value = Column> {
    (0..n, prop::collection::btree_set(n + 1..=2 * n, 0..=n as usize))
        .prop_filter("non-empty", |(r, s)| *r > 0 || !s.is_empty())
        .prop_map(|(r, s)| Column::new((1..=r).chain(s).collect()).unwrap())
}

fn multinomial(m: u32, parts: &[u32]) -> BigInt {
    let fact = |k: u32| (1..=k).fold(BigInt::from(1), |a, v| a * v);
    parts.iter().fold(fact(m), |acc, &p| acc / fact(p))
}

proptest! {
    #[test]
    fn ring_laws(a in charpoly(2), b in charpoly(2), c in charpoly(2)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!((&a * &b).eval_at_one(), a.eval_at_one() * b.eval_at_one());
    }

    #[test]
    fn json_round_trip(a in charpoly(3)) {
        prop_assert_eq!(CharPoly::from_json_str(&a.to_json_string()).unwrap(), a);
    }

    #[test]
    fn q_multinomial_specializes(parts in prop::collection::vec(0u32..4, 1..4)) {
        let m: u32 = parts.iter().sum();
        let p = q_multinomial(m, &parts).unwrap();
        prop_assert!(p.has_nonnegative_coeffs());
        prop_assert_eq!(p.eval_at_one(), multinomial(m, &parts));
        // palindromic
        let c = p.coeffs();
        let rev: Vec<BigInt> = c.iter().rev().cloned().collect();
        prop_assert_eq!(c.to_vec(), rev);
    }

    #[test]
    fn snake_walk_shape(a in column(7), b in column(7)) {
        let (s, t) = if column_less(&b, &a) { (b, a) } else { (a, b) };
        let res = snake(&s, &t).unwrap();
        prop_assert!(res.p_sequence.windows(2).all(|w| w[0] > w[1]));
        prop_assert_eq!(res.k, res.p_sequence.len() - s.len().max(t.len()));
        for (v, side) in res.p_sequence.iter().zip(&res.sides) {
            let col = if *side == Side::Sigma { &s } else { &t };
            prop_assert!(col.contains(*v));
        }
    }

    #[test]
    fn kac_is_symmetric(i in dense_set(4), j in dense_set(4)) {
        prop_assert_eq!(kac(&i, &j, 4).unwrap(), kac(&j, &i, 4).unwrap());
        prop_assert_eq!(kac(&i, &i, 4).unwrap(), 0);
    }

    #[test]
    fn completable_implies_closed_form(i in dense_set(4), a in 1u32..4, c in 5u32..=8) {
        if is_completable(&i, a, c, 4).unwrap() {
            prop_assert!(is_completable_closed_form(&i, a, c, 4).unwrap());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn local_character_dimension(m in prop::collection::vec(0u32..3, 3)) {
        let l = DominantWeight::new(4, m.clone()).unwrap();
        let binom = [4u64, 6, 4];
        let want: u64 = m.iter().zip(binom).map(|(&e, b)| b.pow(e)).product();
        let ch = local_weyl_character(&l);
        prop_assert_eq!(ch.eval_at_one(), BigInt::from(want));
        prop_assert!(ch.has_nonnegative_coeffs());
    }

    #[test]
    fn global_times_pochhammer_is_local(m in prop::collection::vec(0u32..3, 2), bound in 0u32..6) {
        let l = DominantWeight::new(3, m.clone()).unwrap();
        let local = local_weyl_character(&l);
        let global = global_weyl_character(&l, bound);
        let mut back = global.poly().clone();
        for &k in &m {
            for i in 1..=k {
                back = &back - &back.shift(i, &[0, 0, 0]);
            }
        }
        prop_assert_eq!(back.truncate(bound), local.truncate(bound));
    }

    #[test]
    fn fusion_matches_local(m in prop::collection::vec(0u32..3, 2)) {
        let l = DominantWeight::new(3, m).unwrap();
        prop_assert_eq!(fusion_generating_function(&l), local_weyl_character(&l));
    }
}
