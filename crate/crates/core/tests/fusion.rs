use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use semiinf::charformula::{local_weyl_character, DominantWeight};
use semiinf::fusion::{
    enumerate_collections, evaluation_independence_check, fusion_generating_function,
    reachable_weights, restricted_identity_check,
};

fn weights(n: u32, max_total: u32) -> Vec<DominantWeight> {
    let mut out = Vec::new();
    let len = n as usize - 1;
    let mut m = vec![0u32; len];
    loop {
        if m.iter().sum::<u32>() <= max_total {
            out.push(DominantWeight::new(n, m.clone()).unwrap());
        }
        let mut i = 0;
        loop {
            if i == len {
                return out;
            }
            m[i] += 1;
            if m[i] <= max_total {
                break;
            }
            m[i] = 0;
            i += 1;
        }
    }
}

fn binom(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn generating_function_equals_local_character() {
    for n in 2..=3 {
        for l in weights(n, 3) {
            assert_eq!(fusion_generating_function(&l), local_weyl_character(&l), "{l:?}");
        }
    }
}

#[test]
fn generating_function_equals_local_character_rank_four() {
    for m in [[1u32, 1, 0], [0, 2, 0], [1, 0, 1], [0, 1, 1], [1, 1, 1], [0, 2, 1]] {
        let l = DominantWeight::new(4, m.to_vec()).unwrap();
        assert_eq!(fusion_generating_function(&l), local_weyl_character(&l), "{m:?}");
    }
}

#[test]
fn collection_count_is_product_of_binomials() {
    for n in 2..=4 {
        for l in weights(n, 2) {
            let want: u64 = (1..n as u64).map(|k| binom(n as u64, k).pow(l.mult(k as usize))).product();
            assert_eq!(enumerate_collections(&l).len() as u64, want);
        }
    }
}

#[test]
fn strict_restrictions_are_dense() {
    for l in weights(3, 2) {
        for b in enumerate_collections(&l) {
            for (_, set) in b.slots() {
                for &f in set {
                    assert!(b.restrict_below(f).is_dense(), "{b} below {f}");
                }
            }
        }
    }
}

#[test]
fn restricted_identities_hold() {
    for n in 2..=3u32 {
        for l in weights(n, 2) {
            for a in 1..n {
                for c in n + 1..=2 * n {
                    let r = restricted_identity_check(&l, a, c).unwrap();
                    assert!(r.holds(), "{l:?} ({a},{c}): {} vs {}", r.lhs, r.rhs);
                }
            }
        }
    }
}

#[test]
fn evaluation_vectors_form_a_basis() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for l in weights(2, 3) {
        let slots = l.total() as usize;
        for _ in 0..3 {
            let mut zeta: Vec<BigRational> = Vec::new();
            while zeta.len() < slots {
                let z = BigRational::new(
                    BigInt::from(rng.gen_range(-20i64..=20)),
                    BigInt::from(rng.gen_range(1i64..=5)),
                );
                if !zeta.contains(&z) {
                    zeta.push(z);
                }
            }
            for mu in reachable_weights(&l) {
                let rep = evaluation_independence_check(&l, &mu, Some(zeta.clone())).unwrap();
                assert!(rep.holds(), "{l:?} μ={mu:?}: {rep:?}");
            }
        }
    }
}

#[test]
fn evaluation_basis_rank_three() {
    let l = DominantWeight::new(3, vec![1, 1]).unwrap();
    for mu in reachable_weights(&l) {
        assert!(evaluation_independence_check(&l, &mu, None).unwrap().holds(), "{mu:?}");
    }
}
