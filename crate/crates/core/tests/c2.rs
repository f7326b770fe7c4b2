use semiinf::sp4c2::{
    c2_collections, c2_identity_check, c2_lhs, c2_lhs_with, c2_relations, c2_rhs, C2Admissibility,
};

#[test]
fn identity_holds_up_to_three() {
    for m1 in 0..=3 {
        for m2 in 0..=3 {
            let r = c2_identity_check(m1, m2).unwrap();
            assert!(r.holds(), "({m1},{m2}): {} vs {}", r.lhs, r.rhs);
        }
    }
}

#[test]
fn literal_admissibility_breaks_the_identity() {
    assert_eq!(c2_lhs_with(1, 0, C2Admissibility::Literal), c2_rhs(1, 0).unwrap());
    assert_ne!(c2_lhs_with(1, 1, C2Admissibility::Literal), c2_rhs(1, 1).unwrap());
}

#[test]
fn specializations() {
    for m1 in 0..=3u32 {
        for m2 in 0..=3u32 {
            let total = 4u64.pow(m1) * 5u64.pow(m2);
            assert_eq!(c2_lhs(m1, m2).eval_at_one(), total.into());
            assert_eq!(c2_collections(m1, m2).len() as u64, total);
        }
    }
    assert_eq!(c2_lhs(1, 1).q_slice(0).eval_at_one(), 16.into());
}

#[test]
fn fundamental_character_is_weyl_invariant() {
    let ch = c2_lhs(1, 0);
    for (e, c) in ch.terms() {
        let (a, b) = (e.x[0], e.x[1]);
        for (u, v) in [(b, a), (-a, b), (a, -b)] {
            assert_eq!(ch.coeff(e.q, &[u, v]), *c);
        }
    }
}

#[test]
fn relations_are_homogeneous() {
    let rels = c2_relations(3).unwrap();
    assert_eq!(rels.len(), 20);
    assert!(rels.iter().all(|r| r.is_homogeneous()));
}
