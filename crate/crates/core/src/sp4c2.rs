//! Rank-two symplectic case: fusion collections for `sp_4`, their degree
//! statistic and character, the closed character sum, and the quadratic
//! semi-infinite relations among the generators `X_μ(s)`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::charring::{q_multinomial, CharPoly};
use crate::error::{Error, Result};
use crate::fusion::IdentityCheck;
use crate::pluecker::{lift_classical, Label, RelationTemplate};

/// Negative root vectors, listed in increasing order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum C2Root {
    /// `f_{-2ε_1}`
    NegTwoE1,
    /// `f_{-ε_2-ε_1}`
    NegE1NegE2,
    /// `f_{-2ε_2}`
    NegTwoE2,
    /// `f_{-ε_2+ε_1}`
    E1NegE2,
}

impl C2Root {
    pub const ALL: [C2Root; 4] = [
        C2Root::NegTwoE1,
        C2Root::NegE1NegE2,
        C2Root::NegTwoE2,
        C2Root::E1NegE2,
    ];

    pub fn weight(self) -> [i64; 2] {
        match self {
            C2Root::NegTwoE1 => [-2, 0],
            C2Root::NegE1NegE2 => [-1, -1],
            C2Root::NegTwoE2 => [0, -2],
            C2Root::E1NegE2 => [1, -1],
        }
    }
}

impl fmt::Display for C2Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            C2Root::NegTwoE1 => "f(-2e1)",
            C2Root::NegE1NegE2 => "f(-e1-e2)",
            C2Root::NegTwoE2 => "f(-2e2)",
            C2Root::E1NegE2 => "f(e1-e2)",
        };
        f.write_str(s)
    }
}

/// Allowed contents of a slot of level `k` (1 or 2).
pub fn slot_menu(k: usize) -> Vec<Vec<C2Root>> {
    use C2Root::*;
    match k {
        1 => vec![vec![], vec![NegE1NegE2], vec![NegTwoE2], vec![E1NegE2]],
        2 => vec![vec![], vec![NegTwoE1], vec![NegE1NegE2], vec![NegTwoE2], vec![NegTwoE1, NegTwoE2]],
        _ => Vec::new(),
    }
}

/// Highest weight of `V(ω_k)` in ε-coordinates.
fn fundamental_weight(k: usize) -> [i64; 2] {
    if k == 1 {
        [0, 1]
    } else {
        [1, 1]
    }
}

/// Which slots count as admissible for a root.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum C2Admissibility {
    /// Empty restriction, or `f_{-2ε_2}` over `{f_{-2ε_1}}` in a level-2 slot.
    Literal,
    /// As `Literal`, and the slot menu must allow the root next to the restriction.
    #[default]
    MenuRestricted,
}

/// A collection `(B_{k,i})`; slots are `(k, i)` with `k ∈ {1, 2}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct C2Collection {
    slots: BTreeMap<(usize, usize), Vec<C2Root>>,
}

impl C2Collection {
    pub fn slots(&self) -> impl Iterator<Item = ((usize, usize), &[C2Root])> {
        self.slots.iter().map(|(&s, v)| (s, v.as_slice()))
    }

    /// `λ + Σ` root weights, with `λ = m_1 ε_2 + m_2 (ε_1 + ε_2)`.
    pub fn weight(&self) -> [i64; 2] {
        let mut w = [0i64; 2];
        for (&(k, _), roots) in &self.slots {
            let hw = fundamental_weight(k);
            w[0] += hw[0];
            w[1] += hw[1];
            for r in roots {
                let rw = r.weight();
                w[0] += rw[0];
                w[1] += rw[1];
            }
        }
        w
    }

    fn admissible(&self, alpha: C2Root, slot: (usize, usize), rule: C2Admissibility) -> bool {
        let below: Vec<C2Root> = self.slots[&slot].iter().copied().filter(|&g| g < alpha).collect();
        let literal = below.is_empty()
            || (alpha == C2Root::NegTwoE2 && slot.0 == 2 && below == [C2Root::NegTwoE1]);
        match rule {
            C2Admissibility::Literal => literal,
            C2Admissibility::MenuRestricted => {
                literal
                    && slot_menu(slot.0)
                        .iter()
                        .any(|m| m.contains(&alpha) && below.iter().all(|g| m.contains(g)))
            }
        }
    }

    /// Number of admissible slots before `slot` that do not hold `alpha`.
    pub fn degree(&self, alpha: C2Root, slot: (usize, usize), rule: C2Admissibility) -> Result<u32> {
        if !self.slots.get(&slot).is_some_and(|v| v.contains(&alpha)) {
            return Err(crate::error::invalid(format!("{alpha} is not in slot {slot:?}")));
        }
        Ok(self
            .slots
            .keys()
            .filter(|&&other| pair_cmp(other, slot) == Ordering::Less)
            .filter(|&&other| self.admissible(alpha, other, rule))
            .filter(|other| !self.slots[*other].contains(&alpha))
            .count() as u32)
    }

    pub fn total_degree(&self, rule: C2Admissibility) -> u32 {
        self.slots
            .iter()
            .flat_map(|(&s, v)| v.iter().map(move |&a| (s, a)))
            .map(|(s, a)| self.degree(a, s, rule).expect("root is present"))
            .sum()
    }
}

impl fmt::Display for C2Collection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .slots
            .iter()
            .map(|(&(k, i), v)| {
                let items: Vec<String> = v.iter().map(ToString::to_string).collect();
                format!("B{k},{i}={{{}}}", items.join(","))
            })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

/// `(2,1) < ... < (2,m_2) < (1,1) < ... < (1,m_1)`.
fn pair_cmp(a: (usize, usize), b: (usize, usize)) -> Ordering {
    (a.0 == 1, a.1).cmp(&(b.0 == 1, b.1))
}

/// All `4^{m_1} 5^{m_2}` collections.
pub fn c2_collections(m1: u32, m2: u32) -> Vec<C2Collection> {
    let slots: Vec<(usize, usize)> = (1..=m1 as usize)
        .map(|i| (1, i))
        .chain((1..=m2 as usize).map(|i| (2, i)))
        .collect();
    let mut out = vec![C2Collection {
        slots: BTreeMap::new(),
    }];
    for slot in slots {
        let menu = slot_menu(slot.0);
        out = out
            .into_iter()
            .flat_map(|c| {
                menu.iter().map(move |choice| {
                    let mut next = c.clone();
                    next.slots.insert(slot, choice.clone());
                    next
                })
            })
            .collect();
    }
    out
}

/// `Σ_B q^{Σ d} x^{wt B}` under the given admissibility rule.
pub fn c2_lhs_with(m1: u32, m2: u32, rule: C2Admissibility) -> CharPoly {
    c2_collections(m1, m2)
        .par_iter()
        .map(|b| CharPoly::monomial(2, b.total_degree(rule), b.weight().to_vec(), 1))
        .reduce(|| CharPoly::zero(2), |a, b| &a + &b)
}

/// Character of the fusion collections with the default admissibility rule.
pub fn c2_lhs(m1: u32, m2: u32) -> CharPoly {
    c2_lhs_with(m1, m2, C2Admissibility::default())
}

/// Multiplicities on the four short and five long weights.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct C2RVector {
    pub e1: u32,
    pub neg_e1: u32,
    pub e2: u32,
    pub neg_e2: u32,
    pub e1_e2: u32,
    pub e1_neg_e2: u32,
    pub neg_e1_e2: u32,
    pub neg_e1_neg_e2: u32,
    pub zero: u32,
}

impl C2RVector {
    pub fn short(&self) -> [u32; 4] {
        [self.e1, self.neg_e1, self.e2, self.neg_e2]
    }

    pub fn long(&self) -> [u32; 5] {
        [self.e1_e2, self.e1_neg_e2, self.neg_e1_e2, self.neg_e1_neg_e2, self.zero]
    }

    pub fn b(&self) -> u64 {
        let r = |v: u32| v as u64;
        r(self.neg_e1_e2) * r(self.e1_neg_e2)
            + (r(self.e1_e2) + r(self.e1_neg_e2)) * r(self.neg_e1)
            + (r(self.e1_e2) + r(self.neg_e1_e2)) * r(self.neg_e2)
    }

    pub fn varsigma(&self) -> [i64; 2] {
        let r = |v: u32| v as i64;
        [
            r(self.e1) - r(self.neg_e1) + r(self.e1_e2) + r(self.e1_neg_e2)
                - r(self.neg_e1_e2)
                - r(self.neg_e1_neg_e2),
            r(self.e2) - r(self.neg_e2) + r(self.e1_e2) - r(self.e1_neg_e2) + r(self.neg_e1_e2)
                - r(self.neg_e1_neg_e2),
        ]
    }
}

fn splits<const K: usize>(total: u32) -> Vec<[u32; K]> {
    let mut out = Vec::new();
    let mut cur = [0u32; K];
    fn rec<const K: usize>(idx: usize, left: u32, cur: &mut [u32; K], out: &mut Vec<[u32; K]>) {
        if idx + 1 == K {
            cur[idx] = left;
            out.push(*cur);
            return;
        }
        for v in 0..=left {
            cur[idx] = v;
            rec(idx + 1, left - v, cur, out);
        }
    }
    rec(0, total, &mut cur, &mut out);
    out
}

/// All nine-tuples with short part summing to `m_1` and long part to `m_2`.
pub fn c2_rvectors(m1: u32, m2: u32) -> Vec<C2RVector> {
    let mut out = Vec::new();
    for s in splits::<4>(m1) {
        for l in splits::<5>(m2) {
            out.push(C2RVector {
                e1: s[0],
                neg_e1: s[1],
                e2: s[2],
                neg_e2: s[3],
                e1_e2: l[0],
                e1_neg_e2: l[1],
                neg_e1_e2: l[2],
                neg_e1_neg_e2: l[3],
                zero: l[4],
            });
        }
    }
    out
}

/// `Σ_r q^{b(r)} x^{ς(r)} [m_1; r_short]_q [m_2; r_long]_q`.
pub fn c2_rhs(m1: u32, m2: u32) -> Result<CharPoly> {
    let mut acc = CharPoly::zero(2);
    for r in c2_rvectors(m1, m2) {
        let factor = &q_multinomial(m1, &r.short())? * &q_multinomial(m2, &r.long())?;
        let q = u32::try_from(r.b()).map_err(|_| Error::Overflow("q-degree"))?;
        acc = &acc + &CharPoly::monomial(2, q, r.varsigma().to_vec(), 1).mul_q(&factor);
    }
    Ok(acc)
}

pub fn c2_identity_check(m1: u32, m2: u32) -> Result<IdentityCheck> {
    Ok(IdentityCheck {
        lhs: c2_lhs(m1, m2),
        rhs: c2_rhs(m1, m2)?,
    })
}

/// Weight `a ε_1 + b ε_2` labelling a generator `X_μ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct C2Weight {
    pub e1: i64,
    pub e2: i64,
}

impl C2Weight {
    pub const fn new(e1: i64, e2: i64) -> Self {
        C2Weight { e1, e2 }
    }
}

impl fmt::Display for C2Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        for (c, name) in [(self.e1, "e1"), (self.e2, "e2")] {
            match c {
                0 => {}
                1 if s.is_empty() => s.push_str(name),
                1 => s.push_str(&format!("+{name}")),
                -1 => s.push_str(&format!("-{name}")),
                c if c > 0 && !s.is_empty() => s.push_str(&format!("+{c}{name}")),
                c => s.push_str(&format!("{c}{name}")),
            }
        }
        if s.is_empty() {
            s.push('0');
        }
        write!(f, "{{{s}}}")
    }
}

impl Label for C2Weight {
    fn canonical_cmp(&self, other: &Self) -> Ordering {
        (other.e1, other.e2).cmp(&(self.e1, self.e2))
    }

    fn weight(&self) -> BTreeMap<usize, i64> {
        [(1, self.e1), (2, self.e2)].into_iter().filter(|&(_, v)| v != 0).collect()
    }

    fn to_json(&self) -> Value {
        json!([self.e1, self.e2])
    }
}

fn quadratic_c222() -> Vec<(C2Weight, C2Weight, i64)> {
    let w = C2Weight::new;
    vec![(w(1, 1), w(-1, -1), 1), (w(1, -1), w(-1, 1), 1), (w(0, 0), w(0, 0), 1)]
}

fn quadratic_c212() -> Vec<(C2Weight, C2Weight, i64)> {
    let w = C2Weight::new;
    vec![(w(1, 0), w(-1, 1), 1), (w(-1, 0), w(1, 1), 1), (w(0, 1), w(0, 0), 1)]
}

/// Weyl group elements carrying `ε_2` to `-ε_2`, `ε_1` and `-ε_1`.
const WEYL_IMAGES: [fn(C2Weight) -> C2Weight; 3] = [
    |w| C2Weight::new(w.e1, -w.e2),
    |w| C2Weight::new(w.e2, w.e1),
    |w| C2Weight::new(-w.e2, w.e1),
];

/// `s^0..s^{smax}` coefficients of the weight-zero relation, the weight-`ε_2`
/// relation, and the three Weyl images of the latter, in that order.
pub fn c2_relations(smax: usize) -> Result<Vec<RelationTemplate<C2Weight>>> {
    let mut classical = vec![quadratic_c222(), quadratic_c212()];
    for g in WEYL_IMAGES {
        classical.push(quadratic_c212().into_iter().map(|(a, b, c)| (g(a), g(b), c)).collect());
    }
    let mut out = Vec::new();
    for rel in classical {
        out.extend(lift_classical(&rel, smax)?);
    }
    Ok(out)
}
