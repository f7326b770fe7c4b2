//! Collections of root vectors for `sl_{2n}`, the degree statistic on them, the
//! resulting generating functions, and an explicit evaluation-module check that
//! the associated vectors form a weight basis.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::charformula::DominantWeight;
use crate::charring::{q_multinomial, CharPoly, QPoly};
use crate::columns::{completable_sets, is_dense, kac, Column};
use crate::error::{invalid, Error, Result};
use crate::linalg::rank_over_q;

/// Root vector `f_{pq}` (sends `v_p` to `v_q`), ordered by `q` first, then `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RootLabel {
    p: u32,
    q: u32,
}

impl RootLabel {
    pub fn new(p: u32, q: u32) -> Result<Self> {
        if p == 0 || p >= q {
            return Err(invalid(format!("root label needs 1 <= p < q, got ({p},{q})")));
        }
        Ok(RootLabel { p, q })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// `ε_q - ε_p` in `dim` coordinates.
    pub fn weight(&self, dim: usize) -> Vec<i64> {
        let mut w = vec![0; dim];
        w[self.q as usize - 1] += 1;
        w[self.p as usize - 1] -= 1;
        w
    }
}

impl Ord for RootLabel {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.q, self.p).cmp(&(other.q, other.p))
    }
}

impl PartialOrd for RootLabel {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for RootLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q < 10 {
            write!(f, "f{}{}", self.p, self.q)
        } else {
            write!(f, "f{},{}", self.p, self.q)
        }
    }
}

/// Slot `(k, i)`: the `i`-th copy of the `k`-th fundamental weight.
pub type Slot = (usize, usize);

/// A set of root vectors attached to a slot of level `k` satisfies F1 (`p <= k < q`)
/// and F2 (any two elements are strictly nested).
pub fn satisfies_f_conditions<'a>(k: usize, set: impl IntoIterator<Item = &'a RootLabel>) -> bool {
    let items: Vec<&RootLabel> = set.into_iter().collect();
    let k = k as u32;
    if items.iter().any(|f| !(f.p <= k && k < f.q)) {
        return false;
    }
    for (x, a) in items.iter().enumerate() {
        for b in &items[x + 1..] {
            let nested = (a.p < b.p && b.q < a.q) || (a.p > b.p && b.q > a.q);
            if !nested {
                return false;
            }
        }
    }
    true
}

/// A collection `B = (B_{k,i})` for the weight `λ`, read as an `sl_{2n}` weight.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BCollection {
    n: u32,
    slots: BTreeMap<Slot, BTreeSet<RootLabel>>,
}

impl BCollection {
    /// The collection with every slot of `λ` empty.
    pub fn empty(lambda: &DominantWeight) -> Self {
        let slots = slot_list(lambda).into_iter().map(|s| (s, BTreeSet::new())).collect();
        BCollection {
            n: lambda.n(),
            slots,
        }
    }

    /// Fills the given slots and validates F1, F2 and the ambient range.
    pub fn new(
        lambda: &DominantWeight,
        entries: impl IntoIterator<Item = (Slot, Vec<RootLabel>)>,
    ) -> Result<Self> {
        let mut out = BCollection::empty(lambda);
        let dim = 2 * lambda.n();
        for (slot, labels) in entries {
            let Some(set) = out.slots.get_mut(&slot) else {
                return Err(invalid(format!("slot {slot:?} does not exist for this weight")));
            };
            if let Some(f) = labels.iter().find(|f| f.q > dim) {
                return Err(invalid(format!("{f} is outside 1..{dim}")));
            }
            set.extend(labels);
            if !satisfies_f_conditions(slot.0, set.iter()) {
                return Err(invalid(format!("slot {slot:?} violates F1/F2")));
            }
        }
        Ok(out)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn slots(&self) -> impl Iterator<Item = (Slot, &BTreeSet<RootLabel>)> {
        self.slots.iter().map(|(&s, set)| (s, set))
    }

    pub fn slot(&self, slot: Slot) -> Option<&BTreeSet<RootLabel>> {
        self.slots.get(&slot)
    }

    /// Keeps only the elements strictly below `f`.
    pub fn restrict_below(&self, f: RootLabel) -> BCollection {
        self.filter(|g| g < f)
    }

    /// Keeps only the elements `<= f`.
    pub fn restrict_upto(&self, f: RootLabel) -> BCollection {
        self.filter(|g| g <= f)
    }

    fn filter(&self, keep: impl Fn(RootLabel) -> bool) -> BCollection {
        BCollection {
            n: self.n,
            slots: self
                .slots
                .iter()
                .map(|(&s, set)| (s, set.iter().copied().filter(|&g| keep(g)).collect()))
                .collect(),
        }
    }

    /// The set `J_{k,i}` with `Π f_{pq} v_{ω_k} = ±v_J`, if the product is non-zero.
    pub fn wedge_set(&self, slot: Slot) -> Option<Column> {
        let set = self.slots.get(&slot)?;
        let mut members: BTreeSet<u32> = (1..=slot.0 as u32).collect();
        for f in set {
            if !members.remove(&f.p) || !members.insert(f.q) {
                return None;
            }
        }
        Column::new(members.into_iter().collect()).ok()
    }

    /// `λ + wt(B)` in `2n` ε-coordinates.
    pub fn weight(&self) -> Vec<i64> {
        let dim = 2 * self.n as usize;
        let mut w = vec![0i64; dim];
        for (&(k, _), set) in &self.slots {
            for v in w.iter_mut().take(k) {
                *v += 1;
            }
            for f in set {
                w[f.q as usize - 1] += 1;
                w[f.p as usize - 1] -= 1;
            }
        }
        w
    }

    pub fn is_dense(&self) -> bool {
        self.slots
            .keys()
            .all(|&s| self.wedge_set(s).is_some_and(|j| is_dense(&j, self.n)))
    }

    /// Sum of the degrees of all elements.
    pub fn total_degree(&self) -> u32 {
        self.slots
            .iter()
            .flat_map(|(&s, set)| set.iter().map(move |&f| (s, f)))
            .map(|(s, f)| degree_d(self, f, s).expect("element is present"))
            .sum()
    }
}

impl fmt::Display for BCollection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .slots
            .values()
            .map(|set| {
                let items: Vec<String> = set.iter().map(ToString::to_string).collect();
                format!("{{{}}}", items.join(","))
            })
            .collect();
        write!(f, "({})", parts.join(","))
    }
}

fn slot_list(lambda: &DominantWeight) -> Vec<Slot> {
    (1..lambda.n() as usize)
        .flat_map(|k| (1..=lambda.mult(k) as usize).map(move |i| (k, i)))
        .collect()
}

/// Chain `f_{1,l_1} ... f_{k,l_k}` for a subset of `{n+1..2n}` (entries ascending).
fn chain(subset: &Column) -> Vec<RootLabel> {
    subset
        .entries()
        .iter()
        .rev()
        .enumerate()
        .map(|(j, &l)| RootLabel { p: j as u32 + 1, q: l })
        .collect()
}

/// All collections whose weight lies in `Z_{>=0}<ε_{n+1}, ..., ε_{2n}>`: each slot
/// `(k,i)` carries a chain built from a `k`-subset of `{n+1..2n}`.
pub fn enumerate_collections(lambda: &DominantWeight) -> Vec<BCollection> {
    let n = lambda.n();
    let slots = slot_list(lambda);
    let menus: Vec<Vec<Vec<RootLabel>>> = slots
        .iter()
        .map(|&(k, _)| {
            Column::all_of_size(n, k)
                .iter()
                .map(|c| chain(&Column::new(c.entries().iter().map(|v| v + n).collect()).unwrap()))
                .collect()
        })
        .collect();
    let mut out = vec![BCollection::empty(lambda)];
    for (slot, menu) in slots.iter().zip(&menus) {
        out = out
            .into_iter()
            .flat_map(|b| {
                menu.iter().map(move |labels| {
                    let mut next = b.clone();
                    next.slots.insert(*slot, labels.iter().copied().collect());
                    next
                })
            })
            .collect();
    }
    debug_assert!(out.iter().all(|b| b
        .slots
        .values()
        .flatten()
        .all(|&f| b.restrict_below(f).is_dense())));
    out
}

/// `(q_l, ..., q_1)` for the elements of a nested set listed by increasing `p`;
/// by F2 this is the list of `q` values in increasing order.
fn q_bar(set: &BTreeSet<RootLabel>) -> Vec<u32> {
    let mut qs: Vec<u32> = set.iter().map(|f| f.q).collect();
    qs.sort_unstable();
    qs
}

/// Slots `(k,i)` where the strict `f`-restriction plus `f` satisfies F1 and F2,
/// sorted by `k - |B'_{k,i}|`, then by the `q`-vector of `B'_{k,i}`, then by `i`.
pub fn admissible_pairs(b: &BCollection, f: RootLabel) -> Vec<Slot> {
    let restricted = b.restrict_below(f);
    let mut keyed: Vec<(usize, Vec<u32>, usize, Slot)> = restricted
        .slots
        .iter()
        .filter(|(&(k, _), set)| satisfies_f_conditions(k, set.iter().chain(std::iter::once(&f))))
        .map(|(&(k, i), set)| (k - set.len().min(k), q_bar(set), i, (k, i)))
        .collect();
    keyed.sort();
    keyed.into_iter().map(|(_, _, _, s)| s).collect()
}

/// Number of admissible slots before `slot` that do not contain `f`.
pub fn degree_d(b: &BCollection, f: RootLabel, slot: Slot) -> Result<u32> {
    if !b.slot(slot).is_some_and(|set| set.contains(&f)) {
        return Err(invalid(format!("{f} is not in slot {slot:?}")));
    }
    let order = admissible_pairs(b, f);
    let Some(pos) = order.iter().position(|&s| s == slot) else {
        return Err(Error::Invariant(format!(
            "slot {slot:?} holding {f} is not admissible for it"
        )));
    };
    Ok(order[..pos]
        .iter()
        .filter(|&&s| !b.slot(s).is_some_and(|set| set.contains(&f)))
        .count() as u32)
}

/// `x^{w_0 μ}` for a weight `μ` supported on `ε_{n+1..2n}`: `x_j` carries `μ_{2n+1-j}`.
fn flip_to_x(weight: &[i64], n: usize) -> Vec<i64> {
    debug_assert!(weight[..n].iter().all(|&v| v == 0));
    (1..=n).map(|j| weight[2 * n - j]).collect()
}

/// `Σ_B q^{Σ d} x^{w_0(λ + wt B)}` over [`enumerate_collections`].
pub fn fusion_generating_function(lambda: &DominantWeight) -> CharPoly {
    let n = lambda.n() as usize;
    enumerate_collections(lambda)
        .par_iter()
        .map(|b| CharPoly::monomial(n, b.total_degree(), flip_to_x(&b.weight(), n), 1))
        .reduce(|| CharPoly::zero(n), |a, b| &a + &b)
}

/// Both sides of a character identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub lhs: CharPoly,
    pub rhs: CharPoly,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Compares the generating function of all `(a,c)`-restrictions with the sum over
/// multiplicities on `(a,c)`-completable sets.
pub fn restricted_identity_check(
    lambda: &DominantWeight,
    a: u32,
    c: u32,
) -> Result<IdentityCheck> {
    let n = lambda.n();
    let dim = 2 * n as usize;
    let cut = RootLabel::new(a, c)?;
    if !(a < n && n < c && c <= 2 * n) {
        return Err(invalid(format!("need 1 <= a < n < c <= 2n, got a={a}, c={c}, n={n}")));
    }
    let restricted: BTreeSet<BCollection> = enumerate_collections(lambda)
        .iter()
        .map(|b| b.restrict_upto(cut))
        .collect();
    let lhs = restricted
        .par_iter()
        .map(|b| CharPoly::monomial(dim, b.total_degree(), b.weight(), 1))
        .reduce(|| CharPoly::zero(dim), |x, y| &x + &y);

    let mut sets: Vec<Vec<Column>> = Vec::new();
    for k in 1..n as usize {
        sets.push(if lambda.mult(k) > 0 { completable_sets(k, a, c, n)? } else { Vec::new() });
    }
    let flat: Vec<&Column> = sets.iter().flatten().collect();
    let mut kac_table = vec![vec![0u64; flat.len()]; flat.len()];
    for x in 0..flat.len() {
        for y in x + 1..flat.len() {
            kac_table[x][y] = kac(flat[x], flat[y], n)? as u64;
        }
    }
    let mut rhs = CharPoly::zero(dim);
    let per_level: Vec<Vec<Vec<u32>>> = (1..n as usize)
        .map(|k| compositions(lambda.mult(k), sets[k - 1].len()))
        .collect();
    let mut choice = vec![0usize; per_level.len()];
    loop {
        let rho: Vec<u32> = choice
            .iter()
            .zip(&per_level)
            .flat_map(|(&ch, comps)| comps[ch].iter().copied())
            .collect();
        let mut qdeg = 0u64;
        for x in 0..rho.len() {
            for y in x + 1..rho.len() {
                qdeg += kac_table[x][y] * rho[x] as u64 * rho[y] as u64;
            }
        }
        let mut factor = QPoly::one();
        for (k, (&ch, comps)) in choice.iter().zip(&per_level).enumerate() {
            factor = &factor * &q_multinomial(lambda.mult(k + 1), &comps[ch])?;
        }
        let mut w = vec![0i64; dim];
        for (set, &r) in flat.iter().zip(&rho) {
            for &e in set.entries() {
                w[e as usize - 1] += r as i64;
            }
        }
        let qdeg = u32::try_from(qdeg).map_err(|_| Error::Overflow("q-degree"))?;
        rhs = &rhs + &CharPoly::monomial(dim, qdeg, w, 1).mul_q(&factor);

        let mut level = 0;
        loop {
            if level == choice.len() {
                return Ok(IdentityCheck { lhs, rhs });
            }
            choice[level] += 1;
            if choice[level] < per_level[level].len() {
                break;
            }
            choice[level] = 0;
            level += 1;
        }
    }
}

/// Weak compositions of `total` into `parts` parts (one empty composition when both are 0).
fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 0 {
        return if total == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    let mut cur = vec![0u32; parts];
    fn rec(idx: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if idx + 1 == cur.len() {
            cur[idx] = left;
            out.push(cur.clone());
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

/// Vector in `⊗_{k,i} Λ^k Q^{2n}`; keys are per-slot bitmasks (bit `j-1` for `v_j`).
pub type TensorVector = BTreeMap<Vec<u32>, BigRational>;

/// Tensor product of evaluation modules `V(ω_k)_{ζ_{k,i}}` over `Q`.
#[derive(Debug, Clone)]
pub struct EvaluationState {
    n: u32,
    slots: Vec<Slot>,
    zeta: Vec<BigRational>,
}

impl EvaluationState {
    /// `zeta` is assigned slot by slot in `(k,i)` order and must be pairwise distinct.
    pub fn new(lambda: &DominantWeight, zeta: Vec<BigRational>) -> Result<Self> {
        let slots = slot_list(lambda);
        if zeta.len() != slots.len() {
            return Err(invalid(format!(
                "expected {} evaluation parameters, got {}",
                slots.len(),
                zeta.len()
            )));
        }
        let distinct: BTreeSet<&BigRational> = zeta.iter().collect();
        if distinct.len() != zeta.len() {
            return Err(invalid("evaluation parameters must be pairwise distinct"));
        }
        if 2 * lambda.n() > 32 {
            return Err(invalid("ambient dimension above 32 is not supported"));
        }
        Ok(EvaluationState {
            n: lambda.n(),
            slots,
            zeta,
        })
    }

    /// Parameters `0, 1, 2, ...`.
    pub fn with_default_zeta(lambda: &DominantWeight) -> Self {
        let count = slot_list(lambda).len();
        let zeta = (0..count).map(|v| BigRational::from_integer(v.into())).collect();
        EvaluationState::new(lambda, zeta).expect("default parameters are distinct")
    }

    pub fn zeta(&self) -> &[BigRational] {
        &self.zeta
    }

    /// `⊗ v_{ω_k}`.
    pub fn highest_vector(&self) -> TensorVector {
        let key = self.slots.iter().map(|&(k, _)| (1u32 << k) - 1).collect();
        TensorVector::from([(key, BigRational::one())])
    }

    /// `f ⊗ t^degree`, acting as `Σ_s ζ_s^degree f^{(s)}` (with `0^0 = 1`).
    pub fn apply(&self, f: RootLabel, degree: u32, v: &TensorVector) -> TensorVector {
        let mut out = TensorVector::new();
        let (pbit, qbit) = (1u32 << (f.p - 1), 1u32 << (f.q - 1));
        let between = (qbit - 1) & !((pbit << 1) - 1);
        for (key, coeff) in v {
            for (s, z) in self.zeta.iter().enumerate() {
                let mask = key[s];
                if mask & pbit == 0 || mask & qbit != 0 {
                    continue;
                }
                let scalar = pow(z, degree);
                if scalar.is_zero() {
                    continue;
                }
                let mut term = coeff * scalar;
                if (mask & between).count_ones() % 2 == 1 {
                    term = -term;
                }
                let mut next = key.clone();
                next[s] = mask & !pbit | qbit;
                let slot = out.entry(next).or_insert_with(BigRational::zero);
                *slot += term;
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// `Π(B) v`, the smaller root vectors applied first.
    pub fn fusion_vector(&self, b: &BCollection) -> TensorVector {
        let mut factors: Vec<(RootLabel, u32)> = b
            .slots()
            .flat_map(|(s, set)| set.iter().map(move |&f| (s, f)))
            .map(|(s, f)| (f, degree_d(b, f, s).expect("element is present")))
            .collect();
        factors.sort();
        factors
            .into_iter()
            .fold(self.highest_vector(), |v, (f, d)| self.apply(f, d, &v))
    }

    /// Tuples `(J_{k,i})`, `|J_{k,i}| = k`, of total weight `μ`, as bitmask keys.
    pub fn weight_space_basis(&self, mu: &[i64]) -> Vec<Vec<u32>> {
        let dim = 2 * self.n;
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(self.slots.len());
        let mut left = mu.to_vec();
        fn rec(
            slots: &[Slot],
            dim: u32,
            left: &mut Vec<i64>,
            cur: &mut Vec<u32>,
            out: &mut Vec<Vec<u32>>,
        ) {
            let idx = cur.len();
            if idx == slots.len() {
                if left.iter().all(|&v| v == 0) {
                    out.push(cur.clone());
                }
                return;
            }
            for subset in Column::all_of_size(dim, slots[idx].0) {
                if subset.entries().iter().any(|&e| left[e as usize - 1] <= 0) {
                    continue;
                }
                let mask = subset.entries().iter().fold(0u32, |m, &e| m | 1 << (e - 1));
                for &e in subset.entries() {
                    left[e as usize - 1] -= 1;
                }
                cur.push(mask);
                rec(slots, dim, left, cur, out);
                cur.pop();
                for &e in subset.entries() {
                    left[e as usize - 1] += 1;
                }
            }
        }
        if mu.len() == dim as usize {
            rec(&self.slots, dim, &mut left, &mut cur, &mut out);
        }
        out
    }
}

fn pow(z: &BigRational, e: u32) -> BigRational {
    (0..e).fold(BigRational::one(), |acc, _| acc * z)
}

/// Outcome of the evaluation-module basis check for one weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndependenceReport {
    /// `|B_μ|`.
    pub collections: usize,
    /// Dimension of the `μ`-weight space.
    pub space_dimension: usize,
    /// Rank of `{F(B)}` over `Q`.
    pub rank: usize,
}

impl IndependenceReport {
    pub fn holds(&self) -> bool {
        self.rank == self.collections && self.rank == self.space_dimension
    }
}

/// Whether `{F(B) : B ∈ B_μ}` is a basis of the `μ`-weight space of the evaluation
/// tensor product. `mu` holds the multiplicities of `ε_{n+1}, ..., ε_{2n}`.
pub fn evaluation_independence_check(
    lambda: &DominantWeight,
    mu: &[u32],
    zeta: Option<Vec<BigRational>>,
) -> Result<IndependenceReport> {
    let n = lambda.n() as usize;
    if mu.len() != n {
        return Err(invalid(format!("μ needs {n} multiplicities, got {}", mu.len())));
    }
    let state = match zeta {
        Some(z) => EvaluationState::new(lambda, z)?,
        None => EvaluationState::with_default_zeta(lambda),
    };
    let mut target = vec![0i64; n];
    target.extend(mu.iter().map(|&v| v as i64));
    let members: Vec<BCollection> = enumerate_collections(lambda)
        .into_iter()
        .filter(|b| b.weight() == target)
        .collect();
    let basis = state.weight_space_basis(&target);
    let index: BTreeMap<&Vec<u32>, usize> = basis.iter().enumerate().map(|(i, k)| (k, i)).collect();
    let mut rows = Vec::with_capacity(members.len());
    for b in &members {
        let vec = state.fusion_vector(b);
        let mut row = vec![BigRational::zero(); basis.len()];
        for (key, c) in vec {
            let Some(&col) = index.get(&key) else {
                return Err(Error::Invariant(format!("F({b}) leaves the μ-weight space")));
            };
            row[col] = c;
        }
        rows.push(row);
    }
    Ok(IndependenceReport {
        collections: members.len(),
        space_dimension: basis.len(),
        rank: rank_over_q(rows),
    })
}

/// All `μ` (multiplicities of `ε_{n+1..2n}`) with `B_μ` non-empty, sorted.
pub fn reachable_weights(lambda: &DominantWeight) -> Vec<Vec<u32>> {
    let n = lambda.n() as usize;
    let set: BTreeSet<Vec<u32>> = enumerate_collections(lambda)
        .iter()
        .map(|b| b.weight()[n..].iter().map(|&v| v as u32).collect())
        .collect();
    set.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use crate::charformula::local_weyl_character;

    fn lam(n: u32, m: &[u32]) -> DominantWeight {
        DominantWeight::new(n, m.to_vec()).unwrap()
    }

    fn int(v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    fn f(p: u32, q: u32) -> RootLabel {
        RootLabel::new(p, q).unwrap()
    }

    #[test]
    fn root_order() {
        let mut v = vec![f(1, 4), f(3, 4), f(1, 2), f(2, 3), f(1, 3), f(2, 4)];
        v.sort();
        assert_eq!(v, vec![f(1, 2), f(1, 3), f(2, 3), f(1, 4), f(2, 4), f(3, 4)]);
        assert!(RootLabel::new(2, 2).is_err());
    }

    #[test]
    fn f_conditions() {
        assert!(satisfies_f_conditions(2, &[f(1, 4), f(2, 3)]));
        assert!(!satisfies_f_conditions(2, &[f(1, 3), f(2, 4)]));
        assert!(!satisfies_f_conditions(1, &[f(1, 3), f(1, 4)]));
        assert!(!satisfies_f_conditions(1, &[f(2, 3)]));
    }

    #[test]
    fn collection_counts() {
        assert_eq!(enumerate_collections(&lam(2, &[2])).len(), 4);
        assert_eq!(enumerate_collections(&lam(2, &[1])).len(), 2);
        assert_eq!(enumerate_collections(&lam(3, &[0, 1])).len(), 3);
        assert_eq!(enumerate_collections(&lam(3, &[1, 2])).len(), 27);
    }

    #[test]
    fn admissibility_examples() {
        let l = lam(2, &[2]);
        let b = BCollection::new(&l, [((1, 1), vec![f(1, 3)]), ((1, 2), vec![f(1, 4)])]).unwrap();
        assert_eq!(admissible_pairs(&b, f(1, 4)), vec![(1, 2)]);
        let l = lam(3, &[1, 1]);
        let empty = BCollection::empty(&l);
        assert_eq!(admissible_pairs(&empty, f(1, 4)), vec![(1, 1), (2, 1)]);
    }

    #[test]
    fn degree_examples() {
        let l = lam(2, &[2]);
        let b = BCollection::new(&l, [((1, 1), vec![f(1, 4)]), ((1, 2), vec![f(1, 3)])]).unwrap();
        assert_eq!(degree_d(&b, f(1, 3), (1, 2)).unwrap(), 1);
        assert_eq!(degree_d(&b, f(1, 4), (1, 1)).unwrap(), 0);
        assert!(degree_d(&b, f(1, 3), (1, 1)).is_err());
        let b = BCollection::new(&l, [((1, 1), vec![f(1, 3)]), ((1, 2), vec![f(1, 3)])]).unwrap();
        assert_eq!(degree_d(&b, f(1, 3), (1, 1)).unwrap(), 0);
        assert_eq!(degree_d(&b, f(1, 3), (1, 2)).unwrap(), 0);
    }

    #[test]
    fn wedge_sets_and_weights() {
        let l = lam(3, &[0, 1]);
        let b = BCollection::new(&l, [((2, 1), vec![f(1, 6), f(2, 4)])]).unwrap();
        assert_eq!(b.wedge_set((2, 1)).unwrap().entries(), &[4, 6]);
        assert_eq!(b.weight(), vec![0, 0, 0, 1, 0, 1]);
    }

    #[test]
    fn small_generating_functions() {
        let g = fusion_generating_function(&lam(2, &[2]));
        let want = CharPoly::from_terms(
            2,
            [(0, vec![2, 0], 1), (0, vec![1, 1], 1), (1, vec![1, 1], 1), (0, vec![0, 2], 1)],
        )
        .unwrap();
        assert_eq!(g, want);
        assert_eq!(fusion_generating_function(&lam(3, &[0, 0])), CharPoly::one(3));
        assert_eq!(
            fusion_generating_function(&lam(2, &[1])),
            CharPoly::from_terms(2, [(0, vec![1, 0], 1), (0, vec![0, 1], 1)]).unwrap()
        );
    }

    #[test]
    fn matches_local_character_small() {
        for m in [[1u32, 1], [2, 1], [0, 3], [1, 2]] {
            let l = lam(3, &m);
            assert_eq!(fusion_generating_function(&l), local_weyl_character(&l), "{m:?}");
        }
    }

    #[test]
    fn restricted_identity_small() {
        for (a, c) in [(1, 3), (1, 4)] {
            for m in 0..=2 {
                let r = restricted_identity_check(&lam(2, &[m]), a, c).unwrap();
                assert!(r.holds(), "m={m} (a,c)=({a},{c}): {} vs {}", r.lhs, r.rhs);
            }
        }
        assert!(restricted_identity_check(&lam(2, &[1]), 1, 2).is_err());
    }

    #[test]
    fn evaluation_examples() {
        let l = lam(2, &[2]);
        let rep = evaluation_independence_check(&l, &[1, 1], None).unwrap();
        assert_eq!((rep.collections, rep.space_dimension, rep.rank), (2, 2, 2));
        let rep = evaluation_independence_check(&lam(2, &[1]), &[0, 1], None).unwrap();
        assert!(rep.holds());
        assert_eq!(rep.rank, 1);
        assert!(evaluation_independence_check(&l, &[1, 1], Some(vec![int(0), int(0)])).is_err());
    }

    #[test]
    fn wedge_action_signs() {
        let l = lam(3, &[0, 1]);
        let st = EvaluationState::with_default_zeta(&l);
        // f_{15} on v_1 ∧ v_2 gives v_5 ∧ v_2 = -v_2 ∧ v_5
        let v = st.apply(f(1, 5), 0, &st.highest_vector());
        assert_eq!(v.get(&vec![0b10010]), Some(&int(-1)));
    }
}
