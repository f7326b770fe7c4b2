//! Quadratic relations among the generators `X_I^{(l)}`: the general and snake
//! families, arc lifts of classical relations, their degenerations, and the
//! monomial order used to pick leading terms.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hash;

use serde_json::{json, Value};

use crate::columns::{column_less, snake, Column, Side};
use crate::error::{invalid, Error, Result};

/// Index set of a generator. The sl_n case uses [`Column`].
pub trait Label: Clone + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync {
    /// Total order used to canonicalize term keys.
    fn canonical_cmp(&self, other: &Self) -> Ordering;
    /// Weight as a sparse coordinate vector.
    fn weight(&self) -> BTreeMap<usize, i64>;
    fn to_json(&self) -> Value;
}

impl Label for Column {
    fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.entries().cmp(other.entries())
    }

    fn weight(&self) -> BTreeMap<usize, i64> {
        self.entries().iter().map(|&e| (e as usize, 1)).collect()
    }

    fn to_json(&self) -> Value {
        json!(self.entries())
    }
}

/// Generator `X_label^{(level)}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct XVar<L: Label> {
    pub label: L,
    pub level: u32,
}

impl<L: Label> XVar<L> {
    pub fn new(label: L, level: u32) -> Self {
        XVar { label, level }
    }
}

impl<L: Label> Ord for XVar<L> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.label
            .canonical_cmp(&other.label)
            .then(self.level.cmp(&other.level))
    }
}

impl<L: Label> PartialOrd for XVar<L> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<L: Label> fmt::Display for XVar<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X_{}^({})", self.label, self.level)
    }
}

/// Sorts a tuple of distinct indices, returning the column and the permutation
/// sign; a repeated index gives `None` (the generator vanishes).
pub fn normalize_index(tuple: &[u32]) -> Result<Option<(Column, i64)>> {
    let mut v = tuple.to_vec();
    let sign = permutation_sign_to_sorted(&v);
    v.sort_unstable();
    if v.windows(2).any(|w| w[0] == w[1]) {
        return Ok(None);
    }
    Ok(Some((Column::new(v)?, sign)))
}

fn permutation_sign_to_sorted(v: &[u32]) -> i64 {
    let mut inversions = 0usize;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if v[i] > v[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Provenance data attached to sl_n relations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationMeta {
    pub sigma: Vec<u32>,
    pub tau: Vec<u32>,
    pub pset: Vec<u32>,
    pub a: usize,
    pub kprime: usize,
    pub s_power: usize,
}

/// Integer combination of quadratic monomials `X_i^{(li)} X_j^{(lj)}`.
///
/// Keys are stored with the smaller variable first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationTemplate<L: Label> {
    terms: BTreeMap<(XVar<L>, XVar<L>), i64>,
    pub meta: Option<RelationMeta>,
}

impl<L: Label> Default for RelationTemplate<L> {
    fn default() -> Self {
        RelationTemplate {
            terms: BTreeMap::new(),
            meta: None,
        }
    }
}

impl<L: Label> RelationTemplate<L> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, a: XVar<L>, b: XVar<L>, c: i64) -> Result<()> {
        if c == 0 {
            return Ok(());
        }
        let key = if a <= b { (a, b) } else { (b, a) };
        let entry = self.terms.entry(key.clone()).or_insert(0);
        *entry = entry
            .checked_add(c)
            .ok_or(Error::Overflow("relation coefficient"))?;
        if *entry == 0 {
            self.terms.remove(&key);
        }
        Ok(())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&XVar<L>, &XVar<L>, i64)> {
        self.terms.iter().map(|((a, b), &c)| (a, b, c))
    }

    pub fn coeff(&self, a: &XVar<L>, b: &XVar<L>) -> i64 {
        let key = if a <= b {
            (a.clone(), b.clone())
        } else {
            (b.clone(), a.clone())
        };
        self.terms.get(&key).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_level(&self) -> u32 {
        self.terms
            .keys()
            .map(|(a, b)| a.level.max(b.level))
            .max()
            .unwrap_or(0)
    }

    /// Same x-weight and same total level on every term.
    pub fn is_homogeneous(&self) -> bool {
        let mut sig = None;
        for (a, b) in self.terms.keys() {
            let mut w = a.label.weight();
            for (k, v) in b.label.weight() {
                *w.entry(k).or_insert(0) += v;
            }
            w.retain(|_, v| *v != 0);
            let key = (w, a.level + b.level);
            match &sig {
                None => sig = Some(key),
                Some(s) if *s != key => return false,
                _ => {}
            }
        }
        true
    }

    /// Multiplies all coefficients by `c`.
    pub fn scaled(&self, c: i64) -> Result<Self> {
        let mut out = RelationTemplate {
            terms: BTreeMap::new(),
            meta: self.meta.clone(),
        };
        for ((a, b), &v) in &self.terms {
            let nv = v.checked_mul(c).ok_or(Error::Overflow("relation scaling"))?;
            out.add(a.clone(), b.clone(), nv)?;
        }
        Ok(out)
    }

    /// Keeps only the terms selected by `keep`.
    pub fn filtered(&self, keep: impl Fn(&XVar<L>, &XVar<L>) -> bool) -> Self {
        RelationTemplate {
            terms: self
                .terms
                .iter()
                .filter(|((a, b), _)| keep(a, b))
                .map(|(k, &v)| (k.clone(), v))
                .collect(),
            meta: self.meta.clone(),
        }
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|((a, b), c)| {
                json!({
                    "i": a.label.to_json(),
                    "li": a.level,
                    "j": b.label.to_json(),
                    "lj": b.level,
                    "c": c,
                })
            })
            .collect();
        json!({ "terms": terms })
    }
}

impl<L: Label> fmt::Display for RelationTemplate<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, ((a, b), &c)) in self.terms.iter().enumerate() {
            let mag = c.unsigned_abs();
            let body = if mag == 1 {
                format!("{a}*{b}")
            } else {
                format!("{mag}*{a}*{b}")
            };
            match (idx, c < 0) {
                (0, true) => write!(f, "-{body}")?,
                (0, false) => write!(f, "{body}")?,
                (_, true) => write!(f, " - {body}")?,
                (_, false) => write!(f, " + {body}")?,
            }
        }
        Ok(())
    }
}

/// `(i+k')! / i!` as a checked integer.
fn falling_factor(i: u32, kprime: u32) -> Result<i64> {
    let mut acc: i64 = 1;
    for t in i + 1..=i + kprime {
        acc = acc
            .checked_mul(t as i64)
            .ok_or(Error::Overflow("derivative coefficient"))?;
    }
    Ok(acc)
}

/// Adds the `s^m` coefficient of `c · ∂^{k'} X_first(s) · X_second(s)`.
fn add_series_product<L: Label>(
    rel: &mut RelationTemplate<L>,
    first: &L,
    second: &L,
    c: i64,
    kprime: u32,
    m: u32,
) -> Result<()> {
    for i in 0..=m {
        let coeff = c
            .checked_mul(falling_factor(i, kprime)?)
            .ok_or(Error::Overflow("relation coefficient"))?;
        rel.add(
            XVar::new(first.clone(), i + kprime),
            XVar::new(second.clone(), m - i),
            coeff,
        )?;
    }
    Ok(())
}

/// The index set `P` of a relation: distinct values, each tagged with the
/// column it is drawn from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PSet {
    entries: Vec<(u32, Side)>,
}

impl PSet {
    pub fn new(sigma: &Column, tau: &Column, entries: Vec<(u32, Side)>) -> Result<Self> {
        let mut seen = std::collections::BTreeSet::new();
        for &(v, side) in &entries {
            if !seen.insert(v) {
                return Err(invalid(format!("P repeats the value {v}")));
            }
            let ok = match side {
                Side::Sigma => sigma.contains(v),
                Side::Tau => tau.contains(v),
            };
            if !ok {
                return Err(invalid(format!("{v} is not an entry of the {side:?} column")));
            }
        }
        Ok(PSet { entries })
    }

    /// Assigns sides to bare values: a value in only one column goes there,
    /// and values in both fill the σ side until it has `a` elements.
    pub fn infer(sigma: &Column, tau: &Column, values: &[u32], a: usize) -> Result<Self> {
        let forced_sigma = values
            .iter()
            .filter(|&&v| sigma.contains(v) && !tau.contains(v))
            .count();
        let mut sigma_count = forced_sigma;
        let mut entries = Vec::with_capacity(values.len());
        for &v in values {
            let side = match (sigma.contains(v), tau.contains(v)) {
                (true, false) => Side::Sigma,
                (false, true) => Side::Tau,
                (true, true) if sigma_count < a => {
                    sigma_count += 1;
                    Side::Sigma
                }
                (true, true) => Side::Tau,
                (false, false) => {
                    return Err(invalid(format!("{v} is in neither column")));
                }
            };
            entries.push((v, side));
        }
        let pset = PSet::new(sigma, tau, entries)?;
        if pset.count(Side::Sigma) != a {
            return Err(invalid(format!(
                "cannot draw {a} elements of P from the first column"
            )));
        }
        Ok(pset)
    }

    pub fn from_snake(sigma: &Column, tau: &Column) -> Result<Self> {
        let res = snake(sigma, tau)?;
        PSet::new(
            sigma,
            tau,
            res.p_sequence.into_iter().zip(res.sides).collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn count(&self, side: Side) -> usize {
        self.entries.iter().filter(|(_, s)| *s == side).count()
    }

    pub fn values(&self) -> Vec<u32> {
        self.entries.iter().map(|&(v, _)| v).collect()
    }

    fn side_values(&self, side: Side) -> Vec<u32> {
        let mut v: Vec<u32> = self
            .entries
            .iter()
            .filter(|(_, s)| *s == side)
            .map(|&(v, _)| v)
            .collect();
        v.sort_unstable();
        v
    }

    fn rest(&self, col: &Column, side: Side) -> Vec<u32> {
        let used = self.side_values(side);
        col.entries()
            .iter()
            .copied()
            .filter(|v| used.binary_search(v).is_err())
            .collect()
    }
}

/// `η1 = (σ∖P, sorted A)`, `η2 = (τ∖P, sorted P∖A)` and the sign of the shuffle
/// taking `(A, P∖A)` to `(σ-side of P, τ-side of P)`.
pub fn build_eta(
    sigma: &Column,
    tau: &Column,
    pset: &PSet,
    subset: &[u32],
) -> Result<(Vec<u32>, Vec<u32>, i64)> {
    let mut a_sorted = subset.to_vec();
    a_sorted.sort_unstable();
    let values = pset.values();
    if a_sorted.windows(2).any(|w| w[0] == w[1]) || a_sorted.iter().any(|v| !values.contains(v)) {
        return Err(invalid(format!("{subset:?} is not a subset of P")));
    }
    let mut complement: Vec<u32> = values
        .iter()
        .copied()
        .filter(|v| a_sorted.binary_search(v).is_err())
        .collect();
    complement.sort_unstable();

    let mut target = pset.side_values(Side::Sigma);
    target.extend(pset.side_values(Side::Tau));
    let source: Vec<u32> = a_sorted.iter().chain(&complement).copied().collect();
    // position of each source element in the target tuple
    let positions: Vec<u32> = source
        .iter()
        .map(|v| target.iter().position(|t| t == v).expect("same value set") as u32)
        .collect();
    let sign = permutation_sign_to_sorted(&positions);

    let mut eta1 = pset.rest(sigma, Side::Sigma);
    eta1.extend(&a_sorted);
    let mut eta2 = pset.rest(tau, Side::Tau);
    eta2.extend(&complement);
    Ok((eta1, eta2, sign))
}

fn subsets_of_size(values: &[u32], size: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    fn rec(values: &[u32], size: usize, start: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in start..values.len() {
            cur.push(values[i]);
            rec(values, size, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(values, size, 0, &mut Vec::new(), &mut out);
    out
}

/// Classical part: the signed list of `(η1, η2)` index pairs, normalized.
fn eta_terms(sigma: &Column, tau: &Column, pset: &PSet) -> Result<Vec<(Column, Column, i64)>> {
    let a = pset.count(Side::Sigma);
    let mut values = pset.values();
    values.sort_unstable();
    let mut out = Vec::new();
    for subset in subsets_of_size(&values, a) {
        let (e1, e2, sign) = build_eta(sigma, tau, pset, &subset)?;
        let (Some((c1, s1)), Some((c2, s2))) = (normalize_index(&e1)?, normalize_index(&e2)?)
        else {
            continue;
        };
        out.push((c1, c2, sign * s1 * s2));
    }
    Ok(out)
}

/// `k = |P| - max(|σ|, |τ|)`.
pub fn relation_k(sigma: &Column, tau: &Column, pset: &PSet) -> Result<usize> {
    let longest = sigma.len().max(tau.len());
    pset.len()
        .checked_sub(longest)
        .ok_or_else(|| invalid(format!("|P| = {} is below {longest}", pset.len())))
}

/// The `s^0..s^smax` coefficients of `Σ_A ± ∂^{k'} X_{η1}(s) X_{η2}(s)`.
pub fn general_relations(
    sigma: &Column,
    tau: &Column,
    pset: &PSet,
    kprime: usize,
    smax: usize,
) -> Result<Vec<RelationTemplate<Column>>> {
    let k = relation_k(sigma, tau, pset)?;
    if kprime >= k {
        return Err(invalid(format!("k' = {kprime} must be below k = {k}")));
    }
    let classical = eta_terms(sigma, tau, pset)?;
    let mut out = Vec::new();
    for m in 0..=smax {
        let mut rel = RelationTemplate::new();
        for (c1, c2, c) in &classical {
            add_series_product(&mut rel, c1, c2, *c, kprime as u32, m as u32)?;
        }
        if rel.is_empty() {
            continue;
        }
        rel.meta = Some(RelationMeta {
            sigma: sigma.entries().to_vec(),
            tau: tau.entries().to_vec(),
            pset: pset.values(),
            a: pset.count(Side::Sigma),
            kprime,
            s_power: m,
        });
        out.push(rel);
    }
    Ok(out)
}

/// All relations with `P = P(σ, τ)` for `k' < k(σ, τ)`; empty when `k = 0`.
pub fn snake_relations(
    sigma: &Column,
    tau: &Column,
    smax: usize,
) -> Result<Vec<RelationTemplate<Column>>> {
    let k = snake(sigma, tau)?.k;
    let pset = PSet::from_snake(sigma, tau)?;
    let mut out = Vec::new();
    for kprime in 0..k {
        out.extend(general_relations(sigma, tau, &pset, kprime, smax)?);
    }
    Ok(out)
}

/// Every index set `P` drawn from the entries of `σ` and `τ` (a value present in
/// both may be taken from either column, not both) with `|P| > max(|σ|, |τ|)`.
pub fn all_psets(sigma: &Column, tau: &Column) -> Vec<PSet> {
    let slots: Vec<(u32, Side)> = sigma
        .entries()
        .iter()
        .map(|&v| (v, Side::Sigma))
        .chain(tau.entries().iter().map(|&v| (v, Side::Tau)))
        .collect();
    let longest = sigma.len().max(tau.len());
    let mut out = Vec::new();
    for mask in 0u64..(1 << slots.len()) {
        if mask.count_ones() as usize <= longest {
            continue;
        }
        let picked: Vec<(u32, Side)> = slots
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        if let Ok(p) = PSet::new(sigma, tau, picked) {
            out.push(p);
        }
    }
    out
}

/// Replaces each `X_I` of a classical quadratic relation by `X_I(s)` and returns
/// the non-zero `s^0..s^smax` coefficients.
pub fn lift_classical<L: Label>(
    classical: &[(L, L, i64)],
    smax: usize,
) -> Result<Vec<RelationTemplate<L>>> {
    lift_with_derivative(classical, 0, smax)
}

/// As [`lift_classical`] with `∂^{k'}` applied to the first factor of each term.
pub fn lift_with_derivative<L: Label>(
    classical: &[(L, L, i64)],
    kprime: usize,
    smax: usize,
) -> Result<Vec<RelationTemplate<L>>> {
    let mut out = Vec::new();
    for m in 0..=smax {
        let mut rel = RelationTemplate::new();
        for (a, b, c) in classical {
            add_series_product(&mut rel, a, b, *c, kprime as u32, m as u32)?;
        }
        if !rel.is_empty() {
            out.push(rel);
        }
    }
    Ok(out)
}

/// The `s^m` coefficients of `∂^{k'} X_τ(s) · X_σ(s)`.
pub fn degenerate_relation(
    sigma: &Column,
    tau: &Column,
    kprime: usize,
    smax: usize,
) -> Result<Vec<RelationTemplate<Column>>> {
    let k = snake(sigma, tau)?.k;
    if kprime >= k {
        return Err(invalid(format!("k' = {kprime} must be below k(σ,τ) = {k}")));
    }
    let mut out = Vec::new();
    for m in 0..=smax {
        let mut rel = RelationTemplate::new();
        add_series_product(&mut rel, tau, sigma, 1, kprime as u32, m as u32)?;
        rel.meta = Some(RelationMeta {
            sigma: sigma.entries().to_vec(),
            tau: tau.entries().to_vec(),
            pset: Vec::new(),
            a: 0,
            kprime,
            s_power: m,
        });
        out.push(rel);
    }
    Ok(out)
}

/// Outcome of comparing two monomials; levels are ignored.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonomialOrder {
    Less,
    Greater,
    EqualClass,
}

/// Direction of the final squared-difference tie-break.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SdDirection {
    /// Smaller `sd` is greater.
    #[default]
    SmallerIsGreater,
    /// Larger `sd` is greater.
    LargerIsGreater,
}

/// Value standing in for the missing entries of shorter columns in `sd`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SdPadding {
    #[default]
    Zero,
    /// A value above every entry, like the `2n+1` filler of the completable sets.
    AboveAll,
}

/// Options of the monomial order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct OrderOptions {
    pub direction: SdDirection,
    pub padding: SdPadding,
}

impl OrderOptions {
    pub fn new(direction: SdDirection, padding: SdPadding) -> Self {
        OrderOptions { direction, padding }
    }
}

fn padded_columns(u: &[&Column], width: usize, pad: i64) -> Vec<Vec<i64>> {
    u.iter()
        .map(|c| {
            let mut v: Vec<i64> = c.entries().iter().map(|&e| e as i64).collect();
            v.resize(width, pad);
            v
        })
        .collect()
}

fn s_vector(cols: &[Vec<i64>], width: usize) -> Vec<i64> {
    (0..width)
        .rev()
        .map(|j| cols.iter().map(|c| c[j]).sum())
        .collect()
}

/// Squared differences for index pairs `(L-1,L), (L-2,L-1), (L-2,L), (L-3,L-2), ...`.
fn sd_vector(cols: &[Vec<i64>], width: usize) -> Vec<i64> {
    let mut out = Vec::new();
    for lower in (0..width.saturating_sub(1)).rev() {
        for upper in lower + 1..width {
            out.push(
                cols.iter()
                    .map(|c| (c[upper] - c[lower]) * (c[upper] - c[lower]))
                    .sum(),
            );
        }
    }
    out
}

fn sorted_by_length(u: &[Column]) -> Vec<&Column> {
    let mut v: Vec<&Column> = u.iter().collect();
    v.sort_by(|a, b| b.len().cmp(&a.len()));
    v
}

/// Compares `u1` against `u2`: number of factors, then length vectors (the
/// larger one is smaller), then `s`, then `sd`.
pub fn compare_monomials(u1: &[Column], u2: &[Column], opts: OrderOptions) -> MonomialOrder {
    use MonomialOrder::*;
    let to_order = |o: Ordering| match o {
        Ordering::Less => Less,
        Ordering::Greater => Greater,
        Ordering::Equal => EqualClass,
    };
    if u1.len() != u2.len() {
        return to_order(u1.len().cmp(&u2.len()));
    }
    let (a, b) = (sorted_by_length(u1), sorted_by_length(u2));
    let la: Vec<usize> = a.iter().map(|c| c.len()).collect();
    let lb: Vec<usize> = b.iter().map(|c| c.len()).collect();
    if la != lb {
        return to_order(lb.cmp(&la));
    }
    let width = la.first().copied().unwrap_or(0);
    let (za, zb) = (padded_columns(&a, width, 0), padded_columns(&b, width, 0));
    let (sa, sb) = (s_vector(&za, width), s_vector(&zb, width));
    if sa != sb {
        return to_order(sa.cmp(&sb));
    }
    let pad = match opts.padding {
        SdPadding::Zero => 0,
        SdPadding::AboveAll => {
            1 + a
                .iter()
                .chain(&b)
                .map(|c| c.max_entry() as i64)
                .max()
                .unwrap_or(0)
        }
    };
    let (ca, cb) = (padded_columns(&a, width, pad), padded_columns(&b, width, pad));
    let (da, db) = (sd_vector(&ca, width), sd_vector(&cb, width));
    match opts.direction {
        SdDirection::SmallerIsGreater => to_order(db.cmp(&da)),
        SdDirection::LargerIsGreater => to_order(da.cmp(&db)),
    }
}

/// A term of a snake relation that fails to lie strictly below `X_σ X_τ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeadingTermViolation {
    pub sigma: Column,
    pub tau: Column,
    pub term: (Column, Column),
    pub found: MonomialOrder,
}

/// Checks every snake relation (`s^0` coefficient, all `k'`) for `n`: terms on
/// `{σ, τ}` must tie with `X_σ X_τ` and all others must be smaller.
/// Returns the number of terms inspected and the violations.
pub fn leading_term_violations(n: u32, opts: OrderOptions) -> (usize, Vec<LeadingTermViolation>) {
    let mut inspected = 0;
    let mut bad = Vec::new();
    for (s, t) in snake_pairs(n) {
        let top = [s.clone(), t.clone()];
        for rel in snake_relations(&s, &t, 0).expect("pair is ordered") {
            for (a, b, _) in rel.terms() {
                inspected += 1;
                let on_top = (a.label == s && b.label == t) || (a.label == t && b.label == s);
                let found = compare_monomials(&[a.label.clone(), b.label.clone()], &top, opts);
                let want = if on_top {
                    MonomialOrder::EqualClass
                } else {
                    MonomialOrder::Less
                };
                if found != want {
                    bad.push(LeadingTermViolation {
                        sigma: s.clone(),
                        tau: t.clone(),
                        term: (a.label.clone(), b.label.clone()),
                        found,
                    });
                }
            }
        }
    }
    (inspected, bad)
}

/// Index pairs `(σ, τ)` with `σ < τ` and `k(σ, τ) >= 1` among proper subsets of `{1..n}`.
pub fn snake_pairs(n: u32) -> Vec<(Column, Column)> {
    let cols = Column::all_proper(n);
    let mut out = Vec::new();
    for s in &cols {
        for t in &cols {
            if column_less(s, t) && snake(s, t).map(|r| r.k).unwrap_or(0) >= 1 {
                out.push((s.clone(), t.clone()));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn col(v: &[u32]) -> Column {
        Column::new(v.to_vec()).unwrap()
    }

    fn x(v: &[u32], l: u32) -> XVar<Column> {
        XVar::new(col(v), l)
    }

    #[test]
    fn normalization_signs() {
        assert_eq!(normalize_index(&[2, 1]).unwrap(), Some((col(&[1, 2]), -1)));
        assert_eq!(normalize_index(&[3, 1, 2]).unwrap(), Some((col(&[1, 2, 3]), 1)));
        assert_eq!(normalize_index(&[1, 3, 1]).unwrap(), None);
    }

    #[test]
    fn eta_examples() {
        let s = col(&[1, 2]);
        let t = col(&[3, 4, 5]);
        let p = PSet::infer(&s, &t, &[1, 2, 3, 4, 5], 2).unwrap();
        assert_eq!(build_eta(&s, &t, &p, &[1, 2]).unwrap(), (vec![1, 2], vec![3, 4, 5], 1));
        assert_eq!(build_eta(&s, &t, &p, &[1, 3]).unwrap(), (vec![1, 3], vec![2, 4, 5], -1));

        let s = col(&[2, 3]);
        let t = col(&[1]);
        let p = PSet::from_snake(&s, &t).unwrap();
        let (e1, e2, _) = build_eta(&s, &t, &p, &[2, 3]).unwrap();
        assert_eq!((e1, e2), (vec![2, 3], vec![1]));
        assert!(build_eta(&s, &t, &p, &[4]).is_err());
    }

    #[test]
    fn pset_validation() {
        let s = col(&[1, 2]);
        let t = col(&[2, 3]);
        assert!(PSet::infer(&s, &t, &[1, 4], 1).is_err());
        let p = PSet::infer(&s, &t, &[1, 2, 3], 1).unwrap();
        assert_eq!(p.count(Side::Sigma), 1);
        let p = PSet::infer(&s, &t, &[2, 1, 3], 2).unwrap();
        assert_eq!(p.count(Side::Tau), 1);
        assert!(PSet::new(&s, &t, vec![(3, Side::Sigma)]).is_err());
    }

    #[test]
    fn ten_term_relation() {
        let s = col(&[1, 2]);
        let t = col(&[3, 4, 5]);
        let p = PSet::infer(&s, &t, &[1, 2, 3, 4, 5], 2).unwrap();
        let rels = general_relations(&s, &t, &p, 1, 0).unwrap();
        assert_eq!(rels.len(), 1);
        let r = &rels[0];
        assert_eq!(r.len(), 10);
        assert!(r.terms().all(|(_, _, c)| c.abs() == 1));
        assert!(r.terms().all(|(a, b, _)| a.level + b.level == 1));
        let lead = r.coeff(&x(&[1, 2], 1), &x(&[3, 4, 5], 0));
        assert_eq!(lead.abs(), 1);
        assert_eq!(r.coeff(&x(&[1, 3], 1), &x(&[2, 4, 5], 0)), -lead);
        assert_eq!(r.coeff(&x(&[4, 5], 1), &x(&[1, 2, 3], 0)).abs(), 1);
        assert_eq!(r.coeff(&x(&[1, 2], 0), &x(&[3, 4, 5], 1)), 0);
        assert!(r.is_homogeneous());
    }

    #[test]
    fn kprime_range_checked() {
        let s = col(&[1, 2]);
        let t = col(&[3, 4, 5]);
        let p = PSet::infer(&s, &t, &[1, 2, 3, 4, 5], 2).unwrap();
        assert!(general_relations(&s, &t, &p, 2, 0).is_err());
        assert!(degenerate_relation(&col(&[2, 3]), &col(&[1]), 1, 0).is_err());
    }

    #[test]
    fn snake_relation_examples() {
        let rels = snake_relations(&col(&[2, 3]), &col(&[1]), 1).unwrap();
        assert_eq!(rels.len(), 2);
        let r0 = &rels[0];
        assert_eq!(r0.len(), 3);
        let a = r0.coeff(&x(&[1], 0), &x(&[2, 3], 0));
        let b = r0.coeff(&x(&[2], 0), &x(&[1, 3], 0));
        let c = r0.coeff(&x(&[3], 0), &x(&[1, 2], 0));
        assert_eq!((a.abs(), b, c), (1, -a, a));
        assert_eq!(rels[1].len(), 6);

        assert!(snake_relations(&col(&[1, 2]), &col(&[1, 3]), 2).unwrap().is_empty());
        let rels = snake_relations(&col(&[3, 4, 5]), &col(&[1, 2]), 0).unwrap();
        assert_eq!(rels.len(), 1);
        assert_eq!(rels[0].meta.as_ref().unwrap().pset, vec![5, 4, 2, 1]);
    }

    #[test]
    fn lift_examples() {
        let classical = vec![
            (col(&[1, 2]), col(&[3, 4]), 1),
            (col(&[1, 3]), col(&[2, 4]), -1),
            (col(&[1, 4]), col(&[2, 3]), 1),
        ];
        let lifted = lift_classical(&classical, 2).unwrap();
        assert_eq!(lifted.len(), 3);
        assert_eq!(lifted[0].len(), 3);
        assert_eq!(lifted[1].len(), 6);
        assert_eq!(lifted[1].coeff(&x(&[1, 2], 1), &x(&[3, 4], 0)), 1);
        assert_eq!(lifted[1].coeff(&x(&[1, 2], 0), &x(&[3, 4], 1)), 1);
        assert!(lift_classical::<Column>(&[], 3).unwrap().is_empty());
    }

    #[test]
    fn degenerate_examples() {
        let s = col(&[2, 3]);
        let t = col(&[1]);
        let rels = degenerate_relation(&s, &t, 0, 1).unwrap();
        assert_eq!(rels[0].to_string(), "X_1^(0)*X_23^(0)");
        assert_eq!(rels[1].to_string(), "X_1^(0)*X_23^(1) + X_1^(1)*X_23^(0)");
    }

    #[test]
    fn degenerate_with_derivative_factors() {
        // k(σ,τ) = 2 for this pair
        let s = col(&[1, 3, 6, 7]);
        let t = col(&[2, 4, 5, 8]);
        let rels = degenerate_relation(&s, &t, 1, 2).unwrap();
        let r = &rels[2];
        assert_eq!(r.coeff(&x(&t.entries().to_vec(), 1), &x(&s.entries().to_vec(), 2)), 1);
        assert_eq!(r.coeff(&x(&t.entries().to_vec(), 2), &x(&s.entries().to_vec(), 1)), 2);
        assert_eq!(r.coeff(&x(&t.entries().to_vec(), 3), &x(&s.entries().to_vec(), 0)), 3);
    }

    #[test]
    fn order_examples() {
        let ord = OrderOptions::default();
        let u1 = [col(&[2, 3]), col(&[1])];
        let u2 = [col(&[1, 2]), col(&[3])];
        assert_eq!(compare_monomials(&u1, &u2, ord), MonomialOrder::Greater);
        assert_eq!(compare_monomials(&u2, &u1, ord), MonomialOrder::Less);
        let u3 = [col(&[1, 3]), col(&[2])];
        assert_eq!(compare_monomials(&u1, &u3, ord), MonomialOrder::Greater);
        assert_eq!(
            compare_monomials(&u1, &u3, OrderOptions::new(SdDirection::LargerIsGreater, SdPadding::Zero)),
            MonomialOrder::Less
        );
        assert_eq!(compare_monomials(&u1, &u1, ord), MonomialOrder::EqualClass);
        let three = [col(&[1]), col(&[2]), col(&[3])];
        assert_eq!(compare_monomials(&three, &u1, ord), MonomialOrder::Greater);
        let longer = [col(&[1, 2, 3]), col(&[4])];
        let even = [col(&[1, 2]), col(&[3, 4])];
        assert_eq!(compare_monomials(&longer, &even, ord), MonomialOrder::Less);
    }

    #[test]
    fn json_shape() {
        let rels = degenerate_relation(&col(&[2, 3]), &col(&[1]), 0, 0).unwrap();
        assert_eq!(
            rels[0].to_json().to_string(),
            r#"{"terms":[{"i":[1],"li":0,"j":[2,3],"lj":0,"c":1}]}"#
        );
    }
}
