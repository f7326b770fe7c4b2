//! Minor oracle: truncated power-series minors of a random matrix, evaluation of
//! relation templates on them, and randomized ranks of the graded pieces of the
//! algebra generated by the minors.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::charformula::DominantWeight;
use crate::columns::Column;
use crate::error::{invalid, Error, Result};
use crate::linalg::{is_prime, rank_mod_p, rank_rational, ModP, DEFAULT_PRIMES};
use crate::pluecker::{normalize_index, RelationTemplate};

/// Coefficient ring for series entries.
pub trait Scalars: Sync {
    type E: Clone + Send + Sync + PartialEq + std::fmt::Debug;
    fn zero(&self) -> Self::E;
    fn one(&self) -> Self::E;
    fn add(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn neg(&self, a: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
}

impl Scalars for ModP {
    type E = u64;
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        ModP::add(self, *a, *b)
    }
    fn neg(&self, a: &u64) -> u64 {
        ModP::neg(self, *a)
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ModP::mul(self, *a, *b)
    }
}

/// Exact integers.
#[derive(Debug, Clone, Copy, Default)]
pub struct Integers;

impl Scalars for Integers {
    type E = BigInt;
    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
}

fn series_mul<S: Scalars>(ring: &S, a: &[S::E], b: &[S::E]) -> Vec<S::E> {
    let len = a.len();
    let mut out = vec![ring.zero(); len];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate().take(len - i) {
            out[i + j] = ring.add(&out[i + j], &ring.mul(x, y));
        }
    }
    out
}

fn series_add<S: Scalars>(ring: &S, a: &mut [S::E], b: &[S::E], negate: bool) {
    for (x, y) in a.iter_mut().zip(b) {
        let y = if negate { ring.neg(y) } else { y.clone() };
        *x = ring.add(x, &y);
    }
}

/// `n x n` matrix of power series `z_ij(s) = Σ_l z_ij^{(l)} s^l`, truncated at `s^order`.
#[derive(Debug, Clone)]
pub struct SeriesMatrix<E> {
    n: usize,
    order: u32,
    /// `entries[i][j][l]`, zero-based rows and columns.
    entries: Vec<Vec<Vec<E>>>,
}

impl<E: Clone> SeriesMatrix<E> {
    pub fn from_entries(n: usize, order: u32, entries: Vec<Vec<Vec<E>>>) -> Result<Self> {
        let ok = entries.len() == n
            && entries
                .iter()
                .all(|row| row.len() == n && row.iter().all(|s| s.len() == order as usize + 1));
        if !ok {
            return Err(invalid("series matrix has the wrong shape"));
        }
        Ok(SeriesMatrix { n, order, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn entry(&self, i: usize, j: usize) -> &[E] {
        &self.entries[i][j]
    }
}

impl SeriesMatrix<u64> {
    /// Uniformly random entries in `F_p`, reproducible from `seed`.
    pub fn random(n: usize, order: u32, prime: u64, seed: u64) -> Result<Self> {
        check_prime(prime, order)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let entries = (0..n)
            .map(|_| {
                (0..n)
                    .map(|_| (0..=order).map(|_| rng.gen_range(0..prime)).collect())
                    .collect()
            })
            .collect();
        Ok(SeriesMatrix { n, order, entries })
    }

    /// `z_ij(s) = δ_ij`.
    pub fn identity(n: usize, order: u32) -> Self {
        let entries = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let mut s = vec![0; order as usize + 1];
                        s[0] = u64::from(i == j);
                        s
                    })
                    .collect()
            })
            .collect();
        SeriesMatrix { n, order, entries }
    }
}

impl SeriesMatrix<BigInt> {
    /// Random integer entries in `[-bound, bound]`.
    pub fn random_integer(n: usize, order: u32, bound: i64, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let entries = (0..n)
            .map(|_| {
                (0..n)
                    .map(|_| {
                        (0..=order)
                            .map(|_| BigInt::from(rng.gen_range(-bound..=bound)))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        SeriesMatrix { n, order, entries }
    }
}

fn check_prime(prime: u64, order: u32) -> Result<()> {
    if !is_prime(prime) {
        return Err(invalid(format!("{prime} is not prime")));
    }
    if prime <= 2 * order as u64 + 2 {
        return Err(invalid(format!(
            "prime {prime} must exceed 2N+2 = {}",
            2 * order as u64 + 2
        )));
    }
    Ok(())
}

/// Laplace expansion along the last row of the top-justified minor on `cols`.
fn minor_direct<S: Scalars>(ring: &S, m: &SeriesMatrix<S::E>, cols: &[usize]) -> Vec<S::E> {
    let len = m.order as usize + 1;
    let k = cols.len();
    if k == 0 {
        let mut one = vec![ring.zero(); len];
        one[0] = ring.one();
        return one;
    }
    let mut acc = vec![ring.zero(); len];
    for t in 0..k {
        let rest: Vec<usize> = cols
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != t)
            .map(|(_, &c)| c)
            .collect();
        let sub = minor_direct(ring, m, &rest);
        let term = series_mul(ring, &m.entries[k - 1][cols[t]], &sub);
        series_add(ring, &mut acc, &term, (k - 1 + t) % 2 == 1);
    }
    acc
}

/// The series `m_I(s)` for an arbitrary tuple `I` of 1-based column indices:
/// the determinant on rows `1..|I|` and columns `I` in the given order.
pub fn minor_series<S: Scalars>(ring: &S, m: &SeriesMatrix<S::E>, tuple: &[u32]) -> Result<Vec<S::E>> {
    if tuple.len() > m.n || tuple.iter().any(|&i| i == 0 || i as usize > m.n) {
        return Err(invalid(format!("index tuple {tuple:?} out of range")));
    }
    let len = m.order as usize + 1;
    let Some((col, sign)) = normalize_index(tuple)? else {
        return Ok(vec![ring.zero(); len]);
    };
    let cols: Vec<usize> = col.entries().iter().map(|&c| c as usize - 1).collect();
    let mut v = minor_direct(ring, m, &cols);
    if sign < 0 {
        for x in v.iter_mut() {
            *x = ring.neg(x);
        }
    }
    Ok(v)
}

/// All top-justified minors `m_I^{(l)}`, keyed by column subset as a bitmask.
#[derive(Debug, Clone)]
pub struct MinorTable<E> {
    n: usize,
    order: u32,
    by_mask: Vec<Vec<E>>,
}

impl<E: Clone> MinorTable<E> {
    pub fn build<S: Scalars<E = E>>(ring: &S, m: &SeriesMatrix<E>) -> Self {
        let n = m.n;
        let len = m.order as usize + 1;
        let mut by_mask: Vec<Vec<E>> = vec![Vec::new(); 1 << n];
        let mut one = vec![ring.zero(); len];
        one[0] = ring.one();
        by_mask[0] = one;
        let mut masks: Vec<usize> = (1..1usize << n).collect();
        masks.sort_by_key(|mk| mk.count_ones());
        for mask in masks {
            let cols: Vec<usize> = (0..n).filter(|&c| mask >> c & 1 == 1).collect();
            let k = cols.len();
            let mut acc = vec![ring.zero(); len];
            for (t, &c) in cols.iter().enumerate() {
                let term = series_mul(ring, &m.entries[k - 1][c], &by_mask[mask & !(1 << c)]);
                series_add(ring, &mut acc, &term, (k - 1 + t) % 2 == 1);
            }
            by_mask[mask] = acc;
        }
        MinorTable {
            n,
            order: m.order,
            by_mask,
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// `m_I(s)` for a sorted column.
    pub fn series(&self, col: &Column) -> &[E] {
        let mask = col
            .entries()
            .iter()
            .fold(0usize, |acc, &c| acc | 1 << (c - 1));
        &self.by_mask[mask]
    }

    /// `m_I^{(level)}`.
    pub fn get(&self, col: &Column, level: u32) -> Result<&E> {
        if col.max_entry() as usize > self.n {
            return Err(invalid(format!("column {col} exceeds n = {}", self.n)));
        }
        if level > self.order {
            return Err(Error::Truncation {
                level,
                order: self.order,
            });
        }
        Ok(&self.series(col)[level as usize])
    }
}

/// Value of a relation after substituting `X_I^{(l)} -> m_I^{(l)}`.
pub fn eval_relation<S: Scalars>(
    ring: &S,
    rel: &RelationTemplate<Column>,
    table: &MinorTable<S::E>,
    coeff: impl Fn(i64) -> S::E,
) -> Result<S::E> {
    let mut acc = ring.zero();
    for (a, b, c) in rel.terms() {
        let prod = ring.mul(table.get(&a.label, a.level)?, table.get(&b.label, b.level)?);
        acc = ring.add(&acc, &ring.mul(&coeff(c), &prod));
    }
    Ok(acc)
}

/// Evaluates `rel` modulo `prime` on a random matrix with the given seed.
pub fn eval_relation_mod(rel: &RelationTemplate<Column>, n: usize, prime: u64, seed: u64) -> Result<u64> {
    let order = rel.max_level();
    let field = ModP::new(prime);
    let m = SeriesMatrix::random(n, order, prime, seed)?;
    let table = MinorTable::build(&field, &m);
    eval_relation(&field, rel, &table, |c| field.from_i64(c))
}

/// Spanning monomial of `M(λ)^{(d)}`: sorted `(column, level)` factors.
pub type MinorMonomial = Vec<(Column, u32)>;

/// All products of minors of degree `λ` (`m_k` factors of size `k`) with level sum `d`.
pub fn spanning_monomials(lambda: &DominantWeight, d: u32) -> Vec<MinorMonomial> {
    let n = lambda.n();
    // per size k: list of (multiset, level sum)
    let mut acc: Vec<(MinorMonomial, u32)> = vec![(Vec::new(), 0)];
    for k in 1..n as usize {
        let items: Vec<(Column, u32)> = Column::all_of_size(n, k)
            .into_iter()
            .flat_map(|c| (0..=d).map(move |l| (c.clone(), l)))
            .collect();
        let multisets = multisets_with_budget(&items, lambda.mult(k) as usize, d);
        let mut next = Vec::new();
        for (prefix, used) in &acc {
            for (ms, s) in &multisets {
                if used + s <= d {
                    let mut v = prefix.clone();
                    v.extend(ms.iter().cloned());
                    next.push((v, used + s));
                }
            }
        }
        acc = next;
    }
    acc.into_iter()
        .filter(|(_, s)| *s == d)
        .map(|(mut v, _)| {
            v.sort();
            v
        })
        .collect()
}

fn multisets_with_budget(
    items: &[(Column, u32)],
    size: usize,
    budget: u32,
) -> Vec<(Vec<(Column, u32)>, u32)> {
    fn rec(
        items: &[(Column, u32)],
        size: usize,
        start: usize,
        budget: u32,
        cur: &mut Vec<(Column, u32)>,
        used: u32,
        out: &mut Vec<(Vec<(Column, u32)>, u32)>,
    ) {
        if cur.len() == size {
            out.push((cur.clone(), used));
            return;
        }
        for i in start..items.len() {
            let l = items[i].1;
            if used + l > budget {
                continue;
            }
            cur.push(items[i].clone());
            rec(items, size, i, budget, cur, used + l, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(items, size, 0, budget, &mut Vec::new(), 0, &mut out);
    out
}

fn monomial_weight(mono: &MinorMonomial, n: usize) -> Vec<i64> {
    let mut w = vec![0; n];
    for (c, _) in mono {
        for &e in c.entries() {
            w[e as usize - 1] += 1;
        }
    }
    w
}

/// Settings for [`graded_rank`].
#[derive(Debug, Clone)]
pub struct RankOptions {
    /// Number of random specializations per (prime, seed) run.
    pub trials: usize,
    pub seeds: Vec<u64>,
    pub primes: Vec<u64>,
    /// Also certify over `Q` with integer specializations.
    pub exact: bool,
}

impl RankOptions {
    /// Two primes, two seeds derived from `seed`, and `trials` specializations.
    pub fn new(trials: usize, seed: u64) -> Self {
        RankOptions {
            trials,
            seeds: vec![seed, seed.wrapping_add(0x9E37_79B9_7F4A_7C15)],
            primes: DEFAULT_PRIMES.to_vec(),
            exact: false,
        }
    }
}

/// Result of a graded rank computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankReport {
    pub rank: usize,
    /// Rank of each x-weight block (weights with rank zero omitted).
    pub per_weight: BTreeMap<Vec<i64>, usize>,
    pub monomials: usize,
    pub seeds: Vec<u64>,
    pub primes: Vec<u64>,
    /// Rank over `Q`, when requested.
    pub exact_rank: Option<usize>,
}

fn blocks_by_weight(monos: &[MinorMonomial], n: usize) -> BTreeMap<Vec<i64>, Vec<usize>> {
    let mut blocks: BTreeMap<Vec<i64>, Vec<usize>> = BTreeMap::new();
    for (i, m) in monos.iter().enumerate() {
        blocks.entry(monomial_weight(m, n)).or_default().push(i);
    }
    blocks
}

/// Dimension of the span of degree-`λ`, level-`d` products of minors.
///
/// The span splits by x-weight, so each weight block is ranked separately and
/// the total is their sum.
pub fn graded_rank(lambda: &DominantWeight, d: u32, opts: &RankOptions) -> Result<RankReport> {
    let n = lambda.n() as usize;
    let monos = spanning_monomials(lambda, d);
    if opts.trials < monos.len() {
        return Err(invalid(format!(
            "{} trials cannot detect rank among {} monomials",
            opts.trials,
            monos.len()
        )));
    }
    if opts.primes.is_empty() || opts.seeds.is_empty() {
        return Err(invalid("need at least one prime and one seed"));
    }
    for &p in &opts.primes {
        check_prime(p, d)?;
    }
    let blocks = blocks_by_weight(&monos, n);
    let mut best: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
    for &prime in &opts.primes {
        for &seed in &opts.seeds {
            let field = ModP::new(prime);
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ prime);
            let trial_seeds: Vec<u64> = (0..opts.trials).map(|_| rng.gen()).collect();
            // columns of the evaluation matrix: one specialization each
            let columns: Vec<Vec<u64>> = trial_seeds
                .par_iter()
                .map(|&s| {
                    let m = SeriesMatrix::random(n, d, prime, s).expect("prime checked");
                    let table = MinorTable::build(&field, &m);
                    monos
                        .iter()
                        .map(|mono| {
                            mono.iter().fold(1u64, |acc, (c, l)| {
                                field.mul(acc, table.series(c)[*l as usize])
                            })
                        })
                        .collect()
                })
                .collect();
            for (w, rows) in &blocks {
                let mat: Vec<Vec<u64>> = rows
                    .iter()
                    .map(|&r| columns.iter().map(|col| col[r]).collect())
                    .collect();
                let r = rank_mod_p(mat, field);
                let e = best.entry(w.clone()).or_insert(0);
                *e = (*e).max(r);
            }
        }
    }
    best.retain(|_, r| *r > 0);
    let exact_rank = if opts.exact {
        Some(exact_graded_rank(&monos, n, d, &blocks, opts.trials, opts.seeds[0]))
    } else {
        None
    };
    Ok(RankReport {
        rank: best.values().sum(),
        per_weight: best,
        monomials: monos.len(),
        seeds: opts.seeds.clone(),
        primes: opts.primes.clone(),
        exact_rank,
    })
}

fn exact_graded_rank(
    monos: &[MinorMonomial],
    n: usize,
    d: u32,
    blocks: &BTreeMap<Vec<i64>, Vec<usize>>,
    trials: usize,
    seed: u64,
) -> usize {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let trial_seeds: Vec<u64> = (0..trials).map(|_| rng.gen()).collect();
    let columns: Vec<Vec<BigInt>> = trial_seeds
        .par_iter()
        .map(|&s| {
            let m = SeriesMatrix::random_integer(n, d, 50, s);
            let table = MinorTable::build(&Integers, &m);
            monos
                .iter()
                .map(|mono| {
                    mono.iter()
                        .fold(BigInt::one(), |acc, (c, l)| acc * &table.series(c)[*l as usize])
                })
                .collect()
        })
        .collect();
    blocks
        .values()
        .map(|rows| {
            let mat: Vec<Vec<BigInt>> = rows
                .iter()
                .map(|&r| columns.iter().map(|col| col[r].clone()).collect())
                .collect();
            rank_rational(&mat)
        })
        .sum()
}
