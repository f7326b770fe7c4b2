//! Closed character formulas for local and global Weyl modules, the components
//! of the degenerate algebra, its monomial basis, and a Schur-polynomial oracle.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::charring::{q_multinomial, series_div_pochhammer, CharPoly, QPoly, TruncatedSeries};
use crate::columns::{column_less, snake, Column};
use crate::error::{invalid, Result};

/// `λ = m_1 ω_1 + ... + m_{n-1} ω_{n-1}` for `sl_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DominantWeight {
    n: u32,
    m: Vec<u32>,
}

impl DominantWeight {
    pub fn new(n: u32, m: Vec<u32>) -> Result<Self> {
        if n < 2 {
            return Err(invalid(format!("rank parameter n must be >= 2, got {n}")));
        }
        if m.len() != n as usize - 1 {
            return Err(invalid(format!(
                "expected {} multiplicities for n={n}, got {}",
                n - 1,
                m.len()
            )));
        }
        Ok(DominantWeight { n, m })
    }

    /// Accepts fewer than `n-1` multiplicities and pads with zeros.
    pub fn padded(n: u32, mut m: Vec<u32>) -> Result<Self> {
        if n >= 2 && m.len() < n as usize - 1 {
            m.resize(n as usize - 1, 0);
        }
        DominantWeight::new(n, m)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> &[u32] {
        &self.m
    }

    /// `m_k` for `1 <= k <= n-1`.
    pub fn mult(&self, k: usize) -> u32 {
        self.m[k - 1]
    }

    pub fn total(&self) -> u32 {
        self.m.iter().sum()
    }

    /// The partition `μ_i = Σ_{k >= i} m_k`.
    pub fn partition(&self) -> Vec<u32> {
        (0..self.m.len()).map(|i| self.m[i..].iter().sum()).collect()
    }

    /// Weight in `ε`-coordinates: `Σ_k m_k (ε_1 + ... + ε_k)`.
    pub fn epsilon_weight(&self) -> Vec<i64> {
        let mut w: Vec<i64> = self.partition().into_iter().map(i64::from).collect();
        w.push(0);
        w
    }
}

/// Multiplicities `r_σ`, keyed by column; zero entries are not stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct RVector {
    entries: BTreeMap<Column, u32>,
}

impl RVector {
    pub fn new() -> Self {
        RVector::default()
    }

    pub fn from_pairs<I: IntoIterator<Item = (Column, u32)>>(pairs: I) -> Self {
        let mut r = RVector::new();
        for (c, v) in pairs {
            r.set(c, v);
        }
        r
    }

    pub fn set(&mut self, col: Column, value: u32) {
        if value == 0 {
            self.entries.remove(&col);
        } else {
            self.entries.insert(col, value);
        }
    }

    pub fn get(&self, col: &Column) -> u32 {
        self.entries.get(col).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Column, u32)> {
        self.entries.iter().map(|(c, &v)| (c, v))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `Σ_{|σ| = k} r_σ`.
    pub fn level_sum(&self, k: usize) -> u32 {
        self.iter().filter(|(c, _)| c.len() == k).map(|(_, v)| v).sum()
    }

    /// `Σ_σ r_σ wt(σ)`.
    pub fn weight(&self, n: usize) -> Vec<i64> {
        let mut w = vec![0i64; n];
        for (c, v) in self.iter() {
            for &e in c.entries() {
                w[e as usize - 1] += v as i64;
            }
        }
        w
    }

    /// `Σ_{σ<τ} k(σ,τ) r_σ r_τ`.
    pub fn quadratic_form(&self) -> u64 {
        let support: Vec<(&Column, u32)> = self.iter().collect();
        let mut total = 0u64;
        for (i, &(a, ra)) in support.iter().enumerate() {
            for &(b, rb) in &support[i + 1..] {
                let k = pair_k(a, b);
                total += k as u64 * ra as u64 * rb as u64;
            }
        }
        total
    }

    /// `T(σ) = Σ_{τ: σ<τ} k(σ,τ) r_τ`.
    pub fn threshold(&self, sigma: &Column) -> u64 {
        self.iter()
            .filter(|(tau, _)| column_less(sigma, tau))
            .map(|(tau, rt)| k_of(sigma, tau) as u64 * rt as u64)
            .sum()
    }

    /// `max_{τ: σ<τ} k(σ,τ) r_τ`, i.e. each pair bound imposed separately.
    pub fn threshold_per_pair(&self, sigma: &Column) -> u64 {
        self.iter()
            .filter(|(tau, _)| column_less(sigma, tau))
            .map(|(tau, rt)| k_of(sigma, tau) as u64 * rt as u64)
            .max()
            .unwrap_or(0)
    }

    /// Whether every pair of distinct support columns has `k = 0`.
    pub fn is_semistandard(&self) -> bool {
        let support: Vec<&Column> = self.entries.keys().collect();
        support
            .iter()
            .enumerate()
            .all(|(i, a)| support[i + 1..].iter().all(|b| pair_k(a, b) == 0))
    }
}

impl fmt::Display for RVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|(c, v)| format!("r[{c}]={v}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

fn k_of(sigma: &Column, tau: &Column) -> usize {
    snake(sigma, tau).expect("ordered pair").k
}

fn pair_k(a: &Column, b: &Column) -> usize {
    if column_less(a, b) {
        k_of(a, b)
    } else {
        k_of(b, a)
    }
}

/// Compositions of `total` into `parts` non-negative parts, colexicographically.
fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 0 {
        return if total == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    // choose the last part first so that earlier parts vary fastest
    for last in 0..=total {
        for mut head in compositions(total - last, parts - 1) {
            head.push(last);
            out.push(head);
        }
    }
    out
}

/// All r-vectors compatible with `λ`, in a fixed deterministic order.
pub fn enumerate_rvectors(lambda: &DominantWeight) -> Vec<RVector> {
    let n = lambda.n();
    let mut acc: Vec<Vec<(Column, u32)>> = vec![Vec::new()];
    for k in (1..n as usize).rev() {
        let cols = Column::all_of_size(n, k);
        let comps = compositions(lambda.mult(k), cols.len());
        let mut next = Vec::with_capacity(acc.len() * comps.len());
        for prefix in &acc {
            for comp in &comps {
                let mut v = prefix.clone();
                v.extend(
                    cols.iter()
                        .zip(comp)
                        .filter(|(_, &r)| r > 0)
                        .map(|(c, &r)| (c.clone(), r)),
                );
                next.push(v);
            }
        }
        acc = next;
    }
    acc.into_iter().map(RVector::from_pairs).collect()
}

fn multinomial_factor(lambda: &DominantWeight, r: &RVector) -> QPoly {
    let mut acc = QPoly::one();
    for k in 1..lambda.n() as usize {
        let parts: Vec<u32> = r
            .iter()
            .filter(|(c, _)| c.len() == k)
            .map(|(_, v)| v)
            .collect();
        let qm = q_multinomial(lambda.mult(k), &parts).expect("parts sum to m_k");
        acc = &acc * &qm;
    }
    acc
}

fn sum_parallel(n: usize, terms: impl ParallelIterator<Item = CharPoly>) -> CharPoly {
    terms.reduce(|| CharPoly::zero(n), |a, b| &a + &b)
}

/// `Σ_r q^{Σ k r r} x^{wt r} ∏_k [m_k; r]_q`.
pub fn local_weyl_character(lambda: &DominantWeight) -> CharPoly {
    let n = lambda.n() as usize;
    let rvecs = enumerate_rvectors(lambda);
    sum_parallel(
        n,
        rvecs.par_iter().map(|r| {
            let q = u32::try_from(r.quadratic_form()).expect("q-degree fits u32");
            CharPoly::monomial(n, q, r.weight(n), 1).mul_q(&multinomial_factor(lambda, r))
        }),
    )
}

/// Local character divided by `(q)_λ`, exact through q-degree `bound`.
pub fn global_weyl_character(lambda: &DominantWeight, bound: u32) -> TruncatedSeries {
    series_div_pochhammer(&local_weyl_character(lambda), lambda.m(), bound)
}

/// `q^{Σ k r r} x^{wt r} / ∏_σ (q)_{r_σ}` truncated at `bound`.
pub fn degenerate_component_character(r: &RVector, n: usize, bound: u32) -> TruncatedSeries {
    let q = u32::try_from(r.quadratic_form()).expect("q-degree fits u32");
    let lead = CharPoly::monomial(n, q, r.weight(n), 1);
    let parts: Vec<u32> = r.iter().map(|(_, v)| v).collect();
    series_div_pochhammer(&lead, &parts, bound)
}

/// Lower bound on the smallest level attached to each column.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum ThresholdRule {
    /// `l_{1,σ} >= Σ_{τ>σ} k(σ,τ) r_τ`.
    #[default]
    Aggregated,
    /// `l_{1,σ} >= k(σ,τ) r_τ` for each `τ > σ` separately.
    PerPair,
}

/// Monomial `∏ X_σ^{(l)}` stored as sorted `(σ, l)` factors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisMonomial {
    factors: Vec<(Column, u32)>,
}

impl BasisMonomial {
    pub fn new(mut factors: Vec<(Column, u32)>) -> Self {
        factors.sort();
        BasisMonomial { factors }
    }

    pub fn factors(&self) -> &[(Column, u32)] {
        &self.factors
    }

    pub fn q_degree(&self) -> u32 {
        self.factors.iter().map(|(_, l)| l).sum()
    }

    pub fn weight(&self, n: usize) -> Vec<i64> {
        self.rvector().weight(n)
    }

    pub fn rvector(&self) -> RVector {
        let mut r = RVector::new();
        for (c, _) in &self.factors {
            let v = r.get(c) + 1;
            r.set(c.clone(), v);
        }
        r
    }
}

impl fmt::Display for BasisMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(c, l)| format!("X_{c}^({l})"))
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// Non-decreasing level sequences of length `len` with entries `>= min` and sum `<= budget`.
fn level_sequences(len: u32, min: u64, budget: u64) -> Vec<Vec<u32>> {
    fn rec(len: u32, min: u64, budget: u64, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if len == 0 {
            out.push(cur.clone());
            return;
        }
        let mut l = min;
        while l * len as u64 <= budget {
            cur.push(l as u32);
            rec(len - 1, l, budget - l, cur, out);
            cur.pop();
            l += 1;
        }
    }
    let mut out = Vec::new();
    rec(len, min, budget, &mut Vec::new(), &mut out);
    out
}

/// Basis monomials of the global module of q-degree at most `max_degree`.
pub fn enumerate_basis(
    lambda: &DominantWeight,
    max_degree: u32,
    rule: ThresholdRule,
) -> Vec<BasisMonomial> {
    let rvecs = enumerate_rvectors(lambda);
    let per_r: Vec<Vec<BasisMonomial>> = rvecs
        .par_iter()
        .map(|r| basis_for_rvector(r, max_degree, rule))
        .collect();
    per_r.into_iter().flatten().collect()
}

/// Basis monomials with the prescribed underlying r-vector.
pub fn basis_for_rvector(r: &RVector, max_degree: u32, rule: ThresholdRule) -> Vec<BasisMonomial> {
    let mut partial: Vec<(Vec<(Column, u32)>, u64)> = vec![(Vec::new(), 0)];
    for (sigma, rs) in r.iter() {
        let t = match rule {
            ThresholdRule::Aggregated => r.threshold(sigma),
            ThresholdRule::PerPair => r.threshold_per_pair(sigma),
        };
        let mut next = Vec::new();
        for (factors, used) in &partial {
            let budget = max_degree as u64 - used;
            for seq in level_sequences(rs, t, budget) {
                let mut f = factors.clone();
                let s: u64 = seq.iter().map(|&l| l as u64).sum();
                f.extend(seq.into_iter().map(|l| (sigma.clone(), l)));
                next.push((f, used + s));
            }
        }
        partial = next;
    }
    partial
        .into_iter()
        .map(|(f, _)| BasisMonomial::new(f))
        .collect()
}

/// Generating function `Σ q^{deg} x^{wt}` of a list of monomials.
pub fn basis_character(basis: &[BasisMonomial], n: usize) -> CharPoly {
    let mut out = CharPoly::zero(n);
    for b in basis {
        out.add_term(b.q_degree(), b.weight(n), BigInt::from(1));
    }
    out
}

/// Number of r-vectors compatible with `λ` having `k = 0` on every support pair.
pub fn ssyt_count(lambda: &DominantWeight) -> u64 {
    enumerate_rvectors(lambda)
        .par_iter()
        .filter(|r| r.is_semistandard())
        .count() as u64
}

/// Schur polynomial `s_μ(x_1..x_n)`, `μ_i = Σ_{k>=i} m_k`, by tableau enumeration.
pub fn schur_character(lambda: &DominantWeight) -> CharPoly {
    let n = lambda.n() as usize;
    let shape: Vec<usize> = lambda
        .partition()
        .into_iter()
        .map(|v| v as usize)
        .filter(|&v| v > 0)
        .collect();
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(row, &len)| (0..len).map(move |col| (row, col)))
        .collect();
    let mut grid: Vec<Vec<u32>> = shape.iter().map(|&len| vec![0; len]).collect();
    let mut out = CharPoly::zero(n);
    let mut weight = vec![0i64; n];
    fill_tableau(&cells, 0, n as u32, &mut grid, &mut weight, &mut out);
    out
}

fn fill_tableau(
    cells: &[(usize, usize)],
    idx: usize,
    n: u32,
    grid: &mut [Vec<u32>],
    weight: &mut [i64],
    out: &mut CharPoly,
) {
    if idx == cells.len() {
        out.add_term(0, weight.to_vec(), BigInt::from(1));
        return;
    }
    let (row, col) = cells[idx];
    let left = if col > 0 { grid[row][col - 1] } else { 1 };
    let above = if row > 0 { grid[row - 1][col] + 1 } else { 1 };
    for v in left.max(above)..=n {
        grid[row][col] = v;
        weight[v as usize - 1] += 1;
        fill_tableau(cells, idx + 1, n, grid, weight, out);
        weight[v as usize - 1] -= 1;
    }
    grid[row][col] = 0;
}
