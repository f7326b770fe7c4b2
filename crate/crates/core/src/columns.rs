//! Index columns, the snake statistic `k(σ, τ)` and the completable-set
//! statistics used by the fusion identities.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

/// Strictly increasing, non-empty sequence of positive integers.
///
/// `Ord` sorts longer columns first, then lexicographically; this is the
/// enumeration order used for r-vectors. It is unrelated to [`column_less`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Column {
    entries: Vec<u32>,
}

impl Column {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.is_empty() {
            return Err(invalid("column must be non-empty"));
        }
        if entries[0] == 0 {
            return Err(invalid("column entries must be positive"));
        }
        if entries.windows(2).any(|w| w[0] >= w[1]) {
            return Err(invalid(format!(
                "column {entries:?} is not strictly increasing"
            )));
        }
        Ok(Column { entries })
    }

    /// Like [`Column::new`], additionally requiring every entry to be `<= ambient`.
    pub fn with_ambient(entries: Vec<u32>, ambient: u32) -> Result<Self> {
        let col = Column::new(entries)?;
        if col.max_entry() > ambient {
            return Err(invalid(format!(
                "column {:?} exceeds ambient bound {ambient}",
                col.entries
            )));
        }
        Ok(col)
    }

    /// Sorts and validates an unordered list of distinct entries.
    pub fn from_unsorted(mut entries: Vec<u32>) -> Result<Self> {
        entries.sort_unstable();
        Column::new(entries)
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn max_entry(&self) -> u32 {
        *self.entries.last().expect("non-empty")
    }

    pub fn contains(&self, v: u32) -> bool {
        self.entries.binary_search(&v).is_ok()
    }

    /// Indicator weight vector of length `n`: entry `i-1` is 1 iff `i` is in the column.
    pub fn weight(&self, n: usize) -> Vec<i64> {
        let mut w = vec![0; n];
        for &e in &self.entries {
            w[e as usize - 1] += 1;
        }
        w
    }

    /// Image under `i -> ambient + 1 - i`.
    pub fn reflect(&self, ambient: u32) -> Column {
        Column::from_unsorted(self.entries.iter().map(|&e| ambient + 1 - e).collect())
            .expect("reflection of a column is a column")
    }

    /// All k-subsets of `{1..n}` as columns, in lexicographic order.
    pub fn all_of_size(n: u32, k: usize) -> Vec<Column> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(k);
        fn rec(start: u32, n: u32, k: usize, cur: &mut Vec<u32>, out: &mut Vec<Column>) {
            if cur.len() == k {
                out.push(Column {
                    entries: cur.clone(),
                });
                return;
            }
            for v in start..=n {
                if (n - v + 1) as usize + cur.len() < k {
                    break;
                }
                cur.push(v);
                rec(v + 1, n, k, cur, out);
                cur.pop();
            }
        }
        if k > 0 {
            rec(1, n, k, &mut cur, &mut out);
        }
        out
    }

    /// All non-empty proper subsets of `{1..n}`.
    pub fn all_proper(n: u32) -> Vec<Column> {
        (1..n as usize)
            .rev()
            .flat_map(|k| Column::all_of_size(n, k))
            .collect()
    }
}

impl TryFrom<Vec<u32>> for Column {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Column::new(v)
    }
}

impl From<Column> for Vec<u32> {
    fn from(c: Column) -> Self {
        c.entries
    }
}

impl Ord for Column {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .len()
            .cmp(&self.len())
            .then_with(|| self.entries.cmp(&other.entries))
    }
}

impl PartialOrd for Column {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Column {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        if self.entries.iter().all(|&e| e < 10) {
            write!(f, "{}", parts.concat())
        } else {
            write!(f, "{}", parts.join(","))
        }
    }
}

/// `σ < τ`: σ is longer, or the lengths agree and at the bottom-most differing
/// position σ has the smaller entry.
pub fn column_less(sigma: &Column, tau: &Column) -> bool {
    seq_less(&to_i64(sigma), &to_i64(tau))
}

fn to_i64(c: &Column) -> Vec<i64> {
    c.entries.iter().map(|&e| e as i64).collect()
}

fn seq_less(a: &[i64], b: &[i64]) -> bool {
    if a.len() != b.len() {
        return a.len() > b.len();
    }
    for (x, y) in a.iter().zip(b).rev() {
        if x != y {
            return x < y;
        }
    }
    false
}

/// Which of the two columns an element of a snake sequence was taken from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    Sigma,
    Tau,
}

/// The snake sequence `P(σ, τ)` together with `k(σ, τ) = |P| - l_σ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnakeResult {
    pub p_sequence: Vec<u32>,
    /// Column of origin of each entry of `p_sequence`.
    pub sides: Vec<Side>,
    pub k: usize,
}

/// Walks the two top-aligned columns from the bottom of `left` upward.
/// In the left column it stays while `left <= right`, in the right column while
/// `left >= right`; a strict violation records both entries and switches.
fn walk(left: &[i64], right: &[i64]) -> (Vec<(i64, Side)>, usize) {
    debug_assert!(left.len() >= right.len());
    let mut out = Vec::with_capacity(left.len() + right.len());
    for j in (right.len()..left.len()).rev() {
        out.push((left[j], Side::Sigma));
    }
    let mut side = Side::Sigma;
    let mut switches = 0;
    for j in (0..right.len()).rev() {
        let (l, r) = (left[j], right[j]);
        match side {
            Side::Sigma if l <= r => out.push((l, Side::Sigma)),
            Side::Sigma => {
                out.push((l, Side::Sigma));
                out.push((r, Side::Tau));
                side = Side::Tau;
                switches += 1;
            }
            Side::Tau if l >= r => out.push((r, Side::Tau)),
            Side::Tau => {
                out.push((r, Side::Tau));
                out.push((l, Side::Sigma));
                side = Side::Sigma;
                switches += 1;
            }
        }
    }
    (out, switches)
}

/// Snake sequence and statistic for `σ < τ` (or `σ = τ`).
pub fn snake(sigma: &Column, tau: &Column) -> Result<SnakeResult> {
    if sigma != tau && !column_less(sigma, tau) {
        return Err(Error::Ordering(format!("{sigma} is not less than {tau}")));
    }
    let (seq, switches) = walk(&to_i64(sigma), &to_i64(tau));
    let k = seq.len() - sigma.len();
    debug_assert_eq!(k, switches);
    Ok(SnakeResult {
        p_sequence: seq.iter().map(|&(v, _)| v as u32).collect(),
        sides: seq.iter().map(|&(_, s)| s).collect(),
        k,
    })
}

/// `k` of the unordered pair `{σ, τ}` (the snake statistic of the sorted pair).
pub fn k_pair(a: &Column, b: &Column) -> usize {
    let res = if column_less(b, a) {
        snake(b, a)
    } else {
        snake(a, b)
    };
    res.expect("pair ordered before snaking").k
}

/// Largest `r` with `{1..r}` contained in `set`, and whether `set` meets
/// `{1..n}` in exactly that segment.
fn dense_prefix(set: &Column, n: u32) -> (usize, bool) {
    let r = set
        .entries()
        .iter()
        .enumerate()
        .take_while(|&(i, &v)| v == i as u32 + 1)
        .count();
    let dense = set.entries().iter().filter(|&&v| v <= n).count() == r;
    (r, dense)
}

pub fn is_dense(set: &Column, n: u32) -> bool {
    dense_prefix(set, n).1
}

fn check_ac(a: u32, c: u32, n: u32) -> Result<()> {
    if !(1 <= a && a < n && n < c && c <= 2 * n) {
        return Err(invalid(format!(
            "need 1 <= a < n < c <= 2n, got a={a}, c={c}, n={n}"
        )));
    }
    Ok(())
}

/// Whether `I` is the image of `v_{1..|I|}` under the `(a,c)`-restriction of some
/// chain `f_{1,l_1} ... f_{k,l_k}`, `2n >= l_1 > ... > l_k >= n+1`. Root vectors are
/// compared by `(q, p)`; the restriction keeps those `<= f_{a,c}`.
pub fn is_completable(set: &Column, a: u32, c: u32, n: u32) -> Result<bool> {
    check_ac(a, c, n)?;
    if set.max_entry() > 2 * n {
        return Err(invalid(format!("{set} is not a subset of 1..{}", 2 * n)));
    }
    let k = set.len();
    if k > n as usize {
        return Ok(false);
    }
    Ok(completable_images(k, a, c, n).contains(set))
}

/// All `(a,c)`-completable sets of size `k`, sorted and deduplicated.
pub fn completable_sets(k: usize, a: u32, c: u32, n: u32) -> Result<Vec<Column>> {
    check_ac(a, c, n)?;
    Ok(completable_images(k, a, c, n))
}

fn completable_images(k: usize, a: u32, c: u32, n: u32) -> Vec<Column> {
    if k == 0 || k > n as usize {
        return Vec::new();
    }
    let mut out: Vec<Column> = Column::all_of_size(n, k)
        .into_iter()
        .map(|chain| {
            // chain entries ascending; l_j is the j-th largest value
            let levels: Vec<u32> = chain.entries().iter().rev().map(|&v| v + n).collect();
            let mut image: Vec<u32> = Vec::with_capacity(k);
            for (idx, &l) in levels.iter().enumerate() {
                let p = idx as u32 + 1;
                if (l, p) <= (c, a) {
                    image.push(l);
                } else {
                    image.push(p);
                }
            }
            Column::from_unsorted(image).expect("chain image has distinct entries")
        })
        .collect();
    out.sort_by(|x, y| x.entries().cmp(y.entries()));
    out.dedup();
    out
}

/// The closed-form test: `I = {1..r} ∪ S` with `S` above `n`, `max S <= c`,
/// and `r + 1 <= a` when `max S = c`. Chains have no room constraint here, so
/// this accepts some sets that [`is_completable`] rejects.
pub fn is_completable_closed_form(set: &Column, a: u32, c: u32, n: u32) -> Result<bool> {
    check_ac(a, c, n)?;
    let (r, dense) = dense_prefix(set, n);
    if !dense {
        return Ok(false);
    }
    if r == set.len() {
        return Ok(true);
    }
    let top = set.max_entry();
    Ok(top < c || (top == c && r as u32 + 1 <= a))
}

/// Top-to-bottom column of a dense set: `2n+1` for each initial entry, then the
/// entries above `n` in decreasing order. Values are negated so the walk of
/// [`snake`] applies verbatim.
fn kac_column(set: &Column, n: u32) -> Vec<i64> {
    let (r, _) = dense_prefix(set, n);
    let mut col = vec![-(2 * n as i64 + 1); r];
    col.extend(set.entries()[r..].iter().rev().map(|&v| -(v as i64)));
    col
}

/// Number of column switches in the walk `P(I, J)` of two dense subsets of `{1..2n}`.
pub fn kac(i_set: &Column, j_set: &Column, n: u32) -> Result<usize> {
    for s in [i_set, j_set] {
        if s.max_entry() > 2 * n || !is_dense(s, n) {
            return Err(invalid(format!("{s} is not a dense subset of 1..{}", 2 * n)));
        }
    }
    let ci = kac_column(i_set, n);
    let cj = kac_column(j_set, n);
    let (left, right) = if seq_less(&cj, &ci) { (cj, ci) } else { (ci, cj) };
    Ok(walk(&left, &right).1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn col(v: &[u32]) -> Column {
        Column::new(v.to_vec()).unwrap()
    }

    #[test]
    fn column_validation() {
        assert!(Column::new(vec![]).is_err());
        assert!(Column::new(vec![2, 2]).is_err());
        assert!(Column::new(vec![0, 1]).is_err());
        assert!(Column::with_ambient(vec![1, 4], 3).is_err());
        assert_eq!(Column::from_unsorted(vec![3, 1]).unwrap(), col(&[1, 3]));
    }

    #[test]
    fn less_examples() {
        assert!(column_less(&col(&[1, 3, 6, 7]), &col(&[2, 4, 5, 8])));
        assert!(column_less(&col(&[2, 4, 5, 7]), &col(&[1, 3, 6])));
        assert!(!column_less(&col(&[1, 3]), &col(&[1, 3])));
        assert!(!column_less(&col(&[2, 4, 5, 8]), &col(&[1, 3, 6, 7])));
        assert!(column_less(&col(&[2, 3]), &col(&[1, 4])));
    }

    #[test]
    fn snake_examples() {
        let cases: [(&[u32], &[u32], &[u32], usize); 4] = [
            (&[1, 3, 6, 7], &[2, 4, 5, 8], &[7, 6, 5, 4, 3, 1], 2),
            (&[2, 4, 5, 7], &[1, 3, 6], &[7, 5, 4, 3, 1], 1),
            (&[2, 3, 5, 7], &[2, 4, 5], &[7, 5, 3, 2], 0),
            (&[2, 3], &[1], &[3, 2, 1], 1),
        ];
        for (s, t, p, k) in cases {
            let res = snake(&col(s), &col(t)).unwrap();
            assert_eq!(res.p_sequence, p.to_vec(), "P for {s:?},{t:?}");
            assert_eq!(res.k, k);
        }
    }

    #[test]
    fn snake_sides_track_origin() {
        let res = snake(&col(&[1, 3, 6, 7]), &col(&[2, 4, 5, 8])).unwrap();
        use Side::*;
        assert_eq!(res.sides, vec![Sigma, Sigma, Tau, Tau, Sigma, Sigma]);
    }

    #[test]
    fn snake_of_equal_columns() {
        let res = snake(&col(&[1, 4, 5]), &col(&[1, 4, 5])).unwrap();
        assert_eq!(res.k, 0);
        assert_eq!(res.p_sequence, vec![5, 4, 1]);
    }

    #[test]
    fn snake_rejects_wrong_order() {
        assert!(matches!(
            snake(&col(&[1]), &col(&[2, 3])),
            Err(Error::Ordering(_))
        ));
    }

    #[test]
    fn kac_examples() {
        let n = 10;
        let i = Column::from_unsorted(vec![1, 2, n + 4, n + 2, n + 1]).unwrap();
        let j = Column::from_unsorted(vec![1, n + 5, n + 4, n + 3]).unwrap();
        assert_eq!(kac(&i, &j, n).unwrap(), 2);
        assert_eq!(kac(&j, &i, n).unwrap(), 2);
        assert_eq!(kac(&i, &i, n).unwrap(), 0);
        assert!(kac(&col(&[2, 11]), &j, n).is_err());
    }

    #[test]
    fn completable_examples() {
        let n = 4;
        for k in 1..n as usize {
            for s in Column::all_of_size(n, k) {
                let upper = Column::new(s.entries().iter().map(|v| v + n).collect()).unwrap();
                assert!(is_completable(&upper, n - 1, 2 * n, n).unwrap());
            }
        }
        assert!(is_completable(&col(&[5]), 1, 5, 4).unwrap());
        assert!(is_completable(&col(&[1]), 1, 5, 4).unwrap());
        assert!(!is_completable(&col(&[6]), 1, 5, 4).unwrap());
        assert!(is_completable(&col(&[1, 2]), 1, 5, 4).unwrap());
        assert!(is_completable(&col(&[1, 2, 3]), 1, 5, 4).unwrap());
        assert!(!is_completable(&col(&[1, 5]), 1, 5, 4).unwrap());
        assert!(is_completable(&col(&[1, 2]), 1, 4, 3).unwrap());
        assert!(is_completable(&col(&[1, 2]), 1, 5, 3).unwrap());
        assert!(!is_completable(&col(&[1, 2]), 1, 6, 3).unwrap());
        assert!(!is_completable(&col(&[1, 5]), 1, 6, 3).unwrap());
        assert!(!is_completable(&col(&[1, 2]), 2, 6, 3).unwrap());
        assert!(is_completable(&col(&[1, 4]), 1, 5, 3).unwrap());
    }

    #[test]
    fn closed_form_is_weaker_than_definition() {
        for n in 2..=5u32 {
            for a in 1..n {
                for c in n + 1..=2 * n {
                    for k in 1..n as usize {
                        for s in Column::all_of_size(2 * n, k) {
                            if is_completable(&s, a, c, n).unwrap() {
                                assert!(is_completable_closed_form(&s, a, c, n).unwrap());
                            }
                        }
                    }
                }
            }
        }
        assert!(is_completable_closed_form(&col(&[1, 2]), 1, 6, 3).unwrap());
    }

    #[test]
    fn completable_rejects_bad_bounds() {
        assert!(is_completable(&col(&[1]), 0, 5, 4).is_err());
        assert!(is_completable(&col(&[1]), 1, 4, 4).is_err());
        assert!(is_completable(&col(&[1]), 1, 9, 4).is_err());
    }

    #[test]
    fn proper_columns_order() {
        let all = Column::all_proper(3);
        let shown: Vec<String> = all.iter().map(|c| c.to_string()).collect();
        assert_eq!(shown, ["12", "13", "23", "1", "2", "3"]);
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(sorted, all);
    }
}
