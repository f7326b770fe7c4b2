//! Character ring arithmetic.
//!
//! A [`CharPoly`] is a finite sum of terms `c * q^d * x_1^{a_1} ... x_n^{a_n}` with
//! `d >= 0`, `a_i` arbitrary integers and arbitrary-precision integer coefficients.
//! Univariate polynomials in `q` alone are kept in the dense [`QPoly`] type, which
//! carries the q-Pochhammer symbols and q-multinomial coefficients.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

/// Exponent data of one term: the q-degree and the x-exponent vector.
///
/// Terms are ordered by q-degree first, then by the x-exponents in descending
/// lexicographic order (so `x_1` sorts before `x_2`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Exponent {
    pub q: u32,
    pub x: Vec<i64>,
}

impl Ord for Exponent {
    fn cmp(&self, other: &Self) -> Ordering {
        self.q.cmp(&other.q).then_with(|| other.x.cmp(&self.x))
    }
}

impl PartialOrd for Exponent {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Dense univariate polynomial in `q` with integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QPoly {
    coeffs: Vec<BigInt>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly { coeffs: vec![BigInt::one()] }
    }

    pub fn from_coeffs<I, T>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut p = QPoly {
            coeffs: coeffs.into_iter().map(Into::into).collect(),
        };
        p.trim();
        p
    }

    /// `c * q^d`.
    pub fn monomial(d: u32, c: impl Into<BigInt>) -> Self {
        let mut coeffs = vec![BigInt::zero(); d as usize + 1];
        coeffs[d as usize] = c.into();
        QPoly::from_coeffs(coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> BigInt {
        self.coeffs.get(d).cloned().unwrap_or_default()
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Exact division; fails if `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &QPoly) -> Result<QPoly> {
        let dd = divisor
            .degree()
            .ok_or_else(|| invalid("division by the zero polynomial"))?;
        let Some(nd) = self.degree() else {
            return Ok(QPoly::zero());
        };
        if nd < dd {
            return Err(Error::Invariant("non-exact q-polynomial division".into()));
        }
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let top = &rem[i + dd];
            if top.is_zero() {
                continue;
            }
            if !(top % lead).is_zero() {
                return Err(Error::Invariant("non-exact q-polynomial division".into()));
            }
            let c = top / lead;
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &c * dc;
            }
            quot[i] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::Invariant("non-exact q-polynomial division".into()));
        }
        Ok(QPoly::from_coeffs(quot))
    }

    /// Lift into the character ring with `n` x-variables.
    pub fn to_char(&self, n: usize) -> CharPoly {
        let mut out = CharPoly::zero(n);
        for (d, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                out.terms.insert(
                    Exponent {
                        q: d as u32,
                        x: vec![0; n],
                    },
                    c.clone(),
                );
            }
        }
        out
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly::from_coeffs(out)
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        QPoly::from_coeffs((0..len).map(|i| self.coeff(i) + rhs.coeff(i)))
    }
}

/// `(q)_r = (1-q)(1-q^2)...(1-q^r)`; `(q)_0 = 1`.
pub fn q_pochhammer(r: u32) -> QPoly {
    let mut acc = QPoly::one();
    for i in 1..=r {
        let mut factor = vec![BigInt::zero(); i as usize + 1];
        factor[0] = BigInt::one();
        factor[i as usize] = -BigInt::one();
        acc = &acc * &QPoly::from_coeffs(factor);
    }
    acc
}

/// q-multinomial coefficient `(q)_m / prod_j (q)_{parts_j}`.
pub fn q_multinomial(m: u32, parts: &[u32]) -> Result<QPoly> {
    let total: u64 = parts.iter().map(|&p| p as u64).sum();
    if total != m as u64 {
        return Err(invalid(format!(
            "q-multinomial parts sum to {total}, expected {m}"
        )));
    }
    let den = parts
        .iter()
        .filter(|&&p| p > 0)
        .fold(QPoly::one(), |acc, &p| &acc * &q_pochhammer(p));
    q_pochhammer(m).exact_div(&den)
}

/// Element of the character ring `Z[q][x_1^{±1}, ..., x_n^{±1}]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharPoly {
    n: usize,
    terms: BTreeMap<Exponent, BigInt>,
}

impl CharPoly {
    pub fn zero(n: usize) -> Self {
        CharPoly {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(n, 0, vec![0; n], 1)
    }

    /// `c * q^q * x^x`.
    pub fn monomial(n: usize, q: u32, x: Vec<i64>, c: impl Into<BigInt>) -> Self {
        let mut out = CharPoly::zero(n);
        out.add_term(q, x, c.into());
        out
    }

    /// Builds a polynomial from `(q, x, c)` triples, summing repeated exponents.
    pub fn from_terms<I, C>(n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u32, Vec<i64>, C)>,
        C: Into<BigInt>,
    {
        let mut out = CharPoly::zero(n);
        for (q, x, c) in terms {
            if x.len() != n {
                return Err(Error::DimensionMismatch {
                    left: n,
                    right: x.len(),
                });
            }
            out.add_term(q, x, c.into());
        }
        Ok(out)
    }

    /// Adds `c q^q x^x` in place. Panics if `x.len() != self.n()`.
    pub fn add_term(&mut self, q: u32, x: Vec<i64>, c: BigInt) {
        assert_eq!(x.len(), self.n, "x-exponent length mismatch");
        if c.is_zero() {
            return;
        }
        let key = Exponent { q, x };
        match self.terms.get_mut(&key) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, q: u32, x: &[i64]) -> BigInt {
        self.terms
            .get(&Exponent { q, x: x.to_vec() })
            .cloned()
            .unwrap_or_default()
    }

    pub fn max_q_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.q).max()
    }

    fn check_n(&self, other: &CharPoly) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &CharPoly) -> Result<CharPoly> {
        self.check_n(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.q, e.x.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &CharPoly) -> Result<CharPoly> {
        self.check_n(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.q, e.x.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &CharPoly) -> Result<CharPoly> {
        self.check_n(other)?;
        let mut acc: HashMap<Exponent, BigInt> = HashMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let x = ea.x.iter().zip(&eb.x).map(|(a, b)| a + b).collect();
                *acc.entry(Exponent { q: ea.q + eb.q, x }).or_default() += ca * cb;
            }
        }
        Ok(CharPoly {
            n: self.n,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        })
    }

    pub fn scale(&self, c: &BigInt) -> CharPoly {
        if c.is_zero() {
            return CharPoly::zero(self.n);
        }
        CharPoly {
            n: self.n,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn mul_q(&self, p: &QPoly) -> CharPoly {
        let mut out = CharPoly::zero(self.n);
        for (e, c) in &self.terms {
            for (d, pc) in p.coeffs().iter().enumerate() {
                out.add_term(e.q + d as u32, e.x.clone(), c * pc);
            }
        }
        out
    }

    /// Multiplies by `q^shift x^x`.
    pub fn shift(&self, q_shift: u32, x_shift: &[i64]) -> CharPoly {
        assert_eq!(x_shift.len(), self.n);
        CharPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let x = e.x.iter().zip(x_shift).map(|(a, b)| a + b).collect();
                    (Exponent { q: e.q + q_shift, x }, c.clone())
                })
                .collect(),
        }
    }

    /// Drops every term of q-degree above `bound`.
    pub fn truncate(&self, bound: u32) -> CharPoly {
        CharPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.q <= bound)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// The coefficient of `q^d`, as a q-free polynomial in x.
    pub fn q_slice(&self, d: u32) -> CharPoly {
        CharPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.q == d)
                .map(|(e, c)| {
                    (
                        Exponent {
                            q: 0,
                            x: e.x.clone(),
                        },
                        c.clone(),
                    )
                })
                .collect(),
        }
    }

    /// Specialization `x_i = 1`, leaving a polynomial in q.
    pub fn at_x_one(&self) -> QPoly {
        let top = self.max_q_degree().map_or(0, |d| d as usize + 1);
        let mut coeffs = vec![BigInt::zero(); top];
        for (e, c) in &self.terms {
            coeffs[e.q as usize] += c;
        }
        QPoly::from_coeffs(coeffs)
    }

    /// Specialization `q = 1`, leaving a Laurent polynomial in x.
    pub fn at_q_one(&self) -> CharPoly {
        let mut out = CharPoly::zero(self.n);
        for (e, c) in &self.terms {
            out.add_term(0, e.x.clone(), c.clone());
        }
        out
    }

    /// Value at `q = 1`, `x = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Sum of the coefficients of `q^d` at `x = 1`.
    pub fn dimension_at(&self, d: u32) -> BigInt {
        self.terms
            .iter()
            .filter(|(e, _)| e.q == d)
            .map(|(_, c)| c)
            .sum()
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Divides by `1 - q^i` as a power series, keeping q-degrees `<= bound`.
    fn div_one_minus_q_power(&self, i: u32, bound: u32) -> CharPoly {
        let mut by_x: BTreeMap<Vec<i64>, Vec<BigInt>> = BTreeMap::new();
        for (e, c) in &self.terms {
            if e.q <= bound {
                by_x
                    .entry(e.x.clone())
                    .or_insert_with(|| vec![BigInt::zero(); bound as usize + 1])[e.q as usize] +=
                    c;
            }
        }
        let mut out = CharPoly::zero(self.n);
        let step = i as usize;
        for (x, mut seq) in by_x {
            for d in step..seq.len() {
                let prev = seq[d - step].clone();
                seq[d] += prev;
            }
            for (d, c) in seq.into_iter().enumerate() {
                out.add_term(d as u32, x.clone(), c);
            }
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(CharPolyJson::from(self)).expect("CharPoly serializes")
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&CharPolyJson::from(self)).expect("CharPoly serializes")
    }

    pub fn from_json_str(s: &str) -> Result<CharPoly> {
        let raw: CharPolyJson =
            serde_json::from_str(s).map_err(|e| invalid(format!("bad CharPoly JSON: {e}")))?;
        raw.try_into()
    }

    pub fn from_json(v: &serde_json::Value) -> Result<CharPoly> {
        let raw: CharPolyJson = serde_json::from_value(v.clone())
            .map_err(|e| invalid(format!("bad CharPoly JSON: {e}")))?;
        raw.try_into()
    }
}

impl Add for &CharPoly {
    type Output = CharPoly;
    /// Panics on mismatched variable counts; see [`CharPoly::try_add`].
    fn add(self, rhs: &CharPoly) -> CharPoly {
        self.try_add(rhs).expect("CharPoly addition")
    }
}

impl Sub for &CharPoly {
    type Output = CharPoly;
    fn sub(self, rhs: &CharPoly) -> CharPoly {
        self.try_sub(rhs).expect("CharPoly subtraction")
    }
}

impl Mul for &CharPoly {
    type Output = CharPoly;
    fn mul(self, rhs: &CharPoly) -> CharPoly {
        self.try_mul(rhs).expect("CharPoly multiplication")
    }
}

impl Neg for &CharPoly {
    type Output = CharPoly;
    fn neg(self) -> CharPoly {
        self.scale(&-BigInt::one())
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms.iter().enumerate() {
            let mut factors = Vec::new();
            if e.q == 1 {
                factors.push("q".to_string());
            } else if e.q > 1 {
                factors.push(format!("q^{}", e.q));
            }
            for (i, &a) in e.x.iter().enumerate() {
                match a {
                    0 => {}
                    1 => factors.push(format!("x{}", i + 1)),
                    _ => factors.push(format!("x{}^{}", i + 1, a)),
                }
            }
            let mag = c.abs();
            let body = if factors.is_empty() {
                mag.to_string()
            } else if mag.is_one() {
                factors.join("*")
            } else {
                format!("{}*{}", mag, factors.join("*"))
            };
            let sign = if c.is_negative() { "-" } else { "+" };
            if idx == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                write!(f, "{body}")?;
            } else {
                write!(f, " {sign} {body}")?;
            }
        }
        Ok(())
    }
}

/// A q-power series known exactly in q-degrees `0..=bound`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    poly: CharPoly,
    bound: u32,
}

impl TruncatedSeries {
    pub fn new(poly: CharPoly, bound: u32) -> Self {
        TruncatedSeries {
            poly: poly.truncate(bound),
            bound,
        }
    }

    pub fn poly(&self) -> &CharPoly {
        &self.poly
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn into_poly(self) -> CharPoly {
        self.poly
    }
}

/// `num / (q)_lambda` truncated at q-degree `bound`, where
/// `(q)_lambda = prod_k (q)_{m_k}`.
pub fn series_div_pochhammer(num: &CharPoly, lambda: &[u32], bound: u32) -> TruncatedSeries {
    let mut acc = num.truncate(bound);
    for &m in lambda {
        for i in 1..=m {
            acc = acc.div_one_minus_q_power(i, bound);
        }
    }
    TruncatedSeries::new(acc, bound)
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    q: u32,
    x: Vec<i64>,
    c: serde_json::Number,
}

#[derive(Serialize, Deserialize)]
struct CharPolyJson {
    n: usize,
    terms: Vec<TermJson>,
}

impl From<&CharPoly> for CharPolyJson {
    fn from(p: &CharPoly) -> Self {
        CharPolyJson {
            n: p.n,
            terms: p
                .terms
                .iter()
                .map(|(e, c)| TermJson {
                    q: e.q,
                    x: e.x.clone(),
                    c: c.to_string().parse().expect("integer literal is a JSON number"),
                })
                .collect(),
        }
    }
}

impl TryFrom<CharPolyJson> for CharPoly {
    type Error = Error;
    fn try_from(raw: CharPolyJson) -> Result<CharPoly> {
        let mut terms = Vec::with_capacity(raw.terms.len());
        for t in raw.terms {
            let c: BigInt = t
                .c
                .to_string()
                .parse()
                .map_err(|_| invalid(format!("coefficient {} is not an integer", t.c)))?;
            terms.push((t.q, t.x, c));
        }
        CharPoly::from_terms(raw.n, terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize, i: usize) -> CharPoly {
        let mut e = vec![0; n];
        e[i] = 1;
        CharPoly::monomial(n, 0, e, 1)
    }

    #[test]
    fn add_examples() {
        let s = &x(2, 0) + &x(2, 1);
        assert_eq!(
            s,
            CharPoly::from_terms(2, [(0, vec![1, 0], 1), (0, vec![0, 1], 1)]).unwrap()
        );
        assert_eq!(&s + &CharPoly::zero(2), s);
        let qx = CharPoly::monomial(2, 1, vec![1, 0], 1);
        assert!((&qx + &-&qx).is_zero());
    }

    #[test]
    fn mismatched_n_is_an_error() {
        let err = x(2, 0).try_add(&x(3, 0)).unwrap_err();
        assert_eq!(err, Error::DimensionMismatch { left: 2, right: 3 });
        assert!(x(2, 0).try_mul(&x(3, 0)).is_err());
    }

    #[test]
    fn mul_examples() {
        let p = &CharPoly::one(1) + &CharPoly::monomial(1, 1, vec![1], 1);
        assert_eq!(&p * &CharPoly::one(1), p);

        let s = &x(2, 0) + &x(2, 1);
        let sq = &s * &s;
        let expect =
            CharPoly::from_terms(2, [(0, vec![2, 0], 1), (0, vec![1, 1], 2), (0, vec![0, 2], 1)])
                .unwrap();
        assert_eq!(sq, expect);

        let a = QPoly::from_coeffs([1, -1]).to_char(1);
        let b = QPoly::from_coeffs([1, 0, -1]).to_char(1);
        assert_eq!((&a * &b).at_x_one(), QPoly::from_coeffs([1, -1, -1, 1]));
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(q_pochhammer(0), QPoly::one());
        assert_eq!(q_pochhammer(2), QPoly::from_coeffs([1, -1, -1, 1]));
        let manual = &(&QPoly::from_coeffs([1, -1]) * &QPoly::from_coeffs([1, 0, -1]))
            * &QPoly::from_coeffs([1, 0, 0, -1]);
        assert_eq!(q_pochhammer(3), manual);
    }

    #[test]
    fn multinomial_examples() {
        assert_eq!(q_multinomial(2, &[1, 1]).unwrap(), QPoly::from_coeffs([1, 1]));
        assert_eq!(q_multinomial(5, &[5]).unwrap(), QPoly::one());
        assert_eq!(
            q_multinomial(3, &[2, 1]).unwrap(),
            QPoly::from_coeffs([1, 1, 1])
        );
        assert!(matches!(
            q_multinomial(3, &[1, 1]),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn exact_div_rejects_remainder() {
        let num = QPoly::from_coeffs([1, 1]);
        let den = QPoly::from_coeffs([1, -1]);
        assert!(matches!(num.exact_div(&den), Err(Error::Invariant(_))));
    }

    #[test]
    fn series_division_examples() {
        let geo = series_div_pochhammer(&CharPoly::one(1), &[1], 3);
        assert_eq!(geo.poly().at_x_one(), QPoly::from_coeffs([1, 1, 1, 1]));

        let s = &x(2, 0) + &x(2, 1);
        let got = series_div_pochhammer(&s, &[1], 1);
        assert_eq!(got.poly(), &s.mul_q(&QPoly::from_coeffs([1, 1])));
    }

    #[test]
    fn series_division_inverts_pochhammer() {
        let s = &(&x(2, 0) + &x(2, 1)) + &CharPoly::monomial(2, 2, vec![1, -1], 3);
        let lambda = [2, 1];
        let num = s.mul_q(&(&q_pochhammer(2) * &q_pochhammer(1)));
        assert_eq!(series_div_pochhammer(&num, &lambda, 5).poly(), &s.truncate(5));
    }

    #[test]
    fn canonical_order_and_json() {
        let s = &x(2, 1) + &x(2, 0);
        assert_eq!(
            s.to_json_string(),
            r#"{"n":2,"terms":[{"q":0,"x":[1,0],"c":1},{"q":0,"x":[0,1],"c":1}]}"#
        );
        let big = CharPoly::monomial(1, 3, vec![-2], BigInt::from(7u8).pow(40));
        let back = CharPoly::from_json_str(&big.to_json_string()).unwrap();
        assert_eq!(back, big);
    }

    #[test]
    fn display_is_readable() {
        let p = CharPoly::from_terms(2, [(0, vec![1, 0], 1), (1, vec![1, 1], -2)]).unwrap();
        assert_eq!(p.to_string(), "x1 - 2*q*x1*x2");
    }
}
