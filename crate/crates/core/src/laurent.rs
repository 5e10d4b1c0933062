//! Exact multivariate Laurent polynomials over the integers.
//!
//! Elements of `Z[x_1^±, ..., x_n^±]`, the integral group ring of a free abelian
//! group of rank `n`. Every other module builds on this type: Alexander
//! matrices, Fitting ideal generators, Magnus module coordinates and the
//! polynomial lift used by the Groebner engine.
//!
//! Terms live in a `BTreeMap` keyed by [`ExpVec`], whose `Ord` is graded
//! reverse lexicographic, so two polynomials with the same terms are
//! structurally identical and render to the same string.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LaurentError {
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },
}

/// Exponent vector of a Laurent monomial. Entries may be negative.
///
/// Ordered graded reverse lexicographically: total degree first, then the
/// vector with the smaller entry in the last differing position is larger.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExpVec(Vec<i32>);

impl ExpVec {
    pub fn new(entries: Vec<i32>) -> Self {
        ExpVec(entries)
    }

    pub fn zero(rank: usize) -> Self {
        ExpVec(vec![0; rank])
    }

    pub fn unit(rank: usize, i: usize) -> Self {
        let mut e = vec![0; rank];
        e[i] = 1;
        ExpVec(e)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[i32] {
        &self.0
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&e| e >= 0)
    }

    pub fn add(&self, other: &ExpVec) -> ExpVec {
        ExpVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &ExpVec) -> ExpVec {
        ExpVec(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> ExpVec {
        ExpVec(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, k: i32) -> ExpVec {
        ExpVec(self.0.iter().map(|a| a * k).collect())
    }

    /// Componentwise `self >= other`, i.e. `x^other` divides `x^self` as polynomials.
    pub fn divides_into(&self, other: &ExpVec) -> bool {
        other.0.iter().zip(&self.0).all(|(d, n)| d <= n)
    }

    pub fn lcm(&self, other: &ExpVec) -> ExpVec {
        ExpVec(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn componentwise_min(&self, other: &ExpVec) -> ExpVec {
        ExpVec(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }
}

impl Ord for ExpVec {
    fn cmp(&self, other: &Self) -> Ordering {
        grevlex(&self.0, &other.0)
    }
}

impl PartialOrd for ExpVec {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Graded reverse lexicographic comparison of exponent slices.
pub fn grevlex(a: &[i32], b: &[i32]) -> Ordering {
    let da: i64 = a.iter().map(|&e| e as i64).sum();
    let db: i64 = b.iter().map(|&e| e as i64).sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        a.len().cmp(&b.len())
    })
}

/// Lexicographic comparison, first variable most significant.
pub fn lex(a: &[i32], b: &[i32]) -> Ordering {
    a.cmp(b)
}

/// Variable names used when rendering at a given rank.
pub fn default_var_names(rank: usize) -> Vec<String> {
    const SMALL: [&str; 4] = ["x", "y", "z", "w"];
    if rank <= SMALL.len() {
        SMALL[..rank].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=rank).map(|i| format!("x{i}")).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    rank: usize,
    terms: BTreeMap<ExpVec, BigInt>,
}

impl LaurentPoly {
    pub fn zero(rank: usize) -> Self {
        LaurentPoly {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(rank: usize) -> Self {
        Self::constant(rank, 1)
    }

    pub fn constant(rank: usize, c: impl Into<BigInt>) -> Self {
        Self::monomial(ExpVec::zero(rank), c)
    }

    pub fn monomial(exp: ExpVec, c: impl Into<BigInt>) -> Self {
        let rank = exp.rank();
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        LaurentPoly { rank, terms }
    }

    /// The variable `x_i` (0-based).
    pub fn var(rank: usize, i: usize) -> Self {
        Self::monomial(ExpVec::unit(rank, i), 1)
    }

    /// `x_i - 1`, a generator of the augmentation ideal.
    pub fn var_minus_one(rank: usize, i: usize) -> Self {
        &Self::var(rank, i) - &Self::one(rank)
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates and dropping zeros.
    pub fn from_terms<I>(rank: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (ExpVec, BigInt)>,
    {
        let mut p = LaurentPoly::zero(rank);
        for (e, c) in terms {
            assert_eq!(e.rank(), rank, "exponent vector of wrong rank");
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: ExpVec, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(e, c)| e.is_zero() && c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ExpVec, &BigInt)> {
        self.terms.iter().rev()
    }

    pub fn leading_term(&self) -> Option<(&ExpVec, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn coeff(&self, e: &ExpVec) -> BigInt {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    /// True when every exponent is nonnegative.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(ExpVec::is_nonnegative)
    }

    /// True for `c * x^e` with `c = ±1`, the units of the Laurent ring.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().all(|c| c.abs().is_one())
    }

    fn check_rank(&self, other: &LaurentPoly) -> Result<(), LaurentError> {
        if self.rank != other.rank {
            return Err(LaurentError::RankMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &LaurentPoly) -> Result<LaurentPoly, LaurentError> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &LaurentPoly) -> Result<LaurentPoly, LaurentError> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &LaurentPoly) -> Result<LaurentPoly, LaurentError> {
        self.check_rank(other)?;
        let mut out = LaurentPoly::zero(self.rank);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term(ea.add(eb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, k: &BigInt) -> LaurentPoly {
        if k.is_zero() {
            return LaurentPoly::zero(self.rank);
        }
        LaurentPoly {
            rank: self.rank,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    /// Multiplication by the monomial `x^shift`.
    pub fn shift(&self, shift: &ExpVec) -> LaurentPoly {
        assert_eq!(shift.rank(), self.rank, "shift of wrong rank");
        LaurentPoly {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.add(shift), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> LaurentPoly {
        let mut acc = LaurentPoly::one(self.rank);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// The augmentation map `x_i -> 1`: sum of all coefficients.
    pub fn augment(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Per-variable minimum exponent, or `None` for the zero polynomial.
    pub fn min_exponents(&self) -> Option<ExpVec> {
        let mut it = self.terms.keys();
        let first = it.next()?.clone();
        Some(it.fold(first, |acc, e| acc.componentwise_min(e)))
    }

    /// Returns `(x^e * self, e)` with `e >= 0` the smallest shift making every
    /// exponent nonnegative. Polynomials are returned unshifted.
    pub fn clear_denominators(&self) -> (LaurentPoly, ExpVec) {
        match self.min_exponents() {
            None => (self.clone(), ExpVec::zero(self.rank)),
            Some(m) => {
                let e = ExpVec(m.0.iter().map(|&k| (-k).max(0)).collect());
                (self.shift(&e), e)
            }
        }
    }

    /// Shifts so that every variable has minimum exponent exactly zero.
    fn normalize_shift(&self) -> (LaurentPoly, ExpVec) {
        match self.min_exponents() {
            None => (self.clone(), ExpVec::zero(self.rank)),
            Some(m) => {
                let e = m.neg();
                (self.shift(&e), e)
            }
        }
    }

    /// Exact quotient `self / d` in the Laurent ring, or `None` when `d` does not divide.
    pub fn exact_div(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        assert_eq!(self.rank, d.rank, "rank mismatch in exact_div");
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(LaurentPoly::zero(self.rank));
        }
        // Normalizing shifts is multiplicative over a domain, so the quotient
        // of the normalized forms is itself a normalized polynomial.
        let (num, e_num) = self.normalize_shift();
        let (den, e_den) = d.normalize_shift();
        let (lex_den, lc_den) = lex_leading(&den);
        let mut rem = num;
        let mut quot = LaurentPoly::zero(self.rank);
        while !rem.is_zero() {
            let (lex_rem, lc_rem) = lex_leading(&rem);
            if !lex_rem.divides_into(&lex_den) {
                return None;
            }
            let (q, r) = lc_rem.div_rem(&lc_den);
            if !r.is_zero() {
                return None;
            }
            let step = LaurentPoly::monomial(lex_rem.sub(&lex_den), q);
            rem = &rem - &(&step * &den);
            quot = &quot + &step;
        }
        Some(quot.shift(&e_den.sub(&e_num)))
    }

    /// Applies `f` to every exponent vector, producing a polynomial of rank `rank`.
    pub fn map_exponents<F>(&self, rank: usize, f: F) -> LaurentPoly
    where
        F: Fn(&ExpVec) -> ExpVec,
    {
        LaurentPoly::from_terms(rank, self.terms.iter().map(|(e, c)| (f(e), c.clone())))
    }

    /// Evaluation at a point of `(Z/m)^n`. Returns `None` if some variable with a
    /// negative exponent is not invertible modulo `m`. Requires `m >= 1`.
    pub fn eval_mod(&self, point: &[u64], modulus: u64) -> Option<u64> {
        assert_eq!(point.len(), self.rank);
        assert!(modulus >= 1);
        let m = modulus as u128;
        let mut inverses = Vec::with_capacity(point.len());
        for &a in point {
            inverses.push(mod_inverse(a % modulus, modulus));
        }
        let mut acc: u128 = 0;
        for (e, c) in &self.terms {
            let cm = c.mod_floor(&BigInt::from(modulus)).to_u128().unwrap_or(0);
            let mut val = cm % m;
            for (i, &k) in e.entries().iter().enumerate() {
                let base = if k >= 0 {
                    (point[i] % modulus) as u128
                } else {
                    inverses[i]? as u128
                };
                val = val * pow_mod(base, k.unsigned_abs() as u64, m) % m;
            }
            acc = (acc + val) % m;
        }
        Some(acc as u64)
    }

    /// Evaluation at a point of `{±1}^n` over the integers.
    pub fn eval_signs(&self, signs: &[i8]) -> BigInt {
        assert_eq!(signs.len(), self.rank);
        let mut acc = BigInt::zero();
        for (e, c) in &self.terms {
            let negative = e
                .entries()
                .iter()
                .zip(signs)
                .filter(|(k, s)| **s < 0 && k.rem_euclid(2) == 1)
                .count()
                % 2
                == 1;
            if negative {
                acc -= c;
            } else {
                acc += c;
            }
        }
        acc
    }

    /// Renders with the given variable names, in descending grevlex order.
    pub fn render(&self, names: &[String]) -> String {
        assert!(names.len() >= self.rank, "not enough variable names");
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (e, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mut factors = Vec::new();
            for (i, &k) in e.entries().iter().enumerate() {
                match k {
                    0 => {}
                    1 => factors.push(names[i].clone()),
                    _ => factors.push(format!("{}^{}", names[i], k)),
                }
            }
            if factors.is_empty() {
                out.push_str(&abs.to_string());
            } else {
                if !abs.is_one() {
                    out.push_str(&abs.to_string());
                    out.push('*');
                }
                out.push_str(&factors.join("*"));
            }
        }
        out
    }

    /// Parses the text grammar produced by [`LaurentPoly::render`], e.g. `1 - x*y^-1 + 3*y`.
    pub fn parse(text: &str, names: &[String]) -> Result<LaurentPoly, LaurentError> {
        Parser {
            chars: text.chars().collect(),
            pos: 0,
            names,
        }
        .parse_poly()
    }
}

fn lex_leading(p: &LaurentPoly) -> (ExpVec, BigInt) {
    let (e, c) = p
        .terms
        .iter()
        .max_by(|a, b| lex(a.0.entries(), b.0.entries()))
        .expect("nonzero polynomial");
    (e.clone(), c.clone())
}

fn pow_mod(mut base: u128, mut exp: u64, m: u128) -> u128 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    let g = (a as i128).extended_gcd(&(m as i128));
    if g.gcd != 1 {
        return None;
    }
    Some(g.x.rem_euclid(m as i128) as u64)
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    names: &'a [String],
}

impl Parser<'_> {
    fn rank(&self) -> usize {
        self.names.len()
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, LaurentError> {
        Err(LaurentError::Parse {
            column: self.pos + 1,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn parse_poly(&mut self) -> Result<LaurentPoly, LaurentError> {
        let mut acc = LaurentPoly::zero(self.rank());
        self.skip_ws();
        let mut negative = false;
        if let Some(c @ ('+' | '-')) = self.peek() {
            negative = c == '-';
            self.pos += 1;
        }
        loop {
            self.skip_ws();
            let (e, mut c) = self.parse_term()?;
            if negative {
                c = -c;
            }
            acc.add_term(e, c);
            self.skip_ws();
            match self.peek() {
                None => return Ok(acc),
                Some('+') => negative = false,
                Some('-') => negative = true,
                Some(ch) => return self.err(format!("unexpected '{ch}'")),
            }
            self.pos += 1;
        }
    }

    fn parse_uint(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().ok()
    }

    fn parse_term(&mut self) -> Result<(ExpVec, BigInt), LaurentError> {
        let mut exp = vec![0i32; self.rank()];
        let coeff = self.parse_uint();
        let mut need_factor = coeff.is_none();
        loop {
            self.skip_ws();
            if !need_factor {
                if self.peek() == Some('*') {
                    self.pos += 1;
                    self.skip_ws();
                } else if coeff.is_some()
                    && exp.iter().all(|&k| k == 0)
                    && self.peek().is_some_and(|c| c.is_alphabetic())
                {
                    // `3y` without an explicit `*`
                } else {
                    break;
                }
            }
            let (var, k) = self.parse_factor()?;
            exp[var] += k;
            need_factor = false;
        }
        Ok((ExpVec(exp), coeff.unwrap_or_else(BigInt::one)))
    }

    fn parse_factor(&mut self) -> Result<(usize, i32), LaurentError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_alphanumeric() || c == '_') {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a variable or integer");
        }
        let name: String = self.chars[start..self.pos].iter().collect();
        let Some(var) = self.names.iter().position(|n| *n == name) else {
            self.pos = start;
            return self.err(format!("unknown variable '{name}'"));
        };
        self.skip_ws();
        let mut k = 1i32;
        if self.peek() == Some('^') {
            self.pos += 1;
            self.skip_ws();
            let neg = if self.peek() == Some('-') {
                self.pos += 1;
                true
            } else {
                false
            };
            let Some(v) = self.parse_uint() else {
                return self.err("expected exponent");
            };
            let Some(v) = v.to_i32() else {
                return self.err("exponent out of range");
            };
            k = if neg { -v } else { v };
        }
        Ok((var, k))
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&default_var_names(self.rank)))
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_add(rhs).expect("rank mismatch in addition")
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_sub(rhs).expect("rank mismatch in subtraction")
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_mul(rhs).expect("rank mismatch in multiplication")
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            rank: self.rank,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names2() -> Vec<String> {
        default_var_names(2)
    }

    fn p(s: &str) -> LaurentPoly {
        LaurentPoly::parse(s, &names2()).unwrap()
    }

    #[test]
    fn addition_examples() {
        assert_eq!(&p("x + 1") + &p("-1"), p("x"));
        let q = p("3*x^2*y^-1 - 7");
        assert_eq!(&q + &LaurentPoly::zero(2), q);
        assert!((&p("1 - y") + &p("y - 1")).is_zero());
    }

    #[test]
    fn multiplication_examples() {
        assert!((&p("x") * &p("x^-1")).is_one());
        assert_eq!(&p("1 - x") * &p("1 - y"), p("1 - x - y + x*y"));
        let zero = &p("1 - y") + &p("y - 1");
        assert!((&p("x - 1") * &zero).is_zero());
    }

    #[test]
    fn rank_mismatch_is_an_error() {
        let a = LaurentPoly::one(2);
        let b = LaurentPoly::one(3);
        assert_eq!(
            a.try_add(&b),
            Err(LaurentError::RankMismatch { left: 2, right: 3 })
        );
        assert!(a.try_mul(&b).is_err());
    }

    #[test]
    fn augmentation_examples() {
        assert_eq!(p("x - 1").augment(), BigInt::zero());
        assert_eq!(p("1 - x - y + x*y").augment(), BigInt::zero());
        assert_eq!(p("5").augment(), BigInt::from(5));
    }

    #[test]
    fn clear_denominators_examples() {
        let (q, e) = p("x^-1*y + 1").clear_denominators();
        assert_eq!(q, p("y + x"));
        assert_eq!(e, ExpVec::new(vec![1, 0]));
        let (q, e) = LaurentPoly::zero(2).clear_denominators();
        assert!(q.is_zero());
        assert_eq!(e, ExpVec::zero(2));
        let (q, e) = p("x^2").clear_denominators();
        assert_eq!(q, p("x^2"));
        assert_eq!(e, ExpVec::zero(2));
    }

    #[test]
    fn render_is_canonical() {
        assert_eq!(p("x*y - x - y + 1").to_string(), "x*y - x - y + 1");
        assert_eq!(p("1 - x*y^-1 + 3*y").to_string(), "3*y - x*y^-1 + 1");
        assert_eq!(p("-1").to_string(), "-1");
        assert_eq!(LaurentPoly::zero(2).to_string(), "0");
        assert_eq!(p("2x").to_string(), "2*x");
    }

    #[test]
    fn parse_errors_report_column() {
        match LaurentPoly::parse("x + q", &names2()) {
            Err(LaurentError::Parse { column, .. }) => assert_eq!(column, 5),
            other => panic!("unexpected {other:?}"),
        }
        assert!(LaurentPoly::parse("x +", &names2()).is_err());
        assert!(LaurentPoly::parse("x^", &names2()).is_err());
        assert!(LaurentPoly::parse("x ) 1", &names2()).is_err());
    }

    #[test]
    fn exact_division() {
        let a = p("1 - y");
        let b = p("x^-2 + 3*x*y - 4");
        let prod = &a * &b;
        assert_eq!(prod.exact_div(&a), Some(b.clone()));
        assert_eq!(prod.exact_div(&b), Some(a));
        assert_eq!(p("x + 1").exact_div(&p("x - 1")), None);
        assert_eq!(p("3*x").exact_div(&p("2")), None);
        assert_eq!(p("x^-3*y").exact_div(&p("x*y^2")), Some(p("x^-4*y^-1")));
    }

    #[test]
    fn evaluation() {
        let q = p("x*y - x - y + 1");
        assert_eq!(q.eval_mod(&[1, 1], 7), Some(0));
        assert_eq!(p("x^-1 + 1").eval_mod(&[2, 0], 5), Some(4));
        assert_eq!(p("x^-1").eval_mod(&[2, 0], 4), None);
        assert_eq!(p("x^-1 - 3*y^3").eval_signs(&[-1, -1]), BigInt::from(2));
    }
}
