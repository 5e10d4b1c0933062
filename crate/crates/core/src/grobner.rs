//! Strong Groebner bases over the integers.
//!
//! Buchberger-style completion over `Z[x_1, ..., x_k]` using both S-polynomials
//! and G-polynomials (the gcd combination of two leading terms). The resulting
//! basis is strong: every nonzero ideal member has a leading term divisible,
//! coefficient included, by the leading term of some basis element, so ideal
//! membership is a single normal-form computation.
//!
//! Unit-ideal questions in the Laurent ring are answered by adjoining a fresh
//! variable `t` together with `t * x_1 * ... * x_n - 1`.

use std::cmp::{Ordering, Reverse};
use std::collections::BinaryHeap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::laurent::{grevlex, lex, ExpVec, LaurentPoly};

/// Default number of reduction steps before a computation gives up.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MonomialOrder {
    GrevLex,
    Lex,
}

impl MonomialOrder {
    pub fn cmp(self, a: &ExpVec, b: &ExpVec) -> Ordering {
        match self {
            MonomialOrder::GrevLex => grevlex(a.entries(), b.entries()),
            MonomialOrder::Lex => lex(a.entries(), b.entries()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error("step budget of {limit} exceeded")]
    BudgetExceeded { limit: u64 },
    #[error("generator {index} has a negative exponent")]
    NotPolynomial { index: usize },
    #[error("generator {index} has rank {found}, expected {expected}")]
    RankMismatch {
        index: usize,
        expected: usize,
        found: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroebnerConfig {
    pub order: MonomialOrder,
    pub budget: u64,
    /// Record, for every basis element, its expression in the input generators.
    pub track_cofactors: bool,
}

impl Default for GroebnerConfig {
    fn default() -> Self {
        GroebnerConfig {
            order: MonomialOrder::GrevLex,
            budget: DEFAULT_BUDGET,
            track_cofactors: false,
        }
    }
}

/// An ideal of `Z[x_1, ..., x_k]`, given by polynomial generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyIdeal {
    rank: usize,
    generators: Vec<LaurentPoly>,
}

impl PolyIdeal {
    /// Zero generators are dropped; negative exponents are rejected.
    pub fn new(rank: usize, generators: Vec<LaurentPoly>) -> Result<Self, GroebnerError> {
        for (index, g) in generators.iter().enumerate() {
            if g.rank() != rank {
                return Err(GroebnerError::RankMismatch {
                    index,
                    expected: rank,
                    found: g.rank(),
                });
            }
            if !g.is_polynomial() {
                return Err(GroebnerError::NotPolynomial { index });
            }
        }
        Ok(PolyIdeal {
            rank,
            generators: generators.into_iter().filter(|g| !g.is_zero()).collect(),
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn generators(&self) -> &[LaurentPoly] {
        &self.generators
    }
}

/// Sparse polynomial with terms sorted ascending in a fixed monomial order;
/// the leading term is the last entry.
#[derive(Debug, Clone, PartialEq, Eq)]
struct SortedPoly {
    terms: Vec<(ExpVec, BigInt)>,
}

impl SortedPoly {
    fn zero() -> Self {
        SortedPoly { terms: Vec::new() }
    }

    fn from_laurent(p: &LaurentPoly, order: MonomialOrder) -> Self {
        let mut terms: Vec<_> = p.terms().map(|(e, c)| (e.clone(), c.clone())).collect();
        terms.sort_by(|a, b| order.cmp(&a.0, &b.0));
        SortedPoly { terms }
    }

    fn monomial(e: ExpVec, c: BigInt) -> Self {
        SortedPoly {
            terms: vec![(e, c)],
        }
    }

    fn to_laurent(&self, rank: usize) -> LaurentPoly {
        LaurentPoly::from_terms(rank, self.terms.iter().cloned())
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lead(&self) -> Option<&(ExpVec, BigInt)> {
        self.terms.last()
    }

    fn negate(&mut self) {
        for (_, c) in &mut self.terms {
            *c = -&*c;
        }
    }

    /// `self + c * x^shift * other`.
    fn add_scaled(
        &self,
        c: &BigInt,
        shift: &ExpVec,
        other: &SortedPoly,
        order: MonomialOrder,
    ) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other
            .terms
            .iter()
            .map(|(e, k)| (e.add(shift), k * c))
            .peekable();
        loop {
            let ord = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Less,
                (None, Some(_)) => Ordering::Greater,
                (Some(x), Some(y)) => order.cmp(&x.0, &y.0),
            };
            match ord {
                Ordering::Less => out.push(a.next().unwrap().clone()),
                Ordering::Greater => out.push(b.next().unwrap()),
                Ordering::Equal => {
                    let (e, x) = a.next().unwrap();
                    let (_, y) = b.next().unwrap();
                    let s = x + y;
                    if !s.is_zero() {
                        out.push((e.clone(), s));
                    }
                }
            }
        }
        SortedPoly { terms: out }
    }
}

#[derive(Debug, Clone)]
struct Element {
    poly: SortedPoly,
    /// `poly = sum cof[i] * generator[i]`, when tracking.
    cof: Vec<SortedPoly>,
}

struct Engine {
    order: MonomialOrder,
    budget: u64,
    steps: u64,
    track: bool,
}

impl Engine {
    fn tick(&mut self) -> Result<(), GroebnerError> {
        self.steps += 1;
        if self.steps > self.budget {
            return Err(GroebnerError::BudgetExceeded { limit: self.budget });
        }
        Ok(())
    }

    /// Full strong normal form of `p` with respect to `basis`. Returns the
    /// remainder and, when tracking, cofactors `acc` with
    /// `p_in = remainder + sum acc[i] * generator[i]` (plus `p`'s own cofactors).
    fn reduce(&mut self, mut p: Element, basis: &[Element]) -> Result<Element, GroebnerError> {
        let mut rem: Vec<(ExpVec, BigInt)> = Vec::new();
        'outer: while let Some((lm, lc)) = p.poly.lead().cloned() {
            // Prefer an exact reducer; otherwise shrink the leading coefficient
            // by division with remainder against a smaller one.
            let mut partial: Option<usize> = None;
            for (k, g) in basis.iter().enumerate() {
                let (glm, glc) = g.poly.lead().expect("basis elements are nonzero");
                if !lm.divides_into(glm) {
                    continue;
                }
                if lc.is_multiple_of(glc) {
                    self.tick()?;
                    let q = -(&lc / glc);
                    self.apply(&mut p, &q, &lm.sub(glm), g);
                    continue 'outer;
                }
                if partial.is_none() && glc.abs() < lc.abs() {
                    partial = Some(k);
                }
            }
            if let Some(k) = partial {
                let g = &basis[k];
                let (glm, glc) = g.poly.lead().unwrap();
                // glc > 0 after sign normalization, so the remainder lies in [0, glc)
                let q = lc.div_floor(glc);
                if !q.is_zero() {
                    self.tick()?;
                    self.apply(&mut p, &-q, &lm.sub(glm), g);
                    continue;
                }
            }
            let t = p.poly.terms.pop().unwrap();
            rem.push(t);
        }
        rem.reverse();
        p.poly = SortedPoly { terms: rem };
        Ok(p)
    }

    fn apply(&self, p: &mut Element, q: &BigInt, shift: &ExpVec, g: &Element) {
        p.poly = p.poly.add_scaled(q, shift, &g.poly, self.order);
        if self.track {
            for (pc, gc) in p.cof.iter_mut().zip(&g.cof) {
                *pc = pc.add_scaled(q, shift, gc, self.order);
            }
        }
    }

    fn combine(
        &self,
        a: &BigInt,
        sa: &ExpVec,
        f: &Element,
        b: &BigInt,
        sb: &ExpVec,
        g: &Element,
    ) -> Element {
        let poly = SortedPoly::zero()
            .add_scaled(a, sa, &f.poly, self.order)
            .add_scaled(b, sb, &g.poly, self.order);
        let cof = if self.track {
            f.cof
                .iter()
                .zip(&g.cof)
                .map(|(x, y)| {
                    SortedPoly::zero()
                        .add_scaled(a, sa, x, self.order)
                        .add_scaled(b, sb, y, self.order)
                })
                .collect()
        } else {
            Vec::new()
        };
        Element { poly, cof }
    }
}

fn normalize_sign(e: &mut Element) {
    if e.poly.lead().is_some_and(|(_, c)| c.is_negative()) {
        e.poly.negate();
        for c in &mut e.cof {
            c.negate();
        }
    }
}

fn is_unit_constant(e: &Element) -> bool {
    e.poly.terms.len() == 1 && e.poly.terms[0].0.is_zero() && e.poly.terms[0].1.abs().is_one()
}

/// A strong Groebner basis, minimal: no leading term is strongly divisible by another.
#[derive(Debug, Clone)]
pub struct StrongBasis {
    rank: usize,
    order: MonomialOrder,
    elements: Vec<Element>,
    num_generators: usize,
    tracked: bool,
    steps: u64,
}

impl StrongBasis {
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Reduction steps spent building the basis.
    pub fn steps_used(&self) -> u64 {
        self.steps
    }

    pub fn elements(&self) -> Vec<LaurentPoly> {
        self.elements
            .iter()
            .map(|e| e.poly.to_laurent(self.rank))
            .collect()
    }

    /// Cofactors expressing basis element `i` in the input generators.
    pub fn element_cofactors(&self, i: usize) -> Option<Vec<LaurentPoly>> {
        if !self.tracked {
            return None;
        }
        Some(
            self.elements[i]
                .cof
                .iter()
                .map(|c| c.to_laurent(self.rank))
                .collect(),
        )
    }

    fn seed(&self, p: &LaurentPoly) -> Element {
        assert_eq!(p.rank(), self.rank, "rank mismatch in reduce");
        assert!(p.is_polynomial(), "reduce expects a polynomial");
        Element {
            poly: SortedPoly::from_laurent(p, self.order),
            cof: if self.tracked {
                vec![SortedPoly::zero(); self.num_generators]
            } else {
                Vec::new()
            },
        }
    }

    /// Strong normal form of `p`; zero exactly when `p` lies in the ideal.
    pub fn reduce(&self, p: &LaurentPoly) -> LaurentPoly {
        self.reduce_tracked(p).0
    }

    /// Normal form together with cofactors `c` such that
    /// `p = normal_form - sum c[i] * generator[i]` when the basis was tracked.
    pub fn reduce_tracked(&self, p: &LaurentPoly) -> (LaurentPoly, Option<Vec<LaurentPoly>>) {
        let mut engine = Engine {
            order: self.order,
            budget: u64::MAX,
            steps: 0,
            track: self.tracked,
        };
        let out = engine
            .reduce(self.seed(p), &self.elements)
            .expect("unbounded reduction cannot exceed its budget");
        let cof = self
            .tracked
            .then(|| out.cof.iter().map(|c| c.to_laurent(self.rank)).collect());
        (out.poly.to_laurent(self.rank), cof)
    }

    pub fn contains(&self, p: &LaurentPoly) -> bool {
        self.reduce(p).is_zero()
    }

    pub fn contains_one(&self) -> bool {
        self.contains(&LaurentPoly::one(self.rank))
    }

    /// Cofactors `c` with `sum c[i] * generator[i] = 1`, if the ideal is the unit
    /// ideal and the basis was tracked.
    pub fn unit_cofactors(&self) -> Option<Vec<LaurentPoly>> {
        let (nf, cof) = self.reduce_tracked(&LaurentPoly::one(self.rank));
        if !nf.is_zero() {
            return None;
        }
        // 1 - 0 = -sum cof * gen
        cof.map(|c| c.iter().map(|x| -x).collect())
    }
}

/// Computes a minimal strong Groebner basis of `ideal`.
pub fn strong_groebner(
    ideal: &PolyIdeal,
    config: &GroebnerConfig,
) -> Result<StrongBasis, GroebnerError> {
    let order = config.order;
    let rank = ideal.rank;
    let ngens = ideal.generators.len();
    let mut engine = Engine {
        order,
        budget: config.budget,
        steps: 0,
        track: config.track_cofactors,
    };
    let finish = |elements: Vec<Element>, steps: u64| StrongBasis {
        rank,
        order,
        elements,
        num_generators: ngens,
        tracked: config.track_cofactors,
        steps,
    };

    let mut basis: Vec<Element> = Vec::new();
    for (i, g) in ideal.generators.iter().enumerate() {
        let cof = if config.track_cofactors {
            let mut v = vec![SortedPoly::zero(); ngens];
            v[i] = SortedPoly::monomial(ExpVec::zero(rank), BigInt::one());
            v
        } else {
            Vec::new()
        };
        let mut e = Element {
            poly: SortedPoly::from_laurent(g, order),
            cof,
        };
        normalize_sign(&mut e);
        if is_unit_constant(&e) {
            return Ok(finish(vec![e], engine.steps));
        }
        basis.push(e);
    }

    // Normal strategy: smallest lcm degree first, ties by creation order.
    let mut seq: u64 = 0;
    let mut pairs: BinaryHeap<Reverse<(i64, u64, usize, usize)>> = BinaryHeap::new();
    let lcm_degree = |a: &Element, b: &Element| {
        let (ea, _) = a.poly.lead().unwrap();
        let (eb, _) = b.poly.lead().unwrap();
        ea.lcm(eb).degree()
    };
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.push(Reverse((lcm_degree(&basis[i], &basis[j]), seq, i, j)));
            seq += 1;
        }
    }

    while let Some(Reverse((_, _, i, j))) = pairs.pop() {
        engine.tick()?;
        let (fe, fc) = basis[i].poly.lead().cloned().unwrap();
        let (ge, gc) = basis[j].poly.lead().cloned().unwrap();
        let m = fe.lcm(&ge);
        let sf = m.sub(&fe);
        let sg = m.sub(&ge);

        let mut candidates = Vec::with_capacity(2);
        let l = fc.lcm(&gc);
        candidates.push(engine.combine(&(&l / &fc), &sf, &basis[i], &-(&l / &gc), &sg, &basis[j]));
        if !fc.is_multiple_of(&gc) && !gc.is_multiple_of(&fc) {
            let eg = fc.extended_gcd(&gc);
            candidates.push(engine.combine(&eg.x, &sf, &basis[i], &eg.y, &sg, &basis[j]));
        }

        for cand in candidates {
            let mut h = engine.reduce(cand, &basis)?;
            if h.poly.is_zero() {
                continue;
            }
            normalize_sign(&mut h);
            if is_unit_constant(&h) {
                return Ok(finish(vec![h], engine.steps));
            }
            let new = basis.len();
            for (k, old) in basis.iter().enumerate() {
                pairs.push(Reverse((lcm_degree(old, &h), seq, k, new)));
                seq += 1;
            }
            basis.push(h);
        }
    }

    Ok(finish(minimalize(basis), engine.steps))
}

/// Drops elements whose leading term is strongly divisible by another's.
fn minimalize(basis: Vec<Element>) -> Vec<Element> {
    let leads: Vec<(ExpVec, BigInt)> = basis
        .iter()
        .map(|e| e.poly.lead().cloned().unwrap())
        .collect();
    let redundant = |i: usize| {
        let (ei, ci) = &leads[i];
        leads.iter().enumerate().any(|(j, (ej, cj))| {
            if j == i || !ei.divides_into(ej) || !ci.is_multiple_of(cj) {
                return false;
            }
            // equal leading terms: keep the earlier element
            !(ej == ei && ci.abs() == cj.abs()) || j < i
        })
    };
    let keep: Vec<bool> = (0..basis.len()).map(|i| !redundant(i)).collect();
    basis
        .into_iter()
        .zip(keep)
        .filter_map(|(e, k)| k.then_some(e))
        .collect()
}

/// Whether `ideal` is the unit ideal of `Z[x_1, ..., x_k]`.
pub fn contains_one(ideal: &PolyIdeal, config: &GroebnerConfig) -> Result<bool, GroebnerError> {
    Ok(strong_groebner(ideal, config)?.contains_one())
}

/// Result of a unit-ideal test in the Laurent ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitIdealOutcome {
    pub is_unit: bool,
    /// Laurent cofactors `c` with `sum c[i] * gens[i] = 1`, when requested and unit.
    pub cofactors: Option<Vec<LaurentPoly>>,
    pub steps: u64,
}

/// Decides whether `gens` generate the unit ideal of `Z[x_1^±, ..., x_n^±]`.
///
/// Each generator is shifted to a polynomial, a fresh last variable `t` is
/// adjoined together with `t * x_1 * ... * x_n - 1`, and the unit-ideal test is
/// run in `Z[x_1, ..., x_n, t]`.
pub fn laurent_unit_ideal(
    rank: usize,
    gens: &[LaurentPoly],
    config: &GroebnerConfig,
) -> Result<UnitIdealOutcome, GroebnerError> {
    for (index, g) in gens.iter().enumerate() {
        if g.rank() != rank {
            return Err(GroebnerError::RankMismatch {
                index,
                expected: rank,
                found: g.rank(),
            });
        }
    }
    let mut shifts = Vec::with_capacity(gens.len());
    let mut lifted = Vec::with_capacity(gens.len() + 1);
    let widen = |e: &ExpVec| {
        let mut v = e.entries().to_vec();
        v.push(0);
        ExpVec::new(v)
    };
    for g in gens {
        let (p, e) = g.clear_denominators();
        lifted.push(p.map_exponents(rank + 1, widen));
        shifts.push(e);
    }
    let t_x = LaurentPoly::monomial(ExpVec::new(vec![1; rank + 1]), 1);
    lifted.push(&t_x - &LaurentPoly::one(rank + 1));

    let ideal = PolyIdeal {
        rank: rank + 1,
        generators: lifted,
    };
    let basis = strong_groebner(&ideal, config)?;
    let steps = basis.steps_used();
    if !basis.contains_one() {
        return Ok(UnitIdealOutcome {
            is_unit: false,
            cofactors: None,
            steps,
        });
    }
    // Substitute t = (x_1 ... x_n)^-1; the Rabinowitsch term vanishes and each
    // lifted generator becomes x^shift * gen.
    let cofactors = basis.unit_cofactors().map(|cof| {
        let drop_t = |e: &ExpVec| {
            let v = e.entries();
            let t = v[rank];
            ExpVec::new(v[..rank].iter().map(|a| a - t).collect())
        };
        cof.iter()
            .take(gens.len())
            .zip(&shifts)
            .map(|(c, s)| c.map_exponents(rank, drop_t).shift(s))
            .collect()
    });
    Ok(UnitIdealOutcome {
        is_unit: true,
        cofactors,
        steps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::default_var_names;

    fn p(rank: usize, s: &str) -> LaurentPoly {
        LaurentPoly::parse(s, &default_var_names(rank)).unwrap()
    }

    fn ideal(rank: usize, gens: &[&str]) -> PolyIdeal {
        PolyIdeal::new(rank, gens.iter().map(|s| p(rank, s)).collect()).unwrap()
    }

    fn gb(rank: usize, gens: &[&str]) -> StrongBasis {
        strong_groebner(&ideal(rank, gens), &GroebnerConfig::default()).unwrap()
    }

    #[test]
    fn gcd_of_coefficients_appears() {
        let b = gb(1, &["2*x", "3*x"]);
        assert!(b.elements().contains(&p(1, "x")));
    }

    #[test]
    fn difference_gives_one() {
        let b = gb(1, &["x", "x - 1"]);
        assert!(b.elements().contains(&p(1, "1")));
        assert!(b.contains_one());
    }

    #[test]
    fn two_and_x() {
        let b = gb(1, &["2", "x"]);
        let mut els = b.elements();
        els.sort_by_key(|e| e.to_string());
        assert_eq!(els, vec![p(1, "2"), p(1, "x")]);
        assert!(!b.contains_one());
        assert_eq!(b.reduce(&p(1, "1")), p(1, "1"));
        assert!(b.reduce(&p(1, "6*x")).is_zero());
        assert!(b.reduce(&LaurentPoly::zero(1)).is_zero());
        // 1 is not in (2, x): x -> 0 into Z/2 kills both generators
        assert_eq!(p(1, "2").eval_mod(&[0], 2), Some(0));
        assert_eq!(p(1, "x").eval_mod(&[0], 2), Some(0));
    }

    #[test]
    fn contains_one_examples() {
        let cfg = GroebnerConfig::default();
        assert!(contains_one(&ideal(1, &["x", "x - 1"]), &cfg).unwrap());
        assert!(!contains_one(&ideal(1, &["2", "x"]), &cfg).unwrap());
        assert!(!contains_one(&ideal(1, &["0"]), &cfg).unwrap());
    }

    #[test]
    fn rejects_laurent_generators() {
        assert_eq!(
            PolyIdeal::new(1, vec![p(1, "x^-1")]),
            Err(GroebnerError::NotPolynomial { index: 0 })
        );
    }

    #[test]
    fn laurent_unit_examples() {
        let cfg = GroebnerConfig {
            track_cofactors: true,
            ..Default::default()
        };
        let out = laurent_unit_ideal(1, &[p(1, "x")], &cfg).unwrap();
        assert!(out.is_unit);
        let cof = out.cofactors.unwrap();
        assert!((&cof[0] * &p(1, "x")).is_one());

        assert!(
            !laurent_unit_ideal(2, &[p(2, "x - 1"), p(2, "y - 1")], &cfg)
                .unwrap()
                .is_unit
        );
        assert!(
            !laurent_unit_ideal(1, &[p(1, "2"), p(1, "x - 1")], &cfg)
                .unwrap()
                .is_unit
        );
        assert!(!laurent_unit_ideal(2, &[], &cfg).unwrap().is_unit);
    }

    #[test]
    fn laurent_unit_cofactors_reexpand_to_one() {
        let cfg = GroebnerConfig {
            track_cofactors: true,
            ..Default::default()
        };
        // 3 is in the ideal and mod 3 the only common zero has y = 0, not a unit.
        let gens = vec![p(2, "x^-1*y - 1 + 2*x"), p(2, "3*y^-2"), p(2, "x + y + 1")];
        let out = laurent_unit_ideal(2, &gens, &cfg).unwrap();
        assert!(out.is_unit);
        let cof = out.cofactors.unwrap();
        let total = cof
            .iter()
            .zip(&gens)
            .fold(LaurentPoly::zero(2), |acc, (c, g)| &acc + &(c * g));
        assert!(total.is_one());

        // x - 1 and x + 1 differ by 2; together with an odd generator they give 1.
        let gens = vec![p(1, "x - 1"), p(1, "x + 1"), p(1, "3")];
        let out = laurent_unit_ideal(1, &gens, &cfg).unwrap();
        assert!(out.is_unit);
        let cof = out.cofactors.unwrap();
        let total = cof
            .iter()
            .zip(&gens)
            .fold(LaurentPoly::zero(1), |acc, (c, g)| &acc + &(c * g));
        assert!(total.is_one());
    }

    #[test]
    fn budget_exhaustion_is_distinct() {
        let cfg = GroebnerConfig {
            budget: 3,
            ..Default::default()
        };
        let res = strong_groebner(
            &ideal(
                2,
                &["3*x^2*y - 2*y^3 + x", "5*x*y^2 - 7*x^3 + 1", "2*x*y - 3"],
            ),
            &cfg,
        );
        assert_eq!(res.unwrap_err(), GroebnerError::BudgetExceeded { limit: 3 });
    }

    #[test]
    fn tracked_basis_elements_are_combinations() {
        let gens = ["3*x^2*y - 2*y^3 + x", "6*x*y^2 - 4*x + 2", "4*y^2 - 2*x"];
        let cfg = GroebnerConfig {
            track_cofactors: true,
            ..Default::default()
        };
        let id = ideal(2, &gens);
        let b = strong_groebner(&id, &cfg).unwrap();
        for (i, el) in b.elements().iter().enumerate() {
            let cof = b.element_cofactors(i).unwrap();
            let total = cof
                .iter()
                .zip(id.generators())
                .fold(LaurentPoly::zero(2), |acc, (c, g)| &acc + &(c * g));
            assert_eq!(&total, el);
        }
    }

    #[test]
    fn basis_is_minimal() {
        let b = gb(2, &["2*x*y - 4", "4*x*y - 8", "6*x^2*y - 3*x + y"]);
        let els = b.elements();
        for (i, a) in els.iter().enumerate() {
            for (j, c) in els.iter().enumerate() {
                if i == j {
                    continue;
                }
                let (ea, ca) = a.leading_term().unwrap();
                let (ec, cc) = c.leading_term().unwrap();
                assert!(
                    !(ea.divides_into(ec) && ca.is_multiple_of(cc)),
                    "{a} reducible by {c}"
                );
            }
        }
    }
}
