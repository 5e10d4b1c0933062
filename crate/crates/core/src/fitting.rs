//! Freeness of a finitely presented module over the Laurent ring, decided
//! through Fitting ideals.
//!
//! For `N = coker(R^r -> R^g)` the ideal `Fitt_i(N)` is generated by the
//! `(g - i)`-minors of the presentation matrix. `N` is projective of constant
//! rank `n` exactly when `Fitt_{n-1}(N) = 0` and `Fitt_n(N) = R`. Finitely
//! generated projectives over a Laurent polynomial ring with integer
//! coefficients are free (Quillen-Suslin), so these two tests decide whether
//! `N` is free of rank `n`. No basis is constructed.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::grobner::{laurent_unit_ideal, GroebnerConfig, GroebnerError, MonomialOrder};
use crate::laurent::{default_var_names, LaurentPoly};
use crate::presentations::PresMatrix;

/// Above this size determinants switch from cofactor expansion to Bareiss.
const COFACTOR_LIMIT: usize = 4;

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k > n {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return out;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Exact determinant of a square matrix over the Laurent ring of rank `rank`.
pub fn determinant(m: &[Vec<LaurentPoly>], rank: usize) -> LaurentPoly {
    let n = m.len();
    if n == 0 {
        return LaurentPoly::one(rank);
    }
    if n <= COFACTOR_LIMIT {
        cofactor_det(m, rank)
    } else {
        bareiss_det(m.to_vec(), rank)
    }
}

fn cofactor_det(m: &[Vec<LaurentPoly>], rank: usize) -> LaurentPoly {
    let n = m.len();
    match n {
        0 => LaurentPoly::one(rank),
        1 => m[0][0].clone(),
        2 => &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0]),
        _ => {
            let mut acc = LaurentPoly::zero(rank);
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let sub: Vec<Vec<LaurentPoly>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, p)| p.clone())
                            .collect()
                    })
                    .collect();
                let term = &m[0][j] * &cofactor_det(&sub, rank);
                acc = if j % 2 == 0 {
                    &acc + &term
                } else {
                    &acc - &term
                };
            }
            acc
        }
    }
}

fn bareiss_det(mut a: Vec<Vec<LaurentPoly>>, rank: usize) -> LaurentPoly {
    let n = a.len();
    let mut negate = false;
    let mut prev = LaurentPoly::one(rank);
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return LaurentPoly::zero(rank);
            };
            a.swap(k, p);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num
                    .exact_div(&prev)
                    .expect("Bareiss step is an exact division");
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// A minor together with the rows and columns it uses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Minor {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub value: LaurentPoly,
}

/// All `s x s` minors, row subsets outermost, both in lexicographic order.
/// `s = 0` gives the single minor `1`; `s` beyond either dimension gives none.
pub fn indexed_minors(m: &PresMatrix, s: usize) -> Vec<Minor> {
    let row_sets = combinations(m.num_rows(), s);
    let col_sets = combinations(m.num_cols(), s);
    let jobs: Vec<(&Vec<usize>, &Vec<usize>)> = row_sets
        .iter()
        .flat_map(|r| col_sets.iter().map(move |c| (r, c)))
        .collect();
    jobs.par_iter()
        .map(|(rows, cols)| {
            let sub: Vec<Vec<LaurentPoly>> = rows
                .iter()
                .map(|&i| cols.iter().map(|&j| m.get(i, j).clone()).collect())
                .collect();
            Minor {
                rows: (*rows).clone(),
                cols: (*cols).clone(),
                value: determinant(&sub, m.rank()),
            }
        })
        .collect()
}

pub fn minors(m: &PresMatrix, s: usize) -> Vec<LaurentPoly> {
    indexed_minors(m, s)
        .into_iter()
        .map(|mi| mi.value)
        .collect()
}

/// Generators of `Fitt_i` of the cokernel, zero minors and repeats removed.
/// An empty list is the zero ideal.
pub fn fitting_ideal(m: &PresMatrix, i: usize) -> Vec<LaurentPoly> {
    let g = m.num_cols();
    if i >= g {
        return vec![LaurentPoly::one(m.rank())];
    }
    let mut out: Vec<LaurentPoly> = Vec::new();
    for p in minors(m, g - i) {
        if !p.is_zero() && !out.contains(&p) {
            out.push(p);
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Outcome {
    FreeOfRank,
    NotFree,
    AbelianizationObstruction,
    Inconclusive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FailingTest {
    /// `Fitt_{n-1}` has a nonzero generator.
    LowerFittingNonzero,
    /// `Fitt_n` is not the unit ideal.
    FittingNotUnit,
}

/// A ring map `x_i -> point_i` into `Z` (`modulus = 0`, point in `{±1}^n`)
/// or into `Z/modulus`, killing every listed generator but not `1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvaluationCertificate {
    pub modulus: u64,
    pub point: Vec<i64>,
}

impl EvaluationCertificate {
    pub fn evaluate(&self, p: &LaurentPoly) -> Option<BigInt> {
        if self.point.len() != p.rank() {
            return None;
        }
        if self.modulus == 0 {
            if self.point.iter().any(|a| a.abs() != 1) {
                return None;
            }
            let signs: Vec<i8> = self.point.iter().map(|&a| a as i8).collect();
            Some(p.eval_signs(&signs))
        } else {
            let pt: Vec<u64> = self
                .point
                .iter()
                .map(|a| a.rem_euclid(self.modulus as i64) as u64)
                .collect();
            p.eval_mod(&pt, self.modulus).map(BigInt::from)
        }
    }

    /// True if every generator maps to zero and the target ring is nonzero.
    pub fn kills(&self, gens: &[LaurentPoly]) -> bool {
        self.modulus != 1
            && gens
                .iter()
                .all(|g| self.evaluate(g).is_some_and(|v| v.is_zero()))
    }
}

const CERTIFICATE_PRIMES: [u64; 6] = [2, 3, 5, 7, 11, 13];
const CERTIFICATE_POINT_LIMIT: u64 = 20_000;

/// Searches for a ring map to `Z` or a small `Z/p` killing all of `gens`:
/// first sign points over `Z` (augmentation first), then unit points mod `p`.
pub fn find_evaluation_certificate(
    rank: usize,
    gens: &[LaurentPoly],
) -> Option<EvaluationCertificate> {
    if rank <= 12 {
        for mask in 0u32..(1 << rank) {
            let point: Vec<i64> = (0..rank)
                .map(|i| if mask >> i & 1 == 1 { -1 } else { 1 })
                .collect();
            let signs: Vec<i8> = point.iter().map(|&a| a as i8).collect();
            let g = gens
                .iter()
                .fold(BigInt::zero(), |acc, p| acc.gcd(&p.eval_signs(&signs)));
            if g.is_zero() {
                return Some(EvaluationCertificate { modulus: 0, point });
            }
            if !g.abs().is_one() {
                if let Some(q) = small_prime_factor(&g) {
                    return Some(EvaluationCertificate { modulus: q, point });
                }
            }
        }
    }
    for p in CERTIFICATE_PRIMES {
        let count = (p - 1).checked_pow(rank as u32);
        if count.is_none_or(|c| c > CERTIFICATE_POINT_LIMIT) {
            continue;
        }
        let count = count.unwrap();
        for idx in 0..count {
            let mut rest = idx;
            let point: Vec<u64> = (0..rank)
                .map(|_| {
                    let a = rest % (p - 1) + 1;
                    rest /= p - 1;
                    a
                })
                .collect();
            if gens.iter().all(|g| g.eval_mod(&point, p) == Some(0)) {
                return Some(EvaluationCertificate {
                    modulus: p,
                    point: point.into_iter().map(|a| a as i64).collect(),
                });
            }
        }
    }
    None
}

fn small_prime_factor(g: &BigInt) -> Option<u64> {
    let g = g.abs();
    (2u64..1000)
        .find(|&q| (&g % q).is_zero() && (2..q).all(|d| q % d != 0))
        .or_else(|| g.to_u64().filter(|&v| v > 1 && v < 1_000_000))
        .filter(|&q| (2..q).take_while(|d| d * d <= q).all(|d| q % d != 0))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// A nonzero minor of size `g - n + 1`.
    NonzeroMinor {
        rows: Vec<usize>,
        cols: Vec<usize>,
        minor: String,
    },
    /// `sum cofactors[i] * generators[i] = 1` in the Laurent ring.
    UnitCombination {
        generators: Vec<String>,
        cofactors: Vec<String>,
    },
    /// A ring map killing `Fitt_n` but not `1`.
    Evaluation {
        generators: Vec<String>,
        certificate: EvaluationCertificate,
    },
    Torsion {
        torsion: Vec<i64>,
    },
    Budget {
        limit: u64,
    },
}

/// The outcome of the freeness test; serializes as
/// `{outcome, rank, failing_test, witness, budget_used}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreenessVerdict {
    pub outcome: Outcome,
    pub rank: usize,
    pub failing_test: Option<FailingTest>,
    pub witness: Option<Witness>,
    pub budget_used: u64,
}

impl FreenessVerdict {
    pub fn abelianization_obstruction(torsion: Vec<i64>) -> Self {
        FreenessVerdict {
            outcome: Outcome::AbelianizationObstruction,
            rank: 0,
            failing_test: None,
            witness: Some(Witness::Torsion { torsion }),
            budget_used: 0,
        }
    }

    pub fn is_free(&self) -> bool {
        self.outcome == Outcome::FreeOfRank
    }

    /// Re-derives the witness from `m` and checks it.
    pub fn verify_witness(&self, m: &PresMatrix) -> bool {
        let names = default_var_names(m.rank());
        let parse = |s: &String| LaurentPoly::parse(s, &names).ok();
        match &self.witness {
            None => self.outcome == Outcome::NotFree,
            Some(Witness::NonzeroMinor { rows, cols, minor }) => {
                let sub: Vec<Vec<LaurentPoly>> = rows
                    .iter()
                    .map(|&i| cols.iter().map(|&j| m.get(i, j).clone()).collect())
                    .collect();
                let det = determinant(&sub, m.rank());
                rows.len() == cols.len()
                    && rows.len() + self.rank == m.num_cols() + 1
                    && !det.is_zero()
                    && parse(minor).as_ref() == Some(&det)
            }
            Some(Witness::UnitCombination {
                generators,
                cofactors,
            }) => {
                let gens: Option<Vec<_>> = generators.iter().map(parse).collect();
                let cofs: Option<Vec<_>> = cofactors.iter().map(parse).collect();
                let (Some(gens), Some(cofs)) = (gens, cofs) else {
                    return false;
                };
                gens == fitting_ideal(m, self.rank)
                    && gens.len() == cofs.len()
                    && cofs
                        .iter()
                        .zip(&gens)
                        .fold(LaurentPoly::zero(m.rank()), |acc, (c, g)| &acc + &(c * g))
                        .is_one()
            }
            Some(Witness::Evaluation {
                generators,
                certificate,
            }) => {
                let gens: Option<Vec<_>> = generators.iter().map(parse).collect();
                gens.is_some_and(|g| g == fitting_ideal(m, self.rank) && certificate.kills(&g))
            }
            Some(Witness::Torsion { torsion }) => !torsion.is_empty(),
            Some(Witness::Budget { .. }) => self.outcome == Outcome::Inconclusive,
        }
    }
}

/// Decides whether the cokernel of `m` is free of rank `n` over the Laurent
/// ring. `budget` bounds the Groebner computation.
pub fn freeness_verdict(m: &PresMatrix, n: usize, budget: u64) -> FreenessVerdict {
    let g = m.num_cols();
    let names = default_var_names(m.rank());
    let render = |p: &LaurentPoly| p.render(&names);
    let not_free = |test, witness, used| FreenessVerdict {
        outcome: Outcome::NotFree,
        rank: n,
        failing_test: Some(test),
        witness,
        budget_used: used,
    };

    // Fitt_{n-1} = 0: every (g - n + 1)-minor vanishes.
    if n >= 1 {
        let s = g + 1 - n.min(g + 1);
        let lower = if n > g {
            // Fitt_{n-1} with n - 1 >= g is the unit ideal.
            vec![Minor {
                rows: vec![],
                cols: vec![],
                value: LaurentPoly::one(m.rank()),
            }]
        } else {
            indexed_minors(m, s)
        };
        if let Some(bad) = lower.into_iter().find(|mi| !mi.value.is_zero()) {
            return not_free(
                FailingTest::LowerFittingNonzero,
                Some(Witness::NonzeroMinor {
                    rows: bad.rows,
                    cols: bad.cols,
                    minor: render(&bad.value),
                }),
                0,
            );
        }
    }

    // Fitt_n = R.
    let gens = fitting_ideal(m, n);
    let generators: Vec<String> = gens.iter().map(render).collect();
    let config = GroebnerConfig {
        order: MonomialOrder::GrevLex,
        budget,
        track_cofactors: true,
    };
    match laurent_unit_ideal(m.rank(), &gens, &config) {
        Err(GroebnerError::BudgetExceeded { limit }) => FreenessVerdict {
            outcome: Outcome::Inconclusive,
            rank: n,
            failing_test: None,
            witness: Some(Witness::Budget { limit }),
            budget_used: limit,
        },
        Err(e) => unreachable!("unit ideal test on well-formed input failed: {e}"),
        Ok(out) if out.is_unit => FreenessVerdict {
            outcome: Outcome::FreeOfRank,
            rank: n,
            failing_test: None,
            witness: out.cofactors.map(|c| Witness::UnitCombination {
                generators,
                cofactors: c.iter().map(render).collect(),
            }),
            budget_used: out.steps,
        },
        Ok(out) => {
            let witness = find_evaluation_certificate(m.rank(), &gens).map(|certificate| {
                Witness::Evaluation {
                    generators,
                    certificate,
                }
            });
            not_free(FailingTest::FittingNotUnit, witness, out.steps)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grobner::DEFAULT_BUDGET;

    fn p(s: &str) -> LaurentPoly {
        LaurentPoly::parse(s, &default_var_names(2)).unwrap()
    }

    fn row_matrix(entries: &[&str]) -> PresMatrix {
        PresMatrix::new(
            2,
            entries.len(),
            vec![entries.iter().map(|s| p(s)).collect()],
        )
        .unwrap()
    }

    #[test]
    fn combination_order() {
        assert_eq!(combinations(4, 2).len(), 6);
        assert_eq!(combinations(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(combinations(2, 0), vec![Vec::<usize>::new()]);
        assert!(combinations(1, 2).is_empty());
    }

    #[test]
    fn minor_examples() {
        assert!(minors(&PresMatrix::free(2, 2), 1).is_empty());
        assert_eq!(
            minors(&row_matrix(&["1 - y", "x - 1"]), 1),
            vec![p("1 - y"), p("x - 1")]
        );
        let diag = PresMatrix::new(
            2,
            2,
            vec![vec![p("x + 2"), p("0")], vec![p("0"), p("y^-1 - 3")]],
        )
        .unwrap();
        assert_eq!(minors(&diag, 2), vec![&p("x + 2") * &p("y^-1 - 3")]);
        assert_eq!(minors(&diag, 0), vec![LaurentPoly::one(2)]);
    }

    #[test]
    fn bareiss_agrees_with_cofactor() {
        let entries = [
            "x", "1 - y", "2", "x*y^-1", "0", "3*y", "y - 1", "x^2", "1", "0", "x + y", "-1", "1",
            "0", "x^-1", "2*y", "1", "x", "0", "y", "1 - x", "1", "x*y", "2", "3", "1", "0", "y^2",
            "-x", "1", "x - y", "2", "y", "1", "0", "x^-1*y",
        ];
        let m: Vec<Vec<LaurentPoly>> = entries
            .chunks(6)
            .map(|r| r.iter().map(|s| p(s)).collect())
            .collect();
        assert_eq!(bareiss_det(m.clone(), 2), cofactor_det(&m, 2));
        let five: Vec<Vec<LaurentPoly>> = m[..5].iter().map(|r| r[..5].to_vec()).collect();
        assert_eq!(bareiss_det(five.clone(), 2), cofactor_det(&five, 2));
    }

    #[test]
    fn fitting_examples() {
        assert_eq!(
            fitting_ideal(&PresMatrix::free(2, 2), 2),
            vec![LaurentPoly::one(2)]
        );
        let z2 = row_matrix(&["1 - y", "x - 1"]);
        assert_eq!(fitting_ideal(&z2, 1), vec![p("1 - y"), p("x - 1")]);
        assert!(fitting_ideal(&z2, 0).is_empty());
    }

    #[test]
    fn verdict_free_module() {
        let v = freeness_verdict(&PresMatrix::free(2, 2), 2, DEFAULT_BUDGET);
        assert_eq!(v.outcome, Outcome::FreeOfRank);
        assert!(v.verify_witness(&PresMatrix::free(2, 2)));
    }

    #[test]
    fn verdict_z2_rank_two() {
        let m = row_matrix(&["1 - y", "x - 1"]);
        let v = freeness_verdict(&m, 2, DEFAULT_BUDGET);
        assert_eq!(v.outcome, Outcome::NotFree);
        assert_eq!(v.failing_test, Some(FailingTest::LowerFittingNonzero));
        assert!(
            matches!(&v.witness, Some(Witness::NonzeroMinor { minor, .. }) if minor == "-y + 1")
        );
        assert!(v.verify_witness(&m));
    }

    #[test]
    fn verdict_z2_rank_one() {
        let m = row_matrix(&["1 - y", "x - 1"]);
        let v = freeness_verdict(&m, 1, DEFAULT_BUDGET);
        assert_eq!(v.outcome, Outcome::NotFree);
        assert_eq!(v.failing_test, Some(FailingTest::FittingNotUnit));
        match &v.witness {
            Some(Witness::Evaluation { certificate, .. }) => {
                assert_eq!(
                    certificate,
                    &EvaluationCertificate {
                        modulus: 0,
                        point: vec![1, 1]
                    }
                );
            }
            other => panic!("unexpected witness {other:?}"),
        }
        assert!(v.verify_witness(&m));
    }

    #[test]
    fn verdict_unimodular_row() {
        // coker of a row containing a unit is free of rank g - 1
        let m = row_matrix(&["x - 1", "y^-1", "2"]);
        let v = freeness_verdict(&m, 2, DEFAULT_BUDGET);
        assert_eq!(v.outcome, Outcome::FreeOfRank);
        assert!(v.verify_witness(&m));
        // (x - 1, y + 1, 3) is unimodular but contains no unit entry
        let m = row_matrix(&["x - 1", "x + 1", "3"]);
        let v = freeness_verdict(&m, 2, DEFAULT_BUDGET);
        assert_eq!(v.outcome, Outcome::FreeOfRank);
        assert!(v.verify_witness(&m));
    }

    #[test]
    fn rank_above_generator_count() {
        let v = freeness_verdict(&PresMatrix::free(2, 1), 2, DEFAULT_BUDGET);
        assert_eq!(v.outcome, Outcome::NotFree);
        assert_eq!(v.failing_test, Some(FailingTest::LowerFittingNonzero));
    }

    #[test]
    fn tiny_budget_is_inconclusive() {
        let m = row_matrix(&["x - 1", "x + 1", "3"]);
        let v = freeness_verdict(&m, 2, 1);
        assert_eq!(v.outcome, Outcome::Inconclusive);
        assert!(matches!(v.witness, Some(Witness::Budget { limit: 1 })));
    }

    #[test]
    fn certificate_modulo_p() {
        let gens = vec![p("2"), p("x - 1")];
        let c = find_evaluation_certificate(2, &gens).unwrap();
        assert_eq!(
            c,
            EvaluationCertificate {
                modulus: 2,
                point: vec![1, 1]
            }
        );
        assert!(c.kills(&gens));
        let gens = vec![p("x + 1"), p("y - 2")];
        let c = find_evaluation_certificate(2, &gens).unwrap();
        assert!(c.kills(&gens));
        assert_eq!(c.modulus, 3);
        assert!(find_evaluation_certificate(1, &[LaurentPoly::one(1)]).is_none());
    }
}
