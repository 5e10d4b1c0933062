//! Finite quotients `N / aN` for `a = (p, (x_1 - 1)^k_1, ..., (x_n - 1)^k_n)`.
//!
//! Writing `u_j = x_j - 1`, the ring `Z[x^±]/a` is `F_p[u]/(u_j^k_j)` with
//! basis `u^a`, `0 <= a_j < k_j`, and `x^e = prod_j (1 + u_j)^e_j` has
//! coefficient `prod_j C(e_j, a_j)` at `u^a` (generalized binomials for
//! negative `e_j`). `N / aN` is then an `F_p`-vector space: the cokernel of
//! the presentation rows multiplied by every basis monomial.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use super::FingerprintError;
use crate::presentations::{rank_mod_p, PresMatrix};

/// Largest `F_p`-dimension of `(Z[x^±]/a)^g` that will be computed.
pub const MAX_QUOTIENT_DIMENSION: usize = 512;

/// The ideal `(p, (x_1 - 1)^k_1, ..., (x_n - 1)^k_n)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealSpec {
    pub p: u64,
    /// One exponent for every variable, or a single exponent used for all.
    pub k: Vec<u32>,
}

impl IdealSpec {
    pub fn uniform(p: u64, k: u32) -> Self {
        IdealSpec { p, k: vec![k] }
    }

    pub fn per_variable(p: u64, k: Vec<u32>) -> Self {
        IdealSpec { p, k }
    }

    /// `p` in `{2, 3}` and `k` in `{1, 2}`.
    pub fn default_list() -> Vec<IdealSpec> {
        vec![
            IdealSpec::uniform(2, 1),
            IdealSpec::uniform(2, 2),
            IdealSpec::uniform(3, 1),
            IdealSpec::uniform(3, 2),
        ]
    }

    fn exponents(&self, rank: usize) -> Result<Vec<usize>, FingerprintError> {
        let ks: Vec<usize> = match self.k.as_slice() {
            [k] => vec![*k as usize; rank],
            ks if ks.len() == rank => ks.iter().map(|&k| k as usize).collect(),
            _ => {
                return Err(FingerprintError::InvalidIdeal {
                    ideal: self.to_string(),
                })
            }
        };
        if ks.contains(&0) || self.p < 2 || !is_prime(self.p) {
            return Err(FingerprintError::InvalidIdeal {
                ideal: self.to_string(),
            });
        }
        Ok(ks)
    }
}

impl fmt::Display for IdealSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ks: Vec<String> = self.k.iter().map(u32::to_string).collect();
        write!(f, "p={} k={}", self.p, ks.join(","))
    }
}

fn is_prime(p: u64) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

/// Finite invariants of `N / aN`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientInvariants {
    /// Invariant factors of the underlying abelian group (all equal to `p`).
    pub invariants: Vec<u64>,
    /// `F_p`-dimension of `(x_j - 1) N/aN` for each variable `j`.
    pub image_dims: Vec<usize>,
}

/// `C(e, i) mod p` for any integer `e`.
fn binomial_mod(e: i64, i: usize, p: u64) -> u64 {
    let mut c = BigInt::one();
    for t in 0..i as i64 {
        c *= BigInt::from(e - t);
        c = c.div_floor(&BigInt::from(t + 1));
    }
    c.mod_floor(&BigInt::from(p))
        .to_u64()
        .expect("residue fits")
}

/// Multi-indices `a` with `0 <= a_j < ks[j]`, first coordinate fastest.
fn basis(ks: &[usize]) -> Vec<Vec<usize>> {
    let total: usize = ks.iter().product();
    (0..total)
        .map(|mut idx| {
            ks.iter()
                .map(|&k| {
                    let a = idx % k;
                    idx /= k;
                    a
                })
                .collect()
        })
        .collect()
}

fn position(a: &[usize], ks: &[usize]) -> usize {
    a.iter()
        .zip(ks)
        .rev()
        .fold(0, |acc, (&ai, &k)| acc * k + ai)
}

pub fn module_quotient_invariants(
    m: &PresMatrix,
    ideal: &IdealSpec,
) -> Result<QuotientInvariants, FingerprintError> {
    let n = m.rank();
    let p = ideal.p;
    let ks = ideal.exponents(n)?;
    let b = basis(&ks);
    let bdim = b.len();
    let g = m.num_cols();
    let dim = g.saturating_mul(bdim);
    if dim > MAX_QUOTIENT_DIMENSION {
        return Err(FingerprintError::QuotientTooLarge {
            dimension: dim,
            limit: MAX_QUOTIENT_DIMENSION,
        });
    }

    // Coordinates of every entry in the truncated basis, mod p.
    let expand = |poly: &crate::laurent::LaurentPoly| -> Vec<u64> {
        let mut v = vec![0u64; bdim];
        for (e, c) in poly.terms() {
            let c = c
                .mod_floor(&BigInt::from(p))
                .to_u64()
                .expect("residue fits");
            if c == 0 {
                continue;
            }
            for (slot, a) in v.iter_mut().zip(&b) {
                let mut term = c;
                for (j, &aj) in a.iter().enumerate() {
                    term = term * binomial_mod(e.entries()[j] as i64, aj, p) % p;
                }
                *slot = (*slot + term) % p;
            }
        }
        v
    };
    let rows: Vec<Vec<Vec<u64>>> = m
        .rows()
        .iter()
        .map(|r| r.iter().map(&expand).collect())
        .collect();

    // Relations: each row times each basis monomial u^s.
    let mut relations: Vec<Vec<i64>> = Vec::new();
    for row in &rows {
        for s in &b {
            let mut rel = vec![0i64; dim];
            for (col, coords) in row.iter().enumerate() {
                for (a, &c) in b.iter().zip(coords) {
                    if c == 0 {
                        continue;
                    }
                    let shifted: Vec<usize> = a.iter().zip(s).map(|(x, y)| x + y).collect();
                    if shifted.iter().zip(&ks).all(|(x, k)| x < k) {
                        rel[col * bdim + position(&shifted, &ks)] += c as i64;
                    }
                }
            }
            relations.push(rel.into_iter().map(|x| x % p as i64).collect());
        }
    }
    let rank = rank_mod_p(&relations, dim, p);

    // dim u_j Q = dim Q - dim Q/u_j Q.
    let image_dims = (0..n)
        .map(|j| {
            let mut extra = relations.clone();
            for col in 0..g {
                for a in b.iter().filter(|a| a[j] + 1 < ks[j]) {
                    let mut shifted = a.clone();
                    shifted[j] += 1;
                    let mut rel = vec![0i64; dim];
                    rel[col * bdim + position(&shifted, &ks)] = 1;
                    extra.push(rel);
                }
            }
            rank_mod_p(&extra, dim, p) - rank
        })
        .collect();

    Ok(QuotientInvariants {
        invariants: vec![p; dim - rank],
        image_dims,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::{default_var_names, LaurentPoly};

    fn row(entries: &[&str]) -> PresMatrix {
        let names = default_var_names(2);
        PresMatrix::new(
            2,
            entries.len(),
            vec![entries
                .iter()
                .map(|s| LaurentPoly::parse(s, &names).unwrap())
                .collect()],
        )
        .unwrap()
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial_mod(5, 2, 1000), 10);
        // (1 + u)^-1 = 1 - u + u^2 - ...
        assert_eq!(binomial_mod(-1, 1, 7), 6);
        assert_eq!(binomial_mod(-1, 2, 7), 1);
        // C(-2, 2) = 3
        assert_eq!(binomial_mod(-2, 2, 7), 3);
        assert_eq!(binomial_mod(0, 0, 2), 1);
        assert_eq!(binomial_mod(2, 3, 5), 0);
    }

    #[test]
    fn free_module_examples() {
        let free2 = PresMatrix::free(2, 2);
        let q = module_quotient_invariants(&free2, &IdealSpec::uniform(2, 1)).unwrap();
        assert_eq!(q.invariants, vec![2, 2]);
        let free1 = PresMatrix::free(2, 1);
        let q =
            module_quotient_invariants(&free1, &IdealSpec::per_variable(3, vec![2, 1])).unwrap();
        assert_eq!(q.invariants, vec![3, 3]);
        assert_eq!(q.image_dims, vec![1, 0]);
    }

    #[test]
    fn commutator_row() {
        let m = row(&["1 - y", "x - 1"]);
        let q = module_quotient_invariants(&m, &IdealSpec::uniform(2, 1)).unwrap();
        assert_eq!(q.invariants, vec![2, 2]);
        // at k = 2 the relations are (-u_y, u_x), (-u_x u_y, 0), (0, u_x u_y): 8 - 3 = 5
        let q = module_quotient_invariants(&m, &IdealSpec::uniform(2, 2)).unwrap();
        assert_eq!(q.invariants, vec![2; 5]);
        let free =
            module_quotient_invariants(&PresMatrix::free(2, 2), &IdealSpec::uniform(2, 2)).unwrap();
        assert_eq!(free.invariants, vec![2; 8]);
    }

    #[test]
    fn negative_exponents() {
        // x^-1 - 1 = -u + u^2 - ... is a unit multiple of u, so it kills the same as x - 1
        let a = module_quotient_invariants(&row(&["x^-1 - 1"]), &IdealSpec::uniform(3, 2)).unwrap();
        let b = module_quotient_invariants(&row(&["x - 1"]), &IdealSpec::uniform(3, 2)).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.invariants.len(), 2);
    }

    #[test]
    fn rejects_bad_ideals() {
        let m = PresMatrix::free(2, 1);
        assert!(matches!(
            module_quotient_invariants(&m, &IdealSpec::uniform(4, 1)),
            Err(FingerprintError::InvalidIdeal { .. })
        ));
        assert!(
            module_quotient_invariants(&m, &IdealSpec::per_variable(2, vec![1, 1, 1])).is_err()
        );
        assert!(matches!(
            module_quotient_invariants(&PresMatrix::free(2, 40), &IdealSpec::uniform(2, 4)),
            Err(FingerprintError::QuotientTooLarge { .. })
        ));
    }
}
