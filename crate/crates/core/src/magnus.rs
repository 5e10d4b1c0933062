//! The free metabelian group `Psi_n` inside `Z^n ⋉ Z[Z^n]^n` (the Magnus
//! embedding). Generator `g_i` maps to `(e_i, t_i)` and the product is
//! `(u, v)(u', v') = (u + u', v + x^u v')`, so equality of normal forms
//! solves the word problem.

use std::fmt;

use thiserror::Error;

use crate::laurent::{default_var_names, ExpVec, LaurentPoly};
use crate::presentations::Word;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MagnusError {
    #[error("generator index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("abelian part {abelian:?} is nonzero")]
    NonzeroAbelian { abelian: Vec<i32> },
}

/// An element `(u, v)` of `Z^n ⋉ Z[Z^n]^n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MagnusElement {
    abelian: ExpVec,
    module: Vec<LaurentPoly>,
}

impl MagnusElement {
    /// Builds `(abelian, module)`; both parts must have rank `abelian.rank()`.
    pub fn new(abelian: ExpVec, module: Vec<LaurentPoly>) -> Result<Self, MagnusError> {
        let n = abelian.rank();
        if module.len() != n {
            return Err(MagnusError::RankMismatch {
                left: n,
                right: module.len(),
            });
        }
        if let Some(p) = module.iter().find(|p| p.rank() != n) {
            return Err(MagnusError::RankMismatch {
                left: n,
                right: p.rank(),
            });
        }
        Ok(MagnusElement { abelian, module })
    }

    pub fn identity(n: usize) -> Self {
        MagnusElement {
            abelian: ExpVec::zero(n),
            module: vec![LaurentPoly::zero(n); n],
        }
    }

    /// The image of generator `i` (0-based).
    pub fn generator(i: usize, n: usize) -> Result<Self, MagnusError> {
        if i >= n {
            return Err(MagnusError::IndexOutOfRange { index: i, rank: n });
        }
        let mut module = vec![LaurentPoly::zero(n); n];
        module[i] = LaurentPoly::one(n);
        Ok(MagnusElement {
            abelian: ExpVec::unit(n, i),
            module,
        })
    }

    pub fn rank(&self) -> usize {
        self.abelian.rank()
    }

    pub fn abelian(&self) -> &ExpVec {
        &self.abelian
    }

    pub fn module(&self) -> &[LaurentPoly] {
        &self.module
    }

    pub fn is_identity(&self) -> bool {
        self.abelian.is_zero() && self.module.iter().all(LaurentPoly::is_zero)
    }

    pub fn try_mul(&self, other: &MagnusElement) -> Result<Self, MagnusError> {
        if self.rank() != other.rank() {
            return Err(MagnusError::RankMismatch {
                left: self.rank(),
                right: other.rank(),
            });
        }
        Ok(MagnusElement {
            abelian: self.abelian.add(&other.abelian),
            module: self
                .module
                .iter()
                .zip(&other.module)
                .map(|(v, w)| v + &w.shift(&self.abelian))
                .collect(),
        })
    }

    pub fn inverse(&self) -> Self {
        let back = self.abelian.neg();
        MagnusElement {
            module: self.module.iter().map(|v| -v.shift(&back)).collect(),
            abelian: back,
        }
    }

    /// `sum_j module_j (x_j - 1)`; zero exactly when the module part lies in
    /// the kernel of `e_j -> x_j - 1`, i.e. comes from the derived subgroup.
    pub fn augmentation_image(&self) -> Result<LaurentPoly, MagnusError> {
        if !self.abelian.is_zero() {
            return Err(MagnusError::NonzeroAbelian {
                abelian: self.abelian.entries().to_vec(),
            });
        }
        let n = self.rank();
        Ok(self
            .module
            .iter()
            .enumerate()
            .fold(LaurentPoly::zero(n), |acc, (j, v)| {
                &acc + &(v * &LaurentPoly::var_minus_one(n, j))
            }))
    }

    /// For rank 2 elements with module part `(a, b)` in the syzygy module of
    /// `(x - 1, y - 1)`: the `lambda` with `(a, b) = lambda (1 - y, x - 1)`.
    pub fn syzygy_coordinate(&self) -> Option<LaurentPoly> {
        if self.rank() != 2 {
            return None;
        }
        let first = LaurentPoly::one(2) - LaurentPoly::var(2, 1);
        let lambda = self.module[0].exact_div(&first)?;
        (&lambda * &LaurentPoly::var_minus_one(2, 0) == self.module[1]).then_some(lambda)
    }

    /// `(a1,…,an | p1, …, pn)` with the default variable names.
    pub fn render(&self) -> String {
        let names = default_var_names(self.rank());
        let ab: Vec<String> = self.abelian.entries().iter().map(i32::to_string).collect();
        let module: Vec<String> = self.module.iter().map(|p| p.render(&names)).collect();
        format!("({} | {})", ab.join(","), module.join(", "))
    }
}

impl fmt::Display for MagnusElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Evaluates `w` in `Psi_n`.
pub fn word_to_magnus(w: &Word, n: usize) -> Result<MagnusElement, MagnusError> {
    let mut acc = MagnusElement::identity(n);
    for l in w.letters() {
        if l.generator >= n {
            return Err(MagnusError::IndexOutOfRange {
                index: l.generator,
                rank: n,
            });
        }
        // acc * g^{±1} touches only coordinate `generator`
        let e = ExpVec::unit(n, l.generator);
        if l.exponent > 0 {
            let step = LaurentPoly::monomial(acc.abelian.clone(), 1);
            acc.module[l.generator] = &acc.module[l.generator] + &step;
            acc.abelian = acc.abelian.add(&e);
        } else {
            acc.abelian = acc.abelian.sub(&e);
            let step = LaurentPoly::monomial(acc.abelian.clone(), 1);
            acc.module[l.generator] = &acc.module[l.generator] - &step;
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentations::parse_word;

    fn word(s: &str, n: usize) -> Word {
        parse_word(s, &(1..=n).map(|i| format!("x{i}")).collect::<Vec<_>>()).unwrap()
    }

    fn p(s: &str) -> LaurentPoly {
        LaurentPoly::parse(s, &default_var_names(2)).unwrap()
    }

    #[test]
    fn generators() {
        let g = MagnusElement::generator(0, 2).unwrap();
        assert_eq!(g.render(), "(1,0 | 1, 0)");
        assert_eq!(
            MagnusElement::generator(1, 2).unwrap().render(),
            "(0,1 | 0, 1)"
        );
        assert_eq!(
            MagnusElement::generator(2, 2),
            Err(MagnusError::IndexOutOfRange { index: 2, rank: 2 })
        );
    }

    #[test]
    fn multiplication_law() {
        let g1 = MagnusElement::generator(0, 2).unwrap();
        let g2 = MagnusElement::generator(1, 2).unwrap();
        let prod = g1.try_mul(&g2).unwrap();
        assert_eq!(prod.abelian().entries(), &[1, 1]);
        assert_eq!(prod.module(), &[p("1"), p("x")]);
        assert!(g1.try_mul(&g1.inverse()).unwrap().is_identity());
        assert_eq!(MagnusElement::identity(2).try_mul(&prod).unwrap(), prod);
        assert!(matches!(
            g1.try_mul(&MagnusElement::identity(3)),
            Err(MagnusError::RankMismatch { .. })
        ));
    }

    #[test]
    fn commutator_image() {
        let c = word_to_magnus(&word("[x1,x2]", 2), 2).unwrap();
        assert!(c.abelian().is_zero());
        assert_eq!(c.module(), &[p("1 - y"), p("x - 1")]);
        assert!(c.augmentation_image().unwrap().is_zero());
        assert_eq!(c.syzygy_coordinate(), Some(p("1")));
        assert!(word_to_magnus(&word("[[x1,x2],[x1,x2]]", 2), 2)
            .unwrap()
            .is_identity());
        assert!(
            word_to_magnus(&word("x1 x2 x1^-1 x2^-1 x2 x1 x2^-1 x1^-1", 2), 2)
                .unwrap()
                .is_identity()
        );
    }

    #[test]
    fn word_fold_matches_multiplication() {
        let w = word("x1^2 x2^-1 x1^-1 x2 x2", 2);
        let folded = w
            .letters()
            .iter()
            .fold(MagnusElement::identity(2), |acc, l| {
                let g = MagnusElement::generator(l.generator, 2).unwrap();
                let g = if l.exponent > 0 { g } else { g.inverse() };
                acc.try_mul(&g).unwrap()
            });
        assert_eq!(word_to_magnus(&w, 2).unwrap(), folded);
    }

    #[test]
    fn augmentation_image_examples() {
        let t1 = MagnusElement::new(ExpVec::zero(2), vec![p("1"), p("0")]).unwrap();
        assert_eq!(t1.augmentation_image().unwrap(), p("x - 1"));
        assert!(MagnusElement::identity(2)
            .augmentation_image()
            .unwrap()
            .is_zero());
        assert!(matches!(
            MagnusElement::generator(0, 2).unwrap().augmentation_image(),
            Err(MagnusError::NonzeroAbelian { .. })
        ));
    }

    #[test]
    fn out_of_range_word() {
        assert_eq!(
            word_to_magnus(&word("x3", 3), 2),
            Err(MagnusError::IndexOutOfRange { index: 2, rank: 2 })
        );
    }
}
