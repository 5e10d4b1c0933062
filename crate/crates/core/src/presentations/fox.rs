use num_bigint::BigInt;
use rayon::prelude::*;

use super::{
    abelianization, AbelianizationData, GroupPresentation, PresMatrix, PresentationError, Word,
};
use crate::laurent::LaurentPoly;

/// Image in `Z[ab]` of the Fox derivative `d w / d g_j`.
///
/// An occurrence `g_j` after prefix `p` contributes `ab(p)`; an occurrence
/// `g_j^-1` contributes `-ab(p) * ab(g_j)^-1`.
pub fn fox_derivative_abelianized(w: &Word, j: usize, ab: &AbelianizationData) -> LaurentPoly {
    let rank = ab.rank;
    let gj = ab.generator_image(j);
    let mut prefix = crate::laurent::ExpVec::zero(rank);
    let mut terms = Vec::new();
    for l in w.letters() {
        let g = ab.generator_image(l.generator);
        if l.exponent > 0 {
            if l.generator == j {
                terms.push((prefix.clone(), BigInt::from(1)));
            }
            prefix = prefix.add(&g);
        } else {
            if l.generator == j {
                terms.push((prefix.sub(&gj), BigInt::from(-1)));
            }
            prefix = prefix.sub(&g);
        }
    }
    LaurentPoly::from_terms(rank, terms)
}

/// `(d w / d g_j)_j` for every generator.
pub fn fox_vector(w: &Word, ab: &AbelianizationData) -> Vec<LaurentPoly> {
    (0..ab.num_generators)
        .map(|j| fox_derivative_abelianized(w, j, ab))
        .collect()
}

/// The Alexander matrix: one row per relator, one column per generator.
/// Fails when the abelianization has torsion.
pub fn alexander_matrix(p: &GroupPresentation) -> Result<PresMatrix, PresentationError> {
    alexander_matrix_with(p, &abelianization(p))
}

pub fn alexander_matrix_with(
    p: &GroupPresentation,
    ab: &AbelianizationData,
) -> Result<PresMatrix, PresentationError> {
    if !ab.is_free() {
        return Err(PresentationError::TorsionAbelianization {
            torsion: ab.torsion.clone(),
        });
    }
    let rows: Vec<Vec<LaurentPoly>> = p.relators().par_iter().map(|r| fox_vector(r, ab)).collect();
    Ok(PresMatrix::new(ab.rank, p.num_generators(), rows).expect("entries share the abelian rank"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::default_var_names;

    fn poly(s: &str) -> LaurentPoly {
        LaurentPoly::parse(s, &default_var_names(2)).unwrap()
    }

    #[test]
    fn commutator_derivatives() {
        let p = GroupPresentation::parse("gens: x y\nrel: [x,y]").unwrap();
        let ab = abelianization(&p);
        let w = &p.relators()[0];
        assert_eq!(fox_derivative_abelianized(w, 0, &ab), poly("1 - y"));
        assert_eq!(fox_derivative_abelianized(w, 1, &ab), poly("x - 1"));
        let trivial = Word::from_pairs(&[(0, 1), (0, -1)]);
        assert!(fox_derivative_abelianized(&trivial, 0, &ab).is_zero());
        assert!(fox_derivative_abelianized(&trivial, 1, &ab).is_zero());
    }

    #[test]
    fn alexander_matrices() {
        let free = alexander_matrix(&GroupPresentation::free_metabelian(2)).unwrap();
        assert_eq!((free.num_rows(), free.num_cols()), (0, 2));

        let z2 =
            alexander_matrix(&GroupPresentation::parse("gens: x y\nrel: [x,y]").unwrap()).unwrap();
        assert_eq!(z2.rows(), &[vec![poly("1 - y"), poly("x - 1")]]);

        let lamp = GroupPresentation::parse("gens: a t\nrel: a t a t^-1 a^-1 t a^-1 t^-1").unwrap();
        let m = alexander_matrix(&lamp).unwrap();
        assert_eq!(
            m.rows(),
            &[vec![
                &poly("1 - x") * &poly("1 - y"),
                -&poly("x - 1").pow(2)
            ]]
        );
    }

    #[test]
    fn torsion_is_flagged() {
        let p = GroupPresentation::parse("gens: x\nrel: x x").unwrap();
        assert_eq!(
            alexander_matrix(&p).unwrap_err(),
            PresentationError::TorsionAbelianization { torsion: vec![2] }
        );
    }
}
