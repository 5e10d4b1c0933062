//! Group presentations read in the metabelian variety: parsing, abelianization
//! through Smith normal form, and the Alexander matrix of abelianized Fox
//! derivatives.
//!
//! For a presentation with generators `g_1..g_k` and relators `r_1..r_m` whose
//! abelianization is free of rank `n`, the Alexander matrix is the `m x k`
//! matrix over `Z[x_1^±..x_n^±]` with entries `ab(d r_i / d g_j)`. Its cokernel
//! is `Z[ab] (x) I`, the relation module extended along the abelianization.
//! The matrix only depends on the metabelian quotient, so variety relators are
//! never written down.

mod fox;
mod matrix;
mod parse;
mod snf;
mod word;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::laurent::{default_var_names, ExpVec};

pub use fox::{alexander_matrix, alexander_matrix_with, fox_derivative_abelianized, fox_vector};
pub use matrix::{PresMatrix, PresMatrixText};
pub use parse::parse_word;
pub use snf::{rank_mod_p, smith_normal_form, IntMatrix, SmithForm};
pub use word::{Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("relator {relator} uses generator index {generator}, only {count} generators")]
    GeneratorOutOfRange {
        relator: usize,
        generator: usize,
        count: usize,
    },
    #[error("abelianization has torsion {torsion:?}")]
    TorsionAbelianization { torsion: Vec<i64> },
}

/// Generators and relators, always interpreted as a quotient of the free
/// metabelian group on the generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupPresentation {
    generators: Vec<String>,
    relators: Vec<Word>,
}

impl GroupPresentation {
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Result<Self, PresentationError> {
        for (i, r) in relators.iter().enumerate() {
            if let Some(g) = r.max_generator().filter(|&g| g >= generators.len()) {
                return Err(PresentationError::GeneratorOutOfRange {
                    relator: i,
                    generator: g,
                    count: generators.len(),
                });
            }
        }
        Ok(GroupPresentation {
            generators,
            relators,
        })
    }

    /// The free metabelian group of rank `n`: `n` generators, no relators.
    pub fn free_metabelian(n: usize) -> Self {
        GroupPresentation {
            generators: default_var_names(n),
            relators: Vec::new(),
        }
    }

    pub fn parse(text: &str) -> Result<Self, PresentationError> {
        parse::parse_presentation(text)
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn render_relators(&self) -> Vec<String> {
        self.relators
            .iter()
            .map(|r| r.render(&self.generators))
            .collect()
    }

    /// Back to the text format accepted by [`GroupPresentation::parse`].
    pub fn to_text(&self) -> String {
        let mut out = format!("gens: {}\n", self.generators.join(" "));
        for r in self.render_relators() {
            out.push_str("rel: ");
            out.push_str(&r);
            out.push('\n');
        }
        out
    }
}

/// Entry `(i, j)` is the exponent sum of generator `j` in relator `i`.
pub fn exponent_matrix(p: &GroupPresentation) -> IntMatrix {
    let k = p.num_generators();
    let rows: Vec<Vec<i64>> = p
        .relators
        .iter()
        .map(|r| (0..k).map(|j| r.exponent_sum(j)).collect())
        .collect();
    IntMatrix::from_rows(k, &rows)
}

/// The abelianization `Z^rank (+) torsion` with the Smith basis change fixing
/// the identification of its free part with `Z^rank`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianizationData {
    pub num_generators: usize,
    pub rank: usize,
    /// Invariant factors `> 1`, each dividing the next.
    pub torsion: Vec<i64>,
    /// Row transform of the exponent matrix.
    pub u: IntMatrix,
    /// Column transform: row `j` gives the coordinates of generator `j`.
    pub v: IntMatrix,
    /// Number of nonzero Smith invariants; the free coordinates follow them.
    pub support: usize,
}

impl AbelianizationData {
    pub fn from_smith(form: SmithForm) -> Self {
        let diag = form.diagonal();
        let k = form.v.num_rows();
        AbelianizationData {
            num_generators: k,
            rank: k - diag.len(),
            torsion: diag.iter().copied().filter(|&d| d > 1).collect(),
            support: diag.len(),
            u: form.u,
            v: form.v,
        }
    }

    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }

    /// Image of generator `j` in the free part `Z^rank`.
    pub fn generator_image(&self, j: usize) -> ExpVec {
        ExpVec::new(
            (self.support..self.num_generators)
                .map(|c| i32::try_from(self.v[(j, c)]).expect("basis change entry too large"))
                .collect(),
        )
    }

    /// Image of a word in the free part `Z^rank`.
    pub fn word_image(&self, w: &Word) -> ExpVec {
        let mut acc = ExpVec::zero(self.rank);
        for l in w.letters() {
            let g = self.generator_image(l.generator);
            acc = if l.exponent > 0 {
                acc.add(&g)
            } else {
                acc.sub(&g)
            };
        }
        acc
    }
}

/// Smith normal form of the exponent matrix, read as the abelianization.
pub fn abelianization(p: &GroupPresentation) -> AbelianizationData {
    AbelianizationData::from_smith(smith_normal_form(&exponent_matrix(p)))
}
