use serde::{Deserialize, Serialize};

use crate::laurent::{default_var_names, LaurentError, LaurentPoly};

/// A matrix over the Laurent ring presenting the module generated by its
/// columns subject to its rows: the cokernel of `R^rows -> R^cols`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PresMatrix {
    rank: usize,
    cols: usize,
    rows: Vec<Vec<LaurentPoly>>,
    row_labels: Vec<usize>,
    col_labels: Vec<usize>,
}

impl PresMatrix {
    /// `rank` is the number of Laurent variables, `cols` the number of module generators.
    pub fn new(
        rank: usize,
        cols: usize,
        rows: Vec<Vec<LaurentPoly>>,
    ) -> Result<Self, LaurentError> {
        for row in &rows {
            assert_eq!(row.len(), cols, "row length differs from column count");
            for p in row {
                if p.rank() != rank {
                    return Err(LaurentError::RankMismatch {
                        left: rank,
                        right: p.rank(),
                    });
                }
            }
        }
        Ok(PresMatrix {
            rank,
            cols,
            row_labels: (0..rows.len()).collect(),
            col_labels: (0..cols).collect(),
            rows,
        })
    }

    /// The free module of rank `cols`: no relations.
    pub fn free(rank: usize, cols: usize) -> Self {
        PresMatrix::new(rank, cols, Vec::new()).expect("empty matrix")
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<LaurentPoly>] {
        &self.rows
    }

    /// Relator index of each row.
    pub fn row_labels(&self) -> &[usize] {
        &self.row_labels
    }

    /// Generator index of each column.
    pub fn col_labels(&self) -> &[usize] {
        &self.col_labels
    }

    pub fn with_row(&self, row: Vec<LaurentPoly>) -> Result<Self, LaurentError> {
        let mut rows = self.rows.clone();
        rows.push(row);
        let label = self.row_labels.iter().max().map_or(0, |m| m + 1);
        let mut out = PresMatrix::new(self.rank, self.cols, rows)?;
        out.row_labels = self.row_labels.clone();
        out.row_labels.push(label);
        out.col_labels = self.col_labels.clone();
        Ok(out)
    }

    pub fn permute_rows(&self, perm: &[usize]) -> Self {
        PresMatrix {
            rank: self.rank,
            cols: self.cols,
            rows: perm.iter().map(|&i| self.rows[i].clone()).collect(),
            row_labels: perm.iter().map(|&i| self.row_labels[i]).collect(),
            col_labels: self.col_labels.clone(),
        }
    }

    pub fn permute_cols(&self, perm: &[usize]) -> Self {
        PresMatrix {
            rank: self.rank,
            cols: self.cols,
            rows: self
                .rows
                .iter()
                .map(|r| perm.iter().map(|&j| r[j].clone()).collect())
                .collect(),
            row_labels: self.row_labels.clone(),
            col_labels: perm.iter().map(|&j| self.col_labels[j]).collect(),
        }
    }

    /// Entries rendered with the default variable names.
    pub fn render(&self) -> Vec<Vec<String>> {
        let names = default_var_names(self.rank);
        self.rows
            .iter()
            .map(|r| r.iter().map(|p| p.render(&names)).collect())
            .collect()
    }
}

/// Serialized form of a [`PresMatrix`]: entries as text.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresMatrixText {
    pub rank: usize,
    pub cols: usize,
    pub rows: Vec<Vec<String>>,
}

impl From<&PresMatrix> for PresMatrixText {
    fn from(m: &PresMatrix) -> Self {
        PresMatrixText {
            rank: m.rank,
            cols: m.cols,
            rows: m.render(),
        }
    }
}

impl PresMatrixText {
    pub fn parse(&self) -> Result<PresMatrix, LaurentError> {
        let names = default_var_names(self.rank);
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(|s| LaurentPoly::parse(s, &names)).collect())
            .collect::<Result<Vec<Vec<_>>, _>>()?;
        PresMatrix::new(self.rank, self.cols, rows)
    }
}
