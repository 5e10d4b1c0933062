//! Smith normal form over the integers with unimodular transforms.

use std::fmt;
use std::ops::{Index, IndexMut};

use serde::{Deserialize, Serialize};

/// Dense integer matrix, row-major. Keeps its column count even with zero rows.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    /// Panics if the rows have different lengths.
    pub fn from_rows(cols: usize, rows: &[Vec<i64>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix");
            data.extend_from_slice(r);
        }
        IntMatrix {
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn num_rows(&self) -> usize {
        self.rows
    }

    pub fn num_cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] =
                        checked(out[(i, j)].checked_add(checked(a.checked_mul(other[(k, j)]))));
                }
            }
        }
        out
    }

    /// Exact determinant by fraction-free elimination.
    pub fn determinant(&self) -> i128 {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut a: Vec<Vec<i128>> = self
            .to_rows()
            .into_iter()
            .map(|r| r.into_iter().map(i128::from).collect())
            .collect();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n {
            if a[k][k] == 0 {
                let Some(p) = (k + 1..n).find(|&i| a[i][k] != 0) else {
                    return 0;
                };
                a.swap(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
                }
            }
            prev = a[k][k];
        }
        if n == 0 {
            1
        } else {
            sign * a[n - 1][n - 1]
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += k * row[src]
    fn add_row(&mut self, dst: usize, src: usize, k: i64) {
        for j in 0..self.cols {
            let v = self[(src, j)];
            self[(dst, j)] = checked(self[(dst, j)].checked_add(checked(v.checked_mul(k))));
        }
    }

    /// col[dst] += k * col[src]
    fn add_col(&mut self, dst: usize, src: usize, k: i64) {
        for i in 0..self.rows {
            let v = self[(i, src)];
            self[(i, dst)] = checked(self[(i, dst)].checked_add(checked(v.checked_mul(k))));
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            self[(i, j)] = -self[(i, j)];
        }
    }
}

fn checked(v: Option<i64>) -> i64 {
    v.expect("integer overflow in Smith normal form")
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = i64;
    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i64 {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(i64::to_string).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

impl Serialize for IntMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        (self.cols, self.to_rows()).serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let (cols, rows) = <(usize, Vec<Vec<i64>>)>::deserialize(d)?;
        if rows.iter().any(|r| r.len() != cols) {
            return Err(serde::de::Error::custom("ragged matrix"));
        }
        Ok(IntMatrix::from_rows(cols, &rows))
    }
}

/// `u * e * v = s` with `u`, `v` unimodular and `s` diagonal, its nonzero
/// diagonal entries positive and each dividing the next.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub s: IntMatrix,
}

impl SmithForm {
    /// The nonzero diagonal entries, in order.
    pub fn diagonal(&self) -> Vec<i64> {
        (0..self.s.num_rows().min(self.s.num_cols()))
            .map(|i| self.s[(i, i)])
            .take_while(|&d| d != 0)
            .collect()
    }
}

pub fn smith_normal_form(e: &IntMatrix) -> SmithForm {
    let (m, n) = (e.num_rows(), e.num_cols());
    let mut s = e.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);

    for t in 0..m.min(n) {
        let Some((pi, pj)) = min_nonzero(&s, t..m, t..n) else {
            break;
        };
        s.swap_rows(t, pi);
        u.swap_rows(t, pi);
        s.swap_cols(t, pj);
        v.swap_cols(t, pj);

        loop {
            let p = s[(t, t)];
            for i in t + 1..m {
                let q = s[(i, t)].div_euclid(p);
                if q != 0 {
                    s.add_row(i, t, -q);
                    u.add_row(i, t, -q);
                }
            }
            for j in t + 1..n {
                let q = s[(t, j)].div_euclid(p);
                if q != 0 {
                    s.add_col(j, t, -q);
                    v.add_col(j, t, -q);
                }
            }
            // A nonzero remainder is smaller than the pivot: move it in and repeat.
            let col_rest = (t + 1..m)
                .filter(|&i| s[(i, t)] != 0)
                .min_by_key(|&i| s[(i, t)].abs());
            let row_rest = (t + 1..n)
                .filter(|&j| s[(t, j)] != 0)
                .min_by_key(|&j| s[(t, j)].abs());
            match (col_rest, row_rest) {
                (Some(i), _) => {
                    s.swap_rows(t, i);
                    u.swap_rows(t, i);
                    continue;
                }
                (None, Some(j)) => {
                    s.swap_cols(t, j);
                    v.swap_cols(t, j);
                    continue;
                }
                (None, None) => {}
            }
            let p = s[(t, t)];
            let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| s[(i, j)] % p != 0));
            match bad {
                Some(i) => {
                    s.add_row(t, i, 1);
                    u.add_row(t, i, 1);
                }
                None => break,
            }
        }
        if s[(t, t)] < 0 {
            s.negate_row(t);
            u.negate_row(t);
        }
    }
    SmithForm { u, v, s }
}

fn min_nonzero(
    s: &IntMatrix,
    rows: std::ops::Range<usize>,
    cols: std::ops::Range<usize>,
) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for j in cols {
        for i in rows.clone() {
            let a = s[(i, j)];
            if a != 0 && best.is_none_or(|(bi, bj)| a.abs() < s[(bi, bj)].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

/// Rank over `Z/p` of an integer matrix, `p` prime.
pub fn rank_mod_p(rows: &[Vec<i64>], cols: usize, p: u64) -> usize {
    let p = p as i64;
    let mut a: Vec<Vec<i64>> = rows
        .iter()
        .map(|r| r.iter().map(|x| x.rem_euclid(p)).collect())
        .collect();
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..a.len()).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(rank, piv);
        let inv = inverse_mod(a[rank][c], p);
        for x in a[rank].iter_mut() {
            *x = (*x as i128 * inv as i128 % p as i128) as i64;
        }
        let pivot_row = a[rank].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != rank && row[c] != 0 {
                let f = row[c];
                for (x, &y) in row[c..cols].iter_mut().zip(&pivot_row[c..cols]) {
                    *x = (*x - (f as i128 * y as i128 % p as i128) as i64).rem_euclid(p);
                }
            }
        }
        rank += 1;
        if rank == a.len() {
            break;
        }
    }
    rank
}

fn inverse_mod(a: i64, p: i64) -> i64 {
    let (mut r0, mut r1) = (a as i128, p as i128);
    let (mut s0, mut s1) = (1i128, 0i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    debug_assert_eq!(r0, 1, "not invertible");
    s0.rem_euclid(p as i128) as i64
}
