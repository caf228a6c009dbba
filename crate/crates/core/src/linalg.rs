//! Dense exact linear algebra over the top field, plus rank of element
//! vectors viewed over a subfield.

use thiserror::Error;

use crate::field::{Element, FieldCtx, FieldError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinalgError {
    #[error("matrix is singular")]
    Singular,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// Row-major dense matrix of field elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Element>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Element>) -> Matrix {
        assert_eq!(data.len(), rows * cols);
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Element>>) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c));
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn zero(ctx: &FieldCtx, rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            data: vec![ctx.zero(); rows * cols],
        }
    }

    pub fn identity(ctx: &FieldCtx, n: usize) -> Matrix {
        let mut m = Matrix::zero(ctx, n, n);
        for i in 0..n {
            *m.at_mut(i, i) = ctx.one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Element {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Element {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Element] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Matrix {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.at(i, j).clone());
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn mul(&self, ctx: &FieldCtx, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zero(ctx, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if ctx.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let t = ctx.mul(a, other.at(k, j));
                    *out.at_mut(i, j) = ctx.add(out.at(i, j), &t);
                }
            }
        }
        out
    }
}

/// Row vector times matrix.
pub fn row_times_matrix(ctx: &FieldCtx, row: &[Element], m: &Matrix) -> Vec<Element> {
    assert_eq!(row.len(), m.rows());
    let mut out = vec![ctx.zero(); m.cols()];
    for (k, rk) in row.iter().enumerate() {
        if ctx.is_zero(rk) {
            continue;
        }
        for (j, o) in out.iter_mut().enumerate() {
            *o = ctx.add(o, &ctx.mul(rk, m.at(k, j)));
        }
    }
    out
}

/// Row rank by exact Gaussian elimination with first-nonzero pivoting.
pub fn rank(ctx: &FieldCtx, m: &Matrix) -> usize {
    let mut w = m.clone();
    let mut r = 0usize;
    for c in 0..w.cols() {
        let pivot = (r..w.rows()).find(|&i| !ctx.is_zero(w.at(i, c)));
        let Some(pr) = pivot else { continue };
        swap_rows(&mut w, r, pr);
        let inv = ctx.inv(w.at(r, c)).expect("pivot nonzero");
        for k in c..w.cols() {
            *w.at_mut(r, k) = ctx.mul(w.at(r, k), &inv);
        }
        for i in (r + 1)..w.rows() {
            if !ctx.is_zero(w.at(i, c)) {
                let f = w.at(i, c).clone();
                for k in c..w.cols() {
                    let t = ctx.mul(&f, w.at(r, k));
                    *w.at_mut(i, k) = ctx.sub(w.at(i, k), &t);
                }
            }
        }
        r += 1;
        if r == w.rows() {
            break;
        }
    }
    r
}

fn swap_rows(m: &mut Matrix, a: usize, b: usize) {
    if a == b {
        return;
    }
    for j in 0..m.cols() {
        let x = m.at(a, j).clone();
        *m.at_mut(a, j) = m.at(b, j).clone();
        *m.at_mut(b, j) = x;
    }
}

/// Inverse of a square nonsingular matrix by Gauss-Jordan elimination.
pub fn invert(ctx: &FieldCtx, m: &Matrix) -> Result<Matrix, LinalgError> {
    if m.rows() != m.cols() {
        return Err(LinalgError::Dimension(format!(
            "{}x{} is not square",
            m.rows(),
            m.cols()
        )));
    }
    let n = m.rows();
    let mut w = m.clone();
    let mut inv = Matrix::identity(ctx, n);
    for c in 0..n {
        let pivot = (c..n)
            .find(|&i| !ctx.is_zero(w.at(i, c)))
            .ok_or(LinalgError::Singular)?;
        swap_rows(&mut w, c, pivot);
        swap_rows(&mut inv, c, pivot);
        let pinv = ctx.inv(w.at(c, c)).expect("pivot nonzero");
        for k in 0..n {
            *w.at_mut(c, k) = ctx.mul(w.at(c, k), &pinv);
            *inv.at_mut(c, k) = ctx.mul(inv.at(c, k), &pinv);
        }
        for i in 0..n {
            if i != c && !ctx.is_zero(w.at(i, c)) {
                let f = w.at(i, c).clone();
                for k in 0..n {
                    let t = ctx.mul(&f, w.at(c, k));
                    *w.at_mut(i, k) = ctx.sub(w.at(i, k), &t);
                    let t = ctx.mul(&f, inv.at(c, k));
                    *inv.at_mut(i, k) = ctx.sub(inv.at(i, k), &t);
                }
            }
        }
    }
    Ok(inv)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome {
    Unique(Vec<Element>),
    Inconsistent,
    Underdetermined,
}

/// Solve A x = b, classifying the outcome.
pub fn solve(ctx: &FieldCtx, a: &Matrix, b: &[Element]) -> Result<SolveOutcome, LinalgError> {
    if b.len() != a.rows() {
        return Err(LinalgError::Dimension(format!(
            "rhs length {} vs {} rows",
            b.len(),
            a.rows()
        )));
    }
    let (reduced, rhs, pivots) = eliminate(ctx, a, b);
    // inconsistency: a zero row with nonzero rhs
    for i in 0..reduced.rows() {
        let zero_row = (0..reduced.cols()).all(|j| ctx.is_zero(reduced.at(i, j)));
        if zero_row && !ctx.is_zero(&rhs[i]) {
            return Ok(SolveOutcome::Inconsistent);
        }
    }
    if pivots.len() < a.cols() {
        return Ok(SolveOutcome::Underdetermined);
    }
    Ok(SolveOutcome::Unique(back_substitute(
        ctx, &reduced, &rhs, &pivots,
    )))
}

/// A particular solution of A x = b (free variables set to zero), or None if
/// the system is inconsistent.
pub fn solve_any(ctx: &FieldCtx, a: &Matrix, b: &[Element]) -> Option<Vec<Element>> {
    assert_eq!(b.len(), a.rows());
    let (reduced, rhs, pivots) = eliminate(ctx, a, b);
    for i in 0..reduced.rows() {
        let zero_row = (0..reduced.cols()).all(|j| ctx.is_zero(reduced.at(i, j)));
        if zero_row && !ctx.is_zero(&rhs[i]) {
            return None;
        }
    }
    Some(back_substitute(ctx, &reduced, &rhs, &pivots))
}

/// Forward elimination to row echelon form; returns (matrix, rhs, pivot cols).
fn eliminate(ctx: &FieldCtx, a: &Matrix, b: &[Element]) -> (Matrix, Vec<Element>, Vec<usize>) {
    let mut w = a.clone();
    let mut rhs = b.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0usize;
    for c in 0..w.cols() {
        let Some(pr) = (r..w.rows()).find(|&i| !ctx.is_zero(w.at(i, c))) else {
            continue;
        };
        swap_rows(&mut w, r, pr);
        rhs.swap(r, pr);
        let inv = ctx.inv(w.at(r, c)).expect("pivot nonzero");
        for k in c..w.cols() {
            *w.at_mut(r, k) = ctx.mul(w.at(r, k), &inv);
        }
        rhs[r] = ctx.mul(&rhs[r], &inv);
        for i in 0..w.rows() {
            if i != r && !ctx.is_zero(w.at(i, c)) {
                let f = w.at(i, c).clone();
                for k in c..w.cols() {
                    let t = ctx.mul(&f, w.at(r, k));
                    *w.at_mut(i, k) = ctx.sub(w.at(i, k), &t);
                }
                let t = ctx.mul(&f, &rhs[r]);
                rhs[i] = ctx.sub(&rhs[i], &t);
            }
        }
        pivots.push(c);
        r += 1;
        if r == w.rows() {
            break;
        }
    }
    (w, rhs, pivots)
}

fn back_substitute(
    ctx: &FieldCtx,
    reduced: &Matrix,
    rhs: &[Element],
    pivots: &[usize],
) -> Vec<Element> {
    // matrix is in reduced row echelon form already
    let mut x = vec![ctx.zero(); reduced.cols()];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = rhs[r].clone();
    }
    x
}

/// Rank of a vector of top-field elements as a linear object over the
/// subfield of degree `sub_deg` over F_p: expand every coordinate into its
/// coordinate vector over the subfield and take the rank of the resulting
/// matrix.
pub fn rank_over_subfield(
    ctx: &FieldCtx,
    v: &[Element],
    sub_deg: usize,
) -> Result<usize, FieldError> {
    let m = ctx.top_degree() / sub_deg; // coords per element
    let mut rows = Vec::with_capacity(m);
    let mut cols = Vec::with_capacity(v.len());
    for e in v {
        cols.push(ctx.coords_over_subfield(e, sub_deg)?);
    }
    for j in 0..m {
        rows.push(cols.iter().map(|c| c[j].clone()).collect::<Vec<_>>());
    }
    // entries lie in the subfield, so elimination over the top field computes
    // the rank over the subfield
    Ok(rank(ctx, &Matrix::from_rows(rows)))
}
