//! Evaluation bases: Moore matrices, dual and Hermitian dual bases, and
//! normal-element search.

use crate::field::{Element, FieldCtx};
use crate::linalg::{self, LinalgError, Matrix};

/// An evaluation basis together with its (shifted) Moore matrix and the
/// cached inverse used by encoding and interpolation.
#[derive(Debug, Clone)]
pub struct EvalBasis {
    points: Vec<Element>,
    shift: usize,
    moore: Matrix,
    moore_inv: Matrix,
}

impl EvalBasis {
    /// Builds the Moore matrix with entry (i,j) = points_i^{q^{u(j+l)}} and
    /// its inverse; fails when the points are dependent over F_{q^u}.
    pub fn new(ctx: &FieldCtx, points: Vec<Element>, shift: usize) -> Result<EvalBasis, LinalgError> {
        assert_eq!(points.len(), ctx.n());
        let moore = moore_matrix(ctx, &points, shift);
        let moore_inv = linalg::invert(ctx, &moore)?;
        Ok(EvalBasis {
            points,
            shift,
            moore,
            moore_inv,
        })
    }

    pub fn points(&self) -> &[Element] {
        &self.points
    }

    pub fn shift(&self) -> usize {
        self.shift
    }

    pub fn moore(&self) -> &Matrix {
        &self.moore
    }

    pub fn moore_inv(&self) -> &Matrix {
        &self.moore_inv
    }

    /// The actual evaluation points, i.e. points_i^{q^{u·l}}.
    pub fn eval_points(&self, ctx: &FieldCtx) -> Vec<Element> {
        self.points
            .iter()
            .map(|p| ctx.frobenius(p, (ctx.u() * self.shift) as i64))
            .collect()
    }
}

/// Moore matrix with entry (i,j) = frobenius(points_i, u·(j+l)).
pub fn moore_matrix(ctx: &FieldCtx, points: &[Element], shift: usize) -> Matrix {
    let n = points.len();
    let u = ctx.u();
    let mut rows = Vec::with_capacity(n);
    for p in points {
        let mut row = Vec::with_capacity(n);
        let mut cur = ctx.frobenius(p, (u * shift) as i64);
        for j in 0..n {
            if j > 0 {
                cur = ctx.frobenius(&cur, u as i64);
            }
            row.push(cur.clone());
        }
        rows.push(row);
    }
    Matrix::from_rows(rows)
}

/// Dual basis with respect to the relative trace onto F_{q^u}:
/// Tr(α_i β_j) = δ_ij. Computed by inverting the trace Gram matrix.
pub fn dual_basis(ctx: &FieldCtx, points: &[Element]) -> Result<Vec<Element>, LinalgError> {
    let n = points.len();
    assert_eq!(n, ctx.n());
    let d = ctx.top_degree();
    let sub = ctx.sub_ext_degree();
    let mut rows = Vec::with_capacity(n);
    for a in points {
        let mut row = Vec::with_capacity(n);
        for b in points {
            row.push(ctx.rel_trace(&ctx.mul(a, b), d, sub)?);
        }
        rows.push(row);
    }
    let gram = Matrix::from_rows(rows);
    let ginv = linalg::invert(ctx, &gram)?;
    // β_j = Σ_k (T^{-1})_{kj} α_k
    let mut dual = Vec::with_capacity(n);
    for j in 0..n {
        let mut acc = ctx.zero();
        for (k, a) in points.iter().enumerate() {
            acc = ctx.add(&acc, &ctx.mul(ginv.at(k, j), a));
        }
        dual.push(acc);
    }
    Ok(dual)
}

/// Hermitian dual basis: β with Tr_{q^{2n}/q^2}(α_i^q β_j) = δ_ij, obtained
/// from the ordinary dual basis γ as β_j = γ_j^q, since
/// Tr(α^q γ^q) = Tr(αγ)^q. The conjugate sits on the first pairing slot,
/// matching the sesquilinear form used for the matrix representation.
pub fn hermitian_dual_basis(
    ctx: &FieldCtx,
    points: &[Element],
) -> Result<Vec<Element>, LinalgError> {
    assert_eq!(ctx.u(), 2, "Hermitian dual basis requires u = 2");
    let gamma = dual_basis(ctx, points)?;
    Ok(gamma.iter().map(|g| ctx.frobenius(g, 1)).collect())
}

/// First element (in the deterministic integer enumeration of the field)
/// whose Frobenius orbit {w, w^{q^u}, ...} is a basis over F_{q^u}.
pub fn find_normal_element(ctx: &FieldCtx) -> Element {
    for v in 1..ctx.field_size() {
        let w = ctx.from_int(v).unwrap();
        let orbit = frobenius_orbit(ctx, &w);
        if linalg::rank(ctx, &moore_matrix(ctx, &orbit, 0)) == ctx.n() {
            return w;
        }
    }
    unreachable!("normal elements always exist");
}

/// The orbit {w, w^{q^u}, ..., w^{q^{u(n-1)}}}.
pub fn frobenius_orbit(ctx: &FieldCtx, w: &Element) -> Vec<Element> {
    let mut orbit = Vec::with_capacity(ctx.n());
    let mut cur = w.clone();
    for i in 0..ctx.n() {
        if i > 0 {
            cur = ctx.frobenius(&cur, ctx.u() as i64);
        }
        orbit.push(cur.clone());
    }
    orbit
}
