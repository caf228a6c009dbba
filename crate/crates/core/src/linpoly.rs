//! q^u-polynomials L(x) = Σ c_i x^{q^{ui}}: evaluation, Dickson matrices and
//! Moore-system interpolation.

use crate::basis;
use crate::field::{Element, FieldCtx};
use crate::linalg::{self, Matrix};

/// Coefficient vector (c_0, ..., c_{n-1}) of Σ c_i x^{q^{ui}}; the twist u is
/// taken from the field context.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearizedPoly {
    coeffs: Vec<Element>,
}

impl LinearizedPoly {
    pub fn new(ctx: &FieldCtx, coeffs: Vec<Element>) -> LinearizedPoly {
        assert_eq!(coeffs.len(), ctx.n());
        LinearizedPoly { coeffs }
    }

    pub fn zero(ctx: &FieldCtx) -> LinearizedPoly {
        LinearizedPoly {
            coeffs: vec![ctx.zero(); ctx.n()],
        }
    }

    /// L(x) = x.
    pub fn identity(ctx: &FieldCtx) -> LinearizedPoly {
        let mut coeffs = vec![ctx.zero(); ctx.n()];
        coeffs[0] = ctx.one();
        LinearizedPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[Element] {
        &self.coeffs
    }

    pub fn evaluate(&self, ctx: &FieldCtx, x: &Element) -> Element {
        let u = ctx.u() as i64;
        let mut acc = ctx.zero();
        let mut fx = x.clone();
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                fx = ctx.frobenius(&fx, u);
            }
            if !ctx.is_zero(c) {
                acc = ctx.add(&acc, &ctx.mul(c, &fx));
            }
        }
        acc
    }

    /// The n×n Dickson matrix with entry (i,j) = c_{(i-j) mod n}^{q^{uj}}:
    /// column j is column 0 cyclically shifted by j and Frobenius-twisted.
    pub fn dickson(&self, ctx: &FieldCtx) -> Matrix {
        let n = ctx.n();
        let u = ctx.u() as i64;
        let mut rows = Vec::with_capacity(n);
        for i in 0..n {
            let mut row = Vec::with_capacity(n);
            for j in 0..n {
                let c = &self.coeffs[(i + n - j) % n];
                row.push(ctx.frobenius(c, u * j as i64));
            }
            rows.push(row);
        }
        Matrix::from_rows(rows)
    }

    /// Rank of the induced F_{q^u}-linear map, computed two independent ways
    /// (Dickson matrix rank and evaluation-matrix rank over the subfield).
    /// A disagreement signals an arithmetic bug.
    pub fn map_rank(&self, ctx: &FieldCtx) -> usize {
        let dickson_rank = linalg::rank(ctx, &self.dickson(ctx));
        // evaluate on the F_{q^u}-basis {1, x, ..., x^{n-1}} of the top field
        let x = ctx.monomial();
        let mut point = ctx.one();
        let mut values = Vec::with_capacity(ctx.n());
        for _ in 0..ctx.n() {
            values.push(self.evaluate(ctx, &point));
            point = ctx.mul(&point, &x);
        }
        let eval_rank =
            linalg::rank_over_subfield(ctx, &values, ctx.sub_ext_degree()).unwrap();
        assert_eq!(
            dickson_rank, eval_rank,
            "Dickson rank and evaluation rank disagree"
        );
        dickson_rank
    }
}

/// Interpolate the unique L with L(points_i^{q^{u·l}}) = values_i, computed as
/// values · ((M_l)^T)^{-1}. Fails when the points are dependent over F_{q^u}.
pub fn interpolate(
    ctx: &FieldCtx,
    points: &[Element],
    values: &[Element],
    shift: usize,
) -> Result<LinearizedPoly, linalg::LinalgError> {
    assert_eq!(points.len(), ctx.n());
    assert_eq!(values.len(), ctx.n());
    let moore = basis::moore_matrix(ctx, points, shift);
    let minv = linalg::invert(ctx, &moore)?;
    Ok(interpolate_with(ctx, &minv, values))
}

/// Interpolation through a cached Moore inverse.
pub fn interpolate_with(ctx: &FieldCtx, moore_inv: &Matrix, values: &[Element]) -> LinearizedPoly {
    // g = M^{-1} v, written as a coefficient vector
    let n = ctx.n();
    let mut coeffs = Vec::with_capacity(n);
    for j in 0..n {
        let mut acc = ctx.zero();
        for (i, v) in values.iter().enumerate() {
            acc = ctx.add(&acc, &ctx.mul(moore_inv.at(j, i), v));
        }
        coeffs.push(acc);
    }
    LinearizedPoly { coeffs }
}
