//! Interpolation decoding: recover the error interpolator from the d-1
//! coefficients that the layout forces to zero, via a linear recurrence with
//! Frobenius-twisted coefficients, then peel the error off the received word.

use thiserror::Error;

use crate::channel::error_rank;
use crate::code::{self, CodeError, CodeSpec};
use crate::field::{Element, FieldCtx};
use crate::linalg::{self, Matrix};

#[derive(Debug, Error)]
pub enum DecodeError {
    #[error("no twisted recurrence of order <= {max} fits the known window")]
    RecurrenceNotFound { max: usize },
    #[error("recovered coefficients violate the code layout: {0}")]
    Layout(#[from] CodeError),
    #[error("re-encoding the recovered message does not reproduce the received word")]
    Reencode,
    #[error("recovered error has rank {got} but the recurrence has order {expected}")]
    RankMismatch { got: usize, expected: usize },
}

/// Successful decode with all intermediate artifacts exposed for inspection.
#[derive(Debug)]
pub struct Decoded {
    pub message: Vec<Element>,
    /// Full coefficient vector f̃ of the message's evaluation polynomial.
    pub coeffs: Vec<Element>,
    /// Interpolator of the received word (β = M⁻¹·r).
    pub beta: Vec<Element>,
    /// Coefficients of the error interpolator g̃.
    pub error_coeffs: Vec<Element>,
    /// The error vector itself.
    pub error: Vec<Element>,
    /// Recurrence coefficients λ_1..λ_t.
    pub lambda: Vec<Element>,
    /// Rank of the corrected error.
    pub rank: usize,
}

fn theta(ctx: &FieldCtx, a: &Element, j: usize) -> Element {
    ctx.frobenius(a, (ctx.u() * j) as i64)
}

/// Interpolate the received word: β with r = Moore·β.
pub fn compute_beta(spec: &CodeSpec, received: &[Element]) -> Vec<Element> {
    let ctx = spec.ctx();
    let n = spec.n();
    assert_eq!(received.len(), n);
    let inv = spec.basis().moore_inv();
    (0..n)
        .map(|i| {
            let mut acc = ctx.zero();
            for (j, r) in received.iter().enumerate() {
                if !ctx.is_zero(r) {
                    acc = ctx.add(&acc, &ctx.mul(inv.at(i, j), r));
                }
            }
            acc
        })
        .collect()
}

/// The d-1 consecutive (cyclic) coefficients of β where the layout forces
/// f̃ = 0, so β there equals the error interpolator.
pub fn known_window(spec: &CodeSpec, beta: &[Element]) -> Vec<Element> {
    let (j0, len) = code::zero_window(spec);
    let n = spec.n();
    (0..len).map(|i| beta[(j0 + i) % n].clone()).collect()
}

/// Berlekamp–Massey over the twisted polynomial ring F[x;θ], θ = q^u-power
/// Frobenius: finds the shortest Λ with Λ_0 = 1 and
/// Σ_j Λ_j θ^j(s_{i-j}) = 0 for all valid i. Returns λ_m = -Λ_m for
/// m = 1..t, or None when no recurrence of order <= max_order generates the
/// window.
pub fn skew_bm(ctx: &FieldCtx, window: &[Element], max_order: usize) -> Option<Vec<Element>> {
    let l = window.len();
    let mut lam = vec![ctx.one()];
    let mut b = vec![ctx.one()];
    let mut len = 0usize;
    let mut m = 1usize;
    let mut delta_b = ctx.one();
    for i in 0..l {
        let mut delta = ctx.zero();
        for j in 0..lam.len().min(i + 1) {
            if !ctx.is_zero(&lam[j]) {
                delta = ctx.add(&delta, &ctx.mul(&lam[j], &theta(ctx, &window[i - j], j)));
            }
        }
        if ctx.is_zero(&delta) {
            m += 1;
        } else {
            // a recurrence failing at position b with discrepancy δ_b,
            // shifted by x^m, fails at b+m with discrepancy θ^m(δ_b)
            let coef = ctx.mul(&delta, &ctx.inv(&theta(ctx, &delta_b, m)).unwrap());
            let grow = 2 * len <= i;
            let saved = lam.clone();
            let new_len = (m + b.len() - 1).max(lam.len() - 1);
            lam.resize(new_len + 1, ctx.zero());
            for (kb, bk) in b.iter().enumerate() {
                if !ctx.is_zero(bk) {
                    let shifted = theta(ctx, bk, m);
                    lam[kb + m] = ctx.sub(&lam[kb + m], &ctx.mul(&coef, &shifted));
                }
            }
            if grow {
                len = i + 1 - len;
                b = saved;
                delta_b = delta;
                m = 1;
            } else {
                m += 1;
            }
        }
    }
    if len > max_order {
        return None;
    }
    let lambda: Vec<Element> = (1..=len)
        .map(|j| ctx.neg(lam.get(j).unwrap_or(&ctx.zero())))
        .collect();
    if !window_consistent(ctx, window, &lambda) {
        return None;
    }
    Some(lambda)
}

/// Whether λ generates the window: s_i = Σ_m λ_m θ^m(s_{i-m}) for
/// i = t..len-1.
pub fn window_consistent(ctx: &FieldCtx, window: &[Element], lambda: &[Element]) -> bool {
    let t = lambda.len();
    for i in t..window.len() {
        let mut acc = ctx.zero();
        for (m, lm) in lambda.iter().enumerate() {
            acc = ctx.add(&acc, &ctx.mul(lm, &theta(ctx, &window[i - m - 1], m + 1)));
        }
        if acc != window[i] {
            return false;
        }
    }
    true
}

/// Reference solver for the same problem: for each candidate order t in
/// ascending order, solve the linear system for λ directly and keep the
/// first solution that regenerates the whole window. Quadratic per
/// candidate; used to validate [`skew_bm`].
pub fn skew_bm_gaussian(
    ctx: &FieldCtx,
    window: &[Element],
    max_order: usize,
) -> Option<Vec<Element>> {
    if window.iter().all(|s| ctx.is_zero(s)) {
        return Some(Vec::new());
    }
    let l = window.len();
    for t in 1..=max_order.min(l.saturating_sub(1)) {
        let rows: Vec<Vec<Element>> = (t..l)
            .map(|i| (0..t).map(|m| theta(ctx, &window[i - m - 1], m + 1)).collect())
            .collect();
        let rhs: Vec<Element> = window[t..].to_vec();
        let a = Matrix::from_rows(rows);
        if let Some(sol) = linalg::solve_any(ctx, &a, &rhs) {
            if window_consistent(ctx, window, &sol) {
                return Some(sol);
            }
        }
    }
    None
}

/// Extend the recurrence forward around the cycle to fill all n coefficients
/// of the error interpolator, starting from the known window at j0.
pub fn extend_recurrence(
    spec: &CodeSpec,
    window: &[Element],
    lambda: &[Element],
) -> Vec<Element> {
    let ctx = spec.ctx();
    let n = spec.n();
    let (j0, len) = code::zero_window(spec);
    debug_assert_eq!(window.len(), len);
    debug_assert!(lambda.len() <= len);
    let mut g = vec![ctx.zero(); n];
    let mut known = vec![false; n];
    for (i, w) in window.iter().enumerate() {
        let idx = (j0 + i) % n;
        g[idx] = w.clone();
        known[idx] = true;
    }
    for step in 0..n - len {
        let idx = (j0 + len + step) % n;
        let mut acc = ctx.zero();
        for (m, lm) in lambda.iter().enumerate() {
            let prev = (idx + n - (m + 1)) % n;
            debug_assert!(known[prev]);
            acc = ctx.add(&acc, &ctx.mul(lm, &theta(ctx, &g[prev], m + 1)));
        }
        g[idx] = acc;
        known[idx] = true;
    }
    g
}

/// Full fail-safe decode of a received word. Corrects any error of rank up
/// to ⌊(d-1)/2⌋ and rejects everything it cannot certify: the recovered
/// message must re-encode to the received word minus an error whose rank
/// matches the recurrence order.
pub fn decode(spec: &CodeSpec, received: &[Element]) -> Result<Decoded, DecodeError> {
    let ctx = spec.ctx();
    let tmax = spec.radius();
    let beta = compute_beta(spec, received);
    let window = known_window(spec, &beta);
    let lambda = skew_bm(ctx, &window, tmax)
        .ok_or(DecodeError::RecurrenceNotFound { max: tmax })?;
    let g = extend_recurrence(spec, &window, &lambda);
    let ft: Vec<Element> = beta.iter().zip(&g).map(|(b, gi)| ctx.sub(b, gi)).collect();
    let message = code::compress_message(spec, &ft)?;
    let error = code::encode_coeffs(spec, &g);
    let rank = error_rank(spec, &error);
    if rank != lambda.len() {
        return Err(DecodeError::RankMismatch {
            got: rank,
            expected: lambda.len(),
        });
    }
    let codeword = code::encode(spec, &message)?;
    for i in 0..spec.n() {
        if ctx.add(&codeword[i], &error[i]) != received[i] {
            return Err(DecodeError::Reencode);
        }
    }
    Ok(Decoded {
        message,
        coeffs: ft,
        beta,
        error_coeffs: g,
        error,
        lambda,
        rank,
    })
}
