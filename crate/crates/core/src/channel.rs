//! Rank-error channel: draw error vectors of exact prescribed rank over the
//! coefficient subfield F_{q^u} and measure that rank.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::code::CodeSpec;
use crate::field::Element;
use crate::linalg::rank_over_subfield;

/// Rank of a word over the coefficient subfield F_{q^u} of the code.
pub fn error_rank(spec: &CodeSpec, word: &[Element]) -> usize {
    let ctx = spec.ctx();
    rank_over_subfield(ctx, word, ctx.sub_ext_degree()).expect("coefficient subfield exists")
}

/// Deterministic seeded error of exact rank t: e = a·B where a holds t
/// independent elements of the top field over F_{q^u} and B is a full-rank
/// t×n matrix over F_{q^u}. Resamples until both ranks hold, so the result
/// has rank exactly t.
pub fn random_rank_error(spec: &CodeSpec, t: usize, seed: u64) -> Vec<Element> {
    let ctx = spec.ctx();
    let n = spec.n();
    assert!(t <= n, "rank {t} exceeds length {n}");
    if t == 0 {
        return vec![ctx.zero(); n];
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sub = ctx
        .subfield_basis(ctx.sub_ext_degree())
        .expect("coefficient subfield basis");
    loop {
        // t top-field elements, independent over F_{q^u}
        let a: Vec<Element> = (0..t)
            .map(|_| {
                let coeffs: Vec<u64> = (0..ctx.top_degree())
                    .map(|_| rng.gen_range(0..ctx.p()))
                    .collect();
                ctx.from_coeffs(&coeffs).unwrap()
            })
            .collect();
        if rank_over_subfield(ctx, &a, ctx.sub_ext_degree()).unwrap() < t {
            continue;
        }
        // t×n matrix over F_{q^u} (subfield elements of the top field)
        let b: Vec<Vec<Element>> = (0..t)
            .map(|_| {
                (0..n)
                    .map(|_| {
                        let mut acc = ctx.zero();
                        for base in &sub {
                            let c = rng.gen_range(0..ctx.p());
                            for _ in 0..c {
                                acc = ctx.add(&acc, base);
                            }
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        let bm = crate::linalg::Matrix::from_rows(b.clone());
        if crate::linalg::rank(ctx, &bm) < t {
            continue;
        }
        let mut e = vec![ctx.zero(); n];
        for (ai, brow) in a.iter().zip(&b) {
            for (ej, bij) in e.iter_mut().zip(brow) {
                if !ctx.is_zero(bij) {
                    *ej = ctx.add(ej, &ctx.mul(ai, bij));
                }
            }
        }
        debug_assert_eq!(error_rank(spec, &e), t);
        return e;
    }
}
