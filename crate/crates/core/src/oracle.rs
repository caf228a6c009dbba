//! Brute-force reference implementations for small parameter sets: message
//! enumeration, full-code census (cardinality and minimum rank distance) and
//! nearest-codeword decoding. Everything here is guarded so it only runs on
//! codes with at most 2^20 messages.

use std::collections::HashSet;

use crate::channel::error_rank;
use crate::code::{self, CodeSpec};
use crate::field::Element;

pub const ENUM_GUARD: u128 = 1 << 20;

/// Number of messages = q^{n·k}; for every family this equals the maximum
/// cardinality of a d-code of the corresponding shape, so a census passing
/// means the code is optimal.
pub fn size_bound(spec: &CodeSpec) -> u128 {
    let ctx = spec.ctx();
    let q = ctx.q();
    let mut acc: u128 = 1;
    for _ in 0..spec.n() * spec.k() {
        acc = acc.checked_mul(q as u128).expect("size bound overflow");
    }
    acc
}

/// All messages of the code, in a fixed deterministic order. Panics when the
/// message space exceeds [`ENUM_GUARD`].
pub fn enumerate_messages(spec: &CodeSpec) -> Vec<Vec<Element>> {
    let total = size_bound(spec);
    assert!(
        total <= ENUM_GUARD,
        "message space has {total} elements, above the 2^20 enumeration guard"
    );
    let ctx = spec.ctx();
    // coordinates range over F_{q^n}: the whole top field for u = 1, the
    // index-2 subfield for Hermitian codes
    let coord_deg = ctx.s() * ctx.n();
    let basis = ctx.subfield_basis(coord_deg).unwrap();
    let p = ctx.p();
    let coord_count = (p as u128).pow(basis.len() as u32);
    let mut coords = Vec::with_capacity(coord_count as usize);
    for idx in 0..coord_count {
        let mut rem = idx;
        let mut acc = ctx.zero();
        for b in &basis {
            let digit = (rem % p as u128) as u64;
            rem /= p as u128;
            if digit != 0 {
                let scaled = ctx
                    .from_coeffs(
                        &b.coeffs().iter().map(|&x| x * digit % p).collect::<Vec<_>>(),
                    )
                    .unwrap();
                acc = ctx.add(&acc, &scaled);
            }
        }
        coords.push(acc);
    }
    let k = spec.k();
    let mut out = Vec::with_capacity(total as usize);
    let mut stack = vec![0usize; k];
    loop {
        out.push(stack.iter().map(|&i| coords[i].clone()).collect());
        let mut pos = 0;
        loop {
            if pos == k {
                return out;
            }
            stack[pos] += 1;
            if stack[pos] < coords.len() {
                break;
            }
            stack[pos] = 0;
            pos += 1;
        }
    }
}

#[derive(Debug, PartialEq, Eq)]
pub struct Census {
    pub codewords: u128,
    pub min_distance: usize,
}

/// Encode every message, count distinct codewords and find the minimum rank
/// weight of a nonzero codeword. By additivity of the code this weight is
/// the minimum rank distance.
pub fn exhaustive_census(spec: &CodeSpec) -> Census {
    let ctx = spec.ctx();
    let mut seen: HashSet<Vec<Element>> = HashSet::new();
    let mut min_distance = usize::MAX;
    for f in enumerate_messages(spec) {
        let c = code::encode(spec, &f).unwrap();
        if !c.iter().all(|x| ctx.is_zero(x)) {
            min_distance = min_distance.min(error_rank(spec, &c));
        }
        seen.insert(c);
    }
    Census {
        codewords: seen.len() as u128,
        min_distance,
    }
}

/// Minimum-rank-distance decoding by full code scan. Returns the closest
/// codeword's message and its distance to the received word, plus whether
/// that closest codeword is unique.
pub fn exhaustive_decode(
    spec: &CodeSpec,
    received: &[Element],
) -> (Vec<Element>, usize, bool) {
    let ctx = spec.ctx();
    let mut best: Option<(Vec<Element>, usize)> = None;
    let mut unique = true;
    for f in enumerate_messages(spec) {
        let c = code::encode(spec, &f).unwrap();
        let diff: Vec<Element> = received
            .iter()
            .zip(&c)
            .map(|(r, ci)| ctx.sub(r, ci))
            .collect();
        let dist = error_rank(spec, &diff);
        match &best {
            Some((_, d)) if dist > *d => {}
            Some((_, d)) if dist == *d => unique = false,
            _ => {
                best = Some((f, dist));
                unique = true;
            }
        }
    }
    let (f, d) = best.expect("message space is never empty");
    (f, d, unique)
}
