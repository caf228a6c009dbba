//! The three restricted code families: parameter validation, message layout
//! expansion/compression (f ↔ f̃), evaluation encoding, and export of
//! codewords as symmetric/alternating/Hermitian form matrices.

use thiserror::Error;

use crate::basis::{self, EvalBasis};
use crate::field::{Element, FieldCtx, FieldError};
use crate::linalg::{self, LinalgError, Matrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Symmetric,
    Alternating,
    HermitianMixed,
    HermitianOdd,
}

impl Family {
    pub fn u(self) -> usize {
        match self {
            Family::Symmetric | Family::Alternating => 1,
            Family::HermitianMixed | Family::HermitianOdd => 2,
        }
    }

    /// Moore shift l: Hermitian mixed-parity codes evaluate at α_i^{q²}.
    pub fn shift(self) -> usize {
        match self {
            Family::HermitianMixed => 1,
            _ => 0,
        }
    }

    pub fn is_hermitian(self) -> bool {
        self.u() == 2
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Symmetric => "symmetric",
            Family::Alternating => "alternating",
            Family::HermitianMixed => "hermitian-mixed",
            Family::HermitianOdd => "hermitian-odd",
        }
    }

    pub fn parse(s: &str) -> Option<Family> {
        match s {
            "symmetric" | "sym" => Some(Family::Symmetric),
            "alternating" | "alt" => Some(Family::Alternating),
            "hermitian-mixed" | "herm-mixed" => Some(Family::HermitianMixed),
            "hermitian-odd" | "herm-odd" => Some(Family::HermitianOdd),
            _ => None,
        }
    }
}

#[derive(Debug, Error)]
pub enum CodeError {
    #[error("{0}")]
    Parameter(String),
    #[error("message has wrong length: expected {expected}, got {got}")]
    MessageLength { expected: usize, got: usize },
    #[error("Hermitian message coordinate {0} lies outside F_(q^n)")]
    MessageSubfield(usize),
    #[error("coefficient vector violates the family zero pattern at index {0}")]
    ZeroPattern(usize),
    #[error("coefficient vector violates conjugate symmetry at index {0}")]
    ConjugateSymmetry(usize),
    #[error("recovered coordinate {0} lies outside F_(q^n)")]
    CoordinateSubfield(usize),
    #[error("evaluation points are dependent over the coefficient subfield")]
    DependentPoints,
    #[error("eta lies in F_(q^n); {{1, eta}} must be an F_(q^n)-basis")]
    EtaInSubfield,
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// All inputs for building a [`CodeSpec`]; optional fields fall back to the
/// deterministic canonical choices.
#[derive(Debug, Clone)]
pub struct CodeParams {
    pub family: Family,
    pub p: u64,
    pub s: usize,
    pub n: usize,
    pub d: usize,
    /// Monic irreducible of degree s·n·u over F_p (little-endian).
    pub modulus: Option<Vec<u64>>,
    /// Basis points in integer text form; default is a normal basis.
    pub basis: Option<Vec<u128>>,
    /// η for the Hermitian families, integer text form; default is the first
    /// enumerated element outside F_{q^n}.
    pub eta: Option<u128>,
}

/// Fully validated code: family, field tower, layout constants, evaluation
/// basis with cached Moore inverse, and η for Hermitian families.
#[derive(Debug)]
pub struct CodeSpec {
    family: Family,
    ctx: FieldCtx,
    d: usize,
    k: usize,
    /// κ for Hermitian families, e = d/2 for alternating, otherwise 0.
    kappa: usize,
    /// m = (n+1)/2 for HermitianOdd, otherwise 0.
    m: usize,
    basis: EvalBasis,
    eta: Option<Element>,
}

impl CodeSpec {
    pub fn family(&self) -> Family {
        self.family
    }
    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }
    pub fn n(&self) -> usize {
        self.ctx.n()
    }
    pub fn d(&self) -> usize {
        self.d
    }
    pub fn k(&self) -> usize {
        self.k
    }
    pub fn kappa(&self) -> usize {
        self.kappa
    }
    pub fn e(&self) -> usize {
        self.kappa
    }
    pub fn m(&self) -> usize {
        self.m
    }
    pub fn basis(&self) -> &EvalBasis {
        &self.basis
    }
    pub fn eta(&self) -> Option<&Element> {
        self.eta.as_ref()
    }
    /// Unique decoding radius ⌊(d-1)/2⌋.
    pub fn radius(&self) -> usize {
        (self.d - 1) / 2
    }
}

pub fn make_code_spec(params: &CodeParams) -> Result<CodeSpec, CodeError> {
    let family = params.family;
    let (n, d) = (params.n, params.d);
    let (k, kappa, m) = match family {
        Family::Symmetric => {
            if d < 1 || d > n {
                return Err(CodeError::Parameter(format!(
                    "symmetric requires 1 <= d <= n, got d={d}, n={n}"
                )));
            }
            if (n - d) % 2 != 0 {
                return Err(CodeError::Parameter(format!(
                    "symmetric requires n-d even, got n={n}, d={d}; \
                     the punctured construction for n-d odd is not supported"
                )));
            }
            ((n - d + 2) / 2, 0, 0)
        }
        Family::Alternating => {
            if n % 2 == 0 {
                return Err(CodeError::Parameter(format!(
                    "alternating requires odd n, got n={n}"
                )));
            }
            if d % 2 != 0 || d < 2 || d > n - 1 {
                return Err(CodeError::Parameter(format!(
                    "alternating requires even d with 2 <= d <= n-1, got d={d}, n={n}"
                )));
            }
            ((n - d + 1) / 2, d / 2, 0)
        }
        Family::HermitianMixed => {
            if d < 1 || d > n || (n + d) % 2 == 0 {
                return Err(CodeError::Parameter(format!(
                    "hermitian-mixed requires 1 <= d <= n with n, d of opposite parity, \
                     got n={n}, d={d}"
                )));
            }
            let kappa = (n - d + 1) / 2;
            (2 * kappa, kappa, 0)
        }
        Family::HermitianOdd => {
            if n % 2 == 0 || d % 2 == 0 || d < 1 || d > n {
                return Err(CodeError::Parameter(format!(
                    "hermitian-odd requires odd n and odd d with 1 <= d <= n, \
                     got n={n}, d={d}"
                )));
            }
            let kappa = (n - d) / 2;
            (2 * kappa + 1, kappa, (n + 1) / 2)
        }
    };
    let ctx = FieldCtx::new(params.p, params.s, n, family.u(), params.modulus.as_deref())?;
    let points = match &params.basis {
        Some(ints) => {
            if ints.len() != n {
                return Err(CodeError::Parameter(format!(
                    "explicit basis must have {n} points, got {}",
                    ints.len()
                )));
            }
            ints.iter()
                .map(|&v| ctx.from_int(v))
                .collect::<Result<Vec<_>, _>>()?
        }
        None => basis::frobenius_orbit(&ctx, &basis::find_normal_element(&ctx)),
    };
    let basis = EvalBasis::new(&ctx, points, family.shift()).map_err(|e| match e {
        LinalgError::Singular => CodeError::DependentPoints,
        other => CodeError::Linalg(other),
    })?;
    let eta = if family.is_hermitian() {
        let subfield_deg = ctx.s() * ctx.n();
        let eta = match params.eta {
            Some(v) => ctx.from_int(v)?,
            None => {
                let mut found = None;
                for v in 0..ctx.field_size() {
                    let cand = ctx.from_int(v).unwrap();
                    if !ctx.in_subfield(&cand, subfield_deg)? {
                        found = Some(cand);
                        break;
                    }
                }
                found.expect("F_(q^2n) strictly contains F_(q^n)")
            }
        };
        if ctx.in_subfield(&eta, subfield_deg)? {
            return Err(CodeError::EtaInSubfield);
        }
        Some(eta)
    } else {
        None
    };
    Ok(CodeSpec {
        family,
        ctx,
        d,
        k,
        kappa,
        m,
        basis,
        eta,
    })
}

fn validate_message(spec: &CodeSpec, f: &[Element]) -> Result<(), CodeError> {
    if f.len() != spec.k {
        return Err(CodeError::MessageLength {
            expected: spec.k,
            got: f.len(),
        });
    }
    if spec.family.is_hermitian() {
        let deg = spec.ctx.s() * spec.ctx.n();
        for (j, fj) in f.iter().enumerate() {
            if !spec.ctx.in_subfield(fj, deg)? {
                return Err(CodeError::MessageSubfield(j));
            }
        }
    }
    Ok(())
}

/// Expand a message into the coefficient vector f̃ of the code's evaluation
/// polynomial, per family layout.
pub fn expand_message(spec: &CodeSpec, f: &[Element]) -> Result<Vec<Element>, CodeError> {
    validate_message(spec, f)?;
    let ctx = &spec.ctx;
    let n = spec.n();
    let k = spec.k;
    let mut ft = vec![ctx.zero(); n];
    match spec.family {
        Family::Symmetric => {
            ft[0] = f[0].clone();
            for j in 1..k {
                ft[j] = f[j].clone();
                ft[n - j] = ctx.frobenius(&f[j], (n - j) as i64);
            }
        }
        Family::Alternating => {
            let e = spec.kappa;
            for j in 0..k {
                ft[e + j] = f[j].clone();
                let mirror = n - e - j;
                ft[mirror] = ctx.neg(&ctx.frobenius(&f[j], mirror as i64));
            }
        }
        Family::HermitianMixed => {
            let eta = spec.eta.as_ref().unwrap();
            let kappa = spec.kappa;
            for j in 0..kappa {
                // c = f_j + η f_{κ+j}; the tail slot holds c^q, the head slot
                // its conjugate-symmetric partner c^{q^{2j+2}}
                let c = ctx.add(&f[j], &ctx.mul(eta, &f[kappa + j]));
                ft[n - 1 - j] = ctx.frob_p(&c, ctx.s());
                ft[j] = ctx.frobenius(&c, (2 * j + 2) as i64);
            }
        }
        Family::HermitianOdd => {
            let eta = spec.eta.as_ref().unwrap();
            let (m, kappa) = (spec.m, spec.kappa);
            ft[m] = ctx.frobenius(&f[0], 2 * m as i64);
            for j in 1..=kappa {
                let c = ctx.add(&f[j], &ctx.mul(eta, &f[kappa + j]));
                ft[m - j] = ctx.frob_p(&c, ctx.s());
                ft[m + j] = ctx.frobenius(&c, (2 * (m + j)) as i64);
            }
        }
    }
    Ok(ft)
}

/// Cyclic index set where f̃ must vanish (complement of the layout support);
/// always exactly d-1 indices starting at the decoder's window start.
pub fn zero_window(spec: &CodeSpec) -> (usize, usize) {
    let n = spec.n();
    match spec.family {
        Family::Symmetric => (spec.k, spec.d - 1),
        Family::Alternating => ((n - spec.kappa + 1) % n, spec.d - 1),
        Family::HermitianMixed => (spec.kappa, spec.d - 1),
        Family::HermitianOdd => ((spec.m + spec.kappa + 1) % n, spec.d - 1),
    }
}

/// Inverse of [`expand_message`]: checks the zero pattern and conjugate
/// symmetry, then recovers the message coordinates.
pub fn compress_message(spec: &CodeSpec, ft: &[Element]) -> Result<Vec<Element>, CodeError> {
    let ctx = &spec.ctx;
    let n = spec.n();
    assert_eq!(ft.len(), n);
    let (j0, len) = zero_window(spec);
    for i in 0..len {
        let idx = (j0 + i) % n;
        if !ctx.is_zero(&ft[idx]) {
            return Err(CodeError::ZeroPattern(idx));
        }
    }
    let k = spec.k;
    let mut f = Vec::with_capacity(k);
    match spec.family {
        Family::Symmetric => {
            for j in 0..k {
                f.push(ft[j].clone());
            }
            for j in 1..k {
                if ft[n - j] != ctx.frobenius(&ft[j], (n - j) as i64) {
                    return Err(CodeError::ConjugateSymmetry(n - j));
                }
            }
        }
        Family::Alternating => {
            let e = spec.kappa;
            for j in 0..k {
                f.push(ft[e + j].clone());
            }
            for j in 0..k {
                let mirror = n - e - j;
                if ft[mirror] != ctx.neg(&ctx.frobenius(&ft[e + j], mirror as i64)) {
                    return Err(CodeError::ConjugateSymmetry(mirror));
                }
            }
        }
        Family::HermitianMixed => {
            let kappa = spec.kappa;
            f = vec![ctx.zero(); k];
            for j in 0..kappa {
                if ft[j] != ctx.frobenius(&ft[n - 1 - j], (2 * j + 1) as i64) {
                    return Err(CodeError::ConjugateSymmetry(j));
                }
                let c = ctx.frob_p(&ft[n - 1 - j], ctx.top_degree() - ctx.s());
                let (a, b) = split_over_eta(spec, &c).ok_or(CodeError::CoordinateSubfield(j))?;
                f[j] = a;
                f[kappa + j] = b;
            }
        }
        Family::HermitianOdd => {
            let (m, kappa) = (spec.m, spec.kappa);
            f = vec![ctx.zero(); k];
            let f0 = ctx.frobenius(&ft[m], -2 * m as i64);
            if !ctx.in_subfield(&f0, ctx.s() * ctx.n())? {
                return Err(CodeError::CoordinateSubfield(0));
            }
            f[0] = f0;
            for j in 1..=kappa {
                if ft[m + j] != ctx.frobenius(&ft[m - j], (n + 2 * j) as i64) {
                    return Err(CodeError::ConjugateSymmetry(m + j));
                }
                let c = ctx.frob_p(&ft[m - j], ctx.top_degree() - ctx.s());
                let (a, b) = split_over_eta(spec, &c).ok_or(CodeError::CoordinateSubfield(j))?;
                f[j] = a;
                f[kappa + j] = b;
            }
        }
    }
    Ok(f)
}

/// Decompose c = a + η·b with a, b ∈ F_{q^n}, using the conjugate system over
/// the basis {1, η}. Returns None when a or b falls outside F_{q^n}.
fn split_over_eta(spec: &CodeSpec, c: &Element) -> Option<(Element, Element)> {
    let ctx = &spec.ctx;
    let eta = spec.eta.as_ref().unwrap();
    let deg = ctx.s() * ctx.n();
    // σ = q^n conjugation: c^σ = a + η^σ b, so b = (c - c^σ) / (η - η^σ)
    let c_sigma = ctx.frob_p(c, deg);
    let eta_sigma = ctx.frob_p(eta, deg);
    let denom = ctx.sub(eta, &eta_sigma);
    let b = ctx
        .mul(&ctx.sub(c, &c_sigma), &ctx.inv(&denom).expect("η not in F_(q^n)"));
    let a = ctx.sub(c, &ctx.mul(eta, &b));
    let ok = ctx.in_subfield(&a, deg).unwrap() && ctx.in_subfield(&b, deg).unwrap();
    ok.then_some((a, b))
}

/// Evaluation encoding: f̃ · Mooreᵀ.
pub fn encode(spec: &CodeSpec, f: &[Element]) -> Result<Vec<Element>, CodeError> {
    let ft = expand_message(spec, f)?;
    Ok(encode_coeffs(spec, &ft))
}

/// Multiply a coefficient vector by Mooreᵀ (shared by encode and the
/// decoder's error-vector reconstruction).
pub fn encode_coeffs(spec: &CodeSpec, coeffs: &[Element]) -> Vec<Element> {
    let ctx = &spec.ctx;
    let moore = spec.basis.moore();
    let n = spec.n();
    let mut word = Vec::with_capacity(n);
    for i in 0..n {
        let mut acc = ctx.zero();
        for (j, c) in coeffs.iter().enumerate() {
            if !ctx.is_zero(c) {
                acc = ctx.add(&acc, &ctx.mul(c, moore.at(i, j)));
            }
        }
        word.push(acc);
    }
    word
}

/// The n×n bilinear/sesquilinear form matrix of the codeword: entries in F_q
/// for symmetric/alternating codes, in F_{q²} for Hermitian codes.
pub fn to_matrix_form(spec: &CodeSpec, f: &[Element]) -> Result<Matrix, CodeError> {
    let word = encode(spec, f)?;
    Ok(word_matrix_form(spec, &word))
}

/// Form matrix of an arbitrary word (codeword or not): entry (i,j) is
/// Tr(α_j·w_i) for u = 1 and Tr(α_j^q·w_i) for u = 2.
pub fn word_matrix_form(spec: &CodeSpec, word: &[Element]) -> Matrix {
    let ctx = &spec.ctx;
    let n = spec.n();
    let d = ctx.top_degree();
    let sub = ctx.sub_ext_degree();
    let points = spec.basis.points();
    let mut rows = Vec::with_capacity(n);
    for wi in word {
        let mut row = Vec::with_capacity(n);
        for alpha in points {
            let factor = if spec.family.is_hermitian() {
                ctx.frob_p(alpha, ctx.s())
            } else {
                alpha.clone()
            };
            row.push(
                ctx.rel_trace(&ctx.mul(&factor, wi), d, sub)
                    .expect("trace of top-field element"),
            );
        }
        rows.push(row);
    }
    Matrix::from_rows(rows)
}

/// Rank of the form matrix over the entry subfield F_{q^u}; entries already
/// lie in the subfield so top-field elimination computes it exactly.
pub fn matrix_form_rank(spec: &CodeSpec, mf: &Matrix) -> usize {
    linalg::rank(&spec.ctx, mf)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    pub(crate) fn spec_sym_7_5() -> CodeSpec {
        make_code_spec(&CodeParams {
            family: Family::Symmetric,
            p: 2,
            s: 1,
            n: 7,
            d: 5,
            modulus: None,
            basis: None,
            eta: None,
        })
        .unwrap()
    }

    fn spec_alt_9_6() -> CodeSpec {
        make_code_spec(&CodeParams {
            family: Family::Alternating,
            p: 2,
            s: 1,
            n: 9,
            d: 6,
            modulus: None,
            basis: None,
            eta: None,
        })
        .unwrap()
    }

    fn spec_herm_mixed_6_3() -> CodeSpec {
        make_code_spec(&CodeParams {
            family: Family::HermitianMixed,
            p: 2,
            s: 1,
            n: 6,
            d: 3,
            modulus: None,
            basis: None,
            eta: None,
        })
        .unwrap()
    }

    fn spec_herm_odd_7_5() -> CodeSpec {
        make_code_spec(&CodeParams {
            family: Family::HermitianOdd,
            p: 2,
            s: 1,
            n: 7,
            d: 5,
            modulus: None,
            basis: None,
            eta: None,
        })
        .unwrap()
    }

    pub(crate) fn random_message(spec: &CodeSpec, rng: &mut ChaCha8Rng) -> Vec<Element> {
        let ctx = spec.ctx();
        if spec.family().is_hermitian() {
            let sub = ctx.subfield_basis(ctx.s() * ctx.n()).unwrap();
            (0..spec.k())
                .map(|_| {
                    let mut acc = ctx.zero();
                    for b in &sub {
                        let c = rng.gen_range(0..ctx.p());
                        if c != 0 {
                            let scaled = ctx.from_coeffs(
                                &b.coeffs()
                                    .iter()
                                    .map(|&x| (x * c) % ctx.p())
                                    .collect::<Vec<_>>(),
                            )
                            .unwrap();
                            acc = ctx.add(&acc, &scaled);
                        }
                    }
                    acc
                })
                .collect()
        } else {
            (0..spec.k())
                .map(|_| {
                    let coeffs: Vec<u64> = (0..ctx.top_degree())
                        .map(|_| rng.gen_range(0..ctx.p()))
                        .collect();
                    ctx.from_coeffs(&coeffs).unwrap()
                })
                .collect()
        }
    }

    fn all_specs() -> Vec<CodeSpec> {
        vec![
            spec_sym_7_5(),
            spec_alt_9_6(),
            spec_herm_mixed_6_3(),
            spec_herm_odd_7_5(),
        ]
    }

    #[test]
    fn parameter_validation() {
        let sym = spec_sym_7_5();
        assert_eq!(sym.k(), 2);
        let herm = spec_herm_odd_7_5();
        assert_eq!((herm.m(), herm.kappa(), herm.k()), (4, 1, 3));
        // alternating with even n fails
        let err = make_code_spec(&CodeParams {
            family: Family::Alternating,
            p: 2,
            s: 1,
            n: 8,
            d: 4,
            modulus: None,
            basis: None,
            eta: None,
        })
        .unwrap_err();
        assert!(matches!(err, CodeError::Parameter(_)));
        // symmetric with n-d odd fails, citing the unsupported puncturing
        let err = make_code_spec(&CodeParams {
            family: Family::Symmetric,
            p: 2,
            s: 1,
            n: 7,
            d: 4,
            modulus: None,
            basis: None,
            eta: None,
        })
        .unwrap_err();
        assert!(err.to_string().contains("punctured"));
    }

    #[test]
    fn eta_validation() {
        let spec = spec_herm_odd_7_5();
        let ctx = spec.ctx();
        let eta = spec.eta().unwrap();
        assert!(!ctx.in_subfield(eta, 7).unwrap());
        // explicitly passing an F_(q^n) element as eta fails
        let err = make_code_spec(&CodeParams {
            family: Family::HermitianOdd,
            p: 2,
            s: 1,
            n: 7,
            d: 5,
            modulus: None,
            basis: None,
            eta: Some(1),
        })
        .unwrap_err();
        assert!(matches!(err, CodeError::EtaInSubfield));
    }

    #[test]
    fn symmetric_expand_reference_values() {
        // f = (z^7, z^13) -> f̃ = (z^7, z^13, 0, 0, 0, 0, z^70)
        let spec = spec_sym_7_5();
        let ctx = spec.ctx();
        let z = ctx.primitive().unwrap();
        let f = vec![ctx.pow(&z, 7), ctx.pow(&z, 13)];
        let ft = expand_message(&spec, &f).unwrap();
        assert_eq!(ft[0], ctx.pow(&z, 7));
        assert_eq!(ft[1], ctx.pow(&z, 13));
        for i in 2..6 {
            assert!(ctx.is_zero(&ft[i]));
        }
        assert_eq!(ft[6], ctx.pow(&z, 70));
    }

    #[test]
    fn alternating_expand_reference_values() {
        // f = (z^77, z^397) -> f̃ = (0,0,0, z^77, z^397, z^440, z^329, 0, 0)
        let spec = spec_alt_9_6();
        let ctx = spec.ctx();
        let z = ctx.primitive().unwrap();
        let f = vec![ctx.pow(&z, 77), ctx.pow(&z, 397)];
        let ft = expand_message(&spec, &f).unwrap();
        let expect: Vec<Option<u128>> = vec![
            None,
            None,
            None,
            Some(77),
            Some(397),
            Some(440),
            Some(329),
            None,
            None,
        ];
        for (i, e) in expect.iter().enumerate() {
            match e {
                Some(k) => assert_eq!(ft[i], ctx.pow(&z, *k)),
                None => assert!(ctx.is_zero(&ft[i])),
            }
        }
    }

    #[test]
    fn zero_message_expands_to_zero() {
        for spec in all_specs() {
            let ctx = spec.ctx();
            let f = vec![ctx.zero(); spec.k()];
            let ft = expand_message(&spec, &f).unwrap();
            assert!(ft.iter().all(|c| ctx.is_zero(c)));
            let c = encode(&spec, &f).unwrap();
            assert!(c.iter().all(|x| ctx.is_zero(x)));
        }
    }

    #[test]
    fn compress_round_trip() {
        for spec in all_specs() {
            let mut rng = ChaCha8Rng::seed_from_u64(41);
            for _ in 0..100 {
                let f = random_message(&spec, &mut rng);
                let ft = expand_message(&spec, &f).unwrap();
                assert_eq!(compress_message(&spec, &ft).unwrap(), f);
            }
        }
    }

    #[test]
    fn compress_rejects_zero_pattern_violation() {
        for spec in all_specs() {
            let mut rng = ChaCha8Rng::seed_from_u64(42);
            let f = random_message(&spec, &mut rng);
            let mut ft = expand_message(&spec, &f).unwrap();
            let (j0, _) = zero_window(&spec);
            ft[j0] = spec.ctx().one();
            assert!(matches!(
                compress_message(&spec, &ft).unwrap_err(),
                CodeError::ZeroPattern(_)
            ));
        }
    }

    #[test]
    fn compress_rejects_symmetry_violation() {
        for spec in all_specs() {
            let mut rng = ChaCha8Rng::seed_from_u64(43);
            loop {
                let f = random_message(&spec, &mut rng);
                let mut ft = expand_message(&spec, &f).unwrap();
                // corrupt one support slot that has a symmetry partner
                let idx = match spec.family() {
                    Family::Symmetric => spec.n() - 1,
                    Family::Alternating => spec.n() - spec.e(),
                    Family::HermitianMixed => 0,
                    Family::HermitianOdd => spec.m() + 1,
                };
                let bumped = spec.ctx().add(&ft[idx], &spec.ctx().one());
                if spec.ctx().is_zero(&bumped) {
                    continue;
                }
                ft[idx] = bumped;
                let err = compress_message(&spec, &ft).unwrap_err();
                assert!(
                    matches!(
                        err,
                        CodeError::ConjugateSymmetry(_) | CodeError::CoordinateSubfield(_)
                    ),
                    "unexpected error {err:?} for {}",
                    spec.family().name()
                );
                break;
            }
        }
    }

    #[test]
    fn encode_is_additive() {
        for spec in all_specs() {
            let ctx = spec.ctx();
            let mut rng = ChaCha8Rng::seed_from_u64(44);
            for _ in 0..100 {
                let f1 = random_message(&spec, &mut rng);
                let f2 = random_message(&spec, &mut rng);
                let sum: Vec<Element> = f1
                    .iter()
                    .zip(&f2)
                    .map(|(a, b)| ctx.add(a, b))
                    .collect();
                let c1 = encode(&spec, &f1).unwrap();
                let c2 = encode(&spec, &f2).unwrap();
                let cs = encode(&spec, &sum).unwrap();
                for i in 0..spec.n() {
                    assert_eq!(cs[i], ctx.add(&c1[i], &c2[i]));
                }
            }
        }
    }

    #[test]
    fn matrix_form_shapes() {
        for spec in all_specs() {
            let ctx = spec.ctx();
            let mut rng = ChaCha8Rng::seed_from_u64(45);
            for _ in 0..100 {
                let f = random_message(&spec, &mut rng);
                let a = to_matrix_form(&spec, &f).unwrap();
                let n = spec.n();
                match spec.family() {
                    Family::Symmetric => {
                        for i in 0..n {
                            for j in 0..n {
                                assert_eq!(a.at(i, j), a.at(j, i));
                            }
                        }
                    }
                    Family::Alternating => {
                        for i in 0..n {
                            assert!(ctx.is_zero(a.at(i, i)));
                            for j in 0..n {
                                assert_eq!(*a.at(i, j), ctx.neg(a.at(j, i)));
                            }
                        }
                    }
                    Family::HermitianMixed | Family::HermitianOdd => {
                        for i in 0..n {
                            for j in 0..n {
                                assert_eq!(*a.at(i, j), ctx.frob_p(a.at(j, i), ctx.s()));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn encode_injective_on_random_pairs() {
        for spec in all_specs() {
            let mut rng = ChaCha8Rng::seed_from_u64(46);
            for _ in 0..50 {
                let f1 = random_message(&spec, &mut rng);
                let f2 = random_message(&spec, &mut rng);
                if f1 != f2 {
                    assert_ne!(encode(&spec, &f1).unwrap(), encode(&spec, &f2).unwrap());
                }
            }
        }
    }
}
