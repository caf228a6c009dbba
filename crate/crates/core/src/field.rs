//! Exact arithmetic in the finite-field tower F_p ⊆ F_q = F_{p^s} ⊆ F_{q^{un}}.
//!
//! Elements always live in the top field and are stored as monomial-basis
//! coordinate vectors over F_p relative to the context's modulus. Subfield
//! elements are top-field elements that pass [`FieldCtx::in_subfield`].

use std::cell::Cell;
use std::collections::HashMap;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FieldError {
    #[error("p = {0} is not prime")]
    NonPrime(u64),
    #[error("modulus must be monic of degree {expected}, got {got}")]
    WrongDegree { expected: usize, got: usize },
    #[error("modulus is reducible over F_{0}")]
    Reducible(u64),
    #[error("inversion of zero")]
    DivisionByZero,
    #[error("degree {0} does not divide degree {1}")]
    NonDivisorDegree(usize, usize),
    #[error("element does not lie in the subfield of degree {0}")]
    NotInSubfield(usize),
    #[error("field too large: p^(s*n*u) must fit in 127 bits")]
    TooLarge,
    #[error("bad coefficient vector (wrong length or entry >= p)")]
    BadCoefficients,
    #[error("cannot parse element from {0:?}")]
    Parse(String),
}

/// One element of the top field, little-endian monomial-basis coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Element {
    coeffs: Vec<u64>,
}

impl Element {
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }
}

thread_local! {
    static MUL_OPS: Cell<u64> = const { Cell::new(0) };
}

/// Reset the thread-local field-multiplication counter (diagnostics only).
pub fn reset_mul_ops() {
    MUL_OPS.with(|c| c.set(0));
}

/// Number of field multiplications performed on this thread since the last reset.
pub fn mul_ops() -> u64 {
    MUL_OPS.with(|c| c.get())
}

struct LogTable {
    /// pow[k] = integer form of z^k, with z the canonical primitive element.
    pow: Vec<u128>,
    dlog: HashMap<u128, u64>,
}

/// Immutable description of the tower F_p ⊆ F_{p^s} ⊆ F_{p^{s·n·u}}.
pub struct FieldCtx {
    p: u64,
    s: usize,
    n: usize,
    u: usize,
    /// Monic irreducible over F_p, little-endian, length top_degree + 1.
    modulus: Vec<u64>,
    log: Option<LogTable>,
}

impl std::fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FieldCtx")
            .field("p", &self.p)
            .field("s", &self.s)
            .field("n", &self.n)
            .field("u", &self.u)
            .field("modulus", &self.modulus)
            .finish()
    }
}

// ---------------------------------------------------------------------------
// scalar arithmetic mod p
// ---------------------------------------------------------------------------

fn addm(a: u64, b: u64, p: u64) -> u64 {
    let r = a + b;
    if r >= p {
        r - p
    } else {
        r
    }
}

fn subm(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

fn mulm(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powm(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulm(r, a, p);
        }
        a = mulm(a, a, p);
        e >>= 1;
    }
    r
}

fn invm(a: u64, p: u64) -> u64 {
    powm(a, p - 2, p)
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

// ---------------------------------------------------------------------------
// dense polynomial arithmetic over F_p (little-endian coefficient vectors)
// ---------------------------------------------------------------------------

fn poly_deg(a: &[u64]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

fn poly_trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] = addm(out[i + j], mulm(ai, bj, p), p);
        }
    }
    out
}

/// Remainder of `a` modulo the monic polynomial `m`.
fn poly_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let md = poly_deg(m).expect("monic modulus");
    let mut r = a.to_vec();
    while let Some(rd) = poly_deg(&r) {
        if rd < md {
            break;
        }
        let c = r[rd];
        for k in 0..=md {
            let idx = rd - md + k;
            r[idx] = subm(r[idx], mulm(c, m[k], p), p);
        }
    }
    r.truncate(md);
    r.resize(md, 0);
    r
}

fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = poly_trim(a.to_vec());
    let mut b = poly_trim(b.to_vec());
    while !b.is_empty() {
        let lead = *b.last().unwrap();
        // make b monic so poly_rem applies
        let inv = invm(lead, p);
        let bm: Vec<u64> = b.iter().map(|&c| mulm(c, inv, p)).collect();
        let r = poly_trim(poly_rem(&a, &bm, p));
        a = b;
        b = r;
    }
    if let Some(&lead) = a.last() {
        let inv = invm(lead, p);
        a = a.iter().map(|&c| mulm(c, inv, p)).collect();
    }
    a
}

/// t^e mod m by square-and-multiply (e is a machine word; used for e = p).
fn poly_powmod(t: &[u64], mut e: u64, m: &[u64], p: u64) -> Vec<u64> {
    let md = poly_deg(m).expect("monic modulus");
    let mut result = vec![0u64; md];
    if md > 0 {
        result[0] = 1;
    }
    let mut base = poly_rem(t, m, p);
    while e > 0 {
        if e & 1 == 1 {
            result = poly_rem(&poly_mul(&result, &base, p), m, p);
        }
        base = poly_rem(&poly_mul(&base, &base, p), m, p);
        e >>= 1;
    }
    result
}

fn prime_factors(mut n: u128) -> Vec<u128> {
    let mut out = Vec::new();
    let mut d = 2u128;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// x^{p^e} mod f, computed by an e-step Frobenius ladder.
fn frob_power_of_x(e: usize, f: &[u64], p: u64) -> Vec<u64> {
    let md = poly_deg(f).expect("monic modulus");
    let mut t = vec![0u64; md];
    if md == 1 {
        // x ≡ -f_0 mod f
        t[0] = subm(0, f[0], p);
    } else {
        t[1] = 1;
    }
    for _ in 0..e {
        t = poly_powmod(&t, p, f, p);
    }
    t
}

fn is_irreducible(f: &[u64], p: u64) -> bool {
    let d = match poly_deg(f) {
        Some(d) if d >= 1 => d,
        _ => return false,
    };
    if d == 1 {
        return true;
    }
    // the monomial x reduced mod f
    let mut x = vec![0u64; d];
    x[1] = 1;
    // x^{p^d} must equal x mod f
    if frob_power_of_x(d, f, p) != x {
        return false;
    }
    // gcd(x^{p^{d/r}} - x, f) must be trivial for every prime r | d
    for r in prime_factors(d as u128) {
        let e = d / r as usize;
        let mut t = frob_power_of_x(e, f, p);
        t[1] = subm(t[1], 1, p);
        let g = poly_gcd(&t, f, p);
        if poly_deg(&g) != Some(0) {
            return false;
        }
    }
    true
}

// ---------------------------------------------------------------------------
// vector/matrix elimination over F_p (internal helpers for subfield machinery)
// ---------------------------------------------------------------------------

/// Solve the square system A x = b over F_p; A given row-major. Returns None
/// if A is singular.
fn fp_solve(a: &[Vec<u64>], b: &[u64], p: u64) -> Option<Vec<u64>> {
    let n = a.len();
    let mut m: Vec<Vec<u64>> = a
        .iter()
        .zip(b)
        .map(|(row, &rb)| {
            let mut r = row.clone();
            r.push(rb);
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| m[r][col] != 0)?;
        m.swap(col, pivot);
        let inv = invm(m[col][col], p);
        for k in col..=n {
            m[col][k] = mulm(m[col][k], inv, p);
        }
        for r in 0..n {
            if r != col && m[r][col] != 0 {
                let c = m[r][col];
                for k in col..=n {
                    m[r][k] = subm(m[r][k], mulm(c, m[col][k], p), p);
                }
            }
        }
    }
    Some(m.iter().map(|row| row[n]).collect())
}

/// Basis of the kernel of the square matrix A over F_p (row-major).
fn fp_kernel(a: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut m: Vec<Vec<u64>> = a.to_vec();
    let mut pivot_of_col = vec![None; cols];
    let mut r = 0usize;
    for c in 0..cols {
        if let Some(pr) = (r..rows).find(|&i| m[i][c] != 0) {
            m.swap(r, pr);
            let inv = invm(m[r][c], p);
            for k in 0..cols {
                m[r][k] = mulm(m[r][k], inv, p);
            }
            for i in 0..rows {
                if i != r && m[i][c] != 0 {
                    let f = m[i][c];
                    for k in 0..cols {
                        m[i][k] = subm(m[i][k], mulm(f, m[r][k], p), p);
                    }
                }
            }
            pivot_of_col[c] = Some(r);
            r += 1;
        }
    }
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_of_col[free].is_some() {
            continue;
        }
        let mut v = vec![0u64; cols];
        v[free] = 1;
        for c in 0..cols {
            if let Some(pr) = pivot_of_col[c] {
                v[c] = subm(0, m[pr][free], p);
            }
        }
        basis.push(v);
    }
    basis
}

// ---------------------------------------------------------------------------
// FieldCtx
// ---------------------------------------------------------------------------

impl FieldCtx {
    /// Build the tower context. When `modulus` is absent, the deterministic
    /// canonical modulus is used: the monic irreducible of degree s·n·u over
    /// F_p with the smallest integer encoding of its non-leading coefficients.
    pub fn new(
        p: u64,
        s: usize,
        n: usize,
        u: usize,
        modulus: Option<&[u64]>,
    ) -> Result<FieldCtx, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NonPrime(p));
        }
        assert!(s >= 1 && n >= 1, "s·n·u must be at least 1");
        assert!(u == 1 || u == 2, "u must be 1 or 2");
        let d = s * n * u;
        // keep integer forms of elements inside u128
        if (d as u32).checked_mul(64 - p.leading_zeros()).is_none()
            || num_bits(p, d) > 126
        {
            return Err(FieldError::TooLarge);
        }
        let modulus = match modulus {
            Some(m) => {
                let m = m.to_vec();
                if m.iter().any(|&c| c >= p) {
                    return Err(FieldError::BadCoefficients);
                }
                match poly_deg(&m) {
                    Some(deg) if deg == d && m[d] == 1 => {}
                    Some(deg) => {
                        return Err(FieldError::WrongDegree {
                            expected: d,
                            got: deg,
                        })
                    }
                    None => {
                        return Err(FieldError::WrongDegree {
                            expected: d,
                            got: 0,
                        })
                    }
                }
                if !is_irreducible(&m, p) {
                    return Err(FieldError::Reducible(p));
                }
                m
            }
            None => canonical_modulus(p, d),
        };
        let mut ctx = FieldCtx {
            p,
            s,
            n,
            u,
            modulus,
            log: None,
        };
        if ctx.field_size() <= 1 << 20 {
            ctx.log = Some(ctx.build_log_table());
        }
        Ok(ctx)
    }

    pub fn p(&self) -> u64 {
        self.p
    }
    pub fn s(&self) -> usize {
        self.s
    }
    pub fn n(&self) -> usize {
        self.n
    }
    pub fn u(&self) -> usize {
        self.u
    }
    /// s·n·u, the extension degree of the top field over F_p.
    pub fn top_degree(&self) -> usize {
        self.s * self.n * self.u
    }
    /// Degree over F_p of the coefficient subfield F_{q^u}.
    pub fn sub_ext_degree(&self) -> usize {
        self.s * self.u
    }
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }
    /// q = p^s.
    pub fn q(&self) -> u128 {
        (self.p as u128).pow(self.s as u32)
    }
    /// Number of elements of the top field.
    pub fn field_size(&self) -> u128 {
        (self.p as u128).pow(self.top_degree() as u32)
    }

    // -- construction of elements ------------------------------------------

    pub fn zero(&self) -> Element {
        Element {
            coeffs: vec![0; self.top_degree()],
        }
    }

    pub fn one(&self) -> Element {
        let mut e = self.zero();
        e.coeffs[0] = 1 % self.p;
        e
    }

    /// The monomial x (a root of the modulus).
    pub fn monomial(&self) -> Element {
        if self.top_degree() == 1 {
            let mut e = self.zero();
            e.coeffs[0] = subm(0, self.modulus[0], self.p);
            return e;
        }
        let mut e = self.zero();
        e.coeffs[1] = 1;
        e
    }

    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<Element, FieldError> {
        if coeffs.len() != self.top_degree() || coeffs.iter().any(|&c| c >= self.p) {
            return Err(FieldError::BadCoefficients);
        }
        Ok(Element {
            coeffs: coeffs.to_vec(),
        })
    }

    /// Element whose base-p digits (little-endian) are the coordinates.
    pub fn from_int(&self, mut v: u128) -> Result<Element, FieldError> {
        let mut e = self.zero();
        for c in e.coeffs.iter_mut() {
            *c = (v % self.p as u128) as u64;
            v /= self.p as u128;
        }
        if v != 0 {
            return Err(FieldError::BadCoefficients);
        }
        Ok(e)
    }

    pub fn to_int(&self, a: &Element) -> u128 {
        let mut v = 0u128;
        for &c in a.coeffs.iter().rev() {
            v = v * self.p as u128 + c as u128;
        }
        v
    }

    /// Parse the element text form: a non-negative decimal integer, or "z^k"
    /// when a log table exists.
    pub fn parse(&self, s: &str) -> Result<Element, FieldError> {
        let s = s.trim();
        if let Some(k) = s.strip_prefix("z^") {
            let table = self
                .log
                .as_ref()
                .ok_or_else(|| FieldError::Parse(s.to_string()))?;
            let k: u64 = k.parse().map_err(|_| FieldError::Parse(s.to_string()))?;
            let ord = table.pow.len() as u64;
            return self.from_int(table.pow[(k % ord) as usize]);
        }
        let v: u128 = s.parse().map_err(|_| FieldError::Parse(s.to_string()))?;
        self.from_int(v)
    }

    pub fn render(&self, a: &Element) -> String {
        self.to_int(a).to_string()
    }

    /// "z^k" rendering relative to the canonical primitive element, when the
    /// log table exists. Zero renders as "0".
    pub fn render_log(&self, a: &Element) -> Option<String> {
        let table = self.log.as_ref()?;
        let v = self.to_int(a);
        if v == 0 {
            return Some("0".to_string());
        }
        table.dlog.get(&v).map(|k| format!("z^{k}"))
    }

    /// Discrete log of `a` relative to the canonical primitive element.
    pub fn dlog(&self, a: &Element) -> Option<u64> {
        let table = self.log.as_ref()?;
        table.dlog.get(&self.to_int(a)).copied()
    }

    /// The canonical primitive element z, when the log table exists.
    pub fn primitive(&self) -> Option<Element> {
        let table = self.log.as_ref()?;
        Some(self.from_int(table.pow[1 % table.pow.len()]).unwrap())
    }

    // -- arithmetic ----------------------------------------------------------

    pub fn is_zero(&self, a: &Element) -> bool {
        a.coeffs.iter().all(|&c| c == 0)
    }

    pub fn add(&self, a: &Element, b: &Element) -> Element {
        Element {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(&x, &y)| addm(x, y, self.p))
                .collect(),
        }
    }

    pub fn sub(&self, a: &Element, b: &Element) -> Element {
        Element {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(&x, &y)| subm(x, y, self.p))
                .collect(),
        }
    }

    pub fn neg(&self, a: &Element) -> Element {
        Element {
            coeffs: a.coeffs.iter().map(|&x| subm(0, x, self.p)).collect(),
        }
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        MUL_OPS.with(|c| c.set(c.get() + 1));
        let prod = poly_mul(&a.coeffs, &b.coeffs, self.p);
        let mut coeffs = poly_rem(&prod, &self.modulus, self.p);
        coeffs.resize(self.top_degree(), 0);
        Element { coeffs }
    }

    pub fn inv(&self, a: &Element) -> Result<Element, FieldError> {
        if self.is_zero(a) {

            return Err(FieldError::DivisionByZero);
        }
        // extended Euclid on (a, modulus)
        let p = self.p;
        let mut r0 = poly_trim(a.coeffs.clone());
        let mut r1 = self.modulus.clone();
        let mut t0: Vec<u64> = vec![1];
        let mut t1: Vec<u64> = vec![];
        while !r1.is_empty() {
            // r0 = q r1 + r, computed by monic-normalised remainder steps
            let lead = *r1.last().unwrap();
            let linv = invm(lead, p);
            let r1m: Vec<u64> = r1.iter().map(|&c| mulm(c, linv, p)).collect();
            // quotient of r0 by monic r1m
            let (q, rem) = poly_divmod_monic(&r0, &r1m, p);
            // scale: r0 = (q * linv) r1 + rem
            let q_scaled: Vec<u64> = q.iter().map(|&c| mulm(c, linv, p)).collect();
            let qt1 = poly_mul(&q_scaled, &t1, p);
            let mut t2 = t0.clone();
            t2.resize(t2.len().max(qt1.len()), 0);
            for (i, &c) in qt1.iter().enumerate() {
                t2[i] = subm(t2[i], c, p);
            }
            t0 = t1;
            t1 = poly_trim(t2);
            r0 = r1;
            r1 = poly_trim(rem);
        }
        // r0 = gcd (a unit); t0 satisfies t0 * a ≡ r0 (mod modulus)
        debug_assert_eq!(poly_deg(&r0), Some(0));
        let ginv = invm(r0[0], p);
        let mut coeffs: Vec<u64> = t0.iter().map(|&c| mulm(c, ginv, p)).collect();
        coeffs = poly_rem(&coeffs, &self.modulus, p);
        coeffs.resize(self.top_degree(), 0);
        Ok(Element { coeffs })
    }

    pub fn pow(&self, a: &Element, mut e: u128) -> Element {
        let mut result = self.one();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(&result, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        result
    }

    /// a^{p^j} with j reduced modulo the top degree.
    pub fn frob_p(&self, a: &Element, j: usize) -> Element {
        let j = j % self.top_degree();
        let mut r = a.clone();
        for _ in 0..j {
            r = self.pow_small(&r, self.p);
        }
        r
    }

    fn pow_small(&self, a: &Element, mut e: u64) -> Element {
        let mut result = self.one();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(&result, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        result
    }

    /// a^{q^i}; negative i applies the inverse automorphism.
    pub fn frobenius(&self, a: &Element, i: i64) -> Element {
        let orbit = (self.n * self.u) as i64;
        let j = i.rem_euclid(orbit) as usize;
        self.frob_p(a, (self.s * j) % self.top_degree())
    }

    /// Relative trace from the subfield of degree `from_deg` (over F_p) down
    /// to the subfield of degree `to_deg`.
    pub fn rel_trace(
        &self,
        a: &Element,
        from_deg: usize,
        to_deg: usize,
    ) -> Result<Element, FieldError> {
        if to_deg == 0 || from_deg % to_deg != 0 {
            return Err(FieldError::NonDivisorDegree(to_deg, from_deg));
        }
        if self.top_degree() % from_deg != 0 {
            return Err(FieldError::NonDivisorDegree(from_deg, self.top_degree()));
        }
        if !self.in_subfield(a, from_deg)? {
            return Err(FieldError::NotInSubfield(from_deg));
        }
        let steps = from_deg / to_deg;
        let mut acc = self.zero();
        let mut cur = a.clone();
        for _ in 0..steps {
            acc = self.add(&acc, &cur);
            cur = self.frob_p(&cur, to_deg);
        }
        debug_assert!(self.in_subfield(&acc, to_deg).unwrap());
        Ok(acc)
    }

    /// True iff a^{p^deg} = a, i.e. a lies in the subfield of degree `deg`.
    pub fn in_subfield(&self, a: &Element, deg: usize) -> Result<bool, FieldError> {
        if deg == 0 || self.top_degree() % deg != 0 {
            return Err(FieldError::NonDivisorDegree(deg, self.top_degree()));
        }
        Ok(self.frob_p(a, deg) == *a)
    }

    // -- subfield coordinate machinery ---------------------------------------

    /// Deterministic F_p-basis of the subfield of degree `deg`, computed as a
    /// kernel basis of (Frob_{p^deg} - id).
    pub fn subfield_basis(&self, deg: usize) -> Result<Vec<Element>, FieldError> {
        let d = self.top_degree();
        if deg == 0 || d % deg != 0 {
            return Err(FieldError::NonDivisorDegree(deg, d));
        }
        // rows of (F - I): row index = output coordinate, column = input monomial
        let mut cols: Vec<Vec<u64>> = Vec::with_capacity(d);
        for j in 0..d {
            let mut xj = self.zero();
            xj.coeffs[j] = 1;
            let fx = self.frob_p(&xj, deg);
            let col: Vec<u64> = fx
                .coeffs
                .iter()
                .zip(&xj.coeffs)
                .map(|(&a, &b)| subm(a, b, self.p))
                .collect();
            cols.push(col);
        }
        let rows: Vec<Vec<u64>> = (0..d).map(|i| (0..d).map(|j| cols[j][i]).collect()).collect();
        let kernel = fp_kernel(&rows, self.p);
        debug_assert_eq!(kernel.len(), deg);
        Ok(kernel
            .into_iter()
            .map(|coeffs| Element { coeffs })
            .collect())
    }

    /// Coordinates of `a` with respect to the K-basis {1, x, ..., x^{m-1}} of
    /// the top field over the subfield K of degree `deg`, where m = D/deg.
    /// Entries are elements of K (as top-field elements).
    pub fn coords_over_subfield(
        &self,
        a: &Element,
        deg: usize,
    ) -> Result<Vec<Element>, FieldError> {
        let d = self.top_degree();
        if deg == 0 || d % deg != 0 {
            return Err(FieldError::NonDivisorDegree(deg, d));
        }
        let m = d / deg;
        let kb = self.subfield_basis(deg)?;
        // column (j*deg + t) = vector of k_t * x^j
        let x = self.monomial();
        let mut xj = self.one();
        let mut cols: Vec<Vec<u64>> = Vec::with_capacity(d);
        for _ in 0..m {
            for kt in &kb {
                let prod = self.mul(kt, &xj);
                cols.push(prod.coeffs);
            }
            xj = self.mul(&xj, &x);
        }
        let rows: Vec<Vec<u64>> = (0..d).map(|i| (0..d).map(|j| cols[j][i]).collect()).collect();
        let sol = fp_solve(&rows, &a.coeffs, self.p)
            .expect("monomial powers times subfield basis always form an F_p-basis");
        let mut coords = Vec::with_capacity(m);
        for j in 0..m {
            let mut c = self.zero();
            for (t, kt) in kb.iter().enumerate() {
                let scalar = sol[j * deg + t];
                if scalar != 0 {
                    let mut scaled = kt.clone();
                    for v in scaled.coeffs.iter_mut() {
                        *v = mulm(*v, scalar, self.p);
                    }
                    c = self.add(&c, &scaled);
                }
            }
            coords.push(c);
        }
        Ok(coords)
    }

    // -- log table -------------------------------------------------------------

    fn build_log_table(&self) -> LogTable {
        let ord = self.field_size() - 1;
        let factors = prime_factors(ord);
        let mut z = self.one();
        for v in 1..self.field_size() {
            let cand = self.from_int(v).unwrap();
            if self.is_zero(&cand) {
                continue;
            }
            if factors
                .iter()
                .all(|&r| !self.is_one(&self.pow(&cand, ord / r)))
            {
                z = cand;
                break;
            }
        }
        let mut pow = Vec::with_capacity(ord as usize);
        let mut dlog = HashMap::with_capacity(ord as usize);
        let mut cur = self.one();
        for k in 0..ord.max(1) {
            let v = self.to_int(&cur);
            pow.push(v);
            dlog.entry(v).or_insert(k as u64);
            cur = self.mul(&cur, &z);
        }
        LogTable { pow, dlog }
    }

    pub fn is_one(&self, a: &Element) -> bool {
        *a == self.one()
    }
}

fn num_bits(p: u64, d: usize) -> u32 {
    // bits needed to hold p^d
    ((64 - p.leading_zeros()) as usize * d) as u32
}

/// Deterministic search for the canonical modulus: smallest integer encoding
/// of the non-leading coefficients.
fn canonical_modulus(p: u64, d: usize) -> Vec<u64> {
    let mut k = 0u128;
    loop {
        let mut f = vec![0u64; d + 1];
        f[d] = 1;
        let mut v = k;
        for c in f.iter_mut().take(d) {
            *c = (v % p as u128) as u64;
            v /= p as u128;
        }
        if v == 0 && is_irreducible(&f, p) {
            return f;
        }
        k += 1;
    }
}

/// Quotient and remainder of a by the monic polynomial m.
fn poly_divmod_monic(a: &[u64], m: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let md = poly_deg(m).expect("monic divisor");
    let mut r = a.to_vec();
    let ad = match poly_deg(&r) {
        Some(ad) if ad >= md => ad,
        _ => return (Vec::new(), r),
    };
    let mut q = vec![0u64; ad - md + 1];
    while let Some(rd) = poly_deg(&r) {
        if rd < md {
            break;
        }
        let c = r[rd];
        q[rd - md] = c;
        for k in 0..=md {
            let idx = rd - md + k;
            r[idx] = subm(r[idx], mulm(c, m[k], p), p);
        }
    }
    (q, poly_trim(r))
}
