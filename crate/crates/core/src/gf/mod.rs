//! Arithmetic in F_{q^d} with q = p^e, flattened to a single degree-`e·d`
//! extension of the prime field.
//!
//! Elements are [`FFElt`] values: the coefficient vector in the power basis
//! of the modulus root, packed base `p` with the constant coordinate least
//! significant. The packed integer order is the canonical element order used
//! by every enumeration and tie-break in the crate.
//!
//! Fields up to [`TABLE_LIMIT`] elements carry exp/log (and for odd `p`,
//! Zech) tables; larger fields fall back to schoolbook polynomial arithmetic.

mod embed;
pub(crate) mod prime_poly;

pub use embed::{embed, Embedding};

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};

/// Default ceiling on the number of elements an exhaustive operation may visit.
pub const DEFAULT_CEILING: u64 = 1 << 22;
/// Fields up to this size get exp/log tables.
pub const TABLE_LIMIT: u64 = 1 << 22;
const MAX_SIZE: u64 = 1 << 48;
const NO_LOG: u32 = u32::MAX;

/// A field element, stored as its packed coefficient vector.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FFElt(u64);

impl FFElt {
    pub const ZERO: FFElt = FFElt(0);
    pub const ONE: FFElt = FFElt(1);

    pub fn index(self) -> u64 {
        self.0
    }

    pub(crate) const fn from_raw(idx: u64) -> FFElt {
        FFElt(idx)
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Debug for FFElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

struct Tables {
    order: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
    // zech[k] = log(1 + g^k), NO_LOG when 1 + g^k = 0; empty in characteristic 2
    zech: Vec<u32>,
}

struct CoordMap {
    // inverse of the F_p-basis {gamma^i omega^j}, row-major, entries in F_p
    inverse: Vec<u32>,
    omega_powers: Vec<FFElt>,
}

struct FieldData {
    p: u32,
    e: u32,
    d: u32,
    degree: u32,
    size: u64,
    q: u64,
    modulus: Vec<u32>,
    tables: Option<Tables>,
    primitive: FFElt,
    subfield_gen: Option<FFElt>,
    coords: OnceLock<CoordMap>,
}

/// An immutable finite-field context. Cheap to clone.
#[derive(Clone)]
pub struct FieldCtx {
    data: Arc<FieldData>,
    ceiling: u64,
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.data, &other.data)
            || (self.data.p == other.data.p
                && self.data.e == other.data.e
                && self.data.modulus == other.data.modulus)
    }
}

impl Eq for FieldCtx {}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "F_{{{}^{}}} over F_{{{}}} (modulus {:?})",
            self.data.p, self.data.degree, self.data.q, self.data.modulus
        )
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut f = 2;
    while f * f <= n {
        if n % f == 0 {
            return false;
        }
        f += 1;
    }
    true
}

fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut f = 2u64;
    while f * f <= n {
        if n % f == 0 {
            out.push(f);
            while n % f == 0 {
                n /= f;
            }
        }
        f += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn cache() -> &'static Mutex<HashMap<(u32, u32, u32), Arc<FieldData>>> {
    static CACHE: OnceLock<Mutex<HashMap<(u32, u32, u32), Arc<FieldData>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

impl FieldCtx {
    /// F_{q^d} with q = p^e, using the least irreducible modulus of degree e·d.
    pub fn new(p: u64, e: u32, d: u32) -> Result<Self> {
        let (p32, degree) = Self::check_params(p, e, d)?;
        let key = (p32, e, d);
        if let Some(data) = cache().lock().unwrap().get(&key) {
            return Ok(FieldCtx { data: data.clone(), ceiling: DEFAULT_CEILING });
        }
        let modulus = prime_poly::least_irreducible(degree, p32);
        let data = Arc::new(FieldData::build(p32, e, d, modulus));
        cache().lock().unwrap().insert(key, data.clone());
        Ok(FieldCtx { data, ceiling: DEFAULT_CEILING })
    }

    /// A field with an explicit monic modulus over F_p (constant term first).
    /// The designated subfield is F_{p^e}; `e` must divide the modulus degree.
    pub fn with_modulus(p: u64, e: u32, modulus: Vec<u32>) -> Result<Self> {
        let mut modulus = modulus;
        prime_poly::trim(&mut modulus);
        if modulus.len() < 2 {
            return Err(Error::ZeroDegree);
        }
        let degree = modulus.len() as u32 - 1;
        if e == 0 || degree % e != 0 {
            return Err(Error::Precondition(format!(
                "subfield exponent {e} does not divide modulus degree {degree}"
            )));
        }
        let (p32, _) = Self::check_params(p, e, degree / e)?;
        if modulus.iter().any(|&c| c >= p32) {
            return Err(Error::Parse(format!("modulus coefficient not reduced mod {p}")));
        }
        if *modulus.last().unwrap() != 1 {
            return Err(Error::Precondition("modulus must be monic".into()));
        }
        if !prime_poly::is_irreducible(&modulus, p32) {
            return Err(Error::Reducible(p32));
        }
        let data = Arc::new(FieldData::build(p32, e, degree / e, modulus));
        Ok(FieldCtx { data, ceiling: DEFAULT_CEILING })
    }

    fn check_params(p: u64, e: u32, d: u32) -> Result<(u32, u32)> {
        if p > u32::MAX as u64 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if e == 0 || d == 0 {
            return Err(Error::ZeroDegree);
        }
        let degree = e.checked_mul(d).ok_or(Error::FieldTooLarge { p, degree: u32::MAX })?;
        match p.checked_pow(degree) {
            Some(s) if s <= MAX_SIZE => Ok((p as u32, degree)),
            _ => Err(Error::FieldTooLarge { p, degree }),
        }
    }

    /// Same field with a different enumeration ceiling.
    pub fn with_ceiling(&self, ceiling: u64) -> Self {
        FieldCtx { data: self.data.clone(), ceiling }
    }

    pub fn ceiling(&self) -> u64 {
        self.ceiling
    }

    pub fn p(&self) -> u32 {
        self.data.p
    }

    pub fn e(&self) -> u32 {
        self.data.e
    }

    /// Extension degree over F_q.
    pub fn d(&self) -> u32 {
        self.data.d
    }

    /// Total degree over F_p.
    pub fn degree(&self) -> u32 {
        self.data.degree
    }

    pub fn q(&self) -> u64 {
        self.data.q
    }

    pub fn size(&self) -> u64 {
        self.data.size
    }

    pub fn modulus(&self) -> &[u32] {
        &self.data.modulus
    }

    /// Image of the canonical generator of F_q (the least root of F_q's
    /// modulus), present when d > 1.
    pub fn subfield_gen(&self) -> Option<FFElt> {
        self.data.subfield_gen
    }

    /// The root of the modulus, i.e. the element with coefficient vector (0,1,0,...).
    pub fn gamma(&self) -> FFElt {
        if self.data.degree == 1 {
            // modulus X - c has root c
            FFElt(((self.data.p - self.data.modulus[0]) % self.data.p) as u64)
        } else {
            FFElt(self.data.p as u64)
        }
    }

    /// Least primitive element in canonical order.
    pub fn primitive(&self) -> FFElt {
        self.data.primitive
    }

    pub fn has_tables(&self) -> bool {
        self.data.tables.is_some()
    }

    pub fn require_enumerable(&self) -> Result<()> {
        if self.data.size > self.ceiling {
            Err(Error::CeilingExceeded { size: self.data.size, ceiling: self.ceiling })
        } else {
            Ok(())
        }
    }

    pub fn zero(&self) -> FFElt {
        FFElt::ZERO
    }

    pub fn one(&self) -> FFElt {
        FFElt::ONE
    }

    /// Element of the prime field with value `c mod p`.
    pub fn prime(&self, c: u64) -> FFElt {
        FFElt(c % self.data.p as u64)
    }

    pub fn from_index(&self, idx: u64) -> Result<FFElt> {
        if idx < self.data.size {
            Ok(FFElt(idx))
        } else {
            Err(Error::ElementOutOfRange(idx))
        }
    }

    pub fn contains(&self, x: FFElt) -> bool {
        x.0 < self.data.size
    }

    /// Element from a coefficient vector (constant coordinate first); shorter
    /// vectors are zero-padded.
    pub fn elt(&self, coeffs: &[u32]) -> Result<FFElt> {
        if coeffs.len() > self.data.degree as usize {
            return Err(Error::Parse(format!(
                "{} coordinates given for a degree-{} field",
                coeffs.len(),
                self.data.degree
            )));
        }
        if let Some(&c) = coeffs.iter().find(|&&c| c >= self.data.p) {
            return Err(Error::Parse(format!("coordinate {c} not reduced mod {}", self.data.p)));
        }
        Ok(self.encode(coeffs))
    }

    /// Coefficient vector of length `degree`, constant coordinate first.
    pub fn coeffs(&self, x: FFElt) -> Vec<u32> {
        self.data.decode(x.0)
    }

    fn encode(&self, digits: &[u32]) -> FFElt {
        FFElt(self.data.encode(digits))
    }

    #[inline]
    pub fn add(&self, a: FFElt, b: FFElt) -> FFElt {
        FFElt(self.data.add(a.0, b.0))
    }

    #[inline]
    pub fn neg(&self, a: FFElt) -> FFElt {
        FFElt(self.data.neg(a.0))
    }

    #[inline]
    pub fn sub(&self, a: FFElt, b: FFElt) -> FFElt {
        FFElt(self.data.add(a.0, self.data.neg(b.0)))
    }

    #[inline]
    pub fn mul(&self, a: FFElt, b: FFElt) -> FFElt {
        FFElt(self.data.mul(a.0, b.0))
    }

    pub fn inv(&self, a: FFElt) -> Result<FFElt> {
        if a.0 == 0 {
            return Err(Error::InverseOfZero);
        }
        Ok(FFElt(self.data.inv(a.0)))
    }

    pub fn div(&self, a: FFElt, b: FFElt) -> Result<FFElt> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Square-and-multiply power with `0^0 = 1`.
    pub fn pow(&self, a: FFElt, exp: u128) -> FFElt {
        FFElt(self.data.pow(a.0, exp))
    }

    /// `x^{q^s}`.
    pub fn frobenius(&self, x: FFElt, s: u32) -> FFElt {
        if x.0 == 0 {
            return x;
        }
        self.pow(x, self.frobenius_exponent(s))
    }

    /// An exponent `E` in `[1, |F|-1]` with `x^E = x^{q^s}` for every nonzero `x`.
    pub fn frobenius_exponent(&self, s: u32) -> u128 {
        let order = (self.data.size - 1) as u128;
        let exp = pow_mod_u128(self.data.q as u128, s as u128, order);
        // exponent 0 means q^s ≡ 0 mod order, only possible when order = 1
        if exp == 0 {
            order
        } else {
            exp
        }
    }

    /// `x^{p^s}`.
    pub fn frobenius_p(&self, x: FFElt, s: u32) -> FFElt {
        if x.0 == 0 {
            return x;
        }
        let order = (self.data.size - 1) as u128;
        let exp = pow_mod_u128(self.data.p as u128, s as u128, order);
        let exp = if exp == 0 { order } else { exp };
        self.pow(x, exp)
    }

    /// Relative norm to F_q: `x^{(q^d-1)/(q-1)}`.
    pub fn norm(&self, x: FFElt) -> FFElt {
        let exp = (self.data.size - 1) / (self.data.q - 1);
        self.pow(x, exp as u128)
    }

    /// Relative trace to F_q.
    pub fn trace(&self, x: FFElt) -> FFElt {
        (0..self.data.d).fold(FFElt::ZERO, |acc, j| self.add(acc, self.frobenius(x, j)))
    }

    /// Membership in the designated subfield F_q.
    pub fn in_subfield(&self, x: FFElt) -> bool {
        if x.0 == 0 {
            return true;
        }
        if let Some(t) = &self.data.tables {
            let step = t.order as u64 / (self.data.q - 1);
            return t.log[x.0 as usize] as u64 % step == 0;
        }
        self.frobenius(x, 1) == x
    }

    /// Multiplicative group order `|F|-1`.
    pub fn order(&self) -> u64 {
        self.data.size - 1
    }

    /// All elements in canonical order.
    pub fn enumerate(&self) -> Result<impl Iterator<Item = FFElt>> {
        self.require_enumerable()?;
        Ok((0..self.data.size).map(FFElt))
    }

    /// All elements of F_q in canonical order.
    pub fn subfield_elements(&self) -> Vec<FFElt> {
        self.subfield_of_degree(self.data.e).expect("F_q is small")
    }

    /// All elements of the subfield of F_p-degree `r`, in canonical order.
    /// The ceiling applies to the subfield's size.
    pub fn subfield_of_degree(&self, r: u32) -> Result<Vec<FFElt>> {
        if r == 0 || self.data.degree % r != 0 {
            return Err(Error::NoEmbedding(format!(
                "no subfield of degree {r} in a degree-{} field",
                self.data.degree
            )));
        }
        let sub_size = (self.data.p as u64).pow(r);
        if sub_size > self.ceiling {
            return Err(Error::CeilingExceeded { size: sub_size, ceiling: self.ceiling });
        }
        let step = (self.data.size - 1) / (sub_size - 1);
        let g = self.pow(self.data.primitive, step as u128);
        let mut out = vec![FFElt::ZERO];
        let mut x = FFElt::ONE;
        for _ in 0..sub_size - 1 {
            out.push(x);
            x = self.mul(x, g);
        }
        out.sort();
        Ok(out)
    }

    /// F_q-basis `1, gamma, ..., gamma^{d-1}` of the field.
    pub fn fq_basis(&self) -> Vec<FFElt> {
        let g = self.gamma();
        let mut out = Vec::with_capacity(self.data.d as usize);
        let mut x = FFElt::ONE;
        for _ in 0..self.data.d {
            out.push(x);
            x = self.mul(x, g);
        }
        out
    }

    /// Coordinates of `x` over F_q in the basis [`fq_basis`](Self::fq_basis);
    /// each coordinate is an element of the subfield F_q.
    pub fn fq_coords(&self, x: FFElt) -> Vec<FFElt> {
        let digits = self.data.decode(x.0);
        if self.data.e == 1 {
            return digits.into_iter().map(|c| FFElt(c as u64)).collect();
        }
        let map = self.coord_map();
        let n = self.data.degree as usize;
        let p = self.data.p as u64;
        let e = self.data.e as usize;
        let a: Vec<u64> = (0..n)
            .map(|r| {
                (0..n).map(|c| map.inverse[r * n + c] as u64 * digits[c] as u64).sum::<u64>() % p
            })
            .collect();
        (0..self.data.d as usize)
            .map(|i| {
                (0..e).fold(FFElt::ZERO, |acc, j| {
                    self.add(acc, self.mul(FFElt(a[i * e + j]), map.omega_powers[j]))
                })
            })
            .collect()
    }

    fn coord_map(&self) -> &CoordMap {
        self.data.coords.get_or_init(|| {
            let n = self.data.degree as usize;
            let e = self.data.e as usize;
            let p = self.data.p;
            let omega = self.data.subfield_gen.unwrap_or(FFElt::ONE);
            let omega_powers: Vec<FFElt> =
                (0..e).map(|j| self.pow(omega, j as u128)).collect();
            let basis = self.fq_basis();
            // columns are digits of gamma^i omega^j, column index i*e + j
            let mut m = vec![0u32; n * n];
            for (i, &b) in basis.iter().enumerate() {
                for (j, &w) in omega_powers.iter().enumerate() {
                    let digits = self.data.decode(self.mul(b, w).0);
                    for (r, &dg) in digits.iter().enumerate() {
                        m[r * n + i * e + j] = dg;
                    }
                }
            }
            CoordMap { inverse: invert_mod_p(&m, n, p), omega_powers }
        })
    }
}

fn pow_mod_u128(base: u128, mut exp: u128, modulus: u128) -> u128 {
    if modulus == 1 {
        return 0;
    }
    let mut result = 1u128;
    let mut b = base % modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * b % modulus;
        }
        b = b * b % modulus;
        exp >>= 1;
    }
    result
}

fn inv_mod_p(a: u32, p: u32) -> u32 {
    pow_mod_u128(a as u128, p as u128 - 2, p as u128) as u32
}

/// Inverse of an invertible n×n matrix over F_p, row-major.
fn invert_mod_p(m: &[u32], n: usize, p: u32) -> Vec<u32> {
    let w = 2 * n;
    let mut a = vec![0u32; n * w];
    for r in 0..n {
        a[r * w..r * w + n].copy_from_slice(&m[r * n..(r + 1) * n]);
        a[r * w + n + r] = 1;
    }
    for col in 0..n {
        let piv = (col..n).find(|&r| a[r * w + col] != 0).expect("basis matrix is invertible");
        if piv != col {
            for c in 0..w {
                a.swap(piv * w + c, col * w + c);
            }
        }
        let inv = inv_mod_p(a[col * w + col], p) as u64;
        for c in 0..w {
            a[col * w + c] = (a[col * w + c] as u64 * inv % p as u64) as u32;
        }
        for r in 0..n {
            let f = a[r * w + col];
            if r != col && f != 0 {
                for c in 0..w {
                    let sub = (f as u64 * a[col * w + c] as u64 % p as u64) as u32;
                    a[r * w + c] = (a[r * w + c] + p - sub) % p;
                }
            }
        }
    }
    let mut out = vec![0u32; n * n];
    for r in 0..n {
        out[r * n..(r + 1) * n].copy_from_slice(&a[r * w + n..(r + 1) * w]);
    }
    out
}

impl FieldData {
    fn build(p: u32, e: u32, d: u32, modulus: Vec<u32>) -> FieldData {
        let degree = e * d;
        let size = (p as u64).pow(degree);
        let q = (p as u64).pow(e);
        let mut data = FieldData {
            p,
            e,
            d,
            degree,
            size,
            q,
            modulus,
            tables: None,
            primitive: FFElt::ONE,
            subfield_gen: None,
            coords: OnceLock::new(),
        };
        data.primitive = data.find_primitive();
        if size <= TABLE_LIMIT {
            data.tables = Some(data.build_tables());
        }
        if d > 1 {
            let sub_mod = prime_poly::least_irreducible(e, p);
            data.subfield_gen = Some(data.least_root_in_subfield(&sub_mod, q));
        }
        data
    }

    fn find_primitive(&self) -> FFElt {
        let order = self.size - 1;
        if order == 1 {
            return FFElt::ONE;
        }
        let divisors = prime_divisors(order);
        (1..self.size)
            .map(FFElt)
            .find(|&x| divisors.iter().all(|&r| self.plain_pow(x.0, (order / r) as u128) != 1))
            .expect("multiplicative group is cyclic")
    }

    fn build_tables(&self) -> Tables {
        let order = (self.size - 1) as usize;
        let mut exp = vec![0u32; order];
        let mut log = vec![NO_LOG; self.size as usize];
        let g = self.primitive.0;
        let gamma = if self.degree == 1 { u64::MAX } else { self.p as u64 };
        let mut x = 1u64;
        if g == gamma {
            for k in 0..order {
                exp[k] = x as u32;
                log[x as usize] = k as u32;
                x = self.mul_by_gamma(x);
            }
        } else {
            // multiplication by g as an F_p-linear map on coordinate vectors
            let n = self.degree as usize;
            let mut basis = 1u64;
            let mut cols = Vec::with_capacity(n);
            for _ in 0..n {
                cols.push(self.decode(self.plain_mul(basis, g)));
                basis = if self.degree == 1 { basis } else { self.mul_by_gamma(basis) };
            }
            let mut acc = vec![0u32; n];
            for k in 0..order {
                exp[k] = x as u32;
                log[x as usize] = k as u32;
                let digits = self.decode(x);
                acc.iter_mut().for_each(|a| *a = 0);
                for (i, &c) in digits.iter().enumerate() {
                    if c != 0 {
                        for (a, &v) in acc.iter_mut().zip(&cols[i]) {
                            *a += c * v;
                        }
                    }
                }
                acc.iter_mut().for_each(|a| *a %= self.p);
                x = self.encode(&acc);
            }
        }
        let zech = if self.p == 2 {
            Vec::new()
        } else {
            let p = self.p as u64;
            (0..order)
                .map(|k| {
                    let v = exp[k] as u64;
                    let d0 = v % p;
                    let w = v - d0 + (d0 + 1) % p;
                    log[w as usize]
                })
                .collect()
        };
        Tables { order: order as u32, exp, log, zech }
    }

    fn least_root_in_subfield(&self, poly: &[u32], sub_size: u64) -> FFElt {
        let step = (self.size - 1) / (sub_size - 1);
        let h = self.pow(self.primitive.0, step as u128);
        let mut best: Option<u64> = None;
        let mut x = 1u64;
        let mut candidates = vec![0u64];
        for _ in 0..sub_size - 1 {
            candidates.push(x);
            x = self.mul(x, h);
        }
        for c in candidates {
            if self.eval_prime_poly(poly, c) == 0 && best.map_or(true, |b| c < b) {
                best = Some(c);
            }
        }
        FFElt(best.expect("subfield polynomial has a root"))
    }

    fn eval_prime_poly(&self, poly: &[u32], x: u64) -> u64 {
        poly.iter().rev().fold(0u64, |acc, &c| self.add(self.mul(acc, x), c as u64))
    }

    fn decode(&self, mut v: u64) -> Vec<u32> {
        let p = self.p as u64;
        (0..self.degree)
            .map(|_| {
                let d = (v % p) as u32;
                v /= p;
                d
            })
            .collect()
    }

    fn encode(&self, digits: &[u32]) -> u64 {
        digits.iter().rev().fold(0u64, |acc, &d| acc * self.p as u64 + d as u64)
    }

    fn mul_by_gamma(&self, x: u64) -> u64 {
        let p = self.p;
        let n = self.degree as usize;
        let digits = self.decode(x);
        let top = digits[n - 1];
        let mut out = vec![0u32; n];
        for i in (1..n).rev() {
            out[i] = digits[i - 1];
        }
        if top != 0 {
            for (i, o) in out.iter_mut().enumerate() {
                let sub = top * self.modulus[i] % p;
                *o = (*o + p - sub) % p;
            }
        }
        self.encode(&out)
    }

    fn plain_mul(&self, a: u64, b: u64) -> u64 {
        if a == 0 || b == 0 {
            return 0;
        }
        let prod = prime_poly::mul_mod(&self.decode(a), &self.decode(b), &self.modulus, self.p);
        self.encode(&prod)
    }

    fn plain_pow(&self, a: u64, mut exp: u128) -> u64 {
        let mut result = 1u64;
        let mut b = a;
        while exp > 0 {
            if exp & 1 == 1 {
                result = self.plain_mul(result, b);
            }
            b = self.plain_mul(b, b);
            exp >>= 1;
        }
        result
    }

    #[inline]
    fn add(&self, a: u64, b: u64) -> u64 {
        if self.p == 2 {
            return a ^ b;
        }
        if a == 0 {
            return b;
        }
        if b == 0 {
            return a;
        }
        if let Some(t) = &self.tables {
            let la = t.log[a as usize];
            let lb = t.log[b as usize];
            let k = if lb >= la { lb - la } else { lb + t.order - la };
            let z = t.zech[k as usize];
            if z == NO_LOG {
                return 0;
            }
            let s = la as u64 + z as u64;
            let s = if s >= t.order as u64 { s - t.order as u64 } else { s };
            return t.exp[s as usize] as u64;
        }
        let p = self.p as u64;
        let (mut x, mut y, mut out, mut scale) = (a, b, 0u64, 1u64);
        while x > 0 || y > 0 {
            out += ((x % p + y % p) % p) * scale;
            x /= p;
            y /= p;
            scale *= p;
        }
        out
    }

    #[inline]
    fn neg(&self, a: u64) -> u64 {
        if self.p == 2 || a == 0 {
            return a;
        }
        if let Some(t) = &self.tables {
            let s = t.log[a as usize] + t.order / 2;
            let s = if s >= t.order { s - t.order } else { s };
            return t.exp[s as usize] as u64;
        }
        let p = self.p as u64;
        let (mut x, mut out, mut scale) = (a, 0u64, 1u64);
        while x > 0 {
            out += ((p - x % p) % p) * scale;
            x /= p;
            scale *= p;
        }
        out
    }

    #[inline]
    fn mul(&self, a: u64, b: u64) -> u64 {
        if a == 0 || b == 0 {
            return 0;
        }
        if let Some(t) = &self.tables {
            let s = t.log[a as usize] + t.log[b as usize];
            let s = if s >= t.order { s - t.order } else { s };
            return t.exp[s as usize] as u64;
        }
        self.plain_mul(a, b)
    }

    fn inv(&self, a: u64) -> u64 {
        if let Some(t) = &self.tables {
            let l = t.log[a as usize];
            let s = if l == 0 { 0 } else { t.order - l };
            return t.exp[s as usize] as u64;
        }
        self.plain_pow(a, (self.size - 2) as u128)
    }

    fn pow(&self, a: u64, exp: u128) -> u64 {
        if exp == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        if let Some(t) = &self.tables {
            let k = (t.log[a as usize] as u128 * (exp % t.order as u128)) % t.order as u128;
            return t.exp[k as usize] as u64;
        }
        let order = (self.size - 1) as u128;
        let e = exp % order;
        self.plain_pow(a, if e == 0 { order } else { e })
    }
}
