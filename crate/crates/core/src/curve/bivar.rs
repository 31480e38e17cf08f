use std::collections::BTreeMap;

use super::univar::Poly1;
use crate::error::{Error, Result};
use crate::gf::{Embedding, FFElt, FieldCtx};

// Monomial X^x Y^y ordered lexicographically with Y > X, so the last map
// entry is the leading term.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct Mono {
    y: u32,
    x: u32,
}

/// Sparse polynomial in `X, Y` over a field context.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivarPoly {
    ctx: FieldCtx,
    terms: BTreeMap<Mono, FFElt>,
}

/// `C(n, k) mod p` by Lucas' theorem.
pub fn binomial_mod_p(mut n: u64, mut k: u64, p: u64) -> u64 {
    let mut out = 1u64;
    while n > 0 || k > 0 {
        let (a, b) = (n % p, k % p);
        if b > a {
            return 0;
        }
        // small binomial by the multiplicative formula mod p
        let mut num = 1u64;
        let mut den = 1u64;
        for i in 0..b {
            num = num * ((a - i) % p) % p;
            den = den * ((i + 1) % p) % p;
        }
        let mut inv = 1u64;
        let mut base = den;
        let mut e = p - 2;
        while e > 0 {
            if e & 1 == 1 {
                inv = inv * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        out = out * num % p * inv % p;
        n /= p;
        k /= p;
    }
    out
}

impl BivarPoly {
    pub fn zero(ctx: &FieldCtx) -> Self {
        BivarPoly { ctx: ctx.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(ctx: &FieldCtx, c: FFElt) -> Self {
        Self::from_terms(ctx, &[(0, 0, c)])
    }

    /// `c X^i Y^j`.
    pub fn monomial(ctx: &FieldCtx, i: u32, j: u32, c: FFElt) -> Self {
        Self::from_terms(ctx, &[(i, j, c)])
    }

    /// Sum of `c X^i Y^j` over `(i, j, c)`; repeated exponents accumulate.
    pub fn from_terms(ctx: &FieldCtx, terms: &[(u32, u32, FFElt)]) -> Self {
        let mut p = Self::zero(ctx);
        for &(i, j, c) in terms {
            p.add_term(i, j, c);
        }
        p
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    fn add_term(&mut self, i: u32, j: u32, c: FFElt) {
        if c.is_zero() {
            return;
        }
        let key = Mono { x: i, y: j };
        let v = self.ctx.add(self.terms.get(&key).copied().unwrap_or(FFElt::ZERO), c);
        if v.is_zero() {
            self.terms.remove(&key);
        } else {
            self.terms.insert(key, v);
        }
    }

    /// Terms `(i, j, c)` for `c X^i Y^j`, in increasing lex order with Y > X.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, FFElt)> + '_ {
        self.terms.iter().map(|(m, &c)| (m.x, m.y, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, i: u32, j: u32) -> FFElt {
        self.terms.get(&Mono { x: i, y: j }).copied().unwrap_or(FFElt::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.x + m.y).max()
    }

    pub fn degree_x(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.x).max()
    }

    pub fn degree_y(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.y).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.x + m.y);
        match degs.next() {
            Some(d) => degs.all(|e| e == d),
            None => true,
        }
    }

    /// Part of total degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> BivarPoly {
        let terms = self.terms.iter().filter(|(m, _)| m.x + m.y == d).map(|(&m, &c)| (m, c)).collect();
        BivarPoly { ctx: self.ctx.clone(), terms }
    }

    /// Total degrees occurring, ascending.
    pub fn homogeneous_degrees(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self.terms.keys().map(|m| m.x + m.y).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    fn check_ctx(&self, other: &BivarPoly) -> Result<()> {
        if self.ctx == other.ctx {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn add(&self, other: &BivarPoly) -> Result<BivarPoly> {
        self.check_ctx(other)?;
        let mut out = self.clone();
        for (i, j, c) in other.terms() {
            out.add_term(i, j, c);
        }
        Ok(out)
    }

    pub fn neg(&self) -> BivarPoly {
        self.scale(self.ctx.neg(FFElt::ONE))
    }

    pub fn sub(&self, other: &BivarPoly) -> Result<BivarPoly> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: FFElt) -> BivarPoly {
        let mut out = Self::zero(&self.ctx);
        for (i, j, v) in self.terms() {
            out.add_term(i, j, self.ctx.mul(c, v));
        }
        out
    }

    pub fn mul(&self, other: &BivarPoly) -> Result<BivarPoly> {
        self.check_ctx(other)?;
        let mut out = Self::zero(&self.ctx);
        for (i, j, a) in self.terms() {
            for (k, l, b) in other.terms() {
                out.add_term(i + k, j + l, self.ctx.mul(a, b));
            }
        }
        Ok(out)
    }

    pub fn eval(&self, x: FFElt, y: FFElt) -> FFElt {
        let ctx = &self.ctx;
        self.terms().fold(FFElt::ZERO, |acc, (i, j, c)| {
            ctx.add(acc, ctx.mul(c, ctx.mul(ctx.pow(x, i as u128), ctx.pow(y, j as u128))))
        })
    }

    /// `A / B` when `B` divides `A` exactly; fails as soon as a leading term
    /// of the running remainder is not divisible by the leading term of `B`.
    pub fn exact_divide(&self, b: &BivarPoly) -> Result<BivarPoly> {
        self.check_ctx(b)?;
        let (&lb, &cb) = b.terms.last_key_value().ok_or(Error::InverseOfZero)?;
        let inv = self.ctx.inv(cb)?;
        let mut rem = self.clone();
        let mut quot = Self::zero(&self.ctx);
        while let Some((&lr, &cr)) = rem.terms.last_key_value() {
            if lr.x < lb.x || lr.y < lb.y {
                return Err(Error::InexactDivision);
            }
            let (qx, qy) = (lr.x - lb.x, lr.y - lb.y);
            let qc = self.ctx.mul(cr, inv);
            quot.add_term(qx, qy, qc);
            for (i, j, c) in b.terms() {
                rem.add_term(i + qx, j + qy, self.ctx.neg(self.ctx.mul(qc, c)));
            }
        }
        Ok(quot)
    }

    /// `F(X + u, Y + v)`.
    pub fn shift(&self, u: FFElt, v: FFElt) -> BivarPoly {
        let ctx = &self.ctx;
        let p = ctx.p() as u64;
        let mut out = Self::zero(ctx);
        for (i, j, c) in self.terms() {
            for a in 0..=i {
                let ca = binomial_mod_p(i as u64, a as u64, p);
                if ca == 0 {
                    continue;
                }
                let xa = ctx.mul(ctx.prime(ca), ctx.pow(u, (i - a) as u128));
                if xa.is_zero() {
                    continue;
                }
                for b in 0..=j {
                    let cb = binomial_mod_p(j as u64, b as u64, p);
                    if cb == 0 {
                        continue;
                    }
                    let yb = ctx.mul(ctx.prime(cb), ctx.pow(v, (j - b) as u128));
                    out.add_term(a, b, ctx.mul(c, ctx.mul(xa, yb)));
                }
            }
        }
        out
    }

    pub fn partial_x(&self) -> BivarPoly {
        let mut out = Self::zero(&self.ctx);
        for (i, j, c) in self.terms() {
            if i > 0 {
                out.add_term(i - 1, j, self.ctx.mul(self.ctx.prime(i as u64), c));
            }
        }
        out
    }

    pub fn partial_y(&self) -> BivarPoly {
        let mut out = Self::zero(&self.ctx);
        for (i, j, c) in self.terms() {
            if j > 0 {
                out.add_term(i, j - 1, self.ctx.mul(self.ctx.prime(j as u64), c));
            }
        }
        out
    }

    /// `F(X, uX)` as a univariate polynomial in `X`.
    pub fn on_line(&self, u: FFElt) -> Poly1 {
        let deg = self.degree().unwrap_or(0) as usize;
        let mut coeffs = vec![FFElt::ZERO; deg + 1];
        for (i, j, c) in self.terms() {
            let k = (i + j) as usize;
            coeffs[k] = self.ctx.add(coeffs[k], self.ctx.mul(c, self.ctx.pow(u, j as u128)));
        }
        Poly1::new(&self.ctx, coeffs)
    }

    /// `F(x0, Y)` as a univariate polynomial in `Y`.
    pub fn at_x(&self, x0: FFElt) -> Poly1 {
        let deg = self.degree_y().unwrap_or(0) as usize;
        let mut coeffs = vec![FFElt::ZERO; deg + 1];
        for (i, j, c) in self.terms() {
            let v = self.ctx.mul(c, self.ctx.pow(x0, i as u128));
            coeffs[j as usize] = self.ctx.add(coeffs[j as usize], v);
        }
        Poly1::new(&self.ctx, coeffs)
    }

    /// Coefficients in `Y` as polynomials in `X`: entry `j` is the coefficient of `Y^j`.
    pub fn y_coefficients(&self) -> Vec<Poly1> {
        let deg = self.degree_y().map_or(0, |d| d as usize + 1);
        let mut rows = vec![Vec::<FFElt>::new(); deg];
        for (i, j, c) in self.terms() {
            let row = &mut rows[j as usize];
            if row.len() <= i as usize {
                row.resize(i as usize + 1, FFElt::ZERO);
            }
            row[i as usize] = c;
        }
        rows.into_iter().map(|r| Poly1::new(&self.ctx, r)).collect()
    }

    /// Dehomogenizes at the point `(1:0:0)`: with `G` the homogenization of
    /// `F` by `T`, returns `G(1, Y, X)`, sending `X^a Y^b` to `X^{D-a-b} Y^b`.
    pub fn chart_at_x_infinity(&self) -> BivarPoly {
        let d = self.degree().unwrap_or(0);
        let mut out = Self::zero(&self.ctx);
        for (i, j, c) in self.terms() {
            out.add_term(d - i - j, j, c);
        }
        out
    }

    /// The same polynomial with coefficients pushed through an embedding.
    pub fn map(&self, emb: &Embedding) -> Result<BivarPoly> {
        if *emb.sub() != self.ctx {
            return Err(Error::ContextMismatch);
        }
        let mut out = Self::zero(emb.sup());
        for (i, j, c) in self.terms() {
            out.add_term(i, j, emb.apply(c));
        }
        Ok(out)
    }
}
