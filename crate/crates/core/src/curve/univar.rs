use crate::error::{Error, Result};
use crate::gf::{FFElt, FieldCtx};

/// Dense univariate polynomial, constant term first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly1 {
    ctx: FieldCtx,
    coeffs: Vec<FFElt>,
}

impl Poly1 {
    pub fn new(ctx: &FieldCtx, mut coeffs: Vec<FFElt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly1 { ctx: ctx.clone(), coeffs }
    }

    pub fn zero(ctx: &FieldCtx) -> Self {
        Self::new(ctx, Vec::new())
    }

    pub fn constant(ctx: &FieldCtx, c: FFElt) -> Self {
        Self::new(ctx, vec![c])
    }

    /// `c X^k`.
    pub fn monomial(ctx: &FieldCtx, k: usize, c: FFElt) -> Self {
        let mut coeffs = vec![FFElt::ZERO; k + 1];
        coeffs[k] = c;
        Self::new(ctx, coeffs)
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[FFElt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> FFElt {
        self.coeffs.get(k).copied().unwrap_or(FFElt::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> FFElt {
        self.coeffs.last().copied().unwrap_or(FFElt::ZERO)
    }

    pub fn eval(&self, x: FFElt) -> FFElt {
        self.coeffs.iter().rev().fold(FFElt::ZERO, |acc, &c| self.ctx.add(self.ctx.mul(acc, x), c))
    }

    pub fn add(&self, other: &Poly1) -> Poly1 {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|k| self.ctx.add(self.coeff(k), other.coeff(k))).collect();
        Poly1::new(&self.ctx, coeffs)
    }

    pub fn neg(&self) -> Poly1 {
        Poly1::new(&self.ctx, self.coeffs.iter().map(|&c| self.ctx.neg(c)).collect())
    }

    pub fn sub(&self, other: &Poly1) -> Poly1 {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: FFElt) -> Poly1 {
        Poly1::new(&self.ctx, self.coeffs.iter().map(|&x| self.ctx.mul(c, x)).collect())
    }

    pub fn mul(&self, other: &Poly1) -> Poly1 {
        if self.is_zero() || other.is_zero() {
            return Poly1::zero(&self.ctx);
        }
        let mut out = vec![FFElt::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = self.ctx.add(out[i + j], self.ctx.mul(a, b));
            }
        }
        Poly1::new(&self.ctx, out)
    }

    pub fn divrem(&self, d: &Poly1) -> Result<(Poly1, Poly1)> {
        let dd = d.degree().ok_or(Error::InverseOfZero)?;
        let inv = self.ctx.inv(d.lead())?;
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((Poly1::zero(&self.ctx), self.clone()));
        }
        let mut q = vec![FFElt::ZERO; r.len() - dd];
        for k in (dd..r.len()).rev() {
            let c = self.ctx.mul(r[k], inv);
            if c.is_zero() {
                continue;
            }
            q[k - dd] = c;
            for (j, &b) in d.coeffs.iter().enumerate() {
                r[k - dd + j] = self.ctx.sub(r[k - dd + j], self.ctx.mul(c, b));
            }
        }
        Ok((Poly1::new(&self.ctx, q), Poly1::new(&self.ctx, r)))
    }

    pub fn exact_div(&self, d: &Poly1) -> Result<Poly1> {
        let (q, r) = self.divrem(d)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InexactDivision)
        }
    }

    pub fn monic(&self) -> Poly1 {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(self.ctx.inv(self.lead()).expect("nonzero lead"))
    }

    /// Monic gcd; zero when both inputs are zero.
    pub fn gcd(&self, other: &Poly1) -> Poly1 {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.divrem(&b).expect("b nonzero").1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Poly1 {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &c)| self.ctx.mul(self.ctx.prime(k as u64), c))
            .collect();
        Poly1::new(&self.ctx, coeffs)
    }
}
