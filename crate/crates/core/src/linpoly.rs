//! Linearized polynomials `sum c_j X^{q^j}` over F_{q^n}.

use crate::error::{Error, Result};
use crate::gf::{Embedding, FFElt, FieldCtx};
use crate::linalg::{fp_rank, FqMatrix};

/// Largest q-degree a [`QPoly`] may carry.
pub const MAX_Q_DEGREE: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QPoly {
    ctx: FieldCtx,
    coeffs: Vec<FFElt>,
}

impl QPoly {
    /// `coeffs[j]` is the coefficient of `X^{q^j}`; trailing zeros are dropped.
    pub fn new(ctx: &FieldCtx, coeffs: Vec<FFElt>) -> Result<Self> {
        if let Some(&x) = coeffs.iter().find(|&&x| !ctx.contains(x)) {
            return Err(Error::ElementOutOfRange(x.index()));
        }
        let mut coeffs = coeffs;
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        if coeffs.len() > MAX_Q_DEGREE + 1 {
            return Err(Error::Precondition(format!("q-degree above {MAX_Q_DEGREE}")));
        }
        Ok(QPoly { ctx: ctx.clone(), coeffs })
    }

    pub fn zero(ctx: &FieldCtx) -> Self {
        QPoly { ctx: ctx.clone(), coeffs: Vec::new() }
    }

    /// The identity map `X`.
    pub fn identity(ctx: &FieldCtx) -> Self {
        Self::monomial(ctx, 0, FFElt::ONE)
    }

    /// `c X^{q^j}`.
    pub fn monomial(ctx: &FieldCtx, j: usize, c: FFElt) -> Self {
        let mut coeffs = vec![FFElt::ZERO; j + 1];
        coeffs[j] = c;
        Self::new(ctx, coeffs).expect("monomial within bounds")
    }

    /// Builds `sum c X^{q^j}` from `(j, c)` pairs.
    pub fn from_terms(ctx: &FieldCtx, terms: &[(usize, FFElt)]) -> Result<Self> {
        let len = terms.iter().map(|&(j, _)| j + 1).max().unwrap_or(0);
        let mut coeffs = vec![FFElt::ZERO; len];
        for &(j, c) in terms {
            coeffs[j] = ctx.add(coeffs[j], c);
        }
        Self::new(ctx, coeffs)
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[FFElt] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> FFElt {
        self.coeffs.get(j).copied().unwrap_or(FFElt::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Index of the top nonzero coefficient.
    pub fn q_degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Index of the lowest nonzero coefficient.
    pub fn lowest_index(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Indices with nonzero coefficients, ascending.
    pub fn support(&self) -> Vec<usize> {
        (0..self.coeffs.len()).filter(|&j| !self.coeffs[j].is_zero()).collect()
    }

    fn check_ctx(&self, other: &QPoly) -> Result<()> {
        if self.ctx == other.ctx {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn evaluate(&self, x: FFElt) -> FFElt {
        self.coeffs.iter().enumerate().fold(FFElt::ZERO, |acc, (j, &c)| {
            if c.is_zero() {
                acc
            } else {
                self.ctx.add(acc, self.ctx.mul(c, self.ctx.frobenius(x, j as u32)))
            }
        })
    }

    /// Evaluation with the Frobenius exponents precomputed.
    pub fn evaluator(&self) -> Evaluator<'_> {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, &c)| (c, self.ctx.frobenius_exponent(j as u32)))
            .collect();
        Evaluator { ctx: &self.ctx, terms }
    }

    pub fn scale(&self, c: FFElt) -> QPoly {
        let coeffs = self.coeffs.iter().map(|&x| self.ctx.mul(c, x)).collect();
        QPoly::new(&self.ctx, coeffs).expect("same shape")
    }

    pub fn add(&self, other: &QPoly) -> Result<QPoly> {
        self.check_ctx(other)?;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|j| self.ctx.add(self.coeff(j), other.coeff(j))).collect();
        QPoly::new(&self.ctx, coeffs)
    }

    pub fn sub(&self, other: &QPoly) -> Result<QPoly> {
        self.add(&other.scale(self.ctx.neg(FFElt::ONE)))
    }

    /// Matrix over F_q of the map in the basis `1, g, ..., g^{n-1}`; column `i`
    /// holds the coordinates of `f(g^i)`.
    pub fn as_matrix(&self) -> FqMatrix {
        let cols: Vec<Vec<FFElt>> =
            self.ctx.fq_basis().into_iter().map(|b| self.ctx.fq_coords(self.evaluate(b))).collect();
        FqMatrix::from_columns(&cols)
    }

    /// Dimension over F_q of the kernel in F_{q^n}.
    pub fn kernel_dim(&self) -> u32 {
        let ev = self.evaluator();
        let images: Vec<FFElt> = fp_basis(&self.ctx).map(|b| ev.eval(b)).collect();
        (self.ctx.degree() - fp_rank(&self.ctx, &images) as u32) / self.ctx.e()
    }

    /// `f∘g` reduced modulo `X^{q^n} - X`.
    pub fn compose_mod(&self, g: &QPoly) -> Result<QPoly> {
        self.check_ctx(g)?;
        let n = self.ctx.d() as usize;
        let mut coeffs = vec![FFElt::ZERO; n];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in g.coeffs.iter().enumerate() {
                let term = self.ctx.mul(a, self.ctx.frobenius(b, i as u32));
                let k = (i + j) % n;
                coeffs[k] = self.ctx.add(coeffs[k], term);
            }
        }
        QPoly::new(&self.ctx, coeffs)
    }

    /// The same polynomial with coefficients pushed through an embedding.
    pub fn map(&self, emb: &Embedding) -> Result<QPoly> {
        if *emb.sub() != self.ctx {
            return Err(Error::ContextMismatch);
        }
        QPoly::new(emb.sup(), self.coeffs.iter().map(|&c| emb.apply(c)).collect())
    }
}

/// The F_p-basis `1, g, ..., g^{N-1}`; as packed vectors these are powers of `p`.
pub(crate) fn fp_basis(ctx: &FieldCtx) -> impl Iterator<Item = FFElt> {
    let p = ctx.p() as u64;
    (0..ctx.degree()).map(move |i| FFElt::from_raw(p.pow(i)))
}

pub struct Evaluator<'a> {
    ctx: &'a FieldCtx,
    terms: Vec<(FFElt, u128)>,
}

impl Evaluator<'_> {
    #[inline]
    pub fn eval(&self, x: FFElt) -> FFElt {
        if x.is_zero() {
            return x;
        }
        self.terms
            .iter()
            .fold(FFElt::ZERO, |acc, &(c, e)| self.ctx.add(acc, self.ctx.mul(c, self.ctx.pow(x, e))))
    }
}

/// A linearized polynomial paired with an index `t`, with the coefficient of
/// `X^{q^t}` equal to zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    f: QPoly,
    t: u32,
}

impl Instance {
    pub fn new(f: QPoly, t: u32) -> Result<Self> {
        if f.is_zero() {
            return Err(Error::Normalization("polynomial is zero".into()));
        }
        if t >= f.ctx.d() {
            return Err(Error::Normalization(format!(
                "index {t} must be below the extension degree {}",
                f.ctx.d()
            )));
        }
        if !f.coeff(t as usize).is_zero() {
            return Err(Error::Normalization(format!("coefficient of X^(q^{t}) is nonzero")));
        }
        Ok(Instance { f, t })
    }

    pub fn f(&self) -> &QPoly {
        &self.f
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.f.ctx
    }

    /// Whether the instance already satisfies every normalization rule.
    pub fn is_normalized(&self) -> bool {
        (self.t == 0 || !self.f.coeff(0).is_zero())
            && self.f.coeffs.last() == Some(&FFElt::ONE)
    }
}

/// Brings `(f, t)` to normal form. When `t > 0` and `f` has no `X` term, the
/// lowest exponent `t0` is shifted down to `X` (twisting coefficients by
/// `q^{n-t0}`) and `t` becomes `t - t0`. The result must have a zero
/// coefficient at the new index; it is then scaled to leading coefficient 1.
/// Returns the instance and `t0`.
pub fn normalize(f: &QPoly, t: u32) -> Result<(Instance, u32)> {
    let ctx = f.ctx.clone();
    let n = ctx.d();
    if t >= n {
        return Err(Error::Normalization(format!("index {t} must be below {n}")));
    }
    let low = f.lowest_index().ok_or_else(|| Error::Normalization("polynomial is zero".into()))?;
    let (mut g, mut t, mut t0) = (f.clone(), t, 0u32);
    if t > 0 && low > 0 {
        t0 = low as u32;
        if t0 > t {
            return Err(Error::Normalization(format!(
                "lowest exponent index {t0} exceeds the index {t}"
            )));
        }
        let coeffs = f.coeffs[low..].iter().map(|&c| ctx.frobenius(c, n - t0)).collect();
        g = QPoly::new(&ctx, coeffs)?;
        t -= t0;
    }
    if !g.coeff(t as usize).is_zero() {
        return Err(Error::Normalization(format!(
            "coefficient of X^(q^{t}) is nonzero after shifting"
        )));
    }
    let lead = *g.coeffs.last().expect("nonzero");
    let g = g.scale(ctx.inv(lead)?);
    Ok((Instance::new(g, t)?, t0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn field(p: u64, e: u32, d: u32) -> FieldCtx {
        FieldCtx::new(p, e, d).unwrap()
    }

    fn random_poly(ctx: &FieldCtx, rng: &mut ChaCha8Rng, len: usize) -> QPoly {
        let coeffs = (0..len).map(|_| ctx.from_index(rng.gen_range(0..ctx.size())).unwrap()).collect();
        QPoly::new(ctx, coeffs).unwrap()
    }

    #[test]
    fn evaluation_examples() {
        let f4 = field(2, 1, 2);
        let g = f4.gamma();
        for x in f4.enumerate().unwrap() {
            assert_eq!(QPoly::identity(&f4).evaluate(x), x);
        }
        let xq = QPoly::monomial(&f4, 1, FFElt::ONE);
        assert_eq!(xq.evaluate(g), f4.mul(g, g));
        let trace = QPoly::new(&f4, vec![FFElt::ONE, FFElt::ONE]).unwrap();
        assert_eq!(trace.evaluate(g), FFElt::ONE);
    }

    #[test]
    fn evaluation_is_fq_linear() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let ctx = field(2, 2, 3);
        let sub = ctx.subfield_elements();
        for _ in 0..20 {
            let f = random_poly(&ctx, &mut rng, 3);
            let ev = f.evaluator();
            for _ in 0..50 {
                let x = ctx.from_index(rng.gen_range(0..ctx.size())).unwrap();
                let y = ctx.from_index(rng.gen_range(0..ctx.size())).unwrap();
                let l = sub[rng.gen_range(0..sub.len())];
                let lhs = f.evaluate(ctx.add(ctx.mul(l, x), y));
                assert_eq!(lhs, ctx.add(ctx.mul(l, f.evaluate(x)), f.evaluate(y)));
                assert_eq!(ev.eval(x), f.evaluate(x));
            }
        }
    }

    #[test]
    fn normalize_examples() {
        let ctx = field(3, 1, 4);
        let x_q2 = QPoly::monomial(&ctx, 2, FFElt::ONE);
        assert!(normalize(&x_q2, 1).is_err());
        let f = QPoly::new(&ctx, vec![FFElt::ZERO, FFElt::ONE, FFElt::ONE]).unwrap();
        assert!(normalize(&f, 2).is_err());
        let b = ctx.gamma();
        let f = QPoly::new(&ctx, vec![b, FFElt::ZERO, FFElt::ONE]).unwrap();
        let (inst, t0) = normalize(&f, 1).unwrap();
        assert_eq!((inst.f(), inst.t(), t0), (&f, 1, 0));
        assert!(inst.is_normalized());
    }

    #[test]
    fn normalize_shift_matches_substitution() {
        // X^q + b X^{q^3} at t = 2 shifts to b' X^{q^2} + X at t = 1
        let ctx = field(2, 1, 5);
        let b = ctx.gamma();
        let f = QPoly::from_terms(&ctx, &[(1, FFElt::ONE), (3, b)]).unwrap();
        let (inst, t0) = normalize(&f, 2).unwrap();
        assert_eq!((inst.t(), t0), (1, 1));
        let bt = ctx.frobenius(b, 4);
        let expected = QPoly::from_terms(&ctx, &[(0, ctx.inv(bt).unwrap()), (2, FFElt::ONE)]).unwrap();
        assert_eq!(inst.f(), &expected);
    }

    #[test]
    fn normalize_idempotent() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let ctx = field(3, 1, 4);
        let mut done = 0;
        while done < 50 {
            let f = random_poly(&ctx, &mut rng, 4);
            let t = rng.gen_range(0..4);
            if let Ok((inst, _)) = normalize(&f, t) {
                let (again, t0) = normalize(inst.f(), inst.t()).unwrap();
                assert_eq!((&again, t0), (&inst, 0));
                done += 1;
            }
        }
    }

    #[test]
    fn matrix_examples() {
        let ctx = field(2, 1, 3);
        assert_eq!(QPoly::identity(&ctx).as_matrix(), FqMatrix::identity(3));
        assert_eq!(QPoly::zero(&ctx).as_matrix(), FqMatrix::zero(3, 3));
        let trace = QPoly::new(&ctx, vec![FFElt::ONE; 3]).unwrap();
        assert_eq!(trace.as_matrix().rank(&ctx), 1);
        assert_eq!(trace.kernel_dim(), 2);
        assert_eq!(QPoly::identity(&ctx).kernel_dim(), 0);
        for (p, e, d) in [(2, 1, 4), (3, 1, 3), (2, 2, 3)] {
            let ctx = field(p, e, d);
            let minus_one = ctx.neg(FFElt::ONE);
            let f = QPoly::new(&ctx, vec![minus_one, FFElt::ONE]).unwrap();
            assert_eq!(f.kernel_dim(), 1);
        }
    }

    #[test]
    fn matrix_action_matches_evaluation() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for (p, e, d) in [(2, 1, 4), (3, 1, 3), (2, 2, 3), (3, 2, 2)] {
            let ctx = field(p, e, d);
            let f = random_poly(&ctx, &mut rng, d as usize);
            let m = f.as_matrix();
            for x in ctx.enumerate().unwrap() {
                assert_eq!(m.mul_vec(&ctx, &ctx.fq_coords(x)), ctx.fq_coords(f.evaluate(x)));
            }
        }
    }

    #[test]
    fn kernel_dim_matches_root_count() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for (p, e, d) in [(2, 1, 6), (3, 1, 4), (2, 2, 3), (5, 1, 3), (2, 1, 12)] {
            let ctx = field(p, e, d);
            for trial in 0..12 {
                let mut f = random_poly(&ctx, &mut rng, d as usize);
                if trial % 3 == 0 {
                    // a product-of-roots shape with a known large kernel
                    f = QPoly::new(&ctx, vec![ctx.neg(FFElt::ONE), FFElt::ZERO, FFElt::ONE]).unwrap();
                }
                let roots = ctx.enumerate().unwrap().filter(|&x| f.evaluate(x).is_zero()).count();
                assert_eq!(roots as u64, ctx.q().pow(f.kernel_dim()));
                let rank = f.as_matrix().rank(&ctx) as u32;
                assert_eq!(rank + f.kernel_dim(), d);
            }
        }
    }

    #[test]
    fn compose_examples() {
        let ctx = field(2, 1, 3);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let g = random_poly(&ctx, &mut rng, 3);
        assert_eq!(QPoly::identity(&ctx).compose_mod(&g).unwrap(), g);
        let f9 = field(3, 1, 2);
        let xq = QPoly::monomial(&f9, 1, FFElt::ONE);
        assert_eq!(xq.compose_mod(&xq).unwrap(), QPoly::identity(&f9));
        for c in ctx.enumerate().unwrap() {
            let sq = QPoly::monomial(&ctx, 1, FFElt::ONE);
            let cx = QPoly::monomial(&ctx, 0, c);
            let expected = QPoly::monomial(&ctx, 1, ctx.mul(c, c));
            assert_eq!(sq.compose_mod(&cx).unwrap(), expected);
        }
    }

    #[test]
    fn compose_is_matrix_product() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for (p, e, d) in [(2, 1, 4), (3, 1, 3), (2, 2, 2)] {
            let ctx = field(p, e, d);
            for _ in 0..10 {
                let f = random_poly(&ctx, &mut rng, d as usize + 1);
                let g = random_poly(&ctx, &mut rng, d as usize);
                let h = f.compose_mod(&g).unwrap();
                for x in ctx.enumerate().unwrap() {
                    assert_eq!(h.evaluate(x), f.evaluate(g.evaluate(x)));
                }
                assert_eq!(h.as_matrix(), f.as_matrix().mul(&ctx, &g.as_matrix()));
            }
        }
    }

    #[test]
    fn context_mismatch() {
        let a = QPoly::identity(&field(2, 1, 3));
        let b = QPoly::identity(&field(2, 1, 4));
        assert_eq!(a.add(&b).unwrap_err(), Error::ContextMismatch);
        assert_eq!(a.compose_mod(&b).unwrap_err(), Error::ContextMismatch);
    }
}
