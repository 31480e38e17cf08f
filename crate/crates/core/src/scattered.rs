//! Index-t scatteredness, linear-set weights, extension scans and the
//! decision predicates for the index-0 family `X^{q^i} + ... + b X^{q^k}`.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::{embed, FFElt, FieldCtx};
use crate::linalg::{fp_nullspace, fp_rank};
use crate::linpoly::{fp_basis, Instance, QPoly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScatterVerdict {
    pub scattered: bool,
    /// First pair `(x, y)`, `x < y`, with equal ratios `f(x)/x^{q^t}` and `y/x` outside F_q.
    pub witness: Option<(FFElt, FFElt)>,
}

impl ScatterVerdict {
    fn from_witness(witness: Option<(FFElt, FFElt)>) -> Self {
        ScatterVerdict { scattered: witness.is_none(), witness }
    }
}

/// Checks that `(x, y)` really witnesses non-scatteredness.
pub fn is_valid_witness(inst: &Instance, x: FFElt, y: FFElt) -> bool {
    let ctx = inst.ctx();
    if x.is_zero() || y.is_zero() {
        return false;
    }
    let f = inst.f();
    let lhs = ctx.mul(f.evaluate(x), ctx.frobenius(y, inst.t()));
    let rhs = ctx.mul(f.evaluate(y), ctx.frobenius(x, inst.t()));
    lhs == rhs && !ctx.in_subfield(ctx.div(y, x).expect("x is nonzero"))
}

/// Fiber-count tester: `x -> f(x)/x^{q^t}` must have every nonempty fiber of
/// size `q - 1` on the nonzero elements.
pub fn is_scattered(inst: &Instance) -> Result<ScatterVerdict> {
    let ctx = inst.ctx();
    ctx.require_enumerable()?;
    let ev = inst.f().evaluator();
    let te = ctx.frobenius_exponent(inst.t());
    let ratio = |x: FFElt| ctx.div(ev.eval(x), ctx.pow(x, te)).expect("x is nonzero");
    let size = ctx.size();
    let mut counts = vec![0u32; size as usize];
    for i in 1..size {
        counts[ratio(FFElt::from_raw(i)).index() as usize] += 1;
    }
    let q1 = (ctx.q() - 1) as u32;
    if counts.iter().all(|&c| c == 0 || c == q1) {
        return Ok(ScatterVerdict::from_witness(None));
    }
    // the least element of any oversized fiber, then its least partner
    let x = (1..size)
        .map(FFElt::from_raw)
        .find(|&x| counts[ratio(x).index() as usize] > q1)
        .expect("an oversized fiber exists");
    let r = ratio(x);
    let y = (x.index() + 1..size)
        .map(FFElt::from_raw)
        .find(|&y| ratio(y) == r && !ctx.in_subfield(ctx.div(y, x).unwrap()))
        .expect("oversized fibers contain F_q-independent pairs");
    Ok(ScatterVerdict::from_witness(Some((x, y))))
}

/// Columns of the F_p-matrix of `c X^{q^t} - f` are `c·B_i - F_i`.
struct RatioMaps {
    ctx: FieldCtx,
    frob: Vec<FFElt>,
    image: Vec<FFElt>,
}

impl RatioMaps {
    fn new(inst: &Instance) -> Self {
        let ctx = inst.ctx().clone();
        let ev = inst.f().evaluator();
        let frob = fp_basis(&ctx).map(|b| ctx.frobenius(b, inst.t())).collect();
        let image = fp_basis(&ctx).map(|b| ev.eval(b)).collect();
        RatioMaps { ctx, frob, image }
    }

    fn columns(&self, c: FFElt) -> Vec<FFElt> {
        self.frob.iter().zip(&self.image).map(|(&b, &f)| self.ctx.sub(self.ctx.mul(c, b), f)).collect()
    }

    fn kernel_dim(&self, c: FFElt) -> u32 {
        let rank = fp_rank(&self.ctx, &self.columns(c)) as u32;
        (self.ctx.degree() - rank) / self.ctx.e()
    }

    /// Nonzero kernel elements of `c X^{q^t} - f`, ascending.
    fn kernel(&self, c: FFElt) -> Vec<FFElt> {
        let ctx = &self.ctx;
        let basis: Vec<FFElt> = fp_nullspace(ctx, &self.columns(c))
            .into_iter()
            .map(|v| ctx.elt(&v).expect("coordinates reduced"))
            .collect();
        let mut out = vec![FFElt::ZERO];
        for b in basis {
            let mut next = Vec::with_capacity(out.len() * ctx.p() as usize);
            for &x in &out {
                let mut m = FFElt::ZERO;
                for _ in 0..ctx.p() {
                    next.push(ctx.add(x, m));
                    m = ctx.add(m, b);
                }
            }
            out = next;
        }
        out.sort();
        out.remove(0);
        out
    }
}

/// Kernel tester: every map `c X^{q^t} - f` must have kernel dimension at
/// most 1. Produces the same canonical witness as [`is_scattered`].
pub fn is_scattered_kernel(inst: &Instance) -> Result<ScatterVerdict> {
    let ctx = inst.ctx();
    ctx.require_enumerable()?;
    let maps = RatioMaps::new(inst);
    let mut best: Option<(FFElt, FFElt)> = None;
    for c in ctx.enumerate()? {
        if maps.kernel_dim(c) < 2 {
            continue;
        }
        let kernel = maps.kernel(c);
        let x = kernel[0];
        let y = *kernel[1..]
            .iter()
            .find(|&&y| !ctx.in_subfield(ctx.div(y, x).unwrap()))
            .expect("dimension at least 2");
        if best.map_or(true, |b| (x, y) < b) {
            best = Some((x, y));
        }
    }
    Ok(ScatterVerdict::from_witness(best))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinearSetReport {
    /// Number of points of weight at least 1.
    pub size: u64,
    pub weight_spectrum: BTreeMap<u32, u64>,
    pub max_weight: u32,
}

/// Weights of all points `<(u, v)>` of PG(1, q^n) with respect to
/// `U = {(x^{q^t}, f(x))}`; the weight of `<(u, v)>` is the kernel dimension
/// of `v X^{q^t} - u f`.
pub fn linear_set_report(inst: &Instance) -> Result<LinearSetReport> {
    let ctx = inst.ctx();
    ctx.require_enumerable()?;
    let maps = RatioMaps::new(inst);
    let mut spectrum = BTreeMap::new();
    // <(0, 1)> meets U trivially since x -> x^{q^t} is injective
    for v in ctx.enumerate()? {
        let w = maps.kernel_dim(v);
        if w > 0 {
            *spectrum.entry(w).or_insert(0u64) += 1;
        }
    }
    Ok(LinearSetReport {
        size: spectrum.values().sum(),
        max_weight: spectrum.keys().copied().max().unwrap_or(0),
        weight_spectrum: spectrum,
    })
}

/// The instance over F_{q^{mn}} obtained by embedding the coefficients.
pub fn extension_instance(inst: &Instance, m: u32, ceiling: u64) -> Result<Instance> {
    let ctx = inst.ctx();
    if m == 0 {
        return Err(Error::Precondition("extension degree must be positive".into()));
    }
    let sup = if m == 1 {
        ctx.with_ceiling(ceiling)
    } else {
        let d = ctx.d().checked_mul(m).ok_or(Error::Overflow("extension degree"))?;
        FieldCtx::new(ctx.p() as u64, ctx.e(), d)?.with_ceiling(ceiling)
    };
    sup.require_enumerable()?;
    let emb = embed(ctx, &sup)?;
    Instance::new(inst.f().map(&emb)?, inst.t())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanEntry {
    pub m: u32,
    pub verdict: Result<ScatterVerdict>,
}

/// Runs the scatteredness test over F_{q^{mn}} for each `m`. Errors (such as
/// an exceeded ceiling) are reported per entry and do not stop the scan.
pub fn scan_extensions(inst: &Instance, ms: &[u32], ceiling: u64) -> Vec<ScanEntry> {
    ms.iter()
        .map(|&m| ScanEntry {
            m,
            verdict: extension_instance(inst, m, ceiling).and_then(|ext| is_scattered(&ext)),
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Theorem31Params {
    pub q: u64,
    pub i: u32,
    pub k: u32,
    pub l: u32,
}

impl Theorem31Params {
    fn validate(&self) -> Result<()> {
        if self.q < 2 || self.i < 1 || self.i >= self.k || self.l < self.i || self.l > self.k {
            return Err(Error::Precondition(format!(
                "need q >= 2 and 1 <= i < k, i <= l <= k; got {self:?}"
            )));
        }
        Ok(())
    }
}

/// `q^{l+i} + q^l - q^{2i} - q^i + (q^i - q)^2/4 < (2/9)(q^k - q)^2`, decided
/// exactly after clearing denominators.
pub fn theorem31_inequality(params: Theorem31Params) -> Result<bool> {
    params.validate()?;
    let of = || Error::Overflow("index-0 inequality");
    let q = i128::try_from(params.q).map_err(|_| of())?;
    let pw = |e: u32| q.checked_pow(e).ok_or_else(of);
    let mul = |a: i128, b: i128| a.checked_mul(b).ok_or_else(of);
    let add = |a: i128, b: i128| a.checked_add(b).ok_or_else(of);
    let (i, k, l) = (params.i, params.k, params.l);
    let poly = add(add(pw(l + i)?, pw(l)?)?, -add(pw(2 * i)?, pw(i)?)?)?;
    let lhs = add(mul(poly, 36)?, mul(9, mul(pw(i)? - q, pw(i)? - q)?)?)?;
    let rhs = mul(8, mul(pw(k)? - q, pw(k)? - q)?)?;
    Ok(lhs < rhs)
}

/// The cases in which the index-0 inequality holds once the kernel has
/// dimension at most 1.
pub fn remark32_case_match(q: u64, k: u32, i: u32) -> bool {
    if i >= k {
        return false;
    }
    match q {
        2 | 3 => k - i >= 2,
        4 => !matches!((k, i), (2, 1) | (3, 2)),
        5 => (k, i) != (2, 1),
        _ => q > 5,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Theorem34Reason {
    /// More than `q` roots.
    KernelExcess,
    /// `gcd(k, n) > 1` and `k <= n/4`.
    GcdCondition,
    /// The index-0 inequality holds and `k <= n/4`.
    Inequality,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Theorem34Verdict {
    NotScatteredGuaranteed(Theorem34Reason),
    Inconclusive,
}

/// Shape `X^{q^i} + sum_{i<j<k} a_j X^{q^j} + b X^{q^k}` with `i >= 1`, `b != 0`.
/// Returns `(i, k)`.
pub fn index0_shape(f: &QPoly) -> Result<(u32, u32)> {
    let i = f.lowest_index().ok_or_else(|| Error::ShapeMismatch("zero polynomial".into()))?;
    let k = f.q_degree().expect("nonzero");
    if i == 0 {
        return Err(Error::ShapeMismatch("lowest term must be X^(q^i) with i >= 1".into()));
    }
    if f.coeff(i) != FFElt::ONE {
        return Err(Error::ShapeMismatch("lowest coefficient must be 1".into()));
    }
    if k == i {
        return Err(Error::ShapeMismatch("need a top term b X^(q^k) with k > i".into()));
    }
    Ok((i as u32, k as u32))
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Sufficient conditions for an index-0 polynomial of the above shape to be
/// non-scattered, checked in order.
pub fn theorem34_verdict(f: &QPoly) -> Result<Theorem34Verdict> {
    let (i, k) = index0_shape(f)?;
    let n = f.ctx().d();
    let kd = f.kernel_dim();
    if kd > 1 {
        return Ok(Theorem34Verdict::NotScatteredGuaranteed(Theorem34Reason::KernelExcess));
    }
    let small_k = 4 * k <= n;
    if gcd(k, n) > 1 && small_k {
        return Ok(Theorem34Verdict::NotScatteredGuaranteed(Theorem34Reason::GcdCondition));
    }
    // kd <= 1 here, so l = kd + i stays within [i, k]
    let l = kd + i;
    let params = Theorem31Params { q: f.ctx().q(), i, k, l };
    if small_k && theorem31_inequality(params)? {
        return Ok(Theorem34Verdict::NotScatteredGuaranteed(Theorem34Reason::Inequality));
    }
    Ok(Theorem34Verdict::Inconclusive)
}

/// `{u v^q - v u^q : u, v nonzero}`.
pub fn pair_product_image(ctx: &FieldCtx) -> Result<BTreeSet<FFElt>> {
    ctx.require_enumerable()?;
    let size = ctx.size();
    let qe = ctx.frobenius_exponent(1);
    let frob: Vec<FFElt> = (0..size).map(|i| ctx.pow(FFElt::from_raw(i), qe)).collect();
    let mut seen = vec![false; size as usize];
    for u in 1..size {
        let (ux, uq) = (FFElt::from_raw(u), frob[u as usize]);
        for v in 1..size {
            let (vx, vq) = (FFElt::from_raw(v), frob[v as usize]);
            seen[ctx.sub(ctx.mul(ux, vq), ctx.mul(vx, uq)).index() as usize] = true;
        }
    }
    Ok((0..size).filter(|&i| seen[i as usize]).map(FFElt::from_raw).collect())
}

/// `X^{q^2} + a X^q + b X`.
pub fn completion_poly(ctx: &FieldCtx, a: FFElt, b: FFElt) -> QPoly {
    QPoly::new(ctx, vec![b, a, FFElt::ONE]).expect("elements of ctx")
}

/// The least `a` for which `X^{q^2} + a X^q + b X` has `q^2` roots.
/// Requires `Norm(b) = 1` and `n >= 3`.
pub fn find_many_roots_completion(ctx: &FieldCtx, b: FFElt) -> Result<Option<FFElt>> {
    if ctx.d() < 3 {
        return Err(Error::Precondition("extension degree must be at least 3".into()));
    }
    if ctx.norm(b) != FFElt::ONE {
        return Err(Error::Precondition("Norm(b) must be 1".into()));
    }
    Ok(ctx.enumerate()?.find(|&a| completion_poly(ctx, a, b).kernel_dim() == 2))
}

/// From an F_q-independent pair `u, v`: `alpha = u v^q - v u^q`,
/// `beta = u^{q^2} v - v^{q^2} u`, giving `a = beta/alpha` and
/// `b = alpha^{q-1}`. `None` when `alpha = 0`.
pub fn completion_from_pair(ctx: &FieldCtx, u: FFElt, v: FFElt) -> Option<(FFElt, FFElt)> {
    let fr = |x: FFElt, s: u32| ctx.frobenius(x, s);
    let alpha = ctx.sub(ctx.mul(u, fr(v, 1)), ctx.mul(v, fr(u, 1)));
    if alpha.is_zero() {
        return None;
    }
    let beta = ctx.sub(ctx.mul(fr(u, 2), v), ctx.mul(fr(v, 2), u));
    let a = ctx.div(beta, alpha).ok()?;
    let b = ctx.pow(alpha, (ctx.q() - 1) as u128);
    Some((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn field(p: u64, e: u32, d: u32) -> FieldCtx {
        FieldCtx::new(p, e, d).unwrap()
    }

    fn mono(ctx: &FieldCtx, s: usize, t: u32) -> Instance {
        Instance::new(QPoly::monomial(ctx, s, FFElt::ONE), t).unwrap()
    }

    // brute-force oracle over all pairs
    fn oracle(inst: &Instance) -> Option<(FFElt, FFElt)> {
        let ctx = inst.ctx();
        for x in 1..ctx.size() {
            for y in x + 1..ctx.size() {
                let (x, y) = (FFElt::from_raw(x), FFElt::from_raw(y));
                if is_valid_witness(inst, x, y) {
                    return Some((x, y));
                }
            }
        }
        None
    }

    #[test]
    fn verdict_examples() {
        let f8 = field(2, 1, 3);
        assert!(is_scattered(&mono(&f8, 1, 0)).unwrap().scattered);
        let f16 = field(2, 1, 4);
        let v = is_scattered(&mono(&f16, 2, 0)).unwrap();
        assert!(!v.scattered);
        let (x, y) = v.witness.unwrap();
        assert_eq!(x, FFElt::ONE);
        // y generates F_4 inside F_16
        assert_eq!(f16.pow(y, 3), FFElt::ONE);
        assert_eq!(v, is_scattered_kernel(&mono(&f16, 2, 0)).unwrap());
        assert!(is_scattered(&mono(&f8, 0, 1)).unwrap().scattered);
    }

    #[test]
    fn testers_match_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for (p, e, d) in [(2, 1, 3), (2, 1, 4), (3, 1, 3), (2, 2, 2), (2, 2, 3), (5, 1, 2)] {
            let ctx = field(p, e, d);
            for _ in 0..15 {
                let t = rng.gen_range(0..d);
                let coeffs: Vec<FFElt> = (0..d)
                    .map(|j| {
                        if j == t {
                            FFElt::ZERO
                        } else {
                            ctx.from_index(rng.gen_range(0..ctx.size())).unwrap()
                        }
                    })
                    .collect();
                let Ok(inst) = QPoly::new(&ctx, coeffs).and_then(|f| Instance::new(f, t)) else {
                    continue;
                };
                let fiber = is_scattered(&inst).unwrap();
                assert_eq!(fiber.witness, oracle(&inst), "{inst:?}");
                assert_eq!(fiber, is_scattered_kernel(&inst).unwrap());
                let report = linear_set_report(&inst).unwrap();
                assert_eq!(report.max_weight == 1, fiber.scattered);
            }
        }
    }

    #[test]
    fn scaling_invariance() {
        let ctx = field(3, 1, 3);
        let f = QPoly::new(&ctx, vec![FFElt::ZERO, ctx.gamma(), FFElt::ONE]).unwrap();
        let base = is_scattered(&Instance::new(f.clone(), 0).unwrap()).unwrap();
        for c in ctx.enumerate().unwrap().skip(1) {
            let v = is_scattered(&Instance::new(f.scale(c), 0).unwrap()).unwrap();
            assert_eq!(v.scattered, base.scattered);
        }
    }

    #[test]
    fn linear_set_examples() {
        let f8 = field(2, 1, 3);
        let r = linear_set_report(&mono(&f8, 1, 0)).unwrap();
        assert_eq!((r.size, r.max_weight), (7, 1));
        let f16 = field(2, 1, 4);
        let r = linear_set_report(&mono(&f16, 2, 0)).unwrap();
        assert_eq!(r.max_weight, 2);
        let total: u64 = r.weight_spectrum.iter().map(|(&w, &c)| c * (2u64.pow(w) - 1)).sum();
        assert_eq!(total, 15);
        assert!(r.size < 15);
    }

    #[test]
    fn scan_examples() {
        let f8 = field(2, 1, 3);
        let scan = scan_extensions(&mono(&f8, 0, 1), &[1, 2, 3], 1 << 22);
        assert!(scan.iter().all(|e| e.verdict.as_ref().unwrap().scattered));
        let scan = scan_extensions(&mono(&f8, 1, 0), &[1, 2], 1 << 22);
        assert!(scan.iter().all(|e| e.verdict.as_ref().unwrap().scattered));
        let f4 = field(2, 1, 2);
        let scan = scan_extensions(&mono(&f4, 1, 0), &[2], 1 << 22);
        assert!(scan[0].verdict.as_ref().unwrap().scattered);
        let scan = scan_extensions(&mono(&f8, 1, 0), &[1, 9], 1 << 20);
        assert!(scan[0].verdict.is_ok());
        assert!(matches!(scan[1].verdict, Err(Error::CeilingExceeded { .. })));
    }

    #[test]
    fn inequality_examples() {
        let p = |q, i, k, l| Theorem31Params { q, i, k, l };
        assert!(!theorem31_inequality(p(2, 1, 2, 2)).unwrap());
        assert!(theorem31_inequality(p(7, 1, 2, 2)).unwrap());
        assert!(!theorem31_inequality(p(5, 1, 2, 2)).unwrap());
        assert!(theorem31_inequality(p(2, 2, 1, 2)).is_err());
        assert!(remark32_case_match(2, 3, 1));
        assert!(!remark32_case_match(4, 2, 1));
        assert!(remark32_case_match(7, 5, 4));
    }

    // exact rational evaluation as an independent oracle
    #[test]
    fn inequality_against_rationals() {
        for q in 2u64..=9 {
            for k in 2..=8u32 {
                for i in 1..k {
                    for l in i..=k {
                        let qf = |e: u32| (q as f64).powi(e as i32);
                        let lhs = qf(l + i) + qf(l) - qf(2 * i) - qf(i) + (qf(i) - q as f64).powi(2) / 4.0;
                        let rhs = 2.0 / 9.0 * (qf(k) - q as f64).powi(2);
                        let exact = theorem31_inequality(Theorem31Params { q, i, k, l }).unwrap();
                        if (lhs - rhs).abs() > 1e-6 * rhs.max(1.0) {
                            assert_eq!(exact, lhs < rhs, "q={q} i={i} k={k} l={l}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn theorem34_examples() {
        let f256 = field(2, 1, 8);
        let f = QPoly::from_terms(&f256, &[(1, FFElt::ONE), (2, FFElt::ONE)]).unwrap();
        assert_eq!(
            theorem34_verdict(&f).unwrap(),
            Theorem34Verdict::NotScatteredGuaranteed(Theorem34Reason::GcdCondition)
        );
        assert!(!is_scattered(&Instance::new(f, 0).unwrap()).unwrap().scattered);
        let f343 = field(7, 1, 3);
        let f = QPoly::from_terms(&f343, &[(1, FFElt::ONE), (2, f343.gamma())]).unwrap();
        assert_eq!(theorem34_verdict(&f).unwrap(), Theorem34Verdict::Inconclusive);
        let bad = QPoly::from_terms(&f343, &[(0, FFElt::ONE), (2, FFElt::ONE)]).unwrap();
        assert!(matches!(theorem34_verdict(&bad), Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn kernel_excess_forces_witness() {
        // (X^{q^2} - X)^q restricted to F_{q^4} has kernel F_{q^2}
        let ctx = field(2, 1, 4);
        let f = QPoly::from_terms(&ctx, &[(1, FFElt::ONE), (3, FFElt::ONE)]).unwrap();
        assert_eq!(f.kernel_dim(), 2);
        assert_eq!(
            theorem34_verdict(&f).unwrap(),
            Theorem34Verdict::NotScatteredGuaranteed(Theorem34Reason::KernelExcess)
        );
        let inst = Instance::new(f, 0).unwrap();
        let v = is_scattered(&inst).unwrap();
        let (x, y) = v.witness.unwrap();
        assert!(inst.f().evaluate(x).is_zero() && inst.f().evaluate(y).is_zero());
    }

    #[test]
    fn pair_image_examples() {
        let f8 = field(2, 1, 3);
        assert_eq!(pair_product_image(&f8).unwrap().len(), 8);
        let f4 = field(2, 1, 2);
        let img = pair_product_image(&f4).unwrap();
        // oracle over the 9 pairs
        let mut expect = BTreeSet::new();
        for u in f4.enumerate().unwrap().skip(1) {
            for v in f4.enumerate().unwrap().skip(1) {
                let w = f4.sub(f4.mul(u, f4.frobenius(v, 1)), f4.mul(v, f4.frobenius(u, 1)));
                expect.insert(w);
            }
        }
        assert_eq!(img, expect);
        assert!(img.contains(&FFElt::ZERO));
    }

    #[test]
    fn completion_examples() {
        let f8 = field(2, 1, 3);
        let a = find_many_roots_completion(&f8, FFElt::ONE).unwrap().unwrap();
        assert_eq!(completion_poly(&f8, a, FFElt::ONE).kernel_dim(), 2);
        let f27 = field(3, 1, 3);
        let non_unit = f27.enumerate().unwrap().find(|&b| f27.norm(b) == f27.prime(2)).unwrap();
        assert!(find_many_roots_completion(&f27, non_unit).is_err());
        for u in f27.enumerate().unwrap() {
            for v in f27.enumerate().unwrap() {
                if let Some((a, b)) = completion_from_pair(&f27, u, v) {
                    let g = completion_poly(&f27, a, b);
                    assert_eq!(g.kernel_dim(), 2);
                    assert!(g.evaluate(u).is_zero() && g.evaluate(v).is_zero());
                }
            }
        }
    }
}
