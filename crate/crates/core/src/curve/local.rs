use super::bivar::BivarPoly;
use super::univar::Poly1;
use crate::error::{Error, Result};
use crate::gf::FFElt;

/// Multiplicity of `f` at `(u, v)` and its tangent cone there. The
/// multiplicity is 0 off the curve, in which case the cone is the constant
/// `f(u, v)`.
pub fn multiplicity(f: &BivarPoly, point: (FFElt, FFElt)) -> Result<(u32, BivarPoly)> {
    if f.is_zero() {
        return Err(Error::Precondition("multiplicity of the zero polynomial".into()));
    }
    let local = if point.0.is_zero() && point.1.is_zero() { f.clone() } else { f.shift(point.0, point.1) };
    let m = local.homogeneous_degrees()[0];
    Ok((m, local.homogeneous_part(m)))
}

/// Whether a binary form splits into pairwise distinct linear factors over
/// the algebraic closure.
pub fn is_ordinary(cone: &BivarPoly) -> Result<bool> {
    if cone.is_zero() || !cone.is_homogeneous() {
        return Err(Error::Precondition("tangent cone must be a nonzero binary form".into()));
    }
    let m = cone.degree().expect("nonzero");
    let ctx = cone.ctx();
    let mut coeffs = vec![FFElt::ZERO; m as usize + 1];
    for (_, j, c) in cone.terms() {
        coeffs[j as usize] = c;
    }
    let g = Poly1::new(ctx, coeffs);
    // X^(m - deg g) divides the form; the line X = 0 may occur at most once
    let at_infinity = m as usize - g.degree().expect("nonzero");
    if at_infinity > 1 {
        return Ok(false);
    }
    // over a perfect field g is squarefree iff gcd(g, g') = 1; when g' = 0
    // the gcd is g itself, a p-th power
    Ok(g.gcd(&g.derivative()).degree() == Some(0))
}

/// `F(X, XY) / X^r` where `r` is the multiplicity at the origin.
pub fn geometric_transform(f: &BivarPoly) -> Result<BivarPoly> {
    let (r, cone) = multiplicity(f, (FFElt::ZERO, FFElt::ZERO))?;
    if r == 0 {
        return Err(Error::Precondition("origin is not on the curve".into()));
    }
    if cone.coeff(0, r).is_zero() {
        return Err(Error::Precondition("X = 0 is tangent at the origin".into()));
    }
    let terms: Vec<(u32, u32, FFElt)> = f.terms().map(|(i, j, c)| (i + j - r, j, c)).collect();
    Ok(BivarPoly::from_terms(f.ctx(), &terms))
}

/// The coefficients `c_1..c_k` of the branch `Y = c_1 X + ... + c_k X^k`
/// through the origin, where `F_Y(0, 0) != 0`.
pub fn branch_series(f: &BivarPoly, k: usize) -> Result<Vec<FFElt>> {
    let ctx = f.ctx();
    if !f.coeff(0, 0).is_zero() {
        return Err(Error::Precondition("origin is not on the curve".into()));
    }
    let c01 = f.coeff(0, 1);
    if c01.is_zero() {
        return Err(Error::Precondition("curve is singular in Y at the origin".into()));
    }
    let scale = ctx.neg(ctx.inv(c01)?);
    let mut y = vec![FFElt::ZERO; k + 1];
    for s in 1..=k {
        let v = substitute_truncated(f, &y, s);
        y[s] = ctx.mul(scale, v);
    }
    Ok(y[1..].to_vec())
}

// Coefficient of X^s in F(X, y(X)), where y has no constant term.
fn substitute_truncated(f: &BivarPoly, y: &[FFElt], s: usize) -> FFElt {
    let ctx = f.ctx();
    let mul_trunc = |a: &[FFElt], b: &[FFElt]| {
        let mut out = vec![FFElt::ZERO; s + 1];
        for (i, &x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, &z) in b.iter().enumerate().take(s + 1 - i) {
                out[i + j] = ctx.add(out[i + j], ctx.mul(x, z));
            }
        }
        out
    };
    let ys = &y[..=s.min(y.len() - 1)];
    let mut powers: Vec<Vec<FFElt>> = vec![{
        let mut one = vec![FFElt::ZERO; s + 1];
        one[0] = FFElt::ONE;
        one
    }];
    let mut acc = FFElt::ZERO;
    for (i, j, c) in f.terms() {
        let (i, j) = (i as usize, j as usize);
        if i > s {
            continue;
        }
        while powers.len() <= j {
            let next = mul_trunc(powers.last().expect("nonempty"), ys);
            powers.push(next);
        }
        acc = ctx.add(acc, ctx.mul(c, powers[j][s - i]));
    }
    acc
}
