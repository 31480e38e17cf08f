use super::bivar::BivarPoly;
use super::univar::Poly1;
use crate::error::{Error, Result};
use crate::gf::{FFElt, FieldCtx};
use crate::linpoly::Instance;

/// Largest `q^j` allowed as an exponent when building curves.
pub const MAX_CURVE_EXPONENT: u64 = 1 << 16;

fn q_power(ctx: &FieldCtx, j: u32) -> Result<u32> {
    let v = ctx
        .q()
        .checked_pow(j)
        .filter(|&v| v <= MAX_CURVE_EXPONENT)
        .ok_or_else(|| Error::Precondition(format!("q^{j} is too large for a curve exponent")))?;
    Ok(v as u32)
}

/// `f(X) Y^{q^t} - f(Y) X^{q^t}`.
pub fn scatter_numerator(inst: &Instance) -> Result<BivarPoly> {
    let ctx = inst.ctx();
    let qt = q_power(ctx, inst.t())?;
    let mut terms = Vec::new();
    for j in inst.f().support() {
        let c = inst.f().coeff(j);
        let qj = q_power(ctx, j as u32)?;
        terms.push((qj, qt, c));
        terms.push((qt, qj, ctx.neg(c)));
    }
    Ok(BivarPoly::from_terms(ctx, &terms))
}

/// `X^q Y - X Y^q`.
pub fn scatter_divisor(ctx: &FieldCtx) -> BivarPoly {
    let q = ctx.q() as u32;
    BivarPoly::from_terms(ctx, &[(q, 1, FFElt::ONE), (1, q, ctx.neg(FFElt::ONE))])
}

/// The curve `(f(X) Y^{q^t} - f(Y) X^{q^t}) / (X^q Y - X Y^q)`. Its affine
/// points with `y/x` outside F_q are exactly the non-scatteredness witnesses.
pub fn build_scatter_curve(inst: &Instance) -> Result<BivarPoly> {
    let ctx = inst.ctx();
    let num = scatter_numerator(inst)?;
    let curve = num.exact_divide(&scatter_divisor(ctx))?;
    assert_eq!(curve.degree(), Some(scatter_curve_degree(inst)?));
    Ok(curve)
}

/// Expected degree of the scatter curve: `q^k + q^t - q - 1` with `k` the
/// top index of `f`.
pub fn scatter_curve_degree(inst: &Instance) -> Result<u32> {
    let ctx = inst.ctx();
    let k = inst.f().q_degree().expect("instance is nonzero") as u32;
    Ok(q_power(ctx, k)? + q_power(ctx, inst.t())? - ctx.q() as u32 - 1)
}

/// `prod (Y - rho X)` over `rho` in F_{q^k} outside F_q; the field must
/// contain F_{q^k}.
pub fn cyclotomic_product(ctx: &FieldCtx, k: u32) -> Result<BivarPoly> {
    let mut out = BivarPoly::constant(ctx, FFElt::ONE);
    for rho in ctx.subfield_of_degree(k)? {
        if ctx.in_subfield(rho) {
            continue;
        }
        let factor = BivarPoly::from_terms(ctx, &[(0, 1, FFElt::ONE), (1, 0, ctx.neg(rho))]);
        out = out.mul(&factor)?;
    }
    Ok(out)
}

/// The scatter curve restricted to the line `Y = uX`.
pub fn f_of_x_ux_expand(inst: &Instance, u: FFElt) -> Result<Poly1> {
    Ok(build_scatter_curve(inst)?.on_line(u))
}
