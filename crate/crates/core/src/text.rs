//! Text formats for fields, elements, q-polynomials and bivariate polynomials.
//!
//! * field: `p^e^d` (least irreducible modulus), or `p:c0,c1,...` /
//!   `p^e:c0,c1,...` for an explicit monic modulus over F_p, constant first
//! * element: F_p coordinates `c0,c1,...` on the powers of the modulus root
//! * q-polynomial: coefficients of `X, X^q, X^{q^2}, ...` separated by `;`
//! * bivariate polynomial: terms `i,j:elt` for `elt X^i Y^j`, separated by `;`

use crate::curve::BivarPoly;
use crate::error::{Error, Result};
use crate::gf::{FFElt, FieldCtx};
use crate::linpoly::QPoly;

fn parse_num<T: std::str::FromStr>(s: &str, what: &str) -> Result<T> {
    s.trim().parse().map_err(|_| Error::Parse(format!("bad {what} {s:?}")))
}

pub fn parse_field(s: &str) -> Result<FieldCtx> {
    let s = s.trim();
    if let Some((head, modulus)) = s.split_once(':') {
        let (p, e) = match head.split_once('^') {
            Some((p, e)) => (parse_num(p, "prime")?, parse_num(e, "exponent")?),
            None => (parse_num(head, "prime")?, 1),
        };
        let coeffs = modulus
            .split(',')
            .map(|c| parse_num(c, "modulus coefficient"))
            .collect::<Result<Vec<u32>>>()?;
        return FieldCtx::with_modulus(p, e, coeffs);
    }
    let parts: Vec<&str> = s.split('^').collect();
    if parts.len() != 3 {
        return Err(Error::Parse(format!("field must look like p^e^d, got {s:?}")));
    }
    FieldCtx::new(parse_num(parts[0], "prime")?, parse_num(parts[1], "exponent")?, parse_num(parts[2], "degree")?)
}

pub fn format_field(ctx: &FieldCtx) -> String {
    format!("{}^{}^{}", ctx.p(), ctx.e(), ctx.d())
}

pub fn parse_elt(ctx: &FieldCtx, s: &str) -> Result<FFElt> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty element".into()));
    }
    let coords = s.split(',').map(|c| parse_num(c, "coordinate")).collect::<Result<Vec<u32>>>()?;
    ctx.elt(&coords)
}

/// Coordinates with trailing zeros dropped; zero prints as `0`.
pub fn format_elt(ctx: &FieldCtx, x: FFElt) -> String {
    let mut c = ctx.coeffs(x);
    while c.len() > 1 && c.last() == Some(&0) {
        c.pop();
    }
    c.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

pub fn parse_qpoly(ctx: &FieldCtx, s: &str) -> Result<QPoly> {
    let coeffs = s.split(';').map(|c| parse_elt(ctx, c)).collect::<Result<Vec<_>>>()?;
    QPoly::new(ctx, coeffs)
}

pub fn format_qpoly(p: &QPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    p.coeffs().iter().map(|&c| format_elt(p.ctx(), c)).collect::<Vec<_>>().join(";")
}

pub fn parse_bivar(ctx: &FieldCtx, s: &str) -> Result<BivarPoly> {
    let mut terms = Vec::new();
    for term in s.split(';').map(str::trim).filter(|t| !t.is_empty()) {
        let (exps, c) = term
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("term {term:?} must look like i,j:elt")))?;
        let (i, j) = exps
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("exponents {exps:?} must look like i,j")))?;
        terms.push((parse_num(i, "exponent")?, parse_num(j, "exponent")?, parse_elt(ctx, c)?));
    }
    Ok(BivarPoly::from_terms(ctx, &terms))
}

/// Terms in increasing monomial order; the zero polynomial prints as empty.
pub fn format_bivar(f: &BivarPoly) -> String {
    f.terms()
        .map(|(i, j, c)| format!("{i},{j}:{}", format_elt(f.ctx(), c)))
        .collect::<Vec<_>>()
        .join(";")
}

/// `x;y` for an affine point.
pub fn parse_point(ctx: &FieldCtx, s: &str) -> Result<(FFElt, FFElt)> {
    let (x, y) = s
        .split_once(';')
        .ok_or_else(|| Error::Parse(format!("point {s:?} must look like x;y")))?;
    Ok((parse_elt(ctx, x)?, parse_elt(ctx, y)?))
}
