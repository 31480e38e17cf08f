use serde::Serialize;

use super::bivar::BivarPoly;
use crate::error::Result;
use crate::gf::FFElt;

/// Points of the curve on the line at infinity, as `(x:y:0)` with the first
/// nonzero coordinate equal to 1, sorted. Solved over the curve's own field.
pub fn points_at_infinity(f: &BivarPoly) -> Result<Vec<[FFElt; 3]>> {
    let ctx = f.ctx();
    let Some(d) = f.degree() else { return Ok(Vec::new()) };
    let top = f.homogeneous_part(d);
    let mut out = Vec::new();
    // (0:1:0) lies on the curve iff Y^d is missing from the top part
    if top.coeff(0, d).is_zero() {
        out.push([FFElt::ZERO, FFElt::ONE, FFElt::ZERO]);
    }
    if d > 0 {
        let g = top.on_line_at_infinity();
        for y in ctx.enumerate()? {
            if g.eval(y).is_zero() {
                out.push([FFElt::ONE, y, FFElt::ZERO]);
            }
        }
    }
    out.sort();
    Ok(out)
}

impl BivarPoly {
    /// `F_d(1, Y)` for a homogeneous `F_d`.
    fn on_line_at_infinity(&self) -> super::univar::Poly1 {
        let deg = self.degree_y().unwrap_or(0) as usize;
        let mut coeffs = vec![FFElt::ZERO; deg + 1];
        for (_, j, c) in self.terms() {
            coeffs[j as usize] = self.ctx().add(coeffs[j as usize], c);
        }
        super::univar::Poly1::new(self.ctx(), coeffs)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PointFilter {
    All,
    /// Only `x != 0` with `y/x` outside F_q.
    RatioNotInFq,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineCount {
    pub count: u64,
    /// Least counted point in canonical order.
    pub witness: Option<(FFElt, FFElt)>,
}

/// Affine zeros of `f` over its field. Points off the `Y` axis are found line
/// by line: on `Y = uX`, `F(x, ux) = sum_D F_D(1, u) x^D` over the homogeneous
/// parts `F_D`.
pub fn count_affine(f: &BivarPoly, filter: PointFilter) -> Result<AffineCount> {
    let ctx = f.ctx();
    ctx.require_enumerable()?;
    let size = ctx.size();
    let mut count = 0u64;
    let mut witness: Option<(FFElt, FFElt)> = None;
    if f.is_zero() {
        // every point lies on the zero curve
        let count = match filter {
            PointFilter::All => size * size,
            PointFilter::RatioNotInFq => (size - 1) * (size - ctx.q()),
        };
        let first = match filter {
            PointFilter::All => (FFElt::ZERO, FFElt::ZERO),
            PointFilter::RatioNotInFq => {
                let u = ctx.enumerate()?.find(|&u| !ctx.in_subfield(u)).expect("n > 1");
                (FFElt::ONE, u)
            }
        };
        let witness = (count > 0).then_some(first);
        return Ok(AffineCount { count, witness });
    }
    let mut note = |x: FFElt, y: FFElt| {
        count += 1;
        if witness.map_or(true, |w| (x, y) < w) {
            witness = Some((x, y));
        }
    };
    if filter == PointFilter::All {
        let g = f.at_x(FFElt::ZERO);
        for y in ctx.enumerate()? {
            if g.eval(y).is_zero() {
                note(FFElt::ZERO, y);
            }
        }
    }
    let degrees = f.homogeneous_degrees();
    // x^D for every nonzero x and every part degree
    let powers: Vec<Vec<FFElt>> = degrees
        .iter()
        .map(|&d| (0..size).map(|x| ctx.pow(FFElt::from_raw(x), d as u128)).collect())
        .collect();
    let dehom: Vec<_> = degrees.iter().map(|&d| f.homogeneous_part(d).on_line_at_infinity()).collect();
    for u in ctx.enumerate()? {
        if filter == PointFilter::RatioNotInFq && ctx.in_subfield(u) {
            continue;
        }
        let a: Vec<FFElt> = dehom.iter().map(|g| g.eval(u)).collect();
        let live: Vec<usize> = (0..a.len()).filter(|&k| !a[k].is_zero()).collect();
        for xi in 1..size {
            let v = live
                .iter()
                .fold(FFElt::ZERO, |acc, &k| ctx.add(acc, ctx.mul(a[k], powers[k][xi as usize])));
            if v.is_zero() {
                let x = FFElt::from_raw(xi);
                note(x, ctx.mul(u, x));
            }
        }
    }
    Ok(AffineCount { count, witness })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HasseWeil {
    pub degree: u32,
    pub field_size: u64,
    pub affine: u64,
    pub at_infinity: u64,
    pub points: u64,
    /// `|points - (field_size + 1)|`.
    pub gap: u64,
    /// `(d-1)(d-2) sqrt(field_size)`.
    pub bound: f64,
}

impl HasseWeil {
    /// `gap <= (d-1)(d-2) sqrt(field_size)`, compared exactly.
    pub fn within_bound(&self) -> bool {
        let c = (self.degree.saturating_sub(1) as u128) * (self.degree.saturating_sub(2) as u128);
        (self.gap as u128).pow(2) <= c * c * self.field_size as u128
    }
}

/// Projective point count over the curve's field against the Hasse-Weil bound.
pub fn hasse_weil_gap(f: &BivarPoly) -> Result<HasseWeil> {
    let ctx = f.ctx();
    let affine = count_affine(f, PointFilter::All)?.count;
    let at_infinity = points_at_infinity(f)?.len() as u64;
    let points = affine + at_infinity;
    let degree = f.degree().unwrap_or(0);
    let size = ctx.size();
    let c = (degree.saturating_sub(1) as f64) * (degree.saturating_sub(2) as f64);
    Ok(HasseWeil {
        degree,
        field_size: size,
        affine,
        at_infinity,
        points,
        gap: points.abs_diff(size + 1),
        bound: c * (size as f64).sqrt(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FieldCtx;

    #[test]
    fn infinity_examples() {
        let one = FFElt::ONE;
        let f2 = FieldCtx::new(2, 1, 1).unwrap();
        let conic = |ctx: &FieldCtx| BivarPoly::from_terms(ctx, &[(2, 0, one), (1, 1, one), (0, 2, one)]);
        assert!(points_at_infinity(&conic(&f2)).unwrap().is_empty());
        let f4 = FieldCtx::new(2, 1, 2).unwrap();
        assert_eq!(points_at_infinity(&conic(&f4)).unwrap().len(), 2);
    }

    // brute force over all pairs as the oracle
    #[test]
    fn counting_matches_brute_force() {
        let ctx = FieldCtx::new(3, 1, 2).unwrap();
        let g = ctx.gamma();
        let curves = [
            BivarPoly::from_terms(&ctx, &[(0, 1, FFElt::ONE), (0, 3, ctx.prime(2)), (4, 0, g)]),
            BivarPoly::from_terms(&ctx, &[(2, 0, FFElt::ONE), (1, 1, g), (0, 2, FFElt::ONE), (0, 0, g)]),
            BivarPoly::constant(&ctx, FFElt::ONE),
        ];
        for c in &curves {
            for filter in [PointFilter::All, PointFilter::RatioNotInFq] {
                let mut pts = Vec::new();
                for x in ctx.enumerate().unwrap() {
                    for y in ctx.enumerate().unwrap() {
                        let keep = match filter {
                            PointFilter::All => true,
                            PointFilter::RatioNotInFq => {
                                !x.is_zero() && !ctx.in_subfield(ctx.div(y, x).unwrap())
                            }
                        };
                        if keep && c.eval(x, y).is_zero() {
                            pts.push((x, y));
                        }
                    }
                }
                let r = count_affine(c, filter).unwrap();
                assert_eq!(r.count, pts.len() as u64);
                assert_eq!(r.witness, pts.first().copied());
            }
        }
    }

    #[test]
    fn line_has_no_gap() {
        let ctx = FieldCtx::new(2, 1, 3).unwrap();
        let line = BivarPoly::from_terms(&ctx, &[(0, 1, FFElt::ONE), (1, 0, ctx.gamma())]);
        let hw = hasse_weil_gap(&line).unwrap();
        assert_eq!((hw.points, hw.gap), (9, 0));
        assert!(hw.within_bound());
    }
}
