use super::bivar::BivarPoly;
use super::univar::Poly1;
use crate::error::{Error, Result};

/// Sylvester resultant of `a` and `b` with respect to `Y`, as a polynomial in `X`.
pub fn resultant_in_y(a: &BivarPoly, b: &BivarPoly) -> Result<Poly1> {
    if a.ctx() != b.ctx() {
        return Err(Error::ContextMismatch);
    }
    let (m, n) = match (a.degree_y(), b.degree_y()) {
        (Some(m), Some(n)) if m > 0 && n > 0 => (m as usize, n as usize),
        _ => return Err(Error::Precondition("resultant needs positive Y-degree on both sides".into())),
    };
    let ctx = a.ctx();
    let (ac, bc) = (a.y_coefficients(), b.y_coefficients());
    let size = m + n;
    let zero = Poly1::zero(ctx);
    let mut rows = vec![vec![zero.clone(); size]; size];
    for r in 0..n {
        for k in 0..=m {
            rows[r][r + k] = ac[m - k].clone();
        }
    }
    for r in 0..m {
        for k in 0..=n {
            rows[n + r][r + k] = bc[n - k].clone();
        }
    }
    determinant(rows)
}

// Fraction-free Bareiss elimination over F[X].
fn determinant(mut a: Vec<Vec<Poly1>>) -> Result<Poly1> {
    let size = a.len();
    let ctx = a[0][0].ctx().clone();
    let mut negate = false;
    let mut prev = Poly1::constant(&ctx, crate::gf::FFElt::ONE);
    for k in 0..size {
        if a[k][k].is_zero() {
            match (k + 1..size).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(Poly1::zero(&ctx)),
            }
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let v = a[k][k].mul(&a[i][j]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = v.exact_div(&prev)?;
            }
            a[i][k] = Poly1::zero(&ctx);
        }
        prev = a[k][k].clone();
    }
    let det = a[size - 1][size - 1].clone();
    Ok(if negate { det.neg() } else { det })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::{FFElt, FieldCtx};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn small_resultants() {
        let f3 = FieldCtx::new(3, 1, 1).unwrap();
        let one = FFElt::ONE;
        let m1 = f3.neg(one);
        let a = BivarPoly::from_terms(&f3, &[(0, 1, one), (1, 0, m1)]);
        let b = BivarPoly::from_terms(&f3, &[(0, 1, one), (2, 0, m1)]);
        // det [[1, -X], [1, -X^2]] = X - X^2
        let r = resultant_in_y(&a, &b).unwrap();
        assert_eq!(r, Poly1::new(&f3, vec![FFElt::ZERO, one, m1]));
        let roots: Vec<_> = f3.enumerate().unwrap().filter(|&x| r.eval(x).is_zero()).collect();
        assert_eq!(roots, vec![FFElt::ZERO, one]);

        let f2 = FieldCtx::new(2, 1, 1).unwrap();
        let a = BivarPoly::from_terms(&f2, &[(0, 1, one), (1, 0, one)]);
        assert!(resultant_in_y(&a, &a).unwrap().is_zero());
        assert!(resultant_in_y(&a, &BivarPoly::monomial(&f2, 1, 0, one)).is_err());
    }

    fn random_bivar(ctx: &FieldCtx, rng: &mut ChaCha8Rng, dx: u32, dy: u32) -> BivarPoly {
        let mut terms = Vec::new();
        for i in 0..=dx {
            for j in 0..=dy {
                if rng.gen_bool(0.5) {
                    terms.push((i, j, ctx.from_index(rng.gen_range(0..ctx.size())).unwrap()));
                }
            }
        }
        terms.push((0, dy, FFElt::ONE));
        BivarPoly::from_terms(ctx, &terms)
    }

    // vanishing at x0 against a gcd of the specializations
    #[test]
    fn random_properties() {
        let ctx = FieldCtx::new(3, 1, 2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..40 {
            let (dx, dy) = (rng.gen_range(0..4), rng.gen_range(1..4));
            let a = random_bivar(&ctx, &mut rng, dx, dy);
            let (dx, dy) = (rng.gen_range(0..4), rng.gen_range(1..4));
            let b = random_bivar(&ctx, &mut rng, dx, dy);
            let r = resultant_in_y(&a, &b).unwrap();
            let bound = a.degree_y().unwrap() * b.degree_x().unwrap() + b.degree_y().unwrap() * a.degree_x().unwrap();
            assert!(r.degree().map_or(true, |d| d as u32 <= bound));
            for x in ctx.enumerate().unwrap() {
                let (pa, pb) = (a.at_x(x), b.at_x(x));
                let leads_vanish = pa.degree() != a.degree_y().map(|d| d as usize)
                    && pb.degree() != b.degree_y().map(|d| d as usize);
                let common = pa.gcd(&pb).degree().map_or(true, |d| d > 0);
                if !leads_vanish {
                    // with one leading coefficient alive the resultant
                    // specializes up to a nonzero factor
                    assert_eq!(r.eval(x).is_zero(), common, "x = {x:?}");
                }
            }
        }
    }

    #[test]
    fn common_component_gives_zero() {
        let ctx = FieldCtx::new(2, 1, 2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..10 {
            let c = random_bivar(&ctx, &mut rng, 2, 1);
            let a = c.mul(&random_bivar(&ctx, &mut rng, 1, 1)).unwrap();
            let b = c.mul(&random_bivar(&ctx, &mut rng, 2, 2)).unwrap();
            assert!(resultant_in_y(&a, &b).unwrap().is_zero());
        }
    }
}
