use super::{FFElt, FieldCtx};
use crate::error::{Error, Result};

/// Ring embedding of a subfield context into a larger one, determined by the
/// image of the root of the smaller field's modulus.
#[derive(Clone, Debug)]
pub struct Embedding {
    sub: FieldCtx,
    sup: FieldCtx,
    root_powers: Vec<FFElt>,
}

/// Embeds `sub` into `sup`, sending the root of `sub`'s modulus to its least
/// root in `sup`. Both contexts must share `p` and `e`, and the degree of
/// `sub` must divide that of `sup`.
pub fn embed(sub: &FieldCtx, sup: &FieldCtx) -> Result<Embedding> {
    if sub.p() != sup.p() || sub.e() != sup.e() {
        return Err(Error::NoEmbedding(format!("{sub:?} and {sup:?} have different base fields")));
    }
    if sup.degree() % sub.degree() != 0 {
        return Err(Error::NoEmbedding(format!(
            "degree {} does not divide degree {}",
            sub.degree(),
            sup.degree()
        )));
    }
    let root = if sub == sup {
        sup.gamma()
    } else {
        let candidates = sup.subfield_of_degree(sub.degree())?;
        let modulus = sub.modulus();
        *candidates
            .iter()
            .find(|&&x| {
                modulus
                    .iter()
                    .rev()
                    .fold(FFElt::ZERO, |acc, &c| sup.add(sup.mul(acc, x), sup.prime(c as u64)))
                    .is_zero()
            })
            .ok_or_else(|| Error::NoEmbedding("modulus has no root".into()))?
    };
    let mut root_powers = Vec::with_capacity(sub.degree() as usize);
    let mut x = FFElt::ONE;
    for _ in 0..sub.degree() {
        root_powers.push(x);
        x = sup.mul(x, root);
    }
    Ok(Embedding { sub: sub.clone(), sup: sup.clone(), root_powers })
}

impl Embedding {
    pub fn sub(&self) -> &FieldCtx {
        &self.sub
    }

    pub fn sup(&self) -> &FieldCtx {
        &self.sup
    }

    pub fn apply(&self, x: FFElt) -> FFElt {
        self.sub.coeffs(x).iter().zip(&self.root_powers).fold(FFElt::ZERO, |acc, (&c, &r)| {
            if c == 0 {
                acc
            } else {
                self.sup.add(acc, self.sup.mul(self.sup.prime(c as u64), r))
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64, e: u32, d: u32) -> FieldCtx {
        FieldCtx::new(p, e, d).unwrap()
    }

    #[test]
    fn unital_and_identity() {
        let sub = f(2, 1, 1);
        let sup = f(2, 1, 5);
        let emb = embed(&sub, &sup).unwrap();
        assert_eq!(emb.apply(FFElt::ONE), FFElt::ONE);
        let id = embed(&sup, &sup).unwrap();
        for x in sup.enumerate().unwrap() {
            assert_eq!(id.apply(x), x);
        }
    }

    #[test]
    fn f4_into_f16() {
        let sub = f(2, 2, 1);
        let sup = f(2, 2, 2);
        let emb = embed(&sub, &sup).unwrap();
        let g = emb.apply(sub.gamma());
        let val = sup.add(sup.add(sup.mul(g, g), g), FFElt::ONE);
        assert!(val.is_zero());
        // exhaustive root oracle: the image is the least root of X^2+X+1
        let least = sup
            .enumerate()
            .unwrap()
            .find(|&x| sup.add(sup.add(sup.mul(x, x), x), FFElt::ONE).is_zero())
            .unwrap();
        assert_eq!(g, least);
    }

    #[test]
    fn morphism_and_image() {
        for (p, e, d, m) in [(2, 1, 3, 2), (3, 1, 2, 2), (2, 2, 2, 2), (2, 1, 2, 3)] {
            let sub = f(p, e, d);
            let sup = f(p, e, d * m);
            let emb = embed(&sub, &sup).unwrap();
            let els: Vec<FFElt> = sub.enumerate().unwrap().collect();
            let mut images: Vec<FFElt> = els.iter().map(|&x| emb.apply(x)).collect();
            for &x in &els {
                for &y in &els {
                    assert_eq!(emb.apply(sub.add(x, y)), sup.add(emb.apply(x), emb.apply(y)));
                    assert_eq!(emb.apply(sub.mul(x, y)), sup.mul(emb.apply(x), emb.apply(y)));
                }
                assert_eq!(emb.apply(sub.frobenius(x, 1)), sup.frobenius(emb.apply(x), 1));
            }
            images.sort();
            images.dedup();
            assert_eq!(images.len(), els.len());
            let fixed: Vec<FFElt> =
                sup.enumerate().unwrap().filter(|&x| sup.frobenius(x, d) == x).collect();
            assert_eq!(images, fixed);
        }
    }

    #[test]
    fn rejects_bad_degrees() {
        assert!(embed(&f(2, 1, 3), &f(2, 1, 4)).is_err());
        assert!(embed(&f(2, 1, 2), &f(3, 1, 2)).is_err());
    }
}
