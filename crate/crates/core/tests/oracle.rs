//! Checks the library against a separate bit-polynomial model of F_{2^n}.

use qscatter::rankcode::min_distance;
use qscatter::scattered::{is_scattered, is_scattered_kernel};
use qscatter::{FFElt, FieldCtx, Instance, QPoly};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Gf2n {
    n: u32,
    modulus: u32,
}

impl Gf2n {
    fn mul(&self, mut a: u32, mut b: u32) -> u32 {
        let mut r = 0;
        while b != 0 {
            if b & 1 == 1 {
                r ^= a;
            }
            b >>= 1;
            a <<= 1;
            if a >> self.n & 1 == 1 {
                a ^= self.modulus;
            }
        }
        r
    }

    fn sq(&self, a: u32, times: u32) -> u32 {
        (0..times).fold(a, |x, _| self.mul(x, x))
    }

    fn inv(&self, a: u32) -> u32 {
        // a^(2^n - 2)
        let mut r = 1;
        for _ in 1..self.n {
            r = self.mul(self.sq(r, 1), a);
        }
        self.sq(r, 1)
    }

    fn eval(&self, coeffs: &[u32], x: u32) -> u32 {
        coeffs.iter().enumerate().fold(0, |acc, (j, &c)| acc ^ self.mul(c, self.sq(x, j as u32)))
    }
}

fn bits(ctx: &FieldCtx, x: FFElt) -> u32 {
    ctx.coeffs(x).iter().enumerate().map(|(i, &c)| c << i).sum()
}

fn model(ctx: &FieldCtx) -> Gf2n {
    let modulus = ctx.modulus().iter().enumerate().map(|(i, &c)| c << i).sum();
    Gf2n { n: ctx.d(), modulus }
}

/// Over F_2 a fiber of `f(x)/x^{2^t}` has dimension 2 exactly when two
/// distinct nonzero points share a ratio.
fn scattered_oracle(m: &Gf2n, coeffs: &[u32], t: u32) -> bool {
    let mut seen = std::collections::HashSet::new();
    (1..1u32 << m.n).all(|x| seen.insert(m.mul(m.eval(coeffs, x), m.inv(m.sq(x, t)))))
}

/// Smallest rank of a nonzero `a x^{2^t} + b f(x)`, by Gaussian elimination
/// on the images of the basis.
fn min_rank_oracle(m: &Gf2n, coeffs: &[u32], t: u32) -> u32 {
    let mut best = m.n;
    for a in 0..1u32 << m.n {
        for b in 0..1u32 << m.n {
            if a == 0 && b == 0 {
                continue;
            }
            let mut rows: Vec<u32> = (0..m.n)
                .map(|i| m.mul(a, m.sq(1 << i, t)) ^ m.mul(b, m.eval(coeffs, 1 << i)))
                .collect();
            let mut rank = 0;
            for bit in 0..m.n {
                if let Some(p) = (rank..rows.len()).find(|&r| rows[r] >> bit & 1 == 1) {
                    rows.swap(rank, p);
                    let pivot = rows[rank];
                    for r in rows.iter_mut().skip(rank + 1) {
                        if *r >> bit & 1 == 1 {
                            *r ^= pivot;
                        }
                    }
                    rank += 1;
                }
            }
            best = best.min(rank as u32);
        }
    }
    best
}

#[test]
fn scatteredness_matches_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in 3..=6u32 {
        let ctx = FieldCtx::new(2, 1, n).unwrap();
        let m = model(&ctx);
        let mut both = [0; 2];
        for _ in 0..40 {
            let t = rng.gen_range(0..n);
            let mut terms: Vec<FFElt> = (0..n).map(|_| ctx.from_index(rng.gen_range(0..ctx.size())).unwrap()).collect();
            terms[t as usize] = FFElt::ZERO;
            let f = QPoly::new(&ctx, terms).unwrap();
            let Ok(inst) = Instance::new(f.clone(), t) else { continue };
            let coeffs: Vec<u32> = f.coeffs().iter().map(|&c| bits(&ctx, c)).collect();
            let want = scattered_oracle(&m, &coeffs, t);
            assert_eq!(is_scattered(&inst).unwrap().scattered, want, "n={n} t={t} f={coeffs:?}");
            assert_eq!(is_scattered_kernel(&inst).unwrap().scattered, want);
            both[want as usize] += 1;
        }
        assert!(both[0] + both[1] >= 35, "n={n}: {both:?}");
    }
}

#[test]
fn binomials_match_oracle() {
    for n in 3..=5u32 {
        let ctx = FieldCtx::new(2, 1, n).unwrap();
        let m = model(&ctx);
        let mut both = [0; 2];
        for t in 0..n {
            for s in (0..n).filter(|&s| s != t) {
                for r in (s + 1..n).filter(|&r| r != t) {
                    for delta in ctx.enumerate().unwrap() {
                        let f = QPoly::from_terms(&ctx, &[(s as usize, FFElt::ONE), (r as usize, delta)]).unwrap();
                        let inst = Instance::new(f.clone(), t).unwrap();
                        let mut coeffs = vec![0; n as usize];
                        coeffs[s as usize] = 1;
                        coeffs[r as usize] = bits(&ctx, delta);
                        let want = scattered_oracle(&m, &coeffs, t);
                        assert_eq!(is_scattered(&inst).unwrap().scattered, want, "n={n} t={t} f={coeffs:?}");
                        both[want as usize] += 1;
                    }
                }
            }
        }
        assert!(both[0] > 0 && both[1] > 0, "n={n}: {both:?}");
    }
}

#[test]
fn min_distance_matches_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for n in 3..=4u32 {
        let ctx = FieldCtx::new(2, 1, n).unwrap();
        let m = model(&ctx);
        for _ in 0..12 {
            let t = rng.gen_range(0..n);
            let mut terms: Vec<FFElt> = (0..n).map(|_| ctx.from_index(rng.gen_range(0..ctx.size())).unwrap()).collect();
            terms[t as usize] = FFElt::ZERO;
            let f = QPoly::new(&ctx, terms).unwrap();
            let Ok(inst) = Instance::new(f.clone(), t) else { continue };
            let coeffs: Vec<u32> = f.coeffs().iter().map(|&c| bits(&ctx, c)).collect();
            let r = min_distance(&inst).unwrap();
            assert_eq!(r.min_distance, min_rank_oracle(&m, &coeffs, t), "n={n} t={t} f={coeffs:?}");
        }
    }
}

#[test]
fn model_agrees_on_arithmetic() {
    let ctx = FieldCtx::new(2, 1, 5).unwrap();
    let m = model(&ctx);
    for x in ctx.enumerate().unwrap() {
        for y in ctx.enumerate().unwrap() {
            assert_eq!(bits(&ctx, ctx.mul(x, y)), m.mul(bits(&ctx, x), bits(&ctx, y)));
        }
    }
}
