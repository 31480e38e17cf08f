//! Linear algebra over the prime field and over F_q.
//!
//! Field elements double as F_p-vectors through their packed coordinates, so
//! the rank of a list of elements over F_p needs no conversion. Three kernels
//! are used: an XOR basis in characteristic 2, packed 4-bit lanes for small
//! odd primes, and plain row reduction otherwise.

use crate::gf::{FFElt, FieldCtx};

/// Rank over F_p of the given elements viewed as coordinate vectors.
pub fn fp_rank(ctx: &FieldCtx, elems: &[FFElt]) -> usize {
    let n = ctx.degree() as usize;
    let p = ctx.p();
    if p == 2 {
        xor_rank(elems, n)
    } else if p <= 7 && n <= 16 {
        SwarBasis::new(p, n).rank_of(ctx, elems)
    } else {
        generic_rank(ctx, elems)
    }
}

/// F_q-rank of the span of `elems`: the F_q-span of a set has F_p-dimension
/// `e` times its F_q-dimension, and is the F_p-span of the products with
/// `1, w, ..., w^{e-1}`.
pub fn fq_rank(ctx: &FieldCtx, elems: &[FFElt]) -> usize {
    if ctx.e() == 1 {
        return fp_rank(ctx, elems);
    }
    let w = ctx.subfield_gen().unwrap_or_else(|| ctx.gamma());
    let mut all = Vec::with_capacity(elems.len() * ctx.e() as usize);
    for &x in elems {
        let mut y = x;
        for _ in 0..ctx.e() {
            all.push(y);
            y = ctx.mul(y, w);
        }
    }
    fp_rank(ctx, &all) / ctx.e() as usize
}

fn xor_rank(elems: &[FFElt], n: usize) -> usize {
    // basis[b] holds a vector whose highest set bit is b
    let mut basis = [0u64; 64];
    let mut rank = 0;
    for x in elems {
        let mut v = x.index();
        while v != 0 {
            let top = 63 - v.leading_zeros() as usize;
            if basis[top] == 0 {
                basis[top] = v;
                rank += 1;
                break;
            }
            v ^= basis[top];
        }
        if rank == n {
            break;
        }
    }
    rank
}

const ONES: u64 = 0x1111_1111_1111_1111;

struct SwarBasis {
    p: u32,
    n: usize,
    // (pivot lane, multiples 0·v, 1·v, ..., (p-1)·v)
    rows: Vec<(u32, Vec<u64>)>,
}

impl SwarBasis {
    fn new(p: u32, n: usize) -> Self {
        SwarBasis { p, n, rows: Vec::with_capacity(n) }
    }

    #[inline]
    fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        let ge = ((s + (8 - self.p as u64) * ONES) >> 3) & ONES;
        s - self.p as u64 * ge
    }

    fn pack(&self, mut idx: u64) -> u64 {
        let p = self.p as u64;
        let mut out = 0u64;
        let mut shift = 0;
        while idx > 0 {
            out |= (idx % p) << shift;
            idx /= p;
            shift += 4;
        }
        out
    }

    fn insert(&mut self, mut w: u64) -> bool {
        for (piv, mults) in &self.rows {
            let c = ((w >> (4 * piv)) & 0xF) as usize;
            if c != 0 {
                w = self.add(w, mults[self.p as usize - c]);
            }
        }
        if w == 0 {
            return false;
        }
        let piv = w.trailing_zeros() / 4;
        let c = ((w >> (4 * piv)) & 0xF) as u32;
        // scale so the pivot lane holds 1: c^{-1} = c^{p-2}
        let inv = (0..self.p - 2).fold(1u32, |acc, _| acc * c % self.p);
        let mut v = 0u64;
        for _ in 0..inv {
            v = self.add(v, w);
        }
        let mut mults = Vec::with_capacity(self.p as usize);
        let mut acc = 0u64;
        for _ in 0..self.p {
            mults.push(acc);
            acc = self.add(acc, v);
        }
        self.rows.push((piv, mults));
        true
    }

    fn rank_of(mut self, _ctx: &FieldCtx, elems: &[FFElt]) -> usize {
        for x in elems {
            let w = self.pack(x.index());
            self.insert(w);
            if self.rows.len() == self.n {
                break;
            }
        }
        self.rows.len()
    }
}

fn generic_rank(ctx: &FieldCtx, elems: &[FFElt]) -> usize {
    let p = ctx.p() as u64;
    let n = ctx.degree() as usize;
    let mut rows: Vec<(usize, Vec<u64>)> = Vec::new();
    for &x in elems {
        let mut w: Vec<u64> = ctx.coeffs(x).into_iter().map(u64::from).collect();
        for (piv, v) in &rows {
            let c = w[*piv];
            if c != 0 {
                for (a, &b) in w.iter_mut().zip(v) {
                    *a = (*a + (p - c) * b) % p;
                }
            }
        }
        if let Some(piv) = w.iter().position(|&c| c != 0) {
            let inv = pow_mod(w[piv], p - 2, p);
            w.iter_mut().for_each(|a| *a = *a * inv % p);
            rows.push((piv, w));
            if rows.len() == n {
                break;
            }
        }
    }
    rows.len()
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

/// Basis of `{a in F_p^k : sum a_i cols_i = 0}`.
pub fn fp_nullspace(ctx: &FieldCtx, cols: &[FFElt]) -> Vec<Vec<u32>> {
    let p = ctx.p() as u64;
    let n = ctx.degree() as usize;
    let k = cols.len();
    let digits: Vec<Vec<u32>> = cols.iter().map(|&c| ctx.coeffs(c)).collect();
    // n x k matrix, reduced to row echelon form
    let mut m: Vec<Vec<u64>> =
        (0..n).map(|r| (0..k).map(|c| digits[c][r] as u64).collect()).collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..k {
        let Some(pr) = (row..n).find(|&r| m[r][col] != 0) else { continue };
        m.swap(row, pr);
        let inv = pow_mod(m[row][col], p - 2, p);
        m[row].iter_mut().for_each(|a| *a = *a * inv % p);
        for r in 0..n {
            let f = m[r][col];
            if r != row && f != 0 {
                for c in 0..k {
                    m[r][c] = (m[r][c] + (p - f) * m[row][c]) % p;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == n {
            break;
        }
    }
    let free: Vec<usize> = (0..k).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![0u32; k];
            v[fc] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = ((p - m[r][fc]) % p) as u32;
            }
            v
        })
        .collect()
}

/// A dense matrix over the subfield F_q of a context.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FqMatrix {
    rows: usize,
    cols: usize,
    data: Vec<FFElt>,
}

impl FqMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        FqMatrix { rows, cols, data: vec![FFElt::ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, FFElt::ONE);
        }
        m
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(columns: &[Vec<FFElt>]) -> Self {
        let cols = columns.len();
        let rows = columns.first().map_or(0, Vec::len);
        let mut m = Self::zero(rows, cols);
        for (c, col) in columns.iter().enumerate() {
            for (r, &x) in col.iter().enumerate() {
                m.set(r, c, x);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> FFElt {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: FFElt) {
        self.data[r * self.cols + c] = x;
    }

    pub fn column(&self, c: usize) -> Vec<FFElt> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn mul(&self, ctx: &FieldCtx, other: &FqMatrix) -> FqMatrix {
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        let mut out = Self::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let v = (0..self.cols).fold(FFElt::ZERO, |acc, k| {
                    ctx.add(acc, ctx.mul(self.get(r, k), other.get(k, c)))
                });
                out.set(r, c, v);
            }
        }
        out
    }

    pub fn mul_vec(&self, ctx: &FieldCtx, v: &[FFElt]) -> Vec<FFElt> {
        (0..self.rows)
            .map(|r| {
                (0..self.cols)
                    .fold(FFElt::ZERO, |acc, c| ctx.add(acc, ctx.mul(self.get(r, c), v[c])))
            })
            .collect()
    }

    /// Rank by Gaussian elimination in the context's arithmetic.
    pub fn rank(&self, ctx: &FieldCtx) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        for col in 0..m.cols {
            let Some(pr) = (rank..m.rows).find(|&r| !m.get(r, col).is_zero()) else { continue };
            if pr != rank {
                for c in 0..m.cols {
                    let t = m.get(pr, c);
                    m.set(pr, c, m.get(rank, c));
                    m.set(rank, c, t);
                }
            }
            let inv = ctx.inv(m.get(rank, col)).expect("pivot is nonzero");
            for r in rank + 1..m.rows {
                let f = ctx.mul(m.get(r, col), inv);
                if !f.is_zero() {
                    for c in col..m.cols {
                        let v = ctx.sub(m.get(r, c), ctx.mul(f, m.get(rank, c)));
                        m.set(r, c, v);
                    }
                }
            }
            rank += 1;
            if rank == m.rows {
                break;
            }
        }
        rank
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn kernels_agree_with_generic() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for (p, e, d) in [(2, 1, 10), (3, 1, 8), (5, 1, 4), (7, 1, 3), (3, 2, 3), (2, 3, 4)] {
            let ctx = FieldCtx::new(p, e, d).unwrap();
            for _ in 0..200 {
                let k = rng.gen_range(0..=ctx.degree() as usize + 2);
                let mut elems: Vec<FFElt> =
                    (0..k).map(|_| FFElt::from_raw(rng.gen_range(0..ctx.size()))).collect();
                // force dependencies now and then
                if k >= 2 && rng.gen_bool(0.5) {
                    let s = ctx.add(elems[0], ctx.mul(ctx.prime(2), elems[1]));
                    elems.push(s);
                }
                assert_eq!(fp_rank(&ctx, &elems), generic_rank(&ctx, &elems));
                let null = fp_nullspace(&ctx, &elems);
                assert_eq!(null.len() + generic_rank(&ctx, &elems), elems.len());
                for v in null {
                    let s = v.iter().zip(&elems).fold(FFElt::ZERO, |acc, (&a, &x)| {
                        ctx.add(acc, ctx.mul(ctx.prime(a as u64), x))
                    });
                    assert!(s.is_zero());
                }
            }
        }
    }

    #[test]
    fn fq_rank_against_matrix_rank() {
        let ctx = FieldCtx::new(2, 2, 3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..100 {
            let elems: Vec<FFElt> =
                (0..3).map(|_| FFElt::from_raw(rng.gen_range(0..ctx.size()))).collect();
            let cols: Vec<Vec<FFElt>> = elems.iter().map(|&x| ctx.fq_coords(x)).collect();
            assert_eq!(fq_rank(&ctx, &elems), FqMatrix::from_columns(&cols).rank(&ctx));
        }
    }

    #[test]
    fn identity_rank() {
        let ctx = FieldCtx::new(3, 1, 2).unwrap();
        assert_eq!(FqMatrix::identity(4).rank(&ctx), 4);
        assert_eq!(FqMatrix::zero(3, 3).rank(&ctx), 0);
    }
}
