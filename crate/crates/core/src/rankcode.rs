//! The rank-metric code `{a x^{q^t} + b f(x) : a, b in F_{q^n}}`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::Result;
use crate::gf::FFElt;
use crate::linpoly::{Instance, QPoly};
use crate::scattered::is_scattered;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MrdReport {
    pub n: u32,
    pub q: u64,
    /// `q^{2n}`, as a decimal string.
    pub code_size: String,
    #[serde(rename = "d")]
    pub min_distance: u32,
    #[serde(rename = "mrd")]
    pub is_mrd: bool,
    /// Kernel dimension -> number of nonzero codewords with that kernel.
    pub kernel_histogram: BTreeMap<u32, u64>,
}

/// The codeword `a X^{q^t} + b f`.
pub fn codeword(inst: &Instance, a: FFElt, b: FFElt) -> QPoly {
    let ctx = inst.ctx();
    let lead = QPoly::monomial(ctx, inst.t() as usize, a);
    lead.add(&inst.f().scale(b)).expect("same context")
}

/// Minimum rank distance. The code is F_{q^n}-linear, so one codeword per
/// scaling class suffices: `(1, b)` for every `b` and `(0, 1)`.
pub fn min_distance(inst: &Instance) -> Result<MrdReport> {
    let ctx = inst.ctx();
    ctx.require_enumerable()?;
    let n = ctx.d();
    let class_size = ctx.size() - 1;
    let mut hist = BTreeMap::new();
    let mut bump = |kd: u32| *hist.entry(kd).or_insert(0u64) += class_size;
    for b in ctx.enumerate()? {
        bump(codeword(inst, FFElt::ONE, b).kernel_dim());
    }
    bump(inst.f().kernel_dim());
    let max_kernel = *hist.keys().max().expect("nonempty");
    let d = n - max_kernel;
    Ok(MrdReport {
        n,
        q: ctx.q(),
        code_size: (ctx.q() as u128).checked_pow(2 * n).map_or_else(
            || format!("{}^{}", ctx.q(), 2 * n),
            |s| s.to_string(),
        ),
        min_distance: d,
        is_mrd: d + 1 == n,
        kernel_histogram: hist,
    })
}

/// Whether scatteredness and minimum distance `n - 1` agree on this instance.
pub fn scattered_mrd_bridge(inst: &Instance) -> Result<bool> {
    let scattered = is_scattered(inst)?.scattered;
    let report = min_distance(inst)?;
    Ok(scattered == report.is_mrd)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FieldCtx;

    fn mono(ctx: &FieldCtx, s: usize) -> Instance {
        Instance::new(QPoly::monomial(ctx, s, FFElt::ONE), 0).unwrap()
    }

    #[test]
    fn distance_examples() {
        let f8 = FieldCtx::new(2, 1, 3).unwrap();
        let r = min_distance(&mono(&f8, 1)).unwrap();
        assert_eq!((r.min_distance, r.is_mrd), (2, true));
        assert_eq!(r.kernel_histogram.values().sum::<u64>(), 63);
        let f16 = FieldCtx::new(2, 1, 4).unwrap();
        let r = min_distance(&mono(&f16, 2)).unwrap();
        assert_eq!((r.min_distance, r.is_mrd), (2, false));
        for (p, d) in [(2, 2), (2, 3), (2, 4), (2, 5), (3, 2), (3, 3), (3, 4), (3, 5)] {
            let ctx = FieldCtx::new(p, 1, d).unwrap();
            let r = min_distance(&mono(&ctx, 1)).unwrap();
            assert_eq!(r.min_distance, d - 1);
        }
    }

    // the full set of nonzero pairs against the projective representatives
    #[test]
    fn representatives_match_all_pairs() {
        let f8 = FieldCtx::new(2, 1, 3).unwrap();
        for s in 1..3 {
            let inst = mono(&f8, s);
            let mut hist = BTreeMap::new();
            for a in f8.enumerate().unwrap() {
                for b in f8.enumerate().unwrap() {
                    if a.is_zero() && b.is_zero() {
                        continue;
                    }
                    *hist.entry(codeword(&inst, a, b).kernel_dim()).or_insert(0u64) += 1;
                }
            }
            assert_eq!(min_distance(&inst).unwrap().kernel_histogram, hist);
        }
    }

    #[test]
    fn singleton_identity() {
        let f16 = FieldCtx::new(2, 1, 4).unwrap();
        for s in 1..4 {
            let r = min_distance(&mono(&f16, s)).unwrap();
            let n = r.n as u64;
            let bound = 2u64.pow((n * (n - r.min_distance as u64 + 1)) as u32);
            let size = 2u64.pow(2 * n as u32);
            assert!(size <= bound);
            assert_eq!(size == bound, r.is_mrd);
            assert!(scattered_mrd_bridge(&mono(&f16, s)).unwrap());
        }
    }
}
