//! Exhaustive verification suites over small parameters.
//!
//! Every suite has a main tally. Suites that test scatteredness of concrete
//! instances also keep two side tallies: agreement of the fiber and kernel
//! testers, and agreement of the fiber tester with the point count of the
//! scatter curve.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::curve::{
    build_scatter_curve, count_affine, cyclotomic_product, hasse_weil_gap, is_ordinary, multiplicity,
    points_at_infinity, BivarPoly, PointFilter,
};
use crate::error::{Error, Result};
use crate::gf::{embed, FFElt, FieldCtx};
use crate::linpoly::{Instance, QPoly};
use crate::rankcode::min_distance;
use crate::scattered::{
    extension_instance, find_many_roots_completion, is_scattered, is_scattered_kernel, is_valid_witness,
    pair_product_image, remark32_case_match, theorem31_inequality, theorem34_verdict, ScatterVerdict,
    Theorem31Params, Theorem34Verdict,
};
use crate::text::{format_elt, format_field, format_qpoly};

pub const SUITES: &[&str] = &[
    "monomial-law",
    "family-13",
    "corollary38",
    "alpha-image",
    "infinity-counts",
    "factorization",
    "origin-multiplicity",
    "hasse-weil",
    "remark32",
    "theorem34-soundness",
    "bridge",
    "lemma21-bridge",
    "tester-consistency",
];

/// Largest field on which the scatter curve's points are counted.
pub const CURVE_COUNT_CEILING: u64 = 1 << 13;
/// Largest extension field reached by the extension scan.
pub const SCAN_CEILING: u64 = 1 << 20;

const MAX_SAMPLES: usize = 10;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub checks: u64,
    pub failures: u64,
    /// The first few failure descriptions.
    pub samples: Vec<String>,
}

impl Tally {
    pub fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures += 1;
            if self.samples.len() < MAX_SAMPLES {
                self.samples.push(what());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    fn absorb(&mut self, other: &Tally) {
        self.checks += other.checks;
        self.failures += other.failures;
        let room = MAX_SAMPLES.saturating_sub(self.samples.len());
        self.samples.extend(other.samples.iter().take(room).cloned());
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub main: Tally,
    pub bridge: Tally,
    pub consistency: Tally,
    pub notes: Vec<String>,
}

impl SuiteReport {
    fn new(suite: &str, seed: u64) -> Self {
        SuiteReport {
            suite: suite.into(),
            seed,
            main: Tally::default(),
            bridge: Tally::default(),
            consistency: Tally::default(),
            notes: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.main.passed() && self.bridge.passed() && self.consistency.passed()
    }

    /// Runs both testers and, on small fields, the curve count. Returns the
    /// fiber verdict.
    fn audit(&mut self, inst: &Instance) -> Result<ScatterVerdict> {
        let fiber = is_scattered(inst)?;
        let kernel = is_scattered_kernel(inst)?;
        self.consistency.check(fiber == kernel, || {
            format!("{}: fiber {} vs kernel {}", label(inst), show(inst.ctx(), fiber.witness), show(inst.ctx(), kernel.witness))
        });
        if let Some((x, y)) = fiber.witness {
            self.consistency.check(is_valid_witness(inst, x, y), || format!("{}: bad witness", label(inst)));
        }
        if inst.ctx().size() <= CURVE_COUNT_CEILING {
            let curve = build_scatter_curve(inst)?;
            let count = count_affine(&curve, PointFilter::RatioNotInFq)?;
            self.bridge.check((count.count == 0) == fiber.scattered, || {
                format!("{}: {} curve points, scattered = {}", label(inst), count.count, fiber.scattered)
            });
        }
        Ok(fiber)
    }
}

fn show(ctx: &FieldCtx, w: Option<(FFElt, FFElt)>) -> String {
    match w {
        Some((x, y)) => format!("({}; {})", format_elt(ctx, x), format_elt(ctx, y)),
        None => "none".into(),
    }
}

fn label(inst: &Instance) -> String {
    format!("field {} f {} t {}", format_field(inst.ctx()), format_qpoly(inst.f()), inst.t())
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn random_elt(ctx: &FieldCtx, rng: &mut ChaCha8Rng) -> FFElt {
    FFElt::from_raw(rng.gen_range(0..ctx.size()))
}

fn random_nonzero(ctx: &FieldCtx, rng: &mut ChaCha8Rng) -> FFElt {
    FFElt::from_raw(rng.gen_range(1..ctx.size()))
}

/// Runs a suite by name.
pub fn run_suite(name: &str, seed: u64) -> Result<SuiteReport> {
    match name {
        "monomial-law" => monomial_law(seed),
        "family-13" => family_13(seed),
        "corollary38" => {
            let mut r = corollary38_necessity(seed)?;
            let s = corollary38_sufficiency(seed)?;
            r.suite = name.into();
            r.main.absorb(&s.main);
            r.bridge.absorb(&s.bridge);
            r.consistency.absorb(&s.consistency);
            r.notes.extend(s.notes);
            Ok(r)
        }
        "alpha-image" => alpha_image(seed),
        "infinity-counts" => infinity_counts(seed),
        "factorization" => factorization(seed),
        "origin-multiplicity" => origin_multiplicity(seed),
        "hasse-weil" => hasse_weil(seed),
        "remark32" => remark32(seed),
        "theorem34-soundness" => theorem34_soundness(seed),
        "bridge" => mrd_bridge(seed),
        "lemma21-bridge" => {
            let parts = [monomial_law(seed)?, family_13(seed)?, corollary38_necessity(seed)?, corollary38_sufficiency(seed)?];
            Ok(side_tally(name, seed, &parts, |r| &r.bridge))
        }
        "tester-consistency" => {
            let parts = [
                monomial_law(seed)?,
                family_13(seed)?,
                corollary38_necessity(seed)?,
                corollary38_sufficiency(seed)?,
                theorem34_soundness(seed)?,
                mrd_bridge(seed)?,
            ];
            Ok(side_tally(name, seed, &parts, |r| &r.consistency))
        }
        _ => Err(Error::Parse(format!("unknown suite {name:?}; known: {}", SUITES.join(", ")))),
    }
}

/// Collects one side tally of several suites into the main tally of a new report.
pub fn side_tally(name: &str, seed: u64, parts: &[SuiteReport], pick: impl Fn(&SuiteReport) -> &Tally) -> SuiteReport {
    let mut out = SuiteReport::new(name, seed);
    for p in parts {
        out.main.absorb(pick(p));
        out.notes.push(format!("{}: {} checks", p.suite, pick(p).checks));
    }
    out
}

/// `X^{q^s}` at index 0 is scattered iff `gcd(s, n) = 1`.
pub fn monomial_law(seed: u64) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("monomial-law", seed);
    for (p, e) in [(2u64, 1u32), (3, 1), (2, 2)] {
        for n in 2..=6u32 {
            let ctx = FieldCtx::new(p, e, n)?;
            for s in 1..n {
                let inst = Instance::new(QPoly::monomial(&ctx, s as usize, FFElt::ONE), 0)?;
                let v = r.audit(&inst)?;
                let q = ctx.q();
                r.main.check(v.scattered == (gcd(s, n) == 1), || format!("q={q} n={n} s={s}: scattered = {}", v.scattered));
            }
        }
    }
    Ok(r)
}

/// `delta X^{q^s} + X^{q^{n-s}}` with `Norm(delta) != 1`. At index `s` the
/// pair is moved by the `q^s`-Frobenius to `X + delta^{q^s} X^{q^{2s}}`; the
/// index-0 form is tested as well.
pub fn family_13(seed: u64) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("family-13", seed);
    let mut count = 0u64;
    for p in [2u64, 3] {
        for n in [4u32, 5] {
            let ctx = FieldCtx::new(p, 1, n)?;
            for s in (1..n).filter(|&s| gcd(s, n) == 1) {
                for delta in ctx.enumerate()?.filter(|&d| ctx.norm(d) != FFElt::ONE) {
                    let f = QPoly::from_terms(&ctx, &[(s as usize, delta), ((n - s) as usize, FFElt::ONE)])?;
                    let g = QPoly::from_terms(
                        &ctx,
                        &[(0, FFElt::ONE), ((2 * s % n) as usize, ctx.frobenius(delta, s))],
                    )?;
                    for inst in [Instance::new(g, s)?, Instance::new(f, 0)?] {
                        let v = r.audit(&inst)?;
                        r.main.check(v.scattered, || format!("{}: not scattered, witness {}", label(&inst), show(inst.ctx(), v.witness)));
                        count += 1;
                    }
                }
            }
        }
    }
    r.notes.push(format!("{count} instances"));
    Ok(r)
}

/// For `Norm(b) = 1` some `X^{q^2} + a X^q + b X` has `q^2` roots, so
/// `b X + X^{q^2}` is not scattered at index 1.
pub fn corollary38_necessity(seed: u64) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("corollary38-necessity", seed);
    for p in [2u64, 3] {
        for n in [3u32, 4] {
            let ctx = FieldCtx::new(p, 1, n)?;
            for b in ctx.enumerate()?.filter(|&b| ctx.norm(b) == FFElt::ONE) {
                let a = find_many_roots_completion(&ctx, b)?;
                r.main.check(a.is_some(), || format!("q={p} n={n} b={}: no completion", format_elt(&ctx, b)));
                let inst = Instance::new(QPoly::from_terms(&ctx, &[(0, b), (2, FFElt::ONE)])?, 1)?;
                let v = r.audit(&inst)?;
                r.main.check(!v.scattered, || format!("{}: scattered", label(&inst)));
            }
        }
    }
    Ok(r)
}

/// For `Norm(b) != 1`, `b X + X^{q^2}` at index 1 over F_{q^{mn}} for every
/// `m` with `q^{mn} <= 2^20`.
pub fn corollary38_sufficiency(seed: u64) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("corollary38-sufficiency", seed);
    for p in [2u64, 3] {
        for n in [3u32, 4] {
            let ctx = FieldCtx::new(p, 1, n)?;
            for b in ctx.enumerate()?.filter(|&b| ctx.norm(b) != FFElt::ONE) {
                let inst = Instance::new(QPoly::from_terms(&ctx, &[(0, b), (2, FFElt::ONE)])?, 1)?;
                let mut m = 1u32;
                while (p as u128).pow(m * n) <= SCAN_CEILING as u128 {
                    let ext = extension_instance(&inst, m, SCAN_CEILING)?;
                    let v = r.audit(&ext)?;
                    r.main.check(v.scattered, || {
                        format!("q={p} n={n} b={} m={m}: not scattered, witness {}", format_elt(&ctx, b), show(ext.ctx(), v.witness))
                    });
                    m += 1;
                }
            }
        }
    }
    Ok(r)
}

/// `{u v^q - v u^q}` covers the whole field.
pub fn alpha_image(seed: u64) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("alpha-image", seed);
    for p in [2u64, 3] {
        for n in [3u32, 4] {
            let ctx = FieldCtx::new(p, 1, n)?;
            let image = pair_product_image(&ctx)?;
            r.main.check(image.len() as u64 == ctx.size(), || format!("q={p} n={n}: image has {} elements", image.len()));
        }
    }
    Ok(r)
}

/// Index-1 curves `b X + sum a_j X^{q^j} + X^{q^k}` have `q^{k-1} + 1`
/// points at infinity over a field containing F_{q^{k-1}}.
pub fn infinity_counts(seed: u64) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("infinity-counts", seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for p in [2u64, 3] {
        for k in [2u32, 3] {
            for _ in 0..20 {
                let n = k + rng.gen_range(1..=2);
                let ctx = FieldCtx::new(p, 1, n)?;
                let mut terms = vec![(0usize, random_nonzero(&ctx, &mut rng)), (k as usize, FFElt::ONE)];
                for j in 2..k {
                    terms.push((j as usize, random_elt(&ctx, &mut rng)));
                }
                let inst = Instance::new(QPoly::from_terms(&ctx, &terms)?, 1)?;
                let curve = build_scatter_curve(&inst)?;
                let ext_degree = lcm(n, k - 1);
                let ext = FieldCtx::new(p, 1, ext_degree)?;
                let lifted = curve.map(&embed(&ctx, &ext)?)?;
                let pts = points_at_infinity(&lifted)?.len() as u64;
                let want = p.pow(k - 1) + 1;
                r.main.check(pts == want, || format!("{} over degree {ext_degree}: {pts} points, expected {want}", label(&inst)));
            }
        }
    }
    Ok(r)
}

fn lcm(a: u32, b: u32) -> u32 {
    a / gcd(a, b) * b
}

/// The scatter curve of `X^{q^k}` equals `prod (Y - rho X)` over F_{q^k} minus F_q.
pub fn factorization(seed: u64) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("factorization", seed);
    for p in [2u64, 3] {
        for k in [2u32, 3] {
            let ctx = FieldCtx::new(p, 1, 2 * k)?;
            let inst = Instance::new(QPoly::monomial(&ctx, k as usize, FFElt::ONE), 0)?;
            let curve = build_scatter_curve(&inst)?;
            let product = cyclotomic_product(&ctx, k)?;
            r.main.check(curve == product, || format!("q={p} k={k}: factorization differs"));
        }
    }
    Ok(r)
}

/// `X^{q^2} + b X^{q^3}` over F_{2^n}: the origin is an ordinary point of
/// multiplicity `q^2 - q`.
pub fn origin_multiplicity(seed: u64) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("origin-multiplicity", seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (q, i, k) = (2u64, 2u32, 3u32);
    for _ in 0..20 {
        let n = rng.gen_range(k + 1..=k + 3);
        let ctx = FieldCtx::new(q, 1, n)?;
        let mut terms = vec![(i as usize, FFElt::ONE), (k as usize, random_nonzero(&ctx, &mut rng))];
        for j in i + 1..k {
            terms.push((j as usize, random_elt(&ctx, &mut rng)));
        }
        let inst = Instance::new(QPoly::from_terms(&ctx, &terms)?, 0)?;
        let curve = build_scatter_curve(&inst)?;
        let (m, cone) = multiplicity(&curve, (FFElt::ZERO, FFElt::ZERO))?;
        let want = (q.pow(i) - q) as u32;
        r.main.check(m == want, || format!("{}: multiplicity {m}", label(&inst)));
        r.main.check(is_ordinary(&cone)?, || format!("{}: repeated tangent", label(&inst)));
    }
    Ok(r)
}

/// `Y - Y^q - alpha X^{q+1}` against the Hasse-Weil bound, and the affine
/// lower bound `q^n - q(q-1) q^{n/2}`.
pub fn hasse_weil(seed: u64) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("hasse-weil", seed);
    for p in [2u64, 3] {
        for n in [3u32, 4] {
            let ctx = FieldCtx::new(p, 1, n)?;
            let q = ctx.q();
            let minus_one = ctx.neg(FFElt::ONE);
            for alpha in ctx.enumerate()?.skip(1) {
                let curve = BivarPoly::from_terms(
                    &ctx,
                    &[(0, 1, FFElt::ONE), (0, q as u32, minus_one), (q as u32 + 1, 0, ctx.neg(alpha))],
                );
                let hw = hasse_weil_gap(&curve)?;
                let tag = || format!("q={q} n={n} alpha={}", format_elt(&ctx, alpha));
                r.main.check(hw.within_bound(), || format!("{}: gap {} above {:.3}", tag(), hw.gap, hw.bound));
                // affine >= size - q(q-1) sqrt(size), squared when the right side is positive
                let size = ctx.size() as u128;
                let deficit = size.saturating_sub(hw.affine as u128);
                let c = (q * (q - 1)) as u128;
                r.main.check(deficit * deficit <= c * c * size, || format!("{}: only {} affine points", tag(), hw.affine));
            }
        }
    }
    Ok(r)
}

/// The index-0 inequality at `l = i + 1` against the case list.
pub fn remark32(seed: u64) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("remark32", seed);
    for q in [2u64, 3, 4, 5, 7, 8, 9] {
        for k in 2..=8u32 {
            for i in 1..k {
                let ineq = theorem31_inequality(Theorem31Params { q, i, k, l: i + 1 })?;
                let case = remark32_case_match(q, k, i);
                r.main.check(ineq == case, || format!("q={q} k={k} i={i}: inequality {ineq}, case list {case}"));
            }
        }
    }
    Ok(r)
}

/// Subspace polynomial `prod_{w in W} (X - w)` of the span of `gens`, as a
/// q-polynomial; `None` when the generators are dependent.
fn subspace_poly(ctx: &FieldCtx, gens: &[FFElt]) -> Option<QPoly> {
    let mut l = QPoly::identity(ctx);
    for &w in gens {
        let lw = l.evaluate(w);
        if lw.is_zero() {
            return None;
        }
        // L' = L^q - L(w)^{q-1} L
        let mut shifted = vec![FFElt::ZERO];
        shifted.extend(l.coeffs().iter().map(|&c| ctx.frobenius(c, 1)));
        let twist = QPoly::new(ctx, shifted).ok()?;
        let c = ctx.pow(lw, (ctx.q() - 1) as u128);
        l = twist.sub(&l.scale(c)).ok()?;
    }
    Some(l)
}

fn random_index0(ctx: &FieldCtx, rng: &mut ChaCha8Rng, kernel_heavy: bool) -> Option<QPoly> {
    let n = ctx.d();
    if kernel_heavy {
        let r = rng.gen_range(2..n);
        let i = rng.gen_range(1..n - r + 1);
        if i + r >= n {
            return None;
        }
        let gens: Vec<FFElt> = (0..r).map(|_| random_nonzero(ctx, rng)).collect();
        let l = subspace_poly(ctx, &gens)?;
        // L^{q^i}, scaled so that the X^{q^i} coefficient is 1
        let mut coeffs = vec![FFElt::ZERO; i as usize];
        coeffs.extend(l.coeffs().iter().map(|&c| ctx.frobenius(c, i)));
        let low = ctx.inv(coeffs[i as usize]).ok()?;
        return Some(QPoly::new(ctx, coeffs).ok()?.scale(low));
    }
    let k = rng.gen_range(2..n);
    let i = rng.gen_range(1..k);
    let mut terms = vec![(i as usize, FFElt::ONE), (k as usize, random_nonzero(ctx, rng))];
    for j in i + 1..k {
        terms.push((j as usize, random_elt(ctx, rng)));
    }
    QPoly::from_terms(ctx, &terms).ok()
}

/// Every index-0 instance the sufficient conditions mark as non-scattered is
/// non-scattered by exhaustion.
pub fn theorem34_soundness(seed: u64) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("theorem34-soundness", seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut guaranteed, mut made) = (std::collections::BTreeMap::<String, u64>::new(), 0);
    while made < 200 {
        let p = if rng.gen_bool(0.5) { 2u64 } else { 3 };
        let n = rng.gen_range(3..=8u32);
        let ctx = FieldCtx::new(p, 1, n)?;
        let heavy = rng.gen_bool(0.25);
        let Some(f) = random_index0(&ctx, &mut rng, heavy) else { continue };
        made += 1;
        let inst = Instance::new(f.clone(), 0)?;
        let v = r.audit(&inst)?;
        match theorem34_verdict(&f)? {
            Theorem34Verdict::NotScatteredGuaranteed(reason) => {
                *guaranteed.entry(format!("{reason:?}")).or_default() += 1;
                r.main.check(!v.scattered, || format!("{}: {reason:?} but scattered", label(&inst)));
            }
            Theorem34Verdict::Inconclusive => *guaranteed.entry("Inconclusive".into()).or_default() += 1,
        }
    }
    r.notes.extend(guaranteed.iter().map(|(k, v)| format!("{k}: {v}")));
    Ok(r)
}

/// Scattered iff the code `{a x^{q^t} + b f}` has minimum distance `n - 1`.
pub fn mrd_bridge(seed: u64) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("bridge", seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut made = 0;
    let mut scattered = 0;
    while made < 200 {
        let n = rng.gen_range(3..=4u32);
        let ctx = FieldCtx::new(2, 1, n)?;
        let t = rng.gen_range(0..n);
        let coeffs: Vec<FFElt> =
            (0..n).map(|j| if j == t { FFElt::ZERO } else if rng.gen_bool(0.5) { random_elt(&ctx, &mut rng) } else { FFElt::ZERO }).collect();
        let f = QPoly::new(&ctx, coeffs)?;
        if f.is_zero() {
            continue;
        }
        made += 1;
        let inst = Instance::new(f, t)?;
        let v = r.audit(&inst)?;
        scattered += v.scattered as u64;
        let d = min_distance(&inst)?;
        r.main.check(v.scattered == (d.min_distance + 1 == n), || {
            format!("{}: scattered = {}, d = {}", label(&inst), v.scattered, d.min_distance)
        });
    }
    r.notes.push(format!("{scattered} of 200 scattered"));
    Ok(r)
}
