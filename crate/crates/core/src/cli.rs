//! Command-line surface. Exit codes: 0 success or scattered, 2 not scattered
//! or a failed check, 1 for errors and bad usage.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::curve::{
    branch_series, build_scatter_curve, count_affine, geometric_transform, hasse_weil_gap, is_ordinary,
    multiplicity, points_at_infinity, BivarPoly, PointFilter,
};
use crate::error::{Error, Result};
use crate::gf::{embed, FieldCtx, DEFAULT_CEILING};
use crate::linpoly::Instance;
use crate::rankcode::min_distance;
use crate::report::{self, Format, Report};
use crate::scattered::{is_scattered, linear_set_report, scan_extensions};
use crate::text::{format_bivar, format_elt, format_field, format_qpoly, parse_bivar, parse_field, parse_point, parse_qpoly};
use crate::verify::{run_suite, SUITES};

pub const EXIT_OK: u8 = 0;
pub const EXIT_ERROR: u8 = 1;
pub const EXIT_NEGATIVE: u8 = 2;

#[derive(Parser, Debug)]
#[command(name = "qscatter", version, about = "Scattered q-polynomials, MRD codes and their curves over small finite fields")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutFormat::Json)]
    pub format: OutFormat,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Seed for randomized suites; recorded in every report.
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    /// Largest field enumerated exhaustively.
    #[arg(long, global = true, default_value_t = DEFAULT_CEILING)]
    pub ceiling: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutFormat {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Predicate {
    All,
    RatioNotInFq,
}

#[derive(Args, Debug, Clone)]
pub struct FieldArg {
    /// `p^e^d`, or `p:c0,c1,...` / `p^e:c0,c1,...` for an explicit modulus.
    #[arg(long)]
    pub field: String,
}

#[derive(Args, Debug, Clone)]
pub struct InstanceArgs {
    #[command(flatten)]
    pub field: FieldArg,
    /// Coefficients of `X, X^q, X^{q^2}, ...` separated by `;`, each as F_p coordinates `c0,c1,...`.
    #[arg(long = "f", allow_hyphen_values = true)]
    pub f: String,
    /// Index `t`.
    #[arg(long, default_value_t = 0)]
    pub t: u32,
}

#[derive(Args, Debug, Clone)]
pub struct CurveArgs {
    #[command(flatten)]
    pub field: FieldArg,
    /// Terms `i,j:elt` separated by `;`.
    #[arg(long, conflicts_with_all = ["f", "t"])]
    pub curve: Option<String>,
    /// Build the scatter curve of this q-polynomial instead.
    #[arg(long = "f")]
    pub f: Option<String>,
    #[arg(long)]
    pub t: Option<u32>,
    /// Work over the degree-`ext` extension of the field.
    #[arg(long, default_value_t = 1)]
    pub ext: u32,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Field parameters, modulus and distinguished elements.
    FieldInfo(FieldArg),
    /// Scatteredness of `f` at index `t`, with the linear-set weights.
    ScatterTest(InstanceArgs),
    /// Weight spectrum of the linear set of `{(x^{q^t}, f(x))}`.
    LinearSet(InstanceArgs),
    /// Scatteredness over the extensions of degree 1..=M.
    Scan {
        #[command(flatten)]
        inst: InstanceArgs,
        #[arg(long)]
        m_max: u32,
    },
    /// Minimum distance of `{a x^{q^t} + b f(x)}`.
    MrdCheck(InstanceArgs),
    /// The scatter curve of an instance.
    CurveBuild(InstanceArgs),
    /// Affine point count, with the Hasse-Weil comparison for `all`.
    CurvePoints {
        #[command(flatten)]
        curve: CurveArgs,
        #[arg(long, value_enum, default_value_t = Predicate::All)]
        predicate: Predicate,
    },
    /// Points on the line at infinity.
    CurveInfinity(CurveArgs),
    /// Multiplicity and tangent cone at a point `x;y`.
    CurveMultiplicity {
        #[command(flatten)]
        curve: CurveArgs,
        #[arg(long)]
        point: String,
    },
    /// `F(X, XY)/X^r` at the origin.
    CurveTransform(CurveArgs),
    /// Branch `Y = c_1 X + ... + c_K X^K` at the origin, or at `--point`.
    CurveBranch {
        #[command(flatten)]
        curve: CurveArgs,
        #[arg(long, default_value_t = 8)]
        terms: usize,
        #[arg(long)]
        point: Option<String>,
    },
    /// Runs a verification suite.
    Verify {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(SUITES))]
        suite: String,
    },
}

/// Parses arguments and runs the command, printing the report. Returns the exit code.
pub fn main_with_args<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_ERROR,
            };
        }
    };
    let format = match cli.format {
        OutFormat::Json => Format::Json,
        OutFormat::Csv => Format::Csv,
    };
    let result = execute(&cli).and_then(|(report, code)| Ok((report.render(format)?, code)));
    match result {
        Ok((text, code)) => {
            let written = match &cli.out {
                Some(path) => std::fs::write(path, text).map_err(|e| e.to_string()),
                None => {
                    print!("{text}");
                    Ok(())
                }
            };
            match written {
                Ok(()) => code,
                Err(e) => {
                    eprintln!("error: {e}");
                    EXIT_ERROR
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_ERROR
        }
    }
}

fn field(arg: &FieldArg, ceiling: u64) -> Result<FieldCtx> {
    if ceiling == 0 {
        return Err(Error::Precondition("ceiling must be positive".into()));
    }
    Ok(parse_field(&arg.field)?.with_ceiling(ceiling))
}

fn instance(args: &InstanceArgs, ceiling: u64) -> Result<Instance> {
    let ctx = field(&args.field, ceiling)?;
    Instance::new(parse_qpoly(&ctx, &args.f)?, args.t)
}

fn header(cli: &Cli, ctx: &FieldCtx) -> serde_json::Map<String, Value> {
    let mut m = serde_json::Map::new();
    m.insert("seed".into(), json!(cli.seed));
    m.insert("field".into(), json!(format_field(ctx)));
    m
}

fn instance_header(cli: &Cli, inst: &Instance) -> serde_json::Map<String, Value> {
    let mut m = header(cli, inst.ctx());
    m.insert("f".into(), json!(format_qpoly(inst.f())));
    m.insert("t".into(), json!(inst.t()));
    m
}

/// The curve named by `--curve` or built from `--f`/`--t`, lifted to the
/// requested extension.
fn curve(args: &CurveArgs, ceiling: u64) -> Result<BivarPoly> {
    let ctx = field(&args.field, ceiling)?;
    let base = match (&args.curve, &args.f) {
        (Some(c), None) => parse_bivar(&ctx, c)?,
        (None, Some(f)) => build_scatter_curve(&Instance::new(parse_qpoly(&ctx, f)?, args.t.unwrap_or(0))?)?,
        _ => return Err(Error::Parse("give exactly one of --curve and --f".into())),
    };
    if args.ext == 0 {
        return Err(Error::Precondition("--ext must be positive".into()));
    }
    if args.ext == 1 {
        return Ok(base);
    }
    let d = ctx.d().checked_mul(args.ext).ok_or(Error::Overflow("extension degree"))?;
    let sup = FieldCtx::new(ctx.p() as u64, ctx.e(), d)?.with_ceiling(ceiling);
    base.map(&embed(&ctx, &sup)?)
}

fn curve_header(cli: &Cli, f: &BivarPoly) -> serde_json::Map<String, Value> {
    let mut m = header(cli, f.ctx());
    m.insert("curve".into(), json!(format_bivar(f)));
    m.insert("degree".into(), json!(f.degree()));
    m
}

fn code(scattered: bool) -> u8 {
    if scattered {
        EXIT_OK
    } else {
        EXIT_NEGATIVE
    }
}

pub fn execute(cli: &Cli) -> Result<(Report, u8)> {
    let ceiling = cli.ceiling;
    match &cli.command {
        Command::FieldInfo(arg) => {
            let ctx = field(arg, ceiling)?;
            let mut m = header(cli, &ctx);
            let e = |x| format_elt(&ctx, x);
            m.insert("p".into(), json!(ctx.p()));
            m.insert("e".into(), json!(ctx.e()));
            m.insert("d".into(), json!(ctx.d()));
            m.insert("q".into(), json!(ctx.q()));
            m.insert("size".into(), json!(ctx.size()));
            m.insert("modulus".into(), json!(ctx.modulus()));
            m.insert("gamma".into(), json!(e(ctx.gamma())));
            m.insert("primitive".into(), json!(e(ctx.primitive())));
            m.insert("subfield_gen".into(), json!(ctx.subfield_gen().map(e)));
            let modulus = ctx.modulus().iter().map(u32::to_string).collect::<Vec<_>>().join(" ");
            let report = Report::new(Value::Object(m), vec!["p", "e", "d", "q", "size", "modulus", "primitive"]).row(vec![
                ctx.p().to_string(),
                ctx.e().to_string(),
                ctx.d().to_string(),
                ctx.q().to_string(),
                ctx.size().to_string(),
                modulus,
                e(ctx.primitive()),
            ]);
            Ok((report, EXIT_OK))
        }
        Command::ScatterTest(args) => {
            let inst = instance(args, ceiling)?;
            let ctx = inst.ctx();
            let v = is_scattered(&inst)?;
            let ls = linear_set_report(&inst)?;
            let mut m = instance_header(cli, &inst);
            m.insert("scattered".into(), json!(v.scattered));
            m.insert("witness".into(), report::witness(ctx, v.witness));
            m.insert("linear_set".into(), json!(ls));
            let [wx, wy] = report::witness_cells(ctx, v.witness);
            let report = Report::new(Value::Object(m), vec!["seed", "scattered", "witness_x", "witness_y", "linear_set_size", "max_weight"])
                .row(vec![cli.seed.to_string(), v.scattered.to_string(), wx, wy, ls.size.to_string(), ls.max_weight.to_string()]);
            Ok((report, code(v.scattered)))
        }
        Command::LinearSet(args) => {
            let inst = instance(args, ceiling)?;
            let ls = linear_set_report(&inst)?;
            let mut m = instance_header(cli, &inst);
            m.insert("linear_set".into(), json!(ls));
            let mut report = Report::new(Value::Object(m), vec!["seed", "weight", "points"]);
            for (w, c) in &ls.weight_spectrum {
                report = report.row(vec![cli.seed.to_string(), w.to_string(), c.to_string()]);
            }
            Ok((report, EXIT_OK))
        }
        Command::Scan { inst: args, m_max } => {
            if *m_max == 0 {
                return Err(Error::Precondition("--m-max must be at least 1".into()));
            }
            let inst = instance(args, ceiling)?;
            let ms: Vec<u32> = (1..=*m_max).collect();
            let entries = scan_extensions(&inst, &ms, ceiling);
            let ctx = inst.ctx();
            let mut failed = Vec::new();
            let mut skipped = Vec::new();
            let mut rows = Vec::new();
            let mut list = Vec::new();
            for e in &entries {
                match &e.verdict {
                    Ok(v) => {
                        if !v.scattered {
                            failed.push(e.m);
                        }
                        // witnesses live in the extension field
                        let ext = FieldCtx::new(ctx.p() as u64, ctx.e(), ctx.d() * e.m)?;
                        let [wx, wy] = report::witness_cells(&ext, v.witness);
                        list.push(json!({ "m": e.m, "scattered": v.scattered, "witness": report::witness(&ext, v.witness), "error": null }));
                        rows.push(vec![cli.seed.to_string(), e.m.to_string(), v.scattered.to_string(), wx, wy, String::new()]);
                    }
                    Err(err) => {
                        skipped.push(e.m);
                        list.push(json!({ "m": e.m, "scattered": null, "witness": null, "error": err.to_string() }));
                        rows.push(vec![cli.seed.to_string(), e.m.to_string(), String::new(), String::new(), String::new(), err.to_string()]);
                    }
                }
            }
            let summary = if !failed.is_empty() {
                let ms: Vec<String> = failed.iter().map(u32::to_string).collect();
                format!("non-exceptional (failed at m={})", ms.join(","))
            } else {
                format!("scattered up to horizon {m_max}")
            };
            let mut m = instance_header(cli, &inst);
            m.insert("m_max".into(), json!(m_max));
            m.insert("entries".into(), Value::Array(list));
            m.insert("skipped".into(), json!(skipped));
            m.insert("summary".into(), json!(summary));
            let mut report = Report::new(Value::Object(m), vec!["seed", "m", "scattered", "witness_x", "witness_y", "error"]);
            report.rows = rows;
            Ok((report, code(failed.is_empty())))
        }
        Command::MrdCheck(args) => {
            let inst = instance(args, ceiling)?;
            let r = min_distance(&inst)?;
            let mut m = instance_header(cli, &inst);
            m.insert("code".into(), json!(r));
            let report = Report::new(Value::Object(m), vec!["seed", "n", "q", "code_size", "d", "mrd"]).row(vec![
                cli.seed.to_string(),
                r.n.to_string(),
                r.q.to_string(),
                r.code_size.clone(),
                r.min_distance.to_string(),
                r.is_mrd.to_string(),
            ]);
            Ok((report, code(r.is_mrd)))
        }
        Command::CurveBuild(args) => {
            let inst = instance(args, ceiling)?;
            let f = build_scatter_curve(&inst)?;
            let mut m = instance_header(cli, &inst);
            m.insert("curve".into(), json!(format_bivar(&f)));
            m.insert("degree".into(), json!(f.degree()));
            m.insert("terms".into(), json!(f.num_terms()));
            let mut report = Report::new(Value::Object(m), vec!["i", "j", "coefficient"]);
            for (i, j, c) in f.terms() {
                report = report.row(vec![i.to_string(), j.to_string(), format_elt(f.ctx(), c)]);
            }
            Ok((report, EXIT_OK))
        }
        Command::CurvePoints { curve: args, predicate } => {
            let f = curve(args, ceiling)?;
            let filter = match predicate {
                Predicate::All => PointFilter::All,
                Predicate::RatioNotInFq => PointFilter::RatioNotInFq,
            };
            let count = count_affine(&f, filter)?;
            let mut m = curve_header(cli, &f);
            m.insert("predicate".into(), json!(filter));
            m.insert("count".into(), json!(count.count));
            m.insert("witness".into(), report::witness(f.ctx(), count.witness));
            let [wx, wy] = report::witness_cells(f.ctx(), count.witness);
            let mut row = vec![cli.seed.to_string(), count.count.to_string(), wx, wy, String::new(), String::new(), String::new()];
            if filter == PointFilter::All && !f.is_zero() {
                let hw = hasse_weil_gap(&f)?;
                m.insert(
                    "hasse_weil".into(),
                    json!({
                        "at_infinity": hw.at_infinity,
                        "points": hw.points,
                        "gap": hw.gap,
                        "bound": report::real(hw.bound),
                        "within_bound": hw.within_bound(),
                    }),
                );
                row[4] = hw.points.to_string();
                row[5] = hw.gap.to_string();
                row[6] = report::real(hw.bound);
            }
            let report = Report::new(Value::Object(m), vec!["seed", "count", "witness_x", "witness_y", "points", "gap", "bound"]).row(row);
            Ok((report, EXIT_OK))
        }
        Command::CurveInfinity(args) => {
            let f = curve(args, ceiling)?;
            if f.is_zero() {
                return Err(Error::Precondition("the zero polynomial has no points at infinity".into()));
            }
            let pts = points_at_infinity(&f)?;
            let ctx = f.ctx();
            let mut m = curve_header(cli, &f);
            let listed: Vec<Value> = pts.iter().map(|p| json!(p.iter().map(|&c| format_elt(ctx, c)).collect::<Vec<_>>())).collect();
            m.insert("count".into(), json!(pts.len()));
            m.insert("points".into(), Value::Array(listed));
            let mut report = Report::new(Value::Object(m), vec!["x", "y", "z"]);
            for p in &pts {
                report = report.row(p.iter().map(|&c| format_elt(ctx, c)).collect());
            }
            Ok((report, EXIT_OK))
        }
        Command::CurveMultiplicity { curve: args, point } => {
            let f = curve(args, ceiling)?;
            let ctx = f.ctx();
            let (u, v) = parse_point(ctx, point)?;
            let (mult, cone) = multiplicity(&f, (u, v))?;
            let ordinary = if mult >= 1 { Some(is_ordinary(&cone)?) } else { None };
            let mut m = curve_header(cli, &f);
            m.insert("point".into(), json!([format_elt(ctx, u), format_elt(ctx, v)]));
            m.insert("multiplicity".into(), json!(mult));
            m.insert("tangent_cone".into(), json!(format_bivar(&cone)));
            m.insert("ordinary".into(), json!(ordinary));
            let report = Report::new(Value::Object(m), vec!["seed", "multiplicity", "tangent_cone", "ordinary"]).row(vec![
                cli.seed.to_string(),
                mult.to_string(),
                format_bivar(&cone),
                ordinary.map_or(String::new(), |o| o.to_string()),
            ]);
            Ok((report, EXIT_OK))
        }
        Command::CurveTransform(args) => {
            let f = curve(args, ceiling)?;
            let g = geometric_transform(&f)?;
            let mut m = curve_header(cli, &f);
            m.insert("transform".into(), json!(format_bivar(&g)));
            m.insert("transform_degree".into(), json!(g.degree()));
            let mut report = Report::new(Value::Object(m), vec!["i", "j", "coefficient"]);
            for (i, j, c) in g.terms() {
                report = report.row(vec![i.to_string(), j.to_string(), format_elt(g.ctx(), c)]);
            }
            Ok((report, EXIT_OK))
        }
        Command::CurveBranch { curve: args, terms, point } => {
            let f = curve(args, ceiling)?;
            let ctx = f.ctx().clone();
            let local = match point {
                Some(p) => {
                    let (u, v) = parse_point(&ctx, p)?;
                    f.shift(u, v)
                }
                None => f.clone(),
            };
            let series = branch_series(&local, *terms)?;
            let mut m = curve_header(cli, &f);
            m.insert("series".into(), json!(series.iter().map(|&c| format_elt(&ctx, c)).collect::<Vec<_>>()));
            let mut report = Report::new(Value::Object(m), vec!["k", "coefficient"]);
            for (k, &c) in series.iter().enumerate() {
                report = report.row(vec![(k + 1).to_string(), format_elt(&ctx, c)]);
            }
            Ok((report, EXIT_OK))
        }
        Command::Verify { suite } => {
            let r = run_suite(suite, cli.seed)?;
            let passed = r.passed();
            let mut json = serde_json::to_value(&r).map_err(|e| Error::Parse(e.to_string()))?;
            json["passed"] = json!(passed);
            let mut report = Report::new(json, vec!["seed", "suite", "tally", "checks", "failures"]);
            for (name, t) in [("main", &r.main), ("bridge", &r.bridge), ("consistency", &r.consistency)] {
                report = report.row(vec![cli.seed.to_string(), r.suite.clone(), name.into(), t.checks.to_string(), t.failures.to_string()]);
            }
            Ok((report, code(passed)))
        }
    }
}
