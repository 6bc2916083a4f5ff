//! Command-line front end. Every command prints one JSON object with a
//! `"status"` field; `--dot` switches graph commands to Graphviz output.
//!
//! Exit codes: 0 success, 2 usage error or unknown subcommand, 3 a grammar
//! rule failed, 4 a precondition was violated.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Map, Value};

use crate::domain::{reduce_point, DomainKind};
use crate::error::{Error, ParseError, Result};
use crate::exponent::{fmt_rational, parse_rational};
use crate::field::FieldConfig;
use crate::graph::SkeletonGraph;
use crate::hyper::{cover_skeleton, elliptic_reduction, fiber_count, BranchData, EllipticReduction, FiberOptions};
use crate::line::{convex_hull, retract_to_hull, Components, Point};
use crate::parse::{parse_domain, parse_element, parse_element_list, parse_point, parse_poly, parse_standard_domain};
use crate::spectra::{nadic_norm, nadic_spectral, RealMag, ZPoint};

pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PARSE: i32 = 3;
pub const EXIT_PRECONDITION: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "berkovich", version, about = "Exact computations on the Berkovich line")]
struct Cli {
    /// Emit JSON even where `--dot` would print a graph.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct FieldArg {
    /// `padic:<p>`, `puiseux:Q`, `puiseux:F<p>`, `trivial:Q` or `trivial:F<p>`.
    #[arg(long)]
    field: String,
}

impl FieldArg {
    fn config(&self) -> Result<FieldConfig> {
        Ok(self.field.parse()?)
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Type and invariants `E`, `F` of a point.
    Classify {
        #[command(flatten)]
        field: FieldArg,
        point: String,
    },
    /// `|f(x)|` for a polynomial `f`.
    Eval {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long)]
        poly: String,
        point: String,
    },
    /// Path between two points through their join.
    Path {
        #[command(flatten)]
        field: FieldArg,
        from: String,
        to: String,
    },
    /// Convex hull of finitely many points.
    Hull {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long)]
        dot: bool,
        #[arg(required = true)]
        points: Vec<String>,
    },
    /// Membership in a domain `|f| <= r * |g| and ...`.
    Member {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long)]
        domain: String,
        point: String,
    },
    /// Shilov boundary of a disc, annulus or disc with holes.
    Shilov {
        #[command(flatten)]
        field: FieldArg,
        domain: String,
    },
    /// Image of a unit-disc point under the reduction map.
    Reduce {
        #[command(flatten)]
        field: FieldArg,
        point: String,
    },
    /// Values of a point of the spectrum of Z on integers.
    Mspecz {
        point: String,
        #[arg(required = true, allow_negative_numbers = true)]
        integers: Vec<String>,
    },
    /// The n-adic norm of a rational and its spectral seminorm.
    Nadic {
        #[arg(long)]
        n: u64,
        #[arg(long, allow_negative_numbers = true)]
        x: String,
    },
    /// Reduction type of the Legendre curve S^2 = T(T-1)(T-lambda).
    Elliptic {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long, allow_negative_numbers = true)]
        lambda: String,
    },
    /// Skeleton and genus of the double cover branched at the given roots.
    Hyper {
        #[command(flatten)]
        field: FieldArg,
        /// Comma-separated roots.
        #[arg(long, allow_negative_numbers = true)]
        roots: String,
        #[arg(long)]
        dot: bool,
        /// Require residue constants to be squares in the residue field.
        #[arg(long)]
        strict_squares: bool,
    },
    /// Retraction of a point onto the hull of `--onto` points.
    Retract {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long, required = true)]
        onto: Vec<String>,
        point: String,
    },
}

/// Outcome of a command: a JSON payload or raw text.
enum Output {
    Json(Map<String, Value>),
    Text(String),
}

fn ok(pairs: Value) -> Output {
    let mut m = Map::new();
    m.insert("status".into(), json!("ok"));
    if let Value::Object(rest) = pairs {
        m.extend(rest);
    }
    Output::Json(m)
}

fn real_mag(m: &RealMag) -> Value {
    match m {
        RealMag::Zero => json!({"base": "0", "exp": "1"}),
        RealMag::Pow { base, exp } => json!({"base": fmt_rational(base), "exp": fmt_rational(exp)}),
    }
}

fn graph_json(g: &SkeletonGraph) -> Value {
    let vertices: Vec<Value> = g
        .vertices
        .iter()
        .map(|v| {
            let mut m = Map::new();
            m.insert("id".into(), json!(v.id));
            m.insert(
                "point".into(),
                json!(v.node.point().map_or_else(|| "inf".to_string(), ToString::to_string)),
            );
            m.insert("type".into(), v.point_type.map_or(Value::Null, |t| json!(t.number())));
            if v.genus > 0 {
                m.insert("genus".into(), json!(v.genus));
            }
            if let Some(s) = v.sheet {
                m.insert("sheet".into(), json!(s));
            }
            Value::Object(m)
        })
        .collect();
    let edges: Vec<Value> = g
        .edges
        .iter()
        .map(|e| json!({"u": e.u, "v": e.v, "length": e.length.to_string()}))
        .collect();
    json!({"vertices": vertices, "edges": edges})
}

fn parse_int(s: &str) -> Result<BigInt> {
    s.trim().parse().map_err(|_| ParseError::new("integer", s).into())
}

fn execute(cli: Cli) -> Result<Output> {
    let json_only = cli.json;
    Ok(match cli.command {
        Command::Classify { field, point } => {
            let x = parse_point(field.config()?, &point)?;
            let c = x.classify();
            let components = match x.components() {
                Components::One => "one",
                Components::Two => "two",
                Components::P1OfResidue => "p1_residue",
            };
            ok(json!({
                "point": x.to_string(),
                "type": c.point_type.number(),
                "E": c.e,
                "F": c.f,
                "components": components,
            }))
        }
        Command::Eval { field, poly, point } => {
            let k = field.config()?;
            let f = parse_poly(k, &poly)?;
            let x = parse_point(k, &point)?;
            let v = x.eval(&f);
            ok(json!({"poly": f.to_string(), "point": x.to_string(), "value": v.value.to_string(), "exact": v.exact}))
        }
        Command::Path { field, from, to } => {
            let k = field.config()?;
            let (x, y) = (parse_point(k, &from)?, parse_point(k, &to)?);
            let p = x.path(&y)?;
            let segments: Vec<Value> = p
                .segments
                .iter()
                .map(|s| json!({"center": s.center.to_string(), "from": s.from.to_string(), "to": s.to.to_string()}))
                .collect();
            ok(json!({
                "from": x.to_string(),
                "to": y.to_string(),
                "join": x.join(&y)?.to_string(),
                "length": p.length.to_string(),
                "segments": segments,
            }))
        }
        Command::Hull { field, dot, points } => {
            let k = field.config()?;
            let pts = points.iter().map(|s| parse_point(k, s)).collect::<Result<Vec<_>>>()?;
            let g = convex_hull(&pts)?;
            match (dot, json_only) {
                (true, false) => Output::Text(g.to_dot("hull")),
                (true, true) => ok(json!({"graph": graph_json(&g), "dot": g.to_dot("hull")})),
                _ => ok(json!({"graph": graph_json(&g)})),
            }
        }
        Command::Member { field, domain, point } => {
            let k = field.config()?;
            let d = parse_domain(k, &domain)?;
            let x = parse_point(k, &point)?;
            let m = d.member(&x);
            let kind = match d.kind() {
                DomainKind::Weierstrass => "weierstrass",
                DomainKind::Laurent => "laurent",
                DomainKind::Rational => "rational",
                DomainKind::General => "general",
            };
            ok(
                json!({"domain": d.to_string(), "point": x.to_string(), "kind": kind, "member": m.value, "exact": m.exact}),
            )
        }
        Command::Shilov { field, domain } => {
            let d = parse_standard_domain(field.config()?, &domain)?;
            let pts: Vec<String> = d.shilov_boundary().iter().map(ToString::to_string).collect();
            ok(json!({"domain": d.to_string(), "points": pts}))
        }
        Command::Reduce { field, point } => {
            let x = parse_point(field.config()?, &point)?;
            ok(json!({"point": x.to_string(), "reduction": reduce_point(&x)?.to_string()}))
        }
        Command::Mspecz { point, integers } => {
            let z: ZPoint = point.parse()?;
            let values = integers
                .iter()
                .map(|s| {
                    let m = parse_int(s)?;
                    let v = real_mag(&z.eval(&m));
                    Ok(json!({"m": m.to_string(), "base": v["base"], "exp": v["exp"]}))
                })
                .collect::<Result<Vec<_>>>()?;
            ok(json!({"point": z.to_string(), "values": values}))
        }
        Command::Nadic { n, x } => {
            let q: BigRational = parse_rational(&x, "rational")?;
            ok(json!({
                "n": n.to_string(),
                "x": fmt_rational(&q),
                "norm": real_mag(&nadic_norm(&q, n)?),
                "spectral": real_mag(&nadic_spectral(&q, n)?),
            }))
        }
        Command::Elliptic { field, lambda } => {
            let l = parse_element(field.config()?, &lambda)?;
            match elliptic_reduction(&l)? {
                EllipticReduction::Good { j } => {
                    ok(json!({"lambda": l.to_string(), "type": "good", "j": j.to_string()}))
                }
                EllipticReduction::Multiplicative { cycle_exponent } => ok(json!({
                    "lambda": l.to_string(),
                    "type": "multiplicative",
                    "cycle_exponent": cycle_exponent.to_string(),
                })),
            }
        }
        Command::Hyper {
            field,
            roots,
            dot,
            strict_squares,
        } => {
            let k = field.config()?;
            let bd = BranchData::from_roots(parse_element_list(k, &roots)?)?;
            let s = cover_skeleton(&bd)?;
            if dot && !json_only {
                return Ok(Output::Text(s.cover.to_dot("cover")));
            }
            let opts = FiberOptions { strict_squares };
            let vertices = s
                .base
                .vertices
                .iter()
                .map(|v| {
                    let point = v.node.point();
                    let fibers = match point {
                        Some(x @ Point::Disc { .. }) => match fiber_count(&bd, x, opts) {
                            Ok(n) => json!(n),
                            Err(Error::Undetermined(_)) => json!("undetermined"),
                            Err(e) => return Err(e),
                        },
                        _ => json!(s.vertex_fibers[v.id]),
                    };
                    Ok(json!({
                        "point": point.map_or_else(|| "inf".to_string(), ToString::to_string),
                        "fibers": fibers,
                        "genus": s.vertex_genus[v.id],
                    }))
                })
                .collect::<Result<Vec<_>>>()?;
            let mut payload = json!({
                "roots": bd.roots().iter().map(ToString::to_string).collect::<Vec<_>>(),
                "betti": s.betti,
                "vertex_genera": s.vertex_genus,
                "total_genus": s.total_genus,
                "cycle_length": s.cycle_length().to_string(),
                "vertices": vertices,
            });
            if dot {
                payload["dot"] = json!(s.cover.to_dot("cover"));
            }
            ok(payload)
        }
        Command::Retract { field, onto, point } => {
            let k = field.config()?;
            let pts = onto.iter().map(|s| parse_point(k, s)).collect::<Result<Vec<_>>>()?;
            let x = parse_point(k, &point)?;
            let g = convex_hull(&pts)?;
            ok(json!({"point": x.to_string(), "retraction": retract_to_hull(&x, &g)?.to_string()}))
        }
    })
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) => EXIT_PARSE,
        _ => EXIT_PRECONDITION,
    }
}

/// Runs the command line `args` (program name first), writing the response
/// to `out` and diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp
                | ErrorKind::DisplayVersion
                | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
                    let _ = write!(out, "{e}");
                    if e.kind() == ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand {
                        EXIT_USAGE
                    } else {
                        0
                    }
                }
                _ => {
                    let first = e.to_string();
                    let line = first.lines().next().unwrap_or("usage error");
                    let _ = writeln!(err, "{line}");
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(cli) {
        Ok(Output::Json(m)) => {
            let text = serde_json::to_string_pretty(&Value::Object(m)).expect("JSON values serialize");
            let _ = writeln!(out, "{text}");
            0
        }
        Ok(Output::Text(t)) => {
            let _ = write!(out, "{t}");
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
