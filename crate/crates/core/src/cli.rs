//! Command-line front end. `run` returns the text to print and the exit
//! code: 0 success, 1 verification failure, 2 usage or input error.

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::discrepancy::{
    classify_incidence, discrepancies, incidence_sweep, lct_min_resolution, select_hunt_divisor,
};
use crate::feasibility::feasibility_report;
use crate::graphs::{
    enumerate_families, format_dynkin, parse_dynkin, DynkinType, ParamRange, WeightedDualGraph,
};
use crate::pencil::{
    cross_ratio_minimal_polynomials, pencil_singular_locus, quadratic_factor_double_root,
    squarefree_core, weighted_member_check, FieldSpec,
};
use crate::picard::preset;
use crate::rational::{fmt_q, fmt_qs};
use crate::verify::{self, Status};
use crate::{LdpError, Result};

#[derive(Parser, Debug)]
#[command(
    name = "ldp",
    about = "Exact computations for rank-one log del Pezzo surfaces"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Parse a Dynkin type and print its components as JSON.
    Parse { notation: String },
    /// |det| of the intersection matrix, per component and in total.
    Det { notation: String },
    /// Feasibility report with discrepancies and the hunt selection.
    Report { notation: String },
    /// Log canonical threshold of a single graph against an incidence vector.
    Lct {
        notation: String,
        /// Comma-separated incidence numbers, one per vertex.
        #[arg(long, value_delimiter = ',')]
        a: Vec<u32>,
    },
    /// Exhaustive incidence sweep over small chains and stars.
    Lemma42 {
        #[arg(long, default_value_t = 4)]
        max_a: u32,
        #[arg(long, default_value_t = 6)]
        max_vertices: usize,
        #[arg(long, default_value_t = 5)]
        max_weight: u32,
    },
    /// Vertex of largest discrepancy among the hunt candidates.
    Hunt { notation: String },
    /// Enumerate the families 2[2^4] + (†) over parameter boxes.
    Table1 {
        #[arg(long, default_value = "0..2")]
        n: String,
        #[arg(long, default_value = "1..2")]
        m: String,
        /// `all` or a range a..b
        #[arg(long, default_value = "all")]
        l: String,
    },
    /// Singular-member locus of the cubic pencil; 0 means ℚ.
    Pencil {
        #[arg(long = "char", default_value_t = 0)]
        p: u64,
    },
    /// Minimal polynomials of the cross ratios and their discriminant cores.
    Crossratio,
    /// Degree, support and smoothness checks for D_2 and D_3 over 𝔽_5.
    WeightedModel,
    /// Run the golden suite.
    VerifyPaper {
        #[arg(long)]
        json: bool,
    },
    /// Curves, contracted set and canonical class of a lattice preset
    /// ("2A4", "[3]", "[2,4]").
    Lattice { preset: String },
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values serialize")
}

fn range(s: &str) -> Result<ParamRange> {
    let bad = || LdpError::Syntax {
        offset: 0,
        message: format!("expected a range a..b, got {s:?}"),
    };
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let lo = a.trim().parse().map_err(|_| bad())?;
    let hi = b.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok(ParamRange { lo, hi })
}

fn single_graph(notation: &str) -> Result<WeightedDualGraph> {
    let t = parse_dynkin(notation)?;
    match t.components() {
        [g] => Ok(g.clone()),
        _ => Err(LdpError::BadShape),
    }
}

fn type_json(t: &DynkinType) -> Value {
    json!({
        "notation": format_dynkin(t),
        "vertex_count": t.vertex_count(),
        "components": t.components().iter().map(|g| json!({
            "notation": g.to_string(),
            "graph": g.to_json(),
        })).collect::<Vec<_>>(),
    })
}

fn dispatch(cmd: Cmd) -> Result<(Value, i32)> {
    Ok(match cmd {
        Cmd::Parse { notation } => (type_json(&parse_dynkin(&notation)?), 0),
        Cmd::Det { notation } => {
            let t = parse_dynkin(&notation)?;
            let mut per = vec![];
            for g in t.components() {
                per.push(g.determinant()?.to_string());
            }
            (
                json!({ "type": format_dynkin(&t), "components": per, "determinant": t.determinant()?.to_string() }),
                0,
            )
        }
        Cmd::Report { notation } => {
            let t = parse_dynkin(&notation)?;
            let report = feasibility_report(&t)?;
            let mut disc = vec![];
            for g in t.components() {
                disc.push(json!({ "component": g.to_string(), "e": fmt_qs(&discrepancies(g)?) }));
            }
            let hunt = match select_hunt_divisor(&t) {
                Ok(h) => serde_json::to_value(h).expect("serializable"),
                Err(LdpError::AllDuVal) => Value::Null,
                Err(e) => return Err(e),
            };
            let mut v = serde_json::to_value(report).expect("serializable");
            v["discrepancies"] = json!(disc);
            v["hunt"] = hunt;
            (v, 0)
        }
        Cmd::Lct { notation, a } => {
            let g = single_graph(&notation)?;
            let lct = lct_min_resolution(&g, &a)?;
            let class = classify_incidence(&g, &a)?;
            (
                json!({ "graph": g.to_string(), "a": a, "lct": fmt_q(&lct.value), "exact": lct.exact, "classification": class }),
                0,
            )
        }
        Cmd::Lemma42 {
            max_a,
            max_vertices,
            max_weight,
        } => {
            let r = incidence_sweep(max_vertices, max_weight, max_a);
            let code = if r.passed() { 0 } else { 1 };
            (serde_json::to_value(&r).expect("serializable"), code)
        }
        Cmd::Hunt { notation } => {
            let h = select_hunt_divisor(&parse_dynkin(&notation)?)?;
            (serde_json::to_value(h).expect("serializable"), 0)
        }
        Cmd::Table1 { n, m, l } => {
            let l = if l == "all" { None } else { Some(range(&l)?) };
            let rows: Vec<Value> = enumerate_families(range(&n)?, range(&m)?, l)
                .into_iter()
                .map(|(inst, t)| {
                    let mut v = serde_json::to_value(inst).expect("serializable");
                    v["type"] = json!(format_dynkin(&t));
                    v
                })
                .collect();
            (json!({ "count": rows.len(), "instances": rows }), 0)
        }
        Cmd::Pencil { p } => {
            let field = FieldSpec::parse(p)?;
            let locus = pencil_singular_locus(field)?;
            (
                json!({
                    "field": field,
                    "locus": locus.to_string(),
                    "locus_poly": locus.to_json(),
                    "quadratic_double_root": quadratic_factor_double_root(field),
                }),
                0,
            )
        }
        Cmd::Crossratio => {
            let mut rows = vec![];
            for q in cross_ratio_minimal_polynomials() {
                let d = q.discriminant();
                rows.push(json!({
                    "polynomial": q.to_string(),
                    "coefficients": [q.a.to_string(), q.b.to_string(), q.c.to_string()],
                    "discriminant": d.to_string(),
                    "squarefree_core": squarefree_core(&d)?.to_string(),
                }));
            }
            (json!(rows), 0)
        }
        Cmd::WeightedModel => {
            let r2 = weighted_member_check(2)?;
            let r3 = weighted_member_check(3)?;
            (json!([r2, r3]), 0)
        }
        Cmd::VerifyPaper { json } => {
            let out = verify::run();
            let code = if verify::all_pass(&out) { 0 } else { 1 };
            if json {
                (serde_json::to_value(&out).expect("serializable"), code)
            } else {
                let lines: Vec<String> = out
                    .iter()
                    .map(|o| {
                        let s = if o.status == Status::Pass {
                            "PASS"
                        } else {
                            "FAIL"
                        };
                        if o.status == Status::Pass {
                            format!("{s} {}", o.id)
                        } else {
                            format!("{s} {} expected {} got {}", o.id, o.expected, o.actual)
                        }
                    })
                    .collect();
                (Value::String(lines.join("\n")), code)
            }
        }
        Cmd::Lattice { preset: name } => {
            let lat = preset(&name)?;
            let k = lat.canonical();
            let curves: serde_json::Map<String, Value> = lat
                .curves()
                .iter()
                .map(|(n, c)| (n.clone(), json!({ "class": c.to_string(), "self_intersection": fmt_q(&c.dot(c).expect("same basis")) })))
                .collect();
            (
                json!({
                    "preset": lat.name,
                    "basis": lat.basis(),
                    "canonical": k.to_json(),
                    "canonical_sq": fmt_q(&k.dot(&k)?),
                    "contracted": lat.contracted(),
                    "contracted_type": format_dynkin(&lat.contracted_graph()),
                    "curves": curves,
                }),
                0,
            )
        }
    })
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T>(args: I) -> (String, i32)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (e.render().to_string(), code);
        }
    };
    match dispatch(cli.cmd) {
        Ok((Value::String(s), code)) => (s, code),
        Ok((v, code)) => (pretty(&v), code),
        Err(e) => (format!("error: {e}"), 2),
    }
}
