//! The golden suite behind `ldp verify-paper`: every check computes a value
//! and compares it with the fixture exactly.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::discrepancy::{
    anticanonical_selfint, cartier_index, discrepancies, incidence_sweep, select_hunt_divisor,
};
use crate::feasibility::{
    feasibility_report_with, genus_constraint_solvable, kv_vanishing_bound, pinned_bogomolov,
    Bogomolov, BogomolovMode,
};
use crate::graphs::{enumerate_families, parse_dynkin, ParamRange};
use crate::pencil::cubic::reduce_mod;
use crate::pencil::{
    classify_member, cross_ratio_minimal_polynomials, quadratic_factor_double_root, singular_locus,
    squarefree_core, weighted_member_check, Field, FieldSpec, Fp, Quad, Rat,
};
use crate::picard::{
    anticanonical_pullback_identity, chi_pair, preset_resolution, zero_sum_tuples, BlowupLattice,
    DivisorClass, GENERATOR_CURVES,
};
use crate::rational::{fmt_q, fmt_qs, qi};
use crate::{LdpError, Result};

pub const FIXTURE: &str = include_str!("../fixtures/expected.toml");

#[derive(Debug, Clone, Deserialize)]
pub struct Fixture {
    pub chi_seed: u64,
    pub chi_tuples: usize,
    pub check: Vec<CheckSpec>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct CheckSpec {
    pub id: String,
    pub criterion: u32,
    pub expected: toml::Value,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationOutcome {
    pub id: String,
    pub criterion: u32,
    pub expected: Value,
    pub actual: Value,
    pub status: Status,
}

pub fn parse_fixture(text: &str) -> std::result::Result<Fixture, String> {
    toml::from_str(text).map_err(|e| e.to_string())
}

/// All checks of the built-in fixture, in fixture order.
pub fn run() -> Vec<VerificationOutcome> {
    run_with_fixture(FIXTURE).expect("built-in fixture parses")
}

pub fn run_with_fixture(text: &str) -> std::result::Result<Vec<VerificationOutcome>, String> {
    let fx = parse_fixture(text)?;
    let out = fx
        .check
        .par_iter()
        .map(|c| {
            let expected = serde_json::to_value(&c.expected).map_err(|e| e.to_string())?;
            let actual = compute(&c.id, &fx).unwrap_or_else(|e| json!({ "error": e.to_string() }));
            let status = if actual == expected {
                Status::Pass
            } else {
                Status::Fail
            };
            Ok(VerificationOutcome {
                id: c.id.clone(),
                criterion: c.criterion,
                expected,
                actual,
                status,
            })
        })
        .collect::<std::result::Result<Vec<_>, String>>()?;
    Ok(out)
}

pub fn all_pass(outcomes: &[VerificationOutcome]) -> bool {
    outcomes.iter().all(|o| o.status == Status::Pass)
}

fn first_component(s: &str) -> Result<crate::graphs::WeightedDualGraph> {
    Ok(parse_dynkin(s)?.components()[0].clone())
}

fn index_ksq(s: &str) -> Result<Value> {
    let t = parse_dynkin(s)?;
    Ok(json!([
        cartier_index(&t)?.to_string(),
        fmt_q(&anticanonical_selfint(&t)?)
    ]))
}

/// Computes the value for one check id.
pub fn compute(id: &str, fx: &Fixture) -> Result<Value> {
    Ok(match id {
        "det.a4" => json!(first_component("[2^4]")?.determinant()?.to_string()),
        "det.chain_2_4" => json!(first_component("[2,4]")?.determinant()?.to_string()),
        "det.star_2_235" => json!(first_component("[2;[2],[3],[5]]")?
            .determinant()?
            .to_string()),
        "discrepancy.chain_3" => json!(fmt_qs(&discrepancies(&first_component("[3]")?)?)),
        "discrepancy.chain_2_4" => json!(fmt_qs(&discrepancies(&first_component("[2,4]")?)?)),
        "hunt.star_2_235" => {
            json!(fmt_q(
                &select_hunt_divisor(&parse_dynkin("2[2^4]+[2;[2],[3],[5]]")?)?.coefficient
            ))
        }
        "index_ksq.dagger_3" => index_ksq("2[2^4]+[3]")?,
        "index_ksq.dagger_2_4" => index_ksq("2[2^4]+[2,4]")?,
        "ksq.two_a4" => json!(fmt_q(&anticanonical_selfint(&parse_dynkin("2[2^4]")?)?)),
        "ksq.one_a4" => json!(fmt_q(&anticanonical_selfint(&parse_dynkin("[2^4]")?)?)),
        "genus.g5_k5" => match genus_constraint_solvable(5, &qi(5)) {
            Some(n) => json!(n.to_string()),
            None => json!("none"),
        },
        "kv.p5_r3" => json!(kv_vanishing_bound(5, 3, &crate::rational::q(1, 3))),
        "lattice.intersections" => intersections()?,
        "pullback.g2" => {
            let lat = preset_resolution("[2,4]")?;
            let pb = lat.pullback_weil(&lat.curve("G_2")?)?;
            json!(coeffs_along(&lat, &pb)?)
        }
        "roundup.g2" => {
            let lat = preset_resolution("[2,4]")?;
            let pb = lat.pullback_weil(&lat.curve("G_2")?)?;
            let up = lat.round_up(&pb, &["C_2", "G_1", "G_2"])?;
            json!(coeffs_along(&lat, &up)?)
        }
        "chi.equality" => {
            let mut ok = true;
            for t in zero_sum_tuples(fx.chi_seed, fx.chi_tuples) {
                let (a, b) = chi_pair(&t)?;
                ok &= a == b;
            }
            json!(ok)
        }
        "identity.dagger_3" => json!(anticanonical_pullback_identity("[3]")?.holds),
        "identity.dagger_2_4" => json!(anticanonical_pullback_identity("[2,4]")?.holds),
        "sweep.incidence" => {
            let r = incidence_sweep(6, 5, 4);
            json!({
                "graphs": r.graphs,
                "klt_graphs": r.klt_graphs,
                "incidence_vectors": r.incidence_vectors,
                "admissible_with_small_pairing": r.admissible_with_small_pairing,
                "display_checks": r.display_checks,
                "monotonicity_checks": r.monotonicity_checks,
                "failures": r.failures.len(),
            })
        }
        "pencil.locus_q" => json!(singular_locus(&Rat::new(0, 1))?.to_string()),
        "pencil.good_reduction" => {
            let l = singular_locus(&Rat::new(0, 1))?;
            let mut good = vec![];
            for p in [7u64, 11, 13] {
                if reduce_mod(&l, p).as_ref() == Some(&singular_locus(&Fp::new(0, p))?) {
                    good.push(p);
                }
            }
            json!(good)
        }
        "pencil.double_root" => {
            let hits: Vec<u64> = [2u64, 5, 7, 11, 13]
                .into_iter()
                .filter(|&p| quadratic_factor_double_root(FieldSpec::PrimeField(p)))
                .collect();
            json!(hits)
        }
        "pencil.kind_p5_t2" => {
            let f = Fp::new(0, 5);
            json!(classify_member(&f.one(), &f.from_i64(2))?.kind)
        }
        "pencil.kind_q_roots" => {
            let m = Quad::modulus(Rat::new(11, 1), Rat::new(-1, 1));
            let th = Quad::theta(&m);
            let a = classify_member(&th.one(), &th)?.kind;
            let b = classify_member(&th.one(), &th.conj())?.kind;
            json!([a, b])
        }
        "crossratio.polynomials" => {
            let qs = cross_ratio_minimal_polynomials();
            json!(qs
                .iter()
                .map(|q| [q.a.to_string(), q.b.to_string(), q.c.to_string()])
                .collect::<Vec<_>>())
        }
        "crossratio.cores" => {
            let mut cores = vec![];
            for q in cross_ratio_minimal_polynomials() {
                cores.push(squarefree_core(&q.discriminant())?.to_string());
            }
            json!(cores)
        }
        "weighted.d2" | "weighted.d3" => {
            let r = weighted_member_check(if id == "weighted.d2" { 2 } else { 3 })?;
            json!([r.degree_ok, r.support_ok, r.smooth])
        }
        "families.battery" => battery(BogomolovMode::from_env())?,
        _ => return Err(LdpError::UnknownCurve(format!("check {id}"))),
    })
}

fn coeffs_along(lat: &BlowupLattice, cls: &DivisorClass) -> Result<Vec<String>> {
    let c = lat
        .express(cls, &["G_2", "G_1", "C_2"])?
        .ok_or(LdpError::AmbiguousSupport)?;
    Ok(fmt_qs(&c))
}

fn intersections() -> Result<Value> {
    let lat = preset_resolution("[2,4]")?;
    let mk = lat.canonical().neg();
    let mut m = serde_json::Map::new();
    let dot =
        |a: &str, b: &str| -> Result<String> { Ok(fmt_q(&lat.curve(a)?.dot(&lat.curve(b)?)?)) };
    for x in GENERATOR_CURVES {
        m.insert(format!("C_2.{x}"), json!(dot("C_2", x)?));
    }
    for x in GENERATOR_CURVES {
        m.insert(format!("G_1.{x}"), json!(dot("G_1", x)?));
    }
    for x in GENERATOR_CURVES.iter().chain(["G_2"].iter()) {
        m.insert(
            format!("-K.{x}"),
            json!(fmt_q(&lat.mumford_pairing(&mk, &lat.curve(x)?)?)),
        );
    }
    m.insert("C_2.G_2".into(), json!(dot("C_2", "G_2")?));
    m.insert("G_1.G_2".into(), json!(dot("G_1", "G_2")?));
    Ok(Value::Object(m))
}

/// Summary over every family instance with n, m ≤ 4.
pub fn battery(mode: BogomolovMode) -> Result<Value> {
    let all = enumerate_families(
        ParamRange { lo: 0, hi: 4 },
        ParamRange { lo: 1, hi: 4 },
        None,
    );
    let (mut nd, mut klt, mut pos, mut pinned) = (true, true, true, true);
    let mut open = vec![];
    for (_, t) in &all {
        nd &= t.is_negative_definite();
        let r = feasibility_report_with(t, mode)?;
        klt &= r.klt;
        pos &= r.k_sq > qi(0);
        pinned &= r.bogomolov.is_some() && r.bogomolov == pinned_bogomolov(t);
        if r.bogomolov == Some(Bogomolov::NotExcluded) {
            open.push(r.type_notation);
        }
    }
    Ok(json!({
        "instances": all.len(),
        "all_negative_definite": nd,
        "all_klt": klt,
        "all_positive_ksq": pos,
        "verdicts_match_pinned": pinned,
        "not_excluded": open,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_parses() {
        let fx = parse_fixture(FIXTURE).unwrap();
        assert!(fx.check.len() > 25);
        let ids: std::collections::BTreeSet<_> = fx.check.iter().map(|c| c.id.clone()).collect();
        assert_eq!(ids.len(), fx.check.len());
    }

    #[test]
    fn cheap_checks_pass() {
        let fx = parse_fixture(FIXTURE).unwrap();
        for c in fx.check.iter().filter(|c| c.id != "sweep.incidence") {
            let expected = serde_json::to_value(&c.expected).unwrap();
            assert_eq!(compute(&c.id, &fx).unwrap(), expected, "{}", c.id);
        }
    }
}
