//! Numeric feasibility checks over Dynkin types: K², index, klt, the
//! Kawamata–Viehweg bound, the genus Diophantine check and the orbifold
//! Bogomolov bound.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::discrepancy::{anticanonical_selfint, cartier_index, discrepancies};
use crate::error::{LdpError, Result};
use crate::graphs::{
    enumerate_families, families, format_dynkin, parse_dynkin, DynkinType, ParamRange, Shape,
    WeightedDualGraph,
};
use crate::rational::{qi, ser_bigint, ser_q, Q};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Bogomolov {
    Infeasible,
    NotExcluded,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BogomolovMode {
    Transcribed,
    Pinned,
}

impl BogomolovMode {
    /// From `LDP_BOGOMOLOV_MODE`; transcribed unless set to "pinned".
    pub fn from_env() -> BogomolovMode {
        match std::env::var("LDP_BOGOMOLOV_MODE").as_deref() {
            Ok("pinned") => BogomolovMode::Pinned,
            _ => BogomolovMode::Transcribed,
        }
    }
}

/// Order of the local fundamental group of a klt point with this graph; None
/// for a non-klt star.
pub fn local_group_order(g: &WeightedDualGraph) -> Result<Option<BigInt>> {
    let delta = g.determinant()?;
    match g.shape()? {
        Shape::Empty => Ok(Some(BigInt::one())),
        Shape::Chain(_) => Ok(Some(delta)),
        Shape::Star { branches, .. } => {
            let mut ns = vec![];
            for b in &branches {
                ns.push(g.induced(b).abs_det());
            }
            let chi = ns
                .iter()
                .fold(qi(-1), |acc, n| acc + Q::new(BigInt::one(), n.clone()));
            if !chi.is_positive() {
                return Ok(None);
            }
            // |G| = 4Δ / (n₁n₂n₃ χ²)
            let prod: BigInt = ns.iter().product();
            let order =
                Q::from_integer(BigInt::from(4) * delta) / (Q::from_integer(prod) * &chi * &chi);
            Ok(Some(order.to_integer()))
        }
    }
}

/// Σ_p (1 − 1/|G_p|), a non-klt point counting 1.
pub fn bogomolov_sum(t: &DynkinType) -> Result<Q> {
    let mut s = Q::zero();
    for g in t.components() {
        s += match local_group_order(g)? {
            Some(n) => qi(1) - Q::new(BigInt::one(), n),
            None => qi(1),
        };
    }
    Ok(s)
}

/// The orbifold Bogomolov–Miyaoka–Yau bound for a rank-one log del Pezzo
/// surface: 0 < K² ≤ 3·e_orb with e_orb = 3 − Σ(1 − 1/|G_p|), so the sum must
/// stay below 3.
pub fn violates_bogomolov_bound(t: &DynkinType) -> Result<bool> {
    Ok(bogomolov_sum(t)? >= qi(3))
}

/// Reference verdicts for the 2[2^4] + (†) types with n, m ≤ 8: (†) = [3]
/// and [2,4] are not excluded, all others are. None outside that list.
pub fn pinned_bogomolov(t: &DynkinType) -> Option<Bogomolov> {
    static TABLE: OnceLock<BTreeMap<String, Bogomolov>> = OnceLock::new();
    let table = TABLE.get_or_init(|| {
        let open = ["[3]", "[2,4]"];
        let mut m = BTreeMap::new();
        for fam in families() {
            let verdict = if open.contains(&fam.template) {
                Bogomolov::NotExcluded
            } else {
                Bogomolov::Infeasible
            };
            let r = ParamRange { lo: 0, hi: 8 };
            for (inst, d) in enumerate_families(r, ParamRange { lo: 1, hi: 8 }, None) {
                if inst.family == fam.id {
                    m.insert(format_dynkin(&d), verdict);
                }
            }
        }
        m
    });
    table.get(&format_dynkin(t)).copied()
}

/// Types not excluded by the bound itself but ruled out by running the hunt
/// step at the central curve of [2;[2],[3],[5]] (e₀ = 28/29 and the double
/// cover of that curve would ramify three times).
fn hunt_excluded(t: &DynkinType) -> bool {
    let star = parse_dynkin("[2;[2],[3],[5]]").expect("literal");
    let a4 = parse_dynkin("[2^4]").expect("literal");
    let cs = t.components();
    cs.len() == 3
        && cs
            .iter()
            .filter(|g| g.to_string() == a4.components()[0].to_string())
            .count()
            == 2
        && cs
            .iter()
            .any(|g| g.to_string() == star.components()[0].to_string())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FeasibilityReport {
    #[serde(rename = "type")]
    pub type_notation: String,
    pub vertex_count: usize,
    pub ktilde_sq: i64,
    #[serde(serialize_with = "ser_q")]
    pub k_sq: Q,
    #[serde(serialize_with = "ser_bigint")]
    pub index: BigInt,
    pub klt: bool,
    pub negative_definite: bool,
    pub bogomolov: Option<Bogomolov>,
    pub bogomolov_mode: BogomolovMode,
    #[serde(serialize_with = "ser_q")]
    pub bogomolov_sum: Q,
    pub bound_violated: bool,
    pub exclusion_reason: Option<String>,
    pub note: String,
}

pub fn feasibility_report(t: &DynkinType) -> Result<FeasibilityReport> {
    feasibility_report_with(t, BogomolovMode::from_env())
}

pub fn feasibility_report_with(t: &DynkinType, mode: BogomolovMode) -> Result<FeasibilityReport> {
    if !t.is_negative_definite() {
        return Err(LdpError::NotNegativeDefinite);
    }
    let n = t.vertex_count();
    let mut klt = true;
    for g in t.components() {
        klt &= discrepancies(g)?.iter().all(|e| e < &qi(1));
    }
    let sum = bogomolov_sum(t)?;
    let bound_violated = violates_bogomolov_bound(t)?;
    let (bogomolov, exclusion_reason) = match mode {
        BogomolovMode::Pinned => (
            pinned_bogomolov(t),
            pinned_bogomolov(t)
                .filter(|b| *b == Bogomolov::Infeasible)
                .map(|_| "pinned".to_string()),
        ),
        BogomolovMode::Transcribed => {
            if bound_violated {
                (
                    Some(Bogomolov::Infeasible),
                    Some("orbifold Bogomolov bound".to_string()),
                )
            } else if hunt_excluded(t) {
                (
                    Some(Bogomolov::Infeasible),
                    Some("hunt step at the central curve of [2;[2],[3],[5]]".to_string()),
                )
            } else {
                (Some(Bogomolov::NotExcluded), None)
            }
        }
    };
    Ok(FeasibilityReport {
        type_notation: format_dynkin(t),
        vertex_count: n,
        ktilde_sq: 9 - n as i64,
        k_sq: anticanonical_selfint(t)?,
        index: cartier_index(t)?,
        klt,
        negative_definite: true,
        bogomolov,
        bogomolov_mode: mode,
        bogomolov_sum: sum,
        bound_violated,
        exclusion_reason,
        note: "K~^2 = 9 - n assumes a rational minimal resolution of Picard rank n + 1".into(),
    })
}

/// p > r(r − 1)·K².
pub fn kv_vanishing_bound(p: u64, r: u64, k_sq: &Q) -> bool {
    let rr = BigInt::from(r) * BigInt::from(r.saturating_sub(1));
    Q::from_integer(BigInt::from(p)) > Q::from_integer(rr) * k_sq
}

/// The positive n with g = (K²/2)·n(n − 1) + 1, if any.
pub fn genus_constraint_solvable(g: u64, k_sq: &Q) -> Option<u64> {
    if !k_sq.is_positive() {
        return None;
    }
    let target = Q::from_integer(BigInt::from(g) - 1);
    let mut n: u64 = 1;
    loop {
        let v = k_sq * Q::from_integer(BigInt::from(n * (n - 1))) / qi(2);
        if v == target {
            return Some(n);
        }
        if v > target {
            return None;
        }
        n += 1;
        if n.to_u32().is_none() {
            return None;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn report(s: &str) -> FeasibilityReport {
        feasibility_report_with(&parse_dynkin(s).unwrap(), BogomolovMode::Transcribed).unwrap()
    }

    #[test]
    fn group_orders() {
        let ord = |s: &str| local_group_order(&parse_dynkin(s).unwrap().components()[0]).unwrap();
        assert_eq!(ord("[2;[2,2],[2,2],[2]]"), Some(BigInt::from(24)));
        assert_eq!(ord("[2;[2],[2],[2]]"), Some(BigInt::from(8)));
        assert_eq!(ord("[2;[2],[2,2],[2,2,2,2]]"), Some(BigInt::from(120)));
        assert_eq!(ord("[2;[2],[3],[5]]"), Some(BigInt::from(3480)));
        assert_eq!(ord("[2;[3],[3],[3]]"), None);
        assert_eq!(ord("[2,4]"), Some(BigInt::from(7)));
    }

    #[test]
    fn reports() {
        let r = report("2[2^4]+[2]+[3]+[5]");
        assert_eq!(r.bogomolov, Some(Bogomolov::Infeasible));
        assert!(r.bound_violated);
        let r = report("2[2^4]+[3]");
        assert_eq!(
            (r.bogomolov, r.k_sq.clone(), r.index.clone()),
            (Some(Bogomolov::NotExcluded), q(1, 3), BigInt::from(3))
        );
        let r = report("2[2^4]+[2,4]");
        assert_eq!(
            (r.bogomolov, r.k_sq.clone(), r.index.clone()),
            (Some(Bogomolov::NotExcluded), q(1, 7), BigInt::from(7))
        );
        let r = report("2[2^4]+[2;[2],[3],[5]]");
        assert_eq!(r.bogomolov, Some(Bogomolov::Infeasible));
        assert!(!r.bound_violated);
        assert_eq!(r.ktilde_sq, -3);
        let r = report("[2;[3],[3],[3]]");
        assert!(!r.klt);
        assert_eq!(r.bogomolov_sum, qi(1));
    }

    #[test]
    fn pinned_lookup() {
        let p = |s: &str| pinned_bogomolov(&parse_dynkin(s).unwrap());
        assert_eq!(p("2[2^4]+[3]"), Some(Bogomolov::NotExcluded));
        assert_eq!(p("2[2^4]+[2]+[3]+[5]"), Some(Bogomolov::Infeasible));
        assert_eq!(p("[2^4]"), None);
    }

    #[test]
    fn kv_and_genus() {
        assert!(kv_vanishing_bound(5, 3, &q(1, 3)));
        assert!(!kv_vanishing_bound(5, 7, &q(1, 7)));
        assert!(kv_vanishing_bound(2, 1, &qi(1000)));
        assert_eq!(genus_constraint_solvable(5, &qi(5)), None);
        assert_eq!(genus_constraint_solvable(1, &qi(5)), Some(1));
        assert_eq!(genus_constraint_solvable(6, &qi(5)), Some(2));
    }
}
