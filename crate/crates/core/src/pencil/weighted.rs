//! Members of |−2K| and |−3K| on the degree-6 hypersurface
//! F = y² − (x³ + 2t⁴x + 4s⁵t + 2t⁶) in ℙ(1,1,2,3) over 𝔽_5.

use serde::Serialize;

use super::field::{Field, Fp};
use super::poly::{binary_is_squarefree, Poly};
use super::solver::{solve1, solve2};
use crate::error::{LdpError, Result};

pub const WEIGHTS: [u32; 4] = [1, 1, 2, 3];
const VARS: [&str; 4] = ["s", "t", "x", "y"];
const S: usize = 0;
const T: usize = 1;
const X: usize = 2;
const Y: usize = 3;

fn ctx() -> Fp {
    Fp::new(0, 5)
}

fn gens() -> Vec<Poly<Fp>> {
    Poly::gens(&VARS, &ctx())
        .into_iter()
        .map(|p| p.with_weights(&WEIGHTS))
        .collect()
}

pub fn hypersurface() -> Poly<Fp> {
    let v = gens();
    let (s, t, x, y) = (&v[S], &v[T], &v[X], &v[Y]);
    let n = |k: i64| s.int(k);
    let rhs = x
        .pow(3)
        .add(&n(2).mul(&t.pow(4)).mul(x))
        .add(&n(4).mul(&s.pow(5)).mul(t))
        .add(&n(2).mul(&t.pow(6)));
    y.mul(y).sub(&rhs)
}

/// D₂ = x − t(s + 2t) and D₃ = y − t(x + t² + st + 3s²).
pub fn member(i: u32) -> Result<Poly<Fp>> {
    let v = gens();
    let (s, t, x, y) = (&v[S], &v[T], &v[X], &v[Y]);
    match i {
        2 => Ok(x.sub(&t.mul(&s.add(&t.scale(&s.ctx().from_i64(2)))))),
        3 => {
            let inner = x
                .add(&t.mul(t))
                .add(&s.mul(t))
                .add(&s.mul(s).scale(&s.ctx().from_i64(3)));
            Ok(y.sub(&t.mul(&inner)))
        }
        _ => Err(LdpError::UnsupportedConfiguration),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightedReport {
    pub i: u32,
    pub degree: Option<u32>,
    pub degree_ok: bool,
    /// Points of {F = D = t = 0}; None if some are not 𝔽_5-rational.
    pub support_points: Option<Vec<[String; 4]>>,
    pub support_ok: bool,
    pub smooth: bool,
}

/// Common zeros of `polys` on {t = 0} ⊂ ℙ(1,1,2,3), in the charts s = 1,
/// then s = 0 with x = 1, then [0:0:0:1].
fn support_on_t0(polys: &[Poly<Fp>]) -> Option<Vec<[String; 4]>> {
    let c = ctx();
    let on_t0: Vec<Poly<Fp>> = polys.iter().map(|p| p.eval_var(T, &c.zero())).collect();
    let mut pts = vec![];
    let aff: Vec<Poly<Fp>> = on_t0.iter().map(|p| p.eval_var(S, &c.one())).collect();
    for (x, y) in solve2(&aff, X, Y).rational_points()? {
        pts.push(["1".into(), "0".into(), x.to_string(), y.to_string()]);
    }
    let at_inf: Vec<_> = on_t0
        .iter()
        .map(|p| p.eval_var(S, &c.zero()).eval_var(X, &c.one()).to_upoly(Y))
        .collect();
    match solve1(&at_inf) {
        Some((0, _)) => {}
        _ => return None,
    }
    let corner = on_t0.iter().all(|p| {
        p.eval_var(S, &c.zero())
            .eval_var(X, &c.zero())
            .eval_var(Y, &c.one())
            .is_zero()
    });
    if corner {
        pts.push(["0".into(), "0".into(), "0".into(), "1".into()]);
    }
    Some(pts)
}

/// Whether {F = D₂ = 0}, i.e. y² = h(s,t), has squarefree branch sextic h.
fn smooth_d2() -> bool {
    let f = hypersurface();
    let v = gens();
    let d2x = v[T].mul(&v[S].add(&v[T].scale(&ctx().from_i64(2))));
    let g = f.subst(X, &d2x);
    // g = y² − h
    let h = v[Y].mul(&v[Y]).sub(&g);
    let st = Poly::zero(&["s", "t"], &ctx());
    let mut h2 = st.clone();
    for (e, c) in h.terms() {
        h2 = h2.add(&st.monomial(vec![e[S], e[T]], *c));
    }
    h2.homogeneous_degree() == Some(6) && binary_is_squarefree(&h2)
}

/// Whether {F = D₃ = 0}, i.e. G(s,t,x) = 0 in ℙ(1,1,2), is smooth: no common
/// zero of G and its partials in the charts s = 1 and t = 1, and G ≠ 0 at
/// [0:0:1].
fn smooth_d3() -> bool {
    let c = ctx();
    let v = gens();
    let inner = v[X]
        .add(&v[T].mul(&v[T]))
        .add(&v[S].mul(&v[T]))
        .add(&v[S].mul(&v[S]).scale(&c.from_i64(3)));
    let g = hypersurface().subst(Y, &v[T].mul(&inner));
    let chart = |fix: usize, free: usize| -> bool {
        let sys: Vec<Poly<Fp>> = [g.clone(), g.partial(free), g.partial(X)]
            .iter()
            .map(|p| p.eval_var(fix, &c.one()))
            .collect();
        solve2(&sys, free, X).count() == Some(0)
    };
    let apex = g
        .eval_var(S, &c.zero())
        .eval_var(T, &c.zero())
        .eval_var(X, &c.one());
    chart(S, T) && chart(T, S) && !apex.is_zero()
}

pub fn weighted_member_check(i: u32) -> Result<WeightedReport> {
    let d = member(i)?;
    let degree = d.weighted_degree(&WEIGHTS);
    let f = hypersurface();
    let support_points = support_on_t0(&[f, d]);
    let support_ok = support_points.as_deref()
        == Some(&[["1".to_string(), "0".into(), "0".into(), "0".into()]][..]);
    let smooth = if i == 2 { smooth_d2() } else { smooth_d3() };
    Ok(WeightedReport {
        i,
        degree,
        degree_ok: degree == Some(i),
        support_points,
        support_ok,
        smooth,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn model_is_sextic() {
        assert_eq!(hypersurface().weighted_degree(&WEIGHTS), Some(6));
        let cusp = hypersurface().eval_var(T, &ctx().zero());
        let v = gens();
        assert_eq!(cusp, v[Y].mul(&v[Y]).sub(&v[X].pow(3)));
    }

    #[test]
    fn both_members_pass() {
        for i in [2, 3] {
            let r = weighted_member_check(i).unwrap();
            assert!(r.degree_ok && r.support_ok && r.smooth, "{r:?}");
        }
        assert!(weighted_member_check(4).is_err());
    }

    #[test]
    fn singular_member_is_caught() {
        // x = 0 gives the branch sextic t(4s⁵ + 2t⁵) = 4t(s + 3t)⁵ over 𝔽_5
        let f = hypersurface();
        let v = gens();
        let h = v[Y].mul(&v[Y]).sub(&f.eval_var(X, &ctx().zero()));
        let st = Poly::zero(&["s", "t"], &ctx());
        let mut h2 = st.clone();
        for (e, c) in h.terms() {
            h2 = h2.add(&st.monomial(vec![e[S], e[T]], *c));
        }
        assert!(!binary_is_squarefree(&h2));
    }
}
