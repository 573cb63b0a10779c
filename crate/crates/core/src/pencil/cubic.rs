//! The cubic pencil C = s·C₀ + t·C∞ with C₀ = (Y² − Z²)(X + Y) and
//! C∞ = (X² − Z²)(Y − X), through a = [−1:1:1], b = [−1:−1:1], c = [1:−1:1],
//! d = [1:1:1] and [0:0:1].

use serde::Serialize;

use super::field::{is_prime, Field, Fp, Rat};
use super::poly::{binary_gcd, binary_lcm, binary_rad, resultant, Poly, PolyJson};
use super::solver::{solve1, solve2};
use super::upoly::UPoly;
use crate::error::{LdpError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "p")]
pub enum FieldSpec {
    Rationals,
    PrimeField(u64),
}

impl FieldSpec {
    /// 0 for ℚ; otherwise validated prime.
    pub fn parse(p: u64) -> Result<FieldSpec> {
        match p {
            0 => Ok(FieldSpec::Rationals),
            p if is_prime(p) => Ok(FieldSpec::PrimeField(p)),
            p => Err(LdpError::NotPrime(p)),
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) => *p,
        }
    }
}

/// A polynomial over whichever field was requested.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyPoly {
    Rational(Poly<Rat>),
    Prime(Poly<Fp>),
}

impl AnyPoly {
    pub fn to_json(&self) -> PolyJson {
        match self {
            AnyPoly::Rational(p) => p.to_json(),
            AnyPoly::Prime(p) => p.to_json(),
        }
    }
}

impl std::fmt::Display for AnyPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AnyPoly::Rational(p) => p.fmt(f),
            AnyPoly::Prime(p) => p.fmt(f),
        }
    }
}

/// Reduction mod p of a polynomial with p-integral coefficients.
pub fn reduce_mod(f: &Poly<Rat>, p: u64) -> Option<Poly<Fp>> {
    let ctx = Fp::new(0, p);
    f.map_coeffs(&ctx, |c| Fp::from_q(&c.0, p))
}

const VARS: [&str; 5] = ["s", "t", "X", "Y", "Z"];

/// s·C₀ + t·C∞ in vars (s, t, X, Y, Z).
pub fn pencil<F: Field>(ctx: &F) -> Poly<F> {
    let v = Poly::gens(&VARS, ctx);
    let (s, t, x, y, z) = (&v[0], &v[1], &v[2], &v[3], &v[4]);
    let c0 = y.mul(y).sub(&z.mul(z)).mul(&x.add(y));
    let cinf = x.mul(x).sub(&z.mul(z)).mul(&y.sub(x));
    s.mul(&c0).add(&t.mul(&cinf))
}

/// The four doubled base points and the simple one.
pub fn base_points<F: Field>(ctx: &F) -> Vec<[F; 3]> {
    let n = |k: i64| ctx.from_i64(k);
    vec![
        [n(-1), n(1), n(1)],
        [n(-1), n(-1), n(1)],
        [n(1), n(-1), n(1)],
        [n(1), n(1), n(1)],
        [n(0), n(0), n(1)],
    ]
}

fn reject_small_char(ch: u64) -> Result<()> {
    if ch == 2 || ch == 3 {
        return Err(LdpError::BadCharacteristic(ch));
    }
    Ok(())
}

/// Reduced binary form in (s, t) vanishing exactly at the singular members,
/// monic in lex order s > t.
pub fn singular_locus<F: Field>(ctx: &F) -> Result<Poly<F>> {
    reject_small_char(ctx.characteristic())?;
    let c = pencil(ctx);
    let partials: Vec<Poly<F>> = (2..5).map(|i| c.partial(i)).collect();
    let mut locus: Option<Poly<F>> = None;
    for chart in 2..5 {
        let ps: Vec<Poly<F>> = partials
            .iter()
            .map(|p| p.eval_var(chart, &ctx.one()))
            .collect();
        let others: Vec<usize> = (2..5).filter(|&i| i != chart).collect();
        let (u, v) = (others[0], others[1]);
        let r: Vec<Poly<F>> = [(0, 1), (0, 2), (1, 2)]
            .iter()
            .map(|&(i, j)| resultant(&ps[i], &ps[j], v))
            .collect();
        let mut chart_locus: Option<Poly<F>> = None;
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            let res = resultant(&r[i], &r[j], u);
            if res.is_zero() {
                continue;
            }
            chart_locus = Some(match chart_locus {
                None => res.monic(),
                Some(acc) => binary_gcd(&acc, &res),
            });
        }
        if let Some(cl) = chart_locus {
            locus = Some(match locus {
                None => cl,
                Some(acc) => binary_lcm(&acc, &cl),
            });
        }
    }
    let locus = locus.expect("some chart eliminates");
    // drop the coordinate variables, which no longer occur
    let st = Poly::zero(&["s", "t"], ctx);
    let mut out = st.clone();
    for (e, x) in locus.terms() {
        debug_assert!(e[2..].iter().all(|&k| k == 0));
        out = out.add(&st.monomial(vec![e[0], e[1]], x.clone()));
    }
    Ok(binary_rad(&out))
}

pub fn pencil_singular_locus(field: FieldSpec) -> Result<AnyPoly> {
    match field {
        FieldSpec::Rationals => Ok(AnyPoly::Rational(singular_locus(&Rat::new(0, 1))?)),
        FieldSpec::PrimeField(p) => Ok(AnyPoly::Prime(singular_locus(&Fp::new(0, p))?)),
    }
}

/// Whether t² + 11t − 1 has a repeated root over the field, by gcd with its
/// derivative.
pub fn quadratic_factor_double_root(field: FieldSpec) -> bool {
    fn go<F: Field>(ctx: &F) -> bool {
        let q = UPoly::from_i64s(&[-1, 11, 1], ctx);
        !q.gcd(&q.derivative()).is_constant()
    }
    match field {
        FieldSpec::Rationals => go(&Rat::new(0, 1)),
        FieldSpec::PrimeField(p) => go(&Fp::new(0, p)),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SingularKind {
    Node,
    Cusp,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SingularMemberReport {
    pub parameter: [String; 2],
    pub point: [String; 3],
    pub kind: SingularKind,
}

/// Singular points of the member [s:t], counted over the algebraic closure,
/// and the point itself when it is unique.
fn singular_points<F: Field>(s: &F, t: &F) -> (usize, Option<[F; 3]>) {
    let c = pencil(s).eval_var(0, s).eval_var(1, t);
    let grad: Vec<Poly<F>> = (2..5).map(|i| c.partial(i)).collect();
    let one = s.one();
    let zero = s.zero();
    // Z = 1
    let aff: Vec<Poly<F>> = grad.iter().map(|p| p.eval_var(4, &one)).collect();
    let sol = solve2(&aff, 2, 3);
    let Some(n_aff) = sol.count() else {
        return (usize::MAX, None);
    };
    // Z = 0, Y = 1
    let inf: Vec<UPoly<F>> = grad
        .iter()
        .map(|p| p.eval_var(4, &zero).eval_var(3, &one).to_upoly(2))
        .collect();
    let (n_inf, r_inf) = match solve1(&inf) {
        Some(x) => x,
        None => return (usize::MAX, None),
    };
    // [1:0:0]
    let corner = grad.iter().all(|p| {
        p.eval_var(2, &one)
            .eval_var(3, &zero)
            .eval_var(4, &zero)
            .is_zero()
    });
    let total = n_aff + n_inf + corner as usize;
    if total != 1 {
        return (total, None);
    }
    let pt = if n_aff == 1 {
        let (x, y) = sol.rational_points().expect("a lone point is rational")[0].clone();
        [x, y, one]
    } else if n_inf == 1 {
        [r_inf.coeff(0).neg(), one, zero]
    } else {
        [one, zero.clone(), zero]
    };
    (1, Some(pt))
}

/// Node or cusp by the Hessian of the local equation at the singular point.
pub fn classify_member<F: Field>(s: &F, t: &F) -> Result<SingularMemberReport> {
    reject_small_char(s.characteristic())?;
    let (n, pt) = singular_points(s, t);
    let pt = match (n, pt) {
        (0, _) => return Err(LdpError::NotSingularMember),
        (1, Some(p)) => p,
        (usize::MAX, _) => return Err(LdpError::MultipleSingularPoints("infinitely many".into())),
        (k, _) => return Err(LdpError::MultipleSingularPoints(k.to_string())),
    };
    let c = pencil(s).eval_var(0, s).eval_var(1, t);
    // dehomogenize at a nonzero coordinate
    let k = (0..3)
        .find(|&i| !pt[i].is_zero())
        .expect("projective point");
    let inv = pt[k].inv().expect("nonzero");
    let p: Vec<F> = pt.iter().map(|x| x.mul(&inv)).collect();
    let local = c.eval_var(2 + k, &s.one());
    let free: Vec<usize> = (0..3).filter(|&i| i != k).map(|i| 2 + i).collect();
    let at = |f: &Poly<F>| -> F {
        let mut g = f.clone();
        for &i in &free {
            g = g.eval_var(i, &p[i - 2]);
        }
        g.constant_value().expect("fully evaluated")
    };
    let (a, b) = (free[0], free[1]);
    let fxx = at(&local.partial(a).partial(a));
    let fxy = at(&local.partial(a).partial(b));
    let fyy = at(&local.partial(b).partial(b));
    let det = fxx.mul(&fyy).sub(&fxy.mul(&fxy));
    let kind = if !det.is_zero() {
        SingularKind::Node
    } else if fxx.is_zero() && fxy.is_zero() && fyy.is_zero() {
        return Err(LdpError::DegenerateSingularity);
    } else {
        SingularKind::Cusp
    };
    Ok(SingularMemberReport {
        parameter: [s.to_string(), t.to_string()],
        point: [p[0].to_string(), p[1].to_string(), p[2].to_string()],
        kind,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pencil::field::Quad;

    #[test]
    fn locus_over_q() {
        let l = singular_locus(&Rat::new(0, 1)).unwrap();
        assert_eq!(l.to_string(), "s^3*t - 11*s^2*t^2 - s*t^3");
    }

    #[test]
    fn locus_good_reduction() {
        let l = singular_locus(&Rat::new(0, 1)).unwrap();
        for p in [7, 11, 13] {
            assert_eq!(
                singular_locus(&Fp::new(0, p)).unwrap(),
                reduce_mod(&l, p).unwrap(),
                "p = {p}"
            );
        }
        let l5 = singular_locus(&Fp::new(0, 5)).unwrap();
        // st(t + 3s), the quadratic factor being (t + 3s)²
        assert_eq!(l5.to_string(), "s^2*t + 2*s*t^2");
        assert!(matches!(
            singular_locus(&Fp::new(0, 3)),
            Err(LdpError::BadCharacteristic(3))
        ));
    }

    #[test]
    fn double_root_only_at_five() {
        let hits: Vec<u64> = [2, 5, 7, 11, 13]
            .into_iter()
            .filter(|&p| quadratic_factor_double_root(FieldSpec::PrimeField(p)))
            .collect();
        assert_eq!(hits, vec![5]);
        assert!(!quadratic_factor_double_root(FieldSpec::Rationals));
    }

    #[test]
    fn base_points_on_every_member() {
        let ctx = Fp::new(0, 7);
        let c = pencil(&ctx);
        for pt in base_points(&ctx) {
            let mut g = c.clone();
            for (i, x) in pt.iter().enumerate() {
                g = g.eval_var(2 + i, x);
            }
            assert!(g.is_zero());
        }
    }

    #[test]
    fn classification() {
        let f5 = Fp::new(0, 5);
        let r = classify_member(&f5.one(), &f5.from_i64(2)).unwrap();
        assert_eq!(r.kind, SingularKind::Cusp);
        let q = Rat::new(0, 1);
        assert_eq!(
            classify_member(&q.one(), &q.zero()),
            Err(LdpError::MultipleSingularPoints("3".into()))
        );
        assert_eq!(
            classify_member(&q.one(), &q.one()),
            Err(LdpError::NotSingularMember)
        );
        let m = Quad::modulus(Rat::new(11, 1), Rat::new(-1, 1));
        let th = Quad::theta(&m);
        for root in [th.clone(), th.conj()] {
            assert_eq!(
                classify_member(&th.one(), &root).unwrap().kind,
                SingularKind::Node
            );
        }
        let m7 = Quad::modulus(Fp::new(4, 7), Fp::new(6, 7));
        let th7 = Quad::theta(&m7);
        assert_eq!(
            classify_member(&th7.one(), &th7).unwrap().kind,
            SingularKind::Node
        );
    }
}
