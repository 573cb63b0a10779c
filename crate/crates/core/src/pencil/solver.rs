//! Zero-dimensional systems in two affine variables.
//!
//! The first variable is eliminated by resultants; the gcd in the second
//! variable is then taken over 𝔽[u]/(g) for the squarefree eliminant g,
//! splitting g whenever a leading coefficient turns out to be a zero divisor.
//! Each resulting component (g_k, h_k) stands for deg g_k · deg h_k distinct
//! points over the algebraic closure.

use super::field::Field;
use super::poly::{resultant, Poly};
use super::upoly::UPoly;

/// Polynomial in v with coefficients in 𝔽[u]/(g), low to high.
type RPoly<F> = Vec<UPoly<F>>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component<F: Field> {
    /// Squarefree, monic, in u.
    pub g: UPoly<F>,
    /// Squarefree and monic in v over 𝔽[u]/(g).
    pub h: Vec<UPoly<F>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Solutions<F: Field> {
    Finite(Vec<Component<F>>),
    /// The polynomials share a curve.
    Infinite,
}

impl<F: Field> Solutions<F> {
    /// Number of points over the algebraic closure; None if infinite.
    pub fn count(&self) -> Option<usize> {
        match self {
            Solutions::Infinite => None,
            Solutions::Finite(cs) => Some(
                cs.iter()
                    .map(|c| c.g.deg().unwrap_or(0) * (c.h.len() - 1))
                    .sum(),
            ),
        }
    }

    /// The points as (u, v) if every one of them is rational over the field.
    pub fn rational_points(&self) -> Option<Vec<(F, F)>> {
        let Solutions::Finite(cs) = self else {
            return None;
        };
        let mut out = vec![];
        for c in cs {
            if c.h.len() < 2 {
                continue;
            }
            if c.g.deg() != Some(1) || c.h.len() != 2 {
                return None;
            }
            let u0 = c.g.coeff(0).neg();
            let v0 = c.h[0].eval(&u0).neg();
            out.push((u0, v0));
        }
        Some(out)
    }
}

fn reduce<F: Field>(p: &RPoly<F>, g: &UPoly<F>) -> RPoly<F> {
    let mut r: RPoly<F> = p.iter().map(|c| c.rem(g)).collect();
    while r.last().is_some_and(|c| c.is_zero()) {
        r.pop();
    }
    r
}

fn scale_r<F: Field>(p: &RPoly<F>, k: &UPoly<F>, g: &UPoly<F>) -> RPoly<F> {
    reduce(&p.iter().map(|c| c.mul(k)).collect(), g)
}

/// a mod b for monic b, coefficients mod g.
fn rem_r<F: Field>(a: &RPoly<F>, b: &RPoly<F>, g: &UPoly<F>) -> RPoly<F> {
    let mut r = a.clone();
    let db = b.len() - 1;
    while r.len() > db {
        let k = r.len() - 1 - db;
        let f = r.last().unwrap().clone();
        for (i, c) in b.iter().enumerate() {
            r[k + i] = r[k + i].sub(&f.mul(c)).rem(g);
        }
        r = reduce(&r, g);
    }
    r
}

fn div_exact_r<F: Field>(a: &RPoly<F>, b: &RPoly<F>, g: &UPoly<F>) -> RPoly<F> {
    let mut r = a.clone();
    let db = b.len() - 1;
    let mut q = vec![UPoly::zero(g.ctx()); a.len().saturating_sub(db)];
    while r.len() > db {
        let k = r.len() - 1 - db;
        let f = r.last().unwrap().clone();
        for (i, c) in b.iter().enumerate() {
            r[k + i] = r[k + i].sub(&f.mul(c)).rem(g);
        }
        q[k] = f;
        r = reduce(&r, g);
    }
    debug_assert!(r.is_empty(), "exact division over the quotient ring");
    q
}

/// Makes p monic over 𝔽[u]/(g), splitting g where the leading coefficient is
/// a zero divisor.
fn make_monic<F: Field>(g: &UPoly<F>, p: &RPoly<F>) -> Vec<(UPoly<F>, RPoly<F>)> {
    let p = reduce(p, g);
    let Some(lc) = p.last() else {
        return vec![(g.clone(), p)];
    };
    let (d, inv) = lc.gcd_inv(g);
    if d.deg() == Some(0) {
        return vec![(g.clone(), scale_r(&p, &inv, g))];
    }
    let g2 = g.exact_div(&d).expect("gcd divides");
    let mut out = make_monic(&d, &p);
    out.extend(make_monic(&g2, &p));
    out
}

/// Monic gcd over 𝔽[u]/(g) with splitting; the empty vector means zero.
fn gcd_r<F: Field>(g: &UPoly<F>, a: &RPoly<F>, b: &RPoly<F>) -> Vec<(UPoly<F>, RPoly<F>)> {
    let mut a = reduce(a, g);
    let mut b = reduce(b, g);
    loop {
        if b.is_empty() {
            return make_monic(g, &a);
        }
        let lc = b.last().unwrap().clone();
        let (d, inv) = lc.gcd_inv(g);
        if d.deg() != Some(0) {
            let g2 = g.exact_div(&d).expect("gcd divides");
            let mut out = gcd_r(&d, &a, &b);
            out.extend(gcd_r(&g2, &a, &b));
            return out;
        }
        b = scale_r(&b, &inv, g);
        let r = rem_r(&a, &b, g);
        a = b;
        b = r;
    }
}

fn derivative_r<F: Field>(p: &RPoly<F>, g: &UPoly<F>) -> RPoly<F> {
    let ctx = g.ctx();
    reduce(
        &p.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.scale(&ctx.from_i64(i as i64)))
            .collect(),
        g,
    )
}

fn to_rpoly<F: Field>(p: &Poly<F>, u: usize, v: usize) -> RPoly<F> {
    p.coeffs_in(v).iter().map(|c| c.to_upoly(u)).collect()
}

/// Common zeros of `polys`, which may involve only vars u and v.
pub fn solve2<F: Field>(polys: &[Poly<F>], u: usize, v: usize) -> Solutions<F> {
    let ctx = polys[0].ctx().clone();
    let nz: Vec<&Poly<F>> = polys.iter().filter(|p| !p.is_zero()).collect();
    if nz.is_empty() {
        return Solutions::Infinite;
    }
    let mut g = UPoly::zero(&ctx);
    if nz.len() == 1 {
        return if nz[0].is_constant() {
            Solutions::Finite(vec![])
        } else {
            Solutions::Infinite
        };
    }
    for i in 0..nz.len() {
        for j in i + 1..nz.len() {
            g = g.gcd(&resultant(nz[i], nz[j], v).to_upoly(u));
        }
    }
    if g.is_zero() {
        return Solutions::Infinite;
    }
    let g = g.rad();
    if g.is_constant() {
        return Solutions::Finite(vec![]);
    }
    let mut parts = vec![(g, to_rpoly(nz[0], u, v))];
    for p in &nz[1..] {
        let rp = to_rpoly(p, u, v);
        parts = parts
            .into_iter()
            .flat_map(|(gk, h)| gcd_r(&gk, &h, &rp))
            .collect();
    }
    let mut comps = vec![];
    for (gk, h) in parts {
        if h.is_empty() {
            return Solutions::Infinite;
        }
        if h.len() == 1 {
            continue;
        }
        let dh = derivative_r(&h, &gk);
        for (gj, c) in gcd_r(&gk, &h, &dh) {
            let hj = reduce(&h, &gj);
            let sq = if c.is_empty() {
                hj
            } else {
                div_exact_r(&hj, &c, &gj)
            };
            comps.push(Component { g: gj, h: sq });
        }
    }
    Solutions::Finite(comps)
}

/// Number of distinct roots of the common gcd of univariate polynomials, over
/// the algebraic closure; None if all vanish.
pub fn solve1<F: Field>(polys: &[UPoly<F>]) -> Option<(usize, UPoly<F>)> {
    let ctx = polys[0].ctx().clone();
    let g = polys.iter().fold(UPoly::zero(&ctx), |acc, p| acc.gcd(p));
    if g.is_zero() {
        return None;
    }
    let r = g.rad();
    Some((r.deg().unwrap_or(0), r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pencil::field::{Fp, Rat};

    #[test]
    fn circle_and_line() {
        let c = Rat::new(0, 1);
        let v = Poly::gens(&["x", "y"], &c);
        let (x, y) = (&v[0], &v[1]);
        let circle = x.mul(x).add(&y.mul(y)).sub(&x.int(1));
        // x = y meets the circle in two irrational points
        let s = solve2(&[circle.clone(), x.sub(y)], 0, 1);
        assert_eq!(s.count(), Some(2));
        assert_eq!(s.rational_points(), None);
        // tangent line y = 1
        let s = solve2(&[circle.clone(), y.sub(&x.int(1))], 0, 1);
        assert_eq!(s.count(), Some(1));
        assert_eq!(s.rational_points(), Some(vec![(c.zero(), c.one())]));
        // two points sharing the same x: x = 0
        let s = solve2(&[circle.clone(), x.clone()], 0, 1);
        assert_eq!(s.count(), Some(2));
        assert_eq!(
            solve2(&[circle.clone(), circle.scale(&c.from_i64(2))], 0, 1),
            Solutions::Infinite
        );
        assert_eq!(
            solve2(&[circle, x.mul(x).add(&y.mul(y)).sub(&x.int(4))], 0, 1).count(),
            Some(0)
        );
    }

    #[test]
    fn splitting_on_zero_divisors() {
        let c = Fp::new(0, 7);
        let v = Poly::gens(&["x", "y"], &c);
        let (x, y) = (&v[0], &v[1]);
        // x(x−1) = 0 and x·y + (x−1)(y² − 2) = 0: over x = 0, y² = 2 (two
        // points); over x = 1, y = 0 (one point)
        let f = x.mul(&x.sub(&x.int(1)));
        let g = x
            .mul(y)
            .add(&x.sub(&x.int(1)).mul(&y.mul(y).sub(&x.int(2))));
        assert_eq!(solve2(&[f, g], 0, 1).count(), Some(3));
    }
}
