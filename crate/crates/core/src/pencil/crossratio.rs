//! Cross ratios of the four roots of st(t² + 11st − s²) in ℚ(θ),
//! θ² + 11θ − 1 = 0.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::field::{Field, Quad, Rat};
use crate::error::{LdpError, Result};
use crate::rational::Q;

/// a·x² + b·x + c with integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct IntQuadratic {
    #[serde(serialize_with = "crate::rational::ser_bigint")]
    pub a: BigInt,
    #[serde(serialize_with = "crate::rational::ser_bigint")]
    pub b: BigInt,
    #[serde(serialize_with = "crate::rational::ser_bigint")]
    pub c: BigInt,
}

impl IntQuadratic {
    pub fn new(a: i64, b: i64, c: i64) -> Self {
        IntQuadratic {
            a: a.into(),
            b: b.into(),
            c: c.into(),
        }
    }

    /// Clears denominators of a monic x² + p·x + q, content 1, a > 0.
    pub fn from_monic(p: &Q, q: &Q) -> Self {
        let l = p.denom().lcm(q.denom());
        let (mut a, mut b, mut c) = (
            l.clone(),
            (p * Q::from_integer(l.clone())).to_integer(),
            (q * Q::from_integer(l)).to_integer(),
        );
        let g = a.gcd(&b).gcd(&c);
        a /= &g;
        b /= &g;
        c /= &g;
        IntQuadratic { a, b, c }
    }

    pub fn discriminant(&self) -> BigInt {
        &self.b * &self.b - BigInt::from(4) * &self.a * &self.c
    }

    /// Rational-root test via the discriminant.
    pub fn is_irreducible(&self) -> bool {
        let d = self.discriminant();
        d.is_negative() || d.sqrt().pow(2) != d
    }
}

impl std::fmt::Display for IntQuadratic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let term = |c: &BigInt, mono: &str, first: bool| -> String {
            if c.is_zero() {
                return String::new();
            }
            let sign = match (c.is_negative(), first) {
                (true, true) => "-",
                (true, false) => " - ",
                (false, true) => "",
                (false, false) => " + ",
            };
            let m = c.abs();
            let body = if m.is_one() && !mono.is_empty() {
                mono.to_string()
            } else {
                format!("{m}{mono}")
            };
            format!("{sign}{body}")
        };
        write!(
            f,
            "{}{}{}",
            term(&self.a, "x^2", true),
            term(&self.b, "x", false),
            term(&self.c, "", false)
        )
    }
}

pub type Point = [Quad<Rat>; 2];

/// The points [1:0], [0:1], [1:θ], [1:θ̄] of ℙ¹ in coordinates [s:t].
pub fn locus_points() -> Vec<Point> {
    let m = Quad::modulus(Rat::new(11, 1), Rat::new(-1, 1));
    let th = Quad::theta(&m);
    let (o, z) = (th.one(), th.zero());
    vec![
        [o.clone(), z.clone()],
        [z, o.clone()],
        [o.clone(), th.clone()],
        [o, th.conj()],
    ]
}

fn bracket(p: &Point, q: &Point) -> Quad<Rat> {
    p[0].mul(&q[1]).sub(&q[0].mul(&p[1]))
}

/// Image of p4 under the Möbius map sending p1, p2, p3 to 0, 1, ∞.
pub fn cross_ratio(p1: &Point, p2: &Point, p3: &Point, p4: &Point) -> Quad<Rat> {
    bracket(p4, p1)
        .mul(&bracket(p2, p3))
        .div(&bracket(p4, p3).mul(&bracket(p2, p1)))
}

/// Minimal polynomials over ℚ of the irrational cross ratios, over all 24
/// orderings of `points`.
pub fn minimal_polynomials_of(points: &[Point]) -> BTreeSet<IntQuadratic> {
    let mut out = BTreeSet::new();
    let idx = [0usize, 1, 2, 3];
    for a in idx {
        for b in idx {
            for c in idx {
                for d in idx {
                    let set: BTreeSet<usize> = [a, b, c, d].into_iter().collect();
                    if set.len() < 4 {
                        continue;
                    }
                    let l = cross_ratio(&points[a], &points[b], &points[c], &points[d]);
                    if l.b.is_zero() {
                        continue;
                    }
                    out.insert(IntQuadratic::from_monic(&(-l.trace().0), &l.norm().0));
                }
            }
        }
    }
    out
}

pub fn cross_ratio_minimal_polynomials() -> Vec<IntQuadratic> {
    minimal_polynomials_of(&locus_points())
        .into_iter()
        .collect()
}

/// The squarefree d with n = d·m², sign kept.
pub fn squarefree_core(n: &BigInt) -> Result<BigInt> {
    if n.is_zero() {
        return Err(LdpError::ZeroInput);
    }
    let mut m = n.abs();
    let mut d = BigInt::one();
    let mut p = BigInt::from(2);
    while &p * &p <= m {
        let mut k = 0u32;
        while (&m % &p).is_zero() {
            m /= &p;
            k += 1;
        }
        if k % 2 == 1 {
            d *= &p;
        }
        p += 1;
    }
    d *= m;
    Ok(if n.is_negative() { -d } else { d })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_quadratics() {
        let got = cross_ratio_minimal_polynomials();
        let mut want = vec![
            IntQuadratic::new(1, 123, 1),
            IntQuadratic::new(1, -125, 125),
            IntQuadratic::new(125, -125, 1),
        ];
        want.sort();
        assert_eq!(got, want);
        for q in &got {
            assert!(q.is_irreducible());
            assert_eq!(q.discriminant(), BigInt::from(15125));
            assert_eq!(squarefree_core(&q.discriminant()).unwrap(), BigInt::from(5));
        }
    }

    #[test]
    fn orderings_do_not_matter() {
        let pts = locus_points();
        let base = minimal_polynomials_of(&pts);
        let mut perm = pts.clone();
        perm.swap(0, 3);
        perm.swap(1, 2);
        assert_eq!(minimal_polynomials_of(&perm), base);
    }

    #[test]
    fn negated_parameter_orbit() {
        // the orbit of −α under λ ↦ 1/λ, 1 − λ, … gives the sign-flipped family
        let pts = locus_points();
        // α = θ̄/θ sends 0, θ, ∞ to 0, 1, ∞
        let alpha = cross_ratio(&pts[0], &pts[2], &pts[1], &pts[3]).neg();
        let one = alpha.one();
        let orbit = [
            alpha.clone(),
            one.sub(&alpha),
            one.div(&alpha),
            one.div(&one.sub(&alpha)),
            alpha.div(&alpha.sub(&one)),
            alpha.sub(&one).div(&alpha),
        ];
        let set: BTreeSet<IntQuadratic> = orbit
            .iter()
            .map(|l| IntQuadratic::from_monic(&(-l.trace().0), &l.norm().0))
            .collect();
        let want: BTreeSet<IntQuadratic> = [
            IntQuadratic::new(1, -123, 1),
            IntQuadratic::new(121, -121, -1),
            IntQuadratic::new(1, 121, -121),
        ]
        .into_iter()
        .collect();
        assert_eq!(set, want);
    }

    #[test]
    fn cores() {
        assert_eq!(squarefree_core(&BigInt::from(49)).unwrap(), BigInt::from(1));
        assert_eq!(
            squarefree_core(&BigInt::from(-20)).unwrap(),
            BigInt::from(-5)
        );
        assert_eq!(squarefree_core(&BigInt::from(0)), Err(LdpError::ZeroInput));
    }
}
