//! Exact rationals on top of `num-rational`, plus "p/q" string serialization.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

pub type Q = BigRational;

pub fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Parses "p/q" or "p".
pub fn parse_q(s: &str) -> Option<Q> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Q::new(n, d))
            }
        }
        None => s.parse::<BigInt>().ok().map(Q::from_integer),
    }
}

pub fn fmt_q(x: &Q) -> String {
    x.to_string()
}

pub fn fmt_qs(xs: &[Q]) -> Vec<String> {
    xs.iter().map(fmt_q).collect()
}

pub fn lcm_of_denominators<'a>(xs: impl IntoIterator<Item = &'a Q>) -> BigInt {
    xs.into_iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

pub fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).fold(Q::zero(), |acc, (x, y)| acc + x * y)
}

pub fn is_nonneg(x: &Q) -> bool {
    !x.is_negative()
}

pub fn ser_q<S: Serializer>(x: &Q, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&fmt_q(x))
}

pub fn ser_qs<S: Serializer>(xs: &[Q], s: S) -> std::result::Result<S::Ok, S::Error> {
    fmt_qs(xs).serialize(s)
}

pub fn ser_opt_q<S: Serializer>(x: &Option<Q>, s: S) -> std::result::Result<S::Ok, S::Error> {
    x.as_ref().map(fmt_q).serialize(s)
}

pub fn ser_bigint<S: Serializer>(x: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formats_canonically() {
        assert_eq!(fmt_q(&q(2, -4)), "-1/2");
        assert_eq!(fmt_q(&q(6, 3)), "2");
        assert_eq!(parse_q(" 28/29 "), Some(q(28, 29)));
        assert_eq!(parse_q("-3"), Some(qi(-3)));
        assert_eq!(parse_q("1/0"), None);
    }

    #[test]
    fn denominators() {
        let xs = [q(2, 7), q(4, 7), q(1, 3)];
        assert_eq!(lcm_of_denominators(&xs), BigInt::from(21));
    }
}
