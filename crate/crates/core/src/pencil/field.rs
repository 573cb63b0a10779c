//! Exact fields: ℚ, 𝔽_p and quadratic extensions of either.
//!
//! Elements carry their own context (the prime, the modulus), so constants are
//! produced from an existing element: `x.zero()`, `x.from_i64(3)`.

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::rational::{fmt_q, Q};

pub trait Field: Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Send + Sync {
    fn zero(&self) -> Self;
    fn one(&self) -> Self;
    fn from_i64(&self, n: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Option<Self>;
    fn characteristic(&self) -> u64;
    /// Preimage under Frobenius; only meaningful in positive characteristic.
    fn pth_root(&self) -> Self;

    fn is_one(&self) -> bool {
        self.sub(&self.one()).is_zero()
    }

    fn div(&self, o: &Self) -> Self {
        self.mul(&o.inv().expect("division by zero"))
    }

    fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Rat(pub Q);

impl Rat {
    pub fn new(n: i64, d: i64) -> Rat {
        Rat(crate::rational::q(n, d))
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&fmt_q(&self.0))
    }
}

impl Field for Rat {
    fn zero(&self) -> Self {
        Rat(Q::zero())
    }
    fn one(&self) -> Self {
        Rat(Q::one())
    }
    fn from_i64(&self, n: i64) -> Self {
        Rat(Q::from_integer(n.into()))
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        Rat(&self.0 + &o.0)
    }
    fn sub(&self, o: &Self) -> Self {
        Rat(&self.0 - &o.0)
    }
    fn mul(&self, o: &Self) -> Self {
        Rat(&self.0 * &o.0)
    }
    fn neg(&self) -> Self {
        Rat(-&self.0)
    }
    fn inv(&self) -> Option<Self> {
        (!self.0.is_zero()).then(|| Rat(self.0.recip()))
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn pth_root(&self) -> Self {
        self.clone()
    }
}

/// Residue mod a prime p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    pub v: u64,
    pub p: u64,
}

impl Fp {
    pub fn new(n: i64, p: u64) -> Fp {
        Fp {
            v: n.rem_euclid(p as i64) as u64,
            p,
        }
    }

    pub fn from_q(x: &Q, p: u64) -> Option<Fp> {
        use num_bigint::BigInt;
        let pb = BigInt::from(p);
        let n = ((x.numer() % &pb) + &pb) % &pb;
        let d = ((x.denom() % &pb) + &pb) % &pb;
        let conv = |b: BigInt| -> u64 { b.try_into().expect("reduced below p") };
        Fp { v: conv(n), p }.div_opt(&Fp { v: conv(d), p })
    }

    fn div_opt(&self, o: &Fp) -> Option<Fp> {
        o.inv().map(|i| self.mul(&i))
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v)
    }
}

impl Field for Fp {
    fn zero(&self) -> Self {
        Fp { v: 0, p: self.p }
    }
    fn one(&self) -> Self {
        Fp {
            v: 1 % self.p,
            p: self.p,
        }
    }
    fn from_i64(&self, n: i64) -> Self {
        Fp::new(n, self.p)
    }
    fn is_zero(&self) -> bool {
        self.v == 0
    }
    fn add(&self, o: &Self) -> Self {
        Fp {
            v: (self.v + o.v) % self.p,
            p: self.p,
        }
    }
    fn sub(&self, o: &Self) -> Self {
        Fp {
            v: (self.v + self.p - o.v) % self.p,
            p: self.p,
        }
    }
    fn mul(&self, o: &Self) -> Self {
        Fp {
            v: ((self.v as u128 * o.v as u128) % self.p as u128) as u64,
            p: self.p,
        }
    }
    fn neg(&self) -> Self {
        Fp {
            v: (self.p - self.v) % self.p,
            p: self.p,
        }
    }
    fn inv(&self) -> Option<Self> {
        (self.v != 0).then(|| Field::pow(self, self.p - 2))
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
    fn pth_root(&self) -> Self {
        *self
    }
}

/// θ with θ² + c1·θ + c0 = 0; the caller guarantees irreducibility.
#[derive(Debug, PartialEq, Eq)]
pub struct QuadModulus<F> {
    pub c1: F,
    pub c0: F,
}

/// a + bθ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quad<F: Field> {
    pub a: F,
    pub b: F,
    pub m: Arc<QuadModulus<F>>,
}

impl<F: Field> Quad<F> {
    pub fn modulus(c1: F, c0: F) -> Arc<QuadModulus<F>> {
        Arc::new(QuadModulus { c1, c0 })
    }

    pub fn new(a: F, b: F, m: &Arc<QuadModulus<F>>) -> Self {
        Quad { a, b, m: m.clone() }
    }

    pub fn base(a: F, m: &Arc<QuadModulus<F>>) -> Self {
        let z = a.zero();
        Quad::new(a, z, m)
    }

    /// θ itself.
    pub fn theta(m: &Arc<QuadModulus<F>>) -> Self {
        Quad::new(m.c0.zero(), m.c0.one(), m)
    }

    /// The other root, −c1 − θ applied to this element.
    pub fn conj(&self) -> Self {
        Quad::new(self.a.sub(&self.m.c1.mul(&self.b)), self.b.neg(), &self.m)
    }

    pub fn trace(&self) -> F {
        self.a.add(&self.a).sub(&self.m.c1.mul(&self.b))
    }

    pub fn norm(&self) -> F {
        self.a
            .mul(&self.a)
            .sub(&self.m.c1.mul(&self.a).mul(&self.b))
            .add(&self.m.c0.mul(&self.b).mul(&self.b))
    }
}

impl<F: Field> fmt::Display for Quad<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let bt = if self.b.is_one() {
            "theta".to_string()
        } else {
            format!("{}*theta", self.b)
        };
        if self.a.is_zero() {
            write!(f, "{bt}")
        } else {
            write!(f, "{}+{bt}", self.a)
        }
    }
}

impl<F: Field> Field for Quad<F> {
    fn zero(&self) -> Self {
        Quad::base(self.a.zero(), &self.m)
    }
    fn one(&self) -> Self {
        Quad::base(self.a.one(), &self.m)
    }
    fn from_i64(&self, n: i64) -> Self {
        Quad::base(self.a.from_i64(n), &self.m)
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        Quad::new(self.a.add(&o.a), self.b.add(&o.b), &self.m)
    }
    fn sub(&self, o: &Self) -> Self {
        Quad::new(self.a.sub(&o.a), self.b.sub(&o.b), &self.m)
    }
    fn mul(&self, o: &Self) -> Self {
        // θ² = −c1θ − c0
        let bb = self.b.mul(&o.b);
        let a = self.a.mul(&o.a).sub(&bb.mul(&self.m.c0));
        let b = self
            .a
            .mul(&o.b)
            .add(&self.b.mul(&o.a))
            .sub(&bb.mul(&self.m.c1));
        Quad::new(a, b, &self.m)
    }
    fn neg(&self) -> Self {
        Quad::new(self.a.neg(), self.b.neg(), &self.m)
    }
    fn inv(&self) -> Option<Self> {
        let n = self.norm().inv()?;
        let c = self.conj();
        Some(Quad::new(c.a.mul(&n), c.b.mul(&n), &self.m))
    }
    fn characteristic(&self) -> u64 {
        self.a.characteristic()
    }
    fn pth_root(&self) -> Self {
        // on 𝔽_{p²}, x^{p²} = x
        Field::pow(self, self.characteristic())
    }
}

/// Trial division; inputs are desk-sized.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}
