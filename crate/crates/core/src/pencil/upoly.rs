//! Dense univariate polynomials over a [`Field`], coefficients low to high.

use super::field::Field;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UPoly<F: Field> {
    c: Vec<F>,
    ctx: F,
}

impl<F: Field> UPoly<F> {
    pub fn new(coeffs: Vec<F>, ctx: &F) -> Self {
        let mut p = UPoly {
            c: coeffs,
            ctx: ctx.zero(),
        };
        p.trim();
        p
    }

    pub fn zero(ctx: &F) -> Self {
        UPoly {
            c: vec![],
            ctx: ctx.zero(),
        }
    }

    pub fn constant(a: F) -> Self {
        UPoly::new(vec![a.clone()], &a)
    }

    pub fn x(ctx: &F) -> Self {
        UPoly::new(vec![ctx.zero(), ctx.one()], ctx)
    }

    pub fn from_i64s(cs: &[i64], ctx: &F) -> Self {
        UPoly::new(cs.iter().map(|&n| ctx.from_i64(n)).collect(), ctx)
    }

    fn trim(&mut self) {
        while self.c.last().is_some_and(|x| x.is_zero()) {
            self.c.pop();
        }
    }

    pub fn ctx(&self) -> &F {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[F] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> F {
        self.c.get(i).cloned().unwrap_or_else(|| self.ctx.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// None for the zero polynomial.
    pub fn deg(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn lc(&self) -> F {
        self.c.last().cloned().unwrap_or_else(|| self.ctx.zero())
    }

    pub fn is_constant(&self) -> bool {
        self.c.len() <= 1
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        UPoly::new(
            (0..n).map(|i| self.coeff(i).add(&o.coeff(i))).collect(),
            &self.ctx,
        )
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        UPoly::new(
            (0..n).map(|i| self.coeff(i).sub(&o.coeff(i))).collect(),
            &self.ctx,
        )
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero(&self.ctx);
        }
        let mut out = vec![self.ctx.zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        UPoly::new(out, &self.ctx)
    }

    pub fn scale(&self, k: &F) -> Self {
        UPoly::new(self.c.iter().map(|x| x.mul(k)).collect(), &self.ctx)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.lc().inv().expect("nonzero leading coefficient"))
    }

    pub fn eval(&self, x: &F) -> F {
        self.c
            .iter()
            .rev()
            .fold(self.ctx.zero(), |acc, a| acc.mul(x).add(a))
    }

    pub fn derivative(&self) -> Self {
        UPoly::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, a)| a.mul(&self.ctx.from_i64(i as i64)))
                .collect(),
            &self.ctx,
        )
    }

    /// (quotient, remainder); panics on division by zero.
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        let dd = d.deg().expect("division by zero polynomial");
        let inv = d.lc().inv().expect("field");
        let mut r = self.c.clone();
        let mut q = vec![self.ctx.zero(); self.c.len().saturating_sub(dd)];
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1 - dd;
            let f = r.last().unwrap().mul(&inv);
            for (i, b) in d.c.iter().enumerate() {
                r[k + i] = r[k + i].sub(&f.mul(b));
            }
            q[k] = f;
            r.pop();
            while r.last().is_some_and(|x| x.is_zero()) {
                r.pop();
            }
        }
        (UPoly::new(q, &self.ctx), UPoly::new(r, &self.ctx))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.divrem(d).1
    }

    /// Quotient if d divides self.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.divrem(d);
        r.is_zero().then_some(q)
    }

    /// Monic gcd; gcd(0, 0) = 0.
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// (g, u) with g = gcd(self, m) monic and u·self ≡ g (mod m).
    pub fn gcd_inv(&self, m: &Self) -> (Self, Self) {
        let (mut r0, mut r1) = (m.clone(), self.rem(m));
        let (mut s0, mut s1) = (UPoly::zero(&self.ctx), UPoly::constant(self.ctx.one()));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let s = s0.sub(&q.mul(&s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        if r0.is_zero() {
            return (r0, s0);
        }
        let k = r0.lc().inv().expect("field");
        (r0.scale(&k), s0.scale(&k).rem(m))
    }

    /// Product of the distinct irreducible factors, monic. Handles p-th powers
    /// in characteristic p.
    pub fn rad(&self) -> Self {
        if self.is_constant() {
            return if self.is_zero() {
                self.clone()
            } else {
                UPoly::constant(self.ctx.one())
            };
        }
        let d = self.derivative();
        if d.is_zero() {
            let p = self.ctx.characteristic() as usize;
            let root: Vec<F> = self.c.iter().step_by(p).map(|x| x.pth_root()).collect();
            return UPoly::new(root, &self.ctx).rad();
        }
        let g = self.gcd(&d);
        let w = self.exact_div(&g).expect("gcd divides").monic();
        let rg = g.rad();
        w.mul(&rg)
            .exact_div(&w.gcd(&rg))
            .expect("gcd divides")
            .monic()
    }

    pub fn is_squarefree(&self) -> bool {
        self.rad().deg() == self.monic().deg()
    }
}

impl<F: Field> std::fmt::Display for UPoly<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .c
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, a)| !a.is_zero())
            .map(|(i, a)| match i {
                0 => format!("({a})"),
                1 => format!("({a})*x"),
                _ => format!("({a})*x^{i}"),
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}
