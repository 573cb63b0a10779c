//! Sparse multivariate polynomials over a [`Field`], resultants, and binary
//! forms in two variables.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use super::field::Field;
use super::upoly::UPoly;

/// Terms keyed by exponent vector; `BTreeMap` order on the keys is lex with
/// the first variable largest, so the last entry is the lex-leading term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly<F: Field> {
    vars: Arc<Vec<String>>,
    weights: Option<Arc<Vec<u32>>>,
    terms: BTreeMap<Vec<u32>, F>,
    ctx: F,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PolyJson {
    pub vars: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<u32>>,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TermJson {
    pub exp: Vec<u32>,
    pub coeff: String,
}

impl<F: Field> Poly<F> {
    pub fn zero(vars: &[&str], ctx: &F) -> Self {
        Poly {
            vars: Arc::new(vars.iter().map(|s| s.to_string()).collect()),
            weights: None,
            terms: BTreeMap::new(),
            ctx: ctx.zero(),
        }
    }

    fn empty_like(&self) -> Self {
        Poly {
            vars: self.vars.clone(),
            weights: self.weights.clone(),
            terms: BTreeMap::new(),
            ctx: self.ctx.clone(),
        }
    }

    pub fn with_weights(mut self, w: &[u32]) -> Self {
        assert_eq!(w.len(), self.vars.len());
        self.weights = Some(Arc::new(w.to_vec()));
        self
    }

    /// Variables of a template polynomial, as polynomials.
    pub fn gens(vars: &[&str], ctx: &F) -> Vec<Self> {
        let z = Poly::zero(vars, ctx);
        (0..vars.len()).map(|i| z.var(i)).collect()
    }

    pub fn var(&self, i: usize) -> Self {
        let mut e = vec![0; self.nvars()];
        e[i] = 1;
        self.monomial(e, self.ctx.one())
    }

    pub fn monomial(&self, e: Vec<u32>, c: F) -> Self {
        let mut p = self.empty_like();
        if !c.is_zero() {
            p.terms.insert(e, c);
        }
        p
    }

    pub fn constant(&self, c: F) -> Self {
        self.monomial(vec![0; self.nvars()], c)
    }

    pub fn int(&self, n: i64) -> Self {
        self.constant(self.ctx.from_i64(n))
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn ctx(&self) -> &F {
        &self.ctx
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &F)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    pub fn constant_value(&self) -> Option<F> {
        if !self.is_constant() {
            return None;
        }
        Some(
            self.terms
                .values()
                .next()
                .cloned()
                .unwrap_or_else(|| self.ctx.zero()),
        )
    }

    fn push(&mut self, e: Vec<u32>, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(x) => {
                *x = x.add(&c);
                if x.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut p = self.clone();
        for (e, c) in &o.terms {
            p.push(e.clone(), c.clone());
        }
        p
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        let mut p = self.empty_like();
        p.terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.clone(), c.neg()))
            .collect();
        p
    }

    pub fn scale(&self, k: &F) -> Self {
        let mut p = self.empty_like();
        for (e, c) in &self.terms {
            p.push(e.clone(), c.mul(k));
        }
        p
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut p = self.empty_like();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                p.push(e, c1.mul(c2));
            }
        }
        p
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(self.int(1), |acc, _| acc.mul(self))
    }

    pub fn degree_in(&self, i: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[i]).max()
    }

    /// Weighted degree of every term if they agree (None for 0 or mixed).
    pub fn weighted_degree(&self, w: &[u32]) -> Option<u32> {
        let mut ds = self
            .terms
            .keys()
            .map(|e| e.iter().zip(w).map(|(a, b)| a * b).sum::<u32>());
        let d = ds.next()?;
        ds.all(|x| x == d).then_some(d)
    }

    /// Weighted degree using the attached weights, or the total degree.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        match &self.weights {
            Some(w) => self.weighted_degree(w),
            None => self.weighted_degree(&vec![1; self.nvars()]),
        }
    }

    /// Coefficients of var i^k, for k = 0..=deg; var i no longer occurs in them.
    pub fn coeffs_in(&self, i: usize) -> Vec<Self> {
        let d = self.degree_in(i).unwrap_or(0) as usize;
        let mut out = vec![self.empty_like(); d + 1];
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            let k = e2[i] as usize;
            e2[i] = 0;
            out[k].push(e2, c.clone());
        }
        if self.is_zero() {
            out.clear();
        }
        out
    }

    /// Σ c_k · var_i^k.
    pub fn from_coeffs_in(i: usize, cs: &[Self], like: &Self) -> Self {
        let v = like.var(i);
        let mut acc = like.empty_like();
        let mut pw = like.int(1);
        for c in cs {
            acc = acc.add(&c.mul(&pw));
            pw = pw.mul(&v);
        }
        acc
    }

    /// Substitutes a polynomial for var i.
    pub fn subst(&self, i: usize, val: &Self) -> Self {
        let cs = self.coeffs_in(i);
        let mut acc = self.empty_like();
        for c in cs.iter().rev() {
            acc = acc.mul(val).add(c);
        }
        acc
    }

    pub fn eval_var(&self, i: usize, x: &F) -> Self {
        self.subst(i, &self.constant(x.clone()))
    }

    pub fn partial(&self, i: usize) -> Self {
        let mut p = self.empty_like();
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[i] -= 1;
            p.push(e2, c.mul(&self.ctx.from_i64(e[i] as i64)));
        }
        p
    }

    /// Lex-leading (exponent, coefficient).
    pub fn leading(&self) -> Option<(&Vec<u32>, &F)> {
        self.terms.iter().next_back()
    }

    /// Scales so the lex-leading coefficient is 1.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some((_, c)) => self.scale(&c.inv().expect("field")),
            None => self.clone(),
        }
    }

    /// Quotient if `d` divides `self` exactly.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let (de, dc) = d.leading()?;
        let dinv = dc.inv()?;
        let mut r = self.clone();
        let mut q = self.empty_like();
        while let Some((e, c)) = r.leading() {
            if e.iter().zip(de).any(|(a, b)| a < b) {
                return None;
            }
            let qe: Vec<u32> = e.iter().zip(de).map(|(a, b)| a - b).collect();
            let t = self.monomial(qe, c.mul(&dinv));
            r = r.sub(&t.mul(d));
            q = q.add(&t);
        }
        Some(q)
    }

    /// Requires every variable except i to be absent.
    pub fn to_upoly(&self, i: usize) -> UPoly<F> {
        let d = self.degree_in(i).unwrap_or(0) as usize;
        let mut c = vec![self.ctx.zero(); d + 1];
        for (e, x) in &self.terms {
            assert!(
                e.iter().enumerate().all(|(j, &k)| j == i || k == 0),
                "polynomial is not univariate"
            );
            c[e[i] as usize] = x.clone();
        }
        UPoly::new(c, &self.ctx)
    }

    pub fn from_upoly(u: &UPoly<F>, i: usize, like: &Self) -> Self {
        let cs: Vec<Self> = u
            .coeffs()
            .iter()
            .map(|c| like.constant(c.clone()))
            .collect();
        Poly::from_coeffs_in(i, &cs, like)
    }

    pub fn map_coeffs<G: Field>(&self, ctx: &G, f: impl Fn(&F) -> Option<G>) -> Option<Poly<G>> {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let g = f(c)?;
            if !g.is_zero() {
                terms.insert(e.clone(), g);
            }
        }
        Some(Poly {
            vars: self.vars.clone(),
            weights: self.weights.clone(),
            terms,
            ctx: ctx.zero(),
        })
    }

    pub fn to_json(&self) -> PolyJson {
        PolyJson {
            vars: self.vars.to_vec(),
            weights: self.weights.as_ref().map(|w| w.to_vec()),
            terms: self
                .terms
                .iter()
                .rev()
                .map(|(e, c)| TermJson {
                    exp: e.clone(),
                    coeff: c.to_string(),
                })
                .collect(),
        }
    }
}

impl<F: Field> std::fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let mono: Vec<String> = e
                .iter()
                .zip(self.vars.iter())
                .filter(|(k, _)| **k > 0)
                .map(|(k, v)| {
                    if *k == 1 {
                        v.clone()
                    } else {
                        format!("{v}^{k}")
                    }
                })
                .collect();
            let cs = c.to_string();
            let (neg, mag) = match cs.strip_prefix('-') {
                Some(m) if !m.contains(['+', '-']) => (true, m.to_string()),
                _ => (false, cs.clone()),
            };
            let mag = if mag.contains('+') || mag.contains("theta") {
                format!("({mag})")
            } else {
                mag
            };
            let body = match (mono.is_empty(), mag.as_str()) {
                (true, _) => mag.clone(),
                (false, "1") => mono.join("*"),
                (false, _) => format!("{mag}*{}", mono.join("*")),
            };
            match (first, neg) {
                (true, true) => write!(f, "-{body}")?,
                (true, false) => write!(f, "{body}")?,
                (false, true) => write!(f, " - {body}")?,
                (false, false) => write!(f, " + {body}")?,
            }
            first = false;
        }
        Ok(())
    }
}

/// Fraction-free (Bareiss) determinant over the polynomial ring.
pub fn det_poly<F: Field>(mut m: Vec<Vec<Poly<F>>>, like: &Poly<F>) -> Poly<F> {
    let n = m.len();
    if n == 0 {
        return like.int(1);
    }
    let mut neg = false;
    let mut prev = like.int(1);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    neg = !neg;
                }
                None => return like.empty_like(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num.exact_div(&prev).expect("Bareiss division is exact");
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if neg {
        d.neg()
    } else {
        d
    }
}

/// Resultant with respect to var i, via the Sylvester matrix.
pub fn resultant<F: Field>(f: &Poly<F>, g: &Poly<F>, i: usize) -> Poly<F> {
    if f.is_zero() || g.is_zero() {
        return f.empty_like();
    }
    let a = f.coeffs_in(i);
    let b = g.coeffs_in(i);
    let (m, n) = (a.len() - 1, b.len() - 1);
    if m == 0 {
        return a[0].pow(n as u32);
    }
    if n == 0 {
        return b[0].pow(m as u32);
    }
    let size = m + n;
    let zero = f.empty_like();
    let mut s = vec![vec![zero.clone(); size]; size];
    for r in 0..n {
        for (k, c) in a.iter().rev().enumerate() {
            s[r][r + k] = c.clone();
        }
    }
    for r in 0..m {
        for (k, c) in b.iter().rev().enumerate() {
            s[n + r][r + k] = c.clone();
        }
    }
    det_poly(s, f)
}

/// A binary form in vars (s, t) = (0, 1), split as s^a · (form not divisible
/// by s), the latter dehomogenized at s = 1.
fn split_binary<F: Field>(f: &Poly<F>) -> (u32, UPoly<F>) {
    let a = f.terms().map(|(e, _)| e[0]).min().unwrap_or(0);
    let u = f.eval_var(0, &f.ctx().one()).to_upoly(1);
    (a, u)
}

/// s^a · s^{deg u} · u(t/s).
fn join_binary<F: Field>(a: u32, u: &UPoly<F>, like: &Poly<F>) -> Poly<F> {
    let d = u.deg().unwrap_or(0) as u32;
    let mut p = like.empty_like();
    for (k, c) in u.coeffs().iter().enumerate() {
        let mut e = vec![0; like.nvars()];
        e[0] = a + d - k as u32;
        e[1] = k as u32;
        p.push(e, c.clone());
    }
    p
}

/// Monic gcd of binary forms in vars 0, 1 (other vars absent).
pub fn binary_gcd<F: Field>(f: &Poly<F>, g: &Poly<F>) -> Poly<F> {
    if f.is_zero() {
        return g.monic();
    }
    if g.is_zero() {
        return f.monic();
    }
    let (a, u) = split_binary(f);
    let (b, v) = split_binary(g);
    join_binary(a.min(b), &u.gcd(&v), f).monic()
}

pub fn binary_lcm<F: Field>(f: &Poly<F>, g: &Poly<F>) -> Poly<F> {
    f.mul(g)
        .exact_div(&binary_gcd(f, g))
        .expect("gcd divides")
        .monic()
}

/// Product of distinct linear factors over the algebraic closure, monic.
pub fn binary_rad<F: Field>(f: &Poly<F>) -> Poly<F> {
    let (a, u) = split_binary(f);
    join_binary(a.min(1), &u.rad(), f).monic()
}

pub fn binary_is_squarefree<F: Field>(f: &Poly<F>) -> bool {
    binary_rad(f).homogeneous_degree() == f.homogeneous_degree()
}
