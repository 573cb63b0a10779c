//! Blowup lattices: Pic of an iterated blowup of P² with form diag(1, −1, …),
//! named curve classes, a contracted set, Weil pullback (Mumford's rational
//! pullback), rounding, genus and Riemann–Roch.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{LdpError, Result};
use crate::graphs::{DynkinType, WeightedDualGraph};
use crate::linalg;
use crate::rational::{fmt_q, qi, Q};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorClass {
    basis: Vec<String>,
    coeffs: Vec<Q>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DivisorClassJson {
    pub basis: Vec<String>,
    pub coeffs: Vec<String>,
}

impl DivisorClass {
    pub fn new(basis: Vec<String>, coeffs: Vec<Q>) -> Self {
        assert_eq!(basis.len(), coeffs.len());
        DivisorClass { basis, coeffs }
    }

    pub fn zero(basis: &[String]) -> Self {
        DivisorClass {
            basis: basis.to_vec(),
            coeffs: vec![Q::zero(); basis.len()],
        }
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn coeff(&self, name: &str) -> Option<&Q> {
        self.basis
            .iter()
            .position(|b| b == name)
            .map(|i| &self.coeffs[i])
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    fn zip(&self, o: &Self, f: impl Fn(&Q, &Q) -> Q) -> Result<Self> {
        if self.basis != o.basis {
            return Err(LdpError::BasisMismatch);
        }
        Ok(DivisorClass {
            basis: self.basis.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&o.coeffs)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.zip(o, |a, b| a + b)
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.zip(o, |a, b| a - b)
    }

    pub fn scale(&self, k: &Q) -> Self {
        DivisorClass {
            basis: self.basis.clone(),
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&qi(-1))
    }

    /// x·y with form diag(1, −1, …, −1).
    pub fn dot(&self, o: &Self) -> Result<Q> {
        if self.basis != o.basis {
            return Err(LdpError::BasisMismatch);
        }
        let mut s = &self.coeffs[0] * &o.coeffs[0];
        for i in 1..self.coeffs.len() {
            s -= &self.coeffs[i] * &o.coeffs[i];
        }
        Ok(s)
    }

    pub fn to_json(&self) -> DivisorClassJson {
        DivisorClassJson {
            basis: self.basis.clone(),
            coeffs: self.coeffs.iter().map(fmt_q).collect(),
        }
    }
}

impl std::fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut out = String::new();
        for (b, c) in self.basis.iter().zip(&self.coeffs) {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = c.abs();
            let body = if mag.is_one() {
                b.clone()
            } else {
                format!("{}*{b}", fmt_q(&mag))
            };
            if out.is_empty() {
                out = if c.is_negative() {
                    format!("-{body}")
                } else {
                    body
                };
            } else {
                out = format!("{out} {sign} {body}");
            }
        }
        f.write_str(if out.is_empty() { "0" } else { &out })
    }
}

#[derive(Debug, Clone)]
pub struct BlowupLattice {
    pub name: String,
    basis: Vec<String>,
    curves: Vec<(String, DivisorClass)>,
    contracted: Vec<String>,
    contracted_graph: Vec<WeightedDualGraph>,
}

/// A Weil pullback: the class it starts from plus rational multiples of the
/// curves it was made orthogonal to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pullback {
    pub base: DivisorClass,
    pub corrections: Vec<(String, Q)>,
    pub class: DivisorClass,
}

impl BlowupLattice {
    /// Lattice with basis H, then `exceptional` names.
    pub fn new(name: &str, exceptional: &[&str]) -> Self {
        let mut basis = vec!["H".to_string()];
        basis.extend(exceptional.iter().map(|s| s.to_string()));
        BlowupLattice {
            name: name.into(),
            basis,
            curves: vec![],
            contracted: vec![],
            contracted_graph: vec![],
        }
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    /// Class from (basis name, integer coefficient) pairs.
    pub fn class(&self, terms: &[(&str, i64)]) -> Result<DivisorClass> {
        let mut c = DivisorClass::zero(&self.basis);
        for &(name, k) in terms {
            let i = self
                .basis
                .iter()
                .position(|b| b == name)
                .ok_or_else(|| LdpError::UnknownCurve(name.into()))?;
            c.coeffs[i] += qi(k);
        }
        Ok(c)
    }

    pub fn basis_class(&self, name: &str) -> Result<DivisorClass> {
        self.class(&[(name, 1)])
    }

    /// −3H + Σ exceptional.
    pub fn canonical(&self) -> DivisorClass {
        let mut c = DivisorClass::zero(&self.basis);
        c.coeffs[0] = qi(-3);
        for x in c.coeffs[1..].iter_mut() {
            *x = qi(1);
        }
        c
    }

    pub fn add_curve(&mut self, name: &str, class: DivisorClass) {
        self.curves.retain(|(n, _)| n != name);
        self.curves.push((name.into(), class));
    }

    pub fn curve(&self, name: &str) -> Result<DivisorClass> {
        self.curves
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, c)| c.clone())
            .ok_or_else(|| LdpError::UnknownCurve(name.into()))
    }

    pub fn curves(&self) -> &[(String, DivisorClass)] {
        &self.curves
    }

    pub fn contracted(&self) -> &[String] {
        &self.contracted
    }

    pub fn contracted_graph(&self) -> DynkinType {
        DynkinType::new(self.contracted_graph.clone())
    }

    /// Declares the contracted set as consecutive chains of named curves.
    pub fn set_contracted(&mut self, chains: &[&[&str]]) -> Result<()> {
        let mut names = vec![];
        let mut graphs = vec![];
        for ch in chains {
            let mut w = vec![];
            for &n in ch.iter() {
                let c = self.curve(n)?;
                w.push(
                    (-c.dot(&c)?)
                        .to_integer()
                        .try_into()
                        .map_err(|_| LdpError::BadShape)?,
                );
                names.push(n.to_string());
            }
            graphs.push(WeightedDualGraph::chain(&w));
        }
        self.contracted = names;
        self.contracted_graph = graphs;
        Ok(())
    }

    pub fn gram(&self, names: &[String]) -> Result<Vec<Vec<Q>>> {
        let cs: Vec<DivisorClass> = names.iter().map(|n| self.curve(n)).collect::<Result<_>>()?;
        cs.iter()
            .map(|x| cs.iter().map(|y| x.dot(y)).collect())
            .collect()
    }

    /// Adds multiples of `names` to `cls` so that the result is orthogonal to each of them.
    pub fn pullback_along(&self, cls: &DivisorClass, names: &[String]) -> Result<Pullback> {
        let gram = self.gram(names)?;
        let big: Vec<Vec<BigInt>> = gram
            .iter()
            .map(|r| r.iter().map(|x| x.to_integer()).collect())
            .collect();
        if !linalg::is_negative_definite(&big) {
            return Err(LdpError::NotNegativeDefinite);
        }
        let rhs: Vec<Q> = names
            .iter()
            .map(|n| Ok(-cls.dot(&self.curve(n)?)?))
            .collect::<Result<_>>()?;
        let c = linalg::solve(&gram, &rhs).expect("definite");
        let mut class = cls.clone();
        for (n, k) in names.iter().zip(&c) {
            class = class.add(&self.curve(n)?.scale(k))?;
        }
        for n in names {
            debug_assert!(class.dot(&self.curve(n)?)?.is_zero());
        }
        Ok(Pullback {
            base: cls.clone(),
            corrections: names.iter().cloned().zip(c).collect(),
            class,
        })
    }

    /// σ* of the image of `cls` under the contraction of the contracted set.
    pub fn pullback_weil(&self, cls: &DivisorClass) -> Result<DivisorClass> {
        Ok(self.pullback_along(cls, &self.contracted)?.class)
    }

    pub fn pullback_decomposed(&self, cls: &DivisorClass) -> Result<Pullback> {
        self.pullback_along(cls, &self.contracted)
    }

    /// (D_S · Y_S) := (σ*D · Y).
    pub fn mumford_pairing(&self, d: &DivisorClass, y: &DivisorClass) -> Result<Q> {
        self.pullback_weil(d)?.dot(y)
    }

    /// Rounds up the coefficients of `support` curves in `cls`, after
    /// decomposing cls = N + Σ c_i S_i with N integral. The decomposition is
    /// unique modulo integers exactly when the support spans a primitive
    /// sublattice; otherwise AmbiguousSupport.
    pub fn round_up(&self, cls: &DivisorClass, support: &[&str]) -> Result<DivisorClass> {
        let sup: Vec<DivisorClass> = support
            .iter()
            .map(|n| self.curve(n))
            .collect::<Result<_>>()?;
        if sup.iter().any(|s| !s.is_integral()) {
            return Err(LdpError::AmbiguousSupport);
        }
        let n = self.basis.len();
        let s: Vec<Vec<BigInt>> = (0..n)
            .map(|i| sup.iter().map(|c| c.coeffs[i].to_integer()).collect())
            .collect();
        let p = linalg::integral_left_inverse(&s).ok_or(LdpError::AmbiguousSupport)?;
        // c ≡ P·cls (mod Z^k); any representative works
        let c: Vec<Q> = p
            .iter()
            .map(|row| {
                row.iter().zip(&cls.coeffs).fold(Q::zero(), |acc, (x, y)| {
                    acc + Q::from_integer(x.clone()) * y
                })
            })
            .collect();
        let mut rest = cls.clone();
        for (k, sc) in c.iter().zip(&sup) {
            rest = rest.sub(&sc.scale(k))?;
        }
        if !rest.is_integral() {
            return Err(LdpError::AmbiguousSupport);
        }
        let mut out = rest;
        for (k, sc) in c.iter().zip(&sup) {
            out = out.add(&sc.scale(&Q::from_integer(k.ceil().to_integer())))?;
        }
        Ok(out)
    }

    /// Coefficients c with cls = Σ c_i·curve_i, if cls lies in their span.
    pub fn express(&self, cls: &DivisorClass, names: &[&str]) -> Result<Option<Vec<Q>>> {
        let cs: Vec<DivisorClass> = names.iter().map(|n| self.curve(n)).collect::<Result<_>>()?;
        // normal equations with the Euclidean product on coefficients
        let e = |a: &DivisorClass, b: &DivisorClass| -> Q {
            a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x * y).sum()
        };
        let gram: Vec<Vec<Q>> = cs
            .iter()
            .map(|a| cs.iter().map(|b| e(a, b)).collect())
            .collect();
        let rhs: Vec<Q> = cs.iter().map(|a| e(a, cls)).collect();
        let Some(c) = linalg::solve(&gram, &rhs) else {
            return Ok(None);
        };
        let mut back = DivisorClass::zero(&self.basis);
        for (k, x) in c.iter().zip(&cs) {
            back = back.add(&x.scale(k))?;
        }
        Ok((back == *cls).then_some(c))
    }

    pub fn arithmetic_genus(&self, cls: &DivisorClass) -> Result<Q> {
        let k = self.canonical();
        Ok(cls.dot(&cls.add(&k)?)? / qi(2) + qi(1))
    }

    /// χ(O(D)) = 1 + ½ D·(D − K) on a rational surface.
    pub fn chi(&self, cls: &DivisorClass) -> Result<Q> {
        if !cls.is_integral() {
            return Err(LdpError::NonIntegralClass);
        }
        let k = self.canonical();
        Ok(qi(1) + cls.dot(&cls.sub(&k)?)? / qi(2))
    }

    /// The a with (K + aE)·Σ = 0.
    pub fn ray_trivial_coefficient(&self, e: &DivisorClass, sigma: &DivisorClass) -> Result<Q> {
        let es = e.dot(sigma)?;
        if es.is_zero() {
            return Err(LdpError::RayOrthogonal);
        }
        Ok(-self.canonical().dot(sigma)? / es)
    }
}

impl Pullback {
    /// Base plus rounded-up corrections; the base must be integral.
    pub fn round_up(&self, lat: &BlowupLattice) -> Result<DivisorClass> {
        if !self.base.is_integral() {
            return Err(LdpError::NonIntegralClass);
        }
        let mut out = self.base.clone();
        for (n, c) in &self.corrections {
            out = out.add(&lat.curve(n)?.scale(&Q::from_integer(c.ceil().to_integer())))?;
        }
        Ok(out)
    }

    pub fn correction(&self, name: &str) -> Option<&Q> {
        self.corrections
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, c)| c)
    }
}

const POINTS: [&str; 4] = ["a", "b", "c", "d"];

/// P² blown up at a, b, c, d and then at E_a∩L_ab, E_b∩L_bc, E_c∩L_cd,
/// E_d∩L_ad; the two 4-chains of (−2)-curves are contracted.
pub fn preset_2a4() -> BlowupLattice {
    build(&[])
}

/// Minimal resolution of the surfaces of type 2[2^4]+[3] (one more blowup at
/// the singular point of C₂) and 2[2^4]+[2,4] (two blowups along C₂).
pub fn preset_resolution(dagger: &str) -> Result<BlowupLattice> {
    match dagger.replace(' ', "").as_str() {
        "[3]" => Ok(build(&["g1"])),
        "[2,4]" => Ok(build(&["g1", "g2"])),
        other => Err(LdpError::UnknownPreset(other.into())),
    }
}

/// Presets by CLI name: "2A4", "[3]", "[2,4]".
pub fn preset(name: &str) -> Result<BlowupLattice> {
    match name {
        "2A4" | "2a4" | "2[2^4]" => Ok(preset_2a4()),
        other => preset_resolution(other),
    }
}

fn build(extra: &[&str]) -> BlowupLattice {
    let mut names: Vec<String> = POINTS.iter().map(|p| format!("e_{p}")).collect();
    names.extend(POINTS.iter().map(|p| format!("f_{p}")));
    names.extend(extra.iter().map(|s| s.to_string()));
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let label = match extra.len() {
        0 => "2A4",
        1 => "[3]",
        _ => "[2,4]",
    };
    let mut lat = BlowupLattice::new(label, &refs);
    let c = |lat: &BlowupLattice, t: &[(&str, i64)]| lat.class(t).expect("preset names exist");
    let lines = [
        ("L_ab", [("e_a", -1), ("e_b", -1), ("f_a", -1)]),
        ("L_bc", [("e_b", -1), ("e_c", -1), ("f_b", -1)]),
        ("L_cd", [("e_c", -1), ("e_d", -1), ("f_c", -1)]),
        ("L_ad", [("e_a", -1), ("e_d", -1), ("f_d", -1)]),
    ];
    for (n, t) in lines {
        let mut terms = vec![("H", 1)];
        terms.extend(t);
        let cls = c(&lat, &terms);
        lat.add_curve(n, cls);
    }
    let l_ac = c(&lat, &[("H", 1), ("e_a", -1), ("e_c", -1)]);
    let l_bd = c(&lat, &[("H", 1), ("e_b", -1), ("e_d", -1)]);
    lat.add_curve("L_ac", l_ac);
    lat.add_curve("L_bd", l_bd);
    for p in POINTS {
        let e = c(&lat, &[(&format!("e_{p}"), 1), (&format!("f_{p}"), -1)]);
        lat.add_curve(&format!("E_{p}"), e);
        let f = c(&lat, &[(&format!("f_{p}"), 1)]);
        lat.add_curve(&format!("F_{p}"), f);
    }
    let mut cubic = vec![("H", 3)];
    let exc: Vec<String> = POINTS
        .iter()
        .flat_map(|p| [format!("e_{p}"), format!("f_{p}")])
        .collect();
    cubic.extend(exc.iter().map(|n| (n.as_str(), -1)));
    match extra.len() {
        0 => {}
        1 => cubic.push(("g1", -2)),
        _ => {
            cubic.push(("g1", -2));
            cubic.push(("g2", -1));
        }
    }
    let c2 = c(&lat, &cubic);
    lat.add_curve("C_2", c2);
    let chains: Vec<&[&str]> = vec![
        &["E_a", "L_ad", "L_bc", "E_c"],
        &["E_d", "L_cd", "L_ab", "E_b"],
    ];
    match extra.len() {
        0 => lat.set_contracted(&chains).expect("preset curves exist"),
        1 => {
            let g1 = c(&lat, &[("g1", 1)]);
            lat.add_curve("G_1", g1);
            let mut ch = chains.clone();
            ch.push(&["C_2"]);
            lat.set_contracted(&ch).expect("preset curves exist");
        }
        _ => {
            let g1 = c(&lat, &[("g1", 1), ("g2", -1)]);
            let g2 = c(&lat, &[("g2", 1)]);
            lat.add_curve("G_1", g1);
            lat.add_curve("G_2", g2);
            let mut ch = chains.clone();
            ch.push(&["G_1", "C_2"]);
            lat.set_contracted(&ch).expect("preset curves exist");
        }
    }
    lat
}

/// The six curves whose images together with G₂ generate the class group of
/// the 2[2^4]+[2,4] surface.
pub const GENERATOR_CURVES: [&str; 6] = ["L_ac", "L_bd", "F_a", "F_b", "F_c", "F_d"];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub lhs: DivisorClassJson,
    pub rhs: DivisorClassJson,
    pub holds: bool,
}

/// Compares σ*(−rK_S) with τ*(−sK_{S₁}) − k·Σ on the resolution, where σ
/// contracts the contracted set and τ contracts the chains and the blowup
/// curves. For "[3]": r = 3, s = 2, Σ = g₁, k = 1. For "[2,4]": r = 7, s = 3,
/// Σ = full pullback of G₂ along the chains and G₁, k = 2.
pub fn anticanonical_pullback_identity(dagger: &str) -> Result<IdentityCheck> {
    let lat = preset_resolution(dagger)?;
    let k = lat.canonical();
    let chains: Vec<String> = lat
        .contracted()
        .iter()
        .filter(|n| n.as_str() != "C_2" && n.as_str() != "G_1")
        .cloned()
        .collect();
    let (r, s, coef, sigma, tau_set) = if lat.basis().len() == 10 {
        let mut tau = chains.clone();
        tau.push("G_1".into());
        (3, 2, 1, lat.curve("G_1")?, tau)
    } else {
        let mut along = chains.clone();
        along.push("G_1".into());
        let sigma = lat.pullback_along(&lat.curve("G_2")?, &along)?.class;
        let mut tau = along;
        tau.push("G_2".into());
        (7, 3, 2, sigma, tau)
    };
    let lhs = lat.pullback_weil(&k.scale(&qi(-r)))?;
    let rhs = lat
        .pullback_along(&k.scale(&qi(-s)), &tau_set)?
        .class
        .sub(&sigma.scale(&qi(coef)))?;
    Ok(IdentityCheck {
        holds: lhs == rhs,
        lhs: lhs.to_json(),
        rhs: rhs.to_json(),
    })
}

/// χ(−⌈σ*A⌉) on the [2,4] resolution and χ(−⌈τ*A′⌉) on the 2A4 lattice for
/// A = G₂ + Σ n_X X and A′ = C₂ + Σ n_X X, X over the six generator curves.
pub fn chi_pair(n: &[i64; 6]) -> Result<(Q, Q)> {
    let res = preset_resolution("[2,4]")?;
    let base = preset_2a4();
    let combo = |lat: &BlowupLattice, start: &str| -> Result<DivisorClass> {
        let mut a = lat.curve(start)?;
        for (x, k) in GENERATOR_CURVES.iter().zip(n) {
            a = a.add(&lat.curve(x)?.scale(&qi(*k)))?;
        }
        Ok(a)
    };
    let a = combo(&res, "G_2")?;
    let up = res.pullback_decomposed(&a)?.round_up(&res)?;
    let a1 = combo(&base, "C_2")?;
    let up1 = base.pullback_decomposed(&a1)?.round_up(&base)?;
    Ok((res.chi(&up.neg())?, base.chi(&up1.neg())?))
}

/// `count` tuples (n_ac, n_bd, n_a, n_b, n_c, n_d) summing to zero, the first
/// five uniform in −3..=3.
pub fn zero_sum_tuples(seed: u64, count: usize) -> Vec<[i64; 6]> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut t = [0i64; 6];
            for x in t.iter_mut().take(5) {
                *x = rng.gen_range(-3..=3);
            }
            t[5] = -t[..5].iter().sum::<i64>();
            t
        })
        .collect()
}
