//! Closed-form log discrepancies f at a vertex, written with Δ of subgraphs
//! (Δ(∅) = 1), for the support shapes of the incidence case analysis and for
//! the central curve of a star adjacent to a boundary curve.

use num_traits::{FromPrimitive, Num, NumRef, RefNum};
use serde::Serialize;

use crate::error::{LdpError, Result};
use crate::graphs::{Shape, WeightedDualGraph};
use crate::rational::Q;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Display {
    Case1a,
    Case1b,
    Case2a,
    Case2b,
    Case2c,
    Case2d,
    Case2eBranch,
    Case2eCenter,
    /// Log discrepancy of v₀ when a single boundary branch meets the far
    /// end of the component Γ₁ of Γ − v₀ (or v₀ itself when Γ₁ = ∅).
    CentralCurve,
}

fn delta(g: &WeightedDualGraph, set: &[usize]) -> Q {
    Q::from_integer(g.induced(set).abs_det())
}

fn minus(all: usize, drop: &[usize]) -> Vec<usize> {
    (0..all).filter(|i| !drop.contains(i)).collect()
}

fn support(a: &[u32]) -> Vec<usize> {
    (0..a.len()).filter(|&i| a[i] > 0).collect()
}

fn locate(branches: &[Vec<usize>; 3], v: usize) -> Option<(usize, usize)> {
    branches
        .iter()
        .enumerate()
        .find_map(|(bi, b)| b.iter().position(|&x| x == v).map(|k| (bi, k)))
}

pub fn matching_displays(g: &WeightedDualGraph, a: &[u32], vertex: usize) -> Result<Vec<Display>> {
    if a.len() != g.len() {
        return Err(LdpError::IndexMismatch {
            expected: g.len(),
            got: a.len(),
        });
    }
    if vertex >= g.len() {
        return Err(LdpError::UnsupportedConfiguration);
    }
    Ok(matching_with(&g.shape()?, a, vertex))
}

pub(crate) fn matching_with(shape: &Shape, a: &[u32], vertex: usize) -> Vec<Display> {
    let supp = support(a);
    if supp.len() > 2 {
        return vec![];
    }
    let ones = supp.iter().all(|&i| a[i] == 1);
    let mut out = vec![];
    match shape {
        Shape::Empty => {}
        Shape::Chain(p) => {
            if supp == [vertex] {
                out.push(Display::Case1a);
            }
            if supp.len() == 2 && ones && supp.contains(&vertex) {
                out.push(Display::Case1b);
            }
            if let [s] = supp.as_slice() {
                let is_end = *s == p[0] || *s == p[p.len() - 1];
                if a[*s] == 1 && (*s == vertex || is_end) {
                    out.push(Display::CentralCurve);
                }
            }
        }
        Shape::Star { center, branches } => {
            let (center, branches) = (*center, branches);
            let loc = |v| locate(branches, v);
            match supp.as_slice() {
                [v] if *v == center && vertex == center => out.push(Display::Case2a),
                [v] if *v == vertex => out.push(Display::Case2b),
                [x, y] if ones && supp.contains(&vertex) => {
                    if *x == center || *y == center {
                        out.push(if vertex == center {
                            Display::Case2eCenter
                        } else {
                            Display::Case2eBranch
                        });
                    } else if loc(*x).unwrap().0 == loc(*y).unwrap().0 {
                        out.push(Display::Case2d);
                    } else {
                        out.push(Display::Case2c);
                    }
                }
                _ => {}
            }
            if let [s] = supp.as_slice() {
                if vertex == center && a[*s] == 1 && *s != center {
                    let (bi, k) = loc(*s).unwrap();
                    if k + 1 == branches[bi].len() {
                        out.push(Display::CentralCurve);
                    }
                }
            }
        }
    }
    out
}

/// First matching display, evaluated.
pub fn closed_form_f(g: &WeightedDualGraph, a: &[u32], vertex: usize) -> Result<Q> {
    let ds = matching_displays(g, a, vertex)?;
    let d = ds.first().ok_or(LdpError::UnsupportedConfiguration)?;
    evaluate_display(g, a, vertex, *d)
}

pub fn evaluate_display(
    g: &WeightedDualGraph,
    a: &[u32],
    vertex: usize,
    display: Display,
) -> Result<Q> {
    if !matching_displays(g, a, vertex)?.contains(&display) {
        return Err(LdpError::UnsupportedConfiguration);
    }
    Ok(eval_with(
        g.len(),
        &g.shape()?,
        a,
        vertex,
        display,
        &|set: &[usize]| delta(g, set),
    ))
}

/// Evaluates a display already known to match; `dl` gives Δ of a vertex subset.
pub(crate) fn eval_with<T>(
    n: usize,
    shape: &Shape,
    a: &[u32],
    vertex: usize,
    display: Display,
    dl: &dyn Fn(&[usize]) -> T,
) -> T
where
    T: Num + NumRef + Clone + FromPrimitive,
    for<'x> &'x T: RefNum<T>,
{
    let one = T::one();
    let int = |k: i64| T::from_i64(k).expect("small integer");
    let dg = dl(&(0..n).collect::<Vec<_>>());
    let supp = support(a);
    let av = int(a[vertex] as i64);
    match (shape, display) {
        (Shape::Chain(p), Display::Case1a) => {
            let k = p.iter().position(|&x| x == vertex).unwrap();
            let (d1, d2) = (dl(&p[..k]), dl(&p[k + 1..]));
            &d1 * &d2 / &dg * (&one / &d1 + &one / &d2 - av)
        }
        (Shape::Chain(p), Display::Case1b) => {
            let pos = |v| p.iter().position(|&x| x == v).unwrap();
            let other = if supp[0] == vertex { supp[1] } else { supp[0] };
            let (i, j) = (pos(vertex), pos(other));
            // orient so that the vertex comes first
            let q: Vec<usize> = if i < j {
                p.clone()
            } else {
                p.iter().rev().copied().collect()
            };
            let (i, j) = if i < j {
                (i, j)
            } else {
                (p.len() - 1 - i, p.len() - 1 - j)
            };
            let d1 = dl(&q[..i]);
            let d3 = dl(&q[j + 1..]);
            let d23 = dl(&q[i + 1..]);
            &d1 * &d23 / &dg * ((&one - &d1) / &d1 + (&one - &d3) / &d23)
        }
        (Shape::Chain(p), Display::CentralCurve) => {
            let k = p.iter().position(|&x| x == vertex).unwrap();
            let s = supp[0];
            let (left, right) = (&p[..k], &p[k + 1..]);
            let (d1, d2, d3) = if s == vertex {
                (one.clone(), dl(left), dl(right))
            } else if left.contains(&s) {
                (dl(left), dl(right), one.clone())
            } else {
                (dl(right), dl(left), one.clone())
            };
            &d1 * &d2 * &d3 / &dg * (&one / &d2 + &one / &d3 - &one)
        }
        (Shape::Star { branches, .. }, Display::Case2a) => {
            let ds: Vec<T> = branches.iter().map(|b| dl(b)).collect();
            let inv = ds.iter().fold(T::zero(), |acc, d| acc + &one / d);
            &ds[0] * &ds[1] * &ds[2] / &dg * (inv - (&one + av))
        }
        (Shape::Star { branches, .. }, Display::Case2b) => {
            let (bi, k) = locate(branches, vertex).unwrap();
            let g11 = &branches[bi][k + 1..];
            let mut drop = g11.to_vec();
            drop.push(vertex);
            let gp = dl(&minus(n, &drop));
            let others: Vec<T> = (0..3)
                .filter(|&i| i != bi)
                .map(|i| dl(&branches[i]))
                .collect();
            let d11 = dl(g11);
            let num = &one - (&others[1] - &one) * (&others[0] - &one);
            &d11 * &gp / &dg * (num / &gp + &one / &d11 - av)
        }
        (Shape::Star { branches, .. }, Display::Case2c) => {
            let other = if supp[0] == vertex { supp[1] } else { supp[0] };
            let (b1, k1) = locate(branches, vertex).unwrap();
            let (b2, k2) = locate(branches, other).unwrap();
            let b3 = 3 - b1 - b2;
            let g11 = &branches[b1][k1 + 1..];
            let g21 = &branches[b2][k2 + 1..];
            let mut drop = g11.to_vec();
            drop.push(vertex);
            let gp = dl(&minus(n, &drop));
            let (d2, d3) = (dl(&branches[b2]), dl(&branches[b3]));
            let (d11, d21) = (dl(g11), dl(g21));
            let num = &one - (&d2 - &one) * (&d3 - &one);
            &gp * &d11 / &dg * (num / &gp + (&one - &d11) / &d11 - &d21 * &d3 / &gp)
        }
        (Shape::Star { branches, .. }, Display::Case2d) => {
            let other = if supp[0] == vertex { supp[1] } else { supp[0] };
            let (bi, kv) = locate(branches, vertex).unwrap();
            let (_, ko) = locate(branches, other).unwrap();
            // v1 is the support vertex farther from the center
            let (k1, k2) = if kv > ko { (kv, ko) } else { (ko, kv) };
            let br = &branches[bi];
            let (v1, v2) = (br[k1], br[k2]);
            let g11 = &br[k1 + 1..];
            let g12 = &br[k2 + 1..k1];
            let mut drop_a = g11.to_vec();
            drop_a.push(v1);
            let ga = minus(n, &drop_a);
            let mut drop_b = drop_a.clone();
            drop_b.extend(g12);
            drop_b.push(v2);
            let gb = minus(n, &drop_b);
            let mut drop_c = gb.clone();
            drop_c.push(v2);
            let gc = minus(n, &drop_c);
            let others: Vec<T> = (0..3)
                .filter(|&i| i != bi)
                .map(|i| dl(&branches[i]))
                .collect();
            let num = &one - (&others[0] - &one) * (&others[1] - &one);
            let (d11, da, db, dc) = (dl(g11), dl(&ga), dl(&gb), dl(&gc));
            if vertex == v1 {
                &d11 * &da / &dg * (num / &da + (&one - &d11) / &d11 - &db / &da)
            } else {
                &db * &dc / &dg * (num / &db + (&one - &dc) / &dc - &d11 / &dc)
            }
        }
        (Shape::Star { branches, .. }, Display::Case2eBranch) => {
            let (b1, k) = locate(branches, vertex).unwrap();
            let g11 = &branches[b1][k + 1..];
            let mut drop = g11.to_vec();
            drop.push(vertex);
            let gp = dl(&minus(n, &drop));
            let others: Vec<T> = (0..3)
                .filter(|&i| i != b1)
                .map(|i| dl(&branches[i]))
                .collect();
            let d11 = dl(g11);
            let num = &one - (&others[0] - &one) * (&others[1] - &one);
            &gp * &d11 / &dg * (num / &gp + (&one - &d11) / &d11 - &others[0] * &others[1] / &gp)
        }
        (Shape::Star { center, branches }, Display::Case2eCenter) => {
            let v1 = if supp[0] == *center { supp[1] } else { supp[0] };
            let (b1, k) = locate(branches, v1).unwrap();
            let d11 = dl(&branches[b1][k + 1..]);
            let ds: Vec<T> = branches.iter().map(|b| dl(b)).collect();
            let inv = ds.iter().fold(T::zero(), |acc, d| acc + &one / d);
            &ds[0] * &ds[1] * &ds[2] / &dg * (inv - int(2) - d11 / &ds[b1])
        }
        (Shape::Star { branches, .. }, Display::CentralCurve) => {
            let (b1, _) = locate(branches, supp[0]).unwrap();
            let d1 = dl(&branches[b1]);
            let others: Vec<T> = (0..3)
                .filter(|&i| i != b1)
                .map(|i| dl(&branches[i]))
                .collect();
            &d1 * &others[0] * &others[1] / &dg * (&one / &others[0] + &one / &others[1] - &one)
        }
        _ => unreachable!("display does not match the shape"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::discrepancy::pair_coefficients;
    use crate::rational::{q, qi};

    #[test]
    fn chain_examples() {
        let g = WeightedDualGraph::chain(&[2, 4]);
        assert_eq!(closed_form_f(&g, &[1, 0], 0).unwrap(), q(1, 7));
        assert_eq!(
            closed_form_f(&WeightedDualGraph::chain(&[2]), &[2], 0).unwrap(),
            qi(0)
        );
        assert_eq!(
            closed_form_f(&g, &[1, 0], 1).unwrap(),
            pair_coefficients(&g, &[1, 0]).unwrap().f[1]
        );
    }

    #[test]
    fn central_curve_after_removing_a_branch() {
        // [2;[2],[3],[5]] with the [5] vertex replaced by a boundary meeting the center
        let g = WeightedDualGraph::chain(&[2, 2, 3]);
        let v = evaluate_display(&g, &[0, 1, 0], 1, Display::CentralCurve).unwrap();
        assert_eq!(v, q(-1, 7));
        assert_eq!(v, pair_coefficients(&g, &[0, 1, 0]).unwrap().f[1]);
    }

    #[test]
    fn unsupported() {
        let g = WeightedDualGraph::chain(&[2, 2, 2]);
        assert_eq!(
            closed_form_f(&g, &[1, 1, 1], 0),
            Err(LdpError::UnsupportedConfiguration)
        );
        assert_eq!(
            evaluate_display(&g, &[1, 0, 0], 0, Display::Case2a),
            Err(LdpError::UnsupportedConfiguration)
        );
    }
}
