//! Exhaustive sweep over small chains and three-branch stars checking the
//! incidence criterion ⟨a,b⟩ ≤ 2, monotonicity in a, and every closed-form
//! display against the linear solve.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use super::closed_form::{eval_with, matching_with};
use super::{classify_verdicts, kappa, Verdict};
use crate::graphs::{Shape, WeightedDualGraph};
use num_rational::Ratio;

use crate::rational::Q;

type R = Ratio<i128>;

/// Chains and three-branch stars with at most `max_vertices` vertices and
/// weights in 2..=max_weight, one per isomorphism class, in canonical order.
pub fn sweep_graphs(max_vertices: usize, max_weight: u32) -> Vec<WeightedDualGraph> {
    let mut seen = BTreeSet::new();
    let mut out = vec![];
    let mut push = |g: WeightedDualGraph| {
        if seen.insert(g.to_string()) {
            out.push(g);
        }
    };
    for k in 1..=max_vertices {
        for w in words(k, max_weight) {
            push(WeightedDualGraph::chain(&w));
        }
    }
    for l1 in 1..=max_vertices {
        for l2 in l1..=max_vertices {
            for l3 in l2..=max_vertices {
                if 1 + l1 + l2 + l3 > max_vertices {
                    continue;
                }
                for w in words(1 + l1 + l2 + l3, max_weight) {
                    let (b1, rest) = w[1..].split_at(l1);
                    let (b2, b3) = rest.split_at(l2);
                    push(WeightedDualGraph::star(w[0], [b1, b2, b3]));
                }
            }
        }
    }
    out
}

fn words(k: usize, max_weight: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|w: Vec<u32>| {
                (2..=max_weight).map(move |x| {
                    let mut v = w.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out
}

/// The supports on which ⟨a,b⟩ ≤ 2 is possible: one vertex with a = 1, a
/// one-vertex graph with a = 2, or the two ends of a chain with a = 1 each.
pub fn admissible_pattern(g: &WeightedDualGraph, a: &[u32]) -> bool {
    let supp: Vec<usize> = (0..a.len()).filter(|&i| a[i] > 0).collect();
    match supp.as_slice() {
        [v] => a[*v] == 1 || (g.len() == 1 && a[*v] == 2),
        [x, y] => {
            a[*x] == 1
                && a[*y] == 1
                && match g.shape() {
                    Ok(Shape::Chain(p)) => {
                        let ends = [p[0], p[p.len() - 1]];
                        ends.contains(x) && ends.contains(y)
                    }
                    _ => false,
                }
        }
        _ => false,
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct SweepReport {
    pub graphs: usize,
    pub klt_graphs: usize,
    pub incidence_vectors: usize,
    pub admissible_with_small_pairing: usize,
    pub display_checks: usize,
    pub monotonicity_checks: usize,
    /// Human-readable descriptions of every violated check.
    pub failures: Vec<String>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn merge(mut self, o: SweepReport) -> SweepReport {
        self.graphs += o.graphs;
        self.klt_graphs += o.klt_graphs;
        self.incidence_vectors += o.incidence_vectors;
        self.admissible_with_small_pairing += o.admissible_with_small_pairing;
        self.display_checks += o.display_checks;
        self.monotonicity_checks += o.monotonicity_checks;
        self.failures.extend(o.failures);
        self
    }
}

fn vectors(n: usize, max_sum: u32) -> Vec<Vec<u32>> {
    let mut out = vec![];
    let mut cur = vec![0u32; n];
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == cur.len() {
            if cur.iter().any(|&x| x > 0) {
                out.push(cur.clone());
            }
            return;
        }
        for x in 0..=left {
            cur[i] = x;
            rec(i + 1, left - x, cur, out);
        }
        cur[i] = 0;
    }
    rec(0, max_sum, &mut cur, &mut out);
    out
}

/// Integer data for one graph: Δ of every vertex subset, Δ, adj = Δ·(−M⁻¹)
/// (entrywise positive) and Δ·e.
struct Fast {
    dets: Vec<i64>,
    delta: i64,
    adj: Vec<Vec<i64>>,
    de: Vec<i64>,
}

impl Fast {
    fn new(g: &WeightedDualGraph) -> Fast {
        let n = g.len();
        assert!(n <= 16, "sweep graphs are small");
        let dets: Vec<i64> = (0..1usize << n)
            .map(|mask| {
                let set: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
                g.induced(&set).abs_det().try_into().expect("small graph")
            })
            .collect();
        let delta = dets[(1 << n) - 1];
        // on a tree, (−M⁻¹)_ij = Δ(Γ − path(i, j)) / Δ(Γ)
        let adj: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| dets[((1 << n) - 1) & !path_mask(g, i, j)])
                    .collect()
            })
            .collect();
        let k: Vec<i64> = kappa(g)
            .iter()
            .map(|x| x.to_integer().try_into().unwrap())
            .collect();
        let de = adj
            .iter()
            .map(|r| r.iter().zip(&k).map(|(x, y)| x * y).sum())
            .collect();
        Fast {
            dets,
            delta,
            adj,
            de,
        }
    }

    fn subset_det(&self, set: &[usize]) -> i64 {
        self.dets[set.iter().fold(0usize, |m, &i| m | 1 << i)]
    }

    /// Δ·d.
    fn dd(&self, a: &[u32]) -> Vec<i64> {
        self.adj
            .iter()
            .map(|r| r.iter().zip(a).map(|(x, &y)| x * y as i64).sum())
            .collect()
    }

    /// Δ·⟨a,b⟩.
    fn pairing(&self, a: &[u32]) -> i64 {
        let dd = self.dd(a);
        a.iter()
            .enumerate()
            .map(|(i, &x)| x as i64 * (dd[i] + self.de[i]))
            .sum()
    }
}

fn path_mask(g: &WeightedDualGraph, i: usize, j: usize) -> usize {
    let n = g.len();
    let mut parent = vec![usize::MAX; n];
    let mut stack = vec![i];
    parent[i] = i;
    while let Some(v) = stack.pop() {
        for w in g.neighbors(v) {
            if parent[w] == usize::MAX {
                parent[w] = v;
                stack.push(w);
            }
        }
    }
    let mut mask = 1 << j;
    let mut v = j;
    while v != i {
        v = parent[v];
        mask |= 1 << v;
    }
    mask
}

fn sweep_one(g: &WeightedDualGraph, max_a: u32) -> SweepReport {
    let mut r = SweepReport {
        graphs: 1,
        ..Default::default()
    };
    if !g.is_negative_definite() {
        r.failures.push(format!("{g}: not negative definite"));
        return r;
    }
    let fast = Fast::new(g);
    let shape = g.shape().expect("validated shape");
    let n = g.len();
    let dl = |set: &[usize]| R::from_integer(fast.subset_det(set) as i128);
    let klt = fast.de.iter().all(|&x| x < fast.delta);
    r.klt_graphs += klt as usize;
    for a in vectors(g.len(), max_a) {
        r.incidence_vectors += 1;
        let p = fast.pairing(&a);
        let small = p <= 2 * fast.delta;
        let adm = admissible_pattern(g, &a);
        if small {
            r.admissible_with_small_pairing += 1;
        }
        if small && !adm {
            r.failures.push(format!(
                "{g} a={a:?}: pairing {}/{} but admissible = {adm}",
                p, fast.delta
            ));
        }
        let pairing = Q::new(p.into(), fast.delta.into());
        let verdicts = classify_verdicts(g, &a, &pairing);
        if (verdicts != [Verdict::Rejected]) != small {
            r.failures.push(format!(
                "{g} a={a:?}: verdicts {verdicts:?} disagree with pairing"
            ));
        }
        for i in 0..a.len() {
            if a[i] > 0 {
                let mut smaller = a.clone();
                smaller[i] -= 1;
                r.monotonicity_checks += 1;
                if fast.pairing(&smaller) >= p {
                    r.failures.push(format!("{g} a={a:?}: not monotone at {i}"));
                }
            }
        }
        let dd = fast.dd(&a);
        for v in 0..g.len() {
            let displays = matching_with(&shape, &a, v);
            if displays.is_empty() {
                continue;
            }
            let f = R::new(
                (fast.delta - dd[v] - fast.de[v]) as i128,
                fast.delta as i128,
            );
            for d in displays {
                r.display_checks += 1;
                let x = eval_with(n, &shape, &a, v, d, &dl);
                if x != f {
                    r.failures.push(format!(
                        "{g} a={a:?} v={v} {d:?}: closed form {x} != solver {f}"
                    ));
                }
            }
        }
    }
    r
}

/// Runs the sweep over all graphs with at most `max_vertices` vertices,
/// weights ≤ `max_weight`, and incidence vectors with Σa ≤ `max_a`. The
/// klt count is informational; every check runs on every graph.
pub fn incidence_sweep(max_vertices: usize, max_weight: u32, max_a: u32) -> SweepReport {
    sweep_graphs(max_vertices, max_weight)
        .par_iter()
        .map(|g| sweep_one(g, max_a))
        .reduce(SweepReport::default, SweepReport::merge)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_counts() {
        // chains up to reversal: 3 + 6 with weights {2,3,4}, lengths 1..=2
        assert_eq!(sweep_graphs(2, 4).len(), 9);
        let g = sweep_graphs(4, 2);
        assert_eq!(g.iter().filter(|g| g.is_star()).count(), 1);
    }

    #[test]
    fn small_sweep_passes() {
        let r = incidence_sweep(4, 4, 3);
        assert!(r.passed(), "{:?}", &r.failures[..r.failures.len().min(5)]);
        assert!(r.display_checks > 0);
    }
}
