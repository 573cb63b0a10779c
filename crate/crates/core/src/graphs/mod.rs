//! Weighted dual graphs (chains and three-branch stars), Dynkin types, the
//! bracket notation, and the 21 families of types 2[2^4] + (†).

mod families;
mod notation;

pub use families::{enumerate_families, families, family_type, Family, FamilyInstance, ParamRange};
pub use notation::{format_dynkin, format_graph, parse_dynkin};

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{LdpError, Result};
use crate::linalg;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vertex {
    pub id: String,
    pub weight: u32,
}

/// A simple graph whose vertex `i` is a smooth rational curve of
/// self-intersection `-weight`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightedDualGraph {
    vertices: Vec<Vertex>,
    edges: Vec<(usize, usize)>,
}

/// Structural view of a graph, in terms of vertex indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Shape {
    Empty,
    /// Vertex indices end to end.
    Chain(Vec<usize>),
    /// Center index and three branches, each listed from the center outward.
    Star {
        center: usize,
        branches: [Vec<usize>; 3],
    },
}

impl WeightedDualGraph {
    pub fn empty() -> Self {
        WeightedDualGraph {
            vertices: vec![],
            edges: vec![],
        }
    }

    /// Builds a graph from explicit vertices and edges. The result must be a
    /// chain, a three-branch star, or empty.
    pub fn from_parts(vertices: Vec<Vertex>, edges: Vec<(usize, usize)>) -> Result<Self> {
        let n = vertices.len();
        let mut seen = std::collections::HashSet::new();
        let mut norm = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            if a == b || a >= n || b >= n {
                return Err(LdpError::BadShape);
            }
            let e = (a.min(b), a.max(b));
            if !seen.insert(e) {
                return Err(LdpError::BadShape);
            }
            norm.push(e);
        }
        norm.sort();
        let ids: std::collections::HashSet<_> = vertices.iter().map(|v| &v.id).collect();
        if ids.len() != n {
            return Err(LdpError::BadShape);
        }
        let g = WeightedDualGraph {
            vertices,
            edges: norm,
        };
        g.shape()?;
        Ok(g)
    }

    /// Chain with the given weights, in canonical direction.
    pub fn chain(weights: &[u32]) -> Self {
        let mut w = weights.to_vec();
        let rev: Vec<u32> = w.iter().rev().copied().collect();
        if rev < w {
            w = rev;
        }
        Self::chain_as_given(&w)
    }

    fn chain_as_given(w: &[u32]) -> Self {
        let vertices = w
            .iter()
            .enumerate()
            .map(|(i, &weight)| Vertex {
                id: format!("v{i}"),
                weight,
            })
            .collect();
        let edges = (1..w.len()).map(|i| (i - 1, i)).collect();
        WeightedDualGraph { vertices, edges }
    }

    /// Star with the given center weight and branches (each from the center
    /// outward). Empty branches degenerate the star to a chain.
    pub fn star(center: u32, branches: [&[u32]; 3]) -> Self {
        let mut bs: Vec<Vec<u32>> = branches
            .iter()
            .filter(|b| !b.is_empty())
            .map(|b| b.to_vec())
            .collect();
        if bs.len() < 3 {
            let mut w: Vec<u32> = bs
                .first()
                .map(|b| b.iter().rev().copied().collect())
                .unwrap_or_default();
            w.push(center);
            if let Some(b) = bs.get(1) {
                w.extend(b);
            }
            return Self::chain(&w);
        }
        bs.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
        let mut vertices = vec![Vertex {
            id: "v0".into(),
            weight: center,
        }];
        let mut edges = vec![];
        for b in &bs {
            let mut prev = 0;
            for &w in b {
                let i = vertices.len();
                vertices.push(Vertex {
                    id: format!("v{i}"),
                    weight: w,
                });
                edges.push((prev, i));
                prev = i;
            }
        }
        edges.sort();
        WeightedDualGraph { vertices, edges }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn weights(&self) -> Vec<u32> {
        self.vertices.iter().map(|v| v.weight).collect()
    }

    pub fn weight(&self, i: usize) -> u32 {
        self.vertices[i].weight
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v.id == id)
    }

    pub fn neighbors(&self, i: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == i {
                    Some(b)
                } else if b == i {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn degree(&self, i: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == i || b == i)
            .count()
    }

    pub fn is_connected(&self) -> bool {
        let n = self.len();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Walks from `start` away from `from` until the path ends.
    fn walk(&self, start: usize, from: usize) -> Vec<usize> {
        let mut path = vec![start];
        let (mut prev, mut cur) = (from, start);
        loop {
            let next: Vec<usize> = self
                .neighbors(cur)
                .into_iter()
                .filter(|&w| w != prev)
                .collect();
            match next.as_slice() {
                [w] => {
                    path.push(*w);
                    prev = cur;
                    cur = *w;
                }
                _ => return path,
            }
        }
    }

    pub fn shape(&self) -> Result<Shape> {
        let n = self.len();
        if n == 0 {
            return Ok(Shape::Empty);
        }
        if !self.is_connected() || self.edges.len() != n - 1 {
            return Err(LdpError::BadShape);
        }
        let degs: Vec<usize> = (0..n).map(|i| self.degree(i)).collect();
        let high: Vec<usize> = (0..n).filter(|&i| degs[i] > 2).collect();
        match high.as_slice() {
            [] => {
                let start = (0..n).find(|&i| degs[i] <= 1).unwrap();
                Ok(Shape::Chain(self.walk(start, usize::MAX)))
            }
            [c] if degs[*c] == 3 => {
                let nb = self.neighbors(*c);
                Ok(Shape::Star {
                    center: *c,
                    branches: [
                        self.walk(nb[0], *c),
                        self.walk(nb[1], *c),
                        self.walk(nb[2], *c),
                    ],
                })
            }
            _ => Err(LdpError::BadShape),
        }
    }

    pub fn is_chain(&self) -> bool {
        matches!(self.shape(), Ok(Shape::Chain(_)))
    }

    pub fn is_star(&self) -> bool {
        matches!(self.shape(), Ok(Shape::Star { .. }))
    }

    /// Same graph relabeled into canonical vertex order.
    pub fn canonical(&self) -> Self {
        match self.shape().expect("graph shape validated on construction") {
            Shape::Empty => Self::empty(),
            Shape::Chain(p) => Self::chain(&p.iter().map(|&i| self.weight(i)).collect::<Vec<_>>()),
            Shape::Star { center, branches } => {
                let bw: Vec<Vec<u32>> = branches
                    .iter()
                    .map(|b| b.iter().map(|&i| self.weight(i)).collect())
                    .collect();
                Self::star(self.weight(center), [&bw[0], &bw[1], &bw[2]])
            }
        }
    }

    /// Induced subgraph on `keep`, preserving vertex order. May be
    /// disconnected; callers use it for determinants only.
    pub fn induced(&self, keep: &[usize]) -> InducedGraph {
        let pos = |v: usize| keep.iter().position(|&k| k == v);
        let weights = keep.iter().map(|&i| self.weight(i)).collect();
        let edges = self
            .edges
            .iter()
            .filter_map(|&(a, b)| Some((pos(a)?, pos(b)?)))
            .collect();
        InducedGraph { weights, edges }
    }

    pub fn intersection_matrix(&self) -> Vec<Vec<i64>> {
        self.induced(&(0..self.len()).collect::<Vec<_>>()).matrix()
    }

    pub fn is_negative_definite(&self) -> bool {
        linalg::is_negative_definite(&linalg::to_big(&self.intersection_matrix()))
    }

    /// |det M|; 1 for the empty graph.
    pub fn determinant(&self) -> Result<BigInt> {
        if !self.is_negative_definite() {
            return Err(LdpError::NotNegativeDefinite);
        }
        Ok(self.induced_all().abs_det())
    }

    fn induced_all(&self) -> InducedGraph {
        self.induced(&(0..self.len()).collect::<Vec<_>>())
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            vertices: self
                .vertices
                .iter()
                .map(|v| VertexJson {
                    id: v.id.clone(),
                    self_int: -(v.weight as i64),
                })
                .collect(),
            edges: self
                .edges
                .iter()
                .map(|&(a, b)| [self.vertices[a].id.clone(), self.vertices[b].id.clone()])
                .collect(),
        }
    }

    pub fn from_json(j: &GraphJson) -> Result<Self> {
        let mut vertices = Vec::new();
        for v in &j.vertices {
            if v.self_int > -2 {
                return Err(LdpError::WeightTooSmall {
                    offset: 0,
                    weight: (-v.self_int).max(0) as u64,
                });
            }
            vertices.push(Vertex {
                id: v.id.clone(),
                weight: (-v.self_int) as u32,
            });
        }
        let idx = |id: &str| {
            vertices
                .iter()
                .position(|v| v.id == id)
                .ok_or(LdpError::BadShape)
        };
        let mut edges = vec![];
        for [a, b] in &j.edges {
            edges.push((idx(a)?, idx(b)?));
        }
        Self::from_parts(vertices, edges)
    }
}

/// A possibly disconnected vertex-weighted graph, used for Δ of subgraphs.
#[derive(Debug, Clone)]
pub struct InducedGraph {
    pub weights: Vec<u32>,
    pub edges: Vec<(usize, usize)>,
}

impl InducedGraph {
    pub fn matrix(&self) -> Vec<Vec<i64>> {
        let n = self.weights.len();
        let mut m = vec![vec![0i64; n]; n];
        for (i, &w) in self.weights.iter().enumerate() {
            m[i][i] = -(w as i64);
        }
        for &(a, b) in &self.edges {
            m[a][b] = 1;
            m[b][a] = 1;
        }
        m
    }

    pub fn abs_det(&self) -> BigInt {
        if self.weights.is_empty() {
            return BigInt::one();
        }
        let d = linalg::det_i64(&self.matrix());
        if d < BigInt::from(0) {
            -d
        } else {
            d
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexJson {
    pub id: String,
    pub self_int: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: Vec<VertexJson>,
    pub edges: Vec<[String; 2]>,
}

/// Multiset of nonempty connected graphs, kept in canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct DynkinType {
    components: Vec<WeightedDualGraph>,
}

fn component_key(g: &WeightedDualGraph) -> (bool, std::cmp::Reverse<usize>, Vec<u32>) {
    (g.is_star(), std::cmp::Reverse(g.len()), g.weights())
}

impl DynkinType {
    pub fn new(components: Vec<WeightedDualGraph>) -> Self {
        let mut components: Vec<_> = components
            .into_iter()
            .filter(|g| !g.is_empty())
            .map(|g| g.canonical())
            .collect();
        components.sort_by_key(component_key);
        DynkinType { components }
    }

    pub fn components(&self) -> &[WeightedDualGraph] {
        &self.components
    }

    pub fn vertex_count(&self) -> usize {
        self.components.iter().map(|g| g.len()).sum()
    }

    pub fn is_negative_definite(&self) -> bool {
        self.components.iter().all(|g| g.is_negative_definite())
    }

    /// Block-diagonal intersection matrix of all components.
    pub fn intersection_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.vertex_count();
        let mut m = vec![vec![0; n]; n];
        let mut off = 0;
        for g in &self.components {
            let b = g.intersection_matrix();
            for i in 0..b.len() {
                for j in 0..b.len() {
                    m[off + i][off + j] = b[i][j];
                }
            }
            off += b.len();
        }
        m
    }

    pub fn determinant(&self) -> Result<BigInt> {
        self.components
            .iter()
            .try_fold(BigInt::one(), |acc, g| Ok(acc * g.determinant()?))
    }

    pub fn sum(&self, other: &DynkinType) -> DynkinType {
        let mut c = self.components.clone();
        c.extend(other.components.iter().cloned());
        DynkinType::new(c)
    }
}

impl std::fmt::Display for DynkinType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&format_dynkin(self))
    }
}

impl std::fmt::Display for WeightedDualGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&format_graph(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrices() {
        assert_eq!(
            WeightedDualGraph::chain(&[2, 4]).intersection_matrix(),
            vec![vec![-2, 1], vec![1, -4]]
        );
        assert_eq!(
            WeightedDualGraph::chain(&[2]).intersection_matrix(),
            vec![vec![-2]]
        );
        let s = WeightedDualGraph::star(2, [&[2], &[3], &[5]]);
        let m = s.intersection_matrix();
        assert_eq!(
            (0..4).map(|i| m[i][i]).collect::<Vec<_>>(),
            vec![-2, -2, -3, -5]
        );
        assert!((1..4).all(|i| m[0][i] == 1 && m[i][0] == 1));
    }

    #[test]
    fn determinants() {
        assert_eq!(
            WeightedDualGraph::chain(&[2, 2, 2, 2])
                .determinant()
                .unwrap(),
            BigInt::from(5)
        );
        assert_eq!(
            WeightedDualGraph::chain(&[2, 4]).determinant().unwrap(),
            BigInt::from(7)
        );
        assert_eq!(
            WeightedDualGraph::star(2, [&[2], &[3], &[5]])
                .determinant()
                .unwrap(),
            BigInt::from(29)
        );
        assert_eq!(
            WeightedDualGraph::empty().determinant().unwrap(),
            BigInt::one()
        );
    }

    #[test]
    fn definiteness() {
        assert!(WeightedDualGraph::chain(&[2, 4]).is_negative_definite());
        assert!(WeightedDualGraph::empty().is_negative_definite());
        assert!(WeightedDualGraph::star(2, [&[2], &[2], &[2]]).is_negative_definite());
        // affine E6 is semidefinite
        assert!(!WeightedDualGraph::star(2, [&[2, 2], &[2, 2], &[2, 2]]).is_negative_definite());
        let bad = WeightedDualGraph::star(2, [&[2, 2], &[2, 2], &[2, 2]]);
        assert_eq!(bad.determinant(), Err(LdpError::NotNegativeDefinite));
    }

    #[test]
    fn canonical_direction_and_branch_order() {
        assert_eq!(WeightedDualGraph::chain(&[4, 2]).weights(), vec![2, 4]);
        let s = WeightedDualGraph::star(2, [&[5], &[2], &[3]]);
        assert_eq!(s.weights(), vec![2, 2, 3, 5]);
        let d = WeightedDualGraph::star(3, [&[2], &[], &[4]]);
        assert_eq!(d.weights(), vec![2, 3, 4]);
    }

    #[test]
    fn shapes_rejected() {
        let v = |i: usize| Vertex {
            id: format!("x{i}"),
            weight: 2,
        };
        let cycle =
            WeightedDualGraph::from_parts((0..3).map(v).collect(), vec![(0, 1), (1, 2), (2, 0)]);
        assert_eq!(cycle, Err(LdpError::BadShape));
        let d5 = WeightedDualGraph::from_parts(
            (0..5).map(v).collect(),
            vec![(0, 1), (0, 2), (0, 3), (0, 4)],
        );
        assert_eq!(d5, Err(LdpError::BadShape));
    }

    #[test]
    fn json_round_trip() {
        let s = WeightedDualGraph::star(2, [&[2], &[3], &[5]]);
        let j = s.to_json();
        assert_eq!(j.vertices[3].self_int, -5);
        assert_eq!(WeightedDualGraph::from_json(&j).unwrap(), s);
    }
}
