//! Finite simple graphs with unit-length edges, viewed as geodesic metric
//! spaces whose points are the vertices and the points inside edges.

mod blocks;
mod cycles;
pub(crate) mod grid;

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::value::{QuarterValue, Rational};

pub use blocks::{t_decomposition, TDecomposition};
pub use cycles::{enumerate_cycles, CycleEnumeration, DEFAULT_CYCLE_CAP};

const NO_EDGE: u32 = u32::MAX;
pub(crate) const INF: u32 = u32::MAX;

/// A simple undirected graph on vertices `0..n` with every edge of length 1.
///
/// Hop distances between vertices are computed once at construction.
#[derive(Clone, PartialEq, Eq)]
pub struct UnitGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    edge_id: Vec<u32>,
    dist: Vec<u32>,
}

impl UnitGraph {
    /// Rejects loops, repeated edges and out-of-range endpoints.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Invalid(format!("edge {u}-{v} out of range for n = {n}")));
            }
            if u == v {
                return Err(Error::Invalid(format!("loop at vertex {u}")));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Invalid(format!("repeated edge {}-{}", w[0].0, w[0].1)));
        }
        Ok(Self::from_sorted(n, list))
    }

    /// Builds a graph with an edge `uv` for each pair `u < v` where `f(u, v)`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut list = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if f(u, v) {
                    list.push((u, v));
                }
            }
        }
        Self::from_sorted(n, list)
    }

    fn from_sorted(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        let mut edge_id = vec![NO_EDGE; n * n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            adj[u].push(v);
            adj[v].push(u);
            edge_id[u * n + v] = i as u32;
            edge_id[v * n + u] = i as u32;
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        let mut dist = vec![INF; n * n];
        let mut queue = VecDeque::new();
        for s in 0..n {
            let row = &mut dist[s * n..(s + 1) * n];
            row[s] = 0;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for &w in &adj[u] {
                    if row[w] == INF {
                        row[w] = row[u] + 1;
                        queue.push_back(w);
                    }
                }
            }
        }
        UnitGraph {
            n,
            edges,
            adj,
            edge_id,
            dist,
        }
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        Self::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle")
    }

    pub fn path(n: usize) -> Self {
        Self::new(n, (1..n).map(|i| (i - 1, i))).expect("path")
    }

    pub fn complete(n: usize) -> Self {
        Self::from_fn(n, |_, _| true)
    }

    pub fn empty(n: usize) -> Self {
        Self::from_sorted(n, Vec::new())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.edge_id[u * self.n + v] != NO_EDGE
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        if u >= self.n || v >= self.n {
            return None;
        }
        let id = self.edge_id[u * self.n + v];
        (id != NO_EDGE).then_some(id as usize)
    }

    /// Hop distance, `None` across components.
    pub fn dist(&self, u: usize, v: usize) -> Option<u32> {
        let d = self.dist[u * self.n + v];
        (d != INF).then_some(d)
    }

    pub(crate) fn dist_raw(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n + v]
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || (0..self.n).all(|v| self.dist_raw(0, v) != INF)
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let comp: Vec<usize> = (s..self.n).filter(|&v| self.dist_raw(s, v) != INF).collect();
            for &v in &comp {
                seen[v] = true;
            }
            out.push(comp);
        }
        out
    }

    pub fn is_forest(&self) -> bool {
        self.m() + self.components().len() == self.n
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.m() + 1 == self.n
    }

    /// The subgraph induced by `vertices`; vertex `i` of the result is
    /// `vertices[i]`.
    pub fn induced(&self, vertices: &[usize]) -> UnitGraph {
        UnitGraph::from_fn(vertices.len(), |i, j| self.has_edge(vertices[i], vertices[j]))
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> UnitGraph {
        UnitGraph::new(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v]))).expect("permutation")
    }

    /// The same graph with one extra edge or one edge removed.
    pub fn toggled(&self, u: usize, v: usize) -> UnitGraph {
        let key = (u.min(v), u.max(v));
        let mut edges: Vec<_> = self.edges.iter().copied().filter(|&e| e != key).collect();
        if edges.len() == self.edges.len() {
            edges.push(key);
        }
        UnitGraph::new(self.n, edges).expect("toggle")
    }
}

impl fmt::Debug for UnitGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("UnitGraph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

impl fmt::Display for UnitGraph {
    /// Edge-list format: `n` on the first line, then `u v` per edge.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.n)?;
        for (u, v) in &self.edges {
            writeln!(f, "{u} {v}")?;
        }
        Ok(())
    }
}

impl FromStr for UnitGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut n = None;
        let mut edges = Vec::new();
        for (i, raw) in s.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            let num = |t: &str| {
                t.parse::<usize>()
                    .map_err(|_| Error::parse(i + 1, format!("expected a vertex index, got {t:?}")))
            };
            match (n, tokens.as_slice()) {
                (None, [t]) => n = Some(num(t)?),
                (None, _) => return Err(Error::parse(i + 1, "first line must be the vertex count")),
                (Some(_), [a, b]) => edges.push((num(a)?, num(b)?)),
                (Some(_), _) => return Err(Error::parse(i + 1, "expected `u v`")),
            }
        }
        let n = n.ok_or_else(|| Error::parse(0, "missing vertex count"))?;
        UnitGraph::new(n, edges).map_err(|e| Error::parse(0, e.to_string()))
    }
}

/// A point of the metric graph: a vertex, or a point at `offset ∈ (0, 1)`
/// along edge `uv` measured from `u`, with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphPoint {
    Vertex(usize),
    OnEdge {
        u: usize,
        v: usize,
        #[serde(with = "crate::value::rational_str")]
        offset: Rational,
    },
}

impl GraphPoint {
    /// The point at `offset ∈ [0, 1]` from `a` towards `b`; endpoints collapse
    /// to vertices, so equal physical points compare equal.
    pub fn on_edge(a: usize, b: usize, offset: Rational) -> Result<Self> {
        if offset < Rational::zero() || offset > Rational::one() {
            return Err(Error::Invalid("edge offset outside [0, 1]".into()));
        }
        let (u, v, offset) = if a < b {
            (a, b, offset)
        } else {
            (b, a, Rational::one() - offset)
        };
        Ok(if offset.is_zero() {
            GraphPoint::Vertex(u)
        } else if offset.is_one() {
            GraphPoint::Vertex(v)
        } else {
            GraphPoint::OnEdge { u, v, offset }
        })
    }

    pub fn midpoint(u: usize, v: usize) -> Self {
        GraphPoint::on_edge(u, v, Rational::new(1, 2)).expect("midpoint")
    }

    pub fn is_vertex(&self) -> bool {
        matches!(self, GraphPoint::Vertex(_))
    }

    /// Ways to leave the point: `(endpoint vertex, distance to it)`.
    fn exits(&self) -> Vec<(usize, Rational)> {
        match *self {
            GraphPoint::Vertex(v) => vec![(v, Rational::zero())],
            GraphPoint::OnEdge { u, v, offset } => vec![(u, offset), (v, Rational::one() - offset)],
        }
    }

    fn check(&self, g: &UnitGraph) -> Result<()> {
        match *self {
            GraphPoint::Vertex(v) if v < g.n() => Ok(()),
            GraphPoint::Vertex(v) => Err(Error::Invalid(format!("vertex {v} out of range"))),
            GraphPoint::OnEdge { u, v, .. } if g.has_edge(u, v) => Ok(()),
            GraphPoint::OnEdge { u, v, .. } => Err(Error::MissingEdge(u, v)),
        }
    }
}

impl fmt::Display for GraphPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphPoint::Vertex(v) => write!(f, "v{v}"),
            GraphPoint::OnEdge { u, v, offset } => write!(f, "{u}-{v}@{}", crate::value::format_rational(offset)),
        }
    }
}

/// Exact geodesic distance between two points of the metric graph.
pub fn point_distance(g: &UnitGraph, p: &GraphPoint, q: &GraphPoint) -> Result<QuarterValue> {
    p.check(g)?;
    q.check(g)?;
    let mut best: Option<Rational> = None;
    if let (
        GraphPoint::OnEdge { u, v, offset: s },
        GraphPoint::OnEdge { u: x, v: y, offset: t },
    ) = (p, q)
    {
        if (u, v) == (x, y) {
            best = Some((s - t).abs());
        }
    }
    for (a, la) in p.exits() {
        for (b, lb) in q.exits() {
            if let Some(d) = g.dist(a, b) {
                let route = la + Rational::from_integer(d as i64) + lb;
                best = Some(best.map_or(route, |cur| cur.min(route)));
            }
        }
    }
    Ok(best.map_or(QuarterValue::Infinite, QuarterValue::Finite))
}

/// Largest hop distance between two vertices.
pub fn diameter_vertices(g: &UnitGraph) -> QuarterValue {
    let mut best = 0;
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            match g.dist(u, v) {
                Some(d) => best = best.max(d),
                None => return QuarterValue::Infinite,
            }
        }
    }
    QuarterValue::integer(best as i64)
}

/// Diameter of the whole metric graph, attained on the quarter grid.
pub fn diameter_graph(g: &UnitGraph) -> QuarterValue {
    if !g.is_connected() {
        return QuarterValue::Infinite;
    }
    if g.m() == 0 {
        return QuarterValue::ZERO;
    }
    let grid = grid::QuarterGrid::new(g);
    let mut best = 0;
    for a in 0..grid.len() {
        for b in a + 1..grid.len() {
            best = best.max(grid.d(a, b));
        }
    }
    QuarterValue::quarters(best as i64)
}

/// Degree of `v` in the subgraph induced by the vertices of `cycle`.
pub fn cycle_degree(g: &UnitGraph, cycle: &[usize], v: usize) -> Result<usize> {
    if !cycle.contains(&v) {
        return Err(Error::Precondition(format!("vertex {v} is not on the cycle")));
    }
    let mut members: Vec<usize> = cycle.to_vec();
    members.sort_unstable();
    members.dedup();
    Ok(members.iter().filter(|&&w| g.has_edge(v, w)).count())
}

pub fn is_regular_of_degree(g: &UnitGraph, k: usize) -> bool {
    (0..g.n()).all(|v| g.degree(v) == k)
}

/// Lexicographic breadth-first order, ties broken by smallest index.
pub fn lex_bfs(g: &UnitGraph) -> Vec<usize> {
    let n = g.n();
    let mut labels: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for step in 0..n {
        let next = (0..n)
            .filter(|&v| !visited[v])
            .fold(None, |acc: Option<usize>, v| match acc {
                Some(b) if labels[b] >= labels[v] => Some(b),
                _ => Some(v),
            })
            .expect("unvisited vertex");
        visited[next] = true;
        order.push(next);
        for &w in g.neighbors(next) {
            if !visited[w] {
                labels[w].push(n - step);
            }
        }
    }
    order
}

/// Chordality through a perfect elimination ordering: the reverse of a
/// lexicographic BFS order is one exactly when the graph is chordal.
pub fn is_chordal(g: &UnitGraph) -> bool {
    let order = lex_bfs(g);
    let mut pos = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    for &v in &order {
        let earlier: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| pos[w] < pos[v]).collect();
        if let Some(&parent) = earlier.iter().max_by_key(|&&w| pos[w]) {
            if earlier.iter().any(|&w| w != parent && !g.has_edge(w, parent)) {
                return false;
            }
        }
    }
    true
}
