//! The quarter grid: vertices plus the points at offsets 1/4, 1/2, 3/4 of
//! every edge, with exact pairwise distances in quarter units.
//!
//! Along an edge, the distance to any set whose extreme points sit on the
//! half grid is piecewise linear with slopes ±1 and breakpoints on the
//! quarter grid, so suprema and infima over the metric graph are attained
//! here.

use super::{GraphPoint, UnitGraph, INF};
use crate::value::Rational;

pub(crate) type PointId = u32;

pub(crate) struct QuarterGrid<'g> {
    g: &'g UnitGraph,
    dist: Vec<u32>,
}

impl<'g> QuarterGrid<'g> {
    pub fn new(g: &'g UnitGraph) -> Self {
        let len = g.n() + 3 * g.m();
        let mut grid = QuarterGrid {
            g,
            dist: Vec::new(),
        };
        let mut dist = vec![INF; len * len];
        for a in 0..len {
            for b in a..len {
                let d = grid.compute(a as PointId, b as PointId);
                dist[a * len + b] = d;
                dist[b * len + a] = d;
            }
        }
        grid.dist = dist;
        grid
    }

    pub fn graph(&self) -> &'g UnitGraph {
        self.g
    }

    pub fn len(&self) -> usize {
        self.g.n() + 3 * self.g.m()
    }

    #[inline]
    pub fn d(&self, a: usize, b: usize) -> u32 {
        self.dist[a * self.len() + b]
    }

    #[inline]
    pub fn dp(&self, a: PointId, b: PointId) -> u32 {
        self.d(a as usize, b as usize)
    }

    /// Point at `k/4` along edge `e` from its smaller endpoint, `k ∈ 1..=3`.
    #[inline]
    pub fn interior(&self, e: usize, k: u32) -> PointId {
        debug_assert!((1..=3).contains(&k));
        (self.g.n() + 3 * e + (k as usize - 1)) as PointId
    }

    pub fn midpoint(&self, e: usize) -> PointId {
        self.interior(e, 2)
    }

    /// `Some((edge, k))` for interior points, `None` for vertices.
    #[inline]
    pub fn locate(&self, p: PointId) -> Option<(usize, u32)> {
        let p = p as usize;
        if p < self.g.n() {
            None
        } else {
            let i = p - self.g.n();
            Some((i / 3, (i % 3) as u32 + 1))
        }
    }

    /// `(vertex, quarters to reach it)` for each way out of `p`.
    pub fn exits(&self, p: PointId) -> ([(usize, u32); 2], usize) {
        match self.locate(p) {
            None => ([(p as usize, 0), (0, 0)], 1),
            Some((e, k)) => {
                let (u, v) = self.g.edges()[e];
                ([(u, k), (v, 4 - k)], 2)
            }
        }
    }

    fn compute(&self, a: PointId, b: PointId) -> u32 {
        if a == b {
            return 0;
        }
        let mut best = INF;
        if let (Some((ea, ka)), Some((eb, kb))) = (self.locate(a), self.locate(b)) {
            if ea == eb {
                best = ka.abs_diff(kb);
            }
        }
        let (xa, na) = self.exits(a);
        let (xb, nb) = self.exits(b);
        for &(u, lu) in &xa[..na] {
            for &(v, lv) in &xb[..nb] {
                let hops = self.g.dist_raw(u, v);
                if hops != INF {
                    best = best.min(lu + 4 * hops + lv);
                }
            }
        }
        best
    }

    /// Appends the interior grid points walking edge `uv` from `u` to `v`,
    /// then `v` itself.
    pub fn push_edge_walk(&self, u: usize, v: usize, out: &mut Vec<PointId>) {
        let e = self.g.edge_index(u, v).expect("edge");
        if u < v {
            out.extend((1..=3).map(|k| self.interior(e, k)));
        } else {
            out.extend((1..=3).rev().map(|k| self.interior(e, k)));
        }
        out.push(v as PointId);
    }

    /// Grid points strictly between interior point `p` and endpoint `end`
    /// of its edge, then `end`.
    pub fn push_to_endpoint(&self, p: PointId, end: usize, out: &mut Vec<PointId>) {
        let (e, k) = self.locate(p).expect("interior point");
        let (u, _) = self.g.edges()[e];
        if end == u {
            out.extend((1..k).rev().map(|j| self.interior(e, j)));
        } else {
            out.extend((k + 1..=3).map(|j| self.interior(e, j)));
        }
        out.push(end as PointId);
    }

    /// Grid points strictly after `start` up to and including interior point
    /// `p` on the edge joining them.
    pub fn push_from_endpoint(&self, start: usize, p: PointId, out: &mut Vec<PointId>) {
        let (e, k) = self.locate(p).expect("interior point");
        let (u, _) = self.g.edges()[e];
        if start == u {
            out.extend((1..=k).map(|j| self.interior(e, j)));
        } else {
            out.extend((k..=3).rev().map(|j| self.interior(e, j)));
        }
    }

    pub fn point(&self, p: PointId) -> GraphPoint {
        match self.locate(p) {
            None => GraphPoint::Vertex(p as usize),
            Some((e, k)) => {
                let (u, v) = self.g.edges()[e];
                GraphPoint::on_edge(u, v, Rational::new(k as i64, 4)).expect("grid point")
            }
        }
    }

    /// Inverse of [`point`](Self::point) for points on the quarter grid.
    #[cfg(test)]
    pub fn id_of(&self, p: &GraphPoint) -> Option<PointId> {
        use num_traits::Zero;
        match *p {
            GraphPoint::Vertex(v) => (v < self.g.n()).then_some(v as PointId),
            GraphPoint::OnEdge { u, v, offset } => {
                let e = self.g.edge_index(u, v)?;
                let k = offset * Rational::from_integer(4);
                if !k.is_integer() || k.is_zero() {
                    return None;
                }
                Some(self.interior(e, k.to_integer() as u32))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::point_distance;
    use crate::value::QuarterValue;

    #[test]
    fn grid_distances_match_point_distance() {
        let g = UnitGraph::new(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 2)]).unwrap();
        let grid = QuarterGrid::new(&g);
        for a in 0..grid.len() as PointId {
            for b in 0..grid.len() as PointId {
                let exact = point_distance(&g, &grid.point(a), &grid.point(b)).unwrap();
                assert_eq!(exact, QuarterValue::quarters(grid.dp(a, b) as i64));
            }
            assert_eq!(grid.id_of(&grid.point(a)), Some(a));
        }
    }

    #[test]
    fn walks_are_contiguous() {
        let g = UnitGraph::cycle(4);
        let grid = QuarterGrid::new(&g);
        let mut out = vec![3];
        grid.push_edge_walk(3, 0, &mut out);
        grid.push_edge_walk(0, 1, &mut out);
        assert_eq!(out.len(), 9);
        for w in out.windows(2) {
            assert_eq!(grid.dp(w[0], w[1]), 1);
        }
        let mid = grid.midpoint(g.edge_index(1, 2).unwrap());
        let mut out = vec![mid];
        grid.push_to_endpoint(mid, 2, &mut out);
        assert_eq!(out.len(), 3);
        assert_eq!(*out.last().unwrap(), 2);
        let mut back = vec![1];
        grid.push_from_endpoint(1, mid, &mut back);
        assert_eq!(*back.last().unwrap(), mid);
        for w in back.windows(2) {
            assert_eq!(grid.dp(w[0], w[1]), 1);
        }
    }
}
