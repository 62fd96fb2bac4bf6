//! Exact δ over geodesic triangles that are simple cycles with corners at
//! vertices or edge midpoints.
//!
//! Pairs of corners are visited by decreasing distance. A triangle is charged
//! to its longest side (ties broken by corner ids), and no triangle whose
//! longest side has length `D` can be thinner than `⌊D/2⌋` quarters, so the
//! scan stops once that bound no longer beats the best value found.

use std::collections::HashMap;
use std::rc::Rc;

use super::{DeltaReport, DeltaWitness, GeodesicTriangle};
use crate::graph::grid::{PointId, QuarterGrid};
use crate::graph::{UnitGraph, INF};
use crate::value::QuarterValue;

struct Geodesics {
    /// Each path runs from the smaller corner id to the larger.
    paths: Vec<Vec<PointId>>,
    saturated: bool,
}

struct Engine<'g> {
    grid: QuarterGrid<'g>,
    cap: usize,
    cache: HashMap<(PointId, PointId), Rc<Geodesics>>,
    saturated: bool,
    best: u32,
    witness: Option<Found>,
    mark_a: Vec<u32>,
    mark_b: Vec<u32>,
    stamp: u32,
}

#[derive(Clone)]
struct Found {
    corners: [PointId; 3],
    sides: [Vec<PointId>; 3],
    side: usize,
    point: PointId,
}

/// Sharp hyperbolicity constant of `g`, the supremum over its connected
/// components. `geodesic_cap` bounds how many geodesics are enumerated
/// between any two corners.
pub fn delta_exact(g: &UnitGraph, geodesic_cap: usize) -> DeltaReport {
    if g.m() == 0 {
        return DeltaReport::zero();
    }
    let mut engine = Engine::new(g, geodesic_cap.max(1));
    engine.run();
    engine.report()
}

impl<'g> Engine<'g> {
    fn new(g: &'g UnitGraph, cap: usize) -> Self {
        let grid = QuarterGrid::new(g);
        let len = grid.len();
        Engine {
            grid,
            cap,
            cache: HashMap::new(),
            saturated: false,
            best: 0,
            witness: None,
            mark_a: vec![0; len],
            mark_b: vec![0; len],
            stamp: 0,
        }
    }

    fn corners(&self) -> Vec<PointId> {
        let g = self.grid.graph();
        (0..g.n() as PointId)
            .chain((0..g.m()).map(|e| self.grid.midpoint(e)))
            .collect()
    }

    fn run(&mut self) {
        let corners = self.corners();
        let mut pairs = Vec::new();
        for (i, &a) in corners.iter().enumerate() {
            for &b in &corners[i + 1..] {
                let d = self.grid.dp(a, b);
                if d != INF {
                    pairs.push((d, a.min(b), a.max(b)));
                }
            }
        }
        pairs.sort_unstable_by(|p, q| q.0.cmp(&p.0).then((p.1, p.2).cmp(&(q.1, q.2))));

        for &(d, x, y) in &pairs {
            if d / 2 <= self.best {
                break;
            }
            let key = (d, x, y);
            let gxy = self.geodesics(x, y);
            self.bigons(x, y, &gxy);
            for &z in &corners {
                if z == x || z == y {
                    continue;
                }
                let dxz = self.grid.dp(x, z);
                let dyz = self.grid.dp(y, z);
                if dxz == INF || dyz == INF {
                    continue;
                }
                if !charged_to(key, (dxz, x.min(z), x.max(z)))
                    || !charged_to(key, (dyz, y.min(z), y.max(z)))
                {
                    continue;
                }
                let gyz = self.geodesics(y, z);
                let gzx = self.geodesics(z, x);
                self.triangles(x, y, z, &gxy, &gyz, &gzx);
                if d / 2 <= self.best {
                    break;
                }
            }
        }
    }

    fn geodesics(&mut self, a: PointId, b: PointId) -> Rc<Geodesics> {
        let key = (a.min(b), a.max(b));
        if let Some(g) = self.cache.get(&key) {
            return Rc::clone(g);
        }
        let g = Rc::new(enumerate(&self.grid, key.0, key.1, self.cap));
        self.saturated |= g.saturated;
        self.cache.insert(key, Rc::clone(&g));
        g
    }

    fn next_stamp(&mut self) -> u32 {
        self.stamp += 1;
        self.stamp
    }

    fn bigons(&mut self, x: PointId, y: PointId, gxy: &Geodesics) {
        let paths = &gxy.paths;
        for i in 0..paths.len() {
            let s = self.next_stamp();
            for &p in &paths[i] {
                self.mark_a[p as usize] = s;
            }
            for j in i + 1..paths.len() {
                let disjoint = paths[j]
                    .iter()
                    .all(|&p| p == x || p == y || self.mark_a[p as usize] != s);
                if disjoint {
                    let sides = [&paths[i][..], &paths[j][..], &[x][..]];
                    self.evaluate([x, y, x], sides, [false, true, false]);
                }
            }
        }
    }

    /// Sides run x→y, y→z, z→x; the flags record which stored paths must be
    /// reversed to match that orientation.
    fn triangles(
        &mut self,
        x: PointId,
        y: PointId,
        z: PointId,
        gxy: &Geodesics,
        gyz: &Geodesics,
        gzx: &Geodesics,
    ) {
        let rev = [x > y, y > z, z > x];
        let mut second = Vec::new();
        let mut third = Vec::new();
        for g1 in &gxy.paths {
            let s1 = self.next_stamp();
            for &p in g1 {
                self.mark_a[p as usize] = s1;
            }
            second.clear();
            second.extend(
                gyz.paths
                    .iter()
                    .filter(|g2| g2.iter().all(|&p| p == y || self.mark_a[p as usize] != s1)),
            );
            if second.is_empty() {
                continue;
            }
            third.clear();
            third.extend(
                gzx.paths
                    .iter()
                    .filter(|g3| g3.iter().all(|&p| p == x || self.mark_a[p as usize] != s1)),
            );
            if third.is_empty() {
                continue;
            }
            for g2 in &second {
                let s2 = self.next_stamp();
                for &p in g2.iter() {
                    self.mark_b[p as usize] = s2;
                }
                for g3 in &third {
                    if g3.iter().all(|&p| p == z || self.mark_b[p as usize] != s2) {
                        self.evaluate([x, y, z], [&g1[..], &g2[..], &g3[..]], rev);
                    }
                }
            }
            if self.grid.dp(x, y) / 2 <= self.best {
                return;
            }
        }
    }

    fn evaluate(&mut self, corners: [PointId; 3], sides: [&[PointId]; 3], rev: [bool; 3]) {
        for i in 0..3 {
            let side = sides[i];
            let (a, b) = (corners[i], corners[(i + 1) % 3]);
            let others = [sides[(i + 1) % 3], sides[(i + 2) % 3]];
            for &p in side {
                let cap = self.grid.dp(p, a).min(self.grid.dp(p, b));
                if cap <= self.best {
                    continue;
                }
                let mut m = cap;
                'scan: for other in others {
                    for &q in other {
                        m = m.min(self.grid.dp(p, q));
                        if m <= self.best {
                            break 'scan;
                        }
                    }
                }
                if m > self.best {
                    self.best = m;
                    let oriented = |k: usize| {
                        let mut v = sides[k].to_vec();
                        if rev[k] {
                            v.reverse();
                        }
                        v
                    };
                    self.witness = Some(Found {
                        corners,
                        sides: [oriented(0), oriented(1), oriented(2)],
                        side: i,
                        point: p,
                    });
                }
            }
        }
    }

    fn report(self) -> DeltaReport {
        let grid = &self.grid;
        let witness = self.witness.map(|f| DeltaWitness {
            triangle: GeodesicTriangle {
                corners: f.corners.map(|p| grid.point(p)),
                sides: f.sides.map(|s| s.iter().map(|&p| grid.point(p)).collect()),
            },
            side: f.side,
            point: grid.point(f.point),
        });
        DeltaReport {
            delta: QuarterValue::quarters(self.best as i64),
            witness,
            saturated: self.saturated,
        }
    }
}

/// Whether the pair with key `own` precedes `other` in the scan order
/// (longer first, then lexicographic), so the triangle is charged to `own`.
fn charged_to(own: (u32, PointId, PointId), other: (u32, PointId, PointId)) -> bool {
    own.0 > other.0 || (own.0 == other.0 && (own.1, own.2) < (other.1, other.2))
}

/// All geodesics from grid point `a` to grid point `b`, up to `cap`.
fn enumerate(grid: &QuarterGrid<'_>, a: PointId, b: PointId, cap: usize) -> Geodesics {
    let mut out = Geodesics {
        paths: Vec::new(),
        saturated: false,
    };
    if a == b {
        out.paths.push(vec![a]);
        return out;
    }
    let total = grid.dp(a, b);
    if let (Some((ea, ka)), Some((eb, kb))) = (grid.locate(a), grid.locate(b)) {
        if ea == eb && ka.abs_diff(kb) == total {
            let path = if ka < kb {
                (ka..=kb).map(|k| grid.interior(ea, k)).collect()
            } else {
                (kb..=ka).rev().map(|k| grid.interior(ea, k)).collect()
            };
            out.paths.push(path);
            return out;
        }
    }
    let g = grid.graph();
    let (xa, na) = grid.exits(a);
    let (xb, nb) = grid.exits(b);
    for &(u, lu) in &xa[..na] {
        for &(v, lv) in &xb[..nb] {
            let hops = g.dist_raw(u, v);
            if hops == INF || lu + 4 * hops + lv != total {
                continue;
            }
            let mut prefix = vec![a];
            if grid.locate(a).is_some() {
                grid.push_to_endpoint(a, u, &mut prefix);
            }
            let mut route = vec![u];
            if !vertex_paths(grid, &mut route, v, &prefix, b, cap, &mut out) {
                out.saturated = true;
                return out;
            }
        }
    }
    out
}

/// Extends `route` along shortest vertex paths to `target`, appending each
/// completed grid path. Returns `false` when the cap is hit.
fn vertex_paths(
    grid: &QuarterGrid<'_>,
    route: &mut Vec<usize>,
    target: usize,
    prefix: &[PointId],
    b: PointId,
    cap: usize,
    out: &mut Geodesics,
) -> bool {
    let g = grid.graph();
    let cur = *route.last().unwrap();
    if cur == target {
        if out.paths.len() == cap {
            return false;
        }
        let mut path = prefix.to_vec();
        for w in route.windows(2) {
            grid.push_edge_walk(w[0], w[1], &mut path);
        }
        if grid.locate(b).is_some() {
            grid.push_from_endpoint(target, b, &mut path);
        }
        out.paths.push(path);
        return true;
    }
    let left = g.dist_raw(cur, target);
    for &w in g.neighbors(cur) {
        if g.dist_raw(w, target) + 1 == left {
            route.push(w);
            let ok = vertex_paths(grid, route, target, prefix, b, cap, out);
            route.pop();
            if !ok {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(k: i64) -> QuarterValue {
        QuarterValue::quarters(k)
    }

    #[test]
    fn cycles() {
        for n in 3..=9 {
            assert_eq!(delta_exact(&UnitGraph::cycle(n), 100).delta, q(n as i64), "C{n}");
        }
    }

    #[test]
    fn trees_and_cliques() {
        assert_eq!(delta_exact(&UnitGraph::path(6), 100).delta, q(0));
        assert_eq!(delta_exact(&UnitGraph::complete(2), 100).delta, q(0));
        assert_eq!(delta_exact(&UnitGraph::complete(4), 100).delta, q(4));
        assert_eq!(delta_exact(&UnitGraph::empty(3), 100).delta, q(0));
    }

    #[test]
    fn witness_is_consistent() {
        let g = UnitGraph::cycle(6);
        let r = delta_exact(&g, 100);
        let w = r.witness.unwrap();
        for side in &w.triangle.sides {
            assert!(!side.is_empty());
        }
        assert!(w.triangle.sides[w.side].contains(&w.point));
    }
}
