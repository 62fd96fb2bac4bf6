//! Gromov hyperbolicity of unit-edge graphs.
//!
//! [`delta_exact`] restricts the search to geodesic triangles that are simple
//! cycles with corners at vertices or edge midpoints, which is enough to find
//! the sharp constant; the thinness of each such triangle is read off the
//! quarter grid. [`delta_oracle`] is an independent brute force over the
//! quarter grid of a subdivided copy of the graph, used to cross-check the
//! engine on small inputs.

mod bounds;
mod exact;
mod oracle;

use serde::Serialize;

use crate::graph::{t_decomposition, GraphPoint, UnitGraph};
use crate::value::QuarterValue;

pub use bounds::{classify_low_delta, delta_bounds, DeltaBounds, LowDeltaClass};
pub use exact::delta_exact;
pub use oracle::{delta_oracle, ORACLE_SIZE_LIMIT};

/// Maximum number of geodesics examined between one pair of corners.
pub const DEFAULT_GEODESIC_CAP: usize = 10_000;

/// A geodesic triangle given by its corners and its sides, each side listed
/// as the quarter-grid points it passes through. Side `i` joins corner `i`
/// to corner `(i + 1) % 3`; a bigon repeats a corner and has a one-point side.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeodesicTriangle {
    pub corners: [GraphPoint; 3],
    pub sides: [Vec<GraphPoint>; 3],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeltaWitness {
    pub triangle: GeodesicTriangle,
    /// Index of the side carrying `point`.
    pub side: usize,
    /// Point whose distance to the other two sides equals the reported δ.
    pub point: GraphPoint,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeltaReport {
    pub delta: QuarterValue,
    pub witness: Option<DeltaWitness>,
    /// Some pair of corners had more geodesics than the cap allowed; `delta`
    /// is then a certified lower bound.
    pub saturated: bool,
}

impl DeltaReport {
    fn zero() -> Self {
        DeltaReport {
            delta: QuarterValue::ZERO,
            witness: None,
            saturated: false,
        }
    }

    fn relabel(mut self, map: &[usize]) -> Self {
        if let Some(w) = &mut self.witness {
            let f = |p: &mut GraphPoint| *p = relabel_point(p, map);
            w.triangle.corners.iter_mut().for_each(f);
            w.triangle.sides.iter_mut().flatten().for_each(f);
            f(&mut w.point);
        }
        self
    }
}

fn relabel_point(p: &GraphPoint, map: &[usize]) -> GraphPoint {
    match *p {
        GraphPoint::Vertex(v) => GraphPoint::Vertex(map[v]),
        GraphPoint::OnEdge { u, v, offset } => GraphPoint::on_edge(map[u], map[v], offset).expect("relabel"),
    }
}

/// δ as the maximum over the parts of the biconnected decomposition, each
/// part solved on its own. Handles disconnected graphs.
pub fn delta_sup(g: &UnitGraph, geodesic_cap: usize) -> DeltaReport {
    let mut best = DeltaReport::zero();
    for part in t_decomposition(g).parts {
        if part.len() < 3 {
            continue;
        }
        let sub = g.induced(&part);
        let report = delta_exact(&sub, geodesic_cap);
        best.saturated |= report.saturated;
        if report.delta > best.delta {
            let saturated = best.saturated;
            best = report.relabel(&part);
            best.saturated = saturated;
        }
    }
    best
}
