//! Intersection graphs of arc families and their interval models.

use num_traits::One;
use serde::Serialize;

use crate::circle::{intersects, uncovered_point, Angle, Arc, ArcFamily};
use crate::error::{Error, Result};
use crate::graph::UnitGraph;
use crate::value::Rational;

/// An arc family together with its intersection graph. Vertex `i` is arc `i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArcModel {
    pub family: ArcFamily,
    #[serde(skip)]
    pub graph: UnitGraph,
    pub vertex_to_arc: Vec<usize>,
}

impl ArcModel {
    pub fn n(&self) -> usize {
        self.family.len()
    }
}

/// Closed interval `[lo, hi]` of the real line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Interval {
    #[serde(with = "crate::value::rational_str")]
    pub lo: Rational,
    #[serde(with = "crate::value::rational_str")]
    pub hi: Rational,
}

impl Interval {
    pub fn meets(&self, other: &Interval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn contains(&self, t: Rational) -> bool {
        self.lo <= t && t <= self.hi
    }
}

/// Interval representation obtained by cutting the circle at `cut` and
/// unrolling it onto `[0, 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntervalModel {
    pub intervals: Vec<Interval>,
    pub cut: Angle,
    #[serde(skip)]
    pub graph: UnitGraph,
}

pub fn build(fam: &ArcFamily) -> ArcModel {
    let arcs = fam.arcs();
    let graph = UnitGraph::from_fn(arcs.len(), |i, j| intersects(&arcs[i], &arcs[j]));
    ArcModel {
        family: fam.clone(),
        graph,
        vertex_to_arc: (0..arcs.len()).collect(),
    }
}

/// Whether some subfamily covers the circle, i.e. the whole family does.
pub fn is_ni(fam: &ArcFamily) -> bool {
    fam.covers_circle()
}

/// Cuts a non-covering family at its first uncovered point.
pub fn to_interval(model: &ArcModel) -> Result<IntervalModel> {
    let cut = uncovered_point(&model.family)
        .ok_or_else(|| Error::Precondition("the arcs cover the circle".into()))?;
    let intervals: Vec<Interval> = model
        .family
        .arcs()
        .iter()
        .map(|arc| match arc {
            Arc::Full => unreachable!("a full arc covers the cut point"),
            Arc::Span { start, .. } => {
                let lo = cut.ccw_to(start);
                Interval {
                    lo,
                    hi: lo + arc.length(),
                }
            }
        })
        .collect();
    debug_assert!(intervals.iter().all(|iv| iv.hi < Rational::one()));
    let graph = UnitGraph::from_fn(intervals.len(), |i, j| intervals[i].meets(&intervals[j]));
    debug_assert_eq!(graph, model.graph);
    Ok(IntervalModel {
        intervals,
        cut,
        graph,
    })
}

/// No arc contains another one. Two identical arcs contain each other.
pub fn is_proper(fam: &ArcFamily) -> bool {
    let arcs = fam.arcs();
    (0..arcs.len()).all(|i| (0..arcs.len()).all(|j| i == j || !arcs[j].contains_arc(&arcs[i])))
}
