use serde::Serialize;

use crate::graph::{
    cycle_degree, diameter_graph, enumerate_cycles, t_decomposition, UnitGraph, DEFAULT_CYCLE_CAP,
};
use crate::value::QuarterValue;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DeltaBounds {
    pub lower: QuarterValue,
    pub upper: QuarterValue,
}

/// Cheap enclosure of δ: half the diameter (per component) from above, and
/// from below 3/4, 1 or 5/4 according to the cycles present.
pub fn delta_bounds(g: &UnitGraph) -> DeltaBounds {
    let upper = g
        .components()
        .iter()
        .map(|c| diameter_graph(&g.induced(c)).half())
        .max()
        .unwrap_or(QuarterValue::ZERO);

    let parts = t_decomposition(g).parts;
    let largest = parts.iter().map(Vec::len).max().unwrap_or(0);
    let mut lower = match largest {
        0..=2 => QuarterValue::ZERO,
        3 => QuarterValue::quarters(3),
        _ => QuarterValue::quarters(4),
    };
    if largest >= 5 {
        let found = parts.iter().filter(|p| p.len() >= 5).any(|part| {
            let sub = g.induced(part);
            enumerate_cycles(&sub, DEFAULT_CYCLE_CAP)
                .cycles
                .iter()
                .filter(|c| c.len() >= 5)
                .any(|c| c.iter().any(|&v| cycle_degree(&sub, c, v) == Ok(2)))
        });
        if found {
            lower = QuarterValue::quarters(5);
        }
    }
    DeltaBounds { lower, upper }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LowDeltaClass {
    /// A forest; δ = 0.
    Tree,
    /// Has cycles, all of length 3; δ = 3/4.
    AllCyclesLen3,
    Other,
}

pub fn classify_low_delta(g: &UnitGraph) -> LowDeltaClass {
    let largest = t_decomposition(g).parts.iter().map(Vec::len).max().unwrap_or(0);
    match largest {
        0..=2 => LowDeltaClass::Tree,
        3 => LowDeltaClass::AllCyclesLen3,
        _ => LowDeltaClass::Other,
    }
}
