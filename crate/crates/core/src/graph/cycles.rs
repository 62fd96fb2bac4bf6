use serde::Serialize;

use super::UnitGraph;

pub const DEFAULT_CYCLE_CAP: usize = 100_000;

/// Simple cycles as vertex sequences, each listed once up to rotation and
/// reflection: it starts at its smallest vertex and its second vertex is
/// smaller than its last.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleEnumeration {
    pub cycles: Vec<Vec<usize>>,
    /// More than `max_count` cycles exist; `cycles` holds the first
    /// `max_count` found.
    pub saturated: bool,
}

/// Backtracking enumeration of all simple cycles, stopping after `max_count`.
pub fn enumerate_cycles(g: &UnitGraph, max_count: usize) -> CycleEnumeration {
    let max_count = max_count.max(1);
    let mut out = CycleEnumeration {
        cycles: Vec::new(),
        saturated: false,
    };
    let mut on_path = vec![false; g.n()];
    let mut path = Vec::new();
    for s in 0..g.n() {
        path.push(s);
        on_path[s] = true;
        if !extend(g, s, &mut path, &mut on_path, max_count, &mut out) {
            break;
        }
        on_path[s] = false;
        path.pop();
    }
    out
}

fn extend(
    g: &UnitGraph,
    start: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    max_count: usize,
    out: &mut CycleEnumeration,
) -> bool {
    let v = *path.last().expect("non-empty path");
    for &w in g.neighbors(v) {
        if w == start && path.len() >= 3 && path[1] < v {
            if out.cycles.len() == max_count {
                out.saturated = true;
                return false;
            }
            out.cycles.push(path.clone());
        } else if w > start && !on_path[w] {
            on_path[w] = true;
            path.push(w);
            let go_on = extend(g, start, path, on_path, max_count, out);
            path.pop();
            on_path[w] = false;
            if !go_on {
                return false;
            }
        }
    }
    true
}
