//! Complements and line graphs, with the δ bounds that relate them to ρ.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cover::rho;
use crate::error::{Error, Result};
use crate::graph::grid::QuarterGrid;
use crate::graph::{diameter_graph, is_chordal, is_regular_of_degree, UnitGraph};
use crate::intersection::ArcModel;
use crate::value::{QuarterValue, Rational};

pub fn complement(g: &UnitGraph) -> UnitGraph {
    UnitGraph::from_fn(g.n(), |u, v| !g.has_edge(u, v))
}

/// A line graph with the edge of the base graph behind each of its vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineModel {
    pub base: UnitGraph,
    pub line: UnitGraph,
    /// Line vertex `i` is base edge `edge_index[i]`.
    pub edge_index: Vec<(usize, usize)>,
}

/// Line graph of `g`. Isolated vertices of `g` leave no trace.
pub fn line_graph(g: &UnitGraph) -> Result<LineModel> {
    if g.m() == 0 {
        return Err(Error::Precondition("line graph of a graph without edges".into()));
    }
    let edges = g.edges().to_vec();
    let line = UnitGraph::from_fn(edges.len(), |i, j| {
        let (a, b) = edges[i];
        let (c, d) = edges[j];
        a == c || a == d || b == c || b == d
    });
    Ok(LineModel {
        base: g.clone(),
        line,
        edge_index: edges,
    })
}

/// Whether hop distance in the line graph equals the distance between the
/// corresponding edge midpoints of the base graph, over all pairs or over
/// `samples` random pairs.
pub fn check_h_isometry(lm: &LineModel, samples: Option<usize>, seed: u64) -> bool {
    let grid = QuarterGrid::new(&lm.base);
    let mid = |i: usize| {
        let (u, v) = lm.edge_index[i];
        grid.midpoint(lm.base.edge_index(u, v).expect("base edge"))
    };
    let agrees = |i: usize, j: usize| {
        let base = grid.dp(mid(i), mid(j));
        match lm.line.dist(i, j) {
            Some(h) => base != u32::MAX && base == 4 * h,
            None => base == u32::MAX,
        }
    };
    let k = lm.line.n();
    match samples {
        None => (0..k).all(|i| (i + 1..k).all(|j| agrees(i, j))),
        Some(s) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..s).all(|_| agrees(rng.gen_range(0..k), rng.gen_range(0..k)))
        }
    }
}

/// A closed range for some δ value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub lower: QuarterValue,
    pub upper: QuarterValue,
    /// Only the diameter bound is known for this case.
    pub generic: bool,
}

impl Bounds {
    fn new(lower: QuarterValue, upper: QuarterValue) -> Self {
        Bounds {
            lower,
            upper,
            generic: false,
        }
    }

    pub fn contains(&self, v: QuarterValue) -> bool {
        self.lower <= v && v <= self.upper
    }

    fn check(&self, what: &str, v: QuarterValue) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(Error::TheoremViolation(format!(
                "{what} = {v} outside [{}, {}]",
                self.lower, self.upper
            )))
        }
    }
}

fn q(k: i64) -> QuarterValue {
    QuarterValue::quarters(k)
}

fn frac(n: i64, d: i64) -> QuarterValue {
    QuarterValue::new(Rational::new(n, d))
}

/// Range of δ of the complement of the intersection graph, by ρ. For
/// ρ ∈ {1, 2, 3} only half the diameter of the complement is available.
pub fn complement_bounds(model: &ArcModel) -> Bounds {
    complement_bounds_for(rho(&model.family).rho, &complement(&model.graph))
}

pub fn complement_bounds_for(rho: usize, complement: &UnitGraph) -> Bounds {
    match rho {
        0 => Bounds::new(q(0), q(8)),
        4 => Bounds::new(q(0), q(14)),
        5.. => Bounds::new(q(5), q(6)),
        _ => {
            let upper = complement
                .components()
                .iter()
                .map(|c| diameter_graph(&complement.induced(c)).half())
                .max()
                .unwrap_or(QuarterValue::ZERO);
            Bounds {
                lower: q(0),
                upper,
                generic: true,
            }
        }
    }
}

pub fn check_complement(rho: usize, complement: &UnitGraph, delta_complement: QuarterValue) -> Result<Bounds> {
    let b = complement_bounds_for(rho, complement);
    b.check("delta of the complement", delta_complement)?;
    Ok(b)
}

/// Sum and product ranges for δ(G) and δ of its complement.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SumProduct {
    pub sum: Bounds,
    pub product: Bounds,
}

/// Defined for ρ = 0, ρ = 4 and ρ > 4.
pub fn nordhaus_gaddum_bounds(rho: usize) -> Option<SumProduct> {
    let r = rho as i64;
    let (product, sum) = match rho {
        0 => (Bounds::new(q(0), frac(r, 2) + q(12)), Bounds::new(frac(r, 4), frac(r, 4) + frac(7, 2))),
        4 => (
            Bounds::new(q(0), frac(7 * r, 8) + frac(21, 4)),
            Bounds::new(frac(r, 4), frac(r, 4) + q(20)),
        ),
        5.. => (
            Bounds::new(frac(5 * r, 16), frac(3 * r, 8) + frac(9, 4)),
            Bounds::new(frac(r + 5, 4), frac(r, 4) + q(12)),
        ),
        _ => return None,
    };
    Some(SumProduct { sum, product })
}

/// `Ok(None)` when ρ is outside the covered cases.
pub fn nordhaus_gaddum_check(rho: usize, delta: QuarterValue, delta_complement: QuarterValue) -> Result<Option<SumProduct>> {
    let Some(b) = nordhaus_gaddum_bounds(rho) else {
        return Ok(None);
    };
    b.sum.check("delta sum", delta + delta_complement)?;
    b.product.check("delta product", delta.mul(&delta_complement))?;
    Ok(Some(b))
}

/// Range of δ of the line graph from ρ, from δ of the base graph and from
/// chordality of the base graph.
pub fn line_bounds(model: &ArcModel, delta: QuarterValue) -> Bounds {
    line_bounds_for(rho(&model.family).rho, &model.graph, delta)
}

pub fn line_bounds_for(rho: usize, base: &UnitGraph, delta: QuarterValue) -> Bounds {
    let r = rho as i64;
    let (mut lower, mut upper) = match rho {
        1 => (q(0), q(8)),
        0 | 2 => (q(0), q(10)),
        _ => (q(r), q(2 * (r / 2) + 10)),
    };
    lower = lower.max(delta);
    upper = upper.min(delta.scale(5) + q(10));
    if is_chordal(base) {
        upper = upper.min(q(10));
    }
    Bounds::new(lower, upper)
}

pub fn check_line(rho: usize, base: &UnitGraph, delta: QuarterValue, delta_line: QuarterValue) -> Result<Bounds> {
    let b = line_bounds_for(rho, base, delta);
    b.check("delta of the line graph", delta_line)?;
    Ok(b)
}

/// δ of an `(n-3)`-regular graph with `n ≥ 5`: 1 when its complement is a
/// disjoint union of triangles, 5/4 otherwise. `None` for other graphs.
pub fn regular_delta(g: &UnitGraph) -> Option<QuarterValue> {
    let n = g.n();
    if n < 5 || !is_regular_of_degree(g, n - 3) {
        return None;
    }
    let triangles = complement(g).components().iter().all(|c| c.len() == 3);
    Some(if triangles { q(4) } else { q(5) })
}

/// Non-adjacent `u, v` with non-adjacent common neighbours `v1, v2`.
fn diamond_patterns(g: &UnitGraph) -> Vec<[usize; 4]> {
    let n = g.n();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v) {
                continue;
            }
            let common: Vec<usize> = g.neighbors(u).iter().copied().filter(|&w| g.has_edge(v, w)).collect();
            for (i, &a) in common.iter().enumerate() {
                for &b in &common[i + 1..] {
                    if !g.has_edge(a, b) {
                        out.push([u, v, a, b]);
                    }
                }
            }
        }
    }
    out
}

/// For ρ > 4: two vertices with two non-adjacent common neighbours are
/// adjacent. `None` for smaller ρ.
pub fn common_neighbor_lemma(model: &ArcModel) -> Option<bool> {
    (rho(&model.family).rho > 4).then(|| diamond_patterns(&model.graph).is_empty())
}

/// For ρ ≥ 1: the four arcs of every such pattern cover the circle. `None`
/// for interval families.
pub fn four_arc_cover_lemma(model: &ArcModel) -> Option<bool> {
    (rho(&model.family).rho >= 1).then(|| {
        diamond_patterns(&model.graph)
            .iter()
            .all(|p| model.family.subfamily(p).covers_circle())
    })
}
