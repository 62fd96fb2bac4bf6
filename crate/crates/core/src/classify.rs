//! Decision procedures for the intersection properties that pin down δ of
//! interval and circular-arc graphs, and the ρ-dependent bounds on δ.

use serde::Serialize;

use crate::circle::{Arc, ArcFamily};
use crate::cover::minimal_covers;
use crate::error::{Error, Result};
use crate::graph::{enumerate_cycles, t_decomposition, UnitGraph};
use crate::intersection::{build, is_proper, to_interval, ArcModel, Interval, IntervalModel};
use crate::value::QuarterValue;

/// Upper limit on the number of minimum covers tried by the circular
/// properties.
pub const DEFAULT_WITNESS_LIMIT: usize = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum IntervalProperty {
    P0,
    P3_4,
    P1,
    P5_4,
    P3_2,
}

impl IntervalProperty {
    pub fn delta(&self) -> QuarterValue {
        QuarterValue::quarters(match self {
            IntervalProperty::P0 => 0,
            IntervalProperty::P3_4 => 3,
            IntervalProperty::P1 => 4,
            IntervalProperty::P5_4 => 5,
            IntervalProperty::P3_2 => 6,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct IntervalClass {
    pub property: IntervalProperty,
    pub predicted_delta: QuarterValue,
}

impl From<IntervalProperty> for IntervalClass {
    fn from(property: IntervalProperty) -> Self {
        IntervalClass {
            property,
            predicted_delta: property.delta(),
        }
    }
}

/// Which disjointness test the 1-intersection property applies inside a
/// cycle. `IntervalVsCouple` already implies `CoupleVsCouple`, so `Both`
/// behaves like `IntervalVsCouple`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OneMode {
    #[default]
    IntervalVsCouple,
    CoupleVsCouple,
    Both,
}

/// Whether some point lies in all of `ivs`.
fn common(ivs: &[&Interval]) -> bool {
    let lo = ivs.iter().map(|i| i.lo).max().unwrap();
    let hi = ivs.iter().map(|i| i.hi).min().unwrap();
    lo <= hi
}

fn zero_intersection(iv: &[Interval]) -> bool {
    let n = iv.len();
    (0..n).all(|a| (a + 1..n).all(|b| (b + 1..n).all(|c| !common(&[&iv[a], &iv[b], &iv[c]]))))
}

/// No pair of intervals has two different third intervals through a common
/// point with it.
fn three_quarter_quadruples(iv: &[Interval]) -> bool {
    let n = iv.len();
    (0..n).all(|a| {
        (a + 1..n).all(|b| {
            (0..n)
                .filter(|&c| c != a && c != b && common(&[&iv[a], &iv[b], &iv[c]]))
                .nth(1)
                .is_none()
        })
    })
}

/// Within every scope, each interval meets each couple (mode A) or each
/// couple meets each couple (mode B). A scope stands for the vertex set of
/// a cycle, or of a block, which carries the same quantifiers.
fn one_intersection(iv: &[Interval], g: &UnitGraph, scopes: &[Vec<usize>], mode: OneMode) -> bool {
    scopes.iter().all(|s| {
        let couples: Vec<(usize, usize)> = s
            .iter()
            .flat_map(|&a| s.iter().map(move |&b| (a, b)))
            .filter(|&(a, b)| a < b && g.has_edge(a, b))
            .collect();
        let meets = |x: usize, (a, b): (usize, usize)| iv[x].meets(&iv[a]) || iv[x].meets(&iv[b]);
        match mode {
            OneMode::IntervalVsCouple | OneMode::Both => {
                s.iter().all(|&x| couples.iter().all(|&c| meets(x, c)))
            }
            OneMode::CoupleVsCouple => couples
                .iter()
                .all(|&c1| couples.iter().all(|&c2| meets(c1.0, c2) || meets(c1.1, c2))),
        }
    })
}

/// Some scope holds two disjoint intervals that no interval meets both of.
fn three_half(iv: &[Interval], scopes: &[Vec<usize>]) -> bool {
    scopes.iter().any(|s| {
        s.iter().any(|&a| {
            s.iter().any(|&b| {
                a < b
                    && !iv[a].meets(&iv[b])
                    && !iv.iter().any(|i| i.meets(&iv[a]) && i.meets(&iv[b]))
            })
        })
    })
}

fn classify_with_scopes(iv: &[Interval], g: &UnitGraph, scopes: &[Vec<usize>], mode: OneMode) -> IntervalClass {
    let property = if zero_intersection(iv) {
        IntervalProperty::P0
    } else if three_quarter_quadruples(iv) {
        IntervalProperty::P3_4
    } else if three_half(iv, scopes) {
        IntervalProperty::P3_2
    } else if one_intersection(iv, g, scopes, mode) {
        IntervalProperty::P1
    } else {
        IntervalProperty::P5_4
    };
    property.into()
}

/// Classifies an interval model; each class determines δ.
///
/// Cycle quantifiers are evaluated per block: two vertices, a vertex and an
/// edge, or two edges lie on a common cycle exactly when they lie in a
/// common block with at least three vertices.
pub fn interval_property(m: &IntervalModel) -> IntervalClass {
    interval_property_with(m, OneMode::default())
}

pub fn interval_property_with(m: &IntervalModel, mode: OneMode) -> IntervalClass {
    let scopes: Vec<Vec<usize>> = t_decomposition(&m.graph)
        .parts
        .into_iter()
        .filter(|p| p.len() >= 3)
        .collect();
    classify_with_scopes(&m.intervals, &m.graph, &scopes, mode)
}

/// The same classification with the cycle quantifiers taken literally over
/// an explicit enumeration of cycles. Refuses when the enumeration hits
/// `cycle_cap`.
pub fn interval_property_by_cycles(m: &IntervalModel, mode: OneMode, cycle_cap: usize) -> Result<IntervalClass> {
    let cycles = enumerate_cycles(&m.graph, cycle_cap);
    if cycles.saturated {
        return Err(Error::Saturated(cycle_cap));
    }
    Ok(classify_with_scopes(&m.intervals, &m.graph, &cycles.cycles, mode))
}

/// Outcome of a property check on a circular-arc model.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Flag {
    Holds,
    Fails,
    NotApplicable,
    /// Too many minimum covers to try them all, and none of those tried
    /// satisfied the property.
    Inconclusive,
}

impl Flag {
    fn from_bool(b: bool) -> Self {
        if b {
            Flag::Holds
        } else {
            Flag::Fails
        }
    }
}

/// The interval class of a non-covering subfamily.
fn class_of(fam: &ArcFamily) -> IntervalProperty {
    let model = to_interval(&build(fam)).expect("side family leaves a gap");
    interval_property(&model).property
}

struct Ctx<'a> {
    model: &'a ArcModel,
}

impl<'a> Ctx<'a> {
    fn arcs(&self) -> &'a [Arc] {
        self.model.family.arcs()
    }

    fn meets(&self, i: usize, j: usize) -> bool {
        i == j || self.model.graph.has_edge(i, j)
    }

    /// Every arc outside `skip` meets exactly one witness arc.
    fn splits(&self, witness: &[usize], skip: &[usize]) -> bool {
        (0..self.arcs().len())
            .filter(|i| !witness.contains(i) && !skip.contains(i))
            .all(|i| witness.iter().filter(|&&w| self.meets(i, w)).count() == 1)
    }

    /// `I_j` together with the non-witness arcs meeting it, leaving out `skip`.
    fn side(&self, witness: &[usize], j: usize, skip: &[usize]) -> IntervalProperty {
        let w = witness[j];
        let mut members = vec![w];
        members.extend(
            (0..self.arcs().len()).filter(|i| !witness.contains(i) && !skip.contains(i) && self.meets(*i, w)),
        );
        class_of(&self.model.family.subfamily(&members))
    }

    fn sides(&self, witness: &[usize], skip: &[usize]) -> Vec<IntervalProperty> {
        (0..witness.len()).map(|j| self.side(witness, j, skip)).collect()
    }

    fn others(&self, witness: &[usize]) -> Vec<usize> {
        (0..self.arcs().len()).filter(|i| !witness.contains(i)).collect()
    }

    /// Tries `test` on every minimum cover.
    fn any_witness(&self, test: impl Fn(&[usize]) -> bool) -> Flag {
        let covers = minimal_covers(&self.model.family, DEFAULT_WITNESS_LIMIT);
        if covers.covers.iter().any(|w| test(w)) {
            Flag::Holds
        } else if covers.saturated {
            Flag::Inconclusive
        } else {
            Flag::Fails
        }
    }

    fn rho(&self) -> usize {
        crate::cover::rho(&self.model.family).rho
    }
}

fn low(p: IntervalProperty) -> bool {
    matches!(p, IntervalProperty::P0 | IntervalProperty::P3_4)
}

/// The circular condition equivalent to δ = 0.
pub fn circular_zero_property(model: &ArcModel) -> Flag {
    let cx = Ctx { model };
    match cx.rho() {
        0 => Flag::from_bool(class_of(&model.family) == IntervalProperty::P0),
        1 => cx.any_witness(|w| {
            let rest = cx.others(w);
            rest.iter().all(|&a| rest.iter().all(|&b| a == b || !cx.meets(a, b)))
        }),
        2 => cx.any_witness(|w| {
            cx.splits(w, &[]) && cx.sides(w, &[]).iter().all(|&p| p == IntervalProperty::P0)
        }),
        _ => Flag::Fails,
    }
}

/// The circular condition equivalent to δ = 3/4.
pub fn circular_three_quarter_property(model: &ArcModel) -> Flag {
    let cx = Ctx { model };
    match cx.rho() {
        0 => Flag::from_bool(class_of(&model.family) == IntervalProperty::P3_4),
        1 => cx.any_witness(|w| {
            let rest = cx.others(w);
            let some_pair = rest.iter().any(|&a| rest.iter().any(|&b| a != b && cx.meets(a, b)));
            let no_two_neighbors = rest
                .iter()
                .all(|&a| rest.iter().filter(|&&b| b != a && cx.meets(a, b)).count() <= 1);
            some_pair && no_two_neighbors
        }),
        2 => {
            let split = cx.any_witness(|w| {
                if !cx.splits(w, &[]) {
                    return false;
                }
                let s = cx.sides(w, &[]);
                s.iter().all(|&p| low(p)) && s.contains(&IntervalProperty::P3_4)
            });
            if split == Flag::Holds {
                return split;
            }
            let bridged = cx.any_witness(|w| {
                cx.others(w).into_iter().any(|i| {
                    w.iter().all(|&j| cx.meets(i, j))
                        && cx.splits(w, &[i])
                        && cx.others(w).iter().all(|&k| k == i || !cx.meets(k, i))
                        && cx.sides(w, &[i]).iter().all(|&p| low(p))
                })
            });
            match (split, bridged) {
                (_, Flag::Holds) => Flag::Holds,
                (Flag::Inconclusive, _) | (_, Flag::Inconclusive) => Flag::Inconclusive,
                _ => Flag::Fails,
            }
        }
        3 => cx.any_witness(|w| cx.splits(w, &[]) && cx.sides(w, &[]).iter().all(|&p| low(p))),
        _ => Flag::Fails,
    }
}

/// The sufficient condition for δ = ρ/4; not applicable below ρ = 3.
pub fn rho_property(model: &ArcModel) -> Flag {
    let cx = Ctx { model };
    let rho = cx.rho();
    if rho < 3 {
        return Flag::NotApplicable;
    }
    cx.any_witness(|w| {
        if !cx.splits(w, &[]) {
            return false;
        }
        let ok: fn(IntervalProperty) -> bool = match rho {
            3 => low,
            4 => |p| low(p) || p == IntervalProperty::P1,
            5 => |p| p != IntervalProperty::P3_2,
            _ => return true,
        };
        cx.sides(w, &[]).into_iter().all(ok)
    })
}

/// Enclosure of δ in terms of ρ, tightened for proper representations.
pub fn main_bounds(rho: usize, proper: bool) -> (QuarterValue, QuarterValue) {
    let q = QuarterValue::quarters;
    let r = rho as i64;
    match (rho, proper) {
        (1, true) => (q(0), q(0)),
        (1, false) => (q(0), q(6)),
        (2, true) => (q(0), q(5)),
        (2, false) => (q(0), q(8)),
        (3.., true) => (q(r), q(2 * (r / 2) + 4)),
        _ => (q(r), q(2 * (r / 2) + 6)),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CircularReport {
    pub rho: usize,
    pub proper: bool,
    pub lower: QuarterValue,
    pub upper: QuarterValue,
    pub zero_property: Flag,
    pub three_quarter_property: Flag,
    pub rho_property: Flag,
    /// Present when the family leaves a gap.
    pub interval: Option<IntervalClass>,
}

pub fn circular_report(model: &ArcModel) -> CircularReport {
    let rho = crate::cover::rho(&model.family).rho;
    let proper = is_proper(&model.family);
    let (lower, upper) = main_bounds(rho, proper);
    CircularReport {
        rho,
        proper,
        lower,
        upper,
        zero_property: circular_zero_property(model),
        three_quarter_property: circular_three_quarter_property(model),
        rho_property: rho_property(model),
        interval: to_interval(model).ok().map(|m| interval_property(&m)),
    }
}

/// Checks that `delta` lies within the ρ bounds of `model`.
pub fn verify_main_bounds(model: &ArcModel, delta: QuarterValue) -> Result<(QuarterValue, QuarterValue)> {
    let rho = crate::cover::rho(&model.family).rho;
    let (lower, upper) = main_bounds(rho, is_proper(&model.family));
    if delta < lower || delta > upper {
        return Err(Error::TheoremViolation(format!(
            "delta {delta} outside [{lower}, {upper}] for rho = {rho}"
        )));
    }
    Ok((lower, upper))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle_tiling, example_cx};
    use crate::value::Rational;

    fn iv(spec: &[(i64, i64)]) -> IntervalModel {
        let intervals: Vec<Interval> = spec
            .iter()
            .map(|&(a, b)| Interval {
                lo: Rational::from_integer(a),
                hi: Rational::from_integer(b),
            })
            .collect();
        let graph = UnitGraph::from_fn(intervals.len(), |i, j| intervals[i].meets(&intervals[j]));
        IntervalModel {
            intervals,
            cut: crate::circle::Angle::zero(),
            graph,
        }
    }

    fn model(text: &str) -> ArcModel {
        build(&text.parse().unwrap())
    }

    #[test]
    fn interval_examples() {
        assert_eq!(interval_property(&iv(&[(0, 1), (1, 2), (2, 3)])).property, IntervalProperty::P0);
        // [0,2],[1,3],[3/2,5/2] scaled by 2
        assert_eq!(interval_property(&iv(&[(0, 4), (2, 6), (3, 5)])).property, IntervalProperty::P3_4);
        // a long interval under a path of four: a fan with δ = 3/2 is the
        // bigon around the spine
        let fan = iv(&[(0, 10), (0, 2), (2, 4), (4, 6), (6, 8), (8, 10)]);
        let class = interval_property(&fan);
        assert_eq!(class.predicted_delta, crate::hyperbolicity::delta_exact(&fan.graph, 1000).delta);
    }

    #[test]
    fn cycle_and_block_scopes_agree() {
        let fan = iv(&[(0, 10), (0, 2), (2, 4), (4, 6), (6, 8), (8, 10), (3, 7)]);
        for mode in [OneMode::IntervalVsCouple, OneMode::CoupleVsCouple] {
            assert_eq!(
                interval_property_with(&fan, mode),
                interval_property_by_cycles(&fan, mode, 100_000).unwrap()
            );
        }
    }

    #[test]
    fn zero_property_examples() {
        assert_eq!(circular_zero_property(&model("f full\na 0 1/8\nb 1/4 3/8")), Flag::Holds);
        assert_eq!(circular_zero_property(&model("f full\na 0 1/8\nb 1/16 3/16")), Flag::Fails);
        assert_eq!(circular_zero_property(&model("a 0 1/8\nb 1/4 3/8")), Flag::Holds);
    }

    #[test]
    fn three_quarter_examples() {
        let m = model("f full\na 0 1/8\nb 1/16 3/16");
        assert_eq!(circular_three_quarter_property(&m), Flag::Holds);
        assert_eq!(circular_three_quarter_property(&build(&cycle_tiling(3))), Flag::Holds);
        assert_eq!(circular_three_quarter_property(&build(&cycle_tiling(4))), Flag::Fails);
    }

    #[test]
    fn rho_property_examples() {
        assert_eq!(rho_property(&build(&cycle_tiling(3))), Flag::Holds);
        let mut f = cycle_tiling(5);
        f.push("x", Arc::from_turns(Rational::new(1, 10), Rational::new(3, 10)).unwrap()).unwrap();
        assert_eq!(rho_property(&build(&f)), Flag::Fails);
        assert_eq!(rho_property(&build(&example_cx(6).unwrap())), Flag::Fails);
        assert_eq!(rho_property(&model("f full")), Flag::NotApplicable);
    }

    #[test]
    fn bound_table() {
        let q = QuarterValue::quarters;
        assert_eq!(main_bounds(1, false), (q(0), q(6)));
        assert_eq!(main_bounds(2, true), (q(0), q(5)));
        assert_eq!(main_bounds(6, false), (q(6), q(12)));
        assert_eq!(main_bounds(6, true), (q(6), q(10)));
        assert_eq!(main_bounds(0, false), (q(0), q(6)));
    }
}
