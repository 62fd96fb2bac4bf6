//! Every applicable bound and characterization checked against exact δ
//! values for one instance.

use serde::Serialize;

use crate::circle::ArcFamily;
use crate::classify::{circular_report, verify_main_bounds, CircularReport, Flag};
use crate::cover::rho;
use crate::error::Error;
use crate::graph::{diameter_graph, UnitGraph};
use crate::hyperbolicity::{classify_low_delta, delta_bounds, delta_exact, delta_sup, LowDeltaClass};
use crate::intersection::build;
use crate::transforms::{
    check_complement, check_h_isometry, check_line, common_neighbor_lemma, complement, four_arc_cover_lemma,
    line_graph, nordhaus_gaddum_check, regular_delta,
};
use crate::value::QuarterValue;

/// Edge count up to which the line-graph isometry is checked on all pairs.
pub const EXHAUSTIVE_ISOMETRY_EDGES: usize = 12;

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub geodesic_cap: usize,
    /// Skip the line graph, whose δ is the most expensive value here.
    pub line: bool,
    pub complement: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            geodesic_cap: crate::hyperbolicity::DEFAULT_GEODESIC_CAP,
            line: true,
            complement: true,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    /// A needed δ value hit the geodesic cap.
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub delta: QuarterValue,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta_complement: Option<QuarterValue>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta_line: Option<QuarterValue>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub circular: Option<CircularReport>,
    pub saturated: bool,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn passed(&self) -> bool {
        self.failures().next().is_none()
    }
}

struct Recorder {
    checks: Vec<Check>,
    saturated: bool,
}

impl Recorder {
    fn push(&mut self, name: &'static str, ok: bool, detail: impl Into<String>) {
        let status = match (ok, self.saturated) {
            (true, _) => Status::Pass,
            (false, true) => Status::Inconclusive,
            (false, false) => Status::Fail,
        };
        self.checks.push(Check {
            name,
            status,
            detail: detail.into(),
        });
    }

    fn result(&mut self, name: &'static str, r: Result<String, Error>) {
        match r {
            Ok(detail) => self.push(name, true, detail),
            Err(e) => self.push(name, false, e.to_string()),
        }
    }

    fn flag(&mut self, name: &'static str, flag: Flag, expected: bool, value: QuarterValue) {
        let detail = format!("{flag:?} with delta {value}");
        match flag {
            Flag::Inconclusive => self.checks.push(Check {
                name,
                status: Status::Inconclusive,
                detail,
            }),
            _ => self.push(name, (flag == Flag::Holds) == expected, detail),
        }
    }
}

/// Graph-level checks shared by families and plain graphs.
fn graph_checks(rec: &mut Recorder, g: &UnitGraph, delta: QuarterValue, opts: &VerifyOptions) {
    let half_diam = g
        .components()
        .iter()
        .map(|c| diameter_graph(&g.induced(c)).half())
        .max()
        .unwrap_or(QuarterValue::ZERO);
    rec.push(
        "quarter_multiple",
        delta.is_quarter_multiple() && delta <= half_diam,
        format!("delta {delta}, half diameter {half_diam}"),
    );
    let b = delta_bounds(g);
    rec.push(
        "cycle_bounds",
        b.lower <= delta && delta <= b.upper,
        format!("[{}, {}]", b.lower, b.upper),
    );
    let sup = delta_sup(g, opts.geodesic_cap);
    rec.saturated |= sup.saturated;
    rec.push("block_decomposition", sup.delta == delta, format!("parts give {}", sup.delta));
    let class = classify_low_delta(g);
    let ok = match class {
        LowDeltaClass::Tree => delta == QuarterValue::ZERO,
        LowDeltaClass::AllCyclesLen3 => delta == QuarterValue::quarters(3),
        LowDeltaClass::Other => delta >= QuarterValue::quarters(4),
    };
    rec.push("low_delta_class", ok, format!("{class:?}"));
    if let Some(r) = regular_delta(g) {
        rec.push("regular_delta", r == delta, format!("predicted {r}"));
    }
    if g.m() > 0 {
        let lm = line_graph(g).expect("has edges");
        let samples = (g.m() > EXHAUSTIVE_ISOMETRY_EDGES).then_some(500);
        rec.push("line_isometry", check_h_isometry(&lm, samples, 0), if samples.is_some() { "sampled" } else { "all pairs" });
    }
}

pub fn verify_graph(g: &UnitGraph, opts: &VerifyOptions) -> VerifyReport {
    let report = delta_exact(g, opts.geodesic_cap);
    let mut rec = Recorder {
        checks: Vec::new(),
        saturated: report.saturated,
    };
    graph_checks(&mut rec, g, report.delta, opts);
    let mut delta_line = None;
    if opts.line && g.m() > 0 {
        let lm = line_graph(g).expect("has edges");
        let dl = delta_exact(&lm.line, opts.geodesic_cap);
        rec.saturated |= dl.saturated;
        let upper = report.delta.scale(5) + QuarterValue::quarters(10);
        rec.push(
            "line_delta_range",
            report.delta <= dl.delta && dl.delta <= upper,
            format!("delta of the line graph {}", dl.delta),
        );
        delta_line = Some(dl.delta);
    }
    VerifyReport {
        delta: report.delta,
        delta_complement: None,
        delta_line,
        circular: None,
        saturated: rec.saturated,
        checks: rec.checks,
    }
}

pub fn verify_family(fam: &ArcFamily, opts: &VerifyOptions) -> VerifyReport {
    let model = build(fam);
    let g = &model.graph;
    let report = delta_exact(g, opts.geodesic_cap);
    let delta = report.delta;
    let mut rec = Recorder {
        checks: Vec::new(),
        saturated: report.saturated,
    };
    let cover = rho(fam);
    let r = cover.rho;

    rec.result(
        "main_bounds",
        verify_main_bounds(&model, delta).map(|(lo, hi)| format!("rho {r}, [{lo}, {hi}]")),
    );
    let circular = circular_report(&model);
    rec.flag("zero_property", circular.zero_property, delta == QuarterValue::ZERO, delta);
    rec.flag(
        "three_quarter_property",
        circular.three_quarter_property,
        delta == QuarterValue::quarters(3),
        delta,
    );
    if r >= 3 {
        let target = QuarterValue::quarters(r as i64);
        match circular.rho_property {
            Flag::Holds => rec.push("rho_property", delta == target, format!("holds, delta {delta}")),
            Flag::Fails if r <= 4 => rec.push("rho_property", delta != target, format!("fails, delta {delta}")),
            f => rec.push("rho_property", true, format!("{f:?}")),
        }
        let idx = &cover.witness;
        let cyc = g.induced(idx);
        let isometric = idx.iter().enumerate().all(|(a, &u)| {
            idx.iter().enumerate().all(|(b, &v)| cyc.dist(a, b) == g.dist(u, v))
        });
        rec.push(
            "cover_cycle_isometric",
            isometric && cyc == UnitGraph::cycle(idx.len()),
            "witness arcs induce an isometric cycle",
        );
    }
    if let Some(class) = circular.interval {
        rec.push(
            "interval_class",
            class.predicted_delta == delta,
            format!("{:?} predicts {}", class.property, class.predicted_delta),
        );
    }
    if let Some(ok) = common_neighbor_lemma(&model) {
        rec.push("common_neighbors", ok, "non-adjacent pairs have no two non-adjacent common neighbours");
    }
    if let Some(ok) = four_arc_cover_lemma(&model) {
        rec.push("four_arc_cover", ok, "diamond patterns cover the circle");
    }
    graph_checks(&mut rec, g, delta, opts);

    let mut delta_complement = None;
    if opts.complement {
        let c = complement(g);
        let dc = delta_exact(&c, opts.geodesic_cap);
        rec.saturated |= dc.saturated;
        rec.result(
            "complement_bounds",
            check_complement(r, &c, dc.delta).map(|b| {
                let note = if b.generic { " (diameter bound only)" } else { "" };
                format!("[{}, {}]{note}", b.lower, b.upper)
            }),
        );
        rec.result(
            "nordhaus_gaddum",
            nordhaus_gaddum_check(r, delta, dc.delta).map(|b| match b {
                Some(b) => format!("sum in [{}, {}], product in [{}, {}]", b.sum.lower, b.sum.upper, b.product.lower, b.product.upper),
                None => format!("no bound for rho {r}"),
            }),
        );
        if r > 4 {
            let ok = dc.delta == QuarterValue::quarters(5) || dc.delta == QuarterValue::quarters(6);
            rec.push("complement_two_values", ok, format!("delta of the complement {}", dc.delta));
        }
        if r >= 7 {
            rec.push("complement_smaller", dc.delta < delta, format!("{} < {delta}", dc.delta));
        }
        delta_complement = Some(dc.delta);
    }

    let mut delta_line = None;
    if opts.line && g.m() > 0 {
        let lm = line_graph(g).expect("has edges");
        let dl = delta_exact(&lm.line, opts.geodesic_cap);
        rec.saturated |= dl.saturated;
        rec.result(
            "line_bounds",
            check_line(r, g, delta, dl.delta).map(|b| format!("[{}, {}]", b.lower, b.upper)),
        );
        delta_line = Some(dl.delta);
    }

    VerifyReport {
        delta,
        delta_complement,
        delta_line,
        circular: Some(circular),
        saturated: rec.saturated,
        checks: rec.checks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle_tiling, wheel7};

    #[test]
    fn generated_families_pass() {
        for fam in [cycle_tiling(5), wheel7()] {
            let r = verify_family(&fam, &VerifyOptions::default());
            assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn graphs_pass() {
        let r = verify_graph(&UnitGraph::complete(4), &VerifyOptions::default());
        assert!(r.passed());
        assert_eq!(r.delta, QuarterValue::integer(1));
    }
}
