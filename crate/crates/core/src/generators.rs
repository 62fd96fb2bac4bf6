//! Named extremal families and seeded random instances. Angles are in turns.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::circle::{Arc, ArcFamily};
use crate::error::{Error, Result};
use crate::graph::UnitGraph;
use crate::value::{parse_rational, Rational};

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

fn arc(from: Rational, to: Rational) -> Arc {
    Arc::from_turns(from, to).expect("increasing endpoints")
}

fn family(prefix: &str, arcs: Vec<Arc>) -> ArcFamily {
    ArcFamily::with_prefix(prefix, arcs)
}

fn tiles(rho: usize) -> Vec<Arc> {
    let k = rho as i64;
    (1..=k).map(|j| arc(r(j - 1, k), r(j, k))).collect()
}

/// `rho` consecutive arcs `[(j-1)/rho, j/rho]`; a single full arc for `rho = 1`.
pub fn cycle_tiling(rho: usize) -> ArcFamily {
    assert!(rho >= 1, "cycle_tiling needs at least one arc");
    family("t", tiles(rho))
}

/// A full arc over six tiles; its intersection graph is the wheel on seven
/// vertices.
pub fn wheel7() -> ArcFamily {
    let mut arcs = vec![Arc::Full];
    arcs.extend(tiles(6));
    let mut labels = vec!["hub".to_string()];
    labels.extend((1..=6).map(|i| format!("t{i}")));
    ArcFamily::new(labels, arcs).expect("labels")
}

/// Tiles plus a ring of `rho + 6` short arcs threaded through the points
/// `z_1, ..., z_{rho+6}`. Needs even `rho ≥ 6` with `rho ≡ 2 (mod 4)`.
pub fn extremal_main(rho: usize) -> Result<ArcFamily> {
    if rho < 6 || rho % 4 != 2 {
        return Err(Error::Param(format!(
            "extremal_main needs rho >= 6 with rho = 2 mod 4, got {rho}"
        )));
    }
    let k = rho as i64;
    let half = r(1, 2);
    let mid = |j: i64| r(2 * j - 1, 2 * k);
    let mut z = Vec::with_capacity(rho + 6);
    for base in [r(0, 1), half] {
        z.extend((1..=3).map(|i| base + r(i, 4 * k)));
        z.extend((1..=2).map(|i| base + r(1, k) + r(i, 3 * k)));
        let first = if base == half { k / 2 + 3 } else { 3 };
        z.extend((first..first + k / 2 - 2).map(mid));
    }
    debug_assert_eq!(z.len(), rho + 6);
    debug_assert!(z.windows(2).all(|w| w[0] < w[1]));

    let mut arcs = tiles(rho);
    let mut labels: Vec<String> = (1..=rho).map(|i| format!("t{i}")).collect();
    for j in 0..z.len() {
        let (a, b) = (z[j], z[(j + 1) % z.len()]);
        let b = if b < a { b + 1 } else { b };
        arcs.push(arc(a, b));
        labels.push(format!("z{}", j + 1));
    }
    ArcFamily::new(labels, arcs)
}

pub fn default_epsilon(rho: usize) -> Rational {
    r(1, 4 * rho as i64)
}

/// The proper family with `rho` tiles, shifted copies and four short arcs
/// near `0` and `1/2`. Needs even `rho ≥ 4` and `0 < eps < 1/(2 rho)`.
pub fn extremal_proper(rho: usize, eps: Option<Rational>) -> Result<ArcFamily> {
    if rho < 4 || !rho.is_multiple_of(2) {
        return Err(Error::Param(format!("extremal_proper needs even rho >= 4, got {rho}")));
    }
    let k = rho as i64;
    let e = eps.unwrap_or_else(|| default_epsilon(rho));
    if e <= r(0, 1) || e >= r(1, 2 * k) {
        return Err(Error::Param("extremal_proper needs 0 < eps < 1/(2 rho)".into()));
    }
    let half = r(1, 2);
    let one = r(1, 1);
    let mut arcs = tiles(rho);
    let mut labels: Vec<String> = (1..=rho).map(|i| format!("t{i}")).collect();
    let mut add = |label: String, a: Rational, b: Rational| {
        labels.push(label);
        arcs.push(arc(a, b));
    };
    for (name, base) in [("s", r(0, 1)), ("h", half)] {
        for j in 1..k / 2 {
            add(format!("{name}{j}"), e + base + r(j - 1, k), e + base + r(j, k));
        }
    }
    add("u1".into(), half - r(1, k) - e, half - e);
    add("u2".into(), one - r(1, k) - e, one - e);
    add("x1".into(), -e / 2, e);
    add("y1".into(), half - e / 2, half + e);
    add("y2".into(), half - e, half + e / 2);
    add("x2".into(), one - e, one + e / 2);
    ArcFamily::new(labels, arcs)
}

/// Two half circles and eight eighth-circle tiles.
pub fn rho2_delta2() -> ArcFamily {
    let mut arcs = vec![arc(r(0, 1), r(1, 2)), arc(r(1, 2), r(1, 1))];
    arcs.extend((1..=8).map(|j| arc(r(j - 1, 8), r(j, 8))));
    family("a", arcs)
}

/// Two half circles and four short arcs around `0` and `1/2`; proper.
pub fn rho2_proper() -> ArcFamily {
    let h = r(1, 2);
    family(
        "a",
        vec![
            arc(r(0, 1), h),
            arc(h, r(1, 1)),
            arc(r(-1, 16), r(1, 8)),
            arc(r(-1, 8), r(1, 16)),
            arc(h - r(1, 16), h + r(1, 8)),
            arc(h - r(1, 8), h + r(1, 16)),
        ],
    )
}

/// `rho` tiles plus one arc meeting exactly three consecutive tiles. Needs
/// `rho ≥ 3`.
pub fn example_cx(rho: usize) -> Result<ArcFamily> {
    if rho < 3 {
        return Err(Error::Param(format!("example_cx needs rho >= 3, got {rho}")));
    }
    let k = rho as i64;
    let mut fam = cycle_tiling(rho);
    fam.push("vi", arc(r(1, 2 * k), r(5, 2 * k)))?;
    Ok(fam)
}

/// Random family of `n` arcs with endpoints in `(1/den) Z`. Each arc is full
/// with probability `full_prob`, otherwise has length in `[1/den, max_len]`.
pub fn random_arcs(n: usize, den: u32, max_len: Rational, full_prob: f64, seed: u64) -> Result<ArcFamily> {
    if !(2..=64).contains(&den) {
        return Err(Error::Param(format!("denominator {den} outside 2..=64")));
    }
    let d = den as i64;
    let max_steps = (max_len * d).floor().to_integer().clamp(1, d - 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let arcs = (0..n)
        .map(|_| {
            if full_prob > 0.0 && rng.gen_bool(full_prob.min(1.0)) {
                Arc::Full
            } else {
                let s = rng.gen_range(0..d);
                let l = rng.gen_range(1..=max_steps);
                arc(r(s, d), r(s + l, d))
            }
        })
        .collect();
    Ok(family("a", arcs))
}

/// Random graph where each pair is an edge with probability `p`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> UnitGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    UnitGraph::from_fn(n, |_, _| rng.gen_bool(p.clamp(0.0, 1.0)))
}

/// Random connected graph: a random spanning tree plus `extra` random
/// additional edges (fewer if the graph fills up).
pub fn random_connected_graph(n: usize, extra: usize, seed: u64) -> UnitGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    let room = n * n.saturating_sub(1) / 2 - edges.len();
    let want = extra.min(room);
    let mut added = 0;
    while added < want {
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        let e = (u.min(v), u.max(v));
        if u != v && !edges.contains(&e) {
            edges.push(e);
            added += 1;
        }
    }
    UnitGraph::new(n, edges).expect("simple graph")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyName {
    CycleTiling,
    Wheel7,
    ExtremalMain,
    ExtremalProper,
    Rho2Delta2,
    Rho2Proper,
    ExampleCx,
    RandomArcs,
    RandomGraph,
}

impl FamilyName {
    pub const ALL: [FamilyName; 9] = [
        FamilyName::CycleTiling,
        FamilyName::Wheel7,
        FamilyName::ExtremalMain,
        FamilyName::ExtremalProper,
        FamilyName::Rho2Delta2,
        FamilyName::Rho2Proper,
        FamilyName::ExampleCx,
        FamilyName::RandomArcs,
        FamilyName::RandomGraph,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            FamilyName::CycleTiling => "cycle_tiling",
            FamilyName::Wheel7 => "wheel7",
            FamilyName::ExtremalMain => "extremal_main",
            FamilyName::ExtremalProper => "extremal_proper",
            FamilyName::Rho2Delta2 => "rho2_delta2",
            FamilyName::Rho2Proper => "rho2_proper",
            FamilyName::ExampleCx => "example_cx",
            FamilyName::RandomArcs => "random_arcs",
            FamilyName::RandomGraph => "random_graph",
        }
    }
}

impl fmt::Display for FamilyName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FamilyName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyName::ALL
            .into_iter()
            .find(|n| n.as_str() == s)
            .ok_or_else(|| Error::Param(format!("unknown family {s:?}")))
    }
}

/// A named construction with string parameters, as given on the command line.
///
/// Parameters: `rho` (integer) for the tiled families; `eps` (rational) for
/// `extremal_proper`; `n`, `den`, `max_len`, `full` for `random_arcs`;
/// `n`, `p` (or `extra` for a connected graph) for `random_graph`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub name: FamilyName,
    pub params: BTreeMap<String, String>,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Generated {
    Family(ArcFamily),
    Graph(UnitGraph),
}

impl FamilySpec {
    pub fn new(name: FamilyName) -> Self {
        FamilySpec {
            name,
            params: BTreeMap::new(),
            seed: 0,
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    fn allowed(&self) -> &'static [&'static str] {
        match self.name {
            FamilyName::CycleTiling | FamilyName::ExtremalMain | FamilyName::ExampleCx => &["rho"],
            FamilyName::ExtremalProper => &["rho", "eps"],
            FamilyName::Wheel7 | FamilyName::Rho2Delta2 | FamilyName::Rho2Proper => &[],
            FamilyName::RandomArcs => &["n", "den", "max_len", "full"],
            FamilyName::RandomGraph => &["n", "p", "extra"],
        }
    }

    fn get<T: FromStr>(&self, key: &str) -> Result<Option<T>> {
        self.params
            .get(key)
            .map(|v| v.parse().map_err(|_| Error::Param(format!("bad value {v:?} for {key}"))))
            .transpose()
    }

    fn rational(&self, key: &str) -> Result<Option<Rational>> {
        self.params
            .get(key)
            .map(|v| parse_rational(v).ok_or_else(|| Error::Param(format!("bad value {v:?} for {key}"))))
            .transpose()
    }

    fn rho(&self) -> Result<usize> {
        self.get("rho")?
            .ok_or_else(|| Error::Param(format!("{} needs rho", self.name)))
    }
}

pub fn generate(spec: &FamilySpec) -> Result<Generated> {
    if let Some(k) = spec.params.keys().find(|k| !spec.allowed().contains(&k.as_str())) {
        return Err(Error::Param(format!("{} takes no parameter {k:?}", spec.name)));
    }
    let fam = match spec.name {
        FamilyName::CycleTiling => {
            let rho = spec.rho()?;
            if rho == 0 {
                return Err(Error::Param("cycle_tiling needs rho >= 1".into()));
            }
            cycle_tiling(rho)
        }
        FamilyName::Wheel7 => wheel7(),
        FamilyName::ExtremalMain => extremal_main(spec.rho()?)?,
        FamilyName::ExtremalProper => extremal_proper(spec.rho()?, spec.rational("eps")?)?,
        FamilyName::Rho2Delta2 => rho2_delta2(),
        FamilyName::Rho2Proper => rho2_proper(),
        FamilyName::ExampleCx => example_cx(spec.rho()?)?,
        FamilyName::RandomArcs => {
            let full: f64 = spec.get("full")?.unwrap_or(0.0);
            if !(0.0..=1.0).contains(&full) {
                return Err(Error::Param("full must be a probability".into()));
            }
            random_arcs(
                spec.get("n")?.unwrap_or(8),
                spec.get("den")?.unwrap_or(12),
                spec.rational("max_len")?.unwrap_or(r(1, 2)),
                full,
                spec.seed,
            )?
        }
        FamilyName::RandomGraph => {
            let n = spec.get("n")?.unwrap_or(8);
            return Ok(Generated::Graph(match spec.get::<usize>("extra")? {
                Some(extra) => random_connected_graph(n, extra, spec.seed),
                None => {
                    let p: f64 = spec.get("p")?.unwrap_or(0.5);
                    if !(0.0..=1.0).contains(&p) {
                        return Err(Error::Param("p must be a probability".into()));
                    }
                    random_graph(n, p, spec.seed)
                }
            }));
        }
    };
    Ok(Generated::Family(fam))
}
