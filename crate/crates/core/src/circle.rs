//! Closed arcs on the unit circle with exact rational endpoints.
//!
//! Angles are measured in turns, so `1/8` is the point `e^{πi/4}`. Every arc
//! is closed: two arcs that only share an endpoint intersect.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::value::{format_rational, parse_rational, Rational};

/// A point of the circle, stored as a rational number of turns in `[0, 1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Angle(#[serde(with = "crate::value::rational_str")] Rational);

impl Angle {
    /// Reduces `turns` modulo one.
    pub fn new(turns: Rational) -> Self {
        Angle(turns - turns.floor())
    }

    pub fn zero() -> Self {
        Angle(Rational::zero())
    }

    pub fn turns(&self) -> Rational {
        self.0
    }

    /// Counterclockwise distance from `self` to `other`, in `[0, 1)`.
    pub fn ccw_to(&self, other: &Angle) -> Rational {
        let d = other.0 - self.0;
        if d < Rational::zero() {
            d + Rational::one()
        } else {
            d
        }
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_rational(&self.0))
    }
}

/// A closed arc: the whole circle or the counterclockwise sweep from `start`
/// to `end`. A span with `start == end` is a single point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Arc {
    Full,
    Span { start: Angle, end: Angle },
}

impl Arc {
    pub fn span(start: Angle, end: Angle) -> Self {
        Arc::Span { start, end }
    }

    /// The arc `[from, to]` for real turn values `from ≤ to`; a sweep of one
    /// turn or more is the full circle.
    pub fn from_turns(from: Rational, to: Rational) -> Result<Self> {
        if to < from {
            return Err(Error::Invalid(format!(
                "arc end {} precedes start {}",
                format_rational(&to),
                format_rational(&from)
            )));
        }
        if to - from >= Rational::one() {
            return Ok(Arc::Full);
        }
        Ok(Arc::span(Angle::new(from), Angle::new(to)))
    }

    /// Angular length in turns (`1` for the full circle).
    pub fn length(&self) -> Rational {
        match self {
            Arc::Full => Rational::one(),
            Arc::Span { start, end } => start.ccw_to(end),
        }
    }

    pub fn is_full(&self) -> bool {
        matches!(self, Arc::Full)
    }

    pub fn contains(&self, t: Angle) -> bool {
        match self {
            Arc::Full => true,
            Arc::Span { start, end } => start.ccw_to(&t) <= start.ccw_to(end),
        }
    }

    /// Point-set containment `other ⊆ self`.
    pub fn contains_arc(&self, other: &Arc) -> bool {
        match (self, other) {
            (Arc::Full, _) => true,
            (Arc::Span { .. }, Arc::Full) => false,
            (Arc::Span { start, .. }, Arc::Span { start: os, .. }) => {
                self.contains(*os) && start.ccw_to(os) + other.length() <= self.length()
            }
        }
    }

    pub fn intersects(&self, other: &Arc) -> bool {
        intersects(self, other)
    }

    /// The lift `[s, s + len]` of the arc on the real line with `s ∈ [0, 1)`.
    pub(crate) fn lift(&self) -> Option<(Rational, Rational)> {
        match self {
            Arc::Full => None,
            Arc::Span { start, .. } => Some((start.turns(), start.turns() + self.length())),
        }
    }
}

/// Whether the closed point sets of `a` and `b` meet. Two spans meet exactly
/// when one of them contains the other's start point.
pub fn intersects(a: &Arc, b: &Arc) -> bool {
    match (a, b) {
        (Arc::Full, _) | (_, Arc::Full) => true,
        (Arc::Span { start: sa, .. }, Arc::Span { start: sb, .. }) => a.contains(*sb) || b.contains(*sa),
    }
}

/// An ordered, labelled list of arcs. Arc `i` becomes vertex `i` of the
/// intersection graph.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArcFamily {
    arcs: Vec<Arc>,
    labels: Vec<String>,
}

impl ArcFamily {
    pub fn new(labels: Vec<String>, arcs: Vec<Arc>) -> Result<Self> {
        if labels.len() != arcs.len() {
            return Err(Error::Invalid(format!(
                "{} labels for {} arcs",
                labels.len(),
                arcs.len()
            )));
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if l.is_empty() || l.chars().any(char::is_whitespace) || l.starts_with('#') {
                return Err(Error::Invalid(format!("bad label {l:?}")));
            }
            if !seen.insert(l.as_str()) {
                return Err(Error::Invalid(format!("duplicate label {l:?}")));
            }
        }
        Ok(ArcFamily { arcs, labels })
    }

    /// Labels `prefix1, prefix2, ...`.
    pub fn with_prefix(prefix: &str, arcs: Vec<Arc>) -> Self {
        let labels = (1..=arcs.len()).map(|i| format!("{prefix}{i}")).collect();
        ArcFamily { arcs, labels }
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn arc(&self, i: usize) -> &Arc {
        &self.arcs[i]
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn push(&mut self, label: impl Into<String>, arc: Arc) -> Result<()> {
        let label = label.into();
        if self.labels.contains(&label) {
            return Err(Error::Invalid(format!("duplicate label {label:?}")));
        }
        self.labels.push(label);
        self.arcs.push(arc);
        Ok(())
    }

    /// The sub-family with the given arc indices, in the given order.
    pub fn subfamily(&self, indices: &[usize]) -> ArcFamily {
        ArcFamily {
            arcs: indices.iter().map(|&i| self.arcs[i]).collect(),
            labels: indices.iter().map(|&i| self.labels[i].clone()).collect(),
        }
    }

    pub fn covers_circle(&self) -> bool {
        covers_circle(self)
    }
}

/// Whether the union of the family is the whole circle.
pub fn covers_circle(fam: &ArcFamily) -> bool {
    uncovered_point(fam).is_none()
}

/// Some angle no arc covers, or `None` when the family covers the circle.
///
/// The lifted arcs are swept from `0`; the result is `0` when `0` is not
/// covered, otherwise the midpoint of the first gap.
pub fn uncovered_point(fam: &ArcFamily) -> Option<Angle> {
    uncovered_point_of(fam.arcs())
}

pub(crate) fn uncovered_point_of(arcs: &[Arc]) -> Option<Angle> {
    if arcs.iter().any(Arc::is_full) {
        return None;
    }
    let one = Rational::one();
    let mut pieces: Vec<(Rational, Rational)> = Vec::with_capacity(2 * arcs.len());
    for arc in arcs {
        let (lo, hi) = arc.lift().expect("span");
        pieces.push((lo, hi.min(one)));
        if hi >= one {
            pieces.push((Rational::zero(), hi - one));
        }
    }
    pieces.sort();
    let mut reach = match pieces.first() {
        Some(&(lo, hi)) if lo.is_zero() => hi,
        _ => return Some(Angle::zero()),
    };
    for &(lo, hi) in &pieces[1..] {
        if lo > reach {
            return Some(Angle::new((reach + lo) / 2));
        }
        reach = reach.max(hi);
    }
    if reach < one {
        Some(Angle::new((reach + one) / 2))
    } else {
        None
    }
}

impl fmt::Display for ArcFamily {
    /// One arc per line: `label p/q r/s`, or `label full`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (label, arc) in self.labels.iter().zip(&self.arcs) {
            match arc {
                Arc::Full => writeln!(f, "{label} full")?,
                Arc::Span { start, end } => writeln!(f, "{label} {start} {end}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for ArcFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut labels = Vec::new();
        let mut arcs = Vec::new();
        for (i, raw) in s.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let lineno = i + 1;
            let tokens: Vec<&str> = line.split_whitespace().collect();
            let arc = match tokens.as_slice() {
                [_, "full"] => Arc::Full,
                [_, a, b] => {
                    let parse = |t: &str| {
                        parse_rational(t)
                            .ok_or_else(|| Error::parse(lineno, format!("bad angle {t:?}")))
                    };
                    Arc::span(Angle::new(parse(a)?), Angle::new(parse(b)?))
                }
                _ => {
                    return Err(Error::parse(
                        lineno,
                        "expected `label start end` or `label full`",
                    ))
                }
            };
            labels.push(tokens[0].to_string());
            arcs.push(arc);
        }
        ArcFamily::new(labels, arcs).map_err(|e| Error::parse(0, e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn span(a: (i64, i64), b: (i64, i64)) -> Arc {
        Arc::span(Angle::new(r(a.0, a.1)), Angle::new(r(b.0, b.1)))
    }

    #[test]
    fn angle_normalizes() {
        assert_eq!(Angle::new(r(5, 4)), Angle::new(r(1, 4)));
        assert_eq!(Angle::new(r(-1, 4)), Angle::new(r(3, 4)));
        assert_eq!(Angle::new(r(1, 1)), Angle::zero());
    }

    #[test]
    fn intersection_examples() {
        let q = span((0, 1), (1, 4));
        assert!(intersects(&Arc::Full, &q));
        assert!(intersects(&q, &span((1, 4), (1, 2))));
        assert!(intersects(&span((3, 4), (1, 8)), &span((0, 1), (1, 16))));
        assert!(!intersects(&q, &span((1, 2), (3, 4))));
        let point = span((1, 3), (1, 3));
        assert!(intersects(&point, &point));
        assert!(!intersects(&point, &q));
    }

    #[test]
    fn containment() {
        assert!(span((0, 1), (1, 2)).contains_arc(&span((1, 8), (1, 4))));
        assert!(!span((1, 8), (1, 4)).contains_arc(&span((0, 1), (1, 2))));
        assert!(span((3, 4), (1, 4)).contains_arc(&span((7, 8), (1, 8))));
        assert!(!span((3, 4), (1, 4)).contains_arc(&span((1, 8), (7, 8))));
        assert!(Arc::Full.contains_arc(&q_arc()));
        assert!(!q_arc().contains_arc(&Arc::Full));
    }

    fn q_arc() -> Arc {
        span((0, 1), (1, 4))
    }

    #[test]
    fn covering() {
        let full = ArcFamily::with_prefix("a", vec![Arc::Full]);
        assert!(covers_circle(&full));
        let sixths = ArcFamily::with_prefix("s", (0..6).map(|j| span((j, 6), (j + 1, 6))).collect());
        assert!(covers_circle(&sixths));
        let gap = ArcFamily::with_prefix("g", vec![span((0, 1), (1, 4)), span((1, 2), (3, 4))]);
        assert!(!covers_circle(&gap));
        let p = uncovered_point(&gap).unwrap();
        assert_eq!(p, Angle::new(r(3, 8)));
        assert!(!gap.arcs().iter().any(|a| a.contains(p)));
        assert_eq!(uncovered_point(&ArcFamily::default()), Some(Angle::zero()));
        assert_eq!(uncovered_point(&sixths), None);
    }

    #[test]
    fn wrapping_cover() {
        let fam = ArcFamily::with_prefix("w", vec![span((3, 4), (1, 4)), span((1, 4), (3, 4))]);
        assert!(covers_circle(&fam));
        let fam = ArcFamily::with_prefix("w", vec![span((3, 4), (1, 4)), span((1, 3), (3, 4))]);
        let p = uncovered_point(&fam).unwrap();
        assert!(!fam.arcs().iter().any(|a| a.contains(p)));
        // 0 is covered only through the endpoint 1 of the second arc
        let fam = ArcFamily::with_prefix("w", vec![span((1, 4), (1, 2)), span((1, 2), (1, 1))]);
        assert_eq!(uncovered_point(&fam), Some(Angle::new(r(1, 8))));
    }

    #[test]
    fn text_format_round_trip() {
        let text = "# demo\nA 0/1 1/4\nB 3/4 1/8   # wraps\nC full\n";
        let fam: ArcFamily = text.parse().unwrap();
        assert_eq!(fam.len(), 3);
        assert_eq!(fam.to_string(), "A 0/1 1/4\nB 3/4 1/8\nC full\n");
        assert_eq!(fam.to_string().parse::<ArcFamily>().unwrap(), fam);
        assert!("A 0/1".parse::<ArcFamily>().is_err());
        assert!("A 0/1 1/2\nA 1/2 0/1".parse::<ArcFamily>().is_err());
        assert!("A 0/1 x".parse::<ArcFamily>().is_err());
    }

    #[test]
    fn from_turns_full() {
        assert_eq!(Arc::from_turns(r(0, 1), r(1, 1)).unwrap(), Arc::Full);
        assert_eq!(Arc::from_turns(r(-1, 8), r(1, 8)).unwrap(), span((7, 8), (1, 8)));
    }
}
