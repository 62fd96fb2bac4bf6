//! Minimum circular covers.

use num_traits::One;
use serde::Serialize;

use crate::circle::{uncovered_point_of, Arc, ArcFamily};
use crate::error::{Error, Result};
use crate::value::Rational;

/// Largest family accepted by [`rho_oracle`].
pub const RHO_ORACLE_LIMIT: usize = 20;

/// Minimum number of arcs covering the circle (0 when the family does not
/// cover it), with one covering subfamily of that size.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverResult {
    pub rho: usize,
    /// Arc indices in counterclockwise order starting from the seed.
    pub witness: Vec<usize>,
    pub labels: Vec<String>,
}

/// How far the lifted arc `arc` extends past the lifted point `t`, if it
/// contains `t`.
fn extends_to(arc: &Arc, t: Rational) -> Option<Rational> {
    let (s, e) = arc.lift()?;
    let len = e - s;
    let offset = (t - s) - (t - s).floor();
    (offset <= len).then(|| t + len - offset)
}

/// Greedy cover seeded with `seed`: repeatedly take the arc containing the
/// current reach that extends it farthest, lowest index on ties.
fn greedy_from(arcs: &[Arc], seed: usize) -> Option<Vec<usize>> {
    let (s, mut reach) = arcs[seed].lift()?;
    let goal = s + Rational::one();
    let mut chosen = vec![seed];
    while reach < goal {
        let mut next: Option<(Rational, usize)> = None;
        for (i, arc) in arcs.iter().enumerate() {
            if let Some(r) = extends_to(arc, reach) {
                if r > reach && next.is_none_or(|(best, _)| r > best) {
                    next = Some((r, i));
                }
            }
        }
        let (r, i) = next?;
        if chosen.contains(&i) || chosen.len() == arcs.len() {
            return None;
        }
        chosen.push(i);
        reach = r;
    }
    Some(chosen)
}

pub fn rho(fam: &ArcFamily) -> CoverResult {
    let arcs = fam.arcs();
    let best = if let Some(i) = arcs.iter().position(Arc::is_full) {
        Some(vec![i])
    } else {
        (0..arcs.len())
            .filter_map(|seed| greedy_from(arcs, seed))
            .fold(None, |best: Option<Vec<usize>>, c| match best {
                Some(b) if b.len() <= c.len() => Some(b),
                _ => Some(c),
            })
    };
    let witness = best.unwrap_or_default();
    debug_assert!(witness.is_empty() || fam.subfamily(&witness).covers_circle());
    CoverResult {
        rho: witness.len(),
        labels: witness.iter().map(|&i| fam.label(i).to_string()).collect(),
        witness,
    }
}

/// ρ by trying every subfamily in order of size.
pub fn rho_oracle(fam: &ArcFamily) -> Result<usize> {
    let n = fam.len();
    if n > RHO_ORACLE_LIMIT {
        return Err(Error::SizeLimit {
            what: "arcs",
            actual: n,
            limit: RHO_ORACLE_LIMIT,
        });
    }
    let mut best = 0;
    let mut chosen = Vec::with_capacity(n);
    for mask in 1u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if best != 0 && size >= best {
            continue;
        }
        chosen.clear();
        chosen.extend((0..n).filter(|i| mask >> i & 1 == 1).map(|i| *fam.arc(i)));
        if uncovered_point_of(&chosen).is_none() {
            best = size;
        }
    }
    Ok(best)
}

/// Every covering subfamily of minimum size, as sorted index lists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinimalCovers {
    pub rho: usize,
    pub covers: Vec<Vec<usize>>,
    /// More than the requested number of covers exist; `covers` is partial.
    pub saturated: bool,
}

/// All ρ-minimal covers, up to `limit` of them.
///
/// Every minimum cover contains an arc through a point of minimum depth, and
/// from that arc its other members can be chained so that each contains the
/// reach of the previous ones.
pub fn minimal_covers(fam: &ArcFamily, limit: usize) -> MinimalCovers {
    let arcs = fam.arcs();
    let rho = rho(fam).rho;
    let mut out = MinimalCovers {
        rho,
        covers: Vec::new(),
        saturated: false,
    };
    if rho == 0 {
        return out;
    }
    if rho == 1 {
        out.covers = (0..arcs.len()).filter(|&i| arcs[i].is_full()).map(|i| vec![i]).collect();
        out.saturated = out.covers.len() > limit;
        out.covers.truncate(limit);
        return out;
    }
    let t0 = shallowest_point(arcs);
    let mut seen = std::collections::BTreeSet::new();
    for seed in 0..arcs.len() {
        let Some(reach) = extends_to(&arcs[seed], t0) else {
            continue;
        };
        let start = reach - arcs[seed].length();
        let mut chain = vec![seed];
        if !chain_covers(arcs, &mut chain, reach, start + Rational::one(), rho, limit, &mut seen) {
            out.saturated = true;
            break;
        }
    }
    out.covers = seen.into_iter().collect();
    out
}

fn chain_covers(
    arcs: &[Arc],
    chain: &mut Vec<usize>,
    reach: Rational,
    goal: Rational,
    rho: usize,
    limit: usize,
    seen: &mut std::collections::BTreeSet<Vec<usize>>,
) -> bool {
    if reach >= goal {
        let mut cover = chain.clone();
        cover.sort_unstable();
        seen.insert(cover);
        return seen.len() <= limit;
    }
    if chain.len() == rho {
        return true;
    }
    for i in 0..arcs.len() {
        if chain.contains(&i) {
            continue;
        }
        if let Some(r) = extends_to(&arcs[i], reach) {
            if r > reach {
                chain.push(i);
                let ok = chain_covers(arcs, chain, r, goal, rho, limit, seen);
                chain.pop();
                if !ok {
                    return false;
                }
            }
        }
    }
    true
}

/// A point of `[0, 1)` lying in as few arcs as possible.
fn shallowest_point(arcs: &[Arc]) -> Rational {
    let mut cuts: Vec<Rational> = arcs
        .iter()
        .filter_map(Arc::lift)
        .flat_map(|(s, e)| [s, e - e.floor()])
        .collect();
    cuts.push(Rational::from_integer(0));
    cuts.sort();
    cuts.dedup();
    let mut candidates = cuts.clone();
    for (i, &c) in cuts.iter().enumerate() {
        let next = cuts.get(i + 1).copied().unwrap_or(Rational::one());
        candidates.push((c + next) / 2);
    }
    let depth = |t: Rational| arcs.iter().filter(|a| extends_to(a, t).is_some()).count();
    candidates.into_iter().min_by_key(|&t| (depth(t), t)).expect("nonempty")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::cycle_tiling;

    fn fam(text: &str) -> ArcFamily {
        text.parse().unwrap()
    }

    #[test]
    fn rho_examples() {
        assert_eq!(rho(&fam("f full\na 0 1/4")).rho, 1);
        let r = rho(&cycle_tiling(6));
        assert_eq!(r.rho, 6);
        assert!(rho(&fam("a 0 1/4\nb 1/2 3/4")).witness.is_empty());
        let r = rho(&fam("a 0 1/2\nb 1/2 0\nc 1/4 3/4"));
        assert_eq!((r.rho, r.labels.len()), (2, 2));
    }

    #[test]
    fn wrapping_arcs() {
        let f = fam("a 3/4 1/4\nb 1/4 3/4");
        assert_eq!(rho(&f).rho, 2);
        assert_eq!(rho_oracle(&f).unwrap(), 2);
        let f = fam("a 1/2 1/4\nb 1/8 5/8");
        assert_eq!(rho(&f).rho, 2);
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(rho_oracle(&fam("a 0 1/4\nb 1/2 3/4")).unwrap(), 0);
        assert_eq!(rho_oracle(&fam("f full")).unwrap(), 1);
        assert_eq!(rho_oracle(&cycle_tiling(6)).unwrap(), 6);
    }

    #[test]
    fn all_minimal_covers() {
        let f = fam("a 0 1/2\nb 1/2 0\nc 1/4 3/4\nd 3/4 1/4");
        let m = minimal_covers(&f, 100);
        assert_eq!(m.rho, 2);
        assert_eq!(m.covers, vec![vec![0, 1], vec![2, 3]]);
        let m = minimal_covers(&fam("f full\ng full\na 0 1/2"), 100);
        assert_eq!(m.covers, vec![vec![0], vec![1]]);
    }
}
