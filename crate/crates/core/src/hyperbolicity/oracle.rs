//! Brute-force δ on the graph with every edge cut into four unit segments.
//!
//! Corners range over every node of the subdivision and every combination of
//! shortest paths is tried, with no cycle restriction. Only meant for small
//! graphs.

use std::collections::{HashMap, VecDeque};
use std::rc::Rc;

use crate::error::{Error, Result};
use crate::graph::UnitGraph;
use crate::value::QuarterValue;

/// Largest `n + m` accepted by [`delta_oracle`].
pub const ORACLE_SIZE_LIMIT: usize = 30;

const PATH_LIMIT: usize = 200_000;

struct Subdivision {
    adj: Vec<Vec<usize>>,
    dist: Vec<Vec<u32>>,
}

impl Subdivision {
    fn new(g: &UnitGraph) -> Self {
        let n = g.n();
        let mut adj = vec![Vec::new(); n + 3 * g.m()];
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            let chain = [u, n + 3 * e, n + 3 * e + 1, n + 3 * e + 2, v];
            for w in chain.windows(2) {
                adj[w[0]].push(w[1]);
                adj[w[1]].push(w[0]);
            }
        }
        let dist = (0..adj.len()).map(|s| bfs(&adj, s)).collect();
        Subdivision { adj, dist }
    }

    fn paths(&self, a: usize, b: usize) -> Result<Vec<Vec<usize>>> {
        let mut out = Vec::new();
        let mut stack = vec![vec![a]];
        while let Some(path) = stack.pop() {
            let cur = *path.last().unwrap();
            if cur == b {
                out.push(path);
                if out.len() > PATH_LIMIT {
                    return Err(Error::Saturated(PATH_LIMIT));
                }
                continue;
            }
            for &w in &self.adj[cur] {
                if self.dist[w][b] + 1 == self.dist[cur][b] {
                    let mut next = path.clone();
                    next.push(w);
                    stack.push(next);
                }
            }
        }
        Ok(out)
    }

    /// Largest distance from a point of one side to the union of the other two.
    fn thinness(&self, sides: [&[usize]; 3]) -> u32 {
        let mut worst = 0;
        for i in 0..3 {
            for &p in sides[i] {
                let near = sides[(i + 1) % 3]
                    .iter()
                    .chain(sides[(i + 2) % 3])
                    .map(|&q| self.dist[p][q])
                    .min()
                    .unwrap();
                worst = worst.max(near);
            }
        }
        worst
    }
}

fn bfs(adj: &[Vec<usize>], s: usize) -> Vec<u32> {
    let mut d = vec![u32::MAX; adj.len()];
    d[s] = 0;
    let mut queue = VecDeque::from([s]);
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if d[w] == u32::MAX {
                d[w] = d[v] + 1;
                queue.push_back(w);
            }
        }
    }
    d
}

/// δ by exhaustive search over the quarter grid. Refuses graphs with
/// `n + m > ORACLE_SIZE_LIMIT`.
pub fn delta_oracle(g: &UnitGraph) -> Result<QuarterValue> {
    let size = g.n() + g.m();
    if size > ORACLE_SIZE_LIMIT {
        return Err(Error::SizeLimit {
            what: "n + m",
            actual: size,
            limit: ORACLE_SIZE_LIMIT,
        });
    }
    let s = Subdivision::new(g);
    let len = s.adj.len();
    let mut pairs: Vec<(u32, usize, usize)> = (0..len)
        .flat_map(|a| (a + 1..len).map(move |b| (a, b)))
        .map(|(a, b)| (s.dist[a][b], a, b))
        .filter(|&(d, _, _)| d != u32::MAX)
        .collect();
    pairs.sort_by_key(|p| std::cmp::Reverse(p.0));

    let mut best = 0;
    let mut cache = HashMap::new();
    let mut paths = |a: usize, b: usize| -> Result<Rc<Vec<Vec<usize>>>> {
        if let Some(p) = cache.get(&(a, b)) {
            return Ok(Rc::clone(p));
        }
        let p = Rc::new(s.paths(a, b)?);
        cache.insert((a, b), Rc::clone(&p));
        Ok(p)
    };
    for &(d, a, b) in &pairs {
        if d / 2 <= best {
            break;
        }
        let ab = paths(a, b)?;
        for (i, p1) in ab.iter().enumerate() {
            for p2 in &ab[i + 1..] {
                best = best.max(s.thinness([p1, p2, &[a]]));
            }
        }
        for c in 0..len {
            if c == a || c == b || s.dist[a][c] > d || s.dist[b][c] > d {
                continue;
            }
            let bc = paths(b, c)?;
            let ca = paths(c, a)?;
            for p1 in ab.iter() {
                for p2 in bc.iter() {
                    for p3 in ca.iter() {
                        best = best.max(s.thinness([p1, p2, p3]));
                    }
                }
            }
        }
    }
    Ok(QuarterValue::quarters(best as i64))
}
