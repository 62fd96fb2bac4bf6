use serde::Serialize;

use super::UnitGraph;

/// Subgraphs covering the graph, any two meeting in at most one cut vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TDecomposition {
    /// Sorted vertex sets; each induces one part.
    pub parts: Vec<Vec<usize>>,
    pub cut_vertices: Vec<usize>,
}

/// Biconnected components via low-link values. Isolated vertices are
/// singleton parts.
pub fn t_decomposition(g: &UnitGraph) -> TDecomposition {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut is_cut = vec![false; n];
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut parts = Vec::new();
    let mut time = 0;

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        if g.degree(root) == 0 {
            disc[root] = time;
            time += 1;
            parts.push(vec![root]);
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut root_children = 0;
        // (vertex, parent, next neighbour index)
        let mut stack = vec![(root, usize::MAX, 0usize)];
        while let Some(&mut (v, parent, ref mut next)) = stack.last_mut() {
            if *next < g.degree(v) {
                let w = g.neighbors(v)[*next];
                *next += 1;
                if disc[w] == usize::MAX {
                    edge_stack.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if parent == usize::MAX {
                    continue;
                }
                low[parent] = low[parent].min(low[v]);
                if low[v] >= disc[parent] {
                    if parent != root {
                        is_cut[parent] = true;
                    }
                    let mut part = Vec::new();
                    while let Some((a, b)) = edge_stack.pop() {
                        part.push(a);
                        part.push(b);
                        if (a, b) == (parent, v) {
                            break;
                        }
                    }
                    part.sort_unstable();
                    part.dedup();
                    parts.push(part);
                }
            }
        }
        if root_children > 1 {
            is_cut[root] = true;
        }
    }
    parts.sort();
    TDecomposition {
        parts,
        cut_vertices: (0..n).filter(|&v| is_cut[v]).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bowtie() {
        let g = UnitGraph::new(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        let t = t_decomposition(&g);
        assert_eq!(t.parts, vec![vec![0, 1, 2], vec![2, 3, 4]]);
        assert_eq!(t.cut_vertices, vec![2]);
    }

    #[test]
    fn cycle_and_path() {
        let t = t_decomposition(&UnitGraph::cycle(5));
        assert_eq!(t.parts, vec![vec![0, 1, 2, 3, 4]]);
        assert!(t.cut_vertices.is_empty());
        let t = t_decomposition(&UnitGraph::path(4));
        assert_eq!(t.parts, vec![vec![0, 1], vec![1, 2], vec![2, 3]]);
        assert_eq!(t.cut_vertices, vec![1, 2]);
    }

    #[test]
    fn isolated_vertices_and_components() {
        let g = UnitGraph::new(5, [(0, 1), (3, 4)]).unwrap();
        let t = t_decomposition(&g);
        assert_eq!(t.parts, vec![vec![0, 1], vec![2], vec![3, 4]]);
        assert!(t.cut_vertices.is_empty());
    }
}
