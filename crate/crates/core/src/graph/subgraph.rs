//! Subgraph (not necessarily induced) containment by backtracking over
//! injective vertex maps with degree pruning.

use super::Graph;

/// True iff `g` has a subgraph isomorphic to `h`. Every edge of `h` must map
/// to an edge of `g`; extra edges of `g` inside the image are allowed.
pub fn contains_subgraph(g: &Graph, h: &Graph) -> bool {
    find_subgraph(g, h).is_some()
}

/// First embedding found in deterministic search order, as a map from
/// h-vertex to g-vertex, or None.
pub fn find_subgraph(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if h.n() > g.n() {
        return None;
    }
    if h.n() == 0 {
        return Some(Vec::new());
    }
    let order = search_order(h);
    let mut map = vec![usize::MAX; h.n()];
    let mut used = vec![false; g.n()];
    if place(g, h, &order, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

/// Vertex order for the search: highest degree first, preferring vertices
/// with a neighbor already placed so edge constraints kick in early.
fn search_order(h: &Graph) -> Vec<usize> {
    let n = h.n();
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    for _ in 0..n {
        let mut best: Option<(usize, usize, usize)> = None; // (attached, degree, v)
        for v in 0..n {
            if placed[v] {
                continue;
            }
            let attached = h.neighbors(v).filter(|&u| placed[u]).count();
            let key = (attached, h.degree(v), v);
            best = match best {
                Some((a, d, bv)) if (a, d) >= (key.0, key.1) => Some((a, d, bv)),
                _ => Some(key),
            };
        }
        let (_, _, v) = best.unwrap();
        placed[v] = true;
        order.push(v);
    }
    order
}

fn place(
    g: &Graph,
    h: &Graph,
    order: &[usize],
    depth: usize,
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let hv = order[depth];
    let hdeg = h.degree(hv);
    let placed_nbrs: Vec<usize> = h.neighbors(hv).filter(|&u| map[u] != usize::MAX).collect();
    'cand: for gv in 0..g.n() {
        if used[gv] || g.degree(gv) < hdeg {
            continue;
        }
        for &u in &placed_nbrs {
            if !g.has_edge(map[u], gv) {
                continue 'cand;
            }
        }
        map[hv] = gv;
        used[gv] = true;
        if place(g, h, order, depth + 1, map, used) {
            return true;
        }
        map[hv] = usize::MAX;
        used[gv] = false;
    }
    false
}
