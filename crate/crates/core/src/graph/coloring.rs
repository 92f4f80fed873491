//! Exact chromatic and clique numbers for small graphs, plus the greedy
//! coloring used to split neighborhoods into independent sets.

use super::Graph;
use crate::error::{Error, Result};

const CHROMATIC_MAX_N: usize = 20;
const CLIQUE_MAX_N: usize = 30;

/// Exact chromatic number by branch and bound (n <= 20): clique lower bound,
/// greedy upper bound, then backtracking k-colorability between them.
pub fn chromatic_number(g: &Graph) -> Result<usize> {
    if g.n() > CHROMATIC_MAX_N {
        return Err(Error::SizeLimit {
            what: "chromatic_number",
            n: g.n(),
            max: CHROMATIC_MAX_N,
        });
    }
    if g.n() == 0 {
        return Ok(0);
    }
    let lower = clique_number(g)?;
    let order = degree_descending(g);
    let upper = greedy_color_count(g, &order);
    for k in lower..upper {
        if colorable(g, &order, k) {
            return Ok(k);
        }
    }
    Ok(upper)
}

fn degree_descending(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    order
}

fn greedy_color_count(g: &Graph, order: &[usize]) -> usize {
    let mut color = vec![usize::MAX; g.n()];
    let mut count = 0;
    for &v in order {
        let mut taken = 0u64;
        for u in g.neighbors(v) {
            if color[u] != usize::MAX {
                taken |= 1 << color[u];
            }
        }
        let c = (0..).find(|&c| taken >> c & 1 == 0).unwrap();
        color[v] = c;
        count = count.max(c + 1);
    }
    count
}

fn colorable(g: &Graph, order: &[usize], k: usize) -> bool {
    if k == 0 {
        return g.n() == 0;
    }
    let mut color = vec![usize::MAX; g.n()];
    fn rec(g: &Graph, order: &[usize], k: usize, depth: usize, max_used: usize, color: &mut Vec<usize>) -> bool {
        if depth == order.len() {
            return true;
        }
        let v = order[depth];
        // Trying one fresh color beyond those in use breaks color symmetry.
        let limit = k.min(max_used + 1);
        'colors: for c in 0..limit {
            for u in g.neighbors(v) {
                if color[u] == c {
                    continue 'colors;
                }
            }
            color[v] = c;
            if rec(g, order, k, depth + 1, max_used.max(c + 1), color) {
                return true;
            }
            color[v] = usize::MAX;
        }
        false
    }
    rec(g, order, k, 0, 0, &mut color)
}

/// Exact maximum clique size by branch and bound on bitsets (n <= 30).
pub fn clique_number(g: &Graph) -> Result<usize> {
    if g.n() > CLIQUE_MAX_N {
        return Err(Error::SizeLimit {
            what: "clique_number",
            n: g.n(),
            max: CLIQUE_MAX_N,
        });
    }
    if g.n() == 0 {
        return Ok(0);
    }
    let n = g.n();
    let rows: Vec<u64> = (0..n).map(|v| g.row_word(v)).collect();
    let mut best = 0usize;
    fn expand(rows: &[u64], mut cand: u64, size: usize, best: &mut usize) {
        if size + cand.count_ones() as usize <= *best {
            return;
        }
        if cand == 0 {
            *best = (*best).max(size);
            return;
        }
        while cand != 0 {
            if size + cand.count_ones() as usize <= *best {
                return;
            }
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            expand(rows, cand & rows[v], size + 1, best);
        }
    }
    expand(&rows, (1u64 << n) - 1, 0, &mut best);
    Ok(best.max(1))
}

/// Greedy proper coloring in ascending vertex order; returns the color
/// classes (each an independent set) in color order.
pub fn greedy_color_classes(g: &Graph) -> Vec<Vec<usize>> {
    let mut color = vec![usize::MAX; g.n()];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for v in 0..g.n() {
        let mut taken = vec![false; classes.len() + 1];
        for u in g.neighbors(v) {
            if color[u] != usize::MAX && color[u] < taken.len() {
                taken[color[u]] = true;
            }
        }
        let c = taken.iter().position(|&t| !t).unwrap();
        color[v] = c;
        if c == classes.len() {
            classes.push(Vec::new());
        }
        classes[c].push(v);
    }
    classes
}
