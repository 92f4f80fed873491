//! Canonical graph generators and seeded random families.

use super::subgraph::find_subgraph;
use super::Graph;
use crate::error::{Error, Result};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Named graph family with parameters.
#[derive(Clone, Debug, PartialEq)]
pub enum GraphFamily {
    Cycle { n: usize },
    Complete { n: usize },
    CompleteBipartite { a: usize, b: usize },
    Petersen,
    Kneser { n: usize, k: usize },
    ErdosRenyi { n: usize, p: f64 },
    /// Erdos-Renyi sample made H-free by deleting one edge from each found
    /// copy of the forbidden graph until none remains.
    HFreeRandom { n: usize, p: f64, forbidden: Graph },
}

/// Family plus seed; generation is a pure function of this value.
#[derive(Clone, Debug, PartialEq)]
pub struct GraphFamilySpec {
    pub family: GraphFamily,
    pub seed: u64,
}

pub fn cycle(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    if n >= 3 {
        for i in 0..n {
            g.add_edge(i, (i + 1) % n);
        }
    } else if n == 2 {
        g.add_edge(0, 1);
    }
    g
}

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in (u + 1)..n {
            g.add_edge(u, v);
        }
    }
    g
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut g = Graph::empty(a + b);
    for u in 0..a {
        for v in a..(a + b) {
            g.add_edge(u, v);
        }
    }
    g
}

pub fn path(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for i in 1..n {
        g.add_edge(i - 1, i);
    }
    g
}

/// Classical drawing: outer 5-cycle 0..5, inner pentagram 5..10, spokes.
pub fn petersen() -> Graph {
    let mut g = Graph::empty(10);
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
        g.add_edge(i, 5 + i);
    }
    g
}

/// Kneser graph K(n, k): vertices are the k-subsets of an n-set in
/// lexicographic order, edges join disjoint subsets.
pub fn kneser(n: usize, k: usize) -> Result<Graph> {
    if k == 0 || n < 2 * k {
        return Err(Error::InvalidFamily(format!(
            "kneser requires 1 <= k and n >= 2k, got n={n} k={k}"
        )));
    }
    let subsets = k_subsets(n, k);
    let masks: Vec<u64> = subsets
        .iter()
        .map(|s| s.iter().fold(0u64, |acc, &x| acc | 1 << x))
        .collect();
    let mut g = Graph::empty(masks.len());
    for i in 0..masks.len() {
        for j in (i + 1)..masks.len() {
            if masks[i] & masks[j] == 0 {
                g.add_edge(i, j);
            }
        }
    }
    Ok(g)
}

fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            cur.push(x);
            rec(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

pub fn erdos_renyi(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.random_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// H-free random graph: sample G(n, p), then delete one edge from each found
/// copy of `h` until the containment oracle finds none.
pub fn h_free_random(n: usize, p: f64, h: &Graph, seed: u64) -> Result<Graph> {
    if h.m() == 0 {
        return Err(Error::InvalidFamily(
            "forbidden graph must have at least one edge".into(),
        ));
    }
    let mut g = erdos_renyi(n, p, seed);
    let h_edge = h.edges()[0];
    while let Some(map) = find_subgraph(&g, h) {
        g.remove_edge(map[h_edge.0], map[h_edge.1]);
    }
    Ok(g)
}

/// Generate the graph named by `spec`; identical specs yield identical graphs.
pub fn generate(spec: &GraphFamilySpec) -> Result<Graph> {
    match &spec.family {
        GraphFamily::Cycle { n } => {
            if *n < 3 {
                return Err(Error::InvalidFamily(format!("cycle requires n >= 3, got {n}")));
            }
            Ok(cycle(*n))
        }
        GraphFamily::Complete { n } => Ok(complete(*n)),
        GraphFamily::CompleteBipartite { a, b } => Ok(complete_bipartite(*a, *b)),
        GraphFamily::Petersen => Ok(petersen()),
        GraphFamily::Kneser { n, k } => kneser(*n, *k),
        GraphFamily::ErdosRenyi { n, p } => {
            check_probability(*p)?;
            Ok(erdos_renyi(*n, *p, spec.seed))
        }
        GraphFamily::HFreeRandom { n, p, forbidden } => {
            check_probability(*p)?;
            h_free_random(*n, *p, forbidden, spec.seed)
        }
    }
}

fn check_probability(p: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidFamily(format!("probability {p} outside [0,1]")));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::contains_subgraph;

    #[test]
    fn cycle_counts() {
        let c5 = cycle(5);
        assert_eq!(c5.n(), 5);
        assert_eq!(c5.m(), 5);
        assert!((0..5).all(|v| c5.degree(v) == 2));
    }

    #[test]
    fn petersen_is_three_regular() {
        let p = petersen();
        assert_eq!(p.n(), 10);
        assert_eq!(p.m(), 15);
        assert!((0..10).all(|v| p.degree(v) == 3));
    }

    #[test]
    fn kneser_5_2_is_petersen() {
        let k = kneser(5, 2).unwrap();
        assert_eq!(k.n(), 10);
        assert_eq!(k.m(), 15);
        assert!((0..10).all(|v| k.degree(v) == 3));
        // Same vertex and edge count, so mutual containment is isomorphism.
        assert!(contains_subgraph(&k, &petersen()));
        assert!(contains_subgraph(&petersen(), &k));
    }

    #[test]
    fn kneser_parameter_check() {
        assert!(kneser(3, 2).is_err());
        assert!(kneser(4, 0).is_err());
        let k73 = kneser(7, 3).unwrap();
        assert_eq!(k73.n(), 35);
        assert!((0..35).all(|v| k73.degree(v) == 4));
    }

    #[test]
    fn erdos_renyi_deterministic() {
        let a = erdos_renyi(12, 0.5, 7);
        let b = erdos_renyi(12, 0.5, 7);
        assert_eq!(a, b);
        let c = erdos_renyi(12, 0.5, 8);
        assert_ne!(a, c, "different seeds should differ on 66 coin flips");
    }

    #[test]
    fn h_free_random_is_h_free() {
        let triangle = complete(3);
        let g = h_free_random(12, 0.5, &triangle, 7).unwrap();
        assert_eq!(g.n(), 12);
        assert!(!contains_subgraph(&g, &triangle));
    }

    #[test]
    fn h_free_rejects_edgeless_forbidden() {
        assert!(h_free_random(5, 0.5, &Graph::empty(2), 0).is_err());
    }

    #[test]
    fn p3_free_graphs_are_matchings() {
        let p3 = path(3);
        for seed in 0..5 {
            let g = h_free_random(10, 0.6, &p3, seed).unwrap();
            assert!((0..10).all(|v| g.degree(v) <= 1));
        }
    }
}
