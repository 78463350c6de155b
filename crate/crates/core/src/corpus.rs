//! Seeded test diagrams: family members, random trees and random graphs.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::diagram::{Diagram, Edge};
use crate::families::{construct, Family, FamilySpec};

/// Uniform random labeled tree on `n` vertices from a Prüfer sequence.
pub fn random_tree<R: Rng>(n: usize, rng: &mut R) -> Diagram {
    assert!((1..=Diagram::MAX_VERTICES).contains(&n));
    if n == 1 {
        return Diagram::new(1, Vec::new(), []).expect("single vertex");
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &c in &code {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf remains");
        edges.push(Edge::single(leaf, c));
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push(Edge::single(rest[0], rest[1]));
    Diagram::new(n, edges, []).expect("Prüfer decoding yields a tree")
}

/// Random tree plus `extra` additional random single edges.
pub fn random_graph<R: Rng>(n: usize, extra: usize, rng: &mut R) -> Diagram {
    let tree = random_tree(n, rng);
    let mut edges = tree.edges().to_vec();
    let mut missing: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| tree.neighbor_mask(u) >> v & 1 == 0)
        .collect();
    missing.shuffle(rng);
    edges.extend(missing.into_iter().take(extra).map(|(u, v)| Edge::single(u, v)));
    Diagram::new(n, edges, []).expect("valid random graph")
}

/// Random tree in which some edges become double edges with a random
/// direction, and some vertices are pinned.
pub fn random_multigraph<R: Rng>(n: usize, rng: &mut R) -> Diagram {
    let tree = random_graph(n, rng.gen_range(0..=n / 3), rng);
    let edges = tree
        .edges()
        .iter()
        .map(|e| {
            if rng.gen_bool(0.3) {
                if rng.gen_bool(0.5) {
                    Edge::arrow(e.u, e.v)
                } else {
                    Edge::arrow(e.v, e.u)
                }
            } else {
                *e
            }
        })
        .collect();
    let pins: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.15)).collect();
    Diagram::new(n, edges, pins).expect("valid random multigraph")
}

/// `count` random trees containing E6 with `6..=max_n` vertices.
pub fn random_e6_trees(count: usize, max_n: usize, seed: u64) -> Vec<Diagram> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(6..=max_n);
        let t = random_tree(n, &mut rng);
        if t.contains_e6().expect("trees are simply laced") {
            out.push(t);
        }
    }
    out
}

/// The 5-vertex graph with a 4-cycle through a degree-3 vertex on which a
/// move changes the component count from 1 to 2.
pub fn cyclic_counterexample() -> Diagram {
    Diagram::builder(5)
        .edge(0, 1)
        .path([1, 2, 3, 4, 1])
        .name("cycle with a tail")
        .build()
        .expect("valid diagram")
}

/// Every family member with at most `max_vertices` vertices.
pub fn family_members(max_vertices: usize) -> Vec<Diagram> {
    let mut out = Vec::new();
    for fam in Family::ALL {
        let params: Vec<u32> = match fam.fixed_rank() {
            Some(r) => vec![r],
            None => (fam.min_param()..)
                .take_while(|&p| fam.vertex_count(p) <= max_vertices)
                .collect(),
        };
        for p in params {
            if fam.vertex_count(p) <= max_vertices {
                out.push(construct(&FamilySpec::new(fam, p)).expect("parameter in range"));
            }
        }
    }
    out
}

/// Family members, random trees, random graphs with cycles and random
/// multigraphs with pins, all with at most `max_vertices` vertices.
pub fn standard_corpus(max_vertices: usize, seed: u64) -> Vec<Diagram> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = family_members(max_vertices);
    out.push(cyclic_counterexample());
    for n in 2..=max_vertices {
        for _ in 0..4 {
            out.push(random_tree(n, &mut rng));
        }
        if n >= 3 {
            let extra = rng.gen_range(1..=n.min(4));
            out.push(random_graph(n, extra, &mut rng));
            out.push(random_multigraph(n, &mut rng));
        }
    }
    out
}
