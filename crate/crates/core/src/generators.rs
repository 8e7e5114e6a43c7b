//! Deterministic graph constructors: the Jahangir family plus a small test
//! corpus (cycles, paths, stars, complete graphs, wheels, seeded random
//! connected graphs).

use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::distances::OrbitSpec;
use crate::error::{Error, Result};
use crate::graph::Graph;

fn build(vertex_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Graph {
    Graph::from_edge_list(vertex_count, edges).expect("generator emits a simple graph")
}

fn check_jahangir(n: usize, m: usize) -> Result<()> {
    if n < 1 {
        return Err(Error::invalid(format!("jahangir spacing n must be >= 1, got {n}")));
    }
    if m < 3 {
        return Err(Error::invalid(format!("jahangir spoke count m must be >= 3, got {m}")));
    }
    Ok(())
}

/// Vertex roles in a Jahangir graph `J(n, m)`.
///
/// Cycle vertex `i` sits at position `i` for `0 <= i < nm`; hubs are the
/// multiples of `n`; the center is `nm`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct JahangirLabeling {
    pub n: usize,
    pub m: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Role {
    /// Cycle vertex not adjacent to the center.
    Periphery,
    /// Cycle vertex adjacent to the center.
    Hub,
    Center,
}

impl JahangirLabeling {
    pub fn new(n: usize, m: usize) -> Result<Self> {
        check_jahangir(n, m)?;
        Ok(JahangirLabeling { n, m })
    }

    pub fn cycle_len(&self) -> usize {
        self.n * self.m
    }

    pub fn vertex_count(&self) -> usize {
        self.cycle_len() + 1
    }

    pub fn edge_count(&self) -> usize {
        self.m * (self.n + 1)
    }

    pub fn center(&self) -> usize {
        self.cycle_len()
    }

    pub fn hubs(&self) -> impl Iterator<Item = usize> {
        let n = self.n;
        (0..self.m).map(move |i| i * n)
    }

    pub fn role(&self, v: usize) -> Option<Role> {
        match v {
            v if v == self.center() => Some(Role::Center),
            v if v < self.cycle_len() && v % self.n == 0 => Some(Role::Hub),
            v if v < self.cycle_len() => Some(Role::Periphery),
            _ => None,
        }
    }

    /// `(periphery, hubs, center)` vertex counts, grouped by role rather than
    /// degree: at `m = 3` the center and the hubs both have degree 3.
    pub fn role_counts(&self) -> (usize, usize, usize) {
        ((self.n - 1) * self.m, self.m, 1)
    }

    pub fn graph(&self) -> Graph {
        let len = self.cycle_len();
        let cycle = (0..len).map(|i| (i, (i + 1) % len));
        let spokes = self.hubs().map(|h| (self.center(), h));
        build(self.vertex_count(), cycle.chain(spokes))
    }
}

/// The Jahangir graph `J(n, m)`: a cycle on `nm` vertices plus a center joined
/// to every `n`-th cycle vertex. `n = 1` gives the wheel on `m` spokes.
pub fn jahangir(n: usize, m: usize) -> Result<Graph> {
    JahangirLabeling::new(n, m).map(|l| l.graph())
}

pub fn cycle(k: usize) -> Result<Graph> {
    if k < 3 {
        return Err(Error::invalid(format!("cycle length must be >= 3, got {k}")));
    }
    Ok(build(k, (0..k).map(|i| (i, (i + 1) % k))))
}

pub fn path(k: usize) -> Result<Graph> {
    if k < 1 {
        return Err(Error::invalid("path needs at least one vertex"));
    }
    Ok(build(k, (1..k).map(|i| (i - 1, i))))
}

/// Star with `k` leaves; the center is vertex 0.
pub fn star(k: usize) -> Result<Graph> {
    if k < 1 {
        return Err(Error::invalid("star needs at least one leaf"));
    }
    Ok(build(k + 1, (1..=k).map(|i| (0, i))))
}

pub fn complete(k: usize) -> Result<Graph> {
    if k < 1 {
        return Err(Error::invalid("complete graph needs at least one vertex"));
    }
    Ok(build(k, (0..k).flat_map(|u| (u + 1..k).map(move |v| (u, v)))))
}

/// Wheel with `k` spokes: cycle `0..k` and center `k`. Identical to
/// `jahangir(1, k)`.
pub fn wheel(k: usize) -> Result<Graph> {
    if k < 3 {
        return Err(Error::invalid(format!("wheel needs at least 3 spokes, got {k}")));
    }
    jahangir(1, k)
}

/// Seeded random connected graph on `k` vertices.
///
/// Procedure, fixed so results are reproducible:
/// 1. Seed `ChaCha8Rng` with `seed_from_u64(seed)`.
/// 2. For every pair `u < v` in lexicographic order, draw
///    `x = gen_range(0..den)` and keep the edge iff `x < num`, where
///    `edge_probability = num/den` in lowest terms.
/// 3. Order the components by smallest vertex id and join each consecutive
///    pair of components by an edge between their smallest vertices.
pub fn random_connected(k: usize, edge_probability: Ratio<u64>, seed: u64) -> Result<Graph> {
    if k < 1 {
        return Err(Error::invalid("random graph needs at least one vertex"));
    }
    let (num, den) = (*edge_probability.numer(), *edge_probability.denom());
    if num == 0 || num > den {
        return Err(Error::invalid(format!(
            "edge probability must lie in (0, 1], got {edge_probability}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..k {
        for v in u + 1..k {
            if rng.gen_range(0..den) < num {
                edges.push((u, v));
            }
        }
    }
    let sampled = build(k, edges.iter().copied());
    let components = sampled.components();
    if components.len() > 1 {
        edges.extend(components.windows(2).map(|w| (w[0][0], w[1][0])));
        return Ok(build(k, edges));
    }
    Ok(sampled)
}

/// Orbits of `J(n, m)` under the rotation `i -> (i + n) mod nm` (center
/// fixed): one orbit per residue class mod `n`, represented by the residue,
/// plus the singleton center.
pub fn rotation_orbits(n: usize, m: usize) -> Result<OrbitSpec> {
    let layout = JahangirLabeling::new(n, m)?;
    let mut orbits: Vec<Vec<usize>> = (0..n).map(|r| (0..m).map(|i| r + i * n).collect()).collect();
    orbits.push(vec![layout.center()]);
    OrbitSpec::new(layout.vertex_count(), orbits)
}
