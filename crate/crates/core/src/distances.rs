//! Breadth-first distances, the all-pairs distance distribution, and the
//! orbit-accelerated variant that runs one BFS per symmetry class.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Below this many vertices the naive distribution runs on one thread.
const PARALLEL_THRESHOLD: usize = 512;

const UNSEEN: u32 = u32::MAX;

/// Number of unordered vertex pairs at each distance.
///
/// Index `k` of [`as_slice`](Self::as_slice) holds the count for distance
/// `k`; index 0 is always 0 since only distinct pairs are counted. Trailing
/// zeros are trimmed, so the last index is the diameter.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct DistanceDistribution {
    counts: Vec<u64>,
}

impl DistanceDistribution {
    /// Builds a distribution from counts for `k = 1, 2, ...`.
    pub fn from_counts(by_distance: impl IntoIterator<Item = u64>) -> Self {
        let mut counts = vec![0];
        counts.extend(by_distance);
        Self::trimmed(counts)
    }

    fn trimmed(mut counts: Vec<u64>) -> Self {
        while counts.len() > 1 && *counts.last().unwrap() == 0 {
            counts.pop();
        }
        if counts.is_empty() {
            counts.push(0);
        }
        DistanceDistribution { counts }
    }

    /// Pairs at distance exactly `k`; 0 past the diameter.
    pub fn count(&self, k: usize) -> u64 {
        if k == 0 {
            0
        } else {
            self.counts.get(k).copied().unwrap_or(0)
        }
    }

    /// Counts indexed by distance, starting at distance 0.
    pub fn as_slice(&self) -> &[u64] {
        &self.counts
    }

    /// Counts for distances `1..=diameter`.
    pub fn by_distance(&self) -> &[u64] {
        &self.counts[1..]
    }

    /// Largest distance with a nonzero count; 0 for graphs with fewer than
    /// two vertices.
    pub fn diameter(&self) -> usize {
        self.counts.len() - 1
    }

    /// Σ_k counts[k]; equals C(|V|, 2) for a connected graph.
    pub fn total_pairs(&self) -> u128 {
        self.counts.iter().map(|&c| c as u128).sum()
    }

    /// Σ_k k · counts[k].
    pub fn distance_sum(&self) -> u128 {
        self.counts
            .iter()
            .enumerate()
            .map(|(k, &c)| k as u128 * c as u128)
            .sum()
    }
}

/// One orbit of an [`OrbitSpec`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbit {
    representative: usize,
    members: Vec<usize>,
}

impl Orbit {
    pub fn representative(&self) -> usize {
        self.representative
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// A partition of the vertex set into orbits of some automorphism group,
/// each with a designated representative.
///
/// Construction checks only the partition shape. Whether the orbits really
/// come from automorphisms is the caller's claim.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitSpec {
    vertex_count: usize,
    orbits: Vec<Orbit>,
}

impl OrbitSpec {
    /// Orbits given as member lists; the first member of each list is its
    /// representative.
    pub fn new(vertex_count: usize, orbits: Vec<Vec<usize>>) -> Result<Self> {
        let orbits = orbits
            .into_iter()
            .map(|members| {
                let representative = *members
                    .first()
                    .ok_or_else(|| Error::MalformedOrbits("empty orbit".into()))?;
                Ok((representative, members))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::with_representatives(vertex_count, orbits)
    }

    pub fn with_representatives(vertex_count: usize, orbits: Vec<(usize, Vec<usize>)>) -> Result<Self> {
        let mut owner = vec![false; vertex_count];
        for (rep, members) in &orbits {
            if members.is_empty() {
                return Err(Error::MalformedOrbits("empty orbit".into()));
            }
            if !members.contains(rep) {
                return Err(Error::MalformedOrbits(format!(
                    "representative {rep} is not a member of its orbit"
                )));
            }
            for &v in members {
                if v >= vertex_count {
                    return Err(Error::MalformedOrbits(format!(
                        "vertex {v} out of range for {vertex_count} vertices"
                    )));
                }
                if std::mem::replace(&mut owner[v], true) {
                    return Err(Error::MalformedOrbits(format!(
                        "vertex {v} appears in more than one orbit"
                    )));
                }
            }
        }
        if let Some(v) = owner.iter().position(|&o| !o) {
            return Err(Error::MalformedOrbits(format!("vertex {v} is in no orbit")));
        }
        Ok(OrbitSpec {
            vertex_count,
            orbits: orbits
                .into_iter()
                .map(|(representative, members)| Orbit {
                    representative,
                    members,
                })
                .collect(),
        })
    }

    /// Every vertex in its own orbit.
    pub fn singletons(vertex_count: usize) -> Self {
        OrbitSpec {
            vertex_count,
            orbits: (0..vertex_count)
                .map(|v| Orbit {
                    representative: v,
                    members: vec![v],
                })
                .collect(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn orbits(&self) -> &[Orbit] {
        &self.orbits
    }
}

/// A distribution together with how many BFS runs produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistributionRun {
    pub distribution: DistanceDistribution,
    pub bfs_runs: usize,
}

/// Reusable single-source BFS buffers.
struct Bfs<'g> {
    graph: &'g Graph,
    dist: Vec<u32>,
    queue: Vec<usize>,
}

impl<'g> Bfs<'g> {
    fn new(graph: &'g Graph) -> Self {
        let n = graph.vertex_count();
        Bfs {
            graph,
            dist: vec![UNSEEN; n],
            queue: Vec::with_capacity(n),
        }
    }

    /// Runs BFS from `source`; afterwards `queue` holds the reached vertices
    /// in nondecreasing distance order.
    fn run(&mut self, source: usize) {
        for &v in &self.queue {
            self.dist[v] = UNSEEN;
        }
        self.queue.clear();
        self.dist[source] = 0;
        self.queue.push(source);
        let mut head = 0;
        while head < self.queue.len() {
            let u = self.queue[head];
            head += 1;
            let next = self.dist[u] + 1;
            for &v in self.graph.adj(u) {
                if self.dist[v] == UNSEEN {
                    self.dist[v] = next;
                    self.queue.push(v);
                }
            }
        }
    }

    /// Number of vertices at each distance from `source` (index 0 counts the
    /// source itself).
    fn histogram(&mut self, source: usize) -> Vec<u64> {
        self.run(source);
        let ecc = self.dist[*self.queue.last().unwrap()] as usize;
        let mut hist = vec![0u64; ecc + 1];
        for &v in &self.queue {
            hist[self.dist[v] as usize] += 1;
        }
        hist
    }
}

fn ensure_connected(g: &Graph) -> Result<()> {
    match g.first_unreachable() {
        Some(v) => Err(Error::Disconnected(v)),
        None => Ok(()),
    }
}

fn check_source(g: &Graph, source: usize) -> Result<()> {
    if source >= g.vertex_count() {
        return Err(Error::VertexOutOfRange {
            id: source,
            vertex_count: g.vertex_count(),
        });
    }
    Ok(())
}

/// Shortest-path distances from `source` to every vertex.
pub fn bfs_distances(g: &Graph, source: usize) -> Result<Vec<usize>> {
    check_source(g, source)?;
    let mut bfs = Bfs::new(g);
    bfs.run(source);
    if let Some(v) = bfs.dist.iter().position(|&d| d == UNSEEN) {
        return Err(Error::Disconnected(v));
    }
    Ok(bfs.dist.iter().map(|&d| d as usize).collect())
}

fn add_into(acc: &mut Vec<u64>, hist: &[u64], weight: u64) {
    if acc.len() < hist.len() {
        acc.resize(hist.len(), 0);
    }
    for (a, &h) in acc.iter_mut().zip(hist) {
        *a += weight * h;
    }
}

/// Halves an ordered-pair histogram into unordered pair counts.
fn halve(mut ordered: Vec<u64>) -> Option<DistanceDistribution> {
    if let Some(first) = ordered.first_mut() {
        *first = 0;
    }
    if ordered.iter().any(|c| c % 2 != 0) {
        return None;
    }
    ordered.iter_mut().for_each(|c| *c /= 2);
    Some(DistanceDistribution::trimmed(ordered))
}

/// All-pairs distance distribution by one BFS per vertex.
pub fn distance_distribution(g: &Graph) -> Result<DistanceDistribution> {
    distance_distribution_run(g).map(|r| r.distribution)
}

/// [`distance_distribution`] reporting the number of BFS runs.
///
/// Large graphs fan the sources out over the rayon pool; the per-source
/// histograms are summed with integer addition, so the result does not
/// depend on scheduling.
pub fn distance_distribution_run(g: &Graph) -> Result<DistributionRun> {
    ensure_connected(g)?;
    let n = g.vertex_count();
    let ordered = if n >= PARALLEL_THRESHOLD {
        (0..n)
            .into_par_iter()
            .map_init(|| Bfs::new(g), |bfs, s| bfs.histogram(s))
            .reduce(Vec::new, |mut a, b| {
                add_into(&mut a, &b, 1);
                a
            })
    } else {
        sequential_ordered(g)
    };
    let distribution = halve(ordered).expect("ordered pair counts of an undirected graph are even");
    Ok(DistributionRun {
        distribution,
        bfs_runs: n,
    })
}

fn sequential_ordered(g: &Graph) -> Vec<u64> {
    let mut bfs = Bfs::new(g);
    let mut acc = Vec::new();
    for s in 0..g.vertex_count() {
        let hist = bfs.histogram(s);
        add_into(&mut acc, &hist, 1);
    }
    acc
}

/// Single-threaded [`distance_distribution`].
pub fn distance_distribution_sequential(g: &Graph) -> Result<DistanceDistribution> {
    ensure_connected(g)?;
    Ok(halve(sequential_ordered(g)).expect("ordered pair counts of an undirected graph are even"))
}

/// Largest pairwise distance.
pub fn diameter(g: &Graph) -> Result<usize> {
    distance_distribution(g).map(|d| d.diameter())
}

/// Distance distribution from one BFS per orbit representative, each
/// histogram weighted by its orbit size.
///
/// Equals [`distance_distribution`] whenever the orbits come from
/// automorphisms of `g`. That is not verified; an odd ordered-pair total,
/// which no automorphism-induced partition can produce, is reported as
/// [`Error::MalformedOrbits`].
pub fn orbit_distance_distribution(g: &Graph, orbits: &OrbitSpec) -> Result<DistanceDistribution> {
    orbit_distance_distribution_run(g, orbits).map(|r| r.distribution)
}

pub fn orbit_distance_distribution_run(g: &Graph, orbits: &OrbitSpec) -> Result<DistributionRun> {
    if orbits.vertex_count() != g.vertex_count() {
        return Err(Error::MalformedOrbits(format!(
            "orbits cover {} vertices but the graph has {}",
            orbits.vertex_count(),
            g.vertex_count()
        )));
    }
    ensure_connected(g)?;
    let mut bfs = Bfs::new(g);
    let mut acc = Vec::new();
    for orbit in orbits.orbits() {
        let hist = bfs.histogram(orbit.representative());
        add_into(&mut acc, &hist, orbit.size() as u64);
    }
    let distribution = halve(acc)
        .ok_or_else(|| Error::MalformedOrbits("odd ordered-pair count; orbits are not automorphism-induced".into()))?;
    Ok(DistributionRun {
        distribution,
        bfs_runs: orbits.orbits().len(),
    })
}
