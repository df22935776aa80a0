//! Simple undirected graphs stored as an upper-triangular bit field.
//!
//! Vertex pairs `(i, j)` with `i < j` are numbered in row-major order:
//! `(0,1), (0,2), .., (0,n-1), (1,2), ..`. Bit `p` of the field is set when
//! the `p`-th pair is an edge. Enumeration order and the edge-list reader
//! both use this numbering; graph6 uses column order and transposes on the
//! way in and out (see [`crate::graph6`]).

use std::fmt;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::error::GraphError;

/// Largest vertex count accepted by [`enumerate_labeled`].
pub const EXHAUSTIVE_CAP: usize = 7;

/// Immutable simple graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    bits: Vec<u64>,
    degrees: Vec<u32>,
    m: usize,
}

/// Number of unordered vertex pairs, `n(n-1)/2`.
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Row-major index of the pair `(i, j)`, `i < j < n`.
#[inline]
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        Ok(Graph {
            n,
            bits: vec![0; words_for(pair_count(n))],
            degrees: vec![0; n],
            m: 0,
        })
    }

    /// Builds a graph from vertex pairs. Duplicate pairs (in either
    /// orientation) collapse to one edge.
    pub fn from_edge_list(n: usize, pairs: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut builder = Builder::new(n)?;
        for &(u, v) in pairs {
            builder.add_edge(u, v)?;
        }
        Ok(builder.finish())
    }

    /// Graph whose pair bits equal the low `n(n-1)/2` bits of `index`.
    /// This is the `index`-th graph of [`enumerate_labeled`].
    pub fn from_index(n: usize, index: u64) -> Result<Self, GraphError> {
        let pairs = pair_count(n);
        if pairs > 64 || (pairs < 64 && index >> pairs != 0) {
            return Err(GraphError::IndexOutOfRange { n, index });
        }
        let mut builder = Builder::new(n)?;
        let mut p = 0;
        for i in 0..n {
            for j in i + 1..n {
                if index >> p & 1 == 1 {
                    builder.set_pair(i, j, p);
                }
                p += 1;
            }
        }
        Ok(builder.finish())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edge count.
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn degree(&self, v: usize) -> u32 {
        self.degrees[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u == v || u >= self.n || v >= self.n {
            return false;
        }
        let (i, j) = if u < v { (u, v) } else { (v, u) };
        self.pair_bit(pair_index(self.n, i, j))
    }

    /// Bit `p` of the row-major pair field.
    pub fn pair_bit(&self, p: usize) -> bool {
        self.bits[p / 64] >> (p % 64) & 1 == 1
    }

    /// Edges as `(i, j)` with `i < j`, in row-major pair order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.n;
        (0..n)
            .flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
            .enumerate()
            .filter(|&(p, _)| self.pair_bit(p))
            .map(|(_, e)| e)
    }

    /// Enumeration index of this graph, when the pair field fits in 64 bits.
    pub fn index(&self) -> Option<u64> {
        (pair_count(self.n) <= 64).then(|| self.bits.first().copied().unwrap_or(0))
    }

    /// First Zagreb index, the sum of squared degrees.
    pub fn first_zagreb(&self) -> u64 {
        self.degrees.iter().map(|&d| u64::from(d) * u64::from(d)).sum()
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for (v, visited) in seen.iter_mut().enumerate() {
                if !*visited && self.has_edge(u, v) {
                    *visited = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.n
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("m", &self.m)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

fn words_for(bits: usize) -> usize {
    bits.div_ceil(64).max(1)
}

/// Mutable accumulator used by the constructors in this crate.
pub(crate) struct Builder {
    n: usize,
    bits: Vec<u64>,
    degrees: Vec<u32>,
    m: usize,
}

impl Builder {
    pub(crate) fn new(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        Ok(Builder {
            n,
            bits: vec![0; words_for(pair_count(n))],
            degrees: vec![0; n],
            m: 0,
        })
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.n;
        for w in [u, v] {
            if w >= n {
                return Err(GraphError::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        let (i, j) = if u < v { (u, v) } else { (v, u) };
        self.set_pair(i, j, pair_index(n, i, j));
        Ok(())
    }

    /// Sets pair `p = (i, j)`; no-op when already present.
    pub(crate) fn set_pair(&mut self, i: usize, j: usize, p: usize) {
        let (word, mask) = (p / 64, 1u64 << (p % 64));
        if self.bits[word] & mask == 0 {
            self.bits[word] |= mask;
            self.degrees[i] += 1;
            self.degrees[j] += 1;
            self.m += 1;
        }
    }

    pub(crate) fn finish(self) -> Graph {
        Graph {
            n: self.n,
            bits: self.bits,
            degrees: self.degrees,
            m: self.m,
        }
    }
}

/// Named graph families with closed-form Laplacian spectra.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Complete,
    /// `K_{1,n-1}` centred on vertex 0.
    Star,
    Path,
    Cycle,
}

impl std::str::FromStr for Family {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "complete" => Ok(Family::Complete),
            "star" => Ok(Family::Star),
            "path" => Ok(Family::Path),
            "cycle" => Ok(Family::Cycle),
            other => Err(GraphError::UnknownFamily(other.to_string())),
        }
    }
}

pub fn family(kind: Family, n: usize) -> Result<Graph, GraphError> {
    let mut b = Builder::new(n)?;
    match kind {
        Family::Complete => {
            for i in 0..n {
                for j in i + 1..n {
                    b.add_edge(i, j)?;
                }
            }
        }
        Family::Star => {
            for v in 1..n {
                b.add_edge(0, v)?;
            }
        }
        Family::Path => {
            for v in 1..n {
                b.add_edge(v - 1, v)?;
            }
        }
        Family::Cycle => {
            if n < 3 {
                return Err(GraphError::CycleTooSmall(n));
            }
            for v in 1..n {
                b.add_edge(v - 1, v)?;
            }
            b.add_edge(n - 1, 0)?;
        }
    }
    Ok(b.finish())
}

/// Uniform sample of `m` edges out of the `n(n-1)/2` possible pairs.
///
/// The generator is ChaCha8 seeded with `seed_from_u64(seed)`. A partial
/// Fisher–Yates shuffle over the row-major pair indices picks the edges:
/// for `i in 0..m`, swap slot `i` with a slot drawn uniformly from `i..N`
/// using Lemire's multiply-and-reject reduction of `next_u64`. Both the
/// stream and the reduction are fixed, so `(n, m, seed)` names one graph on
/// every platform.
pub fn random_gnm(n: usize, m: usize, seed: u64) -> Result<Graph, GraphError> {
    let total = pair_count(n);
    if n == 0 {
        return Err(GraphError::NoVertices);
    }
    if m > total {
        return Err(GraphError::TooManyEdges { n, m, max: total });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut slots: Vec<usize> = (0..total).collect();
    for i in 0..m {
        let j = i + bounded(&mut rng, (total - i) as u64) as usize;
        slots.swap(i, j);
    }

    // Map chosen row-major indices back to (i, j).
    let mut rows = Vec::with_capacity(n);
    let mut start = 0;
    for i in 0..n {
        rows.push(start);
        start += n - i - 1;
    }
    let mut b = Builder::new(n)?;
    for &p in &slots[..m] {
        let i = rows.partition_point(|&s| s <= p) - 1;
        let j = i + 1 + (p - rows[i]);
        b.set_pair(i, j, p);
    }
    Ok(b.finish())
}

/// Uniform integer in `0..range` (Lemire, unbiased).
fn bounded(rng: &mut impl RngCore, range: u64) -> u64 {
    debug_assert!(range > 0);
    let threshold = range.wrapping_neg() % range;
    loop {
        let product = u128::from(rng.next_u64()) * u128::from(range);
        if (product as u64) >= threshold {
            return (product >> 64) as u64;
        }
    }
}

/// Every labeled graph on `n` vertices, ordered by pair-field value.
pub fn enumerate_labeled(n: usize) -> Result<LabeledGraphs, GraphError> {
    let total = labeled_count(n)?;
    LabeledGraphs::range(n, 0..total)
}

/// `2^(n(n-1)/2)` for `1 <= n <= EXHAUSTIVE_CAP`.
pub fn labeled_count(n: usize) -> Result<u64, GraphError> {
    if n == 0 {
        return Err(GraphError::NoVertices);
    }
    if n > EXHAUSTIVE_CAP {
        return Err(GraphError::ExhaustiveCap { n, cap: EXHAUSTIVE_CAP });
    }
    Ok(1u64 << pair_count(n))
}

/// Iterator over a contiguous range of labeled-graph indices. Disjoint
/// ranges may be consumed independently by separate workers.
#[derive(Clone, Debug)]
pub struct LabeledGraphs {
    n: usize,
    next: u64,
    end: u64,
}

impl LabeledGraphs {
    pub fn range(n: usize, range: std::ops::Range<u64>) -> Result<Self, GraphError> {
        let total = labeled_count(n)?;
        if range.end > total || range.start > range.end {
            return Err(GraphError::IndexOutOfRange { n, index: range.end });
        }
        Ok(LabeledGraphs {
            n,
            next: range.start,
            end: range.end,
        })
    }
}

impl Iterator for LabeledGraphs {
    type Item = (u64, Graph);

    fn next(&mut self) -> Option<Self::Item> {
        if self.next >= self.end {
            return None;
        }
        let index = self.next;
        self.next += 1;
        let g = Graph::from_index(self.n, index).expect("index checked against range");
        Some((index, g))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for LabeledGraphs {}
