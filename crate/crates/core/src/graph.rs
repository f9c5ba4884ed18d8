//! Labeled simple graphs over vertex ids 0..n-1, stored as per-vertex bitset
//! rows so that the metamour operator and relation squaring are word-parallel.
//!
//! Equality of two `Graph` values is labeled equality (same n, identical
//! adjacency), which is the contract for "metamour period". Isomorphism is a
//! separate operation in [`crate::canon`].

use crate::error::{Error, Result};
use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

/// Distance in a possibly disconnected graph. `Infinite` occurs exactly for
/// pairs in different connected components; it is a dedicated variant, never a
/// sentinel integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ExtendedDistance {
    Finite(u32),
    Infinite,
}

impl ExtendedDistance {
    pub fn is_finite(self) -> bool {
        matches!(self, ExtendedDistance::Finite(_))
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            ExtendedDistance::Finite(d) => Some(d),
            ExtendedDistance::Infinite => None,
        }
    }
}

impl std::fmt::Display for ExtendedDistance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ExtendedDistance::Finite(d) => write!(f, "{d}"),
            ExtendedDistance::Infinite => write!(f, "inf"),
        }
    }
}

/// Whether [`Graph::combine`] takes a disjoint union or additionally inserts
/// all cross edges (the join).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CombineMode {
    Union,
    Join,
}

/// Immutable labeled simple graph. Adjacency is symmetric and irreflexive by
/// construction; every mutating helper is private to this module.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    /// n rows of `words` u64 words each; bit v of row u is the edge uv.
    bits: Vec<u64>,
}

fn words_for(n: usize) -> usize {
    n.div_ceil(64).max(1)
}

impl Graph {
    /// Edgeless graph on n vertices (n = 0 allowed).
    pub fn edgeless(n: usize) -> Graph {
        let words = words_for(n);
        Graph {
            n,
            words,
            bits: vec![0; n.max(1) * words],
        }
    }

    /// Build from an edge list, deduplicating pairs. Rejects self-loops and
    /// out-of-range vertices.
    pub fn build(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::edgeless(n);
        for &(x, y) in edges {
            if x >= n {
                return Err(Error::VertexOutOfRange { vertex: x, n });
            }
            if y >= n {
                return Err(Error::VertexOutOfRange { vertex: y, n });
            }
            if x == y {
                return Err(Error::SelfLoop(x));
            }
            g.add_edge(x, y);
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, x: usize, y: usize) {
        debug_assert!(x != y && x < self.n && y < self.n);
        self.bits[x * self.words + y / 64] |= 1 << (y % 64);
        self.bits[y * self.words + x / 64] |= 1 << (x % 64);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub(crate) fn words(&self) -> usize {
        self.words
    }

    pub fn has_edge(&self, x: usize, y: usize) -> bool {
        debug_assert!(x < self.n && y < self.n);
        self.bits[x * self.words + y / 64] >> (y % 64) & 1 == 1
    }

    /// Bitset row of vertex x.
    pub fn row(&self, x: usize) -> &[u64] {
        &self.bits[x * self.words..(x + 1) * self.words]
    }

    pub fn degree(&self, x: usize) -> usize {
        self.row(x).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges as ordered pairs (x, y) with x < y, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for x in 0..self.n {
            for y in (x + 1)..self.n {
                if self.has_edge(x, y) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    pub fn neighbors(&self, x: usize) -> Vec<usize> {
        (0..self.n).filter(|&y| self.has_edge(x, y)).collect()
    }

    /// Complement: edge xy iff self lacks it, for all distinct x, y.
    pub fn complement(&self) -> Graph {
        let mut g = Graph::edgeless(self.n);
        for x in 0..self.n {
            let (dst, src) = (&mut g.bits[x * self.words..(x + 1) * self.words], self.row(x));
            for w in 0..self.words {
                dst[w] = !src[w];
            }
            // clear the diagonal bit and the padding past n
            dst[x / 64] &= !(1 << (x % 64));
            mask_tail(dst, self.n);
        }
        g
    }

    /// Disjoint union or join; vertices of `other` are shifted by self.n.
    pub fn combine(&self, other: &Graph, mode: CombineMode) -> Graph {
        let n = self.n + other.n;
        let mut g = Graph::edgeless(n);
        for (x, y) in self.edges() {
            g.add_edge(x, y);
        }
        for (x, y) in other.edges() {
            g.add_edge(self.n + x, self.n + y);
        }
        if mode == CombineMode::Join {
            for x in 0..self.n {
                for y in 0..other.n {
                    g.add_edge(x, self.n + y);
                }
            }
        }
        g
    }

    /// Induced subgraph on S; vertices relabeled 0..|S|-1 in ascending
    /// original order. Duplicates in S are ignored.
    pub fn induced_subgraph(&self, s: &[usize]) -> Result<Graph> {
        let mut sel: Vec<usize> = s.to_vec();
        sel.sort_unstable();
        sel.dedup();
        if let Some(&v) = sel.iter().find(|&&v| v >= self.n) {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        let mut g = Graph::edgeless(sel.len());
        for i in 0..sel.len() {
            for j in (i + 1)..sel.len() {
                if self.has_edge(sel[i], sel[j]) {
                    g.add_edge(i, j);
                }
            }
        }
        Ok(g)
    }

    /// BFS distances from one source.
    pub fn bfs_distances(&self, source: usize) -> Vec<ExtendedDistance> {
        let mut dist = vec![ExtendedDistance::Infinite; self.n];
        let words = self.words;
        let mut visited = vec![0u64; words];
        let mut frontier = vec![0u64; words];
        visited[source / 64] |= 1 << (source % 64);
        frontier[source / 64] |= 1 << (source % 64);
        dist[source] = ExtendedDistance::Finite(0);
        let mut d = 0u32;
        loop {
            // next frontier = union of rows of frontier vertices, minus visited
            let mut next = vec![0u64; words];
            for v in BitIter::new(&frontier) {
                for (nw, rw) in next.iter_mut().zip(self.row(v)) {
                    *nw |= rw;
                }
            }
            for w in 0..words {
                next[w] &= !visited[w];
            }
            if next.iter().all(|&w| w == 0) {
                break;
            }
            d += 1;
            for v in BitIter::new(&next) {
                dist[v] = ExtendedDistance::Finite(d);
                visited[v / 64] |= 1 << (v % 64);
            }
            frontier = next;
        }
        dist
    }

    /// All-pairs shortest paths (row-major n*n).
    pub fn distance_matrix(&self) -> Vec<ExtendedDistance> {
        let mut m = Vec::with_capacity(self.n * self.n);
        for v in 0..self.n {
            m.extend(self.bfs_distances(v));
        }
        m
    }

    pub fn diameter(&self) -> ExtendedDistance {
        if self.n == 0 {
            return ExtendedDistance::Finite(0);
        }
        let mut best = ExtendedDistance::Finite(0);
        for v in 0..self.n {
            for d in self.bfs_distances(v) {
                best = best.max(d);
                if best == ExtendedDistance::Infinite {
                    return best;
                }
            }
        }
        best
    }

    /// Partition into maximal connected vertex sets, each ascending, ordered
    /// by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for v in 0..self.n {
            if seen[v] {
                continue;
            }
            let comp: Vec<usize> = self
                .bfs_distances(v)
                .into_iter()
                .enumerate()
                .filter(|(_, d)| d.is_finite())
                .map(|(u, _)| u)
                .collect();
            for &u in &comp {
                seen[u] = true;
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.connected_components().len() == 1
    }

    /// The metamour graph M(G): edge xy iff d_G(x,y) = 2, i.e. x and y are
    /// non-adjacent and share a neighbor. Word-parallel: OR the rows of x's
    /// neighbors, then mask out x, its closed neighborhood being excluded by
    /// the non-adjacency mask.
    pub fn metamour(&self) -> Graph {
        let words = self.words;
        let mut g = Graph::edgeless(self.n);
        let mut reach2 = vec![0u64; words];
        for x in 0..self.n {
            reach2.iter_mut().for_each(|w| *w = 0);
            for v in BitIter::new(self.row(x)) {
                for (rw, nw) in reach2.iter_mut().zip(self.row(v)) {
                    *rw |= nw;
                }
            }
            let row_x = self.row(x);
            let dst = &mut g.bits[x * self.words..(x + 1) * self.words];
            for w in 0..words {
                dst[w] = reach2[w] & !row_x[w];
            }
            dst[x / 64] &= !(1 << (x % 64));
            mask_tail(dst, self.n);
        }
        g
    }

    /// Stable adjacency encoding used as a hash/orbit key.
    pub(crate) fn raw_bits(&self) -> &[u64] {
        &self.bits
    }
}

/// Zero out the bits at positions >= n of a row (padding words).
fn mask_tail(row: &mut [u64], n: usize) {
    if n % 64 != 0 {
        let last = (n.max(1) - 1) / 64;
        for w in row.iter_mut().skip(last + 1) {
            *w = 0;
        }
        row[last] &= (1u64 << (n % 64)) - 1;
    }
}

/// Iterator over set bit positions of a bitset slice.
pub(crate) struct BitIter<'a> {
    words: &'a [u64],
    word_idx: usize,
    current: u64,
}

impl<'a> BitIter<'a> {
    pub(crate) fn new(words: &'a [u64]) -> Self {
        BitIter {
            words,
            word_idx: 0,
            current: if words.is_empty() { 0 } else { words[0] },
        }
    }
}

impl Iterator for BitIter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.current == 0 {
            self.word_idx += 1;
            if self.word_idx >= self.words.len() {
                return None;
            }
            self.current = self.words[self.word_idx];
        }
        let bit = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some(self.word_idx * 64 + bit)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

// Serialized as vertex count + edge list; the CLI layers graph6 on top.
impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Graph", 2)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("edges", &self.edges())?;
        s.end()
    }
}
