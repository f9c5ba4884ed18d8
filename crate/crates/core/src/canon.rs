//! Canonical labeling by color refinement + individualization backtracking.
//!
//! The certificate is the lexicographically minimal upper-triangle bit string
//! of the relabeled adjacency matrix, minimized over the leaves of the
//! individualization-refinement tree. Automorphisms discovered at equal-
//! certificate leaves prune sibling branches (orbit pruning), which keeps
//! highly symmetric graphs (edgeless, complete, cycles) polynomial instead of
//! factorial — essential for the exhaustive enumerator.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Size bound for the public canonical-form operation.
pub const CANONICAL_SIZE_BOUND: usize = 16;

/// Total-order-comparable encoding of an isomorphism class (n ≤ 16).
/// Ordering is by vertex count, then by the canonical bit string.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    n: u16,
    bits: Vec<u64>,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// Stable byte encoding (big-endian words after the vertex count).
    pub fn bytes(&self) -> Vec<u8> {
        let mut out = vec![self.n as u8, (self.n >> 8) as u8];
        for w in &self.bits {
            out.extend_from_slice(&w.to_be_bytes());
        }
        out
    }

    /// Reconstruct the canonically labeled graph.
    pub fn to_graph(&self) -> Graph {
        cert_to_graph(self.n as usize, &self.bits)
    }
}

/// Canonical form of a graph on at most 16 vertices.
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    if g.n() > CANONICAL_SIZE_BOUND {
        return Err(Error::SizeBound {
            n: g.n(),
            limit: CANONICAL_SIZE_BOUND,
        });
    }
    Ok(CanonicalForm {
        n: g.n() as u16,
        bits: canonical_cert(g),
    })
}

/// True iff an edge-preserving bijection exists. Uses cheap invariants first,
/// then compares canonical certificates for small graphs; beyond the
/// canonical-form bound it runs a joint refinement/individualization search,
/// which stays fast on large graphs with big symmetric vertex classes where
/// the certificate minimization would branch exponentially.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut dg: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    let mut dh: Vec<usize> = (0..h.n()).map(|v| h.degree(v)).collect();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return false;
    }
    if g.n() <= CANONICAL_SIZE_BOUND {
        return canonical_cert(g) == canonical_cert(h);
    }
    let union = g.combine(h, crate::graph::CombineMode::Union);
    iso_backtrack(&union, g, h, vec![0u32; union.n()])
}

/// Backtracking isomorphism search on the disjoint union of g and h: refine
/// the joint coloring, require every class to be split evenly between the two
/// sides, individualize a matching pair from the first unmatched class, and
/// recurse. When every class holds exactly one vertex per side the induced
/// map is checked explicitly.
fn iso_backtrack(union: &Graph, g: &Graph, h: &Graph, mut colors: Vec<u32>) -> bool {
    let n = g.n();
    let classes = refine(union, &mut colors);
    let mut left = vec![0u32; classes];
    let mut right = vec![0u32; classes];
    for v in 0..n {
        left[colors[v] as usize] += 1;
    }
    for v in n..2 * n {
        right[colors[v] as usize] += 1;
    }
    if left != right {
        return false;
    }
    if left.iter().all(|&c| c == 1) {
        let mut map = vec![usize::MAX; n];
        for v in 0..n {
            for w in n..2 * n {
                if colors[w] == colors[v] {
                    map[v] = w - n;
                }
            }
        }
        return g
            .edges()
            .iter()
            .all(|&(u, v)| h.has_edge(map[u], map[v]))
            && g.edge_count() == h.edge_count();
    }
    let target = (0..classes as u32).find(|&c| left[c as usize] >= 2).unwrap();
    let v = (0..n).find(|&v| colors[v] == target).unwrap();
    for w in n..2 * n {
        if colors[w] != target {
            continue;
        }
        let mut child: Vec<u32> = colors.iter().map(|&c| c * 2).collect();
        child[v] += 1;
        child[w] += 1;
        if iso_backtrack(union, g, h, child) {
            return true;
        }
    }
    false
}

fn cert_words(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(64).max(1)
}

/// Upper-triangle bit positions in row-major order, stored MSB-first inside
/// each word so that comparing `Vec<u64>` slices equals comparing the bit
/// strings lexicographically.
fn cert_set_bit(bits: &mut [u64], pos: usize) {
    bits[pos / 64] |= 1 << (63 - pos % 64);
}

fn cert_get_bit(bits: &[u64], pos: usize) -> bool {
    bits[pos / 64] >> (63 - pos % 64) & 1 == 1
}

pub(crate) fn cert_to_graph(n: usize, bits: &[u64]) -> Graph {
    let mut g = Graph::edgeless(n);
    let mut pos = 0;
    for i in 0..n {
        for j in (i + 1)..n {
            if cert_get_bit(bits, pos) {
                g.add_edge(i, j);
            }
            pos += 1;
        }
    }
    g
}

/// Encode g under `perm` (perm[v] = canonical position of v).
fn encode_cert(g: &Graph, perm: &[usize]) -> Vec<u64> {
    let n = g.n();
    let mut bits = vec![0u64; cert_words(n)];
    for (u, v) in g.edges() {
        let (i, j) = {
            let (a, b) = (perm[u], perm[v]);
            (a.min(b), a.max(b))
        };
        // row-major upper-triangle index of (i, j)
        let pos = i * n - i * (i + 1) / 2 + (j - i - 1);
        cert_set_bit(&mut bits, pos);
    }
    bits
}

/// Full canonical certificate (works for any n; cost grows with symmetry and
/// refinement quality, adequate for the sizes this crate handles).
pub(crate) fn canonical_cert(g: &Graph) -> Vec<u64> {
    let n = g.n();
    if n <= 1 {
        return vec![0u64; cert_words(n)];
    }
    let mut s = Search {
        g,
        n,
        best: None,
        best_perm: Vec::new(),
        autos: Vec::new(),
        path: Vec::new(),
    };
    s.recurse(vec![0u32; n]);
    s.best.expect("at least one leaf")
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    best: Option<Vec<u64>>,
    best_perm: Vec<usize>,
    autos: Vec<Vec<usize>>,
    path: Vec<usize>,
}

impl Search<'_> {
    fn recurse(&mut self, mut colors: Vec<u32>) {
        let classes = refine(self.g, &mut colors);
        if classes == self.n {
            self.leaf(&colors);
            return;
        }
        // target cell: the first (lowest-rank) color with ≥ 2 vertices
        let target = (0..self.n as u32)
            .find(|&c| colors.iter().filter(|&&x| x == c).count() >= 2)
            .expect("non-discrete coloring has a repeated color");
        let cell: Vec<usize> = (0..self.n).filter(|&v| colors[v] == target).collect();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cell {
            if !tried.is_empty() && self.in_tried_orbit(v, &tried) {
                continue;
            }
            let mut child: Vec<u32> = colors.iter().map(|&c| c * 2).collect();
            child[v] += 1;
            self.path.push(v);
            self.recurse(child);
            self.path.pop();
            tried.push(v);
        }
    }

    fn leaf(&mut self, colors: &[u32]) {
        let perm: Vec<usize> = colors.iter().map(|&c| c as usize).collect();
        let cert = encode_cert(self.g, &perm);
        match &self.best {
            None => {
                self.best = Some(cert);
                self.best_perm = perm;
            }
            Some(best) if cert < *best => {
                self.best = Some(cert);
                self.best_perm = perm;
            }
            Some(best) if cert == *best => {
                // both perms relabel g to the same graph: their quotient is an
                // automorphism of g
                let mut inv_best = vec![0usize; self.n];
                for (v, &p) in self.best_perm.iter().enumerate() {
                    inv_best[p] = v;
                }
                let auto: Vec<usize> = perm.iter().map(|&p| inv_best[p]).collect();
                if auto.iter().enumerate().any(|(v, &w)| v != w) {
                    self.autos.push(auto);
                }
            }
            _ => {}
        }
    }

    /// Orbit pruning: v can be skipped if a known automorphism fixing the
    /// current path pointwise connects it to an already-explored sibling.
    fn in_tried_orbit(&self, v: usize, tried: &[usize]) -> bool {
        let mut uf: Vec<usize> = (0..self.n).collect();
        fn find(uf: &mut Vec<usize>, mut x: usize) -> usize {
            while uf[x] != x {
                uf[x] = uf[uf[x]];
                x = uf[x];
            }
            x
        }
        let mut any = false;
        for a in &self.autos {
            if self.path.iter().any(|&p| a[p] != p) {
                continue;
            }
            any = true;
            for x in 0..self.n {
                let (rx, ry) = (find(&mut uf, x), find(&mut uf, a[x]));
                if rx != ry {
                    uf[rx] = ry;
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut uf, v);
        tried.iter().any(|&t| find(&mut uf, t) == rv)
    }
}

/// One-dimensional Weisfeiler-Leman refinement with canonical color ranks.
/// Input colors must themselves be canonical (initially all zero; the
/// individualized branch encodes its choice into the colors). Returns the
/// number of color classes; colors are rewritten to ranks 0..classes-1.
fn refine(g: &Graph, colors: &mut Vec<u32>) -> usize {
    let n = g.n();
    let words = g.words();
    let mut distinct = {
        let mut c = colors.clone();
        c.sort_unstable();
        c.dedup();
        c.len()
    };
    loop {
        let k = (*colors.iter().max().unwrap() + 1) as usize;
        let mut masks = vec![0u64; k * words];
        for v in 0..n {
            masks[colors[v] as usize * words + v / 64] |= 1 << (v % 64);
        }
        // signature of v = (current color, #neighbors in each class)
        let sig_len = k + 1;
        let mut sigs = vec![0u32; n * sig_len];
        for v in 0..n {
            sigs[v * sig_len] = colors[v];
            let row = g.row(v);
            for c in 0..k {
                let mut cnt = 0u32;
                for w in 0..words {
                    cnt += (row[w] & masks[c * words + w]).count_ones();
                }
                sigs[v * sig_len + 1 + c] = cnt;
            }
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| {
            sigs[a * sig_len..(a + 1) * sig_len].cmp(&sigs[b * sig_len..(b + 1) * sig_len])
        });
        let mut rank = 0u32;
        let mut new_colors = vec![0u32; n];
        for i in 0..n {
            if i > 0
                && sigs[order[i] * sig_len..(order[i] + 1) * sig_len]
                    != sigs[order[i - 1] * sig_len..(order[i - 1] + 1) * sig_len]
            {
                rank += 1;
            }
            new_colors[order[i]] = rank;
        }
        *colors = new_colors;
        let new_distinct = rank as usize + 1;
        if new_distinct == distinct || new_distinct == n {
            return new_distinct;
        }
        distinct = new_distinct;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::CombineMode;

    fn cycle(n: usize) -> Graph {
        Graph::build(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::build(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn relabelings_of_c4_agree() {
        let a = Graph::build(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let b = Graph::build(4, &[(0, 2), (2, 1), (1, 3), (3, 0)]).unwrap();
        assert_eq!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
    }

    #[test]
    fn c4_vs_p4_differ() {
        assert_ne!(
            canonical_form(&cycle(4)).unwrap(),
            canonical_form(&path(4)).unwrap()
        );
    }

    #[test]
    fn all_labeled_4_vertex_graphs_give_11_forms() {
        // naive sweep over all 2^6 labeled graphs on 4 vertices
        let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        let mut forms = std::collections::HashSet::new();
        for mask in 0u32..64 {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::build(4, &edges).unwrap();
            forms.insert(canonical_form(&g).unwrap());
        }
        assert_eq!(forms.len(), 11);
    }

    #[test]
    fn size_bound_enforced() {
        let g = Graph::edgeless(17);
        assert_eq!(
            canonical_form(&g),
            Err(Error::SizeBound { n: 17, limit: 16 })
        );
    }

    #[test]
    fn canonical_form_decodes_to_isomorphic_graph() {
        let g = cycle(7);
        let h = canonical_form(&g).unwrap().to_graph();
        assert!(is_isomorphic(&g, &h));
    }

    #[test]
    fn c5_selfcomplementary() {
        let g = cycle(5);
        assert!(is_isomorphic(&g, &g.complement()));
    }

    #[test]
    fn c6_vs_two_triangles() {
        let t = Graph::build(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let tt = t.combine(&t, CombineMode::Union);
        assert!(!is_isomorphic(&cycle(6), &tt));
    }

    #[test]
    fn symmetric_graphs_fast() {
        // would be factorial without orbit pruning
        for g in [Graph::edgeless(16), Graph::edgeless(16).complement(), cycle(16)] {
            canonical_form(&g).unwrap();
        }
    }

    #[test]
    fn large_symmetric_blocks() {
        use crate::constructions::join_along;
        let blocks: Vec<Graph> = (1..=17).map(Graph::edgeless).collect();
        let g = join_along(&cycle(17), &blocks).unwrap();
        let mut rotated = blocks.clone();
        rotated.rotate_left(3);
        let r = join_along(&cycle(17), &rotated).unwrap();
        assert!(is_isomorphic(&g, &r));
        let mut scrambled = blocks.clone();
        scrambled.swap(2, 9);
        let s = join_along(&cycle(17), &scrambled).unwrap();
        assert!(!is_isomorphic(&g, &s));
    }

    #[test]
    fn large_n_isomorphism_path() {
        let g = cycle(40);
        // relabel by reversal
        let edges: Vec<_> = g.edges().iter().map(|&(u, v)| (39 - u, 39 - v)).collect();
        let h = Graph::build(40, &edges).unwrap();
        assert!(is_isomorphic(&g, &h));
        assert!(!is_isomorphic(&g, &path(40)));
    }
}
