//! Builders for the graph families under study, with documented deterministic
//! vertex numbering. All constructors are pure: equal inputs give bitwise-
//! equal graphs.

use crate::error::{Error, Result};
use crate::graph::{CombineMode, Graph};

/// Basic families: consecutive numbering for cycles/paths; `C5Hat` is a
/// 5-cycle 0..4 plus apex 5 adjacent to the adjacent pair {0, 1}.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Primitive {
    Cycle,
    Path,
    Complete,
    Edgeless,
    C5Hat,
}

pub fn primitive(kind: Primitive, n: usize) -> Result<Graph> {
    match kind {
        Primitive::Cycle => {
            if n < 3 {
                return Err(Error::InvalidParameter(format!(
                    "cycle needs n >= 3, got {n}"
                )));
            }
            Graph::build(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>())
        }
        Primitive::Path => Graph::build(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>()),
        Primitive::Complete => {
            let mut edges = Vec::new();
            for i in 0..n {
                for j in (i + 1)..n {
                    edges.push((i, j));
                }
            }
            Graph::build(n, &edges)
        }
        Primitive::Edgeless => Ok(Graph::edgeless(n)),
        Primitive::C5Hat => Graph::build(
            6,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 0), (5, 1)],
        ),
    }
}

pub fn cycle(n: usize) -> Graph {
    primitive(Primitive::Cycle, n).expect("n >= 3")
}

pub fn complete(n: usize) -> Graph {
    primitive(Primitive::Complete, n).expect("infallible")
}

pub fn c5hat() -> Graph {
    primitive(Primitive::C5Hat, 0).expect("infallible")
}

fn smallest_prime_factor(q: u64) -> u64 {
    let mut p = 2;
    while p * p <= q {
        if q % p == 0 {
            return p;
        }
        p += 1;
    }
    q
}

/// Paley graph on a prime field: vertices 0..q-1, edge xy iff (x - y) mod q is
/// a nonzero quadratic residue. Requires q prime, q ≡ 1 (mod 4); proper prime
/// powers are unsupported (no extension-field arithmetic).
pub fn paley(q: u64) -> Result<Graph> {
    if q < 2 {
        return Err(Error::NotPrime(q));
    }
    let p = smallest_prime_factor(q);
    if p != q {
        // distinguish proper prime powers from other composites
        let mut rest = q;
        while rest % p == 0 {
            rest /= p;
        }
        return Err(if rest == 1 {
            Error::UnsupportedField(q)
        } else {
            Error::NotPrime(q)
        });
    }
    if q % 4 != 1 {
        return Err(Error::BadResidue(q));
    }
    let mut residues = vec![false; q as usize];
    for x in 1..q {
        residues[((x * x) % q) as usize] = true;
    }
    let mut g = Graph::edgeless(q as usize);
    for x in 0..q as usize {
        for y in (x + 1)..q as usize {
            if residues[y - x] {
                g.add_edge(x, y);
            }
        }
    }
    Ok(g)
}

/// Vertex layout of a generalized Petersen graph G(m, j): exterior cycle
/// vertices v_i at ids 0..m-1, interior vertices u_i at ids m..2m-1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PetersenSpec {
    pub m: usize,
    pub j: usize,
}

impl PetersenSpec {
    pub fn new(m: usize, j: usize) -> Result<PetersenSpec> {
        if m < 5 || j < 1 || 2 * j >= m {
            return Err(Error::InvalidParameter(format!(
                "generalized Petersen graph needs m >= 5 and 1 <= j < m/2, got ({m}, {j})"
            )));
        }
        Ok(PetersenSpec { m, j })
    }

    pub fn exterior(&self, i: usize) -> usize {
        i % self.m
    }

    pub fn interior(&self, i: usize) -> usize {
        self.m + i % self.m
    }
}

/// Edges v_i v_{i+1}, v_i u_i, u_i u_{i+j}: 2m vertices, 3m edges, 3-regular.
pub fn generalized_petersen(m: usize, j: usize) -> Result<Graph> {
    let spec = PetersenSpec::new(m, j)?;
    let mut edges = Vec::with_capacity(3 * m);
    for i in 0..m {
        edges.push((spec.exterior(i), spec.exterior(i + 1)));
        edges.push((spec.exterior(i), spec.interior(i)));
        edges.push((spec.interior(i), spec.interior(i + j)));
    }
    Graph::build(2 * m, &edges)
}

/// Complete m-ary tree of height h: root id 0, children numbered breadth-
/// first (children of v are m*v+1 .. m*v+m), (m^{h+1}-1)/(m-1) vertices.
pub fn mary_tree(h: u32, m: usize) -> Result<Graph> {
    if m < 2 {
        return Err(Error::InvalidParameter(format!(
            "m-ary tree needs m >= 2, got {m}"
        )));
    }
    if h < 1 {
        return Err(Error::InvalidParameter("tree height must be >= 1".into()));
    }
    let n = (m.pow(h + 1) - 1) / (m - 1);
    let mut g = Graph::edgeless(n);
    for v in 1..n {
        g.add_edge(v, (v - 1) / m);
    }
    Ok(g)
}

/// Block layout of a join along a base graph: block for base vertex v starts
/// at `offsets[v]` in the joined result.
#[derive(Debug, Clone)]
pub struct BlockAssignment {
    pub base: Graph,
    pub blocks: Vec<Graph>,
    pub offsets: Vec<usize>,
}

impl BlockAssignment {
    pub fn new(base: Graph, blocks: Vec<Graph>) -> Result<BlockAssignment> {
        if blocks.len() != base.n() {
            return Err(Error::BlockCountMismatch {
                expected: base.n(),
                got: blocks.len(),
            });
        }
        let mut offsets = Vec::with_capacity(blocks.len());
        let mut total = 0;
        for b in &blocks {
            offsets.push(total);
            total += b.n();
        }
        Ok(BlockAssignment {
            base,
            blocks,
            offsets,
        })
    }

    pub fn total_size(&self) -> usize {
        self.offsets.last().map_or(0, |&o| o) + self.blocks.last().map_or(0, |b| b.n())
    }

    pub fn build(&self) -> Graph {
        let mut g = Graph::edgeless(self.total_size());
        for (v, block) in self.blocks.iter().enumerate() {
            let off = self.offsets[v];
            for (x, y) in block.edges() {
                g.add_edge(off + x, off + y);
            }
        }
        for (v, w) in self.base.edges() {
            for x in 0..self.blocks[v].n() {
                for y in 0..self.blocks[w].n() {
                    g.add_edge(self.offsets[v] + x, self.offsets[w] + y);
                }
            }
        }
        g
    }
}

/// Join of `blocks` along `base`: one block per base vertex (concatenated in
/// base-vertex order), all cross edges between blocks of adjacent base
/// vertices.
pub fn join_along(base: &Graph, blocks: &[Graph]) -> Result<Graph> {
    Ok(BlockAssignment::new(base.clone(), blocks.to_vec())?.build())
}

/// Windmill Wd(m, m): m copies of K_m sharing one common vertex (id 0);
/// blade i occupies ids 1+i(m-1) .. (i+1)(m-1).
pub fn windmill(m: usize) -> Result<Graph> {
    if m < 2 {
        return Err(Error::InvalidParameter(format!(
            "windmill needs m >= 2, got {m}"
        )));
    }
    let n = m * (m - 1) + 1;
    let mut g = Graph::edgeless(n);
    for blade in 0..m {
        let start = 1 + blade * (m - 1);
        for x in start..start + (m - 1) {
            g.add_edge(0, x);
            for y in (x + 1)..start + (m - 1) {
                g.add_edge(x, y);
            }
        }
    }
    Ok(g)
}

/// Join of m copies of G.
pub fn join_power(g: &Graph, m: usize) -> Result<Graph> {
    if m < 2 {
        return Err(Error::InvalidParameter(format!(
            "join power needs m >= 2, got {m}"
        )));
    }
    let mut out = g.clone();
    for _ in 1..m {
        out = out.combine(g, CombineMode::Join);
    }
    Ok(out)
}

/// Embed G with prescribed even metamour period k: join along C_n with block
/// 0 = G and singleton blocks elsewhere, n = 5 for k = 2 and n = 2^k - 1 for
/// k ≥ 4 (so the cycle's own period μ(n) equals k). G sits induced at offset
/// 0; |V| = |V(G)| + 4 for k = 2 and |V(G)| + 2^k - 2 for k ≥ 4.
pub fn embed_with_period(g: &Graph, k: u32) -> Result<Graph> {
    if k < 2 || k % 2 != 0 {
        return Err(Error::InvalidParameter(format!(
            "period embedding needs even k >= 2, got {k}"
        )));
    }
    if g.n() == 0 {
        return Err(Error::InvalidParameter("input graph must be nonempty".into()));
    }
    let n = if k == 2 { 5 } else { (1usize << k) - 1 };
    let mut blocks = vec![Graph::edgeless(1); n];
    blocks[0] = g.clone();
    join_along(&cycle(n), &blocks)
}

/// Self-complementary embedding: join_along(C₅, {K₁, G, Ḡ, Ḡ, G}) on
/// 4|V(G)| + 1 vertices, with M(G') = complement(G') ≅ G'. G sits induced at
/// offset 1 of the block layout; the leading singleton keeps the hub fixed
/// under the complementing isomorphism.
pub fn embed_selfcomplementary(g: &Graph) -> Result<Graph> {
    let gc = g.complement();
    join_along(
        &cycle(5),
        &[
            Graph::edgeless(1),
            g.clone(),
            gc.clone(),
            gc,
            g.clone(),
        ],
    )
}

/// Block sizes used by [`embed_pseudo_period`]: the lexicographically
/// smallest strictly increasing sequence of cnt sizes avoiding `forbidden`.
fn distinct_sizes(cnt: usize, forbidden: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(cnt);
    let mut s = 1;
    while out.len() < cnt {
        if s != forbidden {
            out.push(s);
        }
        s += 1;
    }
    out
}

/// Embed G with prescribed even pseudo-metamour period k: join along
/// C_{2^k+1} with block 0 = G and edgeless blocks of strictly increasing,
/// pairwise-distinct sizes all different from |V(G)| (smallest admissible
/// sizes). Distinct block sizes prevent M^i(G') ≅ G' for 0 < i < k.
pub fn embed_pseudo_period(g: &Graph, k: u32) -> Result<Graph> {
    if k < 2 || k % 2 != 0 {
        return Err(Error::InvalidParameter(format!(
            "pseudo-period embedding needs even k >= 2, got {k}"
        )));
    }
    let n = (1usize << k) + 1;
    let mut blocks = Vec::with_capacity(n);
    blocks.push(g.clone());
    for s in distinct_sizes(n - 1, g.n()) {
        blocks.push(Graph::edgeless(s));
    }
    join_along(&cycle(n), &blocks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;
    use crate::graph::ExtendedDistance;

    #[test]
    fn primitives() {
        let c5 = cycle(5);
        assert_eq!((c5.n(), c5.edge_count()), (5, 5));
        assert!(matches!(
            primitive(Primitive::Cycle, 2),
            Err(Error::InvalidParameter(_))
        ));
        let hat = c5hat();
        assert_eq!((hat.n(), hat.edge_count()), (6, 7));
        let mut degs: Vec<_> = (0..6).map(|v| hat.degree(v)).collect();
        degs.sort_unstable();
        assert_eq!(degs, vec![2, 2, 2, 2, 3, 3]);
        assert_eq!(Graph::edgeless(3).edge_count(), 0);
    }

    #[test]
    fn paley_5_is_c5() {
        assert!(is_isomorphic(&paley(5).unwrap(), &cycle(5)));
    }

    #[test]
    fn paley_13_is_6_regular_metamour_complementary() {
        let g = paley(13).unwrap();
        assert!((0..13).all(|v| g.degree(v) == 6));
        assert_eq!(g.diameter(), ExtendedDistance::Finite(2));
        assert_eq!(g.metamour(), g.complement());
    }

    #[test]
    fn paley_rejections() {
        assert_eq!(paley(7), Err(Error::BadResidue(7)));
        assert_eq!(paley(9), Err(Error::UnsupportedField(9)));
        assert_eq!(paley(15), Err(Error::NotPrime(15)));
    }

    #[test]
    fn petersen_5_2_shape() {
        let g = generalized_petersen(5, 2).unwrap();
        assert_eq!((g.n(), g.edge_count()), (10, 15));
        assert!((0..10).all(|v| g.degree(v) == 3));
    }

    #[test]
    fn petersen_6_2_interior_is_two_triangles() {
        let g = generalized_petersen(6, 2).unwrap();
        let interior = g.induced_subgraph(&[6, 7, 8, 9, 10, 11]).unwrap();
        let comps = interior.connected_components();
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.len() == 3));
        assert_eq!(interior.edge_count(), 6);
    }

    #[test]
    fn petersen_rejects_bad_params() {
        assert!(generalized_petersen(5, 3).is_err());
        assert!(generalized_petersen(4, 1).is_err());
        assert!(generalized_petersen(6, 3).is_err());
    }

    #[test]
    fn petersen_c5_induced() {
        // v_i, v_{i+1}, v_{i+2}, u_{i+2}, u_i induce a 5-cycle in G(m,2)
        let g = generalized_petersen(5, 2).unwrap();
        let sub = g.induced_subgraph(&[0, 1, 2, 7, 5]).unwrap();
        assert!(is_isomorphic(&sub, &cycle(5)));
    }

    #[test]
    fn tree_sizes() {
        assert_eq!(mary_tree(1, 3).unwrap().n(), 4);
        assert_eq!(mary_tree(2, 2).unwrap().n(), 7);
        assert_eq!(mary_tree(3, 2).unwrap().n(), 15);
        assert!(mary_tree(2, 1).is_err());
    }

    #[test]
    fn join_along_singletons_is_identity() {
        let base = cycle(5);
        let blocks = vec![Graph::edgeless(1); 5];
        assert_eq!(join_along(&base, &blocks).unwrap(), base);
    }

    #[test]
    fn dream_catcher_shape() {
        let blocks = vec![Graph::edgeless(2); 7];
        let g = join_along(&cycle(7), &blocks).unwrap();
        assert_eq!(g.n(), 14);
        assert!((0..14).all(|v| g.degree(v) == 4));
    }

    #[test]
    fn join_along_block_count_checked() {
        assert_eq!(
            join_along(&cycle(5), &vec![Graph::edgeless(1); 4]),
            Err(Error::BlockCountMismatch {
                expected: 5,
                got: 4
            })
        );
    }

    #[test]
    fn windmill_shapes() {
        let w2 = windmill(2).unwrap();
        assert!(is_isomorphic(
            &w2,
            &primitive(Primitive::Path, 3).unwrap()
        ));
        let w3 = windmill(3).unwrap();
        assert_eq!((w3.n(), w3.edge_count()), (7, 9));
    }

    #[test]
    fn join_power_of_edgeless2_is_c4() {
        let g = join_power(&Graph::edgeless(2), 2).unwrap();
        assert!(is_isomorphic(&g, &cycle(4)));
    }

    #[test]
    fn embed_with_period_shapes() {
        assert_eq!(
            embed_with_period(&Graph::edgeless(1), 2).unwrap(),
            cycle(5)
        );
        assert_eq!(embed_with_period(&complete(3), 2).unwrap().n(), 7);
        assert_eq!(embed_with_period(&complete(3), 4).unwrap().n(), 17);
        assert!(embed_with_period(&complete(3), 3).is_err());
    }

    #[test]
    fn embed_selfcomplementary_shapes() {
        assert_eq!(
            embed_selfcomplementary(&Graph::edgeless(1)).unwrap(),
            cycle(5)
        );
        let g = embed_selfcomplementary(&complete(2)).unwrap();
        assert_eq!(g.n(), 9);
        assert_eq!(g.metamour(), g.complement());
        assert!(is_isomorphic(&g, &g.complement()));
    }

    #[test]
    fn embed_pseudo_period_block_sizes() {
        let g = embed_pseudo_period(&complete(2), 2).unwrap();
        // blocks: K2 then edgeless of sizes 1, 3, 4, 5
        assert_eq!(g.n(), 2 + 1 + 3 + 4 + 5);
        assert_eq!(distinct_sizes(4, 2), vec![1, 3, 4, 5]);
        assert_eq!(distinct_sizes(3, 1), vec![2, 3, 4]);
    }
}
