//! Isomorph-free exhaustive generation by canonical augmentation: extend each
//! n-vertex representative with one new vertex in every possible way, then
//! deduplicate by canonical certificate. For n ≤ 10 the certificate fits a
//! single u64 (upper triangle ≤ 45 bits), so levels are just sets of words.

use crate::canon::{canonical_cert, cert_to_graph};
use crate::error::{Error, Result};
use crate::graph::Graph;
use rayon::prelude::*;
use std::collections::HashSet;

pub const ENUMERATION_SIZE_BOUND: usize = 10;

/// All graphs on exactly n vertices up to isomorphism, canonically labeled,
/// in a deterministic (certificate-sorted) order.
pub fn enumerate_graphs(n: usize, connected_only: bool) -> Result<Vec<Graph>> {
    if n == 0 || n > ENUMERATION_SIZE_BOUND {
        return Err(Error::SizeBound {
            n,
            limit: ENUMERATION_SIZE_BOUND,
        });
    }
    let mut certs: Vec<u64> = vec![0]; // the single 1-vertex graph
    for k in 1..n {
        let next: HashSet<u64> = certs
            .par_iter()
            .flat_map_iter(|&c| {
                let base = cert_to_graph(k, &[c]);
                let mut out = Vec::with_capacity(1 << k);
                for mask in 0u32..1 << k {
                    let g = extend(&base, mask);
                    out.push(canonical_cert(&g)[0]);
                }
                out
            })
            .collect();
        certs = next.into_iter().collect();
        certs.sort_unstable();
    }
    let graphs: Vec<Graph> = certs
        .into_iter()
        .map(|c| cert_to_graph(n, &[c]))
        .filter(|g| !connected_only || g.is_connected())
        .collect();
    Ok(graphs)
}

/// Add vertex k to a k-vertex graph, joined to the vertices in `mask`.
fn extend(base: &Graph, mask: u32) -> Graph {
    let k = base.n();
    let mut g = Graph::edgeless(k + 1);
    for (u, v) in base.edges() {
        g.add_edge(u, v);
    }
    for v in 0..k {
        if mask >> v & 1 == 1 {
            g.add_edge(v, k);
        }
    }
    g
}
