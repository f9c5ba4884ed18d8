//! Subgraph isomorphism by backtracking: map the pattern's vertices 0..h-1
//! in order onto distinct host vertices, pruning on adjacency (and on
//! non-adjacency for induced searches). Candidates are tried in ascending
//! host-vertex order, so the returned witness is deterministic and
//! lexicographically first.

use crate::graph::Graph;

/// Find H inside G; `induced` additionally forbids extra edges among the
/// image. Returns the injective map (pattern vertex i ↦ map[i]) if found.
pub fn subgraph_search(g: &Graph, h: &Graph, induced: bool) -> Option<Vec<usize>> {
    if h.n() > g.n() {
        return None;
    }
    let mut map: Vec<usize> = Vec::with_capacity(h.n());
    let mut used = vec![false; g.n()];
    if extend(g, h, induced, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

fn extend(g: &Graph, h: &Graph, induced: bool, map: &mut Vec<usize>, used: &mut [bool]) -> bool {
    let i = map.len();
    if i == h.n() {
        return true;
    }
    'cand: for cand in 0..g.n() {
        if used[cand] {
            continue;
        }
        for j in 0..i {
            let need = h.has_edge(i, j);
            let have = g.has_edge(cand, map[j]);
            if (need && !have) || (induced && !need && have) {
                continue 'cand;
            }
        }
        map.push(cand);
        used[cand] = true;
        if extend(g, h, induced, map, used) {
            return true;
        }
        map.pop();
        used[cand] = false;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;
    use crate::constructions::{c5hat, cycle};

    #[test]
    fn c5hat_contains_itself_induced() {
        let g = c5hat();
        assert_eq!(subgraph_search(&g, &g, true), Some(vec![0, 1, 2, 3, 4, 5]));
    }

    #[test]
    fn c5hat_contains_outer_c5() {
        let g = c5hat();
        let found = subgraph_search(&g, &cycle(5), false).unwrap();
        assert_eq!(found, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn image_induces_pattern() {
        let g = crate::constructions::generalized_petersen(5, 2).unwrap();
        let h = cycle(5);
        let map = subgraph_search(&g, &h, true).unwrap();
        let image = g.induced_subgraph(&map).unwrap();
        assert!(is_isomorphic(&image, &h));
    }

    #[test]
    fn absent_patterns() {
        // Petersen graph is triangle- and C4-free
        let g = crate::constructions::generalized_petersen(5, 2).unwrap();
        assert_eq!(subgraph_search(&g, &crate::constructions::complete(3), false), None);
        assert_eq!(subgraph_search(&g, &cycle(4), true), None);
        // pattern larger than host
        assert_eq!(subgraph_search(&cycle(4), &cycle(5), false), None);
    }
}
