//! 2-walks and fully minimal 2-walks.
//!
//! A 2-walk of length k is a walk w_0..w_{2^k} whose dyadic midpoint triples
//! are pairwise distinct and whose even-index base pairs w_{2j} w_{2(j+1)}
//! are non-adjacent. Existence satisfies the top-split recursion
//!   R_1(u,v) ⟺ ∃x ∉ {u,v}: ux, xv ∈ E and uv ∉ E,
//!   R_k(u,v) ⟺ ∃w ∉ {u,v}: R_{k-1}(u,w) ∧ R_{k-1}(w,v),
//! because gluing two length-(k-1) 2-walks at a shared endpoint distinct from
//! both ends re-creates exactly the defining conditions. Fully minimal
//! existence F_k adds ¬R_{k-1}(u,v) at every split. Relations are computed by
//! word-parallel squaring; the explicit walk enumerator is kept as the
//! independent oracle for E(M^k).

use crate::error::{Error, Result};
use crate::graph::Graph;

/// An explicit 2-walk: level k and the vertex sequence w_0..w_{2^k}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoWalk {
    pub level: u32,
    pub vertices: Vec<usize>,
}

impl TwoWalk {
    /// Check the raw defining conditions against a host graph: consecutive
    /// adjacency, dyadic triple distinctness, base non-adjacency. Vertex
    /// repetition across non-sibling spans is permitted.
    pub fn is_valid(&self, g: &Graph) -> bool {
        let k = self.level;
        let w = &self.vertices;
        if w.len() != (1usize << k) + 1 {
            return false;
        }
        if w.windows(2).any(|p| !g.has_edge(p[0], p[1])) {
            return false;
        }
        if k == 0 {
            return true; // a single edge; no triple or base conditions
        }
        for i in 0..k {
            let span = 1usize << i;
            for j in 0..(1usize << (k - i - 1)) {
                let (a, b, c) = (w[2 * j * span], w[(2 * j + 1) * span], w[2 * (j + 1) * span]);
                if a == b || b == c || a == c {
                    return false;
                }
            }
        }
        (0..(1usize << (k - 1))).all(|j| !g.has_edge(w[2 * j], w[2 * j + 2]))
    }
}

/// Per-level symmetric relations R_k (2-walk existence) and F_k (fully
/// minimal 2-walk existence) up to the saturation level, plus d₂ values.
/// Relations are stored as graphs (symmetric irreflexive boolean relations).
#[derive(Debug, Clone)]
pub struct FmRelation {
    pub graph: Graph,
    /// levels[i] = (R_{i+1}, F_{i+1})
    pub levels: Vec<(Graph, Graph)>,
    /// row-major n*n minimal levels; None where no 2-walk exists
    pub d2: Vec<Option<u32>>,
    /// true once the (R, F) state pair revisited an earlier level within the
    /// computed range (everything beyond is periodic)
    pub saturated: bool,
}

/// R_{k+1} from R_k: common-neighbor existence in the relation (no
/// non-adjacency condition at higher levels — that belongs to F only).
fn square_relation(r: &Graph) -> Graph {
    let n = r.n();
    let mut out = Graph::edgeless(n);
    for u in 0..n {
        for v in (u + 1)..n {
            if r.row(u).iter().zip(r.row(v)).any(|(a, b)| a & b != 0) {
                out.add_edge(u, v);
            }
        }
    }
    out
}

/// F_{k+1} from (F_k, R_k): F-common-neighbor existence minus R_k pairs.
fn square_fully_minimal(f: &Graph, r: &Graph) -> Graph {
    let n = f.n();
    let mut out = Graph::edgeless(n);
    for u in 0..n {
        for v in (u + 1)..n {
            if !r.has_edge(u, v)
                && f.row(u).iter().zip(f.row(v)).any(|(a, b)| a & b != 0)
            {
                out.add_edge(u, v);
            }
        }
    }
    out
}

impl FmRelation {
    /// Compute levels 1..=max_level, stopping early once the (R, F) state
    /// pair repeats (saturation: later levels replay the cycle).
    pub fn compute(g: &Graph, max_level: u32) -> FmRelation {
        let n = g.n();
        let r1 = g.metamour();
        let mut levels: Vec<(Graph, Graph)> = vec![(r1.clone(), r1)];
        let mut d2: Vec<Option<u32>> = vec![None; n * n];
        let mut saturated = false;
        let record = |d2: &mut Vec<Option<u32>>, r: &Graph, k: u32| {
            for (u, v) in r.edges() {
                for idx in [u * n + v, v * n + u] {
                    if d2[idx].is_none() {
                        d2[idx] = Some(k);
                    }
                }
            }
        };
        record(&mut d2, &levels[0].0, 1);
        while (levels.len() as u32) < max_level {
            let (r, f) = levels.last().unwrap();
            let next = (square_relation(r), square_fully_minimal(f, r));
            if levels.iter().any(|state| *state == next) {
                saturated = true;
                break;
            }
            record(&mut d2, &next.0, levels.len() as u32 + 1);
            levels.push(next);
        }
        // state space is finite, so an exhausted bound without a repeat just
        // means the bound was small; callers see that via `saturated`
        if !saturated && (levels.len() as u32) >= max_level {
            // check whether the *next* state would close the cycle anyway
            let (r, f) = levels.last().unwrap();
            let next = (square_relation(r), square_fully_minimal(f, r));
            saturated = levels.iter().any(|state| *state == next);
        }
        FmRelation {
            graph: g.clone(),
            levels,
            d2,
            saturated,
        }
    }

    pub fn r_level(&self, k: u32) -> Option<&Graph> {
        self.levels.get(k as usize - 1).map(|(r, _)| r)
    }

    pub fn f_level(&self, k: u32) -> Option<&Graph> {
        self.levels.get(k as usize - 1).map(|(_, f)| f)
    }

    pub fn d2_of(&self, u: usize, v: usize) -> Option<u32> {
        self.d2[u * self.graph.n() + v]
    }
}

/// Does a 2-walk of length k from u to v exist? Level recursion; validated
/// against the brute-force enumerator in tests.
pub fn two_walk_exists(g: &Graph, u: usize, v: usize, k: u32) -> Result<bool> {
    if u == v {
        return Err(Error::InvalidParameter(
            "2-walk endpoints must be distinct".into(),
        ));
    }
    if k < 1 {
        return Err(Error::InvalidParameter("2-walk level must be >= 1".into()));
    }
    let mut r = g.metamour();
    for _ in 1..k {
        r = square_relation(&r);
    }
    Ok(r.has_edge(u, v))
}

/// Minimal level of a 2-walk between u and v, if any exists at all (absent
/// when the level relations saturate without ever connecting the pair).
pub fn d2_value(g: &Graph, u: usize, v: usize) -> Result<Option<u32>> {
    if u == v {
        return Err(Error::InvalidParameter(
            "2-walk endpoints must be distinct".into(),
        ));
    }
    // the state pair over a finite graph must repeat; in practice it does so
    // within a handful of levels, and the cap only guards pathologies
    let rel = FmRelation::compute(g, 10_000);
    Ok(rel.d2_of(u, v))
}

/// FM_k: pairs joined by a fully minimal 2-walk of length k, as a relation
/// graph. Always a subset of E(M^k(G)).
pub fn fully_minimal_set(g: &Graph, k: u32) -> Result<Graph> {
    if k < 1 {
        return Err(Error::InvalidParameter("level must be >= 1".into()));
    }
    let r1 = g.metamour();
    let mut state = (r1.clone(), r1);
    for _ in 1..k {
        state = (
            square_relation(&state.0),
            square_fully_minimal(&state.1, &state.0),
        );
    }
    Ok(state.1)
}

/// Parity unions of the FM_k sets and the least level by which both unions
/// are complete.
#[derive(Debug, Clone)]
pub struct FmParity {
    pub even: Graph,
    pub odd: Graph,
    /// least N such that every FM_k with k > N adds nothing to its parity
    /// union (within the computed range)
    pub stabilized_by: u32,
    /// false when the level bound was hit before the relations saturated, in
    /// which case stabilized_by is only a lower bound
    pub confirmed: bool,
}

/// Unions of FM_k over even/odd k ≤ bound. When the relations saturate below
/// the bound the unions (and the stabilization level) are exact.
pub fn fm_parity_sets(g: &Graph, bound: u32) -> Result<FmParity> {
    if bound < 2 {
        return Err(Error::InvalidParameter("bound must be >= 2".into()));
    }
    let rel = FmRelation::compute(g, bound);
    let n = g.n();
    let mut even = Graph::edgeless(n);
    let mut odd = Graph::edgeless(n);
    let mut last_growth = 0u32;
    for (i, (_, f)) in rel.levels.iter().enumerate() {
        let k = i as u32 + 1;
        let target = if k % 2 == 0 { &mut even } else { &mut odd };
        let mut grew = false;
        for (u, v) in f.edges() {
            if !target.has_edge(u, v) {
                target.add_edge(u, v);
                grew = true;
            }
        }
        if grew {
            last_growth = k;
        }
    }
    Ok(FmParity {
        even,
        odd,
        stabilized_by: last_growth,
        confirmed: rel.saturated,
    })
}

/// Enumerate candidate walks (consecutive-adjacent vertex sequences) from u
/// to v of length 2^k, invoking `found` on each valid 2-walk; returns early
/// if `found` returns true. Brute force — test oracle and witness search.
pub fn for_each_two_walk<F: FnMut(&TwoWalk) -> bool>(
    g: &Graph,
    u: usize,
    v: usize,
    k: u32,
    budget: &mut u64,
    found: &mut F,
) -> Result<bool> {
    let len = 1usize << k;
    let mut seq = Vec::with_capacity(len + 1);
    seq.push(u);
    fn dfs<F: FnMut(&TwoWalk) -> bool>(
        g: &Graph,
        seq: &mut Vec<usize>,
        v: usize,
        len: usize,
        k: u32,
        budget: &mut u64,
        found: &mut F,
    ) -> Result<bool> {
        if *budget == 0 {
            return Err(Error::BudgetExceeded(0));
        }
        *budget -= 1;
        if seq.len() == len + 1 {
            if *seq.last().unwrap() != v {
                return Ok(false);
            }
            let walk = TwoWalk {
                level: k,
                vertices: seq.clone(),
            };
            return Ok(walk.is_valid(g) && found(&walk));
        }
        let last = *seq.last().unwrap();
        for next in g.neighbors(last) {
            seq.push(next);
            if dfs(g, seq, v, len, k, budget, found)? {
                return Ok(true);
            }
            seq.pop();
        }
        Ok(false)
    }
    dfs(g, &mut seq, v, len, k, budget, found)
}

/// Brute-force recomputation of E(M^k(G)) via explicit 2-walk search: the
/// level-k edges are the pairs not already at level k-1 that admit a 2-walk
/// whose interior dyadic spans are edges of the lower oracle levels. This is
/// an independent oracle for metamour_iterate (it never calls the distance
/// machinery beyond level-0 adjacency).
pub fn mk_edge_oracle(g: &Graph, k: u32) -> Result<Graph> {
    let n = g.n();
    let mut budget: u64 = 200_000_000;
    let mut levels: Vec<Graph> = vec![g.clone()];
    for lvl in 1..=k {
        let prev = &levels[lvl as usize - 1];
        let mut next = Graph::edgeless(n);
        for u in 0..n {
            for v in (u + 1)..n {
                if prev.has_edge(u, v) {
                    continue;
                }
                let lower = &levels[1..lvl as usize];
                let ok = for_each_two_walk(g, u, v, lvl, &mut budget, &mut |walk| {
                    spans_in_levels(walk, lower)
                })?;
                if ok {
                    next.add_edge(u, v);
                }
            }
        }
        levels.push(next);
    }
    Ok(levels.pop().unwrap())
}

/// Are all interior dyadic spans of the walk edges of the corresponding
/// oracle level? `lower[i]` is the level-(i+1) edge set.
fn spans_in_levels(walk: &TwoWalk, lower: &[Graph]) -> bool {
    let w = &walk.vertices;
    for (i, level) in lower.iter().enumerate() {
        let span = 1usize << (i + 1);
        for j in 0..(w.len() - 1) / span {
            if !level.has_edge(w[j * span], w[(j + 1) * span]) {
                return false;
            }
        }
    }
    true
}
