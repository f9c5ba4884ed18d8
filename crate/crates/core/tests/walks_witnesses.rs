//! Structural facts about 2-walks on the generalized Petersen family and
//! small cycles: span restriction, edge-set expansion and parity disjointness
//! under iteration, and explicit witnesses separating the minimal and fully
//! minimal hierarchies.

use metamour_core::constructions::{cycle, generalized_petersen};
use metamour_core::dynamics::orbit;
use metamour_core::walks::{for_each_two_walk, FmRelation, TwoWalk};

fn sub_walk(walk: &TwoWalk, level: u32, start: usize) -> TwoWalk {
    let span = 1usize << level;
    TwoWalk {
        level,
        vertices: walk.vertices[start..=start + span].to_vec(),
    }
}

/// Every dyadic restriction of a valid 2-walk is itself a valid 2-walk.
#[test]
fn restriction_property() {
    for g in [cycle(7), generalized_petersen(5, 2).unwrap()] {
        let n = g.n();
        for k in 1..=3u32 {
            for u in 0..n {
                for v in (u + 1)..n {
                    let mut budget = 5_000_000u64;
                    let ok = for_each_two_walk(&g, u, v, k, &mut budget, &mut |walk| {
                        for i in 0..k {
                            let span = 1usize << i;
                            for j in 0..(1usize << (k - i)) {
                                assert!(
                                    sub_walk(walk, i, j * span).is_valid(&g),
                                    "restriction of {:?} to level {i} offset {} invalid",
                                    walk.vertices,
                                    j * span
                                );
                            }
                        }
                        false // keep enumerating
                    });
                    assert_eq!(ok.unwrap(), false);
                }
            }
        }
    }
}

#[test]
fn iterate_edge_sets_expand_with_step_two() {
    for m in 5..=9usize {
        let g = generalized_petersen(m, 2).unwrap();
        let report = orbit(&g, 1000).unwrap();
        for k in 1..=3usize {
            let a = report.iterate_at(k);
            let b = report.iterate_at(k + 2);
            assert!(
                a.edges().iter().all(|&(u, v)| b.has_edge(u, v)),
                "m={m}: E(M^{k}) not within E(M^{})",
                k + 2
            );
        }
    }
}

#[test]
fn iterate_edge_sets_of_opposite_parity_are_disjoint() {
    for m in 5..=9usize {
        let g = generalized_petersen(m, 2).unwrap();
        let report = orbit(&g, 1000).unwrap();
        for l1 in (1..=5usize).step_by(2) {
            for l2 in (2..=5usize).step_by(2) {
                let a = report.iterate_at(l1);
                let b = report.iterate_at(l2);
                assert!(
                    a.edges().iter().all(|&(u, v)| !b.has_edge(u, v)),
                    "m={m}: E(M^{l1}) meets E(M^{l2})"
                );
            }
        }
    }
}

/// A 2-walk is fully minimal when no level-(i+1) dyadic span admits a 2-walk
/// of length i between its endpoints.
fn is_fully_minimal(fm: &FmRelation, walk: &TwoWalk) -> bool {
    let w = &walk.vertices;
    for i in 1..walk.level {
        let span = 1usize << (i + 1);
        for j in 0..(1usize << (walk.level - i - 1)) {
            let (a, b) = (w[j * span], w[(j + 1) * span]);
            if fm.r_level(i).is_some_and(|r| r.has_edge(a, b)) {
                return false;
            }
        }
    }
    true
}

/// There is a minimal 2-walk (length 2^d2 between its endpoints) that is not
/// fully minimal: one of its spans is shortcut by a shorter 2-walk. The
/// smallest generalized Petersen witness needs a pair at d2 = 3, which first
/// appears at m = 10.
#[test]
fn minimal_walk_need_not_be_fully_minimal() {
    let mut witness: Option<(usize, usize, usize, u32)> = None;
    'outer: for m in 5..=12usize {
        let g = generalized_petersen(m, 2).unwrap();
        let fm = FmRelation::compute(&g, 8);
        let n = g.n();
        for u in 0..n {
            for v in (u + 1)..n {
                let Some(d) = fm.d2_of(u, v) else { continue };
                if d < 3 {
                    continue; // all spans of shorter walks are trivially minimal
                }
                let mut budget = 5_000_000u64;
                let hit = for_each_two_walk(&g, u, v, d, &mut budget, &mut |walk| {
                    !is_fully_minimal(&fm, walk)
                })
                .unwrap();
                if hit {
                    witness = Some((m, u, v, d));
                    break 'outer;
                }
            }
        }
    }
    let (m, u, v, d) = witness.expect("expected a minimal but not fully minimal walk");
    let g = generalized_petersen(m, 2).unwrap();
    let fm = FmRelation::compute(&g, 8);
    assert_eq!(fm.d2_of(u, v), Some(d));
    let mut budget = 5_000_000u64;
    assert!(
        for_each_two_walk(&g, u, v, d, &mut budget, &mut |walk| !is_fully_minimal(&fm, walk))
            .unwrap(),
        "witness on G({m},2) at pair {u}-{v} did not reproduce"
    );
}

/// A fully minimal 2-walk need not have minimal length. On G(m,2) for m <= 12
/// the 2-walk-existence relations only grow with the level, so every fully
/// minimal walk there is minimal; C_5 separates the notions: the pair (0,2)
/// has d2 = 1 but still carries a fully minimal 2-walk of length 3.
#[test]
fn fully_minimal_walk_need_not_be_minimal() {
    for m in 5..=12usize {
        let g = generalized_petersen(m, 2).unwrap();
        let fm = FmRelation::compute(&g, 10);
        for k in 2..=10u32 {
            let Some(f) = fm.f_level(k) else { break };
            for &(u, v) in &f.edges() {
                assert_eq!(fm.d2_of(u, v), Some(k), "unexpected G({m},2) witness at {u}-{v}");
            }
        }
    }

    let g = cycle(5);
    let fm = FmRelation::compute(&g, 8);
    assert_eq!(fm.d2_of(0, 2), Some(1));
    let mut budget = 10_000_000u64;
    assert!(
        for_each_two_walk(&g, 0, 2, 3, &mut budget, &mut |walk| is_fully_minimal(&fm, walk))
            .unwrap(),
        "C_5 pair (0,2) should carry a fully minimal 2-walk of length 3"
    );
}

/// R_k (2-walk existence) contains every pair first reached at iterate k.
#[test]
fn relation_levels_match_iterates_on_small_cycles() {
    for n in [5usize, 7, 9, 11] {
        let g = cycle(n);
        let fm = FmRelation::compute(&g, 8);
        let report = orbit(&g, 1000).unwrap();
        for k in 1..=4u32 {
            if let Some(r) = fm.r_level(k) {
                for (u, v) in report.iterate_at(k as usize).edges() {
                    let fresh = (1..k as usize).all(|l| !report.iterate_at(l).has_edge(u, v))
                        && !g.has_edge(u, v);
                    if fresh {
                        assert!(r.has_edge(u, v), "C_{n}: M^{k} edge {u}-{v} missing from R_{k}");
                    }
                }
            }
        }
    }
}
