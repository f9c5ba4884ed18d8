//! Iterated metamour dynamics: orbits, exact and pseudo periods, and the
//! μ(n) arithmetic that drives odd-cycle behavior.

use crate::canon::is_isomorphic;
use crate::error::{Error, Result};
use crate::graph::Graph;
use std::collections::HashMap;

/// Default safety bound for orbit iteration. Orbits of the graphs handled
/// here are tiny (the sequence is eventually periodic and each iterate is a
/// graph on the same vertex set); the bound only guards against misuse.
pub const DEFAULT_MAX_STEPS: usize = 10_000;

/// The iterate sequence M⁰(G)..M^{N+k-1}(G) together with the minimal
/// preperiod N and period k: M^{N+k}(G) = M^N(G) under labeled equality.
#[derive(Debug, Clone)]
pub struct OrbitReport {
    pub iterates: Vec<Graph>,
    pub preperiod: usize,
    pub period: usize,
}

impl OrbitReport {
    /// The k graphs M^N(G)..M^{N+k-1}(G) forming the limit cycle.
    pub fn limit_set(&self) -> &[Graph] {
        &self.iterates[self.preperiod..]
    }

    /// M^k(G) for arbitrary k, read off the eventually periodic sequence.
    pub fn iterate_at(&self, k: usize) -> &Graph {
        if k < self.iterates.len() {
            &self.iterates[k]
        } else {
            &self.iterates[self.preperiod + (k - self.preperiod) % self.period]
        }
    }
}

/// μ(n) = min{k ≥ 1 : 2^k ≡ ±1 (mod n)}, by iterative doubling.
pub fn mu(n: u64) -> Result<u64> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::InvalidParameter(format!(
            "mu is defined for odd n >= 3, got {n}"
        )));
    }
    let mut pow = 2 % n;
    let mut k = 1;
    while pow != 1 && pow != n - 1 {
        pow = pow * 2 % n;
        k += 1;
    }
    Ok(k)
}

/// k-fold metamour; k = 0 is the identity.
pub fn metamour_iterate(g: &Graph, k: usize) -> Graph {
    let mut out = g.clone();
    for _ in 0..k {
        out = out.metamour();
    }
    out
}

/// Iterate M until the first labeled repeat, keyed by adjacency encoding.
/// The sequence is guaranteed eventually periodic; errors only if max_steps
/// is reached first.
pub fn orbit(g: &Graph, max_steps: usize) -> Result<OrbitReport> {
    let mut seen: HashMap<Vec<u64>, usize> = HashMap::new();
    let mut iterates: Vec<Graph> = Vec::new();
    let mut current = g.clone();
    for step in 0..=max_steps {
        if let Some(&first) = seen.get(current.raw_bits()) {
            return Ok(OrbitReport {
                iterates,
                preperiod: first,
                period: step - first,
            });
        }
        seen.insert(current.raw_bits().to_vec(), step);
        iterates.push(current.clone());
        current = current.metamour();
    }
    Err(Error::OrbitBoundExhausted(max_steps))
}

/// Minimal k ≥ 1 with M^k(G) = G (labeled), i.e. the orbit period when the
/// preperiod is zero; absent otherwise.
pub fn metamour_period(g: &Graph) -> Result<Option<usize>> {
    let report = orbit(g, DEFAULT_MAX_STEPS)?;
    Ok((report.preperiod == 0).then_some(report.period))
}

/// Minimal k ≥ 1 with M^k(G) ≅ G. Searching k ≤ preperiod + period suffices:
/// past that point the iterate sequence only revisits graphs already
/// inspected, so no new isomorphism type can appear.
pub fn pseudo_metamour_period(g: &Graph) -> Result<Option<usize>> {
    let report = orbit(g, DEFAULT_MAX_STEPS)?;
    let window = report.preperiod + report.period;
    for k in 1..=window {
        if is_isomorphic(report.iterate_at(k), g) {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

/// Closed form for M^k(C_n), odd n ≥ 5: edges v_i v_{i+2^k mod n}.
pub fn cycle_power_edges(n: usize, k: u32) -> Result<Graph> {
    if n < 5 || n % 2 == 0 {
        return Err(Error::InvalidParameter(format!(
            "cycle powers need odd n >= 5, got {n}"
        )));
    }
    let mut step = 1usize;
    for _ in 0..k {
        step = step * 2 % n;
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + step) % n)).collect();
    Graph::build(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete, cycle, join_along};

    pub(crate) fn dream_catcher() -> Graph {
        join_along(&cycle(7), &vec![Graph::edgeless(2); 7]).unwrap()
    }

    #[test]
    fn mu_small_values() {
        assert_eq!(mu(3).unwrap(), 1);
        assert_eq!(mu(5).unwrap(), 2);
        assert_eq!(mu(7).unwrap(), 3);
        assert_eq!(mu(9).unwrap(), 3);
        assert_eq!(mu(11).unwrap(), 5);
        assert_eq!(mu(15).unwrap(), 4);
        assert_eq!(mu(31).unwrap(), 5);
        assert!(mu(4).is_err());
        assert!(mu(1).is_err());
    }

    #[test]
    fn iterate_basics() {
        let c5 = cycle(5);
        assert_eq!(metamour_iterate(&c5, 0), c5);
        assert_eq!(metamour_iterate(&c5, 2), c5);
        assert_eq!(metamour_iterate(&cycle(7), 3), cycle(7));
    }

    #[test]
    fn orbit_c12() {
        let r = orbit(&cycle(12), 100).unwrap();
        assert_eq!((r.preperiod, r.period), (3, 1));
        assert_eq!(r.limit_set(), &[Graph::edgeless(12)]);
    }

    #[test]
    fn orbit_c7() {
        let r = orbit(&cycle(7), 100).unwrap();
        assert_eq!((r.preperiod, r.period), (0, 3));
    }

    #[test]
    fn orbit_k5() {
        let r = orbit(&complete(5), 100).unwrap();
        assert_eq!((r.preperiod, r.period), (1, 1));
        assert_eq!(r.limit_set(), &[Graph::edgeless(5)]);
    }

    #[test]
    fn orbit_bound_error() {
        assert!(matches!(
            orbit(&cycle(12), 2),
            Err(Error::OrbitBoundExhausted(2))
        ));
    }

    #[test]
    fn orbit_report_independent_of_bound() {
        let a = orbit(&cycle(12), 10).unwrap();
        let b = orbit(&cycle(12), 100).unwrap();
        assert_eq!((a.preperiod, a.period), (b.preperiod, b.period));
        assert_eq!(a.iterates.len(), b.iterates.len());
    }

    #[test]
    fn periods() {
        assert_eq!(metamour_period(&cycle(9)).unwrap(), Some(3));
        assert_eq!(metamour_period(&complete(5)).unwrap(), None);
        assert_eq!(metamour_period(&dream_catcher()).unwrap(), Some(6));
    }

    #[test]
    fn pseudo_periods() {
        assert_eq!(pseudo_metamour_period(&cycle(11)).unwrap(), Some(1));
        assert_eq!(
            pseudo_metamour_period(&crate::constructions::paley(13).unwrap()).unwrap(),
            Some(1)
        );
        assert_eq!(pseudo_metamour_period(&dream_catcher()).unwrap(), Some(2));
    }

    #[test]
    fn cycle_powers() {
        let g = cycle_power_edges(7, 1).unwrap();
        assert_eq!(g, metamour_iterate(&cycle(7), 1));
        assert_eq!(cycle_power_edges(9, 3).unwrap(), cycle(9));
        for n in (5..=15).step_by(2) {
            for k in 0..=6 {
                assert_eq!(
                    cycle_power_edges(n, k).unwrap(),
                    metamour_iterate(&cycle(n), k as usize),
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn odd_cycle_iterates_repeat_mod_mu() {
        for n in [5usize, 7, 9, 11, 13] {
            let m = mu(n as u64).unwrap() as usize;
            assert_eq!(metamour_period(&cycle(n)).unwrap(), Some(m));
            let r = orbit(&cycle(n), 100).unwrap();
            for k in 0..2 * m {
                for l in 0..2 * m {
                    assert_eq!(
                        r.iterate_at(k) == r.iterate_at(l),
                        k % m == l % m,
                        "n={n} k={k} l={l}"
                    );
                }
            }
        }
    }
}
