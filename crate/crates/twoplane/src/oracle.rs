//! Exact brute-force baselines for the constructive algorithms.
//!
//! Everything here is exponential and fenced by a vertex cap; the point is
//! ground truth on small instances, not performance.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;

use crate::error::{Error, Result};
use crate::gen;
use crate::graph::{EmbeddedGraph, VertexId};

pub const FOREST_CAP: usize = 24;
pub const ARBORICITY_CAP: usize = 24;
pub const OUTERPLANE_CAP: usize = 16;

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        return Err(Error::TooLarge { n, cap });
    }
    Ok(())
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// A maximum-size vertex set inducing a forest, by branch and bound over
/// vertices in descending degree order.
pub fn max_induced_forest_exact_with_cap(
    g: &EmbeddedGraph,
    cap: usize,
) -> Result<BTreeSet<VertexId>> {
    check_cap(g.n(), cap)?;
    let mut order: Vec<VertexId> = g.vertices().collect();
    order.sort_by_key(|&v| (Reverse(g.degree(v)), v));
    let pos_of: BTreeMap<VertexId, usize> =
        order.iter().enumerate().map(|(i, &v)| (v, i)).collect();

    struct Search<'a> {
        g: &'a EmbeddedGraph,
        order: &'a [VertexId],
        pos_of: &'a BTreeMap<VertexId, usize>,
        chosen: Vec<bool>,
        best: (usize, Vec<bool>),
    }

    fn rec(s: &mut Search, i: usize, count: usize, parent: &mut Vec<usize>) {
        if count + (s.order.len() - i) <= s.best.0 {
            return;
        }
        if i == s.order.len() {
            if count > s.best.0 {
                s.best = (count, s.chosen.clone());
            }
            return;
        }
        let v = s.order[i];
        let mut roots: Vec<usize> = Vec::new();
        let mut cycle = false;
        for w in s.g.neighbors(v) {
            let j = s.pos_of[w];
            if s.chosen[j] {
                let r = find(parent, j);
                if roots.contains(&r) {
                    cycle = true;
                    break;
                }
                roots.push(r);
            }
        }
        if !cycle {
            let saved = parent.clone();
            s.chosen[i] = true;
            for r in roots {
                parent[r] = i;
            }
            rec(s, i + 1, count + 1, parent);
            s.chosen[i] = false;
            *parent = saved;
        }
        rec(s, i + 1, count, parent);
    }

    let n = order.len();
    let mut s = Search {
        g,
        order: &order,
        pos_of: &pos_of,
        chosen: vec![false; n],
        best: (0, vec![false; n]),
    };
    let mut parent: Vec<usize> = (0..n).collect();
    rec(&mut s, 0, 0, &mut parent);
    Ok(order
        .iter()
        .enumerate()
        .filter(|&(i, _)| s.best.1[i])
        .map(|(_, &v)| v)
        .collect())
}

pub fn max_induced_forest_exact(g: &EmbeddedGraph) -> Result<BTreeSet<VertexId>> {
    max_induced_forest_exact_with_cap(g, FOREST_CAP)
}

/// The smallest number of classes in a partition of the vertices into
/// induced forests, by backtracking with class symmetry breaking.
pub fn vertex_arboricity_exact_with_cap(g: &EmbeddedGraph, cap: usize) -> Result<usize> {
    let n = g.n();
    check_cap(n, cap)?;
    if n == 0 {
        return Ok(0);
    }
    let mut order: Vec<VertexId> = g.vertices().collect();
    order.sort_by_key(|&v| (Reverse(g.degree(v)), v));
    let pos_of: BTreeMap<VertexId, usize> =
        order.iter().enumerate().map(|(i, &v)| (v, i)).collect();

    #[allow(clippy::too_many_arguments)]
    fn rec(
        g: &EmbeddedGraph,
        order: &[VertexId],
        pos_of: &BTreeMap<VertexId, usize>,
        t: usize,
        i: usize,
        used: usize,
        class: &mut Vec<usize>,
        parents: &mut Vec<Vec<usize>>,
    ) -> bool {
        if i == order.len() {
            return true;
        }
        let v = order[i];
        for cls in 0..t.min(used + 1) {
            let mut roots: Vec<usize> = Vec::new();
            let mut cycle = false;
            for w in g.neighbors(v) {
                let j = pos_of[w];
                if j < i && class[j] == cls {
                    let r = find(&mut parents[cls], j);
                    if roots.contains(&r) {
                        cycle = true;
                        break;
                    }
                    roots.push(r);
                }
            }
            if cycle {
                continue;
            }
            let saved = parents[cls].clone();
            for r in roots {
                parents[cls][r] = i;
            }
            class[i] = cls;
            if rec(g, order, pos_of, t, i + 1, used.max(cls + 1), class, parents) {
                return true;
            }
            parents[cls] = saved;
        }
        false
    }

    for t in 1..=n {
        let mut class = vec![usize::MAX; n];
        let mut parents: Vec<Vec<usize>> = (0..t).map(|_| (0..n).collect()).collect();
        if rec(g, &order, &pos_of, t, 0, 0, &mut class, &mut parents) {
            return Ok(t);
        }
    }
    unreachable!("n singleton classes always work")
}

pub fn vertex_arboricity_exact(g: &EmbeddedGraph) -> Result<usize> {
    vertex_arboricity_exact_with_cap(g, ARBORICITY_CAP)
}

/// A maximum-size vertex set whose induced drawing is outerplane, found by
/// checking subsets in decreasing size (lexicographic within a size).
pub fn max_induced_outerplane_exact_with_cap(
    g: &EmbeddedGraph,
    cap: usize,
) -> Result<BTreeSet<VertexId>> {
    let n = g.n();
    check_cap(n, cap)?;
    let verts: Vec<VertexId> = g.vertices().collect();
    for size in (0..=n).rev() {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            let set: BTreeSet<VertexId> = idx.iter().map(|&i| verts[i]).collect();
            if g.is_outerplane_set(&set)? {
                return Ok(set);
            }
            // Advance to the next size-`size` combination.
            let mut pos = size;
            while pos > 0 {
                pos -= 1;
                if idx[pos] != pos + n - size {
                    idx[pos] += 1;
                    for q in pos + 1..size {
                        idx[q] = idx[q - 1] + 1;
                    }
                    break;
                }
                if pos == 0 {
                    pos = usize::MAX;
                    break;
                }
            }
            if pos == usize::MAX || size == 0 {
                break;
            }
        }
    }
    unreachable!("the empty set is outerplane")
}

pub fn max_induced_outerplane_exact(g: &EmbeddedGraph) -> Result<BTreeSet<VertexId>> {
    max_induced_outerplane_exact_with_cap(g, OUTERPLANE_CAP)
}

/// Parameters for [`scan_conjecture`]: `count` random `k`-deep instances
/// with sizes cycling up to `n_max`, scored against the bound
/// `bound_num / bound_den`.
#[derive(Debug, Clone)]
pub struct ScanParams {
    pub count: usize,
    pub n_max: usize,
    pub k: usize,
    pub seed: u64,
    pub bound_num: u64,
    pub bound_den: u64,
    pub cap: usize,
}

/// One scanned instance: enough to regenerate it, plus its exact optimum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanCase {
    pub n: usize,
    pub k: usize,
    pub seed: u64,
    pub optimum: usize,
}

#[derive(Debug, Clone, Default)]
pub struct ScanReport {
    pub tested: usize,
    pub skipped: usize,
    pub violations: Vec<ScanCase>,
    /// Instance with the smallest optimum/n ratio among those tested.
    pub min_case: Option<ScanCase>,
}

/// Samples random instances and compares the exact outerplane optimum
/// against `bound_num/bound_den · n`, reporting any instance that falls
/// short. Ratios are compared exactly in integers.
pub fn scan_conjecture(p: &ScanParams) -> Result<ScanReport> {
    if p.bound_den == 0 {
        return Err(Error::PreconditionViolated(
            alloc::string::String::from("bound denominator must be positive"),
        ));
    }
    let lo = if p.k <= 1 { 1 } else { 3 * (p.k - 1) + 1 };
    if p.n_max < lo {
        return Err(Error::InfeasibleSpec { n: p.n_max, k: p.k });
    }
    let span = p.n_max - lo + 1;
    let mut report = ScanReport::default();
    for i in 0..p.count {
        let n = lo + (i % span);
        let seed = p.seed.wrapping_add(i as u64);
        let g = gen::random_k_outerplanar(n, p.k, seed)?;
        let witness = match max_induced_outerplane_exact_with_cap(&g, p.cap) {
            Ok(w) => w,
            Err(Error::TooLarge { .. }) => {
                report.skipped += 1;
                continue;
            }
            Err(e) => return Err(e),
        };
        let optimum = witness.len();
        report.tested += 1;
        let case = ScanCase {
            n,
            k: p.k,
            seed,
            optimum,
        };
        let beats_min = match &report.min_case {
            None => true,
            Some(mc) => (optimum as u128) * (mc.n as u128) < (mc.optimum as u128) * (n as u128),
        };
        if beats_min {
            report.min_case = Some(case.clone());
        }
        if (optimum as u128) * (p.bound_den as u128) < (p.bound_num as u128) * (n as u128) {
            if !g.is_outerplane_set(&witness)? {
                return Err(Error::InternalInvariantViolation(
                    alloc::string::String::from("oracle witness failed re-verification"),
                ));
            }
            report.violations.push(case);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::build;

    #[test]
    fn forest_oracle_on_small_fixtures() {
        let oct = gen::octahedron();
        let w = max_induced_forest_exact(&oct).unwrap();
        assert_eq!(w.len(), 3);
        assert!(oct.is_forest_set(&w).unwrap());

        let k4 = gen::k4();
        assert_eq!(max_induced_forest_exact(&k4).unwrap().len(), 2);
    }

    #[test]
    fn arboricity_of_fixtures_is_two() {
        assert_eq!(vertex_arboricity_exact(&gen::octahedron()).unwrap(), 2);
        assert_eq!(vertex_arboricity_exact(&gen::k4()).unwrap(), 2);
        assert_eq!(vertex_arboricity_exact(&gen::hexagon_fixture()).unwrap(), 2);
    }

    #[test]
    fn arboricity_of_trivial_graphs() {
        let empty = build(&[], &[], &[]);
        assert_eq!(vertex_arboricity_exact(&empty).unwrap(), 0);
        let lone = build(&[], &[], &[5]);
        assert_eq!(vertex_arboricity_exact(&lone).unwrap(), 1);
        let triangle = build(&[(0, &[1, 2]), (1, &[2, 0]), (2, &[0, 1])], &[(1, 0)], &[]);
        assert_eq!(vertex_arboricity_exact(&triangle).unwrap(), 2);
    }

    #[test]
    fn outerplane_oracle_on_small_fixtures() {
        let oct = gen::octahedron();
        let w = max_induced_outerplane_exact(&oct).unwrap();
        assert_eq!(w.len(), 4);
        assert!(oct.is_outerplane_set(&w).unwrap());

        assert_eq!(max_induced_outerplane_exact(&gen::k4()).unwrap().len(), 3);
    }

    #[test]
    fn caps_are_enforced() {
        let g = gen::random_k_outerplanar(20, 2, 1).unwrap();
        assert!(matches!(
            max_induced_outerplane_exact(&g),
            Err(Error::TooLarge { n: 20, cap: 16 })
        ));
        assert!(matches!(
            max_induced_forest_exact_with_cap(&g, 10),
            Err(Error::TooLarge { n: 20, cap: 10 })
        ));
        assert!(matches!(
            vertex_arboricity_exact_with_cap(&g, 4),
            Err(Error::TooLarge { n: 20, cap: 4 })
        ));
    }

    #[test]
    fn scan_on_shallow_instances_finds_no_violation() {
        let report = scan_conjecture(&ScanParams {
            count: 6,
            n_max: 9,
            k: 2,
            seed: 7,
            bound_num: 2,
            bound_den: 3,
            cap: 16,
        })
        .unwrap();
        assert_eq!(report.tested, 6);
        assert_eq!(report.skipped, 0);
        assert!(report.violations.is_empty());
        let mc = report.min_case.unwrap();
        assert!(3 * mc.optimum >= 2 * mc.n);
    }

    #[test]
    fn scan_rejects_impossible_sizes() {
        assert!(matches!(
            scan_conjecture(&ScanParams {
                count: 1,
                n_max: 5,
                k: 3,
                seed: 0,
                bound_num: 2,
                bound_den: 3,
                cap: 16,
            }),
            Err(Error::InfeasibleSpec { n: 5, k: 3 })
        ));
    }
}
