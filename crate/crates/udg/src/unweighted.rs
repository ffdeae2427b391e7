//! Hop-count shortest path tree in the disk graph, without its edges.
//!
//! Levels grow outward from the source: level i is discovered from level
//! i−1 by walking Delaunay edges and accepting a point exactly when its
//! nearest neighbor among the previous level lies within the radius. A
//! point discovered this round joins the scan queue immediately, because
//! same-level points can chain through Delaunay edges before the round
//! ends. The per-round nearest-neighbor index makes the whole run
//! O(n log n) while touching no disk-graph edge explicitly.

use crate::delaunay::build_delaunay;
use crate::geom::PointSet;
use crate::nn_index::NnIndex;
use crate::tree::ShortestPathTree;
use crate::{Error, Result};
use std::collections::VecDeque;

/// Instrumentation for the work bounds: every point enters the scan queue
/// at most twice (once as a fresh discovery, once as a member of the
/// previous level), and edge inspections stay within four per Delaunay
/// edge.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct UnweightedStats {
    pub rounds: usize,
    pub queue_pushes: usize,
    pub max_queue_pushes_per_point: usize,
    pub edge_inspections: usize,
    pub dt_edges: usize,
}

pub fn unweighted_sssp(ps: &PointSet, s: usize, r: f64) -> Result<ShortestPathTree> {
    unweighted_sssp_with_stats(ps, s, r).map(|(tree, _)| tree)
}

pub fn unweighted_sssp_with_stats(
    ps: &PointSet,
    s: usize,
    r: f64,
) -> Result<(ShortestPathTree, UnweightedStats)> {
    ps.check_index(s)?;
    if r.is_nan() || r <= 0.0 {
        return Err(Error::NonPositiveRadius(r));
    }
    let r_sq = r * r;
    let n = ps.len();

    let dt = build_delaunay(ps);
    let mut tree = ShortestPathTree::new_unreached(s, n);
    let mut stats = UnweightedStats {
        dt_edges: dt.edge_count(),
        ..UnweightedStats::default()
    };
    let mut pushes_of = vec![0u8; n];
    let push_count = |stats: &mut UnweightedStats, pushes_of: &mut Vec<u8>, p: usize| {
        pushes_of[p] += 1;
        stats.queue_pushes += 1;
        stats.max_queue_pushes_per_point =
            stats.max_queue_pushes_per_point.max(pushes_of[p] as usize);
    };

    let mut previous_level = vec![s];
    let mut level = 1.0f64;
    while !previous_level.is_empty() {
        stats.rounds += 1;
        let nn = NnIndex::build(ps, &previous_level)?;
        let mut queue: VecDeque<usize> = VecDeque::with_capacity(previous_level.len());
        for &q in &previous_level {
            push_count(&mut stats, &mut pushes_of, q);
            queue.push_back(q);
        }
        let mut current_level = Vec::new();
        while let Some(q) = queue.pop_front() {
            for &p in dt.adjacency()[q].iter() {
                stats.edge_inspections += 1;
                if tree.dist[p].is_finite() {
                    continue;
                }
                let (w, sqd) = nn.nearest(ps.point(p));
                if sqd <= r_sq {
                    tree.dist[p] = level;
                    tree.parent[p] = Some(w);
                    push_count(&mut stats, &mut pushes_of, p);
                    queue.push_back(p);
                    current_level.push(p);
                }
            }
        }
        previous_level = current_level;
        level += 1.0;
    }

    debug_assert!(stats.max_queue_pushes_per_point <= 2);
    Ok((tree, stats))
}
