//! Euclidean-weighted shortest path tree in the disk graph, again without
//! its edges.
//!
//! Dijkstra's frontier is replaced by the weighted closest-pair structure:
//! settled points with possible unsettled neighbors are blue (weight =
//! their final distance), unsettled points are red. The closest blue/red
//! pair under dist[b] + ‖r−b‖ either settles the red (when the pair is a
//! real edge) or proves the blue exhausted (when even its nearest red is
//! out of range, no red can be adjacent) and retires it. Each iteration
//! removes a red or a blue, so the loop runs at most 2n − 2 times.

use crate::geom::{squared_distance, PointSet};
use crate::tree::ShortestPathTree;
use crate::wbcp::{WbcpIndex, WeightedBlue};
use crate::{Error, Result};

/// One while-loop decision. `KillBlue` retires a blue with no red in
/// range; `SettleRed` fixes a red's distance through the given blue.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TraceEvent {
    KillBlue { blue: usize },
    SettleRed { blue: usize, red: usize, dist: f64 },
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct WeightedStats {
    pub iterations: usize,
    pub settled: usize,
    pub killed: usize,
    pub bcp_ops: u64,
    pub peak_candidates: usize,
    pub residency_within_bound: bool,
}

#[derive(Debug, Clone)]
pub struct WeightedRun {
    pub tree: ShortestPathTree,
    /// Event log, one entry per while-loop iteration, in order.
    pub trace: Vec<TraceEvent>,
    pub stats: WeightedStats,
}

pub fn weighted_sssp(ps: &PointSet, s: usize, r: f64) -> Result<ShortestPathTree> {
    solve(ps, s, r, false, false).map(|run| run.tree)
}

/// As `weighted_sssp`, plus instrumentation but no event log.
pub fn weighted_sssp_with_stats(
    ps: &PointSet,
    s: usize,
    r: f64,
) -> Result<(ShortestPathTree, WeightedStats)> {
    solve(ps, s, r, false, false).map(|run| (run.tree, run.stats))
}

/// As `weighted_sssp`, with the full event trace and instrumentation.
pub fn weighted_sssp_traced(ps: &PointSet, s: usize, r: f64) -> Result<WeightedRun> {
    solve(ps, s, r, true, false)
}

/// Test mode: after every retired blue, a linear scan asserts that no
/// remaining red lies within the radius. Quadratic; corpora only.
pub fn weighted_sssp_checked(ps: &PointSet, s: usize, r: f64) -> Result<WeightedRun> {
    solve(ps, s, r, true, true)
}

fn solve(
    ps: &PointSet,
    s: usize,
    r: f64,
    keep_trace: bool,
    check_dead: bool,
) -> Result<WeightedRun> {
    ps.check_index(s)?;
    if r.is_nan() || r <= 0.0 {
        return Err(Error::NonPositiveRadius(r));
    }
    let r_sq = r * r;
    let n = ps.len();

    let mut tree = ShortestPathTree::new_unreached(s, n);
    let mut trace = Vec::new();
    let mut stats = WeightedStats::default();

    let reds: Vec<usize> = (0..n).filter(|&i| i != s).collect();
    let source = [WeightedBlue {
        index: s,
        weight: 0.0,
    }];
    let mut pairs = WbcpIndex::new(ps, &source, &reds)?;

    while pairs.red_count() > 0 {
        let Some((b, red, delta)) = pairs.min_pair() else {
            // no blue left: the remaining reds are disconnected from s
            break;
        };
        stats.iterations += 1;
        if squared_distance(ps.point(b), ps.point(red)) > r_sq {
            // even the nearest red is beyond the radius, so this blue has
            // no edge left toward any red
            pairs.delete_blue(b)?;
            stats.killed += 1;
            if keep_trace {
                trace.push(TraceEvent::KillBlue { blue: b });
            }
            if check_dead {
                assert_dead_point_safe(ps, &pairs, b, r_sq);
            }
        } else {
            tree.dist[red] = delta;
            tree.parent[red] = Some(b);
            pairs.delete_red(red)?;
            pairs.insert_blue(WeightedBlue {
                index: red,
                weight: delta,
            })?;
            stats.settled += 1;
            if keep_trace {
                trace.push(TraceEvent::SettleRed {
                    blue: b,
                    red,
                    dist: delta,
                });
            }
        }
    }

    debug_assert!(stats.iterations <= 2 * n - 2 || n == 1);
    stats.bcp_ops = pairs.ops();
    stats.peak_candidates = pairs.peak_candidates();
    stats.residency_within_bound = pairs.residency_within_bound();
    Ok(WeightedRun { tree, trace, stats })
}

fn assert_dead_point_safe(ps: &PointSet, pairs: &WbcpIndex, b: usize, r_sq: f64) {
    for i in 0..ps.len() {
        if pairs.is_red(i) {
            assert!(
                squared_distance(ps.point(b), ps.point(i)) > r_sq,
                "retired blue {b} still has red {i} within range"
            );
        }
    }
}
