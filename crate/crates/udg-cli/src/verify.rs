//! Solver-vs-oracle comparison used by the verify subcommand. Unweighted
//! hop counts must match exactly; weighted distances to a relative 1e-9;
//! every parent edge must be in range and realize its child's distance
//! (to 1e-12 absolute in the weighted case).

use crate::formats::Mode;
use udg::{PointSet, ShortestPathTree};

pub const DIST_RTOL: f64 = 1e-9;
pub const EDGE_ATOL: f64 = 1e-12;

pub fn tree_mismatches(
    ps: &PointSet,
    tree: &ShortestPathTree,
    oracle: &ShortestPathTree,
    mode: Mode,
    radius: f64,
) -> Vec<String> {
    let mut bad = Vec::new();
    let r_sq = radius * radius;
    for v in 0..ps.len() {
        let d = tree.dist[v];
        let o = oracle.dist[v];
        match (d.is_finite(), o.is_finite()) {
            (true, false) => bad.push(format!("point {v}: solver reaches it, oracle does not")),
            (false, true) => bad.push(format!("point {v}: oracle reaches it, solver does not")),
            (false, false) => {}
            (true, true) => {
                let ok = match mode {
                    Mode::Unweighted => d == o,
                    Mode::Weighted => (d - o).abs() <= DIST_RTOL * o.max(1.0),
                };
                if !ok {
                    bad.push(format!("point {v}: dist {d} vs oracle {o}"));
                }
            }
        }
        if v == tree.source {
            if tree.parent[v].is_some() {
                bad.push(format!("source {v} has a parent"));
            }
            continue;
        }
        match tree.parent[v] {
            None => {
                if d.is_finite() {
                    bad.push(format!("point {v}: reached but has no parent"));
                }
            }
            Some(u) => {
                if !d.is_finite() {
                    bad.push(format!("point {v}: unreachable but has parent {u}"));
                    continue;
                }
                let sqd = udg::geom::squared_distance(ps.point(v), ps.point(u));
                if sqd > r_sq {
                    bad.push(format!("point {v}: parent {u} is out of range"));
                }
                let du = tree.dist[u];
                let tight = match mode {
                    Mode::Unweighted => du == d - 1.0,
                    Mode::Weighted => (d - (du + sqd.sqrt())).abs() <= EDGE_ATOL,
                };
                if !tight {
                    bad.push(format!(
                        "point {v}: parent edge from {u} does not realize its distance"
                    ));
                }
            }
        }
    }
    bad
}
