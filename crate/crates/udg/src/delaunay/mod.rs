//! Delaunay triangulation of a point set, exposed as a vertex adjacency
//! graph.
//!
//! The triangulation is what the level-growing search walks instead of
//! the quadratic disk graph, so it must span every input point. Exact
//! coordinate duplicates share one representative in the triangulation
//! proper and hang off it by a zero-length star edge; a shortest path
//! never needs more, since a duplicate has exactly the neighborhood of
//! its representative. All-collinear inputs (including n < 3) become the
//! path graph along the line.

mod sweep;

use crate::geom::{Point, PointSet};
use crate::{Error, Result};
use std::collections::BTreeMap;

#[derive(Debug, Clone)]
pub struct DelaunayTriangulation {
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
    // vertex index triples, clockwise, over representative points only
    triangles: Vec<[usize; 3]>,
}

// -0.0 and 0.0 are the same coordinate; duplicates group by value
fn coord_bits(v: f64) -> u64 {
    if v == 0.0 {
        0.0f64.to_bits()
    } else {
        v.to_bits()
    }
}

/// Builds the triangulation graph over `ps`. Deterministic: identical
/// input yields identical adjacency.
pub fn build_delaunay(ps: &PointSet) -> DelaunayTriangulation {
    let n = ps.len();

    // group exact duplicates; the representative is the smallest index
    let mut rep_of_group: BTreeMap<(u64, u64), usize> = BTreeMap::new();
    let mut rep = vec![0usize; n];
    for (i, slot) in rep.iter_mut().enumerate() {
        let p = ps.point(i);
        let key = (coord_bits(p.x), coord_bits(p.y));
        *slot = *rep_of_group.entry(key).or_insert(i);
    }
    let mut reps: Vec<usize> = rep_of_group.values().copied().collect();
    reps.sort_unstable();
    let rep_points: Vec<Point> = reps.iter().map(|&i| ps.point(i)).collect();

    let mut adjacency: Vec<Vec<usize>> = vec![Vec::new(); n];
    let push_edge = |adjacency: &mut Vec<Vec<usize>>, a: usize, b: usize| {
        adjacency[a].push(b);
        adjacency[b].push(a);
    };

    let mut triangles = Vec::new();
    match sweep::triangulate(&rep_points) {
        Some(s) => {
            for e in 0..s.triangles.len() {
                let t = s.halfedges[e];
                if t == sweep::EMPTY || e < t {
                    let a = reps[s.triangles[e]];
                    let b = reps[s.triangles[if e % 3 == 2 { e - 2 } else { e + 1 }]];
                    push_edge(&mut adjacency, a, b);
                }
            }
            triangles.reserve(s.triangles.len() / 3);
            for t in s.triangles.chunks_exact(3) {
                triangles.push([reps[t[0]], reps[t[1]], reps[t[2]]]);
            }
        }
        None => {
            // everything on one line: connect consecutive points along it
            let mut along_line = reps.clone();
            along_line.sort_unstable_by(|&a, &b| {
                let (pa, pb) = (ps.point(a), ps.point(b));
                pa.x.total_cmp(&pb.x).then(pa.y.total_cmp(&pb.y))
            });
            for w in along_line.windows(2) {
                push_edge(&mut adjacency, w[0], w[1]);
            }
        }
    }

    // duplicates attach to their representative
    for (i, &r) in rep.iter().enumerate() {
        if r != i {
            push_edge(&mut adjacency, i, r);
        }
    }

    let mut edge_count = 0;
    for list in &mut adjacency {
        list.sort_unstable();
        list.dedup();
        edge_count += list.len();
    }
    debug_assert_eq!(edge_count % 2, 0);
    edge_count /= 2;

    DelaunayTriangulation {
        adjacency,
        edge_count,
        triangles,
    }
}

impl DelaunayTriangulation {
    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Delaunay neighbors of point `i`, ascending.
    pub fn neighbors(&self, i: usize) -> Result<&[usize]> {
        self.adjacency
            .get(i)
            .map(|v| v.as_slice())
            .ok_or(Error::IndexOutOfRange {
                index: i,
                count: self.adjacency.len(),
            })
    }

    /// Full adjacency table, indexed by point.
    pub fn adjacency(&self) -> &[Vec<usize>] {
        &self.adjacency
    }

    /// Triangle vertex triples over representative points (duplicates and
    /// path-graph fallbacks contribute none).
    pub fn triangles(&self) -> &[[usize; 3]] {
        &self.triangles
    }
}
