//! Brute-force references: the explicit disk graph the main solvers never
//! build, textbook searches over it, union-find connectivity, and a
//! quadratic closest-pair scan. Correctness anchors only; nothing here is
//! fast, everything here is obviously right.

pub mod gen;

use crate::geom::{squared_distance, PointSet};
use crate::tree::ShortestPathTree;
use crate::wbcp::WeightedBlue;
use crate::{Error, Result};
use std::cmp::Ordering;
use std::collections::{BinaryHeap, VecDeque};

/// The disk graph with every edge materialized: adjacency lists of
/// (neighbor, Euclidean length), ascending by neighbor.
#[derive(Debug, Clone)]
pub struct ExplicitGraph {
    pub n: usize,
    pub adjacency: Vec<Vec<(usize, f64)>>,
}

impl ExplicitGraph {
    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(|a| a.len()).sum::<usize>() / 2
    }
}

/// O(n²) construction by the definition: an edge wherever the squared
/// distance is at most r².
pub fn build_explicit(ps: &PointSet, r: f64) -> Result<ExplicitGraph> {
    if r.is_nan() || r <= 0.0 {
        return Err(Error::NonPositiveRadius(r));
    }
    let r_sq = r * r;
    let n = ps.len();
    let mut adjacency: Vec<Vec<(usize, f64)>> = vec![Vec::new(); n];
    for i in 0..n {
        for j in (i + 1)..n {
            let sqd = squared_distance(ps.point(i), ps.point(j));
            if sqd <= r_sq {
                let w = sqd.sqrt();
                adjacency[i].push((j, w));
                adjacency[j].push((i, w));
            }
        }
    }
    Ok(ExplicitGraph { n, adjacency })
}

/// Same graph as `build_explicit`, built through a grid of r-sized
/// buckets so large dense instances stay affordable: candidate pairs come
/// only from the 3x3 bucket neighborhood, which covers every pair within
/// distance r.
pub fn build_explicit_bucketed(ps: &PointSet, r: f64) -> Result<ExplicitGraph> {
    if r.is_nan() || r <= 0.0 {
        return Err(Error::NonPositiveRadius(r));
    }
    let r_sq = r * r;
    let n = ps.len();
    let mut cells: std::collections::HashMap<(i64, i64), Vec<usize>> =
        std::collections::HashMap::new();
    let key = |p: crate::geom::Point| ((p.x / r).floor() as i64, (p.y / r).floor() as i64);
    for i in 0..n {
        cells.entry(key(ps.point(i))).or_default().push(i);
    }
    let mut adjacency: Vec<Vec<(usize, f64)>> = vec![Vec::new(); n];
    for i in 0..n {
        let p = ps.point(i);
        let (cx, cy) = key(p);
        for dx in -1..=1 {
            for dy in -1..=1 {
                let Some(candidates) = cells.get(&(cx + dx, cy + dy)) else {
                    continue;
                };
                for &j in candidates {
                    if j > i {
                        let sqd = squared_distance(p, ps.point(j));
                        if sqd <= r_sq {
                            let w = sqd.sqrt();
                            adjacency[i].push((j, w));
                            adjacency[j].push((i, w));
                        }
                    }
                }
            }
        }
    }
    for list in &mut adjacency {
        list.sort_unstable_by_key(|e| e.0);
    }
    Ok(ExplicitGraph { n, adjacency })
}

fn check_vertex(g: &ExplicitGraph, s: usize) -> Result<()> {
    if s < g.n {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange {
            index: s,
            count: g.n,
        })
    }
}

/// Hop distances by breadth-first search, neighbors visited ascending.
pub fn bfs_oracle(g: &ExplicitGraph, s: usize) -> Result<ShortestPathTree> {
    check_vertex(g, s)?;
    let mut tree = ShortestPathTree::new_unreached(s, g.n);
    let mut queue = VecDeque::from([s]);
    while let Some(v) = queue.pop_front() {
        for &(u, _) in &g.adjacency[v] {
            if tree.dist[u].is_infinite() {
                tree.dist[u] = tree.dist[v] + 1.0;
                tree.parent[u] = Some(v);
                queue.push_back(u);
            }
        }
    }
    Ok(tree)
}

#[derive(PartialEq)]
struct HeapItem {
    dist: f64,
    vertex: usize,
}

impl Eq for HeapItem {}

impl Ord for HeapItem {
    fn cmp(&self, other: &Self) -> Ordering {
        // reversed for a min-heap; ties settle the smaller index first
        other
            .dist
            .total_cmp(&self.dist)
            .then_with(|| other.vertex.cmp(&self.vertex))
    }
}

impl PartialOrd for HeapItem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Euclidean distances by Dijkstra with lazy deletion.
pub fn dijkstra_oracle(g: &ExplicitGraph, s: usize) -> Result<ShortestPathTree> {
    check_vertex(g, s)?;
    let mut tree = ShortestPathTree::new_unreached(s, g.n);
    let mut heap = BinaryHeap::from([HeapItem { dist: 0.0, vertex: s }]);
    let mut settled = vec![false; g.n];
    while let Some(HeapItem { dist, vertex }) = heap.pop() {
        if settled[vertex] {
            continue;
        }
        settled[vertex] = true;
        debug_assert_eq!(dist, tree.dist[vertex]);
        for &(u, w) in &g.adjacency[vertex] {
            let candidate = dist + w;
            if candidate < tree.dist[u] {
                tree.dist[u] = candidate;
                tree.parent[u] = Some(vertex);
                heap.push(HeapItem {
                    dist: candidate,
                    vertex: u,
                });
            }
        }
    }
    Ok(tree)
}

struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    fn union(&mut self, a: usize, b: usize) {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
    }
}

/// Vertices in the same connected component as `s`, ascending, decided by
/// union-find rather than any search.
pub fn connected_from(g: &ExplicitGraph, s: usize) -> Result<Vec<usize>> {
    check_vertex(g, s)?;
    let mut uf = UnionFind::new(g.n);
    for v in 0..g.n {
        for &(u, _) in &g.adjacency[v] {
            uf.union(v, u);
        }
    }
    let root = uf.find(s);
    Ok((0..g.n).filter(|&v| uf.find(v) == root).collect())
}

/// Closest weighted pair by full scan: the argmin of weight(b) + ‖r−b‖
/// over all blue/red combinations, ties to (smaller blue, smaller red).
pub fn naive_bcp(
    ps: &PointSet,
    blues: &[WeightedBlue],
    reds: &[usize],
) -> Option<(usize, usize, f64)> {
    let mut best: Option<(f64, usize, usize)> = None;
    for b in blues {
        for &r in reds {
            let delta =
                b.weight + squared_distance(ps.point(b.index), ps.point(r)).sqrt();
            let better = match best {
                None => true,
                Some((bd, bb, br)) => match delta.total_cmp(&bd) {
                    Ordering::Less => true,
                    Ordering::Greater => false,
                    Ordering::Equal => (b.index, r) < (bb, br),
                },
            };
            if better {
                best = Some((delta, b.index, r));
            }
        }
    }
    best.map(|(d, b, r)| (b, r, d))
}
