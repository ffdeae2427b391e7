//! Internal 2-d tree over (point, index) entries, shared by the static
//! nearest-neighbor index and the deletable red set of the closest-pair
//! structure.
//!
//! Layout is implicit: the tree over `nodes[lo..hi]` has its root at the
//! middle position, children in the two halves, and the split axis
//! alternates with depth. Queries minimize `(key(sqd), index)`
//! lexicographically for a caller-supplied key function that must be
//! monotone non-decreasing in the squared distance; pruning relies on that
//! monotonicity and keeps subtrees whose plane key ties the current best,
//! so index ties are resolved exactly as a linear scan would.

use crate::geom::{squared_distance, Point};

#[derive(Debug, Clone)]
struct Node {
    point: Point,
    index: usize,
    dead: bool,
}

#[derive(Debug, Clone)]
pub(crate) struct KdTree {
    nodes: Vec<Node>,
    // original point index -> position in `nodes`, usize::MAX when absent
    pos: Vec<usize>,
    live: usize,
}

fn layout(items: &mut [(Point, usize)], depth: usize) {
    if items.len() <= 1 {
        return;
    }
    let mid = items.len() / 2;
    if depth.is_multiple_of(2) {
        items.select_nth_unstable_by(mid, |a, b| {
            a.0.x.total_cmp(&b.0.x).then(a.1.cmp(&b.1))
        });
    } else {
        items.select_nth_unstable_by(mid, |a, b| {
            a.0.y.total_cmp(&b.0.y).then(a.1.cmp(&b.1))
        });
    }
    let (left, rest) = items.split_at_mut(mid);
    layout(left, depth + 1);
    layout(&mut rest[1..], depth + 1);
}

impl KdTree {
    /// Builds a tree over the given entries. Indices must be distinct.
    pub fn build(mut items: Vec<(Point, usize)>) -> Self {
        layout(&mut items, 0);
        let max_index = items.iter().map(|&(_, i)| i).max().map_or(0, |m| m + 1);
        let mut pos = vec![usize::MAX; max_index];
        let nodes: Vec<Node> = items
            .into_iter()
            .map(|(point, index)| Node {
                point,
                index,
                dead: false,
            })
            .collect();
        for (at, node) in nodes.iter().enumerate() {
            debug_assert_eq!(pos[node.index], usize::MAX, "duplicate index in kd build");
            pos[node.index] = at;
        }
        let live = nodes.len();
        KdTree { nodes, pos, live }
    }

    pub fn len(&self) -> usize {
        self.live
    }

    pub fn contains(&self, index: usize) -> bool {
        self.pos
            .get(index)
            .is_some_and(|&at| at != usize::MAX && !self.nodes[at].dead)
    }

    /// Marks `index` dead. Rebuilds over the live entries once more than
    /// half the stored nodes are tombstones, keeping queries proportional
    /// to the live size.
    pub fn delete(&mut self, index: usize) {
        let at = self.pos[index];
        debug_assert!(at != usize::MAX && !self.nodes[at].dead);
        self.nodes[at].dead = true;
        self.pos[index] = usize::MAX;
        self.live -= 1;
        if self.live * 2 < self.nodes.len() {
            let items: Vec<(Point, usize)> = self
                .nodes
                .iter()
                .filter(|n| !n.dead)
                .map(|n| (n.point, n.index))
                .collect();
            *self = KdTree::build(items);
        }
    }

    /// Live entry minimizing `(key(squared_distance(q, ·)), index)`.
    /// Returns `(index, key)`. `key` must be monotone non-decreasing.
    pub fn nearest_by<F>(&self, q: Point, key: &F) -> Option<(usize, f64)>
    where
        F: Fn(f64) -> f64,
    {
        if self.live == 0 {
            return None;
        }
        let mut best: Option<(f64, usize)> = None;
        self.search(0, self.nodes.len(), 0, q, key, &mut best);
        best.map(|(k, i)| (i, k))
    }

    fn search<F>(
        &self,
        lo: usize,
        hi: usize,
        depth: usize,
        q: Point,
        key: &F,
        best: &mut Option<(f64, usize)>,
    ) where
        F: Fn(f64) -> f64,
    {
        if lo >= hi {
            return;
        }
        let mid = lo + (hi - lo) / 2;
        let node = &self.nodes[mid];
        if !node.dead {
            let k = key(squared_distance(q, node.point));
            let better = match *best {
                None => true,
                Some((bk, bi)) => k < bk || (k == bk && node.index < bi),
            };
            if better {
                *best = Some((k, node.index));
            }
        }
        let split = if depth.is_multiple_of(2) {
            q.x - node.point.x
        } else {
            q.y - node.point.y
        };
        let (near_lo, near_hi, far_lo, far_hi) = if split < 0.0 {
            (lo, mid, mid + 1, hi)
        } else {
            (mid + 1, hi, lo, mid)
        };
        self.search(near_lo, near_hi, depth + 1, q, key, best);
        // Everything beyond the splitting line is at least |split| away, so
        // its key is at least key(split²); skip only when strictly worse
        // than the best, since an equal key could still win on index.
        let plane_key = key(split * split);
        let explore_far = match *best {
            None => true,
            Some((bk, _)) => plane_key <= bk,
        };
        if explore_far {
            self.search(far_lo, far_hi, depth + 1, q, key, best);
        }
    }
}
