//! Sweep-circle triangulation core over a slice of distinct points.
//!
//! Points are inserted in order of distance from a fixed center, each new
//! point extending the advancing convex hull; new triangles are legalized
//! by exact in-circle flips. All orientation decisions are exact, so the
//! only floating-point quantities that influence the result are the
//! insertion order and the hull hash, and both only affect which of the
//! equally valid triangulations comes out for cocircular inputs.
//!
//! Triangles are stored clockwise. `triangles` holds vertex indices three
//! per triangle, `halfedges[e]` the opposite halfedge or `EMPTY` on the
//! hull boundary.

use crate::geom::{incircle_det, orientation, squared_distance, Orientation, Point};
use std::cmp::Ordering;

pub(super) const EMPTY: usize = usize::MAX;

pub(super) struct Sweep {
    pub triangles: Vec<usize>,
    pub halfedges: Vec<usize>,
}

#[inline]
fn next_halfedge(e: usize) -> usize {
    if e % 3 == 2 {
        e - 2
    } else {
        e + 1
    }
}

#[inline]
fn prev_halfedge(e: usize) -> usize {
    if e.is_multiple_of(3) {
        e + 2
    } else {
        e - 1
    }
}

#[inline]
fn ccw(a: Point, b: Point, c: Point) -> bool {
    orientation(a, b, c) == Orientation::CounterClockwise
}

/// Squared circumradius, selection heuristic only: the seed triangle wants
/// the pair's tightest companion. Exactness is irrelevant here, candidates
/// are pre-filtered by exact orientation.
fn circumradius_sq(a: Point, b: Point, c: Point) -> f64 {
    let dx = b.x - a.x;
    let dy = b.y - a.y;
    let ex = c.x - a.x;
    let ey = c.y - a.y;
    let bl = dx * dx + dy * dy;
    let cl = ex * ex + ey * ey;
    let det = dx * ey - dy * ex;
    let x = (ey * bl - dy * cl) * (0.5 / det);
    let y = (dx * cl - ex * bl) * (0.5 / det);
    x * x + y * y
}

fn circumcenter(a: Point, b: Point, c: Point) -> Point {
    let dx = b.x - a.x;
    let dy = b.y - a.y;
    let ex = c.x - a.x;
    let ey = c.y - a.y;
    let bl = dx * dx + dy * dy;
    let cl = ex * ex + ey * ey;
    let det = dx * ey - dy * ex;
    let x = (ey * bl - dy * cl) * (0.5 / det);
    let y = (dx * cl - ex * bl) * (0.5 / det);
    Point::new(a.x + x, a.y + y)
}

/// Exact comparison of squared distances to `c`, used when the `f64` keys
/// are too close to trust. Rational arithmetic over the exact coordinate
/// values; only reached for a vanishing fraction of pairs.
fn exact_key_cmp(p: Point, q: Point, c: Point) -> Ordering {
    use num_rational::BigRational;
    let key = |t: Point| {
        let dx = BigRational::from_float(t.x).unwrap() - BigRational::from_float(c.x).unwrap();
        let dy = BigRational::from_float(t.y).unwrap() - BigRational::from_float(c.y).unwrap();
        &dx * &dx + &dy * &dy
    };
    key(p).cmp(&key(q))
}

/// Insertion-order comparison: by squared distance to the sort center,
/// exactly. The sweep's correctness argument needs a processed point to
/// never land inside or on the hull of earlier points, which holds when
/// the order agrees with the exact distances; `f64` keys settle every pair
/// outside a narrow relative band, the band falls back to exact
/// arithmetic.
fn key_cmp(ka: f64, kb: f64, pa: Point, pb: Point, c: Point) -> Ordering {
    let scale = ka.max(kb);
    if (ka - kb).abs() <= 1e-13 * scale {
        exact_key_cmp(pa, pb, c)
    } else {
        ka.total_cmp(&kb)
    }
}

// Monotone in true angle without trigonometry; range [0, 1).
fn pseudo_angle(dx: f64, dy: f64) -> f64 {
    let p = dx / (dx.abs() + dy.abs());
    if dy > 0.0 {
        (3.0 - p) / 4.0
    } else {
        (1.0 + p) / 4.0
    }
}

struct Hull {
    prev: Vec<usize>,
    next: Vec<usize>,
    // a halfedge such that tri[v] starts at hull vertex v, kept current
    tri: Vec<usize>,
    hash: Vec<usize>,
    start: usize,
    center: Point,
}

impl Hull {
    fn new(n: usize, center: Point, i0: usize, i1: usize, i2: usize, points: &[Point]) -> Self {
        let hash_len = (n as f64).sqrt().ceil() as usize;
        let mut hull = Hull {
            prev: vec![0; n],
            next: vec![0; n],
            tri: vec![0; n],
            hash: vec![EMPTY; hash_len],
            start: i0,
            center,
        };
        hull.next[i0] = i1;
        hull.prev[i2] = i1;
        hull.next[i1] = i2;
        hull.prev[i0] = i2;
        hull.next[i2] = i0;
        hull.prev[i1] = i0;
        hull.tri[i0] = 0;
        hull.tri[i1] = 1;
        hull.tri[i2] = 2;
        hull.hash_edge(points[i0], i0);
        hull.hash_edge(points[i1], i1);
        hull.hash_edge(points[i2], i2);
        hull
    }

    fn hash_key(&self, p: Point) -> usize {
        let angle = pseudo_angle(p.x - self.center.x, p.y - self.center.y);
        let len = self.hash.len();
        let k = (angle * len as f64).floor() as usize;
        if k >= len {
            k % len
        } else {
            k
        }
    }

    fn hash_edge(&mut self, p: Point, i: usize) {
        let key = self.hash_key(p);
        self.hash[key] = i;
    }

    /// Hull vertex `e` such that `p` lies strictly outside the edge
    /// `e -> next[e]`, plus whether the walk started at the probe's own
    /// start (the caller then also walks backwards).
    ///
    /// Every inserted point is strictly outside the current hull because
    /// insertion order follows exact distances from the center, so the
    /// walk always terminates at a visible edge.
    fn find_visible_edge(&self, p: Point, points: &[Point]) -> (usize, bool) {
        let mut start = EMPTY;
        let key = self.hash_key(p);
        let len = self.hash.len();
        for j in 0..len {
            let candidate = self.hash[(key + j) % len];
            // next[x] == x marks a vertex spliced out of the hull
            if candidate != EMPTY && candidate != self.next[candidate] {
                start = candidate;
                break;
            }
        }
        if start == EMPTY {
            start = self.start; // hash table entirely stale, rare
        }
        start = self.prev[start];
        let mut e = start;
        loop {
            let q = self.next[e];
            if ccw(p, points[e], points[q]) {
                return (e, e == start);
            }
            e = q;
            assert!(
                e != start,
                "no hull edge visible from an inserted point; \
                 input exceeds the supported coordinate range"
            );
        }
    }
}

impl Sweep {
    fn with_capacity(n: usize) -> Self {
        let max_triangles = 2 * n - 5;
        Sweep {
            triangles: Vec::with_capacity(max_triangles * 3),
            halfedges: Vec::with_capacity(max_triangles * 3),
        }
    }

    fn link(&mut self, a: usize, b: usize) {
        let s = self.halfedges.len();
        if a == s {
            self.halfedges.push(b);
        } else {
            debug_assert!(a < s);
            self.halfedges[a] = b;
        }
        if b != EMPTY {
            let s = self.halfedges.len();
            if b == s {
                self.halfedges.push(a);
            } else {
                debug_assert!(b < s);
                self.halfedges[b] = a;
            }
        }
    }

    fn add_triangle(
        &mut self,
        i0: usize,
        i1: usize,
        i2: usize,
        a: usize,
        b: usize,
        c: usize,
    ) -> usize {
        let t = self.triangles.len();
        self.triangles.push(i0);
        self.triangles.push(i1);
        self.triangles.push(i2);
        self.link(t, a);
        self.link(t + 1, b);
        self.link(t + 2, c);
        t
    }

    /// Restores the in-circle condition around the newly added halfedge
    /// `p` by flipping illegal edges, cascading outward. Exactly cocircular
    /// quads are legal as-is and never flip, which also guarantees
    /// termination.
    fn legalize(&mut self, p: usize, points: &[Point], hull: &mut Hull) -> usize {
        let mut a = p;
        let mut ar;
        let mut edge_stack: Vec<usize> = Vec::new();
        loop {
            let b = self.halfedges[a];
            ar = prev_halfedge(a);

            if b == EMPTY {
                match edge_stack.pop() {
                    Some(e) => {
                        a = e;
                        continue;
                    }
                    None => break,
                }
            }

            let al = next_halfedge(a);
            let bl = prev_halfedge(b);

            let p0 = self.triangles[ar];
            let pr = self.triangles[a];
            let pl = self.triangles[al];
            let p1 = self.triangles[bl];

            // triangles are clockwise, so strictly inside means a negative
            // determinant
            let illegal = incircle_det(points[p0], points[pr], points[pl], points[p1]) < 0.0;
            if illegal {
                self.triangles[a] = p1;
                self.triangles[b] = p0;

                let hbl = self.halfedges[bl];

                // the flipped edge bordered the hull: repoint the hull's
                // triangle reference
                if hbl == EMPTY {
                    let mut e = hull.start;
                    loop {
                        if hull.tri[e] == bl {
                            hull.tri[e] = a;
                            break;
                        }
                        e = hull.prev[e];
                        if e == hull.start {
                            break;
                        }
                    }
                }

                self.link(a, hbl);
                self.link(b, self.halfedges[ar]);
                self.link(ar, bl);

                edge_stack.push(next_halfedge(b));
            } else {
                match edge_stack.pop() {
                    Some(e) => {
                        a = e;
                        continue;
                    }
                    None => break,
                }
            }
        }
        ar
    }
}

/// Seed triangle: the point nearest the bounding-box center, its nearest
/// companion, and the exactly non-collinear third point minimizing the
/// circumradius. `None` when every point lies on one line.
fn find_seed(points: &[Point]) -> Option<(usize, usize, usize)> {
    let mut min = Point::new(f64::INFINITY, f64::INFINITY);
    let mut max = Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
    for p in points {
        min.x = min.x.min(p.x);
        min.y = min.y.min(p.y);
        max.x = max.x.max(p.x);
        max.y = max.y.max(p.y);
    }
    let c = Point::new((min.x + max.x) / 2.0, (min.y + max.y) / 2.0);

    let nearest_to = |q: Point, skip: &[usize]| -> usize {
        let mut best = (f64::INFINITY, EMPTY);
        for (i, &p) in points.iter().enumerate() {
            if skip.contains(&i) {
                continue;
            }
            let d = squared_distance(q, p);
            if d < best.0 {
                best = (d, i);
            }
        }
        best.1
    };

    let i0 = nearest_to(c, &[]);
    let p0 = points[i0];
    let mut i1 = nearest_to(p0, &[i0]);
    let p1 = points[i1];

    let mut best: Option<(f64, usize)> = None;
    for (i, &p) in points.iter().enumerate() {
        if i == i0 || i == i1 {
            continue;
        }
        if orientation(p0, p1, p) == Orientation::Collinear {
            continue;
        }
        let r = circumradius_sq(p0, p1, p);
        let better = match best {
            None => true,
            Some((br, _)) => r < br,
        };
        if better {
            best = Some((r, i));
        }
    }
    let mut i2 = best?.1;

    // clockwise seed, matching the triangle orientation used throughout
    if ccw(p0, points[i1], points[i2]) {
        std::mem::swap(&mut i1, &mut i2);
    }
    Some((i0, i1, i2))
}

/// Triangulates distinct points. `None` when no triangle exists (fewer
/// than three points, or all points on one line); the caller then builds
/// the path graph instead.
pub(super) fn triangulate(points: &[Point]) -> Option<Sweep> {
    if points.len() < 3 {
        return None;
    }
    let (i0, i1, i2) = find_seed(points)?;

    let mut center = circumcenter(points[i0], points[i1], points[i2]);
    if !center.is_finite() {
        // nearly degenerate seed on an extreme input: any fixed center
        // keeps the insertion-order argument valid
        let mut min = Point::new(f64::INFINITY, f64::INFINITY);
        let mut max = Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        for p in points {
            min.x = min.x.min(p.x);
            min.y = min.y.min(p.y);
            max.x = max.x.max(p.x);
            max.y = max.y.max(p.y);
        }
        center = Point::new((min.x + max.x) / 2.0, (min.y + max.y) / 2.0);
    }

    let mut order: Vec<(usize, f64)> = points
        .iter()
        .enumerate()
        .map(|(i, &p)| (i, squared_distance(p, center)))
        .collect();
    order.sort_unstable_by(|&(ia, ka), &(ib, kb)| {
        key_cmp(ka, kb, points[ia], points[ib], center).then(ia.cmp(&ib))
    });

    let mut hull = Hull::new(points.len(), center, i0, i1, i2, points);
    let mut sweep = Sweep::with_capacity(points.len());
    sweep.add_triangle(i0, i1, i2, EMPTY, EMPTY, EMPTY);

    for &(i, _) in &order {
        if i == i0 || i == i1 || i == i2 {
            continue;
        }
        let p = points[i];

        let (mut e, walk_back) = hull.find_visible_edge(p, points);

        let mut t = sweep.add_triangle(e, i, hull.next[e], EMPTY, EMPTY, hull.tri[e]);
        hull.tri[i] = sweep.legalize(t + 2, points, &mut hull);
        hull.tri[e] = t;

        // widen forward along the hull while the next edge stays visible
        let mut next = hull.next[e];
        loop {
            let q = hull.next[next];
            if !ccw(p, points[next], points[q]) {
                break;
            }
            t = sweep.add_triangle(next, i, q, hull.tri[i], EMPTY, hull.tri[next]);
            hull.tri[i] = sweep.legalize(t + 2, points, &mut hull);
            hull.next[next] = next; // spliced out
            next = q;
        }

        // and backward, only possible when the walk began at the probe
        if walk_back {
            loop {
                let q = hull.prev[e];
                if !ccw(p, points[q], points[e]) {
                    break;
                }
                t = sweep.add_triangle(q, i, e, EMPTY, hull.tri[e], hull.tri[q]);
                sweep.legalize(t + 2, points, &mut hull);
                hull.tri[q] = t;
                hull.next[e] = e; // spliced out
                e = q;
            }
        }

        hull.prev[i] = e;
        hull.next[e] = i;
        hull.prev[next] = i;
        hull.next[i] = next;
        hull.start = e;

        hull.hash_edge(p, i);
        hull.hash_edge(points[e], e);
    }

    Some(sweep)
}
