//! Shared corpus builders and structural checkers for the integration
//! suites. Everything is deterministic: instances come from seeded
//! generators and every checker is a plain assertion.

#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use udg::delaunay::DelaunayTriangulation;
use udg::geom::{orientation, squared_distance, CirclePosition, Orientation};
use udg::oracle::gen::{generate, side_for_degree, GenSpec, Shape};
use udg::oracle::ExplicitGraph;
use udg::{Point, PointSet, ShortestPathTree};

pub const DIST_RTOL: f64 = 1e-9;
pub const EDGE_ATOL: f64 = 1e-12;

/// One corpus entry: a label for failure messages, the points, and the
/// radius to solve at.
pub struct Instance {
    pub label: String,
    pub ps: PointSet,
    pub radius: f64,
}

/// Appends `copies` duplicates of randomly chosen existing points.
pub fn with_duplicates(ps: &PointSet, copies: usize, seed: u64) -> PointSet {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<Point> = ps.iter().collect();
    for _ in 0..copies {
        let &p = points
            .choose(&mut rng)
            .expect("duplicating from a nonempty set");
        points.push(p);
    }
    PointSet::new(points).unwrap()
}

/// A mixed corpus of `count` instances with n up to `max_n`: uniform
/// squares swept over average degree, grids at several spacings, cluster
/// and collinear layouts, and duplicate-point variants, at several radii.
pub fn solver_corpus(count: usize, max_n: usize, base_seed: u64) -> Vec<Instance> {
    let sizes = [10usize, 25, 60, 150, 400, 1000, 2000];
    let degrees = [1.0, 5.0, 20.0, 50.0];
    let radii = [1.0, 1.0, 0.5, 2.0];
    let mut out = Vec::with_capacity(count);
    let mut i = 0usize;
    while out.len() < count {
        let seed = base_seed + i as u64;
        let n = sizes[i % sizes.len()].min(max_n);
        let radius = radii[i % radii.len()];
        let kind = i % 8;
        let inst = match kind {
            // uniform at a swept degree; most of the corpus
            0..=3 => {
                let degree = degrees[(i / 8) % degrees.len()];
                let ps = generate(&GenSpec {
                    n,
                    shape: Shape::UniformSquare,
                    side: side_for_degree(n, radius, degree),
                    seed,
                    radius,
                    ..GenSpec::default()
                })
                .unwrap();
                Instance {
                    label: format!("uniform n={n} deg={degree} r={radius} seed={seed}"),
                    ps,
                    radius,
                }
            }
            4 => {
                // spacing below, at, and above the radius
                let spacing = [0.7, 1.0, 1.42][(i / 8) % 3] * radius;
                let columns = (n as f64).sqrt().ceil().max(2.0);
                let ps = generate(&GenSpec {
                    n,
                    shape: Shape::Grid,
                    side: spacing * (columns - 1.0),
                    seed,
                    radius,
                    ..GenSpec::default()
                })
                .unwrap();
                Instance {
                    label: format!("grid n={n} spacing={spacing} r={radius}"),
                    ps,
                    radius,
                }
            }
            5 => {
                let ps = generate(&GenSpec {
                    n,
                    shape: Shape::Clusters,
                    side: side_for_degree(n, radius, 12.0),
                    seed,
                    radius,
                    ..GenSpec::default()
                })
                .unwrap();
                Instance {
                    label: format!("clusters n={n} r={radius} seed={seed}"),
                    ps,
                    radius,
                }
            }
            6 => {
                // mean gap sweeps through the radius: some instances
                // connected end to end, others broken into runs
                let gap = [0.4, 0.9, 1.3][(i / 8) % 3] * radius;
                let ps = generate(&GenSpec {
                    n,
                    shape: Shape::Collinear,
                    side: gap * n as f64,
                    seed,
                    radius,
                    ..GenSpec::default()
                })
                .unwrap();
                Instance {
                    label: format!("collinear n={n} gap={gap} r={radius} seed={seed}"),
                    ps,
                    radius,
                }
            }
            _ => {
                let base = generate(&GenSpec {
                    n,
                    shape: Shape::UniformSquare,
                    side: side_for_degree(n, radius, 8.0),
                    seed,
                    radius,
                    ..GenSpec::default()
                })
                .unwrap();
                let ps = with_duplicates(&base, (n / 10).max(2), seed ^ 0x9e37);
                Instance {
                    label: format!("duplicates n={} r={radius} seed={seed}", ps.len()),
                    ps,
                    radius,
                }
            }
        };
        out.push(inst);
        i += 1;
    }
    out
}

/// Exact unweighted comparison: hop counts equal the oracle everywhere,
/// and every parent edge steps down one level within the radius.
pub fn check_unweighted_tree(
    ps: &PointSet,
    tree: &ShortestPathTree,
    oracle: &ShortestPathTree,
    radius: f64,
    label: &str,
) {
    assert_eq!(tree.dist.len(), ps.len(), "{label}");
    let r_sq = radius * radius;
    for v in 0..ps.len() {
        assert!(
            tree.dist[v] == oracle.dist[v] || (tree.dist[v].is_infinite() && oracle.dist[v].is_infinite()),
            "{label}: point {v} dist {} vs oracle {}",
            tree.dist[v],
            oracle.dist[v]
        );
        match tree.parent[v] {
            None => assert!(
                v == tree.source || tree.dist[v].is_infinite(),
                "{label}: point {v} reached without a parent"
            ),
            Some(u) => {
                assert_ne!(v, tree.source, "{label}: source has a parent");
                assert_eq!(
                    tree.dist[u],
                    tree.dist[v] - 1.0,
                    "{label}: parent of {v} not one level up"
                );
                assert!(
                    squared_distance(ps.point(v), ps.point(u)) <= r_sq,
                    "{label}: parent edge {u}->{v} out of range"
                );
            }
        }
    }
    tree.check_structure(ps).unwrap();
}

/// Weighted comparison: distances within 1e-9 relative of the oracle,
/// parent edges within range and tight to 1e-12.
pub fn check_weighted_tree(
    ps: &PointSet,
    tree: &ShortestPathTree,
    oracle: &ShortestPathTree,
    radius: f64,
    label: &str,
) {
    assert_eq!(tree.dist.len(), ps.len(), "{label}");
    let r_sq = radius * radius;
    for v in 0..ps.len() {
        let d = tree.dist[v];
        let o = oracle.dist[v];
        if o.is_finite() || d.is_finite() {
            assert!(
                d.is_finite() && o.is_finite(),
                "{label}: point {v} reachability disagrees (solver {d}, oracle {o})"
            );
            assert!(
                (d - o).abs() <= DIST_RTOL * o.max(1.0),
                "{label}: point {v} dist {d} vs oracle {o}"
            );
        }
        match tree.parent[v] {
            None => assert!(
                v == tree.source || d.is_infinite(),
                "{label}: point {v} reached without a parent"
            ),
            Some(u) => {
                assert_ne!(v, tree.source, "{label}: source has a parent");
                let sqd = squared_distance(ps.point(v), ps.point(u));
                assert!(sqd <= r_sq, "{label}: parent edge {u}->{v} out of range");
                assert!(
                    (d - (tree.dist[u] + sqd.sqrt())).abs() <= EDGE_ATOL,
                    "{label}: parent edge {u}->{v} not tight"
                );
            }
        }
    }
    tree.check_structure(ps).unwrap();
}

fn coord_key(p: Point) -> (u64, u64) {
    let norm = |v: f64| if v == 0.0 { 0.0f64 } else { v }.to_bits();
    (norm(p.x), norm(p.y))
}

/// Structural and geometric validity of a triangulation:
/// adjacency symmetric, sorted, self-loop free; handshake; the edge set
/// is exactly the triangle edges plus one star edge per duplicate;
/// every triangle is nondegenerate with an exactly-empty circumcircle;
/// the planarity bound holds over distinct coordinates; the graph spans
/// all points; and collinear inputs yield the path along the line.
pub fn check_delaunay(ps: &PointSet, dt: &DelaunayTriangulation, label: &str) {
    let n = ps.len();
    assert_eq!(dt.vertex_count(), n, "{label}");
    let adjacency = dt.adjacency();

    let mut degree_total = 0usize;
    for (v, list) in adjacency.iter().enumerate() {
        degree_total += list.len();
        assert!(
            list.windows(2).all(|w| w[0] < w[1]),
            "{label}: neighbors of {v} not strictly ascending"
        );
        for &u in list {
            assert_ne!(u, v, "{label}: self loop at {v}");
            assert!(
                adjacency[u].binary_search(&v).is_ok(),
                "{label}: edge {v}->{u} not symmetric"
            );
        }
    }
    assert_eq!(degree_total, 2 * dt.edge_count(), "{label}: handshake");

    // group duplicates
    let mut groups: std::collections::BTreeMap<(u64, u64), Vec<usize>> =
        std::collections::BTreeMap::new();
    for i in 0..n {
        groups.entry(coord_key(ps.point(i))).or_default().push(i);
    }
    let reps: Vec<usize> = groups.values().map(|g| g[0]).collect();
    let m = reps.len();
    let dup_edges = n - m;

    // the edge set must be exactly: triangle edges + duplicate stars
    let mut expected: std::collections::BTreeSet<(usize, usize)> = std::collections::BTreeSet::new();
    for t in dt.triangles() {
        for (a, b) in [(t[0], t[1]), (t[1], t[2]), (t[2], t[0])] {
            expected.insert((a.min(b), a.max(b)));
        }
    }
    for group in groups.values() {
        for &d in &group[1..] {
            expected.insert((group[0].min(d), group[0].max(d)));
        }
    }
    let mut actual: std::collections::BTreeSet<(usize, usize)> = std::collections::BTreeSet::new();
    for (v, list) in adjacency.iter().enumerate() {
        for &u in list {
            actual.insert((u.min(v), u.max(v)));
        }
    }
    // collinear inputs have no triangles; their path edges are checked below
    let all_collinear = dt.triangles().is_empty();
    if !all_collinear {
        assert_eq!(actual, expected, "{label}: edge set vs triangles+stars");
    }

    // planarity over the distinct coordinates
    let triangle_edge_bound = if m >= 3 { 3 * m - 6 } else { m.saturating_sub(1) };
    assert!(
        dt.edge_count() <= triangle_edge_bound + dup_edges,
        "{label}: {} edges exceeds planar bound {triangle_edge_bound} + {dup_edges} stars",
        dt.edge_count()
    );

    // spanning connectivity over every index, duplicates included
    let mut seen = vec![false; n];
    let mut queue = std::collections::VecDeque::from([0usize]);
    seen[0] = true;
    let mut visited = 1usize;
    while let Some(v) = queue.pop_front() {
        for &u in &adjacency[v] {
            if !seen[u] {
                seen[u] = true;
                visited += 1;
                queue.push_back(u);
            }
        }
    }
    assert_eq!(visited, n, "{label}: triangulation graph not spanning");

    // exact empty-circumcircle check, brute force over all points
    for t in dt.triangles() {
        let (a, b, c) = (ps.point(t[0]), ps.point(t[1]), ps.point(t[2]));
        assert_ne!(
            orientation(a, b, c),
            Orientation::Collinear,
            "{label}: degenerate triangle {t:?}"
        );
        for q in 0..n {
            if t.contains(&q) {
                continue;
            }
            let pos = udg::geom::incircle(a, b, c, ps.point(q)).unwrap();
            assert_ne!(
                pos,
                CirclePosition::Inside,
                "{label}: point {q} strictly inside circumcircle of {t:?}"
            );
        }
    }

    if all_collinear && m >= 2 {
        // reps must form the path in coordinate order
        let mut sorted = reps.clone();
        sorted.sort_by(|&a, &b| {
            let (p, q) = (ps.point(a), ps.point(b));
            p.x.total_cmp(&q.x).then(p.y.total_cmp(&q.y))
        });
        for w in sorted.windows(2) {
            assert!(
                adjacency[w[0]].contains(&w[1]),
                "{label}: collinear path missing edge {}-{}",
                w[0],
                w[1]
            );
        }
        assert_eq!(
            dt.edge_count(),
            m - 1 + dup_edges,
            "{label}: collinear edge count"
        );
    }
}

/// Levels of `tree` must partition the reachable set identically to the
/// oracle's BFS levels.
pub fn check_levels_match(tree: &ShortestPathTree, oracle: &ShortestPathTree, label: &str) {
    let mine = tree.levels();
    let mut seen = std::collections::BTreeSet::new();
    for level in &mine {
        for &v in level {
            assert!(seen.insert(v), "{label}: point {v} in two levels");
        }
    }
    let max_oracle = oracle
        .dist
        .iter()
        .filter(|d| d.is_finite())
        .fold(0.0f64, |a, &b| a.max(b)) as usize;
    assert_eq!(mine.len(), max_oracle + 1, "{label}: level count");
    for (i, level) in mine.iter().enumerate() {
        let expected: Vec<usize> = (0..oracle.dist.len())
            .filter(|&v| oracle.dist[v] == i as f64)
            .collect();
        let mut got = level.clone();
        got.sort_unstable();
        assert_eq!(got, expected, "{label}: level {i} membership");
    }
}

/// Reachable set must equal the union-find component of the source.
pub fn check_connectivity(g: &ExplicitGraph, tree: &ShortestPathTree, label: &str) {
    let component = udg::oracle::connected_from(g, tree.source).unwrap();
    let reached = tree.reached_points();
    assert_eq!(reached, component, "{label}: reachable set vs union-find");
}

/// One random closest-pair operation sequence over `ps`: a random
/// initial red set, then interleaved blue insertions/deletions, red
/// deletions, and min_pair queries, each query checked exactly against
/// the quadratic scan. Returns the number of operations performed.
pub fn drive_wbcp(ps: &PointSet, seed: u64, ops: usize) -> usize {
    use rand::Rng;
    use udg::oracle::naive_bcp;
    use udg::wbcp::{WbcpIndex, WeightedBlue};

    let n = ps.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut shuffled: Vec<usize> = (0..n).collect();
    shuffled.shuffle(&mut rng);
    let red_count = rng.gen_range(1..=n.max(2) - 1);
    let mut reds: Vec<usize> = shuffled[..red_count].to_vec();
    let mut free: Vec<usize> = shuffled[red_count..].to_vec();
    let mut blues: Vec<WeightedBlue> = Vec::new();

    let mut idx = WbcpIndex::new(ps, &[], &reds).unwrap();
    let mut ran = 0;
    for _ in 0..ops {
        match rng.gen_range(0u8..10) {
            // blue insertions likelier than deletions so the set grows
            0..=3 => {
                if !free.is_empty() {
                    let i = free.swap_remove(rng.gen_range(0..free.len()));
                    let weight = rng.gen_range(0.0..3.0);
                    idx.insert_blue(WeightedBlue { index: i, weight }).unwrap();
                    blues.push(WeightedBlue { index: i, weight });
                }
            }
            4 => {
                if !blues.is_empty() {
                    let b = blues.swap_remove(rng.gen_range(0..blues.len()));
                    idx.delete_blue(b.index).unwrap();
                    free.push(b.index);
                }
            }
            5 => {
                if !reds.is_empty() {
                    let r = reds.swap_remove(rng.gen_range(0..reds.len()));
                    idx.delete_red(r).unwrap();
                    free.push(r);
                }
            }
            _ => {
                let expected = naive_bcp(ps, &blues, &reds);
                let got = idx.min_pair();
                match (expected, got) {
                    (None, None) => {}
                    (Some((b, r, d)), Some((gb, gr, gd))) => {
                        assert_eq!((b, r), (gb, gr), "pair mismatch at op {ran}");
                        assert_eq!(d, gd, "delta mismatch at op {ran}");
                    }
                    (e, g) => panic!("presence mismatch at op {ran}: oracle {e:?}, index {g:?}"),
                }
            }
        }
        ran += 1;
        assert!(
            idx.residency_within_bound(),
            "candidate store exceeded its declared bound at op {ran}"
        );
    }
    ran
}
