//! Seeded instance generators. Every set is a deterministic function of
//! its spec, and random shapes are resampled until no pair sits within
//! the configured margin of the radius threshold, so edge membership is
//! never decided by the last bit of a squared distance.

use crate::geom::{squared_distance, Point, PointSet};
use crate::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shape {
    /// Uniform in the square [0, side]².
    UniformSquare,
    /// Row-major ⌈√n⌉-column lattice spanning [0, side]²; fully
    /// deterministic, and exempt from the threshold margin (a lattice may
    /// legitimately place pairs exactly at the radius).
    Grid,
    /// Uniform cluster centers with square-uniform local scatter.
    Clusters,
    /// Random positions on one horizontal line, exactly collinear.
    Collinear,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GenSpec {
    pub n: usize,
    pub shape: Shape,
    pub side: f64,
    pub seed: u64,
    /// Minimum allowed |squared_distance − radius²| for any pair.
    pub min_threshold_margin: f64,
    /// The radius the margin is measured against.
    pub radius: f64,
}

impl Default for GenSpec {
    fn default() -> Self {
        GenSpec {
            n: 1,
            shape: Shape::UniformSquare,
            side: 1.0,
            seed: 0,
            min_threshold_margin: 1e-9,
            radius: 1.0,
        }
    }
}

const MAX_RESAMPLE_ROUNDS: usize = 64;

/// Square side that gives a unit-disk graph on `n` uniform points an
/// expected degree near `target_degree` (boundary effects ignored).
pub fn side_for_degree(n: usize, r: f64, target_degree: f64) -> f64 {
    let pairs = n.saturating_sub(1) as f64;
    (r * (pairs * std::f64::consts::PI / target_degree).sqrt()).max(r * 1e-6)
}

/// How a shape produces the point at one index, for initial placement
/// and for redrawing margin victims.
type Redraw = Box<dyn FnMut(&mut ChaCha8Rng, usize) -> Point>;

/// Indices to redraw: the larger index of every pair whose squared
/// distance is within `margin` of `r²`. Buckets keep this near-linear;
/// any offending pair is closer than the bucket diagonal by construction.
fn margin_victims(points: &[Point], r: f64, margin: f64) -> Vec<usize> {
    let r_sq = r * r;
    // pairs beyond this distance cannot violate the margin
    let cell = (r_sq + 2.0 * margin).sqrt();
    let mut cells: HashMap<(i64, i64), Vec<usize>> = HashMap::new();
    for (i, p) in points.iter().enumerate() {
        cells
            .entry(((p.x / cell).floor() as i64, (p.y / cell).floor() as i64))
            .or_default()
            .push(i);
    }
    let mut victims = Vec::new();
    for (i, p) in points.iter().enumerate() {
        let (cx, cy) = ((p.x / cell).floor() as i64, (p.y / cell).floor() as i64);
        for dx in -1..=1 {
            for dy in -1..=1 {
                let Some(neighbors) = cells.get(&(cx + dx, cy + dy)) else {
                    continue;
                };
                for &j in neighbors {
                    if j > i && (squared_distance(*p, points[j]) - r_sq).abs() < margin {
                        victims.push(j);
                    }
                }
            }
        }
    }
    victims.sort_unstable();
    victims.dedup();
    victims
}

/// Generates the point set described by `spec`.
pub fn generate(spec: &GenSpec) -> Result<PointSet> {
    if spec.n == 0 {
        return Err(Error::EmptyPointSet);
    }
    if !spec.side.is_finite() || spec.side <= 0.0 {
        return Err(Error::InvalidSideLength(spec.side));
    }
    if spec.radius.is_nan() || spec.radius <= 0.0 {
        return Err(Error::NonPositiveRadius(spec.radius));
    }
    let n = spec.n;
    let side = spec.side;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);

    let mut redraw: Redraw = match spec.shape {
        Shape::Grid => {
            let columns = (n as f64).sqrt().ceil() as usize;
            let spacing = if columns > 1 {
                side / (columns - 1) as f64
            } else {
                0.0
            };
            let points = (0..n)
                .map(|i| {
                    Point::new(
                        (i % columns) as f64 * spacing,
                        (i / columns) as f64 * spacing,
                    )
                })
                .collect();
            return PointSet::new(points);
        }
        Shape::UniformSquare => Box::new(move |rng, _| {
            Point::new(rng.gen_range(0.0..=side), rng.gen_range(0.0..=side))
        }),
        Shape::Clusters => {
            let k = ((n as f64).sqrt() / 4.0).round().max(1.0) as usize;
            let centers: Vec<Point> = (0..k)
                .map(|_| Point::new(rng.gen_range(0.0..=side), rng.gen_range(0.0..=side)))
                .collect();
            let scatter = side / (2.0 * k as f64);
            Box::new(move |rng, i| {
                let c = centers[i % centers.len()];
                Point::new(
                    c.x + rng.gen_range(-scatter..=scatter),
                    c.y + rng.gen_range(-scatter..=scatter),
                )
            })
        }
        Shape::Collinear => {
            let y = side / 2.0;
            Box::new(move |rng, _| Point::new(rng.gen_range(0.0..=side), y))
        }
    };

    let mut points: Vec<Point> = (0..n).map(|i| redraw(&mut rng, i)).collect();
    if spec.min_threshold_margin > 0.0 {
        let mut settled = false;
        for _ in 0..MAX_RESAMPLE_ROUNDS {
            let victims = margin_victims(&points, spec.radius, spec.min_threshold_margin);
            if victims.is_empty() {
                settled = true;
                break;
            }
            for &i in &victims {
                points[i] = redraw(&mut rng, i);
            }
        }
        if !settled && !margin_victims(&points, spec.radius, spec.min_threshold_margin).is_empty()
        {
            return Err(Error::MarginInfeasible {
                attempts: MAX_RESAMPLE_ROUNDS,
            });
        }
    }
    PointSet::new(points)
}
