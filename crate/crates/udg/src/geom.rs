//! Planar points and the exact predicates everything else is built on.
//!
//! Orientation and in-circle tests go through adaptive-precision floating
//! point evaluation with an exact fallback, so their signs are correct for
//! every representable input. Distance *threshold* tests deliberately stay
//! in plain `f64`: edge membership compares squared distances against `r²`
//! and the generated corpora keep point pairs away from the threshold.

use crate::{Error, Result};

/// A point in the plane. Coordinates are finite `f64` values.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl From<(f64, f64)> for Point {
    fn from((x, y): (f64, f64)) -> Self {
        Point { x, y }
    }
}

/// Squared Euclidean distance between `a` and `b`.
///
/// Threshold tests compare this against `r²`, avoiding the square root.
#[inline]
pub fn squared_distance(a: Point, b: Point) -> f64 {
    let dx = a.x - b.x;
    let dy = a.y - b.y;
    dx * dx + dy * dy
}

/// Euclidean distance between `a` and `b`.
#[inline]
pub fn distance(a: Point, b: Point) -> f64 {
    squared_distance(a, b).sqrt()
}

/// An immutable, indexed set of input points. Indices `0..len()` are the
/// canonical point identifiers used across the whole crate.
#[derive(Debug, Clone, PartialEq)]
pub struct PointSet {
    points: Vec<Point>,
}

impl PointSet {
    /// Wraps the given points, rejecting empty input and non-finite
    /// coordinates.
    pub fn new(points: Vec<Point>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyPointSet);
        }
        for (index, p) in points.iter().enumerate() {
            if !p.is_finite() {
                return Err(Error::NonFiniteCoordinate {
                    index,
                    x: p.x,
                    y: p.y,
                });
            }
        }
        Ok(PointSet { points })
    }

    pub fn from_coords(coords: &[(f64, f64)]) -> Result<Self> {
        Self::new(coords.iter().map(|&c| c.into()).collect())
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction requires n >= 1
    }

    #[inline]
    pub fn point(&self, index: usize) -> Point {
        self.points[index]
    }

    pub fn get(&self, index: usize) -> Option<Point> {
        self.points.get(index).copied()
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = Point> + '_ {
        self.points.iter().copied()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    /// Validates that `index` names a point of this set.
    pub fn check_index(&self, index: usize) -> Result<()> {
        if index < self.points.len() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index,
                count: self.points.len(),
            })
        }
    }
}

/// Sign of the turn `a -> b -> c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    CounterClockwise,
    Clockwise,
    Collinear,
}

/// Exact orientation of the triple `(a, b, c)`: the sign of the
/// determinant of `(b − a, c − a)`.
pub fn orientation(a: Point, b: Point, c: Point) -> Orientation {
    let det = robust::orient2d(
        robust::Coord { x: a.x, y: a.y },
        robust::Coord { x: b.x, y: b.y },
        robust::Coord { x: c.x, y: c.y },
    );
    if det > 0.0 {
        Orientation::CounterClockwise
    } else if det < 0.0 {
        Orientation::Clockwise
    } else {
        Orientation::Collinear
    }
}

/// Position of a point relative to a circle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CirclePosition {
    Inside,
    Outside,
    On,
}

/// Exact position of `d` relative to the circumcircle of `a`, `b`, `c`.
///
/// The answer is normalized so it does not depend on whether `a, b, c` are
/// given in clockwise or counterclockwise order. Collinear `a, b, c` have
/// no circumcircle and are reported as an error.
pub fn incircle(a: Point, b: Point, c: Point, d: Point) -> Result<CirclePosition> {
    let sign = match orientation(a, b, c) {
        Orientation::CounterClockwise => 1.0,
        Orientation::Clockwise => -1.0,
        Orientation::Collinear => return Err(Error::DegenerateTriangle(0, 1, 2)),
    };
    Ok(incircle_oriented(a, b, c, d, sign))
}

/// In-circle test for a triple already known to be non-collinear, with
/// `sign` = +1 for counterclockwise `(a, b, c)` and −1 for clockwise.
pub(crate) fn incircle_oriented(
    a: Point,
    b: Point,
    c: Point,
    d: Point,
    sign: f64,
) -> CirclePosition {
    let det = sign * incircle_det(a, b, c, d);
    if det > 0.0 {
        CirclePosition::Inside
    } else if det < 0.0 {
        CirclePosition::Outside
    } else {
        CirclePosition::On
    }
}

/// Raw in-circle determinant, exact in sign: positive when `d` lies
/// strictly inside the circle through counterclockwise `(a, b, c)`,
/// negated for clockwise triples.
pub(crate) fn incircle_det(a: Point, b: Point, c: Point, d: Point) -> f64 {
    robust::incircle(
        robust::Coord { x: a.x, y: a.y },
        robust::Coord { x: b.x, y: b.y },
        robust::Coord { x: c.x, y: c.y },
        robust::Coord { x: d.x, y: d.y },
    )
}
