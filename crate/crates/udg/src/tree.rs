//! Shortest path tree representation shared by both solvers.

use crate::geom::PointSet;
use crate::{Error, Result};

/// A single-source shortest path tree over an indexed point set.
///
/// `dist[v]` is the distance from the source to point `v`, or
/// `f64::INFINITY` if `v` is unreachable. For hop counts the values are
/// exact small integers stored in `f64`. `parent[v]` is the predecessor of
/// `v` on a shortest path, `None` for the source and for unreachable
/// points.
#[derive(Debug, Clone, PartialEq)]
pub struct ShortestPathTree {
    pub source: usize,
    pub dist: Vec<f64>,
    pub parent: Vec<Option<usize>>,
}

impl ShortestPathTree {
    pub(crate) fn new_unreached(source: usize, n: usize) -> Self {
        let mut tree = ShortestPathTree {
            source,
            dist: vec![f64::INFINITY; n],
            parent: vec![None; n],
        };
        tree.dist[source] = 0.0;
        tree
    }

    pub fn len(&self) -> usize {
        self.dist.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dist.is_empty()
    }

    pub fn reached(&self, v: usize) -> bool {
        self.dist[v].is_finite()
    }

    /// Indices of all reached points, ascending.
    pub fn reached_points(&self) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.reached(v)).collect()
    }

    /// The path from the source to `v` as a point index sequence, starting
    /// at the source and ending at `v`. `None` if `v` is unreachable.
    pub fn path_to(&self, v: usize) -> Option<Vec<usize>> {
        if v >= self.len() || !self.reached(v) {
            return None;
        }
        let mut path = vec![v];
        let mut cur = v;
        while let Some(p) = self.parent[cur] {
            path.push(p);
            cur = p;
        }
        path.reverse();
        Some(path)
    }

    /// Groups reached points by integer distance value: `levels()[i]` holds
    /// every point at distance exactly `i`, ascending. Meaningful for hop
    /// count trees, where distances are exact integers.
    pub fn levels(&self) -> Vec<Vec<usize>> {
        let mut levels: Vec<Vec<usize>> = Vec::new();
        for v in 0..self.len() {
            if !self.reached(v) {
                continue;
            }
            let level = self.dist[v] as usize;
            if levels.len() <= level {
                levels.resize_with(level + 1, Vec::new);
            }
            levels[level].push(v);
        }
        levels
    }

    /// Structural validity of the tree against its point set: the source is
    /// in range with distance 0 and no parent, every non-source reached
    /// point has a reached parent, parent chains terminate at the source,
    /// and unreachable points have no parent.
    pub fn check_structure(&self, points: &PointSet) -> Result<()> {
        if self.len() != points.len() {
            return Err(Error::IndexOutOfRange {
                index: self.len(),
                count: points.len(),
            });
        }
        points.check_index(self.source)?;
        if self.dist[self.source] != 0.0 || self.parent[self.source].is_some() {
            return Err(Error::IndexOutOfRange {
                index: self.source,
                count: self.len(),
            });
        }
        for v in 0..self.len() {
            match self.parent[v] {
                Some(p) => {
                    points.check_index(p)?;
                    if !self.reached(v) || !self.reached(p) {
                        return Err(Error::IndexOutOfRange {
                            index: v,
                            count: self.len(),
                        });
                    }
                }
                None => {
                    if self.reached(v) && v != self.source {
                        return Err(Error::IndexOutOfRange {
                            index: v,
                            count: self.len(),
                        });
                    }
                }
            }
        }
        // Parent chains must be acyclic; walking n steps from any point
        // must hit the source.
        for v in 0..self.len() {
            if !self.reached(v) {
                continue;
            }
            let mut cur = v;
            let mut steps = 0usize;
            while let Some(p) = self.parent[cur] {
                cur = p;
                steps += 1;
                if steps > self.len() {
                    return Err(Error::IndexOutOfRange {
                        index: v,
                        count: self.len(),
                    });
                }
            }
            if cur != self.source {
                return Err(Error::IndexOutOfRange {
                    index: v,
                    count: self.len(),
                });
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample_tree() -> ShortestPathTree {
        // 0 -> 1 -> 2, 3 unreachable
        ShortestPathTree {
            source: 0,
            dist: vec![0.0, 1.0, 2.0, f64::INFINITY],
            parent: vec![None, Some(0), Some(1), None],
        }
    }

    #[test]
    fn path_reconstruction() {
        let t = sample_tree();
        assert_eq!(t.path_to(2), Some(vec![0, 1, 2]));
        assert_eq!(t.path_to(0), Some(vec![0]));
        assert_eq!(t.path_to(3), None);
    }

    #[test]
    fn levels_group_by_hop_count() {
        let t = sample_tree();
        assert_eq!(t.levels(), vec![vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn structure_check_accepts_valid_tree() {
        let points =
            PointSet::from_coords(&[(0.0, 0.0), (1.0, 0.0), (2.0, 0.0), (9.0, 9.0)]).unwrap();
        assert!(sample_tree().check_structure(&points).is_ok());
    }

    #[test]
    fn structure_check_rejects_cycles() {
        let points = PointSet::from_coords(&[(0.0, 0.0), (1.0, 0.0), (2.0, 0.0)]).unwrap();
        let t = ShortestPathTree {
            source: 0,
            dist: vec![0.0, 1.0, 2.0],
            parent: vec![None, Some(2), Some(1)],
        };
        assert!(t.check_structure(&points).is_err());
    }
}
