//! Static nearest-neighbor index over a subset of a point set.
//!
//! Built once per search round over the previous level and queried for
//! every candidate neighbor, so build is O(m log m) and queries are
//! logarithmic on average. Immutable after build; concurrent queries are
//! fine.

use crate::geom::{Point, PointSet};
use crate::kd::KdTree;
use crate::{Error, Result};

#[derive(Debug, Clone)]
pub struct NnIndex {
    members: Vec<usize>,
    tree: KdTree,
}

impl NnIndex {
    /// Builds an index over `members`, a nonempty set of distinct indices
    /// into `ps`.
    pub fn build(ps: &PointSet, members: &[usize]) -> Result<Self> {
        if members.is_empty() {
            return Err(Error::EmptyMembers);
        }
        for &i in members {
            ps.check_index(i)?;
        }
        let mut members = members.to_vec();
        members.sort_unstable();
        members.dedup();
        let items: Vec<(Point, usize)> = members.iter().map(|&i| (ps.point(i), i)).collect();
        Ok(NnIndex {
            members,
            tree: KdTree::build(items),
        })
    }

    /// Member indices the index was built over, ascending.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false // build requires a nonempty member list
    }

    /// The member nearest to `q` and its squared distance. Ties on squared
    /// distance go to the smallest member index.
    pub fn nearest(&self, q: Point) -> (usize, f64) {
        self.tree
            .nearest_by(q, &|sqd| sqd)
            .expect("index is nonempty by construction")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::squared_distance;
    use rand::{Rng, SeedableRng};

    #[test]
    fn singleton_index_answers_everything_with_its_member() {
        let ps = PointSet::from_coords(&[(3.0, 4.0), (100.0, 100.0)]).unwrap();
        let idx = NnIndex::build(&ps, &[0]).unwrap();
        assert_eq!(idx.nearest(Point::new(0.0, 0.0)), (0, 25.0));
        assert_eq!(idx.nearest(Point::new(3.0, 4.0)), (0, 0.0));
    }

    #[test]
    fn known_nearest_member() {
        let ps = PointSet::from_coords(&[(0.0, 0.0), (5.0, 0.0)]).unwrap();
        let idx = NnIndex::build(&ps, &[0, 1]).unwrap();
        assert_eq!(idx.nearest(Point::new(1.0, 0.0)), (0, 1.0));
    }

    #[test]
    fn equidistant_query_takes_smaller_index() {
        let ps = PointSet::from_coords(&[(-1.0, 0.0), (1.0, 0.0)]).unwrap();
        let idx = NnIndex::build(&ps, &[0, 1]).unwrap();
        assert_eq!(idx.nearest(Point::new(0.0, 0.0)), (0, 1.0));
    }

    #[test]
    fn rejects_empty_members_and_bad_indices() {
        let ps = PointSet::from_coords(&[(0.0, 0.0)]).unwrap();
        assert_eq!(
            NnIndex::build(&ps, &[]).unwrap_err(),
            Error::EmptyMembers
        );
        assert!(matches!(
            NnIndex::build(&ps, &[0, 3]).unwrap_err(),
            Error::IndexOutOfRange { index: 3, count: 1 }
        ));
    }

    #[test]
    fn agrees_with_linear_scan_on_random_queries() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        let coords: Vec<(f64, f64)> = (0..300)
            .map(|_| (rng.gen_range(0.0..20.0), rng.gen_range(0.0..20.0)))
            .collect();
        let ps = PointSet::from_coords(&coords).unwrap();
        let members: Vec<usize> = (0..300).step_by(3).collect();
        let idx = NnIndex::build(&ps, &members).unwrap();
        for _ in 0..2000 {
            let q = Point::new(rng.gen_range(0.0..20.0), rng.gen_range(0.0..20.0));
            let want = members
                .iter()
                .map(|&i| (squared_distance(q, ps.point(i)), i))
                .min_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)))
                .map(|(d, i)| (i, d))
                .unwrap();
            assert_eq!(idx.nearest(q), want);
        }
    }

    #[test]
    fn member_order_does_not_change_answers() {
        let ps =
            PointSet::from_coords(&[(0.0, 0.0), (1.0, 1.0), (2.0, 0.5), (0.5, 2.0)]).unwrap();
        let a = NnIndex::build(&ps, &[0, 1, 2, 3]).unwrap();
        let b = NnIndex::build(&ps, &[3, 1, 0, 2]).unwrap();
        for q in [(0.4, 0.4), (1.5, 0.9), (2.0, 2.0), (-1.0, 0.0)] {
            let q = Point::new(q.0, q.1);
            assert_eq!(a.nearest(q), b.nearest(q));
        }
        assert_eq!(a.members(), b.members());
    }
}
