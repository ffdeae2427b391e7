//! Closest pair between weighted blue points and plain red points, under
//! the additively weighted distance w_b + ‖r − b‖, with blue insertion
//! and blue/red deletion.
//!
//! One candidate entry per blue lives in a min-heap, keyed by the blue's
//! distance to its nearest red at the time the entry was pushed. Reds are
//! only ever deleted, so a cached key can only be too small, never too
//! large; an entry whose red is gone is refreshed on inspection and
//! reinserted. The reported pair is therefore always current even though
//! the heap is lazy. Deleted blues invalidate their entry through a
//! generation stamp, and the heap is compacted when stale entries
//! outnumber live ones, keeping residency within the declared bound of
//! 2·(|B| + |R|) + 16 candidates.
//!
//! Ties are deterministic end to end: among equal-δ pairs the smaller
//! blue index wins, then the smaller red index.

use crate::geom::PointSet;
use crate::kd::KdTree;
use crate::{Error, Result};
use std::cmp::Ordering;
use std::collections::BinaryHeap;

/// A blue point with its frozen additive weight.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeightedBlue {
    pub index: usize,
    pub weight: f64,
}

#[derive(Debug, Clone)]
struct BlueState {
    weight: f64,
    gen: u32,
    has_entry: bool,
}

#[derive(Debug, Clone, Copy, PartialEq)]
struct Entry {
    delta: f64,
    blue: usize,
    red: usize,
    gen: u32,
}

impl Eq for Entry {}

impl Ord for Entry {
    fn cmp(&self, other: &Self) -> Ordering {
        // reversed: BinaryHeap is a max-heap, we want the smallest
        // (delta, blue, red) on top
        other
            .delta
            .total_cmp(&self.delta)
            .then_with(|| other.blue.cmp(&self.blue))
            .then_with(|| other.red.cmp(&self.red))
            .then_with(|| other.gen.cmp(&self.gen))
    }
}

impl PartialOrd for Entry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone)]
pub struct WbcpIndex<'a> {
    ps: &'a PointSet,
    blue: Vec<Option<BlueState>>,
    gen: Vec<u32>,
    blue_count: usize,
    entry_count: usize,
    reds: KdTree,
    heap: BinaryHeap<Entry>,
    dead_entries: usize,
    ops: u64,
    peak_candidates: usize,
    residency_ok: bool,
}

impl<'a> WbcpIndex<'a> {
    /// Builds the structure over disjoint blue and red index sets.
    pub fn new(ps: &'a PointSet, blues: &[WeightedBlue], reds: &[usize]) -> Result<Self> {
        let n = ps.len();
        for &i in reds {
            ps.check_index(i)?;
        }
        for b in blues {
            ps.check_index(b.index)?;
        }
        let mut red_sorted = reds.to_vec();
        red_sorted.sort_unstable();
        for w in red_sorted.windows(2) {
            if w[0] == w[1] {
                return Err(Error::AlreadyTracked(w[0]));
            }
        }
        let red_items = red_sorted.iter().map(|&i| (ps.point(i), i)).collect();
        let mut index = WbcpIndex {
            ps,
            blue: vec![None; n],
            gen: vec![0; n],
            blue_count: 0,
            entry_count: 0,
            reds: KdTree::build(red_items),
            heap: BinaryHeap::new(),
            dead_entries: 0,
            ops: 0,
            peak_candidates: 0,
            residency_ok: true,
        };
        for b in blues {
            index.insert_blue(*b)?;
        }
        Ok(index)
    }

    pub fn blue_count(&self) -> usize {
        self.blue_count
    }

    pub fn red_count(&self) -> usize {
        self.reds.len()
    }

    pub fn is_blue(&self, i: usize) -> bool {
        i < self.blue.len() && self.blue[i].is_some()
    }

    pub fn is_red(&self, i: usize) -> bool {
        self.reds.contains(i)
    }

    /// Total operations performed, counting refreshes; a cost measure for
    /// benchmarks.
    pub fn ops(&self) -> u64 {
        self.ops
    }

    /// High-water mark of stored candidate entries.
    pub fn peak_candidates(&self) -> usize {
        self.peak_candidates
    }

    /// Declared residency bound for the current sets; instrumentation
    /// checks it after every operation.
    pub fn declared_residency_bound(&self) -> usize {
        2 * (self.blue_count + self.red_count()) + 16
    }

    /// Whether the candidate store has stayed within the declared bound
    /// through every operation so far.
    pub fn residency_within_bound(&self) -> bool {
        self.residency_ok
    }

    fn note_store_size(&mut self) {
        let len = self.heap.len();
        self.peak_candidates = self.peak_candidates.max(len);
        if len > self.declared_residency_bound() {
            self.residency_ok = false;
        }
        debug_assert!(self.residency_ok);
    }

    fn push_entry_for(&mut self, blue: usize) {
        let weight = self.blue[blue].as_ref().unwrap().weight;
        let q = self.ps.point(blue);
        let key = move |sqd: f64| weight + sqd.sqrt();
        if let Some((red, delta)) = self.reds.nearest_by(q, &key) {
            self.heap.push(Entry {
                delta,
                blue,
                red,
                gen: self.gen[blue],
            });
            self.blue[blue].as_mut().unwrap().has_entry = true;
            self.entry_count += 1;
        }
        self.note_store_size();
    }

    /// Inserts a blue point with its frozen weight. The index must not be
    /// currently blue or red.
    pub fn insert_blue(&mut self, b: WeightedBlue) -> Result<()> {
        self.ps.check_index(b.index)?;
        if !(b.weight >= 0.0 && b.weight.is_finite()) {
            return Err(Error::InvalidWeight(b.weight));
        }
        if self.is_blue(b.index) || self.is_red(b.index) {
            return Err(Error::AlreadyTracked(b.index));
        }
        self.ops += 1;
        self.blue[b.index] = Some(BlueState {
            weight: b.weight,
            gen: self.gen[b.index],
            has_entry: false,
        });
        self.blue_count += 1;
        self.push_entry_for(b.index);
        Ok(())
    }

    /// Removes a currently blue index. Its candidate entry goes stale and
    /// is dropped lazily.
    pub fn delete_blue(&mut self, i: usize) -> Result<()> {
        if !self.is_blue(i) {
            return Err(Error::NotBlue(i));
        }
        self.ops += 1;
        let state = self.blue[i].take().unwrap();
        self.gen[i] = self.gen[i].wrapping_add(1);
        self.blue_count -= 1;
        if state.has_entry {
            self.entry_count -= 1;
            self.dead_entries += 1;
            self.maybe_compact();
        }
        Ok(())
    }

    /// Removes a currently red index. Cached candidates that pointed at it
    /// refresh on their next inspection.
    pub fn delete_red(&mut self, i: usize) -> Result<()> {
        if !self.is_red(i) {
            return Err(Error::NotRed(i));
        }
        self.ops += 1;
        self.reds.delete(i);
        Ok(())
    }

    fn maybe_compact(&mut self) {
        if self.dead_entries > self.entry_count + 8 {
            let blue = &self.blue;
            let live: Vec<Entry> = self
                .heap
                .drain()
                .filter(|e| blue[e.blue].as_ref().is_some_and(|s| s.gen == e.gen))
                .collect();
            self.heap = BinaryHeap::from(live);
            self.dead_entries = 0;
        }
    }

    /// The closest blue/red pair `(b, r, δ)` under δ = weight(b) + ‖r−b‖,
    /// ties to the smaller blue index then the smaller red index, or
    /// `None` when either side is empty.
    ///
    /// Reds never reappear, so a live entry found on top with its cached
    /// red still present is the true minimum: every other entry's cached
    /// key is a lower bound on its blue's current value.
    pub fn min_pair(&mut self) -> Option<(usize, usize, f64)> {
        self.ops += 1;
        if self.blue_count == 0 || self.red_count() == 0 {
            return None;
        }
        loop {
            let top = *self.heap.peek().expect("every live blue holds an entry");
            let live = self.blue[top.blue]
                .as_ref()
                .is_some_and(|s| s.gen == top.gen);
            if !live {
                self.heap.pop();
                self.dead_entries -= 1;
                continue;
            }
            if self.reds.contains(top.red) {
                return Some((top.blue, top.red, top.delta));
            }
            // cached red was deleted: recompute this blue's nearest red
            // and reinsert
            self.ops += 1;
            self.heap.pop();
            self.entry_count -= 1;
            self.blue[top.blue].as_mut().unwrap().has_entry = false;
            self.push_entry_for(top.blue);
        }
    }
}
