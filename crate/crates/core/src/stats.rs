use core::cmp::Ordering;

/// Counters collected while sorting.
///
/// `moves` counts element assignments. A swap is three assignments.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SortStats {
    pub comparisons: u64,
    pub moves: u64,
    pub runs_detected: u64,
    pub merge_passes: u64,
    /// Largest number of auxiliary element slots held at any one time.
    pub aux_peak: u64,
}

impl SortStats {
    #[inline]
    pub(crate) fn less<T, F>(&mut self, cmp: &mut F, a: &T, b: &T) -> bool
    where
        F: FnMut(&T, &T) -> Ordering,
    {
        self.comparisons += 1;
        cmp(a, b) == Ordering::Less
    }

    #[inline]
    pub(crate) fn swap<T>(&mut self, v: &mut [T], a: usize, b: usize) {
        self.moves += 3;
        v.swap(a, b);
    }

    #[inline]
    pub(crate) fn note_aux(&mut self, slots: usize) {
        self.aux_peak = self.aux_peak.max(slots as u64);
    }
}
