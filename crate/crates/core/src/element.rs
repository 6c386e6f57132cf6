use core::cmp::Ordering;

/// A sortable record: the key decides the order, the tag only records where
/// the record came from so that stability can be checked afterwards.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Element<K> {
    pub key: K,
    pub tag: u32,
}

impl<K: Ord> Element<K> {
    pub fn new(key: K, tag: u32) -> Self {
        Element { key, tag }
    }

    /// Orders two elements by key alone. Pass this to the `*_by` sorts.
    #[inline]
    pub fn cmp_key(a: &Self, b: &Self) -> Ordering {
        a.key.cmp(&b.key)
    }
}

impl<K: Ord + Copy> Element<K> {
    /// Wraps `keys` with their positions as tags.
    pub fn tagged(keys: &[K]) -> alloc::vec::Vec<Self> {
        keys.iter()
            .enumerate()
            .map(|(i, &key)| Element { key, tag: i as u32 })
            .collect()
    }
}
