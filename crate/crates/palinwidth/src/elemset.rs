//! Bit-vector sets over the element indices of one group table.

use std::fmt;

use crate::table::{ElemIx, GroupTable};

/// A set of elements of a specific [`GroupTable`], stored as a bit vector
/// over element indices. Sets are tagged with the identity of their table;
/// combining sets from different tables is a programming error and panics.
#[derive(Clone, PartialEq, Eq)]
pub struct ElementSet {
    table_id: u64,
    universe: usize,
    words: Vec<u64>,
}

impl ElementSet {
    pub fn empty(table: &GroupTable) -> ElementSet {
        let universe = table.order();
        ElementSet {
            table_id: table.id(),
            universe,
            words: vec![0; universe.div_ceil(64)],
        }
    }

    pub fn full(table: &GroupTable) -> ElementSet {
        let mut set = ElementSet::empty(table);
        set.words.iter_mut().for_each(|w| *w = !0);
        set.clear_tail();
        set
    }

    pub fn singleton(table: &GroupTable, ix: ElemIx) -> ElementSet {
        let mut set = ElementSet::empty(table);
        set.insert(ix);
        set
    }

    fn clear_tail(&mut self) {
        let tail = self.universe % 64;
        if tail != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << tail) - 1;
            }
        }
    }

    pub fn table_id(&self) -> u64 {
        self.table_id
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    /// Inserts an index, returning true when it was not present before.
    pub fn insert(&mut self, ix: ElemIx) -> bool {
        let ix = ix as usize;
        assert!(ix < self.universe, "element index out of range");
        let mask = 1u64 << (ix % 64);
        let word = &mut self.words[ix / 64];
        let fresh = *word & mask == 0;
        *word |= mask;
        fresh
    }

    pub fn contains(&self, ix: ElemIx) -> bool {
        let ix = ix as usize;
        assert!(ix < self.universe, "element index out of range");
        self.words[ix / 64] & (1u64 << (ix % 64)) != 0
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.count() == self.universe
    }

    pub fn union_with(&mut self, other: &ElementSet) {
        self.check_same_table(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &ElementSet) {
        self.check_same_table(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn is_subset_of(&self, other: &ElementSet) -> bool {
        self.check_same_table(other);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    /// Ascending iteration over the member indices.
    pub fn iter(&self) -> impl Iterator<Item = ElemIx> + '_ {
        self.words.iter().enumerate().flat_map(|(w, &bits)| {
            let mut bits = bits;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let b = bits.trailing_zeros();
                    bits &= bits - 1;
                    Some((w * 64) as ElemIx + b as ElemIx)
                }
            })
        })
    }

    fn check_same_table(&self, other: &ElementSet) {
        assert_eq!(
            self.table_id, other.table_id,
            "element sets belong to different tables"
        );
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ElementSet({}/{})", self.count(), self.universe)
    }
}
