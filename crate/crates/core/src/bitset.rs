//! Dense occupancy map over an integer window, used by the sumset kernel.

use crate::intset::IntSet;

const WORD_BITS: usize = 64;

/// Bit `i` set means `offset + i` is present.
#[derive(Clone, Debug)]
pub(crate) struct Occupancy {
    offset: i64,
    len: usize,
    words: Vec<u64>,
}

impl Occupancy {
    pub(crate) fn zeros(offset: i64, len: usize) -> Self {
        Occupancy { offset, len, words: vec![0; len.div_ceil(WORD_BITS)] }
    }

    /// The occupancy of `set` over `[offset, offset + len)`. Every element
    /// must fall inside the window.
    pub(crate) fn from_set(set: &IntSet, offset: i64, len: usize) -> Self {
        let mut occ = Occupancy::zeros(offset, len);
        for x in set {
            let i = (x - offset) as usize;
            debug_assert!(i < len);
            occ.words[i / WORD_BITS] |= 1 << (i % WORD_BITS);
        }
        occ
    }

    /// `self |= other << shift`, discarding bits past `self.len`.
    pub(crate) fn or_shifted(&mut self, other: &Occupancy, shift: usize) {
        let word_shift = shift / WORD_BITS;
        let bit_shift = shift % WORD_BITS;
        let n = self.words.len();
        for (i, &w) in other.words.iter().enumerate() {
            if w == 0 {
                continue;
            }
            let lo = i + word_shift;
            if lo >= n {
                break;
            }
            if bit_shift == 0 {
                self.words[lo] |= w;
            } else {
                self.words[lo] |= w << bit_shift;
                if lo + 1 < n {
                    self.words[lo + 1] |= w >> (WORD_BITS - bit_shift);
                }
            }
        }
        self.clear_tail();
    }

    fn clear_tail(&mut self) {
        let rem = self.len % WORD_BITS;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    pub(crate) fn to_set(&self) -> IntSet {
        let mut elems = Vec::with_capacity(self.count_ones());
        for (i, &w) in self.words.iter().enumerate() {
            let mut w = w;
            while w != 0 {
                let bit = w.trailing_zeros() as usize;
                elems.push(self.offset + (i * WORD_BITS + bit) as i64);
                w &= w - 1;
            }
        }
        IntSet::from_sorted_unchecked(elems)
    }

    pub(crate) fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }
}
