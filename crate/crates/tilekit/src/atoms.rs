//! Generic realizations over Boolean atoms.
//!
//! For a joint per-position alphabet with `k_i` pairs at position `i`, the
//! freest dichotomy-preserving assignment sends pair `j` to the half of
//! `{0,1}^{k_i}` where bit `j` is set. A word then covers a box of atom
//! cells in the grid `prod_i 2^{k_i}`, and two codes are equivalent exactly
//! when they cover the same cell set.

use crate::code::Code;
use crate::error::{Error, Result};
use crate::word::Word;

const MAX_CELL_BITS: u32 = 26;

/// Fixed-size bit set over atom cells.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CellSet {
    len: usize,
    bits: Vec<u64>,
}

impl CellSet {
    pub fn new(len: usize) -> CellSet {
        CellSet {
            len,
            bits: vec![0; len.div_ceil(64)],
        }
    }

    #[inline]
    pub fn set(&mut self, i: usize) {
        self.bits[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        self.bits[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&b| b == 0)
    }

    pub fn count(&self) -> usize {
        self.bits.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn union_with(&mut self, other: &CellSet) {
        for (a, b) in self.bits.iter_mut().zip(&other.bits) {
            *a |= b;
        }
    }

    pub fn is_disjoint(&self, other: &CellSet) -> bool {
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & b == 0)
    }

    pub fn is_subset(&self, other: &CellSet) -> bool {
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    /// Lowest index that is set in `self` but not in `other`.
    pub fn first_missing_from(&self, other: &CellSet) -> Option<usize> {
        for (i, (a, b)) in self.bits.iter().zip(&other.bits).enumerate() {
            let diff = a & !b;
            if diff != 0 {
                return Some(i * 64 + diff.trailing_zeros() as usize);
            }
        }
        None
    }
}

/// Atom grid shared by one or more codes of equal dimension.
#[derive(Clone, Debug)]
pub struct AtomSpace {
    /// Sorted pair indices per position.
    pub pairs: Vec<Vec<u8>>,
    /// Atoms per position: `2^{k_i}`.
    pub radix: Vec<u32>,
    /// Row-major stride per position.
    pub stride: Vec<usize>,
    pub cells: usize,
}

impl AtomSpace {
    /// Joint alphabet of the given codes.
    pub fn joint(codes: &[&Code]) -> AtomSpace {
        let dim = codes[0].dim() as usize;
        let mut pairs = vec![Vec::new(); dim];
        for i in 0..dim {
            let mut seen = [false; 16];
            for c in codes {
                for p in c.position_pairs(i) {
                    seen[p as usize] = true;
                }
            }
            pairs[i] = (0..16u8).filter(|&p| seen[p as usize]).collect();
        }
        AtomSpace::from_pairs(pairs)
    }

    /// Uniform alphabet: the same pair list at every position.
    pub fn uniform(dim: usize, supply: &[u8]) -> AtomSpace {
        AtomSpace::from_pairs(vec![supply.to_vec(); dim])
    }

    pub fn from_pairs(pairs: Vec<Vec<u8>>) -> AtomSpace {
        let total_bits: u32 = pairs.iter().map(|p| p.len() as u32).sum();
        assert!(
            total_bits <= MAX_CELL_BITS,
            "atom space of 2^{total_bits} cells is too large"
        );
        let radix: Vec<u32> = pairs.iter().map(|p| 1u32 << p.len()).collect();
        let mut stride = vec![0usize; pairs.len()];
        let mut acc = 1usize;
        for i in (0..pairs.len()).rev() {
            stride[i] = acc;
            acc *= radix[i] as usize;
        }
        AtomSpace {
            pairs,
            radix,
            stride,
            cells: acc,
        }
    }

    /// Atom values at position `pos` compatible with the letter of `w`.
    fn atom_choices(&self, w: Word, pos: usize) -> Vec<u32> {
        let l = w.letter(pos);
        let k = self.pairs[pos].len();
        match l.pair() {
            None => (0..1u32 << k).collect(),
            Some(p) => {
                let j = self.pairs[pos]
                    .iter()
                    .position(|&q| q == p)
                    .expect("letter outside atom space");
                let want = !l.primed();
                (0..1u32 << k)
                    .filter(|a| (a >> j & 1 == 1) == want)
                    .collect()
            }
        }
    }

    /// The cell set covered by a single word.
    pub fn word_cells(&self, w: Word) -> CellSet {
        let dim = self.pairs.len();
        let choices: Vec<Vec<u32>> = (0..dim).map(|i| self.atom_choices(w, i)).collect();
        let mut out = CellSet::new(self.cells);
        let mut idx = vec![0usize; dim];
        loop {
            let mut cell = 0usize;
            for i in 0..dim {
                cell += choices[i][idx[i]] as usize * self.stride[i];
            }
            out.set(cell);
            let mut i = dim;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                idx[i] += 1;
                if idx[i] < choices[i].len() {
                    break;
                }
                idx[i] = 0;
            }
        }
    }

    /// Union of the word cells of a code.
    pub fn realize(&self, c: &Code) -> CellSet {
        let mut out = CellSet::new(self.cells);
        for &w in c.words() {
            out.union_with(&self.word_cells(w));
        }
        out
    }

    /// Per-cell cover counts; the exhaustive oracle behind the partition
    /// criterion.
    pub fn realize_counts(&self, c: &Code) -> Vec<u32> {
        let mut counts = vec![0u32; self.cells];
        for &w in c.words() {
            let cells = self.word_cells(w);
            for (i, count) in counts.iter_mut().enumerate() {
                if cells.get(i) {
                    *count += 1;
                }
            }
        }
        counts
    }
}

/// A realization of a code: the atom space over its own alphabet together
/// with the covered cells.
pub struct AtomRealization {
    pub space: AtomSpace,
    pub cells: CellSet,
}

pub fn realization(c: &Code) -> AtomRealization {
    let space = AtomSpace::joint(&[c]);
    let cells = space.realize(c);
    AtomRealization { space, cells }
}

/// Equivalence of polybox codes: equal atom realizations over the joint
/// alphabet.
pub fn equivalent(v: &Code, u: &Code) -> Result<bool> {
    if v.dim() != u.dim() {
        return Err(Error::DimensionMismatch(v.dim(), u.dim()));
    }
    if v == u {
        return Ok(true);
    }
    let space = AtomSpace::joint(&[v, u]);
    Ok(space.realize(v) == space.realize(u))
}

/// Exhaustive exact-cover test: every atom cell covered exactly once.
pub fn is_exact_box_cover(c: &Code) -> bool {
    let space = AtomSpace::joint(&[c]);
    space.realize_counts(c).iter().all(|&n| n == 1)
}
