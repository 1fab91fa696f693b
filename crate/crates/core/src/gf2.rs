//! Dense linear algebra over GF(2).
//!
//! Vectors are packed into `u64` words with bit `j` of the vector stored in
//! bit `j % 64` of word `j / 64`. Unused high bits of the last word are kept
//! at zero so that word-level comparisons and popcounts are exact.
//!
//! Elimination is deterministic: columns are scanned left to right and the
//! first remaining row carrying the column becomes its pivot. Kernel bases
//! are read off the fully reduced echelon form, one vector per free column in
//! ascending order.

use std::fmt;

use crate::error::{Error, Result};

const WORD_BITS: usize = 64;

#[inline]
fn words_for(len: usize) -> usize {
    len.div_ceil(WORD_BITS)
}

/// A fixed-length vector over GF(2).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BitVec {
    words: Vec<u64>,
    len: usize,
}

impl BitVec {
    /// The zero vector of length `len`.
    pub fn zeros(len: usize) -> Self {
        Self {
            words: vec![0; words_for(len)],
            len,
        }
    }

    /// The all-ones vector of length `len`.
    pub fn ones(len: usize) -> Self {
        let mut v = Self {
            words: vec![u64::MAX; words_for(len)],
            len,
        };
        v.clear_tail();
        v
    }

    /// Builds a vector from booleans, index 0 first.
    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    /// Builds a length-`len` vector with the given bit positions set.
    ///
    /// Panics if a position is `>= len`.
    pub fn from_ones(len: usize, ones: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Self::zeros(len);
        for i in ones {
            v.set(i, true);
        }
        v
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Packed words, little-endian bit order.
    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit {i} out of range for length {}", self.len);
        (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit {i} out of range for length {}", self.len);
        let mask = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit {i} out of range for length {}", self.len);
        self.words[i / WORD_BITS] ^= 1u64 << (i % WORD_BITS);
    }

    /// Hamming weight.
    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Positions of set bits in ascending order.
    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let tz = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * WORD_BITS + tz)
            })
        })
    }

    /// `self += other` over GF(2).
    pub fn xor_assign(&mut self, other: &BitVec) {
        assert_eq!(self.len, other.len, "length mismatch");
        xor_words(&mut self.words, &other.words, 0);
    }

    /// Complements every bit.
    pub fn not_assign(&mut self) {
        for w in &mut self.words {
            *w = !*w;
        }
        self.clear_tail();
    }

    /// Inner product over GF(2).
    pub fn dot(&self, other: &BitVec) -> bool {
        assert_eq!(self.len, other.len, "length mismatch");
        self.words
            .iter()
            .zip(&other.words)
            .fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones())
            & 1
            == 1
    }

    /// Copy of the first `len` bits.
    pub fn truncated(&self, len: usize) -> BitVec {
        assert!(len <= self.len);
        let mut v = BitVec {
            words: self.words[..words_for(len)].to_vec(),
            len,
        };
        v.clear_tail();
        v
    }

    /// Parses a `'0'`/`'1'` string, leftmost character is bit 0.
    pub fn parse_bits(s: &str) -> Result<Self> {
        let mut v = Self::zeros(s.len());
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => v.set(i, true),
                other => {
                    return Err(Error::Parse(format!(
                        "unexpected character {other:?} at position {i}"
                    )))
                }
            }
        }
        Ok(v)
    }

    /// Renders as `'0'`/`'1'`, bit 0 leftmost.
    pub fn to_bit_string(&self) -> String {
        (0..self.len)
            .map(|i| if self.get(i) { '1' } else { '0' })
            .collect()
    }

    fn clear_tail(&mut self) {
        let r = self.len % WORD_BITS;
        if r != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << r) - 1;
            }
        }
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVec({})", self.to_bit_string())
    }
}

impl fmt::Display for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_bit_string())
    }
}

#[inline]
fn xor_words(dst: &mut [u64], src: &[u64], from_word: usize) {
    for (a, b) in dst[from_word..].iter_mut().zip(&src[from_word..]) {
        *a ^= *b;
    }
}

/// A dense GF(2) matrix stored as packed rows.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BitMatrix {
    cols: usize,
    rows: Vec<BitVec>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            cols,
            rows: vec![BitVec::zeros(cols); rows],
        }
    }

    pub fn identity(size: usize) -> Self {
        let rows = (0..size).map(|i| BitVec::from_ones(size, [i])).collect();
        Self { cols: size, rows }
    }

    /// Assembles a matrix from rows that all have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<BitVec>) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::Domain(format!(
                "row of length {} in a matrix with {cols} columns",
                bad.len()
            )));
        }
        Ok(Self { cols, rows })
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &BitVec {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[BitVec] {
        &self.rows
    }

    pub fn push_row(&mut self, row: BitVec) -> Result<()> {
        if row.len() != self.cols {
            return Err(Error::Domain(format!(
                "row of length {} in a matrix with {} columns",
                row.len(),
                self.cols
            )));
        }
        self.rows.push(row);
        Ok(())
    }

    /// `m · xᵀ`, one output bit per row.
    pub fn mul_vec(&self, x: &BitVec) -> BitVec {
        BitVec::from_bools(&self.rows.iter().map(|r| r.dot(x)).collect::<Vec<_>>())
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.rows.clone();
        forward_eliminate(&mut rows, self.cols, false).pivots.len()
    }

    /// Whether some nonzero `x` satisfies `m · xᵀ = 0`.
    ///
    /// Stops as soon as a column without pivot is found, or when too few rows
    /// remain to cover the remaining columns.
    pub fn has_nonzero_kernel(&self) -> bool {
        if self.rows.len() < self.cols {
            return true;
        }
        let mut rows = self.rows.clone();
        forward_eliminate(&mut rows, self.cols, true).deficient
    }

    /// A basis of the right kernel `{x : m · xᵀ = 0}`.
    pub fn kernel_basis(&self) -> Vec<BitVec> {
        let mut rows = self.rows.clone();
        let Echelon { pivots, .. } = forward_eliminate(&mut rows, self.cols, false);
        back_substitute(&mut rows, &pivots);

        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut x = BitVec::zeros(self.cols);
                x.set(free, true);
                for (r, &p) in pivots.iter().enumerate() {
                    if rows[r].get(free) {
                        x.set(p, true);
                    }
                }
                x
            })
            .collect()
    }
}

struct Echelon {
    /// Pivot column of row `r` for `r < rank`.
    pivots: Vec<usize>,
    /// Set when an early exit proved the column rank deficient.
    deficient: bool,
}

fn forward_eliminate(rows: &mut [BitVec], cols: usize, stop_when_deficient: bool) -> Echelon {
    let mut pivots = Vec::new();
    let nrows = rows.len();
    for c in 0..cols {
        let r = pivots.len();
        if stop_when_deficient && nrows - r < cols - c {
            return Echelon {
                pivots,
                deficient: true,
            };
        }
        let (w, b) = (c / WORD_BITS, c % WORD_BITS);
        let Some(found) = (r..nrows).find(|&i| (rows[i].words[w] >> b) & 1 == 1) else {
            if stop_when_deficient {
                return Echelon {
                    pivots,
                    deficient: true,
                };
            }
            continue;
        };
        rows.swap(r, found);
        let (head, tail) = rows.split_at_mut(r + 1);
        let pivot = &head[r].words;
        for row in tail.iter_mut() {
            if (row.words[w] >> b) & 1 == 1 {
                xor_words(&mut row.words, pivot, w);
            }
        }
        pivots.push(c);
    }
    let deficient = pivots.len() < cols;
    Echelon { pivots, deficient }
}

fn back_substitute(rows: &mut [BitVec], pivots: &[usize]) {
    for r in (0..pivots.len()).rev() {
        let c = pivots[r];
        let (w, b) = (c / WORD_BITS, c % WORD_BITS);
        let (head, tail) = rows.split_at_mut(r);
        let pivot = &tail[0].words;
        for row in head.iter_mut() {
            if (row.words[w] >> b) & 1 == 1 {
                xor_words(&mut row.words, pivot, w);
            }
        }
    }
}

/// Indicator of `{ j < width : j ⪯ i }` in the Lucas order.
pub fn lucas_row(i: usize, width: usize) -> BitVec {
    let mut v = BitVec::zeros(width);
    // Enumerate submasks of i directly when that is cheaper than a full scan.
    let weight = i.count_ones();
    if weight < 32 && (1usize << weight) < width {
        let mut s = i;
        loop {
            if s < width {
                v.set(s, true);
            }
            if s == 0 {
                break;
            }
            s = (s - 1) & i;
        }
    } else {
        for j in 0..width {
            if j & !i == 0 {
                v.set(j, true);
            }
        }
    }
    v
}

/// The vector `ε_i` of length `k`: bit `j` is set iff `j ⪯ i`.
pub fn epsilon(i: usize, k: usize) -> Result<BitVec> {
    if i > 2 * k {
        return Err(Error::Range {
            what: "epsilon index",
            value: i,
            max: 2 * k,
        });
    }
    Ok(lucas_row(i, k))
}

/// GF(2) sum of `ε_j` (or `ε_{2k-j}` when `reflect`) over `indices`.
pub fn sum_epsilon_over(
    indices: impl IntoIterator<Item = usize>,
    k: usize,
    reflect: bool,
) -> Result<BitVec> {
    let mut acc = BitVec::zeros(k);
    for j in indices {
        if j > 2 * k {
            return Err(Error::Range {
                what: "epsilon index",
                value: j,
                max: 2 * k,
            });
        }
        let i = if reflect { 2 * k - j } else { j };
        acc.xor_assign(&lucas_row(i, k));
    }
    Ok(acc)
}
