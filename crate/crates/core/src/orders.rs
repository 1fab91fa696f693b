//! The Lucas order `⪯`, the prefix order `⪯′`, and the index sets
//! `A_i^k` and `B^k` that organise the value vector around its middle
//! position `k`.

use serde::Serialize;

use crate::error::{Error, Result};

/// `b ⪯ a`: every binary digit of `b` is at most the matching digit of `a`.
///
/// Equivalent to `C(a, b)` being odd.
#[inline]
pub fn lucas_leq(b: usize, a: usize) -> bool {
    b & !a == 0
}

#[inline]
pub fn lucas_lt(b: usize, a: usize) -> bool {
    b != a && lucas_leq(b, a)
}

/// `b ⪯′ a`: `b` is zero, or the full binary expansion of `b` equals the
/// low-order bits of `a`.
#[inline]
pub fn prime_leq(b: usize, a: usize) -> bool {
    if b == 0 {
        return true;
    }
    if a == 0 {
        return false;
    }
    let width = usize::BITS - b.leading_zeros();
    let low = if width >= usize::BITS {
        a
    } else {
        a & ((1usize << width) - 1)
    };
    low == b
}

#[inline]
pub fn prime_lt(b: usize, a: usize) -> bool {
    b != a && prime_leq(b, a)
}

/// `⌊log₂ k⌋` for `k ≥ 1`.
#[inline]
pub fn floor_log2(k: usize) -> usize {
    assert!(k > 0, "log2 of zero");
    (usize::BITS - 1 - k.leading_zeros()) as usize
}

/// All `i ≺′ k`, ascending. There are exactly `wt(k)` of them.
pub fn prime_predecessors(k: usize) -> Vec<usize> {
    // i ≺′ k iff i = k mod 2^p for some set bit p of k.
    let mut out: Vec<usize> = (0..usize::BITS as usize)
        .filter(|&p| (k >> p) & 1 == 1)
        .map(|p| k & ((1usize << p) - 1))
        .collect();
    out.sort_unstable();
    out
}

/// `B^k = {i, 2k − i : i ≺′ k}`, sorted.
pub fn bset(k: usize) -> Vec<usize> {
    let mut out: Vec<usize> = prime_predecessors(k)
        .into_iter()
        .flat_map(|i| [i, 2 * k - i])
        .collect();
    out.sort_unstable();
    out
}

/// The partition of `{0, …, 2k}` into `A_0^k, …, A_{m+1}^k` (`m = ⌊log₂k⌋`),
/// together with `B^k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartitionFamily {
    pub k: usize,
    /// `sets[i]` is `A_i^k`, sorted ascending.
    pub sets: Vec<Vec<usize>>,
    /// `B^k`, sorted ascending.
    pub bset: Vec<usize>,
}

impl PartitionFamily {
    /// `m = ⌊log₂ k⌋`; the last set is `A_{m+1}`.
    pub fn m(&self) -> usize {
        self.sets.len() - 2
    }

    pub fn set(&self, i: usize) -> &[usize] {
        &self.sets[i]
    }

    pub fn in_bset(&self, j: usize) -> bool {
        self.bset.binary_search(&j).is_ok()
    }
}

/// Builds `A_0^k = {k}` and, for `1 ≤ i ≤ ⌊log₂k⌋ + 1`,
/// `A_i^k = {k ∓ (2j+1)·2^{i−1} : 0 ≤ j ≤ ⌊(⌊k/2^{i−1}⌋ − 1)/2⌋}`.
pub fn partition(k: usize) -> Result<PartitionFamily> {
    if k == 0 {
        return Err(Error::Domain("k must be positive".into()));
    }
    let top = floor_log2(k) + 1;
    let mut sets = Vec::with_capacity(top + 1);
    sets.push(vec![k]);
    for i in 1..=top {
        let step = 1usize << (i - 1);
        let jmax = ((k >> (i - 1)) - 1) / 2;
        let mut set: Vec<usize> = (0..=jmax)
            .flat_map(|j| {
                let off = (2 * j + 1) * step;
                [k - off, k + off]
            })
            .collect();
        set.sort_unstable();
        sets.push(set);
    }
    Ok(PartitionFamily {
        k,
        sets,
        bset: bset(k),
    })
}

/// The unique `i` with `j ∈ A_i^k`.
pub fn aset_index_of(j: usize, k: usize) -> Result<usize> {
    if k == 0 {
        return Err(Error::Domain("k must be positive".into()));
    }
    if j > 2 * k {
        return Err(Error::Range {
            what: "j",
            value: j,
            max: 2 * k,
        });
    }
    Ok(match j.abs_diff(k) {
        0 => 0,
        d => d.trailing_zeros() as usize + 1,
    })
}
