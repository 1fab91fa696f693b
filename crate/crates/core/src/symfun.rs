//! Symmetric Boolean functions held as simplified value vectors.
//!
//! A symmetric function on `n` variables depends only on the Hamming weight
//! of its input, so it is fully described by the `n + 1` bits
//! `v_f(0), …, v_f(n)`. The coefficients `λ_f(i)` over the elementary
//! symmetric polynomials `σ_i` are related to `v_f` by the Lucas transform
//! `λ_f(i) = Σ_{j⪯i} v_f(j)`, which is its own inverse.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{domain, require_even, Error, Result};
use crate::gf2::BitVec;

/// Largest variable count accepted by truth-table based computations.
pub const ORACLE_LIMIT: usize = 16;

/// Exact nonnegative integer used for weights and binomial coefficients.
pub type BigCount = BigUint;

/// An `n`-variable symmetric Boolean function, stored as its value vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SymFn {
    n: usize,
    svv: BitVec,
}

/// Coefficients of a symmetric function over `σ_0, …, σ_n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SanfVec {
    n: usize,
    lambda: BitVec,
}

impl SymFn {
    pub fn new(n: usize, svv: BitVec) -> Result<Self> {
        if n == 0 {
            return Err(domain("a symmetric function needs at least one variable"));
        }
        if svv.len() != n + 1 {
            return Err(domain(format!(
                "value vector has {} bits, expected {}",
                svv.len(),
                n + 1
            )));
        }
        Ok(Self { n, svv })
    }

    pub fn from_fn(n: usize, mut value: impl FnMut(usize) -> bool) -> Result<Self> {
        let bits: Vec<bool> = (0..=n).map(&mut value).collect();
        Self::new(n, BitVec::from_bools(&bits))
    }

    pub fn zero(n: usize) -> Result<Self> {
        Self::new(n, BitVec::zeros(n + 1))
    }

    pub fn one(n: usize) -> Result<Self> {
        Self::new(n, BitVec::ones(n + 1))
    }

    /// `G_n`: zero on weights `≤ n/2`, one above.
    pub fn majority(n: usize) -> Result<Self> {
        let k = require_even(n)?;
        Self::from_fn(n, |i| i > k)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn value(&self, weight: usize) -> bool {
        self.svv.get(weight)
    }

    pub fn svv(&self) -> &BitVec {
        &self.svv
    }

    pub fn into_svv(self) -> BitVec {
        self.svv
    }

    /// `wt(v_f)`, the number of weights on which `f` is one.
    pub fn svv_weight(&self) -> usize {
        self.svv.count_ones()
    }

    pub fn set(&mut self, weight: usize, value: bool) {
        self.svv.set(weight, value);
    }

    pub fn flip(&mut self, weight: usize) {
        self.svv.flip(weight);
    }

    /// `f + 1`.
    pub fn complement(&self) -> SymFn {
        let mut svv = self.svv.clone();
        svv.not_assign();
        SymFn { n: self.n, svv }
    }

    /// `f′(x) = f(x + 1)`, whose value vector is `v_f` read backwards.
    pub fn reverse_complement_input(&self) -> SymFn {
        let n = self.n;
        SymFn {
            n,
            svv: BitVec::from_bools(&(0..=n).map(|i| self.value(n - i)).collect::<Vec<_>>()),
        }
    }

    pub fn to_sanf(&self) -> SanfVec {
        SanfVec {
            n: self.n,
            lambda: lucas_transform(&self.svv),
        }
    }

    /// Algebraic degree; zero for the zero function.
    pub fn degree(&self) -> usize {
        self.to_sanf().lambda.iter_ones().last().unwrap_or(0)
    }

    pub fn to_truth_table(&self) -> Result<TruthTable> {
        check_capacity(self.n)?;
        TruthTable::from_fn(self.n, |x| self.value(x.count_ones() as usize))
    }

    /// `wt(f) = Σ_{v_f(i)=1} C(n, i)`.
    pub fn hamming_weight(&self) -> BigCount {
        binomial_row(self.n)
            .into_iter()
            .enumerate()
            .filter(|&(i, _)| self.value(i))
            .map(|(_, c)| c)
            .sum()
    }

    /// `{ i : v_f(i) = 1 }`.
    pub fn weight_support(&self) -> BTreeSet<usize> {
        self.svv.iter_ones().collect()
    }
}

impl fmt::Display for SymFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.svv, f)
    }
}

impl fmt::Debug for SymFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymFn(n={}, svv={})", self.n, self.svv)
    }
}

/// Parses the `'0'`/`'1'` wire format, `v_f(0)` first.
impl FromStr for SymFn {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.len() < 2 {
            return Err(Error::Parse(format!(
                "value vector {s:?} needs at least two bits"
            )));
        }
        let bits = BitVec::parse_bits(s)?;
        SymFn::new(bits.len() - 1, bits)
    }
}

/// Orders by `n`, then by the value vector read as a binary number with
/// `v_f(0)` most significant.
impl Ord for SymFn {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n.cmp(&other.n).then_with(|| {
            (0..=self.n)
                .map(|i| self.value(i).cmp(&other.value(i)))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal)
        })
    }
}

impl PartialOrd for SymFn {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl SanfVec {
    pub fn new(n: usize, lambda: BitVec) -> Result<Self> {
        if n == 0 || lambda.len() != n + 1 {
            return Err(domain(format!(
                "coefficient vector has {} bits, expected {}",
                lambda.len(),
                n + 1
            )));
        }
        Ok(Self { n, lambda })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lambda(&self) -> &BitVec {
        &self.lambda
    }

    pub fn to_svv(&self) -> SymFn {
        SymFn {
            n: self.n,
            svv: lucas_transform(&self.lambda),
        }
    }
}

impl fmt::Display for SanfVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.lambda, f)
    }
}

impl FromStr for SanfVec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let f: SymFn = s.parse()?;
        SanfVec::new(f.n, f.svv)
    }
}

pub fn svv_to_sanf(f: &SymFn) -> SanfVec {
    f.to_sanf()
}

pub fn sanf_to_svv(l: &SanfVec) -> SymFn {
    l.to_svv()
}

/// `out(i) = Σ_{j⪯i} in(j)` on the index range `0..len`.
fn lucas_transform(input: &BitVec) -> BitVec {
    let len = input.len();
    let mut out = input.clone();
    let mut bit = 1usize;
    while bit < len {
        for i in 0..len {
            if i & bit != 0 && out.get(i ^ bit) {
                out.flip(i);
            }
        }
        bit <<= 1;
    }
    out
}

/// A Boolean function on `n ≤ ORACLE_LIMIT` variables as its full truth table.
///
/// Bit `x` holds `f(x)`, where `x_1` is the least significant bit of `x`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TruthTable {
    n: usize,
    bits: BitVec,
}

fn check_capacity(n: usize) -> Result<()> {
    if n > ORACLE_LIMIT {
        return Err(Error::Capacity {
            n,
            limit: ORACLE_LIMIT,
        });
    }
    Ok(())
}

impl TruthTable {
    pub fn new(n: usize, bits: BitVec) -> Result<Self> {
        check_capacity(n)?;
        if bits.len() != 1 << n {
            return Err(domain(format!(
                "truth table has {} bits, expected {}",
                bits.len(),
                1usize << n
            )));
        }
        Ok(Self { n, bits })
    }

    pub fn from_fn(n: usize, mut value: impl FnMut(u32) -> bool) -> Result<Self> {
        check_capacity(n)?;
        let size = 1usize << n;
        let ones = (0..size).filter(|&x| value(x as u32));
        Ok(Self {
            n,
            bits: BitVec::from_ones(size, ones),
        })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, x: u32) -> bool {
        self.bits.get(x as usize)
    }

    pub fn bits(&self) -> &BitVec {
        &self.bits
    }

    pub fn weight(&self) -> usize {
        self.bits.count_ones()
    }

    /// `supp(f)` in ascending order.
    pub fn support(&self) -> impl Iterator<Item = u32> + '_ {
        self.bits.iter_ones().map(|x| x as u32)
    }

    pub fn complement(&self) -> TruthTable {
        let mut bits = self.bits.clone();
        bits.not_assign();
        TruthTable { n: self.n, bits }
    }

    /// The table of `x ↦ f(x + 1)`.
    pub fn input_complement(&self) -> TruthTable {
        let mask = ((1usize << self.n) - 1) as u32;
        TruthTable::from_fn(self.n, |x| self.get(x ^ mask)).expect("same size")
    }

    /// `WS(f) = { wt(x) : f(x) = 1 }`.
    pub fn weight_support(&self) -> BTreeSet<usize> {
        self.support().map(|x| x.count_ones() as usize).collect()
    }

    /// Whether `f` is constant on every weight class.
    pub fn is_symmetric(&self) -> bool {
        let mut seen: Vec<Option<bool>> = vec![None; self.n + 1];
        (0..1u32 << self.n).all(|x| {
            let slot = &mut seen[x.count_ones() as usize];
            let v = self.get(x);
            *slot.get_or_insert(v) == v
        })
    }
}

/// The truth table of `P_b = (x_1 + x_2)(x_3 + x_4)⋯(x_{2b−1} + x_{2b})`
/// on `2b` variables.
pub fn pb_truth_table(b: usize) -> Result<TruthTable> {
    check_capacity(2 * b)?;
    TruthTable::from_fn(2 * b, |x| {
        (0..b).all(|pair| ((x >> (2 * pair)) ^ (x >> (2 * pair + 1))) & 1 == 1)
    })
}

/// `C(n, r)` exactly.
pub fn binomial(n: usize, r: usize) -> BigCount {
    if r > n {
        return BigCount::zero();
    }
    let r = r.min(n - r);
    (0..r).fold(BigCount::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// `[C(n, 0), …, C(n, n)]`.
pub fn binomial_row(n: usize) -> Vec<BigCount> {
    let mut row = Vec::with_capacity(n + 1);
    let mut c = BigCount::one();
    for i in 0..=n {
        row.push(c.clone());
        c = c * (n - i) / (i + 1);
    }
    row
}
