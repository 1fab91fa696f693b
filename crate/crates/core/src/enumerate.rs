//! Constructive enumeration of the `n`-variable symmetric functions with
//! algebraic immunity `n/2`.
//!
//! Write `n = 2k`, `m = ⌊log₂k⌋`. Every such function falls in exactly one of
//! three shapes, each determined by a handful of free bits:
//!
//! * item 1: on every `A_t` (`1 ≤ t ≤ m+1`) the positions below `k` carry
//!   `a_t` and those above carry `a_t + 1`; `v(k) = a_0`.
//! * item 2: as item 1 on `A_1 … A_m`, while `A_{m+1} ∪ {k}` carries the
//!   pattern `(a_{m+1}, a_{m+1} + 1, a_{m+1})`.
//! * item 3: for `p_0 ∈ supp(k)`, `p_0 ≠ m`, and `i_0 = k mod 2^{p_0}`,
//!   as item 1 everywhere except `(i_0, k, n − i_0)`, which carries
//!   `(0, 1, 0)` or `(1, 0, 1)`.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{domain, require_even, Error, Result};
use crate::gf2::BitVec;
use crate::orders::{floor_log2, partition, prime_predecessors, PartitionFamily};
use crate::symfun::{binomial, BigCount, SymFn};

/// Largest `n` accepted by [`enumerate_all`].
pub const MAX_ENUM_N: usize = 1024;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CaseTag {
    Item1,
    Item2,
    Item3,
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CaseTag::Item1 => "item1",
            CaseTag::Item2 => "item2",
            CaseTag::Item3 => "item3",
        })
    }
}

/// Values placed on `(i_0, k, n − i_0)` by an item-3 function.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Triple {
    #[serde(rename = "010")]
    Low,
    #[serde(rename = "101")]
    High,
}

impl Triple {
    pub const ALL: [Triple; 2] = [Triple::Low, Triple::High];

    pub fn bits(self) -> (bool, bool, bool) {
        match self {
            Triple::Low => (false, true, false),
            Triple::High => (true, false, true),
        }
    }

    fn from_bits(bits: (bool, bool, bool)) -> Option<Self> {
        Self::ALL.into_iter().find(|t| t.bits() == bits)
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Triple::Low => "010",
            Triple::High => "101",
        })
    }
}

/// Free parameters of a max-AI function.
///
/// `a` is `(a_0, …, a_{m+1})` for item 1 and `(a_1, …, a_{m+1})` otherwise.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CaseParams {
    Item1 {
        a: Vec<bool>,
    },
    Item2 {
        a: Vec<bool>,
    },
    Item3 {
        p0: usize,
        a: Vec<bool>,
        triple: Triple,
    },
}

impl CaseParams {
    pub fn tag(&self) -> CaseTag {
        match self {
            CaseParams::Item1 { .. } => CaseTag::Item1,
            CaseParams::Item2 { .. } => CaseTag::Item2,
            CaseParams::Item3 { .. } => CaseTag::Item3,
        }
    }

    pub fn bits(&self) -> &[bool] {
        match self {
            CaseParams::Item1 { a } | CaseParams::Item2 { a } | CaseParams::Item3 { a, .. } => a,
        }
    }

    pub fn build(&self, n: usize) -> Result<SymFn> {
        match self {
            CaseParams::Item1 { a } => build_item1(n, a),
            CaseParams::Item2 { a } => build_item2(n, a),
            CaseParams::Item3 { p0, a, triple } => build_item3(n, *p0, a, *triple),
        }
    }
}

/// A max-AI function together with the parameters that generate it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MaxAiRecord {
    pub f: SymFn,
    pub params: CaseParams,
}

impl MaxAiRecord {
    pub fn case_tag(&self) -> CaseTag {
        self.params.tag()
    }

    pub fn weight(&self) -> BigCount {
        self.f.hamming_weight()
    }
}

struct Layout {
    n: usize,
    k: usize,
    m: usize,
    fam: PartitionFamily,
}

impl Layout {
    fn new(n: usize) -> Result<Self> {
        let k = require_even(n)?;
        Ok(Self {
            n,
            k,
            m: floor_log2(k),
            fam: partition(k)?,
        })
    }

    /// Applies the item-1 rule on `A_t` for `t` in `ts`, skipping `skip`.
    fn fill(
        &self,
        v: &mut SymFn,
        ts: std::ops::RangeInclusive<usize>,
        a_t: &[bool],
        skip: &[usize],
    ) {
        for t in ts {
            let a = a_t[t - 1];
            for &i in self.fam.set(t) {
                if !skip.contains(&i) {
                    v.set(i, if i < self.k { a } else { !a });
                }
            }
        }
    }

    fn check_len(&self, a: &[bool], want: usize) -> Result<()> {
        if a.len() != want {
            return Err(domain(format!(
                "n = {} takes {want} parameter bits, got {}",
                self.n,
                a.len()
            )));
        }
        Ok(())
    }

    fn item3_heads(&self) -> Vec<usize> {
        (0..self.m).filter(|&p| (self.k >> p) & 1 == 1).collect()
    }
}

/// Item 1 from `a = (a_0, a_1, …, a_{m+1})`.
pub fn build_item1(n: usize, a: &[bool]) -> Result<SymFn> {
    let l = Layout::new(n)?;
    l.check_len(a, l.m + 2)?;
    let mut v = SymFn::zero(n)?;
    v.set(l.k, a[0]);
    l.fill(&mut v, 1..=l.m + 1, &a[1..], &[]);
    Ok(v)
}

/// Item 2 from `a = (a_1, …, a_{m+1})`.
pub fn build_item2(n: usize, a: &[bool]) -> Result<SymFn> {
    let l = Layout::new(n)?;
    l.check_len(a, l.m + 1)?;
    let mut v = SymFn::zero(n)?;
    l.fill(&mut v, 1..=l.m, a, &[]);
    let top = a[l.m];
    let half = 1usize << l.m;
    v.set(l.k - half, top);
    v.set(l.k, !top);
    v.set(l.k + half, top);
    Ok(v)
}

/// Item 3 from `p_0`, `a = (a_1, …, a_{m+1})` and the middle triple.
pub fn build_item3(n: usize, p0: usize, a: &[bool], triple: Triple) -> Result<SymFn> {
    let l = Layout::new(n)?;
    if !l.item3_heads().contains(&p0) {
        return Err(domain(format!(
            "p0 = {p0} must be a set bit of k = {} other than the top bit",
            l.k
        )));
    }
    l.check_len(a, l.m + 1)?;
    let i0 = l.k & ((1usize << p0) - 1);
    let mut v = SymFn::zero(n)?;
    l.fill(&mut v, 1..=l.m + 1, a, &[i0, n - i0]);
    let (lo, mid, hi) = triple.bits();
    v.set(i0, lo);
    v.set(l.k, mid);
    v.set(n - i0, hi);
    Ok(v)
}

fn all_bit_vectors(len: usize) -> impl Iterator<Item = Vec<bool>> {
    (0u64..1 << len).map(move |code| (0..len).map(|i| (code >> (len - 1 - i)) & 1 == 1).collect())
}

/// `(2·wt(n) + 1) · 2^{⌊log₂n⌋}`.
pub fn expected_count(n: usize) -> Result<u64> {
    require_even(n)?;
    Ok((2 * n.count_ones() as u64 + 1) << floor_log2(n))
}

/// All max-AI functions on `n` variables, sorted by value vector with `v(0)`
/// most significant.
pub fn enumerate_all(n: usize) -> Result<Vec<MaxAiRecord>> {
    if n > MAX_ENUM_N {
        return Err(Error::Capacity {
            n,
            limit: MAX_ENUM_N,
        });
    }
    let l = Layout::new(n)?;
    let mut params = Vec::new();
    params.extend(all_bit_vectors(l.m + 2).map(|a| CaseParams::Item1 { a }));
    params.extend(all_bit_vectors(l.m + 1).map(|a| CaseParams::Item2 { a }));
    for p0 in l.item3_heads() {
        for a in all_bit_vectors(l.m + 1) {
            for triple in Triple::ALL {
                params.push(CaseParams::Item3 {
                    p0,
                    a: a.clone(),
                    triple,
                });
            }
        }
    }
    let mut records = params
        .into_iter()
        .map(|params| {
            Ok(MaxAiRecord {
                f: params.build(n)?,
                params,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    records.sort_by(|x, y| x.f.cmp(&y.f));
    debug_assert!(records.windows(2).all(|w| w[0].f != w[1].f));
    Ok(records)
}

/// Recovers the generating parameters of `f`, or `None` when `AI(f) < n/2`.
pub fn classify(f: &SymFn) -> Result<Option<MaxAiRecord>> {
    let l = Layout::new(f.n())?;
    let (n, k) = (l.n, l.k);
    // k − 2^{t−1} ∈ A_t lies below k and is never the exempt i_0.
    let a: Vec<bool> = (1..=l.m + 1)
        .map(|t| f.value(k - (1usize << (t - 1))))
        .collect();

    let mut candidates = vec![
        CaseParams::Item1 {
            a: std::iter::once(f.value(k))
                .chain(a.iter().copied())
                .collect(),
        },
        CaseParams::Item2 { a: a.clone() },
    ];
    for p0 in l.item3_heads() {
        let i0 = k & ((1usize << p0) - 1);
        if let Some(triple) = Triple::from_bits((f.value(i0), f.value(k), f.value(n - i0))) {
            candidates.push(CaseParams::Item3 {
                p0,
                a: a.clone(),
                triple,
            });
        }
    }
    for params in candidates {
        if params.build(n)? == *f {
            debug_assert_eq!(
                class_membership(f)?,
                Some(match params.tag() {
                    CaseTag::Item1 => FnClass::One,
                    _ => FnClass::Two,
                })
            );
            return Ok(Some(MaxAiRecord {
                f: f.clone(),
                params,
            }));
        }
    }
    Ok(None)
}

/// The two structural classes of candidate functions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum FnClass {
    /// Every `A_p` is constant on each side of `k` with opposite values.
    One,
    /// A class-one function with one position of `B^k` flipped and the
    /// middle adjusted.
    Two,
}

fn is_class1(f: &SymFn, fam: &PartitionFamily) -> bool {
    let k = fam.k;
    fam.sets[1..].iter().all(|set| {
        let lo = set[0];
        set.iter().all(|&i| {
            let same_side = (i < k) == (lo < k);
            f.value(i) == (f.value(lo) ^ !same_side)
        })
    })
}

/// Class membership by the generator definition: class two means
/// `v_f = v_g + e_t + δ·e_k` (or with `e_{n−t}`) for a class-one `g`,
/// some `t ≺′ k`, and `δ = v_g(t) + v_g(k)`.
pub fn class_membership(f: &SymFn) -> Result<Option<FnClass>> {
    let l = Layout::new(f.n())?;
    if is_class1(f, &l.fam) {
        return Ok(Some(FnClass::One));
    }
    for t in prime_predecessors(l.k) {
        for pos in [t, l.n - t] {
            for delta in [false, true] {
                let mut g = f.clone();
                g.flip(pos);
                if delta {
                    g.flip(l.k);
                }
                if is_class1(&g, &l.fam) && delta == (g.value(pos) ^ g.value(l.k)) {
                    return Ok(Some(FnClass::Two));
                }
            }
        }
    }
    Ok(None)
}

/// Where a catalog weight comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum WeightSource {
    /// `2^{n−1} ± ½·C(n, n/2)`.
    Balanced { plus: bool },
    /// `2^{n−1} + ½·C(n, n/2) − C(n, i)` (`plus`) or
    /// `2^{n−1} − ½·C(n, n/2) + C(n, i)`, for `i ≺′ n/2`.
    Shifted { i: usize, plus: bool },
}

impl fmt::Display for WeightSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            WeightSource::Balanced { plus: true } => write!(f, "2^(n-1)+C(n,n/2)/2"),
            WeightSource::Balanced { plus: false } => write!(f, "2^(n-1)-C(n,n/2)/2"),
            WeightSource::Shifted { i, plus: true } => write!(f, "2^(n-1)+C(n,n/2)/2-C(n,{i})"),
            WeightSource::Shifted { i, plus: false } => write!(f, "2^(n-1)-C(n,n/2)/2+C(n,{i})"),
        }
    }
}

/// The closed-form Hamming weights of the max-AI functions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightCatalog {
    pub n: usize,
    pub entries: BTreeMap<BigCount, Vec<WeightSource>>,
}

impl WeightCatalog {
    pub fn contains(&self, w: &BigCount) -> bool {
        self.entries.contains_key(w)
    }
}

pub fn weight_catalog(n: usize) -> Result<WeightCatalog> {
    let k = require_even(n)?;
    let base = BigUint::from(1u8) << (n - 1);
    let half = binomial(n, k) >> 1;
    let high: BigCount = &base + &half;
    let low: BigCount = &base - &half;
    let mut entries: BTreeMap<BigCount, Vec<WeightSource>> = BTreeMap::new();
    entries
        .entry(high.clone())
        .or_default()
        .push(WeightSource::Balanced { plus: true });
    entries
        .entry(low.clone())
        .or_default()
        .push(WeightSource::Balanced { plus: false });
    for i in prime_predecessors(k) {
        let c = binomial(n, i);
        entries
            .entry(&high - &c)
            .or_default()
            .push(WeightSource::Shifted { i, plus: true });
        entries
            .entry(&low + &c)
            .or_default()
            .push(WeightSource::Shifted { i, plus: false });
    }
    Ok(WeightCatalog { n, entries })
}

fn bits_to_string(a: &[bool]) -> String {
    a.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

/// Flat, serialisable view of a [`MaxAiRecord`]; the CSV and JSON layout.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecordRow {
    pub n: usize,
    pub case: CaseTag,
    pub p0: Option<usize>,
    pub params: String,
    pub triple: Option<Triple>,
    pub svv: String,
    /// Decimal Hamming weight.
    pub weight: String,
}

impl From<&MaxAiRecord> for RecordRow {
    fn from(r: &MaxAiRecord) -> Self {
        let (p0, triple) = match &r.params {
            CaseParams::Item3 { p0, triple, .. } => (Some(*p0), Some(*triple)),
            _ => (None, None),
        };
        RecordRow {
            n: r.f.n(),
            case: r.case_tag(),
            p0,
            params: bits_to_string(r.params.bits()),
            triple,
            svv: r.f.to_string(),
            weight: r.weight().to_string(),
        }
    }
}

impl TryFrom<RecordRow> for MaxAiRecord {
    type Error = Error;

    fn try_from(row: RecordRow) -> Result<Self> {
        let a = BitVec::parse_bits(&row.params)?;
        let a: Vec<bool> = (0..a.len()).map(|i| a.get(i)).collect();
        let params = match (row.case, row.p0, row.triple) {
            (CaseTag::Item1, None, None) => CaseParams::Item1 { a },
            (CaseTag::Item2, None, None) => CaseParams::Item2 { a },
            (CaseTag::Item3, Some(p0), Some(triple)) => CaseParams::Item3 { p0, a, triple },
            _ => return Err(domain("p0 and triple must be present exactly for item3")),
        };
        let f: SymFn = row.svv.parse()?;
        if f.n() != row.n {
            return Err(domain(format!("svv has n = {}, row says {}", f.n(), row.n)));
        }
        if params.build(row.n)? != f {
            return Err(domain(format!("parameters do not generate {}", row.svv)));
        }
        if f.hamming_weight().to_string() != row.weight {
            return Err(domain(format!(
                "weight {} does not match {}",
                row.weight, row.svv
            )));
        }
        Ok(MaxAiRecord { f, params })
    }
}

/// Checks that `records` are pairwise distinct.
pub fn all_distinct(records: &[MaxAiRecord]) -> bool {
    let mut seen = HashSet::new();
    records.iter().all(|r| seen.insert(&r.f))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bits(s: &str) -> Vec<bool> {
        s.chars().map(|c| c == '1').collect()
    }

    #[test]
    fn item1_examples() {
        assert_eq!(
            build_item1(14, &bits("1000")).unwrap().to_string(),
            "000000011111111"
        );
        // a = (a_0, a_1, a_2, a_3)
        assert_eq!(
            build_item1(14, &bits("1010")).unwrap().to_string(),
            "010001011011101"
        );
        assert!(build_item1(14, &bits("100")).is_err());
        assert!(build_item1(13, &bits("1111")).is_err());
    }

    #[test]
    fn item1_complement_params() {
        for code in 0u32..16 {
            let a: Vec<bool> = (0..4).map(|i| (code >> i) & 1 == 1).collect();
            let not_a: Vec<bool> = a.iter().map(|b| !b).collect();
            assert_eq!(
                build_item1(14, &a).unwrap().complement(),
                build_item1(14, &not_a).unwrap()
            );
        }
    }

    #[test]
    fn item2_and_item3_examples() {
        assert_eq!(
            build_item2(14, &bits("000")).unwrap().to_string(),
            "000000011110111"
        );
        assert_eq!(
            build_item3(14, 0, &bits("000"), Triple::Low)
                .unwrap()
                .to_string(),
            "000000011111110"
        );
        assert_eq!(
            build_item3(14, 1, &bits("000"), Triple::Low)
                .unwrap()
                .to_string(),
            "000000011111101"
        );
        assert!(build_item3(14, 2, &bits("000"), Triple::Low).is_err());
        assert!(build_item3(16, 0, &bits("0000"), Triple::Low).is_err());
    }

    #[test]
    fn item3_patterns_have_no_duplicates() {
        let mut triples = HashSet::new();
        for b in [false, true] {
            triples.insert((b, !b, b));
            triples.insert((!b, b, !b));
        }
        let listed: HashSet<_> = Triple::ALL.iter().map(|t| t.bits()).collect();
        assert_eq!(triples, listed);
    }

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_all(2).unwrap().len(), 6);
        assert_eq!(enumerate_all(8).unwrap().len(), 24);
        assert_eq!(enumerate_all(14).unwrap().len(), 56);
        assert!(enumerate_all(3).is_err());
        assert!(enumerate_all(1026).is_err());
    }

    #[test]
    fn classify_examples() {
        let c = |s: &str| classify(&s.parse().unwrap()).unwrap().map(|r| r.case_tag());
        assert_eq!(c("000000011111111"), Some(CaseTag::Item1));
        assert_eq!(c("000000011110111"), Some(CaseTag::Item2));
        assert_eq!(c("000000011111110"), Some(CaseTag::Item3));
        let mut f = SymFn::majority(14).unwrap();
        f.flip(2);
        assert_eq!(classify(&f).unwrap(), None);
    }

    #[test]
    fn classify_inverts_enumeration() {
        for n in (2..=40).step_by(2) {
            for r in enumerate_all(n).unwrap() {
                assert_eq!(classify(&r.f).unwrap().as_ref(), Some(&r));
            }
        }
    }

    #[test]
    fn catalog_examples() {
        let cat = weight_catalog(14).unwrap();
        for w in [9908u32, 6476, 9544, 6840, 9907, 6477, 9894, 6490] {
            assert!(cat.contains(&BigCount::from(w)), "{w}");
        }
        let cat8 = weight_catalog(8).unwrap();
        assert!(cat8.contains(&BigCount::from(163u32)));
        assert!(cat8.contains(&BigCount::from(93u32)));
    }

    #[test]
    fn row_round_trip() {
        for r in enumerate_all(12).unwrap() {
            let row = RecordRow::from(&r);
            assert_eq!(MaxAiRecord::try_from(row).unwrap(), r);
        }
        let mut row = RecordRow::from(&enumerate_all(6).unwrap()[0]);
        row.params = "1".repeat(row.params.len());
        row.svv = "0000000".into();
        assert!(MaxAiRecord::try_from(row).is_err());
    }
}
