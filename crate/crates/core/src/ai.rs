//! Algebraic immunity.
//!
//! [`ai_exact`] is the brute-force oracle: for `d = 0, 1, …` it asks whether
//! some nonzero polynomial of degree `≤ d` vanishes on `supp(f)` or on
//! `supp(f + 1)`, by computing the kernel of the point/monomial evaluation
//! matrix. It works on arbitrary truth tables and knows nothing about
//! symmetry.
//!
//! [`sym_annihilator_exists`] restricts the search to symmetric annihilators,
//! where the system collapses to the rows `ε_i` for the weights `i` in the
//! weight support. [`check_necessary`] evaluates the structural conditions
//! every symmetric function of maximum immunity must satisfy.

use serde::Serialize;

use crate::error::{domain, require_even, Result};
use crate::gf2::{lucas_row, BitMatrix, BitVec};
use crate::orders::{floor_log2, partition, prime_predecessors};
use crate::symfun::{SymFn, TruthTable};

/// Which of `f` and `f + 1` an annihilator kills.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// `f · g = 0`
    Function,
    /// `(f + 1) · g = 0`
    Complement,
}

impl Side {
    pub const BOTH: [Side; 2] = [Side::Function, Side::Complement];

    /// The value `f` takes on the points `g` must vanish on.
    fn support_value(self) -> bool {
        matches!(self, Side::Function)
    }
}

/// A polynomial in ANF, given by its monomials as variable bitmasks
/// (`x_1` is bit 0).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Annihilator {
    pub n: usize,
    pub monomials: Vec<u32>,
}

impl Annihilator {
    pub fn degree(&self) -> usize {
        self.monomials
            .iter()
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    pub fn eval(&self, x: u32) -> bool {
        self.monomials.iter().filter(|&&m| m & !x == 0).count() % 2 == 1
    }

    /// Checks `g ≠ 0` and that `g` vanishes wherever `f` equals the side's value.
    pub fn annihilates(&self, t: &TruthTable, side: Side) -> bool {
        if self.monomials.is_empty() {
            return false;
        }
        let target = side.support_value();
        (0..1u32 << t.n()).all(|x| t.get(x) != target || !self.eval(x))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AiReport {
    pub ai: usize,
    pub witness_side: Side,
    /// A minimum-degree annihilator, when requested.
    pub witness: Option<Annihilator>,
}

/// Whether [`ai_exact_with`] extracts an explicit annihilator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Witness {
    Compute,
    Skip,
}

/// Monomials of degree `≤ max_degree` ordered by degree, then by mask value.
struct MonomialBasis {
    order: Vec<u32>,
    col_of: Vec<u32>,
    /// `cols_upto[d]` = number of monomials of degree `≤ d`.
    cols_upto: Vec<usize>,
}

impl MonomialBasis {
    fn new(n: usize, max_degree: usize) -> Self {
        let size = 1usize << n;
        let mut order: Vec<u32> = (0..size as u32)
            .filter(|m| m.count_ones() as usize <= max_degree)
            .collect();
        order.sort_by_key(|&m| (m.count_ones(), m));
        let mut col_of = vec![u32::MAX; size];
        for (c, &m) in order.iter().enumerate() {
            col_of[m as usize] = c as u32;
        }
        let mut cols_upto = vec![0; max_degree + 1];
        for &m in &order {
            for slot in &mut cols_upto[m.count_ones() as usize..] {
                *slot += 1;
            }
        }
        Self {
            order,
            col_of,
            cols_upto,
        }
    }

    /// Evaluation row of point `x`: monomial `I` is one at `x` iff `I ⊆ x`.
    fn row(&self, x: u32, degree: usize) -> BitVec {
        let cols = self.cols_upto[degree];
        let mut row = BitVec::zeros(cols);
        let bits: Vec<u32> = (0..32).filter(|b| (x >> b) & 1 == 1).collect();
        let mut set = |mask: u32| row.set(self.col_of[mask as usize] as usize, true);
        visit_subsets(&bits, degree, 0, 0, &mut set);
        row
    }
}

fn visit_subsets(bits: &[u32], budget: usize, start: usize, acc: u32, f: &mut impl FnMut(u32)) {
    f(acc);
    if budget == 0 {
        return;
    }
    for i in start..bits.len() {
        visit_subsets(bits, budget - 1, i + 1, acc | (1 << bits[i]), f);
    }
}

/// Algebraic immunity of an arbitrary Boolean function, with a witness.
pub fn ai_exact(t: &TruthTable) -> Result<AiReport> {
    ai_exact_with(t, Witness::Compute)
}

/// Algebraic immunity value only.
pub fn ai_value(t: &TruthTable) -> usize {
    ai_exact_with(t, Witness::Skip)
        .expect("truth tables are capacity-checked on construction")
        .ai
}

pub fn ai_exact_with(t: &TruthTable, witness: Witness) -> Result<AiReport> {
    let n = t.n();
    let max_degree = n.div_ceil(2);
    let basis = MonomialBasis::new(n, max_degree);
    let weight = t.weight();
    let size = 1usize << n;

    for d in 0..=max_degree {
        let cols = basis.cols_upto[d];
        for side in Side::BOTH {
            let npoints = if side.support_value() {
                weight
            } else {
                size - weight
            };
            let underdetermined = npoints < cols;
            if underdetermined && witness == Witness::Skip {
                return Ok(AiReport {
                    ai: d,
                    witness_side: side,
                    witness: None,
                });
            }
            let target = side.support_value();
            let rows = (0..size as u32)
                .filter(|&x| t.get(x) == target)
                .map(|x| basis.row(x, d))
                .collect();
            let m = BitMatrix::from_rows(cols, rows)?;
            if !underdetermined && !m.has_nonzero_kernel() {
                continue;
            }
            let witness = match witness {
                Witness::Skip => None,
                Witness::Compute => {
                    let g = m
                        .kernel_basis()
                        .into_iter()
                        .next()
                        .expect("kernel is nonzero");
                    Some(Annihilator {
                        n,
                        monomials: g.iter_ones().map(|c| basis.order[c]).collect(),
                    })
                }
            };
            return Ok(AiReport {
                ai: d,
                witness_side: side,
                witness,
            });
        }
    }
    unreachable!("an annihilator of degree ⌈n/2⌉ always exists")
}

/// Whether `f` (or `f + 1`) has a nonzero symmetric annihilator of degree `< d`.
///
/// The unknowns are the coefficients of `σ_0, …, σ_{d−1}`; each weight `i`
/// on which the chosen side is one contributes the row `ε_i` truncated to `d`
/// coordinates.
pub fn sym_annihilator_exists(f: &SymFn, d: usize, side: Side) -> Result<bool> {
    let limit = f.n().div_ceil(2);
    if d == 0 || d > limit {
        return Err(domain(format!(
            "degree bound d = {d} must lie in 1..={limit}"
        )));
    }
    let target = side.support_value();
    let rows = (0..=f.n())
        .filter(|&i| f.value(i) == target)
        .map(|i| lucas_row(i, d))
        .collect();
    Ok(BitMatrix::from_rows(d, rows)?.has_nonzero_kernel())
}

/// The structural conditions of [`check_necessary`], in evaluation order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Condition {
    /// `wt(v_f) ∈ {k, k + 1}`.
    WeightBound,
    /// Inside each `A_p − B^k − {k}`, the lower half is constant and every
    /// position disagrees with its mirror `n − i`.
    MirrorPairs,
    /// At most one `t ≺′ k` has `v_f(t) = v_f(n − t)`.
    SingleEqualPair,
    /// No `t ≺′ k` has `(v_f(t), v_f(k), v_f(n − t))` constant.
    MiddleTriples,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionFailure {
    pub condition: Condition,
    /// `[wt]`, `[p, i, j]`, `[t1, t2]` or `[t]` depending on the condition.
    pub witness: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionVerdict {
    pub weight_bound: bool,
    pub mirror_pairs: bool,
    pub single_equal_pair: bool,
    pub middle_triples: bool,
    /// The first failing condition in evaluation order.
    pub failure: Option<ConditionFailure>,
}

impl ConditionVerdict {
    pub fn all_passed(&self) -> bool {
        self.failure.is_none()
    }

    pub fn passed(&self, c: Condition) -> bool {
        match c {
            Condition::WeightBound => self.weight_bound,
            Condition::MirrorPairs => self.mirror_pairs,
            Condition::SingleEqualPair => self.single_equal_pair,
            Condition::MiddleTriples => self.middle_triples,
        }
    }
}

/// Evaluates the necessary conditions for `AI(f) = n/2`.
pub fn check_necessary(f: &SymFn) -> Result<ConditionVerdict> {
    let n = f.n();
    let k = require_even(n)?;
    let v = |i: usize| f.value(i);

    let wt = f.svv_weight();
    let weight = (wt == k || wt == k + 1).then_some(()).ok_or(vec![wt]);

    let fam = partition(k)?;
    let mirror = (|| {
        for p in 1..=floor_log2(k) {
            let lower: Vec<usize> = fam.sets[p]
                .iter()
                .copied()
                .filter(|&i| i < k && !fam.in_bset(i))
                .collect();
            let Some(&first) = lower.first() else {
                continue;
            };
            for &j in &lower {
                if v(j) != v(first) {
                    return Err(vec![p, first, j]);
                }
                if v(j) == v(n - j) {
                    return Err(vec![p, j, j]);
                }
            }
        }
        Ok(())
    })();

    let preds = prime_predecessors(k);
    let equal: Vec<usize> = preds
        .iter()
        .copied()
        .filter(|&t| v(t) == v(n - t))
        .collect();
    let single = if equal.len() <= 1 {
        Ok(())
    } else {
        Err(vec![equal[0], equal[1]])
    };

    let triples = match preds.iter().find(|&&t| v(t) == v(k) && v(k) == v(n - t)) {
        Some(&t) => Err(vec![t]),
        None => Ok(()),
    };

    let failure = [
        (Condition::WeightBound, &weight),
        (Condition::MirrorPairs, &mirror),
        (Condition::SingleEqualPair, &single),
        (Condition::MiddleTriples, &triples),
    ]
    .into_iter()
    .find_map(|(condition, r)| {
        r.as_ref().err().map(|w| ConditionFailure {
            condition,
            witness: w.clone(),
        })
    });

    Ok(ConditionVerdict {
        weight_bound: weight.is_ok(),
        mirror_pairs: mirror.is_ok(),
        single_equal_pair: single.is_ok(),
        middle_triples: triples.is_ok(),
        failure,
    })
}

/// One family of weights tied together by a low-degree annihilator argument:
/// for `n = 2^{p+1}μ + 2m` with `p, μ ≥ 1` and `0 ≤ m < 2^p`, the positions
/// `2^pμ + m − 2^p i + 2^{p−1}` and `2^pμ + m + 2^p j − 2^{p−1}` for
/// `1 ≤ i, j ≤ μ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConstraintSet {
    pub p: usize,
    pub mu: usize,
    pub m: usize,
    /// Sorted ascending.
    pub indices: Vec<usize>,
}

/// All constraint sets for `n` variables, one per admissible `p`.
pub fn reflection_constraint_sets(n: usize) -> Result<Vec<ConstraintSet>> {
    let k = require_even(n)?;
    let mut out = Vec::new();
    let mut p = 1;
    while (1usize << p) <= k {
        let (mu, m) = (k >> p, k & ((1usize << p) - 1));
        let (step, half) = (1usize << p, 1usize << (p - 1));
        let base = step * mu + m;
        let mut indices: Vec<usize> = (1..=mu)
            .flat_map(|i| [base - step * i + half, base + step * i - half])
            .collect();
        indices.sort_unstable();
        out.push(ConstraintSet { p, mu, m, indices });
        p += 1;
    }
    Ok(out)
}
