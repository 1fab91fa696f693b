//! Even-variable symmetric Boolean functions with maximum algebraic immunity.
//!
//! The crate builds every `n`-variable symmetric function whose algebraic
//! immunity equals `n/2` from a short list of parameters ([`enumerate`]),
//! maps any value vector back to those parameters, and checks the whole
//! construction against an independent brute-force immunity oracle
//! ([`ai`], [`harness`]).

pub mod ai;
pub mod enumerate;
mod error;
pub mod gf2;
pub mod harness;
pub mod orders;
pub mod symfun;

pub use ai::{
    ai_exact, ai_value, check_necessary, sym_annihilator_exists, AiReport, Annihilator, Condition,
    ConditionVerdict, Side,
};
pub use enumerate::{
    classify, enumerate_all, expected_count, weight_catalog, CaseParams, CaseTag, MaxAiRecord,
    RecordRow, Triple, WeightCatalog,
};
pub use error::{Error, Result};
pub use gf2::{BitMatrix, BitVec};
pub use orders::{bset, partition, PartitionFamily};
pub use symfun::{BigCount, SanfVec, SymFn, TruthTable, ORACLE_LIMIT};
