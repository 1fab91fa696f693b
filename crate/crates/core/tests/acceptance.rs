//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any
//! failure. Set `MAXAI_EXTENDED=1` to add the exhaustive n = 12 check.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use maxai::ai::{ai_value, sym_annihilator_exists, Side};
use maxai::enumerate::enumerate_all;
use maxai::gf2::{epsilon, sum_epsilon_over, BitMatrix};
use maxai::harness::{verify_exhaustive, verify_sample};
use maxai::orders::lucas_leq;
use maxai::symfun::sanf_to_svv;
use maxai::{check_necessary, expected_count, partition, BigCount, SymFn};

type Check = Result<String, String>;
type Criterion = (&'static str, Duration, Box<dyn Fn() -> Check>);

fn candidates(n: usize) -> Vec<SymFn> {
    enumerate_all(n).unwrap().into_iter().map(|r| r.f).collect()
}

fn all_svvs(n: usize) -> impl Iterator<Item = SymFn> {
    (0..1u64 << (n + 1)).map(move |c| SymFn::from_fn(n, |i| (c >> i) & 1 == 1).unwrap())
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn golden_tables() -> Check {
    let records = enumerate_all(14).map_err(|e| e.to_string())?;
    ensure(records.len() == 56, || {
        format!("{} functions, want 56", records.len())
    })?;
    let ours: BTreeSet<SymFn> = records
        .into_iter()
        .map(|r| r.f)
        .filter(|f| f.value(7))
        .collect();
    let reference: BTreeSet<SymFn> = common::n14_tables()
        .into_iter()
        .flat_map(|t| t.rows)
        .collect();
    ensure(ours == reference, || {
        let diff: Vec<String> = ours
            .symmetric_difference(&reference)
            .map(SymFn::to_string)
            .collect();
        format!("differs at {diff:?}")
    })?;
    Ok("56 functions, 28 reference rows matched".into())
}

fn weight_values() -> Check {
    for t in common::n14_tables() {
        for f in &t.rows {
            let (w, wc) = (f.hamming_weight(), f.complement().hamming_weight());
            ensure(
                w == BigCount::from(t.weight) && wc == BigCount::from(t.complement_weight),
                || format!("{f}: {w}/{wc}, want {}/{}", t.weight, t.complement_weight),
            )?;
        }
    }
    Ok("9908/6476 9544/6840 9907/6477 9894/6490".into())
}

fn count_law() -> Check {
    for n in (2..=256).step_by(2) {
        let got = enumerate_all(n).map_err(|e| e.to_string())?.len();
        let want = (2 * n.count_ones() as usize + 1) << n.ilog2();
        ensure(got == want && expected_count(n) == Ok(want as u64), || {
            format!("n={n}: {got}, want {want}")
        })?;
    }
    Ok("even n in [2, 256]".into())
}

fn oracle_equivalence(ns: &[usize]) -> Check {
    let mut counts = Vec::new();
    for &n in ns {
        let r = verify_exhaustive(n, &candidates(n)).map_err(|e| e.to_string())?;
        ensure(r.sets_equal(), || {
            format!("n={n}: {:?}", r.first_counterexample())
        })?;
        counts.push(format!("{}:{}", n, r.oracle_max));
    }
    Ok(format!("sets equal ({})", counts.join(" ")))
}

fn sampled_n14() -> Check {
    let r = verify_sample(14, &candidates(14), 200, 0).map_err(|e| e.to_string())?;
    ensure(r.passed(), || {
        format!("counterexample {:?}", r.first_counterexample())
    })?;
    Ok(format!(
        "{} enumerated at AI 7, {} sampled below 7",
        r.candidates,
        r.sampled.len()
    ))
}

fn structural() -> Check {
    for n in 1..=12 {
        for f in all_svvs(n) {
            ensure(sanf_to_svv(&f.to_sanf()) == f, || {
                format!("involution fails at {f}")
            })?;
            let d = f.degree();
            for l in 1..=n.ilog2() {
                let p = 1usize << l;
                if d < p {
                    ensure((0..=n - p).all(|i| f.value(i) == f.value(i + p)), || {
                        format!("periodicity fails at {f}, period {p}")
                    })?;
                }
            }
        }
    }
    for k in 1..=512 {
        let fam = partition(k).unwrap();
        let mut members: Vec<usize> = fam.sets.concat();
        members.sort_unstable();
        ensure(members == (0..=2 * k).collect::<Vec<_>>(), || {
            format!("cover fails at k={k}")
        })?;
        for s in &fam.sets {
            ensure(s.iter().all(|j| s.contains(&(2 * k - j))), || {
                format!("reflection fails at k={k}")
            })?;
        }
    }
    for k in 1..=1000usize {
        ensure(
            partition(k).unwrap().bset.len() == 2 * k.count_ones() as usize,
            || format!("|B| fails at k={k}"),
        )?;
    }
    let rank = |k: usize, idx: Vec<usize>| {
        let rows = idx.into_iter().map(|i| epsilon(i, k).unwrap()).collect();
        BitMatrix::from_rows(k, rows).unwrap().rank()
    };
    for k in 1..=256 {
        ensure(
            rank(k, (0..k).collect()) == k && rank(k, (k + 1..=2 * k).collect()) == k,
            || format!("pure basis fails at k={k}"),
        )?;
        let fam = partition(k).unwrap();
        for p in 0..fam.sets.len() {
            let sel: Vec<usize> = fam
                .set(p)
                .iter()
                .copied()
                .filter(|&j| lucas_leq(j, k))
                .collect();
            ensure(
                sum_epsilon_over(sel.clone(), k, false) == sum_epsilon_over(sel, k, true),
                || format!("cell identity fails at k={k}, p={p}"),
            )?;
        }
        let below: Vec<usize> = (0..k).filter(|&j| lucas_leq(j, k)).collect();
        let ek = epsilon(k, k).unwrap();
        ensure(
            sum_epsilon_over(below.clone(), k, false).unwrap() == ek
                && sum_epsilon_over(below, k, true).unwrap() == ek,
            || format!("epsilon sum fails at k={k}"),
        )?;
    }
    for k in 1..=64 {
        let fam = partition(k).unwrap();
        let cells = &fam.sets[1..];
        for choice in 0u64..1 << cells.len() {
            let idx: Vec<usize> = cells
                .iter()
                .enumerate()
                .flat_map(|(i, s)| {
                    let upper = choice >> i & 1 == 1;
                    s.iter()
                        .copied()
                        .filter(move |&j| (j > k) == upper && j != k)
                })
                .collect();
            ensure(idx.len() == k && rank(k, idx) == k, || {
                format!("mixed basis fails at k={k}, choice {choice:b}")
            })?;
        }
    }
    for n in (2..=64).step_by(2) {
        let k = n / 2;
        for f in candidates(n) {
            ensure([k, k + 1].contains(&f.svv_weight()), || {
                format!("weight bound fails at {f}")
            })?;
            for side in Side::BOTH {
                ensure(!sym_annihilator_exists(&f, k, side).unwrap(), || {
                    format!("symmetric annihilator below {k} for {f}")
                })?;
            }
        }
    }
    Ok("all suites".into())
}

fn fault_injection() -> Check {
    let maj = SymFn::majority(14).unwrap();
    let fam = partition(7).unwrap();
    let positions: Vec<usize> = fam
        .set(1)
        .iter()
        .copied()
        .filter(|&j| !fam.in_bset(j) && j != 7)
        .collect();
    for &pos in &positions {
        let mut f = maj.clone();
        f.flip(pos);
        ensure(!check_necessary(&f).unwrap().all_passed(), || {
            format!("flip {pos} passes checks")
        })?;
        let ai = ai_value(&f.to_truth_table().unwrap());
        ensure(ai < 7, || format!("flip {pos} keeps AI 7"))?;
    }
    Ok(format!("positions {positions:?} rejected, oracle AI < 7"))
}

fn main() -> ExitCode {
    let extended = std::env::var("MAXAI_EXTENDED").is_ok_and(|v| v == "1");
    let criteria: Vec<Criterion> = vec![
        (
            "1 golden tables n=14",
            Duration::from_secs(1),
            Box::new(golden_tables),
        ),
        (
            "2 weight values n=14",
            Duration::from_secs(1),
            Box::new(weight_values),
        ),
        (
            "3 count law n<=256",
            Duration::from_secs(10),
            Box::new(count_law),
        ),
        (
            "4 oracle equivalence n<=10",
            Duration::from_secs(300),
            Box::new(|| oracle_equivalence(&[2, 4, 6, 8, 10])),
        ),
        (
            "5 sampled oracle n=14",
            Duration::from_secs(1200),
            Box::new(sampled_n14),
        ),
        (
            "6 structural suites",
            Duration::from_secs(60),
            Box::new(structural),
        ),
        (
            "7 fault injection",
            Duration::from_secs(60),
            Box::new(fault_injection),
        ),
    ];
    let mut failed = 0;
    for (name, limit, run) in &criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let (ok, detail) = match outcome {
            Ok(d) if elapsed <= *limit => (true, d),
            Ok(d) => (false, format!("{d}; over time limit {limit:?}")),
            Err(e) => (false, e),
        };
        failed += usize::from(!ok);
        println!(
            "{} criterion {name}: {detail} [{:.2?}]",
            if ok { "PASS" } else { "FAIL" },
            elapsed
        );
    }
    if extended {
        let start = Instant::now();
        let outcome = oracle_equivalence(&[12]);
        let ok = outcome.is_ok() && start.elapsed() <= Duration::from_secs(1800);
        failed += usize::from(!ok);
        let detail = outcome.unwrap_or_else(|e| e);
        println!(
            "{} criterion 4x oracle equivalence n=12: {detail} [{:.2?}]",
            if ok { "PASS" } else { "FAIL" },
            start.elapsed()
        );
    } else {
        println!("SKIP criterion 4x oracle equivalence n=12: set MAXAI_EXTENDED=1");
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed.min(criteria.len()),
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
