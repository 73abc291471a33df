//! Acceptance checks. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails. All value comparisons are exact; the only
//! tolerances are the wall-clock budgets below.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_rational::Rational64;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qcdesign::gray::Parity;
use qcdesign::oracle::{
    check_bounds, check_fold_identities, check_group_invariance, check_halving, check_row_sums, row_sums_random,
    oracle_equivalence, ClaimResult, VERIFY_SEED,
};
use qcdesign::regsel::{
    enumerate_b, factor_range, fold_wlp_identities, ma_design, parse_b_notation, regular_wlp, select_b, table1,
    theorem2_key, BinaryMatrix,
};
use qcdesign::wlp::{max_aliasing, moments, projectivity_at_least, wlp_direct};
use qcdesign::z4::ReferenceKind;
use qcdesign::Result;

const BUDGET_FIXTURE_128: Duration = Duration::from_secs(120);
const BUDGET_FIXTURE_256: Duration = Duration::from_secs(15 * 60);
const BUDGET_DISTANCE: Duration = Duration::from_secs(1);
const BUDGET_ORACLE: Duration = Duration::from_secs(10 * 60);
const ROW_SUM_RANDOM_SPLITS: usize = 1000;
const FOLD_RANDOM_B_N5: usize = 100;

type Check = Box<dyn Fn() -> Result<Outcome>>;

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome { passed, detail: detail.into() }
}

fn fixture(n: usize, runs: usize, q: usize, a3: u64, a4: u64, budget: Duration) -> Result<Outcome> {
    let t = Instant::now();
    let ma = ma_design(n, runs, q)?;
    let distance_time = t.elapsed();
    let got = (ma.wlp.integer_u64(3), ma.wlp.integer_u64(4));
    let t = Instant::now();
    let direct = wlp_direct(&ma.design, 4)?;
    let direct_time = t.elapsed();
    let agree = direct == ma.wlp.truncated(4);
    let passed = got == (a3, a4) && agree && direct_time < budget && distance_time < BUDGET_DISTANCE;
    Ok(outcome(
        passed,
        format!(
            "N={runs} q={q}: A3={} A4={} (expected {a3}, {a4}); direct agrees: {agree}; \
             distance {distance_time:.2?}, direct {direct_time:.2?} (budget {budget:?})",
            got.0, got.1
        ),
    ))
}

fn examples_1_and_2() -> Result<Outcome> {
    let cases = [
        ("1 2 12 3 13 4 14 234 1234", [4, 14, 8, 0, 4, 1, 0]),
        ("1 2 12 3 13 4 24 34 1234", [6, 9, 9, 6, 0, 0, 1]),
        ("1 2 12 3 13 23 4 14 234", [6, 10, 8, 4, 2, 1, 0]),
        ("1 2 12 3 13 23 4 14 24", [7, 9, 6, 6, 3, 0, 0]),
        ("1 2 12 3 13 23 123 4 14", [8, 10, 4, 4, 4, 1, 0]),
    ];
    let mut problems = Vec::new();
    for (text, expected) in cases {
        let got = regular_wlp(&parse_b_notation(text, 4)?).from_three();
        if got != expected {
            problems.push(format!("[{text}] gives {got:?}"));
        }
    }
    let ii = regular_wlp(&parse_b_notation(cases[1].0, 4)?);
    let even = select_b(5, 10, Parity::Even)?;
    let odd = select_b(5, 10, Parity::Odd)?;
    let w_even = regular_wlp(&even.b);
    let w_odd = regular_wlp(&odd.b);
    let even_key = w_even.a(3) + w_even.a(4);
    let odd_key = w_odd.a(3) + 2 * w_odd.a(4);
    if even_key != 15 || w_even != ii {
        problems.push(format!("even selection {} has A3+A4 = {even_key}", even.b));
    }
    if odd_key != 24 || w_odd != ii {
        problems.push(format!("odd selection {} has A3+2A4 = {odd_key}", odd.b));
    }
    // uniqueness up to relabelling: every optimum shares one WLP
    for parity in [Parity::Even, Parity::Odd] {
        let sel = select_b(5, 10, parity)?;
        let optimal_wlps: std::collections::HashSet<Vec<u64>> = enumerate_b(5, 9)?
            .iter()
            .filter(|b| qcdesign::regsel::criterion_key(b, parity) == sel.key)
            .map(|b| regular_wlp(b).from_three())
            .collect();
        if optimal_wlps.len() != 1 {
            problems.push(format!("{parity:?}: optima with {} distinct WLPs", optimal_wlps.len()));
        }
    }
    let a = parse_b_notation("1 2 12 3", 3)?;
    let b = parse_b_notation("1 2 3 123", 3)?;
    let (wa, wb) = (regular_wlp(&a), regular_wlp(&b));
    if wa.a(3) + wa.a(4) != 1 || wb.a(3) + wb.a(4) != 1 {
        problems.push("the two deficiency-5 candidates do not both give A3+A4 = 1".into());
    }
    let pick = select_b(4, 5, Parity::Odd)?;
    if pick.b != a {
        problems.push(format!("odd rule at deficiency 5 picks {}", pick.b));
    }
    Ok(outcome(
        problems.is_empty(),
        if problems.is_empty() {
            "five WLPs exact; keys 15 and 24 select [1 2 12 3 13 4 24 34 1234]; [1 2 12 3] wins for odd counts".to_owned()
        } else {
            problems.join("; ")
        },
    ))
}

fn oracle_criterion() -> Result<Outcome> {
    let t = Instant::now();
    let mut claims: Vec<ClaimResult> = Vec::new();
    for n in [2, 3] {
        claims.extend(oracle_equivalence(n)?);
    }
    let elapsed = t.elapsed();
    let failed: Vec<&ClaimResult> = claims.iter().filter(|c| !c.passed).collect();
    let candidates: u64 = claims.iter().map(|c| c.cases).sum();
    Ok(outcome(
        failed.is_empty() && elapsed < BUDGET_ORACLE,
        format!(
            "{} settings, {candidates} candidate designs, {elapsed:.2?} (budget {BUDGET_ORACLE:?}){}",
            claims.len(),
            failed.iter().map(|c| format!("; {}: {}", c.claim, c.detail)).collect::<String>()
        ),
    ))
}

fn bounds_criterion() -> Result<Outcome> {
    let mut details = Vec::new();
    let mut passed = true;
    for n in [2, 3] {
        for parity in [Parity::Even, Parity::Odd] {
            let c = check_bounds(n, parity)?;
            passed &= c.passed;
            details.push(format!("n={n} {parity:?}: {} cases{}", c.cases, if c.passed { "" } else { " FAILED" }));
        }
    }
    Ok(outcome(passed, details.join(", ")))
}

fn random_b(rng: &mut ChaCha8Rng, rows: usize) -> BinaryMatrix {
    let pool: Vec<u32> = (1..1u32 << rows).collect();
    let m = rng.gen_range(1..=pool.len());
    let masks = pool.choose_multiple(rng, m).copied().collect();
    BinaryMatrix::new(rows, masks).expect("distinct nonnull columns")
}

fn identity_criterion() -> Result<Outcome> {
    let mut parts = Vec::new();
    let mut passed = true;
    let mut record = |name: &str, ok: bool, cases: u64| {
        passed &= ok;
        parts.push(format!("{name} {}({cases})", if ok { "" } else { "FAILED " }));
    };

    let c = check_row_sums(2)?;
    record("row-sum identity n=2 exhaustive", c.passed, c.cases);
    for n in [3, 4] {
        let (ok, cases) = row_sums_random(n, ReferenceKind::Full, ROW_SUM_RANDOM_SPLITS, VERIFY_SEED + n as u64)?;
        record(&format!("row-sum identity n={n} random"), ok, cases);
    }
    let c = check_group_invariance(2)?;
    record("group invariance and M_k = 16 m_k (k<=8) n=2", c.passed, c.cases);

    let mut cases = 0u64;
    let mut ok = true;
    for n in 2..=4 {
        let c = check_fold_identities(n)?;
        ok &= c.passed;
        cases += c.cases;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(VERIFY_SEED);
    for _ in 0..FOLD_RANDOM_B_N5 {
        ok &= fold_wlp_identities(&random_b(&mut rng, 4))?.all();
        cases += 1;
    }
    record("foldover identities", ok, cases);

    for n in [2, 3] {
        let c = check_halving(n)?;
        record(&format!("halving n={n}"), c.passed, c.cases);
    }

    // M_k = 16 m_k straight from `moments`, which computes M_k naively
    let d = ma_design(2, 16, 9)?;
    let m = moments(&d.design, 8)?;
    let direct_ok = (3..=8).all(|k| m.big_m(k) == Some(&(m.m(k) * 16)));
    record("M_k = 16 m_k on the q=9 design", direct_ok, 6);

    Ok(outcome(passed, parts.join(", ")))
}

fn structural_criterion() -> Result<Outcome> {
    let mut count = 0;
    let mut problems = Vec::new();
    for n in 2..=4 {
        for runs in [1usize << (2 * n), 1usize << (2 * n - 1)] {
            let (_, lo, hi) = factor_range(n, runs)?;
            for q in lo..=hi {
                let d = ma_design(n, runs, q)?.design;
                count += 1;
                let w = wlp_direct(&d, 2.min(q))?;
                let strength_two = (1..=w.k_max()).all(|k| w.numerator(k) == &num_bigint::BigUint::ZERO);
                let rho_ok = q < 3 || max_aliasing(&d, 3)? <= Rational64::new(1, 2);
                let proj_ok = q < 3 || projectivity_at_least(&d, 3);
                if !(strength_two && rho_ok && proj_ok) {
                    problems.push(format!(
                        "n={n} N={runs} q={q}: strength two {strength_two}, rho3 <= 1/2 {rho_ok}, projectivity {proj_ok}"
                    ));
                }
            }
        }
    }
    Ok(outcome(
        problems.is_empty(),
        if problems.is_empty() {
            format!("{count} pipeline designs with N <= 256 checked by direct enumeration")
        } else {
            problems.join("; ")
        },
    ))
}

fn optimal_b_criterion() -> Result<Outcome> {
    let printed: [(usize, &[&str]); 3] = [
        (3, &["1", "1 2", "1 2 12"]),
        (4, &["1", "1 2", "1 2 3", "1 2 12 3", "1 2 12 3 13", "1 2 12 3 13 23", "1 2 12 3 13 23 123"]),
        (
            5,
            &[
                "1",
                "1 2",
                "1 2 3",
                "1 2 3 4",
                "1 2 3 4 1234",
                "1 2 12 3 4 34",
                "1 2 12 3 13 4 24",
                "1 2 12 3 13 4 24 34",
                "1 2 12 3 13 4 24 34 1234",
                "1 2 12 3 13 23 4 14 24 34",
                "1 2 12 3 13 23 123 4 14 24 34",
                "1 2 12 3 13 23 123 4 14 24 124 34",
                "1 2 12 3 13 23 123 4 14 24 124 34 134",
                "1 2 12 3 13 23 123 4 14 24 124 34 134 234",
                "1 2 12 3 13 23 123 4 14 24 124 34 134 234 1234",
            ],
        ),
    ];
    let mut rows = 0;
    let mut problems = Vec::new();
    for (n, entries) in printed {
        let table = table1(n)?;
        if table.len() != entries.len() {
            problems.push(format!("n={n}: {} rows", table.len()));
            continue;
        }
        for (row, text) in table.iter().zip(entries) {
            rows += 1;
            let expected = theorem2_key(&parse_b_notation(text, n - 1)?);
            if row.key != expected || row.deficiency != row.b.cols() + 1 {
                problems.push(format!("n={n} deficiency {}: {} vs [{text}]", row.deficiency, row.b));
            }
        }
    }
    Ok(outcome(
        problems.is_empty(),
        if problems.is_empty() { format!("{rows} rows match the printed keys") } else { problems.join("; ") },
    ))
}

fn main() -> ExitCode {
    // `cargo test` passes harness flags; a name filter other than ours skips the run
    let args: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    if !args.is_empty() && !args.iter().any(|a| "acceptance".contains(a.as_str())) {
        return ExitCode::SUCCESS;
    }
    let criteria: Vec<(&str, Check)> = vec![
        ("1 fixture N=128 q=103", Box::new(|| fixture(4, 128, 103, 1360, 35707, BUDGET_FIXTURE_128))),
        ("2 fixture N=256 q=228", Box::new(|| fixture(4, 256, 228, 7616, 434057, BUDGET_FIXTURE_256))),
        ("3 regular WLPs and selection", Box::new(examples_1_and_2)),
        ("4 oracle equivalence n in {2,3}", Box::new(oracle_criterion)),
        ("5 third-moment bounds", Box::new(bounds_criterion)),
        ("6 identity suite", Box::new(identity_criterion)),
        ("7 structural guarantees", Box::new(structural_criterion)),
        ("8 table of optimal B", Box::new(optimal_b_criterion)),
    ];
    let mut failures = 0;
    for (name, run) in criteria {
        let result = run().unwrap_or_else(|e| outcome(false, format!("error: {e}")));
        if !result.passed {
            failures += 1;
        }
        println!("{} criterion {name}: {}", if result.passed { "PASS" } else { "FAIL" }, result.detail);
    }
    println!("acceptance: {} failed", failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
