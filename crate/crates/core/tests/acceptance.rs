//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigUint;

use plexes::counting::{plex_count, plex_polynomial, substitute, IntPolynomial};
use plexes::cycle_index::{cycle_index_subset_action, induced_cycle_type};
use plexes::golden::GoldenData;
use plexes::oracle::{
    burnside_polynomial, cycle_type_of, exhaustive_plex_count, induce_on_subsets, representative_of,
};
use plexes::partitions::{binomial_usize, factorial, partitions_of};
use plexes::verify::{check_formulas, Outcome, EXHAUSTIVE_CASES};

type Criterion = fn() -> Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// The 27 published counts, restated here independently of the fixture file.
const TABLE: [[&str; 3]; 9] = [
    ["1", "1", "1"],
    ["2", "1", "1"],
    ["4", "2", "1"],
    ["11", "5", "2"],
    ["34", "34", "6"],
    ["156", "2136", "156"],
    ["1044", "7013320", "7013320"],
    ["12346", "1788782616656", "29281354514767168"],
    [
        "274668",
        "53304527811667897248",
        "234431745534048922731115555415680",
    ],
];

fn table_reproduction() -> Result<String, String> {
    let golden = GoldenData::embedded();
    for (pi, row) in TABLE.iter().enumerate() {
        for (ni, expected) in row.iter().enumerate() {
            let (p, n) = (pi + 1, ni + 1);
            let got = plex_count(p, n).to_string();
            ensure(&got == expected, || {
                format!("s_{p}^{n}: computed {got}, expected {expected}")
            })?;
            ensure(
                golden.count(p, n).map(|c| c.to_string()).as_deref() == Some(*expected),
                || format!("fixture disagrees at s_{p}^{n}"),
            )?;
        }
    }
    Ok("27/27 exact".into())
}

fn formula_reproduction() -> Result<String, String> {
    let checks = check_formulas(GoldenData::embedded());
    let mut typos = Vec::new();
    for c in &checks {
        match &c.outcome {
            Outcome::Pass => {}
            Outcome::Fail(why) => return Err(format!("{}: {why}", c.name)),
            Outcome::KnownMisprint(why) => typos.push(why.clone()),
        }
    }
    let expected = "paper typo: computed term 3360 a_1^2 a_4^2 a_6^2 a_12^4, paper term 3360 a_1^2 a_4^2 a_6^2";
    ensure(typos == [expected], || {
        format!("unexpected discrepancy report {typos:?}")
    })?;
    let formulas = checks
        .iter()
        .filter(|c| c.name.starts_with("formula") && c.outcome == Outcome::Pass)
        .count();
    ensure(formulas == 6, || {
        format!("{formulas} of 6 formulas matched")
    })?;
    Ok(format!("6/6 formulas match; reported {expected}"))
}

fn induced_oracle() -> Result<String, String> {
    let mut cases = 0;
    for p in 1..=7 {
        for j in partitions_of(p) {
            let a = representative_of(&j);
            for r in 1..=p {
                let fast = induced_cycle_type(&j, r);
                let slow = cycle_type_of(&induce_on_subsets(&a, r));
                ensure(fast == slow, || {
                    format!(
                        "{j} r={r}: {} vs explicit {}",
                        fast.monomial(),
                        slow.monomial()
                    )
                })?;
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} (partition, r) cases"))
}

fn burnside_oracle() -> Result<String, String> {
    let mut cases = 0;
    for p in 1..=9 {
        for n in 1..=3 {
            let poly = plex_polynomial(p, n);
            if p < n + 1 {
                ensure(poly == IntPolynomial::one(), || {
                    format!("s_{p}^{n} should be 1")
                })?;
                continue;
            }
            let oracle = burnside_polynomial(p, n + 1);
            ensure(poly == oracle, || {
                format!("s_{p}^{n}: {poly} vs Burnside {oracle}")
            })?;
            cases += 1;
        }
    }
    Ok(format!("{cases} full coefficient vectors"))
}

fn exhaustive_oracle() -> Result<String, String> {
    for (p, n) in EXHAUSTIVE_CASES {
        let slow = exhaustive_plex_count(p, n).map_err(|e| e.to_string())?;
        let fast = plex_count(p, n);
        ensure(slow == fast, || {
            format!("s_{p}^{n}: enumeration {slow}, cycle index {fast}")
        })?;
    }
    Ok(format!(
        "{} cases including 2^20 states for (6,2)",
        EXHAUSTIVE_CASES.len()
    ))
}

fn structural_invariants() -> Result<String, String> {
    let mut cases = 0;
    for p in 1..=10 {
        for r in 1..=p {
            // Inversion exactness is asserted while the index is built.
            let z = cycle_index_subset_action(p, r);
            let sum: BigUint = z.terms().map(|(_, w)| w).sum();
            ensure(sum == factorial(p), || {
                format!("p={p} r={r}: weights sum to {sum}")
            })?;
            for (ty, _) in z.terms() {
                ensure(ty.ambient() == binomial_usize(p, r), || {
                    format!("p={p} r={r}: degree {} for {}", ty.ambient(), ty.monomial())
                })?;
            }
            ensure(r == p || z == cycle_index_subset_action(p, p - r), || {
                format!("complement fails at p={p} r={r}")
            })?;
            ensure(
                substitute(&z, &IntPolynomial::one()) == IntPolynomial::one(),
                || format!("Z(S_{p}^({r}), 1) != 1"),
            )?;
            let poly = substitute(&z, &IntPolynomial::one_plus_x());
            ensure(poly.is_palindromic(), || {
                format!("s_{p}^{}(x) not palindromic", r - 1)
            })?;
            cases += 1;
        }
    }
    Ok(format!("{cases} cycle indices"))
}

fn graph_column() -> Result<String, String> {
    let expected = [1u32, 2, 4, 11, 34, 156, 1044, 12346, 274668];
    let got: Vec<BigUint> = (1..=9).map(|p| plex_count(p, 1)).collect();
    let want: Vec<BigUint> = expected.iter().map(|&v| v.into()).collect();
    ensure(got == want, || format!("{got:?}"))?;
    Ok("1, 2, 4, 11, 34, 156, 1044, 12346, 274668".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, Criterion, Duration); 7] = [
        (
            "AC1 published count table p <= 9, n <= 3",
            table_reproduction,
            Duration::from_secs(1),
        ),
        (
            "AC2 merged cycle-index formulas",
            formula_reproduction,
            Duration::from_secs(1),
        ),
        (
            "AC3 induced cycle types vs explicit induction",
            induced_oracle,
            Duration::from_secs(10),
        ),
        (
            "AC4 Burnside polynomials",
            burnside_oracle,
            Duration::from_secs(30),
        ),
        (
            "AC5 exhaustive orbit counts",
            exhaustive_oracle,
            Duration::from_secs(300),
        ),
        (
            "AC6 structural invariants p <= 10",
            structural_invariants,
            Duration::from_secs(60),
        ),
        (
            "AC7 graph counts (n = 1 column)",
            graph_column,
            Duration::from_secs(10),
        ),
    ];
    let mut failed = 0;
    for (name, run, budget) in criteria {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let elapsed = start.elapsed();
        let result = result.and_then(|detail| {
            if elapsed <= budget {
                Ok(detail)
            } else {
                Err(format!("took {elapsed:?}, budget {budget:?}"))
            }
        });
        match result {
            Ok(detail) => println!("PASS {name} ({elapsed:.2?}): {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL {name} ({elapsed:.2?}): {why}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 7 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
