//! Verification against the embedded golden data and the brute-force oracles.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;

use crate::counting::{plex_count, plex_polynomial};
use crate::cycle_index::{
    cycle_index_subset_action, induced_cycle_type, unmerged_subset_action, CycleType,
};
use crate::golden::{GoldenData, GoldenFormula};
use crate::oracle::{
    burnside_polynomial, cycle_type_of, exhaustive_plex_count, induce_on_subsets, representative_of,
};
use crate::partitions::{binomial_usize, partitions_of};
use crate::render::{term_text, Variable};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Scope {
    Table,
    Formulas,
    Oracle,
    #[default]
    All,
}

/// `(p, n)` pairs checked by exhaustive orbit enumeration.
pub const EXHAUSTIVE_CASES: [(usize, usize); 9] = [
    (3, 1),
    (4, 1),
    (5, 1),
    (3, 2),
    (4, 2),
    (5, 2),
    (4, 3),
    (5, 3),
    (6, 2),
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(String),
    /// A published term known to be misprinted, reported alongside the
    /// computed one.
    KnownMisprint(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub outcome: Outcome,
}

impl Check {
    fn new(name: impl Into<String>, failures: Vec<String>) -> Self {
        Check {
            name: name.into(),
            outcome: if failures.is_empty() {
                Outcome::Pass
            } else {
                Outcome::Fail(failures.join("; "))
            },
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    /// True iff nothing failed. Known paper typos do not count as failures.
    pub fn passed(&self) -> bool {
        !self
            .checks
            .iter()
            .any(|c| matches!(c.outcome, Outcome::Fail(_)))
    }

    pub fn count(&self, pred: impl Fn(&Outcome) -> bool) -> usize {
        self.checks.iter().filter(|c| pred(&c.outcome)).count()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            match &c.outcome {
                Outcome::Pass => writeln!(f, "PASS {}", c.name)?,
                Outcome::Fail(why) => writeln!(f, "FAIL {}: {why}", c.name)?,
                Outcome::KnownMisprint(why) => writeln!(f, "TYPO {}: {why}", c.name)?,
            }
        }
        writeln!(
            f,
            "{} checks: {} passed, {} failed, {} paper typos",
            self.checks.len(),
            self.count(|o| *o == Outcome::Pass),
            self.count(|o| matches!(o, Outcome::Fail(_))),
            self.count(|o| matches!(o, Outcome::KnownMisprint(_))),
        )
    }
}

pub fn run(scope: Scope) -> Report {
    let golden = GoldenData::embedded();
    let mut report = Report::default();
    if matches!(scope, Scope::Table | Scope::All) {
        report.checks.extend(check_table(golden));
    }
    if matches!(scope, Scope::Formulas | Scope::All) {
        report.checks.extend(check_formulas(golden));
    }
    if matches!(scope, Scope::Oracle | Scope::All) {
        report.checks.extend(check_oracles());
    }
    report
}

pub fn check_table(golden: &GoldenData) -> Vec<Check> {
    golden
        .counts
        .iter()
        .map(|(p, n, expected)| {
            let got = plex_count(*p, *n);
            let mut failures = Vec::new();
            if &got != expected {
                failures.push(format!("computed {got}, published {expected}"));
            }
            Check::new(format!("count s_{p}^{n} = {expected}"), failures)
        })
        .collect()
}

fn merged_map(
    formula: &GoldenFormula,
    golden: &GoldenData,
    failures: &mut Vec<String>,
) -> BTreeMap<CycleType, BigUint> {
    let mut map = BTreeMap::new();
    for t in &formula.terms {
        if golden.is_known_discrepancy(formula.p, formula.r, t) {
            continue;
        }
        if map
            .insert(t.monomial.clone(), t.coefficient.clone())
            .is_some()
        {
            failures.push(format!(
                "published monomial {} appears twice",
                t.monomial.monomial()
            ));
        }
    }
    map
}

pub fn check_formulas(golden: &GoldenData) -> Vec<Check> {
    let mut checks = Vec::new();
    for (p, r, t) in golden.unexplained_degree_violations() {
        checks.push(Check::new(
            format!("degree of published term in Z(S_{p}^({r}))"),
            vec![format!(
                "{} has degree {}, expected {}",
                term_text(&t.coefficient, &t.monomial, Variable::A),
                t.monomial.ambient(),
                binomial_usize(p, r)
            )],
        ));
    }

    for formula in &golden.formulas {
        let (p, r) = (formula.p, formula.r);
        let name = format!(
            "formula Z(S_{p}^({r})), {} published terms",
            formula.terms.len()
        );
        let mut failures = Vec::new();
        let published = merged_map(formula, golden, &mut failures);
        let z = cycle_index_subset_action(p, r);
        let mut extra: Vec<(CycleType, BigUint)> = Vec::new();
        for (ty, w) in z.terms() {
            match published.get(ty) {
                Some(c) if c == w => {}
                Some(c) => failures.push(format!(
                    "{}: computed coefficient {w}, published {c}",
                    ty.monomial()
                )),
                None => extra.push((ty.clone(), w.clone())),
            }
        }
        for (ty, c) in &published {
            if z.weight(ty).is_none() {
                failures.push(format!(
                    "published term {} not computed",
                    term_text(c, ty, Variable::A)
                ));
            }
        }
        let mut typos = Vec::new();
        for d in golden
            .known_discrepancies
            .iter()
            .filter(|d| d.p == p && d.r == r)
        {
            let paper = term_text(&d.term.coefficient, &d.term.monomial, Variable::A);
            match extra.iter().position(|(_, w)| *w == d.term.coefficient) {
                Some(i) => {
                    let (ty, w) = extra.remove(i);
                    typos.push(Check {
                        name: format!("formula Z(S_{p}^({r})) known discrepancy"),
                        outcome: Outcome::KnownMisprint(format!(
                            "paper typo: computed term {}, paper term {paper}",
                            term_text(&w, &ty, Variable::A)
                        )),
                    });
                }
                None => failures.push(format!("no computed term pairs with misprinted {paper}")),
            }
        }
        for (ty, w) in extra {
            failures.push(format!(
                "computed term {} not published",
                term_text(&w, &ty, Variable::A)
            ));
        }
        checks.push(Check::new(name, failures));
        checks.extend(typos);
    }

    for formula in &golden.unmerged {
        let (p, r) = (formula.p, formula.r);
        let mut computed: Vec<(BigUint, CycleType)> = unmerged_subset_action(p, r)
            .into_iter()
            .map(|t| (t.weight, t.cycle_type))
            .collect();
        let mut published: Vec<(BigUint, CycleType)> = formula
            .terms
            .iter()
            .map(|t| (t.coefficient.clone(), t.monomial.clone()))
            .collect();
        computed.sort();
        published.sort();
        let mut failures = Vec::new();
        if computed != published {
            failures.push("term multisets differ".to_string());
        }
        checks.push(Check::new(
            format!(
                "unmerged Z(S_{p}^({r})), {} published terms",
                formula.terms.len()
            ),
            failures,
        ));
    }
    checks
}

pub fn check_oracles() -> Vec<Check> {
    let mut checks = Vec::new();
    for p in 1..=7 {
        let mut failures = Vec::new();
        let parts = partitions_of(p);
        for r in 1..=p {
            for j in &parts {
                let fast = induced_cycle_type(j, r);
                let slow = cycle_type_of(&induce_on_subsets(&representative_of(j), r));
                if fast != slow {
                    failures.push(format!(
                        "{j} on {r}-subsets: computed {}, explicit {}",
                        fast.monomial(),
                        slow.monomial()
                    ));
                }
            }
        }
        checks.push(Check::new(
            format!(
                "induced cycle types p={p}, {} partitions, r=1..{p}",
                parts.len()
            ),
            failures,
        ));
    }
    for p in 1..=9 {
        for n in 1..=3 {
            if p < n + 1 {
                continue;
            }
            let mut failures = Vec::new();
            let a = plex_polynomial(p, n);
            let b = burnside_polynomial(p, n + 1);
            if a != b {
                failures.push(format!("cycle index gives {a}, Burnside gives {b}"));
            }
            checks.push(Check::new(
                format!("Burnside polynomial s_{p}^{n}(x)"),
                failures,
            ));
        }
    }
    for (p, n) in EXHAUSTIVE_CASES {
        let mut failures = Vec::new();
        let fast = plex_count(p, n);
        match exhaustive_plex_count(p, n) {
            Ok(slow) if slow == fast => {}
            Ok(slow) => failures.push(format!(
                "cycle index gives {fast}, enumeration gives {slow}"
            )),
            Err(e) => failures.push(e.to_string()),
        }
        checks.push(Check::new(
            format!("exhaustive orbit count s_{p}^{n}"),
            failures,
        ));
    }
    checks
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::golden::GoldenTerm;
    use crate::partitions::Partition;

    #[test]
    fn table_scope_passes() {
        let r = run(Scope::Table);
        assert_eq!(r.checks.len(), 27);
        assert!(r.passed());
    }

    #[test]
    fn formulas_report_one_typo() {
        let r = run(Scope::Formulas);
        assert!(r.passed(), "{r}");
        let typos: Vec<&Check> = r
            .checks
            .iter()
            .filter(|c| matches!(c.outcome, Outcome::KnownMisprint(_)))
            .collect();
        assert_eq!(typos.len(), 1);
        assert!(typos[0].name.contains("Z(S_8^(4))"));
    }

    #[test]
    fn corrupted_golden_fails() {
        let mut g = GoldenData::embedded().clone();
        g.counts[5].2 += 1u32;
        assert!(!check_table(&g).iter().all(|c| c.outcome == Outcome::Pass));

        let mut g = GoldenData::embedded().clone();
        g.formulas[0].terms[1].coefficient += 1u32;
        let checks = check_formulas(&g);
        assert!(matches!(checks[0].outcome, Outcome::Fail(_)));

        // Forgetting the known misprint turns it into a failure.
        let mut g = GoldenData::embedded().clone();
        g.known_discrepancies.clear();
        let checks = check_formulas(&g);
        assert!(matches!(checks[0].outcome, Outcome::Fail(_)));
        assert!(checks[0].name.starts_with("degree"));

        let mut g = GoldenData::embedded().clone();
        g.known_discrepancies[0].term = GoldenTerm {
            coefficient: 7u32.into(),
            monomial: Partition::from_parts(&[70]),
        };
        assert!(check_formulas(&g)
            .iter()
            .any(|c| matches!(c.outcome, Outcome::Fail(_))));
    }

    #[test]
    fn report_display() {
        let r = Report {
            checks: vec![
                Check::new("a", vec![]),
                Check::new("b", vec!["x".into()]),
                Check {
                    name: "c".into(),
                    outcome: Outcome::KnownMisprint("t".into()),
                },
            ],
        };
        assert!(!r.passed());
        assert_eq!(
            r.to_string(),
            "PASS a\nFAIL b: x\nTYPO c: t\n3 checks: 1 passed, 1 failed, 1 paper typos\n"
        );
    }
}
