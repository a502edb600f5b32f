//! Published reference values, embedded from `fixtures/golden.txt`.

use std::sync::OnceLock;

use num_bigint::BigUint;
use thiserror::Error;

use crate::partitions::{binomial_usize, Partition};

/// Raw text of the fixture file.
pub const FIXTURE: &str = include_str!("../fixtures/golden.txt");

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GoldenError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoldenTerm {
    pub coefficient: BigUint,
    /// Exponents of the monomial. Its ambient is the monomial's degree, which
    /// need not equal `C(p, r)` for a misprinted term.
    pub monomial: Partition,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoldenFormula {
    pub p: usize,
    pub r: usize,
    pub terms: Vec<GoldenTerm>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Discrepancy {
    pub p: usize,
    pub r: usize,
    pub term: GoldenTerm,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GoldenData {
    /// `(p, n, number of n-plexes on p points)`.
    pub counts: Vec<(usize, usize, BigUint)>,
    /// Merged cycle indices as published.
    pub formulas: Vec<GoldenFormula>,
    /// Unmerged cycle indices as published, one term per partition of `p`.
    pub unmerged: Vec<GoldenFormula>,
    pub known_discrepancies: Vec<Discrepancy>,
}

impl GoldenData {
    pub fn embedded() -> &'static GoldenData {
        static DATA: OnceLock<GoldenData> = OnceLock::new();
        DATA.get_or_init(|| GoldenData::parse(FIXTURE).expect("embedded golden fixture is valid"))
    }

    pub fn parse(text: &str) -> Result<Self, GoldenError> {
        let mut data = GoldenData::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |msg: &str| GoldenError::Parse {
                line: i + 1,
                msg: msg.to_string(),
            };
            let mut fields = line.splitn(5, ' ');
            let kind = fields.next().unwrap_or_default();
            let p: usize = next_num(&mut fields).ok_or_else(|| err("bad p"))?;
            let second: usize = next_num(&mut fields).ok_or_else(|| err("bad n or r"))?;
            let value: BigUint = next_num(&mut fields).ok_or_else(|| err("bad number"))?;
            if kind == "count" {
                if fields.next().is_some() {
                    return Err(err("trailing fields"));
                }
                data.counts.push((p, second, value));
                continue;
            }
            let monomial = fields
                .next()
                .and_then(Partition::parse_monomial)
                .ok_or_else(|| err("bad monomial"))?;
            let term = GoldenTerm {
                coefficient: value,
                monomial,
            };
            match kind {
                "term" => push_term(&mut data.formulas, p, second, term),
                "unmerged" => push_term(&mut data.unmerged, p, second, term),
                "typo" => data
                    .known_discrepancies
                    .push(Discrepancy { p, r: second, term }),
                _ => return Err(err("unknown record kind")),
            }
        }
        Ok(data)
    }

    pub fn count(&self, p: usize, n: usize) -> Option<&BigUint> {
        self.counts
            .iter()
            .find(|(pp, nn, _)| *pp == p && *nn == n)
            .map(|(_, _, c)| c)
    }

    pub fn formula(&self, p: usize, r: usize) -> Option<&GoldenFormula> {
        self.formulas.iter().find(|f| f.p == p && f.r == r)
    }

    pub fn is_known_discrepancy(&self, p: usize, r: usize, term: &GoldenTerm) -> bool {
        self.known_discrepancies
            .iter()
            .any(|d| d.p == p && d.r == r && &d.term == term)
    }

    /// Published terms whose degree differs from `C(p, r)` and that are not
    /// already listed as known discrepancies.
    pub fn unexplained_degree_violations(&self) -> Vec<(usize, usize, &GoldenTerm)> {
        self.formulas
            .iter()
            .flat_map(|f| f.terms.iter().map(move |t| (f.p, f.r, t)))
            .filter(|(p, r, t)| {
                t.monomial.ambient() != binomial_usize(*p, *r)
                    && !self.is_known_discrepancy(*p, *r, t)
            })
            .collect()
    }
}

fn next_num<'a, T: std::str::FromStr>(it: &mut impl Iterator<Item = &'a str>) -> Option<T> {
    it.next()?.parse().ok()
}

fn push_term(list: &mut Vec<GoldenFormula>, p: usize, r: usize, term: GoldenTerm) {
    match list.iter_mut().find(|f| f.p == p && f.r == r) {
        Some(f) => f.terms.push(term),
        None => list.push(GoldenFormula {
            p,
            r,
            terms: vec![term],
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::factorial;

    #[test]
    fn embedded_shape() {
        let g = GoldenData::embedded();
        assert_eq!(g.counts.len(), 27);
        assert_eq!(g.formulas.len(), 6);
        assert_eq!(g.unmerged.len(), 1);
        assert_eq!(g.unmerged[0].terms.len(), 11);
        assert_eq!(g.known_discrepancies.len(), 1);
        let sizes: Vec<(usize, usize, usize)> = g
            .formulas
            .iter()
            .map(|f| (f.p, f.r, f.terms.len()))
            .collect();
        assert_eq!(
            sizes,
            vec![
                (6, 3, 9),
                (7, 3, 14),
                (8, 3, 22),
                (9, 3, 28),
                (8, 4, 18),
                (9, 4, 30)
            ]
        );
    }

    #[test]
    fn invariants_hold() {
        let g = GoldenData::embedded();
        assert!(g.unexplained_degree_violations().is_empty());
        assert_eq!(g.count(7, 2), g.count(7, 3));
        for f in &g.formulas {
            let sum: BigUint = f.terms.iter().map(|t| &t.coefficient).sum();
            assert_eq!(sum, factorial(f.p), "Z(S_{}^({}))", f.p, f.r);
        }
        let d = &g.known_discrepancies[0];
        assert_eq!((d.p, d.r, d.term.monomial.ambient()), (8, 4, 22));
        assert!(g.formula(8, 4).unwrap().terms.contains(&d.term));
    }

    #[test]
    fn parse_errors() {
        assert_eq!(
            GoldenData::parse("count 1 x 1"),
            Err(GoldenError::Parse {
                line: 1,
                msg: "bad n or r".into()
            })
        );
        assert!(GoldenData::parse("\n# c\nterm 3 1 1 1^x").is_err());
        assert!(GoldenData::parse("frob 3 1 1 1^3").is_err());
        assert!(GoldenData::parse("count 1 1 1 extra").is_err());
    }
}
