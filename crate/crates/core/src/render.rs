//! Text renderings of cycle indices, counting polynomials and count tables.
//!
//! The structured format is JSON Lines: a header object followed by one object
//! per term. Big integers are always decimal strings.

use std::fmt::Write as _;

use num_bigint::{BigInt, BigUint};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::counting::IntPolynomial;
use crate::cycle_index::{CycleIndex, CycleIndexError, CycleType, SourcedTerm};
use crate::partitions::Partition;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    #[default]
    Plain,
    Latex,
    #[value(name = "json-like")]
    JsonLike,
}

/// Letter used for the cycle-index variables.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Variable {
    #[default]
    A,
    Y,
}

impl Variable {
    fn letter(self) -> char {
        match self {
            Variable::A => 'a',
            Variable::Y => 'y',
        }
    }
}

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("empty document")]
    Empty,
    #[error("line {line}: {source}")]
    Json {
        line: usize,
        source: serde_json::Error,
    },
    #[error("line {line}: {msg}")]
    Field { line: usize, msg: String },
    #[error(transparent)]
    Invalid(#[from] CycleIndexError),
}

/// Which group a rendered cycle index belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Label {
    pub p: usize,
    pub r: usize,
}

impl Label {
    fn plain(self) -> String {
        if self.r == 1 {
            format!("Z(S_{})", self.p)
        } else {
            format!("Z(S_{}^({}))", self.p, self.r)
        }
    }

    fn latex(self) -> String {
        if self.r == 1 {
            format!("Z(S_{{{}}})", self.p)
        } else {
            format!("Z(S_{{{}}}^{{({})}})", self.p, self.r)
        }
    }
}

/// `a_1^8 a_2^6`, exponents of 1 omitted.
pub fn monomial_text(ty: &CycleType, var: Variable) -> String {
    if ty.is_empty() {
        return "1".into();
    }
    let v = var.letter();
    ty.iter()
        .map(|(k, e)| match e {
            1 => format!("{v}_{k}"),
            _ => format!("{v}_{k}^{e}"),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// `15 a_1^8 a_2^6`.
pub fn term_text(weight: &BigUint, ty: &CycleType, var: Variable) -> String {
    format!("{weight} {}", monomial_text(ty, var))
}

fn latex_monomial(ty: &CycleType, var: Variable) -> String {
    let v = var.letter();
    ty.iter()
        .map(|(k, e)| match e {
            1 => format!("{v}_{{{k}}}"),
            _ => format!("{v}_{{{k}}}^{{{e}}}"),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn latex_sum<'a>(
    terms: impl Iterator<Item = (&'a CycleType, &'a BigUint)>,
    var: Variable,
) -> String {
    terms
        .map(|(ty, w)| {
            let m = latex_monomial(ty, var);
            if w == &BigUint::from(1u32) {
                m
            } else {
                format!("{w} {m}")
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

pub fn plain(z: &CycleIndex, label: Label, var: Variable) -> String {
    let mut out = format!(
        "{} = 1/{}! * sum of {} terms; group order {}, {} points\n",
        label.plain(),
        z.group_degree(),
        z.num_terms(),
        z.group_order(),
        z.ambient_points()
    );
    for (ty, w) in z.terms() {
        let _ = writeln!(out, "{}", term_text(w, ty, var));
    }
    out
}

pub fn plain_unmerged(terms: &[SourcedTerm], label: Label, var: Variable) -> String {
    let mut out = format!(
        "{} = 1/{}! * sum of {} unmerged terms\n",
        label.plain(),
        label.p,
        terms.len()
    );
    for t in terms {
        let _ = writeln!(
            out,
            "{}  from {}",
            term_text(&t.weight, &t.cycle_type, var),
            t.source
        );
    }
    out
}

pub fn latex(z: &CycleIndex, label: Label, var: Variable) -> String {
    format!(
        "{} = \\frac{{1}}{{{}!}} \\left( {} \\right)\n",
        label.latex(),
        z.group_degree(),
        latex_sum(z.terms(), var)
    )
}

/// LaTeX sum with one term per partition; a comment line after the formula
/// names the source partition of each term.
pub fn latex_unmerged(terms: &[SourcedTerm], label: Label, var: Variable) -> String {
    let mut out = format!(
        "{} = \\frac{{1}}{{{}!}} \\left( {} \\right)\n",
        label.latex(),
        label.p,
        latex_sum(terms.iter().map(|t| (&t.cycle_type, &t.weight)), var)
    );
    for t in terms {
        let _ = writeln!(
            out,
            "% {}: {}",
            t.source,
            latex_sum(std::iter::once((&t.cycle_type, &t.weight)), var)
        );
    }
    out
}

#[derive(Debug, Serialize, Deserialize)]
struct Header {
    kind: String,
    p: usize,
    r: usize,
    group_order: String,
    ambient_points: usize,
    terms: usize,
    merged: bool,
}

#[derive(Debug, Serialize, Deserialize)]
struct TermLine {
    weight: String,
    cycle_type: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    source: Option<Vec<usize>>,
}

const CYCLE_INDEX_KIND: &str = "cycle_index";

fn json_line<T: Serialize>(out: &mut String, value: &T) {
    out.push_str(&serde_json::to_string(value).expect("plain data serializes"));
    out.push('\n');
}

pub fn structured(z: &CycleIndex, label: Label) -> String {
    let mut out = String::new();
    json_line(
        &mut out,
        &Header {
            kind: CYCLE_INDEX_KIND.into(),
            p: label.p,
            r: label.r,
            group_order: z.group_order().to_string(),
            ambient_points: z.ambient_points(),
            terms: z.num_terms(),
            merged: true,
        },
    );
    for (ty, w) in z.terms() {
        json_line(
            &mut out,
            &TermLine {
                weight: w.to_string(),
                cycle_type: ty.iter().collect(),
                source: None,
            },
        );
    }
    out
}

pub fn structured_unmerged(terms: &[SourcedTerm], label: Label, ambient_points: usize) -> String {
    let mut out = String::new();
    let order: BigUint = terms.iter().map(|t| &t.weight).sum();
    json_line(
        &mut out,
        &Header {
            kind: CYCLE_INDEX_KIND.into(),
            p: label.p,
            r: label.r,
            group_order: order.to_string(),
            ambient_points,
            terms: terms.len(),
            merged: false,
        },
    );
    for t in terms {
        json_line(
            &mut out,
            &TermLine {
                weight: t.weight.to_string(),
                cycle_type: t.cycle_type.iter().collect(),
                source: Some(t.source.parts()),
            },
        );
    }
    out
}

/// Parses [`structured`] (or [`structured_unmerged`]) output back into a
/// merged cycle index, re-checking every invariant.
pub fn parse_structured(text: &str) -> Result<(Label, CycleIndex), FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty());
    let (hline, htext) = lines.next().ok_or(FormatError::Empty)?;
    let header: Header = serde_json::from_str(htext).map_err(|source| FormatError::Json {
        line: hline + 1,
        source,
    })?;
    if header.kind != CYCLE_INDEX_KIND {
        return Err(FormatError::Field {
            line: hline + 1,
            msg: format!("unexpected kind {:?}", header.kind),
        });
    }
    let mut terms = Vec::new();
    for (i, l) in lines {
        let t: TermLine = serde_json::from_str(l).map_err(|source| FormatError::Json {
            line: i + 1,
            source,
        })?;
        let weight: BigUint = t.weight.parse().map_err(|_| FormatError::Field {
            line: i + 1,
            msg: format!("bad weight {:?}", t.weight),
        })?;
        if t.cycle_type.iter().any(|&(k, _)| k == 0) {
            return Err(FormatError::Field {
                line: i + 1,
                msg: "cycle length 0".into(),
            });
        }
        terms.push((Partition::from_multiplicities(t.cycle_type), weight));
    }
    if terms.len() != header.terms {
        return Err(FormatError::Field {
            line: hline + 1,
            msg: format!(
                "header announces {} terms, found {}",
                header.terms,
                terms.len()
            ),
        });
    }
    let z = CycleIndex::new(header.p, header.ambient_points, terms)?;
    if z.group_order().to_string() != header.group_order {
        return Err(FormatError::Field {
            line: hline + 1,
            msg: format!("group order {} is not {}!", header.group_order, header.p),
        });
    }
    Ok((
        Label {
            p: header.p,
            r: header.r,
        },
        z,
    ))
}

#[derive(Serialize)]
struct PolyDoc<'a> {
    kind: &'a str,
    p: usize,
    n: usize,
    coefficients: Vec<String>,
    total: String,
}

pub fn polynomial(poly: &IntPolynomial, p: usize, n: usize, format: Format) -> String {
    let total = poly.coefficient_sum();
    match format {
        Format::JsonLike => {
            let mut out = String::new();
            json_line(
                &mut out,
                &PolyDoc {
                    kind: "counting_polynomial",
                    p,
                    n,
                    coefficients: poly.coefficients().iter().map(BigInt::to_string).collect(),
                    total: total.to_string(),
                },
            );
            out
        }
        Format::Latex => format!("s_{{{p}}}^{{{n}}}(x) = {}\n", poly),
        Format::Plain => {
            let coeffs: Vec<String> = poly.coefficients().iter().map(BigInt::to_string).collect();
            format!(
                "s_{p}^{n}(x) = {poly}\ncoefficients: {}\ntotal: {total}\n",
                coeffs.join(" ")
            )
        }
    }
}

/// Grid of counts, rows `p = 1..`, columns `n = 1..`.
pub fn table(rows: &[Vec<BigUint>], format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::JsonLike => {
            for (pi, row) in rows.iter().enumerate() {
                for (ni, c) in row.iter().enumerate() {
                    let _ = writeln!(
                        out,
                        "{{\"p\":{},\"n\":{},\"count\":\"{}\"}}",
                        pi + 1,
                        ni + 1,
                        c
                    );
                }
            }
        }
        Format::Latex => {
            let cols = rows.first().map_or(0, Vec::len);
            let _ = writeln!(
                out,
                "\\begin{{tabular}}{{| l | {} |}}",
                vec!["c"; cols].join(" ")
            );
            let header: Vec<String> = (1..=cols).map(|n| n.to_string()).collect();
            let _ = writeln!(
                out,
                "\\hline\n$p \\backslash n$ & {} \\\\\n\\hline",
                header.join(" & ")
            );
            for (pi, row) in rows.iter().enumerate() {
                let cells: Vec<String> = row.iter().map(BigUint::to_string).collect();
                let _ = writeln!(out, "{} & {} \\\\", pi + 1, cells.join(" & "));
            }
            let _ = writeln!(out, "\\hline\n\\end{{tabular}}");
        }
        Format::Plain => {
            let cols = rows.first().map_or(0, Vec::len);
            let cells: Vec<Vec<String>> = rows
                .iter()
                .map(|r| r.iter().map(BigUint::to_string).collect())
                .collect();
            let widths: Vec<usize> = (0..cols)
                .map(|c| {
                    cells
                        .iter()
                        .map(|r| r[c].len())
                        .chain(std::iter::once(c.to_string().len() + 1))
                        .max()
                        .unwrap_or(1)
                })
                .collect();
            let pw = rows.len().to_string().len().max(3);
            let _ = write!(out, "{:>pw$}", "p\\n");
            for (c, w) in widths.iter().enumerate() {
                let _ = write!(out, "  {:>w$}", c + 1);
            }
            out.push('\n');
            for (pi, row) in cells.iter().enumerate() {
                let _ = write!(out, "{:>pw$}", pi + 1);
                for (cell, w) in row.iter().zip(&widths) {
                    let _ = write!(out, "  {cell:>w$}");
                }
                out.push('\n');
            }
        }
    }
    out
}
