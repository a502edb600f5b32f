//! Cycle indices of `S_p` and of its action on `r`-subsets.
//!
//! The induced cycle type is recovered from fixed-point counts alone. For a
//! permutation `β` of cycle type `j`, the number of `r`-subsets fixed by the
//! induced permutation `β'` is the number of ways to pick whole cycles of `β`
//! with total length `r`. Since `(β^m)' = (β')^m`, the fixed-point count of
//! `(β')^m` is the same quantity evaluated on the cycle type of `β^m`, and
//! `fix((β')^m) = Σ_{d | m} d·j_d(β')` is inverted divisor by divisor.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::partitions::{
    binomial, binomial_usize, factorial, partitions_of, permutation_count, power_cycle_type,
    Partition,
};

/// Cycle type of a permutation of the induced action. Same representation as
/// [`Partition`]; its ambient is the number of points acted on.
pub type CycleType = Partition;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CycleIndexError {
    #[error("term {monomial} has degree {degree}, expected {expected}")]
    Degree {
        monomial: String,
        degree: usize,
        expected: usize,
    },
    #[error("term {0} has zero weight")]
    ZeroWeight(String),
    #[error("weights sum to {sum}, expected group order {order}")]
    WeightSum { sum: BigUint, order: BigUint },
}

/// A cycle index `(1/|A|) Σ w · Π y_k^{j_k}` in merged form: one term per
/// distinct cycle type, with the group order kept as an explicit denominator.
///
/// Only symmetric groups and their induced actions are built here, so the
/// group order is always `p!` for `group_degree = p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleIndex {
    terms: BTreeMap<CycleType, BigUint>,
    group_order: BigUint,
    group_degree: usize,
    ambient_points: usize,
}

impl CycleIndex {
    /// Builds a merged cycle index, summing weights of repeated cycle types and
    /// checking the degree and weight-sum invariants.
    pub fn new<I>(
        group_degree: usize,
        ambient_points: usize,
        terms: I,
    ) -> Result<Self, CycleIndexError>
    where
        I: IntoIterator<Item = (CycleType, BigUint)>,
    {
        let mut merged: BTreeMap<CycleType, BigUint> = BTreeMap::new();
        for (ty, w) in terms {
            if ty.ambient() != ambient_points {
                return Err(CycleIndexError::Degree {
                    monomial: ty.monomial(),
                    degree: ty.ambient(),
                    expected: ambient_points,
                });
            }
            if w.is_zero() {
                return Err(CycleIndexError::ZeroWeight(ty.monomial()));
            }
            *merged.entry(ty).or_default() += w;
        }
        let group_order = factorial(group_degree);
        let sum: BigUint = merged.values().sum();
        if sum != group_order {
            return Err(CycleIndexError::WeightSum {
                sum,
                order: group_order,
            });
        }
        Ok(CycleIndex {
            terms: merged,
            group_order,
            group_degree,
            ambient_points,
        })
    }

    /// Terms in rendering order (descending multiplicity vector).
    pub fn terms(&self) -> impl Iterator<Item = (&CycleType, &BigUint)> {
        self.terms.iter()
    }

    pub fn weight(&self, ty: &CycleType) -> Option<&BigUint> {
        self.terms.get(ty)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn group_order(&self) -> &BigUint {
        &self.group_order
    }

    /// `p` for a cycle index of `S_p` or of one of its induced actions.
    pub fn group_degree(&self) -> usize {
        self.group_degree
    }

    /// Number of points of the action, `C(p, r)`.
    pub fn ambient_points(&self) -> usize {
        self.ambient_points
    }
}

/// One term of the unmerged cycle index: the contribution of every
/// permutation with cycle type `source`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SourcedTerm {
    pub source: Partition,
    pub cycle_type: CycleType,
    pub weight: BigUint,
}

impl fmt::Display for SourcedTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} from {}",
            self.weight,
            self.cycle_type.monomial(),
            self.source
        )
    }
}

/// Number of `r`-subsets fixed by a permutation of cycle type `j`:
/// `Σ_{(i) ⊢ r} Π_k C(j_k, i_k)`.
pub fn fixed_subset_count(j: &Partition, r: usize) -> BigUint {
    assert!(r <= j.ambient(), "subset size {r} exceeds {}", j.ambient());
    fixed_subsets_with(j, &partitions_of(r))
}

fn fixed_subsets_with(j: &Partition, sub_partitions: &[Partition]) -> BigUint {
    sub_partitions
        .iter()
        .map(|i| {
            i.iter()
                .map(|(k, ik)| binomial(j.multiplicity(k), ik))
                .product::<BigUint>()
        })
        .sum()
}

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Cycle type of the permutation induced on `r`-subsets by any permutation of
/// cycle type `j`.
///
/// Panics if the divisor inversion produces a negative or fractional
/// multiplicity, or if the recovered cycles do not cover all `C(p, r)` subsets.
pub fn induced_cycle_type(j: &Partition, r: usize) -> CycleType {
    assert!(r <= j.ambient(), "subset size {r} exceeds {}", j.ambient());
    induced_with(j, r, &partitions_of(r))
}

fn induced_with(j: &Partition, r: usize, sub_partitions: &[Partition]) -> CycleType {
    let total = binomial_usize(j.ambient(), r);
    let mut found: Vec<(u64, BigUint)> = Vec::new();
    let mut covered = 0usize;
    // The order of β' divides the order of β, so only divisors of lcm(j) occur.
    for m in divisors(j.lcm()) {
        let fixed = fixed_subsets_with(&power_cycle_type(j, m as usize), sub_partitions);
        let shorter: BigUint = found
            .iter()
            .filter(|(d, _)| m % d == 0)
            .map(|(d, jd)| jd * *d)
            .sum();
        assert!(
            fixed >= shorter,
            "negative multiplicity for {m}-cycles of {j} on {r}-subsets"
        );
        let (jm, rem) = (fixed - shorter).div_rem(&BigUint::from(m));
        assert!(
            rem.is_zero(),
            "fractional multiplicity for {m}-cycles of {j} on {r}-subsets"
        );
        if !jm.is_zero() {
            covered += (&jm * m).to_usize().expect("cycle count overflows usize");
            found.push((m, jm));
        }
        if covered == total {
            break;
        }
    }
    assert_eq!(
        covered, total,
        "induced cycles of {j} cover {covered} of {total} {r}-subsets"
    );
    CycleType::from_multiplicities(found.into_iter().map(|(m, jm)| {
        (
            m as usize,
            jm.to_usize().expect("cycle count overflows usize"),
        )
    }))
}

/// `Z(S_p)`: one term per partition of `p`, weighted by the number of
/// permutations with that cycle type.
pub fn cycle_index_symmetric(p: usize) -> CycleIndex {
    assert!(p >= 1, "symmetric group degree must be positive");
    CycleIndex::new(
        p,
        p,
        partitions_of(p).into_iter().map(|j| {
            let w = permutation_count(&j);
            (j, w)
        }),
    )
    .expect("Z(S_p) invariants")
}

/// Unmerged cycle index of `S_p` acting on `r`-subsets: one term per partition
/// of `p`, in [`partitions_of`] order.
pub fn unmerged_subset_action(p: usize, r: usize) -> Vec<SourcedTerm> {
    assert!(
        p >= 1 && (1..=p).contains(&r),
        "need 1 <= r <= p, got p={p} r={r}"
    );
    let sub_partitions = partitions_of(r);
    partitions_of(p)
        .into_par_iter()
        .map(|source| SourcedTerm {
            cycle_type: induced_with(&source, r, &sub_partitions),
            weight: permutation_count(&source),
            source,
        })
        .collect()
}

/// `Z(S_p^{(r)})` in merged form.
pub fn cycle_index_subset_action(p: usize, r: usize) -> CycleIndex {
    let terms = unmerged_subset_action(p, r);
    CycleIndex::new(
        p,
        binomial_usize(p, r),
        terms.into_iter().map(|t| (t.cycle_type, t.weight)),
    )
    .expect("Z(S_p^(r)) invariants")
}
