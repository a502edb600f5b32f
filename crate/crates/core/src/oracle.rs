//! Brute-force cross-checks that never use the fixed-point inversion.
//!
//! Permutations are materialized explicitly, pushed onto `r`-subsets point by
//! point, and decomposed into cycles by tracing. Counts come either from
//! Burnside averaging over those explicit cycle structures or from full
//! canonical-form enumeration of hypergraphs at small sizes.

use itertools::Itertools;
use num_bigint::{BigInt, BigUint};
use rayon::prelude::*;
use thiserror::Error;

use crate::counting::IntPolynomial;
use crate::cycle_index::CycleType;
use crate::partitions::{binomial_usize, factorial, partitions_of, permutation_count, Partition};

/// Largest `p` accepted by [`exhaustive_plex_count`].
pub const EXHAUSTIVE_MAX_POINTS: usize = 6;
/// Largest number of hyperedge slots accepted by [`exhaustive_plex_count`].
pub const EXHAUSTIVE_MAX_SLOTS: usize = 20;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("image is not a bijection on 0..{0}")]
    NotBijection(usize),
    #[error("exhaustive enumeration needs p <= {EXHAUSTIVE_MAX_POINTS} and C(p, n+1) <= {EXHAUSTIVE_MAX_SLOTS}, got p={p} n={n}")]
    TooLarge { p: usize, n: usize },
}

/// A permutation of `0..N` given by its image array.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExplicitPermutation {
    image: Vec<usize>,
}

impl ExplicitPermutation {
    pub fn new(image: Vec<usize>) -> Result<Self, OracleError> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &i in &image {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return Err(OracleError::NotBijection(n));
            }
        }
        Ok(ExplicitPermutation { image })
    }

    pub fn identity(n: usize) -> Self {
        ExplicitPermutation {
            image: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn apply(&self, i: usize) -> usize {
        self.image[i]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.len(), other.len());
        ExplicitPermutation {
            image: other.image.iter().map(|&i| self.image[i]).collect(),
        }
    }

    pub fn pow(&self, m: usize) -> Self {
        (0..m).fold(Self::identity(self.len()), |acc, _| self.compose(&acc))
    }

    /// Cycles as point lists, each starting from its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.image[x];
            }
            out.push(cycle);
        }
        out
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.image[i] == i).collect()
    }
}

/// Colexicographic ranking of the `r`-subsets of `0..p`.
///
/// A sorted subset `c_1 < c_2 < ... < c_r` has rank `Σ_i C(c_i, i)`.
#[derive(Clone, Debug)]
pub struct SubsetIndex {
    p: usize,
    r: usize,
    // binom[n][k] for n <= p, k <= r
    binom: Vec<Vec<usize>>,
}

impl SubsetIndex {
    pub fn new(p: usize, r: usize) -> Self {
        assert!(r <= p, "subset size {r} exceeds {p}");
        let binom = (0..=p)
            .map(|n| (0..=r).map(|k| binomial_usize(n, k)).collect())
            .collect();
        SubsetIndex { p, r, binom }
    }

    pub fn len(&self) -> usize {
        self.binom[self.p][self.r]
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Rank of a subset given in increasing order.
    pub fn rank(&self, subset: &[usize]) -> usize {
        debug_assert_eq!(subset.len(), self.r);
        debug_assert!(subset.windows(2).all(|w| w[0] < w[1]));
        subset
            .iter()
            .enumerate()
            .map(|(i, &c)| self.binom[c][i + 1])
            .sum()
    }

    /// The subset of rank `t`, in increasing order.
    pub fn unrank(&self, mut t: usize) -> Vec<usize> {
        assert!(t < self.len(), "rank {t} out of range");
        let mut out = vec![0; self.r];
        let mut c = self.p;
        for i in (1..=self.r).rev() {
            c -= 1;
            while self.binom[c][i] > t {
                c -= 1;
            }
            out[i - 1] = c;
            t -= self.binom[c][i];
        }
        out
    }
}

/// A permutation of `0..p` with cycle type `j`. Cycles are laid out on
/// consecutive points, largest cycle first, each mapping `i -> i + 1` and
/// wrapping at its end.
pub fn representative_of(j: &Partition) -> ExplicitPermutation {
    let mut image = Vec::with_capacity(j.ambient());
    let mut start = 0;
    for k in j.parts() {
        for i in 0..k {
            image.push(start + (i + 1) % k);
        }
        start += k;
    }
    ExplicitPermutation { image }
}

/// The permutation induced on `r`-subsets, indexed by colex rank.
pub fn induce_on_subsets(a: &ExplicitPermutation, r: usize) -> ExplicitPermutation {
    induce_with(a, &SubsetIndex::new(a.len(), r))
}

fn induce_with(a: &ExplicitPermutation, index: &SubsetIndex) -> ExplicitPermutation {
    let image = (0..index.len())
        .map(|t| {
            let mut moved: Vec<usize> = index.unrank(t).into_iter().map(|i| a.apply(i)).collect();
            moved.sort_unstable();
            index.rank(&moved)
        })
        .collect();
    ExplicitPermutation { image }
}

pub fn cycle_type_of(a: &ExplicitPermutation) -> CycleType {
    CycleType::from_multiplicities(a.cycles().iter().map(|c| (c.len(), 1)))
}

/// Counting polynomial for `r`-uniform hypergraphs on `p` points via
/// Burnside: each explicit induced permutation fixes `Π_cycles (1 + x^len)`
/// edge sets by edge count.
pub fn burnside_polynomial(p: usize, r: usize) -> IntPolynomial {
    assert!(r >= 1 && r <= p, "need 1 <= r <= p, got p={p} r={r}");
    let index = SubsetIndex::new(p, r);
    let sum = partitions_of(p)
        .into_par_iter()
        .map(|j| {
            let induced = induce_with(&representative_of(&j), &index);
            let fixed = induced
                .cycles()
                .iter()
                .fold(IntPolynomial::one(), |acc, c| {
                    let mut f = vec![BigInt::from(0); c.len() + 1];
                    f[0] = 1.into();
                    f[c.len()] = 1.into();
                    &acc * &IntPolynomial::new(f)
                });
            fixed.scale(&BigInt::from(permutation_count(&j)))
        })
        .reduce(IntPolynomial::zero, |a, b| &a + &b);
    sum.exact_div(&BigInt::from(factorial(p)))
        .expect("Burnside sum is not divisible by p!")
}

/// Number of `n`-plexes on `p` points with exactly `k` `n`-simplices, for each
/// `k`, found by enumerating every edge set and keeping the ones that are
/// minimal in their orbit.
pub fn exhaustive_plex_histogram(p: usize, n: usize) -> Result<Vec<u64>, OracleError> {
    let slots = binomial_usize(p, n + 1);
    if p > EXHAUSTIVE_MAX_POINTS || slots > EXHAUSTIVE_MAX_SLOTS {
        return Err(OracleError::TooLarge { p, n });
    }
    if slots == 0 {
        return Ok(vec![1]);
    }
    let index = SubsetIndex::new(p, n + 1);
    let actions: Vec<MaskAction> = (0..p)
        .permutations(p)
        .map(|img| {
            let a = ExplicitPermutation { image: img };
            MaskAction::new(&induce_with(&a, &index), slots)
        })
        .collect();

    let histogram = (0u32..1 << slots)
        .into_par_iter()
        .filter(|&mask| actions.iter().all(|act| act.apply(mask) >= mask))
        .fold(
            || vec![0u64; slots + 1],
            |mut h, mask| {
                h[mask.count_ones() as usize] += 1;
                h
            },
        )
        .reduce(
            || vec![0u64; slots + 1],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    Ok(histogram)
}

/// Number of orbits of edge sets; see [`exhaustive_plex_histogram`].
pub fn exhaustive_plex_count(p: usize, n: usize) -> Result<BigUint, OracleError> {
    Ok(exhaustive_plex_histogram(p, n)?.iter().sum::<u64>().into())
}

const CHUNK_BITS: usize = 7;

/// Induced permutation of bit positions, applied to a mask through per-chunk
/// lookup tables.
struct MaskAction {
    tables: Vec<Vec<u32>>,
}

impl MaskAction {
    fn new(perm: &ExplicitPermutation, slots: usize) -> Self {
        let tables = (0..slots)
            .step_by(CHUNK_BITS)
            .map(|base| {
                let width = CHUNK_BITS.min(slots - base);
                (0u32..1 << width)
                    .map(|chunk| {
                        (0..width)
                            .filter(|b| chunk >> b & 1 == 1)
                            .fold(0u32, |acc, b| acc | 1 << perm.apply(base + b))
                    })
                    .collect()
            })
            .collect();
        MaskAction { tables }
    }

    fn apply(&self, mask: u32) -> u32 {
        self.tables.iter().enumerate().fold(0, |acc, (i, t)| {
            acc | t[(mask >> (i * CHUNK_BITS)) as usize & ((1 << CHUNK_BITS) - 1)]
        })
    }
}
