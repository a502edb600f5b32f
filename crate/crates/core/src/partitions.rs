//! Integer partitions in multiplicity form.
//!
//! A [`Partition`] of `p` records how many parts of each size it has. The same
//! type describes the cycle type of a permutation: `j_k` is the number of
//! `k`-cycles.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

/// A partition stored as part size → multiplicity. Zero multiplicities are
/// never stored.
///
/// The `Ord` implementation compares the dense multiplicity vectors
/// `(j_1, j_2, ...)` in *descending* lexicographic order, so `{j_1=20}` sorts
/// before `{j_1=8, j_2=6}`, which sorts before `{j_2=10}`. This is the order in
/// which cycle-index terms are rendered.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: BTreeMap<usize, usize>,
    ambient: usize,
}

impl Partition {
    /// The empty partition of 0.
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a partition from a list of part sizes in any order.
    ///
    /// Panics on a part of size zero.
    pub fn from_parts(parts: &[usize]) -> Self {
        Self::from_multiplicities(parts.iter().map(|&k| (k, 1)))
    }

    /// Builds a partition from `(part size, multiplicity)` pairs. Repeated part
    /// sizes are summed and zero multiplicities are dropped.
    ///
    /// Panics on a part of size zero with nonzero multiplicity.
    pub fn from_multiplicities<I>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut parts = BTreeMap::new();
        let mut ambient = 0usize;
        for (k, j) in pairs {
            if j == 0 {
                continue;
            }
            assert!(k > 0, "partition parts must be positive");
            *parts.entry(k).or_insert(0) += j;
            ambient += k * j;
        }
        Partition { parts, ambient }
    }

    /// The integer being partitioned, `Σ k·j_k`.
    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// `j_k`, zero when `k` does not occur.
    pub fn multiplicity(&self, k: usize) -> usize {
        self.parts.get(&k).copied().unwrap_or(0)
    }

    /// `(k, j_k)` pairs in increasing part size, nonzero multiplicities only.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts.iter().map(|(&k, &j)| (k, j))
    }

    /// Part sizes listed with repetition, largest first.
    pub fn parts(&self) -> Vec<usize> {
        self.parts
            .iter()
            .rev()
            .flat_map(|(&k, &j)| std::iter::repeat_n(k, j))
            .collect()
    }

    /// Number of parts, `Σ j_k` (the number of cycles of a permutation).
    pub fn num_parts(&self) -> usize {
        self.parts.values().sum()
    }

    pub fn largest_part(&self) -> Option<usize> {
        self.parts.keys().next_back().copied()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Least common multiple of the part sizes: the order of any permutation
    /// with this cycle type. 1 for the empty partition.
    pub fn lcm(&self) -> u64 {
        self.parts.keys().fold(1u64, |acc, &k| acc.lcm(&(k as u64)))
    }

    /// Monomial notation `k^e` separated by spaces, e.g. `1^8 2^6`. The empty
    /// partition renders as `1`.
    pub fn monomial(&self) -> String {
        if self.is_empty() {
            return "1".to_string();
        }
        self.iter()
            .map(|(k, j)| format!("{k}^{j}"))
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Parses [`Partition::monomial`] notation back.
    pub fn parse_monomial(s: &str) -> Option<Self> {
        let s = s.trim();
        if s == "1" {
            return Some(Self::empty());
        }
        let mut pairs = Vec::new();
        for tok in s.split_whitespace() {
            let (k, e) = tok.split_once('^')?;
            let (k, e): (usize, usize) = (k.parse().ok()?, e.parse().ok()?);
            if k == 0 || e == 0 {
                return None;
            }
            pairs.push((k, e));
        }
        Some(Self::from_multiplicities(pairs))
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        let mut a = self.parts.iter().peekable();
        let mut b = other.parts.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => return self.ambient.cmp(&other.ambient),
                // A missing entry is a zero multiplicity at a larger part size.
                (Some(_), None) => return Ordering::Less,
                (None, Some(_)) => return Ordering::Greater,
                (Some(&(&ka, &ja)), Some(&(&kb, &jb))) => {
                    if ka != kb {
                        // The side with the smaller part size has a positive
                        // multiplicity where the other has zero.
                        return if ka < kb {
                            Ordering::Less
                        } else {
                            Ordering::Greater
                        };
                    }
                    if ja != jb {
                        return jb.cmp(&ja);
                    }
                    a.next();
                    b.next();
                }
            }
        }
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, k) in self.parts().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{k}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of `p` in decreasing-lexicographic order of their part
/// lists: for `p = 4` this is `(4), (3,1), (2,2), (2,1,1), (1,1,1,1)`.
///
/// `p = 0` yields the single empty partition.
pub fn partitions_of(p: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    descend(p, p, &mut stack, &mut out);
    out
}

fn descend(remaining: usize, max_part: usize, stack: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition::from_parts(stack));
        return;
    }
    for k in (1..=remaining.min(max_part)).rev() {
        stack.push(k);
        descend(remaining - k, k, stack, out);
        stack.pop();
    }
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n as u64).fold(BigUint::one(), |acc, k| acc * k)
}

/// Exact binomial coefficient; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) at every step.
        acc = acc * (n - i) as u64 / (i + 1) as u64;
    }
    acc
}

/// `C(n, k)` as a machine integer. Panics on overflow.
pub fn binomial_usize(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    usize::try_from(acc).expect("binomial coefficient overflows usize")
}

/// Number of permutations of `S_p` with cycle type `j`:
/// `p! / Π_k (k^{j_k} · j_k!)`.
pub fn permutation_count(j: &Partition) -> BigUint {
    let mut denom = BigUint::one();
    for (k, jk) in j.iter() {
        denom *= BigUint::from(k).pow(jk as u32);
        denom *= factorial(jk);
    }
    let (q, rem) = factorial(j.ambient()).div_rem(&denom);
    assert!(
        rem.is_zero(),
        "p! not divisible by centralizer order for {j}"
    );
    q
}

/// Cycle type of `β^m` for any `β` of cycle type `j`: each `k`-cycle splits
/// into `gcd(m, k)` cycles of length `k / gcd(m, k)`.
pub fn power_cycle_type(j: &Partition, m: usize) -> Partition {
    assert!(m >= 1, "power must be positive");
    Partition::from_multiplicities(j.iter().map(|(k, jk)| {
        let g = m.gcd(&k);
        (k / g, g * jk)
    }))
}
