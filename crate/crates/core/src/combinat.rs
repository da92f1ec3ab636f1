//! Compositions and partitions, and the total order used to label every
//! matrix and basis in this crate.
//!
//! A composition is a finite ordered list of positive integers; the empty
//! composition `∅` is the unique composition of 0. Partitions are
//! compositions with weakly decreasing parts. Compositions are compared by
//! total size first; ties (of positive size) are broken by recursively
//! comparing the compositions with their last part removed. Sorting all
//! compositions of 3 this way gives `(3), (1,2), (2,1), (1,1,1)`.

use std::cmp::Ordering;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

/// A composition: ordered parts, all ≥ 1. The empty composition is `∅`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Composition {
    parts: Vec<u32>,
}

/// Convenience constructor used heavily in tests: `comp![2, 1]`.
#[macro_export]
macro_rules! comp {
    ($($p:expr),* $(,)?) => {
        $crate::combinat::Composition::new(vec![$($p),*])
    };
}

impl Composition {
    /// Panics if any part is zero; compositions have strictly positive parts.
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(parts.iter().all(|&p| p >= 1), "composition parts must be >= 1");
        Composition { parts }
    }

    pub fn empty() -> Self {
        Composition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// `|λ|`, the sum of the parts.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// `ℓ(λ)`, the number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Weakly decreasing parts.
    pub fn is_partition(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] >= w[1])
    }

    /// Subtract 1 from every part and drop the zeros that appear.
    /// `(3,1,4) ↦ (2,3)`; the result has size `|λ| − ℓ(λ)`.
    pub fn minus_one(&self) -> Composition {
        Composition {
            parts: self.parts.iter().filter(|&&p| p > 1).map(|&p| p - 1).collect(),
        }
    }

    /// Add 1 to every part, pad with `n − ℓ(λ) − |λ|` extra parts equal to 1,
    /// and sort decreasingly: the partition of `n` written `λ̄`.
    ///
    /// Requires `ℓ(λ) + |λ| ≤ n`. For a partition `λ ⊢ n`,
    /// `λ.minus_one().bar(n) == λ`.
    pub fn bar(&self, n: u32) -> Result<Composition> {
        let need = self.len() as u32 + self.size();
        if need > n {
            return Err(Error::ShapeNotRealizable { lambda: self.clone(), n });
        }
        let mut parts: Vec<u32> = self.parts.iter().map(|&p| p + 1).collect();
        parts.extend(std::iter::repeat_n(1, (n - need) as usize));
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Composition { parts })
    }

    /// Drop the last part (`∅` for a single part). `None` on `∅` itself.
    pub fn prime(&self) -> Option<Composition> {
        if self.parts.is_empty() {
            return None;
        }
        Some(Composition {
            parts: self.parts[..self.parts.len() - 1].to_vec(),
        })
    }

    /// All distinct orderings of the parts, sorted. For a partition `λ` these
    /// index the quasi-symmetric summands of the monomial symmetric function:
    /// `rearrangements((2,1)) = {(2,1), (1,2)}`.
    pub fn rearrangements(&self) -> Vec<Composition> {
        let mut parts = self.parts.clone();
        parts.sort_unstable();
        let mut out: Vec<Composition> = Vec::new();
        let mut current = Vec::with_capacity(parts.len());
        distinct_permutations(&mut parts, &mut current, &mut out);
        out.sort();
        out
    }

    /// Key for JSON object fields: parts joined by commas, `""` for `∅`.
    pub fn key(&self) -> String {
        self.parts
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

fn distinct_permutations(pool: &mut Vec<u32>, current: &mut Vec<u32>, out: &mut Vec<Composition>) {
    if pool.is_empty() {
        out.push(Composition { parts: current.clone() });
        return;
    }
    let mut last: Option<u32> = None;
    for i in 0..pool.len() {
        if last == Some(pool[i]) {
            continue; // pool is sorted, so equal choices are adjacent
        }
        last = Some(pool[i]);
        let v = pool.remove(i);
        current.push(v);
        distinct_permutations(pool, current, out);
        current.pop();
        pool.insert(i, v);
    }
}

// Size first, then recursively on the composition with the last part removed.
// Identical part lists are the only way to compare equal.
fn cmp_slices(a: &[u32], b: &[u32]) -> Ordering {
    let (sa, sb): (u32, u32) = (a.iter().sum(), b.iter().sum());
    match sa.cmp(&sb) {
        Ordering::Equal if sa == 0 => Ordering::Equal,
        Ordering::Equal => cmp_slices(&a[..a.len() - 1], &b[..b.len() - 1]),
        other => other,
    }
}

impl Ord for Composition {
    fn cmp(&self, other: &Self) -> Ordering {
        cmp_slices(&self.parts, &other.parts)
    }
}

impl PartialOrd for Composition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.key())
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Composition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Composition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(deserializer)?;
        if parts.contains(&0) {
            return Err(D::Error::custom("composition parts must be >= 1"));
        }
        Ok(Composition { parts })
    }
}

/// All `2^(k−1)` compositions of `k` (just `∅` for `k = 0`), sorted.
pub fn enumerate_compositions(k: u32) -> Vec<Composition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    gen_compositions(k, &mut current, &mut out);
    out.sort();
    out
}

fn gen_compositions(rest: u32, current: &mut Vec<u32>, out: &mut Vec<Composition>) {
    if rest == 0 {
        out.push(Composition { parts: current.clone() });
        return;
    }
    for first in 1..=rest {
        current.push(first);
        gen_compositions(rest - first, current, out);
        current.pop();
    }
}

/// All partitions of `k`, sorted by the composition order. For `k = 4` this
/// is `(4), (2,2), (3,1), (2,1,1), (1,1,1,1)`.
pub fn enumerate_partitions(k: u32) -> Vec<Composition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    gen_partitions(k, k, &mut current, &mut out);
    out.sort();
    out
}

fn gen_partitions(rest: u32, max: u32, current: &mut Vec<u32>, out: &mut Vec<Composition>) {
    if rest == 0 {
        out.push(Composition { parts: current.clone() });
        return;
    }
    for first in (1..=rest.min(max)).rev() {
        current.push(first);
        gen_partitions(rest - first, first, current, out);
        current.pop();
    }
}

/// Compositions of every size `0..=max`, concatenated in global order.
pub fn compositions_up_to(max: u32) -> Vec<Composition> {
    let mut out = Vec::new();
    for k in 0..=max {
        out.extend(enumerate_compositions(k));
    }
    out
}
