//! Permutations of `{1, …, n}` with their Coxeter structure.
//!
//! One-line notation, 1-indexed. Right multiplication by the generator
//! `s_i = (i, i+1)` swaps the entries at positions `i` and `i+1`; the cached
//! length is the inversion count and equals the length of any reduced word.
//! Shapes of increasing elements, cycle types, and minimal-length class
//! representatives are what connect the group to the matrix labels.

use std::fmt;
use std::hash::{Hash, Hasher};

use serde::{Serialize, Serializer};

use crate::combinat::Composition;
use crate::{Error, Result};

/// Ranks above this are refused by the exhaustive-enumeration helpers.
pub const MAX_ENUM_RANK: usize = 8;

#[derive(Clone, Eq)]
pub struct Permutation {
    images: Vec<u8>, // images[i] = w(i+1)
    length: u32,     // inversion count
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n as u8).collect(),
            length: 0,
        }
    }

    pub fn from_images(images: Vec<u8>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v as usize > n || seen[v as usize] {
                return Err(Error::InvalidArgument(format!(
                    "not a permutation of 1..={n}: {images:?}"
                )));
            }
            seen[v as usize] = true;
        }
        let length = inversions(&images);
        Ok(Permutation { images, length })
    }

    /// The transposition `(a b)` in rank `n`.
    pub fn transposition(a: usize, b: usize, n: usize) -> Self {
        assert!(a != b && a >= 1 && b >= 1 && a <= n && b <= n);
        let mut images: Vec<u8> = (1..=n as u8).collect();
        images.swap(a - 1, b - 1);
        let length = inversions(&images);
        Permutation { images, length }
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    /// Coxeter length `ℓ(w)`.
    pub fn length(&self) -> u32 {
        self.length
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }

    /// Right multiplication by `s_i` (`1 ≤ i < n`), with the length delta.
    /// Exactly one of `+1`/`-1` occurs; `+1` iff `w(i) < w(i+1)`.
    pub fn apply_gen(&self, i: usize) -> (Permutation, i8) {
        assert!(i >= 1 && i < self.rank(), "generator index {i} out of range");
        let mut images = self.images.clone();
        let delta = if images[i - 1] < images[i] { 1 } else { -1 };
        images.swap(i - 1, i);
        (
            Permutation {
                images,
                length: (self.length as i64 + delta as i64) as u32,
            },
            delta,
        )
    }

    /// Left multiplication by `s_i`: swaps the values `i` and `i+1`.
    pub fn apply_gen_left(&self, i: usize) -> (Permutation, i8) {
        assert!(i >= 1 && i < self.rank(), "generator index {i} out of range");
        let mut images = self.images.clone();
        let (mut pi, mut pj) = (usize::MAX, usize::MAX);
        for (p, &v) in images.iter().enumerate() {
            if v as usize == i {
                pi = p;
            } else if v as usize == i + 1 {
                pj = p;
            }
        }
        let delta = if pi < pj { 1 } else { -1 };
        images.swap(pi, pj);
        (
            Permutation {
                images,
                length: (self.length as i64 + delta as i64) as u32,
            },
            delta,
        )
    }

    /// Composition `(self∘rhs)(j) = self(rhs(j))`.
    pub fn compose(&self, rhs: &Permutation) -> Permutation {
        assert_eq!(self.rank(), rhs.rank());
        let images: Vec<u8> = rhs.images.iter().map(|&v| self.images[v as usize - 1]).collect();
        let length = inversions(&images);
        Permutation { images, length }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u8; self.rank()];
        for (p, &v) in self.images.iter().enumerate() {
            images[v as usize - 1] = p as u8 + 1;
        }
        Permutation {
            images,
            length: self.length,
        }
    }

    /// A reduced word `(i₁, …, i_r)` with `w = s_{i₁}⋯s_{i_r}`, found by
    /// repeatedly stripping the smallest right descent. Any reduced word
    /// yields the same basis-element product.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::with_capacity(self.length as usize);
        while !w.is_identity() {
            let i = (1..w.rank())
                .find(|&i| w.images[i - 1] > w.images[i])
                .expect("non-identity permutation has a descent");
            w = w.apply_gen(i).0;
            word.push(i);
        }
        word.reverse();
        word
    }

    /// Cycle lengths including fixed points, sorted decreasingly: the
    /// partition of `n` indexing the conjugacy class of `w`.
    pub fn cycle_type(&self) -> Composition {
        let n = self.rank();
        let mut seen = vec![false; n];
        let mut lens: Vec<u32> = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0u32;
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                len += 1;
                j = self.images[j] as usize - 1;
            }
            lens.push(len);
        }
        lens.sort_unstable_by(|a, b| b.cmp(a));
        Composition::new(lens)
    }

    /// Sort key used for reproducible output: `(length, one-line images)`.
    pub fn sort_key(&self) -> (u32, &[u8]) {
        (self.length, &self.images)
    }
}

fn inversions(images: &[u8]) -> u32 {
    let mut count = 0;
    for i in 0..images.len() {
        for j in i + 1..images.len() {
            if images[i] > images[j] {
                count += 1;
            }
        }
    }
    count
}

impl PartialEq for Permutation {
    fn eq(&self, other: &Self) -> bool {
        self.images == other.images
    }
}

impl Hash for Permutation {
    fn hash<H: Hasher>(&self, state: &mut H) {
        state.write(&self.images);
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, v) in self.images.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.images.serialize(serializer)
    }
}

/// The canonical increasing element of shape `λ` in rank `n`: generator runs
/// of lengths `λ_t`, starting at index 1, with a gap of one index between
/// consecutive runs. Its length is `|λ|` and its cycle type is `λ.bar(n)`.
/// Requires `|λ| + ℓ(λ) ≤ n`.
pub fn increasing_element(lambda: &Composition, n: usize) -> Result<Permutation> {
    if lambda.size() as usize + lambda.len() > n {
        return Err(Error::ShapeNotRealizable {
            lambda: lambda.clone(),
            n: n as u32,
        });
    }
    let mut w = Permutation::identity(n);
    let mut start = 1usize;
    for &part in lambda.parts() {
        for i in start..start + part as usize {
            let (next, delta) = w.apply_gen(i);
            debug_assert_eq!(delta, 1);
            w = next;
        }
        start += part as usize + 1;
    }
    Ok(w)
}

/// Streaming enumeration of `S_n` in lexicographic one-line order.
pub fn all_permutations(n: usize) -> Permutations {
    Permutations {
        next: Some(Permutation::identity(n)),
    }
}

pub struct Permutations {
    next: Option<Permutation>,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut images = current.images.clone();
        // classic next-permutation step
        let n = images.len();
        self.next = (|| {
            if n < 2 {
                return None;
            }
            let mut i = n - 1;
            while i > 0 && images[i - 1] >= images[i] {
                i -= 1;
            }
            if i == 0 {
                return None;
            }
            let mut j = n - 1;
            while images[j] <= images[i - 1] {
                j -= 1;
            }
            images.swap(i - 1, j);
            images[i..].reverse();
            let length = inversions(&images);
            Some(Permutation { images, length })
        })();
        Some(current)
    }
}

fn check_enum_rank(n: usize) -> Result<()> {
    if n > MAX_ENUM_RANK {
        return Err(Error::RankTooLarge { n, max: MAX_ENUM_RANK });
    }
    Ok(())
}

/// Every element of the conjugacy class with cycle type `mu ⊢ n`.
pub fn class_elements(mu: &Composition, n: usize) -> Result<Vec<Permutation>> {
    check_enum_rank(n)?;
    assert!(mu.is_partition() && mu.size() as usize == n, "{mu} is not a partition of {n}");
    Ok(all_permutations(n).filter(|w| &w.cycle_type() == mu).collect())
}

/// The minimal-length elements of the class `C_mu`. Their common length is
/// `|mu − 1|`, and the canonical increasing element of shape `mu − 1` is one
/// of them.
pub fn minimal_class_elements(mu: &Composition, n: usize) -> Result<Vec<Permutation>> {
    let target = mu.minus_one().size();
    let mut out: Vec<Permutation> = class_elements(mu, n)?
        .into_iter()
        .filter(|w| w.length() == target)
        .collect();
    out.sort_by(|a, b| a.images.cmp(&b.images));
    debug_assert!(!out.is_empty());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comp;

    fn word(gens: &[usize], n: usize) -> Permutation {
        gens.iter().fold(Permutation::identity(n), |w, &i| w.apply_gen(i).0)
    }

    #[test]
    fn apply_gen_examples() {
        let id = Permutation::identity(3);
        let (s1, d) = id.apply_gen(1);
        assert_eq!((s1.images(), d), (&[2u8, 1, 3][..], 1));
        let (back, d) = s1.apply_gen(1);
        assert_eq!((back, d), (id.clone(), -1));
        let (s1s2, d) = s1.apply_gen(2);
        assert_eq!((s1s2.images(), d), (&[2u8, 3, 1][..], 1));
    }

    #[test]
    fn length_is_inversion_count_and_word_length() {
        for w in all_permutations(5) {
            assert_eq!(w.reduced_word().len() as u32, w.length());
            let rebuilt = word(&w.reduced_word(), 5);
            assert_eq!(rebuilt, w);
        }
    }

    #[test]
    fn increasing_element_examples() {
        let w = increasing_element(&comp![1, 2, 1], 7).unwrap();
        assert_eq!(w, word(&[1, 3, 4, 6], 7));
        assert_eq!(w.length(), 4);
        assert_eq!(w.cycle_type(), comp![1, 2, 1].bar(7).unwrap());
        assert_eq!(w.cycle_type(), comp![3, 2, 2]);

        let s1s2 = increasing_element(&comp![2], 3).unwrap();
        assert_eq!(s1s2, word(&[1, 2], 3));
        assert!(increasing_element(&comp![1, 1], 3).is_err());
    }

    #[test]
    fn cycle_type_examples() {
        assert_eq!(Permutation::identity(3).cycle_type(), comp![1, 1, 1]);
        assert_eq!(word(&[1, 2], 3).cycle_type(), comp![3]);
    }

    #[test]
    fn shape_invariants_small_ranks() {
        use crate::combinat::enumerate_compositions;
        for n in 1..=6usize {
            for k in 0..n as u32 {
                for lam in enumerate_compositions(k) {
                    if lam.size() as usize + lam.len() > n {
                        continue;
                    }
                    let w = increasing_element(&lam, n).unwrap();
                    assert_eq!(w.length(), lam.size());
                    assert_eq!(w.cycle_type(), lam.bar(n as u32).unwrap());
                }
            }
        }
    }

    #[test]
    fn minimal_class_elements_examples() {
        let id_only = minimal_class_elements(&comp![1, 1, 1], 3).unwrap();
        assert_eq!(id_only, vec![Permutation::identity(3)]);

        let threes = minimal_class_elements(&comp![3], 3).unwrap();
        assert_eq!(threes.len(), 2);
        assert!(threes.contains(&word(&[1, 2], 3)));
        assert!(threes.contains(&word(&[2, 1], 3)));

        let transpositions = minimal_class_elements(&comp![2, 1], 3).unwrap();
        assert_eq!(transpositions, vec![word(&[2], 3), word(&[1], 3)]);

        assert!(minimal_class_elements(&comp![9], 9).is_err());
    }

    #[test]
    fn minimal_length_in_class_is_size_of_minus_one() {
        use crate::combinat::enumerate_partitions;
        for n in 1..=6usize {
            for mu in enumerate_partitions(n as u32) {
                let min_len = class_elements(&mu, n)
                    .unwrap()
                    .iter()
                    .map(|w| w.length())
                    .min()
                    .unwrap();
                assert_eq!(min_len, mu.minus_one().size(), "class {mu} in S_{n}");
                let canonical = increasing_element(&mu.minus_one(), n).unwrap();
                assert!(minimal_class_elements(&mu, n).unwrap().contains(&canonical));
            }
        }
    }

    #[test]
    fn enumeration_is_lex_ordered_and_complete() {
        let all: Vec<_> = all_permutations(4).collect();
        assert_eq!(all.len(), 24);
        assert!(all.windows(2).all(|w| w[0].images() < w[1].images()));
    }

    #[test]
    fn json_is_one_line_array() {
        let w = word(&[1, 2], 3);
        assert_eq!(serde_json::to_string(&w).unwrap(), "[2,3,1]");
    }
}
