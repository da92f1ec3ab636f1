//! Exact arithmetic in the Hecke algebra of the symmetric group.
//!
//! Elements are finitely supported maps from permutations to ground-ring
//! polynomials, representing sums `Σ r_w T̃_w` over the standard basis. The
//! defining relation is applied on right multiplication by a generator:
//! `T̃_w T̃_s = T̃_{ws}` when the length rises, and `T̃_{ws} + x·T̃_w` when it
//! falls. Products with arbitrary basis elements fold this relation over a
//! reduced word of the right factor.
//!
//! The Jucys–Murphy elements `L_i = Σ_{j<i} T̃_{(j i)}` commute pairwise, and
//! monomial symmetric polynomials evaluated at them are central; evaluation
//! of those polynomials is the workhorse behind every transition matrix in
//! this crate. Setting `x = 0` specializes everything to the integral group
//! algebra of the symmetric group.

use std::collections::HashMap;
use std::fmt;
use std::hash::{BuildHasherDefault, Hasher};

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::combinat::Composition;
use crate::perm::Permutation;
use crate::poly::Poly;
use crate::scalar::Scalar;

/// Multiply-xor hasher for short permutation keys; the default SipHash is a
/// measurable cost in the large evaluations.
#[derive(Default)]
pub struct FastHasher(u64);

impl Hasher for FastHasher {
    fn write(&mut self, bytes: &[u8]) {
        for chunk in bytes.chunks(8) {
            let mut buf = [0u8; 8];
            buf[..chunk.len()].copy_from_slice(chunk);
            self.0 = (self.0 ^ u64::from_le_bytes(buf)).wrapping_mul(0x9E37_79B9_7F4A_7C15);
            self.0 ^= self.0 >> 29;
        }
    }

    fn finish(&self) -> u64 {
        let mut h = self.0;
        h ^= h >> 32;
        h = h.wrapping_mul(0xD6E8_FEB8_6659_FD93);
        h ^= h >> 32;
        h
    }
}

type FastBuild = BuildHasherDefault<FastHasher>;
type TermMap<C> = HashMap<Permutation, Poly<C>, FastBuild>;

#[derive(Clone, PartialEq, Eq)]
pub struct HeckeElement<C: Scalar> {
    rank: usize,
    terms: TermMap<C>,
}

impl<C: Scalar> HeckeElement<C> {
    pub fn zero(rank: usize) -> Self {
        HeckeElement {
            rank,
            terms: TermMap::default(),
        }
    }

    /// The identity `T̃_1`.
    pub fn one(rank: usize) -> Self {
        Self::basis(Permutation::identity(rank))
    }

    /// A single basis element `T̃_w`.
    pub fn basis(w: Permutation) -> Self {
        let rank = w.rank();
        let mut terms = TermMap::default();
        terms.insert(w, Poly::one());
        HeckeElement { rank, terms }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn support_size(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &Poly<C>)> {
        self.terms.iter()
    }

    /// Terms sorted by `(length, one-line images)`, for reproducible output.
    pub fn sorted_terms(&self) -> Vec<(&Permutation, &Poly<C>)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.sort_key().cmp(&b.0.sort_key()));
        v
    }

    pub fn add_term(&mut self, w: Permutation, p: Poly<C>) {
        debug_assert_eq!(w.rank(), self.rank);
        if p.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::hash_map::Entry::Occupied(mut e) => {
                let sum = e.get().add_ref(&p);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(p);
            }
        }
    }

    pub fn add_ref(&self, rhs: &Self) -> Self {
        assert_eq!(self.rank, rhs.rank, "rank mismatch");
        let mut out = self.clone();
        for (w, p) in &rhs.terms {
            out.add_term(w.clone(), p.clone());
        }
        out
    }

    pub fn sub_ref(&self, rhs: &Self) -> Self {
        self.add_ref(&rhs.neg_ref())
    }

    pub fn neg_ref(&self) -> Self {
        let mut out = HeckeElement::zero(self.rank);
        for (w, p) in &self.terms {
            out.terms.insert(w.clone(), p.neg_ref());
        }
        out
    }

    pub fn scale(&self, c: &Poly<C>) -> Self {
        let mut out = HeckeElement::zero(self.rank);
        if c.is_zero() {
            return out;
        }
        for (w, p) in &self.terms {
            out.terms.insert(w.clone(), p.mul_ref(c));
        }
        out
    }

    /// Right multiplication by `T̃_{s_i}`, applying the quadratic relation
    /// termwise.
    pub fn mul_gen(&self, i: usize) -> Self {
        let mut out = HeckeElement::zero(self.rank);
        let xi = Poly::<C>::xi();
        for (w, c) in &self.terms {
            let (ws, delta) = w.apply_gen(i);
            if delta > 0 {
                out.add_term(ws, c.clone());
            } else {
                out.add_term(ws, c.clone());
                out.add_term(w.clone(), c.mul_ref(&xi));
            }
        }
        out
    }

    /// Left multiplication by `T̃_{s_i}`.
    pub fn mul_gen_left(&self, i: usize) -> Self {
        let mut out = HeckeElement::zero(self.rank);
        let xi = Poly::<C>::xi();
        for (w, c) in &self.terms {
            let (sw, delta) = w.apply_gen_left(i);
            if delta > 0 {
                out.add_term(sw, c.clone());
            } else {
                out.add_term(sw, c.clone());
                out.add_term(w.clone(), c.mul_ref(&xi));
            }
        }
        out
    }

    /// `self · T̃_v`, folding `mul_gen` over a reduced word for `v`.
    pub fn mul_basis(&self, v: &Permutation) -> Self {
        v.reduced_word().iter().fold(self.clone(), |acc, &i| acc.mul_gen(i))
    }

    /// Bilinear product: expand each basis element of `rhs` by a reduced
    /// word and fold the generator relation.
    pub fn mul_ref(&self, rhs: &Self) -> Self {
        assert_eq!(self.rank, rhs.rank, "rank mismatch");
        let mut out = HeckeElement::zero(self.rank);
        for (v, c) in &rhs.terms {
            let prod = self.mul_basis(v);
            for (w, p) in prod.terms {
                out.add_term(w, p.mul_ref(c));
            }
        }
        out
    }

    /// The coefficient of `T̃_w`; for central elements this is the trace
    /// inner product `⟨T̃_w, h⟩`.
    pub fn coeff(&self, w: &Permutation) -> Poly<C> {
        assert_eq!(self.rank, w.rank(), "rank mismatch");
        self.terms.get(w).cloned().unwrap_or_else(Poly::zero)
    }

    /// Does `h` commute with every generator (hence with everything)?
    pub fn is_central(&self) -> bool {
        (1..self.rank).all(|i| self.mul_gen(i) == self.mul_gen_left(i))
    }

    /// Set `x = 0`: the image in the integral group algebra.
    pub fn specialize(&self) -> GroupAlgebra<C> {
        let mut out = GroupAlgebra::zero(self.rank);
        for (w, p) in &self.terms {
            out.add_term(w.clone(), p.specialize0());
        }
        out
    }
}

impl<C: Scalar> fmt::Display for HeckeElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (w, p)) in self.sorted_terms().into_iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({p})*T{w}")?;
        }
        Ok(())
    }
}

impl<C: Scalar> fmt::Debug for HeckeElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

// JSON form: list of {"w": one-line images, "c": ascending coefficients},
// sorted by (length, one-line lexicographic).
impl<C: Scalar> Serialize for HeckeElement<C> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        #[serde(bound = "")]
        struct Term<'a, C: Scalar> {
            w: &'a Permutation,
            c: &'a Poly<C>,
        }
        let sorted = self.sorted_terms();
        let mut seq = serializer.serialize_seq(Some(sorted.len()))?;
        for (w, c) in sorted {
            seq.serialize_element(&Term { w, c })?;
        }
        seq.end()
    }
}

/// The Jucys–Murphy element `L_i = Σ_{1≤j<i} T̃_{(j i)}`; `L_1 = 0`.
pub fn jm<C: Scalar>(i: usize, rank: usize) -> HeckeElement<C> {
    assert!(i >= 1 && i <= rank, "Jucys-Murphy index {i} out of range for rank {rank}");
    let mut out = HeckeElement::zero(rank);
    for j in 1..i {
        out.add_term(Permutation::transposition(j, i, rank), Poly::one());
    }
    out
}

/// Memoized powers of the Jucys–Murphy elements for one rank; shared across
/// the evaluations of a whole transition matrix.
pub struct JmPowers<C: Scalar> {
    rank: usize,
    powers: HashMap<(usize, u32), HeckeElement<C>>,
}

impl<C: Scalar> JmPowers<C> {
    pub fn new(rank: usize) -> Self {
        JmPowers {
            rank,
            powers: HashMap::new(),
        }
    }

    fn power(&mut self, j: usize, e: u32) -> HeckeElement<C> {
        debug_assert!(e >= 1);
        if let Some(p) = self.powers.get(&(j, e)) {
            return p.clone();
        }
        let result = if e == 1 {
            jm(j, self.rank)
        } else {
            let lower = self.power(j, e - 1);
            lower.mul_ref(&jm(j, self.rank))
        };
        self.powers.insert((j, e), result.clone());
        result
    }
}

/// The quasi-symmetric monomial `p^λ(L_1, …, L_n)`: the sum over strictly
/// increasing index tuples `j_1 < ⋯ < j_r` of `L_{j_1}^{λ_1} ⋯ L_{j_r}^{λ_r}`.
/// `p^∅ = T̃_1`. Tuples through index 1 vanish because `L_1 = 0`.
pub fn eval_p<C: Scalar>(lambda: &Composition, rank: usize) -> HeckeElement<C> {
    eval_p_with(&mut JmPowers::new(rank), lambda)
}

pub fn eval_p_with<C: Scalar>(ctx: &mut JmPowers<C>, lambda: &Composition) -> HeckeElement<C> {
    let rank = ctx.rank;
    if lambda.is_empty() {
        return HeckeElement::one(rank);
    }
    let parts = lambda.parts().to_vec();
    let mut acc = HeckeElement::zero(rank);
    // DFS over tuples shares every prefix product between siblings.
    fn dfs<C: Scalar>(
        ctx: &mut JmPowers<C>,
        parts: &[u32],
        pos: usize,
        start: usize,
        prefix: &HeckeElement<C>,
        acc: &mut HeckeElement<C>,
    ) {
        let remaining = parts.len() - pos - 1;
        let rank = prefix.rank();
        for j in start..=rank.saturating_sub(remaining) {
            let prod = prefix.mul_ref(&ctx.power(j, parts[pos]));
            if prod.is_zero() {
                continue;
            }
            if remaining == 0 {
                *acc = acc.add_ref(&prod);
            } else {
                dfs(ctx, parts, pos + 1, j + 1, &prod, acc);
            }
        }
    }
    let one = HeckeElement::one(rank);
    dfs(ctx, &parts, 0, 2, &one, &mut acc); // skip j = 1: L_1 = 0
    acc
}

/// The monomial symmetric polynomial `m_λ(L_1, …, L_n)` for a partition `λ`:
/// the sum of `p^α` over all distinct rearrangements `α` of `λ`. Central.
/// Zero when `ℓ(λ) ≥ n` (every index tuple is forced through `L_1 = 0`).
pub fn eval_m<C: Scalar>(lambda: &Composition, rank: usize) -> HeckeElement<C> {
    eval_m_with(&mut JmPowers::new(rank), lambda)
}

pub fn eval_m_with<C: Scalar>(ctx: &mut JmPowers<C>, lambda: &Composition) -> HeckeElement<C> {
    debug_assert!(lambda.is_partition(), "{lambda} is not a partition");
    let mut acc = HeckeElement::zero(ctx.rank);
    for alpha in lambda.rearrangements() {
        acc = acc.add_ref(&eval_p_with(ctx, &alpha));
    }
    acc
}

/// An element of the integral group algebra of `S_n`: the specialization
/// target at `x = 0`.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupAlgebra<C: Scalar> {
    rank: usize,
    terms: HashMap<Permutation, C, FastBuild>,
}

impl<C: Scalar> GroupAlgebra<C> {
    pub fn zero(rank: usize) -> Self {
        GroupAlgebra {
            rank,
            terms: HashMap::default(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn add_term(&mut self, w: Permutation, c: C) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(w);
        match entry {
            std::collections::hash_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn coeff(&self, w: &Permutation) -> C {
        self.terms.get(w).cloned().unwrap_or_else(C::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &C)> {
        self.terms.iter()
    }

    pub fn add_ref(&self, rhs: &Self) -> Self {
        assert_eq!(self.rank, rhs.rank);
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn mul_ref(&self, rhs: &Self) -> Self {
        assert_eq!(self.rank, rhs.rank);
        let mut out = GroupAlgebra::zero(self.rank);
        for (u, a) in &self.terms {
            for (v, b) in &rhs.terms {
                out.add_term(u.compose(v), a.clone() * b.clone());
            }
        }
        out
    }

    /// The sum of all elements of the conjugacy class with cycle type `mu`.
    pub fn class_sum(mu: &Composition, rank: usize) -> crate::Result<Self> {
        let mut out = GroupAlgebra::zero(rank);
        for w in crate::perm::class_elements(mu, rank)? {
            out.add_term(w, C::one());
        }
        Ok(out)
    }
}

impl<C: Scalar> fmt::Debug for GroupAlgebra<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.sort_key().cmp(&b.0.sort_key()));
        for (k, (w, c)) in v.into_iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*{w}")?;
        }
        Ok(())
    }
}
