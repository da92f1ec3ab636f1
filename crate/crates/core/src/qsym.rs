//! Stable quasi-symmetric arithmetic in the monomial `p`-basis, and the
//! structure-constant data feeding the matrix tower.
//!
//! Products of monomial quasi-symmetric functions follow the quasi-shuffle
//! recursion on leading parts: the first part of a product term either comes
//! from the left factor, from the right factor, or is the merge (sum) of
//! both leading parts. The expansion is stable: it does not depend on the
//! number of variables, provided there are enough of them, which is exactly
//! the regime in which the tower matrices make sense.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_integer::binomial;

use crate::combinat::{compositions_up_to, enumerate_compositions, Composition};
use crate::matrix::LabeledMatrix;
use crate::poly::Poly;
use crate::scalar::Scalar;

/// A finitely supported combination `Σ c_λ · p^λ` with ground-ring
/// coefficients, keyed in composition order.
#[derive(Clone, PartialEq, Eq)]
pub struct QSym<C: Scalar> {
    terms: BTreeMap<Composition, Poly<C>>,
}

impl<C: Scalar> QSym<C> {
    pub fn zero() -> Self {
        QSym { terms: BTreeMap::new() }
    }

    /// The basis element `p^λ`.
    pub fn basis(lambda: Composition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(lambda, Poly::one());
        QSym { terms }
    }

    pub fn add_term(&mut self, lambda: Composition, c: Poly<C>) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(lambda.clone()).or_insert_with(Poly::zero);
        *entry = entry.add_ref(&c);
        if entry.is_zero() {
            self.terms.remove(&lambda);
        }
    }

    pub fn add_ref(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (l, c) in &rhs.terms {
            out.add_term(l.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Poly<C>) -> Self {
        let mut out = QSym::zero();
        for (l, p) in &self.terms {
            out.add_term(l.clone(), p.mul_ref(c));
        }
        out
    }

    pub fn coeff(&self, lambda: &Composition) -> Poly<C> {
        self.terms.get(lambda).cloned().unwrap_or_else(Poly::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Composition, &Poly<C>)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<C: Scalar> fmt::Debug for QSym<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (l, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*p{l}")?;
        }
        Ok(())
    }
}

type RawTerms = Vec<(Vec<u32>, u64)>;
type ShuffleMemo = HashMap<(Vec<u32>, Vec<u32>), RawTerms>;

thread_local! {
    static SHUFFLE_MEMO: RefCell<ShuffleMemo> = RefCell::new(HashMap::new());
}

fn quasi_shuffle_raw(a: &[u32], b: &[u32]) -> Vec<(Vec<u32>, u64)> {
    if a.is_empty() {
        return vec![(b.to_vec(), 1)];
    }
    if b.is_empty() {
        return vec![(a.to_vec(), 1)];
    }
    let key = (a.to_vec(), b.to_vec());
    if let Some(hit) = SHUFFLE_MEMO.with(|m| m.borrow().get(&key).cloned()) {
        return hit;
    }
    let mut acc: HashMap<Vec<u32>, u64> = HashMap::new();
    let mut extend = |head: u32, tail: Vec<(Vec<u32>, u64)>| {
        for (rest, mult) in tail {
            let mut parts = Vec::with_capacity(rest.len() + 1);
            parts.push(head);
            parts.extend(rest);
            *acc.entry(parts).or_insert(0) += mult;
        }
    };
    extend(a[0], quasi_shuffle_raw(&a[1..], b));
    extend(b[0], quasi_shuffle_raw(a, &b[1..]));
    extend(a[0] + b[0], quasi_shuffle_raw(&a[1..], &b[1..]));
    let mut out: Vec<(Vec<u32>, u64)> = acc.into_iter().collect();
    out.sort();
    SHUFFLE_MEMO.with(|m| m.borrow_mut().insert(key, out.clone()));
    out
}

/// The stable expansion of `p^α · p^β` as a nonnegative-integer combination
/// of `p^δ` with `|δ| = |α| + |β|` and `ℓ(δ) ≤ ℓ(α) + ℓ(β)`.
///
/// For instance `p^1 · p^1 = p^2 + 2·p^{1,1}`, and `p^∅` is the unit.
pub fn quasi_shuffle<C: Scalar>(alpha: &Composition, beta: &Composition) -> QSym<C> {
    let mut out = QSym::zero();
    for (parts, mult) in quasi_shuffle_raw(alpha.parts(), beta.parts()) {
        out.add_term(
            Composition::new(parts),
            Poly::constant(C::from_u64(mult).expect("multiplicity fits scalar")),
        );
    }
    out
}

/// The even polynomial `𝔞(k) = Σ_{m=1}^{k} C(k+m−1, 2m−1) · x^{2m}`.
pub fn a_poly<C: Scalar>(k: u32) -> Poly<C> {
    assert!(k >= 1);
    let mut coeffs = vec![C::zero(); 2 * k as usize + 1];
    for m in 1..=k as usize {
        coeffs[2 * m] = binomial(C::from_usize(k as usize + m - 1).unwrap(), C::from_usize(2 * m - 1).unwrap());
    }
    Poly::from_coeffs(coeffs)
}

/// `𝔞(λ) = Π 𝔞(λ_i)`, with `𝔞(∅) = 1`.
pub fn a_poly_comp<C: Scalar>(lambda: &Composition) -> Poly<C> {
    lambda
        .parts()
        .iter()
        .fold(Poly::one(), |acc, &part| acc.mul_ref(&a_poly(part)))
}

/// The structure-constant polynomial `A_{λ,μ}`: the coefficient of `p^λ` in
/// `Σ_{γ ⊨ |λ|−|μ|, γ ≠ ∅} 𝔞(γ) · p^γ · p^μ`, and zero when `|λ| ≤ |μ|`.
pub fn a_entry<C: Scalar>(lambda: &Composition, mu: &Composition) -> Poly<C> {
    if lambda.size() <= mu.size() {
        return Poly::zero();
    }
    let d = lambda.size() - mu.size();
    let mut acc = Poly::zero();
    for gamma in enumerate_compositions(d) {
        let coeff = quasi_shuffle::<C>(&gamma, mu).coeff(lambda);
        if !coeff.is_zero() {
            acc = acc.add_ref(&coeff.mul_ref(&a_poly_comp(&gamma)));
        }
    }
    acc
}

/// The full structure-constant matrix for block `k`: rows and columns run
/// over all compositions of sizes `0..k` in order (dimension `2^{k−1}`).
/// The diagonal carries the empty-composition term of the defining sum
/// (`𝔞(∅)·p^∅·p^μ = p^μ`), so the matrix is unitriangular; the strictly
/// lower block-triangular part is [`a_entry`].
pub fn a_matrix<C: Scalar>(k: u32) -> LabeledMatrix<C> {
    assert!(k >= 1);
    let labels = compositions_up_to(k - 1);
    LabeledMatrix::from_fn(labels.clone(), labels, |lam, mu| {
        if lam == mu {
            Poly::one()
        } else {
            a_entry(lam, mu)
        }
    })
}
