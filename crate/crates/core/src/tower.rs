//! The recursive tower of transition matrices, block `k` at a time, and the
//! direct Hecke-algebra oracle it is validated against.
//!
//! For each block size `k` the goal is a pair of partition-indexed matrices
//! `M(k)`, `N(k)` with `M(k)·N(k) = I` over the ground ring: `M(k)` records
//! the coefficients of minimal-length class representatives in monomial
//! symmetric polynomials of Jucys–Murphy elements, and its entries do not
//! depend on the ambient rank. Two independent routes are implemented:
//!
//! * **direct**: evaluate `m_μ` at the Jucys–Murphy elements of rank `2k`
//!   and read off coefficients at the canonical increasing elements — fully
//!   specified, feasible through `k = 4`, and the production path;
//! * **tower**: the composition-indexed recursion through `Z`, `A`, `Ξ`,
//!   `Υ`, `K` and the symmetrization matrix `T`, which scales to any `k`.
//!
//! The recursion for the inverse side uses `K Υ K`, and the symmetrization
//! step re-indexes compositions of `k` by dropping the last part (an order
//! isomorphism onto compositions of size `< k`). The `T` matrix depends on a
//! companion map `λ ↦ λ̂` on compositions; the two candidate conventions are
//! implemented and the one that reproduces the direct matrices is selected
//! by [`MatrixStore::resolve_hat`] rather than assumed.

use std::collections::HashMap;
use std::sync::Mutex;

use rayon::prelude::*;

use crate::combinat::{compositions_up_to, enumerate_compositions, enumerate_partitions, Composition};
use crate::hecke::{eval_m_with, JmPowers};
use crate::matrix::LabeledMatrix;
use crate::perm::increasing_element;
use crate::poly::Poly;
use crate::scalar::Scalar;
use crate::{Error, Result};

/// Largest block for the direct oracle: `k = 4` works in rank 8.
pub const MAX_DIRECT_K: u32 = 4;
/// Largest block served by the production path (tower beyond the oracle).
pub const MAX_PRODUCTION_K: u32 = 5;

/// `Z(1) = (1)`; each step doubles: `Z(k+1) = [[Z(k), I], [0, I]]`,
/// indexed by compositions of size `< k+1`.
pub fn z_matrix<C: Scalar>(k: u32) -> LabeledMatrix<C> {
    assert!(k >= 1);
    if k == 1 {
        return LabeledMatrix::identity(vec![Composition::empty()]);
    }
    let prev = z_matrix::<C>(k - 1);
    let labels = compositions_up_to(k - 1);
    let half: Vec<Composition> = prev.row_labels().to_vec();
    let eye = LabeledMatrix::identity(half.clone());
    let zero = LabeledMatrix::zero(half.clone(), half);
    LabeledMatrix::block2(labels.clone(), labels, &prev, &eye, &zero, &eye)
}

fn diag2<C: Scalar>(m: &LabeledMatrix<C>, labels: Vec<Composition>) -> LabeledMatrix<C> {
    let half = m.row_labels().to_vec();
    let zero = LabeledMatrix::zero(half.clone(), half);
    LabeledMatrix::block2(labels.clone(), labels, m, &zero, &zero, m)
}

/// `Ξ(1) = (1)`; `Ξ(k+1) = diag(Ξ(k), Ξ(k)) · Z(k+1) · A(k+1)`.
pub fn xi_matrix<C: Scalar>(k: u32) -> LabeledMatrix<C> {
    assert!(k >= 1);
    if k == 1 {
        return LabeledMatrix::identity(vec![Composition::empty()]);
    }
    let prev = xi_matrix::<C>(k - 1);
    let labels = compositions_up_to(k - 1);
    diag2(&prev, labels)
        .mul_ref(&z_matrix(k))
        .mul_ref(&crate::qsym::a_matrix(k))
}

/// `Υ(1) = (1)`; `Υ(k+1) = Z(k+1) · A(k+1) · diag(Υ(k), Υ(k))`.
pub fn upsilon_matrix<C: Scalar>(k: u32) -> LabeledMatrix<C> {
    assert!(k >= 1);
    if k == 1 {
        return LabeledMatrix::identity(vec![Composition::empty()]);
    }
    let prev = upsilon_matrix::<C>(k - 1);
    let labels = compositions_up_to(k - 1);
    z_matrix(k)
        .mul_ref(&crate::qsym::a_matrix(k))
        .mul_ref(&diag2(&prev, labels))
}

/// `K(1) = (1)`; `K(k+1) = [[K(k), -K(k)], [0, -K(k)]]`. The base case is
/// pinned by the inverse identity `Ξ·(KΥK) = I`, which the tests check.
pub fn k_matrix<C: Scalar>(k: u32) -> LabeledMatrix<C> {
    assert!(k >= 1);
    if k == 1 {
        return LabeledMatrix::identity(vec![Composition::empty()]);
    }
    let prev = k_matrix::<C>(k - 1);
    let neg = prev.scale(&Poly::from_int(-1));
    let labels = compositions_up_to(k - 1);
    let half: Vec<Composition> = prev.row_labels().to_vec();
    let zero = LabeledMatrix::zero(half.clone(), half);
    LabeledMatrix::block2(labels.clone(), labels, &prev, &neg, &zero, &neg)
}

/// `Ξ` re-indexed by compositions of `k` through `λ ↦ λ'`.
pub fn x_matrix<C: Scalar>(k: u32) -> LabeledMatrix<C> {
    let labels = enumerate_compositions(k);
    xi_matrix::<C>(k).relabel(labels.clone(), labels)
}

/// `Υ` re-indexed by compositions of `k` through `λ ↦ λ'`.
pub fn y_matrix<C: Scalar>(k: u32) -> LabeledMatrix<C> {
    let labels = enumerate_compositions(k);
    upsilon_matrix::<C>(k).relabel(labels.clone(), labels)
}

/// Candidate conventions for the companion map `λ ↦ λ̂` in the
/// symmetrization matrix `T`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HatConvention {
    /// Sort the parts weakly decreasing: every composition maps straight to
    /// its underlying partition.
    SortDecreasing,
    /// Sort the parts weakly increasing.
    SortIncreasing,
}

pub const HAT_CANDIDATES: [HatConvention; 2] =
    [HatConvention::SortDecreasing, HatConvention::SortIncreasing];

impl HatConvention {
    pub fn hat(&self, lambda: &Composition) -> Composition {
        let mut parts = lambda.parts().to_vec();
        match self {
            HatConvention::SortDecreasing => parts.sort_unstable_by(|a, b| b.cmp(a)),
            HatConvention::SortIncreasing => parts.sort_unstable(),
        }
        Composition::new(parts)
    }
}

/// `T(k)` on compositions of `k`: entry 1 where `λ = μ` or `λ̂ = μ`.
pub fn t_matrix<C: Scalar>(k: u32, convention: HatConvention) -> LabeledMatrix<C> {
    let labels = enumerate_compositions(k);
    LabeledMatrix::from_fn(labels.clone(), labels, |lam, mu| {
        if lam == mu || &convention.hat(lam) == mu {
            Poly::one()
        } else {
            Poly::zero()
        }
    })
}

/// The tower route to `M(k)` and `N(k)`: conjugate the re-indexed matrices
/// by `T(k)` and keep the partition-labelled rows and columns.
pub fn m_n_tower<C: Scalar>(k: u32, convention: HatConvention) -> Result<(LabeledMatrix<C>, LabeledMatrix<C>)> {
    if k == 0 {
        let id = LabeledMatrix::identity(vec![Composition::empty()]);
        return Ok((id.clone(), id));
    }
    let labels = enumerate_compositions(k);
    let t = t_matrix::<C>(k, convention);
    let t_inv = t.invert_exact()?;
    let x = x_matrix::<C>(k);
    let y = y_matrix::<C>(k);
    let km = k_matrix::<C>(k).relabel(labels.clone(), labels);
    let m_full = t_inv.mul_ref(&x).mul_ref(&t);
    let n_full = t_inv.mul_ref(&km).mul_ref(&y).mul_ref(&km).mul_ref(&t);
    Ok((
        m_full.restrict(Composition::is_partition),
        n_full.restrict(Composition::is_partition),
    ))
}

/// The direct route: in rank `n`, the `(λ, μ)` entry is the coefficient of
/// the canonical increasing element of shape `λ` in `m_μ(L_1, …, L_n)`,
/// for partitions `λ, μ ⊢ k`. Any `n ≥ 2k` gives the same matrix.
pub fn m_matrix_direct_at_rank<C: Scalar>(k: u32, rank: usize) -> Result<LabeledMatrix<C>> {
    if rank > crate::perm::MAX_ENUM_RANK {
        return Err(Error::RankTooLarge {
            n: rank,
            max: crate::perm::MAX_ENUM_RANK,
        });
    }
    assert!(rank as u32 >= 2 * k, "rank {rank} too small for block {k}");
    let partitions = enumerate_partitions(k);
    let columns: Vec<Vec<Poly<C>>> = partitions
        .par_iter()
        .map(|mu| {
            let mut ctx = JmPowers::new(rank);
            let h = eval_m_with(&mut ctx, mu);
            partitions
                .iter()
                .map(|lam| h.coeff(&increasing_element(lam, rank).expect("2k fits the rank")))
                .collect()
        })
        .collect();
    Ok(LabeledMatrix::from_fn(partitions.clone(), partitions.clone(), |lam, mu| {
        let r = partitions.iter().position(|p| p == lam).unwrap();
        let c = partitions.iter().position(|p| p == mu).unwrap();
        columns[c][r].clone()
    }))
}

/// Direct route at the default rank `2k`. Guarded by [`MAX_DIRECT_K`].
pub fn m_matrix_direct<C: Scalar>(k: u32) -> Result<LabeledMatrix<C>> {
    if k == 0 {
        return Ok(LabeledMatrix::identity(vec![Composition::empty()]));
    }
    if k > MAX_DIRECT_K {
        return Err(Error::RankTooLarge {
            n: k as usize,
            max: MAX_DIRECT_K as usize,
        });
    }
    m_matrix_direct_at_rank(k, (2 * k) as usize)
}

/// Memoized access to the transition matrices, plus the resolved `T`-matrix
/// convention. Heavy direct evaluations run once per process.
pub struct MatrixStore<C: Scalar> {
    direct: Mutex<HashMap<(u32, usize), LabeledMatrix<C>>>,
    n_prod: Mutex<HashMap<u32, LabeledMatrix<C>>>,
    hat: Mutex<Option<(HatConvention, u32)>>,
}

impl<C: Scalar> Default for MatrixStore<C> {
    fn default() -> Self {
        Self::new()
    }
}

impl<C: Scalar> MatrixStore<C> {
    pub fn new() -> Self {
        MatrixStore {
            direct: Mutex::new(HashMap::new()),
            n_prod: Mutex::new(HashMap::new()),
            hat: Mutex::new(None),
        }
    }

    /// Seed a production `N(k)` (e.g. from a disk cache). The labels must be
    /// the partitions of `k` in order.
    pub fn seed_n_matrix(&self, k: u32, n: LabeledMatrix<C>) -> Result<()> {
        let expected = enumerate_partitions(k);
        if n.row_labels() != expected.as_slice() || n.col_labels() != expected.as_slice() {
            return Err(Error::InvalidArgument(format!("bad labels for N({k})")));
        }
        self.n_prod.lock().unwrap().insert(k, n);
        Ok(())
    }

    pub fn m_direct_at_rank(&self, k: u32, rank: usize) -> Result<LabeledMatrix<C>> {
        let mut cache = self.direct.lock().unwrap();
        if let Some(m) = cache.get(&(k, rank)) {
            return Ok(m.clone());
        }
        let m = if k == 0 {
            LabeledMatrix::identity(vec![Composition::empty()])
        } else {
            m_matrix_direct_at_rank(k, rank)?
        };
        cache.insert((k, rank), m.clone());
        Ok(m)
    }

    pub fn m_direct(&self, k: u32) -> Result<LabeledMatrix<C>> {
        if k == 0 {
            return self.m_direct_at_rank(0, 0);
        }
        if k > MAX_DIRECT_K {
            return Err(Error::RankTooLarge {
                n: k as usize,
                max: MAX_DIRECT_K as usize,
            });
        }
        self.m_direct_at_rank(k, (2 * k) as usize)
    }

    /// Pick the hat convention under which the tower reproduces the direct
    /// matrices for every block `2..=max_k`, and cache the outcome.
    pub fn resolve_hat(&self, max_k: u32) -> Result<HatConvention> {
        assert!((2..=MAX_DIRECT_K).contains(&max_k));
        if let Some((conv, validated)) = *self.hat.lock().unwrap() {
            if validated >= max_k {
                return Ok(conv);
            }
        }
        let mut failures = Vec::new();
        'candidate: for conv in HAT_CANDIDATES {
            for k in 2..=max_k {
                let direct = self.m_direct(k)?;
                let pair = match m_n_tower::<C>(k, conv) {
                    Ok(p) => p,
                    Err(e) => {
                        failures.push(format!("{conv:?} at k={k}: {e}"));
                        continue 'candidate;
                    }
                };
                if pair.0 != direct {
                    failures.push(format!("{conv:?} at k={k}: tower M differs from direct M"));
                    continue 'candidate;
                }
                if !pair.0.mul_ref(&pair.1).is_identity() {
                    failures.push(format!("{conv:?} at k={k}: tower M·N is not the identity"));
                    continue 'candidate;
                }
            }
            *self.hat.lock().unwrap() = Some((conv, max_k));
            return Ok(conv);
        }
        Err(Error::UnresolvedHatConvention {
            report: failures.join("; "),
        })
    }

    /// Production `M(k)`: direct through [`MAX_DIRECT_K`], tower (with the
    /// resolved convention) for `k = 5`.
    pub fn m_production(&self, k: u32) -> Result<LabeledMatrix<C>> {
        if k <= MAX_DIRECT_K {
            return self.m_direct(k);
        }
        if k > MAX_PRODUCTION_K {
            return Err(Error::RankTooLarge {
                n: k as usize,
                max: MAX_PRODUCTION_K as usize,
            });
        }
        let conv = self.resolve_hat(MAX_DIRECT_K)?;
        Ok(m_n_tower::<C>(k, conv)?.0)
    }

    /// Production `N(k) = M(k)⁻¹`, exact over the ring.
    pub fn n_production(&self, k: u32) -> Result<LabeledMatrix<C>> {
        if let Some(n) = self.n_prod.lock().unwrap().get(&k) {
            return Ok(n.clone());
        }
        let n = if k <= MAX_DIRECT_K {
            self.m_direct(k)?.invert_exact()?
        } else {
            let conv = self.resolve_hat(MAX_DIRECT_K)?;
            let (m, n) = m_n_tower::<C>(k, conv)?;
            if !m.mul_ref(&n).is_identity() {
                return Err(Error::InvalidArgument(format!("tower pair at k={k} is not inverse")));
            }
            n
        };
        self.n_prod.lock().unwrap().insert(k, n.clone());
        Ok(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comp;
    use crate::Int;

    type M = LabeledMatrix<Int>;
    type P = Poly<Int>;

    fn printed_m2() -> M {
        M::from_rows(
            vec![comp![2], comp![1, 1]],
            vec![comp![2], comp![1, 1]],
            vec![
                vec![P::from_ints(&[1, 0, 1]), P::one()],
                vec![P::from_ints(&[0, 0, 1]), P::one()],
            ],
        )
    }

    fn printed_n2() -> M {
        M::from_rows(
            vec![comp![2], comp![1, 1]],
            vec![comp![2], comp![1, 1]],
            vec![
                vec![P::one(), P::from_ints(&[-1])],
                vec![P::from_ints(&[0, 0, -1]), P::from_ints(&[1, 0, 1])],
            ],
        )
    }

    fn printed_m3() -> M {
        let labels = vec![comp![3], comp![2, 1], comp![1, 1, 1]];
        M::from_rows(
            labels.clone(),
            labels,
            vec![
                vec![
                    P::from_ints(&[1, 0, 5, 0, 5, 0, 1]),
                    P::from_ints(&[3, 0, 5, 0, 1]),
                    P::one(),
                ],
                vec![
                    P::from_ints(&[0, 0, 2, 0, 4, 0, 1]),
                    P::from_ints(&[1, 0, 4, 0, 1]),
                    P::one(),
                ],
                vec![
                    P::from_ints(&[0, 0, 0, 0, 3, 0, 1]),
                    P::from_ints(&[0, 0, 3, 0, 1]),
                    P::one(),
                ],
            ],
        )
    }

    #[test]
    fn z_matrix_shapes() {
        let z1 = z_matrix::<Int>(1);
        assert!(z1.is_identity());
        let z2 = z_matrix::<Int>(2);
        assert_eq!(z2.entry(0, 0), &P::one());
        assert_eq!(z2.entry(0, 1), &P::one());
        assert_eq!(z2.entry(1, 0), &P::zero());
        assert_eq!(z2.entry(1, 1), &P::one());
        let z3 = z_matrix::<Int>(3);
        assert_eq!(z3.nrows(), 4);
        for r in 0..2 {
            for c in 0..2 {
                assert_eq!(z3.entry(r, c), z2.entry(r, c));
            }
        }
    }

    #[test]
    fn xi_and_k_upsilon_k_are_inverse() {
        for k in 1..=5u32 {
            let xi = xi_matrix::<Int>(k);
            let km = k_matrix::<Int>(k);
            let product = xi.mul_ref(&km.mul_ref(&upsilon_matrix(k)).mul_ref(&km));
            assert!(product.is_identity(), "k = {k}");
        }
    }

    #[test]
    fn xi2_equals_printed_m2_entries() {
        // every composition of 2 is a partition, so X(2) is already M(2)
        let x = x_matrix::<Int>(2);
        assert_eq!(x, printed_m2());
    }

    #[test]
    fn tower_reproduces_printed_k2_k3() {
        let (m2, n2) = m_n_tower::<Int>(2, HatConvention::SortDecreasing).unwrap();
        assert_eq!(m2, printed_m2());
        assert_eq!(n2, printed_n2());
        let (m3, n3) = m_n_tower::<Int>(3, HatConvention::SortDecreasing).unwrap();
        assert_eq!(m3, printed_m3());
        assert!(m3.mul_ref(&n3).is_identity());
    }

    #[test]
    fn direct_reproduces_printed_k2_k3() {
        assert_eq!(m_matrix_direct::<Int>(2).unwrap(), printed_m2());
        assert_eq!(m_matrix_direct::<Int>(3).unwrap(), printed_m3());
    }

    #[test]
    fn direct_base_cases() {
        let m0 = m_matrix_direct::<Int>(0).unwrap();
        assert!(m0.is_identity());
        assert_eq!(m0.row_labels(), &[Composition::empty()]);
        let m1 = m_matrix_direct::<Int>(1).unwrap();
        assert!(m1.is_identity());
        assert_eq!(m1.row_labels(), &[comp![1]]);
    }

    #[test]
    fn store_resolves_sort_decreasing() {
        let store = MatrixStore::<Int>::new();
        assert_eq!(store.resolve_hat(3).unwrap(), HatConvention::SortDecreasing);
        // cached answer is reused
        assert_eq!(store.resolve_hat(2).unwrap(), HatConvention::SortDecreasing);
    }

    #[test]
    fn sort_increasing_fails_validation() {
        let direct = m_matrix_direct::<Int>(3).unwrap();
        let (m3, _) = m_n_tower::<Int>(3, HatConvention::SortIncreasing).unwrap();
        assert_ne!(m3, direct);
    }

    #[test]
    fn n_production_matches_printed_n2() {
        let store = MatrixStore::<Int>::new();
        assert_eq!(store.n_production(2).unwrap(), printed_n2());
        assert!(store.m_direct(3).unwrap().mul_ref(&store.n_production(3).unwrap()).is_identity());
    }

    #[test]
    fn direct_k_guard() {
        assert!(matches!(m_matrix_direct::<Int>(5), Err(Error::RankTooLarge { .. })));
    }

    #[test]
    fn specialization_matches_plain_group_algebra() {
        // recompute the k = 2 entries at x = 0 with no Hecke machinery at
        // all: multiply specialized Jucys-Murphy elements in the group
        // algebra of rank 4 and read off the same coefficients
        use crate::hecke::GroupAlgebra;
        use crate::perm::{increasing_element, Permutation};
        let n = 4usize;
        let ls: Vec<GroupAlgebra<Int>> = (1..=n)
            .map(|i| {
                let mut l = GroupAlgebra::<Int>::zero(n);
                for j in 1..i {
                    l.add_term(Permutation::transposition(j, i, n), Int::from(1));
                }
                l
            })
            .collect();
        let mut m2 = GroupAlgebra::<Int>::zero(n);
        let mut m11 = GroupAlgebra::<Int>::zero(n);
        for a in 0..n {
            m2 = m2.add_ref(&ls[a].mul_ref(&ls[a]));
            for b in a + 1..n {
                m11 = m11.add_ref(&ls[a].mul_ref(&ls[b]));
            }
        }
        let direct = m_matrix_direct::<Int>(2).unwrap();
        for (row, lam) in [comp![2], comp![1, 1]].into_iter().enumerate() {
            let w = increasing_element(&lam, n).unwrap();
            assert_eq!(direct.entry(row, 0).specialize0(), m2.coeff(&w));
            assert_eq!(direct.entry(row, 1).specialize0(), m11.coeff(&w));
        }
    }
}
