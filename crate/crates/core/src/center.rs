//! Integral bases for the centre of the Hecke algebra.
//!
//! For a partition `λ` realizable in rank `n` (`|λ| + ℓ(λ) ≤ n`), the basis
//! element is the combination of monomial symmetric polynomials of
//! Jucys–Murphy elements whose coefficients are read from column `λ` of
//! `N(|λ|)`. These elements form an integral basis of the centre, one per
//! partition of `n`, and each equals the class element of the partition
//! `λ̄ = λ.bar(n)` plus combinations of class elements with strictly shorter
//! minimal terms. Inverting that unitriangular transition recovers the
//! class-element basis itself, which is then certified against its defining
//! characterization (class-sum specialization, minimal coefficients 0/1).

use serde_json::{json, Map, Value};

use crate::combinat::{enumerate_partitions, Composition};
use crate::hecke::{eval_m_with, GroupAlgebra, HeckeElement, JmPowers};
use crate::matrix::LabeledMatrix;
use crate::perm::{increasing_element, minimal_class_elements};
use crate::poly::Poly;
use crate::scalar::Scalar;
use crate::tower::MatrixStore;
use crate::{Error, Result};

/// Largest rank for full basis construction (`N(5)` is the deepest block).
pub const MAX_BASIS_RANK: usize = 6;

/// A central element together with its expansion in the monomials
/// `m_μ(L_1, …, L_n)`; the expansion re-evaluates to the stored value.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CentralElement<C: Scalar> {
    label: Composition,
    rank: usize,
    value: HeckeElement<C>,
    monomial_coeffs: Vec<(Composition, Poly<C>)>,
}

impl<C: Scalar> CentralElement<C> {
    /// Build from a monomial expansion, evaluating the value in rank `n`.
    pub fn from_monomials(
        label: Composition,
        rank: usize,
        coeffs: Vec<(Composition, Poly<C>)>,
    ) -> Self {
        let mut ctx = JmPowers::new(rank);
        let mut value = HeckeElement::zero(rank);
        let mut kept: Vec<(Composition, Poly<C>)> = Vec::new();
        for (mu, c) in coeffs {
            if c.is_zero() {
                continue;
            }
            value = value.add_ref(&eval_m_with(&mut ctx, &mu).scale(&c));
            kept.push((mu, c));
        }
        kept.sort_by(|a, b| a.0.cmp(&b.0));
        CentralElement {
            label,
            rank,
            value,
            monomial_coeffs: kept,
        }
    }

    pub fn label(&self) -> &Composition {
        &self.label
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn value(&self) -> &HeckeElement<C> {
        &self.value
    }

    /// Nonzero coefficients of `m_μ`, in composition order.
    pub fn monomial_coeffs(&self) -> &[(Composition, Poly<C>)] {
        &self.monomial_coeffs
    }
}

/// Partitions `λ` with `|λ| + ℓ(λ) ≤ n`, in composition order: the index
/// set of the basis. There are exactly as many as partitions of `n`.
pub fn basis_index(n: usize) -> Vec<Composition> {
    let mut out = Vec::new();
    for k in 0..n as u32 {
        for lam in enumerate_partitions(k) {
            if lam.size() as usize + lam.len() <= n {
                out.push(lam);
            }
        }
    }
    out.sort();
    out
}

/// Partitions of `n` ordered by the length of the shortest elements in
/// their class, i.e. by the composition order on `μ − 1`. This is the row
/// order of every class-element transition matrix here.
pub fn gamma_order(n: usize) -> Vec<Composition> {
    let mut out = enumerate_partitions(n as u32);
    out.sort_by_key(|a| a.minus_one());
    out
}

/// The basis element for `λ`: `Σ_{μ ⊢ |λ|} N(|λ|)_{μ,λ} · m_μ`, evaluated in
/// rank `n`. Requires `|λ| + ℓ(λ) ≤ n`.
pub fn script_m<C: Scalar>(
    store: &MatrixStore<C>,
    lambda: &Composition,
    n: usize,
) -> Result<CentralElement<C>> {
    assert!(lambda.is_partition(), "{lambda} is not a partition");
    if lambda.size() as usize + lambda.len() > n {
        return Err(Error::ShapeNotRealizable {
            lambda: lambda.clone(),
            n: n as u32,
        });
    }
    let k = lambda.size();
    let n_matrix = store.n_production(k)?;
    let col = n_matrix
        .col_index(lambda)
        .expect("partition labels cover the column");
    let coeffs: Vec<(Composition, Poly<C>)> = n_matrix
        .row_labels()
        .iter()
        .enumerate()
        .map(|(r, mu)| (mu.clone(), n_matrix.entry(r, col).clone()))
        .collect();
    Ok(CentralElement::from_monomials(lambda.clone(), n, coeffs))
}

/// The full integral basis of the centre in rank `n`, ordered by the index
/// partition. Guarded at [`MAX_BASIS_RANK`].
pub fn basis<C: Scalar>(store: &MatrixStore<C>, n: usize) -> Result<Vec<CentralElement<C>>> {
    if n > MAX_BASIS_RANK {
        return Err(Error::RankTooLarge {
            n,
            max: MAX_BASIS_RANK,
        });
    }
    basis_index(n)
        .into_iter()
        .map(|lam| script_m(store, &lam, n))
        .collect()
}

/// Expand a central element over the class-element basis: the coefficient of
/// the class element for `μ ⊢ n` is the stored coefficient at an increasing
/// element of shape `μ − 1`. Returned in [`gamma_order`].
pub fn expand_in_gamma<C: Scalar>(h: &HeckeElement<C>, n: usize) -> Vec<(Composition, Poly<C>)> {
    gamma_order(n)
        .into_iter()
        .map(|mu| {
            let w = increasing_element(&mu.minus_one(), n).expect("mu - 1 always fits");
            let c = h.coeff(&w);
            (mu, c)
        })
        .collect()
}

/// Transition matrix from a list of central elements to the class-element
/// basis: rows are partitions of `n` in [`gamma_order`], columns follow the
/// given elements.
pub fn gamma_transition<C: Scalar>(
    elements: &[CentralElement<C>],
    n: usize,
) -> LabeledMatrix<C> {
    let rows = gamma_order(n);
    let cols: Vec<Composition> = elements.iter().map(|e| e.label.clone()).collect();
    let expansions: Vec<Vec<Poly<C>>> = elements
        .iter()
        .map(|e| expand_in_gamma(&e.value, n).into_iter().map(|(_, c)| c).collect())
        .collect();
    LabeledMatrix::from_rows(
        rows.clone(),
        cols,
        (0..rows.len())
            .map(|r| expansions.iter().map(|col| col[r].clone()).collect())
            .collect(),
    )
}

/// Recover the class-element basis by exact triangular inversion from the
/// monomial-combination basis; one element per `μ ⊢ n`, in [`gamma_order`].
/// Each recovered element passes [`verify_gamma`].
pub fn gamma_basis<C: Scalar>(store: &MatrixStore<C>, n: usize) -> Result<Vec<CentralElement<C>>> {
    let b = basis(store, n)?;
    let c = gamma_transition(&b, n);
    let c_inv = c.invert_exact()?;
    let targets = gamma_order(n);
    let mut out = Vec::with_capacity(targets.len());
    for nu in targets {
        let col = c_inv.col_index(&nu).expect("inverse columns carry class labels");
        let mut value = HeckeElement::zero(n);
        let mut coeffs: Vec<(Composition, Poly<C>)> = Vec::new();
        for (r, lam) in c_inv.row_labels().iter().enumerate() {
            let w = c_inv.entry(r, col);
            if w.is_zero() {
                continue;
            }
            let elem = b.iter().find(|e| &e.label == lam).expect("basis covers labels");
            value = value.add_ref(&elem.value.scale(w));
            for (mu, c0) in &elem.monomial_coeffs {
                let add = c0.mul_ref(w);
                match coeffs.iter_mut().find(|(m, _)| m == mu) {
                    Some((_, acc)) => *acc = acc.add_ref(&add),
                    None => coeffs.push((mu.clone(), add)),
                }
            }
        }
        coeffs.retain(|(_, c0)| !c0.is_zero());
        coeffs.sort_by(|a, b| a.0.cmp(&b.0));
        out.push(CentralElement {
            label: nu,
            rank: n,
            value,
            monomial_coeffs: coeffs,
        });
    }
    Ok(out)
}

/// The defining characterization of a class element: at `x = 0` it is the
/// class sum of `C_μ`, and the only minimal-length class representatives it
/// contains are those of `C_μ` itself, each with coefficient exactly 1.
pub fn verify_gamma<C: Scalar>(g: &CentralElement<C>, mu: &Composition) -> Result<bool> {
    let n = g.rank;
    if g.value.specialize() != GroupAlgebra::class_sum(mu, n)? {
        return Ok(false);
    }
    for nu in enumerate_partitions(n as u32) {
        let expected = if &nu == mu { Poly::one() } else { Poly::zero() };
        for w in minimal_class_elements(&nu, n)? {
            if g.value.coeff(&w) != expected {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The rank-3 transition matrix of `{m_∅, m_1, m_2}` over the class-element
/// basis. Its determinant `1 + x²` is not a unit, so this monomial set spans
/// integrally at `x = 0` but not over the full ring.
pub fn counterexample_matrix<C: Scalar>() -> LabeledMatrix<C> {
    let cols = vec![Composition::empty(), crate::comp![1], crate::comp![2]];
    let rows = gamma_order(3);
    let mut ctx = JmPowers::new(3);
    let columns: Vec<Vec<Poly<C>>> = cols
        .iter()
        .map(|mu| {
            let h = eval_m_with(&mut ctx, mu);
            expand_in_gamma(&h, 3).into_iter().map(|(_, c)| c).collect()
        })
        .collect();
    LabeledMatrix::from_rows(
        rows.clone(),
        cols,
        (0..rows.len())
            .map(|r| columns.iter().map(|col| col[r].clone()).collect())
            .collect(),
    )
}

/// Does the given family of monomials `m_λ(L)` form an integral basis of the
/// centre in rank `n`? True exactly when the transition matrix to the
/// class-element basis has unit determinant. The list must contain one
/// monomial per partition of `n`.
pub fn check_monomial_set<C: Scalar>(set: &[Composition], n: usize) -> Result<bool> {
    let expected = enumerate_partitions(n as u32).len();
    if set.len() != expected {
        return Err(Error::InvalidArgument(format!(
            "need exactly {expected} monomials for rank {n}, got {}",
            set.len()
        )));
    }
    for lam in set {
        if !lam.is_partition() {
            return Err(Error::InvalidArgument(format!("{lam} is not a partition")));
        }
    }
    let rows = gamma_order(n);
    let mut ctx = JmPowers::new(n);
    let columns: Vec<Vec<Poly<C>>> = set
        .iter()
        .map(|mu| {
            let h = eval_m_with(&mut ctx, mu);
            expand_in_gamma(&h, n).into_iter().map(|(_, c)| c).collect()
        })
        .collect();
    let matrix = LabeledMatrix::from_rows(
        rows.clone(),
        set.to_vec(),
        (0..rows.len())
            .map(|r| columns.iter().map(|col| col[r].clone()).collect())
            .collect(),
    );
    Ok(matrix.det().is_unit())
}

fn coeffs_to_map<C: Scalar>(coeffs: &[(Composition, Poly<C>)]) -> Value {
    let mut map = Map::new();
    for (mu, c) in coeffs {
        map.insert(mu.key(), serde_json::to_value(c).expect("poly serializes"));
    }
    Value::Object(map)
}

/// JSON rendering of the basis: one record per element with the monomial
/// and class-element expansions.
pub fn basis_json<C: Scalar>(store: &MatrixStore<C>, n: usize) -> Result<Value> {
    let elements = basis(store, n)?;
    let records: Vec<Value> = elements
        .iter()
        .map(|e| {
            let gamma: Vec<(Composition, Poly<C>)> = expand_in_gamma(&e.value, n)
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .collect();
            json!({
                "lambda": e.label,
                "monomial_coeffs": coeffs_to_map(&e.monomial_coeffs),
                "gamma_coeffs": coeffs_to_map(&gamma),
            })
        })
        .collect();
    Ok(Value::Array(records))
}

/// Text rendering of a central element as a combination of monomials.
pub fn render_monomial_combination<C: Scalar>(e: &CentralElement<C>) -> String {
    if e.monomial_coeffs.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (mu, c)) in e.monomial_coeffs.iter().enumerate() {
        if k > 0 {
            out.push_str(" + ");
        }
        if c.is_one() {
            out.push_str(&format!("m{mu}"));
        } else {
            out.push_str(&format!("({c})*m{mu}"));
        }
    }
    out
}
