//! The complete rank-3 analysis: coefficients of class sums in monomial
//! symmetric polynomials of Jucys–Murphy elements, their closed forms,
//! relations and recurrences, and the classification of monomial bases.
//!
//! In rank 3 only two Jucys–Murphy elements are nonzero, so every monomial
//! `m_μ` with more than two parts vanishes and the whole story happens in
//! two variables. Columns are computed along two independent routes — plain
//! group-algebra arithmetic in the specialized algebra, and the generic
//! Hecke evaluation specialized at `x = 0` — and the two must agree.
//!
//! The punchline of the classification: exactly four monomial families are
//! integral bases of the centre of the specialized algebra, and exactly one
//! of them survives over the full ground ring.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_traits::pow::pow;
use serde_json::{json, Value};

use crate::combinat::Composition;
use crate::center::{expand_in_gamma, gamma_order};
use crate::hecke::{eval_m_with, JmPowers};
use crate::matrix::LabeledMatrix;
use crate::perm::Permutation;
use crate::poly::{scalar_to_json, Poly};
use crate::scalar::Scalar;

/// Coefficients of the three class sums in one monomial column, in the order
/// of growing minimal length: identity class, transpositions, 3-cycles.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct S3Coefficients<C: Scalar> {
    pub gamma111: C,
    pub gamma21: C,
    pub gamma3: C,
}

impl<C: Scalar> S3Coefficients<C> {
    pub fn new(gamma111: C, gamma21: C, gamma3: C) -> Self {
        S3Coefficients {
            gamma111,
            gamma21,
            gamma3,
        }
    }

    fn from_ints(a: i64, b: i64, c: i64) -> Self {
        S3Coefficients::new(C::from_int(a), C::from_int(b), C::from_int(c))
    }
}

// Fixed element order of the rank-3 group: e, s1, s2, s1s2, s2s1, s1s2s1.
// The class-sum coefficients live at indices 0, 1 and 3.
fn s3_table() -> &'static ([Permutation; 6], [[u8; 6]; 6]) {
    static TABLE: OnceLock<([Permutation; 6], [[u8; 6]; 6])> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mk = |im: [u8; 3]| Permutation::from_images(im.to_vec()).unwrap();
        let elems = [
            mk([1, 2, 3]),
            mk([2, 1, 3]),
            mk([1, 3, 2]),
            mk([2, 3, 1]),
            mk([3, 1, 2]),
            mk([3, 2, 1]),
        ];
        let index = |p: &Permutation| elems.iter().position(|e| e == p).unwrap() as u8;
        let mut mul = [[0u8; 6]; 6];
        for (i, a) in elems.iter().enumerate() {
            for (j, b) in elems.iter().enumerate() {
                mul[i][j] = index(&a.compose(b));
            }
        }
        (elems, mul)
    })
}

// An element of the specialized rank-3 group algebra.
fn ga_mul<C: Scalar>(a: &[C; 6], b: &[C; 6]) -> [C; 6] {
    let (_, mul) = s3_table();
    let mut out: [C; 6] = std::array::from_fn(|_| C::zero());
    for i in 0..6 {
        if a[i].is_zero() {
            continue;
        }
        for j in 0..6 {
            if b[j].is_zero() {
                continue;
            }
            let k = mul[i][j] as usize;
            out[k] = out[k].clone() + a[i].clone() * b[j].clone();
        }
    }
    out
}

fn ga_pow<C: Scalar>(base: &[C; 6], e: u32) -> [C; 6] {
    let mut out: [C; 6] = std::array::from_fn(|i| if i == 0 { C::one() } else { C::zero() });
    for _ in 0..e {
        out = ga_mul(&out, base);
    }
    out
}

/// Column of the class-sum coefficient matrix for `m_μ`, computed by plain
/// group-algebra arithmetic in the two nonzero Jucys–Murphy elements.
/// Monomials with three or more parts give the zero column.
pub fn c_column<C: Scalar>(mu: &Composition) -> S3Coefficients<C> {
    assert!(mu.is_partition(), "{mu} is not a partition");
    if mu.len() >= 3 {
        return S3Coefficients::from_ints(0, 0, 0);
    }
    if mu.is_empty() {
        return S3Coefficients::from_ints(1, 0, 0);
    }
    let x: [C; 6] = std::array::from_fn(|i| if i == 1 { C::one() } else { C::zero() });
    let y: [C; 6] = std::array::from_fn(|i| if i == 2 || i == 5 { C::one() } else { C::zero() });
    let v: [C; 6] = if mu.len() == 1 {
        let a = mu.parts()[0];
        let (xa, ya) = (ga_pow(&x, a), ga_pow(&y, a));
        std::array::from_fn(|i| xa[i].clone() + ya[i].clone())
    } else {
        let (a, b) = (mu.parts()[0], mu.parts()[1]);
        if a == b {
            ga_mul(&ga_pow(&x, a), &ga_pow(&y, a))
        } else {
            let first = ga_mul(&ga_pow(&x, a), &ga_pow(&y, b));
            let second = ga_mul(&ga_pow(&x, b), &ga_pow(&y, a));
            std::array::from_fn(|i| first[i].clone() + second[i].clone())
        }
    };
    S3Coefficients::new(v[0].clone(), v[1].clone(), v[3].clone())
}

/// The same column through the generic Hecke machinery, specialized at
/// `x = 0`. Must agree with [`c_column`]; the verification suite checks it.
pub fn c_column_hecke<C: Scalar>(mu: &Composition) -> S3Coefficients<C> {
    let h = crate::hecke::eval_m::<C>(mu, 3).specialize();
    let (elems, _) = s3_table();
    S3Coefficients::new(
        h.coeff(&elems[0]),
        h.coeff(&elems[1]),
        h.coeff(&elems[3]),
    )
}

fn exact_div<C: Scalar>(a: C, d: i64) -> C {
    let (q, r) = a.div_rem(&C::from_int(d));
    assert!(r.is_zero(), "closed form is not integral");
    q
}

fn pow2<C: Scalar>(e: u32) -> C {
    pow(C::from_int(2), e as usize)
}

fn sign<C: Scalar>(e: u32) -> C {
    if e.is_multiple_of(2) {
        C::one()
    } else {
        -C::one()
    }
}

/// Closed forms for the single-row column `m_i`, `i ≥ 1`.
pub fn closed_mi<C: Scalar>(i: u32) -> S3Coefficients<C> {
    assert!(i >= 1);
    let even = C::one() + sign::<C>(i);
    let odd = C::one() - sign::<C>(i);
    S3Coefficients::new(
        exact_div(even.clone() * (pow2::<C>(i) + C::from_int(5)), 6),
        exact_div(odd * (pow2::<C>(i) + C::one()), 6),
        exact_div(even * (pow2::<C>(i) - C::one()), 6),
    )
}

/// Closed forms for the square column `m_{i,i}`, `i ≥ 1`.
pub fn closed_mii<C: Scalar>(i: u32) -> S3Coefficients<C> {
    assert!(i >= 1);
    S3Coefficients::new(
        exact_div(pow2::<C>(i) + C::from_int(2) * sign::<C>(i), 3),
        C::zero(),
        exact_div(pow2::<C>(i) - sign::<C>(i), 3),
    )
}

/// Closed forms for the column of `m_{i+j,i}`, `i, j ≥ 1`.
pub fn closed_mij<C: Scalar>(i: u32, j: u32) -> S3Coefficients<C> {
    assert!(i >= 1 && j >= 1);
    let even = C::one() + sign::<C>(j);
    let odd = C::one() - sign::<C>(j);
    let s = pow2::<C>(i + j) + pow2::<C>(i);
    S3Coefficients::new(
        exact_div(even.clone() * (s.clone() + C::from_int(4) * sign::<C>(i)), 6),
        exact_div(odd * s.clone(), 6),
        exact_div(even * (s - C::from_int(2) * sign::<C>(i)), 6),
    )
}

/// Closed-form dispatch for any column with at most two parts.
pub fn closed_column<C: Scalar>(mu: &Composition) -> S3Coefficients<C> {
    match mu.parts() {
        [] => S3Coefficients::from_ints(1, 0, 0),
        [i] => closed_mi(*i),
        [a, b] if a == b => closed_mii(*a),
        [a, b] => closed_mij(*b, *a - *b),
        _ => S3Coefficients::from_ints(0, 0, 0),
    }
}

/// Alternating-block vanishing: entries whose class has minimal length of
/// the opposite parity to `|μ|` are zero, for all `|μ| ≤ bound`.
pub fn check_parity<C: Scalar>(bound: u32) -> bool {
    columns_up_to(bound).into_iter().all(|mu| {
        let col = c_column::<C>(&mu);
        if mu.size() % 2 == 0 {
            col.gamma21.is_zero()
        } else {
            col.gamma111.is_zero() && col.gamma3.is_zero()
        }
    })
}

// Symmetric polynomials in two variables on the monomial basis, used to
// check the product relations symbolically.
#[derive(Clone, PartialEq, Eq, Debug)]
struct Sym2<C: Scalar> {
    terms: BTreeMap<(u32, u32), C>, // keys (a, b) with a >= b >= 0
}

impl<C: Scalar> Sym2<C> {
    fn basis(a: u32, b: u32) -> Self {
        assert!(a >= b);
        let mut terms = BTreeMap::new();
        terms.insert((a, b), C::one());
        Sym2 { terms }
    }

    fn mul(&self, rhs: &Self) -> Self {
        let mut mono: BTreeMap<(u32, u32), C> = BTreeMap::new();
        let mut add = |k: (u32, u32), v: C| {
            let e = mono.entry(k).or_insert_with(C::zero);
            *e = e.clone() + v;
        };
        let orbit = |&(a, b): &(u32, u32)| -> Vec<(u32, u32)> {
            if a == b {
                vec![(a, a)]
            } else {
                vec![(a, b), (b, a)]
            }
        };
        for (ka, ca) in &self.terms {
            for (kb, cb) in &rhs.terms {
                for (xa, ya) in orbit(ka) {
                    for (xb, yb) in orbit(kb) {
                        add((xa + xb, ya + yb), ca.clone() * cb.clone());
                    }
                }
            }
        }
        // collapse monomials back onto orbit representatives
        let mut terms: BTreeMap<(u32, u32), C> = BTreeMap::new();
        for ((p, q), c) in mono {
            if c.is_zero() {
                continue;
            }
            if p >= q {
                let e = terms.entry((p, q)).or_insert_with(C::zero);
                *e = e.clone() + c;
                if e.is_zero() {
                    terms.remove(&(p, q));
                }
            }
        }
        Sym2 { terms }
    }

    fn sub(&self, rhs: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (k, v) in &rhs.terms {
            let e = terms.entry(*k).or_insert_with(C::zero);
            *e = e.clone() - v.clone();
            if e.is_zero() {
                terms.remove(k);
            }
        }
        Sym2 { terms }
    }
}

/// Product relations among two-variable monomials, verified symbolically:
/// `m_i = m_2·m_{i−2} − m_{2,2}·m_{i−4}` (i ≥ 5), `m_{i,i} = m_{1,1}·m_{i−1,i−1}`
/// (i ≥ 2), and `m_{i+j,i} = m_{i,i}·m_j`.
pub fn check_relations<C: Scalar>(bound: u32) -> bool {
    assert!(bound >= 8);
    let m = Sym2::<C>::basis;
    for i in 5..=bound {
        let lhs = m(i, 0);
        let rhs = m(2, 0).mul(&m(i - 2, 0)).sub(&m(2, 2).mul(&m(i - 4, 0)));
        if lhs != rhs {
            return false;
        }
    }
    for i in 2..=bound / 2 {
        if m(i, i) != m(1, 1).mul(&m(i - 1, i - 1)) {
            return false;
        }
    }
    for i in 1..=bound {
        for j in 1..=bound.saturating_sub(2 * i) {
            if m(i + j, i) != m(i, i).mul(&m(j, 0)) {
                return false;
            }
        }
    }
    true
}

/// Column recurrences in the centre: `m_i = 5m_{i−2} − 4m_{i−4}` (i ≥ 5),
/// `m_{i,i} = m_{i−1,i−1} + 2m_{i−2,i−2}` (i ≥ 3), and
/// `m_{i+j,i} = 5m_{i+j−2,i} − 4m_{i+j−4,i}` (j ≥ 5), verified on the
/// class-sum coefficient vectors.
pub fn check_recurrences<C: Scalar>(bound: u32) -> bool {
    assert!(bound >= 8);
    let col = |a: u32, b: u32| -> [C; 3] {
        let c = if b == 0 {
            c_column::<C>(&Composition::new(vec![a]))
        } else {
            c_column::<C>(&Composition::new(vec![a, b]))
        };
        [c.gamma111, c.gamma21, c.gamma3]
    };
    let lin = |p: &[C; 3], q: &[C; 3], cp: i64, cq: i64| -> [C; 3] {
        std::array::from_fn(|t| C::from_int(cp) * p[t].clone() + C::from_int(cq) * q[t].clone())
    };
    for i in 5..=bound {
        if col(i, 0) != lin(&col(i - 2, 0), &col(i - 4, 0), 5, -4) {
            return false;
        }
    }
    for i in 3..=bound / 2 {
        if col(i, i) != lin(&col(i - 1, i - 1), &col(i - 2, i - 2), 1, 2) {
            return false;
        }
    }
    for i in 1..=bound {
        for j in 5..=bound.saturating_sub(2 * i) {
            if col(i + j, i) != lin(&col(i + j - 2, i), &col(i + j - 4, i), 5, -4) {
                return false;
            }
        }
    }
    true
}

/// Determinant of the 2×2 coefficient matrix of `{m_{2j}, m_{i,i}}` on the
/// identity-class and 3-cycle rows: `((−1)^{i+1}(4^j + 1) + 2^{i+1}) / 3`.
/// Integral for all `i, j ≥ 1`; equals `±1` only at `(i, j) = (2, 1)`.
pub fn spanning_det<C: Scalar>(i: u32, j: u32) -> C {
    assert!(i >= 1 && j >= 1);
    let four_j = pow(C::from_int(4), j as usize);
    exact_div(-sign::<C>(i) * (four_j + C::one()) + pow2::<C>(i + 1), 3)
}

/// All columns with at most two parts and `1 ≤ |μ| ≤ bound`, in block order:
/// within size `k` that is `(k)` followed by the two-part partitions with
/// growing first part.
fn columns_up_to(bound: u32) -> Vec<Composition> {
    let mut out = Vec::new();
    for k in 1..=bound {
        out.push(Composition::new(vec![k]));
        for a in k.div_ceil(2)..k {
            out.push(Composition::new(vec![a, k - a]));
        }
    }
    out
}

/// Monomials whose transposition-class coefficient is a unit — the
/// candidates for spanning that class alone. Within any bound this is
/// exactly `m_1`.
pub fn spanning_gamma21_monomials<C: Scalar>(bound: u32) -> Vec<Composition> {
    columns_up_to(bound)
        .into_iter()
        .filter(|mu| c_column::<C>(mu).gamma21.abs().is_one())
        .collect()
}

/// Even-family monomials whose 3-cycle-class coefficient is a unit; with
/// `m_∅` these are the candidates that can complete a basis. Within any
/// bound ≥ 4 this yields exactly `m_2`, `m_{1,1}` and `m_{2,2}`.
pub fn gamma3_unit_monomials<C: Scalar>(bound: u32) -> Vec<Composition> {
    columns_up_to(bound)
        .into_iter()
        .filter(|mu| mu.size() % 2 == 0 && c_column::<C>(mu).gamma3.abs().is_one())
        .collect()
}

/// All three-element monomial families (drawn from `m_∅` and the `m_μ` with
/// `ℓ(μ) ≤ 2`, `|μ| ≤ bound`) whose transition to the class sums is
/// unimodular over the integers: the integral monomial bases of the centre
/// of the specialized algebra. The alternating-block argument restricts the
/// search to one odd column with unit transposition coefficient plus an even
/// pair with unit 2×2 determinant on the remaining rows.
pub fn enumerate_zs3_bases<C: Scalar>(bound: u32) -> Vec<Vec<Composition>> {
    let mut evens: Vec<(Composition, S3Coefficients<C>)> =
        vec![(Composition::empty(), c_column(&Composition::empty()))];
    let mut odds: Vec<(Composition, S3Coefficients<C>)> = Vec::new();
    for mu in columns_up_to(bound) {
        let col = c_column::<C>(&mu);
        if mu.size() % 2 == 0 {
            debug_assert!(col.gamma21.is_zero());
            evens.push((mu, col));
        } else {
            debug_assert!(col.gamma111.is_zero() && col.gamma3.is_zero());
            odds.push((mu, col));
        }
    }
    let mut out = Vec::new();
    for odd in odds.iter().filter(|(_, c)| c.gamma21.abs().is_one()) {
        for (a, (mu_a, ca)) in evens.iter().enumerate() {
            for (mu_b, cb) in &evens[a + 1..] {
                let det = ca.gamma111.clone() * cb.gamma3.clone()
                    - cb.gamma111.clone() * ca.gamma3.clone();
                if det.abs().is_one() {
                    let mut set = vec![mu_a.clone(), mu_b.clone(), odd.0.clone()];
                    set.sort();
                    out.push(set);
                }
            }
        }
    }
    out.sort();
    out
}

/// The transition matrix of the candidate monomials over the full ground
/// ring in rank 3: columns `m_∅, m_1, m_2, m_{1,1}, m_{2,2}`, rows the class
/// elements in minimal-length order. Every entry satisfies the length/degree
/// parity constraint: the coefficient at a class of minimal length `ℓ` in a
/// degree-`d` monomial has only powers of `x` congruent to `d − ℓ` mod 2.
pub fn h3_transition_table<C: Scalar>() -> LabeledMatrix<C> {
    let cols = vec![
        Composition::empty(),
        crate::comp![1],
        crate::comp![2],
        crate::comp![1, 1],
        crate::comp![2, 2],
    ];
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

/// Of the four integral monomial bases of the specialized centre, the unique
/// one whose transition matrix stays unimodular over the full ground ring.
pub fn h3_unique_basis<C: Scalar>() -> Vec<Composition> {
    let table = h3_transition_table::<C>();
    let candidates = enumerate_zs3_bases::<C>(4);
    let mut survivors: Vec<Vec<Composition>> = Vec::new();
    for set in &candidates {
        let sub = LabeledMatrix::<C>::from_fn(table.row_labels().to_vec(), set.clone(), |row, col| {
            table.entry_by_label(row, col).expect("candidate column present").clone()
        });
        if sub.det().is_unit() {
            survivors.push(set.clone());
        }
    }
    assert_eq!(survivors.len(), 1, "exactly one candidate stays unimodular");
    survivors.pop().unwrap()
}

/// The class-sum coefficient table: columns for every partition with at most
/// two parts and size `≤ max_size`, grouped by size block.
pub struct S3Table<C: Scalar> {
    pub columns: Vec<(Composition, S3Coefficients<C>)>,
}

pub fn table<C: Scalar>(max_size: u32) -> S3Table<C> {
    let mut columns = vec![(Composition::empty(), c_column(&Composition::empty()))];
    columns.extend(columns_up_to(max_size).into_iter().map(|mu| {
        let col = c_column::<C>(&mu);
        (mu, col)
    }));
    S3Table { columns }
}

impl<C: Scalar> S3Table<C> {
    pub fn row_names() -> [&'static str; 3] {
        ["Gamma[1,1,1]", "Gamma[2,1]", "Gamma[3]"]
    }

    fn cell(&self, row: usize, col: usize) -> &C {
        let c = &self.columns[col].1;
        match row {
            0 => &c.gamma111,
            1 => &c.gamma21,
            _ => &c.gamma3,
        }
    }

    /// CSV with the classes as rows, one column per monomial.
    pub fn to_csv(&self) -> String {
        fn quote(field: &str) -> String {
            if field.contains(',') || field.contains('"') {
                format!("\"{}\"", field.replace('"', "\"\""))
            } else {
                field.to_string()
            }
        }
        let mut lines = Vec::new();
        let mut header = vec!["class".to_string()];
        header.extend(self.columns.iter().map(|(mu, _)| quote(&format!("m{mu}"))));
        lines.push(header.join(","));
        for (r, name) in Self::row_names().iter().enumerate() {
            let mut row = vec![quote(name)];
            row.extend((0..self.columns.len()).map(|c| self.cell(r, c).to_string()));
            lines.push(row.join(","));
        }
        lines.join("\n") + "\n"
    }

    /// Plain-text table, monomials as rows.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "{:<12}{:>16}{:>12}{:>12}\n",
            "mu", "Gamma[1,1,1]", "Gamma[2,1]", "Gamma[3]"
        ));
        for (c, (mu, _)) in self.columns.iter().enumerate() {
            out.push_str(&format!(
                "{:<12}{:>16}{:>12}{:>12}\n",
                format!("m{mu}"),
                self.cell(0, c).to_string(),
                self.cell(1, c).to_string(),
                self.cell(2, c).to_string()
            ));
        }
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "rows": Self::row_names(),
            "columns": self.columns.iter().map(|(mu, c)| {
                json!({
                    "mu": mu,
                    "coeffs": [
                        scalar_to_json(&c.gamma111),
                        scalar_to_json(&c.gamma21),
                        scalar_to_json(&c.gamma3),
                    ],
                })
            }).collect::<Vec<_>>(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comp;
    use crate::Int;
    use num_traits::{Signed, Zero};

    fn col(mu: &Composition) -> (i64, i64, i64) {
        let c = c_column::<Int>(mu);
        let f = |v: Int| i64::try_from(v).unwrap();
        (f(c.gamma111), f(c.gamma21), f(c.gamma3))
    }

    #[test]
    fn column_examples() {
        assert_eq!(col(&comp![2]), (3, 0, 1));
        assert_eq!(col(&comp![4, 3]), (0, 8, 0));
        assert_eq!(col(&comp![6, 1]), (0, 22, 0));
        assert_eq!(col(&comp![1, 1, 1]), (0, 0, 0));
        assert_eq!(col(&Composition::empty()), (1, 0, 0));
    }

    #[test]
    fn both_column_routes_agree() {
        for mu in columns_up_to(9) {
            assert_eq!(c_column::<Int>(&mu), c_column_hecke::<Int>(&mu), "column {mu}");
        }
    }

    #[test]
    fn closed_form_examples() {
        let f = |c: S3Coefficients<Int>| {
            (
                i64::try_from(c.gamma111).unwrap(),
                i64::try_from(c.gamma21).unwrap(),
                i64::try_from(c.gamma3).unwrap(),
            )
        };
        assert_eq!(f(closed_mi::<Int>(5)), (0, 11, 0));
        assert_eq!(f(closed_mi::<Int>(6)), (23, 0, 21));
        assert_eq!(f(closed_mi::<Int>(1)), (0, 1, 0));
        assert_eq!(f(closed_mii::<Int>(2)), (2, 0, 1));
        assert_eq!(f(closed_mij::<Int>(1, 2)), (2, 0, 4));
        assert_eq!(f(closed_mij::<Int>(2, 2)), (8, 0, 6));
    }

    #[test]
    fn closed_forms_match_direct_columns() {
        for mu in columns_up_to(14) {
            assert_eq!(closed_column::<Int>(&mu), c_column::<Int>(&mu), "column {mu}");
        }
    }

    #[test]
    fn parity_relations_recurrences() {
        assert!(check_parity::<Int>(14));
        assert!(check_relations::<Int>(14));
        assert!(check_recurrences::<Int>(14));
    }

    #[test]
    fn mixed_columns_are_even() {
        for i in 1..=6u32 {
            for j in 1..=6u32 {
                let c = closed_mij::<Int>(i, j);
                let two = Int::from(2);
                assert!((c.gamma111 % &two).is_zero());
                assert!((c.gamma21 % &two).is_zero());
                assert!((c.gamma3 % &two).is_zero());
            }
        }
    }

    #[test]
    fn spanning_det_examples_and_uniqueness() {
        assert_eq!(spanning_det::<Int>(2, 1), Int::from(1));
        assert_eq!(spanning_det::<Int>(1, 1), Int::from(3));
        assert_eq!(spanning_det::<Int>(4, 2), Int::from(5));
        let mut hits = Vec::new();
        for i in 1..=30u32 {
            for j in 1..=30u32 {
                let d = spanning_det::<Int>(i, j);
                // agrees with the determinant of the closed-form 2x2 block
                let a = closed_mi::<Int>(2 * j);
                let b = closed_mii::<Int>(i);
                assert_eq!(d, a.gamma111 * &b.gamma3 - b.gamma111 * &a.gamma3);
                if d.abs() == Int::from(1) {
                    hits.push((i, j));
                }
            }
        }
        assert_eq!(hits, vec![(2, 1)]);
    }

    #[test]
    fn classification_of_zs3_monomial_bases() {
        let found = enumerate_zs3_bases::<Int>(8);
        let expected: Vec<Vec<Composition>> = vec![
            vec![Composition::empty(), comp![1], comp![2]],
            vec![Composition::empty(), comp![1], comp![1, 1]],
            vec![Composition::empty(), comp![1], comp![2, 2]],
            vec![comp![1], comp![2], comp![2, 2]],
        ]
        .into_iter()
        .map(|mut s| {
            s.sort();
            s
        })
        .collect();
        let mut expected = expected;
        expected.sort();
        assert_eq!(found, expected);
        assert_eq!(enumerate_zs3_bases::<Int>(20), expected);
    }

    #[test]
    fn pruned_search_matches_brute_force() {
        // independent check of the block argument: try every 3-subset
        let bound = 8;
        let mut pool = vec![Composition::empty()];
        pool.extend(columns_up_to(bound));
        let cols: Vec<(Composition, S3Coefficients<Int>)> =
            pool.into_iter().map(|mu| (mu.clone(), c_column(&mu))).collect();
        let mut brute = Vec::new();
        for a in 0..cols.len() {
            for b in a + 1..cols.len() {
                for c in b + 1..cols.len() {
                    let m = |t: &S3Coefficients<Int>| {
                        [t.gamma111.clone(), t.gamma21.clone(), t.gamma3.clone()]
                    };
                    let (ca, cb, cc) = (m(&cols[a].1), m(&cols[b].1), m(&cols[c].1));
                    let det = ca[0].clone() * (cb[1].clone() * &cc[2] - cc[1].clone() * &cb[2])
                        - cb[0].clone() * (ca[1].clone() * &cc[2] - cc[1].clone() * &ca[2])
                        + cc[0].clone() * (ca[1].clone() * &cb[2] - cb[1].clone() * &ca[2]);
                    if det.abs() == Int::from(1) {
                        let mut set =
                            vec![cols[a].0.clone(), cols[b].0.clone(), cols[c].0.clone()];
                        set.sort();
                        brute.push(set);
                    }
                }
            }
        }
        brute.sort();
        assert_eq!(enumerate_zs3_bases::<Int>(bound), brute);
    }

    #[test]
    fn unit_coefficient_families_are_bounded() {
        assert_eq!(spanning_gamma21_monomials::<Int>(64), vec![comp![1]]);
        assert_eq!(
            gamma3_unit_monomials::<Int>(64),
            vec![comp![2], comp![1, 1], comp![2, 2]]
        );
    }

    #[test]
    fn h3_table_and_unique_basis() {
        let t = h3_transition_table::<Int>();
        let p = |v: &[i64]| Poly::<Int>::from_ints(v);
        let get = |row: &Composition, col: &Composition| t.entry_by_label(row, col).unwrap().clone();
        assert_eq!(get(&comp![1, 1, 1], &comp![2]), p(&[3]));
        assert_eq!(get(&comp![2, 1], &comp![2]), p(&[0, 2]));
        assert_eq!(get(&comp![3], &comp![2]), p(&[1, 0, 1]));
        assert_eq!(get(&comp![1, 1, 1], &comp![1, 1]), p(&[0]));
        assert_eq!(get(&comp![2, 1], &comp![1, 1]), p(&[0]));
        assert_eq!(get(&comp![3], &comp![1, 1]), p(&[1]));
        // the m_{2,2} column, recomputed exactly
        assert_eq!(get(&comp![1, 1, 1], &comp![2, 2]), p(&[2, 0, 1]));
        assert_eq!(get(&comp![2, 1], &comp![2, 2]), p(&[0, 3, 0, 1]));
        assert_eq!(get(&comp![3], &comp![2, 2]), p(&[1, 0, 4, 0, 1]));

        assert_eq!(
            h3_unique_basis::<Int>(),
            vec![Composition::empty(), comp![1], comp![1, 1]]
        );
    }

    #[test]
    fn table_emission_shapes() {
        let t = table::<Int>(7);
        assert_eq!(t.columns.len(), 20);
        let csv = t.to_csv();
        assert!(csv.starts_with("class,m[],m[1],m[2],\"m[1,1]\""));
        assert_eq!(csv.lines().count(), 4);
        let json = t.to_json();
        assert_eq!(json["columns"].as_array().unwrap().len(), 20);
    }
}
