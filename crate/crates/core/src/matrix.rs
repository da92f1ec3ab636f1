//! Dense matrices of ground-ring polynomials with composition-labelled rows
//! and columns, plus exact linear algebra over the polynomial ring: fraction-
//! free determinants and adjugate inverses for unimodular matrices.
//!
//! Nothing here ever leaves the ring. Determinants use Bareiss elimination
//! (every interior division is exact by construction), and inversion is
//! refused unless the determinant is a unit, i.e. `±1`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinat::Composition;
use crate::poly::Poly;
use crate::scalar::Scalar;
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound = "")]
pub struct LabeledMatrix<C: Scalar> {
    rows: Vec<Composition>,
    cols: Vec<Composition>,
    entries: Vec<Vec<Poly<C>>>, // entries[r][c]
}

impl<C: Scalar> LabeledMatrix<C> {
    pub fn from_fn(
        rows: Vec<Composition>,
        cols: Vec<Composition>,
        mut f: impl FnMut(&Composition, &Composition) -> Poly<C>,
    ) -> Self {
        let entries = rows
            .iter()
            .map(|r| cols.iter().map(|c| f(r, c)).collect())
            .collect();
        LabeledMatrix { rows, cols, entries }
    }

    pub fn from_rows(rows: Vec<Composition>, cols: Vec<Composition>, entries: Vec<Vec<Poly<C>>>) -> Self {
        assert_eq!(entries.len(), rows.len());
        assert!(entries.iter().all(|r| r.len() == cols.len()));
        LabeledMatrix { rows, cols, entries }
    }

    pub fn identity(labels: Vec<Composition>) -> Self {
        let n = labels.len();
        LabeledMatrix {
            rows: labels.clone(),
            cols: labels,
            entries: (0..n)
                .map(|r| (0..n).map(|c| if r == c { Poly::one() } else { Poly::zero() }).collect())
                .collect(),
        }
    }

    pub fn zero(rows: Vec<Composition>, cols: Vec<Composition>) -> Self {
        let entries = vec![vec![Poly::zero(); cols.len()]; rows.len()];
        LabeledMatrix { rows, cols, entries }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn is_square(&self) -> bool {
        self.nrows() == self.ncols()
    }

    pub fn row_labels(&self) -> &[Composition] {
        &self.rows
    }

    pub fn col_labels(&self) -> &[Composition] {
        &self.cols
    }

    pub fn entry(&self, r: usize, c: usize) -> &Poly<C> {
        &self.entries[r][c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Poly<C>) {
        self.entries[r][c] = v;
    }

    pub fn row_index(&self, label: &Composition) -> Option<usize> {
        self.rows.iter().position(|l| l == label)
    }

    pub fn col_index(&self, label: &Composition) -> Option<usize> {
        self.cols.iter().position(|l| l == label)
    }

    pub fn entry_by_label(&self, row: &Composition, col: &Composition) -> Option<&Poly<C>> {
        Some(&self.entries[self.row_index(row)?][self.col_index(col)?])
    }

    pub fn mul_ref(&self, rhs: &Self) -> Self {
        assert_eq!(self.ncols(), rhs.nrows(), "dimension mismatch");
        let mut out = LabeledMatrix::zero(self.rows.clone(), rhs.cols.clone());
        for r in 0..self.nrows() {
            for k in 0..self.ncols() {
                let a = &self.entries[r][k];
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.ncols() {
                    let b = &rhs.entries[k][c];
                    if b.is_zero() {
                        continue;
                    }
                    out.entries[r][c] = out.entries[r][c].add_ref(&a.mul_ref(b));
                }
            }
        }
        out
    }

    /// Assemble `[[a, b], [c, d]]`; label lists come from the caller.
    pub fn block2(
        rows: Vec<Composition>,
        cols: Vec<Composition>,
        a: &Self,
        b: &Self,
        c: &Self,
        d: &Self,
    ) -> Self {
        assert_eq!(a.nrows(), b.nrows());
        assert_eq!(c.nrows(), d.nrows());
        assert_eq!(a.ncols(), c.ncols());
        assert_eq!(b.ncols(), d.ncols());
        assert_eq!(rows.len(), a.nrows() + c.nrows());
        assert_eq!(cols.len(), a.ncols() + b.ncols());
        let mut entries = Vec::with_capacity(rows.len());
        for r in 0..a.nrows() {
            let mut row = a.entries[r].clone();
            row.extend(b.entries[r].iter().cloned());
            entries.push(row);
        }
        for r in 0..c.nrows() {
            let mut row = c.entries[r].clone();
            row.extend(d.entries[r].iter().cloned());
            entries.push(row);
        }
        LabeledMatrix { rows, cols, entries }
    }

    pub fn scale(&self, s: &Poly<C>) -> Self {
        LabeledMatrix {
            rows: self.rows.clone(),
            cols: self.cols.clone(),
            entries: self
                .entries
                .iter()
                .map(|row| row.iter().map(|e| e.mul_ref(s)).collect())
                .collect(),
        }
    }

    /// Keep only the rows and columns whose labels satisfy `keep`.
    pub fn restrict(&self, keep: impl Fn(&Composition) -> bool) -> Self {
        let ri: Vec<usize> = (0..self.nrows()).filter(|&r| keep(&self.rows[r])).collect();
        let ci: Vec<usize> = (0..self.ncols()).filter(|&c| keep(&self.cols[c])).collect();
        LabeledMatrix {
            rows: ri.iter().map(|&r| self.rows[r].clone()).collect(),
            cols: ci.iter().map(|&c| self.cols[c].clone()).collect(),
            entries: ri
                .iter()
                .map(|&r| ci.iter().map(|&c| self.entries[r][c].clone()).collect())
                .collect(),
        }
    }

    /// Re-label rows and columns positionally.
    pub fn relabel(&self, rows: Vec<Composition>, cols: Vec<Composition>) -> Self {
        assert_eq!(rows.len(), self.nrows());
        assert_eq!(cols.len(), self.ncols());
        LabeledMatrix {
            rows,
            cols,
            entries: self.entries.clone(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.nrows()).all(|r| {
                (0..self.ncols()).all(|c| {
                    if r == c {
                        self.entries[r][c].is_one()
                    } else {
                        self.entries[r][c].is_zero()
                    }
                })
            })
    }

    /// Exact determinant by fraction-free (Bareiss) elimination with row
    /// pivoting; all interior divisions are exact in the polynomial ring.
    pub fn det(&self) -> Poly<C> {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.nrows();
        if n == 0 {
            return Poly::one();
        }
        let mut m: Vec<Vec<Poly<C>>> = self.entries.clone();
        let mut sign_flip = false;
        let mut prev = Poly::<C>::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                    Some(r) => {
                        m.swap(k, r);
                        sign_flip = !sign_flip;
                    }
                    None => return Poly::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m[i][j].mul_ref(&m[k][k]).sub_ref(&m[i][k].mul_ref(&m[k][j]));
                    m[i][j] = num.exact_div(&prev).expect("Bareiss division is exact");
                }
                m[i][k] = Poly::zero();
            }
            prev = m[k][k].clone();
        }
        let d = m[n - 1][n - 1].clone();
        if sign_flip {
            d.neg_ref()
        } else {
            d
        }
    }

    fn minor(&self, skip_r: usize, skip_c: usize) -> LabeledMatrix<C> {
        let rows: Vec<Composition> = self
            .rows
            .iter()
            .enumerate()
            .filter(|(r, _)| *r != skip_r)
            .map(|(_, l)| l.clone())
            .collect();
        let cols: Vec<Composition> = self
            .cols
            .iter()
            .enumerate()
            .filter(|(c, _)| *c != skip_c)
            .map(|(_, l)| l.clone())
            .collect();
        let entries = self
            .entries
            .iter()
            .enumerate()
            .filter(|(r, _)| *r != skip_r)
            .map(|(_, row)| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != skip_c)
                    .map(|(_, e)| e.clone())
                    .collect()
            })
            .collect();
        LabeledMatrix { rows, cols, entries }
    }

    /// Exact inverse over the ring. Only unimodular matrices (determinant
    /// `±1`) are invertible; anything else returns `NotUnimodular`. The
    /// result carries swapped labels and satisfies `M·M⁻¹ = M⁻¹·M = I`.
    pub fn invert_exact(&self) -> Result<LabeledMatrix<C>> {
        assert!(self.is_square(), "inverse of a non-square matrix");
        let det = self.det();
        if !det.is_unit() {
            return Err(Error::NotUnimodular { det: det.to_string() });
        }
        let n = self.nrows();
        // adjugate transpose, scaled by det⁻¹ = det
        let mut inv = LabeledMatrix::zero(self.cols.clone(), self.rows.clone());
        for r in 0..n {
            for c in 0..n {
                let cof = self.minor(c, r).det();
                let signed = if (r + c) % 2 == 0 { cof } else { cof.neg_ref() };
                inv.entries[r][c] = signed.mul_ref(&det);
            }
        }
        debug_assert!(self.mul_ref(&inv).is_identity());
        Ok(inv)
    }
}

impl<C: Scalar> fmt::Display for LabeledMatrix<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "rows: {}",
            self.rows.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" ")
        )?;
        writeln!(
            f,
            "cols: {}",
            self.cols.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" ")
        )?;
        for (r, label) in self.rows.iter().enumerate() {
            let row = self.entries[r]
                .iter()
                .map(|e| e.to_string())
                .collect::<Vec<_>>()
                .join(" | ");
            writeln!(f, "{label}: {row}")?;
        }
        Ok(())
    }
}

impl<C: Scalar> fmt::Debug for LabeledMatrix<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
