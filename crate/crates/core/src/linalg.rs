//! Dense exact linear algebra over the scalar field: matrices, reduced
//! echelon forms with coordinate tracking, kernels, solving, determinants.
//!
//! Everything is done by exact Gaussian elimination over the fraction
//! field; there are no magnitude or pivot-choice heuristics beyond "first
//! nonzero".  Row convention: module elements are rows and operators act
//! by right multiplication, so spans, kernels and solving default to the
//! row side.

use ynq_exact::{CycloField, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    field: CycloField,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(field: &CycloField, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![Scalar::zero(field); rows * cols],
        }
    }

    pub fn identity(field: &CycloField, n: usize) -> Matrix {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one(field));
        }
        m
    }

    pub fn from_rows(field: &CycloField, rows: Vec<Vec<Scalar>>) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            field: field.clone(),
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(
        field: &CycloField,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Matrix {
        let mut m = Matrix::zero(field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn field(&self) -> &CycloField {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vec(&self, i: usize) -> Vec<Scalar> {
        self.row(i).to_vec()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(&self.field, self.cols, self.rows, |i, j| {
            self.get(j, i).clone()
        })
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(&self.field, self.rows, self.cols, |i, j| {
            self.get(i, j).add(other.get(i, j))
        })
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(&self.field, self.rows, self.cols, |i, j| {
            self.get(i, j).sub(other.get(i, j))
        })
    }

    pub fn neg(&self) -> Matrix {
        Matrix::from_fn(&self.field, self.rows, self.cols, |i, j| self.get(i, j).neg())
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix::from_fn(&self.field, self.rows, self.cols, |i, j| {
            self.get(i, j).mul(c)
        })
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "inner dimension mismatch");
        let mut out = Matrix::zero(&self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j).add(&a.mul(b));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Row vector times matrix.
    pub fn apply_row(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.rows);
        let mut out = vec![Scalar::zero(&self.field); self.cols];
        for (k, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for j in 0..self.cols {
                let b = self.get(k, j);
                if !b.is_zero() {
                    out[j] = out[j].add(&c.mul(b));
                }
            }
        }
        out
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        Matrix::from_fn(&self.field, self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        })
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        Matrix::from_fn(&self.field, self.rows + other.rows, self.cols, |i, j| {
            if i < self.rows {
                self.get(i, j).clone()
            } else {
                other.get(i - self.rows, j).clone()
            }
        })
    }

    /// Entrywise evaluation at a fixed value of q; errors on any pole.
    pub fn eval_at(&self, point: &ynq_exact::CycloNumber) -> Result<Matrix, ynq_exact::ExactError> {
        let mut out = Matrix::zero(&self.field, self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, Scalar::from_cyclo(self.get(i, j).eval(point)?));
            }
        }
        Ok(out)
    }

    pub fn echelonize(&self) -> Echelon {
        let mut ech = Echelon::new(&self.field, self.cols);
        for i in 0..self.rows {
            ech.insert(self.row_vec(i));
        }
        ech
    }

    pub fn rank(&self) -> usize {
        self.echelonize().rank()
    }

    /// Rows spanning { y : y . self = 0 }.
    pub fn left_kernel(&self) -> Matrix {
        let mut ech = Echelon::new(&self.field, self.cols);
        let mut kernel_rows = Vec::new();
        for i in 0..self.rows {
            let (residual, combo) = ech.reduce_track(self.row_vec(i));
            if residual.iter().all(Scalar::is_zero) {
                // combo expresses row i over the previously inserted rows.
                let mut y = vec![Scalar::zero(&self.field); self.rows];
                for (k, c) in combo.iter().enumerate() {
                    y[k] = c.neg();
                }
                y[i] = Scalar::one(&self.field);
                kernel_rows.push(y);
            } else {
                ech.insert_reduced(residual, combo);
            }
        }
        Matrix::from_rows(&self.field, kernel_rows)
    }

    /// Columns spanning { x : self . x = 0 }.
    pub fn right_kernel(&self) -> Matrix {
        self.transpose().left_kernel().transpose()
    }

    /// Solves X . self = rhs row by row; None when any row is outside the
    /// row span.
    pub fn solve_left(&self, rhs: &Matrix) -> Option<Matrix> {
        assert_eq!(self.cols, rhs.cols);
        let mut ech = Echelon::new(&self.field, self.cols);
        for i in 0..self.rows {
            ech.insert(self.row_vec(i));
        }
        let mut rows = Vec::with_capacity(rhs.rows);
        for i in 0..rhs.rows {
            rows.push(ech.coords(rhs.row_vec(i))?);
        }
        Some(Matrix::from_rows(&self.field, rows))
    }

    /// Solves self . X = rhs.
    pub fn solve_right(&self, rhs: &Matrix) -> Option<Matrix> {
        self.transpose()
            .solve_left(&rhs.transpose())
            .map(|x| x.transpose())
    }

    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        // X . self = I; for square matrices the one-sided inverse is the
        // inverse.
        self.solve_left(&Matrix::identity(&self.field, self.rows))
    }

    pub fn det(&self) -> Scalar {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Scalar::one(&self.field);
        for col in 0..n {
            let Some(p) = (col..n).find(|&i| !m.get(i, col).is_zero()) else {
                return Scalar::zero(&self.field);
            };
            if p != col {
                for j in 0..n {
                    let a = m.get(col, j).clone();
                    let b = m.get(p, j).clone();
                    m.set(col, j, b);
                    m.set(p, j, a);
                }
                det = det.neg();
            }
            let pivot = m.get(col, col).clone();
            det = det.mul(&pivot);
            let pivot_inv = pivot.inv().expect("nonzero pivot");
            for i in col + 1..n {
                let factor = m.get(i, col).mul(&pivot_inv);
                if factor.is_zero() {
                    continue;
                }
                for j in col..n {
                    let v = m.get(i, j).sub(&factor.mul(m.get(col, j)));
                    m.set(i, j, v);
                }
            }
        }
        det
    }
}

/// An incrementally built reduced row-echelon span with coordinate
/// tracking: every echelon row remembers how it is expressed over the
/// vectors inserted so far, so membership tests double as basis
/// expansions.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: CycloField,
    width: usize,
    /// Reduced rows with leading coefficient 1, kept sorted by pivot column.
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
    /// combos[i] expresses rows[i] over the inserted vectors (padded with
    /// zeros up to the current insertion count).
    combos: Vec<Vec<Scalar>>,
    inserted: usize,
}

impl Echelon {
    pub fn new(field: &CycloField, width: usize) -> Echelon {
        Echelon {
            field: field.clone(),
            width,
            rows: Vec::new(),
            pivots: Vec::new(),
            combos: Vec::new(),
            inserted: 0,
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn inserted(&self) -> usize {
        self.inserted
    }

    pub fn pivot_cols(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_rows(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    /// Reduces v against the span, returning the residual together with the
    /// coefficients over the inserted vectors accounting for the removed
    /// part: v = residual + sum coeffs[k] * inserted[k].
    pub fn reduce_track(&self, mut v: Vec<Scalar>) -> (Vec<Scalar>, Vec<Scalar>) {
        assert_eq!(v.len(), self.width);
        let mut coeffs = vec![Scalar::zero(&self.field); self.inserted];
        for (idx, &p) in self.pivots.iter().enumerate() {
            let c = v[p].clone();
            if c.is_zero() {
                continue;
            }
            for j in p..self.width {
                if !self.rows[idx][j].is_zero() {
                    v[j] = v[j].sub(&c.mul(&self.rows[idx][j]));
                }
            }
            for (k, cc) in self.combos[idx].iter().enumerate() {
                if !cc.is_zero() {
                    coeffs[k] = coeffs[k].add(&c.mul(cc));
                }
            }
        }
        (v, coeffs)
    }

    /// Inserts a vector; returns true when it enlarged the span.
    pub fn insert(&mut self, v: Vec<Scalar>) -> bool {
        let (residual, combo) = self.reduce_track(v);
        if residual.iter().all(Scalar::is_zero) {
            self.inserted += 1;
            return false;
        }
        self.insert_reduced(residual, combo);
        true
    }

    /// Like `insert`, but a vector already in the span is discarded rather
    /// than counted, so after a sequence of calls `coords` runs over
    /// exactly the vectors that extended the span.
    pub fn extend(&mut self, v: Vec<Scalar>) -> bool {
        let (residual, combo) = self.reduce_track(v);
        if residual.iter().all(Scalar::is_zero) {
            return false;
        }
        self.insert_reduced(residual, combo);
        true
    }

    /// Installs an already-reduced nonzero residual, with `combo` the
    /// tracked coefficients of the reduction (as returned by
    /// `reduce_track`).  Counts as one insertion.
    pub fn insert_reduced(&mut self, mut residual: Vec<Scalar>, combo: Vec<Scalar>) {
        let pivot = residual
            .iter()
            .position(|c| !c.is_zero())
            .expect("zero residual");
        let lead_inv = residual[pivot].inv().expect("nonzero pivot");
        for c in residual.iter_mut() {
            if !c.is_zero() {
                *c = c.mul(&lead_inv);
            }
        }
        // New row = (inserted vector - tracked part) / lead: combo over the
        // old vectors picks up the same scaling, and the new vector itself
        // contributes lead_inv.
        let mut new_combo = vec![Scalar::zero(&self.field); self.inserted + 1];
        for (k, c) in combo.iter().enumerate() {
            if !c.is_zero() {
                new_combo[k] = c.mul(&lead_inv).neg();
            }
        }
        new_combo[self.inserted] = lead_inv;
        self.inserted += 1;
        for c in self.combos.iter_mut() {
            c.resize(self.inserted, Scalar::zero(&self.field));
        }
        // Back-substitute to keep the form fully reduced.
        for idx in 0..self.rows.len() {
            let c = self.rows[idx][pivot].clone();
            if c.is_zero() {
                continue;
            }
            for j in 0..self.width {
                if !residual[j].is_zero() {
                    self.rows[idx][j] = self.rows[idx][j].sub(&c.mul(&residual[j]));
                }
            }
            for k in 0..self.inserted {
                if !new_combo[k].is_zero() {
                    self.combos[idx][k] = self.combos[idx][k].sub(&c.mul(&new_combo[k]));
                }
            }
        }
        let at = self.pivots.partition_point(|&p| p < pivot);
        self.pivots.insert(at, pivot);
        self.rows.insert(at, residual);
        self.combos.insert(at, new_combo);
    }

    pub fn contains(&self, v: Vec<Scalar>) -> bool {
        self.reduce_track(v).0.iter().all(Scalar::is_zero)
    }

    /// Expresses v over the inserted vectors, when v lies in the span.  The
    /// result has one coefficient per inserted vector, in insertion order.
    pub fn coords(&self, v: Vec<Scalar>) -> Option<Vec<Scalar>> {
        let (residual, coeffs) = self.reduce_track(v);
        residual.iter().all(Scalar::is_zero).then_some(coeffs)
    }
}
