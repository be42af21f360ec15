//! Dense matrices over `Q(ζ_n)` and sparse exact elimination.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{FieldContext, Scalar};

/// Row-major dense matrix of scalars.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    ctx: Arc<FieldContext>,
    data: Vec<Scalar>,
}

impl Mat {
    pub fn zeros(ctx: &Arc<FieldContext>, rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            ctx: ctx.clone(),
            data: vec![Scalar::zero(ctx); rows * cols],
        }
    }

    pub fn identity(ctx: &Arc<FieldContext>, n: usize) -> Self {
        Self::scalar(ctx, n, &Scalar::one(ctx))
    }

    pub fn scalar(ctx: &Arc<FieldContext>, n: usize, s: &Scalar) -> Self {
        let mut m = Self::zeros(ctx, n, n);
        for i in 0..n {
            m.set(i, i, s.clone());
        }
        m
    }

    pub fn from_rows(ctx: &Arc<FieldContext>, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Shape("ragged rows".into()));
        }
        if rows
            .iter()
            .flatten()
            .any(|s| s.conductor() != ctx.conductor())
        {
            return Err(Error::ConductorMismatch(
                ctx.conductor(),
                rows.iter()
                    .flatten()
                    .find(|s| s.conductor() != ctx.conductor())
                    .map_or(0, Scalar::conductor),
            ));
        }
        Ok(Mat {
            rows: r,
            cols: c,
            ctx: ctx.clone(),
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        self.data
            .chunks(self.cols.max(1))
            .map(<[Scalar]>::to_vec)
            .collect()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn context(&self) -> &Arc<FieldContext> {
        &self.ctx
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    /// `Some(c)` when the matrix equals `c·I`.
    pub fn as_scalar_matrix(&self) -> Option<Scalar> {
        if self.rows != self.cols {
            return None;
        }
        if self.rows == 0 {
            return Some(Scalar::zero(&self.ctx));
        }
        let c = self.get(0, 0).clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                let v = self.get(i, j);
                let ok = if i == j { *v == c } else { v.is_zero() };
                if !ok {
                    return None;
                }
            }
        }
        Some(c)
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Mat::zeros(&self.ctx, self.rows, other.cols);
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
                    let idx = i * out.cols + j;
                    out.data[idx] = &out.data[idx] + &(a * b);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        Mat {
            data,
            ..self.clone()
        }
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a - b)
            .collect();
        Mat {
            data,
            ..self.clone()
        }
    }

    pub fn scale(&self, s: &Scalar) -> Mat {
        let data = self.data.iter().map(|a| a * s).collect();
        Mat {
            data,
            ..self.clone()
        }
    }

    pub fn pow(&self, e: u64) -> Mat {
        let mut acc = Mat::identity(&self.ctx, self.rows);
        let mut base = self.clone();
        let mut k = e;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Gauss-Jordan inverse; `None` when singular.
    pub fn inverse(&self) -> Option<Mat> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Mat::identity(&self.ctx, n);
        for col in 0..n {
            let piv = (col..n).find(|&r| !a.get(r, col).is_zero())?;
            if piv != col {
                a.swap_rows(piv, col);
                inv.swap_rows(piv, col);
            }
            let p = a.get(col, col).inv().ok()?;
            a.scale_row(col, &p);
            inv.scale_row(col, &p);
            for r in 0..n {
                if r == col {
                    continue;
                }
                let f = a.get(r, col).clone();
                if f.is_zero() {
                    continue;
                }
                a.axpy_row(r, col, &f);
                inv.axpy_row(r, col, &f);
            }
        }
        Some(inv)
    }

    pub fn is_invertible(&self) -> bool {
        self.rank() == self.rows && self.rows == self.cols
    }

    pub fn rank(&self) -> usize {
        let mut ech = Echelon::new(self.cols);
        for r in 0..self.rows {
            ech.insert(self.row_sparse(r));
        }
        ech.rank()
    }

    pub fn row_sparse(&self, r: usize) -> SparseVec {
        let mut v = SparseVec::new();
        for c in 0..self.cols {
            let s = self.get(r, c);
            if !s.is_zero() {
                v.insert(c, s.clone());
            }
        }
        v
    }

    /// Entries flattened row-major into a sparse vector of length `rows·cols`.
    pub fn flatten_sparse(&self) -> SparseVec {
        self.data
            .iter()
            .enumerate()
            .filter(|(_, s)| !s.is_zero())
            .map(|(i, s)| (i, s.clone()))
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, r: usize, s: &Scalar) {
        for j in 0..self.cols {
            let idx = r * self.cols + j;
            self.data[idx] = &self.data[idx] * s;
        }
    }

    /// row[r] -= f · row[src]
    fn axpy_row(&mut self, r: usize, src: usize, f: &Scalar) {
        for j in 0..self.cols {
            let s = self.data[src * self.cols + j].clone();
            if s.is_zero() {
                continue;
            }
            let idx = r * self.cols + j;
            self.data[idx] = &self.data[idx] - &(f * &s);
        }
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "Mat {}x{} over Q(z{})",
            self.rows,
            self.cols,
            self.ctx.conductor()
        )?;
        for row in self.to_rows() {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// JSON form: nested rows of scalar objects.
#[derive(Serialize, Deserialize)]
#[serde(transparent)]
pub struct MatRepr(pub Vec<Vec<Scalar>>);

impl Serialize for Mat {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatRepr(self.to_rows()).serialize(s)
    }
}

pub type SparseVec = BTreeMap<usize, Scalar>;

/// `v -= f · w`, dropping entries that cancel.
pub fn sparse_axpy(v: &mut SparseVec, f: &Scalar, w: &SparseVec) {
    for (&c, s) in w {
        let t = f * s;
        match v.get_mut(&c) {
            Some(x) => {
                *x = &*x - &t;
                if x.is_zero() {
                    v.remove(&c);
                }
            }
            None => {
                v.insert(c, -t);
            }
        }
    }
}

/// Incrementally maintained reduced row echelon form.
///
/// Every stored row has leading entry 1 in its pivot column and zeros in
/// all other pivot columns, so reducing a vector takes one pass over the
/// pivot columns it touches.
#[derive(Clone, Debug)]
pub struct Echelon {
    ncols: usize,
    rows: Vec<SparseVec>,
    pivot_row: BTreeMap<usize, usize>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon {
            ncols,
            rows: Vec::new(),
            pivot_row: BTreeMap::new(),
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_row.contains_key(&col)
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivot_row.keys().copied()
    }

    pub fn row_for_pivot(&self, col: usize) -> Option<&SparseVec> {
        self.pivot_row.get(&col).map(|&r| &self.rows[r])
    }

    /// Residue of `v` modulo the row space, supported on non-pivot columns.
    pub fn reduce(&self, mut v: SparseVec) -> SparseVec {
        let hits: Vec<usize> = v
            .keys()
            .copied()
            .filter(|c| self.pivot_row.contains_key(c))
            .collect();
        for c in hits {
            if let Some(f) = v.get(&c).cloned() {
                sparse_axpy(&mut v, &f, &self.rows[self.pivot_row[&c]]);
            }
        }
        v
    }

    /// Adds `v` to the row space; returns whether the rank grew.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let mut v = self.reduce(v);
        let Some((&pc, lead)) = v.iter().next() else {
            return false;
        };
        let inv = lead.inv().expect("leading entry is nonzero");
        for s in v.values_mut() {
            *s = &*s * &inv;
        }
        for row in &mut self.rows {
            if let Some(f) = row.get(&pc).cloned() {
                sparse_axpy(row, &f, &v);
            }
        }
        self.pivot_row.insert(pc, self.rows.len());
        self.rows.push(std::mem::take(&mut v));
        true
    }

    /// Basis of `{x : row·x = 0 for every stored row}`.
    pub fn nullspace(&self, ctx: &Arc<FieldContext>) -> Vec<SparseVec> {
        let mut basis = Vec::new();
        for free in (0..self.ncols).filter(|c| !self.is_pivot(*c)) {
            let mut x = SparseVec::new();
            x.insert(free, Scalar::one(ctx));
            for (&pc, &r) in &self.pivot_row {
                if let Some(s) = self.rows[r].get(&free) {
                    x.insert(pc, -s);
                }
            }
            basis.push(x);
        }
        basis
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::field_new;

    fn m(ctx: &Arc<FieldContext>, rows: &[&[i64]]) -> Mat {
        Mat::from_rows(
            ctx,
            rows.iter()
                .map(|r| r.iter().map(|&v| Scalar::from_int(ctx, v)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn inverse_and_rank() {
        let f = field_new(1);
        let a = m(&f, &[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Mat::identity(&f, 2));
        let s = m(&f, &[&[1, 2], &[2, 4]]);
        assert!(s.inverse().is_none());
        assert_eq!(s.rank(), 1);
    }

    #[test]
    fn nullspace_of_rank_one() {
        let f = field_new(1);
        let mut e = Echelon::new(3);
        e.insert(m(&f, &[&[1, 2, 3]]).row_sparse(0));
        let ns = e.nullspace(&f);
        assert_eq!(ns.len(), 2);
        for x in ns {
            let dot = x.iter().fold(Scalar::zero(&f), |acc, (&c, s)| {
                &acc + &(s * &Scalar::from_int(&f, [1, 2, 3][c]))
            });
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn scalar_matrix_detection() {
        let f = field_new(4);
        let i = Scalar::root_of_unity(&f, 1);
        let s = Mat::scalar(&f, 3, &i);
        assert_eq!(s.as_scalar_matrix(), Some(i.clone()));
        assert_eq!(s.pow(2).as_scalar_matrix(), Some(Scalar::from_int(&f, -1)));
        let mut t = s.clone();
        t.set(0, 1, Scalar::one(&f));
        assert!(t.as_scalar_matrix().is_none());
    }
}
