//! Integer matrices, Smith normal form and PI degrees of quantum affine spaces.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weylalg::{AlgebraSpec, Flavor};

/// Largest side length accepted by [`determinantal_divisors`].
pub const MINOR_BUDGET: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Ok(IntMatrix {
            rows: r,
            cols: c,
            entries: rows.iter().flatten().map(|&v| BigInt::from(v)).collect(),
        })
    }

    pub fn diagonal(d: &[i64]) -> Self {
        let mut m = Self::zeros(d.len(), d.len());
        for (i, &v) in d.iter().enumerate() {
            m[(i, i)] = BigInt::from(v);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn is_skew_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows)
                .all(|i| (0..self.cols).all(|j| (&self[(i, j)] + &self[(j, i)]).is_zero()))
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += &self[(i, k)] * &other[(k, j)];
                }
            }
        }
        out
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut a: Vec<Vec<BigInt>> = (0..n)
            .map(|i| self.entries[i * n..(i + 1) * n].to_vec())
            .collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(k, i);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        if n == 0 {
            return BigInt::one();
        }
        sign * &a[n - 1][n - 1]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.entries.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.entries.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// `row[dst] += f · row[src]`
    fn add_row(&mut self, dst: usize, src: usize, f: &BigInt) {
        for j in 0..self.cols {
            let t = f * &self[(src, j)];
            self[(dst, j)] += t;
        }
    }

    /// `col[dst] += f · col[src]`
    fn add_col(&mut self, dst: usize, src: usize, f: &BigInt) {
        for i in 0..self.rows {
            let t = f * &self[(i, src)];
            self[(i, dst)] += t;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = -&self[(r, j)];
            self[(r, j)] = v;
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.entries[i * self.cols + j]
    }
}

#[derive(Serialize, Deserialize)]
struct IntMatrixRepr {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<String>>,
}

impl Serialize for IntMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        IntMatrixRepr {
            rows: self.rows,
            cols: self.cols,
            entries: (0..self.rows)
                .map(|i| (0..self.cols).map(|j| self[(i, j)].to_string()).collect())
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let r = IntMatrixRepr::deserialize(d)?;
        if r.entries.len() != r.rows || r.entries.iter().any(|row| row.len() != r.cols) {
            return Err(D::Error::custom("entries do not match rows/cols"));
        }
        let entries = r
            .entries
            .iter()
            .flatten()
            .map(|s| s.parse::<BigInt>().map_err(D::Error::custom))
            .collect::<std::result::Result<_, _>>()?;
        Ok(IntMatrix {
            rows: r.rows,
            cols: r.cols,
            entries,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SnfResult {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    pub invariant_factors: Vec<BigInt>,
}

/// Smith normal form `U·A·V = D`.
///
/// The pivot at each stage is the nonzero entry of least absolute value in
/// the trailing submatrix, ties going to the first in row-major order.
pub fn smith_normal_form(a: &IntMatrix) -> SnfResult {
    let (m, n) = (a.rows, a.cols);
    let mut d = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);

    for t in 0..m.min(n) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..m {
                for j in t..n {
                    let x = &d[(i, j)];
                    if x.is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| x.abs() < d[(bi, bj)].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return finish(u, d, v);
            };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let p = d[(t, t)].clone();
            let mut dirty = false;
            for i in t + 1..m {
                let q = d[(i, t)].div_floor(&p);
                if !q.is_zero() {
                    d.add_row(i, t, &-&q);
                    u.add_row(i, t, &-&q);
                }
                dirty |= !d[(i, t)].is_zero();
            }
            for j in t + 1..n {
                let q = d[(t, j)].div_floor(&p);
                if !q.is_zero() {
                    d.add_col(j, t, &-&q);
                    v.add_col(j, t, &-&q);
                }
                dirty |= !d[(t, j)].is_zero();
            }
            if dirty {
                continue;
            }
            let offender = (t + 1..m).find(|&i| (t + 1..n).any(|j| !d[(i, j)].is_multiple_of(&p)));
            match offender {
                Some(i) => {
                    d.add_row(t, i, &BigInt::one());
                    u.add_row(t, i, &BigInt::one());
                }
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    finish(u, d, v)
}

fn finish(u: IntMatrix, d: IntMatrix, v: IntMatrix) -> SnfResult {
    let invariant_factors = (0..d.rows.min(d.cols))
        .map(|i| d[(i, i)].clone())
        .filter(|x| !x.is_zero())
        .collect();
    SnfResult {
        u,
        d,
        v,
        invariant_factors,
    }
}

/// `d_k` = gcd of all `k×k` minors, for `k = 1..=rank`, by brute-force enumeration.
pub fn determinantal_divisors(a: &IntMatrix) -> Result<Vec<BigInt>> {
    if a.rows > MINOR_BUDGET || a.cols > MINOR_BUDGET {
        return Err(Error::MatrixTooLarge {
            rows: a.rows,
            cols: a.cols,
            limit: MINOR_BUDGET,
        });
    }
    let mut out = Vec::new();
    for k in 1..=a.rows.min(a.cols) {
        let mut g = BigInt::zero();
        for rs in combinations(a.rows, k) {
            for cs in combinations(a.cols, k) {
                let mut sub = IntMatrix::zeros(k, k);
                for (i, &r) in rs.iter().enumerate() {
                    for (j, &c) in cs.iter().enumerate() {
                        sub[(i, j)] = a[(r, c)].clone();
                    }
                }
                g = g.gcd(&sub.determinant());
            }
        }
        if g.is_zero() {
            break;
        }
        out.push(g);
    }
    Ok(out)
}

/// Invariant factors recovered as `d_k / d_{k-1}`.
pub fn invariant_factors_from_divisors(divisors: &[BigInt]) -> Vec<BigInt> {
    let mut prev = BigInt::one();
    divisors
        .iter()
        .map(|d| {
            let h = d / &prev;
            prev = d.clone();
            h
        })
        .collect()
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}

/// Exponents of `ζ_l` in the q-commutation data of the associated quantum
/// affine space, indexed by `(y1, x1, y2, x2)`.
pub fn exponent_matrix(spec: &AlgebraSpec) -> IntMatrix {
    let rows: [[i64; 4]; 4] = match spec.flavor() {
        Flavor::Affine4 => *spec
            .affine_exponents()
            .expect("Affine4 spec carries its matrix"),
        flavor => {
            let f = spec.factorization();
            let a = f.s1 * f.k1;
            let b = f.s2 * f.k2;
            let c = a * f.k;
            match flavor {
                Flavor::A2 => [
                    [0, -a, c, -a - c],
                    [a, 0, -c, a + c],
                    [-c, c, 0, -b],
                    [a + c, -a - c, b, 0],
                ],
                _ => [[0, -a, c, -c], [a, 0, -c, c], [-c, c, 0, -b], [c, -c, b, 0]],
            }
        }
    };
    IntMatrix::from_i64(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).expect("4x4")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GcdClaims {
    pub gcd_h1_l: u64,
    pub gcd_h2_l: u64,
    pub s1s2: u64,
    pub h1_coprime_to_l: bool,
    pub h2_gcd_is_s1s2: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PiDegreeReport {
    pub exponent_matrix: IntMatrix,
    pub l: u64,
    pub invariant_factors: Vec<BigInt>,
    pub pi_degree: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub claims: Option<GcdClaims>,
}

fn gcd_with(h: &BigInt, l: u64) -> u64 {
    h.gcd(&BigInt::from(l)).to_u64().expect("divides l")
}

/// PI degree of the quantum affine space with exponent matrix `b` over a
/// primitive `l`-th root: the product of `l / gcd(h, l)` over one invariant
/// factor `h` from each of the pairs.
pub fn pi_degree_affine(b: &IntMatrix, l: u64) -> Result<PiDegreeReport> {
    if !b.is_skew_symmetric() {
        return Err(Error::Shape(
            "exponent matrix must be square and skew-symmetric".into(),
        ));
    }
    let snf = smith_normal_form(b);
    let h = snf.invariant_factors;
    if h.len() % 2 == 1 {
        return Err(Error::OddRank(h.len()));
    }
    let pi_degree = h.iter().step_by(2).map(|hi| l / gcd_with(hi, l)).product();
    Ok(PiDegreeReport {
        exponent_matrix: b.clone(),
        l,
        invariant_factors: h,
        pi_degree,
        claims: None,
    })
}

/// PI degree of the algebra described by `spec`, with the two gcd claims
/// about `h1` and `h2` evaluated for the Weyl flavors.
pub fn pi_degree_weyl(spec: &AlgebraSpec) -> Result<PiDegreeReport> {
    let l = spec.l() as u64;
    let mut report = pi_degree_affine(&exponent_matrix(spec), l)?;
    if spec.flavor() != Flavor::Affine4 {
        let f = spec.factorization();
        let s1s2 = (f.s1 * f.s2) as u64;
        let h = &report.invariant_factors;
        let gcd_h1_l = h.first().map_or(l, |x| gcd_with(x, l));
        let gcd_h2_l = h.get(2).map_or(l, |x| gcd_with(x, l));
        report.claims = Some(GcdClaims {
            gcd_h1_l,
            gcd_h2_l,
            s1s2,
            h1_coprime_to_l: gcd_h1_l == 1,
            h2_gcd_is_s1s2: gcd_h2_l == s1s2,
        });
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn check_snf(a: &IntMatrix) -> SnfResult {
        let r = smith_normal_form(a);
        assert_eq!(r.u.mul(a).mul(&r.v), r.d);
        assert_eq!(r.u.determinant().abs(), BigInt::one());
        assert_eq!(r.v.determinant().abs(), BigInt::one());
        for i in 0..r.d.rows() {
            for j in 0..r.d.cols() {
                if i != j {
                    assert!(r.d[(i, j)].is_zero());
                }
            }
        }
        for w in r.invariant_factors.windows(2) {
            assert!(w[1].is_multiple_of(&w[0]));
        }
        r
    }

    #[test]
    fn snf_identity_and_rotation() {
        assert_eq!(
            check_snf(&IntMatrix::identity(4)).invariant_factors,
            ints(&[1, 1, 1, 1])
        );
        for n in 1..=10 {
            let a = IntMatrix::from_i64(&[vec![0, -n], vec![n, 0]]).unwrap();
            assert_eq!(check_snf(&a).invariant_factors, ints(&[n, n]));
            let dd = determinantal_divisors(&a).unwrap();
            assert_eq!(invariant_factors_from_divisors(&dd), ints(&[n, n]));
        }
    }

    #[test]
    fn snf_of_rectangular_and_zero() {
        let a = IntMatrix::from_i64(&[vec![2, 4, 4], vec![-6, 6, 12]]).unwrap();
        assert_eq!(check_snf(&a).invariant_factors, ints(&[2, 6]));
        assert!(check_snf(&IntMatrix::zeros(3, 2))
            .invariant_factors
            .is_empty());
    }

    #[test]
    fn divisors_of_diagonal() {
        assert_eq!(
            determinantal_divisors(&IntMatrix::diagonal(&[2, 6])).unwrap(),
            ints(&[2, 12])
        );
        assert_eq!(
            determinantal_divisors(&IntMatrix::identity(4)).unwrap(),
            ints(&[1, 1, 1, 1])
        );
        assert!(matches!(
            determinantal_divisors(&IntMatrix::identity(9)),
            Err(Error::MatrixTooLarge { .. })
        ));
    }

    #[test]
    fn bareiss_matches_cofactor() {
        let a = IntMatrix::from_i64(&[vec![2, -1, 3], vec![0, 4, 1], vec![5, 2, -2]]).unwrap();
        // 2(-8-2) + 1(0-5) + 3(0-20)
        assert_eq!(a.determinant(), BigInt::from(-85));
    }

    #[test]
    fn block_rotation_pi_degree() {
        let b = IntMatrix::from_i64(&[
            vec![0, -2, 0, 0],
            vec![2, 0, 0, 0],
            vec![0, 0, 0, -2],
            vec![0, 0, 2, 0],
        ])
        .unwrap();
        let r = pi_degree_affine(&b, 4).unwrap();
        assert_eq!(r.invariant_factors, ints(&[2, 2, 2, 2]));
        assert_eq!(r.pi_degree, 4);
        assert_eq!(
            pi_degree_affine(&IntMatrix::zeros(4, 4), 7)
                .unwrap()
                .pi_degree,
            1
        );
    }

    #[test]
    fn int_matrix_json() {
        let a = IntMatrix::from_i64(&[vec![1, -2]]).unwrap();
        let j = serde_json::to_value(&a).unwrap();
        assert_eq!(
            j,
            serde_json::json!({"rows": 1, "cols": 2, "entries": [["1", "-2"]]})
        );
        let back: IntMatrix = serde_json::from_value(j).unwrap();
        assert_eq!(back, a);
    }
}
