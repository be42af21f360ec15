//! Products of central-element eigenvalues forced by the `z_i` eigenvalues.
//!
//! If `u z1 = ζ1 u` then `u x1^{k} y1^{k} = ∏_{j≤k} d_j u` with
//! `d_j = (q1^j ζ1 − 1)/(q1 − 1)`; the analogous telescoping for the second
//! pair uses `c_j = (q2^j ζ2 − ζ1)/(q2 − 1)`, or `(q2^j ζ2 − 1)/(q2 − 1)` in
//! the alternative algebra.

use crate::field::Scalar;
use crate::weylalg::AlgebraSpec;

fn telescoping(spec: &AlgebraSpec, e: i64, n: u32, zeta: &Scalar, shift: &Scalar) -> Scalar {
    let q = spec.zeta(e);
    let den = (&q - &spec.scalar(1)).inv().expect("q differs from 1");
    (1..=n as i64).fold(spec.scalar(1), |acc, j| {
        let num = &(&spec.zeta(e * j) * zeta) - shift;
        &acc * &(&num * &den)
    })
}

/// Value of `x1^{l1} y1^{l1}` on a `z1`-eigenvector with eigenvalue `zeta1`.
pub fn chi_x1y1_product(spec: &AlgebraSpec, zeta1: &Scalar) -> Scalar {
    telescoping(spec, spec.e1(), spec.l1(), zeta1, &spec.scalar(1))
}

/// Value of `x2^{l} y2^{l}` on a common `z1, z2`-eigenvector.
pub fn chi_x2y2_product(spec: &AlgebraSpec, zeta1: &Scalar, zeta2: &Scalar) -> Scalar {
    telescoping(spec, spec.e2(), spec.l(), zeta2, zeta1)
}

/// Alternative-algebra version of [`chi_x2y2_product`]; `z1` plays no role.
pub fn chi_x2y2_product_alt(spec: &AlgebraSpec, zeta2: &Scalar) -> Scalar {
    telescoping(spec, spec.e2(), spec.l(), zeta2, &spec.scalar(1))
}
