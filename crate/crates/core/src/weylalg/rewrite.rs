//! Normal forms by naive word rewriting.
//!
//! Independent of the closed-form products in [`super::element`]: a word in
//! the generators is rewritten by repeatedly straightening its leftmost
//! out-of-order adjacent pair with one of the six defining relations.

use std::collections::BTreeMap;

use crate::field::Scalar;

use super::element::{AlgebraElement, Gen, PbwMonomial};
use super::spec::{AlgebraSpec, Flavor};

type Word = Vec<Gen>;

/// `g h` for `g > h` in PBW order, as `c · h g + rest`.
fn straighten(spec: &AlgebraSpec, g: Gen, h: Gen) -> (Scalar, Vec<(Word, Scalar)>) {
    let z = |e: i64| spec.zeta(e);
    let (e1, e2, el) = (spec.e1(), spec.e2(), spec.elam());
    let one = || spec.scalar(1);
    if spec.flavor() == Flavor::Affine4 {
        let ex = spec
            .affine_exponents()
            .expect("Affine4 spec carries its matrix");
        return (z(ex[g.index()][h.index()]), vec![]);
    }
    let alt = spec.flavor() == Flavor::AltA2;
    let x2y1 = if alt { el } else { e1 + el };
    match (g, h) {
        (Gen::X1, Gen::Y1) => (z(e1), vec![(vec![], one())]),
        (Gen::Y2, Gen::Y1) => (z(-el), vec![]),
        (Gen::Y2, Gen::X1) => (z(el), vec![]),
        (Gen::X2, Gen::Y1) => (z(x2y1), vec![]),
        (Gen::X2, Gen::X1) => (z(-x2y1), vec![]),
        (Gen::X2, Gen::Y2) => {
            let mut rest = vec![(vec![], one())];
            if !alt {
                rest.push((vec![Gen::Y1, Gen::X1], &z(e1) - &one()));
            }
            (z(e2), rest)
        }
        _ => unreachable!("pair ({g}, {h}) is already ordered"),
    }
}

/// PBW normal form of the product of the generators in `word`.
pub fn normal_form_word(spec: &AlgebraSpec, word: &[Gen]) -> AlgebraElement {
    let mut pending: BTreeMap<Word, Scalar> = BTreeMap::new();
    pending.insert(word.to_vec(), spec.scalar(1));
    let mut out = AlgebraElement::zero(spec);
    while let Some((w, c)) = pending.pop_last() {
        if c.is_zero() {
            continue;
        }
        let Some(i) = (0..w.len().saturating_sub(1)).find(|&i| w[i] > w[i + 1]) else {
            let mut e = [0u32; 4];
            for g in &w {
                e[g.index()] += 1;
            }
            out.add_term(PbwMonomial(e), c);
            continue;
        };
        let (coef, rest) = straighten(spec, w[i], w[i + 1]);
        let mut swapped = w.clone();
        swapped.swap(i, i + 1);
        push(&mut pending, swapped, &c * &coef);
        for (mid, k) in rest {
            let mut nw = w[..i].to_vec();
            nw.extend(mid);
            nw.extend_from_slice(&w[i + 2..]);
            push(&mut pending, nw, &c * &k);
        }
    }
    out
}

fn push(pending: &mut BTreeMap<Word, Scalar>, w: Word, c: Scalar) {
    match pending.get_mut(&w) {
        Some(x) => *x = &*x + &c,
        None => {
            pending.insert(w, c);
        }
    }
}

/// Product of two elements computed purely by rewriting concatenated words.
pub fn multiply_by_rewriting(a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
    let spec = a.spec();
    let mut out = AlgebraElement::zero(spec);
    for (ma, ca) in a.terms() {
        for (mb, cb) in b.terms() {
            let mut w = ma.word();
            w.extend(mb.word());
            let c = ca * cb;
            for (m, k) in normal_form_word(spec, &w).into_terms() {
                out.add_term(m, &c * &k);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weylalg::element::multiply;

    #[test]
    fn rewriting_agrees_with_closed_form_on_small_words() {
        for flavor in [Flavor::A2, Flavor::AltA2] {
            let spec = AlgebraSpec::new(flavor, 3, 3, 1, 2, 1).unwrap();
            for len in 0..=4usize {
                for code in 0..4usize.pow(len as u32) {
                    let word: Vec<Gen> = (0..len)
                        .map(|i| Gen::from_index(code / 4usize.pow(i as u32) % 4))
                        .collect();
                    let closed = word
                        .iter()
                        .fold(AlgebraElement::one(&spec), |acc, &g| acc.mul_generator(g));
                    assert_eq!(normal_form_word(&spec, &word), closed, "{flavor} {word:?}");
                }
            }
        }
    }

    #[test]
    fn affine_rewriting_is_pure_twist() {
        let ex = [[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]];
        let spec = AlgebraSpec::affine(2, 2, 1, 1, 0, ex).unwrap();
        let yx = normal_form_word(&spec, &[Gen::X1, Gen::Y1]);
        assert_eq!(yx.len(), 1);
        assert_eq!(yx.coeff(&PbwMonomial::new(1, 1, 0, 0)), spec.scalar(-1));
        let a = AlgebraElement::monomial(&spec, PbwMonomial::new(1, 1, 1, 0), spec.scalar(1));
        let b = AlgebraElement::monomial(&spec, PbwMonomial::new(0, 1, 0, 1), spec.scalar(1));
        assert_eq!(multiply(&a, &b).unwrap(), multiply_by_rewriting(&a, &b));
    }
}
