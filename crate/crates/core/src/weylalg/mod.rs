//! Rank-two quantized Weyl algebras and quantum affine 4-spaces in PBW form.

mod element;
mod lemmas;
mod parse;
mod rewrite;
mod spec;

pub use element::{
    commutes, generator, is_central, multiply, right_mul_generator, z_element, AlgebraElement, Gen,
    PbwMonomial,
};
pub use lemmas::{verify_lemma_identities, IdentityCheck, LemmaReport};
pub use parse::parse_element;
pub use rewrite::{multiply_by_rewriting, normal_form_word};
pub use spec::{AlgebraSpec, Factorization, Flavor};
