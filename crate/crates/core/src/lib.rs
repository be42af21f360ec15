//! Exact computations with rank-two quantized Weyl algebras at roots of unity.
//!
//! Scalars live in a cyclotomic field `Q(ζ_n)` ([`field`]); the algebras are
//! presented in PBW normal form ([`weylalg`]); PI degrees come from Smith
//! normal forms of exponent matrices ([`intlinalg`]); simple modules are
//! built as explicit matrices ([`repbuild`]) and checked ([`repverify`]).

pub mod error;
pub mod field;
pub mod intlinalg;
pub mod matrix;
pub mod par;
pub mod repbuild;
pub mod repverify;
pub mod sample;
pub mod weylalg;

pub use error::{Error, Result};
pub use field::{field_new, FieldContext, Scalar};
pub use matrix::Mat;
pub use repbuild::{build_family, Family, FamilyParams, Representation};
pub use weylalg::{AlgebraElement, AlgebraSpec, Flavor, Gen, PbwMonomial};
