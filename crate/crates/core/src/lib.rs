//! Exact computations with associative bilinear forms on Frobenius algebras
//! over ℚ and GF(p): Nakayama automorphisms, twisted forms, σ-norms, root
//! lifting, and necessary conditions for homothety.

pub mod algebra;
pub mod corpus;
pub mod error;
pub mod format;
pub mod frobenius;
pub mod homothety;
pub mod linalg;
pub mod norms;
pub mod scalar;

pub use algebra::{verify_morphism, Algebra, AlgebraData, Element, LocalData};
pub use error::{Error, Result};
pub use format::{parse_algebra_file, write_algebra_file, AlgebraFile};
pub use frobenius::{
    automorphism_order, find_frobenius_functional, form_from_functional, functional_from_form, inner_automorphism,
    inner_decompose, inner_order, nakayama, transpose, transpose_power, twist, Form, Functional,
};
pub use homothety::{
    conjecture_probe, det_class, homothety_probe, nakayama_similarity, symmetric_witness, unipotence_check,
    verify_witness, HomothetyWitness, ObstructionReason, ObstructionReport, ProbeConfig, Verdict,
};
pub use linalg::{is_similar, Matrix, Polynomial};
pub use norms::{central_square_root, fixed_nth_root, norm, partial_norm, straighten_form, NormContext};
pub use scalar::{nth_root_in_k, square_class, FieldElement, FieldSpec, SquareClassRep};
