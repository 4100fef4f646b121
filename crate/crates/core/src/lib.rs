//! Schur-function calculus for differences of vector bundles: super Schur
//! functions, basis conversions, a numerical-positivity certifier, and a
//! verified corpus of Thom-polynomial expansions.

pub mod basis;
pub mod corpus;
pub mod error;
pub mod parse;
pub mod partition;
pub mod poly;
pub mod positivity;
pub mod schur;

pub use basis::{
    expand_chern_polynomial, expand_root_polynomial, expand_to_schur, schur_multiply,
    SchurExpansion,
};
pub use corpus::{
    load_corpus, verify_corpus, verify_embedded, CheckResult, ThomRecord, VerificationReport,
    EMBEDDED_CORPUS,
};
pub use error::Error;
pub use parse::{parse_expr, ParsedExpr};
pub use partition::{partitions_of, Partition};
pub use poly::{Coeff, Monomial, Poly, VarKind, Variable};
pub use positivity::{certify_expansion, certify_seg_polynomial, PositivityVerdict, Witness};
pub use schur::{
    check_suspension_stability, dualize, schur_super, schur_super_chern, BundleSpec, VirtualPair,
};
