//! Verifiers for every named statement.

pub mod dispatch;
pub mod forms;
pub mod limits;
pub mod parametric;
pub mod prior;
pub mod statement;
pub mod summation;

pub use dispatch::{describe, verify_instance, Arity, Instance};
pub use statement::{Check, StatementId, VerifyReport};
pub use summation::{verify_base_a, verify_base_bc, verify_jackson, verify_lemma_a, BaseWhich, JacksonParams};
pub use parametric::{
    verify_chain, verify_final_reduction, verify_lemma_b, verify_thm_a, verify_thm_aa, verify_thm_c, verify_thm_d,
    verify_wei_gg, verify_wei_hhh,
};
pub use limits::verify_limit;
pub use prior::{verify_prior, verify_wei_b};
