//! Structural predicates and certificates: non-nilpotent subgroups and
//! Schmidt subgroups, supersolvability, Dedekind and T-groups, Frobenius
//! recognition, direct decompositions and the F(p, d) decomposition of
//! G/Z_∞(G).

mod decomposition;
mod frobenius;
mod mnn;
mod supersolvable;

pub use decomposition::{
    direct_decomposition, ved_decomposition, VedCertificate, VedFactor, VedStatus,
};
pub use frobenius::{frobenius_recognize, ExponentCheck, FrobeniusCertificate};
pub use mnn::{
    all_schmidt_subnormal, dedekind_tgroup, is_schmidt, mnn_profile, nilpotency_flags, MnnProfile,
};
pub use supersolvable::{
    greedy_prime_chain, huppert_criterion, is_supersolvable, SupersolvableVerdict,
};
