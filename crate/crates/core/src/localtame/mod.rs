//! A formal model of a tame local field: the uniformiser `varpi` with
//! compatible roots `varpi^(1/m)`, the operators `sigma` and `phi`, the
//! elements `beta_s` and `phi_{q,s}`, their resolvends and determinants, and
//! the finite tame quotients `<sigma, phi>`.

mod local;
mod resolvend;
mod tame;

pub use local::{beta, parse_local, residue_characteristic, LocalElement};
pub use resolvend::{
    det_distinguishes_classes, det_resolvend_at, det_resolvend_cyclic, disc_valuation, phi_map,
    PhiMap, Resolvend,
};
pub use tame::{
    admissible_pairs, check_tame_hom, factorise_hom, FactorCheck, FactorisationReport,
    TameQuotient, Word,
};
