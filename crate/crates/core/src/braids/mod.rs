//! Framed braids and their images in iterant algebras.
//!
//! A framed braid `v·W` carries a Laurent vector `v` in the framing
//! variable `t` on the left of a braid word `W`. Multiplication slides the
//! right-hand framing up through `W` by the permutation of `W`, so the
//! algebra is an iterant algebra over the braid group acting through
//! `S_n`. Equality is equality of normal forms (framing on the left, word
//! freely reduced); no braid word problem is solved.
//!
//! [`pi_hat`] forgets crossings, [`rho`] sends `σ_k^{±1}` to `t^{±1}·T_k`,
//! and [`embed_su3`] composes `ρ` with the transpositions `P`, `Q` written
//! through the Gell-Mann ladder operators.

mod catalogue;
mod framed;
mod maps;
mod word;

pub use catalogue::{
    builtin_particles, electron, format_framing_entry, parse_framing_entry, particle, photon, positron, Catalogue,
    ParticleJson,
};
pub use framed::{slide_left, BraidAlgebraElement, FramedBraid, LaurentVector};
pub use maps::{
    all_letter_sequences, embed_su3, pi_hat, pi_hat_at, rho, rho_letter, rho_relation_checks, rho_with,
    symmetric_target, verify_factorization, word_of, FactorizationReport, FramingReading,
};
pub use word::{BraidWord, Letter};
