//! Combinatorics of signed surjections and type A/B Coxeter arrangements.
//!
//! The crate revolves around the category of finite sets equipped with an
//! involution having a unique fixed point, with equivariant surjections as
//! morphisms.  The canonical object with `n` free orbits is the integer
//! interval `[-n, n]` with the negation involution; its automorphism group is
//! the hyperoctahedral group `W_n`.  Everything downstream is exact:
//!
//! * [`category`] — objects, morphisms, enumeration, `W_n` actions and orbit
//!   classes of surjections out of `[-n, n]`;
//! * [`words`] — the ordered-surjection refinement, the subword/first-occurrence
//!   partial order on signed words, principal-ideal automata and their
//!   counting series;
//! * [`arrangements`] — flats of the type A/B reflection arrangements,
//!   contraction/localization isomorphism types, characteristic polynomials;
//! * [`osalg`] — Orlik–Solomon algebras with no-broken-circuit bases and the
//!   functorial restriction maps attached to surjections;
//! * [`kl`] — Kazhdan–Lusztig polynomials of the arrangements by recursion
//!   over isomorphism types, with a persistent cache;
//! * [`repr`] — exact character theory of `S_n` and `W_n`, permutation
//!   characters on flats, induction from stabilizers, decompositions;
//! * [`series`] — exact polynomial/rational-function arithmetic, fitting of
//!   rational generating functions with prescribed poles, residue extraction;
//! * [`verify`] — the named verification suites wired into the CLI.
//!
//! All arithmetic is over the integers or rationals; there is no floating
//! point anywhere in the crate.

pub mod arrangements;
pub mod category;
pub mod kl;
pub mod linalg;
pub mod osalg;
pub mod repr;
pub mod series;
pub mod verify;
pub mod words;

pub use num::{BigInt, BigRational};

/// Convenience constructor for an exact rational from an integer.
pub fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Convenience constructor for an exact rational `n/d`.
pub fn qr(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}
