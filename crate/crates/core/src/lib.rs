//! Braid invariants and braid monodromy of polynomial loops.
//!
//! The crate is `no_std` (it needs `alloc`). It covers:
//!
//! * [`braid`] and [`garside`]: braid words, permutations and the word problem
//!   through the left-greedy Garside normal form;
//! * [`psl2z`] and [`thurston`]: the exact Thurston type, topological entropy and
//!   conjugacy test for 3-braids through `B_3 / <Δ²> ≅ PSL(2, Z)`, plus Burau
//!   lower bounds on entropy for any strand count;
//! * [`conformal`]: conformal modules of annuli and of 3-braid conjugacy classes,
//!   `M = π / (2h)`;
//! * [`monodromy`]: root tracking along sampled loops of monic polynomials, braid
//!   extraction, the discriminant index and the reducibility/solvability tests;
//! * [`homrep`]: the algebraic condition on homomorphisms `F_2 → B_3`.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod braid;
pub mod conformal;
pub mod garside;
pub mod homrep;
pub mod linalg;
pub mod monodromy;
pub mod psl2z;
pub mod thurston;

pub use braid::{BraidError, BraidWord, Permutation};
pub use conformal::{Annulus, ModuleValue};
pub use garside::GarsideNormalForm;
pub use thurston::{Entropy, ThurstonReport, ThurstonType};
