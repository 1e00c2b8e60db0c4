//! Computing with finite categories and heteromorphisms.
//!
//! Hets are morphisms whose tail lives in one category and whose head lives in
//! another. They compose with homs on either side but never with each other, so
//! a family of het-sets is a bifunctor `Het: X^op × A → Set`. This crate builds
//! such bifunctors over finite categories given as explicit tables and then
//! searches, exhaustively, for the objects that represent them:
//!
//! - [`represent`] finds receiving universals `h_X: X ⇢ F(X)` and sending
//!   universals `e_A: G(A) ⇢ A`, factors hets through them and assembles left
//!   and right semiadjunctions with verified naturality.
//! - [`adjoint`] pairs two semiadjunctions into an adjunction, or recombines
//!   them into a brain functor that represents hets going both ways.
//! - [`gallery`] holds small fixtures for each scheme and [`cli`] exposes all
//!   of it through a line-oriented spec format and a command-line tool.

pub mod adjoint;
pub mod cli;
pub mod error;
pub mod fincat;
pub mod functor;
pub mod gallery;
pub mod het;
pub mod report;
pub mod represent;

pub use adjoint::{Adjunction, BrainFunctor};
pub use error::Error;
pub use fincat::{CategoryBuilder, FinCategory, Mor, Obj};
pub use functor::FinFunctor;
pub use het::{El, HetBifunctor, HetBuilder};
pub use report::{ValidationReport, Violation};
pub use represent::{Semiadjunction, Side, UniversalArrow};
