//! Finite-skeleton models of universal spaces for finite group actions.
//!
//! The pipeline: classify extensions `1 -> pi -> S -> G -> 1` of a finite
//! group `G` by a finite group `pi` (via second cohomology for abelian `pi`),
//! build truncated Milnor joins `E_k S` with their free translation actions,
//! quotient them into universal skeleta with free `G`-actions, and recover
//! the extension back from the action through fundamental-group and
//! covering-space computations.
//!
//! Modules mirror the stages:
//! - [`group`]: finite groups as Cayley tables, homs, automorphisms, quotients;
//! - [`snf`]: exact integer Smith normal form;
//! - [`cohomology`]: bar-resolution cohomology `H^n(G, A; phi)` and `H^2`
//!   representatives;
//! - [`extensions`]: extensions as first-class values, factor sets,
//!   congruence and equivalence;
//! - [`delta`]: ordered semi-simplicial complexes, homology, products,
//!   barycentric subdivision;
//! - [`fgroup`]: edge-path presentations, Tietze moves, Todd-Coxeter;
//! - [`milnor`]: truncated joins and universal skeleta;
//! - [`actions`]: simplicial actions, quotients, classification, Borel
//!   construction, covering/conjugacy predicates.

pub mod actions;
pub mod caps;
pub mod cohomology;
pub mod delta;
pub mod extensions;
pub mod fgroup;
pub mod fixtures;
pub mod group;
pub mod json;
pub mod milnor;
mod modp;
pub mod snf;

pub use caps::Caps;
