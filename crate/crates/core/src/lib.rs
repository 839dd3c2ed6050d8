//! Exact characters, filtrations and equivariant K-theory classes attached
//! to large Schubert varieties in the wonderful compactification of an
//! adjoint semisimple group.
//!
//! Modules, bottom-up:
//! - [`rootdata`]: Cartan data, weights, dominance.
//! - [`weyl`]: Weyl group tables, Bruhat order, Demazure product.
//! - [`charalg`]: the group algebras `ℤ[X]`, `ℤ[X ⊕ X]` and the Weyl oracle.
//! - [`demazure`]: Demazure operators, `ch P(ν)`, `ch Q(ν)`.
//! - [`largeschubert`]: `χ(Z(w), λ)`, `c_λ`, `ch M(μ)`, filtration layers and
//!   the identity checks built on them.
//! - [`ktheory`]: fixed-point localization on `G/B`.

pub mod charalg;
pub mod demazure;
pub mod error;
pub mod ktheory;
pub mod largeschubert;
pub mod rootdata;
pub mod verify;
pub mod weyl;

pub use charalg::{BiCharacter, Character};
pub use error::{Error, Result};
pub use rootdata::{CartanType, RootSystem, Weight};
pub use weyl::{ElementId, WeylGroup};
