//! Segre classes of closed subschemes of projective varieties, pushed
//! forward to projective space, computed from degrees of linear projections
//! of successive generic hyperplane sections. On top of that: Chern-Schwartz-
//! MacPherson and Chern-Mather classes of hypersurfaces, polar classes,
//! Euclidean distance degrees, degrees of projections of determinantal loci
//! and intersection products.
//!
//! All Gröbner computations run over a prime field `F_p`; every random
//! choice is drawn from an explicitly seeded generator.

pub mod applications;
pub mod chow;
pub mod cli;
pub mod error;
pub mod gf;
pub mod groebner;
pub mod ideal;
pub mod poly;
pub mod segre_core;

pub use error::{Error, Result};
