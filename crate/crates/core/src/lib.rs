//! Exact-arithmetic toolkit for commutative quotients of finite W-algebras
//! of type A and the combinatorics around them:
//!
//! - sparse multivariate polynomials over Q with Gröbner bases and a
//!   subalgebra-membership test (`poly`);
//! - partition combinatorics of nilpotent orbits in gl(N): induction,
//!   Richardson orbits, rigidity, sheets, Krull dimensions (`orbits`);
//! - the abelianized truncated shifted Yangian attached to a partition:
//!   free generators, reduction tables, the central series z(u), and the
//!   proper-center-image test (`abelian`);
//! - desk-scale restricted Lie algebras over F_p with induced modules,
//!   Whittaker spaces and simplicity certification (`modular`).

pub mod abelian;
pub mod modular;
pub mod orbits;
pub mod poly;
pub mod suite;
