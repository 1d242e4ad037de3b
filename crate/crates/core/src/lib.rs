//! Exact computation with corings over finite-dimensional algebras over
//! prime fields.
//!
//! The crate builds everything from structure constants and dense matrices
//! over F_p: algebras and their unit groups, bimodules and tensor quotients,
//! corings with their grouplike elements, coinvariant subrings and canonical
//! maps, the descent cohomology pointed sets D0/D1/N1, coring automorphism
//! groups, and the classical coring constructions (Sweedler corings of ring
//! extensions, duals of crossed products, comodule-algebra corings) together
//! with nonabelian group cohomology Z1/H1.
//!
//! All arithmetic is exact; every constructor validates its axioms
//! exhaustively and all enumerations are guarded by explicit budgets.

pub mod algebra;
pub mod bimodule;
pub mod budget;
pub mod constructions;
pub mod coring;
pub mod descent;
pub mod error;
pub mod fp;
pub mod group;
pub mod mat;
pub mod tensor;

pub use algebra::{AlgElem, FiniteAlgebra, Subring, UnitGroup};
pub use bimodule::{Bimodule, BimoduleMap};
pub use budget::Budget;
pub use coring::{Coring, CoringAut, CoringAutGroup, Grouplike};
pub use error::{Error, Result};
pub use group::{FiniteGroup, GroupAction};
pub use mat::Mat;
pub use tensor::TensorModule;
