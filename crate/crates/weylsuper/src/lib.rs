//! Exact-arithmetic toolkit for the classical Weyl groups 𝔖_n, ℬ_n, 𝒟_n viewed
//! as supergroups.
//!
//! The crate builds the simple supermodules of these groups from standard
//! (bi)tableaux, maintains exact rational echelon bases of subspaces of the
//! group algebra, and machine-checks that the Lie superalgebra generated by
//! the reflections equals the derived subalgebra of the group algebra plus
//! the span of the reflection class sums.
//!
//! Module layout:
//! - [`wgroup`]: signed-permutation arithmetic, enumeration, conjugacy.
//! - [`galg`]: the ℤ₂-graded group algebra over exact rationals.
//! - [`closure`]: sparse echelon bases and superbracket span closures.
//! - [`combin`]: partition/bipartition combinatorics and family classification.
//! - [`tabrep`]: explicit module realizations, associators, supermodules.
//! - [`supermat`]: matrix Lie superalgebras 𝔤𝔩(m|n), 𝔮(n) and their derived parts.

pub mod closure;
pub mod combin;
pub mod galg;
pub mod supermat;
pub mod tabrep;
pub mod wgroup;

pub use closure::{EchelonBasis, Parity, SparseVec};
pub use combin::{Bipartition, FamilyCase, FamilyLabel, IrrFamily, Partition, SuperType, Unit};
pub use galg::{AlgebraElement, GroupAlgebra};
pub use wgroup::{GroupSpec, Kind, LinearCharacter, SignedPerm};
