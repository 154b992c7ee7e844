//! Torsion of finite based chain complexes over an exact field, the
//! change-of-basis law, the order-product identity over the integers,
//! isotypic decomposition of equivariant complexes, and twisted torsion of
//! presentation complexes.

pub mod complex;
pub mod equivariant;
pub mod field;
#[allow(clippy::module_inception)]
pub mod torsion;
pub mod turaev;
pub mod twisted;

pub use complex::{BasedChainComplex, IntChainComplex};
pub use equivariant::{subgroup_elements, EquivariantCell, EquivariantComplex, GroupAlgebraElem};
pub use field::{ExactField, FieldMatrix};
pub use torsion::{
    change_of_basis_factor, torsion, torsion_with_pivots, HomologyBases, Indeterminacy,
    PivotOrder, TorsionValue,
};
pub use turaev::{order_of_cokernel, turaev_order_check, TuraevCheck};
pub use twisted::twisted_presentation_torsion;
