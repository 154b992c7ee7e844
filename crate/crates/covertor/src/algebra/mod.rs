//! Exact arithmetic foundation: Laurent polynomials over the integers,
//! cyclotomic field elements, and integer matrix normal forms.

pub mod cyclotomic;
pub mod intmat;
pub mod laurent;
mod qpoly;

pub use cyclotomic::{euler_phi, CyclotomicNumber};
pub use intmat::{
    cokernel_order, kernel_basis, rank, smith_decomposition, smith_normal_form, IntMatrix,
    SmithDecomposition,
};
pub use laurent::LaurentPoly;
