//! Link input as braid-word closures, Wirtinger presentations, Fox calculus
//! and multivariable Alexander polynomials of links and their sublinks.

mod alexander;
mod braid;
mod fox;
mod wirtinger;

pub use alexander::{alexander_polynomial, build_alexander_data, AlexanderData};
pub use braid::{BraidWord, LinkDiagram};
pub use fox::fox_derivative;
pub use wirtinger::{wirtinger, Word, WirtingerPresentation};
