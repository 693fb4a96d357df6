//! Exact linear algebra over commutative rings, with machine checks of the
//! ternary determinantal identity det(A+B−AXB) = det(A+B−BXA) and its
//! relatives.

pub mod ring;
pub mod matrix;
pub mod identities;
pub mod random;
pub mod equivalence;
pub mod expr;
