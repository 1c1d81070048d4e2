//! q-integers, q-shifted factorials, the series terms and simplex sums.

pub mod monomial;
pub mod product;
pub mod simplex;
pub mod terms;

pub use monomial::QMonomial;
pub use product::{Factor, ProductSum, QProduct};
pub use simplex::{cauchy_sum_with, simplex_size, simplex_sum, simplex_sum_with};
pub use terms::{q_integer, q_pochhammer, TermSpec};
