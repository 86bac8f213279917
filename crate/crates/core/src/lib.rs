// `!(x > 0.0)` style checks are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod algebra;
pub mod groups;
pub mod words;
pub mod dynamics;
pub mod table;
pub mod growth;
