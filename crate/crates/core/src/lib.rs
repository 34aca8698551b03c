// `!(x > 0.0)` style guards are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod acsfield;
pub mod chartop;
pub mod error;
pub mod linalg;
pub mod matcore;
pub mod retract;
pub mod sample;
pub mod spheregeo;
pub mod twistorsec;
pub mod verify;

pub use error::{Error, Result};
