//! Exact Hodge-number bookkeeping for elliptic fibrations in Weierstrass
//! form and the blown-up projective bundles that contain them.

pub mod bases;
pub mod catalog;
pub mod cli;
pub mod error;
pub mod ltp;
pub mod motive;
pub mod toric;
