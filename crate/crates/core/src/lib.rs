pub mod bits;
pub mod census;
pub mod cli;
pub mod codec;
pub mod complexity;
pub mod dovetail;
pub mod dyadic;
pub mod error;
pub mod machine;
pub mod prefix;
pub mod randomness;
pub mod tmprofiler;

pub use bits::{bits, BitString};
pub use error::{Error, Result};
