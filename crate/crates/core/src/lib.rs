//! Reed-Solomon coding over GF(2^m), the QR byte-mode pipeline, and analysis
//! of selective bit-flip manipulation of QR codewords.

pub mod attack;
pub mod codes;
pub mod error;
pub mod gf;
pub mod poly;
pub mod qr;
pub mod rs;

pub use error::{Error, Result};
pub use gf::{Element, Field};
pub use poly::Poly;
pub use rs::{RsCodeword, RsParams};
