//! Cayley graphs of finite right groups `G x R_r`, graph products, and the
//! planarity and genus machinery used to classify their embeddings.

pub mod algebra;
pub mod cayley;
pub mod classify;
pub mod embeddings;
pub mod error;
pub mod graph;
pub mod groupspec;
pub mod iso;
pub mod products;
pub mod topology;
pub mod verify;

pub use error::{Error, Result};
