pub mod classify;
pub mod config;
pub mod error;
pub mod field;
pub mod moebius;
pub mod orbits;
pub mod poly;
pub mod ramify;
pub mod ratexpr;
pub mod shell;

pub use classify::{canonical_rep, classify, label_of, ClassLabel, Classification};
pub use error::{Error, Result};
pub use field::{Embedding, Fel, Field};
pub use moebius::{Moebius, PairAction};
pub use poly::{Poly, RootStrategy};
pub use ratexpr::{ProjPoint, RatExpr};
