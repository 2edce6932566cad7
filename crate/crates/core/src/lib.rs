//! Finite unital rings as Cayley tables, with substructure lattices,
//! conductor ideals of ring extensions, primality tests and quotient modules.
//!
//! Elements are dense indices `0..order`; every structure lives in tables.
//! Subsets carry the identity of their parent ring.

pub mod bitset;
pub mod construct;
pub mod error;
pub mod ideal;
pub mod iso;
pub mod module;
pub mod ring;
pub mod subset;
pub mod substructures;

pub use error::{Error, Result};
pub use ring::{Caps, RingTable};
pub use subset::Subset;
pub use substructures::{Scope, Side};
