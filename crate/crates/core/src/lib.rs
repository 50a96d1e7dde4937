//! Quasitrivial, symmetric, nondecreasing, associative n-ary operations on
//! finite chains: core value types, property deciders with replayable
//! witnesses, constructive representations (max-with-respect-to-an-ordering,
//! binary lift/reduction, g-maps, contour construction), a fixture gallery,
//! and exhaustive verification suites over small scales.

pub mod chain;
pub mod constructors;
pub mod error;
pub mod gallery;
pub mod gmap;
pub mod nop;
pub mod ordering;
pub mod properties;
pub mod report;
pub mod table;
pub mod verifier;

pub use chain::FiniteChain;
pub use error::{Error, Result};
pub use gmap::GMap;
pub use ordering::LinearOrdering;
pub use report::{PropertyKind, PropertyReport, Witness};
pub use table::{decode_tuple, encode_tuple, OpTable, TupleCode};
