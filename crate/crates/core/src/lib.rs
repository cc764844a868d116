//! Weight polytopes of simple Lie algebras: faces, their Weyl-group orbits
//! and the f-polynomial, computed from the extended Dynkin diagram and
//! checked against an exact convex-hull oracle.

pub mod caps;
pub mod dynkin;
pub mod error;
pub mod export;
pub mod faces;
pub mod linalg;
pub mod nodeset;
pub mod oracle;
pub mod rootsys;
pub mod verify;
pub mod weights;
pub mod weyl;

pub use caps::Caps;
pub use error::{Error, ErrorClass, Result};
pub use nodeset::NodeSet;
pub use rootsys::{root_system, CartanType, Family, RootSystem, Weight};
