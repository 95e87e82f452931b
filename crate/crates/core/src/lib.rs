//! Lexicographic codes over finite principal left ideal rings.

pub mod greedy;
pub mod lexspace;
pub mod oracle;
pub mod order;
pub mod pipeline;
pub mod props;
pub mod registry;
pub mod ring;

pub use lexspace::{Ambient, LexSpace, OrderedBasis, Vector};
pub use order::{OrderSpec, RingOrder};
pub use props::{Property, WeightFunction, WeightKind, ZeroPolicy};
pub use ring::{Elem, FiniteRing, IdealLattice, PrincipalIdeal, RingError, RingFamily};
