//! Combinatorial model of the cluster category of type `A_n` on the diagonals
//! of a regular `(n + 3)`-gon.
//!
//! Indecomposable objects are diagonals, `Ext^1` is crossing, the suspension
//! rotates clockwise by one step, and the extension-closed subcategories are
//! the Ptolemy diagrams. On top of this the crate constructs the left and
//! right weak Auslander-Reiten triangles at Ext-projectives, performs
//! remove-and-replace mutation, and provides exhaustive checks of the
//! statements relating them.

pub mod document;
pub mod error;
pub mod fixtures;
pub mod hom;
pub mod mutation;
pub mod polygon;
pub mod ptolemy;
pub mod verify;
pub mod weak_ar;

pub use document::DiagramDocument;
pub use error::{Error, Result};
pub use hom::{ArQuiver, CrossingTriangles};
pub use mutation::{MutationDirection, MutationReport, TheoremCReport};
pub use polygon::{Arc, Diagonal, Polygon, Vertex};
pub use ptolemy::{Cell, CellDecomposition, CellKind, Diagram};
pub use weak_ar::{Direction, WeakArTriangle};
