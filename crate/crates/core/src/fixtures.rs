//! Named diagrams used by examples, tests and the CLI.
//!
//! The 12-gon example lives on the odd vertices: its dissection cuts the
//! hexagon `11, 1, 3, 5, 7, 9` along `c = {3, 9}`, with the cell `9, 11, 1, 3`
//! a clique and every other cell empty.

use crate::polygon::Polygon;
use crate::ptolemy::Diagram;

/// Seven pairwise non-crossing dissecting diagonals of the 12-gon.
pub const DODECAGON_DISSECTING: [(usize, usize); 7] =
    [(3, 9), (1, 3), (1, 11), (7, 9), (5, 7), (3, 5), (9, 11)];

/// The two crossing diagonals of the clique cell `9, 11, 1, 3`.
pub const DODECAGON_CLIQUE: [(usize, usize); 2] = [(3, 11), (1, 9)];

/// The 12-gon diagram whose dissecting diagonal `{3, 9}` borders an empty
/// cell on one side and a four-vertex clique on the other.
pub fn dodecagon() -> Diagram {
    let p = Polygon::new(12).expect("valid size");
    Diagram::from_pairs(p, DODECAGON_DISSECTING.into_iter().chain(DODECAGON_CLIQUE))
        .expect("valid diagonals")
}

/// [`dodecagon`] with the clique cell emptied, so `{3, 9}` borders two empty cells.
pub fn dodecagon_emptied() -> Diagram {
    let p = Polygon::new(12).expect("valid size");
    Diagram::from_pairs(p, DODECAGON_DISSECTING).expect("valid diagonals")
}

/// The triangulation of the hexagon by the inner triangle `0, 2, 4`.
pub fn hexagon_triangulation() -> Diagram {
    let p = Polygon::new(6).expect("valid size");
    Diagram::from_pairs(p, [(0, 2), (2, 4), (0, 4)]).expect("valid diagonals")
}

/// The fan triangulation of the hexagon from vertex `0`.
pub fn hexagon_fan() -> Diagram {
    let p = Polygon::new(6).expect("valid size");
    Diagram::from_pairs(p, [(0, 2), (0, 3), (0, 4)]).expect("valid diagonals")
}
