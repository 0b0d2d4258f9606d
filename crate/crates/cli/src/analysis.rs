use serde::Serialize;

use ptolemy_core::ptolemy::{cell_decomposition, extension_closed_oracle, is_ptolemy};
use ptolemy_core::weak_ar::{ext_projectives, left_weak_ar, right_weak_ar};
use ptolemy_core::{Cell, CellKind, Diagonal, Diagram, WeakArTriangle};

/// Everything the explorer needs to render a diagram.
///
/// For a diagram that is not Ptolemy the triangle lists and
/// `mutable_two_empty_cells` are empty: the weak triangles are only defined
/// for extension-closed diagrams.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub ptolemy: bool,
    pub extension_closed: bool,
    pub dissecting: Vec<Diagonal>,
    pub cells: Vec<Cell>,
    pub ext_projectives: Vec<Diagonal>,
    pub weak_ar_left: Vec<WeakArTriangle>,
    pub weak_ar_right: Vec<WeakArTriangle>,
    pub mutable_two_empty_cells: Vec<Diagonal>,
}

pub fn analyze(diagram: &Diagram) -> AnalysisReport {
    let ptolemy = is_ptolemy(diagram);
    let extension_closed = extension_closed_oracle(diagram);
    assert_eq!(
        ptolemy, extension_closed,
        "Ptolemy condition and extension closure disagree on {diagram}"
    );

    let decomposition = cell_decomposition(diagram);
    let dissecting: Vec<Diagonal> = decomposition.dissecting.iter().copied().collect();
    let ext_projectives: Vec<Diagonal> = ext_projectives(diagram).into_iter().collect();

    let (weak_ar_left, weak_ar_right, mutable_two_empty_cells) = if ptolemy {
        let triangles = |f: fn(&Diagram, Diagonal) -> ptolemy_core::Result<WeakArTriangle>| {
            ext_projectives
                .iter()
                .map(|&d| f(diagram, d).expect("dissecting diagonals of a Ptolemy diagram"))
                .collect::<Vec<_>>()
        };
        let mutable = dissecting
            .iter()
            .copied()
            .filter(|&d| {
                decomposition
                    .cells_bordering(d)
                    .iter()
                    .all(|cell| cell.kind == CellKind::Empty)
            })
            .collect();
        (triangles(left_weak_ar), triangles(right_weak_ar), mutable)
    } else {
        (Vec::new(), Vec::new(), Vec::new())
    };

    AnalysisReport {
        ptolemy,
        extension_closed,
        dissecting,
        cells: decomposition.cells,
        ext_projectives,
        weak_ar_left,
        weak_ar_right,
        mutable_two_empty_cells,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ptolemy_core::fixtures;
    use ptolemy_core::Polygon;

    #[test]
    fn empty_diagram_is_one_empty_cell() {
        let report = analyze(&Diagram::empty(Polygon::new(7).unwrap()));
        assert!(report.ptolemy);
        assert_eq!(report.cells.len(), 1);
        assert_eq!(report.cells[0].kind, CellKind::Empty);
        assert_eq!(report.cells[0].vertices, (0..7).collect::<Vec<_>>());
        assert!(report.dissecting.is_empty());
    }

    #[test]
    fn dodecagon_mutable_diagonals_exclude_clique_neighbour() {
        let d = fixtures::dodecagon();
        let report = analyze(&d);
        assert_eq!(report.dissecting.len(), 7);
        assert_eq!(report.weak_ar_left.len(), 7);
        assert_eq!(report.weak_ar_right.len(), 7);
        let c = d.polygon().diagonal(3, 9).unwrap();
        assert!(!report.mutable_two_empty_cells.contains(&c));
        // the two other sides of the clique cell also border it
        for (u, v) in [(9, 11), (1, 3)] {
            let e = d.polygon().diagonal(u, v).unwrap();
            assert!(!report.mutable_two_empty_cells.contains(&e));
        }
    }

    #[test]
    fn crossing_pair_without_closure_is_rejected() {
        let p = Polygon::new(6).unwrap();
        let d = Diagram::from_pairs(p, [(0, 2), (1, 3)]).unwrap();
        let report = analyze(&d);
        assert!(!report.ptolemy);
        assert!(!report.extension_closed);
        assert!(report.weak_ar_left.is_empty());
    }
}
