//! Remove-and-replace mutation of a Ptolemy diagram at a dissecting diagonal,
//! and the checks identifying it with mutation with respect to the remaining
//! Ext-projectives.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::hom::{factors_from, factors_to, hom_dim_from, hom_dim_to};
use crate::polygon::Diagonal;
use crate::ptolemy::{cell_decomposition, extension_closed_oracle, is_ptolemy, CellKind, Diagram};
use crate::weak_ar::{
    ext_injectives, ext_projectives, left_weak_ar, right_weak_ar, summands_are_orthogonal,
    Direction, WeakArTriangle,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MutationDirection {
    /// Replace an Ext-projective by the first term of its left-weak triangle.
    Backward,
    /// Replace an Ext-injective by the third term of its right-weak triangle.
    Forward,
}

impl std::str::FromStr for MutationDirection {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "backward" => Ok(MutationDirection::Backward),
            "forward" => Ok(MutationDirection::Forward),
            other => Err(format!(
                "unknown direction `{other}`, expected backward or forward"
            )),
        }
    }
}

/// Outcome of approximating the removed diagonal by the remaining
/// Ext-projectives `D`.
///
/// Backward: `D`-cover of `c` and its cocone. Forward: `D`-envelope of `a` and
/// its cone.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremCReport {
    pub d_subcategory: Vec<Diagonal>,
    pub cover_summands: Vec<Diagonal>,
    pub cover_is_precover: bool,
    pub cover_is_right_minimal: bool,
    pub cover_in_d: bool,
    pub mu_of_removed: Diagonal,
    pub equals_inserted: bool,
    pub reason: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MutationReport {
    pub direction: MutationDirection,
    pub input: Diagram,
    pub removed: Diagonal,
    pub inserted: Diagonal,
    pub triangle: WeakArTriangle,
    pub result: Diagram,
    pub extension_closed: bool,
    pub criterion_two_empty_cells: bool,
    pub x_ext_projective_in_result: bool,
    pub reason: String,
    pub theorem_c: Option<TheoremCReport>,
}

/// Kinds and vertex lists of the two cells having `d` as a side, with the
/// reason the pair does or does not consist of two empty cells.
fn bordering_cells(diagram: &Diagram, d: Diagonal) -> (bool, String) {
    let dec = cell_decomposition(diagram);
    let cells = dec.cells_bordering(d);
    if let Some(cell) = cells.iter().find(|c| c.kind != CellKind::Empty) {
        let reason = match cell.kind {
            CellKind::Clique => format!(
                "clique cell with ≥ 4 vertices borders {d}: {:?}",
                cell.vertices
            ),
            _ => format!("mixed cell borders {d}: {:?}", cell.vertices),
        };
        return (false, reason);
    }
    (true, format!("{d} borders two empty cells"))
}

fn assemble(
    diagram: &Diagram,
    direction: MutationDirection,
    triangle: WeakArTriangle,
    theorem_c: impl FnOnce() -> Result<TheoremCReport>,
) -> Result<MutationReport> {
    let removed = triangle.c;
    let inserted = triangle.x;
    let result = diagram.replace(removed, inserted);
    let extension_closed = is_ptolemy(&result);
    assert_eq!(
        extension_closed,
        extension_closed_oracle(&result),
        "Ptolemy condition and extension closure disagree on {result}"
    );
    let (two_empty, reason) = bordering_cells(diagram, removed);
    let x_ext_projective_in_result = result.crossing_witness(inserted).is_none();
    let theorem_c = if two_empty { Some(theorem_c()?) } else { None };
    Ok(MutationReport {
        direction,
        input: diagram.clone(),
        removed,
        inserted,
        triangle,
        result,
        extension_closed,
        criterion_two_empty_cells: two_empty,
        x_ext_projective_in_result,
        reason,
        theorem_c,
    })
}

/// `C' = add((C \ c) ∪ x)` for the left-weak triangle `x -> B -> c -> Σx`.
pub fn backward_replace(diagram: &Diagram, c: Diagonal) -> Result<MutationReport> {
    let triangle = left_weak_ar(diagram, c)?;
    assemble(diagram, MutationDirection::Backward, triangle, || {
        d_cover_check(diagram, c)
    })
}

/// `C'' = add((C \ a) ∪ z)` for the right-weak triangle `a -> B -> z -> Σa`.
pub fn forward_replace(diagram: &Diagram, a: Diagonal) -> Result<MutationReport> {
    let triangle = right_weak_ar(diagram, a)?;
    assemble(diagram, MutationDirection::Forward, triangle, || {
        d_envelope_check(diagram, a)
    })
}

pub fn replace(
    diagram: &Diagram,
    d: Diagonal,
    direction: MutationDirection,
) -> Result<MutationReport> {
    match direction {
        MutationDirection::Backward => backward_replace(diagram, d),
        MutationDirection::Forward => forward_replace(diagram, d),
    }
}

fn summarize(
    d_sub: BTreeSet<Diagonal>,
    t: &WeakArTriangle,
    precover: bool,
    minimal: bool,
) -> TheoremCReport {
    let summands = t.middle();
    let in_d = summands.iter().all(|b| d_sub.contains(b));
    let reason = if !in_d {
        let outside: Vec<String> = summands
            .iter()
            .filter(|b| !d_sub.contains(b))
            .map(ToString::to_string)
            .collect();
        Some(format!(
            "summand {} is not Ext-projective",
            outside.join(", ")
        ))
    } else if !precover {
        Some("some map from D does not factor through the candidate".into())
    } else if !minimal {
        Some("candidate is not minimal".into())
    } else {
        None
    };
    TheoremCReport {
        d_subcategory: d_sub.into_iter().collect(),
        cover_summands: summands,
        cover_is_precover: precover,
        cover_is_right_minimal: minimal,
        cover_in_d: in_d,
        mu_of_removed: t.x,
        equals_inserted: in_d && precover && minimal,
        reason,
    }
}

/// Checks that `B -> c` from the left-weak triangle is a `D`-cover of `c`,
/// `D` being the Ext-projectives other than `c`; its cocone is then `x`.
pub fn d_cover_check(diagram: &Diagram, c: Diagonal) -> Result<TheoremCReport> {
    let t = left_weak_ar(diagram, c)?;
    let p = diagram.polygon();
    let mut d_sub = ext_projectives(diagram);
    d_sub.remove(&c);
    let summands = t.middle();
    let precover = d_sub
        .iter()
        .filter(|&&d| hom_dim_to(p, d, c) == 1)
        .all(|&d| {
            summands
                .iter()
                .any(|b| factors_to(p, d, c, b.arc()).expect("nonzero map"))
        });
    Ok(summarize(
        d_sub,
        &t,
        precover,
        summands_are_orthogonal(diagram.polygon(), t.b0, t.b1),
    ))
}

/// Dual of [`d_cover_check`]: `a -> B` from the right-weak triangle is a
/// `D`-envelope of `a`, whose cone is `z`.
pub fn d_envelope_check(diagram: &Diagram, a: Diagonal) -> Result<TheoremCReport> {
    let t = right_weak_ar(diagram, a)?;
    debug_assert_eq!(t.direction, Direction::Right);
    let p = diagram.polygon();
    let mut d_sub = ext_injectives(diagram);
    d_sub.remove(&a);
    let summands = t.middle();
    let preenvelope = d_sub
        .iter()
        .filter(|&&d| hom_dim_from(p, a, d) == 1)
        .all(|&d| {
            summands
                .iter()
                .any(|b| factors_from(p, a, d, b.arc()).expect("nonzero map"))
        });
    Ok(summarize(
        d_sub,
        &t,
        preenvelope,
        summands_are_orthogonal(diagram.polygon(), t.b0, t.b1),
    ))
}
