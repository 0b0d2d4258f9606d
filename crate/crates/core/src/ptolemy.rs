//! Ptolemy diagrams: sets of diagonals closed under completing crossing pairs
//! to their quadrilateral. They model the extension-closed additive
//! subcategories of the cluster category.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hom::crossing_triangles;
use crate::polygon::{Diagonal, Polygon, Vertex};

/// A finite set of diagonals of one polygon, standing for the additive
/// subcategory they generate.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagram {
    polygon: Polygon,
    diagonals: BTreeSet<Diagonal>,
}

impl Diagram {
    pub fn empty(polygon: Polygon) -> Self {
        Diagram {
            polygon,
            diagonals: BTreeSet::new(),
        }
    }

    /// Builds a diagram from vertex pairs, rejecting anything that is not a
    /// diagonal of `polygon`. Duplicates collapse.
    pub fn from_pairs<I>(polygon: Polygon, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let diagonals = pairs
            .into_iter()
            .map(|(u, v)| polygon.diagonal(u, v))
            .collect::<Result<_>>()?;
        Ok(Diagram { polygon, diagonals })
    }

    pub fn from_diagonals<I: IntoIterator<Item = Diagonal>>(
        polygon: Polygon,
        diagonals: I,
    ) -> Self {
        let diagonals: BTreeSet<_> = diagonals.into_iter().collect();
        debug_assert!(diagonals.iter().all(|d| {
            let (u, v) = d.endpoints();
            polygon.is_diagonal(u, v)
        }));
        Diagram { polygon, diagonals }
    }

    /// The clique on the whole polygon.
    pub fn full(polygon: Polygon) -> Self {
        Diagram::from_diagonals(polygon, polygon.all_diagonals())
    }

    pub fn polygon(&self) -> &Polygon {
        &self.polygon
    }

    pub fn diagonals(&self) -> &BTreeSet<Diagonal> {
        &self.diagonals
    }

    pub fn len(&self) -> usize {
        self.diagonals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diagonals.is_empty()
    }

    pub fn contains(&self, d: Diagonal) -> bool {
        self.diagonals.contains(&d)
    }

    /// Membership of `{u, v}` in the diagram, counting polygon edges (zero
    /// objects) as members.
    pub fn contains_or_edge(&self, u: Vertex, v: Vertex) -> bool {
        match self.polygon.diagonal(u, v) {
            Ok(d) => self.contains(d),
            Err(_) => u != v,
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = Diagonal> + '_ {
        self.diagonals.iter().copied()
    }

    pub fn with(&self, d: Diagonal) -> Self {
        let mut out = self.clone();
        out.diagonals.insert(d);
        out
    }

    pub fn without(&self, d: Diagonal) -> Self {
        let mut out = self.clone();
        out.diagonals.remove(&d);
        out
    }

    /// Remove-and-replace: `(self \ {removed}) ∪ {inserted}`.
    pub fn replace(&self, removed: Diagonal, inserted: Diagonal) -> Self {
        let mut out = self.without(removed);
        out.diagonals.insert(inserted);
        out
    }

    /// The image of every diagonal under the suspension.
    pub fn suspended(&self) -> Self {
        let p = self.polygon;
        Diagram::from_diagonals(p, self.iter().map(|d| p.suspend_diagonal(d)))
    }

    /// A member crossing `d`, if one exists.
    pub fn crossing_witness(&self, d: Diagonal) -> Option<Diagonal> {
        self.iter().find(|&e| self.polygon.crosses(d, e))
    }

    fn crossing_pairs(&self) -> impl Iterator<Item = (Diagonal, Diagonal)> + '_ {
        let p = self.polygon;
        self.diagonals.iter().enumerate().flat_map(move |(i, &a)| {
            self.diagonals
                .iter()
                .skip(i + 1)
                .filter(move |&&b| p.crosses(a, b))
                .map(move |&b| (a, b))
        })
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: [", self.polygon)?;
        for (k, d) in self.diagonals.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{d}")?;
        }
        f.write_str("]")
    }
}

/// The genuine diagonals among the four arcs joining an endpoint of `a` to an
/// endpoint of `b`.
fn connectors(polygon: &Polygon, a: Diagonal, b: Diagonal) -> impl Iterator<Item = Diagonal> + '_ {
    let (a0, a1) = a.endpoints();
    let (b0, b1) = b.endpoints();
    [(a0, b0), (a0, b1), (a1, b0), (a1, b1)]
        .into_iter()
        .filter_map(move |(u, v)| polygon.diagonal(u, v).ok())
}

pub fn is_ptolemy(diagram: &Diagram) -> bool {
    ptolemy_violation(diagram).is_none()
}

/// A crossing pair of members and a connecting diagonal missing from the
/// diagram, if there is one.
pub fn ptolemy_violation(diagram: &Diagram) -> Option<(Diagonal, Diagonal, Diagonal)> {
    let p = diagram.polygon;
    diagram.crossing_pairs().find_map(|(a, b)| {
        connectors(&p, a, b)
            .find(|&d| !diagram.contains(d))
            .map(|missing| (a, b, missing))
    })
}

/// The smallest Ptolemy diagram containing `diagram`.
pub fn ptolemy_closure(diagram: &Diagram) -> Diagram {
    let p = diagram.polygon;
    let mut current = diagram.clone();
    loop {
        let missing: Vec<Diagonal> = current
            .crossing_pairs()
            .flat_map(|(a, b)| connectors(&p, a, b).collect::<Vec<_>>())
            .filter(|d| !current.contains(*d))
            .collect();
        if missing.is_empty() {
            return current;
        }
        current.diagonals.extend(missing);
    }
}

/// Extension closure checked through the triangles of crossing pairs: the
/// middle terms of both non-split extensions between any two crossing
/// members must be members.
pub fn extension_closed_oracle(diagram: &Diagram) -> bool {
    let p = diagram.polygon;
    diagram.crossing_pairs().all(|(a, c)| {
        let t = crossing_triangles(&p, a, c).expect("pair crosses");
        t.nonzero_b(&p)
            .into_iter()
            .chain(t.nonzero_s(&p))
            .all(|m| diagram.contains(m))
    })
}

/// Members crossed by no other member.
pub fn dissecting_diagonals(diagram: &Diagram) -> BTreeSet<Diagonal> {
    diagram
        .iter()
        .filter(|&d| diagram.crossing_witness(d).is_none())
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CellKind {
    Empty,
    Clique,
    /// Some but not all internal diagonals are members; never occurs for a
    /// Ptolemy diagram.
    Mixed,
}

impl fmt::Display for CellKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CellKind::Empty => "empty",
            CellKind::Clique => "clique",
            CellKind::Mixed => "mixed",
        })
    }
}

/// A face of the polygon cut along pairwise non-crossing diagonals.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Cell {
    /// Anticlockwise, starting from the smallest index.
    pub vertices: Vec<Vertex>,
    pub kind: CellKind,
}

impl Cell {
    /// Pairs of cell vertices that are not consecutive on the cell boundary.
    pub fn internal_diagonals(&self) -> Vec<Diagonal> {
        let m = self.vertices.len();
        let mut out = Vec::new();
        for i in 0..m {
            for j in i + 2..m {
                if i == 0 && j == m - 1 {
                    continue;
                }
                out.push(Diagonal::sorted(self.vertices[i], self.vertices[j]));
            }
        }
        out
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        self.vertices.contains(&v)
    }

    /// Whether `{u, v}` is a side of this cell.
    pub fn has_side(&self, u: Vertex, v: Vertex) -> bool {
        let m = self.vertices.len();
        (0..m).any(|k| {
            let (a, b) = (self.vertices[k], self.vertices[(k + 1) % m]);
            (a == u && b == v) || (a == v && b == u)
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CellDecomposition {
    pub dissecting: BTreeSet<Diagonal>,
    pub cells: Vec<Cell>,
}

impl CellDecomposition {
    /// The two cells having `d` as a side.
    pub fn cells_bordering(&self, d: Diagonal) -> Vec<&Cell> {
        let (u, v) = d.endpoints();
        self.cells.iter().filter(|c| c.has_side(u, v)).collect()
    }

    pub fn has_mixed_cell(&self) -> bool {
        self.cells.iter().any(|c| c.kind == CellKind::Mixed)
    }
}

/// Splits the polygon along pairwise non-crossing `cuts` into vertex cycles.
pub fn faces(polygon: &Polygon, cuts: &BTreeSet<Diagonal>) -> Vec<Vec<Vertex>> {
    let mut faces: Vec<Vec<Vertex>> = vec![polygon.vertices().collect()];
    for d in cuts {
        let (u, v) = d.endpoints();
        let k = faces
            .iter()
            .position(|f| f.contains(&u) && f.contains(&v))
            .expect("non-crossing cuts always share a face");
        let face = faces.swap_remove(k);
        // faces stay sorted ascending, which is anticlockwise from the minimum
        let (inside, outside): (Vec<_>, Vec<_>) = face.iter().partition(|&&w| w >= u && w <= v);
        let mut rest: Vec<Vertex> = outside;
        rest.extend([u, v]);
        rest.sort_unstable();
        faces.push(inside);
        faces.push(rest);
    }
    faces.sort();
    faces
}

fn classify(diagram: &Diagram, vertices: Vec<Vertex>) -> Cell {
    let mut cell = Cell {
        vertices,
        kind: CellKind::Empty,
    };
    let internal = cell.internal_diagonals();
    let members = internal.iter().filter(|&&d| diagram.contains(d)).count();
    cell.kind = if members == 0 {
        CellKind::Empty
    } else if members == internal.len() {
        CellKind::Clique
    } else {
        CellKind::Mixed
    };
    cell
}

pub fn cell_decomposition(diagram: &Diagram) -> CellDecomposition {
    let dissecting = dissecting_diagonals(diagram);
    let cells = faces(&diagram.polygon, &dissecting)
        .into_iter()
        .map(|f| classify(diagram, f))
        .collect();
    CellDecomposition { dissecting, cells }
}

/// Largest polygon for which exhaustive enumeration is offered by default.
pub const DEFAULT_ENUMERATION_BOUND: usize = 8;

/// Every set of pairwise non-crossing diagonals of `polygon`.
pub fn dissections(polygon: &Polygon) -> Vec<BTreeSet<Diagonal>> {
    fn extend(
        p: &Polygon,
        all: &[Diagonal],
        from: usize,
        current: &mut Vec<Diagonal>,
        out: &mut Vec<BTreeSet<Diagonal>>,
    ) {
        out.push(current.iter().copied().collect());
        for k in from..all.len() {
            let d = all[k];
            if current.iter().all(|&e| !p.crosses(d, e)) {
                current.push(d);
                extend(p, all, k + 1, current, out);
                current.pop();
            }
        }
    }
    let all = polygon.all_diagonals();
    let mut out = Vec::new();
    extend(polygon, &all, 0, &mut Vec::new(), &mut out);
    out
}

/// All Ptolemy diagrams of `polygon`, built by gluing empty cells and cliques
/// over every dissection. Sorted and free of duplicates.
pub fn enumerate_ptolemy(polygon: &Polygon, bound: usize) -> Result<Vec<Diagram>> {
    if polygon.size() > bound {
        return Err(Error::SizeLimit {
            size: polygon.size(),
            max: bound,
        });
    }
    let mut out = BTreeSet::new();
    for cuts in dissections(polygon) {
        let big: Vec<Vec<Diagonal>> = faces(polygon, &cuts)
            .into_iter()
            .filter(|f| f.len() > 3)
            .map(|f| {
                Cell {
                    vertices: f,
                    kind: CellKind::Clique,
                }
                .internal_diagonals()
            })
            .collect();
        for mask in 0u64..(1 << big.len()) {
            let mut diagonals = cuts.clone();
            for (k, internal) in big.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    diagonals.extend(internal.iter().copied());
                }
            }
            out.insert(Diagram {
                polygon: *polygon,
                diagonals,
            });
        }
    }
    Ok(out.into_iter().collect())
}

/// Every subset of diagonals that passes [`is_ptolemy`]; `2^(N(N-3)/2)` work.
pub fn brute_force_ptolemy(polygon: &Polygon) -> Vec<Diagram> {
    let all = polygon.all_diagonals();
    assert!(
        all.len() < 32,
        "brute force is only feasible for small polygons"
    );
    let mut out: Vec<Diagram> = (0u32..(1 << all.len()))
        .map(|mask| subset(polygon, &all, mask as u64))
        .filter(is_ptolemy)
        .collect();
    out.sort();
    out
}

/// The diagram selecting `all[k]` for every set bit `k` of `mask`.
pub fn subset(polygon: &Polygon, all: &[Diagonal], mask: u64) -> Diagram {
    let diagonals = all
        .iter()
        .enumerate()
        .filter(|(k, _)| mask >> k & 1 == 1)
        .map(|(_, d)| *d)
        .collect();
    Diagram {
        polygon: *polygon,
        diagonals,
    }
}
