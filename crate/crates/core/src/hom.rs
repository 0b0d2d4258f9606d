//! Morphisms between indecomposables: Hom and Ext dimensions, factoring
//! criteria, the triangles attached to a crossing pair, and the
//! Auslander-Reiten quiver.
//!
//! Every Hom space between indecomposables of the model is at most
//! one-dimensional, so dimensions are reported as `0` or `1` and morphisms are
//! never materialised beyond "exists" and "factors through".

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::polygon::{Arc, Diagonal, Polygon, Vertex};

/// `dim Ext^1(a, c)`: one exactly when the diagonals cross.
pub fn ext1_dim(polygon: &Polygon, a: Diagonal, c: Diagonal) -> u8 {
    polygon.crosses(a, c) as u8
}

/// Endpoints of the target of a nonzero `x -> y`, labelled relative to the
/// source `x = {x0, x1}` with `x0 < x1` numerically.
///
/// `y0` is the endpoint in `[x0, x1--]` and `y1` the one in `[x1, x0--]`.
pub fn hom_from(polygon: &Polygon, x: Diagonal, y: Diagonal) -> Option<(Vertex, Vertex)> {
    let (x0, x1) = x.endpoints();
    let first = |v| polygon.in_interval(v, x0, polygon.step(x1, -2));
    let second = |v| polygon.in_interval(v, x1, polygon.step(x0, -2));
    let (u, v) = y.endpoints();
    if first(u) && second(v) {
        Some((u, v))
    } else if first(v) && second(u) {
        Some((v, u))
    } else {
        None
    }
}

/// Endpoints of the source of a nonzero `z -> x`, labelled relative to the
/// target: `z0` lies in `[x0++, x1]` and `z1` in `[x1++, x0]`.
pub fn hom_to(polygon: &Polygon, z: Diagonal, x: Diagonal) -> Option<(Vertex, Vertex)> {
    let (x0, x1) = x.endpoints();
    let first = |v| polygon.in_interval(v, polygon.step(x0, 2), x1);
    let second = |v| polygon.in_interval(v, polygon.step(x1, 2), x0);
    let (u, v) = z.endpoints();
    if first(u) && second(v) {
        Some((u, v))
    } else if first(v) && second(u) {
        Some((v, u))
    } else {
        None
    }
}

/// `dim Hom(x, y)` by the outgoing-interval criterion.
pub fn hom_dim_from(polygon: &Polygon, x: Diagonal, y: Diagonal) -> u8 {
    hom_from(polygon, x, y).is_some() as u8
}

/// `dim Hom(z, x)` by the incoming-interval criterion.
pub fn hom_dim_to(polygon: &Polygon, z: Diagonal, x: Diagonal) -> u8 {
    hom_to(polygon, z, x).is_some() as u8
}

/// Whether the unordered pair `s` has one endpoint in `[p0, q0]` and the
/// other in `[p1, q1]`, and is a genuine diagonal.
fn straddles(
    polygon: &Polygon,
    s: Arc,
    (p0, q0): (Vertex, Vertex),
    (p1, q1): (Vertex, Vertex),
) -> bool {
    if polygon.is_zero(s) {
        return false;
    }
    let (s0, s1) = s.endpoints();
    let left = |v| polygon.in_interval(v, p0, q0);
    let right = |v| polygon.in_interval(v, p1, q1);
    (left(s0) && right(s1)) || (left(s1) && right(s0))
}

/// Whether the nonzero morphism `x -> y` factors through `s`.
pub fn factors_from(polygon: &Polygon, x: Diagonal, y: Diagonal, s: Arc) -> Result<bool> {
    let (y0, y1) = hom_from(polygon, x, y)
        .ok_or_else(|| Error::PreconditionViolation(format!("Hom({x}, {y}) is zero")))?;
    let (x0, x1) = x.endpoints();
    Ok(straddles(polygon, s, (x0, y0), (x1, y1)))
}

/// Whether the nonzero morphism `z -> x` factors through `s`.
pub fn factors_to(polygon: &Polygon, z: Diagonal, x: Diagonal, s: Arc) -> Result<bool> {
    let (z0, z1) = hom_to(polygon, z, x)
        .ok_or_else(|| Error::PreconditionViolation(format!("Hom({z}, {x}) is zero")))?;
    let (x0, x1) = x.endpoints();
    Ok(straddles(polygon, s, (z0, x1), (z1, x0)))
}

/// The two triangles completing the nonzero maps `c -> Σa` and `a -> Σc` of a
/// crossing pair:
///
/// ```text
/// a -> b1 ⊕ b2 -> c -> Σa
/// c -> s1 ⊕ s2 -> a -> Σc
/// ```
///
/// The four middle arcs are the sides of the quadrilateral spanned by the
/// endpoints of `a` and `c`; sides that are polygon edges are zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CrossingTriangles {
    pub a: Diagonal,
    pub c: Diagonal,
    pub b_pair: [Arc; 2],
    pub s_pair: [Arc; 2],
}

/// Which of the two triangles of a crossing pair is meant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TriangleRoute {
    /// `a -> b1 ⊕ b2 -> c -> Σa`
    AToC,
    /// `c -> s1 ⊕ s2 -> a -> Σc`
    CToA,
}

impl CrossingTriangles {
    pub fn nonzero_b(&self, polygon: &Polygon) -> Vec<Diagonal> {
        self.b_pair
            .iter()
            .filter_map(|&b| polygon.nonzero(b))
            .collect()
    }

    pub fn nonzero_s(&self, polygon: &Polygon) -> Vec<Diagonal> {
        self.s_pair
            .iter()
            .filter_map(|&s| polygon.nonzero(s))
            .collect()
    }
}

pub fn crossing_triangles(
    polygon: &Polygon,
    a: Diagonal,
    c: Diagonal,
) -> Result<CrossingTriangles> {
    if !polygon.crosses(a, c) {
        return Err(Error::NotCrossing { a, c });
    }
    let (c0, c1) = c.endpoints();
    // Endpoints alternate around the polygon, so the endpoint met just before
    // a_k when walking anticlockwise is an endpoint of c.
    let pair = |ak: Vertex| -> (Arc, Arc) {
        let dist = |cj: Vertex| polygon.interval(cj, ak).count();
        let (near, far) = if dist(c0) < dist(c1) {
            (c0, c1)
        } else {
            (c1, c0)
        };
        let b = polygon
            .arc(ak, near)
            .expect("crossing endpoints are distinct");
        let s = polygon
            .arc(ak, far)
            .expect("crossing endpoints are distinct");
        (b, s)
    };
    let (a0, a1) = a.endpoints();
    let (b1, s1) = pair(a0);
    let (b2, s2) = pair(a1);
    Ok(CrossingTriangles {
        a,
        c,
        b_pair: [b1, b2],
        s_pair: [s1, s2],
    })
}

/// Whether the chosen triangle is an Auslander-Reiten triangle, i.e. its first
/// term is the suspension of its third.
pub fn is_ar_triangle(polygon: &Polygon, t: &CrossingTriangles, route: TriangleRoute) -> bool {
    match route {
        TriangleRoute::AToC => t.a == polygon.suspend_diagonal(t.c),
        TriangleRoute::CToA => t.c == polygon.suspend_diagonal(t.a),
    }
}

/// Middle terms of the Auslander-Reiten triangle `Σa -> m -> a -> Σ²a`.
pub fn ar_mesh(polygon: &Polygon, a: Diagonal) -> Vec<Diagonal> {
    let t = crossing_triangles(polygon, polygon.suspend_diagonal(a), a)
        .expect("a diagonal always crosses its suspension");
    t.nonzero_b(polygon)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ArQuiver {
    pub polygon_size: usize,
    pub nodes: Vec<Diagonal>,
    pub arrows: Vec<(Diagonal, Diagonal)>,
}

/// Irreducible maps rotate one endpoint a single step anticlockwise.
pub fn ar_quiver(polygon: &Polygon) -> ArQuiver {
    let nodes = polygon.all_diagonals();
    let mut arrows = BTreeSet::new();
    for &d in &nodes {
        let (d0, d1) = d.endpoints();
        for (u, v) in [(d0, polygon.step(d1, 1)), (polygon.step(d0, 1), d1)] {
            if let Ok(target) = polygon.diagonal(u, v) {
                arrows.insert((d, target));
            }
        }
    }
    ArQuiver {
        polygon_size: polygon.size(),
        nodes,
        arrows: arrows.into_iter().collect(),
    }
}

impl ArQuiver {
    pub fn out_degree(&self, d: Diagonal) -> usize {
        self.arrows.iter().filter(|(s, _)| *s == d).count()
    }

    pub fn in_degree(&self, d: Diagonal) -> usize {
        self.arrows.iter().filter(|(_, t)| *t == d).count()
    }

    pub fn predecessors(&self, d: Diagonal) -> BTreeSet<Diagonal> {
        self.arrows
            .iter()
            .filter(|(_, t)| *t == d)
            .map(|(s, _)| *s)
            .collect()
    }

    pub fn successors(&self, d: Diagonal) -> BTreeSet<Diagonal> {
        self.arrows
            .iter()
            .filter(|(s, _)| *s == d)
            .map(|(_, t)| *t)
            .collect()
    }

    pub fn to_dot(&self) -> String {
        let id = |d: &Diagonal| {
            let (u, v) = d.endpoints();
            format!("\"{u}_{v}\"")
        };
        let mut out = String::from("digraph ar_quiver {\n");
        for d in &self.nodes {
            let (u, v) = d.endpoints();
            let _ = writeln!(out, "  {} [label=\"{u}-{v}\"];", id(d));
        }
        for (s, t) in &self.arrows {
            let _ = writeln!(out, "  {} -> {};", id(s), id(t));
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(n: usize) -> Polygon {
        Polygon::new(n).unwrap()
    }

    fn dg(p: &Polygon, u: Vertex, v: Vertex) -> Diagonal {
        p.diagonal(u, v).unwrap()
    }

    #[test]
    fn ext1_examples() {
        let p = poly(8);
        assert_eq!(ext1_dim(&p, dg(&p, 0, 2), dg(&p, 1, 3)), 1);
        assert_eq!(ext1_dim(&p, dg(&p, 0, 2), dg(&p, 0, 4)), 0);
        let p = poly(12);
        assert_eq!(ext1_dim(&p, dg(&p, 3, 9), dg(&p, 1, 5)), 1);
    }

    #[test]
    fn identity_and_suspension() {
        for n in 4..=9 {
            let p = poly(n);
            for x in p.all_diagonals() {
                assert_eq!(hom_dim_from(&p, x, x), 1);
                assert_eq!(hom_dim_to(&p, x, x), 1);
                assert_eq!(hom_dim_from(&p, x, p.suspend_diagonal(x)), 0);
            }
        }
    }

    #[test]
    fn hom_golden_values() {
        let p = poly(12);
        assert_eq!(hom_from(&p, dg(&p, 3, 9), dg(&p, 1, 5)), Some((5, 1)));
        // {3,11} shares c's endpoint 3 but lies on the wrong side of it
        assert_eq!(hom_dim_to(&p, dg(&p, 3, 11), dg(&p, 3, 9)), 0);
        assert_eq!(hom_to(&p, dg(&p, 1, 9), dg(&p, 3, 9)), Some((9, 1)));
        assert_eq!(hom_dim_to(&p, dg(&p, 9, 11), dg(&p, 3, 9)), 1);
    }

    #[test]
    fn factoring_examples() {
        let p = poly(12);
        let x = dg(&p, 1, 5);
        let y = dg(&p, 3, 9);
        assert!(factors_from(&p, x, y, x.arc()).unwrap());
        assert!(factors_from(&p, x, y, y.arc()).unwrap());
        assert!(factors_from(&p, x, y, p.arc(3, 5).unwrap()).unwrap());
        assert!(factors_from(&p, x, y, p.arc(3, 7).unwrap()).unwrap());
        assert!(!factors_from(&p, x, y, p.arc(2, 10).unwrap()).unwrap());
        // edges are zero and factor nothing
        assert!(!factors_from(&p, x, y, p.arc(4, 5).unwrap()).unwrap());

        let z = dg(&p, 9, 11);
        assert!(factors_to(&p, z, y, z.arc()).unwrap());
        assert!(factors_to(&p, z, y, y.arc()).unwrap());
        assert!(factors_to(&p, z, y, p.arc(1, 9).unwrap()).unwrap());
        assert!(!factors_to(&p, z, y, p.arc(3, 5).unwrap()).unwrap());
    }

    #[test]
    fn factoring_requires_nonzero_hom() {
        let p = poly(12);
        let err = factors_to(&p, dg(&p, 3, 11), dg(&p, 3, 9), p.arc(1, 9).unwrap()).unwrap_err();
        assert_eq!(err.code(), "PRECONDITION_VIOLATION");
        let x = dg(&p, 0, 4);
        let err = factors_from(&p, x, p.suspend_diagonal(x), x.arc()).unwrap_err();
        assert_eq!(err.code(), "PRECONDITION_VIOLATION");
    }

    #[test]
    fn crossing_triangle_pairing_follows_the_quadrilateral() {
        // anticlockwise order a1, c1, a0, c0
        let p = poly(12);
        let (a1, c1, a0, c0) = (1, 4, 7, 10);
        let a = dg(&p, a0, a1);
        let c = dg(&p, c0, c1);
        let t = crossing_triangles(&p, a, c).unwrap();
        let b: BTreeSet<Arc> = t.b_pair.into_iter().collect();
        let s: BTreeSet<Arc> = t.s_pair.into_iter().collect();
        let arc = |u, v| p.arc(u, v).unwrap();
        assert_eq!(b, [arc(a0, c1), arc(a1, c0)].into_iter().collect());
        assert_eq!(s, [arc(a0, c0), arc(a1, c1)].into_iter().collect());
    }

    #[test]
    fn crossing_triangles_trivial_and_ar() {
        let p = poly(8);
        let c = dg(&p, 0, 2);
        let a = dg(&p, 7, 1);
        let t = crossing_triangles(&p, a, c).unwrap();
        assert!(t.nonzero_s(&p).is_empty());
        assert_eq!(t.nonzero_b(&p), vec![dg(&p, 2, 7)]);
        assert!(is_ar_triangle(&p, &t, TriangleRoute::AToC));
        assert!(!is_ar_triangle(&p, &t, TriangleRoute::CToA));

        let t = crossing_triangles(&p, dg(&p, 0, 4), dg(&p, 2, 6)).unwrap();
        assert!(!is_ar_triangle(&p, &t, TriangleRoute::AToC));
        assert!(!is_ar_triangle(&p, &t, TriangleRoute::CToA));
    }

    #[test]
    fn crossing_triangles_rejects_non_crossing() {
        let p = poly(8);
        let err = crossing_triangles(&p, dg(&p, 0, 2), dg(&p, 2, 4)).unwrap_err();
        assert_eq!(err.code(), "NOT_CROSSING");
    }

    #[test]
    fn dodecagon_crossing_pair_middle_terms() {
        let p = poly(12);
        let t = crossing_triangles(&p, dg(&p, 1, 5), dg(&p, 3, 9)).unwrap();
        let b: BTreeSet<_> = t.nonzero_b(&p).into_iter().collect();
        assert_eq!(b, [dg(&p, 3, 5), dg(&p, 1, 9)].into_iter().collect());
    }

    #[test]
    fn quiver_small_cases() {
        let q = ar_quiver(&poly(4));
        assert_eq!(q.nodes.len(), 2);
        assert!(q.arrows.is_empty());

        let p = poly(6);
        let q = ar_quiver(&p);
        assert_eq!(q.nodes.len(), 9);
        // the three short diagonals {v, v+2} are the boundary row of the mesh
        assert_eq!(q.arrows.len(), 12);
        for d in &q.nodes {
            let (u, v) = d.endpoints();
            let short = p.step(u, 2) == v || p.step(v, 2) == u;
            assert_eq!(q.out_degree(*d), if short { 1 } else { 2 }, "{d}");
        }
    }

    #[test]
    fn dot_output() {
        let q = ar_quiver(&poly(5));
        let dot = q.to_dot();
        assert!(dot.starts_with("digraph ar_quiver {"));
        assert!(dot.contains("\"0_2\" [label=\"0-2\"];"));
        assert!(dot.contains("\"0_2\" -> \"0_3\";"));
        assert_eq!(dot.matches("->").count(), 5);
    }
}
