//! Cyclic vertex arithmetic on a convex polygon and the diagonals of it.
//!
//! Vertices are the residues `0..size` labelled anticlockwise. Every interval
//! in this crate is a closed interval traversed anticlockwise (increasing
//! index) unless it is explicitly called open.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A polygon vertex, always a residue modulo the polygon size.
pub type Vertex = usize;

/// A regular polygon with `size = n + 3` vertices modelling the cluster
/// category of type `A_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Polygon {
    size: usize,
}

impl Polygon {
    pub const MIN_SIZE: usize = 4;

    pub fn new(size: usize) -> Result<Self> {
        if size < Self::MIN_SIZE {
            return Err(Error::PolygonTooSmall(size));
        }
        Ok(Polygon { size })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Rank `n` of the Dynkin diagram `A_n` this polygon models.
    pub fn rank(&self) -> usize {
        self.size - 3
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        0..self.size
    }

    /// Moves `v` by `k` steps; positive `k` is anticlockwise.
    pub fn step(&self, v: Vertex, k: isize) -> Vertex {
        let n = self.size as isize;
        (v as isize + k).rem_euclid(n) as Vertex
    }

    /// Anticlockwise distance from `a` to `b`.
    fn offset(&self, a: Vertex, b: Vertex) -> usize {
        (b + self.size - a % self.size) % self.size
    }

    /// Whether `v` lies in the closed anticlockwise interval `[a, b]`.
    ///
    /// `[a, a]` is `{a}` and `[a, a - 1]` is the whole vertex set.
    pub fn in_interval(&self, v: Vertex, a: Vertex, b: Vertex) -> bool {
        self.offset(a, v) <= self.offset(a, b)
    }

    /// Whether `v` lies strictly between `a` and `b` going anticlockwise.
    pub fn in_open_interval(&self, v: Vertex, a: Vertex, b: Vertex) -> bool {
        let off = self.offset(a, v);
        off > 0 && off < self.offset(a, b)
    }

    /// Vertices of `[a, b]` in anticlockwise order.
    pub fn interval(&self, a: Vertex, b: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        let len = self.offset(a, b) + 1;
        (0..len).map(move |k| (a + k) % self.size)
    }

    pub fn are_adjacent(&self, u: Vertex, v: Vertex) -> bool {
        let d = self.offset(u, v);
        d == 1 || d == self.size - 1
    }

    /// Whether `{u, v}` joins two distinct, non-neighbouring vertices.
    pub fn is_diagonal(&self, u: Vertex, v: Vertex) -> bool {
        u < self.size && v < self.size && u != v && !self.are_adjacent(u, v)
    }

    pub fn diagonal(&self, u: Vertex, v: Vertex) -> Result<Diagonal> {
        if self.is_diagonal(u, v) {
            Ok(Diagonal::sorted(u, v))
        } else {
            Err(Error::NotADiagonal {
                u,
                v,
                size: self.size,
            })
        }
    }

    pub fn arc(&self, u: Vertex, v: Vertex) -> Result<Arc> {
        if u < self.size && v < self.size && u != v {
            Ok(Arc::sorted(u, v))
        } else {
            Err(Error::NotAnArc {
                u,
                v,
                size: self.size,
            })
        }
    }

    /// The arc `{u, v}` viewed as an object: `None` when it is a polygon edge.
    pub fn nonzero(&self, arc: Arc) -> Option<Diagonal> {
        let (u, v) = arc.endpoints();
        self.is_diagonal(u, v).then(|| Diagonal::sorted(u, v))
    }

    pub fn is_zero(&self, arc: Arc) -> bool {
        self.nonzero(arc).is_none()
    }

    /// Two diagonals cross when they meet in the interior of the polygon.
    pub fn crosses(&self, d: Diagonal, e: Diagonal) -> bool {
        self.arcs_cross(d.into(), e.into())
    }

    /// Crossing for arcs; shared endpoints never cross, so edges cross nothing.
    pub fn arcs_cross(&self, d: Arc, e: Arc) -> bool {
        let (d0, d1) = d.endpoints();
        let (e0, e1) = e.endpoints();
        if d0 == e0 || d0 == e1 || d1 == e0 || d1 == e1 {
            return false;
        }
        self.in_open_interval(e0, d0, d1) != self.in_open_interval(e1, d0, d1)
    }

    /// The suspension: both endpoints move one step clockwise.
    pub fn suspend(&self, a: Arc) -> Arc {
        let (u, v) = a.endpoints();
        Arc::sorted(self.step(u, -1), self.step(v, -1))
    }

    pub fn suspend_inverse(&self, a: Arc) -> Arc {
        let (u, v) = a.endpoints();
        Arc::sorted(self.step(u, 1), self.step(v, 1))
    }

    pub fn suspend_diagonal(&self, d: Diagonal) -> Diagonal {
        let (u, v) = d.endpoints();
        Diagonal::sorted(self.step(u, -1), self.step(v, -1))
    }

    pub fn suspend_inverse_diagonal(&self, d: Diagonal) -> Diagonal {
        let (u, v) = d.endpoints();
        Diagonal::sorted(self.step(u, 1), self.step(v, 1))
    }

    /// All `N(N-3)/2` diagonals, in lexicographic order.
    pub fn all_diagonals(&self) -> Vec<Diagonal> {
        let n = self.size;
        (0..n)
            .flat_map(|u| (u + 2..n).map(move |v| (u, v)))
            .filter(|&(u, v)| self.is_diagonal(u, v))
            .map(|(u, v)| Diagonal::sorted(u, v))
            .collect()
    }

    pub fn diagonal_count(&self) -> usize {
        self.size * (self.size - 3) / 2
    }
}

impl fmt::Display for Polygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-gon", self.size)
    }
}

/// An unordered pair of distinct vertices. Adjacent endpoints denote the zero
/// object; otherwise the arc is the indecomposable of that diagonal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "[Vertex; 2]", from = "[Vertex; 2]")]
pub struct Arc {
    lo: Vertex,
    hi: Vertex,
}

impl Arc {
    fn sorted(u: Vertex, v: Vertex) -> Self {
        Arc {
            lo: u.min(v),
            hi: u.max(v),
        }
    }

    pub fn endpoints(&self) -> (Vertex, Vertex) {
        (self.lo, self.hi)
    }

    pub fn has_endpoint(&self, v: Vertex) -> bool {
        self.lo == v || self.hi == v
    }
}

impl From<Arc> for [Vertex; 2] {
    fn from(a: Arc) -> Self {
        [a.lo, a.hi]
    }
}

impl From<[Vertex; 2]> for Arc {
    fn from([u, v]: [Vertex; 2]) -> Self {
        Arc::sorted(u, v)
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.lo, self.hi)
    }
}

/// A diagonal between non-neighbouring vertices, stored with the smaller
/// endpoint first so equality is set equality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(into = "[Vertex; 2]")]
pub struct Diagonal {
    lo: Vertex,
    hi: Vertex,
}

impl Diagonal {
    pub(crate) fn sorted(u: Vertex, v: Vertex) -> Self {
        debug_assert_ne!(u, v);
        Diagonal {
            lo: u.min(v),
            hi: u.max(v),
        }
    }

    pub fn endpoints(&self) -> (Vertex, Vertex) {
        (self.lo, self.hi)
    }

    pub fn has_endpoint(&self, v: Vertex) -> bool {
        self.lo == v || self.hi == v
    }

    /// The endpoint that is not `v`. `v` must be an endpoint.
    pub fn other(&self, v: Vertex) -> Vertex {
        if self.lo == v {
            self.hi
        } else {
            self.lo
        }
    }

    pub fn arc(&self) -> Arc {
        Arc {
            lo: self.lo,
            hi: self.hi,
        }
    }
}

impl From<Diagonal> for Arc {
    fn from(d: Diagonal) -> Self {
        d.arc()
    }
}

impl From<Diagonal> for [Vertex; 2] {
    fn from(d: Diagonal) -> Self {
        [d.lo, d.hi]
    }
}

impl PartialEq<Diagonal> for Arc {
    fn eq(&self, other: &Diagonal) -> bool {
        self.lo == other.lo && self.hi == other.hi
    }
}

impl fmt::Display for Diagonal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.lo, self.hi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize) -> Polygon {
        Polygon::new(n).unwrap()
    }

    #[test]
    fn step_wraps() {
        assert_eq!(p(8).step(0, -1), 7);
        assert_eq!(p(8).step(3, 2), 5);
        assert_eq!(p(12).step(9, 1), 10);
        assert_eq!(p(5).step(1, -11), 0);
    }

    #[test]
    fn intervals() {
        let g = p(8);
        assert!(g.in_interval(2, 1, 4));
        assert!(g.in_interval(0, 6, 2));
        assert!(!g.in_interval(5, 6, 2));
        assert!(g.in_interval(3, 3, 3));
        assert!(!g.in_interval(4, 3, 3));
        // [a, a-1] is everything
        assert!(g.vertices().all(|v| g.in_interval(v, 3, 2)));
        assert_eq!(g.interval(6, 1).collect::<Vec<_>>(), vec![6, 7, 0, 1]);
    }

    #[test]
    fn crossing_examples() {
        let g = p(8);
        let d = |u, v| g.diagonal(u, v).unwrap();
        assert!(g.crosses(d(0, 2), d(1, 3)));
        assert!(!g.crosses(d(0, 2), d(2, 4)));
        assert!(!g.crosses(d(0, 4), d(1, 3)));
        let g = p(12);
        assert!(g.crosses(g.diagonal(3, 9).unwrap(), g.diagonal(1, 5).unwrap()));
    }

    #[test]
    fn suspension_examples() {
        let g = p(8);
        let a = g.arc(0, 2).unwrap();
        assert_eq!(g.suspend(a), g.arc(7, 1).unwrap());
        assert_eq!(g.suspend_inverse(g.arc(7, 1).unwrap()), a);
        let mut b = a;
        for _ in 0..8 {
            b = g.suspend(b);
        }
        assert_eq!(a, b);
    }

    #[test]
    fn diagonal_counts() {
        assert_eq!(
            p(4).all_diagonals(),
            vec![Diagonal::sorted(0, 2), Diagonal::sorted(1, 3)]
        );
        assert_eq!(p(6).all_diagonals().len(), 9);
        assert_eq!(p(8).all_diagonals().len(), 20);
    }

    #[test]
    fn rejects_invalid_input() {
        assert_eq!(Polygon::new(3), Err(Error::PolygonTooSmall(3)));
        let g = p(6);
        assert!(g.diagonal(0, 1).is_err());
        assert!(g.diagonal(5, 0).is_err());
        assert!(g.diagonal(2, 2).is_err());
        assert!(g.diagonal(0, 6).is_err());
        assert!(g.arc(0, 1).is_ok());
        assert!(g.is_zero(g.arc(0, 1).unwrap()));
    }
}
