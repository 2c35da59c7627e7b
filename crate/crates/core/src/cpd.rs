//! Strictly convex counterclockwise polygons given by their vertex cycle.
//!
//! A [`Cpd`] is an `n`-periodic vertex sequence `A_0 … A_{n−1}` such that
//! every vertex other than `A_p`, `A_{p+1}` lies strictly to the left of the
//! directed edge `A_p → A_{p+1}`. Indices are taken modulo `n` throughout.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact_geom::{det2, quadrant_set, segments_cross, Pt, QuadrantSet, Rat, Vec2};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CpdError {
    #[error("need at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("vertex {q} is not strictly left of edge {p} → {p}+1")]
    NotConvexDirect { p: usize, q: usize },
    #[error("index {index} out of range for a {n}-gon")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Cpd {
    vertices: Vec<Pt>,
}

/// Quadrant sets of the edge vectors `A_k → A_{k+1}`, in edge order.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(transparent)]
pub struct QuadrantPattern(pub Vec<QuadrantSet>);

impl QuadrantPattern {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Entry `k` taken cyclically.
    pub fn get(&self, k: usize) -> QuadrantSet {
        self.0[k % self.0.len()]
    }
}

/// Checks every `(p, q)` with `q ∉ {p, p+1}` (mod n), `p` ascending then `q`
/// ascending, and returns the vertices unchanged on success.
pub fn validate(points: Vec<Pt>) -> Result<Cpd, CpdError> {
    let n = points.len();
    if n < 3 {
        return Err(CpdError::TooFewVertices(n));
    }
    for p in 0..n {
        let a = &points[p];
        let edge = a.to(&points[(p + 1) % n]);
        for (q, other) in points.iter().enumerate() {
            if q == p || q == (p + 1) % n {
                continue;
            }
            if det2(&edge, &a.to(other)).signum() <= 0 {
                return Err(CpdError::NotConvexDirect { p, q });
            }
        }
    }
    Ok(Cpd { vertices: points })
}

impl Cpd {
    /// Skips validation. Callers must guarantee strict convexity and CCW order.
    pub(crate) fn from_trusted(vertices: Vec<Pt>) -> Cpd {
        debug_assert!(vertices.len() >= 3);
        Cpd { vertices }
    }

    pub fn vertices(&self) -> &[Pt] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// `A_k` with `k` taken modulo `n`.
    pub fn vertex(&self, k: usize) -> &Pt {
        &self.vertices[k % self.vertices.len()]
    }

    /// `A_k → A_{k+1}`.
    pub fn edge(&self, k: usize) -> Vec2 {
        self.vertex(k).to(self.vertex(k + 1))
    }

    pub fn edges(&self) -> impl Iterator<Item = Vec2> + '_ {
        (0..self.len()).map(|k| self.edge(k))
    }

    /// Renumbered sequence starting at `A_p`.
    pub fn rotated(&self, p: usize) -> Cpd {
        let n = self.len();
        Cpd {
            vertices: (0..n).map(|k| self.vertex(k + p).clone()).collect(),
        }
    }

    /// Rotation that puts the lexicographically smallest vertex first.
    pub fn canonical(&self) -> Cpd {
        let start = (0..self.len())
            .min_by(|&a, &b| self.vertices[a].cmp(&self.vertices[b]))
            .expect("nonempty");
        self.rotated(start)
    }

    /// Removes vertex `index`. The remainder is again strictly convex and
    /// counterclockwise; it is revalidated anyway and a failure surfaces as
    /// [`CpdError::InvariantViolation`].
    pub fn reduce(&self, index: usize) -> Result<Cpd, CpdError> {
        let n = self.len();
        if n <= 3 {
            return Err(CpdError::TooFewVertices(n - 1));
        }
        if index >= n {
            return Err(CpdError::IndexOutOfRange { index, n });
        }
        let mut rest = self.vertices.clone();
        rest.remove(index);
        validate(rest).map_err(|e| CpdError::InvariantViolation(format!("reduce({index}) of {n}-gon: {e}")))
    }

    /// Whether the diagonals `[A_0, A_k]` and `[A_{n−1}, A_1]` cross.
    /// Admissible for `n ≥ 4` and `2 ≤ k ≤ n − 2`.
    pub fn diagonals_cross(&self, k: usize) -> Result<bool, CpdError> {
        let n = self.len();
        if n < 4 || k < 2 || k > n - 2 {
            return Err(CpdError::IndexOutOfRange { index: k, n });
        }
        segments_cross(self.vertex(0), self.vertex(k), self.vertex(n - 1), self.vertex(1))
            .map_err(|e| CpdError::InvariantViolation(e.to_string()))
    }

    pub fn edge_quadrants(&self) -> QuadrantPattern {
        QuadrantPattern(
            self.edges()
                .map(|e| quadrant_set(&e).expect("distinct consecutive vertices"))
                .collect(),
        )
    }

    /// True iff no two cyclically consecutive edges share a closed quadrant.
    pub fn no_consecutive_same_quadrant(&self) -> bool {
        let pat = self.edge_quadrants();
        (0..pat.len()).all(|k| !pat.get(k).intersects(pat.get(k + 1)))
    }

    /// The implication "no consecutive edges share a quadrant ⇒ n ≤ 4" on
    /// this instance.
    pub fn check_n_le_4(&self) -> bool {
        !self.no_consecutive_same_quadrant() || self.len() <= 4
    }

    /// Exact shoelace area; positive for a valid instance.
    pub fn area(&self) -> Rat {
        let origin = self.vertex(0);
        let mut twice = Rat::zero();
        for k in 1..self.len() - 1 {
            twice = twice + det2(&origin.to(self.vertex(k)), &origin.to(self.vertex(k + 1)));
        }
        twice / Rat::from_integer(2)
    }

    /// Vertex average; strictly interior for a valid instance.
    pub fn centroid(&self) -> Pt {
        let n = Rat::from_integer(self.len() as i64);
        let (sx, sy) = self
            .vertices
            .iter()
            .fold((Rat::zero(), Rat::zero()), |(sx, sy), p| (sx + &p.x, sy + &p.y));
        Pt::new(sx / &n, sy / &n)
    }
}

/// Convex hull in counterclockwise order (monotone chain), with collinear
/// boundary points dropped. `None` when the points are all collinear.
pub fn convex_hull(points: &[Pt]) -> Option<Cpd> {
    let mut pts: Vec<Pt> = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() < 3 {
        return None;
    }
    let turn = |a: &Pt, b: &Pt, c: &Pt| det2(&a.to(b), &a.to(c)).signum();
    let mut lower: Vec<Pt> = Vec::new();
    for p in &pts {
        while lower.len() >= 2 && turn(&lower[lower.len() - 2], &lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<Pt> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2 && turn(&upper[upper.len() - 2], &upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    if lower.len() < 3 {
        return None;
    }
    Some(Cpd { vertices: lower })
}
