//! Planar subdivision cut out of a rectangle by a finite set of integer
//! lines, and extraction of its bounded faces.
//!
//! Every vertex is the intersection of two integer lines (source lines or
//! rectangle sides), so vertices are handled internally as homogeneous
//! integer triples `(X, Y, D)` with `D > 0` and `gcd = 1`: equality is
//! structural and every predicate is an exact integer sign test. Edge
//! directions are the integer direction vectors of their supporting lines,
//! so the angular sort around a vertex needs no coordinates at all.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use serde::Serialize;

use crate::cpd::Cpd;
use crate::exact_geom::{Pt, Rat};
use crate::farey_lines::{meets_rect, PrimitiveLine, RectWindow};

/// Exact vertex `(x / d, y / d)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
struct HPoint {
    x: i128,
    y: i128,
    d: i128,
}

impl HPoint {
    fn new(x: i128, y: i128, d: i128) -> HPoint {
        let (x, y, d) = if d < 0 { (-x, -y, -d) } else { (x, y, d) };
        let g = x.gcd(&y).gcd(&d);
        HPoint {
            x: x / g,
            y: y / g,
            d: d / g,
        }
    }

    fn to_pt(self) -> Pt {
        let d = BigInt::from(self.d);
        Pt::new(Rat::from_big(self.x.into(), d.clone()), Rat::from_big(self.y.into(), d))
    }

    /// Lexicographic `(x, y)` comparison of the rational coordinates.
    fn cmp_xy(&self, other: &HPoint) -> Ordering {
        (self.x * other.d)
            .cmp(&(other.x * self.d))
            .then_with(|| (self.y * other.d).cmp(&(other.y * self.d)))
    }
}

fn intersect(a: &PrimitiveLine, b: &PrimitiveLine) -> Option<HPoint> {
    let (u1, v1, w1) = a.coeffs();
    let (u2, v2, w2) = b.coeffs();
    let (u1, v1, w1, u2, v2, w2) = (u1 as i128, v1 as i128, w1 as i128, u2 as i128, v2 as i128, w2 as i128);
    let d = u1 * v2 - u2 * v1;
    if d == 0 {
        return None;
    }
    Some(HPoint::new(w1 * v2 - w2 * v1, u1 * w2 - u2 * w1, d))
}

/// Rectangle bounds as `(numerator, denominator)` pairs.
struct IntRect {
    x_min: (i128, i128),
    x_max: (i128, i128),
    y_min: (i128, i128),
    y_max: (i128, i128),
}

impl IntRect {
    fn new(rect: &RectWindow) -> IntRect {
        let parts = |r: &Rat| {
            let (p, q) = r.to_i64_parts().expect("bounds checked at construction");
            (p as i128, q as i128)
        };
        IntRect {
            x_min: parts(&rect.x_min),
            x_max: parts(&rect.x_max),
            y_min: parts(&rect.y_min),
            y_max: parts(&rect.y_max),
        }
    }

    fn contains(&self, p: &HPoint) -> bool {
        // coordinate c / d against bound a / b, with b, d > 0
        let ge = |c: i128, (a, b): (i128, i128)| c * b >= a * p.d;
        let le = |c: i128, (a, b): (i128, i128)| c * b <= a * p.d;
        ge(p.x, self.x_min) && le(p.x, self.x_max) && ge(p.y, self.y_min) && le(p.y, self.y_max)
    }
}

/// Direction of a line, the normal `(u, v)` rotated a quarter turn
/// counterclockwise.
fn direction(line: &PrimitiveLine) -> (i64, i64) {
    (-line.v(), line.u())
}

/// Half-plane index then cross product: counterclockwise angular order
/// starting from the positive x axis.
fn cmp_angle(a: (i64, i64), b: (i64, i64)) -> Ordering {
    let half = |(x, y): (i64, i64)| if y > 0 || (y == 0 && x > 0) { 0 } else { 1 };
    half(a).cmp(&half(b)).then_with(|| {
        let cross = a.0 as i128 * b.1 as i128 - a.1 as i128 * b.0 as i128;
        0.cmp(&cross)
    })
}

fn cross(a: (i64, i64), b: (i64, i64)) -> i128 {
    a.0 as i128 * b.1 as i128 - a.1 as i128 * b.0 as i128
}

/// Undirected edge between two vertex indices along one supporting line.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    pub line: PrimitiveLine,
}

/// Closure of one bounded face.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Cell {
    /// Counterclockwise, lexicographically smallest vertex first, one
    /// vertex per maximal boundary segment.
    pub boundary: Cpd,
    /// Lines carrying the boundary edges (rectangle sides included).
    pub lines: BTreeSet<PrimitiveLine>,
}

impl Cell {
    pub fn vertex_count(&self) -> usize {
        self.boundary.len()
    }

    pub fn touches_frame(&self, rect: &RectWindow) -> bool {
        self.boundary.vertices().iter().any(|p| rect.on_frame(p))
    }
}

pub fn area(cell: &Cell) -> Rat {
    cell.boundary.area()
}

/// The arrangement of a line set clipped to a rectangle.
#[derive(Clone, Debug)]
pub struct Subdivision {
    pub rect: RectWindow,
    /// Input lines that meet the rectangle, ascending.
    pub lines: Vec<PrimitiveLine>,
    /// Lexicographically sorted.
    pub vertices: Vec<Pt>,
    pub edges: Vec<Edge>,
    /// Bounded faces in ascending order of their vertex lists.
    pub cells: Vec<Cell>,
    /// Number of face cycles that were not bounded faces; 1 when the graph
    /// is connected.
    pub outer_faces: usize,
    /// Every line that carries at least one vertex (sides included), with
    /// its vertex indices in order along the line direction `(−v, u)`.
    pub line_vertices: Vec<(PrimitiveLine, Vec<usize>)>,
}

impl Subdivision {
    pub fn face_count(&self) -> usize {
        self.cells.len() + self.outer_faces
    }

    /// `V − E + F` counting the outer face; 2 for a connected plane graph.
    pub fn euler_characteristic(&self) -> i64 {
        self.vertices.len() as i64 - self.edges.len() as i64 + self.face_count() as i64
    }

    pub fn total_area(&self) -> Rat {
        self.cells.iter().fold(Rat::zero(), |acc, c| acc + area(c))
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct CellOut<'a> {
            vertices: Vec<[&'a Rat; 2]>,
            lines: &'a BTreeSet<PrimitiveLine>,
        }
        #[derive(Serialize)]
        struct Out<'a> {
            vertices: Vec<[&'a Rat; 2]>,
            cells: Vec<CellOut<'a>>,
        }
        let out = Out {
            vertices: self.vertices.iter().map(|p| [&p.x, &p.y]).collect(),
            cells: self
                .cells
                .iter()
                .map(|c| CellOut {
                    vertices: c.boundary.vertices().iter().map(|p| [&p.x, &p.y]).collect(),
                    lines: &c.lines,
                })
                .collect(),
        };
        serde_json::to_string_pretty(&out).expect("plain data always serializes")
    }
}

/// Builds the subdivision of `rect` by `lines`. Lines missing the rectangle
/// are ignored; the rectangle sides are always present.
pub fn build<'a, I>(lines: I, rect: &RectWindow) -> Subdivision
where
    I: IntoIterator<Item = &'a PrimitiveLine>,
{
    let source: BTreeSet<PrimitiveLine> = lines.into_iter().filter(|l| meets_rect(l, rect)).copied().collect();
    let mut support = source.clone();
    support.extend(rect.boundary_lines());
    let support: Vec<PrimitiveLine> = support.into_iter().collect();
    let irect = IntRect::new(rect);

    // vertices on each supporting line
    let mut ids: HashMap<HPoint, usize> = HashMap::new();
    let mut points: Vec<HPoint> = Vec::new();
    let mut on_line: Vec<Vec<usize>> = vec![Vec::new(); support.len()];
    for i in 0..support.len() {
        for j in (i + 1)..support.len() {
            let Some(p) = intersect(&support[i], &support[j]) else {
                continue;
            };
            if !irect.contains(&p) {
                continue;
            }
            let id = *ids.entry(p).or_insert_with(|| {
                points.push(p);
                points.len() - 1
            });
            on_line[i].push(id);
            on_line[j].push(id);
        }
    }

    // renumber vertices in lexicographic order
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&a, &b| points[a].cmp_xy(&points[b]));
    let mut rank = vec![0usize; points.len()];
    for (r, &old) in order.iter().enumerate() {
        rank[old] = r;
    }
    let points: Vec<HPoint> = order.iter().map(|&i| points[i]).collect();

    let mut edges: Vec<Edge> = Vec::new();
    let mut line_vertices = Vec::new();
    for (line, vs) in support.iter().zip(on_line) {
        let (dx, dy) = direction(line);
        let key = |p: &HPoint| (p.x * dx as i128 + p.y * dy as i128, p.d);
        let mut vs: Vec<usize> = vs.into_iter().map(|v| rank[v]).collect();
        vs.sort_by(|&a, &b| {
            let (ta, da) = key(&points[a]);
            let (tb, db) = key(&points[b]);
            (ta * db).cmp(&(tb * da))
        });
        vs.dedup();
        for w in vs.windows(2) {
            edges.push(Edge {
                a: w[0],
                b: w[1],
                line: *line,
            });
        }
        if !vs.is_empty() {
            line_vertices.push((*line, vs));
        }
    }

    // half-edge 2e runs a → b along the line direction, 2e + 1 runs back
    let half_count = edges.len() * 2;
    let origin = |h: usize| {
        if h.is_multiple_of(2) {
            edges[h / 2].a
        } else {
            edges[h / 2].b
        }
    };
    let dir = |h: usize| {
        let (dx, dy) = direction(&edges[h / 2].line);
        if h.is_multiple_of(2) {
            (dx, dy)
        } else {
            (-dx, -dy)
        }
    };
    let mut outgoing: Vec<Vec<usize>> = vec![Vec::new(); points.len()];
    for h in 0..half_count {
        outgoing[origin(h)].push(h);
    }
    let mut slot = vec![0usize; half_count];
    for out in outgoing.iter_mut() {
        out.sort_by(|&a, &b| cmp_angle(dir(a), dir(b)));
        for (k, &h) in out.iter().enumerate() {
            slot[h] = k;
        }
    }
    // the face on the left of h continues with the edge just clockwise of
    // twin(h) around the head of h
    let next = |h: usize| {
        let twin = h ^ 1;
        let out = &outgoing[origin(twin)];
        out[(slot[twin] + out.len() - 1) % out.len()]
    };

    let mut seen = vec![false; half_count];
    let mut cells = Vec::new();
    let mut outer_faces = 0;
    for start in 0..half_count {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut h = start;
        while !seen[h] {
            seen[h] = true;
            cycle.push(h);
            h = next(h);
        }
        debug_assert_eq!(h, start);
        let k = cycle.len();
        let turns: Vec<i128> = (0..k)
            .map(|i| cross(dir(cycle[(i + k - 1) % k]), dir(cycle[i])))
            .collect();
        if !turns.iter().any(|&t| t > 0) {
            outer_faces += 1;
            continue;
        }
        debug_assert!(turns.iter().all(|&t| t >= 0), "bounded faces are convex");
        let corners: Vec<HPoint> = (0..k)
            .filter(|&i| turns[i] != 0)
            .map(|i| points[origin(cycle[i])])
            .collect();
        let start = (0..corners.len())
            .min_by(|&a, &b| corners[a].cmp_xy(&corners[b]))
            .expect("bounded face has corners");
        let vertices: Vec<Pt> = (0..corners.len())
            .map(|i| corners[(start + i) % corners.len()].to_pt())
            .collect();
        cells.push(Cell {
            boundary: Cpd::from_trusted(vertices),
            lines: cycle.iter().map(|&h| edges[h / 2].line).collect(),
        });
    }
    cells.sort_by(|a, b| a.boundary.vertices().cmp(b.boundary.vertices()));

    Subdivision {
        rect: rect.clone(),
        lines: source.into_iter().collect(),
        vertices: points.into_iter().map(HPoint::to_pt).collect(),
        edges,
        cells,
        outer_faces,
        line_vertices,
    }
}

/// Bounded cells, counterclockwise with the smallest vertex first.
pub fn bounded_cells(s: &Subdivision) -> &[Cell] {
    &s.cells
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cpd::validate;
    use crate::exact_geom::Sign;
    use crate::farey_lines::{enumerate, FareyParams};

    fn line(u: i64, v: i64, w: i64) -> PrimitiveLine {
        PrimitiveLine::new(u, v, w).unwrap()
    }

    fn half() -> Rat {
        Rat::new(1, 2)
    }

    fn farey(m: i64, n: i64) -> Subdivision {
        let cu = RectWindow::unit_square();
        build(&enumerate(FareyParams::new(m, n).unwrap(), &cu), &cu)
    }

    #[test]
    fn empty_line_set() {
        let s = build(&BTreeSet::new(), &RectWindow::unit_square());
        assert_eq!((s.vertices.len(), s.edges.len(), s.face_count()), (4, 4, 2));
        assert_eq!(s.cells.len(), 1);
        assert_eq!(
            s.cells[0].boundary.vertices(),
            &[Pt::ints(0, 0), Pt::ints(1, 0), Pt::ints(1, 1), Pt::ints(0, 1)]
        );
        assert_eq!(area(&s.cells[0]), Rat::one());
    }

    #[test]
    fn single_diagonal() {
        let s = build(&[line(1, -1, 0)], &RectWindow::unit_square());
        assert_eq!(s.vertices.len(), 4);
        assert_eq!(s.cells.len(), 2);
        assert_eq!(s.euler_characteristic(), 2);
        let s = build(&[line(2, -2, 1)], &RectWindow::unit_square());
        assert_eq!(s.vertices.len(), 6);
        assert_eq!(s.cells.len(), 2);
    }

    #[test]
    fn farey_1_1() {
        let s = farey(1, 1);
        assert_eq!(s.lines.len(), 10);
        assert_eq!(s.cells.len(), 4);
        assert_eq!(s.vertices.len(), 5);
        assert_eq!(s.edges.len(), 8);
        assert_eq!(s.euler_characteristic(), 2);
        let c = Pt::new(half(), half());
        let expected = vec![
            vec![Pt::ints(0, 0), Pt::ints(1, 0), c.clone()],
            vec![Pt::ints(0, 0), c.clone(), Pt::ints(0, 1)],
            vec![Pt::ints(0, 1), c.clone(), Pt::ints(1, 1)],
            vec![c.clone(), Pt::ints(1, 0), Pt::ints(1, 1)],
        ];
        let got: Vec<Vec<Pt>> = s.cells.iter().map(|c| c.boundary.vertices().to_vec()).collect();
        let mut want = expected;
        want.sort();
        assert_eq!(got, want);
        for cell in &s.cells {
            assert_eq!(area(cell), Rat::new(1, 4));
        }
        let bottom = s
            .cells
            .iter()
            .find(|c| c.boundary.vertices()[1] == Pt::ints(1, 0))
            .unwrap();
        assert_eq!(
            bottom.lines,
            [line(0, 1, 0), line(1, -1, 0), line(1, 1, 1)].into_iter().collect()
        );
    }

    #[test]
    fn corner_touching_line_adds_nothing() {
        let cu = RectWindow::unit_square();
        let with = build(&[line(1, -1, 0), line(1, 1, 0), line(1, 1, 2)], &cu);
        let without = build(&[line(1, -1, 0)], &cu);
        assert_eq!(with.cells, without.cells);
        assert_eq!(with.vertices, without.vertices);
    }

    #[test]
    fn collinear_vertices_are_not_cell_corners() {
        // x = 1/2 and y = x split the bottom and top sides at their midpoints
        let s = build(&[line(2, 0, 1), line(1, -1, 0)], &RectWindow::unit_square());
        for c in &s.cells {
            assert!(validate(c.boundary.vertices().to_vec()).is_ok());
        }
        assert_eq!(s.cells.len(), 4);
        assert_eq!(s.total_area(), Rat::one());
    }

    #[test]
    fn window_with_rational_bounds() {
        let w = RectWindow::new(Rat::new(-1, 2), Rat::new(3, 2), Rat::new(-1, 3), Rat::from_integer(1)).unwrap();
        let s = build(&enumerate(FareyParams::new(2, 1).unwrap(), &w), &w);
        assert_eq!(s.total_area(), w.area());
        assert_eq!(s.euler_characteristic(), 2);
    }

    #[test]
    fn invariants_small_params() {
        let cu = RectWindow::unit_square();
        for (m, n) in [(1, 2), (2, 2), (3, 1), (3, 2), (2, 4)] {
            let s = farey(m, n);
            assert_eq!(s.total_area(), Rat::one(), "({m}, {n})");
            assert_eq!(s.euler_characteristic(), 2, "({m}, {n})");
            assert_eq!(s.outer_faces, 1);
            for cell in &s.cells {
                let checked = validate(cell.boundary.vertices().to_vec()).unwrap();
                assert_eq!(&checked, &cell.boundary);
                assert!(area(cell).signum() > 0);
                let g = cell.boundary.centroid();
                for l in &s.lines {
                    assert_ne!(l.side(&g), Sign::Zero);
                    // no line enters the open cell
                    let signs: BTreeSet<Sign> = cell.boundary.vertices().iter().map(|p| l.side(p)).collect();
                    assert!(!(signs.contains(&Sign::Positive) && signs.contains(&Sign::Negative)));
                }
                for l in &cell.lines {
                    assert!(s.lines.contains(l) || cu.boundary_lines().contains(l));
                }
            }
        }
    }

    #[test]
    fn deterministic() {
        let a = farey(3, 3);
        let b = farey(3, 3);
        assert_eq!(a.cells, b.cells);
        assert_eq!(a.to_json(), b.to_json());
    }

    #[test]
    fn symmetric_under_reflections() {
        let s = farey(3, 2);
        let cells: BTreeSet<Vec<Pt>> = s.cells.iter().map(|c| c.boundary.vertices().to_vec()).collect();
        let one = Rat::one();
        let reflect = |f: &dyn Fn(&Pt) -> Pt| -> BTreeSet<Vec<Pt>> {
            cells
                .iter()
                .map(|c| {
                    // a reflection reverses orientation; reverse and re-canonicalize
                    let mut v: Vec<Pt> = c.iter().map(f).collect();
                    v.reverse();
                    validate(v).unwrap().canonical().vertices().to_vec()
                })
                .collect()
        };
        assert_eq!(reflect(&|p| Pt::new(p.x.clone(), &one - &p.y)), cells);
        assert_eq!(reflect(&|p| Pt::new(&one - &p.x, p.y.clone())), cells);
    }

    #[test]
    fn json_uses_exact_strings() {
        let s = farey(1, 1);
        let v: serde_json::Value = serde_json::from_str(&s.to_json()).unwrap();
        assert_eq!(v["vertices"][2], serde_json::json!(["1/2", "1/2"]));
        assert_eq!(v["cells"].as_array().unwrap().len(), 4);
        assert_eq!(v["cells"][0]["vertices"][1], serde_json::json!(["1/2", "1/2"]));
        assert_eq!(v["cells"][0]["lines"][0], serde_json::json!({"u": 1, "v": -1, "w": 0}));
    }
}
