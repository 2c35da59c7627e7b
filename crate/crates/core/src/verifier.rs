//! Checks of the structural results on computed cells.
//!
//! For every bounded cell of a Farey complex this module checks that the
//! cell is a triangle or a quadrilateral, that no two consecutive edge
//! vectors share a closed quadrant, and the quadrant classification of the
//! two shapes. It also implements the separating-line construction through
//! a middle vertex, the vertex-denominator scan for quadrilaterals, and a
//! scan of interior cells over larger windows of the plane.
//!
//! Failures are recorded in a [`VerificationReport`] rather than raised.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::Serialize;
use thiserror::Error;

use crate::arrangement::{area, build, Cell, Subdivision};
use crate::cpd::{validate, Cpd};
use crate::exact_geom::{canonical_line, orient, sets_opposite, Pt, QuadrantId, QuadrantSet, Rat};
use crate::farey_lines::{enumerate, FareyParams, PrimitiveLine, RectWindow};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("shape theorem violated: {0}")]
    ShapeTheoremViolation(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("construction produced an invalid line: {0}")]
    ConstructionFailed(String),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum ShapeClass {
    Triangle,
    /// Edge `offset + i − 1 → offset + i` lies in quadrant `Q_i`, `i = 1..4`.
    Quadrilateral {
        offset: usize,
    },
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Violation {
    /// Index into the checked cell list; `None` for whole-arrangement checks.
    pub cell: Option<usize>,
    pub property: String,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct VerificationReport {
    pub params: FareyParams,
    pub window: RectWindow,
    pub line_count: usize,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub euler_characteristic: i64,
    /// Cells that were checked (for window scans, those clear of the frame).
    pub cell_count: usize,
    /// Cells skipped because they touch the window frame.
    pub frame_cells: usize,
    pub triangle_count: usize,
    pub quad_count: usize,
    pub total_area: Rat,
    pub violations: Vec<Violation>,
    /// Quadrilaterals with a vertex whose x denominator is at most `m` or
    /// whose y denominator is at most `n`.
    pub denominator_claim_exceptions: Vec<usize>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data always serializes")
    }
}

/// No two consecutive boundary edges share a closed quadrant.
pub fn check_t2(cell: &Cell) -> bool {
    cell.boundary.no_consecutive_same_quadrant()
}

/// Whether some pair of consecutive edges lies in opposite quadrants.
fn has_opposite_consecutive(pat: &[QuadrantSet]) -> bool {
    let n = pat.len();
    (0..n).any(|k| sets_opposite(pat[k], pat[(k + 1) % n]))
}

/// Offset `p` with edge `p + i − 1` in `Q_i` for `i = 1..4`, if any.
fn cyclic_offset(pat: &[QuadrantSet]) -> Option<usize> {
    (0..4).find(|&p| (0..4).all(|i| pat[(p + i) % 4].contains(QuadrantId::from_index(i))))
}

/// A quadrilateral with an edge in `Q1` immediately followed by one in `Q3`.
pub fn has_forbidden_q1_q3(boundary: &Cpd) -> bool {
    if boundary.len() != 4 {
        return false;
    }
    let pat = boundary.edge_quadrants();
    (0..4).any(|k| pat.get(k).contains(QuadrantId::Q1) && pat.get(k + 1).contains(QuadrantId::Q3))
}

/// Triangle or quadrilateral, checking the quadrant characterization of
/// each: a triangle has two consecutive edges in opposite quadrants, a
/// quadrilateral has its edges in `Q1, Q2, Q3, Q4` cyclically.
pub fn classify(cell: &Cell) -> Result<ShapeClass, VerifyError> {
    let pat = cell.boundary.edge_quadrants().0;
    match pat.len() {
        3 if has_opposite_consecutive(&pat) => Ok(ShapeClass::Triangle),
        3 => Err(VerifyError::ShapeTheoremViolation(format!(
            "triangle without opposite consecutive edges: {pat:?}"
        ))),
        4 => cyclic_offset(&pat)
            .map(|offset| ShapeClass::Quadrilateral { offset })
            .ok_or_else(|| VerifyError::ShapeTheoremViolation(format!("quadrilateral pattern {pat:?} is not cyclic"))),
        n => Err(VerifyError::ShapeTheoremViolation(format!("cell has {n} vertices"))),
    }
}

/// Quadrilateral cells (by index) having a vertex `(p/q, p'/q')` with
/// `q ≤ m` or `q' ≤ n`.
pub fn denominator_scan(cells: &[Cell], params: FareyParams) -> Vec<usize> {
    let m = BigInt::from(params.m);
    let n = BigInt::from(params.n);
    cells
        .iter()
        .enumerate()
        .filter(|(_, c)| c.vertex_count() == 4)
        .filter(|(_, c)| {
            c.boundary
                .vertices()
                .iter()
                .any(|p| *p.x.denom() <= m || *p.y.denom() <= n)
        })
        .map(|(i, _)| i)
        .collect()
}

/// Primitive integer equation of the line through two distinct rational
/// points; `None` if the coefficients overflow `i64`.
pub fn line_through(a: &Pt, b: &Pt) -> Option<PrimitiveLine> {
    let f = canonical_line(a, b).ok()?;
    let (u, v, w) = integer_coefficients(&f.a, &f.b, &-&f.c)?;
    PrimitiveLine::new(u, v, w).ok()
}

/// Scales `(a, b, c)` by the positive lcm of the denominators.
fn integer_coefficients(a: &Rat, b: &Rat, c: &Rat) -> Option<(i64, i64, i64)> {
    let l = a.denom().lcm(b.denom()).lcm(c.denom());
    let scale = |r: &Rat| (r.numer() * (&l / r.denom())).to_i64();
    Some((scale(a)?, scale(b)?, scale(c)?))
}

fn reflect_pt_x(p: &Pt) -> Pt {
    Pt::new(p.x.clone(), Rat::one() - &p.y)
}

fn reflect_pt_y(p: &Pt) -> Pt {
    Pt::new(Rat::one() - &p.x, p.y.clone())
}

/// Reflections that carry quadrant `q` onto `Q1`, as (across y = 1/2,
/// across x = 1/2). Both are involutions and commute.
fn to_first_quadrant(q: QuadrantId) -> (bool, bool) {
    match q {
        QuadrantId::Q1 => (false, false),
        QuadrantId::Q2 => (false, true),
        QuadrantId::Q3 => (true, true),
        QuadrantId::Q4 => (true, false),
    }
}

/// Integer equation `u·x + v·y − w` of the line `(p, q)`, signed so that it
/// is a positive multiple of `det(PQ, PM)`.
fn oriented_equation(line: &PrimitiveLine, p: &Pt, q: &Pt) -> (i64, i64, i64) {
    let g = canonical_line(p, q).expect("distinct points");
    let (u, v, w) = line.coeffs();
    let agrees = if u != 0 {
        g.a.signum() == u.signum() as i8
    } else {
        g.b.signum() == v.signum() as i8
    };
    if agrees {
        (u, v, w)
    } else {
        (-u, -v, -w)
    }
}

/// A line of the family through `b` that strictly separates `a` from `c`,
/// given that `a → b` and `b → c` share a closed quadrant and the lines
/// `(a, b)` and `(b, c)` are in the family.
///
/// Reflects the configuration so both edges lie in `Q1`, where the two
/// lines have equations `f`, `f'` oriented with `u ≤ 0 ≤ v`; their
/// difference `f − f'` keeps `|u| ≤ m`, `|v| ≤ n`, vanishes at `b`, and
/// takes opposite signs at `a` and `c`. The result is mapped back.
pub fn three_point_line(a: &Pt, b: &Pt, c: &Pt, params: FareyParams) -> Result<PrimitiveLine, VerifyError> {
    let pre = |s: &str| Err(VerifyError::PreconditionViolated(s.to_string()));
    let cu = RectWindow::unit_square();
    if a == b || b == c || a == c {
        return pre("points are not distinct");
    }
    if orient(a, b, c).is_zero() {
        return pre("points are collinear");
    }
    if !(cu.contains(a) && cu.contains(b) && cu.contains(c)) {
        return pre("points are not in the unit square");
    }
    let common: Vec<QuadrantId> = {
        let ab = crate::exact_geom::quadrant_set(&a.to(b)).expect("distinct");
        let bc = crate::exact_geom::quadrant_set(&b.to(c)).expect("distinct");
        ab.iter().filter(|q| bc.contains(*q)).collect()
    };
    let Some(&quadrant) = common.first() else {
        return pre("AB and BC share no quadrant");
    };
    let (Some(ab_line), Some(bc_line)) = (line_through(a, b), line_through(b, c)) else {
        return pre("line coefficients out of range");
    };
    if !ab_line.in_family(params, &cu) {
        return pre("line (A, B) is not in the family");
    }
    if !bc_line.in_family(params, &cu) {
        return pre("line (B, C) is not in the family");
    }

    let (flip_x, flip_y) = to_first_quadrant(quadrant);
    let map_pt = |p: &Pt| {
        let p = if flip_x { reflect_pt_x(p) } else { p.clone() };
        if flip_y {
            reflect_pt_y(&p)
        } else {
            p
        }
    };
    let map_line = |l: PrimitiveLine| {
        let l = if flip_x { l.reflect_x() } else { l };
        if flip_y {
            l.reflect_y()
        } else {
            l
        }
    };
    let (ma, mb, mc) = (map_pt(a), map_pt(b), map_pt(c));
    let (u, v, w) = oriented_equation(&map_line(ab_line), &ma, &mb);
    let (u2, v2, w2) = oriented_equation(&map_line(bc_line), &mb, &mc);
    if u > 0 || v < 0 || u2 > 0 || v2 < 0 {
        return Err(VerifyError::ConstructionFailed(format!(
            "reflected equations ({u}, {v}, {w}) and ({u2}, {v2}, {w2}) are not in the first-quadrant sign pattern"
        )));
    }
    let phi = PrimitiveLine::new(u - u2, v - v2, w - w2)
        .map_err(|e| VerifyError::ConstructionFailed(format!("difference of equations: {e}")))?;
    let phi = map_line(phi);

    if !phi.in_family(params, &cu) {
        return Err(VerifyError::ConstructionFailed(format!("{phi:?} is not in the family")));
    }
    if !phi.contains(b) {
        return Err(VerifyError::ConstructionFailed(format!("{phi:?} misses B")));
    }
    if phi.eval(a).signum() * phi.eval(c).signum() != -1 {
        return Err(VerifyError::ConstructionFailed(format!(
            "{phi:?} does not separate A and C"
        )));
    }
    Ok(phi)
}

/// Triples `(A, B, C)` of arrangement vertices where `A`, `B` are adjacent
/// along one family line, `B`, `C` adjacent along another, and `A → B`,
/// `B → C` share a quadrant: exactly the admissible inputs of
/// [`three_point_line`].
pub fn harvest_three_point_triples(sub: &Subdivision, params: FareyParams) -> Vec<(Pt, Pt, Pt)> {
    let cu = RectWindow::unit_square();
    // for each vertex, its neighbours along each family line through it
    let mut around: HashMap<usize, Vec<Vec<usize>>> = HashMap::new();
    for (line, vs) in &sub.line_vertices {
        if !line.in_family(params, &cu) {
            continue;
        }
        for (i, &v) in vs.iter().enumerate() {
            let mut nb = Vec::new();
            if i > 0 {
                nb.push(vs[i - 1]);
            }
            if i + 1 < vs.len() {
                nb.push(vs[i + 1]);
            }
            around.entry(v).or_default().push(nb);
        }
    }
    let mut keys: Vec<usize> = around.keys().copied().collect();
    keys.sort_unstable();
    let mut out = Vec::new();
    for b in keys {
        let groups = &around[&b];
        let pb = &sub.vertices[b];
        for (i, first) in groups.iter().enumerate() {
            for (j, second) in groups.iter().enumerate() {
                if i == j {
                    continue;
                }
                for &a in first {
                    for &c in second {
                        let (pa, pc) = (&sub.vertices[a], &sub.vertices[c]);
                        if crate::exact_geom::shares_quadrant(&pa.to(pb), &pb.to(pc)).expect("distinct vertices") {
                            out.push((pa.clone(), pb.clone(), pc.clone()));
                        }
                    }
                }
            }
        }
    }
    out
}

fn check_cells(cells: &[&Cell], classify_cells: bool, report: &mut VerificationReport) {
    for (id, cell) in cells.iter().enumerate() {
        let mut fail = |property: &str| {
            report.violations.push(Violation {
                cell: Some(id),
                property: property.to_string(),
            })
        };
        match cell.vertex_count() {
            3 => report.triangle_count += 1,
            4 => report.quad_count += 1,
            _ => fail("shape: vertex count not in {3, 4}"),
        }
        if validate(cell.boundary.vertices().to_vec()).is_err() {
            fail("boundary is not strictly convex counterclockwise");
        }
        if area(cell).signum() <= 0 {
            fail("area not positive");
        }
        if !check_t2(cell) {
            fail("consecutive edges share a quadrant");
        }
        if classify_cells {
            if let Err(e) = classify(cell) {
                fail(&format!("classification: {e}"));
            }
            if has_forbidden_q1_q3(&cell.boundary) {
                fail("quadrilateral has an edge in Q1 followed by one in Q3");
            }
        }
    }
}

fn empty_report(params: FareyParams, sub: &Subdivision) -> VerificationReport {
    VerificationReport {
        params,
        window: sub.rect.clone(),
        line_count: sub.lines.len(),
        vertex_count: sub.vertices.len(),
        edge_count: sub.edges.len(),
        euler_characteristic: sub.euler_characteristic(),
        cell_count: 0,
        frame_cells: 0,
        triangle_count: 0,
        quad_count: 0,
        total_area: Rat::zero(),
        violations: Vec::new(),
        denominator_claim_exceptions: Vec::new(),
    }
}

/// Full check of an already built Farey complex over the unit square.
pub fn verify_subdivision(params: FareyParams, sub: &Subdivision) -> VerificationReport {
    let mut report = empty_report(params, sub);
    let cells: Vec<&Cell> = sub.cells.iter().collect();
    report.cell_count = cells.len();
    report.total_area = sub.total_area();
    check_cells(&cells, true, &mut report);
    if report.total_area != sub.rect.area() {
        report.violations.push(Violation {
            cell: None,
            property: format!("cell areas sum to {} instead of {}", report.total_area, sub.rect.area()),
        });
    }
    if report.euler_characteristic != 2 {
        report.violations.push(Violation {
            cell: None,
            property: format!("V - E + F = {}", report.euler_characteristic),
        });
    }
    report.denominator_claim_exceptions = denominator_scan(&sub.cells, params);
    report
}

/// Builds `CF(m, n)` and checks every cell.
pub fn verify_all(params: FareyParams) -> VerificationReport {
    let cu = RectWindow::unit_square();
    let sub = build(&enumerate(params, &cu), &cu);
    verify_subdivision(params, &sub)
}

/// Builds the arrangement of every family line meeting `window` and checks
/// shape and consecutive-quadrant properties on the cells whose closure
/// avoids the window frame; those are bounded components of the complement
/// of the lines in the whole plane.
pub fn window_scan(params: FareyParams, window: &RectWindow) -> VerificationReport {
    let sub = build(&enumerate(params, window), window);
    window_scan_subdivision(params, &sub)
}

pub fn window_scan_subdivision(params: FareyParams, sub: &Subdivision) -> VerificationReport {
    let mut report = empty_report(params, sub);
    let (interior, frame): (Vec<&Cell>, Vec<&Cell>) = sub.cells.iter().partition(|c| !c.touches_frame(&sub.rect));
    report.cell_count = interior.len();
    report.frame_cells = frame.len();
    report.total_area = interior.iter().fold(Rat::zero(), |acc, c| acc + area(c));
    check_cells(&interior, false, &mut report);
    if report.euler_characteristic != 2 {
        report.violations.push(Violation {
            cell: None,
            property: format!("V - E + F = {}", report.euler_characteristic),
        });
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cpd::validate;
    use std::collections::BTreeSet;

    fn params(m: i64, n: i64) -> FareyParams {
        FareyParams::new(m, n).unwrap()
    }

    fn half() -> Rat {
        Rat::new(1, 2)
    }

    fn cell_of(points: Vec<Pt>) -> Cell {
        let boundary = validate(points).unwrap();
        let lines = (0..boundary.len())
            .map(|k| line_through(boundary.vertex(k), boundary.vertex(k + 1)).unwrap())
            .collect();
        Cell { boundary, lines }
    }

    fn bottom_triangle() -> Cell {
        cell_of(vec![Pt::ints(0, 0), Pt::ints(1, 0), Pt::new(half(), half())])
    }

    #[test]
    fn t2_examples() {
        assert!(check_t2(&bottom_triangle()));
        let square = cell_of(vec![Pt::ints(0, 0), Pt::ints(1, 0), Pt::ints(1, 1), Pt::ints(0, 1)]);
        assert!(!check_t2(&square));
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify(&bottom_triangle()), Ok(ShapeClass::Triangle));
        let pentagon = cell_of(vec![
            Pt::ints(0, 0),
            Pt::ints(2, 0),
            Pt::ints(3, 2),
            Pt::ints(1, 4),
            Pt::ints(-1, 2),
        ]);
        assert!(matches!(
            classify(&pentagon),
            Err(VerifyError::ShapeTheoremViolation(_))
        ));
        // diamond: edges (1,1), (-1,1), (-1,-1), (1,-1) in Q1..Q4
        let diamond = cell_of(vec![Pt::ints(1, 0), Pt::ints(2, 1), Pt::ints(1, 2), Pt::ints(0, 1)]);
        assert_eq!(classify(&diamond), Ok(ShapeClass::Quadrilateral { offset: 0 }));
        let rotated = Cell {
            boundary: diamond.boundary.rotated(1),
            lines: diamond.lines.clone(),
        };
        assert_eq!(classify(&rotated), Ok(ShapeClass::Quadrilateral { offset: 3 }));
    }

    #[test]
    fn forbidden_pattern_guard() {
        // edges (0,1) in Q1 then (-1,-1) in Q3
        let q = validate(vec![Pt::ints(0, 0), Pt::ints(2, 1), Pt::ints(2, 3), Pt::ints(1, 2)]).unwrap();
        assert!(has_forbidden_q1_q3(&q));
        let diamond = validate(vec![Pt::ints(1, 0), Pt::ints(2, 1), Pt::ints(1, 2), Pt::ints(0, 1)]).unwrap();
        assert!(!has_forbidden_q1_q3(&diamond));
    }

    #[test]
    fn three_point_example() {
        let a = Pt::ints(0, 0);
        let b = Pt::new(half(), half());
        let c = Pt::new(Rat::one(), half());
        let phi = three_point_line(&a, &b, &c, params(1, 2)).unwrap();
        assert_eq!(phi.coeffs(), (1, 1, 1));
        assert_eq!(phi.eval(&a), Rat::from_integer(-1));
        assert_eq!(phi.eval(&c), half());
        assert!(phi.eval(&b).is_zero());
    }

    #[test]
    fn three_point_in_other_quadrants() {
        // the same configuration reflected into Q2, Q3 and Q4
        let pts = [Pt::ints(0, 0), Pt::new(half(), half()), Pt::new(Rat::one(), half())];
        let maps: [fn(&Pt) -> Pt; 3] = [reflect_pt_y, |p| reflect_pt_x(&reflect_pt_y(p)), reflect_pt_x];
        for f in maps {
            let [a, b, c] = pts.clone().map(|p| f(&p));
            let phi = three_point_line(&a, &b, &c, params(1, 2)).unwrap();
            assert!(phi.contains(&b));
            assert_eq!(phi.eval(&a).signum() * phi.eval(&c).signum(), -1);
        }
    }

    #[test]
    fn three_point_preconditions() {
        let p = params(2, 2);
        let collinear = three_point_line(&Pt::ints(0, 0), &Pt::new(half(), half()), &Pt::ints(1, 1), p);
        assert!(matches!(collinear, Err(VerifyError::PreconditionViolated(_))));
        // A→B in Q1 strictly, B→C in Q3 strictly
        let opposite = three_point_line(&Pt::ints(0, 0), &Pt::ints(1, 1), &Pt::new(Rat::zero(), half()), p);
        assert!(matches!(opposite, Err(VerifyError::PreconditionViolated(_))));
        // line (A, B) with slope 1/3 needs n ≥ 3
        let steep = three_point_line(
            &Pt::ints(0, 0),
            &Pt::new(Rat::one(), Rat::new(1, 3)),
            &Pt::ints(1, 1),
            p,
        );
        assert!(matches!(steep, Err(VerifyError::PreconditionViolated(_))));
        let outside = three_point_line(&Pt::ints(0, 0), &Pt::ints(1, 1), &Pt::ints(2, 1), p);
        assert!(matches!(outside, Err(VerifyError::PreconditionViolated(_))));
    }

    #[test]
    fn line_through_normalizes() {
        let l = line_through(
            &Pt::new(Rat::zero(), Rat::new(1, 3)),
            &Pt::new(Rat::one(), Rat::new(2, 3)),
        )
        .unwrap();
        assert_eq!(l.coeffs(), (1, -3, -1));
    }

    #[test]
    fn verify_1_1() {
        let r = verify_all(params(1, 1));
        assert_eq!((r.cell_count, r.triangle_count, r.quad_count), (4, 4, 0));
        assert_eq!(r.line_count, 10);
        assert!(r.passed(), "{:?}", r.violations);
        assert!(r.denominator_claim_exceptions.is_empty());
        assert_eq!(r.total_area, Rat::one());
    }

    #[test]
    fn verify_small_params() {
        for (m, n) in [(2, 1), (2, 2), (3, 2), (4, 3)] {
            let r = verify_all(params(m, n));
            assert!(r.passed(), "({m}, {n}): {:?}", r.violations);
        }
    }

    #[test]
    fn denominator_claim_fails_for_2_1() {
        // Two quadrilaterals of CF(2, 1) have the vertex (1/2, 1/2), whose
        // x denominator 2 does not exceed m = 2.
        let cu = RectWindow::unit_square();
        let p = params(2, 1);
        let sub = build(&enumerate(p, &cu), &cu);
        let found: Vec<Vec<Pt>> = denominator_scan(&sub.cells, p)
            .into_iter()
            .map(|i| sub.cells[i].boundary.vertices().to_vec())
            .collect();
        let r = |a, b| Rat::new(a, b);
        let diamond = |pts: [(i64, i64, i64, i64); 4]| -> Vec<Pt> {
            pts.iter().map(|&(a, b, c, d)| Pt::new(r(a, b), r(c, d))).collect()
        };
        assert_eq!(
            found,
            vec![
                diamond([(1, 4, 1, 2), (1, 3, 1, 3), (1, 2, 1, 2), (1, 3, 2, 3)]),
                diamond([(1, 2, 1, 2), (2, 3, 1, 3), (3, 4, 1, 2), (2, 3, 2, 3)]),
            ]
        );
        assert!(verify_all(params(2, 2)).denominator_claim_exceptions.is_empty());
    }

    #[test]
    fn counts_symmetric_under_swap() {
        let a = verify_all(params(3, 2));
        let b = verify_all(params(2, 3));
        assert_eq!((a.triangle_count, a.quad_count), (b.triangle_count, b.quad_count));
    }

    #[test]
    fn denominator_scan_guard() {
        let quad = cell_of(vec![
            Pt::ints(0, 0),
            Pt::new(half(), Rat::new(1, 4)),
            Pt::new(half(), half()),
            Pt::new(Rat::new(1, 4), half()),
        ]);
        assert_eq!(
            denominator_scan(&[bottom_triangle(), quad.clone()], params(1, 1)),
            vec![1]
        );
        let far = cell_of(vec![
            Pt::new(Rat::new(1, 3), Rat::new(1, 3)),
            Pt::new(Rat::new(2, 5), Rat::new(1, 3)),
            Pt::new(Rat::new(2, 5), Rat::new(2, 5)),
            Pt::new(Rat::new(1, 3), Rat::new(3, 7)),
        ]);
        assert!(denominator_scan(std::slice::from_ref(&far), params(2, 2)).is_empty());
        assert_eq!(denominator_scan(&[far], params(3, 2)), vec![0]);
    }

    #[test]
    fn harvested_triples_are_admissible() {
        let cu = RectWindow::unit_square();
        let p = params(2, 3);
        let sub = build(&enumerate(p, &cu), &cu);
        let triples = harvest_three_point_triples(&sub, p);
        assert!(!triples.is_empty());
        for (a, b, c) in &triples {
            let phi = three_point_line(a, b, c, p).unwrap();
            assert!(phi.contains(b));
        }
    }

    #[test]
    fn window_scan_on_unit_square_matches_interior_cells() {
        let cu = RectWindow::unit_square();
        let p = params(3, 2);
        let w = window_scan(p, &cu);
        let sub = build(&enumerate(p, &cu), &cu);
        let interior: BTreeSet<Vec<Pt>> = sub
            .cells
            .iter()
            .filter(|c| !c.touches_frame(&cu))
            .map(|c| c.boundary.vertices().to_vec())
            .collect();
        assert_eq!(w.cell_count, interior.len());
        assert_eq!(w.cell_count + w.frame_cells, sub.cells.len());
        assert!(w.passed());
    }

    #[test]
    fn window_scan_small() {
        let r = window_scan(params(1, 1), &RectWindow::square(-2, 3).unwrap());
        assert!(r.passed(), "{:?}", r.violations);
        assert!(r.cell_count > 0);
    }

    #[test]
    fn report_json_is_exact() {
        let r = verify_all(params(1, 1));
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["total_area"], "1/1");
        assert_eq!(v["params"], serde_json::json!({"m": 1, "n": 1}));
        assert_eq!(v["window"]["x_max"], "1/1");
        assert_eq!(r.to_json(), verify_all(params(1, 1)).to_json());
    }
}
