//! The line family: every line `u·x + v·y − w = 0` with integer
//! coefficients, `|u| ≤ m`, `|v| ≤ n`, `(u, v) ≠ (0, 0)`, that meets a
//! closed rectangle (the unit square for the Farey complex proper).

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact_geom::{AffineForm, Pt, Rat, Sign};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LineError {
    #[error("(u, v) = (0, 0) does not define a line")]
    NullDirection,
    #[error("m and n must be at least 1 (got m = {m}, n = {n})")]
    InvalidParams { m: i64, n: i64 },
    #[error("window bounds are not well ordered")]
    EmptyWindow,
    #[error("window bound {0} does not fit in 64-bit numerator/denominator")]
    WindowOutOfRange(Rat),
}

/// Integer line `u·x + v·y − w = 0` in primitive form: `gcd(u, v, w) = 1`
/// and `(u, v)` lexicographically positive. Two equal values are the same
/// geometric line.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PrimitiveLine {
    u: i64,
    v: i64,
    w: i64,
}

impl PrimitiveLine {
    pub fn new(u: i64, v: i64, w: i64) -> Result<Self, LineError> {
        if u == 0 && v == 0 {
            return Err(LineError::NullDirection);
        }
        let g = u.gcd(&v).gcd(&w);
        let (mut u, mut v, mut w) = (u / g, v / g, w / g);
        if u < 0 || (u == 0 && v < 0) {
            u = -u;
            v = -v;
            w = -w;
        }
        Ok(PrimitiveLine { u, v, w })
    }

    pub fn u(&self) -> i64 {
        self.u
    }

    pub fn v(&self) -> i64 {
        self.v
    }

    pub fn w(&self) -> i64 {
        self.w
    }

    pub fn coeffs(&self) -> (i64, i64, i64) {
        (self.u, self.v, self.w)
    }

    /// `u·x + v·y − w` at `p`.
    pub fn eval(&self, p: &Pt) -> Rat {
        Rat::from_integer(self.u) * &p.x + Rat::from_integer(self.v) * &p.y - Rat::from_integer(self.w)
    }

    pub fn side(&self, p: &Pt) -> Sign {
        Sign::of(&self.eval(p))
    }

    pub fn contains(&self, p: &Pt) -> bool {
        self.eval(p).is_zero()
    }

    pub fn to_affine(&self) -> AffineForm {
        AffineForm {
            a: self.u.into(),
            b: self.v.into(),
            c: (-self.w).into(),
        }
    }

    pub fn is_parallel(&self, other: &PrimitiveLine) -> bool {
        self.u * other.v == self.v * other.u
    }

    /// Mirror image across `y = 1/2`.
    pub fn reflect_x(&self) -> PrimitiveLine {
        PrimitiveLine::new(self.u, -self.v, self.w - self.v).expect("reflection keeps (u, v) nonzero")
    }

    /// Mirror image across `x = 1/2`.
    pub fn reflect_y(&self) -> PrimitiveLine {
        PrimitiveLine::new(-self.u, self.v, self.w - self.u).expect("reflection keeps (u, v) nonzero")
    }

    /// Mirror image across `y = x`.
    pub fn swap_xy(&self) -> PrimitiveLine {
        PrimitiveLine::new(self.v, self.u, self.w).expect("swap keeps (u, v) nonzero")
    }

    /// Membership in the family for `params` over `rect`. Valid because the
    /// primitive representative has the smallest coefficients of all integer
    /// equations of the line.
    pub fn in_family(&self, params: FareyParams, rect: &RectWindow) -> bool {
        self.u.abs() <= params.m && self.v.abs() <= params.n && meets_rect(self, rect)
    }
}

impl fmt::Debug for PrimitiveLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.u, self.v, self.w)
    }
}

impl fmt::Display for PrimitiveLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x + {}y = {}", self.u, self.v, self.w)
    }
}

/// Coefficient bounds `(m, n)`, both at least 1.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FareyParams {
    pub m: i64,
    pub n: i64,
}

impl FareyParams {
    pub fn new(m: i64, n: i64) -> Result<Self, LineError> {
        if m < 1 || n < 1 {
            return Err(LineError::InvalidParams { m, n });
        }
        Ok(FareyParams { m, n })
    }

    pub fn swapped(self) -> FareyParams {
        FareyParams { m: self.n, n: self.m }
    }
}

/// Closed axis-parallel rectangle with rational bounds.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct RectWindow {
    pub x_min: Rat,
    pub x_max: Rat,
    pub y_min: Rat,
    pub y_max: Rat,
}

impl RectWindow {
    pub fn new(x_min: Rat, x_max: Rat, y_min: Rat, y_max: Rat) -> Result<Self, LineError> {
        if x_min >= x_max || y_min >= y_max {
            return Err(LineError::EmptyWindow);
        }
        for b in [&x_min, &x_max, &y_min, &y_max] {
            if b.to_i64_parts().is_none() {
                return Err(LineError::WindowOutOfRange(b.clone()));
            }
        }
        Ok(RectWindow {
            x_min,
            x_max,
            y_min,
            y_max,
        })
    }

    pub fn unit_square() -> Self {
        RectWindow {
            x_min: Rat::zero(),
            x_max: Rat::one(),
            y_min: Rat::zero(),
            y_max: Rat::one(),
        }
    }

    pub fn square(lo: i64, hi: i64) -> Result<Self, LineError> {
        RectWindow::new(lo.into(), hi.into(), lo.into(), hi.into())
    }

    /// Counterclockwise from `(x_min, y_min)`.
    pub fn corners(&self) -> [Pt; 4] {
        [
            Pt::new(self.x_min.clone(), self.y_min.clone()),
            Pt::new(self.x_max.clone(), self.y_min.clone()),
            Pt::new(self.x_max.clone(), self.y_max.clone()),
            Pt::new(self.x_min.clone(), self.y_max.clone()),
        ]
    }

    pub fn area(&self) -> Rat {
        (&self.x_max - &self.x_min) * (&self.y_max - &self.y_min)
    }

    /// The four sides as primitive integer lines: bottom, right, top, left.
    pub fn boundary_lines(&self) -> [PrimitiveLine; 4] {
        let vertical = |b: &Rat| {
            let (p, q) = b.to_i64_parts().expect("bounds checked at construction");
            PrimitiveLine::new(q, 0, p).expect("q > 0")
        };
        let horizontal = |b: &Rat| {
            let (p, q) = b.to_i64_parts().expect("bounds checked at construction");
            PrimitiveLine::new(0, q, p).expect("q > 0")
        };
        [
            horizontal(&self.y_min),
            vertical(&self.x_max),
            horizontal(&self.y_max),
            vertical(&self.x_min),
        ]
    }

    /// Closed containment.
    pub fn contains(&self, p: &Pt) -> bool {
        self.x_min <= p.x && p.x <= self.x_max && self.y_min <= p.y && p.y <= self.y_max
    }

    /// True iff `p` lies on one of the four sides.
    pub fn on_frame(&self, p: &Pt) -> bool {
        self.contains(p) && (p.x == self.x_min || p.x == self.x_max || p.y == self.y_min || p.y == self.y_max)
    }
}

/// True iff the line meets the closed rectangle, decided by the signs of
/// `u·x + v·y − w` at the corners.
pub fn meets_rect(line: &PrimitiveLine, rect: &RectWindow) -> bool {
    let signs: Vec<Sign> = rect.corners().iter().map(|c| line.side(c)).collect();
    !(signs.iter().all(|s| *s == Sign::Positive) || signs.iter().all(|s| *s == Sign::Negative))
}

/// All lines of the family meeting `rect`, one primitive representative each,
/// in ascending `(u, v, w)` order.
pub fn enumerate(params: FareyParams, rect: &RectWindow) -> BTreeSet<PrimitiveLine> {
    let corners = rect.corners();
    let mut out = BTreeSet::new();
    for u in 0..=params.m {
        for v in -params.n..=params.n {
            // (u, v) and (−u, −v) give the same lines; keep the lexicographically positive one.
            if u == 0 && v <= 0 {
                continue;
            }
            let values: Vec<Rat> = corners
                .iter()
                .map(|c| Rat::from_integer(u) * &c.x + Rat::from_integer(v) * &c.y)
                .collect();
            let lo = values.iter().min().expect("four corners").ceil();
            let hi = values.iter().max().expect("four corners").floor();
            let (Some(lo), Some(hi)) = (lo.to_i64(), hi.to_i64()) else {
                continue;
            };
            for w in lo..=hi {
                let line = PrimitiveLine::new(u, v, w).expect("(u, v) nonzero");
                if meets_rect(&line, rect) {
                    out.insert(line);
                }
            }
        }
    }
    out
}

/// `(2m + 1)(2n + 1)(2m + 2n + 1)`, an upper bound on the family size over
/// the unit square.
pub fn cardinality_bound(params: FareyParams) -> i64 {
    let (m, n) = (params.m, params.n);
    (2 * m + 1) * (2 * n + 1) * (2 * m + 2 * n + 1)
}

pub fn lines_to_json(lines: &BTreeSet<PrimitiveLine>) -> String {
    serde_json::to_string_pretty(lines).expect("integer triples always serialize")
}
