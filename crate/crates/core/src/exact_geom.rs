//! Exact rational predicate kernel.
//!
//! Everything in this crate that makes a geometric decision goes through the
//! types here: [`Rat`] scalars kept in lowest terms, points and vectors over
//! them, the oriented line form `f(M) = det(AB, AM)`, closed quadrants, and
//! the proper-crossing test for segments. There is no floating point on any
//! decision path; [`Rat::to_f64`] exists for display only.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeomError {
    #[error("degenerate input: the two points coincide")]
    DegeneratePoints,
    #[error("the zero vector has no quadrant")]
    ZeroVector,
    #[error("cannot parse rational {0:?}")]
    ParseRat(String),
}

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator, so `==` is structural equality of the reduced fraction.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rat(BigRational);

impl Rat {
    /// Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        Rat(BigRational::new(num.into(), den.into()))
    }

    pub fn from_integer(n: i64) -> Self {
        Rat(BigRational::from_integer(n.into()))
    }

    pub fn from_big(num: BigInt, den: BigInt) -> Self {
        Rat(BigRational::new(num, den))
    }

    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// -1, 0 or +1.
    pub fn signum(&self) -> i8 {
        match self.0.numer().sign() {
            num_bigint::Sign::Minus => -1,
            num_bigint::Sign::NoSign => 0,
            num_bigint::Sign::Plus => 1,
        }
    }

    pub fn abs(&self) -> Rat {
        Rat(self.0.abs())
    }

    pub fn floor(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    pub fn ceil(&self) -> BigInt {
        self.0.ceil().to_integer()
    }

    /// Lossy; only for rendering.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// `(numerator, denominator)` if both fit in an `i64`.
    pub fn to_i64_parts(&self) -> Option<(i64, i64)> {
        Some((self.numer().to_i64()?, self.denom().to_i64()?))
    }

    pub fn as_big(&self) -> &BigRational {
        &self.0
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Self {
        Rat::from_integer(n)
    }
}

impl From<BigRational> for Rat {
    fn from(r: BigRational) -> Self {
        Rat(r)
    }
}

/// Always `p/q`, including `q = 1`, so serialized values have one shape.
impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

/// Accepts `p` or `p/q` (any sign placement, reduced on parse).
impl FromStr for Rat {
    type Err = GeomError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || GeomError::ParseRat(s.to_string());
        let t = s.trim();
        let (num, den) = match t.split_once('/') {
            Some((a, b)) => (a.trim(), b.trim()),
            None => (t, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| err())?;
        let den: BigInt = den.parse().map_err(|_| err())?;
        if den.is_zero() {
            return Err(err());
        }
        Ok(Rat(BigRational::new(num, den)))
    }
}

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! rat_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat(self.0.$method(rhs.0))
            }
        }
        impl $trait<&Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat(self.0.$method(&rhs.0))
            }
        }
        impl $trait<Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat((&self.0).$method(rhs.0))
            }
        }
    };
}

rat_binop!(Add, add);
rat_binop!(Sub, sub);
rat_binop!(Mul, mul);
rat_binop!(Div, div);

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

/// Point of the plane.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Pt {
    pub x: Rat,
    pub y: Rat,
}

impl Pt {
    pub fn new(x: Rat, y: Rat) -> Self {
        Pt { x, y }
    }

    pub fn ints(x: i64, y: i64) -> Self {
        Pt::new(x.into(), y.into())
    }

    /// Vector from `self` to `other`.
    pub fn to(&self, other: &Pt) -> Vec2 {
        Vec2::new(&other.x - &self.x, &other.y - &self.y)
    }

    pub fn translate(&self, v: &Vec2) -> Pt {
        Pt::new(&self.x + &v.dx, &self.y + &v.dy)
    }
}

/// Lexicographic on `(x, y)`.
impl PartialOrd for Pt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Pt {
    fn cmp(&self, other: &Self) -> Ordering {
        self.x.cmp(&other.x).then_with(|| self.y.cmp(&other.y))
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Vec2 {
    pub dx: Rat,
    pub dy: Rat,
}

impl Vec2 {
    pub fn new(dx: Rat, dy: Rat) -> Self {
        Vec2 { dx, dy }
    }

    pub fn ints(dx: i64, dy: i64) -> Self {
        Vec2::new(dx.into(), dy.into())
    }

    pub fn is_zero(&self) -> bool {
        self.dx.is_zero() && self.dy.is_zero()
    }
}

impl Add<&Vec2> for &Vec2 {
    type Output = Vec2;
    fn add(self, rhs: &Vec2) -> Vec2 {
        Vec2::new(&self.dx + &rhs.dx, &self.dy + &rhs.dy)
    }
}

impl Neg for &Vec2 {
    type Output = Vec2;
    fn neg(self) -> Vec2 {
        Vec2::new(-&self.dx, -&self.dy)
    }
}

/// `ad - bc` for `v = (a, b)`, `w = (c, d)`.
pub fn det2(v: &Vec2, w: &Vec2) -> Rat {
    &v.dx * &w.dy - &v.dy * &w.dx
}

/// Orientation of the triple: `det2(AB, AC)`.
pub fn orient(a: &Pt, b: &Pt, c: &Pt) -> Rat {
    det2(&a.to(b), &a.to(c))
}

/// Sign of a predicate value.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of(r: &Rat) -> Sign {
        match r.signum() {
            -1 => Sign::Negative,
            0 => Sign::Zero,
            _ => Sign::Positive,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }
}

/// Affine form `a·x + b·y + c` with `(a, b) ≠ (0, 0)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct AffineForm {
    pub a: Rat,
    pub b: Rat,
    pub c: Rat,
}

impl AffineForm {
    pub fn eval(&self, p: &Pt) -> Rat {
        &self.a * &p.x + &self.b * &p.y + &self.c
    }
}

impl Neg for &AffineForm {
    type Output = AffineForm;
    fn neg(self) -> AffineForm {
        AffineForm {
            a: -&self.a,
            b: -&self.b,
            c: -&self.c,
        }
    }
}

/// The oriented equation `f(M) = det(AB, AM)` of the line through `a` and
/// `b`: zero on the line, positive to the left of the direction `a → b`.
pub fn canonical_line(a: &Pt, b: &Pt) -> Result<AffineForm, GeomError> {
    if a == b {
        return Err(GeomError::DegeneratePoints);
    }
    // det(AB, AM) = (xB - xA)(y - yA) - (yB - yA)(x - xA)
    let alpha = -(&b.y - &a.y);
    let beta = &b.x - &a.x;
    let c = -(&alpha * &a.x) - &beta * &a.y;
    Ok(AffineForm { a: alpha, b: beta, c })
}

pub fn side_of(f: &AffineForm, p: &Pt) -> Sign {
    Sign::of(&f.eval(p))
}

/// True iff the open segments `(a, b)` and `(c, d)` meet in exactly one
/// point interior to both.
pub fn segments_cross(a: &Pt, b: &Pt, c: &Pt, d: &Pt) -> Result<bool, GeomError> {
    if a == b || c == d {
        return Err(GeomError::DegeneratePoints);
    }
    let s1 = orient(a, b, c).signum() * orient(a, b, d).signum();
    if s1 >= 0 {
        return Ok(false);
    }
    let s2 = orient(c, d, a).signum() * orient(c, d, b).signum();
    Ok(s2 < 0)
}

/// One of the four closed quadrants of the vector plane.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum QuadrantId {
    Q1,
    Q2,
    Q3,
    Q4,
}

impl QuadrantId {
    pub const ALL: [QuadrantId; 4] = [QuadrantId::Q1, QuadrantId::Q2, QuadrantId::Q3, QuadrantId::Q4];

    pub fn opposite(self) -> QuadrantId {
        match self {
            QuadrantId::Q1 => QuadrantId::Q3,
            QuadrantId::Q2 => QuadrantId::Q4,
            QuadrantId::Q3 => QuadrantId::Q1,
            QuadrantId::Q4 => QuadrantId::Q2,
        }
    }

    /// 0-based position: Q1 → 0, …, Q4 → 3.
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> QuadrantId {
        QuadrantId::ALL[i % 4]
    }

    fn bit(self) -> u8 {
        1 << self.index()
    }
}

/// Set of closed quadrants. A nonzero vector lies in one quadrant, or in two
/// when it is on an axis.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct QuadrantSet(u8);

impl QuadrantSet {
    pub fn empty() -> Self {
        QuadrantSet(0)
    }

    pub fn with(self, q: QuadrantId) -> Self {
        QuadrantSet(self.0 | q.bit())
    }

    pub fn contains(self, q: QuadrantId) -> bool {
        self.0 & q.bit() != 0
    }

    pub fn intersects(self, other: QuadrantSet) -> bool {
        self.0 & other.0 != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = QuadrantId> {
        QuadrantId::ALL.into_iter().filter(move |q| self.contains(*q))
    }

    /// Quadrants of a vector with the given coordinate signs.
    pub fn from_signs(sx: i8, sy: i8) -> Self {
        let mut s = QuadrantSet::empty();
        if sx >= 0 && sy >= 0 {
            s = s.with(QuadrantId::Q1);
        }
        if sx <= 0 && sy >= 0 {
            s = s.with(QuadrantId::Q2);
        }
        if sx <= 0 && sy <= 0 {
            s = s.with(QuadrantId::Q3);
        }
        if sx >= 0 && sy <= 0 {
            s = s.with(QuadrantId::Q4);
        }
        s
    }
}

impl fmt::Debug for QuadrantSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<QuadrantId> for QuadrantSet {
    fn from_iter<I: IntoIterator<Item = QuadrantId>>(iter: I) -> Self {
        iter.into_iter().fold(QuadrantSet::empty(), QuadrantSet::with)
    }
}

impl Serialize for QuadrantSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

pub fn quadrant_set(v: &Vec2) -> Result<QuadrantSet, GeomError> {
    if v.is_zero() {
        return Err(GeomError::ZeroVector);
    }
    Ok(QuadrantSet::from_signs(v.dx.signum(), v.dy.signum()))
}

pub fn shares_quadrant(v: &Vec2, w: &Vec2) -> Result<bool, GeomError> {
    Ok(quadrant_set(v)?.intersects(quadrant_set(w)?))
}

/// One vector in Q1 and the other in Q3, or one in Q2 and the other in Q4.
pub fn opposite_quadrants(v: &Vec2, w: &Vec2) -> Result<bool, GeomError> {
    Ok(sets_opposite(quadrant_set(v)?, quadrant_set(w)?))
}

pub(crate) fn sets_opposite(a: QuadrantSet, b: QuadrantSet) -> bool {
    a.iter().any(|q| b.contains(q.opposite()))
}
