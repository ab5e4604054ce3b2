//! Isotopy classes of essential simple closed curves on a holed sphere.
//!
//! On the 4-holed sphere every essential non-boundary curve is identified
//! with a rational slope: a canonical coprime pair `(p, q)`. The
//! geometric intersection number of two slope curves is `2|ps - qr|`.
//! For pages with more holes only boundary curves and curves given
//! directly by their enclosed hole set are supported; that homology-level
//! data is all the homology engine needs.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// A holed sphere, determined by its number of boundary components.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Surface {
    holes: u32,
}

impl Surface {
    pub fn new(holes: u32) -> Result<Self> {
        if holes < 2 {
            return Err(Error::TooFewHoles);
        }
        Ok(Surface { holes })
    }

    pub fn holes(&self) -> u32 {
        self.holes
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Canonical representative of a slope: divide by the gcd, flip sign so
/// `q >= 0`, and normalize `q = 0` to `(1, 0)`.
pub fn canonical_slope(p: i64, q: i64) -> Result<(i64, i64)> {
    if p == 0 && q == 0 {
        return Err(Error::ZeroVector);
    }
    let g = gcd(p, q);
    let (mut p, mut q) = (p / g, q / g);
    if q < 0 || (q == 0 && p < 0) {
        p = -p;
        q = -q;
    }
    Ok((p, q))
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CurveKind {
    /// Parallel to the i-th boundary component, `1..=holes`.
    Boundary(u32),
    /// Essential non-boundary curve on the 4-holed sphere, by canonical slope.
    Slope(i64, i64),
    /// Curve known only by the set of holes it encloses (general pages).
    Holes(BTreeSet<u32>),
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Curve {
    surface: Surface,
    kind: CurveKind,
}

impl Curve {
    pub fn boundary(surface: Surface, index: u32) -> Result<Self> {
        if index < 1 || index > surface.holes() {
            return Err(Error::BadBoundaryIndex);
        }
        Ok(Curve { surface, kind: CurveKind::Boundary(index) })
    }

    /// Largest accepted slope height. Twist words grow linearly with the
    /// height, so the cap keeps every downstream computation exact and
    /// feasible; results beyond it are reported as out of range, never
    /// silently wrapped.
    pub const MAX_HEIGHT: i64 = 1 << 20;

    /// Slope calculus is only available on the 4-holed sphere.
    pub fn slope(surface: Surface, p: i64, q: i64) -> Result<Self> {
        if surface.holes() != 4 {
            return Err(Error::Unsupported("slope curves need a 4-holed page"));
        }
        let (p, q) = canonical_slope(p, q)?;
        if p.abs() > Self::MAX_HEIGHT || q > Self::MAX_HEIGHT {
            return Err(Error::Overflow);
        }
        Ok(Curve { surface, kind: CurveKind::Slope(p, q) })
    }

    /// A curve on a general page, given by its enclosed hole set. The set
    /// must be a nonempty subset of the inner holes `1..holes` (the outer
    /// hole is excluded by convention).
    pub fn from_holes(surface: Surface, enclosed: BTreeSet<u32>) -> Result<Self> {
        if enclosed.is_empty() || enclosed.iter().any(|&i| i < 1 || i >= surface.holes()) {
            return Err(Error::BadHoleSet);
        }
        Ok(Curve { surface, kind: CurveKind::Holes(enclosed) })
    }

    pub fn surface(&self) -> Surface {
        self.surface
    }

    pub fn kind(&self) -> &CurveKind {
        &self.kind
    }

    pub fn is_boundary(&self) -> bool {
        matches!(self.kind, CurveKind::Boundary(_))
    }

    pub fn slope_pair(&self) -> Option<(i64, i64)> {
        match self.kind {
            CurveKind::Slope(p, q) => Some((p, q)),
            _ => None,
        }
    }

    /// Geometric intersection number. Boundary-parallel curves meet
    /// nothing; two slopes `(p,q)`, `(r,s)` meet in `2|ps - qr|` points.
    pub fn intersection_number(&self, other: &Curve) -> Result<u64> {
        if self.surface != other.surface {
            return Err(Error::SurfaceMismatch);
        }
        match (&self.kind, &other.kind) {
            (CurveKind::Boundary(_), _) | (_, CurveKind::Boundary(_)) => Ok(0),
            (CurveKind::Slope(p, q), CurveKind::Slope(r, s)) => {
                Ok(2 * (p * s - q * r).unsigned_abs())
            }
            _ => Err(Error::Unsupported(
                "intersection number of non-boundary curves needs slopes on a 4-holed page",
            )),
        }
    }

    /// The mod-2 class of a slope, indexing the three pairings of the four
    /// holes. Never `(0,0)` since slopes are coprime. `None` for
    /// boundary and hole-set curves.
    pub fn parity_class(&self) -> Option<(u8, u8)> {
        match self.kind {
            CurveKind::Slope(p, q) => Some(((p.rem_euclid(2)) as u8, (q.rem_euclid(2)) as u8)),
            _ => None,
        }
    }

    /// The set of holes enclosed by the curve, under the fixed labeling:
    /// slope class (1,0) encloses {1,2}, (0,1) encloses {2,3}, (1,1)
    /// encloses {1,3}; the outer boundary curve encloses all inner holes.
    pub fn hole_class(&self) -> BTreeSet<u32> {
        match &self.kind {
            CurveKind::Boundary(i) if *i == self.surface.holes() => {
                (1..self.surface.holes()).collect()
            }
            CurveKind::Boundary(i) => [*i].into_iter().collect(),
            CurveKind::Slope(_, _) => {
                let holes: Vec<u32> = match self.parity_class().unwrap() {
                    (1, 0) => alloc::vec![1, 2],
                    (0, 1) => alloc::vec![2, 3],
                    _ => alloc::vec![1, 3],
                };
                holes.into_iter().collect()
            }
            CurveKind::Holes(s) => s.clone(),
        }
    }
}

impl fmt::Display for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            CurveKind::Boundary(i) => write!(f, "d{i}"),
            CurveKind::Slope(p, q) => write!(f, "{p}/{q}"),
            CurveKind::Holes(s) => {
                write!(f, "{{")?;
                for (k, i) in s.iter().enumerate() {
                    if k > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{i}")?;
                }
                write!(f, "}}")
            }
        }
    }
}
