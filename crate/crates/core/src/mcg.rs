//! Normal-form arithmetic in the mapping class group of the 4-holed
//! sphere, which splits as Z^4 x F_2: a central boundary-twist exponent
//! vector and a reduced word in the twists along the two base slopes.
//!
//! Products are written right-to-left (the rightmost factor acts first)
//! and words are stored in that composition order. The action on slope
//! curves goes through PSL(2,Z): the generator twists act by
//! `[[1,-2],[0,1]]` and `[[1,0],[2,1]]`, and a general slope twist by the
//! transvection matrix of its slope.

use crate::curve::{Curve, CurveKind};
use crate::error::{Error, Result};
use crate::psl2::{self, ProjMatrix};
use crate::word::{Word, GEN_A, GEN_B};
use alloc::vec::Vec;
use core::fmt;

/// Normal form of an element of Mod of the 4-holed sphere.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MappingClass {
    boundary_exp: [i64; 4],
    word: Word,
}

/// Image in the abelianization Z^4 (+) Z^2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AbelianClass {
    pub delta_part: [i64; 4],
    pub ab_part: (i64, i64),
}

impl MappingClass {
    pub fn identity() -> Self {
        MappingClass::default()
    }

    pub fn new(boundary_exp: [i64; 4], word: Word) -> Self {
        MappingClass { boundary_exp, word }
    }

    pub fn from_word(word: Word) -> Self {
        MappingClass { boundary_exp: [0; 4], word }
    }

    pub fn boundary_exp(&self) -> [i64; 4] {
        self.boundary_exp
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    /// Group law: boundary parts add (they are central), words concatenate
    /// and freely reduce. `g.multiply(&h)` is g composed after h.
    pub fn multiply(&self, h: &MappingClass) -> MappingClass {
        let mut boundary_exp = self.boundary_exp;
        for i in 0..4 {
            boundary_exp[i] += h.boundary_exp[i];
        }
        MappingClass { boundary_exp, word: self.word.mul(&h.word) }
    }

    pub fn invert(&self) -> MappingClass {
        MappingClass {
            boundary_exp: self.boundary_exp.map(|x| -x),
            word: self.word.inverse(),
        }
    }

    pub fn pow(&self, e: i64) -> MappingClass {
        MappingClass {
            boundary_exp: self.boundary_exp.map(|x| x * e),
            word: self.word.pow(e),
        }
    }

    pub fn abelianize(&self) -> AbelianClass {
        AbelianClass { delta_part: self.boundary_exp, ab_part: self.word.exponent_sums() }
    }

    /// Central elements are exactly the boundary multitwists.
    pub fn is_central(&self) -> bool {
        self.word.is_empty()
    }

    /// The image in PSL(2,Z) governing the action on slope curves.
    pub fn sigma(&self) -> ProjMatrix {
        psl2::rho(&self.word, 2).expect("z = 2 is always valid")
    }

    /// Two mapping classes are conjugate iff the central parts agree and
    /// the free-group parts are conjugate words.
    pub fn conjugacy_witness(&self, other: &MappingClass) -> Option<MappingClass> {
        if self.boundary_exp != other.boundary_exp {
            return None;
        }
        self.word.conjugacy_witness(&other.word).map(MappingClass::from_word)
    }
}

impl fmt::Display for MappingClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [e1, e2, e3, e4] = self.boundary_exp;
        write!(f, "delta=({e1},{e2},{e3},{e4}) word={}", self.word)
    }
}

fn base_of_parity(c: &Curve, parity: (u8, u8)) -> (Curve, MappingClass) {
    let surface = c.surface();
    match parity {
        (1, 0) => (
            Curve::slope(surface, 1, 0).unwrap(),
            MappingClass::from_word(Word::new([GEN_A])),
        ),
        (0, 1) => (
            Curve::slope(surface, 0, 1).unwrap(),
            MappingClass::from_word(Word::new([GEN_B])),
        ),
        // The lantern relation fixes the normal form of the third class:
        // t_c = t_a^-1 t_b^-1 t_d1 t_d2 t_d3 t_d4.
        _ => (
            Curve::slope(surface, 1, 1).unwrap(),
            MappingClass::new([1, 1, 1, 1], Word::new([-GEN_A, -GEN_B])),
        ),
    }
}

/// The right-handed Dehn twist along a curve, as a normal form.
pub fn dehn_twist(c: &Curve) -> Result<MappingClass> {
    match c.kind() {
        CurveKind::Boundary(i) => {
            let mut boundary_exp = [0i64; 4];
            if c.surface().holes() != 4 {
                return Err(Error::Unsupported("mapping classes live on the 4-holed page"));
            }
            boundary_exp[(*i - 1) as usize] = 1;
            Ok(MappingClass::new(boundary_exp, Word::empty()))
        }
        CurveKind::Slope(_, _) => {
            let parity = c.parity_class().unwrap();
            let (base, base_twist) = base_of_parity(c, parity);
            let w = twist_conjugator_word(c, &base)?;
            Ok(w.multiply(&base_twist).multiply(&w.invert()))
        }
        CurveKind::Holes(_) => Err(Error::Unsupported("hole-set curves have no twist normal form")),
    }
}

/// Action of a mapping class on a curve: boundary curves are fixed, slope
/// curves transform projectively under `sigma`.
pub fn act_on_curve(g: &MappingClass, c: &Curve) -> Result<Curve> {
    match c.kind() {
        CurveKind::Boundary(_) => Ok(c.clone()),
        CurveKind::Slope(p, q) => {
            // apply the word letter by letter (rightmost acts first) in
            // wide arithmetic; heights grow fast under long words
            let (mut p1, mut q1) = (*p as i128, *q as i128);
            for &l in g.word.letters().iter().rev() {
                (p1, q1) = letter_act_wide(l, p1, q1)?;
            }
            let p1 = i64::try_from(p1).map_err(|_| Error::Overflow)?;
            let q1 = i64::try_from(q1).map_err(|_| Error::Overflow)?;
            Curve::slope(c.surface(), p1, q1)
        }
        CurveKind::Holes(_) => Err(Error::Unsupported("no mapping class action on hole-set curves")),
    }
}

fn letter_act_wide(letter: i8, p: i128, q: i128) -> Result<(i128, i128)> {
    let twice = |x: i128| x.checked_mul(2).ok_or(Error::Overflow);
    Ok(match letter {
        1 => (p.checked_sub(twice(q)?).ok_or(Error::Overflow)?, q),
        -1 => (p.checked_add(twice(q)?).ok_or(Error::Overflow)?, q),
        2 => (p, q.checked_add(twice(p)?).ok_or(Error::Overflow)?),
        _ => (p, q.checked_sub(twice(p)?).ok_or(Error::Overflow)?),
    })
}

fn letter_act(letter: i8, p: i64, q: i64) -> (i64, i64) {
    // sigma(A) = [[1,-2],[0,1]], sigma(B) = [[1,0],[2,1]]
    let (p1, q1) = match letter {
        1 => (p - 2 * q, q),
        -1 => (p + 2 * q, q),
        2 => (p, q + 2 * p),
        _ => (p, q - 2 * p),
    };
    crate::curve::canonical_slope(p1, q1).expect("unimodular image of a nonzero vector")
}

/// A word `w` with `act(w, base) = c`, found by continued-fraction descent
/// in the level-2 Farey graph: each step strictly reduces `|p| + |q|`
/// (with one final norm-preserving step allowed when it lands on the base
/// exactly). Ties prefer A over B and positive over negative exponents.
pub fn twist_conjugator_word(c: &Curve, base: &Curve) -> Result<MappingClass> {
    let (mut p, mut q) = c.slope_pair().ok_or(Error::Unsupported("conjugator needs slopes"))?;
    let (bp, bq) = base.slope_pair().ok_or(Error::Unsupported("conjugator needs slopes"))?;
    if c.parity_class() != base.parity_class() {
        return Err(Error::ClassMismatch);
    }
    let mut letters: Vec<i8> = Vec::new();
    while (p, q) != (bp, bq) {
        let norm = p.unsigned_abs() + q.unsigned_abs();
        let mut chosen = None;
        // candidate letter l, stripping to act(l^-1, (p,q))
        for letter in [GEN_A, -GEN_A, GEN_B, -GEN_B] {
            let (p1, q1) = letter_act(-letter, p, q);
            let n1 = p1.unsigned_abs() + q1.unsigned_abs();
            if n1 < norm || (p1, q1) == (bp, bq) {
                chosen = Some((letter, p1, q1));
                break;
            }
        }
        let (letter, p1, q1) = chosen.ok_or(Error::ClassMismatch)?;
        letters.push(letter);
        (p, q) = (p1, q1);
    }
    Ok(MappingClass::from_word(Word::new(letters)))
}
