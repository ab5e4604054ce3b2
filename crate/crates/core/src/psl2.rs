//! Exact PSL(2,Z) arithmetic and the twist representation.
//!
//! The representation sends the two twist generators to
//! `[[1,-z],[0,1]]` and `[[1,0],[z,1]]`; for z >= 2 it is injective, and
//! membership in the resulting rank-2 free (Sanov-type) subgroup is
//! decided by a ping-pong descent on the max-norm of the entries.

use crate::error::{Error, Result};
use crate::word::{Word, GEN_A, GEN_B};
use alloc::vec::Vec;
use core::fmt;

/// An element of PSL(2,Z): a determinant-1 integer matrix up to global
/// sign. The canonical representative has its first nonzero entry (in
/// reading order a, b, c, d) positive.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjMatrix {
    a: i64,
    b: i64,
    c: i64,
    d: i64,
}

impl ProjMatrix {
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        if a * d - b * c != 1 {
            return Err(Error::Unsupported("matrix must have determinant 1"));
        }
        Ok(Self::canonical(a, b, c, d))
    }

    fn canonical(a: i64, b: i64, c: i64, d: i64) -> Self {
        let lead = [a, b, c, d].into_iter().find(|&x| x != 0).unwrap_or(0);
        if lead < 0 {
            ProjMatrix { a: -a, b: -b, c: -c, d: -d }
        } else {
            ProjMatrix { a, b, c, d }
        }
    }

    pub fn identity() -> Self {
        ProjMatrix { a: 1, b: 0, c: 0, d: 1 }
    }

    pub fn entries(&self) -> (i64, i64, i64, i64) {
        (self.a, self.b, self.c, self.d)
    }

    pub fn mul(&self, other: &ProjMatrix) -> ProjMatrix {
        // wide intermediates: entry products must never wrap silently
        let wide = |x: i64, y: i64, z: i64, w: i64| {
            i64::try_from(x as i128 * y as i128 + z as i128 * w as i128)
                .expect("matrix entries out of range")
        };
        ProjMatrix::canonical(
            wide(self.a, other.a, self.b, other.c),
            wide(self.a, other.b, self.b, other.d),
            wide(self.c, other.a, self.d, other.c),
            wide(self.c, other.b, self.d, other.d),
        )
    }

    pub fn inverse(&self) -> ProjMatrix {
        ProjMatrix::canonical(self.d, -self.b, -self.c, self.a)
    }

    pub fn abs_trace(&self) -> u64 {
        (self.a + self.d).unsigned_abs()
    }

    fn max_norm(&self) -> u64 {
        self.a
            .unsigned_abs()
            .max(self.b.unsigned_abs())
            .max(self.c.unsigned_abs())
            .max(self.d.unsigned_abs())
    }

    /// Projective action on a slope vector (sign of the result is not
    /// meaningful; callers canonicalize).
    pub fn apply(&self, p: i64, q: i64) -> (i64, i64) {
        (self.a * p + self.b * q, self.c * p + self.d * q)
    }
}

impl fmt::Display for ProjMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}],[{},{}]]", self.a, self.b, self.c, self.d)
    }
}

fn generator(letter: i8, z: i64) -> ProjMatrix {
    match letter {
        1 => ProjMatrix { a: 1, b: -z, c: 0, d: 1 },
        -1 => ProjMatrix { a: 1, b: z, c: 0, d: 1 },
        2 => ProjMatrix { a: 1, b: 0, c: z, d: 1 },
        _ => ProjMatrix { a: 1, b: 0, c: -z, d: 1 },
    }
}

/// The homomorphic image of a reduced word, sending the first generator to
/// `[[1,-z],[0,1]]` and the second to `[[1,0],[z,1]]`.
pub fn rho(word: &Word, z: i64) -> Result<ProjMatrix> {
    if z < 2 {
        return Err(Error::BadZ);
    }
    let mut m = ProjMatrix::identity();
    for &letter in word.letters() {
        m = m.mul(&generator(letter, z));
    }
    Ok(m)
}

/// Verdict of the trace test on a conjugator inside the z-subgroup: the
/// traces of the original and conjugated twist products agree exactly when
/// the (1,1) entry is +-1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TraceTest {
    Accept { a: i64 },
    Reject,
}

pub fn conjugate_trace_test(c: &ProjMatrix, z: i64) -> TraceTest {
    let a = c.a;
    let original = (2 - z * z).unsigned_abs();
    let conjugated = (2 - a * a * z * z).unsigned_abs();
    if conjugated == original {
        TraceTest::Accept { a }
    } else {
        TraceTest::Reject
    }
}

/// Decomposes a member of the z-subgroup as a reduced word, by repeatedly
/// stripping the unique generator letter that reduces the max-norm.
/// Returns `NotMember` when the descent stalls before the identity.
pub fn sanov_decompose(m: &ProjMatrix, z: i64) -> Result<Word> {
    if z < 2 {
        return Err(Error::BadZ);
    }
    let mut m = *m;
    let mut letters: Vec<i8> = Vec::new();
    while m != ProjMatrix::identity() {
        let mut best: Option<(i8, ProjMatrix, u64)> = None;
        for letter in [GEN_A, -GEN_A, GEN_B, -GEN_B] {
            let stripped = generator(-letter, z).mul(&m);
            let norm = stripped.max_norm();
            if norm < m.max_norm() && best.as_ref().is_none_or(|(_, _, n)| norm < *n) {
                best = Some((letter, stripped, norm));
            }
        }
        match best {
            Some((letter, stripped, _)) => {
                letters.push(letter);
                m = stripped;
            }
            None => return Err(Error::NotMember),
        }
    }
    let word = Word::new(letters.iter().copied());
    debug_assert_eq!(word.len(), letters.len(), "descent produced an unreduced word");
    Ok(word)
}

/// The transvection matrix `[[1+2pq, -2p^2],[2q^2, 1-2pq]]` fixing the
/// slope `(p, q)` projectively; the image of the twist along that slope.
pub fn transvection_matrix(p: i64, q: i64) -> ProjMatrix {
    ProjMatrix::canonical(1 + 2 * p * q, -2 * p * p, 2 * q * q, 1 - 2 * p * q)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mul_examples() {
        let m = ProjMatrix::new(3, 1, 2, 1).unwrap();
        assert_eq!(ProjMatrix::identity().mul(&m), m);
        let l = ProjMatrix::new(1, -2, 0, 1).unwrap();
        let linv = ProjMatrix::new(1, 2, 0, 1).unwrap();
        assert_eq!(l.mul(&linv), ProjMatrix::identity());
        let r = ProjMatrix::new(1, 0, 2, 1).unwrap();
        // [[1,-2],[0,1]]*[[1,0],[2,1]] = [[-3,-2],[2,1]], canonical [[3,2],[-2,-1]]
        assert_eq!(l.mul(&r), ProjMatrix::new(-3, -2, 2, 1).unwrap());
        assert_eq!(l.mul(&r).entries(), (3, 2, -2, -1));
    }

    #[test]
    fn rho_examples() {
        assert_eq!(rho(&Word::empty(), 2).unwrap(), ProjMatrix::identity());
        for z in 2..=6 {
            let m = rho(&Word::new([GEN_A, GEN_B]), z).unwrap();
            assert_eq!(m, ProjMatrix::new(1 - z * z, -z, z, 1).unwrap());
        }
        let sq = rho(&Word::new([GEN_A, GEN_A]), 2).unwrap();
        assert_eq!(sq, ProjMatrix::new(1, -4, 0, 1).unwrap());
        assert_eq!(rho(&Word::empty(), 1), Err(Error::BadZ));
    }

    #[test]
    fn abs_trace_examples() {
        assert_eq!(ProjMatrix::identity().abs_trace(), 2);
        assert_eq!(rho(&Word::new([GEN_A, GEN_B]), 2).unwrap().abs_trace(), 2);
        assert_eq!(rho(&Word::new([GEN_A, GEN_B]), 4).unwrap().abs_trace(), 14);
    }

    #[test]
    fn trace_test_examples() {
        assert_eq!(conjugate_trace_test(&ProjMatrix::identity(), 2), TraceTest::Accept { a: 1 });
        let r = ProjMatrix::new(1, 0, 2, 1).unwrap();
        assert_eq!(conjugate_trace_test(&r, 2), TraceTest::Accept { a: 1 });
        let big = ProjMatrix::new(3, 2, -2, -1).unwrap(); // |a| = 3
        assert_eq!(conjugate_trace_test(&big, 2), TraceTest::Reject);
    }

    #[test]
    fn sanov_examples() {
        assert_eq!(sanov_decompose(&ProjMatrix::identity(), 2).unwrap(), Word::empty());
        let m = ProjMatrix::new(1, -4, 0, 1).unwrap();
        assert_eq!(sanov_decompose(&m, 2).unwrap(), Word::new([GEN_A, GEN_A]));
        for z in 2..=5 {
            let m = ProjMatrix::new(1 - z * z, -z, z, 1).unwrap();
            assert_eq!(sanov_decompose(&m, z).unwrap(), Word::new([GEN_A, GEN_B]));
        }
        // [[1,-1],[0,1]] is not in the z=2 subgroup
        let outside = ProjMatrix::new(1, -1, 0, 1).unwrap();
        assert_eq!(sanov_decompose(&outside, 2), Err(Error::NotMember));
    }

    #[test]
    fn transvection_examples() {
        assert_eq!(transvection_matrix(1, 0), ProjMatrix::new(1, -2, 0, 1).unwrap());
        assert_eq!(transvection_matrix(0, 1), ProjMatrix::new(1, 0, 2, 1).unwrap());
        let t = transvection_matrix(1, 1);
        assert_eq!(t, ProjMatrix::new(3, -2, 2, -1).unwrap());
        // fixes (1,1) projectively and is parabolic
        let (p, q) = t.apply(1, 1);
        assert_eq!((p, q), (1, 1));
        assert_eq!(t.abs_trace(), 2);
    }
}
