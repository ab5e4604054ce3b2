//! Freely reduced words over two generators.
//!
//! Letters are encoded as small integers: `1` = A, `2` = B, negatives for
//! inverses. Words are stored in composition order, i.e. the leftmost
//! letter acts last.

use alloc::vec::Vec;
use core::fmt;

pub const GEN_A: i8 = 1;
pub const GEN_B: i8 = 2;

/// A freely reduced word in the free group on two generators.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<i8>);

fn reduce_push(buf: &mut Vec<i8>, x: i8) {
    debug_assert!(x == 1 || x == -1 || x == 2 || x == -2);
    if buf.last().is_some_and(|y| *y == -x) {
        buf.pop();
    } else {
        buf.push(x);
    }
}

impl Word {
    pub fn new<I: IntoIterator<Item = i8>>(letters: I) -> Self {
        let mut buf = Vec::new();
        for x in letters {
            reduce_push(&mut buf, x);
        }
        Word(buf)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn letters(&self) -> &[i8] {
        &self.0
    }

    pub fn mul(&self, other: &Word) -> Word {
        let mut buf = self.0.clone();
        for &x in &other.0 {
            reduce_push(&mut buf, x);
        }
        Word(buf)
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|x| -x).collect())
    }

    pub fn pow(&self, e: i64) -> Word {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::empty();
        for _ in 0..e.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    /// Exponent sums of the two generators, in order (A, B).
    pub fn exponent_sums(&self) -> (i64, i64) {
        let mut a = 0i64;
        let mut b = 0i64;
        for &x in &self.0 {
            match x {
                1 => a += 1,
                -1 => a -= 1,
                2 => b += 1,
                _ => b -= 1,
            }
        }
        (a, b)
    }

    /// Splits `self = p * core * p^-1` with `core` cyclically reduced.
    pub fn cyclic_reduce(&self) -> (Word, Word) {
        let mut core = self.0.clone();
        let mut prefix = Vec::new();
        while core.len() >= 2 && core[0] == -core[core.len() - 1] {
            prefix.push(core[0]);
            core.remove(0);
            core.pop();
        }
        (Word(prefix), Word(core))
    }

    /// A witness `w` with `self = w * other * w^-1`, when the words are
    /// conjugate. Conjugacy in a free group is exact cyclic-word matching:
    /// the cyclic reductions must be rotations of one another.
    pub fn conjugacy_witness(&self, other: &Word) -> Option<Word> {
        let (p, u0) = self.cyclic_reduce();
        let (q, v0) = other.cyclic_reduce();
        if u0.len() != v0.len() {
            return None;
        }
        let n = v0.len();
        if n == 0 {
            // both trivial; any witness works
            return Some(Word::empty());
        }
        for k in 0..n {
            let rotated: Vec<i8> = v0.0[k..].iter().chain(v0.0[..k].iter()).copied().collect();
            if rotated == u0.0 {
                // rot_k(v0) = v0[k..] * v0 * v0[k..]^-1
                let r = Word(v0.0[k..].to_vec());
                return Some(p.mul(&r).mul(&q.inverse()));
            }
        }
        None
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "e");
        }
        for (i, &x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "\u{b7}")?;
            }
            match x {
                1 => write!(f, "A")?,
                -1 => write!(f, "A^-1")?,
                2 => write!(f, "B")?,
                _ => write!(f, "B^-1")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn free_reduction() {
        assert_eq!(Word::new([1, -1]), Word::empty());
        assert_eq!(Word::new([1, 2, -2, -1]), Word::empty());
        assert_eq!(Word::new([1, 2]).mul(&Word::new([-2, 1])), Word::new([1, 1]));
    }

    #[test]
    fn inverse_cancels() {
        let w = Word::new([1, 2, -1, 2, 2]);
        assert_eq!(w.mul(&w.inverse()), Word::empty());
        assert_eq!(w.inverse().mul(&w), Word::empty());
    }

    #[test]
    fn cyclic_reduction_splits() {
        let w = Word::new([1, 2, -1]); // A B A^-1
        let (p, core) = w.cyclic_reduce();
        assert_eq!(p, Word::new([1]));
        assert_eq!(core, Word::new([2]));
        assert_eq!(p.mul(&core).mul(&p.inverse()), w);
    }

    #[test]
    fn conjugacy_witness_roundtrip() {
        let v = Word::new([2, 1, 1]);
        let w = Word::new([1, -2, 1]);
        let u = w.mul(&v).mul(&w.inverse());
        let got = u.conjugacy_witness(&v).expect("conjugate");
        assert_eq!(got.mul(&v).mul(&got.inverse()), u);
    }

    #[test]
    fn non_conjugate_detected() {
        assert!(Word::new([1]).conjugacy_witness(&Word::new([2])).is_none());
        assert!(Word::new([1, 1]).conjugacy_witness(&Word::new([1])).is_none());
    }

    #[test]
    fn display() {
        assert_eq!(Word::new([1, -2]).to_string(), "A\u{b7}B^-1");
        assert_eq!(Word::empty().to_string(), "e");
    }
}
