//! Dense integer matrices and Smith normal form with recorded unimodular
//! transforms.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// A dense integer matrix in row-major order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMat { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMat { rows: r, cols: c, data: rows.iter().flatten().copied().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> IntMat {
        let mut t = IntMat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.cols, other.rows);
        let mut out = IntMat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        out
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> i64 {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return 1;
        }
        let mut a: Vec<Vec<i128>> = (0..n)
            .map(|i| self.row(i).iter().map(|&x| x as i128).collect())
            .collect();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n - 1 {
            if a[k][k] == 0 {
                let Some(swap) = (k + 1..n).find(|&i| a[i][k] != 0) else {
                    return 0;
                };
                a.swap(k, swap);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
                }
                a[i][k] = 0;
            }
            prev = a[k][k];
        }
        (sign * a[n - 1][n - 1]) as i64
    }
}

impl core::ops::Index<(usize, usize)> for IntMat {
    type Output = i64;
    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        &self.data[i * self.cols + j]
    }
}

impl core::ops::IndexMut<(usize, usize)> for IntMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i64 {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for IntMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// `u * m * v = d` with `u`, `v` unimodular and `d` diagonal with
/// `divisors[i] | divisors[i+1]`.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub divisors: Vec<i64>,
    pub u: IntMat,
    pub v: IntMat,
    pub d: IntMat,
}

fn swap_rows(m: &mut IntMat, a: usize, b: usize) {
    for j in 0..m.cols() {
        let t = m[(a, j)];
        m[(a, j)] = m[(b, j)];
        m[(b, j)] = t;
    }
}

fn swap_cols(m: &mut IntMat, a: usize, b: usize) {
    for i in 0..m.rows() {
        let t = m[(i, a)];
        m[(i, a)] = m[(i, b)];
        m[(i, b)] = t;
    }
}

// row_a -= q * row_b
fn add_row(m: &mut IntMat, a: usize, b: usize, q: i64) {
    for j in 0..m.cols() {
        let val = q * m[(b, j)];
        m[(a, j)] -= val;
    }
}

// col_a -= q * col_b
fn add_col(m: &mut IntMat, a: usize, b: usize, q: i64) {
    for i in 0..m.rows() {
        let val = q * m[(i, b)];
        m[(i, a)] -= val;
    }
}

/// Classical Smith normal form by unimodular row and column operations.
pub fn smith_normal_form(m: &IntMat) -> SmithForm {
    let mut d = m.clone();
    let rows = d.rows();
    let cols = d.cols();
    let mut u = IntMat::identity(rows);
    let mut v = IntMat::identity(cols);

    let n = rows.min(cols);
    let mut t = 0;
    while t < n {
        // pivot of minimal absolute value in the trailing block
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if d[(i, j)] != 0
                    && pivot.is_none_or(|(pi, pj)| d[(i, j)].abs() < d[(pi, pj)].abs())
                {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        if pi != t {
            swap_rows(&mut d, pi, t);
            swap_rows(&mut u, pi, t);
        }
        if pj != t {
            swap_cols(&mut d, pj, t);
            swap_cols(&mut v, pj, t);
        }

        // clear row t and column t; Euclidean remainders shrink the pivot
        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if d[(i, t)] != 0 {
                    let q = d[(i, t)].div_euclid(d[(t, t)]);
                    add_row(&mut d, i, t, q);
                    add_row(&mut u, i, t, q);
                    if d[(i, t)] != 0 {
                        swap_rows(&mut d, i, t);
                        swap_rows(&mut u, i, t);
                        clean = false;
                    }
                }
            }
            for j in t + 1..cols {
                if d[(t, j)] != 0 {
                    let q = d[(t, j)].div_euclid(d[(t, t)]);
                    add_col(&mut d, j, t, q);
                    add_col(&mut v, j, t, q);
                    if d[(t, j)] != 0 {
                        swap_cols(&mut d, j, t);
                        swap_cols(&mut v, j, t);
                        clean = false;
                    }
                }
            }
            if clean {
                break;
            }
        }

        // divisibility chain: fold an offending row into row t and redo
        // this pivot position (the pivot gcd strictly decreases).
        let mut fixed = false;
        'chain: for i in t + 1..rows {
            for j in t + 1..cols {
                if d[(i, j)] % d[(t, t)] != 0 {
                    add_row(&mut d, t, i, -1);
                    add_row(&mut u, t, i, -1);
                    fixed = true;
                    break 'chain;
                }
            }
        }
        if fixed {
            continue;
        }

        if d[(t, t)] < 0 {
            for j in 0..cols {
                d[(t, j)] = -d[(t, j)];
            }
            for j in 0..u.cols() {
                u[(t, j)] = -u[(t, j)];
            }
        }
        t += 1;
    }

    let divisors = (0..n).map(|i| d[(i, i)]).collect();
    debug_assert_eq!(u.mul(m).mul(&v), d, "transform bookkeeping");
    SmithForm { divisors, u, v, d }
}

/// Invariants of a finitely generated abelian group: the nontrivial
/// torsion divisors (each dividing the next) and the free rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbGroup {
    pub torsion: Vec<i64>,
    pub free_rank: usize,
}

impl AbGroup {
    pub fn is_trivial(&self) -> bool {
        self.torsion.is_empty() && self.free_rank == 0
    }

    /// Order of the group, when finite.
    pub fn order(&self) -> Option<u64> {
        if self.free_rank > 0 {
            return None;
        }
        Some(self.torsion.iter().map(|&d| d as u64).product())
    }
}

impl fmt::Display for AbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut first = true;
        if self.free_rank == 1 {
            write!(f, "Z")?;
            first = false;
        } else if self.free_rank > 1 {
            write!(f, "Z^{}", self.free_rank)?;
            first = false;
        }
        for d in &self.torsion {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "Z/{d}")?;
            first = false;
        }
        Ok(())
    }
}

/// The cokernel of a matrix viewed as a presentation: Z^rows / im(m).
pub fn cokernel(m: &IntMat) -> AbGroup {
    let snf = smith_normal_form(m);
    let rank = snf.divisors.iter().filter(|&&d| d != 0).count();
    AbGroup {
        torsion: snf.divisors.iter().copied().filter(|&d| d > 1).collect(),
        free_rank: m.rows() - rank,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(m: &IntMat) {
        let snf = smith_normal_form(m);
        assert_eq!(snf.u.mul(m).mul(&snf.v), snf.d, "U*M*V = D for {m}");
        assert_eq!(snf.u.det().abs(), 1, "U unimodular");
        assert_eq!(snf.v.det().abs(), 1, "V unimodular");
        for w in snf.divisors.windows(2) {
            if w[0] == 0 {
                assert_eq!(w[1], 0);
            } else {
                assert_eq!(w[1] % w[0], 0, "divisor chain for {m}");
            }
        }
    }

    #[test]
    fn snf_examples() {
        let m = IntMat::from_rows(&[vec![2, 0], vec![0, 3]]);
        assert_eq!(smith_normal_form(&m).divisors, vec![1, 6]);
        check(&m);
        let id3 = IntMat::identity(3);
        assert_eq!(smith_normal_form(&id3).divisors, vec![1, 1, 1]);
        let row = IntMat::from_rows(&[vec![1, 1]]);
        assert_eq!(smith_normal_form(&row).divisors, vec![1]);
        check(&row);
    }

    #[test]
    fn det_examples() {
        assert_eq!(IntMat::identity(3).det(), 1);
        assert_eq!(IntMat::from_rows(&[vec![0, 1], vec![1, 0]]).det(), -1);
        assert_eq!(IntMat::from_rows(&[vec![2, 3], vec![4, 6]]).det(), 0);
        let m = IntMat::from_rows(&[vec![1, 0, 1], vec![0, 1, 1], vec![0, 1, 0]]);
        assert_eq!(m.det(), -1);
    }

    #[test]
    fn cokernel_examples() {
        assert!(cokernel(&IntMat::identity(3)).is_trivial());
        let m = IntMat::from_rows(&[vec![2, 0], vec![0, 3]]);
        assert_eq!(cokernel(&m), AbGroup { torsion: vec![6], free_rank: 0 });
        let m = IntMat::from_rows(&[vec![1, 0], vec![0, 0]]);
        assert_eq!(cokernel(&m), AbGroup { torsion: vec![], free_rank: 1 });
    }
}
