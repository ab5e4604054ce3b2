//! Acceptance gate for the engine: each test covers one numbered
//! criterion at its stated scale and tolerance (everything here is exact
//! integer arithmetic) and prints a single PASS line when it holds.

use std::collections::BTreeSet;

use palf_core::curve::{Curve, Surface};
use palf_core::factor::{
    classify_length3, enumerate_factorizations, equivalence_bfs, hurwitz_move, replay,
    total_monodromy, Budget, Classification, Direction, TwistTuple, Verdict,
};
use palf_core::kirby::{chain_from_tuple, euler_char, is_homology_sphere};
use palf_core::mcg::{act_on_curve, dehn_twist, MappingClass};
use palf_core::psl2::{rho, sanov_decompose, ProjMatrix};
use palf_core::snf::{cokernel, smith_normal_form, IntMat};
use palf_core::word::Word;
use palf_core::Error;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn s4() -> Surface {
    Surface::new(4).unwrap()
}

fn slope(p: i64, q: i64) -> Curve {
    Curve::slope(s4(), p, q).unwrap()
}

fn boundary(i: u32) -> Curve {
    Curve::boundary(s4(), i).unwrap()
}

fn tuple(curves: &[Curve]) -> TwistTuple {
    TwistTuple::new(curves.to_vec()).unwrap()
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 { a.abs() } else { gcd(b, a % b) }
}

/// Criterion 1: golden values of the representation into PSL(2,Z).
#[test]
fn criterion_01_rho_golden_values() {
    for z in 2..=10 {
        let m = rho(&Word::new([1, 2]), z).unwrap();
        let expected = ProjMatrix::new(1 - z * z, -z, z, 1).unwrap();
        assert_eq!(m, expected, "z = {z}");
        assert_eq!(m.abs_trace(), (2 - z * z).unsigned_abs(), "z = {z}");
    }
    println!("criterion 1 PASS: rho golden matrices and traces, z in 2..=10, exact");
}

fn reduced_words(max_len: usize) -> Vec<Word> {
    let mut out: Vec<Vec<i8>> = vec![];
    let mut frontier: Vec<Vec<i8>> = vec![vec![]];
    for _ in 0..max_len {
        let mut next = vec![];
        for w in &frontier {
            for l in [1i8, -1, 2, -2] {
                if w.last() == Some(&-l) {
                    continue;
                }
                let mut e = w.clone();
                e.push(l);
                next.push(e);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out.into_iter().map(Word::new).collect()
}

/// Criterion 2: the z = 2 representation kills no nonempty reduced word
/// of length <= 10, and the decomposition procedure recovers each word.
#[test]
fn criterion_02_injectivity_surrogate() {
    let words = reduced_words(10);
    assert_eq!(words.len(), 118_096);
    for w in &words {
        let m = rho(w, 2).unwrap();
        assert_ne!(m, ProjMatrix::identity(), "rho killed {w}");
        assert_eq!(sanov_decompose(&m, 2).unwrap(), *w, "round trip failed for {w}");
    }
    println!("criterion 2 PASS: rho injective + decomposition round trip on all 118096 reduced words of length <= 10, exact");
}

fn random_word(rng: &mut StdRng, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word::new((0..len).map(|_| {
        let l: i8 = if rng.gen() { 1 } else { 2 };
        if rng.gen() { l } else { -l }
    }))
}

fn random_slope(rng: &mut StdRng, height: i64) -> Curve {
    loop {
        let p = rng.gen_range(-height..=height);
        let q = rng.gen_range(0..=height);
        if (p, q) != (0, 0) && gcd(p, q) == 1 {
            return slope(p, q);
        }
    }
}

/// Criterion 3: twists transform naturally under the group action.
#[test]
fn criterion_03_twist_naturality() {
    let mut rng = StdRng::seed_from_u64(1003);
    for _ in 0..1000 {
        let g = MappingClass::from_word(random_word(&mut rng, 8));
        let c = random_slope(&mut rng, 50);
        let lhs = dehn_twist(&act_on_curve(&g, &c).unwrap()).unwrap();
        let rhs = g.multiply(&dehn_twist(&c).unwrap()).multiply(&g.invert());
        assert_eq!(lhs, rhs, "g = {g}, c = {c}");
    }
    println!("criterion 3 PASS: twist naturality on 1000 random (g, c), word length <= 8, height <= 50, exact");
}

/// Criterion 4: the total monodromy is a move invariant and opposite
/// moves cancel exactly.
#[test]
fn criterion_04_hurwitz_invariance() {
    let mut rng = StdRng::seed_from_u64(1004);
    for _ in 0..1000 {
        let len = rng.gen_range(1..=5);
        let curves: Vec<Curve> = (0..len)
            .map(|_| {
                if rng.gen_range(0..4) == 0 {
                    boundary(rng.gen_range(1..=4))
                } else {
                    random_slope(&mut rng, 5)
                }
            })
            .collect();
        let t = tuple(&curves);
        let total = total_monodromy(&t).unwrap();
        let mut state = t.clone();
        for _ in 0..rng.gen_range(0..=20) {
            if state.len() < 2 {
                break;
            }
            let i = rng.gen_range(1..state.len());
            let dir = if rng.gen() { Direction::Forward } else { Direction::Inverse };
            let next = match hurwitz_move(&state, i, dir) {
                Ok(n) => n,
                Err(Error::Overflow) => break, // reported, never silently wrong
                Err(e) => panic!("unexpected error: {e}"),
            };
            let opposite = match dir {
                Direction::Forward => Direction::Inverse,
                Direction::Inverse => Direction::Forward,
            };
            assert_eq!(hurwitz_move(&next, i, opposite).unwrap(), state);
            state = next;
        }
        assert_eq!(total_monodromy(&state).unwrap(), total);
    }
    println!("criterion 4 PASS: total monodromy invariant over 1000 random move sequences (length <= 20, tuples <= 5), forward/inverse cancel, exact");
}

fn hole_set_tuples(page_holes: u32, max_len: usize) -> Vec<TwistTuple> {
    let surface = Surface::new(page_holes).unwrap();
    let inner: Vec<u32> = (1..page_holes).collect();
    let mut sets: Vec<BTreeSet<u32>> = vec![];
    for mask in 1u32..(1 << inner.len()) {
        sets.push(
            inner
                .iter()
                .enumerate()
                .filter(|(k, _)| mask & (1 << k) != 0)
                .map(|(_, &h)| h)
                .collect(),
        );
    }
    let curves: Vec<Curve> =
        sets.into_iter().map(|s| Curve::from_holes(surface, s).unwrap()).collect();
    let mut tuples = vec![];
    let mut frontier: Vec<Vec<Curve>> = curves.iter().map(|c| vec![c.clone()]).collect();
    for _ in 0..max_len {
        let mut next = vec![];
        for t in &frontier {
            tuples.push(TwistTuple::new(t.clone()).unwrap());
            if t.len() < max_len {
                for c in &curves {
                    let mut e = t.clone();
                    e.push(c.clone());
                    next.push(e);
                }
            }
        }
        frontier = next;
    }
    tuples
}

/// Criterion 5: the homology-sphere criterion matches the direct boundary
/// computation on every hole-set tuple at small scale.
#[test]
fn criterion_05_homology_sphere_criterion() {
    let mut checked = 0u64;
    for page_holes in 2..=5 {
        for t in hole_set_tuples(page_holes, 4) {
            let c = chain_from_tuple(&t, page_holes).unwrap();
            let ev = is_homology_sphere(&t, page_holes).unwrap();
            let direct = ev.h1_boundary.is_trivial();
            let criterion =
                c.one_handles() == c.two_handles() && cokernel(c.boundary_matrix()).is_trivial();
            assert_eq!(direct, criterion, "mismatch on {t}");
            checked += 1;
        }
    }
    println!("criterion 5 PASS: boundary H1 trivial iff (m = n and coker(A) trivial) on all {checked} hole-set tuples, page holes <= 5, m <= 4, exhaustive exact");
}

/// Criterion 6: golden 3-manifold values.
#[test]
fn criterion_06_golden_values() {
    // two core curves on the 2-holed page: the double of the disk bundle,
    // whose boundary has first homology of order 2
    let s2 = Surface::new(2).unwrap();
    let core = Curve::from_holes(s2, BTreeSet::from([1])).unwrap();
    let rp3 = TwistTuple::new(vec![core.clone(), core]).unwrap();
    let ev = is_homology_sphere(&rp3, 2).unwrap();
    assert_eq!(ev.h1_boundary.order(), Some(2));
    assert!(!ev.verdict);

    let d123 = tuple(&[boundary(1), boundary(2), boundary(3)]);
    assert!(is_homology_sphere(&d123, 4).unwrap().verdict);
    let dba = tuple(&[boundary(1), slope(0, 1), slope(1, 0)]);
    assert!(is_homology_sphere(&dba, 4).unwrap().verdict);
    let dda = tuple(&[boundary(1), boundary(2), slope(1, 0)]);
    assert!(!is_homology_sphere(&dda, 4).unwrap().verdict);
    println!("criterion 6 PASS: |H1| = 2 for the 2-holed double twist, homology spheres (d1,d2,d3) and (d1,b,a), non-sphere (d1,d2,a), exact");
}

/// gcd of all k x k minors, by brute force over index subsets.
fn minor_gcd(m: &IntMat, k: usize) -> i64 {
    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        let mut out = vec![];
        for first in 0..n {
            for mut rest in subsets(n, k - 1) {
                if rest.iter().all(|&x| x > first) {
                    rest.insert(0, first);
                    out.push(rest);
                }
            }
        }
        out.retain(|s| s[0] < n);
        out
    }
    let mut g = 0i64;
    for ri in subsets(m.rows(), k) {
        for ci in subsets(m.cols(), k) {
            let sub = IntMat::from_rows(
                &ri.iter()
                    .map(|&i| ci.iter().map(|&j| m.row(i)[j]).collect())
                    .collect::<Vec<Vec<i64>>>(),
            );
            g = gcd(g, sub.det());
        }
    }
    g
}

/// Criterion 7: diagonalization against the gcd-of-minors oracle.
#[test]
fn criterion_07_snf_oracle() {
    let mut rng = StdRng::seed_from_u64(1007);
    for _ in 0..500 {
        let rows = rng.gen_range(1..=4);
        let cols = rng.gen_range(1..=4);
        let m = IntMat::from_rows(
            &(0..rows)
                .map(|_| (0..cols).map(|_| rng.gen_range(-3..=3)).collect())
                .collect::<Vec<Vec<i64>>>(),
        );
        let s = smith_normal_form(&m);
        assert_eq!(s.u.mul(&m).mul(&s.v), s.d);
        assert_eq!(s.u.det().abs(), 1, "U not unimodular");
        assert_eq!(s.v.det().abs(), 1, "V not unimodular");
        let mut prev = 1i64;
        for (k, &dk) in s.divisors.iter().enumerate() {
            let g = minor_gcd(&m, k + 1);
            let expected = if g == 0 { 0 } else { g / prev };
            assert_eq!(dk, expected, "divisor {k} of {m}");
            if g == 0 {
                break;
            }
            prev = g;
        }
    }
    println!("criterion 7 PASS: SNF divisors match gcd-of-minors oracle and transforms unimodular on 500 random matrices (<= 4x4, entries <= 3), exact");
}

/// Criterion 8: factorization uniqueness at desk scale — every bounded
/// positive factorization of the case-(3) totals is equivalent to every
/// other, with independently replayed and searched certificates.
#[test]
fn criterion_08_uniqueness_desk_scale() {
    let gammas = [slope(1, 0), slope(1, 2), slope(-1, 2), slope(3, 2), slope(-3, 2)];
    let budget = Budget { max_states: 50_000, max_height: 64 };
    for gamma in &gammas {
        let base = tuple(&[boundary(1), slope(0, 1), gamma.clone()]);
        let phi = total_monodromy(&base).unwrap();
        let found = enumerate_factorizations(&phi, 3, 3, 2).unwrap();
        assert!(!found.is_empty(), "no factorizations for gamma = {gamma}");
        assert!(found.contains(&base));
        for t1 in &found {
            for t2 in &found {
                match classify_length3(t1, t2).unwrap() {
                    Classification::Equivalent(cert) => {
                        assert_eq!(replay(t1, &cert).unwrap(), *t2, "replay failed {t1} -> {t2}");
                    }
                    Classification::NotApplicable(why) => {
                        panic!("classifier gave up on {t1} vs {t2}: {why}")
                    }
                }
                match equivalence_bfs(t1, t2, &budget).unwrap() {
                    Verdict::Equivalent(cert) => {
                        assert_eq!(replay(t1, &cert).unwrap(), *t2);
                    }
                    other => panic!("search disagrees on {t1} vs {t2}: {other:?}"),
                }
            }
        }
    }
    println!("criterion 8 PASS: all bounded factorizations pairwise equivalent for the five case-(3) totals, certificates replayed, search agrees, exact");
}

/// Criterion 9: every homology-sphere filling in the criterion-5 sweep has
/// Euler characteristic one.
#[test]
fn criterion_09_euler_characteristic() {
    let mut passers = 0u64;
    for page_holes in 2..=5 {
        for t in hole_set_tuples(page_holes, 4) {
            if is_homology_sphere(&t, page_holes).unwrap().verdict {
                let c = chain_from_tuple(&t, page_holes).unwrap();
                assert_eq!(euler_char(&c), 1, "chi != 1 for {t}");
                passers += 1;
            }
        }
    }
    assert!(passers > 0, "sweep found no homology spheres");
    println!("criterion 9 PASS: euler characteristic 1 for all {passers} homology-sphere tuples in the sweep, exact");
}
