//! Positive factorizations as ordered tuples of twist curves, Hurwitz
//! moves and total conjugation, equivalence search with replayable
//! certificates, and the certifying classifier for length-3 tuples on the
//! 4-holed sphere.
//!
//! Tuples store curves, not mapping classes: a conjugate of a twist is the
//! twist along the image curve, so both transformations stay in curve
//! language and twist equality reduces to curve equality.

use crate::curve::{Curve, Surface};
use crate::error::{Error, Result};
use crate::mcg::{self, AbelianClass, MappingClass};
use crate::psl2::{self, TraceTest};
use crate::word::{Word, GEN_A, GEN_B};
use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// An ordered tuple of twist curves standing for a positive factorization;
/// entry i is the right-handed Dehn twist along `cycles[i]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TwistTuple {
    surface: Surface,
    cycles: Vec<Curve>,
}

impl TwistTuple {
    pub fn new(cycles: Vec<Curve>) -> Result<Self> {
        let Some(first) = cycles.first() else {
            return Err(Error::Unsupported("empty twist tuple"));
        };
        let surface = first.surface();
        if cycles.iter().any(|c| c.surface() != surface) {
            return Err(Error::SurfaceMismatch);
        }
        Ok(TwistTuple { surface, cycles })
    }

    pub fn surface(&self) -> Surface {
        self.surface
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    pub fn cycles(&self) -> &[Curve] {
        &self.cycles
    }
}

impl fmt::Display for TwistTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.cycles.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Direction {
    Forward,
    Inverse,
}

/// One certificate step: a Hurwitz move at a 1-based index, or a total
/// conjugation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Step {
    Hurwitz { index: usize, dir: Direction },
    Conjugate(MappingClass),
}

/// A replayable witness that two tuples are Hurwitz/conjugation
/// equivalent.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MoveCertificate {
    pub steps: Vec<Step>,
}

impl MoveCertificate {
    pub fn inverted(&self) -> MoveCertificate {
        let steps = self
            .steps
            .iter()
            .rev()
            .map(|s| match s {
                Step::Hurwitz { index, dir: Direction::Forward } => {
                    Step::Hurwitz { index: *index, dir: Direction::Inverse }
                }
                Step::Hurwitz { index, dir: Direction::Inverse } => {
                    Step::Hurwitz { index: *index, dir: Direction::Forward }
                }
                Step::Conjugate(g) => Step::Conjugate(g.invert()),
            })
            .collect();
        MoveCertificate { steps }
    }

    pub fn concat(mut self, mut tail: MoveCertificate) -> MoveCertificate {
        self.steps.append(&mut tail.steps);
        self
    }
}

/// The product of the twists, rightmost factor first:
/// `t_{c_m} ... t_{c_2} t_{c_1}`.
pub fn total_monodromy(t: &TwistTuple) -> Result<MappingClass> {
    if t.surface.holes() != 4 {
        return Err(Error::Unsupported("total monodromy needs the 4-holed page"));
    }
    let mut total = MappingClass::identity();
    for c in &t.cycles {
        total = mcg::dehn_twist(c)?.multiply(&total);
    }
    Ok(total)
}

/// Hurwitz move at 1-based index `i < m`:
/// forward replaces `(c_i, c_{i+1})` by `(c_{i+1}, t_{c_{i+1}}(c_i))`,
/// inverse by `(t_{c_i}^{-1}(c_{i+1}), c_i)`. Total monodromy is
/// preserved.
pub fn hurwitz_move(t: &TwistTuple, index: usize, dir: Direction) -> Result<TwistTuple> {
    if index < 1 || index >= t.len() {
        return Err(Error::IndexOutOfRange);
    }
    let i = index - 1;
    let mut cycles = t.cycles.clone();
    match dir {
        Direction::Forward => {
            let moved = mcg::act_on_curve(&mcg::dehn_twist(&cycles[i + 1])?, &cycles[i])?;
            cycles[i] = cycles[i + 1].clone();
            cycles[i + 1] = moved;
        }
        Direction::Inverse => {
            let moved =
                mcg::act_on_curve(&mcg::dehn_twist(&cycles[i])?.invert(), &cycles[i + 1])?;
            cycles[i + 1] = cycles[i].clone();
            cycles[i] = moved;
        }
    }
    Ok(TwistTuple { surface: t.surface, cycles })
}

/// Simultaneous conjugation of every factor by `psi`: each curve is
/// replaced by its image.
pub fn total_conjugate(t: &TwistTuple, psi: &MappingClass) -> Result<TwistTuple> {
    let cycles = t
        .cycles
        .iter()
        .map(|c| mcg::act_on_curve(psi, c))
        .collect::<Result<Vec<_>>>()?;
    Ok(TwistTuple { surface: t.surface, cycles })
}

/// The multiset of abelianized twists; invariant under both moves and
/// total conjugation.
pub fn ab_invariant(t: &TwistTuple) -> Result<Vec<AbelianClass>> {
    let mut classes = t
        .cycles
        .iter()
        .map(|c| Ok(mcg::dehn_twist(c)?.abelianize()))
        .collect::<Result<Vec<_>>>()?;
    classes.sort();
    Ok(classes)
}

/// Applies the steps of a certificate in order.
pub fn replay(t: &TwistTuple, cert: &MoveCertificate) -> Result<TwistTuple> {
    let mut state = t.clone();
    for step in &cert.steps {
        state = match step {
            Step::Hurwitz { index, dir } => {
                hurwitz_move(&state, *index, *dir).map_err(|_| Error::InvalidStep)?
            }
            Step::Conjugate(g) => total_conjugate(&state, g).map_err(|_| Error::InvalidStep)?,
        };
    }
    Ok(state)
}

/// Search limits for `equivalence_bfs`.
#[derive(Clone, Copy, Debug)]
pub struct Budget {
    /// Maximum number of distinct canonical states to expand.
    pub max_states: usize,
    /// Slope entries larger than this are pruned from the frontier.
    pub max_height: i64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_states: 50_000, max_height: 64 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Reason {
    AbInvariantMismatch,
    TotalsNotConjugate,
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Reason::AbInvariantMismatch => write!(f, "abelianization multisets differ"),
            Reason::TotalsNotConjugate => {
                write!(f, "total monodromies are not conjugate")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Equivalent(MoveCertificate),
    Distinguished(Reason),
    Unknown,
}

fn tuple_height(t: &TwistTuple) -> i64 {
    t.cycles
        .iter()
        .map(|c| c.slope_pair().map_or(1, |(p, q)| p.abs() + q.abs()))
        .sum()
}

fn max_slope_height(t: &TwistTuple) -> i64 {
    t.cycles
        .iter()
        .map(|c| c.slope_pair().map_or(0, |(p, q)| p.abs().max(q.abs())))
        .max()
        .unwrap_or(0)
}

fn letter_class(letter: i8) -> MappingClass {
    MappingClass::from_word(Word::new([letter]))
}

/// Deterministic local minimization over single-letter conjugations:
/// conjugate while the (height, lexicographic) key strictly decreases.
/// Returns the canonical tuple and the conjugation steps that reach it.
fn canonicalize(t: &TwistTuple) -> (TwistTuple, Vec<Step>) {
    let mut state = t.clone();
    let mut steps = Vec::new();
    loop {
        let key = (tuple_height(&state), state.clone());
        let mut best: Option<((i64, TwistTuple), i8)> = None;
        for letter in [GEN_A, -GEN_A, GEN_B, -GEN_B] {
            let Ok(next) = total_conjugate(&state, &letter_class(letter)) else {
                return (state, steps);
            };
            let next_key = (tuple_height(&next), next);
            if next_key < key && best.as_ref().is_none_or(|(k, _)| next_key < *k) {
                best = Some((next_key, letter));
            }
        }
        match best {
            Some(((_, next), letter)) => {
                steps.push(Step::Conjugate(letter_class(letter)));
                state = next;
            }
            None => return (state, steps),
        }
    }
}

/// Breadth-first search over Hurwitz moves and single-letter total
/// conjugations, with states deduplicated by canonical form. A verdict of
/// `Equivalent` always carries a certificate that replays exactly;
/// `Unknown` is returned on budget exhaustion, never a wrong verdict.
pub fn equivalence_bfs(t1: &TwistTuple, t2: &TwistTuple, budget: &Budget) -> Result<Verdict> {
    if t1.len() != t2.len() {
        return Err(Error::LengthMismatch);
    }
    if t1.surface() != t2.surface() {
        return Err(Error::SurfaceMismatch);
    }
    if ab_invariant(t1)? != ab_invariant(t2)? {
        return Ok(Verdict::Distinguished(Reason::AbInvariantMismatch));
    }
    let total1 = total_monodromy(t1)?;
    let total2 = total_monodromy(t2)?;
    if total1.conjugacy_witness(&total2).is_none() {
        return Ok(Verdict::Distinguished(Reason::TotalsNotConjugate));
    }

    let (start, start_steps) = canonicalize(t1);
    let (goal, goal_steps) = canonicalize(t2);
    // parent map: canonical state -> (predecessor, steps from predecessor)
    let mut parents: BTreeMap<TwistTuple, Option<(TwistTuple, Vec<Step>)>> = BTreeMap::new();
    parents.insert(start.clone(), None);
    let mut queue = VecDeque::new();
    queue.push_back(start.clone());
    let mut found = start == goal;

    while let Some(state) = queue.pop_front() {
        if found {
            break;
        }
        if parents.len() > budget.max_states {
            return Ok(Verdict::Unknown);
        }
        let mut edges: Vec<(Vec<Step>, TwistTuple)> = Vec::new();
        for index in 1..state.len() {
            for dir in [Direction::Forward, Direction::Inverse] {
                let next = hurwitz_move(&state, index, dir)?;
                edges.push((alloc::vec![Step::Hurwitz { index, dir }], next));
            }
        }
        for letter in [GEN_A, -GEN_A, GEN_B, -GEN_B] {
            let next = total_conjugate(&state, &letter_class(letter))?;
            edges.push((alloc::vec![Step::Conjugate(letter_class(letter))], next));
        }
        for (mut steps, raw) in edges {
            if max_slope_height(&raw) > budget.max_height {
                continue;
            }
            let (canon, canon_steps) = canonicalize(&raw);
            if parents.contains_key(&canon) {
                continue;
            }
            steps.extend(canon_steps);
            parents.insert(canon.clone(), Some((state.clone(), steps)));
            if canon == goal {
                found = true;
                break;
            }
            queue.push_back(canon);
        }
    }

    if !found {
        return Ok(Verdict::Unknown);
    }
    // reconstruct: t1 -> start -> ... -> goal -> t2
    let mut chain: Vec<Vec<Step>> = Vec::new();
    let mut cursor = goal.clone();
    while let Some(Some((prev, steps))) = parents.get(&cursor) {
        chain.push(steps.clone());
        cursor = prev.clone();
    }
    chain.reverse();
    let mut cert = MoveCertificate { steps: start_steps };
    for steps in chain {
        cert.steps.extend(steps);
    }
    cert = cert.concat(MoveCertificate { steps: goal_steps }.inverted());
    debug_assert_eq!(replay(t1, &cert)?, *t2, "certificate must replay");
    Ok(Verdict::Equivalent(cert))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    Equivalent(MoveCertificate),
    NotApplicable(String),
}

fn not_applicable(msg: &str) -> Classification {
    Classification::NotApplicable(String::from(msg))
}

/// Hurwitz moves that bring the (central) boundary twists to the front of
/// the tuple, sorted by boundary index, leaving non-boundary entries in
/// their relative order. Returns the normalized tuple and the moves.
fn sort_boundary_front(t: &TwistTuple) -> Result<(TwistTuple, Vec<Step>)> {
    let mut state = t.clone();
    let mut steps = Vec::new();
    // selection sort by repeated adjacent forward moves; moving a boundary
    // curve left past anything changes nothing else (its twist is central)
    let rank = |c: &Curve| match c.kind() {
        crate::curve::CurveKind::Boundary(i) => *i as i64,
        _ => i64::MAX,
    };
    let m = state.len();
    for target in 0..m {
        // find the minimal-rank entry at or after `target`
        let mut best = target;
        for j in target + 1..m {
            if rank(&state.cycles[j]) < rank(&state.cycles[best]) {
                best = j;
            }
        }
        if rank(&state.cycles[best]) == i64::MAX {
            break;
        }
        for j in (target..best).rev() {
            // forward move at j+1 (1-based) pulls the boundary curve left
            state = hurwitz_move(&state, j + 1, Direction::Forward)?;
            steps.push(Step::Hurwitz { index: j + 1, dir: Direction::Forward });
        }
    }
    Ok((state, steps))
}

/// The certifying classifier for length-3 tuples with equal total
/// monodromy on the 4-holed page. For the one-boundary case it follows
/// the constructive chain of the uniqueness proof: normalize the central
/// twist to slot 1, solve the two free-group conjugacy problems, transport
/// the residual conjugator into the rank-2 subgroup generated by the two
/// non-boundary twists, run the trace test, decompose it as
/// `t_beta^x t_gamma^y`, and emit the finishing conjugations. Every
/// `Equivalent` verdict is replay-verified before being returned.
pub fn classify_length3(t1: &TwistTuple, t2: &TwistTuple) -> Result<Classification> {
    if t1.surface() != t2.surface() {
        return Err(Error::SurfaceMismatch);
    }
    if t1.surface().holes() != 4 {
        return Err(Error::Unsupported("classifier works on the 4-holed page"));
    }
    if t1.len() != 3 || t2.len() != 3 {
        return Err(Error::LengthMismatch);
    }
    let total1 = total_monodromy(t1)?;
    let total2 = total_monodromy(t2)?;
    if total1 == total2 {
        return classify_equal_totals(t1, t2);
    }
    // merely conjugate totals are reconciled by one global conjugation
    // step; non-conjugate totals are out of scope for the classifier
    let Some(chi) = total2.conjugacy_witness(&total1) else {
        return Ok(not_applicable("total monodromies are not conjugate"));
    };
    let t2_norm = total_conjugate(t2, &chi.invert())?;
    match classify_equal_totals(t1, &t2_norm)? {
        Classification::Equivalent(cert) => {
            let mut steps = cert.steps;
            steps.push(Step::Conjugate(chi));
            let cert = MoveCertificate { steps };
            debug_assert_eq!(replay(t1, &cert)?, *t2);
            Ok(Classification::Equivalent(cert))
        }
        other => Ok(other),
    }
}

fn classify_equal_totals(t1: &TwistTuple, t2: &TwistTuple) -> Result<Classification> {
    let boundary_count = |t: &TwistTuple| t.cycles.iter().filter(|c| c.is_boundary()).count();
    let (b1, b2) = (boundary_count(t1), boundary_count(t2));
    if b1 != b2 {
        return Ok(not_applicable("tuples have different boundary-twist counts"));
    }
    if b1 == 0 {
        return Ok(not_applicable(
            "no boundary twist: not a homology-sphere factorization shape",
        ));
    }

    let (n1, moves1) = sort_boundary_front(t1)?;
    let (n2, moves2) = sort_boundary_front(t2)?;

    if b1 >= 2 {
        // boundary twists commute and slide freely, so equal totals force
        // the normalized tuples to agree entrywise
        if n1 == n2 {
            let cert = MoveCertificate { steps: moves1 }
                .concat(MoveCertificate { steps: moves2 }.inverted());
            debug_assert_eq!(replay(t1, &cert)?, *t2);
            return Ok(Classification::Equivalent(cert));
        }
        return Ok(not_applicable("central normal forms differ"));
    }

    // case (3): one boundary twist, two non-boundary twists
    let beta1 = n1.cycles[1].clone();
    let gamma1 = n1.cycles[2].clone();
    if n1.cycles[0] != n2.cycles[0] {
        return Ok(not_applicable("boundary twists differ"));
    }
    let z = gamma1.intersection_number(&beta1)?;
    if z < 2 {
        return Ok(not_applicable("the two non-boundary curves do not fill the page"));
    }

    for swap in [false, true] {
        let mut pre_steps = moves2.clone();
        let mut m2 = n2.clone();
        if swap {
            m2 = hurwitz_move(&m2, 2, Direction::Forward)?;
            pre_steps.push(Step::Hurwitz { index: 2, dir: Direction::Forward });
        }
        if let Some(cert) =
            classify_one_boundary(&n1, &beta1, &gamma1, &m2, z as i64, &moves1, &pre_steps)?
        {
            debug_assert_eq!(replay(t1, &cert)?, *t2);
            return Ok(Classification::Equivalent(cert));
        }
    }
    Ok(not_applicable("no constructive certificate found"))
}

/// Conjugates the image of `sigma(psi)` into the standard z-subgroup
/// coordinates, using the basis matrix built from the gamma and beta
/// slopes. Returns `None` when the result is not integral, i.e. the
/// conjugator lies outside the twist subgroup.
fn into_subgroup_coords(
    psi: &MappingClass,
    gamma: &Curve,
    beta: &Curve,
) -> Option<psl2::ProjMatrix> {
    let (mut gp, mut gq) = gamma.slope_pair()?;
    let (bp, bq) = beta.slope_pair()?;
    let mut det = gp * bq - gq * bp;
    if det < 0 {
        gp = -gp;
        gq = -gq;
        det = -det;
    }
    // P = [[gp, bp],[gq, bq]], M = P^-1 sigma(psi) P, integral iff psi is
    // in the subgroup generated by the two twists
    let (a, b, c, d) = psi.sigma().entries();
    let adj = [[bq, -bp], [-gq, gp]];
    let s = [[a, b], [c, d]];
    let p = [[gp, bp], [gq, bq]];
    let mut out = [[0i64; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            let mut acc = 0i64;
            for k in 0..2 {
                for l in 0..2 {
                    acc += adj[i][k] * s[k][l] * p[l][j];
                }
            }
            if acc % det != 0 {
                return None;
            }
            out[i][j] = acc / det;
        }
    }
    psl2::ProjMatrix::new(out[0][0], out[0][1], out[1][0], out[1][1]).ok()
}

#[allow(clippy::too_many_arguments)]
fn classify_one_boundary(
    n1: &TwistTuple,
    beta1: &Curve,
    gamma1: &Curve,
    m2: &TwistTuple,
    z: i64,
    moves1: &[Step],
    pre_steps: &[Step],
) -> Result<Option<MoveCertificate>> {
    let beta2 = m2.cycles()[1].clone();
    let gamma2 = m2.cycles()[2].clone();
    if beta2.parity_class() != beta1.parity_class()
        || gamma2.parity_class() != gamma1.parity_class()
    {
        return Ok(None);
    }
    // free-group conjugacy by cyclic-word matching: t_{beta2} = psi1 t_{beta1} psi1^-1
    let t_beta1 = mcg::dehn_twist(beta1)?;
    let t_beta2 = mcg::dehn_twist(&beta2)?;
    let t_gamma1 = mcg::dehn_twist(gamma1)?;
    let t_gamma2 = mcg::dehn_twist(&gamma2)?;
    let Some(psi1) = t_beta2.conjugacy_witness(&t_beta1) else {
        return Ok(None);
    };
    let Some(psi2) = t_gamma2.conjugacy_witness(&t_gamma1) else {
        return Ok(None);
    };
    let psi = psi1.invert().multiply(&psi2);

    // transport psi into the subgroup generated by the gamma and beta twists
    let Some(m) = into_subgroup_coords(&psi, gamma1, beta1) else {
        return Ok(None);
    };
    if !matches!(psl2::conjugate_trace_test(&m, z), TraceTest::Accept { .. }) {
        return Ok(None);
    }
    let Ok(word) = psl2::sanov_decompose(&m, z) else {
        return Ok(None);
    };
    // the accepted shape is a beta-power followed by a gamma-power
    let letters = word.letters();
    let split = letters.iter().position(|l| l.abs() == 1).unwrap_or(letters.len());
    let (beta_block, gamma_block) = letters.split_at(split);
    if beta_block.iter().any(|l| l.abs() != 2) || gamma_block.iter().any(|l| l.abs() != 1) {
        return Ok(None);
    }
    let x: i64 = beta_block.iter().map(|&l| i64::from(l.signum())).sum();
    let y: i64 = gamma_block.iter().map(|&l| i64::from(l.signum())).sum();
    debug_assert_eq!(
        into_subgroup_coords(&t_beta1.pow(x).multiply(&t_gamma1.pow(y)), gamma1, beta1),
        Some(m)
    );

    // chain from m2 back to n1:
    //   conjugate by psi1^-1:   (d, beta2, gamma2) -> (d, beta1, psi(gamma1))
    //   conjugate by t_beta1^-x: psi(gamma1) = t_b^x t_g^y (gamma1) -> gamma1
    let mut back = Vec::from(pre_steps);
    back.push(Step::Conjugate(psi1.invert()));
    back.push(Step::Conjugate(t_beta1.pow(-x)));
    let candidate = MoveCertificate { steps: back }
        .concat(MoveCertificate { steps: Vec::from(moves1) }.inverted());
    // candidate maps t2 to t1; the classifier certificate goes t1 -> t2
    let cert = candidate.inverted();
    let n1_check = replay(m2, &MoveCertificate {
        steps: {
            let mut s = alloc::vec![Step::Conjugate(psi1.invert())];
            s.push(Step::Conjugate(t_beta1.pow(-x)));
            s
        },
    })?;
    if n1_check != *n1 {
        return Ok(None);
    }
    Ok(Some(cert))
}

/// All positive factorizations of `phi` of the given length whose slope
/// entries have height at most `max_height` and conjugator-word length at
/// most `max_conj_len`, pruned by abelianization bookkeeping and resolved
/// by exact normal-form comparison. Complete within the bounds.
pub fn enumerate_factorizations(
    phi: &MappingClass,
    length: usize,
    max_height: i64,
    max_conj_len: usize,
) -> Result<Vec<TwistTuple>> {
    let surface = Surface::new(4)?;
    let mut candidates: Vec<(Curve, AbelianClass)> = Vec::new();
    for i in 1..=4 {
        let c = Curve::boundary(surface, i)?;
        let ab = mcg::dehn_twist(&c)?.abelianize();
        candidates.push((c, ab));
    }
    let mut seen = BTreeSet::new();
    for p in -max_height..=max_height {
        for q in 0..=max_height {
            if (p, q) == (0, 0) {
                continue;
            }
            let Ok(c) = Curve::slope(surface, p, q) else { continue };
            let pair = c.slope_pair().unwrap();
            if pair.0.abs().max(pair.1.abs()) > max_height || !seen.insert(pair) {
                continue;
            }
            let parity = c.parity_class().unwrap();
            let base = match parity {
                (1, 0) => Curve::slope(surface, 1, 0)?,
                (0, 1) => Curve::slope(surface, 0, 1)?,
                _ => Curve::slope(surface, 1, 1)?,
            };
            if mcg::twist_conjugator_word(&c, &base)?.word().len() > max_conj_len {
                continue;
            }
            let ab = mcg::dehn_twist(&c)?.abelianize();
            candidates.push((c, ab));
        }
    }

    let target = phi.abelianize();
    let mut out = Vec::new();
    let mut stack: Vec<usize> = alloc::vec![0; length];
    let k = candidates.len();
    if length == 0 || k == 0 {
        return Ok(out);
    }
    'outer: loop {
        // abelianization pruning before the exact product
        let mut delta = [0i64; 4];
        let mut ab = (0i64, 0i64);
        for &i in &stack {
            let cls = &candidates[i].1;
            for j in 0..4 {
                delta[j] += cls.delta_part[j];
            }
            ab.0 += cls.ab_part.0;
            ab.1 += cls.ab_part.1;
        }
        if delta == target.delta_part && ab == target.ab_part {
            let cycles: Vec<Curve> = stack.iter().map(|&i| candidates[i].0.clone()).collect();
            let tuple = TwistTuple::new(cycles)?;
            if total_monodromy(&tuple)? == *phi {
                out.push(tuple);
            }
        }
        // odometer
        for pos in (0..length).rev() {
            stack[pos] += 1;
            if stack[pos] < k {
                continue 'outer;
            }
            stack[pos] = 0;
        }
        break;
    }
    Ok(out)
}
