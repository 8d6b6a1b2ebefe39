//! The relative parabose set with `p` paraboson and `f` parafermion modes as
//! a Klein graded Lie algebra.
//!
//! Generators `B_i^±` sit in degree `s` and `F_j^±` in degree `t`. Pairs of
//! generators span `L_e` (`{B,B}` and `[F,F]`) and `L_r` (`{B,F}`).

use std::collections::{BTreeMap, HashMap};

use super::ConstructionError;
use crate::algebra::{AlgebraCandidate, BasisElement, GradedLieAlgebra, LieError, Terms};
use crate::grading::{klein, ColorMap, GradeElement};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Kind {
    Boson,
    Fermion,
}

/// A generator `B_i^ξ` or `F_i^ξ` with `ξ = ±1`. Modes are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Mode {
    pub kind: Kind,
    pub index: usize,
    pub sign: i8,
}

impl Mode {
    /// `+` sorts before `−` within a mode.
    fn key(&self) -> (Kind, usize, i8) {
        (self.kind, self.index, -self.sign)
    }

    pub fn degree(&self) -> GradeElement {
        match self.kind {
            Kind::Boson => klein::S,
            Kind::Fermion => klein::T,
        }
    }

    pub fn label(&self) -> String {
        format!("{}{}", self.index, if self.sign > 0 { "p" } else { "m" })
    }

    pub fn name(&self) -> String {
        let k = match self.kind {
            Kind::Boson => "B",
            Kind::Fermion => "F",
        };
        format!("{k}{}", self.label())
    }
}

/// A basis element of the parabose algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Node {
    Gen(Mode),
    /// `{B_a, B_b}` with `a <= b`.
    BB(Mode, Mode),
    /// `[F_a, F_b]` with `a < b`.
    FF(Mode, Mode),
    /// `{B_a, F_b}`.
    BF(Mode, Mode),
}

impl Node {
    pub fn degree(&self) -> GradeElement {
        match self {
            Node::Gen(m) => m.degree(),
            Node::BB(..) | Node::FF(..) => klein::E,
            Node::BF(..) => klein::R,
        }
    }

    pub fn name(&self) -> String {
        match self {
            Node::Gen(m) => m.name(),
            Node::BB(a, b) => format!("BB_{}_{}", a.label(), b.label()),
            Node::FF(a, b) => format!("FF_{}_{}", a.label(), b.label()),
            Node::BF(a, b) => format!("BF_{}_{}", a.label(), b.label()),
        }
    }

    fn parts(&self) -> Option<(Mode, Mode)> {
        match *self {
            Node::Gen(_) => None,
            Node::BB(a, b) | Node::FF(a, b) | Node::BF(a, b) => Some((a, b)),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ParaboseSpec {
    pub p: usize,
    pub f: usize,
    pub nodes: Vec<Node>,
    index: HashMap<Node, usize>,
}

impl ParaboseSpec {
    pub fn new(p: usize, f: usize) -> Self {
        let mut gens = Vec::new();
        for (kind, count) in [(Kind::Boson, p), (Kind::Fermion, f)] {
            for index in 1..=count {
                for sign in [1, -1] {
                    gens.push(Mode { kind, index, sign });
                }
            }
        }
        let mut nodes: Vec<Node> = gens.iter().copied().map(Node::Gen).collect();
        for (x, a) in gens.iter().enumerate() {
            for b in &gens[x..] {
                match (a.kind, b.kind) {
                    (Kind::Boson, Kind::Boson) => nodes.push(Node::BB(*a, *b)),
                    (Kind::Fermion, Kind::Fermion) if a != b => nodes.push(Node::FF(*a, *b)),
                    (Kind::Boson, Kind::Fermion) => nodes.push(Node::BF(*a, *b)),
                    _ => {}
                }
            }
        }
        let index = nodes.iter().enumerate().map(|(i, n)| (*n, i)).collect();
        ParaboseSpec { p, f, nodes, index }
    }

    pub fn dim(&self) -> usize {
        self.nodes.len()
    }

    pub fn index_of(&self, node: &Node) -> Option<usize> {
        self.index.get(node).copied()
    }

    pub fn basis(&self) -> Vec<BasisElement> {
        self.nodes
            .iter()
            .map(|n| BasisElement::new(n.name(), n.degree()))
            .collect()
    }
}

type Vector<S> = BTreeMap<usize, S>;

fn add_to<S: Scalar>(v: &mut Vector<S>, k: usize, c: S) {
    if c.is_zero() {
        return;
    }
    let e = v.entry(k).or_insert_with(S::zero);
    *e = e.clone() + c;
    if e.is_zero() {
        v.remove(&k);
    }
}

fn delta(a: usize, b: usize) -> i64 {
    i64::from(a == b)
}

struct Builder<'a, S> {
    spec: &'a ParaboseSpec,
    color: &'a ColorMap,
    _s: std::marker::PhantomData<S>,
}

impl<S: Scalar> Builder<'_, S> {
    fn idx(&self, n: Node) -> usize {
        self.spec.index[&n]
    }

    fn gen_of(&self, i: usize) -> Mode {
        match self.spec.nodes[i] {
            Node::Gen(m) => m,
            _ => unreachable!("generator index"),
        }
    }

    fn theta(&self, a: GradeElement, b: GradeElement) -> i8 {
        self.color.sign(a, b)
    }

    /// `[a, b]` for generators: the defining composite.
    fn gg(&self, a: Mode, b: Mode) -> Vector<S> {
        let mut v = Vector::new();
        match (a.kind, b.kind) {
            (Kind::Boson, Kind::Boson) => {
                let (x, y) = if a.key() <= b.key() { (a, b) } else { (b, a) };
                add_to(&mut v, self.idx(Node::BB(x, y)), S::one());
            }
            (Kind::Fermion, Kind::Fermion) => {
                if a != b {
                    let (x, y, s) = if a.key() < b.key() { (a, b, 1) } else { (b, a, -1) };
                    add_to(&mut v, self.idx(Node::FF(x, y)), S::from_i64(s));
                }
            }
            (Kind::Boson, Kind::Fermion) => add_to(&mut v, self.idx(Node::BF(a, b)), S::one()),
            (Kind::Fermion, Kind::Boson) => add_to(&mut v, self.idx(Node::BF(b, a)), S::one()),
        }
        v
    }

    /// `[X, g]` for a composite `X` and a generator `g`.
    fn cg(&self, x: Node, g: Mode) -> Vector<S> {
        let mut v = Vector::new();
        let eps = i64::from(g.sign);
        let half_sq = |d: i64| S::from_i64(d * d) / S::from_i64(2);
        match x {
            Node::BB(bi, bj) if g.kind == Kind::Boson => {
                add_to(
                    &mut v,
                    self.idx(Node::Gen(bi)),
                    S::from_i64((eps - i64::from(bj.sign)) * delta(bj.index, g.index)),
                );
                add_to(
                    &mut v,
                    self.idx(Node::Gen(bj)),
                    S::from_i64((eps - i64::from(bi.sign)) * delta(bi.index, g.index)),
                );
            }
            Node::FF(fi, fj) if g.kind == Kind::Fermion => {
                add_to(
                    &mut v,
                    self.idx(Node::Gen(fi)),
                    half_sq(eps - i64::from(fj.sign)) * S::from_i64(delta(fj.index, g.index)),
                );
                add_to(
                    &mut v,
                    self.idx(Node::Gen(fj)),
                    -half_sq(eps - i64::from(fi.sign)) * S::from_i64(delta(fi.index, g.index)),
                );
            }
            Node::BF(bk, fl) => match g.kind {
                Kind::Boson => add_to(
                    &mut v,
                    self.idx(Node::Gen(fl)),
                    S::from_i64((eps - i64::from(bk.sign)) * delta(bk.index, g.index)),
                ),
                Kind::Fermion => add_to(
                    &mut v,
                    self.idx(Node::Gen(bk)),
                    half_sq(eps - i64::from(fl.sign)) * S::from_i64(delta(fl.index, g.index)),
                ),
            },
            _ => {}
        }
        v
    }

    /// `[g, X] = −θ(X, g)[X, g]`.
    fn gc(&self, g: Mode, x: Node) -> Vector<S> {
        let s = -self.theta(x.degree(), g.degree());
        self.cg(x, g).into_iter().map(|(k, c)| (k, c.signed(s))).collect()
    }

    fn gen_vec_bracket(&self, left: &Vector<S>, right: Mode, out: &mut Vector<S>, scale: S) {
        for (k, c) in left {
            for (k2, c2) in self.gg(self.gen_of(*k), right) {
                add_to(out, k2, scale.clone() * c.clone() * c2);
            }
        }
    }

    fn gen_bracket_vec(&self, left: Mode, right: &Vector<S>, out: &mut Vector<S>, scale: S) {
        for (k, c) in right {
            for (k2, c2) in self.gg(left, self.gen_of(*k)) {
                add_to(out, k2, scale.clone() * c.clone() * c2);
            }
        }
    }

    /// `[X, [g1, g2]] = [[X, g1], g2] + θ(x, g1)[g1, [X, g2]]`.
    fn expand_right(&self, x: Node, y: Node) -> Vector<S> {
        let (g1, g2) = y.parts().expect("composite");
        let mut out = Vector::new();
        self.gen_vec_bracket(&self.cg(x, g1), g2, &mut out, S::one());
        let s = S::one().signed(self.theta(x.degree(), g1.degree()));
        self.gen_bracket_vec(g1, &self.cg(x, g2), &mut out, s);
        out
    }

    /// `[[h1, h2], Y] = [h1, [h2, Y]] − θ(h1, h2)[h2, [h1, Y]]`.
    fn expand_left(&self, x: Node, y: Node) -> Vector<S> {
        let (h1, h2) = x.parts().expect("composite");
        let mut out = Vector::new();
        self.gen_bracket_vec(h1, &self.gc(h2, y), &mut out, S::one());
        let s = -S::one().signed(self.theta(h1.degree(), h2.degree()));
        self.gen_bracket_vec(h2, &self.gc(h1, y), &mut out, s);
        out
    }

    fn bracket(&self, a: usize, b: usize) -> Result<Vector<S>, ConstructionError<S>> {
        let (x, y) = (self.spec.nodes[a], self.spec.nodes[b]);
        Ok(match (x, y) {
            (Node::Gen(g), Node::Gen(h)) => self.gg(g, h),
            (_, Node::Gen(h)) => self.cg(x, h),
            (Node::Gen(g), _) => self.gc(g, y),
            _ => {
                let r = self.expand_right(x, y);
                let l = self.expand_left(x, y);
                if r != l {
                    return Err(ConstructionError::ClosureFailure(format!(
                        "[{}, {}] differs between expansion orders",
                        x.name(),
                        y.name()
                    )));
                }
                r
            }
        })
    }
}

/// Structure constants of the parabose algebra computed with `color`.
pub fn parabose_candidate<S: Scalar>(
    p: usize,
    f: usize,
    color: &ColorMap,
) -> Result<AlgebraCandidate<S>, ConstructionError<S>> {
    if !(1..=2).contains(&p) || !(1..=2).contains(&f) {
        return Err(ConstructionError::UnsupportedSize);
    }
    if !color.group().is_klein() {
        return Err(ConstructionError::BadInput("a Klein color is required".into()));
    }
    let spec = ParaboseSpec::new(p, f);
    let b = Builder::<S> {
        spec: &spec,
        color,
        _s: std::marker::PhantomData,
    };
    let mut cand = AlgebraCandidate::new(color.clone(), spec.basis());
    for i in 0..spec.dim() {
        for j in i..spec.dim() {
            let v = b.bracket(i, j)?;
            if !v.is_empty() {
                cand.set(i, j, v.into_iter().collect::<Terms<S>>());
            }
            if i != j {
                let w = b.bracket(j, i)?;
                if !w.is_empty() {
                    cand.set(j, i, w.into_iter().collect::<Terms<S>>());
                }
            }
        }
    }
    Ok(cand)
}

/// The parabose algebra under `θ_3`, for `1 <= p, f <= 2`.
pub fn build_parabose<S: Scalar>(p: usize, f: usize) -> Result<GradedLieAlgebra<S>, ConstructionError<S>> {
    Ok(parabose_candidate::<S>(p, f, &ColorMap::klein(3))?.validate()?)
}

#[derive(Clone, Debug, PartialEq)]
pub struct ParaboseReport<S: Scalar> {
    /// `θ(s,s) = −1`, `θ(t,t) = +1`, `θ(s,t) = −1`.
    pub signs_match: bool,
    pub jacobi_triples: usize,
    pub jacobi_ok: bool,
    pub even_part_is_lie: bool,
    pub even_plus_t_is_lie: bool,
    /// Validation failure when the same constants are read under `θ_2`.
    pub theta2_witness: Option<LieError<S>>,
}

pub fn parabose_consistency<S: Scalar>(l: &GradedLieAlgebra<S>) -> ParaboseReport<S> {
    let c = l.color();
    let signs_match = c.group().is_klein()
        && c.sign(klein::S, klein::S) == -1
        && c.sign(klein::T, klein::T) == 1
        && c.sign(klein::S, klein::T) == -1;
    let jacobi_ok = crate::algebra::validate(&l.to_full_candidate()).is_ok();
    let even_part_is_lie = l.even_part().is_ok();
    let even_plus_t_is_lie = l
        .restrict_to_degrees(&[klein::E, klein::T])
        .and_then(|x| {
            x.regrade(ColorMap::trivial(crate::grading::GradeGroup::trivial()), |_| {
                GradeElement::IDENTITY
            })
        })
        .is_ok();
    let mut cand = l.to_candidate();
    cand.color = ColorMap::klein(2);
    let theta2_witness = cand.validate().err();
    ParaboseReport {
        signs_match,
        jacobi_triples: l.jacobi_triple_count(),
        jacobi_ok,
        even_part_is_lie,
        even_plus_t_is_lie,
        theta2_witness,
    }
}
