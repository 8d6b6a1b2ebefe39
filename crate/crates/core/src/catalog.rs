//! Small named algebras used throughout the tests and by the CLI.

use crate::algebra::{validate, AlgebraCandidate, BasisElement, GradedLieAlgebra};
use crate::grading::{ColorMap, GradeElement, GradeGroup};
use crate::scalar::Scalar;

fn s<S: Scalar>(v: i64) -> S {
    S::from_i64(v)
}

fn even(names: &[&str]) -> Vec<BasisElement> {
    names
        .iter()
        .map(|n| BasisElement::new(*n, GradeElement::IDENTITY))
        .collect()
}

/// `sl(2)` with basis `(h, x, y)`: `[h,x] = 2x`, `[h,y] = -2y`, `[x,y] = h`.
/// Trivially graded over `Z_2`.
pub fn sl2<S: Scalar>() -> GradedLieAlgebra<S> {
    let cand = AlgebraCandidate::new(ColorMap::trivial(GradeGroup::z2()), even(&["h", "x", "y"]))
        .with(0, 1, vec![(1, s(2))])
        .with(0, 2, vec![(2, s(-2))])
        .with(1, 2, vec![(0, s(1))]);
    validate(&cand).expect("sl2 is a Lie algebra")
}

/// The 3-dimensional Heisenberg algebra `(p, q, z)` with `[p,q] = z`.
pub fn heisenberg<S: Scalar>() -> GradedLieAlgebra<S> {
    let cand =
        AlgebraCandidate::new(ColorMap::trivial(GradeGroup::z2()), even(&["p", "q", "z"])).with(0, 1, vec![(2, s(1))]);
    validate(&cand).expect("Heisenberg is a Lie algebra")
}

pub fn abelian<S: Scalar>(dim: usize) -> GradedLieAlgebra<S> {
    let basis = (0..dim)
        .map(|i| BasisElement::new(format!("a{}", i + 1), GradeElement::IDENTITY))
        .collect();
    validate(&AlgebraCandidate::new(ColorMap::trivial(GradeGroup::z2()), basis)).expect("abelian")
}

/// Super Heisenberg: even `z` central, odd `u` with `[u,u] = z`.
pub fn super_heisenberg<S: Scalar>() -> GradedLieAlgebra<S> {
    let basis = vec![
        BasisElement::new("z", GradeElement(0)),
        BasisElement::new("u", GradeElement(1)),
    ];
    let cand = AlgebraCandidate::new(ColorMap::super_sign(), basis).with(1, 1, vec![(0, s(1))]);
    validate(&cand).expect("super Heisenberg is a Lie superalgebra")
}

/// `osp(1|2)`: even `sl(2)` on `(h, x, y)`, odd `e0, e1` spanning the
/// standard module, with `[e0,e0] = -2x`, `[e0,e1] = h`, `[e1,e1] = 2y`.
pub fn osp12<S: Scalar>() -> GradedLieAlgebra<S> {
    let mut basis = even(&["h", "x", "y"]);
    basis.push(BasisElement::new("e0", GradeElement(1)));
    basis.push(BasisElement::new("e1", GradeElement(1)));
    let cand = AlgebraCandidate::new(ColorMap::super_sign(), basis)
        .with(0, 1, vec![(1, s(2))])
        .with(0, 2, vec![(2, s(-2))])
        .with(1, 2, vec![(0, s(1))])
        .with(0, 3, vec![(3, s(1))])
        .with(0, 4, vec![(4, s(-1))])
        .with(1, 4, vec![(3, s(1))])
        .with(2, 3, vec![(4, s(1))])
        .with(3, 3, vec![(1, s(-2))])
        .with(3, 4, vec![(0, s(1))])
        .with(4, 4, vec![(2, s(2))]);
    validate(&cand).expect("osp(1|2) is a Lie superalgebra")
}

/// The algebras every corpus-wide property is checked against.
pub fn corpus<S: Scalar>() -> Vec<GradedLieAlgebra<S>> {
    let mut out = vec![
        sl2(),
        heisenberg(),
        abelian(1),
        abelian(2),
        abelian(3),
        abelian(4),
        super_heisenberg(),
        osp12(),
    ];
    for i in 1..=4 {
        out.push(crate::rep::pl_klein_unit(ColorMap::klein(i)));
    }
    out.push(crate::constructions::parabose::build_parabose(1, 1).expect("parabose(1,1) closes"));
    out
}

/// The `Z_2`-graded members of [`corpus`] with a nontrivial odd part.
pub fn super_corpus<S: Scalar>() -> Vec<GradedLieAlgebra<S>> {
    vec![
        super_heisenberg(),
        osp12(),
        crate::rep::pl(
            &crate::rep::GradedVectorSpace::from_dims(GradeGroup::z2(), &[1, 1]),
            &ColorMap::super_sign(),
        ),
    ]
}
