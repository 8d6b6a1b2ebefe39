//! Derivations of `L` with values in a module, inner derivations and `H¹`.
//!
//! A homogeneous `f: L → V` of degree `d` is a derivation when
//! `f([x,y]) = θ(d,x) x.f(y) − θ(d·x, y) y.f(x)` on homogeneous `x, y`.
//! Maps are matrices with `dim V` rows and `dim L` columns.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::algebra::GradedLieAlgebra;
use crate::grading::GradeElement;
use crate::linalg::{vector, Matrix};
use crate::rep::{adjoint, block_components, Representation};
use crate::scalar::Scalar;
use crate::subspace::Subspace;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DerivationError {
    #[error("component of degree {0:?} is not a derivation")]
    NotADerivation(GradeElement),
    #[error("map has the wrong shape")]
    ShapeMismatch,
}

fn flatten<S: Scalar>(m: &Matrix<S>) -> Vec<S> {
    m.row_vectors().concat()
}

fn unflatten<S: Scalar>(v: &[S], rows: usize, cols: usize) -> Matrix<S> {
    Matrix::from_fn(rows, cols, |p, q| v[p * cols + q].clone())
}

/// The residual `f([x_i,x_j]) − θ(d,x_i) x_i.f(x_j) + θ(d·x_i,x_j) x_j.f(x_i)`.
fn residual<S: Scalar>(r: &Representation<S>, f: &Matrix<S>, d: GradeElement, i: usize, j: usize) -> Vec<S> {
    let l = &r.algebra;
    let color = l.color();
    let (di, dj) = (l.degree(i), l.degree(j));
    let mut out = f.mul_vec(&l.br(&l.unit(i), &l.unit(j)));
    let t1 = r.act(i, &f.column(j));
    let t2 = r.act(j, &f.column(i));
    vector::axpy(&mut out, &-S::one().signed(color.sign(d, di)), &t1);
    vector::axpy(&mut out, &S::one().signed(color.sign(d * di, dj)), &t2);
    out
}

/// True when `f` is homogeneous of degree `d` and satisfies the identity.
pub fn is_derivation<S: Scalar>(r: &Representation<S>, f: &Matrix<S>, d: GradeElement) -> bool {
    let l = &r.algebra;
    if f.rows() != r.dim() || f.cols() != l.dim() {
        return false;
    }
    let degs = l.degrees();
    let vdeg = r.space.degrees();
    let homogeneous = (0..f.rows()).all(|p| (0..f.cols()).all(|q| f[(p, q)].is_zero() || vdeg[p] == d * degs[q]));
    homogeneous && (0..l.dim()).all(|i| (0..l.dim()).all(|j| vector::is_zero(&residual(r, f, d, i, j))))
}

/// Derivations per degree, plus the inner ones.
#[derive(Clone, Debug, PartialEq)]
pub struct DerivationSpace<S> {
    pub per_degree: BTreeMap<GradeElement, Vec<Matrix<S>>>,
    pub inner: Vec<Matrix<S>>,
    pub inner_per_degree: BTreeMap<GradeElement, usize>,
}

impl<S: Scalar> DerivationSpace<S> {
    pub fn dim(&self) -> usize {
        self.per_degree.values().map(Vec::len).sum()
    }

    pub fn inner_dim(&self) -> usize {
        self.inner.len()
    }

    pub fn h1_dim(&self) -> usize {
        self.dim() - self.inner_dim()
    }

    pub fn dim_of(&self, d: GradeElement) -> usize {
        self.per_degree.get(&d).map_or(0, Vec::len)
    }

    pub fn all(&self) -> Vec<Matrix<S>> {
        self.per_degree.values().flatten().cloned().collect()
    }
}

/// Basis of the degree-`d` derivations `L → V`.
pub fn derivations_of_degree<S: Scalar>(r: &Representation<S>, d: GradeElement) -> Vec<Matrix<S>> {
    let l = &r.algebra;
    let (rows, cols) = (r.dim(), l.dim());
    let vdeg = r.space.degrees();
    let slots: Vec<(usize, usize)> = (0..rows)
        .flat_map(|p| (0..cols).map(move |q| (p, q)))
        .filter(|&(p, q)| vdeg[p] == d * l.degree(q))
        .collect();
    if slots.is_empty() {
        return Vec::new();
    }
    // the residual is linear in f: evaluate it on each slot unit
    let mut columns = Vec::with_capacity(slots.len());
    for &(p, q) in &slots {
        let mut f = Matrix::zeros(rows, cols);
        f[(p, q)] = S::one();
        let mut col = Vec::new();
        for i in 0..cols {
            for j in i..cols {
                col.extend(residual(r, &f, d, i, j));
            }
        }
        columns.push(col);
    }
    let eqs = columns[0].len();
    let system = Matrix::from_columns(&columns, eqs);
    system
        .kernel()
        .into_iter()
        .map(|v| {
            let mut f = Matrix::zeros(rows, cols);
            for (u, &(p, q)) in slots.iter().enumerate() {
                f[(p, q)] = v[u].clone();
            }
            f
        })
        .collect()
}

/// `x ↦ θ(deg u, deg x) x.u` for the module basis vector `u`.
pub fn inner_derivation<S: Scalar>(r: &Representation<S>, u: usize) -> Matrix<S> {
    let l = &r.algebra;
    let du = r.space.degree(u);
    let e = vector::unit(r.dim(), u);
    let cols: Vec<Vec<S>> = (0..l.dim())
        .map(|i| vector::scale(&r.act(i, &e), &S::one().signed(l.color().sign(du, l.degree(i)))))
        .collect();
    Matrix::from_columns(&cols, r.dim())
}

/// A basis of `Inn(L, V)` and its dimension per degree.
pub fn inner<S: Scalar>(r: &Representation<S>) -> (Vec<Matrix<S>>, BTreeMap<GradeElement, usize>) {
    let (rows, cols) = (r.dim(), r.algebra.dim());
    let mut per = BTreeMap::new();
    let mut basis = Vec::new();
    for d in r.space.group().elements() {
        let maps: Vec<Vec<S>> = (0..r.dim())
            .filter(|&u| r.space.degree(u) == d)
            .map(|u| flatten(&inner_derivation(r, u)))
            .collect();
        let span = Subspace::span(rows * cols, &maps);
        if span.dim() > 0 {
            per.insert(d, span.dim());
        }
        basis.extend(span.basis().iter().map(|v| unflatten(v, rows, cols)));
    }
    (basis, per)
}

pub fn der_module<S: Scalar>(r: &Representation<S>) -> DerivationSpace<S> {
    let mut per_degree = BTreeMap::new();
    for d in r.space.group().elements() {
        let b = derivations_of_degree(r, d);
        if !b.is_empty() {
            per_degree.insert(d, b);
        }
    }
    let (inner, inner_per_degree) = inner(r);
    DerivationSpace {
        per_degree,
        inner,
        inner_per_degree,
    }
}

/// Derivations of `L` itself.
pub fn der<S: Scalar>(l: &GradedLieAlgebra<S>) -> DerivationSpace<S> {
    der_module(&adjoint(l))
}

pub fn h1_dimension<S: Scalar>(r: &Representation<S>) -> usize {
    der_module(r).h1_dim()
}

/// Splits `f` into block components; each must be a derivation.
pub fn homogeneous_decomposition<S: Scalar>(
    r: &Representation<S>,
    f: &Matrix<S>,
) -> Result<Vec<(GradeElement, Matrix<S>)>, DerivationError> {
    if f.rows() != r.dim() || f.cols() != r.algebra.dim() {
        return Err(DerivationError::ShapeMismatch);
    }
    let comps = block_components(f, r.space.degrees(), &r.algebra.degrees());
    for (d, m) in &comps {
        if !is_derivation(r, m, *d) {
            return Err(DerivationError::NotADerivation(*d));
        }
    }
    Ok(comps.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::constructions::sl2::sl2_module;
    use crate::grading::{klein, ColorMap, GradeGroup};
    use crate::rep::GradedVectorSpace;
    use crate::Rational;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    type Q = Rational;

    #[test]
    fn dimensions() {
        let d = der(&catalog::sl2::<Q>());
        assert_eq!((d.dim(), d.inner_dim(), d.h1_dim()), (3, 3, 0));
        let d = der(&catalog::abelian::<Q>(1));
        assert_eq!((d.dim(), d.inner_dim(), d.h1_dim()), (1, 0, 1));
        let d = der(&catalog::heisenberg::<Q>());
        assert_eq!((d.dim(), d.inner_dim(), d.h1_dim()), (6, 2, 4));
    }

    #[test]
    fn sl2_modules() {
        let sl2 = catalog::sl2::<Q>();
        for n in 1..4 {
            let r = sl2_module::<Q>(n).unwrap();
            let d = der_module(&r);
            assert_eq!(d.dim(), d.inner_dim());
        }
        let triv = Representation::trivial(&sl2, GradedVectorSpace::even(GradeGroup::z2(), 1));
        assert_eq!(der_module(&triv).dim(), 0);
    }

    #[test]
    fn ad_is_derivation_and_inner_sign() {
        for l in catalog::corpus::<Q>() {
            let r = adjoint(&l);
            for a in 0..l.dim() {
                assert!(is_derivation(&r, &l.ad_basis(a), l.degree(a)));
                // the twisted inner map is −ad
                assert_eq!(inner_derivation(&r, a), l.ad_basis(a).scale(&Q::from_i64(-1)));
            }
        }
    }

    #[test]
    fn inner_derivations_of_modules_are_derivations() {
        let space = GradedVectorSpace::from_dims(GradeGroup::klein(), &[1, 1, 1, 1]);
        for c in 1..=4 {
            let r = Representation::<Q>::natural(&space, &ColorMap::klein(c));
            for u in 0..4 {
                assert!(is_derivation(&r, &inner_derivation(&r, u), r.space.degree(u)));
            }
        }
    }

    fn commutator(a: &Matrix<Q>, b: &Matrix<Q>, sign: i8) -> Matrix<Q> {
        &(a * b) - &(b * a).scale(&Q::from_i64(1).signed(sign))
    }

    #[test]
    fn graded_commutator_closure_and_ad_relation() {
        for l in catalog::corpus::<Q>() {
            if l.dim() > 12 {
                continue;
            }
            let r = adjoint(&l);
            let space = der(&l);
            let items: Vec<(GradeElement, Matrix<Q>)> = space
                .per_degree
                .iter()
                .flat_map(|(d, ms)| ms.iter().map(move |m| (*d, m.clone())))
                .collect();
            for (s, d1) in items.iter().take(6) {
                for (t, d2) in items.iter().take(6) {
                    let c = commutator(d1, d2, l.color().sign(*s, *t));
                    assert!(is_derivation(&r, &c, *s * *t));
                }
                for a in 0..l.dim() {
                    // [D, ad_A] = ad_{D A}
                    let lhs = commutator(d1, &l.ad_basis(a), l.color().sign(*s, l.degree(a)));
                    assert_eq!(lhs, l.ad(&d1.column(a)));
                }
            }
        }
    }

    #[test]
    fn decomposition_of_mixed_derivation() {
        let l = crate::rep::pl_klein_unit::<Q>(ColorMap::klein(2));
        let r = adjoint(&l);
        let e = l.ad_basis(0);
        let rr = l.ad_basis(1);
        assert_eq!(l.degree(1), klein::R);
        let sum = &e + &rr;
        let parts = homogeneous_decomposition(&r, &sum).unwrap();
        assert_eq!(parts, vec![(klein::E, e.clone()), (klein::R, rr)]);
        assert_eq!(homogeneous_decomposition(&r, &e).unwrap().len(), 1);
        assert!(homogeneous_decomposition(&r, &Matrix::zeros(16, 16))
            .unwrap()
            .is_empty());
        let mut bad = Matrix::zeros(16, 16);
        bad[(0, 0)] = Q::from_i64(1);
        assert!(matches!(
            homogeneous_decomposition(&r, &bad),
            Err(DerivationError::NotADerivation(_))
        ));
    }

    #[test]
    fn random_derivations_reassemble() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for l in [
            catalog::heisenberg::<Q>(),
            catalog::osp12(),
            catalog::super_heisenberg(),
        ] {
            let r = adjoint(&l);
            let basis = der(&l).all();
            for _ in 0..10 {
                let mut f = Matrix::zeros(l.dim(), l.dim());
                for b in &basis {
                    f = &f + &b.scale(&Q::from_i64(rng.gen_range(-3..4)));
                }
                let parts = homogeneous_decomposition(&r, &f).unwrap();
                let total = parts
                    .iter()
                    .fold(Matrix::zeros(l.dim(), l.dim()), |acc, (_, m)| &acc + m);
                assert_eq!(total, f);
            }
        }
    }
}
