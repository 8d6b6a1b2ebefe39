//! Supertrace, invariant n-linear forms, the Killing form and dual bases.

use thiserror::Error;

use crate::algebra::GradedLieAlgebra;
use crate::grading::{ColorMap, GradeElement};
use crate::linalg::{vector, Matrix};
use crate::rep::{GradedLinearMap, GradedVectorSpace, Representation};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormError {
    #[error("matrix is not square")]
    NotSquare,
    #[error("form is degenerate")]
    Degenerate,
}

/// `γ(x) = θ(a,a)x` on `V_a`.
pub fn gamma<S: Scalar>(space: &GradedVectorSpace, color: &ColorMap) -> GradedLinearMap<S> {
    let n = space.dim();
    let m = Matrix::from_fn(n, n, |i, j| {
        if i == j {
            S::one().signed(color.sign(space.degree(i), space.degree(i)))
        } else {
            S::zero()
        }
    });
    GradedLinearMap::new(space.clone(), space.clone(), m)
}

/// `str(A) = Tr(γA)` with `γ` taken over the given degrees.
pub fn supertrace_of<S: Scalar>(degrees: &[GradeElement], color: &ColorMap, a: &Matrix<S>) -> Result<S, FormError> {
    if !a.is_square() || a.rows() != degrees.len() {
        return Err(FormError::NotSquare);
    }
    Ok((0..a.rows()).fold(S::zero(), |acc, i| {
        acc + a[(i, i)].clone().signed(color.sign(degrees[i], degrees[i]))
    }))
}

pub fn supertrace<S: Scalar>(a: &GradedLinearMap<S>, color: &ColorMap) -> Result<S, FormError> {
    if a.source != a.target {
        return Err(FormError::NotSquare);
    }
    supertrace_of(a.source.degrees(), color, &a.matrix)
}

/// `(A¹, …, Aⁿ) ↦ str(A¹_V ⋯ Aⁿ_V)` for a representation.
#[derive(Clone, Debug)]
pub struct NLinearForm<'a, S> {
    rep: &'a Representation<S>,
    arity: usize,
}

pub fn nlinear_form<S: Scalar>(rep: &Representation<S>, arity: usize) -> NLinearForm<'_, S> {
    assert!(arity >= 1, "arity must be positive");
    NLinearForm { rep, arity }
}

impl<S: Scalar> NLinearForm<'_, S> {
    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn eval(&self, args: &[Vec<S>]) -> S {
        assert_eq!(args.len(), self.arity);
        let mut prod = self.rep.image(&args[0]);
        for a in &args[1..] {
            prod = &prod * &self.rep.image(a);
        }
        supertrace_of(self.rep.space.degrees(), self.rep.algebra.color(), &prod).expect("square")
    }

    /// Value on basis elements `x_{i_1}, …, x_{i_n}`.
    pub fn eval_basis(&self, idx: &[usize]) -> S {
        let n = self.rep.algebra.dim();
        let args: Vec<Vec<S>> = idx.iter().map(|&i| vector::unit(n, i)).collect();
        self.eval(&args)
    }
}

/// A bilinear form on an algebra, stored by its Gram matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct BilinearForm<S> {
    pub degrees: Vec<GradeElement>,
    pub color: ColorMap,
    pub gram: Matrix<S>,
}

impl<S: Scalar> BilinearForm<S> {
    pub fn eval(&self, x: &[S], y: &[S]) -> S {
        vector::dot(x, &self.gram.mul_vec(y))
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.gram.rank() == self.gram.rows()
    }

    /// Nonzero values only between degrees `a, b` with `ab = e`.
    pub fn has_degree_e(&self) -> bool {
        let n = self.degrees.len();
        (0..n).all(|i| (0..n).all(|j| self.gram[(i, j)].is_zero() || (self.degrees[i] * self.degrees[j]).is_identity()))
    }

    /// `b(y, x) = θ(a, b) b(x, y)` on basis elements.
    pub fn is_color_symmetric(&self) -> bool {
        let n = self.degrees.len();
        (0..n).all(|i| {
            (0..n).all(|j| {
                self.gram[(j, i)]
                    == self.gram[(i, j)]
                        .clone()
                        .signed(self.color.sign(self.degrees[i], self.degrees[j]))
            })
        })
    }

    pub fn is_symmetric(&self) -> bool {
        self.gram == self.gram.transpose()
    }
}

/// `φ(A, B) = str(ad A ∘ ad B)`.
pub fn killing_form<S: Scalar>(l: &GradedLieAlgebra<S>) -> BilinearForm<S> {
    let n = l.dim();
    let degrees = l.degrees();
    let ads: Vec<Matrix<S>> = (0..n).map(|i| l.ad_basis(i)).collect();
    let gram = Matrix::from_fn(n, n, |i, j| {
        supertrace_of(&degrees, l.color(), &(&ads[i] * &ads[j])).expect("square")
    });
    BilinearForm {
        degrees,
        color: l.color().clone(),
        gram,
    }
}

/// Rows `F_j` with `b(F_j, E_i) = δ_ij`.
pub fn dual_basis<S: Scalar>(b: &BilinearForm<S>) -> Result<Vec<Vec<S>>, FormError> {
    // F G = I, with F the matrix of rows F_j
    let inv = b.gram.inverse().ok_or(FormError::Degenerate)?;
    Ok(inv.row_vectors())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::grading::GradeGroup;
    use crate::rep::adjoint;
    use crate::structure::{radical, subspace_bracket};
    use crate::subspace::Subspace;
    use crate::Rational;
    use num_traits::Zero;

    type Q = Rational;

    fn q(n: i64, d: i64) -> Q {
        Q::ratio(n, d)
    }

    #[test]
    fn gamma_examples() {
        let k = GradedVectorSpace::from_dims(GradeGroup::klein(), &[1, 1, 1, 1]);
        assert_eq!(
            gamma::<Q>(&k, &ColorMap::klein(3)).matrix,
            Matrix::from_i64(4, 4, &[1, 0, 0, 0, 0, -1, 0, 0, 0, 0, -1, 0, 0, 0, 0, 1])
        );
        let z = GradedVectorSpace::from_dims(GradeGroup::z2(), &[2, 1]);
        assert_eq!(
            gamma::<Q>(&z, &ColorMap::super_sign()).matrix,
            Matrix::from_i64(3, 3, &[1, 0, 0, 0, 1, 0, 0, 0, -1])
        );
        assert_eq!(
            gamma::<Q>(&z, &ColorMap::trivial(GradeGroup::z2())).matrix,
            Matrix::identity(3)
        );
        let g = gamma::<Q>(&k, &ColorMap::klein(4));
        assert_eq!(g.compose(&g).matrix, Matrix::identity(4));
    }

    #[test]
    fn supertrace_of_identity() {
        let k = GradedVectorSpace::from_dims(GradeGroup::klein(), &[1, 1, 1, 1]);
        let id = GradedLinearMap::new(k.clone(), k.clone(), Matrix::identity(4));
        assert_eq!(supertrace::<Q>(&id, &ColorMap::klein(3)).unwrap(), q(0, 1));
        assert_eq!(supertrace::<Q>(&id, &ColorMap::klein(1)).unwrap(), q(4, 1));
        assert_eq!(
            supertrace_of::<Q>(k.degrees(), &ColorMap::klein(1), &Matrix::zeros(4, 3)),
            Err(FormError::NotSquare)
        );
    }

    #[test]
    fn sl2_killing_and_dual() {
        let sl2 = catalog::sl2::<Q>();
        let phi = killing_form(&sl2);
        assert_eq!(phi.gram, Matrix::from_i64(3, 3, &[8, 0, 0, 0, 0, 4, 0, 4, 0]));
        let f = dual_basis(&phi).unwrap();
        assert_eq!(f[0], vec![q(1, 8), q(0, 1), q(0, 1)]);
        assert_eq!(f[1], vec![q(0, 1), q(0, 1), q(1, 4)]);
        assert_eq!(f[2], vec![q(0, 1), q(1, 4), q(0, 1)]);
        for j in 0..3 {
            for i in 0..3 {
                let expect = if i == j { q(1, 1) } else { q(0, 1) };
                assert_eq!(phi.eval(&f[j], &sl2.unit(i)), expect);
            }
        }
    }

    #[test]
    fn zero_and_orthonormal_forms() {
        for l in [catalog::abelian::<Q>(3), catalog::heisenberg::<Q>()] {
            let phi = killing_form(&l);
            assert!(phi.gram.is_zero());
            assert_eq!(dual_basis(&phi), Err(FormError::Degenerate));
        }
        let b = BilinearForm {
            degrees: vec![GradeElement(0); 2],
            color: ColorMap::trivial(GradeGroup::z2()),
            gram: Matrix::<Q>::identity(2),
        };
        assert_eq!(dual_basis(&b).unwrap(), Matrix::<Q>::identity(2).row_vectors());
    }

    #[test]
    fn nlinear_specializations() {
        let sl2 = catalog::sl2::<Q>();
        let ad = adjoint(&sl2);
        let one = nlinear_form(&ad, 1);
        for i in 0..3 {
            assert_eq!(one.eval_basis(&[i]), q(0, 1));
        }
        let two = nlinear_form(&ad, 2);
        let phi = killing_form(&sl2);
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(two.eval_basis(&[i, j]), phi.gram[(i, j)]);
            }
        }
        let triv = Representation::trivial(&sl2, GradedVectorSpace::even(GradeGroup::z2(), 2));
        assert_eq!(nlinear_form(&triv, 2).eval_basis(&[1, 2]), q(0, 1));
    }

    #[test]
    fn killing_properties_on_corpus() {
        for l in catalog::corpus::<Q>() {
            let phi = killing_form(&l);
            assert!(phi.has_degree_e());
            assert!(phi.is_color_symmetric());
            let all_even = (0..l.dim()).all(|i| l.theta(i, i) > 0);
            if all_even {
                assert!(phi.is_symmetric());
            }
            let n = l.dim();
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        // φ([C,A],B) + θ(c,a) φ(A,[C,B]) = 0
                        let ca = l.br(&l.unit(c), &l.unit(a));
                        let cb = l.br(&l.unit(c), &l.unit(b));
                        let lhs = phi.eval(&ca, &l.unit(b)) + phi.eval(&l.unit(a), &cb).signed(l.theta(c, a));
                        assert_eq!(lhs, q(0, 1));
                    }
                }
            }
        }
    }

    #[test]
    fn odd_part_of_osp_killing_form_is_skew() {
        let l = catalog::osp12::<Q>();
        let phi = killing_form(&l);
        assert!(!phi.gram[(3, 4)].is_zero());
        assert_eq!(phi.gram[(3, 4)], -phi.gram[(4, 3)].clone());
        assert!(!phi.is_symmetric());
    }

    #[test]
    fn radical_is_orthogonal_complement_of_derived() {
        for l in catalog::corpus::<Q>().into_iter().filter(|l| l.is_trivially_graded()) {
            let rad = radical(&l).unwrap();
            let full = Subspace::full(l.dim());
            let derived = subspace_bracket(&l, &full, &full);
            let phi = killing_form(&l);
            for x in rad.basis() {
                for y in derived.basis() {
                    assert_eq!(phi.eval(&x, &y), q(0, 1));
                }
            }
            assert!(crate::structure::is_ideal(&l, &rad));
        }
    }
}
