//! Ideals, series, quotients and morphisms of graded Lie algebras.

use crate::algebra::{validate, AlgebraCandidate, GradedLieAlgebra, LieError, Terms};
use crate::forms::killing_form;
use crate::linalg::{vector, Matrix};
use crate::scalar::Scalar;
use crate::subspace::Subspace;

/// `[L, I] ⊆ I`.
pub fn is_ideal<S: Scalar>(l: &GradedLieAlgebra<S>, s: &Subspace<S>) -> bool {
    let basis = s.basis();
    (0..l.dim()).all(|i| basis.iter().all(|v| s.contains(&l.br(&l.unit(i), v))))
}

pub fn is_graded_ideal<S: Scalar>(l: &GradedLieAlgebra<S>, s: &Subspace<S>) -> bool {
    s.is_graded(&l.degrees()) && is_ideal(l, s)
}

/// Smallest ideal containing the given vectors.
pub fn ideal_generated<S: Scalar>(l: &GradedLieAlgebra<S>, gens: &[Vec<S>]) -> Subspace<S> {
    let mut current = Subspace::span(l.dim(), gens);
    loop {
        let mut vs = current.basis();
        for v in current.basis() {
            for i in 0..l.dim() {
                vs.push(l.br(&l.unit(i), &v));
            }
        }
        let next = Subspace::span(l.dim(), &vs);
        if next.dim() == current.dim() {
            return current;
        }
        current = next;
    }
}

/// `Z(L)`: the common kernel of all `ad` maps.
pub fn center<S: Scalar>(l: &GradedLieAlgebra<S>) -> Subspace<S> {
    let n = l.dim();
    // rows: coordinate k of [x_i, z] for every i
    let mut rows = Vec::new();
    for i in 0..n {
        let ad = l.ad_basis(i);
        rows.extend(ad.row_vectors());
    }
    let m = Matrix::from_rows(rows, n);
    Subspace::span(n, &m.kernel())
}

fn require_ideals<S: Scalar>(l: &GradedLieAlgebra<S>, i: &Subspace<S>, j: &Subspace<S>) -> Result<(), LieError<S>> {
    if i.ambient_dim() != l.dim() || j.ambient_dim() != l.dim() {
        return Err(LieError::MixedAlgebras);
    }
    if !is_ideal(l, i) || !is_ideal(l, j) {
        return Err(LieError::NotAnIdeal);
    }
    Ok(())
}

pub fn ideal_sum<S: Scalar>(
    l: &GradedLieAlgebra<S>,
    i: &Subspace<S>,
    j: &Subspace<S>,
) -> Result<Subspace<S>, LieError<S>> {
    require_ideals(l, i, j)?;
    Ok(i.sum(j))
}

pub fn ideal_intersection<S: Scalar>(
    l: &GradedLieAlgebra<S>,
    i: &Subspace<S>,
    j: &Subspace<S>,
) -> Result<Subspace<S>, LieError<S>> {
    require_ideals(l, i, j)?;
    Ok(i.intersection(j))
}

pub fn ideal_bracket<S: Scalar>(
    l: &GradedLieAlgebra<S>,
    i: &Subspace<S>,
    j: &Subspace<S>,
) -> Result<Subspace<S>, LieError<S>> {
    require_ideals(l, i, j)?;
    Ok(subspace_bracket(l, i, j))
}

/// Span of `[u, v]` for `u ∈ a`, `v ∈ b`; no ideal requirement.
pub fn subspace_bracket<S: Scalar>(l: &GradedLieAlgebra<S>, a: &Subspace<S>, b: &Subspace<S>) -> Subspace<S> {
    let mut vs = Vec::new();
    for u in a.basis() {
        for v in b.basis() {
            vs.push(l.br(&u, &v));
        }
    }
    Subspace::span(l.dim(), &vs)
}

/// `L, [L,L], [[L,L],[L,L]], ...` until it stabilizes. The last entry is
/// the stable term.
pub fn derived_series<S: Scalar>(l: &GradedLieAlgebra<S>) -> Vec<Subspace<S>> {
    let mut series = vec![Subspace::full(l.dim())];
    loop {
        let last = series.last().unwrap();
        let next = subspace_bracket(l, last, last);
        if next.dim() == last.dim() {
            return series;
        }
        series.push(next);
    }
}

/// `L, [L,L], [L,[L,L]], ...` until it stabilizes.
pub fn lower_central_series<S: Scalar>(l: &GradedLieAlgebra<S>) -> Vec<Subspace<S>> {
    let full = Subspace::full(l.dim());
    let mut series = vec![full.clone()];
    loop {
        let last = series.last().unwrap();
        let next = subspace_bracket(l, &full, last);
        if next.dim() == last.dim() {
            return series;
        }
        series.push(next);
    }
}

pub fn is_solvable<S: Scalar>(l: &GradedLieAlgebra<S>) -> bool {
    derived_series(l).last().unwrap().is_zero()
}

pub fn is_nilpotent<S: Scalar>(l: &GradedLieAlgebra<S>) -> bool {
    lower_central_series(l).last().unwrap().is_zero()
}

/// A degree-`e` linear map between algebras; column `j` is the image of
/// source basis element `j`.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraMorphism<S> {
    pub source: GradedLieAlgebra<S>,
    pub target: GradedLieAlgebra<S>,
    pub matrix: Matrix<S>,
}

impl<S: Scalar> AlgebraMorphism<S> {
    pub fn apply(&self, v: &[S]) -> Vec<S> {
        self.matrix.mul_vec(v)
    }

    pub fn identity(l: &GradedLieAlgebra<S>) -> Self {
        AlgebraMorphism {
            source: l.clone(),
            target: l.clone(),
            matrix: Matrix::identity(l.dim()),
        }
    }

    pub fn compose(&self, inner: &AlgebraMorphism<S>) -> AlgebraMorphism<S> {
        AlgebraMorphism {
            source: inner.source.clone(),
            target: self.target.clone(),
            matrix: &self.matrix * &inner.matrix,
        }
    }
}

/// Verifies degree-`e` homogeneity and `f[x,y] = [f x, f y]` on basis pairs.
pub fn check_morphism<S: Scalar>(f: &AlgebraMorphism<S>) -> Result<(), LieError<S>> {
    let (src, tgt) = (&f.source, &f.target);
    if f.matrix.rows() != tgt.dim() || f.matrix.cols() != src.dim() {
        return Err(LieError::MixedAlgebras);
    }
    for j in 0..src.dim() {
        let img = f.matrix.column(j);
        if img
            .iter()
            .enumerate()
            .any(|(k, c)| !c.is_zero() && tgt.degree(k) != src.degree(j))
        {
            return Err(LieError::NotDegreePreserving(j));
        }
    }
    for i in 0..src.dim() {
        for j in 0..src.dim() {
            let lhs = f.apply(&src.br(&src.unit(i), &src.unit(j)));
            let rhs = tgt.br(&f.matrix.column(i), &f.matrix.column(j));
            if lhs != rhs {
                return Err(LieError::NotAMorphism { i, j });
            }
        }
    }
    Ok(())
}

pub fn image<S: Scalar>(f: &AlgebraMorphism<S>) -> Subspace<S> {
    let cols: Vec<Vec<S>> = (0..f.matrix.cols()).map(|j| f.matrix.column(j)).collect();
    Subspace::span(f.target.dim(), &cols)
}

/// The kernel of a morphism, a graded ideal of the source.
pub fn kernel_ideal<S: Scalar>(f: &AlgebraMorphism<S>) -> Subspace<S> {
    Subspace::span(f.source.dim(), &f.matrix.kernel())
}

/// `L/a` with basis the non-pivot coordinates of `a`, and the projection.
pub fn quotient<S: Scalar>(
    l: &GradedLieAlgebra<S>,
    ideal: &Subspace<S>,
) -> Result<(GradedLieAlgebra<S>, AlgebraMorphism<S>), LieError<S>> {
    if ideal.ambient_dim() != l.dim() {
        return Err(LieError::MixedAlgebras);
    }
    if !is_graded_ideal(l, ideal) {
        return Err(LieError::NotGradedIdeal);
    }
    let reps = ideal.non_pivots();
    let m = reps.len();
    let project = |v: &[S]| -> Vec<S> {
        let r = ideal.reduce(v);
        reps.iter().map(|&c| r[c].clone()).collect()
    };
    let basis = reps.iter().map(|&c| l.basis()[c].clone()).collect();
    let mut cand = AlgebraCandidate::new(l.color().clone(), basis);
    for a in 0..m {
        for b in a..m {
            let coords = project(&l.br(&l.unit(reps[a]), &l.unit(reps[b])));
            let terms: Terms<S> = coords.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
            if !terms.is_empty() {
                cand.set(a, b, terms);
            }
        }
    }
    let q = validate(&cand)?;
    let cols: Vec<Vec<S>> = (0..l.dim()).map(|j| project(&l.unit(j))).collect();
    let pi = AlgebraMorphism {
        source: l.clone(),
        target: q.clone(),
        matrix: Matrix::from_columns(&cols, m),
    };
    Ok((q, pi))
}

/// For `f: L → L'` with `a ⊆ ker f`, the unique `f': L/a → L'` with
/// `f' ∘ π = f`. Returns the quotient projection and `f'`.
pub fn factor_through<S: Scalar>(
    f: &AlgebraMorphism<S>,
    ideal: &Subspace<S>,
) -> Result<(AlgebraMorphism<S>, AlgebraMorphism<S>), LieError<S>> {
    let ker = kernel_ideal(f);
    if !ker.contains_subspace(ideal) {
        return Err(LieError::NotAnIdeal);
    }
    let (q, pi) = quotient(&f.source, ideal)?;
    let reps = ideal.non_pivots();
    let cols: Vec<Vec<S>> = reps.iter().map(|&c| f.matrix.column(c)).collect();
    let induced = AlgebraMorphism {
        source: q,
        target: f.target.clone(),
        matrix: Matrix::from_columns(&cols, f.target.dim()),
    };
    Ok((pi, induced))
}

/// Outcome of the first-isomorphism reconstruction for a morphism.
#[derive(Clone, Debug)]
pub struct FirstIsomorphism<S> {
    pub projection: AlgebraMorphism<S>,
    pub induced: AlgebraMorphism<S>,
    /// `f' ∘ π = f` on every basis element.
    pub factors: bool,
    /// `f'` is a morphism, injective, with image equal to `im f`.
    pub isomorphism_onto_image: bool,
}

pub fn first_isomorphism<S: Scalar>(f: &AlgebraMorphism<S>) -> Result<FirstIsomorphism<S>, LieError<S>> {
    check_morphism(f)?;
    let ker = kernel_ideal(f);
    let (pi, induced) = factor_through(f, &ker)?;
    let factors = induced.compose(&pi).matrix == f.matrix;
    let injective = induced.matrix.rank() == induced.source.dim();
    let iso = check_morphism(&induced).is_ok() && injective && image(&induced) == image(f);
    Ok(FirstIsomorphism {
        projection: pi,
        induced,
        factors,
        isomorphism_onto_image: iso,
    })
}

/// The radical of an ordinary Lie algebra: the Killing-orthogonal
/// complement of `[L, L]`.
pub fn radical<S: Scalar>(l: &GradedLieAlgebra<S>) -> Result<Subspace<S>, LieError<S>> {
    if !l.is_trivially_graded() {
        return Err(LieError::NotTriviallyGraded);
    }
    let gram = killing_form(l).gram;
    let full = Subspace::full(l.dim());
    let derived = subspace_bracket(l, &full, &full);
    // x ⊥ y for y ∈ [L,L]  <=>  (G y)·x = 0
    let rows: Vec<Vec<S>> = derived.basis().iter().map(|y| gram.mul_vec(y)).collect();
    if rows.is_empty() {
        return Ok(full);
    }
    let m = Matrix::from_rows(rows, l.dim());
    Ok(Subspace::span(l.dim(), &m.kernel()))
}

/// Nilpotency of a square matrix (`M^n = 0`).
pub fn is_nilpotent_matrix<S: Scalar>(m: &Matrix<S>) -> bool {
    let mut p = m.clone();
    for _ in 0..m.rows() {
        if p.is_zero() {
            return true;
        }
        p = &p * m;
    }
    p.is_zero()
}

/// The subalgebra spanned by a subspace, as an algebra in its own basis.
pub fn subalgebra<S: Scalar>(l: &GradedLieAlgebra<S>, s: &Subspace<S>) -> Result<GradedLieAlgebra<S>, LieError<S>> {
    let basis_vecs = s.basis();
    let coords = |v: &[S]| -> Option<Vec<S>> {
        if !s.contains(v) {
            return None;
        }
        Some(s.pivots().iter().map(|&p| v[p].clone()).collect())
    };
    let basis = basis_vecs
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let d = l.homogeneous_degree(v).unwrap_or_default();
            crate::algebra::BasisElement::new(format!("u{}", i + 1), d)
        })
        .collect();
    let mut cand = AlgebraCandidate::new(l.color().clone(), basis);
    for a in 0..basis_vecs.len() {
        for b in a..basis_vecs.len() {
            let c = coords(&l.br(&basis_vecs[a], &basis_vecs[b])).ok_or(LieError::NotClosed)?;
            let terms: Terms<S> = c.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect();
            if !terms.is_empty() {
                cand.set(a, b, terms);
            }
        }
    }
    validate(&cand)
}

#[allow(dead_code)]
fn vec_eq<S: Scalar>(a: &[S], b: &[S]) -> bool {
    vector::is_zero(&vector::sub(a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::grading::{klein, ColorMap, GradeElement};
    use crate::Rational;

    type Q = Rational;

    fn q(v: i64) -> Q {
        Q::from_i64(v)
    }

    #[test]
    fn ideal_examples() {
        let sl2 = catalog::sl2::<Q>();
        assert!(!is_ideal(&sl2, &Subspace::span(3, &[sl2.unit(1)])));
        assert!(is_ideal(&sl2, &Subspace::full(3)));
        let h = catalog::heisenberg::<Q>();
        let z = Subspace::span(3, &[h.unit(2)]);
        assert!(is_ideal(&h, &z));
        assert!(is_graded_ideal(&h, &z));
    }

    #[test]
    fn centers() {
        assert!(center(&catalog::sl2::<Q>()).is_zero());
        assert!(center(&catalog::abelian::<Q>(3)).is_full());
        let h = catalog::heisenberg::<Q>();
        assert_eq!(center(&h), Subspace::span(3, &[h.unit(2)]));
        for l in catalog::corpus::<Q>() {
            assert!(is_graded_ideal(&l, &center(&l)));
        }
    }

    #[test]
    fn ideal_operations() {
        let h = catalog::heisenberg::<Q>();
        let z = center(&h);
        let zero = Subspace::zero(3);
        assert_eq!(ideal_sum(&h, &z, &zero).unwrap(), z);
        assert_eq!(ideal_intersection(&h, &z, &z).unwrap(), z);
        let full = Subspace::full(3);
        assert_eq!(ideal_bracket(&h, &full, &full).unwrap(), z);
        let not_ideal = Subspace::span(3, &[h.unit(0)]);
        assert_eq!(ideal_sum(&h, &not_ideal, &z), Err(LieError::NotAnIdeal));
        for op in [ideal_sum::<Q>, ideal_intersection::<Q>, ideal_bracket::<Q>] {
            assert!(is_ideal(&h, &op(&h, &z, &full).unwrap()));
        }
    }

    #[test]
    fn series_and_solvability() {
        let sl2 = catalog::sl2::<Q>();
        assert_eq!(derived_series(&sl2).len(), 1);
        assert!(!is_solvable(&sl2));
        assert!(!is_nilpotent(&sl2));
        let h = catalog::heisenberg::<Q>();
        let lcs = lower_central_series(&h);
        assert_eq!(lcs.iter().map(Subspace::dim).collect::<Vec<_>>(), vec![3, 1, 0]);
        assert!(is_nilpotent(&h) && is_solvable(&h));
        let a = catalog::abelian::<Q>(2);
        assert_eq!(
            derived_series(&a).iter().map(Subspace::dim).collect::<Vec<_>>(),
            vec![2, 0]
        );
        assert!(is_nilpotent(&a) && is_solvable(&a));
    }

    #[test]
    fn quotients() {
        let sl2 = catalog::sl2::<Q>();
        let (q0, pi) = quotient(&sl2, &Subspace::zero(3)).unwrap();
        assert_eq!(q0, sl2);
        assert_eq!(pi.matrix, Matrix::identity(3));
        let h = catalog::heisenberg::<Q>();
        let (qh, pih) = quotient(&h, &center(&h)).unwrap();
        assert_eq!(qh.dim(), 2);
        assert!(qh.is_abelian());
        check_morphism(&pih).unwrap();
        assert_eq!(kernel_ideal(&pih), center(&h));
        assert_eq!(
            quotient(&sl2, &Subspace::span(3, &[sl2.unit(1)])).unwrap_err(),
            LieError::NotGradedIdeal
        );
    }

    #[test]
    fn morphism_checks() {
        let sl2 = catalog::sl2::<Q>();
        let id = AlgebraMorphism::identity(&sl2);
        check_morphism(&id).unwrap();
        assert!(kernel_ideal(&id).is_zero());
        let swap = AlgebraMorphism {
            source: sl2.clone(),
            target: sl2.clone(),
            matrix: Matrix::from_i64(3, 3, &[0, 1, 0, 1, 0, 0, 0, 0, 1]),
        };
        assert_eq!(check_morphism(&swap), Err(LieError::NotAMorphism { i: 0, j: 1 }));
    }

    #[test]
    fn first_isomorphism_for_heisenberg_projection() {
        let h = catalog::heisenberg::<Q>();
        let (_, pi) = quotient(&h, &center(&h)).unwrap();
        let fi = first_isomorphism(&pi).unwrap();
        assert!(fi.factors && fi.isomorphism_onto_image);
    }

    #[test]
    fn radicals() {
        assert!(radical(&catalog::sl2::<Q>()).unwrap().is_zero());
        assert!(radical(&catalog::abelian::<Q>(3)).unwrap().is_full());
        let h = catalog::heisenberg::<Q>();
        assert!(radical(&h).unwrap().is_full());
        assert_eq!(radical(&catalog::osp12::<Q>()), Err(LieError::NotTriviallyGraded));
    }

    #[test]
    fn klein_ideal_components_are_ideals() {
        // for an ideal I: I_e is an ideal of L_e and I_e ⊕ I_r of L_e ⊕ L_r
        let l = crate::rep::pl_klein_unit::<Q>(ColorMap::klein(3));
        let gens = vec![l.unit(0)];
        let ideal = ideal_generated(&l, &gens);
        assert!(is_graded_ideal(&l, &ideal));
        for keep in [vec![klein::E], vec![klein::E, klein::R]] {
            let sub = l.restrict_to_degrees(&keep).unwrap();
            let idx: Vec<usize> = (0..l.dim()).filter(|&i| keep.contains(&l.degree(i))).collect();
            let comps: Vec<Vec<Q>> = ideal
                .basis()
                .iter()
                .flat_map(|v| l.components(v).into_iter())
                .filter(|(d, _)| keep.contains(d))
                .map(|(_, v)| idx.iter().map(|&i| v[i].clone()).collect())
                .collect();
            let restricted = Subspace::span(sub.dim(), &comps);
            assert!(is_ideal(&sub, &restricted));
        }
        let _ = GradeElement::IDENTITY;
        let _ = q(0);
    }
}
