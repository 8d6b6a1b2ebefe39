//! Graded vector spaces, the algebra `pl(V)`, graded representations and
//! module endomorphisms.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::algebra::{validate, AlgebraCandidate, BasisElement, GradedLieAlgebra};
use crate::grading::{ColorMap, GradeElement, GradeGroup};
use crate::linalg::{vector, Matrix};
use crate::scalar::Scalar;
use crate::subspace::Subspace;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error("representation fails the bracket relation on basis pair ({i}, {j})")]
    NotARepresentation { i: usize, j: usize },
    #[error("image of basis element {0} is not homogeneous of its degree")]
    WrongDegree(usize),
    #[error("matrix shapes do not match the algebra and space")]
    ShapeMismatch,
    #[error("module is not simple: basis vector {generator} generates a submodule of dimension {dim}")]
    NotSimple { generator: usize, dim: usize },
}

/// `V = ⊕ V_g` with an explicit degree for every basis vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedVectorSpace {
    group: GradeGroup,
    degrees: Vec<GradeElement>,
}

impl GradedVectorSpace {
    pub fn new(group: GradeGroup, degrees: Vec<GradeElement>) -> Self {
        GradedVectorSpace { group, degrees }
    }

    /// Blocks in group-element order (`e, r, s, t` on Klein); `dims[g]` is
    /// the dimension of `V_g`.
    pub fn from_dims(group: GradeGroup, dims: &[usize]) -> Self {
        let degrees = dims
            .iter()
            .enumerate()
            .flat_map(|(g, &d)| std::iter::repeat_n(GradeElement(g as u8), d))
            .collect();
        GradedVectorSpace { group, degrees }
    }

    /// A purely even space of the given dimension.
    pub fn even(group: GradeGroup, dim: usize) -> Self {
        GradedVectorSpace {
            group,
            degrees: vec![GradeElement::IDENTITY; dim],
        }
    }

    pub fn group(&self) -> GradeGroup {
        self.group
    }

    pub fn dim(&self) -> usize {
        self.degrees.len()
    }

    pub fn degree(&self, i: usize) -> GradeElement {
        self.degrees[i]
    }

    pub fn degrees(&self) -> &[GradeElement] {
        &self.degrees
    }

    pub fn component_dims(&self) -> Vec<usize> {
        let mut dims = vec![0; self.group.order()];
        for d in &self.degrees {
            dims[d.0 as usize] += 1;
        }
        dims
    }

    pub fn direct_sum(&self, other: &GradedVectorSpace) -> GradedVectorSpace {
        let mut degrees = self.degrees.clone();
        degrees.extend_from_slice(&other.degrees);
        GradedVectorSpace {
            group: self.group,
            degrees,
        }
    }
}

/// True when every nonzero entry `(p, q)` satisfies `deg(p) = d · deg(q)`.
pub fn is_homogeneous_of<S: Scalar>(
    m: &Matrix<S>,
    target: &[GradeElement],
    source: &[GradeElement],
    d: GradeElement,
) -> bool {
    (0..m.rows()).all(|p| (0..m.cols()).all(|q| m[(p, q)].is_zero() || target[p] == d * source[q]))
}

/// The block components `m = Σ_d m_d`, nonzero ones only.
pub fn block_components<S: Scalar>(
    m: &Matrix<S>,
    target: &[GradeElement],
    source: &[GradeElement],
) -> BTreeMap<GradeElement, Matrix<S>> {
    let mut out: BTreeMap<GradeElement, Matrix<S>> = BTreeMap::new();
    for p in 0..m.rows() {
        for q in 0..m.cols() {
            if m[(p, q)].is_zero() {
                continue;
            }
            let d = target[p] * source[q];
            out.entry(d).or_insert_with(|| Matrix::zeros(m.rows(), m.cols()))[(p, q)] = m[(p, q)].clone();
        }
    }
    out
}

/// A linear map between graded spaces.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedLinearMap<S> {
    pub source: GradedVectorSpace,
    pub target: GradedVectorSpace,
    pub matrix: Matrix<S>,
}

impl<S: Scalar> GradedLinearMap<S> {
    pub fn new(source: GradedVectorSpace, target: GradedVectorSpace, matrix: Matrix<S>) -> Self {
        assert_eq!(matrix.rows(), target.dim());
        assert_eq!(matrix.cols(), source.dim());
        GradedLinearMap { source, target, matrix }
    }

    pub fn is_homogeneous_of(&self, d: GradeElement) -> bool {
        is_homogeneous_of(&self.matrix, self.target.degrees(), self.source.degrees(), d)
    }

    /// The degree of a nonzero homogeneous map.
    pub fn degree(&self) -> Option<GradeElement> {
        let comps = self.components();
        if comps.len() == 1 {
            comps.keys().next().copied()
        } else {
            None
        }
    }

    pub fn components(&self) -> BTreeMap<GradeElement, Matrix<S>> {
        block_components(&self.matrix, self.target.degrees(), self.source.degrees())
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &GradedLinearMap<S>) -> GradedLinearMap<S> {
        GradedLinearMap {
            source: inner.source.clone(),
            target: self.target.clone(),
            matrix: &self.matrix * &inner.matrix,
        }
    }
}

fn unit_name(n: usize, i: usize, j: usize) -> String {
    if n < 10 {
        format!("E{}{}", i + 1, j + 1)
    } else {
        format!("E{}_{}", i + 1, j + 1)
    }
}

/// `pl(V)`: all matrix units `E_ij` (row-major), `deg E_ij = deg(i)·deg(j)`,
/// with `[A,B] = AB − θ(a,b)BA`.
pub fn pl<S: Scalar>(space: &GradedVectorSpace, color: &ColorMap) -> GradedLieAlgebra<S> {
    let n = space.dim();
    let idx = |i: usize, j: usize| i * n + j;
    let basis = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| BasisElement::new(unit_name(n, i, j), space.degree(i) * space.degree(j)))
        .collect();
    let mut cand = AlgebraCandidate::new(color.clone(), basis);
    for a in 0..n * n {
        for b in a..n * n {
            let (i, j) = (a / n, a % n);
            let (k, l) = (b / n, b % n);
            let theta = color.sign(space.degree(i) * space.degree(j), space.degree(k) * space.degree(l));
            // E_ij E_kl = δ_jk E_il
            let mut terms: BTreeMap<usize, S> = BTreeMap::new();
            if j == k {
                let e = terms.entry(idx(i, l)).or_insert_with(S::zero);
                *e = e.clone() + S::one();
            }
            if l == i {
                let e = terms.entry(idx(k, j)).or_insert_with(S::zero);
                *e = e.clone() - S::one().signed(theta);
            }
            let terms: Vec<(usize, S)> = terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            if !terms.is_empty() {
                cand.set(a, b, terms);
            }
        }
    }
    validate(&cand).expect("pl(V) satisfies the graded Lie axioms")
}

/// `pl(V)` for the Klein space with one dimension in each degree.
pub fn pl_klein_unit<S: Scalar>(color: ColorMap) -> GradedLieAlgebra<S> {
    pl(
        &GradedVectorSpace::from_dims(GradeGroup::klein(), &[1, 1, 1, 1]),
        &color,
    )
}

/// The matrix of basis element `k` of `pl(V)` for a space of dimension `n`.
pub fn matrix_unit<S: Scalar>(n: usize, k: usize) -> Matrix<S> {
    let mut m = Matrix::zeros(n, n);
    m[(k / n, k % n)] = S::one();
    m
}

/// An element of `pl(V)` as a matrix.
pub fn pl_matrix<S: Scalar>(n: usize, v: &[S]) -> Matrix<S> {
    Matrix::from_fn(n, n, |i, j| v[i * n + j].clone())
}

/// A graded representation: images of the algebra basis as matrices on `V`.
#[derive(Clone, Debug, PartialEq)]
pub struct Representation<S> {
    pub algebra: GradedLieAlgebra<S>,
    pub space: GradedVectorSpace,
    pub images: Vec<Matrix<S>>,
}

impl<S: Scalar> Representation<S> {
    /// Checked constructor.
    pub fn new(
        algebra: GradedLieAlgebra<S>,
        space: GradedVectorSpace,
        images: Vec<Matrix<S>>,
    ) -> Result<Self, RepError> {
        let r = Representation { algebra, space, images };
        check_representation(&r)?;
        Ok(r)
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// `r(a)` for an algebra element in coordinates.
    pub fn image(&self, a: &[S]) -> Matrix<S> {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for (i, c) in a.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            m = &m + &self.images[i].scale(c);
        }
        m
    }

    pub fn act(&self, i: usize, v: &[S]) -> Vec<S> {
        self.images[i].mul_vec(v)
    }

    /// The zero action on `space`.
    pub fn trivial(algebra: &GradedLieAlgebra<S>, space: GradedVectorSpace) -> Self {
        let n = space.dim();
        Representation {
            algebra: algebra.clone(),
            space,
            images: vec![Matrix::zeros(n, n); algebra.dim()],
        }
    }

    pub fn direct_sum(&self, other: &Representation<S>) -> Self {
        let (n, m) = (self.dim(), other.dim());
        let images = self
            .images
            .iter()
            .zip(&other.images)
            .map(|(a, b)| {
                Matrix::from_fn(n + m, n + m, |p, q| match (p < n, q < n) {
                    (true, true) => a[(p, q)].clone(),
                    (false, false) => b[(p - n, q - n)].clone(),
                    _ => S::zero(),
                })
            })
            .collect();
        Representation {
            algebra: self.algebra.clone(),
            space: self.space.direct_sum(&other.space),
            images,
        }
    }

    /// The defining action of `pl(V)` on `V`.
    pub fn natural(space: &GradedVectorSpace, color: &ColorMap) -> Self {
        let algebra = pl(space, color);
        let n = space.dim();
        let images = (0..n * n).map(|k| matrix_unit(n, k)).collect();
        Representation {
            algebra,
            space: space.clone(),
            images,
        }
    }
}

/// Checks degrees of the images and `r([A,B]) = r(A)r(B) − θ(a,b)r(B)r(A)`.
pub fn check_representation<S: Scalar>(r: &Representation<S>) -> Result<(), RepError> {
    let l = &r.algebra;
    let n = r.dim();
    if r.images.len() != l.dim() || r.images.iter().any(|m| m.rows() != n || m.cols() != n) {
        return Err(RepError::ShapeMismatch);
    }
    if r.space.group() != l.group() {
        return Err(RepError::ShapeMismatch);
    }
    let degs = r.space.degrees();
    for (i, m) in r.images.iter().enumerate() {
        if !is_homogeneous_of(m, degs, degs, l.degree(i)) {
            return Err(RepError::WrongDegree(i));
        }
    }
    for i in 0..l.dim() {
        for j in 0..l.dim() {
            let lhs = r.image(&l.br(&l.unit(i), &l.unit(j)));
            let ab = &r.images[i] * &r.images[j];
            let ba = &r.images[j] * &r.images[i];
            let rhs = &ab - &ba.scale(&S::one().signed(l.theta(i, j)));
            if lhs != rhs {
                return Err(RepError::NotARepresentation { i, j });
            }
        }
    }
    Ok(())
}

pub fn adjoint<S: Scalar>(l: &GradedLieAlgebra<S>) -> Representation<S> {
    Representation {
        algebra: l.clone(),
        space: GradedVectorSpace::new(l.group(), l.degrees()),
        images: (0..l.dim()).map(|i| l.ad_basis(i)).collect(),
    }
}

/// `{v : A v = 0 for all A}`.
pub fn invariants_of<S: Scalar>(r: &Representation<S>) -> Subspace<S> {
    let rows: Vec<Vec<S>> = r.images.iter().flat_map(|m| m.row_vectors()).collect();
    Subspace::span(r.dim(), &Matrix::from_rows(rows, r.dim()).kernel())
}

/// Basis of `Hom_L(V)_d`: degree-`d` maps with `f r(x) = θ(d, deg x) r(x) f`.
pub fn module_endomorphisms<S: Scalar>(r: &Representation<S>, d: GradeElement) -> Vec<Matrix<S>> {
    let n = r.dim();
    let degs = r.space.degrees();
    let color = r.algebra.color();
    let slots: Vec<(usize, usize)> = (0..n)
        .flat_map(|p| (0..n).map(move |q| (p, q)))
        .filter(|&(p, q)| degs[p] == d * degs[q])
        .collect();
    let mut rows = Vec::new();
    for (i, m) in r.images.iter().enumerate() {
        let sign = S::one().signed(color.sign(d, r.algebra.degree(i)));
        // entry (p, q) of f m − sign·m f
        for p in 0..n {
            for q in 0..n {
                let mut row: Vec<S> = vector::zeros(slots.len());
                for (u, &(a, b)) in slots.iter().enumerate() {
                    if a == p && !m[(b, q)].is_zero() {
                        row[u] = row[u].clone() + m[(b, q)].clone();
                    }
                    if b == q && !m[(p, a)].is_zero() {
                        row[u] = row[u].clone() - sign.clone() * m[(p, a)].clone();
                    }
                }
                if !vector::is_zero(&row) {
                    rows.push(row);
                }
            }
        }
    }
    let kernel = Matrix::from_rows(rows, slots.len()).kernel();
    kernel
        .into_iter()
        .map(|v| {
            let mut f = Matrix::zeros(n, n);
            for (u, &(a, b)) in slots.iter().enumerate() {
                f[(a, b)] = v[u].clone();
            }
            f
        })
        .collect()
}

/// The smallest subspace containing `gens` and stable under every `r(x_i)`.
pub fn generated_submodule<S: Scalar>(r: &Representation<S>, gens: &[Vec<S>]) -> Subspace<S> {
    let mut current = Subspace::span(r.dim(), gens);
    loop {
        let mut vs = current.basis();
        for v in current.basis() {
            for m in &r.images {
                vs.push(m.mul_vec(&v));
            }
        }
        let next = Subspace::span(r.dim(), &vs);
        if next.dim() == current.dim() {
            return current;
        }
        current = next;
    }
}

/// Brute-force simplicity: every basis vector must generate all of `V`.
pub fn check_simple<S: Scalar>(r: &Representation<S>) -> Result<(), RepError> {
    if r.dim() == 0 {
        return Err(RepError::NotSimple { generator: 0, dim: 0 });
    }
    for k in 0..r.dim() {
        let sub = generated_submodule(r, &[vector::unit(r.dim(), k)]);
        if !sub.is_full() {
            return Err(RepError::NotSimple {
                generator: k,
                dim: sub.dim(),
            });
        }
    }
    Ok(())
}

/// Per-degree data for a simple module.
#[derive(Clone, Debug, PartialEq)]
pub struct SchurDegree<S> {
    pub degree: GradeElement,
    pub dim: usize,
    /// Generator `u_d`, rescaled so that `u_d² = Id` whenever possible.
    pub generator: Option<Matrix<S>>,
    /// `c` with `u_d² = c·Id`, after rescaling; `None` if `u_d²` is not scalar.
    pub square: Option<S>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SchurReport<S> {
    pub degrees: Vec<SchurDegree<S>>,
    /// Every nonzero `Hom_d` is one-dimensional.
    pub one_dimensional: bool,
    /// `u_a u_b ∈ span(u_{ab})` for every pair.
    pub products_closed: bool,
}

impl<S: Scalar> SchurReport<S> {
    pub fn dim(&self, d: GradeElement) -> usize {
        self.degrees.iter().find(|x| x.degree == d).map_or(0, |x| x.dim)
    }
}

fn scalar_multiple_of_identity<S: Scalar>(m: &Matrix<S>) -> Option<S> {
    let n = m.rows();
    if n == 0 {
        return Some(S::zero());
    }
    let c = m[(0, 0)].clone();
    if *m == Matrix::identity(n).scale(&c) {
        Some(c)
    } else {
        None
    }
}

pub fn schur_structure<S: Scalar>(r: &Representation<S>) -> Result<SchurReport<S>, RepError> {
    check_simple(r)?;
    let mut degrees = Vec::new();
    for d in r.space.group().elements() {
        let basis = module_endomorphisms(r, d);
        let dim = basis.len();
        let (generator, square) = if dim == 1 {
            let mut u = basis[0].clone();
            let mut sq = scalar_multiple_of_identity(&(&u * &u));
            if let Some(c) = sq.clone() {
                if let Some(root) = c.sqrt_exact().filter(|x| !x.is_zero()) {
                    u = u.scale(&(S::one() / root));
                    sq = Some(S::one());
                }
            }
            (Some(u), sq)
        } else {
            (None, None)
        };
        degrees.push(SchurDegree {
            degree: d,
            dim,
            generator,
            square,
        });
    }
    let one_dimensional = degrees.iter().all(|x| x.dim <= 1);
    let mut products_closed = true;
    for a in &degrees {
        for b in &degrees {
            let (Some(ua), Some(ub)) = (&a.generator, &b.generator) else {
                continue;
            };
            let prod = ua * ub;
            let target = degrees.iter().find(|x| x.degree == a.degree * b.degree).unwrap();
            let ok = match &target.generator {
                None => prod.is_zero(),
                Some(uab) => {
                    let flat = |m: &Matrix<S>| m.row_vectors().concat();
                    Subspace::span(prod.rows() * prod.cols(), &[flat(uab)]).contains(&flat(&prod))
                }
            };
            products_closed &= ok;
        }
    }
    Ok(SchurReport {
        degrees,
        one_dimensional,
        products_closed,
    })
}
