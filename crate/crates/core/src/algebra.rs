//! Graded Lie algebras given by structure constants.
//!
//! A candidate algebra ([`AlgebraCandidate`]) holds whatever brackets the
//! caller listed. [`validate`] checks grading closure, graded
//! skew-symmetry and the graded Jacobi identity and, on success, produces a
//! [`GradedLieAlgebra`] whose full bracket table is derived from the listed
//! entries.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::grading::{ColorMap, GradeElement, GradeGroup};
use crate::linalg::{vector, Matrix};
use crate::scalar::Scalar;

/// Sparse linear combination of basis indices.
pub type Terms<S> = Vec<(usize, S)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisElement {
    pub name: String,
    pub degree: GradeElement,
}

impl BasisElement {
    pub fn new(name: impl Into<String>, degree: GradeElement) -> Self {
        BasisElement {
            name: name.into(),
            degree,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LieError<S: Scalar> {
    #[error("[x{i}, x{j}] has a component along x{k} of the wrong degree")]
    GradingViolation { i: usize, j: usize, k: usize },
    #[error("graded skew-symmetry fails for [x{i}, x{j}] along x{k}")]
    SkewViolation { i: usize, j: usize, k: usize },
    #[error("graded Jacobi identity fails on (x{i}, x{j}, x{k}): sum = ({})", join_vector(lhs))]
    JacobiViolation { i: usize, j: usize, k: usize, lhs: Vec<S> },
    #[error("basis index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("degree of basis element {0} is not in the grading group")]
    DegreeNotInGroup(usize),
    #[error("elements belong to different algebras")]
    MixedAlgebras,
    #[error("subspace is not an ideal")]
    NotAnIdeal,
    #[error("subspace is not a graded ideal")]
    NotGradedIdeal,
    #[error("map is not a morphism: fails on basis pair ({i}, {j})")]
    NotAMorphism { i: usize, j: usize },
    #[error("map is not homogeneous of degree e on basis element {0}")]
    NotDegreePreserving(usize),
    #[error("algebra is not trivially graded")]
    NotTriviallyGraded,
    #[error("subspace of degrees is not closed under the bracket")]
    NotClosed,
}

fn join_vector<S: Scalar>(v: &[S]) -> String {
    v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ")
}

impl<S: Scalar> LieError<S> {
    /// The message with basis indices replaced by `names`.
    pub fn describe(&self, names: &[&str]) -> String {
        let n = |i: usize| names.get(i).map_or_else(|| format!("x{i}"), |s| s.to_string());
        match self {
            LieError::GradingViolation { i, j, k } => {
                format!(
                    "[{}, {}] has a component along {} of the wrong degree",
                    n(*i),
                    n(*j),
                    n(*k)
                )
            }
            LieError::SkewViolation { i, j, k } => {
                format!("graded skew-symmetry fails for [{}, {}] along {}", n(*i), n(*j), n(*k))
            }
            LieError::JacobiViolation { i, j, k, lhs } => format!(
                "graded Jacobi identity fails on ({}, {}, {}): sum = ({})",
                n(*i),
                n(*j),
                n(*k),
                join_vector(lhs)
            ),
            other => other.to_string(),
        }
    }
}

/// Unvalidated structure constants.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraCandidate<S> {
    pub color: ColorMap,
    pub basis: Vec<BasisElement>,
    /// `(i, j) -> [x_i, x_j]`. Pairs may be listed in either order or both;
    /// unlisted pairs are derived by graded skew-symmetry or default to zero.
    pub entries: BTreeMap<(usize, usize), Terms<S>>,
}

impl<S: Scalar> AlgebraCandidate<S> {
    pub fn new(color: ColorMap, basis: Vec<BasisElement>) -> Self {
        AlgebraCandidate {
            color,
            basis,
            entries: BTreeMap::new(),
        }
    }

    /// Sets `[x_i, x_j]`, overwriting any earlier value for this ordered pair.
    pub fn set(&mut self, i: usize, j: usize, terms: Terms<S>) -> &mut Self {
        self.entries.insert((i, j), terms);
        self
    }

    pub fn with(mut self, i: usize, j: usize, terms: Terms<S>) -> Self {
        self.set(i, j, terms);
        self
    }

    pub fn validate(&self) -> Result<GradedLieAlgebra<S>, LieError<S>> {
        validate(self)
    }
}

/// A validated `(G, θ)`-graded Lie algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedLieAlgebra<S> {
    color: ColorMap,
    basis: Vec<BasisElement>,
    /// Full table, row-major over `(i, j)`.
    table: Vec<Terms<S>>,
}

fn clean<S: Scalar>(terms: &Terms<S>, n: usize) -> Result<Terms<S>, LieError<S>> {
    let mut dense: BTreeMap<usize, S> = BTreeMap::new();
    for (k, c) in terms {
        if *k >= n {
            return Err(LieError::IndexOutOfRange(*k));
        }
        let e = dense.entry(*k).or_insert_with(S::zero);
        *e = e.clone() + c.clone();
    }
    Ok(dense.into_iter().filter(|(_, c)| !c.is_zero()).collect())
}

/// Validates a candidate and builds the full bracket table.
///
/// Checks run in this order and the first failure is returned: basis degrees
/// and indices, grading closure, graded skew-symmetry (including the forced
/// `[x_i, x_i] = 0` when `θ(d_i, d_i) = 1`), then the graded Jacobi identity
/// on every multiset `i <= j <= k` of basis indices.
pub fn validate<S: Scalar>(candidate: &AlgebraCandidate<S>) -> Result<GradedLieAlgebra<S>, LieError<S>> {
    let n = candidate.basis.len();
    let group = candidate.color.group();
    for (i, b) in candidate.basis.iter().enumerate() {
        if !group.contains(b.degree) {
            return Err(LieError::DegreeNotInGroup(i));
        }
    }
    let deg = |i: usize| candidate.basis[i].degree;
    let theta = |a: GradeElement, b: GradeElement| candidate.color.sign(a, b);

    let mut cleaned: BTreeMap<(usize, usize), Terms<S>> = BTreeMap::new();
    for (&(i, j), terms) in &candidate.entries {
        if i >= n {
            return Err(LieError::IndexOutOfRange(i));
        }
        if j >= n {
            return Err(LieError::IndexOutOfRange(j));
        }
        cleaned.insert((i, j), clean(terms, n)?);
    }

    for (&(i, j), terms) in &cleaned {
        for (k, _) in terms {
            if deg(*k) != deg(i) * deg(j) {
                return Err(LieError::GradingViolation { i, j, k: *k });
            }
        }
    }

    let mut table: Vec<Terms<S>> = vec![Vec::new(); n * n];
    for (&(i, j), terms) in &cleaned {
        if i == j {
            if theta(deg(i), deg(i)) > 0 {
                if let Some((k, _)) = terms.first() {
                    return Err(LieError::SkewViolation { i, j, k: *k });
                }
            }
            table[i * n + i] = terms.clone();
            continue;
        }
        let mirror: Terms<S> = terms
            .iter()
            .map(|(k, c)| (*k, -c.clone().signed(theta(deg(i), deg(j)))))
            .collect();
        if let Some(listed) = cleaned.get(&(j, i)) {
            if i < j {
                let lhs: BTreeMap<usize, S> = listed.iter().cloned().collect();
                let rhs: BTreeMap<usize, S> = mirror.iter().cloned().collect();
                if lhs != rhs {
                    let k = lhs
                        .keys()
                        .chain(rhs.keys())
                        .copied()
                        .filter(|k| lhs.get(k) != rhs.get(k))
                        .min()
                        .expect("maps differ");
                    return Err(LieError::SkewViolation { i, j, k });
                }
            }
        }
        table[i * n + j] = terms.clone();
        table[j * n + i] = mirror;
    }

    let algebra = GradedLieAlgebra {
        color: candidate.color.clone(),
        basis: candidate.basis.clone(),
        table,
    };
    algebra.check_jacobi()?;
    Ok(algebra)
}

impl<S: Scalar> GradedLieAlgebra<S> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn color(&self) -> &ColorMap {
        &self.color
    }

    pub fn group(&self) -> GradeGroup {
        self.color.group()
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    pub fn degree(&self, i: usize) -> GradeElement {
        self.basis[i].degree
    }

    pub fn degrees(&self) -> Vec<GradeElement> {
        self.basis.iter().map(|b| b.degree).collect()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.basis[i].name
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.basis.iter().position(|b| b.name == name)
    }

    /// `θ` evaluated on the degrees of two basis elements.
    pub fn theta(&self, i: usize, j: usize) -> i8 {
        self.color.sign(self.degree(i), self.degree(j))
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &[(usize, S)] {
        &self.table[i * self.dim() + j]
    }

    /// Bilinear extension of the structure constants.
    pub fn bracket(&self, a: &[S], b: &[S]) -> Result<Vec<S>, LieError<S>> {
        if a.len() != self.dim() || b.len() != self.dim() {
            return Err(LieError::MixedAlgebras);
        }
        Ok(self.br(a, b))
    }

    pub(crate) fn br(&self, a: &[S], b: &[S]) -> Vec<S> {
        let n = self.dim();
        let mut out: Vec<S> = vector::zeros(n);
        for (i, ai) in a.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, bj) in b.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let coef = ai.clone() * bj.clone();
                for (k, c) in &self.table[i * n + j] {
                    out[*k] = out[*k].clone() + coef.clone() * c.clone();
                }
            }
        }
        out
    }

    pub fn unit(&self, i: usize) -> Vec<S> {
        vector::unit(self.dim(), i)
    }

    /// The degree of a nonzero homogeneous element; `None` for zero or
    /// inhomogeneous vectors.
    pub fn homogeneous_degree(&self, v: &[S]) -> Option<GradeElement> {
        let mut found = None;
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            match found {
                None => found = Some(self.degree(i)),
                Some(d) if d != self.degree(i) => return None,
                _ => {}
            }
        }
        found
    }

    /// Splits `v` into its homogeneous components (nonzero ones only).
    pub fn components(&self, v: &[S]) -> BTreeMap<GradeElement, Vec<S>> {
        let mut out: BTreeMap<GradeElement, Vec<S>> = BTreeMap::new();
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                out.entry(self.degree(i)).or_insert_with(|| vector::zeros(self.dim()))[i] = c.clone();
            }
        }
        out
    }

    /// Matrix of `ad_v` in the algebra basis (columns are images).
    pub fn ad(&self, v: &[S]) -> Matrix<S> {
        let n = self.dim();
        let cols: Vec<Vec<S>> = (0..n).map(|j| self.br(v, &self.unit(j))).collect();
        Matrix::from_columns(&cols, n)
    }

    pub fn ad_basis(&self, i: usize) -> Matrix<S> {
        self.ad(&self.unit(i))
    }

    /// The canonical upper-triangle listing (`i <= j`) of nonzero brackets.
    pub fn stored_constants(&self) -> BTreeMap<(usize, usize), Terms<S>> {
        let n = self.dim();
        let mut out = BTreeMap::new();
        for i in 0..n {
            for j in i..n {
                let t = &self.table[i * n + j];
                if !t.is_empty() {
                    out.insert((i, j), t.clone());
                }
            }
        }
        out
    }

    pub fn to_candidate(&self) -> AlgebraCandidate<S> {
        AlgebraCandidate {
            color: self.color.clone(),
            basis: self.basis.clone(),
            entries: self.stored_constants(),
        }
    }

    /// Candidate listing every ordered pair, mirrors included.
    pub fn to_full_candidate(&self) -> AlgebraCandidate<S> {
        let n = self.dim();
        let mut entries = BTreeMap::new();
        for i in 0..n {
            for j in 0..n {
                entries.insert((i, j), self.table[i * n + j].clone());
            }
        }
        AlgebraCandidate {
            color: self.color.clone(),
            basis: self.basis.clone(),
            entries,
        }
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().all(Vec::is_empty)
    }

    /// The graded Jacobi sum `θ(c,a)[A,[B,C]] + θ(a,b)[B,[C,A]] + θ(b,c)[C,[A,B]]`
    /// on three basis elements.
    pub fn jacobi_sum(&self, i: usize, j: usize, k: usize) -> Vec<S> {
        let (a, b, c) = (self.unit(i), self.unit(j), self.unit(k));
        let t1 = self.br(&a, &self.br(&b, &c));
        let t2 = self.br(&b, &self.br(&c, &a));
        let t3 = self.br(&c, &self.br(&a, &b));
        let mut sum = vector::scale(&t1, &S::one().signed(self.theta(k, i)));
        vector::axpy(&mut sum, &S::one().signed(self.theta(i, j)), &t2);
        vector::axpy(&mut sum, &S::one().signed(self.theta(j, k)), &t3);
        sum
    }

    fn check_jacobi(&self) -> Result<(), LieError<S>> {
        let n = self.dim();
        for i in 0..n {
            for j in i..n {
                for k in j..n {
                    let lhs = self.jacobi_sum(i, j, k);
                    if !vector::is_zero(&lhs) {
                        return Err(LieError::JacobiViolation { i, j, k, lhs });
                    }
                }
            }
        }
        Ok(())
    }

    /// Number of basis triples the Jacobi check visits, `C(n+2, 3)`.
    pub fn jacobi_triple_count(&self) -> usize {
        let n = self.dim();
        n * (n + 1) * (n + 2) / 6
    }

    /// The algebra with inverted multiplication `(A, B) ↦ [B, A]`.
    pub fn inverted(&self) -> Result<GradedLieAlgebra<S>, LieError<S>> {
        let n = self.dim();
        let mut cand = AlgebraCandidate::new(self.color.clone(), self.basis.clone());
        for i in 0..n {
            for j in i..n {
                let t = self.bracket_basis(j, i).to_vec();
                if !t.is_empty() {
                    cand.set(i, j, t);
                }
            }
        }
        validate(&cand)
    }

    /// Restricts to the basis elements whose degree lies in `degrees`
    /// (which must span a subalgebra), keeping the color.
    pub fn restrict_to_degrees(&self, degrees: &[GradeElement]) -> Result<GradedLieAlgebra<S>, LieError<S>> {
        let keep: Vec<usize> = (0..self.dim()).filter(|&i| degrees.contains(&self.degree(i))).collect();
        let mut new_index = vec![usize::MAX; self.dim()];
        for (pos, &i) in keep.iter().enumerate() {
            new_index[i] = pos;
        }
        let basis = keep.iter().map(|&i| self.basis[i].clone()).collect();
        let mut cand = AlgebraCandidate::new(self.color.clone(), basis);
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate().skip(a) {
                let t = self.bracket_basis(i, j);
                if t.is_empty() {
                    continue;
                }
                let mut mapped = Vec::with_capacity(t.len());
                for (k, c) in t {
                    if new_index[*k] == usize::MAX {
                        return Err(LieError::NotClosed);
                    }
                    mapped.push((new_index[*k], c.clone()));
                }
                cand.set(a, b, mapped);
            }
        }
        validate(&cand)
    }

    /// Same structure constants under a new color, with degrees relabelled by
    /// `relabel`. The result is validated against the new color.
    pub fn regrade(
        &self,
        color: ColorMap,
        relabel: impl Fn(GradeElement) -> GradeElement,
    ) -> Result<GradedLieAlgebra<S>, LieError<S>> {
        let basis = self
            .basis
            .iter()
            .map(|b| BasisElement::new(b.name.clone(), relabel(b.degree)))
            .collect();
        let cand = AlgebraCandidate {
            color,
            basis,
            entries: self.stored_constants(),
        };
        validate(&cand)
    }

    /// The degree-`e` component as an ordinary (trivially graded) Lie algebra.
    pub fn even_part(&self) -> Result<GradedLieAlgebra<S>, LieError<S>> {
        self.restrict_to_degrees(&[GradeElement::IDENTITY])?
            .regrade(ColorMap::trivial(GradeGroup::trivial()), |_| GradeElement::IDENTITY)
    }

    /// The same algebra with basis reordered: new basis element `p` is old
    /// element `perm[p]`.
    pub fn permuted(&self, perm: &[usize]) -> GradedLieAlgebra<S> {
        let n = self.dim();
        assert_eq!(perm.len(), n);
        let mut inv = vec![0; n];
        for (p, &old) in perm.iter().enumerate() {
            inv[old] = p;
        }
        let basis = perm.iter().map(|&old| self.basis[old].clone()).collect();
        let mut table = vec![Vec::new(); n * n];
        for p in 0..n {
            for q in 0..n {
                let mut t: Terms<S> = self
                    .bracket_basis(perm[p], perm[q])
                    .iter()
                    .map(|(k, c)| (inv[*k], c.clone()))
                    .collect();
                t.sort_by_key(|(k, _)| *k);
                table[p * n + q] = t;
            }
        }
        GradedLieAlgebra {
            color: self.color.clone(),
            basis,
            table,
        }
    }

    pub fn is_trivially_graded(&self) -> bool {
        self.basis.iter().all(|b| b.degree.is_identity())
    }

    /// Per-degree dimensions, indexed by group element.
    pub fn graded_dims(&self) -> Vec<usize> {
        let mut dims = vec![0; self.group().order()];
        for b in &self.basis {
            dims[b.degree.0 as usize] += 1;
        }
        dims
    }
}
