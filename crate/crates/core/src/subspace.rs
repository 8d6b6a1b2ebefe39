//! Subspaces of a coordinate space, canonicalized by reduced row-echelon form.

use crate::grading::GradeElement;
use crate::linalg::{vector, Matrix};
use crate::scalar::Scalar;

/// A subspace of `S^n`, stored as the nonzero rows of its RREF.
#[derive(Clone, Debug, PartialEq)]
pub struct Subspace<S> {
    ambient: usize,
    rows: Matrix<S>,
    pivots: Vec<usize>,
}

impl<S: Scalar> Subspace<S> {
    pub fn span(ambient: usize, vectors: &[Vec<S>]) -> Self {
        let m = Matrix::from_rows(vectors.to_vec(), ambient);
        let (rows, pivots) = m.rref();
        Subspace { ambient, rows, pivots }
    }

    pub fn zero(ambient: usize) -> Self {
        Self::span(ambient, &[])
    }

    pub fn full(ambient: usize) -> Self {
        let rows = Matrix::identity(ambient);
        Subspace {
            ambient,
            rows,
            pivots: (0..ambient).collect(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// The canonical basis (RREF rows).
    pub fn basis(&self) -> Vec<Vec<S>> {
        self.rows.row_vectors()
    }

    /// Remainder of `v` after eliminating every pivot coordinate.
    pub fn reduce(&self, v: &[S]) -> Vec<S> {
        let mut r = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            if r[p].is_zero() {
                continue;
            }
            let c = r[p].clone();
            vector::axpy(&mut r, &-c, self.rows.row(i));
        }
        r
    }

    pub fn contains(&self, v: &[S]) -> bool {
        vector::is_zero(&self.reduce(v))
    }

    pub fn contains_subspace(&self, other: &Subspace<S>) -> bool {
        other.basis().iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace<S>) -> Subspace<S> {
        let mut vs = self.basis();
        vs.extend(other.basis());
        Self::span(self.ambient, &vs)
    }

    pub fn intersection(&self, other: &Subspace<S>) -> Subspace<S> {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.ambient);
        }
        // x ∈ other iff every annihilator vector of `other` kills x
        let ann = other.rows.kernel();
        if ann.is_empty() {
            return self.clone();
        }
        let mine = self.basis();
        let constraints = Matrix::from_fn(ann.len(), mine.len(), |r, c| vector::dot(&ann[r], &mine[c]));
        let combos = constraints.kernel();
        let vs: Vec<Vec<S>> = combos
            .iter()
            .map(|coef| {
                let mut v = vector::zeros(self.ambient);
                for (c, u) in coef.iter().zip(&mine) {
                    vector::axpy(&mut v, c, u);
                }
                v
            })
            .collect();
        Self::span(self.ambient, &vs)
    }

    /// True when the subspace contains the homogeneous components of all its
    /// elements, for coordinates graded by `degrees`.
    pub fn is_graded(&self, degrees: &[GradeElement]) -> bool {
        self.basis().iter().all(|v| {
            let mut seen: Vec<GradeElement> = v
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, _)| degrees[i])
                .collect();
            seen.sort();
            seen.dedup();
            seen.iter().all(|&d| {
                let comp: Vec<S> = v
                    .iter()
                    .enumerate()
                    .map(|(i, c)| if degrees[i] == d { c.clone() } else { S::zero() })
                    .collect();
                self.contains(&comp)
            })
        })
    }

    /// Coordinates not used as pivots; these index a complement.
    pub fn non_pivots(&self) -> Vec<usize> {
        (0..self.ambient).filter(|c| !self.pivots.contains(c)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| Rational::from_i64(x)).collect()
    }

    #[test]
    fn sum_and_intersection() {
        let a = Subspace::span(3, &[v(&[1, 0, 0]), v(&[0, 1, 0])]);
        let b = Subspace::span(3, &[v(&[0, 1, 0]), v(&[0, 0, 1])]);
        assert_eq!(a.sum(&b), Subspace::full(3));
        assert_eq!(a.intersection(&b), Subspace::span(3, &[v(&[0, 1, 0])]));
        assert_eq!(a.intersection(&a), a);
        assert_eq!(a.sum(&Subspace::zero(3)), a);
    }

    #[test]
    fn canonical_form_is_unique() {
        let a = Subspace::span(3, &[v(&[1, 1, 0]), v(&[1, -1, 0])]);
        let b = Subspace::span(3, &[v(&[2, 0, 0]), v(&[0, 3, 0])]);
        assert_eq!(a, b);
        assert_eq!(a.non_pivots(), vec![2]);
    }

    #[test]
    fn graded_flag() {
        let d = [GradeElement(0), GradeElement(1)];
        assert!(!Subspace::span(2, &[v(&[1, 1])]).is_graded(&d));
        assert!(Subspace::span(2, &[v(&[1, 0])]).is_graded(&d));
    }
}
