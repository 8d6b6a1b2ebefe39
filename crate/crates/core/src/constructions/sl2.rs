//! Klein graded algebras whose even part is `sl(2)`.
//!
//! For an irreducible module `M = V(n)` with basis `e_0..e_n` placed in
//! degree `g`, a pairing `M × M → L_e` is written
//! `[e_i, e_j] = a_ij h + b_ij x + c_ij y`.

use std::collections::BTreeMap;
use std::ops::Range;

use super::{reassemble, ConstructionError, ModuleSpec, PairingSpec};
use crate::algebra::{GradedLieAlgebra, Terms};
use crate::catalog;
use crate::grading::{ColorMap, GradeElement, GradeGroup};
use crate::linalg::Matrix;
use crate::rep::{GradedVectorSpace, Representation};
use crate::scalar::Scalar;
use crate::structure::{radical, subspace_bracket};
use crate::subspace::Subspace;

/// The action matrices `(h, x, y)` on `V(n)`:
/// `h e_i = (n−2i) e_i`, `x e_i = (n−i+1) e_{i−1}`, `y e_i = (i+1) e_{i+1}`.
pub fn sl2_action<S: Scalar>(n: usize) -> [Matrix<S>; 3] {
    let d = n + 1;
    let ni = n as i64;
    let h = Matrix::from_fn(d, d, |p, q| {
        if p == q {
            S::from_i64(ni - 2 * q as i64)
        } else {
            S::zero()
        }
    });
    let x = Matrix::from_fn(d, d, |p, q| {
        if q >= 1 && p == q - 1 {
            S::from_i64(ni - q as i64 + 1)
        } else {
            S::zero()
        }
    });
    let y = Matrix::from_fn(d, d, |p, q| {
        if p == q + 1 {
            S::from_i64(q as i64 + 1)
        } else {
            S::zero()
        }
    });
    [h, x, y]
}

/// `V(n)` as a representation of the trivially graded `sl(2)`.
pub fn sl2_module<S: Scalar>(n: i64) -> Result<Representation<S>, ConstructionError<S>> {
    if n < 0 {
        return Err(ConstructionError::NegativeWeight(n));
    }
    let n = n as usize;
    let sl2 = catalog::sl2::<S>();
    let space = GradedVectorSpace::even(GradeGroup::z2(), n + 1);
    let images = sl2_action::<S>(n).to_vec();
    Ok(Representation {
        algebra: sl2,
        space,
        images,
    })
}

/// Coefficient matrices of a pairing `V(n) × V(n) → sl(2)`.
#[derive(Clone, Debug, PartialEq)]
pub struct PairingMatrices<S> {
    pub a: Matrix<S>,
    pub b: Matrix<S>,
    pub c: Matrix<S>,
}

impl<S: Scalar> PairingMatrices<S> {
    pub fn zero(n: usize) -> Self {
        PairingMatrices {
            a: Matrix::zeros(n + 1, n + 1),
            b: Matrix::zeros(n + 1, n + 1),
            c: Matrix::zeros(n + 1, n + 1),
        }
    }

    pub fn n(&self) -> usize {
        self.a.rows() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Sl2CaseSolution<S> {
    pub n: usize,
    pub theta_rr: i8,
    /// Dimension of the solution space.
    pub dim: usize,
    /// The solution normalized by `a_{0,n} = 1` when the space is a line.
    pub solution: Option<PairingMatrices<S>>,
}

impl<S: Scalar> Sl2CaseSolution<S> {
    /// `a_{i,n−i}` for `i = 0..=n`.
    pub fn a_antidiagonal(&self) -> Option<Vec<S>> {
        let s = self.solution.as_ref()?;
        Some((0..=self.n).map(|i| s.a[(i, self.n - i)].clone()).collect())
    }

    /// `b_{i,n−1−i}` for `i = 0..n`.
    pub fn b_antidiagonal(&self) -> Option<Vec<S>> {
        let s = self.solution.as_ref()?;
        Some((0..self.n).map(|i| s.b[(i, self.n - 1 - i)].clone()).collect())
    }

    /// `c_{i,n+1−i}` for `i = 1..=n`.
    pub fn c_antidiagonal(&self) -> Option<Vec<S>> {
        let s = self.solution.as_ref()?;
        Some((1..=self.n).map(|i| s.c[(i, self.n + 1 - i)].clone()).collect())
    }
}

/// One linear equation as `(coefficient, variable)` pairs.
type Equation = Vec<(i64, Option<usize>)>;

/// The sl(2)-equivariance equations for all `0 <= i, j <= n` (indices
/// outside the range stand for zero) followed by `x_ij + θ(r,r) x_ji = 0` for `x ∈ {a, b, c}`.
/// Variables are `a`, then `b`, then `c`, each row-major.
pub fn sl2_equations(n: usize, theta_rr: i8) -> Vec<Equation> {
    let d = n + 1;
    let var = |m: usize, i: i64, j: i64| -> Option<usize> {
        (i >= 0 && j >= 0 && (i as usize) < d && (j as usize) < d).then(|| m * d * d + i as usize * d + j as usize)
    };
    let (a, b, c) = (0, 1, 2);
    let ni = n as i64;
    let mut eqs = Vec::new();
    for i in 0..=ni {
        for j in 0..=ni {
            eqs.push(vec![(ni - i - j, var(a, i, j))]);
            eqs.push(vec![(ni - i - j - 1, var(b, i, j))]);
            eqs.push(vec![(ni - i - j + 1, var(c, i, j))]);
            eqs.push(vec![
                (ni - i + 1, var(a, i - 1, j)),
                (ni - j + 1, var(a, i, j - 1)),
                (-1, var(c, i, j)),
            ]);
            eqs.push(vec![
                (ni - i + 1, var(b, i - 1, j)),
                (ni - j + 1, var(b, i, j - 1)),
                (2, var(a, i, j)),
            ]);
            eqs.push(vec![(ni - i + 1, var(c, i - 1, j)), (ni - j + 1, var(c, i, j - 1))]);
            eqs.push(vec![
                (i + 1, var(a, i + 1, j)),
                (j + 1, var(a, i, j + 1)),
                (1, var(b, i, j)),
            ]);
            eqs.push(vec![(i + 1, var(b, i + 1, j)), (j + 1, var(b, i, j + 1))]);
            eqs.push(vec![
                (i + 1, var(c, i + 1, j)),
                (j + 1, var(c, i, j + 1)),
                (-2, var(a, i, j)),
            ]);
            for m in [a, b, c] {
                eqs.push(vec![(1, var(m, i, j)), (i64::from(theta_rr), var(m, j, i))]);
            }
        }
    }
    eqs
}

fn system<S: Scalar>(n: usize, theta_rr: i8) -> Matrix<S> {
    let d = n + 1;
    let eqs = sl2_equations(n, theta_rr);
    let mut m: Matrix<S> = Matrix::zeros(eqs.len(), 3 * d * d);
    for (r, eq) in eqs.iter().enumerate() {
        for (coef, v) in eq {
            if let Some(v) = v {
                m[(r, *v)] = m[(r, *v)].clone() + S::from_i64(*coef);
            }
        }
    }
    m
}

fn unpack<S: Scalar>(n: usize, v: &[S]) -> PairingMatrices<S> {
    let d = n + 1;
    let block = |m: usize| Matrix::from_fn(d, d, |i, j| v[m * d * d + i * d + j].clone());
    PairingMatrices {
        a: block(0),
        b: block(1),
        c: block(2),
    }
}

fn pack<S: Scalar>(p: &PairingMatrices<S>) -> Vec<S> {
    [&p.a, &p.b, &p.c]
        .iter()
        .flat_map(|m| m.row_vectors().concat())
        .collect()
}

/// Largest absolute residual is zero: every equation holds for `p`.
pub fn satisfies_equations<S: Scalar>(p: &PairingMatrices<S>, theta_rr: i8) -> bool {
    let n = p.n();
    system::<S>(n, theta_rr).mul_vec(&pack(p)).iter().all(|x| x.is_zero())
}

/// Solves the pairing equations for `V(n)` as one exact kernel problem.
pub fn solve_sl2_equations<S: Scalar>(n: usize, theta_rr: i8) -> Sl2CaseSolution<S> {
    let kernel = system::<S>(n, theta_rr).kernel();
    let dim = kernel.len();
    let solution = (dim == 1).then(|| {
        let mut p = unpack(n, &kernel[0]);
        let pivot = p.a[(0, n)].clone();
        if !pivot.is_zero() {
            let inv = S::one() / pivot;
            p = PairingMatrices {
                a: p.a.scale(&inv),
                b: p.b.scale(&inv),
                c: p.c.scale(&inv),
            };
        }
        p
    });
    Sl2CaseSolution {
        n,
        theta_rr,
        dim,
        solution,
    }
}

fn binomial<S: Scalar>(n: usize, k: usize) -> S {
    (0..k).fold(S::one(), |acc, i| {
        acc * S::from_i64((n - i) as i64) / S::from_i64(i as i64 + 1)
    })
}

fn alt<S: Scalar>(k: i64) -> S {
    if k.rem_euclid(2) == 0 {
        S::one()
    } else {
        -S::one()
    }
}

/// Closed-form values at index `i`:
/// `a_{i,n−i} = (−1)^i C(n,i) (n−2i)/n · a_{0,n}`,
/// `b_{i,n−i−1} = (−1)^{i+1} C(n,i) 2(n−i)/n · a_{0,n}` for `i < n`,
/// `c_{i,n−i+1} = (−1)^{i−1} C(n,i−1) 2(n−i+1)/n · a_{0,n}` for `i >= 1`.
pub fn closed_form_abc<S: Scalar>(
    n: usize,
    i: usize,
    a0n: &S,
) -> Result<(S, Option<S>, Option<S>), ConstructionError<S>> {
    if n == 0 || i > n {
        return Err(ConstructionError::IndexOutOfRange { n, i });
    }
    let (ni, ii) = (n as i64, i as i64);
    let nn = S::from_i64(ni);
    let a = alt::<S>(ii) * binomial::<S>(n, i) * S::from_i64(ni - 2 * ii) / nn.clone() * a0n.clone();
    let b =
        (i < n).then(|| alt::<S>(ii + 1) * binomial::<S>(n, i) * S::from_i64(2 * (ni - ii)) / nn.clone() * a0n.clone());
    let c = (i >= 1).then(|| {
        alt::<S>(ii - 1) * binomial::<S>(n, i - 1) * S::from_i64(2 * (ni - ii + 1)) / nn.clone() * a0n.clone()
    });
    Ok((a, b, c))
}

/// A pairing of module `left` with module `right` (numbered across the
/// `r`, `s`, `t` lists in that order).
#[derive(Clone, Debug, PartialEq)]
pub struct Sl2Pairing<S> {
    pub left: usize,
    pub right: usize,
    pub matrices: PairingMatrices<S>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Sl2Module {
    pub degree: GradeElement,
    pub weight: usize,
    pub range: Range<usize>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Sl2KleinAlgebra<S> {
    pub algebra: GradedLieAlgebra<S>,
    pub modules: Vec<Sl2Module>,
}

/// Assembles `sl(2) ⊕ L_r ⊕ L_s ⊕ L_t` from module weights and pairings
/// into `L_e` and validates it.
pub fn build_sl2_klein_algebra<S: Scalar>(
    color: &ColorMap,
    modules_r: &[usize],
    modules_s: &[usize],
    modules_t: &[usize],
    pairings: &[Sl2Pairing<S>],
) -> Result<Sl2KleinAlgebra<S>, ConstructionError<S>> {
    use crate::grading::klein;
    if !color.group().is_klein() {
        return Err(ConstructionError::BadInput("a Klein color is required".into()));
    }
    let mut specs = Vec::new();
    let mut meta = Vec::new();
    for (deg, list, tag) in [
        (klein::R, modules_r, "r"),
        (klein::S, modules_s, "s"),
        (klein::T, modules_t, "t"),
    ] {
        for (k, &n) in list.iter().enumerate() {
            specs.push(ModuleSpec {
                prefix: format!("{tag}{}_", k + 1),
                degree: deg,
                action: sl2_action::<S>(n).to_vec(),
            });
            meta.push((deg, n));
        }
    }
    let mut pspecs = Vec::new();
    for p in pairings {
        let (Some(&(_, nl)), Some(&(_, nr))) = (meta.get(p.left), meta.get(p.right)) else {
            return Err(ConstructionError::BadInput("pairing refers to a missing module".into()));
        };
        let m = &p.matrices;
        if m.a.rows() != nl + 1 || m.a.cols() != nr + 1 {
            return Err(ConstructionError::BadInput(
                "pairing matrices have the wrong size".into(),
            ));
        }
        let mut values = BTreeMap::new();
        for i in 0..=nl {
            for j in 0..=nr {
                if p.left == p.right && i > j {
                    continue;
                }
                let terms: Terms<S> = [(0, &m.a), (1, &m.b), (2, &m.c)]
                    .iter()
                    .filter(|(_, x)| !x[(i, j)].is_zero())
                    .map(|(k, x)| (*k, x[(i, j)].clone()))
                    .collect();
                if !terms.is_empty() {
                    values.insert((i, j), terms);
                }
            }
        }
        pspecs.push(PairingSpec {
            left: p.left,
            right: p.right,
            values,
        });
    }
    let even = catalog::sl2::<S>();
    let assembled = reassemble(&even, color, &specs, &pspecs)?;
    let modules = meta
        .into_iter()
        .zip(assembled.modules)
        .map(|((degree, weight), range)| Sl2Module { degree, weight, range })
        .collect();
    Ok(Sl2KleinAlgebra {
        algebra: assembled.algebra,
        modules,
    })
}

/// Builds the algebra for a single module `V(n)` in degree `r` with the
/// solved pairing (zero when the solution space is trivial).
pub fn sl2_case_algebra<S: Scalar>(color: &ColorMap, n: usize) -> Result<Sl2KleinAlgebra<S>, ConstructionError<S>> {
    use crate::grading::klein;
    let theta_rr = color.sign(klein::R, klein::R);
    let sol = solve_sl2_equations::<S>(n, theta_rr);
    let matrices = sol.solution.unwrap_or_else(|| PairingMatrices::zero(n));
    build_sl2_klein_algebra(
        color,
        &[n],
        &[],
        &[],
        &[Sl2Pairing {
            left: 0,
            right: 0,
            matrices,
        }],
    )
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Sl2Case {
    /// `θ(r,r) = −1`, a single module with `[M,M] = L_e`.
    SuperSingleModule,
    /// `θ(r,r) = −1`, all brackets between modules vanish.
    SuperNullPairings,
    /// `θ(r,r) = +1`: `L_e ⊕ L_r` is a Lie algebra.
    Lie,
    /// None of the above.
    Unclassified,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ModuleReport {
    pub degree: GradeElement,
    pub weight: usize,
    pub dim: usize,
    pub theta: i8,
    /// Dimension of `[M, M]`.
    pub self_bracket_dim: usize,
    /// `[M,M] ≠ 0` forces odd dimension when `θ = +1`, even when `θ = −1`.
    pub parity_consistent: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Sl2CaseReport<S> {
    pub modules: Vec<ModuleReport>,
    /// Pairs of distinct modules in one degree with `[M_k, M_l] ≠ 0`.
    pub nonzero_cross_brackets: Vec<(usize, usize)>,
    /// `[M_k, M_k] = L_e` implies `M_k` is the only module of its degree.
    pub full_pairing_is_alone: bool,
    pub case: Sl2Case,
    /// Radical of `L_e ⊕ L_r` when it is a Lie algebra, in its own basis.
    pub radical: Option<Subspace<S>>,
    /// The radical equals the span of the `L_r` modules.
    pub radical_is_modules: Option<bool>,
}

pub fn classify_sl2_case<S: Scalar>(built: &Sl2KleinAlgebra<S>) -> Result<Sl2CaseReport<S>, ConstructionError<S>> {
    use crate::grading::klein;
    let l = &built.algebra;
    let n = l.dim();
    let span_of = |r: &Range<usize>| Subspace::span(n, &r.clone().map(|i| l.unit(i)).collect::<Vec<_>>());
    let even = Subspace::span(n, &(0..3).map(|i| l.unit(i)).collect::<Vec<_>>());
    let mut modules = Vec::new();
    let mut full = Vec::new();
    for m in &built.modules {
        let s = span_of(&m.range);
        let br = subspace_bracket(l, &s, &s);
        let theta = l.color().sign(m.degree, m.degree);
        let dim = m.range.len();
        let parity_consistent = br.is_zero() || (theta > 0) == (dim % 2 == 1);
        full.push(br == even);
        modules.push(ModuleReport {
            degree: m.degree,
            weight: m.weight,
            dim,
            theta,
            self_bracket_dim: br.dim(),
            parity_consistent,
        });
    }
    let mut nonzero_cross_brackets = Vec::new();
    for k in 0..built.modules.len() {
        for q in k + 1..built.modules.len() {
            if built.modules[k].degree != built.modules[q].degree {
                continue;
            }
            let br = subspace_bracket(l, &span_of(&built.modules[k].range), &span_of(&built.modules[q].range));
            if !br.is_zero() {
                nonzero_cross_brackets.push((k, q));
            }
        }
    }
    let full_pairing_is_alone = built
        .modules
        .iter()
        .enumerate()
        .all(|(k, m)| !full[k] || built.modules.iter().filter(|x| x.degree == m.degree).count() == 1);
    let r_modules: Vec<usize> = (0..built.modules.len())
        .filter(|&k| built.modules[k].degree == klein::R)
        .collect();
    let theta_rr = l.color().sign(klein::R, klein::R);
    let case = if theta_rr > 0 {
        Sl2Case::Lie
    } else if r_modules.len() == 1 && full[r_modules[0]] {
        Sl2Case::SuperSingleModule
    } else if r_modules.iter().all(|&k| modules[k].self_bracket_dim == 0) && nonzero_cross_brackets.is_empty() {
        Sl2Case::SuperNullPairings
    } else {
        Sl2Case::Unclassified
    };
    let (radical_sub, radical_is_modules) = if theta_rr > 0 {
        let er = l.restrict_to_degrees(&[klein::E, klein::R])?;
        let trivial = er.regrade(ColorMap::trivial(GradeGroup::trivial()), |_| GradeElement::IDENTITY)?;
        let rad = radical(&trivial)?;
        let m = trivial.dim();
        let w = Subspace::span(m, &(3..m).map(|i| trivial.unit(i)).collect::<Vec<_>>());
        let same = rad == w;
        (Some(rad), Some(same))
    } else {
        (None, None)
    };
    Ok(Sl2CaseReport {
        modules,
        nonzero_cross_brackets,
        full_pairing_is_alone,
        case,
        radical: radical_sub,
        radical_is_modules,
    })
}
