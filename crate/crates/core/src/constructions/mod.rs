//! Builders for the worked examples: Klein algebras with even part `sl(2)`,
//! the relative parabose set, and generic reassembly from an even part,
//! modules and pairings.

pub mod parabose;
pub mod sl2;

use std::collections::BTreeMap;
use std::ops::Range;

use thiserror::Error;

use crate::algebra::{validate, AlgebraCandidate, BasisElement, GradedLieAlgebra, LieError, Terms};
use crate::grading::{ColorMap, GradeElement};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConstructionError<S: Scalar> {
    #[error("highest weight must be nonnegative, got {0}")]
    NegativeWeight(i64),
    #[error("index {i} out of range for n = {n}")]
    IndexOutOfRange { n: usize, i: usize },
    #[error("relations do not close: {0}")]
    ClosureFailure(String),
    #[error("mode counts must lie in 1..=2")]
    UnsupportedSize,
    #[error("invalid module or pairing data: {0}")]
    BadInput(String),
    #[error(transparent)]
    Lie(#[from] LieError<S>),
}

/// A module over the even part placed in one degree.
#[derive(Clone, Debug, PartialEq)]
pub struct ModuleSpec<S> {
    pub prefix: String,
    pub degree: GradeElement,
    /// One matrix per even basis element, acting on the module basis.
    pub action: Vec<Matrix<S>>,
}

/// `[m_i, n_j] = values[(i, j)]` for module `left` and module `right`,
/// with terms indexed in the assembled basis.
#[derive(Clone, Debug, PartialEq)]
pub struct PairingSpec<S> {
    pub left: usize,
    pub right: usize,
    pub values: BTreeMap<(usize, usize), Terms<S>>,
}

/// An algebra assembled from an even part and modules.
#[derive(Clone, Debug, PartialEq)]
pub struct Assembled<S> {
    pub algebra: GradedLieAlgebra<S>,
    /// Basis range of the even part, then of each module.
    pub even: Range<usize>,
    pub modules: Vec<Range<usize>>,
}

/// Builds the full table from `L_e`, module actions and pairings and
/// validates it. A Jacobi failure here is exactly a failure of invariance
/// or of the cyclic pairing condition.
pub fn reassemble<S: Scalar>(
    even: &GradedLieAlgebra<S>,
    color: &ColorMap,
    modules: &[ModuleSpec<S>],
    pairings: &[PairingSpec<S>],
) -> Result<Assembled<S>, ConstructionError<S>> {
    let ne = even.dim();
    let mut basis: Vec<BasisElement> = even
        .basis()
        .iter()
        .map(|b| BasisElement::new(b.name.clone(), GradeElement::IDENTITY))
        .collect();
    let mut ranges = Vec::new();
    for m in modules {
        if m.action.len() != ne {
            return Err(ConstructionError::BadInput(format!(
                "module {} needs {ne} action matrices",
                m.prefix
            )));
        }
        let dim = m.action[0].rows();
        let start = basis.len();
        for i in 0..dim {
            basis.push(BasisElement::new(format!("{}{}", m.prefix, i), m.degree));
        }
        ranges.push(start..start + dim);
    }
    let mut cand = AlgebraCandidate::new(color.clone(), basis);
    for ((i, j), t) in even.stored_constants() {
        cand.set(i, j, t);
    }
    for (m, range) in modules.iter().zip(&ranges) {
        for (a, act) in m.action.iter().enumerate() {
            for i in 0..range.len() {
                let terms: Terms<S> = (0..range.len())
                    .filter(|&p| !act[(p, i)].is_zero())
                    .map(|p| (range.start + p, act[(p, i)].clone()))
                    .collect();
                if !terms.is_empty() {
                    cand.set(a, range.start + i, terms);
                }
            }
        }
    }
    for p in pairings {
        let (Some(lr), Some(rr)) = (ranges.get(p.left), ranges.get(p.right)) else {
            return Err(ConstructionError::BadInput("pairing refers to a missing module".into()));
        };
        for (&(i, j), t) in &p.values {
            if i >= lr.len() || j >= rr.len() {
                return Err(ConstructionError::BadInput("pairing index out of range".into()));
            }
            if !t.is_empty() {
                cand.set(lr.start + i, rr.start + j, t.clone());
            }
        }
    }
    let algebra = validate(&cand)?;
    Ok(Assembled {
        algebra,
        even: 0..ne,
        modules: ranges,
    })
}
