//! Coproduct, counit and antipode on `U(L)` and executable Hopf axioms.

use std::collections::BTreeMap;

use crate::enveloping::{EnvElement, EnvError, Enveloping, Word};
use crate::scalar::Scalar;

/// Largest word length accepted by [`check_hopf_axioms`].
pub const MAX_HOPF_LENGTH: usize = 4;

/// An element of `U(L) ⊗ U(L)`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TensorElement<S> {
    terms: BTreeMap<(Word, Word), S>,
}

/// An element of `U(L) ⊗ U(L) ⊗ U(L)`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TripleElement<S> {
    terms: BTreeMap<(Word, Word, Word), S>,
}

impl<S: Scalar> TensorElement<S> {
    pub fn zero() -> Self {
        TensorElement { terms: BTreeMap::new() }
    }

    pub fn pure(a: Word, b: Word, c: S) -> Self {
        let mut t = Self::zero();
        t.add_term(a, b, c);
        t
    }

    pub fn one() -> Self {
        Self::pure(Vec::new(), Vec::new(), S::one())
    }

    pub fn add_term(&mut self, a: Word, b: Word, c: S) {
        if c.is_zero() {
            return;
        }
        let key = (a, b);
        match self.terms.get_mut(&key) {
            Some(v) => {
                *v = v.clone() + c;
                if v.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn terms(&self) -> &BTreeMap<(Word, Word), S> {
        &self.terms
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((a, b), c) in &other.terms {
            out.add_term(a.clone(), b.clone(), c.clone());
        }
        out
    }
}

impl<S: Scalar> TripleElement<S> {
    pub fn zero() -> Self {
        TripleElement { terms: BTreeMap::new() }
    }

    pub fn add_term(&mut self, a: Word, b: Word, c: Word, k: S) {
        if k.is_zero() {
            return;
        }
        let key = (a, b, c);
        match self.terms.get_mut(&key) {
            Some(v) => {
                *v = v.clone() + k;
                if v.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, k);
            }
        }
    }

    pub fn terms(&self) -> &BTreeMap<(Word, Word, Word), S> {
        &self.terms
    }
}

fn check<S: Scalar>(env: &Enveloping<S>, words: impl Iterator<Item = usize>) -> Result<(), EnvError> {
    let n = env.algebra().dim();
    for i in words {
        if i >= n {
            return Err(EnvError::MixedAlgebras);
        }
    }
    Ok(())
}

/// `(x ⊗ y)(x' ⊗ y') = θ(deg y, deg x') xx' ⊗ yy'`, components normal-formed.
pub fn tensor_multiply<S: Scalar>(
    env: &Enveloping<S>,
    u: &TensorElement<S>,
    v: &TensorElement<S>,
) -> Result<TensorElement<S>, EnvError> {
    check(
        env,
        u.terms
            .keys()
            .chain(v.terms.keys())
            .flat_map(|(a, b)| a.iter().chain(b).copied()),
    )?;
    let color = env.algebra().color();
    let mut out = TensorElement::zero();
    for ((x, y), cu) in &u.terms {
        for ((x2, y2), cv) in &v.terms {
            let sign = color.sign(env.word_degree(y), env.word_degree(x2));
            let left = env.normal_form(&EnvElement::word([x.as_slice(), x2].concat()));
            let right = env.normal_form(&EnvElement::word([y.as_slice(), y2].concat()));
            let k = (cu.clone() * cv.clone()).signed(sign);
            for (a, ca) in left.terms() {
                for (b, cb) in right.terms() {
                    out.add_term(a.clone(), b.clone(), k.clone() * ca.clone() * cb.clone());
                }
            }
        }
    }
    Ok(out)
}

fn coproduct_word<S: Scalar>(env: &Enveloping<S>, w: &[usize]) -> TensorElement<S> {
    let mut acc = TensorElement::one();
    for &i in w {
        let mut prim = TensorElement::pure(vec![i], Vec::new(), S::one());
        prim.add_term(Vec::new(), vec![i], S::one());
        acc = tensor_multiply(env, &acc, &prim).expect("letters checked");
    }
    acc
}

/// Primitive on letters, extended multiplicatively.
pub fn coproduct<S: Scalar>(env: &Enveloping<S>, x: &EnvElement<S>) -> Result<TensorElement<S>, EnvError> {
    check(env, x.terms().keys().flatten().copied())?;
    let mut out = TensorElement::zero();
    for (w, c) in x.terms() {
        for ((a, b), k) in coproduct_word(env, w).terms {
            out.add_term(a, b, k * c.clone());
        }
    }
    Ok(out)
}

/// Coefficient of the empty word in the normal form.
pub fn counit<S: Scalar>(env: &Enveloping<S>, x: &EnvElement<S>) -> S {
    env.normal_form(x).coefficient(&[])
}

fn antipode_word<S: Scalar>(env: &Enveloping<S>, w: &[usize]) -> EnvElement<S> {
    match w.len() {
        0 => EnvElement::one(),
        1 => EnvElement::term(w.to_vec(), -S::one()),
        _ => {
            // S(XY) = θ(x,y) S(Y) S(X) with X the first letter
            let sign = env
                .algebra()
                .color()
                .sign(env.word_degree(&w[..1]), env.word_degree(&w[1..]));
            let rest = antipode_word(env, &w[1..]);
            let first = antipode_word(env, &w[..1]);
            env.normal_form(&rest.concat(&first)).scale(&S::one().signed(sign))
        }
    }
}

/// `S(1) = 1`, `S(letter) = −letter`, `S(XY) = θ(x,y) S(Y) S(X)`.
pub fn antipode<S: Scalar>(env: &Enveloping<S>, x: &EnvElement<S>) -> Result<EnvElement<S>, EnvError> {
    check(env, x.terms().keys().flatten().copied())?;
    let mut out = EnvElement::zero();
    for (w, c) in x.terms() {
        out = out.add(&antipode_word(env, w).scale(c));
    }
    Ok(env.normal_form(&out))
}

/// `μ ∘ (f ⊗ g)` for maps given on words.
fn convolve<S: Scalar>(
    env: &Enveloping<S>,
    t: &TensorElement<S>,
    f: impl Fn(&[usize]) -> EnvElement<S>,
    g: impl Fn(&[usize]) -> EnvElement<S>,
) -> EnvElement<S> {
    let mut out = EnvElement::zero();
    for ((a, b), c) in &t.terms {
        out = out.add(&f(a).concat(&g(b)).scale(c));
    }
    env.normal_form(&out)
}

pub fn coassociativity_sides<S: Scalar>(
    env: &Enveloping<S>,
    x: &EnvElement<S>,
) -> Result<(TripleElement<S>, TripleElement<S>), EnvError> {
    let d = coproduct(env, x)?;
    let mut left = TripleElement::zero();
    let mut right = TripleElement::zero();
    for ((a, b), c) in d.terms() {
        for ((a1, a2), k) in coproduct_word(env, a).terms {
            left.add_term(a1, a2, b.clone(), k * c.clone());
        }
        for ((b1, b2), k) in coproduct_word(env, b).terms {
            right.add_term(a.clone(), b1, b2, k * c.clone());
        }
    }
    Ok((left, right))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HopfAxiom {
    Coassociativity,
    LeftCounit,
    RightCounit,
    LeftAntipode,
    RightAntipode,
    AntipodeInvolution,
}

impl std::fmt::Display for HopfAxiom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            HopfAxiom::Coassociativity => "coassociativity",
            HopfAxiom::LeftCounit => "left counit",
            HopfAxiom::RightCounit => "right counit",
            HopfAxiom::LeftAntipode => "left antipode",
            HopfAxiom::RightAntipode => "right antipode",
            HopfAxiom::AntipodeInvolution => "antipode involution",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfFailure {
    pub axiom: HopfAxiom,
    pub word: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfReport {
    pub max_length: usize,
    pub words_checked: usize,
    pub failures: Vec<HopfFailure>,
}

impl HopfReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn triple_display<S: Scalar>(env: &Enveloping<S>, t: &TripleElement<S>) -> String {
    if t.terms.is_empty() {
        return "0".into();
    }
    t.terms
        .iter()
        .map(|((a, b, c), k)| {
            let w = |x: &Word| env.display(&EnvElement::word(x.clone()));
            format!("{k} ({} ⊗ {} ⊗ {})", w(a), w(b), w(c))
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Checks every Hopf identity on all normal words of length `<= max_length`.
pub fn check_hopf_axioms<S: Scalar>(env: &Enveloping<S>, max_length: usize) -> Result<HopfReport, EnvError> {
    if max_length > MAX_HOPF_LENGTH {
        return Err(EnvError::BoundExceeded {
            requested: max_length,
            bound: MAX_HOPF_LENGTH,
        });
    }
    let mut failures = Vec::new();
    let mut words_checked = 0;
    let id = |w: &[usize]| EnvElement::<S>::word(w.to_vec());
    let eps = |w: &[usize]| EnvElement::<S>::one().scale(&counit(env, &EnvElement::word(w.to_vec())));
    let s = |w: &[usize]| antipode_word(env, w);
    for len in 0..=max_length {
        for w in env.normal_words(len) {
            words_checked += 1;
            let x = EnvElement::word(w.clone());
            let name = env.display(&x);
            let mut fail = |axiom, lhs: String, rhs: String| {
                failures.push(HopfFailure {
                    axiom,
                    word: name.clone(),
                    lhs,
                    rhs,
                })
            };
            let (l, r) = coassociativity_sides(env, &x)?;
            if l != r {
                fail(
                    HopfAxiom::Coassociativity,
                    triple_display(env, &l),
                    triple_display(env, &r),
                );
            }
            let d = coproduct(env, &x)?;
            let lc = convolve(env, &d, eps, id);
            if lc != x {
                fail(HopfAxiom::LeftCounit, env.display(&lc), name.clone());
            }
            let rc = convolve(env, &d, id, eps);
            if rc != x {
                fail(HopfAxiom::RightCounit, env.display(&rc), name.clone());
            }
            let unit = EnvElement::one().scale(&counit(env, &x));
            let la = convolve(env, &d, s, id);
            if la != unit {
                fail(HopfAxiom::LeftAntipode, env.display(&la), env.display(&unit));
            }
            let ra = convolve(env, &d, id, s);
            if ra != unit {
                fail(HopfAxiom::RightAntipode, env.display(&ra), env.display(&unit));
            }
            let ss = antipode(env, &antipode(env, &x)?)?;
            if ss != x {
                fail(HopfAxiom::AntipodeInvolution, env.display(&ss), name.clone());
            }
        }
    }
    Ok(HopfReport {
        max_length,
        words_checked,
        failures,
    })
}
