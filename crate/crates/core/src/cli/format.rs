//! The line-oriented algebra file format.
//!
//! ```text
//! group Z2
//! color trivial
//! basis h:0 x:0 y:0
//! bracket h x = 2 x
//! bracket h y = -2 y
//! bracket x y = 1 h
//! ```
//!
//! A color is a built-in name (`trivial`, `super`, `theta1`..`theta4`) or the
//! full sign table, row-major. Unlisted brackets are zero and the mirror of a
//! listed pair follows from graded skew-symmetry. A coefficient of 1 may be
//! omitted. Optional module stanzas give a representation by its action on
//! a graded basis:
//!
//! ```text
//! module V
//! space v0:0 v1:0
//! act h v0 = 1 v0
//! end
//! ```

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::algebra::{AlgebraCandidate, BasisElement, GradedLieAlgebra};
use crate::grading::{validate_color, ColorMap, GradeElement, GradeGroup};
use crate::linalg::Matrix;
use crate::rep::{GradedVectorSpace, Representation};
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}, column {col}: expected {expected}")]
    Syntax { line: usize, col: usize, expected: String },
    #[error("line {line}: unknown name `{name}`")]
    UnknownName { line: usize, name: String },
    #[error("line {line}: bracket of `{left}` and `{right}` is listed twice")]
    DuplicateBracket { line: usize, left: String, right: String },
    #[error("line {line}: {message}")]
    Invalid { line: usize, message: String },
}

pub type Combination = Vec<(Rational, String)>;

#[derive(Clone, Debug, PartialEq)]
pub struct BracketLine {
    pub left: String,
    pub right: String,
    pub terms: Combination,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ActLine {
    pub element: String,
    pub vector: String,
    pub terms: Combination,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ModuleStanza {
    pub name: String,
    pub space: Vec<(String, GradeElement)>,
    pub actions: Vec<ActLine>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraFile {
    pub group: GradeGroup,
    pub color: ColorMap,
    pub basis: Vec<(String, GradeElement)>,
    pub brackets: Vec<BracketLine>,
    pub modules: Vec<ModuleStanza>,
}

#[derive(Clone, Copy)]
struct Tok<'a> {
    col: usize,
    text: &'a str,
}

fn tokens(line: &str) -> Vec<Tok<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (pos, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push(Tok {
                    col: line[..s].chars().count() + 1,
                    text: &line[s..pos],
                });
            }
        } else if start.is_none() {
            start = Some(pos);
        }
    }
    if let Some(s) = start {
        out.push(Tok {
            col: line[..s].chars().count() + 1,
            text: &line[s..],
        });
    }
    out
}

fn is_name(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn parse_rational(s: &str) -> Option<Rational> {
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (num, den) = match body.split_once('/') {
        Some((a, b)) => (a, Some(b)),
        None => (body, None),
    };
    let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
    if !digits(num) || den.is_some_and(|d| !digits(d)) {
        return None;
    }
    let n: num_bigint::BigInt = num.parse().ok()?;
    let d: num_bigint::BigInt = match den {
        Some(d) => d.parse().ok()?,
        None => num_bigint::BigInt::one(),
    };
    if d.is_zero() {
        return None;
    }
    let q = Rational::new(n, d);
    Some(if neg { -q } else { q })
}

struct Lines<'a> {
    lines: Vec<(usize, Vec<Tok<'a>>)>,
    pos: usize,
    last_line: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let mut lines = Vec::new();
        let mut last_line = 1;
        for (i, raw) in text.lines().enumerate() {
            last_line = i + 1;
            let line = raw.split('#').next().unwrap_or("");
            let toks = tokens(line);
            if !toks.is_empty() {
                lines.push((i + 1, toks));
            }
        }
        Lines {
            lines,
            pos: 0,
            last_line,
        }
    }

    fn peek_keyword(&self) -> Option<&str> {
        self.lines.get(self.pos).map(|(_, t)| t[0].text)
    }

    fn next(&mut self) -> Option<(usize, Vec<Tok<'a>>)> {
        let l = self.lines.get(self.pos).cloned();
        self.pos += 1;
        l
    }

    fn expect(&mut self, keyword: &str) -> Result<(usize, Vec<Tok<'a>>), ParseError> {
        match self.next() {
            Some((line, toks)) if toks[0].text == keyword => Ok((line, toks)),
            Some((line, toks)) => Err(syntax(line, toks[0].col, format!("`{keyword}`"))),
            None => Err(syntax(self.last_line, 1, format!("`{keyword}`"))),
        }
    }
}

fn syntax(line: usize, col: usize, expected: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        col,
        expected: expected.into(),
    }
}

fn end_col(toks: &[Tok]) -> usize {
    toks.last().map_or(1, |t| t.col + t.text.chars().count())
}

fn parse_decls(line: usize, toks: &[Tok], group: GradeGroup) -> Result<Vec<(String, GradeElement)>, ParseError> {
    if toks.len() < 2 {
        return Err(syntax(line, end_col(toks), "name:degree"));
    }
    let mut out: Vec<(String, GradeElement)> = Vec::new();
    for t in &toks[1..] {
        let Some((name, deg)) = t.text.split_once(':') else {
            return Err(syntax(line, t.col, "name:degree"));
        };
        if !is_name(name) {
            return Err(syntax(line, t.col, "name"));
        }
        let col = t.col + name.chars().count() + 1;
        let Ok(d) = group.parse_element(deg) else {
            let names: Vec<String> = group.elements().map(|g| group.name(g)).collect();
            return Err(syntax(line, col, format!("degree in {{{}}}", names.join(","))));
        };
        if out.iter().any(|(n, _)| n == name) {
            return Err(ParseError::Invalid {
                line,
                message: format!("`{name}` declared twice"),
            });
        }
        out.push((name.to_string(), d));
    }
    Ok(out)
}

/// `lhs... = term ((+|-) term)*` starting at `toks[from]`.
fn parse_combination(line: usize, toks: &[Tok], from: usize) -> Result<Combination, ParseError> {
    let mut pos = from;
    let mut out = Vec::new();
    let mut negate = false;
    loop {
        let Some(c) = toks.get(pos) else {
            return Err(syntax(line, end_col(toks), "rational coefficient"));
        };
        // a bare name has coefficient 1
        let (mut q, n) = match parse_rational(c.text) {
            Some(q) => match toks.get(pos + 1) {
                Some(n) => {
                    pos += 2;
                    (q, n)
                }
                None => return Err(syntax(line, end_col(toks), "name")),
            },
            None if is_name(c.text) => {
                pos += 1;
                (Rational::one(), c)
            }
            None => return Err(syntax(line, c.col, "rational coefficient or name")),
        };
        if !is_name(n.text) {
            return Err(syntax(line, n.col, "name"));
        }
        if negate {
            q = -q;
        }
        out.push((q, n.text.to_string()));
        match toks.get(pos) {
            None => return Ok(out),
            Some(t) if t.text == "+" => negate = false,
            Some(t) if t.text == "-" => negate = true,
            Some(t) => return Err(syntax(line, t.col, "`+` or end of line")),
        }
        pos += 1;
    }
}

pub fn parse(text: &str) -> Result<AlgebraFile, ParseError> {
    let mut lines = Lines::new(text);
    let (gl, gt) = lines.expect("group")?;
    let group = match gt.get(1).map(|t| t.text) {
        Some("Z2") => GradeGroup::z2(),
        Some("klein") => GradeGroup::klein(),
        _ => return Err(syntax(gl, gt.get(1).map_or(end_col(&gt), |t| t.col), "`Z2` or `klein`")),
    };
    if gt.len() > 2 {
        return Err(syntax(gl, gt[2].col, "end of line"));
    }

    let (cl, ct) = lines.expect("color")?;
    let color = match ct.len() {
        1 => return Err(syntax(cl, end_col(&ct), "color name or sign table")),
        2 => ColorMap::builtin(ct[1].text, group)
            .map_err(|_| syntax(cl, ct[1].col, "trivial, super or theta1..theta4"))?,
        _ => {
            let mut table = Vec::new();
            for t in &ct[1..] {
                match t.text {
                    "1" | "+1" => table.push(1),
                    "-1" => table.push(-1),
                    _ => return Err(syntax(cl, t.col, "`1` or `-1`")),
                }
            }
            validate_color(group, &table).map_err(|e| ParseError::Invalid {
                line: cl,
                message: e.to_string(),
            })?
        }
    };
    if color.group() != group {
        return Err(ParseError::Invalid {
            line: cl,
            message: "color does not live on the declared group".into(),
        });
    }

    let (bl, bt) = lines.expect("basis")?;
    let basis = parse_decls(bl, &bt, group)?;
    let known: BTreeSet<&str> = basis.iter().map(|(n, _)| n.as_str()).collect();

    let mut brackets = Vec::new();
    let mut seen = BTreeSet::new();
    while lines.peek_keyword() == Some("bracket") {
        let (line, toks) = lines.next().expect("peeked");
        for (k, what) in [(1, "name"), (2, "name")] {
            match toks.get(k) {
                Some(t) if is_name(t.text) => {}
                Some(t) => return Err(syntax(line, t.col, what)),
                None => return Err(syntax(line, end_col(&toks), what)),
            }
        }
        match toks.get(3) {
            Some(t) if t.text == "=" => {}
            Some(t) => return Err(syntax(line, t.col, "`=`")),
            None => return Err(syntax(line, end_col(&toks), "`=`")),
        }
        let (left, right) = (toks[1].text.to_string(), toks[2].text.to_string());
        let terms = parse_combination(line, &toks, 4)?;
        for name in [&left, &right].into_iter().chain(terms.iter().map(|(_, n)| n)) {
            if !known.contains(name.as_str()) {
                return Err(ParseError::UnknownName {
                    line,
                    name: name.clone(),
                });
            }
        }
        let key = if left <= right {
            (left.clone(), right.clone())
        } else {
            (right.clone(), left.clone())
        };
        if !seen.insert(key) {
            return Err(ParseError::DuplicateBracket { line, left, right });
        }
        brackets.push(BracketLine { left, right, terms });
    }

    let mut modules = Vec::new();
    while lines.peek_keyword() == Some("module") {
        let (ml, mt) = lines.next().expect("peeked");
        let name = match mt.get(1) {
            Some(t) if is_name(t.text) && mt.len() == 2 => t.text.to_string(),
            Some(t) => return Err(syntax(ml, t.col, "module name")),
            None => return Err(syntax(ml, end_col(&mt), "module name")),
        };
        let (sl, st) = lines.expect("space")?;
        let space = parse_decls(sl, &st, group)?;
        let vectors: BTreeSet<&str> = space.iter().map(|(n, _)| n.as_str()).collect();
        let mut actions = Vec::new();
        let mut seen = BTreeSet::new();
        while lines.peek_keyword() == Some("act") {
            let (line, toks) = lines.next().expect("peeked");
            if toks.len() < 4 || toks[3].text != "=" {
                return Err(syntax(
                    line,
                    toks.get(3).map_or(end_col(&toks), |t| t.col),
                    "`act` element vector `=` terms",
                ));
            }
            let (element, vector) = (toks[1].text.to_string(), toks[2].text.to_string());
            if !known.contains(element.as_str()) {
                return Err(ParseError::UnknownName { line, name: element });
            }
            let terms = parse_combination(line, &toks, 4)?;
            for n in std::iter::once(&vector).chain(terms.iter().map(|(_, n)| n)) {
                if !vectors.contains(n.as_str()) {
                    return Err(ParseError::UnknownName { line, name: n.clone() });
                }
            }
            if !seen.insert((element.clone(), vector.clone())) {
                return Err(ParseError::DuplicateBracket {
                    line,
                    left: element,
                    right: vector,
                });
            }
            actions.push(ActLine { element, vector, terms });
        }
        lines.expect("end")?;
        modules.push(ModuleStanza { name, space, actions });
    }

    if let Some((line, toks)) = lines.next() {
        return Err(syntax(line, toks[0].col, "`bracket`, `module` or end of file"));
    }
    Ok(AlgebraFile {
        group,
        color,
        basis,
        brackets,
        modules,
    })
}

fn write_combination(out: &mut String, terms: &Combination) {
    for (k, (q, name)) in terms.iter().enumerate() {
        if k == 0 {
            let _ = write!(out, "{q} {name}");
        } else if q.is_negative() {
            let _ = write!(out, " - {} {name}", -q.clone());
        } else {
            let _ = write!(out, " + {q} {name}");
        }
    }
}

impl AlgebraFile {
    pub fn print(&self) -> String {
        let mut out = String::new();
        let group = if self.group.is_klein() { "klein" } else { "Z2" };
        let _ = writeln!(out, "group {group}");
        match self.color.builtin_name() {
            Some(n) => {
                let _ = writeln!(out, "color {n}");
            }
            None => {
                let t: Vec<String> = self.color.table().iter().map(|s| s.to_string()).collect();
                let _ = writeln!(out, "color {}", t.join(" "));
            }
        }
        let decls = |d: &[(String, GradeElement)]| {
            d.iter()
                .map(|(n, g)| format!("{n}:{}", self.group.name(*g)))
                .collect::<Vec<_>>()
                .join(" ")
        };
        let _ = writeln!(out, "basis {}", decls(&self.basis));
        for b in &self.brackets {
            let _ = write!(out, "bracket {} {} = ", b.left, b.right);
            write_combination(&mut out, &b.terms);
            out.push('\n');
        }
        for m in &self.modules {
            let _ = writeln!(out, "module {}", m.name);
            let _ = writeln!(out, "space {}", decls(&m.space));
            for a in &m.actions {
                let _ = write!(out, "act {} {} = ", a.element, a.vector);
                write_combination(&mut out, &a.terms);
                out.push('\n');
            }
            out.push_str("end\n");
        }
        out
    }

    fn index_of(&self, name: &str) -> usize {
        self.basis
            .iter()
            .position(|(n, _)| n == name)
            .expect("names are checked while parsing")
    }

    pub fn to_candidate(&self) -> AlgebraCandidate<Rational> {
        let basis = self
            .basis
            .iter()
            .map(|(n, d)| BasisElement::new(n.clone(), *d))
            .collect();
        let mut cand = AlgebraCandidate::new(self.color.clone(), basis);
        for b in &self.brackets {
            let terms = b.terms.iter().map(|(q, n)| (self.index_of(n), q.clone())).collect();
            cand.set(self.index_of(&b.left), self.index_of(&b.right), terms);
        }
        cand
    }

    /// The file for a validated algebra: pairs `i <= j` with nonzero bracket.
    pub fn from_algebra(l: &GradedLieAlgebra<Rational>) -> Self {
        let basis: Vec<(String, GradeElement)> = l.basis().iter().map(|b| (b.name.clone(), b.degree)).collect();
        let mut brackets = Vec::new();
        for i in 0..l.dim() {
            for j in i..l.dim() {
                let t = l.bracket_basis(i, j);
                if !t.is_empty() {
                    brackets.push(BracketLine {
                        left: l.name(i).to_string(),
                        right: l.name(j).to_string(),
                        terms: t.iter().map(|(k, c)| (c.clone(), l.name(*k).to_string())).collect(),
                    });
                }
            }
        }
        AlgebraFile {
            group: l.group(),
            color: l.color().clone(),
            basis,
            brackets,
            modules: Vec::new(),
        }
    }

    pub fn with_module(mut self, name: &str, vectors: &[String], r: &Representation<Rational>) -> Self {
        let space: Vec<(String, GradeElement)> =
            vectors.iter().cloned().zip(r.space.degrees().iter().copied()).collect();
        let mut actions = Vec::new();
        for (a, m) in r.images.iter().enumerate() {
            for q in 0..r.dim() {
                let terms: Combination = (0..r.dim())
                    .filter(|&p| !m[(p, q)].is_zero())
                    .map(|p| (m[(p, q)].clone(), vectors[p].clone()))
                    .collect();
                if !terms.is_empty() {
                    actions.push(ActLine {
                        element: r.algebra.name(a).to_string(),
                        vector: vectors[q].clone(),
                        terms,
                    });
                }
            }
        }
        self.modules.push(ModuleStanza {
            name: name.to_string(),
            space,
            actions,
        });
        self
    }
}

impl ModuleStanza {
    /// The action matrices over `l`, in the order of its basis.
    pub fn to_representation(&self, l: &GradedLieAlgebra<Rational>) -> Representation<Rational> {
        let n = self.space.len();
        let pos: BTreeMap<&str, usize> = self
            .space
            .iter()
            .enumerate()
            .map(|(i, (s, _))| (s.as_str(), i))
            .collect();
        let mut images = vec![Matrix::<Rational>::zeros(n, n); l.dim()];
        for a in &self.actions {
            let e = l.index_of(&a.element).expect("names are checked while parsing");
            let q = pos[a.vector.as_str()];
            for (c, v) in &a.terms {
                let p = pos[v.as_str()];
                images[e][(p, q)] = images[e][(p, q)].clone() + c.clone();
            }
        }
        Representation {
            algebra: l.clone(),
            space: GradedVectorSpace::new(l.group(), self.space.iter().map(|(_, d)| *d).collect()),
            images,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SL2: &str =
        "group Z2\ncolor trivial\nbasis h:0 x:0 y:0\nbracket h x = 2 x\nbracket h y = -2 y\nbracket x y = 1 h\n";

    #[test]
    fn sl2_file() {
        let f = parse(SL2).unwrap();
        assert_eq!(f.basis.len(), 3);
        assert_eq!(f.print(), SL2);
        assert_eq!(f.to_candidate().validate().unwrap(), crate::catalog::sl2());
    }

    #[test]
    fn errors() {
        assert!(matches!(parse(""), Err(ParseError::Syntax { line: 1, col: 1, .. })));
        let bad = SL2.replace("bracket x y = 1 h", "bracket h q = 1 h");
        assert_eq!(
            parse(&bad),
            Err(ParseError::UnknownName {
                line: 6,
                name: "q".into()
            })
        );
        let dup = format!("{SL2}bracket y x = -1 h\n");
        assert!(matches!(parse(&dup), Err(ParseError::DuplicateBracket { line: 7, .. })));
        let err = parse("group Z2\ncolor trivial\nbasis h:0 x:2\n").unwrap_err();
        assert!(matches!(err, ParseError::Syntax { line: 3, col: 13, .. }), "{err:?}");
        let err = parse("group Z2\ncolor trivial\nbasis h:0\nbracket h h = * h\n").unwrap_err();
        assert!(matches!(err, ParseError::Syntax { line: 4, col: 15, .. }), "{err:?}");
    }

    #[test]
    fn comments_fractions_and_tables() {
        let text = "# super Heisenberg\ngroup Z2\ncolor 1 1 1 -1\nbasis z:0 u:1  # one odd\nbracket u u = 2/4 z\n";
        let f = parse(text).unwrap();
        assert_eq!(f.color, ColorMap::super_sign());
        assert_eq!(f.brackets[0].terms[0].0, Rational::new(1.into(), 2.into()));
        assert_eq!(parse(&f.print()).unwrap(), f);
        assert!(parse("group Z2\ncolor 1 1 1\nbasis a:0\n").is_err());
    }

    #[test]
    fn bare_names_have_unit_coefficient() {
        let short = SL2.replace("= 1 h", "= h").replace("= -2 y", "= 0 x - 2 y");
        let f = parse(&short).unwrap();
        assert_eq!(f.to_candidate().validate().unwrap(), crate::catalog::sl2());
    }

    #[test]
    fn module_round_trip() {
        let l = crate::catalog::sl2::<Rational>();
        let r = crate::constructions::sl2::sl2_module::<Rational>(2).unwrap();
        let names: Vec<String> = (0..3).map(|i| format!("v{i}")).collect();
        let f = AlgebraFile::from_algebra(&l).with_module("V", &names, &r);
        let g = parse(&f.print()).unwrap();
        assert_eq!(g, f);
        assert_eq!(g.modules[0].to_representation(&l), r);
    }
}
