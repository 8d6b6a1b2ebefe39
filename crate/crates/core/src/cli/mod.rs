//! Command line front end: argument handling, dispatch and reports.

pub mod format;

use std::io::Read;

use clap::{Parser, Subcommand, ValueEnum};

use crate::constructions::parabose::{build_parabose, parabose_consistency};
use crate::constructions::sl2::{classify_sl2_case, closed_form_abc, sl2_case_algebra, solve_sl2_equations};
use crate::derivations::{der, der_module};
use crate::enveloping::Enveloping;
use crate::forms::killing_form;
use crate::grading::{enumerate_colors, ColorMap, GradeGroup};
use crate::hopf::{check_hopf_axioms, MAX_HOPF_LENGTH};
use crate::rep::check_representation;
use crate::structure::{center, derived_series, is_nilpotent, is_solvable, lower_central_series};
use crate::{GradedLieAlgebra, Rational};
use format::{parse, AlgebraFile};

pub const MAX_DEGREE_VAR: &str = "KLEIN_LIE_MAX_DEGREE";
pub const DEFAULT_MAX_DEGREE: usize = 5;

#[derive(Parser, Debug)]
#[command(name = "klein-lie", version, about = "Color-graded Lie algebras over the rationals")]
pub struct Cli {
    /// Print a flat `key = value` report.
    #[arg(long, global = true)]
    pub machine: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check grading, graded skew-symmetry and the graded Jacobi identity.
    Validate {
        /// Algebra file, `-` or absent for standard input.
        file: Option<String>,
    },
    /// Center, series, derivations and Killing form.
    Analyze { file: Option<String> },
    /// PBW normal form of an expression in the enveloping algebra.
    Reduce { file: String, expr: String },
    /// Hopf identities on normal words up to a length.
    HopfCheck {
        file: Option<String>,
        #[arg(long, default_value_t = 3)]
        max_length: usize,
    },
    /// Casimir element of the Killing form.
    Casimir { file: Option<String> },
    /// Bicharacters of a grading group and their orbits.
    Colors {
        #[arg(long, value_enum)]
        group: GroupArg,
    },
    /// Pairings `V(n) × V(n) → sl(2)` in degree `r`.
    Sl2case {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_negative_numbers = true)]
        theta_rr: i8,
        /// Print the constructed algebra file instead of the report.
        #[arg(long)]
        emit: bool,
    },
    /// The parabose algebra at small mode counts.
    Parabose {
        #[arg(long)]
        bosons: usize,
        #[arg(long)]
        fermions: usize,
        #[arg(long)]
        emit: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum GroupArg {
    Z2,
    Klein,
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(msg: impl Into<String>) -> Self {
        Outcome {
            code: 2,
            stdout: String::new(),
            stderr: msg.into(),
        }
    }
}

#[derive(Default)]
struct Report {
    text: Vec<String>,
    fields: Vec<(String, String)>,
    failed: bool,
}

impl Report {
    fn line(&mut self, s: impl Into<String>) {
        self.text.push(s.into());
    }

    fn field(&mut self, k: &str, v: impl ToString) {
        self.fields.push((k.to_string(), v.to_string()));
    }

    fn finish(self, machine: bool) -> Outcome {
        let stdout = if machine {
            self.fields.iter().map(|(k, v)| format!("{k} = {v}\n")).collect()
        } else {
            self.text.iter().map(|l| format!("{l}\n")).collect()
        };
        Outcome {
            code: i32::from(self.failed),
            stdout,
            stderr: String::new(),
        }
    }
}

fn max_degree() -> Result<usize, String> {
    match std::env::var(MAX_DEGREE_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| format!("{MAX_DEGREE_VAR} must be a nonnegative integer")),
        Err(_) => Ok(DEFAULT_MAX_DEGREE),
    }
}

fn read_input(file: Option<&str>, stdin: &mut dyn Read) -> Result<String, String> {
    match file {
        None | Some("-") => {
            let mut s = String::new();
            stdin
                .read_to_string(&mut s)
                .map_err(|e| format!("cannot read standard input: {e}"))?;
            Ok(s)
        }
        Some(path) => std::fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}")),
    }
}

enum Loaded {
    Algebra(AlgebraFile, GradedLieAlgebra<Rational>),
    Invalid(String),
}

fn load(file: Option<&str>, stdin: &mut dyn Read) -> Result<Loaded, Outcome> {
    let text = read_input(file, stdin).map_err(Outcome::usage)?;
    let parsed = parse(&text).map_err(|e| Outcome::usage(format!("parse error: {e}")))?;
    Ok(match parsed.to_candidate().validate() {
        Ok(l) => Loaded::Algebra(parsed, l),
        Err(e) => {
            let names: Vec<&str> = parsed.basis.iter().map(|(n, _)| n.as_str()).collect();
            Loaded::Invalid(e.describe(&names))
        }
    })
}

fn dims_text(l: &GradedLieAlgebra<Rational>) -> String {
    let g = l.group();
    g.elements()
        .map(|d| format!("{}:{}", g.name(d), l.graded_dims()[d.0 as usize]))
        .collect::<Vec<_>>()
        .join(" ")
}

fn list<T: ToString>(xs: impl IntoIterator<Item = T>) -> String {
    xs.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// Loads a valid algebra or reports the failure.
macro_rules! valid_or_fail {
    ($file:expr, $stdin:expr, $machine:expr) => {
        match load($file, $stdin) {
            Err(o) => return o,
            Ok(Loaded::Invalid(e)) => {
                let mut r = Report::default();
                r.failed = true;
                r.line(format!("invalid algebra: {e}"));
                r.field("valid", false);
                r.field("error", e);
                return r.finish($machine);
            }
            Ok(Loaded::Algebra(f, l)) => (f, l),
        }
    };
}

fn validate_cmd(file: Option<&str>, stdin: &mut dyn Read, machine: bool) -> Outcome {
    let (f, l) = match load(file, stdin) {
        Err(o) => return o,
        Ok(Loaded::Invalid(e)) => {
            let mut r = Report::default();
            r.failed = true;
            r.line(format!("fail: {e}"));
            r.field("valid", false);
            r.field("error", e);
            return r.finish(machine);
        }
        Ok(Loaded::Algebra(f, l)) => (f, l),
    };
    let mut r = Report::default();
    let triples = l.jacobi_triple_count();
    r.line(format!("dimension {} ({})", l.dim(), dims_text(&l)));
    r.line(format!("Jacobi: {triples} triples checked, pass"));
    r.field("valid", true);
    r.field("dim", l.dim());
    r.field("graded_dims", list(l.graded_dims()));
    r.field("jacobi_triples", triples);
    for m in &f.modules {
        let rep = m.to_representation(&l);
        match check_representation(&rep) {
            Ok(()) => {
                r.line(format!("module {}: representation, pass", m.name));
                r.field(&format!("module.{}.valid", m.name), true);
            }
            Err(e) => {
                r.failed = true;
                r.line(format!("module {}: fail: {e}", m.name));
                r.field(&format!("module.{}.valid", m.name), false);
            }
        }
    }
    r.finish(machine)
}

fn analyze_cmd(file: Option<&str>, stdin: &mut dyn Read, machine: bool) -> Outcome {
    let (f, l) = valid_or_fail!(file, stdin, machine);
    let mut r = Report::default();
    r.line(format!("dimension {} ({})", l.dim(), dims_text(&l)));
    r.field("dim", l.dim());
    r.field("graded_dims", list(l.graded_dims()));
    let z = center(&l);
    r.line(format!("center: dim {}", z.dim()));
    r.field("center_dim", z.dim());
    let ds: Vec<usize> = derived_series(&l).iter().map(|s| s.dim()).collect();
    let lc: Vec<usize> = lower_central_series(&l).iter().map(|s| s.dim()).collect();
    r.line(format!("derived series: {}", list(ds.iter())));
    r.line(format!("lower central series: {}", list(lc.iter())));
    r.field("derived_series", list(ds));
    r.field("lower_central_series", list(lc));
    let (sol, nil) = (is_solvable(&l), is_nilpotent(&l));
    r.line(format!("solvable: {sol}, nilpotent: {nil}"));
    r.field("solvable", sol);
    r.field("nilpotent", nil);
    let d = der(&l);
    r.line(format!("Der: {}, Inn: {}, H1: {}", d.dim(), d.inner_dim(), d.h1_dim()));
    r.field("der_dim", d.dim());
    r.field("inn_dim", d.inner_dim());
    r.field("h1_dim", d.h1_dim());
    let k = killing_form(&l);
    let rank = k.gram.rank();
    r.line("Killing form:");
    let rows: Vec<String> = k.gram.row_vectors().iter().map(|row| list(row.iter())).collect();
    for row in &rows {
        r.line(format!("  [{}]", row.replace(',', ", ")));
    }
    r.line(format!("Killing rank: {rank}"));
    r.field("killing_gram", rows.join(";"));
    r.field("killing_rank", rank);
    for m in &f.modules {
        let rep = m.to_representation(&l);
        let key = format!("module.{}", m.name);
        match check_representation(&rep) {
            Ok(()) => {
                let dm = der_module(&rep);
                r.line(format!(
                    "module {}: Der {}, Inn {}, H1 {}",
                    m.name,
                    dm.dim(),
                    dm.inner_dim(),
                    dm.h1_dim()
                ));
                r.field(&format!("{key}.der_dim"), dm.dim());
                r.field(&format!("{key}.h1_dim"), dm.h1_dim());
            }
            Err(e) => {
                r.failed = true;
                r.line(format!("module {}: fail: {e}", m.name));
                r.field(&format!("{key}.valid"), false);
            }
        }
    }
    r.finish(machine)
}

fn reduce_cmd(file: &str, expr: &str, stdin: &mut dyn Read, machine: bool) -> Outcome {
    let (_, l) = valid_or_fail!(Some(file), stdin, machine);
    let cap = match max_degree() {
        Ok(c) => c,
        Err(e) => return Outcome::usage(e),
    };
    let env = Enveloping::new(l);
    let x = match env.parse(expr) {
        Ok(x) => x,
        Err(e) => return Outcome::usage(format!("cannot parse expression: {e}")),
    };
    if x.max_len() > cap {
        return Outcome::usage(format!(
            "expression has words of length {} above the bound {cap}",
            x.max_len()
        ));
    }
    let nf = env.display(&env.normal_form(&x));
    let mut r = Report::default();
    r.line(nf.clone());
    r.field("normal_form", nf);
    r.finish(machine)
}

fn hopf_cmd(file: Option<&str>, max_length: usize, stdin: &mut dyn Read, machine: bool) -> Outcome {
    let (_, l) = valid_or_fail!(file, stdin, machine);
    let cap = match max_degree() {
        Ok(c) => c.min(MAX_HOPF_LENGTH),
        Err(e) => return Outcome::usage(e),
    };
    if max_length > cap {
        return Outcome::usage(format!("--max-length {max_length} exceeds the bound {cap}"));
    }
    let env = Enveloping::new(l);
    let report = match check_hopf_axioms(&env, max_length) {
        Ok(x) => x,
        Err(e) => return Outcome::usage(e.to_string()),
    };
    let mut r = Report::default();
    r.failed = !report.passed();
    let verdict = if report.passed() { "pass" } else { "fail" };
    r.line(format!(
        "Hopf: {} words up to length {max_length} checked, {verdict}",
        report.words_checked
    ));
    for fail in report.failures.iter().take(10) {
        r.line(format!("  {:?} on {:?}", fail.axiom, fail.word));
    }
    r.field("words_checked", report.words_checked);
    r.field("max_length", max_length);
    r.field("failures", report.failures.len());
    r.field("pass", report.passed());
    r.finish(machine)
}

fn casimir_cmd(file: Option<&str>, stdin: &mut dyn Read, machine: bool) -> Outcome {
    let (_, l) = valid_or_fail!(file, stdin, machine);
    let k = killing_form(&l);
    let env = Enveloping::new(l);
    let mut r = Report::default();
    match env.casimir(&k) {
        Ok(c) => {
            let s = env.display(&c);
            r.line(s.clone());
            r.field("casimir", s);
        }
        Err(e) => {
            r.failed = true;
            r.line(format!("no Casimir element: {e}"));
            r.field("error", e);
        }
    }
    r.finish(machine)
}

fn color_label(c: &ColorMap) -> String {
    c.builtin_name()
        .map_or_else(|| format!("[{}]", list(c.table().iter())), str::to_string)
}

fn colors_cmd(group: GroupArg, machine: bool) -> Outcome {
    let g = match group {
        GroupArg::Z2 => GradeGroup::z2(),
        GroupArg::Klein => GradeGroup::klein(),
    };
    let e = enumerate_colors(g).expect("small groups enumerate");
    let names: Vec<String> = e.representatives().into_iter().map(color_label).collect();
    let thetas: Vec<String> = (1..=4).map(|i| format!("theta{i}")).collect();
    let mut sorted = names.clone();
    sorted.sort();
    let shown = if sorted == thetas {
        "theta1..theta4".to_string()
    } else {
        names.join(", ")
    };
    let mut r = Report::default();
    r.line(format!(
        "{} bicharacters, {} orbit classes ({shown})",
        e.colors.len(),
        e.orbits.len()
    ));
    r.field("bicharacters", e.colors.len());
    r.field("orbits", e.orbits.len());
    r.field("representatives", names.join(","));
    r.finish(machine)
}

fn sl2case_cmd(n: usize, theta_rr: i8, emit: bool, machine: bool) -> Outcome {
    if n == 0 {
        return Outcome::usage("--n must be at least 1");
    }
    if theta_rr != 1 && theta_rr != -1 {
        return Outcome::usage("--theta-rr must be +1 or -1");
    }
    let color = ColorMap::klein(if theta_rr < 0 { 3 } else { 2 });
    let sol = solve_sl2_equations::<Rational>(n, theta_rr);
    let built = sl2_case_algebra::<Rational>(&color, n);
    if emit {
        return match built {
            Ok(b) => Outcome {
                code: 0,
                stdout: AlgebraFile::from_algebra(&b.algebra).print(),
                stderr: String::new(),
            },
            Err(e) => Outcome {
                code: 1,
                stdout: String::new(),
                stderr: format!("no algebra: {e}\n"),
            },
        };
    }
    let mut r = Report::default();
    r.line(format!(
        "n = {n}, theta(r,r) = {theta_rr:+}, color {}",
        color_label(&color)
    ));
    r.line(format!("solution space dimension: {}", sol.dim));
    r.field("n", n);
    r.field("theta_rr", theta_rr);
    r.field("solution_dim", sol.dim);
    if let (Some(a), Some(b), Some(c)) = (sol.a_antidiagonal(), sol.b_antidiagonal(), sol.c_antidiagonal()) {
        r.line(format!("a: {}", list(a.iter())));
        r.line(format!("b: {}", list(b.iter())));
        r.line(format!("c: {}", list(c.iter())));
        r.field("a", list(a.iter()));
        r.field("b", list(b.iter()));
        r.field("c", list(c.iter()));
        let one = Rational::from_integer(1.into());
        let agree = (0..=n).all(|i| {
            let (ca, cb, cc) = closed_form_abc(n, i, &one).expect("index in range");
            ca == a[i] && cb.is_none_or(|v| v == b[i]) && cc.is_none_or(|v| v == c[i - 1])
        });
        r.line(format!("closed forms agree: {agree}"));
        r.field("closed_forms_agree", agree);
    }
    let built = match built {
        Ok(b) => b,
        Err(e) => {
            let msg = match &e {
                crate::constructions::ConstructionError::Lie(le) => {
                    let names: Vec<String> = ["h", "x", "y"]
                        .iter()
                        .map(|s| s.to_string())
                        .chain((0..=n).map(|i| format!("r1_{i}")))
                        .collect();
                    le.describe(&names.iter().map(String::as_str).collect::<Vec<_>>())
                }
                other => other.to_string(),
            };
            r.failed = true;
            r.line(format!("algebra: {msg}"));
            r.field("algebra_valid", false);
            r.field("error", msg);
            return r.finish(machine);
        }
    };
    r.field("algebra_valid", true);
    match classify_sl2_case(&built) {
        Ok(rep) => {
            r.line(format!(
                "algebra dimension {} ({})",
                built.algebra.dim(),
                dims_text(&built.algebra)
            ));
            r.line(format!("case: {:?}", rep.case));
            r.field("dim", built.algebra.dim());
            r.field("case", format!("{:?}", rep.case));
            if let Some(m) = rep.radical_is_modules {
                let d = rep.radical.as_ref().map_or(0, |s| s.dim());
                r.line(format!("radical: dim {d}, equals the module: {m}"));
                r.field("radical_dim", d);
            }
        }
        Err(e) => {
            r.failed = true;
            r.line(format!("classification failed: {e}"));
        }
    }
    r.finish(machine)
}

fn parabose_cmd(p: usize, f: usize, emit: bool, machine: bool) -> Outcome {
    let l = match build_parabose::<Rational>(p, f) {
        Ok(l) => l,
        Err(crate::constructions::ConstructionError::UnsupportedSize) => {
            return Outcome::usage("mode counts must lie in 1..=2");
        }
        Err(e) => {
            let mut r = Report::default();
            r.failed = true;
            r.line(format!("fail: {e}"));
            r.field("error", e);
            return r.finish(machine);
        }
    };
    if emit {
        return Outcome {
            code: 0,
            stdout: AlgebraFile::from_algebra(&l).print(),
            stderr: String::new(),
        };
    }
    let c = parabose_consistency(&l);
    let mut r = Report::default();
    r.failed = !(c.signs_match && c.jacobi_ok);
    r.line(format!("dimension {} ({})", l.dim(), dims_text(&l)));
    r.line(format!("color theta3 signs match: {}", c.signs_match));
    r.line(format!(
        "Jacobi: {} triples checked, {}",
        c.jacobi_triples,
        if c.jacobi_ok { "pass" } else { "fail" }
    ));
    r.line(format!("L_e is a Lie algebra: {}", c.even_part_is_lie));
    r.line(format!("L_e + L_t is a Lie algebra: {}", c.even_plus_t_is_lie));
    match &c.theta2_witness {
        Some(w) => {
            let names: Vec<&str> = (0..l.dim()).map(|i| l.name(i)).collect();
            r.line(format!("under theta2: {}", w.describe(&names)))
        }
        None => r.line("under theta2: valid"),
    }
    r.field("dim", l.dim());
    r.field("graded_dims", list(l.graded_dims()));
    r.field("jacobi_ok", c.jacobi_ok);
    r.field("theta2_fails", c.theta2_witness.is_some());
    r.finish(machine)
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome::usage(text)
            };
        }
    };
    let m = cli.machine;
    match cli.command {
        Command::Validate { file } => validate_cmd(file.as_deref(), stdin, m),
        Command::Analyze { file } => analyze_cmd(file.as_deref(), stdin, m),
        Command::Reduce { file, expr } => reduce_cmd(&file, &expr, stdin, m),
        Command::HopfCheck { file, max_length } => hopf_cmd(file.as_deref(), max_length, stdin, m),
        Command::Casimir { file } => casimir_cmd(file.as_deref(), stdin, m),
        Command::Colors { group } => colors_cmd(group, m),
        Command::Sl2case { n, theta_rr, emit } => sl2case_cmd(n, theta_rr, emit, m),
        Command::Parabose { bosons, fermions, emit } => parabose_cmd(bosons, fermions, emit, m),
    }
}
