//! Independent checks: values recomputed here by other means than the
//! library uses.

use klein_lie::catalog;
use klein_lie::constructions::sl2::solve_sl2_equations;
use klein_lie::derivations::der;
use klein_lie::enveloping::{symmetric_count, Enveloping};
use klein_lie::forms::killing_form;
use klein_lie::grading::{enumerate_colors, GradeGroup};
use klein_lie::linalg::Matrix;
use klein_lie::{Rational, Scalar};
use num_traits::Zero;

type Q = Rational;

fn q(v: i64) -> Q {
    <Q as Scalar>::from_i64(v)
}

fn binomial(n: usize, k: usize) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i as i64 + 1))
}

/// Binary form of degree `n`, coefficient `k` on `u^{n-k} v^k`.
type Form = Vec<Q>;

/// `∂^a_u ∂^b_v` of a form of degree `n`.
fn partial(f: &Form, a: usize, b: usize) -> Form {
    let n = f.len() - 1;
    let m = n - a - b;
    (0..=m)
        .map(|k| {
            // the source monomial is u^{m-k+a} v^{k+b}
            let (pu, pv) = (m - k + a, k + b);
            let mut c = f[k + b].clone();
            for t in 0..a {
                c *= q((pu - t) as i64);
            }
            for t in 0..b {
                c *= q((pv - t) as i64);
            }
            c
        })
        .collect()
}

fn multiply(f: &Form, g: &Form) -> Form {
    let mut out = vec![q(0); f.len() + g.len() - 1];
    for (i, a) in f.iter().enumerate() {
        for (j, b) in g.iter().enumerate() {
            out[i + j] = out[i + j].clone() + a.clone() * b.clone();
        }
    }
    out
}

/// The `k`-th transvectant `Σ_j (−1)^j C(k,j) ∂_u^{k−j}∂_v^j f · ∂_u^j ∂_v^{k−j} g`.
fn transvectant(f: &Form, g: &Form, k: usize) -> Form {
    let mut out: Option<Form> = None;
    for j in 0..=k {
        let term = multiply(&partial(f, k - j, j), &partial(g, j, k - j));
        let c = q(if j % 2 == 0 { 1 } else { -1 } * binomial(k, j));
        let term: Form = term.into_iter().map(|x| x * c.clone()).collect();
        out = Some(match out {
            None => term,
            Some(acc) => acc.into_iter().zip(term).map(|(a, b)| a + b).collect(),
        });
    }
    out.expect("k >= 0")
}

/// `e_i = C(n,i) u^{n−i} v^i` realises `V(n)` with `x = u∂_v`, `y = v∂_u`.
fn basis_form(n: usize, i: usize) -> Form {
    let mut f = vec![q(0); n + 1];
    f[i] = q(binomial(n, i));
    f
}

/// `[e_i, e_j]` as `(a, b, c)` for `a h + b x + c y`, using
/// `u² ↔ x`, `uv ↔ −h/2`, `v² ↔ −y`.
fn pairing(n: usize, i: usize, j: usize) -> (Q, Q, Q) {
    let t = transvectant(&basis_form(n, i), &basis_form(n, j), n - 1);
    (-t[1].clone() / q(2), t[0].clone(), -t[2].clone())
}

#[test]
fn transvectant_pairing_matches_the_solver() {
    for n in 1..=7usize {
        // the pairing is symmetric for odd n and skew for even n
        let theta = if n % 2 == 1 { -1 } else { 1 };
        let s = solve_sl2_equations::<Q>(n, theta);
        assert_eq!(s.dim, 1, "n = {n}");
        let p = s.solution.unwrap();
        let norm = pairing(n, 0, n).0;
        assert!(!norm.is_zero());
        for i in 0..=n {
            for j in 0..=n {
                let (a, b, c) = pairing(n, i, j);
                assert_eq!(p.a[(i, j)], a / norm.clone(), "a n={n} ({i},{j})");
                assert_eq!(p.b[(i, j)], b / norm.clone(), "b n={n} ({i},{j})");
                assert_eq!(p.c[(i, j)], c / norm.clone(), "c n={n} ({i},{j})");
            }
        }
        // the other symmetry type does not occur in V(n) ⊗ V(n) → V(2)
        assert_eq!(solve_sl2_equations::<Q>(n, -theta).dim, 0, "n = {n}");
    }
}

#[test]
fn sl2_killing_form_by_traces() {
    let l = catalog::sl2::<Q>();
    let ad = |i: usize| {
        Matrix::from_fn(3, 3, |p, k| {
            l.bracket_basis(i, k)
                .iter()
                .find(|(t, _)| *t == p)
                .map_or(q(0), |(_, c)| c.clone())
        })
    };
    let gram = Matrix::from_fn(3, 3, |i, j| (&ad(i) * &ad(j)).trace());
    assert_eq!(gram, Matrix::from_i64(3, 3, &[8, 0, 0, 0, 0, 4, 0, 4, 0]));
    assert_eq!(killing_form(&l).gram, gram);
}

#[test]
fn sl2_casimir_by_hand() {
    // h²/8 + (xy + yx)/4 with yx = xy − h
    let env = Enveloping::new(catalog::sl2::<Q>());
    let c = env.casimir(&killing_form(env.algebra())).unwrap();
    assert_eq!(env.display(&c), "1/8 h^2 + 1/2 x y - 1/4 h");
}

#[test]
fn pbw_counts_by_generating_function() {
    // coefficient of t^d in (1−t)^{−even} (1+t)^{odd}
    for even in 0..5usize {
        for odd in 0..4usize {
            let mut poly = [0u128; 8];
            poly[0] = 1;
            for _ in 0..even {
                for d in 1..8 {
                    poly[d] += poly[d - 1];
                }
            }
            for _ in 0..odd {
                for d in (1..8).rev() {
                    poly[d] += poly[d - 1];
                }
            }
            for (d, want) in poly.iter().enumerate() {
                assert_eq!(symmetric_count(even, odd, d), *want, "{even} {odd} {d}");
            }
        }
    }
}

#[test]
fn heisenberg_derivations_by_hand() {
    // D fixes span(z); D(x), D(y) arbitrary mod a trace condition: D(z) = (tr on x,y) z
    let h = der(&catalog::heisenberg::<Q>());
    assert_eq!((h.dim(), h.inner_dim(), h.h1_dim()), (6, 2, 4));
    let s = der(&catalog::sl2::<Q>());
    assert_eq!((s.dim(), s.inner_dim(), s.h1_dim()), (3, 3, 0));
}

#[test]
fn klein_color_count_by_brute_force() {
    // symmetric ±1 tables on Z2×Z2 that are multiplicative in each argument
    let mul = |a: usize, b: usize| a ^ b;
    let mut count = 0;
    for bits in 0u32..(1 << 16) {
        let t = |a: usize, b: usize| if bits >> (4 * a + b) & 1 == 1 { -1i8 } else { 1 };
        let ok =
            (0..4).all(|a| (0..4).all(|b| t(a, b) == t(b, a) && (0..4).all(|c| t(a, mul(b, c)) == t(a, b) * t(a, c))));
        if ok {
            count += 1;
        }
    }
    assert_eq!(count, 8);
    assert_eq!(enumerate_colors(GradeGroup::klein()).unwrap().colors.len(), count);
}
