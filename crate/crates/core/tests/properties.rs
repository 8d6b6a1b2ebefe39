use std::sync::OnceLock;

use klein_lie::algebra::GradedLieAlgebra;
use klein_lie::catalog;
use klein_lie::cli::format::{parse, AlgebraFile};
use klein_lie::constructions::parabose::build_parabose;
use klein_lie::constructions::sl2::{closed_form_abc, satisfies_equations, solve_sl2_equations};
use klein_lie::derivations::{der, is_derivation};
use klein_lie::enveloping::{EnvElement, Enveloping};
use klein_lie::forms::{killing_form, supertrace_of};
use klein_lie::grading::{enumerate_colors, klein, ColorMap, GradeElement, GradeGroup};
use klein_lie::hopf::{coproduct, counit, tensor_multiply};
use klein_lie::linalg::{vector, Matrix};
use klein_lie::rep::{adjoint, is_homogeneous_of, pl_klein_unit, pl_matrix};
use klein_lie::structure::{ideal_generated, is_ideal, is_nilpotent, is_nilpotent_matrix, is_solvable};
use klein_lie::subspace::Subspace;
use klein_lie::{Rational, Scalar};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Q = Rational;

fn q(v: i64) -> Q {
    <Q as Scalar>::from_i64(v)
}

fn corpus() -> &'static [GradedLieAlgebra<Q>] {
    static CORPUS: OnceLock<Vec<GradedLieAlgebra<Q>>> = OnceLock::new();
    CORPUS.get_or_init(catalog::corpus)
}

fn homogeneous(rng: &mut ChaCha8Rng, l: &GradedLieAlgebra<Q>, d: GradeElement) -> Vec<Q> {
    (0..l.dim())
        .map(|i| {
            if l.degree(i) == d {
                q(rng.gen_range(-3..=3))
            } else {
                q(0)
            }
        })
        .collect()
}

fn random_degree(rng: &mut ChaCha8Rng, l: &GradedLieAlgebra<Q>) -> GradeElement {
    l.degree(rng.gen_range(0..l.dim()))
}

fn scaled(v: &[Q], k: i8) -> Vec<Q> {
    vector::scale(v, &q(i64::from(k)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bracket_is_graded_skew(seed in any::<u64>(), pick in 0usize..13) {
        let l = &corpus()[pick];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (da, db) = (random_degree(&mut rng, l), random_degree(&mut rng, l));
        let (a, b) = (homogeneous(&mut rng, l, da), homogeneous(&mut rng, l, db));
        let ab = l.bracket(&a, &b).unwrap();
        let ba = l.bracket(&b, &a).unwrap();
        prop_assert_eq!(ab, scaled(&ba, -l.color().sign(da, db)));
    }

    #[test]
    fn leibniz_rule(seed in any::<u64>(), pick in 0usize..13) {
        let l = &corpus()[pick];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (da, db, dc) = (random_degree(&mut rng, l), random_degree(&mut rng, l), random_degree(&mut rng, l));
        let (a, b, c) = (homogeneous(&mut rng, l, da), homogeneous(&mut rng, l, db), homogeneous(&mut rng, l, dc));
        let br = |x: &[Q], y: &[Q]| l.bracket(x, y).unwrap();
        let lhs = br(&a, &br(&b, &c));
        let rhs = vector::add(&br(&br(&a, &b), &c), &scaled(&br(&b, &br(&a, &c)), l.color().sign(da, db)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn ideal_components(seed in any::<u64>(), pick in 0usize..13) {
        let l = &corpus()[pick];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = random_degree(&mut rng, l);
        let ideal = ideal_generated(l, &[homogeneous(&mut rng, l, d)]);
        prop_assert!(is_ideal(l, &ideal));
        prop_assert!(ideal.is_graded(&l.degrees()));
        // I_e ideal of L_e and I_e + I_r ideal of L_e + L_r, on Klein members
        if l.group().is_klein() {
            for degrees in [vec![klein::E], vec![klein::E, klein::R]] {
                let keep: Vec<usize> = (0..l.dim()).filter(|&i| degrees.contains(&l.degree(i))).collect();
                let sub = l.restrict_to_degrees(&degrees).unwrap();
                let part: Vec<Vec<Q>> = ideal
                    .basis()
                    .iter()
                    .flat_map(|v| {
                        let comps = l.components(v);
                        degrees.iter().filter_map(move |g| comps.get(g).cloned()).collect::<Vec<_>>()
                    })
                    .map(|v| keep.iter().map(|&i| v[i].clone()).collect())
                    .collect();
                prop_assert!(is_ideal(&sub, &Subspace::span(sub.dim(), &part)));
            }
        }
    }

    #[test]
    fn supertrace_twists_products(seed in any::<u64>(), c in 1usize..=4) {
        let color = ColorMap::klein(c);
        let l = pl_klein_unit::<Q>(color.clone());
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (da, db) = (random_degree(&mut rng, &l), random_degree(&mut rng, &l));
        let a = pl_matrix(4, &homogeneous(&mut rng, &l, da));
        let b = pl_matrix(4, &homogeneous(&mut rng, &l, db));
        let degrees: Vec<GradeElement> = (0..4).map(GradeElement).collect();
        let ab = supertrace_of(&degrees, &color, &(&a * &b)).unwrap();
        let ba = supertrace_of(&degrees, &color, &(&b * &a)).unwrap();
        prop_assert_eq!(ab, ba.signed(color.sign(da, db)));
        // the product lands in the product degree
        prop_assert!(is_homogeneous_of(&(&a * &b), &degrees, &degrees, da * db));
    }

    #[test]
    fn normal_form_is_idempotent_and_filtered(seed in any::<u64>(), pick in 0usize..13) {
        let l = corpus()[pick].clone();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = l.dim();
        let word = |rng: &mut ChaCha8Rng| -> EnvElement<Q> {
            let len = rng.gen_range(0..=3);
            EnvElement::word((0..len).map(|_| rng.gen_range(0..n)).collect())
        };
        let (x, y) = (word(&mut rng), word(&mut rng));
        let env = Enveloping::new(l);
        let xy = env.multiply(&x, &y).unwrap();
        prop_assert_eq!(env.normal_form(&xy), xy.clone());
        prop_assert!(xy.max_len() <= x.max_len() + y.max_len());
        let deg = env.degree_of(&x.concat(&y));
        for w in xy.terms().keys() {
            prop_assert_eq!(Some(env.word_degree(w)), deg);
        }
    }

    #[test]
    fn hopf_maps_are_multiplicative(seed in any::<u64>(), pick in 0usize..4) {
        let l = [catalog::sl2::<Q>(), catalog::heisenberg(), catalog::super_heisenberg(), catalog::osp12()][pick].clone();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = l.dim();
        let word = |rng: &mut ChaCha8Rng| -> EnvElement<Q> {
            let len = rng.gen_range(0..=2);
            EnvElement::word((0..len).map(|_| rng.gen_range(0..n)).collect())
        };
        let (x, y) = (word(&mut rng), word(&mut rng));
        let env = Enveloping::new(l);
        let xy = env.multiply(&x, &y).unwrap();
        let lhs = coproduct(&env, &xy).unwrap();
        let rhs = tensor_multiply(&env, &coproduct(&env, &x).unwrap(), &coproduct(&env, &y).unwrap()).unwrap();
        prop_assert_eq!(lhs.clone(), rhs);
        prop_assert_eq!(counit(&env, &xy), counit(&env, &x) * counit(&env, &y));
        let deg = env.degree_of(&xy);
        for (a, b) in lhs.terms().keys() {
            prop_assert_eq!(Some(env.word_degree(a) * env.word_degree(b)), deg);
        }
    }

    #[test]
    fn derivation_commutators(seed in any::<u64>(), pick in 0usize..8) {
        let l = &corpus()[pick];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let r = adjoint(l);
        let space = der(l);
        let degs: Vec<GradeElement> = space.per_degree.iter().filter(|(_, v)| !v.is_empty()).map(|(d, _)| *d).collect();
        prop_assume!(!degs.is_empty());
        let random_of = |rng: &mut ChaCha8Rng| {
            let d = degs[rng.gen_range(0..degs.len())];
            let mut m = Matrix::zeros(l.dim(), l.dim());
            for b in &space.per_degree[&d] {
                m = &m + &b.scale(&q(rng.gen_range(-2..=2)));
            }
            (d, m)
        };
        let (s, d1) = random_of(&mut rng);
        let (t, d2) = random_of(&mut rng);
        let sign = q(i64::from(l.color().sign(s, t)));
        let c = &(&d1 * &d2) - &(&d2 * &d1).scale(&sign);
        prop_assert!(is_derivation(&r, &c, s * t));
        let a = rng.gen_range(0..l.dim());
        let sign = q(i64::from(l.color().sign(s, l.degree(a))));
        let lhs = &(&d1 * &l.ad_basis(a)) - &(&l.ad_basis(a) * &d1).scale(&sign);
        prop_assert_eq!(lhs, l.ad(&d1.column(a)));
    }

    #[test]
    fn round_trip_of_random_tables(seed in any::<u64>(), pick in 0usize..13) {
        let l = &corpus()[pick];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        // a random basis order keeps the algebra valid and changes the file
        let mut perm: Vec<usize> = (0..l.dim()).collect();
        for i in (1..perm.len()).rev() {
            perm.swap(i, rng.gen_range(0..=i));
        }
        let lp = l.permuted(&perm);
        let text = AlgebraFile::from_algebra(&lp).print();
        let f = parse(&text).unwrap();
        prop_assert_eq!(f.print(), text);
        prop_assert_eq!(f.to_candidate().validate().unwrap(), lp);
    }
}

#[test]
fn colors_are_symmetric_signs() {
    for g in [GradeGroup::z2(), GradeGroup::klein()] {
        for c in enumerate_colors(g).unwrap().colors {
            for a in g.elements() {
                for b in g.elements() {
                    assert_eq!(c.sign(a, b), c.sign(b, a));
                    assert_eq!(c.sign(a, b).abs(), 1);
                }
            }
            if g.is_klein() {
                assert_eq!(
                    c.sign(klein::T, klein::T),
                    c.sign(klein::R, klein::R) * c.sign(klein::S, klein::S)
                );
            }
        }
    }
}

fn to_z2(g: GradeElement) -> GradeElement {
    GradeElement(u8::from(!g.is_identity()))
}

#[test]
fn klein_pairs_with_the_even_part() {
    let trivial = ColorMap::trivial(GradeGroup::trivial());
    let l2 = pl_klein_unit::<Q>(ColorMap::klein(2));
    for x in [klein::R, klein::S, klein::T] {
        let sub = l2.restrict_to_degrees(&[klein::E, x]).unwrap();
        sub.regrade(trivial.clone(), |_| GradeElement::IDENTITY).unwrap();
        assert!(sub.regrade(ColorMap::super_sign(), to_z2).is_err());
    }
    let l3 = pl_klein_unit::<Q>(ColorMap::klein(3));
    for x in [klein::R, klein::S] {
        let sub = l3.restrict_to_degrees(&[klein::E, x]).unwrap();
        sub.regrade(ColorMap::super_sign(), to_z2).unwrap();
    }
    let sub = l3.restrict_to_degrees(&[klein::E, klein::T]).unwrap();
    sub.regrade(trivial, |_| GradeElement::IDENTITY).unwrap();
}

#[test]
fn solvability_is_decided_by_the_even_part() {
    for l in catalog::super_corpus::<Q>() {
        assert_eq!(is_solvable(&l), is_solvable(&l.even_part().unwrap()), "{}", l.name(0));
    }
}

#[test]
fn engel_on_the_corpus() {
    for l in corpus().iter() {
        let all_ad_nilpotent = (0..l.dim()).all(|i| is_nilpotent_matrix(&l.ad_basis(i)));
        assert_eq!(is_nilpotent(l), all_ad_nilpotent, "{}", l.name(0));
    }
}

#[test]
fn nilpotent_algebras_have_a_common_null_vector() {
    let mut seen = 0;
    for l in corpus().iter().filter(|l| l.dim() > 0 && is_nilpotent(l)) {
        let rows: Vec<Vec<Q>> = (0..l.dim()).flat_map(|i| l.ad_basis(i).row_vectors()).collect();
        assert!(!Matrix::from_rows(rows, l.dim()).kernel().is_empty(), "{}", l.name(0));
        seen += 1;
    }
    assert!(seen >= 3);
    // x alone on each V(n)
    for n in 0..5 {
        let r = klein_lie::constructions::sl2::sl2_module::<Q>(n).unwrap();
        assert_eq!(r.images[1].kernel().len(), 1);
    }
}

#[test]
fn killing_color_symmetry_and_support() {
    for l in corpus().iter() {
        let k = killing_form(l);
        for a in 0..l.dim() {
            for b in 0..l.dim() {
                assert_eq!(k.gram[(b, a)], k.gram[(a, b)].clone().signed(l.theta(a, b)));
                if l.degree(a) * l.degree(b) != GradeElement::IDENTITY {
                    assert_eq!(k.gram[(a, b)], q(0));
                }
                for c in 0..l.dim() {
                    let ca = l.bracket(&l.unit(c), &l.unit(a)).unwrap();
                    let cb = l.bracket(&l.unit(c), &l.unit(b)).unwrap();
                    let lhs = k.eval(&ca, &l.unit(b)) + k.eval(&l.unit(a), &cb).signed(l.theta(c, a));
                    assert_eq!(lhs, q(0));
                }
            }
        }
    }
}

#[test]
fn sl2_solutions_satisfy_the_system() {
    for n in 1..=7 {
        for theta in [-1, 1] {
            let s = solve_sl2_equations::<Q>(n, theta);
            assert!(s.dim <= 1);
            if let Some(p) = &s.solution {
                assert!(satisfies_equations(p, theta));
                // with θ(r,r) = -1 a nonzero solution has no zero on its support
                if theta < 0 {
                    let all = [s.a_antidiagonal(), s.b_antidiagonal(), s.c_antidiagonal()];
                    assert!(all.iter().flatten().flatten().all(|v| *v != q(0)), "n = {n}");
                }
            }
        }
    }
    for n in [1usize, 3, 5, 7] {
        let s = solve_sl2_equations::<Q>(n, -1);
        let a = s.a_antidiagonal().unwrap();
        for (i, ai) in a.iter().enumerate() {
            assert_eq!(closed_form_abc(n, i, &q(1)).unwrap().0, *ai);
        }
    }
}

#[test]
fn parabose_component_dimensions() {
    for p in 1..=2 {
        for f in 1..=2 {
            let l = build_parabose::<Q>(p, f).unwrap();
            let dims = l.graded_dims();
            assert_eq!(dims[klein::S.0 as usize], 2 * p);
            assert_eq!(dims[klein::T.0 as usize], 2 * f);
            assert_eq!(dims[klein::R.0 as usize], 4 * p * f);
            assert_eq!(dims[klein::E.0 as usize], p * (2 * p + 1) + f * (2 * f - 1));
            let et = l.restrict_to_degrees(&[klein::E, klein::T]).unwrap();
            et.regrade(ColorMap::trivial(GradeGroup::trivial()), |_| GradeElement::IDENTITY)
                .unwrap();
        }
    }
}
