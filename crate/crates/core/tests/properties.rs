use grdiff_core::rational::{factorial, frac, int, pow};
use grdiff_core::{
    affine_shift_closed_form, class_member, construct_exact, construct_exact_symmetric,
    decide_equivalent, decide_equivalent_general, eval_quotient, explicit_class_member, is_scale,
    named_scheme, subgroup_membership, FamilyKind, FunctionOracle, Rational, Scheme,
};
use num_traits::Zero;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

fn runner(cases: u32, seed: u8) -> TestRunner {
    TestRunner::new_with_rng(
        Config {
            cases,
            failure_persistence: None,
            ..Config::default()
        },
        TestRng::from_seed(RngAlgorithm::ChaCha, &[seed; 32]),
    )
}

fn rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=5).prop_map(|(p, q)| frac(p, q))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("non-zero", |r| !r.is_zero())
}

fn distinct_nodes(len: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::btree_set(rational(), len).prop_map(|s| s.into_iter().collect())
}

/// An order-`n` exact difference on random nodes.
fn exact_scheme(max_n: usize) -> impl Strategy<Value = Scheme> {
    (1..=max_n).prop_flat_map(|n| distinct_nodes(n + 1).prop_map(move |b| construct_exact(&b, n).unwrap()))
}

#[test]
fn vandermonde_moments() {
    runner(100, 1)
        .run(&(1usize..=8).prop_flat_map(|n| (Just(n), distinct_nodes(n + 1))), |(n, nodes)| {
            let s = construct_exact(&nodes, n).unwrap();
            for j in 0..n {
                prop_assert!(s.moment(j).is_zero());
            }
            prop_assert_eq!(s.moment(n), factorial(n));
            prop_assert_eq!(s.order().unwrap(), n);
            Ok(())
        })
        .unwrap();
}

#[test]
fn affine_shift_formula() {
    for q in [int(2), int(3), int(-2), frac(1, 2), frac(5, 3)] {
        for n in 1..=6usize {
            let base = named_scheme(&FamilyKind::GaussianAffine { n, q: q.clone() }).unwrap();
            for k in -(n as i64)..=(n as i64) {
                let closed = affine_shift_closed_form(n, k, &q).unwrap();
                assert_eq!(closed, base.scale(&pow(&q, k)).unwrap(), "n={n} k={k} q={q}");
                let nodes: Vec<Rational> = (0..=n as i64).map(|i| pow(&q, k + i)).collect();
                assert_eq!(closed, construct_exact(&nodes, n).unwrap(), "n={n} k={k} q={q}");
            }
        }
    }
}

#[test]
fn scale_law() {
    runner(64, 2)
        .run(&(exact_scheme(5), nonzero_rational(), nonzero_rational()), |(s, r1, r2)| {
            let n = s.order().unwrap();
            let twice = s.scale(&r1).unwrap().scale(&r2).unwrap();
            prop_assert_eq!(&twice, &s.scale(&(&r1 * &r2)).unwrap());
            prop_assert_eq!(twice.moment(n), factorial(n));
            prop_assert_eq!(s.scale(&int(1)).unwrap(), s.clone());
            Ok(())
        })
        .unwrap();
}

#[test]
fn decomposition_parts() {
    runner(64, 3)
        .run(&exact_scheme(6), |s| {
            let n = s.order().unwrap();
            let (plus, minus) = s.decompose(n);
            prop_assert_eq!(&(&plus + &minus), &s);
            prop_assert!(plus.is_symmetric(n));
            prop_assert_eq!(minus.reflect().mul_scalar(&pow(&int(-1), n as i64 + 1)), minus.clone());
            prop_assert_eq!(plus.moment(n), factorial(n));
            prop_assert!(minus.moment(n).is_zero());
            Ok(())
        })
        .unwrap();
}

#[test]
fn json_round_trip() {
    runner(64, 4)
        .run(&exact_scheme(6), |s| {
            prop_assert_eq!(Scheme::from_json(&s.to_json()).unwrap(), s);
            Ok(())
        })
        .unwrap();
}

#[test]
fn class_members_match_explicit_formula() {
    runner(64, 5)
        .run(
            &(exact_scheme(5), nonzero_rational(), nonzero_rational(), nonzero_rational()),
            |(a, r, s, b)| {
                let n = a.order().unwrap();
                let member = class_member(&a, &r, &s, &b).unwrap();
                let explicit = if n % 2 == 1 {
                    explicit_class_member(&a, &pow(&r, -(n as i64)), &b, &r, &s)
                } else {
                    explicit_class_member(&a, &b, &pow(&r, -(n as i64)), &s, &r)
                }
                .unwrap();
                prop_assert_eq!(&member, &explicit);
                let v = decide_equivalent(&a, &member).unwrap();
                prop_assert!(v.is_equivalent());
                prop_assert!(v.witness().unwrap().reverify(&a, &member));
                Ok(())
            },
        )
        .unwrap();
}

#[test]
fn equivalence_is_symmetric_on_random_pairs() {
    runner(64, 6)
        .run(&(exact_scheme(3), exact_scheme(3)), |(a, b)| {
            let ab = decide_equivalent(&a, &b).unwrap();
            let ba = decide_equivalent(&b, &a).unwrap();
            prop_assert_eq!(ab.is_equivalent(), ba.is_equivalent());
            prop_assert_eq!(ab.is_equivalent(), decide_equivalent_general(&a, &b).unwrap().is_equivalent());
            if let Some(w) = ab.witness() {
                prop_assert!(w.reverify(&a, &b));
            }
            Ok(())
        })
        .unwrap();
}

#[test]
fn symmetric_constructor_consistency() {
    runner(48, 7)
        .run(
            &(1usize..=6).prop_flat_map(|n| {
                let m = (n + 1) / 2;
                (Just(n), prop::collection::btree_set(1i64..=9, m), any::<bool>())
            }),
            |(n, pairs, zero)| {
                let pairs: Vec<Rational> = pairs.into_iter().map(int).collect();
                let with_zero = zero && n % 2 == 0;
                if n % 2 == 0 && !with_zero {
                    return Ok(());
                }
                let s = construct_exact_symmetric(&pairs, with_zero, n).unwrap();
                prop_assert!(s.is_symmetric(n));
                prop_assert_eq!(s.order().unwrap(), n);
                prop_assert_eq!(s.moment(n), factorial(n));
                Ok(())
            },
        )
        .unwrap();
}

#[test]
fn polynomial_quotients_are_constant() {
    runner(48, 8)
        .run(
            &(exact_scheme(4), prop::collection::vec(rational(), 1..=5), rational(), nonzero_rational()),
            |(s, coeffs, x, h)| {
                let n = s.order().unwrap();
                if coeffs.len() > n + 1 {
                    return Ok(());
                }
                let want = coeffs.get(n).cloned().unwrap_or_else(Rational::zero) * factorial(n);
                let f = FunctionOracle::Polynomial(coeffs);
                prop_assert_eq!(eval_quotient(&s, &f, &x, &h).unwrap(), want);
                Ok(())
            },
        )
        .unwrap();
}

#[test]
fn scale_consistency_of_quotients() {
    runner(48, 9)
        .run(&(exact_scheme(4), nonzero_rational(), rational(), nonzero_rational()), |(s, r, x, h)| {
            for f in [FunctionOracle::Abs, FunctionOracle::SgnSquare, FunctionOracle::Monomial(5)] {
                let lhs = eval_quotient(&s.scale(&r).unwrap(), &f, &x, &h).unwrap();
                prop_assert_eq!(lhs, eval_quotient(&s, &f, &x, &(&r * &h)).unwrap());
            }
            Ok(())
        })
        .unwrap();
}

#[test]
fn subgroup_closure() {
    let gens = [int(2), int(3), int(5)];
    let element = (-6i64..=6, -6i64..=6, -6i64..=6, any::<bool>(), 1i64..=3).prop_map(|(a, b, c, neg, extra)| {
        let x = pow(&int(2), a) * pow(&int(3), b) * pow(&int(5), c);
        // extra = 2 injects a factor 7, which leaves the group.
        let x = if extra == 2 { x * int(7) } else { x };
        if neg {
            -x
        } else {
            x
        }
    });
    runner(100, 10)
        .run(&(element.clone(), element), |(a, b)| {
            let ma = subgroup_membership(&a, &gens).unwrap();
            let mb = subgroup_membership(&b, &gens).unwrap();
            if ma && mb {
                prop_assert!(subgroup_membership(&(&a * &b), &gens).unwrap());
            }
            if ma {
                prop_assert!(subgroup_membership(&a.recip(), &gens).unwrap());
            }
            prop_assert_eq!(subgroup_membership(&a.recip(), &gens).unwrap(), ma);
            Ok(())
        })
        .unwrap();
}

#[test]
fn symmetric_equivalence_is_scaling() {
    let mut schemes = Vec::new();
    for n in 1..=6usize {
        schemes.push(named_scheme(&FamilyKind::SymmetricRiemann { n }).unwrap());
        if n >= 2 {
            schemes.push(named_scheme(&FamilyKind::MzTildeSymmetric { n }).unwrap());
        }
        for q in [int(2), int(3), frac(1, 2), int(-2)] {
            schemes.push(named_scheme(&FamilyKind::GaussianSymmetric { n, q }).unwrap());
        }
    }
    let scaled: Vec<Scheme> = schemes.iter().map(|s| s.scale(&frac(-3, 2)).unwrap()).collect();
    schemes.extend(scaled);
    for a in &schemes {
        for b in &schemes {
            let eq = decide_equivalent(a, b).unwrap().is_equivalent();
            assert_eq!(eq, is_scale(a, b).unwrap().is_some(), "{a} vs {b}");
        }
    }
}
