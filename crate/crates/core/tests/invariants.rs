use grafcl::oracle;
use grafcl::products::{graf_forward_formula, graf_reversed_formula};
use grafcl::rational::{int, ratio};
use grafcl::structure::{self, Sign, Truncation};
use grafcl::{contracted_wedge, graf, triangle, truncated_graf, Blade, Form, Rational, Signature};
use proptest::prelude::*;

fn sig_upto(max_n: u32) -> impl Strategy<Value = Signature> {
    (1..=max_n).prop_flat_map(|n| (0..=n).prop_map(move |p| Signature::new(p, n - p).unwrap()))
}

fn form_in(sig: Signature, keep: fn(Signature, Blade) -> bool) -> impl Strategy<Value = Form> {
    let top = 1u32 << sig.dim();
    prop::collection::vec((0..top, -9i64..=9, 1i64..=4), 0..=4).prop_map(move |terms| {
        Form::from_terms(
            sig,
            terms
                .into_iter()
                .map(|(b, n, d)| (Blade::from_bits(b), ratio(n, d)))
                .filter(|(b, _)| keep(sig, *b)),
        )
        .unwrap()
    })
}

fn any_blade(_: Signature, _: Blade) -> bool {
    true
}

fn lower(sig: Signature, b: Blade) -> bool {
    b.grade() <= sig.half()
}

fn forms<const K: usize>(max_n: u32) -> impl Strategy<Value = (Signature, Vec<Form>)> {
    sig_upto(max_n).prop_flat_map(|s| (Just(s), prop::collection::vec(form_in(s, any_blade), K)))
}

fn regime_forms<const K: usize>() -> impl Strategy<Value = (Signature, Vec<Form>, Vec<Form>)> {
    let sigs: Vec<Signature> = [(1, 0), (2, 1), (0, 3), (3, 2), (1, 4), (5, 0)]
        .into_iter()
        .map(|(p, q)| Signature::new(p, q).unwrap())
        .collect();
    prop::sample::select(sigs).prop_flat_map(|s| {
        (
            Just(s),
            prop::collection::vec(form_in(s, any_blade), K),
            prop::collection::vec(form_in(s, lower), K),
        )
    })
}

fn sig(p: u32, q: u32) -> Signature {
    Signature::new(p, q).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn canonical_is_idempotent((_, f) in forms::<1>(6)) {
        prop_assert_eq!(f[0].canonical(), f[0].clone());
        prop_assert_eq!(f[0].canonical().canonical(), f[0].canonical());
    }

    #[test]
    fn wedge_is_associative((_, f) in forms::<3>(6)) {
        let l = f[0].wedge(&f[1]).unwrap().wedge(&f[2]).unwrap();
        let r = f[0].wedge(&f[1].wedge(&f[2]).unwrap()).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn graded_leibniz_rule((s, f) in forms::<2>(6), i in 1u32..=6) {
        let i = (i - 1) % s.dim() + 1;
        let (a, b) = (&f[0], &f[1]);
        let lhs = a.wedge(b).unwrap().contract(i).unwrap();
        let rhs = &a.contract(i).unwrap().wedge(b).unwrap()
            + &a.involution().wedge(&b.contract(i).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn graf_is_associative_and_unital((s, f) in forms::<3>(6)) {
        let one = Form::one(s);
        prop_assert_eq!(graf(&one, &f[0]).unwrap(), f[0].clone());
        prop_assert_eq!(graf(&f[0], &one).unwrap(), f[0].clone());
        let l = graf(&graf(&f[0], &f[1]).unwrap(), &f[2]).unwrap();
        let r = graf(&f[0], &graf(&f[1], &f[2]).unwrap()).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn graf_matches_oracle_on_forms((_, f) in forms::<2>(6)) {
        prop_assert_eq!(graf(&f[0], &f[1]).unwrap(), oracle::oracle_clifford(&f[0], &f[1]).unwrap());
    }

    #[test]
    fn clifford_relation(s in sig_upto(6), c in prop::collection::vec(-9i64..=9, 6)) {
        let x = Form::from_terms(
            s,
            (1..=s.dim()).map(|i| (Blade::vector(i), int(c[i as usize - 1]))),
        ).unwrap();
        let q: i64 = (1..=s.dim())
            .map(|i| c[i as usize - 1].pow(2) * i64::from(s.metric(i)))
            .sum();
        prop_assert_eq!(graf(&x, &x).unwrap(), Form::scalar(s, int(q)));
    }

    #[test]
    fn contracted_wedge_grade_law((s, f) in forms::<2>(6), ga in 0u32..=6, gb in 0u32..=6, l in 0u32..=6) {
        let (r, t) = (ga.min(s.dim()), gb.min(s.dim()));
        let a = f[0].grade_part(r).unwrap();
        let b = f[1].grade_part(t).unwrap();
        let out = contracted_wedge(l, &a, &b).unwrap();
        prop_assert!(out.is_zero() || Some(out.homogeneous_grade().unwrap()) == (r + t).checked_sub(2 * l));
    }

    #[test]
    fn hodge_square_and_two_paths((s, f) in forms::<1>(6)) {
        let star = structure::hodge(&f[0]);
        let sign = int(s.class().v_square_sign.into());
        prop_assert_eq!(structure::hodge(&star), f[0].scale(&sign));
        prop_assert_eq!(structure::hodge_via_contraction(&f[0]), star);
    }

    #[test]
    fn projector_algebra((s, f) in forms::<1>(6)) {
        let f = &f[0];
        let half: Rational = ratio(1, 2);
        let p = structure::project_pm(Sign::Plus, f);
        let m = structure::project_pm(Sign::Minus, f);
        prop_assert_eq!(&p + &m, f.clone());
        let pp = structure::project_pm(Sign::Plus, &p);
        let pm = structure::project_pm(Sign::Plus, &m);
        if s.class().splitting_exists {
            prop_assert_eq!(pp, p);
            prop_assert!(pm.is_zero());
        } else {
            // vol <> vol = -1: the projectors square to half the Hodge operator
            prop_assert_eq!(pp, structure::hodge(f).scale(&half));
            prop_assert_eq!(pm, f.scale(&half));
        }
    }

    #[test]
    fn truncation_closure((s, f) in forms::<2>(6)) {
        for sign in [Sign::Plus, Sign::Minus] {
            let t = truncated_graf(sign, &f[0], &f[1]).unwrap();
            prop_assert!(t.terms().all(|(b, _)| b.grade() <= s.half()));
        }
    }

    #[test]
    fn truncated_algebra_in_regime((s, f, l) in regime_forms::<2>()) {
        let two = int(2);
        let one = Form::one(s);
        let ab = graf(&f[0], &f[1]).unwrap();
        for sign in [Sign::Plus, Sign::Minus] {
            let proj = |x: &Form| structure::project_pm(sign, x);
            prop_assert_eq!(proj(&ab), graf(&proj(&f[0]), &proj(&f[1])).unwrap());
            let refined = structure::truncate(Truncation::Lower, &proj(&ab)).scale(&two);
            prop_assert_eq!(truncated_graf(sign, &f[0], &f[1]).unwrap(), refined);
            prop_assert_eq!(truncated_graf(sign, &l[0], &one).unwrap(), l[0].clone());
            prop_assert_eq!(truncated_graf(sign, &one, &l[0]).unwrap(), l[0].clone());
            let up = structure::iso_to_gamma_pm(sign, &l[0]).unwrap();
            prop_assert_eq!(structure::iso_to_gamma_l(sign, &up).unwrap(), l[0].clone());
            let t = truncated_graf(sign, &l[0], &l[1]).unwrap();
            prop_assert_eq!(proj(&t), graf(&proj(&l[0]), &proj(&l[1])).unwrap());
            prop_assert!(structure::truncate(Truncation::Lower, &structure::hodge(&l[0])).is_zero());
        }
    }

    #[test]
    fn odd_volume_is_central((s, f) in forms::<1>(7)) {
        prop_assume!(s.dim() % 2 == 1);
        prop_assert!(structure::centrality_check(&f[0]));
    }
}

#[test]
fn wedge_graded_anticommutativity() {
    for n in 1..=6 {
        let s = sig(n, 0);
        for a in Blade::basis(n) {
            for b in Blade::basis(n) {
                let (fa, fb) = (Form::blade(s, a), Form::blade(s, b));
                let sign = if a.grade() * b.grade() % 2 == 0 {
                    1
                } else {
                    -1
                };
                assert_eq!(
                    fa.wedge(&fb).unwrap(),
                    fb.wedge(&fa).unwrap().scale(&int(sign))
                );
            }
        }
    }
}

#[test]
fn involution_and_reversion_on_wedge() {
    for n in 1..=5 {
        let s = sig(n / 2, n - n / 2);
        for a in Blade::basis(n) {
            for b in Blade::basis(n) {
                let (fa, fb) = (Form::blade(s, a), Form::blade(s, b));
                let ab = fa.wedge(&fb).unwrap();
                assert_eq!(
                    ab.involution(),
                    fa.involution().wedge(&fb.involution()).unwrap()
                );
                assert_eq!(
                    ab.reversion(),
                    fb.reversion().wedge(&fa.reversion()).unwrap()
                );
            }
        }
    }
}

#[test]
fn graf_formulas_agree_at_equal_grades() {
    for s in Signature::all_up_to(5) {
        let n = s.dim();
        for a in Blade::basis(n) {
            for b in Blade::basis(n)
                .into_iter()
                .filter(|b| b.grade() == a.grade())
            {
                let (fa, fb) = (Form::blade(s, a), Form::blade(s, b));
                assert_eq!(
                    graf_forward_formula(&fa, &fb).unwrap(),
                    graf_reversed_formula(&fb, &fa).unwrap(),
                    "{s} {} {}",
                    a.render(n),
                    b.render(n)
                );
            }
        }
    }
}

#[test]
fn triangle_on_one_forms() {
    for s in Signature::all_up_to(6) {
        for i in 1..=s.dim() {
            for j in 1..=s.dim() {
                let (x, y) = (Form::vector(s, i).unwrap(), Form::vector(s, j).unwrap());
                assert_eq!(triangle(&x, &y).unwrap(), x.wedge(&y).unwrap());
            }
        }
    }
}

#[test]
fn truncated_unit_exhaustive_in_nine_dimensions() {
    let s = sig(9, 0);
    let one = Form::one(s);
    for b in Blade::basis(9).into_iter().filter(|b| b.grade() <= 4) {
        let f = Form::blade(s, b);
        for sign in [Sign::Plus, Sign::Minus] {
            assert_eq!(truncated_graf(sign, &f, &one).unwrap(), f);
            assert_eq!(truncated_graf(sign, &one, &f).unwrap(), f);
        }
    }
}

#[test]
fn even_dimension_projectors_are_not_endomorphisms() {
    let even: Vec<_> = Signature::all_up_to(6)
        .into_iter()
        .filter(|s| s.dim() % 2 == 0)
        .collect();
    let found = even
        .iter()
        .filter(|s| structure::endomorphism_counterexample(Sign::Plus, **s).is_some())
        .count();
    assert!(found >= 1);
}
