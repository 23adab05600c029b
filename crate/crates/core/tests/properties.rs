use hilbert_sally::groebner::{buchberger, normal_form};
use hilbert_sally::ideals::{
    artinian_length, ideal_contains, monomial_length_oracle, RingPresentation,
};
use hilbert_sally::poly::{
    leading_term, parse_polynomial, Field, Monomial, MonomialOrder, Polynomial,
};
use proptest::prelude::*;

const ORDERS: [MonomialOrder; 3] = [
    MonomialOrder::GrevLex,
    MonomialOrder::Lex,
    MonomialOrder::Elimination(1),
];

fn names(n: usize) -> Vec<String> {
    ["x", "y", "z"][..n].iter().map(|s| s.to_string()).collect()
}

fn poly(nvars: usize, order: MonomialOrder, terms: &[(Vec<u16>, i64)]) -> Polynomial {
    let f = Field::Rational;
    Polynomial::from_terms(
        nvars,
        f,
        order,
        terms
            .iter()
            .map(|(e, c)| (Monomial::from_exponents(e), f.from_i64(*c)))
            .collect(),
    )
}

fn terms(nvars: usize, max_exp: u16, max_terms: usize) -> impl Strategy<Value = Vec<(Vec<u16>, i64)>> {
    prop::collection::vec((prop::collection::vec(0..=max_exp, nvars), -5i64..=5), 1..=max_terms)
}

fn three_terms(nvars: usize) -> impl Strategy<Value = [Vec<(Vec<u16>, i64)>; 3]> {
    (terms(nvars, 3, 4), terms(nvars, 3, 4), terms(nvars, 3, 4)).prop_map(|(a, b, c)| [a, b, c])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms((nv, [a, b, c]) in (1usize..=3).prop_flat_map(|nv| (Just(nv), three_terms(nv)))) {
        let o = MonomialOrder::GrevLex;
        let (f, g, h) = (poly(nv, o, &a), poly(nv, o, &b), poly(nv, o, &c));
        prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert!((&f - &f).is_zero());
        prop_assert_eq!(&f * &Polynomial::one(nv, Field::Rational, o), f.clone());
        prop_assert_eq!(&(-&f) + &f, Polynomial::zero(nv, Field::Rational, o));
    }

    #[test]
    fn leading_terms_multiply(a in terms(3, 3, 4), b in terms(3, 3, 4), k in 0usize..3) {
        let ord = ORDERS[k];
        let (f, g) = (poly(3, ord, &a), poly(3, ord, &b));
        prop_assume!(!f.is_zero() && !g.is_zero());
        let (mf, cf) = leading_term(&f, ord).unwrap();
        let (mg, cg) = leading_term(&g, ord).unwrap();
        let (m, c) = leading_term(&(&f * &g), ord).unwrap();
        prop_assert_eq!(m, mf.mul(&mg));
        prop_assert_eq!(c, cf.mul(&cg));
    }

    #[test]
    fn format_parse_round_trip(a in terms(3, 4, 5), num in -7i64..=7, den in 1i64..=6) {
        let f = Field::Rational;
        let p = poly(3, MonomialOrder::GrevLex, &a).scale(&f.from_i64(num).div(&f.from_i64(den)).unwrap());
        let text = p.format(&names(3));
        let back = parse_polynomial(&text, &names(3), f, MonomialOrder::GrevLex).unwrap();
        prop_assert_eq!(back, p);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn groebner_order_independent(a in terms(2, 3, 3), b in terms(2, 3, 3)) {
        let gens = vec![poly(2, MonomialOrder::GrevLex, &a), poly(2, MonomialOrder::GrevLex, &b)];
        let g1 = buchberger(2, Field::Rational, &gens, MonomialOrder::GrevLex).unwrap();
        let g2 = buchberger(2, Field::Rational, &gens, MonomialOrder::Lex).unwrap();
        for p in g1.polys() {
            prop_assert!(g2.contains(p).unwrap());
        }
        for p in g2.polys() {
            prop_assert!(g1.contains(p).unwrap());
        }
        // reduced bases are unique
        prop_assert_eq!(g2.with_order(MonomialOrder::GrevLex).unwrap(), g1);
    }

    #[test]
    fn groebner_permutation_independent(a in terms(3, 2, 3), b in terms(3, 2, 3), swap in 0usize..3) {
        let ord = MonomialOrder::GrevLex;
        let perm: Vec<usize> = match swap {
            0 => vec![1, 0, 2],
            1 => vec![2, 1, 0],
            _ => vec![1, 2, 0],
        };
        let mut inv = vec![0; 3];
        for (i, &p) in perm.iter().enumerate() {
            inv[p] = i;
        }
        let gens = vec![poly(3, ord, &a), poly(3, ord, &b)];
        let direct = buchberger(3, Field::Rational, &gens, ord).unwrap();
        let moved: Vec<Polynomial> = gens.iter().map(|g| g.permute_vars(&perm, ord)).collect();
        let gm = buchberger(3, Field::Rational, &moved, ord).unwrap();
        let back: Vec<Polynomial> = gm.polys().iter().map(|g| g.permute_vars(&inv, ord)).collect();
        prop_assert_eq!(buchberger(3, Field::Rational, &back, ord).unwrap(), direct);
    }

    #[test]
    fn membership_agrees_across_orders(a in terms(2, 3, 3), b in terms(2, 3, 3), u in terms(2, 2, 2), v in terms(2, 2, 2), extra in terms(2, 3, 2)) {
        let o = MonomialOrder::GrevLex;
        let (f, g) = (poly(2, o, &a), poly(2, o, &b));
        let member = &(&poly(2, o, &u) * &f) + &(&poly(2, o, &v) * &g);
        let other = &member + &poly(2, o, &extra);
        let gens = vec![f, g];
        let bases: Vec<_> = ORDERS
            .iter()
            .map(|&ord| buchberger(2, Field::Rational, &gens, ord).unwrap())
            .collect();
        for gb in &bases {
            prop_assert!(normal_form(&member, gb).unwrap().is_zero());
        }
        let verdicts: Vec<bool> = bases.iter().map(|gb| gb.contains(&other).unwrap()).collect();
        prop_assert!(verdicts.iter().all(|&x| x == verdicts[0]));
    }
}

fn monomial_ideal() -> impl Strategy<Value = (usize, Vec<Vec<u16>>)> {
    (2usize..=3).prop_flat_map(|nv| {
        (
            Just(nv),
            prop::collection::vec(1u16..=5, nv),
            prop::collection::vec(prop::collection::vec(0u16..=4, nv), 0..=3),
        )
            .prop_map(|(nv, pure, mixed)| {
                let mut gens: Vec<Vec<u16>> = (0..nv)
                    .map(|i| (0..nv).map(|j| if i == j { pure[i] } else { 0 }).collect())
                    .collect();
                gens.extend(mixed.into_iter().filter(|e| e.iter().any(|&x| x > 0)));
                (nv, gens)
            })
    })
}

fn monomial_handle(r: &RingPresentation, gens: &[Vec<u16>]) -> hilbert_sally::ideals::IdealHandle {
    let nv = r.nvars();
    r.ideal(
        gens.iter()
            .map(|e| poly(nv, MonomialOrder::GrevLex, &[(e.clone(), 1)]))
            .collect(),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn length_matches_oracle((nv, gens) in monomial_ideal()) {
        let n = names(nv);
        let refs: Vec<&str> = n.iter().map(|s| s.as_str()).collect();
        let r = RingPresentation::regular(Field::Rational, &refs);
        let truncation: u32 = (0..nv).map(|i| gens[i][i] as u32 - 1).sum::<u32>() + 1;
        let oracle = monomial_length_oracle(nv, &gens, truncation).unwrap();
        let l = artinian_length(&monomial_handle(&r, &gens)).unwrap();
        prop_assert_eq!(l.value, oracle.value);
    }

    #[test]
    fn length_is_monotone((nv, gens) in monomial_ideal(), extra in terms(3, 3, 3)) {
        let n = names(nv);
        let refs: Vec<&str> = n.iter().map(|s| s.as_str()).collect();
        let r = RingPresentation::regular(Field::Rational, &refs);
        let j = monomial_handle(&r, &gens);
        let extra: Vec<(Vec<u16>, i64)> = extra
            .into_iter()
            .map(|(e, c)| (e[..nv].to_vec(), c))
            .filter(|(e, _)| e.iter().any(|&x| x > 0))
            .collect();
        let k = j.sum(&r.ideal(vec![poly(nv, MonomialOrder::GrevLex, &extra)])).unwrap();
        prop_assert!(ideal_contains(&k, &j).unwrap());
        prop_assert!(artinian_length(&j).unwrap().value >= artinian_length(&k).unwrap().value);
    }
}
