use hsymb::algebra::{Element, Generator, Sort};
use hsymb::antipode::antipode;
use hsymb::coproduct::{coproduct, counit, TensorElement2, TensorTerms};
use hsymb::forms::w_element;
use hsymb::lincomb::rat;
use hsymb::parse::parse_in;
use hsymb::render::element_text;
use hsymb::tensor::{project_pi, shuffle, symbol};
use proptest::prelude::*;

fn generator(sort: Sort) -> impl Strategy<Value = Generator> {
    let inverted = if sort == Sort::Hbar { any::<bool>().boxed() } else { Just(false).boxed() };
    (prop::collection::vec(1u32..=3, 1..=3), 1u32..=2, prop::collection::vec(1u32..=2, 3), inverted).prop_map(
        |(weights, start, steps, inv)| {
            let mut idx = vec![start];
            for s in steps.iter().take(weights.len()) {
                idx.push(idx.last().unwrap() + s);
            }
            if inv {
                Generator::inverted(idx, weights).unwrap()
            } else {
                Generator::poly(idx, weights).unwrap()
            }
        },
    )
}

fn small_generator(sort: Sort) -> impl Strategy<Value = Generator> {
    generator(sort).prop_filter("weight at most 3", |g| g.weight() <= 3)
}

fn element(sort: Sort) -> impl Strategy<Value = Element> {
    let monomial = (-5i64..=5, 1i64..=4, prop::collection::vec(small_generator(sort), 0..=2)).prop_map(move |(n, d, gs)| {
        gs.into_iter()
            .fold(Element::constant(sort, rat(n, d)), |acc, g| acc.checked_mul(&Element::generator(g).into_sort(sort).unwrap()).unwrap())
    });
    prop::collection::vec(monomial, 1..=3).prop_map(move |ms| ms.into_iter().fold(Element::zero(sort), |a, b| &a + &b))
}

fn sort() -> impl Strategy<Value = Sort> {
    prop_oneof![Just(Sort::H), Just(Sort::Hbar)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn parse_render_round_trip(e in sort().prop_flat_map(element)) {
        let back = parse_in(&element_text(&e), e.sort()).unwrap();
        prop_assert_eq!(back, e);
    }

    #[test]
    fn counit_and_antipode(e in sort().prop_flat_map(element)) {
        let t = coproduct(&e);
        let mut left = Element::zero(e.sort());
        let mut right = Element::zero(e.sort());
        let mut prod = Element::zero(e.sort());
        for (a, b, c) in t.left_right() {
            left = &left + &a.scaled(&(counit(&b) * c.clone()));
            right = &right + &b.scaled(&(counit(&a) * c.clone()));
            prod = &prod + &antipode(&a).checked_mul(&b).unwrap().scaled(c);
        }
        prop_assert_eq!(&left, &e);
        prop_assert_eq!(&right, &e);
        prop_assert_eq!(prod, Element::constant(e.sort(), counit(&e)));
    }

    #[test]
    fn symbol_is_multiplicative_and_w_kills_products(
        (a, b) in sort().prop_flat_map(|s| (small_generator(s), small_generator(s)).prop_map(move |(a, b)| (s, a, b)))
            .prop_map(|(s, a, b)| (Element::generator(a).into_sort(s).unwrap(), Element::generator(b).into_sort(s).unwrap()))
    ) {
        let ab = a.checked_mul(&b).unwrap();
        prop_assert_eq!(symbol(&ab), shuffle(&symbol(&a), &symbol(&b)));
        prop_assert!(w_element(&ab).is_zero());
        prop_assert!(project_pi(&symbol(&ab)).is_zero());
    }

    #[test]
    fn coproduct_is_multiplicative((a, b) in (element(Sort::Hbar), element(Sort::Hbar))) {
        let ab = a.checked_mul(&b).unwrap();
        let mut expected = TensorTerms::zero();
        for (a1, a2, c) in coproduct(&a).left_right() {
            for (b1, b2, d) in coproduct(&b).left_right() {
                let term = TensorElement2::tensor(&a1.checked_mul(&b1).unwrap(), &a2.checked_mul(&b2).unwrap()).unwrap();
                expected += &(term.terms() * &(c * d));
            }
        }
        let got = coproduct(&ab);
        prop_assert_eq!(got.terms(), &expected);
    }
}
