use ellbern::algebra::{g_to_a, int, params_from_a_rational, symmetric_to_g};
use ellbern::ebp::elliptic_bernoulli;
use ellbern::{Monomial, MultiPoly, Rational, Var};
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=9).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn poly() -> impl Strategy<Value = MultiPoly> {
    let vars = [Var::S, Var::G1, Var::G2, Var::G3];
    prop::collection::vec((small_rational(), prop::collection::vec(0u32..4, 4)), 0..6).prop_map(move |terms| {
        MultiPoly::from_terms(terms.into_iter().map(|(c, exps)| {
            let m = Monomial::from_exponents(&vars.iter().copied().zip(exps).collect::<Vec<_>>());
            (m, c)
        }))
    })
}

proptest! {
    #[test]
    fn display_parse_round_trip(p in poly()) {
        let text = p.to_string();
        prop_assert_eq!(text.parse::<MultiPoly>().unwrap(), p);
    }

    #[test]
    fn evaluation_is_a_ring_map(p in poly(), q in poly(), s in small_rational(), g in small_rational()) {
        let at = [(Var::S, s), (Var::G1, g.clone()), (Var::G2, g.clone()), (Var::G3, -g)];
        let ev = |x: &MultiPoly| x.evaluate_rational(&at);
        prop_assert_eq!(ev(&(p.clone() * q.clone())), ev(&p) * ev(&q));
        prop_assert_eq!(ev(&(p.clone() + q.clone())), ev(&p) + ev(&q));
    }

    #[test]
    fn substitution_composes_with_evaluation(p in poly(), s in small_rational()) {
        let shifted = p.substitute(&[(Var::S, MultiPoly::var(Var::S) + MultiPoly::from_int(1))]);
        let lhs = shifted.evaluate_rational(&[(Var::S, s.clone())]);
        let rhs = p.evaluate_rational(&[(Var::S, s + int(1))]);
        prop_assert_eq!(lhs.clone(), rhs);
        prop_assert_eq!(shifted, p.shift(Var::S, &int(1)));
    }

    #[test]
    fn g_and_a_forms_agree(a1 in small_rational(), a2 in small_rational(), a3 in small_rational(), s in small_rational()) {
        let b = elliptic_bernoulli(2);
        let g = params_from_a_rational(&[a1.clone(), a2.clone(), a3.clone()]);
        let in_a = g_to_a(&b.poly);
        prop_assert_eq!(symmetric_to_g(&in_a).unwrap(), b.poly.clone());
        let x = in_a.evaluate_rational(&[(Var::S, s.clone()), (Var::A1, a1), (Var::A2, a2), (Var::A3, a3)]);
        prop_assert_eq!(x, b.evaluate(&s, &g));
    }
}
