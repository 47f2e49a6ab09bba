use ellbern::algebra::{int, rat};
use ellbern::fixtures::FixtureSet;
use ellbern::lame::{
    coefficients_to_power_sums, falling_factor, lame_coefficients, power_sums_to_coefficients,
    verify_charpoly_equivalence,
};
use ellbern::top::Spin;
use ellbern::{Error, Rational, Var};

#[test]
fn reduced_coefficients_match_fixtures() {
    let fixtures = FixtureSet::embedded().unwrap();
    let c = lame_coefficients(7, true);
    for (k, f) in fixtures.lame_reduced.iter().enumerate() {
        assert_eq!(c.b[k + 1], f.poly, "{}", f.name);
    }
}

#[test]
fn newton_round_trip() {
    let p: Vec<Rational> = vec![int(3), int(-1), rat(1, 2), int(7), rat(-2, 3)];
    let b = power_sums_to_coefficients(&p);
    assert_eq!(b[0], int(1));
    assert_eq!(coefficients_to_power_sums(&b), p);
}

#[test]
fn charpoly_equivalence_and_kramers_squares() {
    let a = [rat(4, 9), rat(5, 2), rat(-3, 2)];
    for twice in 0..=7 {
        let r = verify_charpoly_equivalence(Spin::from_twice(twice), &a).unwrap();
        assert!(r.pass, "2s = {twice}: {:?}", r.first_difference);
        assert_eq!(r.perfect_square, twice % 2 == 1);
    }
}

#[test]
fn reduced_coefficients_are_divisible() {
    let c = lame_coefficients(7, true);
    for k in 1..=7 {
        assert!(c.b[k].is_divisible_by(Var::S, &falling_factor(k)).unwrap(), "b{k}");
    }
}

#[test]
fn insufficient_coefficients() {
    let c = lame_coefficients(3, false);
    let err = c.spectral_polynomial(Spin::integer(2), &[int(1), int(0), int(0)]).unwrap_err();
    assert!(matches!(err, Error::InsufficientCoefficients { .. }));
}
