use ellbern::algebra::{int, rat, UniPoly};
use ellbern::top::{
    char_poly_exact, eigenvalues_numeric, eigenvalues_numeric_f64, eigenvalues_polished, trace_power_oracle, Spin,
    SpinMatrixModel,
};
use ellbern::{Error, Rational, Var};

fn model(twice: u32, a: [Rational; 3]) -> SpinMatrixModel {
    SpinMatrixModel::new(Spin::from_twice(twice), a)
}

#[test]
fn isotropic_top_is_scalar() {
    let m = model(4, [1, 1, 1].map(int));
    let ev = eigenvalues_numeric(&m, None).unwrap();
    assert_eq!(ev.len(), 5);
    assert!(ev.iter().all(|x| (x - 6.0).abs() < 1e-10), "{ev:?}");
    assert_eq!(eigenvalues_polished(&m).unwrap(), vec![6.0; 5]);
}

#[test]
fn traceless_spin_three_halves_is_symmetric() {
    let m = model(3, [int(2), int(-5), int(3)]);
    let ev = eigenvalues_polished(&m).unwrap();
    assert_eq!(ev.len(), 4);
    assert_eq!(ev[0], ev[1]);
    assert_eq!(ev[2], ev[3]);
    assert!((ev[0] + ev[3]).abs() < 1e-12);
    assert!(ev[3] > 0.0);
}

#[test]
fn char_poly_roots_match_spectrum() {
    let a = [rat(3, 2), rat(-3, 7), int(1)];
    let m = model(6, a);
    let r = UniPoly::from_multi(&char_poly_exact(&m), Var::Lambda).unwrap();
    assert_eq!(r.degree(), Some(7));
    assert_eq!(r.leading(), int(1));
    for x in eigenvalues_polished(&m).unwrap() {
        let scale = (1.0 + x.abs()).powi(7);
        assert!(r.eval_f64(x).abs() / scale < 1e-10);
    }
}

#[test]
fn oracle_trace_matches_numeric_power_sums() {
    let m = model(5, [rat(1, 3), int(2), rat(-7, 4)]);
    let ev = eigenvalues_numeric(&m, None).unwrap();
    for k in 1..=4 {
        let exact = ellbern::algebra::rational::to_f64(&trace_power_oracle(&m, k));
        let numeric: f64 = ev.iter().map(|x| x.powi(k as i32)).sum();
        assert!((exact - numeric).abs() <= 1e-9 * (1.0 + exact.abs()), "k = {k}");
    }
}

#[test]
fn float_and_rational_paths_agree() {
    let spin = Spin::integer(3);
    let a = [0.25, -1.5, 2.0];
    let m = SpinMatrixModel::new(spin, [rat(1, 4), rat(-3, 2), int(2)]);
    let x = eigenvalues_numeric_f64(spin, a, None).unwrap();
    let y = eigenvalues_numeric(&m, None).unwrap();
    for (p, q) in x.iter().zip(&y) {
        assert!((p - q).abs() < 1e-9);
    }
}

#[test]
fn input_validation() {
    let spin = Spin::integer(1);
    assert!(matches!(eigenvalues_numeric_f64(spin, [f64::NAN, 0.0, 0.0], None), Err(Error::NonFinite(_))));
    assert!(matches!(eigenvalues_numeric_f64(spin, [1.0, 0.0, 0.0], Some(-1.0)), Err(Error::BadTolerance(_))));
    assert!("1/3".parse::<Spin>().is_err());
    assert!("-1".parse::<Spin>().is_err());
    assert!("0.5".parse::<Spin>().is_err());
    assert_eq!("5/2".parse::<Spin>().unwrap().dimension(), 6);
    assert_eq!(Spin::from_twice(7).to_string(), "7/2");
    let m = model(2, [1, 2, 3].map(int));
    assert!(matches!(m.matrix_elements(&rat(1, 2)), Err(Error::OffLattice { .. })));
}
