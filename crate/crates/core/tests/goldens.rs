//! Fixed exact values, each checked against a direct hand computation.

use num::{BigRational, One};
use starcat::category::{WMorphism, WObject};
use starcat::dilation::codilator;
use starcat::factor::kernel;
use starcat::gram_schmidt::{gram_schmidt, WideCospan};
use starcat::order::{is_positive_endo, schur_inverse, PositivityVerdict};
use starcat::scalar::is_positive_scalar;
use starcat::{Matrix, RatFun, Rational, StarField};

fn br(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

fn lift(x: &BigRational) -> Rational {
    Rational::from_rational(x)
}

fn unweighted(rows: Vec<Vec<Rational>>) -> WMorphism<Rational> {
    let cols = rows.first().map_or(0, |r| r.len());
    WMorphism::unweighted(Matrix::from_rows(rows, cols).unwrap())
}

fn scalar(x: &BigRational) -> WMorphism<Rational> {
    unweighted(vec![vec![lift(x)]])
}

const SAMPLES: [(i64, i64); 6] = [(1, 1), (2, 1), (-1, 3), (3, 2), (-5, 4), (1, 7)];

#[test]
fn kernel_of_a_row() {
    let k = kernel(&unweighted(vec![vec![q(1, 1), q(1, 1)]]));
    assert_eq!(k.dom().weights(), &[q(1, 2)]);
    assert_eq!(k.matrix().column(0), vec![q(1, 1), q(-1, 1)]);

    // [1 c] on unit weights: column (1, -1/c), weight c^2 / (c^2 + 1).
    for (n, d) in SAMPLES {
        let c = br(n, d);
        let k = kernel(&unweighted(vec![vec![q(1, 1), lift(&c)]]));
        assert_eq!(k.matrix().column(0), vec![q(1, 1), lift(&-c.recip())]);
        let c2 = &c * &c;
        assert_eq!(k.dom().weights(), &[lift(&(&c2 / (&c2 + BigRational::one())))]);
    }
}

#[test]
fn gram_schmidt_two_vectors() {
    let col = |a: &BigRational, b: &BigRational| unweighted(vec![vec![lift(a)], vec![lift(b)]]);
    let c = WideCospan::new(vec![col(&br(1, 1), &br(1, 1)), col(&br(0, 1), &br(1, 1))]).unwrap();
    let t = gram_schmidt(&c).unwrap();
    assert_eq!(t.legs()[1].matrix().column(0), vec![q(-1, 2), q(1, 2)]);

    // t2 = v2 - (<v1, v2> / <v1, v1>) v1 in the unit-weighted plane.
    for (i, (n, d)) in SAMPLES.iter().enumerate() {
        let v1 = (br(*n, *d), br(1, 1 + i as i64));
        let v2 = (br(1, 2), br(-(i as i64), 3));
        let coef = (&v1.0 * &v2.0 + &v1.1 * &v2.1) / (&v1.0 * &v1.0 + &v1.1 * &v1.1);
        let t2 = (&v2.0 - &coef * &v1.0, &v2.1 - &coef * &v1.1);
        let c = WideCospan::new(vec![col(&v1.0, &v1.1), col(&v2.0, &v2.1)]).unwrap();
        let t = gram_schmidt(&c).unwrap();
        assert_eq!(t.legs()[1].matrix().column(0), vec![lift(&t2.0), lift(&t2.1)]);
    }
}

#[test]
fn codilator_of_scalars() {
    let cert = codilator(&scalar(&br(1, 2))).unwrap();
    let c = &cert.codilation;
    assert_eq!(c.apex.weights(), &[q(1, 1), q(4, 3)]);
    assert_eq!(c.s1.matrix().column(0), vec![q(1, 2), q(1, 1)]);
    assert_eq!(c.s2.matrix().column(0), vec![q(1, 1), q(0, 1)]);

    // For |f| < 1: legs [f; 1] and [1; 0] into weights (1, 1 / (1 - f^2)).
    for (n, d) in [(1, 3), (-2, 3), (3, 4), (-1, 5), (0, 1)] {
        let f = br(n, d);
        let cert = codilator(&scalar(&f)).unwrap();
        let c = &cert.codilation;
        let defect = BigRational::one() - &f * &f;
        assert_eq!(c.apex.weights(), &[q(1, 1), lift(&defect.recip())]);
        assert_eq!(c.s1.matrix().column(0), vec![lift(&f), q(1, 1)]);
        assert!(cert.verify());
    }
    assert!(codilator(&scalar(&br(3, 2))).is_err());
}

#[test]
fn woodbury_scalars() {
    let got = schur_inverse(&scalar(&br(2, 1)), &scalar(&br(3, 1)), &scalar(&br(1, 1))).unwrap();
    assert_eq!(got, scalar(&br(2, 5)));

    // (b - f^2 / a)^{-1} for scalars with f^2 < a b.
    for (a, b, f) in [(br(1, 1), br(1, 1), br(1, 2)), (br(5, 2), br(1, 3), br(-1, 1)), (br(7, 1), br(2, 1), br(3, 1))] {
        let expected = (&b - &f * &f / &a).recip();
        assert_eq!(schur_inverse(&scalar(&a), &scalar(&b), &scalar(&f)).unwrap(), scalar(&expected));
    }
}

#[test]
fn positivity_witness_and_factor() {
    let h = unweighted(vec![vec![q(1, 1), q(2, 1)], vec![q(2, 1), q(1, 1)]]);
    match is_positive_endo(&h).unwrap() {
        PositivityVerdict::NotPositive { witness, value } => {
            assert_eq!(witness, vec![q(-2, 1), q(1, 1)]);
            assert_eq!(value, q(-3, 1));
        }
        v => panic!("expected a witness, got {v:?}"),
    }
    let h = unweighted(vec![vec![q(2, 1), q(1, 1)], vec![q(1, 1), q(2, 1)]]);
    let v = is_positive_endo(&h).unwrap();
    assert!(v.is_positive() && v.verify(&h));
}

#[test]
fn ratfun_cone() {
    let lit = |s: &str| RatFun::parse_literal(s).unwrap();
    assert_eq!(is_positive_scalar(&lit("-x^2")), Ok(true));
    assert_eq!(is_positive_scalar(&lit("x^2")), Ok(false));
    assert_eq!(is_positive_scalar(&lit("x^4")), Ok(true));
    assert!(is_positive_scalar(&lit("x")).is_err());
    // -x^2 = x* x.
    assert_eq!(RatFun::x().norm(), lit("-x^2"));
    // The lowest-order term decides.
    assert_eq!(is_positive_scalar(&lit("1 + x^2")), Ok(true));
    assert_eq!(is_positive_scalar(&lit("x^2 - x^4")), Ok(false));
}

#[test]
fn weighted_adjoint_entries() {
    // (M*)_{jk} = a_j M_{kj} b_k^{-1} with dom weights a, cod weights b.
    let a = [br(2, 1), br(1, 3)];
    let b = [br(5, 1)];
    let m = [br(3, 1), br(-1, 2)];
    let x = WObject::new(a.iter().map(lift).collect()).unwrap();
    let y = WObject::new(b.iter().map(lift).collect()).unwrap();
    let f = WMorphism::new(x, y, Matrix::from_rows(vec![m.iter().map(lift).collect()], 2).unwrap()).unwrap();
    let adj = f.adjoint();
    for j in 0..2 {
        assert_eq!(adj.matrix()[(j, 0)], lift(&(&a[j] * &m[j] / &b[0])));
    }
}
