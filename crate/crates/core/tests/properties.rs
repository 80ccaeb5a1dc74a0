use num::BigRational;
use proptest::prelude::*;
use starcat::category::{WMorphism, WObject};
use starcat::document::Document;
use starcat::factor::{kernel, range_factorization, solve_extension};
use starcat::gram_schmidt::orthogonalize_gram;
use starcat::order::{is_positive_endo, PositivityVerdict};
use starcat::scalar::Poly;
use starcat::{Gaussian, Matrix, Quaternion, RatFun, Rational, RingId, StarField};

fn small() -> impl Strategy<Value = BigRational> {
    (-4i64..=4, 1i64..=3).prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
}

fn weight() -> impl Strategy<Value = BigRational> {
    (1i64..=4, 1i64..=3).prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
}

fn quaternion() -> impl Strategy<Value = Quaternion> {
    (small(), small(), small(), small()).prop_map(|(a, b, c, d)| Quaternion::new(a, b, c, d))
}

fn q_object(dim: usize) -> impl Strategy<Value = WObject<Quaternion>> {
    prop::collection::vec(weight(), dim)
        .prop_map(|ws| WObject::new(ws.iter().map(Quaternion::from_rational).collect()).unwrap())
}

fn q_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix<Quaternion>> {
    prop::collection::vec(quaternion(), rows * cols)
        .prop_map(move |v| Matrix::from_fn(rows, cols, |r, c| v[r * cols + c].clone()))
}

/// A composable pair `f: X → Y`, `g: Y → Z` of quaternion morphisms.
fn q_pair() -> impl Strategy<Value = (WMorphism<Quaternion>, WMorphism<Quaternion>)> {
    (0usize..=3, 0usize..=3, 0usize..=3).prop_flat_map(|(a, b, c)| {
        (q_object(a), q_object(b), q_object(c), q_matrix(b, a), q_matrix(c, b)).prop_map(|(x, y, z, fm, gm)| {
            (WMorphism::new(x, y.clone(), fm).unwrap(), WMorphism::new(y, z, gm).unwrap())
        })
    })
}

fn q_vector(n: usize) -> impl Strategy<Value = Vec<Quaternion>> {
    prop::collection::vec(quaternion(), n)
}

fn r_object(dim: usize) -> impl Strategy<Value = WObject<Rational>> {
    prop::collection::vec(weight(), dim)
        .prop_map(|ws| WObject::new(ws.iter().map(Rational::from_rational).collect()).unwrap())
}

fn r_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix<Rational>> {
    prop::collection::vec(small(), rows * cols)
        .prop_map(move |v| Matrix::from_fn(rows, cols, |r, c| Rational::from_rational(&v[r * cols + c])))
}

fn rational_morphism() -> impl Strategy<Value = WMorphism<Rational>> {
    (0usize..=3, 0usize..=3).prop_flat_map(|(a, b)| {
        (r_object(a), r_object(b), r_matrix(b, a)).prop_map(|(x, y, m)| WMorphism::new(x, y, m).unwrap())
    })
}

/// A composable pair `f: X → Y`, `h: Y → Z`.
fn rational_pair() -> impl Strategy<Value = (WMorphism<Rational>, WMorphism<Rational>)> {
    (0usize..=3, 0usize..=3, 0usize..=3).prop_flat_map(|(a, b, c)| {
        (r_object(a), r_object(b), r_object(c), r_matrix(b, a), r_matrix(c, b)).prop_map(|(x, y, z, fm, hm)| {
            (WMorphism::new(x, y.clone(), fm).unwrap(), WMorphism::new(y, z, hm).unwrap())
        })
    })
}

proptest! {
    #[test]
    fn adjoint_is_an_involutive_contravariant_functor((f, g) in q_pair()) {
        prop_assert_eq!(f.adjoint().adjoint(), f.clone());
        let gf = g.compose(&f).unwrap();
        prop_assert_eq!(gf.adjoint(), f.adjoint().compose(&g.adjoint()).unwrap());
    }

    #[test]
    fn adjoint_moves_across_the_inner_product(
        ((f, _), xs, ys) in q_pair().prop_flat_map(|p| {
            let (a, b) = (p.0.dom().dim(), p.0.cod().dim());
            (Just(p), q_vector(a), q_vector(b))
        })
    ) {
        let fx = f.apply(&xs).unwrap();
        let fsy = f.adjoint().apply(&ys).unwrap();
        let lhs = f.cod().inner_product(&fx, &ys).unwrap();
        let rhs = f.dom().inner_product(&xs, &fsy).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn quaternion_star_reverses_products(a in quaternion(), b in quaternion()) {
        prop_assert_eq!(a.mul(&b).star(), b.star().mul(&a.star()));
        if let Some(ai) = a.inv() {
            prop_assert!(a.mul(&ai).is_one());
        }
    }

    #[test]
    fn kernel_is_an_isometric_null_mono(f in rational_morphism()) {
        let k = kernel(&f);
        prop_assert!(k.is_isometry());
        prop_assert!(f.compose(&k).unwrap().is_zero());
        prop_assert_eq!(k.dom().dim() + f.rank(), f.dom().dim());
    }

    #[test]
    fn range_factorization_recomposes(f in rational_morphism()) {
        let rf = range_factorization(&f);
        prop_assert!(rf.j.is_isometry());
        prop_assert!(rf.e.is_coisometry());
        prop_assert!(rf.u.try_inverse().is_some());
        prop_assert_eq!(rf.recompose().unwrap(), f);
    }

    #[test]
    fn grams_are_certified_positive(f in rational_morphism()) {
        let h = f.gram();
        let verdict = is_positive_endo(&h).unwrap();
        prop_assert!(verdict.is_positive());
        prop_assert!(verdict.verify(&h));
        let neg = h.negate();
        let verdict = is_positive_endo(&neg).unwrap();
        prop_assert_eq!(verdict.is_positive(), h.is_zero());
        prop_assert!(verdict.verify(&neg));
        if let PositivityVerdict::NotPositive { value, .. } = verdict {
            prop_assert!(value.neg().is_positive_hermitian());
        }
    }

    #[test]
    fn orthogonalized_gram_is_diagonal(f in rational_morphism()) {
        let m = f.matrix();
        let g = m.conj_transpose().mul(m).unwrap();
        if g.inverse().is_some() {
            let (x, b) = orthogonalize_gram(&g).unwrap();
            let d = b.conj_transpose().mul(&g).unwrap().mul(&b).unwrap();
            let expected = Matrix::from_fn(x.dim(), x.dim(), |r, c| {
                if r == c { x.inv_weights()[r].clone() } else { Rational::zero() }
            });
            prop_assert_eq!(d, expected);
        }
    }

    #[test]
    fn solve_extension_solves((f, h) in rational_pair()) {
        let hf = h.compose(&f).unwrap();
        let sol = solve_extension(&hf, &f).unwrap();
        prop_assert_eq!(sol.morphism.compose(&f).unwrap(), hf);
        prop_assert_eq!(sol.unique, f.is_epi());
        if sol.unique {
            prop_assert_eq!(sol.morphism, h);
        }
    }

    #[test]
    fn ratfun_cone_is_total(n in small(), k in 0usize..4) {
        let a = RatFun::from_poly(Poly::monomial(n.clone(), k));
        let h = a.add(&a.star());
        if !h.is_zero() {
            prop_assert!(h.is_positive_hermitian() != h.neg().is_positive_hermitian());
        }
        prop_assert!(a.norm().is_zero() || a.norm().is_positive_hermitian());
    }

    #[test]
    fn gaussian_norm_is_positive(re in small(), im in small()) {
        let z = Gaussian::new(re, im);
        prop_assert!(z.norm().is_positive_hermitian());
        prop_assert_eq!(z.norm().is_zero(), z.is_zero());
        if !z.is_zero() {
            prop_assert!(!z.norm().neg().is_positive_hermitian());
        }
    }

    #[test]
    fn documents_round_trip(f in rational_morphism()) {
        let mut doc = Document::new(RingId::Rational);
        doc.insert_morphism("f", &f);
        let text = doc.to_canonical_json();
        let back = Document::parse(&text).unwrap();
        prop_assert_eq!(&back, &doc);
        prop_assert_eq!(back.to_canonical_json(), text);
        prop_assert_eq!(back.morphism::<Rational>("f").unwrap(), f);
    }
}
