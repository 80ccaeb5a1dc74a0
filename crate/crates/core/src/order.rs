//! The canonical order on Hermitian endomorphisms, contractions, the bounded
//! transform and the Schur inverse.

use crate::category::{WMorphism, WObject};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::StarField;

/// A decided positivity question with a certificate that can be rechecked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PositivityVerdict<D> {
    /// `H = G*G`, with `G` epic and codomain weights `pivots[k]^{-1}`.
    Positive { factor: WMorphism<D>, pivots: Vec<D> },
    /// `⟨x, Hx⟩ = value`, a nonzero non-positive scalar.
    NotPositive { witness: Vec<D>, value: D },
}

impl<D: StarField> PositivityVerdict<D> {
    pub fn is_positive(&self) -> bool {
        matches!(self, PositivityVerdict::Positive { .. })
    }

    /// Rechecks the certificate against `h` from scratch.
    pub fn verify(&self, h: &WMorphism<D>) -> bool {
        match self {
            PositivityVerdict::Positive { factor, .. } => {
                factor.dom() == h.dom() && factor.gram() == *h && factor.is_epi()
            }
            PositivityVerdict::NotPositive { witness, value } => {
                let Ok(hx) = h.apply(witness) else { return false };
                let Ok(v) = h.dom().inner_product(witness, &hx) else { return false };
                v == *value && !v.is_zero() && v.neg().is_positive_hermitian()
            }
        }
    }
}

fn check_hermitian_endo<D: StarField>(h: &WMorphism<D>) -> Result<()> {
    if !h.is_endo() {
        return Err(Error::NotEndo);
    }
    if !h.is_hermitian() {
        return Err(Error::NotHermitian);
    }
    Ok(())
}

fn unit_vec<D: StarField>(n: usize, k: usize) -> Vec<D> {
    (0..n).map(|i| if i == k { D::one() } else { D::zero() }).collect()
}

/// Decides whether `H` lies in the canonical cone by congruence
/// diagonalization of the form `(x, y) ↦ ⟨x, Hy⟩`.
pub fn is_positive_endo<D: StarField>(h: &WMorphism<D>) -> Result<PositivityVerdict<D>> {
    check_hermitian_endo(h)?;
    let x = h.dom();
    let n = x.dim();
    // C = A^{-1} H is a plain Hermitian matrix representing the form.
    let mut c = Matrix::from_fn(n, n, |r, k| x.inv_weights()[r].mul(&h.matrix()[(r, k)]));
    let mut t: Matrix<D> = Matrix::identity(n);
    let mut t_inv: Matrix<D> = Matrix::identity(n);
    let mut done = vec![false; n];
    let mut pivots: Vec<(usize, D)> = Vec::new();

    loop {
        let open: Vec<usize> = (0..n).filter(|&k| !done[k]).collect();
        let Some(&p) = open.iter().find(|&&k| !c[(k, k)].is_zero()) else {
            // Every open diagonal entry is zero: any open off-diagonal entry
            // gives a strictly negative vector.
            for &j in &open {
                for &k in &open {
                    if j != k && !c[(j, k)].is_zero() {
                        let cjk = c[(j, k)].clone();
                        let mut v = unit_vec::<D>(n, k);
                        v[j] = cjk.neg();
                        let witness = t.mul(&Matrix::column_vector(v)).expect("dims").column(0);
                        let value = cjk.norm().add(&cjk.norm()).neg();
                        return Ok(PositivityVerdict::NotPositive { witness, value });
                    }
                }
            }
            break;
        };
        let d = c[(p, p)].clone();
        if !d.is_positive_hermitian() {
            return Ok(PositivityVerdict::NotPositive { witness: t.column(p), value: d });
        }
        done[p] = true;
        let d_inv = d.inv().expect("nonzero");
        // E = I + e_p w with w_j = -d^{-1} C_pj on the open indices.
        let w: Vec<(usize, D)> = open
            .iter()
            .filter(|&&j| j != p && !c[(p, j)].is_zero())
            .map(|&j| (j, d_inv.mul(&c[(p, j)]).neg()))
            .collect();
        for (j, wj) in &w {
            // columns: C_{.j} += C_{.p} w_j ; T_{.j} += T_{.p} w_j
            for r in 0..n {
                let cp = c[(r, p)].clone();
                if !cp.is_zero() {
                    c[(r, *j)] = c[(r, *j)].add(&cp.mul(wj));
                }
                let tp = t[(r, p)].clone();
                if !tp.is_zero() {
                    t[(r, *j)] = t[(r, *j)].add(&tp.mul(wj));
                }
            }
        }
        for (j, wj) in &w {
            // rows: C_{j.} += w_j* C_{p.}
            let wj_star = wj.star();
            for k in 0..n {
                let cp = c[(p, k)].clone();
                if !cp.is_zero() {
                    c[(*j, k)] = c[(*j, k)].add(&wj_star.mul(&cp));
                }
            }
        }
        // T^{-1} <- (I - e_p w) T^{-1}: row p -= Σ w_j row j.
        for (j, wj) in &w {
            for k in 0..n {
                let tj = t_inv[(*j, k)].clone();
                if !tj.is_zero() {
                    t_inv[(p, k)] = t_inv[(p, k)].sub(&wj.mul(&tj));
                }
            }
        }
        pivots.push((p, d));
    }

    pivots.sort_by_key(|(p, _)| *p);
    let rows: Vec<usize> = pivots.iter().map(|(p, _)| *p).collect();
    let ds: Vec<D> = pivots.into_iter().map(|(_, d)| d).collect();
    let cod = WObject::new(ds.iter().map(|d| d.inv().expect("nonzero")).collect())?;
    let factor = WMorphism::new(x.clone(), cod, t_inv.select_rows(&rows))?;
    Ok(PositivityVerdict::Positive { factor, pivots: ds })
}

fn same_endo_object<D: StarField>(a: &WMorphism<D>, b: &WMorphism<D>) -> Result<()> {
    if a.dom() != b.dom() || !a.is_endo() || !b.is_endo() {
        return Err(Error::shape("order comparison needs endomorphisms of one object"));
    }
    Ok(())
}

/// `a ≤ b` iff `b - a` is positive.
pub fn le<D: StarField>(a: &WMorphism<D>, b: &WMorphism<D>) -> Result<bool> {
    same_endo_object(a, b)?;
    check_hermitian_endo(a)?;
    check_hermitian_endo(b)?;
    Ok(is_positive_endo(&b.sub(a)?)?.is_positive())
}

/// Positive and invertible.
pub fn is_strictly_positive<D: StarField>(h: &WMorphism<D>) -> Result<bool> {
    Ok(is_positive_endo(h)?.is_positive() && h.try_inverse().is_some())
}

pub fn invert<D: StarField>(f: &WMorphism<D>) -> Result<WMorphism<D>> {
    f.try_inverse().ok_or(Error::Singular)
}

fn one_minus_gram<D: StarField>(f: &WMorphism<D>) -> WMorphism<D> {
    WMorphism::identity(f.dom()).sub(&f.gram()).expect("endo")
}

/// `f*f ≤ 1`.
pub fn is_contraction<D: StarField>(f: &WMorphism<D>) -> bool {
    is_positive_endo(&one_minus_gram(f)).map(|v| v.is_positive()).unwrap_or(false)
}

/// `f*f ≺ 1`.
pub fn is_strict_contraction<D: StarField>(f: &WMorphism<D>) -> bool {
    is_strictly_positive(&one_minus_gram(f)).unwrap_or(false)
}

/// `f = c·d` with `d = 1 + a` and `c = f·d^{-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundedTransform<D> {
    pub c: WMorphism<D>,
    pub d: WMorphism<D>,
    pub d_inv: WMorphism<D>,
}

pub fn bounded_transform<D: StarField>(f: &WMorphism<D>, a: &WMorphism<D>) -> Result<BoundedTransform<D>> {
    if a.dom() != f.dom() || !a.is_endo() {
        return Err(Error::precondition("a must be an endomorphism of dom(f)"));
    }
    if !a.is_hermitian() {
        return Err(Error::precondition("a must be hermitian"));
    }
    if !le(&f.gram(), a)? {
        return Err(Error::precondition("f*f <= a does not hold"));
    }
    let d = WMorphism::identity(f.dom()).add(a)?;
    let d_inv = invert(&d).map_err(|_| Error::precondition("1 + a is not invertible"))?;
    let c = f.compose(&d_inv)?;
    Ok(BoundedTransform { c, d, d_inv })
}

/// `b^{-1} + b^{-1} f (a - f* b^{-1} f)^{-1} f* b^{-1}`, which equals
/// `(b - f a^{-1} f*)^{-1}`.
pub fn schur_inverse<D: StarField>(a: &WMorphism<D>, b: &WMorphism<D>, f: &WMorphism<D>) -> Result<WMorphism<D>> {
    if a.dom() != f.dom() || b.dom() != f.cod() || !a.is_endo() || !b.is_endo() {
        return Err(Error::precondition("need a on dom(f) and b on cod(f)"));
    }
    if !a.is_hermitian() || !is_strictly_positive(a)? {
        return Err(Error::precondition("a must be strictly positive"));
    }
    if !b.is_hermitian() || !is_strictly_positive(b)? {
        return Err(Error::precondition("b must be strictly positive"));
    }
    let b_inv = invert(b)?;
    let fs = f.adjoint();
    let s = a.sub(&fs.compose(&b_inv)?.compose(f)?)?;
    let s_inv = invert(&s)?;
    let correction = b_inv.compose(f)?.compose(&s_inv)?.compose(&fs)?.compose(&b_inv)?;
    b_inv.add(&correction)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Gaussian, RatFun, Rational};

    fn q(rows: &[&[i64]]) -> WMorphism<Rational> {
        let cols = rows.first().map_or(0, |r| r.len());
        WMorphism::unweighted(
            Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| Rational::from_int(x)).collect()).collect(), cols)
                .unwrap(),
        )
    }

    fn scalar(x: Rational) -> WMorphism<Rational> {
        WMorphism::unweighted(Matrix::from_rows(vec![vec![x]], 1).unwrap())
    }

    #[test]
    fn positive_example() {
        let h = q(&[&[2, 1], &[1, 2]]);
        let v = is_positive_endo(&h).unwrap();
        assert!(v.verify(&h));
        let PositivityVerdict::Positive { factor, pivots } = v else { panic!() };
        assert_eq!(pivots, vec![Rational::from_int(2), Rational::new(3, 2)]);
        assert_eq!(factor.cod().weights(), &[Rational::new(1, 2), Rational::new(2, 3)]);
    }

    #[test]
    fn negative_example() {
        let h = q(&[&[1, 2], &[2, 1]]);
        let v = is_positive_endo(&h).unwrap();
        assert!(!v.is_positive());
        assert!(v.verify(&h));
        let x = vec![Rational::from_int(1), Rational::from_int(-1)];
        let hx = h.apply(&x).unwrap();
        assert_eq!(h.dom().inner_product(&x, &hx).unwrap(), Rational::from_int(-2));
    }

    #[test]
    fn zero_diagonal_with_complex_offdiagonal() {
        let i = Gaussian::i();
        let h = WMorphism::unweighted(
            Matrix::from_rows(vec![vec![Gaussian::zero(), i.clone()], vec![i.neg(), Gaussian::zero()]], 2).unwrap(),
        );
        let v = is_positive_endo(&h).unwrap();
        assert!(!v.is_positive());
        assert!(v.verify(&h));
    }

    #[test]
    fn zero_is_positive_with_empty_factor() {
        let h = q(&[&[0, 0], &[0, 0]]);
        let PositivityVerdict::Positive { factor, .. } = is_positive_endo(&h).unwrap() else { panic!() };
        assert_eq!(factor.cod().dim(), 0);
    }

    #[test]
    fn errors() {
        assert_eq!(is_positive_endo(&q(&[&[1, 2]])), Err(Error::NotEndo));
        assert_eq!(is_positive_endo(&q(&[&[1, 2], &[0, 1]])), Err(Error::NotHermitian));
        assert_eq!(invert(&q(&[&[1, 1], &[1, 1]])), Err(Error::Singular));
    }

    #[test]
    fn order_and_contractions() {
        assert!(le(&scalar(Rational::from_int(1)), &scalar(Rational::from_int(2))).unwrap());
        assert!(is_strictly_positive(&scalar(Rational::one())).unwrap());
        assert!(is_strict_contraction(&scalar(Rational::new(1, 2))));
        assert!(!is_contraction(&scalar(Rational::from_int(2))));
        let iso = q(&[&[1], &[0]]);
        assert!(is_contraction(&iso) && !is_strict_contraction(&iso));

        let mx2 =
            WMorphism::unweighted(Matrix::from_rows(vec![vec![RatFun::parse_literal("-x^2").unwrap()]], 1).unwrap());
        assert!(is_strictly_positive(&mx2).unwrap());
        assert!(!is_positive_endo(&mx2.negate()).unwrap().is_positive());
    }

    #[test]
    fn bounded_transform_example() {
        let bt = bounded_transform(&scalar(Rational::from_int(3)), &scalar(Rational::from_int(9))).unwrap();
        assert_eq!(bt.c, scalar(Rational::new(3, 10)));
        assert_eq!(bt.d, scalar(Rational::from_int(10)));
        assert!(is_contraction(&bt.c) && is_contraction(&bt.d_inv));
        assert!(bounded_transform(&scalar(Rational::from_int(3)), &scalar(Rational::from_int(8))).is_err());
    }

    #[test]
    fn schur_example() {
        let s = schur_inverse(
            &scalar(Rational::from_int(2)),
            &scalar(Rational::from_int(3)),
            &scalar(Rational::from_int(1)),
        )
        .unwrap();
        assert_eq!(s, scalar(Rational::new(2, 5)));
        assert_eq!(invert(&scalar(Rational::new(5, 2))).unwrap(), s);
    }
}
