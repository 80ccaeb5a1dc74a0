//! Gram–Schmidt on split wide cospans and orthogonalization of Gram matrices.

use crate::category::{copair_all, WMorphism, WObject};
use crate::error::{Error, Result};
use crate::factor::solve_lift;
use crate::matrix::Matrix;
use crate::scalar::StarField;

/// Orthogonalizes `vectors` under the inner product of `obj`, in order.
/// Returns the orthogonal vectors and their squared norms `⟨e_k, e_k⟩`.
pub(crate) fn orthogonalize_vectors<D: StarField>(obj: &WObject<D>, vectors: &[Vec<D>]) -> (Vec<Vec<D>>, Vec<D>) {
    let mut basis: Vec<Vec<D>> = Vec::with_capacity(vectors.len());
    let mut norms: Vec<D> = Vec::with_capacity(vectors.len());
    for v in vectors {
        let mut w = v.clone();
        for (e, n) in basis.iter().zip(&norms) {
            let c = n.inv().expect("nonzero norm").mul(&obj.inner_product(e, &w).expect("dims"));
            if c.is_zero() {
                continue;
            }
            for (wi, ei) in w.iter_mut().zip(e) {
                *wi = wi.sub(&ei.mul(&c));
            }
        }
        norms.push(obj.inner_product(&w, &w).expect("dims"));
        basis.push(w);
    }
    (basis, norms)
}

/// A nonempty family of morphisms into one apex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WideCospan<D> {
    legs: Vec<WMorphism<D>>,
}

impl<D: StarField> WideCospan<D> {
    pub fn new(legs: Vec<WMorphism<D>>) -> Result<Self> {
        let first = legs.first().ok_or_else(|| Error::shape("a wide cospan needs at least one leg"))?;
        if legs.iter().any(|l| l.cod() != first.cod()) {
            return Err(Error::shape("cospan legs have different codomains"));
        }
        Ok(WideCospan { legs })
    }

    pub fn legs(&self) -> &[WMorphism<D>] {
        &self.legs
    }

    pub fn apex(&self) -> &WObject<D> {
        self.legs[0].cod()
    }

    /// The copair `[s_1 ... s_n]` out of the direct sum of the domains.
    pub fn block(&self) -> WMorphism<D> {
        copair_all(self.apex(), &self.legs).expect("common codomain")
    }

    /// First `m` legs as a cospan.
    pub fn prefix(&self, m: usize) -> WideCospan<D> {
        WideCospan { legs: self.legs[..m].to_vec() }
    }
}

/// Retractions `r_k` with `r_k s_j = δ_{kj}`, if the cospan is split.
pub fn is_split<D: StarField>(c: &WideCospan<D>) -> Option<Vec<WMorphism<D>>> {
    let s = c.block();
    let inv = s.gram().try_inverse()?;
    let r = inv.compose(&s.adjoint()).expect("shapes");
    let mut out = Vec::with_capacity(c.legs.len());
    let mut offset = 0;
    for leg in &c.legs {
        let d = leg.dom().dim();
        let rows: Vec<usize> = (offset..offset + d).collect();
        out.push(WMorphism::new(c.apex().clone(), leg.dom().clone(), r.matrix().select_rows(&rows)).expect("shape"));
        offset += d;
    }
    Some(out)
}

/// `t_{m+1} = s_{m+1} - Σ t_k (t_k* t_k)^{-1} t_k* s_{m+1}`.
pub fn gram_schmidt<D: StarField>(c: &WideCospan<D>) -> Result<WideCospan<D>> {
    if is_split(c).is_none() {
        return Err(Error::NotSplit);
    }
    let mut out: Vec<WMorphism<D>> = Vec::with_capacity(c.legs.len());
    let mut projectors: Vec<WMorphism<D>> = Vec::with_capacity(c.legs.len());
    for s in &c.legs {
        let mut t = s.clone();
        for p in &projectors {
            t = t.sub(&p.compose(s)?)?;
        }
        let inv = t.gram().try_inverse().ok_or(Error::NotSplit)?;
        projectors.push(t.compose(&inv)?.compose(&t.adjoint())?);
        out.push(t);
    }
    Ok(WideCospan { legs: out })
}

/// Orthogonalizes the Hermitian form `x ↦ x^† G x` on the standard basis.
///
/// Returns the object with weights `⟨e_k, e_k⟩^{-1}` and the matrix `B`
/// whose columns are the orthogonal basis, so `B^† G B` is the diagonal of
/// squared norms.
pub fn orthogonalize_gram<D: StarField>(g: &Matrix<D>) -> Result<(WObject<D>, Matrix<D>)> {
    if !g.is_square() {
        return Err(Error::shape("gram matrix must be square"));
    }
    if g.conj_transpose() != *g {
        return Err(Error::NotHermitian);
    }
    let n = g.rows();
    let form = |u: &[D], v: &[D]| -> D {
        let gv = g.mul(&Matrix::column_vector(v.to_vec())).expect("dims").column(0);
        u.iter().zip(&gv).fold(D::zero(), |acc, (a, b)| acc.add(&a.star().mul(b)))
    };
    let mut basis: Vec<Vec<D>> = Vec::with_capacity(n);
    let mut norms: Vec<D> = Vec::with_capacity(n);
    for k in 0..n {
        let mut w: Vec<D> = (0..n).map(|i| if i == k { D::one() } else { D::zero() }).collect();
        for (e, nrm) in basis.iter().zip(&norms) {
            let c = nrm.inv().expect("nonzero").mul(&form(e, &w));
            for (wi, ei) in w.iter_mut().zip(e) {
                *wi = wi.sub(&ei.mul(&c));
            }
        }
        let nrm = form(&w, &w);
        if nrm.is_zero() || !nrm.is_positive_hermitian() {
            return Err(Error::NotPositiveDefinite);
        }
        norms.push(nrm);
        basis.push(w);
    }
    let weights = norms.iter().map(|x| x.inv().expect("nonzero")).collect();
    Ok((WObject::new(weights)?, Matrix::from_columns(n, &basis)))
}

/// Whether `m = n·u` for some `u`.
pub fn factors_through<D: StarField>(m: &WMorphism<D>, n: &WMorphism<D>) -> Result<bool> {
    match solve_lift(n, m) {
        Ok(_) => Ok(true),
        Err(Error::NoSolution) => Ok(false),
        Err(e) => Err(e),
    }
}

/// Whether two monos into the same object factor through each other.
pub fn same_subobject<D: StarField>(m1: &WMorphism<D>, m2: &WMorphism<D>) -> Result<bool> {
    if !m1.is_mono() || !m2.is_mono() {
        return Err(Error::NotMono);
    }
    Ok(factors_through(m1, m2)? && factors_through(m2, m1)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::biproduct;
    use crate::scalar::{RatFun, Rational};

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn col(v: &[i64]) -> WMorphism<Rational> {
        WMorphism::unweighted(Matrix::column_vector(v.iter().map(|&x| Rational::from_int(x)).collect()))
    }

    #[test]
    fn two_leg_example() {
        let c = WideCospan::new(vec![col(&[1, 1]), col(&[0, 1])]).unwrap();
        assert!(is_split(&c).is_some());
        let t = gram_schmidt(&c).unwrap();
        assert_eq!(t.legs()[0], col(&[1, 1]));
        assert_eq!(t.legs()[1].matrix().column(0), vec![r(-1, 2), r(1, 2)]);
        assert!(t.legs()[0].adjoint().compose(&t.legs()[1]).unwrap().is_zero());
        assert_eq!(gram_schmidt(&t).unwrap(), t);
    }

    #[test]
    fn split_detection() {
        let b = biproduct(&WObject::<Rational>::unit(1), &WObject::new(vec![r(3, 1)]).unwrap());
        let c = WideCospan::new(vec![b.i1.clone(), b.i2.clone()]).unwrap();
        assert_eq!(is_split(&c).unwrap(), vec![b.p1, b.p2]);
        let dup = WideCospan::new(vec![col(&[1, 2]), col(&[1, 2])]).unwrap();
        assert!(is_split(&dup).is_none());
        assert_eq!(gram_schmidt(&dup), Err(Error::NotSplit));
    }

    #[test]
    fn gram_examples() {
        let g = Matrix::from_rows(vec![vec![r(2, 1), r(1, 1)], vec![r(1, 1), r(2, 1)]], 2).unwrap();
        let (x, b) = orthogonalize_gram(&g).unwrap();
        assert_eq!(x.weights(), &[r(1, 2), r(2, 3)]);
        let d = b.conj_transpose().mul(&g).unwrap().mul(&b).unwrap();
        assert_eq!(d, Matrix::from_rows(vec![vec![r(2, 1), r(0, 1)], vec![r(0, 1), r(3, 2)]], 2).unwrap());
        let (x, b) = orthogonalize_gram(&Matrix::<Rational>::identity(3)).unwrap();
        assert_eq!(x, WObject::unit(3));
        assert!(b.is_identity());

        let bad = Matrix::from_rows(vec![vec![r(1, 1), r(2, 1)], vec![r(2, 1), r(1, 1)]], 2).unwrap();
        assert_eq!(orthogonalize_gram(&bad), Err(Error::NotPositiveDefinite));
        let nh = Matrix::from_rows(vec![vec![r(1, 1), r(2, 1)], vec![r(0, 1), r(1, 1)]], 2).unwrap();
        assert_eq!(orthogonalize_gram(&nh), Err(Error::NotHermitian));

        let mx2 = RatFun::parse_literal("-x^2").unwrap();
        let (x, _) = orthogonalize_gram(&Matrix::from_rows(vec![vec![mx2.clone()]], 1).unwrap()).unwrap();
        assert_eq!(x.weights()[0], mx2.inv().unwrap());
    }

    #[test]
    fn subobject_comparison() {
        let m = col(&[1, 2]);
        let scaled = m.rational_scale(&num::BigRational::from_integer(3.into()));
        assert!(same_subobject(&m, &scaled).unwrap());
        let b = biproduct(&WObject::<Rational>::unit(1), &WObject::unit(1));
        assert!(!same_subobject(&b.i1, &b.i2).unwrap());
        assert_eq!(same_subobject(&col(&[0, 0]), &m), Err(Error::NotMono));
    }
}
