//! Objects, morphisms, the weighted involution and biproducts.

use num::BigRational;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::StarField;

/// A weighted dimension `(m, α)`. Every weight is Hermitian, nonzero and
/// positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WObject<D> {
    weights: Vec<D>,
    inv_weights: Vec<D>,
}

impl<D: StarField> WObject<D> {
    pub fn new(weights: Vec<D>) -> Result<Self> {
        let mut inv_weights = Vec::with_capacity(weights.len());
        for (k, w) in weights.iter().enumerate() {
            if !w.is_hermitian() {
                return Err(Error::InvalidObject(format!("weight {k} = {w} is not hermitian")));
            }
            if w.is_zero() || !w.is_positive_hermitian() {
                return Err(Error::InvalidObject(format!("weight {k} = {w} is not positive")));
            }
            inv_weights.push(w.inv().expect("nonzero"));
        }
        Ok(WObject { weights, inv_weights })
    }

    /// `(n, (1, ..., 1))`.
    pub fn unit(n: usize) -> Self {
        WObject { weights: vec![D::one(); n], inv_weights: vec![D::one(); n] }
    }

    pub fn zero_object() -> Self {
        Self::unit(0)
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[D] {
        &self.weights
    }

    pub fn inv_weights(&self) -> &[D] {
        &self.inv_weights
    }

    /// Concatenated weights, the apex of the biproduct.
    pub fn oplus(&self, other: &WObject<D>) -> WObject<D> {
        let mut weights = self.weights.clone();
        weights.extend(other.weights.iter().cloned());
        let mut inv_weights = self.inv_weights.clone();
        inv_weights.extend(other.inv_weights.iter().cloned());
        WObject { weights, inv_weights }
    }

    /// `⟨x, y⟩ = Σ x_i* α_i^{-1} y_i`.
    pub fn inner_product(&self, x: &[D], y: &[D]) -> Result<D> {
        if x.len() != self.dim() || y.len() != self.dim() {
            return Err(Error::shape(format!(
                "inner product of lengths {} and {} on an object of dim {}",
                x.len(),
                y.len(),
                self.dim()
            )));
        }
        let mut acc = D::zero();
        for ((a, w), b) in x.iter().zip(&self.inv_weights).zip(y) {
            if !a.is_zero() && !b.is_zero() {
                acc = acc.add(&a.star().mul(w).mul(b));
            }
        }
        Ok(acc)
    }
}

/// A morphism `dom → cod`: a `cod.dim × dom.dim` matrix acting on columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WMorphism<D> {
    dom: WObject<D>,
    cod: WObject<D>,
    matrix: Matrix<D>,
}

impl<D: StarField> WMorphism<D> {
    pub fn new(dom: WObject<D>, cod: WObject<D>, matrix: Matrix<D>) -> Result<Self> {
        if matrix.shape() != (cod.dim(), dom.dim()) {
            return Err(Error::shape(format!(
                "matrix is {}x{} but dom/cod dims are {}/{}",
                matrix.rows(),
                matrix.cols(),
                dom.dim(),
                cod.dim()
            )));
        }
        Ok(WMorphism { dom, cod, matrix })
    }

    pub fn identity(x: &WObject<D>) -> Self {
        WMorphism { dom: x.clone(), cod: x.clone(), matrix: Matrix::identity(x.dim()) }
    }

    pub fn zero(dom: &WObject<D>, cod: &WObject<D>) -> Self {
        WMorphism { dom: dom.clone(), cod: cod.clone(), matrix: Matrix::zeros(cod.dim(), dom.dim()) }
    }

    /// An unweighted morphism between unit objects.
    pub fn unweighted(matrix: Matrix<D>) -> Self {
        let (r, c) = matrix.shape();
        WMorphism { dom: WObject::unit(c), cod: WObject::unit(r), matrix }
    }

    pub fn dom(&self) -> &WObject<D> {
        &self.dom
    }

    pub fn cod(&self) -> &WObject<D> {
        &self.cod
    }

    pub fn matrix(&self) -> &Matrix<D> {
        &self.matrix
    }

    pub fn into_matrix(self) -> Matrix<D> {
        self.matrix
    }

    pub fn is_endo(&self) -> bool {
        self.dom == self.cod
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn is_identity(&self) -> bool {
        self.is_endo() && self.matrix.is_identity()
    }

    /// `self ∘ f`.
    pub fn compose(&self, f: &WMorphism<D>) -> Result<WMorphism<D>> {
        if f.cod != self.dom {
            return Err(Error::shape("compose: cod(f) differs from dom(g)"));
        }
        Ok(WMorphism { dom: f.dom.clone(), cod: self.cod.clone(), matrix: self.matrix.mul(&f.matrix)? })
    }

    fn same_hom(&self, other: &WMorphism<D>, op: &str) -> Result<()> {
        if self.dom != other.dom || self.cod != other.cod {
            return Err(Error::shape(format!("{op}: morphisms have different dom/cod")));
        }
        Ok(())
    }

    pub fn add(&self, other: &WMorphism<D>) -> Result<WMorphism<D>> {
        self.same_hom(other, "add")?;
        Ok(WMorphism { matrix: self.matrix.add(&other.matrix)?, ..self.clone() })
    }

    pub fn sub(&self, other: &WMorphism<D>) -> Result<WMorphism<D>> {
        self.same_hom(other, "sub")?;
        Ok(WMorphism { matrix: self.matrix.sub(&other.matrix)?, ..self.clone() })
    }

    pub fn negate(&self) -> WMorphism<D> {
        WMorphism { matrix: self.matrix.neg(), ..self.clone() }
    }

    pub fn rational_scale(&self, q: &BigRational) -> WMorphism<D> {
        let c = D::from_rational(q);
        WMorphism { matrix: self.matrix.map(|a| a.mul(&c)), ..self.clone() }
    }

    /// Same matrix, relabelled dom and cod. The caller vouches for the shape.
    pub fn with_objects(&self, dom: WObject<D>, cod: WObject<D>) -> Result<WMorphism<D>> {
        WMorphism::new(dom, cod, self.matrix.clone())
    }

    /// `(M*)_{jk} = α_j M_{kj}* β_k^{-1}`.
    pub fn adjoint(&self) -> WMorphism<D> {
        let alpha = self.dom.weights();
        let beta_inv = self.cod.inv_weights();
        let m = &self.matrix;
        let matrix = Matrix::from_fn(self.dom.dim(), self.cod.dim(), |j, k| {
            let e = &m[(k, j)];
            if e.is_zero() {
                D::zero()
            } else {
                alpha[j].mul(&e.star()).mul(&beta_inv[k])
            }
        });
        WMorphism { dom: self.cod.clone(), cod: self.dom.clone(), matrix }
    }

    pub fn is_hermitian(&self) -> bool {
        self.is_endo() && self.adjoint() == *self
    }

    pub fn apply(&self, x: &[D]) -> Result<Vec<D>> {
        let col = Matrix::column_vector(x.to_vec());
        Ok(self.matrix.mul(&col)?.column(0))
    }

    /// `self*self`.
    pub fn gram(&self) -> WMorphism<D> {
        self.adjoint().compose(self).expect("adjoint composes")
    }

    /// `self self*`.
    pub fn cogram(&self) -> WMorphism<D> {
        self.compose(&self.adjoint()).expect("adjoint composes")
    }

    pub fn is_isometry(&self) -> bool {
        self.gram().is_identity()
    }

    pub fn is_coisometry(&self) -> bool {
        self.cogram().is_identity()
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn is_mono(&self) -> bool {
        self.rank() == self.dom.dim()
    }

    pub fn is_epi(&self) -> bool {
        self.rank() == self.cod.dim()
    }

    pub fn try_inverse(&self) -> Option<WMorphism<D>> {
        let inv = self.matrix.inverse()?;
        Some(WMorphism { dom: self.cod.clone(), cod: self.dom.clone(), matrix: inv })
    }
}

/// Orthonormal biproduct `X ⊕ Y` with its injections and projections.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Biproduct<D> {
    pub apex: WObject<D>,
    pub i1: WMorphism<D>,
    pub i2: WMorphism<D>,
    pub p1: WMorphism<D>,
    pub p2: WMorphism<D>,
}

pub fn biproduct<D: StarField>(x: &WObject<D>, y: &WObject<D>) -> Biproduct<D> {
    let apex = x.oplus(y);
    let (m, n) = (x.dim(), y.dim());
    let i1 = WMorphism {
        dom: x.clone(),
        cod: apex.clone(),
        matrix: Matrix::from_fn(m + n, m, |r, c| if r == c { D::one() } else { D::zero() }),
    };
    let i2 = WMorphism {
        dom: y.clone(),
        cod: apex.clone(),
        matrix: Matrix::from_fn(m + n, n, |r, c| if r == m + c { D::one() } else { D::zero() }),
    };
    let p1 = i1.adjoint();
    let p2 = i2.adjoint();
    Biproduct { apex, i1, i2, p1, p2 }
}

/// `[f; g] : X → Y ⊕ Z`.
pub fn pair<D: StarField>(f: &WMorphism<D>, g: &WMorphism<D>) -> Result<WMorphism<D>> {
    if f.dom != g.dom {
        return Err(Error::shape("pair: legs have different domains"));
    }
    WMorphism::new(f.dom.clone(), f.cod.oplus(&g.cod), f.matrix.vstack(&g.matrix)?)
}

/// `[f g] : X ⊕ Y → Z`.
pub fn copair<D: StarField>(f: &WMorphism<D>, g: &WMorphism<D>) -> Result<WMorphism<D>> {
    if f.cod != g.cod {
        return Err(Error::shape("copair: legs have different codomains"));
    }
    WMorphism::new(f.dom.oplus(&g.dom), f.cod.clone(), f.matrix.hstack(&g.matrix)?)
}

/// `[[a, b], [c, d]] : X1 ⊕ X2 → Y1 ⊕ Y2`.
pub fn block<D: StarField>(
    a: &WMorphism<D>,
    b: &WMorphism<D>,
    c: &WMorphism<D>,
    d: &WMorphism<D>,
) -> Result<WMorphism<D>> {
    pair(&copair(a, b)?, &copair(c, d)?)
}

/// `f ⊕ g`.
pub fn direct_sum<D: StarField>(f: &WMorphism<D>, g: &WMorphism<D>) -> WMorphism<D> {
    WMorphism { dom: f.dom.oplus(&g.dom), cod: f.cod.oplus(&g.cod), matrix: f.matrix.block_diag(&g.matrix) }
}

/// `Δ = [1; 1] : X → X ⊕ X`.
pub fn diagonal<D: StarField>(x: &WObject<D>) -> WMorphism<D> {
    let id = WMorphism::identity(x);
    pair(&id, &id).expect("same domain")
}

/// `∇ = [1 1] : X ⊕ X → X`.
pub fn codiagonal<D: StarField>(x: &WObject<D>) -> WMorphism<D> {
    let id = WMorphism::identity(x);
    copair(&id, &id).expect("same codomain")
}

/// Copair of any number of legs into a common codomain.
pub fn copair_all<D: StarField>(cod: &WObject<D>, legs: &[WMorphism<D>]) -> Result<WMorphism<D>> {
    let mut acc = WMorphism::zero(&WObject::zero_object(), cod);
    for leg in legs {
        acc = copair(&acc, leg)?;
    }
    Ok(acc)
}

/// Pair of any number of legs out of a common domain.
pub fn pair_all<D: StarField>(dom: &WObject<D>, legs: &[WMorphism<D>]) -> Result<WMorphism<D>> {
    let mut acc = WMorphism::zero(dom, &WObject::zero_object());
    for leg in legs {
        acc = pair(&acc, leg)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Gaussian, Rational};

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn obj(ws: &[(i64, i64)]) -> WObject<Rational> {
        WObject::new(ws.iter().map(|&(n, d)| r(n, d)).collect()).unwrap()
    }

    fn mat(rows: &[&[Rational]]) -> Matrix<Rational> {
        let cols = rows.first().map_or(0, |x| x.len());
        Matrix::from_rows(rows.iter().map(|x| x.to_vec()).collect(), cols).unwrap()
    }

    #[test]
    fn weighted_adjoint_row() {
        let (m1, m2) = (r(5, 7), r(-2, 3));
        let f = WMorphism::new(obj(&[(1, 1), (2, 1)]), obj(&[(3, 1)]), mat(&[&[m1.clone(), m2.clone()]])).unwrap();
        let adj = f.adjoint();
        let expected = mat(&[&[m1.mul(&r(1, 3))], &[r(2, 1).mul(&m2).mul(&r(1, 3))]]);
        assert_eq!(adj.matrix(), &expected);
        assert_eq!(adj.adjoint(), f);
    }

    #[test]
    fn inner_product_example() {
        let x = obj(&[(1, 1), (2, 1)]);
        let one = vec![r(1, 1), r(1, 1)];
        assert_eq!(x.inner_product(&one, &one).unwrap(), r(3, 2));
        let zero = vec![Rational::zero(), Rational::zero()];
        assert_eq!(x.inner_product(&zero, &one).unwrap(), Rational::zero());
        assert!(x.inner_product(&one[..1], &one).is_err());
    }

    #[test]
    fn biproduct_example() {
        let b = biproduct(&obj(&[(2, 1)]), &obj(&[(3, 1)]));
        assert_eq!(b.apex, obj(&[(2, 1), (3, 1)]));
        assert_eq!(b.p1.matrix(), &mat(&[&[r(1, 1), r(0, 1)]]));
        assert!(b.p1.compose(&b.i1).unwrap().is_identity());
        assert!(b.p2.compose(&b.i1).unwrap().is_zero());
        let split = b.i1.compose(&b.p1).unwrap().add(&b.i2.compose(&b.p2).unwrap()).unwrap();
        assert!(split.is_identity());
    }

    #[test]
    fn rejects_bad_weights() {
        assert!(WObject::new(vec![r(-1, 1)]).is_err());
        assert!(WObject::new(vec![Rational::zero()]).is_err());
        assert!(WObject::new(vec![Gaussian::i()]).is_err());
    }

    #[test]
    fn compose_checks_objects() {
        let f = WMorphism::<Rational>::identity(&obj(&[(1, 1)]));
        let g = WMorphism::<Rational>::identity(&obj(&[(2, 1)]));
        assert!(matches!(g.compose(&f), Err(Error::ShapeMismatch(_))));
        assert!(f.add(&g).is_err());
    }

    #[test]
    fn sum_formula() {
        let x = obj(&[(1, 1), (1, 2)]);
        let f = WMorphism::new(x.clone(), x.clone(), mat(&[&[r(1, 1), r(2, 1)], &[r(0, 1), r(3, 1)]])).unwrap();
        let g = WMorphism::new(x.clone(), x.clone(), mat(&[&[r(-1, 1), r(1, 1)], &[r(4, 1), r(1, 5)]])).unwrap();
        let via = codiagonal(&x).compose(&direct_sum(&f, &g).compose(&diagonal(&x)).unwrap()).unwrap();
        assert_eq!(via, f.add(&g).unwrap());
    }
}
