//! Kernels, cokernels, complements, retractions and the range factorization.

use serde::Serialize;

use crate::category::{copair, pair, WMorphism, WObject};
use crate::error::{Error, Result};
use crate::gram_schmidt::orthogonalize_vectors;
use crate::matrix::Matrix;
use crate::scalar::StarField;

/// Right-scales `v` so its first nonzero entry is one.
pub(crate) fn normalize_leading<D: StarField>(v: &mut [D]) {
    if let Some(lead) = v.iter().find(|x| !x.is_zero()) {
        let inv = lead.inv().expect("nonzero");
        if !inv.is_one() {
            for x in v.iter_mut() {
                *x = x.mul(&inv);
            }
        }
    }
}

/// Isometry whose columns are `vectors` after orthogonalization in `cod`,
/// with dom weights `⟨e_k, e_k⟩^{-1}`. The vectors must be independent.
pub(crate) fn isometry_onto<D: StarField>(cod: &WObject<D>, mut vectors: Vec<Vec<D>>) -> WMorphism<D> {
    for v in vectors.iter_mut() {
        normalize_leading(v);
    }
    let (basis, norms) = orthogonalize_vectors(cod, &vectors);
    let weights = norms.iter().map(|n| n.inv().expect("independent vectors")).collect();
    let dom = WObject::new(weights).expect("inverse norms are positive");
    WMorphism::new(dom, cod.clone(), Matrix::from_columns(cod.dim(), &basis)).expect("shape")
}

/// Isometric kernel of `f`.
pub fn kernel<D: StarField>(f: &WMorphism<D>) -> WMorphism<D> {
    isometry_onto(f.dom(), f.matrix().nullspace())
}

/// Coisometric cokernel, the adjoint of the kernel of the adjoint.
pub fn cokernel<D: StarField>(f: &WMorphism<D>) -> WMorphism<D> {
    kernel(&f.adjoint()).adjoint()
}

/// Orthogonal complement `m⊥`, the kernel of `m*`.
pub fn complement<D: StarField>(m: &WMorphism<D>) -> WMorphism<D> {
    kernel(&m.adjoint())
}

/// `(s*s)^{-1}s*`.
pub fn canonical_retraction<D: StarField>(s: &WMorphism<D>) -> Result<WMorphism<D>> {
    let inv = s.gram().try_inverse().ok_or(Error::NotClosedMono)?;
    inv.compose(&s.adjoint())
}

/// `f = j·u·e` with `j` isometric, `u` invertible and `e` coisometric.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RangeFactorization<D> {
    pub j: WMorphism<D>,
    pub u: WMorphism<D>,
    pub e: WMorphism<D>,
}

impl<D: StarField> RangeFactorization<D> {
    pub fn recompose(&self) -> Result<WMorphism<D>> {
        self.j.compose(&self.u)?.compose(&self.e)
    }
}

pub fn range_factorization<D: StarField>(f: &WMorphism<D>) -> RangeFactorization<D> {
    let c = complement(&kernel(f));
    let fc = f.compose(&c).expect("c lands in dom f");
    let cols = (0..fc.matrix().cols()).map(|k| fc.matrix().column(k)).collect();
    let j = isometry_onto(f.cod(), cols);
    let u = j.adjoint().compose(&fc).expect("j* composes with fc");
    RangeFactorization { j, u, e: c.adjoint() }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct MorphismClass {
    pub mono: bool,
    pub epi: bool,
    pub split_mono: bool,
    pub closed_mono: bool,
    pub isometry: bool,
    pub coisometry: bool,
    pub unitary: bool,
    pub partial_isometry: bool,
}

pub fn classify<D: StarField>(f: &WMorphism<D>) -> MorphismClass {
    let rank = f.rank();
    let gram = f.gram();
    let isometry = gram.is_identity();
    let coisometry = f.is_coisometry();
    let dom_id = Matrix::identity(f.dom().dim());
    MorphismClass {
        mono: rank == f.dom().dim(),
        epi: rank == f.cod().dim(),
        split_mono: f.matrix().solve_left(&dom_id).is_some(),
        closed_mono: gram.try_inverse().is_some(),
        isometry,
        coisometry,
        unitary: isometry && coisometry,
        partial_isometry: f.compose(&gram).expect("endo") == *f,
    }
}

/// A solution of a linear morphism equation, flagged when it is the only one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution<D> {
    pub morphism: WMorphism<D>,
    pub unique: bool,
}

/// Some `h` with `h·f = g`; unique exactly when `f` is epic.
pub fn solve_extension<D: StarField>(g: &WMorphism<D>, f: &WMorphism<D>) -> Result<Solution<D>> {
    if g.dom() != f.dom() {
        return Err(Error::shape("solve_extension: f and g have different domains"));
    }
    let h = f.matrix().solve_left(g.matrix()).ok_or(Error::NoSolution)?;
    Ok(Solution { morphism: WMorphism::new(f.cod().clone(), g.cod().clone(), h)?, unique: f.is_epi() })
}

/// Some `u` with `m·u = g`; unique exactly when `m` is monic.
pub fn solve_lift<D: StarField>(m: &WMorphism<D>, g: &WMorphism<D>) -> Result<Solution<D>> {
    if g.cod() != m.cod() {
        return Err(Error::shape("solve_lift: m and g have different codomains"));
    }
    let u = m.matrix().solve_right(g.matrix()).ok_or(Error::NoSolution)?;
    Ok(Solution { morphism: WMorphism::new(g.dom().clone(), m.dom().clone(), u)?, unique: m.is_mono() })
}

/// `1 + p1·e·i2 + p2·e·i1` where `e = s·r`, `r` is the cokernel of the
/// diagonal of `X ⊕ X` and `s = r*` is a section. Zero on every object.
pub fn abelian_defect<D: StarField>(x: &WObject<D>) -> Result<WMorphism<D>> {
    let b = crate::category::biproduct(x, x);
    let r = cokernel(&crate::category::diagonal(x));
    let s = r.adjoint();
    let e = s.compose(&r)?;
    let t1 = b.p1.compose(&e)?.compose(&b.i2)?;
    let t2 = b.p2.compose(&e)?.compose(&b.i1)?;
    WMorphism::identity(x).add(&t1)?.add(&t2)
}

/// Pushout of a split mono `s: A → B` along `a: A → C`, with its retraction.
#[derive(Clone, Debug)]
pub struct SplitPushout<D> {
    /// `q: B ⊕ C → P`, the cokernel of `[s; -a]`.
    pub quotient: WMorphism<D>,
    /// `q·i1: B → P`.
    pub leg_b: WMorphism<D>,
    /// `q·i2: C → P`, the pushed-out mono.
    pub leg_c: WMorphism<D>,
    /// The induced map `P → C` with `retraction·leg_c = 1`.
    pub retraction: WMorphism<D>,
}

pub fn pushout_split_mono<D: StarField>(
    s: &WMorphism<D>,
    r: &WMorphism<D>,
    a: &WMorphism<D>,
) -> Result<SplitPushout<D>> {
    if !r.compose(s)?.is_identity() {
        return Err(Error::precondition("r is not a retraction of s"));
    }
    let q = cokernel(&pair(s, &a.negate())?);
    let b = crate::category::biproduct(s.cod(), a.cod());
    let leg_b = q.compose(&b.i1)?;
    let leg_c = q.compose(&b.i2)?;
    let cocone = copair(&a.compose(r)?, &WMorphism::identity(a.cod()))?;
    let retraction = solve_extension(&cocone, &q)?.morphism;
    Ok(SplitPushout { quotient: q, leg_b, leg_c, retraction })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::biproduct;
    use crate::scalar::Rational;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn unw(rows: &[&[i64]], cols: usize) -> WMorphism<Rational> {
        WMorphism::unweighted(
            Matrix::from_rows(rows.iter().map(|x| x.iter().map(|&v| Rational::from_int(v)).collect()).collect(), cols)
                .unwrap(),
        )
    }

    #[test]
    fn kernel_of_row_of_ones() {
        let k = kernel(&unw(&[&[1, 1]], 2));
        assert_eq!(k.dom().weights(), &[r(1, 2)]);
        assert_eq!(k.matrix().column(0), vec![r(1, 1), r(-1, 1)]);
        assert!(k.is_isometry());
    }

    #[test]
    fn kernel_degenerate_cases() {
        let x = WObject::new(vec![r(1, 1), r(3, 1)]).unwrap();
        assert_eq!(kernel(&WMorphism::identity(&x)).dom().dim(), 0);
        let k = kernel(&WMorphism::zero(&x, &WObject::unit(1)));
        assert!(classify(&k).unitary);
    }

    #[test]
    fn retraction_examples() {
        let s = unw(&[&[1], &[1]], 1);
        assert_eq!(
            canonical_retraction(&s).unwrap().matrix(),
            unw(&[&[1, 1]], 2).rational_scale(&num::BigRational::new(1.into(), 2.into())).matrix()
        );
        let zero = unw(&[&[0], &[0]], 1);
        assert_eq!(canonical_retraction(&zero), Err(Error::NotClosedMono));
    }

    #[test]
    fn range_of_scalar_two() {
        let f = unw(&[&[2]], 1);
        let rf = range_factorization(&f);
        assert_eq!(rf.recompose().unwrap(), f);
        assert!(rf.j.is_isometry());
        assert!(rf.e.is_coisometry());
        assert_eq!(rf.u.matrix()[(0, 0)], r(2, 1));
    }

    #[test]
    fn classify_examples() {
        let c = classify(&unw(&[&[0, 1], &[0, 0]], 2));
        assert!(c.partial_isometry && !c.isometry && !c.mono);
        let c = classify(&unw(&[&[1], &[0]], 1));
        assert!(c.isometry && c.closed_mono && c.split_mono && c.partial_isometry && !c.epi);
    }

    #[test]
    fn extension_examples() {
        let f = unw(&[&[1], &[0]], 1);
        let sol = solve_extension(&unw(&[&[1]], 1), &f).unwrap();
        assert_eq!(sol.morphism, unw(&[&[1, 0]], 2));
        assert!(!sol.unique);
        let sol = solve_extension(&unw(&[&[1, 1]], 2), &unw(&[&[1, 1]], 2)).unwrap();
        assert_eq!(sol.morphism, unw(&[&[1]], 1));
        assert!(sol.unique);
        assert_eq!(solve_extension(&unw(&[&[1]], 1), &unw(&[&[0]], 1)), Err(Error::NoSolution));
    }

    #[test]
    fn complement_of_injection() {
        let b = biproduct(&WObject::<Rational>::unit(1), &WObject::unit(2));
        let c = complement(&b.i1);
        assert_eq!(c.dom().dim(), 2);
        assert!(solve_lift(&b.i2, &c).is_ok());
        assert!(solve_lift(&c, &b.i2).is_ok());
    }

    #[test]
    fn abelian_and_pushout() {
        let x = WObject::new(vec![r(1, 1), r(2, 5)]).unwrap();
        assert!(abelian_defect(&x).unwrap().is_zero());
        let s = unw(&[&[1], &[0]], 1);
        let ret = unw(&[&[1, 0]], 2);
        let a = unw(&[&[2], &[3]], 1);
        let po = pushout_split_mono(&s, &ret, &a).unwrap();
        assert!(po.retraction.compose(&po.leg_c).unwrap().is_identity());
        assert_eq!(po.leg_b.compose(&s).unwrap(), po.leg_c.compose(&a).unwrap());
    }
}
