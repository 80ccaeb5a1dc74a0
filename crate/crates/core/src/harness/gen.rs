//! Random instances. Everything is a pure function of the rng state.

use num::{BigInt, BigRational};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::GenConfig;
use crate::category::{biproduct, WMorphism, WObject};
use crate::error::{Error, Result};
use crate::factor::isometry_onto;
use crate::gram_schmidt::WideCospan;
use crate::matrix::Matrix;
use crate::order::bounded_transform;
use crate::scalar::{Gaussian, Poly, Quaternion, RatFun, Rational, StarField};

const RETRIES: usize = 64;

fn exhausted(what: &str) -> Error {
    Error::Verification(format!("generator for {what} exhausted its retries"))
}

/// Scalars the harness knows how to sample.
pub trait Sample: StarField {
    fn sample(rng: &mut ChaCha8Rng, cfg: &GenConfig) -> Self;
}

fn rational(rng: &mut ChaCha8Rng, cfg: &GenConfig) -> BigRational {
    let n = cfg.numerator_bound as i64;
    let d = cfg.denominator_bound as i64;
    BigRational::new(BigInt::from(rng.gen_range(-n..=n)), BigInt::from(rng.gen_range(1..=d)))
}

fn positive_rational(rng: &mut ChaCha8Rng, cfg: &GenConfig) -> BigRational {
    let n = cfg.numerator_bound as i64;
    let d = cfg.denominator_bound as i64;
    BigRational::new(BigInt::from(rng.gen_range(1..=n)), BigInt::from(rng.gen_range(1..=d)))
}

impl Sample for Rational {
    fn sample(rng: &mut ChaCha8Rng, cfg: &GenConfig) -> Self {
        Rational(rational(rng, cfg))
    }
}

impl Sample for Gaussian {
    fn sample(rng: &mut ChaCha8Rng, cfg: &GenConfig) -> Self {
        Gaussian::new(rational(rng, cfg), rational(rng, cfg))
    }
}

impl Sample for Quaternion {
    fn sample(rng: &mut ChaCha8Rng, cfg: &GenConfig) -> Self {
        Quaternion::new(rational(rng, cfg), rational(rng, cfg), rational(rng, cfg), rational(rng, cfg))
    }
}

fn poly(rng: &mut ChaCha8Rng, cfg: &GenConfig) -> Poly {
    let deg = rng.gen_range(0..=cfg.ratfun_degree_bound);
    Poly::new((0..=deg).map(|_| rational(rng, cfg)).collect())
}

impl Sample for RatFun {
    fn sample(rng: &mut ChaCha8Rng, cfg: &GenConfig) -> Self {
        // Degrees compound under elimination, so most entries are constants
        // or monomials and only a few are general fractions.
        match rng.gen_range(0..8) {
            0..=3 => RatFun::from_poly(Poly::constant(rational(rng, cfg))),
            4..=6 => {
                let k = rng.gen_range(1..=cfg.ratfun_degree_bound.max(1));
                RatFun::from_poly(Poly::monomial(rational(rng, cfg), k))
            }
            _ => {
                let num = poly(rng, cfg);
                loop {
                    if let Some(r) = RatFun::new(num.clone(), poly(rng, cfg)) {
                        return r;
                    }
                }
            }
        }
    }
}

/// Generators bound to one config and one rng stream.
pub struct Gen<'a> {
    pub rng: ChaCha8Rng,
    pub cfg: &'a GenConfig,
}

impl<'a> Gen<'a> {
    pub fn new(rng: ChaCha8Rng, cfg: &'a GenConfig) -> Self {
        Gen { rng, cfg }
    }

    pub fn dim(&mut self) -> usize {
        self.rng.gen_range(0..=self.cfg.max_dim)
    }

    pub fn dim_at_least(&mut self, lo: usize) -> usize {
        self.rng.gen_range(lo.min(self.cfg.max_dim)..=self.cfg.max_dim.max(lo))
    }

    pub fn below(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    pub fn upto(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..=n)
    }

    pub fn coin(&mut self) -> bool {
        self.rng.gen_bool(0.5)
    }

    pub fn rational(&mut self) -> BigRational {
        rational(&mut self.rng, self.cfg)
    }

    pub fn scalar<D: Sample>(&mut self) -> D {
        D::sample(&mut self.rng, self.cfg)
    }

    pub fn nonzero<D: Sample>(&mut self) -> D {
        loop {
            let a = self.scalar::<D>();
            if !a.is_zero() {
                return a;
            }
        }
    }

    /// Random Hermitian scalar: `a + a*`, `a*a - b*b` or a rational.
    pub fn hermitian_scalar<D: Sample>(&mut self) -> D {
        match self.below(3) {
            0 => {
                let a = self.scalar::<D>();
                a.add(&a.star())
            }
            1 => self.scalar::<D>().norm().sub(&self.scalar::<D>().norm()),
            _ => D::from_rational(&self.rational()),
        }
    }

    /// Nonzero positive weight: a positive rational, sometimes times `a*a`.
    pub fn weight<D: Sample>(&mut self) -> D {
        let c = D::from_rational(&positive_rational(&mut self.rng, self.cfg));
        if self.coin() {
            c
        } else {
            c.mul(&self.nonzero::<D>().norm())
        }
    }

    pub fn object<D: Sample>(&mut self, dim: usize) -> WObject<D> {
        WObject::new((0..dim).map(|_| self.weight::<D>()).collect()).expect("weights are positive")
    }

    pub fn any_object<D: Sample>(&mut self) -> WObject<D> {
        let d = self.dim();
        self.object(d)
    }

    pub fn matrix<D: Sample>(&mut self, rows: usize, cols: usize) -> Matrix<D> {
        Matrix::from_fn(rows, cols, |_, _| D::sample(&mut self.rng, self.cfg))
    }

    pub fn morphism_between<D: Sample>(&mut self, dom: &WObject<D>, cod: &WObject<D>) -> WMorphism<D> {
        let m = self.matrix(cod.dim(), dom.dim());
        WMorphism::new(dom.clone(), cod.clone(), m).expect("shape")
    }

    pub fn morphism<D: Sample>(&mut self) -> WMorphism<D> {
        let dom = self.any_object();
        let cod = self.any_object();
        self.morphism_between(&dom, &cod)
    }

    pub fn endo<D: Sample>(&mut self, x: &WObject<D>) -> WMorphism<D> {
        self.morphism_between(x, x)
    }

    /// Full column rank morphism `dom → cod`; needs `dom.dim <= cod.dim`.
    pub fn mono_between<D: Sample>(&mut self, dom: &WObject<D>, cod: &WObject<D>) -> Result<WMorphism<D>> {
        for _ in 0..RETRIES {
            let m = self.morphism_between(dom, cod);
            if m.is_mono() {
                return Ok(m);
            }
        }
        Err(exhausted("monomorphisms"))
    }

    pub fn mono<D: Sample>(&mut self) -> Result<WMorphism<D>> {
        let cod = self.any_object();
        let d = self.upto(cod.dim());
        let dom = self.object(d);
        self.mono_between(&dom, &cod)
    }

    pub fn invertible<D: Sample>(&mut self, dom: &WObject<D>, cod: &WObject<D>) -> Result<WMorphism<D>> {
        for _ in 0..RETRIES {
            let m = self.morphism_between(dom, cod);
            if m.try_inverse().is_some() {
                return Ok(m);
            }
        }
        Err(exhausted("invertible morphisms"))
    }

    /// Isometry into a random object, built from orthogonalized random
    /// columns with inverse-norm weights on the domain.
    pub fn isometry<D: Sample>(&mut self) -> Result<WMorphism<D>> {
        let m = self.mono::<D>()?;
        let cols = (0..m.dom().dim()).map(|k| m.matrix().column(k)).collect();
        let w = isometry_onto(m.cod(), cols);
        debug_assert!(w.is_isometry());
        Ok(w)
    }

    /// Isometry out of a prescribed domain, `extra` dimensions larger.
    ///
    /// The inclusion `i1: dom → dom ⊕ Z` followed by a weighted reflection
    /// `1 - 2 v (v* v)^{-1} v*` with sparse `v`, then a diagonal map `d` onto
    /// the object with weights `d_k α_k d_k*`.
    pub fn isometry_from<D: Sample>(&mut self, dom: &WObject<D>, extra: usize) -> Result<WMorphism<D>> {
        let z = self.object::<D>(extra);
        let b = biproduct(dom, &z);
        let n = b.apex.dim();
        let mut w = b.i1.clone();
        if n > 0 {
            w = self.reflection(&b.apex)?.compose(&w)?;
        }
        let d: Vec<D> = (0..n).map(|_| self.nonzero::<D>()).collect();
        let weights = (0..n).map(|k| d[k].mul(&b.apex.weights()[k]).mul(&d[k].star())).collect();
        let target = WObject::new(weights)?;
        let scale = Matrix::from_fn(n, n, |r, c| if r == c { d[r].clone() } else { D::zero() });
        let w = WMorphism::new(b.apex.clone(), target, scale)?.compose(&w)?;
        if !w.is_isometry() {
            return Err(Error::Verification("generated isometry is not isometric".into()));
        }
        Ok(w)
    }

    fn reflection<D: Sample>(&mut self, x: &WObject<D>) -> Result<WMorphism<D>> {
        let n = x.dim();
        let mut v = vec![D::zero(); n];
        for _ in 0..2 {
            let k = self.below(n);
            v[k] = self.nonzero::<D>();
        }
        let col = Matrix::column_vector(v);
        let vs = WMorphism::new(WObject::unit(1), x.clone(), col.clone())?.adjoint();
        let c = vs.matrix().mul(&col)?[(0, 0)].clone();
        let two_c_inv = D::from_int(2).mul(&c.inv().ok_or(Error::DivisionByZero)?);
        let p = col.map(|e| e.mul(&two_c_inv)).mul(vs.matrix())?;
        WMorphism::new(x.clone(), x.clone(), Matrix::identity(n).sub(&p)?)
    }

    pub fn unitary_from<D: Sample>(&mut self, dom: &WObject<D>) -> Result<WMorphism<D>> {
        self.isometry_from(dom, 0)
    }

    /// Contraction `f(1 + f*f)^{-1}` from the bounded transform.
    pub fn shrink<D: Sample>(&mut self, f: &WMorphism<D>) -> Result<WMorphism<D>> {
        Ok(bounded_transform(f, &f.gram())?.c)
    }

    /// `t s*` for isometries out of a common random object.
    pub fn partial_isometry<D: Sample>(&mut self) -> Result<WMorphism<D>> {
        let a_dim = self.upto(self.cfg.max_dim.min(3));
        let a = self.object::<D>(a_dim);
        let e1 = self.upto(2);
        let e2 = self.upto(2);
        let s = self.isometry_from(&a, e1)?;
        let t = self.isometry_from(&a, e2)?;
        t.compose(&s.adjoint())
    }

    /// Strict contraction `f (1 + tr f*f)^{-1}`; this works because
    /// `f*f ≤ tr(f*f)` for positive maps.
    pub fn scalar_shrink<D: Sample>(&mut self, f: &WMorphism<D>) -> Result<WMorphism<D>> {
        let g = f.gram();
        let mut tr = D::one();
        for k in 0..g.dom().dim() {
            tr = tr.add(&g.matrix()[(k, k)]);
        }
        let s = tr.inv().ok_or(Error::DivisionByZero)?;
        let m = f.matrix().map(|e| e.mul(&s));
        WMorphism::new(f.dom().clone(), f.cod().clone(), m)
    }

    /// A contraction of one of several shapes: shrunken random morphism,
    /// partial isometry, isometry, or zero.
    pub fn contraction<D: Sample>(&mut self) -> Result<WMorphism<D>> {
        match self.below(8) {
            0 | 1 => {
                let f = self.morphism::<D>();
                self.shrink(&f)
            }
            2 | 3 => {
                let f = self.morphism::<D>();
                self.scalar_shrink(&f)
            }
            4 | 5 => self.partial_isometry(),
            6 => self.isometry(),
            _ => {
                let (x, y) = (self.any_object(), self.any_object());
                Ok(WMorphism::zero(&x, &y))
            }
        }
    }

    /// Positive endomorphism `G*G`.
    pub fn positive<D: Sample>(&mut self, x: &WObject<D>) -> WMorphism<D> {
        let y = self.any_object::<D>();
        self.morphism_between(x, &y).gram()
    }

    /// Strictly positive endomorphism `G*G` with `G` invertible.
    pub fn strictly_positive<D: Sample>(&mut self, x: &WObject<D>) -> Result<WMorphism<D>> {
        let y = self.object::<D>(x.dim());
        Ok(self.invertible(x, &y)?.gram())
    }

    /// Hermitian endomorphism that may or may not be positive.
    pub fn hermitian<D: Sample>(&mut self, x: &WObject<D>) -> WMorphism<D> {
        match self.below(4) {
            0 => self.positive(x),
            1 => self.positive(x).sub(&self.positive(x)).expect("same object"),
            2 => {
                let m = self.endo(x);
                m.add(&m.adjoint()).expect("same object")
            }
            _ => {
                // Semidefinite with a kernel, or its negative.
                let k = self.upto(x.dim());
                let y = self.object::<D>(k);
                let h = self.morphism_between(x, &y).gram();
                if self.coin() {
                    h
                } else {
                    h.negate()
                }
            }
        }
    }

    /// Split cospan: legs whose joint block has full column rank. With
    /// `spanning` the block is square, so the legs form a coproduct.
    pub fn split_cospan<D: Sample>(&mut self, spanning: bool) -> Result<WideCospan<D>> {
        let apex = if spanning {
            self.any_object::<D>()
        } else {
            let n = self.dim_at_least(1);
            self.object::<D>(n)
        };
        let total = if spanning { apex.dim() } else { self.upto(apex.dim()) };
        let mut dims = Vec::new();
        let mut left = total;
        let legs_wanted = 1 + self.below(3);
        for k in 0..legs_wanted {
            let d = if k + 1 == legs_wanted { left } else { self.upto(left) };
            dims.push(d);
            left -= d;
        }
        let block_dom = self.object::<D>(total);
        let block = self.mono_between(&block_dom, &apex)?;
        let mut legs = Vec::new();
        let mut offset = 0;
        for d in dims {
            let dom = self.object::<D>(d);
            let m = block.matrix().submatrix(0..apex.dim(), offset..offset + d);
            legs.push(WMorphism::new(dom, apex.clone(), m)?);
            offset += d;
        }
        WideCospan::new(legs)
    }
}
