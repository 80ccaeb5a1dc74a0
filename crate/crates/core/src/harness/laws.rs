//! The law table. Each law draws its own instance and checks one family of
//! identities exactly.

use num::BigRational;

use super::gen::{Gen, Sample};
use crate::category::{biproduct, block, codiagonal, copair, diagonal, direct_sum, pair, WMorphism, WObject};
use crate::dilation::{
    codilator, codilator_partial_isometry, codilator_strict, douglas_extension, mediating_isometry,
    pushout_of_isometries, Codilation, CodilatorCertificate, CodilatorKind,
};
use crate::document::Document;
use crate::error::Error;
use crate::factor::{
    abelian_defect, canonical_retraction, classify, cokernel, complement, kernel, pushout_split_mono,
    range_factorization, solve_extension, solve_lift,
};
use crate::gram_schmidt::{factors_through, gram_schmidt, is_split, orthogonalize_gram, same_subobject};
use crate::matrix::Matrix;
use crate::order::{
    bounded_transform, invert, is_contraction, is_positive_endo, is_strict_contraction, is_strictly_positive, le,
    schur_inverse,
};
use crate::scalar::{Poly, RatFun, RingId, StarField};

/// How the involution under test is computed.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Involution {
    #[default]
    Weighted,
    /// Deliberately wrong: negates every entry of the adjoint.
    NegatedForTesting,
}

pub enum Outcome {
    Held,
    Vacuous,
}

pub enum LawError {
    Violated(String),
    Engine(Error),
}

impl From<Error> for LawError {
    fn from(e: Error) -> Self {
        LawError::Engine(e)
    }
}

pub type Check = Result<Outcome, LawError>;

/// One sampled case: the generator, the involution, and the recorded inputs.
pub struct Case<'a, D> {
    pub gen: Gen<'a>,
    involution: Involution,
    inputs: Vec<(String, WMorphism<D>)>,
}

impl<'a, D: Sample> Case<'a, D> {
    pub fn new(gen: Gen<'a>, involution: Involution) -> Self {
        Case { gen, involution, inputs: Vec::new() }
    }

    /// Records a sampled input for the counterexample document.
    pub fn note(&mut self, name: &str, m: &WMorphism<D>) {
        self.inputs.push((name.to_string(), m.clone()));
    }

    pub fn adjoint(&self, f: &WMorphism<D>) -> WMorphism<D> {
        match self.involution {
            Involution::Weighted => f.adjoint(),
            Involution::NegatedForTesting => f.adjoint().negate(),
        }
    }

    pub fn document(&self) -> Document {
        let mut doc = Document::new(D::RING);
        for (name, m) in &self.inputs {
            doc.insert_fresh_morphism(name, m);
        }
        doc
    }
}

fn ensure(cond: bool, msg: &str) -> Result<(), LawError> {
    if cond {
        Ok(())
    } else {
        Err(LawError::Violated(msg.to_string()))
    }
}

fn scalar_morphism<D: StarField>(a: &D) -> WMorphism<D> {
    WMorphism::unweighted(Matrix::from_rows(vec![vec![a.clone()]], 1).expect("1x1"))
}

pub struct Law<D> {
    pub name: &'static str,
    pub run: fn(&mut Case<'_, D>) -> Check,
}

macro_rules! laws {
    ($($name:literal => $f:ident),* $(,)?) => {
        vec![$(Law { name: $name, run: $f::<D> }),*]
    };
}

/// Every law that applies to the ring of `D`, in a fixed order.
pub fn table<D: Sample>() -> Vec<Law<D>> {
    let mut t = laws![
        "scalar.star_is_anti_automorphism" => scalar_star,
        "scalar.division_ring_axioms" => scalar_division,
        "scalar.anisotropy" => scalar_anisotropy,
        "scalar.cone_and_total_order" => scalar_order,
        "scalar.literal_round_trip" => scalar_literal,
        "core.category_and_additive_laws" => core_category,
        "core.involution_laws" => core_involution,
        "core.star_additive" => core_star_additive,
        "core.adjoint_inner_product" => core_adjoint_inner,
        "core.adjoint_parseval_oracle" => core_parseval,
        "core.inner_product_axioms" => core_inner_axioms,
        "core.sum_formula" => core_sum_formula,
        "core.matrix_anisotropy" => core_anisotropy,
        "core.orthogonal_block_adjoint" => core_orthogonal_block,
        "core.rational_linearity" => core_rational_linearity,
        "axiom.R1_H1.zero_object" => axiom_zero_object,
        "axiom.R2_H2.orthonormal_biproduct" => axiom_biproduct,
        "axiom.R3.isometric_kernel" => axiom_kernel,
        "axiom.R4.diagonal_is_normal" => axiom_diagonal_normal,
        "axiom.H3.isometric_equaliser" => axiom_equaliser,
        "axiom.H4.isometry_is_normal" => axiom_isometry_normal,
        "factor.cokernel_universal" => factor_cokernel,
        "factor.complement_splitting" => factor_complement_splitting,
        "factor.orthogonal_coproduct_extension" => factor_orthogonal_coproduct,
        "factor.complement_inequations" => factor_complement_inequations,
        "factor.canonical_retraction" => factor_retraction,
        "factor.range_factorization" => factor_range,
        "factor.classification_implications" => factor_classify,
        "factor.solve_extension" => factor_solve_extension,
        "factor.abelian_objects" => factor_abelian,
        "factor.pushout_stability" => factor_pushout,
        "gs.postconditions" => gs_post,
        "gs.idempotent" => gs_idempotent,
        "gs.coproduct_becomes_orthogonal" => gs_coproduct,
        "gs.orthogonalize_gram" => gs_gram,
        "order.certificates" => order_certificates,
        "order.axioms" => order_axioms,
        "order.antisymmetry" => order_antisymmetry,
        "order.inverse_closure" => order_inverse_closure,
        "order.schur_identity" => order_schur,
        "order.contraction_closure" => order_contraction_closure,
        "order.contractive_split_monos_are_isometric" => order_split_contraction,
        "order.positive_block_criterion" => order_positive_block,
        "order.bounded_transform" => order_bounded_transform,
        "order.generators" => order_generators,
        "dilation.codilation_gram_identity" => dil_codilators,
        "dilation.codilator_universality" => dil_universality,
        "dilation.strict_agreement" => dil_strict_agreement,
        "dilation.degenerate_codilators" => dil_degenerate,
        "dilation.douglas_converse" => dil_douglas_converse,
        "dilation.douglas_extension" => dil_douglas_extension,
        "dilation.extension_classification" => dil_extension_classification,
        "dilation.isometry_pushout" => dil_pushout,
    ];
    if D::RING == RingId::Ratfun {
        t.insert(5, Law { name: "scalar.no_hermitian_sqrt_of_minus_x2", run: ratfun_no_sqrt::<D> });
    }
    t
}

// ---------------------------------------------------------------- scalars

fn scalar_star<D: Sample>(cx: &mut Case<'_, D>) -> Check {
    let (a, b) = (cx.gen.scalar::<D>(), cx.gen.scalar::<D>());
    cx.note("a", &scalar_morphism(&a));
    cx.note("b", &scalar_morphism(&b));
    ensure(a.mul(&b).star() == b.star().mul(&a.star()), "(ab)* != b*a*")?;
    ensure(a.star().star() == a, "(a*)* != a")?;
    ensure(a.add(&b).star() == a.star().add(&b.star()), "(a+b)* != a*+b*")?;
    ensure(D::one().star() == D::one(), "1* != 1")?;
    ensure(D::from_rational(&cx.gen.rational()).is_hermitian(), "rationals are not fixed")?;
    Ok(Outcome::Held)
}

fn scalar_division<D: Sample>(cx: &mut Case<'_, D>) -> Check {
    let (a, b, c) = (cx.gen.scalar::<D>(), cx.gen.scalar::<D>(), cx.gen.scalar::<D>());
    cx.note("a", &scalar_morphism(&a));
    cx.note("b", &scalar_morphism(&b));
    cx.note("c", &scalar_morphism(&c));
    ensure(a.mul(&b).mul(&c) == a.mul(&b.mul(&c)), "multiplication is not associative")?;
    ensure(a.mul(&b.add(&c)) == a.mul(&b).add(&a.mul(&c)), "left distributivity fails")?;
    ensure(a.add(&b).mul(&c) == a.mul(&c).add(&b.mul(&c)), "right distributivity fails")?;
    ensure(a.add(&a.neg()).is_zero(), "a + (-a) != 0")?;
    match a.inv() {
        None => ensure(a.is_zero(), "nonzero element without inverse")?,
        Some(i) => {
            ensure(a.mul(&i).is_one() && i.mul(&a).is_one(), "inverse is not two-sided")?;
        }
    }
    ensure(D::zero().inv().is_none(), "zero has an inverse")?;
    Ok(Outcome::Held)
}

fn scalar_anisotropy<D: Sample>(cx: &mut Case<'_, D>) -> Check {
    let a = cx.gen.scalar::<D>();
    cx.note("a", &scalar_morphism(&a));
    let n = a.norm();
    ensure(n.is_zero() == a.is_zero(), "a*a = 0 for nonzero a")?;
    ensure(n.is_hermitian(), "a*a is not hermitian")?;
    ensure(n.is_positive_hermitian(), "a*a is not positive")?;
    Ok(Outcome::Held)
}

fn scalar_order<D: Sample>(cx: &mut Case<'_, D>) -> Check {
    let h = cx.gen.hermitian_scalar::<D>();
    let p = cx.gen.weight::<D>();
    let q = cx.gen.scalar::<D>().norm();
    let r = cx.gen.scalar::<D>();
    cx.note("h", &scalar_morphism(&h));
    cx.note("p", &scalar_morphism(&p));
    cx.note("r", &scalar_morphism(&r));
    ensure(h.is_hermitian(), "sampled hermitian scalar is not hermitian")?;
    let cases =
        [h.is_zero(), !h.is_zero() && h.is_positive_hermitian(), !h.is_zero() && h.neg().is_positive_hermitian()];
    ensure(cases.iter().filter(|&&x| x).count() == 1, "trichotomy fails on the hermitian part")?;
    ensure(p.add(&q).is_positive_hermitian(), "cone is not closed under addition")?;
    ensure(r.star().mul(&p).mul(&r).is_positive_hermitian(), "r*pr is not positive")?;
    ensure(D::one().is_positive_hermitian(), "1 is not positive")?;
    ensure(!p.neg().is_positive_hermitian(), "P and -P meet outside zero")?;
    Ok(Outcome::Held)
}

fn scalar_literal<D: Sample>(cx: &mut Case<'_, D>) -> Check {
    let a = cx.gen.scalar::<D>();
    cx.note("a", &scalar_morphism(&a));
    let parsed = D::parse_literal(&a.to_string())?;
    ensure(parsed == a, "literal does not round-trip")?;
    Ok(Outcome::Held)
}

fn ratfun_no_sqrt<D: Sample>(cx: &mut Case<'_, D>) -> Check {
    let target = D::parse_literal("-x^2")?;
    ensure(target.is_positive_hermitian(), "-x^2 is not positive")?;
    // Monomial candidates c x^k with small k and sampled c.
    for k in 0..=6usize {
        let c = cx.gen.rational();
        let lit = RatFun::from_poly(Poly::monomial(c, k)).to_string();
        let h = D::parse_literal(&lit)?;
        if h.is_hermitian() {
            ensure(h.mul(&h) != target, "found a hermitian square root of -x^2")?;
        }
    }
    let h = cx.gen.hermitian_scalar::<D>();
    cx.note("h", &scalar_morphism(&h));
    ensure(h.mul(&h) != target, "found a hermitian square root of -x^2")?;
    if !h.is_zero() {
        let sq = RatFun::parse_literal(&h.mul(&h).to_string())?;
        let (v, _) = sq.laurent_leading()?;
        ensure(v.rem_euclid(4) == 0, "square of a hermitian element has valuation not divisible by 4")?;
    }
    Ok(Outcome::Held)
}

// ---------------------------------------------------------------- core

fn core_category<D: Sample>(cx: &mut Case<'_, D>) -> Check {
    let f = cx.gen.morphism::<D>();
    let y = f.cod().clone();
    let z = cx.gen.any_object::<D>();
    let w = cx.gen.any_object::<D>();
    let g = cx.gen.morphism_between(&y, &z);
    let h = cx.gen.morphism_between(&z, &w);
    let f2 = cx.gen.morphism_between(f.dom(), &y);
    cx.note("f", &f);
    cx.note("g", &g);
    cx.note("h", &h);
    cx.note("f2", &f2);
    ensure(WMorphism::identity(&y).compose(&f)? == f, "1 f != f")?;
    ensure(f.compose(&WMorphism::identity(f.dom()))? == f, "f 1 != f")?;
    ensure(h.compose(&g)?.compose(&f)? == h.compose(&g.compose(&f)?)?, "composition is not associative")?;
    ensure(f.add(&f.negate())?.is_zero(), "f + (-f) != 0")?;
    ensure(f.add(&f2)? == f2.add(&f)?, "addition is not commutative")?;
    ensure(g.compose(&f.add(&f2)?)? == g.compose(&f)?.add(&g.compose(&f2)?)?, "composition is not bilinear")?;
    Ok(Outcome::Held)
}

fn core_involution<D: Sample>(cx: &mut Case<'_, D>) -> Check {
    let f = cx.gen.morphism::<D>();
    let z = cx.gen.any_object::<D>();
    let g = cx.gen.morphism_between(f.cod(), &z);
    cx.note("f", &f);
    cx.note("g", &g);
    let lhs = cx.adjoint(&g.compose(&f)?);
    let rhs = cx.adjoint(&f).compose(&cx.adjoint(&g))?;
    ensure(lhs == rhs, "(gf)* = f*g* fails")?;
    ensure(cx.adjoint(&cx.adjoint(&f)) == f, "(f*)* = f fails")?;
    let id = WMorphism::identity(f.dom());
    ensure(cx.adjoint(&id) == id, "1* = 1 fails")?;
    Ok(Outcome::Held)
}

fn core_star_additive<D: Sample>(cx: &mut Case<'_, D>) -> Check {
    let f = cx.gen.morphism::<D>();
    let g = cx.gen.morphism_between(f.dom(), f.cod());
    cx.note("f", &f);
    cx.note("g", &g);
    ensure(f.add(&g)?.adjoint() == f.adjoint().add(&g.adjoint())?, "(f+g)* != f*+g*")?;
    Ok(Outcome::Held)
}

fn random_vec<D: Sample>(gen: &mut Gen<'_>, n: usize) -> Vec<D> {
    (0..n).map(|_| gen.scalar::<D>()).collect()
}

fn core_adjoint_inner<D: Sample>(cx: &mut Case<'_, D>) -> Check {
    let f = cx.gen.morphism::<D>();
    cx.note("f", &f);
    let x = random_vec::<D>(&mut cx.gen, f.dom().dim());
    let y = random_vec::<D>(&mut cx.gen, f.cod().dim());
    let lhs = f.dom().inner_product(&f.adjoint().apply(&y)?, &x)?;
    let rhs = f.cod().inner_product(&y, &f.apply(&x)?)?;
    ensure(lhs == rhs, "<f* y, x> != <y, f x>")?;
    Ok(Outcome::Held)
}

/// `g y = Σ_k e_k ⟨e_k, e_k⟩^{-1} ⟨f e_k, y⟩`, from inner products alone.
pub fn parseval_adjoint<D: StarField>(f: &WMorphism<D>) -> crate::error::Result<WMorphism<D>> {
    let (m, n) = (f.dom().dim(), f.cod().dim());
    let basis =
        |len: usize, k: usize| -> Vec<D> { (0..len).map(|i| if i == k { D::one() } else { D::zero() }).collect() };
    let mut out = Matrix::zeros(m, n);
    for l in 0..n {
        let y = basis(n, l);
        for k in 0..m {
            let e = basis(m, k);
            let norm = f.dom().inner_product(&e, &e)?;
            let coef = norm.inv().ok_or(Error::DivisionByZero)?.mul(&f.cod().inner_product(&f.apply(&e)?, &y)?);
            out[(k, l)] = coef;
        }
    }
    WMorphism::new(f.cod().clone(), f.dom().clone(), out)
}

fn core_parseval<D: Sample>(cx: &mut Case<'_, D>) -> Check {
    let f = cx.gen.morphism::<D>();
    cx.note("f", &f);
    ensure(parseval_adjoint(&f)? == f.adjoint(), "weighted adjoint differs from the Parseval adjoint")?;
    Ok(Outcome::Held)
}

fn core_inner_axioms<D: Sample>(cx: &mut Case<'_, D>) -> Check {
    let x_obj = cx.gen.any_object::<D>();
    cx.note("X", &WMorphism::identity(&x_obj));
    let n = x_obj.dim();
    let x = random_vec::<D>(&mut cx.gen, n);
    let y = random_vec::<D>(&mut cx.gen, n);
    let z = random_vec::<D>(&mut cx.gen, n);
    let a = cx.gen.scalar::<D>();
    let ip = |u: &[D], v: &[D]| x_obj.inner_product(u, v);
    ensure(ip(&x, &y)?.star() == ip(&y, &x)?, "<x,y>* != <y,x>")?;
    let yaz: Vec<D> = y.iter().zip(&z).map(|(yi, zi)| yi.mul(&a).add(zi)).collect();
    ensure(ip(&x, &yaz)? == ip(&x, &y)?.mul(&a).add(&ip(&x, &z)?), "not linear in the second argument")?;
    let xx = ip(&x, &x)?;
    ensure(xx.is_hermitian() && xx.is_positive_hermitian(), "<x,x> is not positive")?;
    ensure(xx.is_zero() == x.iter().all(StarField::is_zero), "<x,x> = 0 for nonzero x")?;
    Ok(Outcome::Held)
}

fn core_sum_formula<D: Sample>(cx: &mut Case<'_, D>) -> Check {
    let f = cx.gen.morphism::<D>();
    let g = cx.gen.morphism_between(f.dom(), f.cod());
    cx.note("f", &f);
    cx.note("g", &g);
    let via = codiagonal(f.cod()).compose(&direct_sum(&f, &g).compose(&diagonal(f.dom()))?)?;
    ensure(via == f.add(&g)?, "f + g != codiag (f + g) diag")?;
    Ok(Outcome::Held)
}

fn core_anisotropy<D: Sample>(cx: &mut Case<'_, D>) -> Check {
    let f = cx.gen.morphism::<D>();
    cx.note("f", &f);
    ensure(f.gram().is_zero() == f.is_zero(), "f*f = 0 for nonzero f")?;
    Ok(Outcome::Held)
}

/// Orthogonal injections and their canonical retractions for a random
/// orthogonal coproduct decomposition.
type Legs<D> = Vec<(WMorphism<D>, WMorphism<D>)>;

fn orthogonal_decomposition<D: Sample>(gen: &mut Gen<'_>) -> Result<Legs<D>, LawError> {
    let c = gen.split_cospan::<D>(true)?;
    let t = gram_schmidt(&c)?;
    let mut out = Vec::new();
    for leg in t.legs() {
        out.push((leg.clone(), canonical_retraction(leg)?));
    }
    Ok(out)
}

fn core_orthogonal_block<D: Sample>(cx: &mut Case<'_, D>) -> Check {
    let a = orthogonal_decomposition::<D>(&mut cx.gen)?;
    let b = orthogonal_decomposition::<D>(&mut cx.gen)?;
    let f = cx.gen.morphism_between(a[0].0.cod(), b[0].0.cod());
    cx.note("f", &f);
    for (k, (s, _)) in a.iter().enumerate() {
        cx.note(&format!("s{k}"), s);
    }
    for (k, (t, _)) in b.iter().enumerate() {
        cx.note(&format!("t{k}"), t);
    }
    let fs = f.adjoint();
    for (s_j, r_j) in &a {
        for (t_k, q_k) in &b {
            let lhs = r_j.compose(&fs)?.compose(t_k)?;
            let rhs = invert(&s_j.gram())?.compose(&q_k.compose(&f)?.compose(s_j)?.adjoint())?.compose(&t_k.gram())?;
            ensure(lhs == rhs, "block of f* differs from the orthogonal block formula")?;
        }
    }
    Ok(Outcome::Held)
}

fn core_rational_linearity<D: Sample>(cx: &mut Case<'_, D>) -> Check {
    let f = cx.gen.morphism::<D>();
    let z = cx.gen.any_object::<D>();
    let g = cx.gen.morphism_between(f.cod(), &z);
    cx.note("f", &f);
    cx.note("g", &g);
    let q: BigRational = cx.gen.rational();
    let gf = g.compose(&f)?;
    ensure(g.rational_scale(&q).compose(&f)? == gf.rational_scale(&q), "(qg)f != q(gf)")?;
    ensure(g.compose(&f.rational_scale(&q))? == gf.rational_scale(&q), "g(qf) != q(gf)")?;
    ensure(f.rational_scale(&q).adjoint() == f.adjoint().rational_scale(&q), "(qf)* != q f*")?;
    Ok(Outcome::Held)
}

// ---------------------------------------------------------------- axioms

fn axiom_zero_object<D: Sample>(cx: &mut Case<'_, D>) -> Check {
    let x = cx.gen.any_object::<D>();
    let y = cx.gen.any_object::<D>();
    cx.note("X", &WMorphism::identity(&x));
    let o = WObject::<D>::zero_object();
    let to = WMorphism::zero(&x, &o);
    let from = WMorphism::zero(&o, &y);
    ensure(
        to.matrix().shape() == (0, x.dim()) && from.matrix().shape() == (y.dim(), 0),
        "zero object homs are not empty",
    )?;
    ensure(from.compose(&to)?.is_zero(), "morphism through zero object is nonzero")?;
    let b = biproduct(&o, &x);
    ensure(classify(&b.i2).unitary, "X -> O + X is not unitary")?;
    ensure(kernel(&WMorphism::identity(&x)).dom().dim() == 0, "kernel of identity is not zero")?;
    Ok(Outcome::Held)
}

fn axiom_biproduct<D: Sample>(cx: &mut Case<'_, D>) -> Check {
    let x = cx.gen.any_object::<D>();
    let y = cx.gen.any_object::<D>();
    let w = cx.gen.any_object::<D>();
    let f = cx.gen.morphism_between(&w, &x);
    let g = cx.gen.morphism_between(&w, &y);
    cx.note("f", &f);
    cx.note("g", &g);
    let b = biproduct(&x, &y);
    ensure(b.p1 == b.i1.adjoint() && b.p2 == b.i2.adjoint(), "projections are not adjoint injections")?;
    ensure(b.p1.compose(&b.i1)?.is_identity() && b.p2.compose(&b.i2)?.is_identity(), "p_k i_k != 1")?;
    ensure(b.p2.compose(&b.i1)?.is_zero() && b.p1.compose(&b.i2)?.is_zero(), "p_j i_k != 0")?;
    ensure(b.i1.compose(&b.p1)?.add(&b.i2.compose(&b.p2)?)?.is_identity(), "i1 p1 + i2 p2 != 1")?;
    let pr = pair(&f, &g)?;
    ensure(b.p1.compose(&pr)? == f && b.p2.compose(&pr)? == g, "pair is not universal")?;
    let cp = copair(&f.adjoint(), &g.adjoint())?;
    ensure(cp.compose(&b.i1)? == f.adjoint() && cp.compose(&b.i2)? == g.adjoint(), "copair is not universal")?;
    Ok(Outcome::Held)
}

/// A morphism `W → dom(f)` killed by `f`, drawn from the nullspace.
fn killed_by<D: Sample>(gen: &mut Gen<'_>, f: &WMorphism<D>) -> WMorphism<D> {
    let ns = f.matrix().nullspace();
    let n = Matrix::from_columns(f.dom().dim(), &ns);
    let w_dim = gen.upto(3);
    let w = gen.object::<D>(w_dim);
    let h = gen.matrix::<D>(ns.len(), w.dim());
    WMorphism::new(w, f.dom().clone(), n.mul(&h).expect("shapes")).expect("shape")
}

fn axiom_kernel<D: Sample>(cx: &mut Case<'_, D>) -> Check {
    let f = cx.gen.morphism::<D>();
    cx.note("f", &f);
    let k = kernel(&f);
    ensure(k.is_isometry(), "kernel is not isometric")?;
    ensure(f.compose(&k)?.is_zero(), "f k != 0")?;
    let g = killed_by(&mut cx.gen, &f);
    cx.note("g", &g);
    ensure(f.compose(&g)?.is_zero(), "sampled g is not killed by f")?;
    let sol = solve_lift(&k, &g)?;
    ensure(sol.unique, "factorization through the kernel is not unique")?;
    ensure(k.compose(&sol.morphism)? == g, "factorization does not recompose")?;
    Ok(Outcome::Held)
}

fn axiom_diagonal_normal<D: Sample>(cx: &mut Case<'_, D>) -> Check {
    let x = cx.gen.any_object::<D>();
    cx.note("X", &WMorphism::identity(&x));
    let one = WMorphism::identity(&x);
    let delta = diagonal(&x);
    let diff = copair(&one, &one.negate())?;
    ensure(diff.compose(&delta)?.is_zero(), "[1, -1] diag != 0")?;
    let k = kernel(&diff);
    ensure(same_subobject(&delta, &k)?, "diagonal is not the kernel of [1, -1]")?;
    let w = cx.gen.any_object::<D>();
    let h = cx.gen.morphism_between(&w, &x);
    let g = pair(&h, &h)?;
    let sol = solve_lift(&delta, &g)?;
    ensure(sol.unique && sol.morphism == h, "diagonal is not universal")?;
    Ok(Outcome::Held)
}

fn axiom_equaliser<D: Sample>(cx: &mut Case<'_, D>) -> Check {
    let f = cx.gen.morphism::<D>();
    // g agrees with f on a random subspace.
    let w_dim = cx.gen.upto(f.dom().dim());
    let w = cx.gen.object::<D>(w_dim);
    let d = cx.gen.morphism_between(&w, f.cod()).compose(&cx.gen.morphism_between(f.dom(), &w))?;
    let g = f.add(&d)?;
    cx.note("f", &f);
    cx.note("g", &g);
    let diff = f.sub(&g)?;
    let m = kernel(&diff);
    ensure(m.is_isometry(), "equaliser is not isometric")?;
    ensure(f.compose(&m)? == g.compose(&m)?, "f m != g m")?;
    let h = killed_by(&mut cx.gen, &diff);
    ensure(f.compose(&h)? == g.compose(&h)?, "sampled h does not equalise")?;
    let sol = solve_lift(&m, &h)?;
    ensure(sol.unique && m.compose(&sol.morphism)? == h, "equaliser is not universal")?;
    Ok(Outcome::Held)
}

fn axiom_isometry_normal<D: Sample>(cx: &mut Case<'_, D>) -> Check {
    let m = cx.gen.isometry::<D>()?;
    cx.note("m", &m);
    let p = WMorphism::identity(m.cod()).sub(&m.cogram())?;
    ensure(p.compose(&m)?.is_zero(), "(1 - m m*) m != 0")?;
    ensure(same_subobject(&kernel(&p), &m)?, "m is not the kernel of 1 - m m*")?;
    Ok(Outcome::Held)
}

// ---------------------------------------------------------------- factorizations

fn factor_cokernel<D: Sample>(cx: &mut Case<'_, D>) -> Check {
    let f = cx.gen.morphism::<D>();
    cx.note("f", &f);
    let c = cokernel(&f);
    ensure(c.is_coisometry(), "cokernel is not coisometric")?;
    ensure(c.compose(&f)?.is_zero(), "c f != 0")?;
    let g = killed_by(&mut cx.gen, &f.adjoint()).adjoint();
    ensure(g.compose(&f)?.is_zero(), "sampled g does not kill f")?;
    let sol = solve_extension(&g, &c)?;
    ensure(sol.unique && sol.morphism.compose(&c)? == g, "cokernel is not universal")?;
    Ok(Outcome::Held)
}

fn factor_complement_splitting<D: Sample>(cx: &mut Case<'_, D>) -> Check {
    let s = cx.gen.isometry::<D>()?;
    cx.note("s", &s);
    let sp = complement(&s);
    ensure(sp.is_isometry(), "complement is not isometric")?;
    ensure(classify(&copair(&s, &sp)?).unitary, "[s s_perp] is not unitary")?;
    ensure(s.cogram().add(&sp.cogram())?.is_identity(), "s s* + s_perp s_perp* != 1")?;
    Ok(Outcome::Held)
}

fn factor_orthogonal_coproduct<D: Sample>(cx: &mut Case<'_, D>) -> Check {
    let legs = orthogonal_decomposition::<D>(&mut cx.gen)?;
    for (k, (s, _)) in legs.iter().enumerate() {
        cx.note(&format!("s{k}"), s);
    }
    let apex = legs[0].0.cod().clone();
    let mut sum = WMorphism::zero(&apex, &apex);
    for (j, (s_j, r_j)) in legs.iter().enumerate() {
        for (k, (s_k, _)) in legs.iter().enumerate() {
            let rs = r_j.compose(s_k)?;
            ensure(if j == k { rs.is_identity() } else { rs.is_zero() }, "r_j s_k != delta_jk")?;
        }
        let e = s_j.compose(r_j)?;
        ensure(e.is_hermitian(), "s_k r_k is not hermitian")?;
        sum = sum.add(&e)?;
    }
    ensure(sum.is_identity(), "sum of s_k r_k != 1")?;
    Ok(Outcome::Held)
}

fn factor_complement_inequations<D: Sample>(cx: &mut Case<'_, D>) -> Check {
    let m = cx.gen.mono::<D>()?;
    cx.note("m", &m);
    let mp = complement(&m);
    let mpp = complement(&mp);
    let mppp = complement(&mpp);
    ensure(factors_through(&m, &mpp)?, "m <= m_perp_perp fails")?;
    ensure(same_subobject(&mppp, &mp)?, "m_perp_perp_perp != m_perp")?;
    ensure(m.adjoint().compose(&mp)?.is_zero(), "m* m_perp != 0")?;
    Ok(Outcome::Held)
}

fn factor_retraction<D: Sample>(cx: &mut Case<'_, D>) -> Check {
    let s = cx.gen.mono::<D>()?;
    cx.note("s", &s);
    let r = canonical_retraction(&s)?;
    ensure(r.compose(&s)?.is_identity(), "r s != 1")?;
    ensure(s.compose(&r)?.is_hermitian(), "s r is not hermitian")?;
    let iso = cx.gen.isometry::<D>()?;
    cx.note("iso", &iso);
    ensure(canonical_retraction(&iso)? == iso.adjoint(), "retraction of an isometry is not its adjoint")?;
    Ok(Outcome::Held)
}

fn factor_range<D: Sample>(cx: &mut Case<'_, D>) -> Check {
    let f = if cx.gen.coin() { cx.gen.morphism::<D>() } else { cx.gen.contraction::<D>()? };
    cx.note("f", &f);
    let rf = range_factorization(&f);
    ensure(rf.j.is_isometry(), "j is not isometric")?;
    ensure(rf.e.is_coisometry(), "e is not coisometric")?;
    ensure(rf.u.try_inverse().is_some(), "u is not invertible")?;
    ensure(rf.recompose()? == f, "j u e != f")?;
    ensure(rf.e == complement(&kernel(&f)).adjoint(), "e is not the complement of the kernel")?;
    Ok(Outcome::Held)
}

fn factor_classify<D: Sample>(cx: &mut Case<'_, D>) -> Check {
    let f = match cx.gen.below(5) {
        0 => cx.gen.morphism::<D>(),
        1 => cx.gen.isometry::<D>()?,
        2 => {
            let x = cx.gen.any_object::<D>();
            cx.gen.unitary_from(&x)?
        }
        3 => cx.gen.partial_isometry::<D>()?,
        _ => cx.gen.mono::<D>()?,
    };
    cx.note("f", &f);
    let c = classify(&f);
    ensure(!c.unitary || (c.isometry && c.coisometry), "unitary without iso and coiso")?;
    ensure(!c.isometry || c.closed_mono, "isometry that is not closed")?;
    ensure(!c.closed_mono || c.split_mono, "closed mono that is not split")?;
    ensure(!c.split_mono || c.mono, "split mono that is not mono")?;
    ensure(!c.coisometry || c.epi, "coisometry that is not epi")?;
    ensure(!c.isometry || c.partial_isometry, "isometry that is not a partial isometry")?;
    ensure(c.mono == c.closed_mono, "mono and closed mono differ")?;
    ensure(c.isometry == f.is_isometry(), "isometry flag is wrong")?;
    Ok(Outcome::Held)
}

fn factor_solve_extension<D: Sample>(cx: &mut Case<'_, D>) -> Check {
    let f = cx.gen.morphism::<D>();
    let z = cx.gen.any_object::<D>();
    let h = cx.gen.morphism_between(f.cod(), &z);
    cx.note("f", &f);
    cx.note("h", &h);
    let g = h.compose(&f)?;
    let sol = solve_extension(&g, &f)?;
    ensure(sol.morphism.compose(&f)? == g, "h f != g")?;
    ensure(sol.unique == f.is_epi(), "uniqueness flag disagrees with epi")?;
    ensure(!sol.unique || sol.morphism == h, "unique solution differs from the known one")?;
    Ok(Outcome::Held)
}

fn factor_abelian<D: Sample>(cx: &mut Case<'_, D>) -> Check {
    let x = cx.gen.any_object::<D>();
    cx.note("X", &WMorphism::identity(&x));
    ensure(abelian_defect(&x)?.is_zero(), "1 + p1 e i2 + p2 e i1 != 0")?;
    Ok(Outcome::Held)
}

fn factor_pushout<D: Sample>(cx: &mut Case<'_, D>) -> Check {
    let s = cx.gen.mono::<D>()?;
    let c = cx.gen.any_object::<D>();
    let a = cx.gen.morphism_between(s.dom(), &c);
    cx.note("s", &s);
    cx.note("a", &a);
    let r = canonical_retraction(&s)?;
    let po = pushout_split_mono(&s, &r, &a)?;
    ensure(po.leg_b.compose(&s)? == po.leg_c.compose(&a)?, "pushout square does not commute")?;
    ensure(po.retraction.compose(&po.leg_c)?.is_identity(), "pushed-out mono has no retraction")?;
    ensure(po.quotient.is_coisometry(), "pushout quotient is not coisometric")?;
    Ok(Outcome::Held)
}

// ---------------------------------------------------------------- gram-schmidt

fn gs_post<D: Sample>(cx: &mut Case<'_, D>) -> Check {
    let spanning = cx.gen.coin();
    let c = cx.gen.split_cospan::<D>(spanning)?;
    for (k, s) in c.legs().iter().enumerate() {
        cx.note(&format!("s{k}"), s);
    }
    let rets = is_split(&c).ok_or(LawError::Violated("generated cospan is not split".into()))?;
    for (k, r) in rets.iter().enumerate() {
        for (j, s) in c.legs().iter().enumerate() {
            let rs = r.compose(s)?;
            ensure(if j == k { rs.is_identity() } else { rs.is_zero() }, "retraction is not a joint left inverse")?;
        }
    }
    let t = gram_schmidt(&c)?;
    for (j, tj) in t.legs().iter().enumerate() {
        ensure(tj.gram().try_inverse().is_some(), "output leg is not a closed mono")?;
        for tk in &t.legs()[j + 1..] {
            ensure(tj.adjoint().compose(tk)?.is_zero(), "output legs are not orthogonal")?;
        }
    }
    for m in 1..=c.legs().len() {
        ensure(same_subobject(&c.prefix(m).block(), &t.prefix(m).block())?, "prefix unions differ")?;
    }
    Ok(Outcome::Held)
}

fn gs_idempotent<D: Sample>(cx: &mut Case<'_, D>) -> Check {
    let c = cx.gen.split_cospan::<D>(false)?;
    for (k, s) in c.legs().iter().enumerate() {
        cx.note(&format!("s{k}"), s);
    }
    let t = gram_schmidt(&c)?;
    ensure(gram_schmidt(&t)? == t, "gram-schmidt is not idempotent")?;
    Ok(Outcome::Held)
}

fn gs_coproduct<D: Sample>(cx: &mut Case<'_, D>) -> Check {
    let c = cx.gen.split_cospan::<D>(true)?;
    for (k, s) in c.legs().iter().enumerate() {
        cx.note(&format!("s{k}"), s);
    }
    ensure(c.block().try_inverse().is_some(), "generated coproduct block is singular")?;
    let t = gram_schmidt(&c)?;
    ensure(t.block().try_inverse().is_some(), "orthogonalized coproduct block is singular")?;
    Ok(Outcome::Held)
}

fn gs_gram<D: Sample>(cx: &mut Case<'_, D>) -> Check {
    let x = cx.gen.any_object::<D>();
    let singular = x.dim() > 0 && cx.gen.below(4) == 0;
    let mut m = cx.gen.invertible(&x, &x)?;
    if singular {
        let col = cx.gen.below(x.dim());
        let mat =
            Matrix::from_fn(x.dim(), x.dim(), |r, c| if c == col { D::zero() } else { m.matrix()[(r, c)].clone() });
        m = WMorphism::new(x.clone(), x.clone(), mat)?;
    }
    cx.note("m", &m);
    let ainv = Matrix::from_fn(x.dim(), x.dim(), |r, c| if r == c { x.inv_weights()[r].clone() } else { D::zero() });
    let g = m.matrix().conj_transpose().mul(&ainv)?.mul(m.matrix())?;
    match orthogonalize_gram(&g) {
        Err(Error::NotPositiveDefinite) => ensure(singular, "positive definite gram rejected")?,
        Err(e) => return Err(e.into()),
        Ok((obj, b)) => {
            ensure(!singular, "singular gram accepted")?;
            let d = b.conj_transpose().mul(&g)?.mul(&b)?;
            let n = obj.dim();
            let expected = Matrix::from_fn(n, n, |r, c| if r == c { obj.inv_weights()[r].clone() } else { D::zero() });
            ensure(d == expected, "B^dag G B is not the diagonal of inverse weights")?;
        }
    }
    Ok(Outcome::Held)
}

// ---------------------------------------------------------------- order

fn order_certificates<D: Sample>(cx: &mut Case<'_, D>) -> Check {
    let x = cx.gen.any_object::<D>();
    let h = cx.gen.hermitian(&x);
    cx.note("h", &h);
    let v = is_positive_endo(&h)?;
    ensure(v.verify(&h), "positivity certificate does not verify")?;
    Ok(Outcome::Held)
}

fn order_axioms<D: Sample>(cx: &mut Case<'_, D>) -> Check {
    let x = cx.gen.any_object::<D>();
    let a = cx.gen.hermitian(&x);
    let p = cx.gen.positive(&x);
    let b = a.add(&p)?;
    let z = cx.gen.any_object::<D>();
    let r = cx.gen.morphism_between(&z, &x);
    let c = cx.gen.hermitian(&z);
    cx.note("a", &a);
    cx.note("b", &b);
    cx.note("r", &r);
    cx.note("c", &c);
    ensure(le(&WMorphism::zero(&x, &x), &WMorphism::identity(&x))?, "0 <= 1 fails")?;
    ensure(le(&a, &a)?, "a <= a fails")?;
    ensure(le(&a, &b)?, "a <= a + p fails")?;
    let ra = r.adjoint().compose(&a)?.compose(&r)?.add(&c)?;
    let rb = r.adjoint().compose(&b)?.compose(&r)?.add(&c)?;
    ensure(le(&ra, &rb)?, "r*ar + c <= r*br + c fails")?;
    Ok(Outcome::Held)
}

fn order_antisymmetry<D: Sample>(cx: &mut Case<'_, D>) -> Check {
    let x = cx.gen.any_object::<D>();
    let a = cx.gen.hermitian(&x);
    let p = if cx.gen.below(4) == 0 { WMorphism::zero(&x, &x) } else { cx.gen.positive(&x) };
    let b = if cx.gen.coin() { a.add(&p)? } else { cx.gen.hermitian(&x) };
    cx.note("a", &a);
    cx.note("b", &b);
    if le(&a, &b)? && le(&b, &a)? {
        ensure(a == b, "a <= b <= a with a != b")?;
    }
    Ok(Outcome::Held)
}

fn order_inverse_closure<D: Sample>(cx: &mut Case<'_, D>) -> Check {
    let x = cx.gen.any_object::<D>();
    let b = cx.gen.strictly_positive(&x)?;
    let a = b.add(&cx.gen.positive(&x))?;
    cx.note("a", &a);
    cx.note("b", &b);
    ensure(is_strictly_positive(&b)?, "b is not strictly positive")?;
    let inv = invert(&a).map_err(|_| LawError::Violated("a >= b > 0 but a is singular".into()))?;
    ensure(is_strictly_positive(&inv)?, "inverse of a strictly positive map is not strictly positive")?;
    Ok(Outcome::Held)
}

fn order_schur<D: Sample>(cx: &mut Case<'_, D>) -> Check {
    let x = cx.gen.any_object::<D>();
    let y = cx.gen.any_object::<D>();
    let a = cx.gen.strictly_positive(&x)?;
    let b = cx.gen.strictly_positive(&y)?;
    let f = cx.gen.morphism_between(&x, &y);
    cx.note("a", &a);
    cx.note("b", &b);
    cx.note("f", &f);
    let s = a.sub(&f.adjoint().compose(&invert(&b)?)?.compose(&f)?)?;
    if s.try_inverse().is_none() {
        return Ok(Outcome::Vacuous);
    }
    let lhs = schur_inverse(&a, &b, &f)?;
    let direct = invert(&b.sub(&f.compose(&invert(&a)?)?.compose(&f.adjoint())?)?)
        .map_err(|_| LawError::Violated("b - f a^-1 f* is singular".into()))?;
    ensure(lhs == direct, "schur inverse differs from direct inversion")?;
    Ok(Outcome::Held)
}

/// A contraction out of a prescribed object.
fn contraction_from<D: Sample>(gen: &mut Gen<'_>, x: &WObject<D>) -> Result<WMorphism<D>, LawError> {
    Ok(match gen.below(4) {
        0 | 1 => {
            let z = gen.any_object::<D>();
            let f = gen.morphism_between(x, &z);
            gen.shrink(&f)?
        }
        2 => {
            let e = gen.upto(2);
            gen.isometry_from(x, e)?
        }
        _ => WMorphism::zero(x, &gen.any_object::<D>()),
    })
}

fn order_contraction_closure<D: Sample>(cx: &mut Case<'_, D>) -> Check {
    let c1 = cx.gen.contraction::<D>()?;
    let c2 = contraction_from(&mut cx.gen, c1.cod())?;
    cx.note("c1", &c1);
    cx.note("c2", &c2);
    ensure(is_contraction(&c1) && is_contraction(&c2), "generated contraction is not contractive")?;
    ensure(is_contraction(&c2.compose(&c1)?), "composite of contractions is not contractive")?;
    ensure(is_contraction(&c1.adjoint()), "adjoint of a contraction is not contractive")?;
    Ok(Outcome::Held)
}

fn order_split_contraction<D: Sample>(cx: &mut Case<'_, D>) -> Check {
    let (s, r) = if cx.gen.coin() {
        let s = cx.gen.isometry::<D>()?;
        let sp = complement(&s);
        let y = cx.gen.morphism_between(sp.dom(), s.dom());
        let y = if cx.gen.coin() { cx.gen.shrink(&y)? } else { WMorphism::zero(sp.dom(), s.dom()) };
        let r = s.adjoint().add(&y.compose(&sp.adjoint())?)?;
        (s, r)
    } else {
        let m = cx.gen.mono::<D>()?;
        let s = cx.gen.shrink(&m)?;
        if !s.is_mono() {
            return Ok(Outcome::Vacuous);
        }
        let r = canonical_retraction(&s)?;
        (s, r)
    };
    cx.note("s", &s);
    cx.note("r", &r);
    if !(r.compose(&s)?.is_identity() && is_contraction(&s) && is_contraction(&r)) {
        return Ok(Outcome::Vacuous);
    }
    ensure(s.is_isometry(), "contractive split mono with contractive retraction is not isometric")?;
    Ok(Outcome::Held)
}

fn order_positive_block<D: Sample>(cx: &mut Case<'_, D>) -> Check {
    let f = match cx.gen.below(3) {
        0 => cx.gen.morphism::<D>(),
        _ => cx.gen.contraction::<D>()?,
    };
    cx.note("f", &f);
    let one_x = WMorphism::identity(f.dom());
    let one_y = WMorphism::identity(f.cod());
    let b = block(&one_x, &f.adjoint(), &f, &one_y)?;
    ensure(is_contraction(&f) == is_positive_endo(&b)?.is_positive(), "contraction iff positive block fails")?;
    let strict = is_strict_contraction(&f);
    ensure(strict == is_strictly_positive(&b)?, "strict contraction iff strictly positive block fails")?;
    if strict {
        let d = invert(&one_x.sub(&f.gram())?)?;
        let fd = f.compose(&d)?;
        let explicit =
            block(&d, &d.compose(&f.adjoint())?.negate(), &fd.negate(), &one_y.add(&fd.compose(&f.adjoint())?)?)?;
        ensure(invert(&b)? == explicit, "block inverse formula fails")?;
    }
    Ok(Outcome::Held)
}

fn order_bounded_transform<D: Sample>(cx: &mut Case<'_, D>) -> Check {
    let f = cx.gen.morphism::<D>();
    let p = cx.gen.positive(f.dom());
    let a = f.gram().add(&p)?;
    cx.note("f", &f);
    cx.note("a", &a);
    let bt = bounded_transform(&f, &a)?;
    ensure(bt.c.compose(&bt.d)? == f, "f != c d")?;
    ensure(is_contraction(&bt.c), "c is not contractive")?;
    ensure(is_contraction(&bt.d_inv), "(1 + a)^-1 is not contractive")?;
    ensure(bt.d.compose(&bt.d_inv)?.is_identity(), "d_inv is not the inverse of d")?;
    Ok(Outcome::Held)
}

fn order_generators<D: Sample>(cx: &mut Case<'_, D>) -> Check {
    let iso = cx.gen.isometry::<D>()?;
    let x = cx.gen.any_object::<D>();
    let pos = cx.gen.positive(&x);
    let con = cx.gen.contraction::<D>()?;
    cx.note("iso", &iso);
    cx.note("pos", &pos);
    cx.note("con", &con);
    ensure(classify(&iso).isometry, "generated isometry is not isometric")?;
    ensure(is_positive_endo(&pos)?.is_positive(), "generated positive map is not positive")?;
    ensure(is_contraction(&con), "generated contraction is not contractive")?;
    Ok(Outcome::Held)
}

// ---------------------------------------------------------------- dilation

/// All codilator constructions that apply to `f`.
fn certificates<D: StarField>(f: &WMorphism<D>) -> Result<Vec<CodilatorCertificate<D>>, LawError> {
    let mut out = vec![codilator(f)?];
    if is_strict_contraction(f) {
        out.push(codilator_strict(f)?);
    }
    if classify(f).partial_isometry {
        out.push(codilator_partial_isometry(f)?);
    }
    Ok(out)
}

fn dil_codilators<D: Sample>(cx: &mut Case<'_, D>) -> Check {
    let f = cx.gen.contraction::<D>()?;
    cx.note("f", &f);
    for cert in certificates(&f)? {
        ensure(cert.verify(), "codilator certificate does not verify")?;
        ensure(cert.codilation.gram_identity_holds(), "codilation gram identity fails")?;
    }
    Ok(Outcome::Held)
}

fn dil_universality<D: Sample>(cx: &mut Case<'_, D>) -> Check {
    let f = cx.gen.contraction::<D>()?;
    cx.note("f", &f);
    let certs = certificates(&f)?;
    for cert in &certs {
        for _ in 0..2 {
            let extra = cx.gen.upto(1);
            let w = cx.gen.isometry_from(&cert.codilation.apex, extra)?;
            let other = cert.codilation.transport(&w)?;
            ensure(other.verify(), "transported codilation is not a codilation")?;
            let h = mediating_isometry(cert, &other)?;
            ensure(h == w, "mediating isometry differs from the transporting isometry")?;
        }
    }
    for other in &certs[1..] {
        let h = mediating_isometry(&certs[0], &other.codilation)?;
        ensure(h.is_isometry(), "mediating morphism between constructions is not isometric")?;
    }
    Ok(Outcome::Held)
}

fn dil_strict_agreement<D: Sample>(cx: &mut Case<'_, D>) -> Check {
    let f0 = cx.gen.morphism::<D>();
    let f = cx.gen.shrink(&f0)?;
    cx.note("f", &f);
    ensure(is_strict_contraction(&f), "bounded transform did not give a strict contraction")?;
    let a = codilator(&f)?;
    let b = codilator_strict(&f)?;
    let ab = mediating_isometry(&a, &b.codilation)?;
    let ba = mediating_isometry(&b, &a.codilation)?;
    ensure(
        ba.compose(&ab)?.is_identity() && ab.compose(&ba)?.is_identity(),
        "codilators are not unitarily isomorphic",
    )?;
    Ok(Outcome::Held)
}

fn as_certificate<D: StarField>(c: Codilation<D>) -> CodilatorCertificate<D> {
    CodilatorCertificate { codilation: c, kind: CodilatorKind::DouglianJointEpi, coproduct_inverse: None }
}

fn unitarily_equivalent<D: StarField>(
    a: &CodilatorCertificate<D>,
    b: &CodilatorCertificate<D>,
) -> Result<bool, LawError> {
    let ab = mediating_isometry(a, &b.codilation)?;
    let ba = mediating_isometry(b, &a.codilation)?;
    Ok(classify(&ab).unitary && ba.compose(&ab)?.is_identity())
}

fn dil_degenerate<D: Sample>(cx: &mut Case<'_, D>) -> Check {
    let x = cx.gen.any_object::<D>();
    let y = cx.gen.any_object::<D>();
    let zero = WMorphism::zero(&x, &y);
    cx.note("zero", &zero);
    let b = biproduct(&x, &y);
    let reference = Codilation { apex: b.apex.clone(), s1: b.i1.clone(), s2: b.i2.clone(), subject: zero.clone() };
    ensure(reference.verify() && reference.jointly_epic(), "(X + Y, i1, i2) is not a jointly epic codilation")?;
    let reference = as_certificate(reference);
    ensure(unitarily_equivalent(&codilator(&zero)?, &reference)?, "codilator of zero is not (X + Y, i1, i2)")?;
    let pi = codilator_partial_isometry(&zero)?;
    ensure(pi.codilation == reference.codilation, "pushout codilator of zero is not (X + Y, i1, i2)")?;

    let t = cx.gen.isometry::<D>()?;
    cx.note("t", &t);
    let reference =
        Codilation { apex: t.cod().clone(), s1: t.clone(), s2: WMorphism::identity(t.cod()), subject: t.clone() };
    ensure(reference.verify() && reference.jointly_epic(), "(Y, t, 1) is not a jointly epic codilation")?;
    let reference = as_certificate(reference);
    ensure(unitarily_equivalent(&codilator(&t)?, &reference)?, "codilator of an isometry is not (Y, t, 1)")?;
    ensure(
        unitarily_equivalent(&codilator_partial_isometry(&t)?, &reference)?,
        "pushout codilator of an isometry is not (Y, t, 1)",
    )?;
    Ok(Outcome::Held)
}

fn dil_douglas_converse<D: Sample>(cx: &mut Case<'_, D>) -> Check {
    let f = cx.gen.morphism::<D>();
    let h = contraction_from(&mut cx.gen, f.cod())?;
    cx.note("f", &f);
    cx.note("h", &h);
    let g = h.compose(&f)?;
    ensure(le(&g.gram(), &f.gram())?, "contractive extension exists but g*g <= f*f fails")?;
    Ok(Outcome::Held)
}

fn dil_douglas_extension<D: Sample>(cx: &mut Case<'_, D>) -> Check {
    let f = cx.gen.morphism::<D>();
    let h0 = contraction_from(&mut cx.gen, f.cod())?;
    let g = h0.compose(&f)?;
    cx.note("f", &f);
    cx.note("g", &g);
    let h = douglas_extension(&f, &g)?;
    ensure(h.compose(&f)? == g, "h f != g")?;
    ensure(is_contraction(&h), "douglas extension is not contractive")?;
    ensure(h.compose(&kernel(&f.adjoint()))?.is_zero(), "kernel of h does not contain (Ran f)_perp")?;
    Ok(Outcome::Held)
}

fn closure_of_range<D: StarField>(m: &WMorphism<D>) -> WMorphism<D> {
    complement(&complement(&range_factorization(m).j))
}

fn dil_extension_classification<D: Sample>(cx: &mut Case<'_, D>) -> Check {
    let f = cx.gen.morphism::<D>();
    let extra = cx.gen.upto(1);
    let w = cx.gen.isometry_from(f.cod(), extra)?;
    let g = w.compose(&f)?;
    cx.note("f", &f);
    cx.note("g", &g);
    ensure(f.gram() == g.gram(), "sampled pair does not satisfy f*f = g*g")?;
    let h = douglas_extension(&f, &g)?;
    let k = kernel(&f.adjoint());
    // (i) h is the unique extension vanishing on (Ran f)_perp.
    ensure(h.compose(&f)? == g && h.compose(&k)?.is_zero(), "h is not an extension killing (Ran f)_perp")?;
    let joint = solve_extension(&copair(&g, &WMorphism::zero(k.dom(), g.cod()))?, &copair(&f, &k)?)?;
    ensure(joint.unique && joint.morphism == h, "extension killing (Ran f)_perp is not unique")?;
    // (ii)
    ensure(same_subobject(&closure_of_range(&h), &closure_of_range(&g))?, "(Ran h)_perp_perp != (Ran g)_perp_perp")?;
    // (iii)
    ensure(classify(&h).partial_isometry, "h is not a partial isometry")?;
    ensure(factors_through(&kernel(&h), &k)?, "Ker h <= (Ran f)_perp fails")?;
    // (iv), (v)
    if f.is_epi() {
        ensure(h.is_isometry(), "f epic but h is not isometric")?;
        if g.is_epi() {
            ensure(classify(&h).unitary, "f, g epic but h is not unitary")?;
        }
    }
    Ok(Outcome::Held)
}

fn dil_pushout<D: Sample>(cx: &mut Case<'_, D>) -> Check {
    let a_dim = cx.gen.upto(3);
    let a = cx.gen.object::<D>(a_dim);
    let (e1, e2) = (cx.gen.upto(2), cx.gen.upto(2));
    let s = cx.gen.isometry_from(&a, e1)?;
    let t = cx.gen.isometry_from(&a, e2)?;
    cx.note("s", &s);
    cx.note("t", &t);
    let po = pushout_of_isometries(&s, &t)?;
    ensure(po.commutes(), "pushout square does not commute")?;
    ensure(copair(&po.leg_x, &po.leg_y)?.is_epi(), "pushout legs are not jointly epic")?;
    let z = cx.gen.any_object::<D>();
    let m = cx.gen.morphism_between(&po.apex, &z);
    cx.note("m", &m);
    let (f, g) = (m.compose(&po.leg_x)?, m.compose(&po.leg_y)?);
    let med = po.mediate(&f, &g)?;
    ensure(med == m, "mediating morphism is not the unique one")?;
    ensure(
        med.compose(&po.leg_x)? == f && med.compose(&po.leg_y)? == g,
        "mediating morphism does not factor the cocone",
    )?;
    Ok(Outcome::Held)
}
