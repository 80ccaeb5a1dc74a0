//! Codilations, codilators, mediating isometries, Douglas extensions and the
//! pushout of two isometries.

use serde::Serialize;

use crate::category::{biproduct, copair, copair_all, pair, pair_all, WMorphism, WObject};
use crate::error::{Error, Result};
use crate::factor::{classify, complement, range_factorization, solve_extension};
use crate::order::{invert, is_contraction, is_positive_endo, is_strict_contraction, le, PositivityVerdict};
use crate::scalar::StarField;

/// Isometries `s1: X → S`, `s2: Y → S` with `s2*·s1 = f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Codilation<D> {
    pub apex: WObject<D>,
    pub s1: WMorphism<D>,
    pub s2: WMorphism<D>,
    pub subject: WMorphism<D>,
}

impl<D: StarField> Codilation<D> {
    /// `[s1 s2]: X ⊕ Y → S`.
    pub fn copair(&self) -> WMorphism<D> {
        copair(&self.s1, &self.s2).expect("legs share the apex")
    }

    /// Both legs isometric and `s2*·s1 = f`, with matching objects.
    pub fn verify(&self) -> bool {
        let f = &self.subject;
        self.s1.dom() == f.dom()
            && self.s2.dom() == f.cod()
            && self.s1.cod() == &self.apex
            && self.s2.cod() == &self.apex
            && self.s1.is_isometry()
            && self.s2.is_isometry()
            && self.s2.adjoint().compose(&self.s1).ok().as_ref() == Some(f)
    }

    /// The block identity `[s1 s2]*[s1 s2] = [[1, f*], [f, 1]]`.
    pub fn gram_identity_holds(&self) -> bool {
        let f = &self.subject;
        let expected =
            crate::category::block(&WMorphism::identity(f.dom()), &f.adjoint(), f, &WMorphism::identity(f.cod()));
        matches!(expected, Ok(e) if self.copair().gram() == e)
    }

    pub fn jointly_epic(&self) -> bool {
        self.copair().is_epi()
    }

    /// `(T, w·s1, w·s2)` for an isometry `w: S → T`.
    pub fn transport(&self, w: &WMorphism<D>) -> Result<Codilation<D>> {
        Ok(Codilation {
            apex: w.cod().clone(),
            s1: w.compose(&self.s1)?,
            s2: w.compose(&self.s2)?,
            subject: self.subject.clone(),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CodilatorKind {
    DouglianJointEpi,
    StrictCoproduct,
    PartialIsometryPushout,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodilatorCertificate<D> {
    pub codilation: Codilation<D>,
    pub kind: CodilatorKind,
    /// Inverse of `[s1 s2]` when the legs form a coproduct.
    pub coproduct_inverse: Option<WMorphism<D>>,
}

impl<D: StarField> CodilatorCertificate<D> {
    pub fn verify(&self) -> bool {
        let c = &self.codilation;
        let inverse_ok = match &self.coproduct_inverse {
            None => self.kind != CodilatorKind::StrictCoproduct,
            Some(inv) => {
                let s = c.copair();
                matches!(inv.compose(&s), Ok(m) if m.is_identity())
                    && matches!(s.compose(inv), Ok(m) if m.is_identity())
            }
        };
        c.verify() && c.jointly_epic() && inverse_ok
    }
}

fn defect_factor<D: StarField>(f: &WMorphism<D>) -> Result<WMorphism<D>> {
    let defect = WMorphism::identity(f.dom()).sub(&f.gram())?;
    match is_positive_endo(&defect)? {
        PositivityVerdict::Positive { factor, .. } => Ok(factor),
        PositivityVerdict::NotPositive { .. } => Err(Error::NotContraction),
    }
}

fn codilator_from_factor<D: StarField>(f: &WMorphism<D>, g: &WMorphism<D>) -> Result<Codilation<D>> {
    let b = biproduct(f.cod(), g.cod());
    Ok(Codilation { apex: b.apex, s1: pair(f, g)?, s2: b.i1, subject: f.clone() })
}

/// Apex `Y ⊕ D` with `s1 = [f; G]`, `s2 = i1`, where `G*G = 1 - f*f`.
pub fn codilator<D: StarField>(f: &WMorphism<D>) -> Result<CodilatorCertificate<D>> {
    if !is_contraction(f) {
        return Err(Error::NotContraction);
    }
    let g = defect_factor(f)?;
    Ok(CodilatorCertificate {
        codilation: codilator_from_factor(f, &g)?,
        kind: CodilatorKind::DouglianJointEpi,
        coproduct_inverse: None,
    })
}

/// For a strict contraction the defect factor is invertible, so the legs
/// form a coproduct.
pub fn codilator_strict<D: StarField>(f: &WMorphism<D>) -> Result<CodilatorCertificate<D>> {
    if !is_strict_contraction(f) {
        return Err(Error::NotStrictContraction);
    }
    let x = defect_factor(f)?;
    if invert(&x).is_err() {
        return Err(Error::Verification("defect factor of a strict contraction is singular".into()));
    }
    let codilation = codilator_from_factor(f, &x)?;
    let inv = invert(&codilation.copair())?;
    Ok(CodilatorCertificate { codilation, kind: CodilatorKind::StrictCoproduct, coproduct_inverse: Some(inv) })
}

/// The pushout of isometries `s: A → X`, `t: A → Y` into
/// `(X ⊖ A) ⊕ A ⊕ (Y ⊖ A)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsometryPushout<D> {
    pub apex: WObject<D>,
    /// `[s⊥*; s*; 0]`.
    pub leg_x: WMorphism<D>,
    /// `[0; t*; t⊥*]`.
    pub leg_y: WMorphism<D>,
    pub s: WMorphism<D>,
    pub t: WMorphism<D>,
    pub s_perp: WMorphism<D>,
    pub t_perp: WMorphism<D>,
}

impl<D: StarField> IsometryPushout<D> {
    /// The induced map `[f s⊥, f s, g t⊥]` for a cocone `f·s = g·t`.
    pub fn mediate(&self, f: &WMorphism<D>, g: &WMorphism<D>) -> Result<WMorphism<D>> {
        if f.compose(&self.s)? != g.compose(&self.t)? {
            return Err(Error::precondition("cocone does not commute: f s != g t"));
        }
        copair_all(f.cod(), &[f.compose(&self.s_perp)?, f.compose(&self.s)?, g.compose(&self.t_perp)?])
    }

    pub fn commutes(&self) -> bool {
        matches!(
            (self.leg_x.compose(&self.s), self.leg_y.compose(&self.t)),
            (Ok(a), Ok(b)) if a == b
        )
    }
}

pub fn pushout_of_isometries<D: StarField>(s: &WMorphism<D>, t: &WMorphism<D>) -> Result<IsometryPushout<D>> {
    if s.dom() != t.dom() {
        return Err(Error::shape("pushout legs need a common domain"));
    }
    if !s.is_isometry() || !t.is_isometry() {
        return Err(Error::NotIsometry);
    }
    let s_perp = complement(s);
    let t_perp = complement(t);
    let leg_x = pair_all(s.cod(), &[s_perp.adjoint(), s.adjoint(), WMorphism::zero(s.cod(), t_perp.dom())])?;
    let leg_y = pair_all(t.cod(), &[WMorphism::zero(t.cod(), s_perp.dom()), t.adjoint(), t_perp.adjoint()])?;
    Ok(IsometryPushout { apex: leg_x.cod().clone(), leg_x, leg_y, s: s.clone(), t: t.clone(), s_perp, t_perp })
}

/// `f = t·s*` with `s`, `t` isometries, for a partial isometry `f`.
pub fn partial_isometry_factors<D: StarField>(f: &WMorphism<D>) -> Result<(WMorphism<D>, WMorphism<D>)> {
    if !classify(f).partial_isometry {
        return Err(Error::NotPartialIsometry);
    }
    let rf = range_factorization(f);
    let s = rf.e.adjoint();
    let t = rf.j.compose(&rf.u)?;
    Ok((s, t))
}

pub fn codilator_partial_isometry<D: StarField>(f: &WMorphism<D>) -> Result<CodilatorCertificate<D>> {
    let (s, t) = partial_isometry_factors(f)?;
    let po = pushout_of_isometries(&s, &t)?;
    Ok(CodilatorCertificate {
        codilation: Codilation { apex: po.apex, s1: po.leg_x, s2: po.leg_y, subject: f.clone() },
        kind: CodilatorKind::PartialIsometryPushout,
        coproduct_inverse: None,
    })
}

/// The unique `h` with `h·s1 = t1` and `h·s2 = t2`, checked to be isometric.
pub fn mediating_isometry<D: StarField>(cert: &CodilatorCertificate<D>, other: &Codilation<D>) -> Result<WMorphism<D>> {
    let c = &cert.codilation;
    if c.subject != other.subject {
        return Err(Error::NotSameSubject);
    }
    let s = c.copair();
    let t = other.copair();
    let sol = solve_extension(&t, &s)?;
    if !sol.unique {
        return Err(Error::Verification("codilator legs are not jointly epic".into()));
    }
    let h = sol.morphism;
    if h.compose(&s)? != t {
        return Err(Error::Verification("mediating morphism does not carry one copair to the other".into()));
    }
    if !h.is_isometry() {
        return Err(Error::Verification("mediating morphism is not isometric".into()));
    }
    Ok(h)
}

/// The canonical contractive `h` with `h·f = g`, given `g*g ≤ f*f`.
pub fn douglas_extension<D: StarField>(f: &WMorphism<D>, g: &WMorphism<D>) -> Result<WMorphism<D>> {
    if f.dom() != g.dom() {
        return Err(Error::precondition("f and g need a common domain"));
    }
    if !le(&g.gram(), &f.gram())? {
        return Err(Error::precondition("g*g <= f*f does not hold"));
    }
    let rf = range_factorization(f);
    let rg = range_factorization(g);
    let i = &rf.j;
    let r = rf.u.compose(&rf.e)?;
    let s = rg.u.compose(&rg.e)?;
    let t = solve_extension(&s, &r).map_err(|_| Error::precondition("ker f is not contained in ker g"))?.morphism;
    rg.j.compose(&t)?.compose(&i.adjoint())
}
