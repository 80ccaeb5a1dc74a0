//! One PASS/FAIL line per acceptance criterion. Exits non-zero if any fails.

use std::process::ExitCode;
use std::time::Instant;

use starcat::category::{biproduct, WMorphism, WObject};
use starcat::dilation::{
    codilator, codilator_partial_isometry, codilator_strict, mediating_isometry, Codilation, CodilatorCertificate,
    CodilatorKind,
};
use starcat::factor::{classify, kernel, solve_extension};
use starcat::gram_schmidt::{gram_schmidt, WideCospan};
use starcat::harness::gen::{Gen, Sample};
use starcat::harness::{parseval_adjoint, run_laws, GenConfig};
use starcat::order::{invert, is_positive_endo, is_strict_contraction, schur_inverse};
use starcat::scalar::is_positive_scalar;
use starcat::{Matrix, RatFun, Rational, RingId, StarField};

const RINGS: [RingId; 4] = RingId::ALL;

type Outcome = Result<String, String>;

type Criterion = (&'static str, fn() -> Outcome);

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

fn unweighted(rows: &[&[Rational]]) -> WMorphism<Rational> {
    let cols = rows.first().map_or(0, |r| r.len());
    WMorphism::unweighted(Matrix::from_rows(rows.iter().map(|r| r.to_vec()).collect(), cols).unwrap())
}

fn gen_for<'a>(cfg: &'a GenConfig, tag: &str, case: usize) -> Gen<'a> {
    Gen::new(cfg.rng_for(tag, case), cfg)
}

fn laws_green() -> Outcome {
    let mut parts = Vec::new();
    let mut failed = Vec::new();
    for ring in RINGS {
        let cfg = GenConfig::new(ring, 1, 50).with_max_dim(5);
        let t = Instant::now();
        let report = run_laws(&cfg);
        parts.push(format!("{} {:.1}s", ring.name(), t.elapsed().as_secs_f64()));
        for law in report.laws.iter().filter(|l| l.failed > 0) {
            let why = law.counterexample.as_ref().map_or(String::new(), |c| c.message.clone());
            failed.push(format!("{}/{}: {}", ring.name(), law.name, why));
        }
    }
    if failed.is_empty() {
        Ok(parts.join(", "))
    } else {
        Err(failed.join("; "))
    }
}

fn goldens() -> Outcome {
    let mut bad = Vec::new();
    let mut check = |ok: bool, what: &str| {
        if !ok {
            bad.push(what.to_string());
        }
    };

    let k = kernel(&unweighted(&[&[q(1, 1), q(1, 1)]]));
    check(k.dom().weights() == [q(1, 2)], "kernel object weight 1/2");
    check(k.matrix().column(0) == vec![q(1, 1), q(-1, 1)], "kernel column (1, -1)");

    let legs = vec![unweighted(&[&[q(1, 1)], &[q(1, 1)]]), unweighted(&[&[q(0, 1)], &[q(1, 1)]])];
    let t = WideCospan::new(legs).and_then(|c| gram_schmidt(&c));
    check(
        matches!(&t, Ok(t) if t.legs()[1].matrix().column(0) == vec![q(-1, 2), q(1, 2)]),
        "gram-schmidt t2 = (-1/2, 1/2)",
    );

    let f = unweighted(&[&[q(1, 2)]]);
    match codilator(&f) {
        Ok(cert) => {
            let c = &cert.codilation;
            check(c.apex.weights() == [q(1, 1), q(4, 3)], "codilator weights (1, 4/3)");
            check(c.s1.matrix().column(0) == vec![q(1, 2), q(1, 1)], "codilator leg [1/2; 1]");
            check(c.s2.matrix().column(0) == vec![q(1, 1), q(0, 1)], "codilator leg [1; 0]");
        }
        Err(e) => check(false, &format!("codilator of 1/2: {e}")),
    }

    let (a, b, f) = (unweighted(&[&[q(2, 1)]]), unweighted(&[&[q(3, 1)]]), unweighted(&[&[q(1, 1)]]));
    let expected = unweighted(&[&[q(2, 5)]]);
    check(schur_inverse(&a, &b, &f).ok() == Some(expected.clone()), "woodbury form gives 2/5");
    let direct = invert(&a)
        .and_then(|ai| f.compose(&ai))
        .and_then(|m| m.compose(&f.adjoint()))
        .and_then(|m| b.sub(&m))
        .and_then(|m| invert(&m));
    check(direct.ok() == Some(expected), "direct inverse gives 2/5");

    let minus_x2 = RatFun::parse_literal("-x^2").unwrap();
    let x2 = RatFun::parse_literal("x^2").unwrap();
    check(is_positive_scalar(&minus_x2) == Ok(true), "-x^2 positive");
    check(is_positive_scalar(&x2) == Ok(false), "x^2 not positive");

    if bad.is_empty() {
        Ok("kernel, gram-schmidt, codilator, woodbury, ratfun cone".into())
    } else {
        Err(bad.join("; "))
    }
}

fn positivity_ring<D: Sample>() -> Result<(usize, usize), String> {
    let cfg = GenConfig::new(D::RING, 1, 200).with_max_dim(4);
    let mut positive = 0;
    for case in 0..cfg.cases {
        let mut gen = gen_for(&cfg, "acceptance.positivity", case);
        let x = gen.any_object::<D>();
        let h = gen.hermitian(&x);
        let verdict = is_positive_endo(&h).map_err(|e| format!("case {case}: {e}"))?;
        if !verdict.verify(&h) {
            return Err(format!("case {case}: certificate does not re-verify"));
        }
        positive += verdict.is_positive() as usize;
    }
    Ok((positive, cfg.cases))
}

fn certified_positivity() -> Outcome {
    let mut parts = Vec::new();
    for ring in RINGS {
        let (pos, n) =
            starcat::dispatch_ring!(ring, D => positivity_ring::<D>()).map_err(|e| format!("{}: {e}", ring.name()))?;
        parts.push(format!("{} {pos}/{n} positive", ring.name()));
    }
    Ok(parts.join(", "))
}

/// `h` with `h·s = t` from an invertible column selection of the epic `s`.
fn solve_by_column_basis<D: StarField>(s: &WMorphism<D>, t: &WMorphism<D>) -> Option<WMorphism<D>> {
    let pivots = s.matrix().rref().pivots;
    if pivots.len() != s.cod().dim() {
        return None;
    }
    let pick = |m: &Matrix<D>| m.conj_transpose().select_rows(&pivots).conj_transpose();
    let sb = pick(s.matrix());
    let tb = pick(t.matrix());
    let h = tb.mul(&sb.inverse()?).ok()?;
    WMorphism::new(s.cod().clone(), t.cod().clone(), h).ok()
}

fn mediation_holds<D: StarField>(cert: &CodilatorCertificate<D>, other: &Codilation<D>) -> Result<(), String> {
    let s = cert.codilation.copair();
    let t = other.copair();
    let sol = solve_extension(&t, &s).map_err(|e| format!("no mediating morphism: {e}"))?;
    if !sol.unique {
        return Err("mediating morphism is not unique".into());
    }
    let second = solve_by_column_basis(&s, &t).ok_or("column-basis solve failed")?;
    if second != sol.morphism {
        return Err("solve paths disagree".into());
    }
    if !second.is_isometry() {
        return Err("mediating morphism is not isometric".into());
    }
    let h = mediating_isometry(cert, other).map_err(|e| e.to_string())?;
    if h != second {
        return Err("library mediator disagrees".into());
    }
    Ok(())
}

fn minimality_ring<D: Sample>() -> Result<usize, String> {
    let cfg = GenConfig::new(D::RING, 1, 100);
    let mut checks = 0;
    for case in 0..cfg.cases {
        let fail = |e: String| format!("case {case}: {e}");
        let mut gen = gen_for(&cfg, "acceptance.minimality", case);
        let f = gen.contraction::<D>().map_err(|e| fail(e.to_string()))?;
        let cert = codilator(&f).map_err(|e| fail(e.to_string()))?;
        let extra = gen.upto(1);
        let w = gen.isometry_from(&cert.codilation.apex, extra).map_err(|e| fail(e.to_string()))?;
        let mut others = vec![cert.codilation.transport(&w).map_err(|e| fail(e.to_string()))?];
        if is_strict_contraction(&f) {
            others.push(codilator_strict(&f).map_err(|e| fail(e.to_string()))?.codilation);
        }
        if classify(&f).partial_isometry {
            others.push(codilator_partial_isometry(&f).map_err(|e| fail(e.to_string()))?.codilation);
        }
        for other in &others {
            if !other.verify() {
                return Err(fail("second codilation does not verify".into()));
            }
            mediation_holds(&cert, other).map_err(fail)?;
            checks += 1;
        }
    }
    Ok(checks)
}

fn codilator_minimality() -> Outcome {
    let mut parts = Vec::new();
    for ring in RINGS {
        let n =
            starcat::dispatch_ring!(ring, D => minimality_ring::<D>()).map_err(|e| format!("{}: {e}", ring.name()))?;
        parts.push(format!("{} {n} mediations", ring.name()));
    }
    Ok(parts.join(", "))
}

fn oracle_ring<D: Sample>() -> Result<(), String> {
    let cfg = GenConfig::new(D::RING, 1, 100);
    for case in 0..cfg.cases {
        let mut gen = gen_for(&cfg, "acceptance.oracle", case);
        let f = gen.morphism::<D>();
        let via_inner = parseval_adjoint(&f).map_err(|e| format!("case {case}: {e}"))?;
        if via_inner != f.adjoint() {
            return Err(format!("case {case}: adjoints differ"));
        }
    }
    Ok(())
}

fn oracle_equivalence() -> Outcome {
    for ring in RINGS {
        starcat::dispatch_ring!(ring, D => oracle_ring::<D>()).map_err(|e| format!("{}: {e}", ring.name()))?;
    }
    Ok("100 morphisms per ring".into())
}

fn unitarily_mediated<D: StarField>(a: &CodilatorCertificate<D>, b: &Codilation<D>) -> Result<bool, String> {
    let back =
        CodilatorCertificate { codilation: b.clone(), kind: CodilatorKind::DouglianJointEpi, coproduct_inverse: None };
    let ab = mediating_isometry(a, b).map_err(|e| e.to_string())?;
    let ba = mediating_isometry(&back, &a.codilation).map_err(|e| e.to_string())?;
    let round = ba.compose(&ab).map_err(|e| e.to_string())?;
    Ok(classify(&ab).unitary && round.is_identity())
}

fn degenerate_ring<D: Sample>() -> Result<(), String> {
    let cfg = GenConfig::new(D::RING, 1, 50);
    for case in 0..cfg.cases {
        let fail = |e: String| format!("case {case}: {e}");
        let mut gen = gen_for(&cfg, "acceptance.degenerate", case);
        let x: WObject<D> = gen.any_object();
        let y: WObject<D> = gen.any_object();
        let zero = WMorphism::zero(&x, &y);
        let b = biproduct(&x, &y);
        let expected = Codilation { apex: b.apex, s1: b.i1, s2: b.i2, subject: zero.clone() };
        let cert = codilator(&zero).map_err(|e| fail(e.to_string()))?;
        if !expected.verify() || !unitarily_mediated(&cert, &expected)? {
            return Err(fail("zero morphism".into()));
        }

        let t = gen.isometry::<D>().map_err(|e| fail(e.to_string()))?;
        let expected =
            Codilation { apex: t.cod().clone(), s1: t.clone(), s2: WMorphism::identity(t.cod()), subject: t.clone() };
        let cert = codilator(&t).map_err(|e| fail(e.to_string()))?;
        if !expected.verify() || !unitarily_mediated(&cert, &expected)? {
            return Err(fail("isometry".into()));
        }
    }
    Ok(())
}

fn degenerate_codilators() -> Outcome {
    for ring in RINGS {
        starcat::dispatch_ring!(ring, D => degenerate_ring::<D>()).map_err(|e| format!("{}: {e}", ring.name()))?;
    }
    Ok("zero morphisms and isometries, 50 per ring".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 6] = [
        ("1 law suite green on every ring", laws_green),
        ("2 golden fixtures", goldens),
        ("3 certified positivity", certified_positivity),
        ("4 codilator minimality", codilator_minimality),
        ("5 adjoint oracle equivalence", oracle_equivalence),
        ("6 degenerate codilators", degenerate_codilators),
    ];
    let mut all = true;
    for (name, run) in criteria {
        let t = Instant::now();
        let result = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let secs = t.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS {name} ({detail}) [{secs:.1}s]"),
            Err(why) => {
                all = false;
                println!("FAIL {name}: {why} [{secs:.1}s]");
            }
        }
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
