use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;
use starcat::category::WMorphism;
use starcat::dilation::{
    codilator, codilator_partial_isometry, codilator_strict, douglas_extension, mediating_isometry, Codilation,
    CodilatorCertificate,
};
use starcat::document::Document;
use starcat::factor::{canonical_retraction, classify, cokernel, complement, kernel, range_factorization};
use starcat::gram_schmidt::{gram_schmidt, same_subobject, WideCospan};
use starcat::harness::{run_laws, GenConfig};
use starcat::order::{
    bounded_transform, invert, is_contraction, is_positive_endo, le, schur_inverse, PositivityVerdict,
};
use starcat::{Error, RingId, StarField};

#[derive(Parser)]
#[command(name = "starcat", version, about = "Exact computations in weighted matrix categories")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Input document (default: stdin).
    #[arg(long = "in", global = true, value_name = "FILE")]
    input: Option<PathBuf>,
    /// Output file (default: stdout).
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Morphism names, in the order the subcommand expects.
    #[arg(short = 'n', long = "name", global = true, value_name = "NAME")]
    names: Vec<String>,
    #[arg(long, global = true)]
    ring: Option<RingId>,
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    #[arg(long, global = true, default_value_t = 50)]
    cases: usize,
    #[arg(long = "max-dim", global = true, default_value_t = 5)]
    max_dim: usize,
}

#[derive(Subcommand, Clone, Copy, PartialEq, Eq, Debug)]
enum Command {
    /// f*
    Adjoint,
    /// g∘f, named as `-n g -n f`
    Compose,
    /// f + g
    Add,
    /// Isometric kernel of f
    Kernel,
    /// Coisometric cokernel of f
    Cokernel,
    /// Orthogonal complement of a mono
    Complement,
    /// Canonical retraction (s*s)^{-1}s*
    Retraction,
    /// f = j u e with j isometric, u invertible, e coisometric
    RangeFactor,
    /// Orthogonalize the cospan of the named legs
    GramSchmidt,
    /// Mono/epi/isometry flags
    Classify,
    /// Positivity verdict with certificate
    Positivity,
    /// a ≤ b in the canonical order
    Le,
    /// Two-sided inverse
    Invert,
    /// (b - f a^{-1} f*)^{-1} via the Woodbury form, named `-n a -n b -n f`
    Schur,
    /// f = c d with d = 1 + a, named `-n f -n a`
    BoundedTransform,
    /// Canonical codilator of a contraction
    Codilator,
    /// Codilator of a strict contraction as an orthogonal coproduct
    CodilatorStrict,
    /// Codilator of a partial isometry from a pushout of isometries
    CodilatorPi,
    /// Contractive h with h f = g, named `-n f -n g`
    DouglasExtend,
    /// Mediating isometry into another codilation, named `-n f -n t1 -n t2`
    Mediate,
    /// Run the randomized law suite
    Laws,
}

impl Command {
    /// The subcommand as typed on the command line.
    fn verb(self) -> String {
        let mut out = String::new();
        for (i, c) in format!("{self:?}").chars().enumerate() {
            if c.is_ascii_uppercase() && i > 0 {
                out.push('-');
            }
            out.push(c.to_ascii_lowercase());
        }
        out
    }

    fn label(self) -> &'static str {
        match self {
            Command::Adjoint => "adjoint",
            Command::Compose => "compose",
            Command::Add => "add",
            Command::Kernel => "kernel",
            Command::Cokernel => "cokernel",
            Command::Complement => "complement",
            Command::Retraction => "retraction",
            Command::RangeFactor => "range",
            Command::GramSchmidt => "gram_schmidt",
            Command::Classify => "classify",
            Command::Positivity => "positivity",
            Command::Le => "le",
            Command::Invert => "invert",
            Command::Schur => "schur",
            Command::BoundedTransform => "bounded",
            Command::Codilator => "codilator",
            Command::CodilatorStrict => "codilator_strict",
            Command::CodilatorPi => "codilator_pi",
            Command::DouglasExtend => "douglas",
            Command::Mediate => "mediate",
            Command::Laws => "laws",
        }
    }

    /// Exact number of names, or `None` for one or more.
    fn arity(self) -> Option<usize> {
        match self {
            Command::Compose | Command::Add | Command::Le | Command::BoundedTransform | Command::DouglasExtend => {
                Some(2)
            }
            Command::Schur | Command::Mediate => Some(3),
            Command::GramSchmidt => None,
            Command::Laws => Some(0),
            _ => Some(1),
        }
    }
}

fn verify(ok: bool, what: &str) -> Result<(), Error> {
    if ok {
        Ok(())
    } else {
        Err(Error::Verification(format!("result failed re-verification: {what}")))
    }
}

fn read_input(path: &Option<PathBuf>) -> Result<String, Error> {
    let mut text = String::new();
    match path {
        Some(p) => text = fs::read_to_string(p).map_err(|e| Error::Parse(format!("{}: {e}", p.display())))?,
        None => {
            io::stdin().read_to_string(&mut text).map_err(|e| Error::Parse(format!("stdin: {e}")))?;
        }
    }
    Ok(text)
}

fn write_output(path: &Option<PathBuf>, text: &str) -> Result<(), Error> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Error::precondition(format!("{}: {e}", p.display()))),
        None => io::stdout().write_all(text.as_bytes()).map_err(|e| Error::precondition(format!("stdout: {e}"))),
    }
}

fn run(cli: &Cli) -> Result<(), Error> {
    let names = &cli.names;
    match cli.command.arity() {
        Some(n) if names.len() != n => {
            return Err(Error::Parse(format!(
                "`{}` takes {n} morphism name(s), got {}",
                cli.command.verb(),
                names.len()
            )));
        }
        None if names.is_empty() => {
            return Err(Error::Parse(format!("`{}` takes at least one morphism name", cli.command.verb())));
        }
        _ => {}
    }

    if cli.command == Command::Laws {
        let ring = cli.ring.ok_or_else(|| Error::Parse("`laws` needs --ring".into()))?;
        let cfg = GenConfig::new(ring, cli.seed, cli.cases).with_max_dim(cli.max_dim);
        let report = run_laws(&cfg);
        write_output(&cli.out, &report.to_json())?;
        if !report.all_passed() {
            return Err(Error::Verification(format!("{} law case(s) failed", report.total_failed)));
        }
        return Ok(());
    }

    let mut doc = Document::parse(&read_input(&cli.input)?)?;
    doc.validate()?;
    doc.canonicalize()?;
    if let Some(ring) = cli.ring {
        if ring != doc.ring {
            return Err(Error::RingMismatch { left: ring, right: doc.ring });
        }
    }
    starcat::dispatch_ring!(doc.ring, D => execute::<D>(cli.command, names, &mut doc))?;
    write_output(&cli.out, &doc.to_canonical_json())
}

fn result_name(cmd: Command, names: &[String]) -> String {
    let mut s = cmd.label().to_string();
    for n in names {
        s.push('_');
        s.push_str(n);
    }
    s
}

fn insert_codilation<D: StarField>(doc: &mut Document, base: &str, c: &Codilation<D>) {
    doc.ensure_object(base, &c.apex);
    doc.insert_fresh_morphism(&format!("{base}_s1"), &c.s1);
    doc.insert_fresh_morphism(&format!("{base}_s2"), &c.s2);
}

fn execute<D: StarField>(cmd: Command, names: &[String], doc: &mut Document) -> Result<(), Error> {
    let ms = names.iter().map(|n| doc.morphism::<D>(n)).collect::<Result<Vec<WMorphism<D>>, _>>()?;
    let base = result_name(cmd, names);
    match cmd {
        Command::Adjoint => {
            let a = ms[0].adjoint();
            verify(a.adjoint() == ms[0], "f** = f")?;
            doc.insert_fresh_morphism(&base, &a);
        }
        Command::Compose => {
            let c = ms[0].compose(&ms[1])?;
            doc.insert_fresh_morphism(&base, &c);
        }
        Command::Add => {
            let s = ms[0].add(&ms[1])?;
            doc.insert_fresh_morphism(&base, &s);
        }
        Command::Kernel => {
            let k = kernel(&ms[0]);
            verify(k.is_isometry() && ms[0].compose(&k)?.is_zero(), "kernel is isometric and f k = 0")?;
            doc.ensure_object(&base, k.dom());
            doc.insert_fresh_morphism(&base, &k);
        }
        Command::Cokernel => {
            let c = cokernel(&ms[0]);
            verify(c.is_coisometry() && c.compose(&ms[0])?.is_zero(), "cokernel is coisometric and c f = 0")?;
            doc.ensure_object(&base, c.cod());
            doc.insert_fresh_morphism(&base, &c);
        }
        Command::Complement => {
            if !ms[0].is_mono() {
                return Err(Error::NotMono);
            }
            let c = complement(&ms[0]);
            verify(
                c.is_isometry() && ms[0].adjoint().compose(&c)?.is_zero(),
                "complement is isometric and orthogonal",
            )?;
            doc.ensure_object(&base, c.dom());
            doc.insert_fresh_morphism(&base, &c);
        }
        Command::Retraction => {
            let r = canonical_retraction(&ms[0])?;
            verify(r.compose(&ms[0])?.is_identity(), "r s = 1")?;
            doc.insert_fresh_morphism(&base, &r);
        }
        Command::RangeFactor => {
            let rf = range_factorization(&ms[0]);
            verify(
                rf.j.is_isometry() && rf.e.is_coisometry() && rf.u.try_inverse().is_some() && rf.recompose()? == ms[0],
                "f = j u e",
            )?;
            doc.ensure_object(&format!("{base}_image"), rf.u.dom());
            doc.insert_fresh_morphism(&format!("{base}_j"), &rf.j);
            doc.insert_fresh_morphism(&format!("{base}_u"), &rf.u);
            doc.insert_fresh_morphism(&format!("{base}_e"), &rf.e);
        }
        Command::GramSchmidt => {
            let c = WideCospan::new(ms)?;
            let t = gram_schmidt(&c)?;
            let legs = t.legs();
            for j in 0..legs.len() {
                for k in j + 1..legs.len() {
                    verify(legs[j].adjoint().compose(&legs[k])?.is_zero(), "legs are orthogonal")?;
                }
                verify(same_subobject(&c.prefix(j + 1).block(), &t.prefix(j + 1).block())?, "prefix unions agree")?;
            }
            for (k, leg) in legs.iter().enumerate() {
                doc.insert_fresh_morphism(&format!("{base}_t{}", k + 1), leg);
            }
        }
        Command::Classify => {
            let c = classify(&ms[0]);
            doc.insert_result(&base, serde_json::to_value(c).expect("flags serialize"));
        }
        Command::Positivity => {
            let h = &ms[0];
            let v = is_positive_endo(h)?;
            verify(v.verify(h), "positivity certificate")?;
            match v {
                PositivityVerdict::Positive { factor, .. } => {
                    let name = doc.insert_fresh_morphism(&format!("{base}_factor"), &factor);
                    doc.insert_result(&base, json!({ "positive": true, "factor": name }));
                }
                PositivityVerdict::NotPositive { witness, value } => {
                    let w: Vec<String> = witness.iter().map(|x| x.to_string()).collect();
                    doc.insert_result(&base, json!({ "positive": false, "witness": w, "value": value.to_string() }));
                }
            }
        }
        Command::Le => {
            let r = le(&ms[0], &ms[1])?;
            doc.insert_result(&base, json!(r));
        }
        Command::Invert => {
            let inv = invert(&ms[0])?;
            verify(inv.compose(&ms[0])?.is_identity() && ms[0].compose(&inv)?.is_identity(), "two-sided inverse")?;
            doc.insert_fresh_morphism(&base, &inv);
        }
        Command::Schur => {
            let (a, b, f) = (&ms[0], &ms[1], &ms[2]);
            let s = schur_inverse(a, b, f)?;
            let direct = b.sub(&f.compose(&invert(a)?)?.compose(&f.adjoint())?)?;
            verify(s.compose(&direct)?.is_identity(), "schur inverse inverts b - f a^-1 f*")?;
            doc.insert_fresh_morphism(&base, &s);
        }
        Command::BoundedTransform => {
            let bt = bounded_transform(&ms[0], &ms[1])?;
            verify(bt.c.compose(&bt.d)? == ms[0] && is_contraction(&bt.c), "f = c d with c contractive")?;
            doc.insert_fresh_morphism(&format!("{base}_c"), &bt.c);
            doc.insert_fresh_morphism(&format!("{base}_d"), &bt.d);
            doc.insert_fresh_morphism(&format!("{base}_d_inv"), &bt.d_inv);
        }
        Command::Codilator | Command::CodilatorStrict | Command::CodilatorPi => {
            let cert = match cmd {
                Command::Codilator => codilator(&ms[0])?,
                Command::CodilatorStrict => codilator_strict(&ms[0])?,
                _ => codilator_partial_isometry(&ms[0])?,
            };
            verify(cert.verify(), "codilator certificate")?;
            insert_codilation(doc, &base, &cert.codilation);
        }
        Command::DouglasExtend => {
            let (f, g) = (&ms[0], &ms[1]);
            let h = douglas_extension(f, g)?;
            verify(h.compose(f)? == *g && is_contraction(&h), "h f = g with h contractive")?;
            doc.insert_fresh_morphism(&base, &h);
        }
        Command::Mediate => {
            let (f, t1, t2) = (&ms[0], &ms[1], &ms[2]);
            let other = Codilation { apex: t1.cod().clone(), s1: t1.clone(), s2: t2.clone(), subject: f.clone() };
            if !other.verify() {
                return Err(Error::precondition("t1, t2 must be isometries into one object with t2* t1 = f"));
            }
            let cert: CodilatorCertificate<D> = codilator(f)?;
            let h = mediating_isometry(&cert, &other)?;
            verify(h.compose(&cert.codilation.s1)? == *t1 && h.compose(&cert.codilation.s2)? == *t2, "h s_k = t_k")?;
            insert_codilation(doc, &format!("{base}_codilator"), &cert.codilation);
            doc.insert_fresh_morphism(&base, &h);
        }
        Command::Laws => unreachable!("handled before loading a document"),
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("starcat: {e}");
            ExitCode::from(if e.is_parse() { 2 } else { 1 })
        }
    }
}
