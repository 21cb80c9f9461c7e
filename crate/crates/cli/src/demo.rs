//! Worked examples, each asserting its stated conclusion.

use serde_json::{json, Value};

use grdiff_core::rational::{factorial, frac, int};
use grdiff_core::{
    class_member, combine, decide_equivalent, equivalent_gaussian, ggr_set, is_scale,
    limit_probe, mz_check, mz_set_check, n_times_check, named_scheme, peano_probe,
    recognize_gaussian, subgroup_membership, verify_quantum_ggr, Certificate, ChainEntry,
    Conjecture, Error, FamilyKind, FunctionOracle, GaussianVariant, Inequivalence, MzStatus,
    PeanoEquivalence, ProbeConfig, ProbeVerdict, Rational, Scheme,
};

use crate::render::{factored, gaussian_equivalence, rat, recognize_line, verdict_line};
use crate::{CliError, Report};

pub const NAMES: [&str; 11] = ["E1", "E2", "E3", "E13", "E14", "E15", "P88", "T14", "T8", "MZ", "GGR"];

struct Demo {
    name: &'static str,
    lines: Vec<String>,
    checks: usize,
}

impl Demo {
    fn new(name: &'static str) -> Self {
        Demo {
            name,
            lines: Vec::new(),
            checks: 0,
        }
    }

    fn say(&mut self, line: impl Into<String>) {
        self.lines.push(line.into());
    }

    fn check(&mut self, ok: bool, what: &str) -> Result<(), CliError> {
        self.checks += 1;
        if ok {
            Ok(())
        } else {
            Err(CliError::Internal(format!("demo {}: {what}", self.name)))
        }
    }

    fn json(&self) -> Value {
        json!({"demo": self.name, "lines": self.lines, "checks": self.checks, "passed": true})
    }
}

fn fam(family_text: &str) -> Result<Scheme, CliError> {
    Ok(named_scheme(&family_text.parse::<FamilyKind>()?)?)
}

fn scheme(pairs: &[(Rational, i64)]) -> Scheme {
    Scheme::canonicalize(pairs.iter().map(|(c, b)| (c.clone(), int(*b))))
}

fn witness_text(a: &Scheme, b: &Scheme) -> Result<(String, Option<grdiff_core::Witness>), CliError> {
    let v = decide_equivalent(a, b)?;
    Ok((v.to_string(), v.witness().cloned()))
}

fn e1(d: &mut Demo) -> Result<(), CliError> {
    let s = fam("gauss-aff:n=2,q=2")?.scale(&int(2))?;
    d.say(format!("scale by 2 of the affine q=2 second difference: {s}"));
    d.check(
        s == scheme(&[(frac(1, 12), 8), (frac(-1, 4), 4), (frac(1, 6), 2)]),
        "coefficients are 1/4 of the original at doubled nodes",
    )?;
    let m = recognize_gaussian(&s);
    d.say(recognize_line(m.as_ref()));
    d.check(
        m.as_ref().is_some_and(|m| m.variant == GaussianVariant::Affine && m.q == int(2) && m.scale_b == int(2)),
        "recognized as scale-of-affine q=2 b=2",
    )?;
    let eq = equivalent_gaussian(&s)?;
    d.say(format!("equivalent-gaussian: {}", gaussian_equivalence(eq.as_ref())));
    d.check(eq.is_some(), "a scale of a Gaussian is equivalent to it")
}

fn e2(d: &mut Demo) -> Result<(), CliError> {
    let a = fam("gauss-aff:n=2,q=2")?;
    let b = class_member(&a, &int(1), &int(1), &int(3))?;
    d.say(format!("sym part plus 3 times skew part: {}", factored(&b)));
    let l = frac(1, 3);
    let want = scheme(&[
        (int(2) * &l, 4),
        (int(-6) * &l, 2),
        (int(4) * &l, 1),
        (int(-2) * &l, -1),
        (int(3) * &l, -2),
        (int(-1) * &l, -4),
    ]);
    d.check(b == want, "displayed coefficients")?;
    let (text, w) = witness_text(&a, &b)?;
    d.say(format!("equiv: {text}"));
    d.check(
        w.is_some_and(|w| w.r == int(1) && w.s == int(1) && w.skew_factor == int(3)),
        "witness r=s=1, B=3",
    )?;
    let m = recognize_gaussian(&b);
    d.say(recognize_line(m.as_ref()));
    d.check(m.is_none(), "not a Gaussian nor a scale of one")?;
    let eq = equivalent_gaussian(&b)?;
    d.say(format!("equivalent-gaussian: {}", gaussian_equivalence(eq.as_ref())));
    d.check(
        eq.is_some_and(|g| g.matched.variant == GaussianVariant::Affine && g.matched.q == int(2)),
        "equivalent to the affine q=2 Gaussian",
    )
}

fn e3(d: &mut Demo) -> Result<(), CliError> {
    let sym = scheme(&[(frac(1, 2), 1), (frac(-1, 2), -1)]);
    let fwd = scheme(&[(int(1), 1), (int(-1), 0)]);
    let three = scheme(&[(int(3), 1), (int(-5), 0), (int(2), -1)]);

    let v = decide_equivalent(&sym, &fwd)?;
    d.say(format!("symmetric vs forward: {v}"));
    d.check(v.reason() == Some(Inequivalence::SkewZeroVsNonzero), "symmetric first is not ordinary first")?;

    let (text, w) = witness_text(&fwd, &three)?;
    d.say(format!("forward vs three-term: {text}"));
    d.check(
        w.is_some_and(|w| w.r == int(1) && w.s == int(1) && w.sym_factor == int(1) && w.skew_factor == int(5)),
        "A=1, B=5",
    )?;
    let (text, w) = witness_text(&three, &fwd)?;
    d.say(format!("three-term vs forward: {text}"));
    d.check(
        w.is_some_and(|w| w.r == int(1) && w.s == int(1) && w.sym_factor == int(1) && w.skew_factor == frac(1, 5)),
        "A=1, B=1/5",
    )?;

    let back = combine(&[(frac(3, 5), int(1), three.clone()), (frac(-2, 5), int(-1), three)])?;
    d.say(format!("(3/5)C(h) - (2/5)C(-h) = {back}"));
    d.check(back == fwd, "the three-term difference recovers the forward one")?;

    let cfg = ProbeConfig::default();
    let zero = int(0);
    let p = limit_probe(&sym, &FunctionOracle::Abs, &zero, &cfg)?;
    d.say(format!("|x|, symmetric quotient: {}", p.verdict));
    d.check(
        p.verdict == ProbeVerdict::Converges { estimate: grdiff_core::Estimate::Exact { value: int(0) } },
        "symmetric derivative of |x| at 0 is 0",
    )?;
    let p = limit_probe(&fwd, &FunctionOracle::Abs, &zero, &cfg)?;
    d.say(format!("|x|, forward quotient: {}", p.verdict));
    d.check(
        matches!(&p.verdict, ProbeVerdict::Diverges { first, second } if first.value == 1.0 && second.value == -1.0),
        "ordinary derivative of |x| at 0 does not exist",
    )
}

fn nabla() -> Scheme {
    scheme(&[(frac(3, 4), 2), (int(-2), 1), (frac(3, 2), 0), (frac(-1, 4), -2)])
}

fn e13(d: &mut Demo) -> Result<(), CliError> {
    let d31 = fam("shift:n=3,k=-1")?;
    let (plus, minus) = d31.decompose(3);
    d.say(format!("D = {d31}"));
    d.say(format!("D+ = {plus}"));
    d.say(format!("D- = {minus}"));
    d.check(
        plus == scheme(&[(frac(1, 2), 2), (int(-1), 1), (int(1), -1), (frac(-1, 2), -2)]),
        "symmetrizer",
    )?;
    d.check(
        minus == scheme(&[(frac(1, 2), 2), (int(-2), 1), (int(3), 0), (int(-2), -1), (frac(1, 2), -2)]),
        "skew-symmetrizer",
    )?;
    let nab = class_member(&d31, &int(1), &int(1), &frac(1, 2))?;
    d.say(format!("∇ = D+ + (1/2)D- = {}", factored(&nab)));
    d.check(nab == nabla(), "∇ coefficients")?;
    let (text, w) = witness_text(&d31, &nab)?;
    d.say(format!("equiv: {text}"));
    d.check(
        w.is_some_and(|w| w.r == int(1) && w.s == int(1) && w.skew_factor == frac(1, 2)),
        "witness B=1/2",
    )?;
    let sc = is_scale(&d31, &nab)?;
    d.say(format!("is_scale: {}", sc.as_ref().map_or("none".into(), rat)));
    d.check(sc.is_none(), "∇ is not a scale of D")?;

    let comb = combine(&[(int(1), int(2), d31), (int(-4), int(1), nab)])?;
    let nodes: Vec<Rational> = comb.nodes().cloned().collect();
    d.say(format!("D(2h) - 4∇(h) = {comb}; m3 = {}", rat(&comb.moment(3))));
    d.check(nodes == [int(0), int(1), int(2), int(4)], "node set {0,1,2,4}")?;
    d.check(comb.moment(3) == int(24), "m3 = 24")?;
    d.check(
        comb == fam("mz-tilde:n=3")?.mul_scalar(&(comb.moment(3) / factorial(3))),
        "4 times the tilde difference",
    )
}

fn e14(d: &mut Demo) -> Result<(), CliError> {
    let chain = vec![
        ChainEntry::continuity(),
        ChainEntry::scheme(1, fam("gauss-aff:n=1,q=22/7")?),
        ChainEntry::scheme(2, fam("gauss-fwd:n=2,q=5")?),
        ChainEntry::scheme(3, fam("shift:n=3,k=-1")?.scale(&frac(47, 10))?),
    ];
    let r = n_times_check(&chain)?;
    for o in &r.per_order {
        d.say(format!("order {}: {}", o.order, o.verdict));
    }
    d.say(format!("all-mz: {}", r.all_mz));
    d.check(r.all_mz, "every order is MZ")?;
    d.check(r.peano_equivalence == PeanoEquivalence::EstablishedByAllMz, "three times Peano")
}

fn e15(d: &mut Demo) -> Result<(), CliError> {
    let gens = [int(2), int(3)];
    let inside = subgroup_membership(&frac(1, 2), &gens)?;
    let outside = subgroup_membership(&frac(1, 5), &gens)?;
    d.say(format!("1/2 in <2,3>: {inside}; 1/5 in <2,3>: {outside}"));
    d.check(inside && !outside, "membership of the sampling ratios")?;

    let f: FunctionOracle = "subgmono:k=2;gens=2,3".parse()?;
    let stages = peano_probe(&f, &int(0), 2, &ProbeConfig::default())?;
    for (i, s) in stages.iter().enumerate() {
        d.say(format!("stage {}: {}", i + 1, s.verdict));
    }
    d.check(stages.len() == 2 && stages[0].verdict.converges(), "stage 1 converges")?;
    let ProbeVerdict::Diverges { first, second } = &stages[1].verdict else {
        return Err(CliError::Internal("demo E15: stage 2 should diverge".into()));
    };
    d.say(format!(
        "second Peano candidates: {} (h in G) and {} (h not in G)",
        first.value / 2.0,
        second.value / 2.0
    ));
    d.check(
        first.in_group == Some(true) && second.in_group == Some(false) && first.value == 2.0 && second.value == 0.0,
        "in-group and out-of-group clusters",
    )?;

    let chain = vec![ChainEntry::continuity(), ChainEntry::scheme(1, fam("riemann:n=1")?), ChainEntry::scheme(3, fam("mz-tilde:n=3")?)];
    let r = n_times_check(&chain);
    d.say(format!("chain without order 2: {}", r.as_ref().map_or_else(|e| e.to_string(), |_| "accepted".into())));
    d.check(r == Err(Error::MissingOrder(2)), "missing order rejected")
}

fn p88(d: &mut Demo) -> Result<(), CliError> {
    let d31 = fam("shift:n=3,k=-1")?;
    let v = mz_check(&d31, false)?;
    d.say(verdict_line("mz-check", &v));
    d.check(
        v.status == MzStatus::KnownMz && matches!(v.certificate, Certificate::EquivalentToD31 { .. }),
        "known MZ",
    )?;
    let eq = equivalent_gaussian(&d31)?;
    d.say(format!("equivalent-gaussian: {}", gaussian_equivalence(eq.as_ref())));
    d.check(eq.is_none(), "not equivalent to a Gaussian")?;
    let set = ggr_set(3, true)?;
    d.say(format!("reduced shift set of order 3: {{{}}}", set[0]));
    d.check(set == [d31], "singleton")
}

fn t14(d: &mut Demo) -> Result<(), CliError> {
    for n in 3..=8 {
        let s = named_scheme(&FamilyKind::Riemann { n })?;
        let eq = equivalent_gaussian(&s)?;
        d.say(format!("n={n}: equivalent-gaussian: {}", gaussian_equivalence(eq.as_ref())));
        d.check(eq.is_none(), "Riemann difference is not Gaussian-equivalent")?;
    }
    Ok(())
}

fn t8(d: &mut Demo) -> Result<(), CliError> {
    let mut confirmed = 0;
    for q in [int(2), int(3), frac(1, 2)] {
        for n in 1..=6usize {
            for ell in [-(n as i64), 0] {
                let w = verify_quantum_ggr(n, ell, &q)?;
                let ok = w.iter().all(|(k, r)| *r == grdiff_core::rational::pow(&q, *k));
                d.check(ok && w.len() == n + 1, "scale witnesses are powers of q")?;
                confirmed += w.len();
                if n == 2 {
                    let list: Vec<String> = w.iter().map(|(k, r)| format!("k={k}: {}", rat(r))).collect();
                    d.say(format!("n=2 ell={ell} q={}: {}", rat(&q), list.join(", ")));
                }
            }
        }
    }
    d.say(format!("{confirmed} shifted affine Gaussians confirmed as scales"));
    let set: Vec<Scheme> = (0..=2)
        .map(|k| named_scheme(&FamilyKind::GaussianAffineShift { n: 2, k, q: int(3) }))
        .collect::<Result<_, _>>()?;
    let v = mz_set_check(&set)?;
    d.say(verdict_line("mz-set k=0..2 q=3", &v));
    d.check(
        v.status == MzStatus::KnownMz && matches!(v.certificate, Certificate::CommonScale { .. }),
        "common-scale reduction",
    )
}

fn mz(d: &mut Demo) -> Result<(), CliError> {
    for n in 1..=8 {
        let v = mz_check(&named_scheme(&FamilyKind::MzTilde { n })?, false)?;
        d.say(verdict_line(&format!("tilde D_{n}"), &v));
        d.check(
            matches!(&v.certificate, Certificate::EquivalentToGaussian { matched, .. }
                if matched.variant == GaussianVariant::Forward && matched.q == int(2)),
            "tilde difference is the forward Gaussian at q=2",
        )?;
    }
    let cases: [(&str, bool, MzStatus, Conjecture); 6] = [
        ("riemann:n=3", false, MzStatus::KnownNotMz, Conjecture::None),
        ("riemann:n=7", false, MzStatus::KnownNotMz, Conjecture::None),
        ("riemann:n=5", false, MzStatus::Open, Conjecture::RMz(5)),
        ("sym-riemann:n=2", false, MzStatus::KnownNotMz, Conjecture::None),
        ("gauss-sym:n=3,q=2", true, MzStatus::KnownMz, Conjecture::None),
        ("mz-tilde-sym:n=4", true, MzStatus::KnownMz, Conjecture::None),
    ];
    for (family_text, symmetric, status, conj) in cases {
        let s = fam(family_text)?;
        let v = mz_check(&s, symmetric)?;
        let mode = if symmetric { " (symmetric mode)" } else { "" };
        d.say(verdict_line(&format!("{family_text}{mode}"), &v));
        d.check(v.status == status && v.conjecture == conj, family_text)?;
        if v.status != MzStatus::Open {
            d.check(v.certificate.reverify(&s), "certificate re-verifies")?;
        }
    }

    let chain = vec![
        ChainEntry::continuity(),
        ChainEntry::scheme(1, fam("riemann:n=1")?),
        ChainEntry::scheme(2, fam("sym-riemann:n=2")?),
        ChainEntry::scheme(3, fam("shift:n=3,k=-1")?),
    ];
    let r = n_times_check(&chain)?;
    d.say(format!("chain (cont, D1, D2s, D3,-1): all-mz {}", r.all_mz));
    let PeanoEquivalence::EstablishedByIdentity { replacements } = &r.peano_equivalence else {
        return Err(CliError::Internal("demo MZ: identity certificate expected".into()));
    };
    for e in replacements {
        d.say(format!("  order {} replaced by {} ({})", e.order, e.replacement, e.verdict));
    }
    d.check(
        !r.all_mz && replacements.iter().any(|e| e.order == 2 && e.replacement == fam("riemann:n=2").unwrap_or_default()),
        "second-order identity with nodes 0,1,2",
    )?;

    let cfg = ProbeConfig::default();
    let p = limit_probe(&fam("sym-riemann:n=2")?, &FunctionOracle::SgnSquare, &int(0), &cfg)?;
    d.say(format!("x^2 sgn x, symmetric second quotient: {}", p.verdict));
    d.check(p.verdict.converges() && p.verdict.to_string() == "converges(0)", "symmetric second derivative is 0")?;
    let stages = peano_probe(&FunctionOracle::SgnSquare, &int(0), 2, &cfg)?;
    d.say(format!("x^2 sgn x, tilde chain: {}", stages.iter().map(|s| s.verdict.to_string()).collect::<Vec<_>>().join(", ")));
    d.check(
        stages.len() == 2 && matches!(stages[1].verdict, ProbeVerdict::Diverges { .. }),
        "second Peano derivative does not exist",
    )
}

fn ggr(d: &mut Demo) -> Result<(), CliError> {
    let full = ggr_set(4, false)?;
    for s in &full {
        d.say(format!("order 4 shift: {s}"));
    }
    d.check(full.len() == 4, "four backward shifts")?;
    let v = mz_set_check(&full)?;
    d.say(verdict_line("mz-set full order 4", &v));
    d.check(v.status == MzStatus::KnownMz && v.certificate.reverify_set(&full), "full set is MZ")?;
    let reduced = ggr_set(5, true)?;
    d.say(format!("reduced order 5 set has {} members", reduced.len()));
    d.check(reduced.len() == 2, "shifts k=1,2")?;
    let v = mz_set_check(&reduced)?;
    d.say(verdict_line("mz-set reduced order 5", &v));
    d.check(v.status == MzStatus::KnownMz && v.certificate.reverify_set(&reduced), "reduced set is MZ")?;
    let v = mz_set_check(&[fam("riemann:n=5")?])?;
    d.say(verdict_line("mz-set {D5}", &v));
    d.check(v.status == MzStatus::Open, "open")
}

fn one(name: &str) -> Result<Demo, CliError> {
    let (label, f): (&'static str, fn(&mut Demo) -> Result<(), CliError>) = match name {
        "E1" => ("E1", e1),
        "E2" => ("E2", e2),
        "E3" => ("E3", e3),
        "E13" => ("E13", e13),
        "E14" => ("E14", e14),
        "E15" => ("E15", e15),
        "P88" => ("P88", p88),
        "T14" => ("T14", t14),
        "T8" => ("T8", t8),
        "MZ" => ("MZ", mz),
        "GGR" => ("GGR", ggr),
        other => {
            return Err(CliError::Input(format!(
                "unknown demo {other:?}; known: {}, all",
                NAMES.join(", ")
            )))
        }
    };
    let mut d = Demo::new(label);
    f(&mut d)?;
    Ok(d)
}

/// Runs one demo, or every demo for `all`.
pub fn run(name: &str) -> Result<Report, CliError> {
    if name == "all" {
        let demos = NAMES.iter().map(|n| one(n)).collect::<Result<Vec<_>, _>>()?;
        let text = demos
            .iter()
            .map(|d| format!("== {} ==\n{}", d.name, d.lines.join("\n")))
            .collect::<Vec<_>>()
            .join("\n");
        let json = Value::Array(demos.iter().map(Demo::json).collect());
        return Ok(Report::new(json, text));
    }
    let d = one(name)?;
    Ok(Report::new(d.json(), d.lines.join("\n")))
}
