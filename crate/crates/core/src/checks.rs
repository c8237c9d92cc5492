//! Identity suites run by `grafcl check` and `grafcl sweep`.
//!
//! Every check records how many cases it evaluated and up to
//! [`MAX_COUNTEREXAMPLES`] failing cases, each written as an expression in the
//! CLI language so it can be pasted back into `grafcl eval`.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use crate::blade::Blade;
use crate::error::{Error, Result};
use crate::form::Form;
use crate::oracle;
use crate::products::{self, graf_forward_formula, graf_reversed_formula};
use crate::random::FormSampler;
use crate::rational::{self, Rational};
use crate::signature::{Mod8Class, Signature};
use crate::structure::{self, Sign, SplitMembership, Truncation};

pub const MAX_COUNTEREXAMPLES: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    All,
    Volume,
    Hodge,
    Projectors,
    Truncated,
    Oracle,
    Centrality,
}

impl Suite {
    pub const EACH: [Suite; 6] = [
        Suite::Volume,
        Suite::Hodge,
        Suite::Projectors,
        Suite::Truncated,
        Suite::Oracle,
        Suite::Centrality,
    ];

    fn expand(self) -> Vec<Suite> {
        match self {
            Suite::All => Self::EACH.to_vec(),
            s => vec![s],
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::All => "all",
            Suite::Volume => "volume",
            Suite::Hodge => "hodge",
            Suite::Projectors => "projectors",
            Suite::Truncated => "truncated",
            Suite::Oracle => "oracle",
            Suite::Centrality => "centrality",
        })
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "all" => Suite::All,
            "volume" => Suite::Volume,
            "hodge" => Suite::Hodge,
            "projectors" => Suite::Projectors,
            "truncated" => Suite::Truncated,
            "oracle" => Suite::Oracle,
            "centrality" => Suite::Centrality,
            _ => return Err(Error::Eval(format!("unknown suite {s:?}"))),
        })
    }
}

#[derive(Debug, Clone, Copy)]
pub struct CheckConfig {
    /// Random forms per randomized check.
    pub random_forms: usize,
    /// Random triples for the associativity check.
    pub random_triples: usize,
    /// Maximum number of terms in a random form.
    pub max_terms: usize,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            random_forms: 100,
            random_triples: 200,
            max_terms: 4,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub cases: u64,
    pub counterexamples: Vec<String>,
    /// Reported but never failing (empirical questions).
    pub informational: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckOutcome {
    fn new(name: &str) -> Self {
        CheckOutcome {
            name: name.to_string(),
            passed: true,
            cases: 0,
            counterexamples: Vec::new(),
            informational: false,
            witness: None,
            note: None,
        }
    }

    fn case(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            if !self.informational {
                self.passed = false;
            }
            if self.counterexamples.len() < MAX_COUNTEREXAMPLES {
                self.counterexamples.push(describe());
            }
        }
    }

    fn note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub passed: bool,
    pub checks: Vec<CheckOutcome>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SignatureReport {
    pub signature: Signature,
    pub class: Mod8Class,
    pub passed: bool,
    pub suites: Vec<SuiteReport>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub suite: Suite,
    pub signatures_covered: usize,
    pub passed: bool,
    pub signatures: Vec<SignatureReport>,
}

impl CheckReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One line per signature and suite, plus failing checks.
    pub fn summary(&self) -> String {
        let mut s = String::new();
        for sr in &self.signatures {
            for su in &sr.suites {
                let cases: u64 = su.checks.iter().map(|c| c.cases).sum();
                let _ = writeln!(
                    s,
                    "{} {:<11} {} ({} checks, {} cases)",
                    sr.signature,
                    su.suite.to_string(),
                    if su.passed { "PASS" } else { "FAIL" },
                    su.checks.len(),
                    cases
                );
                for c in &su.checks {
                    if !c.passed {
                        let _ = writeln!(s, "    FAIL {}", c.name);
                        for ce in &c.counterexamples {
                            let _ = writeln!(s, "        {ce}");
                        }
                    }
                    if let Some(w) = &c.witness {
                        let _ = writeln!(s, "    witness: {w}");
                    }
                    if let Some(n) = &c.note {
                        let _ = writeln!(s, "    {}: {n}", c.name);
                    }
                }
            }
        }
        let _ = writeln!(
            s,
            "{}: {} signature(s), suite {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.signatures_covered,
            self.suite
        );
        s
    }
}

fn ex(f: &Form) -> String {
    format!("({})", f.to_expr())
}

fn blade_ex(b: Blade, n: u32) -> String {
    b.render(n)
}

fn lower_blade(sig: Signature) -> impl Fn(Blade) -> bool {
    let half = sig.half();
    move |b: Blade| b.grade() <= half
}

fn sampler(sig: Signature, salt: u64, cfg: &CheckConfig) -> FormSampler {
    FormSampler::for_signature(sig, salt, cfg.max_terms)
}

fn scalar(sig: Signature, r: Rational) -> Form {
    Form::scalar(sig, r)
}

// --- volume ------------------------------------------------------------------

fn volume_suite(sig: Signature) -> Vec<CheckOutcome> {
    let n = sig.dim();
    let class = sig.class();

    let mut two_path = CheckOutcome::new("v <> v equals (-1)^(floor(n/2)+q)");
    let vv = structure::volume_square(sig);
    two_path.case(vv == structure::volume_square_closed_form(sig), || {
        format!("vol <> vol = {vv}")
    });

    let mut mod8 = CheckOutcome::new("sign +1 iff (p-q) mod 8 in {0,1,4,5}");
    mod8.case(
        (Mod8Class::closed_form_sign(sig) == 1) == matches!(class.s, 0 | 1 | 4 | 5),
        || format!("s = {}", class.s),
    );

    let mut top = CheckOutcome::new("cw(n, vol, vol) = n! g^11...g^nn");
    let v = structure::volume(sig);
    let got = products::contracted_wedge(n, &v, &v).expect("same signature");
    let fact = (1..=i64::from(n)).fold(Rational::one(), |a, k| a * rational::int(k));
    let sign = if sig.q().is_multiple_of(2) { 1 } else { -1 };
    top.case(got == scalar(sig, fact * rational::int(sign)), || {
        format!("cw({n}, vol, vol) = {got}")
    });

    vec![two_path, mod8, top]
}

// --- hodge -------------------------------------------------------------------

fn hodge_suite(sig: Signature, cfg: &CheckConfig) -> Vec<CheckOutcome> {
    let n = sig.dim();
    let v = structure::volume(sig);
    let mut rng = sampler(sig, 0x40d6e, cfg);

    let mut unit = CheckOutcome::new("hodge(one) = vol");
    unit.case(structure::hodge(&Form::one(sig)) == v, || {
        "hodge(one)".into()
    });

    let mut top = CheckOutcome::new("hodge(vol) = vol <> vol");
    top.case(
        structure::hodge(&v) == structure::volume_square(sig),
        || "hodge(vol)".into(),
    );

    let mut grade = CheckOutcome::new("hodge maps grade r to grade n-r");
    for b in Blade::basis(n) {
        let h = structure::hodge(&Form::blade(sig, b));
        grade.case(h.homogeneous_grade() == Some(n - b.grade()), || {
            format!("hodge({})", blade_ex(b, n))
        });
    }

    let sign = rational::int(sig.class().v_square_sign.into());
    let mut square = CheckOutcome::new("hodge(hodge(f)) = +-f by mod-8 class");
    let mut paths = CheckOutcome::new("f <> vol = (1/r!)(-1)^[r/2] cw(r, f, vol)");
    for _ in 0..cfg.random_forms {
        let f = rng.form(sig);
        let star = structure::hodge(&f);
        square.case(structure::hodge(&star) == f.scale(&sign), || {
            format!("hodge(hodge({}))", ex(&f))
        });
        paths.case(structure::hodge_via_contraction(&f) == star, || {
            format!("hodge({})", ex(&f))
        });
    }
    vec![unit, top, grade, square, paths]
}

// --- projectors --------------------------------------------------------------

fn projector_suite(sig: Signature, cfg: &CheckConfig) -> Vec<CheckOutcome> {
    let class = sig.class();
    let plus_class = class.splitting_exists;
    let one = Form::one(sig);
    let v = structure::volume(sig);
    let pp = structure::p_element(Sign::Plus, sig);
    let pm = structure::p_element(Sign::Minus, sig);
    let half = rational::ratio(1, 2);
    let mut rng = sampler(sig, 0x9e0, cfg);
    let mut out = Vec::new();

    let mut sum = CheckOutcome::new("pplus + pminus = one");
    sum.case(&pp + &pm == one, || "pplus + pminus".into());
    out.push(sum);

    // p± <> p± and p± <> p∓ case tables
    let mut table = CheckOutcome::new("p-element products follow the mod-8 case table");
    for (a, b, sa, sb) in [
        (&pp, &pp, Sign::Plus, Sign::Plus),
        (&pm, &pm, Sign::Minus, Sign::Minus),
        (&pp, &pm, Sign::Plus, Sign::Minus),
        (&pm, &pp, Sign::Minus, Sign::Plus),
    ] {
        let got = products::graf(a, b).expect("same signature");
        let want = match (sa == sb, plus_class) {
            (true, true) => a.clone(),
            (true, false) => v.scale(&(half.clone() * rational::int(sa.value()))),
            (false, true) => Form::zero(sig),
            (false, false) => one.scale(&half),
        };
        let name = |s: Sign| if s == Sign::Plus { "pplus" } else { "pminus" };
        table.case(got == want, || format!("{} <> {}", name(sa), name(sb)));
    }
    out.push(table);

    let mut complete = CheckOutcome::new("projp(f) + projm(f) = f");
    let mut regular = CheckOutcome::new("projp(f) = f <> pplus, projm(f) = f <> pminus");
    let mut idem = CheckOutcome::new(if plus_class {
        "projp(projp(f)) = projp(f), projm(projm(f)) = projm(f)"
    } else {
        "projp(projp(f)) = 1/2 hodge(f), projm(projm(f)) = -1/2 hodge(f)"
    });
    let mut ortho = CheckOutcome::new(if plus_class {
        "projp(projm(f)) = projm(projp(f)) = 0"
    } else {
        "projp(projm(f)) = projm(projp(f)) = 1/2 f"
    });
    let mut eigen = CheckOutcome::new("hodge(projp(f)) = projp(f), hodge(projm(f)) = -projm(f)");
    let mut split = CheckOutcome::new("split reconstructs f from Gamma+ and Gamma-");
    for _ in 0..cfg.random_forms {
        let f = rng.form(sig);
        let fp = structure::project_pm(Sign::Plus, &f);
        let fm = structure::project_pm(Sign::Minus, &f);
        let star = structure::hodge(&f);
        complete.case(&fp + &fm == f, || {
            format!("projp({0}) + projm({0})", ex(&f))
        });
        regular.case(
            fp == products::graf(&f, &pp).unwrap() && fm == products::graf(&f, &pm).unwrap(),
            || format!("projp({0}) - {0} <> pplus", ex(&f)),
        );

        let pp_f = structure::project_pm(Sign::Plus, &fp);
        let mm_f = structure::project_pm(Sign::Minus, &fm);
        let pm_f = structure::project_pm(Sign::Plus, &fm);
        let mp_f = structure::project_pm(Sign::Minus, &fp);
        if plus_class {
            idem.case(pp_f == fp && mm_f == fm, || {
                format!("projp(projp({}))", ex(&f))
            });
            ortho.case(pm_f.is_zero() && mp_f.is_zero(), || {
                format!("projp(projm({}))", ex(&f))
            });
            eigen.case(
                structure::hodge(&fp) == fp && structure::hodge(&fm) == -&fm,
                || format!("hodge(projp({}))", ex(&f)),
            );
            let ok = match structure::split_reconstruct(&f) {
                Ok((a, b)) => {
                    &a + &b == f
                        && structure::contains(SplitMembership::GammaPlus, &a).unwrap_or(false)
                        && structure::contains(SplitMembership::GammaMinus, &b).unwrap_or(false)
                }
                Err(_) => false,
            };
            split.case(ok, || ex(&f));
        } else {
            let half_star = star.scale(&half);
            idem.case(pp_f == half_star && mm_f == -&half_star, || {
                format!("projp(projp({}))", ex(&f))
            });
            let half_f = f.scale(&half);
            ortho.case(pm_f == half_f && mp_f == half_f, || {
                format!("projp(projm({}))", ex(&f))
            });
            split.case(
                matches!(
                    structure::split_reconstruct(&f),
                    Err(Error::UnsupportedSignature { .. })
                ),
                || ex(&f),
            );
        }
    }
    out.extend([complete, regular, idem, ortho]);
    if plus_class {
        out.push(eigen);
        out.push(split);
    } else {
        out.push(split.note("splitting must be refused in this class"));
    }

    // P± as algebra endomorphisms
    if class.truncation_regime() {
        let mut endo = CheckOutcome::new("projp(a <> b) = projp(a) <> projp(b) (and projm)");
        for _ in 0..cfg.random_forms {
            let (a, b) = (rng.form(sig), rng.form(sig));
            let ab = products::graf(&a, &b).unwrap();
            for sign in [Sign::Plus, Sign::Minus] {
                let lhs = structure::project_pm(sign, &ab);
                let rhs = products::graf(
                    &structure::project_pm(sign, &a),
                    &structure::project_pm(sign, &b),
                )
                .unwrap();
                endo.case(lhs == rhs, || {
                    let p = if sign == Sign::Plus { "projp" } else { "projm" };
                    format!("{p}({0} <> {1}) - {p}({0}) <> {p}({1})", ex(&a), ex(&b))
                });
            }
        }
        out.push(endo);
    } else if sig.dim().is_multiple_of(2) {
        let mut guard = CheckOutcome::new("projectors fail to be endomorphisms (even n)");
        let n = sig.dim();
        let found = structure::endomorphism_counterexample(Sign::Plus, sig);
        guard.case(found.is_some(), || "no counterexample found".into());
        if let Some((a, b)) = found {
            let (a, b) = (blade_ex(a, n), blade_ex(b, n));
            guard.witness = Some(format!("projp({a} <> {b}) - projp({a}) <> projp({b})"));
        }
        out.push(guard);
    }
    out
}

// --- truncated ---------------------------------------------------------------

fn truncated_suite(sig: Signature, cfg: &CheckConfig) -> Vec<CheckOutcome> {
    let n = sig.dim();
    let regime = sig.class().truncation_regime();
    let one = Form::one(sig);
    let two = rational::int(2);
    let mut rng = sampler(sig, 0x7e6c, cfg);
    let mut out = Vec::new();
    let name = |s: Sign| if s == Sign::Plus { "tgp" } else { "tgm" };
    let proj = |s: Sign| if s == Sign::Plus { "projp" } else { "projm" };

    let mut closure = CheckOutcome::new("tgp/tgm land in Gamma_L");
    for _ in 0..cfg.random_forms {
        let (a, b) = (rng.form(sig), rng.form(sig));
        for sign in [Sign::Plus, Sign::Minus] {
            let t = products::truncated_graf(sign, &a, &b).unwrap();
            closure.case(t.terms().all(|(bl, _)| bl.grade() <= sig.half()), || {
                format!("{}({}, {})", name(sign), ex(&a), ex(&b))
            });
        }
    }
    out.push(closure);

    if !regime {
        out.push(
            CheckOutcome::new("conditional truncated-algebra identities")
                .note("skipped: need n odd and (p-q) mod 8 in {0,1,4,5}"),
        );
        return out;
    }

    let mut unit = CheckOutcome::new("one is a two-sided unit of tgp/tgm on Gamma_L");
    let mut lower_v = CheckOutcome::new("truncL(f <> vol) = 0 on Gamma_L");
    let lower: Vec<Form> = Blade::basis(n)
        .into_iter()
        .filter(|b| lower_blade(sig)(*b))
        .map(|b| Form::blade(sig, b))
        .chain((0..cfg.random_forms).map(|_| rng.form_where(sig, lower_blade(sig))))
        .collect();
    for f in &lower {
        for sign in [Sign::Plus, Sign::Minus] {
            let r = products::truncated_graf(sign, f, &one).unwrap();
            let l = products::truncated_graf(sign, &one, f).unwrap();
            unit.case(r == *f && l == *f, || {
                format!("{}({}, one)", name(sign), ex(f))
            });
        }
        let fv = structure::hodge(f);
        lower_v.case(
            structure::truncate(Truncation::Lower, &fv).is_zero(),
            || format!("truncL({} <> vol)", ex(f)),
        );
    }
    out.push(unit);
    out.push(lower_v);

    let mut refine = CheckOutcome::new("tgp(a, b) = 2 truncL(projp(a <> b)) (and tgm)");
    let mut round =
        CheckOutcome::new("2 truncL(projp(f)) = f on Gamma_L, projp(2 truncL(g)) = g on Gamma+");
    let mut hom_fwd = CheckOutcome::new("projp(tgp(a, b)) = projp(a) <> projp(b) on Gamma_L");
    let mut hom_back =
        CheckOutcome::new("2 truncL(a <> b) = tgp(2 truncL(a), 2 truncL(b)) on Gamma+");
    let mut assoc = CheckOutcome::new("tgp/tgm associativity (empirical)");
    assoc.informational = true;
    for _ in 0..cfg.random_forms {
        let (a, b) = (rng.form(sig), rng.form(sig));
        let (la, lb) = (
            rng.form_where(sig, lower_blade(sig)),
            rng.form_where(sig, lower_blade(sig)),
        );
        let c = rng.form_where(sig, lower_blade(sig));
        let ab = products::graf(&a, &b).unwrap();
        for sign in [Sign::Plus, Sign::Minus] {
            let t = products::truncated_graf(sign, &a, &b).unwrap();
            let direct = structure::truncate(Truncation::Lower, &structure::project_pm(sign, &ab))
                .scale(&two);
            refine.case(t == direct, || {
                format!("{}({}, {})", name(sign), ex(&a), ex(&b))
            });

            let up = structure::iso_to_gamma_pm(sign, &la).unwrap();
            let back = structure::iso_to_gamma_l(sign, &up).unwrap();
            let g = structure::project_pm(sign, &a);
            let g_back = structure::iso_to_gamma_l(sign, &g)
                .and_then(|l| structure::iso_to_gamma_pm(sign, &l));
            round.case(back == la && g_back.as_ref() == Ok(&g), || {
                format!("2 <> truncL({}({}))", proj(sign), ex(&la))
            });

            let t_l = products::truncated_graf(sign, &la, &lb).unwrap();
            let lhs = structure::project_pm(sign, &t_l);
            let rhs = products::graf(
                &structure::project_pm(sign, &la),
                &structure::project_pm(sign, &lb),
            )
            .unwrap();
            hom_fwd.case(lhs == rhs, || {
                format!("{}({}({}, {}))", proj(sign), name(sign), ex(&la), ex(&lb))
            });

            let (ga, gb) = (
                structure::project_pm(sign, &a),
                structure::project_pm(sign, &b),
            );
            let prod = products::graf(&ga, &gb).unwrap();
            let lhs = structure::iso_to_gamma_l(sign, &prod).unwrap();
            let rhs = products::truncated_graf(
                sign,
                &structure::iso_to_gamma_l(sign, &ga).unwrap(),
                &structure::iso_to_gamma_l(sign, &gb).unwrap(),
            )
            .unwrap();
            hom_back.case(lhs == rhs, || {
                format!("{}({}) <> {}({})", proj(sign), ex(&a), proj(sign), ex(&b))
            });

            let x = products::truncated_graf(sign, &t_l, &c).unwrap();
            let y = products::truncated_graf(
                sign,
                &la,
                &products::truncated_graf(sign, &lb, &c).unwrap(),
            )
            .unwrap();
            assoc.case(x == y, || {
                format!(
                    "{0}({0}({1}, {2}), {3})",
                    name(sign),
                    ex(&la),
                    ex(&lb),
                    ex(&c)
                )
            });
        }
    }
    let note = if assoc.counterexamples.is_empty() {
        format!("held on all {} samples", assoc.cases)
    } else {
        format!("failed on some of {} samples", assoc.cases)
    };
    let assoc = assoc.note(note);
    out.extend([refine, round, hom_fwd, hom_back, assoc]);
    out
}

// --- oracle ------------------------------------------------------------------

fn oracle_suite(sig: Signature, cfg: &CheckConfig) -> Vec<CheckOutcome> {
    let n = sig.dim();
    let basis = Blade::basis(n);
    let blade = |b: Blade| Form::blade(sig, b);
    let mut rng = sampler(sig, 0x0ac1e, cfg);
    let mut out = Vec::new();

    let mut sweep =
        CheckOutcome::new("graf equals the reference Clifford product on all blade pairs");
    match oracle::full_sweep(sig) {
        Ok(report) => {
            sweep.cases = report.pairs_checked;
            sweep.passed = report.passes();
            sweep.counterexamples = report
                .mismatches
                .iter()
                .take(MAX_COUNTEREXAMPLES)
                .map(|m| format!("{} <> {}", m.left, m.right))
                .collect();
        }
        Err(e) => {
            sweep.passed = false;
            sweep.note = Some(e.to_string());
        }
    }
    out.push(sweep);

    let mut gens = CheckOutcome::new("e_i <> e_i = g^ii, e_i <> e_j = -e_j <> e_i");
    for i in 1..=n {
        let ei = Form::vector(sig, i).unwrap();
        let sq = products::graf(&ei, &ei).unwrap();
        gens.case(
            sq == scalar(sig, rational::int(sig.metric(i).into())),
            || format!("e{{{i}}} <> e{{{i}}}"),
        );
        for j in 1..=n {
            if i != j {
                let ej = Form::vector(sig, j).unwrap();
                let a = products::graf(&ei, &ej).unwrap();
                let b = products::graf(&ej, &ei).unwrap();
                gens.case(a == -&b && a == ei.wedge(&ej).unwrap(), || {
                    format!("e{{{i}}} <> e{{{j}}} + e{{{j}}} <> e{{{i}}}")
                });
            }
        }
    }
    out.push(gens);

    let mut two_path = CheckOutcome::new("cw(l, A, B) recursion equals the unfolded sum");
    let mut grade_law = CheckOutcome::new("cw(l, A, B) has grade r+s-2l or vanishes");
    let mut vanish = CheckOutcome::new("cw(l, A, B) = 0 and A <> B = A ^ B for disjoint A, B");
    let mut formulas =
        CheckOutcome::new("forward and reversed graf formulas agree at equal grades");
    for &a in &basis {
        for &b in &basis {
            let (fa, fb) = (blade(a), blade(b));
            let (r, s) = (a.grade(), b.grade());
            let disjoint = a.bits() & b.bits() == 0;
            for l in 0..=n {
                let rec = products::contracted_wedge(l, &fa, &fb).unwrap();
                let unf = oracle::oracle_contracted_wedge(l, &fa, &fb).unwrap();
                two_path.case(rec == unf, || {
                    format!("cw({l}, {}, {})", blade_ex(a, n), blade_ex(b, n))
                });
                let expect = (r + s).checked_sub(2 * l);
                grade_law.case(rec.is_zero() || rec.homogeneous_grade() == expect, || {
                    format!("cw({l}, {}, {})", blade_ex(a, n), blade_ex(b, n))
                });
                if disjoint && l >= 1 {
                    vanish.case(rec.is_zero(), || {
                        format!("cw({l}, {}, {})", blade_ex(a, n), blade_ex(b, n))
                    });
                }
            }
            if disjoint {
                vanish.case(
                    products::graf(&fa, &fb).unwrap() == fa.wedge(&fb).unwrap(),
                    || format!("{0} <> {1} - {0} ^ {1}", blade_ex(a, n), blade_ex(b, n)),
                );
            }
            if r == s {
                // x <> y by the forward formula vs by the reversed formula with roles swapped
                let fwd = graf_forward_formula(&fa, &fb).unwrap();
                let rev = graf_reversed_formula(&fb, &fa).unwrap();
                formulas.case(fwd == rev, || {
                    format!("{} <> {}", blade_ex(a, n), blade_ex(b, n))
                });
            }
        }
    }
    out.extend([two_path, grade_law, vanish, formulas]);

    if n <= 5 {
        let mut oracle_assoc = CheckOutcome::new("reference product is associative and unital");
        let one = Blade::ONE;
        for &a in &basis {
            let (u1, s1) = oracle::oracle_clifford_blades(one, a, sig);
            let (u2, s2) = oracle::oracle_clifford_blades(a, one, sig);
            oracle_assoc.case(u1 == a && u2 == a && s1 == 1 && s2 == 1, || blade_ex(a, n));
            for &b in &basis {
                let (ab, sab) = oracle::oracle_clifford_blades(a, b, sig);
                for &c in &basis {
                    let (bc, sbc) = oracle::oracle_clifford_blades(b, c, sig);
                    let (l, sl) = oracle::oracle_clifford_blades(ab, c, sig);
                    let (r, sr) = oracle::oracle_clifford_blades(a, bc, sig);
                    oracle_assoc.case(l == r && sab * sl == sbc * sr, || {
                        format!(
                            "({0} <> {1}) <> {2} - {0} <> ({1} <> {2})",
                            blade_ex(a, n),
                            blade_ex(b, n),
                            blade_ex(c, n)
                        )
                    });
                }
            }
        }
        out.push(oracle_assoc);
    }

    let mut quad = CheckOutcome::new("x <> x = Q(x) for 1-forms x");
    let mut tri = CheckOutcome::new("x /\\ y = x ^ y for 1-forms");
    for i in 1..=n {
        for j in 1..=n {
            let (ei, ej) = (Form::vector(sig, i).unwrap(), Form::vector(sig, j).unwrap());
            tri.case(
                products::triangle(&ei, &ej).unwrap() == ei.wedge(&ej).unwrap(),
                || format!("e{{{i}}} /\\ e{{{j}}}"),
            );
        }
    }
    for _ in 0..cfg.random_forms {
        let x = rng.vector(sig);
        let y = rng.vector(sig);
        let q = x
            .terms()
            .map(|(b, c)| {
                let i = b.indices().next().expect("1-form");
                c * c * rational::int(sig.metric(i).into())
            })
            .fold(Rational::from_integer(0.into()), |a, t| a + t);
        quad.case(products::graf(&x, &x).unwrap() == scalar(sig, q), || {
            format!("{0} <> {0}", ex(&x))
        });
        tri.case(
            products::triangle(&x, &y).unwrap() == x.wedge(&y).unwrap()
                && products::triangle(&x, &x).unwrap().is_zero(),
            || format!("{} /\\ {}", ex(&x), ex(&y)),
        );
    }
    out.push(quad);
    out.push(tri);

    let mut unit = CheckOutcome::new("one <> f = f <> one = f");
    let mut assoc = CheckOutcome::new("graf is associative");
    let one = Form::one(sig);
    for _ in 0..cfg.random_triples {
        let (a, b, c) = (rng.form(sig), rng.form(sig), rng.form(sig));
        unit.case(
            products::graf(&one, &a).unwrap() == a && products::graf(&a, &one).unwrap() == a,
            || format!("one <> {}", ex(&a)),
        );
        let l = products::graf(&products::graf(&a, &b).unwrap(), &c).unwrap();
        let r = products::graf(&a, &products::graf(&b, &c).unwrap()).unwrap();
        assoc.case(l == r, || {
            format!(
                "({0} <> {1}) <> {2} - {0} <> ({1} <> {2})",
                ex(&a),
                ex(&b),
                ex(&c)
            )
        });
    }
    out.push(unit);
    out.push(assoc);
    out
}

// --- centrality --------------------------------------------------------------

fn centrality_suite(sig: Signature, cfg: &CheckConfig) -> Vec<CheckOutcome> {
    let n = sig.dim();
    if n % 2 == 1 {
        let mut c = CheckOutcome::new("vol is central (odd n)");
        for b in Blade::basis(n) {
            c.case(structure::centrality_check(&Form::blade(sig, b)), || {
                format!("{0} <> vol - vol <> {0}", blade_ex(b, n))
            });
        }
        let mut rng = sampler(sig, 0xce7, cfg);
        for _ in 0..cfg.random_forms {
            let f = rng.form(sig);
            c.case(structure::centrality_check(&f), || {
                format!("{0} <> vol - vol <> {0}", ex(&f))
            });
        }
        vec![c]
    } else {
        let mut c = CheckOutcome::new("vol is not central (even n): witness search");
        let found = structure::noncentral_witness(sig);
        c.case(found.is_some(), || {
            "no blade fails to commute with vol".into()
        });
        c.witness = found.map(|b| format!("{0} <> vol - vol <> {0}", blade_ex(b, n)));
        vec![c]
    }
}

/// Runs one suite (or all of them) for a single signature.
pub fn run_checks(sig: Signature, suite: Suite, cfg: &CheckConfig) -> SignatureReport {
    let suites: Vec<SuiteReport> = suite
        .expand()
        .into_iter()
        .map(|s| {
            let checks = match s {
                Suite::Volume => volume_suite(sig),
                Suite::Hodge => hodge_suite(sig, cfg),
                Suite::Projectors => projector_suite(sig, cfg),
                Suite::Truncated => truncated_suite(sig, cfg),
                Suite::Oracle => oracle_suite(sig, cfg),
                Suite::Centrality => centrality_suite(sig, cfg),
                Suite::All => unreachable!("expanded"),
            };
            SuiteReport {
                suite: s,
                passed: checks.iter().all(|c| c.passed),
                checks,
            }
        })
        .collect();
    SignatureReport {
        signature: sig,
        class: sig.class(),
        passed: suites.iter().all(|s| s.passed),
        suites,
    }
}

pub fn check_signature(sig: Signature, suite: Suite, cfg: &CheckConfig) -> CheckReport {
    let report = run_checks(sig, suite, cfg);
    CheckReport {
        suite,
        signatures_covered: 1,
        passed: report.passed,
        signatures: vec![report],
    }
}

/// Every signature with `1 <= p+q <= max_n`, evaluated in parallel and
/// reported in signature order.
pub fn sweep(max_n: u32, suite: Suite, cfg: &CheckConfig) -> Result<CheckReport> {
    if max_n == 0 || max_n > oracle::SWEEP_MAX_DIM {
        return Err(Error::Budget {
            n: max_n,
            max: oracle::SWEEP_MAX_DIM,
        });
    }
    let sigs = Signature::all_up_to(max_n);
    let signatures: Vec<SignatureReport> = sigs
        .par_iter()
        .map(|&s| run_checks(s, suite, cfg))
        .collect();
    Ok(CheckReport {
        suite,
        signatures_covered: signatures.len(),
        passed: signatures.iter().all(|s| s.passed),
        signatures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> CheckConfig {
        CheckConfig {
            random_forms: 10,
            random_triples: 10,
            max_terms: 3,
        }
    }

    #[test]
    fn all_suites_pass_in_three_dimensions() {
        let s = Signature::new(3, 0).unwrap();
        let r = check_signature(s, Suite::All, &small());
        assert!(r.passed, "{}", r.summary());
        assert_eq!(r.signatures[0].suites.len(), 6);
    }

    #[test]
    fn plane_reports_noncentral_witness() {
        let s = Signature::new(2, 0).unwrap();
        let r = run_checks(s, Suite::Centrality, &small());
        assert!(r.passed);
        let w = r.suites[0].checks[0].witness.as_deref().unwrap();
        assert_eq!(w, "e1 <> vol - vol <> e1");
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::EACH.iter().chain([Suite::All].iter()) {
            assert_eq!(s.to_string().parse::<Suite>().unwrap(), *s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn sweep_bounds() {
        assert!(sweep(0, Suite::Volume, &small()).is_err());
        assert!(sweep(11, Suite::Volume, &small()).is_err());
        let r = sweep(3, Suite::Volume, &small()).unwrap();
        assert_eq!(r.signatures_covered, 9);
        assert!(r.passed);
    }
}
