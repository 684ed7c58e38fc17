use rayon::prelude::*;
use serde_json::{json, Value};

use excited::eyd::{energy, enumerate_eyd, enumerate_for, enumerate_rv, render, ExcitationKind};
use excited::factorial::{giambelli_pfaffian, pieri_check_p, pieri_check_schur, FactorialCache};
use excited::latticepaths::{
    enumerate_path_tuples, eyd_to_paths, eyd_weight_sum, generating_function, path_pfaffian_check, paths_to_eyd,
    render_paths, EdgeWeights, PathKind,
};
use excited::localization::{localize_billey, localize_eyd, verify_chevalley, Method};
use excited::multiplicity::multiplicity_report;
use excited::polyalg::Polynomial;
use excited::shapes::{all_shapes, shape_to_element, top_shape, Partition, Shape, StrictPartition};
use excited::weyl::{LieType, SchubertContext};
use excited::Error;

use crate::args::{excitation, path_kind, KindArg, MethodArg, Pair, Suite};
use crate::cache::DiskCache;
use crate::output::{self, cells_text, document, Report};
use crate::Failure;

fn kind_name(k: ExcitationKind) -> &'static str {
    match k {
        ExcitationKind::Ordinary => "ordinary",
        ExcitationKind::TypeI => "I",
        ExcitationKind::TypeII => "II",
    }
}

fn pair_json(p: &Pair) -> Value {
    json!({
        "lambda": output::shape(&p.lambda),
        "mu": output::shape(&p.mu),
        "w": output::element(&p.w),
        "v": output::element(&p.v),
    })
}

fn merge(mut a: Value, b: Value) -> Value {
    if let (Some(a), Value::Object(b)) = (a.as_object_mut(), b) {
        a.extend(b);
    }
    a
}

pub fn eyd(ctx: &SchubertContext, pair: &Pair, kind: Option<KindArg>) -> Result<Report, Failure> {
    let kind = excitation(ctx, kind);
    let states = enumerate_eyd(&pair.lambda, &pair.mu, kind)?;
    let mut text = format!(
        "λ={} μ={} kind={}: {} excited diagrams\n",
        pair.lambda,
        pair.mu,
        kind_name(kind),
        states.len()
    );
    for s in &states {
        text += &format!("E={}: {}\n", energy(s, &pair.lambda), cells_text(&s.cells));
    }
    let ascii = states
        .iter()
        .map(|s| render(s, &pair.mu))
        .collect::<Vec<_>>()
        .join("\n\n");
    let body = json!({
        "kind": kind_name(kind),
        "count": states.len(),
        "states": states
            .iter()
            .map(|s| json!({ "cells": output::state(s), "energy": energy(s, &pair.lambda).to_string() }))
            .collect::<Vec<_>>(),
    });
    Ok(Report {
        text,
        ascii: Some(ascii + "\n"),
        json: document("eyd", ctx, merge(pair_json(pair), body)),
        ok: true,
    })
}

pub fn localize(
    ctx: &SchubertContext,
    pair: &Pair,
    method: MethodArg,
    memo: &FactorialCache,
    disk: Option<&DiskCache>,
) -> Result<Report, Failure> {
    let methods: &[&str] = match method {
        MethodArg::Eyd => &["eyd"],
        MethodArg::Billey => &["billey"],
        MethodArg::Factorial => &["factorial"],
        MethodArg::All => &["eyd", "billey", "factorial"],
    };
    let mut values: Vec<(&str, Polynomial)> = Vec::new();
    for &m in methods {
        let p = match m {
            "eyd" => localize_eyd(ctx, &pair.w, &pair.v)?,
            "billey" => localize_billey(ctx, &pair.w, &pair.v, None)?,
            _ => {
                if let Some(d) = disk {
                    d.load(memo, ctx, &pair.lambda);
                }
                let p = memo.localize(ctx, &pair.w, &pair.v)?;
                if let Some(d) = disk {
                    d.store(memo).map_err(|e| Failure::Usage(format!("cache: {e}")))?;
                }
                p
            }
        };
        values.push((m, p));
    }
    let agree = values.windows(2).all(|w| w[0].1 == w[1].1);
    let text = if agree {
        let mut t = format!("{}\n", values[0].1);
        if values.len() > 1 {
            t += &format!("agree: {}\n", methods.join(" "));
        }
        t
    } else {
        values.iter().map(|(m, p)| format!("{m}: {p}\n")).collect::<String>() + "methods disagree\n"
    };
    let body = json!({
        "method": methods.join(","),
        "values": values.iter().map(|(m, p)| (m.to_string(), output::polynomial(p))).collect::<serde_json::Map<_, _>>(),
        "agree": agree,
    });
    Ok(Report {
        text,
        ascii: None,
        json: document("localize", ctx, merge(pair_json(pair), body)),
        ok: agree,
    })
}

pub fn mult(ctx: &SchubertContext, pair: &Pair) -> Result<Report, Failure> {
    let rep = multiplicity_report(ctx, &pair.w, &pair.v)?;
    let mut text = format!("multiplicity: {}\n", rep.count);
    if let Some(h) = rep.via_hv {
        text += &format!("h_v: {h}\n");
    }
    if let Some(p) = rep.pfaffian {
        text += &format!("pfaffian: {p}\n");
    }
    if !rep.agree() {
        text += "methods disagree\n";
    }
    let body = json!({
        "count": rep.count,
        "via_hv": rep.via_hv,
        "pfaffian": rep.pfaffian,
        "agree": rep.agree(),
    });
    Ok(Report {
        text,
        ascii: None,
        json: document("mult", ctx, merge(pair_json(pair), body)),
        ok: rep.agree(),
    })
}

fn strict_of(shape: &Shape) -> Result<&StrictPartition, Failure> {
    shape.as_strict().ok_or(Failure::Lib(Error::TypeAUnsupported))
}

pub fn giambelli(ctx: &SchubertContext, pair: &Pair) -> Result<Report, Failure> {
    let lambda = strict_of(&pair.lambda)?;
    let rep = giambelli_pfaffian(ctx, lambda, &pair.v)?;
    let n = rep.matrix.len();
    let mut text = String::new();
    let mut entries = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let (a, b) = (lambda.part(i + 1), lambda.part(j + 1));
            text += &format!("[{a},{b}] = {}\n", rep.matrix[i][j]);
            entries.push(json!({ "rows": [a, b], "value": output::polynomial(&rep.matrix[i][j]) }));
        }
    }
    text += &format!(
        "pfaffian: {}\ndirect:   {}\nholds: {}\n",
        rep.pfaffian, rep.direct, rep.holds
    );
    let body = json!({
        "entries": entries,
        "pfaffian": output::polynomial(&rep.pfaffian),
        "direct": output::polynomial(&rep.direct),
        "holds": rep.holds,
    });
    Ok(Report {
        text,
        ascii: None,
        json: document("giambelli", ctx, merge(pair_json(pair), body)),
        ok: rep.holds,
    })
}

pub fn paths(ctx: &SchubertContext, pair: &Pair, kind: Option<KindArg>, pfaffian: bool) -> Result<Report, Failure> {
    let kind = path_kind(ctx, kind)?;
    let lambda = strict_of(&pair.lambda)?;
    let mu = strict_of(&pair.mu)?;
    let tuples = enumerate_path_tuples(lambda, mu, kind)?;
    let mut text = format!(
        "λ={lambda} μ={mu} kind={kind:?}: {} nonintersecting tuples\n",
        tuples.len()
    );
    for t in &tuples {
        let ends: Vec<String> = t
            .paths
            .iter()
            .map(|p| format!("v{}", p.end_index().unwrap_or(0)))
            .collect();
        text += &format!(
            "ends {} a-steps {}\n",
            ends.join(","),
            cells_text(&paths_to_eyd(t).cells)
        );
    }
    let ascii = tuples
        .iter()
        .map(|t| render_paths(t, mu))
        .collect::<Vec<_>>()
        .join("\n\n");
    let mut ok = true;
    let mut body = json!({
        "kind": format!("{kind:?}"),
        "count": tuples.len(),
        "tuples": tuples.iter().map(output::tuple).collect::<Vec<_>>(),
    });
    if pfaffian {
        let rep = path_pfaffian_check(lambda, mu, kind, &EdgeWeights::symbolic(mu))?;
        ok = rep.holds;
        text += &format!("pfaffian identity: {}\n", if rep.holds { "holds" } else { "fails" });
        body["pfaffian_holds"] = json!(rep.holds);
    }
    Ok(Report {
        text,
        ascii: Some(ascii + "\n"),
        json: document("paths", ctx, merge(pair_json(pair), body)),
        ok,
    })
}

type Job = (Shape, Shape);

fn pairs(ctx: &SchubertContext, comparable_only: bool) -> Vec<Job> {
    let shapes = all_shapes(ctx);
    let mut out = Vec::new();
    for mu in &shapes {
        if comparable_only {
            out.extend(mu.subshapes().into_iter().map(|l| (l, mu.clone())));
        } else {
            out.extend(shapes.iter().map(|l| (l.clone(), mu.clone())));
        }
    }
    out
}

fn run_jobs(jobs: &[Job], check: impl Fn(&Shape, &Shape) -> excited::Result<bool> + Sync) -> Vec<String> {
    jobs.par_iter()
        .map(|(l, m)| match check(l, m) {
            Ok(true) => None,
            Ok(false) => Some(format!("λ={l} μ={m}")),
            Err(e) => Some(format!("λ={l} μ={m}: {e}")),
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

fn crosscheck(ctx: &SchubertContext, memo: &FactorialCache, l: &Shape, m: &Shape) -> excited::Result<bool> {
    let w = shape_to_element(ctx, l)?;
    let v = shape_to_element(ctx, m)?;
    let a = localize_eyd(ctx, &w, &v)?;
    Ok(a == localize_billey(ctx, &w, &v, None)? && a == memo.localize(ctx, &w, &v)?)
}

fn paths_check(ctx: &SchubertContext, kind: PathKind, l: &Shape, m: &Shape) -> excited::Result<bool> {
    let (Some(l), Some(m)) = (l.as_strict(), m.as_strict()) else {
        return Err(Error::KindMismatch);
    };
    let weights = EdgeWeights::symbolic(m);
    let tuples = enumerate_path_tuples(l, m, kind)?;
    let mut states = enumerate_for(ctx, &Shape::Strict(l.clone()), &Shape::Strict(m.clone()))?;
    states.sort();
    let mut images: Vec<_> = tuples.iter().map(paths_to_eyd).collect();
    images.sort();
    for t in &tuples {
        if &eyd_to_paths(&paths_to_eyd(t), l, m, kind)? != t {
            return Ok(false);
        }
    }
    Ok(images == states
        && generating_function(l, m, kind, &weights)? == eyd_weight_sum(l, m, kind, &weights)?
        && path_pfaffian_check(l, m, kind, &weights)?.holds)
}

pub fn verify(
    ctx: &SchubertContext,
    suite: Suite,
    memo: &FactorialCache,
    disk: Option<&DiskCache>,
) -> Result<Report, Failure> {
    let name = format!("{suite:?}").to_lowercase();
    let mut extra = json!({});
    let (checked, failures) = match suite {
        Suite::Crosscheck => {
            if let Some(d) = disk {
                for s in all_shapes(ctx) {
                    d.load(memo, ctx, &s);
                }
            }
            let jobs = pairs(ctx, false);
            let failures = run_jobs(&jobs, |l, m| crosscheck(ctx, memo, l, m));
            if let Some(d) = disk {
                d.store(memo).map_err(|e| Failure::Usage(format!("cache: {e}")))?;
            }
            (jobs.len(), failures)
        }
        Suite::Chevalley => {
            let rep = verify_chevalley(ctx, &top_shape(ctx), Method::Eyd)?;
            extra = json!({ "non_unit": rep.non_unit().len() });
            let failures = rep.failures().iter().map(|e| format!("λ={}", e.lambda)).collect();
            (rep.equations.len(), failures)
        }
        Suite::Giambelli => {
            if ctx.lie_type() == LieType::A {
                return Err(Error::TypeAUnsupported.into());
            }
            let jobs = pairs(ctx, false);
            let failures = run_jobs(&jobs, |l, m| {
                let v = shape_to_element(ctx, m)?;
                Ok(giambelli_pfaffian(ctx, l.as_strict().ok_or(Error::KindMismatch)?, &v)?.holds)
            });
            (jobs.len(), failures)
        }
        Suite::Multiplicity => {
            let jobs = pairs(ctx, true);
            let failures = run_jobs(&jobs, |l, m| {
                let rep = multiplicity_report(ctx, &shape_to_element(ctx, l)?, &shape_to_element(ctx, m)?)?;
                Ok(rep.agree() && rep.count >= 1)
            });
            (jobs.len(), failures)
        }
        Suite::Oracle => {
            let jobs = pairs(ctx, true);
            let failures = run_jobs(&jobs, |l, m| {
                let brute = enumerate_rv(ctx, &shape_to_element(ctx, l)?, &shape_to_element(ctx, m)?)?;
                let mut excited = enumerate_for(ctx, l, m)?;
                excited.sort();
                Ok(brute == excited)
            });
            (jobs.len(), failures)
        }
        Suite::Paths => {
            let kind = path_kind(ctx, None)?;
            let jobs = pairs(ctx, true);
            let failures = run_jobs(&jobs, |l, m| paths_check(ctx, kind, l, m));
            (jobs.len(), failures)
        }
        Suite::Pieri => {
            let checks = match ctx.lie_type() {
                LieType::A => {
                    let d = ctx.d();
                    pieri_check_schur(d, &Partition::rectangle(d as u32, (ctx.n() - d) as u32))?
                }
                _ => pieri_check_p(ctx.n(), &StrictPartition::rho(ctx.n() as u32))?,
            };
            let failures = checks
                .iter()
                .filter(|c| !c.holds)
                .map(|c| format!("λ={}", c.lambda))
                .collect();
            (checks.len(), failures)
        }
    };
    let passed = failures.is_empty();
    let mut text = format!(
        "{name} {}: {checked} checks, {} failures\n",
        ctx.label(),
        failures.len()
    );
    for f in &failures {
        text += &format!("FAIL {f}\n");
    }
    let body = merge(
        json!({ "suite": name, "checked": checked, "failures": failures, "passed": passed }),
        extra,
    );
    Ok(Report {
        text,
        ascii: None,
        json: document("verify", ctx, body),
        ok: passed,
    })
}
