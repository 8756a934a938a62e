use std::fs;
use std::path::Path;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use serde_json::{json, Value};

use forge_core::constructions::{abelian_extension, alexander, conjugation_quandle, dihedral, galex};
use forge_core::error::Error as CoreError;
use forge_core::groups::is_conjugation_quandle;
use forge_core::io::{
    format_cayley, format_cocycle, format_group, parse_cayley, parse_cocycle, parse_group,
    parse_knot_table,
};
use forge_core::knots::{bundled_knots, check_translation_equality, end_monochromatic};
use forge_core::pipeline::{
    inn_sequence, knot_invariants, negative_certificates, recover_index2_cocycle,
    extension_verdict, power_vanishing_check, KnotRecord, PipelineOptions,
};
use forge_core::{
    second_cohomology, BraidKnot, Cocycle2, FiniteGroup, GroupAutomorphism, Quandle, QuandleMap,
    Tangle,
};

use crate::{CocycleArgs, Command, CosetArg, GroupFamily, KnotArg, MakeCommand};

/// Cap on `|Inn(Q)|` for `props`.
const INNER_GROUP_CAP: usize = 1_000_000;

fn emit(kind: &str, mut value: Value) {
    if let Value::Object(map) = &mut value {
        map.insert("record".into(), Value::String(kind.into()));
    }
    println!("{value}");
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn load_quandle(path: &Path) -> Result<Quandle> {
    parse_cayley(&read(path)?).with_context(|| format!("loading quandle {}", path.display()))
}

fn load_group(path: &Path) -> Result<FiniteGroup> {
    parse_group(&read(path)?).with_context(|| format!("loading group {}", path.display()))
}

fn load_pair(input: &CocycleArgs) -> Result<(Quandle, Cocycle2)> {
    let q = load_quandle(&input.quandle)?;
    let phi = parse_cocycle(&read(&input.cocycle)?, &q)
        .with_context(|| format!("loading cocycle {}", input.cocycle.display()))?;
    Ok((q, phi))
}

fn load_knots(arg: &KnotArg) -> Result<Vec<BraidKnot>> {
    match &arg.knots {
        Some(path) => parse_knot_table(&read(path)?)
            .with_context(|| format!("loading knot table {}", path.display())),
        None => Ok(bundled_knots()),
    }
}

fn options(cosets: &CosetArg) -> PipelineOptions {
    PipelineOptions {
        max_cosets: cosets.max_cosets,
        ..PipelineOptions::default()
    }
}

fn one_based(v: &[usize]) -> Vec<usize> {
    v.iter().map(|x| x + 1).collect()
}

fn pair_one_based(p: Option<(usize, usize)>) -> Value {
    p.map_or(Value::Null, |(a, b)| json!([a + 1, b + 1]))
}

fn index_arg(k: usize, order: usize, what: &str) -> Result<usize> {
    if k == 0 || k > order {
        bail!("{what} {k} outside 1..={order}");
    }
    Ok(k - 1)
}

fn knot_value(r: &KnotRecord) -> Value {
    let mut v = serde_json::to_value(r).expect("knot records serialize");
    v["display"] = Value::String(r.invariant.to_string());
    v
}

pub fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Validate(arg) => validate(&arg.quandle),
        Command::Props(arg) => props(&arg.quandle),
        Command::InnSeq(arg) => inn_seq(&arg.quandle),
        Command::H2 {
            quandle,
            modulus,
            emit_reps,
        } => h2(&quandle.quandle, modulus, emit_reps.as_deref()),
        Command::Make { what, out } => make(what, out.as_deref()),
        Command::Extend { input, out } => extend(&input, out.as_deref()),
        Command::Invariant {
            input,
            knots,
            tangle,
        } => invariant(&input, &knots, tangle),
        Command::Conjugation { quandle, cosets } => conjugation(&quandle.quandle, &cosets),
        Command::RecoverExt {
            quandle,
            target,
            map,
            out,
        } => recover(&quandle, target.as_deref(), map.as_deref(), out.as_deref()),
        Command::Verdict {
            input,
            knots,
            cosets,
        } => verdict(&input, &knots, &cosets),
        Command::PowerCheck {
            input,
            d,
            knots,
            cosets,
        } => power_check(&input, d, &knots, &cosets),
        Command::Certify {
            input,
            knots,
            cosets,
        } => certify(&input, &knots, &cosets),
    }
}

fn validate(path: &Path) -> Result<ExitCode> {
    match parse_cayley(&read(path)?) {
        Ok(q) => {
            emit("validate", json!({ "valid": true, "order": q.order() }));
            eprintln!("valid quandle of order {}", q.order());
            Ok(ExitCode::SUCCESS)
        }
        Err(CoreError::AxiomViolation { axiom, witness }) => {
            let (a, b, c) = witness;
            emit(
                "validate",
                json!({ "valid": false, "axiom": axiom, "witness": [a + 1, b + 1, c + 1] }),
            );
            eprintln!("not a quandle: {axiom} fails at ({}, {}, {})", a + 1, b + 1, c + 1);
            Ok(ExitCode::FAILURE)
        }
        Err(e) => Err(e).with_context(|| format!("loading quandle {}", path.display())),
    }
}

fn props(path: &Path) -> Result<ExitCode> {
    let q = load_quandle(path)?;
    let orbits: Vec<Vec<usize>> = q.orbits().iter().map(|o| one_based(o)).collect();
    let inner = match q.inner_group(INNER_GROUP_CAP) {
        Ok(g) => json!(g.order()),
        Err(CoreError::GroupTooLarge { .. }) => Value::Null,
        Err(e) => return Err(e.into()),
    };
    let (image, _) = q.inn_image();
    let translation_orders: Vec<usize> = q.translations().iter().map(|t| t.order()).collect();
    emit(
        "props",
        json!({
            "order": q.order(),
            "connected": q.is_connected(),
            "faithful": q.is_faithful(),
            "orbits": orbits,
            "inner_group_order": inner,
            "inn_image_order": image.order(),
            "translation_orders": translation_orders,
        }),
    );
    eprintln!(
        "order {}, {}, {}, {} orbit(s), |Inn| = {}",
        q.order(),
        if q.is_connected() { "connected" } else { "disconnected" },
        if q.is_faithful() { "faithful" } else { "not faithful" },
        orbits.len(),
        inner
    );
    Ok(ExitCode::SUCCESS)
}

fn inn_seq(path: &Path) -> Result<ExitCode> {
    let q = load_quandle(path)?;
    let seq = inn_sequence(&q);
    for (i, x) in seq.quandles.iter().enumerate() {
        emit(
            "inn_step",
            json!({ "step": i, "order": x.order(), "connected": x.is_connected(), "faithful": x.is_faithful() }),
        );
    }
    emit("inn_sequence", json!({ "orders": seq.orders(), "steps": seq.steps() }));
    let orders: Vec<String> = seq.orders().iter().map(usize::to_string).collect();
    eprintln!("{} ({} step(s))", orders.join(" -> "), seq.steps());
    Ok(ExitCode::SUCCESS)
}

fn h2(path: &Path, m: u64, reps: Option<&Path>) -> Result<ExitCode> {
    let q = load_quandle(path)?;
    let h = second_cohomology(&q, m)?;
    let mut files = Vec::new();
    if let Some(dir) = reps {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        for (i, phi) in h.representatives().iter().enumerate() {
            let file = dir.join(format!("rep{}.txt", i + 1));
            write(&file, &format_cocycle(phi))?;
            files.push(file.display().to_string());
        }
    }
    emit(
        "h2",
        json!({
            "modulus": m,
            "invariant_factors": h.invariant_factors(),
            "order": h.order().map(|o| o.to_string()),
            "cocycle_count": h.cocycle_count().map(|o| o.to_string()),
            "coboundary_count": h.coboundary_count().map(|o| o.to_string()),
            "representatives": h.representatives().iter().map(Cocycle2::rows).collect::<Vec<_>>(),
            "files": files,
        }),
    );
    let factors: Vec<String> = h.invariant_factors().iter().map(|f| format!("Z_{f}")).collect();
    eprintln!(
        "H2(Q; Z_{m}) = {}",
        if factors.is_empty() { "0".to_string() } else { factors.join(" x ") }
    );
    Ok(ExitCode::SUCCESS)
}

fn make(what: MakeCommand, out: Option<&Path>) -> Result<ExitCode> {
    let (text, summary) = match what {
        MakeCommand::Dihedral { n } => (format_cayley(&dihedral(n)?), format!("dihedral quandle of order {n}")),
        MakeCommand::Alexander { n, t } => {
            (format_cayley(&alexander(n, t)?), format!("Alexander quandle Z_{n} with t = {t}"))
        }
        MakeCommand::Trivial { n } => (format_cayley(&Quandle::trivial(n)?), format!("trivial quandle of order {n}")),
        MakeCommand::Conj { group, elem } => {
            let g = load_group(&group)?;
            let x = index_arg(elem, g.order(), "element")?;
            let (q, _) = conjugation_quandle(&g, x)?;
            let summary = format!("conjugacy class of element {elem}, order {}", q.order());
            (format_cayley(&q), summary)
        }
        MakeCommand::Galex { group, conj } => {
            let g = load_group(&group)?;
            let x = index_arg(conj, g.order(), "element")?;
            let q = galex(&g, &GroupAutomorphism::conjugation(&g, x)?);
            let summary = format!("GAlex with conjugation by element {conj}, order {}", q.order());
            (format_cayley(&q), summary)
        }
        MakeCommand::Group { family, n } => {
            let (g, name) = match family {
                GroupFamily::Cyclic => (FiniteGroup::cyclic(n)?, "cyclic"),
                GroupFamily::Symmetric => (FiniteGroup::symmetric(n)?, "symmetric"),
            };
            (format_group(&g), format!("{name} group of order {}", g.order()))
        }
    };
    match out {
        Some(path) => write(path, &text)?,
        None => print!("{text}"),
    }
    eprintln!("{summary}");
    Ok(ExitCode::SUCCESS)
}

fn extend(input: &CocycleArgs, out: Option<&Path>) -> Result<ExitCode> {
    let (q, phi) = load_pair(input)?;
    let (e, _) = abelian_extension(&q, &phi)?;
    let text = format_cayley(&e);
    match out {
        Some(path) => {
            write(path, &text)?;
            emit(
                "extension",
                json!({
                    "order": e.order(),
                    "connected": e.is_connected(),
                    "faithful": e.is_faithful(),
                    "file": path.display().to_string(),
                }),
            );
        }
        None => print!("{text}"),
    }
    eprintln!(
        "extension of order {}; element (x, a) has 1-based index x*m + a + 1",
        e.order()
    );
    Ok(ExitCode::SUCCESS)
}

fn invariant(input: &CocycleArgs, knots: &KnotArg, tangle: bool) -> Result<ExitCode> {
    let (q, phi) = load_pair(input)?;
    let knots = load_knots(knots)?;
    let records = knot_invariants(&q, &phi, &knots)?;
    let extension = if tangle { Some(abelian_extension(&q, &phi)?.0) } else { None };
    for (r, k) in records.iter().zip(&knots) {
        let mut v = knot_value(r);
        if let Some(e) = &extension {
            let t = Tangle::new(k.clone());
            v["end_monochromatic"] = json!(end_monochromatic(e, &t)?);
            v["translation_equality"] = json!(check_translation_equality(&q, &t)?);
        }
        emit("invariant", v);
    }
    let nonconstant = records.iter().filter(|r| !r.constant).count();
    eprintln!("{} knot(s), {nonconstant} with a nonconstant invariant", records.len());
    Ok(ExitCode::SUCCESS)
}

fn conjugation(path: &Path, cosets: &CosetArg) -> Result<ExitCode> {
    let q = load_quandle(path)?;
    let report = is_conjugation_quandle(&q, cosets.max_cosets)?;
    emit(
        "conjugation",
        json!({
            "connected": q.is_connected(),
            "verdict": report.verdict,
            "group_order": report.group_order,
            "collision": pair_one_based(report.collision),
        }),
    );
    match (report.group_order, report.collision) {
        (None, _) => eprintln!("disconnected quandle: the criterion does not apply"),
        (Some(n), None) => eprintln!("finite enveloping group of order {n}; generators are distinct"),
        (Some(n), Some((a, b))) => eprintln!(
            "finite enveloping group of order {n}; generators {} and {} coincide",
            a + 1,
            b + 1
        ),
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_images(text: &str, n: usize) -> Result<Vec<usize>> {
    let images = text
        .split_whitespace()
        .map(|t| {
            let v: usize = t.parse().with_context(|| format!("bad image {t:?}"))?;
            if v == 0 {
                bail!("images are 1-based");
            }
            Ok(v - 1)
        })
        .collect::<Result<Vec<usize>>>()?;
    if images.len() != n {
        bail!("expected {n} images, found {}", images.len());
    }
    Ok(images)
}

fn recover(source: &Path, target: Option<&Path>, map: Option<&Path>, out: Option<&Path>) -> Result<ExitCode> {
    let y = load_quandle(source)?;
    let f = match (target, map) {
        (Some(t), Some(m)) => {
            let x = load_quandle(t)?;
            let images = parse_images(&read(m)?, y.order())?;
            QuandleMap::new(y, x, images)?
        }
        _ => y.inn_image().1,
    };
    let r = recover_index2_cocycle(&f)?;
    if let Some(path) = out {
        write(path, &format_cocycle(&r.cocycle))?;
    }
    emit(
        "recovered",
        json!({
            "modulus": 2,
            "cocycle": r.cocycle.rows(),
            "isomorphism": one_based(r.isomorphism.images()),
        }),
    );
    eprintln!(
        "source is the extension of its order-{} image by the recovered cocycle",
        f.target().order()
    );
    Ok(ExitCode::SUCCESS)
}

fn verdict(input: &CocycleArgs, knots: &KnotArg, cosets: &CosetArg) -> Result<ExitCode> {
    let (x, phi) = load_pair(input)?;
    let knots = load_knots(knots)?;
    let v = extension_verdict(&x, &phi, &knots, &options(cosets))?;
    for r in &v.invariants {
        emit("invariant", knot_value(r));
    }
    let mut summary = serde_json::to_value(&v)?;
    if let Value::Object(map) = &mut summary {
        map.remove("invariants");
    }
    summary["conjugation"]["collision"] = pair_one_based(v.conjugation.collision);
    emit("verdict", summary);
    eprintln!(
        "|E| = {}, conjugation verdict {:?}, hypothesis {}, invariants {}",
        v.extension_order,
        v.conjugation.verdict,
        if v.hypothesis_holds { "holds" } else { "not established" },
        if v.invariant_constant_on_corpus { "all constant" } else { "not all constant" }
    );
    Ok(ExitCode::SUCCESS)
}

fn power_check(input: &CocycleArgs, d: u64, knots: &KnotArg, cosets: &CosetArg) -> Result<ExitCode> {
    let (x, psi) = load_pair(input)?;
    let knots = load_knots(knots)?;
    let report = power_vanishing_check(&x, &psi, d, &knots, &options(cosets))?;
    for r in &report.invariants {
        emit("invariant", knot_value(r));
    }
    let e = &report.extension;
    emit(
        "power",
        json!({
            "n": report.n,
            "d": report.d,
            "m": report.m,
            "off_multiple_exponents": report.off_multiple_exponents,
            "vanishing_holds": report.vanishing_holds,
            "extension_order": e.extension_order,
            "conjugation": e.conjugation.verdict,
            "hypothesis_holds": e.hypothesis_holds,
        }),
    );
    eprintln!(
        "psi mod {}, power {} gives coefficients mod {}; vanishing {}; hypothesis {}",
        report.n,
        report.d,
        report.m,
        if report.vanishing_holds { "holds" } else { "fails" },
        if e.hypothesis_holds { "holds" } else { "not established" }
    );
    Ok(ExitCode::SUCCESS)
}

fn certify(input: &CocycleArgs, knots: &KnotArg, cosets: &CosetArg) -> Result<ExitCode> {
    let (x, phi) = load_pair(input)?;
    let knots = load_knots(knots)?;
    let report = negative_certificates(&x, &phi, &knots, cosets.max_cosets)?;
    for c in &report.certificates {
        let mut v = serde_json::to_value(c)?;
        v["display"] = Value::String(c.invariant.to_string());
        emit("certificate", v);
    }
    let conjugation = report.conjugation.as_ref().map(|r| {
        json!({
            "verdict": r.verdict,
            "group_order": r.group_order,
            "collision": pair_one_based(r.collision),
        })
    });
    emit(
        "certify",
        json!({
            "extension_order": report.extension_order,
            "certificates": report.certificates.len(),
            "conjugation": conjugation,
        }),
    );
    eprintln!(
        "{} certificate(s); conjugation check {}",
        report.certificates.len(),
        match &report.conjugation {
            Some(r) => format!("{:?}", r.verdict),
            None => "capped".into(),
        }
    );
    Ok(ExitCode::SUCCESS)
}
