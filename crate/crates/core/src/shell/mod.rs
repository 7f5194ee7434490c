//! Command dispatch and report rendering for the command-line front end.

mod parse;

pub use parse::{parse_element, parse_expression, parse_rational};

use serde_json::{json, Map, Value};

use crate::classify::{self, canonical_rep, find_witness, ClassLabel, Classification};
use crate::config;
use crate::error::{Error, Result};
use crate::field::{Fel, Field};
use crate::moebius::PairAction;
use crate::orbits::{self, OrbitReport, Statement, VerifyReport};
use crate::ramify::{hurwitz_check, ramification_profile, HurwitzVerdict, RamProfile};
use crate::ratexpr::RatExpr;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Classify { field: String, expr: String },
    Ramify { field: String, expr: String },
    Equiv { field: String, left: String, right: String },
    Orbits { field: String, degree: usize },
    Verify { field: String, statement: String },
    Canon { field: String, case: String, param: Option<String> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Options {
    pub json: bool,
    pub seed: Option<u64>,
    pub limit: u64,
}

impl Default for Options {
    fn default() -> Options {
        Options { json: false, seed: None, limit: config::DEFAULT_LIMIT }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    /// 0 success, 1 usage or input error, 2 verification mismatch.
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Outcome {
        Outcome { code: 0, stdout, stderr: String::new() }
    }
}

pub fn run(cmd: &Command, opts: &Options) -> Outcome {
    if let Some(seed) = opts.seed {
        config::set_split_seed(seed);
    }
    match dispatch(cmd, opts) {
        Ok(out) => out,
        Err(e) => Outcome { code: 1, stdout: String::new(), stderr: render_error(cmd, &e) },
    }
}

fn render_error(cmd: &Command, e: &Error) -> String {
    let Error::Parse { pos, .. } = e else {
        return format!("error: {e}\n");
    };
    let text = match cmd {
        Command::Classify { expr, .. } | Command::Ramify { expr, .. } => Some(expr.as_str()),
        _ => None,
    };
    match text {
        Some(t) => format!("error: {e}\n  {t}\n  {}^\n", " ".repeat(*pos)),
        None => format!("error: {e}\n"),
    }
}

fn dispatch(cmd: &Command, opts: &Options) -> Result<Outcome> {
    match cmd {
        Command::Classify { field, expr } => {
            let f = Field::from_designator(field)?;
            let r = parse_expression(expr, &f)?;
            let c = classify::classify(&f, &r)?;
            Ok(Outcome::ok(render_classification(&f, &r, &c, opts.json)?))
        }
        Command::Ramify { field, expr } => {
            let f = Field::from_designator(field)?;
            let r = parse_expression(expr, &f)?;
            Ok(Outcome::ok(render_ramification(&f, &r, opts.json)?))
        }
        Command::Equiv { field, left, right } => {
            let f = Field::from_designator(field)?;
            let (r1, r2) = (parse_expression(left, &f)?, parse_expression(right, &f)?);
            let w = if matches!(r1.degree(), 2 | 3) {
                find_witness(&f, &r1, &r2)?
            } else {
                classify::are_equivalent_with_limit(&f, &r1, &r2, opts.limit)?
            };
            Ok(Outcome::ok(render_equiv(&f, w.as_ref(), opts.json)))
        }
        Command::Orbits { field, degree } => {
            let f = Field::from_designator(field)?;
            let report = orbits::all_classes_with_limit(&f, *degree, opts.limit)?;
            Ok(Outcome::ok(render_orbits(&f, &report, opts.json)?))
        }
        Command::Verify { field, statement } => {
            let f = Field::from_designator(field)?;
            let st: Statement = statement.parse()?;
            let report = orbits::verify_with_limit(&f, st, opts.limit)?;
            let code = if report.passed() { 0 } else { 2 };
            Ok(Outcome { code, stdout: render_verify(&report, opts.json), stderr: String::new() })
        }
        Command::Canon { field, case, param } => {
            let f = Field::from_designator(field)?;
            let label = label_from_case(&f, case, param.as_deref())?;
            let r = canonical_rep(&f, &label)?;
            let out = if opts.json {
                let mut obj = Map::new();
                obj.insert("field".into(), json!(f.designator()));
                obj.insert("case".into(), json!(label.case_name()));
                insert_params(&f, &label, &mut obj)?;
                obj.insert("representative".into(), json!(r.format(&f)));
                to_json(Value::Object(obj))
            } else {
                format!("{}\n", r.format(&f))
            };
            Ok(Outcome::ok(out))
        }
    }
}

/// A label from its case name; `param` gives `k` for the one-point case and
/// a field element for the split and conjugate cases.
pub fn label_from_case(f: &Field, name: &str, param: Option<&str>) -> Result<ClassLabel> {
    let element = || -> Result<Fel> {
        let text = param.ok_or_else(|| Error::InvalidParameter(format!("case {name} needs --param")))?;
        parse_element(text, f)
    };
    let label = match name {
        "quad-x2" => ClassLabel::QuadX2,
        "quad-twist" => ClassLabel::QuadTwist,
        "quad-x2-insep" => ClassLabel::QuadX2Insep,
        "quad-sep-char2" => ClassLabel::QuadSepChar2,
        "cubic-x3" => ClassLabel::CubicX3,
        "cubic-twist" => ClassLabel::CubicTwist,
        "cubic-dickson" => ClassLabel::CubicDickson,
        "cubic-dickson-twist" => ClassLabel::CubicDicksonTwist,
        "char3-insep" => ClassLabel::Char3Insep,
        "char3-x3x2" => ClassLabel::Char3X3X2,
        "char3-x3x" => ClassLabel::Char3X3X,
        "char3-x3-sigma-x" => ClassLabel::Char3X3SigmaX,
        "char2-x3" => ClassLabel::Char2X3,
        "char2-twist" => ClassLabel::Char2Twist,
        "char2-x3x2" => ClassLabel::Char2X3X2,
        "char2-one-point" => {
            let k = match param {
                None => 0,
                Some(t) => t
                    .trim()
                    .parse::<u8>()
                    .map_err(|_| Error::InvalidParameter(format!("k must be 0, 1 or 2, got '{t}'")))?,
            };
            ClassLabel::Char2OnePoint { k }
        }
        "char2-split" => ClassLabel::Char2Split { c: element()? },
        "char2-conjugate" => ClassLabel::Char2Conjugate { b: element()? },
        "four-point" => return Err(Error::NoCanonicalForm),
        _ => {
            return Err(Error::InvalidParameter(format!(
                "unknown case '{name}'; expected one of {}",
                ClassLabel::CASE_NAMES.join(", ")
            )))
        }
    };
    Ok(label)
}

fn to_json(v: Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("serializable");
    s.push('\n');
    s
}

fn insert_params(f: &Field, label: &ClassLabel, obj: &mut Map<String, Value>) -> Result<()> {
    match label {
        ClassLabel::Char2OnePoint { k } => {
            obj.insert("k".into(), json!(k));
        }
        ClassLabel::Char2Split { c } => {
            obj.insert("c".into(), json!(f.format_elem(*c)));
        }
        ClassLabel::Char2Conjugate { b } => {
            obj.insert("b".into(), json!(f.format_elem(*b)));
        }
        ClassLabel::FourPoint(inv) => {
            let e = f.extend(inv.ext_degree)?.0;
            obj.insert("extension".into(), json!(e.designator()));
            obj.insert("lambda".into(), json!(e.format_elem(inv.lambda)));
            obj.insert("mu".into(), json!(e.format_elem(inv.mu)));
            if let Some(m) = inv.mu_alt {
                obj.insert("mu_alt".into(), json!(e.format_elem(m)));
            }
            obj.insert("pattern".into(), json!(inv.pattern));
        }
        _ => {}
    }
    Ok(())
}

fn params_text(f: &Field, label: &ClassLabel) -> Result<String> {
    let mut obj = Map::new();
    insert_params(f, label, &mut obj)?;
    let parts: Vec<String> = obj
        .into_iter()
        .map(|(k, v)| match v {
            Value::String(s) => format!("{k} = {s}"),
            other => format!("{k} = {other}"),
        })
        .collect();
    Ok(parts.join(", "))
}

fn witness_json(f: &Field, w: &PairAction) -> Value {
    json!({ "b": w.b.format(f), "a": w.a.format(f) })
}

fn profile_json(profile: &RamProfile) -> Value {
    match profile {
        RamProfile::Inseparable { degree } => json!({ "separable": false, "degree": degree }),
        RamProfile::Separable(ram) => {
            let e = &ram.field;
            let points: Vec<Value> = ram
                .points
                .iter()
                .map(|p| {
                    json!({
                        "point": p.point.format(e),
                        "index": p.index,
                        "branch": p.branch.format(e),
                        "degree": p.defining_degree,
                    })
                })
                .collect();
            json!({ "separable": true, "extension": e.designator(), "points": points })
        }
    }
}

fn profile_lines(profile: &RamProfile) -> Vec<String> {
    match profile {
        RamProfile::Inseparable { degree } => vec![format!("inseparable of degree {degree}: every point ramifies")],
        RamProfile::Separable(ram) => {
            let e = &ram.field;
            let mut out = vec![format!("points over {}:", e.designator())];
            for p in &ram.points {
                out.push(format!(
                    "  {}  index {}  branch {}  degree {}",
                    p.point.format(e),
                    p.index,
                    p.branch.format(e),
                    p.defining_degree
                ));
            }
            out
        }
    }
}

fn render_classification(f: &Field, r: &RatExpr, c: &Classification, json_out: bool) -> Result<String> {
    let rep = match &c.label {
        ClassLabel::FourPoint(_) => None,
        l => Some(canonical_rep(f, l)?),
    };
    if json_out {
        let mut obj = Map::new();
        obj.insert("field".into(), json!(f.designator()));
        obj.insert("expression".into(), json!(r.format(f)));
        obj.insert("case".into(), json!(c.label.case_name()));
        insert_params(f, &c.label, &mut obj)?;
        obj.insert("representative".into(), json!(rep.as_ref().map(|r| r.format(f))));
        obj.insert("witness".into(), c.witness.as_ref().map_or(Value::Null, |w| witness_json(f, w)));
        obj.insert("ramification".into(), profile_json(&c.profile));
        return Ok(to_json(Value::Object(obj)));
    }
    let mut lines = vec![
        format!("field: {}", f.designator()),
        format!("expression: {}", r.format(f)),
        format!("case: {}", c.label.case_name()),
    ];
    let params = params_text(f, &c.label)?;
    if !params.is_empty() {
        lines.push(format!("parameters: {params}"));
    }
    if let Some(rep) = &rep {
        lines.push(format!("representative: {}", rep.format(f)));
    }
    if let Some(w) = &c.witness {
        lines.push(format!("witness: B = {}, A = {}", w.b.format(f), w.a.format(f)));
    }
    lines.push("ramification:".into());
    lines.extend(profile_lines(&c.profile).into_iter().map(|l| format!("  {l}")));
    Ok(lines.join("\n") + "\n")
}

fn render_ramification(f: &Field, r: &RatExpr, json_out: bool) -> Result<String> {
    let profile = ramification_profile(f, r)?;
    let hurwitz = match profile {
        RamProfile::Inseparable { .. } => None,
        RamProfile::Separable(_) => Some(hurwitz_check(f, r)?),
    };
    let verdict = |v: HurwitzVerdict| match v {
        HurwitzVerdict::Equality => "equality",
        HurwitzVerdict::Strict => "strict",
        HurwitzVerdict::Violated => "violated",
    };
    if json_out {
        let mut v = profile_json(&profile);
        if let (Some(h), Value::Object(obj)) = (&hurwitz, &mut v) {
            obj.insert(
                "hurwitz".into(),
                json!({ "lhs": h.lhs, "rhs": h.rhs, "verdict": verdict(h.verdict), "tame": h.tame }),
            );
        }
        return Ok(to_json(json!({ "field": f.designator(), "expression": r.format(f), "profile": v })));
    }
    let mut lines = vec![format!("field: {}", f.designator()), format!("expression: {}", r.format(f))];
    lines.extend(profile_lines(&profile));
    if let Some(h) = hurwitz {
        lines.push(format!(
            "hurwitz: 2d-2 = {}, sum of (e-1) = {}, {}{}",
            h.lhs,
            h.rhs,
            verdict(h.verdict),
            if h.tame { "" } else { " (wild)" }
        ));
    }
    Ok(lines.join("\n") + "\n")
}

fn render_equiv(f: &Field, w: Option<&PairAction>, json_out: bool) -> String {
    match (w, json_out) {
        (Some(w), true) => to_json(json!({ "equivalent": true, "witness": witness_json(f, w) })),
        (None, true) => to_json(json!({ "equivalent": false })),
        (Some(w), false) => format!("equivalent\nB = {}\nA = {}\n", w.b.format(f), w.a.format(f)),
        (None, false) => "inequivalent\n".into(),
    }
}

fn render_orbits(f: &Field, report: &OrbitReport, json_out: bool) -> Result<String> {
    if json_out {
        let mut classes = Vec::new();
        for c in &report.classes {
            let mut obj = Map::new();
            obj.insert("representative".into(), json!(c.representative.format(f)));
            obj.insert("size".into(), json!(c.size));
            obj.insert("stabilizer_order".into(), json!(c.stabilizer_order));
            match &c.label {
                Some(l) => {
                    obj.insert("case".into(), json!(l.case_name()));
                    insert_params(f, l, &mut obj)?;
                }
                None => {
                    obj.insert("case".into(), Value::Null);
                }
            }
            classes.push(Value::Object(obj));
        }
        return Ok(to_json(json!({
            "field": f.designator(),
            "q": report.q,
            "degree": report.degree,
            "total": report.total,
            "classes": classes,
        })));
    }
    let mut lines = vec![format!(
        "field {}, degree {}: {} classes, {} expressions",
        f.designator(),
        report.degree,
        report.classes.len(),
        report.total
    )];
    lines.push(format!("{:>8}  {:>5}  {:<24}  representative", "size", "stab", "case"));
    for c in &report.classes {
        let mut case = c.label.as_ref().map_or("-".to_string(), |l| l.case_name().to_string());
        if let Some(l) = &c.label {
            let params = params_text(f, l)?;
            if !params.is_empty() && !matches!(l, ClassLabel::FourPoint(_)) {
                case = format!("{case} ({params})");
            }
        }
        lines.push(format!("{:>8}  {:>5}  {:<24}  {}", c.size, c.stabilizer_order, case, c.representative.format(f)));
    }
    Ok(lines.join("\n") + "\n")
}

fn render_verify(report: &VerifyReport, json_out: bool) -> String {
    let status = if report.passed() { "PASS" } else { "FAIL" };
    if json_out {
        let checks: Vec<Value> = report
            .checks
            .iter()
            .map(|c| json!({ "name": c.name, "expected": c.expected, "actual": c.actual, "ok": c.ok }))
            .collect();
        return to_json(json!({
            "statement": report.statement.name(),
            "field": report.field,
            "result": status,
            "class_count": report.class_count,
            "checks": checks,
            "notes": report.notes,
        }));
    }
    let mut lines = vec![format!("{} over {}", report.statement, report.field)];
    for c in &report.checks {
        let mark = if c.ok { "ok  " } else { "FAIL" };
        lines.push(format!("  {mark} {}: expected {}, got {}", c.name, c.expected, c.actual));
    }
    for n in &report.notes {
        lines.push(format!("  note: {n}"));
    }
    lines.push(match report.class_count {
        Some(n) => format!("{status} with {n} classes"),
        None => status.to_string(),
    });
    lines.join("\n") + "\n"
}
