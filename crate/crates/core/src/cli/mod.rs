//! Command-line front end: request parsing, dispatch and report rendering.

pub mod parse;

use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::bfun::{
    bernstein_sato_with_certificate, lct_from_bfunction, v_filtration_table, verify_certificate,
    Certificate, Verdict,
};
use crate::error::{Error, Result};
use crate::exactmath::rational::fmt_rational;
use crate::exactmath::{Monomial, Polynomial, Rational, UnivariatePoly};
use crate::newton::ideal::{minimal_elements, sort_monomials};
use crate::newton::inner::{inner_multiplicity_with_route, principal_by_newton, InnerRoute};
use crate::newton::{jumping_numbers_monomial, lct_monomial, newton_polyhedron, InnerSubject, MonomialIdeal, MultiplierTable};
use crate::spectrum::{check_spectrum_vs_inner, hodge_spectrum, infer_weights, is_weighted_homogeneous};
use crate::weyl::WeylElement;
use parse::{parse_bfunction, parse_monomial_ideal, parse_operators, parse_polynomial, parse_rational, parse_vars};

pub const DEFAULT_DEGREE_BOUND: u32 = 6;
pub const DEFAULT_ALPHA_MAX: &str = "2";
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Bf,
    Verify,
    Lct,
    MultTable,
    Jumping,
    Vfilt,
    Inner,
    Spectrum,
    CheckTheorem,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Bf => "bf",
            Command::Verify => "verify",
            Command::Lct => "lct",
            Command::MultTable => "mult-table",
            Command::Jumping => "jumping",
            Command::Vfilt => "vfilt",
            Command::Inner => "inner",
            Command::Spectrum => "spectrum",
            Command::CheckTheorem => "check-theorem",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Text,
    Json,
}

/// Unparsed request fields, as given on the command line or in a corpus line.
#[derive(Clone, Debug, Default, Serialize, Deserialize, clap::Args)]
#[serde(default, deny_unknown_fields)]
pub struct RawRequest {
    /// Ordered variable list, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    pub vars: Vec<String>,
    /// The polynomial f.
    #[arg(value_name = "F")]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub poly: Option<String>,
    /// A function of the tuple (repeatable).
    #[arg(short = 'f', long = "function", value_name = "F")]
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub functions: Vec<String>,
    /// Multiplier polynomial h (default 1).
    #[arg(long = "h", value_name = "H")]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h: Option<String>,
    /// Claimed b-function, a polynomial in s.
    #[arg(short = 'b', value_name = "B")]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b: Option<String>,
    /// Certificate operator P_j, one per function (repeatable).
    #[arg(short = 'P', value_name = "P")]
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub ops: Vec<String>,
    /// Monomial ideal generators, comma separated.
    #[arg(long, value_name = "GENS")]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub monomial: Option<String>,
    #[arg(long, value_name = "Q", allow_hyphen_values = true)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<String>,
    #[arg(long, value_name = "Q", default_value = DEFAULT_ALPHA_MAX, allow_hyphen_values = true)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha_max: Option<String>,
    /// Truncation degree for monomial enumeration.
    #[arg(long, env = "BSATO_DEGREE_BOUND", value_name = "D")]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree_bound: Option<u32>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    #[serde(skip)]
    pub format: Format,
    /// Report wall-clock time.
    #[arg(long)]
    #[serde(skip)]
    pub timing: bool,
}

#[derive(Clone, Debug)]
pub struct Options {
    pub degree_bound: u32,
    pub alpha_max: Rational,
    pub format: Format,
    pub timing: bool,
}

#[derive(Clone, Debug, Default)]
pub struct Payload {
    pub fs: Vec<Polynomial>,
    pub h: Option<Polynomial>,
    pub b: Option<UnivariatePoly>,
    pub ops: Vec<WeylElement>,
    pub monomial: Option<MonomialIdeal>,
    pub alpha: Option<Rational>,
}

/// A parsed, validated request.
#[derive(Clone, Debug)]
pub struct Request {
    pub command: Command,
    pub vars: Vec<String>,
    pub payload: Payload,
    pub options: Options,
}

fn flag_error(command: Command, flag: &str, what: &str) -> Error {
    Error::usage(format!("`{}` {what} {flag}", command.name()))
}

impl Request {
    pub fn parse(command: Command, raw: &RawRequest) -> Result<Request> {
        let vars = parse_vars(&raw.vars)?;
        let mut fs_src: Vec<&String> = raw.poly.iter().collect();
        fs_src.extend(&raw.functions);
        let fs = fs_src
            .iter()
            .map(|s| parse_polynomial(s, &vars))
            .collect::<Result<Vec<_>>>()?;
        let takes_monomial = matches!(
            command,
            Command::Lct | Command::MultTable | Command::Jumping | Command::Inner
        );
        let takes_alpha = matches!(command, Command::Inner | Command::CheckTheorem);

        match command {
            Command::Verify if fs.is_empty() => return Err(flag_error(command, "at least one -f", "needs")),
            Command::Verify => {}
            _ if fs.len() > 1 => return Err(flag_error(command, "a single polynomial", "takes")),
            _ if takes_monomial && fs.len() + usize::from(raw.monomial.is_some()) != 1 => {
                return Err(flag_error(command, "either a polynomial or --monomial", "needs exactly one of"))
            }
            _ if !takes_monomial && fs.is_empty() => return Err(flag_error(command, "a polynomial", "needs")),
            _ => {}
        }
        if raw.monomial.is_some() && !takes_monomial {
            return Err(flag_error(command, "--monomial", "does not take"));
        }
        if command != Command::Verify && (raw.b.is_some() || !raw.ops.is_empty()) {
            return Err(flag_error(command, "-b or -P", "does not take"));
        }
        if raw.h.is_some() && !matches!(command, Command::Bf | Command::Verify) {
            return Err(flag_error(command, "--h", "does not take"));
        }
        if takes_alpha != raw.alpha.is_some() {
            let what = if takes_alpha { "needs" } else { "does not take" };
            return Err(flag_error(command, "--alpha", what));
        }

        let mut payload = Payload {
            fs,
            h: raw.h.as_ref().map(|s| parse_polynomial(s, &vars)).transpose()?,
            monomial: raw.monomial.as_ref().map(|s| parse_monomial_ideal(s, &vars)).transpose()?,
            alpha: raw.alpha.as_deref().map(parse_rational).transpose()?,
            ..Payload::default()
        };
        if command == Command::Verify {
            let b = raw.b.as_ref().ok_or_else(|| flag_error(command, "-b", "needs"))?;
            payload.b = Some(parse_bfunction(b)?);
            payload.ops = parse_operators(&raw.ops, &vars, payload.fs.len())?;
            if payload.ops.len() != payload.fs.len() {
                return Err(Error::usage(format!(
                    "{} operators given for {} functions",
                    payload.ops.len(),
                    payload.fs.len()
                )));
            }
        }
        let alpha_max = parse_rational(raw.alpha_max.as_deref().unwrap_or(DEFAULT_ALPHA_MAX))?;
        Ok(Request {
            command,
            vars: vars.to_vec(),
            payload,
            options: Options {
                degree_bound: raw.degree_bound.unwrap_or(DEFAULT_DEGREE_BOUND),
                alpha_max,
                format: raw.format,
                timing: raw.timing,
            },
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Route {
    Bfunction,
    Newton,
    Spectrum,
}

impl From<InnerRoute> for Route {
    fn from(r: InnerRoute) -> Route {
        match r {
            InnerRoute::BFunction => Route::Bfunction,
            InnerRoute::Newton => Route::Newton,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Provenance {
    pub route: Route,
    pub cross_checks: Vec<String>,
}

/// The machine-readable report.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema: u32,
    pub command: Command,
    pub input_echo: Value,
    pub result: Value,
    pub provenance: Provenance,
    pub timing_ms: Option<u64>,
    #[serde(skip)]
    pub text: String,
}

impl Report {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(self).expect("report serializes") + "\n",
            Format::Text => {
                let mut out = self.text.clone();
                if let Some(ms) = self.timing_ms {
                    out.push_str(&format!("time: {ms} ms\n"));
                }
                out
            }
        }
    }
}

struct Outcome {
    result: Value,
    text: String,
    route: Route,
    cross_checks: Vec<String>,
}

fn q(r: &Rational) -> String {
    fmt_rational(r)
}

fn render_list(vars: &[String], ms: &[Monomial]) -> Vec<String> {
    ms.iter().map(|m| m.render(vars)).collect()
}

fn render_ideal(vars: &[String], ms: &[Monomial]) -> String {
    if ms.is_empty() {
        return "(0)".into();
    }
    format!("({})", render_list(vars, ms).join(", "))
}

fn roots_json(roots: &[(Rational, u32)]) -> Value {
    roots
        .iter()
        .map(|(r, k)| json!({"root": q(r), "multiplicity": k}))
        .collect()
}

fn roots_text(roots: &[(Rational, u32)]) -> String {
    let parts: Vec<String> = roots
        .iter()
        .map(|(r, k)| if *k == 1 { q(r) } else { format!("{} (multiplicity {k})", q(r)) })
        .collect();
    if parts.is_empty() {
        "none".into()
    } else {
        parts.join(", ")
    }
}

fn echo(req: &Request) -> Value {
    let p = &req.payload;
    let mut m = serde_json::Map::new();
    m.insert("vars".into(), json!(req.vars));
    if !p.fs.is_empty() {
        m.insert("f".into(), p.fs.iter().map(|f| f.to_string()).collect());
    }
    if let Some(h) = &p.h {
        m.insert("h".into(), json!(h.to_string()));
    }
    if let Some(b) = &p.b {
        m.insert("b".into(), json!(b.render("s")));
    }
    if !p.ops.is_empty() {
        m.insert("P".into(), p.ops.iter().map(|o| o.to_string()).collect());
    }
    if let Some(a) = &p.monomial {
        m.insert("monomial".into(), json!(a.to_string()));
    }
    if let Some(a) = &p.alpha {
        m.insert("alpha".into(), json!(q(a)));
    }
    if matches!(req.command, Command::MultTable | Command::Jumping | Command::Vfilt) {
        m.insert("alpha_max".into(), json!(q(&req.options.alpha_max)));
    }
    m.insert("degree_bound".into(), json!(req.options.degree_bound));
    Value::Object(m)
}

fn one(req: &Request) -> Polynomial {
    Polynomial::one(crate::exactmath::ring_vars(&req.vars))
}

fn bf(req: &Request) -> Result<Outcome> {
    let f = &req.payload.fs[0];
    let h = req.payload.h.clone().unwrap_or_else(|| one(req));
    let (b, cert) = bernstein_sato_with_certificate(f, &h)?;
    let ops: Vec<String> = cert.ops.iter().map(|o| o.to_string()).collect();
    let text = format!(
        "b(s) = {}\nroots: {}\nP = {}\n",
        b.factored(),
        roots_text(b.roots()),
        ops[0]
    );
    Ok(Outcome {
        result: json!({
            "b": b.factored(),
            "expanded": b.poly().render("s"),
            "roots": roots_json(b.roots()),
            "P": ops,
        }),
        text,
        route: Route::Bfunction,
        cross_checks: vec!["certificate verified".into()],
    })
}

fn verify(req: &Request) -> Result<Outcome> {
    let p = &req.payload;
    let cert = Certificate {
        fs: p.fs.clone(),
        h: p.h.clone().unwrap_or_else(|| one(req)),
        b: p.b.clone().expect("checked in parse"),
        ops: p.ops.clone(),
    };
    let (result, text) = match verify_certificate(&cert)? {
        Verdict::Valid => (json!({"valid": true}), "valid\n".to_string()),
        Verdict::Invalid(res) => (
            json!({"valid": false, "residual": res.to_string()}),
            format!("invalid\nresidual: {res}\n"),
        ),
    };
    Ok(Outcome {
        result,
        text,
        route: Route::Bfunction,
        cross_checks: vec![],
    })
}

fn mismatch(what: &str) -> Error {
    Error::internal(format!("cross-check failed: {what}"))
}

fn lct(req: &Request) -> Result<Outcome> {
    let mut checks = Vec::new();
    let (c, route) = if let Some(a) = &req.payload.monomial {
        let c = lct_monomial(a)?;
        if let [g] = a.generators() {
            let f = Polynomial::from_terms(a.vars().clone(), [(g.clone(), Rational::from_integer(1.into()))]);
            if lct_from_bfunction(&f)? != c {
                return Err(mismatch("b-function threshold differs"));
            }
            checks.push("b-function route agrees".into());
        }
        (c, Route::Newton)
    } else {
        let f = &req.payload.fs[0];
        let c = lct_from_bfunction(f)?;
        if f.terms().len() == 1 {
            if lct_monomial(&MonomialIdeal::of_terms(f)?)? != c {
                return Err(mismatch("Newton threshold differs"));
            }
            checks.push("newton route agrees".into());
        }
        (c, Route::Bfunction)
    };
    Ok(Outcome {
        result: json!({"lct": q(&c)}),
        text: format!("lct = {}\n", q(&c)),
        route,
        cross_checks: checks,
    })
}

/// The multiplier table by the route the input selects, plus cross-checks.
fn table(req: &Request) -> Result<(MultiplierTable, Route, Vec<String>)> {
    let o = &req.options;
    if let Some(a) = &req.payload.monomial {
        return Ok((jumping_numbers_monomial(a, &o.alpha_max, o.degree_bound)?, Route::Newton, vec![]));
    }
    let f = &req.payload.fs[0];
    let v = v_filtration_table(f, o.degree_bound, &o.alpha_max)?;
    let mut checks = Vec::new();
    if f.terms().len() == 1 {
        let p = newton_polyhedron(&MonomialIdeal::of_terms(f)?)?;
        if v.jump_values.iter().any(|(m, c)| p.jump_value(m.exponents()) != *c) {
            return Err(mismatch("Newton jump values differ"));
        }
        checks.push("newton jump values agree".into());
    }
    Ok((v.table, Route::Bfunction, checks))
}

fn truncation_note(t: &MultiplierTable, bound: u32) -> String {
    if t.complete {
        String::new()
    } else {
        format!("(monomials of degree at most {bound})\n")
    }
}

fn mult_table(req: &Request) -> Result<Outcome> {
    let (t, route, cross_checks) = table(req)?;
    let vars = &req.vars;
    let mut text = match t.rows.first() {
        Some(r) => format!("J(alpha) = (1) for alpha < {}\n", q(&r.alpha)),
        None => format!("J(alpha) = (1) for alpha <= {}\n", q(&req.options.alpha_max)),
    };
    for r in &t.rows {
        text.push_str(&format!("J({}) = {}\n", q(&r.alpha), render_ideal(vars, &r.generators)));
    }
    text.push_str(&truncation_note(&t, req.options.degree_bound));
    let rows: Vec<Value> = t
        .rows
        .iter()
        .map(|r| json!({"alpha": q(&r.alpha), "generators": render_list(vars, &r.generators)}))
        .collect();
    Ok(Outcome {
        result: json!({"rows": rows, "complete": t.complete}),
        text,
        route,
        cross_checks,
    })
}

fn jumping(req: &Request) -> Result<Outcome> {
    let (t, route, cross_checks) = table(req)?;
    let jumps: Vec<String> = t.jumps().iter().map(q).collect();
    let mut text = format!(
        "jumping numbers in (0, {}]: {}\n",
        q(&req.options.alpha_max),
        if jumps.is_empty() { "none".into() } else { jumps.join(", ") }
    );
    text.push_str(&truncation_note(&t, req.options.degree_bound));
    Ok(Outcome {
        result: json!({"jumps": jumps, "complete": t.complete}),
        text,
        route,
        cross_checks,
    })
}

fn vfilt(req: &Request) -> Result<Outcome> {
    let f = &req.payload.fs[0];
    let o = &req.options;
    let v = v_filtration_table(f, o.degree_bound, &o.alpha_max)?;
    let vars = &req.vars;
    let minimal = |mut ms: Vec<Monomial>| {
        sort_monomials(&mut ms);
        minimal_elements(&ms)
    };
    let mut text = format!("monomials of degree at most {}\n", o.degree_bound);
    let mut rows = Vec::new();
    for r in &v.table.rows {
        let va = minimal(v.v_alpha(&r.alpha));
        let ja = minimal(v.multiplier(&r.alpha));
        text.push_str(&format!(
            "alpha = {}: V = {}, J = {}\n",
            q(&r.alpha),
            render_ideal(vars, &va),
            render_ideal(vars, &ja)
        ));
        rows.push(json!({
            "alpha": q(&r.alpha),
            "v_alpha": render_list(vars, &va),
            "multiplier": render_list(vars, &ja),
        }));
    }
    let values: Vec<Value> = v
        .jump_values
        .iter()
        .map(|(m, c)| json!({"monomial": m.render(vars), "jump": c.as_ref().map(q)}))
        .collect();
    Ok(Outcome {
        result: json!({"rows": rows, "jump_values": values, "complete": v.table.complete}),
        text,
        route: Route::Bfunction,
        cross_checks: vec![],
    })
}

fn inner(req: &Request) -> Result<Outcome> {
    let alpha = req.payload.alpha.as_ref().expect("checked in parse");
    let subject = match &req.payload.monomial {
        Some(a) => InnerSubject::Monomial(a.clone()),
        None => InnerSubject::Principal(req.payload.fs[0].clone()),
    };
    let (k, route) = inner_multiplicity_with_route(&subject, alpha, req.options.degree_bound)?;
    let mut checks = Vec::new();
    if let (InnerSubject::Principal(f), InnerRoute::BFunction) = (&subject, route) {
        if let Some(other) = principal_by_newton(f, alpha)? {
            if other != k {
                return Err(mismatch("Newton inner multiplicity differs"));
            }
            checks.push("newton count agrees".into());
        }
    }
    Ok(Outcome {
        result: json!({"alpha": q(alpha), "multiplicity": k}),
        text: format!("n({}) = {k}\n", q(alpha)),
        route: route.into(),
        cross_checks: checks,
    })
}

fn spectrum(req: &Request) -> Result<Outcome> {
    let f = &req.payload.fs[0];
    let w = infer_weights(f)?;
    let sp = hodge_spectrum(f)?;
    if !is_weighted_homogeneous(f, &w) {
        return Err(mismatch("weights violate the Euler identity"));
    }
    if !sp.is_symmetric() {
        return Err(mismatch("spectrum is not symmetric"));
    }
    let mut text = String::new();
    for (a, k) in &sp.entries {
        text.push_str(&format!("{}: {k}\n", q(a)));
    }
    text.push_str(&format!("Milnor number: {}\n", sp.total()));
    let entries: Vec<Value> = sp
        .entries
        .iter()
        .map(|(a, k)| json!({"alpha": q(a), "multiplicity": k}))
        .collect();
    Ok(Outcome {
        result: json!({
            "weights": w.weights.iter().map(q).collect::<Vec<_>>(),
            "spectrum": entries,
            "milnor_number": sp.total(),
        }),
        text,
        route: Route::Spectrum,
        cross_checks: vec!["euler identity".into(), "symmetry".into()],
    })
}

fn check_theorem(req: &Request) -> Result<Outcome> {
    let alpha = req.payload.alpha.as_ref().expect("checked in parse");
    let c = check_spectrum_vs_inner(&req.payload.fs[0], alpha, req.options.degree_bound)?;
    let route = match c.inner_route {
        InnerRoute::BFunction => "bfunction",
        InnerRoute::Newton => "newton",
    };
    let text = format!(
        "alpha = {}: spectrum multiplicity {}, inner multiplicity {}: {}\n",
        q(alpha),
        c.spectrum,
        c.inner,
        if c.agrees() { "agree" } else { "DISAGREE" }
    );
    Ok(Outcome {
        result: json!({
            "alpha": q(alpha),
            "spectrum_multiplicity": c.spectrum,
            "inner_multiplicity": c.inner,
            "agrees": c.agrees(),
        }),
        text,
        route: Route::Spectrum,
        cross_checks: vec![format!("inner multiplicity via {route}")],
    })
}

/// Executes a request. Errors carry the exit code; no report is produced.
pub fn run(req: &Request) -> Result<Report> {
    let start = Instant::now();
    let out = match req.command {
        Command::Bf => bf(req),
        Command::Verify => verify(req),
        Command::Lct => lct(req),
        Command::MultTable => mult_table(req),
        Command::Jumping => jumping(req),
        Command::Vfilt => vfilt(req),
        Command::Inner => inner(req),
        Command::Spectrum => spectrum(req),
        Command::CheckTheorem => check_theorem(req),
    }?;
    let elapsed = start.elapsed().as_millis() as u64;
    Ok(Report {
        schema: SCHEMA_VERSION,
        command: req.command,
        input_echo: echo(req),
        result: out.result,
        provenance: Provenance {
            route: out.route,
            cross_checks: out.cross_checks,
        },
        timing_ms: req.options.timing.then_some(elapsed),
        text: out.text,
    })
}

/// Parses, runs and renders in the requested format.
pub fn execute(command: Command, raw: &RawRequest) -> Result<String> {
    let req = Request::parse(command, raw)?;
    Ok(run(&req)?.render(req.options.format))
}

