use std::fmt::Write as _;

use germ_core::report::{
    point_strings, rational_string, CertificateJson, Input, ResultPayload, ScanJson,
    WeierstrassJson,
};
use germ_core::{
    analyze_germ_detailed, coprime_at, make_regular, parse_curve, parse_poly, parse_rational_list,
    parse_var, scan_stability, weierstrass_prepare, GermQuery, GermStatus, ParseError, Point,
    Polynomial, Shear, Var, Verdict,
};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot parse --{flag} `{text}` {source}")]
    Parse {
        flag: &'static str,
        text: String,
        source: ParseError,
    },
    #[error(transparent)]
    Library(#[from] germ_core::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse { .. } => 2,
            _ => 1,
        }
    }
}

/// Result of one command: text for humans and the JSON payload.
#[derive(Debug)]
pub struct Outcome {
    pub command: String,
    pub input: Input,
    pub result: ResultPayload,
    pub text: String,
}

fn parsed<T>(flag: &'static str, text: &str, r: Result<T, ParseError>) -> Result<T, CliError> {
    r.map_err(|source| CliError::Parse {
        flag,
        text: text.to_string(),
        source,
    })
}

fn point_arg(text: Option<&str>, n: usize) -> Result<Point, CliError> {
    match text {
        Some(t) => Ok(Point::new(parsed("point", t, parse_rational_list(t))?)),
        None => Ok(Point::origin(n)),
    }
}

/// Polynomial in as many variables as the point has coordinates, or as it
/// mentions when no point is given.
fn poly_and_point(poly: &str, point: Option<&str>) -> Result<(Polynomial, Point), CliError> {
    match point {
        Some(p) => {
            let point = point_arg(Some(p), 0)?;
            let f = parsed("poly", poly, parse_poly(poly, Some(point.dim())))?;
            Ok((f, point))
        }
        None => {
            let f = parsed("poly", poly, parse_poly(poly, None))?;
            let n = f.var_count();
            Ok((f, Point::origin(n)))
        }
    }
}

fn var_arg(text: Option<&str>, n: usize) -> Result<Var, CliError> {
    let var = match text {
        Some(t) => parsed("var", t, parse_var(t))?,
        None => Var::from_index(n - 1),
    };
    var.check(n)?;
    Ok(var)
}

/// Two polynomials over the same variables.
fn pair(f: &str, g: &str) -> Result<(Polynomial, Polynomial), CliError> {
    let pf = parsed("f", f, parse_poly(f, None))?;
    let pg = parsed("g", g, parse_poly(g, None))?;
    let n = pf.var_count().max(pg.var_count());
    Ok((
        parsed("f", f, parse_poly(f, Some(n)))?,
        parsed("g", g, parse_poly(g, Some(n)))?,
    ))
}

fn point_text(p: &Point) -> String {
    p.to_string()
}

fn shear_text(s: &Shear) -> String {
    let n = s.coefficients.len();
    let zj = s.distinguished;
    let parts: Vec<String> = s
        .coefficients
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != zj.index())
        .map(|(i, c)| {
            let zi = Var::from_index(i);
            let image = &Polynomial::var(n, zi) + &Polynomial::var(n, zj).scale(c);
            format!("{zi} -> {image}")
        })
        .collect();
    parts.join(", ")
}

pub fn status_lines(out: &mut String, status: &GermStatus) {
    let _ = writeln!(out, "status: {}", status.name());
    match status {
        GermStatus::Undetermined(reason) => {
            let _ = writeln!(out, "reason: {reason}");
        }
        _ => {
            if let Some(c) = status.certificate() {
                let _ = writeln!(out, "certificate: {c}");
            }
        }
    }
    if let Some(f) = status.factors() {
        let _ = writeln!(out, "factor: {}", f.first);
        let _ = writeln!(out, "factor: {}", f.second);
    }
}

pub fn analyze(
    poly: &str,
    point: Option<&str>,
    var: Option<&str>,
    order: u32,
) -> Result<Outcome, CliError> {
    let (f, p) = poly_and_point(poly, point)?;
    let mut query = GermQuery::new(f.clone(), p.clone(), order)?;
    if let Some(v) = var {
        query = query.with_distinguished(var_arg(Some(v), f.var_count())?)?;
    }
    let analysis = analyze_germ_detailed(&query)?;

    let mut text = String::new();
    let _ = writeln!(text, "poly: {f}");
    let _ = writeln!(text, "point: {}", point_text(&p));
    let _ = writeln!(text, "order: {order}");
    let mut result = ResultPayload::from_status(&analysis.status);
    if let Some(local) = &analysis.local {
        let _ = writeln!(text, "local: {local}");
        result.local = Some(local.to_string());
    }
    if let Some(shear) = analysis
        .regularity
        .as_ref()
        .and_then(|r| r.applied_change.as_ref())
    {
        let _ = writeln!(text, "shear: {}", shear_text(shear));
        result.shear = Some(shear.coefficients.iter().map(rational_string).collect());
    }
    status_lines(&mut text, &analysis.status);

    Ok(Outcome {
        command: "analyze".into(),
        input: Input {
            poly: f.to_string(),
            point: Some(point_strings(&p)),
            order: Some(order),
            var: query.distinguished.map(|v| v.to_string()),
            ..Default::default()
        },
        result,
        text,
    })
}

pub fn prepare(
    poly: &str,
    point: Option<&str>,
    var: Option<&str>,
    order: u32,
) -> Result<Outcome, CliError> {
    let (f, p) = poly_and_point(poly, point)?;
    let var = var_arg(var, f.var_count())?;
    let local = f.shift(&p)?;
    let (regular, report) = make_regular(&local, var)?;
    let w = weierstrass_prepare(&regular, var, order)?;

    let mut text = String::new();
    let _ = writeln!(text, "poly: {f}");
    let _ = writeln!(text, "point: {}", point_text(&p));
    let _ = writeln!(text, "order: {order}");
    let _ = writeln!(text, "local: {regular}");
    let mut result = ResultPayload {
        local: Some(regular.to_string()),
        weierstrass: Some(WeierstrassJson::from(&w)),
        ..Default::default()
    };
    if let Some(shear) = &report.applied_change {
        let _ = writeln!(text, "shear: {}", shear_text(shear));
        result.shear = Some(shear.coefficients.iter().map(rational_string).collect());
    }
    let _ = writeln!(text, "var: {var}");
    let _ = writeln!(text, "degree: {}", w.degree);
    for (i, e) in w.coefficients.iter().enumerate() {
        let _ = writeln!(text, "e{}: {e}", i + 1);
    }
    let _ = writeln!(text, "unit: {}", w.unit);
    let _ = writeln!(text, "w: {}", w.polynomial());

    Ok(Outcome {
        command: "prepare".into(),
        input: Input {
            poly: f.to_string(),
            point: Some(point_strings(&p)),
            order: Some(order),
            var: Some(var.to_string()),
            ..Default::default()
        },
        result,
        text,
    })
}

pub fn scan(
    poly: &str,
    point: Option<&str>,
    curve: &str,
    t: &str,
    order: u32,
) -> Result<Outcome, CliError> {
    let (f, base) = poly_and_point(poly, point)?;
    let coords = parsed("curve", curve, parse_curve(curve))?;
    let ts = parsed("t", t, parse_rational_list(t))?;
    let report = scan_stability(&f, &base, &coords, &ts, order)?;

    let curve_text: Vec<String> = coords
        .iter()
        .map(|c| c.to_string().replace("z1", "t"))
        .collect();
    let mut text = String::new();
    let _ = writeln!(text, "poly: {f}");
    let _ = writeln!(text, "base: {}", point_text(&base));
    let _ = writeln!(text, "curve: ({})", curve_text.join(", "));
    let _ = writeln!(text, "order: {order}");
    let _ = writeln!(text, "base status: {}", report.base_status.name());
    if let Some(c) = report.base_status.certificate() {
        let _ = writeln!(text, "base certificate: {c}");
    }
    for s in &report.samples {
        let locus = if s.on_locus { "on-locus" } else { "off-locus" };
        let _ = write!(
            text,
            "t = {}  point {}  {locus}  {}",
            s.t,
            point_text(&s.point),
            s.status.name()
        );
        if let Some(c) = s.status.certificate() {
            let _ = write!(text, "  {c}");
        }
        text.push('\n');
    }
    let _ = writeln!(text, "verdict: {}", report.verdict.label());
    if let Verdict::Unstable { witness } = report.verdict {
        let _ = writeln!(text, "witness: t = {}", report.samples[witness].t);
    }

    Ok(Outcome {
        command: "scan".into(),
        input: Input {
            poly: f.to_string(),
            point: Some(point_strings(&base)),
            order: Some(order),
            curve: Some(curve_text),
            t: Some(ts.iter().map(rational_string).collect()),
            ..Default::default()
        },
        result: ResultPayload {
            status: Some(report.base_status.name().to_string()),
            certificate: report.base_status.certificate().map(CertificateJson::from),
            scan: Some(ScanJson::from(&report)),
            ..Default::default()
        },
        text,
    })
}

pub fn resultant(f: &str, g: &str, var: &str) -> Result<Outcome, CliError> {
    let (pf, pg) = pair(f, g)?;
    let v = var_arg(Some(var), pf.var_count())?;
    let res = germ_core::resultant(&pf, &pg, v)?;
    Ok(Outcome {
        command: "resultant".into(),
        input: Input {
            poly: pf.to_string(),
            g: Some(pg.to_string()),
            var: Some(v.to_string()),
            ..Default::default()
        },
        result: ResultPayload {
            polynomial: Some(res.to_string()),
            ..Default::default()
        },
        text: format!("{res}\n"),
    })
}

pub fn discriminant(poly: &str, var: &str) -> Result<Outcome, CliError> {
    let f = parsed("poly", poly, parse_poly(poly, None))?;
    let v = var_arg(Some(var), f.var_count())?;
    let disc = germ_core::discriminant(&f, v)?;
    Ok(Outcome {
        command: "discriminant".into(),
        input: Input {
            poly: f.to_string(),
            var: Some(v.to_string()),
            ..Default::default()
        },
        result: ResultPayload {
            polynomial: Some(disc.to_string()),
            ..Default::default()
        },
        text: format!("{disc}\n"),
    })
}

pub fn coprime(
    f: &str,
    g: &str,
    point: Option<&str>,
    var: Option<&str>,
) -> Result<Outcome, CliError> {
    let (pf, pg) = pair(f, g)?;
    let n = pf.var_count();
    let p = point_arg(point, n)?;
    let v = var_arg(var, n)?;
    let report = coprime_at(&pf, &pg, &p, v)?;
    // discreteness is a statement about the resultant in the base variables,
    // at the re-centred point
    let discrete = match report.resultant.remove_var(v)? {
        Some(base) => germ_core::zero_set_discrete(&base, &Point::origin(base.var_count()))?,
        None => unreachable!("resultant does not involve the eliminated variable"),
    };

    let yes_no = |b: bool| if b { "yes" } else { "no" };
    let mut text = String::new();
    let _ = writeln!(text, "f: {pf}");
    let _ = writeln!(text, "g: {pg}");
    let _ = writeln!(text, "point: {}", point_text(&p));
    let _ = writeln!(text, "var: {v}");
    if let Some(shear) = &report.applied_change {
        let _ = writeln!(text, "shear: {}", shear_text(shear));
    }
    let _ = writeln!(text, "resultant: {}", report.resultant);
    let _ = writeln!(text, "coprime: {}", yes_no(report.coprime_germ_at_point));
    let _ = writeln!(
        text,
        "vanishing at point: {}",
        yes_no(report.vanishing_at_point)
    );
    let _ = writeln!(text, "discrete common zeros: {}", yes_no(discrete));

    Ok(Outcome {
        command: "coprime".into(),
        input: Input {
            poly: pf.to_string(),
            g: Some(pg.to_string()),
            point: Some(point_strings(&p)),
            var: Some(v.to_string()),
            ..Default::default()
        },
        result: ResultPayload {
            polynomial: Some(report.resultant.to_string()),
            coprime: Some(report.coprime_germ_at_point),
            vanishing: Some(report.vanishing_at_point),
            discrete: Some(discrete),
            shear: report
                .applied_change
                .as_ref()
                .map(|s| s.coefficients.iter().map(rational_string).collect()),
            ..Default::default()
        },
        text,
    })
}
