use std::fmt::Write as _;

use germ_core::{parse_poly, Var};

use crate::commands::{self, CliError, Outcome};

const F: &str = "z3^2 - z1*z2^2";

/// A titled sequence of command outcomes with a closing summary.
pub struct Demo {
    pub steps: Vec<(String, Outcome)>,
    pub summary: String,
}

impl Demo {
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (i, (title, step)) in self.steps.iter().enumerate() {
            let _ = writeln!(out, "== {}. {title}", i + 1);
            out.push_str(&step.text);
            out.push('\n');
        }
        let _ = writeln!(out, "== summary");
        out.push_str(&self.summary);
        out
    }
}

/// Irreducible at the origin, reducible at points (t, 0, 0) arbitrarily close
/// to it; coprimality with the z3-derivative survives, discreteness does not.
pub fn counterexample(order: u32) -> Result<Demo, CliError> {
    let origin = commands::analyze(F, Some("0,0,0"), None, order)?;
    let nearby = commands::analyze(F, Some("1,0,0"), None, order)?;
    let scan = commands::scan(F, Some("0,0,0"), "t,0,0", "1,1/2,1/4,1/8", order)?;
    let f = parse_poly(F, None).expect("demo polynomial parses");
    let df = f.derivative(Var::z(3))?.to_string();
    let coprime = commands::coprime(F, &df, Some("0,0,0"), Some("z3"))?;

    let status = |o: &Outcome| o.result.status.clone().unwrap_or_default();
    let scan_json = scan.result.scan.as_ref().expect("scan payload");
    let irreducible_at_origin = status(&origin) == "SingularIrreducible";
    let reducible_nearby = status(&nearby) == "SingularReducible";
    let unstable = scan_json.verdict == "UNSTABLE";
    let coprime_ok = coprime.result.coprime == Some(true);
    let discrete = coprime.result.discrete == Some(true);

    let mut summary = String::new();
    let _ = writeln!(summary, "f = {F}");
    let _ = writeln!(
        summary,
        "germ at the origin: {}",
        if irreducible_at_origin {
            "irreducible"
        } else {
            "not certified irreducible"
        }
    );
    let _ = writeln!(
        summary,
        "germ at (1, 0, 0): {}",
        if reducible_nearby {
            "reducible"
        } else {
            "not certified reducible"
        }
    );
    let reducible_samples = scan_json
        .samples
        .iter()
        .filter(|s| s.status == "SingularReducible")
        .count();
    let _ = writeln!(
        summary,
        "samples (t, 0, 0) reducible: {reducible_samples} of {}",
        scan_json.samples.len()
    );
    let _ = writeln!(
        summary,
        "f and df/dz3 coprime at the origin: {}; common zeros discrete: {}",
        if coprime_ok { "yes" } else { "no" },
        if discrete { "yes" } else { "no" }
    );
    let conclusion = if irreducible_at_origin && unstable {
        "irreducibility is not stable at the origin"
    } else {
        "no instability witnessed"
    };
    let _ = writeln!(summary, "conclusion: {conclusion}");

    Ok(Demo {
        steps: vec![
            ("germ at the origin".into(), origin),
            ("germ at (1, 0, 0)".into(), nearby),
            ("scan along (t, 0, 0)".into(), scan),
            ("coprimality with df/dz3 at the origin".into(), coprime),
        ],
        summary,
    })
}
