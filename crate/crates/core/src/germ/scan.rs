use num_traits::Zero;

use super::{analyze_germ, GermQuery, GermStatus};
use crate::algebra::{Point, Polynomial, Rational};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanSample {
    pub t: Rational,
    pub point: Point,
    pub on_locus: bool,
    pub status: GermStatus,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// Every sample on the zero locus is irreducible.
    StableEvidence,
    /// The base germ is irreducible but the sample at `witness` is reducible.
    Unstable {
        witness: usize,
    },
    Inconclusive,
}

impl Verdict {
    pub fn label(&self) -> &'static str {
        match self {
            Verdict::StableEvidence => "STABLE-EVIDENCE",
            Verdict::Unstable { .. } => "UNSTABLE",
            Verdict::Inconclusive => "INCONCLUSIVE",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanReport {
    /// Coordinate polynomials in the single parameter `t`.
    pub curve: Vec<Polynomial>,
    pub base: Point,
    pub base_status: GermStatus,
    /// In the order the parameter values were given.
    pub samples: Vec<ScanSample>,
    pub verdict: Verdict,
}

/// Classifies the germs of `f` along a rational curve through `base`.
///
/// Sample analyses that fail (for instance when no shear regularizes the
/// local polynomial) are recorded as undetermined rather than aborting the
/// scan.
pub fn scan_stability(
    f: &Polynomial,
    base: &Point,
    curve: &[Polynomial],
    t_values: &[Rational],
    order: u32,
) -> Result<ScanReport> {
    let n = f.var_count();
    if curve.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: curve.len(),
        });
    }
    if let Some(c) = curve.iter().find(|c| c.var_count() != 1) {
        return Err(Error::DimensionMismatch {
            expected: 1,
            found: c.var_count(),
        });
    }
    if t_values.is_empty() {
        return Err(Error::EmptySamples);
    }
    let at = |t: &Rational| -> Result<Point> {
        let tp = Point::new(vec![t.clone()]);
        curve
            .iter()
            .map(|c| c.eval(&tp))
            .collect::<Result<Vec<_>>>()
            .map(Point::new)
    };
    if &at(&Rational::zero())? != base {
        return Err(Error::CurveMissesBase);
    }

    let base_status = analyze_germ(&GermQuery::new(f.clone(), base.clone(), order)?)?;
    let mut samples = Vec::with_capacity(t_values.len());
    for t in t_values {
        let point = at(t)?;
        let on_locus = f.eval(&point)?.is_zero();
        let status = match analyze_germ(&GermQuery::new(f.clone(), point.clone(), order)?) {
            Ok(s) => s,
            Err(e) => GermStatus::Undetermined(e.to_string()),
        };
        samples.push(ScanSample {
            t: t.clone(),
            point,
            on_locus,
            status,
        });
    }

    let verdict = decide(&base_status, &samples);
    Ok(ScanReport {
        curve: curve.to_vec(),
        base: base.clone(),
        base_status,
        samples,
        verdict,
    })
}

fn decide(base: &GermStatus, samples: &[ScanSample]) -> Verdict {
    let on_locus: Vec<(usize, &ScanSample)> = samples
        .iter()
        .enumerate()
        .filter(|(_, s)| s.on_locus)
        .collect();
    if base.is_irreducible() {
        if let Some((i, _)) = on_locus
            .iter()
            .find(|(_, s)| !s.t.is_zero() && s.status.is_reducible())
        {
            return Verdict::Unstable { witness: *i };
        }
    }
    if on_locus.is_empty() || on_locus.iter().any(|(_, s)| s.status.is_undetermined()) {
        return Verdict::Inconclusive;
    }
    if on_locus.iter().all(|(_, s)| s.status.is_irreducible()) {
        Verdict::StableEvidence
    } else {
        Verdict::Inconclusive
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat, Var};

    fn z(n: usize, k: usize) -> Polynomial {
        Polynomial::var(n, Var::z(k))
    }

    fn t() -> Polynomial {
        Polynomial::var(1, Var::z(1))
    }

    #[test]
    fn counterexample_is_unstable_along_the_z1_axis() {
        let f = &z(3, 3).pow(2) - &(&z(3, 1) * &z(3, 2).pow(2));
        let curve = [t(), Polynomial::zero(1), Polynomial::zero(1)];
        let ts = [int(1), rat(1, 2), rat(1, 4), rat(1, 8)];
        let r = scan_stability(&f, &Point::origin(3), &curve, &ts, 8).unwrap();
        assert!(r
            .samples
            .iter()
            .all(|s| s.on_locus && s.status.is_reducible()));
        assert_eq!(r.verdict, Verdict::Unstable { witness: 0 });
        assert_eq!(
            r.samples[1].point,
            Point::new(vec![rat(1, 2), int(0), int(0)])
        );
    }

    #[test]
    fn cusp_is_stable_along_its_parametrization() {
        let f = &z(2, 2).pow(2) - &z(2, 1).pow(3);
        let curve = [t().pow(2), t().pow(3)];
        let ts = [rat(1, 2), rat(1, 3), rat(1, 4)];
        let r = scan_stability(&f, &Point::origin(2), &curve, &ts, 8).unwrap();
        assert!(r
            .samples
            .iter()
            .all(|s| s.on_locus && matches!(s.status, GermStatus::SmoothIrreducible(_))));
        assert_eq!(r.verdict, Verdict::StableEvidence);
    }

    #[test]
    fn curve_off_the_locus_is_inconclusive() {
        let curve = [t(), Polynomial::one(1)];
        let r = scan_stability(
            &z(2, 2),
            &Point::from_integers(&[0, 1]),
            &curve,
            &[int(1), rat(1, 2)],
            8,
        )
        .unwrap();
        assert!(r.samples.iter().all(|s| !s.on_locus));
        assert_eq!(r.verdict, Verdict::Inconclusive);
    }

    #[test]
    fn scan_errors() {
        let curve = [t(), Polynomial::one(1)];
        assert_eq!(
            scan_stability(&z(2, 2), &Point::from_integers(&[0, 1]), &curve, &[], 8),
            Err(Error::EmptySamples)
        );
        assert_eq!(
            scan_stability(&z(2, 2), &Point::origin(2), &curve, &[int(1)], 8),
            Err(Error::CurveMissesBase)
        );
        assert!(matches!(
            scan_stability(&z(2, 2), &Point::origin(2), &curve[..1], &[int(1)], 8),
            Err(Error::DimensionMismatch { .. })
        ));
    }
}
