use num_integer::Integer;
use num_traits::Zero;

use super::{Certificate, GermStatus};
use crate::algebra::{univariate, Rational};
use crate::weierstrass::WeierstrassData;
use crate::{Error, Result};

/// A compact edge of a Newton polygon. Points are `(i, j)` with `i` the
/// exponent of the base variable and `j` that of the distinguished one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub start: (u32, u32),
    pub end: (u32, u32),
    /// Primitive `(run, drop)`: the edge goes `drop` down per `run` across.
    pub slope: (u32, u32),
    /// Coefficients at the lattice points of the edge, from `start` to `end`
    /// (zero where the point is not in the support).
    pub coefficients: Vec<Rational>,
}

impl Edge {
    /// Number of lattice points on the edge carrying a nonzero coefficient.
    pub fn support_size(&self) -> usize {
        self.coefficients.iter().filter(|c| !c.is_zero()).count()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonPolygon {
    pub support: Vec<(u32, u32)>,
    /// Lower hull from `(0, d)` to `(m, 0)`, shallower edge by edge.
    pub edges: Vec<Edge>,
}

/// Newton polygon of a bivariate Weierstrass polynomial.
///
/// Fails with [`Error::DistinguishedVarDivides`] when `e_d ≡ 0`. All points on
/// or below the hull have total degree at most `max(d, m) ≤ order`, so the
/// truncation does not affect the polygon.
pub fn newton_polygon(w: &WeierstrassData) -> Result<NewtonPolygon> {
    if w.var_count() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: w.var_count(),
        });
    }
    if w.constant_coefficient().is_zero() {
        return Err(Error::DistinguishedVarDivides);
    }
    let j = w.distinguished.index();
    let base = 1 - j;
    let body = w.polynomial().into_body();
    let coeff = |i: u32, k: u32| {
        let mut e = [0u32; 2];
        e[base] = i;
        e[j] = k;
        body.coefficient(&crate::algebra::Monomial::new(e.to_vec()))
    };
    let mut support: Vec<(u32, u32)> = body
        .terms()
        .map(|(m, _)| (m.exponent(base), m.exponent(j)))
        .collect();
    support.sort_unstable();

    let mut edges = Vec::new();
    let mut current = (0, w.degree);
    while current.1 > 0 {
        // steepest descent: minimal run per unit of drop, farthest on ties
        let next = support
            .iter()
            .filter(|p| p.1 < current.1 && p.0 >= current.0)
            .copied()
            .min_by(|a, b| {
                let ra = (a.0 - current.0) as u64 * (current.1 - b.1) as u64;
                let rb = (b.0 - current.0) as u64 * (current.1 - a.1) as u64;
                ra.cmp(&rb).then(a.1.cmp(&b.1))
            })
            .expect("e_d is nonzero, so a point on the base axis exists");
        let run = next.0 - current.0;
        let drop = current.1 - next.1;
        let g = run.gcd(&drop);
        let (sr, sd) = (run / g, drop / g);
        let coefficients = (0..=g)
            .map(|k| coeff(current.0 + k * sr, current.1 - k * sd))
            .collect();
        edges.push(Edge {
            start: current,
            end: next,
            slope: (sr, sd),
            coefficients,
        });
        current = next;
    }
    Ok(NewtonPolygon { support, edges })
}

/// Irreducibility verdict readable off the polygon alone.
///
/// Several edges: one group of branches per edge, so reducible. A single edge
/// from `(0, d)` to `(m, 0)` with edge polynomial of degree `g = gcd(d, m)`:
/// irreducible when `g = 1`, reducible when the edge polynomial has at least
/// two distinct roots, otherwise undecided.
pub fn polygon_verdict(polygon: &NewtonPolygon) -> GermStatus {
    match polygon.edges.as_slice() {
        [] => GermStatus::Undetermined("empty Newton polygon".into()),
        [edge] => {
            let d = edge.start.1 - edge.end.1;
            let m = edge.end.0 - edge.start.0;
            let g = d.gcd(&m);
            if edge.support_size() == 2 {
                if g == 1 {
                    GermStatus::SingularIrreducible(Certificate::BinomialCoprimeEdge {
                        degree: d,
                        m,
                    })
                } else {
                    GermStatus::SingularReducible {
                        certificate: Certificate::BinomialNoncoprimeEdge { gcd: g },
                        factors: None,
                    }
                }
            } else {
                let roots = univariate::distinct_root_count(&edge.coefficients);
                if roots >= 2 {
                    GermStatus::SingularReducible {
                        certificate: Certificate::EdgePolynomialSplits { factors: roots },
                        factors: None,
                    }
                } else {
                    GermStatus::Undetermined("edge polynomial is a power of a single factor".into())
                }
            }
        }
        edges => GermStatus::SingularReducible {
            certificate: Certificate::MultiEdgePolygon { edges: edges.len() },
            factors: None,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, Polynomial, Var};
    use crate::weierstrass::weierstrass_prepare;

    fn z(k: usize) -> Polynomial {
        Polynomial::var(2, Var::z(k))
    }

    fn polygon_of(f: &Polynomial) -> NewtonPolygon {
        newton_polygon(&weierstrass_prepare(f, Var::z(2), 8).unwrap()).unwrap()
    }

    #[test]
    fn cusp_has_one_coprime_edge() {
        let p = polygon_of(&(&z(2).pow(2) - &z(1).pow(3)));
        assert_eq!(p.edges.len(), 1);
        assert_eq!((p.edges[0].start, p.edges[0].end), ((0, 2), (3, 0)));
        assert_eq!(
            polygon_verdict(&p),
            GermStatus::SingularIrreducible(Certificate::BinomialCoprimeEdge { degree: 2, m: 3 })
        );
    }

    #[test]
    fn node_has_noncoprime_binomial_edge() {
        let p = polygon_of(&(&z(2).pow(2) - &z(1).pow(2)));
        assert_eq!((p.edges[0].start, p.edges[0].end), ((0, 2), (2, 0)));
        assert_eq!(
            polygon_verdict(&p),
            GermStatus::SingularReducible {
                certificate: Certificate::BinomialNoncoprimeEdge { gcd: 2 },
                factors: None
            }
        );
    }

    #[test]
    fn product_of_cusp_and_line_has_two_edges() {
        let f = &(&z(2).pow(2) - &z(1).pow(3)) * &(&z(2) - &z(1));
        let p = polygon_of(&f);
        let ends: Vec<_> = p.edges.iter().map(|e| (e.start, e.end)).collect();
        assert_eq!(ends, vec![((0, 3), (1, 2)), ((1, 2), (4, 0))]);
        assert_eq!(p.edges[0].slope, (1, 1));
        assert_eq!(p.edges[1].slope, (3, 2));
        assert_eq!(
            polygon_verdict(&p),
            GermStatus::SingularReducible {
                certificate: Certificate::MultiEdgePolygon { edges: 2 },
                factors: None
            }
        );
    }

    #[test]
    fn edge_polynomial_with_distinct_roots() {
        // (y - x)(y - 2x)(y + x) + x^5
        let f = &(&(&(&z(2) - &z(1)) * &(&z(2) - &z(1).scale(&int(2)))) * &(&z(2) + &z(1)))
            + &z(1).pow(5);
        let p = polygon_of(&f);
        assert_eq!(p.edges.len(), 1);
        assert_eq!(
            polygon_verdict(&p),
            GermStatus::SingularReducible {
                certificate: Certificate::EdgePolynomialSplits { factors: 3 },
                factors: None
            }
        );
    }

    #[test]
    fn tacnode_like_edge_is_undetermined() {
        // (y - x)^2 + x^3: edge polynomial (T - 1)^2
        let f = &(&z(2) - &z(1)).pow(2) + &z(1).pow(3);
        assert!(polygon_verdict(&polygon_of(&f)).is_undetermined());
    }

    #[test]
    fn distinguished_variable_dividing_is_signalled() {
        let f = &z(2).pow(2) - &(&z(1) * &z(2));
        let w = weierstrass_prepare(&f, Var::z(2), 6).unwrap();
        assert_eq!(newton_polygon(&w), Err(Error::DistinguishedVarDivides));
    }
}
