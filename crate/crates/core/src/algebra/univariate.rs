//! Dense univariate polynomials over Q, coefficient `k` at index `k`.
//! Only what the square and edge-polynomial tests need.

use num_traits::Zero;

use super::Rational;

pub(crate) type Dense = Vec<Rational>;

pub(crate) fn trim(mut p: Dense) -> Dense {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

pub(crate) fn degree(p: &Dense) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub(crate) fn derivative(p: &Dense) -> Dense {
    trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * Rational::from_integer(k.into()))
            .collect(),
    )
}

/// Quotient and remainder; `d` must be nonzero.
pub(crate) fn div_rem(p: &Dense, d: &Dense) -> (Dense, Dense) {
    let dd = degree(d).expect("division by zero polynomial");
    let lc = d[dd].clone();
    let mut r = trim(p.clone());
    let mut q = vec![Rational::zero(); r.len().saturating_sub(dd)];
    while let Some(rd) = degree(&r) {
        if rd < dd {
            break;
        }
        let c = &r[rd] / &lc;
        for (i, di) in d.iter().enumerate().take(dd + 1) {
            r[rd - dd + i] -= &c * di;
        }
        q[rd - dd] = c;
        r = trim(r);
    }
    (trim(q), r)
}

fn monic(p: Dense) -> Dense {
    match degree(&p) {
        None => p,
        Some(d) => {
            let lc = p[d].clone();
            p.into_iter().map(|c| c / &lc).collect()
        }
    }
}

pub(crate) fn gcd(a: &Dense, b: &Dense) -> Dense {
    let mut a = trim(a.clone());
    let mut b = trim(b.clone());
    while degree(&b).is_some() {
        let (_, r) = div_rem(&a, &b);
        a = b;
        b = r;
    }
    monic(a)
}

/// Multiplicities of the distinct roots over C, one entry per squarefree
/// factor of Yun's decomposition `p = c · Π a_i^i` (with `a_i` nonconstant).
pub(crate) fn squarefree_multiplicities(p: &Dense) -> Vec<usize> {
    let p = trim(p.clone());
    if degree(&p).unwrap_or(0) == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let dp = derivative(&p);
    let a0 = gcd(&p, &dp);
    let mut b = div_rem(&p, &a0).0;
    let mut c = div_rem(&dp, &a0).0;
    let mut d = sub(&c, &derivative(&b));
    let mut i = 1;
    while degree(&b).unwrap_or(0) > 0 {
        let a = gcd(&b, &d);
        if degree(&a).unwrap_or(0) > 0 {
            out.push(i);
        }
        b = div_rem(&b, &a).0;
        c = div_rem(&d, &a).0;
        d = sub(&c, &derivative(&b));
        i += 1;
    }
    out
}

/// Degree of the squarefree part, i.e. the number of distinct complex roots.
pub(crate) fn distinct_root_count(p: &Dense) -> usize {
    let p = trim(p.clone());
    match degree(&p) {
        None | Some(0) => 0,
        Some(_) => {
            let g = gcd(&p, &derivative(&p));
            degree(&div_rem(&p, &g).0).unwrap_or(0)
        }
    }
}

fn sub(a: &Dense, b: &Dense) -> Dense {
    let n = a.len().max(b.len());
    let zero = Rational::zero();
    trim(
        (0..n)
            .map(|i| a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero))
            .collect(),
    )
}
