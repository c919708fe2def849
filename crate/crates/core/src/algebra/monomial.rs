use std::cmp::Ordering;
use std::fmt;

/// Exponent vector `(a1, …, an)` standing for `z1^a1 ⋯ zn^an`.
///
/// Ordered graded-lexicographically with `z1 > z2 > … > zn`: first by total
/// degree, then by the first exponent that differs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(var_count: usize) -> Self {
        Monomial(vec![0; var_count])
    }

    pub fn var(var_count: usize, index: usize, exponent: u32) -> Self {
        let mut e = vec![0; var_count];
        e[index] = exponent;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent(&self, index: usize) -> u32 {
        self.0[index]
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.len(), other.len());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` when `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Componentwise minimum.
    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    pub(crate) fn with_exponent(&self, index: usize, exponent: u32) -> Monomial {
        let mut e = self.0.clone();
        e[index] = exponent;
        Monomial(e)
    }

    pub(crate) fn without(&self, index: usize) -> Monomial {
        let mut e = self.0.clone();
        e.remove(index);
        Monomial(e)
    }

    pub(crate) fn inserting(&self, index: usize, exponent: u32) -> Monomial {
        let mut e = self.0.clone();
        e.insert(index, exponent);
        Monomial(e)
    }

    /// Key placing monomials in printing order: ascending total degree, and
    /// within one degree the `z1`-heaviest first.
    pub(crate) fn print_order(a: &Monomial, b: &Monomial) -> Ordering {
        a.total_degree()
            .cmp(&b.total_degree())
            .then_with(|| b.0.cmp(&a.0))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    /// `z1*z2^2`; the empty product prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "z{}", i + 1)?;
            } else {
                write!(f, "z{}^{}", i + 1, e)?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grlex_order() {
        let a = Monomial::new(vec![0, 0, 2]);
        let b = Monomial::new(vec![1, 2, 0]);
        let c = Monomial::new(vec![2, 0, 0]);
        assert!(a < b);
        assert!(a < c);
        assert!(Monomial::new(vec![0, 2, 0]) < c);
        assert_eq!(Monomial::print_order(&c, &a), Ordering::Less);
    }

    #[test]
    fn division_and_gcd() {
        let a = Monomial::new(vec![1, 2]);
        let b = Monomial::new(vec![0, 1]);
        assert_eq!(a.checked_div(&b), Some(Monomial::new(vec![1, 1])));
        assert_eq!(b.checked_div(&a), None);
        assert_eq!(a.gcd(&Monomial::new(vec![3, 0])), Monomial::new(vec![1, 0]));
        assert_eq!(a.to_string(), "z1*z2^2");
        assert_eq!(Monomial::one(2).to_string(), "1");
    }
}
