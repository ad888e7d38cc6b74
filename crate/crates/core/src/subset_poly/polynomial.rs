use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

use super::monomial::Monomial;

/// A sparse polynomial: terms sorted by strictly decreasing monomial, no
/// zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial<C> {
    terms: Vec<(Monomial, C)>,
}

impl<C> Default for Polynomial<C> {
    fn default() -> Self {
        Polynomial { terms: Vec::new() }
    }
}

impl<C: Scalar> Polynomial<C> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: C) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn term(m: Monomial, c: C) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Polynomial {
                terms: vec![(m, c)],
            }
        }
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, C::one())
    }

    /// Canonicalizes arbitrary terms: sorts, merges repeats, drops zeros.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, C)>>(iter: I) -> Self {
        let mut raw: Vec<(Monomial, C)> = iter.into_iter().collect();
        raw.sort_by(|a, b| b.0.cmp(&a.0));
        let mut terms: Vec<(Monomial, C)> = Vec::with_capacity(raw.len());
        for (m, c) in raw {
            match terms.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = lc.clone() + c,
                _ => terms.push((m, c)),
            }
        }
        terms.retain(|(_, c)| !c.is_zero());
        Polynomial { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms from the leading one down.
    pub fn terms(&self) -> &[(Monomial, C)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, C)> {
        self.terms
    }

    pub fn leading_term(&self) -> Result<(&Monomial, &C)> {
        self.terms
            .first()
            .map(|(m, c)| (m, c))
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coefficient(&self) -> Option<&C> {
        self.terms.first().map(|(_, c)| c)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn coefficient(&self, m: &Monomial) -> C {
        self.terms
            .binary_search_by(|(tm, _)| m.cmp(tm))
            .map_or_else(|_| C::zero(), |i| self.terms[i].1.clone())
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, x)| (m.clone(), x.clone() * c.clone()))
                .collect(),
        }
    }

    /// `c * m * self`; multiplication by a monomial preserves term order.
    pub fn mul_term(&self, m: &Monomial, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(tm, x)| (tm.mul(m), x.clone() * c.clone()))
                .collect(),
        }
    }

    /// Divides by the leading coefficient. Zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coefficient() {
            Some(lc) if !lc.is_one() => {
                let inv = C::one() / lc.clone();
                self.scale(&inv)
            }
            _ => self.clone(),
        }
    }

    /// `self + c * m * g` by a single merge pass.
    pub fn add_mul_term(&self, c: &C, m: &Monomial, g: &Polynomial<C>) -> Self {
        let (a, b) = (&self.terms, &g.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let shifted: Vec<Monomial> = if m.is_one() {
            b.iter().map(|(bm, _)| bm.clone()).collect()
        } else {
            b.iter().map(|(bm, _)| bm.mul(m)).collect()
        };
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let next_b = shifted.get(j).cloned();
            match (a.get(i), next_b) {
                (Some((am, ac)), Some(bm)) => match am.cmp(&bm) {
                    std::cmp::Ordering::Greater => {
                        out.push((am.clone(), ac.clone()));
                        i += 1;
                    }
                    std::cmp::Ordering::Less => {
                        out.push((bm, b[j].1.clone() * c.clone()));
                        j += 1;
                    }
                    std::cmp::Ordering::Equal => {
                        let s = ac.clone() + b[j].1.clone() * c.clone();
                        if !s.is_zero() {
                            out.push((bm, s));
                        }
                        i += 1;
                        j += 1;
                    }
                },
                (Some((am, ac)), None) => {
                    out.push((am.clone(), ac.clone()));
                    i += 1;
                }
                (None, Some(bm)) => {
                    out.push((bm, b[j].1.clone() * c.clone()));
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        Polynomial { terms: out }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::constant(C::one()), |acc, _| &acc * self)
    }

    /// Converts coefficients, e.g. between rational types.
    pub fn map_coefficients<D: Scalar>(&self, f: impl Fn(&C) -> D) -> Polynomial<D> {
        Polynomial::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }
}

impl<C: Scalar> Add for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn add(self, rhs: &Polynomial<C>) -> Polynomial<C> {
        self.add_mul_term(&C::one(), &Monomial::one(), rhs)
    }
}

impl<C: Scalar> Sub for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn sub(self, rhs: &Polynomial<C>) -> Polynomial<C> {
        self.add_mul_term(&-C::one(), &Monomial::one(), rhs)
    }
}

impl<C: Scalar> Mul for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn mul(self, rhs: &Polynomial<C>) -> Polynomial<C> {
        Polynomial::from_terms(self.terms.iter().flat_map(|(am, ac)| {
            rhs.terms
                .iter()
                .map(move |(bm, bc)| (am.mul(bm), ac.clone() * bc.clone()))
        }))
    }
}

impl<C: Scalar> Neg for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn neg(self) -> Polynomial<C> {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl<C: Scalar> $tr for Polynomial<C> {
            type Output = Polynomial<C>;

            fn $method(self, rhs: Polynomial<C>) -> Polynomial<C> {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<C: Scalar> Neg for Polynomial<C> {
    type Output = Polynomial<C>;

    fn neg(self) -> Polynomial<C> {
        -&self
    }
}

pub fn poly_add<C: Scalar>(f: &Polynomial<C>, g: &Polynomial<C>) -> Polynomial<C> {
    f + g
}

pub fn poly_mul<C: Scalar>(f: &Polynomial<C>, g: &Polynomial<C>) -> Polynomial<C> {
    f * g
}

pub fn poly_scale<C: Scalar>(f: &Polynomial<C>, c: &C) -> Polynomial<C> {
    f.scale(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subset_poly::{Subset, SubsetRing};
    use num_rational::BigRational;
    use num_traits::{One, Zero};
    use proptest::prelude::*;

    type Q = BigRational;

    fn q(n: i64) -> Q {
        Q::from_integer(n.into())
    }

    fn z(ring: &SubsetRing, e: &[usize]) -> Polynomial<Q> {
        Polynomial::monomial(ring.var(Subset::from_elements(e.iter().copied())))
    }

    #[test]
    fn cancellation_and_distributivity() {
        let ring = SubsetRing::new(2).unwrap();
        let f = &(&z(&ring, &[1]) * &z(&ring, &[2])) - &(&z(&ring, &[]) * &z(&ring, &[1, 2]));
        assert!((&f + &f.scale(&q(-1))).is_zero());
        let g = &f * &z(&ring, &[1]);
        let expected = &(&z(&ring, &[1]).pow(2) * &z(&ring, &[2]))
            - &(&(&z(&ring, &[]) * &z(&ring, &[1])) * &z(&ring, &[1, 2]));
        assert_eq!(g, expected);
    }

    #[test]
    fn cube_of_binomial() {
        let ring = SubsetRing::new(2).unwrap();
        let s = &z(&ring, &[1]) + &z(&ring, &[2]);
        let cube = s.pow(3);
        let coeffs: Vec<Q> = cube.terms().iter().map(|(_, c)| c.clone()).collect();
        assert_eq!(coeffs, vec![q(1), q(3), q(3), q(1)]);
    }

    #[test]
    fn leading_terms() {
        let ring = SubsetRing::new(2).unwrap();
        let f = &z(&ring, &[2]).pow(4).scale(&q(-1))
            - &(&(&z(&ring, &[]) * &z(&ring, &[1]).pow(2)) * &z(&ring, &[1, 2]));
        let (m, c) = f.leading_term().unwrap();
        assert_eq!(
            *m,
            Monomial::var_pow(ring.rank(Subset::from_elements([2])), 4)
        );
        assert_eq!(*c, q(-1));
        let five = Polynomial::constant(q(5));
        assert_eq!(five.leading_term().unwrap(), (&Monomial::one(), &q(5)));
        let e21 = &z(&ring, &[1]).pow(2) + &z(&ring, &[2]).pow(2);
        assert_eq!(e21.leading_monomial().unwrap(), &Monomial::var_pow(1, 2));
        assert_eq!(
            Polynomial::<Q>::zero().leading_term(),
            Err(Error::ZeroPolynomial)
        );
    }

    fn poly_strategy() -> impl Strategy<Value = Polynomial<Q>> {
        let term = (
            prop::collection::vec((0u32..8, 0u32..3), 0..3).prop_map(Monomial::from_exponents),
            -3i64..4,
        );
        prop::collection::vec(term, 0..5)
            .prop_map(|ts| Polynomial::from_terms(ts.into_iter().map(|(m, c)| (m, q(c)))))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in poly_strategy(), b in poly_strategy(), c in poly_strategy()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
            prop_assert_eq!(&a * &Polynomial::constant(Q::one()), a.clone());
            prop_assert!(poly_scale(&a, &Q::zero()).is_zero());
            prop_assert_eq!(poly_add(&a, &b), &b + &a);
            prop_assert_eq!(poly_mul(&a, &b), &b * &a);
        }

        #[test]
        fn canonical_form(a in poly_strategy(), b in poly_strategy()) {
            let p = &a * &b;
            prop_assert!(p.terms().windows(2).all(|w| w[0].0 > w[1].0));
            prop_assert!(p.terms().iter().all(|(_, c)| !c.is_zero()));
        }
    }
}
