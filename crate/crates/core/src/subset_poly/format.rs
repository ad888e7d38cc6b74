//! Text and JSON forms of monomials and polynomials.
//!
//! Text: factors `z{2,4}^4` joined by `*`, `z{}` for the empty set, terms
//! joined by ` + ` / ` - `, optional coefficient `p/q*` in front. Factors
//! print largest variable first and terms leading term first, so printing a
//! parsed string reproduces it exactly when it was printed by this module.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

use super::{Monomial, Polynomial, Subset, SubsetRing};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorJson {
    pub subset: Vec<usize>,
    pub exp: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: String,
    pub mono: Vec<FactorJson>,
}

pub type PolynomialJson = Vec<TermJson>;

impl SubsetRing {
    pub fn format_monomial(&self, m: &Monomial) -> String {
        if m.is_one() {
            return "1".to_string();
        }
        self.factors(m)
            .map(|(s, e)| {
                let elems: Vec<String> = s.elements().map(|x| x.to_string()).collect();
                if e == 1 {
                    format!("z{{{}}}", elems.join(","))
                } else {
                    format!("z{{{}}}^{e}", elems.join(","))
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }

    pub fn format_polynomial<C: Scalar>(&self, p: &Polynomial<C>) -> String {
        if p.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in p.terms().iter().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let abs = c.abs();
            if m.is_one() {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&self.format_monomial(m));
            } else {
                out.push_str(&format!("{abs}*{}", self.format_monomial(m)));
            }
        }
        out
    }

    fn parse_subset(&self, body: &str) -> Result<Subset> {
        let mut s = Subset::EMPTY;
        if body.is_empty() {
            return Ok(s);
        }
        for tok in body.split(',') {
            let e: usize = tok
                .parse()
                .map_err(|_| Error::Parse(format!("bad subset element `{tok}`")))?;
            if e == 0 || e > self.n() {
                return Err(Error::Parse(format!(
                    "element {e} outside 1..={}",
                    self.n()
                )));
            }
            if s.contains(e) {
                return Err(Error::Parse(format!("repeated element {e}")));
            }
            s = s.union(Subset::from_elements([e]));
        }
        Ok(s)
    }

    /// Parses one `*`-separated product; a leading numeric factor is the
    /// coefficient.
    fn parse_product<C: Scalar>(&self, text: &str) -> Result<(Monomial, C)> {
        let mut coeff = C::one();
        let mut factors = Vec::new();
        for (idx, factor) in text.split('*').enumerate() {
            if let Some(rest) = factor.strip_prefix("z{") {
                let (body, tail) = rest
                    .split_once('}')
                    .ok_or_else(|| Error::Parse(format!("unclosed variable in `{factor}`")))?;
                let subset = self.parse_subset(body)?;
                let exp = match tail {
                    "" => 1,
                    t => t
                        .strip_prefix('^')
                        .and_then(|e| e.parse::<u32>().ok())
                        .ok_or_else(|| Error::Parse(format!("bad exponent in `{factor}`")))?,
                };
                factors.push((self.rank(subset), exp));
            } else if idx == 0 {
                coeff = C::parse_scalar(factor)
                    .ok_or_else(|| Error::Parse(format!("bad coefficient `{factor}`")))?;
            } else {
                return Err(Error::Parse(format!("unexpected factor `{factor}`")));
            }
        }
        Ok((Monomial::from_exponents(factors), coeff))
    }

    pub fn parse_monomial(&self, text: &str) -> Result<Monomial> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let (m, c) = self.parse_product::<i64>(&compact)?;
        if c != 1 {
            return Err(Error::Parse(format!("`{text}` has a coefficient")));
        }
        Ok(m)
    }

    pub fn parse_polynomial<C: Scalar>(&self, text: &str) -> Result<Polynomial<C>> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        if compact == "0" {
            return Ok(Polynomial::zero());
        }
        let mut terms = Vec::new();
        let mut start = 0;
        let bytes = compact.as_bytes();
        let mut pieces = Vec::new();
        for (i, &b) in bytes.iter().enumerate() {
            if (b == b'+' || b == b'-') && i > 0 {
                pieces.push(&compact[start..i]);
                start = i;
            }
        }
        pieces.push(&compact[start..]);
        for piece in pieces {
            let (negative, body) = match piece.as_bytes().first() {
                Some(b'-') => (true, &piece[1..]),
                Some(b'+') => (false, &piece[1..]),
                _ => (false, piece),
            };
            if body.is_empty() {
                return Err(Error::Parse(format!("empty term in `{text}`")));
            }
            let (m, c) = self.parse_product::<C>(body)?;
            terms.push((m, if negative { -c } else { c }));
        }
        Ok(Polynomial::from_terms(terms))
    }

    pub fn monomial_to_json(&self, m: &Monomial) -> Vec<FactorJson> {
        self.factors(m)
            .map(|(s, exp)| FactorJson {
                subset: s.elements().collect(),
                exp,
            })
            .collect()
    }

    pub fn monomial_from_json(&self, factors: &[FactorJson]) -> Result<Monomial> {
        let mut out = Vec::with_capacity(factors.len());
        for f in factors {
            let mut s = Subset::EMPTY;
            for &e in &f.subset {
                if e == 0 || e > self.n() || s.contains(e) {
                    return Err(Error::Parse(format!("bad subset {:?}", f.subset)));
                }
                s = s.union(Subset::from_elements([e]));
            }
            out.push((self.rank(s), f.exp));
        }
        Ok(Monomial::from_exponents(out))
    }

    pub fn polynomial_to_json<C: Scalar>(&self, p: &Polynomial<C>) -> PolynomialJson {
        p.terms()
            .iter()
            .map(|(m, c)| TermJson {
                coeff: c.to_string(),
                mono: self.monomial_to_json(m),
            })
            .collect()
    }

    pub fn polynomial_from_json<C: Scalar>(&self, terms: &[TermJson]) -> Result<Polynomial<C>> {
        let parsed = terms
            .iter()
            .map(|t| {
                let c = C::parse_scalar(&t.coeff)
                    .ok_or_else(|| Error::Parse(format!("bad coefficient `{}`", t.coeff)))?;
                Ok((self.monomial_from_json(&t.mono)?, c))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Polynomial::from_terms(parsed))
    }
}
