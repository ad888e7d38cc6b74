//! Bivariate `(t, q)` series truncated in `t`, and the Euler-Mahonian
//! identities checked coefficient by coefficient.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::colored_perm::{enumerate_group, Permutation};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::subset_poly::{Monomial, SubsetRing};

/// Default `t`-truncation order.
pub const DEFAULT_TRUNCATION: usize = 8;

/// Coefficients of `t^i q^j` for `i <= trunc`; `q` is never truncated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiSeries<C> {
    trunc: usize,
    coeffs: BTreeMap<(u32, u32), C>,
}

impl<C: Scalar> BiSeries<C> {
    pub fn zero(trunc: usize) -> Self {
        BiSeries {
            trunc,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(trunc: usize) -> Self {
        let mut s = Self::zero(trunc);
        s.add_term(0, 0, C::one());
        s
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    /// Adds `c t^t q^q`; silently dropped beyond the truncation.
    pub fn add_term(&mut self, t: u32, q: u32, c: C) {
        if t as usize > self.trunc || c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry((t, q)).or_insert_with(C::zero);
        *entry = entry.clone() + c;
        if entry.is_zero() {
            self.coeffs.remove(&(t, q));
        }
    }

    pub fn coeff(&self, t: u32, q: u32) -> C {
        self.coeffs.get(&(t, q)).cloned().unwrap_or_else(C::zero)
    }

    /// Nonzero coefficients keyed by `(tdeg, qdeg)`.
    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &C)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `t^k` as a dense polynomial in `q`.
    pub fn t_coeff(&self, k: u32) -> Vec<C> {
        let mut out: Vec<C> = Vec::new();
        for (&(t, q), c) in self.coeffs.range((k, 0)..=(k, u32::MAX)) {
            debug_assert_eq!(t, k);
            if out.len() <= q as usize {
                out.resize(q as usize + 1, C::zero());
            }
            out[q as usize] = c.clone();
        }
        out
    }

    /// Dense polynomial in `t` after setting `q = 1`.
    pub fn at_q_one(&self) -> Vec<C> {
        let mut out = vec![C::zero(); self.trunc + 1];
        for (&(t, _), c) in &self.coeffs {
            out[t as usize] = out[t as usize].clone() + c.clone();
        }
        while out.len() > 1 && out.last().is_some_and(|c| c.is_zero()) {
            out.pop();
        }
        out
    }

    pub fn at_one(&self) -> C {
        self.coeffs.values().fold(C::zero(), |a, c| a + c.clone())
    }

    /// Product truncated at `min(self.trunc, other.trunc)`.
    pub fn mul(&self, other: &BiSeries<C>) -> BiSeries<C> {
        let trunc = self.trunc.min(other.trunc);
        let mut out = BiSeries::zero(trunc);
        for (&(t1, q1), c1) in &self.coeffs {
            for (&(t2, q2), c2) in &other.coeffs {
                if (t1 + t2) as usize > trunc {
                    break;
                }
                out.add_term(t1 + t2, q1 + q2, c1.clone() * c2.clone());
            }
        }
        out
    }

    pub fn add(&self, other: &BiSeries<C>) -> BiSeries<C> {
        let mut out = BiSeries::zero(self.trunc.min(other.trunc));
        for (&(t, q), c) in self.coeffs.iter().chain(&other.coeffs) {
            out.add_term(t, q, c.clone());
        }
        out
    }

    pub fn truncate(&self, trunc: usize) -> BiSeries<C> {
        let mut out = BiSeries::zero(trunc.min(self.trunc));
        for (&(t, q), c) in &self.coeffs {
            out.add_term(t, q, c.clone());
        }
        out
    }

    /// `1 / (1 - t^a q^b)` expanded up to `t^trunc`; `a >= 1`.
    pub fn geometric(a: u32, b: u32, trunc: usize) -> BiSeries<C> {
        assert!(a >= 1, "geometric series needs positive t-degree");
        let mut out = BiSeries::zero(trunc);
        let mut k = 0u32;
        while (k * a) as usize <= trunc {
            out.add_term(k * a, k * b, C::one());
            k += 1;
        }
        out
    }

    /// `1 - t^a q^b`.
    pub fn one_minus(a: u32, b: u32, trunc: usize) -> BiSeries<C> {
        let mut out = BiSeries::one(trunc);
        out.add_term(a, b, -C::one());
        out
    }
}

/// Dense univariate product.
fn poly_mul<C: Scalar>(a: &[C], b: &[C]) -> Vec<C> {
    let mut out = vec![C::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].clone() + x.clone() * y.clone();
        }
    }
    out
}

/// `[k]_q = 1 + q + ... + q^(k-1)`.
pub fn q_integer<C: Scalar>(k: usize) -> Vec<C> {
    if k == 0 {
        return vec![C::zero()];
    }
    vec![C::one(); k]
}

/// `sum_{k=0}^{trunc} [k+1]_q^n t^k`.
pub fn lhs_series<C: Scalar>(n: usize, trunc: usize) -> BiSeries<C> {
    let mut out = BiSeries::zero(trunc);
    for k in 0..=trunc {
        let base = q_integer::<C>(k + 1);
        let power = (0..n).fold(vec![C::one()], |acc, _| poly_mul(&acc, &base));
        for (q, c) in power.into_iter().enumerate() {
            out.add_term(k as u32, q as u32, c);
        }
    }
    out
}

/// Coefficients of `A_n(t) = sum_{pi in S_n} t^des(pi)`, by the recurrence
/// `A(n, k) = (k + 1) A(n-1, k) + (n - k) A(n-1, k-1)`.
pub fn eulerian_polynomial<C: Scalar>(n: usize) -> Vec<C> {
    let mut row: Vec<u128> = vec![1];
    for m in 2..=n {
        let mut next = vec![0u128; m];
        for (k, slot) in next.iter_mut().enumerate() {
            let stay = row.get(k).map_or(0, |&a| (k as u128 + 1) * a);
            let grow = if k > 0 {
                row.get(k - 1).map_or(0, |&a| (m - k) as u128 * a)
            } else {
                0
            };
            *slot = stay + grow;
        }
        row = next;
    }
    row.into_iter().map(|a| from_u128(a)).collect()
}

fn from_u128<C: Scalar>(mut a: u128) -> C {
    // Horner in base 2^32 so any Scalar can represent it.
    let base = (0..32).fold(C::one(), |acc, _| acc.clone() + acc);
    let mut digits = Vec::new();
    while a > 0 {
        digits.push((a & 0xffff_ffff) as u32);
        a >>= 32;
    }
    digits
        .iter()
        .rev()
        .fold(C::zero(), |acc, &d| acc * base.clone() + small::<C>(d))
}

fn small<C: Scalar>(d: u32) -> C {
    let mut out = C::zero();
    let mut bit = C::one();
    let mut d = d;
    while d > 0 {
        if d & 1 == 1 {
            out = out + bit.clone();
        }
        bit = bit.clone() + bit;
        d >>= 1;
    }
    out
}

/// `sum_{g in Z_r wr S_n} t^ndes(g) q^nmajor(g)`, untruncated.
pub fn numerator_negative<C: Scalar>(r: u32, n: usize, limit: u128) -> Result<BiSeries<C>> {
    let max_t = (n - 1) + n * (r as usize - 1);
    let mut out = BiSeries::zero(max_t);
    for g in enumerate_group(r, n, limit)? {
        out.add_term(g.ndes() as u32, g.nmajor() as u32, C::one());
    }
    Ok(out)
}

/// Bigraded Hilbert numerator read off a list of quotient basis monomials.
pub fn numerator_from_monomials<C: Scalar>(ring: &SubsetRing, monos: &[Monomial]) -> BiSeries<C> {
    let degs: Vec<_> = monos.iter().map(|m| ring.bidegree(m)).collect();
    let max_t = degs.iter().map(|d| d.tdeg as usize).max().unwrap_or(0);
    let mut out = BiSeries::zero(max_t);
    for d in degs {
        out.add_term(d.tdeg, d.qdeg, C::one());
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum IdentityKind {
    /// Denominator `prod_{j=0}^{n} (1 - t q^j)`, numerator over `S_n`.
    Carlitz,
    /// Denominator `(1 - t) prod_{j=1}^{n} (1 - t^r q^(rj))`, numerator over
    /// `Z_r wr S_n` with the negative statistics.
    Bagno,
}

impl fmt::Display for IdentityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IdentityKind::Carlitz => "carlitz",
            IdentityKind::Bagno => "bagno",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityParams {
    pub r: u32,
    pub n: usize,
}

impl IdentityParams {
    pub fn kind_default(self) -> IdentityKind {
        if self.r == 1 {
            IdentityKind::Carlitz
        } else {
            IdentityKind::Bagno
        }
    }
}

/// Reciprocal of the denominator, expanded up to `t^trunc`. Carlitz ignores
/// `r` and accepts `n = 0`.
pub fn denominator_expansion<C: Scalar>(
    kind: IdentityKind,
    params: IdentityParams,
    trunc: usize,
) -> BiSeries<C> {
    let n = params.n as u32;
    match kind {
        IdentityKind::Carlitz => (0..=n).fold(BiSeries::one(trunc), |acc, j| {
            acc.mul(&BiSeries::geometric(1, j, trunc))
        }),
        IdentityKind::Bagno => {
            let r = params.r;
            (1..=n).fold(BiSeries::geometric(1, 0, trunc), |acc, j| {
                acc.mul(&BiSeries::geometric(r, r * j, trunc))
            })
        }
    }
}

/// The denominator itself, as a polynomial.
pub fn denominator<C: Scalar>(
    kind: IdentityKind,
    params: IdentityParams,
    trunc: usize,
) -> BiSeries<C> {
    let n = params.n as u32;
    match kind {
        IdentityKind::Carlitz => (0..=n).fold(BiSeries::one(trunc), |acc, j| {
            acc.mul(&BiSeries::one_minus(1, j, trunc))
        }),
        IdentityKind::Bagno => (1..=n).fold(BiSeries::one_minus(1, 0, trunc), |acc, j| {
            acc.mul(&BiSeries::one_minus(params.r, params.r * j, trunc))
        }),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub t: u32,
    pub q: u32,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub identity: IdentityKind,
    pub params: IdentityParams,
    #[serde(rename = "K")]
    pub k: usize,
    pub holds: bool,
    pub mismatches: Vec<Mismatch>,
}

/// Compares `lhs_series(n, K)` with `numerator * denominator_expansion`
/// modulo `t^(K+1)`.
pub fn verify_with_numerator<C: Scalar>(
    kind: IdentityKind,
    params: IdentityParams,
    numerator: &BiSeries<C>,
    trunc: usize,
) -> IdentityReport {
    let lhs = lhs_series::<C>(params.n, trunc);
    let num = BiSeries {
        trunc: numerator.trunc.max(trunc),
        coeffs: numerator.coeffs.clone(),
    };
    let rhs = num
        .mul(&denominator_expansion(kind, params, trunc))
        .truncate(trunc);
    let mut keys: Vec<(u32, u32)> = lhs
        .coeffs
        .keys()
        .chain(rhs.coeffs.keys())
        .copied()
        .collect();
    keys.sort_unstable();
    keys.dedup();
    let mismatches: Vec<Mismatch> = keys
        .into_iter()
        .filter_map(|(t, q)| {
            let (l, r) = (lhs.coeff(t, q), rhs.coeff(t, q));
            (l != r).then(|| Mismatch {
                t,
                q,
                lhs: l.to_string(),
                rhs: r.to_string(),
            })
        })
        .collect();
    IdentityReport {
        identity: kind,
        params,
        k: trunc,
        holds: mismatches.is_empty(),
        mismatches,
    }
}

/// Builds the numerator by enumerating the group and checks the identity.
pub fn verify_identity<C: Scalar>(
    kind: IdentityKind,
    params: IdentityParams,
    trunc: usize,
    limit: u128,
) -> Result<IdentityReport> {
    if params.n == 0 || params.r == 0 {
        return Err(Error::InvalidParameter("need r >= 1 and n >= 1".into()));
    }
    let numerator = match kind {
        IdentityKind::Carlitz => numerator_negative::<C>(1, params.n, limit)?,
        IdentityKind::Bagno => numerator_negative::<C>(params.r, params.n, limit)?,
    };
    Ok(verify_with_numerator(kind, params, &numerator, trunc))
}

/// `sum_{pi in S_n} t^des q^maj` from the permutations directly.
pub fn carlitz_numerator<C: Scalar>(n: usize) -> BiSeries<C> {
    let mut out = BiSeries::zero(n.saturating_sub(1));
    for p in Permutation::all(n) {
        out.add_term(p.des() as u32, p.major() as u32, C::one());
    }
    out
}
