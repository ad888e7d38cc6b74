//! Multivariate division, S-polynomials and Buchberger's algorithm with the
//! coprime and chain criteria.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideals::{GeneratorSet, MonomialIdeal, ParamsJson};
use crate::scalar::Scalar;
use crate::subset_poly::{Monomial, Polynomial, PolynomialJson, SubsetRing};

#[derive(Clone, Debug, PartialEq)]
pub struct DivisionResult<C> {
    pub quotients: Vec<Polynomial<C>>,
    pub remainder: Polynomial<C>,
}

/// Working copy of a dividend: a map ordered by the term order so the
/// current leading term is the last entry.
struct Dividend<C>(BTreeMap<Monomial, C>);

impl<C: Scalar> Dividend<C> {
    fn new(f: &Polynomial<C>) -> Self {
        Dividend(f.terms().iter().cloned().collect())
    }

    fn pop_leading(&mut self) -> Option<(Monomial, C)> {
        self.0.pop_last()
    }

    /// `self -= c * m * tail` where `tail` is `g` without its leading term.
    fn subtract(&mut self, c: &C, m: &Monomial, g: &Polynomial<C>) {
        for (gm, gc) in &g.terms()[1..] {
            let key = gm.mul(m);
            let delta = gc.clone() * c.clone();
            match self.0.entry(key) {
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    let v = e.get().clone() - delta;
                    if v.is_zero() {
                        e.remove();
                    } else {
                        *e.get_mut() = v;
                    }
                }
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(-delta);
                }
            }
        }
    }
}

/// Division of `f` by an ordered list: the leading term is reduced by the
/// first divisor whose leading monomial divides it, otherwise it moves to
/// the remainder.
pub fn divide<C: Scalar>(f: &Polynomial<C>, divisors: &[Polynomial<C>]) -> DivisionResult<C> {
    let leads: Vec<(&Monomial, &C)> = divisors
        .iter()
        .map(|g| g.leading_term().expect("divisors must be nonzero"))
        .collect();
    let mut quotient_terms: Vec<Vec<(Monomial, C)>> = vec![Vec::new(); divisors.len()];
    let mut rem = Vec::new();
    let mut p = Dividend::new(f);
    while let Some((m, c)) = p.pop_leading() {
        let hit = leads.iter().position(|(lm, _)| lm.divides(&m));
        match hit {
            Some(i) => {
                let (lm, lc) = leads[i];
                let factor = m.div(lm).expect("divisible");
                let coeff = c / lc.clone();
                p.subtract(&coeff, &factor, &divisors[i]);
                quotient_terms[i].push((factor, coeff));
            }
            None => rem.push((m, c)),
        }
    }
    DivisionResult {
        quotients: quotient_terms
            .into_iter()
            .map(Polynomial::from_terms)
            .collect(),
        remainder: Polynomial::from_terms(rem),
    }
}

/// Remainder of `f` modulo a list of monic polynomials, with a support mask
/// prefilter. Same remainder as [`divide`] for the same order.
fn reduce_monic<C: Scalar>(f: &Polynomial<C>, basis: &[Polynomial<C>]) -> Polynomial<C> {
    let mut rem = Vec::new();
    let mut p = Dividend::new(f);
    while let Some((m, c)) = p.pop_leading() {
        let hit = basis
            .iter()
            .find(|g| g.leading_monomial().is_some_and(|lm| lm.divides(&m)));
        match hit {
            Some(g) => {
                let factor = m.div(g.leading_monomial().unwrap()).unwrap();
                p.subtract(&c, &factor, g);
            }
            None => rem.push((m, c)),
        }
    }
    Polynomial::from_terms(rem)
}

/// Remainder of `f` after division by `divisors`.
pub fn remainder<C: Scalar>(f: &Polynomial<C>, divisors: &[Polynomial<C>]) -> Polynomial<C> {
    if divisors
        .iter()
        .all(|g| g.leading_coefficient().is_some_and(|c| c.is_one()))
    {
        reduce_monic(f, divisors)
    } else {
        divide(f, divisors).remainder
    }
}

/// `(x^g / LT(f)) f - (x^g / LT(g)) g` with `x^g = lcm(LM(f), LM(g))`.
pub fn s_polynomial<C: Scalar>(f: &Polynomial<C>, g: &Polynomial<C>) -> Result<Polynomial<C>> {
    let (fm, fc) = f.leading_term()?;
    let (gm, gc) = g.leading_term()?;
    let lcm = fm.lcm(gm);
    let left = f.mul_term(&lcm.div(fm).unwrap(), &(C::one() / fc.clone()));
    let right_factor = lcm.div(gm).unwrap();
    Ok(left.add_mul_term(&-(C::one() / gc.clone()), &right_factor, g))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BuchbergerOptions {
    /// Skip pairs by the coprime and chain criteria.
    pub criteria: bool,
}

impl Default for BuchbergerOptions {
    fn default() -> Self {
        BuchbergerOptions { criteria: true }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GbStats {
    pub pairs_considered: u64,
    /// Coprime leading monomials.
    pub criterion1_skips: u64,
    /// Chain criterion.
    pub criterion2_skips: u64,
    pub reductions_to_zero: u64,
}

/// A reduced Groebner basis: monic, interreduced, sorted by increasing
/// leading monomial.
#[derive(Clone, Debug)]
pub struct GroebnerBasis<C> {
    pub ring: SubsetRing,
    pub r: u32,
    pub basis: Vec<Polynomial<C>>,
    pub stats: GbStats,
}

/// Symmetric membership table for the pair set.
struct PairTable {
    rows: Vec<Vec<bool>>,
}

impl PairTable {
    fn new() -> Self {
        PairTable { rows: Vec::new() }
    }

    fn grow(&mut self) {
        let len = self.rows.len();
        self.rows.push(vec![false; len]);
    }

    fn get(&self, i: usize, j: usize) -> bool {
        let (lo, hi) = if i < j { (i, j) } else { (j, i) };
        self.rows[hi][lo]
    }

    fn set(&mut self, i: usize, j: usize, v: bool) {
        let (lo, hi) = if i < j { (i, j) } else { (j, i) };
        self.rows[hi][lo] = v;
    }
}

/// Buchberger's algorithm on raw polynomials. Returns the reduced basis.
pub fn buchberger_polys<C: Scalar>(
    gens: &[Polynomial<C>],
    opts: BuchbergerOptions,
) -> (Vec<Polynomial<C>>, GbStats) {
    let mut stats = GbStats::default();
    let mut g: Vec<Polynomial<C>> = Vec::new();
    let mut leads: Vec<Monomial> = Vec::new();
    let mut in_b = PairTable::new();
    // Normal strategy: smallest lcm first, ties by insertion order.
    let mut queue: BinaryHeap<Reverse<(Monomial, u64, usize, usize)>> = BinaryHeap::new();
    let mut seq = 0u64;

    let mut add = |p: Polynomial<C>,
                   g: &mut Vec<Polynomial<C>>,
                   leads: &mut Vec<Monomial>,
                   in_b: &mut PairTable,
                   queue: &mut BinaryHeap<_>| {
        let lm = p.leading_monomial().unwrap().clone();
        let t = g.len();
        in_b.grow();
        for (i, li) in leads.iter().enumerate() {
            in_b.set(i, t, true);
            queue.push(Reverse((li.lcm(&lm), seq, i, t)));
            seq += 1;
        }
        leads.push(lm);
        g.push(p);
    };

    for f in gens.iter().filter(|f| !f.is_zero()) {
        add(f.monic(), &mut g, &mut leads, &mut in_b, &mut queue);
    }

    while let Some(Reverse((lcm, _, i, j))) = queue.pop() {
        stats.pairs_considered += 1;
        let skip = if !opts.criteria {
            false
        } else if leads[i].is_coprime(&leads[j]) {
            stats.criterion1_skips += 1;
            true
        } else if (0..g.len()).any(|k| {
            k != i && k != j && !in_b.get(i, k) && !in_b.get(j, k) && leads[k].divides(&lcm)
        }) {
            stats.criterion2_skips += 1;
            true
        } else {
            false
        };
        if !skip {
            let s = s_polynomial(&g[i], &g[j]).expect("basis elements are nonzero");
            let rem = reduce_monic(&s, &g);
            if rem.is_zero() {
                stats.reductions_to_zero += 1;
            } else {
                add(rem.monic(), &mut g, &mut leads, &mut in_b, &mut queue);
            }
        }
        in_b.set(i, j, false);
    }
    (interreduce(g), stats)
}

/// Turns any Groebner basis into the reduced one.
pub fn interreduce<C: Scalar>(mut g: Vec<Polynomial<C>>) -> Vec<Polynomial<C>> {
    g.retain(|p| !p.is_zero());
    g.sort_by(|a, b| a.leading_monomial().cmp(&b.leading_monomial()));
    let mut minimal: Vec<Polynomial<C>> = Vec::new();
    for p in g {
        let lm = p.leading_monomial().unwrap();
        if !minimal
            .iter()
            .any(|q| q.leading_monomial().unwrap().divides(lm))
        {
            minimal.push(p.monic());
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for idx in 0..minimal.len() {
        let p = &minimal[idx];
        let others: Vec<Polynomial<C>> = minimal
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != idx)
            .map(|(_, q)| q.clone())
            .collect();
        // The leading term is irreducible, so only the tail changes.
        out.push(reduce_monic(p, &others).monic());
    }
    out
}

pub fn buchberger<C: Scalar>(
    gens: &GeneratorSet<C>,
    opts: BuchbergerOptions,
) -> Result<GroebnerBasis<C>> {
    if gens.gens.iter().all(|g| g.is_zero()) {
        return Err(Error::InvalidParameter("empty generator set".into()));
    }
    let (basis, stats) = buchberger_polys(&gens.gens, opts);
    Ok(GroebnerBasis {
        ring: gens.ring.clone(),
        r: gens.r,
        basis,
        stats,
    })
}

impl<C: Scalar> GroebnerBasis<C> {
    pub fn n(&self) -> usize {
        self.ring.n()
    }

    pub fn lt_ideal(&self) -> MonomialIdeal {
        lt_ideal(self)
    }

    pub fn is_member(&self, f: &Polynomial<C>) -> bool {
        ideal_member(f, self)
    }

    /// Every pairwise S-polynomial reduces to zero.
    pub fn check_s_polynomials(&self) -> bool {
        let b = &self.basis;
        (0..b.len()).all(|i| {
            (i + 1..b.len()).all(|j| remainder(&s_polynomial(&b[i], &b[j]).unwrap(), b).is_zero())
        })
    }

    pub fn to_json(&self) -> GroebnerBasisJson {
        GroebnerBasisJson {
            params: ParamsJson {
                r: self.r,
                n: self.n(),
            },
            basis: self
                .basis
                .iter()
                .map(|p| self.ring.polynomial_to_json(p))
                .collect(),
            stats: self.stats,
        }
    }

    pub fn from_json(json: &GroebnerBasisJson) -> Result<Self> {
        let ring = SubsetRing::new(json.params.n)?;
        let basis = json
            .basis
            .iter()
            .map(|p| ring.polynomial_from_json(p))
            .collect::<Result<Vec<_>>>()?;
        Ok(GroebnerBasis {
            ring,
            r: json.params.r,
            basis,
            stats: json.stats,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroebnerBasisJson {
    pub params: ParamsJson,
    pub basis: Vec<PolynomialJson>,
    pub stats: GbStats,
}

pub fn lt_ideal<C: Scalar>(gb: &GroebnerBasis<C>) -> MonomialIdeal {
    MonomialIdeal::new(
        gb.ring.clone(),
        gb.basis
            .iter()
            .filter_map(|p| p.leading_monomial().cloned()),
    )
}

pub fn ideal_member<C: Scalar>(f: &Polynomial<C>, gb: &GroebnerBasis<C>) -> bool {
    remainder(f, &gb.basis).is_zero()
}

/// Monomials outside a zero-dimensional monomial ideal, in increasing term
/// order.
///
/// Variables are assigned exponents from rank 0 upward; a generator is
/// tested as soon as its last variable has been assigned, so a partial
/// monomial that survives can always be completed by the zero assignment.
pub fn standard_monomials(ideal: &MonomialIdeal) -> Result<Vec<Monomial>> {
    let vars = ideal.ring.num_vars();
    let mut caps = vec![u32::MAX; vars];
    for g in ideal.min_gens() {
        if let [(rank, e)] = g.exponents() {
            caps[*rank as usize] = caps[*rank as usize].min(*e - 1);
        }
    }
    if let Some(r) = caps.iter().position(|&c| c == u32::MAX) {
        let s = ideal.ring.subset(r as u32);
        return Err(Error::InfiniteQuotient(format!("z{s}")));
    }
    if ideal.min_gens().iter().any(|g| g.is_one()) {
        return Ok(Vec::new());
    }
    let mut by_last: Vec<Vec<&Monomial>> = vec![Vec::new(); vars];
    for g in ideal.min_gens() {
        by_last[g.max_rank().unwrap() as usize].push(g);
    }

    fn walk(
        rank: usize,
        caps: &[u32],
        by_last: &[Vec<&Monomial>],
        current: &mut Vec<(u32, u32)>,
        out: &mut Vec<Monomial>,
    ) {
        if rank == caps.len() {
            out.push(Monomial::from_exponents(current.iter().copied()));
            return;
        }
        for e in 0..=caps[rank] {
            if e > 0 {
                current.push((rank as u32, e));
            }
            let m = Monomial::from_exponents(current.iter().copied());
            let blocked = e > 0 && by_last[rank].iter().any(|g| g.divides(&m));
            if !blocked {
                walk(rank + 1, caps, by_last, current, out);
            }
            if e > 0 {
                current.pop();
            }
            if blocked {
                // Larger exponents stay divisible.
                break;
            }
        }
    }

    let mut out = Vec::new();
    walk(0, &caps, &by_last, &mut Vec::new(), &mut out);
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideals::{combined_ideal, predicted_lt_ideal, Label};
    use crate::subset_poly::Subset;
    use num_rational::{BigRational, Rational64};
    use num_traits::One;

    type Q = BigRational;

    fn q(n: i64) -> Q {
        Q::from_integer(n.into())
    }

    fn j32() -> (SubsetRing, Vec<Polynomial<Q>>) {
        let j = combined_ideal::<Q>(3, 2).unwrap();
        (j.ring, j.gens)
    }

    #[test]
    fn division_examples() {
        let ring = SubsetRing::new(2).unwrap();
        let g: Polynomial<Q> = ring.parse_polynomial("z{1}*z{2} - z{}*z{1,2}").unwrap();
        let f: Polynomial<Q> = ring.parse_polynomial("z{1}*z{2}").unwrap();
        let res = divide(&f, std::slice::from_ref(&g));
        assert_eq!(ring.format_polynomial(&res.remainder), "z{}*z{1,2}");
        assert_eq!(res.quotients[0], Polynomial::constant(q(1)));
        assert!(divide(&g, std::slice::from_ref(&g)).remainder.is_zero());
        assert!(divide(&Polynomial::zero(), std::slice::from_ref(&g))
            .remainder
            .is_zero());
    }

    #[test]
    fn division_contract() {
        let (ring, gens) = j32();
        let f: Polynomial<Q> = ring
            .parse_polynomial("3*z{1}^4*z{2} - z{2}^5 + 1/2*z{1,2}^4 + z{1}*z{1,2}^2 + 7")
            .unwrap();
        let res = divide(&f, &gens);
        let mut recombined = res.remainder.clone();
        for (qi, gi) in res.quotients.iter().zip(&gens) {
            recombined = &recombined + &(qi * gi);
        }
        assert_eq!(recombined, f);
        for (m, _) in res.remainder.terms() {
            assert!(gens
                .iter()
                .all(|g| !g.leading_monomial().unwrap().divides(m)));
        }
    }

    #[test]
    fn s_polynomial_example() {
        let (ring, gens) = j32();
        let s = s_polynomial(&gens[3], &gens[1]).unwrap();
        assert_eq!(ring.format_polynomial(&s), "-z{2}^4 - z{}*z{1}^2*z{1,2}");
        assert!(s_polynomial(&gens[1], &gens[1]).unwrap().is_zero());
        assert_eq!(s_polynomial(&gens[1], &gens[3]).unwrap(), -s);
        assert_eq!(
            s_polynomial(&gens[1], &Polynomial::zero()),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn s_polynomial_antisymmetric_on_toric_pairs() {
        let j = combined_ideal::<Q>(2, 3).unwrap();
        for a in &j.gens {
            for b in &j.gens {
                let ab = s_polynomial(a, b).unwrap();
                assert_eq!(ab, -s_polynomial(b, a).unwrap());
                let lcm = a
                    .leading_monomial()
                    .unwrap()
                    .lcm(b.leading_monomial().unwrap());
                assert!(ab.leading_monomial().is_none_or(|m| *m < lcm));
            }
        }
    }

    #[test]
    fn gb_of_j32() {
        let j = combined_ideal::<Q>(3, 2).unwrap();
        let gb = buchberger(&j, BuchbergerOptions::default()).unwrap();
        let ring = &gb.ring;
        let printed: Vec<String> = gb.basis.iter().map(|p| ring.format_polynomial(p)).collect();
        assert!(printed.contains(&"z{2}^4".to_string()), "{printed:?}");
        assert!(gb.check_s_polynomials());
        let lts: Vec<String> = gb
            .lt_ideal()
            .min_gens()
            .iter()
            .map(|m| ring.format_monomial(m))
            .collect();
        let mut lts_sorted = lts.clone();
        lts_sorted.sort();
        let mut want = vec!["z{}", "z{1}*z{2}", "z{1}^3", "z{1,2}^3", "z{2}^4"];
        want.sort();
        assert_eq!(lts_sorted, want);
        assert_eq!(gb.lt_ideal(), predicted_lt_ideal(3, 2).unwrap());
        assert!(gb
            .basis
            .iter()
            .all(|p| p.leading_coefficient().unwrap().is_one()));
    }

    #[test]
    fn gb_of_single_monomial() {
        let ring = SubsetRing::new(2).unwrap();
        let z1 = Polynomial::<Q>::monomial(ring.var(Subset::from_elements([1])));
        let gens = GeneratorSet {
            ring: ring.clone(),
            r: 1,
            gens: vec![z1.clone()],
            label: Label::Combined,
        };
        let gb = buchberger(&gens, BuchbergerOptions::default()).unwrap();
        assert_eq!(gb.basis, vec![z1.clone()]);
        assert_eq!(
            gb.lt_ideal(),
            MonomialIdeal::new(ring, [z1.leading_monomial().unwrap().clone()])
        );
    }

    #[test]
    fn small_instances_match_prediction() {
        for (r, n) in [(1, 1), (1, 2), (2, 2), (1, 3), (2, 1), (3, 1)] {
            let j = combined_ideal::<Q>(r, n).unwrap();
            let gb = buchberger(&j, BuchbergerOptions::default()).unwrap();
            assert_eq!(
                gb.lt_ideal(),
                predicted_lt_ideal(r, n).unwrap(),
                "r={r} n={n}"
            );
            assert!(gb.check_s_polynomials());
        }
    }

    #[test]
    fn criteria_do_not_change_result() {
        for (r, n) in [(1, 2), (2, 2), (3, 2), (1, 3)] {
            let j = combined_ideal::<Q>(r, n).unwrap();
            let with = buchberger(&j, BuchbergerOptions { criteria: true }).unwrap();
            let without = buchberger(&j, BuchbergerOptions { criteria: false }).unwrap();
            assert_eq!(with.basis, without.basis);
            assert_eq!(
                without.stats.criterion1_skips + without.stats.criterion2_skips,
                0
            );
        }
    }

    #[test]
    fn generic_over_coefficients() {
        let gb_q = buchberger(
            &combined_ideal::<Q>(2, 2).unwrap(),
            BuchbergerOptions::default(),
        )
        .unwrap();
        let gb_64 = buchberger(
            &combined_ideal::<Rational64>(2, 2).unwrap(),
            BuchbergerOptions::default(),
        )
        .unwrap();
        let gb_f = buchberger(
            &combined_ideal::<f64>(2, 2).unwrap(),
            BuchbergerOptions::default(),
        )
        .unwrap();
        let as_text = |ring: &SubsetRing, b: &[Polynomial<Q>]| -> Vec<String> {
            b.iter().map(|p| ring.format_polynomial(p)).collect()
        };
        let expected = as_text(&gb_q.ring, &gb_q.basis);
        let from_64: Vec<Polynomial<Q>> = gb_64
            .basis
            .iter()
            .map(|p| p.map_coefficients(|c| Q::new((*c.numer()).into(), (*c.denom()).into())))
            .collect();
        assert_eq!(as_text(&gb_q.ring, &from_64), expected);
        let from_f: Vec<Polynomial<Q>> = gb_f
            .basis
            .iter()
            .map(|p| p.map_coefficients(|c| Q::from_float(*c).unwrap()))
            .collect();
        assert_eq!(as_text(&gb_q.ring, &from_f), expected);
    }

    #[test]
    fn membership() {
        let j = combined_ideal::<Q>(3, 2).unwrap();
        let gb = buchberger(&j, BuchbergerOptions::default()).unwrap();
        assert!(gb.is_member(&j.gens[1]));
        assert!(!gb.is_member(&Polynomial::constant(q(1))));
        let z_empty = &j.gens[0];
        let other: Polynomial<Q> = gb.ring.parse_polynomial("z{1}^2 + 5*z{2}*z{1,2}").unwrap();
        assert!(gb.is_member(&(z_empty * &other)));
        let member: Polynomial<Q> = gb.ring.parse_polynomial("z{2}^4*z{1,2}").unwrap();
        assert!(divide(&member, &gb.basis).remainder.is_zero());
    }

    #[test]
    fn standard_monomials_small() {
        let n12 = predicted_lt_ideal(1, 2).unwrap();
        let std12: Vec<String> = standard_monomials(&n12)
            .unwrap()
            .iter()
            .map(|m| n12.ring.format_monomial(m))
            .collect();
        assert_eq!(std12, vec!["1", "z{2}"]);
        assert_eq!(
            standard_monomials(&predicted_lt_ideal(3, 2).unwrap())
                .unwrap()
                .len(),
            18
        );
        assert_eq!(
            standard_monomials(&predicted_lt_ideal(1, 3).unwrap())
                .unwrap()
                .len(),
            6
        );
    }

    #[test]
    fn standard_monomials_match_box_filter() {
        for (r, n) in [(2, 2), (3, 2), (2, 3)] {
            let ideal = predicted_lt_ideal(r, n).unwrap();
            let vars = ideal.ring.num_vars();
            let cap = r + 1;
            let mut oracle = Vec::new();
            let total = (cap as u64).pow(vars as u32);
            for code in 0..total {
                let mut c = code;
                let m = Monomial::from_exponents((0..vars as u32).map(|v| {
                    let e = (c % cap as u64) as u32;
                    c /= cap as u64;
                    (v, e)
                }));
                if !ideal.contains(&m) {
                    oracle.push(m);
                }
            }
            oracle.sort();
            assert_eq!(standard_monomials(&ideal).unwrap(), oracle);
        }
    }

    #[test]
    fn infinite_quotient_detected() {
        let ring = SubsetRing::new(2).unwrap();
        let ideal = MonomialIdeal::new(ring.clone(), [ring.var(Subset::EMPTY)]);
        assert!(matches!(
            standard_monomials(&ideal),
            Err(Error::InfiniteQuotient(_))
        ));
    }

    #[test]
    fn json_round_trip() {
        let gb = buchberger(
            &combined_ideal::<Q>(2, 2).unwrap(),
            BuchbergerOptions::default(),
        )
        .unwrap();
        let json = serde_json::to_string(&gb.to_json()).unwrap();
        assert!(json.starts_with(r#"{"params":{"r":2,"n":2},"basis":["#));
        assert!(json.contains(r#""stats":{"pairs_considered":"#));
        let back = GroebnerBasis::<Q>::from_json(&serde_json::from_str(&json).unwrap()).unwrap();
        assert_eq!(back.basis, gb.basis);
        assert_eq!(serde_json::to_string(&back.to_json()).unwrap(), json);
    }
}
