//! Generator sets for the toric ideal `I_n`, the invariant ideal
//! `invar(r, n)`, their sum `J_{r,n}`, and the predicted leading-term ideal
//! `N_{r,n}`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::subset_poly::{Monomial, Polynomial, PolynomialJson, Subset, SubsetRing};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Label {
    Toric,
    Invariant,
    Combined,
    PredictedLt,
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Label::Toric => "toric",
            Label::Invariant => "invariant",
            Label::Combined => "combined",
            Label::PredictedLt => "predicted-lt",
        })
    }
}

#[derive(Clone, Debug)]
pub struct GeneratorSet<C> {
    pub ring: SubsetRing,
    pub r: u32,
    pub gens: Vec<Polynomial<C>>,
    pub label: Label,
}

impl<C> GeneratorSet<C> {
    pub fn n(&self) -> usize {
        self.ring.n()
    }
}

fn check_params(r: u32, n: usize) -> Result<SubsetRing> {
    if r == 0 {
        return Err(Error::InvalidParameter("r must be at least 1".into()));
    }
    SubsetRing::new(n)
}

/// `z_A z_B - z_{A meet B} z_{A join B}` for every unordered Sperner 2-pair,
/// leading term first.
pub fn toric_generators<C: Scalar>(n: usize) -> Result<GeneratorSet<C>> {
    let ring = SubsetRing::new(n)?;
    let gens = ring
        .sperner_pairs()
        .into_iter()
        .map(|(a, b)| {
            let lead = ring.var(a).mul(&ring.var(b));
            let tail = ring.var(a.intersection(b)).mul(&ring.var(a.union(b)));
            let g = Polynomial::from_terms([(lead.clone(), C::one()), (tail, -C::one())]);
            debug_assert_eq!(g.leading_monomial(), Some(&lead));
            g
        })
        .collect();
    Ok(GeneratorSet {
        ring,
        r: 1,
        gens,
        label: Label::Toric,
    })
}

/// `sum_{|A| = k} z_A^power`.
pub fn power_sum<C: Scalar>(ring: &SubsetRing, k: usize, power: u32) -> Polynomial<C> {
    Polynomial::from_terms(
        ring.subsets_of_size(k)
            .map(|s| (Monomial::var_pow(ring.rank(s), power), C::one())),
    )
}

/// For `r = 1` the elementary analogues `e_0, ..., e_n` (with `e_0 = z_{}`);
/// for `r >= 2`, `z_{}` and the power sums `e_{r,1}, ..., e_{r,n}`.
pub fn invariant_generators<C: Scalar>(r: u32, n: usize) -> Result<GeneratorSet<C>> {
    let ring = check_params(r, n)?;
    let mut gens = vec![Polynomial::monomial(ring.var(Subset::EMPTY))];
    gens.extend((1..=n).map(|k| power_sum(&ring, k, r)));
    Ok(GeneratorSet {
        ring,
        r,
        gens,
        label: Label::Invariant,
    })
}

/// `J_{r,n} = invar(r, n) + I_n`: invariant generators then toric binomials.
pub fn combined_ideal<C: Scalar>(r: u32, n: usize) -> Result<GeneratorSet<C>> {
    let inv = invariant_generators::<C>(r, n)?;
    let toric = toric_generators::<C>(n)?;
    let mut gens: Vec<Polynomial<C>> = Vec::with_capacity(inv.gens.len() + toric.gens.len());
    for g in inv.gens.into_iter().chain(toric.gens) {
        if !gens.contains(&g) {
            gens.push(g);
        }
    }
    Ok(GeneratorSet {
        ring: inv.ring,
        r,
        gens,
        label: Label::Combined,
    })
}

/// A monomial ideal kept as its minimal generating set, sorted increasingly.
#[derive(Clone, Debug)]
pub struct MonomialIdeal {
    pub ring: SubsetRing,
    min_gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new<I: IntoIterator<Item = Monomial>>(ring: SubsetRing, gens: I) -> Self {
        let mut all: Vec<Monomial> = gens.into_iter().collect();
        all.sort();
        all.dedup();
        let min_gens = minimize(&all, |m| m);
        MonomialIdeal { ring, min_gens }
    }

    pub fn min_gens(&self) -> &[Monomial] {
        &self.min_gens
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.min_gens.iter().any(|g| g.divides(m))
    }

    pub fn n(&self) -> usize {
        self.ring.n()
    }
}

impl PartialEq for MonomialIdeal {
    fn eq(&self, other: &Self) -> bool {
        monomial_ideal_equal(self, other)
    }
}

/// Minimal generating sets are unique, so comparing them decides equality.
pub fn monomial_ideal_equal(a: &MonomialIdeal, b: &MonomialIdeal) -> bool {
    a.ring == b.ring && a.min_gens == b.min_gens
}

/// Keeps the items none of whose monomials is divisible by an earlier kept
/// one. `items` must be sorted by increasing monomial with repeats adjacent.
fn minimize<T: Clone>(items: &[T], mono: impl Fn(&T) -> &Monomial) -> Vec<T> {
    let mut kept: Vec<T> = Vec::new();
    for item in items {
        let m = mono(item);
        // A divisor is never larger under a term order, so it comes first.
        if !kept.iter().any(|k| mono(k).divides(m)) {
            kept.push(item.clone());
        }
    }
    kept
}

/// One minimal generator of `N_{r,n}` with the family (1 to 7) that
/// produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TaggedMonomial {
    pub monomial: Monomial,
    pub family: u8,
}

/// All monomials of the seven families, before minimization.
pub fn predicted_lt_candidates(r: u32, n: usize) -> Result<(SubsetRing, Vec<TaggedMonomial>)> {
    let ring = check_params(r, n)?;
    let mut out = Vec::new();
    let mut push = |family: u8, factors: &[(Subset, u32)]| {
        out.push(TaggedMonomial {
            monomial: ring.monomial(factors.iter().copied()),
            family,
        });
    };
    let nonempty: Vec<Subset> = ring.subsets().filter(|s| !s.is_empty()).collect();
    let non_initial: Vec<Subset> = nonempty
        .iter()
        .copied()
        .filter(|s| !s.is_initial_segment())
        .collect();

    push(1, &[(Subset::EMPTY, 1)]);
    for k in 1..=n {
        push(2, &[(Subset::prefix(k), r)]);
    }
    for &a in &non_initial {
        push(3, &[(a, r + 1)]);
    }
    for (i, &a) in nonempty.iter().enumerate() {
        for &b in &nonempty[i + 1..] {
            if a.is_sperner_pair(b) {
                push(4, &[(a, 1), (b, 1)]);
            }
        }
    }
    for &a in &non_initial {
        for &b in &nonempty {
            if a.is_proper_subset_of(b) && b.difference(a).min() > a.max() {
                push(5, &[(a, r), (b, 1)]);
            }
        }
    }
    for &b in &non_initial {
        for &a in &nonempty {
            if !a.is_proper_subset_of(b) {
                continue;
            }
            let witness = (1..=n).any(|l| {
                let seg = Subset::prefix(l);
                !seg.is_subset_of(a) && seg.is_subset_of(b) && b.difference(a).is_subset_of(seg)
            });
            if witness {
                push(6, &[(a, 1), (b, r)]);
            }
        }
    }
    for &a2 in &non_initial {
        for &a1 in &nonempty {
            if !a1.is_proper_subset_of(a2) {
                continue;
            }
            for &a3 in &nonempty {
                if a2.is_proper_subset_of(a3) && a2.difference(a1).max() < a3.difference(a2).min() {
                    push(7, &[(a1, 1), (a2, r), (a3, 1)]);
                }
            }
        }
    }
    Ok((ring, out))
}

/// Minimal generators of `N_{r,n}`, each tagged with the lowest family
/// producing it.
pub fn predicted_lt_generators(r: u32, n: usize) -> Result<(SubsetRing, Vec<TaggedMonomial>)> {
    let (ring, mut cands) = predicted_lt_candidates(r, n)?;
    cands.sort_by(|a, b| a.monomial.cmp(&b.monomial).then(a.family.cmp(&b.family)));
    Ok((ring, minimize(&cands, |t| &t.monomial)))
}

pub fn predicted_lt_ideal(r: u32, n: usize) -> Result<MonomialIdeal> {
    let (ring, gens) = predicted_lt_generators(r, n)?;
    let min_gens: Vec<Monomial> = gens.into_iter().map(|t| t.monomial).collect();
    Ok(MonomialIdeal { ring, min_gens })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamsJson {
    pub r: u32,
    pub n: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorJson {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub family: Option<u8>,
    pub poly: PolynomialJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorSetJson {
    pub label: Label,
    pub params: ParamsJson,
    pub gens: Vec<GeneratorJson>,
}

impl<C: Scalar> GeneratorSet<C> {
    pub fn to_json(&self) -> GeneratorSetJson {
        GeneratorSetJson {
            label: self.label,
            params: ParamsJson {
                r: self.r,
                n: self.n(),
            },
            gens: self
                .gens
                .iter()
                .map(|g| GeneratorJson {
                    family: None,
                    poly: self.ring.polynomial_to_json(g),
                })
                .collect(),
        }
    }

    pub fn from_json(json: &GeneratorSetJson) -> Result<Self> {
        let ring = check_params(json.params.r, json.params.n)?;
        let gens = json
            .gens
            .iter()
            .map(|g| ring.polynomial_from_json(&g.poly))
            .collect::<Result<Vec<_>>>()?;
        Ok(GeneratorSet {
            ring,
            r: json.params.r,
            gens,
            label: json.label,
        })
    }
}

pub fn predicted_lt_json(r: u32, n: usize) -> Result<GeneratorSetJson> {
    let (ring, gens) = predicted_lt_generators(r, n)?;
    Ok(GeneratorSetJson {
        label: Label::PredictedLt,
        params: ParamsJson { r, n },
        gens: gens
            .iter()
            .map(|t| GeneratorJson {
                family: Some(t.family),
                poly: ring.polynomial_to_json(&Polynomial::<i64>::monomial(t.monomial.clone())),
            })
            .collect(),
    })
}
