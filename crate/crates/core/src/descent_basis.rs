//! The Garsia-Stanton analogue `a_pi`, the negative descent basis
//! `b^r_(sigma, X)`, decoding standard monomials back to `(sigma, X)`, and
//! the map to the classical coinvariant algebra.

use crate::colored_perm::{multiplicities, ColoredPermutation, Permutation, SigmaXPair};
use crate::error::{Error, Result};
use crate::subset_poly::{BiDegree, Monomial, Subset, SubsetRing};

/// `{sigma(1), ..., sigma(j)}`.
pub fn prefix_set(sigma: &Permutation, j: usize) -> Subset {
    Subset::from_elements(sigma.values()[..j].iter().copied())
}

fn check_len(ring: &SubsetRing, sigma: &Permutation) -> Result<()> {
    if sigma.len() != ring.n() {
        return Err(Error::Dimension(format!(
            "permutation of length {} in T_{}",
            sigma.len(),
            ring.n()
        )));
    }
    Ok(())
}

/// `a_pi`: product of the prefix-set variables at the descents of `pi`.
pub fn gs_element(ring: &SubsetRing, pi: &Permutation) -> Result<Monomial> {
    check_len(ring, pi)?;
    Ok(ring.monomial(pi.descent_set().into_iter().map(|j| (prefix_set(pi, j), 1))))
}

/// `b^r_(sigma, X) = a_sigma * prod_{j in X} z_{sigma(1..j)}`.
pub fn nd_element(ring: &SubsetRing, pair: &SigmaXPair, r: u32) -> Result<Monomial> {
    check_len(ring, &pair.sigma)?;
    pair.validate(r)?;
    let sigma = &pair.sigma;
    let factors = sigma
        .descent_set()
        .into_iter()
        .chain(pair.x.iter().copied())
        .map(|j| (prefix_set(sigma, j), 1));
    Ok(ring.monomial(factors))
}

/// A basis monomial together with the group element it encodes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XMonomial {
    pub monomial: Monomial,
    pub pair: SigmaXPair,
}

/// The full negative descent basis, one entry per element of `Z_r wr S_n`.
pub fn negative_descent_basis(ring: &SubsetRing, r: u32, limit: u128) -> Result<Vec<XMonomial>> {
    crate::colored_perm::enumerate_pairs(r, ring.n(), limit)?
        .map(|pair| {
            Ok(XMonomial {
                monomial: nd_element(ring, &pair, r)?,
                pair,
            })
        })
        .collect()
}

impl XMonomial {
    pub fn element(&self, r: u32) -> Result<ColoredPermutation> {
        ColoredPermutation::recompose(&self.pair, r)
    }
}

/// The intermediate data of [`decode`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decoded {
    pub pair: SigmaXPair,
    /// Multiset built from the exponents alone, before non-descent
    /// boundaries are added.
    pub x_tilde: Vec<usize>,
    /// Product of the chain variables sitting at ascents of `sigma`.
    pub m_fail: Monomial,
}

/// Recovers `(sigma, X)` from a standard monomial.
///
/// The support must be a chain `B_1 < ... < B_s`. `sigma` lists each block
/// `B_i \ B_(i-1)` increasingly, then the unused elements increasingly. A
/// chain variable contributes an extra copy of `|B_i|` to `X` when its block
/// boundary is an ascent, and `z_[n]` contributes all its copies.
pub fn decode_detailed(ring: &SubsetRing, m: &Monomial, r: u32) -> Result<Decoded> {
    let n = ring.n();
    let mut chain: Vec<(Subset, u32)> = ring.factors(m).collect();
    chain.sort_by_key(|(s, _)| s.len());
    for w in chain.windows(2) {
        if !w[0].0.is_proper_subset_of(w[1].0) {
            return Err(Error::NotStandard(format!(
                "support {} and {} do not form a chain",
                w[0].0, w[1].0
            )));
        }
    }
    if chain.iter().any(|(s, _)| s.is_empty()) {
        return Err(Error::NotStandard("divisible by z{}".into()));
    }

    let full = ring.full_set();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut prev = Subset::EMPTY;
    for &(s, _) in &chain {
        blocks.push(s.difference(prev).elements().collect());
        prev = s;
    }
    let tail: Vec<usize> = full.difference(prev).elements().collect();
    let sigma_values: Vec<usize> = blocks.iter().flatten().chain(&tail).copied().collect();
    let sigma = Permutation::new(sigma_values)?;

    let mut x_tilde = Vec::new();
    let mut boundary_ascents = Vec::new();
    let mut m_fail = Vec::new();
    for (i, &(s, e)) in chain.iter().enumerate() {
        let c = s.len();
        if s == full {
            x_tilde.extend(std::iter::repeat_n(c, e as usize));
            continue;
        }
        x_tilde.extend(std::iter::repeat_n(c, e as usize - 1));
        let last = *blocks[i].last().unwrap();
        let next_first = blocks.get(i + 1).map_or_else(|| tail[0], |b| b[0]);
        if last < next_first {
            boundary_ascents.push(c);
            m_fail.push((s, 1));
        }
    }
    let mut x: Vec<usize> = x_tilde.iter().copied().chain(boundary_ascents).collect();
    x.sort_unstable();
    multiplicities(&x, r, n).map_err(|e| Error::NotStandard(e.to_string()))?;
    let pair = SigmaXPair { sigma, x };
    if nd_element(ring, &pair, r)? != *m {
        return Err(Error::NotStandard(format!(
            "{} is not a negative descent monomial",
            ring.format_monomial(m)
        )));
    }
    Ok(Decoded {
        pair,
        x_tilde,
        m_fail: ring.monomial(m_fail),
    })
}

pub fn decode(ring: &SubsetRing, m: &Monomial, r: u32) -> Result<SigmaXPair> {
    decode_detailed(ring, m, r).map(|d| d.pair)
}

/// `z_A -> prod_{i in A} x_i`: the exponent of `x_i` in the image.
pub fn coinvariant_image(ring: &SubsetRing, m: &Monomial) -> Vec<u32> {
    let mut exps = vec![0u32; ring.n()];
    for (s, e) in ring.factors(m) {
        for i in s.elements() {
            exps[i - 1] += e;
        }
    }
    exps
}

/// `(ndes, nmajor)` of the element encoded by `pair`, as a bidegree.
pub fn statistics_bidegree(pair: &SigmaXPair, r: u32) -> Result<BiDegree> {
    let g = ColoredPermutation::recompose(pair, r)?;
    Ok(BiDegree {
        tdeg: g.ndes() as u32,
        qdeg: g.nmajor() as u32,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colored_perm::{enumerate_pairs, DEFAULT_ENUMERATION_LIMIT};
    use crate::groebner::standard_monomials;
    use crate::ideals::predicted_lt_ideal;
    use std::collections::{BTreeMap, HashSet};

    fn set(e: &[usize]) -> Subset {
        Subset::from_elements(e.iter().copied())
    }

    fn example_pair() -> SigmaXPair {
        SigmaXPair::new("421536".parse().unwrap(), vec![2, 2, 2, 4, 5, 5, 6])
    }

    #[test]
    fn gs_element_examples() {
        let ring = SubsetRing::new(6).unwrap();
        let a = gs_element(&ring, &"421536".parse().unwrap()).unwrap();
        assert_eq!(ring.format_monomial(&a), "z{4}*z{2,4}*z{1,2,4,5}");
        assert!(gs_element(&ring, &Permutation::identity(6))
            .unwrap()
            .is_one());
        assert!(gs_element(&ring, &Permutation::identity(5)).is_err());
    }

    #[test]
    fn gs_bidegrees_over_s3() {
        let ring = SubsetRing::new(3).unwrap();
        let mut poly: BTreeMap<(u32, u32), u32> = BTreeMap::new();
        for p in Permutation::all(3) {
            let d = ring.bidegree(&gs_element(&ring, &p).unwrap());
            assert_eq!((d.tdeg as usize, d.qdeg as usize), (p.des(), p.major()));
            *poly.entry((d.tdeg, d.qdeg)).or_default() += 1;
        }
        let expected: BTreeMap<(u32, u32), u32> =
            [((0, 0), 1), ((1, 1), 2), ((1, 2), 2), ((2, 3), 1)]
                .into_iter()
                .collect();
        assert_eq!(poly, expected);
    }

    #[test]
    fn nd_element_example() {
        let ring = SubsetRing::new(6).unwrap();
        let b = nd_element(&ring, &example_pair(), 4).unwrap();
        assert_eq!(
            ring.format_monomial(&b),
            "z{4}*z{2,4}^4*z{1,2,4,5}^2*z{1,2,3,4,5}^2*z{1,2,3,4,5,6}"
        );
        assert_eq!(ring.bidegree(&b), BiDegree { tdeg: 10, qdeg: 33 });
        assert_eq!(
            statistics_bidegree(&example_pair(), 4).unwrap(),
            ring.bidegree(&b)
        );
        let sigma: Permutation = "421536".parse().unwrap();
        assert_eq!(
            nd_element(&ring, &SigmaXPair::new(sigma.clone(), vec![]), 4).unwrap(),
            gs_element(&ring, &sigma).unwrap()
        );
        assert!(matches!(
            nd_element(&ring, &example_pair(), 3),
            Err(Error::InvalidMultiset { element: 2, .. })
        ));
    }

    #[test]
    fn decode_example() {
        let ring = SubsetRing::new(6).unwrap();
        let m = ring
            .parse_monomial("z{4}*z{2,4}^4*z{1,2,4,5}^2*z{1,2,3,4,5}^2*z{1,2,3,4,5,6}")
            .unwrap();
        let d = decode_detailed(&ring, &m, 4).unwrap();
        assert_eq!(d.pair, example_pair());
        assert_eq!(d.x_tilde, vec![2, 2, 2, 4, 5, 6]);
        assert_eq!(d.m_fail, ring.var(set(&[1, 2, 3, 4, 5])));
        assert_eq!(
            decode(&ring, &Monomial::one(), 4).unwrap(),
            SigmaXPair::new(Permutation::identity(6), vec![])
        );
    }

    #[test]
    fn decode_rejects_nonstandard() {
        let ring = SubsetRing::new(3).unwrap();
        let nonchain = ring.var(set(&[1])).mul(&ring.var(set(&[2])));
        assert!(matches!(
            decode(&ring, &nonchain, 2),
            Err(Error::NotStandard(_))
        ));
        let empty = ring.var(Subset::EMPTY);
        assert!(matches!(
            decode(&ring, &empty, 2),
            Err(Error::NotStandard(_))
        ));
        // z_[1]^2 needs multiplicity 2 at the ascent 1 | 2 3.
        let over = ring.monomial([(set(&[1]), 2)]);
        assert!(matches!(
            decode(&ring, &over, 2),
            Err(Error::NotStandard(_))
        ));
    }

    #[test]
    fn decode_round_trips_over_standard_monomials() {
        for (r, n) in [(2, 3), (1, 3), (3, 2), (2, 2)] {
            let ring = SubsetRing::new(n).unwrap();
            let std = standard_monomials(&predicted_lt_ideal(r, n).unwrap()).unwrap();
            assert_eq!(
                std.len() as u128,
                crate::colored_perm::group_order(r, n).unwrap()
            );
            for m in &std {
                let pair = decode(&ring, m, r).unwrap();
                assert_eq!(&nd_element(&ring, &pair, r).unwrap(), m);
            }
            for pair in enumerate_pairs(r, n, DEFAULT_ENUMERATION_LIMIT).unwrap() {
                let m = nd_element(&ring, &pair, r).unwrap();
                assert_eq!(decode(&ring, &m, r).unwrap(), pair);
            }
        }
    }

    #[test]
    fn gs_basis_is_standard_for_r1() {
        for n in 1..=5 {
            let ring = SubsetRing::new(n).unwrap();
            let gs: HashSet<Monomial> = Permutation::all(n)
                .map(|p| gs_element(&ring, &p).unwrap())
                .collect();
            let std: HashSet<Monomial> = standard_monomials(&predicted_lt_ideal(1, n).unwrap())
                .unwrap()
                .into_iter()
                .collect();
            assert_eq!(gs, std, "n = {n}");
        }
    }

    #[test]
    fn coinvariant_examples() {
        let ring = SubsetRing::new(6).unwrap();
        let a = gs_element(&ring, &"421536".parse().unwrap()).unwrap();
        // x_1 x_2^2 x_4^3 x_5
        assert_eq!(coinvariant_image(&ring, &a), vec![1, 2, 0, 3, 1, 0]);
        assert_eq!(
            coinvariant_image(&ring, &ring.var(Subset::EMPTY)),
            vec![0; 6]
        );
        let b = nd_element(&ring, &example_pair(), 4).unwrap();
        let total: u32 = coinvariant_image(&ring, &b).iter().sum();
        assert_eq!(total, ring.bidegree(&b).qdeg);
    }
}
