use std::cmp::Ordering;

use smallvec::SmallVec;

use super::subset::{BiDegree, Subset, SubsetRing};

type Exps = SmallVec<[(u32, u32); 6]>;

/// A monomial in `T_n`: sparse `(variable rank, exponent)` pairs sorted by
/// rank, zero exponents never stored.
///
/// The `Ord` implementation is the grevlex term order over the variable
/// order; it does not need the ring because ranks already encode it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    degree: u32,
    /// Bit `rank % 64` set for every variable in the support.
    support: u64,
    exps: Exps,
}

fn support_bit(rank: u32) -> u64 {
    1u64 << (rank % 64)
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(rank: u32) -> Self {
        Self::var_pow(rank, 1)
    }

    pub fn var_pow(rank: u32, exp: u32) -> Self {
        if exp == 0 {
            return Self::one();
        }
        let mut exps = Exps::new();
        exps.push((rank, exp));
        Monomial {
            degree: exp,
            support: support_bit(rank),
            exps,
        }
    }

    /// Accepts unsorted input with repeats and zero exponents.
    pub fn from_exponents<I: IntoIterator<Item = (u32, u32)>>(iter: I) -> Self {
        let mut raw: Exps = iter.into_iter().filter(|&(_, e)| e > 0).collect();
        raw.sort_unstable_by_key(|&(r, _)| r);
        let mut exps = Exps::new();
        for (r, e) in raw {
            match exps.last_mut() {
                Some((lr, le)) if *lr == r => *le += e,
                _ => exps.push((r, e)),
            }
        }
        Self::from_sorted(exps)
    }

    fn from_sorted(exps: Exps) -> Self {
        let degree = exps.iter().map(|&(_, e)| e).sum();
        let support = exps.iter().fold(0, |m, &(r, _)| m | support_bit(r));
        Monomial {
            degree,
            support,
            exps,
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    /// `(rank, exponent)` pairs by increasing rank, i.e. largest variable first.
    pub fn exponents(&self) -> &[(u32, u32)] {
        &self.exps
    }

    pub fn exponent(&self, rank: u32) -> u32 {
        self.exps
            .binary_search_by_key(&rank, |&(r, _)| r)
            .map_or(0, |i| self.exps[i].1)
    }

    pub fn max_rank(&self) -> Option<u32> {
        self.exps.last().map(|&(r, _)| r)
    }

    fn merge(&self, other: &Monomial, combine: impl Fn(u32, u32) -> u32) -> Monomial {
        let (a, b) = (&self.exps, &other.exps);
        let mut out = Exps::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let (rank, e) = match (a.get(i), b.get(j)) {
                (Some(&(ra, ea)), Some(&(rb, eb))) if ra == rb => {
                    i += 1;
                    j += 1;
                    (ra, combine(ea, eb))
                }
                (Some(&(ra, ea)), Some(&(rb, _))) if ra < rb => {
                    i += 1;
                    (ra, combine(ea, 0))
                }
                (Some(&(ra, ea)), None) => {
                    i += 1;
                    (ra, combine(ea, 0))
                }
                (_, Some(&(rb, eb))) => {
                    j += 1;
                    (rb, combine(0, eb))
                }
                (None, None) => unreachable!(),
            };
            if e > 0 {
                out.push((rank, e));
            }
        }
        Self::from_sorted(out)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.merge(other, |a, b| a + b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        self.merge(other, u32::max)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        if self.degree > other.degree || self.support & !other.support != 0 {
            return false;
        }
        let mut j = 0;
        for &(r, e) in &self.exps {
            while j < other.exps.len() && other.exps[j].0 < r {
                j += 1;
            }
            match other.exps.get(j) {
                Some(&(ro, eo)) if ro == r && eo >= e => j += 1,
                _ => return false,
            }
        }
        true
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        other.divides(self).then(|| self.merge(other, |a, b| a - b))
    }

    /// No variable in common.
    pub fn is_coprime(&self, other: &Monomial) -> bool {
        if self.support & other.support == 0 {
            return true;
        }
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < other.exps.len() {
            match self.exps[i].0.cmp(&other.exps[j].0) {
                Ordering::Equal => return false,
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
            }
        }
        true
    }

    pub fn pow(&self, k: u32) -> Monomial {
        if k == 0 {
            return Self::one();
        }
        Self::from_sorted(self.exps.iter().map(|&(r, e)| (r, e * k)).collect())
    }
}

/// Grevlex: higher total degree wins; on a tie the exponent difference is
/// scanned from the smallest variable (highest rank) and the monomial with
/// the smaller exponent at the first difference is the larger one.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree.cmp(&other.degree) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let (a, b) = (&self.exps, &other.exps);
        let (mut i, mut j) = (a.len(), b.len());
        while i > 0 && j > 0 {
            let (ra, ea) = a[i - 1];
            let (rb, eb) = b[j - 1];
            match ra.cmp(&rb) {
                // `self` has a variable `other` lacks: positive entry.
                Ordering::Greater => return Ordering::Less,
                Ordering::Less => return Ordering::Greater,
                Ordering::Equal if ea != eb => return eb.cmp(&ea),
                Ordering::Equal => {
                    i -= 1;
                    j -= 1;
                }
            }
        }
        // Equal degrees force both to run out together.
        (j).cmp(&i)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub fn mono_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    a.cmp(b)
}

impl SubsetRing {
    pub fn var(&self, s: Subset) -> Monomial {
        Monomial::var(self.rank(s))
    }

    pub fn monomial<I: IntoIterator<Item = (Subset, u32)>>(&self, factors: I) -> Monomial {
        Monomial::from_exponents(factors.into_iter().map(|(s, e)| (self.rank(s), e)))
    }

    /// `(subset, exponent)` in variable order, largest first.
    pub fn factors<'a>(&'a self, m: &'a Monomial) -> impl Iterator<Item = (Subset, u32)> + 'a {
        m.exponents().iter().map(|&(r, e)| (self.subset(r), e))
    }

    pub fn bidegree(&self, m: &Monomial) -> BiDegree {
        self.factors(m)
            .fold(BiDegree::default(), |d, (s, e)| BiDegree {
                tdeg: d.tdeg + e,
                qdeg: d.qdeg + e * s.len() as u32,
            })
    }

    /// Dense exponent vector over all `2^n` variables, largest variable first.
    pub fn dense_exponents(&self, m: &Monomial) -> Vec<u32> {
        let mut v = vec![0; self.num_vars()];
        for &(r, e) in m.exponents() {
            v[r as usize] = e;
        }
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn set(e: &[usize]) -> Subset {
        Subset::from_elements(e.iter().copied())
    }

    /// The term order applied literally to two dense exponent vectors.
    fn grevlex_oracle(a: &[u32], b: &[u32]) -> Ordering {
        let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
        if da != db {
            return da.cmp(&db);
        }
        let diff: Vec<i64> = a
            .iter()
            .zip(b)
            .map(|(&x, &y)| x as i64 - y as i64)
            .collect();
        match diff.iter().rev().find(|&&d| d != 0) {
            None => Ordering::Equal,
            Some(&d) if d < 0 => Ordering::Greater,
            Some(_) => Ordering::Less,
        }
    }

    #[test]
    fn worked_comparison() {
        let ring = SubsetRing::new(3).unwrap();
        let a = ring.monomial([(set(&[2]), 4)]);
        let b = ring.monomial([(Subset::EMPTY, 1), (set(&[1]), 2), (set(&[1, 2]), 1)]);
        assert_eq!(ring.dense_exponents(&a), vec![0, 0, 4, 0, 0, 0, 0, 0]);
        assert_eq!(ring.dense_exponents(&b), vec![1, 2, 0, 0, 1, 0, 0, 0]);
        assert_eq!(mono_cmp(&a, &b), Ordering::Greater);
        assert_eq!(mono_cmp(&a, &a), Ordering::Equal);
    }

    #[test]
    fn degree_two_monomials_of_t2_sorted() {
        let ring = SubsetRing::new(2).unwrap();
        let mut monos = Vec::new();
        for i in 0..4 {
            for j in i..4 {
                monos.push(Monomial::var(i).mul(&Monomial::var(j)));
            }
        }
        let mut by_impl = monos.clone();
        by_impl.sort();
        let mut by_oracle = monos;
        by_oracle
            .sort_by(|a, b| grevlex_oracle(&ring.dense_exponents(a), &ring.dense_exponents(b)));
        assert_eq!(by_impl, by_oracle);
    }

    #[test]
    fn bidegrees() {
        let ring = SubsetRing::new(6).unwrap();
        assert_eq!(
            ring.bidegree(&ring.var(Subset::EMPTY)),
            BiDegree { tdeg: 1, qdeg: 0 }
        );
        assert_eq!(
            ring.bidegree(&Monomial::one()),
            BiDegree { tdeg: 0, qdeg: 0 }
        );
        let m = ring.monomial([
            (set(&[4]), 1),
            (set(&[2, 4]), 4),
            (set(&[1, 2, 4, 5]), 2),
            (set(&[1, 2, 3, 4, 5]), 2),
            (set(&[1, 2, 3, 4, 5, 6]), 1),
        ]);
        assert_eq!(ring.bidegree(&m), BiDegree { tdeg: 10, qdeg: 33 });
    }

    #[test]
    fn division_helpers() {
        let a = Monomial::from_exponents([(1, 2), (3, 1)]);
        let b = Monomial::from_exponents([(1, 1)]);
        assert!(b.divides(&a));
        assert!(!a.divides(&b));
        assert_eq!(
            a.div(&b).unwrap(),
            Monomial::from_exponents([(1, 1), (3, 1)])
        );
        assert_eq!(
            a.lcm(&Monomial::var(2)),
            Monomial::from_exponents([(1, 2), (2, 1), (3, 1)])
        );
        assert!(a.is_coprime(&Monomial::var(2)));
        assert!(!a.is_coprime(&Monomial::var(3)));
        // Same bit in the support mask, different variables.
        assert!(Monomial::var(1).is_coprime(&Monomial::var(65)));
        assert!(!Monomial::var(1).divides(&Monomial::var(65)));
        assert_eq!(
            Monomial::from_exponents([(2, 0), (5, 1), (5, 2)]),
            Monomial::var_pow(5, 3)
        );
    }

    fn mono_strategy(vars: u32) -> impl Strategy<Value = Monomial> {
        prop::collection::vec((0..vars, 0u32..4), 0..5).prop_map(Monomial::from_exponents)
    }

    proptest! {
        #[test]
        fn total_order_matches_oracle(a in mono_strategy(16), b in mono_strategy(16)) {
            let ring = SubsetRing::new(4).unwrap();
            prop_assert_eq!(a.cmp(&b), grevlex_oracle(&ring.dense_exponents(&a), &ring.dense_exponents(&b)));
            prop_assert_eq!(a.cmp(&b), b.cmp(&a).reverse());
        }

        #[test]
        fn transitive(a in mono_strategy(8), b in mono_strategy(8), c in mono_strategy(8)) {
            let mut v = [a, b, c];
            v.sort();
            prop_assert!(v[0] <= v[2]);
        }

        #[test]
        fn multiplicative_with_one_minimal(a in mono_strategy(16), b in mono_strategy(16), c in mono_strategy(16)) {
            prop_assert_eq!(a.cmp(&b), a.mul(&c).cmp(&b.mul(&c)));
            prop_assert!(Monomial::one() <= a);
        }

        #[test]
        fn bidegree_additive(a in mono_strategy(16), b in mono_strategy(16)) {
            let ring = SubsetRing::new(4).unwrap();
            prop_assert_eq!(ring.bidegree(&a.mul(&b)), ring.bidegree(&a) + ring.bidegree(&b));
        }

        #[test]
        fn lcm_and_div(a in mono_strategy(70), b in mono_strategy(70)) {
            let l = a.lcm(&b);
            prop_assert!(a.divides(&l) && b.divides(&l));
            prop_assert_eq!(l.div(&a).unwrap().mul(&a), l.clone());
            prop_assert_eq!(a.is_coprime(&b), l == a.mul(&b));
        }
    }
}
