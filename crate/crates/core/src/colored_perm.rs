//! The colored permutation groups `Z_r wr S_n`.
//!
//! An element is stored in window notation: position `i` holds the letter
//! `pi(i)^c_i`, where the color `c_i` is the exponent of the root of unity
//! attached to that position. All arithmetic on colors is additive mod `r`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};

/// Default cap on the number of elements any enumeration will produce.
pub const DEFAULT_ENUMERATION_LIMIT: u128 = 10_000_000;

/// A plain permutation of `{1, ..., n}` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        if n == 0 {
            return Err(Error::InvalidParameter("permutation of length 0".into()));
        }
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidParameter(format!(
                    "{values:?} is not a permutation of 1..={n}"
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation(values))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    /// All of `S_n` in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        (1..=n).permutations(n).map(Permutation)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `pi(i)` for 1-based `i`.
    pub fn at(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation(inv)
    }

    /// `(self o inner)(i) = self(inner(i))`.
    pub fn compose(&self, inner: &Permutation) -> Permutation {
        Permutation(inner.0.iter().map(|&j| self.at(j)).collect())
    }

    pub fn descent_set(&self) -> Vec<usize> {
        (1..self.len())
            .filter(|&i| self.at(i) > self.at(i + 1))
            .collect()
    }

    pub fn des(&self) -> usize {
        self.descent_set().len()
    }

    pub fn major(&self) -> usize {
        self.descent_set().iter().sum()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| v == i + 1)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 9 {
            for v in &self.0 {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            write!(f, "{}", self.0.iter().join(","))
        }
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts `421536` (single digits) or a comma separated list.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let values: Option<Vec<usize>> = if s.contains(',') {
            s.split(',').map(|t| t.trim().parse().ok()).collect()
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize))
                .collect()
        };
        let values = values.ok_or_else(|| Error::Parse(format!("bad permutation `{s}`")))?;
        Permutation::new(values)
    }
}

/// A letter `value^color` of the alphabet `{w^0, ..., w^(r-1)} x [n]`.
///
/// The derived order is the colored total order: a letter with a higher
/// color is smaller, and equal colors compare by value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ColoredLetter {
    pub value: usize,
    pub color: u32,
}

impl ColoredLetter {
    pub fn new(value: usize, color: u32) -> Self {
        ColoredLetter { value, color }
    }
}

impl Ord for ColoredLetter {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .color
            .cmp(&self.color)
            .then_with(|| self.value.cmp(&other.value))
    }
}

impl PartialOrd for ColoredLetter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ColoredLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.value, self.color)
    }
}

pub fn letter_cmp(a: ColoredLetter, b: ColoredLetter) -> Ordering {
    a.cmp(&b)
}

/// An element `(pi, epsilon)` of `Z_r wr S_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ColoredPermutation {
    r: u32,
    window: Vec<ColoredLetter>,
}

impl ColoredPermutation {
    pub fn new(r: u32, window: Vec<ColoredLetter>) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidParameter(
                "color modulus r must be at least 1".into(),
            ));
        }
        if let Some(l) = window.iter().find(|l| l.color >= r) {
            return Err(Error::InvalidParameter(format!(
                "color {} of letter {} is not below r = {r}",
                l.color, l.value
            )));
        }
        Permutation::new(window.iter().map(|l| l.value).collect())?;
        Ok(ColoredPermutation { r, window })
    }

    pub fn from_parts(r: u32, values: &[usize], colors: &[u32]) -> Result<Self> {
        if values.len() != colors.len() {
            return Err(Error::Dimension(format!(
                "{} values but {} colors",
                values.len(),
                colors.len()
            )));
        }
        let window = values
            .iter()
            .zip(colors)
            .map(|(&value, &color)| ColoredLetter { value, color })
            .collect();
        Self::new(r, window)
    }

    pub fn identity(r: u32, n: usize) -> Self {
        ColoredPermutation {
            r,
            window: (1..=n).map(|v| ColoredLetter::new(v, 0)).collect(),
        }
    }

    /// The element `(sigma, (1, ..., 1))`.
    pub fn uncolored(r: u32, sigma: &Permutation) -> Self {
        ColoredPermutation {
            r,
            window: sigma
                .values()
                .iter()
                .map(|&v| ColoredLetter::new(v, 0))
                .collect(),
        }
    }

    /// Parses window notation such as `[2^1 6^3 4^3 1^0 5^2 3^0]`.
    pub fn parse(s: &str, r: u32) -> Result<Self> {
        let s = s.trim();
        let inner = s
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("window `{s}` must be bracketed")))?;
        let window = inner
            .split_whitespace()
            .map(|tok| {
                let (v, c) = tok
                    .split_once('^')
                    .ok_or_else(|| Error::Parse(format!("letter `{tok}` lacks `^color`")))?;
                let value = v
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad value in `{tok}`")))?;
                let color = c
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad color in `{tok}`")))?;
                Ok(ColoredLetter { value, color })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(r, window)
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn n(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[ColoredLetter] {
        &self.window
    }

    /// The letter at 1-based position `i`.
    pub fn letter(&self, i: usize) -> ColoredLetter {
        self.window[i - 1]
    }

    pub fn permutation(&self) -> Permutation {
        Permutation(self.window.iter().map(|l| l.value).collect())
    }

    pub fn colors(&self) -> Vec<u32> {
        self.window.iter().map(|l| l.color).collect()
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.r != other.r || self.n() != other.n() {
            return Err(Error::Dimension(format!(
                "cannot compose elements of Z_{} wr S_{} and Z_{} wr S_{}",
                self.r,
                self.n(),
                other.r,
                other.n()
            )));
        }
        Ok(())
    }

    /// `self o inner`: position `i` holds `self.pi(inner.pi(i))` with color
    /// `inner.c_i + self.c_(inner.pi(i))`.
    pub fn compose(&self, inner: &ColoredPermutation) -> Result<ColoredPermutation> {
        self.check_compatible(inner)?;
        let window = inner
            .window
            .iter()
            .map(|l| {
                let outer = self.letter(l.value);
                ColoredLetter::new(outer.value, (l.color + outer.color) % self.r)
            })
            .collect();
        Ok(ColoredPermutation { r: self.r, window })
    }

    /// Position `pi(i)` of the inverse holds `i^(-c_i mod r)`.
    pub fn inverse(&self) -> ColoredPermutation {
        let mut window = vec![ColoredLetter::new(0, 0); self.n()];
        for (i, l) in self.window.iter().enumerate() {
            window[l.value - 1] = ColoredLetter::new(i + 1, (self.r - l.color) % self.r);
        }
        ColoredPermutation { r: self.r, window }
    }

    /// Type-A descent set: positions `i` with `letter(i) > letter(i+1)`.
    pub fn des_a_set(&self) -> Vec<usize> {
        self.window
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn des_a(&self) -> usize {
        self.des_a_set().len()
    }

    pub fn major_a(&self) -> usize {
        self.des_a_set().iter().sum()
    }

    pub fn is_increasing(&self) -> bool {
        self.des_a() == 0
    }

    /// Multiset with each position `i` repeated `c_i` times.
    pub fn nneg(&self) -> Vec<usize> {
        self.window
            .iter()
            .enumerate()
            .flat_map(|(i, l)| std::iter::repeat_n(i + 1, l.color as usize))
            .collect()
    }

    /// Negative descent multiset: `Des_A(g)` disjoint-union `NNeg(g^-1)`.
    pub fn ndes_multiset(&self) -> Vec<usize> {
        let mut all = self.des_a_set();
        all.extend(self.inverse().nneg());
        all.sort_unstable();
        all
    }

    pub fn ndes(&self) -> usize {
        self.ndes_multiset().len()
    }

    pub fn nmajor(&self) -> usize {
        self.ndes_multiset().iter().sum()
    }

    /// Splits `g = (rho, delta) o sigma` with `(rho, delta)` increasing.
    pub fn decompose(&self) -> SigmaXPair {
        let mut sorted = self.window.clone();
        sorted.sort();
        let sigma = self
            .window
            .iter()
            .map(|l| sorted.iter().position(|s| s == l).expect("letter present") + 1)
            .collect();
        SigmaXPair {
            sigma: Permutation(sigma),
            x: self.inverse().nneg(),
        }
    }

    /// Inverse of [`decompose`](Self::decompose).
    pub fn recompose(pair: &SigmaXPair, r: u32) -> Result<ColoredPermutation> {
        let increasing = increasing_element(&pair.x, r, pair.sigma.len())?;
        increasing.compose(&ColoredPermutation::uncolored(r, &pair.sigma))
    }
}

impl fmt::Display for ColoredPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.window.iter().join(" "))
    }
}

/// The unique increasing element whose inverse has negative multiset `x`.
///
/// Letter `j` gets color `-m_j mod r` where `m_j` is its multiplicity in `x`;
/// the window lists the letters in increasing colored order.
pub fn increasing_element(x: &[usize], r: u32, n: usize) -> Result<ColoredPermutation> {
    if r == 0 {
        return Err(Error::InvalidParameter(
            "color modulus r must be at least 1".into(),
        ));
    }
    let mult = multiplicities(x, r, n)?;
    let mut window: Vec<ColoredLetter> = (1..=n)
        .map(|j| ColoredLetter::new(j, (r - mult[j - 1] as u32 % r) % r))
        .collect();
    window.sort();
    Ok(ColoredPermutation { r, window })
}

/// Multiplicity of every `j` in `1..=n`, rejecting counts of `r` or more.
pub(crate) fn multiplicities(x: &[usize], r: u32, n: usize) -> Result<Vec<usize>> {
    let mut mult = vec![0usize; n];
    for &j in x {
        if j == 0 || j > n {
            return Err(Error::InvalidParameter(format!(
                "multiset element {j} outside 1..={n}"
            )));
        }
        mult[j - 1] += 1;
    }
    if let Some((j, &m)) = mult.iter().enumerate().find(|(_, &m)| m >= r as usize) {
        return Err(Error::InvalidMultiset {
            element: j + 1,
            multiplicity: m,
            max: r as usize - 1,
        });
    }
    Ok(mult)
}

/// The `(sigma, X)` coordinates of a colored permutation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SigmaXPair {
    pub sigma: Permutation,
    /// Nondecreasing.
    pub x: Vec<usize>,
}

impl SigmaXPair {
    pub fn new(sigma: Permutation, mut x: Vec<usize>) -> Self {
        x.sort_unstable();
        SigmaXPair { sigma, x }
    }

    pub fn validate(&self, r: u32) -> Result<()> {
        multiplicities(&self.x, r, self.sigma.len()).map(|_| ())
    }
}

impl fmt::Display for SigmaXPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {{{}}})", self.sigma, self.x.iter().join(","))
    }
}

/// `r^n * n!`, or `None` on overflow.
pub fn group_order(r: u32, n: usize) -> Option<u128> {
    let mut total: u128 = 1;
    for k in 1..=n as u128 {
        total = total.checked_mul(k)?.checked_mul(r as u128)?;
    }
    Some(total)
}

fn check_limit(r: u32, n: usize, limit: u128) -> Result<()> {
    if r == 0 || n == 0 {
        return Err(Error::InvalidParameter(format!(
            "need r >= 1 and n >= 1, got r={r}, n={n}"
        )));
    }
    match group_order(r, n) {
        Some(count) if count <= limit => Ok(()),
        Some(count) => Err(Error::SizeLimit {
            requested: count,
            limit,
        }),
        None => Err(Error::SizeLimit {
            requested: u128::MAX,
            limit,
        }),
    }
}

/// Every element of `Z_r wr S_n` exactly once: permutations in lexicographic
/// order, colors as a base-`r` odometer with the last position fastest.
pub fn enumerate_group(
    r: u32,
    n: usize,
    limit: u128,
) -> Result<impl Iterator<Item = ColoredPermutation>> {
    check_limit(r, n, limit)?;
    let colorings = (r as u128).pow(n as u32);
    Ok(Permutation::all(n).flat_map(move |p| {
        (0..colorings).map(move |mut code| {
            let mut colors = vec![0u32; n];
            for c in colors.iter_mut().rev() {
                *c = (code % r as u128) as u32;
                code /= r as u128;
            }
            ColoredPermutation {
                r,
                window: p
                    .values()
                    .iter()
                    .zip(colors)
                    .map(|(&value, color)| ColoredLetter { value, color })
                    .collect(),
            }
        })
    }))
}

/// Every `(sigma, X)` with multiplicities below `r`.
pub fn enumerate_pairs(r: u32, n: usize, limit: u128) -> Result<impl Iterator<Item = SigmaXPair>> {
    check_limit(r, n, limit)?;
    let colorings = (r as u128).pow(n as u32);
    Ok(Permutation::all(n).flat_map(move |sigma| {
        (0..colorings).map(move |mut code| {
            let mut x = Vec::new();
            for j in 1..=n {
                let m = (code % r as u128) as usize;
                code /= r as u128;
                x.extend(std::iter::repeat_n(j, m));
            }
            SigmaXPair {
                sigma: sigma.clone(),
                x,
            }
        })
    }))
}
