//! Sparse graded polynomials with exact rational coefficients.
//!
//! Variables are `β` (degree -1), `ξ` (degree 1) and free class symbols
//! `c_k(i)`, `e_k(i)` (degree `k`). `c_0(i)` is the unit and is never stored.
//! Terms are kept in a `BTreeMap`, so iteration and serialization order is
//! canonical.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Renders a rational as `"num/den"`, always with an explicit denominator.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `"num/den"` or a bare integer.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            (!d.is_zero()).then(|| Rational::new(n, d))
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

pub fn factorial(n: u32) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// K-theoretic Chern class.
    C,
    /// Specialized Euler class.
    E,
}

impl Family {
    pub fn tag(self) -> &'static str {
        match self {
            Family::C => "c",
            Family::E => "e",
        }
    }
}

/// `c_index(slot)` or `e_index(slot)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassSymbol {
    pub family: Family,
    pub slot: u32,
    pub index: u32,
}

impl fmt::Display for ClassSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}({})", self.family.tag(), self.index, self.slot)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    beta: u32,
    xi: u32,
    /// Sorted multiset.
    classes: Vec<ClassSymbol>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn new(beta: u32, xi: u32, mut classes: Vec<ClassSymbol>) -> Self {
        classes.retain(|s| !(s.family == Family::C && s.index == 0));
        classes.sort();
        Monomial { beta, xi, classes }
    }

    pub fn beta_pow(&self) -> u32 {
        self.beta
    }

    pub fn xi_pow(&self) -> u32 {
        self.xi
    }

    pub fn classes(&self) -> &[ClassSymbol] {
        &self.classes
    }

    pub fn degree(&self) -> i64 {
        i64::from(self.xi) + self.classes.iter().map(|s| i64::from(s.index)).sum::<i64>()
            - i64::from(self.beta)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut classes = Vec::with_capacity(self.classes.len() + other.classes.len());
        classes.extend_from_slice(&self.classes);
        classes.extend_from_slice(&other.classes);
        classes.sort();
        Monomial {
            beta: self.beta + other.beta,
            xi: self.xi + other.xi,
            classes,
        }
    }

    fn max_class_index(&self) -> u32 {
        self.classes.iter().map(|s| s.index).max().unwrap_or(0)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut factors = Vec::new();
        match self.beta {
            0 => {}
            1 => factors.push("β".to_string()),
            k => factors.push(format!("β^{k}")),
        }
        match self.xi {
            0 => {}
            1 => factors.push("ξ".to_string()),
            k => factors.push(format!("ξ^{k}")),
        }
        factors.extend(self.classes.iter().map(ClassSymbol::to_string));
        if factors.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&factors.join("·"))
        }
    }
}

/// How `β` is treated by [`GradedPolynomial::specialize_prym`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BetaMode {
    /// Leave `β` symbolic.
    #[serde(alias = "keep")]
    Symbolic,
    /// Chow ring.
    #[default]
    Zero,
    /// Grothendieck ring.
    #[serde(alias = "minus-one")]
    MinusOne,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct GradedPolynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl GradedPolynomial {
    pub fn constant(c: Rational) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        GradedPolynomial { terms }
    }

    pub fn beta() -> Self {
        Self::term(Monomial::new(1, 0, Vec::new()), Rational::one())
    }

    pub fn xi() -> Self {
        Self::term(Monomial::new(0, 1, Vec::new()), Rational::one())
    }

    pub fn symbol(family: Family, slot: u32, index: u32) -> Self {
        let sym = ClassSymbol {
            family,
            slot,
            index,
        };
        Self::term(Monomial::new(0, 0, vec![sym]), Rational::one())
    }

    pub fn c(slot: u32, index: u32) -> Self {
        Self::symbol(Family::C, slot, index)
    }

    pub fn e(slot: u32, index: u32) -> Self {
        Self::symbol(Family::E, slot, index)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        GradedPolynomial {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// Product that discards every term with `β`-power above `max_beta`.
    pub fn mul_truncated(&self, other: &Self, max_beta: u32) -> Self {
        let mut out = Self::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if ma.beta + mb.beta > max_beta {
                    continue;
                }
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    /// Set of degrees of the stored terms.
    pub fn degrees(&self) -> Vec<i64> {
        let mut d: Vec<i64> = self.terms.keys().map(Monomial::degree).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    pub fn is_homogeneous_of(&self, degree: i64) -> bool {
        self.terms.keys().all(|m| m.degree() == degree)
    }

    pub fn max_beta_pow(&self) -> u32 {
        self.terms.keys().map(|m| m.beta).max().unwrap_or(0)
    }

    pub fn truncate(&self, max_xi: u32, max_beta: u32, max_class_index: u32) -> Self {
        GradedPolynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| {
                    m.xi <= max_xi && m.beta <= max_beta && m.max_class_index() <= max_class_index
                })
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Prym specialization: `e_k(i) ↦ 0`, `c_k(i) ↦ (2ξ)^k / k!`, drop `ξ^{>g-1}`,
    /// then substitute `β` according to `mode`.
    pub fn specialize_prym(&self, g: u32, mode: BetaMode) -> Self {
        let max_xi = g.saturating_sub(1);
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            if m.classes.iter().any(|s| s.family == Family::E) {
                continue;
            }
            let class_deg: u32 = m.classes.iter().map(|s| s.index).sum();
            let xi = m.xi + class_deg;
            if xi > max_xi {
                continue;
            }
            let mut coef = c.clone();
            for s in &m.classes {
                coef *= Rational::new(
                    BigInt::from(BigUint::from(2u32).pow(s.index)),
                    BigInt::from(factorial(s.index)),
                );
            }
            let beta = match mode {
                BetaMode::Symbolic => m.beta,
                BetaMode::Zero if m.beta > 0 => continue,
                BetaMode::Zero => 0,
                BetaMode::MinusOne => {
                    if m.beta % 2 == 1 {
                        coef = -coef;
                    }
                    0
                }
            };
            out.add_term(Monomial::new(beta, xi, Vec::new()), coef);
        }
        out
    }

    /// Splits a single-term polynomial `c·ξ^s` into `(c, s)`; zero gives `None`.
    pub fn as_xi_monomial(&self) -> Option<(Rational, u32)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.terms.iter().next()?;
        (m.beta == 0 && m.classes.is_empty()).then(|| (c.clone(), m.xi))
    }
}

impl fmt::Display for GradedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if i > 0 {
                write!(f, " {sign} ")?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            let abs = c.abs();
            if m.classes.is_empty() && m.beta == 0 && m.xi == 0 {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}·{m}")?;
            }
        }
        Ok(())
    }
}

impl Zero for GradedPolynomial {
    fn zero() -> Self {
        GradedPolynomial::default()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for GradedPolynomial {
    fn one() -> Self {
        GradedPolynomial::constant(Rational::one())
    }
}

impl AddAssign<&GradedPolynomial> for GradedPolynomial {
    fn add_assign(&mut self, rhs: &GradedPolynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl Add<&GradedPolynomial> for &GradedPolynomial {
    type Output = GradedPolynomial;

    fn add(self, rhs: &GradedPolynomial) -> GradedPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for GradedPolynomial {
    type Output = GradedPolynomial;

    fn add(mut self, rhs: GradedPolynomial) -> GradedPolynomial {
        self += &rhs;
        self
    }
}

impl Neg for &GradedPolynomial {
    type Output = GradedPolynomial;

    fn neg(self) -> GradedPolynomial {
        GradedPolynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for GradedPolynomial {
    type Output = GradedPolynomial;

    fn neg(self) -> GradedPolynomial {
        -&self
    }
}

impl Sub<&GradedPolynomial> for &GradedPolynomial {
    type Output = GradedPolynomial;

    fn sub(self, rhs: &GradedPolynomial) -> GradedPolynomial {
        self + &(-rhs)
    }
}

impl Sub for GradedPolynomial {
    type Output = GradedPolynomial;

    fn sub(self, rhs: GradedPolynomial) -> GradedPolynomial {
        &self - &rhs
    }
}

impl Mul<&GradedPolynomial> for &GradedPolynomial {
    type Output = GradedPolynomial;

    fn mul(self, rhs: &GradedPolynomial) -> GradedPolynomial {
        self.mul_truncated(rhs, u32::MAX)
    }
}

impl Mul for GradedPolynomial {
    type Output = GradedPolynomial;

    fn mul(self, rhs: GradedPolynomial) -> GradedPolynomial {
        &self * &rhs
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    beta: u32,
    xi: u32,
    classes: Vec<(String, u32, u32)>,
    coef: String,
}

impl Serialize for GradedPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<TermJson> = self
            .terms
            .iter()
            .map(|(m, c)| TermJson {
                beta: m.beta,
                xi: m.xi,
                classes: m
                    .classes
                    .iter()
                    .map(|s| (s.family.tag().to_string(), s.slot, s.index))
                    .collect(),
                coef: format_rational(c),
            })
            .collect();
        terms.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for GradedPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<TermJson>::deserialize(deserializer)?;
        let mut out = GradedPolynomial::zero();
        for t in terms {
            let mut classes = Vec::with_capacity(t.classes.len());
            for (tag, slot, index) in t.classes {
                let family = match tag.as_str() {
                    "c" => Family::C,
                    "e" => Family::E,
                    other => {
                        return Err(D::Error::custom(format!("unknown class family {other:?}")))
                    }
                };
                classes.push(ClassSymbol {
                    family,
                    slot,
                    index,
                });
            }
            let coef = parse_rational(&t.coef)
                .ok_or_else(|| D::Error::custom(format!("bad rational {:?}", t.coef)))?;
            out.add_term(Monomial::new(t.beta, t.xi, classes), coef);
        }
        Ok(out)
    }
}

/// Pfaffian by first-row expansion, memoized on the set of remaining indices.
pub fn pfaffian<T>(m: &[Vec<T>]) -> Result<T>
where
    T: Clone + Zero + One + PartialEq + Neg<Output = T>,
    for<'a> &'a T: Mul<&'a T, Output = T>,
{
    pfaffian_with(m, |a, b| a * b)
}

/// As [`pfaffian`], with a caller-supplied product (e.g. a truncating one).
pub fn pfaffian_with<T, F>(m: &[Vec<T>], mul: F) -> Result<T>
where
    T: Clone + Zero + One + PartialEq + Neg<Output = T>,
    F: Fn(&T, &T) -> T,
{
    let size = m.len();
    if let Some(row) = m.iter().find(|row| row.len() != size) {
        return Err(Error::OddSize {
            rows: size,
            cols: row.len(),
        });
    }
    if size % 2 == 1 {
        return Err(Error::OddSize {
            rows: size,
            cols: size,
        });
    }
    if size > 64 {
        return Err(Error::Resource {
            what: "matrix size",
            value: size,
            limit: 64,
        });
    }
    for i in 0..size {
        if !m[i][i].is_zero() {
            return Err(Error::NotSkewSymmetric { row: i, col: i });
        }
        for j in i + 1..size {
            if m[i][j] != -m[j][i].clone() {
                return Err(Error::NotSkewSymmetric { row: i, col: j });
            }
        }
    }
    let full = if size == 64 {
        u64::MAX
    } else {
        (1u64 << size) - 1
    };
    let mut memo = HashMap::new();
    Ok(pf_rec(m, full, &mul, &mut memo))
}

fn pf_rec<T, F>(m: &[Vec<T>], set: u64, mul: &F, memo: &mut HashMap<u64, T>) -> T
where
    T: Clone + Zero + One + Neg<Output = T>,
    F: Fn(&T, &T) -> T,
{
    if set == 0 {
        return T::one();
    }
    if let Some(v) = memo.get(&set) {
        return v.clone();
    }
    let first = set.trailing_zeros() as usize;
    let rest = set & !(1u64 << first);
    let mut total = T::zero();
    let mut positive = true;
    let mut bits = rest;
    while bits != 0 {
        let j = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let entry = &m[first][j];
        if !entry.is_zero() {
            let minor = pf_rec(m, rest & !(1u64 << j), mul, memo);
            let term = mul(entry, &minor);
            total = if positive {
                total + term
            } else {
                total + (-term)
            };
        }
        positive = !positive;
    }
    memo.insert(set, total.clone());
    total
}
