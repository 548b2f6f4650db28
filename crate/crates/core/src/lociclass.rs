//! Connective K-theory class of a two-pointed Prym–Brill–Noether locus as a
//! Pfaffian of raising-operator expressions, its Chow specialization, and
//! the closed product formula and point count it must agree with.
//!
//! Operator conventions: `R_ij` maps the index pair `(p, q)` to
//! `(p + 1, q - 1)`; `T_i` and `T̃_i` raise the index on their own slot by 1.
//! All of them act as commuting shifts on the seed, every `T` carries one
//! factor of `β`, and a symbol whose final index is negative vanishes. The
//! `β`-series are cut at `max_beta_pow`.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::{
    factorial, format_rational, pfaffian_with, BetaMode, ClassSymbol, Family, GradedPolynomial,
    Monomial, Rational,
};
use crate::sequences::{partition_of, StrictPartition, Triple};
use crate::tableaux::{count_syt_enum, ShiftedShape};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct PfaffianOptions {
    pub max_beta_pow: u32,
    /// Defaults to `|λ| + max_beta_pow + 2`.
    pub max_class_index: Option<u32>,
    /// `δ_i` per slot; missing slots are `+1`.
    pub delta: BTreeMap<u32, i8>,
    /// Multiply the Euler term of the augmented row by `(-1)^ℓ`.
    pub augmented_euler_sign: bool,
}

impl Default for PfaffianOptions {
    fn default() -> Self {
        PfaffianOptions {
            max_beta_pow: 4,
            max_class_index: None,
            delta: BTreeMap::new(),
            augmented_euler_sign: false,
        }
    }
}

impl PfaffianOptions {
    pub fn chow() -> Self {
        PfaffianOptions {
            max_beta_pow: 0,
            ..Default::default()
        }
    }

    fn delta_of(&self, slot: u32) -> i64 {
        match self.delta.get(&slot) {
            Some(&d) if d < 0 => -1,
            _ => 1,
        }
    }

    pub fn class_index_bound(&self, lambda: &StrictPartition) -> u32 {
        self.max_class_index
            .unwrap_or(lambda.weight() + self.max_beta_pow + 2)
    }
}

/// `coefficient · β^beta_pow · X_{p}(slot_i) · Y_{q}(slot_j)`, with `X`, `Y`
/// each a `c` or `e` symbol.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilinearAtom {
    pub slot_i: u32,
    pub slot_j: u32,
    pub family_i: Family,
    pub family_j: Family,
    pub p_index: i64,
    pub q_index: i64,
    pub beta_pow: u32,
    pub coefficient: Rational,
}

type AtomKey = (Family, Family, i64, i64, u32);

/// Sum of atoms on a fixed pair of slots.
#[derive(Debug, Clone)]
struct AtomSum {
    slot_i: u32,
    slot_j: u32,
    atoms: BTreeMap<AtomKey, Rational>,
}

#[derive(Clone, Copy)]
enum Side {
    I,
    J,
}

impl AtomSum {
    fn new(slot_i: u32, slot_j: u32) -> Self {
        AtomSum {
            slot_i,
            slot_j,
            atoms: BTreeMap::new(),
        }
    }

    fn push(&mut self, key: AtomKey, c: Rational) {
        let (_, _, p, q, _) = key;
        if p < 0 || q < 0 || c.is_zero() {
            return;
        }
        let slot = self.atoms.entry(key).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.atoms.remove(&key);
        }
    }

    /// Applies `Σ_k coeffs[k] (β S)^k` where `S` raises the index on `side`.
    fn apply_raising_series(&self, side: Side, coeffs: &[Rational], max_beta: u32) -> Self {
        let mut out = AtomSum::new(self.slot_i, self.slot_j);
        for (&(fi, fj, p, q, beta), c) in &self.atoms {
            for (k, fk) in coeffs.iter().enumerate() {
                let k32 = k as u32;
                if beta + k32 > max_beta {
                    break;
                }
                let (np, nq) = match side {
                    Side::I => (p + k as i64, q),
                    Side::J => (p, q + k as i64),
                };
                out.push((fi, fj, np, nq, beta + k32), c * fk);
            }
        }
        out
    }

    /// Applies `(1 - δR)(1 + δ(R - βT_i))^{-1}`.
    fn apply_pair_operator(&self, delta: i64, max_beta: u32) -> Self {
        let mut out = AtomSum::new(self.slot_i, self.slot_j);
        for (&(fi, fj, p, q, beta), c) in &self.atoms {
            let max_b = (max_beta - beta) as i64;
            for b in 0..=max_b {
                for a in 0..=q {
                    let coef = pair_operator_coefficient(delta, a, b);
                    if coef.is_zero() {
                        continue;
                    }
                    out.push((fi, fj, p + a + b, q - a, beta + b as u32), c * coef);
                }
            }
        }
        out
    }

    fn atoms(&self) -> impl Iterator<Item = BilinearAtom> + '_ {
        self.atoms
            .iter()
            .map(
                |(&(family_i, family_j, p_index, q_index, beta_pow), c)| BilinearAtom {
                    slot_i: self.slot_i,
                    slot_j: self.slot_j,
                    family_i,
                    family_j,
                    p_index,
                    q_index,
                    beta_pow,
                    coefficient: c.clone(),
                },
            )
    }

    fn to_polynomial(&self) -> GradedPolynomial {
        let mut out = GradedPolynomial::zero();
        for atom in self.atoms() {
            let classes = vec![
                ClassSymbol {
                    family: atom.family_i,
                    slot: atom.slot_i,
                    index: atom.p_index as u32,
                },
                ClassSymbol {
                    family: atom.family_j,
                    slot: atom.slot_j,
                    index: atom.q_index as u32,
                },
            ];
            out.add_term(Monomial::new(atom.beta_pow, 0, classes), atom.coefficient);
        }
        out
    }
}

fn binomial(n: i64, k: i64) -> BigInt {
    // generalized: n(n-1)...(n-k+1)/k!, valid for negative n
    let mut num = BigInt::one();
    for t in 0..k {
        num *= n - t;
    }
    num / BigInt::from(factorial(k as u32))
}

/// Coefficient of `R^a (βT)^b` in `(1 - δR) Σ_k (-δ)^k (R - βT)^k`.
fn pair_operator_coefficient(delta: i64, a: i64, b: i64) -> Rational {
    let h = |a: i64, b: i64| -> BigInt {
        if a < 0 {
            return BigInt::zero();
        }
        // (-δ)^{a+b} (-1)^b C(a+b, a) = (-δ)^a δ^b C(a+b, a)
        let sign = if (a % 2 == 1) ^ (delta < 0 && (a + b) % 2 == 1) {
            -1
        } else {
            1
        };
        binomial(a + b, a) * sign
    };
    Rational::from_integer(h(a, b) - h(a - 1, b) * delta)
}

/// Coefficients of `x^k`, `k <= max`, in `(1 - x)^exponent (2 - x)^{-1}`.
pub fn raising_series(exponent: i64, max: u32) -> Vec<Rational> {
    let half_powers: Vec<Rational> = (0..=max)
        .map(|b| Rational::new(BigInt::one(), BigInt::from(BigUint::from(2u32).pow(b + 1))))
        .collect();
    (0..=max as i64)
        .map(|k| {
            (0..=k)
                .map(|a| {
                    let mut c = binomial(exponent, a);
                    if a % 2 == 1 {
                        c = -c;
                    }
                    Rational::from_integer(c) * &half_powers[(k - a) as usize]
                })
                .fold(Rational::zero(), |acc, x| acc + x)
        })
        .collect()
}

fn part(lambda: &StrictPartition, slot: usize) -> i64 {
    i64::from(lambda.parts()[slot - 1])
}

fn series_exponent(lambda: &StrictPartition, slot: usize) -> i64 {
    lambda.len() as i64 - slot as i64 - part(lambda, slot) + 1
}

/// Off-diagonal Pfaffian entry `m_{i,j}` for `1 <= i < j <= ℓ`.
pub fn entry_m(
    i: usize,
    j: usize,
    lambda: &StrictPartition,
    opts: &PfaffianOptions,
) -> Result<GradedPolynomial> {
    let len = lambda.len();
    if i == 0 || i >= j || j > len {
        return Err(Error::Index { i, j, len });
    }
    let max_beta = opts.max_beta_pow;
    let eps = Rational::from_integer(if len.is_multiple_of(2) {
        1.into()
    } else {
        (-1).into()
    });
    let (li, lj) = (part(lambda, i), part(lambda, j));

    let mut seed = AtomSum::new(i as u32, j as u32);
    seed.push((Family::C, Family::C, li, lj, 0), Rational::one());
    seed.push((Family::C, Family::E, li, lj, 0), eps.clone());
    seed.push((Family::E, Family::C, li, lj, 0), -eps.clone());
    seed.push((Family::E, Family::E, li, lj, 0), -Rational::one());

    let fj = raising_series(series_exponent(lambda, j), max_beta);
    let fi = raising_series(series_exponent(lambda, i), max_beta);
    let delta = opts.delta_of(i as u32) * opts.delta_of(j as u32);
    let out = seed
        .apply_raising_series(Side::J, &fj, max_beta)
        .apply_raising_series(Side::I, &fi, max_beta)
        .apply_pair_operator(delta, max_beta);
    Ok(out
        .to_polynomial()
        .truncate(u32::MAX, max_beta, opts.class_index_bound(lambda)))
}

/// Augmented entry `m_{0,j}`, present only when `ℓ` is odd.
pub fn entry_m0(
    j: usize,
    lambda: &StrictPartition,
    opts: &PfaffianOptions,
) -> Result<GradedPolynomial> {
    let len = lambda.len();
    if len.is_multiple_of(2) {
        return Err(Error::Parity { len });
    }
    if j == 0 || j > len {
        return Err(Error::Index { i: 0, j, len });
    }
    let max_beta = opts.max_beta_pow;
    let lj = part(lambda, j);
    let euler_sign = if opts.augmented_euler_sign && len % 2 == 1 {
        -Rational::one()
    } else {
        Rational::one()
    };
    // c_0 on slot 0 is the unit, so the i side is inert.
    let mut seed = AtomSum::new(0, j as u32);
    seed.push((Family::C, Family::C, 0, lj, 0), Rational::one());
    seed.push((Family::C, Family::E, 0, lj, 0), euler_sign);
    let fj = raising_series(series_exponent(lambda, j), max_beta);
    Ok(seed
        .apply_raising_series(Side::J, &fj, max_beta)
        .to_polynomial()
        .truncate(u32::MAX, max_beta, opts.class_index_bound(lambda)))
}

/// The skew-symmetric matrix whose Pfaffian is the class; row/column 0 is
/// the augmentation when `ℓ` is odd.
pub fn class_matrix(
    lambda: &StrictPartition,
    opts: &PfaffianOptions,
) -> Result<Vec<Vec<GradedPolynomial>>> {
    let len = lambda.len();
    let augmented = len % 2 == 1;
    let size = if augmented { len + 1 } else { len };
    // position -> slot (0 for the augmented row)
    let slot_of = |pos: usize| if augmented { pos } else { pos + 1 };
    let mut m = vec![vec![GradedPolynomial::zero(); size]; size];
    for a in 0..size {
        for b in a + 1..size {
            let (i, j) = (slot_of(a), slot_of(b));
            let v = if i == 0 {
                entry_m0(j, lambda, opts)?
            } else {
                entry_m(i, j, lambda, opts)?
            };
            m[b][a] = -&v;
            m[a][b] = v;
        }
    }
    Ok(m)
}

pub fn ck_class_of_partition(
    lambda: &StrictPartition,
    opts: &PfaffianOptions,
) -> Result<GradedPolynomial> {
    if lambda.is_empty() {
        return Ok(GradedPolynomial::one());
    }
    let m = class_matrix(lambda, opts)?;
    let max_beta = opts.max_beta_pow;
    let pf = pfaffian_with(&m, |a, b| a.mul_truncated(b, max_beta))?;
    Ok(pf.truncate(u32::MAX, max_beta, opts.class_index_bound(lambda)))
}

/// Formal class in `β` and the `c`, `e` symbols.
pub fn ck_class(triple: &Triple, opts: &PfaffianOptions) -> Result<GradedPolynomial> {
    ck_class_of_partition(&partition_of(triple), opts)
}

/// `2^{|λ|-ℓ} ∏ 1/λ_i! ∏_{i<j} (λ_i - λ_j)/(λ_i + λ_j)`.
pub fn closed_form_coefficient(lambda: &StrictPartition) -> Rational {
    let parts = lambda.parts();
    let mut coef = Rational::one();
    for &x in parts {
        coef /= Rational::from_integer(BigInt::from(factorial(x)));
    }
    for (a, &x) in parts.iter().enumerate() {
        for &y in &parts[a + 1..] {
            coef *= Rational::new(BigInt::from(x - y), BigInt::from(x + y));
        }
    }
    let two_pow = lambda.weight() as usize - lambda.len();
    coef * Rational::from_integer(BigInt::one() << two_pow)
}

/// Chow class `Coeff · ξ^{|λ|}` from the closed product, as `(Coeff, |λ|)`.
pub fn cohomology_coefficient(triple: &Triple) -> (Rational, u32) {
    let lambda = partition_of(triple);
    (closed_form_coefficient(&lambda), lambda.weight())
}

pub fn cohomology_class_via_pfaffian_of_partition(
    lambda: &StrictPartition,
    g: u32,
) -> Result<(Rational, u32)> {
    let weight = lambda.weight();
    if g == 0 || g - 1 < weight {
        return Err(Error::Truncation { g, weight });
    }
    let class = ck_class_of_partition(lambda, &PfaffianOptions::chow())?;
    let special = class.specialize_prym(g, BetaMode::Zero);
    let top = Monomial::new(0, weight, Vec::new());
    Ok((special.coefficient(&top), weight))
}

/// Chow class obtained by specializing the Pfaffian at `β = 0`.
pub fn cohomology_class_via_pfaffian(triple: &Triple, g: u32) -> Result<(Rational, u32)> {
    cohomology_class_via_pfaffian_of_partition(&partition_of(triple), g)
}

fn to_integer(r: &Rational) -> Result<BigInt> {
    if !r.is_integer() {
        return Err(Error::Integrality(format_rational(r)));
    }
    Ok(r.to_integer())
}

pub fn degree_of_partition(lambda: &StrictPartition) -> Result<BigInt> {
    let d = closed_form_coefficient(lambda)
        * Rational::from_integer(BigInt::from(factorial(lambda.weight())));
    let d = to_integer(&d)?;
    if d.is_negative() {
        return Err(Error::Integrality(d.to_string()));
    }
    Ok(d)
}

/// Number of points when `g - 1 = |λ|`: `|λ|! · Coeff`.
pub fn degree(triple: &Triple, g: u32) -> Result<BigInt> {
    let lambda = partition_of(triple);
    let weight = lambda.weight();
    if g == 0 || g - 1 != weight {
        return Err(Error::Dimension { g, weight });
    }
    degree_of_partition(&lambda)
}

pub fn degree_via_syt_of_partition(lambda: &StrictPartition) -> Result<BigInt> {
    let count = count_syt_enum(&ShiftedShape::new(lambda.clone()))?;
    let two_pow = lambda.weight() as usize - lambda.len();
    Ok((BigInt::one() << two_pow) * count)
}

/// `2^{|λ|-ℓ}` times the number of standard shifted tableaux of shape `λ`.
pub fn degree_via_syt(triple: &Triple) -> Result<BigInt> {
    degree_via_syt_of_partition(&partition_of(triple))
}

/// A computed class: a single `coefficient · ξ^{xi_power}` or a polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassResult {
    Monomial {
        coefficient: Rational,
        xi_power: u32,
    },
    Polynomial(GradedPolynomial),
}

impl Serialize for ClassResult {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = serializer.serialize_map(Some(2))?;
        match self {
            ClassResult::Monomial {
                coefficient,
                xi_power,
            } => {
                map.serialize_entry("coefficient", &format_rational(coefficient))?;
                map.serialize_entry("xi_power", xi_power)?;
            }
            ClassResult::Polynomial(p) => {
                map.serialize_entry("polynomial", p)?;
            }
        }
        map.end()
    }
}

/// Class in the requested ring.
///
/// `Zero` gives the Chow class through the `β = 0` Pfaffian; `MinusOne`
/// and `Symbolic` give the Prym-specialized connective K-theory class with
/// `β = -1` or left formal.
pub fn compute_class(
    triple: &Triple,
    g: u32,
    mode: BetaMode,
    opts: &PfaffianOptions,
) -> Result<ClassResult> {
    match mode {
        BetaMode::Zero => {
            let (coefficient, xi_power) = cohomology_class_via_pfaffian(triple, g)?;
            Ok(ClassResult::Monomial {
                coefficient,
                xi_power,
            })
        }
        BetaMode::MinusOne | BetaMode::Symbolic => {
            let lambda = partition_of(triple);
            if g == 0 || g - 1 < lambda.weight() {
                return Err(Error::Truncation {
                    g,
                    weight: lambda.weight(),
                });
            }
            let class = ck_class_of_partition(&lambda, opts)?;
            Ok(ClassResult::Polynomial(class.specialize_prym(g, mode)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lam(parts: &[u32]) -> StrictPartition {
        StrictPartition::new(parts.to_vec()).unwrap()
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn zero_euler(p: &GradedPolynomial) -> GradedPolynomial {
        let mut out = GradedPolynomial::zero();
        for (m, c) in p.terms() {
            if m.classes().iter().all(|s| s.family == Family::C) {
                out.add_term(m.clone(), c.clone());
            }
        }
        out
    }

    fn c(slot: u32, k: u32) -> GradedPolynomial {
        GradedPolynomial::c(slot, k)
    }

    #[test]
    fn raising_series_known_values() {
        // (1-x)^0/(2-x) = 1/2 + x/4 + x^2/8
        assert_eq!(raising_series(0, 2), vec![q(1, 2), q(1, 4), q(1, 8)]);
        // (1-x)^1/(2-x) = 1/2 - x/4 - x^2/8
        assert_eq!(raising_series(1, 2), vec![q(1, 2), q(-1, 4), q(-1, 8)]);
        // (1-x)^{-1}/(2-x) = 1/2 + 3x/4 + 7x^2/8
        assert_eq!(raising_series(-1, 2), vec![q(1, 2), q(3, 4), q(7, 8)]);
    }

    #[test]
    fn pair_operator_at_beta_zero() {
        // (1-R)/(1+R) = 1 + 2 Σ (-1)^k R^k
        assert_eq!(pair_operator_coefficient(1, 0, 0), q(1, 1));
        for a in 1..6 {
            let expect = if a % 2 == 0 { 2 } else { -2 };
            assert_eq!(pair_operator_coefficient(1, a, 0), q(expect, 1));
        }
        // (1+R)/(1-R) = 1 + 2 Σ R^k
        for a in 1..6 {
            assert_eq!(pair_operator_coefficient(-1, a, 0), q(2, 1));
        }
    }

    /// Coefficients of the pair operator checked against multiplying out the
    /// truncated power series directly.
    #[test]
    fn pair_operator_matches_series_product() {
        for delta in [1i64, -1] {
            let n = 6usize;
            // series[a][b] = coefficient of R^a X^b with X = βT
            let mut inv = vec![vec![BigInt::zero(); n]; n];
            // Σ_k (-δ)^k (R - X)^k via repeated multiplication
            let mut power = vec![vec![BigInt::zero(); n]; n];
            power[0][0] = BigInt::one();
            for _k in 0..n * 2 {
                for a in 0..n {
                    for b in 0..n {
                        inv[a][b] += &power[a][b];
                    }
                }
                let mut next = vec![vec![BigInt::zero(); n]; n];
                for a in 0..n {
                    for b in 0..n {
                        if power[a][b].is_zero() {
                            continue;
                        }
                        let v = &power[a][b] * (-delta);
                        if a + 1 < n {
                            next[a + 1][b] += &v;
                        }
                        if b + 1 < n {
                            next[a][b + 1] -= &v;
                        }
                    }
                }
                power = next;
            }
            for a in 0..n {
                for b in 0..n {
                    let mut g = inv[a][b].clone();
                    if a > 0 {
                        g -= &inv[a - 1][b] * delta;
                    }
                    assert_eq!(
                        pair_operator_coefficient(delta, a as i64, b as i64),
                        Rational::from_integer(g),
                        "delta {delta} a {a} b {b}"
                    );
                }
            }
        }
    }

    #[test]
    fn entry_m_two_rows_at_beta_zero() {
        let opts = PfaffianOptions::chow();
        let got = zero_euler(&entry_m(1, 2, &lam(&[2, 1]), &opts).unwrap());
        let expect = (&c(1, 2) * &c(2, 1)).scale(&q(1, 4)) - c(1, 3).scale(&q(1, 2));
        assert_eq!(got, expect);

        let (l1, l2) = (5u32, 3u32);
        let got = zero_euler(&entry_m(1, 2, &lam(&[l1, l2]), &opts).unwrap());
        let mut expect = &c(1, l1) * &c(2, l2);
        for k in 1..=l2 {
            let sign = if k % 2 == 0 { 2 } else { -2 };
            expect = expect + (&c(1, l1 + k) * &c(2, l2 - k)).scale(&q(sign, 1));
        }
        assert_eq!(got, expect.scale(&q(1, 4)));
    }

    #[test]
    fn entry_m_errors() {
        let opts = PfaffianOptions::default();
        assert!(matches!(
            entry_m(2, 1, &lam(&[2, 1]), &opts),
            Err(Error::Index { .. })
        ));
        assert!(matches!(
            entry_m(1, 3, &lam(&[2, 1]), &opts),
            Err(Error::Index { .. })
        ));
        assert!(matches!(
            entry_m0(1, &lam(&[2, 1]), &opts),
            Err(Error::Parity { len: 2 })
        ));
    }

    #[test]
    fn entry_m0_at_beta_zero() {
        let opts = PfaffianOptions::chow();
        assert_eq!(
            zero_euler(&entry_m0(1, &lam(&[1]), &opts).unwrap()),
            c(1, 1).scale(&q(1, 2))
        );
        assert_eq!(
            zero_euler(&entry_m0(3, &lam(&[4, 2, 1]), &opts).unwrap()),
            c(3, 1).scale(&q(1, 2))
        );
        let with_e = entry_m0(1, &lam(&[1]), &opts).unwrap();
        assert_eq!(
            with_e,
            (c(1, 1) + GradedPolynomial::e(1, 1)).scale(&q(1, 2))
        );
    }

    #[test]
    fn euler_signs_follow_parity() {
        let opts = PfaffianOptions::chow();
        // ℓ = 2: (c - e)(c + e) seed
        let m = entry_m(1, 2, &lam(&[3, 1]), &opts).unwrap();
        let sym = |f, slot, index| ClassSymbol {
            family: f,
            slot,
            index,
        };
        let ce = Monomial::new(0, 0, vec![sym(Family::C, 1, 3), sym(Family::E, 2, 1)]);
        let ec = Monomial::new(0, 0, vec![sym(Family::E, 1, 3), sym(Family::C, 2, 1)]);
        assert_eq!(m.coefficient(&ce), q(1, 4));
        assert_eq!(m.coefficient(&ec), q(-1, 4));

        let mut flagged = PfaffianOptions::chow();
        flagged.augmented_euler_sign = true;
        let m0 = entry_m0(1, &lam(&[1]), &flagged).unwrap();
        assert_eq!(m0, (c(1, 1) - GradedPolynomial::e(1, 1)).scale(&q(1, 2)));
    }

    #[test]
    fn ck_class_small() {
        let opts = PfaffianOptions::chow();
        assert_eq!(
            ck_class_of_partition(&lam(&[]), &opts).unwrap(),
            GradedPolynomial::one()
        );
        assert_eq!(
            zero_euler(&ck_class_of_partition(&lam(&[1]), &opts).unwrap()),
            c(1, 1).scale(&q(1, 2))
        );

        // λ = (2,1): 2x2 Pfaffian, just m_12
        let got = zero_euler(&ck_class_of_partition(&lam(&[2, 1]), &opts).unwrap());
        let expect = (&c(1, 2) * &c(2, 1)).scale(&q(1, 4)) - c(1, 3).scale(&q(1, 2));
        assert_eq!(got, expect);
    }

    #[test]
    fn ck_class_three_parts_assembles_augmented_pfaffian() {
        let opts = PfaffianOptions::chow();
        let l = lam(&[3, 2, 1]);
        let m01 = zero_euler(&entry_m0(1, &l, &opts).unwrap());
        let m02 = zero_euler(&entry_m0(2, &l, &opts).unwrap());
        let m03 = zero_euler(&entry_m0(3, &l, &opts).unwrap());
        let m12 = zero_euler(&entry_m(1, 2, &l, &opts).unwrap());
        let m13 = zero_euler(&entry_m(1, 3, &l, &opts).unwrap());
        let m23 = zero_euler(&entry_m(2, 3, &l, &opts).unwrap());
        let expect = &(&m01 * &m23) - &(&m02 * &m13) + &m03 * &m12;
        assert_eq!(
            zero_euler(&ck_class_of_partition(&l, &opts).unwrap()),
            expect
        );
    }

    #[test]
    fn closed_form_examples() {
        let t1 = Triple::new(vec![0, 0], vec![0, 1]).unwrap();
        assert_eq!(cohomology_coefficient(&t1), (q(1, 1), 1));
        let t21 = Triple::new(vec![1, 1], vec![0, 1]).unwrap();
        assert_eq!(cohomology_coefficient(&t21), (q(1, 3), 3));
        let empty = Triple::new(vec![], vec![]).unwrap();
        assert_eq!(cohomology_coefficient(&empty), (q(1, 1), 0));
    }

    #[test]
    fn pfaffian_route_examples() {
        let t1 = Triple::new(vec![0, 0], vec![0, 1]).unwrap();
        assert_eq!(cohomology_class_via_pfaffian(&t1, 2).unwrap(), (q(1, 1), 1));
        let t21 = Triple::new(vec![1, 1], vec![0, 1]).unwrap();
        assert_eq!(
            cohomology_class_via_pfaffian(&t21, 4).unwrap(),
            (q(1, 3), 3)
        );
        let empty = Triple::new(vec![], vec![]).unwrap();
        assert_eq!(
            cohomology_class_via_pfaffian(&empty, 7).unwrap(),
            (q(1, 1), 0)
        );
        assert!(matches!(
            cohomology_class_via_pfaffian(&t21, 3),
            Err(Error::Truncation { g: 3, weight: 3 })
        ));
    }

    #[test]
    fn degree_examples() {
        let t1 = Triple::new(vec![0, 0], vec![0, 1]).unwrap();
        assert_eq!(degree(&t1, 2).unwrap(), BigInt::from(1));
        let t21 = Triple::new(vec![1, 1], vec![0, 1]).unwrap();
        assert_eq!(degree(&t21, 4).unwrap(), BigInt::from(2));
        let t421 = Triple::from_partition(&lam(&[4, 2, 1]));
        assert_eq!(degree(&t421, 8).unwrap(), BigInt::from(112));
        assert!(matches!(degree(&t421, 9), Err(Error::Dimension { .. })));

        assert_eq!(degree_via_syt(&t421).unwrap(), BigInt::from(112));
        assert_eq!(degree_via_syt(&t1).unwrap(), BigInt::from(1));
        assert_eq!(degree_via_syt(&t21).unwrap(), BigInt::from(2));
    }

    #[test]
    fn ck_class_is_homogeneous() {
        let opts = PfaffianOptions {
            max_beta_pow: 3,
            ..Default::default()
        };
        for parts in [
            &[1][..],
            &[2, 1],
            &[3, 1],
            &[4, 2, 1],
            &[3, 2],
            &[5, 3, 2, 1],
        ] {
            let l = lam(parts);
            let class = ck_class_of_partition(&l, &opts).unwrap();
            assert!(class.is_homogeneous_of(i64::from(l.weight())), "{l}");
            assert!(class.max_beta_pow() <= 3);
            assert!(class.max_beta_pow() >= 1, "{l} should have β terms");
        }
    }

    #[test]
    fn beta_truncation_is_consistent() {
        // truncating a higher-order computation reproduces the lower-order one
        let l = lam(&[3, 2, 1]);
        let hi = ck_class_of_partition(
            &l,
            &PfaffianOptions {
                max_beta_pow: 3,
                ..Default::default()
            },
        )
        .unwrap();
        for k in 0..3 {
            let lo = ck_class_of_partition(
                &l,
                &PfaffianOptions {
                    max_beta_pow: k,
                    ..Default::default()
                },
            )
            .unwrap();
            assert_eq!(hi.truncate(u32::MAX, k, u32::MAX), lo);
        }
    }

    #[test]
    fn class_results_by_mode() {
        let t1 = Triple::new(vec![0, 0], vec![0, 1]).unwrap();
        let opts = PfaffianOptions::default();
        let zero = compute_class(&t1, 2, BetaMode::Zero, &opts).unwrap();
        assert_eq!(
            serde_json::to_string(&zero).unwrap(),
            r#"{"coefficient":"1/1","xi_power":1}"#
        );
        let ClassResult::Polynomial(k) = compute_class(&t1, 3, BetaMode::MinusOne, &opts).unwrap()
        else {
            panic!("expected polynomial");
        };
        // ξ-degree-1 part matches the Chow class
        assert_eq!(k.coefficient(&Monomial::new(0, 1, Vec::new())), q(1, 1));
    }
}
