//! Two-pointed vanishing data and the rank-condition triple derived from it.
//!
//! A pair of strictly increasing vanishing sequences `a'` (at `P`) and `b'`
//! (at `Q`) is merged into an even-length triple `(p, q, k)` encoding the
//! conditions `dim(E_{p_j} ∩ F_{q_j}) >= k_j`. The sums `p_j + q_j` give the
//! strict partition `λ` indexing the class.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which odd-index rule to use when both consecutive gaps equal 1.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TieBreak {
    /// Take `(p'_i, q'_{i+1})`.
    PreferB,
    /// Take `(p'_{i+1}, q'_i)`.
    #[default]
    PreferC,
}

/// The rule a [`Violation`] refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Rule {
    LengthMismatch,
    Negative,
    NotStrictlyIncreasing,
    ExceedsCanonicalDegree,
    NonPositiveGenus,
    GapCondition,
}

/// Which input sequence a violation was found in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    A,
    B,
    Both,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub rule: Rule,
    pub side: Side,
    pub index: Option<usize>,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.index {
            Some(i) => write!(f, "{:?} at index {}: {}", self.rule, i, self.detail),
            None => write!(f, "{:?}: {}", self.rule, self.detail),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ok {
            return f.write_str("ok");
        }
        let parts: Vec<String> = self.violations.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join("; "))
    }
}

/// Checks every invariant of a vanishing pair and reports all failures.
///
/// The gap condition `min(a'_{i+1} - a'_i, b'_{i+1} - b'_i) = 1` is only
/// required at the indices the triple construction consumes, i.e. `2i + 1 <= r`.
pub fn validate_pair(a_prime: &[i64], b_prime: &[i64], g: Option<i64>) -> ValidationReport {
    let mut violations = Vec::new();
    let mut push = |rule, side, index, detail: String| {
        violations.push(Violation {
            rule,
            side,
            index,
            detail,
        })
    };

    if a_prime.len() != b_prime.len() {
        push(
            Rule::LengthMismatch,
            Side::Both,
            None,
            format!("lengths {} and {} differ", a_prime.len(), b_prime.len()),
        );
    }
    if let Some(g) = g {
        if g < 1 {
            push(Rule::NonPositiveGenus, Side::Both, None, format!("g = {g}"));
        }
    }

    for (side, seq) in [(Side::A, a_prime), (Side::B, b_prime)] {
        for (i, &x) in seq.iter().enumerate() {
            if x < 0 {
                push(Rule::Negative, side, Some(i), format!("entry {x} < 0"));
            }
            if let Some(g) = g.filter(|&g| g >= 1) {
                if x > 2 * g - 2 {
                    push(
                        Rule::ExceedsCanonicalDegree,
                        side,
                        Some(i),
                        format!("entry {x} > 2g-2 = {}", 2 * g - 2),
                    );
                }
            }
        }
        for (i, w) in seq.windows(2).enumerate() {
            if w[1] <= w[0] {
                push(
                    Rule::NotStrictlyIncreasing,
                    side,
                    Some(i),
                    format!("{} -> {}", w[0], w[1]),
                );
            }
        }
    }

    let len = a_prime.len().min(b_prime.len());
    if len >= 2 {
        let r = len - 1;
        for i in (0..).take_while(|i| 2 * i < r) {
            let ga = a_prime[i + 1] - a_prime[i];
            let gb = b_prime[i + 1] - b_prime[i];
            if ga.min(gb) != 1 {
                push(
                    Rule::GapCondition,
                    Side::Both,
                    Some(i),
                    format!("min gap is {}", ga.min(gb)),
                );
            }
        }
    }

    ValidationReport {
        ok: violations.is_empty(),
        violations,
    }
}

/// Validated vanishing orders `a'` at `P` and `b'` at `Q`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VanishingPair {
    a_prime: Vec<u32>,
    b_prime: Vec<u32>,
    g: Option<u32>,
}

impl VanishingPair {
    pub fn new(a_prime: &[i64], b_prime: &[i64], g: Option<i64>) -> Result<Self> {
        let report = validate_pair(a_prime, b_prime, g);
        if !report.ok {
            return Err(Error::InvalidPair(report));
        }
        let conv = |s: &[i64]| s.iter().map(|&x| x as u32).collect();
        Ok(VanishingPair {
            a_prime: conv(a_prime),
            b_prime: conv(b_prime),
            g: g.map(|g| g as u32),
        })
    }

    pub fn a_prime(&self) -> &[u32] {
        &self.a_prime
    }

    pub fn b_prime(&self) -> &[u32] {
        &self.b_prime
    }

    pub fn genus(&self) -> Option<u32> {
        self.g
    }

    /// `r`, one less than the sequence length (`None` for empty input).
    pub fn r(&self) -> Option<usize> {
        self.a_prime.len().checked_sub(1)
    }
}

/// Even-length rank-condition data `(p, q, k)` with `k[j] = m - j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Triple {
    p: Vec<u32>,
    q: Vec<u32>,
    k: Vec<u32>,
}

impl Triple {
    /// Builds a triple from explicit `p` and `q`, with normalized `k`.
    pub fn new(p: Vec<u32>, q: Vec<u32>) -> Result<Self> {
        if p.len() != q.len() {
            return Err(Error::InvalidTriple(format!(
                "p has length {}, q has length {}",
                p.len(),
                q.len()
            )));
        }
        if !p.len().is_multiple_of(2) {
            return Err(Error::InvalidTriple(format!("odd length {}", p.len())));
        }
        if p.windows(2).any(|w| w[1] < w[0]) || q.windows(2).any(|w| w[1] < w[0]) {
            return Err(Error::InvalidTriple("p and q must be nondecreasing".into()));
        }
        let sums: Vec<u32> = p.iter().zip(&q).map(|(a, b)| a + b).collect();
        if sums.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::InvalidTriple(
                "p + q must be strictly increasing".into(),
            ));
        }
        let m = p.len() as u32;
        let k = (0..m).map(|j| m - j).collect();
        Ok(Triple { p, q, k })
    }

    /// The triple `p = 0, q = λ` (ascending), padded with `(0, 0)` when `ℓ` is odd.
    ///
    /// Any triple with the same sums gives the same class; this is the
    /// canonical one used when only a partition is at hand.
    pub fn from_partition(lambda: &StrictPartition) -> Self {
        let mut q: Vec<u32> = lambda.parts().iter().rev().copied().collect();
        if q.len() % 2 == 1 {
            q.insert(0, 0);
        }
        let p = vec![0; q.len()];
        Triple::new(p, q).expect("ascending strict parts form a valid triple")
    }

    pub fn p(&self) -> &[u32] {
        &self.p
    }

    pub fn q(&self) -> &[u32] {
        &self.q
    }

    pub fn k(&self) -> &[u32] {
        &self.k
    }

    pub fn len(&self) -> usize {
        self.p.len()
    }

    pub fn is_empty(&self) -> bool {
        self.p.is_empty()
    }

    /// `Σ_j (p_j + q_j)`, which equals `|λ|`.
    pub fn weight(&self) -> u32 {
        self.p.iter().chain(&self.q).sum()
    }

    pub fn max_index(&self) -> u32 {
        self.p.iter().chain(&self.q).copied().max().unwrap_or(0)
    }
}

/// Runs the merge construction on raw sequences.
///
/// Even positions take `(p'_i, q'_i)`; odd positions `2i + 1 <= s` take
/// `(p'_i, q'_{i+1})` when `p'` steps by 1 or `(p'_{i+1}, q'_i)` when `q'`
/// does. An odd-length result is padded with `(0, 0)` in front, or loses its
/// leading `(0, 0)` if it already starts there.
pub fn triple_from_sequences(p_prime: &[u32], q_prime: &[u32], tie: TieBreak) -> Result<Triple> {
    if p_prime.len() != q_prime.len() {
        return Err(Error::SizeMismatch {
            left: p_prime.len(),
            right: q_prime.len(),
        });
    }
    if p_prime.is_empty() {
        return Triple::new(Vec::new(), Vec::new());
    }
    let s = p_prime.len() - 1;
    let mut entries: Vec<(u32, u32)> = Vec::with_capacity(s + 2);
    for i in 0..=s / 2 {
        entries.push((p_prime[i], q_prime[i]));
        if 2 * i + 1 > s {
            continue;
        }
        let p_step = p_prime[i + 1].checked_sub(p_prime[i]) == Some(1);
        let q_step = q_prime[i + 1].checked_sub(q_prime[i]) == Some(1);
        let rule_b = (p_prime[i], q_prime[i + 1]);
        let rule_c = (p_prime[i + 1], q_prime[i]);
        let entry = match (p_step, q_step, tie) {
            (true, true, TieBreak::PreferB) | (true, false, _) => rule_b,
            (true, true, TieBreak::PreferC) | (false, true, _) => rule_c,
            (false, false, _) => return Err(Error::GapCondition { index: i }),
        };
        entries.push(entry);
    }
    if entries.len() % 2 == 1 {
        if entries[0] == (0, 0) {
            entries.remove(0);
        } else {
            entries.insert(0, (0, 0));
        }
    }
    let (p, q) = entries.into_iter().unzip();
    Triple::new(p, q)
}

pub fn build_triple(pair: &VanishingPair) -> Result<Triple> {
    build_triple_with(pair, TieBreak::default())
}

pub fn build_triple_with(pair: &VanishingPair, tie: TieBreak) -> Result<Triple> {
    triple_from_sequences(&pair.a_prime, &pair.b_prime, tie)
}

/// Strictly decreasing positive parts.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct StrictPartition(Vec<u32>);

impl StrictPartition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[1] >= w[0]) {
            return Err(Error::InvalidPartition(
                "parts must be strictly decreasing".into(),
            ));
        }
        Ok(StrictPartition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// `ℓ∘`, the number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|λ|`.
    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// All strict partitions of `n`, in reverse lexicographic order.
    pub fn all_of_weight(n: u32) -> Vec<StrictPartition> {
        fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<StrictPartition>) {
            if rest == 0 {
                out.push(StrictPartition(cur.clone()));
                return;
            }
            for part in (1..=rest.min(max)).rev() {
                cur.push(part);
                go(rest - part, part - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl TryFrom<Vec<u32>> for StrictPartition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        StrictPartition::new(parts)
    }
}

impl From<StrictPartition> for Vec<u32> {
    fn from(lambda: StrictPartition) -> Self {
        lambda.0
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// The sums `p_j + q_j` in decreasing order, zero dropped.
pub fn partition_of(triple: &Triple) -> StrictPartition {
    let mut parts: Vec<u32> = collide(triple).into_iter().filter(|&x| x > 0).collect();
    parts.reverse();
    StrictPartition(parts)
}

/// `g - 1 - |λ|`; negative when the locus is expected to be empty.
pub fn expected_dim(g: u32, triple: &Triple) -> i64 {
    i64::from(g) - 1 - i64::from(triple.weight())
}

pub fn is_nonempty(g: u32, triple: &Triple) -> bool {
    expected_dim(g, triple) >= 0
}

/// One-point vanishing sequence `(p_j + q_j)_j` obtained when `P = Q`.
pub fn collide(triple: &Triple) -> Vec<u32> {
    triple.p.iter().zip(&triple.q).map(|(a, b)| a + b).collect()
}
