//! Signed permutations of type D: rank functions, Bruhat order, length and
//! the brute-force search for the Bruhat-minimal element realizing a triple.
//!
//! Positions and values live on `n̄ < … < 1̄ < 1 < … < n` with `x̄ = -x`, and
//! `w(-i) = -w(i)`. The rank `r_w(a, b̄)` counts positions below `b̄` whose
//! value exceeds `a`, which is `#{ i > b : w(i) < -a }`. The value threshold
//! `a` ranges over the whole signed alphabet: `a < 0` stands for `|a|‾`.
//! With `a >= 0` alone the ranks only see the negative entries and do not
//! separate, e.g., the identity from `(1,3,2)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sequences::Triple;

/// Largest `n` for which `W_n^+` is enumerated.
pub const MAX_ENUM_N: usize = 8;

/// Window notation `(w(1), …, w(n))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i32>", into = "Vec<i32>")]
pub struct SignedPermutation(Vec<i32>);

impl SignedPermutation {
    pub fn new(window: Vec<i32>) -> Result<Self> {
        let n = window.len();
        let mut seen = vec![false; n];
        for &x in &window {
            let a = x.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a - 1] {
                return Err(Error::InvalidPermutation(format!(
                    "{window:?} is not a signed permutation of 1..{n}"
                )));
            }
            seen[a - 1] = true;
        }
        Ok(SignedPermutation(window))
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation((1..=n as i32).collect())
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn window(&self) -> &[i32] {
        &self.0
    }

    /// `w(i)` for `i ∈ ±{1..n}`.
    pub fn apply(&self, i: i32) -> i32 {
        let v = self.0[i.unsigned_abs() as usize - 1];
        if i < 0 {
            -v
        } else {
            v
        }
    }

    /// Number of negative entries.
    pub fn sign_changes(&self) -> usize {
        self.0.iter().filter(|&&x| x < 0).count()
    }

    /// Membership in `W_n^+`.
    pub fn is_even(&self) -> bool {
        self.sign_changes().is_multiple_of(2)
    }

    /// Full table `r_w(a, b̄)` for `-n <= a <= n`, `0 <= b < n`, row-major in `a`.
    pub fn rank_table(&self) -> Vec<u32> {
        let n = self.n();
        let mut table = Vec::with_capacity((2 * n + 1) * n);
        for a in -(n as i32)..=n as i32 {
            table.extend((0..n).map(|b| rank_unchecked(self, a, b)));
        }
        table
    }
}

impl TryFrom<Vec<i32>> for SignedPermutation {
    type Error = Error;

    fn try_from(window: Vec<i32>) -> Result<Self> {
        SignedPermutation::new(window)
    }
}

impl From<SignedPermutation> for Vec<i32> {
    fn from(w: SignedPermutation) -> Self {
        w.0
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Argument pair `(a, b̄)` of a rank function; negative `a` encodes `|a|‾`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RankQuery {
    pub a: i32,
    pub b: u32,
}

impl RankQuery {
    pub fn new(a: i32, b: u32) -> Self {
        RankQuery { a, b }
    }
}

pub fn rank(w: &SignedPermutation, query: RankQuery) -> Result<u32> {
    let n = w.n();
    if query.b as usize >= n {
        return Err(Error::Bounds(format!(
            "rank query b = {} needs 0 <= b <= n-1 = {}",
            query.b,
            n as i64 - 1
        )));
    }
    Ok(rank_unchecked(w, query.a, query.b as usize))
}

fn rank_unchecked(w: &SignedPermutation, a: i32, b: usize) -> u32 {
    let bound = -i64::from(a);
    // 1-based positions b+1..=n
    w.0[b..].iter().filter(|&&x| i64::from(x) < bound).count() as u32
}

/// Rank domination over `-n <= a <= n`, `0 <= b <= n-1`.
pub fn bruhat_leq(u: &SignedPermutation, v: &SignedPermutation) -> Result<bool> {
    if u.n() != v.n() {
        return Err(Error::SizeMismatch {
            left: u.n(),
            right: v.n(),
        });
    }
    let n = u.n();
    for a in -(n as i32)..=n as i32 {
        for b in 0..n {
            if rank_unchecked(u, a, b) > rank_unchecked(v, a, b) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Type D length `inv(w) + #{i < j : w(i) + w(j) < 0}`.
pub fn length_d(w: &SignedPermutation) -> u64 {
    let win = &w.0;
    let mut len = 0u64;
    for i in 0..win.len() {
        for j in i + 1..win.len() {
            if win[i] > win[j] {
                len += 1;
            }
            if win[i] + win[j] < 0 {
                len += 1;
            }
        }
    }
    len
}

/// Every element of `W_n^+`: permutations in lexicographic order, each with
/// all even sign masks in increasing mask order.
pub fn enumerate_wn_plus(n: usize) -> Result<WnPlus> {
    if n > MAX_ENUM_N {
        return Err(Error::Resource {
            what: "n",
            value: n,
            limit: MAX_ENUM_N,
        });
    }
    if n == 0 {
        return Err(Error::Bounds("W_n^+ needs n >= 1".into()));
    }
    Ok(WnPlus {
        perm: Some((1..=n as i32).collect()),
        mask: 0,
    })
}

pub struct WnPlus {
    perm: Option<Vec<i32>>,
    mask: u32,
}

impl Iterator for WnPlus {
    type Item = SignedPermutation;

    fn next(&mut self) -> Option<SignedPermutation> {
        let perm = self.perm.as_mut()?;
        let n = perm.len();
        let window = perm
            .iter()
            .enumerate()
            .map(|(i, &x)| if self.mask >> i & 1 == 1 { -x } else { x })
            .collect();

        let mut next_mask = self.mask + 1;
        while next_mask < (1 << n) && next_mask.count_ones() % 2 == 1 {
            next_mask += 1;
        }
        if next_mask < (1 << n) {
            self.mask = next_mask;
        } else {
            self.mask = 0;
            if !next_permutation(perm) {
                self.perm = None;
            }
        }
        Some(SignedPermutation(window))
    }
}

fn next_permutation(v: &mut [i32]) -> bool {
    let Some(i) = v.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = v
        .iter()
        .rposition(|&x| x > v[i])
        .expect("pivot has a successor");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// Whether `r_w(q_j, p̄_j) >= k_j` for every entry of the triple.
pub fn satisfies_triple(w: &SignedPermutation, triple: &Triple) -> Result<bool> {
    check_fits(triple, w.n())?;
    Ok(satisfies_unchecked(w, triple))
}

fn satisfies_unchecked(w: &SignedPermutation, triple: &Triple) -> bool {
    triple
        .p()
        .iter()
        .zip(triple.q())
        .zip(triple.k())
        .all(|((&p, &q), &k)| rank_unchecked(w, q as i32, p as usize) >= k)
}

fn check_fits(triple: &Triple, n: usize) -> Result<()> {
    if triple.max_index() as usize >= n.max(1) && !triple.is_empty() {
        return Err(Error::Bounds(format!(
            "triple entry {} does not fit n = {n}",
            triple.max_index()
        )));
    }
    Ok(())
}

/// Brute-force search of `W_n^+` for the unique Bruhat-minimal element
/// satisfying the triple; its length must equal `Σ(p_j + q_j)`.
pub fn minimal_vexillary(triple: &Triple, n: usize) -> Result<SignedPermutation> {
    if n > MAX_ENUM_N {
        return Err(Error::Resource {
            what: "n",
            value: n,
            limit: MAX_ENUM_N,
        });
    }
    check_fits(triple, n)?;

    let satisfying: Vec<(SignedPermutation, Vec<u32>)> = enumerate_wn_plus(n)?
        .filter(|w| satisfies_unchecked(w, triple))
        .map(|w| {
            let ranks = w.rank_table();
            (w, ranks)
        })
        .collect();
    if satisfying.is_empty() {
        return Err(Error::NoSolution { n });
    }

    let dominated = |u: &[u32], v: &[u32]| u.iter().zip(v).all(|(x, y)| x <= y);
    let mut best = 0;
    for (idx, (_, ranks)) in satisfying.iter().enumerate().skip(1) {
        if dominated(ranks, &satisfying[best].1) {
            best = idx;
        }
    }
    let (min, min_ranks) = &satisfying[best];
    if !satisfying.iter().all(|(_, r)| dominated(min_ranks, r)) {
        let minimal = satisfying
            .iter()
            .filter(|(_, r)| {
                satisfying
                    .iter()
                    .all(|(_, other)| other == r || !dominated(other, r))
            })
            .count();
        return Err(Error::NonUniqueMinimum {
            candidates: minimal,
        });
    }
    let min_len = length_d(min);

    let expected = u64::from(triple.weight());
    if min_len != expected {
        return Err(Error::LengthMismatch {
            expected,
            found: min_len,
        });
    }
    Ok(min.clone())
}
