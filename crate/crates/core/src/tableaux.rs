//! Shifted shapes and their standard tableaux.
//!
//! Row `i` (0-based) of the shifted shape of `λ` occupies columns
//! `i ..= i + λ_i - 1`. Tableaux are produced by placing `1, 2, …, |λ|` one at
//! a time in an addable cell, trying lower rows first; the resulting order is
//! reverse lexicographic in the row sequence of the entries.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ring::{factorial, format_rational, Rational};
use crate::sequences::StrictPartition;

/// Largest shape materialized by [`enumerate_syt`].
pub const MAX_ENUM_CELLS: u32 = 20;
/// Largest shape counted by [`count_syt_enum`].
pub const MAX_COUNT_CELLS: u32 = 120;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ShiftedShape {
    parts: StrictPartition,
}

impl ShiftedShape {
    pub fn new(parts: StrictPartition) -> Self {
        ShiftedShape { parts }
    }

    pub fn partition(&self) -> &StrictPartition {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.weight()
    }

    /// Cells `(row, col)`, 0-based, row by row.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        self.parts
            .parts()
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (i..i + len as usize).map(move |j| (i, j)))
            .collect()
    }

    /// Rows whose next cell can take the next entry, given current row fills.
    fn addable_rows(&self, fill: &[u32]) -> impl Iterator<Item = usize> + '_ {
        let parts = self.parts.parts();
        let fill = fill.to_vec();
        (0..parts.len())
            .rev()
            .filter(move |&i| fill[i] < parts[i] && (i == 0 || fill[i - 1] >= fill[i] + 2))
    }
}

/// Rows of entries; row `i` starts at column `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct ShiftedTableau {
    rows: Vec<Vec<u32>>,
}

impl ShiftedTableau {
    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn from_rows(rows: Vec<Vec<u32>>) -> Self {
        ShiftedTableau { rows }
    }

    /// Entry at `(row, col)` in shifted coordinates.
    pub fn get(&self, row: usize, col: usize) -> Option<u32> {
        col.checked_sub(row)
            .and_then(|offset| self.rows.get(row)?.get(offset).copied())
    }

    /// Whether this is a standard filling of `shape`.
    pub fn is_standard_for(&self, shape: &ShiftedShape) -> bool {
        let parts = shape.partition().parts();
        if self.rows.len() != parts.len()
            || self
                .rows
                .iter()
                .zip(parts)
                .any(|(r, &len)| r.len() != len as usize)
        {
            return false;
        }
        let n = shape.size() as usize;
        let mut seen = vec![false; n];
        for &x in self.rows.iter().flatten() {
            if x == 0 || x as usize > n || seen[x as usize - 1] {
                return false;
            }
            seen[x as usize - 1] = true;
        }
        shape.cells().into_iter().all(|(i, j)| {
            let x = self.get(i, j).expect("cell in shape");
            let right_ok = self.get(i, j + 1).is_none_or(|y| y > x);
            let below_ok = self.get(i + 1, j).is_none_or(|y| y > x);
            right_ok && below_ok
        })
    }
}

/// All standard shifted tableaux of `shape`, each exactly once.
pub fn enumerate_syt(shape: &ShiftedShape) -> Result<Vec<ShiftedTableau>> {
    let size = shape.size();
    if size > MAX_ENUM_CELLS {
        return Err(Error::Resource {
            what: "shape size",
            value: size as usize,
            limit: MAX_ENUM_CELLS as usize,
        });
    }
    let mut out = Vec::new();
    let mut rows: Vec<Vec<u32>> = vec![Vec::new(); shape.partition().len()];
    let mut fill = vec![0u32; rows.len()];
    place(shape, 1, &mut fill, &mut rows, &mut out);
    Ok(out)
}

fn place(
    shape: &ShiftedShape,
    next: u32,
    fill: &mut [u32],
    rows: &mut [Vec<u32>],
    out: &mut Vec<ShiftedTableau>,
) {
    if next > shape.size() {
        out.push(ShiftedTableau {
            rows: rows.to_vec(),
        });
        return;
    }
    let candidates: Vec<usize> = shape.addable_rows(fill).collect();
    for i in candidates {
        fill[i] += 1;
        rows[i].push(next);
        place(shape, next + 1, fill, rows, out);
        rows[i].pop();
        fill[i] -= 1;
    }
}

/// Size of the [`enumerate_syt`] stream, computed by the same backtracking
/// with identical subtrees (same row fills) counted once.
pub fn count_syt_enum(shape: &ShiftedShape) -> Result<BigInt> {
    let size = shape.size();
    if size > MAX_COUNT_CELLS {
        return Err(Error::Resource {
            what: "shape size",
            value: size as usize,
            limit: MAX_COUNT_CELLS as usize,
        });
    }
    let mut memo = HashMap::new();
    let mut fill = vec![0u32; shape.partition().len()];
    Ok(count_from(shape, &mut fill, &mut memo))
}

fn count_from(
    shape: &ShiftedShape,
    fill: &mut Vec<u32>,
    memo: &mut HashMap<Vec<u32>, BigInt>,
) -> BigInt {
    if fill.as_slice() == shape.partition().parts() {
        return BigInt::one();
    }
    if let Some(v) = memo.get(fill.as_slice()) {
        return v.clone();
    }
    let candidates: Vec<usize> = shape.addable_rows(fill).collect();
    let mut total = BigInt::zero();
    for i in candidates {
        fill[i] += 1;
        total += count_from(shape, fill, memo);
        fill[i] -= 1;
    }
    memo.insert(fill.clone(), total.clone());
    total
}

/// `|λ|! ∏ 1/λ_i! ∏_{i<j} (λ_i - λ_j)/(λ_i + λ_j)`, which must be an integer.
pub fn count_syt_formula(shape: &ShiftedShape) -> Result<BigInt> {
    let parts = shape.partition().parts();
    let mut value = Rational::from_integer(BigInt::from(factorial(shape.size())));
    for (a, &x) in parts.iter().enumerate() {
        value /= Rational::from_integer(BigInt::from(factorial(x)));
        for &y in &parts[a + 1..] {
            value *= Rational::new(BigInt::from(x - y), BigInt::from(x + y));
        }
    }
    if !value.is_integer() {
        return Err(Error::Integrality(format_rational(&value)));
    }
    Ok(value.to_integer())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(parts: &[u32]) -> ShiftedShape {
        ShiftedShape::new(StrictPartition::new(parts.to_vec()).unwrap())
    }

    #[test]
    fn shape_421_lists_seven_in_order() {
        let all = enumerate_syt(&shape(&[4, 2, 1])).unwrap();
        let expect: Vec<Vec<Vec<u32>>> = vec![
            vec![vec![1, 2, 4, 7], vec![3, 5], vec![6]],
            vec![vec![1, 2, 4, 6], vec![3, 5], vec![7]],
            vec![vec![1, 2, 4, 5], vec![3, 6], vec![7]],
            vec![vec![1, 2, 3, 7], vec![4, 5], vec![6]],
            vec![vec![1, 2, 3, 6], vec![4, 5], vec![7]],
            vec![vec![1, 2, 3, 5], vec![4, 6], vec![7]],
            vec![vec![1, 2, 3, 4], vec![5, 6], vec![7]],
        ];
        let got: Vec<Vec<Vec<u32>>> = all.iter().map(|t| t.rows().to_vec()).collect();
        assert_eq!(got, expect);
    }

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_syt(&shape(&[1])).unwrap().len(), 1);
        let t21 = enumerate_syt(&shape(&[2, 1])).unwrap();
        assert_eq!(
            t21,
            vec![ShiftedTableau::from_rows(vec![vec![1, 2], vec![3]])]
        );
        assert_eq!(count_syt_enum(&shape(&[3, 2, 1])).unwrap(), BigInt::from(2));
        assert_eq!(count_syt_enum(&shape(&[4, 2, 1])).unwrap(), BigInt::from(7));
        assert_eq!(
            count_syt_formula(&shape(&[4, 2, 1])).unwrap(),
            BigInt::from(7)
        );
        assert_eq!(count_syt_formula(&shape(&[1])).unwrap(), BigInt::from(1));
        assert_eq!(count_syt_formula(&shape(&[2, 1])).unwrap(), BigInt::from(1));
        assert_eq!(count_syt_enum(&shape(&[])).unwrap(), BigInt::from(1));
    }

    #[test]
    fn single_row_has_one_filling() {
        for k in 1..=15 {
            assert_eq!(count_syt_enum(&shape(&[k])).unwrap(), BigInt::one());
        }
    }

    #[test]
    fn resource_guards() {
        let big = shape(&[6, 5, 4, 3, 2, 1]);
        assert!(matches!(enumerate_syt(&big), Err(Error::Resource { .. })));
        assert!(count_syt_enum(&big).is_ok());
    }

    #[test]
    fn enumeration_is_valid_distinct_and_matches_counts() {
        for n in 0..=12 {
            for lambda in StrictPartition::all_of_weight(n) {
                let s = ShiftedShape::new(lambda);
                let all = enumerate_syt(&s).unwrap();
                assert!(all.iter().all(|t| t.is_standard_for(&s)));
                let mut sorted = all.clone();
                sorted.sort();
                sorted.dedup();
                assert_eq!(sorted.len(), all.len());
                assert_eq!(BigInt::from(all.len()), count_syt_enum(&s).unwrap());
                assert_eq!(count_syt_formula(&s).unwrap(), count_syt_enum(&s).unwrap());
            }
        }
    }

    #[test]
    fn standardness_check_rejects_bad_fillings() {
        let s = shape(&[2, 1]);
        assert!(!ShiftedTableau::from_rows(vec![vec![1, 3], vec![2]]).is_standard_for(&s));
        assert!(!ShiftedTableau::from_rows(vec![vec![1, 2], vec![2]]).is_standard_for(&s));
        assert!(!ShiftedTableau::from_rows(vec![vec![1, 2, 3]]).is_standard_for(&s));
    }

    #[test]
    fn cells_of_shape() {
        assert_eq!(shape(&[3, 1]).cells(), vec![(0, 0), (0, 1), (0, 2), (1, 1)]);
    }
}
