//! Fixed inputs shared by the benchmarks.

use prym_loci::{StrictPartition, VanishingPair};

/// The five-point pair with triple `p = (0,5,8,8,8,9)`, `q = (0,1,1,2,6,6)`.
pub fn five_point_pair() -> VanishingPair {
    VanishingPair::new(&[5, 8, 9, 12, 14], &[1, 2, 6, 10, 11], None).expect("valid pair")
}

/// `a' = b' = (0, 1, …, r)`.
pub fn staircase_pair(r: i64) -> VanishingPair {
    let seq: Vec<i64> = (0..=r).collect();
    VanishingPair::new(&seq, &seq, None).expect("valid pair")
}

pub fn partition(parts: &[u32]) -> StrictPartition {
    StrictPartition::new(parts.to_vec()).expect("strict partition")
}

/// Deterministic skew-symmetric integer matrix of even size `n`.
pub fn skew_matrix(n: usize) -> Vec<Vec<i128>> {
    let mut m = vec![vec![0i128; n]; n];
    let mut x: i128 = 7;
    for i in 0..n {
        for j in i + 1..n {
            x = (x * 31 + 11) % 19;
            m[i][j] = x - 9;
            m[j][i] = 9 - x;
        }
    }
    m
}
