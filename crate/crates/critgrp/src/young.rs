//! Integer partitions, Young's lattice up/down operators, and the
//! closed-form invariant factors of the critical group of the reflection
//! representation of the symmetric group.
//!
//! Ranks of Young's lattice are indexed by [`RankBasis`], whose partitions
//! are kept in descending lexicographic order. That matches the canonical
//! row order of the symmetric-group character tables, so matrices built here
//! compare entrywise against fusion matrices with no permutation.

use num::bigint::BigInt;
use num::{Integer, One, Zero};
use thiserror::Error;

use crate::intlinalg::{cokernel, AbelianGroupStructure, Cokernel, IntegerMatrix};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum YoungError {
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
}

/// A partition of a nonnegative integer: weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "parts must be weakly decreasing"
        );
        assert!(parts.iter().all(|&p| p > 0), "parts must be positive");
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Row indices whose last cell is removable (strict descent or last row).
    pub fn removable_corners(&self) -> Vec<usize> {
        let l = self.parts.len();
        (0..l)
            .filter(|&i| i + 1 == l || self.parts[i] > self.parts[i + 1])
            .collect()
    }

    /// Row indices where a cell can be added, including a new row at the end.
    pub fn addable_corners(&self) -> Vec<usize> {
        let l = self.parts.len();
        (0..=l)
            .filter(|&i| i == 0 || i == l || self.parts[i - 1] > self.parts[i])
            .collect()
    }

    pub fn remove_corner(&self, row: usize) -> Self {
        let mut parts = self.parts.clone();
        parts[row] -= 1;
        if parts[row] == 0 {
            parts.remove(row);
        }
        Partition { parts }
    }

    pub fn add_corner(&self, row: usize) -> Self {
        let mut parts = self.parts.clone();
        if row == parts.len() {
            parts.push(1);
        } else {
            parts[row] += 1;
        }
        Partition { parts }
    }

    /// Comma-separated label, e.g. `3,1`; the empty partition is `-`.
    pub fn label(&self) -> String {
        if self.parts.is_empty() {
            return "-".to_string();
        }
        self.parts
            .iter()
            .map(u32::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({})", self.label())
    }
}

/// All partitions of `n` in canonical (descending lexicographic) order; the
/// basis of the free abelian group on rank `n` of Young's lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankBasis {
    pub n: u32,
    pub partitions: Vec<Partition>,
}

impl RankBasis {
    pub fn len(&self) -> usize {
        self.partitions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.partitions.is_empty()
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.partitions.iter().position(|q| q == p)
    }
}

/// All partitions of `n`, descending lexicographic.
pub fn partitions_of(n: u32) -> RankBasis {
    fn rec(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        let top = remaining.min(max_part);
        for k in (1..=top).rev() {
            prefix.push(k);
            rec(remaining - k, k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n.max(1), &mut Vec::new(), &mut out);
    RankBasis { n, partitions: out }
}

/// The partition number `p(n)`, by the bounded-part counting recurrence.
/// Independent of the enumeration in [`partitions_of`].
pub fn partition_count(n: u32) -> u64 {
    let n = n as usize;
    let mut dp = vec![0u64; n + 1];
    dp[0] = 1;
    for part in 1..=n {
        for s in part..=n {
            dp[s] += dp[s - part];
        }
    }
    dp[n]
}

/// The up map `U_i: ℤY_i → ℤY_{i+1}` as a `p(i+1) × p(i)` 0/1 matrix:
/// column `y` has ones at the rows covering `y`.
pub fn up_matrix(i: u32) -> IntegerMatrix {
    let lower = partitions_of(i);
    let upper = partitions_of(i + 1);
    let mut m = IntegerMatrix::zeros(upper.len(), lower.len());
    for (col, y) in lower.partitions.iter().enumerate() {
        for row_idx in y.addable_corners() {
            let z = y.add_corner(row_idx);
            let row = upper.index_of(&z).expect("cover stays in next rank");
            m[(row, col)] = BigInt::one();
        }
    }
    m
}

/// The down map `D_i: ℤY_i → ℤY_{i−1}` as a `p(i−1) × p(i)` 0/1 matrix:
/// column `y` has ones at the rows covered by `y`. Requires `i ≥ 1`.
pub fn down_matrix(i: u32) -> IntegerMatrix {
    assert!(i >= 1, "down_matrix needs a rank below");
    let upper = partitions_of(i);
    let lower = partitions_of(i - 1);
    let mut m = IntegerMatrix::zeros(lower.len(), upper.len());
    for (col, y) in upper.partitions.iter().enumerate() {
        for row_idx in y.removable_corners() {
            let x = y.remove_corner(row_idx);
            let row = lower.index_of(&x).expect("cover stays in previous rank");
            m[(row, col)] = BigInt::one();
        }
    }
    m
}

/// The `p(n) × p(n)` product `U_{n−1} D_n`.
pub fn ud_matrix(n: u32) -> IntegerMatrix {
    assert!(n >= 1);
    up_matrix(n - 1)
        .mul(&down_matrix(n))
        .expect("shapes agree by construction")
}

/// Count of strict descents among the first `l(λ)−1` parts; one less than
/// the number of removable corners.
pub fn corner_statistic(lambda: &Partition) -> usize {
    let parts = lambda.parts();
    if parts.len() <= 1 {
        return 0;
    }
    (0..parts.len() - 1)
        .filter(|&i| parts[i] > parts[i + 1])
        .count()
}

/// Coefficient vector of the product of the reflection character with
/// `χ_λ` over the rank basis of `|λ|`: the corner statistic at `λ` itself,
/// and 1 at every partition reachable by removing and then adding a corner.
pub fn kronecker_row(lambda: &Partition) -> Vec<BigInt> {
    let n = lambda.size();
    assert!(n >= 2, "kronecker_row needs |λ| ≥ 2");
    let basis = partitions_of(n);
    let mut row = vec![BigInt::zero(); basis.len()];
    let self_idx = basis.index_of(lambda).expect("λ lies in its own rank");
    row[self_idx] = BigInt::from(corner_statistic(lambda));
    for r in lambda.removable_corners() {
        let nu = lambda.remove_corner(r);
        for a in nu.addable_corners() {
            let mu = nu.add_corner(a);
            if &mu != lambda {
                let idx = basis.index_of(&mu).expect("μ lies in the same rank");
                row[idx] = BigInt::one();
            }
        }
    }
    row
}

/// The full remove-add-corner matrix over the rank basis of `n`, rows in
/// basis order; equals `UD − I`.
pub fn kronecker_matrix(n: u32) -> IntegerMatrix {
    let basis = partitions_of(n);
    IntegerMatrix::from_rows(basis.partitions.iter().map(kronecker_row).collect())
}

/// `α_i(t) = ∏ (t + k)` over `0 ≤ k ≤ n` with `p(n−k) − p(n−k−1) ≥ i`,
/// taking `p(−1) = 0`; the empty product is 1.
pub fn alpha_eval(n: u32, i: usize, t: i64) -> BigInt {
    assert!(i >= 1);
    let p = |j: i64| -> i64 {
        if j < 0 {
            0
        } else {
            partition_count(j as u32) as i64
        }
    };
    let mut prod = BigInt::one();
    for k in 0..=n as i64 {
        let diff = p(n as i64 - k) - p(n as i64 - k - 1);
        if diff >= i as i64 {
            prod *= BigInt::from(t + k);
        }
    }
    prod
}

/// Invariant factors of the critical group of the reflection representation
/// of the symmetric group on `n` letters, in closed form: the factors are
/// `q_i = ∏ j` over `1 ≤ j ≤ n` with `p(j) − p(j−1) ≥ i`, for
/// `i = 2, ..., p(n) − p(n−1)`, emitted smallest-first.
pub fn theorem15_structure(n: u32) -> Result<AbelianGroupStructure, YoungError> {
    if n < 2 {
        return Err(YoungError::OutOfRange(format!(
            "reflection representation needs n ≥ 2, got {n}"
        )));
    }
    let top = partition_count(n) as i64 - partition_count(n - 1) as i64;
    let mut factors = Vec::new();
    let mut i = top;
    while i >= 2 {
        let mut q = BigInt::one();
        for j in 1..=n {
            let diff = partition_count(j) as i64 - partition_count(j - 1) as i64;
            if diff >= i {
                q *= BigInt::from(j);
            }
        }
        factors.push(q);
        i -= 1;
    }
    Ok(AbelianGroupStructure::from_invariant_factors(factors))
}

/// Check one integer specialization `t` of the Smith-form statement for
/// `UD + tI`: the cokernel of the specialized matrix must agree with the
/// cokernel of `diag(α_{p(n)}(t), ..., α_1(t))`. Both sides pass through
/// Smith normal form independently, since the specialized diagonal need not
/// satisfy the divisibility chain on the nose.
pub fn specialization_check(n: u32, t: i64) -> bool {
    let pn = partition_count(n) as usize;
    let lhs_matrix = ud_matrix(n)
        .add(&IntegerMatrix::scalar_identity(pn, BigInt::from(t)))
        .expect("square of matching size");
    let lhs: Cokernel = cokernel(&lhs_matrix);

    let mut diag = IntegerMatrix::zeros(pn, pn);
    for (slot, i) in (1..=pn).rev().enumerate() {
        diag[(slot, slot)] = alpha_eval(n, i, t);
    }
    let rhs = cokernel(&diag);
    lhs == rhs
}
