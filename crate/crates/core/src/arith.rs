//! Small big-integer helpers shared by the brute-force and series sides.

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// `n!` as a big integer.
pub fn factorial(n: usize) -> BigUint {
    (1..=n as u64).fold(BigUint::one(), |acc, i| acc * i)
}

/// Binomial coefficient `C(x, d)`, zero when `x < d`.
pub fn binomial(x: u64, d: u64) -> BigUint {
    if d > x {
        return BigUint::zero();
    }
    let d = d.min(x - d);
    let mut acc = BigUint::one();
    for i in 0..d {
        acc *= x - i;
        acc /= i + 1;
    }
    acc
}

/// Stirling number of the second kind, built from the triangle
/// `S(d, i) = i * S(d-1, i) + S(d-1, i-1)`.
pub fn stirling2(d: usize, i: usize) -> BigUint {
    if i > d {
        return BigUint::zero();
    }
    let mut row = vec![BigUint::one()];
    for m in 1..=d {
        let mut next = vec![BigUint::zero(); m + 1];
        for j in 1..=m {
            let carry = if j < row.len() {
                &row[j] * j
            } else {
                BigUint::zero()
            };
            next[j] = carry + &row[j - 1];
        }
        row = next;
    }
    row.swap_remove(i)
}
