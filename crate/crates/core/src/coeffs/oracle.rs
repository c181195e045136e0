use num_bigint::BigUint;
use num_traits::{One, Zero};

/// `p_N(n)`, the number of partitions of `n` into at most `N` parts
/// (equivalently, into parts of size at most `N`).
pub fn p_oracle(n_parts: u32, n: u64) -> BigUint {
    p_oracle_row(n_parts, n).pop().expect("row has n + 1 entries")
}

/// `p_N(0), ..., p_N(n)` by the coin-change dynamic program.
pub fn p_oracle_row(n_parts: u32, n: u64) -> Vec<BigUint> {
    let len = n as usize + 1;
    let mut row = vec![BigUint::zero(); len];
    row[0] = BigUint::one();
    for part in 1..=n_parts as usize {
        for m in part..len {
            let add = row[m - part].clone();
            row[m] += add;
        }
    }
    row
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(p_oracle(3, 6), BigUint::from(7u32));
        assert_eq!(p_oracle(7, 0), BigUint::one());
        assert_eq!(p_oracle(100, 100), "190569292".parse().unwrap());
        for n in 0..40u64 {
            assert_eq!(p_oracle(2, n), BigUint::from((2 * n + 4 - 2 * (n % 2)) / 4));
        }
    }
}
