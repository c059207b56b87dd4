use num_bigint::BigInt;

use super::{Partition, Permutations};
use crate::tpoly::TPoly;

// Above this size the Eulerian numbers come from the recurrence instead of
// counting descents over S_k.
const EULERIAN_ENUMERATION_LIMIT: usize = 8;

/// `A_k(t) = Σ_{σ ∈ S_k} t^{des(σ)}`, with `A_0 = A_1 = 1`.
pub fn eulerian_polynomial(k: usize) -> TPoly {
    if k <= EULERIAN_ENUMERATION_LIMIT {
        let mut counts = vec![0u64; k.max(1)];
        for sigma in Permutations::new(k) {
            counts[sigma.descents()] += 1;
        }
        return TPoly::from_counts(&counts);
    }
    // A(n, m) = (m + 1) A(n-1, m) + (n - m) A(n-1, m-1)
    let mut row: Vec<BigInt> = vec![BigInt::from(1)];
    for n in 2..=k {
        let mut next = vec![BigInt::from(0); n];
        for m in 0..n {
            if m < row.len() {
                next[m] += &row[m] * (m + 1);
            }
            if m > 0 {
                next[m] += &row[m - 1] * (n - m);
            }
        }
        row = next;
    }
    TPoly::from_coeffs(row.into_iter().map(crate::tpoly::Rational::from_integer).collect())
}

/// `z_λ = Π_i i^{m_i} m_i!`.
pub fn z_lambda(lambda: &Partition) -> BigInt {
    lambda
        .multiplicities()
        .iter()
        .enumerate()
        .skip(1)
        .fold(BigInt::from(1), |acc, (i, &m)| {
            acc * BigInt::from(i).pow(m as u32) * factorial(m)
        })
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, k| acc * k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::partitions;
    use crate::tpoly::{rat, Rational};

    #[test]
    fn small_eulerian_polynomials() {
        assert_eq!(eulerian_polynomial(0), TPoly::one());
        assert_eq!(eulerian_polynomial(1), TPoly::one());
        assert_eq!(eulerian_polynomial(2), TPoly::from_ints([1, 1]));
        assert_eq!(eulerian_polynomial(3), TPoly::from_ints([1, 4, 1]));
    }

    #[test]
    fn eulerian_sums_and_palindromes() {
        for k in 1..=8 {
            let a = eulerian_polynomial(k);
            assert_eq!(a.eval(&rat(1)), Rational::from_integer(factorial(k)));
            assert!(a.is_palindromic());
        }
    }

    #[test]
    fn recurrence_continues_enumeration() {
        // A_9 and A_10 from the recurrence, checked against known rows.
        assert_eq!(
            eulerian_polynomial(9),
            TPoly::from_ints([1, 502, 14608, 88234, 156190, 88234, 14608, 502, 1])
        );
        assert_eq!(eulerian_polynomial(10).eval(&rat(1)), Rational::from_integer(factorial(10)));
    }

    #[test]
    fn z_values() {
        let z = |p: Vec<usize>| z_lambda(&Partition::new(p).unwrap());
        assert_eq!(z(vec![1, 1, 1]), BigInt::from(6));
        assert_eq!(z(vec![2, 1]), BigInt::from(2));
        assert_eq!(z(vec![3]), BigInt::from(3));
    }

    #[test]
    fn class_sizes_sum_to_one() {
        for n in 1..=10 {
            let total: Rational = partitions(n)
                .iter()
                .map(|l| Rational::new(factorial(n), z_lambda(l)) / Rational::from_integer(factorial(n)))
                .sum();
            assert_eq!(total, rat(1));
        }
    }
}
