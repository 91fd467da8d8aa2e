//! Super Catalan numbers and their circular variants.
//!
//! `S(m, n) = (2m)! (2n)! / (m! n! (m+n)!)` is always an integer, symmetric,
//! and satisfies `4 S(m,n) = S(m+1,n) + S(m,n+1)`. The circular variant
//! `Omega(m, n) = S(m, n) / 4^{m+n}` is the central coefficient (up to sign)
//! of the circular polynumber `pi_{2m,2n}`, which is what makes it the
//! backbone of the summation formulas.

use num_traits::Zero;

use crate::arith::{factorial, int_pow, BigInt, Rational};
use crate::polynumber::circular_polynumber;

/// `S(m, n)`, computed as the exact factorial quotient (the recurrence is
/// kept as an independent check, not the production path).
pub fn super_catalan(m: u64, n: u64) -> BigInt {
    let num = factorial(2 * m) * factorial(2 * n);
    let den = factorial(m) * factorial(n) * factorial(m + n);
    let (quot, rem) = num_integer::Integer::div_rem(&num, &den);
    debug_assert!(rem.is_zero(), "S({m},{n}) must be integral");
    quot
}

/// `Omega(m, n) = S(m, n) / 4^{m+n}` as a reduced fraction; the denominator
/// is always a power of two.
pub fn circular_super_catalan(m: u64, n: u64) -> Rational {
    Rational::new(super_catalan(m, n), int_pow(4, m + n))
}

/// Check `Omega(m, n) = (-1)^n [a^{m+n}] pi_{2m,2n}` by two independent
/// routes: the factorial quotient on the left, the expanded circular
/// polynumber on the right.
pub fn gmt_identity_check(m: u64, n: u64) -> bool {
    let lhs = circular_super_catalan(m, n);
    let coeff = circular_polynumber(2 * m, 2 * n).coefficient_at(m + n);
    let rhs = if n % 2 == 0 { coeff } else { -coeff };
    lhs == rhs
}

/// Precomputed grids of `S` and `Omega` values, for table emission.
#[derive(Clone, Debug)]
pub struct SuperCatalanTable {
    pub max_m: u64,
    pub max_n: u64,
    pub s_values: Vec<Vec<BigInt>>,
    pub omega_values: Vec<Vec<Rational>>,
}

impl SuperCatalanTable {
    pub fn new(max_m: u64, max_n: u64) -> Self {
        let s_values = (0..=max_m)
            .map(|m| (0..=max_n).map(|n| super_catalan(m, n)).collect())
            .collect();
        let omega_values = (0..=max_m)
            .map(|m| (0..=max_n).map(|n| circular_super_catalan(m, n)).collect())
            .collect();
        SuperCatalanTable { max_m, max_n, s_values, omega_values }
    }
}
