//! Arbitrary-precision integers and exact rationals.
//!
//! `BigInt` is a sign/magnitude arbitrary-precision integer and `Rational` a
//! reduced fraction with positive denominator; both are backed by the `num`
//! crates, which already maintain exactly those canonical forms. This module
//! adds the combinatorial and modular helpers the rest of the crate needs:
//! binomial coefficients with the out-of-range-is-zero convention, and
//! reduction of a rational to a residue modulo an odd prime.

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub use num_bigint::BigInt;
pub use num_rational::BigRational as Rational;

/// `n!` as an exact integer.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= i;
    }
    acc
}

/// Binomial coefficient `C(n, k)`, with `C(n, k) = 0` for `k < 0` or `k > n`.
///
/// Computed by the ascending multiply-then-exact-divide loop, which keeps
/// intermediate magnitudes near the size of the result.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1; // exact: the running product is always a binomial
    }
    acc
}

/// `base^exp` as an exact integer, for exact powers of small bases.
pub fn int_pow(base: u64, exp: u64) -> BigInt {
    let mut acc = BigInt::one();
    let mut b = BigInt::from(base);
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &b;
        }
        b = &b * &b;
        e >>= 1;
    }
    acc
}

/// A rational with value `num / 2^log2_den`, handy for the ladder formulas
/// whose denominators are always powers of two.
pub fn ratio_over_pow2(num: BigInt, log2_den: u64) -> Rational {
    Rational::new(num, int_pow(2, log2_den))
}

/// Inverse of `a` modulo the odd prime `p` via the extended Euclidean
/// algorithm. Returns `None` when `p | a`.
pub fn mod_inverse(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 {
        return None;
    }
    let (mut r0, mut r1) = (p as i128, a as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1, "p must be prime and a nonzero mod p");
    Some(t0.rem_euclid(p as i128) as u64)
}

/// Residue of an arbitrary `BigInt` modulo `p`, in `0..p`.
pub fn bigint_mod(x: &BigInt, p: u64) -> u64 {
    let m = x % BigInt::from(p);
    let m = if m.is_negative() { m + BigInt::from(p) } else { m };
    m.to_u64().expect("residue fits in u64")
}

/// Reduce a rational modulo the odd prime `p`: `numerator * denominator^{-1}`.
///
/// Well-defined exactly when `p` does not divide the denominator.
pub fn reduce_mod_p(x: &Rational, p: u64) -> Result<u64> {
    let den = bigint_mod(x.denom(), p);
    let den_inv = mod_inverse(den, p).ok_or(Error::DenominatorDivisibleByP { p })?;
    let num = bigint_mod(x.numer(), p);
    Ok((num as u128 * den_inv as u128 % p as u128) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Independent oracle: Pascal's triangle built purely by addition.
    struct Pascal(Vec<Vec<BigInt>>);

    impl Pascal {
        fn new(max_n: usize) -> Self {
            let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
            for n in 1..=max_n {
                let prev = &rows[n - 1];
                let mut row = vec![BigInt::one()];
                for k in 1..n {
                    row.push(&prev[k - 1] + &prev[k]);
                }
                row.push(BigInt::one());
                rows.push(row);
            }
            Pascal(rows)
        }

        fn get(&self, n: usize, k: usize) -> &BigInt {
            &self.0[n][k]
        }
    }

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(0, 0), BigInt::one());
        assert_eq!(binomial(5, -1), BigInt::zero());
        assert_eq!(binomial(5, 6), BigInt::zero());
    }

    #[test]
    fn binomial_40_20_matches_pascal_oracle() {
        let pascal = Pascal::new(40);
        assert_eq!(binomial(40, 20), *pascal.get(40, 20));
        // frozen from the oracle
        assert_eq!(binomial(40, 20), BigInt::from(137_846_528_820u64));
    }

    #[test]
    fn binomial_recurrence_exhaustive_to_64() {
        let pascal = Pascal::new(64);
        for n in 0..=64u64 {
            for k in 0..=n {
                assert_eq!(binomial(n, k as i64), *pascal.get(n as usize, k as usize));
            }
        }
        // the recurrence itself, as stated
        for n in 1..=64u64 {
            for k in 1..n {
                let lhs = binomial(n, k as i64);
                let rhs = binomial(n - 1, k as i64 - 1) + binomial(n - 1, k as i64);
                assert_eq!(lhs, rhs, "recurrence fails at C({n},{k})");
            }
        }
    }

    #[test]
    fn reduce_mod_p_examples() {
        // 5/128 mod 13 = 4
        let x = Rational::new(BigInt::from(5), BigInt::from(128));
        assert_eq!(reduce_mod_p(&x, 13).unwrap(), 4);
        // 1/32 mod 7 = 2
        let x = Rational::new(BigInt::from(1), BigInt::from(32));
        assert_eq!(reduce_mod_p(&x, 7).unwrap(), 2);
        // zero
        let x = Rational::new(BigInt::zero(), BigInt::one());
        assert_eq!(reduce_mod_p(&x, 7).unwrap(), 0);
    }

    #[test]
    fn reduce_mod_p_rejects_divisible_denominator() {
        let x = Rational::new(BigInt::from(1), BigInt::from(21));
        assert_eq!(
            reduce_mod_p(&x, 7),
            Err(Error::DenominatorDivisibleByP { p: 7 })
        );
    }

    #[test]
    fn factorial_and_pow() {
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(6), BigInt::from(720));
        assert_eq!(int_pow(2, 10), BigInt::from(1024));
        assert_eq!(int_pow(4, 0), BigInt::one());
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-2000i64..2000, 1i64..2000)
            .prop_map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
    }

    proptest! {
        #[test]
        fn field_axioms_on_random_triples(a in arb_rational(), b in arb_rational(), c in arb_rational()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
            prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
            prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
        }

        #[test]
        fn reduction_is_additive(a in arb_rational(), b in arb_rational()) {
            for p in [3u64, 7, 13] {
                let ra = reduce_mod_p(&a, p);
                let rb = reduce_mod_p(&b, p);
                let rsum = reduce_mod_p(&(&a + &b), p);
                if let (Ok(ra), Ok(rb), Ok(rsum)) = (ra, rb, rsum) {
                    prop_assert_eq!((ra + rb) % p, rsum);
                }
            }
        }

        #[test]
        fn rational_canonical_form(a in arb_rational()) {
            use num_integer::Integer;
            prop_assert!(a.denom() > &BigInt::zero());
            prop_assert_eq!(a.numer().gcd(a.denom()), BigInt::one());
        }
    }
}
