//! Finite fields `F_q`, `q = p^r` with `p` an odd prime.
//!
//! A field is the quotient of the univariate polynomial ring over `F_p` by a
//! monic irreducible modulus of degree `r`. Elements are length-`r`
//! coefficient vectors, constant term first. When no modulus is supplied the
//! lexicographically smallest monic irreducible is selected, so element
//! encodings are reproducible across runs.
//!
//! Cross-field arithmetic is a hard error: elements carry a handle to their
//! spec and the operators panic on a mismatch rather than coerce.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Default upper bound on `q`; circles are enumerated in `O(q)`.
pub const DEFAULT_Q_CEILING: u64 = 1 << 16;

/// Current ceiling on the field size, overridable via `CHROMASUM_Q_CEILING`.
pub fn q_ceiling() -> u64 {
    std::env::var("CHROMASUM_Q_CEILING")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_Q_CEILING)
}

/// Construction data of `F_{p^r}`: characteristic, extension degree, and the
/// monic irreducible modulus (degree `r`, constant term first).
#[derive(Debug, PartialEq, Eq)]
pub struct FieldSpec {
    pub p: u64,
    pub r: u32,
    pub q: u64,
    pub modulus: Vec<u64>,
}

/// Cheap shareable handle to a [`FieldSpec`].
#[derive(Clone)]
pub struct Field(Arc<FieldSpec>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || *self.0 == *other.0
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.0.q)
    }
}

/// An element of `F_{p^r}` as a length-`r` residue vector, constant term
/// first.
#[derive(Clone)]
pub struct FieldElement {
    field: Field,
    coeffs: Vec<u64>,
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.coeffs == other.coeffs
    }
}

impl Eq for FieldElement {}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

// --- dense polynomial arithmetic over F_p, used only for modulus checks ---

mod fp_poly {
    /// Trim trailing zeros.
    pub fn norm(mut a: Vec<u64>) -> Vec<u64> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    pub fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &ai) in a.iter().enumerate() {
            for (j, &bj) in b.iter().enumerate() {
                out[i + j] = ((out[i + j] as u128 + ai as u128 * bj as u128) % p as u128) as u64;
            }
        }
        norm(out)
    }

    /// Remainder of `a` modulo the monic polynomial `m`.
    pub fn rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
        let mut a = a.to_vec();
        let dm = m.len() - 1;
        while a.len() > dm {
            let lead = *a.last().unwrap();
            let shift = a.len() - 1 - dm;
            if lead != 0 {
                for (i, &mi) in m.iter().enumerate() {
                    let sub = (lead as u128 * mi as u128) % p as u128;
                    let idx = shift + i;
                    a[idx] = ((a[idx] as u128 + p as u128 * p as u128 - sub) % p as u128) as u64;
                }
            }
            a.pop();
        }
        norm(a)
    }

    /// `x^e mod m` by square-and-multiply.
    pub fn x_pow_mod(e: u64, m: &[u64], p: u64) -> Vec<u64> {
        let mut result = vec![1u64];
        let mut base = rem(&[0, 1], m, p);
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = rem(&mul(&result, &base, p), m, p);
            }
            base = rem(&mul(&base, &base, p), m, p);
            e >>= 1;
        }
        result
    }

    pub fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let n = a.len().max(b.len());
        let out = (0..n)
            .map(|i| {
                let ai = a.get(i).copied().unwrap_or(0);
                let bi = b.get(i).copied().unwrap_or(0);
                (ai + p - bi) % p
            })
            .collect();
        norm(out)
    }

    pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let (mut a, mut b) = (norm(a.to_vec()), norm(b.to_vec()));
        while !b.is_empty() {
            // make b monic so `rem` applies
            let lead = *b.last().unwrap();
            let inv = crate::arith::mod_inverse(lead, p).unwrap();
            let monic: Vec<u64> =
                b.iter().map(|&c| ((c as u128 * inv as u128) % p as u128) as u64).collect();
            let r = rem(&a, &monic, p);
            a = b;
            b = r;
        }
        a
    }
}

/// Rabin's test: monic `m` of degree `r` is irreducible over `F_p` iff
/// `x^{p^r} = x (mod m)` and `gcd(x^{p^{r/l}} - x, m) = 1` for each prime
/// `l | r`.
fn is_irreducible(m: &[u64], p: u64, r: u32) -> bool {
    for l in prime_factors(r as u64) {
        let d = r as u64 / l;
        let e = p.pow(d as u32);
        let xp = fp_poly::x_pow_mod(e, m, p);
        let diff = fp_poly::sub(&xp, &[0, 1], p);
        let g = fp_poly::gcd(m, &diff, p);
        if g.len() != 1 {
            return false;
        }
    }
    let xq = fp_poly::x_pow_mod(p.pow(r), m, p);
    let x_reduced = fp_poly::rem(&[0, 1], m, p);
    fp_poly::sub(&xq, &x_reduced, p).is_empty()
}

impl Field {
    /// Construct `F_{p^r}`. If `modulus` is omitted, the lexicographically
    /// smallest monic irreducible of degree `r` is selected (coefficients
    /// scanned constant term first, values `0..p`). A supplied modulus may
    /// have any invertible leading coefficient; it is normalized to monic.
    pub fn new(p: u64, r: u32, modulus: Option<&[i64]>) -> Result<Field> {
        if p == 2 {
            return Err(Error::EvenCharacteristic);
        }
        if p < 3 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if r == 0 {
            return Err(Error::BadModulus("extension degree must be positive".into()));
        }
        let ceiling = q_ceiling();
        let q = p
            .checked_pow(r)
            .ok_or(Error::FieldTooLarge { q: u64::MAX, ceiling })?;
        if q > ceiling {
            return Err(Error::FieldTooLarge { q, ceiling });
        }

        let modulus = match modulus {
            Some(m) => {
                let mut m: Vec<u64> = m.iter().map(|&c| c.rem_euclid(p as i64) as u64).collect();
                m = fp_poly::norm(m);
                if m.len() != r as usize + 1 {
                    return Err(Error::BadModulus(format!(
                        "modulus must have degree {r}, got degree {}",
                        m.len().max(1) - 1
                    )));
                }
                let lead = *m.last().unwrap();
                let inv = crate::arith::mod_inverse(lead, p)
                    .ok_or_else(|| Error::BadModulus("leading coefficient is zero".into()))?;
                for c in &mut m {
                    *c = ((*c as u128 * inv as u128) % p as u128) as u64;
                }
                if !is_irreducible(&m, p, r) {
                    return Err(Error::NotIrreducible { p });
                }
                m
            }
            None => Self::smallest_irreducible(p, r),
        };

        Ok(Field(Arc::new(FieldSpec { p, r, q, modulus })))
    }

    /// Prime field `F_p` with modulus `x`.
    pub fn prime(p: u64) -> Result<Field> {
        Field::new(p, 1, None)
    }

    fn smallest_irreducible(p: u64, r: u32) -> Vec<u64> {
        let r = r as usize;
        let mut lower = vec![0u64; r];
        loop {
            let mut m = lower.clone();
            m.push(1);
            if is_irreducible(&m, p, r as u32) {
                return m;
            }
            // increment the base-p counter, constant term fastest
            let mut wrapped = true;
            for digit in lower.iter_mut() {
                *digit += 1;
                if *digit < p {
                    wrapped = false;
                    break;
                }
                *digit = 0;
            }
            assert!(!wrapped, "no monic irreducible of degree {r} over F_{p}");
        }
    }

    pub fn p(&self) -> u64 {
        self.0.p
    }

    pub fn r(&self) -> u32 {
        self.0.r
    }

    pub fn q(&self) -> u64 {
        self.0.q
    }

    pub fn modulus(&self) -> &[u64] {
        &self.0.modulus
    }

    /// Jacobi symbol of `-1`: `(+1 if p = 1 mod 4 else -1)^r`. Equals `+1`
    /// exactly when `-1` is a square in `F_q`.
    pub fn jacobi_minus_one(&self) -> i64 {
        if self.0.p % 4 == 1 || self.0.r % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement { field: self.clone(), coeffs: vec![0; self.0.r as usize] }
    }

    pub fn one(&self) -> FieldElement {
        self.from_int(1)
    }

    /// Embed an integer via the prime subfield.
    pub fn from_int(&self, t: i64) -> FieldElement {
        let mut coeffs = vec![0; self.0.r as usize];
        coeffs[0] = t.rem_euclid(self.0.p as i64) as u64;
        FieldElement { field: self.clone(), coeffs }
    }

    /// Element from raw coefficients (constant term first); entries are
    /// reduced mod `p` and the vector padded or rejected by length.
    pub fn element(&self, coeffs: &[i64]) -> Result<FieldElement> {
        if coeffs.len() > self.0.r as usize {
            return Err(Error::BadPolynumber(format!(
                "element needs at most {} coefficients, got {}",
                self.0.r,
                coeffs.len()
            )));
        }
        let mut full = vec![0; self.0.r as usize];
        for (i, &c) in coeffs.iter().enumerate() {
            full[i] = c.rem_euclid(self.0.p as i64) as u64;
        }
        Ok(FieldElement { field: self.clone(), coeffs: full })
    }

    /// The element whose coefficient vector is the base-`p` expansion of
    /// `idx`, constant term = least significant digit. Indices `0..q`
    /// enumerate the field; this is also the canonical ordering key.
    pub fn element_from_index(&self, idx: u64) -> FieldElement {
        debug_assert!(idx < self.0.q);
        let mut coeffs = vec![0; self.0.r as usize];
        let mut v = idx;
        for c in coeffs.iter_mut() {
            *c = v % self.0.p;
            v /= self.0.p;
        }
        FieldElement { field: self.clone(), coeffs }
    }

    /// All elements of the field in canonical (index) order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.0.q).map(move |i| self.element_from_index(i))
    }

    /// A generator of the cyclic group `F_q^x`, found by scanning elements in
    /// canonical order and checking `g^((q-1)/l) != 1` for each prime
    /// `l | q - 1`.
    pub fn multiplicative_generator(&self) -> FieldElement {
        let n = self.0.q - 1;
        let factors = prime_factors(n);
        for idx in 1..self.0.q {
            let g = self.element_from_index(idx);
            if factors.iter().all(|&l| !g.pow(n / l).is_one()) {
                return g;
            }
        }
        unreachable!("F_q^x is cyclic, a generator always exists")
    }
}

impl FieldElement {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == 1 && self.coeffs[1..].iter().all(|&c| c == 0)
    }

    /// Canonical ordering key: the base-`p` value of the coefficient vector.
    pub fn index(&self) -> u64 {
        let p = self.field.p();
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * p + c)
    }

    /// Residue in the prime subfield, if the element lies there.
    pub fn as_prime_residue(&self) -> Option<u64> {
        if self.coeffs[1..].iter().all(|&c| c == 0) {
            Some(self.coeffs[0])
        } else {
            None
        }
    }

    fn assert_same_field(&self, other: &FieldElement) {
        assert!(
            self.field == other.field,
            "cross-field arithmetic: {:?} vs {:?}",
            self.field,
            other.field
        );
    }

    pub fn add(&self, other: &FieldElement) -> FieldElement {
        self.assert_same_field(other);
        let p = self.field.p();
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| (a + b) % p)
            .collect();
        FieldElement { field: self.field.clone(), coeffs }
    }

    pub fn sub(&self, other: &FieldElement) -> FieldElement {
        self.assert_same_field(other);
        let p = self.field.p();
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| (a + p - b) % p)
            .collect();
        FieldElement { field: self.field.clone(), coeffs }
    }

    pub fn neg(&self) -> FieldElement {
        let p = self.field.p();
        let coeffs = self.coeffs.iter().map(|&a| (p - a) % p).collect();
        FieldElement { field: self.field.clone(), coeffs }
    }

    pub fn mul(&self, other: &FieldElement) -> FieldElement {
        self.assert_same_field(other);
        let p = self.field.p();
        let r = self.field.r() as usize;
        if r == 1 {
            let v = (self.coeffs[0] as u128 * other.coeffs[0] as u128) % p as u128;
            return FieldElement { field: self.field.clone(), coeffs: vec![v as u64] };
        }
        let mut prod = vec![0u64; 2 * r - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                prod[i + j] = ((prod[i + j] as u128 + a as u128 * b as u128) % p as u128) as u64;
            }
        }
        // reduce by the monic modulus
        let m = self.field.modulus();
        for i in (r..prod.len()).rev() {
            let lead = prod[i];
            if lead != 0 {
                prod[i] = 0;
                for (j, &mj) in m[..r].iter().enumerate() {
                    let idx = i - r + j;
                    let sub = (lead as u128 * mj as u128) % p as u128;
                    prod[idx] =
                        ((prod[idx] as u128 + p as u128 * p as u128 - sub) % p as u128) as u64;
                }
            }
        }
        prod.truncate(r);
        FieldElement { field: self.field.clone(), coeffs: prod }
    }

    /// `self^e` with the convention `x^0 = 1` (including `0^0 = 1`).
    pub fn pow(&self, mut e: u64) -> FieldElement {
        let mut acc = self.field.one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inv(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(self.field.q() - 2))
    }
}

impl std::ops::Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        FieldElement::add(self, rhs)
    }
}

impl std::ops::Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        FieldElement::sub(self, rhs)
    }
}

impl std::ops::Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        FieldElement::mul(self, rhs)
    }
}

impl std::ops::Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement::neg(self)
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.field.r() == 1 {
            return write!(f, "{}", self.coeffs[0]);
        }
        let mut terms = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let t = match (i, c) {
                (0, c) => format!("{c}"),
                (1, 1) => "a".to_string(),
                (1, c) => format!("{c}a"),
                (i, 1) => format!("a^{i}"),
                (i, c) => format!("{c}a^{i}"),
            };
            terms.push(t);
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join("+"))
        }
    }
}

/// Parse the flag/file format `p=3,r=3,modulus=1,1,0,-1` (modulus optional,
/// coefficients constant term first).
pub fn parse_field_spec(s: &str) -> Result<Field> {
    let mut p: Option<u64> = None;
    let mut r: u32 = 1;
    let mut modulus: Option<Vec<i64>> = None;
    let mut rest = s.trim();
    while !rest.is_empty() {
        let (key, tail) = rest
            .split_once('=')
            .ok_or_else(|| Error::BadFieldSpec(format!("expected key=value in {rest:?}")))?;
        match key.trim() {
            "p" => {
                let (v, t) = split_head(tail);
                p = Some(v.trim().parse().map_err(|_| Error::BadFieldSpec(s.into()))?);
                rest = t;
            }
            "r" => {
                let (v, t) = split_head(tail);
                r = v.trim().parse().map_err(|_| Error::BadFieldSpec(s.into()))?;
                rest = t;
            }
            "modulus" => {
                // the modulus consumes the remainder of the string
                let coeffs = tail
                    .split(',')
                    .map(|c| c.trim().parse::<i64>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|_| Error::BadFieldSpec(s.into()))?;
                modulus = Some(coeffs);
                rest = "";
            }
            other => return Err(Error::BadFieldSpec(format!("unknown key {other:?}"))),
        }
    }
    let p = p.ok_or_else(|| Error::BadFieldSpec("missing p".into()))?;
    Field::new(p, r, modulus.as_deref())
}

fn split_head(s: &str) -> (&str, &str) {
    match s.split_once(',') {
        Some((head, tail)) => (head, tail),
        None => (s, ""),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_uses_modulus_x() {
        let f = Field::new(13, 1, None).unwrap();
        assert_eq!(f.q(), 13);
        assert_eq!(f.modulus(), &[0, 1]);
    }

    #[test]
    fn rejects_bad_characteristic() {
        assert_eq!(Field::new(2, 1, None), Err(Error::EvenCharacteristic));
        assert_eq!(Field::new(9, 1, None), Err(Error::NotPrime(9)));
        assert_eq!(Field::new(1, 1, None), Err(Error::NotPrime(1)));
    }

    #[test]
    fn accepts_supplied_cubic_modulus_for_f27() {
        // 1 + x - x^3, normalized monic
        let f = Field::new(3, 3, Some(&[1, 1, 0, -1])).unwrap();
        assert_eq!(f.q(), 27);
        assert_eq!(f.modulus(), &[2, 2, 0, 1]); // x^3 - x - 1
    }

    #[test]
    fn rejects_reducible_modulus() {
        // x^2 - 1 = (x-1)(x+1) over F_7
        assert_eq!(
            Field::new(7, 2, Some(&[-1, 0, 1])),
            Err(Error::NotIrreducible { p: 7 })
        );
    }

    #[test]
    fn default_quadratic_modulus_has_no_roots() {
        // exhaustive irreducibility scan for the chosen degree-2 modulus
        let f = Field::new(7, 2, None).unwrap();
        let m = f.modulus().to_vec();
        for t in 0..7u64 {
            let val = (m[0] + m[1] * t + m[2] * t * t) % 7;
            assert_ne!(val, 0, "default modulus has root {t} in F_7");
        }
    }

    #[test]
    fn jacobi_examples() {
        assert_eq!(Field::prime(13).unwrap().jacobi_minus_one(), 1);
        assert_eq!(Field::prime(7).unwrap().jacobi_minus_one(), -1);
        assert_eq!(Field::new(3, 3, None).unwrap().jacobi_minus_one(), -1);
        assert_eq!(Field::new(3, 2, None).unwrap().jacobi_minus_one(), 1);
    }

    #[test]
    fn jacobi_agrees_with_square_scan() {
        for (p, r) in [(3, 1), (5, 1), (7, 1), (3, 2), (13, 1), (17, 1), (5, 2), (3, 3)] {
            let f = Field::new(p, r, None).unwrap();
            let minus_one = f.from_int(-1);
            let is_square = f.elements().skip(1).any(|a| a.pow(2) == minus_one);
            assert_eq!(f.jacobi_minus_one() == 1, is_square, "q = {}", f.q());
        }
    }

    #[test]
    fn squares_have_exactly_half_the_nonzero_elements() {
        for (p, r) in [(3, 1), (5, 1), (7, 1), (3, 2), (13, 1), (17, 1), (5, 2), (3, 3)] {
            let f = Field::new(p, r, None).unwrap();
            let mut squares: Vec<u64> = f.elements().skip(1).map(|a| a.pow(2).index()).collect();
            squares.sort_unstable();
            squares.dedup();
            assert_eq!(squares.len() as u64, (f.q() - 1) / 2, "q = {}", f.q());
        }
    }

    #[test]
    fn inverses_exhaustive_f9() {
        let f = Field::new(3, 2, None).unwrap();
        for a in f.elements().skip(1) {
            assert!((&a * &a.inv().unwrap()).is_one());
        }
        assert_eq!(f.zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn frobenius_fixes_f27() {
        let f = Field::new(3, 3, None).unwrap();
        for a in f.elements() {
            assert_eq!(a.pow(27), a);
        }
    }

    #[test]
    fn field_axioms_exhaustive_up_to_q27() {
        for (p, r) in
            [(3, 1), (5, 1), (7, 1), (3, 2), (11, 1), (13, 1), (17, 1), (19, 1), (23, 1), (5, 2), (3, 3)]
        {
            let f = Field::new(p, r, None).unwrap();
            let els: Vec<_> = f.elements().collect();
            for a in &els {
                for b in &els {
                    assert_eq!(a + b, b + a);
                    assert_eq!(a * b, b * a);
                    for c in &els {
                        assert_eq!(&(a + b) + c, a + &(b + c));
                        assert_eq!(&(a * b) * c, a * &(b * c));
                        assert_eq!(a * &(b + c), &(a * b) + &(a * c));
                    }
                }
            }
        }
    }

    #[test]
    fn generator_for_f13_is_2() {
        let f = Field::prime(13).unwrap();
        let g = f.multiplicative_generator();
        assert_eq!(g.index(), 2);
        // exhaustive order computation
        let mut order = 1;
        let mut acc = g.clone();
        while !acc.is_one() {
            acc = &acc * &g;
            order += 1;
        }
        assert_eq!(order, 12);
    }

    #[test]
    fn generator_for_f3_and_f9() {
        assert_eq!(Field::prime(3).unwrap().multiplicative_generator().index(), 2);
        let f9 = Field::new(3, 2, None).unwrap();
        let g = f9.multiplicative_generator();
        let mut order = 1;
        let mut acc = g.clone();
        while !acc.is_one() {
            acc = &acc * &g;
            order += 1;
        }
        assert_eq!(order, 8);
    }

    #[test]
    fn example_1_1_monomial_sum() {
        // -(2^2 6^6 + 2^2 7^6 + 11^2 6^6 + 11^2 7^6 + 6^2 2^6 + 7^2 2^6 + 6^2 11^6 + 7^2 11^6) = 4
        let f = Field::prime(13).unwrap();
        let term =
            |x: i64, y: i64, k: u64, l: u64| &f.from_int(x).pow(k) * &f.from_int(y).pow(l);
        let pairs = [(2, 6), (2, 7), (11, 6), (11, 7), (6, 2), (7, 2), (6, 11), (7, 11)];
        let mut sum = f.zero();
        for (x, y) in pairs {
            sum = &sum + &term(x, y, 2, 6);
        }
        assert_eq!(sum.neg(), f.from_int(4));
    }

    #[test]
    fn subfield_embedding_is_homomorphic() {
        let f = Field::new(5, 2, None).unwrap();
        for a in -6i64..6 {
            for b in -6i64..6 {
                assert_eq!(f.from_int(a + b), &f.from_int(a) + &f.from_int(b));
                assert_eq!(f.from_int(a * b), &f.from_int(a) * &f.from_int(b));
            }
        }
    }

    #[test]
    fn parse_spec_strings() {
        let f = parse_field_spec("p=3,r=3,modulus=1,1,0,-1").unwrap();
        assert_eq!(f.q(), 27);
        let f = parse_field_spec("p=13").unwrap();
        assert_eq!(f.q(), 13);
        assert!(parse_field_spec("r=2").is_err());
        assert!(parse_field_spec("p=abc").is_err());
    }

    #[test]
    fn ceiling_is_enforced() {
        // 2^16 < 3^11
        match Field::new(3, 11, None) {
            Err(Error::FieldTooLarge { .. }) => {}
            other => panic!("expected FieldTooLarge, got {other:?}"),
        }
    }
}
