//! Dense polynumbers in one and two variables over a pluggable coefficient
//! ring.
//!
//! A polynumber is nothing but its coefficient array: index `i` holds the
//! coefficient of `a^i`, and a 2-polynumber's entry `(i, j)` holds the
//! coefficient of `a^i b^j`. Adding or removing zeroes at the tail leaves the
//! value unchanged, so canonical form trims trailing zeros (and all-zero
//! trailing rows/columns in two dimensions); the zero polynumber is the empty
//! array. Multiplication is the Cauchy product.
//!
//! The two coefficient rings used in practice are exact rationals (for the
//! circular polynumbers whose coefficients feed the summation ladders) and
//! finite-field elements (for evaluation over the affine plane).

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Zero};

use crate::arith::{binomial, BigInt, Rational};
use crate::chromogeometry::{AffinePoint, Dihedron};
use crate::error::{Error, Result};
use crate::finite_field::{Field, FieldElement};

/// A commutative coefficient ring, passed around as a context value so that
/// rings whose elements carry runtime data (a field spec) fit the same shape
/// as constant rings.
pub trait Ring: Clone + PartialEq + fmt::Debug {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
}

/// The field of exact rationals as a coefficient ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Rationals;

impl Ring for Rationals {
    type Elem = Rational;

    fn zero(&self) -> Rational {
        Rational::zero()
    }
    fn one(&self) -> Rational {
        Rational::one()
    }
    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }
    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        a - b
    }
    fn neg(&self, a: &Rational) -> Rational {
        -a
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }
    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }
}

impl Ring for Field {
    type Elem = FieldElement;

    fn zero(&self) -> FieldElement {
        Field::zero(self)
    }
    fn one(&self) -> FieldElement {
        Field::one(self)
    }
    fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        a + b
    }
    fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        a - b
    }
    fn neg(&self, a: &FieldElement) -> FieldElement {
        -a
    }
    fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        a * b
    }
    fn is_zero(&self, a: &FieldElement) -> bool {
        FieldElement::is_zero(a)
    }
}

/// A one-variable polynumber: a finite coefficient list, constant term first.
#[derive(Clone, PartialEq)]
pub struct Polynumber<R: Ring> {
    ring: R,
    coeffs: Vec<R::Elem>,
}

impl<R: Ring> Polynumber<R> {
    pub fn from_coeffs(ring: R, mut coeffs: Vec<R::Elem>) -> Self {
        while coeffs.last().is_some_and(|c| ring.is_zero(c)) {
            coeffs.pop();
        }
        Polynumber { ring, coeffs }
    }

    pub fn zero(ring: R) -> Self {
        Polynumber { ring, coeffs: Vec::new() }
    }

    pub fn one(ring: R) -> Self {
        let one = ring.one();
        Polynumber { ring, coeffs: vec![one] }
    }

    /// `c * a^exp`.
    pub fn monomial(ring: R, c: R::Elem, exp: usize) -> Self {
        if ring.is_zero(&c) {
            return Self::zero(ring);
        }
        let mut coeffs = vec![ring.zero(); exp + 1];
        coeffs[exp] = c;
        Polynumber { ring, coeffs }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn coeffs(&self) -> &[R::Elem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn assert_same_ring(&self, other: &Self) {
        assert!(self.ring == other.ring, "polynumbers over different rings");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_same_ring(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = self.ring.zero();
        let coeffs = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).unwrap_or(&zero);
                let b = other.coeffs.get(i).unwrap_or(&zero);
                self.ring.add(a, b)
            })
            .collect();
        Self::from_coeffs(self.ring.clone(), coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let coeffs = self.coeffs.iter().map(|c| self.ring.neg(c)).collect();
        Polynumber { ring: self.ring.clone(), coeffs }
    }

    pub fn scale(&self, t: &R::Elem) -> Self {
        let coeffs = self.coeffs.iter().map(|c| self.ring.mul(c, t)).collect();
        Self::from_coeffs(self.ring.clone(), coeffs)
    }

    /// Cauchy product.
    pub fn mul(&self, other: &Self) -> Self {
        self.assert_same_ring(other);
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.ring.clone());
        }
        let mut coeffs = vec![self.ring.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if self.ring.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = self.ring.add(&coeffs[i + j], &self.ring.mul(a, b));
            }
        }
        Self::from_coeffs(self.ring.clone(), coeffs)
    }

    pub fn pow(&self, e: u64) -> Self {
        let mut acc = Self::one(self.ring.clone());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Coefficient of `a^n`; indices beyond the degree contribute zero.
    pub fn coefficient_at(&self, n: u64) -> R::Elem {
        usize::try_from(n)
            .ok()
            .and_then(|n| self.coeffs.get(n).cloned())
            .unwrap_or_else(|| self.ring.zero())
    }

    /// Sum of the coefficients at the given indices.
    pub fn ladder_sum(&self, indices: &[u64]) -> R::Elem {
        indices
            .iter()
            .fold(self.ring.zero(), |acc, &i| self.ring.add(&acc, &self.coefficient_at(i)))
    }

    /// Horner evaluation.
    pub fn evaluate(&self, x: &R::Elem) -> R::Elem {
        self.coeffs
            .iter()
            .rev()
            .fold(self.ring.zero(), |acc, c| self.ring.add(&self.ring.mul(&acc, x), c))
    }
}

impl<R: Ring> fmt::Debug for Polynumber<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynumber{:?}", self.coeffs)
    }
}

/// A two-variable polynumber: a finite rectangular grid with entry `(i, j)`
/// the coefficient of `a^i b^j`. Canonical form trims all-zero trailing rows
/// and columns; the zero 2-polynumber is the empty grid.
#[derive(Clone, PartialEq)]
pub struct Polynumber2<R: Ring> {
    ring: R,
    rows: Vec<Vec<R::Elem>>,
}

impl<R: Ring> Polynumber2<R> {
    pub fn from_grid(ring: R, mut rows: Vec<Vec<R::Elem>>) -> Self {
        // rectangularize
        let width = rows.iter().map(Vec::len).max().unwrap_or(0);
        for row in &mut rows {
            while row.len() < width {
                row.push(ring.zero());
            }
        }
        // trim trailing all-zero rows, then trailing all-zero columns
        while rows.last().is_some_and(|r| r.iter().all(|c| ring.is_zero(c))) {
            rows.pop();
        }
        let mut width = rows.first().map_or(0, Vec::len);
        while width > 0 && rows.iter().all(|r| ring.is_zero(&r[width - 1])) {
            width -= 1;
            for row in &mut rows {
                row.pop();
            }
        }
        if width == 0 {
            rows.clear();
        }
        Polynumber2 { ring, rows }
    }

    pub fn zero(ring: R) -> Self {
        Polynumber2 { ring, rows: Vec::new() }
    }

    pub fn one(ring: R) -> Self {
        Self::monomial(ring, None, 0, 0)
    }

    /// `c * a^i b^j`; `None` means the ring's one.
    pub fn monomial(ring: R, c: Option<R::Elem>, i: usize, j: usize) -> Self {
        let c = c.unwrap_or_else(|| ring.one());
        if ring.is_zero(&c) {
            return Self::zero(ring);
        }
        let mut rows = vec![vec![ring.zero(); j + 1]; i + 1];
        rows[i][j] = c;
        Polynumber2 { ring, rows }
    }

    pub fn alpha(ring: R) -> Self {
        Self::monomial(ring, None, 1, 0)
    }

    pub fn beta(ring: R) -> Self {
        Self::monomial(ring, None, 0, 1)
    }

    /// Embed a one-variable polynumber as a polynomial in `a`.
    pub fn from_alpha_poly(p: &Polynumber<R>) -> Self {
        let rows = p.coeffs().iter().map(|c| vec![c.clone()]).collect();
        Self::from_grid(p.ring().clone(), rows)
    }

    /// Embed a one-variable polynumber as a polynomial in `b`.
    pub fn from_beta_poly(p: &Polynumber<R>) -> Self {
        if p.is_zero() {
            return Self::zero(p.ring().clone());
        }
        Self::from_grid(p.ring().clone(), vec![p.coeffs().to_vec()])
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    /// Degree in `a` (row count minus one).
    pub fn alpha_degree(&self) -> Option<usize> {
        self.rows.len().checked_sub(1)
    }

    /// Degree in `b` (column count minus one).
    pub fn beta_degree(&self) -> Option<usize> {
        self.rows.first().map(|r| r.len() - 1)
    }

    pub fn coefficient_at(&self, i: u64, j: u64) -> R::Elem {
        let lookup = || -> Option<&R::Elem> {
            self.rows.get(usize::try_from(i).ok()?)?.get(usize::try_from(j).ok()?)
        };
        lookup().cloned().unwrap_or_else(|| self.ring.zero())
    }

    /// Nonzero entries as `(alpha_exp, beta_exp, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &R::Elem)> + '_ {
        self.rows.iter().enumerate().flat_map(move |(i, row)| {
            row.iter()
                .enumerate()
                .filter(|(_, c)| !self.ring.is_zero(c))
                .map(move |(j, c)| (i, j, c))
        })
    }

    fn assert_same_ring(&self, other: &Self) {
        assert!(self.ring == other.ring, "2-polynumbers over different rings");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_same_ring(other);
        let h = self.rows.len().max(other.rows.len());
        let w = self
            .rows
            .first()
            .map_or(0, Vec::len)
            .max(other.rows.first().map_or(0, Vec::len));
        let zero = self.ring.zero();
        let rows = (0..h)
            .map(|i| {
                (0..w)
                    .map(|j| {
                        let a = self.rows.get(i).and_then(|r| r.get(j)).unwrap_or(&zero);
                        let b = other.rows.get(i).and_then(|r| r.get(j)).unwrap_or(&zero);
                        self.ring.add(a, b)
                    })
                    .collect()
            })
            .collect();
        Self::from_grid(self.ring.clone(), rows)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(|c| self.ring.neg(c)).collect())
            .collect();
        Polynumber2 { ring: self.ring.clone(), rows }
    }

    pub fn scale(&self, t: &R::Elem) -> Self {
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(|c| self.ring.mul(c, t)).collect())
            .collect();
        Self::from_grid(self.ring.clone(), rows)
    }

    /// Two-dimensional Cauchy product:
    /// `(a.b)[i,j] = sum a[s,t] b[i-s, j-t]`.
    pub fn cauchy_mul(&self, other: &Self) -> Self {
        self.assert_same_ring(other);
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.ring.clone());
        }
        let h = self.rows.len() + other.rows.len() - 1;
        let w = self.rows[0].len() + other.rows[0].len() - 1;
        let mut rows = vec![vec![self.ring.zero(); w]; h];
        for (s, arow) in self.rows.iter().enumerate() {
            for (t, a) in arow.iter().enumerate() {
                if self.ring.is_zero(a) {
                    continue;
                }
                for (u, brow) in other.rows.iter().enumerate() {
                    for (v, b) in brow.iter().enumerate() {
                        rows[s + u][t + v] =
                            self.ring.add(&rows[s + u][t + v], &self.ring.mul(a, b));
                    }
                }
            }
        }
        Self::from_grid(self.ring.clone(), rows)
    }

    pub fn pow(&self, e: u64) -> Self {
        let mut acc = Self::one(self.ring.clone());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.cauchy_mul(&base);
            }
            base = base.cauchy_mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Evaluate at `(x, y)` by nested Horner; respects the `0^0 = 1`
    /// convention since no explicit powers are formed.
    pub fn evaluate(&self, x: &R::Elem, y: &R::Elem) -> R::Elem {
        self.rows.iter().rev().fold(self.ring.zero(), |acc, row| {
            let row_val = row
                .iter()
                .rev()
                .fold(self.ring.zero(), |racc, c| self.ring.add(&self.ring.mul(&racc, y), c));
            self.ring.add(&self.ring.mul(&acc, x), &row_val)
        })
    }
}

impl<R: Ring> fmt::Debug for Polynumber2<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynumber2{:?}", self.rows)
    }
}

impl Polynumber2<Field> {
    /// Evaluate at an affine point of the matching field.
    pub fn evaluate_at(&self, pt: &AffinePoint) -> Result<FieldElement> {
        if !self.is_zero() && pt.field() != &self.ring {
            return Err(Error::SpecMismatch);
        }
        Ok(self.evaluate(&pt.x, &pt.y))
    }

    /// Left action of a matrix: substitute
    /// `a -> h11 a + h21 b`, `b -> h12 a + h22 b`.
    ///
    /// Pointwise, evaluation intertwines the actions: the result evaluated at
    /// `[x, y]` equals the original evaluated at `[x, y] . h`.
    pub fn substitute_linear(&self, h: &Dihedron) -> Result<Polynumber2<Field>> {
        if self.is_zero() {
            return Ok(self.clone());
        }
        if h.field() != &self.ring {
            return Err(Error::SpecMismatch);
        }
        let ring = self.ring.clone();
        // a -> h11 a + h21 b and b -> h12 a + h22 b, with h = [[h11, h12], [h21, h22]]
        let sub_alpha = Polynumber2::from_grid(
            ring.clone(),
            vec![vec![ring.zero(), h.c.clone()], vec![h.a.clone(), ring.zero()]],
        );
        let sub_beta = Polynumber2::from_grid(
            ring.clone(),
            vec![vec![ring.zero(), h.d.clone()], vec![h.b.clone(), ring.zero()]],
        );
        let deg_a = self.rows.len() - 1;
        let mut alpha_pows = Vec::with_capacity(deg_a + 1);
        alpha_pows.push(Polynumber2::one(ring.clone()));
        for i in 1..=deg_a {
            alpha_pows.push(alpha_pows[i - 1].cauchy_mul(&sub_alpha));
        }
        let mut acc = Polynumber2::zero(ring.clone());
        for (i, row) in self.rows.iter().enumerate() {
            let mut beta_pow = Polynumber2::one(ring.clone());
            for (j, c) in row.iter().enumerate() {
                if j > 0 {
                    beta_pow = beta_pow.cauchy_mul(&sub_beta);
                }
                if !ring.is_zero(c) {
                    acc = acc.add(&alpha_pows[i].cauchy_mul(&beta_pow).scale(c));
                }
            }
        }
        Ok(acc)
    }
}

/// The polynumber whose evaluation is `1` at the given point and `0` at every
/// other point of the plane: the product of `(t - a)` over `t != a` in `a`,
/// times the same chain in `b`, divided by the chains' value at the point.
pub fn delta_polynumber(pt: &AffinePoint) -> Polynumber2<Field> {
    let field = pt.field().clone();
    let chain = |target: &FieldElement| -> (Polynumber<Field>, FieldElement) {
        let mut poly = Polynumber::one(field.clone());
        let mut value = field.one();
        for t in field.elements() {
            if &t == target {
                continue;
            }
            // factor (t - x)
            poly = poly.mul(&Polynumber::from_coeffs(
                field.clone(),
                vec![t.clone(), field.from_int(-1)],
            ));
            value = &value * &(&t - target);
        }
        (poly, value)
    };
    let (pa, va) = chain(&pt.x);
    let (pb, vb) = chain(&pt.y);
    let norm = (&va * &vb).inv().expect("product of nonzero factors");
    Polynumber2::from_alpha_poly(&pa)
        .cauchy_mul(&Polynumber2::from_beta_poly(&pb))
        .scale(&norm)
}

/// A circular polynumber `((1+a)/2)^k ((1-a)/2)^l`, expanded exactly over
/// the rationals.
#[derive(Clone, Debug, PartialEq)]
pub struct CircularPolynumber {
    pub k: u64,
    pub l: u64,
    pub body: Polynumber<Rationals>,
}

type PowerCache = Mutex<HashMap<(bool, u64), Arc<Polynumber<Rationals>>>>;
type ProductCache = Mutex<HashMap<(u64, u64), Arc<Polynumber<Rationals>>>>;

fn power_cache() -> &'static PowerCache {
    static CACHE: OnceLock<PowerCache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn product_cache() -> &'static ProductCache {
    static CACHE: OnceLock<ProductCache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `((1 +- a)/2)^e` by repeated squaring, memoized per exponent: the ladder
/// suites evaluate thousands of `(k, l)` pairs that share these factors.
fn half_binomial_power(minus: bool, e: u64) -> Arc<Polynumber<Rationals>> {
    if let Some(hit) = power_cache().lock().unwrap().get(&(minus, e)) {
        return hit.clone();
    }
    let result = if e == 0 {
        Arc::new(Polynumber::one(Rationals))
    } else if e == 1 {
        let half = Rational::new(BigInt::one(), BigInt::from(2));
        let lin = if minus { -&half } else { half.clone() };
        Arc::new(Polynumber::from_coeffs(Rationals, vec![half, lin]))
    } else if e % 2 == 0 {
        let h = half_binomial_power(minus, e / 2);
        Arc::new(h.mul(&h))
    } else {
        let h = half_binomial_power(minus, e - 1);
        Arc::new(h.mul(&half_binomial_power(minus, 1)))
    };
    power_cache()
        .lock()
        .unwrap()
        .entry((minus, e))
        .or_insert(result)
        .clone()
}

/// Construct `pi_{k,l} = ((1+a)/2)^k ((1-a)/2)^l`. The expansion is shared
/// through the same cache as the factors (the red and blue ladders query the
/// same pairs).
pub fn circular_polynumber(k: u64, l: u64) -> CircularPolynumber {
    if let Some(hit) = product_cache().lock().unwrap().get(&(k, l)) {
        return CircularPolynumber { k, l, body: Polynumber::clone(hit) };
    }
    let body = half_binomial_power(false, k).mul(&half_binomial_power(true, l));
    let arc = product_cache()
        .lock()
        .unwrap()
        .entry((k, l))
        .or_insert(Arc::new(body))
        .clone();
    CircularPolynumber { k, l, body: Polynumber::clone(&arc) }
}

impl CircularPolynumber {
    pub fn degree(&self) -> u64 {
        self.k + self.l
    }

    pub fn coefficient_at(&self, n: u64) -> Rational {
        self.body.coefficient_at(n)
    }

    pub fn ladder_sum(&self, indices: &[u64]) -> Rational {
        self.body.ladder_sum(indices)
    }
}

/// Krawtchouk value `k_n^{(d)}(m) = sum_l (-1)^l C(m, l) C(d-m, n-l)`,
/// the coefficient of `a^n` in `(1-a)^m (1+a)^{d-m}`.
pub fn krawtchouk_value(n: u64, d: u64, m: u64) -> Result<BigInt> {
    if n > d || m > d {
        return Err(Error::OutOfRange { n, d, m });
    }
    let mut acc = BigInt::zero();
    for l in 0..=n {
        let term = binomial(m, l as i64) * binomial(d - m, n as i64 - l as i64);
        if l % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(acc)
}
