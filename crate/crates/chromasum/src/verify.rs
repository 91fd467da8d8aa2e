//! Batch verification suites: every identity and cross-check in the crate,
//! runnable over a configurable family of fields.
//!
//! The master check is *oracle equivalence*: for every color and field, the
//! closed-form functional must agree with brute-force summation on every
//! monomial in range. The rest of the suites pin down the supporting
//! structure (identities, circle structure, periodicity, axioms).

use crate::arith::{reduce_mod_p, BigInt, Rational};
use crate::chromogeometry::{
    circle_enumerate, circle_group_law, circle_parametrize, on_circle, rotation_matrices,
    AffinePoint, BlueComplex, Color,
};
use crate::error::Result;
use crate::finite_field::{Field, FieldElement};
use crate::fourier::{
    axiom_check, fourier_summation_program, periodicity_chain, psi_brute_monomial, psi_closed,
    AxiomConfig,
};
use crate::polynumber::{circular_polynumber, krawtchouk_value, Polynumber, Rationals};
use crate::super_catalan::{circular_super_catalan, gmt_identity_check, super_catalan};

/// Outcome of one suite: how many checks ran and which failed.
#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub name: String,
    pub checks: u64,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(name: &str) -> Self {
        SuiteReport { name: name.to_string(), checks: 0, failures: Vec::new() }
    }

    fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(detail());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Build `F_{p^r}` for every `p` in `p_list` and `1 <= r <= max_r`, skipping
/// sizes beyond the ceiling.
pub fn field_family(p_list: &[u64], max_r: u32) -> Result<Vec<Field>> {
    let mut out = Vec::new();
    for &p in p_list {
        for r in 1..=max_r {
            match Field::new(p, r, None) {
                Ok(f) => out.push(f),
                Err(crate::Error::FieldTooLarge { .. }) => break,
                Err(e) => return Err(e),
            }
        }
    }
    Ok(out)
}

/// The eleven fields with `q` in `{3,5,7,9,11,13,17,19,23,25,27}`.
pub fn reference_fields() -> Vec<Field> {
    [(3, 1), (5, 1), (7, 1), (3, 2), (11, 1), (13, 1), (17, 1), (19, 1), (23, 1), (5, 2), (3, 3)]
        .iter()
        .map(|&(p, r)| Field::new(p, r, None).expect("reference fields are constructible"))
        .collect()
}

/// Closed form against brute force on all monomials `0 <= k, l <= max_degree`
/// (default `2q + 2`), for every color and field.
pub fn oracle_suite(fields: &[Field], max_degree: Option<u64>) -> SuiteReport {
    let mut report = SuiteReport::new("oracle");
    for field in fields {
        let q = field.q();
        let limit = max_degree.unwrap_or(2 * q + 2);
        for color in Color::ALL {
            let circle = circle_enumerate(color, field);
            let inv_size = field
                .from_int(circle.len() as i64)
                .inv()
                .expect("circle size is prime to p");
            // incremental power tables keep the brute pass linear per monomial
            let mut x_pows: Vec<FieldElement> =
                circle.points().iter().map(|_| field.one()).collect();
            for k in 0..=limit {
                if k > 0 {
                    for (xp, pt) in x_pows.iter_mut().zip(circle.points()) {
                        *xp = &*xp * &pt.x;
                    }
                }
                let mut xy_pows = x_pows.clone();
                for l in 0..=limit {
                    if l > 0 {
                        for (v, pt) in xy_pows.iter_mut().zip(circle.points()) {
                            *v = &*v * &pt.y;
                        }
                    }
                    let mut sum = field.zero();
                    for v in &xy_pows {
                        sum = &sum + v;
                    }
                    let brute = &sum * &inv_size;
                    let closed = psi_closed(color, field, k, l);
                    report.check(brute == closed, || {
                        format!("psi mismatch: color={color} q={q} k={k} l={l}")
                    });
                }
            }
        }
    }
    report
}

/// Exact identity checks: the central-coefficient identity, the Krawtchouk
/// bridge, recurrences and symmetry, palindromic laws, and the Krawtchouk
/// generating function.
pub fn identities_suite() -> SuiteReport {
    let mut report = SuiteReport::new("identities");

    // central-coefficient identity, m + n <= 20
    for m in 0..=20u64 {
        for n in 0..=(20 - m) {
            report.check(gmt_identity_check(m, n), || {
                format!("central-coefficient identity fails at ({m},{n})")
            });
        }
    }

    // Krawtchouk bridge, m, n <= 12
    for m in 0..=12u64 {
        for n in 0..=12u64 {
            let k = krawtchouk_value(m + n, 2 * (m + n), 2 * m).expect("in range");
            let s = super_catalan(m, n);
            let expect = if m % 2 == 0 { s } else { -s };
            report.check(k == expect, || format!("krawtchouk bridge fails at ({m},{n})"));
        }
    }

    // symmetry, recurrence, Pascal law, m, n <= 20
    for m in 0..=20u64 {
        for n in 0..=20u64 {
            report.check(super_catalan(m, n) == super_catalan(n, m), || {
                format!("symmetry fails at ({m},{n})")
            });
            let four_s = BigInt::from(4) * super_catalan(m, n);
            report.check(
                four_s == super_catalan(m + 1, n) + super_catalan(m, n + 1),
                || format!("recurrence fails at ({m},{n})"),
            );
            report.check(
                circular_super_catalan(m, n)
                    == circular_super_catalan(m + 1, n) + circular_super_catalan(m, n + 1),
                || format!("pascal law fails at ({m},{n})"),
            );
        }
    }

    // palindromic laws, k, l <= 24
    for k in 0..=24u64 {
        for l in 0..=24u64 {
            let p = circular_polynumber(k, l);
            let q = circular_polynumber(l, k);
            let d = k + l;
            for i in 0..=d {
                let mirror = p.coefficient_at(d - i);
                let mirror = if l % 2 == 1 { -mirror } else { mirror };
                report.check(p.coefficient_at(i) == mirror, || {
                    format!("palindromic law fails at ({k},{l}) index {i}")
                });
                let swapped = q.coefficient_at(i);
                let swapped = if i % 2 == 1 { -swapped } else { swapped };
                report.check(p.coefficient_at(i) == swapped, || {
                    format!("swap law fails at ({k},{l}) index {i}")
                });
            }
        }
    }

    // generating function: coefficients of (1-a)^m (1+a)^{d-m}, d <= 20
    let one_minus = Polynumber::from_coeffs(
        Rationals,
        vec![Rational::from_integer(BigInt::from(1)), Rational::from_integer(BigInt::from(-1))],
    );
    let one_plus = Polynumber::from_coeffs(
        Rationals,
        vec![Rational::from_integer(BigInt::from(1)), Rational::from_integer(BigInt::from(1))],
    );
    for d in 0..=20u64 {
        for m in 0..=d {
            let gf = one_minus.pow(m).mul(&one_plus.pow(d - m));
            for n in 0..=d {
                let coeff = gf.coefficient_at(n);
                let expect = Rational::from_integer(krawtchouk_value(n, d, m).expect("in range"));
                report.check(coeff == expect, || {
                    format!("generating function mismatch at d={d} m={m} n={n}")
                });
            }
        }
    }

    report
}

/// Circle structure: sizes, parametrization agreement, cyclicity witnesses,
/// power sums over cyclic subgroups, rotation-group laws, orbit and
/// faithfulness.
pub fn structural_suite(fields: &[Field]) -> SuiteReport {
    let mut report = SuiteReport::new("structural");
    for field in fields {
        let q = field.q();
        for color in Color::ALL {
            let circle = circle_enumerate(color, field);

            report.check(circle.len() as u64 == color.circle_size(field), || {
                format!("circle size mismatch: {color} q={q}")
            });

            let parametrized = circle_parametrize(color, field);
            report.check(parametrized.points() == circle.points(), || {
                format!("parametrization differs from enumeration: {color} q={q}")
            });

            // cyclic witness: some element of full order
            let n = circle.len();
            let identity = color.circle_identity(field);
            let witness = circle.points().iter().any(|g| {
                let mut acc = g.clone();
                let mut order = 1usize;
                while acc != identity {
                    acc = circle_group_law(color, &acc, g).expect("closed");
                    order += 1;
                }
                order == n
            });
            report.check(witness, || format!("no full-order element: {color} q={q}"));
            if color == Color::Blue {
                let expect = if field.jacobi_minus_one() == -1 { q + 1 } else { q - 1 };
                report.check(n as u64 == expect, || {
                    format!("blue circle order mismatch: q={q}")
                });
            }

            // rotations preserve the form, have det 1, and act transitively
            // and faithfully on the circle starting from the identity point
            let form = color.form_matrix(field);
            let rotations = rotation_matrices(color, field);
            let mut orbit = Vec::with_capacity(rotations.len());
            for h in &rotations {
                report.check(h.det().is_one(), || format!("det != 1: {color} q={q}"));
                report.check(h.mul(&form).mul(&h.transpose()) == form, || {
                    format!("form not preserved: {color} q={q}")
                });
                orbit.push(identity.act(h).key());
            }
            orbit.sort_unstable();
            let mut expected: Vec<(u64, u64)> =
                circle.points().iter().map(AffinePoint::key).collect();
            expected.sort_unstable();
            report.check(orbit == expected, || {
                format!("orbit is not the whole circle (or repeats): {color} q={q}")
            });

            // every circle point satisfies its defining equation
            report.check(circle.points().iter().all(|pt| on_circle(color, pt)), || {
                format!("point off circle: {color} q={q}")
            });
        }

        // power sums over every cyclic subgroup of F_q^x of order <= 28
        let g = field.multiplicative_generator();
        let mut divisors: Vec<u64> = (1..=q - 1).filter(|d| (q - 1) % d == 0).collect();
        divisors.retain(|&n| n <= 28);
        for n in divisors {
            let gen = g.pow((q - 1) / n);
            let members: Vec<FieldElement> = (0..n).map(|i| gen.pow(i)).collect();
            for k in 0..=3 * n {
                let mut sum = field.zero();
                for t in &members {
                    sum = &sum + &t.pow(k);
                }
                let expect =
                    if k % n == 0 { field.from_int(n as i64) } else { field.zero() };
                report.check(sum == expect, || {
                    format!("power sum fails: q={q} subgroup order {n} k={k}")
                });
            }
        }

        // blue circle as a cyclic subgroup of the quadratic extension when
        // -1 is not a square
        if field.jacobi_minus_one() == -1 {
            let circle = circle_enumerate(Color::Blue, field);
            let n = circle.len() as u64;
            if n <= 28 {
                for k in 0..=3 * n {
                    let mut sum_x = field.zero();
                    let mut sum_y = field.zero();
                    for pt in circle.points() {
                        let z = BlueComplex::new(pt.x.clone(), pt.y.clone()).pow(k);
                        sum_x = &sum_x + &z.x;
                        sum_y = &sum_y + &z.y;
                    }
                    let expect_x =
                        if k % n == 0 { field.from_int(n as i64) } else { field.zero() };
                    report.check(sum_x == expect_x && sum_y.is_zero(), || {
                        format!("extension power sum fails: q={q} k={k}")
                    });
                }
                // for prime fields, cross-check inside F_{p^2} built with
                // modulus x^2 + 1
                if field.r() == 1 && field.p() * field.p() <= crate::finite_field::q_ceiling() {
                    let ext = Field::new(field.p(), 2, Some(&[1, 0, 1]))
                        .expect("x^2 + 1 irreducible when -1 is not a square");
                    for k in 0..=3 * n {
                        let mut sum = ext.zero();
                        for pt in circle.points() {
                            let z = ext
                                .element(&[pt.x.coeffs()[0] as i64, pt.y.coeffs()[0] as i64])
                                .expect("two coefficients");
                            sum = &sum + &z.pow(k);
                        }
                        let expect =
                            if k % n == 0 { ext.from_int(n as i64) } else { ext.zero() };
                        report.check(sum == expect, || {
                            format!("F_p^2 power sum fails: q={q} k={k}")
                        });
                    }
                }
            }
        }
    }
    report
}

/// Periodicity: the reduction chain preserves the brute-force value at every
/// intermediate step, and the summation program agrees with brute force.
pub fn periodicity_suite(fields: &[Field]) -> SuiteReport {
    let mut report = SuiteReport::new("periodicity");
    for field in fields {
        let q = field.q();
        let samples = [
            (q + 1, 2 * q),
            (2 * q + 2, q + 3),
            (3 * q + 1, q * q),
            (5, 4 * q + 2),
            (q - 1, q - 1),
        ];
        for color in Color::ALL {
            for &(k, l) in &samples {
                let chain = periodicity_chain(k, l, q);
                let base = psi_brute_monomial(color, field, k, l);
                for &(ck, cl) in &chain {
                    report.check(psi_brute_monomial(color, field, ck, cl) == base, || {
                        format!("periodicity breaks: {color} q={q} ({k},{l}) -> ({ck},{cl})")
                    });
                }
                let &(fk, fl) = chain.last().unwrap();
                report.check(fk < q && fl < q, || {
                    format!("reduction did not reach the principal range: q={q} ({k},{l})")
                });
            }
            // the program route against brute force on even monomials
            for m in 0..q {
                for n in [0, 1, q / 2, q - 1, q, 2 * q + 1] {
                    let out = fourier_summation_program(color, field, m, n);
                    let brute = psi_brute_monomial(color, field, 2 * m, 2 * n);
                    report.check(out.value == brute, || {
                        format!("program mismatch: {color} q={q} m={m} n={n}")
                    });
                    report.check(
                        out.chain.iter().all(|&(a, b)| a % 2 == 0 && b % 2 == 0),
                        || format!("odd intermediate exponent: {color} q={q} m={m} n={n}"),
                    );
                }
            }
        }
    }
    report
}

/// The axiom battery over every color of every field.
pub fn axioms_suite(fields: &[Field], seed: u64) -> SuiteReport {
    let mut report = SuiteReport::new("axioms");
    let cfg = AxiomConfig { seed, ..AxiomConfig::default() };
    for field in fields {
        for color in Color::ALL {
            let ax = axiom_check(color, field, &cfg);
            report.checks += ax.entries.len() as u64;
            for failure in ax.failures() {
                report
                    .failures
                    .push(format!("{color} q={}: {} {}", field.q(), failure.axiom, failure.detail));
            }
        }
    }
    report
}

/// Prime-subfield stability: monomial values with `k + l < p - 1` are
/// residues in the prime subfield, identical across extension degrees.
pub fn subfield_stability_suite(p_list: &[u64], max_r: u32) -> SuiteReport {
    let mut report = SuiteReport::new("subfield-stability");
    for &p in p_list {
        let fields = match field_family(&[p], max_r) {
            Ok(f) => f,
            Err(e) => {
                report.checks += 1;
                report.failures.push(format!("field construction failed for p={p}: {e}"));
                continue;
            }
        };
        for k in 0..p {
            for l in 0..p {
                if k + l >= p - 1 {
                    continue;
                }
                for color in Color::ALL {
                    let residues: Vec<Option<u64>> = fields
                        .iter()
                        .map(|f| psi_closed(color, f, k, l).as_prime_residue())
                        .collect();
                    report.check(
                        residues.iter().all(|r| r.is_some() && *r == residues[0]),
                        || format!("subfield stability fails: p={p} {color} k={k} l={l}"),
                    );
                }
            }
        }
    }
    report
}

/// Vanishing at odd exponents and the small-degree collapse to circular
/// super Catalan residues.
pub fn small_degree_suite(fields: &[Field]) -> SuiteReport {
    let mut report = SuiteReport::new("small-degree");
    for field in fields {
        let q = field.q();
        let p = field.p();
        for k in 0..q {
            for l in 0..q {
                if k % 2 == 1 || l % 2 == 1 {
                    report.check(
                        psi_closed(Color::Red, field, k, l).is_zero()
                            && psi_closed(Color::Blue, field, k, l).is_zero(),
                        || format!("odd-exponent value nonzero: q={q} k={k} l={l}"),
                    );
                    continue;
                }
                if k + l >= q - 1 {
                    continue;
                }
                let (m, n) = (k / 2, l / 2);
                let omega = circular_super_catalan(m, n);
                let omega_mod = reduce_mod_p(&omega, p).expect("power-of-two denominator");
                let signed = if n % 2 == 1 { (p - omega_mod) % p } else { omega_mod };
                report.check(
                    psi_closed(Color::Red, field, k, l) == field.from_int(signed as i64),
                    || format!("red small-degree law fails: q={q} k={k} l={l}"),
                );
                report.check(
                    psi_closed(Color::Blue, field, k, l) == field.from_int(omega_mod as i64),
                    || format!("blue small-degree law fails: q={q} k={k} l={l}"),
                );
            }
        }
    }
    report
}
