//! The Fourier summation functional and its three evaluation routes.
//!
//! For a color `c` and field `F_q`, the functional maps a 2-polynumber to
//! the normalized sum of its values over the unit circle `S_{c,q}`:
//!
//! ```text
//! psi(pi) = (1/|S|) * sum over [x,y] in S of pi(x, y)
//! ```
//!
//! Routes:
//!
//! * **brute** — enumerate the circle and sum, `O(q)` per monomial;
//! * **closed** — green is a divisibility test; red and blue sum an
//!   equally spaced ladder of coefficients of `pi_{k,l}` around the central
//!   one, exact over the rationals, then reduce mod `p`;
//! * **program** — repeatedly replace an exponent `e = Qq + R` by `Q + R`
//!   until both exponents are below `q` (the value is unchanged because
//!   `x^q = x` on the plane), then apply the closed principal-range formula.
//!
//! The ladder geometry: `w = |S|/2`, radius `R = floor((k+l)/|S|)`, rungs at
//! `m+n+dw` for `|d| <= R`. For `k+l < q-1` only the central rung remains
//! and the value collapses to a circular super Catalan number mod `p`.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::arith::{int_pow, reduce_mod_p, BigInt, Rational};
use crate::chromogeometry::{
    circle_enumerate, off_circle_points, rotation_matrices, Color, UnitCircle,
};
use crate::error::{Error, Result};
use crate::finite_field::{Field, FieldElement};
use crate::polynumber::{circular_polynumber, delta_polynumber, Polynumber2};
use crate::super_catalan::circular_super_catalan;

/// Evaluation route selector.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Brute,
    Closed,
    Program,
    Auto,
}

impl Method {
    pub const ALL: [Method; 4] = [Method::Brute, Method::Closed, Method::Program, Method::Auto];

    pub fn name(self) -> &'static str {
        match self {
            Method::Brute => "brute",
            Method::Closed => "closed",
            Method::Program => "program",
            Method::Auto => "auto",
        }
    }
}

impl std::str::FromStr for Method {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "brute" => Ok(Method::Brute),
            "closed" => Ok(Method::Closed),
            "program" => Ok(Method::Program),
            "auto" => Ok(Method::Auto),
            other => Err(format!("unknown method {other:?}")),
        }
    }
}

/// The rung layout of a closed-form evaluation: rungs at `center + d w` for
/// `|d| <= radius`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LadderPlan {
    pub w: u64,
    pub radius: u64,
    pub center: u64,
    pub indices: Vec<u64>,
}

/// Ladder geometry for red/blue at even exponents `k = 2m`, `l = 2n`;
/// `None` for green or when either exponent is odd.
pub fn ladder_plan(color: Color, field: &Field, k: u64, l: u64) -> Option<LadderPlan> {
    if color == Color::Green || k % 2 == 1 || l % 2 == 1 {
        return None;
    }
    let size = color.circle_size(field);
    let w = size / 2;
    let radius = (k + l) / size;
    let center = (k + l) / 2;
    let indices = (0..=2 * radius).map(|i| center - radius * w + i * w).collect();
    Some(LadderPlan { w, radius, center, indices })
}

fn normalizer(circle: &UnitCircle) -> FieldElement {
    let field = circle.field();
    field
        .from_int(circle.len() as i64)
        .inv()
        .expect("circle sizes are prime to p")
}

/// Brute-force functional over an already enumerated circle.
pub fn psi_brute_over(circle: &UnitCircle, pi: &Polynumber2<Field>) -> Result<FieldElement> {
    let field = circle.field();
    let mut sum = field.zero();
    for pt in circle.points() {
        sum = &sum + &pi.evaluate_at(pt)?;
    }
    Ok(&sum * &normalizer(circle))
}

/// Brute-force evaluation by definition: enumerate the circle and sum.
pub fn psi_brute(color: Color, field: &Field, pi: &Polynumber2<Field>) -> Result<FieldElement> {
    psi_brute_over(&circle_enumerate(color, field), pi)
}

/// Brute-force value on the monomial `a^k b^l` without building a grid.
pub fn psi_brute_monomial(color: Color, field: &Field, k: u64, l: u64) -> FieldElement {
    let circle = circle_enumerate(color, field);
    let mut sum = field.zero();
    for pt in circle.points() {
        sum = &sum + &(&pt.x.pow(k) * &pt.y.pow(l));
    }
    &sum * &normalizer(&circle)
}

/// Green closed form: `1` exactly when `(q - 1) | (k - l)`, else `0`.
pub fn psi_green_closed(field: &Field, k: u64, l: u64) -> FieldElement {
    let size = (field.q() - 1) as i64;
    if (k as i64 - l as i64).rem_euclid(size) == 0 {
        field.one()
    } else {
        field.zero()
    }
}

fn ladder_value_mod_p(field: &Field, k: u64, l: u64, negate: bool, plan: &LadderPlan) -> FieldElement {
    let pi = circular_polynumber(k, l);
    let sum = pi.ladder_sum(&plan.indices);
    let sum = if negate { -sum } else { sum };
    let residue = reduce_mod_p(&sum, field.p()).expect("ladder denominators are powers of two");
    field.from_int(residue as i64)
}

/// Red closed form: zero at odd exponents, otherwise the coefficient ladder
/// of `pi_{k,l}` with `w = (q-1)/2`, reduced mod `p`.
pub fn psi_red_closed(field: &Field, k: u64, l: u64) -> FieldElement {
    match ladder_plan(Color::Red, field, k, l) {
        None => field.zero(),
        Some(plan) => ladder_value_mod_p(field, k, l, false, &plan),
    }
}

/// Blue closed form: zero at odd exponents, otherwise the coefficient ladder
/// of `(-1)^n pi_{k,l}` with `w = (q - (-1/q))/2`, reduced mod `p`.
pub fn psi_blue_closed(field: &Field, k: u64, l: u64) -> FieldElement {
    match ladder_plan(Color::Blue, field, k, l) {
        None => field.zero(),
        Some(plan) => ladder_value_mod_p(field, k, l, (l / 2) % 2 == 1, &plan),
    }
}

/// Closed-form dispatch on color.
pub fn psi_closed(color: Color, field: &Field, k: u64, l: u64) -> FieldElement {
    match color {
        Color::Green => psi_green_closed(field, k, l),
        Color::Red => psi_red_closed(field, k, l),
        Color::Blue => psi_blue_closed(field, k, l),
    }
}

/// One periodicity step on a single exponent: `e = Qq + R` becomes `Q + R`
/// (the identity below `q`).
pub fn periodicity_step(e: u64, q: u64) -> u64 {
    e / q + e % q
}

/// Reduce both exponents below `q`; the functional's value on
/// `a^k b^l` is unchanged at every step.
pub fn periodicity_reduce(k: u64, l: u64, q: u64) -> (u64, u64) {
    *periodicity_chain(k, l, q).last().unwrap()
}

/// The full reduction chain, starting at `(k, l)` and ending at the first
/// pair with both entries below `q`.
pub fn periodicity_chain(k: u64, l: u64, q: u64) -> Vec<(u64, u64)> {
    let mut chain = vec![(k, l)];
    let (mut k, mut l) = (k, l);
    while k >= q || l >= q {
        k = periodicity_step(k, q);
        l = periodicity_step(l, q);
        chain.push((k, l));
    }
    chain
}

/// Result of the exponent-reduction program on `a^{2m} b^{2n}`.
#[derive(Clone, Debug)]
pub struct ProgramOutcome {
    pub m_star: u64,
    pub n_star: u64,
    /// Successive exponent pairs, from `(2m, 2n)` down to `(2m*, 2n*)`.
    pub chain: Vec<(u64, u64)>,
    pub value: FieldElement,
}

/// Evaluate `psi(a^{2m} b^{2n})` by reducing the exponents below `q` and
/// applying the principal-range formula: the central super Catalan term, a
/// doubled rung at `m* + n* + w`, and (red/blue with `-1` a square) a
/// `2/4^{m*+n*}` correction exactly when `m* + n* = 2w`.
pub fn fourier_summation_program(color: Color, field: &Field, m: u64, n: u64) -> ProgramOutcome {
    let q = field.q();
    let chain = periodicity_chain(2 * m, 2 * n, q);
    let &(big_m, big_n) = chain.last().unwrap();
    assert!(big_m % 2 == 0 && big_n % 2 == 0, "reduced exponents stay even");
    let (ms, ns) = (big_m / 2, big_n / 2);

    let value = match color {
        Color::Green => psi_green_closed(field, big_m, big_n),
        Color::Red | Color::Blue => {
            let omega = circular_super_catalan(ms, ns);
            let sign = |r: Rational| if ns % 2 == 1 { -r } else { r };
            let central = if color == Color::Red { sign(omega) } else { omega };

            let (w, has_delta) = match (color, field.jacobi_minus_one()) {
                (Color::Blue, -1) => ((q + 1) / 2, false),
                _ => ((q - 1) / 2, true),
            };
            let pi = circular_polynumber(big_m, big_n);
            let rung = pi.coefficient_at(ms + ns + w) * Rational::from_integer(BigInt::from(2));
            let rung = if color == Color::Blue { sign(rung) } else { rung };

            let mut total = central + rung;
            if has_delta && ms + ns == 2 * w {
                let correction =
                    Rational::new(BigInt::from(2), int_pow(4, ms + ns));
                total += if color == Color::Blue { sign(correction) } else { correction };
            }
            let residue = reduce_mod_p(&total, field.p()).expect("powers of two");
            field.from_int(residue as i64)
        }
    };

    ProgramOutcome { m_star: ms, n_star: ns, chain, value }
}

/// What to evaluate: a single monomial or a general 2-polynumber.
#[derive(Clone, Debug)]
pub enum PsiInput {
    Monomial { k: u64, l: u64 },
    Poly(Polynumber2<Field>),
}

/// A functional evaluation request: color, field, and input.
#[derive(Clone, Debug)]
pub struct PsiRequest {
    pub color: Color,
    pub field: Field,
    pub input: PsiInput,
}

impl PsiRequest {
    pub fn monomial(color: Color, field: &Field, k: u64, l: u64) -> PsiRequest {
        PsiRequest { color, field: field.clone(), input: PsiInput::Monomial { k, l } }
    }

    pub fn poly(color: Color, field: &Field, pi: Polynumber2<Field>) -> Result<PsiRequest> {
        if !pi.is_zero() && pi.ring() != field {
            return Err(Error::SpecMismatch);
        }
        Ok(PsiRequest { color, field: field.clone(), input: PsiInput::Poly(pi) })
    }
}

/// A computed value together with the route diagnostics that produced it.
#[derive(Clone, Debug)]
pub struct PsiEvaluation {
    pub value: FieldElement,
    pub method: Method,
    /// Ladder geometry, present when a single monomial went through a
    /// red/blue coefficient ladder.
    pub ladder: Option<LadderPlan>,
    /// Exponent reduction chain, present on the program route.
    pub chain: Option<Vec<(u64, u64)>>,
}

fn resolve_monomial_method(method: Method, q: u64, k: u64, l: u64) -> Method {
    match method {
        Method::Auto => {
            if k >= q || l >= q {
                Method::Program
            } else {
                Method::Closed
            }
        }
        m => m,
    }
}

fn psi_monomial_with(method: Method, color: Color, field: &Field, k: u64, l: u64) -> PsiEvaluation {
    let resolved = resolve_monomial_method(method, field.q(), k, l);
    match resolved {
        Method::Brute => PsiEvaluation {
            value: psi_brute_monomial(color, field, k, l),
            method: resolved,
            ladder: None,
            chain: None,
        },
        Method::Closed => PsiEvaluation {
            value: psi_closed(color, field, k, l),
            method: resolved,
            ladder: ladder_plan(color, field, k, l),
            chain: None,
        },
        Method::Program => {
            if color != Color::Green && (k % 2 == 1 || l % 2 == 1) {
                return PsiEvaluation {
                    value: field.zero(),
                    method: resolved,
                    ladder: None,
                    chain: None,
                };
            }
            if color == Color::Green {
                let chain = periodicity_chain(k, l, field.q());
                let &(rk, rl) = chain.last().unwrap();
                return PsiEvaluation {
                    value: psi_green_closed(field, rk, rl),
                    method: resolved,
                    ladder: None,
                    chain: Some(chain),
                };
            }
            let outcome = fourier_summation_program(color, field, k / 2, l / 2);
            let ladder = ladder_plan(color, field, 2 * outcome.m_star, 2 * outcome.n_star);
            PsiEvaluation {
                value: outcome.value,
                method: resolved,
                ladder,
                chain: Some(outcome.chain),
            }
        }
        Method::Auto => unreachable!("auto resolves to a concrete method"),
    }
}

/// Evaluate a request by the selected route. A general 2-polynumber goes
/// monomial by monomial through the closed/program routes (the functional is
/// linear), or through one brute-force pass.
pub fn psi(req: &PsiRequest, method: Method) -> Result<PsiEvaluation> {
    match &req.input {
        PsiInput::Monomial { k, l } => {
            Ok(psi_monomial_with(method, req.color, &req.field, *k, *l))
        }
        PsiInput::Poly(pi) => {
            if method == Method::Brute {
                return Ok(PsiEvaluation {
                    value: psi_brute(req.color, &req.field, pi)?,
                    method,
                    ladder: None,
                    chain: None,
                });
            }
            let field = &req.field;
            let mut value = field.zero();
            for (i, j, c) in pi.terms() {
                let part = psi_monomial_with(method, req.color, field, i as u64, j as u64);
                value = &value + &(c * &part.value);
            }
            Ok(PsiEvaluation { value, method, ladder: None, chain: None })
        }
    }
}

/// Configuration of the axiom battery: all randomness is seeded.
#[derive(Clone, Copy, Debug)]
pub struct AxiomConfig {
    pub seed: u64,
    pub locality_cases: usize,
    pub invariance_polys: usize,
    pub max_degree: usize,
}

impl Default for AxiomConfig {
    fn default() -> Self {
        AxiomConfig { seed: 42, locality_cases: 200, invariance_polys: 20, max_degree: 4 }
    }
}

#[derive(Clone, Debug)]
pub struct AxiomEntry {
    pub axiom: &'static str,
    pub detail: String,
    pub passed: bool,
}

/// Outcome of checking normalization, locality, and invariance on concrete
/// instances; failures are entries, not errors.
#[derive(Clone, Debug)]
pub struct AxiomReport {
    pub color: Color,
    pub q: u64,
    pub entries: Vec<AxiomEntry>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomEntry> {
        self.entries.iter().filter(|e| !e.passed)
    }
}

/// A random 2-polynumber with per-variable degree at most `max_degree`.
pub fn random_polynumber(rng: &mut ChaCha8Rng, field: &Field, max_degree: usize) -> Polynumber2<Field> {
    let rows = rng.gen_range(1..=max_degree + 1);
    let cols = rng.gen_range(1..=max_degree + 1);
    let grid = (0..rows)
        .map(|_| {
            (0..cols)
                .map(|_| field.element_from_index(rng.gen_range(0..field.q())))
                .collect()
        })
        .collect();
    Polynumber2::from_grid(field.clone(), grid)
}

/// The color's quadratic form minus one, as a 2-polynumber; it vanishes on
/// the unit circle by definition.
pub fn circle_equation_polynumber(color: Color, field: &Field) -> Polynumber2<Field> {
    let a2 = Polynumber2::monomial(field.clone(), None, 2, 0);
    let b2 = Polynumber2::monomial(field.clone(), None, 0, 2);
    let ab = Polynumber2::monomial(field.clone(), None, 1, 1);
    let form = match color {
        Color::Green => ab,
        Color::Red => a2.sub(&b2),
        Color::Blue => a2.add(&b2),
    };
    form.sub(&Polynumber2::one(field.clone()))
}

/// Run the axiom battery for one `(color, field)` pair.
pub fn axiom_check(color: Color, field: &Field, cfg: &AxiomConfig) -> AxiomReport {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut entries = Vec::new();
    let circle = circle_enumerate(color, field);

    // normalization: psi(1) = 1
    let one_val = psi_brute_over(&circle, &Polynumber2::one(field.clone()))
        .expect("same field by construction");
    entries.push(AxiomEntry {
        axiom: "normalization",
        detail: "psi(1) = 1".into(),
        passed: one_val.is_one(),
    });

    // locality: (form - 1) * sigma vanishes on the circle, so psi must be 0
    let vanishing = circle_equation_polynumber(color, field);
    for case in 0..cfg.locality_cases {
        let sigma = random_polynumber(&mut rng, field, cfg.max_degree);
        let pi = vanishing.cauchy_mul(&sigma);
        let v = psi_brute_over(&circle, &pi).expect("same field");
        entries.push(AxiomEntry {
            axiom: "locality",
            detail: format!("(form - 1) * sigma, case {case}"),
            passed: v.is_zero(),
        });
    }

    // locality: off-circle delta polynumbers evaluate to zero on the circle
    for pt in off_circle_points(&circle) {
        let v = psi_brute_over(&circle, &delta_polynumber(&pt)).expect("same field");
        entries.push(AxiomEntry {
            axiom: "locality",
            detail: format!("delta at off-circle point {pt:?}"),
            passed: v.is_zero(),
        });
    }

    // invariance: psi(h . pi) = psi(pi) for every rotation h
    let rotations = rotation_matrices(color, field);
    for case in 0..cfg.invariance_polys {
        let pi = random_polynumber(&mut rng, field, cfg.max_degree);
        let base = psi_brute_over(&circle, &pi).expect("same field");
        for (ri, h) in rotations.iter().enumerate() {
            let moved = pi.substitute_linear(h).expect("same field");
            let v = psi_brute_over(&circle, &moved).expect("same field");
            entries.push(AxiomEntry {
                axiom: "invariance",
                detail: format!("rotation {ri}, polynumber {case}"),
                passed: v == base,
            });
        }
    }

    AxiomReport { color, q: field.q(), entries }
}
