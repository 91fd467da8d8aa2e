//! The three colored planar geometries and their unit circles.
//!
//! Blue, red, and green carry the quadratic forms `x^2 + y^2`, `x^2 - y^2`,
//! and `xy`. Each unit circle is simultaneously a commutative group (via the
//! colored complex-number identification inside the 2x2 matrix algebra) and
//! the rotation group preserving the color's bilinear form.
//!
//! Circle points are stored in `[x, y]` coordinates satisfying the defining
//! equation of their color; the matrix identification is applied only when
//! producing rotation matrices.

use std::fmt;

use crate::error::{Error, Result};
use crate::finite_field::{Field, FieldElement};

/// One of the three metrical geometries on the affine plane.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Color {
    Green,
    Red,
    Blue,
}

impl Color {
    pub const ALL: [Color; 3] = [Color::Green, Color::Red, Color::Blue];

    pub fn name(self) -> &'static str {
        match self {
            Color::Green => "green",
            Color::Red => "red",
            Color::Blue => "blue",
        }
    }

    /// Size of the unit circle over `F_q`: `q - 1` for green and red,
    /// `q - (-1/q)` for blue.
    pub fn circle_size(self, field: &Field) -> u64 {
        match self {
            Color::Green | Color::Red => field.q() - 1,
            Color::Blue => (field.q() as i64 - field.jacobi_minus_one()) as u64,
        }
    }

    /// The symmetric matrix of the color's bilinear form.
    pub fn form_matrix(self, field: &Field) -> Dihedron {
        let half = field.from_int(2).inv().expect("2 != 0 in odd characteristic");
        match self {
            Color::Green => Dihedron::new(field.zero(), half.clone(), half, field.zero()),
            Color::Red => Dihedron::new(field.one(), field.zero(), field.zero(), field.from_int(-1)),
            Color::Blue => Dihedron::identity(field),
        }
    }

    /// Value of the color's quadratic form at `[x, y]`.
    pub fn quadratic_form(self, x: &FieldElement, y: &FieldElement) -> FieldElement {
        match self {
            Color::Green => x * y,
            Color::Red => &(x * x) - &(y * y),
            Color::Blue => &(x * x) + &(y * y),
        }
    }

    /// Identity element of the circle group: `[1, 0]`, or `[1, 1]` for green.
    pub fn circle_identity(self, field: &Field) -> AffinePoint {
        match self {
            Color::Green => AffinePoint::new(field.one(), field.one()),
            _ => AffinePoint::new(field.one(), field.zero()),
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Color {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "green" | "g" => Ok(Color::Green),
            "red" | "r" => Ok(Color::Red),
            "blue" | "b" => Ok(Color::Blue),
            other => Err(format!("unknown color {other:?} (expected green, red, or blue)")),
        }
    }
}

/// A point `[x, y]` of the affine plane; both coordinates share one field.
#[derive(Clone, PartialEq, Eq)]
pub struct AffinePoint {
    pub x: FieldElement,
    pub y: FieldElement,
}

impl AffinePoint {
    pub fn new(x: FieldElement, y: FieldElement) -> AffinePoint {
        assert!(x.field() == y.field(), "point coordinates from different fields");
        AffinePoint { x, y }
    }

    pub fn field(&self) -> &Field {
        self.x.field()
    }

    /// Canonical ordering key.
    pub fn key(&self) -> (u64, u64) {
        (self.x.index(), self.y.index())
    }

    /// Right action of a matrix: `[x, y] . h = [h11 x + h21 y, h12 x + h22 y]`.
    pub fn act(&self, h: &Dihedron) -> AffinePoint {
        let x = &(&h.a * &self.x) + &(&h.c * &self.y);
        let y = &(&h.b * &self.x) + &(&h.d * &self.y);
        AffinePoint::new(x, y)
    }
}

impl fmt::Debug for AffinePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.x, self.y)
    }
}

/// A 2x2 matrix over a field, written `[[a, b], [c, d]]`.
///
/// The four basis matrices `1, i, j, k` (with `i^2 = -1`, `j^2 = k^2 = 1`,
/// `ij = k`) span the algebra; the adjugate is its star-involution and the
/// determinant its quadrance.
#[derive(Clone, PartialEq, Eq)]
pub struct Dihedron {
    pub a: FieldElement,
    pub b: FieldElement,
    pub c: FieldElement,
    pub d: FieldElement,
}

impl Dihedron {
    pub fn new(a: FieldElement, b: FieldElement, c: FieldElement, d: FieldElement) -> Dihedron {
        assert!(
            a.field() == b.field() && a.field() == c.field() && a.field() == d.field(),
            "matrix entries from different fields"
        );
        Dihedron { a, b, c, d }
    }

    pub fn field(&self) -> &Field {
        self.a.field()
    }

    pub fn identity(field: &Field) -> Dihedron {
        Dihedron::new(field.one(), field.zero(), field.zero(), field.one())
    }

    pub fn basis_i(field: &Field) -> Dihedron {
        Dihedron::new(field.zero(), field.one(), field.from_int(-1), field.zero())
    }

    pub fn basis_j(field: &Field) -> Dihedron {
        Dihedron::new(field.zero(), field.one(), field.one(), field.zero())
    }

    pub fn basis_k(field: &Field) -> Dihedron {
        Dihedron::new(field.one(), field.zero(), field.zero(), field.from_int(-1))
    }

    pub fn mul(&self, other: &Dihedron) -> Dihedron {
        Dihedron::new(
            &(&self.a * &other.a) + &(&self.b * &other.c),
            &(&self.a * &other.b) + &(&self.b * &other.d),
            &(&self.c * &other.a) + &(&self.d * &other.c),
            &(&self.c * &other.b) + &(&self.d * &other.d),
        )
    }

    pub fn add(&self, other: &Dihedron) -> Dihedron {
        Dihedron::new(&self.a + &other.a, &self.b + &other.b, &self.c + &other.c, &self.d + &other.d)
    }

    pub fn neg(&self) -> Dihedron {
        Dihedron::new(self.a.neg(), self.b.neg(), self.c.neg(), self.d.neg())
    }

    pub fn scale(&self, t: &FieldElement) -> Dihedron {
        Dihedron::new(t * &self.a, t * &self.b, t * &self.c, t * &self.d)
    }

    /// The adjugate `[[d, -b], [-c, a]]`; `h h* = det(h) 1`.
    pub fn adjugate(&self) -> Dihedron {
        Dihedron::new(self.d.clone(), self.b.neg(), self.c.neg(), self.a.clone())
    }

    pub fn transpose(&self) -> Dihedron {
        Dihedron::new(self.a.clone(), self.c.clone(), self.b.clone(), self.d.clone())
    }

    pub fn det(&self) -> FieldElement {
        &(&self.a * &self.d) - &(&self.b * &self.c)
    }
}

impl fmt::Debug for Dihedron {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

/// Quadrance of a dihedron: its determinant. Multiplicative.
pub fn quadrance(h: &Dihedron) -> FieldElement {
    h.det()
}

/// A unit circle: the set of points of quadrance one, in canonical order.
#[derive(Clone, Debug)]
pub struct UnitCircle {
    color: Color,
    field: Field,
    points: Vec<AffinePoint>,
}

impl UnitCircle {
    pub fn color(&self) -> Color {
        self.color
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn points(&self) -> &[AffinePoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Membership via the defining equation.
    pub fn contains(&self, pt: &AffinePoint) -> bool {
        pt.field() == &self.field && on_circle(self.color, pt)
    }
}

/// Does `[x, y]` satisfy the color's defining equation?
pub fn on_circle(color: Color, pt: &AffinePoint) -> bool {
    color.quadratic_form(&pt.x, &pt.y).is_one()
}

/// Plane points not on the circle, in canonical order.
pub fn off_circle_points(circle: &UnitCircle) -> Vec<AffinePoint> {
    let field = circle.field();
    let mut out = Vec::new();
    for x in field.elements() {
        for y in field.elements() {
            let pt = AffinePoint::new(x.clone(), y);
            if !on_circle(circle.color(), &pt) {
                out.push(pt);
            }
        }
    }
    out
}

/// Enumerate the unit circle by a single pass over the field: for each `x`,
/// solve the defining equation for `y` via a table of square roots.
pub fn circle_enumerate(color: Color, field: &Field) -> UnitCircle {
    let q = field.q();
    let mut points = Vec::new();
    match color {
        Color::Green => {
            for t in field.elements().skip(1) {
                let inv = t.inv().expect("nonzero");
                points.push(AffinePoint::new(t, inv));
            }
        }
        Color::Red | Color::Blue => {
            // square-root table: roots[idx(s)] = all y with y^2 = s
            let mut roots: Vec<Vec<FieldElement>> = vec![Vec::new(); q as usize];
            for y in field.elements() {
                let s = &y * &y;
                roots[s.index() as usize].push(y);
            }
            let one = field.one();
            for x in field.elements() {
                let x2 = &x * &x;
                let rhs = match color {
                    Color::Red => &x2 - &one,
                    _ => &one - &x2,
                };
                for y in &roots[rhs.index() as usize] {
                    points.push(AffinePoint::new(x.clone(), y.clone()));
                }
            }
        }
    }
    points.sort_by_key(AffinePoint::key);
    UnitCircle { color, field: field.clone(), points }
}

/// Produce the unit circle from its rational parametrization:
/// green `[t, 1/t]`; red `[-1, 0]` and `[(1+t^2)/(1-t^2), 2t/(1-t^2)]` for
/// `t^2 != 1`; blue `[-1, 0]` and `[(1-t^2)/(1+t^2), 2t/(1+t^2)]` for
/// `t^2 != -1`. As a set this equals [`circle_enumerate`].
pub fn circle_parametrize(color: Color, field: &Field) -> UnitCircle {
    let mut points = Vec::new();
    let one = field.one();
    match color {
        Color::Green => {
            for t in field.elements().skip(1) {
                let inv = t.inv().expect("nonzero");
                points.push(AffinePoint::new(t, inv));
            }
        }
        Color::Red => {
            points.push(AffinePoint::new(field.from_int(-1), field.zero()));
            for t in field.elements() {
                let t2 = &t * &t;
                if t2 == one {
                    continue;
                }
                let den = (&one - &t2).inv().expect("t^2 != 1");
                let x = &(&one + &t2) * &den;
                let y = &(&t + &t) * &den;
                points.push(AffinePoint::new(x, y));
            }
        }
        Color::Blue => {
            let minus_one = field.from_int(-1);
            points.push(AffinePoint::new(minus_one.clone(), field.zero()));
            for t in field.elements() {
                let t2 = &t * &t;
                if t2 == minus_one {
                    continue;
                }
                let den = (&one + &t2).inv().expect("t^2 != -1");
                let x = &(&one - &t2) * &den;
                let y = &(&t + &t) * &den;
                points.push(AffinePoint::new(x, y));
            }
        }
    }
    points.sort_by_key(AffinePoint::key);
    UnitCircle { color, field: field.clone(), points }
}

/// The rotation matrix of a circle point under the complex-number
/// identification: blue `x 1 + y i`, red `x 1 + y j`, green `diag(t, 1/t)`.
pub fn rotation_of(color: Color, pt: &AffinePoint) -> Dihedron {
    match color {
        Color::Blue => Dihedron::new(pt.x.clone(), pt.y.clone(), pt.y.neg(), pt.x.clone()),
        Color::Red => Dihedron::new(pt.x.clone(), pt.y.clone(), pt.y.clone(), pt.x.clone()),
        Color::Green => {
            // [t, u] is x 1 + y k with t = x + y, u = x - y
            Dihedron::new(pt.x.clone(), pt.field().zero(), pt.field().zero(), pt.y.clone())
        }
    }
}

/// All rotation matrices of the geometry, one per circle point. Each `h`
/// satisfies `h M_c h^T = M_c` and `det h = 1`.
pub fn rotation_matrices(color: Color, field: &Field) -> Vec<Dihedron> {
    circle_enumerate(color, field)
        .points()
        .iter()
        .map(|pt| rotation_of(color, pt))
        .collect()
}

/// Product of two circle points under the group law of their color.
pub fn circle_group_law(color: Color, a: &AffinePoint, b: &AffinePoint) -> Result<AffinePoint> {
    if !(on_circle(color, a) && on_circle(color, b)) {
        return Err(Error::NotOnCircle { color: color.name() });
    }
    Ok(match color {
        Color::Green => AffinePoint::new(&a.x * &b.x, &a.y * &b.y),
        Color::Red => AffinePoint::new(
            &(&a.x * &b.x) + &(&a.y * &b.y),
            &(&a.x * &b.y) + &(&a.y * &b.x),
        ),
        Color::Blue => AffinePoint::new(
            &(&a.x * &b.x) - &(&a.y * &b.y),
            &(&a.x * &b.y) + &(&a.y * &b.x),
        ),
    })
}

/// An element `x 1 + y i` of the blue complex numbers over `F_q`; a field
/// whenever `-1` is not a square.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BlueComplex {
    pub x: FieldElement,
    pub y: FieldElement,
}

impl BlueComplex {
    pub fn new(x: FieldElement, y: FieldElement) -> BlueComplex {
        assert!(x.field() == y.field());
        BlueComplex { x, y }
    }

    pub fn one(field: &Field) -> BlueComplex {
        BlueComplex::new(field.one(), field.zero())
    }

    pub fn mul(&self, other: &BlueComplex) -> BlueComplex {
        BlueComplex::new(
            &(&self.x * &other.x) - &(&self.y * &other.y),
            &(&self.x * &other.y) + &(&self.y * &other.x),
        )
    }

    pub fn pow(&self, mut e: u64) -> BlueComplex {
        let mut acc = BlueComplex::one(self.x.field());
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

    pub fn is_one(&self) -> bool {
        self.x.is_one() && self.y.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fields_under(max_q: u64) -> Vec<Field> {
        let mut out = Vec::new();
        for (p, r) in [(3, 1), (5, 1), (7, 1), (3, 2), (11, 1), (13, 1), (17, 1), (5, 2), (3, 3)] {
            let f = Field::new(p, r, None).unwrap();
            if f.q() <= max_q {
                out.push(f);
            }
        }
        out
    }

    #[test]
    fn circle_sizes_match_the_counting_formula() {
        for f in fields_under(27) {
            for color in Color::ALL {
                let circle = circle_enumerate(color, &f);
                assert_eq!(
                    circle.len() as u64,
                    color.circle_size(&f),
                    "{color} over F_{}",
                    f.q()
                );
            }
        }
    }

    #[test]
    fn blue_circle_over_f13_matches_listing() {
        let f = Field::prime(13).unwrap();
        let circle = circle_enumerate(Color::Blue, &f);
        assert_eq!(circle.len(), 12);
        let listed = [(2, 6), (11, 7), (1, 0), (12, 0), (0, 1), (0, 12)];
        for (x, y) in listed {
            let pt = AffinePoint::new(f.from_int(x), f.from_int(y));
            assert!(circle.points().contains(&pt), "missing [{x},{y}]");
        }
    }

    #[test]
    fn blue_circle_over_f7_matches_equation_not_misprint() {
        // the defining equation gives {[1,0],[6,0],[0,1],[0,6],[2,2],[5,5],[2,5],[5,2]}
        let f = Field::prime(7).unwrap();
        let circle = circle_enumerate(Color::Blue, &f);
        let mut got: Vec<(u64, u64)> = circle.points().iter().map(AffinePoint::key).collect();
        got.sort_unstable();
        let mut want = vec![(1, 0), (6, 0), (0, 1), (0, 6), (2, 2), (5, 5), (2, 5), (5, 2)];
        want.sort_unstable();
        assert_eq!(got, want);
    }

    #[test]
    fn red_circle_over_f17_contains_listed_points() {
        let f = Field::prime(17).unwrap();
        let circle = circle_enumerate(Color::Red, &f);
        assert_eq!(circle.len(), 16);
        for (x, y) in [(6, 1), (0, 13), (1, 0), (16, 0), (3, 5), (14, 12)] {
            let pt = AffinePoint::new(f.from_int(x), f.from_int(y));
            assert!(circle.points().contains(&pt), "missing [{x},{y}]");
        }
    }

    #[test]
    fn green_circle_over_f5() {
        let f = Field::prime(5).unwrap();
        let circle = circle_enumerate(Color::Green, &f);
        let mut got: Vec<(u64, u64)> = circle.points().iter().map(AffinePoint::key).collect();
        got.sort_unstable();
        assert_eq!(got, vec![(1, 1), (2, 3), (3, 2), (4, 4)]);
    }

    #[test]
    fn parametrization_equals_enumeration() {
        for f in fields_under(27) {
            for color in Color::ALL {
                let a = circle_enumerate(color, &f);
                let b = circle_parametrize(color, &f);
                assert_eq!(a.points(), b.points(), "{color} over F_{}", f.q());
            }
        }
    }

    #[test]
    fn dihedron_basis_relations() {
        let f = Field::prime(13).unwrap();
        let one = Dihedron::identity(&f);
        let (i, j, k) = (Dihedron::basis_i(&f), Dihedron::basis_j(&f), Dihedron::basis_k(&f));
        assert_eq!(i.mul(&i), one.neg());
        assert_eq!(j.mul(&j), one);
        assert_eq!(k.mul(&k), one);
        assert_eq!(i.mul(&j), k);
        assert_eq!(j.mul(&k), i.neg());
        assert_eq!(k.mul(&i), j);
        assert_eq!(k.mul(&j), i);
        assert_eq!(i.mul(&k), j.neg());
        assert_eq!(j.mul(&i), k.neg());
    }

    #[test]
    fn adjugate_laws() {
        let f = Field::prime(13).unwrap();
        let sample = |s: u64| {
            Dihedron::new(
                f.element_from_index(s % 13),
                f.element_from_index((s * 5 + 3) % 13),
                f.element_from_index((s * 7 + 1) % 13),
                f.element_from_index((s * 11 + 4) % 13),
            )
        };
        for s in 0..24 {
            let h = sample(s);
            assert_eq!(h.adjugate().adjugate(), h);
            let hh = h.mul(&h.adjugate());
            assert_eq!(hh, Dihedron::identity(&f).scale(&h.det()));
            for t in 0..8 {
                let g = sample(s + 13 * t + 1);
                // quadrance is multiplicative
                assert_eq!(quadrance(&h.mul(&g)), &quadrance(&h) * &quadrance(&g));
                assert_eq!(h.mul(&g).adjugate(), g.adjugate().mul(&h.adjugate()));
            }
        }
    }

    #[test]
    fn quadrance_of_blue_complex_number() {
        let f = Field::prime(13).unwrap();
        for x in 0..13i64 {
            for y in 0..13i64 {
                let z = Dihedron::identity(&f)
                    .scale(&f.from_int(x))
                    .add(&Dihedron::basis_i(&f).scale(&f.from_int(y)));
                assert_eq!(quadrance(&z), f.from_int(x * x + y * y));
            }
        }
    }

    #[test]
    fn rotations_preserve_form_and_have_det_one() {
        for f in fields_under(27) {
            for color in Color::ALL {
                let m = color.form_matrix(&f);
                for h in rotation_matrices(color, &f) {
                    assert!(h.det().is_one(), "{color} over F_{}", f.q());
                    assert_eq!(h.mul(&m).mul(&h.transpose()), m, "{color} over F_{}", f.q());
                }
            }
        }
    }

    #[test]
    fn rotation_group_is_closed_blue_f5() {
        let f = Field::prime(5).unwrap();
        let mats = rotation_matrices(Color::Blue, &f);
        assert_eq!(mats.len(), 4);
        for a in &mats {
            for b in &mats {
                assert!(mats.contains(&a.mul(b)));
            }
        }
    }

    #[test]
    fn green_rotations_are_diagonal_f7() {
        let f = Field::prime(7).unwrap();
        for h in rotation_matrices(Color::Green, &f) {
            assert!(h.b.is_zero() && h.c.is_zero());
            assert!((&h.a * &h.d).is_one());
        }
    }

    #[test]
    fn orbit_of_identity_is_whole_circle_and_action_is_faithful() {
        for f in fields_under(27) {
            for color in Color::ALL {
                let circle = circle_enumerate(color, &f);
                let base = color.circle_identity(&f);
                let mut orbit: Vec<(u64, u64)> = rotation_matrices(color, &f)
                    .iter()
                    .map(|h| base.act(h).key())
                    .collect();
                orbit.sort_unstable();
                let expect: Vec<(u64, u64)> =
                    circle.points().iter().map(AffinePoint::key).collect();
                assert_eq!(orbit, expect, "{color} over F_{}", f.q());
            }
        }
    }

    #[test]
    fn group_law_examples() {
        let f = Field::prime(13).unwrap();
        // blue: [0,1] . [0,1] = [-1, 0]
        let i_pt = AffinePoint::new(f.zero(), f.one());
        let sq = circle_group_law(Color::Blue, &i_pt, &i_pt).unwrap();
        assert_eq!(sq, AffinePoint::new(f.from_int(-1), f.zero()));
        // green: [t, 1/t] . [u, 1/u] = [tu, 1/(tu)]
        let a = AffinePoint::new(f.from_int(2), f.from_int(7));
        let b = AffinePoint::new(f.from_int(3), f.from_int(9));
        let ab = circle_group_law(Color::Green, &a, &b).unwrap();
        assert_eq!(ab, AffinePoint::new(f.from_int(6), f.from_int(63)));
        // off-circle input is rejected
        let bad = AffinePoint::new(f.from_int(2), f.from_int(2));
        assert!(circle_group_law(Color::Blue, &bad, &i_pt).is_err());
    }

    #[test]
    fn red_orbit_under_generator_has_full_order_f17() {
        let f = Field::prime(17).unwrap();
        let circle = circle_enumerate(Color::Red, &f);
        let n = circle.len();
        let has_full_order = circle.points().iter().any(|g| {
            let mut acc = g.clone();
            let mut order = 1;
            while acc != Color::Red.circle_identity(&f) {
                acc = circle_group_law(Color::Red, &acc, g).unwrap();
                order += 1;
            }
            order == n
        });
        assert!(has_full_order);
    }

    #[test]
    fn circles_are_cyclic_with_witness() {
        for f in fields_under(27) {
            for color in Color::ALL {
                let circle = circle_enumerate(color, &f);
                let n = circle.len();
                let witness = circle.points().iter().any(|g| {
                    let mut acc = g.clone();
                    let mut order = 1usize;
                    while acc != color.circle_identity(&f) {
                        acc = circle_group_law(color, &acc, g).unwrap();
                        order += 1;
                    }
                    order == n
                });
                assert!(witness, "{color} over F_{} has no generator", f.q());
                if color == Color::Blue && f.jacobi_minus_one() == -1 {
                    assert_eq!(n as u64, f.q() + 1);
                }
            }
        }
    }

    #[test]
    fn group_law_closes_on_circle() {
        let f = Field::prime(7).unwrap();
        for color in Color::ALL {
            let circle = circle_enumerate(color, &f);
            for a in circle.points() {
                for b in circle.points() {
                    let ab = circle_group_law(color, a, b).unwrap();
                    assert!(circle.contains(&ab));
                }
            }
        }
    }

    #[test]
    fn blue_complex_powers_in_the_quadratic_extension() {
        // over F_7, -1 is not a square: the blue circle is cyclic of order 8
        let f = Field::prime(7).unwrap();
        let circle = circle_enumerate(Color::Blue, &f);
        for pt in circle.points() {
            let z = BlueComplex::new(pt.x.clone(), pt.y.clone());
            assert!(z.pow(8).is_one());
        }
    }
}
