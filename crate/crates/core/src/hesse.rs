//! The cubic pencil X^3 + Y^3 + Z^3 - 3m XYZ over the Eisenstein
//! integers: exact factorization of its triangle members, fiber
//! bookkeeping under the quadratic base change [S:T] -> [S^2:S^2+T^2],
//! the Picard-number bound that falls out, and the six double points
//! on the branch triangles.

use crate::eisenstein::Eisenstein;
use crate::quadform::GramMatrix;
use std::collections::BTreeMap;
use std::fmt;

pub const VAR_NAMES: [&str; 5] = ["X", "Y", "Z", "S", "T"];

/// Sparse polynomial in X, Y, Z, S, T with coefficients in Z[w].
#[derive(Clone, PartialEq, Eq, Default)]
pub struct CycloPoly {
    terms: BTreeMap<[u8; 5], Eisenstein>,
}

impl CycloPoly {
    pub fn zero() -> CycloPoly {
        CycloPoly::default()
    }

    pub fn constant(c: Eisenstein) -> CycloPoly {
        CycloPoly::monomial([0; 5], c)
    }

    pub fn var(i: usize) -> CycloPoly {
        let mut e = [0u8; 5];
        e[i] = 1;
        CycloPoly::monomial(e, Eisenstein::ONE)
    }

    pub fn monomial(exps: [u8; 5], c: Eisenstein) -> CycloPoly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        CycloPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, exps: [u8; 5]) -> Eisenstein {
        self.terms.get(&exps).copied().unwrap_or(Eisenstein::ZERO)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as u32).sum())
            .max()
            .unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|e| e[var] as u32).max().unwrap_or(0)
    }

    fn insert_term(&mut self, exps: [u8; 5], c: Eisenstein) {
        let entry = self.terms.entry(exps).or_insert(Eisenstein::ZERO);
        *entry = *entry + c;
        if entry.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn pow(&self, n: u32) -> CycloPoly {
        let mut acc = CycloPoly::constant(Eisenstein::ONE);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Replaces one variable by a constant.
    pub fn substitute(&self, var: usize, value: Eisenstein) -> CycloPoly {
        let mut out = CycloPoly::zero();
        for (&exps, &c) in &self.terms {
            let mut scaled = c;
            for _ in 0..exps[var] {
                scaled = scaled * value;
            }
            let mut e = exps;
            e[var] = 0;
            out.insert_term(e, scaled);
        }
        out
    }
}

impl std::ops::Add for &CycloPoly {
    type Output = CycloPoly;
    fn add(self, rhs: &CycloPoly) -> CycloPoly {
        let mut out = self.clone();
        for (&e, &c) in &rhs.terms {
            out.insert_term(e, c);
        }
        out
    }
}

impl std::ops::Sub for &CycloPoly {
    type Output = CycloPoly;
    fn sub(self, rhs: &CycloPoly) -> CycloPoly {
        let mut out = self.clone();
        for (&e, &c) in &rhs.terms {
            out.insert_term(e, -c);
        }
        out
    }
}

impl std::ops::Mul for &CycloPoly {
    type Output = CycloPoly;
    fn mul(self, rhs: &CycloPoly) -> CycloPoly {
        let mut out = CycloPoly::zero();
        for (&ea, &ca) in &self.terms {
            for (&eb, &cb) in &rhs.terms {
                let mut e = [0u8; 5];
                for k in 0..5 {
                    e[k] = ea[k] + eb[k];
                }
                out.insert_term(e, ca * cb);
            }
        }
        out
    }
}

impl std::ops::Neg for &CycloPoly {
    type Output = CycloPoly;
    fn neg(self) -> CycloPoly {
        &CycloPoly::zero() - self
    }
}

impl fmt::Display for CycloPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exps, c) in self.terms.iter().rev() {
            let cs = c.to_string();
            let mixed = cs.len() > 1 && (cs[1..].contains('+') || cs[1..].contains('-'));
            let (sign, mag) = match cs.strip_prefix('-') {
                Some(stripped) if !mixed => ("-", stripped.to_string()),
                _ => ("+", cs),
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", sign)?;
            }
            let mut vars = Vec::new();
            for (i, &e) in exps.iter().enumerate() {
                match e {
                    0 => {}
                    1 => vars.push(VAR_NAMES[i].to_string()),
                    _ => vars.push(format!("{}^{}", VAR_NAMES[i], e)),
                }
            }
            let needs_coeff = vars.is_empty() || mag != "1";
            if needs_coeff {
                if mag.contains('+') || mag.contains('-') {
                    write!(f, "({mag})")?;
                } else {
                    write!(f, "{mag}")?;
                }
                if !vars.is_empty() {
                    write!(f, "*")?;
                }
            }
            write!(f, "{}", vars.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for CycloPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloPoly({self})")
    }
}

const X: usize = 0;
const Y: usize = 1;
const Z: usize = 2;
const S: usize = 3;
const T: usize = 4;

/// X^3 + Y^3 + Z^3 - 3m XYZ.
pub fn pencil_member(m: Eisenstein) -> CycloPoly {
    let cube = |v: usize| CycloPoly::var(v).pow(3);
    let mut xyz_exps = [0u8; 5];
    xyz_exps[X] = 1;
    xyz_exps[Y] = 1;
    xyz_exps[Z] = 1;
    let xyz = CycloPoly::monomial(xyz_exps, Eisenstein::from_int(-3) * m);
    &(&(&cube(X) + &cube(Y)) + &cube(Z)) + &xyz
}

/// The member at the other end of the pencil: the coordinate triangle.
pub fn coordinate_triangle() -> [CycloPoly; 3] {
    [CycloPoly::var(X), CycloPoly::var(Y), CycloPoly::var(Z)]
}

/// Three linear forms whose product is the pencil member at m = w^k:
/// X + w^j Y + w^(2j+k) Z for j = 0, 1, 2.
pub fn triangle_factorization(k: i64) -> [CycloPoly; 3] {
    let form = |j: i64| {
        let mut p = CycloPoly::var(X);
        p = &p + &CycloPoly::monomial({ let mut e = [0u8;5]; e[Y] = 1; e }, Eisenstein::omega_pow(j));
        p = &p + &CycloPoly::monomial({ let mut e = [0u8;5]; e[Z] = 1; e }, Eisenstein::omega_pow(2 * j + k));
        p
    };
    [form(0), form(1), form(2)]
}

/// Multiplies the three forms back together; callers compare against
/// pencil_member(w^k).
pub fn product_of(forms: &[CycloPoly; 3]) -> CycloPoly {
    &(&forms[0] * &forms[1]) * &forms[2]
}

/// The pulled-back family: S^2 (X^3+Y^3+Z^3) - 3 (S^2+T^2) XYZ,
/// bidegree (2,3) in ([S:T], [X:Y:Z]).
pub fn pulled_back_family() -> CycloPoly {
    let cube = |v: usize| CycloPoly::var(v).pow(3);
    let cubics = &(&cube(X) + &cube(Y)) + &cube(Z);
    let s2 = CycloPoly::var(S).pow(2);
    let t2 = CycloPoly::var(T).pow(2);
    let mut xyz_exps = [0u8; 5];
    xyz_exps[X] = 1;
    xyz_exps[Y] = 1;
    xyz_exps[Z] = 1;
    let m3xyz = CycloPoly::monomial(xyz_exps, Eisenstein::from_int(-3));
    &(&s2 * &cubics) + &(&(&s2 + &t2) * &m3xyz)
}

/// A point of the base line over Q(w).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BasePoint {
    pub u: Eisenstein,
    pub v: Eisenstein,
}

impl fmt::Display for BasePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}:{}]", self.u, self.v)
    }
}

/// Number of distinct preimages of [u:v] under [S:T] -> [S^2:S^2+T^2]:
/// solutions of (v - u) S^2 = u T^2 in the projective line. One
/// preimage means the point is a branch point.
pub fn preimage_count(p: BasePoint) -> usize {
    let BasePoint { u, v } = p;
    assert!(!(u.is_zero() && v.is_zero()), "not a projective point");
    let lhs = v - u;
    if u.is_zero() || lhs.is_zero() {
        // S^2 = 0 or T^2 = 0: a single doubled point
        1
    } else {
        // T^2 = c S^2 with c nonzero: two points over the closure
        2
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fiber {
    pub base_point: String,
    pub kodaira: String,
    pub components: u32,
    pub euler: u32,
}

fn cyclic_fiber(base_point: String, n: u32) -> Fiber {
    Fiber {
        base_point,
        kodaira: format!("I{n}"),
        components: n,
        euler: n,
    }
}

/// The four triangle fibers of the pencil itself.
pub fn base_fibers() -> Vec<Fiber> {
    let w = Eisenstein::OMEGA;
    let one = Eisenstein::ONE;
    let zero = Eisenstein::ZERO;
    [
        BasePoint { u: zero, v: one },
        BasePoint { u: one, v: one },
        BasePoint { u: one, v: w },
        BasePoint { u: one, v: w * w },
    ]
    .iter()
    .map(|p| cyclic_fiber(p.to_string(), 3))
    .collect()
}

/// Fibers after the quadratic base change: each base triangle either
/// doubles up over a branch point or splits into two copies.
pub fn base_change_fibers() -> Vec<Fiber> {
    let w = Eisenstein::OMEGA;
    let one = Eisenstein::ONE;
    let zero = Eisenstein::ZERO;
    let points = [
        BasePoint { u: zero, v: one },
        BasePoint { u: one, v: one },
        BasePoint { u: one, v: w },
        BasePoint { u: one, v: w * w },
    ];
    let mut out = Vec::new();
    for p in points {
        match preimage_count(p) {
            1 => out.push(cyclic_fiber(format!("over {p} (ramified)"), 6)),
            2 => {
                for sheet in 1..=2 {
                    out.push(cyclic_fiber(format!("over {p} sheet {sheet}"), 3));
                }
            }
            _ => unreachable!("a degree-2 map has at most 2 preimages"),
        }
    }
    out
}

pub fn euler_sum(fibers: &[Fiber]) -> u32 {
    fibers.iter().map(|f| f.euler).sum()
}

/// 2 + sum over fibers of (component count - 1): the lower bound for
/// the Picard number of an elliptic surface with a section.
pub fn shioda_tate_bound(fibers: &[Fiber]) -> u32 {
    2 + fibers.iter().map(|f| f.components - 1).sum::<u32>()
}

/// CSV export of a fiber table.
pub fn fiber_csv(fibers: &[Fiber]) -> String {
    let mut s = String::from("base_point,type,components,euler\n");
    for f in fibers {
        s.push_str(&format!(
            "{},{},{},{}\n",
            f.base_point, f.kodaira, f.components, f.euler
        ));
    }
    s
}

/// A line a X + b Y + c Z as its coefficient triple.
pub type Line = [Eisenstein; 3];

fn line_of(p: &CycloPoly) -> Line {
    let coeff = |v: usize| {
        let mut e = [0u8; 5];
        e[v] = 1;
        p.coefficient(e)
    };
    [coeff(X), coeff(Y), coeff(Z)]
}

fn cross(a: &Line, b: &Line) -> [Eisenstein; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn proportional(p: &[Eisenstein; 3], q: &[Eisenstein; 3]) -> bool {
    for i in 0..3 {
        for j in (i + 1)..3 {
            if !(p[i] * q[j] - p[j] * q[i]).is_zero() {
                return false;
            }
        }
    }
    true
}

fn det3(lines: &[Line; 3]) -> Eisenstein {
    let mut acc = Eisenstein::ZERO;
    let c = cross(&lines[1], &lines[2]);
    for i in 0..3 {
        acc = acc + lines[0][i] * c[i];
    }
    acc
}

#[derive(Debug, Clone)]
pub struct NodeReport {
    pub points: Vec<[Eisenstein; 3]>,
    pub per_triangle: [usize; 2],
    pub triple_point_free: bool,
    pub all_distinct: bool,
}

impl NodeReport {
    pub fn count(&self) -> usize {
        self.points.len()
    }
}

/// The double points of the branch divisor: pairwise intersections of
/// the lines in the two branch triangles (the coordinate triangle and
/// the m = 1 triangle), computed exactly and deduplicated
/// projectively.
pub fn six_node_check() -> NodeReport {
    let triangles: [[CycloPoly; 3]; 2] = [coordinate_triangle(), triangle_factorization(0)];
    let mut points: Vec<[Eisenstein; 3]> = Vec::new();
    let mut per_triangle = [0usize; 2];
    let mut triple_point_free = true;
    for (t, tri) in triangles.iter().enumerate() {
        let lines: [Line; 3] = [line_of(&tri[0]), line_of(&tri[1]), line_of(&tri[2])];
        if det3(&lines).is_zero() {
            triple_point_free = false;
        }
        let mut found: Vec<[Eisenstein; 3]> = Vec::new();
        for i in 0..3 {
            for j in (i + 1)..3 {
                let p = cross(&lines[i], &lines[j]);
                assert!(
                    p.iter().any(|c| !c.is_zero()),
                    "triangle lines are not concurrent or parallel"
                );
                if !found.iter().any(|q| proportional(q, &p)) {
                    found.push(p);
                }
            }
        }
        per_triangle[t] = found.len();
        points.extend(found);
    }
    let mut all_distinct = true;
    for i in 0..points.len() {
        for j in (i + 1)..points.len() {
            if proportional(&points[i], &points[j]) {
                all_distinct = false;
            }
        }
    }
    NodeReport {
        points,
        per_triangle,
        triple_point_free,
        all_distinct,
    }
}

/// Gram matrix of the transcendental lattice, referenced data for the
/// special member of the family.
pub fn transcendental_gram() -> GramMatrix {
    GramMatrix::from_rows(&[vec![6, 0], vec![0, 6]]).expect("diagonal matrix")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TranscendentalReport {
    pub det: i128,
    pub rank: usize,
    pub picard_plus_rank: usize,
}

/// Consistency of the referenced transcendental lattice with the
/// computed Picard bound: determinant 36 and ranks filling out 22.
pub fn transcendental_report(picard: usize) -> TranscendentalReport {
    let g = transcendental_gram();
    TranscendentalReport {
        det: g.det(),
        rank: g.size(),
        picard_plus_rank: picard + g.size(),
    }
}
