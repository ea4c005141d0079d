//! The even Lorentzian lattice of signature (1, 25), realized as
//! Leech lattice plus a hyperbolic plane: vectors (lambda; m, n) with
//! (v, v') = (lambda, lambda') + m n' + m' n.
//!
//! Every Leech lattice vector lambda lifts to a root
//! (lambda; 1, -lambda^2/2 - 1) of norm -2 pairing to 1 with the Weyl
//! vector w = (0; 0, 1). Two such roots have product
//! -2 - (lambda - mu)^2 / 2, so lattice geometry turns into Dynkin
//! diagram combinatorics. This module builds the six-root system of
//! type A2 + A2 + A1 + A1 cut out by the pentagon configuration, the
//! A9 and D9 chains extending it, the rank-4 sublattice with 9 + 6
//! short-vector pairs, and the induced objects on the discriminant
//! group (Z/6)^2: its quadratic form, orthogonal group, and an
//! order-4 isometry.

use crate::golay::GolaySet;
use crate::leech::{inner, norm, LeechLattice, LeechVector, Pentagon};
use crate::quadform::{
    discriminant_form, invert_rational, isotropic_elements, orthogonal_group_of_form,
    short_vector_counts, GramMatrix, Rat,
};
use num::Zero;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use thiserror::Error;

/// A vector (lambda; m, n) in the rank-26 lattice.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct LorentzVector {
    pub leech: LeechVector,
    pub m: i64,
    pub n: i64,
}

impl LorentzVector {
    pub const W: LorentzVector = LorentzVector {
        leech: LeechVector::ZERO,
        m: 0,
        n: 1,
    };

    pub fn new(leech: LeechVector, m: i64, n: i64) -> Self {
        LorentzVector { leech, m, n }
    }
}

impl Add for LorentzVector {
    type Output = LorentzVector;
    fn add(self, rhs: LorentzVector) -> LorentzVector {
        LorentzVector {
            leech: self.leech + rhs.leech,
            m: self.m + rhs.m,
            n: self.n + rhs.n,
        }
    }
}

impl Sub for LorentzVector {
    type Output = LorentzVector;
    fn sub(self, rhs: LorentzVector) -> LorentzVector {
        LorentzVector {
            leech: self.leech - rhs.leech,
            m: self.m - rhs.m,
            n: self.n - rhs.n,
        }
    }
}

impl Neg for LorentzVector {
    type Output = LorentzVector;
    fn neg(self) -> LorentzVector {
        LorentzVector {
            leech: -self.leech,
            m: -self.m,
            n: -self.n,
        }
    }
}

impl Mul<LorentzVector> for i64 {
    type Output = LorentzVector;
    fn mul(self, rhs: LorentzVector) -> LorentzVector {
        LorentzVector {
            leech: self * rhs.leech,
            m: self * rhs.m,
            n: self * rhs.n,
        }
    }
}

pub fn lorentz_inner(a: &LorentzVector, b: &LorentzVector) -> i64 {
    inner(&a.leech, &b.leech) + a.m * b.n + a.n * b.m
}

pub fn lorentz_norm(a: &LorentzVector) -> i64 {
    lorentz_inner(a, a)
}

/// The root attached to a Leech lattice vector: norm -2 and product 1
/// with w.
pub fn leech_root_of(x: &LeechVector) -> LorentzVector {
    let nx = norm(x);
    LorentzVector {
        leech: *x,
        m: 1,
        n: -nx / 2 - 1,
    }
}

/// An irreducible simply laced diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Ade {
    A(usize),
    D(usize),
    E(usize),
}

impl fmt::Display for Ade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ade::A(n) => write!(f, "A{n}"),
            Ade::D(n) => write!(f, "D{n}"),
            Ade::E(n) => write!(f, "E{n}"),
        }
    }
}

/// Components sorted large-to-small and grouped, e.g. `"A2^2 A1^2"`.
pub fn ade_string(components: &[Ade]) -> String {
    let mut sorted = components.to_vec();
    sorted.sort();
    sorted.reverse();
    let mut parts: Vec<String> = Vec::new();
    let mut i = 0;
    while i < sorted.len() {
        let mut j = i;
        while j < sorted.len() && sorted[j] == sorted[i] {
            j += 1;
        }
        let count = j - i;
        if count == 1 {
            parts.push(sorted[i].to_string());
        } else {
            parts.push(format!("{}^{}", sorted[i], count));
        }
        i = j;
    }
    parts.join(" ")
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CoxeterError {
    #[error("diagonal entry at {index} is {value}, want -2")]
    Diagonal { index: usize, value: i64 },
    #[error("entry ({i}, {j}) is {value}, want 0 or 1")]
    OffDiagonal { i: usize, j: usize, value: i64 },
    #[error("component containing node {0} has a cycle")]
    NotATree(usize),
    #[error("component containing node {0} is not an ADE diagram")]
    NotAde(usize),
}

/// Reads a Gram matrix of norm -2 vectors as a disjoint union of ADE
/// diagrams (edges where the product is 1).
pub fn coxeter_type(gram: &GramMatrix) -> Result<Vec<Ade>, CoxeterError> {
    let n = gram.size();
    for i in 0..n {
        let d = gram.get(i, i);
        if d != -2 {
            return Err(CoxeterError::Diagonal { index: i, value: d });
        }
        for j in i + 1..n {
            let v = gram.get(i, j);
            if v != 0 && v != 1 {
                return Err(CoxeterError::OffDiagonal { i, j, value: v });
            }
        }
    }
    let adj: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).filter(|&j| j != i && gram.get(i, j) == 1).collect())
        .collect();

    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        // collect the component
        let mut comp = vec![start];
        seen[start] = true;
        let mut head = 0;
        while head < comp.len() {
            let v = comp[head];
            head += 1;
            for &u in &adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    comp.push(u);
                }
            }
        }
        let edges: usize = comp.iter().map(|&v| adj[v].len()).sum::<usize>() / 2;
        if edges + 1 != comp.len() {
            return Err(CoxeterError::NotATree(start));
        }
        out.push(classify_tree(&comp, &adj).ok_or(CoxeterError::NotAde(start))?);
    }
    Ok(out)
}

fn classify_tree(comp: &[usize], adj: &[Vec<usize>]) -> Option<Ade> {
    let size = comp.len();
    let branch: Vec<usize> = comp
        .iter()
        .copied()
        .filter(|&v| adj[v].len() >= 3)
        .collect();
    match branch.len() {
        0 => Some(Ade::A(size)),
        1 => {
            let b = branch[0];
            if adj[b].len() != 3 {
                return None;
            }
            // walk each arm away from the branch node
            let mut arms: Vec<usize> = adj[b]
                .iter()
                .map(|&first| {
                    let (mut prev, mut cur, mut len) = (b, first, 1);
                    while let Some(&next) = adj[cur].iter().find(|&&u| u != prev) {
                        prev = cur;
                        cur = next;
                        len += 1;
                    }
                    len
                })
                .collect();
            arms.sort_unstable();
            match (arms[0], arms[1], arms[2]) {
                (1, 1, k) => Some(Ade::D(k + 3)),
                (1, 2, 2) => Some(Ade::E(6)),
                (1, 2, 3) => Some(Ade::E(7)),
                (1, 2, 4) => Some(Ade::E(8)),
                _ => None,
            }
        }
        _ => None,
    }
}

/// A labeled list of norm -2 Lorentzian vectors.
#[derive(Debug, Clone)]
pub struct RootSet {
    pub labels: Vec<&'static str>,
    pub roots: Vec<LorentzVector>,
}

impl RootSet {
    pub fn gram(&self) -> GramMatrix {
        let rows: Vec<Vec<i64>> = self
            .roots
            .iter()
            .map(|u| self.roots.iter().map(|v| lorentz_inner(u, v)).collect())
            .collect();
        GramMatrix::from_rows(&rows).expect("inner products are symmetric")
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// The six roots attached to the pentagon vectors and the zero
    /// vector, in the order c, z, x0, r0, x1, x2.
    pub fn standard(lattice: &LeechLattice) -> RootSet {
        let p = lattice.pentagon();
        RootSet {
            labels: vec!["c", "z", "x0", "r0", "x1", "x2"],
            roots: vec![
                leech_root_of(&p.c),
                leech_root_of(&LeechVector::ZERO),
                leech_root_of(&p.x0),
                leech_root_of(&p.r0),
                leech_root_of(&p.x1),
                leech_root_of(&p.x2),
            ],
        }
    }

    /// Nine roots forming a path: the six standard ones plus three
    /// fillers.
    pub fn a9_chain(lattice: &LeechLattice) -> RootSet {
        let p = lattice.pentagon();
        let omega = LeechVector::indicator(GolaySet::OMEGA);
        let point_zero = LeechVector::nu(1);

        let k = GolaySet::from_labels(&["0", "5", "12", "13", "16", "20", "21", "22"])
            .expect("valid labels");
        assert!(lattice.code().contains(k), "filler set is not a codeword");
        let u1 = 4 * point_zero + omega - 2 * LeechVector::indicator(k);
        let u2 = 4 * point_zero + omega;
        let u3 = omega - 4 * nu_of_label("5");
        for v in [&u1, &u2, &u3] {
            assert!(lattice.contains(v), "filler vector not in the lattice");
        }

        RootSet {
            labels: vec!["x2", "u1", "c", "z", "u2", "r0", "x0", "u3", "x1"],
            roots: vec![
                leech_root_of(&p.x2),
                leech_root_of(&u1),
                leech_root_of(&p.c),
                leech_root_of(&LeechVector::ZERO),
                leech_root_of(&u2),
                leech_root_of(&p.r0),
                leech_root_of(&p.x0),
                leech_root_of(&u3),
                leech_root_of(&p.x1),
            ],
        }
    }

    /// Nine roots forming a fork: a path of seven with two extra legs
    /// at the far end.
    pub fn d9_chain(lattice: &LeechLattice) -> RootSet {
        let p = lattice.pentagon();
        let omega = LeechVector::indicator(GolaySet::OMEGA);
        let point_zero = LeechVector::nu(1);

        let k = GolaySet::from_labels(&["inf", "0", "6", "7", "10", "12", "15", "18"])
            .expect("valid labels");
        assert!(lattice.code().contains(k), "fork set is not a codeword");
        let u2 = 4 * point_zero + omega;
        let v1 = omega - 4 * nu_of_label("7");
        let v2 = 2 * LeechVector::indicator(k);
        for v in [&u2, &v1, &v2] {
            assert!(lattice.contains(v), "fork vector not in the lattice");
        }

        RootSet {
            labels: vec!["c", "z", "u2", "r0", "x0", "v1", "v2", "x1", "x2"],
            roots: vec![
                leech_root_of(&p.c),
                leech_root_of(&LeechVector::ZERO),
                leech_root_of(&u2),
                leech_root_of(&p.r0),
                leech_root_of(&p.x0),
                leech_root_of(&v1),
                leech_root_of(&v2),
                leech_root_of(&p.x1),
                leech_root_of(&p.x2),
            ],
        }
    }
}

fn nu_of_label(label: &str) -> LeechVector {
    let idx = crate::golay::parse_point_label(label).expect("valid point label");
    LeechVector::nu(idx)
}

/// The rank-4 sublattice spanned by c - x0, c - r0, r0, x1 inside the
/// Leech lattice, with its full list of short vectors.
#[derive(Debug, Clone)]
pub struct SLatticeReport {
    pub gram: GramMatrix,
    pub det: i128,
    pub norm_four_pairs: usize,
    pub norm_six_pairs: usize,
    /// The nine named norm -4 classes really are norm -4 and pairwise
    /// distinct up to sign.
    pub named_vectors_check: bool,
}

pub fn slattice_certificate(p: &Pentagon) -> SLatticeReport {
    let basis = [p.c - p.x0, p.c - p.r0, p.r0, p.x1];
    let rows: Vec<Vec<i64>> = basis
        .iter()
        .map(|u| basis.iter().map(|v| inner(u, v)).collect())
        .collect();
    let gram = GramMatrix::from_rows(&rows).expect("symmetric");
    let det = gram.det();

    let counts = short_vector_counts(&gram, 6).expect("negative definite");
    let norm_four = counts.get(&-4).copied().unwrap_or(0);
    let norm_six = counts.get(&-6).copied().unwrap_or(0);

    // The nine norm -4 classes in basis coordinates: x0, r0, x1,
    // c - x0, c - r0, c - x1, c - x0 - r0, x0 - x1, r0 - x1.
    let named: [[i64; 4]; 9] = [
        [-1, 1, 1, 0],
        [0, 0, 1, 0],
        [0, 0, 0, 1],
        [1, 0, 0, 0],
        [0, 1, 0, 0],
        [0, 1, 1, -1],
        [1, 0, -1, 0],
        [-1, 1, 1, -1],
        [0, 0, 1, -1],
    ];
    let gram_norm = |x: &[i64; 4]| -> i64 {
        let mut s = 0i64;
        for i in 0..4 {
            for j in 0..4 {
                s += x[i] * gram.get(i, j) * x[j];
            }
        }
        s
    };
    let mut named_ok = named.iter().all(|x| gram_norm(x) == -4);
    for i in 0..named.len() {
        for j in i + 1..named.len() {
            let same = named[i] == named[j];
            let opposite = named[i].iter().zip(&named[j]).all(|(a, b)| *a == -*b);
            named_ok &= !same && !opposite;
        }
    }

    SLatticeReport {
        gram,
        det,
        norm_four_pairs: norm_four / 2,
        norm_six_pairs: norm_six / 2,
        named_vectors_check: named_ok,
    }
}

/// The distinguished degree-20 class orthogonal to the root system.
#[derive(Debug, Clone)]
pub struct WeylReport {
    pub h: LorentzVector,
    pub h_norm: i64,
    pub orthogonal_to_roots: bool,
    pub primitive: bool,
    /// Norm of the projection of w into the span of the roots.
    pub w_r_norm: Rat,
    /// Product of w with that projection (equal to the norm).
    pub w_dot_w_r: Rat,
}

pub fn weyl_projection(lattice: &LeechLattice) -> WeylReport {
    let rs = RootSet::standard(lattice);
    let [c, z, x0, r0, x1, x2]: [LorentzVector; 6] = rs.roots.clone().try_into().unwrap();
    let w = LorentzVector::W;
    let h = 2 * w + 2 * (c + z + r0 + x0) + x1 + x2;

    let h_norm = lorentz_norm(&h);
    let orthogonal_to_roots = rs.roots.iter().all(|r| lorentz_inner(&h, r) == 0);

    // primitivity: h/p fails to lie in the lattice for every prime p
    // dividing the coordinate content
    let mut content: i64 = 0;
    for &co in h.leech.coords() {
        content = gcd(content, co);
    }
    content = gcd(gcd(content, h.m), h.n);
    let mut primitive = true;
    let mut rest = content.abs();
    let mut p = 2;
    while p * p <= rest {
        if rest % p == 0 {
            while rest % p == 0 {
                rest /= p;
            }
            primitive &= !divided_in_lattice(lattice, &h, p);
        }
        p += 1;
    }
    if rest > 1 {
        primitive &= !divided_in_lattice(lattice, &h, rest);
    }

    // solve G a = (w, r_i) over the rationals; the projection of w is
    // then sum a_i r_i
    let gram = rs.gram();
    let ginv = invert_rational(&gram.rows()).expect("root gram is nonsingular");
    let rhs: Vec<Rat> = rs
        .roots
        .iter()
        .map(|r| Rat::from_integer(lorentz_inner(&w, r) as i128))
        .collect();
    let a: Vec<Rat> = (0..6)
        .map(|i| (0..6).map(|j| ginv[i][j] * rhs[j]).sum())
        .collect();
    let w_r_norm: Rat = (0..6)
        .map(|i| {
            (0..6)
                .map(|j| a[i] * a[j] * Rat::from_integer(gram.get(i, j) as i128))
                .sum::<Rat>()
        })
        .sum();
    let w_dot_w_r: Rat = a.iter().zip(&rhs).map(|(ai, ri)| *ai * *ri).sum();

    WeylReport {
        h,
        h_norm,
        orthogonal_to_roots,
        primitive,
        w_r_norm,
        w_dot_w_r,
    }
}

fn divided_in_lattice(lattice: &LeechLattice, v: &LorentzVector, p: i64) -> bool {
    let mut coords = *v.leech.coords();
    for c in coords.iter_mut() {
        if *c % p != 0 {
            return false;
        }
        *c /= p;
    }
    if v.m % p != 0 || v.n % p != 0 {
        return false;
    }
    lattice.contains(&LeechVector(coords))
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Norm of the projection of w into the fixed part of a polarized
/// family, as a function of the polarization square.
pub fn projected_w_norm(h_square: i64) -> Rat {
    Rat::new(h_square as i128, 4) - Rat::from_integer(5)
}

/// Determinant of the rank-8 fixed lattice spanned by h and the six
/// roots with the two glue classes of index 2.
pub fn fixed_lattice_det(h_square: i64, root_det: i128) -> i128 {
    let num = h_square as i128 * root_det;
    assert!(num % 4 == 0, "glue index must square out");
    num / 4
}

/// The discriminant group of the six-root lattice, generated by two
/// explicit classes of order 6.
#[derive(Debug, Clone)]
pub struct ArBasisReport {
    pub group: String,
    pub e1_raw_norm: Rat,
    pub e1_q: Rat,
    pub e2_q: Rat,
    pub pairing: Rat,
    pub e1_order: u32,
    pub e2_order: u32,
    pub classes_distinct: bool,
    pub isotropic_count: usize,
    pub orth_order: usize,
    pub orth_census: BTreeMap<usize, usize>,
}

fn rational_vec(entries: &[(i128, i128)]) -> Vec<Rat> {
    entries.iter().map(|&(n, d)| Rat::new(n, d)).collect()
}

fn gram_pair(gram: &GramMatrix, x: &[Rat], y: &[Rat]) -> Rat {
    let n = gram.size();
    let mut s = Rat::zero();
    for i in 0..n {
        for j in 0..n {
            s += x[i] * y[j] * Rat::from_integer(gram.get(i, j) as i128);
        }
    }
    s
}

fn is_integral(v: &[Rat]) -> bool {
    v.iter().all(|x| x.is_integer())
}

/// e1 = (c + 2z)/3 + (r0 + 2 x0)/3 + x1/2 and
/// e2 = (c + 2z)/3 - (r0 + 2 x0)/3 + x2/2
/// in root coordinates (order c, z, x0, r0, x1, x2).
fn dual_basis() -> (Vec<Rat>, Vec<Rat>) {
    let e1 = rational_vec(&[(1, 3), (2, 3), (2, 3), (1, 3), (1, 2), (0, 1)]);
    let e2 = rational_vec(&[(1, 3), (2, 3), (-2, 3), (-1, 3), (0, 1), (1, 2)]);
    (e1, e2)
}

fn class_order(v: &[Rat]) -> u32 {
    for k in 1..=12u32 {
        let scaled: Vec<Rat> = v.iter().map(|x| *x * Rat::from_integer(k as i128)).collect();
        if is_integral(&scaled) {
            return k;
        }
    }
    panic!("class order exceeds 12");
}

pub fn ar_basis_report(lattice: &LeechLattice) -> ArBasisReport {
    let rs = RootSet::standard(lattice);
    let gram = rs.gram();
    let (e1, e2) = dual_basis();

    // both classes must pair integrally with every root
    for e in [&e1, &e2] {
        for i in 0..6 {
            let mut unit = vec![Rat::zero(); 6];
            unit[i] = Rat::from_integer(1);
            assert!(
                gram_pair(&gram, e, &unit).is_integer(),
                "dual class pairs non-integrally with a root"
            );
        }
    }

    let e1_raw_norm = gram_pair(&gram, &e1, &e1);
    let e1_q = crate::quadform::rat_mod(e1_raw_norm, 2);
    let e2_q = crate::quadform::rat_mod(gram_pair(&gram, &e2, &e2), 2);
    let pairing = crate::quadform::rat_mod(gram_pair(&gram, &e1, &e2), 1);

    // the 36 combinations a e1 + b e2 hit 36 distinct classes
    let mut classes_distinct = true;
    for a in 0..6i128 {
        for b in 0..6i128 {
            if a == 0 && b == 0 {
                continue;
            }
            let comb: Vec<Rat> = e1
                .iter()
                .zip(&e2)
                .map(|(x, y)| *x * Rat::from_integer(a) + *y * Rat::from_integer(b))
                .collect();
            classes_distinct &= !is_integral(&comb);
        }
    }

    let form = discriminant_form(&gram).expect("even nonsingular gram");
    assert_eq!(form.factors(), &[6, 6], "discriminant group is (Z/6)^2");
    let isotropic_count = isotropic_elements(&form).len();
    let orth = orthogonal_group_of_form(&form).expect("small group");

    ArBasisReport {
        group: form.group_string(),
        e1_raw_norm,
        e1_q,
        e2_q,
        pairing,
        e1_order: class_order(&e1),
        e2_order: class_order(&e2),
        classes_distinct,
        isotropic_count,
        orth_order: orth.order,
        orth_census: orth.census,
    }
}

/// The order-4 isometry rotating the two A2 components into each other
/// and swapping the two A1 roots, with its induced action on the
/// discriminant group.
#[derive(Debug, Clone)]
pub struct Phi4Report {
    pub is_isometry: bool,
    pub sends_e1_to_e2: bool,
    pub sends_e2_to_minus_e1: bool,
    pub induced_order: u32,
    pub preserves_q: bool,
}

pub fn phi4_report(lattice: &LeechLattice) -> Phi4Report {
    let rs = RootSet::standard(lattice);
    let gram = rs.gram();

    // root permutation c -> x0 -> z -> r0 -> c, x1 <-> x2 in the basis
    // order c, z, x0, r0, x1, x2
    let image: [usize; 6] = [2, 3, 1, 0, 5, 4];
    let apply = |v: &[Rat]| -> Vec<Rat> {
        let mut out = vec![Rat::zero(); 6];
        for (from, x) in v.iter().enumerate() {
            out[image[from]] += *x;
        }
        out
    };

    // isometry: products of images match products of originals
    let mut is_isometry = true;
    for i in 0..6 {
        for j in 0..6 {
            is_isometry &= gram.get(image[i], image[j]) == gram.get(i, j);
        }
    }

    let (e1, e2) = dual_basis();
    let se1 = apply(&e1);
    let se2 = apply(&e2);
    let diff1: Vec<Rat> = se1.iter().zip(&e2).map(|(a, b)| *a - *b).collect();
    let sum2: Vec<Rat> = se2.iter().zip(&e1).map(|(a, b)| *a + *b).collect();
    let sends_e1_to_e2 = is_integral(&diff1);
    let sends_e2_to_minus_e1 = is_integral(&sum2);

    // order of the induced map on the discriminant group
    let mut induced_order = 0;
    let mut cur1 = e1.clone();
    let mut cur2 = e2.clone();
    for k in 1..=8u32 {
        cur1 = apply(&cur1);
        cur2 = apply(&cur2);
        let d1: Vec<Rat> = cur1.iter().zip(&e1).map(|(a, b)| *a - *b).collect();
        let d2: Vec<Rat> = cur2.iter().zip(&e2).map(|(a, b)| *a - *b).collect();
        if is_integral(&d1) && is_integral(&d2) {
            induced_order = k;
            break;
        }
    }

    // q-preservation on all 36 classes
    let mut preserves_q = true;
    for a in 0..6i128 {
        for b in 0..6i128 {
            let comb: Vec<Rat> = e1
                .iter()
                .zip(&e2)
                .map(|(x, y)| *x * Rat::from_integer(a) + *y * Rat::from_integer(b))
                .collect();
            let image_comb = apply(&comb);
            let q_before = crate::quadform::rat_mod(gram_pair(&gram, &comb, &comb), 2);
            let q_after = crate::quadform::rat_mod(gram_pair(&gram, &image_comb, &image_comb), 2);
            preserves_q &= q_before == q_after;
        }
    }

    Phi4Report {
        is_isometry,
        sends_e1_to_e2,
        sends_e2_to_minus_e1,
        induced_order,
        preserves_q,
    }
}
