//! The Leech lattice in the standard coordinate system indexed by the
//! 24 points of the Golay code, with the negative definite form
//! (u, v) = -(u . v)/8.
//!
//! Membership is decided by the congruence description: all
//! coordinates share a parity m, each mod-4 residue class cuts out a
//! Golay codeword, and the coordinate sum is 4m mod 8. On top of that
//! the module enumerates the 196560 vectors of norm -4 by shape,
//! certifies that no vector has norm -2, and builds the five-vector
//! configuration (one norm -6 vector and four norm -4 vectors) whose
//! orthogonal complement machinery the rest of the crate consumes.

use crate::golay::{GolayCode, GolaySet, POINT_COUNT};
use crate::quadform::{row_hnf, smith_normal_form, GramMatrix};
use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A vector in the 24-dimensional coordinate system.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct LeechVector(pub [i64; POINT_COUNT]);

impl LeechVector {
    pub const ZERO: LeechVector = LeechVector([0; POINT_COUNT]);

    /// The basis vector at one point.
    pub fn nu(index: usize) -> LeechVector {
        let mut c = [0i64; POINT_COUNT];
        c[index] = 1;
        LeechVector(c)
    }

    /// The indicator vector of a point set.
    pub fn indicator(set: GolaySet) -> LeechVector {
        let mut c = [0i64; POINT_COUNT];
        for i in set.members() {
            c[i] = 1;
        }
        LeechVector(c)
    }

    pub fn coords(&self) -> &[i64; POINT_COUNT] {
        &self.0
    }

    pub fn dot(&self, other: &LeechVector) -> i64 {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

impl fmt::Debug for LeechVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LeechVector({:?})", self.0)
    }
}

impl Add for LeechVector {
    type Output = LeechVector;
    fn add(self, rhs: LeechVector) -> LeechVector {
        let mut c = self.0;
        for (a, b) in c.iter_mut().zip(&rhs.0) {
            *a += b;
        }
        LeechVector(c)
    }
}

impl Sub for LeechVector {
    type Output = LeechVector;
    fn sub(self, rhs: LeechVector) -> LeechVector {
        let mut c = self.0;
        for (a, b) in c.iter_mut().zip(&rhs.0) {
            *a -= b;
        }
        LeechVector(c)
    }
}

impl Neg for LeechVector {
    type Output = LeechVector;
    fn neg(self) -> LeechVector {
        let mut c = self.0;
        for a in c.iter_mut() {
            *a = -*a;
        }
        LeechVector(c)
    }
}

impl Mul<LeechVector> for i64 {
    type Output = LeechVector;
    fn mul(self, rhs: LeechVector) -> LeechVector {
        let mut c = rhs.0;
        for a in c.iter_mut() {
            *a *= self;
        }
        LeechVector(c)
    }
}

/// Inner product (u, v) = -(u . v)/8; the dot product of lattice
/// vectors is always divisible by 8.
pub fn inner(u: &LeechVector, v: &LeechVector) -> i64 {
    let d = u.dot(v);
    assert!(d % 8 == 0, "dot product {d} not divisible by 8");
    -d / 8
}

pub fn norm(u: &LeechVector) -> i64 {
    inner(u, u)
}

/// Why a vector is not in the lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MembershipFailure {
    /// Coordinates mix even and odd values.
    MixedParity,
    /// The set of coordinates in this mod-4 residue class is not a
    /// codeword.
    ResidueClassNotInCode { class: u8 },
    /// Coordinate sum is not 4m mod 8 (m the common parity).
    SumCongruence { sum: i64, expected_mod_8: i64 },
}

/// The lattice, carrying the code that defines it.
pub struct LeechLattice {
    code: GolayCode,
}

impl Default for LeechLattice {
    fn default() -> Self {
        Self::new()
    }
}

impl LeechLattice {
    pub fn new() -> Self {
        LeechLattice {
            code: GolayCode::build(),
        }
    }

    pub fn code(&self) -> &GolayCode {
        &self.code
    }

    pub fn contains(&self, v: &LeechVector) -> bool {
        self.membership_failure(v).is_none()
    }

    pub fn membership_failure(&self, v: &LeechVector) -> Option<MembershipFailure> {
        let m = v.0[0].rem_euclid(2);
        if v.0.iter().any(|c| c.rem_euclid(2) != m) {
            return Some(MembershipFailure::MixedParity);
        }
        for class in 0..4u8 {
            let mut mask = 0u32;
            for (i, &c) in v.0.iter().enumerate() {
                if c.rem_euclid(4) == i64::from(class) {
                    mask |= 1 << i;
                }
            }
            let set = GolaySet::from_mask(mask).expect("24-bit mask");
            if !self.code.contains(set) {
                return Some(MembershipFailure::ResidueClassNotInCode { class });
            }
        }
        let sum: i64 = v.0.iter().sum();
        if sum.rem_euclid(8) != 4 * m {
            return Some(MembershipFailure::SumCongruence {
                sum,
                expected_mod_8: 4 * m,
            });
        }
        None
    }

    /// 760 generators: twice the indicator of every octad, plus the
    /// all-ones vector lowered by 4 at the first point.
    pub fn generators(&self) -> Vec<LeechVector> {
        let mut gens: Vec<LeechVector> = self
            .code
            .octads()
            .iter()
            .map(|&k| 2 * LeechVector::indicator(k))
            .collect();
        gens.push(LeechVector::indicator(GolaySet::OMEGA) - 4 * LeechVector::nu(0));
        debug_assert!(gens.iter().all(|g| self.contains(g)));
        gens
    }

    /// Reduces the generator set to a triangular basis and certifies
    /// it spans a unimodular lattice under the form.
    pub fn verify_generators(&self) -> GeneratorReport {
        let gens = self.generators();
        let rows: Vec<Vec<i64>> = gens.iter().map(|g| g.0.to_vec()).collect();
        let hnf = row_hnf(&rows);
        let rank = hnf.rank();
        let diag_product = hnf.diag_product();

        // Gram of the triangular basis; entries must come out integral.
        let mut gram_integral = true;
        let n = hnf.basis.len();
        let mut gram_rows = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in 0..n {
                let d: i128 = hnf.basis[i]
                    .iter()
                    .zip(&hnf.basis[j])
                    .map(|(a, b)| a * b)
                    .sum();
                if d % 8 != 0 {
                    gram_integral = false;
                }
                gram_rows[i][j] = i64::try_from(-d / 8).expect("gram entry fits i64");
            }
        }

        // det of the Gram via the basis determinant: for a row basis B,
        // det(-B B^T / 8) = (det B)^2 / 8^24 in dimension 24.
        let gram_det = if rank == POINT_COUNT {
            let num = diag_product * diag_product;
            let den = 8i128.pow(POINT_COUNT as u32);
            assert!(num % den == 0, "squared covolume not divisible by 8^24");
            num / den
        } else {
            0
        };

        // independent confirmation: the Gram matrix reduces to the
        // identity over Z exactly when it is unimodular
        let snf = smith_normal_form(&gram_rows);
        let gram_unimodular = snf.verify(&gram_rows) && snf.diag.iter().all(|&d| d == 1);

        // the octad vectors alone span a proper sublattice
        let octad_rows: Vec<Vec<i64>> = rows[..self.code.octads().len()].to_vec();
        let octad_hnf = row_hnf(&octad_rows);
        let octads_only_rank = octad_hnf.rank();
        let octads_only_index = if octads_only_rank == POINT_COUNT {
            let d0 = octad_hnf.diag_product();
            assert!(d0 % diag_product == 0, "sublattice covolume not a multiple");
            d0 / diag_product
        } else {
            0
        };

        GeneratorReport {
            generator_count: gens.len(),
            rank,
            diag_product,
            gram_integral,
            gram_det,
            gram_unimodular,
            octads_only_rank,
            octads_only_index,
        }
    }

    /// Visits every vector of norm -4 exactly once.
    ///
    /// A lattice vector with u . u = 32 is one of three shapes:
    /// all-even coordinates are 0 and +-2 on an octad (a 4 would force
    /// the four remaining +-2s onto a weight-4 set, which is not a
    /// codeword, and two 4s with anything else overshoot), two +-4s,
    /// or all-odd coordinates which must be 23 +-1s and a single +-3
    /// (24 odd squares summing to 32 admit no other split).
    pub fn for_each_norm_four(&self, mut f: impl FnMut(LeechVector)) {
        // +-2 on an octad, evenly many minus signs
        for &k in self.code.octads() {
            let pos = k.members();
            for signs in 0u32..256 {
                if signs.count_ones() % 2 != 0 {
                    continue;
                }
                let mut c = [0i64; POINT_COUNT];
                for (bit, &p) in pos.iter().enumerate() {
                    c[p] = if signs & (1 << bit) != 0 { -2 } else { 2 };
                }
                f(LeechVector(c));
            }
        }
        // 23 +-1s and one +-3: the +-1 pattern follows a codeword, the
        // exceptional coordinate is shifted by 4 to keep its class
        for word in self.code.words() {
            let mut base = [-1i64; POINT_COUNT];
            for i in word.members() {
                base[i] = 1;
            }
            for p in 0..POINT_COUNT {
                let mut c = base;
                c[p] += if word.contains(p) { -4 } else { 4 };
                f(LeechVector(c));
            }
        }
        // two +-4s
        for i in 0..POINT_COUNT {
            for j in i + 1..POINT_COUNT {
                for (si, sj) in [(4, 4), (4, -4), (-4, 4), (-4, -4)] {
                    let mut c = [0i64; POINT_COUNT];
                    c[i] = si;
                    c[j] = sj;
                    f(LeechVector(c));
                }
            }
        }
    }

    pub fn norm_four_census(&self) -> NormFourCensus {
        let mut census = NormFourCensus {
            octad_shape: 0,
            odd_shape: 0,
            pair_shape: 0,
        };
        self.for_each_norm_four(|v| match shape_of(&v) {
            Shape::Octad => census.octad_shape += 1,
            Shape::Odd => census.odd_shape += 1,
            Shape::Pair => census.pair_shape += 1,
        });
        census
    }

    /// Exhausts every integer vector of norm -2 and shows none is in
    /// the lattice. Candidates with u . u = 16 are a single +-4 or
    /// four +-2s; an all-odd vector already has u . u >= 24, and mixed
    /// parities are excluded by the congruence description itself.
    pub fn no_root_report(&self) -> NoRootReport {
        let mut four_spike_checked = 0usize;
        let mut all_rejected = true;
        for i in 0..POINT_COUNT {
            for s in [4i64, -4] {
                let v = s * LeechVector::nu(i);
                four_spike_checked += 1;
                all_rejected &= !self.contains(&v);
            }
        }
        let mut two_quad_checked = 0usize;
        for a in 0..POINT_COUNT {
            for b in a + 1..POINT_COUNT {
                for c in b + 1..POINT_COUNT {
                    for d in c + 1..POINT_COUNT {
                        for signs in 0u32..16 {
                            let mut co = [0i64; POINT_COUNT];
                            for (bit, &p) in [a, b, c, d].iter().enumerate() {
                                co[p] = if signs & (1 << bit) != 0 { -2 } else { 2 };
                            }
                            two_quad_checked += 1;
                            all_rejected &= !self.contains(&LeechVector(co));
                        }
                    }
                }
            }
        }
        NoRootReport {
            four_spike_checked,
            two_quad_checked,
            all_rejected,
        }
    }

    /// The standard five-vector configuration.
    pub fn pentagon(&self) -> Pentagon {
        let k0 = GolaySet::from_labels(&["inf", "1", "2", "3", "4", "6", "15", "18"])
            .expect("valid labels");
        let k1 = GolaySet::from_labels(&["inf", "0", "1", "2", "3", "5", "14", "17"])
            .expect("valid labels");
        let k2 = GolaySet::from_labels(&["inf", "0", "1", "2", "4", "13", "16", "22"])
            .expect("valid labels");
        for k in [k0, k1, k2] {
            assert!(self.code.contains(k), "pentagon set {k} is not a codeword");
            assert_eq!(k.weight(), 8, "pentagon set {k} is not an octad");
        }
        let inf = LeechVector::nu(0);
        let p = Pentagon {
            c: 4 * inf + LeechVector::indicator(GolaySet::OMEGA),
            x0: 4 * inf + 4 * LeechVector::nu(1),
            r0: 2 * LeechVector::indicator(k0),
            x1: 2 * LeechVector::indicator(k1),
            x2: 2 * LeechVector::indicator(k2),
        };
        for v in p.vectors() {
            assert!(self.contains(&v), "pentagon vector not in the lattice");
        }
        assert_eq!(norm(&p.c), -6);
        for v in [&p.x0, &p.r0, &p.x1, &p.x2] {
            assert_eq!(norm(v), -4);
        }
        p
    }

    /// All norm -4 vectors with prescribed inner products against the
    /// pentagon: -3 with c and -2 with each of x0, r0, x1.
    pub fn orthogonal_census(&self, p: &Pentagon) -> SPool {
        let mut vectors = Vec::new();
        let (mut octad_case, mut odd_case, mut pair_case) = (0usize, 0, 0);
        self.for_each_norm_four(|v| {
            if inner(&v, &p.c) == -3
                && inner(&v, &p.x0) == -2
                && inner(&v, &p.r0) == -2
                && inner(&v, &p.x1) == -2
            {
                match shape_of(&v) {
                    Shape::Octad => octad_case += 1,
                    Shape::Odd => odd_case += 1,
                    Shape::Pair => pair_case += 1,
                }
                vectors.push(v);
            }
        });
        SPool {
            vectors,
            octad_case,
            odd_case,
            pair_case,
        }
    }

    /// Counts norm -4 vectors w with (w, c) = -3; these come in pairs
    /// {w, c - w}, and the census set injects into the pairs.
    pub fn complement_pairs(&self, p: &Pentagon, pool: &SPool) -> ComplementReport {
        let mut matching = Vec::new();
        self.for_each_norm_four(|v| {
            if inner(&v, &p.c) == -3 {
                matching.push(v);
            }
        });
        let vector_count = matching.len();
        // pairing is an involution without fixed points: c - w = w
        // would need c = 2w, impossible since c is primitive
        let set: BTreeSet<[i64; POINT_COUNT]> = matching.iter().map(|v| v.0).collect();
        let closed_under_pairing = matching.iter().all(|v| set.contains(&(p.c - *v).0));
        let pair_count = vector_count / 2;

        // if w is in the census pool, its partner never is: the
        // partner's inner product with x0 is -3 - (-2) = -1
        let pool_set: BTreeSet<[i64; POINT_COUNT]> = pool.vectors.iter().map(|v| v.0).collect();
        let embedding_ok = pool
            .vectors
            .iter()
            .all(|v| !pool_set.contains(&(p.c - *v).0));

        ComplementReport {
            vector_count,
            pair_count,
            closed_under_pairing,
            embedding_ok,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Shape {
    Octad,
    Odd,
    Pair,
}

fn shape_of(v: &LeechVector) -> Shape {
    if v.0.iter().all(|c| c.rem_euclid(2) == 1) {
        Shape::Odd
    } else if v.0.iter().any(|&c| c.abs() == 4) {
        Shape::Pair
    } else {
        Shape::Octad
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NormFourCensus {
    pub octad_shape: usize,
    pub odd_shape: usize,
    pub pair_shape: usize,
}

impl NormFourCensus {
    pub fn total(&self) -> usize {
        self.octad_shape + self.odd_shape + self.pair_shape
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NoRootReport {
    pub four_spike_checked: usize,
    pub two_quad_checked: usize,
    pub all_rejected: bool,
}

#[derive(Debug, Clone)]
pub struct GeneratorReport {
    pub generator_count: usize,
    pub rank: usize,
    pub diag_product: i128,
    pub gram_integral: bool,
    pub gram_det: i128,
    pub gram_unimodular: bool,
    pub octads_only_rank: usize,
    pub octads_only_index: i128,
}

/// One norm -6 vector and four norm -4 vectors with fixed mutual
/// inner products.
#[derive(Debug, Clone)]
pub struct Pentagon {
    pub c: LeechVector,
    pub x0: LeechVector,
    pub r0: LeechVector,
    pub x1: LeechVector,
    pub x2: LeechVector,
}

impl Pentagon {
    pub fn vectors(&self) -> [LeechVector; 5] {
        [self.c, self.x0, self.r0, self.x1, self.x2]
    }

    pub fn labels() -> [&'static str; 5] {
        ["c", "x0", "r0", "x1", "x2"]
    }

    pub fn gram(&self) -> GramMatrix {
        let vs = self.vectors();
        let rows: Vec<Vec<i64>> = vs
            .iter()
            .map(|u| vs.iter().map(|v| inner(u, v)).collect())
            .collect();
        GramMatrix::from_rows(&rows).expect("inner products are symmetric")
    }
}

/// The filtered norm -4 vectors, classified by coordinate shape.
#[derive(Debug, Clone)]
pub struct SPool {
    pub vectors: Vec<LeechVector>,
    pub octad_case: usize,
    pub odd_case: usize,
    pub pair_case: usize,
}

impl SPool {
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn contains(&self, v: &LeechVector) -> bool {
        self.vectors.contains(v)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComplementReport {
    pub vector_count: usize,
    pub pair_count: usize,
    pub closed_under_pairing: bool,
    pub embedding_ok: bool,
}

/// All sub-multisets of `sizes` summing to `target`, returned as
/// sorted multisets without duplicates.
pub fn subset_sum_decompositions(sizes: &[u64], target: u64) -> Vec<Vec<u64>> {
    let mut found: BTreeSet<Vec<u64>> = BTreeSet::new();
    let n = sizes.len();
    assert!(n < 30, "exhaustive subset scan only meant for short lists");
    for mask in 0u64..(1 << n) {
        let mut sum = 0u64;
        let mut subset = Vec::new();
        for (i, &s) in sizes.iter().enumerate() {
            if mask & (1 << i) != 0 {
                sum += s;
                subset.push(s);
            }
        }
        if sum == target && !subset.is_empty() {
            subset.sort_unstable();
            found.insert(subset);
        }
    }
    found.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::OnceLock;

    fn lattice() -> &'static LeechLattice {
        static L: OnceLock<LeechLattice> = OnceLock::new();
        L.get_or_init(LeechLattice::new)
    }

    #[test]
    fn membership_congruences() {
        let l = lattice();
        // all generators are members
        for g in l.generators() {
            assert_eq!(l.membership_failure(&g), None, "{g:?}");
        }
        // the all-ones vector has the right parity and classes but the
        // wrong sum
        let ones = LeechVector::indicator(GolaySet::OMEGA);
        assert_eq!(
            l.membership_failure(&ones),
            Some(MembershipFailure::SumCongruence {
                sum: 24,
                expected_mod_8: 4
            })
        );
        // flipping one sign of an octad vector breaks the sum
        let octad = l.code().octads()[0];
        let mut v = 2 * LeechVector::indicator(octad);
        let p = octad.members()[3];
        v.0[p] = -2;
        assert!(matches!(
            l.membership_failure(&v),
            Some(MembershipFailure::SumCongruence { .. })
        ));
        // a lone pair of 2s fails the residue-class condition (class 0,
        // the 22-point complement, is inspected first)
        let w = 2 * LeechVector::nu(0) + 2 * LeechVector::nu(1);
        assert_eq!(
            l.membership_failure(&w),
            Some(MembershipFailure::ResidueClassNotInCode { class: 0 })
        );
        // mixed parity is caught first
        let m = LeechVector::nu(0) + 2 * LeechVector::nu(1);
        assert_eq!(
            l.membership_failure(&m),
            Some(MembershipFailure::MixedParity)
        );
    }

    #[test]
    fn lattice_is_closed_under_addition() {
        let l = lattice();
        let gens = l.generators();
        for i in (0..gens.len()).step_by(97) {
            for j in (0..gens.len()).step_by(101) {
                let s = gens[i] + gens[j];
                assert!(l.contains(&s));
                let d = gens[i] - gens[j];
                assert!(l.contains(&d));
            }
        }
    }

    #[test]
    fn norm_four_shapes_count_196560() {
        let census = lattice().norm_four_census();
        assert_eq!(census.octad_shape, 97152);
        assert_eq!(census.odd_shape, 98304);
        assert_eq!(census.pair_shape, 1104);
        assert_eq!(census.total(), 196560);
    }

    #[test]
    fn every_enumerated_vector_is_a_member_of_norm_minus_four() {
        let l = lattice();
        let mut n = 0usize;
        l.for_each_norm_four(|v| {
            assert_eq!(l.membership_failure(&v), None, "{v:?}");
            assert_eq!(norm(&v), -4, "{v:?}");
            n += 1;
        });
        assert_eq!(n, 196560);
    }

    #[test]
    fn enumerated_vectors_are_distinct() {
        let l = lattice();
        let mut seen = std::collections::HashSet::with_capacity(200_000);
        l.for_each_norm_four(|v| {
            assert!(seen.insert(v.0), "duplicate {v:?}");
        });
        assert_eq!(seen.len(), 196560);
    }

    #[test]
    fn no_vector_has_norm_minus_two() {
        let report = lattice().no_root_report();
        assert_eq!(report.four_spike_checked, 48);
        assert_eq!(report.two_quad_checked, 170016);
        assert!(report.all_rejected);
    }

    #[test]
    fn generator_reduction_is_unimodular() {
        let report = lattice().verify_generators();
        assert_eq!(report.generator_count, 760);
        assert_eq!(report.rank, 24);
        assert_eq!(report.diag_product, 1 << 36);
        assert!(report.gram_integral);
        assert_eq!(report.gram_det, 1);
        assert!(report.gram_unimodular);
        assert_eq!(report.octads_only_rank, 24);
        assert_eq!(
            report.octads_only_index, 4,
            "octad vectors alone span an index-4 sublattice"
        );
    }

    #[test]
    fn pentagon_inner_products() {
        let l = lattice();
        let p = l.pentagon();
        let expected = vec![
            vec![-6, -3, -3, -3, -3],
            vec![-3, -4, -1, -2, -2],
            vec![-3, -1, -4, -2, -2],
            vec![-3, -2, -2, -4, -2],
            vec![-3, -2, -2, -2, -4],
        ];
        assert_eq!(p.gram().rows(), expected);
    }

    #[test]
    fn census_finds_81_vectors_in_three_cases() {
        let l = lattice();
        let p = l.pentagon();
        let pool = l.orthogonal_census(&p);
        assert_eq!(pool.len(), 81);
        assert_eq!(pool.octad_case, 30);
        assert_eq!(pool.odd_case, 48);
        assert_eq!(pool.pair_case, 3);
        assert!(pool.contains(&p.x2), "x2 itself passes the filter");
    }

    #[test]
    fn complement_pairing_bounds_the_census() {
        let l = lattice();
        let p = l.pentagon();
        let pool = l.orthogonal_census(&p);
        let rep = l.complement_pairs(&p, &pool);
        assert_eq!(rep.vector_count, 552);
        assert_eq!(rep.pair_count, 276);
        assert!(rep.closed_under_pairing);
        assert!(rep.embedding_ok);
    }

    #[test]
    fn orbit_size_subset_sums() {
        let sizes = [1, 10, 20, 20, 30, 30, 36, 36, 45, 45];
        let hits = subset_sum_decompositions(&sizes, 81);
        assert_eq!(
            hits,
            vec![
                vec![1, 10, 20, 20, 30],
                vec![1, 20, 30, 30],
                vec![36, 45],
            ]
        );
        assert!(subset_sum_decompositions(&sizes, 54).is_empty());
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(32))]

            #[test]
            fn integer_combinations_stay_in_the_lattice(
                i in 0usize..760, j in 0usize..760, a in -3i64..=3, b in -3i64..=3,
            ) {
                let l = lattice();
                let gens = l.generators();
                let v = a * gens[i] + b * gens[j];
                prop_assert!(l.contains(&v));
            }

            #[test]
            fn random_small_vectors_rarely_join(coords in proptest::array::uniform24(-2i64..=2)) {
                let l = lattice();
                let v = LeechVector(coords);
                // membership of arbitrary vectors must agree with the
                // congruence test run a second time (determinism)
                prop_assert_eq!(l.contains(&v), l.membership_failure(&v).is_none());
            }
        }
    }
}
