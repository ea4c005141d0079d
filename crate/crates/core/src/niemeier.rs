//! Orbit-partition feasibility for the 360-element group acting on
//! the two relevant 24-root configurations (twenty-four A1 components
//! and twelve A2 components), and assembly of the invariant lattices
//! with their glue vectors, verified down to Smith normal form.

use crate::permchar::SubgroupLattice;
use crate::quadform::{smith_normal_form, GramMatrix, Rat};
use std::collections::BTreeSet;
use thiserror::Error;

pub const GROUP_ORDER: u64 = 360;
/// Order of the stabilizer of four points in the large Mathieu group,
/// the ambient group a five-orbit action with four fixed roots would
/// have to embed into.
pub const TETRAD_STABILIZER_ORDER: u64 = 960;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NiemeierError {
    #[error("pairing of glue rows {0} and {1} is not an integer")]
    NonIntegralPairing(usize, usize),
    #[error("glue row {0} has odd self-pairing")]
    OddNorm(usize),
}

/// Orbit sizes an action of the group can realize on at most 24
/// points: 1, or the index of an actual subgroup.
pub fn feasible_orbit_sizes(lat: &SubgroupLattice) -> BTreeSet<u32> {
    let mut sizes = BTreeSet::new();
    sizes.insert(1);
    for &order in &lat.orders {
        let index = GROUP_ORDER as usize / order;
        if index <= 24 {
            sizes.insert(index as u32);
        }
    }
    sizes
}

/// One excluded candidate partition and why it dies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Exclusion {
    /// Some orbit size would need a stabilizer of an order the group
    /// does not have.
    MissingStabilizer { part: u32, order: u32 },
    /// Four fixed roots force an embedding into the tetrad stabilizer,
    /// whose order the group order does not divide.
    TetradDivisibility { group: u64, ambient: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionReport {
    pub raw: Vec<Vec<u32>>,
    pub admitted: Vec<Vec<u32>>,
    pub excluded: Vec<(Vec<u32>, Exclusion)>,
}

/// Five-orbit partitions of the 24 roots of the A1^24 configuration.
///
/// Candidate orbit sizes at this stage only need 360/k integral; the
/// exclusion pass then demands an actual stabilizer subgroup, and the
/// four-fixed-roots candidate dies by the tetrad-stabilizer order.
pub fn partitions_a1_24(lat: &SubgroupLattice) -> PartitionReport {
    let candidate_sizes: Vec<u32> = (1..=24u32)
        .filter(|&k| k == 1 || (k >= 6 && GROUP_ORDER % k as u64 == 0))
        .collect();
    let raw = partitions_into(24, 5, &candidate_sizes);

    let mut admitted = Vec::new();
    let mut excluded = Vec::new();
    'cand: for parts in &raw {
        for &p in parts {
            if p == 1 {
                continue;
            }
            let order = GROUP_ORDER as u32 / p;
            if !lat
                .order_exists(order as usize)
                .expect("candidate sizes divide the group order")
            {
                excluded.push((parts.clone(), Exclusion::MissingStabilizer { part: p, order }));
                continue 'cand;
            }
        }
        if parts.iter().filter(|&&p| p == 1).count() == 4 {
            if GROUP_ORDER != 0 && TETRAD_STABILIZER_ORDER % GROUP_ORDER != 0 {
                excluded.push((
                    parts.clone(),
                    Exclusion::TetradDivisibility {
                        group: GROUP_ORDER,
                        ambient: TETRAD_STABILIZER_ORDER,
                    },
                ));
                continue;
            }
        }
        admitted.push(parts.clone());
    }
    PartitionReport {
        raw,
        admitted,
        excluded,
    }
}

/// All multisets of exactly `count` values from `sizes` summing to
/// `total`, each ascending, listed in lexicographic order.
fn partitions_into(total: u32, count: usize, sizes: &[u32]) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(count);
    fn rec(total: u32, count: usize, sizes: &[u32], min: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if count == 0 {
            if total == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for &s in sizes {
            if s < min || s > total {
                continue;
            }
            cur.push(s);
            rec(total - s, count - 1, sizes, s, cur, out);
            cur.pop();
        }
    }
    rec(total, count, sizes, 1, &mut cur, &mut out);
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentSplit {
    /// orbit sizes on the twelve components
    pub components: Vec<u32>,
    /// resulting orbit sizes on the 24 simple roots, if exactly five
    /// root orbits are achievable (each fixed component contributes
    /// two fixed roots; a component orbit of size m contributes either
    /// one root orbit of 2m or two of m)
    pub root_partition: Option<Vec<u32>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct A2Report {
    pub component_partitions: Vec<ComponentSplit>,
    pub admitted: Vec<Vec<u32>>,
}

/// Five-orbit partitions of the 24 simple roots of the A2^12
/// configuration. The group permutes the twelve components; a root
/// orbit of size 2 over a fixed component is impossible (no index-2
/// subgroup), so fixed components contribute fixed roots only.
pub fn partitions_a2_12(lat: &SubgroupLattice) -> A2Report {
    let feasible = feasible_orbit_sizes(lat);
    let comp_sizes: Vec<u32> = feasible.iter().copied().filter(|&s| s <= 12).collect();

    let mut component_partitions = Vec::new();
    let mut admitted = Vec::new();
    for comps in all_partitions(12, &comp_sizes) {
        let fixed = comps.iter().filter(|&&m| m == 1).count();
        let moving: Vec<u32> = comps.iter().copied().filter(|&m| m > 1).collect();
        // each moving component orbit contributes 1 or 2 root orbits;
        // exactly five in total must come out
        let base = 2 * fixed; // two fixed roots per fixed component
        let mut root_partition = None;
        let choices = 1usize << moving.len();
        for choice in 0..choices {
            let orbit_count = base
                + moving
                    .iter()
                    .enumerate()
                    .map(|(i, _)| if choice >> i & 1 == 0 { 1 } else { 2 })
                    .sum::<usize>();
            if orbit_count != 5 {
                continue;
            }
            let mut parts: Vec<u32> = std::iter::repeat(1).take(base).collect();
            for (i, &m) in moving.iter().enumerate() {
                if choice >> i & 1 == 0 {
                    parts.push(2 * m);
                } else {
                    parts.push(m);
                    parts.push(m);
                }
            }
            parts.sort_unstable();
            root_partition = Some(parts.clone());
            admitted.push(parts);
        }
        component_partitions.push(ComponentSplit {
            components: comps,
            root_partition,
        });
    }
    admitted.sort();
    admitted.dedup();
    A2Report {
        component_partitions,
        admitted,
    }
}

/// Partitions of `total` into parts from `sizes`, any length,
/// ascending within each partition.
fn all_partitions(total: u32, sizes: &[u32]) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(total: u32, sizes: &[u32], min: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if total == 0 {
            out.push(cur.clone());
            return;
        }
        for &s in sizes {
            if s < min || s > total {
                continue;
            }
            cur.push(s);
            rec(total - s, sizes, s, cur, out);
            cur.pop();
        }
    }
    rec(total, sizes, 1, &mut cur, &mut out);
    out
}

/// Gram matrix of the orbit-sum vectors for A1 orbits: s_i are sums of
/// disjoint sets of pairwise-orthogonal norm -2 roots, so the matrix
/// is diag(-2 size_i).
pub fn a1_orbit_gram(sizes: &[i64]) -> Vec<Vec<Rat>> {
    let n = sizes.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        Rat::from_integer(-2 * sizes[i] as i128)
                    } else {
                        Rat::from_integer(0)
                    }
                })
                .collect()
        })
        .collect()
}

/// Gram of a glued basis: rows of `combos` are rational coefficient
/// vectors over the orbit sums; every pairing must be integral and
/// every self-pairing even.
pub fn glued_gram(base: &[Vec<Rat>], combos: &[Vec<Rat>]) -> Result<GramMatrix, NiemeierError> {
    let k = combos.len();
    let mut rows = vec![vec![0i64; k]; k];
    for i in 0..k {
        for j in 0..k {
            let mut acc = Rat::from_integer(0);
            for (a, base_row) in combos[i].iter().zip(base) {
                for (b, g) in combos[j].iter().zip(base_row) {
                    acc += *a * *b * *g;
                }
            }
            if !acc.is_integer() {
                return Err(NiemeierError::NonIntegralPairing(i, j));
            }
            let v = acc.to_integer();
            if i == j && v % 2 != 0 {
                return Err(NiemeierError::OddNorm(i));
            }
            rows[i][j] = v as i64;
        }
    }
    Ok(GramMatrix::from_rows(&rows).expect("glued gram is symmetric"))
}

fn halves(coeffs: [i64; 5]) -> Vec<Rat> {
    coeffs.iter().map(|&c| Rat::new(c as i128, 2)).collect()
}

fn whole(coeffs: [i64; 5]) -> Vec<Rat> {
    coeffs.iter().map(|&c| Rat::from_integer(c as i128)).collect()
}

/// Invariant lattice of the [1,1,1,6,15] orbit split: basis
/// s1, s2, (s1+s2+s4)/2, s3, (s3+s5)/2.
pub fn invariant_gram_1_1_1_6_15() -> Result<GramMatrix, NiemeierError> {
    let base = a1_orbit_gram(&[1, 1, 1, 6, 15]);
    let combos = vec![
        whole([1, 0, 0, 0, 0]),
        whole([0, 1, 0, 0, 0]),
        halves([1, 1, 0, 1, 0]),
        whole([0, 0, 1, 0, 0]),
        halves([0, 0, 1, 0, 1]),
    ];
    glued_gram(&base, &combos)
}

/// Invariant lattice of the [1,1,6,6,10] orbit split: basis
/// s1, s2, (s1+s2+s3)/2, (s1+s2+s4)/2, (s1+s2+s5)/2.
pub fn invariant_gram_1_1_6_6_10() -> Result<GramMatrix, NiemeierError> {
    let base = a1_orbit_gram(&[1, 1, 6, 6, 10]);
    let combos = vec![
        whole([1, 0, 0, 0, 0]),
        whole([0, 1, 0, 0, 0]),
        halves([1, 1, 1, 0, 0]),
        halves([1, 1, 0, 1, 0]),
        halves([1, 1, 0, 0, 1]),
    ];
    glued_gram(&base, &combos)
}

/// Invariant lattice of the A2^12 action with orbits [1,1,1,1,20]:
/// the simple-root pairs of the two fixed components, plus the sum
/// over one root orbit of the ten moving components. Assembled from
/// explicit coordinates: each component occupies three coordinates
/// with simple roots (1,-1,0) and (0,1,-1) under the negated dot
/// product.
pub fn invariant_gram_a2() -> GramMatrix {
    const COMPONENTS: usize = 12;
    let mut basis: Vec<Vec<i64>> = Vec::new();
    let alpha = |c: usize| {
        let mut v = vec![0i64; 3 * COMPONENTS];
        v[3 * c] = 1;
        v[3 * c + 1] = -1;
        v
    };
    let beta = |c: usize| {
        let mut v = vec![0i64; 3 * COMPONENTS];
        v[3 * c + 1] = 1;
        v[3 * c + 2] = -1;
        v
    };
    basis.push(alpha(0));
    basis.push(beta(0));
    basis.push(alpha(1));
    basis.push(beta(1));
    let mut orbit_sum = vec![0i64; 3 * COMPONENTS];
    for c in 2..COMPONENTS {
        let (a, b) = (alpha(c), beta(c));
        for (acc, v) in orbit_sum.iter_mut().zip(a.iter().zip(&b)) {
            *acc += v.0 + v.1;
        }
    }
    basis.push(orbit_sum);

    let n = basis.len();
    let mut rows = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            let dot: i64 = basis[i].iter().zip(&basis[j]).map(|(x, y)| x * y).sum();
            rows[i][j] = -dot;
        }
    }
    GramMatrix::from_rows(&rows).expect("coordinate gram is symmetric")
}

/// One verified invariant lattice: its Gram, determinant, and
/// invariant factors.
#[derive(Debug, Clone)]
pub struct InvariantLattice {
    pub label: &'static str,
    pub gram: GramMatrix,
    pub det: i128,
    pub factors: Vec<i128>,
}

/// Builds and verifies all three invariant lattices.
pub fn invariant_lattices() -> Result<Vec<InvariantLattice>, NiemeierError> {
    let cases: Vec<(&'static str, GramMatrix)> = vec![
        ("A1^24 orbits [1,1,1,6,15]", invariant_gram_1_1_1_6_15()?),
        ("A1^24 orbits [1,1,6,6,10]", invariant_gram_1_1_6_6_10()?),
        ("A2^12 orbits [1,1,1,1,20]", invariant_gram_a2()),
    ];
    Ok(cases
        .into_iter()
        .map(|(label, gram)| {
            let det = gram.det();
            let snf = smith_normal_form(&gram.rows());
            let factors = snf.nontrivial_factors();
            InvariantLattice {
                label,
                gram,
                det,
                factors,
            }
        })
        .collect())
}

/// Leading principal minors alternate in sign: negative definiteness
/// for a symmetric integer matrix.
pub fn is_negative_definite(gram: &GramMatrix) -> bool {
    let n = gram.size();
    (1..=n).all(|k| {
        let sub: Vec<Vec<i64>> = (0..k)
            .map(|i| (0..k).map(|j| gram.get(i, j)).collect())
            .collect();
        let minor = GramMatrix::from_rows(&sub).expect("principal minor is symmetric").det();
        if k % 2 == 0 {
            minor > 0
        } else {
            minor < 0
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permchar::AltSix;
    use std::sync::OnceLock;

    fn lattice() -> &'static SubgroupLattice {
        static L: OnceLock<SubgroupLattice> = OnceLock::new();
        L.get_or_init(|| AltSix::build().subgroup_lattice())
    }

    #[test]
    fn feasible_sizes_are_the_five_known_ones() {
        let sizes: Vec<u32> = feasible_orbit_sizes(lattice()).into_iter().collect();
        assert_eq!(sizes, vec![1, 6, 10, 15, 20]);
    }

    #[test]
    fn a1_candidates_and_exclusions() {
        let rep = partitions_a1_24(lattice());
        assert_eq!(
            rep.raw,
            vec![
                vec![1, 1, 1, 1, 20],
                vec![1, 1, 1, 6, 15],
                vec![1, 1, 1, 9, 12],
                vec![1, 1, 6, 6, 10],
                vec![1, 1, 6, 8, 8],
            ]
        );
        assert_eq!(rep.admitted, vec![vec![1, 1, 1, 6, 15], vec![1, 1, 6, 6, 10]]);
        assert_eq!(rep.excluded.len(), 3);
        let reason_of = |parts: &[u32]| {
            rep.excluded
                .iter()
                .find(|(p, _)| p == parts)
                .map(|(_, e)| e.clone())
                .expect("partition should be excluded")
        };
        assert_eq!(
            reason_of(&[1, 1, 6, 8, 8]),
            Exclusion::MissingStabilizer { part: 8, order: 45 }
        );
        assert_eq!(
            reason_of(&[1, 1, 1, 9, 12]),
            Exclusion::MissingStabilizer { part: 9, order: 40 }
        );
        assert_eq!(
            reason_of(&[1, 1, 1, 1, 20]),
            Exclusion::TetradDivisibility {
                group: 360,
                ambient: 960
            }
        );
        assert_ne!(960 % 360, 0);
    }

    #[test]
    fn a2_component_analysis_forces_one_partition() {
        let rep = partitions_a2_12(lattice());
        assert_eq!(rep.admitted, vec![vec![1, 1, 1, 1, 20]]);
        // the component partitions considered are 1^12, 6+1^6, 6+6,
        // and 10+1+1; only the last can make exactly five root orbits
        let comps: Vec<Vec<u32>> = rep
            .component_partitions
            .iter()
            .map(|c| c.components.clone())
            .collect();
        assert_eq!(
            comps,
            vec![
                vec![1; 12],
                vec![1, 1, 1, 1, 1, 1, 6],
                vec![1, 1, 10],
                vec![6, 6],
            ]
        );
        let workable: Vec<&ComponentSplit> = rep
            .component_partitions
            .iter()
            .filter(|c| c.root_partition.is_some())
            .collect();
        assert_eq!(workable.len(), 1);
        assert_eq!(workable[0].components, vec![1, 1, 10]);
    }

    #[test]
    fn first_invariant_gram_matches_the_displayed_matrix() {
        let g = invariant_gram_1_1_1_6_15().unwrap();
        let expected = [
            [-2, 0, -1, 0, 0],
            [0, -2, -1, 0, 0],
            [-1, -1, -4, 0, 0],
            [0, 0, 0, -2, -1],
            [0, 0, 0, -1, -8],
        ];
        for i in 0..5 {
            for j in 0..5 {
                assert_eq!(g.get(i, j), expected[i][j], "entry ({i},{j})");
            }
        }
    }

    #[test]
    fn second_invariant_gram_matches_the_displayed_matrix() {
        let g = invariant_gram_1_1_6_6_10().unwrap();
        let expected = [
            [-2, 0, -1, -1, -1],
            [0, -2, -1, -1, -1],
            [-1, -1, -4, -1, -1],
            [-1, -1, -1, -4, -1],
            [-1, -1, -1, -1, -6],
        ];
        for i in 0..5 {
            for j in 0..5 {
                assert_eq!(g.get(i, j), expected[i][j], "entry ({i},{j})");
            }
        }
    }

    #[test]
    fn a2_invariant_gram_is_two_blocks_and_a_long_vector() {
        let g = invariant_gram_a2();
        let expected = [
            [-2, 1, 0, 0, 0],
            [1, -2, 0, 0, 0],
            [0, 0, -2, 1, 0],
            [0, 0, 1, -2, 0],
            [0, 0, 0, 0, -20],
        ];
        for i in 0..5 {
            for j in 0..5 {
                assert_eq!(g.get(i, j), expected[i][j], "entry ({i},{j})");
            }
        }
    }

    #[test]
    fn all_three_lattices_have_det_180_and_factors_3_60() {
        let lattices = invariant_lattices().unwrap();
        assert_eq!(lattices.len(), 3);
        for lat in &lattices {
            assert_eq!(lat.det.abs(), 180, "{}", lat.label);
            assert_eq!(lat.factors, vec![3, 60], "{}", lat.label);
            assert!(is_negative_definite(&lat.gram), "{}", lat.label);
        }
    }

    #[test]
    fn orbit_sums_have_even_doubled_norms() {
        // 2 x any glue vector returns to the integer span, so all half
        // coefficients are legal inputs; sanity-check the bookkeeping
        // (s_i, s_i) = -2 size_i
        let base = a1_orbit_gram(&[1, 1, 1, 6, 15]);
        for (i, &s) in [1i128, 1, 1, 6, 15].iter().enumerate() {
            assert_eq!(base[i][i], Rat::from_integer(-2 * s));
        }
    }

    #[test]
    fn invalid_glue_is_rejected() {
        let base = a1_orbit_gram(&[1, 1, 1, 6, 15]);
        // third-integer coefficients pair non-integrally with s1
        let thirds = vec![
            vec![Rat::new(1, 3), Rat::from_integer(0), Rat::from_integer(0), Rat::from_integer(0), Rat::from_integer(0)],
            whole([1, 0, 0, 0, 0]),
        ];
        assert_eq!(
            glued_gram(&base, &thirds).err(),
            Some(NiemeierError::NonIntegralPairing(0, 0))
        );
        // s4/2 pairs integrally but has odd self-pairing -3
        let half_s4 = vec![halves([0, 0, 0, 1, 0])];
        assert_eq!(
            glued_gram(&base, &half_s4).err(),
            Some(NiemeierError::OddNorm(0))
        );
    }
}
