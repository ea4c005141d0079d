//! The binary Golay code of length 24.
//!
//! Coordinates are indexed by the projective line over F_23, written
//! `{inf, 0, 1, ..., 22}`. A subset of the 24 points is packed into the low
//! 24 bits of a `u32`: bit 0 is `inf`, bit `r + 1` is the residue `r`.
//!
//! The code is the F_2-span of the 24 sets `N_i`, where
//!
//! * `N` is the complement of the squares in F_23 (together with `inf`),
//! * `N_inf` is the whole point set, and
//! * `N_i = { n - i : n in N }` for `i in F_23`, with `inf` fixed.
//!
//! The span has dimension 12 and weight distribution
//!
//! | weight | 0 | 8   | 12   | 16  | 24 |
//! |--------|---|-----|------|-----|----|
//! | words  | 1 | 759 | 2576 | 759 | 1  |
//!
//! The weight-8 words (octads) form the Steiner system St(5, 8, 24): every
//! 5-element subset of the 24 points lies in exactly one octad.

use std::fmt;
use thiserror::Error;

/// Number of coordinates.
pub const POINT_COUNT: usize = 24;

const WORD_MASK: u32 = 0x00ff_ffff;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GolayError {
    #[error("expected a 5-element subset, got {0} elements")]
    NotAFiveSet(usize),
    #[error("unknown point label `{0}`")]
    BadLabel(String),
    #[error("mask {0:#x} has bits outside the 24 coordinate positions")]
    BadMask(u32),
}

/// Returns the display label of a coordinate: `"inf"` or `"0"`..`"22"`.
pub fn point_label(index: usize) -> String {
    assert!(index < POINT_COUNT, "point index {index} out of range");
    if index == 0 {
        "inf".to_string()
    } else {
        (index - 1).to_string()
    }
}

/// Parses `"inf"` or a residue `"0"`..`"22"` back to a coordinate index.
pub fn parse_point_label(label: &str) -> Result<usize, GolayError> {
    if label == "inf" {
        return Ok(0);
    }
    match label.parse::<usize>() {
        Ok(r) if r < 23 => Ok(r + 1),
        _ => Err(GolayError::BadLabel(label.to_string())),
    }
}

/// A subset of the 24 points, packed into the low 24 bits of a `u32`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GolaySet(u32);

impl GolaySet {
    /// The full point set.
    pub const OMEGA: GolaySet = GolaySet(WORD_MASK);
    /// The empty set.
    pub const EMPTY: GolaySet = GolaySet(0);

    pub fn from_mask(mask: u32) -> Result<Self, GolayError> {
        if mask & !WORD_MASK != 0 {
            return Err(GolayError::BadMask(mask));
        }
        Ok(GolaySet(mask))
    }

    pub fn from_points(points: &[usize]) -> Self {
        let mut mask = 0u32;
        for &p in points {
            assert!(p < POINT_COUNT, "point index {p} out of range");
            mask |= 1 << p;
        }
        GolaySet(mask)
    }

    /// Builds a set from labels such as `["inf", "1", "15"]`.
    pub fn from_labels(labels: &[&str]) -> Result<Self, GolayError> {
        let mut mask = 0u32;
        for label in labels {
            mask |= 1 << parse_point_label(label)?;
        }
        Ok(GolaySet(mask))
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn weight(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, point: usize) -> bool {
        assert!(point < POINT_COUNT);
        self.0 >> point & 1 == 1
    }

    pub fn is_subset_of(self, other: GolaySet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn complement(self) -> GolaySet {
        GolaySet(!self.0 & WORD_MASK)
    }

    pub fn intersection(self, other: GolaySet) -> GolaySet {
        GolaySet(self.0 & other.0)
    }

    pub fn members(self) -> Vec<usize> {
        (0..POINT_COUNT).filter(|&p| self.contains(p)).collect()
    }

    /// Comma-separated member labels in coordinate order, e.g. `inf,1,2,3`.
    pub fn label_csv(self) -> String {
        let labels: Vec<String> = self.members().into_iter().map(point_label).collect();
        labels.join(",")
    }

    /// The 24-bit mask as six hex digits.
    pub fn hex_mask(self) -> String {
        format!("{:06x}", self.0)
    }
}

impl std::ops::BitXor for GolaySet {
    type Output = GolaySet;
    /// Symmetric difference, which is the F_2 sum of indicator vectors.
    fn bitxor(self, rhs: GolaySet) -> GolaySet {
        GolaySet(self.0 ^ rhs.0)
    }
}

impl fmt::Display for GolaySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.label_csv())
    }
}

/// The binary Golay code, fully materialized.
#[derive(Debug, Clone)]
pub struct GolayCode {
    /// All 4096 codeword masks, sorted.
    words: Vec<u32>,
    /// The 759 weight-8 codewords, sorted by mask.
    octads: Vec<GolaySet>,
    /// Count of weight-12 codewords.
    dodecad_count: usize,
    /// Row-reduced basis used for O(1) membership tests.
    basis: Vec<u32>,
    /// Pivot bit of each basis row.
    pivots: Vec<u32>,
}

impl GolayCode {
    /// The 24 generating sets `N_inf = Omega` and `N_i` for `i in F_23`.
    pub fn generators() -> [GolaySet; 24] {
        // Squares mod 23, including 0. Exactly 12 values, so the complement
        // N picks up the 11 non-residues plus inf.
        let mut is_square = [false; 23];
        for a in 0u32..23 {
            is_square[(a * a % 23) as usize] = true;
        }
        let mut n_mask = 1u32; // inf
        for r in 0..23 {
            if !is_square[r] {
                n_mask |= 1 << (r + 1);
            }
        }
        let n = GolaySet(n_mask);
        debug_assert_eq!(n.weight(), 12);

        let mut gens = [GolaySet::EMPTY; 24];
        gens[0] = GolaySet::OMEGA; // N_inf
        for i in 0..23usize {
            let mut mask = 1u32; // inf stays
            for r in 0..23usize {
                if n.contains(r + 1) {
                    let shifted = (r + 23 - i) % 23;
                    mask |= 1 << (shifted + 1);
                }
            }
            gens[i + 1] = GolaySet(mask);
        }
        gens
    }

    /// Spans the generators over F_2 and materializes all 4096 words.
    ///
    /// Construction is self-verifying: the dimension, the weight
    /// distribution, and the octad count are all asserted.
    pub fn build() -> Self {
        let gens = Self::generators();

        // Gaussian elimination over F_2 on the 24 generator masks.
        let mut basis: Vec<u32> = Vec::new();
        let mut pivots: Vec<u32> = Vec::new();
        for g in gens {
            let mut w = g.mask();
            for (b, &p) in basis.iter().zip(&pivots) {
                if w >> p & 1 == 1 {
                    w ^= b;
                }
            }
            if w != 0 {
                let p = w.trailing_zeros();
                // keep earlier rows reduced so membership tests stay cheap
                for b in basis.iter_mut() {
                    if *b >> p & 1 == 1 {
                        *b ^= w;
                    }
                }
                basis.push(w);
                pivots.push(p);
            }
        }
        assert_eq!(basis.len(), 12, "span of the N_i must have dimension 12");

        let mut words: Vec<u32> = Vec::with_capacity(1 << basis.len());
        for sel in 0u32..1 << basis.len() {
            let mut w = 0u32;
            for (k, b) in basis.iter().enumerate() {
                if sel >> k & 1 == 1 {
                    w ^= b;
                }
            }
            words.push(w);
        }
        words.sort_unstable();
        assert_eq!(words.len(), 4096);

        let mut dist = [0usize; 25];
        for &w in &words {
            dist[w.count_ones() as usize] += 1;
        }
        assert_eq!(
            dist,
            {
                let mut d = [0usize; 25];
                d[0] = 1;
                d[8] = 759;
                d[12] = 2576;
                d[16] = 759;
                d[24] = 1;
                d
            },
            "unexpected weight distribution"
        );

        let octads: Vec<GolaySet> = words
            .iter()
            .copied()
            .filter(|w| w.count_ones() == 8)
            .map(GolaySet)
            .collect();

        GolayCode {
            words,
            octads,
            dodecad_count: dist[12],
            basis,
            pivots,
        }
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn word_count(&self) -> usize {
        self.words.len()
    }

    pub fn words(&self) -> impl Iterator<Item = GolaySet> + '_ {
        self.words.iter().copied().map(GolaySet)
    }

    pub fn octads(&self) -> &[GolaySet] {
        &self.octads
    }

    pub fn dodecad_count(&self) -> usize {
        self.dodecad_count
    }

    pub fn weight_distribution(&self) -> [usize; 25] {
        let mut dist = [0usize; 25];
        for &w in &self.words {
            dist[w.count_ones() as usize] += 1;
        }
        dist
    }

    /// Membership test by reduction against the row-reduced basis.
    pub fn contains(&self, set: GolaySet) -> bool {
        let mut w = set.mask();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            if w >> p & 1 == 1 {
                w ^= b;
            }
        }
        w == 0
    }

    /// Completes a 5-element set to the unique octad containing it.
    pub fn octad_containing(&self, five: GolaySet) -> Result<GolaySet, GolayError> {
        if five.weight() != 5 {
            return Err(GolayError::NotAFiveSet(five.weight()));
        }
        let mut found = None;
        for &oct in &self.octads {
            if five.is_subset_of(oct) {
                debug_assert!(found.is_none(), "5-set {five} lies in two octads");
                found = Some(oct);
                if !cfg!(debug_assertions) {
                    break;
                }
            }
        }
        Ok(found.expect("every 5-set lies in an octad"))
    }

    /// Checks the Steiner property St(5, 8, 24) for this code's octads.
    pub fn is_steiner_system(&self) -> bool {
        steiner_property(&self.octads)
    }
}

/// Does every 5-element subset of the 24 points lie in exactly one
/// member of `octads`?
pub fn steiner_property(octads: &[GolaySet]) -> bool {
    let mut ok = true;
    for_each_five_set(|five| {
        if ok {
            let hits = octads.iter().filter(|o| five.is_subset_of(**o)).count();
            if hits != 1 {
                ok = false;
            }
        }
    });
    ok
}

/// Visits all C(24,5) = 42504 five-element subsets.
pub fn for_each_five_set(mut f: impl FnMut(GolaySet)) {
    for a in 0..POINT_COUNT {
        for b in a + 1..POINT_COUNT {
            for c in b + 1..POINT_COUNT {
                for d in c + 1..POINT_COUNT {
                    for e in d + 1..POINT_COUNT {
                        f(GolaySet::from_points(&[a, b, c, d, e]));
                    }
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashMap;
    use std::sync::OnceLock;

    fn code() -> &'static GolayCode {
        static CODE: OnceLock<GolayCode> = OnceLock::new();
        CODE.get_or_init(GolayCode::build)
    }

    #[test]
    fn base_set_is_complement_of_squares() {
        // independent derivation of the squares mod 23
        let squares: Vec<u32> = {
            let mut s: Vec<u32> = (0u32..23).map(|a| a * a % 23).collect();
            s.sort_unstable();
            s.dedup();
            s
        };
        assert_eq!(squares, vec![0, 1, 2, 3, 4, 6, 8, 9, 12, 13, 16, 18]);

        let gens = GolayCode::generators();
        // N_0 = N is the translate by 0
        let n = gens[1];
        assert_eq!(n.weight(), 12);
        assert!(n.contains(0), "inf lies in N");
        for r in 0..23 {
            assert_eq!(n.contains(r + 1), !squares.contains(&(r as u32)));
        }
        assert!(code().contains(n), "N itself is a codeword");
    }

    #[test]
    fn dimension_and_counts() {
        let c = code();
        assert_eq!(c.dimension(), 12);
        assert_eq!(c.word_count(), 4096);
        assert_eq!(c.octads().len(), 759);
        assert_eq!(c.dodecad_count(), 2576);
        let dist = c.weight_distribution();
        assert_eq!(dist[0], 1);
        assert_eq!(dist[8], 759);
        assert_eq!(dist[12], 2576);
        assert_eq!(dist[16], 759);
        assert_eq!(dist[24], 1);
        assert_eq!(dist.iter().sum::<usize>(), 4096);
    }

    #[test]
    fn omega_is_a_codeword_and_small_sets_are_not() {
        let c = code();
        assert!(c.contains(GolaySet::OMEGA));
        assert!(c.contains(GolaySet::EMPTY));
        assert!(!c.contains(GolaySet::from_points(&[0, 1, 2])));
        assert!(!c.contains(GolaySet::from_points(&[5])));
    }

    #[test]
    fn named_octads_are_codewords() {
        let c = code();
        for labels in [
            ["inf", "1", "2", "3", "4", "6", "15", "18"],
            ["inf", "0", "1", "2", "3", "5", "14", "17"],
            ["inf", "0", "1", "2", "4", "13", "16", "22"],
        ] {
            let k = GolaySet::from_labels(&labels).unwrap();
            assert_eq!(k.weight(), 8);
            assert!(c.contains(k), "{k} should be an octad");
        }
    }

    #[test]
    fn steiner_system_holds_and_breaks_under_tampering() {
        let c = code();
        assert!(c.is_steiner_system());

        // removing any octad leaves its 5-subsets uncovered
        let mut truncated = c.octads().to_vec();
        truncated.remove(400);
        assert!(!steiner_property(&truncated));

        // adding an 8-set outside the code double-covers some 5-set
        let bogus = GolaySet::from_points(&[0, 1, 2, 3, 4, 5, 6, 7]);
        assert!(!c.contains(bogus));
        let mut padded = c.octads().to_vec();
        padded.push(bogus);
        assert!(!steiner_property(&padded));
    }

    #[test]
    fn octad_completion_covers_each_octad_56_times() {
        let c = code();
        let five = GolaySet::from_labels(&["inf", "1", "2", "3", "4"]).unwrap();
        let oct = c.octad_containing(five).unwrap();
        assert!(five.is_subset_of(oct));
        assert!(c.contains(oct));

        // each octad contains C(8,5) = 56 five-sets, and the 42504
        // five-sets land on 759 distinct octads
        let mut per_octad: HashMap<u32, usize> = HashMap::new();
        for_each_five_set(|f| {
            let o = c.octad_containing(f).unwrap();
            *per_octad.entry(o.mask()).or_insert(0) += 1;
        });
        assert_eq!(per_octad.len(), 759);
        assert!(per_octad.values().all(|&n| n == 56));
    }

    #[test]
    fn octad_completion_rejects_wrong_cardinality() {
        let c = code();
        let four = GolaySet::from_points(&[0, 1, 2, 3]);
        assert_eq!(c.octad_containing(four), Err(GolayError::NotAFiveSet(4)));
        let six = GolaySet::from_points(&[0, 1, 2, 3, 4, 5]);
        assert_eq!(c.octad_containing(six), Err(GolayError::NotAFiveSet(6)));
    }

    #[test]
    fn octad_intersections_are_even_and_small() {
        let octads = code().octads();
        for (i, &a) in octads.iter().enumerate() {
            for &b in &octads[i + 1..] {
                let m = a.intersection(b).weight();
                assert!(m == 0 || m == 2 || m == 4, "octads meet in {m} points");
            }
        }
    }

    #[test]
    fn generator_translates_stay_in_the_code() {
        let c = code();
        let gens = GolayCode::generators();
        for &a in &gens {
            for &b in &gens {
                assert!(c.contains(a ^ b));
            }
        }
    }

    #[test]
    fn labels_round_trip() {
        assert_eq!(point_label(0), "inf");
        assert_eq!(point_label(1), "0");
        assert_eq!(point_label(23), "22");
        for i in 0..POINT_COUNT {
            assert_eq!(parse_point_label(&point_label(i)).unwrap(), i);
        }
        assert!(parse_point_label("23").is_err());
        assert!(parse_point_label("oo").is_err());

        let k = GolaySet::from_labels(&["inf", "1", "2", "3", "4", "6", "15", "18"]).unwrap();
        assert_eq!(k.label_csv(), "inf,1,2,3,4,6,15,18");
        assert_eq!(k.hex_mask(), format!("{:06x}", k.mask()));
        assert_eq!(GolaySet::from_mask(k.mask()).unwrap(), k);
        assert!(GolaySet::from_mask(0x0100_0000).is_err());
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn code_is_closed_under_sums(i in 0usize..4096, j in 0usize..4096) {
                let c = code();
                let a = c.words().nth(i).unwrap();
                let b = c.words().nth(j).unwrap();
                prop_assert!(c.contains(a ^ b));
            }

            #[test]
            fn complements_of_codewords_are_codewords(i in 0usize..4096) {
                let c = code();
                let a = c.words().nth(i).unwrap();
                prop_assert!(c.contains(a.complement()));
            }
        }
    }
}
