//! The alternating group on six letters, fully materialized: all 360
//! elements with a multiplication table, conjugacy classes, the
//! character table over Q(sqrt 5), the complete subgroup lattice, and
//! the small solvers built on top (character decompositions, averaged
//! fixed-space dimensions, cube-root twist traces).

use crate::eisenstein::Eisenstein;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermCharError {
    #[error("{0} does not divide the group order 360")]
    InvalidOrder(usize),
    #[error("class-weighted total {0} is not divisible by the group order")]
    NonIntegralAverage(i64),
}

/// A permutation of {0, .., 5} as the image array.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(pub [u8; 6]);

impl Perm {
    pub const IDENTITY: Perm = Perm([0, 1, 2, 3, 4, 5]);

    pub fn from_cycles(cycles: &[&[u8]]) -> Perm {
        let mut p = Perm::IDENTITY.0;
        for cycle in cycles {
            for w in cycle.windows(2) {
                p[w[0] as usize] = w[1];
            }
            if let (Some(&first), Some(&last)) = (cycle.first(), cycle.last()) {
                p[last as usize] = first;
            }
        }
        Perm(p)
    }

    /// self applied after other: (self * other)(x) = self(other(x)).
    pub fn compose(self, other: Perm) -> Perm {
        let mut p = [0u8; 6];
        for i in 0..6 {
            p[i] = self.0[other.0[i] as usize];
        }
        Perm(p)
    }

    pub fn inverse(self) -> Perm {
        let mut p = [0u8; 6];
        for i in 0..6 {
            p[self.0[i] as usize] = i as u8;
        }
        Perm(p)
    }

    /// Cycle lengths, longest first.
    pub fn cycle_type(self) -> Vec<usize> {
        let mut seen = [false; 6];
        let mut lens = Vec::new();
        for start in 0..6 {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cur = self.0[cur] as usize;
                len += 1;
            }
            lens.push(len);
        }
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }

    pub fn is_even(self) -> bool {
        self.cycle_type().iter().map(|l| l - 1).sum::<usize>() % 2 == 0
    }

    pub fn order(self) -> usize {
        self.cycle_type().iter().fold(1, |acc, &l| lcm(acc, l))
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd_usize(a, b) * b
}

fn gcd_usize(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd_usize(b, a % b)
    }
}

pub const GROUP_ORDER: usize = 360;
pub const CLASS_COUNT: usize = 7;
pub const CLASS_LABELS: [&str; CLASS_COUNT] = ["1A", "2A", "3A", "3B", "4A", "5A", "5B"];
pub const CLASS_SIZES: [i64; CLASS_COUNT] = [1, 45, 40, 40, 90, 72, 72];

/// The group with its multiplication table and class structure.
pub struct AltSix {
    elems: Vec<Perm>,
    index: HashMap<Perm, u16>,
    mult: Vec<u16>,
    inv: Vec<u16>,
    class_of: Vec<u8>,
    class_sizes: [usize; CLASS_COUNT],
}

impl AltSix {
    pub fn build() -> AltSix {
        let mut elems = Vec::with_capacity(GROUP_ORDER);
        permute([0, 1, 2, 3, 4, 5], 0, &mut |p| {
            if Perm(p).is_even() {
                elems.push(Perm(p));
            }
        });
        elems.sort_unstable();
        assert_eq!(elems.len(), GROUP_ORDER);

        let index: HashMap<Perm, u16> = elems
            .iter()
            .enumerate()
            .map(|(i, &p)| (p, i as u16))
            .collect();
        let mut mult = vec![0u16; GROUP_ORDER * GROUP_ORDER];
        let mut inv = vec![0u16; GROUP_ORDER];
        for (i, &g) in elems.iter().enumerate() {
            inv[i] = index[&g.inverse()];
            for (j, &h) in elems.iter().enumerate() {
                mult[i * GROUP_ORDER + j] = index[&g.compose(h)];
            }
        }

        // conjugacy classes: split by cycle type, then split the
        // 5-cycles by the actual conjugation orbit of (0 1 2 3 4)
        let five_a_rep = index[&Perm::from_cycles(&[&[0, 1, 2, 3, 4]])];
        let mut five_a_orbit = vec![false; GROUP_ORDER];
        {
            let mut stack = vec![five_a_rep];
            five_a_orbit[five_a_rep as usize] = true;
            while let Some(x) = stack.pop() {
                for h in 0..GROUP_ORDER as u16 {
                    let hx = mult[h as usize * GROUP_ORDER + x as usize];
                    let conj = mult[hx as usize * GROUP_ORDER + inv[h as usize] as usize];
                    if !five_a_orbit[conj as usize] {
                        five_a_orbit[conj as usize] = true;
                        stack.push(conj);
                    }
                }
            }
        }

        let mut class_of = vec![0u8; GROUP_ORDER];
        let mut class_sizes = [0usize; CLASS_COUNT];
        for (i, g) in elems.iter().enumerate() {
            let class = match g.cycle_type().as_slice() {
                [1, 1, 1, 1, 1, 1] => 0,
                [2, 2, 1, 1] => 1,
                [3, 3] => 2,
                [3, 1, 1, 1] => 3,
                [4, 2] => 4,
                [5, 1] => {
                    if five_a_orbit[i] {
                        5
                    } else {
                        6
                    }
                }
                other => panic!("impossible cycle type {other:?}"),
            };
            class_of[i] = class;
            class_sizes[class as usize] += 1;
        }
        for (k, &s) in class_sizes.iter().enumerate() {
            assert_eq!(s as i64, CLASS_SIZES[k], "class {} size", CLASS_LABELS[k]);
        }

        AltSix {
            elems,
            index,
            mult,
            inv,
            class_of,
            class_sizes,
        }
    }

    pub fn order(&self) -> usize {
        GROUP_ORDER
    }

    pub fn perm(&self, e: u16) -> Perm {
        self.elems[e as usize]
    }

    pub fn id_of(&self, p: Perm) -> Option<u16> {
        self.index.get(&p).copied()
    }

    pub fn mul(&self, a: u16, b: u16) -> u16 {
        self.mult[a as usize * GROUP_ORDER + b as usize]
    }

    pub fn inv(&self, a: u16) -> u16 {
        self.inv[a as usize]
    }

    pub fn class_index(&self, e: u16) -> usize {
        self.class_of[e as usize] as usize
    }

    pub fn class_label(&self, e: u16) -> &'static str {
        CLASS_LABELS[self.class_index(e)]
    }

    pub fn class_sizes(&self) -> [usize; CLASS_COUNT] {
        self.class_sizes
    }

    pub fn element_order(&self, e: u16) -> usize {
        self.elems[e as usize].order()
    }

    /// element order -> number of elements of that order
    pub fn order_census(&self) -> BTreeMap<usize, usize> {
        let mut census = BTreeMap::new();
        for g in &self.elems {
            *census.entry(g.order()).or_insert(0) += 1;
        }
        census
    }

    /// Subgroup generated by the given elements.
    pub fn closure_of(&self, gens: &[u16]) -> Vec<u16> {
        let mut in_set = vec![false; GROUP_ORDER];
        let id = self.index[&Perm::IDENTITY];
        in_set[id as usize] = true;
        let mut elems = vec![id];
        let mut head = 0;
        while head < elems.len() {
            let x = elems[head];
            head += 1;
            for &g in gens {
                let y = self.mul(x, g);
                if !in_set[y as usize] {
                    in_set[y as usize] = true;
                    elems.push(y);
                }
            }
        }
        elems.sort_unstable();
        elems
    }

    /// Order of the smallest normal subgroup containing the element.
    pub fn normal_closure_order(&self, e: u16) -> usize {
        // generators: the whole conjugacy class of e
        let mut class = Vec::new();
        for h in 0..GROUP_ORDER as u16 {
            let he = self.mul(h, e);
            let conj = self.mul(he, self.inv(h));
            class.push(conj);
        }
        class.sort_unstable();
        class.dedup();
        self.closure_of(&class).len()
    }

    /// Every nontrivial element normally generates the whole group.
    pub fn is_simple(&self) -> bool {
        // one representative per nontrivial class suffices
        let mut seen = [false; CLASS_COUNT];
        for e in 0..GROUP_ORDER as u16 {
            let k = self.class_index(e);
            if k == 0 || seen[k] {
                continue;
            }
            seen[k] = true;
            if self.normal_closure_order(e) != GROUP_ORDER {
                return false;
            }
        }
        true
    }

    pub fn commutator_subgroup_order(&self) -> usize {
        let mut comms = vec![false; GROUP_ORDER];
        for a in 0..GROUP_ORDER as u16 {
            for b in 0..GROUP_ORDER as u16 {
                let ab = self.mul(a, b);
                let ba = self.mul(b, a);
                let c = self.mul(self.inv(ba), ab);
                comms[c as usize] = true;
            }
        }
        let gens: Vec<u16> = (0..GROUP_ORDER as u16)
            .filter(|&e| comms[e as usize])
            .collect();
        self.closure_of(&gens).len()
    }

    /// All subgroups: cyclic subgroups joined to a fixpoint.
    pub fn subgroup_lattice(&self) -> SubgroupLattice {
        #[derive(Clone)]
        struct Node {
            order: usize,
            gens: Vec<u16>,
        }
        let mut seen: HashMap<[u64; 6], usize> = HashMap::new();
        let mut nodes: Vec<Node> = Vec::new();

        let admit = |mask: [u64; 6], order: usize, gens: Vec<u16>,
                         nodes: &mut Vec<Node>,
                         seen: &mut HashMap<[u64; 6], usize>| {
            if let std::collections::hash_map::Entry::Vacant(v) = seen.entry(mask) {
                v.insert(nodes.len());
                nodes.push(Node { order, gens });
            }
        };

        for g in 0..GROUP_ORDER as u16 {
            let elems = self.closure_of(&[g]);
            admit(mask_of(&elems), elems.len(), vec![g], &mut nodes, &mut seen);
        }

        let mut lo = 0;
        loop {
            let hi = nodes.len();
            if lo == hi {
                break;
            }
            for i in lo..hi {
                for j in 0..i {
                    let mut gens: Vec<u16> = nodes[i]
                        .gens
                        .iter()
                        .chain(&nodes[j].gens)
                        .copied()
                        .collect();
                    gens.sort_unstable();
                    gens.dedup();
                    let elems = self.closure_of(&gens);
                    admit(mask_of(&elems), elems.len(), gens, &mut nodes, &mut seen);
                }
            }
            lo = hi;
        }

        let mut count_by_order: BTreeMap<usize, usize> = BTreeMap::new();
        for n in &nodes {
            *count_by_order.entry(n.order).or_insert(0) += 1;
        }
        SubgroupLattice {
            count: nodes.len(),
            orders: count_by_order.keys().copied().collect(),
            count_by_order,
            masks: seen.into_keys().collect(),
        }
    }

    /// Average over the group of a per-element quantity that depends
    /// only on element order; errors if the average is not an integer.
    pub fn average_over_orders(
        &self,
        value_of_order: impl Fn(usize) -> i64,
    ) -> Result<i64, PermCharError> {
        let total: i64 = (0..GROUP_ORDER as u16)
            .map(|e| value_of_order(self.element_order(e)))
            .sum();
        if total % GROUP_ORDER as i64 != 0 {
            return Err(PermCharError::NonIntegralAverage(total));
        }
        Ok(total / GROUP_ORDER as i64)
    }
}

fn permute(mut items: [u8; 6], k: usize, visit: &mut impl FnMut([u8; 6])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, visit);
        items.swap(k, i);
    }
}

fn mask_of(elems: &[u16]) -> [u64; 6] {
    let mut m = [0u64; 6];
    for &e in elems {
        m[e as usize / 64] |= 1 << (e % 64);
    }
    m
}

#[derive(Debug, Clone)]
pub struct SubgroupLattice {
    pub count: usize,
    pub orders: BTreeSet<usize>,
    pub count_by_order: BTreeMap<usize, usize>,
    pub masks: Vec<[u64; 6]>,
}

impl SubgroupLattice {
    pub fn order_exists(&self, k: usize) -> Result<bool, PermCharError> {
        if k == 0 || GROUP_ORDER % k != 0 {
            return Err(PermCharError::InvalidOrder(k));
        }
        Ok(self.orders.contains(&k))
    }
}

/// Dimension of the subspace of the 24-dimensional total cohomology
/// of a K3 surface fixed by a symplectic automorphism of the given
/// order (orders up to 8; only 1..5 occur in this group).
pub fn fixed_total_dimension(order: usize) -> Option<i64> {
    Some(match order {
        1 => 24,
        2 => 8,
        3 => 6,
        4 => 4,
        5 => 4,
        6 => 2,
        7 => 3,
        8 => 2,
        _ => return None,
    })
}

// ---------------------------------------------------------------------------
// Q(sqrt 5) scalars and the character table
// ---------------------------------------------------------------------------

/// (p + q sqrt 5)/2 with p = q mod 2.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuadInt {
    p: i64,
    q: i64,
}

impl QuadInt {
    pub const ZERO: QuadInt = QuadInt { p: 0, q: 0 };

    pub fn int(n: i64) -> QuadInt {
        QuadInt { p: 2 * n, q: 0 }
    }

    /// (p + q sqrt 5)/2; requires p and q of equal parity.
    pub fn half(p: i64, q: i64) -> QuadInt {
        assert!((p - q) % 2 == 0, "({p} + {q} sqrt5)/2 is not integral");
        QuadInt { p, q }
    }

    pub fn to_integer(self) -> Option<i64> {
        if self.q == 0 {
            Some(self.p / 2)
        } else {
            None
        }
    }

    pub fn is_zero(self) -> bool {
        self.p == 0 && self.q == 0
    }

    /// sqrt 5 -> -sqrt 5.
    pub fn galois(self) -> QuadInt {
        QuadInt {
            p: self.p,
            q: -self.q,
        }
    }
}

impl std::ops::Add for QuadInt {
    type Output = QuadInt;
    fn add(self, rhs: QuadInt) -> QuadInt {
        QuadInt {
            p: self.p + rhs.p,
            q: self.q + rhs.q,
        }
    }
}

impl std::ops::Sub for QuadInt {
    type Output = QuadInt;
    fn sub(self, rhs: QuadInt) -> QuadInt {
        QuadInt {
            p: self.p - rhs.p,
            q: self.q - rhs.q,
        }
    }
}

impl std::ops::Neg for QuadInt {
    type Output = QuadInt;
    fn neg(self) -> QuadInt {
        QuadInt {
            p: -self.p,
            q: -self.q,
        }
    }
}

impl std::ops::Mul for QuadInt {
    type Output = QuadInt;
    fn mul(self, rhs: QuadInt) -> QuadInt {
        // (p1 + q1 s)(p2 + q2 s)/4 with s^2 = 5
        let p = self.p * rhs.p + 5 * self.q * rhs.q;
        let q = self.p * rhs.q + self.q * rhs.p;
        debug_assert!(p % 2 == 0 && q % 2 == 0);
        QuadInt { p: p / 2, q: q / 2 }
    }
}

impl std::ops::Mul<QuadInt> for i64 {
    type Output = QuadInt;
    fn mul(self, rhs: QuadInt) -> QuadInt {
        QuadInt {
            p: self * rhs.p,
            q: self * rhs.q,
        }
    }
}

impl fmt::Display for QuadInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q == 0 {
            return write!(f, "{}", self.p / 2);
        }
        let sign = if self.q > 0 { "+" } else { "-" };
        let qa = self.q.abs();
        let qs = if qa == 1 {
            String::new()
        } else {
            qa.to_string()
        };
        write!(f, "({}{}{}√5)/2", self.p, sign, qs)
    }
}

impl fmt::Debug for QuadInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuadInt({self})")
    }
}

pub type Table = [[QuadInt; CLASS_COUNT]; CLASS_COUNT];

/// The irreducible character table; rows are the seven characters,
/// columns follow CLASS_LABELS.
pub fn character_table() -> Table {
    let i = QuadInt::int;
    let gold = QuadInt::half(1, 1); // (1 + sqrt5)/2
    let gold_bar = QuadInt::half(1, -1); // (1 - sqrt5)/2
    [
        [i(1), i(1), i(1), i(1), i(1), i(1), i(1)],
        [i(5), i(1), i(2), i(-1), i(-1), i(0), i(0)],
        [i(5), i(1), i(-1), i(2), i(-1), i(0), i(0)],
        [i(8), i(0), i(-1), i(-1), i(0), gold, gold_bar],
        [i(8), i(0), i(-1), i(-1), i(0), gold_bar, gold],
        [i(9), i(1), i(0), i(0), i(1), i(-1), i(-1)],
        [i(10), i(-2), i(1), i(1), i(0), i(0), i(0)],
    ]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableReport {
    pub rows_orthonormal: bool,
    pub columns_orthogonal: bool,
    pub degree_square_sum: i64,
}

impl TableReport {
    pub fn is_valid(&self) -> bool {
        self.rows_orthonormal && self.columns_orthogonal && self.degree_square_sum == 360
    }
}

/// First and second orthogonality, with class sizes as weights. All
/// seven characters are real-valued, so no conjugation appears.
pub fn verify_character_table(t: &Table) -> TableReport {
    let mut rows_orthonormal = true;
    for i in 0..CLASS_COUNT {
        for j in 0..CLASS_COUNT {
            let mut s = QuadInt::ZERO;
            for k in 0..CLASS_COUNT {
                s = s + CLASS_SIZES[k] * (t[i][k] * t[j][k]);
            }
            let want = if i == j { QuadInt::int(360) } else { QuadInt::ZERO };
            rows_orthonormal &= s == want;
        }
    }
    let mut columns_orthogonal = true;
    for k in 0..CLASS_COUNT {
        for l in 0..CLASS_COUNT {
            let mut s = QuadInt::ZERO;
            for row in t.iter() {
                s = s + row[k] * row[l];
            }
            let want = if k == l {
                QuadInt::int(360 / CLASS_SIZES[k])
            } else {
                QuadInt::ZERO
            };
            columns_orthogonal &= s == want;
        }
    }
    let degree_square_sum = t
        .iter()
        .map(|row| {
            let d = row[0].to_integer().expect("degrees are integers");
            d * d
        })
        .sum();
    TableReport {
        rows_orthonormal,
        columns_orthogonal,
        degree_square_sum,
    }
}

/// Applies the Galois twist: the values at the two classes of
/// five-cycles trade places in every row.
pub fn galois_swapped(t: &Table) -> Table {
    let mut out = *t;
    for row in out.iter_mut() {
        row.swap(5, 6);
    }
    out
}

/// The table as a text grid: class header with sizes, then one row
/// per character.
pub fn table_grid(t: &Table) -> String {
    let mut s = String::new();
    s.push_str("        ");
    for (label, size) in CLASS_LABELS.iter().zip(CLASS_SIZES) {
        s.push_str(&format!("{:>12}", format!("{label}({size})")));
    }
    s.push('\n');
    for (i, row) in t.iter().enumerate() {
        s.push_str(&format!("chi_{}  ", i + 1));
        for v in row {
            s.push_str(&format!("{:>12}", v.to_string()));
        }
        s.push('\n');
    }
    s
}

/// Rank of the invariant sublattice: the average over the group of
/// the dimension fixed by each element on total cohomology.
pub fn invariant_cohomology_rank(g: &AltSix) -> Result<i64, PermCharError> {
    g.average_over_orders(|o| fixed_total_dimension(o).expect("element order exceeds the table"))
}

/// Multiplicity vectors (a_2, .., a_7) for the six nontrivial
/// characters such that one copy of the trivial character plus the
/// combination matches the target class function on every kept class
/// column. Exhaustive search; each a_i is capped by the residual
/// degree over deg(chi_i).
pub fn decomposition_solutions(t: &Table, targets: &[i64; 7], keep: &[usize]) -> Vec<[u32; 6]> {
    let residual: Vec<i64> = targets.iter().map(|&v| v - 1).collect();
    let bounds: Vec<u32> = (1..CLASS_COUNT)
        .map(|r| {
            let d = t[r][0].to_integer().expect("integer degree");
            (residual[0] / d).max(0) as u32
        })
        .collect();

    let mut out = Vec::new();
    let mut a = [0u32; 6];
    search_multiplicities(t, &residual, keep, &bounds, 0, &mut a, &mut out);
    out
}

fn search_multiplicities(
    t: &Table,
    residual: &[i64],
    keep: &[usize],
    bounds: &[u32],
    i: usize,
    a: &mut [u32; 6],
    out: &mut Vec<[u32; 6]>,
) {
    if i == 6 {
        let ok = keep.iter().all(|&k| {
            let mut s = QuadInt::ZERO;
            for (ai, row) in a.iter().zip(t.iter().skip(1)) {
                s = s + (*ai as i64) * row[k];
            }
            s == QuadInt::int(residual[k])
        });
        if ok {
            out.push(*a);
        }
        return;
    }
    for v in 0..=bounds[i] {
        a[i] = v;
        search_multiplicities(t, residual, keep, bounds, i + 1, a, out);
    }
    a[i] = 0;
}

/// Exponent triples (a, b, c) in {0, 1, 2}^3 for which the twisted sum
/// over the three nontrivial constituents (degrees 5, 5, 9) gives
/// equal eigenspace dimensions for the two primitive cube roots.
pub fn cube_twist_exponent_candidates() -> Vec<(u8, u8, u8)> {
    let mut out = Vec::new();
    for a in 0..3u8 {
        for b in 0..3u8 {
            for c in 0..3u8 {
                let dim = |e: u8, which: u8| -> i64 {
                    if e == which {
                        1
                    } else {
                        0
                    }
                };
                let omega_dim = 5 * dim(a, 1) + 5 * dim(b, 1) + 9 * dim(c, 1);
                let omega2_dim = 5 * dim(a, 2) + 5 * dim(b, 2) + 9 * dim(c, 2);
                if omega_dim == omega2_dim {
                    out.push((a, b, c));
                }
            }
        }
    }
    out
}

/// Sum of w^(e_j) * v_j over the constituents: a trace twisted by a
/// cube root of unity, exact in Z[w].
pub fn twisted_trace(exponents: &[i64], values: &[i64]) -> Eisenstein {
    assert_eq!(exponents.len(), values.len());
    exponents
        .iter()
        .zip(values)
        .map(|(&e, &v)| v * Eisenstein::omega_pow(e))
        .fold(Eisenstein::ZERO, |acc, x| acc + x)
}

/// Integer values of the given table rows at one class column.
pub fn row_values_at(t: &Table, rows: &[usize], class: usize) -> Vec<i64> {
    rows.iter()
        .map(|&r| {
            t[r][class]
                .to_integer()
                .expect("requested value is not a rational integer")
        })
        .collect()
}
