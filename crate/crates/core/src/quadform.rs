//! Integer Gram matrices, Smith/Hermite normal forms, and finite
//! quadratic forms on discriminant groups.
//!
//! Everything here is exact: matrices are reduced over Z with i128
//! arithmetic, and quadratic-form values are rationals. A finite
//! quadratic form lives on A = L*/L for an even nonsingular Gram matrix
//! and takes values in Q/2Z, represented by reduced fractions in [0, 2).

use num::rational::Ratio;
use num::Zero;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// Exact rational scalar.
pub type Rat = Ratio<i128>;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum QuadformError {
    #[error("matrix is not square")]
    NotSquare,
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("gram matrix is singular")]
    Singular,
    #[error("diagonal entry {0} is odd, form does not take values in Q/2Z")]
    OddDiagonal(i64),
    #[error("discriminant group of order {0} exceeds the enumeration cap")]
    GroupTooLarge(i128),
    #[error("matrix is not negative definite")]
    NotNegativeDefinite,
    #[error("could not parse gram matrix: {0}")]
    Parse(String),
}

/// A symmetric integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GramMatrix {
    n: usize,
    a: Vec<i64>,
}

impl GramMatrix {
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self, QuadformError> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(QuadformError::NotSquare);
        }
        let mut a = vec![0i64; n * n];
        for i in 0..n {
            for j in 0..n {
                if rows[i][j] != rows[j][i] {
                    return Err(QuadformError::NotSymmetric);
                }
                a[i * n + j] = rows[i][j];
            }
        }
        Ok(GramMatrix { n, a })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.a[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j)).collect())
            .collect()
    }

    pub fn has_even_diagonal(&self) -> bool {
        (0..self.n).all(|i| self.get(i, i) % 2 == 0)
    }

    /// Exact determinant by fraction-free elimination.
    pub fn det(&self) -> i128 {
        bareiss_det(
            &self
                .rows()
                .iter()
                .map(|r| r.iter().map(|&x| x as i128).collect())
                .collect::<Vec<Vec<i128>>>(),
        )
    }
}

impl fmt::Display for GramMatrix {
    /// First line the size, then one line per row.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.n)?;
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for GramMatrix {
    type Err = QuadformError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut lines = s.lines().filter(|l| !l.trim().is_empty());
        let n: usize = lines
            .next()
            .ok_or_else(|| QuadformError::Parse("empty input".into()))?
            .trim()
            .parse()
            .map_err(|e| QuadformError::Parse(format!("bad size line: {e}")))?;
        let mut rows = Vec::with_capacity(n);
        for _ in 0..n {
            let line = lines
                .next()
                .ok_or_else(|| QuadformError::Parse("missing row".into()))?;
            let row: Result<Vec<i64>, _> = line.split_whitespace().map(str::parse).collect();
            let row = row.map_err(|e| QuadformError::Parse(format!("bad entry: {e}")))?;
            if row.len() != n {
                return Err(QuadformError::Parse(format!(
                    "expected {n} entries per row, got {}",
                    row.len()
                )));
            }
            rows.push(row);
        }
        GramMatrix::from_rows(&rows)
    }
}

pub fn bareiss_det(rows: &[Vec<i128>]) -> i128 {
    let n = rows.len();
    if n == 0 {
        return 1;
    }
    let mut m: Vec<Vec<i128>> = rows.to_vec();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            let Some(swap) = (k + 1..n).find(|&i| m[i][k] != 0) else {
                return 0;
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// Smith normal form `left * mat * right = diag`.
#[derive(Debug, Clone)]
pub struct Snf {
    rows: usize,
    cols: usize,
    /// Nonnegative diagonal, each entry dividing the next.
    pub diag: Vec<i128>,
    pub left: Vec<Vec<i128>>,
    pub right: Vec<Vec<i128>>,
    /// Inverse of `left`, tracked during reduction.
    pub left_inv: Vec<Vec<i128>>,
}

impl Snf {
    /// The diagonal with 1s removed (zeros, if any, are kept).
    pub fn nontrivial_factors(&self) -> Vec<i128> {
        self.diag.iter().copied().filter(|&d| d != 1).collect()
    }

    /// Checks `left * mat * right == diag` exactly.
    pub fn verify(&self, mat: &[Vec<i64>]) -> bool {
        let m: Vec<Vec<i128>> = mat
            .iter()
            .map(|r| r.iter().map(|&x| x as i128).collect())
            .collect();
        let lm = mat_mul(&self.left, &m);
        let lmr = mat_mul(&lm, &self.right);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let want = if i == j && i < self.diag.len() {
                    self.diag[i]
                } else {
                    0
                };
                if lmr[i][j] != want {
                    return false;
                }
            }
        }
        // left_inv really is the inverse of left
        let prod = mat_mul(&self.left, &self.left_inv);
        for i in 0..self.rows {
            for j in 0..self.rows {
                if prod[i][j] != i128::from(i == j) {
                    return false;
                }
            }
        }
        true
    }
}

fn mat_mul(a: &[Vec<i128>], b: &[Vec<i128>]) -> Vec<Vec<i128>> {
    let n = a.len();
    let k = b.len();
    let m = if k > 0 { b[0].len() } else { 0 };
    let mut out = vec![vec![0i128; m]; n];
    for i in 0..n {
        for (t, brow) in b.iter().enumerate().take(k) {
            let f = a[i][t];
            if f == 0 {
                continue;
            }
            for j in 0..m {
                out[i][j] += f * brow[j];
            }
        }
    }
    out
}

fn identity(n: usize) -> Vec<Vec<i128>> {
    let mut m = vec![vec![0i128; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1;
    }
    m
}

/// Integer Smith normal form with transform tracking.
///
/// Pivots are chosen smallest-in-absolute-value to keep intermediate
/// entries from blowing up.
pub fn smith_normal_form(mat: &[Vec<i64>]) -> Snf {
    let rows = mat.len();
    let cols = if rows > 0 { mat[0].len() } else { 0 };
    let mut m: Vec<Vec<i128>> = mat
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut left = identity(rows);
    let mut left_inv = identity(rows);
    let mut right = identity(cols);

    // row ops keep left/left_inv in sync, column ops keep right in sync
    macro_rules! swap_rows {
        ($i:expr, $j:expr) => {
            if $i != $j {
                m.swap($i, $j);
                left.swap($i, $j);
                for r in left_inv.iter_mut() {
                    r.swap($i, $j);
                }
            }
        };
    }
    macro_rules! swap_cols {
        ($i:expr, $j:expr) => {
            if $i != $j {
                for r in m.iter_mut() {
                    r.swap($i, $j);
                }
                for r in right.iter_mut() {
                    r.swap($i, $j);
                }
            }
        };
    }
    macro_rules! add_row {
        // row i += q * row j
        ($i:expr, $j:expr, $q:expr) => {{
            let (i, j, q) = ($i, $j, $q);
            for t in 0..cols {
                m[i][t] += q * m[j][t];
            }
            for t in 0..rows {
                left[i][t] += q * left[j][t];
            }
            for r in left_inv.iter_mut() {
                let v = r[i];
                r[j] -= q * v;
            }
        }};
    }
    macro_rules! add_col {
        // col i += q * col j
        ($i:expr, $j:expr, $q:expr) => {{
            let (i, j, q) = ($i, $j, $q);
            for r in m.iter_mut() {
                let v = r[j];
                r[i] += q * v;
            }
            for r in right.iter_mut() {
                let v = r[j];
                r[i] += q * v;
            }
        }};
    }

    let k = rows.min(cols);
    for t in 0..k {
        'pivot: loop {
            // smallest nonzero entry of the trailing submatrix
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if m[i][j] != 0
                        && best.is_none_or(|(bi, bj)| m[i][j].abs() < m[bi][bj].abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                break 'pivot; // submatrix is zero
            };
            swap_rows!(t, pi);
            swap_cols!(t, pj);

            let mut dirty = false;
            for i in t + 1..rows {
                if m[i][t] != 0 {
                    let q = m[i][t].div_euclid(m[t][t]);
                    add_row!(i, t, -q);
                    dirty |= m[i][t] != 0;
                }
            }
            for j in t + 1..cols {
                if m[t][j] != 0 {
                    let q = m[t][j].div_euclid(m[t][t]);
                    add_col!(j, t, -q);
                    dirty |= m[t][j] != 0;
                }
            }
            if dirty {
                continue 'pivot;
            }

            // pivot must divide everything that remains
            let p = m[t][t];
            let offender = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| m[i][j] % p != 0);
            match offender {
                Some((i, _)) => add_row!(t, i, 1),
                None => break 'pivot,
            }
        }
    }

    for t in 0..k {
        if m[t][t] < 0 {
            for j in 0..cols {
                m[t][j] = -m[t][j];
            }
            for j in 0..rows {
                left[t][j] = -left[t][j];
            }
            for r in left_inv.iter_mut() {
                r[t] = -r[t];
            }
        }
    }

    let diag: Vec<i128> = (0..k).map(|t| m[t][t]).collect();
    debug_assert!(diag
        .windows(2)
        .all(|w| w[1] == 0 || (w[0] != 0 && w[1] % w[0] == 0)));
    Snf {
        rows,
        cols,
        diag,
        left,
        right,
        left_inv,
    }
}

/// Formats invariant factors, omitting 1s, e.g. `"3 60"`.
pub fn format_factors(factors: &[i128]) -> String {
    let kept: Vec<String> = factors
        .iter()
        .filter(|&&d| d != 1)
        .map(|d| d.to_string())
        .collect();
    kept.join(" ")
}

/// Formats a finite abelian group from its invariant factors.
pub fn group_string(factors: &[i64]) -> String {
    if factors.is_empty() {
        return "trivial".to_string();
    }
    let parts: Vec<String> = factors.iter().map(|d| format!("Z/{d}")).collect();
    parts.join(" ⊕ ")
}

/// Row-style Hermite normal form of a generating set.
#[derive(Debug, Clone)]
pub struct Hnf {
    /// Triangular basis rows, ordered by pivot column.
    pub basis: Vec<Vec<i128>>,
    /// Pivot column of each basis row.
    pub pivots: Vec<usize>,
}

impl Hnf {
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Product of the pivot entries; for a full-rank square system this
    /// is |det| of the spanned lattice's basis.
    pub fn diag_product(&self) -> i128 {
        self.basis
            .iter()
            .zip(&self.pivots)
            .map(|(row, &p)| row[p])
            .product()
    }
}

/// Reduces integer generators to a triangular lattice basis.
///
/// Rows are kept fully reduced after every insertion (each entry lies
/// in [0, pivot) for its column), which bounds intermediate growth.
pub fn row_hnf(generators: &[Vec<i64>]) -> Hnf {
    let cols = generators.first().map_or(0, |g| g.len());
    // slot c holds the row whose leading entry is in column c
    let mut rows: Vec<Option<Vec<i128>>> = vec![None; cols];

    for g in generators {
        assert_eq!(g.len(), cols);
        let mut v: Vec<i128> = g.iter().map(|&x| x as i128).collect();
        let mut c = 0;
        while c < cols {
            if v[c] == 0 {
                c += 1;
                continue;
            }
            match rows[c].as_mut() {
                None => {
                    if v[c] < 0 {
                        for x in v.iter_mut() {
                            *x = -*x;
                        }
                    }
                    rows[c] = Some(v);
                    break;
                }
                Some(b) => {
                    // gcd steps; the slot keeps the smaller leading entry
                    while v[c] != 0 {
                        let q = v[c].div_euclid(b[c]);
                        if q != 0 {
                            for t in c..cols {
                                v[t] -= q * b[t];
                            }
                        }
                        if v[c] != 0 {
                            std::mem::swap(b, &mut v);
                        }
                    }
                    c += 1;
                }
            }
        }

        // re-reduce every row's tail against the later pivots
        for c in 0..cols {
            for c2 in c + 1..cols {
                let (head, tail) = rows.split_at_mut(c2);
                let (Some(rc), Some(rc2)) = (head[c].as_mut(), tail[0].as_ref()) else {
                    continue;
                };
                let q = rc[c2].div_euclid(rc2[c2]);
                if q != 0 {
                    for t in c2..cols {
                        rc[t] -= q * rc2[t];
                    }
                }
            }
        }
    }

    let mut pivots = Vec::new();
    let mut basis = Vec::new();
    for (c, row) in rows.into_iter().enumerate() {
        if let Some(row) = row {
            pivots.push(c);
            basis.push(row);
        }
    }
    Hnf { basis, pivots }
}

/// A finite quadratic form on the discriminant group of an even lattice.
#[derive(Debug, Clone)]
pub struct FiniteQuadraticForm {
    /// Invariant factors > 1, each dividing the next.
    factors: Vec<i64>,
    /// Dual-basis coordinates of each generator.
    gen_cols: Vec<Vec<i128>>,
    /// Exact inverse of the Gram matrix.
    ginv: Vec<Vec<Rat>>,
}

const GROUP_CAP: i128 = 1_000_000;

/// Builds A = L*/L with its Q/2Z-valued form from an even Gram matrix.
pub fn discriminant_form(gram: &GramMatrix) -> Result<FiniteQuadraticForm, QuadformError> {
    if !gram.has_even_diagonal() {
        let bad = (0..gram.size())
            .map(|i| gram.get(i, i))
            .find(|d| d % 2 != 0)
            .unwrap();
        return Err(QuadformError::OddDiagonal(bad));
    }
    let rows = gram.rows();
    let snf = smith_normal_form(&rows);
    if snf.diag.iter().any(|&d| d == 0) {
        return Err(QuadformError::Singular);
    }
    let order: i128 = snf.diag.iter().product();
    if order > GROUP_CAP {
        return Err(QuadformError::GroupTooLarge(order));
    }

    let mut factors = Vec::new();
    let mut gen_cols = Vec::new();
    for (t, &d) in snf.diag.iter().enumerate() {
        if d > 1 {
            factors.push(d as i64);
            // column t of left_inv: dual-basis coordinates of the
            // generator of the Z/d summand
            gen_cols.push(snf.left_inv.iter().map(|r| r[t]).collect());
        }
    }

    let ginv = invert_rational(&rows).ok_or(QuadformError::Singular)?;
    Ok(FiniteQuadraticForm {
        factors,
        gen_cols,
        ginv,
    })
}

pub(crate) fn invert_rational(rows: &[Vec<i64>]) -> Option<Vec<Vec<Rat>>> {
    let n = rows.len();
    let mut m: Vec<Vec<Rat>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| Rat::from_integer(x as i128)).collect())
        .collect();
    let mut inv: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| Rat::from_integer(i128::from(i == j)))
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&i| !m[i][col].is_zero())?;
        m.swap(col, pivot);
        inv.swap(col, pivot);
        let p = m[col][col];
        for j in 0..n {
            m[col][j] /= p;
            inv[col][j] /= p;
        }
        for i in 0..n {
            if i != col && !m[i][col].is_zero() {
                let f = m[i][col];
                for j in 0..n {
                    let (a, b) = (m[col][j], inv[col][j]);
                    m[i][j] -= f * a;
                    inv[i][j] -= f * b;
                }
            }
        }
    }
    Some(inv)
}

/// Reduces a rational into `[0, modulus)`.
pub fn rat_mod(x: Rat, modulus: i128) -> Rat {
    let m = Rat::from_integer(modulus);
    let q = (x / m).floor();
    x - q * m
}

impl FiniteQuadraticForm {
    pub fn factors(&self) -> &[i64] {
        &self.factors
    }

    pub fn order(&self) -> i128 {
        self.factors.iter().map(|&d| d as i128).product()
    }

    pub fn group_string(&self) -> String {
        group_string(&self.factors)
    }

    /// All group elements as coefficient tuples over the generators.
    pub fn elements(&self) -> Vec<Vec<i64>> {
        let mut out = vec![vec![]];
        for &d in &self.factors {
            let mut next = Vec::with_capacity(out.len() * d as usize);
            for prefix in &out {
                for a in 0..d {
                    let mut t = prefix.clone();
                    t.push(a);
                    next.push(t);
                }
            }
            out = next;
        }
        out
    }

    fn dual_coords(&self, tuple: &[i64]) -> Vec<Rat> {
        assert_eq!(tuple.len(), self.factors.len());
        let n = self.ginv.len();
        let mut c = vec![Rat::zero(); n];
        for (a, col) in tuple.iter().zip(&self.gen_cols) {
            for (ci, &g) in c.iter_mut().zip(col) {
                *ci += Rat::from_integer(*a as i128 * g);
            }
        }
        c
    }

    /// q-value in [0, 2).
    pub fn q(&self, tuple: &[i64]) -> Rat {
        let c = self.dual_coords(tuple);
        let mut val = Rat::zero();
        for (i, ci) in c.iter().enumerate() {
            for (j, cj) in c.iter().enumerate() {
                val += *ci * *cj * self.ginv[i][j];
            }
        }
        rat_mod(val, 2)
    }

    /// Bilinear value b(x, y) = (q(x+y) - q(x) - q(y)) / 2 in [0, 1).
    pub fn bilinear(&self, x: &[i64], y: &[i64]) -> Rat {
        let cx = self.dual_coords(x);
        let cy = self.dual_coords(y);
        let mut val = Rat::zero();
        for (i, xi) in cx.iter().enumerate() {
            for (j, yj) in cy.iter().enumerate() {
                val += *xi * *yj * self.ginv[i][j];
            }
        }
        rat_mod(val, 1)
    }
}

/// Nonzero elements with q = 0 in Q/2Z.
pub fn isotropic_elements(form: &FiniteQuadraticForm) -> Vec<Vec<i64>> {
    form.elements()
        .into_iter()
        .filter(|t| t.iter().any(|&a| a != 0) && form.q(t).is_zero())
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrthGroupReport {
    pub order: usize,
    /// element order -> how many automorphisms have that order
    pub census: BTreeMap<usize, usize>,
}

const ORTH_CAP: i128 = 10_000;

/// The group of automorphisms of A preserving q, by exhaustive search
/// over generator images.
pub fn orthogonal_group_of_form(
    form: &FiniteQuadraticForm,
) -> Result<OrthGroupReport, QuadformError> {
    let order = form.order();
    if order > ORTH_CAP {
        return Err(QuadformError::GroupTooLarge(order));
    }
    let factors = form.factors();
    let k = factors.len();
    let elements = form.elements();
    let index_of: BTreeMap<Vec<i64>, usize> = elements
        .iter()
        .enumerate()
        .map(|(i, e)| (e.clone(), i))
        .collect();
    let q_table: Vec<Rat> = elements.iter().map(|e| form.q(e)).collect();

    if k == 0 {
        return Ok(OrthGroupReport {
            order: 1,
            census: BTreeMap::from([(1, 1)]),
        });
    }

    let add = |x: &[i64], y: &[i64]| -> Vec<i64> {
        x.iter()
            .zip(y)
            .zip(factors)
            .map(|((a, b), &d)| (a + b).rem_euclid(d))
            .collect()
    };
    let scale = |s: i64, x: &[i64]| -> Vec<i64> {
        x.iter()
            .zip(factors)
            .map(|(a, &d)| (s * a).rem_euclid(d))
            .collect()
    };
    let apply = |images: &[Vec<i64>], x: &[i64]| -> Vec<i64> {
        let mut acc = vec![0i64; k];
        for (xi, img) in x.iter().zip(images) {
            acc = add(&acc, &scale(*xi, img));
        }
        acc
    };

    // candidate images of generator i: elements killed by factors[i]
    let candidates: Vec<Vec<Vec<i64>>> = (0..k)
        .map(|i| {
            elements
                .iter()
                .filter(|e| scale(factors[i], e).iter().all(|&a| a == 0))
                .cloned()
                .collect()
        })
        .collect();

    let mut autos: Vec<Vec<Vec<i64>>> = Vec::new();
    let mut stack: Vec<Vec<i64>> = Vec::new();
    search_images(
        &candidates,
        &mut stack,
        &mut |images: &[Vec<i64>]| {
            // bijectivity: distinct images of all elements
            let mut seen = vec![false; elements.len()];
            for e in &elements {
                let idx = index_of[&apply(images, e)];
                if seen[idx] {
                    return;
                }
                seen[idx] = true;
            }
            // q-preservation on every element
            for (e, qv) in elements.iter().zip(&q_table) {
                if form.q(&apply(images, e)) != *qv {
                    return;
                }
            }
            autos.push(images.to_vec());
        },
    );

    let identity_images: Vec<Vec<i64>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| i64::from(i == j))
                .collect()
        })
        .collect();
    let mut census: BTreeMap<usize, usize> = BTreeMap::new();
    for a in &autos {
        let mut power = a.clone();
        let mut ord = 1usize;
        while power != identity_images {
            power = (0..k).map(|i| apply(a, &power[i])).collect();
            ord += 1;
        }
        *census.entry(ord).or_insert(0) += 1;
    }

    Ok(OrthGroupReport {
        order: autos.len(),
        census,
    })
}

fn search_images(
    candidates: &[Vec<Vec<i64>>],
    stack: &mut Vec<Vec<i64>>,
    visit: &mut impl FnMut(&[Vec<i64>]),
) {
    let depth = stack.len();
    if depth == candidates.len() {
        visit(stack);
        return;
    }
    for c in &candidates[depth] {
        stack.push(c.clone());
        search_images(candidates, stack, visit);
        stack.pop();
    }
}

/// Exact enumeration of short vectors of a negative definite Gram
/// matrix: counts of x != 0 with (x, x) = -q for 0 < q <= max value.
pub fn short_vector_counts(
    gram: &GramMatrix,
    max_positive_norm: i64,
) -> Result<BTreeMap<i64, usize>, QuadformError> {
    let n = gram.size();
    // quadratic completion of the positive form -gram
    let mut a: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| Rat::from_integer(-gram.get(i, j) as i128))
                .collect()
        })
        .collect();
    let mut d = vec![Rat::zero(); n];
    let mut u = vec![vec![Rat::zero(); n]; n];
    for i in 0..n {
        d[i] = a[i][i];
        if d[i] <= Rat::zero() {
            return Err(QuadformError::NotNegativeDefinite);
        }
        for j in i + 1..n {
            u[i][j] = a[i][j] / d[i];
        }
        for r in i + 1..n {
            for c in i + 1..n {
                let delta = d[i] * u[i][r] * u[i][c];
                a[r][c] -= delta;
            }
        }
    }

    let bound = Rat::from_integer(max_positive_norm as i128);
    let mut counts: BTreeMap<i64, usize> = BTreeMap::new();
    let mut x = vec![0i128; n];
    enumerate_level(
        n,
        &d,
        &u,
        &mut x,
        (n - 1) as isize,
        bound,
        Rat::zero(),
        &mut |xs, positive_norm| {
            if xs.iter().any(|&c| c != 0) {
                assert!(
                    positive_norm.is_integer(),
                    "even form gave non-integer norm"
                );
                let norm = -positive_norm.to_integer() as i64;
                *counts.entry(norm).or_insert(0) += 1;
            }
        },
    );
    Ok(counts)
}

#[allow(clippy::too_many_arguments)]
fn enumerate_level(
    n: usize,
    d: &[Rat],
    u: &[Vec<Rat>],
    x: &mut Vec<i128>,
    level: isize,
    budget: Rat,
    used: Rat,
    visit: &mut impl FnMut(&[i128], Rat),
) {
    if level < 0 {
        visit(x, used);
        return;
    }
    let i = level as usize;
    let shift: Rat = (i + 1..n)
        .map(|j| u[i][j] * Rat::from_integer(x[j]))
        .sum();
    let term = |t: i128| -> Rat {
        let y = Rat::from_integer(t) + shift;
        d[i] * y * y
    };
    // the feasible t form an interval; walk outward from its center
    let anchor = (-shift).floor().to_integer();
    for start in [anchor, anchor + 1] {
        let dir = if start == anchor { -1 } else { 1 };
        let mut t = start;
        loop {
            let w = term(t);
            if w > budget {
                break;
            }
            x[i] = t;
            enumerate_level(n, d, u, x, level - 1, budget - w, used + w, visit);
            t += dir;
        }
        x[i] = 0;
    }
}

/// One candidate in the final divisor search.
#[derive(Debug, Clone)]
pub struct EndgameCase {
    pub n: i64,
    pub m: i64,
    pub gram: GramMatrix,
    pub factors: Vec<i64>,
}

/// Outcome of the divisor search `n m^2 = 90` with the glue test.
#[derive(Debug, Clone)]
pub struct EndgameReport {
    pub cases: Vec<EndgameCase>,
    /// (n, m) pairs whose overlattice has invariant factors (3, 60).
    pub admitted: Vec<(i64, i64)>,
    /// Whether the alternative branch 3 * 60 = 8 n m^2 has a solution.
    pub index_one_feasible: bool,
}

/// Solves n m^2 = 90 over positive integers and, for each solution,
/// forms the overlattice Gram
/// [[2m, 0, m], [0, 2m, m], [m, m, m + n/2]]
/// and reads off its invariant factors.
pub fn endgame_solver() -> EndgameReport {
    let target = 90i64;
    let mut cases = Vec::new();
    let mut admitted = Vec::new();
    let mut m = 1i64;
    while m * m <= target {
        if target % (m * m) == 0 {
            let n = target / (m * m);
            assert_eq!(n % 2, 0, "n must stay even for the half-glue vector");
            let gram = GramMatrix::from_rows(&[
                vec![2 * m, 0, m],
                vec![0, 2 * m, m],
                vec![m, m, m + n / 2],
            ])
            .unwrap();
            let snf = smith_normal_form(&gram.rows());
            let factors: Vec<i64> = snf
                .diag
                .iter()
                .filter(|&&dv| dv != 1)
                .map(|&dv| dv as i64)
                .collect();
            if factors == [3, 60] {
                admitted.push((n, m));
            }
            cases.push(EndgameCase { n, m, gram, factors });
        }
        m += 1;
    }
    // index-one branch: 3 * 60 = 2n * (2m)^2 / 2 = 8 n m^2
    let index_one_feasible = 180 % 8 == 0;
    EndgameReport {
        cases,
        admitted,
        index_one_feasible,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn snf_of_diagonal_form() {
        let snf = smith_normal_form(&[vec![-2, 0], vec![0, -6]]);
        assert_eq!(snf.diag, vec![2, 6]);
        assert!(snf.verify(&[vec![-2, 0], vec![0, -6]]));
    }

    #[test]
    fn snf_handles_rank_deficiency() {
        let m = vec![vec![2, 4], vec![4, 8]];
        let snf = smith_normal_form(&m);
        assert_eq!(snf.diag, vec![2, 0]);
        assert!(snf.verify(&m));
    }

    #[test]
    fn snf_divisibility_chain_on_awkward_input() {
        let m = vec![vec![2, 0, 0], vec![0, 3, 0], vec![0, 0, 4]];
        let snf = smith_normal_form(&m);
        assert_eq!(snf.diag, vec![1, 2, 12]);
        assert!(snf.verify(&m));
    }

    #[test]
    fn hnf_reduces_generators() {
        let h = row_hnf(&[vec![2, 0], vec![0, 2], vec![1, 1]]);
        assert_eq!(h.rank(), 2);
        assert_eq!(h.diag_product(), 2);

        let dependent = row_hnf(&[vec![1, 2, 3], vec![2, 4, 6]]);
        assert_eq!(dependent.rank(), 1);
    }

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        let m = vec![vec![2i128, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]];
        assert_eq!(bareiss_det(&m), 4);
        let singular = vec![vec![1i128, 2], vec![2, 4]];
        assert_eq!(bareiss_det(&singular), 0);
    }

    #[test]
    fn discriminant_of_negative_a2() {
        let g = GramMatrix::from_rows(&[vec![-2, 1], vec![1, -2]]).unwrap();
        let f = discriminant_form(&g).unwrap();
        assert_eq!(f.factors(), &[3]);
        assert_eq!(f.order(), 3);
        assert_eq!(f.q(&[1]), Rat::new(4, 3));
        assert_eq!(f.q(&[2]), Rat::new(4, 3));
        assert!(isotropic_elements(&f).is_empty());
    }

    #[test]
    fn discriminant_of_hyperbolic_plane_is_trivial() {
        let g = GramMatrix::from_rows(&[vec![0, 1], vec![1, 0]]).unwrap();
        let f = discriminant_form(&g).unwrap();
        assert!(f.factors().is_empty());
        assert_eq!(f.group_string(), "trivial");
    }

    #[test]
    fn discriminant_rejects_bad_inputs() {
        let odd = GramMatrix::from_rows(&[vec![-2, 1], vec![1, -3]]).unwrap();
        assert_eq!(
            discriminant_form(&odd).err(),
            Some(QuadformError::OddDiagonal(-3)),
            "odd diagonal must be rejected"
        );
        let singular = GramMatrix::from_rows(&[vec![2, 2], vec![2, 2]]).unwrap();
        assert!(matches!(
            discriminant_form(&singular),
            Err(QuadformError::Singular)
        ));
    }

    #[test]
    fn order_two_form_has_trivial_orthogonal_group() {
        let g = GramMatrix::from_rows(&[vec![-2]]).unwrap();
        let f = discriminant_form(&g).unwrap();
        assert_eq!(f.factors(), &[2]);
        assert_eq!(f.q(&[1]), Rat::new(3, 2));
        let o = orthogonal_group_of_form(&f).unwrap();
        assert_eq!(o.order, 1);
    }

    #[test]
    fn bilinear_polarization_identity() {
        let g = GramMatrix::from_rows(&[vec![-2, 1], vec![1, -2]]).unwrap();
        let f = discriminant_form(&g).unwrap();
        for x in f.elements() {
            for y in f.elements() {
                let sum: Vec<i64> = x
                    .iter()
                    .zip(&y)
                    .zip(f.factors())
                    .map(|((a, b), &d)| (a + b).rem_euclid(d))
                    .collect();
                let lhs = rat_mod(f.q(&sum) - f.q(&x) - f.q(&y), 2);
                let rhs = rat_mod(f.bilinear(&x, &y) * Rat::from_integer(2), 2);
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn short_vectors_of_small_root_lattices() {
        let a1 = GramMatrix::from_rows(&[vec![-2]]).unwrap();
        assert_eq!(
            short_vector_counts(&a1, 2).unwrap(),
            BTreeMap::from([(-2, 2)])
        );

        let a2 = GramMatrix::from_rows(&[vec![-2, 1], vec![1, -2]]).unwrap();
        let counts = short_vector_counts(&a2, 2).unwrap();
        assert_eq!(counts.get(&-2), Some(&6), "A2 has six roots");

        let sq = GramMatrix::from_rows(&[vec![-2, 0], vec![0, -2]]).unwrap();
        let counts = short_vector_counts(&sq, 4).unwrap();
        assert_eq!(counts, BTreeMap::from([(-2, 4), (-4, 4)]));

        let pos = GramMatrix::from_rows(&[vec![2]]).unwrap();
        assert!(short_vector_counts(&pos, 2).is_err());
    }

    #[test]
    fn endgame_divisor_search() {
        let report = endgame_solver();
        let pairs: Vec<(i64, i64)> = report.cases.iter().map(|c| (c.n, c.m)).collect();
        assert_eq!(pairs, vec![(90, 1), (10, 3)]);

        assert_eq!(report.cases[0].factors, vec![180]);
        assert_eq!(
            report.cases[0].gram.rows(),
            vec![vec![2, 0, 1], vec![0, 2, 1], vec![1, 1, 46]]
        );
        assert_eq!(report.cases[1].factors, vec![3, 60]);
        assert_eq!(
            report.cases[1].gram.rows(),
            vec![vec![6, 0, 3], vec![0, 6, 3], vec![3, 3, 8]]
        );
        assert_eq!(report.admitted, vec![(10, 3)]);
        assert!(!report.index_one_feasible);
    }

    #[test]
    fn gram_round_trips_through_text() {
        let g = GramMatrix::from_rows(&[vec![-2, 1], vec![1, -2]]).unwrap();
        let text = g.to_string();
        let back: GramMatrix = text.parse().unwrap();
        assert_eq!(back, g);

        assert!("2\n1 2\n3".parse::<GramMatrix>().is_err());
        assert!("x".parse::<GramMatrix>().is_err());
        assert!(GramMatrix::from_rows(&[vec![1, 2], vec![3, 4]]).is_err());
    }

    #[test]
    fn factor_formatting() {
        assert_eq!(format_factors(&[1, 1, 1, 3, 60]), "3 60");
        assert_eq!(format_factors(&[1, 1]), "");
        assert_eq!(group_string(&[3, 60]), "Z/3 ⊕ Z/60");
        assert_eq!(group_string(&[]), "trivial");
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn small_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
            proptest::collection::vec(
                proptest::collection::vec(-9i64..=9, cols),
                rows,
            )
        }

        proptest! {
            #[test]
            fn snf_transforms_are_exact(m in small_matrix(3, 4)) {
                let snf = smith_normal_form(&m);
                prop_assert!(snf.verify(&m));
                for w in snf.diag.windows(2) {
                    prop_assert!(w[1] == 0 || w[1] % w[0] == 0);
                }
                prop_assert!(snf.diag.iter().all(|&d| d >= 0));
            }

            #[test]
            fn snf_preserves_determinant_magnitude(m in small_matrix(3, 3)) {
                let snf = smith_normal_form(&m);
                let det = bareiss_det(
                    &m.iter()
                        .map(|r| r.iter().map(|&x| x as i128).collect())
                        .collect::<Vec<_>>(),
                );
                let prod: i128 = snf.diag.iter().product();
                prop_assert_eq!(det.abs(), prod.abs());
            }

            #[test]
            fn discriminant_group_order_is_det(
                a in -4i64..=4, b in -4i64..=4, c in -4i64..=4,
            ) {
                let g = GramMatrix::from_rows(&[vec![2 * a, b], vec![b, 2 * c]]).unwrap();
                let det = g.det();
                prop_assume!(det != 0);
                let f = discriminant_form(&g).unwrap();
                prop_assert_eq!(f.order(), det.abs());
                // q-value denominators divide twice the factor
                for (i, &d) in f.factors().iter().enumerate() {
                    let mut gen = vec![0i64; f.factors().len()];
                    gen[i] = 1;
                    let q = f.q(&gen);
                    prop_assert_eq!((2 * d as i128) % q.denom(), 0);
                }
            }
        }
    }
}
