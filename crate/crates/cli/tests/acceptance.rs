//! The fourteen acceptance checks, one test each, zero tolerance.
//! Every test prints a single verdict line; failures list the parts
//! that broke.

use leechlab_core::hesse::{
    base_change_fibers, base_fibers, euler_sum, pencil_member, product_of, shioda_tate_bound,
    six_node_check, transcendental_report, triangle_factorization,
};
use leechlab_core::hyperbolic::{
    ade_string, ar_basis_report, coxeter_type, fixed_lattice_det, phi4_report, projected_w_norm,
    weyl_projection, Ade, RootSet,
};
use leechlab_core::leech::{subset_sum_decompositions, LeechLattice};
use leechlab_core::niemeier::{invariant_lattices, partitions_a1_24, partitions_a2_12};
use leechlab_core::permchar::{
    character_table, cube_twist_exponent_candidates, decomposition_solutions,
    fixed_total_dimension, twisted_trace, verify_character_table, AltSix, SubgroupLattice,
};
use leechlab_core::quadform::{endgame_solver, Rat};
use leechlab_core::{Eisenstein, GolayCode};
use std::process::Command;
use std::sync::OnceLock;

fn golay() -> &'static GolayCode {
    static CODE: OnceLock<GolayCode> = OnceLock::new();
    CODE.get_or_init(GolayCode::build)
}

fn leech() -> &'static LeechLattice {
    static LAT: OnceLock<LeechLattice> = OnceLock::new();
    LAT.get_or_init(LeechLattice::new)
}

fn group() -> &'static AltSix {
    static G: OnceLock<AltSix> = OnceLock::new();
    G.get_or_init(AltSix::build)
}

fn subgroups() -> &'static SubgroupLattice {
    static L: OnceLock<SubgroupLattice> = OnceLock::new();
    L.get_or_init(|| group().subgroup_lattice())
}

fn check(n: u32, what: &str, parts: &[(&str, bool)]) {
    let ok = parts.iter().all(|&(_, b)| b);
    println!(
        "criterion {n:>2}: {}  {what}",
        if ok { "PASS" } else { "FAIL" }
    );
    for &(label, b) in parts {
        if !b {
            println!("              broken: {label}");
        }
    }
    assert!(ok, "criterion {n} failed: {what}");
}

const ORBIT_SIZES: [u64; 10] = [1, 10, 20, 20, 30, 30, 36, 36, 45, 45];

const PENTAGON_GRAM: [[i64; 5]; 5] = [
    [-6, -3, -3, -3, -3],
    [-3, -4, -1, -2, -2],
    [-3, -1, -4, -2, -2],
    [-3, -2, -2, -4, -2],
    [-3, -2, -2, -2, -4],
];

#[test]
fn criterion_01_golay() {
    let c = golay();
    let dist = c.weight_distribution();
    check(
        1,
        "Golay code: dimension, word census, Steiner property",
        &[
            ("dimension 12", c.dimension() == 12),
            ("4096 words", c.word_count() == 4096),
            ("759 octads", c.octads().len() == 759 && dist[8] == 759),
            ("2576 dodecads", c.dodecad_count() == 2576 && dist[12] == 2576),
            ("complementary weights", dist[0] == 1 && dist[16] == 759 && dist[24] == 1),
            ("Steiner system on all five-sets", c.is_steiner_system()),
        ],
    );
}

#[test]
fn criterion_02_leech() {
    let l = leech();
    let gen = l.verify_generators();
    let roots = l.no_root_report();
    let census = l.norm_four_census();
    let mut octad = 0usize;
    let mut odd = 0usize;
    let mut pair = 0usize;
    let mut all_members = true;
    l.for_each_norm_four(|v| {
        if !l.contains(&v) || leechlab_core::norm(&v) != -4 {
            all_members = false;
        }
        let odd_coords = v.coords().iter().filter(|c| *c % 2 != 0).count();
        if odd_coords == 24 {
            odd += 1;
        } else if v.coords().iter().filter(|c| **c != 0).count() == 2 {
            pair += 1;
        } else {
            octad += 1;
        }
    });
    check(
        2,
        "Leech lattice: unimodular generators, no roots, kissing census",
        &[
            ("Gram determinant 1", gen.gram_det == 1 && gen.gram_unimodular),
            ("rank 24", gen.rank == 24),
            ("no norm -2 vectors", roots.all_rejected),
            ("196560 total", census.total() == 196560),
            ("octad shape 97152", census.octad_shape == 97152 && octad == 97152),
            ("odd shape 98304", census.odd_shape == 98304 && odd == 98304),
            ("pair shape 1104", census.pair_shape == 1104 && pair == 1104),
            ("every vector is a member of norm -4", all_members),
        ],
    );
}

#[test]
fn criterion_03_s_census() {
    let l = leech();
    let p = l.pentagon();
    let s = l.orthogonal_census(&p);
    let pairs = l.complement_pairs(&p, &s);
    check(
        3,
        "orthogonal census S and its complement pairs",
        &[
            ("|S| = 81", s.len() == 81),
            ("case split 30/48/3", s.octad_case == 30 && s.odd_case == 48 && s.pair_case == 3),
            ("X2 lies in S", s.contains(&p.x2)),
            ("|S'| = 276", pairs.pair_count == 276),
            ("552 paired vectors", pairs.vector_count == 552 && pairs.closed_under_pairing),
        ],
    );
}

#[test]
fn criterion_04_roots() {
    let l = leech();
    let p = l.pentagon();
    let r_type = coxeter_type(&RootSet::standard(l).gram()).expect("simply laced");
    let a9 = coxeter_type(&RootSet::a9_chain(l).gram()).expect("simply laced");
    let d9 = coxeter_type(&RootSet::d9_chain(l).gram()).expect("simply laced");
    let pent_rows = p.gram().rows();
    let pent_ok = pent_rows
        .iter()
        .zip(PENTAGON_GRAM.iter())
        .all(|(row, exp)| row == exp);
    check(
        4,
        "root classification, pentagon Gram, A9 and D9 chains",
        &[
            ("R has type A2^2 A1^2", ade_string(&r_type) == "A2^2 A1^2"),
            ("pentagon Gram entry-for-entry", pent_ok),
            ("nine-root chain is A9", a9 == vec![Ade::A(9)]),
            ("nine-root chain is D9", d9 == vec![Ade::D(9)]),
        ],
    );
}

#[test]
fn criterion_05_weyl_class() {
    let l = leech();
    let w = weyl_projection(l);
    check(
        5,
        "the degree-20 class h and the Weyl projection",
        &[
            ("h primitive", w.primitive),
            ("h orthogonal to the roots", w.orthogonal_to_roots),
            ("h^2 = 20", w.h_norm == 20),
            ("w_R^2 = -5", w.w_r_norm == Rat::from_integer(-5)),
            ("w_tau^2 = 0 at 20", projected_w_norm(20) == Rat::from_integer(0)),
            ("fixed-lattice determinant 180", fixed_lattice_det(20, 36) == 180),
        ],
    );
}

#[test]
fn criterion_06_discriminant_form() {
    let l = leech();
    let ar = ar_basis_report(l);
    let phi = phi4_report(l);
    let sixth = Rat::new(1, 6);
    let census: Vec<(usize, usize)> = ar.orth_census.iter().map(|(&k, &v)| (k, v)).collect();
    check(
        6,
        "discriminant group, its form, its orthogonal group, phi4",
        &[
            ("A_R = Z/6 + Z/6", ar.group == "Z/6 ⊕ Z/6"),
            ("q = diag(1/6, 1/6)", ar.e1_q == sixth && ar.e2_q == sixth),
            ("36 distinct classes", ar.classes_distinct),
            ("no isotropic elements", ar.isotropic_count == 0),
            ("|O(A_R, q)| = 16", ar.orth_order == 16),
            ("order census 1:1, 2:11, 4:4", census == vec![(1, 1), (2, 11), (4, 4)]),
            ("phi4 induces order 4", phi.induced_order == 4 && phi.is_isometry),
            ("e1 -> e2, e2 -> -e1", phi.sends_e1_to_e2 && phi.sends_e2_to_minus_e1),
        ],
    );
}

#[test]
fn criterion_07_subset_sums() {
    let ways81 = subset_sum_decompositions(&ORBIT_SIZES, 81);
    let ways54 = subset_sum_decompositions(&ORBIT_SIZES, 54);
    let expected81: Vec<Vec<u64>> = vec![
        vec![1, 10, 20, 20, 30],
        vec![1, 20, 30, 30],
        vec![36, 45],
    ];
    check(
        7,
        "orbit-size decompositions of 81 and 54",
        &[
            ("81 decomposes in exactly the three ways", ways81 == expected81),
            ("54 has no decomposition", ways54.is_empty()),
        ],
    );
}

#[test]
fn criterion_08_group_structure() {
    let g = group();
    let lat = subgroups();
    let table_ok = verify_character_table(&character_table()).is_valid();
    check(
        8,
        "group of order 360: classes, missing subgroups, orthogonality",
        &[
            ("order 360", g.order() == 360),
            (
                "class sizes (1, 45, 40, 40, 90, 72, 72)",
                g.class_sizes() == [1, 45, 40, 40, 90, 72, 72],
            ),
            ("no subgroup of order 30", !lat.order_exists(30).unwrap()),
            ("no subgroup of order 40", !lat.order_exists(40).unwrap()),
            ("no subgroup of order 45", !lat.order_exists(45).unwrap()),
            ("character table orthogonality exact", table_ok),
        ],
    );
}

#[test]
fn criterion_09_action_decomposition() {
    let g = group();
    let avg = g
        .average_over_orders(|o| fixed_total_dimension(o).unwrap_or(0))
        .expect("integral average");
    let t = character_table();
    let sols = decomposition_solutions(&t, &[20, 4, 2, 2, 0, 0, 0], &[0, 1, 2, 3, 4, 5, 6]);
    let mu3 = cube_twist_exponent_candidates();
    let trace = twisted_trace(&[0, 1, 2, 0], &[1, 2, -1, 0]);
    check(
        9,
        "invariant rank, unique decomposition, twist candidates, trace",
        &[
            ("average fixed dimension 5", avg == 5),
            ("unique solution (1, 1, 0, 0, 1, 0)", sols == vec![[1, 1, 0, 0, 1, 0]]),
            (
                "mu3 candidates (0,0,0), (1,2,0), (2,1,0)",
                mu3 == vec![(0, 0, 0), (1, 2, 0), (2, 1, 0)],
            ),
            ("twisted trace 2 + 3w", trace == Eisenstein::new(2, 3)),
            ("trace is not a rational integer", !trace.is_integer()),
        ],
    );
}

#[test]
fn criterion_10_invariant_lattices() {
    let lattices = invariant_lattices().expect("glue accepted");
    let displayed: [&[[i64; 5]]; 3] = [
        &[
            [-2, 0, -1, 0, 0],
            [0, -2, -1, 0, 0],
            [-1, -1, -4, 0, 0],
            [0, 0, 0, -2, -1],
            [0, 0, 0, -1, -8],
        ],
        &[
            [-2, 0, -1, -1, -1],
            [0, -2, -1, -1, -1],
            [-1, -1, -4, -1, -1],
            [-1, -1, -1, -4, -1],
            [-1, -1, -1, -1, -6],
        ],
        &[
            [-2, 1, 0, 0, 0],
            [1, -2, 0, 0, 0],
            [0, 0, -2, 1, 0],
            [0, 0, 1, -2, 0],
            [0, 0, 0, 0, -20],
        ],
    ];
    let mut parts: Vec<(&str, bool)> = vec![("three lattices", lattices.len() == 3)];
    for (l, exp) in lattices.iter().zip(displayed.iter()) {
        let rows = l.gram.rows();
        let matches = rows.iter().zip(exp.iter()).all(|(row, e)| row == e);
        parts.push(("Gram assembles exactly as displayed", matches));
        parts.push(("invariant factors 3, 60", l.factors == vec![3, 60]));
        parts.push(("|det| = 180", l.det.abs() == 180));
    }
    check(10, "the three invariant Gram matrices and their glue", &parts);
}

#[test]
fn criterion_11_partitions() {
    let lat = subgroups();
    let a1 = partitions_a1_24(lat);
    let a2 = partitions_a2_12(lat);
    check(
        11,
        "admissible orbit partitions for both root systems",
        &[
            (
                "A1 partitions (1,1,1,6,15) and (1,1,6,6,10)",
                a1.admitted == vec![vec![1, 1, 1, 6, 15], vec![1, 1, 6, 6, 10]],
            ),
            ("three exclusions recorded", a1.excluded.len() == 3),
            (
                "A2 partition (1,1,1,1,20) only",
                a2.admitted == vec![vec![1, 1, 1, 1, 20]],
            ),
        ],
    );
}

#[test]
fn criterion_12_endgame() {
    let rep = endgame_solver();
    let shapes: Vec<(i64, i64, Vec<i64>)> = rep
        .cases
        .iter()
        .map(|c| (c.n, c.m, c.factors.clone()))
        .collect();
    check(
        12,
        "the nm^2 = 90 divisor search and glue test",
        &[
            (
                "solutions (90, 1) -> [180] and (10, 3) -> [3, 60]",
                shapes == vec![(90, 1, vec![180]), (10, 3, vec![3, 60])],
            ),
            ("only (10, 3) admitted", rep.admitted == vec![(10, 3)]),
            ("index-one branch infeasible", !rep.index_one_feasible),
        ],
    );
}

#[test]
fn criterion_13_pencil() {
    let mut factored = true;
    for k in 0..3 {
        factored &=
            product_of(&triangle_factorization(k)) == pencil_member(Eisenstein::omega_pow(k));
    }
    let cover = base_change_fibers();
    let i6 = cover.iter().filter(|f| f.kodaira == "I6").count();
    let i3 = cover.iter().filter(|f| f.kodaira == "I3").count();
    let nodes = six_node_check();
    let trans = transcendental_report(shioda_tate_bound(&cover) as usize);
    check(
        13,
        "pencil factorizations, fiber table, bound, nodes",
        &[
            ("all three members factor exactly", factored),
            ("fiber table 2 x I6 + 4 x I3", i6 == 2 && i3 == 4),
            ("Euler number 24", euler_sum(&cover) == 24),
            ("base table stays at four I3", base_fibers().len() == 4 && euler_sum(&base_fibers()) == 12),
            ("bound 20", shioda_tate_bound(&cover) == 20),
            ("six nodes, three per triangle", nodes.count() == 6 && nodes.per_triangle == [3, 3]),
            ("no triple point, all distinct", nodes.triple_point_free && nodes.all_distinct),
            ("transcendental det 36, total 22", trans.det == 36 && trans.picard_plus_rank == 22),
        ],
    );
}

#[test]
fn criterion_14_cli() {
    let bin = env!("CARGO_BIN_EXE_leechlab");
    let run = || {
        Command::new(bin)
            .args(["verify-all", "--json"])
            .output()
            .expect("binary runs")
    };
    let a = run();
    let b = run();
    let normalize = |bytes: &[u8]| -> serde_json::Value {
        let mut v: serde_json::Value = serde_json::from_slice(bytes).expect("valid JSON");
        for item in v.as_array_mut().expect("array") {
            item["ms"] = 0.into();
        }
        v
    };
    let ja = normalize(&a.stdout);
    let jb = normalize(&b.stdout);
    check(
        14,
        "the verifier binary: exit code and stable JSON",
        &[
            ("first run exits 0", a.status.success()),
            ("second run exits 0", b.status.success()),
            ("at least 30 claims", ja.as_array().map(|v| v.len()).unwrap_or(0) >= 30),
            ("byte-stable modulo timing", ja == jb),
        ],
    );
}
