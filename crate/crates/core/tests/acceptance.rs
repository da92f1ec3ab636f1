//! Acceptance suite: one test per criterion, each ending in a PASS line.
//! Run with `cargo test -p hecke-center --test acceptance -- --nocapture`
//! to see the per-criterion report.

use hecke_center::center::{
    basis, check_monomial_set, counterexample_matrix, gamma_basis, verify_gamma,
};
use hecke_center::combinat::enumerate_partitions;
use hecke_center::matrix::LabeledMatrix;
use hecke_center::s3;
use hecke_center::tower;
use hecke_center::verify;
use hecke_center::{comp, global_store, Composition, Int, PolyZxi};

type M = LabeledMatrix<Int>;

fn p(coeffs: &[i64]) -> PolyZxi {
    PolyZxi::from_ints(coeffs)
}

fn matrix(labels: Vec<Composition>, rows: Vec<Vec<PolyZxi>>) -> M {
    M::from_rows(labels.clone(), labels, rows)
}

fn printed_m2() -> M {
    matrix(
        vec![comp![2], comp![1, 1]],
        vec![vec![p(&[1, 0, 1]), p(&[1])], vec![p(&[0, 0, 1]), p(&[1])]],
    )
}

fn printed_n2() -> M {
    matrix(
        vec![comp![2], comp![1, 1]],
        vec![vec![p(&[1]), p(&[-1])], vec![p(&[0, 0, -1]), p(&[1, 0, 1])]],
    )
}

fn printed_m3() -> M {
    matrix(
        vec![comp![3], comp![2, 1], comp![1, 1, 1]],
        vec![
            vec![p(&[1, 0, 5, 0, 5, 0, 1]), p(&[3, 0, 5, 0, 1]), p(&[1])],
            vec![p(&[0, 0, 2, 0, 4, 0, 1]), p(&[1, 0, 4, 0, 1]), p(&[1])],
            vec![p(&[0, 0, 0, 0, 3, 0, 1]), p(&[0, 0, 3, 0, 1]), p(&[1])],
        ],
    )
}

fn printed_n3() -> M {
    matrix(
        vec![comp![3], comp![2, 1], comp![1, 1, 1]],
        vec![
            vec![p(&[1, 0, 1]), p(&[-3, 0, -2]), p(&[2, 0, 1])],
            vec![p(&[0, 0, -2, 0, -1]), p(&[1, 0, 5, 0, 2]), p(&[-1, 0, -3, 0, -1])],
            vec![
                p(&[0, 0, 0, 0, 3, 0, 1]),
                p(&[0, 0, -3, 0, -7, 0, -2]),
                p(&[1, 0, 3, 0, 4, 0, 1]),
            ],
        ],
    )
}

#[test]
fn criterion_01_printed_matrix_reproduction() {
    let store = global_store();
    assert_eq!(store.m_direct(2).unwrap(), printed_m2());
    assert_eq!(store.n_production(2).unwrap(), printed_n2());
    assert_eq!(store.m_direct(3).unwrap(), printed_m3());
    assert_eq!(store.n_production(3).unwrap(), printed_n3());
    println!("criterion 1: PASS - direct route reproduces the printed block matrices for k = 2, 3 exactly");
}

#[test]
fn criterion_02_example_bases() {
    let store = global_store();
    let expect = |elems: &[hecke_center::Central], idx: usize, coeffs: Vec<(Composition, &[i64])>| {
        let want: Vec<(Composition, PolyZxi)> =
            coeffs.into_iter().map(|(mu, c)| (mu, p(c))).collect();
        assert_eq!(elems[idx].monomial_coeffs(), want.as_slice(), "element {idx}");
    };

    let b3 = basis(store, 3).unwrap();
    assert_eq!(b3.len(), 3);
    expect(&b3, 0, vec![(Composition::empty(), &[1])]);
    expect(&b3, 1, vec![(comp![1], &[1])]);
    expect(&b3, 2, vec![(comp![2], &[1]), (comp![1, 1], &[0, 0, -1])]);

    let b4 = basis(store, 4).unwrap();
    assert_eq!(b4.len(), 5);
    expect(&b4, 2, vec![(comp![2], &[1]), (comp![1, 1], &[0, 0, -1])]);
    expect(&b4, 3, vec![(comp![2], &[-1]), (comp![1, 1], &[1, 0, 1])]);
    expect(
        &b4,
        4,
        vec![
            (comp![3], &[1, 0, 1]),
            (comp![2, 1], &[0, 0, -2, 0, -1]),
            (comp![1, 1, 1], &[0, 0, 0, 0, 3, 0, 1]),
        ],
    );

    let b5 = basis(store, 5).unwrap();
    assert_eq!(b5.len(), 7);
    // embedding: the rank-4 combinations reappear verbatim
    for (i, e) in b4.iter().enumerate() {
        assert_eq!(e.label(), b5[i].label());
        assert_eq!(e.monomial_coeffs(), b5[i].monomial_coeffs());
    }
    expect(
        &b5,
        5,
        vec![
            (comp![3], &[-3, 0, -2]),
            (comp![2, 1], &[1, 0, 5, 0, 2]),
            (comp![1, 1, 1], &[0, 0, -3, 0, -7, 0, -2]),
        ],
    );
    expect(
        &b5,
        6,
        vec![
            (comp![4], &[1, 0, 5, 0, 5, 0, 1]),
            (comp![2, 2], &[0, 0, -4, 0, -9, 0, -6, 0, -1]),
            (comp![3, 1], &[0, 0, -3, 0, -9, 0, -6, 0, -1]),
            (comp![2, 1, 1], &[0, 0, 0, 0, 8, 0, 14, 0, 7, 0, 1]),
            (comp![1, 1, 1, 1], &[0, 0, 0, 0, 0, 0, -16, 0, -20, 0, -8, 0, -1]),
        ],
    );
    for e in b5.iter() {
        assert!(e.value().is_central());
    }
    println!("criterion 2: PASS - bases for ranks 3, 4, 5 match the worked examples coefficient-for-coefficient");
}

#[test]
fn criterion_03_counterexample() {
    let m = counterexample_matrix::<Int>();
    let expected = [vec![p(&[1]), p(&[0]), p(&[3])],
        vec![p(&[0]), p(&[1]), p(&[0, 2])],
        vec![p(&[0]), p(&[0]), p(&[1, 0, 1])]];
    assert_eq!(m.row_labels(), &[comp![1, 1, 1], comp![2, 1], comp![3]]);
    assert_eq!(m.col_labels(), &[Composition::empty(), comp![1], comp![2]]);
    for (r, row) in expected.iter().enumerate() {
        for (c, want) in row.iter().enumerate() {
            assert_eq!(m.entry(r, c), want);
        }
    }
    let det = m.det();
    assert_eq!(det, p(&[1, 0, 1]));
    assert!(!det.is_unit());
    assert!(!check_monomial_set::<Int>(&[Composition::empty(), comp![1], comp![2]], 3).unwrap());
    println!("criterion 3: PASS - the monomial set {{m_0, m_1, m_2}} has non-unit determinant 1+x^2 in rank 3");
}

#[test]
fn criterion_04_table_columns() {
    let table = s3::table::<Int>(7);
    let golden: Vec<(Vec<u32>, [i64; 3])> = vec![
        (vec![], [1, 0, 0]),
        (vec![1], [0, 1, 0]),
        (vec![2], [3, 0, 1]),
        (vec![1, 1], [0, 0, 1]),
        (vec![3], [0, 3, 0]),
        (vec![2, 1], [0, 2, 0]),
        (vec![4], [7, 0, 5]),
        (vec![2, 2], [2, 0, 1]),
        (vec![3, 1], [2, 0, 4]),
        (vec![5], [0, 11, 0]),
        (vec![3, 2], [0, 4, 0]),
        (vec![4, 1], [0, 6, 0]),
        (vec![6], [23, 0, 21]),
        (vec![3, 3], [2, 0, 3]),
        (vec![4, 2], [8, 0, 6]),
        (vec![5, 1], [10, 0, 12]),
        (vec![7], [0, 43, 0]),
        (vec![4, 3], [0, 8, 0]),
        (vec![5, 2], [0, 12, 0]),
        (vec![6, 1], [0, 22, 0]),
    ];
    assert_eq!(table.columns.len(), golden.len());
    for ((mu, col), (parts, want)) in table.columns.iter().zip(&golden) {
        assert_eq!(mu.parts(), parts.as_slice(), "column order");
        assert_eq!(col.gamma111, Int::from(want[0]), "column {mu}");
        assert_eq!(col.gamma21, Int::from(want[1]), "column {mu}");
        assert_eq!(col.gamma3, Int::from(want[2]), "column {mu}");
    }
    println!("criterion 4: PASS - all 20 table columns reproduced exactly in block order");
}

#[test]
fn criterion_05_closed_forms() {
    let mut checked = 0;
    for size in 1..=14u32 {
        for mu in enumerate_partitions(size) {
            if mu.len() > 2 {
                continue;
            }
            assert_eq!(
                s3::closed_column::<Int>(&mu),
                s3::c_column::<Int>(&mu),
                "closed form for {mu}"
            );
            checked += 1;
        }
    }
    assert!(s3::check_parity::<Int>(14));
    // mixed columns are even throughout the range
    use num_traits::Zero;
    for i in 1..=6u32 {
        for j in 1..=(14 - 2 * i) {
            let c = s3::closed_mij::<Int>(i, j);
            for v in [&c.gamma111, &c.gamma21, &c.gamma3] {
                assert!((v % Int::from(2)).is_zero(), "m_({},{}) entry {v} odd", i + j, i);
            }
        }
    }
    println!("criterion 5: PASS - closed forms agree with direct columns on {checked} columns; parity and evenness hold");
}

#[test]
fn criterion_06_classification() {
    let four = s3::enumerate_zs3_bases::<Int>(20);
    let mut expected: Vec<Vec<Composition>> = vec![
        vec![Composition::empty(), comp![1], comp![2]],
        vec![Composition::empty(), comp![1], comp![1, 1]],
        vec![Composition::empty(), comp![1], comp![2, 2]],
        vec![comp![1], comp![2], comp![2, 2]],
    ];
    for s in &mut expected {
        s.sort();
    }
    expected.sort();
    assert_eq!(four, expected);

    assert_eq!(
        s3::h3_unique_basis::<Int>(),
        vec![Composition::empty(), comp![1], comp![1, 1]]
    );

    use num_traits::Signed;
    let mut unit_hits = Vec::new();
    for i in 1..=30u32 {
        for j in 1..=30u32 {
            if s3::spanning_det::<Int>(i, j).abs() == Int::from(1) {
                unit_hits.push((i, j));
            }
        }
    }
    assert_eq!(unit_hits, vec![(2, 1)]);
    println!("criterion 6: PASS - exactly four specialized monomial bases, unique deformed basis, spanning determinant unit only at (2,1)");
}

#[test]
fn criterion_07_class_element_characterization() {
    let store = global_store();
    for n in 1..=5usize {
        let gammas = gamma_basis(store, n).unwrap();
        assert_eq!(gammas.len(), enumerate_partitions(n as u32).len());
        for g in &gammas {
            assert!(
                verify_gamma(g, g.label()).unwrap(),
                "characterization fails for {} in rank {n}",
                g.label()
            );
        }
    }
    println!("criterion 7: PASS - recovered class elements satisfy both characterizing properties for ranks 1..=5");
}

#[test]
fn criterion_08_unimodularity_and_rank_independence() {
    let store = global_store();
    for k in 0..=4u32 {
        let m = store.m_direct(k).unwrap();
        assert!(m.det().is_unit(), "det M({k}) not a unit");
        assert!(
            m.mul_ref(&store.n_production(k).unwrap()).is_identity(),
            "M({k})·N({k}) != I"
        );
    }
    for k in 2..=3u32 {
        assert_eq!(
            store.m_direct(k).unwrap(),
            store.m_direct_at_rank(k, (2 * k + 1) as usize).unwrap(),
            "entries of M({k}) changed at rank {}",
            2 * k + 1
        );
    }
    println!("criterion 8: PASS - unit determinants and exact inverses for k <= 4; entries independent of the ambient rank");
}

#[test]
fn criterion_09_property_suites() {
    let store = global_store();
    let checks = verify::run_all(store, 4).unwrap();
    let mut failed = Vec::new();
    for c in &checks {
        if !c.passed {
            failed.push(format!("{}: {}", c.name, c.detail));
        }
    }
    assert!(failed.is_empty(), "failing properties: {failed:?}");
    println!(
        "criterion 9: PASS - {} structural property suites green (associativity, commutativity, centrality, specialization, quasi-shuffle)",
        checks.len()
    );
}

#[test]
fn criterion_10_tower_cross_validation() {
    let store = global_store();
    let line = verify::tower_cross_validation(store, 4);
    assert!(line.passed, "tower validation failed: {}", line.detail);
    assert_eq!(
        store.resolve_hat(4).unwrap(),
        tower::HatConvention::SortDecreasing
    );
    println!("criterion 10: PASS - {}", line.detail);
}
