//! Acceptance suite: every check is exact integer arithmetic, so the
//! tolerance everywhere is equality. Run with `--nocapture` to see one
//! line per criterion.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use picard0n::basis::{dimension, nonadjacent_basis};
use picard0n::cyclic::CyclicOrder;
use picard0n::decompose::{decompose, is_consecutive, BlockDecomposition};
use picard0n::divisor::{canonicalize, enumerate_divisors, num_divisors, BoundaryDivisor};
use picard0n::expansion::{expand, oracle_expand_side};
use picard0n::relations::relation_matrix;
use picard0n::verify::{
    expansion_residual, oracle_sweep, rank_check, relations_sweep, seeded_orders,
};

const SEED: u64 = 0x5eed;

fn shuffled_labels(n: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    use rand::Rng;
    let mut labels: Vec<usize> = (1..=n).collect();
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        labels.swap(i, j);
    }
    labels
}

#[test]
fn criterion_01_divisor_count() {
    for n in 3..=14 {
        let divs = enumerate_divisors(n).unwrap();
        assert_eq!(divs.len(), (1usize << (n - 1)) - 1 - n, "count at n={n}");
        assert_eq!(divs.len(), num_divisors(n));
    }
    println!("criterion 01 PASS: |D^n| = 2^(n-1)-1-n for n=3..14");
}

#[test]
fn criterion_02_basis_count_matches_dimension() {
    for n in 4..=12 {
        let dim = dimension(n).unwrap();
        for order in seeded_orders(n, SEED, 20, 2).unwrap() {
            let basis = nonadjacent_basis(&order).unwrap();
            assert_eq!(basis.len(), dim, "basis size at n={n}, order {order}");
        }
    }
    println!("criterion 02 PASS: |basis| = 2^(n-1)-1-C(n,2) for n=4..12, 21 orders each");
}

#[test]
fn criterion_03_golden_basis_n5() {
    let order = CyclicOrder::standard(5).unwrap();
    let basis = nonadjacent_basis(&order).unwrap();
    let expect: Vec<BoundaryDivisor> = [[1, 3], [1, 4], [2, 4], [2, 5], [3, 5]]
        .iter()
        .map(|l| BoundaryDivisor::from_labels(5, l).unwrap())
        .collect();
    assert_eq!(basis.elements(), expect.as_slice());
    println!("criterion 03 PASS: n=5 standard basis is {{d{{1,3}}, d{{1,4}}, d{{2,4}}, d{{2,5}}, d{{3,5}}}}");
}

#[test]
fn criterion_04_golden_expansion_n6() {
    let order = CyclicOrder::standard(6).unwrap();
    let basis = nonadjacent_basis(&order).unwrap();
    let d = BoundaryDivisor::from_labels(6, &[1, 2, 3]).unwrap();
    let v = expand(&d, &basis).unwrap();
    assert_eq!(
        v.to_string(),
        "-d{1,3} +d{1,4} +d{3,6} -d{4,6} +d{1,2,4} -d{1,3,5} +d{1,4,5}"
    );
    println!("criterion 04 PASS: expand(d{{1,2,3}}, n=6) matches the golden expansion");
}

#[test]
fn criterion_05_golden_decompositions_n10() {
    let order = CyclicOrder::standard(10).unwrap();
    let hexagon = BoundaryDivisor::from_labels(10, &[1, 2, 4, 7, 10]).unwrap();
    assert_eq!(decompose(&hexagon, &order).unwrap().k(), 3);
    let circle = BoundaryDivisor::from_labels(10, &[1, 2, 3, 9, 10]).unwrap();
    assert_eq!(decompose(&circle, &order).unwrap().k(), 1);
    println!("criterion 05 PASS: d{{1,2,4,7,10}} has k=3 and d{{1,2,3,9,10}} has k=1 at n=10");
}

#[test]
fn criterion_06_oracle_equivalence() {
    for n in 4..=10 {
        let report = oracle_sweep(n, SEED, 10).unwrap();
        assert!(report.failures.is_empty(), "failures at n={n}");
        let consecutive = (n * (n - 1) / 2 - n) as u64;
        assert_eq!(report.checks, consecutive * 11, "coverage at n={n}");
    }
    println!("criterion 06 PASS: expand = oracle_expand, n=4..10, 11 orders, all consecutive divisors");
}

#[test]
fn criterion_07_relation_consistency() {
    for n in 4..=8 {
        let report = relations_sweep(n, SEED, 0).unwrap();
        assert!(report.failures.is_empty(), "failures at n={n}");
        let quads = (n * (n - 1) * (n - 2) * (n - 3) / 24) as u64;
        assert_eq!(report.checks, quads, "coverage at n={n}");
    }
    println!("criterion 07 PASS: the three Keel sums expand identically, n=4..8, all quadruples");
}

#[test]
fn criterion_08_rank_and_quotient() {
    for n in 4..=8 {
        let report = rank_check(n).unwrap();
        assert!(report.ok, "rank mismatch at n={n}: {report:?}");
        assert_eq!(report.rank, (n * (n - 1) / 2 - n) as u64);
        assert_eq!(
            report.num_divisors - report.rank,
            report.dimension,
            "quotient at n={n}"
        );
    }
    println!("criterion 08 PASS: rank(relations) = C(n,2)-n and |D^n| - rank = dim, n=4..8");
}

#[test]
fn criterion_09_residual_membership() {
    for n in 4..=7 {
        let order = CyclicOrder::standard(n).unwrap();
        let basis = nonadjacent_basis(&order).unwrap();
        let matrix = relation_matrix(n).unwrap();
        let exact = matrix.to_int_matrix();
        for d in enumerate_divisors(n).unwrap() {
            if !is_consecutive(&d, &order).unwrap() {
                continue;
            }
            let residual = expansion_residual(&d, &basis, matrix.columns()).unwrap();
            assert!(
                exact.in_row_space(&residual).unwrap(),
                "residual of {d} not in row space at n={n}"
            );
        }
    }
    println!("criterion 09 PASS: expansion residuals lie in the relation row space, n=4..7");
}

#[test]
fn criterion_10_property_suite() {
    // coefficient range: every expansion entry is -1, 0, or +1
    for n in 4..=8 {
        let order = CyclicOrder::standard(n).unwrap();
        let basis = nonadjacent_basis(&order).unwrap();
        for d in enumerate_divisors(n).unwrap() {
            let v = expand(&d, &basis).unwrap();
            assert!(v.coeffs().iter().all(|c| (-1..=1).contains(c)));
        }
    }

    // complement invariance of canonicalize and decompose duality
    for n in 4..=8 {
        let order = CyclicOrder::standard(n).unwrap();
        for d in enumerate_divisors(n).unwrap() {
            let rep = *d.rep();
            let comp = rep.complement();
            assert_eq!(canonicalize(&rep).unwrap(), canonicalize(&comp).unwrap());
            let dec = BlockDecomposition::of_subset(&rep, &order).unwrap();
            let dual = BlockDecomposition::of_subset(&comp, &order).unwrap();
            assert_eq!(dec.k(), dual.k());
            let mut blocks: Vec<_> = dec.blocks().to_vec();
            let mut gaps: Vec<_> = dual.gaps().to_vec();
            blocks.sort();
            gaps.sort();
            assert_eq!(blocks, gaps);
        }
    }

    // expansion complement invariance, via the oracle on both raw sides
    for n in 4..=8 {
        let order = CyclicOrder::standard(n).unwrap();
        let basis = nonadjacent_basis(&order).unwrap();
        for d in enumerate_divisors(n).unwrap() {
            if !is_consecutive(&d, &order).unwrap() {
                continue;
            }
            let a = oracle_expand_side(d.rep(), &basis).unwrap();
            let b = oracle_expand_side(&d.rep().complement(), &basis).unwrap();
            assert_eq!(a, b, "sides disagree for {d} at n={n}");
        }
    }

    // relabeling equivariance under 50 seeded permutations for n=6..8
    for n in 6..=8 {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ n as u64);
        let order = CyclicOrder::standard(n).unwrap();
        let basis = nonadjacent_basis(&order).unwrap();
        let divisors = enumerate_divisors(n).unwrap();
        for _ in 0..50 {
            let sigma = shuffled_labels(n, &mut rng);
            let mapped_order = order.relabeled(&sigma).unwrap();
            let mapped_basis = nonadjacent_basis(&mapped_order).unwrap();
            for d in &divisors {
                let v = expand(d, &basis).unwrap();
                let w = expand(&d.relabeled(&sigma).unwrap(), &mapped_basis).unwrap();
                for (j, c) in v.terms() {
                    let mapped_j = j.relabeled(&sigma).unwrap();
                    assert_eq!(
                        w.coeff_of(&mapped_j),
                        Some(c),
                        "equivariance fails for {d} under {sigma:?}"
                    );
                }
                assert_eq!(
                    v.terms().count(),
                    w.terms().count(),
                    "term counts differ for {d} under {sigma:?}"
                );
            }
        }
    }
    println!("criterion 10 PASS: coefficient range, complement invariance, duality, equivariance");
}
