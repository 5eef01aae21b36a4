#![allow(clippy::needless_range_loop)]

mod common;

use std::f64::consts::{FRAC_PI_2, PI};

use cfsm::format::display;
use cfsm::{
    column_min, cross_product, fourier_identify, maxmin_decision, score_vector, ComplexFuzzyNumber,
    FuzzySoftSetTable, MagnitudeMatrix,
};
use common::*;

const PAPER_TOL: f64 = 5e-3;

#[test]
fn fuzzy_sum_amplitudes_and_consistent_phases() {
    let sum = complex_a().fuzzy_add(&complex_b()).unwrap();
    for i in 0..3 {
        for j in 0..3 {
            assert_eq!(sum.get(i, j).amplitude(), PRINTED_SUM[i][j].0, "amplitude ({i},{j})");
        }
    }
    for &(i, j) in &SUM_PHASE_CONSISTENT {
        assert!((sum.get(i, j).phase() - PRINTED_SUM[i][j].1).abs() < 1e-12, "phase ({i},{j})");
    }
    // max-phase rule at the two entries where the printed phases disagree
    assert_eq!(sum.get(0, 1).phase(), PI);
    assert_eq!(sum.get(1, 1).phase(), PI);
}

#[test]
fn maxmin_product_amplitudes_and_consistent_phases() {
    let p = complex_a().maxmin_product(&complex_b()).unwrap();
    for i in 0..3 {
        for j in 0..3 {
            assert_eq!(p.get(i, j).amplitude(), PRINTED_PRODUCT[i][j].0, "amplitude ({i},{j})");
        }
    }
    for &(i, j) in &PRODUCT_PHASE_CONSISTENT {
        assert!((p.get(i, j).phase() - PRINTED_PRODUCT[i][j].1).abs() < 1e-12, "phase ({i},{j})");
    }
}

#[test]
fn trace_of_a() {
    let t = complex_a().trace().unwrap();
    assert_eq!(t.amplitude(), 0.6);
    assert_eq!(t.phase(), PI);
}

#[test]
fn sum_with_itself_and_with_zero() {
    let a = complex_a();
    assert_eq!(a.fuzzy_add(&a).unwrap(), a);
    let zero = cfsm::ComplexFuzzyMatrix::new(3, 3, vec![ComplexFuzzyNumber::ZERO; 9]).unwrap();
    assert_eq!(a.fuzzy_add(&zero).unwrap().amplitudes(), a.amplitudes());
}

#[test]
fn magnitude_examples() {
    for (amp, phase) in [(0.1, FRAC_PI_2), (0.2, PI / 6.0), (0.3, 2.0 * PI), (0.4, PI / 4.0), (0.5, 0.0), (0.6, 0.5)] {
        let x = ComplexFuzzyNumber::new(amp, phase).unwrap();
        assert_eq!(x.abs(), amp);
        assert!((x.eval().norm() - amp).abs() < PAPER_TOL);
    }
}

#[test]
fn attractiveness_matrix_from_magnitudes() {
    // e1, e2 ∈ A give the first two columns; e3 ∉ A is all zero
    let mut t = FuzzySoftSetTable::new(["h1", "h2", "h3"], ["e1", "e2", "e3"]).unwrap();
    let amps = [[0.1, 0.2, 0.3], [0.4, 0.5, 0.6]];
    for (param, col) in ["e1", "e2"].iter().zip(amps) {
        for (house, a) in ["h1", "h2", "h3"].iter().zip(col) {
            t.set(house, param, a).unwrap();
        }
    }
    assert_eq!(
        t.to_matrix().to_rows(),
        vec![vec![0.1, 0.4, 0.0], vec![0.2, 0.5, 0.0], vec![0.3, 0.6, 0.0]]
    );
}

#[test]
fn set_operations_on_four_by_four() {
    let (a, b) = (soft_a(), soft_b());
    let rows = |m: [[f64; 4]; 4]| m.iter().map(|r| r.to_vec()).collect::<Vec<_>>();
    assert!(max_abs_diff(&a.complement().to_rows(), &rows(PRINTED_COMPLEMENT)) < 1e-12);
    assert_eq!(a.union(&b).unwrap().to_rows(), rows(PRINTED_UNION));
    assert_eq!(a.intersection(&b).unwrap().to_rows(), rows(PRINTED_INTERSECTION));
    assert!(max_abs_diff(&a.complement().complement().to_rows(), &a.to_rows()) < 1e-12);
}

#[test]
fn fuzzy_soft_subset_of_houses() {
    let params = ["blackish", "reddish", "green"];
    let houses = ["h1", "h2", "h3", "h4", "h5"];
    let f = [[0.4, 0.6, 0.5, 0.8, 1.0], [1.0, 0.5, 0.5, 1.0, 0.7], [0.5, 0.6, 0.8, 0.8, 0.7]];
    // G's h5 degrees under reddish and green are printed as "8" and "7"; read as 0.8 and 0.7.
    let g = [[0.4, 0.7, 0.6, 0.9, 1.0], [1.0, 0.6, 0.5, 1.0, 0.8], [0.6, 0.6, 0.9, 0.8, 0.7]];
    let table = |degrees: [[f64; 5]; 3]| {
        let mut t = FuzzySoftSetTable::new(houses, params).unwrap();
        for (p, col) in params.iter().zip(degrees) {
            for (h, d) in houses.iter().zip(col) {
                t.set(h, p, d).unwrap();
            }
        }
        t.to_matrix()
    };
    let (fm, gm) = (table(f), table(g));
    assert!(fm.is_submatrix(&gm).unwrap());
    assert!(fm.is_proper_submatrix(&gm).unwrap());
    assert!(!gm.is_submatrix(&fm).unwrap());
}

#[test]
fn decision_product_against_recomputation() {
    let p = decision_a().usual_product(&decision_b()).unwrap();
    let oracle = oracle_usual_product(&decision_a().to_rows(), &decision_b().to_rows());
    assert!(max_abs_diff(&p.to_rows(), &oracle) < 1e-12);
    // Recomputed dot products; the printed table differs at (1,3), (3,4) and (4,4).
    let expected = [
        [0.00, 0.23, 0.10, 0.13],
        [0.00, 0.17, 0.07, 0.17],
        [0.00, 0.22, 0.09, 0.16],
        [0.00, 0.19, 0.10, 0.17],
    ];
    for i in 0..4 {
        for j in 0..4 {
            assert!((p.get(i, j) - expected[i][j]).abs() < 1e-12, "({i},{j})");
        }
    }
    assert_eq!(display(p.get(0, 2)), "0.10");
}

#[test]
fn decision_column_and_optimum_set() {
    let p = decision_a().usual_product(&decision_b()).unwrap();
    let d = column_min(&p);
    let shown: Vec<String> = d.iter().map(|&v| display(v)).collect();
    assert_eq!(shown, ["0.00", "0.17", "0.07", "0.13"]);
    assert_eq!(d, oracle_column_min(&p.to_rows()));

    let opt = maxmin_decision(&decision_a(), &decision_b(), &SIGNAL_LABELS).unwrap();
    let members: Vec<(String, String)> = opt.memberships.iter().map(|(u, v)| (u.clone(), display(*v))).collect();
    assert_eq!(
        members,
        vec![("ν2".into(), "0.17".into()), ("ν3".into(), "0.07".into()), ("ν4".into(), "0.13".into())]
    );
    assert_eq!(opt.winner, "ν2");
    assert!(!opt.tie);
}

#[test]
fn fourier_example_scores_and_winner() {
    let r = reference_signal();
    let v1 = score_vector(&candidate_x1(), &r).unwrap();
    let v2 = score_vector(&candidate_x2(), &r).unwrap();
    assert!((v1.scores[0] - 0.175).abs() < 1e-12 && (v1.scores[1] - 0.15).abs() < 1e-12);
    assert!((v2.scores[0] - 0.225).abs() < 1e-12 && (v2.scores[1] - 0.15).abs() < 1e-12);
    let shown: Vec<String> = v1.scores.iter().chain(&v2.scores).map(|&s| display(s)).collect();
    assert_eq!(shown, ["0.18", "0.15", "0.23", "0.15"]);
    let id = fourier_identify(&[candidate_x1(), candidate_x2()], &r).unwrap();
    assert_eq!(id.winner, "x2");
    assert_eq!(id.best, v2.best);
}

#[test]
fn second_sample_cross_terms_evaluate_as_printed() {
    // 1/4 [0.6(1) + 0.3(1) + 0.5(1) + 0.3(−1)]
    let cp = cross_product(&candidate_x1().samples()[1], &reference_signal().samples()[1]).unwrap();
    let mut values: Vec<f64> = cp.terms.iter().map(|t| t.value.eval().re).collect();
    values.sort_by(f64::total_cmp);
    let expected = [-0.3, 0.3, 0.5, 0.6];
    for (v, e) in values.iter().zip(expected) {
        assert!((v - e).abs() < 1e-12);
    }
    let sum: f64 = cp.terms.iter().map(|t| t.value.eval().re).sum::<f64>() * cp.scale;
    assert!((sum - 0.275).abs() < 1e-12);
}

#[test]
fn and_product_index_rule_matches_one_based_formula() {
    let a = MagnitudeMatrix::from_rows(vec![vec![0.3, 0.7, 0.1], vec![0.9, 0.0, 0.5]]).unwrap();
    let b = MagnitudeMatrix::from_rows(vec![vec![0.5, 0.2, 0.8], vec![0.4, 0.6, 1.0]]).unwrap();
    let (ra, rb) = (a.to_rows(), b.to_rows());
    assert_eq!(a.and_product(&b).unwrap().to_rows(), oracle_block_product(&ra, &rb, f64::min));
    assert_eq!(a.or_product(&b).unwrap().to_rows(), oracle_block_product(&ra, &rb, f64::max));
    assert_eq!(a.and_not_product(&b).unwrap().to_rows(), oracle_block_product(&ra, &rb, |x, y| x.min(1.0 - y)));
    assert_eq!(a.or_not_product(&b).unwrap().to_rows(), oracle_block_product(&ra, &rb, |x, y| x.max(1.0 - y)));
}
