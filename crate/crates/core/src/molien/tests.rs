use super::*;
use crate::arith::{binomial, multichoose};
use crate::fixtures::*;

fn action(g: &MatrixGroup) -> GroupAction {
    GroupAction::from_matrix_group(g, &CharacterSpec::Trivial).unwrap()
}

#[test]
fn trivial_group_series() {
    let h = super_molien(&action(&trivial(1, 1)), 5).unwrap();
    for i in 0..=5 {
        assert_eq!(h.coeff(0, i, 0), int(1));
        assert_eq!(h.coeff(0, i, 1), int(1));
    }
    assert_eq!(h.caps(), Caps::bigraded(5, 1));
}

#[test]
fn scalar_minus_one() {
    let a = action(&plus_minus_one());
    let h = super_molien(&a, 7).unwrap();
    for i in 0..=7u32 {
        assert_eq!(h.coeff(0, i, 0), int(if i % 2 == 0 { 1 } else { 0 }));
    }
    assert_eq!(invariant_dimension_bruteforce(&a, 3, 0).unwrap(), 0);
    assert_eq!(invariant_dimension_bruteforce(&a, 4, 0).unwrap(), 1);
}

#[test]
fn s2_on_two_thetas() {
    let a = action(&symmetric_on_odd(2));
    let h = super_molien(&a, 4).unwrap();
    let expected = TrigradedSeries::from_terms(Caps::bigraded(4, 2), [((0, 0, 0), int(1)), ((0, 0, 1), int(1))]);
    assert_eq!(h, expected);
    assert_eq!(invariant_dimension_bruteforce(&a, 0, 1).unwrap(), 1);
    assert_eq!(invariant_dimension_bruteforce(&a, 0, 2).unwrap(), 0);
}

#[test]
fn oracle_on_trivial_is_full_dimension() {
    for (r0, r1) in [(1, 0), (0, 2), (2, 1)] {
        let a = action(&trivial(r0, r1));
        for i in 0..=3u32 {
            for j in 0..=r1 {
                let full = multichoose(r0 as u64, i as u64) * binomial(r1 as u64, j as u64);
                assert_eq!(invariant_dimension_bruteforce(&a, i, j).unwrap().to_string(), full.to_string());
            }
        }
    }
}

#[test]
fn basis_limit() {
    let a = action(&trivial(3, 0));
    assert_eq!(
        invariant_dimension_with_limit(&a, 4, 0, 10),
        Err(Error::BasisTooLarge { size: 15, limit: 10 })
    );
}

#[test]
fn molien_agrees_with_oracle() {
    for g in [trivial(1, 1), plus_minus_one(), symmetric_on_odd(2), symmetric_diagonal(2), young_on_odd(&[2, 1]).unwrap()] {
        for spec in [CharacterSpec::Trivial, CharacterSpec::Sgn] {
            let a = GroupAction::from_matrix_group(&g, &spec).unwrap();
            let report = molien_vs_oracle(&a, 4).unwrap();
            assert!(report.is_clean(), "{:?}", report);
        }
    }
}

#[test]
fn wreath_action_agrees_with_oracle() {
    let p = PermGroup::symmetric(2);
    for signed in [false, true] {
        let a = GroupAction::wreath(&p, &trivial(1, 1), 2, signed).unwrap();
        assert!(molien_vs_oracle(&a, 3).unwrap().is_clean());
    }
}

#[test]
fn report_json() {
    let r = MolienReport {
        agreements: 3,
        mismatches: vec![Mismatch { i: 1, j: 0, molien: int(2), oracle: 1 }],
    };
    assert_eq!(
        r.to_json().to_string(),
        r#"{"agreements":3,"mismatches":[{"i":1,"j":0,"molien":"2","oracle":1}]}"#
    );
}

#[test]
fn restriction_specializes() {
    let a = GroupAction::from_matrix_group(&symmetric_diagonal(2), &CharacterSpec::Sgn).unwrap();
    let h = super_molien(&a, 5).unwrap();
    assert_eq!(h.at_u_zero(), super_molien(&a.restrict(false).unwrap(), 5).unwrap());
    let odd = super_molien(&a.restrict(true).unwrap(), 0).unwrap();
    assert_eq!(h.at_q_zero().truncate(odd.caps()), odd);
}
