use super::*;
use crate::fixtures;

fn sig(r0: usize, r1: usize, n: usize) -> AlgebraSignature {
    AlgebraSignature::new(r0, r1, n)
}

#[test]
fn displayed_examples_match_term_for_term() {
    for (name, got, expected) in displayed_examples().unwrap() {
        assert_eq!(got, expected, "{name}");
        assert_eq!(got.len(), 6, "{name}");
    }
}

#[test]
fn one_by_one_shuffle_of_x_and_theta() {
    // x1 ⧢ θ1 = x1 θ2 + x2 θ1, and signed gives x1 θ2 - x2 θ1.
    let s = sig(1, 1, 1);
    let x = SuperPolynomial::x_var(s, 1, 1).unwrap();
    let t = SuperPolynomial::theta_var(s, 1, 1).unwrap();
    let s2 = s.with_rows(2);
    let a = SuperPolynomial::term(s2, int(1), &[(1, 1, 1)], &[(2, 1)]).unwrap();
    let b = SuperPolynomial::term(s2, int(1), &[(2, 1, 1)], &[(1, 1)]).unwrap();
    assert_eq!(shuffle_product(&x, &t, false).unwrap(), a.add(&b).unwrap());
    assert_eq!(shuffle_product(&x, &t, true).unwrap(), a.sub(&b).unwrap());
}

#[test]
fn theta_shuffle_theta_vanishes_unsigned() {
    // θ1 ⧢ θ1 = θ1θ2 + θ2θ1 = 0; the signed one is 2 θ1θ2.
    let s = sig(0, 1, 1);
    let t = SuperPolynomial::theta_var(s, 1, 1).unwrap();
    assert!(shuffle_product(&t, &t, false).unwrap().is_zero());
    let two = SuperPolynomial::term(s.with_rows(2), int(2), &[], &[(1, 1), (2, 1)]).unwrap();
    assert_eq!(shuffle_product(&t, &t, true).unwrap(), two);
}

#[test]
fn unit_is_neutral() {
    let s = sig(1, 1, 2);
    let f = SuperPolynomial::term(s, int(3), &[(1, 1, 2)], &[(2, 1)]).unwrap();
    let one = SuperPolynomial::one(s.with_rows(0));
    for signed in [false, true] {
        assert_eq!(shuffle_product(&one, &f, signed).unwrap(), f);
        assert_eq!(shuffle_product(&f, &one, signed).unwrap(), f);
    }
}

#[test]
fn signature_mismatch_is_rejected() {
    let a = SuperPolynomial::one(sig(1, 1, 1));
    let b = SuperPolynomial::one(sig(1, 0, 1));
    assert!(matches!(shuffle_product(&a, &b, false), Err(Error::SignatureMismatch(_))));
}

#[test]
fn supercommutation_sign_table() {
    let cases = [
        (one_row_monomial(2, 2, &[1, 0], &[]).unwrap(), one_row_monomial(2, 2, &[0, 2], &[]).unwrap()),
        (one_row_monomial(2, 2, &[1, 0], &[1]).unwrap(), one_row_monomial(2, 2, &[0, 1], &[]).unwrap()),
        (one_row_monomial(2, 2, &[0, 0], &[1]).unwrap(), one_row_monomial(2, 2, &[1, 0], &[2]).unwrap()),
        (one_row_monomial(2, 2, &[2, 0], &[1, 2]).unwrap(), one_row_monomial(2, 2, &[0, 0], &[2]).unwrap()),
    ];
    for (a, b) in &cases {
        for signed in [false, true] {
            assert!(verify_supercommutation(a, b, signed).unwrap());
        }
    }
}

#[test]
fn supercommutation_needs_homogeneous_parity() {
    let s = sig(1, 1, 1);
    let mixed = SuperPolynomial::x_var(s, 1, 1)
        .unwrap()
        .add(&SuperPolynomial::theta_var(s, 1, 1).unwrap())
        .unwrap();
    let x = SuperPolynomial::x_var(s, 1, 1).unwrap();
    assert_eq!(verify_supercommutation(&mixed, &x, false), Err(Error::NotHomogeneous));
}

#[test]
fn three_block_route_agrees_with_iterated() {
    let s1 = sig(1, 1, 1);
    let a = one_row_monomial(1, 1, &[2], &[1]).unwrap();
    let b = SuperPolynomial::x_var(s1, 1, 1).unwrap();
    let c = SuperPolynomial::term(s1.with_rows(2), int(1), &[(1, 1, 1)], &[(2, 1)]).unwrap();
    for signed in [false, true] {
        assert!(verify_associativity(&a, &b, &c, signed).unwrap());
    }
}

#[test]
fn invariant_basis_sizes_match_oracle() {
    let g = fixtures::plus_minus_one();
    for flavor in Flavor::BOTH {
        let action = tower_action(&g, 2, flavor).unwrap();
        for i in 0..=4 {
            let b = invariant_basis(&action, i, 0).unwrap();
            assert_eq!(b.basis.len(), invariant_dimension_bruteforce(&action, i, 0).unwrap());
            for f in &b.basis {
                assert!(is_tower_invariant(f, &g, flavor).unwrap());
            }
        }
    }
}

#[test]
fn reynolds_projection_is_idempotent() {
    let g = fixtures::trivial(1, 1);
    let action = tower_action(&g, 2, Flavor::Sgn).unwrap();
    let f = SuperPolynomial::term(sig(1, 1, 2), int(1), &[(1, 1, 2)], &[(2, 1)]).unwrap();
    let p = reynolds_project(&f, &action).unwrap();
    assert!(!p.is_zero());
    assert_eq!(reynolds_project(&p, &action).unwrap(), p);
}

#[test]
fn closure_on_small_bases() {
    let g = fixtures::plus_minus_one();
    for flavor in Flavor::BOTH {
        let bases = tower_bases(&g, flavor, 2, 2).unwrap();
        for x in &bases[1] {
            for y in &bases[1] {
                assert!(verify_closure(x, y, &g, flavor).unwrap());
            }
        }
    }
}

#[test]
fn closure_rejects_non_invariant_input() {
    let g = fixtures::plus_minus_one();
    let x = SuperPolynomial::x_var(sig(1, 0, 1), 1, 1).unwrap();
    assert!(verify_closure(&x, &x, &g, Flavor::Invariant).is_err());
}

#[test]
fn degree_one_generation_small() {
    let g = fixtures::trivial(1, 1);
    for flavor in Flavor::BOTH {
        for (n, i, j) in [(2, 2, 1), (2, 3, 2), (3, 3, 1)] {
            let (spanned, full) = degree_one_generation_rank(&g, flavor, n, i, j).unwrap();
            assert_eq!(spanned, full, "{flavor:?} n={n} i={i} j={j}");
        }
    }
}

#[test]
fn isomorphism_check_for_pm1() {
    let g = fixtures::plus_minus_one();
    for flavor in Flavor::BOTH {
        let report = isomorphism_check(&g, flavor, 3, 3).unwrap();
        assert!(report.passed(), "{flavor:?}: {report:?}");
        assert!(report.closure_pairs > 0 && report.associativity_triples > 0);
    }
}

#[test]
fn generation_rank_examples() {
    // 1 ⧢ θ = θ1 + θ2 spans the invariants of bidegree (0, 1).
    let g = fixtures::trivial(0, 1);
    assert_eq!(degree_one_generation_rank(&g, Flavor::Invariant, 2, 0, 1).unwrap(), (1, 1));
    // x ⧢ x and x^2 ⧢ 1 span x1^2 + x2^2 and x1 x2.
    let g = fixtures::trivial(1, 0);
    assert_eq!(degree_one_generation_rank(&g, Flavor::Invariant, 2, 2, 0).unwrap(), (2, 2));
    assert_eq!(degree_one_generation_rank(&g, Flavor::Invariant, 1, 3, 0).unwrap(), (1, 1));
}

#[test]
fn closure_examples() {
    let g = fixtures::trivial(0, 1);
    let s2 = sig(0, 1, 2);
    let t = SuperPolynomial::theta_var(sig(0, 1, 1), 1, 1).unwrap();
    let t1 = SuperPolynomial::theta_var(s2, 1, 1).unwrap();
    let t2 = SuperPolynomial::theta_var(s2, 2, 1).unwrap();
    assert!(verify_closure(&t1.add(&t2).unwrap(), &t, &g, Flavor::Invariant).unwrap());
    assert!(verify_closure(&t1.sub(&t2).unwrap(), &t, &g, Flavor::Sgn).unwrap());
    let one = SuperPolynomial::one(sig(0, 1, 1));
    assert!(verify_closure(&one, &one, &g, Flavor::Invariant).unwrap());
}

#[test]
fn isomorphism_check_examples() {
    for g in [fixtures::trivial(1, 0), fixtures::trivial(0, 1)] {
        let report = isomorphism_check(&g, Flavor::Invariant, 3, 3).unwrap();
        assert!(report.passed(), "{report:?}");
    }
}
