use super::*;
use crate::arith::{binomial, multichoose, QMatrix};

fn sig(r0: usize, r1: usize, n: usize) -> AlgebraSignature {
    AlgebraSignature::new(r0, r1, n)
}

fn th(s: AlgebraSignature, r: usize, c: usize) -> SuperPolynomial {
    SuperPolynomial::theta_var(s, r, c).unwrap()
}

fn x(s: AlgebraSignature, r: usize, c: usize) -> SuperPolynomial {
    SuperPolynomial::x_var(s, r, c).unwrap()
}

#[test]
fn theta_normalization() {
    assert_eq!(normalize_theta(&[(2, 1), (1, 1)]), (vec![(1, 1), (2, 1)], -1));
    assert_eq!(normalize_theta(&[(1, 1), (1, 1)]).1, 0);
    assert_eq!(normalize_theta(&[(3, 1), (1, 1), (2, 1)]), (vec![(1, 1), (2, 1), (3, 1)], 1));
    assert_eq!(normalize_theta(&[]), (vec![], 1));
}

#[test]
fn merge_sort_sign_matches_bubble_count() {
    let perms = crate::group::PermGroup::symmetric(5);
    for p in perms.elements() {
        let raw: Vec<(usize, usize)> = p.one_line().iter().map(|&v| (v, 1)).collect();
        let (_, s) = normalize_theta(&raw);
        assert_eq!(s, p.sign());
    }
}

#[test]
fn multiplication_examples() {
    let s = sig(1, 1, 2);
    let x11 = x(s, 1, 1);
    assert_eq!(
        x11.super_mul(&x11).unwrap(),
        SuperPolynomial::term(s, int(1), &[(1, 1, 2)], &[]).unwrap()
    );
    let a = th(s, 1, 1).super_mul(&th(s, 2, 1)).unwrap();
    let b = th(s, 2, 1).super_mul(&th(s, 1, 1)).unwrap();
    assert!(a.add(&b).unwrap().is_zero());
    let f = x11.super_mul(&th(s, 1, 1)).unwrap();
    let g = x(s, 2, 1).super_mul(&th(s, 2, 1)).unwrap();
    assert_eq!(
        f.super_mul(&g).unwrap(),
        SuperPolynomial::term(s, int(1), &[(1, 1, 1), (2, 1, 1)], &[(1, 1), (2, 1)]).unwrap()
    );
    assert!(th(s, 1, 1).super_mul(&th(s, 1, 1)).unwrap().is_zero());
    assert!(matches!(
        x11.super_mul(&x(sig(1, 1, 3), 1, 1)),
        Err(Error::SignatureMismatch(_))
    ));
}

#[test]
fn row_permutations() {
    let s = sig(1, 1, 2);
    let f = th(s, 1, 1).super_mul(&th(s, 2, 1)).unwrap();
    assert_eq!(f.apply_row_permutation(&Permutation::identity(2)).unwrap(), f);
    let swap = Permutation::transposition(2, 1, 2);
    assert_eq!(f.apply_row_permutation(&swap).unwrap(), f.scale(&int(-1)));
    let g = SuperPolynomial::term(s, int(1), &[(1, 1, 2), (2, 1, 1)], &[]).unwrap();
    assert_eq!(
        g.apply_row_permutation(&swap).unwrap(),
        SuperPolynomial::term(s, int(1), &[(2, 1, 2), (1, 1, 1)], &[]).unwrap()
    );
    assert!(g.apply_row_permutation(&Permutation::identity(3)).is_err());
}

#[test]
fn graded_element_action() {
    let s = sig(1, 0, 1);
    let neg = GradedGroupElement::new(QMatrix::from_i64(&[&[-1]]), QMatrix::identity(0)).unwrap();
    let f = SuperPolynomial::term(s, int(1), &[(1, 1, 2)], &[]).unwrap();
    assert_eq!(f.apply_graded_element(&neg, 1).unwrap(), f);
    let cube = SuperPolynomial::term(s, int(1), &[(1, 1, 3)], &[]).unwrap();
    assert_eq!(cube.apply_graded_element(&neg, 1).unwrap(), cube.scale(&int(-1)));

    let s2 = sig(0, 2, 1);
    let swap = GradedGroupElement::new(QMatrix::identity(0), QMatrix::from_i64(&[&[0, 1], &[1, 0]])).unwrap();
    let t = th(s2, 1, 1).super_mul(&th(s2, 1, 2)).unwrap();
    assert_eq!(t.apply_graded_element(&swap, 1).unwrap(), t.scale(&int(-1)));
    assert_eq!(t.apply_graded_element(&GradedGroupElement::identity(0, 2), 1).unwrap(), t);
    assert!(t.apply_graded_element(&neg, 1).is_err());

    // A non-monomial matrix: x ↦ x + y on (r0 = 2).
    let s3 = sig(2, 0, 1);
    let shear = GradedGroupElement::new(QMatrix::from_i64(&[&[1, 0], &[1, 1]]), QMatrix::identity(0)).unwrap();
    let sq = x(s3, 1, 1).super_mul(&x(s3, 1, 1)).unwrap();
    let xy = x(s3, 1, 1).add(&x(s3, 1, 2)).unwrap();
    assert_eq!(sq.apply_graded_element(&shear, 1).unwrap(), xy.super_mul(&xy).unwrap());
}

#[test]
fn wreath_action_is_g_then_sigma() {
    let s = sig(1, 1, 2);
    let neg = GradedGroupElement::new(QMatrix::from_i64(&[&[-1]]), QMatrix::from_i64(&[&[1]])).unwrap();
    let w = WreathElement::new(
        Permutation::transposition(2, 1, 2),
        vec![neg, GradedGroupElement::identity(1, 1)],
    )
    .unwrap();
    // x_{1,1} θ_{2,1} ↦ (−x_{2,1}) θ_{1,1}.
    let f = x(s, 1, 1).super_mul(&th(s, 2, 1)).unwrap();
    let expected = x(s, 2, 1).super_mul(&th(s, 1, 1)).unwrap().scale(&int(-1));
    assert_eq!(f.apply_wreath(&w).unwrap(), expected);
}

#[test]
fn basis_examples() {
    assert_eq!(bidegree_basis(sig(1, 1, 1), 0, 0), vec![SuperMonomial::one()]);
    let top = bidegree_basis(sig(1, 2, 1), 0, 2);
    assert_eq!(top.len(), 1);
    assert_eq!(top[0].theta(), &[(1, 1), (1, 2)]);
    let quad = bidegree_basis(sig(2, 0, 1), 2, 0);
    let xs: Vec<_> = quad.iter().map(|m| m.x().to_vec()).collect();
    assert_eq!(xs, vec![vec![(1, 1, 2)], vec![(1, 1, 1), (1, 2, 1)], vec![(1, 2, 2)]]);
    for (r0, r1, n) in [(1, 1, 2), (2, 1, 2), (0, 3, 1), (3, 2, 1)] {
        let s = sig(r0, r1, n);
        for i in 0..=4u32 {
            for j in 0..=n * r1 {
                let expected = multichoose((n * r0) as u64, i as u64) * binomial((n * r1) as u64, j as u64);
                assert_eq!(bidegree_basis(s, i, j).len().to_string(), expected.to_string());
            }
        }
    }
}

#[test]
fn shifting_and_json() {
    let s = sig(1, 1, 2);
    let f = x(s, 1, 1).super_mul(&th(s, 2, 1)).unwrap().scale(&crate::arith::rat(-3, 2));
    let g = f.shift_rows(2, 4).unwrap();
    assert_eq!(g.signature(), sig(1, 1, 4));
    assert_eq!(g.max_row(), 4);
    assert!(f.shift_rows(1, 2).is_err());
    let v = f.to_json();
    assert_eq!(
        v.to_string(),
        r#"{"sig":{"r0":1,"r1":1,"n":2},"terms":[{"x":[[1,1,1]],"theta":[[2,1]],"c":"-3/2"}]}"#
    );
    assert_eq!(SuperPolynomial::from_json(&v).unwrap(), f);
    // θ lists in the input are normalized with sign.
    let swapped = serde_json::json!({"sig":{"r0":0,"r1":1,"n":2},"terms":[{"theta":[[2,1],[1,1]],"c":"1"}]});
    let p = SuperPolynomial::from_json(&swapped).unwrap();
    assert_eq!(p.terms().next().unwrap().1, &int(-1));
}

#[test]
fn independent_subfamily() {
    let s = sig(1, 0, 2);
    let a = x(s, 1, 1);
    let b = x(s, 2, 1);
    let ab = a.add(&b).unwrap();
    assert_eq!(independent_subset(&[a.clone(), a.scale(&int(2)), ab, b]), vec![0, 2]);
    assert_eq!(span_rank(&[SuperPolynomial::zero(s)]), 0);
}
