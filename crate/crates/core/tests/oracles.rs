use num_traits::One;

use superinv::arith::{int, rat, Rational};
use superinv::fixtures;
use superinv::group::{build_wreath, CharacterSpec, PermGroup, DEFAULT_WREATH_CAP};
use superinv::molien::{super_molien, GroupAction};
use superinv::symfunc::{CycleIndexFlavor, Partition, SymFuncPoly};

fn partitions_with_at_most(m: u32, parts: u32, max_part: u32) -> i64 {
    if m == 0 {
        return 1;
    }
    if parts == 0 {
        return 0;
    }
    (1..=m.min(max_part)).map(|k| partitions_with_at_most(m - k, parts - 1, k)).sum()
}

fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(n: u32, max: u32, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(acc.clone());
            return;
        }
        for k in (1..=n.min(max)).rev() {
            acc.push(k);
            go(n - k, k, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

#[test]
fn symmetric_polynomials_count_partitions() {
    // Invariants of S_n on commuting variables have one basis element per
    // partition with at most n parts.
    for n in 1..=4usize {
        let h = super_molien(&GroupAction::from_matrix_group(&fixtures::symmetric_on_even(n), &CharacterSpec::Trivial).unwrap(), 8).unwrap();
        for i in 0..=8 {
            assert_eq!(h.coeff(0, i, 0), int(partitions_with_at_most(i, n as u32, i)), "n={n} i={i}");
        }
    }
}

#[test]
fn exterior_invariants_of_symmetric_group() {
    // ∧^j(triv ⊕ std) = ∧^j std ⊕ ∧^{j-1} std with ∧^{n-1} std = sgn, so
    // invariants sit in degrees 0, 1 and the sign part in degrees n-1, n.
    for n in 2..=4usize {
        let g = fixtures::symmetric_on_odd(n);
        let inv = super_molien(&GroupAction::from_matrix_group(&g, &CharacterSpec::Trivial).unwrap(), 0).unwrap();
        let sgn = super_molien(&GroupAction::from_matrix_group(&g, &CharacterSpec::Sgn).unwrap(), 0).unwrap();
        for j in 0..=n as u32 {
            assert_eq!(inv.coeff(0, 0, j), int(i64::from(j <= 1)), "n={n} j={j}");
            assert_eq!(sgn.coeff(0, 0, j), int(i64::from(j + 1 >= n as u32)), "n={n} j={j}");
        }
    }
}

#[test]
fn cycle_index_coefficients_are_inverse_centralizer_orders() {
    for n in 1..=6u32 {
        let z = SymFuncPoly::cycle_index(&PermGroup::symmetric(n as usize), CycleIndexFlavor::Plain);
        for lambda in partitions(n) {
            let mut zl: u64 = 1;
            for i in 1..=n {
                let m = lambda.iter().filter(|&&p| p == i).count() as u64;
                zl *= (i as u64).pow(m as u32) * factorial(m);
            }
            assert_eq!(z.coeff(&Partition::new(lambda.clone())), rat(1, zl as i64), "{lambda:?}");
        }
    }
}

#[test]
fn cycle_index_sums_to_one() {
    for p in [PermGroup::symmetric(4), PermGroup::cyclic(5), PermGroup::trivial(3)] {
        let total: Rational = SymFuncPoly::cycle_index(&p, CycleIndexFlavor::Plain).terms().map(|(_, c)| c.clone()).sum();
        assert!(total.is_one());
        // Signs cancel for a group containing an odd permutation.
        let signed: Rational = SymFuncPoly::cycle_index(&p, CycleIndexFlavor::Sgn).terms().map(|(_, c)| c.clone()).sum();
        let has_odd = p.elements().iter().any(|e| e.sign() == -1);
        assert_eq!(signed, if has_odd { int(0) } else { int(1) });
    }
}

#[test]
fn wreath_orders() {
    for (n, g) in [(2usize, fixtures::plus_minus_one()), (3, fixtures::plus_minus_one()), (3, fixtures::symmetric_on_odd(2))] {
        let els = build_wreath(&PermGroup::symmetric(n), &g, n, DEFAULT_WREATH_CAP).unwrap();
        assert_eq!(els.len() as u64, factorial(n as u64) * (g.order() as u64).pow(n as u32));
    }
}
