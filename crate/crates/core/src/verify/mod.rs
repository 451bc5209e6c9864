//! Seeded verification batteries. Every check records its suite, a topic,
//! a name, a verdict and a small JSON detail; the report is deterministic
//! for a given seed.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::arith::{int, Caps, QMatrix, TrigradedSeries};
use crate::error::{Error, Result};
use crate::fixtures;
use crate::group::{perm_group_of_wreath, CharacterSpec, MatrixGroup, PermGroup};
use crate::molien::{molien_vs_oracle, super_molien, GroupAction};
use crate::shuffle::{
    degree_one_generation_rank, displayed_examples, one_row_monomial, shuffle_product, tower_bases,
    verify_associativity, verify_closure, verify_supercommutation,
};
use crate::superalg::SuperPolynomial;
use crate::symfunc::{eh_alternating_sum, CycleIndexFlavor, SymFuncPoly};
use crate::wreath_series::{
    collated_product_series, collated_sum_series, diagonal_exponents, m_cycle_sides, product_form,
    superspace_product, superspace_qbinomial_sum, verify_block_determinant_lemma, wreath_hilbert_direct,
    wreath_hilbert_plethysm, young_closed_form, CollationSpec,
};
use crate::Flavor;

pub const DEFAULT_SEED: u64 = 42;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Molien,
    Wreath,
    Collate,
    Shuffle,
    Identities,
    All,
}

impl Suite {
    pub const EACH: [Suite; 5] = [Suite::Molien, Suite::Wreath, Suite::Collate, Suite::Shuffle, Suite::Identities];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Molien => "molien",
            Suite::Wreath => "wreath",
            Suite::Collate => "collate",
            Suite::Shuffle => "shuffle",
            Suite::Identities => "identities",
            Suite::All => "all",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        [Suite::All]
            .into_iter()
            .chain(Suite::EACH)
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown suite {s:?}")))
    }

    // Each suite gets its own stream so a suite run alone matches its part
    // of `all`.
    fn rng(self, seed: u64) -> ChaCha8Rng {
        let salt = Suite::EACH.iter().position(|&s| s == self).unwrap_or(0) as u64;
        ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9e37_79b9_7f4a_7c15).wrapping_add(salt))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub suite: &'static str,
    pub topic: &'static str,
    pub name: String,
    pub pass: bool,
    pub detail: Value,
}

impl Check {
    fn new(suite: Suite, topic: &'static str, name: impl Into<String>, pass: bool, detail: Value) -> Self {
        Check {
            suite: suite.name(),
            topic,
            name: name.into(),
            pass,
            detail,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.suite,
            "topic": self.topic,
            "name": self.name,
            "pass": self.pass,
            "detail": self.detail,
        })
    }
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub seed: u64,
    pub suite: Suite,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.pass).count()
    }

    pub fn failed(&self) -> usize {
        self.checks.len() - self.passed()
    }

    pub fn all_pass(&self) -> bool {
        self.failed() == 0
    }

    pub fn topic(&self, topic: &str) -> Vec<&Check> {
        self.checks.iter().filter(|c| c.topic == topic).collect()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "seed": self.seed,
            "suite": self.suite.name(),
            "total": self.checks.len(),
            "passed": self.passed(),
            "failed": self.failed(),
            "all_pass": self.all_pass(),
            "checks": self.checks.iter().map(Check::to_json).collect::<Vec<_>>(),
        })
    }
}

pub fn run_suite(suite: Suite, seed: u64) -> Result<VerifyReport> {
    let suites: Vec<Suite> = if suite == Suite::All { Suite::EACH.to_vec() } else { vec![suite] };
    let mut checks = Vec::new();
    for s in suites {
        let mut rng = s.rng(seed);
        checks.extend(match s {
            Suite::Molien => molien_checks()?,
            Suite::Wreath => wreath_checks(&mut rng)?,
            Suite::Collate => collate_checks()?,
            Suite::Shuffle => shuffle_checks(&mut rng)?,
            Suite::Identities => identity_checks()?,
            Suite::All => unreachable!(),
        });
    }
    Ok(VerifyReport { seed, suite, checks })
}

fn named(name: &str) -> MatrixGroup {
    fixtures::named_group(name).expect("built-in fixture name")
}

pub const MOLIEN_GROUPS: [&str; 13] = [
    "trivial_1_0",
    "trivial_0_1",
    "trivial_1_1",
    "trivial_2_2",
    "trivial_3_2",
    "pm1",
    "s2_even",
    "s2_odd",
    "s2_diag",
    "s3_even",
    "s3_odd",
    "s3_diag",
    "young_2_1",
];

/// Molien series against the Reynolds-rank oracle for `i <= 6`, both
/// characters, plus the `u = 0` and `q = 0` specializations.
pub fn molien_checks() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for name in MOLIEN_GROUPS {
        let g = named(name);
        for (label, spec) in [("trivial", CharacterSpec::Trivial), ("sgn", CharacterSpec::Sgn)] {
            let action = GroupAction::from_matrix_group(&g, &spec)?;
            let report = molien_vs_oracle(&action, 6)?;
            out.push(Check::new(
                Suite::Molien,
                "molien-oracle",
                format!("{name}/{label}"),
                report.is_clean(),
                report.to_json(),
            ));
        }
    }
    for name in ["pm1", "s2_diag", "s3_diag", "trivial_2_2"] {
        let action = GroupAction::from_matrix_group(&named(name), &CharacterSpec::Sgn)?;
        let h = super_molien(&action, 5)?;
        let even = h.at_u_zero() == super_molien(&action.restrict(false)?, 5)?;
        let odd_series = super_molien(&action.restrict(true)?, 0)?;
        let odd = h.at_q_zero().truncate(odd_series.caps()) == odd_series;
        out.push(Check::new(
            Suite::Molien,
            "specialization",
            name,
            even && odd,
            json!({"u_zero": even, "q_zero": odd}),
        ));
    }
    Ok(out)
}

fn wreath_cases() -> Vec<(&'static str, PermGroup, MatrixGroup, usize)> {
    vec![
        ("s2[pm1]", PermGroup::symmetric(2), fixtures::plus_minus_one(), 2),
        ("s3[pm1]", PermGroup::symmetric(3), fixtures::plus_minus_one(), 3),
        ("s2[s2_odd]", PermGroup::symmetric(2), fixtures::symmetric_on_odd(2), 2),
        ("c3[trivial_1_1]", PermGroup::cyclic(3), fixtures::trivial(1, 1), 3),
    ]
}

fn random_matrix<R: Rng>(rng: &mut R, r: usize) -> QMatrix {
    let mut m = QMatrix::zeros(r, r);
    for i in 0..r {
        for j in 0..r {
            m[(i, j)] = int(rng.gen_range(-3..=3));
        }
    }
    m
}

/// Both wreath routes at `Dq = 8`, the block-determinant identity on 50
/// random instances, and the single-cycle identity.
pub fn wreath_checks<R: Rng>(rng: &mut R) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for (name, p, g, n) in wreath_cases() {
        for flavor in Flavor::BOTH {
            let direct = wreath_hilbert_direct(&p, &g, n, flavor, 8)?;
            let plethysm = wreath_hilbert_plethysm(&p, &g, n, flavor, 8)?;
            out.push(Check::new(
                Suite::Wreath,
                "wreath-routes",
                format!("{name}/{}", flavor.name()),
                direct == plethysm,
                json!({"terms": direct.len(), "differences": direct.differences(&plethysm).len()}),
            ));
        }
    }
    for k in 0..50 {
        let r = rng.gen_range(1..=3);
        let m = rng.gen_range(1..=4);
        let blocks: Vec<QMatrix> = (0..m).map(|_| random_matrix(rng, r)).collect();
        out.push(Check::new(
            Suite::Wreath,
            "block-lemma",
            format!("instance {k}"),
            verify_block_determinant_lemma(&blocks)?,
            json!({"r": r, "m": m}),
        ));
    }
    for (name, g, m) in [
        ("pm1", fixtures::plus_minus_one(), 2),
        ("pm1", fixtures::plus_minus_one(), 3),
        ("s2_odd", fixtures::symmetric_on_odd(2), 2),
    ] {
        let (lhs, rhs) = m_cycle_sides(&g, m, 8)?;
        out.push(Check::new(
            Suite::Wreath,
            "m-cycle",
            format!("{name}/m={m}"),
            lhs == rhs,
            json!({"lhs": lhs.to_json()}),
        ));
    }
    Ok(out)
}

/// Collated sum against the product form, `N = 3`, `Dq = 6`.
pub fn collate_checks() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for name in ["trivial_1_1", "pm1", "young_2_1"] {
        let g = named(name);
        for flavor in Flavor::BOTH {
            let spec = CollationSpec {
                du: 3 * g.dims().1 as u32,
                group: g.clone(),
                n_max: 3,
                dq: 6,
                flavor,
            };
            let sum = collated_sum_series(&spec)?;
            let product = collated_product_series(&spec)?;
            out.push(Check::new(
                Suite::Collate,
                "collation",
                format!("{name}/{}", flavor.name()),
                sum == product,
                json!({"caps": spec.caps(), "differences": sum.differences(&product).len()}),
            ));
        }
    }
    Ok(out)
}

pub const SHUFFLE_GROUPS: [&str; 4] = ["trivial_1_1", "trivial_1_0", "trivial_0_1", "pm1"];

fn random_element<R: Rng>(rng: &mut R, basis: &[SuperPolynomial]) -> Result<SuperPolynomial> {
    let mut f = SuperPolynomial::zero(basis[0].signature());
    for _ in 0..rng.gen_range(1..=2) {
        let b = basis.choose(rng).expect("nonempty basis");
        let c = loop {
            let c: i64 = rng.gen_range(-3..=3);
            if c != 0 {
                break c;
            }
        };
        f = f.add(&b.scale(&int(c)))?;
    }
    Ok(f)
}

fn sign_table_cases(r0: usize, r1: usize) -> Result<Vec<(usize, usize, SuperPolynomial, SuperPolynomial)>> {
    let even_theta: Vec<usize> = if r1 >= 2 { vec![1, 2] } else { vec![] };
    let mut out = Vec::new();
    for ja in 0..2 {
        for jb in 0..2 {
            let ta = if ja == 1 { vec![1] } else { even_theta.clone() };
            let tb = if jb == 1 { vec![r1] } else { even_theta.clone() };
            let mut xa = vec![0; r0];
            let mut xb = vec![0; r0];
            xa[0] = 1;
            xb[r0 - 1] += 2;
            out.push((ja, jb, one_row_monomial(r0, r1, &xa, &ta)?, one_row_monomial(r0, r1, &xb, &tb)?));
        }
    }
    Ok(out)
}

/// Closure, seeded associativity, degree-one generation, the sign table and
/// the two worked shuffle examples.
pub fn shuffle_checks<R: Rng>(rng: &mut R) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for name in SHUFFLE_GROUPS {
        let g = named(name);
        for flavor in Flavor::BOTH {
            let label = format!("{name}/{}", flavor.name());
            let bases = tower_bases(&g, flavor, 3, 4)?;

            let (mut pairs, mut bad) = (0usize, 0usize);
            for a in 1..=3 {
                for b in 1..=4 - a {
                    for x in &bases[a] {
                        for y in &bases[b] {
                            if x_degree(x) + x_degree(y) > 4 {
                                continue;
                            }
                            pairs += 1;
                            bad += usize::from(!verify_closure(x, y, &g, flavor)?);
                        }
                    }
                }
            }
            out.push(Check::new(
                Suite::Shuffle,
                "shuffle-closure",
                label.clone(),
                bad == 0 && pairs > 0,
                json!({"pairs": pairs, "failures": bad}),
            ));

            let compositions = [(1, 1, 1), (1, 1, 2), (1, 2, 1), (2, 1, 1)];
            let mut bad = 0usize;
            for _ in 0..30 {
                let &(a, b, c) = compositions.choose(rng).expect("nonempty");
                let x = random_element(rng, &bases[a])?;
                let y = random_element(rng, &bases[b])?;
                let z = random_element(rng, &bases[c])?;
                bad += usize::from(!verify_associativity(&x, &y, &z, flavor.is_signed())?);
            }
            out.push(Check::new(
                Suite::Shuffle,
                "shuffle-associativity",
                label.clone(),
                bad == 0,
                json!({"triples": 30, "failures": bad}),
            ));

            let (mut rows, mut short) = (0usize, Vec::new());
            for n in 1..=3 {
                for i in 0..=4 {
                    for j in 0..=n * g.dims().1 {
                        let (spanned, full) = degree_one_generation_rank(&g, flavor, n, i, j)?;
                        rows += 1;
                        if spanned != full {
                            short.push(json!({"n": n, "i": i, "j": j, "spanned": spanned, "full": full}));
                        }
                    }
                }
            }
            out.push(Check::new(
                Suite::Shuffle,
                "generation",
                label,
                short.is_empty(),
                json!({"bidegrees": rows, "short": short}),
            ));
        }
    }
    for (r0, r1) in [(1, 1), (2, 2)] {
        for (ja, jb, a, b) in sign_table_cases(r0, r1)? {
            for signed in [false, true] {
                let ok = verify_supercommutation(&a, &b, signed)?;
                out.push(Check::new(
                    Suite::Shuffle,
                    "supercommutation",
                    format!("({r0},{r1}) parities {ja}{jb} {}", if signed { "signed" } else { "unsigned" }),
                    ok,
                    json!({"a": a.to_json(), "b": b.to_json()}),
                ));
            }
        }
    }
    for (name, got, expected) in displayed_examples()? {
        out.push(Check::new(
            Suite::Shuffle,
            "shuffle-examples",
            name,
            got == expected,
            json!({"terms": got.len()}),
        ));
    }
    // Commutativity when V is purely even, on sampled pairs.
    let g = fixtures::trivial(2, 0);
    let bases = tower_bases(&g, Flavor::Invariant, 2, 2)?;
    let mut bad = 0usize;
    for x in &bases[1] {
        for y in &bases[2] {
            bad += usize::from(shuffle_product(x, y, false)? != shuffle_product(y, x, false)?);
        }
    }
    out.push(Check::new(
        Suite::Shuffle,
        "commutativity",
        "trivial_2_0",
        bad == 0,
        json!({"failures": bad}),
    ));
    Ok(out)
}

fn x_degree(f: &SuperPolynomial) -> u32 {
    f.terms().map(|(m, _)| m.x_degree()).max().unwrap_or(0)
}

fn one_plus(caps: Caps, e: (u32, u32, u32), c: i64) -> TrigradedSeries {
    let mut s = TrigradedSeries::one(caps);
    s.add_term(e, int(c));
    s
}

/// Young subgroups, superspace, diagonal products, ω, `E·H(-t) = 1`, the
/// Pólya composition and the Koszul Hilbert identity.
pub fn identity_checks() -> Result<Vec<Check>> {
    let mut out = Vec::new();

    let caps = Caps::new(3, 0, 9);
    let explicit = one_plus(caps, (1, 0, 1), 1)
        .pow_int(2)?
        .mul(&one_plus(caps, (1, 0, 0), -1).inv()?)
        .mul(&one_plus(caps, (1, 0, 2), -1).inv()?);
    out.push(Check::new(
        Suite::Identities,
        "young",
        "closed form, two blocks",
        young_closed_form(2, caps)? == explicit,
        json!({}),
    ));
    for alpha in [[2usize, 1], [1, 2]] {
        let spec = CollationSpec {
            group: fixtures::young_on_odd(&alpha)?,
            n_max: 3,
            dq: 0,
            du: 9,
            flavor: Flavor::Invariant,
        };
        out.push(Check::new(
            Suite::Identities,
            "young",
            format!("alpha = {alpha:?}"),
            collated_sum_series(&spec)? == explicit,
            json!({"caps": caps}),
        ));
    }

    let caps = Caps::new(3, 8, 3);
    for flavor in Flavor::BOTH {
        let direct = collated_sum_series(&CollationSpec {
            group: fixtures::trivial(1, 1),
            n_max: 3,
            dq: 8,
            du: 3,
            flavor,
        })?;
        let product = superspace_product(flavor, caps)?;
        let qbinomial = superspace_qbinomial_sum(flavor, caps)?;
        out.push(Check::new(
            Suite::Identities,
            "superspace",
            format!("{} product form", flavor.name()),
            direct == product,
            json!({"caps": caps}),
        ));
        out.push(Check::new(
            Suite::Identities,
            "superspace",
            format!("{} q-binomial form", flavor.name()),
            direct == qbinomial,
            json!({"caps": caps}),
        ));
        for n in [2, 3] {
            out.push(Check::new(
                Suite::Identities,
                "superspace",
                format!("{} n = {n} coefficient", flavor.name()),
                direct.t_slice(n) == qbinomial.t_slice(n),
                json!({"series": direct.t_slice(n).to_json()}),
            ));
        }
    }

    for (r0, r1) in [(1u32, 1u32), (2, 1)] {
        for flavor in Flavor::BOTH {
            let spec = CollationSpec {
                group: fixtures::trivial(r0 as usize, r1 as usize),
                n_max: 3,
                dq: 4,
                du: 3 * r1,
                flavor,
            };
            let formula = product_form(&diagonal_exponents(r0, r1, 4), flavor, spec.caps())?;
            out.push(Check::new(
                Suite::Identities,
                "diagonal",
                format!("trivial_{r0}_{r1}/{}", flavor.name()),
                collated_sum_series(&spec)? == formula,
                json!({"caps": spec.caps()}),
            ));
        }
    }

    for name in ["trivial3", "s2", "s3", "s4", "c3", "c4"] {
        let p = fixtures::named_perm_group(name).expect("built-in fixture name");
        let plain = SymFuncPoly::cycle_index(&p, CycleIndexFlavor::Plain);
        let sgn = SymFuncPoly::cycle_index(&p, CycleIndexFlavor::Sgn);
        out.push(Check::new(
            Suite::Identities,
            "omega",
            name,
            plain.omega() == sgn,
            json!({"cycle_index": plain.to_json()}),
        ));
    }

    for n in 1..=5 {
        out.push(Check::new(
            Suite::Identities,
            "eh",
            format!("n = {n}"),
            eh_alternating_sum(n).is_zero(),
            json!({}),
        ));
    }

    for (pn, gn, order) in [(2usize, 2usize, 8usize), (2, 3, 72), (3, 2, 48)] {
        let (p, g) = (PermGroup::symmetric(pn), PermGroup::symmetric(gn));
        let w = perm_group_of_wreath(&p, &g, pn)?;
        let zp = SymFuncPoly::cycle_index(&p, CycleIndexFlavor::Plain);
        let zg = SymFuncPoly::cycle_index(&g, CycleIndexFlavor::Plain);
        let zw = SymFuncPoly::cycle_index(&w, CycleIndexFlavor::Plain);
        out.push(Check::new(
            Suite::Identities,
            "polya",
            format!("s{pn}[s{gn}]"),
            w.order() == order && zw == zp.plethystic_compose(&zg),
            json!({"order": w.order()}),
        ));
    }

    let caps = Caps::new(12, 0, 0);
    let mut bad = Vec::new();
    for r0 in 0..=4i64 {
        for r1 in 0..=4i64 {
            let (plus, minus) = (one_plus(caps, (1, 0, 0), 1), one_plus(caps, (1, 0, 0), -1));
            let sym = plus.pow_int(r0)?.mul(&minus.pow_int(-r1)?);
            // The dual series with t ↦ -t.
            let dual = minus.pow_int(r1)?.mul(&plus.pow_int(-r0)?);
            if sym.mul(&dual) != TrigradedSeries::one(caps) {
                bad.push(json!([r0, r1]));
            }
        }
    }
    out.push(Check::new(
        Suite::Identities,
        "koszul",
        "r0, r1 <= 4",
        bad.is_empty(),
        json!({"failures": bad}),
    ));
    Ok(out)
}
