use super::matrix_group::{GradedGroupElement, MatrixGroup};
use super::perm::{PermGroup, Permutation};
use crate::arith::QMatrix;
use crate::error::{Error, Result};

/// An element `(sigma, (g_1, ..., g_n))` of `P[G]`. It sends
/// `(v_1, ..., v_n)` to the tuple whose slot `sigma(i)` holds `g_i v_i`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct WreathElement {
    pub sigma: Permutation,
    pub gs: Vec<GradedGroupElement>,
}

impl WreathElement {
    pub fn new(sigma: Permutation, gs: Vec<GradedGroupElement>) -> Result<Self> {
        if sigma.degree() != gs.len() {
            return Err(Error::DegreeMismatch {
                expected: sigma.degree(),
                got: gs.len(),
            });
        }
        if let Some(first) = gs.first() {
            if gs.iter().any(|g| g.dims() != first.dims()) {
                return Err(Error::DimensionMismatch(
                    "wreath components of different dimensions".into(),
                ));
            }
        }
        Ok(WreathElement { sigma, gs })
    }

    pub fn identity(n: usize, r0: usize, r1: usize) -> Self {
        WreathElement {
            sigma: Permutation::identity(n),
            gs: vec![GradedGroupElement::identity(r0, r1); n],
        }
    }

    pub fn n(&self) -> usize {
        self.sigma.degree()
    }

    /// `self · other`: `(σ, g)(τ, h) = (στ, k)` with `k_i = g_{τ(i)} h_i`.
    pub fn compose(&self, other: &Self) -> Self {
        let gs = (0..other.n())
            .map(|i| self.gs[other.sigma.apply0(i)].compose(&other.gs[i]))
            .collect();
        WreathElement {
            sigma: self.sigma.compose(&other.sigma),
            gs,
        }
    }

    pub fn sign(&self) -> i32 {
        self.sigma.sign()
    }

    fn block(&self, pick: impl Fn(&GradedGroupElement) -> &QMatrix, r: usize) -> QMatrix {
        let n = self.n();
        let mut m = QMatrix::zeros(n * r, n * r);
        for (i, g) in self.gs.iter().enumerate() {
            m.set_block(self.sigma.apply0(i) * r, i * r, pick(g));
        }
        m
    }

    /// Matrix of the element on the even part `V0^n`, block `(sigma(i), i)`
    /// equal to `g_i^{(0)}`.
    pub fn block0(&self) -> QMatrix {
        let r0 = self.gs.first().map_or(0, |g| g.g0.rows());
        self.block(|g| &g.g0, r0)
    }

    /// Matrix of the element on the odd part `V1^n`.
    pub fn block1(&self) -> QMatrix {
        let r1 = self.gs.first().map_or(0, |g| g.g1.rows());
        self.block(|g| &g.g1, r1)
    }
}

pub fn wreath_sign(w: &WreathElement) -> i32 {
    w.sign()
}

/// Every element of `P[G]`: `sigma` runs over `P` in element order and, for
/// each, the tuple of `G`-indices runs in lexicographic order.
pub fn build_wreath(p: &PermGroup, g: &MatrixGroup, n: usize, cap: usize) -> Result<Vec<WreathElement>> {
    if p.degree() != n {
        return Err(Error::DegreeMismatch {
            expected: n,
            got: p.degree(),
        });
    }
    let total = (g.order() as u128)
        .checked_pow(n as u32)
        .and_then(|x| x.checked_mul(p.order() as u128));
    match total {
        Some(t) if t <= cap as u128 => {}
        _ => return Err(Error::CapExceeded { what: "wreath order", cap }),
    }
    let mut out = Vec::new();
    for sigma in p.elements() {
        let mut idx = vec![0usize; n];
        loop {
            out.push(WreathElement {
                sigma: sigma.clone(),
                gs: idx.iter().map(|&k| g.elements()[k].clone()).collect(),
            });
            // Odometer, last slot fastest.
            let mut k = n;
            loop {
                if k == 0 {
                    break;
                }
                k -= 1;
                idx[k] += 1;
                if idx[k] < g.order() {
                    break;
                }
                idx[k] = 0;
            }
            if idx.iter().all(|&x| x == 0) {
                break;
            }
        }
    }
    Ok(out)
}

/// `P[G]` as a permutation group on the `n·r` points `(i, p)`, numbered
/// `i·r + p`, with `(sigma, g)` sending `(i, p)` to `(sigma(i), g_i(p))`.
pub fn perm_group_of_wreath(p: &PermGroup, g: &PermGroup, n: usize) -> Result<PermGroup> {
    if p.degree() != n {
        return Err(Error::DegreeMismatch {
            expected: n,
            got: p.degree(),
        });
    }
    let r = g.degree();
    let mut gens = Vec::new();
    for sigma in p.generators() {
        let images = (0..n * r)
            .map(|pt| sigma.apply0(pt / r) * r + pt % r)
            .collect();
        gens.push(Permutation::from_images(images)?);
    }
    for h in g.generators() {
        for slot in 0..n {
            let images = (0..n * r)
                .map(|pt| {
                    if pt / r == slot {
                        slot * r + h.apply0(pt % r)
                    } else {
                        pt
                    }
                })
                .collect();
            gens.push(Permutation::from_images(images)?);
        }
    }
    PermGroup::generate(n * r, gens, crate::DEFAULT_GROUP_CAP)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::QMatrix;

    fn pm1() -> MatrixGroup {
        let neg = GradedGroupElement::new(QMatrix::from_i64(&[&[-1]]), QMatrix::identity(0)).unwrap();
        MatrixGroup::generate(1, 0, vec![neg], 10).unwrap()
    }

    #[test]
    fn wreath_orders() {
        assert_eq!(build_wreath(&PermGroup::trivial(1), &pm1(), 1, 100).unwrap().len(), 2);
        let triv = MatrixGroup::trivial(1, 0);
        assert_eq!(build_wreath(&PermGroup::symmetric(2), &triv, 2, 100).unwrap().len(), 2);
        assert_eq!(build_wreath(&PermGroup::symmetric(2), &pm1(), 2, 100).unwrap().len(), 8);
        assert!(matches!(
            build_wreath(&PermGroup::symmetric(3), &pm1(), 3, 47),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn signs_ignore_components() {
        let els = build_wreath(&PermGroup::symmetric(3), &pm1(), 3, 100).unwrap();
        for w in &els {
            assert_eq!(wreath_sign(w), w.sigma.sign());
        }
        let t = Permutation::from_one_line(&[2, 1, 3]).unwrap();
        let w = els.iter().find(|w| w.sigma == t && !w.gs[0].is_identity()).unwrap();
        assert_eq!(wreath_sign(w), -1);
    }

    #[test]
    fn block_matrix_is_a_homomorphism() {
        let els = build_wreath(&PermGroup::symmetric(2), &pm1(), 2, 100).unwrap();
        for a in &els {
            for b in &els {
                let ab = a.compose(b);
                assert_eq!(ab.block0(), &a.block0() * &b.block0());
                assert!(els.contains(&ab));
                assert_eq!(ab.sign(), a.sign() * b.sign());
            }
        }
    }

    #[test]
    fn hyperoctahedral_as_permutations() {
        let triv = perm_group_of_wreath(&PermGroup::trivial(1), &PermGroup::trivial(1), 1).unwrap();
        assert_eq!((triv.degree(), triv.order()), (1, 1));
        let s2 = perm_group_of_wreath(&PermGroup::symmetric(2), &PermGroup::trivial(1), 2).unwrap();
        assert_eq!((s2.degree(), s2.order()), (2, 2));
        let b2 = perm_group_of_wreath(&PermGroup::symmetric(2), &PermGroup::symmetric(2), 2).unwrap();
        assert_eq!((b2.degree(), b2.order()), (4, 8));
        // Preserves the block system {0,1} | {2,3}.
        for g in b2.elements() {
            assert_eq!(g.apply0(0) / 2, g.apply0(1) / 2);
        }
    }
}
