use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::symfunc::Partition;

/// A permutation of `{1, ..., n}`.
///
/// Stored 0-based; [`Permutation::from_one_line`] and
/// [`Permutation::one_line`] speak the usual 1-based one-line notation,
/// `images[i] = sigma(i + 1)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// From 1-based one-line notation.
    pub fn from_one_line(word: &[usize]) -> Result<Self> {
        if word.contains(&0) {
            return Err(Error::InvalidInput(format!(
                "one-line notation is 1-based: {word:?}"
            )));
        }
        Self::from_images(word.iter().map(|v| v - 1).collect())
    }

    /// From 0-based images.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidInput(format!(
                    "not a bijection on {n} points: {images:?}"
                )));
            }
        }
        Ok(Permutation { images })
    }

    /// The transposition of 1-based points `i` and `j`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(i - 1, j - 1);
        Permutation { images }
    }

    /// The long cycle `1 -> 2 -> ... -> n -> 1`.
    pub fn long_cycle(n: usize) -> Self {
        Permutation {
            images: (0..n).map(|i| (i + 1) % n.max(1)).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 0-based point `i`.
    pub fn apply0(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images0(&self) -> &[usize] {
        &self.images
    }

    /// 1-based one-line notation.
    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|i| i + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "composing permutations of different degree");
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { images: inv }
    }

    /// Disjoint cycles (0-based points), each starting at its least point,
    /// ordered by that point. Fixed points are 1-cycles.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut i = self.images[start];
            while i != start {
                seen[i] = true;
                cycle.push(i);
                i = self.images[i];
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle type as a partition of the degree.
    pub fn cycle_type(&self) -> Partition {
        Partition::new(self.cycles().iter().map(|c| c.len() as u32).collect())
    }

    pub fn inversions(&self) -> usize {
        let n = self.degree();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.images[i] > self.images[j])
            .count()
    }

    /// `(-1)^{inversions}`.
    pub fn sign(&self) -> i32 {
        if self.inversions().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w: Vec<String> = self.one_line().iter().map(ToString::to_string).collect();
        write!(f, "[{}]", w.join(","))
    }
}

/// Cycle type of `sigma`.
pub fn cycle_type(sigma: &Permutation) -> Partition {
    sigma.cycle_type()
}

/// Sign of `sigma`.
pub fn perm_sign(sigma: &Permutation) -> i32 {
    sigma.sign()
}

/// A finite group of permutations of `{1, ..., n}`.
#[derive(Clone, Debug)]
pub struct PermGroup {
    n: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
}

impl PermGroup {
    /// Breadth-first closure of `generators`. The identity comes first; the
    /// remaining elements appear in discovery order from the sorted
    /// generators.
    pub fn generate(n: usize, generators: Vec<Permutation>, cap: usize) -> Result<Self> {
        for g in &generators {
            if g.degree() != n {
                return Err(Error::DegreeMismatch {
                    expected: n,
                    got: g.degree(),
                });
            }
        }
        let mut gens = generators;
        gens.sort();
        gens.dedup();
        let elements = bfs_closure(Permutation::identity(n), &gens, cap, |a, b| a.compose(b))?;
        Ok(Self::assemble(n, gens, elements))
    }

    fn assemble(n: usize, generators: Vec<Permutation>, elements: Vec<Permutation>) -> Self {
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i))
            .collect();
        PermGroup {
            n,
            generators,
            elements,
            index,
        }
    }

    pub fn trivial(n: usize) -> Self {
        Self::generate(n, vec![], 1).expect("trivial group")
    }

    /// The full symmetric group, generated by `(1 2)` and the long cycle.
    pub fn symmetric(n: usize) -> Self {
        let mut gens = vec![];
        if n >= 2 {
            gens.push(Permutation::transposition(n, 1, 2));
        }
        if n >= 3 {
            gens.push(Permutation::long_cycle(n));
        }
        Self::generate(n, gens, usize::MAX).expect("symmetric group")
    }

    /// The cyclic group generated by the long cycle.
    pub fn cyclic(n: usize) -> Self {
        let gens = if n >= 2 {
            vec![Permutation::long_cycle(n)]
        } else {
            vec![]
        };
        Self::generate(n, gens, usize::MAX).expect("cyclic group")
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.index.contains_key(p)
    }

    /// Permutation-group JSON: `{"n": .., "generators": [[2,1,3], ..]}`.
    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        #[derive(serde::Deserialize)]
        struct Wire {
            n: usize,
            generators: Vec<Vec<usize>>,
        }
        let w: Wire = serde_json::from_value(v.clone())
            .map_err(|e| Error::InvalidInput(format!("permutation group JSON: {e}")))?;
        let gens = w
            .generators
            .iter()
            .map(|g| Permutation::from_one_line(g))
            .collect::<Result<Vec<_>>>()?;
        Self::generate(w.n, gens, crate::DEFAULT_GROUP_CAP)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "generators": self.generators.iter().map(Permutation::one_line).collect::<Vec<_>>(),
        })
    }
}

/// Breadth-first closure under right multiplication by generators.
pub(crate) fn bfs_closure<T: Clone + Eq + std::hash::Hash>(
    identity: T,
    generators: &[T],
    cap: usize,
    mul: impl Fn(&T, &T) -> T,
) -> Result<Vec<T>> {
    let mut seen: HashMap<T, ()> = HashMap::new();
    let mut elements = vec![identity.clone()];
    seen.insert(identity.clone(), ());
    let mut queue = VecDeque::from([identity]);
    while let Some(x) = queue.pop_front() {
        for g in generators {
            let y = mul(&x, g);
            if seen.contains_key(&y) {
                continue;
            }
            if elements.len() >= cap {
                return Err(Error::CapExceeded {
                    what: "group order",
                    cap,
                });
            }
            seen.insert(y.clone(), ());
            elements.push(y.clone());
            queue.push_back(y);
        }
    }
    Ok(elements)
}

/// Minimum-length coset representatives for the Young subgroup
/// `S_a × S_b` of `S_{a+b}`, each paired with its sign.
///
/// One representative per `a`-subset `S` of positions, in lexicographic
/// order of `S`: the one-line word carries the values `1..=a` at the
/// positions of `S` and `a+1..=a+b` at the remaining positions, both in
/// increasing order.
pub fn shuffle_reps(a: usize, b: usize) -> Vec<(Permutation, i32)> {
    let n = a + b;
    let mut out = Vec::new();
    let mut subset = Vec::with_capacity(a);
    fn rec(
        start: usize,
        n: usize,
        a: usize,
        subset: &mut Vec<usize>,
        out: &mut Vec<(Permutation, i32)>,
    ) {
        if subset.len() == a {
            let mut word = vec![0; n];
            let mut next_low = 0;
            let mut next_high = a;
            for (pos, slot) in word.iter_mut().enumerate() {
                if subset.contains(&pos) {
                    *slot = next_low;
                    next_low += 1;
                } else {
                    *slot = next_high;
                    next_high += 1;
                }
            }
            let p = Permutation::from_images(word).expect("shuffle word is a bijection");
            let s = p.sign();
            out.push((p, s));
            return;
        }
        for pos in start..n {
            if n - pos < a - subset.len() {
                break;
            }
            subset.push(pos);
            rec(pos + 1, n, a, subset, out);
            subset.pop();
        }
    }
    rec(0, n, a, &mut subset, &mut out);
    out
}

/// Shuffles of the consecutive blocks of a composition: every one-line word
/// in which the values of each block appear left to right, with signs.
pub fn composition_shuffles(parts: &[usize]) -> Vec<(Permutation, i32)> {
    let n: usize = parts.iter().sum();
    let mut out = Vec::new();
    // block_of[pos] records which block fills position `pos`.
    let mut block_of: Vec<Option<usize>> = vec![None; n];
    fn place(
        k: usize,
        parts: &[usize],
        block_of: &mut Vec<Option<usize>>,
        out: &mut Vec<(Permutation, i32)>,
    ) {
        if k == parts.len() {
            let mut next: Vec<usize> = parts
                .iter()
                .scan(0, |acc, &p| {
                    let start = *acc;
                    *acc += p;
                    Some(start)
                })
                .collect();
            let word: Vec<usize> = block_of
                .iter()
                .map(|b| {
                    let b = b.expect("every position filled");
                    let v = next[b];
                    next[b] += 1;
                    v
                })
                .collect();
            let p = Permutation::from_images(word).expect("bijection");
            let s = p.sign();
            out.push((p, s));
            return;
        }
        let free: Vec<usize> = (0..block_of.len()).filter(|&i| block_of[i].is_none()).collect();
        for chosen in combinations(&free, parts[k]) {
            for &i in &chosen {
                block_of[i] = Some(k);
            }
            place(k + 1, parts, block_of, out);
            for &i in &chosen {
                block_of[i] = None;
            }
        }
    }
    place(0, parts, &mut block_of, &mut out);
    out
}

/// All `k`-element subsets of `items`, in lexicographic order.
pub(crate) fn combinations<T: Clone>(items: &[T], k: usize) -> Vec<Vec<T>> {
    if k == 0 {
        return vec![vec![]];
    }
    if items.len() < k {
        return vec![];
    }
    let mut out = Vec::new();
    for (i, first) in items.iter().enumerate() {
        for mut rest in combinations(&items[i + 1..], k - 1) {
            rest.insert(0, first.clone());
            out.push(rest);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(w: &[usize]) -> Permutation {
        Permutation::from_one_line(w).unwrap()
    }

    #[test]
    fn cycle_types() {
        assert_eq!(p(&[1, 2, 3, 4]).cycle_type().parts(), &[1, 1, 1, 1]);
        assert_eq!(p(&[2, 1, 3]).cycle_type().parts(), &[2, 1]);
        assert_eq!(p(&[2, 3, 1, 5, 4]).cycle_type().parts(), &[3, 2]);
    }

    #[test]
    fn signs() {
        assert_eq!(perm_sign(&Permutation::identity(4)), 1);
        assert_eq!(perm_sign(&Permutation::transposition(4, 2, 4)), -1);
        assert_eq!(p(&[2, 3, 1]).inversions(), 2);
        assert_eq!(perm_sign(&p(&[2, 3, 1])), 1);
    }

    #[test]
    fn composition_is_function_composition() {
        let s = p(&[2, 3, 1]);
        let t = p(&[2, 1, 3]);
        let st = s.compose(&t);
        for i in 0..3 {
            assert_eq!(st.apply0(i), s.apply0(t.apply0(i)));
        }
        assert!(s.compose(&s.inverse()).is_identity());
        assert!(p(&[3, 4, 1, 2]).compose(&p(&[3, 4, 1, 2])).is_identity());
    }

    #[test]
    fn one_line_validation() {
        assert!(Permutation::from_one_line(&[1, 1]).is_err());
        assert!(Permutation::from_one_line(&[0, 1]).is_err());
        assert!(Permutation::from_one_line(&[3, 1]).is_err());
    }

    #[test]
    fn symmetric_and_cyclic_orders() {
        assert_eq!(PermGroup::symmetric(0).order(), 1);
        assert_eq!(PermGroup::symmetric(1).order(), 1);
        assert_eq!(PermGroup::symmetric(3).order(), 6);
        assert_eq!(PermGroup::symmetric(4).order(), 24);
        assert_eq!(PermGroup::cyclic(3).order(), 3);
        assert!(PermGroup::symmetric(3).elements()[0].is_identity());
        assert!(matches!(
            PermGroup::generate(4, vec![Permutation::long_cycle(4)], 3),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn shuffle_rep_examples() {
        let r = shuffle_reps(0, 3);
        assert_eq!(r.len(), 1);
        assert!(r[0].0.is_identity());
        assert_eq!(r[0].1, 1);
        let r = shuffle_reps(1, 1);
        assert_eq!(
            r.iter().map(|(p, s)| (p.one_line(), *s)).collect::<Vec<_>>(),
            vec![(vec![1, 2], 1), (vec![2, 1], -1)]
        );
        let r = shuffle_reps(2, 2);
        let words: Vec<Vec<usize>> = r.iter().map(|(p, _)| p.one_line()).collect();
        assert_eq!(
            words,
            vec![
                vec![1, 2, 3, 4],
                vec![1, 3, 2, 4],
                vec![1, 3, 4, 2],
                vec![3, 1, 2, 4],
                vec![3, 1, 4, 2],
                vec![3, 4, 1, 2]
            ]
        );
        let signs: Vec<i32> = r.iter().map(|(_, s)| *s).collect();
        assert_eq!(signs, vec![1, -1, 1, 1, -1, 1]);
    }

    #[test]
    fn composition_shuffles_agree_with_two_block_reps() {
        for a in 0..=4 {
            for b in 0..=4 {
                let mut x = shuffle_reps(a, b);
                let mut y = composition_shuffles(&[a, b]);
                x.sort();
                y.sort();
                assert_eq!(x, y, "({a},{b})");
            }
        }
        assert_eq!(composition_shuffles(&[1, 1, 1]).len(), 6);
        assert_eq!(composition_shuffles(&[2, 1, 1]).len(), 12);
    }
}
