//! Finite commutative monoids given by explicit operation tables:
//! validation, congruences, quotients, exactness and the Grothendieck group.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MonoidError {
    #[error("monoid has no elements")]
    Empty,
    #[error("operation table is not {0}x{0}")]
    NotSquare(usize),
    #[error("table entry {0} out of range")]
    OutOfRange(usize),
    #[error("not commutative: {x}*{y} != {y}*{x}")]
    NotCommutative { x: String, y: String },
    #[error("not associative: ({x}*{y})*{z} != {x}*({y}*{z})")]
    NotAssociative { x: String, y: String, z: String },
    #[error("{identity} is not an identity: {identity}*{x} != {x}")]
    BadIdentity { identity: String, x: String },
    #[error("map is not a homomorphism at ({x}, {y})")]
    NotHomomorphism { x: String, y: String },
    #[error("map does not send the identity to the identity")]
    IdentityNotPreserved,
    #[error("map has {got} entries, source has {expected} elements")]
    MapLength { expected: usize, got: usize },
    #[error("target of the first map is not the source of the second")]
    NotComposable,
    #[error("partition is not a congruence")]
    NotCongruence,
}

/// A finite commutative monoid on elements `0..len`, with display labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteCommMonoid {
    pub elements: Vec<String>,
    pub table: Vec<Vec<usize>>,
    pub identity: usize,
}

impl FiniteCommMonoid {
    /// Builds and validates a monoid.
    pub fn new(
        elements: Vec<String>,
        table: Vec<Vec<usize>>,
        identity: usize,
    ) -> Result<Self, MonoidError> {
        let m = FiniteCommMonoid {
            elements,
            table,
            identity,
        };
        m.validate()?;
        Ok(m)
    }

    /// Builds a monoid from an operation on `0..len`.
    pub fn from_fn(
        elements: Vec<String>,
        identity: usize,
        op: impl Fn(usize, usize) -> usize,
    ) -> Result<Self, MonoidError> {
        let n = elements.len();
        let table = (0..n).map(|i| (0..n).map(|j| op(i, j)).collect()).collect();
        FiniteCommMonoid::new(elements, table, identity)
    }

    /// `Z/n` under addition (`additive = true`) or multiplication.
    pub fn integers_mod(n: usize, additive: bool) -> Self {
        let labels = (0..n).map(|i| i.to_string()).collect();
        if additive {
            FiniteCommMonoid::from_fn(labels, 0, |a, b| (a + b) % n)
        } else {
            FiniteCommMonoid::from_fn(labels, 1 % n, |a, b| (a * b) % n)
        }
        .expect("Z/n is a commutative monoid")
    }

    /// The one-element monoid.
    pub fn trivial() -> Self {
        FiniteCommMonoid {
            elements: vec!["1".to_string()],
            table: vec![vec![0]],
            identity: 0,
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.table[x][y]
    }

    fn label(&self, i: usize) -> String {
        self.elements[i].clone()
    }

    /// Exhaustive check of totality, commutativity, associativity and the
    /// identity law; the error names the first violating pair or triple.
    pub fn validate(&self) -> Result<(), MonoidError> {
        let n = self.len();
        if n == 0 {
            return Err(MonoidError::Empty);
        }
        if self.table.len() != n || self.table.iter().any(|row| row.len() != n) {
            return Err(MonoidError::NotSquare(n));
        }
        if self.identity >= n {
            return Err(MonoidError::OutOfRange(self.identity));
        }
        if let Some(&bad) = self.table.iter().flatten().find(|&&v| v >= n) {
            return Err(MonoidError::OutOfRange(bad));
        }
        for x in 0..n {
            if self.op(self.identity, x) != x {
                return Err(MonoidError::BadIdentity {
                    identity: self.label(self.identity),
                    x: self.label(x),
                });
            }
            for y in 0..n {
                if self.op(x, y) != self.op(y, x) {
                    return Err(MonoidError::NotCommutative {
                        x: self.label(x),
                        y: self.label(y),
                    });
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                let xy = self.op(x, y);
                for z in 0..n {
                    if self.op(xy, z) != self.op(x, self.op(y, z)) {
                        return Err(MonoidError::NotAssociative {
                            x: self.label(x),
                            y: self.label(y),
                            z: self.label(z),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    /// The absorbing element, if any (there is at most one).
    pub fn find_absorbing(&self) -> Option<usize> {
        (0..self.len()).find(|&z| (0..self.len()).all(|x| self.op(z, x) == z))
    }

    pub fn is_cancellative(&self, x: usize) -> bool {
        let mut seen = vec![false; self.len()];
        (0..self.len()).all(|y| !std::mem::replace(&mut seen[self.op(x, y)], true))
    }

    pub fn cancellative_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&x| self.is_cancellative(x))
            .collect()
    }

    pub fn is_group(&self) -> bool {
        (0..self.len()).all(|x| (0..self.len()).any(|y| self.op(x, y) == self.identity))
    }

    /// The submonoid on a subset closed under the operation and containing
    /// the identity, relabelled in the order given.
    pub fn submonoid(&self, subset: &[usize]) -> Result<FiniteCommMonoid, MonoidError> {
        let pos = |v: usize| {
            subset
                .iter()
                .position(|&s| s == v)
                .ok_or(MonoidError::OutOfRange(v))
        };
        let identity = pos(self.identity)?;
        let mut table = Vec::with_capacity(subset.len());
        for &x in subset {
            let row = subset
                .iter()
                .map(|&y| pos(self.op(x, y)))
                .collect::<Result<Vec<_>, _>>()?;
            table.push(row);
        }
        let labels = subset.iter().map(|&x| self.label(x)).collect();
        FiniteCommMonoid::new(labels, table, identity)
    }

    /// Submonoid of cancellative elements.
    pub fn cancellative_submonoid(&self) -> FiniteCommMonoid {
        self.submonoid(&self.cancellative_elements())
            .expect("cancellative elements form a submonoid")
    }
}

/// A homomorphism of finite commutative monoids, checked on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidHom {
    pub source: FiniteCommMonoid,
    pub target: FiniteCommMonoid,
    pub map: Vec<usize>,
}

impl MonoidHom {
    pub fn new(
        source: FiniteCommMonoid,
        target: FiniteCommMonoid,
        map: Vec<usize>,
    ) -> Result<Self, MonoidError> {
        if map.len() != source.len() {
            return Err(MonoidError::MapLength {
                expected: source.len(),
                got: map.len(),
            });
        }
        if let Some(&bad) = map.iter().find(|&&v| v >= target.len()) {
            return Err(MonoidError::OutOfRange(bad));
        }
        if map[source.identity] != target.identity {
            return Err(MonoidError::IdentityNotPreserved);
        }
        for x in 0..source.len() {
            for y in 0..source.len() {
                if map[source.op(x, y)] != target.op(map[x], map[y]) {
                    return Err(MonoidError::NotHomomorphism {
                        x: source.label(x),
                        y: source.label(y),
                    });
                }
            }
        }
        Ok(MonoidHom {
            source,
            target,
            map,
        })
    }

    pub fn identity(m: &FiniteCommMonoid) -> Self {
        MonoidHom {
            source: m.clone(),
            target: m.clone(),
            map: (0..m.len()).collect(),
        }
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn is_injective(&self) -> bool {
        let image: BTreeSet<_> = self.map.iter().collect();
        image.len() == self.map.len()
    }

    pub fn is_surjective(&self) -> bool {
        let image: BTreeSet<_> = self.map.iter().collect();
        image.len() == self.target.len()
    }

    /// `K_f = {(x, y) : f(x) = f(y)}` as a partition of the source.
    pub fn kernel_congruence(&self) -> Congruence {
        Congruence::from_labelling(&self.source, |x| self.map[x])
    }

    /// `I_f = {(z, w) : f(x) z = f(y) w for some x, y}` on the target.
    pub fn image_congruence(&self) -> Congruence {
        let b = &self.target;
        let image: BTreeSet<usize> = self.map.iter().copied().collect();
        let translates: Vec<BTreeSet<usize>> = (0..b.len())
            .map(|z| image.iter().map(|&a| b.op(a, z)).collect())
            .collect();
        let mut uf = UnionFind::new(b.len());
        for z in 0..b.len() {
            for w in (z + 1)..b.len() {
                if !translates[z].is_disjoint(&translates[w]) {
                    uf.union(z, w);
                }
            }
        }
        Congruence::from_labelling(b, |x| uf.find(x))
    }
}

/// A congruence, stored as the class index of every element. Classes are
/// numbered by their least member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Congruence {
    class_of: Vec<usize>,
    classes: Vec<Vec<usize>>,
}

impl Congruence {
    fn from_labelling<K: Ord + Copy>(
        m: &FiniteCommMonoid,
        mut key: impl FnMut(usize) -> K,
    ) -> Self {
        let mut first: Vec<(K, usize)> = Vec::new();
        let mut class_of = vec![0; m.len()];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for (x, slot) in class_of.iter_mut().enumerate() {
            let k = key(x);
            let idx = match first.iter().find(|(kk, _)| *kk == k) {
                Some(&(_, idx)) => idx,
                None => {
                    first.push((k, classes.len()));
                    classes.push(Vec::new());
                    classes.len() - 1
                }
            };
            *slot = idx;
            classes[idx].push(x);
        }
        Congruence { class_of, classes }
    }

    /// Builds a congruence from a partition, checking compatibility with the
    /// operation.
    pub fn from_partition(
        m: &FiniteCommMonoid,
        partition: &[Vec<usize>],
    ) -> Result<Self, MonoidError> {
        let mut label = vec![usize::MAX; m.len()];
        for (i, class) in partition.iter().enumerate() {
            for &x in class {
                if x >= m.len() || label[x] != usize::MAX {
                    return Err(MonoidError::NotCongruence);
                }
                label[x] = i;
            }
        }
        if label.contains(&usize::MAX) {
            return Err(MonoidError::NotCongruence);
        }
        let c = Congruence::from_labelling(m, |x| label[x]);
        if !c.is_compatible(m) {
            return Err(MonoidError::NotCongruence);
        }
        Ok(c)
    }

    /// Smallest congruence containing the given pairs, by fixed-point
    /// iteration of the compatibility rule.
    pub fn generated_by(m: &FiniteCommMonoid, pairs: &[(usize, usize)]) -> Self {
        let mut uf = UnionFind::new(m.len());
        for &(x, y) in pairs {
            uf.union(x, y);
        }
        loop {
            let mut changed = false;
            for x in 0..m.len() {
                let rx = uf.find(x);
                if rx == x {
                    continue;
                }
                for z in 0..m.len() {
                    changed |= uf.union(m.op(x, z), m.op(rx, z));
                }
            }
            if !changed {
                break;
            }
        }
        Congruence::from_labelling(m, |x| uf.find(x))
    }

    pub fn diagonal(m: &FiniteCommMonoid) -> Self {
        Congruence::from_labelling(m, |x| x)
    }

    pub fn all(m: &FiniteCommMonoid) -> Self {
        Congruence::from_labelling(m, |_| 0)
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn related(&self, x: usize, y: usize) -> bool {
        self.class_of[x] == self.class_of[y]
    }

    pub fn is_compatible(&self, m: &FiniteCommMonoid) -> bool {
        (0..m.len()).all(|x| {
            (0..m.len()).all(|z| {
                let rep = self.classes[self.class_of[x]][0];
                self.related(m.op(x, z), m.op(rep, z))
            })
        })
    }

    /// `M/C` together with the quotient map.
    pub fn quotient(&self, m: &FiniteCommMonoid) -> (FiniteCommMonoid, MonoidHom) {
        let labels: Vec<String> = self
            .classes
            .iter()
            .map(|c| format!("[{}]", m.elements[c[0]]))
            .collect();
        let table = self
            .classes
            .iter()
            .map(|cx| {
                self.classes
                    .iter()
                    .map(|cy| self.class_of[m.op(cx[0], cy[0])])
                    .collect()
            })
            .collect();
        let q = FiniteCommMonoid {
            elements: labels,
            table,
            identity: self.class_of[m.identity],
        };
        let hom = MonoidHom {
            source: m.clone(),
            target: q.clone(),
            map: self.class_of.clone(),
        };
        (q, hom)
    }
}

/// Quotient of `m` by a congruence.
pub fn quotient_monoid(m: &FiniteCommMonoid, c: &Congruence) -> FiniteCommMonoid {
    c.quotient(m).0
}

/// Whether `A -f-> B -g-> C` is exact: `f` injective, `g` surjective and
/// `K_g = I_f`.
pub fn is_exact(f: &MonoidHom, g: &MonoidHom) -> Result<bool, MonoidError> {
    if f.target != g.source {
        return Err(MonoidError::NotComposable);
    }
    Ok(f.is_injective() && g.is_surjective() && g.kernel_congruence() == f.image_congruence())
}

/// A finite abelian group with its invariant factors `d1 | d2 | ...`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianGroup {
    pub group: FiniteCommMonoid,
    pub invariant_factors: Vec<u64>,
}

impl AbelianGroup {
    pub fn order(&self) -> usize {
        self.group.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }
}

/// `K0(M)`: `M x M` modulo `(x, x') ~ (y, y')` iff `x y' z = x' y z` for
/// some `z`, with componentwise operation.
pub fn grothendieck_group(m: &FiniteCommMonoid) -> AbelianGroup {
    let n = m.len();
    // p ≈ q iff pz = qz for some z
    let stably_equal: Vec<Vec<bool>> = (0..n)
        .map(|p| {
            (0..n)
                .map(|q| (0..n).any(|z| m.op(p, z) == m.op(q, z)))
                .collect()
        })
        .collect();
    let equiv =
        |(x, xp): (usize, usize), (y, yp): (usize, usize)| stably_equal[m.op(x, yp)][m.op(xp, y)];
    let mut reps: Vec<(usize, usize)> = Vec::new();
    let mut class_of = vec![vec![0usize; n]; n];
    for (x, row) in class_of.iter_mut().enumerate() {
        for (xp, slot) in row.iter_mut().enumerate() {
            let idx = match reps.iter().position(|&r| equiv(r, (x, xp))) {
                Some(i) => i,
                None => {
                    reps.push((x, xp));
                    reps.len() - 1
                }
            };
            *slot = idx;
        }
    }
    let labels = reps
        .iter()
        .map(|&(x, xp)| format!("{}/{}", m.elements[x], m.elements[xp]))
        .collect();
    let table = reps
        .iter()
        .map(|&(x, xp)| {
            reps.iter()
                .map(|&(y, yp)| class_of[m.op(x, y)][m.op(xp, yp)])
                .collect()
        })
        .collect();
    let group = FiniteCommMonoid {
        elements: labels,
        table,
        identity: class_of[m.identity][m.identity],
    };
    let invariant_factors = invariant_factors(&group);
    AbelianGroup {
        group,
        invariant_factors,
    }
}

fn element_order(g: &FiniteCommMonoid, x: usize) -> u64 {
    let mut acc = x;
    let mut k = 1;
    while acc != g.identity {
        acc = g.op(acc, x);
        k += 1;
    }
    k
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Invariant factors of a finite abelian group, from the counts of
/// elements whose order divides each prime power.
pub fn invariant_factors(g: &FiniteCommMonoid) -> Vec<u64> {
    let orders: Vec<u64> = (0..g.len()).map(|x| element_order(g, x)).collect();
    let mut factors: Vec<u64> = Vec::new();
    for p in prime_factors(g.len() as u64) {
        // |G[p^k]| = p^(sum_i min(k, e_i)); successive differences give the
        // number of cyclic factors with exponent >= k.
        let mut exponents_at_least = Vec::new();
        let mut prev_log = 0u32;
        let mut k = 1u32;
        loop {
            let pk = p.pow(k);
            let count = orders.iter().filter(|&&o| pk % o == 0).count() as u64;
            let log = count.ilog(p);
            if log == prev_log {
                break;
            }
            exponents_at_least.push(log - prev_log);
            prev_log = log;
            k += 1;
        }
        // exponents_at_least[k-1] = #{i : e_i >= k}
        let num_factors = exponents_at_least.first().copied().unwrap_or(0) as usize;
        let mut exps = vec![0u32; num_factors];
        for (k, &c) in exponents_at_least.iter().enumerate() {
            for e in exps.iter_mut().take(c as usize) {
                *e = k as u32 + 1;
            }
        }
        // exps is non-increasing; align from the largest factor down
        if factors.len() < exps.len() {
            let pad = exps.len() - factors.len();
            factors.splice(0..0, std::iter::repeat_n(1, pad));
        }
        let len = factors.len();
        for (i, e) in exps.iter().enumerate() {
            factors[len - 1 - i] *= p.pow(*e);
        }
    }
    factors
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            cur = std::mem::replace(&mut self.parent[cur], root);
        }
        root
    }

    /// Joins the classes, keeping the smaller index as root.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z4_mul() -> FiniteCommMonoid {
        FiniteCommMonoid::integers_mod(4, false)
    }

    fn bool_mul() -> FiniteCommMonoid {
        FiniteCommMonoid::from_fn(vec!["0".into(), "1".into()], 1, |a, b| a * b).unwrap()
    }

    #[test]
    fn absorbing_and_cancellative() {
        let m = z4_mul();
        assert_eq!(m.find_absorbing(), Some(0));
        assert_eq!(m.cancellative_elements(), vec![1, 3]);
        let z2 = FiniteCommMonoid::integers_mod(2, true);
        assert_eq!(z2.find_absorbing(), None);
        assert_eq!(z2.cancellative_elements(), vec![0, 1]);
        assert_eq!(bool_mul().find_absorbing(), Some(0));
    }

    #[test]
    fn validation_pinpoints_violations() {
        // subtraction mod 3 is not commutative
        let bad = FiniteCommMonoid {
            elements: vec!["0".into(), "1".into(), "2".into()],
            table: (0..3)
                .map(|a| (0..3).map(|b| (a + 3 - b) % 3).collect())
                .collect(),
            identity: 0,
        };
        assert!(matches!(
            bad.validate(),
            Err(MonoidError::BadIdentity { .. }) | Err(MonoidError::NotCommutative { .. })
        ));
        // commutative but not associative: x*y = 0 except 1*1 = 2, 2*2 = 1
        let mut table = vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 0]];
        table[2][2] = 1;
        table[1][2] = 1;
        table[2][1] = 1;
        let nonassoc = FiniteCommMonoid {
            elements: vec!["e".into(), "a".into(), "b".into()],
            table,
            identity: 0,
        };
        assert!(matches!(
            nonassoc.validate(),
            Err(MonoidError::NotAssociative { .. })
        ));
        let ragged = FiniteCommMonoid {
            elements: vec!["e".into()],
            table: vec![vec![0, 0]],
            identity: 0,
        };
        assert_eq!(ragged.validate(), Err(MonoidError::NotSquare(1)));
    }

    #[test]
    fn kernel_of_unit_indicator() {
        let f = MonoidHom::new(z4_mul(), bool_mul(), vec![0, 1, 0, 1]).unwrap();
        let k = f.kernel_congruence();
        let mut classes: Vec<Vec<usize>> = k.classes().to_vec();
        classes.sort();
        assert_eq!(classes, vec![vec![0, 2], vec![1, 3]]);
    }

    #[test]
    fn identity_map_congruences_are_diagonal() {
        let m = z4_mul();
        let id = MonoidHom::identity(&m);
        assert_eq!(id.kernel_congruence(), Congruence::diagonal(&m));
        // 0 is in the image, so I_f is everything even for the identity of Z/4
        assert_eq!(id.image_congruence(), Congruence::all(&m));
        let g = FiniteCommMonoid::integers_mod(3, true);
        let id = MonoidHom::identity(&g);
        assert_eq!(id.kernel_congruence(), Congruence::diagonal(&g));
        // in a group, the image of the whole group identifies everything
        assert_eq!(id.image_congruence(), Congruence::all(&g));
        let triv = FiniteCommMonoid::trivial();
        let inc = MonoidHom::new(triv, g.clone(), vec![0]).unwrap();
        assert_eq!(inc.image_congruence(), Congruence::diagonal(&g));
    }

    #[test]
    fn absorbing_in_image_gives_full_image_congruence() {
        let inc = MonoidHom::new(bool_mul(), z4_mul(), vec![0, 1]).unwrap();
        assert_eq!(inc.image_congruence(), Congruence::all(&z4_mul()));
    }

    #[test]
    fn exactness_examples() {
        let m = z4_mul();
        let id = MonoidHom::identity(&m);
        let to_trivial =
            MonoidHom::new(m.clone(), FiniteCommMonoid::trivial(), vec![0; 4]).unwrap();
        assert!(is_exact(&id, &to_trivial).unwrap());

        let z2 = FiniteCommMonoid::integers_mod(2, true);
        let inc = MonoidHom::new(FiniteCommMonoid::trivial(), z2.clone(), vec![0]).unwrap();
        let collapse = MonoidHom::new(z2.clone(), FiniteCommMonoid::trivial(), vec![0; 2]).unwrap();
        assert!(!is_exact(&inc, &collapse).unwrap());

        let id2 = MonoidHom::identity(&z2);
        assert!(is_exact(&id2, &collapse).unwrap());

        assert_eq!(
            is_exact(&collapse, &collapse),
            Err(MonoidError::NotComposable)
        );
    }

    #[test]
    fn group_exactness_matches_group_definition() {
        // Z/2 -> Z/4 (x -> 2x) -> Z/2 (reduction) is a short exact sequence
        let z2 = FiniteCommMonoid::integers_mod(2, true);
        let z4 = FiniteCommMonoid::integers_mod(4, true);
        let f = MonoidHom::new(z2.clone(), z4.clone(), vec![0, 2]).unwrap();
        let g = MonoidHom::new(z4.clone(), z2.clone(), vec![0, 1, 0, 1]).unwrap();
        assert!(is_exact(&f, &g).unwrap());
        // the zero map Z/4 -> Z/2 has kernel everything, not image of f
        let zero = MonoidHom::new(z4.clone(), z2.clone(), vec![0; 4]).unwrap();
        assert!(!is_exact(&f, &zero).unwrap());
    }

    #[test]
    fn non_homomorphisms_rejected() {
        let z2 = FiniteCommMonoid::integers_mod(2, true);
        assert_eq!(
            MonoidHom::new(z2.clone(), z2.clone(), vec![1, 0]).unwrap_err(),
            MonoidError::IdentityNotPreserved
        );
        let z3 = FiniteCommMonoid::integers_mod(3, true);
        assert!(matches!(
            MonoidHom::new(z3, z2, vec![0, 1, 1]),
            Err(MonoidError::NotHomomorphism { .. })
        ));
    }

    #[test]
    fn grothendieck_examples() {
        assert!(grothendieck_group(&z4_mul()).is_trivial());
        let k = grothendieck_group(&FiniteCommMonoid::integers_mod(3, true));
        assert_eq!(k.order(), 3);
        assert_eq!(k.invariant_factors, vec![3]);
        let canc = z4_mul().cancellative_submonoid();
        assert_eq!(canc.elements, vec!["1", "3"]);
        let k = grothendieck_group(&canc);
        assert_eq!(k.order(), 2);
        assert_eq!(k.invariant_factors, vec![2]);
        k.group.validate().unwrap();
        assert!(k.group.is_group());
    }

    #[test]
    fn invariant_factor_decomposition() {
        let prod = |a: usize, b: usize| {
            let labels = (0..a * b).map(|i| i.to_string()).collect();
            FiniteCommMonoid::from_fn(labels, 0, |x, y| {
                ((x / b + y / b) % a) * b + (x % b + y % b) % b
            })
            .unwrap()
        };
        assert_eq!(invariant_factors(&prod(2, 2)), vec![2, 2]);
        assert_eq!(invariant_factors(&prod(2, 4)), vec![2, 4]);
        assert_eq!(invariant_factors(&prod(2, 3)), vec![6]);
        assert_eq!(invariant_factors(&prod(6, 4)), vec![2, 12]);
        assert_eq!(
            invariant_factors(&FiniteCommMonoid::trivial()),
            Vec::<u64>::new()
        );
    }

    #[test]
    fn generated_congruence_and_quotient() {
        let m = FiniteCommMonoid::integers_mod(6, false);
        // identifying 0 and 2 forces 0 ~ 2 ~ 4 (times 2) and 0 ~ 3*2=0 ...
        let c = Congruence::generated_by(&m, &[(0, 2)]);
        assert!(c.is_compatible(&m));
        let (q, hom) = c.quotient(&m);
        q.validate().unwrap();
        assert!(hom.is_surjective());
        assert_eq!(hom.kernel_congruence(), c);
        assert!(MonoidHom::new(hom.source.clone(), hom.target.clone(), hom.map.clone()).is_ok());
    }

    #[test]
    fn from_partition_rejects_incompatible() {
        let m = FiniteCommMonoid::integers_mod(4, true);
        assert_eq!(
            Congruence::from_partition(&m, &[vec![0, 1], vec![2], vec![3]]),
            Err(MonoidError::NotCongruence)
        );
        let c = Congruence::from_partition(&m, &[vec![0, 2], vec![1, 3]]).unwrap();
        assert_eq!(quotient_monoid(&m, &c).len(), 2);
    }

    #[test]
    fn quotients_of_all_congruences_of_small_monoids() {
        // every congruence generated by a single pair: quotient map is a
        // surjective hom with kernel equal to the congruence
        for m in [
            z4_mul(),
            FiniteCommMonoid::integers_mod(6, false),
            FiniteCommMonoid::integers_mod(8, true),
        ] {
            for x in 0..m.len() {
                for y in 0..m.len() {
                    let c = Congruence::generated_by(&m, &[(x, y)]);
                    assert!(c.related(x, y));
                    let (q, hom) = c.quotient(&m);
                    q.validate().unwrap();
                    let checked =
                        MonoidHom::new(hom.source.clone(), q.clone(), hom.map.clone()).unwrap();
                    assert!(checked.is_surjective());
                    assert_eq!(checked.kernel_congruence(), c);
                }
            }
        }
    }

    #[test]
    fn json_shape() {
        let m = bool_mul();
        let v = serde_json::to_value(&m).unwrap();
        assert_eq!(
            v,
            serde_json::json!({"elements": ["0", "1"], "table": [[0, 0], [0, 1]], "identity": 1})
        );
        let back: FiniteCommMonoid = serde_json::from_value(v).unwrap();
        assert_eq!(back, m);
    }
}
