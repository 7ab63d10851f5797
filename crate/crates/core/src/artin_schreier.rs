//! The Artin-Schreier group `AS(R) = R[4] / wp(R)[4]` and its action on
//! the fibers of the discriminant map, where `R[4] = {a : 4a = 0}` and
//! `wp(r) = r + r^2`.

use std::collections::{BTreeSet, HashMap, HashSet};

use num_traits::Zero;
use serde::Serialize;

use crate::disc::{unit_square_orbit, DiscClass};
use crate::quad::{classify, Classification, ClassificationRecord, QuadAlg};
use crate::ring::{Ring, RingElement};
use crate::{Error, Result};

/// `R[4]`, sorted. For `Z` this is `{0}`.
pub fn four_torsion(ring: &Ring) -> Result<Vec<RingElement>> {
    if ring.is_integers() {
        return Ok(vec![ring.zero()]);
    }
    Ok(ring
        .elements()?
        .into_iter()
        .filter(|a| a.scale(4).is_zero())
        .collect())
}

/// `wp(R)[4] = {r + r^2 : (1 + 2r)^2 = 1}`, sorted.
pub fn wp4_subgroup(ring: &Ring) -> Result<Vec<RingElement>> {
    if ring.is_integers() {
        return Ok(vec![ring.zero()]);
    }
    let one = ring.one();
    let set: BTreeSet<RingElement> = ring
        .elements()?
        .iter()
        .filter(|r| {
            let w = &one + &r.scale(2);
            &w * &w == one
        })
        .map(|r| r + &(r * r))
        .collect();
    Ok(set.into_iter().collect())
}

/// `ann_R(d)[4] = {a : 4a = 0, da = 0}`, sorted.
pub fn annihilator_four_torsion(ring: &Ring, d: &RingElement) -> Result<Vec<RingElement>> {
    ring.check_same(d)?;
    Ok(four_torsion(ring)?
        .into_iter()
        .filter(|a| (d * a).is_zero())
        .collect())
}

/// The group `R[4] / wp(R)[4]`. Cosets are represented by their least
/// element.
#[derive(Debug, Clone)]
pub struct AsGroup {
    ring: Ring,
    four_torsion: Vec<RingElement>,
    wp4: Vec<RingElement>,
    reps: Vec<RingElement>,
    coset_of: HashMap<RingElement, usize>,
}

impl AsGroup {
    /// Builds the group and checks that `wp(R)[4]` is a subgroup of `R[4]`
    /// equal to `wp(R) ∩ R[4]`, and that every class has order dividing 2.
    pub fn new(ring: &Ring) -> Result<AsGroup> {
        let four_torsion = four_torsion(ring)?;
        let wp4 = wp4_subgroup(ring)?;
        if ring.is_finite() {
            let wp_all: HashSet<RingElement> =
                ring.elements()?.iter().map(|r| r + &(r * r)).collect();
            let meet: BTreeSet<&RingElement> = four_torsion
                .iter()
                .filter(|a| wp_all.contains(*a))
                .collect();
            if meet != wp4.iter().collect() {
                return Err(Error::Invariant("wp(R)[4] != wp(R) ∩ R[4]".into()));
            }
        }
        let wp_set: HashSet<&RingElement> = wp4.iter().collect();
        for a in &wp4 {
            for b in &wp4 {
                if !wp_set.contains(&(a - b)) {
                    return Err(Error::Invariant("wp(R)[4] is not a subgroup".into()));
                }
            }
        }
        let mut reps = Vec::new();
        let mut coset_of = HashMap::new();
        for a in &four_torsion {
            if coset_of.contains_key(a) {
                continue;
            }
            let idx = reps.len();
            for w in &wp4 {
                coset_of.insert(a + w, idx);
            }
            reps.push(a.clone());
        }
        for a in &four_torsion {
            if coset_of[&a.scale(2)] != 0 {
                return Err(Error::Invariant(format!("2 * [{a}] is nonzero in AS(R)")));
            }
        }
        Ok(AsGroup {
            ring: ring.clone(),
            four_torsion,
            wp4,
            reps,
            coset_of,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn order(&self) -> usize {
        self.reps.len()
    }

    /// Least representatives of the cosets; index 0 is the zero class.
    pub fn representatives(&self) -> &[RingElement] {
        &self.reps
    }

    pub fn four_torsion(&self) -> &[RingElement] {
        &self.four_torsion
    }

    pub fn wp4(&self) -> &[RingElement] {
        &self.wp4
    }

    /// The class of `m ∈ R[4]`.
    pub fn class_of(&self, m: &RingElement) -> Result<usize> {
        self.ring.check_same(m)?;
        if self.ring.is_integers() {
            return if m.is_zero() {
                Ok(0)
            } else {
                Err(Error::NotFourTorsion(m.to_string()))
            };
        }
        self.coset_of
            .get(m)
            .copied()
            .ok_or_else(|| Error::NotFourTorsion(m.to_string()))
    }

    /// Group law: addition of representatives.
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.coset_of[&(&self.reps[a] + &self.reps[b])]
    }

    /// The embedding `m -> (1, m)` on the class representative.
    pub fn embed(&self, class: usize) -> QuadAlg {
        as_embed(&self.reps[class]).expect("representative is 4-torsion")
    }

    pub fn record(&self) -> AsGroupRecord {
        AsGroupRecord {
            ring: self.ring.to_string(),
            order: self.order(),
            representatives: self.reps.iter().map(|r| r.to_string()).collect(),
            four_torsion: self.four_torsion.iter().map(|r| r.to_string()).collect(),
            wp4: self.wp4.iter().map(|r| r.to_string()).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AsGroupRecord {
    pub ring: String,
    pub order: usize,
    pub representatives: Vec<String>,
    pub four_torsion: Vec<String>,
    pub wp4: Vec<String>,
}

fn check_four_torsion(m: &RingElement) -> Result<()> {
    if m.scale(4).is_zero() {
        Ok(())
    } else {
        Err(Error::NotFourTorsion(m.to_string()))
    }
}

/// `m -> (1, m)`, a separable algebra of discriminant `1 - 4m = 1`.
pub fn as_embed(m: &RingElement) -> Result<QuadAlg> {
    check_four_torsion(m)?;
    QuadAlg::new(m.ring().one(), m.clone())
}

/// The action `(t, n) . m = (t, n + d m)` of `m ∈ R[4]`, which equals
/// `(t, n) * (1, m)` and preserves the discriminant.
pub fn as_act(s: &QuadAlg, m: &RingElement) -> Result<QuadAlg> {
    s.ring().check_same(m)?;
    check_four_torsion(m)?;
    QuadAlg::new(s.t().clone(), s.n() + &(&s.disc() * m))
}

/// Whether `t` is a sec element: a nonzerodivisor such that `r^2, 2r ∈ tR`
/// imply `r ∈ tR`.
pub fn is_sec_element(ring: &Ring, t: &RingElement) -> Result<bool> {
    ring.check_same(t)?;
    if ring.is_integers() {
        // For t = 4k, r = 2k is a counterexample. Otherwise write |t| = 2^e o
        // with e <= 1 and o odd: 2r ∈ tZ forces o | r, and for e = 1 the
        // condition 2o | r^2 forces r even.
        let t = t.as_integer().expect("integer element");
        return Ok(!t.is_zero() && !(t % 4u32).is_zero());
    }
    if !ring.is_nonzerodivisor(t) {
        return Ok(false);
    }
    let ideal: HashSet<RingElement> = ring.principal_ideal(t)?.into_iter().collect();
    Ok(ring
        .elements()?
        .iter()
        .all(|r| !(ideal.contains(&(r * r)) && ideal.contains(&r.scale(2))) || ideal.contains(r)))
}

/// Whether `S` is a sec algebra: its discriminant is a nonzerodivisor and
/// some basis change gives it a sec trace.
///
/// Only the traces `t + 2r` need checking, since a unit multiple of a sec
/// element is sec. Over `Z` every trace is congruent mod 2 to 1 or 2, both
/// of which are sec, so the search over `|t + 2r| <= 2` is complete.
pub fn is_sec_algebra(s: &QuadAlg) -> Result<bool> {
    let ring = s.ring();
    let d = s.disc();
    if ring.is_integers() {
        if d.is_zero() {
            return Ok(false);
        }
        let t = s.t().as_integer().expect("integer element");
        let base: i64 = if t % 2 == 0.into() { 2 } else { 1 };
        for c in [-base, base] {
            if is_sec_element(ring, &ring.from_int(c))? {
                return Ok(true);
            }
        }
        return Ok(false);
    }
    if !ring.is_nonzerodivisor(&d) {
        return Ok(false);
    }
    for r in ring.elements()? {
        if is_sec_element(ring, &(s.t() + &r.scale(2)))? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// The AS action on one discriminant fiber of a finite ring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiberReport {
    pub d: String,
    /// Representatives of the classes with discriminant in the class of `d`.
    pub fiber: Vec<String>,
    /// Orbits of the action, as indices into `fiber`.
    pub orbits: Vec<Vec<usize>>,
    /// AS classes acting trivially on the whole fiber.
    pub kernel: Vec<String>,
    pub kernel_size: usize,
    /// AS classes coming from `ann(d)[4]`; always contained in the kernel.
    pub ann_d4_image: Vec<String>,
    pub free: bool,
    pub transitive: bool,
    /// Sec flag per fiber class.
    pub sec: Vec<bool>,
    /// The action is free on the sec classes of the fiber.
    pub free_on_sec: bool,
    pub with_basis_orbits: usize,
    pub predicted_orbits: usize,
    #[serde(skip)]
    pub fiber_classes: Vec<usize>,
    /// `action[c][i]`: index into `fiber` of class `c` acting on `fiber[i]`.
    #[serde(skip)]
    pub action: Vec<Vec<usize>>,
}

/// Computes the AS action on the fiber over `dclass`, checking that it
/// descends to isomorphism classes and that `ann(d)[4]` acts trivially.
pub fn fiber_report(
    cls: &Classification,
    group: &AsGroup,
    dclass: &DiscClass,
) -> Result<FiberReport> {
    let ring = cls.ring();
    ring.check_same(dclass.d())?;
    let orbit: HashSet<RingElement> = unit_square_orbit(ring, dclass.d())?.into_iter().collect();
    let fiber_classes: Vec<usize> = (0..cls.len())
        .filter(|&i| orbit.contains(&cls.classes()[i].disc))
        .collect();
    let pos: HashMap<usize, usize> = fiber_classes
        .iter()
        .enumerate()
        .map(|(i, &c)| (c, i))
        .collect();

    let mut action = vec![vec![0; fiber_classes.len()]; group.order()];
    for (i, &k) in fiber_classes.iter().enumerate() {
        let members = cls.members(k);
        for (c, row) in action.iter_mut().enumerate() {
            let target = cls.class_of(&as_act(&cls.classes()[k].rep, &group.representatives()[c])?);
            row[i] = *pos
                .get(&target)
                .ok_or_else(|| Error::Invariant("action leaves the fiber".into()))?;
        }
        // every with-basis member and every coset element gives the same class
        for s in &members {
            for m in group.four_torsion() {
                let acted = as_act(s, m)?;
                if acted != s.star(&as_embed(m)?)? {
                    return Err(Error::Invariant(format!(
                        "{s} . {m} differs from {s} * (1, {m})"
                    )));
                }
                let c = group.class_of(m)?;
                if pos.get(&cls.class_of(&acted)) != Some(&action[c][i]) {
                    return Err(Error::Invariant(format!(
                        "action of {m} on {s} does not descend to classes"
                    )));
                }
            }
        }
    }

    let mut uf: Vec<usize> = (0..fiber_classes.len()).collect();
    fn find(uf: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while uf[r] != r {
            r = uf[r];
        }
        uf[x] = r;
        r
    }
    for row in &action {
        for (i, &j) in row.iter().enumerate() {
            let (a, b) = (find(&mut uf, i), find(&mut uf, j));
            if a != b {
                uf[a.max(b)] = a.min(b);
            }
        }
    }
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    let mut orbit_index = HashMap::new();
    for i in 0..fiber_classes.len() {
        let root = find(&mut uf, i);
        let o = *orbit_index.entry(root).or_insert_with(|| {
            orbits.push(Vec::new());
            orbits.len() - 1
        });
        orbits[o].push(i);
    }

    let identity_row = |row: &Vec<usize>| row.iter().enumerate().all(|(i, &j)| i == j);
    let kernel: Vec<usize> = (0..group.order())
        .filter(|&c| identity_row(&action[c]))
        .collect();
    let ann_image: BTreeSet<usize> = annihilator_four_torsion(ring, dclass.d())?
        .iter()
        .map(|a| group.class_of(a))
        .collect::<Result<_>>()?;
    if !ann_image.iter().all(|c| kernel.contains(c)) {
        return Err(Error::Invariant(format!(
            "ann({})[4] does not act trivially",
            dclass.d()
        )));
    }
    let moves = |c: usize, i: usize| action[c][i] != i;
    let free = (1..group.order()).all(|c| (0..fiber_classes.len()).all(|i| moves(c, i)));
    let sec = fiber_classes
        .iter()
        .map(|&k| is_sec_algebra(&cls.classes()[k].rep))
        .collect::<Result<Vec<bool>>>()?;
    let free_on_sec = (1..group.order()).all(|c| {
        (0..fiber_classes.len())
            .filter(|&i| sec[i])
            .all(|i| moves(c, i))
    });
    let name = |c: &usize| group.representatives()[*c].to_string();
    Ok(FiberReport {
        d: dclass.d().to_string(),
        fiber: fiber_classes
            .iter()
            .map(|&k| cls.classes()[k].rep.to_string())
            .collect(),
        transitive: orbits.len() <= 1,
        orbits,
        kernel_size: kernel.len(),
        kernel: kernel.iter().map(name).collect(),
        ann_d4_image: ann_image.iter().map(name).collect(),
        free,
        sec,
        free_on_sec,
        with_basis_orbits: with_basis_orbit_count(ring, dclass.d())?,
        predicted_orbits: predicted_orbit_count(ring, dclass.d())?,
        fiber_classes,
        action,
    })
}

/// Fiber reports for every discriminant class of a finite ring.
pub fn fiber_reports(ring: &Ring) -> Result<Vec<FiberReport>> {
    let cls = classify(ring)?;
    let group = AsGroup::new(ring)?;
    crate::disc::disc_classes(ring)?
        .classes()
        .iter()
        .map(|dc| fiber_report(&cls, &group, dc))
        .collect()
}

/// The number of `R[4]`-orbits on the with-basis algebras of discriminant
/// exactly `d`, counted by enumeration.
pub fn with_basis_orbit_count(ring: &Ring, d: &RingElement) -> Result<usize> {
    ring.check_same(d)?;
    let els = ring.elements()?;
    let torsion = four_torsion(ring)?;
    let mut seen: HashSet<(RingElement, RingElement)> = HashSet::new();
    let mut orbits = 0;
    for t in &els {
        for n in &els {
            let s = QuadAlg::new(t.clone(), n.clone())?;
            if &s.disc() != d || seen.contains(&(t.clone(), n.clone())) {
                continue;
            }
            orbits += 1;
            for m in &torsion {
                let a = as_act(&s, m)?;
                seen.insert((a.t().clone(), a.n().clone()));
            }
        }
    }
    Ok(orbits)
}

/// `|{t : t^2 ≡ d mod 4R}| * |R[4] / d R[4]|`.
pub fn predicted_orbit_count(ring: &Ring, d: &RingElement) -> Result<usize> {
    ring.check_same(d)?;
    let els = ring.elements()?;
    let target = ring.reduce_mod_multiple(d, 4);
    let roots = els
        .iter()
        .filter(|t| ring.reduce_mod_multiple(&(*t * *t), 4) == target)
        .count();
    let torsion = four_torsion(ring)?;
    let d_torsion: HashSet<RingElement> = torsion.iter().map(|a| d * a).collect();
    Ok(roots * torsion.len() / d_torsion.len())
}

/// Whether AS(R) acts freely on the sec classes over `dclass`.
pub fn check_freeness(cls: &Classification, group: &AsGroup, dclass: &DiscClass) -> Result<bool> {
    Ok(fiber_report(cls, group, dclass)?.free_on_sec)
}

/// The classification record with the `sec` flag filled in.
pub fn classification_record(cls: &Classification) -> Result<ClassificationRecord> {
    for c in cls.classes() {
        is_sec_algebra(&c.rep)?;
    }
    Ok(cls.record(|s| is_sec_algebra(s).expect("checked above")))
}
