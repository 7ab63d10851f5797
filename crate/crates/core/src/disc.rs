//! Discriminants over a ring with trivialized line bundle: the square
//! condition modulo `4R`, classes modulo unit squares, the discriminant
//! monoid and rank-one quadratic forms.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::monoid::FiniteCommMonoid;
use crate::quad::{classify, Classification, QuadAlg};
use crate::ring::{Ring, RingElement};
use crate::{Error, Result};

/// `sq(t + 2R) = t^2 + 4R`, returned as the least element of the coset.
pub fn sq_map(ring: &Ring, t: &RingElement) -> RingElement {
    ring.reduce_mod_multiple(&(t * t), 4)
}

/// Least representative of `t + 2R`.
pub fn reduce_mod_2(ring: &Ring, t: &RingElement) -> RingElement {
    ring.reduce_mod_multiple(t, 2)
}

/// Whether `a - b ∈ 4R`.
pub fn congruent_mod_4(ring: &Ring, a: &RingElement, b: &RingElement) -> bool {
    ring.reduce_mod_multiple(a, 4) == ring.reduce_mod_multiple(b, 4)
}

/// A witness `t` (reduced mod `2R`) with `t^2 ≡ d mod 4R`, if `d` is a
/// discriminant. Over `Z` this is `d ≡ 0, 1 mod 4`.
pub fn is_discriminant(ring: &Ring, d: &RingElement) -> Result<Option<RingElement>> {
    ring.check_same(d)?;
    if ring.is_integers() {
        let t = reduce_mod_2(ring, d);
        return Ok(congruent_mod_4(ring, &(&t * &t), d).then_some(t));
    }
    let target = ring.reduce_mod_multiple(d, 4);
    let mut witnesses: Vec<RingElement> = ring
        .elements()?
        .into_iter()
        .filter(|t| sq_map(ring, t) == target)
        .map(|t| reduce_mod_2(ring, &t))
        .collect();
    witnesses.sort();
    Ok(witnesses.into_iter().next())
}

/// A discriminant `d` together with a square-root witness mod `4R`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DiscClass {
    d: RingElement,
    witness_t: RingElement,
}

impl DiscClass {
    /// Validates the witness and stores it reduced mod `2R`.
    pub fn new(d: RingElement, witness_t: RingElement) -> Result<DiscClass> {
        let ring = d.ring().clone();
        ring.check_same(&witness_t)?;
        if !congruent_mod_4(&ring, &(&witness_t * &witness_t), &d) {
            return Err(Error::BadWitness {
                d: d.to_string(),
                witness: witness_t.to_string(),
            });
        }
        Ok(DiscClass {
            witness_t: reduce_mod_2(&ring, &witness_t),
            d,
        })
    }

    /// The discriminant `d` with the least witness.
    pub fn of(d: RingElement) -> Result<DiscClass> {
        let ring = d.ring().clone();
        match is_discriminant(&ring, &d)? {
            Some(t) => Ok(DiscClass { d, witness_t: t }),
            None => Err(Error::NotADiscriminant(d.to_string())),
        }
    }

    pub fn ring(&self) -> &Ring {
        self.d.ring()
    }

    pub fn d(&self) -> &RingElement {
        &self.d
    }

    pub fn witness_t(&self) -> &RingElement {
        &self.witness_t
    }

    /// Rebuilds a class from its serialized form, re-validating the witness.
    pub fn from_record(ring: &Ring, rec: &DiscClassRecord) -> Result<DiscClass> {
        DiscClass::new(
            ring.parse_element(&rec.d)?,
            ring.parse_element(&rec.witness_t)?,
        )
    }
}

/// `{u^2 d : u ∈ R^x}`, sorted. For `Z` this is `{d}`.
pub fn unit_square_orbit(ring: &Ring, d: &RingElement) -> Result<Vec<RingElement>> {
    if ring.is_integers() {
        return Ok(vec![d.clone()]);
    }
    let orbit: BTreeSet<RingElement> = ring.units()?.iter().map(|u| &(u * u) * d).collect();
    Ok(orbit.into_iter().collect())
}

/// Discriminant classes of a finite ring modulo unit squares, as a monoid
/// under multiplication.
#[derive(Debug, Clone)]
pub struct DiscClasses {
    ring: Ring,
    classes: Vec<DiscClass>,
    class_of: HashMap<RingElement, usize>,
    monoid: FiniteCommMonoid,
}

/// Enumerates the discriminant values `t^2 - 4n` of a finite ring and
/// groups them into unit-square orbits, each represented by its least
/// element.
pub fn disc_classes(ring: &Ring) -> Result<DiscClasses> {
    let elements = ring.elements()?;
    let values: BTreeSet<RingElement> = elements
        .iter()
        .flat_map(|t| elements.iter().map(move |n| &(t * t) - &n.scale(4)))
        .collect();
    let mut classes: Vec<DiscClass> = Vec::new();
    let mut class_of = HashMap::new();
    for d in &values {
        if class_of.contains_key(d) {
            continue;
        }
        let idx = classes.len();
        for e in unit_square_orbit(ring, d)? {
            class_of.insert(e, idx);
        }
        classes.push(DiscClass::of(d.clone())?);
    }
    let labels = classes.iter().map(|c| c.d.to_string()).collect();
    let identity = class_of[&ring.one()];
    let monoid = FiniteCommMonoid::from_fn(labels, identity, |a, b| {
        class_of[&(&classes[a].d * &classes[b].d)]
    })?;
    Ok(DiscClasses {
        ring: ring.clone(),
        classes,
        class_of,
        monoid,
    })
}

impl DiscClasses {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn classes(&self) -> &[DiscClass] {
        &self.classes
    }

    pub fn monoid(&self) -> &FiniteCommMonoid {
        &self.monoid
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Index of the class of `d`.
    pub fn class_of(&self, d: &RingElement) -> Result<usize> {
        self.ring.check_same(d)?;
        self.class_of
            .get(d)
            .copied()
            .ok_or_else(|| Error::NotADiscriminant(d.to_string()))
    }

    pub fn identity_class(&self) -> usize {
        self.monoid.identity
    }

    pub fn absorbing_class(&self) -> usize {
        self.class_of[&self.ring.zero()]
    }

    pub fn record(&self) -> DiscClassesRecord {
        let absorbing = self.absorbing_class();
        DiscClassesRecord {
            ring: self.ring.to_string(),
            disc_classes: self
                .classes
                .iter()
                .enumerate()
                .map(|(i, c)| DiscClassRecord {
                    d: c.d.to_string(),
                    witness_t: c.witness_t.to_string(),
                    absorbing: i == absorbing,
                })
                .collect(),
        }
    }
}

/// Index of the class of `d` in [`disc_classes`].
pub fn disc_class_of(ring: &Ring, d: &RingElement) -> Result<usize> {
    disc_classes(ring)?.class_of(d)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiscClassesRecord {
    pub ring: String,
    pub disc_classes: Vec<DiscClassRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiscClassRecord {
    pub d: String,
    pub witness_t: String,
    pub absorbing: bool,
}

/// Result of checking that `disc` is a surjective monoid homomorphism from
/// isomorphism classes of algebras to discriminant classes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiscHomReport {
    pub ring: String,
    pub fibers: Vec<FiberSize>,
    pub homomorphism: bool,
    pub surjective: bool,
    pub violations: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiberSize {
    pub d: String,
    pub classes: usize,
}

impl DiscHomReport {
    pub fn is_ok(&self) -> bool {
        self.homomorphism && self.surjective && self.violations.is_empty()
    }
}

/// The map from algebra classes to discriminant classes.
pub fn disc_map(cls: &Classification, discs: &DiscClasses) -> Result<Vec<usize>> {
    cls.classes()
        .iter()
        .map(|c| discs.class_of(&c.disc))
        .collect()
}

pub fn disc_hom_check(ring: &Ring) -> Result<DiscHomReport> {
    let cls = classify(ring)?;
    let discs = disc_classes(ring)?;
    disc_hom_check_with(&cls, &discs)
}

pub fn disc_hom_check_with(cls: &Classification, discs: &DiscClasses) -> Result<DiscHomReport> {
    let ring = cls.ring();
    let map = disc_map(cls, discs)?;
    let dm = discs.monoid();
    let mut violations = Vec::new();

    if map[cls.identity_class()] != dm.identity {
        violations.push("identity class does not map to the class of 1".to_string());
    }
    for a in 0..cls.len() {
        for b in a..cls.len() {
            if map[cls.product(a, b)] != dm.op(map[a], map[b]) {
                violations.push(format!(
                    "disc({} * {}) != disc * disc",
                    cls.classes()[a].rep,
                    cls.classes()[b].rep
                ));
            }
        }
        // the trace of the representative witnesses its discriminant
        let c = &cls.classes()[a];
        if sq_map(ring, c.rep.t()) != ring.reduce_mod_multiple(&c.disc, 4) {
            violations.push(format!(
                "trace of {} is not a square root of its disc",
                c.rep
            ));
        }
    }
    let homomorphism = violations.is_empty();

    // surjectivity: build R[x]/(x^2 - tx + n) from each witness
    let elements = ring.elements()?;
    let mut surjective = true;
    for (i, dc) in discs.classes().iter().enumerate() {
        let t = dc.witness_t();
        let target = &(t * t) - dc.d();
        let n = elements.iter().find(|n| n.scale(4) == target);
        let hit = match n {
            Some(n) => {
                let s = QuadAlg::new(t.clone(), n.clone())?;
                s.disc() == *dc.d() && map[cls.class_of(&s)] == i
            }
            None => false,
        };
        if !hit {
            surjective = false;
            violations.push(format!("no algebra constructed over disc {}", dc.d()));
        }
    }
    let fibers = discs
        .classes()
        .iter()
        .enumerate()
        .map(|(i, dc)| FiberSize {
            d: dc.d().to_string(),
            classes: map.iter().filter(|&&m| m == i).count(),
        })
        .collect();
    Ok(DiscHomReport {
        ring: ring.to_string(),
        fibers,
        homomorphism,
        surjective,
        violations,
    })
}

/// The quadratic form `Q(e) = a` on a free module of rank one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rank1Form {
    pub a: RingElement,
}

impl Rank1Form {
    pub fn new(a: RingElement) -> Rank1Form {
        Rank1Form { a }
    }

    /// Tensor product of forms: `Q ⊗ Q'` has value `a a'`.
    pub fn tensor(&self, other: &Rank1Form) -> Rank1Form {
        Rank1Form::new(&self.a * &other.a)
    }

    /// Nonsingular: `a` is a unit.
    pub fn is_nonsingular(&self) -> bool {
        self.a.ring().is_unit(&self.a)
    }

    /// The image `aR`, for finite rings.
    pub fn image_ideal(&self) -> Result<Vec<RingElement>> {
        Ok(self.a.ring().principal_ideal(&self.a)?)
    }
}

/// Similarity class id of every element of a finite ring: the least
/// element of its unit orbit.
fn similarity_classes(ring: &Ring) -> Result<Vec<RingElement>> {
    let units = ring.units()?;
    Ok(ring
        .elements()?
        .iter()
        .map(|a| units.iter().map(|u| u * a).min().expect("1 is a unit"))
        .collect())
}

/// Forms `a` and `b` are similar iff `b = u a` for a unit `u`.
pub fn forms_similar(ring: &Ring, a: &Rank1Form, b: &Rank1Form) -> Result<bool> {
    let sim = similarity_classes(ring)?;
    Ok(sim[ring.index_of(&a.a)] == sim[ring.index_of(&b.a)])
}

/// Brute force: `f ⊗ g ~ f ⊗ h` implies `g ~ h` for all forms `g, h`.
pub fn form_is_cancellative(ring: &Ring, f: &Rank1Form) -> Result<bool> {
    ring.check_same(&f.a)?;
    let sim = similarity_classes(ring)?;
    let elements = ring.elements()?;
    let class = |x: &RingElement| &sim[ring.index_of(x)];
    for g in &elements {
        for h in &elements {
            if class(&(&f.a * g)) == class(&(&f.a * h)) && class(g) != class(h) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Semi-nondegenerate: `a` is a nonzerodivisor.
pub fn form_semi_nondegenerate(ring: &Ring, f: &Rank1Form) -> Result<bool> {
    ring.check_same(&f.a)?;
    if !ring.is_finite() {
        return Err(crate::RingError::Infinite.into());
    }
    Ok(ring.is_nonzerodivisor(&f.a))
}
