//! Free quadratic algebras `R[x]/(x^2 - t x + n)` with basis `1, x`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::monoid::FiniteCommMonoid;
use crate::ring::{Ring, RingElement, RingError};
use crate::{Error, Result};

/// The algebra `R[x]/(x^2 - t x + n)`; `t` and `n` are the trace and norm
/// of `x`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadAlg {
    t: RingElement,
    n: RingElement,
}

impl QuadAlg {
    pub fn new(t: RingElement, n: RingElement) -> Result<QuadAlg> {
        t.ring().clone().check_same(&n)?;
        Ok(QuadAlg { t, n })
    }

    pub fn from_ints(ring: &Ring, t: i64, n: i64) -> QuadAlg {
        QuadAlg {
            t: ring.from_int(t),
            n: ring.from_int(n),
        }
    }

    /// `R x R = R[x]/(x^2 - x)`, the identity for `*`.
    pub fn identity(ring: &Ring) -> QuadAlg {
        QuadAlg::from_ints(ring, 1, 0)
    }

    /// `R[x]/(x^2)`, the absorbing element for `*`.
    pub fn absorbing(ring: &Ring) -> QuadAlg {
        QuadAlg::from_ints(ring, 0, 0)
    }

    /// The representative `S(d)` over `Z` of discriminant `d = 0, 1 mod 4`:
    /// `Z[x]/(x^2)` for `d = 0`, `Z[x]/(x^2 - sqrt(d) x)` for a nonzero
    /// square and `Z[(d + sqrt d)/2]` otherwise.
    pub fn integral_with_disc(d: &BigInt) -> Result<QuadAlg> {
        let z = Ring::integers();
        let r = d.mod_floor(&BigInt::from(4));
        if !(r.is_zero() || r == BigInt::from(1)) {
            return Err(Error::NotADiscriminant(d.to_string()));
        }
        if d.is_zero() {
            return Ok(QuadAlg::absorbing(&z));
        }
        if !d.is_negative() {
            let root = d.sqrt();
            if &(&root * &root) == d {
                return Ok(QuadAlg {
                    t: z.from_bigint(&root),
                    n: z.zero(),
                });
            }
        }
        let n = (d * d - d) / BigInt::from(4);
        Ok(QuadAlg {
            t: z.from_bigint(d),
            n: z.from_bigint(&n),
        })
    }

    pub fn ring(&self) -> &Ring {
        self.t.ring()
    }

    pub fn t(&self) -> &RingElement {
        &self.t
    }

    pub fn n(&self) -> &RingElement {
        &self.n
    }

    /// `t^2 - 4n`.
    pub fn disc(&self) -> RingElement {
        &(&self.t * &self.t) - &self.n.scale(4)
    }

    /// `(t, n) * (s, m) = (st, m t^2 + n s^2 - 4nm)`.
    pub fn star(&self, other: &QuadAlg) -> Result<QuadAlg> {
        self.ring().clone().check_same(other.t())?;
        let (t, n, s, m) = (&self.t, &self.n, &other.t, &other.n);
        let tt = t * t;
        let ss = s * s;
        let norm = &(&(m * &tt) + &(n * &ss)) - &(n * m).scale(4);
        Ok(QuadAlg { t: s * t, n: norm })
    }

    /// Separable iff the discriminant is a unit.
    pub fn is_separable(&self) -> bool {
        self.ring().is_unit(&self.disc())
    }

    /// The algebra obtained from the new generator `u(x + r)`:
    /// `(u(t + 2r), u^2(n + tr + r^2))`.
    pub fn apply(&self, g: &BasisChange) -> Result<QuadAlg> {
        self.ring().clone().check_same(&g.u)?;
        let (t, n, u, r) = (&self.t, &self.n, &g.u, &g.r);
        let new_t = u * &(t + &r.scale(2));
        let new_n = &(u * u) * &(&(n + &(t * r)) + &(r * r));
        Ok(QuadAlg { t: new_t, n: new_n })
    }

    /// A basis change `g` with `self.apply(g) == other`, if one exists.
    /// Exhaustive over `R^x x R` for finite rings; over `Z` the unit is
    /// `+1` or `-1` and `r` is then determined by the trace.
    pub fn isomorphism_to(&self, other: &QuadAlg) -> Result<Option<BasisChange>> {
        let ring = self.ring().clone();
        ring.check_same(other.t())?;
        if ring.is_integers() {
            let t = self.t.as_integer().expect("integer element");
            let t2 = other.t.as_integer().expect("integer element");
            for u in [1i64, -1] {
                let diff = BigInt::from(u) * t2 - t;
                if diff.is_odd() {
                    continue;
                }
                let g = BasisChange {
                    u: ring.from_int(u),
                    r: ring.from_bigint(&(diff / 2)),
                };
                if &self.apply(&g)? == other {
                    return Ok(Some(g));
                }
            }
            return Ok(None);
        }
        for g in BasisChange::all(&ring)? {
            if &self.apply(&g)? == other {
                return Ok(Some(g));
            }
        }
        Ok(None)
    }

    pub fn is_isomorphic(&self, other: &QuadAlg) -> Result<bool> {
        Ok(self.isomorphism_to(other)?.is_some())
    }

    pub fn element(&self, a: RingElement, b: RingElement) -> Result<AlgElement> {
        self.ring().clone().check_same(&a)?;
        self.ring().clone().check_same(&b)?;
        Ok(AlgElement {
            alg: self.clone(),
            a,
            b,
        })
    }

    /// The generator `x`.
    pub fn x(&self) -> AlgElement {
        AlgElement {
            alg: self.clone(),
            a: self.ring().zero(),
            b: self.ring().one(),
        }
    }

    /// `S * S` is isomorphic to `R x R` for separable `S`; this checks it.
    pub fn separable_square_check(&self) -> Result<bool> {
        if !self.is_separable() {
            return Err(Error::NotSeparable(self.disc().to_string()));
        }
        self.star(self)?
            .is_isomorphic(&QuadAlg::identity(self.ring()))
    }
}

impl PartialOrd for QuadAlg {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuadAlg {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.t, &self.n).cmp(&(&other.t, &other.n))
    }
}

impl fmt::Display for QuadAlg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.t, self.n)
    }
}

/// The element `a + b x` of a [`QuadAlg`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgElement {
    alg: QuadAlg,
    pub a: RingElement,
    pub b: RingElement,
}

impl AlgElement {
    pub fn algebra(&self) -> &QuadAlg {
        &self.alg
    }

    fn same_algebra(&self, other: &AlgElement) -> Result<()> {
        if self.alg == other.alg {
            Ok(())
        } else {
            Err(RingError::MixedRings(self.alg.to_string(), other.alg.to_string()).into())
        }
    }

    pub fn add(&self, other: &AlgElement) -> Result<AlgElement> {
        self.same_algebra(other)?;
        Ok(AlgElement {
            alg: self.alg.clone(),
            a: &self.a + &other.a,
            b: &self.b + &other.b,
        })
    }

    pub fn sub(&self, other: &AlgElement) -> Result<AlgElement> {
        self.same_algebra(other)?;
        Ok(AlgElement {
            alg: self.alg.clone(),
            a: &self.a - &other.a,
            b: &self.b - &other.b,
        })
    }

    /// `(a + bx)(c + dx) = (ac - bdn) + (ad + bc + bdt)x`.
    pub fn mul(&self, other: &AlgElement) -> Result<AlgElement> {
        self.same_algebra(other)?;
        let (t, n) = (&self.alg.t, &self.alg.n);
        let (a, b, c, d) = (&self.a, &self.b, &other.a, &other.b);
        let bd = b * d;
        Ok(AlgElement {
            alg: self.alg.clone(),
            a: &(a * c) - &(&bd * n),
            b: &(&(a * d) + &(b * c)) + &(&bd * t),
        })
    }

    /// The standard involution `a + bx -> (a + bt) - bx`.
    pub fn involution(&self) -> AlgElement {
        AlgElement {
            alg: self.alg.clone(),
            a: &self.a + &(&self.b * &self.alg.t),
            b: -&self.b,
        }
    }

    /// `2a + bt`.
    pub fn trd(&self) -> RingElement {
        &self.a.scale(2) + &(&self.b * &self.alg.t)
    }

    /// `a^2 + abt + b^2 n`.
    pub fn nrd(&self) -> RingElement {
        let (a, b) = (&self.a, &self.b);
        &(&(a * a) + &(&(a * b) * &self.alg.t)) + &(&(b * b) * &self.alg.n)
    }

    pub fn scalar(&self, r: &RingElement) -> AlgElement {
        AlgElement {
            alg: self.alg.clone(),
            a: r.clone(),
            b: self.alg.ring().zero(),
        }
    }
}

/// The change of generator `x -> u(x + r)` with `u` a unit.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BasisChange {
    u: RingElement,
    r: RingElement,
}

impl BasisChange {
    pub fn new(u: RingElement, r: RingElement) -> Result<BasisChange> {
        u.ring().clone().check_same(&r)?;
        if !u.ring().is_unit(&u) {
            return Err(Error::NotAUnit(u.to_string()));
        }
        Ok(BasisChange { u, r })
    }

    pub fn identity(ring: &Ring) -> BasisChange {
        BasisChange {
            u: ring.one(),
            r: ring.zero(),
        }
    }

    pub fn u(&self) -> &RingElement {
        &self.u
    }

    pub fn r(&self) -> &RingElement {
        &self.r
    }

    /// Every basis change of a finite ring: units in the outer loop.
    pub fn all(ring: &Ring) -> Result<Vec<BasisChange>> {
        let elements = ring.elements()?;
        let units = ring.units()?;
        Ok(units
            .iter()
            .flat_map(|u| {
                elements.iter().map(move |r| BasisChange {
                    u: u.clone(),
                    r: r.clone(),
                })
            })
            .collect())
    }

    /// The inverse change `x -> u^-1 (x - ur)`.
    pub fn inverse(&self) -> BasisChange {
        let ring = self.u.ring();
        let inv = ring.inverse(&self.u).expect("u is a unit");
        BasisChange {
            r: -(&self.u * &self.r),
            u: inv,
        }
    }

    /// Given `S' = S.apply(g)` and `T' = T.apply(h)`, the basis change `k`
    /// with `S' * T' = (S * T).apply(k)`: `k = (uv, qt + rs + 2qr)` where
    /// `g = (u, r)`, `h = (v, q)` and `t, s` are the traces of `S, T`.
    pub fn product(s: &QuadAlg, t: &QuadAlg, g: &BasisChange, h: &BasisChange) -> BasisChange {
        let (u, r, v, q) = (&g.u, &g.r, &h.u, &h.r);
        let shift = &(&(q * s.t()) + &(r * t.t())) + &(q * r).scale(2);
        BasisChange { u: u * v, r: shift }
    }
}

/// An isomorphism class of free quadratic algebras over a finite ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoClass {
    /// Lexicographically least `(t, n)` in the orbit.
    pub rep: QuadAlg,
    pub orbit_size: usize,
    pub disc: RingElement,
    pub separable: bool,
}

/// All isomorphism classes of free quadratic algebras over a finite ring,
/// i.e. the orbits of `{x -> u(x + r)}` on `R^2`.
#[derive(Debug, Clone)]
pub struct Classification {
    ring: Ring,
    elements: Vec<RingElement>,
    classes: Vec<IsoClass>,
    members: Vec<Vec<usize>>,
    class_of_pair: Vec<usize>,
}

/// Classifies the free quadratic algebras over a finite ring.
pub fn classify(ring: &Ring) -> Result<Classification> {
    let elements = ring.elements()?;
    let size = elements.len();
    let group = BasisChange::all(ring)?;
    let pair_index = |s: &QuadAlg| ring.index_of(s.t()) * size + ring.index_of(s.n());
    let mut class_of_pair = vec![usize::MAX; size * size];
    let mut classes = Vec::new();
    let mut members = Vec::new();
    // pairs are visited in lexicographic order, so the first unvisited pair
    // is the least element of its orbit
    for p in 0..size * size {
        if class_of_pair[p] != usize::MAX {
            continue;
        }
        let rep = QuadAlg {
            t: elements[p / size].clone(),
            n: elements[p % size].clone(),
        };
        let idx = classes.len();
        let mut orbit = Vec::new();
        for g in &group {
            let q = pair_index(&rep.apply(g)?);
            if class_of_pair[q] == usize::MAX {
                class_of_pair[q] = idx;
                orbit.push(q);
            } else if class_of_pair[q] != idx {
                return Err(Error::Invariant(format!(
                    "orbit of {rep} meets another orbit"
                )));
            }
        }
        orbit.sort_unstable();
        let disc = rep.disc();
        classes.push(IsoClass {
            separable: ring.is_unit(&disc),
            disc,
            orbit_size: orbit.len(),
            rep,
        });
        members.push(orbit);
    }
    Ok(Classification {
        ring: ring.clone(),
        elements,
        classes,
        members,
        class_of_pair,
    })
}

/// The monoid of isomorphism classes under `*`.
pub fn quad_monoid(ring: &Ring) -> Result<FiniteCommMonoid> {
    classify(ring)?.monoid()
}

impl Classification {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn classes(&self) -> &[IsoClass] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    fn pair(&self, index: usize) -> QuadAlg {
        let size = self.elements.len();
        QuadAlg {
            t: self.elements[index / size].clone(),
            n: self.elements[index % size].clone(),
        }
    }

    /// Index of the class containing `s`.
    pub fn class_of(&self, s: &QuadAlg) -> usize {
        let size = self.elements.len();
        self.class_of_pair[self.ring.index_of(s.t()) * size + self.ring.index_of(s.n())]
    }

    /// All with-basis algebras in a class, in lexicographic order.
    pub fn members(&self, class: usize) -> Vec<QuadAlg> {
        self.members[class].iter().map(|&p| self.pair(p)).collect()
    }

    pub fn identity_class(&self) -> usize {
        self.class_of(&QuadAlg::identity(&self.ring))
    }

    pub fn absorbing_class(&self) -> usize {
        self.class_of(&QuadAlg::absorbing(&self.ring))
    }

    /// Product of classes via representatives.
    pub fn product(&self, a: usize, b: usize) -> usize {
        let s = self.classes[a]
            .rep
            .star(&self.classes[b].rep)
            .expect("same ring");
        self.class_of(&s)
    }

    /// The class monoid, validated.
    pub fn monoid(&self) -> Result<FiniteCommMonoid> {
        let labels = self.classes.iter().map(|c| c.rep.to_string()).collect();
        Ok(FiniteCommMonoid::from_fn(
            labels,
            self.identity_class(),
            |a, b| self.product(a, b),
        )?)
    }

    /// Checks that the with-basis product descends to classes: for every
    /// pair of with-basis algebras, the class of the product depends only
    /// on the classes of the factors.
    pub fn check_product_well_defined(&self) -> Result<()> {
        let size = self.elements.len();
        let all: Vec<QuadAlg> = (0..size * size).map(|p| self.pair(p)).collect();
        for (i, s) in all.iter().enumerate() {
            for (j, t) in all.iter().enumerate().skip(i) {
                let expected = self.product(self.class_of_pair[i], self.class_of_pair[j]);
                if self.class_of(&s.star(t)?) != expected {
                    return Err(Error::Invariant(format!(
                        "product of {s} and {t} lands outside the class product"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// JSON classification record.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationRecord {
    pub ring: String,
    pub classes: Vec<ClassRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassRecord {
    pub t: String,
    pub n: String,
    pub orbit_size: usize,
    pub disc: String,
    pub separable: bool,
    pub sec: bool,
}

impl Classification {
    /// The classification record; `sec` is evaluated per representative.
    pub fn record(&self, sec: impl Fn(&QuadAlg) -> bool) -> ClassificationRecord {
        ClassificationRecord {
            ring: self.ring.to_string(),
            classes: self
                .classes
                .iter()
                .map(|c| ClassRecord {
                    t: c.rep.t().to_string(),
                    n: c.rep.n().to_string(),
                    orbit_size: c.orbit_size,
                    disc: c.disc.to_string(),
                    separable: c.separable,
                    sec: sec(&c.rep),
                })
                .collect(),
        }
    }
}
