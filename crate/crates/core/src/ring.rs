//! Exact arithmetic in the base rings: the integers and finite quotient rings
//! `(Z/n)[x]/(f)` with `f` monic.
//!
//! Every element carries a canonical representative (least nonnegative
//! residues, coefficient vectors reduced mod `n` and mod `f`), so equality is
//! equality of representatives and enumeration order is reproducible.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

const GRAMMAR: &str = "expected \"Z\", \"Z/<n>\" or \"Z/<n>[x]/(<monic poly in x>)\"";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("malformed ring spec {0:?}: {GRAMMAR}")]
    MalformedSpec(String),
    #[error("modulus must be a positive integer")]
    ZeroModulus,
    #[error("quotient polynomial {0:?} is not monic")]
    NonMonic(String),
    #[error("quotient polynomial must have degree at least 1")]
    ConstantModulus,
    #[error("malformed ring element {0:?}")]
    MalformedElement(String),
    #[error("operands belong to different rings ({0} and {1})")]
    MixedRings(String, String),
    #[error("enumeration requires a finite ring")]
    Infinite,
    #[error("the unit group of Z is not enumerated; use is_unit (units are +1 and -1)")]
    UnitsOfIntegers,
    #[error("ring is too large to enumerate")]
    TooLarge,
}

/// Description of a supported base ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingSpec {
    Integers,
    Mod(u64),
    /// `(Z/modulus)[x]/(f)` with `f = x^deg + sum(lower[i] x^i)`; `lower` has
    /// length `deg` and is reduced mod `modulus`.
    QuotientPoly {
        modulus: u64,
        lower: Vec<u64>,
    },
}

impl RingSpec {
    /// Parses `Z`, `Z/<n>` or `Z/<n>[x]/(<monic poly>)`.
    pub fn parse(text: &str) -> Result<RingSpec, RingError> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let malformed = || RingError::MalformedSpec(text.to_string());
        if compact == "Z" {
            return Ok(RingSpec::Integers);
        }
        let rest = compact.strip_prefix("Z/").ok_or_else(malformed)?;
        let (modulus_text, poly_text) = match rest.find('[') {
            None => (rest, None),
            Some(i) => {
                let tail = rest[i..].strip_prefix("[x]/(").ok_or_else(malformed)?;
                let inner = tail.strip_suffix(')').ok_or_else(malformed)?;
                (&rest[..i], Some(inner))
            }
        };
        if modulus_text.is_empty() || !modulus_text.bytes().all(|b| b.is_ascii_digit()) {
            return Err(malformed());
        }
        let modulus: u64 = modulus_text.parse().map_err(|_| malformed())?;
        if modulus == 0 {
            return Err(RingError::ZeroModulus);
        }
        let Some(poly_text) = poly_text else {
            return Ok(RingSpec::Mod(modulus));
        };
        let coeffs = parse_poly_in_x(poly_text).ok_or_else(malformed)?;
        let deg = coeffs
            .len()
            .checked_sub(1)
            .ok_or(RingError::ConstantModulus)?;
        if deg == 0 {
            return Err(RingError::ConstantModulus);
        }
        let m = BigInt::from(modulus);
        if coeffs[deg].mod_floor(&m) != BigInt::one().mod_floor(&m) {
            return Err(RingError::NonMonic(poly_text.to_string()));
        }
        let lower = coeffs[..deg]
            .iter()
            .map(|c| {
                c.mod_floor(&m)
                    .to_u64()
                    .expect("reduced below a u64 modulus")
            })
            .collect();
        Ok(RingSpec::QuotientPoly { modulus, lower })
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Integers => write!(f, "Z"),
            RingSpec::Mod(n) => write!(f, "Z/{n}"),
            RingSpec::QuotientPoly { modulus, lower } => {
                let mut full = lower.clone();
                full.push(1);
                write!(f, "Z/{modulus}[x]/({})", format_poly(&full))
            }
        }
    }
}

/// Parses a polynomial in `x` with integer coefficients, e.g. `x^2+x+1`,
/// `-3x+2`, `2*x^3`. Returns coefficients from the constant term up, with no
/// trailing zeros (the zero polynomial is an empty vector).
pub(crate) fn parse_poly_in_x(text: &str) -> Option<Vec<BigInt>> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return None;
    }
    let mut coeffs: Vec<BigInt> = Vec::new();
    let bytes = s.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let mut sign = BigInt::one();
        if bytes[i] == b'+' || bytes[i] == b'-' {
            if bytes[i] == b'-' {
                sign = -sign;
            }
            i += 1;
        } else if i != 0 {
            return None;
        }
        let start = i;
        while i < bytes.len() && bytes[i] != b'+' && bytes[i] != b'-' {
            i += 1;
        }
        let term = &s[start..i];
        let (coef, exp) = parse_term(term)?;
        if coeffs.len() <= exp {
            coeffs.resize(exp + 1, BigInt::zero());
        }
        coeffs[exp] += sign * coef;
    }
    while coeffs.last().is_some_and(|c| c.is_zero()) {
        coeffs.pop();
    }
    Some(coeffs)
}

fn parse_term(term: &str) -> Option<(BigInt, usize)> {
    if term.is_empty() {
        return None;
    }
    let Some(xpos) = term.find('x') else {
        return digits(term).map(|c| (c, 0));
    };
    let coef_text = term[..xpos].strip_suffix('*').unwrap_or(&term[..xpos]);
    let coef = if coef_text.is_empty() {
        BigInt::one()
    } else {
        digits(coef_text)?
    };
    let after = &term[xpos + 1..];
    let exp = if after.is_empty() {
        1
    } else {
        let e = after.strip_prefix('^')?;
        if e.is_empty() || !e.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        e.parse().ok()?
    };
    Some((coef, exp))
}

fn digits(s: &str) -> Option<BigInt> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// Formats nonnegative coefficients (constant term first) as `2x^2+x+1`.
fn format_poly(coeffs: &[u64]) -> String {
    let mut parts = Vec::new();
    for (e, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let part = match (e, c) {
            (0, c) => c.to_string(),
            (1, 1) => "x".to_string(),
            (1, c) => format!("{c}x"),
            (e, 1) => format!("x^{e}"),
            (e, c) => format!("{c}x^{e}"),
        };
        parts.push(part);
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join("+")
    }
}

/// Shared handle to a ring; cheap to clone.
#[derive(Debug, Clone)]
pub struct Ring(Arc<RingSpec>);

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Ring {}

impl Hash for Ring {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.hash(state)
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Repr {
    Int(BigInt),
    Residue(u64),
    Poly(Vec<u64>),
}

fn mulmod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

fn addmod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 + b as u128) % n as u128) as u64
}

fn submod(a: u64, b: u64, n: u64) -> u64 {
    addmod(a, n - b % n, n)
}

impl Ring {
    pub fn new(spec: RingSpec) -> Ring {
        Ring(Arc::new(spec))
    }

    pub fn parse(text: &str) -> Result<Ring, RingError> {
        RingSpec::parse(text).map(Ring::new)
    }

    pub fn integers() -> Ring {
        Ring::new(RingSpec::Integers)
    }

    pub fn modular(n: u64) -> Result<Ring, RingError> {
        if n == 0 {
            return Err(RingError::ZeroModulus);
        }
        Ok(Ring::new(RingSpec::Mod(n)))
    }

    pub fn spec(&self) -> &RingSpec {
        &self.0
    }

    pub fn is_finite(&self) -> bool {
        !matches!(*self.0, RingSpec::Integers)
    }

    pub fn is_integers(&self) -> bool {
        !self.is_finite()
    }

    /// Number of elements, `None` for `Z` or when it does not fit in `usize`.
    pub fn size(&self) -> Option<usize> {
        match &*self.0 {
            RingSpec::Integers => None,
            RingSpec::Mod(n) => usize::try_from(*n).ok(),
            RingSpec::QuotientPoly { modulus, lower } => {
                let n = usize::try_from(*modulus).ok()?;
                n.checked_pow(u32::try_from(lower.len()).ok()?)
            }
        }
    }

    fn elem(&self, repr: Repr) -> RingElement {
        RingElement {
            ring: self.clone(),
            repr,
        }
    }

    pub fn zero(&self) -> RingElement {
        self.from_int(0)
    }

    pub fn one(&self) -> RingElement {
        self.from_int(1)
    }

    pub fn from_int(&self, v: i64) -> RingElement {
        self.from_bigint(&BigInt::from(v))
    }

    /// Image of an integer under the structure map `Z -> R`.
    pub fn from_bigint(&self, v: &BigInt) -> RingElement {
        match &*self.0 {
            RingSpec::Integers => self.elem(Repr::Int(v.clone())),
            RingSpec::Mod(n) => self.elem(Repr::Residue(reduce_big(v, *n))),
            RingSpec::QuotientPoly { modulus, lower } => {
                let mut c = vec![0; lower.len()];
                c[0] = reduce_big(v, *modulus);
                self.elem(Repr::Poly(c))
            }
        }
    }

    /// Element with the given coefficients in `x` (constant term first),
    /// reduced mod `n` and mod `f`. Only meaningful for quotient polynomial
    /// rings; for other rings only a constant is accepted.
    pub fn from_coeffs(&self, coeffs: &[BigInt]) -> Result<RingElement, RingError> {
        match &*self.0 {
            RingSpec::QuotientPoly { modulus, .. } => {
                let raw: Vec<u64> = coeffs.iter().map(|c| reduce_big(c, *modulus)).collect();
                Ok(self.elem(Repr::Poly(self.reduce_poly(raw))))
            }
            _ => match coeffs {
                [] => Ok(self.zero()),
                [c] => Ok(self.from_bigint(c)),
                _ => Err(RingError::MalformedElement(format!(
                    "polynomial coefficients given for {self}"
                ))),
            },
        }
    }

    /// Parses an element: an integer, a polynomial in `x` (quotient
    /// polynomial rings only), or a bracketed coefficient list `[c0,c1,...]`.
    pub fn parse_element(&self, text: &str) -> Result<RingElement, RingError> {
        let bad = || RingError::MalformedElement(text.to_string());
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let coeffs = if let Some(inner) = s.strip_prefix('[').and_then(|t| t.strip_suffix(']')) {
            inner
                .split(',')
                .map(|c| c.parse::<BigInt>().map_err(|_| bad()))
                .collect::<Result<Vec<_>, _>>()?
        } else if !s.contains('x') {
            vec![s.parse::<BigInt>().map_err(|_| bad())?]
        } else {
            parse_poly_in_x(&s).ok_or_else(bad)?
        };
        self.from_coeffs(&coeffs).map_err(|_| bad())
    }

    fn reduce_poly(&self, mut c: Vec<u64>) -> Vec<u64> {
        let RingSpec::QuotientPoly { modulus, lower } = &*self.0 else {
            unreachable!("reduce_poly on a non-polynomial ring")
        };
        let n = *modulus;
        let deg = lower.len();
        // x^deg = -sum(lower[i] x^i)
        while c.len() > deg {
            let k = c.len() - 1;
            let top = c.pop().unwrap() % n;
            if top != 0 {
                for (i, &fi) in lower.iter().enumerate() {
                    let idx = k - deg + i;
                    c[idx] = submod(c[idx], mulmod(top, fi, n), n);
                }
            }
        }
        c.resize(deg, 0);
        c
    }

    /// Elements in canonical order: numeric for `Z/n`; for quotient
    /// polynomial rings, by the base-`n` number whose digits are the
    /// coefficients (constant term least significant), i.e. `0, 1, ..., x, x+1, ...`.
    pub fn elements(&self) -> Result<Vec<RingElement>, RingError> {
        if !self.is_finite() {
            return Err(RingError::Infinite);
        }
        let size = self.size().ok_or(RingError::TooLarge)?;
        Ok((0..size).map(|i| self.element_at(i)).collect())
    }

    /// Inverse of [`Ring::index_of`] for finite rings.
    pub fn element_at(&self, index: usize) -> RingElement {
        match &*self.0 {
            RingSpec::Integers => panic!("element_at on an infinite ring"),
            RingSpec::Mod(_) => self.elem(Repr::Residue(index as u64)),
            RingSpec::QuotientPoly { modulus, lower } => {
                let mut rest = index as u64;
                let c = (0..lower.len())
                    .map(|_| {
                        let d = rest % modulus;
                        rest /= modulus;
                        d
                    })
                    .collect();
                self.elem(Repr::Poly(c))
            }
        }
    }

    /// Position of `a` in [`Ring::elements`].
    pub fn index_of(&self, a: &RingElement) -> usize {
        match (&*self.0, &a.repr) {
            (RingSpec::Mod(_), Repr::Residue(v)) => *v as usize,
            (RingSpec::QuotientPoly { modulus, .. }, Repr::Poly(c)) => c
                .iter()
                .rev()
                .fold(0usize, |acc, &d| acc * *modulus as usize + d as usize),
            _ => panic!("index_of requires an element of a finite ring"),
        }
    }

    pub fn units(&self) -> Result<Vec<RingElement>, RingError> {
        if !self.is_finite() {
            return Err(RingError::UnitsOfIntegers);
        }
        Ok(self
            .elements()?
            .into_iter()
            .filter(|a| self.is_unit(a))
            .collect())
    }

    pub fn is_unit(&self, a: &RingElement) -> bool {
        self.inverse(a).is_some()
    }

    pub fn inverse(&self, a: &RingElement) -> Option<RingElement> {
        match (&*self.0, &a.repr) {
            (RingSpec::Integers, Repr::Int(v)) => (v.abs().is_one()).then(|| a.clone()),
            (RingSpec::Mod(n), Repr::Residue(v)) => {
                if *n == 1 {
                    return Some(a.clone());
                }
                let e = (*v as i128).extended_gcd(&(*n as i128));
                e.gcd.is_one().then(|| {
                    let inv = e.x.rem_euclid(*n as i128) as u64;
                    self.elem(Repr::Residue(inv))
                })
            }
            _ => {
                let one = self.one();
                self.elements().ok()?.into_iter().find(|b| a * b == one)
            }
        }
    }

    /// True iff `a * b = 0` forces `b = 0`.
    pub fn is_nonzerodivisor(&self, a: &RingElement) -> bool {
        match &a.repr {
            Repr::Int(v) => !v.is_zero(),
            _ => self
                .elements()
                .expect("finite ring")
                .iter()
                .all(|b| b.is_zero() || !(a * b).is_zero()),
        }
    }

    /// Decides `a ∈ tR`.
    pub fn ideal_contains(&self, a: &RingElement, t: &RingElement) -> bool {
        match (&a.repr, &t.repr) {
            (Repr::Int(a), Repr::Int(t)) => {
                if t.is_zero() {
                    a.is_zero()
                } else {
                    a.mod_floor(t).is_zero()
                }
            }
            _ => self
                .elements()
                .expect("finite ring")
                .iter()
                .any(|b| &(t * b) == a),
        }
    }

    /// The principal ideal `gR` of a finite ring, sorted.
    pub fn principal_ideal(&self, g: &RingElement) -> Result<Vec<RingElement>, RingError> {
        let mut ideal: Vec<RingElement> = self.elements()?.iter().map(|b| g * b).collect();
        ideal.sort();
        ideal.dedup();
        Ok(ideal)
    }

    /// Canonical representative of the coset `a + kR` where `k` is the image
    /// of a positive integer: the least element of the coset.
    pub fn reduce_mod_multiple(&self, a: &RingElement, k: u64) -> RingElement {
        match &a.repr {
            Repr::Int(v) => self.elem(Repr::Int(v.mod_floor(&BigInt::from(k)))),
            _ => {
                let kk = self.from_int(k as i64);
                self.elements()
                    .expect("finite ring")
                    .iter()
                    .map(|b| a + &(&kk * b))
                    .min()
                    .expect("nonempty ring")
            }
        }
    }

    pub(crate) fn check_same(&self, a: &RingElement) -> Result<(), RingError> {
        if &a.ring == self {
            Ok(())
        } else {
            Err(RingError::MixedRings(self.to_string(), a.ring.to_string()))
        }
    }
}

fn reduce_big(v: &BigInt, n: u64) -> u64 {
    v.mod_floor(&BigInt::from(n))
        .to_u64()
        .expect("residue below u64 modulus")
}

/// An element of a [`Ring`] in canonical form.
#[derive(Debug, Clone)]
pub struct RingElement {
    ring: Ring,
    repr: Repr,
}

impl PartialEq for RingElement {
    fn eq(&self, other: &Self) -> bool {
        self.repr == other.repr && self.ring == other.ring
    }
}

impl Eq for RingElement {}

impl Hash for RingElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.repr.hash(state)
    }
}

impl PartialOrd for RingElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic order on canonical representatives; for polynomial
/// residues the highest coefficient is most significant.
impl Ord for RingElement {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.repr, &other.repr) {
            (Repr::Int(a), Repr::Int(b)) => a.cmp(b),
            (Repr::Residue(a), Repr::Residue(b)) => a.cmp(b),
            (Repr::Poly(a), Repr::Poly(b)) => a.iter().rev().cmp(b.iter().rev()),
            (a, b) => discriminant_rank(a).cmp(&discriminant_rank(b)),
        }
    }
}

fn discriminant_rank(r: &Repr) -> u8 {
    match r {
        Repr::Int(_) => 0,
        Repr::Residue(_) => 1,
        Repr::Poly(_) => 2,
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Int(v) => write!(f, "{v}"),
            Repr::Residue(v) => write!(f, "{v}"),
            Repr::Poly(c) => f.write_str(&format_poly(c)),
        }
    }
}

impl RingElement {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Int(v) => v.is_zero(),
            Repr::Residue(v) => *v == 0,
            Repr::Poly(c) => c.iter().all(|&d| d == 0),
        }
    }

    /// The integer value, for elements of `Z`.
    pub fn as_integer(&self) -> Option<&BigInt> {
        match &self.repr {
            Repr::Int(v) => Some(v),
            _ => None,
        }
    }

    /// Coefficients (constant term first) for quotient polynomial rings;
    /// a single residue for `Z/n`.
    pub fn coefficients(&self) -> Vec<BigInt> {
        match &self.repr {
            Repr::Int(v) => vec![v.clone()],
            Repr::Residue(v) => vec![BigInt::from(*v)],
            Repr::Poly(c) => c.iter().map(|&d| BigInt::from(d)).collect(),
        }
    }

    pub fn try_add(&self, other: &RingElement) -> Result<RingElement, RingError> {
        self.ring.check_same(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn try_sub(&self, other: &RingElement) -> Result<RingElement, RingError> {
        self.ring.check_same(other)?;
        Ok(self.add_unchecked(&other.neg_unchecked()))
    }

    pub fn try_mul(&self, other: &RingElement) -> Result<RingElement, RingError> {
        self.ring.check_same(other)?;
        Ok(self.mul_unchecked(other))
    }

    /// Equality that rejects elements of different rings.
    pub fn try_eq(&self, other: &RingElement) -> Result<bool, RingError> {
        self.ring.check_same(other)?;
        Ok(self.repr == other.repr)
    }

    pub fn pow(&self, e: u32) -> RingElement {
        (0..e).fold(self.ring.one(), |acc, _| &acc * self)
    }

    /// Multiplication by an integer.
    pub fn scale(&self, k: i64) -> RingElement {
        self * &self.ring.from_int(k)
    }

    fn add_unchecked(&self, other: &RingElement) -> RingElement {
        let repr = match (&*self.ring.0, &self.repr, &other.repr) {
            (_, Repr::Int(a), Repr::Int(b)) => Repr::Int(a + b),
            (RingSpec::Mod(n), Repr::Residue(a), Repr::Residue(b)) => {
                Repr::Residue(addmod(*a, *b, *n))
            }
            (RingSpec::QuotientPoly { modulus, .. }, Repr::Poly(a), Repr::Poly(b)) => Repr::Poly(
                a.iter()
                    .zip(b)
                    .map(|(&x, &y)| addmod(x, y, *modulus))
                    .collect(),
            ),
            _ => unreachable!("representation does not match ring"),
        };
        self.ring.elem(repr)
    }

    fn neg_unchecked(&self) -> RingElement {
        let repr = match (&*self.ring.0, &self.repr) {
            (_, Repr::Int(a)) => Repr::Int(-a),
            (RingSpec::Mod(n), Repr::Residue(a)) => Repr::Residue(submod(0, *a, *n)),
            (RingSpec::QuotientPoly { modulus, .. }, Repr::Poly(a)) => {
                Repr::Poly(a.iter().map(|&x| submod(0, x, *modulus)).collect())
            }
            _ => unreachable!("representation does not match ring"),
        };
        self.ring.elem(repr)
    }

    fn mul_unchecked(&self, other: &RingElement) -> RingElement {
        match (&*self.ring.0, &self.repr, &other.repr) {
            (_, Repr::Int(a), Repr::Int(b)) => self.ring.elem(Repr::Int(a * b)),
            (RingSpec::Mod(n), Repr::Residue(a), Repr::Residue(b)) => {
                self.ring.elem(Repr::Residue(mulmod(*a, *b, *n)))
            }
            (RingSpec::QuotientPoly { modulus, .. }, Repr::Poly(a), Repr::Poly(b)) => {
                let n = *modulus;
                let mut prod = vec![0u64; a.len() + b.len()];
                for (i, &x) in a.iter().enumerate() {
                    if x == 0 {
                        continue;
                    }
                    for (j, &y) in b.iter().enumerate() {
                        prod[i + j] = addmod(prod[i + j], mulmod(x, y, n), n);
                    }
                }
                self.ring.elem(Repr::Poly(self.ring.reduce_poly(prod)))
            }
            _ => unreachable!("representation does not match ring"),
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $try:ident) => {
        impl $trait<&RingElement> for &RingElement {
            type Output = RingElement;
            /// Panics if the operands belong to different rings; use the
            /// `try_*` methods to get an error instead.
            fn $method(self, rhs: &RingElement) -> RingElement {
                self.$try(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $trait<RingElement> for RingElement {
            type Output = RingElement;
            fn $method(self, rhs: RingElement) -> RingElement {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&RingElement> for RingElement {
            type Output = RingElement;
            fn $method(self, rhs: &RingElement) -> RingElement {
                (&self).$method(rhs)
            }
        }
        impl $trait<RingElement> for &RingElement {
            type Output = RingElement;
            fn $method(self, rhs: RingElement) -> RingElement {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        self.neg_unchecked()
    }
}

impl Neg for RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        self.neg_unchecked()
    }
}
