use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// A multivariate polynomial over `Z`.
///
/// Only variables that occur in some term are kept, sorted by name, and
/// zero coefficients are never stored, so structural equality is equality
/// of polynomials.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl MultiPoly {
    pub fn zero() -> MultiPoly {
        MultiPoly::default()
    }

    pub fn one() -> MultiPoly {
        MultiPoly::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> MultiPoly {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        MultiPoly {
            vars: Vec::new(),
            terms,
        }
    }

    pub fn var(name: &str) -> MultiPoly {
        MultiPoly {
            vars: vec![name.to_string()],
            terms: BTreeMap::from([(vec![1], BigInt::one())]),
        }
    }

    /// Builds `vars` at once, e.g. `let [t, n] = MultiPoly::vars(["t", "n"]);`.
    pub fn vars<const K: usize>(names: [&str; K]) -> [MultiPoly; K] {
        names.map(MultiPoly::var)
    }

    pub fn variables(&self) -> &[String] {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Total degree; zero for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    /// Terms as (exponents aligned with [`variables`](Self::variables), coefficient).
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BigInt)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    /// The coefficient of the monomial given as `(variable, exponent)` pairs.
    pub fn coefficient(&self, monomial: &[(&str, u32)]) -> BigInt {
        let mut exps = vec![0; self.vars.len()];
        for (name, e) in monomial {
            match self.vars.iter().position(|v| v == name) {
                Some(i) => exps[i] += e,
                None if *e == 0 => {}
                None => return BigInt::zero(),
            }
        }
        self.terms.get(&exps).cloned().unwrap_or_default()
    }

    fn from_parts(vars: Vec<String>, terms: BTreeMap<Vec<u32>, BigInt>) -> MultiPoly {
        let terms: BTreeMap<Vec<u32>, BigInt> =
            terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let used: Vec<usize> = (0..vars.len())
            .filter(|&i| terms.keys().any(|e| e[i] > 0))
            .collect();
        if used.len() == vars.len() {
            return MultiPoly { vars, terms };
        }
        MultiPoly {
            vars: used.iter().map(|&i| vars[i].clone()).collect(),
            terms: terms
                .into_iter()
                .map(|(e, c)| (used.iter().map(|&i| e[i]).collect(), c))
                .collect(),
        }
    }

    /// Terms re-indexed against a sorted superset of the variables.
    fn embed(&self, vars: &[String]) -> impl Iterator<Item = (Vec<u32>, &BigInt)> + '_ {
        let map: Vec<usize> = self
            .vars
            .iter()
            .map(|v| vars.binary_search(v).expect("superset"))
            .collect();
        let width = vars.len();
        self.terms.iter().map(move |(e, c)| {
            let mut out = vec![0; width];
            for (i, &k) in e.iter().enumerate() {
                out[map[i]] = k;
            }
            (out, c)
        })
    }

    fn union_vars(&self, other: &MultiPoly) -> Vec<String> {
        let set: BTreeSet<&String> = self.vars.iter().chain(&other.vars).collect();
        set.into_iter().cloned().collect()
    }

    fn combine(&self, other: &MultiPoly, sign: i8) -> MultiPoly {
        let vars = self.union_vars(other);
        let mut terms: BTreeMap<Vec<u32>, BigInt> =
            self.embed(&vars).map(|(e, c)| (e, c.clone())).collect();
        for (e, c) in other.embed(&vars) {
            let slot = terms.entry(e).or_default();
            if sign < 0 {
                *slot -= c;
            } else {
                *slot += c;
            }
        }
        MultiPoly::from_parts(vars, terms)
    }

    fn product(&self, other: &MultiPoly) -> MultiPoly {
        let vars = self.union_vars(other);
        let right: Vec<(Vec<u32>, &BigInt)> = other.embed(&vars).collect();
        let mut terms: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
        for (a, ca) in self.embed(&vars) {
            for (b, cb) in &right {
                let e: Vec<u32> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                *terms.entry(e).or_default() += ca * *cb;
            }
        }
        MultiPoly::from_parts(vars, terms)
    }

    pub fn scale(&self, k: impl Into<BigInt>) -> MultiPoly {
        let k = k.into();
        MultiPoly::from_parts(
            self.vars.clone(),
            self.terms
                .iter()
                .map(|(e, c)| (e.clone(), c * &k))
                .collect(),
        )
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut acc = MultiPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Simultaneous substitution of polynomials for variables. Unbound
    /// variables are left as they are.
    pub fn substitute(&self, bindings: &[(&str, &MultiPoly)]) -> MultiPoly {
        let images: Vec<MultiPoly> = self
            .vars
            .iter()
            .map(|v| match bindings.iter().find(|(name, _)| name == v) {
                Some((_, p)) => (*p).clone(),
                None => MultiPoly::var(v),
            })
            .collect();
        let mut powers: HashMap<(usize, u32), MultiPoly> = HashMap::new();
        let mut out = MultiPoly::zero();
        for (e, c) in &self.terms {
            let mut term = MultiPoly::constant(c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    let p = powers.entry((i, k)).or_insert_with(|| images[i].pow(k));
                    term = &term * &*p;
                }
            }
            out = &out + &term;
        }
        out
    }

    /// Evaluates at a point; `None` if a variable is unbound.
    pub fn eval(&self, point: &HashMap<String, BigInt>) -> Option<BigInt> {
        let values: Vec<&BigInt> = self
            .vars
            .iter()
            .map(|v| point.get(v))
            .collect::<Option<_>>()?;
        let mut total = BigInt::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (v, &k) in values.iter().zip(e) {
                term *= num_traits::pow::Pow::pow(*v, k);
            }
            total += term;
        }
        Some(total)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // graded: higher total degree first, then reverse lexicographic
        let mut order: Vec<(&Vec<u32>, &BigInt)> = self.terms.iter().collect();
        order.sort_by(|a, b| {
            let deg = |e: &Vec<u32>| e.iter().sum::<u32>();
            deg(b.0).cmp(&deg(a.0)).then_with(|| b.0.cmp(a.0))
        });
        for (i, (e, c)) in order.into_iter().enumerate() {
            let monomial: Vec<String> = e
                .iter()
                .zip(&self.vars)
                .filter(|(k, _)| **k > 0)
                .map(|(k, v)| {
                    if *k == 1 {
                        v.clone()
                    } else {
                        format!("{v}^{k}")
                    }
                })
                .collect();
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            match (monomial.is_empty(), mag.is_one()) {
                (true, _) => write!(f, "{mag}")?,
                (false, true) => write!(f, "{}", monomial.join("*"))?,
                (false, false) => write!(f, "{mag}*{}", monomial.join("*"))?,
            }
        }
        Ok(())
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<&MultiPoly> for &MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                let f: fn(&MultiPoly, &MultiPoly) -> MultiPoly = $body;
                f(self, rhs)
            }
        }
        impl $trait<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                (&self).$method(rhs)
            }
        }
        impl $trait<MultiPoly> for &MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, |a, b| a.combine(b, 1));
binop!(Sub, sub, |a, b| a.combine(b, -1));
binop!(Mul, mul, |a, b| a.product(b));

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(-1)
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(-1)
    }
}

impl From<i64> for MultiPoly {
    fn from(c: i64) -> MultiPoly {
        MultiPoly::constant(c)
    }
}
