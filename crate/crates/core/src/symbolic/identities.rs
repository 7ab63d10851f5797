//! The catalogue of polynomial identities behind the monoid product, the
//! discriminant map and the Artin-Schreier action.

use serde::Serialize;

use super::poly::MultiPoly;
use super::tensor::TensorElement;
use crate::{Error, Result};

/// Catalogue names, in verification order.
pub const CATALOGUE: [&str; 7] = [
    "disc-multiplicativity",
    "star-associativity",
    "change-of-basis-functoriality",
    "fixed-element-z-squared",
    "wp-closure",
    "as-action-norm",
    "square-product",
];

/// One polynomial equation `lhs = rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityComponent {
    pub label: &'static str,
    pub lhs: MultiPoly,
    pub rhs: MultiPoly,
}

impl IdentityComponent {
    fn new(label: &'static str, lhs: MultiPoly, rhs: MultiPoly) -> IdentityComponent {
        IdentityComponent { label, lhs, rhs }
    }

    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub name: String,
    pub holds: bool,
    pub lhs_terms: usize,
    pub rhs_terms: usize,
}

fn c(v: i64) -> MultiPoly {
    MultiPoly::constant(v)
}

/// Trace and norm of `(t, n) * (s, m)`.
fn star(t: &MultiPoly, n: &MultiPoly, s: &MultiPoly, m: &MultiPoly) -> (MultiPoly, MultiPoly) {
    (s * t, m * &t.pow(2) + n * &s.pow(2) - c(4) * n * m)
}

/// `a + b w` in `P[w]/(w^2 - trace w + norm)` for a polynomial ring `P`.
struct QuadExt {
    trace: MultiPoly,
    norm: MultiPoly,
}

impl QuadExt {
    fn mul(
        &self,
        (a, b): &(MultiPoly, MultiPoly),
        (c, d): &(MultiPoly, MultiPoly),
    ) -> (MultiPoly, MultiPoly) {
        let bd = b * d;
        (a * c - &bd * &self.norm, a * d + b * c + &bd * &self.trace)
    }
}

/// Returns the equations making up the named identity.
pub fn identity_components(name: &str) -> Result<Vec<IdentityComponent>> {
    let [t, n, s, m] = MultiPoly::vars(["t", "n", "s", "m"]);
    let norm_st = star(&t, &n, &s, &m).1;
    Ok(match name {
        "disc-multiplicativity" => vec![IdentityComponent::new(
            "disc",
            (&s * &t).pow(2) - c(4) * &norm_st,
            (t.pow(2) - c(4) * &n) * (s.pow(2) - c(4) * &m),
        )],
        "star-associativity" => {
            let [p, q] = MultiPoly::vars(["p", "q"]);
            let (lt, ln) = star(&t, &n, &s, &m);
            let (lt, ln) = star(&lt, &ln, &p, &q);
            let (rt, rn) = star(&s, &m, &p, &q);
            let (rt, rn) = star(&t, &n, &rt, &rn);
            vec![
                IdentityComponent::new("trace", lt, rt),
                IdentityComponent::new("norm", ln, rn),
            ]
        }
        "change-of-basis-functoriality" => change_of_basis(false),
        "fixed-element-z-squared" => {
            let xy = TensorElement::xy();
            let z = &xy + &xy.involution();
            let lhs = &z * &z;
            let rhs = &z.scale(&(&s * &t)) - &TensorElement::scalar(norm_st);
            let labels = ["1⊗1", "x⊗1", "1⊗y", "x⊗y"];
            let [l0, l1, l2, l3] = lhs.coeffs;
            let [r0, r1, r2, r3] = rhs.coeffs;
            vec![
                IdentityComponent::new(labels[0], l0, r0),
                IdentityComponent::new(labels[1], l1, r1),
                IdentityComponent::new(labels[2], l2, r2),
                IdentityComponent::new(labels[3], l3, r3),
            ]
        }
        "wp-closure" => {
            let [r, s] = MultiPoly::vars(["r", "s"]);
            let wp = |x: &MultiPoly| x + &x.pow(2);
            let sum = &r + &s + c(2) * &r * &s;
            vec![IdentityComponent::new(
                "wp",
                wp(&sum),
                wp(&r) + wp(&s) + c(4) * wp(&r) * wp(&s),
            )]
        }
        "as-action-norm" => vec![IdentityComponent::new(
            "norm",
            &m * &t.pow(2) + &n - c(4) * &n * &m,
            &n + (t.pow(2) - c(4) * &n) * &m,
        )],
        "square-product" => {
            let (tt, nn) = star(&t, &n, &t, &n);
            let d = t.pow(2) - c(4) * &n;
            let w = MultiPoly::var("w");
            let f = w.pow(2) - &tt * &w + &nn;
            // new generator w - 2n, i.e. substitute w -> w + 2n
            let shifted = f.substitute(&[("w", &(&w + &(c(2) * &n)))]);
            vec![
                IdentityComponent::new(
                    "disc",
                    t.pow(4) - c(4) * (c(2) * &n * (t.pow(2) - c(2) * &n)),
                    d.pow(2),
                ),
                IdentityComponent::new("norm", nn, c(2) * &n * (t.pow(2) - c(2) * &n)),
                IdentityComponent::new("shift", shifted, w.pow(2) - &d * &w),
            ]
        }
        _ => return Err(Error::UnknownIdentity(name.to_string())),
    })
}

/// With `t = u t' + 2r`, `n = u^2 n' + t r - r^2` and likewise for `(s, m)`
/// with `(v, q)`, the element `X = uv w' + (qt + rs - 2qr)` of
/// `Z[..][w']/(w'^2 - s't' w' + N')` satisfies `X^2 = st X - N`.
///
/// `plus_r_squared` uses `n = u^2 n' + t r + r^2` instead, which does not
/// give an identity.
pub(crate) fn change_of_basis(plus_r_squared: bool) -> Vec<IdentityComponent> {
    let [tp, np, sp, mp, u, v, r, q] =
        MultiPoly::vars(["t'", "n'", "s'", "m'", "u", "v", "r", "q"]);
    let sign = if plus_r_squared { 1 } else { -1 };
    let t = &u * &tp + c(2) * &r;
    let n = u.pow(2) * &np + &t * &r + c(sign) * r.pow(2);
    let s = &v * &sp + c(2) * &q;
    let m = v.pow(2) * &mp + &s * &q + c(sign) * q.pow(2);
    let (trace_p, norm_p) = star(&tp, &np, &sp, &mp);
    let ext = QuadExt {
        trace: trace_p,
        norm: norm_p,
    };
    let (trace, norm) = star(&t, &n, &s, &m);
    let x = (&q * &t + &r * &s - c(2) * &q * &r, &u * &v);
    let (l0, l1) = ext.mul(&x, &x);
    let r0 = &trace * &x.0 - &norm;
    let r1 = &trace * &x.1;
    vec![
        IdentityComponent::new("1", l0, r0),
        IdentityComponent::new("w'", l1, r1),
    ]
}

fn report(name: &str, components: &[IdentityComponent]) -> IdentityReport {
    IdentityReport {
        name: name.to_string(),
        holds: components.iter().all(IdentityComponent::holds),
        lhs_terms: components.iter().map(|c| c.lhs.term_count()).sum(),
        rhs_terms: components.iter().map(|c| c.rhs.term_count()).sum(),
    }
}

/// Verifies one catalogue identity by exact comparison of canonical forms.
pub fn verify_named_identity(name: &str) -> Result<IdentityReport> {
    Ok(report(name, &identity_components(name)?))
}

/// Verifies the whole catalogue, one thread per identity, in catalogue order.
pub fn verify_all() -> Vec<IdentityReport> {
    std::thread::scope(|scope| {
        let handles: Vec<_> = CATALOGUE
            .iter()
            .map(|name| scope.spawn(move || verify_named_identity(name).expect("catalogue name")))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("verifier thread panicked"))
            .collect()
    })
}
