use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::poly::MultiPoly;

/// An element of `S ⊗ T` over `Z[t, n, s, m]`, where `S = Z[t,n][x]/(x^2 - tx + n)`
/// and `T = Z[s,m][y]/(y^2 - sy + m)`, in the basis `1⊗1, x⊗1, 1⊗y, x⊗y`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct TensorElement {
    pub coeffs: [MultiPoly; 4],
}

fn sym(name: &str) -> MultiPoly {
    MultiPoly::var(name)
}

impl TensorElement {
    pub fn new(coeffs: [MultiPoly; 4]) -> TensorElement {
        TensorElement { coeffs }
    }

    pub fn scalar(c: MultiPoly) -> TensorElement {
        TensorElement::new([c, MultiPoly::zero(), MultiPoly::zero(), MultiPoly::zero()])
    }

    pub fn one() -> TensorElement {
        TensorElement::scalar(MultiPoly::one())
    }

    /// `x ⊗ 1`.
    pub fn x() -> TensorElement {
        let z = MultiPoly::zero;
        TensorElement::new([z(), MultiPoly::one(), z(), z()])
    }

    /// `1 ⊗ y`.
    pub fn y() -> TensorElement {
        let z = MultiPoly::zero;
        TensorElement::new([z(), z(), MultiPoly::one(), z()])
    }

    /// `x ⊗ y`.
    pub fn xy() -> TensorElement {
        let z = MultiPoly::zero;
        TensorElement::new([z(), z(), z(), MultiPoly::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(MultiPoly::is_zero)
    }

    /// Applies `σ ⊗ τ`: `x -> t - x`, `y -> s - y`.
    pub fn involution(&self) -> TensorElement {
        let [a0, a1, a2, a3] = &self.coeffs;
        let (t, s) = (sym("t"), sym("s"));
        TensorElement::new([
            a0 + &(a1 * &t) + &(a2 * &s) + &(a3 * &(&t * &s)),
            -a1 - &(a3 * &s),
            -a2 - &(a3 * &t),
            a3.clone(),
        ])
    }

    pub fn scale(&self, c: &MultiPoly) -> TensorElement {
        TensorElement::new(self.coeffs.clone().map(|a| &a * c))
    }

    fn product(&self, other: &TensorElement) -> TensorElement {
        // c[i][j] is the coefficient of x^i y^j before reduction
        let mut c: [[MultiPoly; 3]; 3] = Default::default();
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                let (xi, yi) = (i & 1, i >> 1);
                let (xj, yj) = (j & 1, j >> 1);
                let slot = &mut c[xi + xj][yi + yj];
                *slot = &*slot + &(a * b);
            }
        }
        let (t, n, s, m) = (sym("t"), sym("n"), sym("s"), sym("m"));
        // x^2 = t x - n
        let [c0, c1, c2] = &mut c;
        for ((low, mid), top) in c0.iter_mut().zip(c1.iter_mut()).zip(c2.iter_mut()) {
            let top = std::mem::take(top);
            *mid = &*mid + &(&top * &t);
            *low = &*low - &(&top * &n);
        }
        // y^2 = s y - m
        for row in c.iter_mut().take(2) {
            let top = std::mem::take(&mut row[2]);
            row[1] = &row[1] + &(&top * &s);
            row[0] = &row[0] - &(&top * &m);
        }
        let [r0, r1, _] = c;
        let [c00, c01, _] = r0;
        let [c10, c11, _] = r1;
        TensorElement::new([c00, c10, c01, c11])
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ["1⊗1", "x⊗1", "1⊗y", "x⊗y"];
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .zip(names)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, b)| format!("({c})·{b}"))
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl Add<&TensorElement> for &TensorElement {
    type Output = TensorElement;
    fn add(self, rhs: &TensorElement) -> TensorElement {
        TensorElement::new(std::array::from_fn(|i| &self.coeffs[i] + &rhs.coeffs[i]))
    }
}

impl Sub<&TensorElement> for &TensorElement {
    type Output = TensorElement;
    fn sub(self, rhs: &TensorElement) -> TensorElement {
        TensorElement::new(std::array::from_fn(|i| &self.coeffs[i] - &rhs.coeffs[i]))
    }
}

impl Mul<&TensorElement> for &TensorElement {
    type Output = TensorElement;
    fn mul(self, rhs: &TensorElement) -> TensorElement {
        self.product(rhs)
    }
}

impl Neg for &TensorElement {
    type Output = TensorElement;
    fn neg(self) -> TensorElement {
        TensorElement::new(self.coeffs.clone().map(|a| -a))
    }
}
