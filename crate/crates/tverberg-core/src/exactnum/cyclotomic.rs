//! The group ring Q[Z/q]: polynomials in a q-th root of unity, reduced by the
//! single relation `1 + w + w^2 + ... + w^(q-1) = 0`.
//!
//! Canonical form keeps the top coefficient zero, which makes equality in the
//! ring a plain coefficient comparison and gives every power of w an exact
//! representative for composite q as well. For composite q the ring is not a
//! field, so zero divisors exist; the sign kernel therefore distinguishes
//! "zero in the ring" from "zero as a complex number" (see [`Cyclotomic::value_is_zero`]).

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use num_traits::{One, Zero};

use super::{rat, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CycloError {
    /// Order must be at least 2.
    OrderTooSmall(usize),
    /// Operand orders disagree.
    OrderMismatch(usize, usize),
    /// A real sign was requested for a non-real element.
    NotReal,
}

impl fmt::Display for CycloError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CycloError::OrderTooSmall(q) => write!(f, "root-of-unity order {q} is below 2"),
            CycloError::OrderMismatch(a, b) => write!(f, "mixed root orders {a} and {b}"),
            CycloError::NotReal => write!(f, "element is not fixed by conjugation"),
        }
    }
}

impl core::error::Error for CycloError {}

/// Element of Q[Z/q] in canonical form: `sum coeffs[m] * w^m` with
/// `coeffs.len() == order` and `coeffs[order-1] == 0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    order: usize,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    /// Builds an element from raw coefficients, reducing to canonical form.
    pub fn new(order: usize, mut coeffs: Vec<Rational>) -> Result<Self, CycloError> {
        if order < 2 {
            return Err(CycloError::OrderTooSmall(order));
        }
        coeffs.resize(order, Rational::zero());
        let mut value = Cyclotomic { order, coeffs };
        value.canonicalize();
        Ok(value)
    }

    pub fn zero(order: usize) -> Self {
        Cyclotomic { order, coeffs: vec![Rational::zero(); order] }
    }

    pub fn one(order: usize) -> Self {
        Self::from_rational(order, rat(1))
    }

    pub fn from_rational(order: usize, value: Rational) -> Self {
        let mut coeffs = vec![Rational::zero(); order];
        coeffs[0] = value;
        Cyclotomic { order, coeffs }
    }

    /// `w^power` for `w = exp(2*pi*i/order)`, exponent taken mod `order`.
    pub fn root(order: usize, power: i64) -> Result<Self, CycloError> {
        if order < 2 {
            return Err(CycloError::OrderTooSmall(order));
        }
        let q = order as i64;
        let m = power.rem_euclid(q) as usize;
        let mut coeffs = vec![Rational::zero(); order];
        coeffs[m] = rat(1);
        let mut value = Cyclotomic { order, coeffs };
        value.canonicalize();
        Ok(value)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Canonical coefficient vector (length `order`, last entry zero).
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Zero in the ring (canonical form is the zero vector).
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    /// True when the element lies in Q (only the constant coefficient is set).
    pub fn rational_part(&self) -> Option<&Rational> {
        if self.coeffs[1..].iter().all(Rational::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    /// Image under the ring map `w -> w^(q-1) = w^(-1)`, i.e. complex conjugation.
    pub fn conj(&self) -> Self {
        let q = self.order;
        let mut coeffs = vec![Rational::zero(); q];
        for (m, c) in self.coeffs.iter().enumerate() {
            coeffs[(q - m) % q] = c.clone();
        }
        let mut value = Cyclotomic { order: q, coeffs };
        value.canonicalize();
        value
    }

    /// True iff conjugation fixes the element, in which case its complex
    /// value is a real number.
    pub fn is_real(&self) -> bool {
        self.conj() == *self
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        let coeffs = self.coeffs.iter().map(|c| c * factor).collect();
        // Scaling preserves the canonical form (top coefficient stays zero).
        Cyclotomic { order: self.order, coeffs }
    }

    pub fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Cyclotomic::one(self.order);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }

    fn canonicalize(&mut self) {
        let top = self.coeffs[self.order - 1].clone();
        if top.is_zero() {
            return;
        }
        for c in self.coeffs.iter_mut() {
            *c -= &top;
        }
        debug_assert!(self.coeffs[self.order - 1].is_zero());
    }

    fn check_order(&self, other: &Self) {
        assert_eq!(
            self.order, other.order,
            "mixed root-of-unity orders {} and {}",
            self.order, other.order
        );
    }
}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.check_order(rhs);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        // Sum of canonical forms is canonical.
        Cyclotomic { order: self.order, coeffs }
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.check_order(rhs);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Cyclotomic { order: self.order, coeffs }
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        let coeffs = self.coeffs.iter().map(|c| -c).collect();
        Cyclotomic { order: self.order, coeffs }
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.check_order(rhs);
        let q = self.order;
        let mut coeffs = vec![Rational::zero(); q];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[(i + j) % q] += a * b;
            }
        }
        let mut value = Cyclotomic { order: q, coeffs };
        value.canonicalize();
        value
    }
}

// Both Debug and Display print the canonical coefficient vector, e.g.
// `[-1/1, -2/1, 0/1]` for `-1 - 2w` at q = 3.
macro_rules! fmt_impl {
    () => {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            write!(f, "[")?;
            for (m, c) in self.coeffs.iter().enumerate() {
                if m > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}/{}", c.numer(), c.denom())?;
            }
            write!(f, "]")
        }
    };
}

impl fmt::Debug for Cyclotomic {
    fmt_impl!();
}

impl fmt::Display for Cyclotomic {
    fmt_impl!();
}

// Polynomial helpers for the exact complex-value zero test. The canonical
// ring equality is coarser than equality of complex values when the order is
// composite (e.g. w^2 + 1 at q = 4 is nonzero in the ring but evaluates to
// zero), so the sign kernel needs divisibility by the q-th cyclotomic
// polynomial as the authoritative zero test.

/// Coefficients (low to high) of the q-th cyclotomic polynomial, computed by
/// dividing `x^q - 1` by the cyclotomic polynomials of the proper divisors.
pub(crate) fn cyclotomic_polynomial(q: usize) -> Vec<Rational> {
    assert!(q >= 1);
    // x^q - 1
    let mut num = vec![Rational::zero(); q + 1];
    num[0] = rat(-1);
    num[q] = rat(1);
    for d in 1..q {
        if q % d == 0 {
            let phi_d = cyclotomic_polynomial(d);
            num = poly_div_exact(&num, &phi_d);
        }
    }
    num
}

/// Exact division of polynomials over Q; panics if the division is inexact.
fn poly_div_exact(num: &[Rational], den: &[Rational]) -> Vec<Rational> {
    let dn = den.len() - 1;
    assert!(!den[dn].is_zero());
    let mut rem: Vec<Rational> = num.to_vec();
    let mut quo = vec![Rational::zero(); num.len() - dn];
    for k in (0..quo.len()).rev() {
        let c = &rem[k + dn] / &den[dn];
        if !c.is_zero() {
            for (i, d) in den.iter().enumerate() {
                rem[k + i] -= &c * d;
            }
        }
        quo[k] = c;
    }
    assert!(rem.iter().all(Rational::is_zero), "inexact polynomial division");
    quo
}

impl Cyclotomic {
    /// True iff the complex value of the element is zero, i.e. the canonical
    /// polynomial is divisible by the q-th cyclotomic polynomial.
    pub fn value_is_zero(&self) -> bool {
        if self.is_zero() {
            return true;
        }
        let phi = cyclotomic_polynomial(self.order);
        let dn = phi.len() - 1;
        let mut rem: Vec<Rational> = self.coeffs.clone();
        for k in (dn..rem.len()).rev() {
            let c = &rem[k] / &phi[dn];
            if c.is_zero() {
                continue;
            }
            for (i, d) in phi.iter().enumerate() {
                rem[k - dn + i] -= &c * d;
            }
        }
        rem.iter().all(Rational::is_zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::ratio;

    fn w(q: usize, k: i64) -> Cyclotomic {
        Cyclotomic::root(q, k).unwrap()
    }

    #[test]
    fn root_identity_and_reduction() {
        // w^0 is the multiplicative identity
        assert_eq!(w(3, 0), Cyclotomic::one(3));
        // q=2: the relation 1 + w = 0 forces w = -1
        assert_eq!(w(2, 1), Cyclotomic::from_rational(2, rat(-1)));
        // exponents reduce mod q
        assert_eq!(w(3, 4), w(3, 1));
        assert!(Cyclotomic::root(1, 0).is_err());
        assert!(Cyclotomic::root(0, 0).is_err());
    }

    #[test]
    fn conjugation_examples() {
        assert_eq!(Cyclotomic::one(5).conj(), Cyclotomic::one(5));
        // q=3: conj(w) = w^2
        assert_eq!(w(3, 1).conj(), w(3, 2));
        // q=4: conj(w + w^2) = w^3 + w^2, canonically -1 - w
        let x = &w(4, 1) + &w(4, 2);
        let expected = Cyclotomic::new(4, vec![rat(-1), rat(-1), rat(0), rat(0)]).unwrap();
        assert_eq!(x.conj(), expected);
        assert_eq!(x.conj(), &w(4, 3) + &w(4, 2));
    }

    #[test]
    fn realness_examples() {
        for q in 2..=8 {
            // 1 + w + w^(q-1) is fixed by conjugation
            let x = &(&Cyclotomic::one(q) + &w(q, 1)) + &w(q, q as i64 - 1);
            assert!(x.is_real(), "q={q}");
        }
        assert!(!w(3, 1).is_real());
        // q=4: w - w^3 is purely imaginary
        let x = &w(4, 1) - &w(4, 3);
        assert!(!x.is_real());
        assert_eq!((&x.conj() + &x), Cyclotomic::zero(4));
    }

    #[test]
    fn ring_relations_hold_for_all_small_orders() {
        for q in 2..=12 {
            assert_eq!(w(q, 1).pow(q as u64), Cyclotomic::one(q), "w^q = 1 at q={q}");
            let mut sum = Cyclotomic::zero(q);
            for m in 0..q {
                sum = &sum + &w(q, m as i64);
            }
            assert!(sum.is_zero(), "sum of all roots vanishes at q={q}");
        }
    }

    #[test]
    fn canonical_equality_detects_equal_values() {
        // 2w^2 + w^3 written two ways at q=5
        let a = Cyclotomic::new(5, vec![rat(0), rat(0), rat(2), rat(1), rat(0)]).unwrap();
        let b = Cyclotomic::new(5, vec![rat(1), rat(1), rat(3), rat(2), rat(1)]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn value_zero_vs_ring_zero() {
        // w^2 + 1 at q=4 evaluates to 0 but is not the ring zero.
        let x = &w(4, 2) + &Cyclotomic::one(4);
        assert!(!x.is_zero());
        assert!(x.value_is_zero());
        // A genuinely nonzero value.
        let y = &w(4, 1) + &Cyclotomic::one(4);
        assert!(!y.value_is_zero());
        // For prime q the two notions agree on random-ish elements.
        let z = Cyclotomic::new(5, vec![ratio(1, 2), rat(-3), rat(0), rat(7), rat(0)]).unwrap();
        assert!(!z.value_is_zero());
    }

    #[test]
    fn cyclotomic_polynomials_small_orders() {
        let phi = |q| {
            cyclotomic_polynomial(q)
                .iter()
                .map(|c| {
                    assert!(c.is_integer());
                    i64::try_from(c.to_integer()).unwrap()
                })
                .collect::<Vec<_>>()
        };
        assert_eq!(phi(2), vec![1, 1]);
        assert_eq!(phi(3), vec![1, 1, 1]);
        assert_eq!(phi(4), vec![1, 0, 1]);
        assert_eq!(phi(6), vec![1, -1, 1]);
        assert_eq!(phi(12), vec![1, 0, -1, 0, 1]);
    }
}
