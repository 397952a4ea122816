//! Exact sign of the complex value of a conjugation-fixed ring element.
//!
//! For orders whose roots of unity have rational real parts (q = 2, 3, 4, 6)
//! the sign reduces to a rational computation. Otherwise the value
//! `sum c_m * cos(2*pi*m/q)` is bracketed by rational intervals built from a
//! Machin enclosure of pi and Taylor enclosures of cos, widening precision
//! until the bracket excludes zero. An exact zero test (divisibility by the
//! q-th cyclotomic polynomial) runs first so the widening loop only ever sees
//! genuinely nonzero values and therefore terminates.

use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::cyclotomic::{Cyclotomic, CycloError};
use super::{rat, ratio, rational_sign, Rational};

impl Cyclotomic {
    /// Sign of the real number the element evaluates to: -1, 0 or +1.
    ///
    /// Errors with [`CycloError::NotReal`] unless the element is fixed by
    /// conjugation.
    pub fn real_sign(&self) -> Result<i8, CycloError> {
        if !self.is_real() {
            return Err(CycloError::NotReal);
        }
        if self.value_is_zero() {
            return Ok(0);
        }
        if let Some(table) = rational_cos_table(self.order()) {
            let value: Rational = self
                .coeffs()
                .iter()
                .zip(&table)
                .map(|(c, cosine)| c * cosine)
                .sum();
            return Ok(rational_sign(&value));
        }
        let mut bits = 32;
        loop {
            let enc = self.value_enclosure(bits);
            if enc.lo.is_positive() {
                return Ok(1);
            }
            if enc.hi.is_negative() {
                return Ok(-1);
            }
            bits *= 2;
            assert!(bits <= 1 << 20, "interval refinement failed on a nonzero value");
        }
    }

    /// Rational interval guaranteed to contain the (real) complex value.
    fn value_enclosure(&self, bits: u32) -> Interval {
        let q = self.order();
        let pi = pi_enclosure(bits);
        let mut total = Interval::point(Rational::zero());
        for (m, c) in self.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let cosine = cos_two_pi_ratio(m, q, &pi, bits);
            total = total.add(&cosine.scale(c));
        }
        total
    }
}

/// Real parts of w^m when they are all rational (orders 1, 2, 3, 4, 6).
fn rational_cos_table(q: usize) -> Option<Vec<Rational>> {
    let half = ratio(1, 2);
    let table: Vec<Rational> = match q {
        2 => alloc::vec![rat(1), rat(-1)],
        3 => alloc::vec![rat(1), -half.clone(), -half],
        4 => alloc::vec![rat(1), rat(0), rat(-1), rat(0)],
        6 => alloc::vec![rat(1), half.clone(), -half.clone(), rat(-1), -half, half],
        _ => return None,
    };
    Some(table)
}

#[derive(Clone, Debug)]
struct Interval {
    lo: Rational,
    hi: Rational,
}

impl Interval {
    fn point(x: Rational) -> Self {
        Interval { lo: x.clone(), hi: x }
    }

    fn add(&self, other: &Interval) -> Interval {
        Interval { lo: &self.lo + &other.lo, hi: &self.hi + &other.hi }
    }

    fn scale(&self, c: &Rational) -> Interval {
        if c.is_negative() {
            Interval { lo: &self.hi * c, hi: &self.lo * c }
        } else {
            Interval { lo: &self.lo * c, hi: &self.hi * c }
        }
    }

    fn width(&self) -> Rational {
        &self.hi - &self.lo
    }
}

/// Floor/ceil to a dyadic rational with the given number of fractional bits.
/// Keeps interval endpoints small while preserving the enclosure direction.
fn dyadic_floor(x: &Rational, bits: u32) -> Rational {
    let scale = BigInt::one() << bits;
    let scaled = (x * Rational::from_integer(scale.clone())).floor();
    scaled / Rational::from_integer(scale)
}

fn dyadic_ceil(x: &Rational, bits: u32) -> Rational {
    let scale = BigInt::one() << bits;
    let scaled = (x * Rational::from_integer(scale.clone())).ceil();
    scaled / Rational::from_integer(scale)
}

/// Alternating-series enclosure of atan(1/n).
fn atan_inv_enclosure(n: i64, bits: u32) -> Interval {
    let threshold = Rational::new(BigInt::one(), BigInt::one() << (bits + 8));
    let x = ratio(1, n);
    let x2 = &x * &x;
    let mut term = x;
    let mut sum = Rational::zero();
    let mut k: i64 = 0;
    loop {
        let contribution = &term / rat(2 * k + 1);
        if k % 2 == 0 {
            sum += &contribution;
        } else {
            sum -= &contribution;
        }
        term *= &x2;
        k += 1;
        let next = &term / rat(2 * k + 1);
        if next < threshold {
            // Partial sums of an alternating series with decreasing terms
            // bracket the limit; the next term bounds the error.
            return if k % 2 == 0 {
                Interval { lo: sum.clone(), hi: sum + next }
            } else {
                Interval { lo: &sum - &next, hi: sum }
            };
        }
    }
}

/// Machin's formula: pi = 16 atan(1/5) - 4 atan(1/239), rounded outward to
/// dyadic endpoints so later powers stay cheap.
fn pi_enclosure(bits: u32) -> Interval {
    let a5 = atan_inv_enclosure(5, bits);
    let a239 = atan_inv_enclosure(239, bits);
    let lo = &a5.lo * &rat(16) - &a239.hi * &rat(4);
    let hi = &a5.hi * &rat(16) - &a239.lo * &rat(4);
    Interval { lo: dyadic_floor(&lo, bits + 4), hi: dyadic_ceil(&hi, bits + 4) }
}

/// Enclosure of cos(2*pi*m/q) for 0 <= m < q.
fn cos_two_pi_ratio(m: usize, q: usize, pi: &Interval, bits: u32) -> Interval {
    if m == 0 {
        return Interval::point(rat(1));
    }
    let factor = ratio(2 * m as i64, q as i64);
    let theta = Interval { lo: &pi.lo * &factor, hi: &pi.hi * &factor };
    let taylor = cos_taylor_enclosure(&theta.lo, bits);
    // cos is 1-Lipschitz, so the argument uncertainty widens the enclosure
    // by at most the interval width.
    let slack = theta.width();
    Interval { lo: &taylor.lo - &slack, hi: &taylor.hi + &slack }
}

/// Taylor enclosure of cos at a nonnegative rational point, using the
/// Lagrange remainder bound t^(2J)/(2J)!.
fn cos_taylor_enclosure(t: &Rational, bits: u32) -> Interval {
    let threshold = Rational::new(BigInt::one(), BigInt::one() << (bits + 8));
    let t2 = t * t;
    let mut term = rat(1);
    let mut sum = Rational::zero();
    let mut j: i64 = 0;
    loop {
        if j % 2 == 0 {
            sum += &term;
        } else {
            sum -= &term;
        }
        j += 1;
        term = &term * &t2 / rat((2 * j - 1) * (2 * j));
        if term.abs() < threshold && j >= 4 {
            return Interval { lo: &sum - &term.abs(), hi: &sum + &term.abs() };
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::cyclotomic::Cyclotomic;
    use alloc::vec;
    use alloc::vec::Vec;
    use num_bigint::BigInt;
    use rand_chacha::rand_core::{RngCore, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn w(q: usize, k: i64) -> Cyclotomic {
        Cyclotomic::root(q, k).unwrap()
    }

    #[test]
    fn sign_of_zero_and_rationals() {
        assert_eq!(Cyclotomic::zero(3).real_sign().unwrap(), 0);
        // q=3: -1 - 2w - 2w^2 reduces to +1
        let x = Cyclotomic::new(3, vec![rat(-1), rat(-2), rat(-2)]).unwrap();
        assert_eq!(x, Cyclotomic::one(3));
        assert_eq!(x.real_sign().unwrap(), 1);
    }

    #[test]
    fn sign_of_golden_ratio_cosine() {
        // q=5: w + w^4 = 2 cos 72deg, positive; forced through the interval path.
        let x = &w(5, 1) + &w(5, 4);
        assert!(x.is_real());
        assert_eq!(x.real_sign().unwrap(), 1);
        // and w^2 + w^3 = 2 cos 144deg is negative
        let y = &w(5, 2) + &w(5, 3);
        assert_eq!(y.real_sign().unwrap(), -1);
        // their sum is -1
        let z = &x + &y;
        assert_eq!(z, Cyclotomic::from_rational(5, rat(-1)));
    }

    #[test]
    fn non_real_input_is_rejected() {
        assert_eq!(w(3, 1).real_sign(), Err(CycloError::NotReal));
    }

    #[test]
    fn composite_order_value_zero_maps_to_sign_zero() {
        // w^2 + 1 at q=4: ring-nonzero, complex value zero.
        let x = &w(4, 2) + &Cyclotomic::one(4);
        assert!(x.is_real());
        assert_eq!(x.real_sign().unwrap(), 0);
    }

    #[test]
    fn pi_enclosure_is_tight_and_correct() {
        let pi = pi_enclosure(64);
        assert!(pi.lo < pi.hi);
        // 3.14159265 < pi < 3.14159266
        assert!(pi.lo > ratio(314159265, 100000000));
        assert!(pi.hi < ratio(314159266, 100000000));
        assert!(pi.width() < Rational::new(BigInt::from(1), BigInt::from(1u128 << 60)));
    }

    // Independent oracle: fixed-point evaluation with 100 decimal digits,
    // integer arithmetic throughout.
    mod fixed100 {
        use super::*;

        fn scale() -> BigInt {
            BigInt::from(10u32).pow(100)
        }

        fn fixed_atan_inv(n: u32) -> BigInt {
            let n = BigInt::from(n);
            let n2 = &n * &n;
            let mut term = scale() / &n;
            let mut sum = BigInt::ZERO;
            let mut k: u32 = 0;
            while !term.is_zero() {
                let contribution = &term / BigInt::from(2 * k + 1);
                if k % 2 == 0 {
                    sum += &contribution;
                } else {
                    sum -= &contribution;
                }
                term /= &n2;
                k += 1;
            }
            sum
        }

        fn fixed_pi() -> BigInt {
            BigInt::from(16) * fixed_atan_inv(5) - BigInt::from(4) * fixed_atan_inv(239)
        }

        fn fixed_cos(theta: &BigInt) -> BigInt {
            let s = scale();
            let theta2 = theta * theta;
            let mut term = s.clone();
            let mut sum = BigInt::ZERO;
            let mut j: u64 = 1;
            loop {
                sum += &term;
                term = -(&term * &theta2 / (&s * &s)) / BigInt::from((2 * j - 1) * (2 * j));
                if term.is_zero() {
                    return sum;
                }
                j += 1;
            }
        }

        /// Fixed-point value of a conjugation-fixed element, scaled by 10^100.
        pub(super) fn evaluate(x: &Cyclotomic) -> BigInt {
            let pi = fixed_pi();
            let q = x.order();
            let mut total = BigInt::ZERO;
            for (m, c) in x.coeffs().iter().enumerate() {
                if num_traits::Zero::is_zero(c) {
                    continue;
                }
                let theta = &pi * BigInt::from(2 * m as u64) / BigInt::from(q as u64);
                total += c.numer() * fixed_cos(&theta) / c.denom();
            }
            total
        }
    }

    #[test]
    fn interval_sign_matches_100_digit_evaluation() {
        let mut rng = ChaCha8Rng::seed_from_u64(20260809);
        let mut checked = 0usize;
        while checked < 1000 {
            let q = 2 + (rng.next_u32() as usize) % 11; // 2..=12
            let coeffs: Vec<Rational> = (0..q)
                .map(|_| {
                    let numer = (rng.next_u32() % 17) as i64 - 8;
                    let denom = 1 + (rng.next_u32() % 4) as i64;
                    ratio(numer, denom)
                })
                .collect();
            let y = Cyclotomic::new(q, coeffs).unwrap();
            let x = &y + &y.conj();
            assert!(x.is_real());
            if x.value_is_zero() {
                continue;
            }
            let oracle = fixed100::evaluate(&x);
            // Trust the oracle only when it is far from its own error bound
            // (~1e-95); random integer-ish combinations always are.
            assert!(
                oracle.magnitude() > &(BigInt::from(10u32).pow(20)).magnitude().clone(),
                "oracle value suspiciously close to zero: {oracle}"
            );
            let expected: i8 = if num_traits::Signed::is_positive(&oracle) { 1 } else { -1 };
            assert_eq!(x.real_sign().unwrap(), expected, "element {x:?}");
            checked += 1;
        }
    }
}
