//! Small exact-integer helpers: floor division toward -inf, checked products
//! and powers, gcd, and prime-power recognition.
//!
//! All fallible growth goes through [`mul`]/[`add`]/[`pow`], which abort on
//! i128 overflow instead of wrapping.

/// Floor division rounding toward negative infinity.
///
/// The divisor must be positive; numerators are routinely negative here
/// (e.g. `n_i - c_i + t*lambda` with a pole multiplicity).
///
/// ```
/// use puregaps::arith::floor_div;
/// assert_eq!(floor_div(7, 3), 2);
/// assert_eq!(floor_div(-1, 3), -1);
/// assert_eq!(floor_div(-6, 3), -2);
/// ```
#[inline]
pub fn floor_div(a: i128, b: i128) -> i128 {
    assert!(b > 0, "floor_div: divisor must be positive, got {b}");
    a.div_euclid(b)
}

/// Checked addition; aborts on overflow.
#[inline]
pub fn add(a: i128, b: i128) -> i128 {
    a.checked_add(b).expect("integer overflow in addition")
}

/// Checked multiplication; aborts on overflow.
#[inline]
pub fn mul(a: i128, b: i128) -> i128 {
    a.checked_mul(b)
        .expect("integer overflow in multiplication")
}

/// Checked non-negative integer power; aborts on overflow.
pub fn pow(base: i128, exp: u32) -> i128 {
    base.checked_pow(exp).expect("integer overflow in power")
}

/// Greatest common divisor of |a| and |b|.
pub fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = b;
        b = a % b;
        a = t;
    }
    a
}

/// Decompose q as p^k with p prime and k >= 1. Returns None if q is not a
/// prime power (or is too large to factor by trial division).
pub fn prime_power(q: i128) -> Option<(i128, u32)> {
    if q < 2 {
        return None;
    }
    let p = smallest_prime_factor(q)?;
    let mut rest = q;
    let mut k = 0u32;
    while rest % p == 0 {
        rest /= p;
        k += 1;
    }
    if rest == 1 {
        Some((p, k))
    } else {
        None
    }
}

/// Smallest prime factor by trial division. Gives up (None) beyond 2^40 when
/// no small factor exists, which is far past any parameter this crate's
/// formulas can hold in i128 anyway.
fn smallest_prime_factor(q: i128) -> Option<i128> {
    if q % 2 == 0 {
        return Some(2);
    }
    let mut d = 3i128;
    while d * d <= q && d < (1 << 20) {
        if q % d == 0 {
            return Some(d);
        }
        d += 2;
    }
    if d * d > q {
        Some(q) // q itself is prime
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floor_div_rounds_toward_negative_infinity() {
        assert_eq!(floor_div(7, 3), 2);
        assert_eq!(floor_div(-1, 3), -1);
        assert_eq!(floor_div(-6, 3), -2);
        assert_eq!(floor_div(0, 5), 0);
        assert_eq!(floor_div(-7, 2), -4);
    }

    #[test]
    #[should_panic]
    fn floor_div_rejects_non_positive_divisor() {
        floor_div(1, 0);
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(2), Some((2, 1)));
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(8), Some((2, 3)));
        assert_eq!(prime_power(7), Some((7, 1)));
        assert_eq!(prime_power(6), None);
        assert_eq!(prime_power(1), None);
        assert_eq!(prime_power(12), None);
    }

    #[test]
    fn gcd_basics() {
        assert_eq!(gcd(9, 3), 3);
        assert_eq!(gcd(9, -8), 1);
        assert_eq!(gcd(0, 5), 5);
        assert_eq!(gcd(33, 3), 3);
    }
}
