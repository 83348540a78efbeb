//! Small integer helpers shared by the field and code modules.

use alloc::vec::Vec;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Distinct prime divisors of `n`, ascending.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn pow_mod(base: u64, mut exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let m = modulus as u128;
    let mut b = base as u128 % m;
    let mut acc = 1u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// Inverse of `a` modulo `m`, if `gcd(a, m) = 1`. Returns 0 for `m = 1`.
pub fn inv_mod(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let (mut old_r, mut r) = (a as i128 % m as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(m as i128) as u64)
}

/// Multiplicative order of `a` modulo `m`; `None` when `gcd(a, m) != 1`.
pub fn multiplicative_order(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(1);
    }
    if gcd(a % m, m) != 1 {
        return None;
    }
    let mut x = a % m;
    let mut k = 1;
    while x != 1 {
        x = (x as u128 * a as u128 % m as u128) as u64;
        k += 1;
    }
    Some(k)
}

/// Smallest `i >= 1` with `q^i ≡ -1 (mod m)`, if any.
pub fn minus_one_power_witness(q: u64, m: u64) -> Option<u64> {
    if m < 2 {
        return None;
    }
    let ord = multiplicative_order(q, m)?;
    let target = m - 1;
    let mut x = q % m;
    for i in 1..=ord {
        if x == target {
            return Some(i);
        }
        x = (x as u128 * q as u128 % m as u128) as u64;
    }
    None
}

/// Orbits of `Z_m` under multiplication by `q` (the `q`-cyclotomic classes mod `m`).
pub fn cyclotomic_classes(q: u64, m: u64) -> Vec<Vec<u64>> {
    let mut seen = alloc::vec![false; m as usize];
    let mut classes = Vec::new();
    for start in 0..m {
        if seen[start as usize] {
            continue;
        }
        let mut class = Vec::new();
        let mut a = start;
        while !seen[a as usize] {
            seen[a as usize] = true;
            class.push(a);
            a = (a as u128 * q as u128 % m as u128) as u64;
        }
        classes.push(class);
    }
    classes
}

pub fn checked_pow(base: u64, exp: u64) -> Option<u64> {
    let e = u32::try_from(exp).ok()?;
    base.checked_pow(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_and_factors() {
        assert!(is_prime(2) && is_prime(3) && is_prime(65521));
        assert!(!is_prime(1) && !is_prime(9) && !is_prime(65535));
        assert_eq!(prime_factors(60), alloc::vec![2, 3, 5]);
        assert_eq!(prime_factors(1), Vec::<u64>::new());
    }

    #[test]
    fn modular_helpers() {
        assert_eq!(inv_mod(3, 8), Some(3));
        assert_eq!(inv_mod(2, 8), None);
        assert_eq!(multiplicative_order(5, 8), Some(2));
        assert_eq!(multiplicative_order(2, 7), Some(3));
        assert_eq!(minus_one_power_witness(5, 6), Some(1));
        assert_eq!(minus_one_power_witness(5, 8), None);
        assert_eq!(minus_one_power_witness(3, 4), Some(1));
        assert_eq!(pow_mod(3, 200, 7), 2);
    }

    #[test]
    fn cyclotomic_classes_mod_8() {
        let c = cyclotomic_classes(3, 8);
        assert_eq!(c.len(), 5);
        assert_eq!(c[1], alloc::vec![1, 3]);
    }
}
