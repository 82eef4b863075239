//! Exact integer helpers: floor square roots, trial-division primality,
//! small factorizations.

use num_bigint::BigUint;

/// Largest s with s^2 <= n.
pub fn isqrt(n: &BigUint) -> BigUint {
    n.sqrt()
}

/// Largest s with s^2 <= n, for machine-word inputs.
pub fn isqrt_u64(n: u64) -> u64 {
    n.isqrt()
}

/// Trial-division primality test. Exact, and fast for the desk-scale inputs
/// this crate guards to.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    if n.is_multiple_of(3) {
        return n == 3;
    }
    let mut d = 5u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) || n.is_multiple_of(d + 2) {
            return false;
        }
        d += 6;
    }
    true
}

/// Prime factorization by trial division, smallest factor first.
pub fn factor(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    if n < 2 {
        return out;
    }
    let mut push = |p: u64, n: &mut u64| {
        let mut e = 0u32;
        while (*n).is_multiple_of(p) {
            *n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
    };
    push(2, &mut n);
    push(3, &mut n);
    let mut d = 5u64;
    while d.saturating_mul(d) <= n {
        push(d, &mut n);
        push(d + 2, &mut n);
        d += 6;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Splits q into (p, l) with q = p^l and p prime, or None when q is not a
/// prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    let f = factor(q);
    match f.as_slice() {
        [(p, l)] => Some((*p, *l)),
        _ => None,
    }
}

/// base^exp without overflow, or None when the result exceeds u128.
pub fn checked_pow_u128(base: u64, exp: u32) -> Option<u128> {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base as u128)?;
    }
    Some(acc)
}
