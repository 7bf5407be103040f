//! Integer helpers shared by the principal-ideal components.

use num_integer::Integer;

use crate::error::{Error, Result};

pub fn gcd(a: i128, b: i128) -> i128 {
    a.gcd(&b)
}

pub fn lcm(a: i128, b: i128) -> Result<i128> {
    if a == 0 || b == 0 {
        return Ok(0);
    }
    let g = gcd(a, b);
    (a / g).abs().checked_mul(b.abs()).ok_or(Error::Overflow("lcm"))
}

pub fn checked_mul(a: i128, b: i128) -> Result<i128> {
    a.checked_mul(b).ok_or(Error::Overflow("multiplication"))
}

pub fn checked_pow(a: i128, k: u32) -> Result<i128> {
    a.checked_pow(k).ok_or(Error::Overflow("power"))
}

/// Distinct prime factors of `|n|` in increasing order (empty for 0 and ±1).
pub fn prime_factors(n: i128) -> Vec<i128> {
    let mut n = n.abs();
    let mut out = Vec::new();
    if n < 2 {
        return out;
    }
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Multiplicity of the prime `p` in `n` (n != 0).
pub fn valuation(n: i128, p: i128) -> u32 {
    let mut n = n.abs();
    let mut v = 0;
    while n != 0 && n % p == 0 {
        n /= p;
        v += 1;
    }
    v
}

/// Product of the distinct primes of `|n|`; rad(0) = 0, rad(1) = 1.
pub fn squarefree_kernel(n: i128) -> i128 {
    if n == 0 {
        return 0;
    }
    prime_factors(n).into_iter().product()
}

/// Strips every prime in `primes` from `|n|`. Zero stays zero.
pub fn strip_primes(n: i128, primes: &[i128]) -> i128 {
    let mut n = n.abs();
    if n == 0 {
        return 0;
    }
    for &p in primes {
        while n % p == 0 {
            n /= p;
        }
    }
    n
}

pub fn is_prime(n: i128) -> bool {
    n >= 2 && prime_factors(n) == [n]
}

pub fn modulo(a: i128, n: i128) -> i128 {
    a.rem_euclid(n)
}

/// Inverse of `a` modulo `n`, if it exists.
pub fn mod_inverse(a: i128, n: i128) -> Option<i128> {
    let ext = modulo(a, n).extended_gcd(&n);
    if ext.gcd != 1 {
        return None;
    }
    Some(modulo(ext.x, n))
}

/// Positive divisors of `n > 0` in increasing order.
pub fn divisors(n: i128) -> Vec<i128> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Position of an integer in the search order 0, 1, -1, 2, -2, ...
pub fn search_rank(v: i128) -> u128 {
    if v > 0 {
        (2 * v - 1) as u128
    } else {
        (2 * (-v)) as u128
    }
}

/// Integers in search order with magnitude at most `bound`.
pub fn search_order(bound: u64) -> impl Iterator<Item = i128> {
    let b = bound as i128;
    std::iter::once(0).chain((1..=b).flat_map(|v| [v, -v]))
}
