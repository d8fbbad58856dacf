//! Small integer helpers: gcd/lcm, extended gcd, trial-division factorization.
//!
//! Inputs are desk-scale (below 2^31), so plain `i64` is enough everywhere.

use alloc::vec::Vec;

/// Nonnegative gcd; `gcd(0, 0) == 0`.
pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Nonnegative lcm; `lcm(x, 0) == 0`.
pub fn lcm(a: i64, b: i64) -> i64 {
    if a == 0 || b == 0 {
        return 0;
    }
    (a / gcd(a, b) * b).abs()
}

/// Returns `(g, x, y)` with `a*x + b*y == g == gcd(a, b)` and `g >= 0`.
pub fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i64, 0i64);
    let (mut old_t, mut t) = (0i64, 1i64);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    if old_r < 0 {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// Floor division (rounds toward negative infinity).
pub fn div_floor(a: i64, b: i64) -> i64 {
    let q = a / b;
    if (a % b != 0) && ((a < 0) != (b < 0)) {
        q - 1
    } else {
        q
    }
}

/// Least nonnegative residue of `a` modulo `m > 0`.
pub fn modulo(a: i64, m: i64) -> i64 {
    a.rem_euclid(m)
}

/// `true` when `d` divides `n`, using the ring convention that `0` divides only `0`.
pub fn divides(d: i64, n: i64) -> bool {
    if d == 0 {
        n == 0
    } else {
        n % d == 0
    }
}

/// Prime factorization of `|n|` by trial division, as `(prime, exponent)` pairs.
/// `factorize(0)` and `factorize(1)` are empty.
pub fn factorize(n: i64) -> Vec<(i64, u32)> {
    let mut n = n.abs();
    let mut out = Vec::new();
    if n < 2 {
        return out;
    }
    let mut p = 2i64;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn prime_divisors(n: i64) -> Vec<i64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

/// Product of the distinct primes dividing `n`. `radical(0) == 0`, `radical(1) == 1`.
pub fn radical(n: i64) -> i64 {
    if n == 0 {
        return 0;
    }
    prime_divisors(n).into_iter().product()
}

pub fn is_prime(n: i64) -> bool {
    n >= 2 && factorize(n) == [(n, 1)]
}

/// All positive divisors of `n != 0`, ascending.
pub fn divisors(n: i64) -> Vec<i64> {
    let n = n.abs();
    assert!(n != 0, "divisors(0) is infinite");
    let mut out = Vec::from([1i64]);
    for (p, e) in factorize(n) {
        let len = out.len();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                out.push(out[i] * pk);
            }
        }
    }
    out.sort_unstable();
    out
}
