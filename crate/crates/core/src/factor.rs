//! Factorization plumbing: wheel trial division up to a configurable bound,
//! deterministic Miller-Rabin, and Brent's rho for composite cofactors.
//!
//! Everything here is exact. The trial bound only tunes how much work is done
//! by division before the rho fallback kicks in.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Default trial-division bound used when no explicit limit is given.
pub const DEFAULT_TRIAL_LIMIT: u64 = 1_000_000;

// Gaps between consecutive candidates coprime to 30, starting at 7.
const WHEEL: [u64; 8] = [4, 2, 4, 2, 4, 6, 2, 6];

/// Deterministic Miller-Rabin for `n < 2^64` (seven-witness set).
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    // This witness set decides primality for every n < 2^64.
    'witness: for a in [2u64, 325, 9375, 28178, 450775, 9780504, 1795265022] {
        let a = a % n;
        if a == 0 {
            continue;
        }
        let mut x = pow_mod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod_u64(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Miller-Rabin primality test for arbitrary-size integers.
///
/// Deterministic for n < 2^64 and for n below ~3.3e24 (first thirteen prime
/// witnesses); above that the same witness list is applied and the test is
/// probabilistic in name only.
pub fn is_prime(n: &BigUint) -> bool {
    if let Some(n64) = n.to_u64() {
        return is_prime_u64(n64);
    }
    let small: [u64; 25] = [
        2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83,
        89, 97,
    ];
    for p in small {
        if (n % p).is_zero() {
            return false; // n > 2^64, so n != p
        }
    }
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'witness: for a in small {
        let a = BigUint::from(a);
        let mut x = a.modpow(&d, n);
        if x == one || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&BigUint::from(2u32), n);
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod_u64(acc, base, m);
        }
        base = mul_mod_u64(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Pollard rho with Floyd cycle detection. `n` must be composite and > 1.
fn rho_u64(n: u64) -> u64 {
    if n % 2 == 0 {
        return 2;
    }
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mul_mod_u64(x, x, n) + c) % n;
        let mut x = 2u64;
        let mut y = 2u64;
        loop {
            x = f(x);
            y = f(f(y));
            if x == y {
                break; // cycle closed without a factor, retry with a new constant
            }
            let d = gcd_u64(x.abs_diff(y), n);
            if d != 1 && d != n {
                return d;
            }
        }
        c += 1;
    }
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Floyd-cycle rho over `BigUint`; only reached for cofactors above 2^64.
fn rho_biguint(n: &BigUint) -> BigUint {
    let one = BigUint::one();
    let mut c = BigUint::one();
    loop {
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut x = BigUint::from(2u32);
        let mut y = BigUint::from(2u32);
        loop {
            x = f(&x);
            y = f(&f(&y));
            let diff = if x > y { &x - &y } else { &y - &x };
            if diff.is_zero() {
                break; // cycle without factor, retry with another constant
            }
            let d = diff.gcd(n);
            if d > one && &d < n {
                return d;
            }
        }
        c += 1u32;
    }
}

fn trial_divide_u64(mut n: u64, limit: u64, out: &mut BTreeMap<u64, u32>) -> u64 {
    for p in [2u64, 3, 5] {
        if p > limit {
            return n;
        }
        while n % p == 0 {
            *out.entry(p).or_insert(0) += 1;
            n /= p;
        }
    }
    let mut d = 7u64;
    let mut wheel = 0usize;
    while d <= limit && d.checked_mul(d).map_or(false, |sq| sq <= n) {
        while n % d == 0 {
            *out.entry(d).or_insert(0) += 1;
            n /= d;
        }
        d += WHEEL[wheel];
        wheel = (wheel + 1) % WHEEL.len();
    }
    if n > 1 && d.checked_mul(d).map_or(true, |sq| sq > n) {
        // remaining cofactor has no divisor below its square root
        *out.entry(n).or_insert(0) += 1;
        return 1;
    }
    n
}

fn factor_u64_into(n: u64, limit: u64, out: &mut BTreeMap<u64, u32>) {
    let rem = trial_divide_u64(n, limit, out);
    if rem <= 1 {
        return;
    }
    let mut stack = vec![rem];
    while let Some(m) = stack.pop() {
        if is_prime_u64(m) {
            *out.entry(m).or_insert(0) += 1;
        } else {
            let f = rho_u64(m);
            stack.push(f);
            stack.push(m / f);
        }
    }
}

/// Factor `n >= 1` into sorted `(prime, exponent)` pairs with the default bound.
pub fn factor(n: &BigUint) -> Vec<(BigUint, u32)> {
    factor_with_limit(n, DEFAULT_TRIAL_LIMIT)
}

/// Factor `n >= 1` into sorted `(prime, exponent)` pairs.
///
/// Trial division runs up to `trial_limit` (and never beyond the square root
/// of the remaining cofactor); what is left is finished off by Miller-Rabin
/// and Pollard rho, so the result is a complete prime factorization.
pub fn factor_with_limit(n: &BigUint, trial_limit: u64) -> Vec<(BigUint, u32)> {
    let limit = trial_limit.max(3);
    if n.is_zero() || n.is_one() {
        return Vec::new();
    }
    if let Some(n64) = n.to_u64() {
        let mut map = BTreeMap::new();
        factor_u64_into(n64, limit, &mut map);
        return map
            .into_iter()
            .map(|(p, e)| (BigUint::from(p), e))
            .collect();
    }

    let mut map: BTreeMap<BigUint, u32> = BTreeMap::new();
    let mut rem = n.clone();
    // strip small primes with bigint divisions until the rest fits in u64
    let mut d = 2u64;
    let mut wheel = usize::MAX;
    while d <= limit {
        if let Some(r64) = rem.to_u64() {
            let mut small = BTreeMap::new();
            factor_u64_into(r64, limit, &mut small);
            for (p, e) in small {
                *map.entry(BigUint::from(p)).or_insert(0) += e;
            }
            rem = BigUint::one();
            break;
        }
        let db = BigUint::from(d);
        while (&rem % &db).is_zero() {
            *map.entry(db.clone()).or_insert(0) += 1;
            rem /= &db;
        }
        match d {
            2 => d = 3,
            3 => d = 5,
            5 => {
                d = 7;
                wheel = 0;
            }
            _ => {
                d += WHEEL[wheel];
                wheel = (wheel + 1) % WHEEL.len();
            }
        }
    }
    if !rem.is_one() {
        let mut stack = vec![rem];
        while let Some(m) = stack.pop() {
            if is_prime(&m) {
                *map.entry(m).or_insert(0) += 1;
            } else if let Some(m64) = m.to_u64() {
                let f = rho_u64(m64);
                stack.push(BigUint::from(f));
                stack.push(BigUint::from(m64 / f));
            } else {
                let f = rho_biguint(&m);
                stack.push(&m / &f);
                stack.push(f);
            }
        }
    }
    map.into_iter().collect()
}

/// True when no prime divides `n` more than once.
pub fn is_squarefree(n: &BigUint) -> bool {
    factor(n).iter().all(|(_, e)| *e == 1)
}

/// Exact p-adic valuation of `n` (the exponent of `p` in `n`); `n` must be nonzero.
pub fn valuation(n: &BigUint, p: &BigUint) -> Result<u32> {
    if n.is_zero() {
        return Err(Error::Precondition("valuation of zero is undefined".into()));
    }
    let mut v = 0u32;
    let mut rem = n.clone();
    while (&rem % p).is_zero() {
        rem /= p;
        v += 1;
    }
    Ok(v)
}

/// All primes strictly below `limit`, by sieve of Eratosthenes.
pub fn primes_below(limit: u64) -> Vec<u64> {
    if limit <= 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut composite = vec![false; n];
    let mut primes = Vec::new();
    for i in 2..n {
        if !composite[i] {
            primes.push(i as u64);
            let mut j = i * i;
            while j < n {
                composite[j] = true;
                j += i;
            }
        }
    }
    primes
}

#[cfg(test)]
mod tests {
    use super::*;

    // Independent oracle: naive division by every integer, no wheel, no rho.
    fn naive_factor(mut n: u64) -> Vec<(u64, u32)> {
        let mut out = Vec::new();
        let mut d = 2u64;
        while d * d <= n {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            if e > 0 {
                out.push((d, e));
            }
            d += 1;
        }
        if n > 1 {
            out.push((n, 1));
        }
        out
    }

    #[test]
    fn matches_naive_factorization_up_to_5000() {
        for n in 1u64..5000 {
            let got: Vec<(u64, u32)> = factor(&BigUint::from(n))
                .into_iter()
                .map(|(p, e)| (p.to_u64().unwrap(), e))
                .collect();
            assert_eq!(got, naive_factor(n), "n = {n}");
        }
    }

    #[test]
    fn factors_beyond_the_trial_bound() {
        // 1000003 * 1000033 straddles a tiny trial bound, forcing rho
        let n = BigUint::from(1_000_003u64) * BigUint::from(1_000_033u64);
        let fs = factor_with_limit(&n, 1000);
        assert_eq!(
            fs,
            vec![
                (BigUint::from(1_000_003u64), 1),
                (BigUint::from(1_000_033u64), 1)
            ]
        );
    }

    #[test]
    fn large_semiprime_splits() {
        // two 11-digit primes
        let p = BigUint::from(10_000_000_019u64);
        let q = BigUint::from(10_000_000_033u64);
        let fs = factor(&(&p * &q));
        assert_eq!(fs, vec![(p, 1), (q, 1)]);
    }

    #[test]
    fn primality_agrees_with_sieve() {
        let primes = primes_below(2000);
        for n in 0u64..2000 {
            assert_eq!(is_prime_u64(n), primes.contains(&n), "n = {n}");
        }
    }

    #[test]
    fn big_mersenne_prime_detected() {
        // 2^89 - 1 is prime
        let m89 = (BigUint::one() << 89u32) - BigUint::one();
        assert!(is_prime(&m89));
        assert!(!is_prime(&(m89 * BigUint::from(3u32))));
    }

    #[test]
    fn squarefree_and_valuation() {
        assert!(is_squarefree(&BigUint::from(143u32)));
        assert!(!is_squarefree(&BigUint::from(572u32)));
        let n = BigUint::from(6727u32); // 7 * 31^2
        assert_eq!(valuation(&n, &BigUint::from(31u32)).unwrap(), 2);
        assert_eq!(valuation(&n, &BigUint::from(7u32)).unwrap(), 1);
        assert_eq!(valuation(&n, &BigUint::from(5u32)).unwrap(), 0);
    }
}
