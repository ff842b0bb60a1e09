//! Exact integer utilities: gcd, totient, divisors, prime sets,
//! multiplicative order and linear congruences.
//!
//! Everything works on `u64` with `u128` intermediates, so no operation
//! here can wrap. Factorization is plain trial division, which is ample for
//! the group orders this crate supports.

use crate::error::{Error, Result};

/// Greatest common divisor. Rejects `(0, 0)`.
pub fn gcd(a: u64, b: u64) -> Result<u64> {
    if a == 0 && b == 0 {
        return Err(Error::GcdOfZeros);
    }
    Ok(gcd_or_zero(a, b))
}

/// Euclid without the zero check; `gcd_or_zero(0, 0) == 0`.
pub(crate) fn gcd_or_zero(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// `base^exp mod m`; `m = 1` yields 0.
pub fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut result = 1 % m;
    let mut b = base % m;
    while exp > 0 {
        if exp & 1 == 1 {
            result = mul_mod(result, b, m);
        }
        b = mul_mod(b, b, m);
        exp >>= 1;
    }
    result
}

/// Prime factorization as `(prime, exponent)` pairs, primes ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pairs: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn of(n: u64) -> Self {
        let mut pairs = Vec::new();
        let mut rest = n;
        let mut p = 2u64;
        while rest > 1 && p.saturating_mul(p) <= rest {
            if rest % p == 0 {
                let mut e = 0;
                while rest % p == 0 {
                    rest /= p;
                    e += 1;
                }
                pairs.push((p, e));
            }
            p += if p == 2 { 1 } else { 2 };
        }
        if rest > 1 {
            pairs.push((rest, 1));
        }
        Factorization { pairs }
    }

    pub fn pairs(&self) -> &[(u64, u32)] {
        &self.pairs
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.pairs.iter().map(|&(p, _)| p)
    }

    /// Sum of exponents (number of prime factors with multiplicity).
    pub fn big_omega(&self) -> u32 {
        self.pairs.iter().map(|&(_, e)| e).sum()
    }

    pub fn product(&self) -> u64 {
        self.pairs
            .iter()
            .map(|&(p, e)| p.pow(e))
            .product()
    }
}

/// The set of distinct prime divisors of an integer.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct PrimeSet {
    primes: Vec<u64>,
}

impl PrimeSet {
    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    pub fn contains(&self, p: u64) -> bool {
        self.primes.binary_search(&p).is_ok()
    }

    pub fn is_subset(&self, other: &PrimeSet) -> bool {
        self.primes.iter().all(|&p| other.contains(p))
    }

    /// Primes of `self` missing from `other`.
    pub fn difference(&self, other: &PrimeSet) -> PrimeSet {
        PrimeSet {
            primes: self
                .primes
                .iter()
                .copied()
                .filter(|&p| !other.contains(p))
                .collect(),
        }
    }
}

pub fn prime_set(n: u64) -> PrimeSet {
    PrimeSet {
        primes: Factorization::of(n).primes().collect(),
    }
}

/// Euler's totient. `euler_phi(0)` is defined as 0.
pub fn euler_phi(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    Factorization::of(n)
        .pairs()
        .iter()
        .fold(n, |acc, &(p, _)| acc / p * (p - 1))
}

/// All positive divisors of `n`, ascending. Empty for `n = 0`.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut divs = vec![];
    if n == 0 {
        return divs;
    }
    let mut large = vec![];
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            divs.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    divs.extend(large.into_iter().rev());
    divs
}

/// Number of positive divisors.
pub fn tau(n: u64) -> u64 {
    Factorization::of(n)
        .pairs()
        .iter()
        .map(|&(_, e)| e as u64 + 1)
        .product()
}

/// Least `t >= 1` with `k^t = 1 (mod m)`.
///
/// Starts from `phi(m)` and strips prime factors while the power stays 1.
pub fn multiplicative_order(k: u64, m: u64) -> Result<u64> {
    if m == 0 {
        return Err(Error::NotCoprime { k, modulus: m });
    }
    if m == 1 {
        return Ok(1);
    }
    if gcd_or_zero(k % m, m) != 1 {
        return Err(Error::NotCoprime { k, modulus: m });
    }
    let mut t = euler_phi(m);
    for &(p, _) in Factorization::of(t).pairs() {
        while t % p == 0 && pow_mod(k, t / p, m) == 1 {
            t /= p;
        }
    }
    Ok(t)
}

/// True iff `k` generates the unit group mod `m`. Vacuously true for `m = 1`.
pub fn is_primitive_root(k: u64, m: u64) -> bool {
    if m == 0 {
        return false;
    }
    match multiplicative_order(k, m) {
        Ok(t) => t == euler_phi(m),
        Err(_) => false,
    }
}

/// Extended Euclid: returns `(g, x)` with `a*x = g (mod m)`.
fn ext_gcd(a: i128, m: i128) -> (i128, i128) {
    let (mut old_r, mut r) = (a, m);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    (old_r, old_s)
}

/// All `x` in `[0, n)` with `k*x = a (mod n)`, ascending.
///
/// There are exactly `gcd(k, n)` of them when that gcd divides `a`, none
/// otherwise.
pub fn solve_linear_congruence(k: i64, a: i64, n: u64) -> Vec<u64> {
    if n == 0 {
        return vec![];
    }
    let nn = n as i128;
    let k = (k as i128).rem_euclid(nn);
    let a = (a as i128).rem_euclid(nn);
    let d = gcd_or_zero(k as u64, n) as i128;
    if a % d != 0 {
        return vec![];
    }
    let step = nn / d;
    if step == 1 {
        return (0..n).collect();
    }
    let (_, inv) = ext_gcd(k / d, step);
    let x0 = ((a / d) * inv).rem_euclid(step);
    (0..d).map(|i| (x0 + i * step) as u64).collect()
}

/// True iff `n | k^m` for some `m >= 0`, i.e. every prime of `n` divides `k`.
pub fn divides_some_power(n: u64, k: u64) -> bool {
    least_power_divisible(n, k).is_some()
}

/// Least `m >= 0` with `n | k^m`, if any.
///
/// The search stops after `Omega(n) + 1` steps: once every prime of `n`
/// divides `k`, `k^Omega(n)` is already a multiple of `n`.
pub fn least_power_divisible(n: u64, k: u64) -> Option<u32> {
    if n == 0 {
        return None;
    }
    let cap = Factorization::of(n).big_omega() + 1;
    let k = k % n;
    let mut acc = 1 % n;
    for m in 0..=cap {
        if acc == 0 {
            return Some(m);
        }
        acc = mul_mod(acc, k, n);
    }
    None
}
