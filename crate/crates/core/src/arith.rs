//! Small number-theoretic helpers shared by the group and lattice code.

use serde::{Deserialize, Serialize};

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Sorted list of the positive divisors of `n` (empty for `n == 0`).
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Number of divisors.
pub fn tau(n: u64) -> u64 {
    divisors(n).len() as u64
}

/// Sum of divisors.
pub fn sigma(n: u64) -> u64 {
    divisors(n).iter().sum()
}

/// Prime factorization as `(prime, exponent)` pairs with increasing primes.
pub fn prime_factors(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// `n = 2^alpha * prod p_i^t_i` with the `p_i` distinct odd primes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factorization {
    pub value: u64,
    pub alpha: u32,
    pub odd_primes: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn of(n: u64) -> Self {
        assert!(n >= 1, "factorization of zero");
        let mut alpha = 0;
        let mut odd_primes = Vec::new();
        for (p, e) in prime_factors(n) {
            if p == 2 {
                alpha = e;
            } else {
                odd_primes.push((p, e));
            }
        }
        Factorization {
            value: n,
            alpha,
            odd_primes,
        }
    }

    /// Number of distinct odd primes, `k`.
    pub fn odd_prime_count(&self) -> usize {
        self.odd_primes.len()
    }

    pub fn odd_part(&self) -> u64 {
        self.value >> self.alpha
    }

    pub fn smallest_odd_prime(&self) -> Option<u64> {
        self.odd_primes.first().map(|&(p, _)| p)
    }

    /// The prime `p` if `n = p^m` for some `m >= 1`.
    pub fn prime_power_base(&self) -> Option<u64> {
        match (self.alpha, self.odd_primes.as_slice()) {
            (0, [(p, _)]) => Some(*p),
            (a, []) if a > 0 => Some(2),
            _ => None,
        }
    }
}
