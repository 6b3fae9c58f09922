//! Small integer helpers: modular arithmetic on `u64`, primality, binomial
//! coefficients mod p (Lucas), prime factorization of small integers.

/// `(a + b) mod m`, assuming `a, b < m`.
#[inline]
pub fn add_mod(a: u64, b: u64, m: u64) -> u64 {
    let s = a + b; // m < 2^63 by the field size policy, no overflow
    if s >= m {
        s - m
    } else {
        s
    }
}

/// `(a - b) mod m`, assuming `a, b < m`.
#[inline]
pub fn sub_mod(a: u64, b: u64, m: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + m - b
    }
}

/// `(a * b) mod m` through a 128-bit product.
#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// `a^e mod m` by repeated squaring.
pub fn pow_mod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, m);
        }
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    acc
}

/// Inverse of `a` mod prime `p` via Fermat.
#[inline]
pub fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    pow_mod(a, p - 2, p)
}

/// Deterministic Miller-Rabin, valid for all `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Binomial coefficient mod prime `p` by Lucas' theorem.
pub fn binom_mod_p(mut n: u64, mut k: u64, p: u64) -> u64 {
    if k > n {
        return 0;
    }
    let mut acc = 1u64;
    while n > 0 || k > 0 {
        let (nd, kd) = (n % p, k % p);
        if kd > nd {
            return 0;
        }
        acc = mul_mod(acc, binom_small(nd, kd, p), p);
        n /= p;
        k /= p;
    }
    acc
}

fn binom_small(n: u64, k: u64, p: u64) -> u64 {
    let mut num = 1u64;
    let mut den = 1u64;
    for i in 0..k {
        num = mul_mod(num, (n - i) % p, p);
        den = mul_mod(den, (i + 1) % p, p);
    }
    mul_mod(num, inv_mod(den, p), p)
}

/// Distinct prime divisors of `n`, ascending.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
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

/// Largest power of `p` dividing `n` (as the power itself, e.g. 9 for n=18, p=3).
pub fn p_part(mut n: u64, p: u64) -> u64 {
    let mut out = 1;
    while n % p == 0 {
        out *= p;
        n /= p;
    }
    out
}

/// `p^e` with overflow detection against the 64-bit policy.
pub fn checked_pow(p: u64, e: u32) -> Option<u64> {
    let mut acc: u64 = 1;
    for _ in 0..e {
        acc = acc.checked_mul(p)?;
    }
    Some(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        assert!(is_prime(2));
        assert!(is_prime(3));
        assert!(!is_prime(4));
        assert!(is_prime(5));
        assert!(!is_prime(1));
        assert!(is_prime(7919));
        assert!(!is_prime(7919 * 7907));
    }

    #[test]
    fn lucas_binomials() {
        // C(6,3) = 20 = 0 mod 5? 20 mod 5 = 0.
        assert_eq!(binom_mod_p(6, 3, 5), 0);
        assert_eq!(binom_mod_p(4, 2, 5), 1); // 6 mod 5
        assert_eq!(binom_mod_p(32, 2, 5), 1); // 496 mod 5
        assert_eq!(binom_mod_p(15, 5, 5), 3); // Lucas: C(3,1)*C(0,0)
    }

    #[test]
    fn p_parts() {
        assert_eq!(p_part(12, 2), 4);
        assert_eq!(p_part(5, 5), 5);
        assert_eq!(p_part(7, 5), 1);
    }
}
