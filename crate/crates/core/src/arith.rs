//! Small modular-arithmetic helpers over `u64`.

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn mul_mod(a: u64, b: u64, n: u64) -> u64 {
    ((u128::from(a) * u128::from(b)) % u128::from(n)) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, n: u64) -> u64 {
    if n == 1 {
        return 0;
    }
    let mut acc = 1;
    base %= n;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, n);
        }
        base = mul_mod(base, base, n);
        exp >>= 1;
    }
    acc
}

/// Modular inverse via the extended Euclidean algorithm.
pub fn inv_mod(a: u64, n: u64) -> Option<u64> {
    let (mut old_r, mut r) = (i128::from(a % n), i128::from(n));
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(i128::from(n)) as u64)
}

/// Trial division below 2^32, deterministic Miller-Rabin above.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 1 << 32 {
        let mut d = 2u64;
        while d * d <= n {
            if n % d == 0 {
                return false;
            }
            d += 1;
        }
        return true;
    }
    miller_rabin(n)
}

fn miller_rabin(n: u64) -> bool {
    // These witnesses are deterministic for all n < 2^64.
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if WITNESSES.contains(&n) {
        return true;
    }
    if WITNESSES.iter().any(|&w| n % w == 0) {
        return false;
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Multiplicative order of `a` modulo `n`, or `None` if `gcd(a, n) != 1`.
pub fn mult_order(a: u64, n: u64) -> Option<u64> {
    if n < 2 || gcd(a % n, n) != 1 {
        return None;
    }
    let mut x = a % n;
    let mut k = 1;
    while x != 1 {
        x = mul_mod(x, a, n);
        k += 1;
    }
    Some(k)
}

/// `floor(log2(n))` for `n >= 1`.
pub fn floor_log2(n: u64) -> u32 {
    assert!(n > 0, "log2 of zero");
    63 - n.leading_zeros()
}

pub fn hamming_weight(n: u64) -> u32 {
    n.count_ones()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_small_and_large() {
        let small: Vec<u64> = (0..40).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]);
        assert!(is_prime(4_294_967_311)); // first prime above 2^32
        assert!(!is_prime(4_294_967_297)); // 641 * 6700417
        assert!(is_prime(18_446_744_073_709_551_557));
    }

    #[test]
    fn orders_and_inverses() {
        assert_eq!(mult_order(2, 5), Some(4));
        assert_eq!(mult_order(2, 7), Some(3));
        assert_eq!(mult_order(2, 6), None);
        assert_eq!(inv_mod(4, 5), Some(4));
        assert_eq!(inv_mod(2, 4), None);
        assert_eq!(floor_log2(162), 7);
        assert_eq!(hamming_weight(162), 3);
    }
}
