//! Lucas-theorem combinatorics: carry-free summands and multinomial
//! non-vanishing modulo a prime.

/// True iff every base-p digit of `a` is at most the corresponding digit of
/// `l` — equivalently, iff binom(l, a) is nonzero modulo p.  Returns false
/// when a > l.
pub fn carry_free_summand(a: u64, l: u64, p: u64) -> bool {
    assert!(p >= 2, "p must be a prime >= 2");
    if a > l {
        return false;
    }
    let (mut a, mut l) = (a, l);
    while l > 0 {
        if a % p > l % p {
            return false;
        }
        a /= p;
        l /= p;
    }
    true
}

/// True iff the sum of `parts` is carry-free in base p — equivalently, iff
/// the multinomial coefficient (Σ parts; parts) is nonzero modulo p.
///
/// The sum is carry-free exactly when, at every base-p position, the digits
/// of all parts add to less than p.
pub fn multinomial_nonzero_mod_p(parts: &[u64], p: u64) -> bool {
    assert!(p >= 2, "p must be a prime >= 2");
    let mut rest: Vec<u64> = parts.to_vec();
    while rest.iter().any(|&x| x > 0) {
        let digit_sum: u64 = rest.iter().map(|&x| x % p).sum();
        if digit_sum >= p {
            return false;
        }
        for x in rest.iter_mut() {
            *x /= p;
        }
    }
    true
}

/// binom(l, a) reduced modulo p via Lucas's theorem (digitwise products).
pub fn binom_mod_p(l: u64, a: u64, p: u64) -> u64 {
    if a > l {
        return 0;
    }
    let (mut a, mut l) = (a, l);
    let mut acc = 1u64;
    while l > 0 || a > 0 {
        let (ld, ad) = (l % p, a % p);
        acc = acc * small_binom(ld, ad) % p;
        if acc == 0 {
            return 0;
        }
        l /= p;
        a /= p;
    }
    acc
}

/// binom(n, k) for n, k < p (small enough to compute directly in u128).
pub fn small_binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}
