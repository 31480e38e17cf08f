//! Dense polynomials over a prime field F_p, coefficients stored constant term first.
//!
//! Only what modulus selection needs: multiplication modulo a polynomial,
//! Frobenius powers of `X`, gcd and Rabin's irreducibility test.

pub(crate) fn trim(a: &mut Vec<u32>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn inv_mod(a: u32, p: u32) -> u32 {
    // p is prime, so a^(p-2) is the inverse
    let mut result = 1u64;
    let mut base = a as u64 % p as u64;
    let mut exp = p as u64 - 2;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * base % p as u64;
        }
        base = base * base % p as u64;
        exp >>= 1;
    }
    result as u32
}

/// Remainder of `a` modulo `m` (m nonzero, trimmed).
pub(crate) fn rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    trim(&mut r);
    let dm = m.len() - 1;
    let lead_inv = inv_mod(m[dm], p) as u64;
    while r.len() > dm {
        let top = r.len() - 1;
        let c = (r[top] as u64 * lead_inv % p as u64) as u32;
        if c != 0 {
            let shift = top - dm;
            for (k, &mk) in m.iter().enumerate() {
                let sub = (c as u64 * mk as u64 % p as u64) as u32;
                r[shift + k] = (r[shift + k] + p - sub) % p;
            }
        }
        r.pop();
        trim(&mut r);
    }
    r
}

pub(crate) fn mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    let mut out: Vec<u32> = out.into_iter().map(|v| v as u32).collect();
    trim(&mut out);
    out
}

pub(crate) fn mul_mod(a: &[u32], b: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    rem(&mul(a, b, p), m, p)
}

fn pow_mod(base: &[u32], mut exp: u64, m: &[u32], p: u32) -> Vec<u32> {
    let mut result = rem(&[1], m, p);
    let mut b = rem(base, m, p);
    while exp > 0 {
        if exp & 1 == 1 {
            result = mul_mod(&result, &b, m, p);
        }
        b = mul_mod(&b, &b, m, p);
        exp >>= 1;
    }
    result
}

fn sub(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let len = a.len().max(b.len());
    let mut out: Vec<u32> = (0..len)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(&mut out);
    out
}

pub(crate) fn gcd(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let r = rem(&x, &y, p);
        x = y;
        y = r;
    }
    x
}

fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut f = 2;
    while f * f <= n {
        if n % f == 0 {
            out.push(f);
            while n % f == 0 {
                n /= f;
            }
        }
        f += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Rabin's test: `m` (monic, degree N) is irreducible iff `X^{p^N} = X mod m`
/// and `gcd(m, X^{p^{N/r}} - X) = 1` for every prime `r | N`.
pub(crate) fn is_irreducible(m: &[u32], p: u32) -> bool {
    let n = m.len() as u64 - 1;
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    let x = vec![0, 1];
    // frob[j] = X^{p^j} mod m
    let mut frob = vec![rem(&x, m, p)];
    for _ in 0..n {
        let last = frob.last().unwrap().clone();
        frob.push(pow_mod(&last, p as u64, m, p));
    }
    if sub(&frob[n as usize], &x, p) != Vec::<u32>::new() {
        return false;
    }
    prime_divisors(n).into_iter().all(|r| {
        let h = sub(&frob[(n / r) as usize], &x, p);
        gcd(m, &h, p).len() == 1
    })
}

/// Monic polynomial of degree `n` whose lower coefficients are the base-`p`
/// digits of `code`.
pub(crate) fn monic_from_code(code: u64, n: u32, p: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(n as usize + 1);
    let mut c = code;
    for _ in 0..n {
        out.push((c % p as u64) as u32);
        c /= p as u64;
    }
    out.push(1);
    out
}

/// Least monic irreducible polynomial of degree `n` over F_p, ordering
/// candidates by the integer formed from their coefficients with the constant
/// term as the least significant digit.
pub(crate) fn least_irreducible(n: u32, p: u32) -> Vec<u32> {
    let mut code = 0u64;
    loop {
        let cand = monic_from_code(code, n, p);
        if is_irreducible(&cand, p) {
            return cand;
        }
        code += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_moduli() {
        assert_eq!(least_irreducible(1, 3), vec![0, 1]);
        assert_eq!(least_irreducible(2, 2), vec![1, 1, 1]);
        assert_eq!(least_irreducible(3, 2), vec![1, 1, 0, 1]);
        assert_eq!(least_irreducible(4, 2), vec![1, 1, 0, 0, 1]);
        assert_eq!(least_irreducible(2, 3), vec![1, 0, 1]);
    }

    // trial division by every monic polynomial of degree <= n/2
    fn irreducible_by_trial(m: &[u32], p: u32) -> bool {
        let n = m.len() as u32 - 1;
        for d in 1..=n / 2 {
            for code in 0..(p as u64).pow(d) {
                let g = monic_from_code(code, d, p);
                if rem(m, &g, p).is_empty() {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn rabin_agrees_with_trial_division() {
        for (p, n) in [(2u32, 2u32), (2, 3), (2, 4), (2, 6), (3, 2), (3, 3), (3, 4), (5, 2), (5, 3)] {
            for code in 0..(p as u64).pow(n) {
                let m = monic_from_code(code, n, p);
                assert_eq!(is_irreducible(&m, p), irreducible_by_trial(&m, p), "{m:?} over F_{p}");
            }
        }
    }
}
