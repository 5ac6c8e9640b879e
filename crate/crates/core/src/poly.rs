//! Univariate polynomials (coefficients low degree first) and their roots in
//! the base field.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::field::{Field, Scalar};

pub type Poly = Vec<Scalar>;

pub fn trim(p: &mut Poly) {
    while p.len() > 1 && p.last().is_some_and(Scalar::is_zero) {
        p.pop();
    }
}

pub fn degree(p: &Poly) -> Option<usize> {
    let d = p.iter().rposition(|c| !c.is_zero())?;
    Some(d)
}

pub fn eval(p: &Poly, x: &Scalar) -> Scalar {
    let mut acc = x.field().zero();
    for c in p.iter().rev() {
        acc = &(&acc * x) + c;
    }
    acc
}

fn sub_poly(a: &Poly, b: &Poly, f: Field) -> Poly {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_else(|| f.zero());
        let y = b.get(i).cloned().unwrap_or_else(|| f.zero());
        out.push(&x - &y);
    }
    trim(&mut out);
    out
}

fn mul_poly(a: &Poly, b: &Poly, f: Field) -> Poly {
    if a.is_empty() || b.is_empty() {
        return vec![f.zero()];
    }
    let mut out = vec![f.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    trim(&mut out);
    out
}

/// Quotient and remainder of `a / b`; `b` must be nonzero.
pub fn divrem(a: &Poly, b: &Poly, f: Field) -> (Poly, Poly) {
    let db = degree(b).expect("division by zero polynomial");
    let lead_inv = b[db].inv();
    let mut r = a.clone();
    trim(&mut r);
    let Some(da) = degree(&r) else {
        return (vec![f.zero()], vec![f.zero()]);
    };
    if da < db {
        return (vec![f.zero()], r);
    }
    let mut q = vec![f.zero(); da - db + 1];
    for k in (0..=da - db).rev() {
        let c = &r[k + db] * &lead_inv;
        if c.is_zero() {
            continue;
        }
        for j in 0..=db {
            r[k + j] = &r[k + j] - &(&c * &b[j]);
        }
        q[k] = c;
    }
    r.truncate(db.max(1));
    trim(&mut r);
    trim(&mut q);
    (q, r)
}

fn monic(p: &Poly) -> Poly {
    match degree(p) {
        None => p.clone(),
        Some(d) => {
            let inv = p[d].inv();
            p[..=d].iter().map(|c| c * &inv).collect()
        }
    }
}

pub fn gcd(a: &Poly, b: &Poly, f: Field) -> Poly {
    let mut a = a.clone();
    let mut b = b.clone();
    trim(&mut a);
    trim(&mut b);
    while degree(&b).is_some() {
        let (_, r) = divrem(&a, &b, f);
        a = b;
        b = r;
    }
    monic(&a)
}

fn powmod(base: &Poly, mut e: u64, m: &Poly, f: Field) -> Poly {
    let mut acc = vec![f.one()];
    let mut b = divrem(base, m, f).1;
    while e > 0 {
        if e & 1 == 1 {
            acc = divrem(&mul_poly(&acc, &b, f), m, f).1;
        }
        e >>= 1;
        if e > 0 {
            b = divrem(&mul_poly(&b, &b, f), m, f).1;
        }
    }
    acc
}

/// Distinct roots of `p` in the field, sorted for determinism.
pub fn roots(p: &Poly, field: Field) -> Vec<Scalar> {
    let mut p = p.clone();
    trim(&mut p);
    if degree(&p).unwrap_or(0) == 0 {
        return Vec::new();
    }
    let mut out = match field {
        Field::Prime(q) if q <= 4096 => (0..q)
            .map(|v| field.from_i64(v as i64))
            .filter(|x| eval(&p, x).is_zero())
            .collect(),
        Field::Prime(q) => prime_roots(&p, field, q),
        Field::Rational => rational_roots(&p),
    };
    out.sort_by_key(|s| s.to_exact_string());
    out.dedup();
    out
}

fn prime_roots(p: &Poly, f: Field, q: u64) -> Vec<Scalar> {
    // g = gcd(p, x^q - x) is the product of the distinct linear factors.
    let x = vec![f.zero(), f.one()];
    let xq = powmod(&x, q, p, f);
    let g = gcd(p, &sub_poly(&xq, &x, f), f);
    let mut out = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    split_linear(g, f, q, &mut rng, &mut out);
    out
}

fn split_linear(g: Poly, f: Field, q: u64, rng: &mut ChaCha8Rng, out: &mut Vec<Scalar>) {
    match degree(&g) {
        None | Some(0) => {}
        Some(1) => out.push(-&(&g[0] * &g[1].inv())),
        Some(_) => {
            if q == 2 {
                for v in 0..2 {
                    let x = f.from_i64(v);
                    if eval(&g, &x).is_zero() {
                        out.push(x);
                    }
                }
                return;
            }
            loop {
                let a = f.from_i64(rng.gen_range(0..q) as i64);
                let h = powmod(&vec![a, f.one()], (q - 1) / 2, &g, f);
                let h1 = sub_poly(&h, &vec![f.one()], f);
                let d = gcd(&g, &h1, f);
                let dd = degree(&d).unwrap_or(0);
                if dd > 0 && dd < degree(&g).unwrap() {
                    let (other, _) = divrem(&g, &d, f);
                    split_linear(d, f, q, rng, out);
                    split_linear(monic(&other), f, q, rng, out);
                    return;
                }
            }
        }
    }
}

fn small_divisors(n: &BigInt, cap: u64) -> Option<Vec<BigInt>> {
    let n = n.abs();
    if n.is_zero() {
        return Some(vec![BigInt::one()]);
    }
    let n_u = n.to_u64()?;
    if n_u > cap {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n_u {
        if n_u % d == 0 {
            out.push(BigInt::from(d));
            if d != n_u / d {
                out.push(BigInt::from(n_u / d));
            }
        }
        d += 1;
    }
    Some(out)
}

/// Rational roots via the rational root theorem on the cleared integer polynomial.
/// Coefficients too large to factor by trial division fall back to a bounded search.
fn rational_roots(p: &Poly) -> Vec<Scalar> {
    let f = Field::Rational;
    let mut denom_lcm = BigInt::one();
    for c in p {
        denom_lcm = denom_lcm.lcm(c.as_rational().unwrap().denom());
    }
    let ints: Vec<BigInt> = p
        .iter()
        .map(|c| {
            let r = c.as_rational().unwrap();
            r.numer() * (&denom_lcm / r.denom())
        })
        .collect();
    let mut out = Vec::new();
    // Strip factors of x: zero is a root.
    let shift = ints.iter().position(|c| !c.is_zero()).unwrap_or(0);
    if shift > 0 {
        out.push(f.zero());
    }
    let ints = &ints[shift..];
    let Some(lead) = ints.iter().rposition(|c| !c.is_zero()) else {
        return out;
    };
    if lead == 0 {
        return out;
    }
    let a0 = &ints[0];
    let an = &ints[lead];
    const CAP: u64 = 1 << 40;
    let (Some(nums), Some(dens)) = (small_divisors(a0, CAP), small_divisors(an, CAP)) else {
        for n in -64i64..=64 {
            let x = f.from_i64(n);
            if eval(p, &x).is_zero() {
                out.push(x);
            }
        }
        return out;
    };
    for n in &nums {
        for d in &dens {
            for sign in [1, -1] {
                let x = f.from_ratio(&(n * BigInt::from(sign)), d).unwrap();
                if eval(p, &x).is_zero() {
                    out.push(x);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(f: Field, c: &[i64]) -> Poly {
        c.iter().map(|&v| f.from_i64(v)).collect()
    }

    #[test]
    fn rational_roots_found() {
        let f = Field::Rational;
        // (x - 1)(2x + 3)(x) = 2x^3 + x^2 - 3x
        let p = poly(f, &[0, -3, 1, 2]);
        let r = roots(&p, f);
        let want: Vec<String> = vec!["-3/2", "0", "1"].into_iter().map(String::from).collect();
        let got: Vec<String> = r.iter().map(|s| s.to_exact_string()).collect();
        assert_eq!(got, want);
        assert!(roots(&poly(f, &[1, 0, 1]), f).is_empty());
    }

    #[test]
    fn large_prime_roots_match_brute_force_shape() {
        let f = Field::prime(10007).unwrap();
        // (x - 3)(x - 5)(x^2 + 1); -1 is a nonresidue mod 10007 since 10007 = 3 mod 4
        let a = poly(f, &[-3, 1]);
        let b = poly(f, &[-5, 1]);
        let c = poly(f, &[1, 0, 1]);
        let p = mul_poly(&mul_poly(&a, &b, f), &c, f);
        let r = roots(&p, f);
        assert_eq!(r.len(), 2);
        assert!(r.contains(&f.from_i64(3)) && r.contains(&f.from_i64(5)));
    }

    #[test]
    fn small_prime_roots() {
        let f = Field::prime(7).unwrap();
        let p = poly(f, &[-1, 0, 1]);
        let r = roots(&p, f);
        assert_eq!(r, vec![f.from_i64(1), f.from_i64(6)]);
    }
}
