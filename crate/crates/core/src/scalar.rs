//! Scalar integers backing all coefficient arithmetic.
//!
//! Everything in this crate is generic over the unsigned integer type used
//! for residues mod p^a, so the same code runs on `u64` (fast, the default
//! at desk scale) and on `num_bigint::BigUint` when parameters outgrow a
//! machine word. Concrete aliases live at the crate root.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{FromPrimitive, ToPrimitive};

/// Integer scalar for ring coefficients: `u64`, `u128` or `BigUint`.
pub trait Scalar:
    Integer + FromPrimitive + ToPrimitive + Clone + Hash + Debug + Display + Send + Sync + 'static
{
}

impl<T> Scalar for T where
    T: Integer + FromPrimitive + ToPrimitive + Clone + Hash + Debug + Display + Send + Sync + 'static
{
}

/// Small constant lifted into the scalar type.
pub(crate) fn int<I: Scalar>(v: u64) -> I {
    I::from_u64(v).expect("scalar type must represent small constants")
}

pub(crate) fn add_mod<I: Scalar>(x: &I, y: &I, q: &I) -> I {
    (x.clone() + y.clone()) % q.clone()
}

/// `x - y` mod q for operands already reduced into `[0, q)`.
pub(crate) fn sub_mod<I: Scalar>(x: &I, y: &I, q: &I) -> I {
    ((x.clone() + q.clone()) - y.clone()) % q.clone()
}

pub(crate) fn mul_mod<I: Scalar>(x: &I, y: &I, q: &I) -> I {
    (x.clone() * y.clone()) % q.clone()
}

pub(crate) fn neg_mod<I: Scalar>(x: &I, q: &I) -> I {
    if x.is_zero() {
        I::zero()
    } else {
        q.clone() - x.clone()
    }
}

/// Plain power for small structural exponents (p^a, p^m, ...). The caller
/// is responsible for keeping the result inside the scalar's range; ring
/// constructors enforce this through their size guards.
pub(crate) fn pow_small<I: Scalar>(base: &I, exp: u32) -> I {
    let mut acc = I::one();
    for _ in 0..exp {
        acc = acc * base.clone();
    }
    acc
}

/// Modular power with a scalar exponent (square and multiply).
pub(crate) fn mod_pow<I: Scalar>(base: &I, exp: &I, q: &I) -> I {
    let mut acc = I::one() % q.clone();
    let mut b = base.clone() % q.clone();
    let mut e = exp.clone();
    while !e.is_zero() {
        if e.is_odd() {
            acc = mul_mod(&acc, &b, q);
        }
        b = mul_mod(&b, &b, q);
        e = e / int(2);
    }
    acc
}

/// p-adic valuation of `x`, capped at `cap` (returned for `x = 0`).
pub(crate) fn valuation<I: Scalar>(x: &I, p: &I, cap: u32) -> u32 {
    let mut v = 0;
    let mut y = x.clone();
    while v < cap {
        if y.is_zero() {
            return cap;
        }
        if !(y.clone() % p.clone()).is_zero() {
            return v;
        }
        y = y / p.clone();
        v += 1;
    }
    v
}

/// Exact division; the caller guarantees divisibility.
pub(crate) fn exact_div<I: Scalar>(x: &I, d: &I) -> I {
    debug_assert!((x.clone() % d.clone()).is_zero());
    x.clone() / d.clone()
}

/// Inverse of a unit `u` mod q = p^a: Fermat inverse mod p, then Newton
/// lifting `z <- z(2 - uz)` which converges in O(log a) steps.
pub(crate) fn inv_unit_mod<I: Scalar>(u: &I, p: &I, q: &I) -> I {
    debug_assert!(!(u.clone() % p.clone()).is_zero(), "not a unit mod p^a");
    let pm2 = p.clone() - int::<I>(2);
    let mut z = mod_pow(&(u.clone() % p.clone()), &pm2, p);
    let two = int::<I>(2);
    for _ in 0..64 {
        let uz = mul_mod(u, &z, q);
        if uz.is_one() {
            return z;
        }
        z = mul_mod(&z, &sub_mod(&two, &uz, q), q);
    }
    let uz = mul_mod(u, &z, q);
    assert!(uz.is_one(), "unit inversion did not converge");
    z
}

/// Trial-division primality test; adequate for the desk-scale primes the
/// size guards admit.
pub(crate) fn is_prime<I: Scalar>(n: &I) -> bool {
    let two = int::<I>(2);
    if *n < two {
        return false;
    }
    if *n < int(4) {
        return true;
    }
    if n.is_even() {
        return false;
    }
    let mut d = int::<I>(3);
    while d.clone() * d.clone() <= *n {
        if (n.clone() % d.clone()).is_zero() {
            return false;
        }
        d = d + two.clone();
    }
    true
}
