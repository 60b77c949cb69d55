//! Exact arithmetic in the Galois ring GR(p^a, m).
//!
//! A ring is described by a prime p, exponent a, degree m and a monic basic
//! irreducible modulus of degree m over Z_{p^a}. Elements are coefficient
//! vectors of length m with entries in [0, p^a). The descriptor caches the
//! Teichmüller set, the digit alphabet for p-adic expansions.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};

/// Default bound on the ring cardinality p^(a*m) accepted by [`GaloisRing::new`].
/// Exhaustive features (element iteration, Teichmüller caching) stay cheap
/// below it.
pub const DEFAULT_RING_LIMIT: u128 = 1 << 20;

#[derive(Debug)]
pub(crate) struct RingData<I: Scalar> {
    pub(crate) p: I,
    pub(crate) a: u32,
    pub(crate) m: usize,
    /// p^a
    pub(crate) q: I,
    /// Monic basic irreducible, length m + 1, coefficients in [0, q).
    pub(crate) modulus: Vec<I>,
    /// The p^m Teichmüller representatives, indexed by their residue mod p.
    teich: Vec<Vec<I>>,
    /// Residue coefficient vector (mod p) -> index into `teich`.
    teich_lookup: HashMap<Vec<I>, usize>,
    /// p^(a*m)
    cardinality: u128,
}

/// Descriptor of GR(p^a, m). Cheap to clone; immutable after construction.
#[derive(Clone, Debug)]
pub struct GaloisRing<I: Scalar>(pub(crate) Arc<RingData<I>>);

/// Element of a [`GaloisRing`]: m coefficients in [0, p^a).
#[derive(Clone, Debug)]
pub struct GrElement<I: Scalar> {
    ring: GaloisRing<I>,
    coeffs: Vec<I>,
}

// ---------------------------------------------------------------------------
// construction
// ---------------------------------------------------------------------------

impl<I: Scalar> GaloisRing<I> {
    /// Build GR(p^a, m). With `modulus = None` the lexicographically smallest
    /// monic degree-m polynomial that is irreducible mod p is used, coefficients
    /// compared from the constant term up.
    pub fn new(p: I, a: u32, m: usize, modulus: Option<Vec<I>>) -> Result<Self> {
        Self::with_limit(p, a, m, modulus, DEFAULT_RING_LIMIT)
    }

    /// Like [`GaloisRing::new`] with an explicit cardinality bound.
    pub fn with_limit(p: I, a: u32, m: usize, modulus: Option<Vec<I>>, limit: u128) -> Result<Self> {
        if a == 0 || m == 0 {
            return Err(Error::InvalidParameter("a and m must be at least 1".into()));
        }
        if !scalar::is_prime(&p) {
            return Err(Error::NotPrime(format!("{p}")));
        }
        let p128 = p
            .to_u128()
            .ok_or_else(|| Error::TooLarge(format!("p = {p} exceeds the size guard")))?;
        let mut card: u128 = 1;
        for _ in 0..(a as usize * m) {
            card = card
                .checked_mul(p128)
                .filter(|c| *c <= limit)
                .ok_or_else(|| {
                    Error::TooLarge(format!("p^(a*m) exceeds the configured bound {limit}"))
                })?;
        }
        let q = from_u128_checked::<I>(p128.pow(a))?;
        let pm = from_u128_checked::<I>(p128.pow(m as u32))?;

        let modulus = match modulus {
            Some(raw) => {
                let mut f: Vec<I> = raw.into_iter().map(|c| c % q.clone()).collect();
                while f.len() > 1 && f.last().unwrap().is_zero() {
                    f.pop();
                }
                if f.len() != m + 1 {
                    return Err(Error::NotBasicIrreducible(format!(
                        "modulus must have degree {m}"
                    )));
                }
                if !f[m].is_one() {
                    return Err(Error::NotBasicIrreducible("modulus must be monic".into()));
                }
                let fp: Vec<I> = f.iter().map(|c| c.clone() % p.clone()).collect();
                if !fp_is_irreducible(&fp, &p) {
                    return Err(Error::NotBasicIrreducible(
                        "reduction mod p is reducible over the prime field".into(),
                    ));
                }
                f
            }
            None => default_modulus(&p, m, &q),
        };

        let mut data = RingData {
            p: p.clone(),
            a,
            m,
            q,
            modulus,
            teich: Vec::new(),
            teich_lookup: HashMap::new(),
            cardinality: card,
        };
        data.build_teichmuller(&pm)?;
        Ok(GaloisRing(Arc::new(data)))
    }

    pub fn p(&self) -> &I {
        &self.0.p
    }

    pub fn a(&self) -> u32 {
        self.0.a
    }

    pub fn m(&self) -> usize {
        self.0.m
    }

    /// p^a, the characteristic.
    pub fn q(&self) -> &I {
        &self.0.q
    }

    pub fn modulus(&self) -> &[I] {
        &self.0.modulus
    }

    pub fn cardinality(&self) -> u128 {
        self.0.cardinality
    }

    /// The p^m Teichmüller representatives, zero first, in residue order.
    pub fn teichmuller(&self) -> Vec<GrElement<I>> {
        self.0
            .teich
            .iter()
            .map(|c| GrElement { ring: self.clone(), coeffs: c.clone() })
            .collect()
    }

    pub fn zero(&self) -> GrElement<I> {
        GrElement { ring: self.clone(), coeffs: vec![I::zero(); self.0.m] }
    }

    pub fn one(&self) -> GrElement<I> {
        self.from_u64(1)
    }

    /// Embed a small integer as a constant.
    pub fn from_u64(&self, v: u64) -> GrElement<I> {
        let mut coeffs = vec![I::zero(); self.0.m];
        coeffs[0] = scalar::int::<I>(v) % self.0.q.clone();
        GrElement { ring: self.clone(), coeffs }
    }

    /// Embed a signed integer as a constant, reducing mod p^a.
    pub fn from_i64(&self, v: i64) -> GrElement<I> {
        let q = &self.0.q;
        let r = scalar::int::<I>(v.unsigned_abs()) % q.clone();
        let mut coeffs = vec![I::zero(); self.0.m];
        coeffs[0] = if v < 0 { scalar::neg_mod(&r, q) } else { r };
        GrElement { ring: self.clone(), coeffs }
    }

    /// Element from raw coefficients (length m, reduced mod p^a).
    pub fn element(&self, coeffs: Vec<I>) -> Result<GrElement<I>> {
        if coeffs.len() != self.0.m {
            return Err(Error::InvalidParameter(format!(
                "expected {} coefficients, got {}",
                self.0.m,
                coeffs.len()
            )));
        }
        let coeffs = coeffs.into_iter().map(|c| c % self.0.q.clone()).collect();
        Ok(GrElement { ring: self.clone(), coeffs })
    }

    /// The constant p^k reduced mod p^a.
    pub fn p_power(&self, k: u32) -> GrElement<I> {
        let mut coeffs = vec![I::zero(); self.0.m];
        coeffs[0] = scalar::pow_small(&self.0.p, k) % self.0.q.clone();
        GrElement { ring: self.clone(), coeffs }
    }

    /// The class of the degree-m modulus variable (zero when m = 1, where the
    /// ring is just Z_{p^a}).
    pub fn generator(&self) -> GrElement<I> {
        let mut coeffs = vec![I::zero(); self.0.m];
        if self.0.m > 1 {
            coeffs[1] = I::one();
        }
        GrElement { ring: self.clone(), coeffs }
    }

    /// Iterate over all p^(a*m) elements in coefficient-odometer order.
    pub fn elements(&self) -> ElementIter<I> {
        ElementIter { ring: self.clone(), counter: vec![I::zero(); self.0.m], done: false }
    }

    pub fn same_ring(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p
                && self.0.a == other.0.a
                && self.0.m == other.0.m
                && self.0.modulus == other.0.modulus)
    }
}

fn from_u128_checked<I: Scalar>(v: u128) -> Result<I> {
    I::from_u128(v).ok_or_else(|| Error::TooLarge(format!("scalar type cannot represent {v}")))
}

impl<I: Scalar> fmt::Display for GaloisRing<I> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.m == 1 {
            write!(f, "Z_{}", self.0.q)
        } else {
            write!(f, "GR({},{})", self.0.q, self.0.m)
        }
    }
}

// ---------------------------------------------------------------------------
// raw coefficient arithmetic (shared with the ambient module)
// ---------------------------------------------------------------------------

impl<I: Scalar> RingData<I> {
    pub(crate) fn el_zero(&self) -> Vec<I> {
        vec![I::zero(); self.m]
    }

    pub(crate) fn el_is_zero(&self, x: &[I]) -> bool {
        x.iter().all(|c| c.is_zero())
    }

    pub(crate) fn el_add(&self, x: &[I], y: &[I]) -> Vec<I> {
        x.iter().zip(y).map(|(a, b)| scalar::add_mod(a, b, &self.q)).collect()
    }

    pub(crate) fn el_sub(&self, x: &[I], y: &[I]) -> Vec<I> {
        x.iter().zip(y).map(|(a, b)| scalar::sub_mod(a, b, &self.q)).collect()
    }

    pub(crate) fn el_neg(&self, x: &[I]) -> Vec<I> {
        x.iter().map(|a| scalar::neg_mod(a, &self.q)).collect()
    }

    pub(crate) fn el_scale(&self, c: &I, x: &[I]) -> Vec<I> {
        x.iter().map(|a| scalar::mul_mod(c, a, &self.q)).collect()
    }

    pub(crate) fn el_mul(&self, x: &[I], y: &[I]) -> Vec<I> {
        let m = self.m;
        if m == 1 {
            return vec![scalar::mul_mod(&x[0], &y[0], &self.q)];
        }
        let mut prod = vec![I::zero(); 2 * m - 1];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let t = scalar::mul_mod(xi, yj, &self.q);
                prod[i + j] = scalar::add_mod(&prod[i + j], &t, &self.q);
            }
        }
        // reduce by the monic modulus: x^m = -sum modulus[k] x^k
        for d in (m..2 * m - 1).rev() {
            if prod[d].is_zero() {
                continue;
            }
            let c = prod[d].clone();
            prod[d] = I::zero();
            for k in 0..m {
                if self.modulus[k].is_zero() {
                    continue;
                }
                let t = scalar::mul_mod(&c, &self.modulus[k], &self.q);
                prod[d - m + k] = scalar::sub_mod(&prod[d - m + k], &t, &self.q);
            }
        }
        prod.truncate(m);
        prod
    }

    pub(crate) fn el_pow(&self, x: &[I], exp: &I) -> Vec<I> {
        let mut acc = self.el_zero();
        acc[0] = I::one() % self.q.clone();
        let mut base = x.to_vec();
        let mut e = exp.clone();
        let two = scalar::int::<I>(2);
        while !e.is_zero() {
            if e.is_odd() {
                acc = self.el_mul(&acc, &base);
            }
            base = self.el_mul(&base, &base);
            e = e / two.clone();
        }
        acc
    }

    /// Minimum p-valuation over the coefficients; `a` for the zero element.
    pub(crate) fn el_content(&self, x: &[I]) -> u32 {
        x.iter().map(|c| scalar::valuation(c, &self.p, self.a)).min().unwrap_or(self.a)
    }

    pub(crate) fn el_is_unit(&self, x: &[I]) -> bool {
        self.el_content(x) == 0
    }

    /// Exact division by p^k; requires content >= k.
    pub(crate) fn el_div_p(&self, x: &[I], k: u32) -> Vec<I> {
        let pk = scalar::pow_small(&self.p, k);
        x.iter().map(|c| scalar::exact_div(c, &pk)).collect()
    }

    pub(crate) fn el_residue(&self, x: &[I]) -> Vec<I> {
        x.iter().map(|c| c.clone() % self.p.clone()).collect()
    }

    /// The Teichmüller digit congruent to `x` mod p.
    pub(crate) fn teich_digit(&self, x: &[I]) -> &[I] {
        let idx = self.teich_lookup[&self.el_residue(x)];
        &self.teich[idx]
    }

    /// p-adic expansion into `a` Teichmüller digits.
    pub(crate) fn el_digits(&self, x: &[I]) -> Vec<Vec<I>> {
        let mut digits = Vec::with_capacity(self.a as usize);
        let mut v = x.to_vec();
        for _ in 0..self.a {
            let t = self.teich_digit(&v).to_vec();
            v = self.el_div_p(&self.el_sub(&v, &t), 1);
            digits.push(t);
        }
        digits
    }

    /// Inverse of a unit: Fermat inverse mod p lifted by Newton iteration.
    pub(crate) fn el_inverse(&self, x: &[I]) -> Option<Vec<I>> {
        if !self.el_is_unit(x) {
            return None;
        }
        let pm = scalar::pow_small(&self.p, self.m as u32);
        let mut z = self.el_pow(x, &(pm - scalar::int::<I>(2)));
        let mut two = self.el_zero();
        two[0] = scalar::int::<I>(2) % self.q.clone();
        let one = {
            let mut o = self.el_zero();
            o[0] = I::one() % self.q.clone();
            o
        };
        for _ in 0..64 {
            let xz = self.el_mul(x, &z);
            if xz == one {
                return Some(z);
            }
            z = self.el_mul(&z, &self.el_sub(&two, &xz));
        }
        assert!(self.el_mul(x, &z) == one, "unit inversion did not converge");
        Some(z)
    }

    fn build_teichmuller(&mut self, pm: &I) -> Result<()> {
        let count = pm
            .to_usize()
            .ok_or_else(|| Error::TooLarge("Teichmüller set does not fit in memory".into()))?;
        let mut residue = vec![I::zero(); self.m];
        for _ in 0..count {
            let mut t = residue.clone();
            let mut fixed = false;
            for _ in 0..(self.a + 2) {
                let next = self.el_pow(&t, pm);
                if next == t {
                    fixed = true;
                    break;
                }
                t = next;
            }
            if !fixed {
                return Err(Error::Internal("Teichmüller iteration did not converge".into()));
            }
            if self.el_residue(&t) != residue {
                return Err(Error::Internal("Teichmüller lift left its residue class".into()));
            }
            let idx = self.teich.len();
            self.teich.push(t);
            self.teich_lookup.insert(residue.clone(), idx);
            // odometer over residue digits
            for d in residue.iter_mut() {
                *d = d.clone() + I::one();
                if *d == self.p {
                    *d = I::zero();
                } else {
                    break;
                }
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// element API
// ---------------------------------------------------------------------------

impl<I: Scalar> GrElement<I> {
    pub fn ring(&self) -> &GaloisRing<I> {
        &self.ring
    }

    pub fn coeffs(&self) -> &[I] {
        &self.coeffs
    }

    pub(crate) fn from_raw(ring: &GaloisRing<I>, coeffs: Vec<I>) -> Self {
        debug_assert_eq!(coeffs.len(), ring.0.m);
        GrElement { ring: ring.clone(), coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.ring.0.el_is_zero(&self.coeffs)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if self.ring.same_ring(&other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(Self::from_raw(&self.ring, self.ring.0.el_add(&self.coeffs, &other.coeffs)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(Self::from_raw(&self.ring, self.ring.0.el_sub(&self.coeffs, &other.coeffs)))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(Self::from_raw(&self.ring, self.ring.0.el_mul(&self.coeffs, &other.coeffs)))
    }

    pub fn neg(&self) -> Self {
        Self::from_raw(&self.ring, self.ring.0.el_neg(&self.coeffs))
    }

    pub fn pow(&self, exp: &I) -> Self {
        Self::from_raw(&self.ring, self.ring.0.el_pow(&self.coeffs, exp))
    }

    pub fn pow_u64(&self, exp: u64) -> Self {
        self.pow(&scalar::int::<I>(exp))
    }

    /// The unique Teichmüller digits with `self = sum digits[i] * p^i`.
    pub fn p_adic_expansion(&self) -> Vec<Self> {
        self.ring
            .0
            .el_digits(&self.coeffs)
            .into_iter()
            .map(|c| Self::from_raw(&self.ring, c))
            .collect()
    }

    /// True iff the constant digit of the p-adic expansion is nonzero,
    /// equivalently the reduction mod p is nonzero.
    pub fn is_unit(&self) -> bool {
        self.ring.0.el_is_unit(&self.coeffs)
    }

    pub fn inverse(&self) -> Result<Self> {
        self.ring
            .0
            .el_inverse(&self.coeffs)
            .map(|c| Self::from_raw(&self.ring, c))
            .ok_or_else(|| Error::NotAUnit(format!("{self}")))
    }

    /// Min p-valuation over the coefficients; `a` for zero.
    pub fn p_content(&self) -> u32 {
        self.ring.0.el_content(&self.coeffs)
    }

    /// Write a nonzero element as p^k * unit; `None` for zero.
    pub fn unit_factorization(&self) -> Option<(u32, Self)> {
        if self.is_zero() {
            return None;
        }
        let k = self.p_content();
        let u = Self::from_raw(&self.ring, self.ring.0.el_div_p(&self.coeffs, k));
        debug_assert!(u.is_unit());
        Some((k, u))
    }

    /// Exact division by p^k; errors when the content is smaller than k.
    pub fn divide_exact_by_p(&self, k: u32) -> Result<Self> {
        if self.p_content() < k {
            return Err(Error::InvalidParameter(format!(
                "element has p-content {} < {k}",
                self.p_content()
            )));
        }
        Ok(Self::from_raw(&self.ring, self.ring.0.el_div_p(&self.coeffs, k)))
    }

    /// Image in GR(p, m) under coefficientwise reduction.
    pub fn reduce_mod_p(&self, target: &GaloisRing<I>) -> Result<Self> {
        if target.0.a != 1 || target.0.m != self.ring.0.m || target.0.p != self.ring.0.p {
            return Err(Error::RingMismatch);
        }
        Ok(Self::from_raw(target, self.ring.0.el_residue(&self.coeffs)))
    }
}

impl<I: Scalar> PartialEq for GrElement<I> {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_ring(&other.ring) && self.coeffs == other.coeffs
    }
}

impl<I: Scalar> Eq for GrElement<I> {}

impl<I: Scalar> Hash for GrElement<I> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.ring.0.q.hash(state);
        self.ring.0.m.hash(state);
        self.coeffs.hash(state);
    }
}

impl<I: Scalar> fmt::Display for GrElement<I> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ring.0.m == 1 {
            return write!(f, "{}", self.coeffs[0]);
        }
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let part = match i {
                0 => format!("{c}"),
                1 if c.is_one() => "z".to_string(),
                1 => format!("{c}*z"),
                _ if c.is_one() => format!("z^{i}"),
                _ => format!("{c}*z^{i}"),
            };
            parts.push(part);
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join("+"))
        }
    }
}

/// Odometer over all elements of a ring.
pub struct ElementIter<I: Scalar> {
    ring: GaloisRing<I>,
    counter: Vec<I>,
    done: bool,
}

impl<I: Scalar> Iterator for ElementIter<I> {
    type Item = GrElement<I>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let out = GrElement::from_raw(&self.ring, self.counter.clone());
        let q = &self.ring.0.q;
        let mut carried = true;
        for d in self.counter.iter_mut() {
            *d = d.clone() + I::one();
            if *d == *q {
                *d = I::zero();
            } else {
                carried = false;
                break;
            }
        }
        if carried {
            self.done = true;
        }
        Some(out)
    }
}

// ---------------------------------------------------------------------------
// polynomials over the prime field (irreducibility of the modulus)
// ---------------------------------------------------------------------------

fn fp_deg<I: Scalar>(f: &[I]) -> Option<usize> {
    f.iter().rposition(|c| !c.is_zero())
}

fn fp_trim<I: Scalar>(mut f: Vec<I>) -> Vec<I> {
    while f.len() > 1 && f.last().unwrap().is_zero() {
        f.pop();
    }
    f
}

fn fp_rem<I: Scalar>(mut f: Vec<I>, g: &[I], p: &I) -> Vec<I> {
    let dg = fp_deg(g).expect("division by zero polynomial");
    let lc_inv = scalar::inv_unit_mod(&g[dg], p, p);
    while let Some(df) = fp_deg(&f) {
        if df < dg {
            break;
        }
        let c = scalar::mul_mod(&f[df], &lc_inv, p);
        for k in 0..=dg {
            let t = scalar::mul_mod(&c, &g[k], p);
            f[df - dg + k] = scalar::sub_mod(&f[df - dg + k], &t, p);
        }
    }
    fp_trim(f)
}

fn fp_mulmod<I: Scalar>(f: &[I], g: &[I], md: &[I], p: &I) -> Vec<I> {
    let mut prod = vec![I::zero(); f.len() + g.len()];
    for (i, a) in f.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in g.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            let t = scalar::mul_mod(a, b, p);
            prod[i + j] = scalar::add_mod(&prod[i + j], &t, p);
        }
    }
    fp_rem(prod, md, p)
}

fn fp_powmod<I: Scalar>(base: &[I], exp: &I, md: &[I], p: &I) -> Vec<I> {
    let mut acc = vec![I::one()];
    let mut b = base.to_vec();
    let mut e = exp.clone();
    let two = scalar::int::<I>(2);
    while !e.is_zero() {
        if e.is_odd() {
            acc = fp_mulmod(&acc, &b, md, p);
        }
        b = fp_mulmod(&b, &b, md, p);
        e = e / two.clone();
    }
    acc
}

fn fp_gcd<I: Scalar>(f: &[I], g: &[I], p: &I) -> Vec<I> {
    let mut a = fp_trim(f.to_vec());
    let mut b = fp_trim(g.to_vec());
    while fp_deg(&b).is_some() {
        let r = fp_rem(a, &b, p);
        a = b;
        b = r;
    }
    a
}

/// Irreducibility over F_p of a monic degree-m polynomial: x^(p^m) = x mod f
/// and gcd(x^(p^(m/d)) - x, f) = 1 for every prime divisor d of m.
fn fp_is_irreducible<I: Scalar>(f: &[I], p: &I) -> bool {
    let m = match fp_deg(f) {
        Some(d) if d >= 1 => d,
        _ => return false,
    };
    if m == 1 {
        return true;
    }
    let x: Vec<I> = vec![I::zero(), I::one()];
    let frobenius = |k: usize| {
        let mut h = x.clone();
        for _ in 0..k {
            h = fp_powmod(&h, p, f, p);
        }
        h
    };
    let mut top = frobenius(m);
    // x^(p^m) - x must vanish mod f
    if top.len() < 2 {
        top.resize(2, I::zero());
    }
    top[1] = scalar::sub_mod(&top[1], &I::one(), p);
    if fp_deg(&top).is_some() {
        return false;
    }
    for d in prime_divisors(m) {
        let mut h = frobenius(m / d);
        if h.len() < 2 {
            h.resize(2, I::zero());
        }
        h[1] = scalar::sub_mod(&h[1], &I::one(), p);
        let g = fp_gcd(&h, f, p);
        if fp_deg(&g) != Some(0) {
            return false;
        }
    }
    true
}

fn prime_divisors(mut m: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            out.push(d);
            while m.is_multiple_of(d) {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

/// Lexicographically smallest monic irreducible of degree m over F_p,
/// interpreted with coefficients mod p^a. Digits are compared from the
/// constant term up.
fn default_modulus<I: Scalar>(p: &I, m: usize, q: &I) -> Vec<I> {
    let _ = q;
    let mut digits = vec![I::zero(); m];
    loop {
        let mut f = digits.clone();
        f.push(I::one());
        if fp_is_irreducible(&f, p) {
            return f;
        }
        // lex order with the constant digit most significant
        let mut pos = m;
        loop {
            assert!(pos > 0, "no monic irreducible of degree m found");
            pos -= 1;
            digits[pos] = digits[pos].clone() + I::one();
            if digits[pos] == *p {
                digits[pos] = I::zero();
            } else {
                break;
            }
        }
    }
}
