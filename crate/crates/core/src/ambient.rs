//! The ambient rings `GR(p^a,m)[x]/(x^(p^s) + 1)` (negacyclic) and
//! `GR(p^a,m)[x]/(x^(p^s) - 1)` (cyclic), whose ideals are the repeated-root
//! codes of length p^s.
//!
//! Elements store the representative of degree < p^s. Besides plain
//! arithmetic this module provides the change of basis into powers of the
//! distinguished nilpotent shift (x+1), which drives generator reduction and
//! distance computation. For cyclic ambients with odd p the nilpotent shift
//! is x-1; everything (x+1)-specific is reached through the x -> -x
//! isomorphism instead.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::galois::{GaloisRing, GrElement};
use crate::scalar::{self, Scalar};

/// Which sign x^(p^s) reduces to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CodeKind {
    Negacyclic,
    Cyclic,
}

impl CodeKind {
    pub fn opposite(self) -> Self {
        match self {
            CodeKind::Negacyclic => CodeKind::Cyclic,
            CodeKind::Cyclic => CodeKind::Negacyclic,
        }
    }
}

impl fmt::Display for CodeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CodeKind::Negacyclic => write!(f, "negacyclic"),
            CodeKind::Cyclic => write!(f, "cyclic"),
        }
    }
}

#[derive(Debug)]
struct AmbientData<I: Scalar> {
    ring: GaloisRing<I>,
    s: u32,
    n: usize,
    kind: CodeKind,
    residue: OnceLock<Ambient<I>>,
}

/// Descriptor of one ambient ring. Cheap to clone.
#[derive(Clone, Debug)]
pub struct Ambient<I: Scalar>(Arc<AmbientData<I>>);

/// Element of an ambient ring: p^s Galois-ring coefficients, index i holding
/// the coefficient of x^i.
#[derive(Clone, Debug)]
pub struct AmbientElement<I: Scalar> {
    ambient: Ambient<I>,
    coeffs: Vec<Vec<I>>,
}

impl<I: Scalar> Ambient<I> {
    /// Ambient of length p^s over `ring`. Rejects s = 0 (the trivial case)
    /// and lengths that do not fit in memory; arithmetic itself has no
    /// cardinality bound.
    pub fn new(ring: GaloisRing<I>, s: u32, kind: CodeKind) -> Result<Self> {
        if s == 0 {
            return Err(Error::InvalidParameter("s must be at least 1".into()));
        }
        let p = ring
            .p()
            .to_u128()
            .ok_or_else(|| Error::TooLarge("p exceeds the addressable length".into()))?;
        let mut n: u128 = 1;
        for _ in 0..s {
            n = n
                .checked_mul(p)
                .filter(|v| *v <= usize::MAX as u128)
                .ok_or_else(|| Error::TooLarge("p^s exceeds the addressable length".into()))?;
        }
        Ok(Ambient(Arc::new(AmbientData {
            ring,
            s,
            n: n as usize,
            kind,
            residue: OnceLock::new(),
        })))
    }

    pub fn ring(&self) -> &GaloisRing<I> {
        &self.0.ring
    }

    pub fn s(&self) -> u32 {
        self.0.s
    }

    /// Code length n = p^s.
    pub fn n(&self) -> usize {
        self.0.n
    }

    pub fn kind(&self) -> CodeKind {
        self.0.kind
    }

    /// Number of elements q^(n*m), if it fits in a u128.
    pub fn cardinality(&self) -> Option<u128> {
        let q = self.0.ring.q().to_u128()?;
        let mut card: u128 = 1;
        for _ in 0..(self.0.n * self.0.ring.m()) {
            card = card.checked_mul(q)?;
        }
        Some(card)
    }

    pub fn same_ambient(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.s == other.0.s
                && self.0.kind == other.0.kind
                && self.0.ring.same_ring(&other.0.ring))
    }

    /// True when x+1 generates the radical together with p, i.e. the
    /// (x+1)-canonical machinery applies directly: negacyclic ambients for
    /// every p, cyclic ambients for p = 2. For cyclic ambients with odd p
    /// the nilpotent shift is x-1 and (x+1) is a unit.
    pub fn has_xplus1_structure(&self) -> bool {
        self.0.kind == CodeKind::Negacyclic || *self.0.ring.p() == scalar::int(2)
    }

    /// Evaluation point r such that the nilpotent shift is x - r:
    /// -1 (negacyclic, and cyclic with p = 2) or +1 (cyclic, odd p).
    pub(crate) fn shift_root(&self) -> I {
        if self.has_xplus1_structure() {
            scalar::neg_mod(&I::one(), self.0.ring.q())
        } else {
            I::one()
        }
    }

    pub fn zero(&self) -> AmbientElement<I> {
        AmbientElement {
            ambient: self.clone(),
            coeffs: vec![self.0.ring.0.el_zero(); self.0.n],
        }
    }

    pub fn one(&self) -> AmbientElement<I> {
        self.monomial(0, &self.0.ring.one())
    }

    pub fn x(&self) -> AmbientElement<I> {
        self.monomial(1, &self.0.ring.one())
    }

    /// x + 1.
    pub fn x_plus_one(&self) -> AmbientElement<I> {
        let mut e = self.x();
        e.coeffs[0] = self.0.ring.one().coeffs().to_vec();
        e
    }

    /// The distinguished nilpotent x - shift_root: x+1, or x-1 for cyclic
    /// ambients with odd p.
    pub fn shift(&self) -> AmbientElement<I> {
        let mut e = self.x();
        let mut c0 = self.0.ring.0.el_zero();
        c0[0] = scalar::neg_mod(&self.shift_root(), self.0.ring.q());
        e.coeffs[0] = c0;
        e
    }

    pub fn monomial(&self, degree: usize, c: &GrElement<I>) -> AmbientElement<I> {
        assert!(degree < self.0.n, "monomial degree must be below p^s");
        let mut coeffs = vec![self.0.ring.0.el_zero(); self.0.n];
        coeffs[degree] = c.coeffs().to_vec();
        AmbientElement { ambient: self.clone(), coeffs }
    }

    /// Element from Galois-ring coefficients, lowest degree first; shorter
    /// vectors are zero padded.
    pub fn element(&self, coeffs: Vec<GrElement<I>>) -> Result<AmbientElement<I>> {
        if coeffs.len() > self.0.n {
            return Err(Error::InvalidParameter(format!(
                "got {} coefficients for length {}",
                coeffs.len(),
                self.0.n
            )));
        }
        let mut raw = Vec::with_capacity(self.0.n);
        for c in &coeffs {
            if !c.ring().same_ring(&self.0.ring) {
                return Err(Error::RingMismatch);
            }
            raw.push(c.coeffs().to_vec());
        }
        raw.resize(self.0.n, self.0.ring.0.el_zero());
        Ok(AmbientElement { ambient: self.clone(), coeffs: raw })
    }

    /// Element from signed integer coefficients, lowest degree first.
    pub fn from_ints(&self, coeffs: &[i64]) -> AmbientElement<I> {
        let gr: Vec<GrElement<I>> = coeffs.iter().map(|&v| self.0.ring.from_i64(v)).collect();
        self.element(gr).expect("constants always embed")
    }

    #[allow(clippy::wrong_self_convention)]
    pub(crate) fn from_raw(&self, coeffs: Vec<Vec<I>>) -> AmbientElement<I> {
        debug_assert_eq!(coeffs.len(), self.0.n);
        AmbientElement { ambient: self.clone(), coeffs }
    }

    /// The same ambient over GR(p, m) (coefficients reduced mod p).
    pub fn residue_ambient(&self) -> &Ambient<I> {
        self.0.residue.get_or_init(|| {
            if self.0.ring.a() == 1 {
                return self.clone();
            }
            let ring = &self.0.ring;
            let modulus: Vec<I> =
                ring.modulus().iter().map(|c| c.clone() % ring.p().clone()).collect();
            let residue_ring = GaloisRing::with_limit(
                ring.p().clone(),
                1,
                ring.m(),
                Some(modulus),
                ring.cardinality(),
            )
            .expect("residue ring parameters are valid");
            Ambient::new(residue_ring, self.0.s, self.0.kind)
                .expect("residue ambient parameters are valid")
        })
    }

    /// The ambient of the opposite kind over the same ring.
    pub fn opposite_kind(&self) -> Ambient<I> {
        Ambient::new(self.0.ring.clone(), self.0.s, self.0.kind.opposite())
            .expect("parameters already validated")
    }

    /// Index N with shift^N = 0 and shift^(N-1) != 0, where shift is x+1
    /// (x-1 for cyclic ambients with odd p, through the x -> -x isomorphism).
    /// Closed forms are used where available; the p = 2 negacyclic chain case
    /// falls back to direct powering.
    pub fn nilpotency_index(&self) -> u64 {
        let a = self.0.ring.a() as u64;
        let p = self.0.ring.p();
        let n = self.0.n as u64;
        let p_is_two = *p == scalar::int(2);
        if a == 1 {
            return n;
        }
        match self.0.kind {
            CodeKind::Negacyclic if !p_is_two => {
                // p^s a - p^(s-1) (a-1)
                let ps1 = n / p.to_u64().expect("p fits u64 when n does");
                n * a - ps1 * (a - 1)
            }
            CodeKind::Cyclic if p_is_two => (a + 1) * (n / 2),
            CodeKind::Cyclic => {
                let ps1 = n / p.to_u64().expect("p fits u64 when n does");
                n * a - ps1 * (a - 1)
            }
            CodeKind::Negacyclic => {
                // p = 2 negacyclic: chain ambient, no closed form in scope
                nilpotency_by_powering(&self.x_plus_one(), a * n + 2)
            }
        }
    }
}

fn nilpotency_by_powering<I: Scalar>(z: &AmbientElement<I>, cap: u64) -> u64 {
    let mut pow = z.clone();
    let mut k = 1;
    while !pow.is_zero() {
        pow = pow.mul(z).expect("same ambient");
        k += 1;
        assert!(k <= cap, "element is not nilpotent within the expected bound");
    }
    k
}

impl<I: Scalar> fmt::Display for Ambient<I> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = match self.0.kind {
            CodeKind::Negacyclic => '+',
            CodeKind::Cyclic => '-',
        };
        write!(f, "{}[x]/(x^{}{}1)", self.0.ring, self.0.n, sign)
    }
}

// ---------------------------------------------------------------------------
// element operations
// ---------------------------------------------------------------------------

impl<I: Scalar> AmbientElement<I> {
    pub fn ambient(&self) -> &Ambient<I> {
        &self.ambient
    }

    pub(crate) fn raw(&self) -> &[Vec<I>] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> GrElement<I> {
        GrElement::from_raw(&self.ambient.0.ring, self.coeffs[i].clone())
    }

    pub fn coeffs(&self) -> Vec<GrElement<I>> {
        (0..self.coeffs.len()).map(|i| self.coeff(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| self.ambient.0.ring.0.el_is_zero(c))
    }

    pub fn is_one(&self) -> bool {
        *self == self.ambient.one()
    }

    /// Degree of the stored representative; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !self.ambient.0.ring.0.el_is_zero(c))
    }

    pub fn leading_coeff(&self) -> Option<GrElement<I>> {
        self.degree().map(|d| self.coeff(d))
    }

    /// Number of nonzero coefficients of the representative.
    pub fn weight(&self) -> usize {
        self.coeffs.iter().filter(|c| !self.ambient.0.ring.0.el_is_zero(c)).count()
    }

    fn check_ambient(&self, other: &Self) -> Result<()> {
        if self.ambient.same_ambient(&other.ambient) {
            Ok(())
        } else {
            Err(Error::AmbientMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let ring = &self.ambient.0.ring.0;
        let coeffs =
            self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| ring.el_add(a, b)).collect();
        Ok(Self { ambient: self.ambient.clone(), coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let ring = &self.ambient.0.ring.0;
        let coeffs =
            self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| ring.el_sub(a, b)).collect();
        Ok(Self { ambient: self.ambient.clone(), coeffs })
    }

    pub fn neg(&self) -> Self {
        let ring = &self.ambient.0.ring.0;
        Self {
            ambient: self.ambient.clone(),
            coeffs: self.coeffs.iter().map(|c| ring.el_neg(c)).collect(),
        }
    }

    /// Schoolbook product reduced by x^n = -1 (negacyclic) or x^n = +1 (cyclic).
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let ring = &self.ambient.0.ring.0;
        let n = self.ambient.0.n;
        let negacyclic = self.ambient.0.kind == CodeKind::Negacyclic;
        let mut acc = vec![ring.el_zero(); n];
        for (i, xi) in self.coeffs.iter().enumerate() {
            if ring.el_is_zero(xi) {
                continue;
            }
            for (j, yj) in other.coeffs.iter().enumerate() {
                if ring.el_is_zero(yj) {
                    continue;
                }
                let t = ring.el_mul(xi, yj);
                let k = i + j;
                if k < n {
                    acc[k] = ring.el_add(&acc[k], &t);
                } else if negacyclic {
                    acc[k - n] = ring.el_sub(&acc[k - n], &t);
                } else {
                    acc[k - n] = ring.el_add(&acc[k - n], &t);
                }
            }
        }
        Ok(Self { ambient: self.ambient.clone(), coeffs: acc })
    }

    /// Multiply by x: a single (nega)cyclic shift.
    pub fn mul_by_x(&self) -> Self {
        let ring = &self.ambient.0.ring.0;
        let n = self.ambient.0.n;
        let mut coeffs = Vec::with_capacity(n);
        let wrap = if self.ambient.0.kind == CodeKind::Negacyclic {
            ring.el_neg(&self.coeffs[n - 1])
        } else {
            self.coeffs[n - 1].clone()
        };
        coeffs.push(wrap);
        coeffs.extend_from_slice(&self.coeffs[..n - 1]);
        Self { ambient: self.ambient.clone(), coeffs }
    }

    /// Multiply every coefficient by a Galois-ring scalar.
    pub fn scale(&self, c: &GrElement<I>) -> Result<Self> {
        if !c.ring().same_ring(&self.ambient.0.ring) {
            return Err(Error::RingMismatch);
        }
        let ring = &self.ambient.0.ring.0;
        let coeffs = self.coeffs.iter().map(|x| ring.el_mul(c.coeffs(), x)).collect();
        Ok(Self { ambient: self.ambient.clone(), coeffs })
    }

    pub fn pow_u64(&self, exp: u64) -> Self {
        let mut acc = self.ambient.one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same ambient");
            }
            base = base.mul(&base).expect("same ambient");
            e >>= 1;
        }
        acc
    }

    /// Coefficients a_0..a_{n-1} with self = sum a_i (x+1)^i; exact inverse
    /// of [`Ambient::from_xplus1_expansion`]. Valid in every ambient (it is a
    /// plain unitriangular change of basis on representatives).
    pub fn xplus1_expansion(&self) -> Vec<GrElement<I>> {
        let neg_one = scalar::neg_mod(&I::one(), self.ambient.0.ring.q());
        self.expansion_at(&neg_one)
            .into_iter()
            .map(|c| GrElement::from_raw(&self.ambient.0.ring, c))
            .collect()
    }

    /// Expansion in powers of the distinguished nilpotent shift: identical to
    /// the (x+1)-expansion except in cyclic ambients with odd p, where the
    /// shift is x-1.
    pub fn shift_expansion(&self) -> Vec<GrElement<I>> {
        let root = self.ambient.shift_root();
        self.expansion_at(&root)
            .into_iter()
            .map(|c| GrElement::from_raw(&self.ambient.0.ring, c))
            .collect()
    }

    /// Digits d_i with self = sum d_i (x - root)^i, by iterated synthetic
    /// division of the representative.
    pub(crate) fn expansion_at(&self, root: &I) -> Vec<Vec<I>> {
        let ring = &self.ambient.0.ring.0;
        let n = self.ambient.0.n;
        let mut work = self.coeffs.clone();
        let mut out = Vec::with_capacity(n);
        for step in 0..n {
            let top = n - step;
            // divide work[0..top] by (x - root); the remainder is the digit
            // and the quotient is left in work[0..top-1]
            let mut carry = ring.el_zero();
            for i in (0..top).rev() {
                let t = ring.el_add(&work[i], &ring.el_scale(root, &carry));
                if i == 0 {
                    out.push(t.clone());
                }
                work[i] = carry.clone();
                carry = t;
            }
        }
        out
    }

    /// Lowest index with a nonzero digit in the shift expansion; n for zero.
    pub fn shift_valuation(&self) -> usize {
        let root = self.ambient.shift_root();
        let ring = &self.ambient.0.ring.0;
        self.expansion_at(&root)
            .iter()
            .position(|c| !ring.el_is_zero(c))
            .unwrap_or(self.ambient.0.n)
    }

    /// Minimum p-content over the coefficients; `a` for zero.
    pub fn p_content(&self) -> u32 {
        let ring = &self.ambient.0.ring.0;
        self.coeffs.iter().map(|c| ring.el_content(c)).min().unwrap_or(ring.a)
    }

    /// Exact coefficientwise division by p^k.
    pub fn divide_exact_by_p(&self, k: u32) -> Result<Self> {
        if self.p_content() < k {
            return Err(Error::InvalidParameter(format!(
                "element has p-content {} < {k}",
                self.p_content()
            )));
        }
        let ring = &self.ambient.0.ring.0;
        Ok(Self {
            ambient: self.ambient.clone(),
            coeffs: self.coeffs.iter().map(|c| ring.el_div_p(c, k)).collect(),
        })
    }

    /// Coefficientwise reduction mod p into the GR(p, m) ambient of the same
    /// kind and length.
    pub fn reduce_mod_p(&self) -> Self {
        let target = self.ambient.residue_ambient();
        let ring = &self.ambient.0.ring.0;
        target.from_raw(self.coeffs.iter().map(|c| ring.el_residue(c)).collect())
    }

    /// Representative evaluated at a prime-subring scalar point.
    fn eval_at_scalar(&self, point: &I) -> Vec<I> {
        let ring = &self.ambient.0.ring.0;
        let mut acc = ring.el_zero();
        for c in self.coeffs.iter().rev() {
            acc = ring.el_add(&ring.el_scale(point, &acc), c);
        }
        acc
    }

    /// Units are exactly the elements whose constant shift digit is a unit of
    /// the coefficient ring (the ambient is local with radical <p, shift>).
    pub fn is_unit(&self) -> bool {
        let ring = &self.ambient.0.ring.0;
        ring.el_is_unit(&self.eval_at_scalar(&self.ambient.shift_root()))
    }

    /// Newton iteration z <- z(2 - fz) seeded with the inverse of the
    /// constant shift digit; converges because the correction is radical.
    pub fn inverse(&self) -> Result<Self> {
        let ring = &self.ambient.0.ring.0;
        let a0 = self.eval_at_scalar(&self.ambient.shift_root());
        let a0_inv = ring
            .el_inverse(&a0)
            .ok_or_else(|| Error::NotAUnit(format!("{self}")))?;
        let mut z = self.ambient.monomial(0, &GrElement::from_raw(&self.ambient.0.ring, a0_inv));
        let two = self.ambient.from_ints(&[2]);
        for _ in 0..64 {
            let fz = self.mul(&z)?;
            if fz.is_one() {
                return Ok(z);
            }
            z = z.mul(&two.sub(&fz)?)?;
        }
        Err(Error::Internal("ambient unit inversion did not converge".into()))
    }

    /// The image under x -> -x, a ring isomorphism between the negacyclic and
    /// cyclic ambients for odd p. Undefined for p = 2.
    pub fn substitute_neg_x(&self) -> Result<Self> {
        if *self.ambient.0.ring.p() == scalar::int(2) {
            return Err(Error::Unsupported(
                "x -> -x is not an isomorphism between the p = 2 ambients".into(),
            ));
        }
        let target = self.ambient.opposite_kind();
        let ring = &self.ambient.0.ring.0;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 1 { ring.el_neg(c) } else { c.clone() })
            .collect();
        Ok(target.from_raw(coeffs))
    }
}

impl<I: Scalar> Ambient<I> {
    /// Rebuild an element from its (x+1)-digits.
    pub fn from_xplus1_expansion(&self, digits: &[GrElement<I>]) -> Result<AmbientElement<I>> {
        let neg_one = scalar::neg_mod(&I::one(), self.0.ring.q());
        let raw: Result<Vec<Vec<I>>> = digits
            .iter()
            .map(|d| {
                if d.ring().same_ring(&self.0.ring) {
                    Ok(d.coeffs().to_vec())
                } else {
                    Err(Error::RingMismatch)
                }
            })
            .collect();
        self.from_expansion_at(&neg_one, &raw?)
    }

    #[allow(clippy::wrong_self_convention)]
    pub(crate) fn from_expansion_at(&self, root: &I, digits: &[Vec<I>]) -> Result<AmbientElement<I>> {
        if digits.len() > self.0.n {
            return Err(Error::InvalidParameter(format!(
                "got {} digits for length {}",
                digits.len(),
                self.0.n
            )));
        }
        let ring = &self.0.ring.0;
        let n = self.0.n;
        let neg_root = scalar::neg_mod(root, self.0.ring.q());
        let mut acc = vec![ring.el_zero(); n];
        for d in digits.iter().rev() {
            // acc <- acc * (x - root) + d; degrees stay below n
            debug_assert!(ring.el_is_zero(&acc[n - 1]));
            for i in (0..n).rev() {
                let shifted = if i == 0 { ring.el_zero() } else { acc[i - 1].clone() };
                acc[i] = ring.el_add(&shifted, &ring.el_scale(&neg_root, &acc[i]));
            }
            acc[0] = ring.el_add(&acc[0], d);
        }
        Ok(AmbientElement { ambient: self.clone(), coeffs: acc })
    }
}

impl<I: Scalar> PartialEq for AmbientElement<I> {
    fn eq(&self, other: &Self) -> bool {
        self.ambient.same_ambient(&other.ambient) && self.coeffs == other.coeffs
    }
}

impl<I: Scalar> Eq for AmbientElement<I> {}

impl<I: Scalar> Hash for AmbientElement<I> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.ambient.0.n.hash(state);
        self.ambient.0.kind.hash(state);
        self.coeffs.hash(state);
    }
}

impl<I: Scalar> fmt::Display for AmbientElement<I> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ring = &self.ambient.0.ring;
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if ring.0.el_is_zero(c) {
                continue;
            }
            let ce = GrElement::from_raw(ring, c.clone());
            let coeff = if ring.m() == 1 {
                format!("{ce}")
            } else {
                format!("({ce})")
            };
            let part = match i {
                0 => coeff,
                1 if ce.is_one() => "x".to_string(),
                1 => format!("{coeff}*x"),
                _ if ce.is_one() => format!("x^{i}"),
                _ => format!("{coeff}*x^{i}"),
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

#[cfg(test)]
mod tests {
    use super::*;

    fn z9_nega(s: u32) -> Ambient<u64> {
        Ambient::new(GaloisRing::new(3, 2, 1, None).unwrap(), s, CodeKind::Negacyclic).unwrap()
    }

    #[test]
    fn construction_and_cardinality() {
        let amb = z9_nega(1);
        assert_eq!(amb.n(), 3);
        assert_eq!(amb.cardinality(), Some(729));
        let big = z9_nega(3);
        assert_eq!(big.n(), 27);
        let cyc =
            Ambient::new(GaloisRing::new(2u64, 2, 1, None).unwrap(), 2, CodeKind::Cyclic).unwrap();
        assert_eq!(cyc.n(), 4);
        assert!(matches!(
            Ambient::new(GaloisRing::new(3u64, 2, 1, None).unwrap(), 0, CodeKind::Cyclic),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn reduction_rules() {
        let amb = z9_nega(1);
        // x * x^2 = -1 = 8
        let prod = amb.x().mul(&amb.monomial(2, &amb.ring().one())).unwrap();
        assert_eq!(prod, amb.from_ints(&[8]));
        // (x+1)^3 = 3x^2 + 3x in Z_9[x]/(x^3+1)
        let cube = amb.x_plus_one().pow_u64(3);
        assert_eq!(cube, amb.from_ints(&[0, 3, 3]));
        // cyclic: x^3 * x = 1 in Z_4[x]/(x^4-1)
        let cyc =
            Ambient::new(GaloisRing::new(2u64, 2, 1, None).unwrap(), 2, CodeKind::Cyclic).unwrap();
        let prod = cyc.monomial(3, &cyc.ring().one()).mul(&cyc.x()).unwrap();
        assert!(prod.is_one());
    }

    #[test]
    fn xplus1_expansion_examples() {
        let amb = z9_nega(1);
        // x = (x+1) - 1
        let digits = amb.x().xplus1_expansion();
        let vals: Vec<u64> = digits.iter().map(|d| d.coeffs()[0]).collect();
        assert_eq!(vals, vec![8, 1, 0]);
        // 1 = 1
        let vals: Vec<u64> =
            amb.one().xplus1_expansion().iter().map(|d| d.coeffs()[0]).collect();
        assert_eq!(vals, vec![1, 0, 0]);
        // x^2 = (x+1)^2 - 2(x+1) + 1
        let x2 = amb.monomial(2, &amb.ring().one());
        let vals: Vec<u64> = x2.xplus1_expansion().iter().map(|d| d.coeffs()[0]).collect();
        assert_eq!(vals, vec![1, 7, 1]);
    }

    #[test]
    fn xplus1_round_trip_exhaustive() {
        let amb = z9_nega(1);
        // all 729 elements round-trip through the basis change
        let ring = amb.ring().clone();
        for c0 in ring.elements() {
            for c1 in ring.elements() {
                for c2 in ring.elements() {
                    let f = amb.element(vec![c0.clone(), c1.clone(), c2.clone()]).unwrap();
                    let digits = f.xplus1_expansion();
                    let back = amb.from_xplus1_expansion(&digits).unwrap();
                    assert_eq!(back, f);
                }
            }
        }
    }

    #[test]
    fn weight_examples() {
        let amb = z9_nega(1);
        assert_eq!(amb.zero().weight(), 0);
        let w = amb.from_ints(&[3]).mul(&amb.x_plus_one().pow_u64(2)).unwrap();
        // 3(x+1)^2 = 3x^2 + 6x + 3
        assert_eq!(w, amb.from_ints(&[3, 6, 3]));
        assert_eq!(w.weight(), 3);
        let big = z9_nega(3);
        let f = big.monomial(5, &big.ring().one()).add(&big.from_ints(&[2])).unwrap();
        assert_eq!(f.weight(), 2);
    }

    #[test]
    fn nilpotency_closed_forms() {
        // (p=3, a=2, m=1, s=1, negacyclic) -> 5
        assert_eq!(z9_nega(1).nilpotency_index(), 5);
        // (p=2, a=2, m=1, s=2, cyclic) -> 6
        let cyc =
            Ambient::new(GaloisRing::new(2u64, 2, 1, None).unwrap(), 2, CodeKind::Cyclic).unwrap();
        assert_eq!(cyc.nilpotency_index(), 6);
        // (p=3, a=1, m=1, s=2, negacyclic) -> 9 (chain ring)
        let chain =
            Ambient::new(GaloisRing::new(3u64, 1, 1, None).unwrap(), 2, CodeKind::Negacyclic)
                .unwrap();
        assert_eq!(chain.nilpotency_index(), 9);
    }

    #[test]
    fn nilpotency_matches_direct_powering() {
        for (ring, s, kind) in [
            (GaloisRing::new(3u64, 2, 1, None).unwrap(), 1, CodeKind::Negacyclic),
            (GaloisRing::new(3u64, 2, 1, None).unwrap(), 2, CodeKind::Negacyclic),
            (GaloisRing::new(2u64, 2, 1, None).unwrap(), 2, CodeKind::Cyclic),
            (GaloisRing::new(2u64, 3, 1, None).unwrap(), 1, CodeKind::Cyclic),
            (GaloisRing::new(2u64, 2, 1, None).unwrap(), 2, CodeKind::Negacyclic),
            (GaloisRing::new(3u64, 1, 1, None).unwrap(), 2, CodeKind::Negacyclic),
            (GaloisRing::new(2u64, 2, 2, None).unwrap(), 1, CodeKind::Cyclic),
        ] {
            let amb = Ambient::new(ring, s, kind).unwrap();
            let want = amb.nilpotency_index();
            let z = amb.x_plus_one();
            assert!(z.pow_u64(want).is_zero());
            assert!(!z.pow_u64(want - 1).is_zero());
        }
        // cyclic odd p: the nilpotent shift is x-1 and matches the negacyclic value
        let cyc =
            Ambient::new(GaloisRing::new(3u64, 2, 1, None).unwrap(), 1, CodeKind::Cyclic).unwrap();
        let want = cyc.nilpotency_index();
        assert_eq!(want, 5);
        let shift = cyc.shift();
        assert_eq!(shift, cyc.from_ints(&[-1, 1]));
        assert!(shift.pow_u64(want).is_zero());
        assert!(!shift.pow_u64(want - 1).is_zero());
        // and x+1 itself is a unit there
        assert!(cyc.x_plus_one().is_unit());
    }

    #[test]
    fn substitution_map() {
        let amb = z9_nega(1);
        let img = amb.x().substitute_neg_x().unwrap();
        assert_eq!(img.ambient().kind(), CodeKind::Cyclic);
        assert_eq!(img, img.ambient().from_ints(&[0, -1]));
        assert!(amb.one().substitute_neg_x().unwrap().is_one());
        // x^2 + x + 1 -> x^2 - x + 1
        let f = amb.from_ints(&[1, 1, 1]);
        let img = f.substitute_neg_x().unwrap();
        assert_eq!(img, img.ambient().from_ints(&[1, -1, 1]));
        // round trip is the identity
        assert_eq!(img.substitute_neg_x().unwrap(), f);
        // p = 2 has no such isomorphism
        let two =
            Ambient::new(GaloisRing::new(2u64, 2, 1, None).unwrap(), 1, CodeKind::Cyclic).unwrap();
        assert!(matches!(two.x().substitute_neg_x(), Err(Error::Unsupported(_))));
    }

    #[test]
    fn substitution_is_a_weight_preserving_homomorphism() {
        let amb = z9_nega(1);
        let elems: Vec<_> = (0..40u64)
            .map(|k| amb.from_ints(&[(k % 9) as i64, ((k * 5 + 1) % 9) as i64, ((k * 7 + 3) % 9) as i64]))
            .collect();
        for f in &elems {
            assert_eq!(f.substitute_neg_x().unwrap().weight(), f.weight());
            for g in &elems {
                let fg = f.mul(g).unwrap().substitute_neg_x().unwrap();
                let fg2 =
                    f.substitute_neg_x().unwrap().mul(&g.substitute_neg_x().unwrap()).unwrap();
                assert_eq!(fg, fg2);
                let sum = f.add(g).unwrap().substitute_neg_x().unwrap();
                let sum2 =
                    f.substitute_neg_x().unwrap().add(&g.substitute_neg_x().unwrap()).unwrap();
                assert_eq!(sum, sum2);
            }
        }
    }

    #[test]
    fn reduce_mod_p_examples() {
        let amb = z9_nega(1);
        // 3x + 6 -> 0
        assert!(amb.from_ints(&[6, 3]).reduce_mod_p().is_zero());
        // x + 8 -> x + 2
        let r = amb.from_ints(&[8, 1]).reduce_mod_p();
        assert_eq!(r, r.ambient().from_ints(&[2, 1]));
        assert_eq!(r.ambient().ring().a(), 1);
        assert!(amb.zero().reduce_mod_p().is_zero());
        // the induced p^(a-1)-correspondence is weight preserving
        let f = amb.from_ints(&[2, 1]); // 3*(x+2) = 3x+6
        let scaled = f.scale(&amb.ring().from_u64(3)).unwrap();
        assert_eq!(scaled, amb.from_ints(&[6, 3]));
        assert_eq!(scaled.weight(), f.reduce_mod_p().weight());
    }

    #[test]
    fn unit_detection_and_inverse() {
        let amb = z9_nega(1);
        let u = amb.from_ints(&[1, 3, 6]); // 1 + radical part
        assert!(u.is_unit());
        let inv = u.inverse().unwrap();
        assert!(u.mul(&inv).unwrap().is_one());
        assert!(!amb.x_plus_one().is_unit());
        assert!(matches!(amb.x_plus_one().inverse(), Err(Error::NotAUnit(_))));
        // x is a unit: x * (-x^2) = -x^3 = 1
        assert!(amb.x().is_unit());
        let xinv = amb.x().inverse().unwrap();
        assert_eq!(xinv, amb.from_ints(&[0, 0, -1]));
    }

    #[test]
    fn weight_invariance_under_units() {
        let amb = z9_nega(1);
        let teich = amb.ring().teichmuller();
        let fs = [amb.from_ints(&[1, 0, 3]), amb.from_ints(&[0, 2, 0]), amb.from_ints(&[4, 5, 6])];
        for f in &fs {
            for u in teich.iter().filter(|u| !u.is_zero()) {
                assert_eq!(f.scale(u).unwrap().weight(), f.weight());
            }
            assert_eq!(f.mul_by_x().weight(), f.weight());
            assert_eq!(f.mul(&amb.x()).unwrap(), f.mul_by_x());
        }
    }

    #[test]
    fn shift_valuation_and_content() {
        let amb = z9_nega(2);
        let f = amb.x_plus_one().pow_u64(4).scale(&amb.ring().from_u64(3)).unwrap();
        assert_eq!(f.shift_valuation(), 4);
        assert_eq!(f.p_content(), 1);
        // the cofactor is only defined mod p^(a-1); its valuation is read off
        // after reduction into the a = 1 ambient
        assert_eq!(f.divide_exact_by_p(1).unwrap().reduce_mod_p().shift_valuation(), 4);
        assert_eq!(amb.zero().shift_valuation(), 9);
        assert_eq!(amb.zero().p_content(), 2);
        assert!(f.divide_exact_by_p(2).is_err());
    }
}
