//! Codes as ideals of the ambient ring.
//!
//! An ideal is held as a generator list plus a lazily computed canonical
//! module basis over Z_{p^a} (rows: all shifts x^t z^e g of the generators,
//! in Howell form). The basis is canonical for the submodule, so it decides
//! membership and equality exactly and independently of the Gröbner layer it
//! is used to cross-check.

use std::sync::OnceLock;

use crate::ambient::{Ambient, AmbientElement};
use crate::error::{Error, Result};
use crate::howell::{Engine, SpanMatrix};
use crate::scalar::Scalar;

/// Ideal of an ambient ring, i.e. a (nega)cyclic code of length p^s.
#[derive(Clone, Debug)]
pub struct Ideal<I: Scalar> {
    ambient: Ambient<I>,
    generators: Vec<AmbientElement<I>>,
    span: OnceLock<SpanMatrix<I>>,
}

/// Canonical additive basis of an ideal; identical bases mean equal ideals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SpanBasis<I: Scalar> {
    pub(crate) matrix: SpanMatrix<I>,
}

pub(crate) fn engine<I: Scalar>(ambient: &Ambient<I>) -> Engine<I> {
    Engine::new(ambient.ring().p().clone(), ambient.ring().a())
}

/// Column layout: degree descending, Galois coordinate ascending, so that
/// low-degree polynomials occupy a column suffix.
pub(crate) fn vectorize<I: Scalar>(f: &AmbientElement<I>) -> Vec<I> {
    let n = f.ambient().n();
    let m = f.ambient().ring().m();
    let mut v = Vec::with_capacity(n * m);
    for d in (0..n).rev() {
        v.extend_from_slice(&f.raw()[d]);
    }
    v
}

pub(crate) fn devectorize<I: Scalar>(ambient: &Ambient<I>, v: &[I]) -> AmbientElement<I> {
    let n = ambient.n();
    let m = ambient.ring().m();
    let coeffs: Vec<Vec<I>> =
        (0..n).map(|d| v[(n - 1 - d) * m..(n - d) * m].to_vec()).collect();
    ambient.from_raw(coeffs)
}

/// Rows x^t z^e g spanning the ideal generated by `gens` as a Z_{p^a}-module.
pub(crate) fn closure_rows<I: Scalar>(
    ambient: &Ambient<I>,
    gens: &[AmbientElement<I>],
) -> Vec<Vec<I>> {
    let n = ambient.n();
    let m = ambient.ring().m();
    let zeta = ambient.ring().generator();
    let mut rows = Vec::with_capacity(gens.len() * n * m);
    for g in gens {
        let mut ge = g.clone();
        for e in 0..m {
            if e > 0 {
                ge = ge.scale(&zeta).expect("same ring");
            }
            let mut shifted = ge.clone();
            for t in 0..n {
                if t > 0 {
                    shifted = shifted.mul_by_x();
                }
                rows.push(vectorize(&shifted));
            }
        }
    }
    rows
}

impl<I: Scalar> Ideal<I> {
    /// Ideal generated by a nonempty list of elements of `ambient`.
    pub fn new(ambient: Ambient<I>, generators: Vec<AmbientElement<I>>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::InvalidParameter(
                "an ideal needs at least one generator; use the zero element for the zero ideal"
                    .into(),
            ));
        }
        for g in &generators {
            if !g.ambient().same_ambient(&ambient) {
                return Err(Error::AmbientMismatch);
            }
        }
        Ok(Ideal { ambient, generators, span: OnceLock::new() })
    }

    pub fn zero(ambient: &Ambient<I>) -> Self {
        Ideal { ambient: ambient.clone(), generators: vec![ambient.zero()], span: OnceLock::new() }
    }

    pub fn unit(ambient: &Ambient<I>) -> Self {
        Ideal { ambient: ambient.clone(), generators: vec![ambient.one()], span: OnceLock::new() }
    }

    pub fn principal(g: AmbientElement<I>) -> Self {
        let ambient = g.ambient().clone();
        Ideal { ambient, generators: vec![g], span: OnceLock::new() }
    }

    pub fn ambient(&self) -> &Ambient<I> {
        &self.ambient
    }

    pub fn generators(&self) -> &[AmbientElement<I>] {
        &self.generators
    }

    pub(crate) fn span(&self) -> &SpanMatrix<I> {
        self.span.get_or_init(|| {
            let eng = engine(&self.ambient);
            let n = self.ambient.n();
            let m = self.ambient.ring().m();
            eng.howellize(n * m, closure_rows(&self.ambient, &self.generators))
        })
    }

    /// Canonical module basis; equal ideals have identical bases.
    pub fn span_basis(&self) -> SpanBasis<I> {
        SpanBasis { matrix: self.span().clone() }
    }

    pub fn is_zero(&self) -> bool {
        self.span().is_empty()
    }

    /// Exact membership via reduction against the canonical basis.
    pub fn contains(&self, f: &AmbientElement<I>) -> Result<bool> {
        if !f.ambient().same_ambient(&self.ambient) {
            return Err(Error::AmbientMismatch);
        }
        Ok(engine(&self.ambient).contains(self.span(), &vectorize(f)))
    }

    /// Exact ideal equality: identical canonical bases.
    pub fn equal(&self, other: &Self) -> Result<bool> {
        if !other.ambient.same_ambient(&self.ambient) {
            return Err(Error::AmbientMismatch);
        }
        Ok(self.span() == other.span())
    }

    /// |I|, when it fits in u128.
    pub fn cardinality(&self) -> Option<u128> {
        engine(&self.ambient).span_cardinality(self.span())
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        if !other.ambient.same_ambient(&self.ambient) {
            return Err(Error::AmbientMismatch);
        }
        let mut gens = self.generators.clone();
        gens.extend_from_slice(&other.generators);
        Ideal::new(self.ambient.clone(), gens)
    }

    /// All elements, sorted canonically; errors when |I| exceeds `limit`.
    pub fn enumerate_elements(&self, limit: u128) -> Result<Vec<AmbientElement<I>>> {
        let required = self
            .cardinality()
            .ok_or(Error::EnumerationBound { required: u128::MAX, limit })?;
        if required > limit {
            return Err(Error::EnumerationBound { required, limit });
        }
        let eng = engine(&self.ambient);
        let mut raw: Vec<Vec<I>> = Vec::with_capacity(required as usize);
        eng.for_each_element(self.span(), |v| raw.push(v.to_vec()));
        raw.sort();
        Ok(raw.iter().map(|v| devectorize(&self.ambient, v)).collect())
    }

    /// Visit each element once (membership bound is the caller's business).
    pub(crate) fn for_each_element<F: FnMut(&[I])>(&self, f: F) {
        engine(&self.ambient).for_each_element(self.span(), f)
    }

    /// The ideal quotient (I : p^j) as a module basis.
    pub(crate) fn colon_p_power(&self, j: u32) -> SpanMatrix<I> {
        engine(&self.ambient).colon_p_power(self.span(), j)
    }

    /// Triangularize the generating set down to at most `a` generators, the
    /// constructive argument behind the a-generation bound: at each p-adic
    /// level pick the generator whose level term has minimal (x+1)-exponent
    /// (earliest index on ties) and cancel that level from the others.
    /// Cyclic ambients with odd p are conjugated through x -> -x.
    pub fn reduce_generators(&self) -> Result<Self> {
        if !self.ambient.has_xplus1_structure() {
            let gens: Result<Vec<_>> =
                self.generators.iter().map(|g| g.substitute_neg_x()).collect();
            let img = Ideal::new(self.ambient.opposite_kind(), gens?)?;
            let reduced = img.reduce_generators_native()?;
            let back: Result<Vec<_>> =
                reduced.generators.iter().map(|g| g.substitute_neg_x()).collect();
            let out = Ideal::new(self.ambient.clone(), back?)?;
            if !self.equal(&out)? {
                return Err(Error::Internal("generator reduction changed the ideal".into()));
            }
            return Ok(out);
        }
        let out = self.reduce_generators_native()?;
        if !self.equal(&out)? {
            return Err(Error::Internal("generator reduction changed the ideal".into()));
        }
        Ok(out)
    }

    fn reduce_generators_native(&self) -> Result<Self> {
        let ambient = &self.ambient;
        let a = ambient.ring().a();
        let xp1 = ambient.x_plus_one();
        let mut fs: Vec<AmbientElement<I>> = self.generators.clone();
        let mut fixed = 0usize;
        for k in 0..a {
            let mut best: Option<(usize, usize)> = None;
            for (j, f) in fs.iter().enumerate().skip(fixed) {
                if let Some(t) = f.canonical_form()?.term_at_level(k) {
                    if best.is_none_or(|(_, e)| t.exponent < e) {
                        best = Some((j, t.exponent));
                    }
                }
            }
            let Some((bj, _)) = best else { continue };
            fs.swap(fixed, bj);
            let pivot_form = fs[fixed].canonical_form()?;
            let pt = pivot_form.term_at_level(k).expect("pivot carries a level-k term");
            let pivot_mult = fs[fixed].scale(&pt.beta.inverse()?)?.mul(&pt.alpha.inverse()?)?;
            let pivot_exp = pt.exponent;
            #[allow(clippy::needless_range_loop)]
            for j in fixed + 1..fs.len() {
                let form = fs[j].canonical_form()?;
                let Some(t) = form.term_at_level(k) else { continue };
                let sub = pivot_mult
                    .scale(&t.beta)?
                    .mul(&t.alpha)?
                    .mul(&xp1.pow_u64((t.exponent - pivot_exp) as u64))?;
                fs[j] = fs[j].sub(&sub)?;
                #[cfg(debug_assertions)]
                {
                    assert!(fs[j].canonical_form()?.term_at_level(k).is_none());
                }
            }
            fixed += 1;
        }
        debug_assert!(fs[fixed..].iter().all(|f| f.is_zero()));
        fs.truncate(fixed);
        if fs.is_empty() {
            fs.push(ambient.zero());
        }
        Ideal::new(ambient.clone(), fs)
    }
}

impl<I: Scalar> SpanBasis<I> {
    pub fn row_count(&self) -> usize {
        self.matrix.rows.len()
    }

    pub fn rows_as_elements(&self, ambient: &Ambient<I>) -> Vec<AmbientElement<I>> {
        self.matrix.rows.iter().map(|r| devectorize(ambient, r)).collect()
    }
}
