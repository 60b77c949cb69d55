//! Canonical form of ambient elements: f = sum over levels k of
//! beta_k p^k (x+1)^(i_k) alpha_k with Teichmüller beta_k, unit alpha_k and
//! strictly decreasing exponents i_k across strictly increasing levels.
//!
//! Exists whenever x+1 is the nilpotent shift (negacyclic ambients, and
//! cyclic ambients for p = 2). Cyclic ambients with odd p have no such
//! (x+1)-decomposition; callers route those through the x -> -x isomorphism.

use std::fmt;

use crate::ambient::{Ambient, AmbientElement};
use crate::error::{Error, Result};
use crate::galois::GrElement;
use crate::scalar::Scalar;

/// One term beta p^level (x+1)^exponent alpha.
#[derive(Clone, Debug)]
pub struct CanonicalTerm<I: Scalar> {
    pub level: u32,
    pub exponent: usize,
    /// Nonzero Teichmüller element.
    pub beta: GrElement<I>,
    /// Unit of the ambient ring.
    pub alpha: AmbientElement<I>,
}

/// Canonical decomposition; an empty term list encodes zero.
#[derive(Clone, Debug)]
pub struct CanonicalForm<I: Scalar> {
    ambient: Ambient<I>,
    terms: Vec<CanonicalTerm<I>>,
}

impl<I: Scalar> CanonicalForm<I> {
    pub fn ambient(&self) -> &Ambient<I> {
        &self.ambient
    }

    pub fn terms(&self) -> &[CanonicalTerm<I>] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_at_level(&self, level: u32) -> Option<&CanonicalTerm<I>> {
        self.terms.iter().find(|t| t.level == level)
    }

    /// The first term, which carries the largest exponent. Its level is 0
    /// exactly when the element has a unit p-adic layer (e.g. monic elements).
    pub fn leading(&self) -> Option<&CanonicalTerm<I>> {
        self.terms.first()
    }

    /// Recompute sum beta_k p^k (x+1)^(i_k) alpha_k.
    pub fn reassemble(&self) -> AmbientElement<I> {
        let ring = self.ambient.ring();
        let mut acc = self.ambient.zero();
        let xp1 = self.ambient.x_plus_one();
        for t in &self.terms {
            let scalar_part =
                t.beta.mul(&ring.p_power(t.level)).expect("same ring");
            let term = t
                .alpha
                .mul(&xp1.pow_u64(t.exponent as u64))
                .and_then(|e| e.scale(&scalar_part))
                .expect("same ambient");
            acc = acc.add(&term).expect("same ambient");
        }
        acc
    }
}

impl<I: Scalar> AmbientElement<I> {
    /// Canonical form construction: expand into (x+1)-digits, p-adically
    /// expand each digit, collect per level the minimal exponent with a
    /// nonzero Teichmüller coefficient, then fold higher-level terms whose
    /// exponent is not below every kept exponent into the blocking unit.
    pub fn canonical_form(&self) -> Result<CanonicalForm<I>> {
        let ambient = self.ambient().clone();
        if !ambient.has_xplus1_structure() {
            return Err(Error::Unsupported(
                "no (x+1)-canonical form in cyclic ambients with odd p; map through x -> -x".into(),
            ));
        }
        let ring = ambient.ring().clone();
        let a = ring.a();
        let digits = self.xplus1_expansion();
        // zeta[i][k]: level-k Teichmüller digit of the i-th (x+1)-coefficient
        let zeta: Vec<Vec<GrElement<I>>> =
            digits.iter().map(|d| d.p_adic_expansion()).collect();

        let xp1 = ambient.x_plus_one();
        let mut terms: Vec<CanonicalTerm<I>> = Vec::new();
        for k in 0..a {
            let min_exp = match (0..ambient.n()).find(|&i| !zeta[i][k as usize].is_zero()) {
                Some(i) => i,
                None => continue,
            };
            // h = sum_{i >= min_exp} zeta_{ik} (x+1)^(i - min_exp), a unit
            let h_digits: Vec<GrElement<I>> =
                (min_exp..ambient.n()).map(|i| zeta[i][k as usize].clone()).collect();
            let h = ambient.from_xplus1_expansion(&h_digits)?;
            let beta = zeta[min_exp][k as usize].clone();
            let alpha = h.scale(&beta.inverse()?)?;
            debug_assert!(alpha.is_unit());
            let new = CanonicalTerm { level: k, exponent: min_exp, beta, alpha };
            match terms.iter().position(|t| t.exponent <= new.exponent) {
                None => terms.push(new),
                Some(pos) => {
                    // fold: alpha_pos += (beta_new / beta_pos) p^(dk) (x+1)^(di) alpha_new
                    let keeper = &terms[pos];
                    let ratio = new.beta.mul(&keeper.beta.inverse()?)?;
                    let factor = ratio.mul(&ring.p_power(new.level - keeper.level))?;
                    let di = (new.exponent - keeper.exponent) as u64;
                    let extra = new.alpha.scale(&factor)?.mul(&xp1.pow_u64(di))?;
                    let folded = keeper.alpha.add(&extra)?;
                    debug_assert!(folded.is_unit());
                    terms[pos].alpha = folded;
                }
            }
        }
        let form = CanonicalForm { ambient, terms };
        debug_assert_eq!(form.reassemble(), *self);
        Ok(form)
    }
}

impl<I: Scalar> fmt::Display for CanonicalForm<I> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let p = self.ambient.ring().p();
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|t| {
                let mut s = String::new();
                if !t.beta.is_one() {
                    s.push_str(&format!("{}*", t.beta));
                }
                if t.level > 0 {
                    s.push_str(&format!("{p}^{}*", t.level));
                }
                if t.exponent > 0 {
                    s.push_str(&format!("(x+1)^{}", t.exponent));
                } else if s.is_empty() || t.alpha.is_one() {
                    s.push('1');
                }
                let s = s.trim_end_matches('*').to_string();
                if t.alpha.is_one() {
                    s
                } else {
                    format!("{s}*({})", t.alpha)
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ambient::CodeKind;
    use crate::galois::GaloisRing;

    fn z9_nega(s: u32) -> Ambient<u64> {
        Ambient::new(GaloisRing::new(3, 2, 1, None).unwrap(), s, CodeKind::Negacyclic).unwrap()
    }

    #[test]
    fn already_in_form() {
        // (x+1)^2 + 3(x+1) keeps both terms: exponents 2 > 1
        let amb = z9_nega(1);
        let f = amb
            .x_plus_one()
            .pow_u64(2)
            .add(&amb.x_plus_one().scale(&amb.ring().from_u64(3)).unwrap())
            .unwrap();
        let form = f.canonical_form().unwrap();
        let got: Vec<(u32, usize, u64, bool)> = form
            .terms()
            .iter()
            .map(|t| (t.level, t.exponent, t.beta.coeffs()[0], t.alpha.is_one()))
            .collect();
        assert_eq!(got, vec![(0, 2, 1, true), (1, 1, 1, true)]);
        assert_eq!(form.reassemble(), f);
    }

    #[test]
    fn absorption_folds_the_higher_level() {
        // 3(x+1)^2 + (x+1) collapses to a single level-0 term with unit 1 + 3(x+1)
        let amb = z9_nega(1);
        let f = amb
            .x_plus_one()
            .pow_u64(2)
            .scale(&amb.ring().from_u64(3))
            .unwrap()
            .add(&amb.x_plus_one())
            .unwrap();
        let form = f.canonical_form().unwrap();
        assert_eq!(form.terms().len(), 1);
        let t = &form.terms()[0];
        assert_eq!((t.level, t.exponent), (0, 1));
        assert!(t.beta.is_one());
        let expected_alpha =
            amb.one().add(&amb.x_plus_one().scale(&amb.ring().from_u64(3)).unwrap()).unwrap();
        assert_eq!(t.alpha, expected_alpha);
        assert_eq!(form.reassemble(), f);
    }

    #[test]
    fn zero_maps_to_empty_form() {
        let amb = z9_nega(1);
        let form = amb.zero().canonical_form().unwrap();
        assert!(form.is_zero());
        assert!(form.reassemble().is_zero());
    }

    #[test]
    fn round_trip_exhaustive_small() {
        let amb = z9_nega(1);
        let ring = amb.ring().clone();
        for c0 in ring.elements() {
            for c1 in ring.elements() {
                for c2 in ring.elements() {
                    let f = amb.element(vec![c0.clone(), c1.clone(), c2.clone()]).unwrap();
                    let form = f.canonical_form().unwrap();
                    assert_eq!(form.reassemble(), f);
                    // structural invariants
                    let mut last_level = None;
                    let mut last_exp = None;
                    for t in form.terms() {
                        if let Some(l) = last_level {
                            assert!(t.level > l);
                        }
                        if let Some(e) = last_exp {
                            assert!(t.exponent < e);
                        }
                        assert!(!t.beta.is_zero());
                        assert!(t.alpha.is_unit());
                        last_level = Some(t.level);
                        last_exp = Some(t.exponent);
                    }
                }
            }
        }
    }

    #[test]
    fn worked_generators_have_expected_forms() {
        // in Z_9[x]/(x^27+1): f1 = (x+1) - 3 has terms (0,1) and (1,0) with beta 8
        let amb = z9_nega(3);
        let f1 = amb.x_plus_one().sub(&amb.from_ints(&[3])).unwrap();
        let form = f1.canonical_form().unwrap();
        let got: Vec<(u32, usize, u64)> =
            form.terms().iter().map(|t| (t.level, t.exponent, t.beta.coeffs()[0])).collect();
        assert_eq!(got, vec![(0, 1, 1), (1, 0, 8)]);
        assert_eq!(form.reassemble(), f1);
    }

    #[test]
    fn odd_cyclic_has_no_xplus1_form() {
        let cyc =
            Ambient::new(GaloisRing::new(3u64, 2, 1, None).unwrap(), 1, CodeKind::Cyclic).unwrap();
        assert!(matches!(cyc.x().canonical_form(), Err(Error::Unsupported(_))));
        // p = 2 cyclic does have it
        let c2 =
            Ambient::new(GaloisRing::new(2u64, 2, 1, None).unwrap(), 2, CodeKind::Cyclic).unwrap();
        let f = c2.x_plus_one();
        assert_eq!(f.canonical_form().unwrap().reassemble(), f);
    }
}
