//! Property tests for the structural invariants, on randomized elements and
//! generator sets drawn from a pool of desk-scale ambients.

use proptest::prelude::*;

use grcodes::{brute_distance, AmbientPoly, AmbientRing, Code, CodeKind, Ring};

fn pool() -> Vec<AmbientRing> {
    let mk = |p, a, m, s, kind| AmbientRing::new(Ring::new(p, a, m, None).unwrap(), s, kind).unwrap();
    vec![
        mk(3, 2, 1, 1, CodeKind::Negacyclic),
        mk(3, 2, 1, 2, CodeKind::Negacyclic),
        mk(3, 3, 1, 1, CodeKind::Negacyclic),
        mk(2, 2, 1, 2, CodeKind::Cyclic),
        mk(2, 3, 1, 2, CodeKind::Cyclic),
        mk(2, 2, 2, 1, CodeKind::Cyclic),
        mk(5, 2, 1, 1, CodeKind::Negacyclic),
        mk(3, 2, 2, 1, CodeKind::Negacyclic),
        mk(2, 2, 1, 2, CodeKind::Negacyclic),
        mk(3, 2, 1, 1, CodeKind::Cyclic),
        mk(5, 1, 1, 1, CodeKind::Cyclic),
    ]
}

/// Random element of the ambient picked by `idx`.
fn element_strategy(idx: usize) -> impl Strategy<Value = AmbientPoly> {
    let amb = pool()[idx].clone();
    let n = amb.n();
    let q = *amb.ring().q();
    let m = amb.ring().m();
    prop::collection::vec(0..q, n * m).prop_map(move |raw| {
        let coeffs: Vec<_> = raw
            .chunks(m)
            .map(|c| amb.ring().element(c.to_vec()).unwrap())
            .collect();
        amb.element(coeffs).unwrap()
    })
}

fn any_element() -> impl Strategy<Value = AmbientPoly> {
    (0..pool().len()).prop_flat_map(element_strategy)
}

fn element_pair() -> impl Strategy<Value = (AmbientPoly, AmbientPoly)> {
    (0..pool().len()).prop_flat_map(|i| (element_strategy(i), element_strategy(i)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    /// The (x+1)-basis change is exact in every ambient.
    #[test]
    fn xplus1_expansion_round_trips(f in any_element()) {
        let digits = f.xplus1_expansion();
        let back = f.ambient().from_xplus1_expansion(&digits).unwrap();
        prop_assert_eq!(back, f);
    }

    /// Canonical forms reassemble and satisfy their shape invariants.
    #[test]
    fn canonical_form_round_trips(f in any_element()) {
        if !f.ambient().has_xplus1_structure() {
            return Ok(());
        }
        let form = f.canonical_form().unwrap();
        prop_assert_eq!(form.reassemble(), f);
        let mut last_exp: Option<usize> = None;
        let mut last_level: Option<u32> = None;
        for t in form.terms() {
            prop_assert!(!t.beta.is_zero());
            prop_assert!(t.alpha.is_unit());
            if let Some(l) = last_level { prop_assert!(t.level > l); }
            if let Some(e) = last_exp { prop_assert!(t.exponent < e); }
            last_level = Some(t.level);
            last_exp = Some(t.exponent);
        }
    }

    /// p-adic digit expansions of the coefficients reassemble.
    #[test]
    fn p_adic_round_trips(f in any_element()) {
        let ring = f.ambient().ring().clone();
        let p = ring.from_u64(ring.p().to_owned());
        for c in f.coeffs() {
            let digits = c.p_adic_expansion();
            let mut acc = ring.zero();
            let mut pk = ring.one();
            for d in &digits {
                acc = acc.add(&d.mul(&pk).unwrap()).unwrap();
                pk = pk.mul(&p).unwrap();
            }
            prop_assert_eq!(acc, c);
        }
    }

    /// Weight is blind to Teichmüller unit scaling and to shifts by x.
    #[test]
    fn weight_invariances(f in any_element()) {
        let amb = f.ambient().clone();
        for u in amb.ring().teichmuller() {
            if !u.is_zero() {
                prop_assert_eq!(f.scale(&u).unwrap().weight(), f.weight());
            }
        }
        prop_assert_eq!(f.mul_by_x().weight(), f.weight());
    }

    /// x -> -x is a weight-preserving ring homomorphism for odd p.
    #[test]
    fn substitution_is_isometric_homomorphism((f, g) in element_pair()) {
        if *f.ambient().ring().p() == 2 {
            return Ok(());
        }
        let fi = f.substitute_neg_x().unwrap();
        let gi = g.substitute_neg_x().unwrap();
        prop_assert_eq!(fi.weight(), f.weight());
        prop_assert_eq!(f.add(&g).unwrap().substitute_neg_x().unwrap(), fi.add(&gi).unwrap());
        prop_assert_eq!(f.mul(&g).unwrap().substitute_neg_x().unwrap(), fi.mul(&gi).unwrap());
        prop_assert!(f.ambient().one().substitute_neg_x().unwrap().is_one());
    }

    /// Ideal equality is invariant under generator shuffling and unit scaling.
    #[test]
    fn ideal_equality_is_presentation_independent((f, g) in element_pair()) {
        let amb = f.ambient().clone();
        let i1 = Code::new(amb.clone(), vec![f.clone(), g.clone()]).unwrap();
        let i2 = Code::new(amb.clone(), vec![g.clone(), f.clone()]).unwrap();
        prop_assert!(i1.equal(&i2).unwrap());
        prop_assert_eq!(i1.span_basis(), i2.span_basis());
        // scaling a generator by x (a unit) changes nothing
        let i3 = Code::new(amb, vec![f.mul_by_x(), g]).unwrap();
        prop_assert!(i1.equal(&i3).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    /// Generator reduction: at most a generators, same ideal.
    #[test]
    fn reduction_bounds_generators((f, g) in element_pair(), h in any_element()) {
        let amb = f.ambient().clone();
        let mut gens = vec![f, g];
        if h.ambient().same_ambient(&amb) {
            gens.push(h);
        }
        let ideal = Code::new(amb.clone(), gens).unwrap();
        let reduced = ideal.reduce_generators().unwrap();
        prop_assert!(reduced.generators().len() <= amb.ring().a().max(1) as usize);
        prop_assert!(ideal.equal(&reduced).unwrap());
    }

    /// Gröbner forms satisfy all five properties and regenerate the ideal.
    #[test]
    fn groebner_properties_hold((f, g) in element_pair()) {
        let amb = f.ambient().clone();
        let ideal = Code::new(amb, vec![f, g]).unwrap();
        if ideal.is_zero() {
            return Ok(());
        }
        let form = ideal.groebner_form().unwrap();
        let checks = form.check_properties(&ideal).unwrap();
        prop_assert!(checks.iter().all(|c| c.pass), "{:#?}", checks);
    }
}

/// Exhaustive (x+1)-basis round trip on every ambient of at most 2^16
/// elements in the pool; the randomized property above covers the rest.
#[test]
fn xplus1_round_trip_exhaustive_small_ambients() {
    let mk = |p, a, m, s, kind| {
        AmbientRing::new(Ring::new(p, a, m, None).unwrap(), s, kind).unwrap()
    };
    for amb in [
        mk(3, 2, 1, 1, CodeKind::Negacyclic),
        mk(3, 3, 1, 1, CodeKind::Negacyclic),
        mk(2, 2, 1, 2, CodeKind::Cyclic),
        mk(2, 2, 1, 2, CodeKind::Negacyclic),
        mk(3, 1, 1, 2, CodeKind::Negacyclic),
        mk(3, 2, 1, 1, CodeKind::Cyclic),
        mk(2, 2, 2, 1, CodeKind::Cyclic),
    ] {
        assert!(amb.cardinality().unwrap() <= 1 << 16);
        grcodes::oracle::for_each_ambient_element(&amb, 1 << 20, |f| {
            let back = amb.from_xplus1_expansion(&f.xplus1_expansion()).unwrap();
            assert_eq!(back, f, "round trip failed in {amb}");
        })
        .unwrap();
    }
}

/// Every nonzero ideal of a tiny lattice contains the socle generator.
#[test]
fn socle_sits_inside_every_nonzero_ideal() {
    let mk = |p, a, m, s, kind| {
        AmbientRing::new(Ring::new(p, a, m, None).unwrap(), s, kind).unwrap()
    };
    for amb in [
        mk(3, 2, 1, 1, CodeKind::Negacyclic),
        mk(2, 2, 1, 1, CodeKind::Cyclic),
        mk(2, 2, 1, 2, CodeKind::Cyclic),
        mk(3, 2, 1, 1, CodeKind::Cyclic),
    ] {
        let lattice = grcodes::build_lattice(&amb, 1 << 20).unwrap();
        let socle = &lattice.nodes[lattice.distinguished.socle].ideal;
        let socle_gen = socle.generators()[0].clone();
        for node in &lattice.nodes {
            if node.cardinality > 1 {
                assert!(
                    node.ideal.contains(&socle_gen).unwrap(),
                    "socle escapes an ideal of {amb}"
                );
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    /// The reduction method agrees with brute force on random two-generator
    /// ideals of enumerable ambients.
    #[test]
    fn distance_matches_oracle((f, g) in element_pair()) {
        let amb = f.ambient().clone();
        if amb.cardinality().is_none_or(|c| c > 1 << 16) {
            return Ok(());
        }
        let ideal = Code::new(amb, vec![f, g]).unwrap();
        let fast = ideal.code_distance().unwrap().distance;
        let brute = brute_distance(&ideal, 1 << 20).unwrap();
        prop_assert_eq!(fast, brute);
    }

    /// Distance is invariant under conjugation and unit scaling.
    #[test]
    fn distance_is_isometry_invariant(f in any_element()) {
        let amb = f.ambient().clone();
        if amb.cardinality().is_none_or(|c| c > 1 << 16) {
            return Ok(());
        }
        let d = Code::principal(f.clone()).code_distance().unwrap().distance;
        // unit scaling
        let d_scaled = Code::principal(f.mul_by_x()).code_distance().unwrap().distance;
        prop_assert_eq!(d, d_scaled);
        // conjugation for odd p
        if *amb.ring().p() != 2 {
            let img = f.substitute_neg_x().unwrap();
            let d_conj = Code::principal(img).code_distance().unwrap().distance;
            prop_assert_eq!(d, d_conj);
        }
    }
}
