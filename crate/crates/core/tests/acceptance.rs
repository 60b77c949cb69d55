//! Acceptance suite: one test per criterion, each printing a pass/fail line
//! (visible with `cargo test --test acceptance -- --nocapture`). Every
//! criterion is exact; there are no tolerances to tune.

use std::time::Instant;

use grcodes::{
    brute_distance, build_lattice, chain_distance_cyclic_p2, chain_distance_negacyclic,
    principal_ideals, report::all_pass, verify_binomial_lemma, verify_main_expansion,
    verify_structure, AmbientRing, Code, CodeKind, Ring,
};

const BOUND: u128 = 1 << 20;

fn ambient(p: u64, a: u32, m: usize, s: u32, kind: CodeKind) -> AmbientRing {
    AmbientRing::new(Ring::new(p, a, m, None).unwrap(), s, kind).unwrap()
}

fn report(criterion: &str, start: Instant) {
    println!("criterion {criterion}: PASS ({} ms)", start.elapsed().as_millis());
}

/// Criterion 1: reducing {(x+1)-3, (x+1)^2+3(x+1), (x+1)^3+3(x+1)} in
/// Z_9[x]/(x^27+1) yields two generators, the second an associate of 6(x+1),
/// and the reduced set generates the same ideal.
#[test]
fn criterion_1_worked_reduction() {
    let t = Instant::now();
    let amb = ambient(3, 2, 1, 3, CodeKind::Negacyclic);
    let xp1 = amb.x_plus_one();
    let three = amb.ring().from_u64(3);
    let f1 = xp1.sub(&amb.from_ints(&[3])).unwrap();
    let f2 = xp1.pow_u64(2).add(&xp1.scale(&three).unwrap()).unwrap();
    let f3 = xp1.pow_u64(3).add(&xp1.scale(&three).unwrap()).unwrap();
    let ideal = Code::new(amb.clone(), vec![f1.clone(), f2, f3]).unwrap();

    let reduced = ideal.reduce_generators().unwrap();
    assert_eq!(reduced.generators().len(), 2, "two generators expected");
    assert_eq!(reduced.generators()[0], f1);
    // second generator must be an associate of 6(x+1)
    let six_xp1 = xp1.scale(&amb.ring().from_u64(6)).unwrap();
    let second = &reduced.generators()[1];
    let associate = Code::principal(second.clone())
        .equal(&Code::principal(six_xp1.clone()))
        .unwrap();
    assert!(associate, "second generator {second} must generate <6(x+1)>");
    assert_eq!(*second, six_xp1, "the algorithm lands on 6(x+1) exactly");
    assert!(ideal.equal(&reduced).unwrap(), "reduction must preserve the ideal");
    report("1 (worked generator reduction in Z_9[x]/(x^27+1))", t);
}

/// Criterion 2: structure of Z_9[x]/(x^3+1): radical <3, x+1>, socle
/// <3(x+1)^2>, <3> and <x+1> incomparable, radical not principal.
#[test]
fn criterion_2_z9x3_structure() {
    let t = Instant::now();
    let amb = ambient(3, 2, 1, 1, CodeKind::Negacyclic);
    let lattice = build_lattice(&amb, BOUND).unwrap();
    let d = &lattice.distinguished;

    let radical = &lattice.nodes[d.radical].ideal;
    let expected_radical =
        Code::new(amb.clone(), vec![amb.from_ints(&[3]), amb.x_plus_one()]).unwrap();
    assert!(radical.equal(&expected_radical).unwrap(), "radical = <3, x+1>");

    let socle_gen = amb.x_plus_one().pow_u64(2).scale(&amb.ring().from_u64(3)).unwrap();
    assert!(
        lattice.nodes[d.socle].ideal.equal(&Code::principal(socle_gen)).unwrap(),
        "socle = <3(x+1)^2>"
    );

    let p_ideal = &lattice.nodes[d.ideal_p].ideal;
    let shift_ideal = &lattice.nodes[d.ideal_shift].ideal;
    assert!(!p_ideal.contains(&amb.x_plus_one()).unwrap(), "x+1 not in <3>");
    assert!(!shift_ideal.contains(&amb.from_ints(&[3])).unwrap(), "3 not in <x+1>");
    assert!(!d.radical_is_principal, "no single element generates the radical");

    let structure = verify_structure(&amb, BOUND).unwrap();
    assert!(all_pass(&structure.checks), "{:#?}", structure.checks);
    report("2 (lattice and structure of Z_9[x]/(x^3+1))", t);
}

/// Criterion 3: direct powering matches the closed nilpotency forms:
/// p^s a - p^(s-1)(a-1) on the odd negacyclic grid and (a+1) 2^(s-1) on the
/// p = 2 cyclic grid.
#[test]
fn criterion_3_nilpotency_grid() {
    let t = Instant::now();
    for p in [3u64, 5] {
        for a in [2u32, 3] {
            for s in [1u32, 2] {
                let amb = ambient(p, a, 1, s, CodeKind::Negacyclic);
                let n = p.pow(s);
                let expected = n * a as u64 - (n / p) * (a as u64 - 1);
                assert_eq!(amb.nilpotency_index(), expected);
                let z = amb.x_plus_one();
                assert!(z.pow_u64(expected).is_zero(), "(x+1)^{expected} = 0 for p={p},a={a},s={s}");
                assert!(!z.pow_u64(expected - 1).is_zero());
            }
        }
    }
    for a in [2u32, 3] {
        for s in [1u32, 2, 3] {
            let amb = ambient(2, a, 1, s, CodeKind::Cyclic);
            let expected = (a as u64 + 1) * 2u64.pow(s - 1);
            assert_eq!(amb.nilpotency_index(), expected);
            let z = amb.x_plus_one();
            assert!(z.pow_u64(expected).is_zero(), "(x+1)^{expected} = 0 for p=2,a={a},s={s}");
            assert!(!z.pow_u64(expected - 1).is_zero());
        }
    }
    report("3 (nilpotency closed forms on the parameter grid)", t);
}

/// Criterion 4: the closed-form chain distances equal exhaustive minimum
/// weights of <(x+1)^i> over GR(p,1), for every i. p = 5 runs at s = 1 only;
/// p in {2,3} cover s = 2.
#[test]
fn criterion_4_chain_tables_vs_brute_force() {
    let t = Instant::now();
    let grid: &[(u64, u32)] = &[(2, 1), (2, 2), (3, 1), (3, 2), (5, 1)];
    for &(p, s) in grid {
        let amb = ambient(p, 1, 1, s, CodeKind::Negacyclic);
        let n = p.pow(s);
        for i in 0..=n {
            let code = Code::principal(amb.x_plus_one().pow_u64(i));
            let brute = brute_distance(&code, BOUND).unwrap();
            let table = chain_distance_negacyclic(p, s, i).unwrap();
            assert_eq!(table, brute, "negacyclic table mismatch at p={p}, s={s}, i={i}");
        }
        if p == 2 {
            let amb = ambient(2, 1, 1, s, CodeKind::Cyclic);
            for i in 0..=n {
                let code = Code::principal(amb.x_plus_one().pow_u64(i));
                let brute = brute_distance(&code, BOUND).unwrap();
                let table = chain_distance_cyclic_p2(s, i).unwrap();
                assert_eq!(table, brute, "cyclic table mismatch at s={s}, i={i}");
            }
        }
    }
    report("4 (chain distance tables against exhaustive weights)", t);
}

/// Criterion 5: code_distance = brute_distance for every ideal of the full
/// lattices of Z_9[x]/(x^3+1), Z_4[x]/(x^2-1), Z_4[x]/(x^4-1), and for every
/// principal ideal of GR(9,2)[x]/(x^3+1).
#[test]
fn criterion_5_method_vs_oracle() {
    let t = Instant::now();
    let mut compared = 0usize;
    for amb in [
        ambient(3, 2, 1, 1, CodeKind::Negacyclic),
        ambient(2, 2, 1, 1, CodeKind::Cyclic),
        ambient(2, 2, 1, 2, CodeKind::Cyclic),
    ] {
        let lattice = build_lattice(&amb, BOUND).unwrap();
        for node in &lattice.nodes {
            let fast = node.ideal.code_distance().unwrap().distance;
            let brute = brute_distance(&node.ideal, BOUND).unwrap();
            assert_eq!(fast, brute, "mismatch in {amb} on basis {:?}", node.basis);
            compared += 1;
        }
    }
    let gr92 = AmbientRing::new(Ring::new(3, 2, 2, None).unwrap(), 1, CodeKind::Negacyclic)
        .unwrap();
    for ideal in principal_ideals(&gr92, BOUND).unwrap() {
        let fast = ideal.code_distance().unwrap().distance;
        let brute = brute_distance(&ideal, BOUND).unwrap();
        assert_eq!(
            fast,
            brute,
            "mismatch in {gr92} on <{}>",
            ideal.generators()[0]
        );
        compared += 1;
    }
    println!("  compared {compared} ideals");
    report("5 (table method equals brute force end to end)", t);
}

/// Criterion 6: weight preservation of x -> -x (odd p) and of the
/// p^(a-1)-scaling correspondence with the GR(p,m) ambient, exhaustively on
/// ambients of at most 2^16 elements.
#[test]
fn criterion_6_isometries() {
    let t = Instant::now();
    // x -> -x, odd p, ambient size <= 2^16
    for amb in [
        ambient(3, 2, 1, 1, CodeKind::Negacyclic),
        ambient(3, 3, 1, 1, CodeKind::Negacyclic),
        ambient(3, 1, 1, 2, CodeKind::Negacyclic),
        ambient(5, 1, 1, 1, CodeKind::Negacyclic),
        ambient(3, 2, 1, 1, CodeKind::Cyclic),
    ] {
        assert!(amb.cardinality().unwrap() <= 1 << 16);
        grcodes::oracle::for_each_ambient_element(&amb, BOUND, |f| {
            let img = f.substitute_neg_x().unwrap();
            assert_eq!(img.weight(), f.weight(), "weight drift under x -> -x of {f}");
        })
        .unwrap();
    }
    // p^(a-1) f <-> f mod p is a weight-preserving bijection onto p^(a-1) R
    for amb in [
        ambient(3, 2, 1, 1, CodeKind::Negacyclic),
        ambient(3, 3, 1, 1, CodeKind::Negacyclic),
        ambient(2, 2, 1, 1, CodeKind::Cyclic),
        ambient(2, 2, 1, 2, CodeKind::Cyclic),
        AmbientRing::new(Ring::new(3, 2, 2, None).unwrap(), 1, CodeKind::Negacyclic).unwrap(),
    ] {
        let residue = amb.residue_ambient().clone();
        assert!(residue.cardinality().unwrap() <= 1 << 16);
        let ring = amb.ring().clone();
        let scale = ring.p_power(ring.a() - 1);
        let mut images = std::collections::HashSet::new();
        grcodes::oracle::for_each_ambient_element(&residue, BOUND, |fbar| {
            // lift coefficientwise and scale by p^(a-1)
            let lift = amb
                .element(
                    fbar.coeffs()
                        .iter()
                        .map(|c| ring.element(c.coeffs().to_vec()).unwrap())
                        .collect(),
                )
                .unwrap();
            let w = lift.scale(&scale).unwrap();
            assert_eq!(w.weight(), fbar.weight(), "isometry drift at {fbar}");
            let flat: Vec<u64> =
                w.coeffs().iter().flat_map(|c| c.coeffs().to_vec()).collect();
            images.insert(flat);
        })
        .unwrap();
        // bijective onto p^(a-1) R: distinct images, one per residue element
        assert_eq!(images.len() as u128, residue.cardinality().unwrap());
    }
    report("6 (isometries preserve Hamming weight)", t);
}

/// Criterion 7: binomial divisibility p^(n-l) | C(p^n, k), exhaustive for
/// p in {2,3,5} and n <= 6.
#[test]
fn criterion_7_binomial_divisibility() {
    let t = Instant::now();
    for p in [2u64, 3, 5] {
        let checks = verify_binomial_lemma(p, 6);
        assert_eq!(checks.len(), 6);
        assert!(all_pass(&checks), "{checks:#?}");
    }
    report("7 (binomial divisibility lemma, exhaustive)", t);
}

/// Criterion 8: expansion-lemma content and valuation checks for all valid t
/// on the criterion-3 grid.
#[test]
fn criterion_8_main_expansion_grid() {
    let t = Instant::now();
    for p in [3u64, 5] {
        for a in [2u32, 3] {
            for s in [1u32, 2] {
                let amb = ambient(p, a, 1, s, CodeKind::Negacyclic);
                let checks = verify_main_expansion(&amb).unwrap();
                assert!(all_pass(&checks), "p={p},a={a},s={s}: {checks:#?}");
            }
        }
    }
    for a in [2u32, 3] {
        for s in [1u32, 2, 3] {
            let amb = ambient(2, a, 1, s, CodeKind::Cyclic);
            let checks = verify_main_expansion(&amb).unwrap();
            assert!(all_pass(&checks), "p=2,a={a},s={s}: {checks:#?}");
        }
    }
    report("8 (expansion lemma checks on the parameter grid)", t);
}
