//! The pipeline is generic over the coefficient scalar: run it end to end
//! on `BigUint` and check it against the brute-force oracle.

use grcodes::{brute_distance, verify_structure, Ambient, CodeKind, GaloisRing, Ideal};
use num_bigint::BigUint;

#[test]
fn distance_pipeline_over_biguint() {
    let ring = GaloisRing::new(BigUint::from(3u32), 2, 1, None).unwrap();
    let amb = Ambient::new(ring, 1, CodeKind::Negacyclic).unwrap();
    let g = amb.x_plus_one().pow_u64(2).scale(&amb.ring().from_u64(3)).unwrap();
    let ideal = Ideal::principal(g);
    assert_eq!(ideal.code_distance().unwrap().distance, 3);
    assert_eq!(brute_distance(&ideal, 1 << 20).unwrap(), 3);

    let rad = Ideal::new(
        amb.clone(),
        vec![amb.from_ints(&[3]), amb.x_plus_one()],
    )
    .unwrap();
    let form = rad.groebner_form().unwrap();
    assert!(form.check_properties(&rad).unwrap().iter().all(|c| c.pass));
    assert_eq!(rad.code_distance().unwrap().distance, 1);

    let report = verify_structure(&amb, 1 << 20).unwrap();
    assert!(report.checks.iter().all(|c| c.pass), "{:#?}", report.checks);
}
