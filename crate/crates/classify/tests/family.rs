use std::time::Instant;

use mcf_classify::{construct_example_family, ClassifyError};
use mcf_groupkernel::io::PcFile;
use mcf_groupkernel::{Caps, TableGroup};
use mcf_pgroup::{PGroup, Structure};

const SHIPPED: &str = include_str!("../../../corpus/monomial_3_7_1.json");

#[test]
fn monomial_three_seven_has_maximal_class() {
    let start = Instant::now();
    let fam = construct_example_family(3, 7, 1, &Caps::default()).unwrap();
    let c = &fam.certificate;
    assert!(c.holds(), "{c:?}");
    assert_eq!(c.modulus, "x^3 + x^2 + x + 2");
    assert_eq!((c.torus_order, c.t0_order, c.order), (9, 81, 243));
    assert_eq!(c.pi_centralizer_order, 9);
    assert_eq!(c.diagonal_centralizer_order, 3);
    assert_eq!(c.gamma1_abelian, Some(false));
    assert!(c.gamma1_matches_generators);
    assert!(start.elapsed().as_secs() < 60);
}

#[test]
fn shipped_presentation_reproduces_the_construction() {
    let fam = construct_example_family(3, 7, 1, &Caps::default()).unwrap();
    let mut shipped: PcFile = serde_json::from_str(SHIPPED).unwrap();
    shipped.provenance = None;
    assert_eq!(fam.certificate.presentation, shipped);
    // The presentation is consistent and defines a maximal class group with
    // non-abelian γ₁, independently of the matrix model.
    let pc = shipped.build(Caps::default().pc_verify).unwrap();
    let (g, _) = PGroup::from_pc(&pc, &Caps::default()).unwrap();
    let st = Structure::new(&g);
    assert!(st.maximal_class);
    assert_eq!(g.n(), 5);
    let g1 = st.gamma1.unwrap();
    assert!(!g.table().is_abelian(&g1));
    assert_eq!(TableGroup::order_of(&g1), 81);
}

#[test]
fn divisibility_failures_are_rejected() {
    for (p, r, a) in [(3, 5, 1), (5, 7, 1), (3, 2, 1)] {
        assert!(matches!(construct_example_family(p, r, a, &Caps::default()), Err(ClassifyError::Precondition(_))));
    }
}

#[test]
fn table_cap_is_honoured() {
    let caps = Caps { table: 100, ..Caps::default() };
    let err = construct_example_family(3, 7, 1, &caps).unwrap_err();
    assert!(err.is_cap());
}
