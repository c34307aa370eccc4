use mcf_groupkernel::io::{parse_group, GroupInput};
use mcf_groupkernel::{Caps, TableGroup};
use mcf_pgroup::battery::maximal_class_battery;
use mcf_pgroup::{maxclass_profile, pc_presentation, PGroup, Structure};
use proptest::prelude::*;

/// Name, file, order exponent, maximal class.
const PC: &[(&str, &str, u32, bool)] = &[
    ("d16", include_str!("../../../corpus/d16.json"), 4, true),
    ("sd16", include_str!("../../../corpus/sd16.json"), 4, true),
    ("q16", include_str!("../../../corpus/q16.json"), 4, true),
    ("d32", include_str!("../../../corpus/d32.json"), 5, true),
    ("c3wrc3", include_str!("../../../corpus/c3wrc3.json"), 4, true),
    ("mc81_mixed", include_str!("../../../corpus/mc81_mixed.json"), 4, true),
    ("mc81_nonabelian_pair", include_str!("../../../corpus/mc81_nonabelian_pair.json"), 4, true),
    ("mc81_power", include_str!("../../../corpus/mc81_power.json"), 4, true),
    ("extraspecial27", include_str!("../../../corpus/extraspecial27.json"), 3, true),
    ("jordan5_3", include_str!("../../../corpus/jordan5_3.json"), 4, true),
    ("jordan5_4", include_str!("../../../corpus/jordan5_4.json"), 5, true),
    ("monomial_3_7_1", include_str!("../../../corpus/monomial_3_7_1.json"), 5, true),
];

fn load(text: &str) -> PGroup {
    let caps = Caps::default();
    match parse_group(text, caps.pc_verify).unwrap() {
        GroupInput::Pc(g) => PGroup::from_pc(&g, &caps).unwrap().0,
        GroupInput::Perm(_) => panic!("expected a PC presentation"),
    }
}

#[test]
fn orders_and_maximal_class() {
    for &(name, text, n, mc) in PC {
        let g = load(text);
        assert_eq!(g.n(), n, "{name}");
        assert_eq!(Structure::new(&g).maximal_class, mc, "{name}");
    }
}

#[test]
fn battery_passes_on_maximal_class_members() {
    for &(name, text, n, mc) in PC {
        let g = load(text);
        if !mc || n < 4 || g.prime() == 2 {
            continue;
        }
        let checks = maximal_class_battery(&g, &Caps::default()).unwrap();
        assert!(!checks.is_empty());
        for c in &checks {
            assert!(c.pass, "{name}: {} ({})", c.name, c.detail);
        }
    }
}

#[test]
fn presentations_roundtrip() {
    let caps = Caps::default();
    for &(name, text, n, _) in PC {
        let g = load(text);
        let (file, pcgs) = pc_presentation(&g, caps.pc_verify).unwrap();
        assert_eq!(file.ngens, n as usize, "{name}");
        assert_eq!(pcgs.len(), n as usize, "{name}");
        let (h, _) = PGroup::from_pc(&file.build(caps.pc_verify).unwrap(), &caps).unwrap();
        let (a, b) = (maxclass_profile(&g).unwrap(), maxclass_profile(&h).unwrap());
        assert_eq!(a.gamma1_abelian, b.gamma1_abelian, "{name}");
        assert_eq!(a.degree_of_commutativity, b.degree_of_commutativity, "{name}");
        assert_eq!(a.is_exceptional, b.is_exceptional, "{name}");
    }
}

#[test]
fn gamma1_shapes() {
    let abelian = |name: &str| {
        let text = PC.iter().find(|c| c.0 == name).unwrap().1;
        maxclass_profile(&load(text)).unwrap().gamma1_abelian
    };
    assert_eq!(abelian("c3wrc3"), Some(true));
    // C_S(γ₂) = ⟨g1·g2², g3, g4⟩ is abelian although g2 and g3 do not commute.
    assert_eq!(abelian("mc81_nonabelian_pair"), Some(true));
    assert_eq!(abelian("monomial_3_7_1"), Some(false));
    assert_eq!(abelian("jordan5_4"), Some(true));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// `[K_i, K_j] ≤ K_{i+j}` for the lower central series `K_1 = S`, and
    /// `[Z_k, S] ≤ Z_{k-1}`, checked on elements.
    #[test]
    fn central_series_commutator_inclusions(which in 0usize..12, a in 0u32..4096, b in 0u32..4096, i in 1usize..5, j in 1usize..5) {
        let g = load(PC[which].1);
        let t = g.table();
        let st = Structure::new(&g);
        let m = t.size() as u32;
        let k_ = |i: usize| st.lcs[(i - 1).min(st.lcs.len() - 1)].clone();
        let (ki, kj, kij) = (k_(i), k_(j), k_(i + j));
        let x = ki.ones().nth(a as usize % TableGroup::order_of(&ki)).unwrap() as u32;
        let y = kj.ones().nth(b as usize % TableGroup::order_of(&kj)).unwrap() as u32;
        prop_assert!(kij.contains(t.comm(x, y) as usize));
        let k = i.min(st.ucs.len() - 1);
        let z = st.ucs[k].ones().nth(a as usize % TableGroup::order_of(&st.ucs[k])).unwrap() as u32;
        prop_assert!(st.ucs[k - 1].contains(t.comm(z, b % m) as usize));
    }
}
