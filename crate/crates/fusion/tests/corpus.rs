use std::sync::OnceLock;
use std::time::Instant;

use mcf_fusion::essential::{pearl_basis, pearl_shape};
use mcf_fusion::{
    essential_subgroups, focal_data, normalizer_tower, prune_pearl_class, saturation_oracle, saturation_spot_check,
    verify_theorem_d, ClassTag, EssentialReport, FusionError, FusionSystem, Generated, Mode, Realizable,
};
use mcf_groupkernel::io::{parse_group, GroupInput};
use mcf_groupkernel::{scan, Caps, ElemSet, FiniteGroup, PermGroup, TableGroup};
use mcf_pgroup::pgroup::perm_label;
use mcf_pgroup::Structure;

const PERM: &[(&str, &str, u64)] = &[
    ("sym4", include_str!("../../../corpus/sym4.json"), 2),
    ("psl2_7", include_str!("../../../corpus/psl2_7.json"), 2),
    ("pgl2_7", include_str!("../../../corpus/pgl2_7.json"), 2),
    ("psl2_17", include_str!("../../../corpus/psl2_17.json"), 2),
    ("gl2_3", include_str!("../../../corpus/gl2_3.json"), 2),
    ("sl2_7", include_str!("../../../corpus/sl2_7.json"), 2),
    ("psl3_3", include_str!("../../../corpus/psl3_3.json"), 2),
    ("psl3_3", include_str!("../../../corpus/psl3_3.json"), 3),
    ("sym9", include_str!("../../../corpus/sym9.json"), 3),
    ("alt9", include_str!("../../../corpus/alt9.json"), 3),
    ("sylow3_sym9", include_str!("../../../corpus/sylow3_sym9.json"), 3),
];

struct Case {
    name: &'static str,
    p: u64,
    g: PermGroup,
    f: FusionSystem,
    essentials: Vec<EssentialReport>,
}

fn perm(text: &str) -> PermGroup {
    match parse_group(text, 0).unwrap() {
        GroupInput::Perm(g) => g,
        GroupInput::Pc(_) => panic!("expected a permutation group"),
    }
}

fn cases() -> &'static [Case] {
    static CASES: OnceLock<Vec<Case>> = OnceLock::new();
    CASES.get_or_init(|| {
        PERM.iter()
            .map(|&(name, text, p)| {
                let caps = Caps::default();
                let g = perm(text);
                let s = scan::sylow_p(&g, p, &caps).unwrap();
                let f: FusionSystem = Realizable::new(&g, &s, &caps, perm_label).unwrap().into();
                let essentials = essential_subgroups(&f, Mode::Brute).unwrap();
                Case { name, p, g, f, essentials }
            })
            .collect()
    })
}

fn case(name: &str, p: u64) -> &'static Case {
    cases().iter().find(|c| c.name == name && c.p == p).unwrap()
}

#[test]
fn pgl2_7_essentials_are_klein_four_pearls() {
    let start = Instant::now();
    let c = case("pgl2_7", 2);
    let t = c.f.table();
    assert_eq!(t.size(), 16);
    assert!(!c.essentials.is_empty());
    for e in &c.essentials {
        assert_eq!(e.class_tag, ClassTag::AbelianPearl);
        assert_eq!(e.subgroup.order, 4);
        assert_eq!(e.out_order, 6);
        let out = c.f.out_f(&e.set).unwrap();
        assert!(!out.table().is_abelian(&out.table().full_set()));
    }
    let st = Structure::new(c.f.sylow());
    let g1 = st.gamma1.unwrap();
    assert!(g1.ones().any(|x| t.elem_order_of(x as u32) == 8));
    assert!(start.elapsed().as_secs() < 10);
}

#[test]
fn psl2_17_has_two_klein_four_classes() {
    let c = case("psl2_17", 2);
    assert_eq!(c.essentials.len(), 2);
    assert!(c.essentials.iter().all(|e| e.class_tag == ClassTag::AbelianPearl && e.out_order == 6));
    let idx: Vec<u64> = c.essentials.iter().map(|e| e.index.unwrap()).collect();
    assert_eq!(
        {
            let mut v = idx.clone();
            v.sort_unstable();
            v
        },
        vec![0, 1]
    );
}

#[test]
fn semidihedral_sylow_of_psl3_3_has_a_quaternion_pearl() {
    let c = case("psl3_3", 2);
    let tags: Vec<ClassTag> = c.essentials.iter().map(|e| e.class_tag).collect();
    assert!(tags.contains(&ClassTag::QuaternionPearl), "{tags:?}");
    assert!(tags.contains(&ClassTag::AbelianPearl), "{tags:?}");
}

#[test]
fn order_81_sylows_satisfy_the_p3_shape() {
    for name in ["sym9", "alt9"] {
        let c = case(name, 3);
        let st = Structure::new(c.f.sylow());
        assert!(st.maximal_class && st.n == 4);
        assert!(!c.essentials.is_empty());
        for e in &c.essentials {
            assert!(e.class_tag.is_pearl() || e.class_tag == ClassTag::Gamma1, "{name}: {:?}", e);
            if e.class_tag == ClassTag::Gamma1 {
                assert!(c.f.table().is_abelian(&e.set));
            }
        }
        let rep = verify_theorem_d(&c.f, &c.essentials);
        assert!(rep.applicable && rep.pass, "{name}: {}", rep.detail);
    }
}

#[test]
fn theorem_d_mode_matches_brute_mode() {
    for c in cases() {
        let st = Structure::new(c.f.sylow());
        if st.gamma1.is_none() {
            assert!(matches!(essential_subgroups(&c.f, Mode::TheoremD), Err(FusionError::NotMaximalClass)));
            continue;
        }
        let fast = essential_subgroups(&c.f, Mode::TheoremD).unwrap();
        let a: Vec<ElemSet> = c.essentials.iter().map(|e| e.set.clone()).collect();
        let b: Vec<ElemSet> = fast.iter().map(|e| e.set.clone()).collect();
        assert_eq!(a, b, "{} at {}", c.name, c.p);
    }
}

/// `S ∩ G′` by scanning the elements of `S` against the derived subgroup.
fn sylow_meet_derived(c: &Case) -> ElemSet {
    let caps = Caps::default();
    let s = scan::sylow_p(&c.g, c.p, &caps).unwrap();
    let d = c.g.derived_subgroup().unwrap();
    let mut elems = s.elements().to_vec();
    elems.sort();
    let mut out = c.f.table().empty_set();
    for (i, e) in elems.iter().enumerate() {
        if d.has(e) {
            out.insert(i);
        }
    }
    out
}

#[test]
fn focal_subgroup_equals_sylow_meet_derived() {
    for c in cases() {
        let fd = focal_data(&c.f, &c.essentials).unwrap();
        assert_eq!(fd.foc, sylow_meet_derived(c), "{} at {}", c.name, c.p);
        assert!(fd.hyp.is_subset(&fd.foc));
        let t = c.f.table();
        for e in &c.essentials {
            assert!(fd.op_f.is_subset(&e.set));
        }
        assert_eq!(fd.index_s_hyp as usize * TableGroup::order_of(&fd.hyp), t.size());
    }
}

/// `S ∩ O^p(G)`, with `O^p(G)` grown from every `p′`-element of `G`.
fn sylow_meet_op(c: &Case) -> ElemSet {
    let caps = Caps::default();
    let s = scan::sylow_p(&c.g, c.p, &caps).unwrap();
    let mut h = c.g.subgroup(Vec::new()).unwrap();
    for x in c.g.elements(caps.max_scan).unwrap() {
        if c.g.elem_order(&x) % c.p != 0 && !h.has(&x) {
            let mut gens = h.gens().to_vec();
            gens.push(x);
            h = c.g.subgroup(gens).unwrap();
        }
    }
    let mut elems = s.elements().to_vec();
    elems.sort();
    let mut out = c.f.table().empty_set();
    for (i, e) in elems.iter().enumerate() {
        if h.has(e) {
            out.insert(i);
        }
    }
    out
}

#[test]
fn hyperfocal_subgroup_equals_sylow_meet_op() {
    for c in cases() {
        let fd = focal_data(&c.f, &c.essentials).unwrap();
        assert_eq!(fd.hyp, sylow_meet_op(c), "{} at {}", c.name, c.p);
    }
}

#[test]
fn op_of_pgl2_7_is_trivial_and_self_fusion_is_s() {
    let c = case("pgl2_7", 2);
    let fd = focal_data(&c.f, &c.essentials).unwrap();
    assert_eq!(TableGroup::order_of(&fd.op_f), 1);
    let own = case("sylow3_sym9", 3);
    assert!(own.essentials.is_empty());
    let fd = focal_data(&own.f, &own.essentials).unwrap();
    let t = own.f.table();
    assert_eq!(fd.op_f, t.full_set());
    assert_eq!(fd.foc, t.derived(&t.full_set()));
}

#[test]
fn every_realizable_system_passes_the_saturation_oracle() {
    for c in cases() {
        let rep = saturation_oracle(&c.f).unwrap();
        assert!(rep.pass(), "{} at {}: {:?}", c.name, c.p, rep.failures);
    }
}

#[test]
fn receptivity_in_pgl2_7_matches_full_centralization() {
    let c = case("pgl2_7", 2);
    let t = c.f.table();
    let layers = mcf_pgroup::lattice::all_subgroups(t, &t.full_set(), 2, 1000).unwrap();
    let mut refused = 0;
    for h in layers.iter().flatten() {
        if c.f.is_fully_centralized(h) {
            assert!(c.f.is_receptive(h).unwrap());
        } else {
            refused += !c.f.is_receptive(h).unwrap() as usize;
        }
    }
    // A non-central involution is F-conjugate to Z(S); the map Z(S) -> <t>
    // has N_alpha = S and cannot extend.
    let z = t.center_of(&t.full_set());
    let zt = z.ones().find(|&x| x != 0).unwrap() as u32;
    let fused = c.f.f_class(&z).into_iter().find(|r| *r != z).unwrap();
    assert!(!c.f.is_receptive(&fused).unwrap());
    assert!(t.elem_order_of(zt) == 2 && refused > 0);
}

#[test]
fn klein_four_pearl_properties() {
    let c = case("pgl2_7", 2);
    let t = c.f.table();
    let e = &c.essentials[0].set;
    assert!(c.f.is_centric(e) && c.f.is_fully_normalized(e) && c.f.is_fully_automized(e).unwrap());
    assert!(c.f.is_fully_centralized(e));
    let tower = normalizer_tower(t, e);
    let orders: Vec<usize> = tower.iter().map(TableGroup::order_of).collect();
    assert_eq!(orders, vec![4, 8, 16]);
    let full = t.full_set();
    assert_eq!(c.f.aut_f(&t.center_of(&full)).unwrap().order(), 1);
    assert!(c.f.is_centric(&full) && c.f.is_fully_normalized(&full) && c.f.is_receptive(&full).unwrap());
    let z = t.center_of(&full);
    assert!(!c.f.is_centric(&z));
}

#[test]
fn pearl_invariants_hold_on_the_corpus() {
    for c in cases() {
        let t = c.f.table();
        let st = Structure::new(c.f.sylow());
        for e in c.essentials.iter().filter(|e| e.class_tag.is_pearl()) {
            assert!(st.maximal_class, "{}", c.name);
            let ne = TableGroup::order_of(&t.normalizer(&e.set));
            assert_eq!(ne, c.p as usize * TableGroup::order_of(&e.set));
            for r in c.f.f_class(&e.set) {
                assert!(pearl_shape(t, &r, c.p).is_some());
            }
            if st.n >= 4 {
                let g1 = st.gamma1.as_ref().unwrap();
                let cz2 = st.cz2.as_ref().unwrap();
                assert!(!e.set.is_subset(g1) && !e.set.is_subset(cz2));
                let tower = normalizer_tower(t, &e.set);
                assert_eq!(tower.last().unwrap(), &t.full_set());
                assert!(tower.windows(2).all(|w| TableGroup::order_of(&w[1]) == c.p as usize * TableGroup::order_of(&w[0])));
            }
        }
        for e in &c.essentials {
            if st.n >= 4 && c.p > 2 {
                let outside = e.set.ones().any(|x| st.outside_both(x as u32));
                assert_eq!(outside, e.class_tag.is_pearl(), "{}", c.name);
            }
            if (0..t.size() as u32).all(|g| t.conjugate_set(&e.set, g) == e.set) {
                let maximal = TableGroup::order_of(&e.set) * c.p as usize == t.size();
                let small_np = st.n == 4 && e.class_tag.is_pearl() && !t.is_abelian(&e.set);
                assert!(maximal || small_np, "{}", c.name);
            }
        }
    }
}

#[test]
fn pearl_indices_name_a_conjugate_of_h_i_or_b_i() {
    for c in cases() {
        let t = c.f.table();
        let st = Structure::new(c.f.sylow());
        let Some((x, s1)) = pearl_basis(t, &st) else { continue };
        for e in c.essentials.iter().filter(|e| e.class_tag.is_pearl()) {
            let i = e.index.unwrap();
            let g = t.mul(x, t.power(s1, i));
            let base = if e.subgroup.order == (c.p * c.p) as u128 { st.z(1) } else { st.z(2) };
            let h = t.extend(&base, &[g]);
            let conj = (0..t.size() as u32).any(|s| t.conjugate_set(&h, s) == e.set);
            assert!(conj, "{} at {}: index {i}", c.name, c.p);
        }
    }
}

fn generated_from(c: &Case) -> Generated {
    let f = c.f.as_realizable().unwrap();
    let t = f.table();
    let top = f.aut_f(&t.full_set()).unwrap();
    let listed: Vec<(ElemSet, Vec<mcf_autact::Auto>)> =
        c.essentials.iter().map(|e| (e.set.clone(), f.aut_f(&e.set).unwrap().group.gens().to_vec())).collect();
    Generated::new(f.sylow().clone(), top.group.gens(), &listed, &Caps::default()).unwrap()
}

#[test]
fn generated_copy_of_psl2_17_agrees_and_prunes() {
    let c = case("psl2_17", 2);
    let g = generated_from(c);
    assert!(saturation_spot_check(&g).unwrap().pass);
    let fg: FusionSystem = g.clone().into();
    let ess = essential_subgroups(&fg, Mode::Brute).unwrap();
    assert_eq!(ess.len(), 2);
    for (a, b) in ess.iter().zip(&c.essentials) {
        assert_eq!(a.set, b.set);
        assert_eq!(a.out_order, b.out_order);
        assert_eq!(fg.f_class(&a.set), c.f.f_class(&b.set));
    }
    let (one, check) = prune_pearl_class(&g, &ess[0].set).unwrap();
    assert!(check.pass);
    let left = essential_subgroups(&one.clone().into(), Mode::Brute).unwrap();
    assert_eq!(left.len(), 1);
    assert_eq!(left[0].set, ess[1].set);
    let (none, check) = prune_pearl_class(&one, &ess[1].set).unwrap();
    assert!(check.pass);
    assert!(essential_subgroups(&none.into(), Mode::Brute).unwrap().is_empty());
}

#[test]
fn generated_systems_refuse_unlisted_subgroups_and_non_pearls() {
    let c = case("sym9", 3);
    let g = generated_from(c);
    let fg: FusionSystem = g.clone().into();
    let t = fg.table();
    assert!(matches!(fg.aut_f(&t.center_of(&t.full_set())), Err(FusionError::NotClosed)));
    if let Some(e) = c.essentials.iter().find(|e| e.class_tag == ClassTag::Gamma1) {
        assert!(matches!(prune_pearl_class(&g, &e.set), Err(FusionError::NotPearl)));
    }
    assert!(matches!(prune_pearl_class(&g, &t.center_of(&t.full_set())), Err(FusionError::NotListed)));
}

#[test]
fn theorem_d_rejects_a_fabricated_other_essential() {
    let c = case("sym9", 3);
    let mut fake = c.essentials.clone();
    let mut bad = fake[0].clone();
    bad.class_tag = ClassTag::Other;
    fake.push(bad);
    let rep = verify_theorem_d(&c.f, &fake);
    assert!(rep.applicable && !rep.pass && rep.witness.is_some());
}
