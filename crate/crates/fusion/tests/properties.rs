use std::collections::HashSet;
use std::sync::OnceLock;

use mcf_fusion::{FusionSystem, Realizable};
use mcf_groupkernel::{construct, scan, Caps, ElemSet, FiniteGroup, Perm, PermGroup, Subgroup, TableGroup};
use mcf_pgroup::pgroup::perm_label;
use proptest::prelude::*;

struct Case {
    g: PermGroup,
    s: Vec<Perm>,
    f: FusionSystem,
}

fn build(g: PermGroup, p: u64) -> Case {
    let caps = Caps::default();
    let s = scan::sylow_p(&g, p, &caps).unwrap();
    let f: FusionSystem = Realizable::new(&g, &s, &caps, perm_label).unwrap().into();
    let mut elems = s.elements().to_vec();
    elems.sort();
    Case { g, s: elems, f }
}

fn cases() -> &'static [Case] {
    static C: OnceLock<Vec<Case>> = OnceLock::new();
    C.get_or_init(|| {
        vec![
            build(construct::psl3_3().unwrap(), 2),
            build(construct::psl3_3().unwrap(), 3),
            build(construct::alt(9).unwrap(), 3),
            build(construct::pgl2(7).unwrap(), 2),
        ]
    })
}

fn as_perms(c: &Case, set: &ElemSet) -> Subgroup<Perm> {
    let gens: Vec<Perm> = c.f.table().generating_set(set).iter().map(|&i| c.s[i as usize].clone()).collect();
    Subgroup::generate(&c.g, gens, 1 << 20).unwrap()
}

/// `{P^x ⊆ S : x ∈ G}` by scanning the ambient group.
fn ambient_class(c: &Case, h: &Subgroup<Perm>) -> usize {
    let s: HashSet<&Perm> = c.s.iter().collect();
    let mut found: HashSet<Vec<Perm>> = HashSet::new();
    c.g.visit_elements(&mut |x| {
        let img: Vec<Perm> = h.gens().iter().map(|a| c.g.conj(a, x)).collect();
        if img.iter().all(|y| s.contains(y)) {
            let sub = Subgroup::generate(&c.g, img, 1 << 20).unwrap();
            found.insert(sub.elements().to_vec());
        }
        true
    });
    found.len()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn automizer_order_is_normalizer_over_centralizer(which in 0usize..4, a in 0u32..1000, b in 0u32..1000) {
        let c = &cases()[which];
        let t = c.f.table();
        let n = t.size() as u32;
        let set = t.closure(&[a % n, b % n]);
        let h = as_perms(c, &set);
        let caps = Caps::default();
        let ng = scan::normalizer(&c.g, &h, &caps).unwrap().order();
        let cg = scan::centralizer(&c.g, &h, &caps).unwrap().order();
        prop_assert_eq!(c.f.aut_f(&set).unwrap().order() as u128, ng / cg);
    }

    #[test]
    fn f_classes_match_ambient_conjugates_and_partition(which in 0usize..4, a in 0u32..1000, b in 0u32..1000) {
        let c = &cases()[which];
        let t = c.f.table();
        let n = t.size() as u32;
        let set = t.closure(&[a % n, b % n]);
        let class = c.f.f_class(&set);
        prop_assert!(class.contains(&set));
        prop_assert_eq!(class.len(), ambient_class(c, &as_perms(c, &set)));
        for r in &class {
            prop_assert_eq!(&c.f.f_class(r), &class);
            prop_assert_eq!(TableGroup::order_of(r), TableGroup::order_of(&set));
        }
    }
}
