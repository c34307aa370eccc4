use mcf_autact::{action_exponents, aut_group_bruteforce, mu, verify_centralizer_congruence, Auto, DeltaElement};
use mcf_groupkernel::io::{parse_group, GroupInput};
use mcf_groupkernel::{Caps, TableGroup};
use mcf_pgroup::pgroup::perm_label;
use mcf_pgroup::profile::is_extraspecial;
use mcf_pgroup::{PGroup, Structure};
use proptest::prelude::*;
use std::sync::OnceLock;

const PC: &[(&str, &str)] = &[
    ("d16", include_str!("../../../corpus/d16.json")),
    ("sd16", include_str!("../../../corpus/sd16.json")),
    ("q16", include_str!("../../../corpus/q16.json")),
    ("c3wrc3", include_str!("../../../corpus/c3wrc3.json")),
    ("mc81_power", include_str!("../../../corpus/mc81_power.json")),
    ("mc81_nonabelian_pair", include_str!("../../../corpus/mc81_nonabelian_pair.json")),
    ("mc81_mixed", include_str!("../../../corpus/mc81_mixed.json")),
    ("sylow3_sym9", include_str!("../../../corpus/sylow3_sym9.json")),
    ("jordan5_3", include_str!("../../../corpus/jordan5_3.json")),
];

fn load(text: &str) -> PGroup {
    let caps = Caps::default();
    match parse_group(text, caps.pc_verify).unwrap() {
        GroupInput::Pc(g) => PGroup::from_pc(&g, &caps).unwrap().0,
        GroupInput::Perm(g) => PGroup::from_group(&g, &caps, perm_label).unwrap().0,
    }
}

struct Case {
    name: &'static str,
    g: PGroup,
    st: Structure,
    auts: Vec<Auto>,
}

fn cases() -> &'static [Case] {
    static CASES: OnceLock<Vec<Case>> = OnceLock::new();
    CASES.get_or_init(|| PC.iter()
        .map(|(name, text)| {
            let g = load(text);
            let st = Structure::new(&g);
            let auts = aut_group_bruteforce(&g, &Caps::default()).unwrap();
            Case { name, g, st, auts }
        })
        .collect())
}

#[test]
fn action_formula_has_no_violations() {
    for c in cases() {
        let t = c.g.table();
        assert!(c.st.gamma1.is_some(), "{} is not of maximal class", c.name);
        let mut checked = 0;
        for f in c.auts.iter().filter(|f| f.order() % c.g.prime() != 0) {
            let ex = action_exponents(&c.st, t, f).unwrap_or_else(|e| panic!("{}: {e}", c.name));
            assert_eq!(ex.measured, ex.predicted);
            checked += 1;
            if !c.st.is_exceptional() && ex.a != 1 {
                let rep = verify_centralizer_congruence(&c.st, t, f).unwrap();
                assert!(rep.violations.is_empty(), "{}: {:?}", c.name, rep);
            }
        }
        assert!(checked >= 1);
    }
}

#[test]
fn p_prime_automorphisms_embed_in_delta() {
    for c in cases() {
        let t = c.g.table();
        for f in c.auts.iter().filter(|f| f.order() % c.g.prime() != 0 && !f.is_identity()) {
            assert_ne!(mu(&c.st, t, f).unwrap(), DeltaElement::one(), "{}: μ not faithful on p′-element", c.name);
        }
    }
}

#[test]
fn faithful_on_top_when_gamma1_large() {
    for c in cases() {
        let t = c.g.table();
        let g1 = c.st.gamma(1);
        if t.is_abelian(&g1) || is_extraspecial(t, &g1, c.g.prime()) {
            continue;
        }
        for f in c.auts.iter().filter(|f| f.order() % c.g.prime() != 0 && !f.is_identity()) {
            assert_ne!(mu(&c.st, t, f).unwrap().r, 1, "{}", c.name);
        }
    }
}

#[test]
fn sylow_of_sym9_has_inverting_involution() {
    let c = cases().iter().find(|c| c.name == "sylow3_sym9").unwrap();
    let t = c.g.table();
    let inv: Vec<&Auto> = c.auts.iter().filter(|f| f.order() == 2).collect();
    let top_inverting = inv.iter().find(|f| mu(&c.st, t, f).unwrap().r == 2).expect("inverting involution");
    let ex = action_exponents(&c.st, t, top_inverting).unwrap();
    let p = 3;
    for (i, e) in ex.measured.iter().enumerate() {
        let mut pred = ex.b;
        for _ in 0..i {
            pred = pred * ex.a % p;
        }
        assert_eq!(*e, pred);
    }
    assert_eq!(TableGroup::order_of(&c.st.gamma(1)), 27);
}

#[test]
fn automorphism_counts() {
    // r ↦ r^k (k odd) and s ↦ s r^i with s r^i of the same order as s:
    // 8 choices of i in D16 and Q16, only the even i in SD16.
    for c in cases() {
        match c.name {
            "d16" | "q16" => assert_eq!(c.auts.len(), 32, "{}", c.name),
            "sd16" => assert_eq!(c.auts.len(), 16),
            _ => {}
        }
        let t = c.g.table();
        for f in c.auts.iter().take(5) {
            assert!(f.is_automorphism(t));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn mu_is_multiplicative(which in 0usize..PC.len(), i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>()) {
        let c = &cases()[which];
        let (g, st, auts) = (&c.g, &c.st, &c.auts);
        let f = &auts[i.index(auts.len())];
        let h = &auts[j.index(auts.len())];
        let t = g.table();
        let p = g.prime();
        let lhs = mu(st, t, &f.then(h)).unwrap();
        let rhs = mu(st, t, f).unwrap().mul(&mu(st, t, h).unwrap(), p);
        prop_assert_eq!(lhs, rhs);
    }
}
