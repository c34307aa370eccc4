use std::sync::OnceLock;

use mcf_autact::Auto;
use mcf_classify::theorem::f_class_tags;
use mcf_classify::{mu1, mu1_image, table21_constellation, theorem_case, FusionSummary, Gamma1Kind, TheoremId};
use mcf_fusion::{essential_subgroups, focal_data, EssentialReport, FusionSystem, Mode, Realizable};
use mcf_groupkernel::{construct, p_valuation, scan, Caps, PermGroup};
use mcf_pgroup::pgroup::perm_label;
use mcf_pgroup::Structure;

struct System {
    g: PermGroup,
    f: FusionSystem,
    essentials: Vec<EssentialReport>,
}

fn build(g: PermGroup, p: u64) -> System {
    let caps = Caps::default();
    let s = scan::sylow_p(&g, p, &caps).unwrap();
    let f: FusionSystem = Realizable::new(&g, &s, &caps, perm_label).unwrap().into();
    let essentials = essential_subgroups(&f, Mode::Brute).unwrap();
    System { g, f, essentials }
}

fn sym9() -> &'static System {
    static S: OnceLock<System> = OnceLock::new();
    S.get_or_init(|| build(construct::sym(9).unwrap(), 3))
}

fn gamma1_local_identity(f: &FusionSystem) -> (Auto, Vec<Auto>) {
    let st = Structure::new(f.sylow());
    let g1 = st.gamma1.unwrap();
    let a = f.aut_f(&g1).unwrap();
    let n = a.local.order() as u32;
    let id = Auto::from_images((0..n).collect());
    let inner = (0..f.table().size() as u32).map(|g| a.local.conj_auto(f.table(), g)).collect();
    (id, inner)
}

#[test]
fn identity_and_inner_automorphisms_map_to_one() {
    let f = &sym9().f;
    let (id, inner) = gamma1_local_identity(f);
    let m = mu1(f, &id).unwrap();
    assert_eq!((m.r, m.s), (1, 1));
    for c in inner.iter().step_by(7) {
        let m = mu1(f, c).unwrap();
        assert_eq!((m.r, m.s), (1, 1));
    }
}

/// `μ` is injective on `p'`-elements of `Aut(S)` for maximal class `S`, so the
/// image has the order of the `p'`-part of `N_G(S)/S C_G(S)`.
#[test]
fn sym9_mu1_image_matches_ambient_normalizer() {
    let sys = sym9();
    let caps = Caps::default();
    let p = 3;
    let s = scan::sylow_p(&sys.g, p, &caps).unwrap();
    let n = scan::normalizer(&sys.g, &s, &caps).unwrap().order();
    let c = scan::centralizer(&sys.g, &s, &caps).unwrap().order();
    let z = Structure::new(sys.f.sylow()).z(1).count_ones(..) as u128;
    let out = n * z / (s.order() * c);
    let p_prime = out / (p as u128).pow(p_valuation(out, p));
    let image = mu1_image(&sys.f).unwrap();
    assert_eq!(image.len() as u128, p_prime);
    assert!(mcf_classify::delta::is_subgroup(p, &image));
    // |γ₁| = 3³ and 3 ≡ p − 2 mod p − 1, with image all of Δ.
    assert_eq!(image, mcf_classify::delta::full(p));
    let c = table21_constellation(&image, 3, p).unwrap();
    let ids: Vec<&str> = c.lines.iter().map(|l| l.id.as_str()).collect();
    assert_eq!(ids, ["II", "III", "III", "IV"]);
}

#[test]
fn sym9_summary_dispatches_to_abelian_case() {
    let sys = sym9();
    let focal = focal_data(&sys.f, &sys.essentials).unwrap();
    let s = FusionSummary::from_system(&sys.f, &sys.essentials, &focal).unwrap();
    assert_eq!(s.gamma1, Gamma1Kind::Abelian);
    assert!(!s.exceptional);
    assert_eq!((s.p, s.n), (3, 4));
    let facts = s.gamma1_facts.as_ref().unwrap();
    assert_eq!((facts.log_order, facts.omega1_log, facts.elementary), (3, 3, true));
    let r = theorem_case(&s).unwrap();
    assert_eq!(r.theorem, TheoremId::Abelian);
    assert_eq!(r.case_path, "(iii)");
    assert!(r.all_decided_hold(), "{r:?}");
    assert_eq!(theorem_case(&s).unwrap(), r);
}

#[test]
fn f_classes_merge_s_classes() {
    let sys = sym9();
    let tags = f_class_tags(&sys.f, &sys.essentials);
    assert!(tags.len() <= sys.essentials.len());
    assert!(!tags.is_empty());
}

#[test]
fn dihedral_sixteen_dispatches_to_two() {
    let sys = build(construct::pgl2(7).unwrap(), 2);
    let focal = focal_data(&sys.f, &sys.essentials).unwrap();
    let s = FusionSummary::from_system(&sys.f, &sys.essentials, &focal).unwrap();
    let r = theorem_case(&s).unwrap();
    assert_eq!(r.theorem, TheoremId::Two);
    assert!(r.all_decided_hold());
}
