//! `μ₁`: automorphisms of `γ₁(S)` normalizing `Aut_S(γ₁(S))`, pushed into `Δ`
//! through their extensions to `S`.

use mcf_autact::{mu, Auto, DeltaElement};
use mcf_fusion::FusionSystem;
use mcf_pgroup::Structure;

use crate::delta::DeltaSet;
use crate::error::{ClassifyError, Result};

/// `Aut_F(S)` as maps on `S`-indices.
fn aut_f_s(f: &FusionSystem) -> Result<Vec<Auto>> {
    let full = f.table().full_set();
    let a = f.aut_f(&full)?;
    let n = f.table().size() as u32;
    Ok(a.group
        .elements()
        .iter()
        .map(|b| Auto::from_images((0..n).map(|x| a.local.apply(b, x)).collect()))
        .collect())
}

fn gamma1(f: &FusionSystem) -> Result<(Structure, mcf_groupkernel::ElemSet)> {
    let st = Structure::new(f.sylow());
    let g1 = st.gamma1.clone().ok_or(mcf_fusion::FusionError::NotMaximalClass)?;
    Ok((st, g1))
}

/// `α μ₁` for `α` in the local numbering of `Aut_F(γ₁(S))`.
///
/// Every extension found is checked to give the same value.
pub fn mu1(f: &FusionSystem, alpha: &Auto) -> Result<DeltaElement> {
    let (st, g1) = gamma1(f)?;
    let a = f.aut_f(&g1)?;
    if !a.group.contains(alpha) {
        return Err(ClassifyError::Precondition("automorphism is not in Aut_F(γ₁(S))".into()));
    }
    let aut_s: Vec<&Auto> = a.aut_s.iter().map(|&i| a.group.elem(i)).collect();
    let inv = alpha.inverse();
    if !aut_s.iter().all(|s| aut_s.contains(&&inv.then(s).then(alpha))) {
        return Err(ClassifyError::NotInNormalizer);
    }
    let mut value = None;
    for beta in aut_f_s(f)? {
        if a.local.auto_of(|x| beta.apply(x)).as_ref() != Some(alpha) {
            continue;
        }
        let m = mu(&st, f.table(), &beta)?;
        match value {
            None => value = Some(m),
            Some(v) if v != m => return Err(ClassifyError::IllDefined),
            _ => {}
        }
    }
    value.ok_or(ClassifyError::NoExtension)
}

/// `(N_{Aut_F(γ₁(S))}(Aut_S(γ₁(S))))μ₁`.
pub fn mu1_image(f: &FusionSystem) -> Result<DeltaSet> {
    let (_, g1) = gamma1(f)?;
    let a = f.aut_f(&g1)?;
    let aut_s: Vec<&Auto> = a.aut_s.iter().map(|&i| a.group.elem(i)).collect();
    let mut image = DeltaSet::new();
    for alpha in a.group.elements() {
        let inv = alpha.inverse();
        if aut_s.iter().all(|s| aut_s.contains(&&inv.then(s).then(alpha))) {
            let m = mu1(f, alpha)?;
            image.insert((m.r, m.s));
        }
    }
    Ok(image)
}
