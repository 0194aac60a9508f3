//! The Eilenberg-Moore category of algebras.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::fincat::category::{CategoryData, FinCat, MorId, MorphismData, ObjId};
use crate::fincat::functor::FinFunctor;
use crate::fincat::monad::Monad;

/// An algebra `(c, α : T(c) → c)` satisfying `α∘η_c = 1` and
/// `α∘T(α) = α∘μ_c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Algebra {
    pub carrier: ObjId,
    pub action: MorId,
}

/// The category of algebras, its forgetful functor, and the underlying
/// data behind each object and morphism (index-aligned with the category).
#[derive(Debug, Clone)]
pub struct EmCategory {
    pub cat: Arc<FinCat>,
    pub algebras: Vec<Algebra>,
    /// Underlying base-category morphism of each algebra morphism.
    pub underlying: Vec<MorId>,
    pub forgetful: FinFunctor,
}

/// Enumerates all algebras and algebra morphisms of the monad.
pub fn em_category(monad: &Monad) -> EmCategory {
    let c = monad.cat();
    let t = monad.t();

    let mut algebras: Vec<(String, Algebra)> = Vec::new();
    for carrier in 0..c.n_objects() {
        for action in c.hom(t.apply_obj(carrier), carrier) {
            let unit_ok =
                c.compose(action, monad.eta().component(carrier)) == Some(c.identity_of(carrier));
            let assoc_left = c.compose(action, t.apply_mor(action));
            let assoc_right = c.compose(action, monad.mu().component(carrier));
            if unit_ok && assoc_left == assoc_right && assoc_left.is_some() {
                let name = format!(
                    "alg({};{})",
                    c.object_name(carrier),
                    c.morphism(action).id
                );
                algebras.push((name, Algebra { carrier, action }));
            }
        }
    }
    algebras.sort_by(|a, b| a.0.cmp(&b.0));

    // Algebra morphisms: h with h∘α = α'∘T(h).
    let mut morphisms: Vec<(String, (usize, usize, MorId))> = Vec::new();
    for (i, (_, a)) in algebras.iter().enumerate() {
        for (j, (_, b)) in algebras.iter().enumerate() {
            for h in c.hom(a.carrier, b.carrier) {
                if c.compose(h, a.action) == c.compose(b.action, t.apply_mor(h)) {
                    morphisms.push((format!("hom({i:03};{j:03};{})", c.morphism(h).id), (i, j, h)));
                }
            }
        }
    }
    morphisms.sort_by(|a, b| a.0.cmp(&b.0));

    let mut identities = BTreeMap::new();
    for (i, (name, a)) in algebras.iter().enumerate() {
        let id_name = format!("hom({i:03};{i:03};{})", c.morphism(c.identity_of(a.carrier)).id);
        identities.insert(name.clone(), id_name);
    }

    let mut compose = Vec::new();
    for (gname, (i2, j2, g)) in &morphisms {
        for (fname, (i1, j1, f)) in &morphisms {
            if j1 != i2 {
                continue;
            }
            let gf = c.compose(*g, *f).expect("underlying morphisms compose");
            compose.push((
                gname.clone(),
                fname.clone(),
                format!("hom({i1:03};{j2:03};{})", c.morphism(gf).id),
            ));
        }
    }

    let data = CategoryData {
        objects: algebras.iter().map(|(n, _)| n.clone()).collect(),
        morphisms: morphisms
            .iter()
            .map(|(name, (i, j, _))| MorphismData {
                id: name.clone(),
                src: algebras[*i].0.clone(),
                tgt: algebras[*j].0.clone(),
            })
            .collect(),
        identities,
        compose,
    };
    let cat = FinCat::from_data(&data).expect("algebra morphisms form a category");

    // Sorted construction keeps builder order equal to id order.
    let algebra_list: Vec<Algebra> = algebras.iter().map(|(_, a)| *a).collect();
    let underlying: Vec<MorId> = morphisms.iter().map(|(_, (_, _, h))| *h).collect();
    debug_assert!((0..cat.n_objects()).all(|o| cat.object_name(o) == algebras[o].0));
    debug_assert!((0..cat.n_morphisms()).all(|m| cat.morphism(m).id == morphisms[m].0));

    let forgetful = FinFunctor::new(
        Arc::clone(&cat),
        Arc::clone(c),
        algebra_list.iter().map(|a| a.carrier).collect(),
        underlying.clone(),
    )
    .expect("forgetting the action is a functor");

    EmCategory { cat, algebras: algebra_list, underlying, forgetful }
}
