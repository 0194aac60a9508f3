//! The Kleisli category of free algebras.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::fincat::category::{CategoryData, FinCat, MorId, MorphismData, ObjId};
use crate::fincat::functor::FinFunctor;
use crate::fincat::monad::Monad;

/// The Kleisli category: objects of the base, `hom(a, b) = C(a, T(b))`,
/// composition `g ⊙ f = μ ∘ T(g) ∘ f`, identities the unit components.
#[derive(Debug, Clone)]
pub struct KleisliCategory {
    pub cat: Arc<FinCat>,
    /// Underlying base morphism `a → T(b)` of each Kleisli morphism
    /// (index-aligned with `cat`).
    pub underlying: Vec<MorId>,
    /// The identity-on-objects functor `C → Kl`, sending `f` to `η ∘ f`.
    pub embed: FinFunctor,
}

impl KleisliCategory {
    /// The canonical 2-cell `κ : embed∘T ⇒ embed`, whose component at `c`
    /// is the Kleisli morphism `T(c) ⇝ c` carried by `id_{T(c)}`.
    pub fn kappa(&self, monad: &Monad, c: ObjId) -> MorId {
        let base = monad.cat();
        let tc = monad.t().apply_obj(c);
        let name = kleisli_mor_name(base, tc, c, base.identity_of(tc));
        self.cat.mor_id(&name).expect("kappa components exist by construction")
    }
}

fn kleisli_mor_name(base: &Arc<FinCat>, a: ObjId, b: ObjId, f: MorId) -> String {
    format!("kl({};{};{})", base.object_name(a), base.object_name(b), base.morphism(f).id)
}

/// Builds the Kleisli category and re-validates the resulting table.
pub fn kleisli_category(monad: &Monad) -> KleisliCategory {
    let c = monad.cat();
    let t = monad.t();

    // Morphisms a ⇝ b are base morphisms a → T(b).
    let mut morphisms: Vec<(String, (ObjId, ObjId, MorId))> = Vec::new();
    for a in 0..c.n_objects() {
        for b in 0..c.n_objects() {
            for f in c.hom(a, t.apply_obj(b)) {
                morphisms.push((kleisli_mor_name(c, a, b, f), (a, b, f)));
            }
        }
    }
    morphisms.sort_by(|x, y| x.0.cmp(&y.0));

    let identities: BTreeMap<String, String> = (0..c.n_objects())
        .map(|a| {
            (
                c.object_name(a).to_string(),
                kleisli_mor_name(c, a, a, monad.eta().component(a)),
            )
        })
        .collect();

    // g ⊙ f = μ_b2 ∘ T(g) ∘ f for f : a ⇝ b and g : b ⇝ b2.
    let mut compose = Vec::new();
    for (gname, (b_g, b2, g)) in &morphisms {
        for (fname, (a, b_f, f)) in &morphisms {
            if b_f != b_g {
                continue;
            }
            let tg = t.apply_mor(*g);
            let step = c.compose(tg, *f).expect("shapes line up");
            let composite = c.compose(monad.mu().component(*b2), step).expect("shapes line up");
            compose.push((gname.clone(), fname.clone(), kleisli_mor_name(c, *a, *b2, composite)));
        }
    }

    let data = CategoryData {
        objects: c.objects().to_vec(),
        morphisms: morphisms
            .iter()
            .map(|(name, (a, b, _))| MorphismData {
                id: name.clone(),
                src: c.object_name(*a).to_string(),
                tgt: c.object_name(*b).to_string(),
            })
            .collect(),
        identities,
        compose,
    };
    // Associativity and unit laws of the table are re-checked here.
    let cat = FinCat::from_data(&data).expect("Kleisli composition is a category");

    let underlying: Vec<MorId> = morphisms.iter().map(|(_, (_, _, f))| *f).collect();
    debug_assert!((0..cat.n_morphisms()).all(|m| cat.morphism(m).id == morphisms[m].0));

    // The embedding sends f : a → b to η_b ∘ f.
    let embed_mor: Vec<MorId> = c
        .morphisms()
        .iter()
        .enumerate()
        .map(|(f, rec)| {
            let lifted = c
                .compose(monad.eta().component(rec.tgt), f)
                .expect("unit components post-compose");
            cat.mor_id(&kleisli_mor_name(c, rec.src, rec.tgt, lifted))
                .expect("lifted morphism exists")
        })
        .collect();
    let embed_obj: Vec<ObjId> = (0..c.n_objects())
        .map(|o| cat.obj_id(c.object_name(o)).expect("same object names"))
        .collect();
    let embed = FinFunctor::new(Arc::clone(c), Arc::clone(&cat), embed_obj, embed_mor)
        .expect("the Kleisli embedding is a functor");

    KleisliCategory { cat, underlying, embed }
}
