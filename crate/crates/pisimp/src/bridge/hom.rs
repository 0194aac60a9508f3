//! Functor categories, materialized as validated composition tables.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::fincat::category::{CategoryData, FinCat, MorphismData};
use crate::fincat::enumerate::{enumerate_functors, enumerate_nats, Budget, SearchError};
use crate::fincat::functor::FinFunctor;
use crate::fincat::nat::NatTrans;

/// A functor category `Cat(X, Y)` together with the functors and natural
/// transformations behind its object and morphism ids (index-aligned).
#[derive(Debug, Clone)]
pub struct HomCategory {
    pub cat: Arc<FinCat>,
    pub objects: Vec<FinFunctor>,
    pub morphisms: Vec<NatTrans>,
}

impl HomCategory {
    /// Index of a functor among the objects.
    pub fn object_index(&self, f: &FinFunctor) -> Option<usize> {
        self.objects.iter().position(|g| g == f)
    }

    /// Index of a natural transformation among the morphisms.
    pub fn morphism_index(&self, nat: &NatTrans) -> Option<usize> {
        self.morphisms.iter().position(|m| m == nat)
    }
}

/// Builds `Cat(X, Y)`: objects are all functors, morphisms all natural
/// transformations, composition is vertical. The resulting table passes
/// the full category validation.
pub fn hom_category(
    x: &Arc<FinCat>,
    y: &Arc<FinCat>,
    budget: Budget,
) -> Result<HomCategory, SearchError> {
    let functors = enumerate_functors(x, y, budget)?;
    assert!(functors.len() < 10_000, "functor category too large to name");
    let obj_name = |i: usize| format!("F{i:04}");

    let mut morphisms: Vec<NatTrans> = Vec::new();
    let mut mor_endpoints: Vec<(usize, usize)> = Vec::new();
    for (i, f) in functors.iter().enumerate() {
        for (j, g) in functors.iter().enumerate() {
            for nat in enumerate_nats(f, g, budget)? {
                morphisms.push(nat);
                mor_endpoints.push((i, j));
            }
        }
    }
    assert!(morphisms.len() < 100_000, "hom category too large to name");
    let mor_name = |k: usize| format!("n{k:05}");

    // Index by (source, target, components) for composite lookup.
    let mut index: BTreeMap<(usize, usize, Vec<usize>), usize> = BTreeMap::new();
    for (k, nat) in morphisms.iter().enumerate() {
        index.insert((mor_endpoints[k].0, mor_endpoints[k].1, nat.components().to_vec()), k);
    }

    let mut identities = BTreeMap::new();
    for (i, f) in functors.iter().enumerate() {
        let id = NatTrans::identity(f);
        let k = index[&(i, i, id.components().to_vec())];
        identities.insert(obj_name(i), mor_name(k));
    }

    let mut compose = Vec::new();
    for (k2, outer) in morphisms.iter().enumerate() {
        for (k1, inner) in morphisms.iter().enumerate() {
            if mor_endpoints[k1].1 != mor_endpoints[k2].0 {
                continue;
            }
            let composite = NatTrans::vertical(outer, inner).expect("endpoints line up");
            let target = index[&(
                mor_endpoints[k1].0,
                mor_endpoints[k2].1,
                composite.components().to_vec(),
            )];
            compose.push((mor_name(k2), mor_name(k1), mor_name(target)));
        }
    }

    let data = CategoryData {
        objects: (0..functors.len()).map(obj_name).collect(),
        morphisms: (0..morphisms.len())
            .map(|k| MorphismData {
                id: mor_name(k),
                src: obj_name(mor_endpoints[k].0),
                tgt: obj_name(mor_endpoints[k].1),
            })
            .collect(),
        identities,
        compose,
    };
    let cat = FinCat::from_data(&data).expect("vertical composition is a category");
    Ok(HomCategory { cat, objects: functors, morphisms })
}
