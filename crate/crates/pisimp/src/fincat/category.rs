//! Categories as validated composition tables.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Index of an object in the id-sorted object list.
pub type ObjId = usize;
/// Index of a morphism in the id-sorted morphism list.
pub type MorId = usize;

/// A morphism record: its id and resolved endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorRec {
    pub id: String,
    pub src: ObjId,
    pub tgt: ObjId,
}

/// Raw morphism entry of the JSON fixture schema.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismData {
    pub id: String,
    pub src: String,
    pub tgt: String,
}

/// Raw category data, the JSON fixture schema.
///
/// `compose` lists triples `[g, f, gf]` meaning `g ∘ f = gf` (`f` applied
/// first). Pairs involving an identity may be omitted; they are filled in
/// automatically and checked for consistency when present.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategoryData {
    pub objects: Vec<String>,
    pub morphisms: Vec<MorphismData>,
    pub identities: BTreeMap<String, String>,
    pub compose: Vec<(String, String, String)>,
}

/// A single validation failure, with enough location to act on.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatIssue {
    #[error("duplicate object id `{0}`")]
    DuplicateObject(String),
    #[error("duplicate morphism id `{0}`")]
    DuplicateMorphism(String),
    #[error("unknown object `{object}` referenced by {site}")]
    UnknownObject { object: String, site: String },
    #[error("unknown morphism `{morphism}` referenced by {site}")]
    UnknownMorphism { morphism: String, site: String },
    #[error("object `{0}` has no identity assignment")]
    MissingIdentity(String),
    #[error("identity of `{object}` is `{morphism}`, which is not an endomorphism of it")]
    BadIdentity { object: String, morphism: String },
    #[error("compose entry ({g}, {f}) is not composable: cod(f) ≠ dom(g)")]
    NotComposable { g: String, f: String },
    #[error("composite of ({g}, {f}) is `{gf}`, whose endpoints do not match")]
    WrongCompositeShape { g: String, f: String, gf: String },
    #[error("conflicting composites for ({g}, {f}): `{first}` vs `{second}`")]
    ConflictingComposite { g: String, f: String, first: String, second: String },
    #[error("missing composite for the composable pair ({g}, {f})")]
    MissingComposite { g: String, f: String },
    #[error("identity law fails: {id} ∘ {f} ≠ {f}")]
    LeftIdentityBroken { id: String, f: String },
    #[error("identity law fails: {f} ∘ {id} ≠ {f}")]
    RightIdentityBroken { f: String, id: String },
    #[error("associativity fails on ({h}, {g}, {f}): h∘(g∘f) = {left} but (h∘g)∘f = {right}")]
    NotAssociative { h: String, g: String, f: String, left: String, right: String },
}

/// A finite category: objects, morphisms with endpoints, identities, and a
/// total composition table on composable pairs. Checked associative and
/// unital at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinCat {
    objects: Vec<String>,
    morphisms: Vec<MorRec>,
    identity: Vec<MorId>,
    /// `comp[g * n_mor + f]` is the composite `g ∘ f`, when composable.
    comp: Vec<Option<MorId>>,
}

impl FinCat {
    /// Builds and fully validates a category from raw data. All detected
    /// violations are returned together.
    pub fn from_data(data: &CategoryData) -> Result<Arc<FinCat>, Vec<CatIssue>> {
        let mut issues = Vec::new();

        let mut objects: Vec<String> = data.objects.clone();
        objects.sort();
        for w in objects.windows(2) {
            if w[0] == w[1] {
                issues.push(CatIssue::DuplicateObject(w[0].clone()));
            }
        }

        let mut mor_ids: Vec<String> = data.morphisms.iter().map(|m| m.id.clone()).collect();
        mor_ids.sort();
        for w in mor_ids.windows(2) {
            if w[0] == w[1] {
                issues.push(CatIssue::DuplicateMorphism(w[0].clone()));
            }
        }
        if !issues.is_empty() {
            return Err(issues);
        }

        let obj_index = |name: &str| objects.binary_search_by(|o| o.as_str().cmp(name)).ok();
        let mut morphisms: Vec<MorRec> = Vec::with_capacity(data.morphisms.len());
        let mut sorted_mors: Vec<&MorphismData> = data.morphisms.iter().collect();
        sorted_mors.sort_by(|a, b| a.id.cmp(&b.id));
        for m in &sorted_mors {
            let src = obj_index(&m.src);
            let tgt = obj_index(&m.tgt);
            if src.is_none() {
                issues.push(CatIssue::UnknownObject {
                    object: m.src.clone(),
                    site: format!("morphism `{}`", m.id),
                });
            }
            if tgt.is_none() {
                issues.push(CatIssue::UnknownObject {
                    object: m.tgt.clone(),
                    site: format!("morphism `{}`", m.id),
                });
            }
            if let (Some(src), Some(tgt)) = (src, tgt) {
                morphisms.push(MorRec { id: m.id.clone(), src, tgt });
            }
        }
        if !issues.is_empty() {
            return Err(issues);
        }
        let mor_index =
            |name: &str| morphisms.binary_search_by(|m| m.id.as_str().cmp(name)).ok();

        // Identities.
        let mut identity: Vec<Option<MorId>> = vec![None; objects.len()];
        for (obj, mor) in &data.identities {
            let Some(o) = obj_index(obj) else {
                issues.push(CatIssue::UnknownObject {
                    object: obj.clone(),
                    site: "identities".to_string(),
                });
                continue;
            };
            let Some(m) = mor_index(mor) else {
                issues.push(CatIssue::UnknownMorphism {
                    morphism: mor.clone(),
                    site: format!("identity of `{obj}`"),
                });
                continue;
            };
            if morphisms[m].src != o || morphisms[m].tgt != o {
                issues.push(CatIssue::BadIdentity { object: obj.clone(), morphism: mor.clone() });
            } else {
                identity[o] = Some(m);
            }
        }
        for (o, id) in identity.iter().enumerate() {
            if id.is_none() {
                issues.push(CatIssue::MissingIdentity(objects[o].clone()));
            }
        }
        if !issues.is_empty() {
            return Err(issues);
        }
        let identity: Vec<MorId> = identity.into_iter().map(Option::unwrap).collect();

        // Composition table: explicit entries, then identity fill-in.
        let n = morphisms.len();
        let mut comp: Vec<Option<MorId>> = vec![None; n * n];
        let set = |comp: &mut Vec<Option<MorId>>, issues: &mut Vec<CatIssue>, g: MorId, f: MorId, gf: MorId| {
            match comp[g * n + f] {
                None => comp[g * n + f] = Some(gf),
                Some(old) if old == gf => {}
                Some(old) => issues.push(CatIssue::ConflictingComposite {
                    g: morphisms[g].id.clone(),
                    f: morphisms[f].id.clone(),
                    first: morphisms[old].id.clone(),
                    second: morphisms[gf].id.clone(),
                }),
            }
        };
        for (g_name, f_name, gf_name) in &data.compose {
            let (Some(g), Some(f), Some(gf)) = (mor_index(g_name), mor_index(f_name), mor_index(gf_name))
            else {
                for name in [g_name, f_name, gf_name] {
                    if mor_index(name).is_none() {
                        issues.push(CatIssue::UnknownMorphism {
                            morphism: name.clone(),
                            site: format!("compose entry ({g_name}, {f_name}, {gf_name})"),
                        });
                    }
                }
                continue;
            };
            if morphisms[f].tgt != morphisms[g].src {
                issues.push(CatIssue::NotComposable { g: g_name.clone(), f: f_name.clone() });
                continue;
            }
            if morphisms[gf].src != morphisms[f].src || morphisms[gf].tgt != morphisms[g].tgt {
                issues.push(CatIssue::WrongCompositeShape {
                    g: g_name.clone(),
                    f: f_name.clone(),
                    gf: gf_name.clone(),
                });
                continue;
            }
            set(&mut comp, &mut issues, g, f, gf);
        }
        for (m, rec) in morphisms.iter().enumerate() {
            set(&mut comp, &mut issues, identity[rec.tgt], m, m);
            set(&mut comp, &mut issues, m, identity[rec.src], m);
        }
        if !issues.is_empty() {
            return Err(issues);
        }

        // Completeness of composition.
        for g in 0..n {
            for f in 0..n {
                if morphisms[f].tgt == morphisms[g].src && comp[g * n + f].is_none() {
                    issues.push(CatIssue::MissingComposite {
                        g: morphisms[g].id.clone(),
                        f: morphisms[f].id.clone(),
                    });
                }
            }
        }
        if !issues.is_empty() {
            return Err(issues);
        }

        let cat = FinCat { objects, morphisms, identity, comp };
        let law_issues = cat.law_issues();
        if law_issues.is_empty() {
            Ok(Arc::new(cat))
        } else {
            Err(law_issues)
        }
    }

    /// Re-checks unit and associativity laws; empty when the table is a
    /// category. Used both at load and on programmatically built tables.
    pub fn law_issues(&self) -> Vec<CatIssue> {
        let mut issues = Vec::new();
        let n = self.morphisms.len();
        for (m, rec) in self.morphisms.iter().enumerate() {
            if self.comp[self.identity[rec.tgt] * n + m] != Some(m) {
                issues.push(CatIssue::LeftIdentityBroken {
                    id: self.morphisms[self.identity[rec.tgt]].id.clone(),
                    f: rec.id.clone(),
                });
            }
            if self.comp[m * n + self.identity[rec.src]] != Some(m) {
                issues.push(CatIssue::RightIdentityBroken {
                    f: rec.id.clone(),
                    id: self.morphisms[self.identity[rec.src]].id.clone(),
                });
            }
        }
        for h in 0..n {
            for g in 0..n {
                let Some(hg) = self.comp[h * n + g] else { continue };
                for f in 0..n {
                    let Some(gf) = self.comp[g * n + f] else { continue };
                    let left = self.comp[h * n + gf];
                    let right = self.comp[hg * n + f];
                    if left != right {
                        issues.push(CatIssue::NotAssociative {
                            h: self.morphisms[h].id.clone(),
                            g: self.morphisms[g].id.clone(),
                            f: self.morphisms[f].id.clone(),
                            left: left.map_or("undefined".into(), |m| self.morphisms[m].id.clone()),
                            right: right.map_or("undefined".into(), |m| self.morphisms[m].id.clone()),
                        });
                    }
                }
            }
        }
        issues
    }

    pub fn n_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn n_morphisms(&self) -> usize {
        self.morphisms.len()
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn object_name(&self, o: ObjId) -> &str {
        &self.objects[o]
    }

    pub fn obj_id(&self, name: &str) -> Option<ObjId> {
        self.objects.binary_search_by(|x| x.as_str().cmp(name)).ok()
    }

    pub fn morphism(&self, m: MorId) -> &MorRec {
        &self.morphisms[m]
    }

    pub fn morphisms(&self) -> &[MorRec] {
        &self.morphisms
    }

    pub fn mor_id(&self, name: &str) -> Option<MorId> {
        self.morphisms.binary_search_by(|x| x.id.as_str().cmp(name)).ok()
    }

    pub fn identity_of(&self, o: ObjId) -> MorId {
        self.identity[o]
    }

    pub fn is_identity(&self, m: MorId) -> bool {
        self.identity[self.morphisms[m].src] == m
    }

    /// `g ∘ f` when composable.
    pub fn compose(&self, g: MorId, f: MorId) -> Option<MorId> {
        self.comp[g * self.morphisms.len() + f]
    }

    /// Morphism ids `a → b`, ascending.
    pub fn hom(&self, a: ObjId, b: ObjId) -> Vec<MorId> {
        (0..self.morphisms.len())
            .filter(|&m| self.morphisms[m].src == a && self.morphisms[m].tgt == b)
            .collect()
    }

    /// The opposite category: endpoints swapped, composition transposed.
    /// Object and morphism ids (hence indices) are unchanged.
    pub fn opposite(&self) -> Arc<FinCat> {
        let n = self.morphisms.len();
        let morphisms = self
            .morphisms
            .iter()
            .map(|m| MorRec { id: m.id.clone(), src: m.tgt, tgt: m.src })
            .collect();
        let mut comp = vec![None; n * n];
        for g in 0..n {
            for f in 0..n {
                comp[g * n + f] = self.comp[f * n + g];
            }
        }
        Arc::new(FinCat {
            objects: self.objects.clone(),
            morphisms,
            identity: self.identity.clone(),
            comp,
        })
    }

    /// Serializes back to raw data. Identity-involving compose entries are
    /// omitted; they regenerate on load.
    pub fn to_data(&self) -> CategoryData {
        let n = self.morphisms.len();
        let mut compose = Vec::new();
        for g in 0..n {
            for f in 0..n {
                if let Some(gf) = self.comp[g * n + f] {
                    if !self.is_identity(g) && !self.is_identity(f) {
                        compose.push((
                            self.morphisms[g].id.clone(),
                            self.morphisms[f].id.clone(),
                            self.morphisms[gf].id.clone(),
                        ));
                    }
                }
            }
        }
        CategoryData {
            objects: self.objects.clone(),
            morphisms: self
                .morphisms
                .iter()
                .map(|m| MorphismData {
                    id: m.id.clone(),
                    src: self.objects[m.src].clone(),
                    tgt: self.objects[m.tgt].clone(),
                })
                .collect(),
            identities: self
                .identity
                .iter()
                .enumerate()
                .map(|(o, &m)| (self.objects[o].clone(), self.morphisms[m].id.clone()))
                .collect(),
            compose,
        }
    }
}

impl fmt::Display for FinCat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "category with {} objects, {} morphisms", self.objects.len(), self.morphisms.len())
    }
}
